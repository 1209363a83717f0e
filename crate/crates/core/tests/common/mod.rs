#![allow(dead_code)]

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use tritile::exact::{ratio, QuadNum};
use tritile::generators::{self, CATALOG_NAMES};
use tritile::geometry::{locate, Location};
use tritile::{Point, Tiling, Triangle};

pub fn pt(x: i64, y: i64) -> Point {
    Point::new(x, y)
}

pub fn tri(c: [(i64, i64); 3]) -> Triangle {
    Triangle::new(pt(c[0].0, c[0].1), pt(c[1].0, c[1].1), pt(c[2].0, c[2].1))
}

/// A scalene, non-right triangle whose squared sides (50, 41, 29) admit no
/// small integer relation.
pub fn generic_triangle() -> Triangle {
    tri([(0, 0), (7, 1), (2, 5)])
}

pub fn triangle_306090() -> Triangle {
    generators::right_306090_three(&ratio(1, 1))
        .unwrap()
        .reference
}

/// The family outputs whose counts are pinned: quadratic n = 1..8,
/// biquadratic (1,2), (2,3), (5,7), hexagonal k = 0..4 and pythagorean (3,4,5).
pub fn family_tilings() -> Vec<(String, Tiling)> {
    let mut out = Vec::new();
    for n in 1..=8 {
        out.push((
            format!("quadratic({n})"),
            generators::quadratic(&generic_triangle(), n).unwrap(),
        ));
    }
    for (m, n) in [(1, 2), (2, 3), (5, 7)] {
        out.push((
            format!("biquadratic({m},{n})"),
            generators::biquadratic(m, n).unwrap(),
        ));
    }
    for k in 0..=4 {
        out.push((format!("hexagonal({k})"), generators::hexagonal(k).unwrap()));
    }
    out.push((
        "pythagorean(3,4,5)".into(),
        generators::pythagorean(3, 4, 5).unwrap(),
    ));
    out
}

pub fn catalog_tilings() -> Vec<(String, Tiling)> {
    CATALOG_NAMES
        .iter()
        .map(|n| (n.to_string(), generators::catalog(n).unwrap().tiling))
        .collect()
}

/// Further generator outputs: the equilateral splits, the 30-60-90 3-tiling
/// and compositions built from them.
pub fn other_generated() -> Vec<(String, Tiling)> {
    let one = ratio(1, 1);
    let three = generators::right_306090_three(&one).unwrap();
    let eq = generators::equilateral_six(&ratio(2, 1)).unwrap();
    let halves = generators::bisect_isosceles(&eq.reference).unwrap();
    let q2 = generators::quadratic(&triangle_306090(), 2).unwrap();
    vec![
        ("equilateral_six".into(), eq.clone()),
        ("right_306090_three".into(), three.clone()),
        ("bisect(equilateral)".into(), halves.clone()),
        (
            "triple_square(2)".into(),
            generators::compose(&q2, &three).unwrap(),
        ),
        (
            "bisect+quadratic(3)".into(),
            generators::compose(
                &halves,
                &generators::quadratic(&triangle_306090(), 3).unwrap(),
            )
            .unwrap(),
        ),
        (
            "biquadratic∘biquadratic".into(),
            generators::compose(
                &generators::biquadratic(1, 2).unwrap(),
                &generators::biquadratic(1, 2).unwrap(),
            )
            .unwrap(),
        ),
        (
            "quadratic(right isosceles, 4)".into(),
            generators::quadratic(&tri([(0, 0), (4, 0), (0, 4)]), 4).unwrap(),
        ),
    ]
}

/// A random point strictly inside `t`, from positive integer barycentric weights.
pub fn random_point_in(t: &Triangle, rng: &mut ChaCha8Rng) -> Point {
    let w: [i64; 3] = [0; 3].map(|_| rng.gen_range(1..=1_000_000));
    let total = QuadNum::from_int(w.iter().sum());
    let mut x = QuadNum::zero();
    let mut y = QuadNum::zero();
    for (p, wi) in t.v.iter().zip(w) {
        x = x + &p.x * &QuadNum::from_int(wi);
        y = y + &p.y * &QuadNum::from_int(wi);
    }
    Point {
        x: &x / &total,
        y: &y / &total,
    }
}

/// Float bounding boxes padded so that a point outside one is certainly
/// outside the tile; the exact test decides everything else.
pub struct TileBoxes(Vec<[f64; 4]>);

const PAD: f64 = 1e-6;

impl TileBoxes {
    pub fn new(t: &Tiling) -> Self {
        TileBoxes(
            t.tiles
                .iter()
                .map(|tile| {
                    let xs = tile.v.clone().map(|p| p.x.to_f64());
                    let ys = tile.v.clone().map(|p| p.y.to_f64());
                    let lo = |v: [f64; 3]| v.into_iter().fold(f64::INFINITY, f64::min) - PAD;
                    let hi = |v: [f64; 3]| v.into_iter().fold(f64::NEG_INFINITY, f64::max) + PAD;
                    [lo(xs), hi(xs), lo(ys), hi(ys)]
                })
                .collect(),
        )
    }

    /// Number of tiles whose closed region contains `p`.
    pub fn closures_containing(&self, t: &Tiling, p: &Point) -> usize {
        let (x, y) = (p.x.to_f64(), p.y.to_f64());
        t.tiles
            .iter()
            .zip(&self.0)
            .filter(|(_, b)| b[0] <= x && x <= b[1] && b[2] <= y && y <= b[3])
            .filter(|(tile, _)| locate(p, tile) != Location::Outside)
            .count()
    }
}

//! Constructors for explicit exact tilings.
//!
//! Every family places `A` at the origin with `AB` or `AC` along the positive
//! x-axis, so output files are reproducible.

use std::collections::HashMap;

use num_traits::Signed;
use thiserror::Error;

use crate::exact::{common_radicand, ExactError, QuadNum, Rational};
use crate::geometry::{shape_of, Point, Triangle, Vector};
use crate::tiling::{Tiling, TilingError};

#[derive(Debug, Error)]
pub enum GenError {
    #[error("{0}")]
    Domain(String),
    #[error("unknown catalog entry {0:?}")]
    UnknownEntry(String),
    #[error(transparent)]
    Tiling(#[from] TilingError),
    #[error(transparent)]
    Exact(#[from] ExactError),
}

pub type Result<T> = std::result::Result<T, GenError>;

fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(GenError::Domain(msg.into()))
}

fn sqrt3() -> QuadNum {
    QuadNum::sqrt_int(3).expect("3 is positive")
}

/// `a + b·√3`.
fn s3(a: Rational, b: Rational) -> QuadNum {
    QuadNum::from_rational(a) + QuadNum::from_rational(b) * sqrt3()
}

fn rat(n: i64) -> Rational {
    crate::exact::rational_from_int(n)
}

fn scale_point(p: &Point, k: &QuadNum) -> Point {
    Point {
        x: &p.x * k,
        y: &p.y * k,
    }
}

fn scale_triangle(t: &Triangle, k: &QuadNum) -> Triangle {
    Triangle {
        v: t.v.clone().map(|p| scale_point(&p, k)),
    }
}

fn scale_tiling(t: &Tiling, k: &QuadNum) -> Tiling {
    Tiling {
        reference: scale_triangle(&t.reference, k),
        tiles: t.tiles.iter().map(|x| scale_triangle(x, k)).collect(),
    }
}

/// Splits `abc` into `n²` similar copies by lines parallel to its sides.
pub fn quadratic(abc: &Triangle, n: u32) -> Result<Tiling> {
    if n == 0 {
        return domain("quadratic tiling needs n >= 1");
    }
    if abc.is_degenerate() {
        return domain("reference triangle is degenerate");
    }
    let [a, b, c] = &abc.v;
    let inv = QuadNum::from_ratio(1, n as i64);
    let u = b.sub(a).scale(&inv);
    let v = c.sub(a).scale(&inv);
    let p = |i: u32, j: u32| -> Point {
        a.add(&u.scale(&QuadNum::from_int(i as i64)))
            .add(&v.scale(&QuadNum::from_int(j as i64)))
    };
    let mut tiles = Vec::with_capacity((n * n) as usize);
    for j in 0..n {
        for i in 0..n - j {
            tiles.push(Triangle::new(p(i, j), p(i + 1, j), p(i, j + 1)));
            if i + j + 2 <= n {
                tiles.push(Triangle::new(p(i + 1, j), p(i + 1, j + 1), p(i, j + 1)));
            }
        }
    }
    Ok(Tiling::new(abc.clone(), tiles)?)
}

/// The `(m² + n²)`-tiling of the right triangle `(0,0), (m², mn), (m² + n², 0)`
/// by right triangles with legs `m` and `n`: the altitude from the right angle
/// splits it into an `m`-quadratic and an `n`-quadratic part.
pub fn biquadratic(m: u32, n: u32) -> Result<Tiling> {
    if m == 0 || n == 0 {
        return domain("biquadratic tiling needs m, n >= 1");
    }
    let (m, n) = (m as i64, n as i64);
    let a = Point::new(0, 0);
    let b = Point::new(m * m, m * n);
    let c = Point::new(m * m + n * n, 0);
    let d = Point::new(m * m, 0);
    let mut tiles = quadratic(&Triangle::new(a.clone(), b.clone(), d.clone()), m as u32)?.tiles;
    tiles.extend(quadratic(&Triangle::new(b.clone(), d, c.clone()), n as u32)?.tiles);
    Ok(Tiling::new(Triangle::new(a, b, c), tiles)?)
}

/// The `3(k+1)²`-tiling of an equilateral triangle of side `(k+1)√3` by
/// isosceles tiles with sides `(1, 1, √3)`: `k(k+1)/2` hexagons of six tiles
/// stacked in rows, plus `k + 1` tiles along each side.
pub fn hexagonal(k: u32) -> Result<Tiling> {
    let k = k as i64;
    // Built at twice the final size so every coordinate is an integer
    // combination of 1 and √3; `h(x, y)` is the point (x√3, y).
    let h = |x: i64, y: i64| Point {
        x: s3(rat(0), rat(x)),
        y: QuadNum::from_int(y),
    };
    let side = 2 * (k + 1);
    let reference = Triangle::new(h(0, 0), h(side, 0), h(k + 1, 3 * (k + 1)));

    let mut tiles = Vec::new();
    for r in 0..k {
        for c in 0..k - r {
            let (cx, cy) = (2 + 2 * c + r, 2 + 3 * r);
            let centre = h(cx, cy);
            let left = h(cx - 1, cy - 1);
            let right = h(cx + 1, cy - 1);
            let top = h(cx, cy + 2);
            tiles.push(Triangle::new(centre.clone(), left.clone(), right.clone()));
            tiles.push(Triangle::new(h(cx, cy - 2), left.clone(), right.clone()));
            tiles.push(Triangle::new(centre.clone(), right.clone(), top.clone()));
            tiles.push(Triangle::new(h(cx + 1, cy + 1), right, top.clone()));
            tiles.push(Triangle::new(centre, top.clone(), left.clone()));
            tiles.push(Triangle::new(h(cx - 1, cy + 1), top, left));
        }
    }

    let bottom: Vec<Triangle> = (0..=k)
        .map(|j| Triangle::new(h(2 * j, 0), h(2 * j + 1, 1), h(2 * j + 2, 0)))
        .collect();
    let centre = h(k + 1, k + 1);
    let half = QuadNum::from_ratio(-1, 2);
    let sin = s3(rat(0), Rational::new(1.into(), 2.into()));
    let rotate = |p: &Point, cos: &QuadNum, sin: &QuadNum| {
        let d = p.sub(&centre);
        centre.add(&Vector {
            x: &d.x * cos - &d.y * sin,
            y: &d.x * sin + &d.y * cos,
        })
    };
    for t in &bottom {
        tiles.push(t.clone());
        for s in [sin.clone(), -&sin] {
            tiles.push(Triangle {
                v: t.v.clone().map(|p| rotate(&p, &half, &s)),
            });
        }
    }

    let t = Tiling::new(reference, tiles)?;
    Ok(scale_tiling(&t, &QuadNum::from_ratio(1, 2)))
}

/// Six 30-60-90 tiles meeting at the centroid of an equilateral triangle.
pub fn equilateral_six(side: &Rational) -> Result<Tiling> {
    if !side.is_positive() {
        return domain("side must be positive");
    }
    let s = QuadNum::from_rational(side.clone());
    let a = Point::new(0, 0);
    let b = Point {
        x: s.clone(),
        y: QuadNum::zero(),
    };
    let c = Point {
        x: &s * &QuadNum::from_ratio(1, 2),
        y: &s * &s3(rat(0), Rational::new(1.into(), 2.into())),
    };
    let g = Triangle::new(a.clone(), b.clone(), c.clone()).centroid();
    let (mab, mbc, mca) = (a.midpoint(&b), b.midpoint(&c), c.midpoint(&a));
    let tiles = vec![
        Triangle::new(a.clone(), mab.clone(), g.clone()),
        Triangle::new(mab, b.clone(), g.clone()),
        Triangle::new(b.clone(), mbc.clone(), g.clone()),
        Triangle::new(mbc, c.clone(), g.clone()),
        Triangle::new(c.clone(), mca.clone(), g.clone()),
        Triangle::new(mca, a.clone(), g),
    ];
    Ok(Tiling::new(Triangle::new(a, b, c), tiles)?)
}

/// The 3-tiling of the 30-60-90 triangle with sides `scale·(1, √3, 2)` by
/// copies shrunk by `1/√3`.
pub fn right_306090_three(scale: &Rational) -> Result<Tiling> {
    if !scale.is_positive() {
        return domain("scale must be positive");
    }
    let half = Rational::new(1.into(), 2.into());
    let third = Rational::new(1.into(), 3.into());
    let o = Point::new(0, 0);
    let p = Point::new(1, 0);
    let q = Point::new(2, 0);
    let apex = Point {
        x: QuadNum::from_rational(half.clone()),
        y: s3(rat(0), half),
    };
    let inner = Point {
        x: QuadNum::one(),
        y: s3(rat(0), third),
    };
    let t = Tiling::new(
        Triangle::new(o.clone(), q.clone(), apex.clone()),
        vec![
            Triangle::new(o.clone(), p.clone(), inner.clone()),
            Triangle::new(p, q, inner.clone()),
            Triangle::new(o, inner, apex),
        ],
    )?;
    Ok(scale_tiling(&t, &QuadNum::from_rational(scale.clone())))
}

/// Splits an isosceles triangle in two along the altitude from its apex.
pub fn bisect_isosceles(abc: &Triangle) -> Result<Tiling> {
    if abc.is_degenerate() {
        return domain("reference triangle is degenerate");
    }
    let apex = (0..3)
        .find(|&i| {
            let p = &abc.v[i];
            p.dist2(&abc.v[(i + 1) % 3]) == p.dist2(&abc.v[(i + 2) % 3])
        })
        .ok_or_else(|| GenError::Domain("triangle is not isosceles".into()))?;
    let a = abc.v[apex].clone();
    let b = abc.v[(apex + 1) % 3].clone();
    let c = abc.v[(apex + 2) % 3].clone();
    let m = b.midpoint(&c);
    Ok(Tiling::new(
        abc.clone(),
        vec![
            Triangle::new(a.clone(), b, m.clone()),
            Triangle::new(a, m, c),
        ],
    )?)
}

/// The `2r²`-tiling of an isosceles triangle by right triangles with legs
/// `(p, q)`, for a Pythagorean triple `p² + q² = r²`. One half is
/// `r`-quadratic, the other is split by its altitude into a `p`-quadratic and
/// a `q`-quadratic part.
pub fn pythagorean(p: u32, q: u32, r: u32) -> Result<Tiling> {
    let (p, q, r) = (p as i64, q as i64, r as i64);
    if p < 1 || q < 1 || r < 1 || p * p + q * q != r * r {
        return domain(format!("({p}, {q}, {r}) is not a Pythagorean triple"));
    }
    let o = Point::new(0, 0);
    let m = Point::new(r * p, 0);
    let e = Point::new(2 * r * p, 0);
    let h = Point::new(r * p, r * q);
    let f = e.add(&h.sub(&e).scale(&QuadNum::from_ratio(p * p, r * r)));
    let mut tiles = quadratic(&Triangle::new(o.clone(), m.clone(), h.clone()), r as u32)?.tiles;
    tiles.extend(quadratic(&Triangle::new(m.clone(), f.clone(), e.clone()), p as u32)?.tiles);
    tiles.extend(quadratic(&Triangle::new(m, h.clone(), f), q as u32)?.tiles);
    Ok(Tiling::new(Triangle::new(o, e, h), tiles)?)
}

/// A vertex order of `target` making it similar to `source` vertex by vertex.
fn similar_order(source: &Triangle, target: &Triangle) -> Option<[usize; 3]> {
    const PERMS: [[usize; 3]; 6] = [
        [0, 1, 2],
        [0, 2, 1],
        [1, 0, 2],
        [1, 2, 0],
        [2, 0, 1],
        [2, 1, 0],
    ];
    let s = [0, 1, 2].map(|i| source.opposite_sq(i));
    PERMS.into_iter().find(|perm| {
        let t = [0, 1, 2].map(|i| target.v[perm[(i + 1) % 3]].dist2(&target.v[perm[(i + 2) % 3]]));
        (1..3).all(|i| &s[i] * &t[0] == &t[i] * &s[0])
    })
}

/// Replaces every tile of `base` by a copy of `sub` mapped onto it.
pub fn compose(base: &Tiling, sub: &Tiling) -> Result<Tiling> {
    let coords = |t: &Tiling| -> Vec<QuadNum> {
        std::iter::once(&t.reference)
            .chain(&t.tiles)
            .flat_map(|x| x.v.iter())
            .flat_map(|p| [p.x.clone(), p.y.clone()])
            .collect()
    };
    let (cb, cs) = (coords(base), coords(sub));
    common_radicand(cb.iter().chain(&cs))?;

    let r = &sub.reference;
    let r0 = &r.v[0];
    let (e1, e2) = (r.v[1].sub(r0), r.v[2].sub(r0));
    let det = e1.cross(&e2);
    // Barycentric coordinates of every sub vertex, shared by all base tiles.
    let bary: Vec<[(QuadNum, QuadNum); 3]> = sub
        .tiles
        .iter()
        .map(|t| {
            t.v.clone().map(|p| {
                let d = p.sub(r0);
                (&d.cross(&e2) / &det, &e1.cross(&d) / &det)
            })
        })
        .collect();

    let mut tiles = Vec::with_capacity(base.n() * sub.n());
    for (i, bt) in base.tiles.iter().enumerate() {
        let perm = similar_order(r, bt).ok_or_else(|| {
            GenError::Domain(format!(
                "base tile {i} is not similar to the sub-tiling's reference triangle"
            ))
        })?;
        let t0 = &bt.v[perm[0]];
        let (f1, f2) = (bt.v[perm[1]].sub(t0), bt.v[perm[2]].sub(t0));
        for tri in &bary {
            tiles.push(Triangle {
                v: tri
                    .clone()
                    .map(|(s, t)| t0.add(&f1.scale(&s)).add(&f2.scale(&t))),
            });
        }
    }
    Ok(Tiling::new(base.reference.clone(), tiles)?)
}

/// For a right triangle, the index of the right-angle vertex.
fn right_vertex(t: &Triangle) -> Option<usize> {
    (0..3).find(|&i| t.opposite_sq(i) == t.opposite_sq((i + 1) % 3) + t.opposite_sq((i + 2) % 3))
}

/// Replaces tiles `i` and `j`, two right triangles forming a rectangle across
/// their common hypotenuse, by the two halves along the other diagonal.
pub fn rect_flip(t: &Tiling, i: usize, j: usize) -> Result<Tiling> {
    if i == j || i >= t.n() || j >= t.n() {
        return domain(format!("invalid tile pair ({i}, {j})"));
    }
    let (ti, tj) = (&t.tiles[i], &t.tiles[j]);
    let (Some(ri), Some(rj)) = (right_vertex(ti), right_vertex(tj)) else {
        return domain("both tiles must be right triangles");
    };
    let p = &ti.v[ri];
    let q = &tj.v[rj];
    let (h1, h2) = (&ti.v[(ri + 1) % 3], &ti.v[(ri + 2) % 3]);
    let hyp_j = [&tj.v[(rj + 1) % 3], &tj.v[(rj + 2) % 3]];
    let shares = (hyp_j[0] == h1 && hyp_j[1] == h2) || (hyp_j[0] == h2 && hyp_j[1] == h1);
    if !shares || p.add(&q.sub(&Point::origin())) != h1.add(&h2.sub(&Point::origin())) {
        return domain(format!("tiles {i} and {j} do not form a rectangle"));
    }
    let mut out = t.clone();
    out.tiles[i] = Triangle::new(p.clone(), q.clone(), h1.clone());
    out.tiles[j] = Triangle::new(p.clone(), q.clone(), h2.clone());
    Ok(out)
}

/// Every pair of tiles that [`rect_flip`] accepts.
pub fn flippable_pairs(t: &Tiling) -> Vec<(usize, usize)> {
    let mut by_hypotenuse: HashMap<[Point; 2], Vec<usize>> = HashMap::new();
    for (k, tile) in t.tiles.iter().enumerate() {
        if let Some(r) = right_vertex(tile) {
            let mut key = [tile.v[(r + 1) % 3].clone(), tile.v[(r + 2) % 3].clone()];
            key.sort();
            by_hypotenuse.entry(key).or_default().push(k);
        }
    }
    let mut pairs: Vec<(usize, usize)> = by_hypotenuse
        .values()
        .filter(|v| v.len() == 2)
        .map(|v| (v[0], v[1]))
        .filter(|&(i, j)| rect_flip(t, i, j).is_ok())
        .collect();
    pairs.sort_unstable();
    pairs
}

/// A named exemplar tiling.
#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub description: &'static str,
    pub tiling: Tiling,
}

pub const CATALOG_NAMES: [&str; 5] = [
    "five_b",
    "nine_nonstandard",
    "twelve_b",
    "thirteen",
    "nonquadratic_3a2b",
];

fn parse_triangle(v: [[&str; 2]; 3]) -> Triangle {
    let p = |c: [&str; 2]| Point {
        x: c[0].parse().expect("catalog coordinate"),
        y: c[1].parse().expect("catalog coordinate"),
    };
    Triangle::new(p(v[0]), p(v[1]), p(v[2]))
}

fn from_table(reference: [[&str; 2]; 3], tiles: &[[[&str; 2]; 3]]) -> Result<Tiling> {
    Ok(Tiling::new(
        parse_triangle(reference),
        tiles.iter().map(|t| parse_triangle(*t)).collect(),
    )?)
}

fn five_b() -> Result<Tiling> {
    from_table(
        [["0", "0"], ["1", "2"], ["5", "0"]],
        &[
            [["5", "0"], ["3", "0"], ["3", "1"]],
            [["3", "1"], ["1", "1"], ["1", "2"]],
            [["3", "0"], ["1", "0"], ["3", "1"]],
            [["1", "0"], ["1", "1"], ["3", "1"]],
            [["1", "0"], ["0", "0"], ["1", "2"]],
        ],
    )
}

fn nine_nonstandard() -> Result<Tiling> {
    from_table(
        [["0", "0"], ["6", "0"], ["6", "3"]],
        &[
            [["0", "0"], ["2", "0"], ["2", "1"]],
            [["2", "0"], ["4", "0"], ["4", "1"]],
            [["2", "0"], ["4", "1"], ["2", "1"]],
            [["2", "1"], ["4", "1"], ["4", "2"]],
            [["4", "0"], ["5", "0"], ["5", "2"]],
            [["4", "0"], ["5", "2"], ["4", "2"]],
            [["5", "0"], ["6", "0"], ["6", "2"]],
            [["5", "0"], ["6", "2"], ["5", "2"]],
            [["4", "2"], ["6", "2"], ["6", "3"]],
        ],
    )
}

fn twelve_b() -> Result<Tiling> {
    const S1: &str = "0+1*sqrt(3)";
    const S2: &str = "0+2*sqrt(3)";
    const H: &str = "0+1/2*sqrt(3)";
    const H3: &str = "0+3/2*sqrt(3)";
    from_table(
        [["0", "0"], ["6", "0"], ["6", S2]],
        &[
            [["2", "0"], ["7/2", H], ["4", "0"]],
            [["5", S1], ["5", "0"], ["4", "0"]],
            [["5", S1], ["7/2", H], ["4", "0"]],
            [["0", "0"], ["2", "0"], ["3/2", H]],
            [["3", S1], ["2", "0"], ["3/2", H]],
            [["3", S1], ["2", "0"], ["7/2", H]],
            [["3", S1], ["5", S1], ["9/2", H3]],
            [["6", S2], ["5", S1], ["9/2", H3]],
            [["5", "0"], ["6", "0"], ["5", S1]],
            [["6", S1], ["6", "0"], ["5", S1]],
            [["5", S1], ["6", S1], ["6", S2]],
            [["3", S1], ["7/2", H], ["5", S1]],
        ],
    )
}

/// The 25-tiling with sides `(2, 3, √19)` in which a rhombus of side 6 inside
/// a quadratic tiling is re-tiled along the other lattice direction, so that
/// three `a` edges face two `b` edges.
fn nonquadratic_3a2b() -> Result<Tiling> {
    let u = Vector::new(2, 0);
    let v = Vector {
        x: QuadNum::from_ratio(-3, 2),
        y: s3(rat(0), Rational::new(3.into(), 2.into())),
    };
    let o = Point::origin();
    let big = Triangle::new(
        o.clone(),
        o.add(&u.scale(&QuadNum::from_int(5))),
        o.add(&v.scale(&QuadNum::from_int(5))),
    );
    let lattice = |i: i64, j: i64, a: &Vector, b: &Vector| {
        o.add(&a.scale(&QuadNum::from_int(i)))
            .add(&b.scale(&QuadNum::from_int(j)))
    };
    let mut tiles = Vec::new();
    for j in 0..5 {
        for i in 0..5 - j {
            if i < 3 && j < 2 {
                continue;
            }
            tiles.push(Triangle::new(
                lattice(i, j, &u, &v),
                lattice(i + 1, j, &u, &v),
                lattice(i, j + 1, &u, &v),
            ));
            if i + j + 2 <= 5 {
                tiles.push(Triangle::new(
                    lattice(i + 1, j, &u, &v),
                    lattice(i + 1, j + 1, &u, &v),
                    lattice(i, j + 1, &u, &v),
                ));
            }
        }
    }
    let a = Vector::new(3, 0);
    let b = v.scale(&QuadNum::from_ratio(2, 3));
    for s in 0..2 {
        for t in 0..3 {
            tiles.push(Triangle::new(
                lattice(s, t, &a, &b),
                lattice(s + 1, t, &a, &b),
                lattice(s, t + 1, &a, &b),
            ));
            tiles.push(Triangle::new(
                lattice(s + 1, t, &a, &b),
                lattice(s + 1, t + 1, &a, &b),
                lattice(s, t + 1, &a, &b),
            ));
        }
    }
    Ok(Tiling::new(big, tiles)?)
}

/// Looks up a catalog exemplar by name.
pub fn catalog(name: &str) -> Result<CatalogEntry> {
    let (name, description, tiling) = match name {
        "five_b" => (
            "five_b",
            "second 5-tiling of the right triangle (0,0), (1,2), (5,0) by legs (1, 2)",
            five_b()?,
        ),
        "nine_nonstandard" => (
            "nine_nonstandard",
            "non-quadratic 9-tiling of the right triangle with legs 3 and 6",
            nine_nonstandard()?,
        ),
        "twelve_b" => (
            "twelve_b",
            "12-tiling of a 30-60-90 triangle that is not a composition",
            twelve_b()?,
        ),
        "thirteen" => (
            "thirteen",
            "biquadratic 13-tiling with m = 3, n = 2",
            biquadratic(3, 2)?,
        ),
        "nonquadratic_3a2b" => (
            "nonquadratic_3a2b",
            "25-tiling by the (2, 3, √19) tile with edge relation 3a = 2b",
            nonquadratic_3a2b()?,
        ),
        other => return Err(GenError::UnknownEntry(other.to_string())),
    };
    Ok(CatalogEntry {
        name,
        description,
        tiling,
    })
}

/// True when every tile has the same shape as tile 0.
pub fn single_shape(t: &Tiling) -> bool {
    let s = shape_of(&t.tiles[0]);
    t.tiles.iter().all(|x| shape_of(x) == s)
}

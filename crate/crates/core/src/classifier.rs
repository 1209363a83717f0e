//! Integer utilities and the admissibility rules for triples `(ABC, N, T)`.
//!
//! Tiles and target triangles are described symbolically, never by floating
//! angles. A [`Verdict`] carries the theorem labels it rests on and, when the
//! tiling is constructive, a [`Witness`] that the generators can realize.

use std::fmt;

use num_integer::Roots;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::exact::{normalize_sqrt, QuadNum, Rational};
use crate::generators::{self, GenError};
use crate::geometry::{shape_of, Point, Shape, Triangle};
use crate::tiling::Tiling;

pub fn is_square(n: u64) -> bool {
    let r = n.sqrt();
    r * r == n
}

/// `n = k·m²` for some integer `m`.
pub fn is_k_times_square(k: u64, n: u64) -> bool {
    k > 0 && n.is_multiple_of(k) && is_square(n / k)
}

/// The `m` with `n = k·m²`, if any.
fn k_square_root(k: u64, n: u64) -> Option<u64> {
    is_k_times_square(k, n).then(|| (n / k).sqrt())
}

/// Prime factorization by trial division, as `(prime, exponent)` pairs.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p.saturating_mul(p) <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// True when every prime `≡ 3 (mod 4)` divides `n` to an even power.
pub fn is_sum_two_squares(n: u64) -> bool {
    n == 0 || factorize(n).iter().all(|&(p, e)| p % 4 != 3 || e % 2 == 0)
}

/// All `(e, f)` with `0 ≤ e ≤ f` and `e² + f² = n`.
pub fn two_square_decompositions(n: u64) -> Vec<(u64, u64)> {
    let mut out = Vec::new();
    let mut e = 0u64;
    while 2 * e * e <= n {
        let rest = n - e * e;
        if is_square(rest) {
            out.push((e, rest.sqrt()));
        }
        e += 1;
    }
    out
}

/// Euler's totient.
pub fn totient(n: u64) -> u64 {
    factorize(n)
        .iter()
        .fold(n, |acc, &(p, _)| acc / p * (p - 1))
}

/// Every `n` with `φ(n) = d`, in increasing order.
pub fn totient_preimage(d: u64) -> Vec<u64> {
    if d == 0 {
        return Vec::new();
    }
    // φ(n) ≥ √(n/2), so n ≤ 2d².
    let bound = 2 * d * d;
    (1..=bound.max(2)).filter(|&n| totient(n) == d).collect()
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// The tile, up to similarity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum TileDescriptor {
    /// A right triangle whose smaller acute angle has tangent `e/f`, reduced, `e ≤ f`.
    RightRationalTan {
        e: u64,
        f: u64,
    },
    Right306090,
    RightIsosceles,
    /// A right triangle with irrational tangents, other than 30-60-90.
    RightOther,
    Isosceles3030120,
    EquilateralTile,
    ObliqueOther,
}

impl TileDescriptor {
    /// Reduces `(e, f)` and orders it so that `e ≤ f`.
    pub fn right_tan(e: u64, f: u64) -> Self {
        let g = gcd(e, f).max(1);
        let (e, f) = (e / g, f / g);
        if e == f {
            TileDescriptor::RightIsosceles
        } else {
            TileDescriptor::RightRationalTan {
                e: e.min(f),
                f: e.max(f),
            }
        }
    }

    pub fn is_right(&self) -> bool {
        matches!(
            self,
            TileDescriptor::RightRationalTan { .. }
                | TileDescriptor::Right306090
                | TileDescriptor::RightIsosceles
                | TileDescriptor::RightOther
        )
    }

    /// `(e, f)` for right tiles with rational tangent.
    fn tangent(&self) -> Option<(u64, u64)> {
        match *self {
            TileDescriptor::RightRationalTan { e, f } => Some((e, f)),
            TileDescriptor::RightIsosceles => Some((1, 1)),
            _ => None,
        }
    }

    /// A fixed triangle of this shape with `A` at the origin.
    pub fn canonical_triangle(&self) -> Triangle {
        let r = |n: i64, d: i64| QuadNum::from_ratio(n, d);
        let root = |n: i64| QuadNum::sqrt_int(n).expect("positive");
        let pt = |x: QuadNum, y: QuadNum| Point { x, y };
        let [a, b, c] = match *self {
            TileDescriptor::RightRationalTan { e, f } => {
                let (e, f) = (e as i64, f as i64);
                [
                    Point::new(0, 0),
                    Point::new(e * e, e * f),
                    Point::new(e * e + f * f, 0),
                ]
            }
            TileDescriptor::RightIsosceles => {
                [Point::new(0, 0), Point::new(2, 0), Point::new(1, 1)]
            }
            TileDescriptor::Right306090 => [
                Point::new(0, 0),
                Point::new(2, 0),
                pt(r(1, 2), &root(3) * &r(1, 2)),
            ],
            TileDescriptor::RightOther => {
                [Point::new(0, 0), Point::new(1, 0), pt(r(0, 1), root(2))]
            }
            TileDescriptor::Isosceles3030120 => [
                Point::new(0, 0),
                pt(root(3), r(0, 1)),
                pt(&root(3) * &r(1, 2), r(1, 2)),
            ],
            TileDescriptor::EquilateralTile => [
                Point::new(0, 0),
                Point::new(1, 0),
                pt(r(1, 2), &root(3) * &r(1, 2)),
            ],
            TileDescriptor::ObliqueOther => [Point::new(0, 0), Point::new(4, 0), Point::new(1, 3)],
        };
        Triangle::new(a, b, c)
    }
}

/// How the tiled triangle `ABC` relates to the tile.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TargetDescriptor {
    SimilarToTile,
    Equilateral,
    /// Isosceles, not equilateral, and the tile is similar to half of it.
    IsoscelesWithTileAsHalf,
    IsoscelesOther,
    Other,
}

/// Which leg of a right triangle to reflect across when doubling it into an
/// isosceles triangle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Leg {
    Short,
    Long,
}

/// A recipe for an explicit tiling.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "family")]
pub enum Witness {
    Quadratic {
        tile: TileDescriptor,
        n: u32,
    },
    Biquadratic {
        m: u32,
        n: u32,
    },
    /// `3m²` copies of a 30-60-90 tile in a similar triangle.
    TripleSquare {
        m: u32,
    },
    Hexagonal {
        k: u32,
    },
    /// An equilateral triangle halved, each half `m`-quadratic.
    EquilateralHalves {
        m: u32,
    },
    /// An equilateral triangle in six 30-60-90 parts, each `m`-quadratic.
    EquilateralSixths {
        m: u32,
    },
    /// Two mirror copies of a right-triangle tiling forming an isosceles triangle.
    Doubled {
        half: Box<Witness>,
        across: Leg,
    },
    Pythagorean {
        p: u32,
        q: u32,
        r: u32,
    },
}

impl Witness {
    pub fn tile_count(&self) -> u64 {
        let sq = |x: u32| (x as u64) * (x as u64);
        match self {
            Witness::Quadratic { n, .. } => sq(*n),
            Witness::Biquadratic { m, n } => sq(*m) + sq(*n),
            Witness::TripleSquare { m } => 3 * sq(*m),
            Witness::Hexagonal { k } => 3 * sq(k + 1),
            Witness::EquilateralHalves { m } => 2 * sq(*m),
            Witness::EquilateralSixths { m } => 6 * sq(*m),
            Witness::Doubled { half, .. } => 2 * half.tile_count(),
            Witness::Pythagorean { r, .. } => 2 * sq(*r),
        }
    }

    /// Short family name.
    pub fn family(&self) -> String {
        match self {
            Witness::Quadratic { .. } => "quadratic".into(),
            Witness::Biquadratic { .. } => "biquadratic".into(),
            Witness::TripleSquare { .. } => "triple-square".into(),
            Witness::Hexagonal { .. } => "hexagonal".into(),
            Witness::EquilateralHalves { .. } => "equilateral halves".into(),
            Witness::EquilateralSixths { .. } => "equilateral sixths".into(),
            Witness::Doubled { half, .. } => format!("doubled {}", half.family()),
            Witness::Pythagorean { .. } => "pythagorean".into(),
        }
    }

    /// Builds the tiling.
    pub fn realize(&self) -> Result<Tiling, GenError> {
        let one = Rational::one();
        let c306090 = TileDescriptor::Right306090.canonical_triangle();
        match self {
            Witness::Quadratic { tile, n } => generators::quadratic(&tile.canonical_triangle(), *n),
            Witness::Biquadratic { m, n } => generators::biquadratic(*m, *n),
            Witness::TripleSquare { m } => generators::compose(
                &generators::quadratic(&c306090, *m)?,
                &generators::right_306090_three(&one)?,
            ),
            Witness::Hexagonal { k } => generators::hexagonal(*k),
            Witness::EquilateralHalves { m } => {
                let eq = generators::equilateral_six(&one)?.reference;
                generators::compose(
                    &generators::bisect_isosceles(&eq)?,
                    &generators::quadratic(&c306090, *m)?,
                )
            }
            Witness::EquilateralSixths { m } => generators::compose(
                &generators::equilateral_six(&one)?,
                &generators::quadratic(&c306090, *m)?,
            ),
            Witness::Doubled { half, across } => {
                let inner = half.realize()?;
                let whole = double_right_triangle(&inner.reference, *across)?;
                generators::compose(&generators::bisect_isosceles(&whole)?, &inner)
            }
            Witness::Pythagorean { p, q, r } => generators::pythagorean(*p, *q, *r),
        }
    }
}

/// Reflects a right triangle across one of its legs, giving an isosceles
/// triangle with the right-angle vertex at the midpoint of its base.
fn double_right_triangle(t: &Triangle, across: Leg) -> Result<Triangle, GenError> {
    let r = (0..3)
        .find(|&i| t.opposite_sq(i) == t.opposite_sq((i + 1) % 3) + t.opposite_sq((i + 2) % 3))
        .ok_or_else(|| GenError::Domain("half tiling is not a right triangle".into()))?;
    let corner = &t.v[r];
    let (p, q) = (&t.v[(r + 1) % 3], &t.v[(r + 2) % 3]);
    let p_longer = corner.dist2(p) > corner.dist2(q);
    // The mirror leg joins `corner` to the apex; the other leg is half the base.
    let (apex, foot) = match (across, p_longer) {
        (Leg::Long, true) | (Leg::Short, false) => (p, q),
        _ => (q, p),
    };
    let mirrored = corner.add(&foot.sub(corner).neg());
    Ok(Triangle::new(apex.clone(), foot.clone(), mirrored))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Admissible,
    Inadmissible,
    OutsideCoveredCases,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    pub citations: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Verdict {
    fn admissible(witness: Witness, cite: &[&str]) -> Self {
        Verdict {
            status: Status::Admissible,
            witness: Some(witness),
            citations: cite.iter().map(|s| s.to_string()).collect(),
            note: None,
        }
    }

    fn inadmissible(cite: &[&str]) -> Self {
        Verdict {
            status: Status::Inadmissible,
            witness: None,
            citations: cite.iter().map(|s| s.to_string()).collect(),
            note: None,
        }
    }

    fn outside(note: &str) -> Self {
        Verdict {
            status: Status::OutsideCoveredCases,
            witness: None,
            citations: Vec::new(),
            note: Some(note.to_string()),
        }
    }

    pub fn is_admissible(&self) -> bool {
        self.status == Status::Admissible
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (&self.status, &self.witness) {
            (Status::Admissible, Some(w)) => write!(f, "admissible ({})", w.family())?,
            (Status::Admissible, None) => write!(f, "admissible (no constructive witness)")?,
            (Status::Inadmissible, _) => write!(f, "inadmissible")?,
            (Status::OutsideCoveredCases, _) => write!(f, "outside covered cases")?,
        }
        if !self.citations.is_empty() {
            write!(f, " [{}]", self.citations.join("; "))?;
        }
        if let Some(note) = &self.note {
            write!(f, ": {note}")?;
        }
        Ok(())
    }
}

fn root_u32(x: u64) -> u32 {
    u32::try_from(x).expect("witness parameter fits in u32")
}

/// `T` similar to `ABC`.
pub fn classify_similar(tile: TileDescriptor, n: u64) -> Verdict {
    let quadratic = |cite: &[&str]| -> Option<Verdict> {
        k_square_root(1, n).map(|m| {
            Verdict::admissible(
                Witness::Quadratic {
                    tile,
                    n: root_u32(m),
                },
                cite,
            )
        })
    };
    match tile {
        TileDescriptor::RightRationalTan { .. } | TileDescriptor::RightIsosceles => {
            let (e, f) = tile.tangent().expect("rational tangent");
            if let Some(v) = quadratic(&["Theorem 5(i)"]) {
                return v;
            }
            // N = (ke)² + (kf)² = k²(e² + f²)
            if let Some(k) = k_square_root(e * e + f * f, n) {
                return Verdict::admissible(
                    Witness::Biquadratic {
                        m: root_u32(k * e),
                        n: root_u32(k * f),
                    },
                    &["Theorem 5(i)"],
                );
            }
            Verdict::inadmissible(&["Theorem 5(i)"])
        }
        TileDescriptor::Right306090 => {
            if let Some(v) = quadratic(&["Theorem 5(ii)"]) {
                return v;
            }
            match k_square_root(3, n) {
                Some(m) => Verdict::admissible(
                    Witness::TripleSquare { m: root_u32(m) },
                    &["Theorem 5(ii)"],
                ),
                None => Verdict::inadmissible(&["Theorem 5(ii)"]),
            }
        }
        TileDescriptor::RightOther => quadratic(&["Theorem 5(iii)"])
            .unwrap_or_else(|| Verdict::inadmissible(&["Theorem 5(iii)"])),
        TileDescriptor::Isosceles3030120 => {
            quadratic(&["Theorem 7(i)"]).unwrap_or_else(|| Verdict::inadmissible(&["Theorem 7(i)"]))
        }
        TileDescriptor::EquilateralTile => {
            quadratic(&["Theorem 2"]).unwrap_or_else(|| Verdict::inadmissible(&["Theorem 2"]))
        }
        TileDescriptor::ObliqueOther => {
            quadratic(&["Theorem 8"]).unwrap_or_else(|| Verdict::inadmissible(&["Theorem 8"]))
        }
    }
}

/// `ABC` equilateral and not similar to a non-equilateral tile.
pub fn classify_equilateral(tile: TileDescriptor, n: u64) -> Verdict {
    match tile {
        TileDescriptor::Isosceles3030120 => match k_square_root(3, n) {
            Some(m) if m >= 1 => {
                Verdict::admissible(Witness::Hexagonal { k: root_u32(m - 1) }, &["Theorem 6"])
            }
            _ => Verdict::outside("only N = 3m² is constructed for this tile"),
        },
        TileDescriptor::Right306090 => {
            if let Some(m) = k_square_root(2, n) {
                Verdict::admissible(
                    Witness::EquilateralHalves { m: root_u32(m) },
                    &["Theorem 6"],
                )
            } else if let Some(m) = k_square_root(6, n) {
                Verdict::admissible(
                    Witness::EquilateralSixths { m: root_u32(m) },
                    &["Theorem 6"],
                )
            } else {
                Verdict::inadmissible(&["Theorem 6", "Theorem 3"])
            }
        }
        TileDescriptor::EquilateralTile => classify_similar(tile, n),
        TileDescriptor::RightRationalTan { .. }
        | TileDescriptor::RightIsosceles
        | TileDescriptor::RightOther => Verdict::inadmissible(&["Theorem 6"]),
        TileDescriptor::ObliqueOther => {
            Verdict::outside("tilings of an equilateral triangle by this tile are not classified")
        }
    }
}

/// `ABC` isosceles but not equilateral.
pub fn classify_isosceles(tile: TileDescriptor, target: TargetDescriptor, n: u64) -> Verdict {
    if target != TargetDescriptor::IsoscelesWithTileAsHalf {
        return if tile.is_right() {
            Verdict::inadmissible(&["Theorem 7", "Theorem 4"])
        } else {
            Verdict::outside("only right tiles and tiles similar to ABC are classified")
        };
    }
    if !tile.is_right() {
        return Verdict::outside("a tile that is half of an isosceles triangle must be right");
    }
    // The right isosceles tile also tiles ABC quadratically, since ABC is then
    // similar to it.
    if tile == TileDescriptor::RightIsosceles {
        if let Some(m) = k_square_root(1, n) {
            return Verdict::admissible(
                Witness::Quadratic {
                    tile,
                    n: root_u32(m),
                },
                &["Theorem 7(ii)"],
            );
        }
    }
    if n % 2 == 1 {
        return Verdict::inadmissible(&["Theorem 3", "Theorem 7"]);
    }
    let half_n = n / 2;
    if let Some((e, f)) = tile.tangent() {
        if let Some(r0) = k_square_root(1, e * e + f * f) {
            if let Some(k) = k_square_root(r0 * r0, half_n) {
                return Verdict::admissible(
                    Witness::Pythagorean {
                        p: root_u32(k * e),
                        q: root_u32(k * f),
                        r: root_u32(k * r0),
                    },
                    &["Theorem 3(v)", "Theorem 7"],
                );
            }
        }
    }
    let across = if tile == TileDescriptor::Right306090 {
        Leg::Short
    } else {
        Leg::Long
    };
    if let Some(m) = k_square_root(1, half_n) {
        let half = Witness::Quadratic {
            tile,
            n: root_u32(m),
        };
        return Verdict::admissible(
            Witness::Doubled {
                half: Box::new(half),
                across,
            },
            &["Theorem 7(iii)"],
        );
    }
    if tile == TileDescriptor::Right306090 {
        return match k_square_root(6, n) {
            Some(m) => Verdict::admissible(
                Witness::Doubled {
                    half: Box::new(Witness::TripleSquare { m: root_u32(m) }),
                    across,
                },
                &["Theorem 7(iv)"],
            ),
            None => Verdict::inadmissible(&["Theorem 7", "Theorem 3"]),
        };
    }
    if let Some((e, f)) = tile.tangent() {
        if let Some(k) = k_square_root(e * e + f * f, half_n) {
            let half = Witness::Biquadratic {
                m: root_u32(k * e),
                n: root_u32(k * f),
            };
            return Verdict::admissible(
                Witness::Doubled {
                    half: Box::new(half),
                    across,
                },
                &["Theorem 3(v)", "Theorem 7"],
            );
        }
        if is_sum_two_squares(half_n) {
            return Verdict {
                status: Status::Admissible,
                witness: None,
                citations: vec!["Theorem 3(v)".into(), "Theorem 7".into()],
                note: Some("no constructive witness implemented".into()),
            };
        }
    }
    Verdict::inadmissible(&["Theorem 7", "Theorem 3"])
}

/// Dispatches on the target descriptor.
pub fn classify(tile: TileDescriptor, target: TargetDescriptor, n: u64) -> Verdict {
    if n == 0 {
        return Verdict {
            note: Some("N must be positive".into()),
            ..Verdict::inadmissible(&[])
        };
    }
    match target {
        TargetDescriptor::SimilarToTile => classify_similar(tile, n),
        TargetDescriptor::Equilateral => classify_equilateral(tile, n),
        TargetDescriptor::IsoscelesWithTileAsHalf | TargetDescriptor::IsoscelesOther => {
            classify_isosceles(tile, target, n)
        }
        TargetDescriptor::Other if tile.is_right() => Verdict::inadmissible(&["Theorem 4"]),
        TargetDescriptor::Other => Verdict::outside(
            "tilings of a scalene triangle by a dissimilar non-right tile are not classified",
        ),
    }
}

/// Describes a triangle shape as a tile.
pub fn describe_shape(s: &Shape) -> TileDescriptor {
    if s.is_right() {
        if s.a2() == s.b2() {
            return TileDescriptor::RightIsosceles;
        }
        if s.b2() == &(s.a2() * &QuadNum::from_int(3)) {
            return TileDescriptor::Right306090;
        }
        let ratio = (s.b2() / s.a2()).as_rational().cloned();
        if let Some(root) = ratio.and_then(|q| normalize_sqrt(&q).ok()) {
            if let Some(fe) = root.as_rational() {
                use num_traits::ToPrimitive;
                if let (Some(f), Some(e)) = (fe.numer().to_u64(), fe.denom().to_u64()) {
                    return TileDescriptor::right_tan(e, f);
                }
            }
        }
        return TileDescriptor::RightOther;
    }
    if s.is_equilateral() {
        TileDescriptor::EquilateralTile
    } else if s.a2() == s.b2() && s.c2() == &(s.a2() * &QuadNum::from_int(3)) {
        TileDescriptor::Isosceles3030120
    } else {
        TileDescriptor::ObliqueOther
    }
}

/// Shape of the two halves of an isosceles triangle cut along its axis.
fn half_shape(s: &Shape) -> Shape {
    let (equal, base) = if s.a2() == s.b2() {
        (s.a2(), s.c2())
    } else {
        (s.c2(), s.a2())
    };
    let quarter = base * &QuadNum::from_ratio(1, 4);
    let mut sq_sides = [quarter.clone(), equal - &quarter, equal.clone()];
    sq_sides.sort();
    Shape { sq_sides }
}

/// The `(tile, target)` pair of an explicit tiling.
pub fn describe(t: &Tiling) -> (TileDescriptor, TargetDescriptor) {
    let tile = t.tile_shape();
    let reference = shape_of(&t.reference);
    let target = if reference.similar_to(&tile) {
        TargetDescriptor::SimilarToTile
    } else if reference.is_equilateral() {
        TargetDescriptor::Equilateral
    } else if reference.is_isosceles() {
        if tile.is_right() && half_shape(&reference).similar_to(&tile) {
            TargetDescriptor::IsoscelesWithTileAsHalf
        } else {
            TargetDescriptor::IsoscelesOther
        }
    } else {
        TargetDescriptor::Other
    };
    (describe_shape(&tile), target)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integer_examples() {
        assert!(is_square(49));
        assert!(is_k_times_square(3, 27));
        assert!(is_k_times_square(6, 54));
        assert!(!is_k_times_square(6, 12));
        assert!(is_sum_two_squares(1989));
        assert!(!is_sum_two_squares(3));
        assert_eq!(two_square_decompositions(74), vec![(5, 7)]);
        assert_eq!(two_square_decompositions(25), vec![(0, 5), (3, 4)]);
        assert_eq!(totient(12), 4);
        assert_eq!(totient(1), 1);
        assert_eq!(totient_preimage(4), vec![5, 8, 10, 12]);
        assert_eq!(totient_preimage(8), vec![15, 16, 20, 24, 30]);
    }

    #[test]
    fn verdict_examples() {
        let v = classify_similar(TileDescriptor::right_tan(1, 2), 5);
        assert_eq!(v.witness, Some(Witness::Biquadratic { m: 1, n: 2 }));
        assert_eq!(v.to_string(), "admissible (biquadratic) [Theorem 5(i)]");
        let v = classify_similar(TileDescriptor::Right306090, 12);
        assert_eq!(v.witness, Some(Witness::TripleSquare { m: 2 }));
        let v = classify_similar(TileDescriptor::ObliqueOther, 7);
        assert_eq!(v.status, Status::Inadmissible);
        assert_eq!(v.citations, vec!["Theorem 8"]);

        let v = classify_equilateral(TileDescriptor::Isosceles3030120, 27);
        assert_eq!(v.witness, Some(Witness::Hexagonal { k: 2 }));
        assert!(classify_equilateral(TileDescriptor::Right306090, 24).is_admissible());
        assert_eq!(
            classify_equilateral(TileDescriptor::RightIsosceles, 8).status,
            Status::Inadmissible
        );

        let half = TargetDescriptor::IsoscelesWithTileAsHalf;
        let v = classify_isosceles(TileDescriptor::right_tan(3, 4), half, 50);
        assert_eq!(v.witness, Some(Witness::Pythagorean { p: 3, q: 4, r: 5 }));
        assert!(classify_isosceles(TileDescriptor::RightIsosceles, half, 16).is_admissible());
        let v = classify_isosceles(TileDescriptor::right_tan(1, 2), half, 10);
        assert!(v.is_admissible());
        assert!(v.citations.contains(&"Theorem 3(v)".to_string()));
    }

    #[test]
    fn witnesses_realize_their_count() {
        let samples = [
            classify_similar(TileDescriptor::right_tan(1, 2), 20),
            classify_similar(TileDescriptor::Right306090, 27),
            classify_equilateral(TileDescriptor::Right306090, 8),
            classify_equilateral(TileDescriptor::Right306090, 6),
            classify_isosceles(
                TileDescriptor::Right306090,
                TargetDescriptor::IsoscelesWithTileAsHalf,
                6,
            ),
            classify_isosceles(
                TileDescriptor::right_tan(1, 2),
                TargetDescriptor::IsoscelesWithTileAsHalf,
                10,
            ),
            classify_isosceles(
                TileDescriptor::right_tan(1, 2),
                TargetDescriptor::IsoscelesWithTileAsHalf,
                8,
            ),
        ];
        for v in samples {
            let w = v.witness.expect("constructive");
            let t = w.realize().unwrap();
            assert_eq!(t.n() as u64, w.tile_count());
            let r = crate::tiling::verify(&t).unwrap();
            assert!(r.all_ok(), "{}: {r}", w.family());
        }
    }
}

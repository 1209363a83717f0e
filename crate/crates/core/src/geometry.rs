//! Exact planar predicates on points and triangles with [`QuadNum`] coordinates.

use std::fmt;

use crate::exact::{common_radicand, QuadNum, Result as ExactResult};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    pub x: QuadNum,
    pub y: QuadNum,
}

impl Point {
    pub fn new(x: impl Into<QuadNum>, y: impl Into<QuadNum>) -> Self {
        Point {
            x: x.into(),
            y: y.into(),
        }
    }

    pub fn origin() -> Self {
        Point::new(0, 0)
    }

    /// Radicand shared by both coordinates.
    pub fn radicand(&self) -> ExactResult<u64> {
        common_radicand([&self.x, &self.y])
    }

    pub fn add(&self, v: &Vector) -> Point {
        Point {
            x: &self.x + &v.x,
            y: &self.y + &v.y,
        }
    }

    pub fn sub(&self, other: &Point) -> Vector {
        Vector {
            x: &self.x - &other.x,
            y: &self.y - &other.y,
        }
    }

    pub fn midpoint(&self, other: &Point) -> Point {
        let half = QuadNum::from_ratio(1, 2);
        Point {
            x: (&self.x + &other.x) * &half,
            y: (&self.y + &other.y) * &half,
        }
    }

    pub fn dist2(&self, other: &Point) -> QuadNum {
        self.sub(other).norm2()
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// A displacement between two points.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Vector {
    pub x: QuadNum,
    pub y: QuadNum,
}

impl Vector {
    pub fn new(x: impl Into<QuadNum>, y: impl Into<QuadNum>) -> Self {
        Vector {
            x: x.into(),
            y: y.into(),
        }
    }

    pub fn cross(&self, other: &Vector) -> QuadNum {
        &self.x * &other.y - &self.y * &other.x
    }

    pub fn dot(&self, other: &Vector) -> QuadNum {
        &self.x * &other.x + &self.y * &other.y
    }

    pub fn norm2(&self) -> QuadNum {
        self.dot(self)
    }

    pub fn scale(&self, k: &QuadNum) -> Vector {
        Vector {
            x: &self.x * k,
            y: &self.y * k,
        }
    }

    pub fn neg(&self) -> Vector {
        Vector {
            x: -&self.x,
            y: -&self.y,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    /// True when both vectors point along the same ray.
    pub fn same_direction(&self, other: &Vector) -> bool {
        self.cross(other).is_zero() && self.dot(other).sign() > 0
    }
}

/// Twice the signed area of `pqr`.
pub fn cross(p: &Point, q: &Point, r: &Point) -> QuadNum {
    q.sub(p).cross(&r.sub(p))
}

/// Sign of `(q − p) × (r − p)`: +1 for a left turn, −1 for a right turn, 0 when collinear.
pub fn orientation(p: &Point, q: &Point, r: &Point) -> i8 {
    cross(p, q, r).sign()
}

/// True when `p` lies on the closed segment `ab`.
pub fn on_segment(p: &Point, a: &Point, b: &Point) -> bool {
    if orientation(a, b, p) != 0 {
        return false;
    }
    p.sub(a).dot(&p.sub(b)).sign() <= 0
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Triangle {
    pub v: [Point; 3],
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Location {
    Outside,
    Vertex,
    EdgeInterior,
    Interior,
}

impl Triangle {
    pub fn new(a: Point, b: Point, c: Point) -> Self {
        Triangle { v: [a, b, c] }
    }

    pub fn radicand(&self) -> ExactResult<u64> {
        common_radicand(self.v.iter().flat_map(|p| [&p.x, &p.y]))
    }

    pub fn signed_area2(&self) -> QuadNum {
        cross(&self.v[0], &self.v[1], &self.v[2])
    }

    pub fn is_degenerate(&self) -> bool {
        self.signed_area2().is_zero()
    }

    /// Same triangle with counter-clockwise vertex order.
    pub fn ccw(&self) -> Triangle {
        if self.signed_area2().sign() < 0 {
            Triangle::new(self.v[0].clone(), self.v[2].clone(), self.v[1].clone())
        } else {
            self.clone()
        }
    }

    /// Edges `(v[i], v[i+1])`.
    pub fn edges(&self) -> [(&Point, &Point); 3] {
        [
            (&self.v[0], &self.v[1]),
            (&self.v[1], &self.v[2]),
            (&self.v[2], &self.v[0]),
        ]
    }

    /// Squared length of the side opposite vertex `i`.
    pub fn opposite_sq(&self, i: usize) -> QuadNum {
        self.v[(i + 1) % 3].dist2(&self.v[(i + 2) % 3])
    }

    pub fn centroid(&self) -> Point {
        let third = QuadNum::from_ratio(1, 3);
        Point {
            x: (&self.v[0].x + &self.v[1].x + &self.v[2].x) * &third,
            y: (&self.v[0].y + &self.v[1].y + &self.v[2].y) * &third,
        }
    }

    pub fn index_of(&self, p: &Point) -> Option<usize> {
        self.v.iter().position(|q| q == p)
    }

    /// Vertex set in a canonical order, for set comparisons of tilings.
    pub fn sorted_vertices(&self) -> [Point; 3] {
        let mut v = self.v.clone();
        v.sort();
        v
    }

    /// Axis-aligned bounding box `(min, max)`.
    pub fn bbox(&self) -> (Point, Point) {
        let xs = self.v.iter().map(|p| &p.x);
        let ys = self.v.iter().map(|p| &p.y);
        (
            Point {
                x: xs.clone().min().unwrap().clone(),
                y: ys.clone().min().unwrap().clone(),
            },
            Point {
                x: xs.max().unwrap().clone(),
                y: ys.max().unwrap().clone(),
            },
        )
    }
}

/// Classifies `p` against the closed triangle `t` with three orientation tests.
pub fn locate(p: &Point, t: &Triangle) -> Location {
    let t = t.ccw();
    let mut zeros = 0;
    for (a, b) in t.edges() {
        match orientation(a, b, p) {
            o if o < 0 => return Location::Outside,
            0 => zeros += 1,
            _ => {}
        }
    }
    match zeros {
        0 => Location::Interior,
        1 => Location::EdgeInterior,
        _ => Location::Vertex,
    }
}

/// True iff the open interiors of `t1` and `t2` intersect.
///
/// Two convex polygons have disjoint interiors exactly when the supporting
/// line of some edge of one of them leaves the other in its closed outer
/// half-plane, so six edge tests settle every case, including collinear
/// overlaps and shared edges or vertices.
pub fn interiors_overlap(t1: &Triangle, t2: &Triangle) -> bool {
    if t1.is_degenerate() || t2.is_degenerate() {
        return false;
    }
    let (a, b) = (t1.ccw(), t2.ccw());
    let separates = |edge_owner: &Triangle, other: &Triangle| {
        edge_owner
            .edges()
            .iter()
            .any(|(p, q)| other.v.iter().all(|r| orientation(p, q, r) <= 0))
    };
    !(separates(&a, &b) || separates(&b, &a))
}

/// Twice the unsigned area.
pub fn area2(t: &Triangle) -> QuadNum {
    t.signed_area2().abs()
}

/// Squared side lengths in nondecreasing order, `a² ≤ b² ≤ c²`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Shape {
    pub sq_sides: [QuadNum; 3],
}

/// Index into `(a, b, c)`.
pub type SideClass = usize;

impl Shape {
    pub fn a2(&self) -> &QuadNum {
        &self.sq_sides[0]
    }

    pub fn b2(&self) -> &QuadNum {
        &self.sq_sides[1]
    }

    pub fn c2(&self) -> &QuadNum {
        &self.sq_sides[2]
    }

    pub fn is_right(&self) -> bool {
        &(self.a2() + self.b2()) == self.c2()
    }

    pub fn is_isosceles(&self) -> bool {
        self.a2() == self.b2() || self.b2() == self.c2()
    }

    pub fn is_equilateral(&self) -> bool {
        self.a2() == self.c2()
    }

    /// Maps a squared length to a side class. Equal sides of an isosceles
    /// tile collapse onto `a` (when `a = b`) or `c` (when `b = c`), so the
    /// middle class is only used for scalene tiles.
    pub fn classify(&self, sq_len: &QuadNum) -> Option<SideClass> {
        if sq_len == self.a2() {
            Some(0)
        } else if sq_len == self.c2() {
            Some(2)
        } else if sq_len == self.b2() {
            Some(1)
        } else {
            None
        }
    }

    /// Corner classes of one tile, counted per class.
    pub fn corner_vector(&self) -> [i64; 3] {
        let mut counts = [0; 3];
        for s in &self.sq_sides {
            counts[self.classify(s).expect("own side")] += 1;
        }
        counts
    }

    /// True when `other` has the same angles, i.e. the squared sides are proportional.
    pub fn similar_to(&self, other: &Shape) -> bool {
        (0..3).all(|i| &self.sq_sides[i] * other.a2() == &other.sq_sides[i] * self.a2())
    }
}

pub fn shape_of(t: &Triangle) -> Shape {
    let mut sq_sides = [t.opposite_sq(0), t.opposite_sq(1), t.opposite_sq(2)];
    sq_sides.sort();
    Shape { sq_sides }
}

/// Congruence including mirror images.
pub fn congruent(t1: &Triangle, t2: &Triangle) -> bool {
    shape_of(t1) == shape_of(t2)
}

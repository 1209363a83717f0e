//! The tiling data model and its verification and analysis suite.
//!
//! Everything here is exact. A [`Tiling`] is a reference triangle plus an
//! ordered list of tiles; [`verify`] checks that the tiles are congruent,
//! pairwise interior-disjoint, contained in the reference, cover its area and
//! meet consistently at every vertex. The remaining functions extract the
//! combinatorial data used by the classification theory: the vertex census,
//! the d-matrix, maximal segments and the edge and angle relations.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exact::{common_radicand, normalize_sqrt, ExactError, QuadNum, Rational};
use crate::geometry::{
    area2, interiors_overlap, locate, on_segment, shape_of, Location, Point, Shape, Triangle,
    Vector,
};

#[derive(Debug, Error)]
pub enum TilingError {
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error("invalid tiling file: {0}")]
    Format(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error("a tiling needs at least one tile")]
    Empty,
    #[error("inconsistent tiling: {0}")]
    Inconsistent(String),
    #[error("tile is not similar to the reference triangle")]
    NotSimilar,
    #[error("side lengths must have rational squares: {0}")]
    IrrationalLength(String),
}

pub type Result<T> = std::result::Result<T, TilingError>;

/// A reference triangle `ABC` and the tiles covering it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tiling {
    pub reference: Triangle,
    pub tiles: Vec<Triangle>,
}

impl Tiling {
    pub fn new(reference: Triangle, tiles: Vec<Triangle>) -> Result<Self> {
        if tiles.is_empty() {
            return Err(TilingError::Empty);
        }
        let t = Tiling { reference, tiles };
        t.radicand()?;
        Ok(t)
    }

    /// Number of tiles.
    pub fn n(&self) -> usize {
        self.tiles.len()
    }

    /// The radicand shared by every coordinate.
    pub fn radicand(&self) -> Result<u64> {
        let coords = std::iter::once(&self.reference)
            .chain(&self.tiles)
            .flat_map(|t| t.v.iter())
            .flat_map(|p| [&p.x, &p.y]);
        Ok(common_radicand(coords)?)
    }

    /// Shape of the first tile.
    pub fn tile_shape(&self) -> Shape {
        shape_of(&self.tiles[0])
    }

    /// Distinct tile vertices in sorted order.
    pub fn vertices(&self) -> Vec<Point> {
        let set: HashSet<&Point> = self.tiles.iter().flat_map(|t| t.v.iter()).collect();
        let mut v: Vec<Point> = set.into_iter().cloned().collect();
        v.sort();
        v
    }

    /// Tiles as canonically ordered vertex triples, for set comparisons.
    pub fn triangle_set(&self) -> HashSet<[Point; 3]> {
        self.tiles.iter().map(Triangle::sorted_vertices).collect()
    }

    pub fn to_json(&self) -> String {
        let file = TilingFile {
            radicand: self.radicand().unwrap_or(1),
            reference: points_to_strings(&self.reference.v),
            tiles: self.tiles.iter().map(|t| points_to_strings(&t.v)).collect(),
        };
        let mut s = serde_json::to_string_pretty(&file).expect("plain data serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: TilingFile = serde_json::from_str(text)?;
        let reference = triangle_from_strings(&file.reference)?;
        let tiles = file
            .tiles
            .iter()
            .map(|t| triangle_from_strings(t))
            .collect::<Result<_>>()?;
        let t = Tiling::new(reference, tiles)?;
        let d = t.radicand()?;
        if d != 1 && d != file.radicand {
            return Err(TilingError::Format(format!(
                "declared radicand {} but coordinates use sqrt({d})",
                file.radicand
            )));
        }
        Ok(t)
    }
}

#[derive(Serialize, Deserialize)]
struct TilingFile {
    radicand: u64,
    reference: Vec<[String; 2]>,
    tiles: Vec<Vec<[String; 2]>>,
}

fn points_to_strings(v: &[Point; 3]) -> Vec<[String; 2]> {
    v.iter()
        .map(|p| [p.x.to_string(), p.y.to_string()])
        .collect()
}

fn triangle_from_strings(v: &[[String; 2]]) -> Result<Triangle> {
    let [a, b, c] = v else {
        return Err(TilingError::Format(format!(
            "expected 3 vertices, found {}",
            v.len()
        )));
    };
    let p = |s: &[String; 2]| -> Result<Point> {
        Ok(Point {
            x: s[0].parse()?,
            y: s[1].parse()?,
        })
    };
    Ok(Triangle::new(p(a)?, p(b)?, p(c)?))
}

/// The 3×3 edge-count matrix: row `i` counts the `(a, b, c)` tile edges lying
/// on the `i`-th shortest side of the reference triangle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DMatrix {
    pub rows: [[u64; 3]; 3],
}

impl fmt::Display for DMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| format!("[{},{},{}]", r[0], r[1], r[2]))
            .collect();
        write!(f, "[{}]", rows.join(","))
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexCensus {
    /// Vertices in the interior of a side of the reference triangle.
    pub boundary: u64,
    /// Interior vertices lying inside some tile edge.
    pub nonstrict: u64,
    pub strict_interior: u64,
    /// Total `(α, β, γ)` corners used at `A`, `B` and `C`.
    pub corner_usage: [i64; 3],
}

impl VertexCensus {
    /// `N − 1 = N_b + N_n + 2·N_s`.
    pub fn euler_holds(&self, n: usize) -> bool {
        n as u64 == 1 + self.boundary + self.nonstrict + 2 * self.strict_interior
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RelationKind {
    Edge,
    Angle,
}

/// `p·a + q·b + r·c = 0` for edges, `p·α + q·β + r·γ = k·π` for angles.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Relation {
    pub kind: RelationKind,
    pub coefficients: [i64; 3],
    #[serde(skip_serializing_if = "Option::is_none")]
    pub multiple_of_pi: Option<i64>,
}

impl Relation {
    pub fn edge(coefficients: [i64; 3]) -> Self {
        Relation {
            kind: RelationKind::Edge,
            coefficients,
            multiple_of_pi: None,
        }
    }

    pub fn angle(coefficients: [i64; 3], k: i64) -> Self {
        Relation {
            kind: RelationKind::Angle,
            coefficients,
            multiple_of_pi: Some(k),
        }
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = match self.kind {
            RelationKind::Edge => ["a", "b", "c"],
            RelationKind::Angle => ["α", "β", "γ"],
        };
        let mut lhs = String::new();
        for (c, name) in self.coefficients.iter().zip(names) {
            if *c == 0 {
                continue;
            }
            if lhs.is_empty() {
                if *c < 0 {
                    lhs.push('-');
                }
            } else {
                lhs.push_str(if *c < 0 { " - " } else { " + " });
            }
            if c.abs() != 1 {
                lhs.push_str(&c.abs().to_string());
            }
            lhs.push_str(name);
        }
        match self.multiple_of_pi {
            None => write!(f, "{lhs} = 0"),
            Some(1) => write!(f, "{lhs} = π"),
            Some(k) => write!(f, "{lhs} = {k}π"),
        }
    }
}

/// Outcome of [`verify`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub n: usize,
    pub congruent_ok: bool,
    pub disjoint_ok: bool,
    pub contained_ok: bool,
    pub area_ok: bool,
    pub vertex_ok: bool,
    pub euler_ok: bool,
    pub census: VertexCensus,
    pub dmatrix: Option<DMatrix>,
    pub relations: Vec<Relation>,
    pub failures: Vec<String>,
}

impl Report {
    pub fn all_ok(&self) -> bool {
        self.congruent_ok
            && self.disjoint_ok
            && self.contained_ok
            && self.area_ok
            && self.vertex_ok
            && self.euler_ok
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mark = |b: bool| if b { "ok" } else { "FAILED" };
        writeln!(f, "N = {}", self.n)?;
        writeln!(f, "congruent: {}", mark(self.congruent_ok))?;
        writeln!(f, "disjoint:  {}", mark(self.disjoint_ok))?;
        writeln!(f, "contained: {}", mark(self.contained_ok))?;
        writeln!(f, "area:      {}", mark(self.area_ok))?;
        writeln!(f, "vertices:  {}", mark(self.vertex_ok))?;
        writeln!(f, "euler:     {}", mark(self.euler_ok))?;
        let c = &self.census;
        writeln!(
            f,
            "census: N_b = {}, N_n = {}, N_s = {}, corner usage (P, Q, R) = ({}, {}, {})",
            c.boundary,
            c.nonstrict,
            c.strict_interior,
            c.corner_usage[0],
            c.corner_usage[1],
            c.corner_usage[2]
        )?;
        if let Some(d) = &self.dmatrix {
            writeln!(f, "d-matrix: {d}")?;
        }
        if !self.relations.is_empty() {
            let rel: Vec<String> = self.relations.iter().map(Relation::to_string).collect();
            writeln!(f, "relations: {}", rel.join("; "))?;
        }
        for msg in &self.failures {
            writeln!(f, "failure: {msg}")?;
        }
        Ok(())
    }
}

const MAX_LISTED: usize = 10;

/// Runs every check and collects the analysis data.
///
/// Fails only when coordinates mix two quadratic fields; every geometric
/// defect is reported through the booleans and `failures`.
pub fn verify(t: &Tiling) -> Result<Report> {
    if t.tiles.is_empty() {
        return Err(TilingError::Empty);
    }
    t.radicand()?;
    let mut failures = Vec::new();
    let n = t.n();

    if t.reference.is_degenerate() {
        failures.push("reference triangle is degenerate".to_string());
    }

    let shape = t.tile_shape();
    let mut congruent_ok = true;
    for (i, tile) in t.tiles.iter().enumerate() {
        if tile.is_degenerate() {
            congruent_ok = false;
            failures.push(format!("tile {i} is degenerate"));
        } else if shape_of(tile) != shape {
            congruent_ok = false;
            if failures.len() < MAX_LISTED {
                failures.push(format!("tile {i} is not congruent to tile 0"));
            }
        }
    }

    let overlaps = overlapping_pairs(t);
    let disjoint_ok = overlaps.is_empty();
    for (i, j) in overlaps.iter().take(MAX_LISTED) {
        failures.push(format!("tiles {i} and {j} overlap"));
    }

    let mut contained_ok = true;
    for (i, tile) in t.tiles.iter().enumerate() {
        if tile
            .v
            .iter()
            .any(|p| locate(p, &t.reference) == Location::Outside)
        {
            contained_ok = false;
            failures.push(format!("tile {i} leaves the reference triangle"));
        }
    }

    let total = t
        .tiles
        .iter()
        .fold(QuadNum::zero(), |acc, tile| acc + area2(tile));
    let area_ok = total == area2(&t.reference);
    if !area_ok {
        failures.push(format!(
            "tile areas sum to {} but the reference has {}",
            total,
            area2(&t.reference)
        ));
    }

    let incidence = Incidence::build(t);
    let mut vertex_ok = true;
    for (v, msg) in incidence.wedge_failures(t) {
        vertex_ok = false;
        if failures.len() < 4 * MAX_LISTED {
            failures.push(format!("vertex {v}: {msg}"));
        }
    }

    let census = incidence.census(t);
    let euler_ok = census.euler_holds(n);
    if !euler_ok {
        failures.push(format!(
            "Euler count fails: N - 1 = {} but N_b + N_n + 2 N_s = {}",
            n - 1,
            census.boundary + census.nonstrict + 2 * census.strict_interior
        ));
    }

    let mut report = Report {
        n,
        congruent_ok,
        disjoint_ok,
        contained_ok,
        area_ok,
        vertex_ok,
        euler_ok,
        census,
        dmatrix: None,
        relations: Vec::new(),
        failures,
    };
    if report.all_ok() {
        match compute_dmatrix(t) {
            Ok(d) => report.dmatrix = Some(d),
            Err(e) => report.failures.push(e.to_string()),
        }
        match relations(t) {
            Ok(r) => report.relations = r,
            Err(e) => report.failures.push(e.to_string()),
        }
    }
    Ok(report)
}

fn bboxes_meet(a: &(Point, Point), b: &(Point, Point)) -> bool {
    a.0.x <= b.1.x && b.0.x <= a.1.x && a.0.y <= b.1.y && b.0.y <= a.1.y
}

fn overlapping_pairs(t: &Tiling) -> Vec<(usize, usize)> {
    let boxes: Vec<_> = t.tiles.iter().map(Triangle::bbox).collect();
    let mut pairs: Vec<(usize, usize)> = (0..t.n())
        .into_par_iter()
        .flat_map_iter(|i| {
            let boxes = &boxes;
            (i + 1..t.n()).filter_map(move |j| {
                (bboxes_meet(&boxes[i], &boxes[j]) && interiors_overlap(&t.tiles[i], &t.tiles[j]))
                    .then_some((i, j))
            })
        })
        .collect();
    pairs.sort_unstable();
    pairs
}

/// Angular order of directions measured counter-clockwise from `base`.
fn angle_cmp(base: &Vector, u: &Vector, v: &Vector) -> Ordering {
    let half = |w: &Vector| {
        let c = base.cross(w).sign();
        if c > 0 || (c == 0 && base.dot(w).sign() > 0) {
            0
        } else {
            1
        }
    };
    half(u)
        .cmp(&half(v))
        .then_with(|| 0.cmp(&u.cross(v).sign()))
}

/// A counter-clockwise angular sector at a vertex, from `start` to `end`.
#[derive(Clone, Debug)]
struct Wedge {
    start: Vector,
    end: Vector,
}

/// Which tiles touch each vertex, and how.
struct Incidence {
    vertices: Vec<Point>,
    /// `(tile, corner index)` pairs with the vertex as a corner.
    corners: Vec<Vec<(usize, usize)>>,
    /// Tiles with the vertex inside one of their edges.
    straight: Vec<Vec<usize>>,
    /// Tiles with the vertex in their open interior.
    inside: Vec<Vec<usize>>,
}

impl Incidence {
    fn build(t: &Tiling) -> Self {
        let vertices = t.vertices();
        let index: HashMap<&Point, usize> =
            vertices.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let mut corners = vec![Vec::new(); vertices.len()];
        for (ti, tile) in t.tiles.iter().enumerate() {
            for (ci, p) in tile.v.iter().enumerate() {
                corners[index[p]].push((ti, ci));
            }
        }
        let boxes: Vec<_> = t.tiles.iter().map(Triangle::bbox).collect();
        let (straight, inside): (Vec<_>, Vec<_>) = vertices
            .par_iter()
            .map(|p| {
                let mut straight = Vec::new();
                let mut inside = Vec::new();
                let point_box = (p.clone(), p.clone());
                for (ti, tile) in t.tiles.iter().enumerate() {
                    if !bboxes_meet(&boxes[ti], &point_box) || tile.is_degenerate() {
                        continue;
                    }
                    match locate(p, tile) {
                        Location::EdgeInterior => straight.push(ti),
                        Location::Interior => inside.push(ti),
                        _ => {}
                    }
                }
                (straight, inside)
            })
            .unzip();
        Incidence {
            vertices,
            corners,
            straight,
            inside,
        }
    }

    fn wedges_at(&self, t: &Tiling, vi: usize) -> Vec<Wedge> {
        let p = &self.vertices[vi];
        let mut wedges = Vec::new();
        for &(ti, ci) in &self.corners[vi] {
            let tile = t.tiles[ti].ccw();
            let k = tile
                .index_of(&t.tiles[ti].v[ci])
                .expect("corner of its own tile");
            wedges.push(Wedge {
                start: tile.v[(k + 1) % 3].sub(p),
                end: tile.v[(k + 2) % 3].sub(p),
            });
        }
        for &ti in &self.straight[vi] {
            let tile = t.tiles[ti].ccw();
            let (a, b) = tile
                .edges()
                .into_iter()
                .find(|(a, b)| on_segment(p, a, b))
                .expect("edge through the vertex");
            wedges.push(Wedge {
                start: b.sub(p),
                end: a.sub(p),
            });
        }
        wedges
    }

    /// The sector the tiles must fill at vertex `vi`, or `None` for a full turn.
    fn required(&self, t: &Tiling, vi: usize) -> std::result::Result<Option<Wedge>, String> {
        let p = &self.vertices[vi];
        let r = t.reference.ccw();
        match locate(p, &r) {
            Location::Interior => Ok(None),
            Location::Vertex => {
                let k = r.index_of(p).expect("reference vertex");
                Ok(Some(Wedge {
                    start: r.v[(k + 1) % 3].sub(p),
                    end: r.v[(k + 2) % 3].sub(p),
                }))
            }
            Location::EdgeInterior => {
                let (a, b) = r
                    .edges()
                    .into_iter()
                    .find(|(a, b)| on_segment(p, a, b))
                    .expect("edge");
                Ok(Some(Wedge {
                    start: b.sub(p),
                    end: a.sub(p),
                }))
            }
            Location::Outside => Err("lies outside the reference triangle".to_string()),
        }
    }

    /// Vertices where the incident corners do not fill the required sector
    /// exactly once.
    fn wedge_failures(&self, t: &Tiling) -> Vec<(Point, String)> {
        let mut out = Vec::new();
        for vi in 0..self.vertices.len() {
            let p = &self.vertices[vi];
            if let Some(&ti) = self.inside[vi].first() {
                out.push((p.clone(), format!("lies inside tile {ti}")));
                continue;
            }
            let required = match self.required(t, vi) {
                Ok(r) => r,
                Err(msg) => {
                    out.push((p.clone(), msg));
                    continue;
                }
            };
            let mut wedges = self.wedges_at(t, vi);
            if wedges.iter().any(|w| w.start.is_zero() || w.end.is_zero()) {
                out.push((p.clone(), "degenerate corner".to_string()));
                continue;
            }
            if let Err(msg) = check_cover(&mut wedges, required.as_ref()) {
                out.push((p.clone(), msg));
            }
        }
        out
    }

    fn census(&self, t: &Tiling) -> VertexCensus {
        let mut c = VertexCensus::default();
        let r = &t.reference;
        for (vi, p) in self.vertices.iter().enumerate() {
            match locate(p, r) {
                Location::Vertex => {
                    for &(ti, ci) in &self.corners[vi] {
                        if let Some(class) = corner_class(&t.tiles[ti], ci) {
                            c.corner_usage[class] += 1;
                        }
                    }
                }
                Location::EdgeInterior => c.boundary += 1,
                Location::Interior if !self.straight[vi].is_empty() => c.nonstrict += 1,
                Location::Interior => c.strict_interior += 1,
                Location::Outside => {}
            }
        }
        c
    }
}

/// Class of the corner at `tile.v[ci]`, by the squared length of the opposite side.
fn corner_class(tile: &Triangle, ci: usize) -> Option<usize> {
    shape_of(tile).classify(&tile.opposite_sq(ci))
}

/// Checks that `wedges` tile the sector `required` (or the full turn) with no
/// gap and no overlap.
fn check_cover(wedges: &mut [Wedge], required: Option<&Wedge>) -> std::result::Result<(), String> {
    if wedges.is_empty() {
        return Err("no incident tiles".to_string());
    }
    let base = match required {
        Some(r) => r.start.clone(),
        None => wedges[0].start.clone(),
    };
    wedges.sort_by(|a, b| angle_cmp(&base, &a.start, &b.start));
    for pair in wedges.windows(2) {
        if pair[0].start.same_direction(&pair[1].start) {
            return Err("two corners start along the same ray".to_string());
        }
        if !pair[0].end.same_direction(&pair[1].start) {
            return Err("corners leave a gap or overlap".to_string());
        }
    }
    let first = &wedges[0];
    let last = &wedges[wedges.len() - 1];
    match required {
        None => {
            if !last.end.same_direction(&first.start) {
                return Err("corners do not close the full turn".to_string());
            }
        }
        Some(r) => {
            if !first.start.same_direction(&r.start) {
                return Err("gap at the start of the sector".to_string());
            }
            if !last.end.same_direction(&r.end) {
                return Err("corners do not end on the sector boundary".to_string());
            }
            if angle_cmp(&base, &last.start, &r.end) != Ordering::Less {
                return Err("corners overrun the sector".to_string());
            }
        }
    }
    Ok(())
}

/// Counts the vertices of a tiling by type.
pub fn vertex_census(t: &Tiling) -> VertexCensus {
    Incidence::build(t).census(t)
}

/// The reference sides as `(squared length, endpoints)` in d-matrix row order.
fn reference_sides(t: &Tiling) -> Vec<(QuadNum, Point, Point)> {
    let r = &t.reference.v;
    let mut sides: Vec<(QuadNum, Point, Point)> = (0..3)
        .map(|i| {
            let (p, q) = (r[i].clone(), r[(i + 1) % 3].clone());
            (p.dist2(&q), p, q)
        })
        .collect();
    sides.sort_by(|a, b| {
        a.0.cmp(&b.0).then_with(|| {
            let ka = std::cmp::min(&a.1, &a.2);
            let kb = std::cmp::min(&b.1, &b.2);
            ka.cmp(kb)
        })
    });
    sides
}

/// Counts tile edges of each class along each reference side.
pub fn compute_dmatrix(t: &Tiling) -> Result<DMatrix> {
    let shape = t.tile_shape();
    let mut rows = [[0u64; 3]; 3];
    for (i, (_, p, q)) in reference_sides(t).iter().enumerate() {
        for tile in &t.tiles {
            for (a, b) in tile.edges() {
                if on_segment(a, p, q) && on_segment(b, p, q) {
                    let class = shape.classify(&a.dist2(b)).ok_or_else(|| {
                        TilingError::Inconsistent(format!(
                            "boundary edge {a}-{b} matches no tile side"
                        ))
                    })?;
                    rows[i][class] += 1;
                }
            }
        }
    }
    Ok(DMatrix { rows })
}

/// An interior maximal segment with the tile edge classes abutting each side.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaxSegment {
    pub start: Point,
    pub end: Point,
    /// Edge counts `(a, b, c)` from tiles to the left of `start → end`.
    pub left: [i64; 3],
    pub right: [i64; 3],
}

#[derive(Clone, Debug)]
struct LineEdge {
    t0: QuadNum,
    t1: QuadNum,
    p0: Point,
    p1: Point,
    class: usize,
    left: bool,
}

/// Merges collinear tile edges into maximal segments and returns those not on
/// the boundary of the reference triangle.
pub fn maximal_segments(t: &Tiling) -> Result<Vec<MaxSegment>> {
    let shape = t.tile_shape();
    let mut lines: HashMap<(QuadNum, QuadNum, bool), Vec<LineEdge>> = HashMap::new();
    for tile in &t.tiles {
        for (k, (a, b)) in tile.edges().into_iter().enumerate() {
            let opposite = &tile.v[(k + 2) % 3];
            let d = b.sub(a);
            let (dir, vertical) = if d.x.is_zero() {
                (Vector::new(0, 1), true)
            } else {
                (
                    Vector {
                        x: QuadNum::one(),
                        y: &d.y / &d.x,
                    },
                    false,
                )
            };
            let offset = &dir.x * &a.y - &dir.y * &a.x;
            let param = |p: &Point| if vertical { p.y.clone() } else { p.x.clone() };
            let (ta, tb) = (param(a), param(b));
            let (t0, t1, p0, p1) = if ta < tb {
                (ta, tb, a.clone(), b.clone())
            } else {
                (tb, ta, b.clone(), a.clone())
            };
            let class = shape.classify(&a.dist2(b)).ok_or_else(|| {
                TilingError::Inconsistent(format!("edge {a}-{b} matches no tile side"))
            })?;
            let left = dir.cross(&opposite.sub(a)).sign() > 0;
            let key = (
                if vertical {
                    QuadNum::zero()
                } else {
                    dir.y.clone()
                },
                offset,
                vertical,
            );
            lines.entry(key).or_default().push(LineEdge {
                t0,
                t1,
                p0,
                p1,
                class,
                left,
            });
        }
    }

    let boundary = t.reference.edges();
    let on_boundary = |p: &Point, q: &Point| {
        boundary
            .iter()
            .any(|(a, b)| on_segment(p, a, b) && on_segment(q, a, b))
    };
    let mut out = Vec::new();
    for mut edges in lines.into_values() {
        edges.sort_by(|a, b| a.t0.cmp(&b.t0));
        let mut i = 0;
        while i < edges.len() {
            let mut seg = MaxSegment {
                start: edges[i].p0.clone(),
                end: edges[i].p1.clone(),
                left: [0; 3],
                right: [0; 3],
            };
            let mut reach = edges[i].t1.clone();
            let mut j = i;
            while j < edges.len() && edges[j].t0 <= reach {
                let e = &edges[j];
                if e.t1 > reach {
                    reach = e.t1.clone();
                    seg.end = e.p1.clone();
                }
                if e.left {
                    seg.left[e.class] += 1;
                } else {
                    seg.right[e.class] += 1;
                }
                j += 1;
            }
            if !on_boundary(&seg.start, &seg.end) {
                out.push(seg);
            }
            i = j;
        }
    }
    out.sort_by(|a, b| (&a.start, &a.end).cmp(&(&b.start, &b.end)));
    Ok(out)
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// Divides out the gcd and makes the first nonzero coefficient positive.
pub fn primitive(c: [i64; 3]) -> [i64; 3] {
    let g = c.iter().fold(0, |g, &x| gcd(g, x));
    if g == 0 {
        return c;
    }
    let sign = if c.iter().find(|&&x| x != 0).copied().unwrap_or(1) < 0 {
        -1
    } else {
        1
    };
    c.map(|x| sign * x / g)
}

/// Edge relations from maximal segments and angle relations from vertices and
/// the corners of the reference triangle, deduplicated and sorted.
pub fn relations(t: &Tiling) -> Result<Vec<Relation>> {
    let mut out = Vec::new();
    for seg in maximal_segments(t)? {
        let diff = [0, 1, 2].map(|i| seg.left[i] - seg.right[i]);
        if diff != [0; 3] {
            out.push(Relation::edge(primitive(diff)));
        }
    }

    let u = t.tile_shape().corner_vector();
    let incidence = Incidence::build(t);
    for (vi, p) in incidence.vertices.iter().enumerate() {
        let turns = match locate(p, &t.reference) {
            Location::Interior => 2,
            Location::EdgeInterior => 1,
            _ => continue,
        };
        let k = turns - incidence.straight[vi].len() as i64;
        let mut counts = [0i64; 3];
        for &(ti, ci) in &incidence.corners[vi] {
            let class = corner_class(&t.tiles[ti], ci).ok_or_else(|| {
                TilingError::Inconsistent(format!("corner at {p} matches no tile angle"))
            })?;
            counts[class] += 1;
        }
        if k > 0 && counts != u.map(|x| k * x) {
            out.push(Relation::angle(counts, k));
        }
    }
    let usage = incidence.census(t).corner_usage;
    if usage != u {
        out.push(Relation::angle(usage, 1));
    }
    out.sort();
    out.dedup();
    Ok(out)
}

/// A finite sum `Σ q_m √m` over distinct square-free `m`. Such sums are equal
/// exactly when their coefficients agree.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
struct SurdSum(BTreeMap<u64, Rational>);

impl SurdSum {
    /// `√q` for a nonnegative rational `q`.
    fn sqrt(q: &Rational) -> Result<Self> {
        let root = normalize_sqrt(q)?;
        Ok(Self::from_quad(&root))
    }

    fn from_quad(x: &QuadNum) -> Self {
        let mut s = SurdSum::default();
        s.add_term(1, x.rat().clone());
        s.add_term(x.radicand(), x.irr().clone());
        s
    }

    fn add_term(&mut self, m: u64, q: Rational) {
        if q.is_zero() {
            return;
        }
        let e = self.0.entry(m).or_insert_with(Rational::zero);
        *e += q;
        if e.is_zero() {
            self.0.remove(&m);
        }
    }

    fn add_scaled(&mut self, other: &SurdSum, k: u64) {
        for (m, q) in &other.0 {
            self.add_term(*m, q * Rational::from_integer(BigInt::from(k)));
        }
    }

    fn mul(&self, other: &SurdSum) -> Result<Self> {
        let mut out = SurdSum::default();
        for (m1, q1) in &self.0 {
            for (m2, q2) in &other.0 {
                let prod = Rational::from_integer(BigInt::from(*m1) * BigInt::from(*m2));
                let root = normalize_sqrt(&prod)?;
                let coeff = q1 * q2;
                out.add_term(1, root.rat() * &coeff);
                out.add_term(root.radicand(), root.irr() * &coeff);
            }
        }
        Ok(out)
    }
}

fn rational_square(x: &QuadNum) -> Result<&Rational> {
    x.as_rational()
        .filter(|q| !q.is_negative())
        .ok_or_else(|| TilingError::IrrationalLength(x.to_string()))
}

fn side_lengths(s: &Shape) -> Result<Vec<SurdSum>> {
    s.sq_sides
        .iter()
        .map(|x| SurdSum::sqrt(rational_square(x)?))
        .collect()
}

/// Checks `d · (a, b, c) = (X, Y, Z)`: the tile edges counted along each side
/// of the reference triangle add up to its length.
pub fn boundary_lengths_match(t: &Tiling) -> Result<bool> {
    let d = compute_dmatrix(t)?;
    let abc = side_lengths(&t.tile_shape())?;
    let xyz = side_lengths(&shape_of(&t.reference))?;
    Ok((0..3).all(|i| {
        let mut row = SurdSum::default();
        for (side, &count) in abc.iter().zip(&d.rows[i]) {
            row.add_scaled(side, count);
        }
        row == xyz[i]
    }))
}

/// Checks `d · (a, b, c) = (X, Y, Z) = √N · (a, b, c)` exactly for a tile
/// similar to the reference triangle.
pub fn eigen_check(t: &Tiling) -> Result<bool> {
    let tile = t.tile_shape();
    let reference = shape_of(&t.reference);
    if !tile.similar_to(&reference) {
        return Err(TilingError::NotSimilar);
    }
    if !boundary_lengths_match(t)? {
        return Ok(false);
    }
    let abc = side_lengths(&tile)?;
    let xyz = side_lengths(&reference)?;
    let root_n = SurdSum::sqrt(&Rational::from_integer(BigInt::from(t.n())))?;
    for i in 0..3 {
        if root_n.mul(&abc[i])? != xyz[i] {
            return Ok(false);
        }
    }
    Ok(true)
}

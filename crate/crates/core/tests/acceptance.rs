//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Runs without the libtest harness so the summary lines always reach stdout.
//! Every comparison is exact; the only pinned tolerance is the sample size of
//! the coverage oracle.

mod common;

use std::collections::HashSet;
use std::process::ExitCode;
use std::time::Instant;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use tritile::classifier::{
    self, classify, describe, is_sum_two_squares, totient_preimage, TileDescriptor,
};
use tritile::exact::QuadNum;
use tritile::generators::{self, flippable_pairs, rect_flip};
use tritile::geometry::Point;
use tritile::tiling::{
    compute_dmatrix, eigen_check, relations, verify, vertex_census, Relation, Report,
};
use tritile::{Tiling, Triangle};

use common::*;

/// Random points drawn per tiling by the coverage oracle.
const COVERAGE_SAMPLES: usize = 1000;
/// Upper bound for the exhaustive sum-of-two-squares and exclusion checks.
const NUMBER_THEORY_LIMIT: u64 = 100_000;
/// Bound on x, y, z for x² + y² = 3z².
const TRIPLE_LIMIT: u64 = 200;
/// Longest random rect_flip sequence.
const MAX_FLIPS: usize = 10;
/// Random compose pairs checked for the count law.
const COMPOSE_PAIRS: usize = 20;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);
type Mutation = (&'static str, Tiling, fn(&Report) -> bool);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn report_of(name: &str, t: &Tiling) -> Result<Report, String> {
    verify(t).map_err(|e| format!("{name}: {e}"))
}

fn criterion_1() -> Outcome {
    let expected: Vec<usize> = (1..=8usize)
        .map(|n| n * n)
        .chain([5, 13, 74])
        .chain([3, 12, 27, 48, 75])
        .chain([50])
        .collect();
    let got: Vec<usize> = family_tilings().iter().map(|(_, t)| t.n()).collect();
    ensure(got == expected, || {
        format!("counts {got:?}, expected {expected:?}")
    })?;
    Ok(format!("{} family counts match", got.len()))
}

fn mutate(t: &Tiling, f: impl FnOnce(&mut Vec<Triangle>)) -> Tiling {
    let mut m = t.clone();
    f(&mut m.tiles);
    m
}

/// Moves tile `i` a little across an edge it shares with another tile.
fn nudge_toward_neighbour(tiles: &[Triangle], i: usize) -> Triangle {
    let tile = &tiles[i];
    let neighbour = tiles
        .iter()
        .enumerate()
        .find(|(j, other)| {
            *j != i
                && tile
                    .v
                    .iter()
                    .filter(|p| other.index_of(p).is_some())
                    .count()
                    == 2
        })
        .map(|(_, other)| other)
        .expect("every tile of a multi-tile tiling has an edge neighbour");
    let step = neighbour
        .centroid()
        .sub(&tile.centroid())
        .scale(&QuadNum::from_ratio(1, 100));
    Triangle {
        v: tile.v.clone().map(|p| p.add(&step)),
    }
}

fn criterion_2() -> Outcome {
    let mut all = family_tilings();
    all.extend(catalog_tilings());
    for (name, t) in &all {
        let r = report_of(name, t)?;
        ensure(r.all_ok(), || format!("{name} fails verification:\n{r}"))?;
    }

    let bases = [
        (
            "quadratic(3)",
            generators::quadratic(&generic_triangle(), 3).unwrap(),
        ),
        ("biquadratic(2,3)", generators::biquadratic(2, 3).unwrap()),
        ("hexagonal(1)", generators::hexagonal(1).unwrap()),
    ];
    let mut mutations = 0;
    for (name, base) in &bases {
        let mid = base.n() / 2;
        let last = base.n() - 1;
        let shifted = mutate(base, |ts| ts[mid] = nudge_toward_neighbour(ts, mid));
        let scaled = mutate(base, |ts| {
            let c = ts[mid].centroid();
            let k = QuadNum::from_ratio(1, 2);
            ts[mid].v = ts[mid].v.clone().map(|p| c.add(&p.sub(&c).scale(&k)));
        });
        let deleted = mutate(base, |ts| {
            ts.remove(mid);
        });
        let duplicated = mutate(base, |ts| ts.push(ts[mid].clone()));
        let swapped = mutate(base, |ts| {
            let v0 = ts[0].v[0].clone();
            ts[0].v[0] = ts[last].v[0].clone();
            ts[last].v[0] = v0;
        });
        // Slide the apex parallel to the opposite side: same area, new shape.
        let sheared = mutate(base, |ts| {
            let [a, b, c] = ts[mid].v.clone();
            ts[mid].v = [
                a.clone(),
                b.clone(),
                c.add(&b.sub(&a).scale(&QuadNum::from_ratio(1, 3))),
            ];
        });
        let cases: [Mutation; 6] = [
            ("shift", shifted, |r| r.disjoint_ok),
            ("scale", scaled, |r| r.congruent_ok),
            ("delete", deleted, |r| r.area_ok),
            ("duplicate", duplicated, |r| r.disjoint_ok),
            ("swap vertex", swapped, |r| r.vertex_ok),
            ("wrong shape", sheared, |r| r.congruent_ok),
        ];
        for (label, t, flag) in cases {
            let r = report_of(name, &t)?;
            ensure(!flag(&r) && !r.all_ok(), || {
                format!("{label} mutation of {name} was not rejected by its check:\n{r}")
            })?;
            mutations += 1;
        }
    }
    Ok(format!(
        "{} tilings verify; {mutations} mutations rejected",
        all.len()
    ))
}

fn criterion_3() -> Outcome {
    let d = compute_dmatrix(&generators::biquadratic(1, 2).unwrap()).map_err(|e| e.to_string())?;
    ensure(d.rows == [[0, 0, 1], [0, 0, 2], [1, 2, 0]], || {
        format!("biquadratic(1,2): {d}")
    })?;
    let nine = generators::catalog("nine_nonstandard").unwrap().tiling;
    let d = compute_dmatrix(&nine).map_err(|e| e.to_string())?;
    ensure(d.rows == [[1, 1, 0], [2, 2, 0], [0, 0, 3]], || {
        format!("nine_nonstandard: {d}")
    })?;
    for n in 1..=8u64 {
        let t = generators::quadratic(&generic_triangle(), n as u32).unwrap();
        let d = compute_dmatrix(&t).map_err(|e| e.to_string())?;
        ensure(d.rows == [[n, 0, 0], [0, n, 0], [0, 0, n]], || {
            format!("quadratic({n}): {d}")
        })?;
    }
    Ok("golden d-matrices match".into())
}

fn criterion_4() -> Outcome {
    let mut all = family_tilings();
    all.extend(catalog_tilings());
    all.extend(other_generated());
    for (name, t) in &all {
        let c = vertex_census(t);
        ensure(c.euler_holds(t.n()), || format!("{name}: {c:?}"))?;
    }
    let flippable = [
        (
            "quadratic(right isosceles, 4)",
            generators::quadratic(&tri([(0, 0), (4, 0), (0, 4)]), 4).unwrap(),
        ),
        ("biquadratic(2,3)", generators::biquadratic(2, 3).unwrap()),
        (
            "pythagorean(3,4,5)",
            generators::pythagorean(3, 4, 5).unwrap(),
        ),
        (
            "nine_nonstandard",
            generators::catalog("nine_nonstandard").unwrap().tiling,
        ),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut flips = 0;
    for (name, base) in &flippable {
        for _ in 0..3 {
            let mut t = base.clone();
            let steps = rng.gen_range(1..=MAX_FLIPS);
            for _ in 0..steps {
                let pairs = flippable_pairs(&t);
                let Some(&(i, j)) = pairs.choose(&mut rng) else {
                    break;
                };
                t = rect_flip(&t, i, j).map_err(|e| e.to_string())?;
                flips += 1;
                let r = report_of(name, &t)?;
                ensure(r.all_ok() && r.euler_ok, || {
                    format!("{name} after flips:\n{r}")
                })?;
            }
        }
    }
    Ok(format!(
        "{} tilings and {flips} random flips satisfy N - 1 = N_b + N_n + 2 N_s",
        all.len()
    ))
}

fn criterion_5() -> Outcome {
    let s5 = QuadNum::sqrt_int(5).unwrap();
    let abc = [QuadNum::from_int(1), QuadNum::from_int(2), s5.clone()];
    let d = [[0i64, 0, 1], [0, 0, 2], [1, 2, 0]];
    for i in 0..3 {
        let row = (0..3).fold(QuadNum::zero(), |acc, j| {
            acc + QuadNum::from_int(d[i][j]) * &abc[j]
        });
        ensure(row == &s5 * &abc[i], || format!("row {i} gives {row}"))?;
    }

    let three = generators::right_306090_three(&tritile::exact::ratio(1, 1)).unwrap();
    let mut similar: Vec<(String, Tiling)> = Vec::new();
    for n in 1..=5 {
        similar.push((
            format!("quadratic({n})"),
            generators::quadratic(&generic_triangle(), n).unwrap(),
        ));
        similar.push((
            format!("quadratic 30-60-90 ({n})"),
            generators::quadratic(&triangle_306090(), n).unwrap(),
        ));
    }
    for (m, n) in [(1, 2), (2, 3), (5, 7), (1, 1), (3, 4)] {
        similar.push((
            format!("biquadratic({m},{n})"),
            generators::biquadratic(m, n).unwrap(),
        ));
    }
    similar.push(("right_306090_three".into(), three.clone()));
    for m in 1..=3 {
        let base = generators::quadratic(&triangle_306090(), m).unwrap();
        similar.push((
            format!("triple_square({m})"),
            generators::compose(&base, &three).unwrap(),
        ));
    }
    similar.extend(catalog_tilings());
    for (name, t) in &similar {
        let ok = eigen_check(t).map_err(|e| format!("{name}: {e}"))?;
        ensure(ok, || format!("eigen relation fails for {name}"))?;
    }
    Ok(format!(
        "d·(a,b,c) = √N·(a,b,c) on {} similar-tile tilings",
        similar.len()
    ))
}

fn criterion_6() -> Outcome {
    let rel = relations(&generators::biquadratic(1, 2).unwrap()).map_err(|e| e.to_string())?;
    ensure(rel.contains(&Relation::angle([2, 2, 0], 1)), || {
        format!("biquadratic(1,2): {rel:?}")
    })?;
    ensure(rel.contains(&Relation::edge([2, -1, 0])), || {
        format!("biquadratic(1,2): {rel:?}")
    })?;
    let nq = generators::catalog("nonquadratic_3a2b").unwrap().tiling;
    let rel = relations(&nq).map_err(|e| e.to_string())?;
    ensure(rel.contains(&Relation::edge([3, -2, 0])), || {
        format!("nonquadratic_3a2b: {rel:?}")
    })?;
    for n in 1..=6 {
        let rel = relations(&generators::quadratic(&generic_triangle(), n).unwrap())
            .map_err(|e| e.to_string())?;
        ensure(rel.is_empty(), || {
            format!("quadratic({n}) of the generic triangle: {rel:?}")
        })?;
    }
    Ok("2α + 2β = π, 2a - b = 0, 3a - 2b = 0 found; generic quadratic has none".into())
}

fn criterion_7() -> Outcome {
    let limit = NUMBER_THEORY_LIMIT;
    let mut squares = vec![false; limit as usize + 1];
    let mut e = 0u64;
    while e * e <= limit {
        let mut f = e;
        while e * e + f * f <= limit {
            squares[(e * e + f * f) as usize] = true;
            f += 1;
        }
        e += 1;
    }
    let bad: Vec<u64> = (0..=limit)
        .into_par_iter()
        .filter(|&n| is_sum_two_squares(n) != squares[n as usize])
        .collect();
    ensure(bad.is_empty(), || {
        format!(
            "sum-of-two-squares disagrees at {:?}",
            &bad[..bad.len().min(5)]
        )
    })?;
    ensure(totient_preimage(4) == [5, 8, 10, 12], || {
        format!("{:?}", totient_preimage(4))
    })?;
    ensure(totient_preimage(8) == [15, 16, 20, 24, 30], || {
        format!("{:?}", totient_preimage(8))
    })?;
    ensure(is_sum_two_squares(1989), || "1989".into())?;
    let z_limit = TRIPLE_LIMIT;
    let threes: HashSet<u64> = (1..=z_limit).map(|z| 3 * z * z).collect();
    for x in 1..=z_limit {
        for y in x..=z_limit {
            ensure(!threes.contains(&(x * x + y * y)), || {
                format!("{x}² + {y}² = 3z²")
            })?;
        }
    }
    Ok(format!(
        "sum of two squares exact for N <= {limit}; totient preimages; no x² + y² = 3z²"
    ))
}

fn criterion_8() -> Outcome {
    let mut all = family_tilings();
    all.extend(catalog_tilings());
    all.extend(other_generated());
    for (name, t) in &all {
        let (tile, target) = describe(t);
        let v = classify(tile, target, t.n() as u64);
        ensure(v.is_admissible(), || {
            format!("{name} ({tile:?}, {target:?}): {v}")
        })?;
        let w = v
            .witness
            .as_ref()
            .ok_or_else(|| format!("{name}: no witness ({v})"))?;
        let built = w.realize().map_err(|e| format!("{name}: {e}"))?;
        ensure(built.n() == t.n(), || {
            format!("{name}: witness built {} tiles", built.n())
        })?;
    }
    for n in 1..=100u64 {
        let v = classifier::classify_similar(TileDescriptor::ObliqueOther, n);
        let square = [1, 4, 9, 16, 25, 36, 49, 64, 81, 100].contains(&n);
        ensure(v.is_admissible() == square, || {
            format!("ObliqueOther, N = {n}: {v}")
        })?;
    }
    Ok(format!(
        "{} generated tilings classified admissible; oblique tiles need square N",
        all.len()
    ))
}

/// Pairs `(base, sub)` where the sub-tiling's reference matches the base tile.
fn compose_candidates(rng: &mut ChaCha8Rng) -> (String, Tiling, Tiling) {
    let one = tritile::exact::ratio(1, 1);
    let small = |rng: &mut ChaCha8Rng| rng.gen_range(1..=3u32);
    match rng.gen_range(0..6) {
        0 => {
            let (a, b) = (small(rng), small(rng));
            let base = generators::quadratic(&generic_triangle(), a).unwrap();
            let sub = generators::quadratic(&base.tiles[0], b).unwrap();
            (format!("quadratic({a}) ∘ quadratic({b})"), base, sub)
        }
        1 => {
            let (m, n) = (small(rng), small(rng));
            let base = generators::biquadratic(m, n).unwrap();
            let sub = generators::biquadratic(m, n).unwrap();
            (format!("biquadratic({m},{n})²"), base, sub)
        }
        2 => {
            let a = small(rng);
            let base = generators::quadratic(&triangle_306090(), a).unwrap();
            let sub = generators::right_306090_three(&one).unwrap();
            (format!("quadratic 30-60-90 ({a}) ∘ three"), base, sub)
        }
        3 => {
            let k = rng.gen_range(0..=1u32);
            let b = small(rng);
            let base = generators::hexagonal(k).unwrap();
            let sub =
                generators::quadratic(&TileDescriptor::Isosceles3030120.canonical_triangle(), b)
                    .unwrap();
            (format!("hexagonal({k}) ∘ quadratic({b})"), base, sub)
        }
        4 => {
            let b = small(rng);
            let base = generators::equilateral_six(&one).unwrap();
            let sub = generators::quadratic(&triangle_306090(), b).unwrap();
            (format!("equilateral_six ∘ quadratic({b})"), base, sub)
        }
        _ => {
            let base = generators::biquadratic(1, 2).unwrap();
            let sub = generators::catalog("nine_nonstandard").unwrap().tiling;
            ("biquadratic(1,2) ∘ nine_nonstandard".into(), base, sub)
        }
    }
}

fn criterion_9() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for _ in 0..COMPOSE_PAIRS {
        let (name, base, sub) = compose_candidates(&mut rng);
        let c = generators::compose(&base, &sub).map_err(|e| format!("{name}: {e}"))?;
        ensure(c.n() == base.n() * sub.n(), || {
            format!("{name}: {} tiles", c.n())
        })?;
        let r = report_of(&name, &c)?;
        ensure(r.all_ok(), || format!("{name} does not verify:\n{r}"))?;
    }
    let abc = generic_triangle();
    let base = generators::quadratic(&abc, 2).unwrap();
    let sub = generators::quadratic(&base.tiles[0], 3).unwrap();
    let composed = generators::compose(&base, &sub).map_err(|e| e.to_string())?;
    let direct = generators::quadratic(&abc, 6).unwrap();
    ensure(composed.triangle_set() == direct.triangle_set(), || {
        "compose(quadratic(2), quadratic(3)) differs from quadratic(6)".into()
    })?;
    Ok(format!(
        "{COMPOSE_PAIRS} random compositions multiply counts; 2∘3 = 6 as triangle sets"
    ))
}

fn coverage(name: &str, t: &Tiling, seed: u64) -> Result<(), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let in_reference: Vec<Point> = (0..COVERAGE_SAMPLES)
        .map(|_| random_point_in(&t.reference, &mut rng))
        .collect();
    let in_tiles: Vec<Point> = (0..COVERAGE_SAMPLES)
        .map(|_| {
            let k = rng.gen_range(0..t.n());
            random_point_in(&t.tiles[k], &mut rng)
        })
        .collect();
    let boxes = TileBoxes::new(t);
    if let Some(p) = in_reference
        .par_iter()
        .find_any(|p| boxes.closures_containing(t, p) == 0)
    {
        return Err(format!("{name}: {p} is in no tile"));
    }
    if let Some(p) = in_tiles
        .par_iter()
        .find_any(|p| boxes.closures_containing(t, p) != 1)
    {
        return Err(format!(
            "{name}: tile-interior point {p} is in {} tiles",
            boxes.closures_containing(t, p)
        ));
    }
    Ok(())
}

fn criterion_10() -> Outcome {
    let mut all = family_tilings();
    all.extend(catalog_tilings());
    all.extend(other_generated());
    for (i, (name, t)) in all.iter().enumerate() {
        let r = report_of(name, t)?;
        ensure(r.all_ok(), || format!("{name} does not verify"))?;
        coverage(name, t, i as u64)?;
    }
    Ok(format!(
        "{} tilings, {COVERAGE_SAMPLES} + {COVERAGE_SAMPLES} points each",
        all.len()
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("family counts", criterion_1),
        ("verifier soundness", criterion_2),
        ("d-matrix golden values", criterion_3),
        ("Euler equation", criterion_4),
        ("eigenvalue relation", criterion_5),
        ("edge and angle relations", criterion_6),
        ("number theory", criterion_7),
        ("classifier consistency", criterion_8),
        ("composition laws", criterion_9),
        ("coverage oracle", criterion_10),
    ];
    let mut failed = 0;
    for (i, (label, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!(
                "criterion {:>2} PASS  {label}: {detail} ({secs:.1}s)",
                i + 1
            ),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {label}: {why} ({secs:.1}s)", i + 1);
            }
        }
    }
    println!(
        "acceptance: {}/{} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

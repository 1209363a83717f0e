//! SVG output. This is the only place coordinates become floats.

use std::fmt::Write;

use tritile::{Point, Tiling};

const WIDTH: f64 = 800.0;
const MARGIN: f64 = 10.0;
const PALETTE: [&str; 6] = [
    "#8dd3c7", "#ffffb3", "#bebada", "#fb8072", "#80b1d3", "#fdb462",
];

pub fn render(t: &Tiling, show_vertices: bool) -> String {
    let pts: Vec<(f64, f64)> = t
        .reference
        .v
        .iter()
        .map(|p| (p.x.to_f64(), p.y.to_f64()))
        .collect();
    let (min_x, max_x) = bounds(pts.iter().map(|p| p.0));
    let (min_y, max_y) = bounds(pts.iter().map(|p| p.1));
    let scale = (WIDTH - 2.0 * MARGIN) / (max_x - min_x).max(f64::MIN_POSITIVE);
    let height = (max_y - min_y) * scale + 2.0 * MARGIN;
    let map = |p: &Point| {
        (
            (p.x.to_f64() - min_x) * scale + MARGIN,
            (max_y - p.y.to_f64()) * scale + MARGIN,
        )
    };
    let points = |v: &[Point]| {
        v.iter()
            .map(|p| {
                let (x, y) = map(p);
                format!("{x},{y}")
            })
            .collect::<Vec<_>>()
            .join(" ")
    };

    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{WIDTH}\" height=\"{height}\" viewBox=\"0 0 {WIDTH} {height}\">"
    );
    out.push_str("<g id=\"tiles\" stroke=\"#333333\" stroke-width=\"1\">\n");
    for (i, tile) in t.tiles.iter().enumerate() {
        let _ = writeln!(
            out,
            "<polygon points=\"{}\" fill=\"{}\"/>",
            points(&tile.v),
            PALETTE[i % PALETTE.len()]
        );
    }
    out.push_str("</g>\n");
    let _ = writeln!(
        out,
        "<polygon id=\"reference\" points=\"{}\" fill=\"none\" stroke=\"#000000\" stroke-width=\"2\"/>",
        points(&t.reference.v)
    );
    if show_vertices {
        out.push_str("<g id=\"vertices\" fill=\"#000000\">\n");
        for p in t.vertices() {
            let (x, y) = map(&p);
            let _ = writeln!(out, "<circle cx=\"{x}\" cy=\"{y}\" r=\"2.5\"/>");
        }
        out.push_str("</g>\n");
    }
    out.push_str("</svg>\n");
    out
}

fn bounds(values: impl Iterator<Item = f64>) -> (f64, f64) {
    values.fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), v| {
        (lo.min(v), hi.max(v))
    })
}

//! The g-vector scatter: collection, planar projection, CSV and SVG output.
//!
//! Every g-vector has coordinate sum 1, so the set lives in the plane
//! `x + y + z = 1`; points are projected onto the orthonormal basis
//! `u = (1,-1,0)/sqrt(2)`, `v = (1,1,-2)/sqrt(6)` centered at `(1/3,1/3,1/3)`.
//! All output is sorted and fixed-precision, hence byte-deterministic.

use std::collections::BTreeSet;
use std::fmt::Write;

use markov_cluster::{enumerate, g_matrix, FareyError, ParityClass};
use num_bigint::BigInt;
use num_traits::ToPrimitive;

/// All distinct g-vectors on triples up to `depth`, in lexicographic order.
pub fn gvector_points(depth: usize) -> Result<Vec<[BigInt; 3]>, FareyError> {
    let mut points = BTreeSet::new();
    for (triple, _) in enumerate(depth)? {
        let g = g_matrix(&triple)?;
        for class in ParityClass::ALL {
            points.insert(g.column(class));
        }
    }
    Ok(points.into_iter().collect())
}

/// Projects a lattice point of the plane into `(px, py)` coordinates.
pub fn project(point: &[BigInt; 3]) -> (f64, f64) {
    let centered: Vec<f64> = point
        .iter()
        .map(|c| c.to_f64().expect("g-vector entries are far below f64 range") - 1.0 / 3.0)
        .collect();
    let px = (centered[0] - centered[1]) / 2f64.sqrt();
    let py = (centered[0] + centered[1] - 2.0 * centered[2]) / 6f64.sqrt();
    (px, py)
}

/// `gx,gy,gz,px,py` per point: the exact vector, then its projection.
pub fn render_csv(points: &[[BigInt; 3]]) -> String {
    let mut out = String::from("gx,gy,gz,px,py\n");
    for point in points {
        let (px, py) = project(point);
        writeln!(out, "{},{},{},{px:.6},{py:.6}", point[0], point[1], point[2])
            .expect("writing to a string");
    }
    out
}

/// A dependency-free scatter plot: fitted viewbox, the two projection axes,
/// one circle per point. The vertical axis is flipped because SVG y grows
/// downward.
pub fn render_svg(points: &[[BigInt; 3]]) -> String {
    let projected: Vec<(f64, f64)> = points.iter().map(project).collect();
    let min_x = projected.iter().map(|p| p.0).fold(f64::INFINITY, f64::min);
    let max_x = projected.iter().map(|p| p.0).fold(f64::NEG_INFINITY, f64::max);
    let min_y = projected.iter().map(|p| -p.1).fold(f64::INFINITY, f64::min);
    let max_y = projected.iter().map(|p| -p.1).fold(f64::NEG_INFINITY, f64::max);
    let span = (max_x - min_x).max(max_y - min_y).max(1.0);
    let pad = span * 0.08;
    let (left, top) = (min_x - pad, min_y - pad);
    let (width, height) = (max_x - min_x + 2.0 * pad, max_y - min_y + 2.0 * pad);
    let radius = span * 0.008 + 0.01;

    let mut out = String::new();
    writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"{left:.6} {top:.6} {width:.6} {height:.6}\">"
    )
    .expect("writing to a string");
    writeln!(
        out,
        "  <line x1=\"{:.6}\" y1=\"0\" x2=\"{:.6}\" y2=\"0\" stroke=\"#999\" stroke-width=\"{:.6}\"/>",
        left,
        left + width,
        radius / 2.0
    )
    .expect("writing to a string");
    writeln!(
        out,
        "  <line x1=\"0\" y1=\"{:.6}\" x2=\"0\" y2=\"{:.6}\" stroke=\"#999\" stroke-width=\"{:.6}\"/>",
        top,
        top + height,
        radius / 2.0
    )
    .expect("writing to a string");
    for (px, py) in &projected {
        writeln!(
            out,
            "  <circle cx=\"{px:.6}\" cy=\"{:.6}\" r=\"{radius:.6}\" fill=\"#222\"/>",
            -py
        )
        .expect("writing to a string");
    }
    out.push_str("</svg>\n");
    out
}

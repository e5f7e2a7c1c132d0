//! Self-intersections of a closed polyline: all-pairs segment tests pruned
//! by a spatial hash grid, refined by bisection on the exact evaluator.

use std::collections::{HashMap, HashSet};

use crate::geometry::curve::{refine_samples, PlanarCurve, MAX_TANGENT_TURN};

/// A transversal self-crossing: the two curve parameters and the point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CurveIntersection {
    pub s: f64,
    pub t: f64,
    pub point: [f64; 2],
}

type Point = [f64; 2];

fn sub(p: Point, q: Point) -> Point {
    [p[0] - q[0], p[1] - q[1]]
}

fn cross(p: Point, q: Point) -> f64 {
    p[0] * q[1] - p[1] * q[0]
}

/// Transversal intersection of segments p0→p1 and q0→q1, endpoint-inclusive.
/// Near-parallel pairs are rejected; touching at endpoints counts (the
/// caller deduplicates).
fn segment_intersection(p0: Point, p1: Point, q0: Point, q1: Point) -> Option<(f64, f64)> {
    let d1 = sub(p1, p0);
    let d2 = sub(q1, q0);
    let denom = cross(d1, d2);
    let scale = (d1[0].abs() + d1[1].abs()) * (d2[0].abs() + d2[1].abs());
    if denom.abs() <= 1e-14 * scale.max(1e-300) {
        return None;
    }
    let r = sub(q0, p0);
    let s = cross(r, d2) / denom;
    let t = cross(r, d1) / denom;
    let eps = 1e-9;
    if (-eps..=1.0 + eps).contains(&s) && (-eps..=1.0 + eps).contains(&t) {
        Some((s, t))
    } else {
        None
    }
}

fn bbox(p: Point, q: Point) -> (Point, Point) {
    (
        [p[0].min(q[0]), p[1].min(q[1])],
        [p[0].max(q[0]), p[1].max(q[1])],
    )
}

/// Find all transversal self-crossings of a closed curve. The polyline is
/// refined to the tangent-turn threshold first, so every small loop is
/// covered by many segments; each hit is then narrowed to 1e-9 in
/// parameter by bisection on the exact evaluator.
pub fn self_intersections(curve: &PlanarCurve) -> Vec<CurveIntersection> {
    let mut samples = curve.samples().to_vec();
    let eval = curve.evaluator();
    refine_samples(&mut samples, eval.as_ref(), MAX_TANGENT_TURN, curve.closed());

    let nseg = samples.len().saturating_sub(1);
    if nseg < 3 {
        return Vec::new();
    }

    // Spatial hash with cell size of the median segment length.
    let mut lengths: Vec<f64> = samples
        .windows(2)
        .map(|w| {
            let d = sub(w[1].1, w[0].1);
            (d[0] * d[0] + d[1] * d[1]).sqrt()
        })
        .collect();
    lengths.sort_by(f64::total_cmp);
    let cell = lengths[lengths.len() / 2].max(1e-12);

    let mut grid: HashMap<(i64, i64), Vec<usize>> = HashMap::new();
    for i in 0..nseg {
        let (lo, hi) = bbox(samples[i].1, samples[i + 1].1);
        let ix0 = (lo[0] / cell).floor() as i64;
        let ix1 = (hi[0] / cell).floor() as i64;
        let iy0 = (lo[1] / cell).floor() as i64;
        let iy1 = (hi[1] / cell).floor() as i64;
        for ix in ix0..=ix1 {
            for iy in iy0..=iy1 {
                grid.entry((ix, iy)).or_default().push(i);
            }
        }
    }

    let adjacent = |i: usize, j: usize| -> bool {
        let (i, j) = (i.min(j), i.max(j));
        j == i + 1 || (curve.closed() && i == 0 && j == nseg - 1)
    };

    let mut seen: HashSet<(usize, usize)> = HashSet::new();
    let mut raw_hits: Vec<(usize, usize, f64, f64)> = Vec::new();
    for bucket in grid.values() {
        for (a, &i) in bucket.iter().enumerate() {
            for &j in bucket.iter().skip(a + 1) {
                let (i, j) = (i.min(j), i.max(j));
                if i == j || adjacent(i, j) || !seen.insert((i, j)) {
                    continue;
                }
                if let Some((s_loc, t_loc)) =
                    segment_intersection(samples[i].1, samples[i + 1].1, samples[j].1, samples[j + 1].1)
                {
                    let s = samples[i].0 + s_loc * (samples[i + 1].0 - samples[i].0);
                    let t = samples[j].0 + t_loc * (samples[j + 1].0 - samples[j].0);
                    raw_hits.push((i, j, s, t));
                }
            }
        }
    }

    // Narrow each hit on the exact curve, then deduplicate crossings found
    // through more than one segment pair.
    let mut found: Vec<CurveIntersection> = Vec::new();
    for (i, j, _s, _t) in raw_hits {
        let window_a = (samples[i].0, samples[i + 1].0);
        let window_b = (samples[j].0, samples[j + 1].0);
        if let Some(hit) = bisect_crossing(eval.as_ref(), window_a, window_b) {
            let duplicate = found.iter().any(|prev| {
                param_close(prev.s, hit.s) && param_close(prev.t, hit.t)
            });
            if !duplicate {
                found.push(hit);
            }
        }
    }
    found.sort_by(|a, b| (a.s, a.t).partial_cmp(&(b.s, b.t)).unwrap());
    found
}

fn param_close(a: f64, b: f64) -> bool {
    let d = (a - b).abs();
    d.min(1.0 - d) < 1e-5
}

fn bisect_crossing(
    eval: &(dyn Fn(f64) -> [f64; 2] + Send + Sync),
    mut wa: (f64, f64),
    mut wb: (f64, f64),
) -> Option<CurveIntersection> {
    for _ in 0..64 {
        if wa.1 - wa.0 <= 1e-9 && wb.1 - wb.0 <= 1e-9 {
            break;
        }
        let ma = 0.5 * (wa.0 + wa.1);
        let mb = 0.5 * (wb.0 + wb.1);
        let halves_a = [(wa.0, ma), (ma, wa.1)];
        let halves_b = [(wb.0, mb), (mb, wb.1)];
        let mut advanced = false;
        'outer: for ha in halves_a {
            for hb in halves_b {
                let p0 = eval(ha.0);
                let p1 = eval(ha.1);
                let q0 = eval(hb.0);
                let q1 = eval(hb.1);
                if segment_intersection(p0, p1, q0, q1).is_some() {
                    wa = ha;
                    wb = hb;
                    advanced = true;
                    break 'outer;
                }
            }
        }
        if !advanced {
            // Tangential contact lost under subdivision: not transversal.
            return None;
        }
    }
    let p0 = eval(wa.0);
    let p1 = eval(wa.1);
    let q0 = eval(wb.0);
    let q1 = eval(wb.1);
    let (s_loc, t_loc) = segment_intersection(p0, p1, q0, q1)?;
    let s = wa.0 + s_loc * (wa.1 - wa.0);
    let t = wb.0 + t_loc * (wb.1 - wb.0);
    let ps = eval(s);
    let pt = eval(t);
    Some(CurveIntersection {
        s,
        t,
        point: [0.5 * (ps[0] + pt[0]), 0.5 * (ps[1] + pt[1])],
    })
}

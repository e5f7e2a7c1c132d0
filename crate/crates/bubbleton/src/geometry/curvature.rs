//! Finite-difference mean curvature of a sampled immersion, from the
//! first and second fundamental forms on 5×5 grid stencils.

use crate::algebra::Vec3;
use crate::geometry::SurfaceMesh;

/// Points whose first-fundamental-form determinant falls below this
/// fraction of the grid median are reported as degenerate: the area
/// element there is too small for the stencil to certify curvature at the
/// given resolution (branch-like sampling artifacts).
const DEGENERATE_RATIO: f64 = 1e-3;

/// Per-point mean-curvature estimates on the interior of a mesh grid.
/// `None` marks points where the first fundamental form was numerically
/// singular (reported, not fatal).
#[derive(Debug, Clone)]
pub struct MeanCurvatureGrid {
    margin: usize,
    nx: usize,
    ny: usize,
    values: Vec<Option<f64>>,
}

impl MeanCurvatureGrid {
    /// Interior grid dimensions (full grid minus the stencil margin).
    pub fn dims(&self) -> (usize, usize) {
        (self.nx, self.ny)
    }

    pub fn margin(&self) -> usize {
        self.margin
    }

    /// Estimate at interior index (i, j), offset by the margin from the
    /// mesh indices.
    pub fn get(&self, i: usize, j: usize) -> Option<f64> {
        self.values[j * self.nx + i]
    }

    pub fn values(&self) -> impl Iterator<Item = f64> + '_ {
        self.values.iter().filter_map(|v| *v)
    }

    pub fn degenerate_count(&self) -> usize {
        self.values.iter().filter(|v| v.is_none()).count()
    }

    /// Largest |estimate − h| over all non-degenerate interior points.
    pub fn max_abs_deviation(&self, h: f64) -> f64 {
        self.values().map(|v| (v - h).abs()).fold(0.0, f64::max)
    }
}

/// Fourth-order central first derivative from five samples.
fn d1(m: [Vec3; 5], h: f64) -> Vec3 {
    m[4].scale(-1.0)
        .add(&m[3].scale(8.0))
        .sub(&m[1].scale(8.0))
        .add(&m[0])
        .scale(1.0 / (12.0 * h))
}

/// Fourth-order central second derivative from five samples.
fn d2(m: [Vec3; 5], h: f64) -> Vec3 {
    m[4].scale(-1.0)
        .add(&m[3].scale(16.0))
        .sub(&m[2].scale(30.0))
        .add(&m[1].scale(16.0))
        .sub(&m[0])
        .scale(1.0 / (12.0 * h * h))
}

struct PointForms {
    det: f64,
    h_num: f64,
}

fn forms_at(mesh: &SurfaceMesh, i: usize, j: usize, dx: f64, dy: f64) -> PointForms {
    let p = |di: isize, dj: isize| -> Vec3 {
        mesh.point((i as isize + di) as usize, (j as isize + dj) as usize)
    };
    let xrow = |dj: isize| [p(-2, dj), p(-1, dj), p(0, dj), p(1, dj), p(2, dj)];
    let ycol = [p(0, -2), p(0, -1), p(0, 0), p(0, 1), p(0, 2)];

    let fx = d1(xrow(0), dx);
    let fy = d1(ycol, dy);
    let fxx = d2(xrow(0), dx);
    let fyy = d2(ycol, dy);
    let fxy = d1(
        [
            d1(xrow(-2), dx),
            d1(xrow(-1), dx),
            d1(xrow(0), dx),
            d1(xrow(1), dx),
            d1(xrow(2), dx),
        ],
        dy,
    );

    let e = fx.dot(&fx);
    let f = fx.dot(&fy);
    let g = fy.dot(&fy);
    let det = e * g - f * f;
    // Normal oriented as f_y × f_x, under which the Sym-Bobenko cylinder
    // built at mean curvature H measures H.
    let normal = fy.cross(&fx);
    let l = fxx.dot(&normal);
    let m = fxy.dot(&normal);
    let nn = fyy.dot(&normal);
    // H = (E·N − 2F·M + G·L)/(2·det^{3/2}) with the normalization of the
    // unit normal folded in.
    PointForms {
        det,
        h_num: e * nn - 2.0 * f * m + g * l,
    }
}

/// Estimate the mean curvature on the interior of a mesh from fourth-order
/// central differences; every interior point uses the full 5×5 stencil, so
/// the margin is two grid cells. Points whose area element collapses
/// relative to the grid are reported as degenerate rather than certified.
pub fn mean_curvature_estimate(mesh: &SurfaceMesh) -> MeanCurvatureGrid {
    let margin = 2usize;
    let (dx, dy) = mesh.spacing();
    let nx = mesh.nx().saturating_sub(2 * margin);
    let ny = mesh.ny().saturating_sub(2 * margin);
    let mut forms = Vec::with_capacity(nx * ny);
    for jj in 0..ny {
        for ii in 0..nx {
            forms.push(forms_at(mesh, ii + margin, jj + margin, dx, dy));
        }
    }
    let mut dets: Vec<f64> = forms.iter().map(|f| f.det).collect();
    dets.sort_by(f64::total_cmp);
    let median = dets[dets.len() / 2].max(1e-300);

    let values = forms
        .iter()
        .map(|f| {
            if f.det <= DEGENERATE_RATIO * median || f.det <= 0.0 {
                None
            } else {
                Some(f.h_num / (2.0 * f.det * f.det.sqrt()))
            }
        })
        .collect();
    MeanCurvatureGrid {
        margin,
        nx,
        ny,
        values,
    }
}

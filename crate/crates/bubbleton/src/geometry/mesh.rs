//! Surface meshes: the immersion sampled on an (x, y) grid.

use num_complex::Complex64;
use rayon::prelude::*;

use crate::algebra::Vec3;
use crate::dressing::BubbletonParams;
use crate::geometry::BubbletonSurface;
use crate::{Error, Result};

/// An nx × ny grid of immersion points. The x direction covers one full
/// period [0, 1] with the seam duplicated (column x = 1 repeats column
/// x = 0); the y range is configurable.
#[derive(Debug, Clone)]
pub struct SurfaceMesh {
    nx: usize,
    ny: usize,
    y_range: (f64, f64),
    points: Vec<Vec3>,
}

impl SurfaceMesh {
    /// Wrap an existing grid, row-major over y (index `j·nx + i`).
    pub fn from_grid(points: Vec<Vec3>, nx: usize, ny: usize, y_range: (f64, f64)) -> Result<Self> {
        if nx < 2 || ny < 2 || points.len() != nx * ny {
            return Err(Error::TooFewSamples { min: 4 });
        }
        Ok(Self { nx, ny, y_range, points })
    }

    pub fn nx(&self) -> usize {
        self.nx
    }

    pub fn ny(&self) -> usize {
        self.ny
    }

    pub fn y_range(&self) -> (f64, f64) {
        self.y_range
    }

    /// Grid spacing (dx, dy).
    pub fn spacing(&self) -> (f64, f64) {
        (
            1.0 / (self.nx - 1) as f64,
            (self.y_range.1 - self.y_range.0) / (self.ny - 1) as f64,
        )
    }

    pub fn x_at(&self, i: usize) -> f64 {
        i as f64 / (self.nx - 1) as f64
    }

    pub fn y_at(&self, j: usize) -> f64 {
        self.y_range.0 + (self.y_range.1 - self.y_range.0) * j as f64 / (self.ny - 1) as f64
    }

    pub fn point(&self, i: usize, j: usize) -> Vec3 {
        self.points[j * self.nx + i]
    }

    pub fn points(&self) -> &[Vec3] {
        &self.points
    }

    /// Largest distance between the x = 0 and x = 1 columns.
    pub fn seam_defect(&self) -> f64 {
        (0..self.ny)
            .map(|j| self.point(0, j).dist(&self.point(self.nx - 1, j)))
            .fold(0.0, f64::max)
    }
}

/// Sample the immersion of `params` on an nx × ny grid over
/// [0, 1] × y_range. Rows are evaluated in parallel; assembly order is
/// fixed by index, so the result is deterministic.
pub fn surface_mesh(
    params: &BubbletonParams,
    nx: usize,
    ny: usize,
    y_range: (f64, f64),
) -> Result<SurfaceMesh> {
    if nx < 2 || ny < 2 {
        return Err(Error::TooFewSamples { min: 2 });
    }
    let surface = BubbletonSurface::new(params)?;
    let rows: Vec<Result<Vec<Vec3>>> = (0..ny)
        .into_par_iter()
        .map(|j| {
            let y = y_range.0 + (y_range.1 - y_range.0) * j as f64 / (ny - 1) as f64;
            (0..nx)
                .map(|i| {
                    let x = i as f64 / (nx - 1) as f64;
                    surface.point(Complex64::new(x, y))
                })
                .collect()
        })
        .collect();
    let mut points = Vec::with_capacity(nx * ny);
    for row in rows {
        points.extend(row?);
    }
    SurfaceMesh::from_grid(points, nx, ny, y_range)
}

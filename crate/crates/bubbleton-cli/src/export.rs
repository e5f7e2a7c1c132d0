//! File exporters: CSV curves, SVG plots, Wavefront OBJ meshes. All writes
//! go through a temp file and rename, so outputs are never half-written.

use std::fs;
use std::io;
use std::path::Path;

use bubbleton::{PlanarCurve, SurfaceMesh};

/// Write `contents` atomically: temp file in the same directory, then
/// rename over the target.
pub fn write_atomic(path: &Path, contents: &str) -> io::Result<()> {
    let tmp = path.with_extension("tmp~");
    fs::write(&tmp, contents)?;
    fs::rename(&tmp, path)
}

/// CSV rows `x,X,Z` at n+1 uniform parameters; the closing row repeats the
/// first point at x = 1. Full double precision, '.' decimal separator.
pub fn curve_csv(eval: &dyn Fn(f64) -> [f64; 2], samples: usize) -> String {
    let mut out = String::from("x,X,Z\n");
    let first = eval(0.0);
    for i in 0..=samples {
        let x = i as f64 / samples as f64;
        let p = if i == samples { first } else { eval(x) };
        out.push_str(&format!("{},{},{}\n", x, p[0], p[1]));
    }
    out
}

/// SVG 1.1 polyline plot on an 800×800 viewBox with a 5% margin and equal
/// aspect, so loops and turns are not distorted.
pub fn curve_svg(curve: &PlanarCurve) -> String {
    let samples = curve.samples();
    let (mut x0, mut x1) = (f64::INFINITY, f64::NEG_INFINITY);
    let (mut z0, mut z1) = (f64::INFINITY, f64::NEG_INFINITY);
    for &(_, [x, z]) in samples {
        x0 = x0.min(x);
        x1 = x1.max(x);
        z0 = z0.min(z);
        z1 = z1.max(z);
    }
    let side = 800.0;
    let usable = side * 0.9;
    let span = (x1 - x0).max(z1 - z0).max(1e-12);
    let scale = usable / span;
    let cx = 0.5 * (x0 + x1);
    let cz = 0.5 * (z0 + z1);
    let mut points = String::new();
    for &(_, [x, z]) in samples {
        let px = side / 2.0 + (x - cx) * scale;
        let py = side / 2.0 - (z - cz) * scale;
        points.push_str(&format!("{px:.3},{py:.3} "));
    }
    format!(
        "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n\
         <svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" \
         viewBox=\"0 0 800 800\">\n\
         <rect width=\"800\" height=\"800\" fill=\"white\"/>\n\
         <polyline points=\"{}\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n\
         </svg>\n",
        points.trim_end()
    )
}

/// Wavefront OBJ: `v` records in row-major grid order (rows over y), quad
/// `f` records over adjacent grid cells. Seam vertices are duplicated, not
/// welded.
pub fn mesh_obj(mesh: &SurfaceMesh) -> String {
    let nx = mesh.nx();
    let ny = mesh.ny();
    let mut out = String::new();
    for j in 0..ny {
        for i in 0..nx {
            let p = mesh.point(i, j);
            out.push_str(&format!("v {} {} {}\n", p.x1, p.x2, p.x3));
        }
    }
    for j in 0..ny - 1 {
        for i in 0..nx - 1 {
            let a = j * nx + i + 1;
            let b = j * nx + i + 2;
            let c = (j + 1) * nx + i + 2;
            let d = (j + 1) * nx + i + 1;
            out.push_str(&format!("f {a} {b} {c} {d}\n"));
        }
    }
    out
}

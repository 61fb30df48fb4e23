//! Grid and chart-patch sampling of the surfaces, and deterministic export
//! to OBJ / CSV / JSON for external tools and golden-file tests.

use std::io::Write;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::jsonfmt::Json;
use crate::quad::QuadratureConfig;
use crate::surfaces::{self, Signature, SurfaceSpec, DEFAULT_DOMAIN_MARGIN};
use crate::weierstrass;

/// Provenance of a mesh: the surface it samples and the generation
/// parameters. Fields not applicable to the generation kind stay `None`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MeshMeta {
    pub signature: Signature,
    pub a: f64,
    /// "grid" or "we_patch".
    pub kind: String,
    /// Domain-membership margin used for masking.
    pub delta: f64,
    pub x_range: Option<(f64, f64)>,
    pub y_range: Option<(f64, f64)>,
    pub nx: Option<usize>,
    pub ny: Option<usize>,
    pub radius: Option<f64>,
    pub n_r: Option<usize>,
    pub n_theta: Option<usize>,
    /// Largest per-vertex quadrature error of a chart patch.
    pub max_quad_error: Option<f64>,
}

/// Triangulated sample of a surface graph.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SurfaceMesh {
    pub vertices: Vec<[f64; 3]>,
    /// Zero-based vertex index triples.
    pub faces: Vec<[u32; 3]>,
    /// Per-grid-node validity; vertex count equals the number of `true`s.
    pub mask: Vec<bool>,
    /// Per-vertex quadrature error estimates (chart patches only).
    pub vertex_errors: Option<Vec<f64>>,
    pub meta: MeshMeta,
}

/// Sample the height function on a rectangular grid with the default
/// domain margin.
pub fn sample_grid(
    spec: &SurfaceSpec,
    x_range: (f64, f64),
    y_range: (f64, f64),
    nx: usize,
    ny: usize,
) -> Result<SurfaceMesh> {
    sample_grid_with_margin(spec, x_range, y_range, nx, ny, DEFAULT_DOMAIN_MARGIN)
}

/// Sample the height function on a grid, masking nodes that fail
/// `in_domain_with_margin`, and triangulating every fully-valid cell along
/// the `(i, j) -> (i+1, j+1)` diagonal.
///
/// For the wick signature the vertex height is the real part of the
/// complex height (exactly the soliton for `a = 0`).
pub fn sample_grid_with_margin(
    spec: &SurfaceSpec,
    x_range: (f64, f64),
    y_range: (f64, f64),
    nx: usize,
    ny: usize,
    delta: f64,
) -> Result<SurfaceMesh> {
    if nx < 2 || ny < 2 {
        return Err(Error::InvalidArgument(
            "grid needs nx >= 2 and ny >= 2".into(),
        ));
    }
    for (lo, hi) in [x_range, y_range] {
        if !lo.is_finite() || !hi.is_finite() || lo >= hi {
            return Err(Error::InvalidArgument(format!("bad range [{lo}, {hi}]")));
        }
    }

    let node = |i: usize, j: usize| {
        let tx = i as f64 / (nx - 1) as f64;
        let ty = j as f64 / (ny - 1) as f64;
        (
            x_range.0 + (x_range.1 - x_range.0) * tx,
            y_range.0 + (y_range.1 - y_range.0) * ty,
        )
    };

    let mut mask = vec![false; nx * ny];
    let mut vertex_of = vec![u32::MAX; nx * ny];
    let mut vertices = Vec::new();
    for j in 0..ny {
        for i in 0..nx {
            let (x, y) = node(i, j);
            if !surfaces::in_domain_with_margin(spec, x, y, delta) {
                continue;
            }
            let z = match spec.signature {
                Signature::BornInfeldWick => surfaces::wick_height(spec.a, x, y)?.value.re,
                _ => surfaces::height(spec, x, y)?,
            };
            let idx = j * nx + i;
            mask[idx] = true;
            vertex_of[idx] = vertices.len() as u32;
            vertices.push([x, y, z]);
        }
    }
    if vertices.is_empty() {
        return Err(Error::EmptyMesh);
    }

    let mut faces = Vec::new();
    for j in 0..ny - 1 {
        for i in 0..nx - 1 {
            let corners = [
                j * nx + i,
                j * nx + i + 1,
                (j + 1) * nx + i + 1,
                (j + 1) * nx + i,
            ];
            if corners.iter().any(|&c| !mask[c]) {
                continue;
            }
            let [v00, v10, v11, v01] = corners.map(|c| vertex_of[c]);
            faces.push([v00, v10, v11]);
            faces.push([v00, v11, v01]);
        }
    }

    Ok(SurfaceMesh {
        vertices,
        faces,
        mask,
        vertex_errors: None,
        meta: MeshMeta {
            signature: spec.signature,
            a: spec.a,
            kind: "grid".into(),
            delta,
            x_range: Some(x_range),
            y_range: Some(y_range),
            nx: Some(nx),
            ny: Some(ny),
            radius: None,
            n_r: None,
            n_theta: None,
            max_quad_error: None,
        },
    })
}

/// Map a polar grid of the chart disc through the contour integrals.
///
/// Rings `i = 1..=n_r` at radius `radius * i / n_r`, `n_theta` sectors,
/// plus the center vertex at the base point. Every vertex records its
/// quadrature error; the largest lands in the metadata.
pub fn we_patch(
    spec: &SurfaceSpec,
    radius: f64,
    n_r: usize,
    n_theta: usize,
    cfg: &QuadratureConfig,
) -> Result<SurfaceMesh> {
    if radius.is_nan() || radius < 0.0 || radius >= 1.0 - cfg.pole_clearance {
        return Err(Error::InvalidArgument(format!(
            "patch radius {radius} must lie in [0, 1 - pole_clearance)"
        )));
    }

    let mut vertices = vec![[0.0, 0.0, 0.0]];
    let mut errors = vec![0.0f64];
    if radius > 0.0 {
        if n_r < 1 || n_theta < 3 {
            return Err(Error::InvalidArgument(
                "patch needs n_r >= 1 and n_theta >= 3".into(),
            ));
        }
        for i in 1..=n_r {
            let r = radius * i as f64 / n_r as f64;
            for m in 0..n_theta {
                let theta = 2.0 * std::f64::consts::PI * m as f64 / n_theta as f64;
                let xi = num_complex::Complex64::from_polar(r, theta);
                let p = weierstrass::we_integrate(spec, xi, cfg)?;
                vertices.push([p.x, p.y, p.phi]);
                errors.push(p.est_error);
            }
        }
    }

    let mut faces = Vec::new();
    if radius > 0.0 {
        let ring = |i: usize, m: usize| (1 + (i - 1) * n_theta + m % n_theta) as u32;
        for m in 0..n_theta {
            faces.push([0, ring(1, m), ring(1, m + 1)]);
        }
        for i in 1..n_r {
            for m in 0..n_theta {
                faces.push([ring(i, m), ring(i + 1, m), ring(i + 1, m + 1)]);
                faces.push([ring(i, m), ring(i + 1, m + 1), ring(i, m + 1)]);
            }
        }
    }

    let max_err = errors.iter().cloned().fold(0.0f64, f64::max);
    let mask = vec![true; vertices.len()];
    Ok(SurfaceMesh {
        vertices,
        faces,
        mask,
        vertex_errors: Some(errors),
        meta: MeshMeta {
            signature: spec.signature,
            a: spec.a,
            kind: "we_patch".into(),
            delta: cfg.pole_clearance,
            x_range: None,
            y_range: None,
            nx: None,
            ny: None,
            radius: Some(radius),
            n_r: Some(n_r),
            n_theta: Some(n_theta),
            max_quad_error: Some(max_err),
        },
    })
}

/// Export encodings.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExportFormat {
    Obj,
    Csv,
    Json,
}

impl std::str::FromStr for ExportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "obj" => Ok(ExportFormat::Obj),
            "csv" => Ok(ExportFormat::Csv),
            "json" => Ok(ExportFormat::Json),
            other => Err(Error::InvalidArgument(format!(
                "unknown format '{other}' (expected obj | csv | json)"
            ))),
        }
    }
}

/// Render the mesh to a string. Identical meshes yield identical bytes.
pub fn export_string(mesh: &SurfaceMesh, format: ExportFormat) -> String {
    match format {
        ExportFormat::Obj => {
            let mut out = String::new();
            for v in &mesh.vertices {
                out.push_str(&format!("v {} {} {}\n", v[0], v[1], v[2]));
            }
            for f in &mesh.faces {
                // OBJ indices are 1-based
                out.push_str(&format!("f {} {} {}\n", f[0] + 1, f[1] + 1, f[2] + 1));
            }
            out
        }
        ExportFormat::Csv => {
            let with_err = mesh.vertex_errors.is_some();
            let mut out = String::from(if with_err { "x,y,z,err\n" } else { "x,y,z\n" });
            for (i, v) in mesh.vertices.iter().enumerate() {
                if let Some(errs) = &mesh.vertex_errors {
                    out.push_str(&format!(
                        "{:.16e},{:.16e},{:.16e},{:.16e}\n",
                        v[0], v[1], v[2], errs[i]
                    ));
                } else {
                    out.push_str(&format!("{:.16e},{:.16e},{:.16e}\n", v[0], v[1], v[2]));
                }
            }
            out
        }
        ExportFormat::Json => mesh_to_json(mesh).pretty(),
    }
}

/// Write the mesh to a file.
pub fn export(mesh: &SurfaceMesh, format: ExportFormat, path: &Path) -> Result<()> {
    let mut file = std::fs::File::create(path)?;
    file.write_all(export_string(mesh, format).as_bytes())?;
    Ok(())
}

/// Rebuild a mesh from its JSON export; exact for every finite float.
pub fn import_json(text: &str) -> Result<SurfaceMesh> {
    serde_json::from_str(text)
        .map_err(|e| Error::InvalidArgument(format!("mesh json parse failure: {e}")))
}

fn mesh_to_json(mesh: &SurfaceMesh) -> Json {
    let mut root = Json::obj();
    root.insert(
        "vertices".into(),
        Json::Arr(
            mesh.vertices
                .iter()
                .map(|v| Json::Arr(v.iter().map(|&c| Json::Float(c)).collect()))
                .collect(),
        ),
    );
    root.insert(
        "faces".into(),
        Json::Arr(
            mesh.faces
                .iter()
                .map(|f| Json::Arr(f.iter().map(|&c| Json::Int(c as i64)).collect()))
                .collect(),
        ),
    );
    root.insert(
        "mask".into(),
        Json::Arr(mesh.mask.iter().map(|&b| Json::Bool(b)).collect()),
    );
    root.insert(
        "vertex_errors".into(),
        match &mesh.vertex_errors {
            Some(errs) => Json::Arr(errs.iter().map(|&e| Json::Float(e)).collect()),
            None => Json::Null,
        },
    );

    let mut meta = Json::obj();
    meta.insert(
        "signature".into(),
        Json::Str(mesh.meta.signature.as_str().into()),
    );
    meta.insert("a".into(), Json::Float(mesh.meta.a));
    meta.insert("kind".into(), Json::Str(mesh.meta.kind.clone()));
    meta.insert("delta".into(), Json::Float(mesh.meta.delta));
    let pair = |p: Option<(f64, f64)>| match p {
        Some((lo, hi)) => Json::Arr(vec![Json::Float(lo), Json::Float(hi)]),
        None => Json::Null,
    };
    meta.insert("x_range".into(), pair(mesh.meta.x_range));
    meta.insert("y_range".into(), pair(mesh.meta.y_range));
    let count = |c: Option<usize>| c.map_or(Json::Null, |v| Json::Int(v as i64));
    meta.insert("nx".into(), count(mesh.meta.nx));
    meta.insert("ny".into(), count(mesh.meta.ny));
    meta.insert(
        "radius".into(),
        mesh.meta.radius.map_or(Json::Null, Json::Float),
    );
    meta.insert("n_r".into(), count(mesh.meta.n_r));
    meta.insert("n_theta".into(), count(mesh.meta.n_theta));
    meta.insert(
        "max_quad_error".into(),
        mesh.meta.max_quad_error.map_or(Json::Null, Json::Float),
    );
    root.insert("meta".into(), Json::Obj(meta));
    Json::Obj(root)
}

#[cfg(test)]
#[allow(clippy::excessive_precision, clippy::approx_constant)]
mod tests {
    use super::*;

    #[test]
    fn small_grid_counts() {
        // |x|, |y| <= 1 < pi/2 keeps every cosine positive: 9 vertices,
        // 2 triangles per cell over a 2x2 cell grid.
        let mesh =
            sample_grid(&SurfaceSpec::euclidean(0.0), (-1.0, 1.0), (-1.0, 1.0), 3, 3).unwrap();
        assert_eq!(mesh.vertices.len(), 9);
        assert_eq!(mesh.faces.len(), 8);
        assert!(mesh.mask.iter().all(|&m| m));
    }

    #[test]
    fn masked_grid_drops_singular_nodes() {
        let mesh = sample_grid(
            &SurfaceSpec::euclidean(0.0),
            (-2.0, 2.0),
            (-2.0, 2.0),
            41,
            41,
        )
        .unwrap();
        assert!(mesh.vertices.len() < 41 * 41);
        assert!(!mesh.vertices.is_empty());
        // faces reference valid vertices only
        for f in &mesh.faces {
            for &v in f {
                assert!((v as usize) < mesh.vertices.len());
            }
        }
        // vertex count equals mask-true count
        assert_eq!(
            mesh.vertices.len(),
            mesh.mask.iter().filter(|&&m| m).count()
        );
    }

    #[test]
    fn lorentz_corners_masked_by_spacelike_check() {
        let mesh =
            sample_grid(&SurfaceSpec::lorentz(0.0), (-3.0, 3.0), (-3.0, 3.0), 41, 41).unwrap();
        assert!(!mesh.mask[0], "corner (-3, -3) has tanh^2 + tanh^2 ~ 1.98");
        assert!(mesh.mask[41 * 20 + 20], "the origin is spacelike");
    }

    #[test]
    fn empty_mesh_error() {
        // every node of this grid sits where cos(x) < 0
        let r = sample_grid(&SurfaceSpec::euclidean(0.0), (2.0, 2.5), (-0.1, 0.1), 3, 3);
        assert!(matches!(r, Err(Error::EmptyMesh)));
    }

    #[test]
    fn degenerate_patch_is_single_vertex() {
        let cfg = QuadratureConfig::default();
        let mesh = we_patch(&SurfaceSpec::euclidean(0.0), 0.0, 4, 8, &cfg).unwrap();
        assert_eq!(mesh.vertices.len(), 1);
        assert_eq!(mesh.vertices[0], [0.0, 0.0, 0.0]);
        assert!(mesh.faces.is_empty());
    }

    #[test]
    fn patch_vertices_pass_cross_route_check() {
        let cfg = QuadratureConfig::default();
        let mesh = we_patch(&SurfaceSpec::euclidean(0.0), 0.6, 10, 32, &cfg).unwrap();
        assert_eq!(mesh.vertices.len(), 1 + 10 * 32);
        let errs = mesh.vertex_errors.as_ref().unwrap();
        for (v, err) in mesh.vertices.iter().zip(errs) {
            let h = surfaces::height(&SurfaceSpec::euclidean(0.0), v[0], v[1]).unwrap();
            assert!((v[2] - h).abs() < err + 1e-7);
            assert!((v[2] - h).abs() < 1e-6);
        }
    }

    #[test]
    fn lorentz_patch_quadrature_error() {
        let cfg = QuadratureConfig::default();
        let mesh = we_patch(&SurfaceSpec::lorentz(1.0), 0.5, 8, 24, &cfg).unwrap();
        assert!(mesh.meta.max_quad_error.unwrap() < 1e-8);
        assert!(mesh
            .vertices
            .iter()
            .all(|v| v.iter().all(|c| c.is_finite())));
    }

    #[test]
    fn obj_export_shape() {
        let mesh =
            sample_grid(&SurfaceSpec::euclidean(0.0), (-1.0, 1.0), (-1.0, 1.0), 3, 3).unwrap();
        let obj = export_string(&mesh, ExportFormat::Obj);
        assert_eq!(obj.lines().filter(|l| l.starts_with("v ")).count(), 9);
        assert_eq!(obj.lines().filter(|l| l.starts_with("f ")).count(), 8);
        // 1-based face indices
        assert!(!obj.lines().any(|l| l.starts_with("f 0")));
    }

    #[test]
    fn single_vertex_obj() {
        let cfg = QuadratureConfig::default();
        let mesh = we_patch(&SurfaceSpec::euclidean(0.0), 0.0, 1, 8, &cfg).unwrap();
        let obj = export_string(&mesh, ExportFormat::Obj);
        assert_eq!(obj.lines().filter(|l| l.starts_with("v ")).count(), 1);
        assert_eq!(obj.lines().filter(|l| l.starts_with("f ")).count(), 0);
    }

    #[test]
    fn export_is_deterministic() {
        let mesh =
            sample_grid(&SurfaceSpec::euclidean(1.0), (-0.4, 0.4), (-0.4, 0.4), 5, 5).unwrap();
        for fmt in [ExportFormat::Obj, ExportFormat::Csv, ExportFormat::Json] {
            assert_eq!(export_string(&mesh, fmt), export_string(&mesh, fmt));
        }
    }

    #[test]
    fn csv_header_carries_err_column_for_patches() {
        let cfg = QuadratureConfig::default();
        let mesh = we_patch(&SurfaceSpec::euclidean(0.0), 0.3, 2, 6, &cfg).unwrap();
        let csv = export_string(&mesh, ExportFormat::Csv);
        assert!(csv.starts_with("x,y,z,err\n"));
        let grid =
            sample_grid(&SurfaceSpec::euclidean(0.0), (-1.0, 1.0), (-1.0, 1.0), 3, 3).unwrap();
        assert!(export_string(&grid, ExportFormat::Csv).starts_with("x,y,z\n"));
    }

    #[test]
    fn json_round_trip_is_exact() {
        let cfg = QuadratureConfig::default();
        for mesh in [
            sample_grid(&SurfaceSpec::lorentz(0.5), (-0.8, 0.8), (-0.8, 0.8), 4, 6).unwrap(),
            we_patch(&SurfaceSpec::euclidean(1.0), 0.4, 3, 8, &cfg).unwrap(),
        ] {
            let text = export_string(&mesh, ExportFormat::Json);
            let back = import_json(&text).unwrap();
            assert_eq!(mesh, back);
        }
    }

    #[test]
    fn wick_grid_uses_real_part() {
        let mesh = sample_grid(
            &SurfaceSpec::born_infeld_wick(0.0),
            (-1.4, 1.4),
            (-2.0, 2.0),
            5,
            5,
        )
        .unwrap();
        assert_eq!(mesh.vertices.len(), 25);
        let center = mesh
            .vertices
            .iter()
            .find(|v| v[0] == 0.0 && v[1] == 0.0)
            .unwrap();
        assert_eq!(center[2], 0.0);
    }
}

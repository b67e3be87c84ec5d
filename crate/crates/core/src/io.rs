//! Geometry files and CSV output.
//!
//! A geometry file is a JSON document
//!
//! ```json
//! {
//!   "degree": 3, "regularity": 1, "breakpoints": [],
//!   "patch_L": [[[x, y], ...], ...], "patch_R": [[[x, y], ...], ...],
//!   "gluing": { "alpha_L": [...], "alpha_R": [...], "beta": [...],
//!               "beta_L": [...], "beta_R": [...] }
//! }
//! ```
//!
//! Grids are indexed `[i][j]` with `i` the index in `u`. Numbers are JSON
//! numbers or strings holding a decimal or a rational `"a/b"`. Polynomials are
//! monomial coefficient lists in increasing degree. The `gluing` block and
//! the pair `beta_L`, `beta_R` are optional.

use std::fs;
use std::path::Path;

use serde_json::{json, Value};

use crate::c1_basis::{Basis, BasisFunction, CoefficientGrid};
use crate::coeff_matrices::{CoefficientMatrices, SparseMatrix};
use crate::error::{Error, Result};
use crate::gluing::{compute_gluing, GluingData, Side, TwoPatchGeometry};
use crate::spline_core::{uniform_breakpoints, KnotVector, Point2, Polynomial, TensorSplineFunction};

/// Contents of a geometry file.
#[derive(Debug, Clone)]
pub struct GeometryInput {
    pub geometry: TwoPatchGeometry,
    pub regularity: usize,
    /// Gluing data given in the file, checked against the geometry.
    pub gluing: Option<GluingData>,
}

fn schema(field: impl Into<String>, message: impl Into<String>) -> Error {
    Error::Schema { field: field.into(), message: message.into() }
}

fn io_err(path: &Path, e: impl std::fmt::Display) -> Error {
    Error::Io(format!("{}: {e}", path.display()))
}

/// Parses a JSON number, a decimal string or a rational string `"a/b"`.
pub fn parse_number(value: &Value, field: &str) -> Result<f64> {
    match value {
        Value::Number(n) => n.as_f64().ok_or_else(|| schema(field, "number out of range")),
        Value::String(s) => parse_number_str(s).ok_or_else(|| schema(field, format!("cannot parse number {s:?}"))),
        other => Err(schema(field, format!("expected a number, got {other}"))),
    }
}

fn parse_number_str(s: &str) -> Option<f64> {
    let s = s.trim();
    match s.split_once('/') {
        Some((a, b)) => {
            let (a, b) = (a.trim().parse::<i128>().ok()?, b.trim().parse::<i128>().ok()?);
            (b != 0).then(|| a as f64 / b as f64)
        }
        None => s.parse::<f64>().ok().filter(|x| x.is_finite()),
    }
}

fn field<'a>(doc: &'a Value, name: &str) -> Result<&'a Value> {
    doc.get(name).ok_or_else(|| schema(name, "missing"))
}

fn parse_usize(doc: &Value, name: &str) -> Result<usize> {
    field(doc, name)?
        .as_u64()
        .map(|x| x as usize)
        .ok_or_else(|| schema(name, "expected a non-negative integer"))
}

fn parse_list(value: &Value, name: &str) -> Result<Vec<f64>> {
    value
        .as_array()
        .ok_or_else(|| schema(name, "expected a list"))?
        .iter()
        .enumerate()
        .map(|(i, v)| parse_number(v, &format!("{name}[{i}]")))
        .collect()
}

fn parse_grid(doc: &Value, name: &str, space: &KnotVector) -> Result<TensorSplineFunction<Point2>> {
    let n = space.dim();
    let rows = field(doc, name)?.as_array().ok_or_else(|| schema(name, "expected a grid"))?;
    if rows.len() != n {
        return Err(schema(name, format!("expected {n} rows, got {}", rows.len())));
    }
    let mut points = Vec::with_capacity(n * n);
    for (i, row) in rows.iter().enumerate() {
        let row = row.as_array().ok_or_else(|| schema(format!("{name}[{i}]"), "expected a row"))?;
        if row.len() != n {
            return Err(schema(format!("{name}[{i}]"), format!("expected {n} points, got {}", row.len())));
        }
        for (j, pt) in row.iter().enumerate() {
            let f = format!("{name}[{i}][{j}]");
            let xy = parse_list(pt, &f)?;
            if xy.len() != 2 {
                return Err(schema(f, "expected [x, y]"));
            }
            points.push(Point2::new(xy[0], xy[1]));
        }
    }
    TensorSplineFunction::new(space.clone(), space.clone(), points)
}

fn parse_gluing(block: &Value, breakpoints: &[f64]) -> Result<GluingData> {
    let poly = |name: &str| -> Result<Polynomial> {
        let f = format!("gluing.{name}");
        Ok(Polynomial::new(parse_list(block.get(name).ok_or_else(|| schema(&f, "missing"))?, &f)?))
    };
    let (al, ar, beta) = (poly("alpha_L")?, poly("alpha_R")?, poly("beta")?);
    match (block.get("beta_L").is_some(), block.get("beta_R").is_some()) {
        (true, true) => GluingData::with_beta_pair(al, ar, beta, poly("beta_L")?, poly("beta_R")?, breakpoints),
        (false, false) => GluingData::from_polynomials(al, ar, beta, breakpoints),
        _ => Err(schema("gluing", "beta_L and beta_R must be given together")),
    }
}

/// Parses a geometry document.
pub fn parse_geometry_str(text: &str) -> Result<GeometryInput> {
    let doc: Value = serde_json::from_str(text).map_err(|e| schema("<document>", e.to_string()))?;
    let degree = parse_usize(&doc, "degree")?;
    let regularity = parse_usize(&doc, "regularity")?;
    let breakpoints = parse_list(field(&doc, "breakpoints")?, "breakpoints")?;
    let space = KnotVector::with_regularity(degree, regularity as isize, breakpoints.clone())?;
    let patch_l = parse_grid(&doc, "patch_L", &space)?;
    let patch_r = parse_grid(&doc, "patch_R", &space)?;
    let geometry = TwoPatchGeometry::new(patch_l, patch_r)?;
    let gluing = match doc.get("gluing") {
        None | Some(Value::Null) => None,
        Some(block) => {
            let g = parse_gluing(block, &breakpoints)?;
            g.validate(&geometry)?;
            Some(g)
        }
    };
    Ok(GeometryInput { geometry, regularity, gluing })
}

pub fn parse_geometry(path: &Path) -> Result<GeometryInput> {
    parse_geometry_str(&fs::read_to_string(path).map_err(|e| io_err(path, e))?)
}

impl GeometryInput {
    /// Geometry refined to `k` uniform inner breakpoints (if given) with its
    /// gluing data: the supplied data reclassified on the new breakpoints,
    /// or else data computed from the geometry.
    pub fn refined(&self, k: Option<usize>) -> Result<(TwoPatchGeometry, GluingData)> {
        let geometry = match k {
            None => self.geometry.clone(),
            Some(k) => {
                let target =
                    KnotVector::with_regularity(self.geometry.degree(), self.regularity as isize, uniform_breakpoints(k))?;
                self.geometry.refine(&target)?
            }
        };
        let bps = geometry.space().breakpoints().to_vec();
        let gluing = match &self.gluing {
            Some(g) => g.reclassify(&bps),
            None => compute_gluing(&geometry)?,
        };
        Ok((geometry, gluing))
    }
}

fn poly_json(p: &Polynomial) -> Value {
    json!(p.coefficients())
}

fn grid_json(patch: &TensorSplineFunction<Point2>) -> Value {
    Value::Array(
        (0..patch.n_u())
            .map(|i| Value::Array(patch.row(i).iter().map(|p| json!([p.x, p.y])).collect()))
            .collect(),
    )
}

/// Serializes a geometry (and optional gluing data) as a geometry document.
pub fn geometry_to_json(geometry: &TwoPatchGeometry, gluing: Option<&GluingData>) -> Result<String> {
    let space = geometry.space();
    let regularity = space
        .uniform_regularity()
        .filter(|r| *r >= 0)
        .unwrap_or(space.degree() as isize - 1);
    let mut doc = json!({
        "degree": space.degree(),
        "regularity": regularity,
        "breakpoints": space.breakpoints(),
        "patch_L": grid_json(geometry.patch(Side::L)),
        "patch_R": grid_json(geometry.patch(Side::R)),
    });
    if let Some(g) = gluing {
        doc["gluing"] = json!({
            "alpha_L": poly_json(&g.alpha_l),
            "alpha_R": poly_json(&g.alpha_r),
            "beta": poly_json(&g.beta),
            "beta_L": poly_json(&g.beta_l),
            "beta_R": poly_json(&g.beta_r),
        });
    }
    serde_json::to_string_pretty(&doc).map_err(|e| Error::Io(e.to_string()))
}

fn ensure_dir(dir: &Path) -> Result<()> {
    fs::create_dir_all(dir).map_err(|e| io_err(dir, e))
}

fn write_file(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).map_err(|e| io_err(path, e))
}

/// Locale-independent 17-significant-digit formatting.
pub fn fmt_f64(x: f64) -> String {
    format!("{x:.16e}")
}

/// Writes `basis.csv` (`function,patch,i,j,value`, non-zero entries only)
/// and `manifest.json` into `dir`.
pub fn write_basis(dir: &Path, basis: &Basis) -> Result<()> {
    ensure_dir(dir)?;
    let mut csv = String::from("function,patch,i,j,value\n");
    for (idx, f) in basis.functions.iter().enumerate() {
        for side in Side::BOTH {
            let grid = f.grid(side);
            for (pos, v) in grid.nonzeros() {
                let (i, j) = (pos / grid.n(), pos % grid.n());
                csv.push_str(&format!("{idx},{},{i},{j},{}\n", side.label(), fmt_f64(v)));
            }
        }
    }
    write_file(&dir.join("basis.csv"), &csv)?;
    let manifest = json!({
        "degree": basis.space.degree(),
        "breakpoints": basis.space.breakpoints(),
        "multiplicities": basis.space.multiplicities(),
        "n": basis.space.dim(),
        "count": basis.len(),
        "functions": basis.functions.iter().enumerate()
            .map(|(i, f)| json!({"index": i, "label": f.kind.label()}))
            .collect::<Vec<_>>(),
    });
    write_file(&dir.join("manifest.json"), &serde_json::to_string_pretty(&manifest).unwrap_or_default())
}

/// Reads back the coefficient grids `(label, grid_L, grid_R)` written by
/// [`write_basis`].
pub fn read_basis(dir: &Path) -> Result<Vec<(String, CoefficientGrid, CoefficientGrid)>> {
    let mpath = dir.join("manifest.json");
    let manifest: Value =
        serde_json::from_str(&fs::read_to_string(&mpath).map_err(|e| io_err(&mpath, e))?)
            .map_err(|e| schema("manifest.json", e.to_string()))?;
    let n = parse_usize(&manifest, "n")?;
    let labels: Vec<String> = field(&manifest, "functions")?
        .as_array()
        .ok_or_else(|| schema("functions", "expected a list"))?
        .iter()
        .map(|f| f.get("label").and_then(Value::as_str).unwrap_or_default().to_string())
        .collect();
    let mut out: Vec<_> =
        labels.into_iter().map(|l| (l, CoefficientGrid::zeros(n), CoefficientGrid::zeros(n))).collect();
    let cpath = dir.join("basis.csv");
    let text = fs::read_to_string(&cpath).map_err(|e| io_err(&cpath, e))?;
    for (line_no, line) in text.lines().enumerate().skip(1) {
        let bad = || schema(format!("basis.csv line {}", line_no + 1), format!("cannot parse {line:?}"));
        let cols: Vec<&str> = line.split(',').collect();
        if cols.len() != 5 {
            return Err(bad());
        }
        let idx: usize = cols[0].parse().map_err(|_| bad())?;
        let (i, j): (usize, usize) = (cols[2].parse().map_err(|_| bad())?, cols[3].parse().map_err(|_| bad())?);
        let v: f64 = cols[4].parse().map_err(|_| bad())?;
        if idx >= out.len() || i >= n || j >= n {
            return Err(bad());
        }
        match cols[1] {
            "L" => out[idx].1.set(i, j, v),
            "R" => out[idx].2.set(i, j, v),
            _ => return Err(bad()),
        }
    }
    Ok(out)
}

fn triplet_csv(m: &SparseMatrix) -> String {
    let mut csv = String::from("row,col,value\n");
    for (i, j, v) in m.triplets() {
        csv.push_str(&format!("{i},{j},{}\n", fmt_f64(v)));
    }
    csv
}

/// Writes `A1.csv`, `A2_L.csv`, `A2_R.csv`, `A3_L.csv`, `A3_R.csv` as
/// `row,col,value` triplets and `matrices.json` with their shapes.
pub fn write_matrices(dir: &Path, m: &CoefficientMatrices) -> Result<()> {
    ensure_dir(dir)?;
    let blocks = [("A1", &m.a1), ("A2_L", &m.a2_l), ("A2_R", &m.a2_r), ("A3_L", &m.a3_l), ("A3_R", &m.a3_r)];
    let mut shapes = serde_json::Map::new();
    for (name, block) in blocks {
        write_file(&dir.join(format!("{name}.csv")), &triplet_csv(block))?;
        shapes.insert(name.into(), json!([block.nrows(), block.ncols()]));
    }
    let manifest = json!({
        "degree": m.degree,
        "breakpoints": m.breakpoints,
        "case": format!("{:?}", m.case),
        "shapes": shapes,
    });
    write_file(&dir.join("matrices.json"), &serde_json::to_string_pretty(&manifest).unwrap_or_default())
}

/// Reads a triplet CSV written by [`write_matrices`].
pub fn read_triplets(path: &Path) -> Result<Vec<(usize, usize, f64)>> {
    let text = fs::read_to_string(path).map_err(|e| io_err(path, e))?;
    text.lines()
        .enumerate()
        .skip(1)
        .map(|(line_no, line)| {
            let bad = || schema(format!("{} line {}", path.display(), line_no + 1), format!("cannot parse {line:?}"));
            let cols: Vec<&str> = line.split(',').collect();
            if cols.len() != 3 {
                return Err(bad());
            }
            Ok((cols[0].parse().map_err(|_| bad())?, cols[1].parse().map_err(|_| bad())?, cols[2].parse().map_err(|_| bad())?))
        })
        .collect()
}

/// One row of plot data.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SampleRow {
    pub patch: Side,
    pub u: f64,
    pub v: f64,
    pub x: f64,
    pub y: f64,
    pub value: f64,
}

/// Values of `function` at an `m × m` parameter grid on both patches.
pub fn sample_function(geometry: &TwoPatchGeometry, function: &BasisFunction, m: usize) -> Result<Vec<SampleRow>> {
    if m < 2 {
        return Err(Error::InvalidParameters("grid size must be at least 2".into()));
    }
    let mut rows = Vec::with_capacity(2 * m * m);
    for side in Side::BOTH {
        let g = function.patch_function(side, geometry.space())?;
        let patch = geometry.patch(side);
        for a in 0..m {
            let u = a as f64 / (m - 1) as f64;
            for b in 0..m {
                let v = b as f64 / (m - 1) as f64;
                let x = patch.eval(u, v, 0, 0)?;
                rows.push(SampleRow { patch: side, u, v, x: x.x, y: x.y, value: g.eval(u, v, 0, 0)? });
            }
        }
    }
    Ok(rows)
}

/// CSV `patch,u,v,x,y,value`.
pub fn samples_csv(rows: &[SampleRow]) -> String {
    let mut csv = String::from("patch,u,v,x,y,value\n");
    for r in rows {
        csv.push_str(&format!(
            "{},{},{},{},{},{}\n",
            r.patch.label(),
            fmt_f64(r.u),
            fmt_f64(r.v),
            fmt_f64(r.x),
            fmt_f64(r.y),
            fmt_f64(r.value)
        ));
    }
    csv
}

pub fn write_samples(path: &Path, rows: &[SampleRow]) -> Result<()> {
    if let Some(parent) = path.parent().filter(|p| !p.as_os_str().is_empty()) {
        ensure_dir(parent)?;
    }
    write_file(path, &samples_csv(rows))
}

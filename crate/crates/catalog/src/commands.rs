//! The operations behind the command-line subcommands; each returns an
//! [`Envelope`].

use std::path::Path;

use exactnum::Scalar;
use kaluza::ReductionData;
use liealg::{cw_canonicalize, CwData};
use rayon::prelude::*;
use sugra::{verify, BackgroundSpec};

use crate::expr::{eval, Bindings};
use crate::file::load_background;
use crate::products::GeometryProduct;
use crate::report::{CwReport, Envelope};
use crate::resolve::{builtin_ids, resolve_builtin, Overrides, Perturbation};
use crate::susy::{susy_count, DilatonChoice};
use crate::tables::{compute_tables, CountCell, SusyRow, Tables};
use crate::{solve_dilaton, CatalogError};

/// A builtin id, or a path to a background file.
pub fn load_target(target: &str, overrides: &Overrides, strict: bool) -> Result<BackgroundSpec, CatalogError> {
    if builtin_ids().any(|id| id == target) {
        return resolve_builtin(target, overrides, strict);
    }
    let path = Path::new(target);
    if path.exists() {
        if !overrides.perturbations.is_empty() {
            return Err(CatalogError::Malformed("perturbations apply to builtin backgrounds only".into()));
        }
        return load_background(path, &overrides.params);
    }
    Err(CatalogError::UnknownBackground(target.to_string()))
}

/// Verifies builtins or files; `all` expands to every builtin. Runs in
/// parallel, reports sorted by background id.
pub fn verify_command(targets: &[String], overrides: &Overrides) -> Result<Envelope, CatalogError> {
    let mut specs = Vec::new();
    for t in targets {
        if t == "all" {
            for id in builtin_ids() {
                specs.push(resolve_builtin(id, overrides, false)?);
            }
        } else {
            specs.push(load_target(t, overrides, true)?);
        }
    }
    let mut reports = specs.par_iter().map(|b| verify(b).map_err(CatalogError::from)).collect::<Result<Vec<_>, _>>()?;
    reports.sort_by(|a, b| a.background.cmp(&b.background));
    let mut env = Envelope::new("verify");
    env.verifications = reports;
    Ok(env.settle())
}

/// The enumeration with its dilaton analysis; `full` adds the elementary
/// factors and the supersymmetry counts.
pub fn enumerate_command(full: bool) -> Result<Envelope, CatalogError> {
    let mut tables = compute_tables()?;
    if !full {
        tables.factors.clear();
        tables.supersymmetry.clear();
    }
    let mut env = Envelope::new("enumerate");
    env.tables = Some(tables);
    Ok(env.settle())
}

/// Supersymmetry of a ten-dimensional product named as in the
/// enumeration, or of a builtin background.
pub fn susy_command(target: &str, overrides: &Overrides) -> Result<Envelope, CatalogError> {
    let mut env = Envelope::new("susy");
    let Ok(g) = GeometryProduct::parse(target) else {
        env.verifications.push(verify(&load_target(target, overrides, true)?)?);
        return Ok(env.settle());
    };
    if g.dim() != 10 {
        return Err(CatalogError::Unsupported(format!("`{}` is {}-dimensional; type II backgrounds are ten-dimensional", g.name(), g.dim())));
    }
    let spec = solve_dilaton(&g)?.accepted().cloned().ok_or_else(|| CatalogError::NotABackground(g.name()))?;
    let mut choices = vec![DilatonChoice::Nonconstant];
    if spec.constant_allowed {
        choices.insert(0, DilatonChoice::Constant);
    }
    let counts = choices.par_iter().map(|c| susy_count(&g, *c)).collect::<Result<Vec<_>, _>>()?;
    let mut constant = None;
    let mut nonconstant = None;
    for c in counts {
        let mut report = c.equations.clone();
        report.invariant("killing spinors (IIA, frame-constant)", c.iia);
        report.invariant("killing spinors (IIB, frame-constant)", c.iib);
        report.invariant("dilaton", if c.dilaton == DilatonChoice::Constant { "phi = a" } else { spec.pattern.as_str() });
        let cell = CountCell {
            iia: c.iia,
            iib: c.iib,
            equations_pass: c.equations.passed(),
            enhanced_not_computed: c.dilaton == DilatonChoice::Constant && g.has_cw(),
        };
        match c.dilaton {
            DilatonChoice::Constant => constant = Some(cell),
            DilatonChoice::Nonconstant => nonconstant = Some(cell),
        }
        env.verifications.push(report);
    }
    env.tables = Some(Tables {
        factors: Vec::new(),
        geometries: Vec::new(),
        dilatons: Vec::new(),
        rejected: Vec::new(),
        supersymmetry: vec![SusyRow { geometry: g.name(), constant, nonconstant: nonconstant.expect("always computed") }],
    });
    Ok(env.settle())
}

/// Reads a symmetric matrix: one row per line, entries separated by
/// whitespace or commas, `#` starts a comment.
pub fn parse_matrix(text: &str) -> Result<Vec<Vec<Scalar>>, CatalogError> {
    let params = Bindings::new();
    text.lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .filter(|l| !l.is_empty())
        .map(|l| l.split(|c: char| c == ',' || c.is_whitespace()).filter(|t| !t.is_empty()).map(|t| eval(t, &params)).collect())
        .collect()
}

pub fn canonicalize_cw_command(matrix_text: &str) -> Result<Envelope, CatalogError> {
    let a = parse_matrix(matrix_text)?;
    if a.is_empty() {
        return Err(CatalogError::Malformed("empty matrix".into()));
    }
    let data = CwData::new(a)?;
    let c = cw_canonicalize(&data)?;
    let mut env = Envelope::new("canonicalize-cw");
    env.cw = Some(CwReport::new(data.matrix().len(), &c.eigenvalues, c.degenerate));
    Ok(env.settle())
}

/// Parses `1, 0, 1/2` into a direction.
pub fn parse_direction(text: &str) -> Result<Vec<Scalar>, CatalogError> {
    let params = Bindings::new();
    text.split(',').map(|t| eval(t.trim(), &params)).collect()
}

pub fn reduce_command(target: &str, along: &[Scalar], overrides: &Overrides) -> Result<Envelope, CatalogError> {
    let b = load_target(target, overrides, true)?;
    let reduction = ReductionData::new(b, along.to_vec())?.reduce()?;
    let mut env = Envelope::new("reduce");
    env.verifications.push(reduction.report().clone());
    Ok(env.settle())
}

/// The negative controls: each must make its verifier fail.
pub fn documented_perturbations() -> Vec<(&'static str, Overrides)> {
    let matrix = |i, j, d: i64| Perturbation::Matrix { i, j, delta: Scalar::from(d) };
    let with = |perturbations: Vec<Perturbation>| Overrides { perturbations, ..Overrides::default() };
    let beta_twice_alpha = Overrides {
        params: [("alpha".to_string(), Scalar::one()), ("beta".to_string(), Scalar::from(2))].into_iter().collect(),
        perturbations: Vec::new(),
    };
    vec![
        ("cw11", with(vec![matrix(1, 1, 1)])),
        ("cw10", with(vec![matrix(1, 1, 1)])),
        ("ads7xs4", with(vec![Perturbation::SwapRadii])),
        ("ads4xs7", with(vec![Perturbation::SwapRadii])),
        ("ads3xs3", beta_twice_alpha),
        ("ads3xs3", with(vec![Perturbation::NonClosedH])),
        ("nw6", with(vec![Perturbation::NonClosedH])),
    ]
}

/// One line per report: `id: PASS` or `id: FAIL (failing checks)`.
pub fn summary_line(r: &sugra::VerificationReport) -> String {
    if r.passed() {
        format!("{}: PASS", r.background)
    } else {
        let names: Vec<&str> = r.failures().map(|c| c.name.as_str()).collect();
        format!("{}: FAIL ({})", r.background, names.join("; "))
    }
}

/// Every builtin, then every documented perturbation, one line each.
pub fn verification_summary() -> Result<String, CatalogError> {
    let mut lines = vec!["builtin backgrounds".to_string()];
    for r in verify_command(&["all".to_string()], &Overrides::default())?.verifications {
        lines.push(format!("  {}", summary_line(&r)));
    }
    lines.push("perturbed backgrounds".to_string());
    let controls = documented_perturbations();
    let reports = controls
        .par_iter()
        .map(|(id, o)| {
            let mut b = resolve_builtin(id, o, true)?;
            if o.perturbations.is_empty() {
                let params: Vec<String> = o.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
                b.id = format!("{id} [{}]", params.join(", "));
            }
            verify(&b).map_err(CatalogError::from)
        })
        .collect::<Result<Vec<_>, CatalogError>>()?;
    for r in &reports {
        lines.push(format!("  {}", summary_line(r)));
    }
    Ok(lines.join("\n") + "\n")
}

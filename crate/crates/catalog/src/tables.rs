//! The classification tables: elementary factors, ten-dimensional
//! products, linear dilatons and frame-constant supersymmetry.

use std::fmt::Write;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::dilaton::{solve_dilaton, DilatonOutcome};
use crate::factors::{elementary_factors, ElementaryFactor};
use crate::products::{enumerate_parallelisable, GeometryProduct};
use crate::susy::{susy_count, DilatonChoice};
use crate::CatalogError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DilatonRow {
    pub geometry: String,
    pub dilaton: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub constraint: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RejectedRow {
    pub geometry: String,
    pub reason: String,
}

/// Frame-constant Killing spinors, with the type-II field equations of
/// the concrete background the count was taken on.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountCell {
    pub iia: usize,
    pub iib: usize,
    pub equations_pass: bool,
    /// Larger counts from spinors depending on `x⁻` are possible here and
    /// were not searched for.
    pub enhanced_not_computed: bool,
}

impl CountCell {
    fn render(&self) -> String {
        let mut s = if self.iia == self.iib { self.iia.to_string() } else { format!("{}(A), {}(B)", self.iia, self.iib) };
        if self.enhanced_not_computed {
            s.push('*');
        }
        if !self.equations_pass {
            s.push_str(" (equations FAIL)");
        }
        s
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SusyRow {
    pub geometry: String,
    /// `None` when no constant dilaton is allowed.
    pub constant: Option<CountCell>,
    pub nonconstant: CountCell,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Tables {
    pub factors: Vec<ElementaryFactor>,
    pub geometries: Vec<String>,
    pub dilatons: Vec<DilatonRow>,
    pub rejected: Vec<RejectedRow>,
    pub supersymmetry: Vec<SusyRow>,
}

impl Tables {
    pub fn passed(&self) -> bool {
        self.supersymmetry
            .iter()
            .all(|r| r.nonconstant.equations_pass && r.constant.as_ref().is_none_or(|c| c.equations_pass))
    }
}

pub const FRAME_CONSTANT_FOOTNOTE: &str =
    "* frame-constant sector only; enhanced counts from spinors depending on x^- are not computed (out of scope)";

fn cell(g: &GeometryProduct, choice: DilatonChoice) -> Result<CountCell, CatalogError> {
    let c = susy_count(g, choice)?;
    Ok(CountCell {
        iia: c.iia,
        iib: c.iib,
        equations_pass: c.equations.passed(),
        enhanced_not_computed: choice == DilatonChoice::Constant && g.has_cw(),
    })
}

pub fn compute_tables() -> Result<Tables, CatalogError> {
    let factors = elementary_factors()?;
    let products = enumerate_parallelisable(10);
    let geometries = products.iter().map(GeometryProduct::name).collect();
    let outcomes: Vec<(GeometryProduct, DilatonOutcome)> =
        products.into_iter().map(|g| solve_dilaton(&g).map(|o| (g, o))).collect::<Result<_, _>>()?;
    let mut dilatons = Vec::new();
    let mut rejected = Vec::new();
    let mut accepted = Vec::new();
    for (g, o) in outcomes {
        match o {
            DilatonOutcome::Accepted(spec) => {
                dilatons.push(DilatonRow { geometry: g.name(), dilaton: spec.pattern.clone(), constraint: spec.constraint.clone() });
                accepted.push((g, spec.constant_allowed));
            }
            DilatonOutcome::Rejected { reason } => rejected.push(RejectedRow { geometry: g.name(), reason }),
        }
    }
    let supersymmetry = accepted
        .par_iter()
        .map(|(g, constant_allowed)| {
            Ok(SusyRow {
                geometry: g.name(),
                constant: if *constant_allowed { Some(cell(g, DilatonChoice::Constant)?) } else { None },
                nonconstant: cell(g, DilatonChoice::Nonconstant)?,
            })
        })
        .collect::<Result<Vec<_>, CatalogError>>()?;
    Ok(Tables { factors, geometries, dilatons, rejected, supersymmetry })
}

fn grid(out: &mut String, header: &[&str], rows: &[Vec<String>]) {
    let widths: Vec<usize> = (0..header.len())
        .map(|c| rows.iter().map(|r| r[c].chars().count()).chain([header[c].len()]).max().unwrap_or(0))
        .collect();
    let line = |cells: Vec<&str>| -> String {
        let padded: Vec<String> = cells.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect();
        padded.join(" | ").trim_end().to_string()
    };
    let _ = writeln!(out, "{}", line(header.to_vec()));
    let _ = writeln!(out, "{}", widths.iter().map(|w| "-".repeat(*w)).collect::<Vec<_>>().join("-+-"));
    for r in rows {
        let _ = writeln!(out, "{}", line(r.iter().map(String::as_str).collect()));
    }
}

pub fn render_factors(t: &Tables) -> String {
    let mut out = String::from("Elementary parallelisable geometries\n\n");
    let rows: Vec<Vec<String>> = t
        .factors
        .iter()
        .map(|f| {
            let name = if f.name.starts_with("CW") { "CW{2n}(A)".to_string() } else { f.name.clone() };
            vec![name, f.torsion.to_string(), f.dilaton.to_string(), if f.computed { "computed" } else { "declared" }.into()]
        })
        .collect();
    grid(&mut out, &["Space", "Torsion", "Dilaton", "Source"], &rows);
    out
}

pub fn render_geometries(t: &Tables) -> String {
    let mut out = String::from("Ten-dimensional simply-connected parallelisable spacetimes\n\n");
    for g in &t.geometries {
        let _ = writeln!(out, "{g}");
    }
    let _ = writeln!(out, "\n{} geometries", t.geometries.len());
    out
}

pub fn render_dilatons(t: &Tables) -> String {
    let mut out = String::from("Parallelisable backgrounds with a linear dilaton (y a spacelike flat coordinate)\n\n");
    let rows: Vec<Vec<String>> = t
        .dilatons
        .iter()
        .map(|r| vec![r.geometry.clone(), r.dilaton.clone(), r.constraint.clone().unwrap_or_default()])
        .collect();
    grid(&mut out, &["Geometry", "Dilaton", "Constraint"], &rows);
    out.push_str("\nGeometries that are not backgrounds\n\n");
    let rows: Vec<Vec<String>> = t.rejected.iter().map(|r| vec![r.geometry.clone(), r.reason.clone()]).collect();
    grid(&mut out, &["Geometry", "Reason"], &rows);
    out
}

pub fn render_supersymmetry(t: &Tables) -> String {
    let mut out = String::from("Supersymmetric parallelisable backgrounds (x: no constant dilaton)\n\n");
    let rows: Vec<Vec<String>> = t
        .supersymmetry
        .iter()
        .map(|r| vec![r.geometry.clone(), r.constant.as_ref().map_or_else(|| "x".into(), CountCell::render), r.nonconstant.render()])
        .collect();
    grid(&mut out, &["Geometry", "Constant dilaton", "Nonconstant dilaton"], &rows);
    let _ = writeln!(out, "\n{FRAME_CONSTANT_FOOTNOTE}");
    out
}

/// The nonempty tables, in order.
pub fn render_tables(t: &Tables) -> String {
    let mut parts = Vec::new();
    if !t.factors.is_empty() {
        parts.push(render_factors(t));
    }
    if !t.geometries.is_empty() {
        parts.push(render_geometries(t));
    }
    if !t.dilatons.is_empty() || !t.rejected.is_empty() {
        parts.push(render_dilatons(t));
    }
    if !t.supersymmetry.is_empty() {
        parts.push(render_supersymmetry(t));
    }
    parts.join("\n")
}

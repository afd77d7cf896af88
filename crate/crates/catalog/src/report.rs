//! The envelope every CLI command emits, in text or JSON.

use std::fmt::Write;

use liealg::Spectrum;
use serde::{Deserialize, Serialize};
use sugra::VerificationReport;

use crate::tables::{render_tables, Tables};

/// Printed with every report, so a missing check is never silent.
pub const OUT_OF_SCOPE: [&str; 3] = [
    "enhanced supersymmetry counts of Cahen-Wallach backgrounds (spinors depending on x^-): not computed (out of scope)",
    "local isometric embeddings as quadrics: not computed (out of scope)",
    "full IIB bundle sector (nonconstant axion-dilaton, three-form fluxes): not computed (out of scope)",
];

/// Canonical form of a Cahen–Wallach matrix.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CwReport {
    pub dim: usize,
    /// Exact eigenvalues when available, decimal approximations otherwise.
    pub eigenvalues: Vec<String>,
    pub exact: bool,
    pub degenerate: bool,
}

impl CwReport {
    pub fn new(dim: usize, spectrum: &Spectrum, degenerate: bool) -> Self {
        let (eigenvalues, exact) = match spectrum {
            Spectrum::Exact(v) => (v.iter().map(ToString::to_string).collect(), true),
            Spectrum::Approximate(v) => (v.iter().map(|x| format!("{x:.12}")).collect(), false),
        };
        CwReport { dim, eigenvalues, exact, degenerate }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Envelope {
    pub command: String,
    pub passed: bool,
    #[serde(default)]
    pub verifications: Vec<VerificationReport>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub tables: Option<Tables>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub cw: Option<CwReport>,
    pub out_of_scope: Vec<String>,
}

impl Envelope {
    pub fn new(command: impl Into<String>) -> Self {
        Envelope {
            command: command.into(),
            passed: true,
            verifications: Vec::new(),
            tables: None,
            cw: None,
            out_of_scope: OUT_OF_SCOPE.iter().map(|s| s.to_string()).collect(),
        }
    }

    /// Recomputes `passed` from the contents.
    pub fn settle(mut self) -> Self {
        self.passed = self.verifications.iter().all(VerificationReport::passed) && self.tables.as_ref().is_none_or(Tables::passed);
        self
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for r in &self.verifications {
            let _ = writeln!(out, "{r}");
        }
        if let Some(t) = &self.tables {
            let _ = writeln!(out, "{}", render_tables(t));
        }
        if let Some(cw) = &self.cw {
            let _ = writeln!(out, "cahen-wallach matrix of size {}", cw.dim);
            let _ = writeln!(out, "  canonical eigenvalues{}: {}", if cw.exact { "" } else { " (approximate)" }, cw.eigenvalues.join(", "));
            let _ = writeln!(
                out,
                "  {}\n",
                if cw.degenerate { "degenerate: A has a zero eigenvalue, the space is decomposable" } else { "nondegenerate: indecomposable" }
            );
        }
        let _ = writeln!(out, "result: {}", if self.passed { "PASS" } else { "FAIL" });
        out.push_str("out of scope:\n");
        for s in &self.out_of_scope {
            let _ = writeln!(out, "  - {s}");
        }
        out
    }
}

//! Single-graph analysis and lift summaries, as printed by the CLI.

use std::fmt::Write as _;

use serde::Serialize;

use crate::error::Result;
use crate::format::{fmt_sig, ser_f64, ser_matrix, ser_opt_f64, ser_vec_f64};
use crate::graph::Graph;
use crate::laplacian::laplacian_of;
use crate::lifting::LiftedGraph;
use crate::spectral::{degree_upper_bound, eigen_sym, fiedler_lower_bound, Tolerances};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BoundKind {
    Lower,
    Upper,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundReport {
    pub id: &'static str,
    pub kind: BoundKind,
    #[serde(serialize_with = "ser_f64")]
    pub bound: f64,
    #[serde(serialize_with = "ser_f64")]
    pub value: f64,
    /// Positive when the bound holds with slack.
    #[serde(serialize_with = "ser_f64")]
    pub margin: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AnalysisReport {
    pub n: usize,
    pub q: usize,
    pub components: usize,
    pub pseudo_connected: bool,
    #[serde(serialize_with = "ser_matrix")]
    pub laplacian: Vec<Vec<f64>>,
    #[serde(serialize_with = "ser_vec_f64")]
    pub eigenvalues: Vec<f64>,
    #[serde(serialize_with = "ser_opt_f64")]
    pub algebraic_connectivity: Option<f64>,
    pub bounds: Vec<BoundReport>,
}

pub fn analyze(g: &Graph, tol: &Tolerances) -> Result<AnalysisReport> {
    let lap = laplacian_of(g);
    let spectrum = eigen_sym(&lap, tol.solver)?;
    // values at solver noise level print as exact zeros
    let noise = tol.solver * spectrum.spectral_radius().max(1.0);
    let eigenvalues: Vec<f64> = spectrum
        .eigenvalues()
        .iter()
        .map(|&x| if x.abs() <= noise { 0.0 } else { x })
        .collect();
    let lam_max = spectrum.max();

    let mut algebraic_connectivity = None;
    let mut bounds = Vec::new();
    if g.is_loopless() {
        if g.vertex_count() >= 2 {
            let a = eigenvalues[1];
            algebraic_connectivity = Some(a);
            if g.is_connected() {
                let bound = fiedler_lower_bound(g.vertex_count())?;
                bounds.push(BoundReport {
                    id: "eq2",
                    kind: BoundKind::Lower,
                    bound,
                    value: a,
                    margin: a - bound,
                });
            }
        }
        let bound = degree_upper_bound(g);
        bounds.push(BoundReport {
            id: "eq3",
            kind: BoundKind::Upper,
            bound,
            value: lam_max,
            margin: bound - lam_max,
        });
    } else {
        let bound = degree_upper_bound(g);
        bounds.push(BoundReport {
            id: "eq8",
            kind: BoundKind::Upper,
            bound,
            value: lam_max,
            margin: bound - lam_max,
        });
    }

    Ok(AnalysisReport {
        n: g.vertex_count(),
        q: g.loop_count(),
        components: g.connected_components().count(),
        pseudo_connected: g.is_pseudo_connected(),
        laplacian: lap.to_rows(),
        eigenvalues,
        algebraic_connectivity,
        bounds,
    })
}

impl AnalysisReport {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "n: {}", self.n).unwrap();
        writeln!(out, "q: {}", self.q).unwrap();
        writeln!(out, "components: {}", self.components).unwrap();
        writeln!(out, "pseudo_connected: {}", self.pseudo_connected).unwrap();
        writeln!(out, "laplacian:").unwrap();
        let rows = crate::laplacian::SymmetricMatrix::from_rows(&self.laplacian)
            .map(|m| m.dump())
            .unwrap_or_default();
        out.push_str(&rows);
        let eig: Vec<String> = self.eigenvalues.iter().map(|&x| fmt_sig(x)).collect();
        writeln!(out, "eigenvalues: {}", eig.join(" ")).unwrap();
        if let Some(a) = self.algebraic_connectivity {
            writeln!(out, "algebraic_connectivity: {}", fmt_sig(a)).unwrap();
        }
        for b in &self.bounds {
            let rel = match b.kind {
                BoundKind::Lower => ">=",
                BoundKind::Upper => "<=",
            };
            writeln!(
                out,
                "{}: {} {} {} (margin {})",
                b.id,
                fmt_sig(b.value),
                rel,
                fmt_sig(b.bound),
                fmt_sig(b.margin)
            )
            .unwrap();
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LiftSummary {
    pub n: usize,
    pub q: usize,
    pub lifted_n: usize,
    pub lifted_edges: usize,
    pub middle: usize,
    pub middle_isolated: bool,
}

impl LiftSummary {
    pub fn of(lg: &LiftedGraph) -> Self {
        let middle = lg.middle();
        LiftSummary {
            n: lg.base().vertex_count(),
            q: lg.base().loop_count(),
            lifted_n: lg.lifted().vertex_count(),
            lifted_edges: lg.lifted().edge_count(),
            middle,
            middle_isolated: lg.lifted().degrees()[middle - 1] == 0,
        }
    }
}

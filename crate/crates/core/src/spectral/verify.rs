//! Per-graph verification of the self-loop spectral results.
//!
//! Each check carries a signed margin: positive means the claim holds with
//! that much slack. Tolerance-based checks pass when the margin is at least
//! minus the scaled match tolerance; positivity checks (`lemma1`, `eq7`)
//! pass only when their margin is strictly positive.

use std::f64::consts::FRAC_1_SQRT_2;
use std::fmt;

use serde::Serialize;

use super::bounds::{degree_upper_bound, fiedler_lower_bound, subset_sorted};
use super::eigen::{eigen_residual, eigen_sym, Spectrum};
use crate::error::{Error, Result};
use crate::format::ser_f64;
use crate::graph::Graph;
use crate::laplacian::laplacian_of;
use crate::lifting::lift;

/// Relative tolerances. The match tolerance and positivity threshold are
/// multiplied by `max(1, ρ(L(Ĝ)))` before use.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Tolerances {
    pub solver: f64,
    pub matching: f64,
    pub positivity: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            solver: 1e-12,
            matching: 1e-8,
            positivity: 1e-8,
        }
    }
}

impl Tolerances {
    pub fn with_matching(self, matching: f64) -> Self {
        Tolerances { matching, ..self }
    }

    /// Defaults, with the match tolerance taken from `LOOPSPEC_TOL` when set.
    pub fn from_env() -> Result<Self> {
        Self::with_override(std::env::var(crate::TOLERANCE_ENV).ok().as_deref())
    }

    /// Defaults, with the match tolerance parsed from `value` when present.
    pub fn with_override(value: Option<&str>) -> Result<Self> {
        let base = Tolerances::default();
        let Some(text) = value else {
            return Ok(base);
        };
        let tol: f64 = text
            .trim()
            .parse()
            .map_err(|_| Error::InvalidTolerance(f64::NAN))?;
        if !(tol > 0.0 && tol.is_finite()) {
            return Err(Error::InvalidTolerance(tol));
        }
        Ok(base.with_matching(tol))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum CheckId {
    /// Path lower bound on algebraic connectivity (connected, loopless).
    #[serde(rename = "eq2")]
    Eq2,
    /// `max σ(L) ≤ 2 d(G)` (loopless).
    #[serde(rename = "eq3")]
    Eq3,
    /// Positive definiteness (pseudo-connected).
    #[serde(rename = "lemma1")]
    Lemma1,
    /// `σ(L(G)) ⊆ σ(L(Ĝ)) ∩ [0, 2 d(G°) + 1]`.
    #[serde(rename = "eq6")]
    Eq6,
    /// The matched lifted eigenvalues are positive (pseudo-connected).
    #[serde(rename = "eq7")]
    Eq7,
    /// `max σ(L(G)) ≤ max σ(L(G°)) + 1 ≤ 2 d(G°) + 1` (with loops).
    #[serde(rename = "eq8")]
    Eq8,
    /// `[v; 0; −v]` is an eigenvector of `L(Ĝ)` for each eigenpair of `L(G)`.
    #[serde(rename = "lift-eigvec")]
    LiftEigvec,
}

impl CheckId {
    pub fn as_str(self) -> &'static str {
        match self {
            CheckId::Eq2 => "eq2",
            CheckId::Eq3 => "eq3",
            CheckId::Lemma1 => "lemma1",
            CheckId::Eq6 => "eq6",
            CheckId::Eq7 => "eq7",
            CheckId::Eq8 => "eq8",
            CheckId::LiftEigvec => "lift-eigvec",
        }
    }
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub id: CheckId,
    pub pass: bool,
    #[serde(serialize_with = "ser_f64")]
    pub margin: f64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GraphSummary {
    pub n: usize,
    pub q: usize,
    pub components: usize,
    pub pseudo_connected: bool,
}

impl GraphSummary {
    pub fn of(g: &Graph) -> Self {
        GraphSummary {
            n: g.vertex_count(),
            q: g.loop_count(),
            components: g.connected_components().count(),
            pseudo_connected: g.is_pseudo_connected(),
        }
    }
}

/// Tolerances as applied to one graph.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AppliedTolerances {
    pub solver: f64,
    pub matching: f64,
    pub positivity: f64,
    #[serde(serialize_with = "ser_f64")]
    pub scale: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub graph: GraphSummary,
    pub checks: Vec<Check>,
    pub tolerances: AppliedTolerances,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> + '_ {
        self.checks.iter().filter(|c| !c.pass)
    }

    pub fn check(&self, id: CheckId) -> Option<&Check> {
        self.checks.iter().find(|c| c.id == id)
    }
}

/// Spectra of a graph and its lift, computed once and shared by all checks.
#[derive(Debug, Clone)]
pub struct SpectralData {
    pub base: Spectrum,
    pub lifted: Spectrum,
    pub lifted_laplacian: crate::laplacian::SymmetricMatrix,
}

impl SpectralData {
    pub fn compute(g: &Graph, solver_tol: f64) -> Result<Self> {
        let base = eigen_sym(&laplacian_of(g), solver_tol)?;
        let lifted_laplacian = laplacian_of(lift(g).lifted());
        let lifted = eigen_sym(&lifted_laplacian, solver_tol)?;
        Ok(SpectralData {
            base,
            lifted,
            lifted_laplacian,
        })
    }

    /// `max(1, ρ(L(Ĝ)))`.
    pub fn scale(&self) -> f64 {
        self.lifted.spectral_radius().max(1.0)
    }
}

/// Largest `‖L(Ĝ) x − λ x‖` over the unit vectors `x = [v; 0; −v] / √2`
/// built from the base eigenpairs.
pub fn lift_eigvec_residual(
    base: &Spectrum,
    lifted_laplacian: &crate::laplacian::SymmetricMatrix,
) -> f64 {
    let n = base.len();
    base.pairs()
        .map(|(lambda, v)| {
            let mut x = vec![0.0; 2 * n + 1];
            for (k, &vk) in v.iter().enumerate() {
                x[k] = vk * FRAC_1_SQRT_2;
                x[n + 1 + k] = -vk * FRAC_1_SQRT_2;
            }
            eigen_residual(lifted_laplacian, lambda, &x)
        })
        .fold(0.0, f64::max)
}

/// Runs every check that applies to `g`.
pub fn verify_all(g: &Graph, tol: &Tolerances) -> Result<VerificationReport> {
    let data = SpectralData::compute(g, tol.solver)?;
    let summary = GraphSummary::of(g);
    let scale = data.scale();
    let mt = tol.matching * scale;
    let pt = tol.positivity * scale;

    let lam_min = data.base.min();
    let lam_max = data.base.max();
    let mut checks = Vec::new();
    let tolerant = |id, margin: f64| Check {
        id,
        pass: margin >= -mt,
        margin,
    };

    if g.is_loopless() {
        if summary.components == 1 && summary.n >= 2 {
            let bound = fiedler_lower_bound(summary.n)?;
            checks.push(tolerant(CheckId::Eq2, data.base.eigenvalues()[1] - bound));
        }
        checks.push(tolerant(CheckId::Eq3, degree_upper_bound(g) - lam_max));
    } else {
        let stripped = eigen_sym(&laplacian_of(&g.strip_self_loops()), tol.solver)?;
        let margin = (stripped.max() + 1.0 - lam_max).min(degree_upper_bound(g) - lam_max);
        checks.push(tolerant(CheckId::Eq8, margin));
    }

    if summary.pseudo_connected {
        let margin = lam_min - pt;
        checks.push(Check {
            id: CheckId::Lemma1,
            pass: margin > 0.0,
            margin,
        });
    }

    let witness = subset_sorted(data.base.eigenvalues(), data.lifted.eigenvalues(), mt);
    let upper = 2.0 * g.strip_self_loops().max_degree() as f64 + 1.0;
    let match_margin = match witness.unmatched {
        None => mt - witness.max_error,
        Some(i) => {
            let x = data.base.eigenvalues()[i];
            let nearest = data
                .lifted
                .eigenvalues()
                .iter()
                .map(|y| (y - x).abs())
                .fold(f64::INFINITY, f64::min);
            mt - nearest
        }
    };
    let interval_margin = (upper - lam_max).min(lam_min);
    checks.push(Check {
        id: CheckId::Eq6,
        pass: witness.holds() && match_margin >= 0.0 && interval_margin >= -mt,
        margin: match_margin.min(interval_margin),
    });

    if summary.pseudo_connected {
        let smallest_match = witness
            .matching
            .iter()
            .map(|&(_, j)| data.lifted.eigenvalues()[j])
            .fold(f64::INFINITY, f64::min);
        let margin = smallest_match - pt;
        checks.push(Check {
            id: CheckId::Eq7,
            pass: witness.holds() && margin > 0.0,
            margin,
        });
    }

    let residual = lift_eigvec_residual(&data.base, &data.lifted_laplacian);
    checks.push(Check {
        id: CheckId::LiftEigvec,
        pass: residual <= mt,
        margin: mt - residual,
    });

    checks.sort_by_key(|c| c.id);
    Ok(VerificationReport {
        graph: summary,
        checks,
        tolerances: AppliedTolerances {
            solver: tol.solver,
            matching: tol.matching,
            positivity: tol.positivity,
            scale,
        },
    })
}

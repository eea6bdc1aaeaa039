//! Exact verification of two geometric computations: a singular component
//! of shape `(3,2,2)` and explicit smooth charts for the components of
//! `Q(k,k,1)`.

mod jet;
mod singular;
mod smooth;

use serde::Serialize;
use thiserror::Error;

use crate::exactlin::LinAlgError;
use crate::tableaux::TableauError;

pub use jet::Jet;
pub use singular::{
    basis_tableau_322, certify_322, chart_point, f_family, singular_tableau_322, verify_curve_membership,
    SingularityCertificate, WitnessCurve,
};
pub use smooth::{
    all_v_vectors, alpha_tilde, eta_basis, phi_map, r_vectors, recover_params, sample_params, v_vectors,
    verify_smooth_chart, ChartReport, PhiParams, RVectors,
};

#[derive(Debug, Error)]
pub enum CertificateError {
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("check failed: {0}")]
    Check(String),
    #[error(transparent)]
    LinAlg(#[from] LinAlgError),
    #[error(transparent)]
    Tableau(#[from] TableauError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
}

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub status: CheckStatus,
    pub detail: String,
}

impl Check {
    pub fn new(name: impl Into<String>, ok: bool, detail: impl Into<String>) -> Self {
        let status = if ok { CheckStatus::Pass } else { CheckStatus::Fail };
        Check { name: name.into(), status, detail: detail.into() }
    }

    pub fn passed(&self) -> bool {
        self.status == CheckStatus::Pass
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CertificateReport {
    pub case: String,
    pub checks: Vec<Check>,
    pub verdict: String,
}

impl CertificateReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }
}

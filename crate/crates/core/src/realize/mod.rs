//! Numerical realization: explicit projections, two-projection spectra,
//! and the exact eigenvalue targets a certificate prescribes.

mod frame;
mod twoproj;

use serde::Serialize;

pub use frame::{
    realize_tff, verify_tff, ProjectionSet, VerifyReport, DEFAULT_MAX_RESTARTS, DEFAULT_TOL,
};
pub use twoproj::{
    spectrum_conditions_hold, two_projection_sum, validate_multiplicity, MultiplicityFn,
};

use crate::configmat::{mu_chain, ConfigMatrix};
use crate::error::Result;
use crate::rational::{ratio, Rational};

/// Eigenvalues of the partial sums `P_1 + … + P_k`, `k = 1..=K`, each list
/// in decreasing order with `N` entries.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpectrumChain {
    #[serde(serialize_with = "rows_as_strings")]
    pub rows: Vec<Vec<Rational>>,
}

fn rows_as_strings<S: serde::Serializer>(
    rows: &[Vec<Rational>],
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    let text: Vec<Vec<String>> = rows
        .iter()
        .map(|r| r.iter().map(|x| x.to_string()).collect())
        .collect();
    text.serialize(s)
}

/// The spectrum of `P_1 + … + P_k` is `μ^k / N`.
pub fn spectrum_chain(a: &ConfigMatrix) -> Result<SpectrumChain> {
    let chain = mu_chain(a)?;
    let n = a.dim();
    let rows = chain.shapes[1..]
        .iter()
        .map(|mu| (0..n).map(|i| ratio(mu.part(i), n)).collect())
        .collect();
    Ok(SpectrumChain { rows })
}

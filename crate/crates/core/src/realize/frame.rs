//! Explicit projection matrices for a TFF sequence, and their verification.

use nalgebra::DMatrix;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::rational::{ratio, to_f64, Rational};

pub const DEFAULT_TOL: f64 = 1e-8;
pub const DEFAULT_MAX_RESTARTS: usize = 20;
const MAX_ITERATIONS: usize = 20_000;

/// Orthonormal bases `U_k` (`N×L_k`) of the ranges of the projections
/// `P_k = U_k U_kᵀ`.
#[derive(Debug, Clone, PartialEq)]
pub struct ProjectionSet {
    pub dim: usize,
    pub alpha: Rational,
    pub bases: Vec<DMatrix<f64>>,
    /// Frobenius residual `‖ΣP_k − αI‖` reached by the construction.
    pub residual: f64,
}

#[derive(Serialize, Deserialize)]
struct BlockJson {
    rank: usize,
    /// One inner list per basis vector.
    basis: Vec<Vec<f64>>,
}

#[derive(Serialize, Deserialize)]
struct ProjectionSetJson {
    dim: usize,
    #[serde(with = "crate::rational::serde_str")]
    alpha: Rational,
    blocks: Vec<BlockJson>,
}

impl Serialize for ProjectionSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ProjectionSetJson {
            dim: self.dim,
            alpha: self.alpha,
            blocks: self
                .bases
                .iter()
                .map(|u| BlockJson {
                    rank: u.ncols(),
                    basis: u
                        .column_iter()
                        .map(|c| c.iter().copied().collect())
                        .collect(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for ProjectionSet {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let json = ProjectionSetJson::deserialize(d)?;
        let mut bases = Vec::with_capacity(json.blocks.len());
        for (k, b) in json.blocks.into_iter().enumerate() {
            if b.basis.len() != b.rank || b.basis.iter().any(|c| c.len() != json.dim) {
                return Err(D::Error::custom(format!(
                    "block {} needs {} columns of length {}",
                    k + 1,
                    b.rank,
                    json.dim
                )));
            }
            let flat: Vec<f64> = b.basis.into_iter().flatten().collect();
            bases.push(DMatrix::from_column_slice(json.dim, b.rank, &flat));
        }
        let mut set = ProjectionSet {
            dim: json.dim,
            alpha: json.alpha,
            bases,
            residual: 0.0,
        };
        set.residual = set.sum_residual();
        Ok(set)
    }
}

impl ProjectionSet {
    /// Builds a set from the concatenated `N×M` basis matrix.
    pub fn from_matrix(matrix: &DMatrix<f64>, ranks: &[usize], alpha: Rational) -> Result<Self> {
        if ranks.iter().sum::<usize>() != matrix.ncols() {
            return Err(Error::DimensionMismatch(format!(
                "ranks {ranks:?} do not add up to {} columns",
                matrix.ncols()
            )));
        }
        let mut bases = Vec::with_capacity(ranks.len());
        let mut col = 0;
        for &l in ranks {
            bases.push(matrix.columns(col, l).into_owned());
            col += l;
        }
        let mut set = ProjectionSet {
            dim: matrix.nrows(),
            alpha,
            bases,
            residual: 0.0,
        };
        set.residual = set.sum_residual();
        Ok(set)
    }

    pub fn ranks(&self) -> Vec<usize> {
        self.bases.iter().map(|u| u.ncols()).collect()
    }

    /// `[U_1|…|U_K]`.
    pub fn matrix(&self) -> DMatrix<f64> {
        concat(&self.bases, self.dim)
    }

    pub fn projections(&self) -> Vec<DMatrix<f64>> {
        self.bases.iter().map(|u| u * u.transpose()).collect()
    }

    fn sum_residual(&self) -> f64 {
        let u = self.matrix();
        (&u * u.transpose() - DMatrix::identity(self.dim, self.dim) * to_f64(self.alpha)).norm()
    }

    /// The concatenated basis, one matrix row per line.
    pub fn to_csv(&self) -> String {
        let u = self.matrix();
        let mut out = String::new();
        for row in u.row_iter() {
            let cells: Vec<String> = row.iter().map(|x| format!("{x:.17e}")).collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out
    }
}

/// The orthonormal polar factor `W Vᵀ` of `x = W Σ Vᵀ`.
fn polar(x: DMatrix<f64>) -> DMatrix<f64> {
    let svd = x.svd(true, true);
    let (w, vt) = (svd.u.expect("requested u"), svd.v_t.expect("requested v_t"));
    w * vt
}

fn random_bases(ranks: &[usize], dim: usize, rng: &mut ChaCha8Rng) -> Vec<DMatrix<f64>> {
    ranks
        .iter()
        .map(|&l| polar(DMatrix::from_fn(dim, l, |_, _| StandardNormal.sample(rng))))
        .collect()
}

fn concat(bases: &[DMatrix<f64>], dim: usize) -> DMatrix<f64> {
    let m: usize = bases.iter().map(|u| u.ncols()).sum();
    let mut out = DMatrix::zeros(dim, m);
    let mut col = 0;
    for u in bases {
        out.columns_mut(col, u.ncols()).copy_from(u);
        col += u.ncols();
    }
    out
}

/// Alternates between the tight frames `UUᵀ = αI` and block-orthonormal
/// matrices. Returns the final bases and their residual.
fn alternate(
    mut bases: Vec<DMatrix<f64>>,
    dim: usize,
    alpha: f64,
    target: f64,
) -> (Vec<DMatrix<f64>>, f64) {
    let identity = DMatrix::<f64>::identity(dim, dim) * alpha;
    let mut best = f64::INFINITY;
    for it in 0..MAX_ITERATIONS {
        let u = concat(&bases, dim);
        let residual = (&u * u.transpose() - &identity).norm();
        if residual <= target {
            return (bases, residual);
        }
        // give up on a start that has stopped improving
        if it % 500 == 499 {
            if residual > 0.99 * best {
                return (bases, residual);
            }
            best = residual;
        }
        let tight = polar(u) * alpha.sqrt();
        let mut col = 0;
        for b in bases.iter_mut() {
            let l = b.ncols();
            *b = polar(tight.columns(col, l).into_owned());
            col += l;
        }
    }
    let u = concat(&bases, dim);
    let residual = (&u * u.transpose() - &identity).norm();
    (bases, residual)
}

/// Finds orthonormal bases with `‖ΣU_kU_kᵀ − αI‖_F ≤ tol`.
///
/// Each restart `r` draws Gaussian blocks from a ChaCha generator seeded
/// with `seed + r`, so the result depends only on the arguments.
pub fn realize_tff(
    ranks: &Partition,
    dim: usize,
    seed: u64,
    tol: f64,
    max_restarts: usize,
) -> Result<ProjectionSet> {
    if !crate::tff::decide(ranks, dim)? {
        return Err(Error::NotATffSequence {
            ranks: ranks.to_string(),
            dim,
        });
    }
    let alpha = ratio(ranks.size(), dim);
    if ranks.parts().iter().all(|&l| l == dim) {
        return ProjectionSet::from_matrix(
            &concat(&vec![DMatrix::identity(dim, dim); ranks.len()], dim),
            ranks.parts(),
            alpha,
        );
    }
    let mut best = f64::INFINITY;
    for restart in 0..max_restarts.max(1) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(restart as u64));
        let start = random_bases(ranks.parts(), dim, &mut rng);
        let (bases, residual) = alternate(start, dim, to_f64(alpha), tol / 2.0);
        if residual <= tol {
            return Ok(ProjectionSet {
                dim,
                alpha,
                bases,
                residual,
            });
        }
        best = best.min(residual);
    }
    Err(Error::ConvergenceFailure {
        restarts: max_restarts.max(1),
        best_residual: best,
    })
}

/// Residuals of a candidate TFF, all in the Frobenius norm.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerifyReport {
    /// `‖ΣP_k − αI‖`.
    pub sum_residual: f64,
    /// `‖U_kᵀU_k − I‖` per block.
    pub orthonormality: Vec<f64>,
    /// `‖P_k² − P_k‖` per block.
    pub idempotence: Vec<f64>,
    /// Eigenvalues of `P_k` above `1/2`.
    pub numerical_ranks: Vec<usize>,
    pub expected_ranks: Vec<usize>,
    pub tol: f64,
    pub pass: bool,
}

/// Checks `S` against `ΣP_k = αI`. Computed from the bases alone.
pub fn verify_tff(set: &ProjectionSet, alpha: Rational, tol: f64) -> VerifyReport {
    let n = set.dim;
    let mut sum = DMatrix::<f64>::zeros(n, n);
    let mut orthonormality = Vec::new();
    let mut idempotence = Vec::new();
    let mut numerical_ranks = Vec::new();
    for u in &set.bases {
        let p = u * u.transpose();
        orthonormality.push((u.transpose() * u - DMatrix::identity(u.ncols(), u.ncols())).norm());
        idempotence.push((&p * &p - &p).norm());
        let eig = p.clone().symmetric_eigen();
        numerical_ranks.push(eig.eigenvalues.iter().filter(|&&l| l > 0.5).count());
        sum += p;
    }
    for i in 0..n {
        sum[(i, i)] -= to_f64(alpha);
    }
    let sum_residual = sum.norm();
    let expected_ranks = set.ranks();
    let pass = sum_residual <= tol
        && orthonormality.iter().all(|&r| r <= tol)
        && idempotence.iter().all(|&r| r <= tol)
        && numerical_ranks == expected_ranks;
    VerifyReport {
        sum_residual,
        orthonormality,
        idempotence,
        numerical_ranks,
        expected_ranks,
        tol,
        pass,
    }
}

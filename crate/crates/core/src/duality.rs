//! Spatial and Naimark duality, for rank sequences and for certificates.

use serde::{Deserialize, Serialize};

use crate::configmat::{check_ranks, mu_chain, require_valid, ConfigMatrix};
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::rational::{as_integer, ratio, Rational};

/// `(L, N) ↦ ((N−L_K, …, N−L_1), N)`, the ranks of the orthogonal
/// complements. The frame bound becomes `K − α`.
///
/// Full-rank blocks complement to zero and are dropped; if nothing is left
/// the result is [`Error::Degenerate`].
pub fn spatial_dual(ranks: &Partition, dim: usize) -> Result<(Partition, usize)> {
    check_ranks(ranks.parts(), dim)?;
    let parts: Vec<usize> = ranks
        .parts()
        .iter()
        .rev()
        .map(|&l| dim - l)
        .filter(|&l| l > 0)
        .collect();
    if parts.is_empty() {
        return Err(Error::Degenerate(format!(
            "every block of {ranks} is full rank in dimension {dim}"
        )));
    }
    Ok((Partition::new(parts)?, dim))
}

/// `(L, N) ↦ (L, M − N)`. The frame bound becomes `α/(α−1)`.
pub fn naimark_dual(ranks: &Partition, dim: usize) -> Result<(Partition, usize)> {
    let m = ranks.size();
    if dim == 0 || m <= dim {
        return Err(Error::AlphaNotGreaterThanOne(ratio(m, dim.max(1))));
    }
    Ok((ranks.clone(), m - dim))
}

/// `(α, N) ↦ (α/(α−1), N(α−1))`, so that `1/α + 1/α̃ = 1` and
/// `TFF(α, N) = TFF(α̃, Ñ)`.
pub fn alpha_reduce(alpha: Rational, dim: usize) -> Result<(Rational, usize)> {
    let one = Rational::from_integer(1);
    if alpha <= one {
        return Err(Error::AlphaNotGreaterThanOne(alpha));
    }
    let reduced_dim = (alpha - one) * Rational::from_integer(dim as i64);
    match as_integer(reduced_dim) {
        Some(d) => Ok((alpha / (alpha - one), d as usize)),
        None => Err(Error::InvalidAlpha(format!(
            "{alpha}*{dim} is not an integer"
        ))),
    }
}

/// When `L_1 = N(α−1)`, `L ∈ TFF(α, N)` iff `(L_2, …, L_K) ∈ TFF(·, N(α−1))`.
pub fn recur_strip(ranks: &Partition, dim: usize) -> Result<(Partition, usize)> {
    let m = ranks.size();
    if m < dim || ranks.part(0) != m - dim {
        return Err(Error::PreconditionNotMet(format!(
            "L1 = {} but N(alpha-1) = {}",
            ranks.part(0),
            m as i64 - dim as i64
        )));
    }
    if ranks.len() < 2 {
        return Err(Error::Degenerate(format!("{ranks} has a single block")));
    }
    Ok((Partition::new(ranks.parts()[1..].to_vec())?, m - dim))
}

/// Row index of each unit in the binary decomposition of a block:
/// `rows[j][y]` is the row of the `j`-th smallest occurrence of letter `y`.
#[allow(clippy::needless_range_loop)]
fn letter_rows(block: &[Vec<u32>], letters: usize) -> Vec<Vec<usize>> {
    let dim = block.len();
    let mut rows = vec![Vec::with_capacity(letters); dim];
    for y in 0..letters {
        let occurrences = (0..dim).flat_map(|x| std::iter::repeat_n(x, block[x][y] as usize));
        for (j, x) in occurrences.enumerate() {
            rows[j].push(x);
        }
    }
    rows
}

/// Splits an `N×L` block into `N` binary matrices `C_1, …, C_N` with one
/// unit per column, rows increasing along each `C_j` and, column by column,
/// weakly increasing in `j`. Each summand is returned as its `N×L` rows.
///
/// Fails with [`Error::InvalidCertificate`] if the block does not admit such
/// a decomposition (some letter is not used exactly `N` times, or two letters
/// of one summand share a row).
pub fn binary_decomposition(block: &[Vec<u32>]) -> Result<Vec<Vec<Vec<u32>>>> {
    let dim = block.len();
    let letters = block.first().map_or(0, Vec::len);
    for y in 0..letters {
        let used: u32 = block.iter().map(|r| r[y]).sum();
        if used as usize != dim {
            return Err(Error::InvalidCertificate(format!(
                "letter {} is used {used} times, expected {dim}",
                y + 1
            )));
        }
    }
    let rows = letter_rows(block, letters);
    for (j, r) in rows.iter().enumerate() {
        if r.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidCertificate(format!(
                "summand {} has two letters in one row",
                j + 1
            )));
        }
    }
    Ok(rows
        .iter()
        .map(|r| {
            let mut c = vec![vec![0u32; letters]; dim];
            for (y, &x) in r.iter().enumerate() {
                c[x][y] = 1;
            }
            c
        })
        .collect())
}

/// `C′` for a binary summand `C`: the rows `C` leaves empty, in increasing
/// order, each get one unit, so that `[C|C′]` is a permutation matrix.
pub fn complement_summand(c: &[Vec<u32>]) -> Vec<Vec<u32>> {
    let dim = c.len();
    let letters = c.first().map_or(0, Vec::len);
    let mut out = vec![vec![0u32; dim.saturating_sub(letters)]; dim];
    let free = (0..dim).filter(|&x| c[x].iter().all(|&v| v == 0));
    for (y, x) in free.enumerate() {
        out[x][y] = 1;
    }
    out
}

fn complement_block(block: &[Vec<u32>]) -> Result<Vec<Vec<u32>>> {
    let dim = block.len();
    let letters = block.first().map_or(0, Vec::len);
    let mut out = vec![vec![0u32; dim - letters]; dim];
    for c in binary_decomposition(block)? {
        for (row, add) in out.iter_mut().zip(complement_summand(&c)) {
            for (v, w) in row.iter_mut().zip(add) {
                *v += w;
            }
        }
    }
    Ok(out)
}

/// The certificate-level spatial dual: `A = [A_1|…|A_K]` for `(L, N)` maps to
/// `B = [B_K|…|B_1]` for `((N−L_K, …, N−L_1), N)`, where `B_i` is the
/// complement of `A_i`. An involution.
pub fn config_spatial_dual(a: &ConfigMatrix) -> Result<ConfigMatrix> {
    require_valid(a)?;
    let dim = a.dim();
    if let Some(k) = a.ranks().iter().position(|&l| l == dim) {
        return Err(Error::Degenerate(format!(
            "block {} is full rank, its complement is empty",
            k + 1
        )));
    }
    let blocks = (0..a.num_blocks())
        .rev()
        .map(|k| complement_block(&a.block(k)))
        .collect::<Result<Vec<_>>>()?;
    let b = ConfigMatrix::from_blocks(dim, &blocks)?;
    debug_assert!(require_valid(&b).is_ok());
    Ok(b)
}

/// `T_k` for every block: `T_k[x][y] = 1` iff value `x` of block `k` sits in
/// column `y` of `μ^k/μ^{k−1}`.
pub fn column_incidence(a: &ConfigMatrix) -> Result<Vec<Vec<Vec<u8>>>> {
    let chain = mu_chain(a)?;
    let m = a.cols();
    Ok((0..a.num_blocks())
        .map(|k| {
            let mut t = vec![vec![0u8; m]; a.ranks()[k]];
            for i in 0..a.dim() {
                let mut col = chain.shapes[k].part(i);
                for (x, row) in t.iter_mut().enumerate() {
                    for _ in 0..a.block_entry(k, i, x) {
                        row[col] = 1;
                        col += 1;
                    }
                }
            }
            t
        })
        .collect())
}

/// The certificate-level Naimark dual: `(L, N) ↦ (L, M−N)`. Each `T_k` is
/// complemented and column-reversed, `S_k[x][y] = 1 − T_k[x][M−1−y]`, and
/// the ones of the stacked `S_1, …, S_K` are pushed to the top of each
/// column. The row a unit lands in, together with its block and value,
/// gives the dual certificate. An involution.
pub fn config_naimark_dual(a: &ConfigMatrix) -> Result<ConfigMatrix> {
    let t = column_incidence(a)?;
    let m = a.cols();
    let dual_dim = m - a.dim();
    if dual_dim == 0 {
        return Err(Error::Degenerate(format!(
            "M = N = {m}, the dual dimension is zero"
        )));
    }
    let mut blocks: Vec<Vec<Vec<u32>>> = a
        .ranks()
        .iter()
        .map(|&l| vec![vec![0u32; l]; dual_dim])
        .collect();
    for y in 0..m {
        let mut row = 0;
        for (k, tk) in t.iter().enumerate() {
            for (x, tx) in tk.iter().enumerate() {
                if tx[m - 1 - y] == 0 {
                    blocks[k][row][x] += 1;
                    row += 1;
                }
            }
        }
    }
    let b = ConfigMatrix::from_blocks(dual_dim, &blocks)?;
    debug_assert!(require_valid(&b).is_ok());
    Ok(b)
}

/// Which duality produced a certificate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DualKind {
    Spatial,
    Naimark,
}

/// A dual certificate annotated with where it came from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DualCertificate {
    #[serde(flatten)]
    pub certificate: ConfigMatrix,
    pub dual: DualKind,
    pub source_ranks: Vec<usize>,
}

pub fn dual_certificate(a: &ConfigMatrix, kind: DualKind) -> Result<DualCertificate> {
    let certificate = match kind {
        DualKind::Spatial => config_spatial_dual(a)?,
        DualKind::Naimark => config_naimark_dual(a)?,
    };
    Ok(DualCertificate {
        certificate,
        dual: kind,
        source_ranks: a.ranks().to_vec(),
    })
}

//! Configuration matrices: integer certificates for tight fusion frames.
//!
//! For a dimension `N` and ranks `L = (L_1, …, L_K)` with `M = ΣL_k`, a
//! configuration matrix is an `N×M` nonnegative integer matrix split into
//! column blocks `[A_1|…|A_K]` (block `k` has `L_k` columns) such that
//!
//! * (ii) every row sums to `M`,
//! * (iii) every column sums to `N`,
//! * (iv) `Σ_{j≤l} (A[i,j] − A[i+1,j]) ≥ A[i+1,l+1]` for all `i, l`,
//! * (v) inside each block, `Σ_{i≤l} (A_k[i,j] − A_k[i,j+1]) ≥ A_k[l+1,j+1]`.
//!
//! Property (i), nonnegative integrality, is carried by the entry type.
//!
//! Such matrices are in bijection with chains of Littlewood-Richardson skew
//! tableaux `μ^k/μ^{k−1}` of rectangular content `(N^{L_k})` ending at the
//! full rectangle `(M^N)`. Row `i` of block `k` records how many `1`s, `2`s,
//! … of the `k`-th tableau sit in row `i`. Their number is the
//! Littlewood-Richardson coefficient `c((N^{L_1}),…,(N^{L_K}); (M^N))`, and a
//! rank sequence is a tight fusion frame sequence exactly when one exists.

mod oracle;
mod search;
mod tableau;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::Partition;

pub use oracle::{hook_completion_feasible, lr_oracle, okada_product};
pub use search::{all_configs, count_configs, find_config, for_each_config};
pub use tableau::{render_stages, render_tableaux, Cell, Tableau};

pub(crate) use search::{check_ranks, config_exists};

/// An `N×M` certificate matrix with its block structure.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "ConfigMatrixJson", into = "ConfigMatrixJson")]
pub struct ConfigMatrix {
    dim: usize,
    ranks: Vec<usize>,
    /// Row-major, `dim × Σranks`.
    entries: Vec<u32>,
}

#[derive(Serialize, Deserialize)]
struct ConfigMatrixJson {
    dim: usize,
    ranks: Vec<usize>,
    entries: Vec<Vec<u32>>,
}

impl TryFrom<ConfigMatrixJson> for ConfigMatrix {
    type Error = Error;

    fn try_from(json: ConfigMatrixJson) -> Result<Self> {
        ConfigMatrix::new(json.dim, json.ranks, json.entries)
    }
}

impl From<ConfigMatrix> for ConfigMatrixJson {
    fn from(a: ConfigMatrix) -> Self {
        ConfigMatrixJson {
            dim: a.dim,
            entries: a.rows(),
            ranks: a.ranks,
        }
    }
}

impl ConfigMatrix {
    /// Builds a matrix from its rows. Checks shapes only; use
    /// [`validate_config`] for the certificate properties.
    pub fn new(dim: usize, ranks: Vec<usize>, rows: Vec<Vec<u32>>) -> Result<Self> {
        if ranks.is_empty() || ranks.contains(&0) {
            return Err(Error::DimensionMismatch(format!(
                "block ranks must be positive and nonempty, got {ranks:?}"
            )));
        }
        let cols: usize = ranks.iter().sum();
        if rows.len() != dim {
            return Err(Error::DimensionMismatch(format!(
                "expected {dim} rows, got {}",
                rows.len()
            )));
        }
        if let Some((i, row)) = rows.iter().enumerate().find(|(_, r)| r.len() != cols) {
            return Err(Error::DimensionMismatch(format!(
                "row {} has {} entries, expected {cols}",
                i + 1,
                row.len()
            )));
        }
        Ok(ConfigMatrix {
            dim,
            ranks,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub(crate) fn from_flat(dim: usize, ranks: Vec<usize>, entries: Vec<u32>) -> Self {
        debug_assert_eq!(entries.len(), dim * ranks.iter().sum::<usize>());
        ConfigMatrix {
            dim,
            ranks,
            entries,
        }
    }

    /// `N`, the number of rows.
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    /// `M`, the number of columns.
    pub fn cols(&self) -> usize {
        self.ranks.iter().sum()
    }

    pub fn num_blocks(&self) -> usize {
        self.ranks.len()
    }

    pub fn get(&self, row: usize, col: usize) -> u32 {
        self.entries[row * self.cols() + col]
    }

    /// Entry with out-of-range indices read as zero.
    fn get_or_zero(&self, row: usize, col: usize) -> u32 {
        if row < self.dim && col < self.cols() {
            self.get(row, col)
        } else {
            0
        }
    }

    pub fn row(&self, row: usize) -> &[u32] {
        let m = self.cols();
        &self.entries[row * m..(row + 1) * m]
    }

    pub fn rows(&self) -> Vec<Vec<u32>> {
        (0..self.dim).map(|i| self.row(i).to_vec()).collect()
    }

    /// First column of block `k`.
    pub fn block_offset(&self, k: usize) -> usize {
        self.ranks[..k].iter().sum()
    }

    /// `A_k[row, letter]` (0-based).
    pub fn block_entry(&self, k: usize, row: usize, letter: usize) -> u32 {
        self.get(row, self.block_offset(k) + letter)
    }

    /// Block `k` as its own `N×L_k` rows.
    pub fn block(&self, k: usize) -> Vec<Vec<u32>> {
        let off = self.block_offset(k);
        (0..self.dim)
            .map(|i| self.row(i)[off..off + self.ranks[k]].to_vec())
            .collect()
    }

    /// Assembles a matrix from per-block `N×L_k` row lists.
    pub fn from_blocks(dim: usize, blocks: &[Vec<Vec<u32>>]) -> Result<Self> {
        let ranks: Vec<usize> = blocks
            .iter()
            .map(|b| b.first().map_or(0, Vec::len))
            .collect();
        let rows = (0..dim)
            .map(|i| {
                blocks
                    .iter()
                    .flat_map(|b| b.get(i).cloned().unwrap_or_default())
                    .collect()
            })
            .collect();
        ConfigMatrix::new(dim, ranks, rows)
    }
}

impl fmt::Display for ConfigMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self
            .entries
            .iter()
            .map(|e| e.to_string().len())
            .max()
            .unwrap_or(1);
        for i in 0..self.dim {
            let mut col = 0;
            for (k, &l) in self.ranks.iter().enumerate() {
                if k > 0 {
                    write!(f, " |")?;
                }
                for _ in 0..l {
                    write!(f, " {:>width$}", self.get(i, col))?;
                    col += 1;
                }
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// The first certificate property a matrix fails. Indices are 0-based.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "property", rename_all = "snake_case")]
pub enum Violation {
    /// (ii)
    RowSum { row: usize, sum: u64, expected: u64 },
    /// (iii)
    ColumnSum { col: usize, sum: u64, expected: u64 },
    /// (iv): rows `row` and `row + 1` fail at prefix length `prefix`.
    RowDominance { row: usize, prefix: usize },
    /// (v): letters `letter` and `letter + 1` of `block` fail at prefix length `prefix`.
    ColumnDominance {
        block: usize,
        letter: usize,
        prefix: usize,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Violation::RowSum { row, sum, expected } => {
                write!(f, "(ii) row {} sums to {sum}, expected {expected}", row + 1)
            }
            Violation::ColumnSum { col, sum, expected } => {
                write!(
                    f,
                    "(iii) column {} sums to {sum}, expected {expected}",
                    col + 1
                )
            }
            Violation::RowDominance { row, prefix } => write!(
                f,
                "(iv) rows {} and {} at prefix length {prefix}",
                row + 1,
                row + 2
            ),
            Violation::ColumnDominance {
                block,
                letter,
                prefix,
            } => write!(
                f,
                "(v) block {} columns {} and {} at prefix length {prefix}",
                block + 1,
                letter + 1,
                letter + 2
            ),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Validation {
    pub valid: bool,
    pub violation: Option<Violation>,
}

/// Checks properties (ii)–(v). (v) is checked inside each block only.
pub fn validate_config(a: &ConfigMatrix) -> Result<Validation> {
    let n = a.dim;
    let m = a.cols();
    if a.entries.len() != n * m {
        return Err(Error::DimensionMismatch(format!(
            "{} entries for a {n}x{m} matrix",
            a.entries.len()
        )));
    }
    let fail = |v| {
        Ok(Validation {
            valid: false,
            violation: Some(v),
        })
    };

    for i in 0..n {
        let sum: u64 = a.row(i).iter().map(|&x| x as u64).sum();
        if sum != m as u64 {
            return fail(Violation::RowSum {
                row: i,
                sum,
                expected: m as u64,
            });
        }
    }
    for j in 0..m {
        let sum: u64 = (0..n).map(|i| a.get(i, j) as u64).sum();
        if sum != n as u64 {
            return fail(Violation::ColumnSum {
                col: j,
                sum,
                expected: n as u64,
            });
        }
    }
    // (iv): prefix sums of row i over the first l columns dominate those of
    // row i+1 over the first l+1 columns.
    for i in 0..n.saturating_sub(1) {
        let mut upper = 0i64;
        let mut lower = 0i64;
        for l in 0..=m {
            if l > 0 {
                upper += a.get(i, l - 1) as i64;
                lower += a.get(i + 1, l - 1) as i64;
            }
            if upper - lower < a.get_or_zero(i + 1, l) as i64 {
                return fail(Violation::RowDominance { row: i, prefix: l });
            }
        }
    }
    // (v): inside block k, column j (top l rows) dominates column j+1 (top l+1 rows).
    for (k, &width) in a.ranks.iter().enumerate() {
        let off = a.block_offset(k);
        for j in 0..width.saturating_sub(1) {
            let mut left = 0i64;
            let mut right = 0i64;
            for l in 0..=n {
                if l > 0 {
                    left += a.get(l - 1, off + j) as i64;
                    right += a.get(l - 1, off + j + 1) as i64;
                }
                let next = if l < n {
                    a.get(l, off + j + 1) as i64
                } else {
                    0
                };
                if left - right < next {
                    return fail(Violation::ColumnDominance {
                        block: k,
                        letter: j,
                        prefix: l,
                    });
                }
            }
        }
    }
    Ok(Validation {
        valid: true,
        violation: None,
    })
}

pub(crate) fn require_valid(a: &ConfigMatrix) -> Result<()> {
    match validate_config(a)?.violation {
        None => Ok(()),
        Some(v) => Err(Error::InvalidCertificate(v.to_string())),
    }
}

/// The shapes `∅ = μ^0 ⊆ μ^1 ⊆ … ⊆ μ^K = (M^N)` of a certificate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MuChain {
    pub dim: usize,
    pub cols: usize,
    /// `shapes[k]` is `μ^k`; `shapes[0]` is empty.
    pub shapes: Vec<Partition>,
}

/// `μ^k` is the vector of row sums of the prefix `[A_1|…|A_k]`.
pub fn mu_chain(a: &ConfigMatrix) -> Result<MuChain> {
    require_valid(a)?;
    let mut sums = vec![0usize; a.dim];
    let mut shapes = vec![Partition::empty()];
    let mut col = 0;
    for &width in &a.ranks {
        for (i, s) in sums.iter_mut().enumerate() {
            *s += a.row(i)[col..col + width]
                .iter()
                .map(|&x| x as usize)
                .sum::<usize>();
        }
        col += width;
        // (iv) makes the row sums weakly decreasing already.
        shapes.push(Partition::new(sums.clone())?);
    }
    Ok(MuChain {
        dim: a.dim,
        cols: a.cols(),
        shapes,
    })
}

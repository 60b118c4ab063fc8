//! Text rendering of certificates as unions of skew LR tableaux.
//!
//! Row `i` of `μ^k/μ^{k−1}` receives `A_k[i,1]` ones, `A_k[i,2]` twos, … in
//! weakly increasing order. Each box prints as `k:v` (block, value), boxes
//! are separated by one space and rows by newlines.

use std::fmt;
use std::str::FromStr;

use super::{require_valid, ConfigMatrix};
use crate::error::{Error, Result};

/// A box label: block index and value, both 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cell {
    pub block: usize,
    pub value: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tableau {
    pub rows: Vec<Vec<Cell>>,
}

impl Tableau {
    fn from_config(a: &ConfigMatrix, blocks: usize) -> Tableau {
        let rows = (0..a.dim())
            .map(|i| {
                let mut row = Vec::new();
                for k in 0..blocks {
                    for letter in 0..a.ranks()[k] {
                        let count = a.block_entry(k, i, letter) as usize;
                        row.extend(std::iter::repeat_n(
                            Cell {
                                block: k + 1,
                                value: letter + 1,
                            },
                            count,
                        ));
                    }
                }
                row
            })
            .collect();
        Tableau { rows }
    }

    /// Reads the certificate back: `N` is the number of rows and block `k`
    /// has as many columns as its largest value.
    pub fn to_config(&self) -> Result<ConfigMatrix> {
        let dim = self.rows.len();
        let blocks = self
            .rows
            .iter()
            .flatten()
            .map(|c| c.block)
            .max()
            .ok_or_else(|| Error::InvalidShape("empty tableau".into()))?;
        let mut ranks = vec![0; blocks];
        for c in self.rows.iter().flatten() {
            ranks[c.block - 1] = ranks[c.block - 1].max(c.value);
        }
        let offsets: Vec<usize> = ranks
            .iter()
            .scan(0, |acc, &r| {
                let o = *acc;
                *acc += r;
                Some(o)
            })
            .collect();
        let cols: usize = ranks.iter().sum();
        let rows = self
            .rows
            .iter()
            .map(|row| {
                let mut counts = vec![0u32; cols];
                for c in row {
                    counts[offsets[c.block - 1] + c.value - 1] += 1;
                }
                counts
            })
            .collect();
        ConfigMatrix::new(dim, ranks, rows)
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = row
                .iter()
                .map(|c| format!("{}:{}", c.block, c.value))
                .collect();
            write!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

impl FromStr for Tableau {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let parse_cell = |tok: &str| -> Result<Cell> {
            let bad = || Error::InvalidShape(format!("bad tableau cell {tok:?}"));
            let (b, v) = tok.split_once(':').ok_or_else(bad)?;
            let block: usize = b.parse().map_err(|_| bad())?;
            let value: usize = v.parse().map_err(|_| bad())?;
            if block == 0 || value == 0 {
                return Err(bad());
            }
            Ok(Cell { block, value })
        };
        let rows = text
            .trim_end_matches('\n')
            .lines()
            .map(|line| line.split_whitespace().map(parse_cell).collect())
            .collect::<Result<_>>()?;
        Ok(Tableau { rows })
    }
}

/// The union of the skew tableaux `μ^k/μ^{k−1}` over all blocks.
pub fn render_tableaux(a: &ConfigMatrix) -> Result<Tableau> {
    require_valid(a)?;
    Ok(Tableau::from_config(a, a.num_blocks()))
}

/// The unions over the first `k` blocks, for `k = 1..=K`.
pub fn render_stages(a: &ConfigMatrix) -> Result<Vec<Tableau>> {
    require_valid(a)?;
    Ok((1..=a.num_blocks())
        .map(|k| Tableau::from_config(a, k))
        .collect())
}

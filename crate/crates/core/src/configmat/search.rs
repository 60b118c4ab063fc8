//! Exact search over configuration matrices.
//!
//! Certificates are built block by block. Inside a block the entries are
//! chosen column by column (left to right) and each column top to bottom,
//! trying values in increasing order, with the row-sum cap `M`, the exact
//! column sum `N`, and properties (iv)/(v) checked on every prefix. A block
//! is an LR filling of the skew shape `μ^k/μ^{k−1}`, so the search state
//! between blocks is just the current shape `μ^k`. Counting runs a dynamic
//! program over these shapes; existence search is a depth-first walk that
//! remembers dead shapes.
//!
//! Both walks discard a shape `μ` once the remaining rectangles cannot
//! complete it: the complement `μ*` in `(M^N)` must lie in the support of
//! the product of the remaining Schur functions, which sits inside the
//! dominance interval between the union and the row-wise sum of those
//! rectangles.

use std::collections::{HashMap, HashSet};
use std::ops::ControlFlow;

use rayon::prelude::*;

use super::ConfigMatrix;
use crate::error::{Error, Result};

pub(crate) fn check_ranks(ranks: &[usize], dim: usize) -> Result<()> {
    if dim == 0 {
        return Err(Error::InvalidRanks("dimension must be positive".into()));
    }
    if ranks.is_empty() {
        return Err(Error::InvalidRanks("empty rank sequence".into()));
    }
    if ranks.contains(&0) {
        return Err(Error::InvalidRanks(format!("zero rank in {ranks:?}")));
    }
    if let Some(&r) = ranks.iter().find(|&&r| r > dim) {
        return Err(Error::InvalidRanks(format!(
            "rank {r} exceeds the dimension {dim}"
        )));
    }
    Ok(())
}

type Visit<'a> = dyn FnMut(&[u32], &[usize]) -> ControlFlow<()> + 'a;

/// Enumerates every LR filling of content `(dim^letters)` placed on top of
/// `shape` (padded to `dim` rows) within width `cap`, in lexicographic order
/// of the column-major entry vector.
///
/// `visit` receives the block (row-major, `dim × letters`) and the new shape.
pub(crate) fn for_each_block_filling(
    shape: &[usize],
    dim: usize,
    cap: usize,
    letters: usize,
    visit: &mut Visit<'_>,
) -> ControlFlow<()> {
    debug_assert_eq!(shape.len(), dim);
    let mut filler = Filler {
        n: dim,
        cap,
        letters,
        block: vec![0; dim * letters],
        lens: vec![0; dim * (letters + 1)],
        cums: vec![0; dim * letters],
        room: vec![0; dim + 1],
    };
    filler.lens[..dim].copy_from_slice(shape);
    filler.start_column(0);
    filler.fill(0, 0, 0, visit)
}

struct Filler {
    n: usize,
    cap: usize,
    letters: usize,
    block: Vec<u32>,
    /// `lens[j*n + r]`: length of row `r` before letter `j` is placed.
    lens: Vec<usize>,
    /// `cums[j*n + r]`: copies of letter `j` in rows `0..=r`.
    cums: Vec<usize>,
    /// `room[r]`: most copies of the current letter rows `r..` can take.
    room: Vec<usize>,
}

impl Filler {
    fn start_column(&mut self, j: usize) {
        let n = self.n;
        let lens = &self.lens[j * n..(j + 1) * n];
        self.room[n] = 0;
        for r in (0..n).rev() {
            let mut c = self.cap - lens[r];
            if r > 0 {
                c = c.min(lens[r - 1] - lens[r]);
            }
            self.room[r] = self.room[r + 1] + c.min(n);
        }
    }

    fn fill(
        &mut self,
        j: usize,
        i: usize,
        colsum: usize,
        visit: &mut Visit<'_>,
    ) -> ControlFlow<()> {
        let n = self.n;
        if j == self.letters {
            let shape = &self.lens[j * n..(j + 1) * n];
            return visit(&self.block, shape);
        }
        if i == n {
            for r in 0..n {
                let a = self.block[r * self.letters + j] as usize;
                self.lens[(j + 1) * n + r] = self.lens[j * n + r] + a;
                self.cums[j * n + r] = a + if r > 0 { self.cums[j * n + r - 1] } else { 0 };
            }
            if j + 1 < self.letters {
                self.start_column(j + 1);
            }
            let flow = self.fill(j + 1, 0, 0, visit);
            if j + 1 < self.letters {
                self.start_column(j);
            }
            return flow;
        }

        let row_len = self.lens[j * n + i];
        let mut hi = (n - colsum).min(self.cap - row_len);
        if i > 0 {
            // column strictness against the row above
            hi = hi.min(self.lens[j * n + i - 1] - row_len);
        }
        if j > 0 {
            // lattice condition: letter j through row i vs letter j-1 through row i-1
            let above = if i > 0 {
                self.cums[(j - 1) * n + i - 1]
            } else {
                0
            };
            if above < colsum {
                return ControlFlow::Continue(());
            }
            hi = hi.min(above - colsum);
        }
        let need = n - colsum;
        let lo = need.saturating_sub(self.room[i + 1]);
        if lo > hi {
            return ControlFlow::Continue(());
        }
        let idx = i * self.letters + j;
        for a in lo..=hi {
            self.block[idx] = a as u32;
            if self.fill(j, i + 1, colsum + a, visit).is_break() {
                self.block[idx] = 0;
                return ControlFlow::Break(());
            }
        }
        self.block[idx] = 0;
        ControlFlow::Continue(())
    }
}

/// Completion filter for the shapes reached after each block prefix.
struct Completion {
    dim: usize,
    cols: usize,
    /// Per level: prefix sums of the row-wise sum of the remaining rectangles.
    upper: Vec<Vec<usize>>,
    /// Per level: total rank still to place.
    remaining: Vec<usize>,
}

impl Completion {
    fn new(ranks: &[usize], dim: usize) -> Self {
        let k = ranks.len();
        let mut upper = Vec::with_capacity(k + 1);
        let mut remaining = Vec::with_capacity(k + 1);
        for level in 0..=k {
            let rest = &ranks[level..];
            remaining.push(rest.iter().sum());
            let mut acc = 0;
            upper.push(
                (1..=dim)
                    .map(|i| {
                        acc += dim * rest.iter().filter(|&&l| l >= i).count();
                        acc
                    })
                    .collect(),
            );
        }
        Completion {
            dim,
            cols: ranks.iter().sum(),
            upper,
            remaining,
        }
    }

    /// Whether `shape`, reached after `level` blocks, can still be completed.
    fn allows(&self, level: usize, shape: &[usize]) -> bool {
        let rest = self.remaining[level];
        let mut prefix = 0;
        for i in 0..self.dim {
            prefix += self.cols - shape[self.dim - 1 - i];
            if prefix > self.upper[level][i] || prefix < self.dim * (i + 1).min(rest) {
                return false;
            }
        }
        true
    }
}

/// The number of configuration matrices for `ranks` in dimension `dim`,
/// i.e. the coefficient `c((N^{L_1}),…,(N^{L_K}); (M^N))`.
///
/// `ranks` may be in any order; the count does not depend on it.
pub fn count_configs(ranks: &[usize], dim: usize) -> Result<u128> {
    check_ranks(ranks, dim)?;
    let cols: usize = ranks.iter().sum();
    let completion = Completion::new(ranks, dim);
    let mut states: HashMap<Vec<usize>, u128> = HashMap::new();
    states.insert(vec![0; dim], 1);
    for (k, &letters) in ranks.iter().enumerate() {
        let current: Vec<(Vec<usize>, u128)> = states.into_iter().collect();
        states = current
            .par_iter()
            .fold(
                HashMap::new,
                |mut acc: HashMap<Vec<usize>, u128>, (shape, count)| {
                    let _ = for_each_block_filling(shape, dim, cols, letters, &mut |_, next| {
                        if completion.allows(k + 1, next) {
                            *acc.entry(next.to_vec()).or_default() += count;
                        }
                        ControlFlow::Continue(())
                    });
                    acc
                },
            )
            .reduce(HashMap::new, |mut a, b| {
                if a.len() < b.len() {
                    return merge(b, a);
                }
                for (s, c) in b {
                    *a.entry(s).or_default() += c;
                }
                a
            });
    }
    Ok(states.get(&vec![cols; dim]).copied().unwrap_or(0))
}

fn merge(
    mut a: HashMap<Vec<usize>, u128>,
    b: HashMap<Vec<usize>, u128>,
) -> HashMap<Vec<usize>, u128> {
    for (s, c) in b {
        *a.entry(s).or_default() += c;
    }
    a
}

struct Walk<'a> {
    dim: usize,
    cols: usize,
    ranks: &'a [usize],
    completion: Completion,
    dead: Vec<HashSet<Vec<usize>>>,
    /// Chosen blocks, deepest first.
    chosen: Vec<Vec<u32>>,
    record: bool,
}

impl Walk<'_> {
    fn dfs(&mut self, level: usize, shape: &[usize]) -> bool {
        if level == self.ranks.len() {
            return shape.iter().all(|&s| s == self.cols);
        }
        if self.dead[level].contains(shape) {
            return false;
        }
        let (dim, cols, letters) = (self.dim, self.cols, self.ranks[level]);
        let mut found = false;
        let _ = for_each_block_filling(shape, dim, cols, letters, &mut |block, next| {
            if !self.completion.allows(level + 1, next) {
                return ControlFlow::Continue(());
            }
            if self.dfs(level + 1, next) {
                if self.record {
                    self.chosen.push(block.to_vec());
                }
                found = true;
                ControlFlow::Break(())
            } else {
                ControlFlow::Continue(())
            }
        });
        if !found {
            self.dead[level].insert(shape.to_vec());
        }
        found
    }
}

fn walk(ranks: &[usize], dim: usize, record: bool) -> Result<Option<Vec<Vec<u32>>>> {
    check_ranks(ranks, dim)?;
    let mut w = Walk {
        dim,
        cols: ranks.iter().sum(),
        ranks,
        completion: Completion::new(ranks, dim),
        dead: vec![HashSet::new(); ranks.len()],
        chosen: Vec::new(),
        record,
    };
    if !w.completion.allows(0, &vec![0; dim]) {
        return Ok(None);
    }
    if w.dfs(0, &vec![0; dim]) {
        w.chosen.reverse();
        Ok(Some(w.chosen))
    } else {
        Ok(None)
    }
}

/// Whether any configuration matrix exists, without building one.
pub(crate) fn config_exists(ranks: &[usize], dim: usize) -> Result<bool> {
    walk(ranks, dim, false).map(|found| found.is_some())
}

/// The lexicographically smallest configuration matrix (comparing entries in
/// column-major order), or `None` when there is none.
pub fn find_config(ranks: &[usize], dim: usize) -> Result<Option<ConfigMatrix>> {
    let Some(blocks) = walk(ranks, dim, true)? else {
        return Ok(None);
    };
    Ok(Some(assemble(&blocks, ranks, dim)))
}

fn assemble(blocks: &[Vec<u32>], ranks: &[usize], dim: usize) -> ConfigMatrix {
    let cols: usize = ranks.iter().sum();
    let mut entries = vec![0u32; dim * cols];
    let mut offset = 0;
    for (block, &letters) in blocks.iter().zip(ranks) {
        for i in 0..dim {
            for j in 0..letters {
                entries[i * cols + offset + j] = block[i * letters + j];
            }
        }
        offset += letters;
    }
    ConfigMatrix::from_flat(dim, ranks.to_vec(), entries)
}

struct Enumerate<'a, 'v> {
    dim: usize,
    cols: usize,
    ranks: &'a [usize],
    completion: Completion,
    dead: Vec<HashSet<Vec<usize>>>,
    blocks: Vec<Vec<u32>>,
    visit: &'v mut dyn FnMut(&ConfigMatrix) -> ControlFlow<()>,
}

impl Enumerate<'_, '_> {
    /// Returns whether any certificate passes through `shape`, or breaks
    /// when the visitor asks to stop.
    fn dfs(&mut self, level: usize, shape: &[usize]) -> ControlFlow<(), bool> {
        if level == self.ranks.len() {
            let a = assemble(&self.blocks, self.ranks, self.dim);
            (self.visit)(&a)?;
            return ControlFlow::Continue(true);
        }
        if self.dead[level].contains(shape) {
            return ControlFlow::Continue(false);
        }
        let (dim, cols, letters) = (self.dim, self.cols, self.ranks[level]);
        let mut any = false;
        let flow = for_each_block_filling(shape, dim, cols, letters, &mut |block, next| {
            if !self.completion.allows(level + 1, next) {
                return ControlFlow::Continue(());
            }
            self.blocks.push(block.to_vec());
            let found = self.dfs(level + 1, next);
            self.blocks.pop();
            any |= found?;
            ControlFlow::Continue(())
        });
        flow?;
        if !any {
            self.dead[level].insert(shape.to_vec());
        }
        ControlFlow::Continue(any)
    }
}

/// Calls `visit` on every configuration matrix, in lexicographic order of
/// the column-major entries, until it returns `Break`.
pub fn for_each_config(
    ranks: &[usize],
    dim: usize,
    visit: &mut dyn FnMut(&ConfigMatrix) -> ControlFlow<()>,
) -> Result<()> {
    check_ranks(ranks, dim)?;
    let completion = Completion::new(ranks, dim);
    if !completion.allows(0, &vec![0; dim]) {
        return Ok(());
    }
    let mut e = Enumerate {
        dim,
        cols: ranks.iter().sum(),
        ranks,
        completion,
        dead: vec![HashSet::new(); ranks.len()],
        blocks: Vec::new(),
        visit,
    };
    let _ = e.dfs(0, &vec![0; dim]);
    Ok(())
}

/// Every configuration matrix for `ranks` in dimension `dim`.
pub fn all_configs(ranks: &[usize], dim: usize) -> Result<Vec<ConfigMatrix>> {
    let mut out = Vec::new();
    for_each_config(ranks, dim, &mut |a| {
        out.push(a.clone());
        ControlFlow::Continue(())
    })?;
    Ok(out)
}

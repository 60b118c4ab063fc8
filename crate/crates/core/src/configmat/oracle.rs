//! Independent Littlewood-Richardson references.
//!
//! [`lr_oracle`] counts LR skew tableaux by brute force and shares no code
//! with the certificate search; it is meant for small shapes.

use crate::error::{Error, Result};
use crate::partition::Partition;

/// `c_{λ,μ}^{ν}`: the number of semistandard fillings of `ν/λ` with content
/// `μ` whose reverse reading word (right to left, top to bottom) is a lattice
/// word. Returns 0 whenever `|λ| + |μ| ≠ |ν|` or `λ ⊄ ν`.
pub fn lr_oracle(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if lambda.size() + mu.size() != nu.size() || !nu.contains(lambda) {
        return 0;
    }
    // Reading order: top to bottom, each row right to left, so the lattice
    // condition can be checked on every prefix.
    let boxes: Vec<(usize, usize)> = (0..nu.len())
        .flat_map(|r| (lambda.part(r)..nu.part(r)).rev().map(move |c| (r, c)))
        .collect();
    let mut filling = Filling {
        content: mu.parts(),
        grid: (0..nu.len()).map(|r| vec![0usize; nu.part(r)]).collect(),
        used: vec![0; mu.len()],
        boxes: &boxes,
    };
    filling.count(0)
}

struct Filling<'a> {
    content: &'a [usize],
    /// Values are 1-based; 0 marks a box of `λ` or an unfilled box.
    grid: Vec<Vec<usize>>,
    used: Vec<usize>,
    boxes: &'a [(usize, usize)],
}

impl Filling<'_> {
    fn count(&mut self, next: usize) -> u64 {
        if next == self.boxes.len() {
            return 1;
        }
        let (r, c) = self.boxes[next];
        let right = self.grid[r]
            .get(c + 1)
            .copied()
            .unwrap_or(self.content.len());
        // Boxes of λ hold 0, so they impose nothing.
        let above = if r > 0 { self.grid[r - 1][c] + 1 } else { 1 };
        let mut total = 0;
        for v in above..=right {
            if self.used[v - 1] == self.content[v - 1]
                || (v > 1 && self.used[v - 1] == self.used[v - 2])
            {
                continue;
            }
            self.used[v - 1] += 1;
            self.grid[r][c] = v;
            total += self.count(next + 1);
            self.grid[r][c] = 0;
            self.used[v - 1] -= 1;
        }
        total
    }
}

/// The shapes in the (multiplicity-free) product `s_{(N1^a)} · s_{(N2^b)}`,
/// listed in reverse lexicographic order.
///
/// They are the `λ` of length at most `a+b` with `λ_{b+1} = … = λ_a = N1`,
/// `λ_b ≥ max(N1, N2)` and `λ_i + λ_{a+b+1−i} = N1 + N2` for `i ≤ b`.
pub fn okada_product(a: usize, b: usize, n1: usize, n2: usize) -> Result<Vec<Partition>> {
    if a < b || b == 0 {
        return Err(Error::InvalidShape(format!(
            "need a >= b >= 1, got a = {a}, b = {b}"
        )));
    }
    if n1 == 0 || n2 == 0 {
        return Err(Error::InvalidShape(
            "rectangle widths must be positive".into(),
        ));
    }
    let (lo, hi) = (n1.max(n2), n1 + n2);
    let mut out = Vec::new();
    let mut top = Vec::with_capacity(b);
    heads(b, lo, hi, &mut top, &mut |top| {
        let mut parts = top.to_vec();
        parts.extend(std::iter::repeat_n(n1, a - b));
        parts.extend(top.iter().rev().map(|&t| hi - t));
        out.push(Partition::new(parts).expect("weakly decreasing by construction"));
    });
    Ok(out)
}

fn heads(
    len: usize,
    lo: usize,
    hi: usize,
    current: &mut Vec<usize>,
    emit: &mut dyn FnMut(&[usize]),
) {
    if current.len() == len {
        emit(current);
        return;
    }
    let cap = current.last().copied().unwrap_or(hi);
    for v in (lo..=cap).rev() {
        current.push(v);
        heads(len, lo, hi, current, emit);
        current.pop();
    }
}

/// Whether `c(λ, (N), …, (N); (M^N)) ≠ 0` with `k` one-row factors: true
/// iff `k ≥ N − p(λ)`, where `p(λ)` counts the parts of `λ` equal to `M`.
pub fn hook_completion_feasible(lambda: &Partition, k: usize, m: usize, n: usize) -> Result<bool> {
    if !lambda.fits_in(n, m) {
        return Err(Error::DoesNotFit {
            partition: lambda.to_string(),
            rows: n,
            cols: m,
        });
    }
    if k > m || lambda.size() != n * (m - k) {
        return Err(Error::SizeMismatch(format!(
            "|{lambda}| = {} but N(M-k) = {n}*({m}-{k})",
            lambda.size()
        )));
    }
    Ok(k + lambda.multiplicity(m) >= n)
}

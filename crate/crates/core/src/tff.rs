//! Deciding and enumerating tight fusion frame sequences.
//!
//! A rank sequence `L` is a TFF sequence in dimension `N` when there are
//! orthogonal projections `P_k` of ranks `L_k` with `ΣP_k = αI`, where
//! `α = |L|/N`. That happens exactly when a configuration matrix exists.
//! The set `TFF(α, N)` is closed downward under dominance, so it is described
//! by its dominance-maximal members.

use serde::{Deserialize, Serialize};

use crate::configmat::{self, check_ranks, ConfigMatrix};
use crate::error::{Error, Result};
use crate::partition::{dominance_leq, partitions_of, Partition};
use crate::rational::{as_integer, ratio, Rational};

/// A rank sequence together with its ambient dimension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TffInstance {
    dim: usize,
    ranks: Partition,
}

impl TffInstance {
    /// Requires a nonempty sequence with `L_1 ≤ N`.
    pub fn new(ranks: Partition, dim: usize) -> Result<Self> {
        check_ranks(ranks.parts(), dim)?;
        Ok(TffInstance { dim, ranks })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn ranks(&self) -> &Partition {
        &self.ranks
    }

    /// `M = ΣL_k`.
    pub fn total_rank(&self) -> usize {
        self.ranks.size()
    }

    /// `α = M/N`.
    pub fn alpha(&self) -> Rational {
        ratio(self.total_rank(), self.dim)
    }

    /// `σ_k = L_1 + … + L_k` for `k = 1..=K`.
    pub fn sigma(&self) -> Vec<usize> {
        self.ranks.prefix_sums()
    }
}

/// Whether `ranks` is a TFF sequence in dimension `dim`.
pub fn decide(ranks: &Partition, dim: usize) -> Result<bool> {
    check_ranks(ranks.parts(), dim)?;
    configmat::config_exists(ranks.parts(), dim)
}

/// Like [`decide`], returning the lexicographically first certificate.
pub fn decide_with_certificate(ranks: &Partition, dim: usize) -> Result<Option<ConfigMatrix>> {
    configmat::find_config(ranks.parts(), dim)
}

/// A positive semidefinite matrix is a sum of projections iff its trace is a
/// nonnegative integer no smaller than its rank.
pub fn fillmore_feasible(trace: Rational, rank: usize) -> bool {
    match as_integer(trace) {
        Some(t) => t >= 0 && t >= rank as i64,
        None => false,
    }
}

fn check_open_unit_interval(alpha: Rational) -> Result<()> {
    if alpha <= Rational::from_integer(1) || alpha >= Rational::from_integer(2) {
        return Err(Error::AlphaOutOfRange(alpha));
    }
    Ok(())
}

/// Necessary and sufficient bounds on the three largest ranks for
/// `1 < α < 2`:
///
/// * `L1 ≤ (α−1)N`
/// * `L1 + L2 ≤ N`
/// * `L1 + L2 + L3 ≤ N` when `α < 3/2`, `≤ 2(α−1)N` when `α > 3/2`.
///
/// At `α = 3/2` the third bound is the trivial one, `L1 + L2 + L3 ≤ αN`:
/// `TFF(3/2, N)` has the unique maximal element `(N/2, N/2, N/2)`.
pub fn first3_check(l1: usize, l2: usize, l3: usize, alpha: Rational, dim: usize) -> Result<bool> {
    check_open_unit_interval(alpha)?;
    let n = Rational::from_integer(dim as i64);
    let one = Rational::from_integer(1);
    let three_halves = Rational::new(3, 2);
    let (l1r, l12, l123) = (
        Rational::from_integer(l1 as i64),
        Rational::from_integer((l1 + l2) as i64),
        Rational::from_integer((l1 + l2 + l3) as i64),
    );
    let third_bound = if alpha < three_halves {
        n
    } else if alpha > three_halves {
        Rational::from_integer(2) * (alpha - one) * n
    } else {
        alpha * n
    };
    Ok(l1r <= (alpha - one) * n && l12 <= n && l123 <= third_bound)
}

/// Decides the hook-type sequence `(L1, L2, L3, 1, …, 1)` with `ones`
/// trailing ones, for `1 < α < 2`: it is a TFF sequence iff
/// [`first3_check`] passes.
pub fn hook_type_decide(
    l1: usize,
    l2: usize,
    l3: usize,
    ones: usize,
    alpha: Rational,
    dim: usize,
) -> Result<bool> {
    check_open_unit_interval(alpha)?;
    if !(l1 >= l2 && l2 >= l3 && (ones == 0 || l3 >= 1)) {
        return Err(Error::InvalidRanks(format!(
            "({l1},{l2},{l3},1^{ones}) is not weakly decreasing"
        )));
    }
    if ratio(l1 + l2 + l3 + ones, dim) != alpha {
        return Err(Error::SizeMismatch(format!(
            "({l1},{l2},{l3},1^{ones}) does not sum to {alpha}*{dim}"
        )));
    }
    first3_check(l1, l2, l3, alpha, dim)
}

/// For every `k ≥ 2` with `α < k/(k−1)`, checks `L_1 + … + L_k ≤ N`.
/// A necessary condition only.
pub fn k_block_bound(ranks: &Partition, dim: usize, alpha: Rational) -> bool {
    let mut prefix = ranks.part(0);
    // α < k/(k−1) holds for an initial run of k only, so stop at the first miss
    for k in 2.. {
        if alpha * Rational::from_integer(k as i64 - 1) >= Rational::from_integer(k as i64) {
            break;
        }
        prefix += ranks.part(k - 1);
        if prefix > dim {
            return false;
        }
        if k > ranks.len() {
            break;
        }
    }
    true
}

/// The unique maximal element of `TFF(α, N)` for the four families with a
/// closed form, or `None` outside them:
///
/// * `α = n`: `(N^n)`
/// * `α = 1 + 1/n`: `((N/n)^{n+1})`
/// * `α = n + 1/2`: `(N^{n−1}, N/2, N/2, N/2)`
/// * `α = 1 + 2/(2n−1)`: `((2N/(2n−1))^{n−1}, (N/(2n−1))^3)`
pub fn unique_maximal(alpha: Rational, dim: usize) -> Option<Partition> {
    let n_dim = dim as i64;
    if dim == 0
        || !(alpha * Rational::from_integer(n_dim)).is_integer()
        || alpha < Rational::from_integer(1)
    {
        return None;
    }
    let one = Rational::from_integer(1);
    if let Some(n) = as_integer(alpha) {
        return Some(Partition::rectangle(dim, n as usize));
    }
    // α = 1 + 1/n
    let inv = (alpha - one).recip();
    if let Some(n) = as_integer(inv) {
        if n_dim % n == 0 {
            return Some(Partition::rectangle((n_dim / n) as usize, (n + 1) as usize));
        }
    }
    // α = n + 1/2
    let twice = alpha * Rational::from_integer(2);
    if let Some(t) = as_integer(twice) {
        if t % 2 == 1 && n_dim % 2 == 0 {
            let n = ((t - 1) / 2) as usize;
            let mut parts = vec![dim; n - 1];
            parts.extend([dim / 2; 3]);
            return Partition::new(parts).ok();
        }
    }
    // α = 1 + 2/(2n−1)
    let odd = Rational::from_integer(2) / (alpha - one);
    if let Some(d) = as_integer(odd) {
        if d % 2 == 1 && n_dim % d == 0 {
            let n = ((d + 1) / 2) as usize;
            let mut parts = vec![(2 * n_dim / d) as usize; n - 1];
            parts.extend([(n_dim / d) as usize; 3]);
            return Partition::new(parts).ok();
        }
    }
    None
}

/// The integer `M = αN`, checking `α ≥ 1`.
fn total_rank(alpha: Rational, dim: usize) -> Result<usize> {
    if dim == 0 {
        return Err(Error::InvalidAlpha("dimension must be positive".into()));
    }
    let m = alpha * Rational::from_integer(dim as i64);
    match as_integer(m) {
        Some(m) if alpha >= Rational::from_integer(1) => Ok(m as usize),
        Some(_) => Err(Error::InvalidAlpha(format!("{alpha} < 1"))),
        None => Err(Error::InvalidAlpha(format!(
            "{alpha}*{dim} is not an integer"
        ))),
    }
}

/// Cheap necessary filters applied before the certificate search.
fn passes_filters(ranks: &Partition, alpha: Rational, dim: usize) -> bool {
    if ranks.largest() > dim {
        return false;
    }
    if alpha > Rational::from_integer(1) && alpha < Rational::from_integer(2) {
        let ok =
            first3_check(ranks.part(0), ranks.part(1), ranks.part(2), alpha, dim).unwrap_or(false);
        if !ok {
            return false;
        }
    }
    k_block_bound(ranks, dim, alpha)
}

/// Decides membership using whichever of `N` and its Naimark dual
/// `M − N` is smaller; both give the same answer.
fn decide_cheapest(ranks: &Partition, dim: usize) -> Result<bool> {
    let m = ranks.size();
    if m > dim && m - dim < dim {
        if ranks.largest() > m - dim {
            return Ok(false);
        }
        return decide(ranks, m - dim);
    }
    decide(ranks, dim)
}

/// The dominance-maximal members of `TFF(α, N)`, in reverse lexicographic
/// order.
///
/// Integer `α` has the single maximal element `(N^α)`. Otherwise
/// candidates are scanned in reverse lexicographic order, which lists any
/// sequence before everything it dominates. A candidate dominated by an
/// accepted maximal element is a member but not maximal; the others go
/// through the necessary filters and then the certificate search.
pub fn maximal_elements(alpha: Rational, dim: usize) -> Result<Vec<Partition>> {
    let m = total_rank(alpha, dim)?;
    if alpha.is_integer() {
        return Ok(unique_maximal(alpha, dim).into_iter().collect());
    }
    let mut maximal: Vec<Partition> = Vec::new();
    for candidate in partitions_of(m, dim, m) {
        if maximal.iter().any(|top| dominance_leq(&candidate, top)) {
            continue;
        }
        if !passes_filters(&candidate, alpha, dim) {
            continue;
        }
        if decide_cheapest(&candidate, dim)? {
            maximal.push(candidate);
        }
    }
    Ok(maximal)
}

/// Every member of `TFF(α, N)`, in reverse lexicographic order.
pub fn enumerate_tff(alpha: Rational, dim: usize) -> Result<Vec<Partition>> {
    let m = total_rank(alpha, dim)?;
    let maximal = maximal_elements(alpha, dim)?;
    Ok(partitions_of(m, dim, m)
        .into_iter()
        .filter(|c| maximal.iter().any(|top| dominance_leq(c, top)))
        .collect())
}

/// Serialized form of a maximal-element table cell.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MaximalTable {
    #[serde(with = "crate::rational::serde_str")]
    pub alpha: Rational,
    pub dim: usize,
    pub maximal: Vec<Partition>,
}

/// Serialized form of a full enumeration.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Enumeration {
    #[serde(with = "crate::rational::serde_str")]
    pub alpha: Rational,
    pub dim: usize,
    pub sequences: Vec<Partition>,
}

/// Maximal elements for every `α = M/N` with `N ≤ M ≤ 2N` and `1 ≤ N ≤ max_dim`.
pub fn maximal_tables(max_dim: usize) -> Result<Vec<MaximalTable>> {
    let mut tables = Vec::new();
    for dim in 1..=max_dim {
        for m in dim..=2 * dim {
            let alpha = ratio(m, dim);
            tables.push(MaximalTable {
                alpha,
                dim,
                maximal: maximal_elements(alpha, dim)?,
            });
        }
    }
    Ok(tables)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn decide_examples() {
        assert!(decide(&p(&[2, 2, 2]), 4).unwrap());
        assert!(!decide(&p(&[3, 3]), 5).unwrap());
        for n in 1..=5 {
            assert!(decide(&p(&[n, n]), n).unwrap());
        }
        assert!(matches!(decide(&p(&[5]), 4), Err(Error::InvalidRanks(_))));
    }

    #[test]
    fn instance_fields() {
        let t = TffInstance::new(p(&[4, 2, 2, 2, 1]), 6).unwrap();
        assert_eq!(t.total_rank(), 11);
        assert_eq!(t.alpha(), r(11, 6));
        assert_eq!(t.sigma(), vec![4, 6, 8, 10, 11]);
        assert!(TffInstance::new(p(&[7]), 6).is_err());
    }

    #[test]
    fn fillmore() {
        assert!(fillmore_feasible(r(3, 1), 3));
        assert!(!fillmore_feasible(r(5, 2), 2));
        // αN − L1 with α = 11/6, N = 6, L1 = 5
        assert!(fillmore_feasible(r(11, 6) * r(6, 1) - r(5, 1), 6));
        assert!(!fillmore_feasible(r(2, 1), 3));
    }

    #[test]
    fn first_three() {
        assert!(first3_check(5, 1, 1, r(11, 6), 6).unwrap());
        assert!(!first3_check(5, 2, 0, r(11, 6), 6).unwrap());
        assert!(!first3_check(2, 2, 2, r(7, 5), 5).unwrap());
        assert!(first3_check(2, 2, 1, r(7, 5), 5).unwrap());
        assert!(first3_check(3, 3, 3, r(3, 2), 6).unwrap());
        assert!(matches!(
            first3_check(1, 1, 1, r(2, 1), 3),
            Err(Error::AlphaOutOfRange(_))
        ));
    }

    #[test]
    fn hook_type() {
        assert!(hook_type_decide(2, 1, 1, 1, r(5, 3), 3).unwrap());
        assert!(hook_type_decide(3, 1, 1, 2, r(7, 4), 4).unwrap());
        let by_bounds = hook_type_decide(4, 2, 1, 4, r(11, 6), 6).unwrap();
        let by_search = decide(&p(&[4, 2, 1, 1, 1, 1, 1]), 6).unwrap();
        assert_eq!(by_bounds, by_search);
        assert!(matches!(
            hook_type_decide(2, 1, 1, 1, r(2, 1), 3),
            Err(Error::AlphaOutOfRange(_))
        ));
        assert!(matches!(
            hook_type_decide(2, 1, 1, 2, r(5, 3), 3),
            Err(Error::SizeMismatch(_))
        ));
    }

    #[test]
    fn k_blocks() {
        assert!(k_block_bound(&p(&[1, 1, 1, 1, 1, 1]), 5, r(6, 5)));
        assert!(!k_block_bound(&p(&[2, 2, 1, 1]), 5, r(6, 5)));
        assert!(k_block_bound(&p(&[7, 7]), 7, r(2, 1)));
    }

    #[test]
    fn closed_forms() {
        assert_eq!(unique_maximal(r(3, 2), 6), Some(p(&[3, 3, 3])));
        assert_eq!(unique_maximal(r(2, 1), 7), Some(p(&[7, 7])));
        assert_eq!(unique_maximal(r(4, 3), 6), Some(p(&[2, 2, 2, 2])));
        assert_eq!(unique_maximal(r(5, 3), 6), Some(p(&[4, 2, 2, 2])));
        assert_eq!(unique_maximal(r(5, 2), 4), Some(p(&[4, 2, 2, 2])));
        assert_eq!(unique_maximal(r(11, 6), 6), None);
    }

    #[test]
    fn small_tables() {
        assert_eq!(
            maximal_elements(r(11, 6), 6).unwrap(),
            vec![
                p(&[5, 1, 1, 1, 1, 1, 1]),
                p(&[4, 2, 2, 2, 1]),
                p(&[3, 3, 3, 2])
            ]
        );
        assert_eq!(maximal_elements(r(1, 1), 5).unwrap(), vec![p(&[5])]);
        assert_eq!(enumerate_tff(r(1, 1), 5).unwrap().len(), 7);
        assert!(matches!(
            maximal_elements(r(1, 2), 4),
            Err(Error::InvalidAlpha(_))
        ));
        assert!(matches!(
            maximal_elements(r(7, 5), 4),
            Err(Error::InvalidAlpha(_))
        ));
    }
}

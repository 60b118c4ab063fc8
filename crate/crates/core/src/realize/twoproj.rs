//! Spectra of sums of two projections.

use std::collections::BTreeMap;

use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{to_f64, Rational};

/// Eigenvalue multiplicities of `P + Q`, for projections of ranks `p`, `q`
/// in dimension `N`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultiplicityFn {
    pub p: usize,
    pub q: usize,
    pub dim: usize,
    /// Eigenvalue to multiplicity; zero multiplicities are ignored.
    #[serde(with = "rational_keys")]
    pub multiplicities: BTreeMap<Rational, usize>,
}

mod rational_keys {
    use std::collections::BTreeMap;

    use serde::de::Error as _;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    use crate::rational::{parse_rational, Rational};

    pub fn serialize<S: Serializer>(
        m: &BTreeMap<Rational, usize>,
        s: S,
    ) -> Result<S::Ok, S::Error> {
        let keyed: BTreeMap<String, usize> = m.iter().map(|(k, &v)| (k.to_string(), v)).collect();
        keyed.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        d: D,
    ) -> Result<BTreeMap<Rational, usize>, D::Error> {
        let keyed = BTreeMap::<String, usize>::deserialize(d)?;
        keyed
            .into_iter()
            .map(|(k, v)| Ok((parse_rational(&k).map_err(D::Error::custom)?, v)))
            .collect()
    }
}

impl MultiplicityFn {
    pub fn new(
        p: usize,
        q: usize,
        dim: usize,
        pairs: impl IntoIterator<Item = (Rational, usize)>,
    ) -> Self {
        let mut multiplicities = BTreeMap::new();
        for (lambda, m) in pairs {
            if m > 0 {
                *multiplicities.entry(lambda).or_insert(0) += m;
            }
        }
        MultiplicityFn {
            p,
            q,
            dim,
            multiplicities,
        }
    }

    pub fn get(&self, lambda: Rational) -> usize {
        self.multiplicities.get(&lambda).copied().unwrap_or(0)
    }

    /// The first condition that fails, if any.
    pub fn violation(&self) -> Option<String> {
        let (zero, one, two) = (
            Rational::from_integer(0),
            Rational::from_integer(1),
            Rational::from_integer(2),
        );
        if self.p > self.dim || self.q > self.dim {
            return Some(format!(
                "ranks {}, {} exceed N = {}",
                self.p, self.q, self.dim
            ));
        }
        if let Some(l) = self.multiplicities.keys().find(|&&l| l < zero || l > two) {
            return Some(format!("eigenvalue {l} lies outside [0, 2]"));
        }
        let total: usize = self.multiplicities.values().sum();
        if total != self.dim {
            return Some(format!(
                "multiplicities sum to {total}, expected {}",
                self.dim
            ));
        }
        if self.get(one) < self.p.abs_diff(self.q) {
            return Some(format!(
                "m(1) = {} < |p - q| = {}",
                self.get(one),
                self.p.abs_diff(self.q)
            ));
        }
        for &l in self.multiplicities.keys() {
            if l > zero && l < two && self.get(l) != self.get(two - l) {
                return Some(format!(
                    "m({l}) = {} but m({}) = {}",
                    self.get(l),
                    two - l,
                    self.get(two - l)
                ));
            }
        }
        let lhs = self.get(zero) as i64 - self.get(two) as i64;
        let rhs = self.dim as i64 - self.p as i64 - self.q as i64;
        if lhs != rhs {
            return Some(format!("m(0) - m(2) = {lhs}, expected N - p - q = {rhs}"));
        }
        None
    }
}

/// Whether `m` could be the spectrum of `P + Q` with `rank P = p`,
/// `rank Q = q` in dimension `N`.
pub fn validate_multiplicity(p: usize, q: usize, dim: usize, m: &MultiplicityFn) -> bool {
    MultiplicityFn {
        p,
        q,
        dim,
        multiplicities: m.multiplicities.clone(),
    }
    .violation()
    .is_none()
}

/// Projections `P`, `Q` of ranks `p`, `q` whose sum has spectrum `m`, built
/// as a direct sum of blocks of size one and two.
pub fn two_projection_sum(
    p: usize,
    q: usize,
    dim: usize,
    m: &MultiplicityFn,
) -> Result<(DMatrix<f64>, DMatrix<f64>)> {
    let m = MultiplicityFn {
        p,
        q,
        dim,
        multiplicities: m.multiplicities.clone(),
    };
    if let Some(v) = m.violation() {
        return Err(Error::InvalidMultiplicity(v));
    }
    let one = Rational::from_integer(1);
    let two = Rational::from_integer(2);
    let mut pm = DMatrix::zeros(dim, dim);
    let mut qm = DMatrix::zeros(dim, dim);
    let mut at = 0;

    for _ in 0..m.get(two) {
        pm[(at, at)] = 1.0;
        qm[(at, at)] = 1.0;
        at += 1;
    }
    let mut paired = 0;
    for (&lambda, &count) in m.multiplicities.range(one..two) {
        if lambda == one {
            continue;
        }
        let c = to_f64(lambda - one);
        let s = (1.0 - c * c).sqrt();
        for _ in 0..count {
            pm[(at, at)] = 1.0;
            qm[(at, at)] = c * c;
            qm[(at, at + 1)] = c * s;
            qm[(at + 1, at)] = c * s;
            qm[(at + 1, at + 1)] = s * s;
            at += 2;
            paired += 1;
        }
    }
    let one_sided = p.abs_diff(q);
    let target = if p >= q { &mut pm } else { &mut qm };
    for _ in 0..one_sided {
        target[(at, at)] = 1.0;
        at += 1;
    }
    // the rest of m(1) splits into orthogonal lines, one for each of P and Q
    let excess = m.get(one) - one_sided;
    debug_assert_eq!(excess % 2, 0);
    debug_assert_eq!(excess / 2 + paired + m.get(two), p.min(q));
    for _ in 0..excess / 2 {
        pm[(at, at)] = 1.0;
        qm[(at + 1, at + 1)] = 1.0;
        at += 2;
    }
    debug_assert_eq!(at + m.get(Rational::from_integer(0)), dim);
    Ok((pm, qm))
}

/// Checks the spectrum conditions on measured eigenvalues of `P + Q`:
/// values in `[0, 2]`, `#{λ ≈ 1} ≥ |p − q|`, `λ ↔ 2 − λ` pairing on `(0, 2)`,
/// and `#{λ ≈ 0} − #{λ ≈ 2} = N − p − q`. Eigenvalues within `tol` of each
/// other are treated as equal.
pub fn spectrum_conditions_hold(p: usize, q: usize, eigenvalues: &[f64], tol: f64) -> bool {
    let n = eigenvalues.len();
    if eigenvalues.iter().any(|&l| l < -tol || l > 2.0 + tol) {
        return false;
    }
    let near = |x: f64| {
        eigenvalues
            .iter()
            .filter(|&&l| (l - x).abs() <= tol)
            .count()
    };
    if near(1.0) < p.abs_diff(q) {
        return false;
    }
    if near(0.0) as i64 - near(2.0) as i64 != n as i64 - p as i64 - q as i64 {
        return false;
    }
    let mut inner: Vec<f64> = eigenvalues
        .iter()
        .copied()
        .filter(|&l| l > tol && l < 2.0 - tol)
        .collect();
    inner.sort_by(f64::total_cmp);
    inner
        .iter()
        .zip(inner.iter().rev())
        .all(|(a, b)| (a + b - 2.0).abs() <= 2.0 * tol)
}

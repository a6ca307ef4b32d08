//! Closed-form enumerative combinatorics of linear series on curves:
//! adjusted Brill-Noether numbers, Castelnuovo counts, counts with prescribed
//! ramification, Pluecker double-point counts and vanishing/ramification
//! sequence utilities. Everything is evaluated with big integers and reduced
//! rationals; nothing here touches the ring engine.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::{rat, Error, Rational, Result};

/// Ramification sequence `alpha_0 <= alpha_1 <= ... <= alpha_r` at a point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RamificationSeq(Vec<i64>);

impl RamificationSeq {
    pub fn new(alphas: Vec<i64>) -> Result<Self> {
        if alphas.is_empty() {
            return Err(Error::InvalidInput(
                "empty ramification sequence".to_string(),
            ));
        }
        if alphas[0] < 0 {
            return Err(Error::InvalidInput(
                "ramification sequence must start at alpha_0 >= 0".to_string(),
            ));
        }
        if alphas.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::InvalidInput(
                "ramification sequence must be weakly increasing".to_string(),
            ));
        }
        Ok(RamificationSeq(alphas))
    }

    pub fn zeros(len: usize) -> Self {
        RamificationSeq(vec![0; len])
    }

    pub fn alphas(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> i64 {
        self.0.iter().sum()
    }

    /// Schubert index of type `(r, d)` additionally requires `alpha_r <= d - r`.
    pub fn is_schubert_index(&self, r: i64, d: i64) -> bool {
        self.0.len() as i64 == r + 1 && *self.0.last().unwrap() <= d - r
    }
}

/// Vanishing sequence `a_0 < a_1 < ... < a_r`, entries in `[0, d]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VanishingSeq(Vec<i64>);

impl VanishingSeq {
    pub fn new(orders: Vec<i64>) -> Result<Self> {
        if orders.is_empty() {
            return Err(Error::InvalidInput("empty vanishing sequence".to_string()));
        }
        if orders[0] < 0 {
            return Err(Error::InvalidInput(
                "vanishing orders must be nonnegative".to_string(),
            ));
        }
        if orders.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidInput(
                "vanishing sequence must be strictly increasing".to_string(),
            ));
        }
        Ok(VanishingSeq(orders))
    }

    pub fn orders(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn within_degree(&self, d: i64) -> bool {
        *self.0.last().unwrap() <= d
    }
}

/// `a_i = alpha_i + i`; strictly increasing because alpha is weakly so.
pub fn vanishing_from_ramification(alpha: &RamificationSeq) -> VanishingSeq {
    VanishingSeq(
        alpha
            .alphas()
            .iter()
            .enumerate()
            .map(|(i, &a)| a + i as i64)
            .collect(),
    )
}

/// `alpha_i = a_i - i`, the inverse index shift.
pub fn ramification_from_vanishing(a: &VanishingSeq) -> Result<RamificationSeq> {
    RamificationSeq::new(
        a.orders()
            .iter()
            .enumerate()
            .map(|(i, &v)| v - i as i64)
            .collect(),
    )
}

/// A linear-series existence problem: genus, dimension, degree, and optional
/// ramification sequences at marked points.
#[derive(Clone, Debug)]
pub struct BnProblem {
    pub g: i64,
    pub r: i64,
    pub d: i64,
    pub marked: Vec<RamificationSeq>,
}

impl BnProblem {
    pub fn new(g: i64, r: i64, d: i64, marked: Vec<RamificationSeq>) -> Result<Self> {
        if g < 0 || r < 0 || d < 0 {
            return Err(Error::InvalidInput(
                "genus, dimension and degree must be nonnegative".to_string(),
            ));
        }
        for alpha in &marked {
            if alpha.len() as i64 != r + 1 {
                return Err(Error::InvalidInput(format!(
                    "ramification sequence must have length r + 1 = {}",
                    r + 1
                )));
            }
        }
        Ok(BnProblem { g, r, d, marked })
    }

    pub fn unmarked(g: i64, r: i64, d: i64) -> Result<Self> {
        BnProblem::new(g, r, d, Vec::new())
    }
}

/// Adjusted Brill-Noether number
/// `rho = g - (r+1)(g-d+r) - sum of all marked ramification weights`.
pub fn rho(p: &BnProblem) -> i64 {
    let base = p.g - (p.r + 1) * (p.g - p.d + p.r);
    base - p.marked.iter().map(|a| a.weight()).sum::<i64>()
}

fn factorial(n: i64) -> BigInt {
    debug_assert!(n >= 0);
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= k;
    }
    acc
}

/// Castelnuovo number `N_{g,r,d} = g! * prod_i i! / (g-d+r+i)!`, the number
/// of series of type `(r, d)` on a general genus-`g` curve when the
/// Brill-Noether number vanishes. Returns zero when some factorial argument
/// is negative (no series exist).
pub fn castelnuovo(g: i64, r: i64, d: i64) -> Rational {
    if g < 0 || r < 0 {
        return rat(0);
    }
    if (0..=r).any(|i| g - d + r + i < 0) {
        return rat(0);
    }
    let mut num = factorial(g);
    let mut den = BigInt::one();
    for i in 0..=r {
        num *= factorial(i);
        den *= factorial(g - d + r + i);
    }
    Rational::new(num, den)
}

/// Number of series of type `(r, d)` on a general pointed curve with
/// ramification sequence `alpha` at the point:
/// `g! * prod_{i<j} (alpha_j - alpha_i + j - i) / prod_i (g-d+r+alpha_i+i)!`.
/// Zero exactly when the existence criterion `alpha_0 + g - d + r >= 0` fails.
pub fn count_ramified(g: i64, r: i64, d: i64, alpha: &RamificationSeq) -> Result<Rational> {
    if g < 0 || r < 0 || d < 0 {
        return Err(Error::InvalidInput(
            "genus, dimension and degree must be nonnegative".to_string(),
        ));
    }
    if !alpha.is_schubert_index(r, d) {
        return Err(Error::InvalidInput(format!(
            "ramification sequence is not a Schubert index of type ({r}, {d})"
        )));
    }
    if alpha.alphas()[0] + g - d + r < 0 {
        return Ok(rat(0));
    }
    let a = alpha.alphas();
    let mut num = factorial(g);
    for j in 1..a.len() {
        for i in 0..j {
            num *= a[j] - a[i] + (j as i64 - i as i64);
        }
    }
    let mut den = BigInt::one();
    for (i, &ai) in a.iter().enumerate() {
        den *= factorial(g - d + r + ai + i as i64);
    }
    if den.is_zero() {
        return Err(Error::Internal(
            "zero denominator in ramified count".to_string(),
        ));
    }
    Ok(Rational::new(num, den))
}

/// Pluecker count of double points of a plane curve of degree `d` and genus
/// `g`: `(d-1)(d-2)/2 - g`.
pub fn plucker_double_points(g: i64, d: i64) -> i64 {
    (d - 1) * (d - 2) / 2 - g
}

/// Compatibility of two vanishing sequences at a node of a curve of compact
/// type: `a_i + a'_{r-i} >= d` for every `i`.
pub fn limit_compatible(left: &VanishingSeq, right: &VanishingSeq, d: i64) -> Result<bool> {
    if left.len() != right.len() {
        return Err(Error::InvalidInput(
            "vanishing sequences must have equal length".to_string(),
        ));
    }
    if !left.within_degree(d) || !right.within_degree(d) {
        return Err(Error::InvalidInput(
            "vanishing orders must not exceed the degree".to_string(),
        ));
    }
    let r = left.len();
    Ok((0..r).all(|i| left.orders()[i] + right.orders()[r - 1 - i] >= d))
}

/// True when the rational is an integer.
pub fn is_integer(q: &Rational) -> bool {
    q.denom().abs() == BigInt::one()
}

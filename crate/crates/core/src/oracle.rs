//! Brute-force model of the odd cohomology underlying the diagonal classes.
//!
//! Each of the four product factors carries anticommuting degree-one symbols
//! `delta^i_1, ..., delta^i_{2h}` (a symplectic basis with `h` pairs). On the
//! three curve factors a product of two symbols collapses through the
//! intersection pairing to the point class `eta_i`; on the fourth factor the
//! full exterior algebra is kept and `theta = sum_a delta_a delta_{h+a}`.
//!
//! Expanding the diagonal classes
//! `gamma_ij = -sum_a (delta^j_a delta^i_{h+a} - delta^j_{h+a} delta^i_a)`
//! in this model and multiplying them out verifies every degree-two rewrite
//! rule of the ring presentation, including the two shared-index products
//! whose signs are not forced by symmetry alone. This is the independent
//! oracle backing [`crate::ring::rewrite_rule_table`].

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::ring::{rewrite_rule_table, RuleSpec};
use crate::{rat, Error, Rational, Result};

/// One odd symbol `delta^factor_alpha`; factors are 1..=4, alphas 1..=2h.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
struct DeltaId {
    factor: u8,
    alpha: u32,
}

/// Product of an even part (point classes on curve factors) and a sorted list
/// of odd symbols.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Default)]
struct ExtMonomial {
    eta: [bool; 3],
    deltas: Vec<DeltaId>,
}

/// Element of the model algebra at a fixed number of symplectic pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtElement {
    pairs: u32,
    terms: BTreeMap<ExtMonomial, Rational>,
}

impl ExtElement {
    pub fn zero(pairs: u32) -> Self {
        ExtElement {
            pairs,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(pairs: u32) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(ExtMonomial::default(), rat(1));
        ExtElement { pairs, terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Point class on curve factor `i` (1..=3).
    pub fn eta(pairs: u32, i: u8) -> Self {
        assert!((1..=3).contains(&i));
        let mut eta = [false; 3];
        eta[(i - 1) as usize] = true;
        let mut terms = BTreeMap::new();
        terms.insert(
            ExtMonomial {
                eta,
                deltas: Vec::new(),
            },
            rat(1),
        );
        ExtElement { pairs, terms }
    }

    /// Polarization class on the fourth factor: `sum_a delta_a delta_{h+a}`.
    pub fn theta(pairs: u32) -> Self {
        let mut terms = BTreeMap::new();
        for a in 1..=pairs {
            let m = ExtMonomial {
                eta: [false; 3],
                deltas: vec![
                    DeltaId {
                        factor: 4,
                        alpha: a,
                    },
                    DeltaId {
                        factor: 4,
                        alpha: pairs + a,
                    },
                ],
            };
            terms.insert(m, rat(1));
        }
        ExtElement { pairs, terms }
    }

    /// Diagonal class coupling factors `i < j`, written in the canonical
    /// sorted order (factor `i`'s symbol first):
    /// `gamma_ij = sum_a (delta^i_{h+a} delta^j_a - delta^i_a delta^j_{h+a})`.
    pub fn gamma(pairs: u32, i: u8, j: u8) -> Self {
        assert!(i < j && (1..=4).contains(&j) && i >= 1);
        let mut terms = BTreeMap::new();
        for a in 1..=pairs {
            terms.insert(
                ExtMonomial {
                    eta: [false; 3],
                    deltas: vec![
                        DeltaId {
                            factor: i,
                            alpha: pairs + a,
                        },
                        DeltaId {
                            factor: j,
                            alpha: a,
                        },
                    ],
                },
                rat(1),
            );
            terms.insert(
                ExtMonomial {
                    eta: [false; 3],
                    deltas: vec![
                        DeltaId {
                            factor: i,
                            alpha: a,
                        },
                        DeltaId {
                            factor: j,
                            alpha: pairs + a,
                        },
                    ],
                },
                rat(-1),
            );
        }
        ExtElement { pairs, terms }
    }

    pub fn add(&self, other: &ExtElement) -> ExtElement {
        assert_eq!(self.pairs, other.pairs);
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            let entry = terms.entry(m.clone()).or_insert_with(Rational::zero);
            *entry += c;
            if entry.is_zero() {
                terms.remove(m);
            }
        }
        ExtElement {
            pairs: self.pairs,
            terms,
        }
    }

    pub fn scale(&self, q: &Rational) -> ExtElement {
        if q.is_zero() {
            return ExtElement::zero(self.pairs);
        }
        ExtElement {
            pairs: self.pairs,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * q)).collect(),
        }
    }

    pub fn mul(&self, other: &ExtElement) -> ExtElement {
        assert_eq!(self.pairs, other.pairs);
        let mut out: BTreeMap<ExtMonomial, Rational> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                if let Some((m, sign)) = mul_monomials(self.pairs, ma, mb) {
                    let coeff = ca * cb * rat(sign);
                    if coeff.is_zero() {
                        continue;
                    }
                    match out.get_mut(&m) {
                        Some(c) => {
                            *c += coeff;
                            if c.is_zero() {
                                out.remove(&m);
                            }
                        }
                        None => {
                            out.insert(m, coeff);
                        }
                    }
                }
            }
        }
        ExtElement {
            pairs: self.pairs,
            terms: out,
        }
    }
}

/// Multiply two monomials: sign from interleaving the odd symbols, point
/// classes absorbing their factor, and curve-factor symbol pairs collapsing
/// through the symplectic pairing.
fn mul_monomials(pairs: u32, a: &ExtMonomial, b: &ExtMonomial) -> Option<(ExtMonomial, i64)> {
    // eta_i^2 = 0 and eta_i times any odd symbol on factor i = 0
    let mut eta = [false; 3];
    for (i, slot) in eta.iter_mut().enumerate() {
        if a.eta[i] && b.eta[i] {
            return None;
        }
        let factor = (i + 1) as u8;
        if (a.eta[i] && b.deltas.iter().any(|d| d.factor == factor))
            || (b.eta[i] && a.deltas.iter().any(|d| d.factor == factor))
        {
            return None;
        }
        *slot = a.eta[i] || b.eta[i];
    }
    // merge the two sorted odd lists, counting inversions for the sign
    let mut deltas: Vec<DeltaId> = Vec::with_capacity(a.deltas.len() + b.deltas.len());
    let mut sign = 1i64;
    let (mut ia, mut ib) = (0usize, 0usize);
    while ia < a.deltas.len() || ib < b.deltas.len() {
        let take_a = match (a.deltas.get(ia), b.deltas.get(ib)) {
            (Some(da), Some(db)) => {
                if da == db {
                    return None; // repeated odd symbol
                }
                da < db
            }
            (Some(_), None) => true,
            (None, Some(_)) => false,
            (None, None) => unreachable!(),
        };
        if take_a {
            deltas.push(a.deltas[ia]);
            ia += 1;
        } else {
            // moving b's symbol past the remaining symbols of a
            if (a.deltas.len() - ia) % 2 == 1 {
                sign = -sign;
            }
            deltas.push(b.deltas[ib]);
            ib += 1;
        }
    }
    // collapse curve-factor pairs through the symplectic pairing
    for factor in 1..=3u8 {
        let on_factor: Vec<usize> = deltas
            .iter()
            .enumerate()
            .filter(|(_, d)| d.factor == factor)
            .map(|(k, _)| k)
            .collect();
        match on_factor.len() {
            0 | 1 => {}
            2 => {
                // contiguous because the list is sorted by (factor, alpha)
                let (lo, hi) = (deltas[on_factor[0]].alpha, deltas[on_factor[1]].alpha);
                if hi != lo + pairs {
                    return None; // pairing vanishes
                }
                if eta[(factor - 1) as usize] {
                    return None;
                }
                eta[(factor - 1) as usize] = true;
                // removing an adjacent even block introduces no sign
                deltas.remove(on_factor[1]);
                deltas.remove(on_factor[0]);
            }
            _ => return None, // more than two odd classes on a curve factor
        }
    }
    Some((ExtMonomial { eta, deltas }, sign))
}

/// Expand a named ring generator in the model. `c1`, `c2`, `c3` never occur
/// in the rewrite rules and are rejected.
fn model_generator(pairs: u32, name: &str) -> Result<ExtElement> {
    match name {
        "eta1" => Ok(ExtElement::eta(pairs, 1)),
        "eta2" => Ok(ExtElement::eta(pairs, 2)),
        "eta3" => Ok(ExtElement::eta(pairs, 3)),
        "theta" => Ok(ExtElement::theta(pairs)),
        "gamma12" => Ok(ExtElement::gamma(pairs, 1, 2)),
        "gamma13" => Ok(ExtElement::gamma(pairs, 1, 3)),
        "gamma14" => Ok(ExtElement::gamma(pairs, 1, 4)),
        "gamma23" => Ok(ExtElement::gamma(pairs, 2, 3)),
        "gamma24" => Ok(ExtElement::gamma(pairs, 2, 4)),
        "gamma34" => Ok(ExtElement::gamma(pairs, 3, 4)),
        other => Err(Error::InvalidInput(format!(
            "generator {other} has no odd-basis expansion"
        ))),
    }
}

fn model_product(pairs: u32, factors: &[(String, u32)]) -> Result<ExtElement> {
    let mut acc = ExtElement::one(pairs);
    for (name, exp) in factors {
        let g = model_generator(pairs, name)?;
        for _ in 0..*exp {
            acc = acc.mul(&g);
        }
    }
    Ok(acc)
}

fn rule_name(spec: &RuleSpec) -> String {
    spec.lhs
        .iter()
        .map(|(n, e)| {
            if *e == 1 {
                n.clone()
            } else {
                format!("{n}^{e}")
            }
        })
        .collect::<Vec<_>>()
        .join("*")
}

/// Verify one rule table against the model with `pairs` symplectic pairs.
/// Returns the number of rules checked; fails with the first offending rule.
pub fn check_rule_table(pairs: u32, rules: &[RuleSpec]) -> Result<usize> {
    for spec in rules {
        let lhs = model_product(pairs, &spec.lhs)?;
        let mut rhs = ExtElement::zero(pairs);
        for (coeff, mono) in &spec.rhs {
            rhs = rhs.add(&model_product(pairs, mono)?.scale(coeff));
        }
        if lhs != rhs {
            return Err(Error::Verification(format!(
                "rewrite rule {} disagrees with the odd-basis expansion at h = {pairs}",
                rule_name(spec)
            )));
        }
    }
    Ok(rules.len())
}

/// Check every rewrite rule of the presentation family at `pairs` symplectic
/// pairs (the ring uses `pairs = 3s - 1`; small values exercise the same
/// table). `pairs` must be between 1 and 3 to keep the expansion small.
pub fn confirm_rewrite_rules(pairs: u32) -> Result<bool> {
    if !(1..=3).contains(&pairs) {
        return Err(Error::InvalidInput(
            "oracle parameter must satisfy 1 <= h <= 3".to_string(),
        ));
    }
    check_rule_table(pairs, &rewrite_rule_table(i64::from(pairs)))?;
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn displayed_relations_hold_in_the_model() {
        for pairs in 1..=3u32 {
            let h = i64::from(pairs);
            // gamma_ij^2 = -2h eta_i eta_j for curve pairs
            let g12 = ExtElement::gamma(pairs, 1, 2);
            let lhs = g12.mul(&g12);
            let rhs = ExtElement::eta(pairs, 1)
                .mul(&ExtElement::eta(pairs, 2))
                .scale(&rat(-2 * h));
            assert_eq!(lhs, rhs);
            // gamma_k4^2 = -2 eta_k theta
            let g34 = ExtElement::gamma(pairs, 3, 4);
            let lhs = g34.mul(&g34);
            let rhs = ExtElement::eta(pairs, 3)
                .mul(&ExtElement::theta(pairs))
                .scale(&rat(-2));
            assert_eq!(lhs, rhs);
            // shared middle index: gamma12 gamma23 = eta2 gamma13
            let lhs = ExtElement::gamma(pairs, 1, 2).mul(&ExtElement::gamma(pairs, 2, 3));
            let rhs = ExtElement::eta(pairs, 2).mul(&ExtElement::gamma(pairs, 1, 3));
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn non_displayed_sign_rules() {
        for pairs in 1..=3u32 {
            // shared first index: gamma12 gamma13 = + eta1 gamma23
            let lhs = ExtElement::gamma(pairs, 1, 2).mul(&ExtElement::gamma(pairs, 1, 3));
            let rhs = ExtElement::eta(pairs, 1).mul(&ExtElement::gamma(pairs, 2, 3));
            assert_eq!(lhs, rhs);
            // shared last index: gamma13 gamma23 = + eta3 gamma12
            let lhs = ExtElement::gamma(pairs, 1, 3).mul(&ExtElement::gamma(pairs, 2, 3));
            let rhs = ExtElement::eta(pairs, 3).mul(&ExtElement::gamma(pairs, 1, 2));
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn eta_kills_its_factor() {
        let pairs = 2;
        let lhs = ExtElement::eta(pairs, 1).mul(&ExtElement::gamma(pairs, 1, 4));
        assert!(lhs.is_zero());
        let lhs = ExtElement::eta(pairs, 2).mul(&ExtElement::gamma(pairs, 1, 2));
        assert!(lhs.is_zero());
    }

    #[test]
    fn irreducible_product_squares_correctly() {
        // (gamma14 gamma24)^2 = 4 eta1 eta2 theta^2 needs h >= 2 to be nonzero
        for pairs in 2..=3u32 {
            let prod = ExtElement::gamma(pairs, 1, 4).mul(&ExtElement::gamma(pairs, 2, 4));
            let lhs = prod.mul(&prod);
            let theta = ExtElement::theta(pairs);
            let rhs = ExtElement::eta(pairs, 1)
                .mul(&ExtElement::eta(pairs, 2))
                .mul(&theta.mul(&theta))
                .scale(&rat(4));
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn full_rule_table_certified() {
        for pairs in 1..=3u32 {
            let n = check_rule_table(pairs, &rewrite_rule_table(i64::from(pairs))).unwrap();
            assert_eq!(n, 27);
        }
        assert!(confirm_rewrite_rules(2).unwrap());
        assert!(confirm_rewrite_rules(4).is_err());
    }
}

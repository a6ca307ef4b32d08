//! Graded-commutative ring with exact rational coefficients, defined by a
//! presentation: named generators with complex degrees, degree-two rewrite
//! relations, per-factor degree caps and an overall truncation degree.
//!
//! The presentation of interest is the even cohomology of `C x C x C x W`
//! (three copies of a curve times a two-dimensional Brill-Noether locus),
//! generated by the point classes `eta_i`, the Kunneth diagonal classes
//! `gamma_ij`, the polarization class `theta` and the Chern classes `c_i` of
//! the tautological bundle on `W`. All products of two odd classes reduce by
//! the rewrite rules below; the rules not forced by symmetry have their signs
//! certified by the exterior-algebra oracle in [`crate::oracle`].
//!
//! Everything is immutable and pure; elements always carry the fingerprint of
//! the presentation they were built over, so cross-presentation arithmetic is
//! rejected instead of silently misindexing generators.

use std::collections::hash_map::DefaultHasher;
use std::collections::{BTreeMap, HashMap};
use std::hash::{Hash, Hasher};

use num_traits::Zero;

use crate::{rat, ratio, rational_str, Error, Rational, Result};

/// Which product factor a generator lives on. Mixed classes couple the two
/// listed factors (index 4 is the `W` factor) and never count toward a cap.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FactorTag {
    Curve(u8),
    WFactor,
    Mixed(u8, u8),
    Plain,
}

#[derive(Clone, Debug)]
pub struct Generator {
    pub name: String,
    pub degree: u32,
    pub tag: FactorTag,
}

impl Generator {
    pub fn new(name: &str, degree: u32, tag: FactorTag) -> Self {
        Generator {
            name: name.to_string(),
            degree,
            tag,
        }
    }
}

/// Product of generator powers, sorted by generator index. The generator
/// declaration order is the canonical monomial order (eta < gamma < theta < c).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial {
    factors: Vec<(usize, u32)>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    fn from_factors(mut factors: Vec<(usize, u32)>) -> Self {
        factors.retain(|&(_, e)| e > 0);
        factors.sort_unstable_by_key(|&(g, _)| g);
        // merge duplicates
        let mut merged: Vec<(usize, u32)> = Vec::with_capacity(factors.len());
        for (g, e) in factors {
            match merged.last_mut() {
                Some((lg, le)) if *lg == g => *le += e,
                _ => merged.push((g, e)),
            }
        }
        Monomial { factors: merged }
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn factors(&self) -> &[(usize, u32)] {
        &self.factors
    }

    pub fn exponent(&self, gen: usize) -> u32 {
        self.factors
            .iter()
            .find(|&&(g, _)| g == gen)
            .map_or(0, |&(_, e)| e)
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        let mut factors = self.factors.clone();
        factors.extend_from_slice(&other.factors);
        Monomial::from_factors(factors)
    }

    /// Whether `pattern` divides `self`.
    fn divisible_by(&self, pattern: &Monomial) -> bool {
        pattern.factors.iter().all(|&(g, e)| self.exponent(g) >= e)
    }

    fn div(&self, pattern: &Monomial) -> Monomial {
        let factors = self
            .factors
            .iter()
            .map(|&(g, e)| (g, e - pattern.exponent(g)))
            .collect();
        Monomial::from_factors(factors)
    }
}

/// Degree-two rewrite pattern with its replacement.
#[derive(Clone, Debug)]
pub struct RewriteRule {
    pub lhs: Monomial,
    pub rhs: Vec<(Monomial, Rational)>,
}

/// Plain-data description of a rule, convenient for building presentations
/// and for replaying the same relations inside the exterior-algebra oracle.
#[derive(Clone, Debug)]
pub struct RuleSpec {
    pub lhs: Vec<(String, u32)>,
    pub rhs: Vec<(Rational, Vec<(String, u32)>)>,
}

impl RuleSpec {
    fn annihilate(a: &str, ea: u32, b: Option<(&str, u32)>) -> Self {
        let mut lhs = vec![(a.to_string(), ea)];
        if let Some((bn, eb)) = b {
            lhs.push((bn.to_string(), eb));
        }
        RuleSpec {
            lhs,
            rhs: Vec::new(),
        }
    }

    fn rewrite(lhs: &[(&str, u32)], coeff: Rational, rhs: &[(&str, u32)]) -> Self {
        RuleSpec {
            lhs: lhs.iter().map(|&(n, e)| (n.to_string(), e)).collect(),
            rhs: vec![(
                coeff,
                rhs.iter().map(|&(n, e)| (n.to_string(), e)).collect(),
            )],
        }
    }
}

/// The relations satisfied by the diagonal classes over a curve with `pairs`
/// symplectic pairs in degree one (`pairs` = curve genus). The three families
/// of mixed products (shared first, middle and last index) all carry positive
/// sign; [`crate::oracle::check_rule_table`] certifies every line by brute
/// force expansion in the underlying odd basis.
pub fn rewrite_rule_table(pairs: i64) -> Vec<RuleSpec> {
    let mut rules = Vec::new();
    // point classes square to zero
    for eta in ["eta1", "eta2", "eta3"] {
        rules.push(RuleSpec::annihilate(eta, 2, None));
    }
    // a point class kills any diagonal class touching its factor
    for (eta, gamma) in [
        ("eta1", "gamma12"),
        ("eta2", "gamma12"),
        ("eta1", "gamma13"),
        ("eta3", "gamma13"),
        ("eta2", "gamma23"),
        ("eta3", "gamma23"),
        ("eta1", "gamma14"),
        ("eta2", "gamma24"),
        ("eta3", "gamma34"),
    ] {
        rules.push(RuleSpec::annihilate(eta, 1, Some((gamma, 1))));
    }
    // squares of curve-curve diagonals
    for (gamma, e1, e2) in [
        ("gamma12", "eta1", "eta2"),
        ("gamma13", "eta1", "eta3"),
        ("gamma23", "eta2", "eta3"),
    ] {
        rules.push(RuleSpec::rewrite(
            &[(gamma, 2)],
            rat(-2 * pairs),
            &[(e1, 1), (e2, 1)],
        ));
    }
    // squares of curve-W diagonals
    for (gamma, eta) in [
        ("gamma14", "eta1"),
        ("gamma24", "eta2"),
        ("gamma34", "eta3"),
    ] {
        rules.push(RuleSpec::rewrite(
            &[(gamma, 2)],
            rat(-2),
            &[(eta, 1), ("theta", 1)],
        ));
    }
    // shared middle index: gamma_ij * gamma_jk = eta_j * gamma_ik
    for (a, b, eta, g) in [
        ("gamma12", "gamma23", "eta2", "gamma13"),
        ("gamma12", "gamma24", "eta2", "gamma14"),
        ("gamma13", "gamma34", "eta3", "gamma14"),
        ("gamma23", "gamma34", "eta3", "gamma24"),
    ] {
        rules.push(RuleSpec::rewrite(
            &[(a, 1), (b, 1)],
            rat(1),
            &[(eta, 1), (g, 1)],
        ));
    }
    // shared first index: gamma_ij * gamma_ik = eta_i * gamma_jk
    for (a, b, eta, g) in [
        ("gamma12", "gamma13", "eta1", "gamma23"),
        ("gamma12", "gamma14", "eta1", "gamma24"),
        ("gamma13", "gamma14", "eta1", "gamma34"),
        ("gamma23", "gamma24", "eta2", "gamma34"),
    ] {
        rules.push(RuleSpec::rewrite(
            &[(a, 1), (b, 1)],
            rat(1),
            &[(eta, 1), (g, 1)],
        ));
    }
    // shared last index, curve factors only (gamma_i4 * gamma_j4 stays
    // irreducible: the W factor has no point class to absorb the pairing)
    rules.push(RuleSpec::rewrite(
        &[("gamma13", 1), ("gamma23", 1)],
        rat(1),
        &[("eta3", 1), ("gamma12", 1)],
    ));
    rules
}

#[derive(Clone, Debug)]
pub struct RingPresentation {
    generators: Vec<Generator>,
    by_name: HashMap<String, usize>,
    rules: Vec<RewriteRule>,
    caps: Vec<(FactorTag, u32)>,
    top_degree: u32,
    id: u64,
}

/// Budget on recursive rule applications per `normal_form` call; tripping it
/// means the presentation does not terminate and is reported as internal.
const REWRITE_GUARD: u64 = 1_000_000;

impl RingPresentation {
    pub fn assemble(
        generators: Vec<Generator>,
        rule_specs: &[RuleSpec],
        caps: Vec<(FactorTag, u32)>,
        top_degree: u32,
    ) -> Result<Self> {
        let mut by_name = HashMap::new();
        for (i, g) in generators.iter().enumerate() {
            if g.degree == 0 {
                return Err(Error::InvalidInput(format!(
                    "generator {} has degree zero",
                    g.name
                )));
            }
            if by_name.insert(g.name.clone(), i).is_some() {
                return Err(Error::InvalidInput(format!(
                    "duplicate generator name {}",
                    g.name
                )));
            }
        }
        let lookup = |name: &str| -> Result<usize> {
            by_name
                .get(name)
                .copied()
                .ok_or_else(|| Error::InvalidInput(format!("unknown generator {name}")))
        };
        let mut rules = Vec::new();
        for spec in rule_specs {
            let lhs = Monomial::from_factors(
                spec.lhs
                    .iter()
                    .map(|(n, e)| Ok((lookup(n)?, *e)))
                    .collect::<Result<Vec<_>>>()?,
            );
            let mut rhs = Vec::new();
            for (coeff, mono) in &spec.rhs {
                let m = Monomial::from_factors(
                    mono.iter()
                        .map(|(n, e)| Ok((lookup(n)?, *e)))
                        .collect::<Result<Vec<_>>>()?,
                );
                rhs.push((m, coeff.clone()));
            }
            rules.push(RewriteRule { lhs, rhs });
        }
        let mut p = RingPresentation {
            generators,
            by_name,
            rules,
            caps,
            top_degree,
            id: 0,
        };
        // degrees of lhs and rhs must agree or the grading breaks
        for rule in &p.rules {
            let ld = p.monomial_degree(&rule.lhs);
            for (m, _) in &rule.rhs {
                if p.monomial_degree(m) != ld {
                    return Err(Error::InvalidInput(
                        "rewrite rule does not preserve degree".to_string(),
                    ));
                }
            }
        }
        p.id = p.fingerprint();
        Ok(p)
    }

    fn fingerprint(&self) -> u64 {
        let mut h = DefaultHasher::new();
        for g in &self.generators {
            g.name.hash(&mut h);
            g.degree.hash(&mut h);
        }
        for r in &self.rules {
            r.lhs.hash(&mut h);
            for (m, c) in &r.rhs {
                m.hash(&mut h);
                c.to_string().hash(&mut h);
            }
        }
        self.top_degree.hash(&mut h);
        self.caps.len().hash(&mut h);
        h.finish()
    }

    pub fn generator_index(&self, name: &str) -> Result<usize> {
        self.by_name
            .get(name)
            .copied()
            .ok_or_else(|| Error::InvalidInput(format!("unknown generator {name}")))
    }

    pub fn generator(&self, idx: usize) -> &Generator {
        &self.generators[idx]
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn has_generator(&self, name: &str) -> bool {
        self.by_name.contains_key(name)
    }

    pub fn top_degree(&self) -> u32 {
        self.top_degree
    }

    pub fn rules(&self) -> &[RewriteRule] {
        &self.rules
    }

    pub fn monomial_degree(&self, m: &Monomial) -> u32 {
        m.factors
            .iter()
            .map(|&(g, e)| self.generators[g].degree * e)
            .sum()
    }

    fn factor_degree(&self, m: &Monomial, tag: FactorTag) -> u32 {
        m.factors
            .iter()
            .filter(|&&(g, _)| self.generators[g].tag == tag)
            .map(|&(g, e)| self.generators[g].degree * e)
            .sum()
    }

    fn check_element(&self, x: &RingElement) -> Result<()> {
        if x.pres_id != self.id {
            return Err(Error::InvalidInput(
                "element belongs to a different presentation".to_string(),
            ));
        }
        Ok(())
    }

    pub fn zero(&self) -> RingElement {
        RingElement {
            pres_id: self.id,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(&self) -> RingElement {
        self.constant(rat(1))
    }

    pub fn constant(&self, q: Rational) -> RingElement {
        let mut terms = BTreeMap::new();
        if !q.is_zero() {
            terms.insert(Monomial::one(), q);
        }
        RingElement {
            pres_id: self.id,
            terms,
        }
    }

    pub fn gen_elt(&self, name: &str) -> Result<RingElement> {
        self.mono_elt(rat(1), &[(name, 1)])
    }

    pub fn mono_elt(&self, coeff: Rational, factors: &[(&str, u32)]) -> Result<RingElement> {
        self.from_terms(vec![(coeff, factors.to_vec())])
    }

    /// Build and normalize an element given as a list of terms.
    pub fn from_terms(&self, terms: Vec<(Rational, Vec<(&str, u32)>)>) -> Result<RingElement> {
        let mut raw = BTreeMap::new();
        for (coeff, factors) in terms {
            let mono = Monomial::from_factors(
                factors
                    .iter()
                    .map(|&(n, e)| Ok((self.generator_index(n)?, e)))
                    .collect::<Result<Vec<_>>>()?,
            );
            accumulate(&mut raw, mono, coeff);
        }
        let x = RingElement {
            pres_id: self.id,
            terms: raw,
        };
        self.normal_form(&x)
    }

    /// Exhaustive rewriting followed by cap and truncation deletion. The
    /// result is a fixed point: no monomial retains a rule left-hand side.
    pub fn normal_form(&self, x: &RingElement) -> Result<RingElement> {
        self.check_element(x)?;
        let mut out = BTreeMap::new();
        let mut guard = REWRITE_GUARD;
        for (mono, coeff) in &x.terms {
            self.reduce_into(mono.clone(), coeff.clone(), &mut out, &mut guard)?;
        }
        Ok(RingElement {
            pres_id: self.id,
            terms: out,
        })
    }

    fn reduce_into(
        &self,
        mono: Monomial,
        coeff: Rational,
        out: &mut BTreeMap<Monomial, Rational>,
        guard: &mut u64,
    ) -> Result<()> {
        if coeff.is_zero() {
            return Ok(());
        }
        if *guard == 0 {
            return Err(Error::Internal(
                "rewrite guard exceeded: presentation does not terminate".to_string(),
            ));
        }
        *guard -= 1;
        if self.monomial_degree(&mono) > self.top_degree {
            return Ok(());
        }
        for &(tag, cap) in &self.caps {
            if self.factor_degree(&mono, tag) > cap {
                return Ok(());
            }
        }
        for rule in &self.rules {
            if mono.divisible_by(&rule.lhs) {
                let quotient = mono.div(&rule.lhs);
                for (rm, rc) in &rule.rhs {
                    self.reduce_into(quotient.mul(rm), &coeff * rc, out, guard)?;
                }
                return Ok(());
            }
        }
        accumulate(out, mono, coeff);
        Ok(())
    }

    pub fn add(&self, x: &RingElement, y: &RingElement) -> Result<RingElement> {
        self.check_element(x)?;
        self.check_element(y)?;
        let mut terms = x.terms.clone();
        for (m, c) in &y.terms {
            accumulate(&mut terms, m.clone(), c.clone());
        }
        Ok(RingElement {
            pres_id: self.id,
            terms,
        })
    }

    pub fn sub(&self, x: &RingElement, y: &RingElement) -> Result<RingElement> {
        self.add(x, &self.neg(y))
    }

    pub fn neg(&self, x: &RingElement) -> RingElement {
        self.scale(x, &rat(-1))
    }

    pub fn scale(&self, x: &RingElement, q: &Rational) -> RingElement {
        if q.is_zero() {
            return self.zero();
        }
        RingElement {
            pres_id: x.pres_id,
            terms: x.terms.iter().map(|(m, c)| (m.clone(), c * q)).collect(),
        }
    }

    pub fn mul(&self, x: &RingElement, y: &RingElement) -> Result<RingElement> {
        self.check_element(x)?;
        self.check_element(y)?;
        let mut out = BTreeMap::new();
        let mut guard = REWRITE_GUARD;
        for (mx, cx) in &x.terms {
            for (my, cy) in &y.terms {
                self.reduce_into(mx.mul(my), cx * cy, &mut out, &mut guard)?;
            }
        }
        Ok(RingElement {
            pres_id: self.id,
            terms: out,
        })
    }

    pub fn pow(&self, x: &RingElement, e: u32) -> Result<RingElement> {
        let mut acc = self.one();
        for _ in 0..e {
            acc = self.mul(&acc, x)?;
        }
        Ok(acc)
    }

    /// `sum_k (-D)^k / k!`, truncated at the presentation's top degree. `D`
    /// must have no degree-zero part, which makes it nilpotent under the caps.
    pub fn exp_neg(&self, d: &RingElement) -> Result<RingElement> {
        let d = self.normal_form(d)?;
        if !d.constant_term().is_zero() {
            return Err(Error::InvalidInput(
                "exp_neg requires an argument with no degree-0 term".to_string(),
            ));
        }
        let neg = self.neg(&d);
        let mut acc = self.one();
        let mut term = self.one();
        for k in 1..=(self.top_degree + 1) {
            term = self.mul(&term, &neg)?;
            term = self.scale(&term, &ratio(1, k as i64));
            if term.is_zero() {
                break;
            }
            acc = self.add(&acc, &term)?;
        }
        Ok(acc)
    }

    /// Degree-`k` homogeneous component.
    pub fn component(&self, x: &RingElement, k: u32) -> RingElement {
        RingElement {
            pres_id: x.pres_id,
            terms: x
                .terms
                .iter()
                .filter(|(m, _)| self.monomial_degree(m) == k)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Degree shared by every term, if any; zero is homogeneous of any degree.
    pub fn homogeneous_degree(&self, x: &RingElement) -> Option<u32> {
        let mut it = x.terms.keys().map(|m| self.monomial_degree(m));
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    pub fn is_homogeneous_of(&self, x: &RingElement, k: u32) -> bool {
        x.terms.keys().all(|m| self.monomial_degree(m) == k)
    }

    /// Coefficient of the monomial given by generator names and exponents.
    pub fn coeff(&self, x: &RingElement, factors: &[(&str, u32)]) -> Result<Rational> {
        let mono = Monomial::from_factors(
            factors
                .iter()
                .map(|&(n, e)| Ok((self.generator_index(n)?, e)))
                .collect::<Result<Vec<_>>>()?,
        );
        Ok(x.terms.get(&mono).cloned().unwrap_or_else(Rational::zero))
    }

    /// Canonical rendering of a single monomial, `eta1^1*gamma13^1`; the
    /// empty monomial prints as `1`.
    pub fn monomial_text(&self, m: &Monomial) -> String {
        if m.is_one() {
            return "1".to_string();
        }
        m.factors
            .iter()
            .map(|&(g, e)| format!("{}^{}", self.generators[g].name, e))
            .collect::<Vec<_>>()
            .join("*")
    }

    /// Canonical text form `q1*mono1 + q2*mono2 + ...`, rationals in lowest
    /// terms, monomials as `eta1^1*gamma13^1`, the empty monomial as `1`.
    pub fn to_text(&self, x: &RingElement) -> String {
        if x.terms.is_empty() {
            return "0".to_string();
        }
        x.terms
            .iter()
            .map(|(m, c)| format!("{}*{}", rational_str(c), self.monomial_text(m)))
            .collect::<Vec<_>>()
            .join(" + ")
    }

    /// The presentation obtained by integrating out the third curve factor:
    /// its generators and every rule touching them are deleted.
    pub fn without_curve3(&self) -> RingPresentation {
        let dropped: Vec<usize> = self
            .generators
            .iter()
            .enumerate()
            .filter(|(_, g)| involves_factor3(g.tag))
            .map(|(i, _)| i)
            .collect();
        let generators: Vec<Generator> = self
            .generators
            .iter()
            .filter(|g| !involves_factor3(g.tag))
            .cloned()
            .collect();
        let keep_mono = |m: &Monomial| m.factors.iter().all(|(g, _)| !dropped.contains(g));
        let rule_specs: Vec<RuleSpec> = self
            .rules
            .iter()
            .filter(|r| keep_mono(&r.lhs) && r.rhs.iter().all(|(m, _)| keep_mono(m)))
            .map(|r| RuleSpec {
                lhs: r
                    .lhs
                    .factors
                    .iter()
                    .map(|&(g, e)| (self.generators[g].name.clone(), e))
                    .collect(),
                rhs: r
                    .rhs
                    .iter()
                    .map(|(m, c)| {
                        (
                            c.clone(),
                            m.factors
                                .iter()
                                .map(|&(g, e)| (self.generators[g].name.clone(), e))
                                .collect(),
                        )
                    })
                    .collect(),
            })
            .collect();
        let caps = self
            .caps
            .iter()
            .filter(|(tag, _)| *tag != FactorTag::Curve(3))
            .cloned()
            .collect();
        RingPresentation::assemble(generators, &rule_specs, caps, self.top_degree)
            .expect("reduced presentation is well formed")
    }
}

fn involves_factor3(tag: FactorTag) -> bool {
    matches!(
        tag,
        FactorTag::Curve(3) | FactorTag::Mixed(3, _) | FactorTag::Mixed(_, 3)
    )
}

fn accumulate(map: &mut BTreeMap<Monomial, Rational>, mono: Monomial, coeff: Rational) {
    if coeff.is_zero() {
        return;
    }
    match map.get_mut(&mono) {
        Some(c) => {
            *c += coeff;
            if c.is_zero() {
                map.remove(&mono);
            }
        }
        None => {
            map.insert(mono, coeff);
        }
    }
}

/// Element of a [`RingPresentation`]: a finite map from monomials to nonzero
/// exact rationals, kept in normal form by every public operation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingElement {
    pres_id: u64,
    terms: BTreeMap<Monomial, Rational>,
}

impl RingElement {
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn constant_term(&self) -> Rational {
        self.terms
            .get(&Monomial::one())
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

/// The presentation for the even cohomology of `C x C x C x W` at parameter
/// `s` (curve genus `3s - 1`, net degree `d = 2s + 2`, `W` of dimension two).
///
/// Point classes have square zero, diagonal squares pick up `-2(3s - 1)` on
/// curve pairs and `-2 eta_k theta` against the `W` factor, shared-index
/// diagonal products reduce to `eta * gamma`, monomials of pure `theta`/`c`
/// degree above two die (so `c3` is retained as a symbol but annihilates),
/// and everything truncates above total degree four.
pub fn standard_presentation(s: u32) -> Result<RingPresentation> {
    if s == 0 {
        return Err(Error::InvalidInput(
            "s must be a positive integer".to_string(),
        ));
    }
    let pairs = 3 * i64::from(s) - 1;
    let generators = vec![
        Generator::new("eta1", 1, FactorTag::Curve(1)),
        Generator::new("eta2", 1, FactorTag::Curve(2)),
        Generator::new("eta3", 1, FactorTag::Curve(3)),
        Generator::new("gamma12", 1, FactorTag::Mixed(1, 2)),
        Generator::new("gamma13", 1, FactorTag::Mixed(1, 3)),
        Generator::new("gamma14", 1, FactorTag::Mixed(1, 4)),
        Generator::new("gamma23", 1, FactorTag::Mixed(2, 3)),
        Generator::new("gamma24", 1, FactorTag::Mixed(2, 4)),
        Generator::new("gamma34", 1, FactorTag::Mixed(3, 4)),
        Generator::new("theta", 1, FactorTag::WFactor),
        Generator::new("c1", 1, FactorTag::WFactor),
        Generator::new("c2", 2, FactorTag::WFactor),
        Generator::new("c3", 3, FactorTag::WFactor),
    ];
    let caps = vec![
        (FactorTag::Curve(1), 1),
        (FactorTag::Curve(2), 1),
        (FactorTag::Curve(3), 1),
        (FactorTag::WFactor, 2),
    ];
    RingPresentation::assemble(generators, &rewrite_rule_table(pairs), caps, 4)
}

/// Fiber integration along the third curve factor (the pushforward half of
/// Grothendieck-Riemann-Roch; the Todd correction is supplied by the caller):
/// a monomial containing `eta3` maps to itself with `eta3` removed, and any
/// other monomial integrates to zero, including those still carrying an
/// index-3 diagonal class. The result lives over [`RingPresentation::without_curve3`].
pub fn fiber_integrate_3(p: &RingPresentation, x: &RingElement) -> Result<RingElement> {
    let x = p.normal_form(x)?;
    let eta3 = p.generator_index("eta3")?;
    let reduced = p.without_curve3();
    let mut terms = Vec::new();
    for (mono, coeff) in x.terms() {
        if mono.exponent(eta3) == 0 {
            continue;
        }
        let stripped: Vec<(usize, u32)> = mono
            .factors()
            .iter()
            .filter(|&&(g, _)| g != eta3)
            .cloned()
            .collect();
        if stripped
            .iter()
            .any(|&(g, _)| involves_factor3(p.generator(g).tag))
        {
            continue;
        }
        let named: Vec<(&str, u32)> = stripped
            .iter()
            .map(|&(g, e)| (p.generator(g).name.as_str(), e))
            .collect();
        terms.push((coeff.clone(), named.iter().map(|&(n, e)| (n, e)).collect()));
    }
    reduced.from_terms(terms)
}

/// Evaluate a homogeneous degree-four class over the integrated presentation
/// (`C x C x W`) against the fundamental class. The degree-two part of the
/// `W` factor collapses onto `c2` via the classical identities
/// `c1^2 = (3s+5)/(s+3) c2`, `c1 theta = (s+1) c2`,
/// `theta^2 = (s+1)(s+2)/3 c2`, then `c2` caps to `N_{3s,2,2s+2}` points;
/// monomials still containing a diagonal class integrate to zero.
pub fn top_evaluate(p: &RingPresentation, x: &RingElement, s: u32) -> Result<Rational> {
    if s == 0 {
        return Err(Error::InvalidInput(
            "s must be a positive integer".to_string(),
        ));
    }
    let x = p.normal_form(x)?;
    if x.is_zero() {
        return Ok(rat(0));
    }
    if !p.is_homogeneous_of(&x, 4) {
        return Err(Error::InvalidInput(
            "top_evaluate requires a homogeneous element of complex degree 4".to_string(),
        ));
    }
    let s_i = i64::from(s);
    let n = crate::brill_noether::castelnuovo(3 * s_i, 2, 2 * s_i + 2);
    let idx = |name: &str| p.generator_index(name);
    let (eta1, eta2) = (idx("eta1")?, idx("eta2")?);
    let (theta, c1, c2) = (idx("theta")?, idx("c1")?, idx("c2")?);
    let mut acc = rat(0);
    for (mono, coeff) in x.terms() {
        if mono
            .factors()
            .iter()
            .any(|&(g, _)| matches!(p.generator(g).tag, FactorTag::Mixed(_, _)))
        {
            continue;
        }
        if mono.exponent(eta1) != 1 || mono.exponent(eta2) != 1 {
            continue;
        }
        let (t, k1, k2) = (mono.exponent(theta), mono.exponent(c1), mono.exponent(c2));
        let multiplier = match (k1, t, k2) {
            (2, 0, 0) => ratio(3 * s_i + 5, s_i + 3),
            (1, 1, 0) => rat(s_i + 1),
            (0, 2, 0) => ratio((s_i + 1) * (s_i + 2), 3),
            (0, 0, 1) => rat(1),
            _ => {
                return Err(Error::Internal(format!(
                    "unexpected W-part exponents (c1={k1}, theta={t}, c2={k2}) in top_evaluate"
                )))
            }
        };
        acc += coeff * multiplier * &n;
    }
    Ok(acc)
}

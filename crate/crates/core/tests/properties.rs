//! Randomized algebraic properties of the ring engine and the Chern
//! conversions: normal-form idempotence, ring axioms, rewrite confluence,
//! grading, exponential inverses and the Newton-identity roundtrip. All
//! comparisons are exact.

use proptest::prelude::*;

use doublepoint::chern::{character_to_chern, chern_to_character, ChernData, ChernKind};
use doublepoint::ring::{standard_presentation, RingElement, RingPresentation};
use doublepoint::{ratio, Rational};

const GENS: [(&str, u32); 13] = [
    ("eta1", 1),
    ("eta2", 1),
    ("eta3", 1),
    ("gamma12", 1),
    ("gamma13", 1),
    ("gamma14", 1),
    ("gamma23", 1),
    ("gamma24", 1),
    ("gamma34", 1),
    ("theta", 1),
    ("c1", 1),
    ("c2", 2),
    ("c3", 3),
];

/// Recipe for one term: a coefficient and generator picks that are folded
/// into a monomial of bounded degree.
type TermRecipe = (i64, u8, Vec<prop::sample::Index>);
type ElementRecipe = Vec<TermRecipe>;

fn term_strategy() -> impl Strategy<Value = TermRecipe> {
    (
        -12i64..=12,
        1u8..=4,
        prop::collection::vec(any::<prop::sample::Index>(), 0..=4),
    )
}

fn element_strategy() -> impl Strategy<Value = ElementRecipe> {
    prop::collection::vec(term_strategy(), 0..=5)
}

fn build_term(
    p: &RingPresentation,
    recipe: &TermRecipe,
    degree_cap: u32,
) -> (Rational, Vec<(&'static str, u32)>) {
    let (num, den, picks) = recipe;
    let mut factors: Vec<(&'static str, u32)> = Vec::new();
    let mut degree = 0u32;
    for pick in picks {
        let (name, gdeg) = GENS[pick.index(GENS.len())];
        if !p.has_generator(name) {
            continue;
        }
        if degree + gdeg > degree_cap {
            break;
        }
        degree += gdeg;
        factors.push((name, 1));
    }
    (ratio(*num, i64::from(*den)), factors)
}

fn build_element(p: &RingPresentation, recipe: &ElementRecipe) -> RingElement {
    let terms = recipe.iter().map(|t| build_term(p, t, 4)).collect();
    p.from_terms(terms)
        .expect("recipe uses declared generators")
}

/// Homogeneous element of the given degree (terms of other degrees dropped).
fn build_homogeneous(p: &RingPresentation, recipe: &ElementRecipe, degree: u32) -> RingElement {
    let mut acc = p.zero();
    for t in recipe {
        let (coeff, factors) = build_term(p, t, degree);
        let d: u32 = factors
            .iter()
            .map(|&(n, e)| GENS.iter().find(|&&(gn, _)| gn == n).unwrap().1 * e)
            .sum();
        if d != degree {
            continue;
        }
        let term = p.from_terms(vec![(coeff, factors)]).unwrap();
        acc = p.add(&acc, &term).unwrap();
    }
    acc
}

proptest! {
    #[test]
    fn normal_form_idempotent(recipe in element_strategy()) {
        let p = standard_presentation(2).unwrap();
        let x = build_element(&p, &recipe);
        let nf = p.normal_form(&x).unwrap();
        prop_assert_eq!(p.normal_form(&nf).unwrap(), nf);
    }

    #[test]
    fn multiplication_commutes(a in element_strategy(), b in element_strategy()) {
        let p = standard_presentation(2).unwrap();
        let x = build_element(&p, &a);
        let y = build_element(&p, &b);
        prop_assert_eq!(p.mul(&x, &y).unwrap(), p.mul(&y, &x).unwrap());
    }

    #[test]
    fn multiplication_associates_and_is_confluent(
        a in element_strategy(),
        b in element_strategy(),
        c in element_strategy(),
    ) {
        // associativity of the normalized product doubles as the confluence
        // witness: the rewrite order in (xy)z and x(yz) differs term by term
        let p = standard_presentation(2).unwrap();
        let x = build_element(&p, &a);
        let y = build_element(&p, &b);
        let z = build_element(&p, &c);
        let left = p.mul(&p.mul(&x, &y).unwrap(), &z).unwrap();
        let right = p.mul(&x, &p.mul(&y, &z).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn multiplication_distributes(
        a in element_strategy(),
        b in element_strategy(),
        c in element_strategy(),
    ) {
        let p = standard_presentation(2).unwrap();
        let x = build_element(&p, &a);
        let y = build_element(&p, &b);
        let z = build_element(&p, &c);
        let left = p.mul(&x, &p.add(&y, &z).unwrap()).unwrap();
        let right = p.add(&p.mul(&x, &y).unwrap(), &p.mul(&x, &z).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn products_of_homogeneous_elements_are_graded(
        a in element_strategy(),
        b in element_strategy(),
        da in 1u32..=2,
        db in 1u32..=2,
    ) {
        let p = standard_presentation(2).unwrap();
        let x = build_homogeneous(&p, &a, da);
        let y = build_homogeneous(&p, &b, db);
        let xy = p.mul(&x, &y).unwrap();
        prop_assert!(p.is_homogeneous_of(&xy, da + db));
    }

    #[test]
    fn exp_neg_is_inverted_by_exp(recipe in element_strategy()) {
        let p = standard_presentation(2).unwrap();
        let x = build_element(&p, &recipe);
        // strip any constant part to make the argument nilpotent
        let d = p.sub(&x, &p.constant(x.constant_term())).unwrap();
        let a = p.exp_neg(&d).unwrap();
        let b = p.exp_neg(&p.neg(&d)).unwrap();
        prop_assert_eq!(p.mul(&a, &b).unwrap(), p.one());
    }

    #[test]
    fn newton_identities_roundtrip(
        a in element_strategy(),
        b in element_strategy(),
        c in element_strategy(),
    ) {
        let p = standard_presentation(2).unwrap().without_curve3();
        // random rank-3 total Chern data with homogeneous parts
        let c1 = build_homogeneous(&p, &a, 1);
        let c2 = build_homogeneous(&p, &b, 2);
        let c3 = build_homogeneous(&p, &c, 3);
        let cd = ChernData::new(&p, 3, vec![c1, c2, c3], ChernKind::TotalChern).unwrap();
        let ch = chern_to_character(&p, &cd, 3).unwrap();
        let back = character_to_chern(&p, &ch, 3).unwrap();
        prop_assert_eq!(back.parts, cd.parts);
    }
}

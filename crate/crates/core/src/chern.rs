//! Conversions between Chern characters and total Chern classes via Newton's
//! identities, and the degree-two and 2x2-determinant Porteous expressions,
//! all over a [`crate::ring::RingPresentation`].

use crate::ring::{RingElement, RingPresentation};
use crate::{rat, ratio, Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ChernKind {
    TotalChern,
    Character,
}

/// A rank together with homogeneous parts indexed by complex degree 1..=k,
/// representing either a total Chern class or a Chern character (whose
/// degree-0 part is the rank).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChernData {
    pub rank: i64,
    pub parts: Vec<RingElement>,
    pub kind: ChernKind,
}

impl ChernData {
    pub fn new(
        p: &RingPresentation,
        rank: i64,
        parts: Vec<RingElement>,
        kind: ChernKind,
    ) -> Result<Self> {
        for (i, part) in parts.iter().enumerate() {
            let degree = (i + 1) as u32;
            let part = p.normal_form(part)?;
            if !p.is_homogeneous_of(&part, degree) {
                return Err(Error::InvalidInput(format!(
                    "part {degree} of Chern data is not homogeneous of degree {degree}"
                )));
            }
        }
        Ok(ChernData { rank, parts, kind })
    }

    /// Degree-`k` part, zero beyond the stored range.
    pub fn part(&self, p: &RingPresentation, k: usize) -> RingElement {
        if k == 0 || k > self.parts.len() {
            p.zero()
        } else {
            self.parts[k - 1].clone()
        }
    }
}

/// Power sums from a character: `p_k = k! * ch_k`.
fn power_sums(p: &RingPresentation, cd: &ChernData, up_to: usize) -> Vec<RingElement> {
    let mut out = Vec::new();
    let mut kfact = 1i64;
    for k in 1..=up_to {
        kfact *= k as i64;
        out.push(p.scale(&cd.part(p, k), &rat(kfact)));
    }
    out
}

/// Total Chern classes from a Chern character, through degree `up_to <= 3`:
/// `c1 = p1`, `c2 = (c1^2 - p2)/2`, `c3 = (p3 - c1^3 + 3 c1 c2)/3` with
/// `p_k = k! * ch_k`.
pub fn character_to_chern(p: &RingPresentation, cd: &ChernData, up_to: usize) -> Result<ChernData> {
    if cd.kind != ChernKind::Character {
        return Err(Error::InvalidInput(
            "character_to_chern expects character data".to_string(),
        ));
    }
    if up_to > 3 {
        return Err(Error::InvalidInput(
            "character_to_chern supports degrees up to 3".to_string(),
        ));
    }
    let ps = power_sums(p, cd, up_to);
    let mut parts = Vec::new();
    if up_to >= 1 {
        parts.push(ps[0].clone());
    }
    if up_to >= 2 {
        let c1 = &parts[0];
        let c1sq = p.mul(c1, c1)?;
        parts.push(p.scale(&p.sub(&c1sq, &ps[1])?, &ratio(1, 2)));
    }
    if up_to >= 3 {
        let c1 = parts[0].clone();
        let c2 = parts[1].clone();
        let c1cu = p.pow(&c1, 3)?;
        let c1c2 = p.mul(&c1, &c2)?;
        let num = p.add(&p.sub(&ps[2], &c1cu)?, &p.scale(&c1c2, &rat(3)))?;
        parts.push(p.scale(&num, &ratio(1, 3)));
    }
    ChernData::new(p, cd.rank, parts, ChernKind::TotalChern)
}

/// Chern character from total Chern classes, the inverse direction:
/// `p1 = c1`, `p2 = c1^2 - 2 c2`, `p3 = c1^3 - 3 c1 c2 + 3 c3`, `ch_k = p_k / k!`.
pub fn chern_to_character(p: &RingPresentation, cd: &ChernData, up_to: usize) -> Result<ChernData> {
    if cd.kind != ChernKind::TotalChern {
        return Err(Error::InvalidInput(
            "chern_to_character expects total-Chern data".to_string(),
        ));
    }
    if up_to > 3 {
        return Err(Error::InvalidInput(
            "chern_to_character supports degrees up to 3".to_string(),
        ));
    }
    let c1 = cd.part(p, 1);
    let c2 = cd.part(p, 2);
    let c3 = cd.part(p, 3);
    let mut parts = Vec::new();
    if up_to >= 1 {
        parts.push(c1.clone());
    }
    if up_to >= 2 {
        let p2 = p.sub(&p.mul(&c1, &c1)?, &p.scale(&c2, &rat(2)))?;
        parts.push(p.scale(&p2, &ratio(1, 2)));
    }
    if up_to >= 3 {
        let c1cu = p.pow(&c1, 3)?;
        let c1c2 = p.mul(&c1, &c2)?;
        let p3 = p.add(
            &p.sub(&c1cu, &p.scale(&c1c2, &rat(3)))?,
            &p.scale(&c3, &rat(3)),
        )?;
        parts.push(p.scale(&p3, &ratio(1, 6)));
    }
    ChernData::new(p, cd.rank, parts, ChernKind::Character)
}

/// Degree-two part of the Porteous expansion for the rank-at-most-one locus
/// of a map of rank-3 bundles `V -> M`:
/// `c2(V^) + c1(V^) c1(M) + c1(M)^2 - c2(M)` with `c_i(V^) = (-1)^i c_i(V)`.
pub fn porteous_codim2_quotient(
    p: &RingPresentation,
    cv: &ChernData,
    cm: &ChernData,
) -> Result<RingElement> {
    if cv.rank != 3 || cm.rank != 3 {
        return Err(Error::InvalidInput(
            "porteous_codim2_quotient expects rank-3 data".to_string(),
        ));
    }
    let v1_dual = p.neg(&cv.part(p, 1));
    let v2_dual = cv.part(p, 2);
    let m1 = cm.part(p, 1);
    let m2 = cm.part(p, 2);
    let mut acc = v2_dual;
    acc = p.add(&acc, &p.mul(&v1_dual, &m1)?)?;
    acc = p.add(&acc, &p.mul(&m1, &m1)?)?;
    acc = p.sub(&acc, &m2)?;
    Ok(acc)
}

/// Chern classes `e_i` of the formal difference of the pulled-back rank-3
/// bundle (classes `fc`) and the evaluation bundle (classes `cm`):
/// `e1 = f1 + m1`, `e2 = f2 + f1 m1 + m1^2 - m2`,
/// `e3 = f3 + f2 m1 + f1 (m1^2 - m2) + (m1^3 + m3 - 2 m1 m2)`.
pub fn porteous_e_classes(
    p: &RingPresentation,
    fc: &ChernData,
    cm: &ChernData,
) -> Result<(RingElement, RingElement, RingElement)> {
    let f1 = fc.part(p, 1);
    let f2 = fc.part(p, 2);
    let f3 = fc.part(p, 3);
    let m1 = cm.part(p, 1);
    let m2 = cm.part(p, 2);
    let m3 = cm.part(p, 3);

    let e1 = p.add(&f1, &m1)?;

    let m1sq = p.mul(&m1, &m1)?;
    let m1sq_minus_m2 = p.sub(&m1sq, &m2)?;
    let mut e2 = p.add(&f2, &p.mul(&f1, &m1)?)?;
    e2 = p.add(&e2, &m1sq_minus_m2)?;

    let m1cu = p.mul(&m1sq, &m1)?;
    let m1m2 = p.mul(&m1, &m2)?;
    let mut tail = p.add(&m1cu, &m3)?;
    tail = p.sub(&tail, &p.scale(&m1m2, &rat(2)))?;
    let mut e3 = p.add(&f3, &p.mul(&f2, &m1)?)?;
    e3 = p.add(&e3, &p.mul(&f1, &m1sq_minus_m2)?)?;
    e3 = p.add(&e3, &tail)?;

    Ok((e1, e2, e3))
}

/// The 2x2 Porteous determinant `e2^2 - e1 e3` for the rank-at-most-one
/// degeneracy locus; inputs must be homogeneous of degrees 1, 2, 3.
pub fn porteous_det_2x2(
    p: &RingPresentation,
    e1: &RingElement,
    e2: &RingElement,
    e3: &RingElement,
) -> Result<RingElement> {
    for (e, deg) in [(e1, 1u32), (e2, 2), (e3, 3)] {
        if !p.is_homogeneous_of(e, deg) {
            return Err(Error::InvalidInput(format!(
                "porteous_det_2x2 input is not homogeneous of degree {deg}"
            )));
        }
    }
    p.sub(&p.mul(e2, e2)?, &p.mul(e1, e3)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::standard_presentation;

    fn base() -> RingPresentation {
        standard_presentation(2).unwrap().without_curve3()
    }

    #[test]
    fn line_bundle_character_converts() {
        let p = base();
        // character of a line bundle with first Chern class eta1:
        // (1, eta1, eta1^2/2 = 0, ...) -> total Chern (eta1, 0, 0)
        let x = p.gen_elt("eta1").unwrap();
        let cd = ChernData::new(
            &p,
            1,
            vec![x.clone(), p.zero(), p.zero()],
            ChernKind::Character,
        )
        .unwrap();
        let c = character_to_chern(&p, &cd, 3).unwrap();
        assert_eq!(c.parts[0], x);
        assert!(c.parts[1].is_zero());
        assert!(c.parts[2].is_zero());
    }

    #[test]
    fn theta_line_bundle_roundtrip() {
        let p = base();
        let theta = p.gen_elt("theta").unwrap();
        let cd = ChernData::new(
            &p,
            1,
            vec![theta.clone(), p.zero(), p.zero()],
            ChernKind::TotalChern,
        )
        .unwrap();
        let ch = chern_to_character(&p, &cd, 3).unwrap();
        assert_eq!(ch.parts[0], theta);
        // ch_2 = theta^2 / 2; theta^3 dies under the W cap
        let theta_sq = p.mul(&theta, &theta).unwrap();
        assert_eq!(ch.parts[1], p.scale(&theta_sq, &ratio(1, 2)));
        assert!(ch.parts[2].is_zero());
        let back = character_to_chern(&p, &ch, 3).unwrap();
        assert_eq!(back.parts[0], theta);
        assert!(back.parts[1].is_zero());
        assert!(back.parts[2].is_zero());
    }

    #[test]
    fn zero_character_gives_zero_classes() {
        let p = base();
        let cd = ChernData::new(
            &p,
            3,
            vec![p.zero(), p.zero(), p.zero()],
            ChernKind::Character,
        )
        .unwrap();
        let c = character_to_chern(&p, &cd, 3).unwrap();
        assert!(c.parts.iter().all(|x| x.is_zero()));
    }

    #[test]
    fn whitney_sum_of_two_line_bundles() {
        let p = base();
        let x = p.gen_elt("eta1").unwrap();
        let y = p.gen_elt("eta2").unwrap();
        // ch(L1 + L2) = 2 + (x + y) + (x^2 + y^2)/2 + ...
        let ch1 = p.add(&x, &y).unwrap();
        let xsq = p.mul(&x, &x).unwrap();
        let ysq = p.mul(&y, &y).unwrap();
        let ch2 = p.scale(&p.add(&xsq, &ysq).unwrap(), &ratio(1, 2));
        let cd = ChernData::new(
            &p,
            2,
            vec![ch1.clone(), ch2, p.zero()],
            ChernKind::Character,
        )
        .unwrap();
        let c = character_to_chern(&p, &cd, 3).unwrap();
        // total Chern class (1 + x)(1 + y) = 1 + (x + y) + xy
        assert_eq!(c.parts[0], ch1);
        assert_eq!(c.parts[1], p.mul(&x, &y).unwrap());
        assert!(c.parts[2].is_zero());
    }

    #[test]
    fn porteous_codim2_trivial_cases() {
        let p = base();
        let zero3 = |kind| ChernData::new(&p, 3, vec![p.zero(), p.zero(), p.zero()], kind).unwrap();
        let z = zero3(ChernKind::TotalChern);
        assert!(porteous_codim2_quotient(&p, &z, &z).unwrap().is_zero());
        // trivial V against a line-bundle-like M reduces to c1(M)^2 - c2(M)
        let m1 = p.gen_elt("c1").unwrap();
        let cm = ChernData::new(
            &p,
            3,
            vec![m1.clone(), p.zero(), p.zero()],
            ChernKind::TotalChern,
        )
        .unwrap();
        let got = porteous_codim2_quotient(&p, &z, &cm).unwrap();
        assert_eq!(got, p.mul(&m1, &m1).unwrap());
        // rank mismatch rejected
        let bad = ChernData::new(&p, 2, vec![p.zero()], ChernKind::TotalChern).unwrap();
        assert!(porteous_codim2_quotient(&p, &bad, &z).is_err());
    }

    #[test]
    fn e_classes_degenerate_inputs() {
        let p = base();
        let zero3 = ChernData::new(
            &p,
            3,
            vec![p.zero(), p.zero(), p.zero()],
            ChernKind::TotalChern,
        )
        .unwrap();
        let fc = ChernData::new(
            &p,
            3,
            vec![
                p.gen_elt("c1").unwrap(),
                p.gen_elt("c2").unwrap(),
                p.gen_elt("c3").unwrap(),
            ],
            ChernKind::TotalChern,
        )
        .unwrap();
        // with vanishing M-classes the e-classes are the f-classes themselves
        let (e1, e2, e3) = porteous_e_classes(&p, &fc, &zero3).unwrap();
        assert_eq!(e1, p.gen_elt("c1").unwrap());
        assert_eq!(e2, p.gen_elt("c2").unwrap());
        // c3 dies under the W cap: it is retained as a symbol only
        assert!(e3.is_zero());
        // with vanishing f-classes everything is built from M
        let m = ChernData::new(
            &p,
            3,
            vec![p.gen_elt("eta1").unwrap(), p.zero(), p.zero()],
            ChernKind::TotalChern,
        )
        .unwrap();
        let (e1, e2, e3) = porteous_e_classes(&p, &zero3, &m).unwrap();
        assert_eq!(e1, p.gen_elt("eta1").unwrap());
        assert!(e2.is_zero()); // eta1^2 = 0
        assert!(e3.is_zero());
    }

    #[test]
    fn det_2x2_shapes() {
        let p = base();
        let e1 = p.gen_elt("c1").unwrap();
        let e2 = p
            .from_terms(vec![(rat(1), vec![("eta1", 1), ("theta", 1)])])
            .unwrap();
        let e3 = p
            .from_terms(vec![(rat(1), vec![("eta1", 1), ("eta2", 1), ("theta", 1)])])
            .unwrap();
        let det = porteous_det_2x2(&p, &e1, &e2, &e3).unwrap();
        assert!(p.is_homogeneous_of(&det, 4));
        // e1 = e3 = 0 leaves e2^2
        let det = porteous_det_2x2(&p, &p.zero(), &e2, &p.zero()).unwrap();
        assert_eq!(det, p.mul(&e2, &e2).unwrap());
        // all zero -> 0
        assert!(porteous_det_2x2(&p, &p.zero(), &p.zero(), &p.zero())
            .unwrap()
            .is_zero());
        // degree check failure
        assert!(porteous_det_2x2(&p, &e2, &e2, &e3).is_err());
    }

    #[test]
    fn roundtrip_on_structured_data() {
        let p = base();
        let c1 = p
            .from_terms(vec![
                (rat(4), vec![("eta1", 1)]),
                (rat(14), vec![("eta2", 1)]),
                (rat(-2), vec![("gamma12", 1)]),
                (rat(1), vec![("gamma14", 1)]),
                (rat(2), vec![("gamma24", 1)]),
            ])
            .unwrap();
        let c2 = p
            .from_terms(vec![
                (rat(7), vec![("eta1", 1), ("eta2", 1)]),
                (rat(2), vec![("gamma14", 1), ("gamma24", 1)]),
                (rat(-2), vec![("eta2", 1), ("theta", 1)]),
            ])
            .unwrap();
        let c3 = p
            .from_terms(vec![(
                rat(-8),
                vec![("eta1", 1), ("eta2", 1), ("theta", 1)],
            )])
            .unwrap();
        let cd = ChernData::new(&p, 3, vec![c1, c2, c3], ChernKind::TotalChern).unwrap();
        let ch = chern_to_character(&p, &cd, 3).unwrap();
        let back = character_to_chern(&p, &ch, 3).unwrap();
        assert_eq!(back.parts, cd.parts);
    }
}

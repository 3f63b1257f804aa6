//! Signed noncommutative symmetric functions: ribbons tensored with sign
//! words, multiplying by the ribbon rule on shapes and concatenation on
//! signs. The inverse of `1 - W` lives here with coefficients given by
//! tilings of ribbon shapes into hook-like tiles.

use crate::coeff::Coeff;
use crate::composition::Composition;
use crate::error::{Error, Result};
use crate::fqsym::ribbon_class_g;
use crate::graded::GradedSeries;
use crate::module::{Basis, BasisKey, ModuleElement};
use crate::perm::ColoredPermutation;

pub fn sr_term(ribbon: &[u32], signs: &[u8]) -> ModuleElement {
    let c = Composition::new(ribbon.to_vec()).expect("ribbon parts");
    assert_eq!(c.weight() as usize, signs.len(), "sign word length");
    ModuleElement::term(
        Basis::SignedRibbon,
        BasisKey::SRib(c, signs.to_vec()),
        Coeff::one(),
    )
}

/// The word attached to the tile `(1, 2^m)`: `1 (1 1bar)^m`.
fn tile_word(m: usize) -> Vec<u8> {
    let mut w = vec![0];
    for _ in 0..m {
        w.push(0);
        w.push(1);
    }
    w
}

fn tile_shape(m: usize) -> Vec<u32> {
    let mut parts = vec![1];
    parts.extend(std::iter::repeat_n(2, m));
    parts
}

/// `P = sum_m (-1)^m R_(2m) (x) (1 1bar)^m`.
pub fn p_series(n_max: usize) -> GradedSeries {
    let mut s = GradedSeries::one(Basis::SignedRibbon, n_max);
    let mut m = 1usize;
    while 2 * m <= n_max {
        let sign = if m.is_multiple_of(2) { 1 } else { -1 };
        let word: Vec<u8> = (0..2 * m).map(|i| (i % 2) as u8).collect();
        let key = BasisKey::SRib(Composition::one_part(2 * m as u32), word);
        s.add_term(key, Coeff::from_int(sign));
        m += 1;
    }
    s
}

/// `Q = sum_m (-1)^m R_(2m+1) (x) 1 (1 1bar)^m`.
pub fn q_series(n_max: usize) -> GradedSeries {
    let mut s = GradedSeries::zero(Basis::SignedRibbon, n_max);
    let mut m = 0usize;
    while 2 * m < n_max {
        let sign = if m.is_multiple_of(2) { 1 } else { -1 };
        let key = BasisKey::SRib(Composition::one_part(2 * m as u32 + 1), tile_word(m));
        s.add_term(key, Coeff::from_int(sign));
        m += 1;
    }
    s
}

/// `W = sum_m R_(1, 2^m) (x) 1 (1 1bar)^m` in the signed-ribbon algebra.
pub fn w_sr_series(n_max: usize) -> GradedSeries {
    let mut s = GradedSeries::zero(Basis::SignedRibbon, n_max);
    let mut m = 0usize;
    while 2 * m < n_max {
        s.add_term(
            BasisKey::SRib(
                Composition::new(tile_shape(m)).expect("tile shape"),
                tile_word(m),
            ),
            Coeff::one(),
        );
        m += 1;
    }
    s
}

/// `(1 - W)^{-1}` expanded in the signed-ribbon basis.
pub fn one_minus_w_inverse(n_max: usize) -> Result<GradedSeries> {
    let one = GradedSeries::one(Basis::SignedRibbon, n_max);
    one.sub(&w_sr_series(n_max))?.invert()
}

/// The sign words attached to a ribbon in `(1 - W)^{-1}`: each must occur
/// with coefficient one; returned sorted.
pub fn p_polynomial(i: &Composition, n_max: usize) -> Result<Vec<Vec<u8>>> {
    let inv = one_minus_w_inverse(n_max.max(i.weight() as usize))?;
    let mut words = Vec::new();
    for comp in inv.components() {
        for (key, c) in comp.terms() {
            let BasisKey::SRib(shape, u) = key else { unreachable!() };
            if shape == i {
                if !c.is_one() {
                    return Err(Error::InvalidInput(format!(
                        "coefficient {c} on {key} is not 1"
                    )));
                }
                words.push(u.clone());
            }
        }
    }
    words.sort();
    Ok(words)
}

/// Independent oracle: enumerate the tilings of the ribbon shape by tiles
/// `(1, 2^m)`, gluing by concatenation or near-concatenation, and collect
/// their words.
pub fn tilings_oracle(i: &Composition) -> Vec<Vec<u8>> {
    fn rec(parts: &[u32], acc: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if parts.is_empty() {
            out.push(acc.clone());
            return;
        }
        if parts[0] == 1 {
            // first tile (1, 2^m) split off by concatenation
            let mut m = 0;
            while m < parts.len() && parts[1..1 + m].iter().all(|&p| p == 2) {
                let before = acc.len();
                acc.extend(tile_word(m));
                rec(&parts[1 + m..], acc, out);
                acc.truncate(before);
                m += 1;
            }
            // first tile (1, 2^m) whose last part absorbed the remainder's
            // head: parts = (1, 2^(m-1), 2 + j1, ...)
            let mut m = 1;
            while m < parts.len() && parts[1..m].iter().all(|&p| p == 2) {
                if parts[m] >= 3 {
                    let mut rest = vec![parts[m] - 2];
                    rest.extend_from_slice(&parts[m + 1..]);
                    let before = acc.len();
                    acc.extend(tile_word(m));
                    rec(&rest, acc, out);
                    acc.truncate(before);
                    break;
                }
                m += 1;
            }
        } else {
            // head >= 2: only a merged tile (1) can start the tiling
            let mut rest = parts.to_vec();
            rest[0] -= 1;
            let before = acc.len();
            acc.extend(tile_word(0));
            rec(&rest, acc, out);
            acc.truncate(before);
        }
    }
    let mut out = Vec::new();
    rec(i.parts(), &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// Push a signed-ribbon element into the signed fundamental basis:
/// `R_I (x) u` is the sum of `G_(sigma, u)` over plain permutations with
/// descent composition `I`.
pub fn sr_to_g(el: &ModuleElement) -> Result<ModuleElement> {
    if el.basis() != Basis::SignedRibbon {
        return Err(Error::BasisMismatch {
            expected: "SR".into(),
            got: el.basis().name(),
        });
    }
    let mut out = ModuleElement::zero(Basis::G(2));
    for (key, c) in el.terms() {
        let BasisKey::SRib(shape, u) = key else { unreachable!() };
        for (gk, _) in ribbon_class_g(shape).terms() {
            let BasisKey::Perm(sigma) = gk else { unreachable!() };
            let p = ColoredPermutation::new(sigma.word().to_vec(), u.clone(), 2)?;
            out.add_term(BasisKey::Perm(p), c.clone());
        }
    }
    Ok(out)
}

pub fn sr_series_to_g(s: &GradedSeries) -> Result<GradedSeries> {
    let mut out = GradedSeries::zero(Basis::G(2), s.n_max());
    for (d, comp) in s.components().iter().enumerate() {
        out.set_component(d, sr_to_g(comp)?)?;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{series, CatalogTag};

    #[test]
    fn signed_ribbon_product_rule() {
        // shapes multiply by the ribbon rule, sign words concatenate
        let a = sr_term(&[1], &[1]);
        let b = sr_term(&[2], &[0, 0]);
        let prod = a.mul(&b).unwrap();
        let expect = sr_term(&[1, 2], &[1, 0, 0])
            .add(&sr_term(&[3], &[1, 0, 0]))
            .unwrap();
        assert_eq!(prod, expect);
    }

    #[test]
    fn p_12_has_two_tilings() {
        let i = Composition::new(vec![1, 2]).unwrap();
        let words = p_polynomial(&i, 3).unwrap();
        assert_eq!(words, vec![vec![0, 0, 0], vec![0, 0, 1]]);
        assert_eq!(tilings_oracle(&i), words);
    }

    #[test]
    fn p_1_is_single_tile() {
        let i = Composition::one_part(1);
        assert_eq!(p_polynomial(&i, 2).unwrap(), vec![vec![0]]);
    }

    #[test]
    fn tilings_match_inversion() {
        for n in 1..=6u32 {
            for i in Composition::all(n) {
                let alg = p_polynomial(&i, n as usize).unwrap();
                let oracle = tilings_oracle(&i);
                assert_eq!(alg, oracle, "shape {i}");
            }
        }
    }

    #[test]
    fn p_inverse_is_v_and_qv_is_w() {
        let n = 6;
        let p_inv = sr_series_to_g(&p_series(n).invert().unwrap()).unwrap();
        assert_eq!(p_inv, series(CatalogTag::V, n).unwrap());
        let qv = q_series(n)
            .mul(&p_series(n).invert().unwrap())
            .unwrap();
        assert_eq!(sr_series_to_g(&qv).unwrap(), series(CatalogTag::W, n).unwrap());
    }

    #[test]
    fn inverse_pushes_to_valley_series() {
        // sum_I R_I (x) p_I maps to (1 - W)^{-1} computed downstairs
        let n = 5;
        let inv = sr_series_to_g(&one_minus_w_inverse(n).unwrap()).unwrap();
        let one = GradedSeries::one(Basis::G(2), n);
        let w = series(CatalogTag::W, n).unwrap();
        assert_eq!(inv, one.sub(&w).unwrap().invert().unwrap());
    }
}

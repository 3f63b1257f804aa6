//! The free product of two copies of the algebra of noncommutative
//! symmetric functions (signed compositions), superization at the level of
//! generators, and the type-B bases embedded into it and into the signed
//! fundamental basis.

use crate::classes::enumerate_all;
use crate::coeff::Coeff;
use crate::composition::{BComposition, Composition};
use crate::error::{Error, Result};
use crate::graded::GradedSeries;
use crate::module::{Basis, BasisKey, ModuleElement, SignedComposition};
use crate::perm::ColoredPermutation;

pub fn mr_term(parts: &[(u32, u8)]) -> ModuleElement {
    ModuleElement::term(
        Basis::MrS,
        BasisKey::SComp(SignedComposition::new(parts.to_vec()).expect("signed parts")),
        Coeff::one(),
    )
}

fn expect_mr(el: &ModuleElement) -> Result<()> {
    if el.basis() != Basis::MrS {
        return Err(Error::BasisMismatch {
            expected: "S2".into(),
            got: el.basis().name(),
        });
    }
    Ok(())
}

/// Exchange barred and unbarred generators.
pub fn bar_mr(el: &ModuleElement) -> Result<ModuleElement> {
    expect_mr(el)?;
    Ok(el.map_keys(Basis::MrS, |k| {
        let BasisKey::SComp(sc) = k else { unreachable!() };
        vec![(BasisKey::SComp(sc.bar()), Coeff::one())]
    }))
}

/// Barred elementary function: `bar Lambda_k = sum over compositions I of k
/// of (-1)^(l(I) - k) bar S^I`.
pub fn lambda_bar(k: u32) -> ModuleElement {
    let mut out = ModuleElement::zero(Basis::MrS);
    if k == 0 {
        return ModuleElement::one(Basis::MrS);
    }
    for i in Composition::all(k) {
        let sign = if (i.length() + k as usize).is_multiple_of(2) { 1 } else { -1 };
        let parts: Vec<(u32, u8)> = i.parts().iter().map(|&p| (p, 1)).collect();
        out.add_term(
            BasisKey::SComp(SignedComposition::new(parts).expect("barred parts")),
            Coeff::from_int(sign),
        );
    }
    out
}

/// The superized complete function: the degree-n part of
/// `(sum_k bar Lambda_k)(sum_m S_m)`.
pub fn superize_s(n: u32) -> ModuleElement {
    let mut out = ModuleElement::zero(Basis::MrS);
    for k in 0..=n {
        let lam = lambda_bar(k);
        let rest = n - k;
        let tail = if rest == 0 {
            ModuleElement::one(Basis::MrS)
        } else {
            mr_term(&[(rest, 0)])
        };
        out = out
            .add(&lam.mul(&tail).expect("same basis"))
            .expect("same basis");
    }
    out
}

/// Superization of a product of complete functions: `(S^I)^#` is the
/// product of the superized parts.
pub fn superize_s_composition(i: &Composition) -> ModuleElement {
    let mut acc = ModuleElement::one(Basis::MrS);
    for &p in i.parts() {
        acc = acc.mul(&superize_s(p)).expect("same basis");
    }
    acc
}

/// The type-B complete function `tilde S^I = S_(i0)(A) S^(i1...ir)(A|bar A)`
/// as an element of the free product.
pub fn tilde_s_embed(i: &BComposition) -> ModuleElement {
    let head = if i.has_leading_zero() || i.parts().is_empty() {
        ModuleElement::one(Basis::MrS)
    } else {
        mr_term(&[(i.parts()[0], 0)])
    };
    let tail_parts: &[u32] = if i.parts().is_empty() {
        &[]
    } else if i.has_leading_zero() {
        i.tail()
    } else {
        &i.parts()[1..]
    };
    let mut acc = head;
    for &p in tail_parts {
        acc = acc.mul(&superize_s(p)).expect("same basis");
    }
    acc
}

/// `tilde R_I` by triangularity over the B-descent subset lattice,
/// expanded in the free product.
pub fn tilde_r_embed(i: &BComposition) -> ModuleElement {
    let n = i.weight();
    let li = i.b_descent_set().len();
    let mut out = ModuleElement::zero(Basis::MrS);
    for j in BComposition::all(n) {
        if j.refines_descents(i) {
            let sign = if (li + j.b_descent_set().len()).is_multiple_of(2) { 1 } else { -1 };
            out = out
                .add(&tilde_s_embed(&j).scale(&Coeff::from_int(sign)))
                .expect("same basis");
        }
    }
    out
}

/// Convert between the type-B bases over the B-descent subset lattice.
pub fn tilde_basis_convert(el: &ModuleElement, target: Basis) -> Result<ModuleElement> {
    let from = el.basis();
    let ok = matches!(from, Basis::TildeS | Basis::TildeR)
        && matches!(target, Basis::TildeS | Basis::TildeR);
    if !ok {
        return Err(Error::UnsupportedConversion {
            from: from.name(),
            to: target.name(),
        });
    }
    if from == target {
        return Ok(el.clone());
    }
    Ok(el.map_keys(target, |k| {
        let BasisKey::BComp(i) = k else {
            panic!("type-B conversion expects B-composition keys")
        };
        let n = i.weight();
        let li = i.b_descent_set().len();
        BComposition::all(n)
            .into_iter()
            .filter(|j| j.refines_descents(i))
            .map(|j| {
                let coeff = match from {
                    // tilde S^I = sum over finer-descent tilde R_J
                    Basis::TildeS => Coeff::one(),
                    _ => {
                        let sign = if (li + j.b_descent_set().len()) % 2 == 0 { 1 } else { -1 };
                        Coeff::from_int(sign)
                    }
                };
                (BasisKey::BComp(j), coeff)
            })
            .collect()
    }))
}

/// Push a free-product element to the signed fundamental basis:
/// `S_(k,+) = G_(id, +^k)` and `S_(k,-) = G_(id, -^k)`.
pub fn mr_to_g(el: &ModuleElement) -> Result<ModuleElement> {
    expect_mr(el)?;
    let mut out = ModuleElement::zero(Basis::G(2));
    for (key, c) in el.terms() {
        let BasisKey::SComp(sc) = key else { unreachable!() };
        let mut acc = ModuleElement::one(Basis::G(2));
        for &(p, sign) in sc.parts() {
            let id = ColoredPermutation::new(
                (1..=p).collect(),
                vec![sign; p as usize],
                2,
            )?;
            acc = acc.mul(&ModuleElement::term(
                Basis::G(2),
                BasisKey::Perm(id),
                Coeff::one(),
            ))?;
        }
        out = out.add(&acc.scale(c))?;
    }
    Ok(out)
}

/// `tilde R_I` as the characteristic sum of a B-descent class (the direct
/// enumerative embedding).
pub fn tilde_r_class_g(i: &BComposition) -> Result<ModuleElement> {
    let n = i.weight() as usize;
    let des: Vec<usize> = i.b_descent_set().iter().map(|&d| d as usize).collect();
    let mut out = ModuleElement::zero(Basis::G(2));
    for p in enumerate_all(n, 2, Some(u128::MAX))? {
        if p.b_descents() == des {
            out.add_term(BasisKey::Perm(p), Coeff::one());
        }
    }
    Ok(out)
}

/// `R_I^# = sum over signed permutations with plain descent composition I`.
pub fn r_sharp_class_g(i: &Composition) -> Result<ModuleElement> {
    let n = i.weight() as usize;
    let des: Vec<usize> = i.descent_set().iter().map(|&d| d as usize).collect();
    let mut out = ModuleElement::zero(Basis::G(2));
    for p in enumerate_all(n, 2, Some(u128::MAX))? {
        if p.descents(crate::perm::LetterOrder::BlockReversed) == des {
            out.add_term(BasisKey::Perm(p), Coeff::one());
        }
    }
    Ok(out)
}

/// `sigma_1` and its barred copy as graded series in the free product.
pub fn sigma_series(n_max: usize, barred: bool) -> GradedSeries {
    let mut s = GradedSeries::one(Basis::MrS, n_max);
    for n in 1..=n_max as u32 {
        let el = mr_term(&[(n, u8::from(barred))]);
        for (k, c) in el.terms() {
            s.add_term(k.clone(), c.clone());
        }
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fqsym2::superize_g;

    #[test]
    fn superize_s_printed_expansions() {
        // S_1^# = S^1 + S^(1bar)
        let s1 = superize_s(1);
        let expect = mr_term(&[(1, 0)]).add(&mr_term(&[(1, 1)])).unwrap();
        assert_eq!(s1, expect);
        // S_2^# = S^2 + S^(1bar 1) - S^(2bar) + S^(1bar 1bar)
        let s2 = superize_s(2);
        let expect = mr_term(&[(2, 0)])
            .add(&mr_term(&[(1, 1), (1, 0)]))
            .unwrap()
            .sub(&mr_term(&[(2, 1)]))
            .unwrap()
            .add(&mr_term(&[(1, 1), (1, 1)]))
            .unwrap();
        assert_eq!(s2, expect);
        // S_3^# printed eight-term expansion
        let s3 = superize_s(3);
        let mut expect = mr_term(&[(3, 0)]);
        for (parts, sign) in [
            (vec![(1, 1), (2, 0)], 1),
            (vec![(1, 1), (1, 1), (1, 0)], 1),
            (vec![(2, 1), (1, 0)], -1),
            (vec![(1, 1), (1, 1), (1, 1)], 1),
            (vec![(2, 1), (1, 1)], -1),
            (vec![(1, 1), (2, 1)], -1),
            (vec![(3, 1)], 1),
        ] {
            let parts: Vec<(u32, u8)> = parts.iter().map(|&(p, s)| (p as u32, s as u8)).collect();
            expect = expect
                .add(&mr_term(&parts).scale(&Coeff::from_int(sign)))
                .unwrap();
        }
        assert_eq!(s3, expect);
    }

    #[test]
    fn lambda_bar_inverts_bar_sigma_minus() {
        // bar lambda_1 = (bar sigma_(-1))^(-1)
        let n = 5;
        let mut sigma_minus = GradedSeries::one(Basis::MrS, n);
        for k in 1..=n as u32 {
            let sign = if k % 2 == 0 { 1 } else { -1 };
            let el = mr_term(&[(k, 1)]).scale(&Coeff::from_int(sign));
            for (key, c) in el.terms() {
                sigma_minus.add_term(key.clone(), c.clone());
            }
        }
        let mut lambda = GradedSeries::one(Basis::MrS, n);
        for k in 1..=n as u32 {
            for (key, c) in lambda_bar(k).terms() {
                lambda.add_term(key.clone(), c.clone());
            }
        }
        assert_eq!(sigma_minus.invert().unwrap(), lambda);
    }

    #[test]
    fn superize_levels_agree() {
        // the free-product superization pushed to the fundamental basis is
        // the superization of the identity there
        for n in 0..=5u32 {
            let lhs = mr_to_g(&superize_s(n)).unwrap();
            let id = ColoredPermutation::identity(n as usize, 1);
            let rhs = superize_g(&id).unwrap();
            assert_eq!(lhs, rhs, "n = {n}");
        }
    }

    #[test]
    fn tilde_embeddings() {
        // tilde S^(0,1) = S_1^#
        let i = BComposition::new(vec![0, 1]).unwrap();
        assert_eq!(tilde_s_embed(&i), superize_s(1));
        // tilde S^(n) = S_n
        let i = BComposition::new(vec![3]).unwrap();
        assert_eq!(tilde_s_embed(&i), mr_term(&[(3, 0)]));
        // tilde R_(0,1) = G_(1bar); tilde R_(1) = G_1
        let r01 = mr_to_g(&tilde_r_embed(&BComposition::new(vec![0, 1]).unwrap())).unwrap();
        assert_eq!(r01, crate::fqsym2::g_signed(&[-1]));
        let r1 = mr_to_g(&tilde_r_embed(&BComposition::new(vec![1]).unwrap())).unwrap();
        assert_eq!(r1, crate::fqsym2::g_signed(&[1]));
    }

    #[test]
    fn tilde_r_classes_partition() {
        // algebraic tilde R agrees with the descent-class sums, and the
        // classes partition the hyperoctahedral group
        for n in 0..=4u32 {
            let mut total = ModuleElement::zero(Basis::G(2));
            for i in BComposition::all(n) {
                let alg = mr_to_g(&tilde_r_embed(&i)).unwrap();
                let class = tilde_r_class_g(&i).unwrap();
                assert_eq!(alg, class, "tilde R {i}");
                total = total.add(&class).unwrap();
            }
            let everyone = enumerate_all(n as usize, 2, None).unwrap();
            assert_eq!(total.len(), everyone.len());
            assert!(total.is_multiplicity_free());
        }
    }

    #[test]
    fn ridiese_relation() {
        // R_I^# = tilde R_(0 I) + tilde R_I
        for n in 1..=5u32 {
            for i in Composition::all(n) {
                let mut zero_i = vec![0u32];
                zero_i.extend_from_slice(i.parts());
                let lhs = r_sharp_class_g(&i).unwrap();
                let rhs = tilde_r_class_g(&BComposition::new(zero_i).unwrap())
                    .unwrap()
                    .add(&tilde_r_class_g(&BComposition::new(i.parts().to_vec()).unwrap()).unwrap())
                    .unwrap();
                assert_eq!(lhs, rhs, "composition {i}");
            }
        }
    }

    #[test]
    fn tilde_s_0n_expansion() {
        // tilde S^(0,n) = tilde R_(0,n) + tilde R_(n)
        let i = BComposition::new(vec![0, 4]).unwrap();
        let el = ModuleElement::term(Basis::TildeS, BasisKey::BComp(i.clone()), Coeff::one());
        let in_r = tilde_basis_convert(&el, Basis::TildeR).unwrap();
        let mut expect = ModuleElement::zero(Basis::TildeR);
        expect.add_term(BasisKey::BComp(i), Coeff::one());
        expect.add_term(BasisKey::BComp(BComposition::new(vec![4]).unwrap()), Coeff::one());
        assert_eq!(in_r, expect);
        // round trip
        let back = tilde_basis_convert(&in_r, Basis::TildeS).unwrap();
        assert_eq!(back, el);
    }

    #[test]
    fn bar_exchanges_the_two_copies() {
        // involutive algebra automorphism compatible with the sign flip
        // downstairs
        for n in 0..=4u32 {
            let x = superize_s(n);
            assert_eq!(bar_mr(&bar_mr(&x).unwrap()).unwrap(), x);
            let lhs = mr_to_g(&bar_mr(&x).unwrap()).unwrap();
            let rhs = crate::fqsym2::bar_involution(&mr_to_g(&x).unwrap()).unwrap();
            assert_eq!(lhs, rhs, "n = {n}");
        }
        let a = mr_term(&[(2, 0), (1, 1)]);
        let b = mr_term(&[(3, 1)]);
        let lhs = bar_mr(&a.mul(&b).unwrap()).unwrap();
        let rhs = bar_mr(&a).unwrap().mul(&bar_mr(&b).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn alphabet_difference_in_free_product() {
        // sigma_1(A - bar A) = sigma_1(bar A)^(-1) sigma_1(A), checked by
        // multiplying back
        let n = 5;
        let sigma = sigma_series(n, false);
        let sigma_bar = sigma_series(n, true);
        let diff = sigma_bar.invert().unwrap().mul(&sigma).unwrap();
        assert_eq!(sigma_bar.mul(&diff).unwrap(), sigma);
    }
}

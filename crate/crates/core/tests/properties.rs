//! Property tests over randomly generated elements: standardization,
//! graded arithmetic, the grafting/derivation adjunction and the
//! specialization homomorphism.

use proptest::prelude::*;

use fqsym::classes;
use fqsym::coeff::Coeff;
use fqsym::egf::{egf_map, EgfWeights};
use fqsym::fqsym::{bilinear_b, g_term, partial_derivation};
use fqsym::fqsym2::{d_series, specialize_bar_t_series};
use fqsym::module::{convolve, BasisKey, ModuleElement};
use fqsym::perm::{signed_standardize, standardize, ColoredPermutation};
use fqsym::{Basis, GradedSeries};

fn arb_word(max_len: usize, alphabet: u8) -> impl Strategy<Value = Vec<u8>> {
    prop::collection::vec(0..alphabet, 0..=max_len)
}

fn arb_perm(max_len: usize) -> impl Strategy<Value = ColoredPermutation> {
    (0..=max_len)
        .prop_flat_map(|n| {
            let stra = Just((1..=n as u32).collect::<Vec<u32>>()).prop_shuffle();
            stra.prop_map(move |word| ColoredPermutation::plain(word).unwrap())
        })
        .boxed()
}

fn arb_signed_perm(max_len: usize) -> impl Strategy<Value = ColoredPermutation> {
    (0..=max_len)
        .prop_flat_map(|n| {
            let word = Just((1..=n as u32).collect::<Vec<u32>>()).prop_shuffle();
            let colors = prop::collection::vec(0u8..2, n..=n);
            (word, colors)
                .prop_map(|(w, c)| ColoredPermutation::new(w, c, 2).unwrap())
        })
        .boxed()
}

fn arb_g2_element() -> impl Strategy<Value = ModuleElement> {
    prop::collection::vec((arb_signed_perm(3), -3i64..=3), 0..4).prop_map(|terms| {
        let mut el = ModuleElement::zero(Basis::G(2));
        for (p, c) in terms {
            el.add_term(BasisKey::Perm(p), Coeff::from_int(c));
        }
        el
    })
}

proptest! {
    #[test]
    fn standardization_is_a_permutation_and_idempotent(word in arb_word(9, 3)) {
        let p = standardize(&word);
        prop_assert_eq!(p.len(), word.len());
        prop_assert_eq!(&standardize(p.word()), &p);
        // equal letters are numbered from the left
        for i in 0..word.len() {
            for j in i + 1..word.len() {
                if word[i] == word[j] {
                    prop_assert!(p.word()[i] < p.word()[j]);
                }
            }
        }
    }

    #[test]
    fn signed_standardization_keeps_colors(pairs in prop::collection::vec((1u32..6, 0u8..2), 0..7)) {
        let q = signed_standardize(&pairs, 2).unwrap();
        let colors: Vec<u8> = pairs.iter().map(|&(_, c)| c).collect();
        prop_assert_eq!(q.colors(), colors.as_slice());
    }

    #[test]
    fn convolution_size_is_binomial(a in arb_perm(4), b in arb_perm(4)) {
        let supp = convolve(&a, &b).unwrap();
        let n = a.len() + b.len();
        let expect = fqsym::egf::binomial(n, a.len());
        prop_assert_eq!(num_bigint::BigInt::from(supp.len()), expect);
        // all results are distinct
        let mut sorted = supp.clone();
        sorted.sort();
        sorted.dedup();
        prop_assert_eq!(sorted.len(), supp.len());
    }

    #[test]
    fn grafting_is_a_section_of_the_derivation(a in arb_perm(3), b in arb_perm(3)) {
        let ga = g_term(a);
        let gb = g_term(b);
        let lhs = partial_derivation(&bilinear_b(&ga, &gb).unwrap()).unwrap();
        prop_assert_eq!(lhs, ga.mul(&gb).unwrap());
    }

    #[test]
    fn product_is_associative_and_unital(a in arb_g2_element(), b in arb_g2_element(), c in arb_g2_element()) {
        let one = ModuleElement::one(Basis::G(2));
        prop_assert_eq!(a.mul(&one).unwrap(), a.clone());
        prop_assert_eq!(one.mul(&a).unwrap(), a.clone());
        let l = a.mul(&b).unwrap().mul(&c).unwrap();
        let r = a.mul(&b.mul(&c).unwrap()).unwrap();
        prop_assert_eq!(l, r);
    }

    #[test]
    fn inversion_round_trips(noise in arb_g2_element()) {
        let mut x = GradedSeries::one(Basis::G(2), 5);
        for (k, c) in noise.terms() {
            if k.degree() > 0 {
                x.add_term(k.clone(), c.clone());
            }
        }
        let y = x.invert().unwrap();
        let one = GradedSeries::one(Basis::G(2), 5);
        prop_assert_eq!(x.mul(&y).unwrap(), one.clone());
        prop_assert_eq!(y.mul(&x).unwrap(), one);
        prop_assert_eq!(y.invert().unwrap(), x);
    }

    #[test]
    fn specialization_is_an_algebra_map(a in arb_g2_element(), b in arb_g2_element()) {
        let sa = GradedSeries::from_element(&a, 6);
        let sb = GradedSeries::from_element(&b, 6);
        let lhs = specialize_bar_t_series(&sa.mul(&sb).unwrap()).unwrap();
        let rhs = specialize_bar_t_series(&sa)
            .unwrap()
            .mul(&specialize_bar_t_series(&sb).unwrap())
            .unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn egf_map_is_multiplicative(a in arb_g2_element(), b in arb_g2_element()) {
        let sa = GradedSeries::from_element(&a, 6);
        let sb = GradedSeries::from_element(&b, 6);
        let lhs = egf_map(&sa.mul(&sb).unwrap(), EgfWeights::QPerColor);
        let rhs = egf_map(&sa, EgfWeights::QPerColor).mul(&egf_map(&sb, EgfWeights::QPerColor));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn d_lowers_degree_by_one(a in arb_g2_element()) {
        let s = GradedSeries::from_element(&a, 4);
        let d = d_series(&s).unwrap();
        for (deg, comp) in d.components().iter().enumerate() {
            for (k, _) in comp.terms() {
                prop_assert_eq!(k.degree(), deg);
            }
        }
    }
}

fn arb_coeff() -> impl Strategy<Value = Coeff> {
    prop::collection::vec((0u32..4, 0u32..3, 0u32..3, -9i64..=9), 0..5).prop_map(|terms| {
        let mut c = Coeff::zero();
        for (te, q0e, q1e, k) in terms {
            let mono = &(&Coeff::t_pow(te) * &Coeff::q(0).pow(q0e)) * &Coeff::q(1).pow(q1e);
            c += &(&mono * &Coeff::from_int(k));
        }
        c
    })
}

proptest! {
    #[test]
    fn permutation_text_round_trips(p in arb_signed_perm(6)) {
        let text = p.to_string();
        prop_assert_eq!(fqsym::perm::parse_permutation(&text, 2).unwrap(), p);
    }

    #[test]
    fn coefficient_text_round_trips(c in arb_coeff()) {
        let text = c.to_string();
        prop_assert_eq!(Coeff::parse(&text).unwrap(), c);
    }
}

#[test]
fn colored_text_round_trips() {
    for n in 0..=3 {
        for p in classes::enumerate_all(n, 3, None).unwrap() {
            let text = p.to_string();
            assert_eq!(fqsym::perm::parse_permutation(&text, 3).unwrap(), p);
        }
    }
}

#[test]
fn json_key_shapes() {
    use fqsym::module::SignedComposition;
    use fqsym::Composition;
    let sr = ModuleElement::term(
        Basis::SignedRibbon,
        BasisKey::SRib(Composition::new(vec![1, 2]).unwrap(), vec![0, 0, 1]),
        Coeff::one(),
    );
    let js = serde_json::to_value(&sr).unwrap();
    assert_eq!(js["terms"][0]["key"]["ribbon"], serde_json::json!([1, 2]));
    assert_eq!(js["terms"][0]["key"]["signs"], serde_json::json!([0, 0, 1]));
    let sc = ModuleElement::term(
        Basis::MrS,
        BasisKey::SComp(SignedComposition::new(vec![(2, 1), (1, 0)]).unwrap()),
        Coeff::from_int(-1),
    );
    let js = serde_json::to_value(&sc).unwrap();
    assert_eq!(js["basis"], "S2");
    assert_eq!(js["terms"][0]["coeff"], "-1");
}

#[test]
fn enumeration_is_sorted_and_duplicate_free() {
    for n in 0..=5 {
        let all = classes::enumerate_all(n, 2, None).unwrap();
        let mut sorted = all.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(all, sorted);
        assert_eq!(all.len(), (1usize << n) * (1..=n).product::<usize>().max(1));
    }
}

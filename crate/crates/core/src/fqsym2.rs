//! Signed and colored free quasi-symmetric functions: products, the
//! internal product, superization, the quasi-derivations `d` and `delta`,
//! the two-case grafting maps, and the alphabet-block series that the
//! snake catalogs are assembled from.

use crate::coeff::Coeff;
use crate::error::{Error, Result};
use crate::graded::GradedSeries;
use crate::module::{Basis, BasisKey, ModuleElement};
use crate::perm::{ColoredPermutation, LetterOrder};

fn expect_g(el: &ModuleElement, r: u8) -> Result<()> {
    if el.basis() != Basis::G(r) {
        return Err(Error::BasisMismatch {
            expected: Basis::G(r).name(),
            got: el.basis().name(),
        });
    }
    Ok(())
}

pub fn g_signed(values: &[i64]) -> ModuleElement {
    let p = ColoredPermutation::from_signed(values).expect("signed permutation");
    ModuleElement::term(Basis::G(2), BasisKey::Perm(p), Coeff::one())
}

/// Internal product `G_(alpha,eps) * G_(beta,eta) = G_(beta o alpha, (eta alpha) . eps)`
/// (composition in the wreath product, term by term).
pub fn internal_product(x: &ModuleElement, y: &ModuleElement) -> Result<ModuleElement> {
    let Basis::G(r) = x.basis() else {
        return Err(Error::BasisMismatch {
            expected: "G(r)".into(),
            got: x.basis().name(),
        });
    };
    expect_g(y, r)?;
    let mut out = ModuleElement::zero(x.basis());
    for (ka, ca) in x.terms() {
        for (kb, cb) in y.terms() {
            let (BasisKey::Perm(a), BasisKey::Perm(b)) = (ka, kb) else {
                unreachable!()
            };
            if a.len() != b.len() {
                return Err(Error::DegreeMismatch(
                    "internal product needs equal degrees".into(),
                ));
            }
            let n = a.len();
            let mut word = Vec::with_capacity(n);
            let mut colors = Vec::with_capacity(n);
            for i in 0..n {
                let ai = a.word()[i] as usize - 1;
                word.push(b.word()[ai]);
                // colors add modulo r (signs multiply for r = 2)
                colors.push((b.colors()[ai] + a.colors()[i]) % r);
            }
            let p = ColoredPermutation::new(word, colors, r)?;
            out.add_term(BasisKey::Perm(p), ca * cb);
        }
    }
    Ok(out)
}

/// Expansion of the superized fundamental basis element: all signed
/// permutations whose signed standardization class is `sigma`; there are
/// exactly `2^n` of them, one per subset of barred values. The letters in
/// increasing signed order are the barred values descending followed by
/// the plain values ascending, and position `j` receives the letter of
/// rank `sigma_j`.
pub fn superize_g(sigma: &ColoredPermutation) -> Result<ModuleElement> {
    if sigma.r() != 1 {
        return Err(Error::ArityMismatch {
            expected: 1,
            got: sigma.r(),
        });
    }
    let n = sigma.len();
    let mut out = ModuleElement::zero(Basis::G(2));
    for mask in 0u64..(1 << n) {
        let mut letters: Vec<(u32, u8)> = Vec::with_capacity(n);
        for v in (1..=n as u32).rev() {
            if mask >> (v - 1) & 1 == 1 {
                letters.push((v, 1));
            }
        }
        for v in 1..=n as u32 {
            if mask >> (v - 1) & 1 == 0 {
                letters.push((v, 0));
            }
        }
        let mut word = Vec::with_capacity(n);
        let mut colors = Vec::with_capacity(n);
        for j in 0..n {
            let (v, c) = letters[sigma.word()[j] as usize - 1];
            word.push(v);
            colors.push(c);
        }
        let p = ColoredPermutation::new(word, colors, 2)?;
        out.add_term(BasisKey::Perm(p), Coeff::one());
    }
    Ok(out)
}

/// The sign-flip involution of the level-2 algebra: `G_(sigma,eps) ->
/// G_(sigma,-eps)`.
pub fn bar_involution(el: &ModuleElement) -> Result<ModuleElement> {
    expect_g(el, 2)?;
    Ok(el.map_keys(Basis::G(2), |k| {
        let BasisKey::Perm(p) = k else { unreachable!() };
        vec![(BasisKey::Perm(p.negate_all()), Coeff::one())]
    }))
}

pub fn bar_series(s: &GradedSeries) -> Result<GradedSeries> {
    let mut out = GradedSeries::zero(Basis::G(2), s.n_max());
    for (d, comp) in s.components().iter().enumerate() {
        out.set_component(d, bar_involution(comp)?)?;
    }
    Ok(out)
}

/// Flip the sign of the letter at 1-based position `i`; words shorter than
/// `i` pass through unchanged.
pub fn eps_operator(el: &ModuleElement, i: usize) -> Result<ModuleElement> {
    expect_g(el, 2)?;
    Ok(el.map_keys(Basis::G(2), |k| {
        let BasisKey::Perm(p) = k else { unreachable!() };
        if p.len() < i {
            vec![(k.clone(), Coeff::one())]
        } else {
            vec![(
                BasisKey::Perm(p.negate_positions(i - 1..i)),
                Coeff::one(),
            )]
        }
    }))
}

/// `d`: erase the maximal letter; when it was barred, bar the suffix.
pub fn d_operator(el: &ModuleElement) -> Result<ModuleElement> {
    expect_g(el, 2)?;
    Ok(el.map_keys(Basis::G(2), |k| {
        let BasisKey::Perm(p) = k else { unreachable!() };
        if p.is_empty() {
            return vec![];
        }
        let n = p.len() as u32;
        let pos = p.word().iter().position(|&v| v == n).expect("max letter");
        let barred = p.colors()[pos] != 0;
        let mut word = p.word().to_vec();
        let mut colors = p.colors().to_vec();
        word.remove(pos);
        colors.remove(pos);
        if barred {
            for c in &mut colors[pos..] {
                *c = 1 - *c;
            }
        }
        let q = ColoredPermutation::new(word, colors, 2).expect("still signed");
        vec![(BasisKey::Perm(q), Coeff::one())]
    }))
}

/// `delta`: erase the maximal letter; bar the prefix when it was plain,
/// the suffix when it was barred.
pub fn delta_operator(el: &ModuleElement) -> Result<ModuleElement> {
    expect_g(el, 2)?;
    Ok(el.map_keys(Basis::G(2), |k| {
        let BasisKey::Perm(p) = k else { unreachable!() };
        if p.is_empty() {
            return vec![];
        }
        let n = p.len() as u32;
        let pos = p.word().iter().position(|&v| v == n).expect("max letter");
        let barred = p.colors()[pos] != 0;
        let mut word = p.word().to_vec();
        let mut colors = p.colors().to_vec();
        word.remove(pos);
        colors.remove(pos);
        if barred {
            for c in &mut colors[pos..] {
                *c = 1 - *c;
            }
        } else {
            for c in &mut colors[..pos] {
                *c = 1 - *c;
            }
        }
        let q = ColoredPermutation::new(word, colors, 2).expect("still signed");
        vec![(BasisKey::Perm(q), Coeff::one())]
    }))
}

pub fn d_series(s: &GradedSeries) -> Result<GradedSeries> {
    apply_degree_lowering(s, d_operator)
}

pub fn delta_series(s: &GradedSeries) -> Result<GradedSeries> {
    apply_degree_lowering(s, delta_operator)
}

fn apply_degree_lowering(
    s: &GradedSeries,
    op: impl Fn(&ModuleElement) -> Result<ModuleElement>,
) -> Result<GradedSeries> {
    let mut out = GradedSeries::zero(s.basis(), s.n_max());
    for comp in s.components() {
        for (k, c) in op(comp)?.terms() {
            out.add_term(k.clone(), c.clone());
        }
    }
    Ok(out)
}

use crate::module::value_splits;

/// Two-case grafting map of the signed theory. When the left degree is odd
/// the new maximum is inserted plainly; when it is even, the maximum comes
/// in barred and the suffix is barred. Satisfies `d(B(x,y)) = x*y`.
pub fn bilinear_b2(x: &ModuleElement, y: &ModuleElement) -> Result<ModuleElement> {
    grafting(x, y, false)
}

/// The mirrored dispatch: even left degree inserts plainly, odd left degree
/// inserts the barred maximum. Satisfies `delta(Bhat(x,y)) = x*y` on the
/// relevant series and is the grafting map of the down-up snake family.
pub fn bilinear_b2_hat(x: &ModuleElement, y: &ModuleElement) -> Result<ModuleElement> {
    grafting(x, y, true)
}

fn grafting(x: &ModuleElement, y: &ModuleElement, swap_parity: bool) -> Result<ModuleElement> {
    expect_g(x, 2)?;
    expect_g(y, 2)?;
    let mut out = ModuleElement::zero(Basis::G(2));
    for (ka, ca) in x.terms() {
        for (kb, cb) in y.terms() {
            let (BasisKey::Perm(a), BasisKey::Perm(b)) = (ka, kb) else {
                unreachable!()
            };
            let k = a.len();
            let n = k + b.len();
            let c = ca * cb;
            let plain_insert = (k % 2 == 1) != swap_parity;
            for (s, t) in value_splits(n, k) {
                let mut word = Vec::with_capacity(n + 1);
                let mut colors = Vec::with_capacity(n + 1);
                for i in 0..k {
                    word.push(s[a.word()[i] as usize - 1]);
                    colors.push(a.colors()[i]);
                }
                word.push(n as u32 + 1);
                colors.push(u8::from(!plain_insert));
                for j in 0..b.len() {
                    word.push(t[b.word()[j] as usize - 1]);
                    let cb_color = b.colors()[j];
                    colors.push(if plain_insert { cb_color } else { 1 - cb_color });
                }
                let gamma = ColoredPermutation::new(word, colors, 2).expect("grafted");
                out.add_term(BasisKey::Perm(gamma), c.clone());
            }
        }
    }
    Ok(out)
}

/// Specialization sending the barred alphabet to `t` times the plain one.
/// Every barred letter of a word contributes a factor `t` and loses its
/// bar, so `G_(sigma,eps)` maps to `t^(m(eps))` times the fundamental
/// element of the underlying word: `G_(sigma,eps) -> t^(m(eps)) G_(std(sigma))`.
pub fn specialize_bar_t(el: &ModuleElement) -> Result<ModuleElement> {
    expect_g(el, 2)?;
    Ok(el.map_keys(Basis::G(1), |k| {
        let BasisKey::Perm(p) = k else { unreachable!() };
        let t_pow = Coeff::t_pow(p.bar_count() as u32);
        let plain = ColoredPermutation::plain(p.word().to_vec()).expect("underlying word");
        vec![(BasisKey::Perm(plain), t_pow)]
    }))
}

pub fn specialize_bar_t_series(s: &GradedSeries) -> Result<GradedSeries> {
    let mut out = GradedSeries::zero(Basis::G(1), s.n_max());
    for (d, comp) in s.components().iter().enumerate() {
        out.set_component(d, specialize_bar_t(comp)?)?;
    }
    Ok(out)
}

/// Sum of the strictly increasing colored permutations of size `n` under
/// `order`, with colors restricted to `lo..=hi`: the degree-n complete
/// function of the corresponding alphabet block union.
pub fn s_block(n: usize, r: u8, lo: u8, hi: u8, order: LetterOrder) -> ModuleElement {
    monotone_block(n, r, lo, hi, order, true)
}

/// Strictly decreasing analogue: the elementary function of the block union.
pub fn lambda_block(n: usize, r: u8, lo: u8, hi: u8, order: LetterOrder) -> ModuleElement {
    monotone_block(n, r, lo, hi, order, false)
}

pub fn monotone_block(
    n: usize,
    r: u8,
    lo: u8,
    hi: u8,
    order: LetterOrder,
    increasing: bool,
) -> ModuleElement {
    let mut out = ModuleElement::zero(Basis::G(r));
    if n == 0 {
        return ModuleElement::one(Basis::G(r));
    }
    if lo > hi {
        return out;
    }
    let width = (hi - lo + 1) as u64;
    let count = width.pow(n as u32);
    for mut code in 0..count {
        let mut letters: Vec<(u32, u8)> = Vec::with_capacity(n);
        for v in 1..=n as u32 {
            let c = lo + (code % width) as u8;
            code /= width;
            letters.push((v, c));
        }
        letters.sort_by(|&a, &b| order.cmp_letters(a, b));
        if !increasing {
            letters.reverse();
        }
        let word: Vec<u32> = letters.iter().map(|l| l.0).collect();
        let colors: Vec<u8> = letters.iter().map(|l| l.1).collect();
        let p = ColoredPermutation::new(word, colors, r).expect("monotone word");
        out.add_term(BasisKey::Perm(p), Coeff::one());
    }
    out
}

/// `S_n(B_i | bar B_i)`: the superized complete function of the split
/// alphabet, `sum_a Lambda_a(bar B_i) S_(n-a)(B_i)` with the natural
/// within-block order.
pub fn s_super_split(n: usize, r: u8, split: u8) -> Result<ModuleElement> {
    let mut out = ModuleElement::zero(Basis::G(r));
    for a in 0..=n {
        let lam = lambda_block(a, r, split + 1, r - 1, LetterOrder::BlockNatural);
        if lam.is_zero() {
            continue;
        }
        let s = s_block(n - a, r, 0, split, LetterOrder::BlockNatural);
        if s.is_zero() {
            continue;
        }
        out = out.add(&lam.mul(&s)?)?;
    }
    Ok(out)
}

/// Alternating even/odd sums of a degree-indexed family of elements.
pub fn alternating_series(
    n_max: usize,
    r: u8,
    even: bool,
    mut f: impl FnMut(usize) -> Result<ModuleElement>,
) -> Result<GradedSeries> {
    let mut out = GradedSeries::zero(Basis::G(r), n_max);
    let mut m = 0usize;
    loop {
        let n = 2 * m + usize::from(!even);
        if n > n_max {
            break;
        }
        let sign = if m.is_multiple_of(2) { 1 } else { -1 };
        let el = f(n)?.scale(&Coeff::from_int(sign));
        out.set_component(n, el)?;
        m += 1;
    }
    Ok(out)
}

/// `cos(B_i | bar B_i)` and `sin(B_i | bar B_i)` at level r.
pub fn cos_super(n_max: usize, r: u8, split: u8) -> Result<GradedSeries> {
    alternating_series(n_max, r, true, |n| s_super_split(n, r, split))
}

pub fn sin_super(n_max: usize, r: u8, split: u8) -> Result<GradedSeries> {
    alternating_series(n_max, r, false, |n| s_super_split(n, r, split))
}

/// `cos(B_i)` and `sin(B_i)` on the plain block union (no superization).
pub fn cos_block_series(n_max: usize, r: u8, hi: u8, order: LetterOrder) -> Result<GradedSeries> {
    alternating_series(n_max, r, true, |n| Ok(s_block(n, r, 0, hi, order)))
}

pub fn sin_block_series(n_max: usize, r: u8, hi: u8, order: LetterOrder) -> Result<GradedSeries> {
    alternating_series(n_max, r, false, |n| Ok(s_block(n, r, 0, hi, order)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::signed_standardize;

    fn sp(values: &[i64]) -> ColoredPermutation {
        ColoredPermutation::from_signed(values).unwrap()
    }

    #[test]
    fn product_concatenates_colors() {
        let a = g_signed(&[1]);
        let b = g_signed(&[-1]);
        let prod = a.mul(&b).unwrap();
        let expect = g_signed(&[1, -2]).add(&g_signed(&[2, -1])).unwrap();
        assert_eq!(prod, expect);
    }

    #[test]
    fn internal_product_examples() {
        let x = g_signed(&[2, 1]);
        assert_eq!(internal_product(&x, &x).unwrap(), g_signed(&[1, 2]));
        // identity with all-plus colors is a right unit
        let id = g_signed(&[1, 2]);
        let y = g_signed(&[-2, 1]);
        assert_eq!(internal_product(&y, &id).unwrap(), y);
    }

    #[test]
    fn superize_g_matches_bucketing() {
        for n in 0..=4usize {
            let mut buckets: std::collections::BTreeMap<Vec<u32>, Vec<ColoredPermutation>> =
                Default::default();
            for p in crate::classes::enumerate_all(n, 2, None).unwrap() {
                let s = p.std_as(LetterOrder::BlockReversed);
                buckets.entry(s.word().to_vec()).or_default().push(p);
            }
            for sigma in crate::classes::enumerate_all(n, 1, None).unwrap() {
                let sup = superize_g(&sigma).unwrap();
                assert_eq!(sup.len(), 1 << n, "2^n terms for {sigma}");
                let expect = buckets.remove(sigma.word()).unwrap_or_default();
                let keys: Vec<ColoredPermutation> = sup
                    .keys()
                    .map(|k| match k {
                        BasisKey::Perm(p) => p.clone(),
                        _ => unreachable!(),
                    })
                    .collect();
                assert_eq!(keys, expect);
            }
        }
    }

    #[test]
    fn g1_sharp() {
        let sigma = ColoredPermutation::plain(vec![1]).unwrap();
        let sup = superize_g(&sigma).unwrap();
        assert_eq!(sup, g_signed(&[1]).add(&g_signed(&[-1])).unwrap());
    }

    #[test]
    fn d_and_delta_examples() {
        let x = g_signed(&[1, -3, 2]);
        assert_eq!(d_operator(&x).unwrap(), g_signed(&[1, -2]));
        let y = g_signed(&[2, 1, 3]);
        assert_eq!(d_operator(&y).unwrap(), g_signed(&[2, 1]));
        assert_eq!(delta_operator(&y).unwrap(), g_signed(&[-2, -1]));
    }

    #[test]
    fn grafting_parity_cases() {
        // B(1, 1) = G_(bar 1); Bhat(1, 1) = G_1
        let one = ModuleElement::one(Basis::G(2));
        assert_eq!(bilinear_b2(&one, &one).unwrap(), g_signed(&[-1]));
        assert_eq!(bilinear_b2_hat(&one, &one).unwrap(), g_signed(&[1]));
        // B(x1, 1) with x1 = G_1 + G_(bar 1) inserts 2 plainly
        let x1 = g_signed(&[1]).add(&g_signed(&[-1])).unwrap();
        let b = bilinear_b2(&x1, &one).unwrap();
        assert_eq!(b, g_signed(&[1, 2]).add(&g_signed(&[-1, 2])).unwrap());
        // B(1, x1) bars the new maximum and the suffix
        let b = bilinear_b2(&one, &x1).unwrap();
        assert_eq!(b, g_signed(&[-2, -1]).add(&g_signed(&[-2, 1])).unwrap());
    }

    #[test]
    fn specialize_example() {
        // bars dissolve into powers of t, the underlying word stays
        let el = g_signed(&[-2, -1]);
        let image = specialize_bar_t(&el).unwrap();
        let mut expect = ModuleElement::zero(Basis::G(1));
        expect.add_term(
            BasisKey::Perm(ColoredPermutation::plain(vec![2, 1]).unwrap()),
            Coeff::t_pow(2),
        );
        assert_eq!(image, expect);
        // the ribbon column this feeds: the sum over the B-descent class of
        // [0,2] specializes to t R_2 + (t^2 + t) R_11 as in the matrices
        let class = crate::mr::tilde_r_class_g(&crate::composition::BComposition::new(vec![0, 2]).unwrap())
            .unwrap();
        let spec = specialize_bar_t(&class).unwrap();
        let mut expect = ModuleElement::zero(Basis::G(1));
        expect.add_term(
            BasisKey::Perm(ColoredPermutation::plain(vec![1, 2]).unwrap()),
            Coeff::t(),
        );
        expect.add_term(
            BasisKey::Perm(ColoredPermutation::plain(vec![2, 1]).unwrap()),
            &Coeff::t_pow(2) + &Coeff::t(),
        );
        assert_eq!(spec, expect);
    }

    #[test]
    fn s_super_split_is_signed_increasing_class() {
        // at r = 2, i = 0 the superized complete function is the class of
        // signed-order increasing words
        for n in 0..=4usize {
            let sup = s_super_split(n, 2, 0).unwrap();
            let mut expect = ModuleElement::zero(Basis::G(2));
            for p in crate::classes::enumerate_all(n, 2, None).unwrap() {
                if p.std_as(LetterOrder::BlockReversed)
                    == ColoredPermutation::identity(n, 1)
                {
                    expect.add_term(BasisKey::Perm(p), Coeff::one());
                }
            }
            assert_eq!(sup, expect, "n = {n}");
            assert_eq!(sup.len(), 1 << n);
        }
    }

    #[test]
    fn signed_standardize_and_blocks() {
        let p = signed_standardize(&[(2, 0), (3, 1), (1, 0)], 2).unwrap();
        assert_eq!(p, sp(&[2, -3, 1]));
        // Lambda_2(bar A) = G_(21, --)
        let lam = lambda_block(2, 2, 1, 1, LetterOrder::BlockNatural);
        assert_eq!(lam, g_signed(&[-2, -1]));
        // S_2(bar A) = G_(12, --)
        let s = s_block(2, 2, 1, 1, LetterOrder::BlockNatural);
        assert_eq!(s, g_signed(&[-1, -2]));
    }
}

//! Free quasi-symmetric functions over one alphabet: the fundamental basis
//! indexed by plain permutations, the derivation that erases the maximal
//! letter, the grafting bilinear map, and fixed-point solving over complete
//! binary trees.

use num_bigint::BigInt;

use crate::classes::{enumerate_all, PermClass};
use crate::coeff::Coeff;
use crate::composition::Composition;
use crate::egf::{EgfRing, EgfSeries};
use crate::error::{Error, Result};
use crate::graded::GradedSeries;
use crate::module::{Basis, BasisKey, ModuleElement};
use crate::perm::ColoredPermutation;
use crate::sym;
use crate::trees::complete_binary_trees;

pub fn g_term(p: ColoredPermutation) -> ModuleElement {
    let basis = Basis::G(p.r());
    ModuleElement::term(basis, BasisKey::Perm(p), Coeff::one())
}

pub fn g_plain(word: &[u32]) -> ModuleElement {
    g_term(ColoredPermutation::plain(word.to_vec()).expect("permutation word"))
}

fn expect_g1(el: &ModuleElement) -> Result<()> {
    if el.basis() != Basis::G(1) {
        return Err(Error::BasisMismatch {
            expected: "G".into(),
            got: el.basis().name(),
        });
    }
    Ok(())
}

/// Push a Sym element (S basis) into the fundamental basis: `S_n` is the
/// class of the identity permutation and `S^I` the product of its parts.
pub fn s_to_g(el: &ModuleElement) -> Result<ModuleElement> {
    if el.basis() != Basis::S {
        return Err(Error::BasisMismatch {
            expected: "S".into(),
            got: el.basis().name(),
        });
    }
    let mut out = ModuleElement::zero(Basis::G(1));
    for (key, c) in el.terms() {
        let BasisKey::Comp(i) = key else { unreachable!() };
        let mut acc = ModuleElement::one(Basis::G(1));
        for &p in i.parts() {
            let id = g_term(ColoredPermutation::identity(p as usize, 1));
            acc = acc.mul(&id)?;
        }
        out = out.add(&acc.scale(c))?;
    }
    Ok(out)
}

pub fn s_series_to_g(series: &GradedSeries) -> Result<GradedSeries> {
    let mut out = GradedSeries::zero(Basis::G(1), series.n_max());
    for (d, comp) in series.components().iter().enumerate() {
        out.set_component(d, s_to_g(comp)?)?;
    }
    Ok(out)
}

/// The ribbon `R_I` as the sum of all `G_sigma` with descent composition
/// exactly `I`, by direct enumeration. Used as an independent route to the
/// algebraic expansion.
pub fn ribbon_class_g(i: &Composition) -> ModuleElement {
    let n = i.weight() as usize;
    let des = i.descent_set();
    let mut out = ModuleElement::zero(Basis::G(1));
    for p in enumerate_all(n, 1, Some(u128::MAX)).expect("budget disabled") {
        let d: Vec<u32> = p
            .descents(crate::perm::LetterOrder::BlockNatural)
            .into_iter()
            .map(|x| x as u32)
            .collect();
        if d == des {
            out.add_term(BasisKey::Perm(p), Coeff::one());
        }
    }
    out
}

/// Linear extension of `G_sigma -> G_sigma'` where `sigma'` erases the
/// maximal letter of `sigma`. Restricted to Sym it sends `S_n` to `S_(n-1)`.
pub fn partial_derivation(el: &ModuleElement) -> Result<ModuleElement> {
    expect_g1(el)?;
    let mut out = ModuleElement::zero(Basis::G(1));
    for (key, c) in el.terms() {
        let BasisKey::Perm(p) = key else { unreachable!() };
        if p.is_empty() {
            continue;
        }
        let n = p.len() as u32;
        let word: Vec<u32> = p.word().iter().copied().filter(|&v| v != n).collect();
        let q = ColoredPermutation::plain(word).expect("still a permutation");
        out.add_term(BasisKey::Perm(q), c.clone());
    }
    Ok(out)
}

pub fn partial_derivation_series(series: &GradedSeries) -> Result<GradedSeries> {
    let mut out = GradedSeries::zero(Basis::G(1), series.n_max());
    for comp in series.components() {
        let d = partial_derivation(comp)?;
        for (k, c) in d.terms() {
            out.add_term(k.clone(), c.clone());
        }
    }
    Ok(out)
}

use crate::module::value_splits;

/// Grafting map: `B(G_alpha, G_beta)` sums `G_(u (n+1) v)` over all words
/// with `std(u) = alpha` and `std(v) = beta`. It satisfies
/// `partial_derivation(B(x, y)) = x * y` and raises the degree by one.
pub fn bilinear_b(x: &ModuleElement, y: &ModuleElement) -> Result<ModuleElement> {
    expect_g1(x)?;
    expect_g1(y)?;
    let mut out = ModuleElement::zero(Basis::G(1));
    for (ka, ca) in x.terms() {

        for (kb, cb) in y.terms() {
            let (BasisKey::Perm(a), BasisKey::Perm(b)) = (ka, kb) else {
                unreachable!()
            };
            let k = a.len();
            let n = k + b.len();
            let c = ca * cb;
            for (s, t) in value_splits(n, k) {
                let mut word = Vec::with_capacity(n + 1);
                for i in 0..k {
                    word.push(s[a.word()[i] as usize - 1]);
                }
                word.push(n as u32 + 1);
                for j in 0..b.len() {
                    word.push(t[b.word()[j] as usize - 1]);
                }
                let gamma = ColoredPermutation::plain(word).expect("grafted word");
                out.add_term(BasisKey::Perm(gamma), c.clone());
            }
        }
    }
    Ok(out)
}

/// A bilinear, strictly degree-increasing map lifted degreewise to series.
pub type BilinearOp<'a> = &'a dyn Fn(&ModuleElement, &ModuleElement) -> Result<ModuleElement>;

pub fn lift_bilinear(
    op: BilinearOp,
    x: &GradedSeries,
    y: &GradedSeries,
) -> Result<GradedSeries> {
    let n_max = x.n_max();
    let mut out = GradedSeries::zero(x.basis(), n_max);
    for a in 0..n_max {
        if x.component(a).is_zero() {
            continue;
        }
        for b in 0..n_max - a {
            if y.component(b).is_zero() {
                continue;
            }
            let t = op(x.component(a), y.component(b))?;
            for (k, c) in t.terms() {
                out.add_term(k.clone(), c.clone());
            }
        }
    }
    Ok(out)
}

/// Unique solution of `x = a + B(x, x)` truncated at the series order,
/// found by iterated substitution; the strict degree increase of `B`
/// guarantees stabilization.
pub fn solve_quadratic(a: &GradedSeries, op: BilinearOp) -> Result<GradedSeries> {
    let mut x = a.clone();
    for _ in 0..=a.n_max() + 1 {
        let next = a.add(&lift_bilinear(op, &x, &x)?)?;
        if next == x {
            return Ok(x);
        }
        x = next;
    }
    Err(Error::InvalidInput(
        "fixed-point iteration did not stabilize; is B degree-increasing?".into(),
    ))
}

/// Unique solution of `y = a + B(y, x)` with `x` known.
pub fn solve_linear_left(a: &GradedSeries, op: BilinearOp, x: &GradedSeries) -> Result<GradedSeries> {
    let mut y = a.clone();
    for _ in 0..=a.n_max() + 1 {
        let next = a.add(&lift_bilinear(op, &y, x)?)?;
        if next == y {
            return Ok(y);
        }
        y = next;
    }
    Err(Error::InvalidInput("fixed-point iteration did not stabilize".into()))
}

/// Unique solution of `y = a + B(x, y)` with `x` known.
pub fn solve_linear_right(a: &GradedSeries, op: BilinearOp, x: &GradedSeries) -> Result<GradedSeries> {
    let mut y = a.clone();
    for _ in 0..=a.n_max() + 1 {
        let next = a.add(&lift_bilinear(op, x, &y)?)?;
        if next == y {
            return Ok(y);
        }
        y = next;
    }
    Err(Error::InvalidInput("fixed-point iteration did not stabilize".into()))
}

/// The tree expansion `sum_T B_T(a)` over complete binary trees, evaluated
/// directly; must agree with the iterative solution of `x = a + B(x, x)`.
pub fn cbt_sum(a: &GradedSeries, op: BilinearOp) -> Result<GradedSeries> {
    let n_max = a.n_max();
    let mut total = GradedSeries::zero(a.basis(), n_max);
    // B_T has valuation at least the number of internal nodes
    for k in 0..=n_max {
        for tree in complete_binary_trees(k) {
            let value = tree.evaluate(a, &|l: &GradedSeries, r: &GradedSeries| {
                lift_bilinear(op, l, r).expect("bilinear lift")
            });
            total = total.add(&value)?;
        }
    }
    Ok(total)
}

/// `sec + tan` expanded in the fundamental basis, through the inverse of
/// the noncommutative cosine.
pub fn sec_tan_g(n_max: usize) -> Result<GradedSeries> {
    let cos = s_series_to_g(&sym::cos_series(n_max))?;
    let sin = s_series_to_g(&sym::sin_series(n_max))?;
    let sec = cos.invert()?;
    let one = GradedSeries::one(Basis::G(1), n_max);
    sec.mul(&one.add(&sin)?)
}

/// Characteristic series of the alternating (up-down) permutations.
pub fn alternating_char_series(n_max: usize) -> Result<GradedSeries> {
    let mut out = GradedSeries::zero(Basis::G(1), n_max);
    for n in 0..=n_max {
        for p in crate::classes::enumerate_class(n, PermClass::AltA, Some(u128::MAX))? {
            out.add_term(BasisKey::Perm(p), Coeff::one());
        }
    }
    Ok(out)
}

impl EgfRing for GradedSeries {
    fn add(&self, rhs: &Self) -> Self {
        GradedSeries::add(self, rhs).expect("egf coefficient mismatch")
    }
    fn sub(&self, rhs: &Self) -> Self {
        GradedSeries::sub(self, rhs).expect("egf coefficient mismatch")
    }
    fn mul(&self, rhs: &Self) -> Self {
        GradedSeries::mul(self, rhs).expect("egf coefficient mismatch")
    }
    fn scale_big(&self, k: &BigInt) -> Self {
        let mut out = self.clone();
        for d in 0..=self.n_max() {
            out.set_component(d, self.component(d).scale_int(k)).expect("same degree");
        }
        out
    }
    fn is_zero(&self) -> bool {
        self.components().iter().all(|c| c.is_zero())
    }
    fn try_inverse_unit(&self) -> Option<Self> {
        let one = GradedSeries::one(self.basis(), self.n_max());
        if *self == one {
            return Some(one);
        }
        if *self == one.neg() {
            return Some(one.neg());
        }
        None
    }
}

/// `X = tan` and `Y = sec` in the S basis, to the given order.
pub fn tan_s(n_max: usize) -> GradedSeries {
    let sec = sym::cos_series(n_max).invert().expect("unit constant");
    sec.mul(&sym::sin_series(n_max)).expect("same basis")
}

pub fn sec_s(n_max: usize) -> GradedSeries {
    sym::cos_series(n_max).invert().expect("unit constant")
}

/// A series in `t` whose coefficients are truncated Sym elements.
pub type SymTSeries = EgfSeries<GradedSeries>;

/// The alphabet shift `A -> A + tE`, realized as `e^{t d}`: coefficient
/// `n` of the output is the n-th derivative of the input.
pub fn shifted_series(s: &GradedSeries, t_max: usize) -> Result<SymTSeries> {
    let mut coeffs = Vec::with_capacity(t_max + 1);
    let mut cur = s.clone();
    for _ in 0..=t_max {
        coeffs.push(cur.clone());
        cur = sym::derive_series(&cur)?;
    }
    Ok(EgfSeries::from_coeffs(coeffs))
}

/// The derivative-polynomial generating series in `t` with coefficients in
/// Sym truncated at `alg_max`: on the left `sum_n (d^n X) t^n / n!`, on the
/// right `(cos t - X sin t)^{-1} (sin t + X cos t)`; and likewise
/// `(e^{t d} Y) Y^{-1} = (cos t - X sin t)^{-1}`.
pub fn derivative_polynomial_sides(
    t_max: usize,
    alg_max: usize,
) -> Result<(SymTSeries, SymTSeries, SymTSeries, SymTSeries)> {
    let deep = alg_max + t_max;
    let x = tan_s(deep).truncate(alg_max);
    let truncate = |s: SymTSeries| {
        EgfSeries::from_coeffs(s.coeffs().iter().map(|c| c.truncate(alg_max)).collect())
    };
    let lhs_x = truncate(shifted_series(&tan_s(deep), t_max)?);
    let e_td_y = truncate(shifted_series(&sec_s(deep), t_max)?);

    let one = GradedSeries::one(Basis::S, alg_max);
    let zero = GradedSeries::zero(Basis::S, alg_max);
    let mut cos_t = Vec::new();
    let mut x_sin_t = Vec::new();
    let mut sin_t = Vec::new();
    let mut x_cos_t = Vec::new();
    for n in 0..=t_max {
        if n % 2 == 0 {
            let sign = if n / 2 % 2 == 0 { 1 } else { -1 };
            cos_t.push(one.scale(&Coeff::from_int(sign)));
            x_cos_t.push(x.scale(&Coeff::from_int(sign)));
            x_sin_t.push(zero.clone());
            sin_t.push(zero.clone());
        } else {
            let sign = if (n - 1) / 2 % 2 == 0 { 1 } else { -1 };
            sin_t.push(one.scale(&Coeff::from_int(sign)));
            x_sin_t.push(x.scale(&Coeff::from_int(sign)));
            cos_t.push(zero.clone());
            x_cos_t.push(zero.clone());
        }
    }
    let denom = EgfSeries::from_coeffs(cos_t).sub(&EgfSeries::from_coeffs(x_sin_t));
    let numer = EgfSeries::from_coeffs(sin_t).add(&EgfSeries::from_coeffs(x_cos_t));
    let rhs_x = denom.invert()?.mul(&numer);

    // (e^{t d} Y) Y^{-1}: multiply each t-coefficient by cos on the right
    let cos_alg = sym::cos_series(alg_max);
    let lhs_y = EgfSeries::from_coeffs(
        e_td_y
            .coeffs()
            .iter()
            .map(|c| c.mul(&cos_alg))
            .collect::<std::result::Result<Vec<_>, _>>()?,
    );
    let rhs_y = denom.invert()?;
    Ok((lhs_x, rhs_x, lhs_y, rhs_y))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classes::enumerate_class;

    #[test]
    fn partial_derivation_examples() {
        let x = g_plain(&[2, 3, 1]);
        assert_eq!(partial_derivation(&x).unwrap(), g_plain(&[2, 1]));
        // restriction to Sym: d S_3 = S_2
        let s3 = s_to_g(&sym::s_term(&[3])).unwrap();
        let s2 = s_to_g(&sym::s_term(&[2])).unwrap();
        assert_eq!(partial_derivation(&s3).unwrap(), s2);
    }

    #[test]
    fn bilinear_examples() {
        let empty = ModuleElement::one(Basis::G(1));
        assert_eq!(bilinear_b(&empty, &empty).unwrap(), g_plain(&[1]));
        let g1 = g_plain(&[1]);
        let b = bilinear_b(&g1, &g1).unwrap();
        assert_eq!(b, g_plain(&[1, 3, 2]).add(&g_plain(&[2, 3, 1])).unwrap());
    }

    #[test]
    fn derivation_of_grafting_is_product() {
        // exhaustively for degrees <= 3
        for na in 0..=2usize {
            for nb in 0..=(3 - na) {
                for a in enumerate_all(na, 1, None).unwrap() {
                    for b in enumerate_all(nb, 1, None).unwrap() {
                        let ga = g_term(a.clone());
                        let gb = g_term(b.clone());
                        let lhs = partial_derivation(&bilinear_b(&ga, &gb).unwrap()).unwrap();
                        let rhs = ga.mul(&gb).unwrap();
                        assert_eq!(lhs, rhs);
                    }
                }
            }
        }
    }

    #[test]
    fn tangent_fixed_point() {
        let n = 6;
        let mut a = GradedSeries::zero(Basis::G(1), n);
        a.add_term(BasisKey::Perm(ColoredPermutation::plain(vec![1]).unwrap()), Coeff::one());
        let op: BilinearOp = &bilinear_b;
        let x = solve_quadratic(&a, op).unwrap();
        // equals tan pushed to the fundamental basis
        let tan_g = {
            let sec = s_series_to_g(&sym::cos_series(n)).unwrap().invert().unwrap();
            let sin = s_series_to_g(&sym::sin_series(n)).unwrap();
            sec.mul(&sin).unwrap()
        };
        assert_eq!(x, tan_g);
        // and the tree expansion agrees
        assert_eq!(cbt_sum(&a, op).unwrap(), x);
        // x = a + B(x, x) holds on the nose
        let back = a.add(&lift_bilinear(op, &x, &x).unwrap()).unwrap();
        assert_eq!(back, x);
    }

    #[test]
    fn sec_tan_support_is_alternating() {
        let n = 6;
        let st = sec_tan_g(n).unwrap();
        let alt = alternating_char_series(n).unwrap();
        assert_eq!(st, alt);
    }

    #[test]
    fn ribbon_class_matches_algebra() {
        for n in 1..=5u32 {
            for i in Composition::all(n) {
                let alg = s_to_g(&crate::sym::basis_convert(&crate::sym::r_term(i.parts()), Basis::S).unwrap())
                    .unwrap();
                assert_eq!(alg, ribbon_class_g(&i), "ribbon {i}");
            }
        }
    }

    #[test]
    fn level1_differential_equations() {
        let n = 7;
        let x = tan_s(n + 1);
        let y = sec_s(n + 1);
        let dx = sym::derive_series(&x).unwrap().truncate(n);
        let dy = sym::derive_series(&y).unwrap().truncate(n);
        let xt = x.truncate(n);
        let yt = y.truncate(n);
        let one = GradedSeries::one(Basis::S, n);
        assert_eq!(dx, one.add(&xt.mul(&xt).unwrap()).unwrap());
        assert_eq!(dy, xt.mul(&yt).unwrap());
    }

    #[test]
    fn eqbin_y_fixed_point() {
        // Y = 1 + B(X, Y) in the fundamental basis
        let n = 6;
        let mut a = GradedSeries::zero(Basis::G(1), n);
        a.add_term(BasisKey::Perm(ColoredPermutation::plain(vec![1]).unwrap()), Coeff::one());
        let op: BilinearOp = &bilinear_b;
        let x = solve_quadratic(&a, op).unwrap();
        let y = solve_linear_right(&GradedSeries::one(Basis::G(1), n), op, &x).unwrap();
        let sec_g = s_series_to_g(&sym::cos_series(n)).unwrap().invert().unwrap();
        assert_eq!(y, sec_g);
    }

    #[test]
    fn e_t_partial_on_generators() {
        // e^{t d} S_n = sum_k S_{n-k} t^k / k!
        let n = 5usize;
        let sn = crate::sym::s_term(&[n as u32]);
        let mut cur = GradedSeries::from_element(&sn, n);
        for k in 0..=n {
            let expect = if n == k {
                ModuleElement::one(Basis::S)
            } else {
                crate::sym::s_term(&[(n - k) as u32])
            };
            assert_eq!(cur.flatten(), expect, "k = {k}");
            cur = crate::sym::derive_series(&cur).unwrap();
        }
    }

    #[test]
    fn derivative_polynomials_match_closed_forms() {
        let (lx, rx, ly, ry) = derivative_polynomial_sides(4, 4).unwrap();
        assert_eq!(lx, rx);
        assert_eq!(ly, ry);
    }

    #[test]
    fn shifted_trig_addition_formulas() {
        // cos(A + tE) = cos(A) cos(t) - sin(A) sin(t) and
        // sin(A + tE) = sin(A) cos(t) + cos(A) sin(t)
        let (t_max, alg) = (5usize, 5usize);
        let shift_cos = shifted_series(&sym::cos_series(alg + t_max), t_max).unwrap();
        let shift_sin = shifted_series(&sym::sin_series(alg + t_max), t_max).unwrap();
        let truncate = |s: &SymTSeries| {
            EgfSeries::from_coeffs(s.coeffs().iter().map(|c| c.truncate(alg)).collect())
        };
        // f(A) g(t) as a t-series: nonzero coefficients carry the scalar
        // EGF signs of g
        let times_scalar = |f: &GradedSeries, g_even: bool| {
            let coeffs = (0..=t_max)
                .map(|n| {
                    if (n % 2 == 0) != g_even {
                        return GradedSeries::zero(Basis::S, alg);
                    }
                    let half = if g_even { n / 2 } else { (n - 1) / 2 };
                    let sign = if half % 2 == 0 { 1 } else { -1 };
                    f.scale(&Coeff::from_int(sign))
                })
                .collect();
            EgfSeries::from_coeffs(coeffs)
        };
        let cos_a = sym::cos_series(alg);
        let sin_a = sym::sin_series(alg);
        let rhs_cos = times_scalar(&cos_a, true).sub(&times_scalar(&sin_a, false));
        assert_eq!(truncate(&shift_cos), rhs_cos);
        let rhs_sin = times_scalar(&sin_a, true).add(&times_scalar(&cos_a, false));
        assert_eq!(truncate(&shift_sin), rhs_sin);
    }

    #[test]
    fn counts_match_zigzag() {
        let n = 7;
        let st = sec_tan_g(n).unwrap();
        let sizes = st.support_sizes();
        // zigzag boustrophedon oracle
        let mut e = vec![1u64];
        let mut row = vec![1u64];
        for _ in 1..=n {
            let mut next = vec![0u64];
            for &v in row.iter().rev() {
                next.push(next.last().unwrap() + v);
            }
            e.push(*next.last().unwrap());
            row = next;
        }
        let expect: Vec<usize> = e.iter().map(|&v| v as usize).collect();
        assert_eq!(sizes, expect);
        assert_eq!(&expect[..8], &[1, 1, 1, 2, 5, 16, 61, 272]);
        for (n, &count) in expect.iter().enumerate() {
            let cls = enumerate_class(n, PermClass::AltA, None).unwrap();
            assert_eq!(cls.len(), count);
        }
    }
}

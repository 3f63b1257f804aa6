use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::coeff::Coeff;
use crate::composition::{BComposition, Composition};
use crate::error::{Error, Result};
use crate::graded::GradedSeries;
use crate::module::{Basis, BasisKey, ModuleElement};

/// Coefficient ring for exponential series. `try_inverse_unit` returns the
/// inverse when the element is invertible as a constant (here: ±unit).
pub trait EgfRing: Clone + PartialEq {
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn scale_big(&self, k: &BigInt) -> Self;
    fn is_zero(&self) -> bool;
    fn try_inverse_unit(&self) -> Option<Self>;
}

impl EgfRing for Coeff {
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn scale_big(&self, k: &BigInt) -> Self {
        self * &Coeff::from_bigint(k.clone())
    }
    fn is_zero(&self) -> bool {
        self.is_zero()
    }
    fn try_inverse_unit(&self) -> Option<Self> {
        if self.is_int(1) {
            Some(Coeff::one())
        } else if self.is_int(-1) {
            Some(Coeff::from_int(-1))
        } else {
            None
        }
    }
}

/// Graded algebra elements work as EGF coefficients too (series in `t`
/// over the algebra); the unit is the empty-key basis element.
impl EgfRing for ModuleElement {
    fn add(&self, rhs: &Self) -> Self {
        ModuleElement::add(self, rhs).expect("egf coefficient basis mismatch")
    }
    fn sub(&self, rhs: &Self) -> Self {
        ModuleElement::sub(self, rhs).expect("egf coefficient basis mismatch")
    }
    fn mul(&self, rhs: &Self) -> Self {
        ModuleElement::mul(self, rhs).expect("egf coefficient basis mismatch")
    }
    fn scale_big(&self, k: &BigInt) -> Self {
        self.scale_int(k)
    }
    fn is_zero(&self) -> bool {
        ModuleElement::is_zero(self)
    }
    fn try_inverse_unit(&self) -> Option<Self> {
        let one = ModuleElement::one(self.basis());
        if *self == one {
            return Some(one);
        }
        if *self == one.neg() {
            return Some(one.neg());
        }
        None
    }
}

pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let mut num = BigInt::one();
    for i in 0..k {
        num *= BigInt::from(n - i);
        num /= BigInt::from(i + 1);
    }
    num
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// Truncated exponential series: stores `a_n` with `f = sum a_n z^n / n!`.
/// Keeping `a_n` rather than `a_n / n!` keeps all arithmetic in the
/// coefficient ring; the product is the binomial convolution.
#[derive(Debug, Clone, PartialEq)]
pub struct EgfSeries<T: EgfRing> {
    coeffs: Vec<T>,
}

impl<T: EgfRing> EgfSeries<T> {
    pub fn from_coeffs(coeffs: Vec<T>) -> Self {
        EgfSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> &T {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(a, b)| a.add(b))
            .collect();
        EgfSeries { coeffs }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(a, b)| a.sub(b))
            .collect();
        EgfSeries { coeffs }
    }

    /// Binomial convolution: `(fg)_n = sum_k C(n,k) f_k g_{n-k}`.
    pub fn mul(&self, rhs: &Self) -> Self {
        let n_max = self.order().min(rhs.order());
        let mut coeffs = Vec::with_capacity(n_max + 1);
        for n in 0..=n_max {
            let mut acc: Option<T> = None;
            for k in 0..=n {
                if self.coeffs[k].is_zero() || rhs.coeffs[n - k].is_zero() {
                    continue;
                }
                let term = self.coeffs[k].mul(&rhs.coeffs[n - k]).scale_big(&binomial(n, k));
                acc = Some(match acc {
                    None => term,
                    Some(a) => a.add(&term),
                });
            }
            coeffs.push(acc.unwrap_or_else(|| self.coeffs[0].sub(&self.coeffs[0])));
        }
        EgfSeries { coeffs }
    }

    /// Inverse of a series whose constant term is a unit; the division
    /// introduces no denominators.
    pub fn invert(&self) -> Result<Self> {
        let inv0 = self.coeffs[0]
            .try_inverse_unit()
            .ok_or(Error::NonUnitConstant)?;
        let mut out: Vec<T> = Vec::with_capacity(self.coeffs.len());
        out.push(inv0.clone());
        for n in 1..self.coeffs.len() {
            let mut acc: Option<T> = None;
            for k in 1..=n {
                if self.coeffs[k].is_zero() {
                    continue;
                }
                let term = self.coeffs[k].mul(&out[n - k]).scale_big(&binomial(n, k));
                acc = Some(match acc {
                    None => term,
                    Some(a) => a.add(&term),
                });
            }
            let s = match acc {
                None => self.coeffs[0].sub(&self.coeffs[0]),
                Some(a) => a,
            };
            out.push(inv0.mul(&s).scale_big(&BigInt::from(-1)));
        }
        Ok(EgfSeries { coeffs: out })
    }
}

impl EgfSeries<Coeff> {
    pub fn zero(n_max: usize) -> Self {
        EgfSeries {
            coeffs: vec![Coeff::zero(); n_max + 1],
        }
    }

    pub fn one(n_max: usize) -> Self {
        let mut s = Self::zero(n_max);
        s.coeffs[0] = Coeff::one();
        s
    }

    /// `sin(c z)`: `a_n = (-1)^((n-1)/2) c^n` for odd n.
    pub fn sin(c: &Coeff, n_max: usize) -> Self {
        let mut s = Self::zero(n_max);
        for n in (1..=n_max).step_by(2) {
            let sign = if (n - 1) / 2 % 2 == 0 { 1 } else { -1 };
            s.coeffs[n] = &c.pow(n as u32) * &Coeff::from_int(sign);
        }
        s
    }

    /// `cos(c z)`: `a_n = (-1)^(n/2) c^n` for even n.
    pub fn cos(c: &Coeff, n_max: usize) -> Self {
        let mut s = Self::zero(n_max);
        for n in (0..=n_max).step_by(2) {
            let sign = if n / 2 % 2 == 0 { 1 } else { -1 };
            s.coeffs[n] = &c.pow(n as u32) * &Coeff::from_int(sign);
        }
        s
    }
}

/// Weight attached to each color when a series is pushed to its EGF.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EgfWeights {
    /// Every key counts 1.
    Ones,
    /// `t^(number of letters of color >= 1)` (the statistic `t^m`).
    TPerBar,
    /// `prod_i q_(color of letter i)`.
    QPerColor,
}

fn color_weight(colors: &[u8], w: EgfWeights) -> Coeff {
    match w {
        EgfWeights::Ones => Coeff::one(),
        EgfWeights::TPerBar => {
            let m = colors.iter().filter(|&&c| c != 0).count();
            Coeff::t_pow(m as u32)
        }
        EgfWeights::QPerColor => {
            let mut acc = Coeff::one();
            for &c in colors {
                acc = &acc * &Coeff::q(c as usize);
            }
            acc
        }
    }
}

fn multinomial(parts: &[u32]) -> BigInt {
    let n: u32 = parts.iter().sum();
    let mut result = factorial(n as usize);
    for &p in parts {
        result /= factorial(p as usize);
    }
    result
}

/// Number of plain permutations with descent composition exactly `I`.
fn ribbon_count(c: &Composition) -> BigInt {
    let n = c.weight();
    let mut acc = BigInt::zero();
    for j in Composition::all(n) {
        if j.refines_descents(c) {
            let sign = if (c.length() + j.length()).is_multiple_of(2) { 1 } else { -1 };
            acc += multinomial(j.parts()) * BigInt::from(sign);
        }
    }
    acc
}

/// Counting measure per basis key: the image of each key under the algebra
/// homomorphism into exponential series, with colors weighted as requested.
fn key_weight(key: &BasisKey, w: EgfWeights) -> Coeff {
    match key {
        BasisKey::Perm(p) => color_weight(p.colors(), w),
        BasisKey::Comp(_) | BasisKey::BComp(_) | BasisKey::SComp(_) | BasisKey::SRib(..) => {
            unreachable!("handled per basis")
        }
    }
}

/// Push a graded series to its exponential generating function.
///
/// For the fundamental bases each permutation contributes its color weight;
/// for composition-indexed bases the key contributes the size of its word
/// class (a multinomial for `S^I` and `Lambda^I`, a signed sum for ribbons;
/// type-B ribbons count signed permutations with that descent composition).
pub fn egf_map(series: &GradedSeries, weights: EgfWeights) -> EgfSeries<Coeff> {
    let mut coeffs = vec![Coeff::zero(); series.n_max() + 1];
    for (d, comp) in series.components().iter().enumerate() {
        let mut acc = Coeff::zero();
        for (key, c) in comp.terms() {
            let weight = match key {
                BasisKey::Perm(_) => key_weight(key, weights),
                BasisKey::Comp(i) => {
                    let count = match series.basis() {
                        Basis::S | Basis::Lambda => multinomial(i.parts()),
                        Basis::R => ribbon_count(i),
                        _ => multinomial(i.parts()),
                    };
                    Coeff::from_bigint(count)
                }
                BasisKey::BComp(i) => Coeff::from_bigint(b_ribbon_count(i, series.basis())),
                BasisKey::SComp(sc) => {
                    let parts: Vec<u32> = sc.parts().iter().map(|&(p, _)| p).collect();
                    let mut weight = Coeff::from_bigint(multinomial(&parts));
                    if weights == EgfWeights::TPerBar {
                        let m: u32 = sc
                            .parts()
                            .iter()
                            .filter(|&&(_, s)| s == 1)
                            .map(|&(p, _)| p)
                            .sum();
                        weight = &weight * &Coeff::t_pow(m);
                    }
                    weight
                }
                BasisKey::SRib(i, u) => {
                    let mut weight = Coeff::from_bigint(ribbon_count(i));
                    weight = &weight * &color_weight(u, weights);
                    weight
                }
            };
            acc += &(&weight * c);
        }
        coeffs[d] = acc;
    }
    EgfSeries::from_coeffs(coeffs)
}

/// Signed permutations with B-descent composition contained in (TildeS) or
/// exactly (TildeR) the given one.
fn b_ribbon_count(i: &BComposition, basis: Basis) -> BigInt {
    fn contained(i: &BComposition) -> BigInt {
        // blocks get arbitrary signs, except the leading block must stay
        // positive when position 0 is not a descent
        let n: u32 = i.weight();
        let fixed = if i.has_leading_zero() {
            0
        } else {
            i.parts().first().copied().unwrap_or(0)
        };
        multinomial(i.tail()) * BigInt::from(2u32).pow(n - fixed)
    }
    match basis {
        Basis::TildeS => contained(i),
        _ => {
            // inclusion-exclusion over B-descent subsets
            let n = i.weight();
            let des = i.b_descent_set();
            let mut acc = BigInt::zero();
            for j in BComposition::all(n) {
                if j.refines_descents(i) {
                    let sign = if (des.len() + j.b_descent_set().len()).is_multiple_of(2) {
                        1
                    } else {
                        -1
                    };
                    acc += contained(&j) * BigInt::from(sign);
                }
            }
            acc
        }
    }
}

/// Closed exponential forms used as oracles for the trigonometric series.
#[derive(Debug, Clone)]
pub enum TrigForm {
    /// `(1 + sin(c z)) / cos(c z)`.
    SecPlusTan { c: Coeff },
    /// `(cos(b z) + sin(b z)) / cos(c z)`.
    CosPlusSinOverCos { b: Coeff, c: Coeff },
    /// `1 / (cos z - sin z)`.
    InvCosMinusSin,
}

/// Expand a closed trigonometric form exactly to order `n_max`.
pub fn egf_trig(form: &TrigForm, n_max: usize) -> Result<EgfSeries<Coeff>> {
    match form {
        TrigForm::SecPlusTan { c } => {
            let num = EgfSeries::one(n_max).add(&EgfSeries::sin(c, n_max));
            let den = EgfSeries::cos(c, n_max);
            Ok(num.mul(&den.invert()?))
        }
        TrigForm::CosPlusSinOverCos { b, c } => {
            let num = EgfSeries::cos(b, n_max).add(&EgfSeries::sin(b, n_max));
            let den = EgfSeries::cos(c, n_max);
            Ok(num.mul(&den.invert()?))
        }
        TrigForm::InvCosMinusSin => {
            let one = Coeff::one();
            let den = EgfSeries::cos(&one, n_max).sub(&EgfSeries::sin(&one, n_max));
            den.invert()
        }
    }
}

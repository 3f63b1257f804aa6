//! The catalog of snake and alternating-permutation generating series in
//! the signed/colored fundamental basis, each with an algebraic
//! construction and, where available, an independent enumerative route,
//! plus the combinatorial maps attached to them (the alternating
//! bijection, the splitting of triangle cells, the valley factorization
//! and the type-D snake bijection).

use crate::classes::{classify, enumerate_class, PermClass};
use crate::coeff::Coeff;
use crate::error::{Error, Result};
use crate::fqsym2::{
    alternating_series, bar_series, monotone_block, s_block,
};
use crate::graded::GradedSeries;
use crate::module::{Basis, BasisKey, ModuleElement};
use crate::perm::{ColoredPermutation, LetterOrder};

/// Series in the catalog. `r` defaults to 2 where it is not a parameter.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CatalogTag {
    /// Alternating signed permutations (`sec# (1 + sin#)`).
    XB,
    /// Modified snakes (`(cos + sin) sec#`).
    YModified,
    /// Snakes as alternating permutations with negative first letter.
    YAlt,
    /// Down-up snakes with positive first letter.
    YArnold,
    /// Alternating with positive first letter (`X - Y`).
    DSnakes,
    /// The explicit lift of `cos z - sin z`.
    U,
    /// Its inverse: the valley-signed permutations.
    UInv,
    /// The lift of `sec z` supported on rigid sign patterns.
    V,
    VInv,
    /// The lift of `tan z` supported on rigid sign patterns.
    W,
    WVInv,
    /// The explicit lift of `cos z + sin z - 1`.
    Z,
    ZUInv,
    OnePlusZUInv,
    /// Level-r alternating permutations.
    XColored(u8),
    /// Level-r snakes with the first-letter colors capped at the split.
    YColored(u8, u8),
}

impl CatalogTag {
    pub fn colors(&self) -> u8 {
        match self {
            CatalogTag::XColored(r) | CatalogTag::YColored(r, _) => *r,
            _ => 2,
        }
    }

    pub fn name(&self) -> String {
        match self {
            CatalogTag::XB => "x-b".into(),
            CatalogTag::YModified => "y-modified".into(),
            CatalogTag::YAlt => "y-alt".into(),
            CatalogTag::YArnold => "y-arnold".into(),
            CatalogTag::DSnakes => "d-snakes".into(),
            CatalogTag::U => "u".into(),
            CatalogTag::UInv => "u-inv".into(),
            CatalogTag::V => "v".into(),
            CatalogTag::VInv => "v-inv".into(),
            CatalogTag::W => "w".into(),
            CatalogTag::WVInv => "w-v-inv".into(),
            CatalogTag::Z => "z".into(),
            CatalogTag::ZUInv => "z-u-inv".into(),
            CatalogTag::OnePlusZUInv => "one-plus-z-u-inv".into(),
            CatalogTag::XColored(_) => "x-colored".into(),
            CatalogTag::YColored(..) => "y-colored".into(),
        }
    }

    pub fn from_name(name: &str, r: u8, split: u8) -> Result<Self> {
        Ok(match name {
            "x-b" => CatalogTag::XB,
            "y-modified" => CatalogTag::YModified,
            "y-alt" => CatalogTag::YAlt,
            "y-arnold" => CatalogTag::YArnold,
            "d-snakes" => CatalogTag::DSnakes,
            "u" => CatalogTag::U,
            "u-inv" => CatalogTag::UInv,
            "v" => CatalogTag::V,
            "v-inv" => CatalogTag::VInv,
            "w" => CatalogTag::W,
            "w-v-inv" => CatalogTag::WVInv,
            "z" => CatalogTag::Z,
            "z-u-inv" => CatalogTag::ZUInv,
            "one-plus-z-u-inv" => CatalogTag::OnePlusZUInv,
            "x-colored" => CatalogTag::XColored(r),
            "y-colored" => CatalogTag::YColored(r, split),
            other => return Err(Error::InvalidInput(format!("unknown series {other}"))),
        })
    }
}

/// `cos` of the full level-r alphabet with the blocks above `split`
/// treated as odd (superized); `ReversedAbove(split)` is the matching
/// letter order.
pub fn cos_super_split(n_max: usize, r: u8, split: u8) -> Result<GradedSeries> {
    alternating_series(n_max, r, true, |n| {
        Ok(monotone_block(n, r, 0, r - 1, LetterOrder::ReversedAbove(split), true))
    })
}

pub fn sin_super_split(n_max: usize, r: u8, split: u8) -> Result<GradedSeries> {
    alternating_series(n_max, r, false, |n| {
        Ok(monotone_block(n, r, 0, r - 1, LetterOrder::ReversedAbove(split), true))
    })
}

/// `sec# = (cos#)^{-1}` at level 2 (signed order).
pub fn sec_sharp(n_max: usize) -> Result<GradedSeries> {
    cos_super_split(n_max, 2, 0)?.invert()
}

fn embed_cos_plus_sin(n_max: usize, r: u8, hi: u8) -> Result<GradedSeries> {
    let cos = alternating_series(n_max, r, true, |n| {
        Ok(s_block(n, r, 0, hi, LetterOrder::BlockNatural))
    })?;
    let sin = alternating_series(n_max, r, false, |n| {
        Ok(s_block(n, r, 0, hi, LetterOrder::BlockNatural))
    })?;
    cos.add(&sin)
}

fn cos_embedded(n_max: usize) -> Result<GradedSeries> {
    alternating_series(n_max, 2, true, |n| {
        Ok(s_block(n, 2, 0, 0, LetterOrder::BlockNatural))
    })
}

fn sin_embedded(n_max: usize) -> Result<GradedSeries> {
    alternating_series(n_max, 2, false, |n| {
        Ok(s_block(n, 2, 0, 0, LetterOrder::BlockNatural))
    })
}

/// The explicit generator term of `U`: identity word, bars at even
/// positions for even size, at odd positions from 3 on for odd size.
fn u_term(n: usize) -> ColoredPermutation {
    let colors: Vec<u8> = (1..=n)
        .map(|i| {
            if n.is_multiple_of(2) {
                u8::from(i % 2 == 0)
            } else {
                u8::from(i >= 3 && i % 2 == 1)
            }
        })
        .collect();
    ColoredPermutation::new((1..=n as u32).collect(), colors, 2).expect("identity word")
}

/// The explicit generator term of `Z`: identity word, first letter barred,
/// second plain, letter `i >= 3` barred when `n - i` is even.
fn z_term(n: usize) -> ColoredPermutation {
    let colors: Vec<u8> = (1..=n)
        .map(|i| {
            if i == 1 {
                1
            } else if i == 2 {
                0
            } else {
                u8::from((n - i).is_multiple_of(2))
            }
        })
        .collect();
    ColoredPermutation::new((1..=n as u32).collect(), colors, 2).expect("identity word")
}

/// Sign of `z^n` in `cos z - sin z`.
fn cos_minus_sin_sign(n: usize) -> i64 {
    match n % 4 {
        0 | 3 => 1,
        _ => -1,
    }
}

/// Sign of `z^n` in `cos z + sin z`.
fn cos_plus_sin_sign(n: usize) -> i64 {
    match n % 4 {
        0 | 1 => 1,
        _ => -1,
    }
}

pub fn u_series(n_max: usize) -> GradedSeries {
    let mut s = GradedSeries::one(Basis::G(2), n_max);
    for n in 1..=n_max {
        s.add_term(
            BasisKey::Perm(u_term(n)),
            Coeff::from_int(cos_minus_sin_sign(n)),
        );
    }
    s
}

pub fn z_series(n_max: usize) -> GradedSeries {
    let mut s = GradedSeries::zero(Basis::G(2), n_max);
    for n in 1..=n_max {
        s.add_term(
            BasisKey::Perm(z_term(n)),
            Coeff::from_int(cos_plus_sin_sign(n)),
        );
    }
    s
}

/// `V`: all signed permutations whose absolute word is up-down of even
/// size with signs `+ - + - ...`.
pub fn v_series(n_max: usize) -> Result<GradedSeries> {
    let mut s = GradedSeries::zero(Basis::G(2), n_max);
    for m in 0..=n_max / 2 {
        let n = 2 * m;
        for sigma in enumerate_class(n, PermClass::AltA, Some(u128::MAX))? {
            let colors: Vec<u8> = (1..=n).map(|i| u8::from(i % 2 == 0)).collect();
            let p = ColoredPermutation::new(sigma.word().to_vec(), colors, 2)?;
            s.add_term(BasisKey::Perm(p), Coeff::one());
        }
    }
    Ok(s)
}

/// `W`: absolute word down-up of odd size, first letter positive, then
/// signs `+ - + - ...` from the second letter on.
pub fn w_series(n_max: usize) -> Result<GradedSeries> {
    let mut s = GradedSeries::zero(Basis::G(2), n_max);
    let mut m = 0usize;
    while 2 * m < n_max {
        let n = 2 * m + 1;
        for sigma in down_up_plain(n)? {
            let colors: Vec<u8> = (1..=n).map(|i| u8::from(i >= 2 && i % 2 == 1)).collect();
            let p = ColoredPermutation::new(sigma.word().to_vec(), colors, 2)?;
            s.add_term(BasisKey::Perm(p), Coeff::one());
        }
        m += 1;
    }
    Ok(s)
}

fn down_up_plain(n: usize) -> Result<Vec<ColoredPermutation>> {
    Ok(crate::classes::enumerate_all(n, 1, Some(u128::MAX))?
        .into_iter()
        .filter(|p| crate::classes::is_down_up(p, LetterOrder::BlockNatural))
        .collect())
}

/// The algebraic route for each catalog series.
pub fn series(tag: CatalogTag, n_max: usize) -> Result<GradedSeries> {
    match tag {
        CatalogTag::XB => series(CatalogTag::XColored(2), n_max),
        CatalogTag::XColored(r) => {
            let sec = cos_super_split(n_max, r, 0)?.invert()?;
            let sin = sin_super_split(n_max, r, 0)?;
            let one = GradedSeries::one(Basis::G(r), n_max);
            sec.mul(&one.add(&sin)?)
        }
        CatalogTag::YModified => series(CatalogTag::YColored(2, 0), n_max),
        CatalogTag::YColored(r, split) => {
            let sec = cos_super_split(n_max, r, split)?.invert()?;
            embed_cos_plus_sin(n_max, r, split)?.mul(&sec)
        }
        CatalogTag::YAlt => {
            let sec = sec_sharp(n_max)?;
            let a = cos_embedded(n_max)?.mul(&sec)?;
            let b = bar_series(&sin_embedded(n_max)?.mul(&sec)?)?;
            a.add(&b)
        }
        CatalogTag::YArnold => {
            let sec = sec_sharp(n_max)?;
            let a = bar_series(&cos_embedded(n_max)?.mul(&sec)?)?;
            let b = sin_embedded(n_max)?.mul(&sec)?;
            a.add(&b)
        }
        CatalogTag::DSnakes => {
            series(CatalogTag::XB, n_max)?.sub(&series(CatalogTag::YAlt, n_max)?)
        }
        CatalogTag::U => Ok(u_series(n_max)),
        CatalogTag::UInv => u_series(n_max).invert(),
        CatalogTag::V => v_series(n_max),
        CatalogTag::VInv => v_series(n_max)?.invert(),
        CatalogTag::W => w_series(n_max),
        CatalogTag::WVInv => w_series(n_max)?.mul(&v_series(n_max)?.invert()?),
        CatalogTag::Z => Ok(z_series(n_max)),
        CatalogTag::ZUInv => z_series(n_max).mul(&u_series(n_max).invert()?),
        CatalogTag::OnePlusZUInv => {
            let one = GradedSeries::one(Basis::G(2), n_max);
            one.add(&z_series(n_max))?.mul(&u_series(n_max).invert()?)
        }
    }
}

/// The characteristic series of a permutation class, with the constant
/// term forced to 1 when the matching series starts at 1.
pub fn class_char_series(
    tag: PermClass,
    n_max: usize,
    constant_one: bool,
    budget: Option<u128>,
) -> Result<GradedSeries> {
    let r = tag.colors();
    let mut s = GradedSeries::zero(Basis::G(r), n_max);
    for n in 0..=n_max {
        for p in enumerate_class(n, tag, budget)? {
            s.add_term(BasisKey::Perm(p), Coeff::one());
        }
    }
    if constant_one {
        s.set_component(0, ModuleElement::one(Basis::G(r)))?;
    }
    Ok(s)
}

/// The enumerative route, where one exists: the class whose characteristic
/// series the tag must equal.
pub fn class_route(tag: CatalogTag) -> Option<(PermClass, bool)> {
    match tag {
        CatalogTag::XB => Some((PermClass::AltB, false)),
        CatalogTag::XColored(r) => Some((PermClass::AltColored(r), false)),
        CatalogTag::YModified => Some((PermClass::SnakeBModified, true)),
        CatalogTag::YAlt => Some((PermClass::SnakeBAlt, true)),
        CatalogTag::YArnold => Some((PermClass::SnakeBArnold, true)),
        CatalogTag::DSnakes => Some((PermClass::DPositiveFirst, false)),
        CatalogTag::UInv => Some((PermClass::Valley, false)),
        _ => None,
    }
}

/// The bijection from alternating signed permutations to signed
/// permutations with alternating absolute value: `tau_j = std(pi)_j *
/// sign(pi^{-1}(j))`. It preserves the number of negative letters.
pub fn bijection_alt(pi: &ColoredPermutation) -> Result<ColoredPermutation> {
    if !classify(pi, PermClass::AltB)? {
        return Err(Error::InvalidInput(format!(
            "{pi} is not an alternating signed permutation"
        )));
    }
    let sigma = pi.std_as(LetterOrder::BlockReversed);
    let inv = pi.inverse();
    let word = sigma.word().to_vec();
    let colors: Vec<u8> = (0..pi.len()).map(|j| inv.colors()[j]).collect();
    ColoredPermutation::new(word, colors, 2)
}

/// Inverse of `bijection_alt`.
pub fn bijection_alt_inverse(tau: &ColoredPermutation) -> Result<ColoredPermutation> {
    let n = tau.len();
    let sigma = tau.word();
    // the value set of pi is { eps_i * i } read off tau position-wise
    let mut values: Vec<i64> = (0..n)
        .map(|j| {
            let v = j as i64 + 1;
            if tau.colors()[j] == 0 {
                v
            } else {
                -v
            }
        })
        .collect();
    values.sort_unstable();
    let signed: Vec<i64> = (0..n).map(|j| values[sigma[j] as usize - 1]).collect();
    let pi = ColoredPermutation::from_signed(&signed)?;
    if !classify(&pi, PermClass::AltB)? {
        return Err(Error::InvalidInput(format!(
            "{tau} is not in the image of the bijection"
        )));
    }
    Ok(pi)
}

/// The triangle-cell set `S(n, p)`: alternating signed permutations of
/// size `n` ending with the signed value `p`.
pub fn alt_ending_with(n: usize, p: i64) -> Result<Vec<ColoredPermutation>> {
    Ok(enumerate_class(n, PermClass::AltB, None)?
        .into_iter()
        .filter(|q| q.signed().last() == Some(&p))
        .collect())
}

/// The two-set splitting of `S(n, p)` for even `n`: the primed set holds
/// the permutations with `sigma_(n-1) < -p` or containing `-1`, the
/// double-primed set the rest. The first-letter involution story only
/// works in the even orientation; odd sizes are rejected.
pub fn split_s(n: usize, p: i64) -> Result<(Vec<ColoredPermutation>, Vec<ColoredPermutation>)> {
    if !n.is_multiple_of(2) || n < 2 {
        return Err(Error::InvalidInput("split_s needs even n >= 2".into()));
    }
    if p == 0 || p.unsigned_abs() as usize > n {
        return Err(Error::InvalidInput(format!("invalid last value {p}")));
    }
    let mut primed = Vec::new();
    let mut doubled = Vec::new();
    for q in alt_ending_with(n, p)? {
        let s = q.signed();
        let has_minus_one = s.contains(&-1);
        if s[n - 2] < -p || has_minus_one {
            primed.push(q);
        } else {
            doubled.push(q);
        }
    }
    Ok((primed, doubled))
}

/// The fixed-point-free involution on `S(n, p)` (|p| > 1): flip the sign
/// of the letter with absolute value 1.
pub fn flip_unit_letter(q: &ColoredPermutation) -> ColoredPermutation {
    let pos = q.word().iter().position(|&v| v == 1).expect("letter 1");
    q.negate_positions(pos..pos + 1)
}

/// Unique factorization of a valley-signed permutation into one even
/// sign-rigid factor followed by odd sign-rigid factors, found by
/// scanning from the right.
pub fn valley_factorize(u: &ColoredPermutation) -> Result<Vec<Vec<i64>>> {
    if !classify(u, PermClass::Valley)? {
        return Err(Error::InvalidInput(format!("{u} is not valley-signed")));
    }
    let signed = u.signed();
    let mut factors_rev: Vec<Vec<i64>> = Vec::new();
    let mut end = signed.len();
    loop {
        let mut found: Option<usize> = None;
        let mut len = 1;
        while len <= end {
            if odd_pattern_matches(&signed[end - len..end]) {
                if let Some(prev) = found {
                    return Err(Error::InvalidInput(format!(
                        "ambiguous factorization of {u}: odd suffixes of lengths {prev} and {len}"
                    )));
                }
                found = Some(len);
            }
            len += 2;
        }
        match found {
            Some(l) => {
                factors_rev.push(signed[end - l..end].to_vec());
                end -= l;
            }
            None => break,
        }
    }
    if end > 0 {
        if !even_pattern_matches(&signed[..end]) {
            return Err(Error::InvalidInput(format!(
                "leftover prefix of {u} is not an even sign-rigid factor"
            )));
        }
        factors_rev.push(signed[..end].to_vec());
    }
    factors_rev.reverse();
    Ok(factors_rev)
}

/// Sign pattern `+ + - + - ...` and down-up absolute shape `1 2^m`.
fn odd_pattern_matches(w: &[i64]) -> bool {
    if w.len().is_multiple_of(2) {
        return false;
    }
    let signs_ok = w.iter().enumerate().all(|(j, &v)| {
        let i = j + 1;
        if i == 1 || i % 2 == 0 {
            v > 0
        } else {
            v < 0
        }
    });
    signs_ok && shape_down_up_abs(w)
}

/// Sign pattern `+ - + - ...` and up-down absolute shape `2^m`.
fn even_pattern_matches(w: &[i64]) -> bool {
    if !w.len().is_multiple_of(2) {
        return false;
    }
    let signs_ok = w
        .iter()
        .enumerate()
        .all(|(j, &v)| if (j + 1) % 2 == 1 { v > 0 } else { v < 0 });
    signs_ok && shape_up_down_abs(w)
}

fn shape_down_up_abs(w: &[i64]) -> bool {
    (1..w.len()).all(|i| {
        let a = w[i - 1].unsigned_abs();
        let b = w[i].unsigned_abs();
        if i % 2 == 1 {
            a > b
        } else {
            a < b
        }
    })
}

fn shape_up_down_abs(w: &[i64]) -> bool {
    (1..w.len()).all(|i| {
        let a = w[i - 1].unsigned_abs();
        let b = w[i].unsigned_abs();
        if i % 2 == 1 {
            a < b
        } else {
            a > b
        }
    })
}

/// From Arnold-style type-D snakes to the positive-first model: negate
/// every value, then make the first letter positive.
pub fn d_snake_map(p: &ColoredPermutation) -> Result<ColoredPermutation> {
    if !classify(p, PermClass::DArnold)? {
        return Err(Error::InvalidInput(format!("{p} is not a type-D snake")));
    }
    let mut s: Vec<i64> = p.signed().iter().map(|v| -v).collect();
    s[0] = s[0].abs();
    let q = ColoredPermutation::from_signed(&s)?;
    if !classify(&q, PermClass::DPositiveFirst)? {
        return Err(Error::InvalidInput(format!(
            "image {q} fell outside the positive-first class"
        )));
    }
    Ok(q)
}

/// Inverse direction: negate every value, then flip the first letter's
/// sign exactly when the result would have oddly many negatives.
pub fn d_snake_map_inverse(q: &ColoredPermutation) -> Result<ColoredPermutation> {
    if !classify(q, PermClass::DPositiveFirst)? {
        return Err(Error::InvalidInput(format!(
            "{q} is not a positive-first alternating permutation"
        )));
    }
    let mut s: Vec<i64> = q.signed().iter().map(|v| -v).collect();
    let negatives = s.iter().filter(|&&v| v < 0).count();
    if negatives % 2 != 0 {
        s[0] = -s[0];
    }
    let p = ColoredPermutation::from_signed(&s)?;
    if !classify(&p, PermClass::DArnold)? {
        return Err(Error::InvalidInput(format!(
            "preimage {p} fell outside the type-D snake class"
        )));
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fqsym2::eps_operator;

    fn sp(values: &[i64]) -> ColoredPermutation {
        ColoredPermutation::from_signed(values).unwrap()
    }

    #[test]
    fn xb_matches_class() {
        let n = 5;
        let alg = series(CatalogTag::XB, n).unwrap();
        let class = class_char_series(PermClass::AltB, n, false, None).unwrap();
        assert_eq!(alg, class);
        assert_eq!(alg.support_sizes(), vec![1, 2, 4, 16, 80, 512]);
    }

    #[test]
    fn snake_series_match_classes() {
        let n = 5;
        for tag in [CatalogTag::YModified, CatalogTag::YAlt, CatalogTag::YArnold] {
            let alg = series(tag, n).unwrap();
            let (class, one) = class_route(tag).unwrap();
            let char_series = class_char_series(class, n, one, None).unwrap();
            assert_eq!(alg, char_series, "{tag:?}");
            assert_eq!(alg.support_sizes(), vec![1, 1, 3, 11, 57, 361], "{tag:?}");
        }
        let d = series(CatalogTag::DSnakes, n).unwrap();
        let char_series = class_char_series(PermClass::DPositiveFirst, n, false, None).unwrap();
        assert_eq!(d, char_series);
        assert_eq!(d.support_sizes(), vec![0, 1, 1, 5, 23, 151]);
    }

    #[test]
    fn u_inverse_is_valley() {
        let n = 5;
        let u_inv = series(CatalogTag::UInv, n).unwrap();
        let valley = class_char_series(PermClass::Valley, n, false, None).unwrap();
        assert_eq!(u_inv, valley);
        assert!(u_inv.is_multiplicity_free());
    }

    #[test]
    fn u_is_one_minus_w_times_v_inverse() {
        let n = 6;
        let u = series(CatalogTag::U, n).unwrap();
        let one = GradedSeries::one(Basis::G(2), n);
        let w = series(CatalogTag::W, n).unwrap();
        let v_inv = series(CatalogTag::VInv, n).unwrap();
        assert_eq!(u, one.sub(&w).unwrap().mul(&v_inv).unwrap());
        // and U^{-1} = V (1 - W)^{-1}
        let v = series(CatalogTag::V, n).unwrap();
        let rhs = v.mul(&one.sub(&w).unwrap().invert().unwrap()).unwrap();
        assert_eq!(series(CatalogTag::UInv, n).unwrap(), rhs);
    }

    #[test]
    fn proposition_v_w_inverses() {
        let n = 7;
        // V^{-1} = 1 - G_(1 2bar) + G_(1 2bar 3 4bar) - ...
        let v_inv = series(CatalogTag::VInv, n).unwrap();
        let mut expect = GradedSeries::one(Basis::G(2), n);
        let mut m = 1;
        while 2 * m <= n {
            let nn = 2 * m;
            let colors: Vec<u8> = (1..=nn).map(|i| u8::from(i % 2 == 0)).collect();
            let p = ColoredPermutation::new((1..=nn as u32).collect(), colors, 2).unwrap();
            let sign = if m % 2 == 0 { 1 } else { -1 };
            expect.add_term(BasisKey::Perm(p), Coeff::from_int(sign));
            m += 1;
        }
        assert_eq!(v_inv, expect);
        // W V^{-1} = G_1 - G_(1 2 3bar) + ...
        let wv = series(CatalogTag::WVInv, n).unwrap();
        let mut expect = GradedSeries::zero(Basis::G(2), n);
        let mut m = 0;
        while 2 * m < n {
            let nn = 2 * m + 1;
            let colors: Vec<u8> = (1..=nn).map(|i| u8::from(i >= 3 && i % 2 == 1)).collect();
            let p = ColoredPermutation::new((1..=nn as u32).collect(), colors, 2).unwrap();
            let sign = if m % 2 == 0 { 1 } else { -1 };
            expect.add_term(BasisKey::Perm(p), Coeff::from_int(sign));
            m += 1;
        }
        assert_eq!(wv, expect);
    }

    #[test]
    fn z_from_sign_flips() {
        let n = 6;
        let v_inv = series(CatalogTag::VInv, n).unwrap();
        let wv = series(CatalogTag::WVInv, n).unwrap();
        let e = {
            let mut s = GradedSeries::zero(Basis::G(2), n);
            for (d, c) in v_inv.components().iter().enumerate() {
                let flipped = eps_operator(&eps_operator(c, 1).unwrap(), 2).unwrap();
                s.set_component(d, flipped).unwrap();
            }
            s
        };
        let o = {
            let mut s = GradedSeries::zero(Basis::G(2), n);
            for (d, c) in wv.components().iter().enumerate() {
                s.set_component(d, eps_operator(c, 1).unwrap()).unwrap();
            }
            s
        };
        let one = GradedSeries::one(Basis::G(2), n);
        let z = e.sub(&one).unwrap().add(&o).unwrap();
        assert_eq!(z, series(CatalogTag::Z, n).unwrap());
    }

    #[test]
    fn theorem_z_u_inverse() {
        let n = 5;
        let zu = series(CatalogTag::ZUInv, n).unwrap();
        assert!(zu.is_multiplicity_free());
        assert_eq!(zu.support_sizes(), vec![0, 1, 1, 5, 23, 151]);
        let both = series(CatalogTag::OnePlusZUInv, n).unwrap();
        assert!(both.is_multiplicity_free());
        assert_eq!(both.support_sizes(), vec![1, 2, 4, 16, 80, 512]);
    }

    #[test]
    fn bijection_alt_round_trip() {
        for n in 0..=5 {
            for pi in enumerate_class(n, PermClass::AltB, None).unwrap() {
                let tau = bijection_alt(&pi).unwrap();
                assert!(crate::classes::is_up_down(
                    &ColoredPermutation::plain(tau.word().to_vec()).unwrap(),
                    LetterOrder::BlockNatural
                ));
                assert_eq!(tau.bar_count(), pi.bar_count(), "m preserved");
                assert_eq!(bijection_alt_inverse(&tau).unwrap(), pi);
            }
        }
    }

    #[test]
    fn valley_factorization_round_trip() {
        for n in 0..=5 {
            for u in enumerate_class(n, PermClass::Valley, None).unwrap() {
                let factors = valley_factorize(&u).unwrap();
                let flat: Vec<i64> = factors.concat();
                assert_eq!(flat, u.signed(), "concatenation reproduces {u}");
                if let Some(first) = factors.first() {
                    // at most one even factor, and only in front
                    for (k, f) in factors.iter().enumerate() {
                        if k == 0 && f.len() % 2 == 0 {
                            assert!(even_pattern_matches(first));
                        } else {
                            assert!(odd_pattern_matches(f));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn valley_single_factor_example() {
        let u = sp(&[2, 1, -3]);
        let factors = valley_factorize(&u).unwrap();
        assert_eq!(factors, vec![vec![2, 1, -3]]);
        let one = sp(&[1]);
        assert_eq!(valley_factorize(&one).unwrap(), vec![vec![1]]);
    }

    #[test]
    fn d_snake_map_examples() {
        let p = sp(&[-1, -2]);
        assert_eq!(d_snake_map(&p).unwrap(), sp(&[1, 2]));
        for n in 1..=5 {
            let arnold = enumerate_class(n, PermClass::DArnold, None).unwrap();
            let target = enumerate_class(n, PermClass::DPositiveFirst, None).unwrap();
            let mut image: Vec<ColoredPermutation> = arnold
                .iter()
                .map(|p| d_snake_map(p).unwrap())
                .collect();
            image.sort();
            image.dedup();
            assert_eq!(image, target, "bijection onto the class at n = {n}");
            for p in &arnold {
                assert_eq!(&d_snake_map_inverse(&d_snake_map(p).unwrap()).unwrap(), p);
            }
        }
    }

    #[test]
    fn split_s_printed_sets() {
        let (primed, doubled) = split_s(4, 2).unwrap();
        let s42 = alt_ending_with(4, 2).unwrap();
        assert_eq!(s42.len(), 14);
        assert_eq!(primed.len(), 11);
        let expect_doubled: Vec<ColoredPermutation> =
            vec![sp(&[3, 4, 1, 2]), sp(&[-3, 4, 1, 2]), sp(&[-4, 3, 1, 2])];
        assert_eq!(doubled, expect_doubled);
        // S' cup S'' = S(4, 2)
        let mut all: Vec<ColoredPermutation> = primed.iter().chain(&doubled).cloned().collect();
        all.sort();
        assert_eq!(all, s42);
        // S' minus I(S'') equals S(4, -2) after flipping the last letter
        let flipped: Vec<ColoredPermutation> = doubled.iter().map(flip_unit_letter).collect();
        let mut rest: Vec<ColoredPermutation> = primed
            .iter()
            .filter(|q| !flipped.contains(q))
            .cloned()
            .collect();
        rest.sort();
        let mut expect: Vec<ColoredPermutation> = alt_ending_with(4, -2)
            .unwrap()
            .iter()
            .map(|q| {
                let n = q.len();
                q.negate_positions(n - 1..n)
            })
            .collect();
        expect.sort();
        assert_eq!(rest, expect);
    }

    #[test]
    fn colored_series_reduce_and_count() {
        // r = 2 colored alternating series is the signed one
        let n = 4;
        assert_eq!(
            series(CatalogTag::XColored(2), n).unwrap(),
            series(CatalogTag::XB, n).unwrap()
        );
        // r = 3 counts 3^n E_n
        let x3 = series(CatalogTag::XColored(3), n).unwrap();
        let class = class_char_series(PermClass::AltColored(3), n, false, None).unwrap();
        assert_eq!(x3, class);
        assert_eq!(x3.support_sizes(), vec![1, 3, 9, 54, 405]);
        // y-colored reduces to the modified snakes at r = 2, i = 0
        assert_eq!(
            series(CatalogTag::YColored(2, 0), n).unwrap(),
            series(CatalogTag::YModified, n).unwrap()
        );
    }
}

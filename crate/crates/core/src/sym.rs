use crate::coeff::Coeff;
use crate::composition::Composition;
use crate::error::{Error, Result};
use crate::graded::GradedSeries;
use crate::module::{Basis, BasisKey, ModuleElement};

fn comp_key(parts: &[u32]) -> BasisKey {
    BasisKey::Comp(Composition::new(parts.to_vec()).expect("positive parts"))
}

pub fn s_term(parts: &[u32]) -> ModuleElement {
    ModuleElement::term(Basis::S, comp_key(parts), Coeff::one())
}

pub fn r_term(parts: &[u32]) -> ModuleElement {
    ModuleElement::term(Basis::R, comp_key(parts), Coeff::one())
}

/// All compositions of `n` whose descent set contains `des`.
fn coarsenings_containing(des: &[u32], n: u32) -> Vec<Composition> {
    let free: Vec<u32> = (1..n).filter(|d| !des.contains(d)).collect();
    let mut out = Vec::new();
    for mask in 0u64..(1 << free.len()) {
        let mut d: Vec<u32> = des.to_vec();
        for (i, &f) in free.iter().enumerate() {
            if mask >> i & 1 == 1 {
                d.push(f);
            }
        }
        d.sort_unstable();
        out.push(Composition::from_descent_set(&d, n));
    }
    out
}

/// All compositions whose descent set is contained in `Des(i)`.
fn subsets_of(i: &Composition) -> Vec<Composition> {
    let des = i.descent_set();
    let n = i.weight();
    let mut out = Vec::new();
    for mask in 0u64..(1 << des.len()) {
        let d: Vec<u32> = des
            .iter()
            .enumerate()
            .filter(|(k, _)| mask >> k & 1 == 1)
            .map(|(_, &v)| v)
            .collect();
        out.push(Composition::from_descent_set(&d, n));
    }
    out
}

fn convert_key(key: &BasisKey, from: Basis, to: Basis) -> Vec<(BasisKey, Coeff)> {
    let BasisKey::Comp(i) = key else {
        panic!("Sym conversion expects composition keys")
    };
    let n = i.weight();
    match (from, to) {
        (Basis::S, Basis::R) => subsets_of(i)
            .into_iter()
            .map(|j| (BasisKey::Comp(j), Coeff::one()))
            .collect(),
        (Basis::R, Basis::S) => {
            let l = i.length();
            subsets_of(i)
                .into_iter()
                .map(|j| {
                    let sign = if (l + j.length()) % 2 == 0 { 1 } else { -1 };
                    (BasisKey::Comp(j), Coeff::from_int(sign))
                })
                .collect()
        }
        // Lambda^I = sum over refinements K of I of (-1)^(n - l(K)) S^K,
        // and the same formula converts S^I to the Lambda basis.
        (Basis::Lambda, Basis::S) | (Basis::S, Basis::Lambda) => {
            coarsenings_containing(&i.descent_set(), n)
                .into_iter()
                .map(|k| {
                    let sign = if (n as usize + k.length()).is_multiple_of(2) { 1 } else { -1 };
                    (BasisKey::Comp(k), Coeff::from_int(sign))
                })
                .collect()
        }
        _ => unreachable!(),
    }
}

/// Convert a Sym element between the `S`, `Lambda` and `R` bases.
pub fn basis_convert(el: &ModuleElement, target: Basis) -> Result<ModuleElement> {
    let from = el.basis();
    let ok = matches!(from, Basis::S | Basis::Lambda | Basis::R)
        && matches!(target, Basis::S | Basis::Lambda | Basis::R);
    if !ok {
        return Err(Error::UnsupportedConversion {
            from: from.name(),
            to: target.name(),
        });
    }
    if from == target {
        return Ok(el.clone());
    }
    let direct = matches!(
        (from, target),
        (Basis::S, Basis::R) | (Basis::R, Basis::S) | (Basis::S, Basis::Lambda) | (Basis::Lambda, Basis::S)
    );
    if direct {
        Ok(el.map_keys(target, |k| convert_key(k, from, target)))
    } else {
        // route through S
        let via = basis_convert(el, Basis::S)?;
        basis_convert(&via, target)
    }
}

pub fn convert_series(series: &GradedSeries, target: Basis) -> Result<GradedSeries> {
    let mut out = GradedSeries::zero(target, series.n_max());
    for (d, comp) in series.components().iter().enumerate() {
        out.set_component(d, basis_convert(comp, target)?)?;
    }
    Ok(out)
}

/// The derivation with `dS_n = S_{n-1}`, extended by the Leibniz rule:
/// on `S^I` each part drops by one in turn (parts reaching zero vanish).
pub fn derive(el: &ModuleElement) -> Result<ModuleElement> {
    if el.basis() != Basis::S {
        return Err(Error::BasisMismatch {
            expected: "S".into(),
            got: el.basis().name(),
        });
    }
    let mut out = ModuleElement::zero(Basis::S);
    for (key, c) in el.terms() {
        let BasisKey::Comp(i) = key else { unreachable!() };
        for k in 0..i.length() {
            let mut parts = i.parts().to_vec();
            parts[k] -= 1;
            if parts[k] == 0 {
                parts.remove(k);
            }
            out.add_term(comp_key(&parts), c.clone());
        }
    }
    Ok(out)
}

pub fn derive_series(series: &GradedSeries) -> Result<GradedSeries> {
    let mut out = GradedSeries::zero(Basis::S, series.n_max());
    for comp in series.components() {
        let d = derive(comp)?;
        for (k, c) in d.terms() {
            out.add_term(k.clone(), c.clone());
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TrigTag {
    Cos,
    Sin,
    Sec,
    Tan,
}

/// Trigonometric series in Sym. `Cos`/`Sin` come out in the `S` basis;
/// `Sec`/`Tan` are computed by series inversion and returned on the ribbon
/// basis, where they are the staircase sums `sum R_(2^m)` and
/// `sum R_(2^m 1)`.
pub fn trig_series(tag: TrigTag, n_max: usize) -> GradedSeries {
    match tag {
        TrigTag::Cos => cos_series(n_max),
        TrigTag::Sin => sin_series(n_max),
        TrigTag::Sec => {
            let sec = cos_series(n_max).invert().expect("cos has unit constant");
            convert_series(&sec, Basis::R).expect("Sym conversion")
        }
        TrigTag::Tan => {
            let sec = cos_series(n_max).invert().expect("cos has unit constant");
            let tan = sec.mul(&sin_series(n_max)).expect("same basis");
            convert_series(&tan, Basis::R).expect("Sym conversion")
        }
    }
}

pub fn cos_series(n_max: usize) -> GradedSeries {
    let mut s = GradedSeries::zero(Basis::S, n_max);
    for m in 0..=n_max / 2 {
        let sign = if m % 2 == 0 { 1 } else { -1 };
        if 2 * m == 0 {
            s.add_term(BasisKey::Comp(Composition::empty()), Coeff::from_int(sign));
        } else {
            s.add_term(comp_key(&[2 * m as u32]), Coeff::from_int(sign));
        }
    }
    s
}

pub fn sin_series(n_max: usize) -> GradedSeries {
    let mut s = GradedSeries::zero(Basis::S, n_max);
    let mut m = 0;
    while 2 * m < n_max {
        let sign = if m % 2 == 0 { 1 } else { -1 };
        s.add_term(comp_key(&[(2 * m + 1) as u32]), Coeff::from_int(sign));
        m += 1;
    }
    s
}

/// `sum_m R_(2^m)` (secant staircase) up to degree `n_max`.
pub fn staircase_even(n_max: usize) -> GradedSeries {
    let mut s = GradedSeries::one(Basis::R, n_max);
    let mut parts = Vec::new();
    loop {
        parts.push(2u32);
        let w: u32 = parts.iter().sum();
        if w as usize > n_max {
            break;
        }
        s.add_term(comp_key(&parts), Coeff::one());
    }
    s
}

/// `sum_m R_(2^m 1)` (tangent staircase) up to degree `n_max`.
pub fn staircase_odd(n_max: usize) -> GradedSeries {
    let mut s = GradedSeries::zero(Basis::R, n_max);
    let mut twos: Vec<u32> = Vec::new();
    loop {
        let mut parts = twos.clone();
        parts.push(1);
        let w: u32 = parts.iter().sum();
        if w as usize > n_max {
            break;
        }
        s.add_term(comp_key(&parts), Coeff::one());
        twos.push(2);
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn s_to_r_examples() {
        // S^(2) = R_(2); S^(1,1) = R_(1,1) + R_(2)
        let a = basis_convert(&s_term(&[2]), Basis::R).unwrap();
        assert_eq!(a, r_term(&[2]));
        let b = basis_convert(&s_term(&[1, 1]), Basis::R).unwrap();
        assert_eq!(b, r_term(&[1, 1]).add(&r_term(&[2])).unwrap());
    }

    #[test]
    fn conversions_round_trip() {
        for n in 0..=6u32 {
            for i in Composition::all(n) {
                let el = ModuleElement::term(Basis::S, BasisKey::Comp(i.clone()), Coeff::one());
                for mid in [Basis::R, Basis::Lambda] {
                    let there = basis_convert(&el, mid).unwrap();
                    let back = basis_convert(&there, Basis::S).unwrap();
                    assert_eq!(back, el, "round trip via {mid:?} for {i}");
                }
            }
        }
    }

    #[test]
    fn sec_and_tan_are_staircases() {
        let sec = trig_series(TrigTag::Sec, 6);
        assert_eq!(sec, staircase_even(6));
        let tan = trig_series(TrigTag::Tan, 6);
        assert_eq!(tan, staircase_odd(6));
    }

    #[test]
    fn cos_times_sec_is_one() {
        let n = 7;
        let cos = cos_series(n);
        let sec = cos.invert().unwrap();
        assert_eq!(cos.mul(&sec).unwrap(), GradedSeries::one(Basis::S, n));
        assert_eq!(sec.mul(&cos).unwrap(), GradedSeries::one(Basis::S, n));
    }

    #[test]
    fn derivation_leibniz() {
        // d(S^I . S^J) = d(S^I) S^J + S^I d(S^J) on a couple of examples
        let x = s_term(&[2, 1]);
        let y = s_term(&[3]);
        let lhs = derive(&x.mul(&y).unwrap()).unwrap();
        let rhs = derive(&x)
            .unwrap()
            .mul(&y)
            .unwrap()
            .add(&x.mul(&derive(&y).unwrap()).unwrap())
            .unwrap();
        assert_eq!(lhs, rhs);
    }
}

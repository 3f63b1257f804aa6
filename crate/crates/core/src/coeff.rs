use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Exponent vector for the variable family `t, q0, q1, ...`.
///
/// Index 0 is the exponent of `t`, index `i + 1` the exponent of `q_i`.
/// Trailing zeros are trimmed so that equal monomials have equal keys.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn unit() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(index: usize, power: u32) -> Self {
        if power == 0 {
            return Self::unit();
        }
        let mut v = vec![0; index + 1];
        v[index] = power;
        Monomial(v)
    }

    fn from_vec(mut v: Vec<u32>) -> Self {
        while v.last() == Some(&0) {
            v.pop();
        }
        Monomial(v)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn exponent(&self, index: usize) -> u32 {
        self.0.get(index).copied().unwrap_or(0)
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        let n = self.0.len().max(other.0.len());
        let mut v = vec![0u32; n];
        for (i, slot) in v.iter_mut().enumerate() {
            *slot = self.exponent(i) + other.exponent(i);
        }
        Monomial::from_vec(v)
    }
}

/// Exact sparse polynomial in `t, q0, q1, ...` with arbitrary-precision
/// integer coefficients. No zero entries are ever stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Coeff {
    terms: BTreeMap<Monomial, BigInt>,
}

impl Coeff {
    pub fn zero() -> Self {
        Coeff::default()
    }

    pub fn one() -> Self {
        Coeff::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_bigint(BigInt::from(n))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !n.is_zero() {
            terms.insert(Monomial::unit(), n);
        }
        Coeff { terms }
    }

    /// The variable `t`.
    pub fn t() -> Self {
        Self::t_pow(1)
    }

    pub fn t_pow(power: u32) -> Self {
        Self::monomial(Monomial::var(0, power), BigInt::one())
    }

    /// The variable `q_i`.
    pub fn q(i: usize) -> Self {
        Self::monomial(Monomial::var(i + 1, 1), BigInt::one())
    }

    pub fn monomial(m: Monomial, c: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Coeff { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&Monomial::unit())
                .is_some_and(|c| c.is_one())
    }

    /// True when the polynomial is the integer constant `n`.
    pub fn is_int(&self, n: i64) -> bool {
        if n == 0 {
            return self.is_zero();
        }
        self.terms.len() == 1
            && self
                .terms
                .get(&Monomial::unit())
                .is_some_and(|c| *c == BigInt::from(n))
    }

    pub fn add_assign_term(&mut self, m: Monomial, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            let key = self
                .terms
                .iter()
                .find(|(_, v)| v.is_zero())
                .map(|(k, _)| k.clone());
            if let Some(key) = key {
                self.terms.remove(&key);
            }
        }
    }

    pub fn pow(&self, n: u32) -> Coeff {
        let mut acc = Coeff::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Substitute integers for every variable; `values[0]` is `t`,
    /// `values[i + 1]` is `q_i`. Missing entries default to 1.
    pub fn eval_int(&self, values: &[i64]) -> BigInt {
        let mut total = BigInt::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (i, &e) in m.0.iter().enumerate() {
                let base = BigInt::from(values.get(i).copied().unwrap_or(1));
                for _ in 0..e {
                    term *= &base;
                }
            }
            total += term;
        }
        total
    }

    /// The integer value of a constant polynomial, if it is one.
    pub fn as_int(&self) -> Option<BigInt> {
        if self.is_zero() {
            return Some(BigInt::zero());
        }
        if self.terms.len() == 1 {
            if let Some(c) = self.terms.get(&Monomial::unit()) {
                return Some(c.clone());
            }
        }
        None
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    /// Parse sums of integer multiples of monomials in `t` and `q_i`,
    /// e.g. `-t^3 - t^2`, `t + 1`, `2*t*q0^2`. `.` and `0` denote zero.
    pub fn parse(text: &str) -> crate::error::Result<Coeff> {
        let err = |t: &str| crate::error::Error::Parse(format!("bad coefficient: {t}"));
        let text = text.trim();
        if text.is_empty() || text == "." || text == "0" {
            return Ok(Coeff::zero());
        }
        let normalized = text.replace(" - ", " + -").replace("- ", "-");
        let mut out = Coeff::zero();
        for term in normalized.split(" + ") {
            let term = term.trim();
            let (sign, rest) = match term.strip_prefix('-') {
                Some(r) => (-1i64, r.trim()),
                None => (1i64, term),
            };
            let mut coeff: Option<i64> = None;
            let mut mono = Coeff::one();
            for factor in rest.split('*') {
                let factor = factor.trim();
                if factor.is_empty() {
                    return Err(err(term));
                }
                let (base, power) = match factor.split_once('^') {
                    Some((b, e)) => (b, e.parse::<u32>().map_err(|_| err(term))?),
                    None => (factor, 1),
                };
                if base == "t" {
                    mono = &mono * &Coeff::t_pow(power);
                } else if let Some(idx) = base.strip_prefix('q') {
                    let i: usize = idx.parse().map_err(|_| err(term))?;
                    mono = &mono * &Coeff::q(i).pow(power);
                } else {
                    let v: i64 = base.parse().map_err(|_| err(term))?;
                    coeff = Some(coeff.unwrap_or(1) * v.pow(power));
                }
            }
            let scalar = Coeff::from_int(sign * coeff.unwrap_or(1));
            out += &(&mono * &scalar);
        }
        Ok(out)
    }

    pub fn max_t_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.exponent(0)).max().unwrap_or(0)
    }
}

impl Add<&Coeff> for &Coeff {
    type Output = Coeff;
    fn add(self, rhs: &Coeff) -> Coeff {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl AddAssign<&Coeff> for Coeff {
    fn add_assign(&mut self, rhs: &Coeff) {
        for (m, c) in &rhs.terms {
            self.add_assign_term(m.clone(), c);
        }
    }
}

impl Sub<&Coeff> for &Coeff {
    type Output = Coeff;
    fn sub(self, rhs: &Coeff) -> Coeff {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_assign_term(m.clone(), &(-c));
        }
        out
    }
}

impl Neg for &Coeff {
    type Output = Coeff;
    fn neg(self) -> Coeff {
        Coeff {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Mul<&Coeff> for &Coeff {
    type Output = Coeff;
    fn mul(self, rhs: &Coeff) -> Coeff {
        let mut out = Coeff::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_assign_term(ma.mul(mb), &(ca * cb));
            }
        }
        out
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, m: &Monomial) -> fmt::Result {
    let mut first = true;
    for (i, &e) in m.0.iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !first {
            write!(f, "*")?;
        }
        first = false;
        if i == 0 {
            write!(f, "t")?;
        } else {
            write!(f, "q{}", i - 1)?;
        }
        if e > 1 {
            write!(f, "^{e}")?;
        }
    }
    Ok(())
}

/// Canonical text form: terms by decreasing total degree, then by
/// decreasing exponent vector; e.g. `t^2 + t`, `-t^3 - t^2`, `t + 1`.
impl fmt::Display for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut keys: Vec<&Monomial> = self.terms.keys().collect();
        keys.sort_by(|a, b| (b.degree(), b).cmp(&(a.degree(), a)));
        for (pos, m) in keys.iter().enumerate() {
            let c = &self.terms[*m];
            if pos == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let abs = c.abs();
            if m.degree() == 0 {
                write!(f, "{abs}")?;
            } else {
                if !abs.is_one() {
                    write!(f, "{abs}*")?;
                }
                write_monomial(f, m)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_and_display() {
        let t = Coeff::t();
        let p = &(&t * &t) + &t; // t^2 + t
        assert_eq!(p.to_string(), "t^2 + t");
        let q = &Coeff::one() - &p;
        assert_eq!(q.to_string(), "-t^2 - t + 1");
        assert_eq!((&p + &q).to_string(), "1");
        assert!((&p - &p).is_zero());
    }

    #[test]
    fn eval_and_vars() {
        let p = &(&Coeff::t() * &Coeff::q(1)) + &Coeff::from_int(3);
        assert_eq!(p.eval_int(&[2, 1, 5]), BigInt::from(13));
        assert_eq!(p.to_string(), "t*q1 + 3");
    }
}

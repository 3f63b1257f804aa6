use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use serde::ser::{SerializeMap, SerializeSeq};
use serde::{Serialize, Serializer};

use crate::coeff::Coeff;
use crate::composition::{BComposition, Composition};
use crate::error::{Error, Result};
use crate::perm::ColoredPermutation;

/// A signed composition: parts with a sign each, indexing the `S` basis of
/// the free product of two copies of the algebra of noncommutative
/// symmetric functions (sign 1 = barred part).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignedComposition(Vec<(u32, u8)>);

impl SignedComposition {
    pub fn new(parts: Vec<(u32, u8)>) -> Result<Self> {
        if parts.iter().any(|&(p, _)| p == 0) {
            return Err(Error::InvalidInput("signed composition parts must be >= 1".into()));
        }
        if parts.iter().any(|&(_, s)| s > 1) {
            return Err(Error::InvalidInput("signs must be 0 or 1".into()));
        }
        Ok(SignedComposition(parts))
    }

    pub fn empty() -> Self {
        SignedComposition(Vec::new())
    }

    pub fn parts(&self) -> &[(u32, u8)] {
        &self.0
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().map(|&(p, _)| p).sum()
    }

    pub fn concat(&self, other: &SignedComposition) -> SignedComposition {
        let mut parts = self.0.clone();
        parts.extend_from_slice(&other.0);
        SignedComposition(parts)
    }

    /// Exchange barred and unbarred parts.
    pub fn bar(&self) -> SignedComposition {
        SignedComposition(self.0.iter().map(|&(p, s)| (p, 1 - s)).collect())
    }
}

impl fmt::Display for SignedComposition {
    /// Barred parts print as negative integers: `S^{1bar,1}` is `(-1,1)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body = self
            .0
            .iter()
            .map(|&(p, s)| if s == 0 { format!("{p}") } else { format!("-{p}") })
            .collect::<Vec<_>>()
            .join(",");
        write!(f, "({body})")
    }
}

/// Basis families for free-module elements.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Basis {
    /// Fundamental basis of level-r free quasi-symmetric functions.
    G(u8),
    /// Complete basis `S^I` of Sym, indexed by compositions.
    S,
    /// Elementary basis `Lambda^I` of Sym.
    Lambda,
    /// Ribbon basis `R_I` of Sym.
    R,
    /// `S` basis of the free product Sym * Sym, indexed by signed compositions.
    MrS,
    /// Type-B complete basis, indexed by B-compositions. Not an algebra.
    TildeS,
    /// Type-B ribbon basis, indexed by B-compositions. Not an algebra.
    TildeR,
    /// Signed ribbons `R_I (x) u`: ribbon basis tensored with sign words.
    SignedRibbon,
}

impl Basis {
    pub fn name(&self) -> String {
        match self {
            Basis::G(1) => "G".into(),
            Basis::G(r) => format!("G{r}"),
            Basis::S => "S".into(),
            Basis::Lambda => "LAMBDA".into(),
            Basis::R => "R".into(),
            Basis::MrS => "S2".into(),
            Basis::TildeS => "TS".into(),
            Basis::TildeR => "TR".into(),
            Basis::SignedRibbon => "SR".into(),
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

/// A basis key; which variant is legal depends on the basis tag.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BasisKey {
    Perm(ColoredPermutation),
    Comp(Composition),
    BComp(BComposition),
    SComp(SignedComposition),
    /// Ribbon together with a sign word of length equal to its weight.
    SRib(Composition, Vec<u8>),
}

impl BasisKey {
    pub fn degree(&self) -> usize {
        match self {
            BasisKey::Perm(p) => p.len(),
            BasisKey::Comp(c) => c.weight() as usize,
            BasisKey::BComp(c) => c.weight() as usize,
            BasisKey::SComp(c) => c.weight() as usize,
            BasisKey::SRib(c, _) => c.weight() as usize,
        }
    }
}

impl fmt::Display for BasisKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BasisKey::Perm(p) => write!(f, "{p}"),
            BasisKey::Comp(c) => write!(f, "{c}"),
            BasisKey::BComp(c) => write!(f, "{c}"),
            BasisKey::SComp(c) => write!(f, "{c}"),
            BasisKey::SRib(c, u) => {
                let signs: String = u.iter().map(|&s| if s == 0 { '+' } else { '-' }).collect();
                write!(f, "{c}x{signs}")
            }
        }
    }
}

/// A finite formal linear combination of basis keys with polynomial
/// coefficients. Zero coefficients are never stored; iteration order over
/// terms is the key order, hence deterministic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuleElement {
    basis: Basis,
    terms: BTreeMap<BasisKey, Coeff>,
}

impl ModuleElement {
    pub fn zero(basis: Basis) -> Self {
        ModuleElement {
            basis,
            terms: BTreeMap::new(),
        }
    }

    /// The unit of the corresponding algebra: the empty key.
    pub fn one(basis: Basis) -> Self {
        let key = match basis {
            Basis::G(r) => BasisKey::Perm(ColoredPermutation::empty(r)),
            Basis::S | Basis::Lambda | Basis::R => BasisKey::Comp(Composition::empty()),
            Basis::MrS => BasisKey::SComp(SignedComposition::empty()),
            Basis::TildeS | Basis::TildeR => BasisKey::BComp(BComposition::empty()),
            Basis::SignedRibbon => BasisKey::SRib(Composition::empty(), Vec::new()),
        };
        Self::term(basis, key, Coeff::one())
    }

    pub fn term(basis: Basis, key: BasisKey, coeff: Coeff) -> Self {
        let mut el = Self::zero(basis);
        el.add_term(key, coeff);
        el
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BasisKey, &Coeff)> {
        self.terms.iter()
    }

    pub fn keys(&self) -> impl Iterator<Item = &BasisKey> {
        self.terms.keys()
    }

    pub fn coeff(&self, key: &BasisKey) -> Coeff {
        self.terms.get(key).cloned().unwrap_or_else(Coeff::zero)
    }

    pub fn add_term(&mut self, key: BasisKey, coeff: Coeff) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(key).or_insert_with(Coeff::zero);
        *entry += &coeff;
        if entry.is_zero() {
            let dead: Vec<BasisKey> = self
                .terms
                .iter()
                .filter(|(_, c)| c.is_zero())
                .map(|(k, _)| k.clone())
                .collect();
            for k in dead {
                self.terms.remove(&k);
            }
        }
    }

    pub fn add(&self, other: &ModuleElement) -> Result<ModuleElement> {
        self.check_basis(other)?;
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &ModuleElement) -> Result<ModuleElement> {
        self.check_basis(other)?;
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), -c);
        }
        Ok(out)
    }

    pub fn neg(&self) -> ModuleElement {
        ModuleElement {
            basis: self.basis,
            terms: self.terms.iter().map(|(k, c)| (k.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, c: &Coeff) -> ModuleElement {
        let mut out = Self::zero(self.basis);
        for (k, v) in &self.terms {
            out.add_term(k.clone(), v * c);
        }
        out
    }

    pub fn scale_int(&self, n: &BigInt) -> ModuleElement {
        self.scale(&Coeff::from_bigint(n.clone()))
    }

    fn check_basis(&self, other: &ModuleElement) -> Result<()> {
        if self.basis != other.basis {
            return Err(Error::BasisMismatch {
                expected: self.basis.name(),
                got: other.basis.name(),
            });
        }
        Ok(())
    }

    /// Linear extension of a map on keys: each key may fan out into a
    /// combination in a possibly different basis.
    pub fn map_keys(
        &self,
        target: Basis,
        mut f: impl FnMut(&BasisKey) -> Vec<(BasisKey, Coeff)>,
    ) -> ModuleElement {
        let mut out = ModuleElement::zero(target);
        for (k, c) in &self.terms {
            for (nk, nc) in f(k) {
                out.add_term(nk, &nc * c);
            }
        }
        out
    }

    /// The product in the algebra the basis belongs to.
    ///
    /// `G`: shifted shuffle of standardized word classes (colors follow
    /// their positions); `S`, `Lambda`, the free-product `S` basis:
    /// concatenation of indices; `R`: two-term ribbon rule; signed ribbons:
    /// ribbon rule on shapes, concatenation on sign words. The type-B
    /// bases do not form an algebra.
    pub fn mul(&self, other: &ModuleElement) -> Result<ModuleElement> {
        self.check_basis(other)?;
        let mut out = ModuleElement::zero(self.basis);
        for (ka, ca) in &self.terms {
            for (kb, cb) in &other.terms {
                let c = ca * cb;
                match (ka, kb) {
                    (BasisKey::Perm(a), BasisKey::Perm(b)) => {
                        for p in convolve(a, b)? {
                            out.add_term(BasisKey::Perm(p), c.clone());
                        }
                    }
                    (BasisKey::Comp(a), BasisKey::Comp(b)) => match self.basis {
                        Basis::S | Basis::Lambda => {
                            out.add_term(BasisKey::Comp(a.concat(b)), c);
                        }
                        Basis::R => {
                            if a.length() == 0 || b.length() == 0 {
                                out.add_term(BasisKey::Comp(a.concat(b)), c);
                            } else {
                                out.add_term(BasisKey::Comp(a.concat(b)), c.clone());
                                out.add_term(BasisKey::Comp(a.near_concat(b)), c);
                            }
                        }
                        _ => unreachable!(),
                    },
                    (BasisKey::SComp(a), BasisKey::SComp(b)) => {
                        out.add_term(BasisKey::SComp(a.concat(b)), c);
                    }
                    (BasisKey::SRib(a, u), BasisKey::SRib(b, v)) => {
                        let mut w = u.clone();
                        w.extend_from_slice(v);
                        if a.length() == 0 || b.length() == 0 {
                            out.add_term(BasisKey::SRib(a.concat(b), w), c);
                        } else {
                            out.add_term(BasisKey::SRib(a.concat(b), w.clone()), c.clone());
                            out.add_term(BasisKey::SRib(a.near_concat(b), w), c);
                        }
                    }
                    _ => {
                        return Err(Error::BasisMismatch {
                            expected: "an algebra basis".into(),
                            got: self.basis.name(),
                        })
                    }
                }
            }
        }
        Ok(out)
    }

    /// Degrees occurring with a nonzero coefficient.
    pub fn degrees(&self) -> Vec<usize> {
        let mut ds: Vec<usize> = self.terms.keys().map(|k| k.degree()).collect();
        ds.dedup();
        ds
    }

    /// Restrict to the homogeneous component of the given degree.
    pub fn homogeneous(&self, degree: usize) -> ModuleElement {
        ModuleElement {
            basis: self.basis,
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| k.degree() == degree)
                .map(|(k, c)| (k.clone(), c.clone()))
                .collect(),
        }
    }

    /// True when every coefficient is 0 or 1 (multiplicity-freeness).
    pub fn is_multiplicity_free(&self) -> bool {
        self.terms.values().all(|c| c.is_one())
    }

    /// The first key, in key order, on which the two elements differ.
    pub fn first_difference(&self, other: &ModuleElement) -> Option<BasisKey> {
        let mut keys: Vec<&BasisKey> = self.terms.keys().chain(other.terms.keys()).collect();
        keys.sort();
        keys.dedup();
        keys.into_iter()
            .find(|k| self.coeff(k) != other.coeff(k))
            .cloned()
    }
}

/// Convolution product on the fundamental basis: all `gamma = u . v` with
/// `Std(u) = alpha`, `Std(v) = beta`; color vectors concatenate.
pub fn convolve(a: &ColoredPermutation, b: &ColoredPermutation) -> Result<Vec<ColoredPermutation>> {
    if a.r() != b.r() {
        return Err(Error::ArityMismatch {
            expected: a.r(),
            got: b.r(),
        });
    }
    Ok(convolution_support(a, b))
}

pub(crate) fn convolution_support(
    a: &ColoredPermutation,
    b: &ColoredPermutation,
) -> Vec<ColoredPermutation> {
    let k = a.len();
    let l = b.len();
    let n = k + l;
    let mut out = Vec::new();
    // choose which values go to the prefix; each choice gives exactly one word
    let mut chooser = vec![false; n];
    fn rec(
        chooser: &mut Vec<bool>,
        picked: usize,
        from: usize,
        k: usize,
        a: &ColoredPermutation,
        b: &ColoredPermutation,
        out: &mut Vec<ColoredPermutation>,
    ) {
        let n = chooser.len();
        if picked == k {
            let prefix_vals: Vec<u32> = (0..n).filter(|&i| chooser[i]).map(|i| i as u32 + 1).collect();
            let suffix_vals: Vec<u32> = (0..n).filter(|&i| !chooser[i]).map(|i| i as u32 + 1).collect();
            let mut word = Vec::with_capacity(n);
            let mut colors = Vec::with_capacity(n);
            for i in 0..k {
                word.push(prefix_vals[a.word()[i] as usize - 1]);
                colors.push(a.colors()[i]);
            }
            for j in 0..n - k {
                word.push(suffix_vals[b.word()[j] as usize - 1]);
                colors.push(b.colors()[j]);
            }
            out.push(ColoredPermutation::new(word, colors, a.r()).expect("convolution word"));
            return;
        }
        if n - from < k - picked {
            return;
        }
        for i in from..n {
            chooser[i] = true;
            rec(chooser, picked + 1, i + 1, k, a, b, out);
            chooser[i] = false;
            if n - (i + 1) < k - picked {
                break;
            }
        }
    }
    rec(&mut chooser, 0, 0, k, a, b, &mut out);
    out
}

/// All splittings of `1..=n` into a k-subset and its complement, in
/// lexicographic order of the subset.
pub(crate) fn value_splits(n: usize, k: usize) -> Vec<(Vec<u32>, Vec<u32>)> {
    fn rec(start: u32, n: u32, remaining: usize, current: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if remaining == 0 {
            out.push(current.clone());
            return;
        }
        let last_start = n + 1 - remaining as u32;
        for v in start..=last_start {
            current.push(v);
            rec(v + 1, n, remaining - 1, current, out);
            current.pop();
        }
    }
    let mut subsets = Vec::new();
    rec(1, n as u32, k, &mut Vec::new(), &mut subsets);
    subsets
        .into_iter()
        .map(|s| {
            let t: Vec<u32> = (1..=n as u32).filter(|v| !s.contains(v)).collect();
            (s, t)
        })
        .collect()
}

impl fmt::Display for ModuleElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if c.is_one() {
                write!(f, "[{k}]")?;
            } else {
                write!(f, "({c})[{k}]")?;
            }
        }
        Ok(())
    }
}

impl Serialize for BasisKey {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            BasisKey::Perm(p) => {
                let mut m = s.serialize_map(Some(2))?;
                m.serialize_entry("word", p.word())?;
                m.serialize_entry("colors", p.colors())?;
                m.end()
            }
            BasisKey::Comp(c) => c.parts().serialize(s),
            BasisKey::BComp(c) => c.parts().serialize(s),
            BasisKey::SComp(c) => {
                let mut seq = s.serialize_seq(Some(c.parts().len()))?;
                for &(p, sign) in c.parts() {
                    seq.serialize_element(&[p as i64 * if sign == 0 { 1 } else { -1 }])?;
                }
                seq.end()
            }
            BasisKey::SRib(c, u) => {
                let mut m = s.serialize_map(Some(2))?;
                m.serialize_entry("ribbon", c.parts())?;
                m.serialize_entry("signs", u)?;
                m.end()
            }
        }
    }
}

impl Serialize for ModuleElement {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Term<'a> {
            key: &'a BasisKey,
            coeff: String,
        }
        let mut m = s.serialize_map(Some(2))?;
        m.serialize_entry("basis", &self.basis.name())?;
        let terms: Vec<Term> = self
            .terms
            .iter()
            .map(|(k, c)| Term {
                key: k,
                coeff: c.to_string(),
            })
            .collect();
        m.serialize_entry("terms", &terms)?;
        m.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g1(word: &[u32]) -> BasisKey {
        BasisKey::Perm(ColoredPermutation::plain(word.to_vec()).unwrap())
    }

    #[test]
    fn convolution_examples() {
        let one = ColoredPermutation::plain(vec![1]).unwrap();
        let supp = convolve(&one, &one).unwrap();
        assert_eq!(supp.len(), 2); // {12, 21}
        let id2 = ColoredPermutation::plain(vec![1, 2]).unwrap();
        let supp = convolve(&id2, &one).unwrap();
        let words: Vec<Vec<u32>> = supp.iter().map(|p| p.word().to_vec()).collect();
        assert_eq!(words, vec![vec![1, 2, 3], vec![1, 3, 2], vec![2, 3, 1]]);
        // |12 * 21| = C(4, 2)
        let p21 = ColoredPermutation::plain(vec![2, 1]).unwrap();
        assert_eq!(convolve(&id2, &p21).unwrap().len(), 6);
    }

    #[test]
    fn ribbon_product_rule() {
        let r1 = ModuleElement::term(Basis::R, BasisKey::Comp(Composition::one_part(1)), Coeff::one());
        let prod = r1.mul(&r1).unwrap();
        let mut expect = ModuleElement::zero(Basis::R);
        expect.add_term(BasisKey::Comp(Composition::new(vec![1, 1]).unwrap()), Coeff::one());
        expect.add_term(BasisKey::Comp(Composition::one_part(2)), Coeff::one());
        assert_eq!(prod, expect);
    }

    #[test]
    fn g_product_matches_convolution() {
        let a = ModuleElement::term(Basis::G(1), g1(&[1, 2]), Coeff::one());
        let b = ModuleElement::term(Basis::G(1), g1(&[1]), Coeff::one());
        let prod = a.mul(&b).unwrap();
        assert_eq!(prod.len(), 3);
        assert!(prod.is_multiplicity_free());
    }

    #[test]
    fn json_shape() {
        let el = ModuleElement::term(
            Basis::R,
            BasisKey::Comp(Composition::new(vec![2, 2, 1]).unwrap()),
            Coeff::one(),
        );
        let js = serde_json::to_value(&el).unwrap();
        assert_eq!(js["basis"], "R");
        assert_eq!(js["terms"][0]["key"], serde_json::json!([2, 2, 1]));
        assert_eq!(js["terms"][0]["coeff"], "1");
    }
}

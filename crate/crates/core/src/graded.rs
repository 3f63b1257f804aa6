use crate::coeff::Coeff;
use crate::error::{Error, Result};
use crate::module::{Basis, BasisKey, ModuleElement};

/// A degree-graded series truncated at `n_max`: component `d` holds only
/// degree-`d` keys. Products are truncated; when nonzero terms were
/// discarded the `truncated` flag is set. The flag is bookkeeping and does
/// not take part in equality.
#[derive(Debug, Clone)]
pub struct GradedSeries {
    basis: Basis,
    n_max: usize,
    components: Vec<ModuleElement>,
    truncated: bool,
}

impl PartialEq for GradedSeries {
    fn eq(&self, other: &Self) -> bool {
        self.basis == other.basis
            && self.n_max == other.n_max
            && self.components == other.components
    }
}

impl Eq for GradedSeries {}

impl GradedSeries {
    pub fn zero(basis: Basis, n_max: usize) -> Self {
        GradedSeries {
            basis,
            n_max,
            components: (0..=n_max).map(|_| ModuleElement::zero(basis)).collect(),
            truncated: false,
        }
    }

    pub fn one(basis: Basis, n_max: usize) -> Self {
        let mut s = Self::zero(basis, n_max);
        s.components[0] = ModuleElement::one(basis);
        s
    }

    /// Split an inhomogeneous element into graded components.
    pub fn from_element(el: &ModuleElement, n_max: usize) -> Self {
        let mut s = Self::zero(el.basis(), n_max);
        for (k, c) in el.terms() {
            let d = k.degree();
            if d <= n_max {
                s.components[d].add_term(k.clone(), c.clone());
            } else {
                s.truncated = true;
            }
        }
        s
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn n_max(&self) -> usize {
        self.n_max
    }

    pub fn truncated(&self) -> bool {
        self.truncated
    }

    pub fn component(&self, d: usize) -> &ModuleElement {
        &self.components[d]
    }

    pub fn components(&self) -> &[ModuleElement] {
        &self.components
    }

    pub fn set_component(&mut self, d: usize, el: ModuleElement) -> Result<()> {
        if el.basis() != self.basis {
            return Err(Error::BasisMismatch {
                expected: self.basis.name(),
                got: el.basis().name(),
            });
        }
        if el.keys().any(|k| k.degree() != d) {
            return Err(Error::DegreeMismatch(format!(
                "component {d} contains keys of other degrees"
            )));
        }
        self.components[d] = el;
        Ok(())
    }

    pub fn add_term(&mut self, key: BasisKey, coeff: Coeff) {
        let d = key.degree();
        if d <= self.n_max {
            self.components[d].add_term(key, coeff);
        } else {
            self.truncated = true;
        }
    }

    fn check(&self, other: &GradedSeries) -> Result<()> {
        if self.basis != other.basis {
            return Err(Error::BasisMismatch {
                expected: self.basis.name(),
                got: other.basis.name(),
            });
        }
        if self.n_max != other.n_max {
            return Err(Error::TruncationMismatch(self.n_max, other.n_max));
        }
        Ok(())
    }

    pub fn add(&self, other: &GradedSeries) -> Result<GradedSeries> {
        self.check(other)?;
        let mut out = self.clone();
        out.truncated |= other.truncated;
        for d in 0..=self.n_max {
            out.components[d] = out.components[d].add(&other.components[d])?;
        }
        Ok(out)
    }

    pub fn sub(&self, other: &GradedSeries) -> Result<GradedSeries> {
        self.check(other)?;
        let mut out = self.clone();
        out.truncated |= other.truncated;
        for d in 0..=self.n_max {
            out.components[d] = out.components[d].sub(&other.components[d])?;
        }
        Ok(out)
    }

    pub fn neg(&self) -> GradedSeries {
        let mut out = self.clone();
        for c in &mut out.components {
            *c = c.neg();
        }
        out
    }

    pub fn scale(&self, c: &Coeff) -> GradedSeries {
        let mut out = self.clone();
        for comp in &mut out.components {
            *comp = comp.scale(c);
        }
        out
    }

    /// Graded product: degree-d output sums `x_a * y_b` over `a + b = d`.
    pub fn mul(&self, other: &GradedSeries) -> Result<GradedSeries> {
        self.check(other)?;
        let mut out = GradedSeries::zero(self.basis, self.n_max);
        out.truncated = self.truncated || other.truncated;
        if !out.truncated {
            // nonzero high components multiplying past n_max are dropped
            out.truncated = (0..=self.n_max).any(|a| {
                !self.components[a].is_zero()
                    && ((self.n_max + 1).saturating_sub(a)..=self.n_max)
                        .any(|b| !other.components[b].is_zero())
            });
        }
        for d in 0..=self.n_max {
            let mut acc = ModuleElement::zero(self.basis);
            for a in 0..=d {
                let (xa, yb) = (&self.components[a], &other.components[d - a]);
                if xa.is_zero() || yb.is_zero() {
                    continue;
                }
                acc = acc.add(&xa.mul(yb)?)?;
            }
            out.components[d] = acc;
        }
        Ok(out)
    }

    /// Two-sided inverse for a series with constant term 1, by the graded
    /// recursion `y_d = -sum_{k>=1} x_k y_{d-k}`.
    pub fn invert(&self) -> Result<GradedSeries> {
        if self.components[0] != ModuleElement::one(self.basis) {
            return Err(Error::NonUnitConstant);
        }
        let mut inv = GradedSeries::zero(self.basis, self.n_max);
        inv.truncated = self.truncated;
        inv.components[0] = ModuleElement::one(self.basis);
        for d in 1..=self.n_max {
            let mut acc = ModuleElement::zero(self.basis);
            for k in 1..=d {
                if self.components[k].is_zero() {
                    continue;
                }
                acc = acc.add(&self.components[k].mul(&inv.components[d - k])?)?;
            }
            inv.components[d] = acc.neg();
        }
        Ok(inv)
    }

    /// Re-truncate to a lower order (or extend with zero components).
    pub fn truncate(&self, n_max: usize) -> GradedSeries {
        let mut out = GradedSeries::zero(self.basis, n_max);
        out.truncated = self.truncated || n_max < self.n_max;
        for d in 0..=n_max.min(self.n_max) {
            out.components[d] = self.components[d].clone();
        }
        out
    }

    /// Collapse into a single inhomogeneous element.
    pub fn flatten(&self) -> ModuleElement {
        let mut out = ModuleElement::zero(self.basis);
        for c in &self.components {
            for (k, v) in c.terms() {
                out.add_term(k.clone(), v.clone());
            }
        }
        out
    }

    /// Linear key-by-key transport into another basis/series.
    pub fn map_keys(
        &self,
        target: Basis,
        mut f: impl FnMut(&BasisKey) -> Vec<(BasisKey, Coeff)>,
    ) -> GradedSeries {
        let mut out = GradedSeries::zero(target, self.n_max);
        out.truncated = self.truncated;
        for comp in &self.components {
            for (k, c) in comp.terms() {
                for (nk, nc) in f(k) {
                    out.add_term(nk, &nc * c);
                }
            }
        }
        out
    }

    pub fn support_sizes(&self) -> Vec<usize> {
        self.components.iter().map(|c| c.len()).collect()
    }

    pub fn is_multiplicity_free(&self) -> bool {
        self.components.iter().all(|c| c.is_multiplicity_free())
    }

    /// First (degree, key) where the two series differ.
    pub fn first_difference(&self, other: &GradedSeries) -> Option<(usize, BasisKey)> {
        for d in 0..=self.n_max.min(other.n_max) {
            if let Some(k) = self.components[d].first_difference(&other.components[d]) {
                return Some((d, k));
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::composition::Composition;

    fn s_term(parts: &[u32]) -> ModuleElement {
        ModuleElement::term(
            Basis::S,
            BasisKey::Comp(Composition::new(parts.to_vec()).unwrap()),
            Coeff::one(),
        )
    }

    #[test]
    fn unit_laws() {
        let mut x = GradedSeries::one(Basis::S, 4);
        x.add_term(BasisKey::Comp(Composition::one_part(2)), Coeff::one());
        let one = GradedSeries::one(Basis::S, 4);
        assert_eq!(x.mul(&one).unwrap(), x);
        assert_eq!(one.mul(&x).unwrap(), x);
    }

    #[test]
    fn inverse_is_two_sided() {
        let mut x = GradedSeries::one(Basis::S, 6);
        x.add_term(BasisKey::Comp(Composition::one_part(1)), Coeff::from_int(-1));
        x.add_term(BasisKey::Comp(Composition::one_part(3)), Coeff::t());
        let y = x.invert().unwrap();
        let one = GradedSeries::one(Basis::S, 6);
        assert_eq!(x.mul(&y).unwrap(), one);
        assert_eq!(y.mul(&x).unwrap(), one);
        assert_eq!(y.invert().unwrap(), x);
    }

    #[test]
    fn homogeneity_enforced() {
        let mut s = GradedSeries::zero(Basis::S, 3);
        assert!(s.set_component(1, s_term(&[2])).is_err());
        assert!(s.set_component(2, s_term(&[2])).is_ok());
    }
}

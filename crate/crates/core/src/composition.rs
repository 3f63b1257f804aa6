use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An integer composition: an ordered sequence of positive parts.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Composition(Vec<u32>);

impl Composition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidInput("composition parts must be >= 1".into()));
        }
        Ok(Composition(parts))
    }

    pub fn empty() -> Self {
        Composition(Vec::new())
    }

    pub fn one_part(n: u32) -> Self {
        debug_assert!(n >= 1);
        Composition(vec![n])
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn length(&self) -> usize {
        self.0.len()
    }

    /// `Des(I) = {i1, i1+i2, ..., i1+...+i_{r-1}}`, a subset of `[1, n-1]`.
    pub fn descent_set(&self) -> Vec<u32> {
        let mut out = Vec::new();
        let mut acc = 0;
        for &p in &self.0[..self.0.len().saturating_sub(1)] {
            acc += p;
            out.push(acc);
        }
        out
    }

    pub fn from_descent_set(descents: &[u32], n: u32) -> Self {
        if n == 0 {
            return Composition::empty();
        }
        let mut parts = Vec::with_capacity(descents.len() + 1);
        let mut prev = 0;
        for &d in descents {
            debug_assert!(d > prev && d < n);
            parts.push(d - prev);
            prev = d;
        }
        parts.push(n - prev);
        Composition(parts)
    }

    /// Concatenation `IJ`.
    pub fn concat(&self, other: &Composition) -> Composition {
        let mut parts = self.0.clone();
        parts.extend_from_slice(&other.0);
        Composition(parts)
    }

    /// Near-concatenation `I |> J = (i1, ..., i_r + j_1, j_2, ...)`.
    pub fn near_concat(&self, other: &Composition) -> Composition {
        if self.0.is_empty() {
            return other.clone();
        }
        if other.0.is_empty() {
            return self.clone();
        }
        let mut parts = self.0.clone();
        *parts.last_mut().unwrap() += other.0[0];
        parts.extend_from_slice(&other.0[1..]);
        Composition(parts)
    }

    /// All compositions of `n`, by subsets of `[1, n-1]` in increasing
    /// bitmask order (deterministic).
    pub fn all(n: u32) -> Vec<Composition> {
        if n == 0 {
            return vec![Composition::empty()];
        }
        let slots = n - 1;
        (0u64..(1 << slots))
            .map(|mask| {
                let descents: Vec<u32> = (0..slots).filter(|i| mask >> i & 1 == 1).map(|i| i + 1).collect();
                Composition::from_descent_set(&descents, n)
            })
            .collect()
    }

    /// Refinement order used for ribbon triangularity: `J <= I` iff
    /// `Des(J)` is a subset of `Des(I)`.
    pub fn refines_descents(&self, coarser_of: &Composition) -> bool {
        let a = self.descent_set();
        let b = coarser_of.descent_set();
        a.iter().all(|d| b.contains(d))
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({})",
            self.0
                .iter()
                .map(|p| p.to_string())
                .collect::<Vec<_>>()
                .join(",")
        )
    }
}

/// A type-B composition: like a composition but the first part may be zero,
/// encoding a descent at position 0.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct BComposition(Vec<u32>);

impl BComposition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.len() == 1 && parts[0] == 0 {
            return Err(Error::InvalidInput("lone zero part".into()));
        }
        if parts.iter().skip(1).any(|&p| p == 0) {
            return Err(Error::InvalidInput(
                "only the first part of a B-composition may be zero".into(),
            ));
        }
        Ok(BComposition(parts))
    }

    pub fn empty() -> Self {
        BComposition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn length(&self) -> usize {
        self.0.len()
    }

    pub fn has_leading_zero(&self) -> bool {
        self.0.first() == Some(&0)
    }

    /// Parts without a leading zero; for `(0, I')` this is `I'`.
    pub fn tail(&self) -> &[u32] {
        if self.has_leading_zero() {
            &self.0[1..]
        } else {
            &self.0
        }
    }

    /// B-descent set, a subset of `[0, n-1]`: `{i0, i0+i1, ...}` over all
    /// proper prefixes.
    pub fn b_descent_set(&self) -> Vec<u32> {
        let mut out = Vec::new();
        let mut acc = 0;
        for &p in &self.0[..self.0.len().saturating_sub(1)] {
            acc += p;
            out.push(acc);
        }
        out
    }

    pub fn from_b_descent_set(descents: &[u32], n: u32) -> Self {
        if n == 0 {
            return BComposition::empty();
        }
        let mut parts = Vec::with_capacity(descents.len() + 1);
        let mut prev = 0;
        for (k, &d) in descents.iter().enumerate() {
            debug_assert!(d < n && (k == 0 || d > prev));
            parts.push(d - prev);
            prev = d;
        }
        parts.push(n - prev);
        BComposition(parts)
    }

    /// All B-compositions of `n`: subsets of `[0, n-1]` in increasing
    /// bitmask order. There are `2^n` of them.
    pub fn all(n: u32) -> Vec<BComposition> {
        if n == 0 {
            return vec![BComposition::empty()];
        }
        (0u64..(1 << n))
            .map(|mask| {
                let descents: Vec<u32> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
                BComposition::from_b_descent_set(&descents, n)
            })
            .collect()
    }

    pub fn refines_descents(&self, coarser_of: &BComposition) -> bool {
        let a = self.b_descent_set();
        let b = coarser_of.b_descent_set();
        a.iter().all(|d| b.contains(d))
    }

    /// Right action of a one-part composition: `I j` (concatenation).
    pub fn append(&self, j: u32) -> BComposition {
        let mut parts = self.0.clone();
        parts.push(j);
        BComposition(parts)
    }

    /// `I |> j`: the last part absorbs `j`. On the empty B-composition the
    /// result is `(j)`.
    pub fn near_append(&self, j: u32) -> BComposition {
        let mut parts = self.0.clone();
        match parts.last_mut() {
            Some(last) => *last += j,
            None => parts.push(j),
        }
        BComposition(parts)
    }
}

impl fmt::Display for BComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}]",
            self.0
                .iter()
                .map(|p| p.to_string())
                .collect::<Vec<_>>()
                .join(",")
        )
    }
}

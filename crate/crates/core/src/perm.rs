use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Total order on colored letters `(value, color)`.
///
/// Blocks are ordered by decreasing color (`A^(0) > A^(1) > ... > A^(r-1)`).
/// Within a block the two conventions in use differ:
/// * `BlockReversed` reverses every block of color >= 1, which for r = 2 is
///   the signed-integer order `-n < ... < -1 < 1 < ... < n`;
/// * `BlockNatural` keeps the natural order on values inside every block.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LetterOrder {
    BlockReversed,
    BlockNatural,
    /// Blocks of color strictly above the threshold are reversed, the rest
    /// natural; `ReversedAbove(0)` is `BlockReversed`.
    ReversedAbove(u8),
}

impl LetterOrder {
    fn reversed_for(self, color: u8) -> bool {
        match self {
            LetterOrder::BlockReversed => color >= 1,
            LetterOrder::BlockNatural => false,
            LetterOrder::ReversedAbove(i) => color > i,
        }
    }

    pub fn cmp_letters(self, a: (u32, u8), b: (u32, u8)) -> Ordering {
        // higher color = smaller letter
        match b.1.cmp(&a.1) {
            Ordering::Equal => {}
            ord => return ord,
        }
        if self.reversed_for(a.1) {
            b.0.cmp(&a.0)
        } else {
            a.0.cmp(&b.0)
        }
    }
}

/// A colored permutation: a permutation word of `1..=n` in one-line notation
/// together with a color in `0..r` per position. `r = 1` is a plain
/// permutation, `r = 2` a signed permutation (color 1 = bar = negative).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ColoredPermutation {
    word: Vec<u32>,
    colors: Vec<u8>,
    #[serde(skip, default = "default_r")]
    r: u8,
}

fn default_r() -> u8 {
    2
}

impl ColoredPermutation {
    pub fn new(word: Vec<u32>, colors: Vec<u8>, r: u8) -> Result<Self> {
        if r == 0 {
            return Err(Error::InvalidInput("r must be >= 1".into()));
        }
        if word.len() != colors.len() {
            return Err(Error::InvalidInput(format!(
                "word length {} != colors length {}",
                word.len(),
                colors.len()
            )));
        }
        let n = word.len();
        let mut seen = vec![false; n];
        for &v in &word {
            if v == 0 || v as usize > n || seen[v as usize - 1] {
                return Err(Error::InvalidInput(format!(
                    "word is not a permutation of 1..={n}"
                )));
            }
            seen[v as usize - 1] = true;
        }
        if colors.iter().any(|&c| c >= r) {
            return Err(Error::InvalidInput(format!("color out of range 0..{r}")));
        }
        Ok(ColoredPermutation { word, colors, r })
    }

    pub fn empty(r: u8) -> Self {
        ColoredPermutation {
            word: Vec::new(),
            colors: Vec::new(),
            r,
        }
    }

    pub fn plain(word: Vec<u32>) -> Result<Self> {
        let colors = vec![0; word.len()];
        Self::new(word, colors, 1)
    }

    pub fn identity(n: usize, r: u8) -> Self {
        ColoredPermutation {
            word: (1..=n as u32).collect(),
            colors: vec![0; n],
            r,
        }
    }

    /// Signed permutation (r = 2) from nonzero integers, e.g. `[-2, 1, -3]`.
    pub fn from_signed(values: &[i64]) -> Result<Self> {
        let word: Vec<u32> = values.iter().map(|&v| v.unsigned_abs() as u32).collect();
        let colors: Vec<u8> = values.iter().map(|&v| u8::from(v < 0)).collect();
        Self::new(word, colors, 2)
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn r(&self) -> u8 {
        self.r
    }

    pub fn word(&self) -> &[u32] {
        &self.word
    }

    pub fn colors(&self) -> &[u8] {
        &self.colors
    }

    pub fn letter(&self, i: usize) -> (u32, u8) {
        (self.word[i], self.colors[i])
    }

    /// Number of letters of color >= 1 (the statistic `m` for r = 2).
    pub fn bar_count(&self) -> usize {
        self.colors.iter().filter(|&&c| c != 0).count()
    }

    /// Signed one-line values; only meaningful for r <= 2.
    pub fn signed(&self) -> Vec<i64> {
        self.word
            .iter()
            .zip(&self.colors)
            .map(|(&v, &c)| if c == 0 { v as i64 } else { -(v as i64) })
            .collect()
    }

    /// Flip every sign (r = 2 involution `pi -> bar pi`).
    pub fn negate_all(&self) -> Self {
        assert_eq!(self.r, 2, "negate_all is a signed-permutation operation");
        ColoredPermutation {
            word: self.word.clone(),
            colors: self.colors.iter().map(|&c| 1 - c).collect(),
            r: 2,
        }
    }

    /// Flip the signs in `range` (r = 2).
    pub fn negate_positions(&self, range: std::ops::Range<usize>) -> Self {
        assert_eq!(self.r, 2);
        let mut colors = self.colors.clone();
        for c in &mut colors[range] {
            *c = 1 - *c;
        }
        ColoredPermutation {
            word: self.word.clone(),
            colors,
            r: 2,
        }
    }

    /// Group inverse in the wreath product; for a signed permutation `w`,
    /// `w^{-1}(i)` carries the sign of the position where `±i` sits.
    pub fn inverse(&self) -> Self {
        let n = self.len();
        let mut word = vec![0u32; n];
        let mut colors = vec![0u8; n];
        for i in 0..n {
            let v = self.word[i] as usize - 1;
            word[v] = i as u32 + 1;
            colors[v] = self.colors[i];
        }
        ColoredPermutation {
            word,
            colors,
            r: self.r,
        }
    }

    /// Descent set `{i in [1, n-1] : w(i) > w(i+1)}` under `order`.
    pub fn descents(&self, order: LetterOrder) -> Vec<usize> {
        (1..self.len())
            .filter(|&i| {
                order.cmp_letters(self.letter(i - 1), self.letter(i)) == Ordering::Greater
            })
            .collect()
    }

    /// Type-B descent set: position 0 is a descent when the first letter is
    /// negative (`w(0) = 0 > w(1)`). Signed order, r = 2.
    pub fn b_descents(&self) -> Vec<usize> {
        let mut out = Vec::new();
        if !self.is_empty() && self.colors[0] == 1 {
            out.push(0);
        }
        out.extend(self.descents(LetterOrder::BlockReversed));
        out
    }

    /// Standardization of the colored word under `order`: letters are ranked
    /// 1..n. All letters are distinct here, so no tie-breaking is involved.
    pub fn std_as(&self, order: LetterOrder) -> ColoredPermutation {
        let n = self.len();
        let mut idx: Vec<usize> = (0..n).collect();
        idx.sort_by(|&a, &b| order.cmp_letters(self.letter(a), self.letter(b)));
        let mut word = vec![0u32; n];
        for (rank, &pos) in idx.iter().enumerate() {
            word[pos] = rank as u32 + 1;
        }
        ColoredPermutation {
            word,
            colors: vec![0; n],
            r: 1,
        }
    }

    pub fn canonical_text(&self) -> String {
        self.to_string()
    }
}

/// Standardize a word over any totally ordered alphabet: occurrences of the
/// smallest letter are numbered 1, 2, ... from left to right, then the next
/// letter, and so on.
pub fn standardize<T: Ord>(word: &[T]) -> ColoredPermutation {
    let n = word.len();
    let mut idx: Vec<usize> = (0..n).collect();
    // stable sort by letter keeps equal letters in left-to-right order
    idx.sort_by(|&a, &b| word[a].cmp(&word[b]));
    let mut out = vec![0u32; n];
    for (rank, &pos) in idx.iter().enumerate() {
        out[pos] = rank as u32 + 1;
    }
    ColoredPermutation {
        word: out,
        colors: vec![0; n],
        r: 1,
    }
}

/// Signed standardization `Std(w, u) = (std(w), u)`: the underlying word is
/// standardized by the natural order and the colors pass through.
pub fn signed_standardize(pairs: &[(u32, u8)], r: u8) -> Result<ColoredPermutation> {
    if pairs.iter().any(|&(_, c)| c >= r) {
        return Err(Error::InvalidInput(format!("color out of range 0..{r}")));
    }
    let word: Vec<u32> = pairs.iter().map(|&(v, _)| v).collect();
    let std = standardize(&word);
    ColoredPermutation::new(
        std.word,
        pairs.iter().map(|&(_, c)| c).collect(),
        r.max(1),
    )
}

/// The convention fixed for class enumeration: blocks of color >= 1 reversed.
pub fn total_order_compare(a: (u32, u8), b: (u32, u8)) -> Ordering {
    LetterOrder::BlockReversed.cmp_letters(a, b)
}

/// Descent composition of a word over any ordered alphabet.
pub fn word_descent_composition<T: Ord>(word: &[T]) -> crate::composition::Composition {
    let descents: Vec<u32> = (1..word.len())
        .filter(|&i| word[i - 1] > word[i])
        .map(|i| i as u32)
        .collect();
    crate::composition::Composition::from_descent_set(&descents, word.len() as u32)
}

/// Descent composition of a (colored) permutation under the class order.
pub fn descent_composition(p: &ColoredPermutation) -> crate::composition::Composition {
    let descents: Vec<u32> = p
        .descents(LetterOrder::BlockReversed)
        .into_iter()
        .map(|i| i as u32)
        .collect();
    crate::composition::Composition::from_descent_set(&descents, p.len() as u32)
}

/// Type-B descent composition of a signed permutation, with a leading zero
/// part exactly when the first letter is negative.
pub fn b_descent_composition(p: &ColoredPermutation) -> crate::composition::BComposition {
    let descents: Vec<u32> = p.b_descents().into_iter().map(|i| i as u32).collect();
    crate::composition::BComposition::from_b_descent_set(&descents, p.len() as u32)
}

impl fmt::Display for ColoredPermutation {
    /// Canonical text: signed permutations as signed integers (`-2 1 -3`),
    /// r != 2 as `v^c` tokens (`2^1 1^0`), plain r = 1 without colors.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "e");
        }
        let parts: Vec<String> = match self.r {
            1 => self.word.iter().map(|v| v.to_string()).collect(),
            2 => self.signed().iter().map(|v| v.to_string()).collect(),
            _ => self
                .word
                .iter()
                .zip(&self.colors)
                .map(|(v, c)| format!("{v}^{c}"))
                .collect(),
        };
        write!(f, "{}", parts.join(" "))
    }
}

/// Parse the canonical text form back into a permutation.
pub fn parse_permutation(text: &str, r: u8) -> Result<ColoredPermutation> {
    let text = text.trim();
    if text.is_empty() || text == "e" {
        return Ok(ColoredPermutation::empty(r));
    }
    let mut word = Vec::new();
    let mut colors = Vec::new();
    for tok in text.split_whitespace() {
        if let Some((v, c)) = tok.split_once('^') {
            let v: u32 = v.parse().map_err(|_| Error::Parse(tok.into()))?;
            let c: u8 = c.parse().map_err(|_| Error::Parse(tok.into()))?;
            word.push(v);
            colors.push(c);
        } else {
            let v: i64 = tok.parse().map_err(|_| Error::Parse(tok.into()))?;
            word.push(v.unsigned_abs() as u32);
            colors.push(u8::from(v < 0));
        }
    }
    ColoredPermutation::new(word, colors, r)
}

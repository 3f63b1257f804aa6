use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::perm::{ColoredPermutation, LetterOrder};

/// Work ceiling for exhaustive enumeration, measured as `r^n * n!`.
/// The default admits `n <= 8` for signed permutations.
pub const DEFAULT_BUDGET: u128 = 10_321_920;

pub fn enumeration_work(n: usize, r: u8) -> u128 {
    let mut w: u128 = 1;
    for k in 1..=n as u128 {
        w = w.saturating_mul(k).saturating_mul(r as u128);
    }
    w
}

/// Enumeration-predicate tags for the permutation families under study.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PermClass {
    /// Plain permutations of ribbon shape `2^m` or `2^m 1` (up-down).
    AltA,
    /// Signed permutations with `pi_1 < pi_2 > pi_3 < ...`.
    AltB,
    /// `0 > pi_1 < pi_2 > ...` for even size, `0 < pi_1 > pi_2 < ...` for odd.
    SnakeBModified,
    /// Up-down signed permutations with negative first letter.
    SnakeBAlt,
    /// Down-up signed permutations with positive first letter.
    SnakeBArnold,
    /// Valley-signed permutations.
    Valley,
    /// Up-down signed permutations with positive first letter.
    DPositiveFirst,
    /// Down-up shape, evenly many negative letters, `s1 + s2 < 0`.
    DArnold,
    /// r-colored permutations that rise and fall alternately, starting
    /// with a rise, in the block-reversed order.
    AltColored(u8),
}

impl PermClass {
    pub fn colors(&self) -> u8 {
        match self {
            PermClass::AltA => 1,
            PermClass::AltColored(r) => *r,
            _ => 2,
        }
    }

    pub fn name(&self) -> String {
        match self {
            PermClass::AltA => "alt-a".into(),
            PermClass::AltB => "alt-b".into(),
            PermClass::SnakeBModified => "snake-b-modified".into(),
            PermClass::SnakeBAlt => "snake-b-alt".into(),
            PermClass::SnakeBArnold => "snake-b-arnold".into(),
            PermClass::Valley => "valley".into(),
            PermClass::DPositiveFirst => "d-positive-first".into(),
            PermClass::DArnold => "d-arnold".into(),
            PermClass::AltColored(_) => "alt-colored".into(),
        }
    }

    pub fn from_name(name: &str, r: u8) -> Result<Self> {
        Ok(match name {
            "alt-a" => PermClass::AltA,
            "alt-b" => PermClass::AltB,
            "snake-b-modified" => PermClass::SnakeBModified,
            "snake-b-alt" => PermClass::SnakeBAlt,
            "snake-b-arnold" => PermClass::SnakeBArnold,
            "valley" => PermClass::Valley,
            "d-positive-first" => PermClass::DPositiveFirst,
            "d-arnold" => PermClass::DArnold,
            "alt-colored" => PermClass::AltColored(r),
            other => return Err(Error::InvalidInput(format!("unknown class {other}"))),
        })
    }
}

impl fmt::Display for PermClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

fn cmp(order: LetterOrder, a: (u32, u8), b: (u32, u8)) -> Ordering {
    order.cmp_letters(a, b)
}

/// Alternating "up-down": rises at odd slots, falls at even slots.
pub fn is_up_down(p: &ColoredPermutation, order: LetterOrder) -> bool {
    (1..p.len()).all(|i| {
        let rel = cmp(order, p.letter(i - 1), p.letter(i));
        if i % 2 == 1 {
            rel == Ordering::Less
        } else {
            rel == Ordering::Greater
        }
    })
}

pub fn is_down_up(p: &ColoredPermutation, order: LetterOrder) -> bool {
    (1..p.len()).all(|i| {
        let rel = cmp(order, p.letter(i - 1), p.letter(i));
        if i % 2 == 1 {
            rel == Ordering::Greater
        } else {
            rel == Ordering::Less
        }
    })
}

fn first_negative(p: &ColoredPermutation) -> bool {
    !p.is_empty() && p.colors()[0] != 0
}

fn first_positive(p: &ColoredPermutation) -> bool {
    !p.is_empty() && p.colors()[0] == 0
}

fn valley_ok_at(letters: &[(u32, u8)], i: usize) -> bool {
    // letters[i] is negative; 1-based position is i + 1
    let (v, _) = letters[i];
    if i >= 2 {
        let (pv, pc) = letters[i - 1];
        let (ppv, _) = letters[i - 2];
        pc == 0 && ppv > pv && pv < v
    } else if i == 1 {
        let (pv, pc) = letters[i - 1];
        pc == 0 && pv < v
    } else {
        false
    }
}

pub fn is_valley_signed(p: &ColoredPermutation) -> bool {
    let letters: Vec<(u32, u8)> = (0..p.len()).map(|i| p.letter(i)).collect();
    (0..p.len()).all(|i| letters[i].1 == 0 || valley_ok_at(&letters, i))
}

/// Total membership predicate for each class tag.
///
/// The empty permutation belongs to the alternating families and to the
/// valley class; the snake families get their constant term from the
/// explicit `1 +` in their series instead.
pub fn classify(p: &ColoredPermutation, tag: PermClass) -> Result<bool> {
    let r = tag.colors();
    if p.r() != r {
        return Err(Error::ArityMismatch {
            expected: r,
            got: p.r(),
        });
    }
    let ord = LetterOrder::BlockReversed;
    Ok(match tag {
        PermClass::AltA => is_up_down(p, ord),
        PermClass::AltB | PermClass::AltColored(_) => is_up_down(p, ord),
        PermClass::SnakeBModified => {
            if p.is_empty() {
                false
            } else if p.len().is_multiple_of(2) {
                first_negative(p) && is_up_down(p, ord)
            } else {
                first_positive(p) && is_down_up(p, ord)
            }
        }
        PermClass::SnakeBAlt => first_negative(p) && is_up_down(p, ord),
        PermClass::SnakeBArnold => first_positive(p) && is_down_up(p, ord),
        PermClass::Valley => is_valley_signed(p),
        PermClass::DPositiveFirst => first_positive(p) && is_up_down(p, ord),
        PermClass::DArnold => {
            is_down_up(p, ord)
                && p.bar_count().is_multiple_of(2)
                && (p.len() < 2 || p.signed()[0] + p.signed()[1] < 0)
        }
    })
}

/// Same alternating predicate but under the natural within-block order;
/// this is the support of the plain-sum ribbon series at level r.
pub fn is_up_down_natural(p: &ColoredPermutation) -> bool {
    is_up_down(p, LetterOrder::BlockNatural)
}

struct Search<'a, F: FnMut(&ColoredPermutation)> {
    n: usize,
    r: u8,
    tag: Option<PermClass>,
    used: Vec<bool>,
    letters: Vec<(u32, u8)>,
    emit: &'a mut F,
}

impl<F: FnMut(&ColoredPermutation)> Search<'_, F> {
    fn letter_allowed(&self, next: (u32, u8)) -> bool {
        let i = self.letters.len(); // 0-based position of the candidate
        let ord = LetterOrder::BlockReversed;
        let Some(tag) = self.tag else { return true };
        let pattern_up_down = |first_color: Option<fn(u8) -> bool>| -> bool {
            if i == 0 {
                return first_color.is_none_or(|ok| ok(next.1));
            }
            let rel = cmp(ord, self.letters[i - 1], next);
            if i % 2 == 1 {
                rel == Ordering::Less
            } else {
                rel == Ordering::Greater
            }
        };
        let pattern_down_up = |first_color: Option<fn(u8) -> bool>| -> bool {
            if i == 0 {
                return first_color.is_none_or(|ok| ok(next.1));
            }
            let rel = cmp(ord, self.letters[i - 1], next);
            if i % 2 == 1 {
                rel == Ordering::Greater
            } else {
                rel == Ordering::Less
            }
        };
        match tag {
            PermClass::AltA | PermClass::AltB | PermClass::AltColored(_) => pattern_up_down(None),
            PermClass::SnakeBAlt => pattern_up_down(Some(|c| c == 1)),
            PermClass::DPositiveFirst => pattern_up_down(Some(|c| c == 0)),
            PermClass::SnakeBArnold => pattern_down_up(Some(|c| c == 0)),
            PermClass::SnakeBModified => {
                if self.n.is_multiple_of(2) {
                    pattern_up_down(Some(|c| c == 1))
                } else {
                    pattern_down_up(Some(|c| c == 0))
                }
            }
            PermClass::DArnold => {
                if !pattern_down_up(None) {
                    return false;
                }
                if i == 1 {
                    let s0 = signed_of(self.letters[0]);
                    let s1 = signed_of(next);
                    return s0 + s1 < 0;
                }
                true
            }
            PermClass::Valley => {
                if next.1 == 0 {
                    return true;
                }
                let mut ext = self.letters.clone();
                ext.push(next);
                valley_ok_at(&ext, i)
            }
        }
    }

    fn accept(&self, p: &ColoredPermutation) -> bool {
        match self.tag {
            Some(tag) => classify(p, tag).unwrap_or(false),
            None => true,
        }
    }

    fn run(&mut self) {
        if self.letters.len() == self.n {
            let word = self.letters.iter().map(|l| l.0).collect();
            let colors = self.letters.iter().map(|l| l.1).collect();
            let p = ColoredPermutation::new(word, colors, self.r).expect("search letters");
            if self.accept(&p) {
                (self.emit)(&p);
            }
            return;
        }
        for v in 1..=self.n as u32 {
            if self.used[v as usize - 1] {
                continue;
            }
            for c in 0..self.r {
                if !self.letter_allowed((v, c)) {
                    continue;
                }
                self.used[v as usize - 1] = true;
                self.letters.push((v, c));
                self.run();
                self.letters.pop();
                self.used[v as usize - 1] = false;
            }
        }
    }
}

/// All members of the class in lexicographic `(word, colors)` order.
///
/// The search prunes with per-position constraints but every emitted
/// element passes the full `classify` predicate, so the pruning cannot
/// change the result, only the cost.
pub fn enumerate_class(n: usize, tag: PermClass, budget: Option<u128>) -> Result<Vec<ColoredPermutation>> {
    let budget = budget.unwrap_or(DEFAULT_BUDGET);
    let work = enumeration_work(n, tag.colors());
    if work > budget {
        return Err(Error::BudgetExceeded { work, budget });
    }
    if n == 0 {
        let empty = ColoredPermutation::empty(tag.colors());
        return Ok(if classify(&empty, tag)? { vec![empty] } else { vec![] });
    }
    let mut out = Vec::new();
    let mut emit = |p: &ColoredPermutation| out.push(p.clone());
    let mut search = Search {
        n,
        r: tag.colors(),
        tag: Some(tag),
        used: vec![false; n],
        letters: Vec::with_capacity(n),
        emit: &mut emit,
    };
    search.run();
    out.sort();
    Ok(out)
}

/// Every colored permutation of size `n` with `r` colors, lexicographically.
pub fn enumerate_all(n: usize, r: u8, budget: Option<u128>) -> Result<Vec<ColoredPermutation>> {
    let budget = budget.unwrap_or(DEFAULT_BUDGET);
    let work = enumeration_work(n, r);
    if work > budget {
        return Err(Error::BudgetExceeded { work, budget });
    }
    let mut out = Vec::new();
    let mut emit = |p: &ColoredPermutation| out.push(p.clone());
    let mut search = Search {
        n,
        r,
        tag: None,
        used: vec![false; n],
        letters: Vec::with_capacity(n),
        emit: &mut emit,
    };
    search.run();
    out.sort();
    Ok(out)
}

fn signed_of(l: (u32, u8)) -> i64 {
    if l.1 == 0 {
        l.0 as i64
    } else {
        -(l.0 as i64)
    }
}

//! Seed-and-sweep boustrophedon triangles counting alternating permutations
//! and snakes by their last value, for the signed and colored families,
//! with direct enumeration as the cross-check.

use crate::classes::{enumerate_all, is_up_down, PermClass};
use crate::error::{Error, Result};
use crate::perm::LetterOrder;

/// Strictness pattern of the sweep. The signed tables treat the two
/// triangles asymmetrically; the colored tables use one rule for all
/// blocks. Both patterns are normalized against the printed tables.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepStyle {
    /// Left-to-right rows: left block inclusive, right block strict;
    /// right-to-left rows: right block inclusive, left block strict.
    Signed,
    /// Left-to-right rows strict everywhere, right-to-left rows inclusive.
    Colored,
}

/// Cell label: block index (ascending alphabet order) and the persistent
/// within-block letter. For the signed style the letter of block 0 cell
/// `j` in row `n` is the value `-(n - j)`, for block 1 it is `j + 1`; the
/// colored style labels cells `1..=n` per block.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct CellLabel {
    pub block: usize,
    pub letter: i64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Triangle {
    pub blocks: usize,
    pub n_max: usize,
    pub style: SweepStyle,
    /// `rows[n - 1]` holds `blocks * n` cells in ascending label order.
    pub rows: Vec<Vec<i128>>,
}

impl Triangle {
    pub fn label(&self, n: usize, pos: usize) -> CellLabel {
        let block = pos / n;
        let j = pos % n;
        let letter = match self.style {
            SweepStyle::Signed if block == 0 => -((n - j) as i64),
            SweepStyle::Signed => j as i64 + 1,
            SweepStyle::Colored => j as i64 + 1,
        };
        CellLabel { block, letter }
    }

    /// Value at `(row n, signed column p)` for two-block signed triangles.
    pub fn cell_signed(&self, n: usize, p: i64) -> i128 {
        debug_assert_eq!(self.blocks, 2);
        let pos = if p < 0 {
            n - p.unsigned_abs() as usize
        } else {
            n + p as usize - 1
        };
        self.rows[n - 1][pos]
    }

    pub fn row_sum(&self, n: usize) -> i128 {
        self.rows[n - 1].iter().sum()
    }

    pub fn cellwise_add(&self, other: &Triangle) -> Result<Triangle> {
        if self.blocks != other.blocks || self.n_max != other.n_max || self.style != other.style {
            return Err(Error::InvalidInput("triangle shapes differ".into()));
        }
        let rows = self
            .rows
            .iter()
            .zip(&other.rows)
            .map(|(a, b)| a.iter().zip(b).map(|(x, y)| x + y).collect())
            .collect();
        Ok(Triangle {
            blocks: self.blocks,
            n_max: self.n_max,
            style: self.style,
            rows,
        })
    }
}

fn cmp_labels(a: CellLabel, b: CellLabel, style: SweepStyle) -> std::cmp::Ordering {
    match style {
        // block 0 letters are negative, block 1 positive: integer order
        SweepStyle::Signed => a.letter.cmp(&b.letter),
        SweepStyle::Colored => a.cmp(&b),
    }
}

/// Fill the triangle rows from one seed per block, sweeping alternately
/// left-to-right (even rows) and right-to-left (odd rows), each cell
/// summing the previous row on its left (resp. right) with the style's
/// strictness.
pub fn triangle_sweep(seeds: &[i128], style: SweepStyle, n_max: usize) -> Triangle {
    let blocks = seeds.len();
    let mut tri = Triangle {
        blocks,
        n_max,
        style,
        rows: Vec::with_capacity(n_max),
    };
    if n_max == 0 {
        return tri;
    }
    tri.rows.push(seeds.to_vec());
    for n in 2..=n_max {
        let prev: Vec<(CellLabel, i128)> = (0..blocks * (n - 1))
            .map(|pos| (tri.label(n - 1, pos), tri.rows[n - 2][pos]))
            .collect();
        let mut row = vec![0i128; blocks * n];
        for (pos, slot) in row.iter_mut().enumerate() {
            let here = tri.label(n, pos);
            let east_to_west = n % 2 == 1;
            *slot = prev
                .iter()
                .filter(|(lab, _)| {
                    let ord = cmp_labels(*lab, here, style);
                    use std::cmp::Ordering::*;
                    let inclusive = match style {
                        SweepStyle::Signed => {
                            // inclusive side: left block on westward...
                            // rows read left-to-right include the left
                            // block, rows read right-to-left the right one
                            if east_to_west {
                                here.block == 1
                            } else {
                                here.block == 0
                            }
                        }
                        SweepStyle::Colored => east_to_west,
                    };
                    if east_to_west {
                        ord == Greater || (inclusive && ord == Equal)
                    } else {
                        ord == Less || (inclusive && ord == Equal)
                    }
                })
                .map(|(_, v)| *v)
                .sum();
        }
        tri.rows.push(row);
    }
    tri
}

/// The table kinds with their seeds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TriangleKind {
    /// Signed alternating permutations by last value; seeds (1, 1).
    AltB,
    /// Type-B snakes (alternating, negative first letter); seeds (1, 0).
    SnakeB,
    /// Type-D snakes (alternating, positive first letter); seeds (0, 1).
    D,
    /// r-colored alternating permutations; unit seed everywhere.
    Colored(u8),
    /// Colored alternating permutations whose first letter has the given
    /// color; a single unit seed.
    ColoredFirst(u8, u8),
}

impl TriangleKind {
    pub fn seeds(&self) -> Vec<i128> {
        match self {
            TriangleKind::AltB => vec![1, 1],
            TriangleKind::SnakeB => vec![1, 0],
            TriangleKind::D => vec![0, 1],
            TriangleKind::Colored(r) => vec![1; *r as usize],
            TriangleKind::ColoredFirst(r, first_color) => {
                // block order is ascending alphabet: color r-1 first
                let mut s = vec![0; *r as usize];
                s[(*r - 1 - *first_color) as usize] = 1;
                s
            }
        }
    }

    pub fn style(&self) -> SweepStyle {
        match self {
            TriangleKind::Colored(_) | TriangleKind::ColoredFirst(..) => SweepStyle::Colored,
            _ => SweepStyle::Signed,
        }
    }

    pub fn sweep(&self, n_max: usize) -> Triangle {
        triangle_sweep(&self.seeds(), self.style(), n_max)
    }
}

/// Count class members by their last value, in the same layout as the
/// swept triangle.
///
/// The signed kinds bucket by the signed last value. The colored kinds
/// enumerate the alternating class in the natural within-block order, so
/// that the bucket labels agree with the printed headers; the class sizes
/// per row do not depend on that choice.
pub fn triangle_enumerate(kind: TriangleKind, n_max: usize, budget: Option<u128>) -> Result<Triangle> {
    let style = kind.style();
    let (blocks, r) = match kind {
        TriangleKind::Colored(r) | TriangleKind::ColoredFirst(r, _) => (r as usize, r),
        _ => (2usize, 2),
    };
    let mut tri = Triangle {
        blocks,
        n_max,
        style,
        rows: Vec::with_capacity(n_max),
    };
    for n in 1..=n_max {
        let mut row = vec![0i128; blocks * n];
        match kind {
            TriangleKind::AltB | TriangleKind::SnakeB | TriangleKind::D => {
                let class = match kind {
                    TriangleKind::AltB => PermClass::AltB,
                    TriangleKind::SnakeB => PermClass::SnakeBAlt,
                    _ => PermClass::DPositiveFirst,
                };
                for p in crate::classes::enumerate_class(n, class, budget)? {
                    let last = *p.signed().last().expect("nonempty");
                    let pos = if last < 0 {
                        n - last.unsigned_abs() as usize
                    } else {
                        n + last as usize - 1
                    };
                    row[pos] += 1;
                }
            }
            TriangleKind::Colored(_) | TriangleKind::ColoredFirst(..) => {
                let first_color = match kind {
                    TriangleKind::ColoredFirst(_, c) => Some(c),
                    _ => None,
                };
                for p in enumerate_all(n, r, budget)? {
                    if !is_up_down(&p, LetterOrder::BlockNatural) {
                        continue;
                    }
                    if let Some(c) = first_color {
                        if p.colors()[0] != c {
                            continue;
                        }
                    }
                    let (v, c) = p.letter(n - 1);
                    let block = (r - 1 - c) as usize;
                    row[block * n + (v as usize - 1)] += 1;
                }
            }
        }
        tri.rows.push(row);
    }
    Ok(tri)
}

/// Everything the triangle relations require in one report.
#[derive(Debug, Clone, Default)]
pub struct RelationReport {
    pub failures: Vec<String>,
}

impl RelationReport {
    fn check(&mut self, ok: bool, what: impl Into<String>) {
        if !ok {
            self.failures.push(what.into());
        }
    }

    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Verify the mirror sum/difference laws between the alternating and
/// snake triangles, the cellwise seed decomposition, and the classical
/// row totals.
pub fn triangle_relations_check(n_max: usize) -> RelationReport {
    let mut report = RelationReport::default();
    let alt = TriangleKind::AltB.sweep(n_max);
    let snake = TriangleKind::SnakeB.sweep(n_max);
    let d = TriangleKind::D.sweep(n_max);

    match snake.cellwise_add(&d) {
        Ok(sum) => report.check(sum == alt, "snake + D = alternating cellwise"),
        Err(e) => report.check(false, format!("cellwise add failed: {e}")),
    }

    for n in 1..=n_max {
        for k in 1..=n as i64 {
            // the reading direction alternates with the row parity, so the
            // mirror laws swap sides between odd and even rows
            let s = snake.cell_signed(n, -k) + snake.cell_signed(n, k);
            let mirrored = (n as i64) + 1 - k;
            let (sum_col, diff, diff_col) = if n % 2 == 1 {
                (
                    -mirrored,
                    snake.cell_signed(n, -k) - snake.cell_signed(n, k),
                    mirrored,
                )
            } else {
                (
                    mirrored,
                    snake.cell_signed(n, k) - snake.cell_signed(n, -k),
                    -mirrored,
                )
            };
            report.check(
                s == alt.cell_signed(n, sum_col),
                format!("sum law at n={n}, k={k}"),
            );
            report.check(
                diff == alt.cell_signed(n, diff_col),
                format!("difference law at n={n}, k={k}"),
            );
        }
        report.check(
            alt.cell_signed(n, 1) == alt.cell_signed(n, -1),
            format!("S(n,1) = S(n,-1) at n={n}"),
        );
    }

    let springer: [i128; 6] = [1, 3, 11, 57, 361, 2763];
    let d_totals: [i128; 6] = [1, 1, 5, 23, 151, 1141];
    for n in 1..=n_max.min(6) {
        report.check(
            snake.row_sum(n) == springer[n - 1],
            format!("snake row total at n={n}"),
        );
        report.check(d.row_sum(n) == d_totals[n - 1], format!("D row total at n={n}"));
    }
    report
}

/// One canonical header label per cell for emission.
pub fn header_label(tri: &Triangle, n: usize, pos: usize) -> String {
    let lab = tri.label(n, pos);
    match tri.style {
        SweepStyle::Signed => lab.letter.to_string(),
        SweepStyle::Colored => {
            let color = tri.blocks - 1 - lab.block;
            format!("{}^{}", lab.letter, color)
        }
    }
}

/// Helper for tests and goldens: one row as `label:value` pairs.
pub fn row_cells(tri: &Triangle, n: usize) -> Vec<(String, i128)> {
    (0..tri.blocks * n)
        .map(|pos| (header_label(tri, n, pos), tri.rows[n - 1][pos]))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row(tri: &Triangle, n: usize) -> Vec<i128> {
        tri.rows[n - 1].clone()
    }

    #[test]
    fn alt_b_table() {
        let t = TriangleKind::AltB.sweep(6);
        assert_eq!(row(&t, 1), vec![1, 1]);
        assert_eq!(row(&t, 2), vec![0, 1, 1, 2]);
        assert_eq!(row(&t, 3), vec![4, 4, 3, 3, 2, 0]);
        assert_eq!(row(&t, 4), vec![0, 4, 8, 11, 11, 14, 16, 16]);
        assert_eq!(row(&t, 5), vec![80, 80, 76, 68, 57, 57, 46, 32, 16, 0]);
        assert_eq!(
            row(&t, 6),
            vec![0, 80, 160, 236, 304, 361, 361, 418, 464, 496, 512, 512]
        );
    }

    #[test]
    fn snake_b_table() {
        let t = TriangleKind::SnakeB.sweep(6);
        assert_eq!(row(&t, 1), vec![1, 0]);
        assert_eq!(row(&t, 2), vec![0, 1, 1, 1]);
        assert_eq!(row(&t, 3), vec![3, 3, 2, 2, 1, 0]);
        assert_eq!(row(&t, 4), vec![0, 3, 6, 8, 8, 10, 11, 11]);
        assert_eq!(row(&t, 5), vec![57, 57, 54, 48, 40, 40, 32, 22, 11, 0]);
        assert_eq!(
            row(&t, 6),
            vec![0, 57, 114, 168, 216, 256, 256, 296, 328, 350, 361, 361]
        );
    }

    #[test]
    fn d_table() {
        let t = TriangleKind::D.sweep(6);
        assert_eq!(row(&t, 1), vec![0, 1]);
        assert_eq!(row(&t, 2), vec![0, 0, 0, 1]);
        assert_eq!(row(&t, 3), vec![1, 1, 1, 1, 1, 0]);
        assert_eq!(row(&t, 4), vec![0, 1, 2, 3, 3, 4, 5, 5]);
        assert_eq!(row(&t, 5), vec![23, 23, 22, 20, 17, 17, 14, 10, 5, 0]);
        assert_eq!(
            row(&t, 6),
            vec![0, 23, 46, 68, 88, 105, 105, 122, 136, 146, 151, 151]
        );
    }

    #[test]
    fn colored_tables() {
        let t = TriangleKind::Colored(3).sweep(5);
        assert_eq!(row(&t, 1), vec![1, 1, 1]);
        assert_eq!(row(&t, 2), vec![0, 1, 1, 2, 2, 3]);
        assert_eq!(row(&t, 3), vec![9, 9, 8, 8, 7, 5, 5, 3, 0]);
        assert_eq!(row(&t, 4), vec![0, 9, 18, 26, 26, 34, 41, 46, 46, 51, 54, 54]);
        assert_eq!(
            row(&t, 5),
            vec![405, 405, 396, 378, 352, 352, 326, 292, 251, 205, 205, 159, 108, 54, 0]
        );
        // the three unit-seed splittings, cellwise summing to the full table
        let b = TriangleKind::ColoredFirst(3, 2).sweep(5);
        assert_eq!(row(&b, 4), vec![0, 5, 10, 14, 14, 18, 21, 23, 23, 25, 26, 26]);
        assert_eq!(
            row(&b, 5),
            vec![205, 205, 200, 190, 176, 176, 162, 144, 123, 100, 100, 77, 52, 26, 0]
        );
        let c = TriangleKind::ColoredFirst(3, 1).sweep(5);
        assert_eq!(row(&c, 3), vec![3, 3, 3, 3, 3, 2, 2, 1, 0]);
        assert_eq!(
            row(&c, 5),
            vec![147, 147, 144, 138, 129, 129, 120, 108, 93, 76, 76, 59, 40, 20, 0]
        );
        let dd = TriangleKind::ColoredFirst(3, 0).sweep(5);
        assert_eq!(row(&dd, 4), vec![0, 1, 2, 3, 3, 4, 5, 6, 6, 7, 8, 8]);
        assert_eq!(
            row(&dd, 5),
            vec![53, 53, 52, 50, 47, 47, 44, 40, 35, 29, 29, 23, 16, 8, 0]
        );
        let total = b.cellwise_add(&c).unwrap().cellwise_add(&dd).unwrap();
        assert_eq!(total, t);
    }

    #[test]
    fn sweep_matches_enumeration_signed() {
        for kind in [TriangleKind::AltB, TriangleKind::SnakeB, TriangleKind::D] {
            let swept = kind.sweep(6);
            let counted = triangle_enumerate(kind, 6, None).unwrap();
            assert_eq!(swept.rows, counted.rows, "{kind:?}");
        }
    }

    #[test]
    fn sweep_matches_enumeration_colored() {
        for kind in [
            TriangleKind::Colored(3),
            TriangleKind::ColoredFirst(3, 0),
            TriangleKind::ColoredFirst(3, 1),
            TriangleKind::ColoredFirst(3, 2),
        ] {
            let swept = kind.sweep(5);
            let counted = triangle_enumerate(kind, 5, None).unwrap();
            assert_eq!(swept.rows, counted.rows, "{kind:?}");
        }
        // four colors against enumeration only
        let swept = TriangleKind::Colored(4).sweep(5);
        let counted = triangle_enumerate(TriangleKind::Colored(4), 5, None).unwrap();
        assert_eq!(swept.rows, counted.rows);
    }

    #[test]
    fn linearity_in_seeds() {
        let a = triangle_sweep(&[1, 0], SweepStyle::Signed, 6);
        let b = triangle_sweep(&[0, 1], SweepStyle::Signed, 6);
        let sum = a.cellwise_add(&b).unwrap();
        assert_eq!(sum, triangle_sweep(&[1, 1], SweepStyle::Signed, 6));
    }

    #[test]
    fn relations_hold() {
        let report = triangle_relations_check(6);
        assert!(report.ok(), "failures: {:?}", report.failures);
    }

    #[test]
    fn worked_sum_difference_row() {
        // fifth row: sums 80 80 76 68 57, differences 57 46 32 16 0
        let snake = TriangleKind::SnakeB.sweep(5);
        let sums: Vec<i128> = (1..=5)
            .map(|k| snake.cell_signed(5, -k) + snake.cell_signed(5, k))
            .collect();
        assert_eq!(sums, vec![80, 80, 76, 68, 57]);
        let diffs: Vec<i128> = (1..=5)
            .rev()
            .map(|k| snake.cell_signed(5, -k) - snake.cell_signed(5, k))
            .collect();
        assert_eq!(diffs, vec![57, 46, 32, 16, 0]);
    }
}

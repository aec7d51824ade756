//! Head-to-head comparison of two allocations.
//!
//! Every category value of `a` is compared against every category value of
//! `b`, giving a `k × k` grid of cells. The series goes to whichever side wins
//! more cells; tie cells are neutral and equal decisive counts are a draw.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::alloc::Allocation;
use crate::error::{Error, Result};

/// Outcome of a single cell `a_i` vs `b_j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Cell {
    AWin,
    BWin,
    Tie,
}

impl Cell {
    pub fn compare(a: u64, b: u64) -> Cell {
        match a.cmp(&b) {
            std::cmp::Ordering::Greater => Cell::AWin,
            std::cmp::Ordering::Less => Cell::BWin,
            std::cmp::Ordering::Equal => Cell::Tie,
        }
    }

    pub fn is_decisive(self) -> bool {
        self != Cell::Tie
    }
}

/// Aggregate cell counts for one pairing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct MatchupCounts {
    pub wins_a: u64,
    pub wins_b: u64,
    pub ties: u64,
}

impl MatchupCounts {
    pub fn outcome(&self) -> SeriesOutcome {
        match self.wins_a.cmp(&self.wins_b) {
            std::cmp::Ordering::Greater => SeriesOutcome::AWins,
            std::cmp::Ordering::Less => SeriesOutcome::BWins,
            std::cmp::Ordering::Equal => SeriesOutcome::Draw,
        }
    }

    pub fn decisive(&self) -> u64 {
        self.wins_a + self.wins_b
    }

    pub fn total(&self) -> u64 {
        self.wins_a + self.wins_b + self.ties
    }

    /// Counts from `b`'s point of view.
    pub fn mirrored(&self) -> MatchupCounts {
        MatchupCounts {
            wins_a: self.wins_b,
            wins_b: self.wins_a,
            ties: self.ties,
        }
    }

    /// Probability that `a` wins one game under `policy`, as an exact fraction.
    pub fn win_probability(&self, policy: TiePolicy) -> Result<Fraction> {
        match policy {
            TiePolicy::Reroll => {
                if self.decisive() == 0 {
                    return Err(Error::AllTies);
                }
                Ok(Fraction::new(self.wins_a, self.decisive()))
            }
            TiePolicy::CountAsNoGame => Ok(Fraction::new(self.wins_a, self.total())),
        }
    }
}

/// The full `k × k` grid between two allocations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatchupTable {
    k: usize,
    cells: Vec<Cell>,
    counts: MatchupCounts,
}

impl MatchupTable {
    pub fn k(&self) -> usize {
        self.k
    }

    /// Cell comparing `a[row]` against `b[col]`.
    pub fn cell(&self, row: usize, col: usize) -> Cell {
        self.cells[row * self.k + col]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Cell]> {
        self.cells.chunks(self.k)
    }

    pub fn counts(&self) -> MatchupCounts {
        self.counts
    }

    pub fn wins_a(&self) -> u64 {
        self.counts.wins_a
    }

    pub fn wins_b(&self) -> u64 {
        self.counts.wins_b
    }

    pub fn ties(&self) -> u64 {
        self.counts.ties
    }

    pub fn outcome(&self) -> SeriesOutcome {
        self.counts.outcome()
    }
}

/// Result of an (infinitely long) series under the majority rule.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SeriesOutcome {
    AWins,
    BWins,
    Draw,
}

/// How tied cells are treated when sampling games.
///
/// Analytics never depend on the policy except through probability
/// normalization: [`series_outcome`] always compares raw win counts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TiePolicy {
    /// Tied rolls are re-rolled until one side wins.
    #[default]
    Reroll,
    /// Tied rolls are recorded but count for neither side.
    #[serde(rename = "nogame")]
    CountAsNoGame,
}

impl fmt::Display for TiePolicy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TiePolicy::Reroll => "reroll",
            TiePolicy::CountAsNoGame => "nogame",
        })
    }
}

/// Unreduced exact fraction, e.g. `6/9` stays `6/9`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Fraction {
    pub num: u64,
    pub den: u64,
}

impl Fraction {
    pub fn new(num: u64, den: u64) -> Self {
        Fraction { num, den }
    }

    pub fn reduced(self) -> Fraction {
        let g = gcd(self.num, self.den).max(1);
        Fraction::new(self.num / g, self.den / g)
    }

    /// Value equality (`6/9 == 2/3`).
    pub fn same_value(self, other: Fraction) -> bool {
        u128::from(self.num) * u128::from(other.den) == u128::from(other.num) * u128::from(self.den)
    }

    pub fn to_f64(self) -> f64 {
        self.num as f64 / self.den as f64
    }

    /// `5/9 (0.5556)`
    pub fn display_with_decimal(self) -> String {
        format!("{self} ({:.4})", self.to_f64())
    }
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn check_dims(a: &Allocation, b: &Allocation) -> Result<()> {
    if a.k() != b.k() {
        return Err(Error::DimensionMismatch {
            left: a.k(),
            right: b.k(),
        });
    }
    Ok(())
}

/// Builds the full cell grid. Budgets may differ.
pub fn matchup_table(a: &Allocation, b: &Allocation) -> Result<MatchupTable> {
    check_dims(a, b)?;
    let mut counts = MatchupCounts::default();
    let mut cells = Vec::with_capacity(a.k() * b.k());
    for &x in a.values() {
        for &y in b.values() {
            let c = Cell::compare(x, y);
            match c {
                Cell::AWin => counts.wins_a += 1,
                Cell::BWin => counts.wins_b += 1,
                Cell::Tie => counts.ties += 1,
            }
            cells.push(c);
        }
    }
    Ok(MatchupTable {
        k: a.k(),
        cells,
        counts,
    })
}

/// Cell counts without materialising the grid.
///
/// Both inputs must already be sorted non-increasing; counting is a single
/// merge pass.
pub(crate) fn sorted_counts(a: &[u64], b: &[u64]) -> MatchupCounts {
    // for each x in a: wins = #{y < x}, ties = #{y == x}; b is non-increasing
    let k = b.len();
    let mut counts = MatchupCounts::default();
    let (mut gt, mut ge) = (k, k);
    // walk a from smallest to largest so the boundaries in b only move left
    for &x in a.iter().rev() {
        while ge > 0 && b[ge - 1] < x {
            ge -= 1;
        }
        while gt > 0 && b[gt - 1] <= x {
            gt -= 1;
        }
        // b[..gt] > x, b[gt..ge] == x, b[ge..] < x
        counts.wins_a += (k - ge) as u64;
        counts.ties += (ge - gt) as u64;
        counts.wins_b += gt as u64;
    }
    counts
}

pub fn matchup_counts(a: &Allocation, b: &Allocation) -> Result<MatchupCounts> {
    check_dims(a, b)?;
    let pa = a.canonicalize();
    let pb = b.canonicalize();
    Ok(sorted_counts(pa.values(), pb.values()))
}

pub fn series_outcome(t: &MatchupTable) -> SeriesOutcome {
    t.outcome()
}

/// True iff `a` wins strictly more cells than `b`.
pub fn dominates(a: &Allocation, b: &Allocation) -> Result<bool> {
    Ok(matchup_counts(a, b)?.outcome() == SeriesOutcome::AWins)
}

pub fn win_probability(t: &MatchupTable, policy: TiePolicy) -> Result<Fraction> {
    t.counts.win_probability(policy)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn alloc(v: &[u64]) -> Allocation {
        Allocation::new(v.to_vec()).unwrap()
    }

    fn counts(a: &[u64], b: &[u64]) -> (u64, u64, u64) {
        let t = matchup_table(&alloc(a), &alloc(b)).unwrap();
        (t.wins_a(), t.wins_b(), t.ties())
    }

    #[test]
    fn grids_from_the_three_team_example() {
        assert_eq!(counts(&[1, 1, 4], &[2, 2, 2]), (3, 6, 0));
        assert_eq!(counts(&[2, 2, 2], &[3, 3, 0]), (3, 6, 0));
        assert_eq!(counts(&[1, 1, 4], &[3, 3, 0]), (5, 4, 0));
        assert_eq!(counts(&[2, 2, 2], &[2, 2, 2]), (0, 0, 9));
    }

    #[test]
    fn grid_cells_follow_value_order() {
        let t = matchup_table(&alloc(&[1, 1, 4]), &alloc(&[3, 3, 0])).unwrap();
        let expect = [
            [Cell::BWin, Cell::BWin, Cell::AWin],
            [Cell::BWin, Cell::BWin, Cell::AWin],
            [Cell::AWin, Cell::AWin, Cell::AWin],
        ];
        for (row, want) in t.rows().zip(expect.iter()) {
            assert_eq!(row, want);
        }
    }

    #[test]
    fn series_outcomes() {
        let t = |a: &[u64], b: &[u64]| matchup_table(&alloc(a), &alloc(b)).unwrap();
        assert_eq!(series_outcome(&t(&[1, 1, 4], &[2, 2, 2])), SeriesOutcome::BWins);
        assert_eq!(series_outcome(&t(&[1, 1, 4], &[3, 3, 0])), SeriesOutcome::AWins);
        assert_eq!(series_outcome(&t(&[3, 2, 1], &[2, 2, 2])), SeriesOutcome::Draw);
        assert_eq!(counts(&[3, 2, 1], &[2, 2, 2]), (3, 3, 3));
    }

    #[test]
    fn dominance_examples() {
        assert!(dominates(&alloc(&[2, 2, 2]), &alloc(&[1, 1, 4])).unwrap());
        assert!(!dominates(&alloc(&[3, 3, 0]), &alloc(&[1, 1, 4])).unwrap());
        for v in [[1u64, 1, 4], [2, 2, 2], [3, 3, 0], [6, 0, 0]] {
            assert!(!dominates(&alloc(&v), &alloc(&v)).unwrap());
        }
    }

    #[test]
    fn dimension_mismatch() {
        let err = matchup_table(&alloc(&[1, 1]), &alloc(&[1, 2, 3])).unwrap_err();
        assert_eq!(err, Error::DimensionMismatch { left: 2, right: 3 });
        assert!(dominates(&alloc(&[1]), &alloc(&[1, 0])).is_err());
    }

    #[test]
    fn unequal_budgets_allowed() {
        assert_eq!(counts(&[5, 5], &[1, 1]), (4, 0, 0));
    }

    #[test]
    fn win_probability_examples() {
        let t = |a: &[u64], b: &[u64]| matchup_table(&alloc(a), &alloc(b)).unwrap();
        assert_eq!(
            win_probability(&t(&[1, 1, 4], &[3, 3, 0]), TiePolicy::Reroll).unwrap(),
            Fraction::new(5, 9)
        );
        assert_eq!(
            win_probability(&t(&[2, 2, 2], &[2, 2, 2]), TiePolicy::CountAsNoGame).unwrap(),
            Fraction::new(0, 9)
        );
        assert_eq!(
            win_probability(&t(&[3, 2, 1], &[6, 0, 0]), TiePolicy::Reroll).unwrap(),
            Fraction::new(6, 9)
        );
        assert_eq!(
            win_probability(&t(&[2, 2, 2], &[2, 2, 2]), TiePolicy::Reroll),
            Err(Error::AllTies)
        );
        // ties leave the reroll denominator but stay in the no-game one
        let d = t(&[3, 2, 1], &[2, 2, 2]);
        assert_eq!(win_probability(&d, TiePolicy::Reroll).unwrap(), Fraction::new(3, 6));
        assert_eq!(win_probability(&d, TiePolicy::CountAsNoGame).unwrap(), Fraction::new(3, 9));
    }

    #[test]
    fn fraction_helpers() {
        let f = Fraction::new(6, 9);
        assert_eq!(f.to_string(), "6/9");
        assert_eq!(f.reduced(), Fraction::new(2, 3));
        assert!(f.same_value(Fraction::new(2, 3)));
        assert_eq!(Fraction::new(5, 9).display_with_decimal(), "5/9 (0.5556)");
        assert_eq!(Fraction::new(0, 9).reduced(), Fraction::new(0, 1));
    }

    fn naive(a: &[u64], b: &[u64]) -> MatchupCounts {
        let mut c = MatchupCounts::default();
        for x in a {
            for y in b {
                if x > y {
                    c.wins_a += 1;
                } else if x < y {
                    c.wins_b += 1;
                } else {
                    c.ties += 1;
                }
            }
        }
        c
    }

    #[test]
    fn merge_counting_matches_double_loop_small_spaces() {
        use crate::alloc::{enumerate_compositions, SpaceLimit};
        for budget in 0..=8 {
            for k in 1..=3 {
                let all = enumerate_compositions(budget, k, SpaceLimit::default()).unwrap();
                for a in &all {
                    for b in &all {
                        let want = naive(a.values(), b.values());
                        assert_eq!(matchup_table(a, b).unwrap().counts(), want);
                        assert_eq!(matchup_counts(a, b).unwrap(), want);
                    }
                }
            }
        }
    }

    fn pair() -> impl Strategy<Value = (Vec<u64>, Vec<u64>)> {
        (1usize..7).prop_flat_map(|k| {
            (
                prop::collection::vec(0u64..20, k),
                prop::collection::vec(0u64..20, k),
            )
        })
    }

    proptest! {
        #[test]
        fn conservation_and_mirror((a, b) in pair()) {
            let (a, b) = (alloc(&a), alloc(&b));
            let ab = matchup_table(&a, &b).unwrap().counts();
            let ba = matchup_table(&b, &a).unwrap().counts();
            let k = a.k() as u64;
            prop_assert_eq!(ab.total(), k * k);
            prop_assert_eq!(ab.mirrored(), ba);
            prop_assert_eq!(matchup_counts(&a, &b).unwrap(), ab);
        }

        #[test]
        fn antisymmetric((a, b) in pair()) {
            let (a, b) = (alloc(&a), alloc(&b));
            prop_assert!(!(dominates(&a, &b).unwrap() && dominates(&b, &a).unwrap()));
        }

        #[test]
        fn permutation_translation_scale((a, b) in pair(), shift in 0u64..100, scale in 1u64..10, rot in 0usize..7) {
            let base = matchup_table(&alloc(&a), &alloc(&b)).unwrap().counts();
            let mut ra = a.clone();
            let r = rot % ra.len();
            ra.rotate_left(r);
            let mut rb = b.clone();
            rb.reverse();
            prop_assert_eq!(matchup_table(&alloc(&ra), &alloc(&rb)).unwrap().counts(), base);
            let sa: Vec<u64> = a.iter().map(|v| v + shift).collect();
            let sb: Vec<u64> = b.iter().map(|v| v + shift).collect();
            prop_assert_eq!(matchup_table(&alloc(&sa), &alloc(&sb)).unwrap().counts(), base);
            let ma: Vec<u64> = a.iter().map(|v| v * scale).collect();
            let mb: Vec<u64> = b.iter().map(|v| v * scale).collect();
            prop_assert_eq!(matchup_table(&alloc(&ma), &alloc(&mb)).unwrap().counts(), base);
        }
    }
}

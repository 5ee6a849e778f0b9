//! Integer partitions, Young-diagram geometry and the 2-quotient.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::bijections::gamma_merge;
use crate::error::{Error, Result};
use crate::tableaux::{CellFill, Family, Letter, LetterSet, Tableau};

/// A box of a Young diagram, 1-based, rows counted from the top.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub const fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }

    /// `col - row`; the cell lies on diagonal `D_content`.
    pub fn content(self) -> i64 {
        self.col as i64 - self.row as i64
    }

    pub fn right(self) -> Cell {
        Cell::new(self.row, self.col + 1)
    }

    pub fn below(self) -> Cell {
        Cell::new(self.row + 1, self.col)
    }
}

/// True iff `parts` is nonincreasing with every entry at least 1.
pub fn is_partition(parts: &[i64]) -> bool {
    parts.iter().all(|&p| p >= 1) && parts.windows(2).all(|w| w[0] >= w[1])
}

/// A nonincreasing sequence of positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        let signed: Vec<i64> = parts.iter().map(|&p| p as i64).collect();
        if !is_partition(&signed) {
            return Err(Error::InvalidPartition(format!("{parts:?}")));
        }
        Ok(Partition(parts))
    }

    /// Drops zero parts; the remaining parts must already be nonincreasing.
    pub(crate) fn from_trimmed(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]), "{parts:?}");
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Length of row `row` (1-based); zero past the last row.
    pub fn row_len(&self, row: usize) -> usize {
        if row == 0 {
            return 0;
        }
        self.0.get(row - 1).copied().unwrap_or(0)
    }

    pub fn contains(&self, cell: Cell) -> bool {
        cell.row >= 1 && cell.col >= 1 && cell.col <= self.row_len(cell.row)
    }

    /// Cells in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(i, &len)| (1..=len).map(move |c| Cell::new(i + 1, c)))
    }

    /// Cells on diagonal `D_d`, from northwest to southeast.
    pub fn diagonal(&self, d: i64) -> Vec<Cell> {
        let first_row = if d >= 0 { 1 } else { (1 - d) as usize };
        (first_row..)
            .map(|r| Cell::new(r, (r as i64 + d) as usize))
            .take_while(|&c| self.contains(c))
            .collect()
    }

    /// Smallest and largest content present, `None` for the empty partition.
    pub fn content_range(&self) -> Option<(i64, i64)> {
        if self.is_empty() {
            return None;
        }
        Some((1 - self.len() as i64, self.0[0] as i64 - 1))
    }

    /// `lambda_k >= k` for `k` the number of parts; shifted tableaux live on these shapes.
    pub fn is_shifted_shape(&self) -> bool {
        self.0.last().is_none_or(|&last| last >= self.len())
    }

    /// Number of boxes with nonnegative content.
    pub fn up_size(&self) -> usize {
        self.0
            .iter()
            .enumerate()
            .map(|(i, &len)| len.saturating_sub(i))
            .sum()
    }

    /// `l_i = lambda_i + len - i` for `i = 1..=len`, where `len >= self.len()`
    /// pads with zero parts.
    pub fn beta_vector(&self, len: usize) -> Vec<usize> {
        assert!(len >= self.len());
        (1..=len).map(|i| self.row_len(i) + len - i).collect()
    }

    pub fn two_quotient(&self) -> (Partition, Partition) {
        two_quotient(self)
    }

    pub fn is_pavable(&self) -> bool {
        is_pavable(self)
    }

    /// All partitions of `n`, lexicographically decreasing.
    pub fn of_size(n: usize) -> Vec<Partition> {
        fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=rest.min(max)).rev() {
                cur.push(p);
                go(rest - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// All partitions of size at most `max_size`, by size then lexicographically decreasing.
    pub fn up_to_size(max_size: usize) -> Vec<Partition> {
        (0..=max_size).flat_map(Partition::of_size).collect()
    }

    /// The filling that puts `i` in every box of row `i`.
    pub fn minimal_filling(&self) -> Tableau {
        let rows = self
            .0
            .iter()
            .enumerate()
            .map(|(i, &len)| {
                let fill = CellFill::Letters(LetterSet::singleton(Letter::unprimed(i as u32 + 1)));
                vec![fill; len]
            })
            .collect();
        Tableau::new(Family::Plain, self.clone(), rows).expect("grid matches shape")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("]")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts `[4,2,1]`, `4,2,1`, `[]`, with optional whitespace.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let inner = t
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .unwrap_or(t)
            .trim();
        if inner.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = inner
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad part {p:?} in shape {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<usize>::deserialize(d)?;
        Partition::new(parts).map_err(serde::de::Error::custom)
    }
}

/// The 2-quotient `(mu, nu)` of `lambda`.
///
/// Beta numbers are taken over an even number of rows: the number of parts,
/// padded by one zero part when it is odd. With that convention `mu` is the
/// shape carried by type 1 dominoes and `nu` the shape carried by type 2.
pub fn two_quotient(lambda: &Partition) -> (Partition, Partition) {
    if lambda.is_empty() {
        return (Partition::empty(), Partition::empty());
    }
    let k = lambda.len() + lambda.len() % 2;
    let l = lambda.beta_vector(k);

    // Replace even (resp. odd) entries right to left by 0,2,4,... (resp. 1,3,5,...).
    let mut m = vec![0usize; k];
    let (mut next_even, mut next_odd) = (0usize, 1usize);
    for i in (0..k).rev() {
        if l[i].is_multiple_of(2) {
            m[i] = next_even;
            next_even += 2;
        } else {
            m[i] = next_odd;
            next_odd += 2;
        }
    }

    let half_diff = |parity: usize| -> Partition {
        let parts = (0..k)
            .filter(|&i| l[i] % 2 == parity)
            .map(|i| {
                assert!(l[i] >= m[i], "beta entry below its replacement");
                (l[i] - m[i]) / 2
            })
            .collect();
        Partition::from_trimmed(parts)
    };
    (half_diff(0), half_diff(1))
}

/// Decided by `|lambda| = 2(|mu| + |nu|)`, i.e. the 2-core is empty.
pub fn is_pavable(lambda: &Partition) -> bool {
    let (mu, nu) = two_quotient(lambda);
    lambda.size() == 2 * (mu.size() + nu.size())
}

/// The pavable partition with 2-quotient `(mu, nu)`, built by merging the
/// minimal fillings of `mu` and `nu` into a domino tableau.
pub fn inverse_two_quotient(mu: &Partition, nu: &Partition) -> Partition {
    let merged = gamma_merge(Family::Plain, &mu.minimal_filling(), &nu.minimal_filling())
        .expect("merging minimal fillings always succeeds");
    merged.shape().clone()
}

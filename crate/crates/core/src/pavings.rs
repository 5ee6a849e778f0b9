//! Dominoes, pavings, types and the up/down split of a shifted paving.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partitions::{Cell, Partition};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Orientation {
    #[serde(rename = "H")]
    Horizontal,
    #[serde(rename = "V")]
    Vertical,
}

impl Orientation {
    pub fn letter(self) -> char {
        match self {
            Orientation::Horizontal => 'H',
            Orientation::Vertical => 'V',
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DominoType {
    One,
    Two,
}

impl DominoType {
    pub fn number(self) -> u8 {
        match self {
            DominoType::One => 1,
            DominoType::Two => 2,
        }
    }
}

/// A 1x2 or 2x1 piece, ordered by top-left cell then orientation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Domino {
    pub row: usize,
    pub col: usize,
    pub orient: Orientation,
}

impl Domino {
    pub const fn new(row: usize, col: usize, orient: Orientation) -> Self {
        Domino { row, col, orient }
    }

    pub const fn h(row: usize, col: usize) -> Self {
        Domino::new(row, col, Orientation::Horizontal)
    }

    pub const fn v(row: usize, col: usize) -> Self {
        Domino::new(row, col, Orientation::Vertical)
    }

    pub fn top_left(self) -> Cell {
        Cell::new(self.row, self.col)
    }

    pub fn cells(self) -> [Cell; 2] {
        let a = self.top_left();
        match self.orient {
            Orientation::Horizontal => [a, a.right()],
            Orientation::Vertical => [a, a.below()],
        }
    }

    pub fn covers(self, cell: Cell) -> bool {
        self.cells().contains(&cell)
    }

    /// Smaller of the two covered contents.
    pub fn min_content(self) -> i64 {
        match self.orient {
            Orientation::Horizontal => self.top_left().content(),
            Orientation::Vertical => self.top_left().content() - 1,
        }
    }

    pub fn crossing_diagonal(self) -> i64 {
        let m = self.min_content();
        if m.rem_euclid(2) == 0 {
            m
        } else {
            m + 1
        }
    }

    /// Type 1 iff the larger covered content is even.
    pub fn domino_type(self) -> DominoType {
        if (self.min_content() + 1).rem_euclid(2) == 0 {
            DominoType::One
        } else {
            DominoType::Two
        }
    }

    /// The covered cell lying on the crossing diagonal.
    pub fn even_cell(self) -> Cell {
        let [a, b] = self.cells();
        if a.content() == self.crossing_diagonal() {
            a
        } else {
            b
        }
    }

    /// Crossing diagonal at least 0.
    pub fn is_up(self) -> bool {
        self.crossing_diagonal() >= 0
    }
}

impl fmt::Display for Domino {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({},{})", self.orient.letter(), self.row, self.col)
    }
}

pub fn domino_type(d: Domino) -> DominoType {
    d.domino_type()
}

pub fn crossing_diagonal(d: Domino) -> i64 {
    d.crossing_diagonal()
}

/// A tiling of a Young diagram by dominoes, stored sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Paving {
    shape: Partition,
    dominoes: Vec<Domino>,
}

impl Paving {
    /// Fails unless the dominoes tile `shape` exactly.
    pub fn new(shape: Partition, mut dominoes: Vec<Domino>) -> Result<Self> {
        dominoes.sort();
        let mut seen = std::collections::HashSet::new();
        for d in &dominoes {
            for c in d.cells() {
                if !shape.contains(c) {
                    return Err(Error::Malformed(format!("domino {d} leaves shape {shape}")));
                }
                if !seen.insert(c) {
                    return Err(Error::Malformed(format!("domino {d} overlaps another")));
                }
            }
        }
        if seen.len() != shape.size() {
            return Err(Error::Malformed(format!("dominoes do not cover shape {shape}")));
        }
        Ok(Paving { shape, dominoes })
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn dominoes(&self) -> &[Domino] {
        &self.dominoes
    }

    /// The domino covering `cell`, if any.
    pub fn domino_at(&self, cell: Cell) -> Option<Domino> {
        self.dominoes.iter().copied().find(|d| d.covers(cell))
    }

    pub fn count_type(&self, t: DominoType) -> usize {
        self.dominoes.iter().filter(|d| d.domino_type() == t).count()
    }
}

impl fmt::Display for Paving {
    /// `H(1,1) V(2,1)`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.dominoes.iter().map(|d| d.to_string()).collect();
        f.write_str(&parts.join(" "))
    }
}

impl<'de> Deserialize<'de> for Paving {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            shape: Partition,
            dominoes: Vec<Domino>,
        }
        let raw = Raw::deserialize(de)?;
        Paving::new(raw.shape, raw.dominoes).map_err(serde::de::Error::custom)
    }
}

/// Every paving of `lambda`, in the order found by placing a domino on the
/// first uncovered cell (row-major), horizontal before vertical.
pub fn enumerate_pavings(lambda: &Partition) -> Vec<Paving> {
    let mut out = Vec::new();
    if lambda.size() % 2 == 1 {
        return out;
    }
    let mut covered: Vec<Vec<bool>> = lambda.parts().iter().map(|&l| vec![false; l]).collect();
    let mut placed = Vec::new();
    pave(lambda, &mut covered, &mut placed, &mut out);
    out
}

fn pave(lambda: &Partition, covered: &mut [Vec<bool>], placed: &mut Vec<Domino>, out: &mut Vec<Paving>) {
    let first = covered
        .iter()
        .enumerate()
        .find_map(|(r, row)| row.iter().position(|&c| !c).map(|c| (r, c)));
    let Some((r, c)) = first else {
        out.push(Paving { shape: lambda.clone(), dominoes: sorted(placed) });
        return;
    };
    if c + 1 < covered[r].len() && !covered[r][c + 1] {
        covered[r][c] = true;
        covered[r][c + 1] = true;
        placed.push(Domino::h(r + 1, c + 1));
        pave(lambda, covered, placed, out);
        placed.pop();
        covered[r][c] = false;
        covered[r][c + 1] = false;
    }
    if r + 1 < covered.len() && c < covered[r + 1].len() && !covered[r + 1][c] {
        covered[r][c] = true;
        covered[r + 1][c] = true;
        placed.push(Domino::v(r + 1, c + 1));
        pave(lambda, covered, placed, out);
        placed.pop();
        covered[r][c] = false;
        covered[r + 1][c] = false;
    }
}

fn sorted(ds: &[Domino]) -> Vec<Domino> {
    let mut v = ds.to_vec();
    v.sort();
    v
}

/// Staircase condition on the 2-quotient plus the forbidden vertical domino rule.
pub fn is_shifted_paving(p: &Paving) -> bool {
    let (mu, nu) = p.shape.two_quotient();
    if !mu.is_shifted_shape() || !nu.is_shifted_shape() {
        return false;
    }
    !p.dominoes.iter().any(|&d| is_forbidden(p, d))
}

/// A vertical domino on `D_0` whose left neighbours all lie below `D_0`.
/// In column 1 there are no left neighbours and the domino is allowed.
fn is_forbidden(p: &Paving, d: Domino) -> bool {
    if d.orient != Orientation::Vertical || d.crossing_diagonal() != 0 || d.col == 1 {
        return false;
    }
    [Cell::new(d.row, d.col - 1), Cell::new(d.row + 1, d.col - 1)]
        .into_iter()
        .filter_map(|c| p.domino_at(c))
        .all(|n| !n.is_up())
}

pub fn is_shifted_pavable(lambda: &Partition) -> bool {
    let (mu, nu) = lambda.two_quotient();
    lambda.is_pavable()
        && mu.is_shifted_shape()
        && nu.is_shifted_shape()
        && enumerate_pavings(lambda).iter().any(is_shifted_paving)
}

/// All shifted pavings of `lambda`.
pub fn shifted_pavings(lambda: &Partition) -> Vec<Paving> {
    if !lambda.is_pavable() {
        return Vec::new();
    }
    enumerate_pavings(lambda).into_iter().filter(is_shifted_paving).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RegionSplit {
    pub up: Vec<Domino>,
    pub down: Vec<Domino>,
}

pub fn region_split(p: &Paving) -> RegionSplit {
    let (up, down) = p.dominoes.iter().partition(|d| d.is_up());
    RegionSplit { up, down }
}

/// Shifted pavings of `lambda` grouped by their up region, each group sorted
/// so that its first paving is the lexicographically least.
pub(crate) fn shifted_pavings_by_up(lambda: &Partition) -> BTreeMap<Vec<Domino>, Vec<Paving>> {
    let mut groups: BTreeMap<Vec<Domino>, Vec<Paving>> = BTreeMap::new();
    for p in shifted_pavings(lambda) {
        groups.entry(region_split(&p).up).or_default().push(p);
    }
    for g in groups.values_mut() {
        g.sort_by(|a, b| a.dominoes.cmp(&b.dominoes));
    }
    groups
}

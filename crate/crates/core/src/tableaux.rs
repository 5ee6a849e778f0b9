//! Letters, cell fillings and the four flat tableau families.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partitions::{Cell, Partition};
use crate::polyring::Monomial;

/// Largest letter index a [`LetterSet`] can hold.
pub const MAX_LETTER: u32 = 32;

/// A letter of the alphabet `1' < 1 < 2' < 2 < ...`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Letter {
    index: u32,
    primed: bool,
}

impl Letter {
    pub fn new(index: u32, primed: bool) -> Self {
        assert!((1..=MAX_LETTER).contains(&index), "letter index {index} out of range");
        Letter { index, primed }
    }

    pub fn unprimed(index: u32) -> Self {
        Letter::new(index, false)
    }

    pub fn primed(index: u32) -> Self {
        Letter::new(index, true)
    }

    pub fn index(self) -> u32 {
        self.index
    }

    pub fn is_primed(self) -> bool {
        self.primed
    }

    /// `2i - 1` for `i'`, `2i` for `i`.
    pub fn rank(self) -> u32 {
        2 * self.index - u32::from(self.primed)
    }

    pub fn from_rank(rank: u32) -> Self {
        Letter::new(rank.div_ceil(2), rank % 2 == 1)
    }
}

impl Ord for Letter {
    fn cmp(&self, other: &Self) -> Ordering {
        self.rank().cmp(&other.rank())
    }
}

impl PartialOrd for Letter {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.index, if self.primed { "'" } else { "" })
    }
}

impl FromStr for Letter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let (digits, primed) = match t.strip_suffix('\'') {
            Some(d) => (d, true),
            None => (t, false),
        };
        let index: u32 = digits
            .parse()
            .map_err(|_| Error::Parse(format!("bad letter {s:?}")))?;
        if !(1..=MAX_LETTER).contains(&index) {
            return Err(Error::Parse(format!("letter {s:?} out of range 1..={MAX_LETTER}")));
        }
        Ok(Letter::new(index, primed))
    }
}

/// A nonempty finite set of letters, stored as a bitmask over ranks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct LetterSet(u64);

impl LetterSet {
    pub fn singleton(l: Letter) -> Self {
        LetterSet(1 << (l.rank() - 1))
    }

    /// `None` for an empty iterator.
    pub fn from_letters<I: IntoIterator<Item = Letter>>(letters: I) -> Option<Self> {
        let bits = letters
            .into_iter()
            .fold(0u64, |acc, l| acc | (1 << (l.rank() - 1)));
        (bits != 0).then_some(LetterSet(bits))
    }

    pub fn min(self) -> Letter {
        Letter::from_rank(self.min_rank())
    }

    pub fn max(self) -> Letter {
        Letter::from_rank(self.max_rank())
    }

    pub(crate) fn min_rank(self) -> u32 {
        self.0.trailing_zeros() + 1
    }

    pub(crate) fn max_rank(self) -> u32 {
        64 - self.0.leading_zeros()
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    /// Always false for sets built by this module; sets are nonempty.
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_singleton(self) -> bool {
        self.len() == 1
    }

    pub fn has_primes(self) -> bool {
        self.0 & PRIMED_BITS != 0
    }

    pub(crate) fn primed_bits(self) -> u64 {
        self.0 & PRIMED_BITS
    }

    pub(crate) fn unprimed_bits(self) -> u64 {
        self.0 & !PRIMED_BITS
    }

    pub fn contains(self, l: Letter) -> bool {
        self.0 & (1 << (l.rank() - 1)) != 0
    }

    pub fn iter(self) -> impl Iterator<Item = Letter> {
        (1..=64u32)
            .filter(move |r| self.0 & (1 << (r - 1)) != 0)
            .map(Letter::from_rank)
    }

    /// `max(self) <= min(other)`.
    pub fn le(self, other: LetterSet) -> bool {
        self.max_rank() <= other.min_rank()
    }

    /// `max(self) < min(other)`.
    pub fn lt(self, other: LetterSet) -> bool {
        self.max_rank() < other.min_rank()
    }

    /// The singleton of the minimum letter.
    pub fn restrict_to_min(self) -> LetterSet {
        LetterSet(self.0 & self.0.wrapping_neg())
    }
}

// Primed letters sit at odd ranks, i.e. even bit positions.
const PRIMED_BITS: u64 = 0x5555_5555_5555_5555;

impl Ord for LetterSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for LetterSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for LetterSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_singleton() {
            return write!(f, "{}", (*self).min());
        }
        f.write_str("{")?;
        for (i, l) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{l}")?;
        }
        f.write_str("}")
    }
}

impl FromStr for LetterSet {
    type Err = Error;

    /// `3`, `3'` or `{1,3'}`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let inner = t
            .strip_prefix('{')
            .and_then(|r| r.strip_suffix('}'))
            .unwrap_or(t);
        let letters = inner
            .split(',')
            .map(str::parse)
            .collect::<Result<Vec<Letter>>>()?;
        if letters.len() != letters.iter().collect::<std::collections::BTreeSet<_>>().len() {
            return Err(Error::Parse(format!("repeated letter in {s:?}")));
        }
        LetterSet::from_letters(letters).ok_or_else(|| Error::Parse(format!("empty set {s:?}")))
    }
}

/// The content of a box: the marker `X` or a set of letters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CellFill {
    X,
    Letters(LetterSet),
}

impl CellFill {
    pub fn letter(l: Letter) -> Self {
        CellFill::Letters(LetterSet::singleton(l))
    }

    pub fn letters(self) -> Option<LetterSet> {
        match self {
            CellFill::X => None,
            CellFill::Letters(s) => Some(s),
        }
    }

    pub fn is_x(self) -> bool {
        matches!(self, CellFill::X)
    }

    /// Number of letters; zero for `X`.
    pub fn cardinality(self) -> usize {
        self.letters().map_or(0, LetterSet::len)
    }

    pub fn restrict_to_min(self) -> Self {
        match self {
            CellFill::X => CellFill::X,
            CellFill::Letters(s) => CellFill::Letters(s.restrict_to_min()),
        }
    }
}

impl fmt::Display for CellFill {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CellFill::X => f.write_str("X"),
            CellFill::Letters(s) => write!(f, "{s}"),
        }
    }
}

impl FromStr for CellFill {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.trim() == "X" {
            Ok(CellFill::X)
        } else {
            s.parse().map(CellFill::Letters)
        }
    }
}

/// Single- or set-valued, unshifted or shifted.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    Plain,
    SetValued,
    Shifted,
    ShiftedSetValued,
}

impl Family {
    pub const ALL: [Family; 4] = [
        Family::Plain,
        Family::SetValued,
        Family::Shifted,
        Family::ShiftedSetValued,
    ];

    pub fn is_shifted(self) -> bool {
        matches!(self, Family::Shifted | Family::ShiftedSetValued)
    }

    pub fn is_set_valued(self) -> bool {
        matches!(self, Family::SetValued | Family::ShiftedSetValued)
    }

    /// The single-valued family with the same shifting.
    pub fn single_valued(self) -> Family {
        if self.is_shifted() {
            Family::Shifted
        } else {
            Family::Plain
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Family::Plain => "plain",
            Family::SetValued => "set-valued",
            Family::Shifted => "shifted",
            Family::ShiftedSetValued => "shifted-set-valued",
        }
    }

    /// Every fill a box may take with letters of index at most `n`, in
    /// increasing [`LetterSet`] order.
    pub fn alphabet(self, n: u32) -> Vec<LetterSet> {
        assert!(n <= MAX_LETTER);
        let base: Vec<Letter> = (1..=n)
            .flat_map(|i| {
                let primed = self.is_shifted().then(|| Letter::primed(i));
                primed.into_iter().chain(std::iter::once(Letter::unprimed(i)))
            })
            .collect();
        let mut out: Vec<LetterSet> = if self.is_set_valued() {
            (1u64..(1 << base.len()))
                .map(|mask| {
                    LetterSet::from_letters(
                        base.iter()
                            .enumerate()
                            .filter(|(j, _)| mask & (1 << j) != 0)
                            .map(|(_, &l)| l),
                    )
                    .unwrap()
                })
                .collect()
        } else {
            base.into_iter().map(LetterSet::singleton).collect()
        };
        out.sort();
        out
    }

    /// Whether a letter set is an admissible fill for one box or domino.
    pub(crate) fn admits(self, s: LetterSet) -> bool {
        (self.is_shifted() || !s.has_primes()) && (self.is_set_valued() || s.is_singleton())
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s.trim())
            .ok_or_else(|| {
                Error::Parse(format!(
                    "unknown family {s:?} (expected plain, set-valued, shifted, shifted-set-valued)"
                ))
            })
    }
}

/// A filling of a Young diagram, row by row.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tableau {
    family: Family,
    shape: Partition,
    rows: Vec<Vec<CellFill>>,
}

impl Tableau {
    /// Fails if the grid does not have the row lengths of `shape`.
    pub fn new(family: Family, shape: Partition, rows: Vec<Vec<CellFill>>) -> Result<Self> {
        let lens: Vec<usize> = rows.iter().map(Vec::len).collect();
        if lens != shape.parts() {
            return Err(Error::Malformed(format!(
                "grid row lengths {lens:?} do not match shape {shape}"
            )));
        }
        Ok(Tableau { family, shape, rows })
    }

    pub fn empty(family: Family) -> Self {
        Tableau { family, shape: Partition::empty(), rows: Vec::new() }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<CellFill>] {
        &self.rows
    }

    pub fn get(&self, cell: Cell) -> Option<CellFill> {
        self.rows.get(cell.row.checked_sub(1)?)?.get(cell.col.checked_sub(1)?).copied()
    }

    pub fn cells(&self) -> impl Iterator<Item = (Cell, CellFill)> + '_ {
        self.shape.cells().map(|c| (c, self.rows[c.row - 1][c.col - 1]))
    }

    /// Total number of letters over all boxes.
    pub fn cardinality(&self) -> usize {
        self.cells().map(|(_, f)| f.cardinality()).sum()
    }

    /// Exponent of `x_i` counts `i` and `i'` together. Fails on a letter past `n`.
    pub fn weight(&self, n: usize) -> Result<Monomial> {
        let mut exps = vec![0u32; n];
        for (_, fill) in self.cells() {
            for l in fill.letters().into_iter().flat_map(LetterSet::iter) {
                let i = l.index() as usize;
                if i > n {
                    return Err(Error::LetterOutOfRange { index: l.index(), n });
                }
                exps[i - 1] += 1;
            }
        }
        Ok(Monomial::new(exps))
    }

    /// Same shape with every box restricted to its smallest letter.
    pub fn restrict_to_min(&self) -> Tableau {
        Tableau {
            family: self.family.single_valued(),
            shape: self.shape.clone(),
            rows: self
                .rows
                .iter()
                .map(|r| r.iter().map(|f| f.restrict_to_min()).collect())
                .collect(),
        }
    }

    pub fn with_family(mut self, family: Family) -> Self {
        self.family = family;
        self
    }
}

impl fmt::Display for Tableau {
    /// Rows separated by ` / `, e.g. `1,1,2 / 2,3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                f.write_str(" / ")?;
            }
            for (j, c) in row.iter().enumerate() {
                if j > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{c}")?;
            }
        }
        Ok(())
    }
}

/// True iff `t` satisfies the row, column and prime rules of its family.
pub fn validate_tableau(t: &Tableau) -> bool {
    let family = t.family;
    let shifted = family.is_shifted();
    if shifted && !t.shape.is_shifted_shape() {
        return false;
    }
    for (cell, fill) in t.cells() {
        match fill {
            CellFill::X if !(shifted && cell.content() < 0) => return false,
            CellFill::Letters(_) if shifted && cell.content() < 0 => return false,
            CellFill::Letters(s) if !family.admits(s) => return false,
            _ => {}
        }
    }
    let mut row_primes = vec![0u64; t.shape.len() + 1];
    let mut col_unprimed = vec![0u64; t.shape.row_len(1) + 1];
    for (cell, fill) in t.cells() {
        let Some(s) = fill.letters() else { continue };
        if cell.col > 1 {
            if let Some(left) = t.get(Cell::new(cell.row, cell.col - 1)).and_then(CellFill::letters) {
                if !left.le(s) {
                    return false;
                }
            }
        }
        if cell.row > 1 {
            if let Some(above) = t.get(Cell::new(cell.row - 1, cell.col)).and_then(CellFill::letters) {
                let ok = if shifted { above.le(s) } else { above.lt(s) };
                if !ok {
                    return false;
                }
            }
        }
        if shifted {
            if row_primes[cell.row] & s.primed_bits() != 0
                || col_unprimed[cell.col] & s.unprimed_bits() != 0
            {
                return false;
            }
            row_primes[cell.row] |= s.primed_bits();
            col_unprimed[cell.col] |= s.unprimed_bits();
        }
    }
    true
}

/// Per-diagonal readings, lowest diagonal first, each read northwest to southeast.
///
/// Segment `j` comes from diagonal `first + stride * j`; flat tableaux use
/// stride 1 and domino tableaux stride 2.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ReadingWord {
    pub first: i64,
    pub stride: i64,
    pub segments: Vec<Vec<CellFill>>,
}

impl ReadingWord {
    pub fn diagonal_of(&self, segment: usize) -> i64 {
        self.first + self.stride * segment as i64
    }

    pub fn len(&self) -> usize {
        self.segments.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.segments.iter().all(Vec::is_empty)
    }
}

impl fmt::Display for ReadingWord {
    /// `4 / 3,5 / 1,3,7`; sets with several letters in braces.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, seg) in self.segments.iter().enumerate() {
            if i > 0 {
                f.write_str(" / ")?;
            }
            for (j, c) in seg.iter().enumerate() {
                if j > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{c}")?;
            }
        }
        Ok(())
    }
}

/// Diagonal reading word. Shifted families start at `D_0` and omit the `X` boxes.
pub fn reading_word(t: &Tableau) -> ReadingWord {
    full_reading(t, if t.family.is_shifted() { Some(0) } else { None })
}

fn full_reading(t: &Tableau, from: Option<i64>) -> ReadingWord {
    let Some((lo, hi)) = t.shape.content_range() else {
        return ReadingWord { first: from.unwrap_or(0), stride: 1, segments: Vec::new() };
    };
    let lo = from.map_or(lo, |f| f.max(lo));
    let segments = (lo..=hi)
        .map(|d| t.shape.diagonal(d).into_iter().map(|c| t.get(c).unwrap()).collect())
        .collect();
    ReadingWord { first: lo, stride: 1, segments }
}

/// Lays the segments on consecutive diagonals starting at `first`, then checks
/// that the boxes form a Young diagram. No family rules are checked here.
pub(crate) fn grid_from_diagonals(
    first: i64,
    segments: &[Vec<CellFill>],
) -> Result<(Partition, Vec<Vec<CellFill>>)> {
    let mut placed: Vec<(Cell, CellFill)> = Vec::new();
    for (j, seg) in segments.iter().enumerate() {
        let d = first + j as i64;
        let first_row = if d >= 0 { 1 } else { (1 - d) as usize };
        for (i, &fill) in seg.iter().enumerate() {
            let r = first_row + i;
            placed.push((Cell::new(r, (r as i64 + d) as usize), fill));
        }
    }
    let nrows = placed.iter().map(|(c, _)| c.row).max().unwrap_or(0);
    let mut rows: Vec<Vec<Option<CellFill>>> = vec![Vec::new(); nrows];
    for (c, fill) in placed {
        let row = &mut rows[c.row - 1];
        if row.len() < c.col {
            row.resize(c.col, None);
        }
        row[c.col - 1] = Some(fill);
    }
    let rows: Vec<Vec<CellFill>> = rows
        .into_iter()
        .map(|r| r.into_iter().collect::<Option<Vec<_>>>())
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| Error::Reconstruction("boxes are not left-justified".into()))?;
    let lens: Vec<usize> = rows.iter().map(Vec::len).collect();
    let shape = Partition::new(lens.clone())
        .map_err(|_| Error::Reconstruction(format!("row lengths {lens:?} are not a partition")))?;
    Ok((shape, rows))
}

/// The unique tableau of `family` whose reading word is `w`.
///
/// For shifted families the word starts at `D_0` and the `X` staircase below
/// it is filled in.
pub fn tableau_from_reading_word(family: Family, w: &ReadingWord) -> Result<Tableau> {
    if w.stride != 1 {
        return Err(Error::Reconstruction("domino reading word given for a flat tableau".into()));
    }
    let (first, segments) = if family.is_shifted() && !w.segments.is_empty() {
        if w.first != 0 {
            return Err(Error::Reconstruction("shifted reading words start at D_0".into()));
        }
        let k = w.segments[0].len();
        let mut all: Vec<Vec<CellFill>> = (1..k).rev().map(|j| vec![CellFill::X; k - j]).collect();
        all.extend(w.segments.iter().cloned());
        (-(k as i64 - 1), all)
    } else {
        (w.first, w.segments.clone())
    };
    let (shape, rows) = grid_from_diagonals(first, &segments)?;
    if shape.size() != segments.iter().map(Vec::len).sum::<usize>() {
        return Err(Error::Reconstruction("inconsistent diagonal lengths".into()));
    }
    let t = Tableau::new(family, shape, rows)?;
    // A nonempty word that does not start on the lowest diagonal of its shape
    // describes a different segment layout.
    if full_reading(&t, family.is_shifted().then_some(0)) != *w {
        return Err(Error::Reconstruction("diagonal lengths do not fit one shape".into()));
    }
    if !validate_tableau(&t) {
        return Err(Error::Reconstruction(format!("filling violates {family} rules")));
    }
    Ok(t)
}

/// Calls `visit` on every valid tableau of the given family and shape with
/// letters of index at most `n`, in lexicographic row-major order.
pub fn for_each_tableau(
    family: Family,
    shape: &Partition,
    n: u32,
    mut visit: impl FnMut(&Tableau),
) -> Result<()> {
    if family.is_shifted() && !shape.is_shifted_shape() {
        return Err(Error::InvalidShiftedShape(shape.clone()));
    }
    let alphabet = family.alphabet(n);
    let cells: Vec<Cell> = shape.cells().collect();
    let mut t = Tableau {
        family,
        shape: shape.clone(),
        rows: shape.parts().iter().map(|&l| vec![CellFill::X; l]).collect(),
    };
    let mut search = FlatSearch {
        family,
        alphabet: &alphabet,
        cells: &cells,
        row_primes: vec![0; shape.len() + 1],
        col_unprimed: vec![0; shape.row_len(1) + 1],
    };
    search.fill(0, &mut t, &mut visit);
    Ok(())
}

struct FlatSearch<'a> {
    family: Family,
    alphabet: &'a [LetterSet],
    cells: &'a [Cell],
    row_primes: Vec<u64>,
    col_unprimed: Vec<u64>,
}

impl FlatSearch<'_> {
    fn fill(&mut self, i: usize, t: &mut Tableau, visit: &mut impl FnMut(&Tableau)) {
        let Some(&cell) = self.cells.get(i) else {
            visit(t);
            return;
        };
        let shifted = self.family.is_shifted();
        if shifted && cell.content() < 0 {
            t.rows[cell.row - 1][cell.col - 1] = CellFill::X;
            self.fill(i + 1, t, visit);
            return;
        }
        // Lowest admissible rank for the minimum of this box.
        let mut bound = 1;
        if let Some(left) = cell.col.checked_sub(1).filter(|&c| c >= 1) {
            if let CellFill::Letters(s) = t.rows[cell.row - 1][left - 1] {
                bound = bound.max(s.max_rank());
            }
        }
        if cell.row > 1 {
            if let CellFill::Letters(s) = t.rows[cell.row - 2][cell.col - 1] {
                bound = bound.max(if shifted { s.max_rank() } else { s.max_rank() + 1 });
            }
        }
        let alphabet = self.alphabet;
        for &s in alphabet.iter().filter(|s| s.min_rank() >= bound) {
            if shifted {
                if self.row_primes[cell.row] & s.primed_bits() != 0
                    || self.col_unprimed[cell.col] & s.unprimed_bits() != 0
                {
                    continue;
                }
                self.row_primes[cell.row] ^= s.primed_bits();
                self.col_unprimed[cell.col] ^= s.unprimed_bits();
            }
            t.rows[cell.row - 1][cell.col - 1] = CellFill::Letters(s);
            self.fill(i + 1, t, visit);
            if shifted {
                self.row_primes[cell.row] ^= s.primed_bits();
                self.col_unprimed[cell.col] ^= s.unprimed_bits();
            }
        }
    }
}

/// All valid tableaux of a family and shape with letter indices at most `max_letter`.
pub fn enumerate_tableaux(family: Family, shape: &Partition, max_letter: u32) -> Result<Vec<Tableau>> {
    let mut out = Vec::new();
    for_each_tableau(family, shape, max_letter, |t| out.push(t.clone()))?;
    Ok(out)
}

/// Builds a tableau from rows of fill strings such as `["1", "{1,3'}", "X"]`.
pub fn tableau_from_strs(family: Family, rows: &[&[&str]]) -> Result<Tableau> {
    let grid = rows
        .iter()
        .map(|r| r.iter().map(|s| s.parse()).collect::<Result<Vec<CellFill>>>())
        .collect::<Result<Vec<_>>>()?;
    let shape = Partition::new(grid.iter().map(Vec::len).collect())?;
    Tableau::new(family, shape, grid)
}

//! Fillings of domino pavings in the four families.

use std::fmt;

use crate::error::{Error, Result};
use crate::partitions::Partition;
use crate::pavings::{enumerate_pavings, shifted_pavings_by_up, Domino, Paving};
use crate::polyring::Monomial;
use crate::tableaux::{CellFill, Family, LetterSet, ReadingWord};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FilledDomino {
    pub domino: Domino,
    pub fill: CellFill,
}

impl FilledDomino {
    pub fn new(domino: Domino, fill: CellFill) -> Self {
        FilledDomino { domino, fill }
    }
}

impl fmt::Display for FilledDomino {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}={}", self.domino, self.fill)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DominoTableau {
    family: Family,
    paving: Paving,
    // Aligned with `paving.dominoes()`.
    fills: Vec<CellFill>,
}

impl DominoTableau {
    /// Fails unless the dominoes tile `shape`. Family rules are checked by
    /// [`validate_domino_tableau`].
    pub fn new(family: Family, shape: Partition, dominoes: Vec<FilledDomino>) -> Result<Self> {
        let mut dominoes = dominoes;
        dominoes.sort();
        let paving = Paving::new(shape, dominoes.iter().map(|f| f.domino).collect())?;
        Ok(DominoTableau { family, paving, fills: dominoes.into_iter().map(|f| f.fill).collect() })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn shape(&self) -> &Partition {
        self.paving.shape()
    }

    pub fn paving(&self) -> &Paving {
        &self.paving
    }

    pub fn dominoes(&self) -> impl Iterator<Item = FilledDomino> + '_ {
        self.paving
            .dominoes()
            .iter()
            .zip(&self.fills)
            .map(|(&domino, &fill)| FilledDomino { domino, fill })
    }

    pub fn fill_of(&self, d: Domino) -> Option<CellFill> {
        let i = self.paving.dominoes().binary_search(&d).ok()?;
        Some(self.fills[i])
    }

    /// Total number of letters.
    pub fn cardinality(&self) -> usize {
        self.fills.iter().map(|f| f.cardinality()).sum()
    }

    /// Number of dominoes on `D_0` or above.
    pub fn up_count(&self) -> usize {
        self.paving.dominoes().iter().filter(|d| d.is_up()).count()
    }

    pub fn weight(&self, n: usize) -> Result<Monomial> {
        let mut exps = vec![0u32; n];
        for l in self.fills.iter().filter_map(|f| f.letters()).flat_map(LetterSet::iter) {
            let i = l.index() as usize;
            if i > n {
                return Err(Error::LetterOutOfRange { index: l.index(), n });
            }
            exps[i - 1] += 1;
        }
        Ok(Monomial::new(exps))
    }

    /// Every domino restricted to its smallest letter.
    pub fn restrict_to_min(&self) -> DominoTableau {
        DominoTableau {
            family: self.family.single_valued(),
            paving: self.paving.clone(),
            fills: self.fills.iter().map(|f| f.restrict_to_min()).collect(),
        }
    }

    pub fn with_family(mut self, family: Family) -> Self {
        self.family = family;
        self
    }
}

impl fmt::Display for DominoTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, fd) in self.dominoes().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{fd}")?;
        }
        Ok(())
    }
}

/// Some cell of `f2` is weakly below and weakly right of the top-left cell of `f1`.
pub fn weakly_southeast(f1: Domino, f2: Domino) -> bool {
    f2.cells().iter().any(|c| c.row >= f1.row && c.col >= f1.col)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Rel {
    /// `min(a) <= min(b)`.
    MinLe,
    /// `min(a) < min(b)`.
    MinLt,
    /// `max(a) <= min(b)`.
    SetLe,
    /// `max(a) < min(b)`.
    SetLt,
    /// `max(a) <= min(b)`, strict when `max(a)` is primed.
    SetLeStrictPrimed,
    /// `max(a) <= min(b)`, strict when `max(a)` is unprimed.
    SetLeStrictUnprimed,
    /// Not both minima equal to the same unprimed letter.
    DistinctUnprimedMin,
    /// Not both minima equal to the same primed letter.
    DistinctPrimedMin,
}

impl Rel {
    fn holds(self, a: LetterSet, b: LetterSet) -> bool {
        match self {
            Rel::MinLe => a.min_rank() <= b.min_rank(),
            Rel::MinLt => a.min_rank() < b.min_rank(),
            Rel::SetLe => a.le(b),
            Rel::SetLt => a.lt(b),
            Rel::SetLeStrictPrimed => {
                if a.max().is_primed() {
                    a.lt(b)
                } else {
                    a.le(b)
                }
            }
            Rel::SetLeStrictUnprimed => {
                if a.max().is_primed() {
                    a.le(b)
                } else {
                    a.lt(b)
                }
            }
            Rel::DistinctUnprimedMin => !(a.min_rank() == b.min_rank() && a.min_rank().is_multiple_of(2)),
            Rel::DistinctPrimedMin => !(a.min_rank() == b.min_rank() && a.min_rank() % 2 == 1),
        }
    }
}

#[derive(Clone, Copy, Debug)]
struct Constraint {
    a: usize,
    b: usize,
    rel: Rel,
}

/// Pairwise constraints among the dominoes selected by `active`, indexed as
/// in `paving.dominoes()`.
fn constraints(family: Family, paving: &Paving, active: &[bool]) -> Vec<Constraint> {
    let ds = paving.dominoes();
    let shifted = family.is_shifted();
    let mut out = Vec::new();
    for (i, &di) in ds.iter().enumerate() {
        for (j, &dj) in ds.iter().enumerate() {
            if i == j || !active[i] || !active[j] {
                continue;
            }
            let ci = di.cells();
            let cj = dj.cells();
            if ci.iter().any(|c| cj.contains(&c.right())) {
                out.push(Constraint { a: i, b: j, rel: Rel::MinLe });
            }
            if ci.iter().any(|c| cj.contains(&c.below())) {
                let rel = if shifted { Rel::MinLe } else { Rel::MinLt };
                out.push(Constraint { a: i, b: j, rel });
            }
            if shifted && i < j {
                if ci.iter().any(|c| cj.iter().any(|d| d.col == c.col)) {
                    out.push(Constraint { a: i, b: j, rel: Rel::DistinctUnprimedMin });
                }
                if ci.iter().any(|c| cj.iter().any(|d| d.row == c.row)) {
                    out.push(Constraint { a: i, b: j, rel: Rel::DistinctPrimedMin });
                }
            }
            if family.is_set_valued()
                && di.domino_type() == dj.domino_type()
                && weakly_southeast(di, dj)
            {
                let step = dj.crossing_diagonal() - di.crossing_diagonal();
                let rel = match (step, shifted) {
                    (2, false) => Some(Rel::SetLe),
                    (-2, false) => Some(Rel::SetLt),
                    (2, true) => Some(Rel::SetLeStrictPrimed),
                    (-2, true) => Some(Rel::SetLeStrictUnprimed),
                    _ => None,
                };
                if let Some(rel) = rel {
                    out.push(Constraint { a: i, b: j, rel });
                }
            }
        }
    }
    out
}

/// True iff `t` satisfies every rule of its family.
pub fn validate_domino_tableau(t: &DominoTableau) -> bool {
    let family = t.family;
    let ds = t.paving.dominoes();
    if family.is_shifted() && !crate::pavings::is_shifted_paving(&t.paving) {
        return false;
    }
    for (d, fill) in ds.iter().zip(&t.fills) {
        let ok = match fill {
            CellFill::X => family.is_shifted() && !d.is_up(),
            CellFill::Letters(s) => family.admits(*s) && (!family.is_shifted() || d.is_up()),
        };
        if !ok {
            return false;
        }
    }
    let active: Vec<bool> = t.fills.iter().map(|f| !f.is_x()).collect();
    constraints(family, &t.paving, &active).iter().all(|c| {
        c.rel
            .holds(t.fills[c.a].letters().unwrap(), t.fills[c.b].letters().unwrap())
    })
}

/// One segment per even diagonal, lowest first, each read northwest to
/// southeast. Shifted families start at `D_0`.
pub fn diagonal_reading(t: &DominoTableau) -> ReadingWord {
    let mut items: Vec<(i64, usize, CellFill)> = t
        .dominoes()
        .filter(|fd| !t.family.is_shifted() || fd.domino.is_up())
        .map(|fd| (fd.domino.crossing_diagonal(), fd.domino.even_cell().row, fd.fill))
        .collect();
    items.sort_by_key(|&(d, r, _)| (d, r));
    let (Some(lo), Some(hi)) = (items.first().map(|x| x.0), items.last().map(|x| x.0)) else {
        return ReadingWord { first: 0, stride: 2, segments: Vec::new() };
    };
    let lo = if t.family.is_shifted() { 0 } else { lo };
    let mut segments = vec![Vec::new(); ((hi - lo) / 2 + 1) as usize];
    for (d, _, fill) in items {
        segments[((d - lo) / 2) as usize].push(fill);
    }
    ReadingWord { first: lo, stride: 2, segments }
}

/// The filled up region, in domino order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UpFingerprint(pub Vec<FilledDomino>);

impl fmt::Display for UpFingerprint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, fd) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{fd}")?;
        }
        Ok(())
    }
}

pub fn up_fingerprint(t: &DominoTableau) -> Result<UpFingerprint> {
    if !t.family.is_shifted() {
        return Err(Error::NotShifted(t.family.to_string()));
    }
    Ok(UpFingerprint(t.dominoes().filter(|fd| fd.domino.is_up()).collect()))
}

/// Calls `visit` on every domino tableau of `shape` with letter indices at most
/// `n`. Shifted families visit one tableau per equivalence class, using the
/// lexicographically least shifted paving with the given up region.
pub fn for_each_domino_tableau(
    family: Family,
    shape: &Partition,
    n: u32,
    mut visit: impl FnMut(&DominoTableau),
) -> Result<()> {
    let alphabet = family.alphabet(n);
    if family.is_shifted() {
        let groups = shifted_pavings_by_up(shape);
        if groups.is_empty() {
            return Err(Error::NotShiftedPavable(shape.clone()));
        }
        for pavings in groups.into_values() {
            fill_paving(family, &pavings[0], &alphabet, &mut visit);
        }
    } else {
        if !shape.is_pavable() {
            return Err(Error::NotPavable(shape.clone()));
        }
        for p in enumerate_pavings(shape) {
            fill_paving(family, &p, &alphabet, &mut visit);
        }
    }
    Ok(())
}

fn fill_paving(
    family: Family,
    paving: &Paving,
    alphabet: &[LetterSet],
    visit: &mut impl FnMut(&DominoTableau),
) {
    let ds = paving.dominoes();
    let active: Vec<bool> = ds.iter().map(|d| !family.is_shifted() || d.is_up()).collect();
    // Each constraint is checked once both ends are filled, i.e. at the later index.
    let mut by_later: Vec<Vec<Constraint>> = vec![Vec::new(); ds.len()];
    for c in constraints(family, paving, &active) {
        by_later[c.a.max(c.b)].push(c);
    }
    let mut t = DominoTableau {
        family,
        paving: paving.clone(),
        fills: vec![CellFill::X; ds.len()],
    };
    let mut search = Search { active: &active, by_later: &by_later, alphabet };
    search.fill(0, &mut t, visit);
}

struct Search<'a> {
    active: &'a [bool],
    by_later: &'a [Vec<Constraint>],
    alphabet: &'a [LetterSet],
}

impl Search<'_> {
    fn fill(&mut self, i: usize, t: &mut DominoTableau, visit: &mut impl FnMut(&DominoTableau)) {
        if i == self.active.len() {
            visit(t);
            return;
        }
        if !self.active[i] {
            t.fills[i] = CellFill::X;
            self.fill(i + 1, t, visit);
            return;
        }
        'cand: for &s in self.alphabet {
            for c in &self.by_later[i] {
                let (a, b) = if c.a == i {
                    (s, t.fills[c.b].letters().unwrap())
                } else {
                    (t.fills[c.a].letters().unwrap(), s)
                };
                if !c.rel.holds(a, b) {
                    continue 'cand;
                }
            }
            t.fills[i] = CellFill::Letters(s);
            self.fill(i + 1, t, visit);
        }
    }
}

pub fn enumerate_domino_tableaux(family: Family, shape: &Partition, max_letter: u32) -> Result<Vec<DominoTableau>> {
    let mut out = Vec::new();
    for_each_domino_tableau(family, shape, max_letter, |t| out.push(t.clone()))?;
    Ok(out)
}

/// Parses `H(1,1)=1 V(2,1)={3,4'} ...`.
pub fn domino_tableau_from_str(family: Family, shape: &Partition, s: &str) -> Result<DominoTableau> {
    let dominoes = s
        .split_whitespace()
        .map(parse_filled_domino)
        .collect::<Result<Vec<_>>>()?;
    DominoTableau::new(family, shape.clone(), dominoes)
}

fn parse_filled_domino(s: &str) -> Result<FilledDomino> {
    let bad = || Error::Parse(format!("bad domino {s:?}"));
    let (head, fill) = s.split_once('=').ok_or_else(bad)?;
    let orient = match head.chars().next() {
        Some('H') => crate::pavings::Orientation::Horizontal,
        Some('V') => crate::pavings::Orientation::Vertical,
        _ => return Err(bad()),
    };
    let inner = head[1..].strip_prefix('(').and_then(|r| r.strip_suffix(')')).ok_or_else(bad)?;
    let (r, c) = inner.split_once(',').ok_or_else(bad)?;
    let row: usize = r.trim().parse().map_err(|_| bad())?;
    let col: usize = c.trim().parse().map_err(|_| bad())?;
    Ok(FilledDomino::new(Domino::new(row, col, orient), fill.parse()?))
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::bijections::gamma_split;
    use crate::pavings::{is_shifted_paving, region_split};
    use crate::test_fixtures::*;

    fn part(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn worked_examples_are_valid() {
        for t in [
            plain_5421(),
            plain_6442211(),
            set_valued_65531(),
            set_valued_6422(),
            shifted_8_7_5_5_5(),
            shifted_set_valued_65551(),
            shifted_set_valued_pair().0,
            shifted_set_valued_pair().1,
        ] {
            assert!(validate_domino_tableau(&t), "{t}");
        }
    }

    #[test]
    fn reading_words() {
        assert_eq!(diagonal_reading(&plain_5421()).to_string(), "2 / 1,3 / 1,6 / 5");
        assert_eq!(
            diagonal_reading(&set_valued_65531()).to_string(),
            "5 / {3,4},10 / {1,2},3,{7,8,9} / {3,7},{4,6},9 / {6,8}"
        );
        let (a, b) = shifted_set_valued_pair();
        let w = "{1,2},1,3',{4',7},4' / {1,2'},3',{3,4'} / 2";
        assert_eq!(diagonal_reading(&a).to_string(), w);
        assert_eq!(diagonal_reading(&b).to_string(), w);
    }

    #[test]
    fn equivalent_shifted_tableaux() {
        let t = shifted_8_7_5_5_5();
        let t1 = shifted_with_down("H(3,1)=X H(4,1)=X V(4,3)=X H(5,1)=X");
        let t2 = shifted_with_down("H(3,1)=X V(4,1)=X H(4,2)=X H(5,2)=X");
        let word = "1',1,2',3',3 / 1,2',3' / 3',4 / 3";
        for x in [&t, &t1, &t2] {
            assert!(validate_domino_tableau(x), "{x}");
            assert_eq!(diagonal_reading(x).to_string(), word);
            assert_eq!(up_fingerprint(x).unwrap(), up_fingerprint(&t).unwrap());
        }
        let (a, b) = shifted_set_valued_pair();
        assert_ne!(a, b);
        assert_eq!(up_fingerprint(&a).unwrap(), up_fingerprint(&b).unwrap());
        let changed = shifted_with_down("V(3,1)=X V(3,2)=X V(4,3)=X H(5,1)=X")
            .to_string()
            .replace("H(5,4)=3", "H(5,4)=4");
        let changed = domino_tableau_from_str(Family::Shifted, t.shape(), &changed).unwrap();
        assert_ne!(up_fingerprint(&changed).unwrap(), up_fingerprint(&t).unwrap());
        assert!(up_fingerprint(&plain_5421()).is_err());
    }

    #[test]
    fn different_types_may_share_an_entry() {
        // {3,4} sits left of {3} in the set-valued example; the two dominoes
        // have different types, so no strict comparison applies.
        let t = set_valued_65531();
        let a = Domino::v(2, 1);
        let b = Domino::v(2, 2);
        assert_ne!(a.domino_type(), b.domino_type());
        assert!(validate_domino_tableau(&t));
    }

    #[test]
    fn violations_are_caught() {
        let shape = part(&[1, 1, 1, 1]);
        let t = domino_tableau_from_str(Family::Plain, &shape, "V(1,1)=2 V(3,1)=2").unwrap();
        assert!(!validate_domino_tableau(&t));
        let t = domino_tableau_from_str(Family::Plain, &shape, "V(1,1)=1 V(3,1)=2").unwrap();
        assert!(validate_domino_tableau(&t));
        let t = domino_tableau_from_str(Family::Plain, &part(&[2]), "H(1,1)={1,2}").unwrap();
        assert!(!validate_domino_tableau(&t));
        let t = domino_tableau_from_str(Family::Shifted, &part(&[2]), "H(1,1)=X").unwrap();
        assert!(!validate_domino_tableau(&t));
        assert!(DominoTableau::new(Family::Plain, part(&[2]), vec![]).is_err());
    }

    #[test]
    fn weakly_southeast_examples() {
        let f1 = Domino::h(1, 3);
        assert!(weakly_southeast(f1, f1));
        assert!(!weakly_southeast(f1, Domino::v(2, 1)));
        assert!(!weakly_southeast(Domino::v(2, 2), Domino::h(1, 3)));
        assert!(weakly_southeast(Domino::v(2, 2), Domino::h(2, 3)));
    }

    #[test]
    fn small_enumerations() {
        let one = enumerate_domino_tableaux(Family::Plain, &part(&[2]), 1).unwrap();
        assert_eq!(one.len(), 1);
        assert_eq!(one[0].to_string(), "H(1,1)=1");
        assert!(matches!(
            enumerate_domino_tableaux(Family::Plain, &part(&[5, 3, 3, 2, 1]), 2),
            Err(Error::NotPavable(_))
        ));
        assert!(matches!(
            enumerate_domino_tableaux(Family::Shifted, &part(&[5, 5, 4, 3, 3, 2]), 2),
            Err(Error::NotShiftedPavable(_))
        ));
        let reps = enumerate_domino_tableaux(Family::Shifted, &part(&[6, 5, 5, 4]), 2).unwrap();
        assert!(!reps.is_empty());
        let prints: std::collections::HashSet<_> = reps.iter().map(|t| up_fingerprint(t).unwrap()).collect();
        assert_eq!(prints.len(), reps.len());
        for t in &reps {
            assert!(is_shifted_paving(t.paving()));
            assert!(validate_domino_tableau(t));
        }
    }

    #[test]
    fn enumeration_matches_brute_force() {
        // Every filling of every paving, filtered by the validity predicate.
        for family in [Family::Plain, Family::SetValued, Family::Shifted, Family::ShiftedSetValued] {
            for lambda in Partition::up_to_size(6) {
                let Ok(fast) = enumerate_domino_tableaux(family, &lambda, 2) else { continue };
                let mut slow = std::collections::BTreeSet::new();
                let pavings = enumerate_pavings(&lambda);
                let alphabet: Vec<CellFill> = family.alphabet(2).into_iter().map(CellFill::Letters).collect();
                for p in &pavings {
                    let k = p.dominoes().len();
                    let mut idx = vec![0usize; k];
                    loop {
                        let fills: Vec<CellFill> = p
                            .dominoes()
                            .iter()
                            .zip(&idx)
                            .map(|(d, &i)| if family.is_shifted() && !d.is_up() { CellFill::X } else { alphabet[i] })
                            .collect();
                        let t = DominoTableau { family, paving: p.clone(), fills };
                        if validate_domino_tableau(&t) {
                            slow.insert(if family.is_shifted() {
                                up_fingerprint(&t).unwrap().to_string()
                            } else {
                                t.to_string()
                            });
                        }
                        let mut j = 0;
                        while j < k && idx[j] + 1 == alphabet.len() {
                            idx[j] = 0;
                            j += 1;
                        }
                        if j == k {
                            break;
                        }
                        idx[j] += 1;
                    }
                }
                let fast: std::collections::BTreeSet<String> = fast
                    .iter()
                    .map(|t| if family.is_shifted() { up_fingerprint(t).unwrap().to_string() } else { t.to_string() })
                    .collect();
                assert_eq!(fast, slow, "{family} {lambda}");
            }
        }
    }

    #[test]
    fn sign_grading() {
        for lambda in Partition::up_to_size(8).into_iter().filter(|l| l.is_pavable()) {
            for t in enumerate_domino_tableaux(Family::SetValued, &lambda, 2).unwrap() {
                let singletons = t.dominoes().all(|fd| fd.fill.cardinality() == 1);
                assert!(t.cardinality() >= lambda.size() / 2);
                assert_eq!(t.cardinality() == lambda.size() / 2, singletons);
                assert!(validate_domino_tableau(&t.restrict_to_min()));
            }
        }
        for lambda in [part(&[2, 2]), part(&[4, 2]), part(&[6, 5, 5, 4])] {
            for t in enumerate_domino_tableaux(Family::ShiftedSetValued, &lambda, 2).unwrap() {
                let up = region_split(t.paving()).up.len();
                let singletons = t.dominoes().all(|fd| fd.fill.cardinality() <= 1);
                assert!(t.cardinality() >= up);
                assert_eq!(t.cardinality() == up, singletons);
                assert!(validate_domino_tableau(&t.restrict_to_min()));
            }
        }
    }

    #[test]
    fn split_shapes_match_quotient() {
        for lambda in [part(&[2, 2]), part(&[4, 2, 2]), part(&[3, 3])] {
            for t in enumerate_domino_tableaux(Family::Plain, &lambda, 2).unwrap() {
                let (a, b) = gamma_split(&t).unwrap();
                assert_eq!((a.shape().clone(), b.shape().clone()), lambda.two_quotient());
            }
        }
    }
}

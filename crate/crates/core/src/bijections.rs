//! Splitting a domino tableau into a pair of flat tableaux, and merging back.
//!
//! One engine serves all four families: plain tableaux are set-valued
//! tableaux with singleton fills, and unshifted tableaux have no `X` cells.

use crate::domino_tableaux::{DominoTableau, FilledDomino};
use crate::error::{Error, Result};
use crate::partitions::{Cell, Partition};
use crate::pavings::{Domino, DominoType};
use crate::tableaux::{grid_from_diagonals, validate_tableau, CellFill, Family, Tableau};

/// Restricts `t` to each domino type, sending domino diagonal `D_2k` to
/// tableau diagonal `D_k`.
pub fn gamma_split(t: &DominoTableau) -> Result<(Tableau, Tableau)> {
    Ok((split_one(t, DominoType::One)?, split_one(t, DominoType::Two)?))
}

fn split_one(t: &DominoTableau, ty: DominoType) -> Result<Tableau> {
    let mut items: Vec<(i64, usize, CellFill)> = t
        .dominoes()
        .filter(|fd| fd.domino.domino_type() == ty)
        .map(|fd| (fd.domino.crossing_diagonal() / 2, fd.domino.even_cell().row, fd.fill))
        .collect();
    if items.is_empty() {
        return Ok(Tableau::empty(t.family()));
    }
    items.sort_by_key(|&(k, r, _)| (k, r));
    let lo = items[0].0;
    let hi = items[items.len() - 1].0;
    let mut segments = vec![Vec::new(); (hi - lo + 1) as usize];
    for (k, _, fill) in items {
        segments[(k - lo) as usize].push(fill);
    }
    let (shape, rows) = grid_from_diagonals(lo, &segments)?;
    let flat = Tableau::new(t.family(), shape, rows)?;
    if !validate_tableau(&flat) {
        return Err(Error::Reconstruction(format!(
            "type {} restriction {flat} is not a valid {} tableau",
            ty.number(),
            t.family()
        )));
    }
    Ok(flat)
}

#[derive(Clone, Copy, Debug)]
struct Item {
    ty: DominoType,
    cell: Cell,
    fill: CellFill,
}

impl Item {
    fn diagonal(&self) -> i64 {
        self.cell.content()
    }

    /// Contents covered by the domino this item becomes, smaller first.
    fn min_content(&self) -> i64 {
        let d = 2 * self.diagonal();
        match self.ty {
            DominoType::One => d - 1,
            DominoType::Two => d,
        }
    }
}

/// Rebuilds the domino tableau whose split is `(t1, t2)`.
///
/// Cells are added in rounds of equal minimum letter. Each cell becomes a
/// domino placed at the unique spot on its diagonal that keeps the shape a
/// partition. Shifted families place the `X` cells left of a lettered cell
/// just before it and return one member of the equivalence class.
pub fn gamma_merge(family: Family, t1: &Tableau, t2: &Tableau) -> Result<DominoTableau> {
    for t in [t1, t2] {
        if t.family() != family {
            return Err(Error::Malformed(format!(
                "expected a {family} tableau, got {}",
                t.family()
            )));
        }
        if !validate_tableau(t) {
            return Err(Error::Malformed(format!("{t} is not a valid {family} tableau")));
        }
    }
    let tabs = [(DominoType::One, t1), (DominoType::Two, t2)];
    let mut keys: Vec<u32> = tabs
        .iter()
        .flat_map(|(_, t)| t.cells().filter_map(|(_, f)| f.letters().map(|s| s.min_rank())))
        .collect();
    keys.sort_unstable();
    keys.dedup();

    // Flat shapes built so far, and the row lengths of the domino shape.
    let mut flat: [Vec<usize>; 2] = [Vec::new(), Vec::new()];
    let mut rows: Vec<usize> = Vec::new();
    let mut placed: Vec<FilledDomino> = Vec::new();

    for key in keys {
        let mut pending: Vec<Item> = Vec::new();
        for (ty, t) in tabs {
            for (c, f) in t.cells() {
                if f.letters().is_some_and(|s| s.min_rank() == key) {
                    pending.push(Item { ty, cell: c, fill: f });
                }
            }
        }
        // Primed rounds form vertical strips and are laid from the top down.
        let primed = key % 2 == 1;
        pending.sort_by_key(|it| {
            let (d, ty) = (it.diagonal(), it.ty.number() as i64);
            if primed {
                (-d, -ty, it.cell.row)
            } else {
                (d, ty, it.cell.row)
            }
        });
        while !pending.is_empty() {
            let pos = pending
                .iter()
                .position(|it| ready(&flat[index(it.ty)], tabs[index(it.ty)].1, it.cell))
                .ok_or_else(|| Error::Placement("no cell of the round can be added".into()))?;
            let it = pending.remove(pos);
            let shape = &mut flat[index(it.ty)];
            // X cells to the left of the new cell come along with it.
            let built = shape.get(it.cell.row - 1).copied().unwrap_or(0);
            let xs = (built + 1..it.cell.col).map(|col| Item { ty: it.ty, cell: Cell::new(it.cell.row, col), fill: CellFill::X });
            for item in xs.chain([it]) {
                let domino = place(&mut rows, item.min_content())?;
                if shape.len() < item.cell.row {
                    shape.push(0);
                }
                shape[item.cell.row - 1] += 1;
                placed.push(FilledDomino::new(domino, item.fill));
            }
        }
    }
    for (ty, t) in tabs {
        if flat[index(ty)] != t.shape().parts() {
            return Err(Error::Placement(format!("cells of {t} were never reached")));
        }
    }
    let shape = Partition::new(rows)?;
    DominoTableau::new(family, shape, placed)
}

fn index(ty: DominoType) -> usize {
    match ty {
        DominoType::One => 0,
        DominoType::Two => 1,
    }
}

/// Whether `cell` extends the partition with the given row lengths once the
/// `X` cells of `t` to its left are added.
fn ready(rows: &[usize], t: &Tableau, cell: Cell) -> bool {
    let len = rows.get(cell.row - 1).copied().unwrap_or(0);
    let above = if cell.row == 1 { usize::MAX } else { rows.get(cell.row - 2).copied().unwrap_or(0) };
    len < cell.col
        && cell.col <= above
        && (len + 1..cell.col).all(|col| t.get(Cell::new(cell.row, col)) == Some(CellFill::X))
}

/// Adds the unique domino with smaller content `m` that keeps `rows` a partition.
fn place(rows: &mut Vec<usize>, m: i64) -> Result<Domino> {
    let len_of = |rows: &[usize], r: usize| rows.get(r - 1).copied().unwrap_or(0);
    let mut options = Vec::new();
    for r in 1..=rows.len() + 1 {
        let lr = len_of(rows, r);
        let above = if r == 1 { usize::MAX } else { len_of(rows, r - 1) };
        let content = (lr + 1) as i64 - r as i64;
        if content == m && lr + 2 <= above {
            options.push(Domino::h(r, lr + 1));
        }
        if content == m + 1 && len_of(rows, r + 1) == lr && lr < above {
            options.push(Domino::v(r, lr + 1));
        }
    }
    let [d] = options[..] else {
        return Err(Error::Placement(format!(
            "{} ways to add a domino with contents {{{m},{}}} to {rows:?}",
            options.len(),
            m + 1
        )));
    };
    for c in d.cells() {
        if rows.len() < c.row {
            rows.push(0);
        }
        rows[c.row - 1] += 1;
    }
    Ok(d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domino_tableaux::{validate_domino_tableau, up_fingerprint};
    use crate::test_fixtures::*;
    use crate::tableaux::tableau_from_strs;

    #[test]
    fn split_plain_6442211() {
        let (a, b) = gamma_split(&plain_6442211()).unwrap();
        assert_eq!(a.to_string(), "2,2 / 3 / 4");
        assert_eq!(b.to_string(), "1,3,4 / 2,4");
        assert_eq!(gamma_merge(Family::Plain, &a, &b).unwrap(), plain_6442211());
    }

    #[test]
    fn split_set_valued_6422() {
        let t = set_valued_6422();
        let (a, b) = gamma_split(&t).unwrap();
        assert_eq!(a.to_string(), "{3,4},{4,7} / 5");
        assert_eq!(b.to_string(), "{1,2},4,{4,5,6} / {3,6}");
        assert_eq!(gamma_merge(Family::SetValued, &a, &b).unwrap(), t);
    }

    #[test]
    fn shifted_example_round_trips_up_to_equivalence() {
        let t = shifted_8_7_5_5_5();
        assert!(validate_domino_tableau(&t));
        let (a, b) = gamma_split(&t).unwrap();
        assert_eq!(a.to_string(), "1',1 / X,3");
        assert_eq!(b.to_string(), "1,2',3',3 / X,2',3',4 / X,X,3'");
        let back = gamma_merge(Family::Shifted, &a, &b).unwrap();
        assert!(validate_domino_tableau(&back));
        assert_eq!(up_fingerprint(&back).unwrap(), up_fingerprint(&t).unwrap());
    }

    #[test]
    fn shifted_set_valued_example() {
        let t = shifted_set_valued_65551();
        assert!(validate_domino_tableau(&t));
        let (a, b) = gamma_split(&t).unwrap();
        assert_eq!(a.to_string(), "{1',1},{2',2}");
        assert_eq!(b.to_string(), "1,2',{2,3'} / X,{3',3},{3,4'} / X,X,4'");
        let back = gamma_merge(Family::ShiftedSetValued, &a, &b).unwrap();
        assert_eq!(up_fingerprint(&back).unwrap(), up_fingerprint(&t).unwrap());
    }

    #[test]
    fn type_one_goes_first_on_ties() {
        let one = tableau_from_strs(Family::Plain, &[&["1"]]).unwrap();
        let t = gamma_merge(Family::Plain, &one, &one).unwrap();
        assert_eq!(t.to_string(), "V(1,1)=1 V(1,2)=1");
        assert!(validate_domino_tableau(&t));
    }

    #[test]
    fn merge_rejects_mismatched_family() {
        let one = tableau_from_strs(Family::Plain, &[&["1"]]).unwrap();
        let sv = one.clone().with_family(Family::SetValued);
        assert!(matches!(gamma_merge(Family::SetValued, &one, &sv), Err(Error::Malformed(_))));
    }

    #[test]
    fn empty_pair() {
        let e = Tableau::empty(Family::Plain);
        let t = gamma_merge(Family::Plain, &e, &e).unwrap();
        assert!(t.shape().is_empty());
        let (a, b) = gamma_split(&t).unwrap();
        assert!(a.shape().is_empty() && b.shape().is_empty());
    }
}

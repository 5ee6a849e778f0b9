//! ASCII and LaTeX drawings. Each drawing starts with a comment line holding
//! the canonical form of the drawn object, which [`parse_rendered`] reads back.

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::domino_tableaux::DominoTableau;
use crate::error::{Error, Result};
use crate::format::{from_canonical, to_canonical, Document};
use crate::partitions::Cell;
use crate::pavings::Paving;
use crate::tableaux::Tableau;

const ASCII_TAG: &str = "# dominotab: ";
const LATEX_TAG: &str = "% dominotab: ";

/// Boxes grouped into labelled regions: single cells or dominoes.
struct Regions {
    nrows: usize,
    ncols: usize,
    region: HashMap<Cell, usize>,
    labels: Vec<(Cell, String)>,
    dominoes: bool,
}

impl Regions {
    fn of_tableau(t: &Tableau) -> Self {
        let mut region = HashMap::new();
        let mut labels = Vec::new();
        for (c, f) in t.cells() {
            region.insert(c, labels.len());
            labels.push((c, f.to_string()));
        }
        Regions { nrows: t.shape().len(), ncols: t.shape().row_len(1), region, labels, dominoes: false }
    }

    fn of_domino_tableau(t: &DominoTableau) -> Self {
        let mut region = HashMap::new();
        let mut labels = Vec::new();
        for fd in t.dominoes() {
            for c in fd.domino.cells() {
                region.insert(c, labels.len());
            }
            labels.push((fd.domino.top_left(), fd.fill.to_string()));
        }
        Regions { nrows: t.shape().len(), ncols: t.shape().row_len(1), region, labels, dominoes: true }
    }

    fn of_paving(p: &Paving) -> Self {
        let mut region = HashMap::new();
        let mut labels = Vec::new();
        for d in p.dominoes() {
            for c in d.cells() {
                region.insert(c, labels.len());
            }
            labels.push((d.top_left(), String::new()));
        }
        Regions { nrows: p.shape().len(), ncols: p.shape().row_len(1), region, labels, dominoes: true }
    }

    fn at(&self, row: usize, col: usize) -> Option<usize> {
        if row == 0 || col == 0 {
            return None;
        }
        self.region.get(&Cell::new(row, col)).copied()
    }

    /// An edge is drawn where the regions on its two sides differ.
    fn edge(&self, a: Option<usize>, b: Option<usize>) -> bool {
        a != b
    }
}

fn header(tag: &str, doc: &Document) -> String {
    format!("{tag}{}\n", to_canonical(doc))
}

pub fn ascii_tableau(t: &Tableau) -> String {
    header(ASCII_TAG, &Document::Tableau { tableau: t.clone() }) + &ascii(&Regions::of_tableau(t))
}

pub fn ascii_domino_tableau(t: &DominoTableau) -> String {
    header(ASCII_TAG, &Document::DominoTableau { tableau: t.clone() }) + &ascii(&Regions::of_domino_tableau(t))
}

fn ascii(g: &Regions) -> String {
    if g.nrows == 0 {
        return "(empty)\n".into();
    }
    let w = g.labels.iter().map(|(_, l)| l.chars().count()).max().unwrap_or(0).max(1) + 2;
    let mut out = String::new();
    for r in 0..=g.nrows {
        // Boundary below row r.
        let mut line = String::new();
        for c in 0..=g.ncols {
            let horizontal = g.edge(g.at(r, c), g.at(r + 1, c)) || g.edge(g.at(r, c + 1), g.at(r + 1, c + 1));
            let vertical = g.edge(g.at(r, c), g.at(r, c + 1)) || g.edge(g.at(r + 1, c), g.at(r + 1, c + 1));
            line.push(match (horizontal, vertical) {
                (true, true) => '+',
                (true, false) => '-',
                (false, true) => '|',
                (false, false) => ' ',
            });
            if c < g.ncols {
                let draw = g.edge(g.at(r, c + 1), g.at(r + 1, c + 1));
                line.push_str(&(if draw { "-" } else { " " }).repeat(w));
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
        if r == g.nrows {
            break;
        }
        let row = r + 1;
        let mut line = String::new();
        let mut c = 1;
        line.push(if g.at(row, 1).is_some() { '|' } else { ' ' });
        while c <= g.ncols {
            let id = g.at(row, c);
            let mut span = 1;
            while c + span <= g.ncols && id.is_some() && g.at(row, c + span) == id {
                span += 1;
            }
            let width = span * w + span - 1;
            let label = id
                .map(|i| &g.labels[i])
                .filter(|(cell, _)| cell.row == row)
                .map_or("", |(_, l)| l.as_str());
            let _ = write!(line, "{label:^width$}");
            c += span;
            let right = g.at(row, c);
            line.push(if g.edge(id, right) { '|' } else { ' ' });
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

/// Outline of a paving, without a header line.
pub fn ascii_paving(p: &Paving) -> String {
    ascii(&Regions::of_paving(p))
}

pub fn latex_tableau(t: &Tableau) -> String {
    header(LATEX_TAG, &Document::Tableau { tableau: t.clone() }) + &latex(&Regions::of_tableau(t))
}

pub fn latex_domino_tableau(t: &DominoTableau) -> String {
    header(LATEX_TAG, &Document::DominoTableau { tableau: t.clone() }) + &latex(&Regions::of_domino_tableau(t))
}

/// A `picture` environment in units of one box; domino drawings also get
/// dotted even diagonals labelled `D_{2k}`.
fn latex(g: &Regions) -> String {
    let (w, h) = (g.ncols as i64, g.nrows as i64);
    let mut out = String::new();
    out.push_str("\\setlength{\\unitlength}{1.5em}\n");
    let _ = writeln!(out, "\\begin{{picture}}({w},{})", h + 1);
    for r in 0..=g.nrows {
        for c in 1..=g.ncols {
            if g.edge(g.at(r, c), g.at(r + 1, c)) {
                let _ = writeln!(out, "\\put({},{}){{\\line(1,0){{1}}}}", c - 1, h - r as i64);
            }
        }
    }
    for r in 1..=g.nrows {
        for c in 0..=g.ncols {
            if g.edge(g.at(r, c), g.at(r, c + 1)) {
                let _ = writeln!(out, "\\put({c},{}){{\\line(0,1){{1}}}}", h - r as i64);
            }
        }
    }
    for (i, (cell, label)) in g.labels.iter().enumerate() {
        let cells: Vec<Cell> = g.region.iter().filter(|(_, &v)| v == i).map(|(&c, _)| c).collect();
        let cols = cells.iter().map(|c| c.col).max().unwrap() - cell.col + 1;
        let rows = cells.iter().map(|c| c.row).max().unwrap() - cell.row + 1;
        let _ = writeln!(
            out,
            "\\put({},{}){{\\makebox({cols},{rows}){{${}$}}}}",
            cell.col - 1,
            h - (cell.row + rows - 1) as i64,
            label.replace('\'', "^{\\prime}")
        );
    }
    if g.dominoes && g.nrows > 0 {
        // D_k runs through the box corners with x + y = k + h.
        let lo = 1 - h;
        let hi = w - 1;
        for k in (lo..=hi).filter(|k| k % 2 == 0) {
            let x0 = k.max(0);
            let x1 = (k + h).min(w);
            let steps = (x1 - x0) * 4;
            let _ = writeln!(
                out,
                "\\multiput({x0},{})(0.25,-0.25){{{steps}}}{{\\circle*{{0.05}}}}",
                k + h - x0
            );
            if k >= 0 {
                let _ = writeln!(out, "\\put({x0},{}){{\\makebox(0,0)[b]{{$D_{{{k}}}$}}}}", h);
            }
        }
    }
    out.push_str("\\end{picture}\n");
    out
}

/// Recovers the object from a drawing made by this module.
pub fn parse_rendered(text: &str) -> Result<Document> {
    let line = text
        .lines()
        .find_map(|l| l.strip_prefix(ASCII_TAG).or_else(|| l.strip_prefix(LATEX_TAG)))
        .ok_or_else(|| Error::Parse("no dominotab header line".into()))?;
    from_canonical(line)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domino_tableaux::diagonal_reading;
    use crate::tableaux::{tableau_from_strs, Family};
    use crate::test_fixtures::*;

    #[test]
    fn single_box() {
        let t = tableau_from_strs(Family::Plain, &[&["1"]]).unwrap();
        let text = ascii_tableau(&t);
        let body: Vec<&str> = text.lines().skip(1).collect();
        assert_eq!(body, vec!["+---+", "| 1 |", "+---+"]);
    }

    #[test]
    fn dominoes_drawn_without_inner_edges() {
        let t = dt(Family::Plain, &[2, 2], "H(1,1)=1 H(2,1)=2");
        let body: Vec<String> = ascii_domino_tableau(&t).lines().skip(1).map(String::from).collect();
        assert_eq!(body, vec!["+-------+", "|   1   |", "+-------+", "|   2   |", "+-------+"]);
        let t = dt(Family::Plain, &[2, 2], "V(1,1)=1 V(1,2)=2");
        let body: Vec<String> = ascii_domino_tableau(&t).lines().skip(1).map(String::from).collect();
        assert_eq!(body, vec!["+---+---+", "| 1 | 2 |", "|   |   |", "|   |   |", "+---+---+"]);
    }

    #[test]
    fn paving_outline() {
        let p = crate::pavings::Paving::new(
            "[3,1]".parse().unwrap(),
            vec![crate::pavings::Domino::h(1, 2), crate::pavings::Domino::v(1, 1)],
        )
        .unwrap();
        assert_eq!(p.to_string(), "V(1,1) H(1,2)");
        let lines: Vec<String> = ascii_paving(&p).lines().map(String::from).collect();
        assert_eq!(lines, vec!["+---+-------+", "|   |       |", "|   +-------+", "|   |", "+---+"]);
    }

    #[test]
    fn rendered_objects_parse_back() {
        let t = plain_5421();
        for text in [ascii_domino_tableau(&t), latex_domino_tableau(&t)] {
            let Document::DominoTableau { tableau } = parse_rendered(&text).unwrap() else {
                panic!("wrong kind");
            };
            assert_eq!(tableau, t);
            assert_eq!(diagonal_reading(&tableau).to_string(), "2 / 1,3 / 1,6 / 5");
        }
        let flat = tableau_from_strs(Family::Shifted, &[&["1'", "1", "2'"], &["X", "2", "4"]]).unwrap();
        for text in [ascii_tableau(&flat), latex_tableau(&flat)] {
            assert_eq!(parse_rendered(&text).unwrap(), Document::Tableau { tableau: flat.clone() });
        }
    }

    #[test]
    fn latex_has_picture_and_diagonals() {
        let text = latex_domino_tableau(&shifted_8_7_5_5_5());
        assert!(text.contains("\\begin{picture}(8,6)"));
        assert!(text.contains("$D_{0}$"));
        assert!(text.contains("$1^{\\prime}$"));
        assert!(text.trim_end().ends_with("\\end{picture}"));
    }
}

//! Canonical text format: compact JSON with a fixed key order.
//!
//! Every top-level value is a [`Document`] tagged by `kind`, so files and
//! rendered headers are self-describing.

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::domino_tableaux::{DominoTableau, FilledDomino};
use crate::error::{Error, Result};
use crate::partitions::Partition;
use crate::pavings::{Orientation, Paving};
use crate::polyring::Polynomial;
use crate::tableaux::{CellFill, Family, Tableau};

impl Serialize for CellFill {
    /// `"X"` or a list of letters such as `["1","2'"]`.
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            CellFill::X => s.serialize_str("X"),
            CellFill::Letters(set) => {
                let v: Vec<String> = set.iter().map(|l| l.to_string()).collect();
                v.serialize(s)
            }
        }
    }
}

impl<'de> Deserialize<'de> for CellFill {
    fn deserialize<D: Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            X(String),
            Letters(Vec<String>),
        }
        match Raw::deserialize(de)? {
            Raw::X(x) if x == "X" => Ok(CellFill::X),
            Raw::X(other) => Err(D::Error::custom(format!("expected \"X\" or a list, got {other:?}"))),
            Raw::Letters(v) => {
                let mut letters = v
                    .iter()
                    .map(|s| s.parse())
                    .collect::<Result<Vec<crate::tableaux::Letter>>>()
                    .map_err(D::Error::custom)?;
                let n = letters.len();
                letters.sort();
                letters.dedup();
                if letters.len() != n {
                    return Err(D::Error::custom("repeated letter"));
                }
                crate::tableaux::LetterSet::from_letters(letters)
                    .map(CellFill::Letters)
                    .ok_or_else(|| D::Error::custom("empty letter set"))
            }
        }
    }
}

#[derive(Serialize, Deserialize)]
struct RawTableau {
    family: Family,
    shape: Partition,
    rows: Vec<Vec<CellFill>>,
}

impl Serialize for Tableau {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RawTableau { family: self.family(), shape: self.shape().clone(), rows: self.rows().to_vec() }
            .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Tableau {
    fn deserialize<D: Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let raw = RawTableau::deserialize(de)?;
        Tableau::new(raw.family, raw.shape, raw.rows).map_err(D::Error::custom)
    }
}

#[derive(Serialize, Deserialize)]
struct RawDomino {
    row: usize,
    col: usize,
    orient: Orientation,
    fill: CellFill,
}

#[derive(Serialize, Deserialize)]
struct RawDominoTableau {
    family: Family,
    shape: Partition,
    dominoes: Vec<RawDomino>,
}

impl Serialize for DominoTableau {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RawDominoTableau {
            family: self.family(),
            shape: self.shape().clone(),
            dominoes: self
                .dominoes()
                .map(|fd| RawDomino {
                    row: fd.domino.row,
                    col: fd.domino.col,
                    orient: fd.domino.orient,
                    fill: fd.fill,
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for DominoTableau {
    fn deserialize<D: Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let raw = RawDominoTableau::deserialize(de)?;
        let ds = raw
            .dominoes
            .into_iter()
            .map(|d| FilledDomino::new(crate::pavings::Domino::new(d.row, d.col, d.orient), d.fill))
            .collect();
        DominoTableau::new(raw.family, raw.shape, ds).map_err(D::Error::custom)
    }
}

/// Any value the command line reads or writes.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Document {
    Partition { shape: Partition },
    Quotient { mu: Partition, nu: Partition },
    Pavings { shape: Partition, pavings: Vec<Paving> },
    Tableau { tableau: Tableau },
    DominoTableau { tableau: DominoTableau },
    Tableaux { tableaux: Vec<Tableau> },
    DominoTableaux { tableaux: Vec<DominoTableau> },
    Pair { t1: Tableau, t2: Tableau },
    Polynomial { polynomial: Polynomial },
    Reports { reports: Vec<crate::verify::VerificationReport> },
}

pub fn to_canonical(doc: &Document) -> String {
    serde_json::to_string(doc).expect("documents always serialize")
}

pub fn from_canonical(text: &str) -> Result<Document> {
    serde_json::from_str(text.trim()).map_err(|e| Error::Parse(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::test_fixtures::*;
    use crate::tableaux::tableau_from_strs;

    fn roundtrip(doc: Document) {
        let text = to_canonical(&doc);
        let back = from_canonical(&text).unwrap();
        assert_eq!(back, doc);
        assert_eq!(to_canonical(&back), text);
    }

    #[test]
    fn documents_roundtrip() {
        let shape = Partition::new(vec![4, 2, 2, 1, 1, 1]).unwrap();
        roundtrip(Document::Partition { shape: shape.clone() });
        let (mu, nu) = shape.two_quotient();
        roundtrip(Document::Quotient { mu, nu });
        roundtrip(Document::DominoTableau { tableau: shifted_set_valued_65551() });
        roundtrip(Document::DominoTableau { tableau: set_valued_65531() });
        let t = tableau_from_strs(Family::ShiftedSetValued, &[&["{1',2'}", "{2,3'}"], &["X", "{3',5}"]]).unwrap();
        roundtrip(Document::Pair { t1: t.clone(), t2: Tableau::empty(Family::ShiftedSetValued) });
        roundtrip(Document::Tableau { tableau: t });
        let p = crate::polyring::genfun(Family::SetValued, &Partition::new(vec![2, 1]).unwrap(), 2).unwrap();
        roundtrip(Document::Polynomial { polynomial: p });
        let sq = Partition::new(vec![2, 2]).unwrap();
        roundtrip(Document::Pavings { pavings: crate::pavings::enumerate_pavings(&sq), shape: sq });
    }

    #[test]
    fn known_encodings() {
        let doc = Document::DominoTableau { tableau: dt(Family::Plain, &[2], "H(1,1)=1") };
        assert_eq!(
            to_canonical(&doc),
            r#"{"kind":"domino-tableau","tableau":{"family":"plain","shape":[2],"dominoes":[{"row":1,"col":1,"orient":"H","fill":["1"]}]}}"#
        );
        let doc = Document::Quotient { mu: Partition::empty(), nu: Partition::new(vec![1]).unwrap() };
        assert_eq!(to_canonical(&doc), r#"{"kind":"quotient","mu":[],"nu":[1]}"#);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(from_canonical(r#"{"kind":"partition","shape":[1,2]}"#).is_err());
        assert!(from_canonical(r#"{"kind":"tableau","tableau":{"family":"plain","shape":[2],"rows":[["1"]]}}"#).is_err());
        assert!(from_canonical(r#"{"kind":"domino-tableau","tableau":{"family":"plain","shape":[2],"dominoes":[]}}"#).is_err());
        assert!(from_canonical("not json").is_err());
    }
}

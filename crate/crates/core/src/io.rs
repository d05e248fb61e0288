//! JSON encodings. Diagrams, types, tableaux and labellings are all
//! `{"boxes": [[row, col, ...], ...]}` with an optional value per box;
//! partitions and permutations are plain arrays.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::Value;

use crate::diagram::{Cell, Diagram};
use crate::error::{Error, Result};
use crate::schur::LabelledFilling;
use crate::tableau::{Tableau, TypeFilling};

#[derive(Serialize, Deserialize)]
struct Boxes {
    boxes: Vec<Vec<u64>>,
}

fn cell_of(raw: &[u64]) -> Cell {
    Cell::new(raw[0] as usize, raw[1] as usize)
}

fn valued_boxes<'a>(it: impl Iterator<Item = (&'a Cell, &'a u32)>) -> Boxes {
    Boxes { boxes: it.map(|(c, &v)| vec![c.row as u64, c.col as u64, v as u64]).collect() }
}

fn parse_valued(raw: Boxes) -> Result<BTreeMap<Cell, u32>> {
    let mut out = BTreeMap::new();
    for b in raw.boxes {
        if b.len() != 3 {
            return Err(Error::Malformed(format!("expected [row, col, value], got {b:?}")));
        }
        let v = u32::try_from(b[2]).map_err(|_| Error::Malformed(format!("value {} too large", b[2])))?;
        if out.insert(cell_of(&b), v).is_some() {
            return Err(Error::Malformed(format!("box {} listed twice", cell_of(&b))));
        }
    }
    Ok(out)
}

impl Serialize for Diagram {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        Boxes { boxes: self.iter().map(|c| vec![c.row as u64, c.col as u64]).collect() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Diagram {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = Boxes::deserialize(d)?;
        let mut cells = Vec::with_capacity(raw.boxes.len());
        for b in &raw.boxes {
            if b.len() != 2 {
                return Err(D::Error::custom(format!("expected [row, col], got {b:?}")));
            }
            cells.push(cell_of(b));
        }
        let diagram = Diagram::from_cells(cells.iter().copied()).map_err(D::Error::custom)?;
        if diagram.len() != cells.len() {
            return Err(D::Error::custom("a box is listed twice"));
        }
        Ok(diagram)
    }
}

impl Serialize for TypeFilling {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        valued_boxes(self.entries().iter()).serialize(s)
    }
}

impl<'de> Deserialize<'de> for TypeFilling {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let map = parse_valued(Boxes::deserialize(d)?).map_err(D::Error::custom)?;
        TypeFilling::new(map).map_err(D::Error::custom)
    }
}

impl Serialize for Tableau {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        valued_boxes(self.entries().iter()).serialize(s)
    }
}

impl<'de> Deserialize<'de> for Tableau {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let map = parse_valued(Boxes::deserialize(d)?).map_err(D::Error::custom)?;
        Tableau::new(map).map_err(D::Error::custom)
    }
}

impl Serialize for LabelledFilling {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        valued_boxes(self.labels().iter()).serialize(s)
    }
}

impl<'de> Deserialize<'de> for LabelledFilling {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let map = parse_valued(Boxes::deserialize(d)?).map_err(D::Error::custom)?;
        LabelledFilling::new(map).map_err(D::Error::custom)
    }
}

/// A count as a JSON number when it fits in `u64`, otherwise as a decimal
/// string.
pub fn count_to_json(n: &BigUint) -> Value {
    match n.to_u64() {
        Some(v) => Value::from(v),
        None => Value::from(n.to_string()),
    }
}

/// Parses JSON text into any of the encoded types, mapping failures to
/// [`Error::Malformed`].
pub fn from_json<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Malformed(e.to_string()))
}

//! Versioned JSON format for invariant tables.
//!
//! Rationals serialize as strings `"p/q"` (bare JSON integers when the
//! denominator is 1) so exactness survives the trip through JSON. Output
//! entry ordering is fixed as (degree value, lexicographic class, genus)
//! for reproducible diffs.

use std::path::Path;

use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::rational::{is_integer, parse_rational, Rational};
use crate::series::{CurveClass, DegreeFunctional};
use crate::transform::InvariantTable;
use crate::{Error, Result};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TableKind {
    Gv,
    Gw,
}

impl std::fmt::Display for TableKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            TableKind::Gv => write!(f, "gv"),
            TableKind::Gw => write!(f, "gw"),
        }
    }
}

/// A value is a bare integer when possible, else a `"p/q"` string.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
enum ValueRepr {
    Int(i64),
    Text(String),
}

impl ValueRepr {
    fn to_rational(&self) -> Result<Rational> {
        match self {
            ValueRepr::Int(n) => Ok(crate::rational::rat(*n)),
            ValueRepr::Text(s) => parse_rational(s),
        }
    }

    fn from_rational(r: &Rational) -> ValueRepr {
        if is_integer(r) {
            if let Some(n) = r.numer().to_i64() {
                return ValueRepr::Int(n);
            }
        }
        ValueRepr::Text(crate::rational::format_rational(r))
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FileEntry {
    pub class: Vec<u64>,
    pub genus: u32,
    value: ValueRepr,
}

impl FileEntry {
    pub fn value(&self) -> Result<Rational> {
        self.value.to_rational()
    }
}

/// On-disk invariant table, schema version 1.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct InvariantFileV1 {
    pub schema_version: u32,
    pub kind: TableKind,
    pub lattice_rank: usize,
    pub degree_functional: Vec<u64>,
    pub degree_cap: u64,
    pub genus_cap: u32,
    pub entries: Vec<FileEntry>,
}

impl InvariantFileV1 {
    /// Builds the file representation with the canonical entry ordering.
    pub fn from_table(
        kind: TableKind,
        table: &InvariantTable,
        functional: &DegreeFunctional,
    ) -> Self {
        let mut entries: Vec<(u64, CurveClass, u32, Rational)> = table
            .entries()
            .map(|(c, g, v)| (functional.degree(c), c.clone(), g, v.clone()))
            .collect();
        entries.sort_by(|a, b| (a.0, &a.1, a.2).cmp(&(b.0, &b.1, b.2)));
        InvariantFileV1 {
            schema_version: SCHEMA_VERSION,
            kind,
            lattice_rank: table.rank(),
            degree_functional: functional.weights().to_vec(),
            degree_cap: table.degree_cap(),
            genus_cap: table.genus_cap(),
            entries: entries
                .into_iter()
                .map(|(_, class, genus, value)| FileEntry {
                    class: class.coords().to_vec(),
                    genus,
                    value: ValueRepr::from_rational(&value),
                })
                .collect(),
        }
    }

    /// Validates and converts to the in-memory table plus functional.
    pub fn to_table(&self) -> Result<(InvariantTable, DegreeFunctional)> {
        if self.schema_version != SCHEMA_VERSION {
            return Err(Error::BadTableFile(format!(
                "unsupported schema version {}",
                self.schema_version
            )));
        }
        if self.degree_functional.len() != self.lattice_rank {
            return Err(Error::BadTableFile(format!(
                "degree functional has {} weights, lattice rank is {}",
                self.degree_functional.len(),
                self.lattice_rank
            )));
        }
        let functional = DegreeFunctional::new(self.degree_functional.clone())?;
        let mut table = InvariantTable::new(self.lattice_rank, self.degree_cap, self.genus_cap);
        for (index, entry) in self.entries.iter().enumerate() {
            let value = entry.value().map_err(|e| {
                Error::BadTableFile(format!("entry {index}: {e}"))
            })?;
            table
                .insert(CurveClass::new(entry.class.clone()), entry.genus, value)
                .map_err(|e| Error::BadTableFile(format!("entry {index}: {e}")))?;
        }
        Ok((table, functional))
    }

    pub fn read(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        let file: InvariantFileV1 = serde_json::from_str(&text)
            .map_err(|e| Error::BadTableFile(format!("{}: {e}", path.display())))?;
        Ok(file)
    }

    pub fn write(&self, path: &Path) -> Result<()> {
        let mut text = serde_json::to_string_pretty(self)?;
        text.push('\n');
        std::fs::write(path, text)?;
        Ok(())
    }
}

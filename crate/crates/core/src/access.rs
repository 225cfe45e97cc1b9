//! Access instrumentation and conversion traces.

use std::cell::RefCell;
use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::field::FieldElem;

/// Anything symbols can be read from by coordinate; `None` marks an erasure.
pub trait SymbolSource {
    fn len(&self) -> usize;
    fn symbol(&self, coord: usize) -> Option<FieldElem>;

    fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

impl SymbolSource for [Option<FieldElem>] {
    fn len(&self) -> usize {
        <[Option<FieldElem>]>::len(self)
    }

    fn symbol(&self, coord: usize) -> Option<FieldElem> {
        self.get(coord).copied().flatten()
    }
}

impl SymbolSource for Vec<Option<FieldElem>> {
    fn len(&self) -> usize {
        Vec::len(self)
    }

    fn symbol(&self, coord: usize) -> Option<FieldElem> {
        self.get(coord).copied().flatten()
    }
}

/// Wraps a source and records every coordinate read through it.
///
/// Symbols relocated without inspection go through [`Tracked::carry`] and are
/// recorded separately, so they never count toward the read cost.
pub struct Tracked<'a, S: SymbolSource + ?Sized> {
    inner: &'a S,
    reads: RefCell<BTreeSet<usize>>,
    carried: RefCell<BTreeSet<usize>>,
}

impl<'a, S: SymbolSource + ?Sized> Tracked<'a, S> {
    pub fn new(inner: &'a S) -> Self {
        Tracked {
            inner,
            reads: RefCell::new(BTreeSet::new()),
            carried: RefCell::new(BTreeSet::new()),
        }
    }

    /// Moves a symbol into the output untouched.
    pub fn carry(&self, coord: usize) -> Option<FieldElem> {
        self.carried.borrow_mut().insert(coord);
        self.inner.symbol(coord)
    }

    pub fn reads(&self) -> BTreeSet<usize> {
        self.reads.borrow().clone()
    }

    pub fn carried(&self) -> BTreeSet<usize> {
        self.carried.borrow().clone()
    }
}

impl<S: SymbolSource + ?Sized> SymbolSource for Tracked<'_, S> {
    fn len(&self) -> usize {
        self.inner.len()
    }

    fn symbol(&self, coord: usize) -> Option<FieldElem> {
        self.reads.borrow_mut().insert(coord);
        self.inner.symbol(coord)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SymbolRole {
    Remaining,
    Accessed,
    New,
    Untouched,
}

impl SymbolRole {
    pub fn as_str(self) -> &'static str {
        match self {
            SymbolRole::Remaining => "remaining",
            SymbolRole::Accessed => "accessed",
            SymbolRole::New => "new",
            SymbolRole::Untouched => "untouched",
        }
    }
}

/// Provenance of one symbol in a conversion.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SymbolRecord {
    /// `c1`, `c2`, ... for initial codewords, `d` for the final codeword.
    pub codeword: String,
    pub coord: usize,
    pub point: u64,
    pub role: SymbolRole,
    pub source: String,
}

/// Which coordinates were kept, read and written during one conversion.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ConversionTrace {
    /// Per initial codeword: initial coordinate to final coordinate.
    pub remaining: Vec<BTreeMap<usize, usize>>,
    /// Per initial codeword: coordinates read.
    pub accessed: Vec<BTreeSet<usize>>,
    /// Final coordinates written fresh, with how each was produced.
    pub new_symbols: BTreeMap<usize, String>,
}

impl ConversionTrace {
    pub fn read_cost(&self) -> usize {
        self.accessed.iter().map(BTreeSet::len).sum()
    }

    pub fn write_cost(&self) -> usize {
        self.new_symbols.len()
    }

    pub fn total_cost(&self) -> usize {
        self.read_cost() + self.write_cost()
    }

    pub fn cost_line(&self) -> String {
        format!(
            "read={} write={} total={}",
            self.read_cost(),
            self.write_cost(),
            self.total_cost()
        )
    }

    /// One record per symbol of every initial codeword and of the final one.
    pub fn records(&self, initial_points: &[u64], final_points: &[u64]) -> Vec<SymbolRecord> {
        let mut out = Vec::new();
        let mut inherited: BTreeMap<usize, (usize, usize)> = BTreeMap::new();
        for (i, (kept, read)) in self.remaining.iter().zip(&self.accessed).enumerate() {
            for (coord, &point) in initial_points.iter().enumerate() {
                let (role, source) = if let Some(&to) = kept.get(&coord) {
                    inherited.insert(to, (i, coord));
                    let role = if read.contains(&coord) {
                        SymbolRole::Accessed
                    } else {
                        SymbolRole::Remaining
                    };
                    (role, format!("kept as d[{to}]"))
                } else if read.contains(&coord) {
                    (SymbolRole::Accessed, "read".to_string())
                } else {
                    (SymbolRole::Untouched, String::new())
                };
                out.push(SymbolRecord {
                    codeword: format!("c{}", i + 1),
                    coord,
                    point,
                    role,
                    source,
                });
            }
        }
        for (coord, &point) in final_points.iter().enumerate() {
            let (role, source) = if let Some(&(i, from)) = inherited.get(&coord) {
                (SymbolRole::Remaining, format!("c{}[{from}]", i + 1))
            } else if let Some(how) = self.new_symbols.get(&coord) {
                (SymbolRole::New, how.clone())
            } else {
                (SymbolRole::Untouched, String::new())
            };
            out.push(SymbolRecord {
                codeword: "d".to_string(),
                coord,
                point,
                role,
                source,
            });
        }
        out
    }
}

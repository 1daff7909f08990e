//! Published fixed-point lists for bases 2 through 6.

use std::collections::BTreeMap;
use std::fmt;

use crate::word::{Base, Word};

/// Column order as printed.
pub const EMBEDDED: [(u32, &[&str]); 5] = [
    (2, &["111", "1001110"]),
    (
        3,
        &[
            "22", "11110", "12111", "101100", "1022120", "2211110", "22101100",
        ],
    ),
    (
        4,
        &[
            "22",
            "1211110",
            "1311110",
            "1312111",
            "23322110",
            "33123110",
            "132211110",
        ],
    ),
    (
        5,
        &[
            "22",
            "14233221",
            "14331231",
            "14333110",
            "23322110",
            "33123110",
            "131211110",
            "141211110",
            "141311110",
            "141312111",
            "1433223110",
            "14132211110",
        ],
    ),
    (
        6,
        &[
            "22",
            "14233221",
            "14331231",
            "14333110",
            "15143331",
            "15233221",
            "15331231",
            "15333110",
            "23322110",
            "33123110",
            "1433223110",
            "1514332231",
            "1533223110",
            "14131211110",
            "15131211110",
            "15141311110",
            "15141312111",
            "1514132211110",
        ],
    ),
];

/// Human-readable copy of [`EMBEDDED`], kept in sync by a test.
pub const FIXTURE: &str = include_str!("../../data/golden_table.txt");

/// Expected fixed points per base, as text.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoldenTable {
    columns: BTreeMap<u32, Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)
    }
}

impl std::error::Error for ParseError {}

/// A golden word that is malformed or not fixed under its column base.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Defect {
    pub base: u32,
    pub word: String,
    pub reason: String,
}

impl GoldenTable {
    pub fn embedded() -> Self {
        GoldenTable {
            columns: EMBEDDED
                .iter()
                .map(|(k, ws)| (*k, ws.iter().map(|w| w.to_string()).collect()))
                .collect(),
        }
    }

    /// Reads `k: word word ...` lines; `#` starts a comment. A base may
    /// span several lines.
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let mut columns: BTreeMap<u32, Vec<String>> = BTreeMap::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (head, rest) = line.split_once(':').ok_or_else(|| ParseError {
                line: i + 1,
                message: "expected `base: words...`".into(),
            })?;
            let k: u32 = head.trim().parse().map_err(|_| ParseError {
                line: i + 1,
                message: format!("bad base {:?}", head.trim()),
            })?;
            columns
                .entry(k)
                .or_default()
                .extend(rest.split_whitespace().map(str::to_string));
        }
        Ok(GoldenTable { columns })
    }

    pub fn bases(&self) -> impl Iterator<Item = u32> + '_ {
        self.columns.keys().copied()
    }

    pub fn column(&self, k: u32) -> &[String] {
        self.columns.get(&k).map_or(&[], Vec::as_slice)
    }

    /// Every word that fails to parse in its base or is not fixed.
    pub fn defects(&self) -> Vec<Defect> {
        let mut out = Vec::new();
        for (&k, words) in &self.columns {
            let base = match Base::new(k) {
                Ok(b) => b,
                Err(e) => {
                    out.extend(words.iter().map(|w| Defect {
                        base: k,
                        word: w.clone(),
                        reason: e.to_string(),
                    }));
                    continue;
                }
            };
            for w in words {
                let reason = match Word::parse(w, base) {
                    Err(e) => e.to_string(),
                    Ok(x) if !x.is_fixed_point() => format!("not fixed, maps to {}", x.step()),
                    Ok(_) => continue,
                };
                out.push(Defect {
                    base: k,
                    word: w.clone(),
                    reason,
                });
            }
        }
        out
    }
}

//! Serializable command results and their JSON, CSV and text renderings.

use std::io::{self, Write};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::dynamics::{BoundInfo, OrbitResult};
use crate::search::CycleRecord;
use crate::word::Word;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Table,
}

/// A command result that can be written in every output format.
pub trait Report: Serialize {
    fn write_csv(&self, out: &mut dyn Write) -> io::Result<()>;
    fn write_table(&self, out: &mut dyn Write) -> io::Result<()>;

    fn write_json(&self, out: &mut dyn Write) -> io::Result<()> {
        serde_json::to_writer_pretty(&mut *out, self)?;
        writeln!(out)
    }

    fn emit(&self, format: Format, out: &mut dyn Write) -> io::Result<()> {
        match format {
            Format::Json => self.write_json(out),
            Format::Csv => self.write_csv(out),
            Format::Table => self.write_table(out),
        }
    }
}

fn csv_writer(out: &mut dyn Write) -> csv::Writer<&mut dyn Write> {
    csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(out)
}

fn csv_rows<I, R>(out: &mut dyn Write, header: &[&str], rows: I) -> io::Result<()>
where
    I: IntoIterator<Item = R>,
    R: IntoIterator,
    R::Item: AsRef<[u8]>,
{
    let mut w = csv_writer(out);
    w.write_record(header)?;
    for row in rows {
        w.write_record(row)?;
    }
    w.flush()
}

/// Left-aligned columns separated by two spaces.
fn aligned(out: &mut dyn Write, header: &[&str], rows: &[Vec<String>]) -> io::Result<()> {
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    let line = |out: &mut dyn Write, cells: &[&str]| -> io::Result<()> {
        let mut s = String::new();
        for (i, (cell, w)) in cells.iter().zip(&widths).enumerate() {
            if i + 1 == cells.len() {
                s.push_str(cell);
            } else {
                s.push_str(&format!("{cell:<w$}  "));
            }
        }
        writeln!(out, "{}", s.trim_end())
    };
    line(out, header)?;
    for row in rows {
        let cells: Vec<&str> = row.iter().map(String::as_str).collect();
        line(out, &cells)?;
    }
    Ok(())
}

/// Iterates of the step map, serialized as a bare array of words.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct StepReport {
    pub iterates: Vec<String>,
}

impl StepReport {
    pub fn new(iterates: &[Word]) -> Self {
        StepReport {
            iterates: iterates.iter().map(Word::to_string).collect(),
        }
    }
}

impl Report for StepReport {
    fn write_csv(&self, out: &mut dyn Write) -> io::Result<()> {
        csv_rows(
            out,
            &["step", "word"],
            self.iterates
                .iter()
                .enumerate()
                .map(|(i, w)| [(i + 1).to_string(), w.clone()]),
        )
    }

    fn write_table(&self, out: &mut dyn Write) -> io::Result<()> {
        for w in &self.iterates {
            writeln!(out, "{w}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitReport {
    pub base: u32,
    pub start: String,
    pub transient: usize,
    pub period: usize,
    pub steps_taken: usize,
    pub cycle: Vec<String>,
}

impl From<&OrbitResult> for OrbitReport {
    fn from(o: &OrbitResult) -> Self {
        OrbitReport {
            base: o.start.base().get(),
            start: o.start.to_string(),
            transient: o.transient,
            period: o.period,
            steps_taken: o.steps_taken,
            cycle: o.cycle.iter().map(Word::to_string).collect(),
        }
    }
}

impl Report for OrbitReport {
    fn write_csv(&self, out: &mut dyn Write) -> io::Result<()> {
        csv_rows(
            out,
            &["base", "start", "transient", "period", "cycle"],
            [[
                self.base.to_string(),
                self.start.clone(),
                self.transient.to_string(),
                self.period.to_string(),
                self.cycle.join(" "),
            ]],
        )
    }

    fn write_table(&self, out: &mut dyn Write) -> io::Result<()> {
        writeln!(out, "start      {}", self.start)?;
        writeln!(out, "base       {}", self.base)?;
        writeln!(out, "transient  {}", self.transient)?;
        writeln!(out, "period     {}", self.period)?;
        writeln!(out, "cycle      {}", self.cycle.join(" -> "))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixedPointsReport {
    pub base: u32,
    /// Eventual length bound of the base.
    pub bound: usize,
    pub length_limit: usize,
    pub fixed_points: Vec<String>,
}

impl Report for FixedPointsReport {
    fn write_csv(&self, out: &mut dyn Write) -> io::Result<()> {
        csv_rows(
            out,
            &["base", "word", "length"],
            self.fixed_points
                .iter()
                .map(|w| [self.base.to_string(), w.clone(), w.len().to_string()]),
        )
    }

    fn write_table(&self, out: &mut dyn Write) -> io::Result<()> {
        let rows: Vec<Vec<String>> = self
            .fixed_points
            .iter()
            .map(|w| vec![self.base.to_string(), w.clone(), w.len().to_string()])
            .collect();
        aligned(out, &["base", "word", "length"], &rows)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleEntry {
    pub period: usize,
    pub words: Vec<String>,
}

impl From<&CycleRecord> for CycleEntry {
    fn from(c: &CycleRecord) -> Self {
        CycleEntry {
            period: c.period(),
            words: c.words().iter().map(Word::to_string).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CyclesReport {
    pub base: u32,
    pub length_limit: usize,
    pub cycles: Vec<CycleEntry>,
}

impl Report for CyclesReport {
    fn write_csv(&self, out: &mut dyn Write) -> io::Result<()> {
        csv_rows(
            out,
            &["base", "period", "words"],
            self.cycles.iter().map(|c| {
                [
                    self.base.to_string(),
                    c.period.to_string(),
                    c.words.join(" "),
                ]
            }),
        )
    }

    fn write_table(&self, out: &mut dyn Write) -> io::Result<()> {
        if self.cycles.is_empty() {
            return writeln!(out, "(no cycles)");
        }
        let rows: Vec<Vec<String>> = self
            .cycles
            .iter()
            .map(|c| vec![c.period.to_string(), c.words.join(" -> ")])
            .collect();
        aligned(out, &["period", "words"], &rows)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    Pass,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BaseVerdict {
    pub base: u32,
    pub status: Verdict,
    pub expected: usize,
    pub found: usize,
    /// Golden words the search did not produce.
    pub only_in_golden: Vec<String>,
    /// Searched words missing from the golden column.
    pub only_in_search: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GoldenDefect {
    pub base: u32,
    pub word: String,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub passed: bool,
    pub margin: usize,
    pub results: Vec<BaseVerdict>,
    pub golden_defects: Vec<GoldenDefect>,
}

impl Report for VerifyReport {
    fn write_csv(&self, out: &mut dyn Write) -> io::Result<()> {
        csv_rows(
            out,
            &[
                "base",
                "status",
                "expected",
                "found",
                "only_in_golden",
                "only_in_search",
            ],
            self.results.iter().map(|r| {
                [
                    r.base.to_string(),
                    format!("{:?}", r.status).to_uppercase(),
                    r.expected.to_string(),
                    r.found.to_string(),
                    r.only_in_golden.join(" "),
                    r.only_in_search.join(" "),
                ]
            }),
        )
    }

    fn write_table(&self, out: &mut dyn Write) -> io::Result<()> {
        for d in &self.golden_defects {
            writeln!(
                out,
                "golden word {} (base {}): {}",
                d.word, d.base, d.reason
            )?;
        }
        for r in &self.results {
            let status = match r.status {
                Verdict::Pass => "PASS",
                Verdict::Fail => "FAIL",
            };
            writeln!(
                out,
                "base {}: {status} ({} expected, {} found)",
                r.base, r.expected, r.found
            )?;
            if !r.only_in_golden.is_empty() {
                writeln!(out, "  only in golden: {}", r.only_in_golden.join(" "))?;
            }
            if !r.only_in_search.is_empty() {
                writeln!(out, "  only in search: {}", r.only_in_search.join(" "))?;
            }
        }
        writeln!(out, "{}", if self.passed { "all PASS" } else { "FAIL" })
    }
}

/// Bound report; the word count goes to JSON as an exact integer of any
/// size.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundReport {
    pub base: u32,
    pub length_bound: usize,
    pub words_up_to_bound: serde_json::Number,
}

impl From<&BoundInfo> for BoundReport {
    fn from(b: &BoundInfo) -> Self {
        BoundReport {
            base: b.base.get(),
            length_bound: b.length_bound,
            words_up_to_bound: serde_json::Number::from_str(&b.words_up_to_bound.to_string())
                .expect("decimal digits form a JSON number"),
        }
    }
}

impl Report for BoundReport {
    fn write_csv(&self, out: &mut dyn Write) -> io::Result<()> {
        csv_rows(
            out,
            &["base", "length_bound", "words_up_to_bound"],
            [[
                self.base.to_string(),
                self.length_bound.to_string(),
                self.words_up_to_bound.to_string(),
            ]],
        )
    }

    fn write_table(&self, out: &mut dyn Write) -> io::Result<()> {
        writeln!(out, "base               {}", self.base)?;
        writeln!(out, "length_bound       {}", self.length_bound)?;
        writeln!(out, "words_up_to_bound  {}", self.words_up_to_bound)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dynamics::length_bound;
    use crate::word::Base;

    fn render(r: &impl Report, f: Format) -> String {
        let mut buf = Vec::new();
        r.emit(f, &mut buf).unwrap();
        String::from_utf8(buf).unwrap()
    }

    fn fixed() -> FixedPointsReport {
        FixedPointsReport {
            base: 2,
            bound: 8,
            length_limit: 8,
            fixed_points: vec!["111".into(), "1001110".into()],
        }
    }

    #[test]
    fn fixed_points_csv() {
        assert_eq!(
            render(&fixed(), Format::Csv),
            "base,word,length\n2,111,3\n2,1001110,7\n"
        );
    }

    #[test]
    fn fixed_points_table() {
        assert_eq!(
            render(&fixed(), Format::Table),
            "base  word     length\n2     111      3\n2     1001110  7\n"
        );
    }

    #[test]
    fn json_round_trips() {
        let s = render(&fixed(), Format::Json);
        let back: FixedPointsReport = serde_json::from_str(&s).unwrap();
        assert_eq!(back, fixed());

        let big = BoundReport::from(&length_bound(Base::new(36).unwrap()));
        let s = render(&big, Format::Json);
        let back: BoundReport = serde_json::from_str(&s).unwrap();
        assert_eq!(back, big);
        assert_eq!(
            back.words_up_to_bound.to_string(),
            length_bound(Base::new(36).unwrap())
                .words_up_to_bound
                .to_string()
        );
    }

    #[test]
    fn bound_json_is_exact_integer() {
        let r = BoundReport::from(&length_bound(Base::new(6).unwrap()));
        let s = render(&r, Format::Json);
        assert!(s.contains("\"words_up_to_bound\": 564221981490"), "{s}");
        assert!(!s.contains('.'));
    }

    #[test]
    fn step_json_is_array() {
        let r = StepReport {
            iterates: vec!["131211".into(), "131241".into()],
        };
        assert_eq!(serde_json::to_string(&r).unwrap(), r#"["131211","131241"]"#);
    }

    #[test]
    fn empty_cycles_table() {
        let r = CyclesReport {
            base: 2,
            length_limit: 8,
            cycles: vec![],
        };
        assert_eq!(render(&r, Format::Table), "(no cycles)\n");
        assert_eq!(render(&r, Format::Csv), "base,period,words\n");
    }
}

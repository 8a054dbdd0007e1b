//! graph6 stream to JSONL, one line out per record in, in input order.
//!
//! Output is a pure function of the input line and the options unless
//! `timings` is set, so a resumed sweep produces the same bytes as a fresh
//! one.

use std::fs::{self, File, OpenOptions};
use std::io::{BufWriter, Write};
use std::path::Path;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::HarnessError;
use crate::coalition::{partner_count, PrcCertificate};
use crate::graph::{parse_graph6, Graph};
use crate::solver::{coalition_number_bruteforce, prc_solve, COALITION_NUMBER_MAX_N, SOLVE_MAX_N};

const GRAPH6_HEADER: &str = ">>graph6<<";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepOptions {
    /// Also compute C(G) for graphs small enough for the brute force.
    pub with_c: bool,
    /// Lines with more vertices become error records.
    pub max_n: Option<usize>,
    /// Include per-graph wall time. Makes the output run-dependent.
    pub timings: bool,
    /// Lines solved in parallel between flushes.
    pub batch: usize,
}

impl Default for SweepOptions {
    fn default() -> Self {
        SweepOptions { with_c: false, max_n: None, timings: false, batch: 256 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepRecord {
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    pub prc: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub c_number: Option<usize>,
    /// Every block of the certificate has at most Δ partners (Δ + 1 when
    /// the graph is disconnected). True when there is no certificate.
    pub delta_bound_ok: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepError {
    /// 1-based index among the non-blank input records.
    pub line: usize,
    pub input: String,
    pub error: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum SweepLine {
    Record(SweepRecord),
    Error(SweepError),
}

#[derive(Copy, Clone, Debug, Default, PartialEq, Eq)]
pub struct SweepSummary {
    /// Records already present in the output and skipped on resume.
    pub resumed: usize,
    pub written: usize,
    pub errors: usize,
}

fn delta_bound_ok(g: &Graph, cert: Option<&PrcCertificate>) -> bool {
    let Some(cert) = cert else { return true };
    let bound = g.max_degree() + usize::from(!g.is_connected());
    (0..cert.partition.len())
        .all(|i| partner_count(g, &cert.partition, i).is_ok_and(|c| c <= bound))
}

/// Processes one input record; `line` is its 1-based position.
pub fn sweep_line(line: usize, text: &str, opts: &SweepOptions) -> SweepLine {
    let error = |msg: String| SweepLine::Error(SweepError { line, input: text.to_string(), error: msg });
    let g = match parse_graph6(text) {
        Ok(g) => g,
        Err(e) => return error(e.to_string()),
    };
    let limit = opts.max_n.unwrap_or(SOLVE_MAX_N).min(SOLVE_MAX_N);
    if g.n() > limit {
        return error(format!("{} vertices exceeds the limit of {limit}", g.n()));
    }
    let start = Instant::now();
    let result = match prc_solve(&g) {
        Ok(r) => r,
        Err(e) => return error(e.to_string()),
    };
    let c_number = if opts.with_c && g.n() <= COALITION_NUMBER_MAX_N {
        coalition_number_bruteforce(&g).ok()
    } else {
        None
    };
    SweepLine::Record(SweepRecord {
        graph6: text.to_string(),
        n: g.n(),
        m: g.edge_count(),
        prc: result.prc,
        c_number,
        delta_bound_ok: delta_bound_ok(&g, result.certificate.as_ref()),
        elapsed_ms: opts.timings.then(|| start.elapsed().as_millis() as u64),
    })
}

fn records(input: &str) -> impl Iterator<Item = &str> {
    input
        .lines()
        .map(|l| l.trim().strip_prefix(GRAPH6_HEADER).unwrap_or(l.trim()))
        .filter(|l| !l.is_empty())
}

/// Complete lines in `path`, after cutting off a partial trailing line.
fn resume_point(path: &Path) -> Result<usize, HarnessError> {
    let bytes = match fs::read(path) {
        Ok(b) => b,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(0),
        Err(e) => return Err(HarnessError::io(path, e)),
    };
    let keep = bytes.iter().rposition(|&b| b == b'\n').map_or(0, |i| i + 1);
    if keep < bytes.len() {
        let f = OpenOptions::new().write(true).open(path).map_err(|e| HarnessError::io(path, e))?;
        f.set_len(keep as u64).map_err(|e| HarnessError::io(path, e))?;
    }
    Ok(bytes[..keep].iter().filter(|&&b| b == b'\n').count())
}

/// Sweeps the graph6 file `input` into the JSONL file `output`. With
/// `resume`, records already in `output` are kept and their inputs skipped.
/// Unparsable lines become error records; only I/O failures are errors.
pub fn cmd_sweep(input: &Path, output: &Path, resume: bool, opts: &SweepOptions) -> Result<SweepSummary, HarnessError> {
    let text = fs::read_to_string(input).map_err(|e| HarnessError::io(input, e))?;
    let lines: Vec<&str> = records(&text).collect();
    let done = if resume { resume_point(output)? } else { 0 };
    let file = if resume {
        OpenOptions::new().create(true).append(true).open(output)
    } else {
        File::create(output)
    }
    .map_err(|e| HarnessError::io(output, e))?;
    let mut out = BufWriter::new(file);

    let mut summary = SweepSummary { resumed: done.min(lines.len()), ..Default::default() };
    let todo: Vec<(usize, &str)> = lines.iter().copied().enumerate().skip(done).collect();
    for chunk in todo.chunks(opts.batch.max(1)) {
        let rendered: Vec<(bool, String)> = chunk
            .par_iter()
            .map(|&(i, l)| {
                let rec = sweep_line(i + 1, l, opts);
                let is_err = matches!(rec, SweepLine::Error(_));
                (is_err, serde_json::to_string(&rec).expect("records serialize"))
            })
            .collect();
        for (is_err, line) in rendered {
            writeln!(out, "{line}").map_err(|e| HarnessError::io(output, e))?;
            summary.written += 1;
            summary.errors += usize::from(is_err);
        }
        out.flush().map_err(|e| HarnessError::io(output, e))?;
    }
    Ok(summary)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn record_fields() {
        let opts = SweepOptions { with_c: true, ..Default::default() };
        let SweepLine::Record(r) = sweep_line(1, "C~", &opts) else { panic!() };
        assert_eq!((r.n, r.m, r.prc, r.c_number), (4, 6, 4, Some(4)));
        assert!(r.delta_bound_ok);
        assert!(r.elapsed_ms.is_none());
        let json = serde_json::to_string(&SweepLine::Record(r)).unwrap();
        assert_eq!(json, r#"{"graph6":"C~","n":4,"m":6,"prc":4,"c_number":4,"delta_bound_ok":true}"#);
    }

    #[test]
    fn error_records() {
        let opts = SweepOptions { max_n: Some(3), ..Default::default() };
        let SweepLine::Error(e) = sweep_line(7, "C~", &opts) else { panic!() };
        assert_eq!(e.line, 7);
        assert!(matches!(sweep_line(2, "not graph6!", &opts), SweepLine::Error(_)));
        let back: SweepLine = serde_json::from_str(&serde_json::to_string(&SweepLine::Error(e.clone())).unwrap()).unwrap();
        assert_eq!(back, SweepLine::Error(e));
    }

    #[test]
    fn header_and_blank_lines_are_skipped() {
        let got: Vec<_> = records(">>graph6<<C~\n\n  Bg \n").collect();
        assert_eq!(got, vec!["C~", "Bg"]);
    }
}

//! Text formats shared by the CLI and the verifiers. All output is UTF-8
//! with LF line endings.

use std::fmt;
use std::io::{self, Write};
use std::str::FromStr;

use serde::Deserialize;

use crate::bridges::{AugmentedFactor, OrbitTree};
use crate::error::{Error, Result};
use crate::guide::GuideCycle;
use crate::orbits::OrbitPartition;
use crate::polygon::{Diagonal, Triangulation};
use crate::splice::HamiltonianCycle;

pub const KNESER_HEADER: &str = "kneser-ham";
pub const GUIDE_HEADER: &str = "guide";
pub const PERM_HEADER: &str = "perm-ham";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum CycleFormat {
    /// Header line, then one canonical encoding per line.
    #[default]
    Compact,
    /// One `{"diagonals": [[i,j],...]}` object per line, no header.
    Jsonl,
}

impl FromStr for CycleFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "compact" => Ok(CycleFormat::Compact),
            "jsonl" => Ok(CycleFormat::Jsonl),
            other => Err(Error::Syntax(format!("unknown format `{other}` (expected compact or jsonl)"))),
        }
    }
}

impl fmt::Display for CycleFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CycleFormat::Compact => "compact",
            CycleFormat::Jsonl => "jsonl",
        })
    }
}

pub fn jsonl_line(t: &Triangulation) -> String {
    let pairs: Vec<String> = t.diagonals().map(|d| format!("[{},{}]", d.i(), d.j())).collect();
    format!("{{\"diagonals\": [{}]}}", pairs.join(","))
}

#[derive(Deserialize)]
struct JsonTriangulation {
    diagonals: Vec<(usize, usize)>,
}

/// Parses one jsonl record. Malformed JSON is a [`Error::Syntax`]; a
/// well-formed record that is not a triangulation is a semantic error.
pub fn parse_jsonl_line(line: &str, n: usize) -> Result<Triangulation> {
    let rec: JsonTriangulation =
        serde_json::from_str(line).map_err(|e| Error::Syntax(format!("bad jsonl record: {e}")))?;
    let diagonals = rec
        .diagonals
        .into_iter()
        .map(|(i, j)| Diagonal::new(i, j, n))
        .collect::<Result<Vec<_>>>()?;
    Triangulation::from_diagonals(n, diagonals)
}

/// A `<tag> n=<n> len=<len>` header line.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Header {
    pub n: usize,
    pub len: u64,
}

pub fn parse_header(line: &str, tag: &str) -> Result<Header> {
    let mut words = line.split_whitespace();
    if words.next() != Some(tag) {
        return Err(Error::Syntax(format!("expected header `{tag} n=<n> len=<len>`")));
    }
    let mut n = None;
    let mut len = None;
    for w in words {
        match w.split_once('=') {
            Some(("n", v)) => n = v.parse().ok(),
            Some(("len", v)) => len = v.parse().ok(),
            _ => return Err(Error::Syntax(format!("unexpected header field `{w}`"))),
        }
    }
    match (n, len) {
        (Some(n), Some(len)) => Ok(Header { n, len }),
        _ => Err(Error::Syntax("header needs numeric n= and len=".into())),
    }
}

pub fn write_hamiltonian<W: Write>(cycle: &HamiltonianCycle, format: CycleFormat, mut out: W) -> io::Result<()> {
    match format {
        CycleFormat::Compact => {
            writeln!(out, "{}", cycle.header())?;
            for t in cycle.iter() {
                writeln!(out, "{t}")?;
            }
        }
        CycleFormat::Jsonl => {
            for t in cycle.iter() {
                writeln!(out, "{}", jsonl_line(&t))?;
            }
        }
    }
    out.flush()
}

pub fn write_guide<W: Write>(guide: &GuideCycle, mut out: W) -> io::Result<()> {
    writeln!(out, "{GUIDE_HEADER} n={} len={}", guide.n(), guide.len())?;
    for t in guide.seq() {
        writeln!(out, "{t}")?;
    }
    out.flush()
}

pub fn write_orbits<W: Write>(part: &OrbitPartition, mut out: W) -> io::Result<()> {
    for (id, o) in part.orbits().iter().enumerate() {
        writeln!(out, "orbit {id} size={} rep={}", o.size(), o.rep())?;
    }
    out.flush()
}

/// Tree edges in first-appearance order, then the chosen bridges.
pub fn write_bridges<W: Write>(tree: &OrbitTree, factor: &AugmentedFactor, mut out: W) -> io::Result<()> {
    writeln!(out, "tree root={} orbits={}", tree.root(), tree.order().len())?;
    for e in tree.edges() {
        writeln!(
            out,
            "edge child={} parent={} witness={}|{}",
            e.child, e.parent, e.witness_parent, e.witness_child
        )?;
    }
    for b in factor.bridges() {
        writeln!(
            out,
            "bridge child={} parent={} eps={:+} sigma={} a={} b={}",
            b.child, b.parent, b.epsilon, b.sigma, b.a, b.b
        )?;
    }
    out.flush()
}

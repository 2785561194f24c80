//! Certificates: a streaming checker for Kneser Hamiltonian cycles, a
//! brute-force adjacency oracle, the structural property suites and a
//! backtracking cross-check for flip-graph cycles.

mod lemmas;
pub mod mutate;
mod oracle;
mod search;

use std::fmt;
use std::io::BufRead;

use crate::error::{Error, Result};
use crate::exec::{self, Execution};
use crate::format::{parse_header, parse_jsonl_line, KNESER_HEADER};
use crate::polygon::{catalan, Catalog, PolygonSize, Triangulation};

pub use lemmas::{
    check_augmented_factor, check_flip_bridges, check_guide_cycle, check_guide_orbits, check_orbit_sizes,
    check_rotation_disjoint, verify_lemmas, Coverage,
};
pub use oracle::{brute_force_kneser_graph, KneserOracle, ORACLE_MAX_N};
pub use search::{backtrack_flip_cycle, SEARCH_MAX_M};

/// Lines parsed and checked per batch by the streaming verifier.
pub const CHUNK: usize = 1 << 14;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    /// Concrete counterexample, always present on failure.
    pub witness: Option<String>,
}

impl Check {
    pub fn pass(name: &'static str, detail: impl Into<String>) -> Self {
        Check {
            name,
            passed: true,
            detail: detail.into(),
            witness: None,
        }
    }

    pub fn fail(name: &'static str, detail: impl Into<String>, witness: impl Into<String>) -> Self {
        Check {
            name,
            passed: false,
            detail: detail.into(),
            witness: Some(witness.into()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertificateReport {
    pub kind: String,
    pub n: usize,
    pub checks: Vec<Check>,
}

impl CertificateReport {
    pub fn new(kind: impl Into<String>, n: usize) -> Self {
        CertificateReport {
            kind: kind.into(),
            n,
            checks: Vec::new(),
        }
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    /// `RESULT pass|fail checks=<k>`.
    pub fn summary_line(&self) -> String {
        let verdict = if self.passed() { "pass" } else { "fail" };
        format!("RESULT {verdict} checks={}", self.checks.len())
    }
}

impl fmt::Display for CertificateReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "certificate {} n={}", self.kind, self.n)?;
        for c in &self.checks {
            let tag = if c.passed { "pass" } else { "FAIL" };
            writeln!(f, "  [{tag}] {}: {}", c.name, c.detail)?;
            if let Some(w) = &c.witness {
                writeln!(f, "         witness: {w}")?;
            }
        }
        write!(f, "{}", self.summary_line())
    }
}

fn shared_diagonal(a: &Triangulation, b: &Triangulation) -> String {
    a.diagonals()
        .find(|d| b.contains(*d))
        .map(|d| d.to_string())
        .unwrap_or_else(|| "?".into())
}

/// One parsed certificate entry: its 0-based index in the cycle, the line it
/// came from and the decoded triangulation (or why it is not one).
type Entry = (u64, usize, std::result::Result<Triangulation, String>);

/// Incremental cycle checker; memory is the catalog plus one bit per vertex.
struct CycleChecker<'a> {
    catalog: &'a Catalog,
    exec: Execution,
    seen: Vec<u64>,
    count: u64,
    first: Option<(u64, usize, Triangulation)>,
    last: Option<(u64, usize, Triangulation)>,
    invalid: Option<String>,
    invalid_count: u64,
    clash: Option<String>,
    duplicate: Option<String>,
}

impl<'a> CycleChecker<'a> {
    fn new(catalog: &'a Catalog, exec: Execution) -> Self {
        CycleChecker {
            catalog,
            exec,
            seen: vec![0; catalog.len().div_ceil(64)],
            count: 0,
            first: None,
            last: None,
            invalid: None,
            invalid_count: 0,
            clash: None,
            duplicate: None,
        }
    }

    fn clash_witness(a: (u64, usize, &Triangulation), b: (u64, usize, &Triangulation)) -> String {
        format!(
            "entries #{} (line {}) `{}` and #{} (line {}) `{}` share diagonal {}",
            a.0,
            a.1,
            a.2,
            b.0,
            b.1,
            b.2,
            shared_diagonal(a.2, b.2)
        )
    }

    fn feed(&mut self, entries: &[Entry]) {
        if entries.is_empty() {
            return;
        }
        let catalog = self.catalog;
        let n = catalog.n();
        let ranks: Vec<Option<u32>> = exec::map(entries, self.exec, |(_, _, e)| {
            e.as_ref().ok().filter(|t| t.n() == n).and_then(|t| catalog.rank(t))
        });

        let bad = ranks.iter().filter(|r| r.is_none()).count() as u64;
        self.invalid_count += bad;
        if self.invalid.is_none() && bad > 0 {
            let k = ranks.iter().position(Option::is_none).expect("counted");
            let (idx, line, e) = &entries[k];
            let why = match e {
                Ok(t) => format!("triangulation of the {}-gon, expected n={n}", t.n()),
                Err(msg) => msg.clone(),
            };
            self.invalid = Some(format!("entry #{idx} (line {line}): {why}"));
        }

        if self.clash.is_none() {
            if let (Some((i, li, a)), Ok(b)) = (&self.last, &entries[0].2) {
                if !a.is_disjoint(b) {
                    self.clash = Some(Self::clash_witness((*i, *li, a), (entries[0].0, entries[0].1, b)));
                }
            }
        }
        if self.clash.is_none() {
            let hit = exec::find_first(entries.len() - 1, self.exec, |k| match (&entries[k].2, &entries[k + 1].2) {
                (Ok(a), Ok(b)) if !a.is_disjoint(b) => Some(()),
                _ => None,
            });
            if let Some((k, ())) = hit {
                let (ia, la, a) = &entries[k];
                let (ib, lb, b) = &entries[k + 1];
                self.clash = Some(Self::clash_witness(
                    (*ia, *la, a.as_ref().expect("valid")),
                    (*ib, *lb, b.as_ref().expect("valid")),
                ));
            }
        }

        for (k, rank) in ranks.iter().enumerate() {
            let Some(r) = rank else { continue };
            let (word, bit) = ((*r / 64) as usize, *r % 64);
            if self.seen[word] >> bit & 1 == 1 {
                if self.duplicate.is_none() {
                    let (idx, line, t) = &entries[k];
                    self.duplicate = Some(format!(
                        "entry #{idx} (line {line}) `{}` already appeared earlier",
                        t.as_ref().expect("ranked")
                    ));
                }
            } else {
                self.seen[word] |= 1 << bit;
            }
        }

        self.count += entries.len() as u64;
        let keep = |(i, l, e): &Entry| e.as_ref().ok().map(|t| (*i, *l, *t));
        if self.count == entries.len() as u64 {
            self.first = keep(&entries[0]);
        }
        self.last = keep(&entries[entries.len() - 1]);
    }

    fn finish(mut self, report: &mut CertificateReport) {
        let expected = self.catalog.len() as u64;
        if self.clash.is_none() && self.count > 1 {
            if let (Some(a), Some(b)) = (&self.last, &self.first) {
                if !a.2.is_disjoint(&b.2) {
                    self.clash = Some(format!(
                        "wraparound: {}",
                        Self::clash_witness((a.0, a.1, &a.2), (b.0, b.1, &b.2))
                    ));
                }
            }
        }
        let n = self.catalog.n();
        report.push(match self.invalid {
            None => Check::pass("valid", format!("{} entries are triangulations of the {n}-gon", self.count)),
            Some(w) => Check::fail("valid", format!("{} invalid entries", self.invalid_count), w),
        });
        report.push(match self.clash {
            None => Check::pass("disjoint", "consecutive entries share no diagonal, including wraparound"),
            Some(w) => Check::fail("disjoint", "consecutive entries share a diagonal", w),
        });
        report.push(match self.duplicate {
            None => Check::pass("distinct", "no triangulation repeats"),
            Some(w) => Check::fail("distinct", "a triangulation repeats", w),
        });
        let covered: u64 = self.seen.iter().map(|w| w.count_ones() as u64).sum();
        report.push(if self.count == expected && covered == expected {
            Check::pass("count", format!("{expected} entries = C({})", n - 2))
        } else {
            let missing = (0..expected as u32)
                .find(|&r| self.seen[(r / 64) as usize] >> (r % 64) & 1 == 0)
                .map(|r| format!("; first missing `{}`", self.catalog.get(r)))
                .unwrap_or_default();
            Check::fail(
                "count",
                format!("expected {expected} entries"),
                format!("found {} entries covering {covered} triangulations{missing}", self.count),
            )
        });
    }
}

fn cycle_catalog(n: usize, exec: Execution) -> Result<Catalog> {
    PolygonSize::new(n)?;
    if n < 5 {
        return Err(Error::TooSmall { n, min: 5 });
    }
    Catalog::build(n, exec)
}

/// Verifies a certificate: either a `kneser-ham n=<n> len=<len>` header
/// followed by one encoding per line, or headerless jsonl. Blank lines are
/// ignored. Malformed lines abort with [`Error::Parse`]; everything else is
/// reported as a failed check with a witness.
pub fn verify_kneser_cycle<R: BufRead>(reader: R, n: usize, exec: Execution) -> Result<CertificateReport> {
    let catalog = cycle_catalog(n, exec)?;
    let expected = catalog.len() as u64;
    let mut report = CertificateReport::new(KNESER_HEADER, n);
    let mut checker = CycleChecker::new(&catalog, exec);

    let mut lines = reader.lines().enumerate().map(|(k, l)| (k + 1, l));
    let mut pending: Vec<(usize, String)> = Vec::with_capacity(CHUNK);
    let mut header = None;
    let mut jsonl = false;
    for (line_no, line) in lines.by_ref() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        if line.trim_start().starts_with('{') {
            jsonl = true;
            pending.push((line_no, line));
        } else {
            let h = parse_header(&line, KNESER_HEADER).map_err(|e| Error::Parse {
                line: line_no,
                message: e.to_string(),
            })?;
            header = Some(h);
        }
        break;
    }
    report.push(match header {
        None if jsonl => Check::pass("header", "jsonl stream, no header"),
        None => Check::fail("header", "empty input", "no header line"),
        Some(h) if h.n == n && h.len == expected => Check::pass("header", format!("n={} len={}", h.n, h.len)),
        Some(h) => Check::fail(
            "header",
            format!("expected n={n} len={expected}"),
            format!("header says n={} len={}", h.n, h.len),
        ),
    });

    let mut index = 0u64;
    let mut flush = |pending: &mut Vec<(usize, String)>, checker: &mut CycleChecker| -> Result<()> {
        let parsed: Vec<std::result::Result<Entry, Error>> = exec::map(pending, exec, |(line_no, text)| {
            let decoded = if jsonl {
                parse_jsonl_line(text, n)
            } else {
                Triangulation::decode(text, n)
            };
            match decoded {
                Ok(t) => Ok((0, *line_no, Ok(t))),
                Err(Error::Syntax(message)) => Err(Error::Parse { line: *line_no, message }),
                Err(e) => Ok((0, *line_no, Err(e.to_string()))),
            }
        });
        let mut entries = Vec::with_capacity(parsed.len());
        for p in parsed {
            let mut e = p?;
            e.0 = index;
            index += 1;
            entries.push(e);
        }
        checker.feed(&entries);
        pending.clear();
        Ok(())
    };
    for (line_no, line) in lines {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        pending.push((line_no, line));
        if pending.len() == CHUNK {
            flush(&mut pending, &mut checker)?;
        }
    }
    flush(&mut pending, &mut checker)?;
    checker.finish(&mut report);
    Ok(report)
}

/// In-memory variant of [`verify_kneser_cycle`] without the header check.
pub fn verify_kneser_sequence(seq: &[Triangulation], n: usize, exec: Execution) -> Result<CertificateReport> {
    let catalog = cycle_catalog(n, exec)?;
    let mut report = CertificateReport::new(KNESER_HEADER, n);
    let mut checker = CycleChecker::new(&catalog, exec);
    for (c, chunk) in seq.chunks(CHUNK).enumerate() {
        let entries: Vec<Entry> = chunk
            .iter()
            .enumerate()
            .map(|(k, t)| {
                let idx = c * CHUNK + k;
                (idx as u64, idx + 1, Ok(*t))
            })
            .collect();
        checker.feed(&entries);
    }
    checker.finish(&mut report);
    Ok(report)
}

/// Number of triangulations the verifier expects for `n`.
pub fn expected_len(n: usize) -> u64 {
    catalan(n.saturating_sub(2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::format::{write_hamiltonian, CycleFormat};
    use crate::splice::build_hamiltonian;

    fn certificate(n: usize, format: CycleFormat) -> String {
        let cycle = build_hamiltonian(n).unwrap();
        let mut buf = Vec::new();
        write_hamiltonian(&cycle, format, &mut buf).unwrap();
        String::from_utf8(buf).unwrap()
    }

    #[test]
    fn accepts_pipeline_output() {
        for n in 5..=9 {
            for format in [CycleFormat::Compact, CycleFormat::Jsonl] {
                let text = certificate(n, format);
                let r = verify_kneser_cycle(text.as_bytes(), n, Execution::Parallel).unwrap();
                assert!(r.passed(), "{r}");
                assert_eq!(r.checks.len(), 5);
                assert!(r.to_string().ends_with("RESULT pass checks=5"));
            }
        }
    }

    #[test]
    fn swap_across_orbit_boundary_is_rejected() {
        let text = certificate(8, CycleFormat::Compact);
        let mut lines: Vec<&str> = text.lines().collect();
        lines.swap(1, 2);
        let r = verify_kneser_cycle(lines.join("\n").as_bytes(), 8, Execution::Sequential).unwrap();
        assert!(!r.passed());
        let c = r.check("disjoint").unwrap();
        assert!(!c.passed);
        assert!(c.witness.as_ref().unwrap().contains("share diagonal"));
    }

    #[test]
    fn duplicate_and_deletion_are_rejected() {
        let text = certificate(7, CycleFormat::Compact);
        let lines: Vec<&str> = text.lines().collect();
        let mut dup = lines.clone();
        dup[10] = lines[20];
        let r = verify_kneser_cycle(dup.join("\n").as_bytes(), 7, Execution::Sequential).unwrap();
        assert!(!r.check("distinct").unwrap().passed);
        let mut del = lines.clone();
        del.remove(5);
        let r = verify_kneser_cycle(del.join("\n").as_bytes(), 7, Execution::Sequential).unwrap();
        assert!(!r.check("count").unwrap().passed);
        assert!(r.check("count").unwrap().witness.as_ref().unwrap().contains("first missing"));
    }

    #[test]
    fn header_and_parse_errors() {
        let text = certificate(6, CycleFormat::Compact);
        let r = verify_kneser_cycle(text.as_bytes(), 7, Execution::Sequential).unwrap();
        assert!(!r.check("header").unwrap().passed);
        assert!(!r.check("valid").unwrap().passed);

        let broken = text.replacen("1-3", "1_3", 1);
        match verify_kneser_cycle(broken.as_bytes(), 6, Execution::Sequential) {
            Err(Error::Parse { line, .. }) => assert!(line >= 2),
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            verify_kneser_cycle("hello\n".as_bytes(), 6, Execution::Sequential),
            Err(Error::Parse { line: 1, .. })
        ));
        let semantic = text.replacen("\n1-3,", "\n1-3,1-4,", 1);
        let r = verify_kneser_cycle(semantic.as_bytes(), 6, Execution::Sequential).unwrap();
        assert!(!r.check("valid").unwrap().passed);
        assert!(matches!(
            verify_kneser_cycle("".as_bytes(), 4, Execution::Sequential),
            Err(Error::TooSmall { .. })
        ));
    }

    #[test]
    fn sequence_and_stream_agree() {
        let cycle = build_hamiltonian(8).unwrap();
        let mut seq = cycle.to_vec();
        assert!(verify_kneser_sequence(&seq, 8, Execution::Sequential).unwrap().passed());
        seq.rotate_left(17);
        assert!(verify_kneser_sequence(&seq, 8, Execution::Parallel).unwrap().passed());
        seq.swap(0, 100);
        let r = verify_kneser_sequence(&seq, 8, Execution::Parallel).unwrap();
        assert!(!r.passed());
        assert!(r.failures().all(|c| c.witness.is_some()));
    }

    /// Deletions, repeats and overwrites always break the cycle. An adjacent
    /// swap can produce another Hamiltonian cycle; then the verdict must
    /// match the brute-force oracle.
    #[test]
    fn mutations_match_oracle() {
        for n in 5..=9 {
            let oracle = brute_force_kneser_graph(n, Execution::Parallel).unwrap();
            let seq = build_hamiltonian(n).unwrap().to_vec();
            let mut still_valid = 0;
            for m in mutate::all_single_mutations(seq.len()) {
                let mutated = m.apply(&seq);
                let r = verify_kneser_sequence(&mutated, n, Execution::Sequential).unwrap();
                assert!(r.failures().all(|c| c.witness.is_some()));
                match m {
                    mutate::Mutation::Swap(_) => {
                        let genuine = oracle.cycle_mismatches(&mutated).is_empty();
                        assert_eq!(r.passed(), genuine, "n={n} {m:?}");
                        still_valid += usize::from(genuine);
                    }
                    _ => assert!(!r.passed(), "n={n} {m:?} accepted"),
                }
            }
            if n <= 6 {
                assert_eq!(still_valid, 0);
            }
        }
    }
}

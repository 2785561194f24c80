//! The Kneser graph of the permutohedron.
//!
//! Vertices are the permutations of `[n]`. Two are adjacent when they share
//! no facet, i.e. when the preimages of `[k]` differ for every `k < n`.
//! Permutations act on the left: `a.compose(b)` applies `b` first.

use std::fmt;
use std::io::{BufRead, Write};

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exec::{self, Execution};
use crate::format::{parse_header, PERM_HEADER};
use crate::verify::{CertificateReport, Check, CHUNK};

/// Largest n accepted by the cycle generator and verifier (10! lines).
pub const PERM_MAX_N: usize = 10;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation(Vec<u8>);

impl Permutation {
    /// From one-line notation `σ(1), ..., σ(n)`.
    pub fn new(images: &[usize]) -> Result<Self> {
        let n = images.len();
        if n == 0 || n > u8::MAX as usize {
            return Err(Error::InvalidPermutation(format!("length {n} out of range")));
        }
        let mut seen = vec![false; n + 1];
        for &v in images {
            if v == 0 || v > n || seen[v] {
                return Err(Error::InvalidPermutation(format!("{images:?} is not a bijection on [{n}]")));
            }
            seen[v] = true;
        }
        Ok(Permutation(images.iter().map(|&v| v as u8).collect()))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n as u8).collect())
    }

    /// The n-cycle `i -> i + 1 (mod n)`, one-line `[2, 3, ..., n, 1]`.
    pub fn rho(n: usize) -> Self {
        Permutation((1..=n as u8).map(|i| i % n as u8 + 1).collect())
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn images(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().map(|&v| v as usize)
    }

    /// `σ(i)` for `1 <= i <= n`.
    pub fn apply(&self, i: usize) -> usize {
        self.0[i - 1] as usize
    }

    /// `self ∘ other`: apply `other`, then `self`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.n(), other.n(), "composing permutations of different sizes");
        Permutation(other.0.iter().map(|&v| self.0[v as usize - 1]).collect())
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u8; self.n()];
        for (i, &v) in self.0.iter().enumerate() {
            inv[v as usize - 1] = i as u8 + 1;
        }
        Permutation(inv)
    }

    /// `ρ^j ∘ self`.
    pub fn rotate(&self, j: usize) -> Permutation {
        let n = self.n();
        Permutation(self.0.iter().map(|&v| ((v as usize - 1 + j) % n + 1) as u8).collect())
    }

    /// Position in lexicographic order, `0..n!`.
    pub fn lehmer_rank(&self) -> u64 {
        let n = self.n();
        let mut rank = 0u64;
        for i in 0..n {
            let smaller = self.0[i + 1..].iter().filter(|&&v| v < self.0[i]).count() as u64;
            rank = rank * (n - i) as u64 + smaller;
        }
        rank
    }

    /// Parses space-separated one-line notation.
    pub fn parse(text: &str) -> Result<Self> {
        let images = text
            .split_whitespace()
            .map(|w| w.parse::<usize>().map_err(|_| Error::Syntax(format!("bad permutation entry `{w}`"))))
            .collect::<Result<Vec<_>>>()?;
        Permutation::new(&images)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, v) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

fn same_n(a: &Permutation, b: &Permutation) -> Result<()> {
    if a.n() != b.n() {
        return Err(Error::MismatchedSize {
            left: a.n(),
            right: b.n(),
        });
    }
    Ok(())
}

/// Adjacency from the facet definition: `σ^{-1}([k]) != τ^{-1}([k])` for
/// every `k` in `1..n`.
pub fn kg_perm_adjacent(sigma: &Permutation, tau: &Permutation) -> Result<bool> {
    same_n(sigma, tau)?;
    let n = sigma.n();
    if n < 2 {
        return Ok(false);
    }
    let (si, ti) = (sigma.inverse(), tau.inverse());
    // Membership in sigma^{-1}([k]) minus membership in tau^{-1}([k]).
    let mut diff = vec![0i8; n + 1];
    let mut unequal = 0usize;
    for k in 1..n {
        for (pos, delta) in [(si.apply(k), 1), (ti.apply(k), -1)] {
            let before = diff[pos];
            diff[pos] += delta;
            unequal = unequal + usize::from(diff[pos] != 0) - usize::from(before != 0);
        }
        if unequal == 0 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// No proper prefix `[p]` is mapped onto itself.
pub fn is_indecomposable(sigma: &Permutation) -> bool {
    let mut max = 0;
    for p in 1..sigma.n() {
        max = max.max(sigma.apply(p));
        if max == p {
            return false;
        }
    }
    true
}

/// Adjacency through the group structure: `τ ∘ σ^{-1}` is indecomposable.
pub fn adjacent_by_indecomposable(sigma: &Permutation, tau: &Permutation) -> Result<bool> {
    same_n(sigma, tau)?;
    Ok(sigma.n() >= 2 && is_indecomposable(&tau.compose(&sigma.inverse())))
}

fn factorials(n: usize) -> Vec<BigUint> {
    let mut f = vec![BigUint::one()];
    for k in 1..=n {
        let next = &f[k - 1] * BigUint::from(k);
        f.push(next);
    }
    f
}

pub fn factorial(n: usize) -> BigUint {
    factorials(n).pop().expect("non-empty")
}

/// `I(1..=n)` by `I(m) = m! - sum_{k<m} I(k) (m-k)!`; index 0 is unused.
fn indecomposable_table(n: usize) -> Vec<BigUint> {
    let f = factorials(n);
    let mut table = vec![BigUint::zero(); n + 1];
    for m in 1..=n {
        let decomposable: BigUint = (1..m).map(|k| &table[k] * &f[m - k]).sum();
        table[m] = &f[m] - decomposable;
    }
    table
}

pub fn count_indecomposable(n: usize) -> BigUint {
    indecomposable_table(n).pop().expect("non-empty")
}

/// Exact form of the estimate on decomposable permutations:
/// `n! - I(n) <= sum_{p=1}^{n-1} p! (n-p)!`.
pub fn decomposable_bound_holds(n: usize) -> bool {
    let f = factorials(n);
    let bound: BigUint = (1..n).map(|p| &f[p] * &f[n - p]).sum();
    &f[n] - count_indecomposable(n) <= bound
}

/// Steinhaus-Johnson-Trotter order of all permutations of `[m]`, starting at
/// the identity; consecutive members differ by one adjacent transposition.
#[derive(Clone, Debug)]
pub struct Sjt {
    perm: Vec<u8>,
    /// `true` when the element at that position points left.
    left: Vec<bool>,
    done: bool,
}

impl Sjt {
    pub fn new(m: usize) -> Self {
        Sjt {
            perm: (1..=m as u8).collect(),
            left: vec![true; m],
            done: m == 0,
        }
    }

    fn advance(&mut self) -> bool {
        let m = self.perm.len();
        let mobile = (0..m)
            .filter(|&i| {
                let j = if self.left[i] { i.checked_sub(1) } else { (i + 1 < m).then_some(i + 1) };
                j.is_some_and(|j| self.perm[j] < self.perm[i])
            })
            .max_by_key(|&i| self.perm[i]);
        let Some(i) = mobile else { return false };
        let j = if self.left[i] { i - 1 } else { i + 1 };
        let v = self.perm[i];
        self.perm.swap(i, j);
        self.left.swap(i, j);
        for k in 0..m {
            if self.perm[k] > v {
                self.left[k] = !self.left[k];
            }
        }
        true
    }
}

impl Iterator for Sjt {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        if self.done {
            return None;
        }
        let out = Permutation(self.perm.clone());
        self.done = !self.advance();
        Some(out)
    }
}

/// The SJT order as a Hamiltonian cycle of the permutohedron (`m >= 3`).
pub fn sjt_cycle(m: usize) -> Result<Vec<Permutation>> {
    if m < 3 {
        return Err(Error::TooSmall { n: m, min: 3 });
    }
    if m > PERM_MAX_N {
        return Err(Error::TooLarge {
            n: m,
            limit: PERM_MAX_N,
            what: "permutation listing",
        });
    }
    Ok(Sjt::new(m).collect())
}

/// A coset `{ρ^j π}` of the rotation subgroup; its members are pairwise
/// adjacent and exactly one of them fixes `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetClique {
    members: Vec<Permutation>,
    marking: Permutation,
}

impl CosetClique {
    pub fn of(pi: &Permutation) -> Result<Self> {
        let n = pi.n();
        let members: Vec<Permutation> = (0..n).map(|j| pi.rotate(j)).collect();
        let mut fixing = members.iter().filter(|p| p.apply(n) == n);
        let marking = fixing
            .next()
            .cloned()
            .ok_or_else(|| Error::Internal(format!("coset of {pi:?} has no member fixing {n}")))?;
        if fixing.next().is_some() {
            return Err(Error::Internal(format!("coset of {pi:?} has two members fixing {n}")));
        }
        Ok(CosetClique { members, marking })
    }

    pub fn members(&self) -> &[Permutation] {
        &self.members
    }

    pub fn marking(&self) -> &Permutation {
        &self.marking
    }

    /// `π, ρ²π, ρ³π, ..., ρ^{n-1}π, ρπ` for the marking permutation `π`.
    pub fn path(&self) -> Vec<Permutation> {
        clique_path(&self.marking)
    }
}

fn clique_path(pi: &Permutation) -> Vec<Permutation> {
    let n = pi.n();
    let mut out = Vec::with_capacity(n);
    out.push(pi.clone());
    out.extend((2..n).map(|j| pi.rotate(j)));
    out.push(pi.rotate(1));
    out
}

fn check_perm_n(n: usize) -> Result<()> {
    if n < 3 {
        return Err(Error::TooSmall { n, min: 3 });
    }
    if n > PERM_MAX_N {
        return Err(Error::TooLarge {
            n,
            limit: PERM_MAX_N,
            what: "permutohedron Kneser cycle",
        });
    }
    Ok(())
}

/// Lazily yields the Hamiltonian cycle of the permutohedron Kneser graph:
/// for each marking permutation in SJT order on `[n-1]` (with `n` fixed), its
/// clique path.
pub fn perm_cycle_iter(n: usize) -> Result<impl Iterator<Item = Permutation>> {
    check_perm_n(n)?;
    Ok(Sjt::new(n - 1).flat_map(move |p| {
        let mut images = p.0;
        images.push(n as u8);
        clique_path(&Permutation(images))
    }))
}

pub fn perm_hamiltonian_cycle(n: usize) -> Result<Vec<Permutation>> {
    Ok(perm_cycle_iter(n)?.collect())
}

/// Header line then one permutation per line.
pub fn write_perm_cycle<W: Write>(n: usize, mut out: W) -> Result<()> {
    let iter = perm_cycle_iter(n)?;
    writeln!(out, "{PERM_HEADER} n={n} len={}", factorial(n))?;
    for p in iter {
        writeln!(out, "{p}")?;
    }
    out.flush()?;
    Ok(())
}

#[derive(Clone, Debug, PartialEq)]
pub struct DensityReport {
    pub n: usize,
    pub k: usize,
    pub indecomposable: BigUint,
    pub factorial: BigUint,
    /// `I(n) / n!`, rounded to 12 decimals.
    pub ratio: f64,
    /// `I(n) > k/(k+1) n!`, the minimum-degree condition for a kth power.
    pub threshold_met: bool,
}

impl fmt::Display for DensityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n={} k={}", self.n, self.k)?;
        writeln!(f, "I({})={}", self.n, self.indecomposable)?;
        writeln!(f, "{}!={}", self.n, self.factorial)?;
        writeln!(f, "ratio={:.12}", self.ratio)?;
        writeln!(f, "threshold={}/{}", self.k, self.k + 1)?;
        write!(f, "threshold_met={}", self.threshold_met)
    }
}

pub fn density_report(n: usize, k: usize) -> Result<DensityReport> {
    if n < 2 {
        return Err(Error::TooSmall { n, min: 2 });
    }
    if k < 1 {
        return Err(Error::InvalidSize {
            n: k,
            reason: "k must be at least 1".into(),
        });
    }
    let indecomposable = count_indecomposable(n);
    let factorial = factorial(n);
    let scale = BigUint::from(10u64.pow(12));
    let ratio = (&indecomposable * &scale / &factorial).to_u64().expect("ratio <= 1") as f64 / 1e12;
    let threshold_met = BigUint::from(k + 1) * &indecomposable > BigUint::from(k) * &factorial;
    Ok(DensityReport {
        n,
        k,
        indecomposable,
        factorial,
        ratio,
        threshold_met,
    })
}

type PermEntry = (u64, usize, std::result::Result<Permutation, String>);

/// Streams a `perm-ham` certificate and checks validity, adjacency of
/// consecutive members (preimage definition, with wraparound), distinctness
/// and count `n!`.
pub fn verify_perm_cycle<R: BufRead>(reader: R, n: usize, exec: Execution) -> Result<CertificateReport> {
    check_perm_n(n)?;
    let total = factorial(n).to_u64().expect("n <= 10");
    let mut report = CertificateReport::new(PERM_HEADER, n);
    let mut lines = reader.lines().enumerate().map(|(k, l)| (k + 1, l)).filter(|(_, l)| {
        l.as_ref().map(|s| !s.trim().is_empty()).unwrap_or(true)
    });
    let header = match lines.next() {
        None => None,
        Some((line_no, l)) => Some(parse_header(&l?, PERM_HEADER).map_err(|e| Error::Parse {
            line: line_no,
            message: e.to_string(),
        })?),
    };
    report.push(match header {
        None => Check::fail("header", "empty input", "no header line"),
        Some(h) if h.n == n && h.len == total => Check::pass("header", format!("n={n} len={total}")),
        Some(h) => Check::fail(
            "header",
            format!("expected n={n} len={total}"),
            format!("header says n={} len={}", h.n, h.len),
        ),
    });

    let mut seen = vec![0u64; (total as usize).div_ceil(64)];
    let mut count = 0u64;
    let (mut invalid, mut clash, mut duplicate) = (None, None, None);
    let mut first: Option<(u64, usize, Permutation)> = None;
    let mut last: Option<(u64, usize, Permutation)> = None;
    let not_adjacent = |a: &Permutation, b: &Permutation| !kg_perm_adjacent(a, b).unwrap_or(false);
    let clash_witness = |a: &(u64, usize, Permutation), b: &(u64, usize, Permutation)| {
        format!("entries #{} (line {}) `{}` and #{} (line {}) `{}` share a facet", a.0, a.1, a.2, b.0, b.1, b.2)
    };

    let mut pending: Vec<(usize, String)> = Vec::with_capacity(CHUNK);
    let mut lines = lines.peekable();
    while lines.peek().is_some() {
        pending.clear();
        for (line_no, l) in lines.by_ref().take(CHUNK) {
            pending.push((line_no, l?));
        }
        let parsed = exec::map(&pending, exec, |(line_no, text)| match Permutation::parse(text) {
            Ok(p) if p.n() == n => Ok(Ok(p)),
            Ok(p) => Ok(Err(format!("permutation of [{}], expected n={n}", p.n()))),
            Err(Error::Syntax(message)) => Err(Error::Parse { line: *line_no, message }),
            Err(e) => Ok(Err(e.to_string())),
        });
        let mut entries: Vec<PermEntry> = Vec::with_capacity(parsed.len());
        for (k, p) in parsed.into_iter().enumerate() {
            entries.push((count + k as u64, pending[k].0, p?));
        }
        if invalid.is_none() {
            if let Some((idx, line, Err(why))) = entries.iter().find(|e| e.2.is_err()) {
                invalid = Some(format!("entry #{idx} (line {line}): {why}"));
            }
        }
        let ok = |e: &PermEntry| e.2.as_ref().ok().map(|p| (e.0, e.1, p.clone()));
        if clash.is_none() {
            if let (Some(a), Some(b)) = (&last, ok(&entries[0])) {
                if not_adjacent(&a.2, &b.2) {
                    clash = Some(clash_witness(a, &b));
                }
            }
        }
        if clash.is_none() {
            let hit = exec::find_first(entries.len() - 1, exec, |k| match (&entries[k].2, &entries[k + 1].2) {
                (Ok(a), Ok(b)) if not_adjacent(a, b) => Some(()),
                _ => None,
            });
            if let Some((k, ())) = hit {
                clash = Some(clash_witness(&ok(&entries[k]).expect("ok"), &ok(&entries[k + 1]).expect("ok")));
            }
        }
        let ranks = exec::map(&entries, exec, |e| e.2.as_ref().ok().map(Permutation::lehmer_rank));
        for (k, r) in ranks.into_iter().enumerate() {
            let Some(r) = r else { continue };
            let (w, b) = ((r / 64) as usize, r % 64);
            if seen[w] >> b & 1 == 1 {
                if duplicate.is_none() {
                    let (idx, line, p) = ok(&entries[k]).expect("ranked");
                    duplicate = Some(format!("entry #{idx} (line {line}) `{p}` already appeared earlier"));
                }
            } else {
                seen[w] |= 1 << b;
            }
        }
        if count == 0 {
            first = ok(&entries[0]);
        }
        last = ok(&entries[entries.len() - 1]);
        count += entries.len() as u64;
    }
    if clash.is_none() && count > 1 {
        if let (Some(a), Some(b)) = (&last, &first) {
            if not_adjacent(&a.2, &b.2) {
                clash = Some(format!("wraparound: {}", clash_witness(a, b)));
            }
        }
    }
    report.push(match invalid {
        None => Check::pass("valid", format!("{count} entries are permutations of [{n}]")),
        Some(w) => Check::fail("valid", "invalid entry", w),
    });
    report.push(match clash {
        None => Check::pass("adjacent", "consecutive entries share no facet, including wraparound"),
        Some(w) => Check::fail("adjacent", "consecutive entries share a facet", w),
    });
    report.push(match duplicate {
        None => Check::pass("distinct", "no permutation repeats"),
        Some(w) => Check::fail("distinct", "a permutation repeats", w),
    });
    let covered: u64 = seen.iter().map(|w| w.count_ones() as u64).sum();
    report.push(if count == total && covered == total {
        Check::pass("count", format!("{total} entries = {n}!"))
    } else {
        Check::fail(
            "count",
            format!("expected {total} entries"),
            format!("found {count} entries covering {covered} permutations"),
        )
    });
    Ok(report)
}

/// In-memory check used by tests: every consecutive pair adjacent and all
/// of `S_n` covered once.
pub fn is_perm_hamiltonian(seq: &[Permutation], n: usize) -> bool {
    let mut text = format!("{PERM_HEADER} n={n} len={}\n", seq.len());
    for p in seq {
        text.push_str(&p.to_string());
        text.push('\n');
    }
    verify_perm_cycle(text.as_bytes(), n, Execution::Sequential).is_ok_and(|r| r.passed())
}

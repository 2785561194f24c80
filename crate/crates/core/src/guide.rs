//! Hamiltonian cycles in the flip graph, and the guide cycle built from them.
//!
//! Every triangulation of the (m+1)-gon comes from exactly one triangulation
//! `T` of the m-gon by splitting vertex `m` into `m` and `m+1`. If vertex
//! `m` of `T` sees `1 = b_0 < b_1 < ... < b_s = m-1`, the `s + 1` children
//! `c_0..c_s` form a flip path: in `c_t`, vertex `m+1` sees `b_0..b_t` and
//! vertex `m` sees `b_t..b_s`. The ends are `c_0 = T + {1, m}` and
//! `c_s = T` relabeled with an ear at `m`. Flip-adjacent parents have
//! flip-adjacent `c_0` children and flip-adjacent `c_s` children, so walking
//! the children of a parent cycle in alternating direction gives a cycle
//! one level up, provided the parent cycle has even length.
//!
//! Odd parent cycles are handled by snaking through a "ladder": two
//! consecutive parents whose flip does not touch vertex `m` have identical
//! child paths, joined rung by rung. When the paths have an odd number of
//! vertices the snake enters at one end of the first path and leaves at the
//! far end of the second, which flips the parity. Tiny levels with no ladder
//! fall back to a bounded exhaustive search.

use crate::error::{Error, Result};
use crate::polygon::{catalan, Catalog, Diagonal, PolygonSize, Triangulation};
use crate::exec::Execution;

/// Largest flip graph the fallback search is allowed to handle.
const SEARCH_LIMIT: usize = 64;

/// A Hamiltonian cycle of the flip graph on the m-gon.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlipHamCycle {
    m: usize,
    seq: Vec<Triangulation>,
}

impl FlipHamCycle {
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn seq(&self) -> &[Triangulation] {
        &self.seq
    }

    pub fn len(&self) -> usize {
        self.seq.len()
    }

    pub fn is_empty(&self) -> bool {
        self.seq.is_empty()
    }
}

/// The guide cycle: a flip-graph cycle on the n-gon whose members all
/// contain the ear `{1, n-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GuideCycle {
    n: usize,
    seq: Vec<Triangulation>,
}

impl GuideCycle {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn seq(&self) -> &[Triangulation] {
        &self.seq
    }

    pub fn len(&self) -> usize {
        self.seq.len()
    }

    pub fn is_empty(&self) -> bool {
        self.seq.is_empty()
    }

    /// The shared diagonal `{1, n-1}`.
    pub fn ear(&self) -> Diagonal {
        Diagonal::raw(1, self.n - 1)
    }
}

/// Vertices seen by `m` in `t` (polygon neighbors included), ascending.
fn fan_at_last(t: &Triangulation) -> Vec<usize> {
    let m = t.n();
    let mut b = vec![1];
    b.extend(t.diagonals().filter(|d| d.j() == m).map(|d| d.i()));
    b.push(m - 1);
    b
}

/// The flip path `c_0, ..., c_s` of children of `t` in the (m+1)-gon.
fn children(t: &Triangulation) -> Vec<Triangulation> {
    let m = t.n();
    let b = fan_at_last(t);
    let s = b.len() - 1;
    let kept: Vec<Diagonal> = t.diagonals().filter(|d| d.j() != m).collect();
    (0..=s)
        .map(|split| {
            let to_new = (1..=split).map(|x| Diagonal::raw(b[x], m + 1));
            let to_old = (split..s).map(|x| Diagonal::raw(b[x], m));
            Triangulation::from_valid_diagonals(m + 1, kept.iter().copied().chain(to_new).chain(to_old))
        })
        .collect()
}

enum Unit {
    Column(usize),
    /// Two parents with identical, odd-length child paths.
    Snake(usize, usize),
}

fn walk_units(units: &[Unit], kids: &[Vec<Triangulation>]) -> Vec<Triangulation> {
    let mut out = Vec::with_capacity(kids.iter().map(Vec::len).sum());
    for (k, unit) in units.iter().enumerate() {
        let ascending = k % 2 == 0;
        match *unit {
            Unit::Column(c) => {
                if ascending {
                    out.extend(kids[c].iter().copied());
                } else {
                    out.extend(kids[c].iter().rev().copied());
                }
            }
            Unit::Snake(a, b) => {
                let rows = kids[a].len();
                for step in 0..rows {
                    let row = if ascending { step } else { rows - 1 - step };
                    if step % 2 == 0 {
                        out.push(kids[a][row]);
                        out.push(kids[b][row]);
                    } else {
                        out.push(kids[b][row]);
                        out.push(kids[a][row]);
                    }
                }
            }
        }
    }
    out
}

/// Flip-graph cycle one level up from a closed flip walk `parents` on the m-gon.
fn lift(parents: &[Triangulation]) -> Result<Vec<Triangulation>> {
    let m = parents[0].n();
    let kids: Vec<Vec<Triangulation>> = parents.iter().map(children).collect();
    let len = parents.len();
    if len % 2 == 0 {
        let units: Vec<Unit> = (0..len).map(Unit::Column).collect();
        return Ok(walk_units(&units, &kids));
    }
    let ladder = (0..len).find(|&p| {
        let q = (p + 1) % len;
        kids[p].len() % 2 == 1 && kids[p].len() >= 3 && fan_at_last(&parents[p]) == fan_at_last(&parents[q])
    });
    match ladder {
        Some(p) => {
            let mut units = vec![Unit::Snake(p, (p + 1) % len)];
            units.extend((2..len).map(|k| Unit::Column((p + k) % len)));
            Ok(walk_units(&units, &kids))
        }
        None => search_cycle(m + 1),
    }
}

/// Bounded depth-first search for a Hamiltonian cycle of the flip graph,
/// neighbors tried in ascending order.
fn search_cycle(m: usize) -> Result<Vec<Triangulation>> {
    let catalog = Catalog::build(m, Execution::Sequential)?;
    let total = catalog.len();
    if total > SEARCH_LIMIT {
        return Err(Error::Internal(format!(
            "no parity ladder at m={m} and the flip graph is too large to search"
        )));
    }
    let adjacency: Vec<Vec<u32>> = catalog
        .as_slice()
        .iter()
        .map(|t| {
            let mut nb: Vec<u32> = t.flip_neighbors().map(|u| catalog.rank(&u).expect("in catalog")).collect();
            nb.sort_unstable();
            nb
        })
        .collect();

    fn extend(path: &mut Vec<u32>, seen: &mut [bool], adjacency: &[Vec<u32>]) -> bool {
        let last = *path.last().expect("nonempty path") as usize;
        if path.len() == seen.len() {
            return adjacency[last].contains(&path[0]);
        }
        for &next in &adjacency[last] {
            if !seen[next as usize] {
                seen[next as usize] = true;
                path.push(next);
                if extend(path, seen, adjacency) {
                    return true;
                }
                path.pop();
                seen[next as usize] = false;
            }
        }
        false
    }

    let mut seen = vec![false; total];
    seen[0] = true;
    let mut path = vec![0u32];
    if !extend(&mut path, &mut seen, &adjacency) {
        return Err(Error::Internal(format!("flip graph at m={m} has no Hamiltonian cycle")));
    }
    Ok(path.into_iter().map(|r| catalog.get(r)).collect())
}

/// Rotates/reflects a cyclic sequence to start at its minimum and continue
/// toward the smaller of the two neighbors.
pub fn normalize_cycle<T: Ord + Copy>(seq: &[T]) -> Vec<T> {
    let len = seq.len();
    if len == 0 {
        return Vec::new();
    }
    let start = (0..len).min_by_key(|&k| seq[k]).expect("nonempty");
    let next = seq[(start + 1) % len];
    let prev = seq[(start + len - 1) % len];
    if next <= prev {
        (0..len).map(|k| seq[(start + k) % len]).collect()
    } else {
        (0..len).map(|k| seq[(start + len - k) % len]).collect()
    }
}

/// Checks that `seq` is a Hamiltonian cycle of the flip graph on the m-gon:
/// valid members, flip-adjacent neighbors (with wraparound), every
/// triangulation exactly once.
pub fn verify_flip_cycle(seq: &[Triangulation], m: usize) -> Result<()> {
    let expected = catalan(m - 2) as usize;
    if seq.len() != expected {
        return Err(Error::Internal(format!(
            "flip cycle for m={m} has {} members, expected {expected}",
            seq.len()
        )));
    }
    for (k, t) in seq.iter().enumerate() {
        if t.n() != m {
            return Err(Error::Internal(format!("member {k} is not an {m}-gon triangulation")));
        }
        Triangulation::from_diagonals(m, t.diagonals())
            .map_err(|e| Error::Internal(format!("member {k} invalid: {e}")))?;
        let next = &seq[(k + 1) % seq.len()];
        if !t.is_flip_adjacent(next) {
            return Err(Error::Internal(format!("members {k} and {} are not flip-adjacent: {t} / {next}", (k + 1) % seq.len())));
        }
    }
    let mut sorted = seq.to_vec();
    sorted.sort_unstable();
    if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
        return Err(Error::Internal(format!("{} appears twice", w[0])));
    }
    Ok(())
}

/// A verified Hamiltonian cycle of the flip graph on the m-gon, normalized
/// to start at the smallest triangulation.
pub fn flip_hamiltonian_cycle(m: usize) -> Result<FlipHamCycle> {
    if m <= 4 {
        return Err(Error::TooSmall { n: m, min: 5 });
    }
    PolygonSize::new(m)?;
    // Flip(4) is a single edge; walking it back and forth is a closed flip walk.
    let mut seq = vec![Triangulation::from_valid_diagonals(4, [Diagonal::raw(1, 3)]), Triangulation::from_valid_diagonals(4, [Diagonal::raw(2, 4)])];
    for level in 5..=m {
        seq = normalize_cycle(&lift(&seq)?);
        verify_flip_cycle(&seq, level)?;
    }
    Ok(FlipHamCycle { m, seq })
}

/// The guide cycle on the n-gon: the flip cycle of the (n-1)-gon with
/// `{1, n-1}` appended to every member.
///
/// For `n = 6` the start is rotated so that the all-ears member is last;
/// its orbit then never becomes a parent in the orbit tree.
pub fn build_guide_cycle(n: usize) -> Result<GuideCycle> {
    if n <= 5 {
        return Err(Error::TooSmall { n, min: 6 });
    }
    PolygonSize::new(n)?;
    let base = flip_hamiltonian_cycle(n - 1)?;
    let ear = Diagonal::raw(1, n - 1);
    let mut seq: Vec<Triangulation> = base
        .seq
        .iter()
        .map(|t| Triangulation::from_valid_diagonals(n, t.diagonals().chain(std::iter::once(ear))))
        .collect();
    if n == 6 {
        let ears = seq
            .iter()
            .position(Triangulation::is_all_ears)
            .ok_or_else(|| Error::Internal("n=6 guide has no all-ears member".into()))?;
        let len = seq.len();
        seq.rotate_left((ears + 1) % len);
    }
    Ok(GuideCycle { n, seq })
}

//! Brute-force Kneser adjacency, built without the enumeration, bitmask or
//! rotation machinery used by the constructor.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::exec::{self, Execution};
use crate::polygon::{Diagonal, Triangulation};

pub const ORACLE_MAX_N: usize = 9;

type Chord = (u8, u8);

fn chords_cross(a: Chord, b: Chord) -> bool {
    let ((i, j), (k, l)) = (a, b);
    (i < k && k < j && j < l) || (k < i && i < l && l < j)
}

/// Both lists sorted; true when they have no element in common.
fn lists_disjoint(a: &[Chord], b: &[Chord]) -> bool {
    let (mut x, mut y) = (0, 0);
    while x < a.len() && y < b.len() {
        match a[x].cmp(&b[y]) {
            std::cmp::Ordering::Less => x += 1,
            std::cmp::Ordering::Greater => y += 1,
            std::cmp::Ordering::Equal => return false,
        }
    }
    true
}

/// All subsets of pairwise noncrossing chords of size `n - 3`.
fn noncrossing_subsets(n: usize) -> Vec<Vec<Chord>> {
    let chords: Vec<Chord> = (1..=n as u8)
        .flat_map(|i| (i + 2..=n as u8).map(move |j| (i, j)))
        .filter(|&(i, j)| !(i == 1 && j == n as u8))
        .collect();
    let target = n - 3;
    let mut out = Vec::new();
    let mut stack = Vec::new();
    fn go(k: usize, chords: &[Chord], target: usize, stack: &mut Vec<Chord>, out: &mut Vec<Vec<Chord>>) {
        if stack.len() == target {
            out.push(stack.clone());
            return;
        }
        if chords.len() - k < target - stack.len() {
            return;
        }
        let c = chords[k];
        if stack.iter().all(|&s| !chords_cross(s, c)) {
            stack.push(c);
            go(k + 1, chords, target, stack, out);
            stack.pop();
        }
        go(k + 1, chords, target, stack, out);
    }
    go(0, &chords, target, &mut stack, &mut out);
    out
}

/// Full adjacency matrix of `KG(T_n)` for small `n`.
#[derive(Clone, Debug)]
pub struct KneserOracle {
    n: usize,
    vertices: Vec<Vec<Chord>>,
    index: HashMap<Vec<Chord>, usize>,
    rows: Vec<Vec<u64>>,
}

pub fn brute_force_kneser_graph(n: usize, exec: Execution) -> Result<KneserOracle> {
    if n > ORACLE_MAX_N {
        return Err(Error::TooLarge {
            n,
            limit: ORACLE_MAX_N,
            what: "brute-force Kneser oracle (C(n-2)^2 pair checks); use the streaming verifier instead",
        });
    }
    if n < 4 {
        return Err(Error::TooSmall { n, min: 4 });
    }
    let vertices = noncrossing_subsets(n);
    let len = vertices.len();
    let rows = exec::map_range(len, exec, |a| {
        let mut row = vec![0u64; len.div_ceil(64)];
        for (b, other) in vertices.iter().enumerate() {
            if lists_disjoint(&vertices[a], other) {
                row[b / 64] |= 1 << (b % 64);
            }
        }
        row
    });
    let index = vertices.iter().enumerate().map(|(k, v)| (v.clone(), k)).collect();
    Ok(KneserOracle {
        n,
        vertices,
        index,
        rows,
    })
}

impl KneserOracle {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertex(&self, k: usize) -> Triangulation {
        let n = self.n;
        let diagonals = self.vertices[k]
            .iter()
            .map(|&(i, j)| Diagonal::new(i as usize, j as usize, n).expect("oracle chord"));
        Triangulation::from_diagonals(n, diagonals).expect("oracle vertex")
    }

    pub fn index_of(&self, t: &Triangulation) -> Option<usize> {
        if t.n() != self.n {
            return None;
        }
        let mut key: Vec<Chord> = t.diagonals().map(|d| (d.i() as u8, d.j() as u8)).collect();
        key.sort_unstable();
        self.index.get(&key).copied()
    }

    fn bit(&self, a: usize, b: usize) -> bool {
        self.rows[a][b / 64] >> (b % 64) & 1 == 1
    }

    /// Edge-ness of a pair, or `None` if either is not a vertex.
    pub fn is_edge(&self, a: &Triangulation, b: &Triangulation) -> Option<bool> {
        Some(self.bit(self.index_of(a)?, self.index_of(b)?))
    }

    pub fn degree(&self, t: &Triangulation) -> Option<usize> {
        let k = self.index_of(t)?;
        Some(self.rows[k].iter().map(|w| w.count_ones() as usize).sum())
    }

    pub fn edge_count(&self) -> usize {
        let total: usize = self.rows.iter().flatten().map(|w| w.count_ones() as usize).sum();
        total / 2
    }

    /// Positions `k` where `seq[k]` and its cyclic successor are not an edge.
    pub fn cycle_mismatches(&self, seq: &[Triangulation]) -> Vec<usize> {
        (0..seq.len())
            .filter(|&k| self.is_edge(&seq[k], &seq[(k + 1) % seq.len()]) != Some(true))
            .collect()
    }
}

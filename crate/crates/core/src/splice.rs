//! Merging the orbit cycles into one Hamiltonian cycle of the Kneser graph.
//!
//! The cycle is kept as a doubly linked list over catalog ranks. Orbits are
//! inserted in tree order. For a bridge `{S, T}` with `S` in the parent
//! orbit, the edge `{S, r(S)}` of the current cycle is replaced by the path
//! `S, T, r^-1(T), ..., r(T), r(S)`, which walks the whole child orbit
//! except its edge `{T, r(T)}`. Both ends are Kneser edges: `{S, T}` is the
//! bridge and `{r(T), r(S)}` is its rotation.

use std::sync::Arc;

use sha2::{Digest, Sha256};

use crate::bridges::{build_orbit_tree, select_bridges, AugmentedFactor, OrbitTree};
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::guide::{build_guide_cycle, GuideCycle};
use crate::orbits::OrbitPartition;
use crate::polygon::{Catalog, Triangulation, MAX_N};

const NIL: u32 = u32::MAX;

/// A Hamiltonian cycle of `KG(T_n)`, stored as catalog ranks.
#[derive(Clone, Debug)]
pub struct HamiltonianCycle {
    catalog: Arc<Catalog>,
    order: Vec<u32>,
}

impl HamiltonianCycle {
    pub fn n(&self) -> usize {
        self.catalog.n()
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    pub fn ranks(&self) -> &[u32] {
        &self.order
    }

    pub fn catalog(&self) -> &Arc<Catalog> {
        &self.catalog
    }

    pub fn iter(&self) -> impl ExactSizeIterator<Item = Triangulation> + '_ {
        self.order.iter().map(|&r| self.catalog.get(r))
    }

    pub fn to_vec(&self) -> Vec<Triangulation> {
        self.iter().collect()
    }

    /// `kneser-ham n=<n> len=<len>`.
    pub fn header(&self) -> String {
        format!("kneser-ham n={} len={}", self.n(), self.len())
    }

    /// SHA-256 over the sorted encodings, one per line. Certifies the vertex
    /// set independently of the cycle order.
    pub fn checksum(&self) -> String {
        let mut ranks = self.order.clone();
        ranks.sort_unstable();
        let mut hasher = Sha256::new();
        for r in ranks {
            hasher.update(self.catalog.get(r).encode().as_bytes());
            hasher.update(b"\n");
        }
        hex::encode(hasher.finalize())
    }
}

struct LinkedCycle {
    next: Vec<u32>,
    prev: Vec<u32>,
}

impl LinkedCycle {
    fn new(size: usize) -> Self {
        LinkedCycle {
            next: vec![NIL; size],
            prev: vec![NIL; size],
        }
    }

    fn link(&mut self, a: u32, b: u32) {
        self.next[a as usize] = b;
        self.prev[b as usize] = a;
    }

    fn has_edge(&self, a: u32, b: u32) -> bool {
        self.next[a as usize] == b || self.prev[a as usize] == b
    }

    /// Replaces edge `{a, b}` by the path `a, path..., b`.
    fn replace_edge(&mut self, a: u32, b: u32, path: &[u32]) -> bool {
        let (first, last) = (path[0], path[path.len() - 1]);
        if self.next[a as usize] == b {
            self.link(a, first);
            for w in path.windows(2) {
                self.link(w[0], w[1]);
            }
            self.link(last, b);
        } else if self.prev[a as usize] == b {
            self.link(b, last);
            for w in path.windows(2) {
                self.link(w[1], w[0]);
            }
            self.link(first, a);
        } else {
            return false;
        }
        true
    }

    /// Walks the cycle from `start`; `None` if it does not close.
    fn walk(&self, start: u32, towards: u32) -> Option<Vec<u32>> {
        let mut out = vec![start];
        let forward = self.next[start as usize] == towards;
        let mut cur = towards;
        while cur != start {
            if cur == NIL || out.len() > self.next.len() {
                return None;
            }
            out.push(cur);
            cur = if forward { self.next[cur as usize] } else { self.prev[cur as usize] };
        }
        Some(out)
    }

    /// Starting at the smallest rank in the cycle, toward its smaller neighbor.
    fn normalized(&self, start: u32) -> Option<Vec<u32>> {
        let (a, b) = (self.next[start as usize], self.prev[start as usize]);
        self.walk(start, a.min(b))
    }
}

fn rank_of(catalog: &Catalog, t: &Triangulation) -> Result<u32> {
    catalog
        .rank(t)
        .ok_or_else(|| Error::Internal(format!("{t} is not in the catalog")))
}

/// Splices all orbit cycles along the tree using the chosen bridges.
pub fn splice(part: &OrbitPartition, tree: &OrbitTree, aug: &AugmentedFactor) -> Result<HamiltonianCycle> {
    splice_inner(part, tree, aug, false)
}

/// [`splice`] that also checks, before every step, that all active occupied
/// edges are still on the cycle, and after every step, that the cycle is a
/// single closed loop over the orbits inserted so far. Quadratic; meant for
/// small `n`.
pub fn splice_checked(part: &OrbitPartition, tree: &OrbitTree, aug: &AugmentedFactor) -> Result<HamiltonianCycle> {
    splice_inner(part, tree, aug, true)
}

fn splice_inner(part: &OrbitPartition, tree: &OrbitTree, aug: &AugmentedFactor, checked: bool) -> Result<HamiltonianCycle> {
    let catalog = part.catalog().clone();
    if tree.edges().len() != aug.bridges().len() {
        return Err(Error::Internal("tree and bridge set disagree in size".into()));
    }
    let mut cycle = LinkedCycle::new(catalog.len());
    let root = part.orbit(tree.root());
    if root.size() < 3 {
        return Err(Error::Internal("root orbit is not a cycle".into()));
    }
    let ring: Vec<u32> = root
        .members()
        .iter()
        .map(|t| rank_of(&catalog, t))
        .collect::<Result<_>>()?;
    for k in 0..ring.len() {
        cycle.link(ring[k], ring[(k + 1) % ring.len()]);
    }
    let mut spanned = ring.len();

    // Parent-side occupied edges {S, r(S)} with their bridge index.
    let parent_edges: Vec<(u32, u32)> = aug
        .bridges()
        .iter()
        .map(|b| Ok((rank_of(&catalog, &b.a)?, rank_of(&catalog, &b.a.rotate(1))?)))
        .collect::<Result<_>>()?;

    for (step, (edge, bridge)) in tree.edges().iter().zip(aug.bridges()).enumerate() {
        if edge.child != bridge.child || edge.parent != bridge.parent {
            return Err(Error::Internal(format!("bridge {step} does not match tree edge {step}")));
        }
        let inserted = step + 1;
        if checked {
            // Edge k is active now iff its parent is already on the cycle and its child is not.
            for (k, b) in aug.bridges().iter().enumerate() {
                let active = tree.position(b.parent) < inserted && tree.position(b.child) >= inserted;
                let (s, rs) = parent_edges[k];
                if active && !cycle.has_edge(s, rs) {
                    return Err(Error::Internal(format!(
                        "active edge {{{}, {}}} of bridge {k} missing before step {inserted}",
                        catalog.get(s),
                        catalog.get(rs)
                    )));
                }
            }
        }
        let child = part.orbit(bridge.child);
        let size = child.size() as i64;
        let path: Vec<u32> = (0..size)
            .map(|k| rank_of(&catalog, &bridge.b.rotate(-k)))
            .collect::<Result<_>>()?;
        if checked && size >= 3 {
            let (t, rt) = (path[0], path[path.len() - 1]);
            debug_assert_eq!(catalog.get(rt), bridge.b.rotate(1));
            if path.windows(2).any(|w| (w[0], w[1]) == (t, rt) || (w[0], w[1]) == (rt, t)) {
                return Err(Error::Internal("inserted path uses the occupied child edge".into()));
            }
        }
        let (s, rs) = parent_edges[step];
        if !cycle.replace_edge(s, rs, &path) {
            return Err(Error::Internal(format!(
                "edge {{{}, {}}} is not on the cycle when inserting orbit {}",
                bridge.a,
                bridge.a.rotate(1),
                bridge.child
            )));
        }
        spanned += path.len();
        if checked {
            let walked = cycle
                .walk(s, cycle.next[s as usize])
                .ok_or_else(|| Error::Internal(format!("cycle broken after step {inserted}")))?;
            if walked.len() != spanned {
                return Err(Error::Internal(format!(
                    "cycle after step {inserted} has {} vertices, expected {spanned}",
                    walked.len()
                )));
            }
        }
    }
    if spanned != catalog.len() {
        return Err(Error::Internal(format!("spliced {spanned} of {} triangulations", catalog.len())));
    }
    let order = cycle
        .normalized(0)
        .filter(|o| o.len() == catalog.len())
        .ok_or_else(|| Error::Internal("final cycle does not close".into()))?;
    Ok(HamiltonianCycle { catalog, order })
}

/// All intermediate objects of the construction for one `n >= 6`.
#[derive(Clone, Debug)]
pub struct Pipeline {
    pub partition: OrbitPartition,
    pub guide: GuideCycle,
    pub tree: OrbitTree,
    pub factor: AugmentedFactor,
}

impl Pipeline {
    pub fn build(n: usize, exec: Execution) -> Result<Self> {
        let guide = build_guide_cycle(n)?;
        let partition = OrbitPartition::build(n, exec)?;
        let tree = build_orbit_tree(&guide, &partition)?;
        let factor = select_bridges(&tree, &partition)?;
        Ok(Pipeline {
            partition,
            guide,
            tree,
            factor,
        })
    }

    pub fn splice(&self) -> Result<HamiltonianCycle> {
        splice(&self.partition, &self.tree, &self.factor)
    }

    pub fn splice_checked(&self) -> Result<HamiltonianCycle> {
        splice_checked(&self.partition, &self.tree, &self.factor)
    }
}

fn check_size(n: usize) -> Result<()> {
    match n {
        0..=3 => Err(Error::InvalidSize {
            n,
            reason: "the Kneser graph of triangulations needs n >= 5".into(),
        }),
        4 => Err(Error::Unsupported(
            "KG(T_4) is a single edge between the two triangulations of the square; it has no Hamiltonian cycle".into(),
        )),
        n if n > MAX_N => Err(Error::TooLarge {
            n,
            limit: MAX_N,
            what: "Hamiltonian cycle construction",
        }),
        _ => Ok(()),
    }
}

/// A Hamiltonian cycle of `KG(T_n)` for `n >= 5`, starting at the smallest
/// triangulation and continuing toward its smaller neighbor.
pub fn build_hamiltonian(n: usize) -> Result<HamiltonianCycle> {
    build_hamiltonian_with(n, Execution::default())
}

pub fn build_hamiltonian_with(n: usize, exec: Execution) -> Result<HamiltonianCycle> {
    check_size(n)?;
    if n == 5 {
        // T_5 is a single orbit of size five, already a Kneser 5-cycle.
        let partition = OrbitPartition::build(5, exec)?;
        let catalog = partition.catalog().clone();
        let ring: Vec<u32> = partition.orbits()[0]
            .members()
            .iter()
            .map(|t| rank_of(&catalog, t))
            .collect::<Result<_>>()?;
        let order = crate::guide::normalize_cycle(&ring);
        return Ok(HamiltonianCycle { catalog, order });
    }
    Pipeline::build(n, exec)?.splice()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polygon::catalan;

    fn assert_kneser_cycle(c: &HamiltonianCycle) {
        let seq = c.to_vec();
        assert_eq!(seq.len() as u64, catalan(c.n() - 2));
        for k in 0..seq.len() {
            assert!(seq[k].is_disjoint(&seq[(k + 1) % seq.len()]), "k={k}");
        }
        let mut ranks = c.ranks().to_vec();
        ranks.sort_unstable();
        ranks.dedup();
        assert_eq!(ranks.len(), seq.len());
    }

    #[test]
    fn small_cycles() {
        for n in 5..=10 {
            let c = build_hamiltonian(n).unwrap();
            assert_kneser_cycle(&c);
            assert_eq!(c.ranks()[0], 0);
            assert!(c.ranks()[1] < *c.ranks().last().unwrap());
        }
    }

    #[test]
    fn checked_splice_agrees_with_fast_splice() {
        for n in 6..=10 {
            let p = Pipeline::build(n, Execution::Parallel).unwrap();
            assert_eq!(p.splice().unwrap().ranks(), p.splice_checked().unwrap().ranks());
        }
    }

    #[test]
    fn six_uses_the_ears_edge_once() {
        let c = build_hamiltonian(6).unwrap();
        assert_kneser_cycle(&c);
        let seq = c.to_vec();
        let uses = (0..seq.len())
            .filter(|&k| seq[k].is_all_ears() && seq[(k + 1) % seq.len()].is_all_ears())
            .count();
        assert_eq!(uses, 1);
    }

    #[test]
    fn output_is_deterministic() {
        let a = build_hamiltonian_with(9, Execution::Sequential).unwrap();
        let b = build_hamiltonian_with(9, Execution::Parallel).unwrap();
        assert_eq!(a.ranks(), b.ranks());
        assert_eq!(a.checksum(), b.checksum());
        assert_eq!(a.header(), "kneser-ham n=9 len=429");
    }

    #[test]
    fn size_errors() {
        assert!(matches!(build_hamiltonian(4), Err(Error::Unsupported(_))));
        assert!(matches!(build_hamiltonian(3), Err(Error::InvalidSize { .. })));
        assert!(matches!(build_hamiltonian(18), Err(Error::TooLarge { .. })));
    }
}

//! The spanning tree on rotation orbits and the bridge edges between them.
//!
//! Walking the guide cycle from its start, each first visit to an orbit adds
//! a tree edge from the orbit of the previous guide member. The two guide
//! members of that step differ by one flip; rotating the child member by
//! `+1` or `-1` makes it disjoint from the parent member, which gives a
//! Kneser edge between the two orbits. That edge is then rotated as a whole
//! until neither endpoint already hosts a bridge.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::guide::GuideCycle;
use crate::orbits::{OrbitId, OrbitPartition};
use crate::polygon::Triangulation;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TreeEdge {
    pub parent: OrbitId,
    pub child: OrbitId,
    /// Guide member just before the first visit to `child`.
    pub witness_parent: Triangulation,
    /// First guide member lying in `child`.
    pub witness_child: Triangulation,
}

/// Rooted spanning tree on orbits, in order of first appearance along the guide.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitTree {
    order: Vec<OrbitId>,
    /// Index into `order` for each orbit id.
    position: Vec<usize>,
    /// `edges[k]` attaches `order[k + 1]` to its parent.
    edges: Vec<TreeEdge>,
}

impl OrbitTree {
    pub fn order(&self) -> &[OrbitId] {
        &self.order
    }

    pub fn edges(&self) -> &[TreeEdge] {
        &self.edges
    }

    pub fn root(&self) -> OrbitId {
        self.order[0]
    }

    pub fn position(&self, id: OrbitId) -> usize {
        self.position[id as usize]
    }

    pub fn parent(&self, id: OrbitId) -> Option<OrbitId> {
        let pos = self.position(id);
        (pos > 0).then(|| self.edges[pos - 1].parent)
    }

    pub fn degree(&self, id: OrbitId) -> usize {
        self.edges.iter().filter(|e| e.parent == id || e.child == id).count()
    }

    /// Degrees of all orbits, indexed by orbit id.
    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.position.len()];
        for e in &self.edges {
            deg[e.parent as usize] += 1;
            deg[e.child as usize] += 1;
        }
        deg
    }

    /// Edge set as unordered orbit pairs.
    pub fn edge_set(&self) -> BTreeSet<(OrbitId, OrbitId)> {
        self.edges.iter().map(|e| (e.parent.min(e.child), e.parent.max(e.child))).collect()
    }
}

pub fn build_orbit_tree(guide: &GuideCycle, part: &OrbitPartition) -> Result<OrbitTree> {
    if guide.n() != part.n() {
        return Err(Error::MismatchedSize {
            left: guide.n(),
            right: part.n(),
        });
    }
    let seq = guide.seq();
    let orbit = |t: &Triangulation| {
        part.orbit_id(t)
            .ok_or_else(|| Error::Internal(format!("guide member {t} is not in the partition")))
    };
    let mut position = vec![usize::MAX; part.len()];
    let first = seq.first().ok_or_else(|| Error::Internal("empty guide".into()))?;
    let root = orbit(first)?;
    position[root as usize] = 0;
    let mut order = vec![root];
    let mut edges = Vec::new();
    for w in seq.windows(2) {
        let child = orbit(&w[1])?;
        if position[child as usize] != usize::MAX {
            continue;
        }
        position[child as usize] = order.len();
        order.push(child);
        edges.push(TreeEdge {
            parent: orbit(&w[0])?,
            child,
            witness_parent: w[0],
            witness_child: w[1],
        });
    }
    if let Some(missing) = position.iter().position(|&p| p == usize::MAX) {
        return Err(Error::Internal(format!(
            "guide never meets orbit {missing} (rep {})",
            part.orbit(missing as OrbitId).rep()
        )));
    }
    Ok(OrbitTree { order, position, edges })
}

/// The rotation direction `eps` with `t` and `r^eps(u)` disjoint, for
/// flip-adjacent `t` and `u`. Prefers `+1`.
pub fn bridge_orientation(t: &Triangulation, u: &Triangulation) -> Result<i32> {
    if !t.is_flip_adjacent(u) {
        return Err(Error::NotFlipAdjacent(t.to_string(), u.to_string()));
    }
    if t.is_disjoint(&u.rotate(1)) {
        Ok(1)
    } else if t.is_disjoint(&u.rotate(-1)) {
        Ok(-1)
    } else {
        Err(Error::Internal(format!("no rotation of {u} is disjoint from {t}")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BridgeEdge {
    /// Endpoint in the parent orbit.
    pub a: Triangulation,
    /// Endpoint in the child orbit.
    pub b: Triangulation,
    pub parent: OrbitId,
    pub child: OrbitId,
    pub epsilon: i32,
    pub sigma: usize,
}

const FREE: u32 = u32::MAX;

/// The orbit 2-factor plus one bridge per tree edge.
#[derive(Clone, Debug)]
pub struct AugmentedFactor {
    bridges: Vec<BridgeEdge>,
    /// Per catalog rank: index of the bridge ending there.
    host: Vec<u32>,
    /// Per catalog rank: degree in the 2-factor alone (2, or 1 on a size-two orbit).
    base_degree: Vec<u8>,
}

fn edge_key(part: &OrbitPartition, x: &Triangulation) -> usize {
    let catalog = part.catalog();
    let a = catalog.rank(x).expect("in catalog");
    let b = catalog.rank(&x.rotate(1)).expect("in catalog");
    a.min(b) as usize
}

impl AugmentedFactor {
    /// Bridges `e_2..e_m` in tree order.
    pub fn bridges(&self) -> &[BridgeEdge] {
        &self.bridges
    }

    pub fn degree_of_rank(&self, rank: u32) -> usize {
        let r = rank as usize;
        self.base_degree[r] as usize + usize::from(self.host[r] != FREE)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.host.len() as u32).map(|r| self.degree_of_rank(r)).max().unwrap_or(0)
    }

    /// Bridge hosted at the triangulation with this rank.
    pub fn bridge_at(&self, rank: u32) -> Option<&BridgeEdge> {
        match self.host[rank as usize] {
            FREE => None,
            k => Some(&self.bridges[k as usize]),
        }
    }

    /// How many bridges occupy the orbit edge `{x, r(x)}`, counted from the
    /// endpoints: a bridge at `y` occupies `{y, r(y)}`.
    pub fn occupancy(&self, part: &OrbitPartition, x: &Triangulation) -> usize {
        let key = edge_key(part, x);
        self.bridges
            .iter()
            .flat_map(|b| [b.a, b.b])
            .filter(|y| edge_key(part, y) == key)
            .count()
    }

    /// Bridges with orbits contracted, as unordered orbit pairs.
    pub fn contracted_edges(&self) -> BTreeSet<(OrbitId, OrbitId)> {
        self.bridges.iter().map(|b| (b.parent.min(b.child), b.parent.max(b.child))).collect()
    }
}

/// Chooses one bridge per tree edge, in tree order, by the smallest rotation
/// `sigma` that lands both endpoints on vertices (and orbit edges) with no
/// bridge yet.
pub fn select_bridges(tree: &OrbitTree, part: &OrbitPartition) -> Result<AugmentedFactor> {
    let catalog = part.catalog();
    let n = part.n();
    let base_degree: Vec<u8> = (0..catalog.len() as u32)
        .map(|r| if part.orbit(part.orbit_id_of_rank(r)).size() == 2 { 1 } else { 2 })
        .collect();
    let mut host = vec![FREE; catalog.len()];
    let mut occupied = vec![FREE; catalog.len()];
    let mut bridges = Vec::with_capacity(tree.edges().len());
    for edge in tree.edges() {
        let epsilon = bridge_orientation(&edge.witness_parent, &edge.witness_child)?;
        let a0 = edge.witness_parent;
        let b0 = edge.witness_child.rotate(epsilon as i64);
        let feasible = (0..n).find_map(|sigma| {
            let a = a0.rotate(sigma as i64);
            let b = b0.rotate(sigma as i64);
            let (ra, rb) = (catalog.rank(&a)? as usize, catalog.rank(&b)? as usize);
            let (ka, kb) = (edge_key(part, &a), edge_key(part, &b));
            let free = host[ra] == FREE && host[rb] == FREE && occupied[ka] == FREE && occupied[kb] == FREE;
            free.then_some((sigma, a, b, ra, rb, ka, kb))
        });
        let Some((sigma, a, b, ra, rb, ka, kb)) = feasible else {
            return Err(Error::Internal(format!(
                "no free rotation for the bridge into orbit {} (parent {})",
                edge.child, edge.parent
            )));
        };
        let k = bridges.len() as u32;
        host[ra] = k;
        host[rb] = k;
        occupied[ka] = k;
        occupied[kb] = k;
        bridges.push(BridgeEdge {
            a,
            b,
            parent: edge.parent,
            child: edge.child,
            epsilon,
            sigma,
        });
    }
    Ok(AugmentedFactor {
        bridges,
        host,
        base_degree,
    })
}

//! Rotation orbits of triangulations.
//!
//! For every triangulation `T`, `T` and `r(T)` share no diagonal, so an
//! orbit of size at least three, listed as `rep, r(rep), r^2(rep), ...`, is
//! a cycle of the Kneser graph. Together these cycles form a 2-factor for
//! `n >= 7`. Size-two orbits occur only at `n = 4` and `n = 6` (the
//! triangulations made of ears) and are a single Kneser edge.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exec::{self, Execution};
use crate::polygon::{Catalog, Triangulation};

pub type OrbitId = u32;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RotationOrbit {
    rep: Triangulation,
    members: Vec<Triangulation>,
}

impl RotationOrbit {
    /// Smallest member under the canonical order.
    pub fn rep(&self) -> Triangulation {
        self.rep
    }

    /// `rep, r(rep), ..., r^(s-1)(rep)`.
    pub fn members(&self) -> &[Triangulation] {
        &self.members
    }

    pub fn size(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, t: &Triangulation) -> bool {
        self.members.contains(t)
    }
}

fn rotations(t: &Triangulation) -> Vec<Triangulation> {
    let mut out = vec![*t];
    let mut cur = t.rotate(1);
    while cur != *t {
        out.push(cur);
        cur = cur.rotate(1);
    }
    out
}

fn canonical_rep(t: &Triangulation) -> Triangulation {
    let n = t.n() as i64;
    (0..n).map(|k| t.rotate(k)).min().unwrap_or(*t)
}

/// The full orbit of `t` under rotation, starting at its canonical representative.
pub fn orbit_of(t: &Triangulation) -> RotationOrbit {
    let rep = canonical_rep(t);
    RotationOrbit {
        rep,
        members: rotations(&rep),
    }
}

/// The orbit as a closed walk in the Kneser graph. Size-two orbits are a
/// single edge and are rejected.
pub fn orbit_cycle(orbit: &RotationOrbit) -> Result<Vec<Triangulation>> {
    match orbit.size() {
        2 => Err(Error::SizeTwoOrbit),
        s if s < 2 => Err(Error::Internal(format!("orbit of size {s}"))),
        _ => Ok(orbit.members.clone()),
    }
}

/// All rotation orbits of the n-gon, ordered by representative.
#[derive(Clone, Debug)]
pub struct OrbitPartition {
    catalog: Arc<Catalog>,
    orbits: Vec<RotationOrbit>,
    /// Per catalog rank: owning orbit and position inside `members`.
    slot: Vec<(OrbitId, u8)>,
}

impl OrbitPartition {
    pub fn build(n: usize, exec: Execution) -> Result<Self> {
        if n < 4 {
            return Err(Error::InvalidSize {
                n,
                reason: "rotation orbits need at least one diagonal (n >= 4)".into(),
            });
        }
        let catalog = Arc::new(Catalog::build(n, exec)?);
        Self::from_catalog(catalog, exec)
    }

    pub fn from_catalog(catalog: Arc<Catalog>, exec: Execution) -> Result<Self> {
        let items = catalog.as_slice();
        let rep_rank: Vec<u32> = exec::map(items, exec, |t| {
            catalog.rank(&canonical_rep(t)).expect("rotation stays in the catalog")
        });
        let mut slot = vec![(u32::MAX, 0u8); items.len()];
        let mut orbits = Vec::new();
        for (rank, t) in items.iter().enumerate() {
            if rep_rank[rank] as usize != rank {
                continue;
            }
            let id = orbits.len() as OrbitId;
            let members = rotations(t);
            for (pos, m) in members.iter().enumerate() {
                let r = catalog.rank(m).expect("member in catalog") as usize;
                if slot[r].0 != u32::MAX {
                    return Err(Error::Internal(format!("{m:?} assigned to two orbits")));
                }
                slot[r] = (id, pos as u8);
            }
            orbits.push(RotationOrbit { rep: *t, members });
        }
        if let Some(r) = slot.iter().position(|s| s.0 == u32::MAX) {
            return Err(Error::Internal(format!("{:?} not covered by any orbit", items[r])));
        }
        Ok(OrbitPartition {
            catalog,
            orbits,
            slot,
        })
    }

    pub fn n(&self) -> usize {
        self.catalog.n()
    }

    pub fn catalog(&self) -> &Arc<Catalog> {
        &self.catalog
    }

    pub fn orbits(&self) -> &[RotationOrbit] {
        &self.orbits
    }

    pub fn orbit(&self, id: OrbitId) -> &RotationOrbit {
        &self.orbits[id as usize]
    }

    pub fn len(&self) -> usize {
        self.orbits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.orbits.is_empty()
    }

    /// Orbit id and position of `t`, or `None` if `t` is not a triangulation of this n-gon.
    pub fn locate(&self, t: &Triangulation) -> Option<(OrbitId, usize)> {
        let r = self.catalog.rank(t)?;
        let (id, pos) = self.slot[r as usize];
        Some((id, pos as usize))
    }

    pub fn orbit_id(&self, t: &Triangulation) -> Option<OrbitId> {
        self.locate(t).map(|(id, _)| id)
    }

    pub fn orbit_id_of_rank(&self, rank: u32) -> OrbitId {
        self.slot[rank as usize].0
    }

    /// Orbit sizes in ascending order.
    pub fn size_multiset(&self) -> Vec<usize> {
        let mut sizes: Vec<usize> = self.orbits.iter().map(RotationOrbit::size).collect();
        sizes.sort_unstable();
        sizes
    }
}

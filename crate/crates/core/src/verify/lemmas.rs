//! Structural property suites over orbits, flips, the guide cycle and the
//! bridge selection. Each suite returns one [`Check`].

use std::collections::{BTreeSet, HashMap};

use crate::bridges::{bridge_orientation, AugmentedFactor, OrbitTree};
use crate::error::{Error, Result};
use crate::exec::{self, Execution};
use crate::guide::GuideCycle;
use crate::orbits::{OrbitId, OrbitPartition};
use crate::polygon::{Catalog, MAX_N};
use crate::splice::Pipeline;

use super::{CertificateReport, Check};

/// Largest n whose per-triangulation suites run over every triangulation.
pub const EXHAUSTIVE_MAX_N: usize = 14;
const SAMPLE_TARGET: usize = 200_000;
/// Pairwise guide independence is checked literally up to this length.
const PAIRWISE_GUIDE_MAX: usize = 20_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Coverage {
    Exhaustive,
    /// Every `stride`-th catalog rank.
    Sampled { stride: usize },
}

impl Coverage {
    pub fn for_catalog(catalog: &Catalog) -> Self {
        if catalog.n() <= EXHAUSTIVE_MAX_N {
            Coverage::Exhaustive
        } else {
            Coverage::Sampled {
                stride: catalog.len().div_ceil(SAMPLE_TARGET),
            }
        }
    }

    fn stride(self) -> usize {
        match self {
            Coverage::Exhaustive => 1,
            Coverage::Sampled { stride } => stride.max(1),
        }
    }

    fn label(self) -> String {
        match self {
            Coverage::Exhaustive => "exhaustive".into(),
            Coverage::Sampled { stride } => format!("sampled every {stride}th"),
        }
    }
}

/// Every orbit size divides n; size two occurs exactly for the all-ears
/// triangulations of the square and the hexagon.
pub fn check_orbit_sizes(part: &OrbitPartition) -> Check {
    const NAME: &str = "orbit-sizes";
    let n = part.n();
    let mut two = 0;
    for o in part.orbits() {
        let s = o.size();
        let all_ears = o.rep().is_all_ears();
        let expect_two = matches!(n, 4 | 6) && all_ears;
        if n % s != 0 || (s == 2) != expect_two || s < 2 {
            return Check::fail(
                NAME,
                "orbit size violates the size rule",
                format!("orbit of `{}` has size {s} (all ears: {all_ears})", o.rep()),
            );
        }
        two += usize::from(s == 2);
    }
    Check::pass(
        NAME,
        format!("{} orbits, sizes divide {n}, {two} of size two", part.len()),
    )
}

fn ranks(catalog: &Catalog, coverage: Coverage) -> usize {
    catalog.len().div_ceil(coverage.stride())
}

/// `T` and `r(T)` never share a diagonal.
pub fn check_rotation_disjoint(catalog: &Catalog, coverage: Coverage, exec: Execution) -> Check {
    const NAME: &str = "rotation-disjoint";
    let stride = coverage.stride();
    let total = ranks(catalog, coverage);
    let hit = exec::find_first(total, exec, |k| {
        let t = catalog.get((k * stride) as u32);
        (!t.is_disjoint(&t.rotate(1))).then_some(t)
    });
    match hit {
        None => Check::pass(NAME, format!("{total} triangulations ({})", coverage.label())),
        Some((_, t)) => Check::fail(NAME, "T meets r(T)", format!("`{t}` and `{}`", t.rotate(1))),
    }
}

/// Every flip edge `{T, U}` has a sign `e` with `T` disjoint from `r^e(U)`.
pub fn check_flip_bridges(catalog: &Catalog, coverage: Coverage, exec: Execution) -> Check {
    const NAME: &str = "flip-bridge";
    let stride = coverage.stride();
    let total = ranks(catalog, coverage);
    let hit = exec::find_first(total, exec, |k| {
        let t = catalog.get((k * stride) as u32);
        let bad = t
            .flip_neighbors()
            .find(|u| !t.is_disjoint(&u.rotate(1)) && !t.is_disjoint(&u.rotate(-1)));
        bad.map(|u| (t, u))
    });
    let edges = exec::sum_range(total, exec, |k| catalog.get((k * stride) as u32).flip_neighbors().count() as u64);
    let edges = match coverage {
        Coverage::Exhaustive => format!("{} flip edges", edges / 2),
        Coverage::Sampled { .. } => format!("{edges} flip edge checks"),
    };
    match hit {
        None => Check::pass(NAME, format!("{edges} from {total} triangulations ({})", coverage.label())),
        Some((_, (t, u))) => Check::fail(NAME, "no sign works", format!("flip edge `{t}` ~ `{u}`")),
    }
}

/// The guide is a closed flip walk through distinct triangulations, an
/// independent set of the Kneser graph, and it meets every orbit.
pub fn check_guide_cycle(guide: &GuideCycle, part: &OrbitPartition, exec: Execution) -> Check {
    const NAME: &str = "guide-cycle";
    let seq = guide.seq();
    let len = seq.len();
    let ear = guide.ear();
    if let Some((k, ())) = exec::find_first(len, exec, |k| (!seq[k].is_flip_adjacent(&seq[(k + 1) % len])).then_some(())) {
        return Check::fail(NAME, "consecutive members differ by more than a flip", format!("#{k} `{}` and `{}`", seq[k], seq[(k + 1) % len]));
    }
    let mut sorted = seq.to_vec();
    sorted.sort_unstable();
    if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
        return Check::fail(NAME, "a member repeats", format!("`{}`", w[0]));
    }
    if let Some(t) = seq.iter().find(|t| !t.contains(ear)) {
        return Check::fail(NAME, format!("every member must contain {ear}"), format!("`{t}`"));
    }
    let pairwise = len <= PAIRWISE_GUIDE_MAX;
    if pairwise {
        let hit = exec::find_first(len, exec, |a| (a + 1..len).find(|&b| seq[a].is_disjoint(&seq[b])).map(|b| (a, b)));
        if let Some((_, (a, b))) = hit {
            return Check::fail(NAME, "two members are Kneser-adjacent", format!("`{}` and `{}`", seq[a], seq[b]));
        }
    }
    let mut met = vec![false; part.len()];
    for t in seq {
        match part.orbit_id(t) {
            Some(id) => met[id as usize] = true,
            None => return Check::fail(NAME, "member is not a triangulation of the n-gon", format!("`{t}`")),
        }
    }
    if let Some(id) = met.iter().position(|m| !m) {
        return Check::fail(NAME, "an orbit is never met", format!("orbit {id} rep `{}`", part.orbit(id as OrbitId).rep()));
    }
    let independence = if pairwise { "all pairs intersect" } else { "all members share the guide diagonal" };
    Check::pass(
        NAME,
        format!("{len} members, closed flip walk, {independence}, meets all {} orbits", part.len()),
    )
}

/// Tree degree of each orbit is at most its size, and the guide meets each
/// orbit in at most half of its members.
pub fn check_guide_orbits(guide: &GuideCycle, part: &OrbitPartition, tree: &OrbitTree) -> Check {
    const NAME: &str = "guide-orbits";
    let mut hits = vec![0usize; part.len()];
    for t in guide.seq() {
        if let Some(id) = part.orbit_id(t) {
            hits[id as usize] += 1;
        }
    }
    let degrees = tree.degrees();
    for (id, o) in part.orbits().iter().enumerate() {
        let s = o.size();
        if degrees[id] > s || 2 * hits[id] > s {
            return Check::fail(
                NAME,
                "an orbit is overloaded",
                format!("orbit {id} `{}`: size {s}, tree degree {}, guide members {}", o.rep(), degrees[id], hits[id]),
            );
        }
    }
    let max_deg = degrees.iter().max().copied().unwrap_or(0);
    Check::pass(NAME, format!("{} orbits, max tree degree {max_deg}", part.len()))
}

/// Bridges join distinct orbits along Kneser edges, contract to the tree,
/// leave every vertex with degree at most three and occupy each orbit edge
/// at most once.
pub fn check_augmented_factor(part: &OrbitPartition, tree: &OrbitTree, factor: &AugmentedFactor) -> Check {
    const NAME: &str = "augmented-factor";
    let catalog = part.catalog();
    let bridges = factor.bridges();
    if bridges.len() + 1 != part.len() {
        return Check::fail(NAME, "one bridge per tree edge", format!("{} bridges for {} orbits", bridges.len(), part.len()));
    }
    for b in bridges {
        let (oa, ob) = (part.orbit_id(&b.a), part.orbit_id(&b.b));
        if oa.is_none() || ob.is_none() || oa == ob {
            return Check::fail(NAME, "bridge must join two distinct orbits", format!("`{}` ~ `{}`", b.a, b.b));
        }
        if !b.a.is_disjoint(&b.b) {
            return Check::fail(NAME, "bridge is not a Kneser edge", format!("`{}` ~ `{}`", b.a, b.b));
        }
        if bridge_orientation(&b.a, &b.b.rotate(-(b.epsilon as i64))).is_err() {
            return Check::fail(NAME, "bridge does not come from a flip edge", format!("`{}` ~ `{}`", b.a, b.b));
        }
    }
    let contracted = factor.contracted_edges();
    let tree_edges: BTreeSet<_> = tree.edge_set();
    if contracted != tree_edges {
        let diff = contracted.symmetric_difference(&tree_edges).next().copied();
        return Check::fail(NAME, "contracted bridges differ from the tree", format!("edge {diff:?}"));
    }
    let mut endpoint_use: HashMap<u32, usize> = HashMap::new();
    let mut edge_use: HashMap<u32, usize> = HashMap::new();
    for t in bridges.iter().flat_map(|b| [b.a, b.b]) {
        let ra = catalog.rank(&t).expect("checked above");
        let rb = catalog.rank(&t.rotate(1)).expect("rotation in catalog");
        *endpoint_use.entry(ra).or_default() += 1;
        *edge_use.entry(ra.min(rb)).or_default() += 1;
    }
    if let Some((r, k)) = endpoint_use.iter().find(|(_, &k)| k > 1) {
        return Check::fail(NAME, "a vertex hosts two bridges", format!("`{}` hosts {k}", catalog.get(*r)));
    }
    if let Some((r, k)) = edge_use.iter().find(|(_, &k)| k > 1) {
        let t = catalog.get(*r);
        return Check::fail(NAME, "an orbit edge is occupied twice", format!("{{`{t}`, r}} used {k} times"));
    }
    let max_degree = factor.max_degree();
    if max_degree > 3 {
        let r = (0..catalog.len() as u32).find(|&r| factor.degree_of_rank(r) > 3).expect("max");
        return Check::fail(NAME, "degree exceeds three", format!("`{}`", catalog.get(r)));
    }
    Check::pass(
        NAME,
        format!("{} bridges, max degree {max_degree}, contraction equals the tree", bridges.len()),
    )
}

/// Runs every suite for `n` and aggregates them. Per-triangulation suites are
/// exhaustive up to [`EXHAUSTIVE_MAX_N`] and sampled above; the guide and
/// bridge suites always run in full. For `n = 5` there is a single orbit and
/// those suites hold vacuously.
pub fn verify_lemmas(n: usize, exec: Execution) -> Result<CertificateReport> {
    if n < 5 {
        return Err(Error::TooSmall { n, min: 5 });
    }
    if n > MAX_N {
        return Err(Error::TooLarge {
            n,
            limit: MAX_N,
            what: "property suites",
        });
    }
    let mut report = CertificateReport::new("lemmas", n);
    if n == 5 {
        let part = OrbitPartition::build(n, exec)?;
        let coverage = Coverage::for_catalog(part.catalog());
        report.push(check_orbit_sizes(&part));
        report.push(check_rotation_disjoint(part.catalog(), coverage, exec));
        report.push(check_flip_bridges(part.catalog(), coverage, exec));
        for name in ["guide-cycle", "guide-orbits", "augmented-factor"] {
            report.push(Check::pass(name, "single orbit: no guide or bridges needed"));
        }
        return Ok(report);
    }
    let p = Pipeline::build(n, exec)?;
    let coverage = Coverage::for_catalog(p.partition.catalog());
    report.push(check_orbit_sizes(&p.partition));
    report.push(check_rotation_disjoint(p.partition.catalog(), coverage, exec));
    report.push(check_flip_bridges(p.partition.catalog(), coverage, exec));
    report.push(check_guide_cycle(&p.guide, &p.partition, exec));
    report.push(check_guide_orbits(&p.guide, &p.partition, &p.tree));
    report.push(check_augmented_factor(&p.partition, &p.tree, &p.factor));
    Ok(report)
}

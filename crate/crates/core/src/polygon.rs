//! Diagonals and triangulations of the labeled convex n-gon.
//!
//! Vertices are labeled `1..=n` clockwise. A triangulation is stored as a
//! bitmask over the diagonals of the n-gon, where bit `k` is the `k`-th
//! diagonal in ascending `(i, j)` order. That layout makes the canonical
//! order (lexicographic on the sorted diagonal list) a single `xor` plus
//! `trailing_zeros`, and disjointness a single `and`.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::exec::{self, Execution};

/// Largest polygon the bitmask layout supports (`n(n-3)/2 <= 128`).
pub const MAX_N: usize = 17;

/// Catalan number `C_m`.
///
/// Fits in `u64` for `m <= 35`, which is far beyond anything enumerable.
pub fn catalan(m: usize) -> u64 {
    let mut c = vec![1u64; m + 1];
    for k in 1..=m {
        c[k] = (0..k).map(|i| c[i] * c[k - 1 - i]).sum();
    }
    c[m]
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PolygonSize(u8);

impl PolygonSize {
    pub fn new(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidSize {
                n,
                reason: "a polygon needs at least 3 vertices".into(),
            });
        }
        if n > MAX_N {
            return Err(Error::TooLarge {
                n,
                limit: MAX_N,
                what: "triangulation encoding",
            });
        }
        Ok(PolygonSize(n as u8))
    }

    pub fn get(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for PolygonSize {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A diagonal `{i, j}` with `1 <= i < j <= n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Diagonal {
    i: u8,
    j: u8,
}

impl Diagonal {
    /// Normalizes the endpoint order and rejects polygon edges.
    pub fn new(a: usize, b: usize, n: usize) -> Result<Self> {
        let (i, j) = if a < b { (a, b) } else { (b, a) };
        if i < 1 || j > n || n > MAX_N || j - i < 2 || j - i > n - 2 {
            return Err(Error::InvalidDiagonal { i: a, j: b, n });
        }
        Ok(Diagonal {
            i: i as u8,
            j: j as u8,
        })
    }

    pub(crate) const fn raw(i: usize, j: usize) -> Self {
        Diagonal {
            i: i as u8,
            j: j as u8,
        }
    }

    pub fn i(self) -> usize {
        self.i as usize
    }

    pub fn j(self) -> usize {
        self.j as usize
    }

    /// Cyclic length: number of boundary edges on the shorter side.
    pub fn length(self, n: usize) -> usize {
        let d = self.j() - self.i();
        d.min(n - d)
    }

    pub fn is_ear(self, n: usize) -> bool {
        self.length(n) == 2
    }

    /// The ear at vertex `v`: the diagonal joining its two neighbors.
    pub fn ear_at(v: usize, n: usize) -> Result<Self> {
        if v < 1 || v > n {
            return Err(Error::InvalidDiagonal { i: v, j: v, n });
        }
        let prev = if v == 1 { n } else { v - 1 };
        let next = if v == n { 1 } else { v + 1 };
        Diagonal::new(prev, next, n)
    }

    /// Applies `i -> i + k (mod n)` to both endpoints.
    pub fn rotate(self, k: i64, n: usize) -> Self {
        let shift = |x: u8| ((x as i64 - 1 + k).rem_euclid(n as i64) + 1) as usize;
        let (a, b) = (shift(self.i), shift(self.j));
        let (i, j) = if a < b { (a, b) } else { (b, a) };
        Diagonal::raw(i, j)
    }

    /// Strict interleaving of endpoints; a shared endpoint never crosses.
    pub fn crosses(self, other: Diagonal) -> bool {
        let (a, b, c, d) = (self.i, self.j, other.i, other.j);
        (a < c && c < b && b < d) || (c < a && a < d && d < b)
    }
}

pub fn crosses(d1: Diagonal, d2: Diagonal) -> bool {
    d1.crosses(d2)
}

impl fmt::Display for Diagonal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.i, self.j)
    }
}

struct Layout {
    diagonals: Vec<Diagonal>,
    /// `index[i * (n + 1) + j]`, `u8::MAX` for non-diagonals.
    index: Vec<u8>,
    /// `rotation[k][idx]` is the index of `diagonals[idx]` rotated by `k`.
    rotation: Vec<Vec<u8>>,
    stride: usize,
}

impl Layout {
    fn new(n: usize) -> Self {
        let mut diagonals = Vec::new();
        for i in 1..=n {
            for j in i + 2..=n {
                if j - i <= n.saturating_sub(2) {
                    diagonals.push(Diagonal::raw(i, j));
                }
            }
        }
        let stride = n + 1;
        let mut index = vec![u8::MAX; stride * stride];
        for (k, d) in diagonals.iter().enumerate() {
            index[d.i() * stride + d.j()] = k as u8;
        }
        let rotation = (0..n.max(1))
            .map(|k| {
                diagonals
                    .iter()
                    .map(|d| {
                        let r = d.rotate(k as i64, n);
                        index[r.i() * stride + r.j()]
                    })
                    .collect()
            })
            .collect();
        Layout {
            diagonals,
            index,
            rotation,
            stride,
        }
    }

    fn bit(&self, d: Diagonal) -> u128 {
        let k = self.index[d.i() * self.stride + d.j()];
        debug_assert!(k != u8::MAX, "{d} is not a diagonal");
        1u128 << k
    }

    fn index_of(&self, i: usize, j: usize) -> Option<u8> {
        let k = *self.index.get(i * self.stride + j)?;
        (k != u8::MAX).then_some(k)
    }
}

fn layout(n: usize) -> &'static Layout {
    static LAYOUTS: OnceLock<Vec<OnceLock<Layout>>> = OnceLock::new();
    let all = LAYOUTS.get_or_init(|| (0..=MAX_N).map(|_| OnceLock::new()).collect());
    all[n].get_or_init(|| Layout::new(n))
}

fn ones(mut bits: u128) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if bits == 0 {
            return None;
        }
        let k = bits.trailing_zeros() as usize;
        bits &= bits - 1;
        Some(k)
    })
}

/// A triangulation of the labeled convex n-gon: `n - 3` pairwise
/// noncrossing diagonals.
///
/// Ordering is lexicographic on the sorted diagonal list, which is also the
/// order of the canonical text encoding.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Triangulation {
    n: u8,
    bits: u128,
}

impl Ord for Triangulation {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.n.cmp(&other.n) {
            Ordering::Equal => {}
            o => return o,
        }
        let diff = self.bits ^ other.bits;
        if diff == 0 {
            return Ordering::Equal;
        }
        let low = diff & diff.wrapping_neg();
        if self.bits & low != 0 {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    }
}

impl PartialOrd for Triangulation {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Triangulation {
    /// Builds and validates a triangulation from its diagonals.
    pub fn from_diagonals<I>(n: usize, diagonals: I) -> Result<Self>
    where
        I: IntoIterator<Item = Diagonal>,
    {
        let size = PolygonSize::new(n)?;
        let lay = layout(size.get());
        let mut bits = 0u128;
        let mut list = Vec::new();
        for d in diagonals {
            let d = Diagonal::new(d.i(), d.j(), n)?;
            let b = lay.bit(d);
            if bits & b != 0 {
                return Err(Error::InvalidTriangulation(format!("duplicate diagonal {d}")));
            }
            bits |= b;
            list.push(d);
        }
        if list.len() != n - 3 {
            return Err(Error::InvalidTriangulation(format!(
                "expected {} diagonals for n={n}, got {}",
                n - 3,
                list.len()
            )));
        }
        for (a, &d) in list.iter().enumerate() {
            if let Some(&e) = list[a + 1..].iter().find(|e| d.crosses(**e)) {
                return Err(Error::InvalidTriangulation(format!("{d} crosses {e}")));
            }
        }
        Ok(Triangulation { n: n as u8, bits })
    }

    pub(crate) fn from_bits(n: usize, bits: u128) -> Self {
        Triangulation { n: n as u8, bits }
    }

    /// Trusted construction from diagonals already known to be valid.
    pub(crate) fn from_valid_diagonals<I>(n: usize, diagonals: I) -> Self
    where
        I: IntoIterator<Item = Diagonal>,
    {
        let lay = layout(n);
        let bits = diagonals.into_iter().fold(0u128, |acc, d| acc | lay.bit(d));
        Triangulation { n: n as u8, bits }
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn bits(&self) -> u128 {
        self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    /// Diagonals in ascending order.
    pub fn diagonals(&self) -> impl Iterator<Item = Diagonal> + '_ {
        let lay = layout(self.n());
        ones(self.bits).map(move |k| lay.diagonals[k])
    }

    pub fn contains(&self, d: Diagonal) -> bool {
        match layout(self.n()).index_of(d.i(), d.j()) {
            Some(k) => self.bits >> k & 1 == 1,
            None => false,
        }
    }

    /// `r^k(T)`; negative `k` rotates counterclockwise.
    pub fn rotate(&self, k: i64) -> Self {
        let n = self.n();
        let k = k.rem_euclid(n as i64) as usize;
        if k == 0 {
            return *self;
        }
        let table = &layout(n).rotation[k];
        let bits = ones(self.bits).fold(0u128, |acc, idx| acc | 1u128 << table[idx]);
        Triangulation { n: self.n, bits }
    }

    /// Replaces `d` with the other diagonal of the quadrilateral formed by
    /// the two triangles on either side of `d`.
    pub fn flip(&self, d: Diagonal) -> Result<Self> {
        if !self.contains(d) {
            return Err(Error::NotPresent(d));
        }
        let n = self.n();
        let joined = |a: usize, b: usize| {
            let gap = a.abs_diff(b);
            gap == 1 || gap == n - 1 || self.contains(Diagonal::raw(a.min(b), a.max(b)))
        };
        let mut apex = (1..=n).filter(|&v| v != d.i() && v != d.j() && joined(d.i(), v) && joined(d.j(), v));
        let (Some(u), Some(v), None) = (apex.next(), apex.next(), apex.next()) else {
            return Err(Error::Internal(format!("{d} is not bounded by two triangles in {self}")));
        };
        let lay = layout(n);
        let replacement = Diagonal::raw(u.min(v), u.max(v));
        Ok(Triangulation {
            n: self.n,
            bits: (self.bits & !lay.bit(d)) | lay.bit(replacement),
        })
    }

    /// Every triangulation reachable by one flip, in order of the flipped diagonal.
    pub fn flip_neighbors(&self) -> impl Iterator<Item = Triangulation> + '_ {
        self.diagonals()
            .map(move |d| self.flip(d).expect("flip of a present diagonal"))
    }

    /// Kneser adjacency: no shared diagonal. Callers guarantee equal `n`.
    pub fn is_disjoint(&self, other: &Triangulation) -> bool {
        debug_assert_eq!(self.n, other.n);
        self.bits & other.bits == 0
    }

    /// Flip-graph adjacency: exactly one diagonal differs.
    pub fn is_flip_adjacent(&self, other: &Triangulation) -> bool {
        self.n == other.n && (self.bits ^ other.bits).count_ones() == 2
    }

    pub fn is_all_ears(&self) -> bool {
        let n = self.n();
        self.diagonals().all(|d| d.is_ear(n))
    }

    /// Canonical text encoding, e.g. `1-3,1-4`.
    pub fn encode(&self) -> String {
        self.to_string()
    }

    /// Parses the canonical encoding. Any order of pairs and either endpoint
    /// order is accepted; the result is validated as a triangulation.
    pub fn decode(text: &str, n: usize) -> Result<Self> {
        let text = text.trim();
        let mut diagonals = Vec::new();
        if !text.is_empty() {
            for pair in text.split(',') {
                let (a, b) = pair
                    .trim()
                    .split_once('-')
                    .ok_or_else(|| Error::Syntax(format!("expected `i-j`, found `{pair}`")))?;
                let a: usize = a
                    .trim()
                    .parse()
                    .map_err(|_| Error::Syntax(format!("bad vertex label `{a}`")))?;
                let b: usize = b
                    .trim()
                    .parse()
                    .map_err(|_| Error::Syntax(format!("bad vertex label `{b}`")))?;
                diagonals.push(Diagonal::new(a, b, n)?);
            }
        }
        Triangulation::from_diagonals(n, diagonals)
    }
}

impl fmt::Display for Triangulation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, d) in self.diagonals().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Triangulation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "T{}{{{}}}", self.n, self)
    }
}

/// Triangulations of the sub-polygon on the consecutive labels `a..=b`,
/// with `{a, b}` as its base side (a polygon edge or a diagonal).
fn triangulate_chain(
    a: usize,
    b: usize,
    lay: &Layout,
    memo: &mut HashMap<(usize, usize), std::rc::Rc<Vec<u128>>>,
) -> std::rc::Rc<Vec<u128>> {
    if let Some(hit) = memo.get(&(a, b)) {
        return hit.clone();
    }
    let mut out = Vec::new();
    if b - a < 2 {
        out.push(0);
    } else {
        for apex in a + 1..b {
            let mut extra = 0u128;
            if apex - a >= 2 {
                extra |= lay.bit(Diagonal::raw(a, apex));
            }
            if b - apex >= 2 {
                extra |= lay.bit(Diagonal::raw(apex, b));
            }
            let left = triangulate_chain(a, apex, lay, memo);
            let right = triangulate_chain(apex, b, lay, memo);
            out.reserve(left.len() * right.len());
            for &l in left.iter() {
                for &r in right.iter() {
                    out.push(l | r | extra);
                }
            }
        }
    }
    let out = std::rc::Rc::new(out);
    memo.insert((a, b), out.clone());
    out
}

fn enumerate_sorted(n: usize, exec: Execution) -> Result<Vec<Triangulation>> {
    let size = PolygonSize::new(n)?;
    let lay = layout(size.get());
    let mut memo = HashMap::new();
    let bits = triangulate_chain(1, n, lay, &mut memo);
    let mut all: Vec<Triangulation> = bits.iter().map(|&b| Triangulation::from_bits(n, b)).collect();
    drop(memo);
    exec::sort_unstable(&mut all, exec);
    Ok(all)
}

/// All triangulations of the n-gon in ascending canonical order.
pub fn enumerate_triangulations(n: usize) -> Result<std::vec::IntoIter<Triangulation>> {
    Ok(enumerate_sorted(n, Execution::default())?.into_iter())
}

/// The sorted list of all triangulations of the n-gon. A triangulation's
/// position in this list is its rank.
#[derive(Clone, Debug)]
pub struct Catalog {
    n: PolygonSize,
    items: Vec<Triangulation>,
}

impl Catalog {
    pub fn build(n: usize, exec: Execution) -> Result<Self> {
        let items = enumerate_sorted(n, exec)?;
        Ok(Catalog {
            n: PolygonSize::new(n)?,
            items,
        })
    }

    pub fn n(&self) -> usize {
        self.n.get()
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn as_slice(&self) -> &[Triangulation] {
        &self.items
    }

    pub fn get(&self, rank: u32) -> Triangulation {
        self.items[rank as usize]
    }

    pub fn rank(&self, t: &Triangulation) -> Option<u32> {
        if t.n() != self.n() {
            return None;
        }
        self.items.binary_search(t).ok().map(|r| r as u32)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(i: usize, j: usize, n: usize) -> Diagonal {
        Diagonal::new(i, j, n).unwrap()
    }

    fn tri(n: usize, s: &str) -> Triangulation {
        Triangulation::decode(s, n).unwrap()
    }

    /// Brute force: every (n-3)-subset of diagonals that is pairwise noncrossing.
    fn brute_force(n: usize) -> Vec<Vec<Diagonal>> {
        let all: Vec<Diagonal> = (1..=n)
            .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
            .filter_map(|(i, j)| Diagonal::new(i, j, n).ok())
            .collect();
        let k = n - 3;
        let mut out = Vec::new();
        let mut pick = Vec::new();
        fn rec(all: &[Diagonal], start: usize, k: usize, pick: &mut Vec<Diagonal>, out: &mut Vec<Vec<Diagonal>>) {
            if pick.len() == k {
                out.push(pick.clone());
                return;
            }
            for idx in start..all.len() {
                if pick.iter().all(|p| !p.crosses(all[idx])) {
                    pick.push(all[idx]);
                    rec(all, idx + 1, k, pick, out);
                    pick.pop();
                }
            }
        }
        rec(&all, 0, k, &mut pick, &mut out);
        out
    }

    #[test]
    fn crossing_examples() {
        assert!(crosses(d(1, 3, 5), d(2, 4, 5)));
        assert!(!crosses(d(1, 3, 5), d(3, 5, 5)));
        assert!(!crosses(d(1, 3, 8), d(5, 7, 8)));
        assert!(crosses(d(2, 4, 5), d(1, 3, 5)));
    }

    #[test]
    fn diagonal_validation() {
        assert!(Diagonal::new(1, 2, 6).is_err());
        assert!(Diagonal::new(1, 6, 6).is_err());
        assert_eq!(Diagonal::new(5, 1, 6).unwrap(), d(1, 5, 6));
        assert!(Diagonal::new(0, 3, 6).is_err());
        assert!(Diagonal::new(2, 7, 6).is_err());
        assert_eq!(Diagonal::ear_at(6, 6).unwrap(), d(1, 5, 6));
        assert_eq!(Diagonal::ear_at(1, 6).unwrap(), d(2, 6, 6));
        assert!(d(1, 5, 6).is_ear(6));
        assert!(!d(1, 4, 6).is_ear(6));
    }

    #[test]
    fn rotation_examples() {
        assert_eq!(d(4, 6, 6).rotate(1, 6), d(1, 5, 6));
        assert_eq!(d(1, 3, 5).rotate(5, 5), d(1, 3, 5));
        assert_eq!(tri(6, "1-3,1-4,1-5").rotate(1), tri(6, "2-4,2-5,2-6"));
        assert_eq!(tri(6, "1-3,1-4,1-5").rotate(-1), tri(6, "2-6,3-6,4-6"));
        let t = tri(8, "1-3,1-4,4-7,4-8,5-7");
        for k in -10..10 {
            assert_eq!(t.rotate(k).rotate(-k), t);
        }
    }

    #[test]
    fn enumeration_matches_brute_force() {
        for n in 4..=9 {
            let fast: Vec<Triangulation> = enumerate_triangulations(n).unwrap().collect();
            let mut slow: Vec<Triangulation> = brute_force(n)
                .into_iter()
                .map(|ds| Triangulation::from_diagonals(n, ds).unwrap())
                .collect();
            slow.sort();
            assert_eq!(fast, slow, "n={n}");
        }
        assert_eq!(enumerate_triangulations(5).unwrap().count(), 5);
        assert_eq!(enumerate_triangulations(6).unwrap().count(), 14);
        let three: Vec<_> = enumerate_triangulations(3).unwrap().collect();
        assert_eq!(three.len(), 1);
        assert!(three[0].is_empty());
        assert!(enumerate_triangulations(2).is_err());
    }

    #[test]
    fn enumeration_is_sorted_by_diagonal_list() {
        let all: Vec<Triangulation> = enumerate_triangulations(8).unwrap().collect();
        let lists: Vec<Vec<(usize, usize)>> = all
            .iter()
            .map(|t| t.diagonals().map(|d| (d.i(), d.j())).collect())
            .collect();
        assert!(lists.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn catalan_values() {
        let expected = [1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796, 58786, 208012];
        for (m, &c) in expected.iter().enumerate() {
            assert_eq!(catalan(m), c);
        }
    }

    #[test]
    fn flip_examples() {
        assert_eq!(tri(6, "1-3,1-4,1-5").flip(d(1, 4, 6)).unwrap(), tri(6, "1-3,3-5,1-5"));
        assert_eq!(tri(5, "1-3,1-4").flip(d(1, 3, 5)).unwrap(), tri(5, "2-4,1-4"));
        assert_eq!(
            tri(6, "1-3,1-4,1-5").flip(d(2, 4, 6)),
            Err(Error::NotPresent(d(2, 4, 6)))
        );
    }

    #[test]
    fn flip_is_an_involution_at_seven() {
        let mut pairs = 0;
        for t in enumerate_triangulations(7).unwrap() {
            for dg in t.diagonals() {
                let u = t.flip(dg).unwrap();
                let new: Vec<_> = u.diagonals().filter(|e| !t.contains(*e)).collect();
                assert_eq!(new.len(), 1);
                assert_eq!(u.flip(new[0]).unwrap(), t);
                assert!(t.is_flip_adjacent(&u));
                assert!(!t.is_disjoint(&u));
                assert_eq!((t.bits() & u.bits()).count_ones(), 3);
                pairs += 1;
            }
        }
        assert_eq!(pairs, 42 * 4);
    }

    #[test]
    fn disjointness_examples() {
        assert!(tri(5, "1-3,1-4").is_disjoint(&tri(5, "2-4,2-5")));
        let t = tri(6, "1-3,1-4,1-5");
        assert!(!t.is_disjoint(&t));
        assert!(t.is_disjoint(&tri(6, "2-4,4-6,2-6")));
    }

    #[test]
    fn encode_decode() {
        let t = Triangulation::from_diagonals(5, [d(1, 4, 5), d(1, 3, 5)]).unwrap();
        assert_eq!(t.encode(), "1-3,1-4");
        assert_eq!(Triangulation::decode("1-4, 3-1", 5).unwrap(), t);
        assert!(matches!(Triangulation::decode("1-3,2-4", 5), Err(Error::InvalidTriangulation(_))));
        assert!(matches!(Triangulation::decode("1-3", 6), Err(Error::InvalidTriangulation(_))));
        assert!(matches!(Triangulation::decode("1-2,1-3", 5), Err(Error::InvalidDiagonal { .. })));
        assert!(matches!(Triangulation::decode("1-3,1-3", 5), Err(Error::InvalidTriangulation(_))));
        assert!(matches!(Triangulation::decode("1:3,1-4", 5), Err(Error::Syntax(_))));
        assert!(matches!(Triangulation::decode("1-x,1-4", 5), Err(Error::Syntax(_))));
        assert!(Triangulation::decode("", 3).unwrap().is_empty());
    }

    #[test]
    fn long_diagonals_cross_their_double_rotation() {
        for n in 5..=12 {
            for i in 1..=n {
                for j in i + 2..=n {
                    let Ok(dg) = Diagonal::new(i, j, n) else { continue };
                    if dg.length(n) >= 3 {
                        assert!(dg.crosses(dg.rotate(2, n)), "{dg} n={n}");
                    }
                    assert!(dg.crosses(dg.rotate(1, n)), "{dg} n={n}");
                }
            }
        }
    }

    #[test]
    fn catalog_ranks() {
        let cat = Catalog::build(8, Execution::Sequential).unwrap();
        assert_eq!(cat.len(), 132);
        for (r, t) in cat.as_slice().iter().enumerate() {
            assert_eq!(cat.rank(t), Some(r as u32));
        }
        let other = tri(7, "1-3,1-4,1-5,1-6");
        assert_eq!(cat.rank(&other), None);
    }
}

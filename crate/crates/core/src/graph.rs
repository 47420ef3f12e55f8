//! Construction of GP(n,k) and the brute-force BFS distance oracle.
//!
//! Vertices are enumerated as `u_0..u_{n-1}` followed by `v_0..v_{n-1}`;
//! every array indexed by vertex uses that order.

use std::collections::VecDeque;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Validated parameters of GP(n,k): `n >= 3` and `1 <= k < n/2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GpParams {
    n: usize,
    k: usize,
}

impl GpParams {
    pub fn new(n: i64, k: i64) -> Result<Self> {
        if n < 3 || k < 1 || 2 * k >= n {
            return Err(Error::InvalidParams { n, k });
        }
        Ok(Self {
            n: n as usize,
            k: k as usize,
        })
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn k(&self) -> usize {
        self.k
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        2 * self.n
    }

    pub fn edge_count(&self) -> usize {
        3 * self.n
    }

    /// `u_i`, with `i` reduced mod n (negative indices allowed).
    pub fn outer(&self, i: i64) -> VertexId {
        VertexId::new(VertexClass::Outer, self.reduce(i))
    }

    /// `v_i`, with `i` reduced mod n (negative indices allowed).
    pub fn inner(&self, i: i64) -> VertexId {
        VertexId::new(VertexClass::Inner, self.reduce(i))
    }

    fn reduce(&self, i: i64) -> usize {
        i.rem_euclid(self.n as i64) as usize
    }

    /// Position of `v` in the fixed enumeration.
    #[inline]
    pub fn position(&self, v: VertexId) -> usize {
        match v.class {
            VertexClass::Outer => v.index,
            VertexClass::Inner => self.n + v.index,
        }
    }

    /// Inverse of [`GpParams::position`].
    #[inline]
    pub fn vertex_at(&self, pos: usize) -> VertexId {
        debug_assert!(pos < self.vertex_count());
        if pos < self.n {
            VertexId::new(VertexClass::Outer, pos)
        } else {
            VertexId::new(VertexClass::Inner, pos - self.n)
        }
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.vertex_count()).map(move |p| self.vertex_at(p))
    }

    /// The three neighbours of `v`: outer edges and the spoke for `u_i`,
    /// inner edges and the spoke for `v_i`.
    pub fn neighbors(&self, v: VertexId) -> [VertexId; 3] {
        let n = self.n;
        let i = v.index;
        match v.class {
            VertexClass::Outer => [
                VertexId::new(VertexClass::Outer, (i + 1) % n),
                VertexId::new(VertexClass::Outer, (i + n - 1) % n),
                VertexId::new(VertexClass::Inner, i),
            ],
            VertexClass::Inner => [
                VertexId::new(VertexClass::Inner, (i + self.k) % n),
                VertexId::new(VertexClass::Inner, (i + n - self.k) % n),
                VertexId::new(VertexClass::Outer, i),
            ],
        }
    }

    pub fn is_edge(&self, a: VertexId, b: VertexId) -> bool {
        self.neighbors(a).contains(&b)
    }

    /// Smallest `n` covered by the large-n closed forms for this `k`, if any.
    pub fn theorem_bound(k: usize) -> Option<usize> {
        match k {
            0..=2 => None,
            3 => Some(8),
            4 => Some(10),
            k if k % 2 == 1 => Some(k * (k + 1) / 2),
            k => Some(k * k / 2),
        }
    }

    /// Whether (n,k) meets the hypothesis of the large-n diameter theorem,
    /// which is also where the four-path closed form is known to be exact.
    pub fn closed_form_guaranteed(&self) -> bool {
        Self::theorem_bound(self.k).is_some_and(|b| self.n >= b)
    }
}

impl fmt::Display for GpParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GP({},{})", self.n, self.k)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VertexClass {
    Outer,
    Inner,
}

/// `u_i` (outer) or `v_i` (inner). The index is always reduced mod n.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexId {
    pub class: VertexClass,
    pub index: usize,
}

impl VertexId {
    fn new(class: VertexClass, index: usize) -> Self {
        Self { class, index }
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.class {
            VertexClass::Outer => write!(f, "u{}", self.index),
            VertexClass::Inner => write!(f, "v{}", self.index),
        }
    }
}

impl Serialize for VertexId {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Single-source distances over the whole graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMap {
    params: GpParams,
    source: VertexId,
    dist: Vec<u32>,
}

impl DistanceMap {
    pub fn source(&self) -> VertexId {
        self.source
    }

    #[inline]
    pub fn get(&self, v: VertexId) -> u32 {
        self.dist[self.params.position(v)]
    }

    /// Distances in enumeration order.
    pub fn as_slice(&self) -> &[u32] {
        &self.dist
    }

    pub fn eccentricity(&self) -> u32 {
        self.dist.iter().copied().max().unwrap_or(0)
    }
}

/// Plain FIFO breadth-first search from `src`.
pub fn bfs_distances(p: &GpParams, src: VertexId) -> DistanceMap {
    const UNSEEN: u32 = u32::MAX;
    let mut dist = vec![UNSEEN; p.vertex_count()];
    let mut queue = VecDeque::with_capacity(p.vertex_count());
    dist[p.position(src)] = 0;
    queue.push_back(src);
    while let Some(x) = queue.pop_front() {
        let next = dist[p.position(x)] + 1;
        for y in p.neighbors(x) {
            let slot = &mut dist[p.position(y)];
            if *slot == UNSEEN {
                *slot = next;
                queue.push_back(y);
            }
        }
    }
    assert!(
        dist.iter().all(|&d| d != UNSEEN),
        "{p} is disconnected from {src}; GP(n,k) must be connected"
    );
    DistanceMap {
        params: *p,
        source: src,
        dist,
    }
}

pub fn oracle_distance(p: &GpParams, x: VertexId, y: VertexId) -> u32 {
    bfs_distances(p, x).get(y)
}

/// Diameter by BFS from `u_0` and `v_0` only. The rotation `i -> i+1` is an
/// automorphism, so every vertex has the eccentricity of one of these two.
pub fn oracle_diameter(p: &GpParams) -> u32 {
    let outer = bfs_distances(p, p.outer(0)).eccentricity();
    let inner = bfs_distances(p, p.inner(0)).eccentricity();
    outer.max(inner)
}

/// Diameter by BFS from every vertex.
pub fn oracle_diameter_full(p: &GpParams) -> u32 {
    p.vertices()
        .map(|v| bfs_distances(p, v).eccentricity())
        .max()
        .unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::collections::BTreeSet;

    fn gp(n: i64, k: i64) -> GpParams {
        GpParams::new(n, k).unwrap()
    }

    #[test]
    fn params_validation() {
        assert_eq!(gp(6, 2).n(), 6);
        assert_eq!(gp(3, 1).k(), 1);
        assert_eq!(
            GpParams::new(5, 3),
            Err(Error::InvalidParams { n: 5, k: 3 })
        );
        // k = n/2 would be a multigraph
        assert!(GpParams::new(6, 3).is_err());
        assert!(GpParams::new(2, 1).is_err());
        assert!(GpParams::new(10, 0).is_err());
        assert!(GpParams::new(10, -1).is_err());
    }

    #[test]
    fn negative_indices_reduce() {
        let p = gp(6, 2);
        assert_eq!(p.outer(-1), p.outer(5));
        assert_eq!(p.inner(-3), p.inner(3));
        assert_eq!(p.inner(13).index, 1);
    }

    #[test]
    fn neighbors_match_figure() {
        let p = gp(6, 2);
        let set = |v| p.neighbors(v).into_iter().collect::<BTreeSet<_>>();
        assert_eq!(
            set(p.outer(0)),
            BTreeSet::from([p.outer(1), p.outer(5), p.inner(0)])
        );
        assert_eq!(
            set(p.inner(0)),
            BTreeSet::from([p.inner(2), p.inner(4), p.outer(0)])
        );
        let q = gp(3, 1);
        assert_eq!(
            q.neighbors(q.inner(1)).into_iter().collect::<BTreeSet<_>>(),
            BTreeSet::from([q.inner(0), q.inner(2), q.outer(1)])
        );
    }

    #[test]
    fn bfs_examples() {
        let p = gp(6, 2);
        let d = bfs_distances(&p, p.outer(0));
        assert_eq!(d.get(p.inner(3)), 3);
        assert_eq!(d.get(p.outer(0)), 0);
        let petersen = gp(5, 2);
        assert_eq!(
            bfs_distances(&petersen, petersen.outer(0)).eccentricity(),
            2
        );
    }

    #[test]
    fn oracle_examples() {
        let p = gp(6, 2);
        assert_eq!(oracle_distance(&p, p.outer(0), p.inner(3)), 3);
        let q = gp(50, 9);
        assert_eq!(oracle_distance(&q, q.outer(0), q.inner(23)), 4);
        assert_eq!(oracle_diameter(&gp(6, 2)), 4);
        assert_eq!(oracle_diameter(&gp(7, 3)), 3);
        assert_eq!(oracle_diameter(&gp(12, 5)), 4);
    }

    #[test]
    fn enumeration_roundtrip() {
        let p = gp(11, 4);
        for pos in 0..p.vertex_count() {
            assert_eq!(p.position(p.vertex_at(pos)), pos);
        }
        assert_eq!(p.vertex_at(11), p.inner(0));
    }

    #[test]
    fn two_source_diameter_equals_full() {
        for n in 3..=30i64 {
            for k in 1..=(n - 1) / 2 {
                let p = gp(n, k);
                assert_eq!(oracle_diameter(&p), oracle_diameter_full(&p), "{p}");
            }
        }
    }

    fn params() -> impl Strategy<Value = GpParams> {
        (3i64..60)
            .prop_flat_map(|n| (Just(n), 1..=((n - 1) / 2)))
            .prop_map(|(n, k)| gp(n, k))
    }

    proptest! {
        #[test]
        fn cubic_and_symmetric(p in params()) {
            let mut edges = BTreeSet::new();
            for v in p.vertices() {
                let nb = p.neighbors(v);
                let distinct: BTreeSet<_> = nb.iter().copied().collect();
                prop_assert_eq!(distinct.len(), 3);
                for w in nb {
                    prop_assert!(p.is_edge(w, v));
                    edges.insert((v.min(w), v.max(w)));
                }
            }
            prop_assert_eq!(edges.len(), p.edge_count());
        }

        #[test]
        fn distance_map_invariants(p in params(), s in 0usize..120) {
            let src = p.vertex_at(s % p.vertex_count());
            let d = bfs_distances(&p, src);
            prop_assert_eq!(d.get(src), 0);
            for v in p.vertices() {
                for w in p.neighbors(v) {
                    prop_assert!(d.get(v).abs_diff(d.get(w)) <= 1);
                }
                if v != src {
                    prop_assert!(d.get(v) > 0);
                }
            }
        }

        #[test]
        fn rotation_and_reflection(p in params(), a in 0i64..60, b in 0i64..60) {
            let from = bfs_distances(&p, p.outer(a));
            let shifted = bfs_distances(&p, p.outer(a + 1));
            for (x, y) in [(p.outer(b), p.outer(b + 1)), (p.inner(b), p.inner(b + 1))] {
                prop_assert_eq!(from.get(x), shifted.get(y));
            }
            let base = bfs_distances(&p, p.outer(0));
            prop_assert_eq!(base.get(p.inner(b)), base.get(p.inner(-b)));
            prop_assert_eq!(base.get(p.outer(b)), base.get(p.outer(-b)));
        }

        #[test]
        fn oracle_metric(p in params(), x in 0usize..120, y in 0usize..120, z in 0usize..120) {
            let [x, y, z] = [x, y, z].map(|i| p.vertex_at(i % p.vertex_count()));
            let dxy = oracle_distance(&p, x, y);
            prop_assert_eq!(dxy, oracle_distance(&p, y, x));
            prop_assert_eq!(dxy == 0, x == y);
            prop_assert!(dxy <= oracle_distance(&p, x, z) + oracle_distance(&p, z, y));
        }
    }
}

//! W-sets, l-distance-balancedness, and the diameter-attainment predicate.

use std::ops::RangeInclusive;
use std::sync::OnceLock;

use rayon::prelude::*;
use serde::Serialize;

use crate::diameter::{diameter, Strategy};
use crate::error::{Error, Result};
use crate::graph::{bfs_distances, oracle_diameter, DistanceMap, GpParams, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BalanceReport {
    pub x: VertexId,
    pub y: VertexId,
    pub pair_distance: usize,
    pub w_xy_size: usize,
    pub w_yx_size: usize,
    pub equidistant_size: usize,
    pub balanced: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub x: VertexId,
    pub y: VertexId,
    pub w_xy_size: usize,
    pub w_yx_size: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LBalanceVerdict {
    pub ell: usize,
    pub holds: bool,
    pub witness: Option<Witness>,
    pub pairs_checked: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConjectureRecord {
    pub n: usize,
    pub k: usize,
    pub diameter: usize,
    pub attaining_j: Option<usize>,
    pub predicate: bool,
}

/// `{ w : d(w,x) < d(w,y) }`, in enumeration order.
pub fn w_set(p: &GpParams, x: VertexId, y: VertexId) -> Result<Vec<VertexId>> {
    if x == y {
        return Err(Error::SameVertex);
    }
    let dx = bfs_distances(p, x);
    let dy = bfs_distances(p, y);
    Ok(dx
        .as_slice()
        .iter()
        .zip(dy.as_slice())
        .enumerate()
        .filter(|(_, (a, b))| a < b)
        .map(|(pos, _)| p.vertex_at(pos))
        .collect())
}

fn split_counts(dx: &DistanceMap, dy: &DistanceMap) -> (usize, usize, usize) {
    let mut counts = (0, 0, 0);
    for (a, b) in dx.as_slice().iter().zip(dy.as_slice()) {
        match a.cmp(b) {
            std::cmp::Ordering::Less => counts.0 += 1,
            std::cmp::Ordering::Greater => counts.1 += 1,
            std::cmp::Ordering::Equal => counts.2 += 1,
        }
    }
    counts
}

pub fn balance_report(p: &GpParams, x: VertexId, y: VertexId) -> Result<BalanceReport> {
    if x == y {
        return Err(Error::SameVertex);
    }
    let dx = bfs_distances(p, x);
    let dy = bfs_distances(p, y);
    let (w_xy_size, w_yx_size, equidistant_size) = split_counts(&dx, &dy);
    Ok(BalanceReport {
        x,
        y,
        pair_distance: dx.get(y) as usize,
        w_xy_size,
        w_yx_size,
        equidistant_size,
        balanced: w_xy_size == w_yx_size,
    })
}

/// Lazily filled BFS maps for every vertex of one graph.
pub struct DistanceCache {
    params: GpParams,
    maps: Vec<OnceLock<DistanceMap>>,
}

impl DistanceCache {
    pub fn new(p: &GpParams) -> Self {
        Self {
            params: *p,
            maps: (0..p.vertex_count()).map(|_| OnceLock::new()).collect(),
        }
    }

    pub fn from(&self, v: VertexId) -> &DistanceMap {
        self.maps[self.params.position(v)].get_or_init(|| bfs_distances(&self.params, v))
    }

    pub fn fill_all(&self) {
        (0..self.maps.len()).into_par_iter().for_each(|pos| {
            self.from(self.params.vertex_at(pos));
        });
    }
}

/// Checks every pair at distance `ell`. With `reduce_symmetry` only pairs
/// with one endpoint in `{u_0, v_0}` are visited, which covers every pair up
/// to rotation.
pub fn is_l_distance_balanced(
    p: &GpParams,
    ell: usize,
    reduce_symmetry: bool,
) -> Result<LBalanceVerdict> {
    let cache = DistanceCache::new(p);
    let diameter = oracle_diameter(p) as usize;
    check_ell(p, &cache, ell, diameter, reduce_symmetry)
}

fn check_ell(
    p: &GpParams,
    cache: &DistanceCache,
    ell: usize,
    diameter: usize,
    reduce_symmetry: bool,
) -> Result<LBalanceVerdict> {
    if ell == 0 || ell > diameter {
        return Err(Error::EllOutOfRange { ell, diameter });
    }
    let total = p.vertex_count();
    let sources: Vec<usize> = if reduce_symmetry {
        vec![p.position(p.outer(0)), p.position(p.inner(0))]
    } else {
        (0..total).collect()
    };
    let mut pairs_checked = 0;
    for &a in &sources {
        let x = p.vertex_at(a);
        let dx = cache.from(x);
        let start = if reduce_symmetry { 0 } else { a + 1 };
        for b in start..total {
            if b == a || (reduce_symmetry && a == p.n() && b == 0) {
                continue;
            }
            let y = p.vertex_at(b);
            if dx.get(y) as usize != ell {
                continue;
            }
            pairs_checked += 1;
            let (wxy, wyx, _) = split_counts(dx, cache.from(y));
            if wxy != wyx {
                let witness = if a < b {
                    Witness {
                        x,
                        y,
                        w_xy_size: wxy,
                        w_yx_size: wyx,
                    }
                } else {
                    Witness {
                        x: y,
                        y: x,
                        w_xy_size: wyx,
                        w_yx_size: wxy,
                    }
                };
                return Ok(LBalanceVerdict {
                    ell,
                    holds: false,
                    witness: Some(witness),
                    pairs_checked,
                });
            }
        }
    }
    Ok(LBalanceVerdict {
        ell,
        holds: true,
        witness: None,
        pairs_checked,
    })
}

pub fn is_diam_distance_balanced(p: &GpParams) -> Result<LBalanceVerdict> {
    let diam = diameter(p, Strategy::Auto)?.value;
    let cache = DistanceCache::new(p);
    check_ell(p, &cache, diam, diam, true)
}

/// One verdict per `ell` in `1..=diam`, sharing BFS work across them.
pub fn is_highly_distance_balanced(p: &GpParams) -> Result<Vec<LBalanceVerdict>> {
    let diam = diameter(p, Strategy::Auto)?.value;
    let cache = DistanceCache::new(p);
    (1..=diam)
        .map(|ell| check_ell(p, &cache, ell, diam, true))
        .collect()
}

/// Whether some inner vertex sits at distance `diam` from `u_0`, using BFS
/// distances so that it is valid for every (n,k).
pub fn conjecture_predicate(p: &GpParams) -> Result<ConjectureRecord> {
    let diam = diameter(p, Strategy::Auto)?.value;
    let from_u0 = bfs_distances(p, p.outer(0));
    let attaining_j = (0..p.n()).find(|&j| from_u0.get(p.inner(j as i64)) as usize == diam);
    Ok(ConjectureRecord {
        n: p.n(),
        k: p.k(),
        diameter: diam,
        attaining_j,
        predicate: attaining_j.is_some(),
    })
}

/// Records with a true predicate for `k` in `ks` (values below 2 are skipped)
/// and `2k < n <= n_limit`, sorted by `(k, n)`. `workers` of `None` uses the
/// default rayon pool size; the output does not depend on it.
pub fn conjecture_scan(
    ks: RangeInclusive<usize>,
    n_limit: usize,
    workers: Option<usize>,
) -> Result<Vec<ConjectureRecord>> {
    let instances: Vec<GpParams> = ks
        .filter(|&k| k >= 2)
        .flat_map(|k| (2 * k + 1..=n_limit).map(move |n| (n, k)))
        .map(|(n, k)| GpParams::new(n as i64, k as i64))
        .collect::<Result<_>>()?;

    let run = || -> Result<Vec<ConjectureRecord>> {
        let records: Vec<ConjectureRecord> = instances
            .par_iter()
            .map(conjecture_predicate)
            .collect::<Result<Vec<_>>>()?;
        let mut hits: Vec<_> = records.into_iter().filter(|r| r.predicate).collect();
        hits.sort_by_key(|r| (r.k, r.n));
        Ok(hits)
    };

    match workers {
        None => run(),
        Some(w) => rayon::ThreadPoolBuilder::new()
            .num_threads(w)
            .build()
            .expect("failed to build worker pool")
            .install(run),
    }
}

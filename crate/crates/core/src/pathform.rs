//! Closed-form distances `d(u_0, v_j)`.
//!
//! A shortest `u_0,v_j`-path uses exactly one spoke and is one of four
//! shapes: walk the outer cycle to some `u_i` with `|i| < k`, cross the spoke,
//! then step along the inner chords to `v_j`. Writing `j = m0*k + j0` and
//! `n - j = m1*k + j1`, the four shapes are
//!
//! | type | outer steps      | inner steps     | length            |
//! |------|------------------|-----------------|-------------------|
//! | P1   | `+j0`            | `+m0`           | `j0 + m0 + 1`     |
//! | P2   | `-(k - j0)`      | `+(m0 + 1)`     | `k - j0 + m0 + 2` |
//! | P3   | `-j1`            | `-m1`           | `j1 + m1 + 1`     |
//! | P4   | `+(k - j1)`      | `-(m1 + 1)`     | `k - j1 + m1 + 2` |
//!
//! Each length is the edge count of a real walk, so the minimum is always an
//! upper bound on the distance; it is exact when
//! [`GpParams::closed_form_guaranteed`] holds.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{GpParams, VertexId};

/// `j = m0*k + j0` and `n - j = m1*k + j1`, with `0 <= j0, j1 < k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Decomposition {
    pub j: usize,
    pub m0: usize,
    pub j0: usize,
    pub m1: usize,
    pub j1: usize,
}

pub fn decompose(p: &GpParams, j: i64) -> Result<Decomposition> {
    let j = checked_index(p, j)?;
    let k = p.k();
    let rest = p.n() - j;
    Ok(Decomposition {
        j,
        m0: j / k,
        j0: j % k,
        m1: rest / k,
        j1: rest % k,
    })
}

fn checked_index(p: &GpParams, j: i64) -> Result<usize> {
    if j < 0 || j > p.n() as i64 {
        return Err(Error::OutOfRange { j, n: p.n() });
    }
    Ok(j as usize)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PathType {
    P1,
    P2,
    P3,
    P4,
}

impl PathType {
    pub const ALL: [PathType; 4] = [PathType::P1, PathType::P2, PathType::P3, PathType::P4];

    pub fn length(self, dec: &Decomposition, k: usize) -> usize {
        let Decomposition { m0, j0, m1, j1, .. } = *dec;
        match self {
            PathType::P1 => j0 + m0 + 1,
            PathType::P2 => (k - j0) + m0 + 2,
            PathType::P3 => j1 + m1 + 1,
            PathType::P4 => (k - j1) + m1 + 2,
        }
    }

    /// Signed (outer steps, inner steps) of the walk.
    fn shape(self, dec: &Decomposition, k: usize) -> (i64, i64) {
        let k = k as i64;
        let (m0, j0, m1, j1) = (dec.m0 as i64, dec.j0 as i64, dec.m1 as i64, dec.j1 as i64);
        match self {
            PathType::P1 => (j0, m0),
            PathType::P2 => (-(k - j0), m0 + 1),
            PathType::P3 => (-j1, -m1),
            PathType::P4 => (k - j1, -(m1 + 1)),
        }
    }
}

pub fn path_length(p: &GpParams, j: i64, t: PathType) -> Result<usize> {
    Ok(t.length(&decompose(p, j)?, p.k()))
}

/// The vertex sequence of the type-`t` walk from `u_0` to `v_j`.
pub fn path_walk(p: &GpParams, j: i64, t: PathType) -> Result<Vec<VertexId>> {
    let dec = decompose(p, j)?;
    let (outer, inner) = t.shape(&dec, p.k());
    let k = p.k() as i64;
    let mut walk = Vec::with_capacity((outer.abs() + inner.abs() + 2) as usize);
    let step = outer.signum();
    let mut i = 0i64;
    walk.push(p.outer(0));
    while i != outer {
        i += step;
        walk.push(p.outer(i));
    }
    walk.push(p.inner(i));
    let step = inner.signum() * k;
    for _ in 0..inner.abs() {
        i += step;
        walk.push(p.inner(i));
    }
    Ok(walk)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DistanceProfile {
    pub j: usize,
    #[serde(rename = "p1")]
    pub len_p1: usize,
    #[serde(rename = "p2")]
    pub len_p2: usize,
    #[serde(rename = "p3")]
    pub len_p3: usize,
    #[serde(rename = "p4")]
    pub len_p4: usize,
    pub d12: usize,
    pub d34: usize,
    pub d: usize,
    pub guaranteed: bool,
}

pub fn closed_distance(p: &GpParams, j: i64) -> Result<DistanceProfile> {
    let dec = decompose(p, j)?;
    let [len_p1, len_p2, len_p3, len_p4] = PathType::ALL.map(|t| t.length(&dec, p.k()));
    let d12 = len_p1.min(len_p2);
    let d34 = len_p3.min(len_p4);
    Ok(DistanceProfile {
        j: dec.j,
        len_p1,
        len_p2,
        len_p3,
        len_p4,
        d12,
        d34,
        d: d12.min(d34),
        guaranteed: p.closed_form_guaranteed(),
    })
}

pub fn distance_table(p: &GpParams, j_lo: i64, j_hi: i64) -> Result<Vec<DistanceProfile>> {
    let lo = checked_index(p, j_lo)?;
    let hi = checked_index(p, j_hi)?;
    if lo > hi {
        return Err(Error::OutOfRange { j: j_lo, n: p.n() });
    }
    (lo..=hi).map(|j| closed_distance(p, j as i64)).collect()
}

/// All `j` in `[0, floor(n/2)]` attaining the maximum of `d(u_0, v_j)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct JStarResult {
    pub maximizers: Vec<usize>,
    pub value: usize,
}

impl JStarResult {
    fn from_distances(values: impl Iterator<Item = (usize, usize)>) -> Self {
        let mut best = JStarResult {
            maximizers: Vec::new(),
            value: 0,
        };
        for (j, d) in values {
            if d > best.value {
                best.value = d;
                best.maximizers.clear();
            }
            if d == best.value {
                best.maximizers.push(j);
            }
        }
        best
    }

    pub fn contains(&self, j: usize) -> bool {
        self.maximizers.binary_search(&j).is_ok()
    }
}

/// Maximizers of the closed-form distance. Refuses instances where the
/// closed form is not known to be exact.
pub fn jstar_scan(p: &GpParams) -> Result<JStarResult> {
    if !p.closed_form_guaranteed() {
        return Err(not_guaranteed(p));
    }
    let values = (0..=p.n() / 2).map(|j| {
        let dec = decompose(p, j as i64).expect("j within [0, n/2]");
        let d = PathType::ALL
            .iter()
            .map(|t| t.length(&dec, p.k()))
            .min()
            .unwrap();
        (j, d)
    });
    Ok(JStarResult::from_distances(values))
}

/// Maximizers of the BFS distance; valid for every instance.
pub fn jstar_scan_oracle(p: &GpParams) -> JStarResult {
    let dist = crate::graph::bfs_distances(p, p.outer(0));
    JStarResult::from_distances((0..=p.n() / 2).map(|j| (j, dist.get(p.inner(j as i64)) as usize)))
}

fn not_guaranteed(p: &GpParams) -> Error {
    Error::NotGuaranteed { n: p.n(), k: p.k() }
}

/// Brute-force check that the four-path minimum equals the BFS distance
/// `d(u_0, v_j)` for every `j` in `[0, n]`.
pub fn closed_form_exact(p: &GpParams) -> bool {
    let dist = crate::graph::bfs_distances(p, p.outer(0));
    (0..=p.n() as i64)
        .all(|j| closed_distance(p, j).expect("j within range").d == dist.get(p.inner(j)) as usize)
}

/// Landmarks of the search for `j*` in `[0, floor(n/2)]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SearchAnchors {
    /// Smallest index maximizing `d12`.
    pub peak_d12: usize,
    /// Index of `v_{n - (m+1)k}`, where `d34` bottoms out at `m + 2`; `m` is
    /// the quotient of `floor(n/2)` by `k`.
    pub d34_valley: usize,
}

pub fn search_anchors(p: &GpParams) -> SearchAnchors {
    let (n, k) = (p.n(), p.k());
    let half = n / 2;
    let mut peak = (0, 0);
    for j in 0..=half {
        let d12 = closed_distance(p, j as i64).expect("j within range").d12;
        if d12 > peak.1 {
            peak = (j, d12);
        }
    }
    let m = half / k;
    let valley = (n as i64 - ((m + 1) * k) as i64).rem_euclid(n as i64) as usize;
    SearchAnchors {
        peak_d12: peak.0,
        d34_valley: valley,
    }
}

/// One `j*` from the explicit subcase formulas, dispatched on the parity of
/// `k`, the parity of `n`, and `floor(n/2) = m*k + j`. Where two formulas are
/// offered the first is used.
pub fn jstar_case_analysis(p: &GpParams) -> Result<usize> {
    jstar_case(p).map(|(j, _)| j)
}

/// Like [`jstar_case_analysis`], also returning the subcase label.
pub fn jstar_case(p: &GpParams) -> Result<(usize, &'static str)> {
    if !p.closed_form_guaranteed() {
        return Err(not_guaranteed(p));
    }
    jstar_case_unchecked(p)
}

/// The subcase formulas without the coverage check. Needs `k >= 3` and
/// `floor(n/2) >= k`. Below the coverage bound the answer is only meaningful
/// where [`closed_form_exact`] holds.
pub fn jstar_case_unchecked(p: &GpParams) -> Result<(usize, &'static str)> {
    if p.k() < 3 || p.n() / 2 < p.k() {
        return Err(not_guaranteed(p));
    }
    let n = p.n() as i64;
    let k = p.k() as i64;
    let half = n / 2;
    let (m, j) = (half / k, half % k);
    let base = m * k;
    let prev = (m - 1) * k;

    let hit: Option<(i64, &'static str)> = match (k % 2 == 1, n % 2 == 0) {
        // k odd, n even
        (true, true) if 2 * j >= k - 1 => {
            let t = 2 * j - k;
            if j == (k - 1) / 2 {
                Some((base + (k - 1) / 2, "1.1.1a"))
            } else if j == (k + 1) / 2 {
                Some((base + (k + 1) / 2, "1.1.1b"))
            } else if 3 <= t && 2 * t <= k + 1 {
                Some((base + j, "1.1.1c"))
            } else if 2 * t > k + 1 {
                Some((base + j - (k - 1) / 2, "1.1.1d"))
            } else {
                None
            }
        }
        (true, true) => {
            if j == 0 || j == 1 {
                Some((prev + (k + 1) / 2, "1.1.2a"))
            } else if 4 <= 2 * j && 4 * j <= k + 1 {
                Some((prev + (k + 1) / 2 + j - 1, "1.1.2b"))
            } else if 4 * j > k + 1 {
                Some((prev + j + 1, "1.1.2c"))
            } else {
                None
            }
        }
        // k odd, n odd
        (true, false) if 2 * j >= k - 2 => {
            let t = 2 * j + 1 - k;
            if j == (k - 1) / 2 {
                Some((base + (k - 1) / 2, "1.2.1a"))
            } else if 2 <= t && 2 * t <= k + 1 {
                Some((base + j, "1.2.1b"))
            } else if 2 * t > k + 1 {
                Some((base + j - (k - 3) / 2, "1.2.1c"))
            } else {
                None
            }
        }
        (true, false) => {
            let t = 2 * j + 1;
            if j == 0 {
                Some((prev + (k + 1) / 2, "1.2.2a"))
            } else if 3 <= t && 2 * t <= k + 1 {
                Some((prev + (k + 1) / 2 + j - 1, "1.2.2b"))
            } else if 2 * t > k + 1 {
                Some((prev + j + 2, "1.2.2c"))
            } else {
                None
            }
        }
        // k even, n even
        (false, true) if 2 * j >= k - 2 => {
            let t = 2 * j - k;
            if j == (k - 2) / 2 {
                Some((base + (k - 2) / 2, "2.1.1a"))
            } else if j == k / 2 {
                Some((base + k / 2, "2.1.1b"))
            } else if 2 <= t && 2 * t <= k {
                Some((base + j, "2.1.1c"))
            } else if 2 * t >= k + 2 {
                Some((base + j - k / 2 + 1, "2.1.1d"))
            } else {
                None
            }
        }
        (false, true) => {
            if j == 0 || j == 1 {
                Some((prev + k / 2, "2.1.2a"))
            } else if 4 <= 2 * j && 4 * j <= k {
                Some((prev + k / 2 + j - 1, "2.1.2b"))
            } else if 4 * j >= k + 2 {
                Some((prev + j + 1, "2.1.2c"))
            } else {
                None
            }
        }
        // k even, n odd
        (false, false) if 2 * j >= k - 3 => {
            let t = 2 * j + 1 - k;
            if j == (k - 2) / 2 {
                Some((base + (k - 2) / 2, "2.2.1a"))
            } else if j == k / 2 {
                Some((base + k / 2, "2.2.1b"))
            } else if 3 <= t && 2 * t <= k {
                Some((base + j, "2.2.1c"))
            } else if 2 * t >= k + 2 {
                Some((base + j + 1 - k / 2, "2.2.1d"))
            } else {
                None
            }
        }
        (false, false) => {
            let t = 2 * j + 1;
            if j == 0 {
                Some((prev + k / 2, "2.2.2a"))
            } else if 3 <= t && 2 * t <= k {
                Some((prev + k / 2 + j, "2.2.2b"))
            } else if 2 * t >= k + 2 {
                Some((prev + j + 2, "2.2.2c"))
            } else {
                None
            }
        }
    };

    match hit {
        Some((js, label)) if (0..=half).contains(&js) => Ok((js as usize, label)),
        _ => Err(Error::InternalCaseGap {
            n: p.n(),
            k: p.k(),
            matched: 0,
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::bfs_distances;
    use proptest::prelude::*;

    fn gp(n: i64, k: i64) -> GpParams {
        GpParams::new(n, k).unwrap()
    }

    fn dec(m0: usize, j0: usize, m1: usize, j1: usize, j: usize) -> Decomposition {
        Decomposition { j, m0, j0, m1, j1 }
    }

    #[test]
    fn decompose_examples() {
        assert_eq!(decompose(&gp(50, 9), 23).unwrap(), dec(2, 5, 3, 0, 23));
        assert_eq!(decompose(&gp(6, 2), 3).unwrap(), dec(1, 1, 1, 1, 3));
        assert_eq!(decompose(&gp(50, 9), 0).unwrap(), dec(0, 0, 5, 5, 0));
        assert_eq!(decompose(&gp(50, 9), 50).unwrap(), dec(5, 5, 0, 0, 50));
        assert_eq!(
            decompose(&gp(50, 9), 51),
            Err(Error::OutOfRange { j: 51, n: 50 })
        );
        assert!(decompose(&gp(50, 9), -1).is_err());
    }

    #[test]
    fn path_length_examples() {
        let p = gp(50, 9);
        assert_eq!(path_length(&p, 23, PathType::P1).unwrap(), 8);
        assert_eq!(path_length(&p, 23, PathType::P3).unwrap(), 4);
        assert_eq!(path_length(&gp(6, 2), 3, PathType::P2).unwrap(), 4);
    }

    #[test]
    fn walks_in_gp_6_2() {
        let p = gp(6, 2);
        let w = |t| path_walk(&p, 3, t).unwrap();
        assert_eq!(
            w(PathType::P1),
            vec![p.outer(0), p.outer(1), p.inner(1), p.inner(3)]
        );
        assert_eq!(
            w(PathType::P2),
            vec![p.outer(0), p.outer(5), p.inner(5), p.inner(1), p.inner(3)]
        );
        assert_eq!(
            w(PathType::P3),
            vec![p.outer(0), p.outer(5), p.inner(5), p.inner(3)]
        );
        assert_eq!(
            w(PathType::P4),
            vec![p.outer(0), p.outer(1), p.inner(1), p.inner(5), p.inner(3)]
        );
    }

    #[test]
    fn closed_distance_examples() {
        let r = closed_distance(&gp(42, 9), 14).unwrap();
        assert_eq!((r.d12, r.d34, r.d), (7, 5, 5));
        assert!(!r.guaranteed);
        assert!(closed_distance(&gp(50, 9), 14).unwrap().guaranteed);
        let r = closed_distance(&gp(56, 10), 26).unwrap();
        assert_eq!((r.d12, r.d34, r.d), (8, 4, 4));
        for p in [gp(3, 1), gp(50, 9), gp(20, 9)] {
            assert_eq!(closed_distance(&p, 0).unwrap().d, 1);
        }
        assert!(!closed_distance(&gp(20, 9), 3).unwrap().guaranteed);
        assert!(!closed_distance(&gp(200, 2), 3).unwrap().guaranteed);
    }

    #[test]
    fn guaranteed_thresholds() {
        assert!(!gp(7, 3).closed_form_guaranteed());
        assert!(gp(8, 3).closed_form_guaranteed());
        assert!(!gp(9, 4).closed_form_guaranteed());
        assert!(gp(10, 4).closed_form_guaranteed());
        assert!(!gp(14, 5).closed_form_guaranteed());
        assert!(gp(15, 5).closed_form_guaranteed());
        assert!(!gp(17, 6).closed_form_guaranteed());
        assert!(gp(18, 6).closed_form_guaranteed());
        assert!(!gp(44, 9).closed_form_guaranteed());
        assert!(gp(45, 9).closed_form_guaranteed());
    }

    #[test]
    fn table_examples() {
        let rows = |n, k, a, b| {
            let t = distance_table(&gp(n, k), a, b).unwrap();
            (
                t.iter().map(|r| r.d12).collect::<Vec<_>>(),
                t.iter().map(|r| r.d34).collect::<Vec<_>>(),
            )
        };
        assert_eq!(
            rows(51, 9, 20, 25),
            (vec![5, 6, 7, 8, 7, 6], vec![8, 7, 6, 5, 4, 5])
        );
        assert_eq!(
            rows(43, 9, 12, 17),
            (vec![5, 6, 7, 6, 5, 4], vec![8, 7, 6, 5, 4, 5])
        );
        assert_eq!(
            rows(45, 10, 12, 18),
            (vec![4, 5, 6, 7, 7, 6, 5], vec![7, 6, 5, 4, 5, 6, 7])
        );
        assert!(distance_table(&gp(45, 10), 5, 4).is_err());
        assert!(distance_table(&gp(45, 10), 0, 46).is_err());
    }

    #[test]
    fn jstar_scan_examples() {
        let r = jstar_scan(&gp(50, 9)).unwrap();
        assert!(r.contains(21) && r.contains(25));
        assert_eq!(r.value, 6);
        // GP(42,9) and GP(44,10) are below the bound; use the oracle scan.
        let r = jstar_scan_oracle(&gp(42, 9));
        assert!(r.contains(13));
        assert_eq!(r.value, 6);
        let r = jstar_scan_oracle(&gp(44, 10));
        assert!(r.contains(16) && r.contains(17));
        assert_eq!(r.value, 6);
        assert!(jstar_scan(&gp(44, 10)).is_err());
        assert_eq!(
            jstar_scan(&gp(20, 9)),
            Err(Error::NotGuaranteed { n: 20, k: 9 })
        );
    }

    #[test]
    fn oracle_scan_agrees_when_guaranteed() {
        for (n, k) in [(50, 9), (51, 9), (57, 10), (56, 10), (8, 3), (10, 4)] {
            let p = gp(n, k);
            assert_eq!(jstar_scan(&p).unwrap(), jstar_scan_oracle(&p));
        }
    }

    #[test]
    fn case_analysis_examples() {
        // 2*7 - 9 = 5 = (k+1)/2 selects the "m*k + j" subcase, i.e. 25.
        assert_eq!(jstar_case(&gp(50, 9)).unwrap(), (25, "1.1.1c"));
        assert_eq!(jstar_case_analysis(&gp(57, 10)).unwrap(), 24);
        assert!(jstar_case_analysis(&gp(7, 3)).is_err());
        assert!(jstar_case_analysis(&gp(42, 9)).is_err());
    }

    #[test]
    fn below_bound_table_instances() {
        // These illustrate the search but sit below the coverage bound, where
        // exactness has to be checked by brute force first.
        for (n, k, expected) in [(42, 9, 13), (43, 9, 14), (44, 10, 16), (45, 10, 17)] {
            let p = gp(n, k);
            assert!(!p.closed_form_guaranteed());
            assert!(closed_form_exact(&p));
            let (j, _) = jstar_case_unchecked(&p).unwrap();
            assert_eq!(j, expected);
            assert!(jstar_scan_oracle(&p).contains(j));
        }
        assert!(!closed_form_exact(&gp(19, 8)));
        assert!(jstar_case_unchecked(&gp(7, 2)).is_err());
    }

    #[test]
    fn anchors_match_table_captions() {
        for (n, k, peak, valley) in [
            (50, 9, 23, 23),
            (42, 9, 14, 15),
            (51, 9, 23, 24),
            (43, 9, 14, 16),
            (56, 10, 25, 26),
            (44, 10, 15, 14),
            (57, 10, 25, 27),
            (45, 10, 15, 15),
        ] {
            let a = search_anchors(&gp(n, k));
            assert_eq!((a.peak_d12, a.d34_valley), (peak, valley), "GP({n},{k})");
        }
    }

    fn params() -> impl Strategy<Value = GpParams> {
        (3i64..90)
            .prop_flat_map(|n| (Just(n), 1..=((n - 1) / 2)))
            .prop_map(|(n, k)| gp(n, k))
    }

    proptest! {
        #[test]
        fn decomposition_invariants(p in params(), j in 0i64..90) {
            let j = j % (p.n() as i64 + 1);
            let d = decompose(&p, j).unwrap();
            prop_assert_eq!(d.m0 * p.k() + d.j0, d.j);
            prop_assert_eq!(d.m1 * p.k() + d.j1, p.n() - d.j);
            prop_assert!(d.j0 < p.k() && d.j1 < p.k());
        }

        #[test]
        fn every_length_is_a_real_walk(p in params(), j in 0i64..90) {
            let j = j % (p.n() as i64 + 1);
            let oracle = bfs_distances(&p, p.outer(0)).get(p.inner(j)) as usize;
            let profile = closed_distance(&p, j).unwrap();
            prop_assert!(oracle <= profile.d);
            for t in PathType::ALL {
                let walk = path_walk(&p, j, t).unwrap();
                prop_assert_eq!(walk.len() - 1, path_length(&p, j, t).unwrap());
                prop_assert_eq!(walk[0], p.outer(0));
                prop_assert_eq!(*walk.last().unwrap(), p.inner(j));
                for pair in walk.windows(2) {
                    prop_assert!(p.is_edge(pair[0], pair[1]));
                }
            }
        }

        #[test]
        fn reflection_swaps_sides(p in params(), j in 0i64..90) {
            let j = j % (p.n() as i64 + 1);
            let a = closed_distance(&p, j).unwrap();
            let b = closed_distance(&p, p.n() as i64 - j).unwrap();
            prop_assert_eq!((a.len_p1, a.len_p2), (b.len_p3, b.len_p4));
            prop_assert_eq!((a.d12, a.d34), (b.d34, b.d12));
            prop_assert_eq!(a.d, b.d);
        }

        #[test]
        fn p1_steps_by_one_per_chord(p in params(), j in 0i64..90) {
            let j = j % (p.n() as i64 + 1);
            let next = j + p.k() as i64;
            prop_assume!(next <= p.n() as i64);
            let a = path_length(&p, j, PathType::P1).unwrap();
            let b = path_length(&p, next, PathType::P1).unwrap();
            prop_assert_eq!(b, a + 1);
        }
    }
}

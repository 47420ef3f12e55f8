//! Constant-time diameters of GP(n,k).
//!
//! For large `n` relative to `k` the diameter is one of eight closed forms,
//! chosen by the parity of `k`, the parity of `n`, and the decomposition
//! `floor(n/2) = m*k + j`. A handful of small-`k` values are tabulated
//! separately; everything else falls back to BFS.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{oracle_diameter, GpParams};

/// `floor(n/2) = m*k + j` with `0 <= j < k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HalfDecomposition {
    pub half: usize,
    pub m: usize,
    pub j: usize,
}

pub fn half_decompose(p: &GpParams) -> HalfDecomposition {
    let half = p.n() / 2;
    HalfDecomposition {
        half,
        m: half / p.k(),
        j: half % p.k(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum DiameterMethod {
    TheoremCase1,
    TheoremCase2,
    TheoremCase3,
    TheoremCase4,
    TheoremCase5,
    TheoremCase6,
    TheoremCase7,
    TheoremCase8,
    SmallK,
    BfsFallback,
}

impl DiameterMethod {
    fn theorem_case(item: u8) -> Self {
        match item {
            1 => Self::TheoremCase1,
            2 => Self::TheoremCase2,
            3 => Self::TheoremCase3,
            4 => Self::TheoremCase4,
            5 => Self::TheoremCase5,
            6 => Self::TheoremCase6,
            7 => Self::TheoremCase7,
            8 => Self::TheoremCase8,
            _ => unreachable!("theorem items are numbered 1..=8"),
        }
    }
}

impl fmt::Display for DiameterMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DiameterResult {
    #[serde(rename = "diameter")]
    pub value: usize,
    pub method: DiameterMethod,
    pub case_detail: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Strategy {
    /// Tabulated small-k values, then the theorem, then BFS.
    #[default]
    Auto,
    /// Closed forms only (tabulated values or the theorem); errors elsewhere.
    TheoremOnly,
    OracleOnly,
}

struct Subcase {
    item: u8,
    tag: &'static str,
    applies: fn(Shape) -> bool,
    value: fn(Shape) -> i64,
}

#[derive(Clone, Copy)]
struct Shape {
    k: i64,
    n_even: bool,
    m: i64,
    j: i64,
}

impl Shape {
    fn k_odd(self) -> bool {
        self.k % 2 == 1
    }
}

// Fractional bounds are compared after doubling both sides.
const SUBCASES: &[Subcase] = &[
    Subcase {
        item: 1,
        tag: "j = (k-1)/2 or j = (k+1)/2",
        applies: |s| item1(s) && (s.j == (s.k - 1) / 2 || s.j == (s.k + 1) / 2),
        value: |s| s.m + 2 + s.j,
    },
    Subcase {
        item: 1,
        tag: "3 <= 2j-k <= (k+1)/2",
        applies: |s| item1(s) && 3 <= 2 * s.j - s.k && 2 * (2 * s.j - s.k) <= s.k + 1,
        value: |s| s.m + 3 + s.k - s.j,
    },
    Subcase {
        item: 1,
        tag: "2j-k > (k+1)/2",
        applies: |s| item1(s) && 2 * (2 * s.j - s.k) > s.k + 1,
        value: |s| s.m + 2 + s.j - (s.k - 1) / 2,
    },
    Subcase {
        item: 2,
        tag: "j = 0 or j = 1",
        applies: |s| item2(s) && (s.j == 0 || s.j == 1),
        value: |s| s.m + 1 + (s.k + 1) / 2,
    },
    Subcase {
        item: 2,
        tag: "4 <= 2j <= (k+1)/2",
        applies: |s| item2(s) && 4 <= 2 * s.j && 4 * s.j <= s.k + 1,
        value: |s| s.m + 3 + (s.k - 1) / 2 - s.j,
    },
    Subcase {
        item: 2,
        tag: "2j > (k+1)/2",
        applies: |s| item2(s) && 4 * s.j > s.k + 1,
        value: |s| s.m + 2 + s.j,
    },
    Subcase {
        item: 3,
        tag: "j = (k-1)/2",
        applies: |s| item3(s) && s.j == (s.k - 1) / 2,
        value: |s| s.m + 2 + (s.k - 1) / 2,
    },
    Subcase {
        item: 3,
        tag: "2 <= 2j+1-k <= (k+1)/2",
        applies: |s| item3(s) && 2 <= 2 * s.j + 1 - s.k && 2 * (2 * s.j + 1 - s.k) <= s.k + 1,
        value: |s| s.m + 2 + s.k - s.j,
    },
    Subcase {
        item: 3,
        tag: "2j+1-k > (k+1)/2",
        applies: |s| item3(s) && 2 * (2 * s.j + 1 - s.k) > s.k + 1,
        value: |s| s.m + 2 + s.j - (s.k - 1) / 2,
    },
    Subcase {
        item: 4,
        tag: "1 <= 2j+1 <= (k+1)/2",
        applies: |s| item4(s) && 1 <= 2 * s.j + 1 && 2 * (2 * s.j + 1) <= s.k + 1,
        value: |s| s.m + 2 + (s.k - 1) / 2 - s.j,
    },
    Subcase {
        item: 4,
        tag: "2j+1 > (k+1)/2",
        applies: |s| item4(s) && 2 * (2 * s.j + 1) > s.k + 1,
        value: |s| s.m + 2 + s.j,
    },
    Subcase {
        item: 5,
        tag: "j = (k-2)/2 or j = k/2",
        applies: |s| item5(s) && (s.j == (s.k - 2) / 2 || s.j == s.k / 2),
        value: |s| s.m + 2 + s.j,
    },
    Subcase {
        item: 5,
        tag: "2 <= 2j-k <= k/2",
        applies: |s| item5(s) && 2 <= 2 * s.j - s.k && 2 * (2 * s.j - s.k) <= s.k,
        value: |s| s.m + 3 + s.k - s.j,
    },
    Subcase {
        item: 5,
        tag: "2j-k >= (k+2)/2",
        applies: |s| item5(s) && 2 * (2 * s.j - s.k) >= s.k + 2,
        value: |s| s.m + 2 + s.j - s.k / 2,
    },
    Subcase {
        item: 6,
        tag: "j = 0",
        applies: |s| item6(s) && s.j == 0,
        value: |s| s.m + 1 + s.k / 2,
    },
    Subcase {
        item: 6,
        tag: "2 <= 2j <= k/2",
        applies: |s| item6(s) && 2 <= 2 * s.j && 4 * s.j <= s.k,
        value: |s| s.m + 2 + s.k / 2 - s.j,
    },
    Subcase {
        item: 6,
        tag: "2j >= (k+2)/2",
        applies: |s| item6(s) && 4 * s.j >= s.k + 2,
        value: |s| s.m + 2 + s.j,
    },
    Subcase {
        item: 7,
        tag: "j = (k-2)/2",
        applies: |s| item7(s) && s.j == (s.k - 2) / 2,
        value: |s| s.m + 2 + (s.k - 2) / 2,
    },
    Subcase {
        item: 7,
        tag: "1 <= 2j+1-k <= k/2",
        applies: |s| item7(s) && 1 <= 2 * s.j + 1 - s.k && 2 * (2 * s.j + 1 - s.k) <= s.k,
        value: |s| s.m + 2 + s.k - s.j,
    },
    Subcase {
        item: 7,
        tag: "2j+1-k >= (k+2)/2",
        applies: |s| item7(s) && 2 * (2 * s.j + 1 - s.k) >= s.k + 2,
        value: |s| s.m + 3 + s.j - s.k / 2,
    },
    Subcase {
        item: 8,
        tag: "j = 0",
        applies: |s| item8(s) && s.j == 0,
        value: |s| s.m + 1 + s.k / 2,
    },
    Subcase {
        item: 8,
        tag: "3 <= 2j+1 <= k/2",
        applies: |s| item8(s) && 3 <= 2 * s.j + 1 && 2 * (2 * s.j + 1) <= s.k,
        value: |s| s.m + 2 + s.k / 2 - s.j,
    },
    Subcase {
        item: 8,
        tag: "2j+1 >= (k+2)/2",
        applies: |s| item8(s) && 2 * (2 * s.j + 1) >= s.k + 2,
        value: |s| s.m + 2 + s.j,
    },
];

// Item domains. The large-j items include their lower bound.
fn item1(s: Shape) -> bool {
    s.k_odd() && s.n_even && 2 * s.j >= s.k - 1
}
fn item2(s: Shape) -> bool {
    s.k_odd() && s.n_even && 2 * s.j < s.k - 1
}
fn item3(s: Shape) -> bool {
    s.k_odd() && !s.n_even && 2 * s.j >= s.k - 2
}
fn item4(s: Shape) -> bool {
    s.k_odd() && !s.n_even && 2 * s.j < s.k - 2
}
fn item5(s: Shape) -> bool {
    !s.k_odd() && s.n_even && 2 * s.j >= s.k - 2
}
fn item6(s: Shape) -> bool {
    !s.k_odd() && s.n_even && 2 * s.j < s.k - 2
}
fn item7(s: Shape) -> bool {
    !s.k_odd() && !s.n_even && 2 * s.j >= s.k - 3
}
fn item8(s: Shape) -> bool {
    !s.k_odd() && !s.n_even && 2 * s.j < s.k - 3
}

fn shape(p: &GpParams) -> Shape {
    let h = half_decompose(p);
    Shape {
        k: p.k() as i64,
        n_even: p.n().is_multiple_of(2),
        m: h.m as i64,
        j: h.j as i64,
    }
}

/// Every theorem subcase whose conditions hold for `p`, as `(item, tag)`.
/// Exactly one should match any covered instance.
pub fn matching_subcases(p: &GpParams) -> Vec<(u8, &'static str)> {
    let s = shape(p);
    SUBCASES
        .iter()
        .filter(|c| (c.applies)(s))
        .map(|c| (c.item, c.tag))
        .collect()
}

pub fn diameter_theorem(p: &GpParams) -> Result<DiameterResult> {
    if !p.closed_form_guaranteed() {
        return Err(Error::NotGuaranteed { n: p.n(), k: p.k() });
    }
    diameter_theorem_unchecked(p)
}

/// Evaluates the theorem's case table for any `k >= 3`, without checking
/// that `n` is large enough for the result to be the true diameter.
pub fn diameter_theorem_unchecked(p: &GpParams) -> Result<DiameterResult> {
    if p.k() < 3 {
        return Err(Error::NotGuaranteed { n: p.n(), k: p.k() });
    }
    let s = shape(p);
    let hits: Vec<&Subcase> = SUBCASES.iter().filter(|c| (c.applies)(s)).collect();
    match hits.as_slice() {
        [case] => Ok(DiameterResult {
            value: (case.value)(s) as usize,
            method: DiameterMethod::theorem_case(case.item),
            case_detail: format!("item {}: {}", case.item, case.tag),
        }),
        other => Err(Error::InternalCaseGap {
            n: p.n(),
            k: p.k(),
            matched: other.len(),
        }),
    }
}

/// Tabulated values for small `k`: the GP(n,2) formula and a few constants
/// for `k` in 3..=6 below the theorem's range.
pub fn diameter_small_k(p: &GpParams) -> Option<DiameterResult> {
    let (n, k) = (p.n(), p.k());
    let constant = |value: usize| {
        Some(DiameterResult {
            value,
            method: DiameterMethod::SmallK,
            case_detail: format!("tabulated GP({n},{k})"),
        })
    };
    match (n, k) {
        (5, 2) => constant(2),
        (6, 2) => constant(4),
        (7, 2) => constant(3),
        (n, 2) => {
            let m = n / 4;
            let (value, form) = match n % 4 {
                0 => (m + 2, "n = 4m: m+2"),
                1 => (m + 2, "n = 4m+1: m+2"),
                2 => (m + 3, "n = 4m+2: m+3"),
                _ => (m + 3, "n = 4m+3: m+3"),
            };
            Some(DiameterResult {
                value,
                method: DiameterMethod::SmallK,
                case_detail: format!("k = 2, {form}"),
            })
        }
        (7, 3) => constant(3),
        (9, 4) => constant(4),
        (11, 5) | (14, 5) => constant(5),
        (12, 5) | (13, 5) => constant(4),
        (13..=17, 6) => constant(5),
        _ => None,
    }
}

fn bfs_result(p: &GpParams) -> DiameterResult {
    DiameterResult {
        value: oracle_diameter(p) as usize,
        method: DiameterMethod::BfsFallback,
        case_detail: "bfs".to_owned(),
    }
}

pub fn diameter(p: &GpParams, strategy: Strategy) -> Result<DiameterResult> {
    match strategy {
        Strategy::OracleOnly => Ok(bfs_result(p)),
        Strategy::TheoremOnly => match diameter_small_k(p) {
            Some(r) => Ok(r),
            None => diameter_theorem(p),
        },
        Strategy::Auto => {
            if let Some(r) = diameter_small_k(p) {
                return Ok(r);
            }
            match diameter_theorem(p) {
                Err(Error::NotGuaranteed { .. }) => Ok(bfs_result(p)),
                other => other,
            }
        }
    }
}

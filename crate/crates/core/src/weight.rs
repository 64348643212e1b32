//! Edge weights, graph weight, and the linear lower bound on saturation
//! numbers that the weight implies.
//!
//! For an edge `uv` with `d(u) <= d(v)`,
//! `wt(uv) = 2|N(u) ∩ N(v)| + |N(v) - N(u)|`, and `wt(H)` is the minimum
//! over all edges (infinite for an edgeless graph). Every `H` satisfies
//! `sat(H, n) >= (wt - 1)/2 * n - (wt^2 - 4 wt + 5)/2` once `wt >= 2`.

use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::Rational;

/// A positive integer or infinity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Weight {
    Finite(u32),
    Infinite,
}

impl Weight {
    pub fn finite(self) -> Option<u32> {
        match self {
            Weight::Finite(w) => Some(w),
            Weight::Infinite => None,
        }
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Weight::Finite(w) => write!(f, "{w}"),
            Weight::Infinite => f.write_str("inf"),
        }
    }
}

/// A saturation slope (`satlim`): an exact rational or infinity.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SatLimit {
    Finite(Rational),
    Infinite,
}

impl SatLimit {
    /// `(wt - 1)/2`, the slope a sharp graph of this weight attains.
    pub fn from_weight(wt: Weight) -> Self {
        match wt {
            Weight::Finite(w) => SatLimit::Finite(Rational::new(i64::from(w) - 1, 2)),
            Weight::Infinite => SatLimit::Infinite,
        }
    }
}

/// Always `p/q`, even for integers.
impl fmt::Display for SatLimit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SatLimit::Finite(r) => write!(f, "{}/{}", r.numer(), r.denom()),
            SatLimit::Infinite => f.write_str("inf"),
        }
    }
}

/// `wt(uv)` for an edge of `h`.
pub fn edge_weight(h: &Graph, u: usize, v: usize) -> Result<u32> {
    h.check_vertex(u)?;
    h.check_vertex(v)?;
    if !h.has_edge(u, v) {
        return Err(Error::NotAnEdge(u, v));
    }
    let (lo, hi) = if h.deg(u) <= h.deg(v) { (u, v) } else { (v, u) };
    let common = h.common_neighbor_count(lo, hi);
    // N(hi) - N(lo)
    let only_hi: usize = h.row(hi).iter().zip(h.row(lo)).map(|(a, b)| (a & !b).count_ones() as usize).sum();
    Ok((2 * common + only_hi) as u32)
}

/// Per-edge weights of a graph together with its minimum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightReport {
    /// `((u, v), wt(uv))` for every edge, `u < v`, in lexicographic order.
    pub edge_weights: Vec<((usize, usize), u32)>,
    pub graph_weight: Weight,
    /// The lexicographically first edge attaining the minimum.
    pub min_edge: Option<(usize, usize)>,
}

pub fn weight_report(h: &Graph) -> WeightReport {
    let edge_weights: Vec<_> =
        h.edges().map(|(u, v)| ((u, v), edge_weight(h, u, v).expect("listed edges exist"))).collect();
    let mut min_edge = None;
    let mut graph_weight = Weight::Infinite;
    for &(e, w) in &edge_weights {
        if Weight::Finite(w) < graph_weight {
            graph_weight = Weight::Finite(w);
            min_edge = Some(e);
        }
    }
    WeightReport { edge_weights, graph_weight, min_edge }
}

/// `wt(H)`: the minimum edge weight, infinite when `h` has no edges.
pub fn graph_weight(h: &Graph) -> Weight {
    h.edges()
        .map(|(u, v)| Weight::Finite(edge_weight(h, u, v).expect("listed edges exist")))
        .min()
        .unwrap_or(Weight::Infinite)
}

/// `slope * n - constant`, both exact halves.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LowerBound {
    pub weight: u32,
    pub slope: Rational,
    pub constant: Rational,
}

impl LowerBound {
    pub fn from_weight(weight: u32) -> Self {
        assert!(weight >= 1, "edge weights are positive");
        if weight == 1 {
            return LowerBound { weight, slope: Rational::from_integer(0), constant: Rational::from_integer(0) };
        }
        let w = i64::from(weight);
        LowerBound { weight, slope: Rational::new(w - 1, 2), constant: Rational::new(w * w - 4 * w + 5, 2) }
    }

    pub fn value_at(&self, n: usize) -> Rational {
        self.slope * Rational::from_integer(n as i64) - self.constant
    }

    /// Smallest integer at least `max(0, value_at(n))`.
    pub fn integer_value_at(&self, n: usize) -> u64 {
        let v = self.value_at(n);
        if v <= Rational::from_integer(0) {
            0
        } else {
            v.ceil().to_integer() as u64
        }
    }
}

/// Lower bound on `sat(H, n)`, or the signal that no `H`-saturated graph
/// exists.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SatLowerBound {
    /// `H` is edgeless; `sat(H, n)` is infinite.
    Infinite,
    Linear(LowerBound),
}

pub fn lower_bound(h: &Graph) -> SatLowerBound {
    match graph_weight(h) {
        Weight::Infinite => SatLowerBound::Infinite,
        Weight::Finite(w) => SatLowerBound::Linear(LowerBound::from_weight(w)),
    }
}

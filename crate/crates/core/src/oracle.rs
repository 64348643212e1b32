//! Exact saturation numbers for small orders.
//!
//! Graphs are enumerated level by level in the number of edges: level
//! `m + 1` is every one-edge extension of level `m`, deduplicated by
//! canonical form and sorted by it. When searching for `sat(H, n)` only
//! `H`-free graphs are kept, which loses nothing: deleting an edge of an
//! `H`-free graph leaves it `H`-free, so every `H`-free graph has an
//! `H`-free parent one level down. The first saturated graph in the first
//! level that has one is the witness.
//!
//! The per-level work is handed to an [`Executor`]. Results only depend on
//! the level contents, never on how the work was split, so every executor
//! returns the same value and witness.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::canon::{canonical_form, graph_from_form};
use crate::embed::contains_subgraph;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::saturation::{is_saturated, verify_saturation, SaturationVerdict};
use crate::weight::{graph_weight, SatLimit};

/// Largest order the enumerator accepts.
pub const ENUM_CAP: usize = 8;

/// Runs the per-graph work of one enumeration level.
pub trait Executor {
    /// `f` applied to every item, results in item order.
    fn map<T, F>(&self, items: &[Graph], f: F) -> Vec<T>
    where
        T: Send,
        F: Fn(&Graph) -> T + Sync + Send;

    /// Index of the first item satisfying `pred`.
    fn find_first<F>(&self, items: &[Graph], pred: F) -> Option<usize>
    where
        F: Fn(&Graph) -> bool + Sync + Send,
    {
        self.map(items, pred).iter().position(|&hit| hit)
    }
}

/// Runs everything on the calling thread.
#[derive(Clone, Copy, Debug, Default)]
pub struct Serial;

impl Executor for Serial {
    fn map<T, F>(&self, items: &[Graph], f: F) -> Vec<T>
    where
        T: Send,
        F: Fn(&Graph) -> T + Sync + Send,
    {
        items.iter().map(f).collect()
    }

    fn find_first<F>(&self, items: &[Graph], pred: F) -> Option<usize>
    where
        F: Fn(&Graph) -> bool + Sync + Send,
    {
        items.iter().position(pred)
    }
}

fn check_cap(n: usize) -> Result<()> {
    if n > ENUM_CAP {
        Err(Error::OverCap { what: "graph enumeration", n, cap: ENUM_CAP })
    } else {
        Ok(())
    }
}

/// One-edge extensions of `level` accepted by `keep(parent, x, y, child)`,
/// deduplicated and in canonical-form order.
fn next_level<E, K>(exec: &E, level: &[Graph], keep: K) -> Vec<Graph>
where
    E: Executor,
    K: Fn(&Graph, usize, usize, &Graph) -> bool + Sync + Send,
{
    let forms = exec.map(level, |g| {
        let mut out = BTreeSet::new();
        for (x, y) in g.non_edges() {
            let child = g.with_edge(x, y).expect("non-edge");
            if keep(g, x, y, &child) {
                out.insert(canonical_form(&child).expect("order within cap"));
            }
        }
        out
    });
    let merged: BTreeSet<Vec<u8>> = forms.into_iter().flatten().collect();
    merged.iter().map(|f| graph_from_form(f).expect("well-formed form")).collect()
}

/// One canonical representative per isomorphism class of graphs with `n`
/// vertices and `m` edges, in canonical-form order.
pub fn enumerate_graphs(n: usize, m: usize) -> Result<Vec<Graph>> {
    enumerate_graphs_with(&Serial, n, m)
}

pub fn enumerate_graphs_with<E: Executor>(exec: &E, n: usize, m: usize) -> Result<Vec<Graph>> {
    check_cap(n)?;
    let max = n * n.saturating_sub(1) / 2;
    if m > max {
        return Err(Error::invalid(alloc::format!("a graph on {n} vertices has at most {max} edges")));
    }
    let mut level = vec![Graph::empty(n)];
    for _ in 0..m {
        level = next_level(exec, &level, |_, _, _, _| true);
    }
    Ok(level)
}

/// A saturation number: a count of edges or infinity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SatValue {
    Finite(usize),
    Infinite,
}

impl SatValue {
    pub fn finite(self) -> Option<usize> {
        match self {
            SatValue::Finite(v) => Some(v),
            SatValue::Infinite => None,
        }
    }
}

impl fmt::Display for SatValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SatValue::Finite(v) => write!(f, "{v}"),
            SatValue::Infinite => f.write_str("inf"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SatResult {
    pub h: Graph,
    pub n: usize,
    pub value: SatValue,
    /// A minimum saturated graph, canonically labelled; `None` when the
    /// value is infinite.
    pub witness: Option<Graph>,
    /// Full verdict, with certificates, for the witness.
    pub verdict: Option<SaturationVerdict>,
}

pub fn sat_exact(h: &Graph, n: usize) -> Result<SatResult> {
    sat_exact_with(&Serial, h, n)
}

pub fn sat_exact_with<E: Executor>(exec: &E, h: &Graph, n: usize) -> Result<SatResult> {
    if h.size() == 0 {
        return Ok(SatResult { h: h.clone(), n, value: SatValue::Infinite, witness: None, verdict: None });
    }
    if n < h.order() {
        return Err(Error::HostTooSmall { host: n, forbidden: h.order() });
    }
    check_cap(n)?;
    let max = n * (n - 1) / 2;
    let mut level = vec![Graph::empty(n)];
    for m in 0..=max {
        if level.is_empty() {
            break;
        }
        let hit = exec.find_first(&level, |g| is_saturated(g, h).expect("checked forbidden graph"));
        if let Some(i) = hit {
            let witness = level.swap_remove(i);
            debug_assert_eq!(witness.size(), m);
            let verdict = verify_saturation(&witness, h)?;
            if !verdict.is_saturated() {
                return Err(Error::Internal("fast and certified saturation checks disagree"));
            }
            return Ok(SatResult {
                h: h.clone(),
                n,
                value: SatValue::Finite(m),
                witness: Some(witness),
                verdict: Some(verdict),
            });
        }
        if m < max {
            level = next_level(exec, &level, |_, x, y, child| contains_subgraph(child, h, Some((x, y))).is_none());
        }
    }
    // Maximal H-free graphs are saturated, so the loop always returns.
    Err(Error::Internal("no saturated graph found for a forbidden graph with an edge"))
}

/// Exact saturation numbers over a range of orders next to the slope the
/// weight predicts. Reports data only.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SharpnessProbe {
    pub h: Graph,
    /// `(n, sat(H, n))` for consecutive `n`.
    pub points: Vec<(usize, SatValue)>,
    /// `sat(H, n + 1) - sat(H, n)`; empty when the values are infinite.
    pub successive_slopes: Vec<i64>,
    pub weight_slope: SatLimit,
}

pub fn sharpness_probe(h: &Graph, n_lo: usize, n_hi: usize) -> Result<SharpnessProbe> {
    sharpness_probe_with(&Serial, h, n_lo, n_hi)
}

pub fn sharpness_probe_with<E: Executor>(exec: &E, h: &Graph, n_lo: usize, n_hi: usize) -> Result<SharpnessProbe> {
    if n_lo > n_hi {
        return Err(Error::invalid(alloc::format!("empty range {n_lo}..={n_hi}")));
    }
    check_cap(n_hi)?;
    let points = (n_lo..=n_hi).map(|n| sat_exact_with(exec, h, n).map(|r| (n, r.value))).collect::<Result<Vec<_>>>()?;
    let successive_slopes = points
        .windows(2)
        .filter_map(|w| match (w[0].1, w[1].1) {
            (SatValue::Finite(a), SatValue::Finite(b)) => Some(b as i64 - a as i64),
            _ => None,
        })
        .collect();
    Ok(SharpnessProbe { h: h.clone(), points, successive_slopes, weight_slope: SatLimit::from_weight(graph_weight(h)) })
}

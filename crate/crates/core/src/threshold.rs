//! Threshold graphs as isolated/dominating build sequences.
//!
//! A threshold graph is built from `K1` by repeatedly appending a vertex
//! that is either isolated or adjacent to everything so far. Along such a
//! sequence the graph weight and the saturation slope can be tracked
//! without looking at the graph: appending an isolated vertex changes
//! neither; appending a dominating vertex either shifts the weight by two
//! (and the slope by one) or, when an isolated vertex is present and the
//! weight is large, resets the weight to the current order `k` and the slope
//! to `(k - 1)/2`.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::Error;
use crate::graph::Graph;
use crate::weight::{SatLimit, Weight};
use crate::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Step {
    Isolated,
    Dominating,
}

impl Step {
    pub fn symbol(self) -> char {
        match self {
            Step::Isolated => 'I',
            Step::Dominating => 'D',
        }
    }
}

/// Build steps applied to an initial `K1`; step `i` appends vertex `i + 1`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct ThresholdSequence {
    steps: Vec<Step>,
}

impl ThresholdSequence {
    pub fn new(steps: Vec<Step>) -> Self {
        ThresholdSequence { steps }
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    /// Vertex count of the built graph.
    pub fn order(&self) -> usize {
        self.steps.len() + 1
    }
}

impl fmt::Display for ThresholdSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.steps.iter().try_for_each(|s| write!(f, "{}", s.symbol()))
    }
}

impl FromStr for ThresholdSequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        s.chars()
            .map(|c| match c {
                'I' | 'i' => Ok(Step::Isolated),
                'D' | 'd' => Ok(Step::Dominating),
                other => {
                    let mut msg = String::from("sequence symbols must be I or D, found ");
                    msg.push(other);
                    Err(Error::InvalidParameter(msg))
                }
            })
            .collect::<Result<Vec<_>, _>>()
            .map(ThresholdSequence::new)
    }
}

pub fn build(seq: &ThresholdSequence) -> Graph {
    seq.steps.iter().fold(Graph::empty(1), |g, step| match step {
        Step::Isolated => g.add_isolated(),
        Step::Dominating => g.add_dominating(),
    })
}

/// Peels `g` back to a single vertex and returns the build sequence together
/// with `order`, where `order[i]` is the vertex of `g` that plays the role of
/// vertex `i` of `build(seq)`. `build(seq)` relabelled through `order` is
/// exactly `g`.
///
/// At every stage an isolated vertex is removed if one exists (lowest label
/// first), otherwise a dominating one; if neither exists `g` is not a
/// threshold graph.
pub fn recognize_with_order(g: &Graph) -> Option<(ThresholdSequence, Vec<usize>)> {
    let n = g.order();
    if n == 0 {
        return None;
    }
    let mut active = vec![true; n];
    let mut deg = g.degrees();
    let mut remaining = n;
    let mut peeled = Vec::with_capacity(n);
    let mut steps = Vec::with_capacity(n - 1);
    while remaining > 1 {
        let pick = (0..n)
            .find(|&v| active[v] && deg[v] == 0)
            .map(|v| (v, Step::Isolated))
            .or_else(|| (0..n).find(|&v| active[v] && deg[v] == remaining - 1).map(|v| (v, Step::Dominating)))?;
        let (v, step) = pick;
        active[v] = false;
        remaining -= 1;
        for w in g.neighbor_iter(v) {
            if active[w] {
                deg[w] -= 1;
            }
        }
        peeled.push(v);
        steps.push(step);
    }
    peeled.push((0..n).find(|&v| active[v]).expect("one vertex remains"));
    peeled.reverse();
    steps.reverse();
    Some((ThresholdSequence::new(steps), peeled))
}

/// A build sequence for `g` if `g` is a threshold graph.
pub fn recognize(g: &Graph) -> Option<ThresholdSequence> {
    recognize_with_order(g).map(|(seq, _)| seq)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AutomatonState {
    /// Vertices built so far.
    pub k: usize,
    pub wt: Weight,
    pub has_isolated: bool,
    pub satlim: SatLimit,
}

impl AutomatonState {
    /// The state of `K1`.
    pub const INITIAL: AutomatonState =
        AutomatonState { k: 1, wt: Weight::Infinite, has_isolated: true, satlim: SatLimit::Infinite };
}

/// Which update a step triggers.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StepRule {
    /// Appending an isolated vertex: weight and slope unchanged.
    AddIsolated,
    /// Dominating vertex over an isolate-free graph, or over one whose weight
    /// is at most `k - 2`: weight `+2`, slope `+1`.
    WeightShift,
    /// Dominating vertex over a graph with an isolated vertex and weight
    /// above `k - 2`: weight becomes `k`, slope `(k - 1)/2`.
    CliqueReset,
}

pub fn rule_for(s: &AutomatonState, step: Step) -> StepRule {
    match step {
        Step::Isolated => StepRule::AddIsolated,
        Step::Dominating => {
            let large = match s.wt {
                Weight::Infinite => true,
                Weight::Finite(w) => i64::from(w) > s.k as i64 - 2,
            };
            if s.has_isolated && large {
                StepRule::CliqueReset
            } else {
                StepRule::WeightShift
            }
        }
    }
}

pub fn step_automaton(s: &AutomatonState, step: Step) -> AutomatonState {
    let k = s.k + 1;
    match rule_for(s, step) {
        StepRule::AddIsolated => AutomatonState { k, has_isolated: true, ..*s },
        StepRule::WeightShift => {
            let (wt, satlim) = match (s.wt, s.satlim) {
                (Weight::Finite(w), SatLimit::Finite(l)) => {
                    (Weight::Finite(w + 2), SatLimit::Finite(l + Rational::from_integer(1)))
                }
                // Unreachable from INITIAL: an isolate-free graph has an edge.
                _ => (s.wt, s.satlim),
            };
            AutomatonState { k, wt, has_isolated: false, satlim }
        }
        StepRule::CliqueReset => AutomatonState {
            k,
            wt: Weight::Finite(s.k as u32),
            has_isolated: false,
            satlim: SatLimit::Finite(Rational::new(s.k as i64 - 1, 2)),
        },
    }
}

/// Every state along `seq`, starting with [`AutomatonState::INITIAL`].
pub fn trace(seq: &ThresholdSequence) -> Vec<AutomatonState> {
    let mut out = Vec::with_capacity(seq.order());
    let mut s = AutomatonState::INITIAL;
    out.push(s);
    for &step in seq.steps() {
        s = step_automaton(&s, step);
        out.push(s);
    }
    out
}

/// Final automaton state: weight and saturation slope of `build(seq)`.
pub fn threshold_weight(seq: &ThresholdSequence) -> AutomatonState {
    seq.steps().iter().fold(AutomatonState::INITIAL, |s, &step| step_automaton(&s, step))
}

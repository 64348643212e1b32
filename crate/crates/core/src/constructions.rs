//! Explicit saturated graphs.
//!
//! * [`dominating_lift`]: an `H`-saturated graph plus a dominating vertex is
//!   saturated for `H` plus a dominating vertex. Only the edge-count
//!   optimality needs a minimum base; saturation holds for any base.
//! * [`clique_partition`]: `q` disjoint `K_k` and one `K_r`, `n = qk + r`.
//!   Saturated for `H + dominating vertex` whenever `H` has `k` vertices, an
//!   isolated vertex and weight above `k - 2` (stars `K_{1,k}` included).
//! * [`disjoint_cliques_saturated`]: `K_{p1-2} ∨ (K_t ∪ I)` with
//!   `t = 1 + p2 + ... + pm`, saturated for `K_{p1} ∪ ... ∪ K_{pm}`.
//! * [`join_lift`]: the previous graph lifted `ℓ` times, saturated for
//!   `K_ℓ ∨ (K_{p1} ∪ ... ∪ K_{pm})`.
//! * [`threshold_saturated`]: follows a threshold build sequence, restarting
//!   from a clique partition on every weight reset and lifting on every
//!   weight shift.

use alloc::boxed::Box;
use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::threshold::{self, AutomatonState, Step, StepRule, ThresholdSequence};

fn choose2(x: usize) -> u64 {
    let x = x as u64;
    x * x.saturating_sub(1) / 2
}

pub fn dominating_lift(g: &Graph) -> Graph {
    g.add_dominating()
}

pub fn clique_partition(k: usize, n: usize) -> Result<Graph> {
    if k == 0 {
        return Err(Error::invalid("clique size k must be positive"));
    }
    if n < k + 1 {
        return Err(Error::invalid(format!("clique partition needs n >= k + 1 = {}, got n = {n}", k + 1)));
    }
    let (q, r) = (n / k, n % k);
    let mut g = Graph::empty(0);
    for _ in 0..q {
        g = g.disjoint_union(&Graph::complete(k));
    }
    Ok(g.disjoint_union(&Graph::complete(r)))
}

/// `(n - r)/k * C(k, 2) + C(r, 2)`.
pub fn clique_partition_edges(k: usize, n: usize) -> u64 {
    let r = n % k;
    ((n - r) / k) as u64 * choose2(k) + choose2(r)
}

fn check_clique_sizes(p: &[usize]) -> Result<()> {
    if p.is_empty() {
        return Err(Error::invalid("at least one clique size is required"));
    }
    if p.iter().any(|&x| x < 2) {
        return Err(Error::invalid("clique sizes must be at least 2"));
    }
    if p.windows(2).any(|w| w[0] > w[1]) {
        return Err(Error::invalid("clique sizes must be sorted ascending"));
    }
    Ok(())
}

/// `K_{p1} ∪ ... ∪ K_{pm}`.
pub fn disjoint_cliques(p: &[usize]) -> Graph {
    p.iter().fold(Graph::empty(0), |g, &x| g.disjoint_union(&Graph::complete(x)))
}

/// Labels: the joined `K_{p1-2}` first, then `K_t`, then the isolated set.
pub fn disjoint_cliques_saturated(p: &[usize], n: usize) -> Result<Graph> {
    check_clique_sizes(p)?;
    let total: usize = p.iter().sum();
    if n < total {
        return Err(Error::invalid(format!("need n >= {total} (sum of clique sizes), got n = {n}")));
    }
    let apex = p[0] - 2;
    let t = 1 + total - p[0];
    let isolated = n - t - apex;
    Ok(Graph::complete(apex).join(&Graph::complete(t).disjoint_union(&Graph::empty(isolated))))
}

/// `(p1 - 2)(n + 1 - Σp) + C(Σp - 1, 2)`.
pub fn disjoint_cliques_edges(p: &[usize], n: usize) -> u64 {
    let total: usize = p.iter().sum();
    (p[0] - 2) as u64 * (n + 1 - total) as u64 + choose2(total - 1)
}

fn lift_times(mut g: Graph, times: usize) -> Graph {
    for _ in 0..times {
        g = dominating_lift(&g);
    }
    g
}

/// Edges added by `times` lifts starting from order `base`.
fn lift_edges(base: usize, times: usize) -> u64 {
    (base..base + times).map(|m| m as u64).sum()
}

pub fn join_lift(p: &[usize], ell: usize, n: usize) -> Result<Graph> {
    check_clique_sizes(p)?;
    let total: usize = p.iter().sum();
    if n < ell + total {
        return Err(Error::invalid(format!("need n >= ℓ + Σp = {}, got n = {n}", ell + total)));
    }
    Ok(lift_times(disjoint_cliques_saturated(p, n - ell)?, ell))
}

pub fn join_lift_edges(p: &[usize], ell: usize, n: usize) -> u64 {
    disjoint_cliques_edges(p, n - ell) + lift_edges(n - ell, ell)
}

/// How [`threshold_saturated`] assembles its graph: a clique partition on
/// `base_order` vertices with cliques of size `clique`, lifted `lifts` times.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ThresholdPlan {
    pub clique: usize,
    pub base_order: usize,
    pub lifts: usize,
}

impl ThresholdPlan {
    pub fn new(seq: &ThresholdSequence, n: usize) -> Result<Self> {
        let mut state = AutomatonState::INITIAL;
        let mut plan = None;
        for &step in seq.steps() {
            match threshold::rule_for(&state, step) {
                StepRule::CliqueReset => plan = Some((state.k, 0usize)),
                StepRule::WeightShift => {
                    if let Some((_, lifts)) = plan.as_mut() {
                        *lifts += 1;
                    }
                }
                StepRule::AddIsolated => {}
            }
            state = threshold::step_automaton(&state, step);
        }
        debug_assert!(seq.steps().iter().all(|&s| s == Step::Isolated) == plan.is_none());
        let (clique, lifts) = plan.ok_or(Error::EdgelessForbidden)?;
        if n < seq.order() {
            return Err(Error::invalid(format!(
                "need n >= {} (order of the forbidden graph), got n = {n}",
                seq.order()
            )));
        }
        Ok(ThresholdPlan { clique, base_order: n - lifts, lifts })
    }

    pub fn edges(&self) -> u64 {
        clique_partition_edges(self.clique, self.base_order) + lift_edges(self.base_order, self.lifts)
    }
}

/// Saturated for `threshold::build(seq)`. Spare vertices go to the
/// innermost clique partition; each lift adds exactly one.
pub fn threshold_saturated(seq: &ThresholdSequence, n: usize) -> Result<Graph> {
    let plan = ThresholdPlan::new(seq, n)?;
    Ok(lift_times(clique_partition(plan.clique, plan.base_order)?, plan.lifts))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RecipeKind {
    DominatingLift,
    CliquePartition,
    DisjointCliques,
    JoinLift,
    Threshold,
}

impl RecipeKind {
    pub fn name(self) -> &'static str {
        match self {
            RecipeKind::DominatingLift => "dominating-lift",
            RecipeKind::CliquePartition => "clique-partition",
            RecipeKind::DisjointCliques => "disjoint-cliques",
            RecipeKind::JoinLift => "join-lift",
            RecipeKind::Threshold => "threshold",
        }
    }
}

/// A construction together with its parameters and target order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Recipe {
    /// One dominating vertex over `base`; order is `base.order() + 1`.
    DominatingLift(Box<Recipe>),
    CliquePartition {
        k: usize,
        n: usize,
    },
    DisjointCliques {
        p: Vec<usize>,
        n: usize,
    },
    JoinLift {
        p: Vec<usize>,
        ell: usize,
        n: usize,
    },
    Threshold {
        seq: ThresholdSequence,
        n: usize,
    },
}

impl Recipe {
    pub fn kind(&self) -> RecipeKind {
        match self {
            Recipe::DominatingLift(_) => RecipeKind::DominatingLift,
            Recipe::CliquePartition { .. } => RecipeKind::CliquePartition,
            Recipe::DisjointCliques { .. } => RecipeKind::DisjointCliques,
            Recipe::JoinLift { .. } => RecipeKind::JoinLift,
            Recipe::Threshold { .. } => RecipeKind::Threshold,
        }
    }

    pub fn order(&self) -> usize {
        match self {
            Recipe::DominatingLift(base) => base.order() + 1,
            Recipe::CliquePartition { n, .. }
            | Recipe::DisjointCliques { n, .. }
            | Recipe::JoinLift { n, .. }
            | Recipe::Threshold { n, .. } => *n,
        }
    }

    pub fn build(&self) -> Result<Graph> {
        match self {
            Recipe::DominatingLift(base) => base.build().map(|g| dominating_lift(&g)),
            Recipe::CliquePartition { k, n } => clique_partition(*k, *n),
            Recipe::DisjointCliques { p, n } => disjoint_cliques_saturated(p, *n),
            Recipe::JoinLift { p, ell, n } => join_lift(p, *ell, *n),
            Recipe::Threshold { seq, n } => threshold_saturated(seq, *n),
        }
    }

    /// The forbidden graph the construction is saturated for. For a clique
    /// partition this is the star `K_{1,k}`, the simplest member of its
    /// family.
    pub fn target(&self) -> Result<Graph> {
        Ok(match self {
            Recipe::DominatingLift(base) => base.target()?.add_dominating(),
            Recipe::CliquePartition { k, .. } => Graph::star(*k),
            Recipe::DisjointCliques { p, .. } => {
                check_clique_sizes(p)?;
                disjoint_cliques(p)
            }
            Recipe::JoinLift { p, ell, .. } => {
                check_clique_sizes(p)?;
                Graph::complete(*ell).join(&disjoint_cliques(p))
            }
            Recipe::Threshold { seq, .. } => threshold::build(seq),
        })
    }

    /// Edge count from the closed-form formulas; errors exactly when
    /// [`Recipe::build`] does.
    pub fn predicted_edges(&self) -> Result<u64> {
        match self {
            Recipe::DominatingLift(base) => Ok(base.predicted_edges()? + base.order() as u64),
            Recipe::CliquePartition { k, n } => clique_partition(*k, *n).map(|_| clique_partition_edges(*k, *n)),
            Recipe::DisjointCliques { p, n } => {
                disjoint_cliques_saturated(p, *n).map(|_| disjoint_cliques_edges(p, *n))
            }
            Recipe::JoinLift { p, ell, n } => join_lift(p, *ell, *n).map(|_| join_lift_edges(p, *ell, *n)),
            Recipe::Threshold { seq, n } => ThresholdPlan::new(seq, *n).map(|plan| plan.edges()),
        }
    }
}

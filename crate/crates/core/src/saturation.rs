//! Checking whether a host graph is saturated for a forbidden graph.

use alloc::vec::Vec;

use crate::embed::{contains_subgraph, Embedding};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Witness that adding the non-edge `non_edge` to the host creates a copy of
/// the forbidden graph through that edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub non_edge: (usize, usize),
    pub embedding: Embedding,
}

/// Outcome of [`verify_saturation`]. Exactly one piece of evidence is
/// carried, matching the verdict.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SaturationVerdict {
    /// The host already contains the forbidden graph.
    NotFree { embedding: Embedding },
    /// The host is free, but adding `missing` creates no copy.
    NotSaturated { missing: (usize, usize) },
    /// The host is free and every non-edge has a certificate, listed in
    /// lexicographic order of the non-edge.
    Saturated { certificates: Vec<Certificate> },
}

impl SaturationVerdict {
    pub fn is_h_free(&self) -> bool {
        !matches!(self, SaturationVerdict::NotFree { .. })
    }

    pub fn is_saturated(&self) -> bool {
        matches!(self, SaturationVerdict::Saturated { .. })
    }

    pub fn violating_embedding(&self) -> Option<&Embedding> {
        match self {
            SaturationVerdict::NotFree { embedding } => Some(embedding),
            _ => None,
        }
    }

    pub fn missing(&self) -> Option<(usize, usize)> {
        match self {
            SaturationVerdict::NotSaturated { missing } => Some(*missing),
            _ => None,
        }
    }

    pub fn certificates(&self) -> Option<&[Certificate]> {
        match self {
            SaturationVerdict::Saturated { certificates } => Some(certificates),
            _ => None,
        }
    }
}

fn check_pair(host: &Graph, forbidden: &Graph) -> Result<()> {
    if forbidden.size() == 0 {
        return Err(Error::EdgelessForbidden);
    }
    if host.order() < forbidden.order() {
        return Err(Error::HostTooSmall { host: host.order(), forbidden: forbidden.order() });
    }
    Ok(())
}

/// Certificate for a single non-edge: a copy of `forbidden` in
/// `host + xy` that uses `xy`. Since `host` is assumed free, any new copy
/// must pass through the added edge.
fn certify(host: &Graph, forbidden: &Graph, x: usize, y: usize) -> Result<Option<Embedding>> {
    let plus = host.with_edge(x, y)?;
    Ok(contains_subgraph(&plus, forbidden, Some((x, y))))
}

/// Decides whether `host` is `forbidden`-saturated, returning the evidence.
///
/// Non-edges are examined in lexicographic order, so `missing` is the
/// smallest non-edge that fails.
pub fn verify_saturation(host: &Graph, forbidden: &Graph) -> Result<SaturationVerdict> {
    check_pair(host, forbidden)?;
    if let Some(embedding) = contains_subgraph(host, forbidden, None) {
        return Ok(SaturationVerdict::NotFree { embedding });
    }
    let mut certificates = Vec::with_capacity(host.order() * host.order() / 2 - host.size());
    for (x, y) in host.non_edges() {
        match certify(host, forbidden, x, y)? {
            Some(embedding) => certificates.push(Certificate { non_edge: (x, y), embedding }),
            None => return Ok(SaturationVerdict::NotSaturated { missing: (x, y) }),
        }
    }
    Ok(SaturationVerdict::Saturated { certificates })
}

/// Same decision as [`verify_saturation`] without keeping certificates.
pub fn is_saturated(host: &Graph, forbidden: &Graph) -> Result<bool> {
    check_pair(host, forbidden)?;
    if contains_subgraph(host, forbidden, None).is_some() {
        return Ok(false);
    }
    for (x, y) in host.non_edges() {
        if certify(host, forbidden, x, y)?.is_none() {
            return Ok(false);
        }
    }
    Ok(true)
}

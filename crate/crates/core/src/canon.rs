//! Exact canonical forms for small graphs.
//!
//! The form is the lexicographically smallest upper-triangle adjacency
//! bit-string over all vertex orderings that list vertices by
//! non-increasing degree. Restricting to degree-sorted orderings keeps the
//! form an isomorphism invariant while cutting the search down to
//! permutations inside each degree class. Prefixes that already exceed the
//! best string found so far are abandoned.
//!
//! Layout of the returned bytes: byte 0 is `n`; the rest is the bit-string
//! packed most-significant-bit first, column by column (`j = 1..n`, rows
//! `i = 0..j`), zero padded to a whole byte.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order accepted by [`canonical_form`].
pub const CANON_CAP: usize = 10;

struct Search<'a> {
    g: &'a Graph,
    need: Vec<usize>,
    deg: Vec<usize>,
    used: Vec<bool>,
    cur: Vec<usize>,
    cols: Vec<u16>,
    best_cols: Option<Vec<u16>>,
    best_order: Vec<usize>,
}

impl Search<'_> {
    fn run(&mut self, j: usize) {
        let n = self.g.order();
        if j == n {
            let better = match &self.best_cols {
                None => true,
                Some(b) => self.cols < *b,
            };
            if better {
                self.best_cols = Some(self.cols.clone());
                self.best_order.clone_from(&self.cur);
            }
            return;
        }
        for v in 0..n {
            if self.used[v] || self.deg[v] != self.need[j] {
                continue;
            }
            let mut col = 0u16;
            for (i, &u) in self.cur.iter().enumerate() {
                if self.g.has_edge(u, v) {
                    col |= 1 << (j - 1 - i);
                }
            }
            self.cols[j] = col;
            if let Some(b) = &self.best_cols {
                if self.cols[..=j] > b[..=j] {
                    continue;
                }
            }
            self.used[v] = true;
            self.cur.push(v);
            self.run(j + 1);
            self.cur.pop();
            self.used[v] = false;
        }
    }
}

/// Canonical form plus the ordering that realises it: `order[p]` is the
/// original vertex placed at canonical position `p`.
pub fn canonical_labeling(g: &Graph) -> Result<(Vec<u8>, Vec<usize>)> {
    let n = g.order();
    if n > CANON_CAP {
        return Err(Error::OverCap { what: "canonical form", n, cap: CANON_CAP });
    }
    let deg = g.degrees();
    let mut need = deg.clone();
    need.sort_unstable_by(|a, b| b.cmp(a));
    let mut s = Search {
        g,
        need,
        deg,
        used: vec![false; n],
        cur: Vec::with_capacity(n),
        cols: vec![0; n],
        best_cols: None,
        best_order: Vec::new(),
    };
    s.run(0);
    let cols = s.best_cols.unwrap_or_default();
    Ok((pack(n, &cols), s.best_order))
}

/// Canonical byte string: equal for two graphs iff they are isomorphic.
pub fn canonical_form(g: &Graph) -> Result<Vec<u8>> {
    canonical_labeling(g).map(|(form, _)| form)
}

/// The isomorphic copy of `g` whose labelling is the canonical one.
pub fn canonical_graph(g: &Graph) -> Result<Graph> {
    let (_, order) = canonical_labeling(g)?;
    let mut perm = vec![0; g.order()];
    for (pos, &v) in order.iter().enumerate() {
        perm[v] = pos;
    }
    g.relabel(&perm)
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> Result<bool> {
    if a.order() != b.order() || a.size() != b.size() {
        return Ok(false);
    }
    Ok(canonical_form(a)? == canonical_form(b)?)
}

fn pack(n: usize, cols: &[u16]) -> Vec<u8> {
    let bits = n * n.saturating_sub(1) / 2;
    let mut out = vec![0u8; 1 + bits.div_ceil(8)];
    out[0] = n as u8;
    let mut k = 0;
    for (j, &col) in cols.iter().enumerate().skip(1) {
        for i in 0..j {
            if (col >> (j - 1 - i)) & 1 == 1 {
                out[1 + k / 8] |= 0x80 >> (k % 8);
            }
            k += 1;
        }
    }
    out
}

/// Decodes a canonical form back into the canonically labelled graph.
pub fn graph_from_form(form: &[u8]) -> Result<Graph> {
    let n = *form.first().ok_or_else(|| Error::invalid("empty canonical form"))? as usize;
    let bits = n * n.saturating_sub(1) / 2;
    if form.len() != 1 + bits.div_ceil(8) {
        return Err(Error::invalid("canonical form has the wrong length"));
    }
    let mut g = Graph::empty(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if form[1 + k / 8] & (0x80 >> (k % 8)) != 0 {
                g.insert(i, j);
            }
            k += 1;
        }
    }
    Ok(g)
}

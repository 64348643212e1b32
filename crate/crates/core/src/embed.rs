//! Backtracking search for (not necessarily induced) copies of a pattern
//! graph inside a host graph.

use alloc::vec;
use alloc::vec::Vec;

use crate::graph::Graph;

/// An injective map from pattern vertices to host vertices: `map()[u]` is
/// the image of pattern vertex `u`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Embedding {
    map: Vec<usize>,
}

impl Embedding {
    pub fn new(map: Vec<usize>) -> Self {
        Embedding { map }
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn image(&self, u: usize) -> usize {
        self.map[u]
    }

    /// Whether this map is injective and sends every edge of `pattern` to an
    /// edge of `host`.
    pub fn is_embedding(&self, pattern: &Graph, host: &Graph) -> bool {
        if self.map.len() != pattern.order() || self.map.iter().any(|&x| x >= host.order()) {
            return false;
        }
        let mut seen = vec![false; host.order()];
        for &x in &self.map {
            if core::mem::replace(&mut seen[x], true) {
                return false;
            }
        }
        pattern.edges().all(|(u, v)| host.has_edge(self.map[u], self.map[v]))
    }

    /// Whether some edge of `pattern` lands on the pair `{x, y}`.
    pub fn uses_pair(&self, pattern: &Graph, x: usize, y: usize) -> bool {
        pattern.edges().any(|(u, v)| {
            let (a, b) = (self.map[u], self.map[v]);
            (a == x && b == y) || (a == y && b == x)
        })
    }
}

struct Matcher<'a> {
    host: &'a Graph,
    pattern: &'a Graph,
    host_deg: Vec<usize>,
    pattern_deg: Vec<usize>,
    order: Vec<usize>,
    assign: Vec<usize>,
    used: Vec<bool>,
}

const UNSET: usize = usize::MAX;

impl Matcher<'_> {
    fn fits(&self, u: usize, x: usize) -> bool {
        !self.used[x]
            && self.host_deg[x] >= self.pattern_deg[u]
            && self.pattern.neighbor_iter(u).all(|w| self.assign[w] == UNSET || self.host.has_edge(x, self.assign[w]))
    }

    fn place(&mut self, u: usize, x: usize) {
        self.assign[u] = x;
        self.used[x] = true;
    }

    fn unplace(&mut self, u: usize) {
        self.used[self.assign[u]] = false;
        self.assign[u] = UNSET;
    }

    fn extend(&mut self, i: usize) -> bool {
        if i == self.order.len() {
            return true;
        }
        let u = self.order[i];
        for x in 0..self.host.order() {
            if self.fits(u, x) {
                self.place(u, x);
                if self.extend(i + 1) {
                    return true;
                }
                self.unplace(u);
            }
        }
        false
    }
}

/// Looks for a copy of `pattern` in `host`.
///
/// With `required_edge = Some((x, y))`, only copies in which some pattern
/// edge is mapped onto `{x, y}` count; if `xy` is not an edge of `host` the
/// answer is `None`.
///
/// Pattern vertices are placed in order of non-increasing degree (ties by
/// label) and host candidates are tried in ascending label order, so the
/// returned embedding is deterministic.
pub fn contains_subgraph(host: &Graph, pattern: &Graph, required_edge: Option<(usize, usize)>) -> Option<Embedding> {
    let (hn, pn) = (host.order(), pattern.order());
    if pn > hn || pattern.size() > host.size() {
        return None;
    }
    let mut order: Vec<usize> = (0..pn).collect();
    let pattern_deg = pattern.degrees();
    order.sort_by(|&a, &b| pattern_deg[b].cmp(&pattern_deg[a]).then(a.cmp(&b)));
    let mut m = Matcher {
        host,
        pattern,
        host_deg: host.degrees(),
        pattern_deg,
        order,
        assign: vec![UNSET; pn],
        used: vec![false; hn],
    };

    let Some((x, y)) = required_edge else {
        return m.extend(0).then(|| Embedding::new(m.assign));
    };
    if !host.has_edge(x, y) {
        return None;
    }
    let full_order = core::mem::take(&mut m.order);
    let pattern_edges: Vec<_> = pattern.edges().collect();
    for (u, v) in pattern_edges {
        m.order = full_order.iter().copied().filter(|&w| w != u && w != v).collect();
        for (a, b) in [(x, y), (y, x)] {
            if m.host_deg[a] < m.pattern_deg[u] || m.host_deg[b] < m.pattern_deg[v] {
                continue;
            }
            m.place(u, a);
            m.place(v, b);
            if m.extend(0) {
                return Some(Embedding::new(m.assign));
            }
            m.unplace(v);
            m.unplace(u);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_free_cycle() {
        assert_eq!(contains_subgraph(&Graph::cycle(5), &Graph::complete(3), None), None);
    }

    #[test]
    fn star_inside_k4() {
        let e = contains_subgraph(&Graph::complete(4), &Graph::star(3), None).unwrap();
        assert!(e.is_embedding(&Graph::star(3), &Graph::complete(4)));
    }

    #[test]
    fn required_edge_must_exist() {
        let g = Graph::complete(4).add_isolated();
        assert_eq!(contains_subgraph(&g, &Graph::complete(3), Some((0, 4))), None);
        let e = contains_subgraph(&g, &Graph::complete(3), Some((2, 1))).unwrap();
        assert!(e.uses_pair(&Graph::complete(3), 1, 2));
    }

    #[test]
    fn required_edge_with_edgeless_pattern() {
        let g = Graph::complete(3);
        assert!(contains_subgraph(&g, &Graph::empty(2), None).is_some());
        assert_eq!(contains_subgraph(&g, &Graph::empty(2), Some((0, 1))), None);
    }

    #[test]
    fn pattern_larger_than_host() {
        assert_eq!(contains_subgraph(&Graph::complete(3), &Graph::empty(4), None), None);
    }

    #[test]
    fn search_is_not_induced() {
        // P3 sits inside K3 even though K3 has the extra edge.
        let e = contains_subgraph(&Graph::complete(3), &Graph::path(3), None).unwrap();
        assert_eq!(e.map(), &[1, 0, 2]);
    }
}

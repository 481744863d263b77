//! Canonical labelling by colour refinement plus individualisation.
//!
//! The search individualises one vertex of the first non-singleton cell at a
//! time and keeps the lexicographically largest relabelled adjacency string
//! over all leaves. Vertices that are twins (`N(u)∖{v} = N(v)∖{u}`) give
//! identical subtrees, so only one twin per class is expanded.

use super::format::graph6_body;
use super::Graph;

/// Colour refinement to a stable partition. Colours stay in `0..c` and the
/// new order depends only on the old colours and the neighbour colour
/// multisets, so the result commutes with relabelling.
fn refine(g: &Graph, colors: &mut [usize]) {
    let n = g.order();
    let mut count = distinct(colors);
    loop {
        let mut keyed: Vec<(usize, Vec<usize>, usize)> = (0..n)
            .map(|v| {
                let mut nc: Vec<usize> = g.neighbors(v).map(|w| colors[w]).collect();
                nc.sort_unstable();
                (colors[v], nc, v)
            })
            .collect();
        keyed.sort_unstable();
        let mut next = 0;
        for i in 0..n {
            if i > 0 && (keyed[i].0 != keyed[i - 1].0 || keyed[i].1 != keyed[i - 1].1) {
                next += 1;
            }
            colors[keyed[i].2] = next;
        }
        let new_count = if n == 0 { 0 } else { next + 1 };
        if new_count == count {
            return;
        }
        count = new_count;
    }
}

fn distinct(colors: &[usize]) -> usize {
    let mut seen: Vec<usize> = colors.to_vec();
    seen.sort_unstable();
    seen.dedup();
    seen.len()
}

fn twins(g: &Graph, u: usize, v: usize) -> bool {
    let n = g.order();
    (0..n).all(|w| w == u || w == v || g.has_edge(u, w) == g.has_edge(v, w))
}

struct Search<'a> {
    g: &'a Graph,
    best: Option<(Vec<u8>, Vec<usize>)>,
}

impl Search<'_> {
    fn leaf_key(&self, labels: &[usize]) -> Vec<u8> {
        let n = self.g.order();
        let mut inv = vec![0; n];
        for (v, &l) in labels.iter().enumerate() {
            inv[l] = v;
        }
        graph6_body(n, |i, j| self.g.has_edge(inv[i], inv[j]))
    }

    fn descend(&mut self, mut colors: Vec<usize>) {
        refine(self.g, &mut colors);
        let n = self.g.order();
        let mut sizes = vec![0usize; n];
        for &c in &colors {
            sizes[c] += 1;
        }
        let Some(target) = (0..n).find(|&c| sizes[c] > 1) else {
            let key = self.leaf_key(&colors);
            if self.best.as_ref().is_none_or(|(b, _)| key > *b) {
                self.best = Some((key, colors));
            }
            return;
        };
        let cell: Vec<usize> = (0..n).filter(|&v| colors[v] == target).collect();
        let mut expanded: Vec<usize> = Vec::new();
        for &v in &cell {
            if expanded.iter().any(|&u| twins(self.g, u, v)) {
                continue;
            }
            expanded.push(v);
            // v goes first inside its cell; renumber to keep colours dense
            let split: Vec<usize> = (0..n)
                .map(|w| 2 * colors[w] + usize::from(colors[w] == target && w != v))
                .collect();
            let mut ranks = split.clone();
            ranks.sort_unstable();
            ranks.dedup();
            let child = split
                .iter()
                .map(|c| ranks.binary_search(c).expect("rank present"))
                .collect();
            self.descend(child);
        }
    }
}

/// A canonical relabelling: `labels[v]` is the new index of vertex `v`.
/// Isomorphic graphs map to identical relabelled graphs.
pub fn canonical_labeling(g: &Graph) -> Vec<usize> {
    if g.order() == 0 {
        return Vec::new();
    }
    let mut search = Search { g, best: None };
    search.descend(vec![0; g.order()]);
    search.best.expect("search reaches at least one leaf").1
}

/// graph6 encoding of the canonically relabelled graph. Equal strings iff
/// the graphs are isomorphic.
pub fn canonical_form(g: &Graph) -> Vec<u8> {
    let labels = canonical_labeling(g);
    super::format::write_graph6(&g.relabel(&labels)).into_bytes()
}

/// An isomorphism `G → H` as a vertex map, if one exists. The map is checked
/// edge by edge before it is returned.
pub fn are_isomorphic(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    if g.order() != h.order() || g.size() != h.size() {
        return None;
    }
    let mut dg: Vec<usize> = (0..g.order()).map(|v| g.degree(v)).collect();
    let mut dh: Vec<usize> = (0..h.order()).map(|v| h.degree(v)).collect();
    dg.sort_unstable();
    dh.sort_unstable();
    if dg != dh {
        return None;
    }
    let lg = canonical_labeling(g);
    let lh = canonical_labeling(h);
    if g.relabel(&lg) != h.relabel(&lh) {
        return None;
    }
    let mut inv_h = vec![0; h.order()];
    for (v, &l) in lh.iter().enumerate() {
        inv_h[l] = v;
    }
    let map: Vec<usize> = lg.iter().map(|&l| inv_h[l]).collect();
    assert!(
        g.edges().all(|(u, v)| h.has_edge(map[u], map[v])),
        "canonical labelling produced a non-isomorphism"
    );
    Some(map)
}

/// Length of a shortest cycle, `None` for forests.
pub fn girth(g: &Graph) -> Option<usize> {
    let n = g.order();
    let mut best: Option<usize> = None;
    for s in 0..n {
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        dist[s] = 0;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for w in g.neighbors(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if parent[u] != w {
                    let len = dist[u] + dist[w] + 1;
                    best = Some(best.map_or(len, |b| b.min(len)));
                }
            }
        }
    }
    best
}

/// Petersen recognition through the (3,5)-cage characterisation: ten
/// vertices, cubic, girth five. Debug builds cross-check with an explicit
/// isomorphism test.
pub fn is_petersen(g: &Graph) -> bool {
    let verdict = g.order() == 10
        && g.size() == 15
        && (0..10).all(|v| g.degree(v) == 3)
        && girth(g) == Some(5);
    debug_assert_eq!(
        verdict,
        are_isomorphic(g, &crate::families::petersen()).is_some(),
        "cage characterisation disagrees with isomorphism test"
    );
    verdict
}

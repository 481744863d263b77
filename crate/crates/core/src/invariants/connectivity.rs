use crate::graph::Graph;
use std::collections::VecDeque;

/// Unit-capacity flow network on the vertex-split graph: vertex `v` becomes
/// `2v → 2v+1` with capacity one, every edge `uv` becomes `2u+1 → 2v` and
/// `2v+1 → 2u` with unbounded capacity.
struct SplitNetwork {
    head: Vec<usize>,
    to: Vec<usize>,
    cap: Vec<u32>,
    next: Vec<usize>,
}

const NIL: usize = usize::MAX;

impl SplitNetwork {
    fn new(g: &Graph, s: usize, t: usize) -> Self {
        let n = g.order();
        let mut net = SplitNetwork {
            head: vec![NIL; 2 * n],
            to: Vec::new(),
            cap: Vec::new(),
            next: Vec::new(),
        };
        let big = n as u32 + 1;
        for v in 0..n {
            let c = if v == s || v == t { big } else { 1 };
            net.arc(2 * v, 2 * v + 1, c);
        }
        for (u, v) in g.edges() {
            net.arc(2 * u + 1, 2 * v, big);
            net.arc(2 * v + 1, 2 * u, big);
        }
        net
    }

    fn arc(&mut self, from: usize, to: usize, cap: u32) {
        for (a, b, c) in [(from, to, cap), (to, from, 0)] {
            self.to.push(b);
            self.cap.push(c);
            self.next.push(self.head[a]);
            self.head[a] = self.to.len() - 1;
        }
    }

    fn augment(&mut self, source: usize, sink: usize) -> bool {
        let mut via = vec![NIL; self.head.len()];
        let mut seen = vec![false; self.head.len()];
        seen[source] = true;
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let mut e = self.head[u];
            while e != NIL {
                let w = self.to[e];
                if self.cap[e] > 0 && !seen[w] {
                    seen[w] = true;
                    via[w] = e;
                    if w == sink {
                        let mut cur = sink;
                        while cur != source {
                            let e = via[cur];
                            self.cap[e] -= 1;
                            self.cap[e ^ 1] += 1;
                            cur = self.to[e ^ 1];
                        }
                        return true;
                    }
                    queue.push_back(w);
                }
                e = self.next[e];
            }
        }
        false
    }
}

/// Maximum number of internally disjoint `s–t` paths for non-adjacent `s`,
/// `t`, stopping early once `limit` paths are found.
pub fn local_connectivity(g: &Graph, s: usize, t: usize, limit: usize) -> usize {
    debug_assert!(s != t && !g.has_edge(s, t));
    let mut net = SplitNetwork::new(g, s, t);
    let mut flow = 0;
    while flow < limit && net.augment(2 * s + 1, 2 * t) {
        flow += 1;
    }
    flow
}

/// κ(G), with the complete-graph convention κ(K_n) = n − 1.
///
/// Uses Even's scheme: some vertex among the first κ + 1 lies outside a
/// minimum separator, so sources beyond the running minimum can be skipped.
pub fn vertex_connectivity(g: &Graph) -> usize {
    let n = g.order();
    if n == 0 {
        return 0;
    }
    if g.is_complete() {
        return n - 1;
    }
    if !g.is_connected() {
        return 0;
    }
    let mut best = n - 1;
    let mut i = 0;
    while i <= best && i < n {
        for j in i + 1..n {
            if !g.has_edge(i, j) {
                best = best.min(local_connectivity(g, i, j, best));
            }
        }
        i += 1;
    }
    best
}

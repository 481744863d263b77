//! Naive reference implementations. Each works straight from the definition
//! on an adjacency matrix and shares no code with the library solvers.

#![allow(dead_code)]

use kfree::Graph;

pub struct Naive {
    pub n: usize,
    adj: Vec<Vec<bool>>,
}

impl Naive {
    pub fn new(g: &Graph) -> Self {
        let n = g.order();
        let adj = (0..n).map(|u| (0..n).map(|v| u != v && g.has_edge(u, v)).collect()).collect();
        Naive { n, adj }
    }

    pub fn edge(&self, u: usize, v: usize) -> bool {
        self.adj[u][v]
    }

    fn members(&self, mask: u64) -> Vec<usize> {
        (0..self.n).filter(|&v| mask >> v & 1 == 1).collect()
    }

    pub fn independent(&self, set: &[usize]) -> bool {
        set.iter().enumerate().all(|(i, &u)| set[i + 1..].iter().all(|&v| !self.edge(u, v)))
    }

    pub fn alpha_within(&self, allowed: u64) -> usize {
        let mut best = 0;
        for mask in 0u64..1 << self.n {
            if mask & !allowed == 0 && self.independent(&self.members(mask)) {
                best = best.max(mask.count_ones() as usize);
            }
        }
        best
    }

    pub fn alpha(&self) -> usize {
        self.alpha_within((1u64 << self.n) - 1)
    }

    /// Components of the graph induced by `keep`, by repeated DFS.
    pub fn components(&self, keep: u64) -> usize {
        let mut seen = 0u64;
        let mut count = 0;
        for s in 0..self.n {
            if keep >> s & 1 == 0 || seen >> s & 1 == 1 {
                continue;
            }
            count += 1;
            let mut stack = vec![s];
            seen |= 1 << s;
            while let Some(u) = stack.pop() {
                for v in 0..self.n {
                    if keep >> v & 1 == 1 && seen >> v & 1 == 0 && self.edge(u, v) {
                        seen |= 1 << v;
                        stack.push(v);
                    }
                }
            }
        }
        count
    }

    pub fn connected(&self) -> bool {
        self.n > 0 && self.components((1u64 << self.n) - 1) == 1
    }

    /// Smallest removal that disconnects or leaves one vertex.
    pub fn kappa(&self) -> usize {
        let full = (1u64 << self.n) - 1;
        (0u64..1 << self.n)
            .filter(|&s| {
                let rest = full & !s;
                rest.count_ones() <= 1 || self.components(rest) >= 2
            })
            .map(|s| s.count_ones() as usize)
            .min()
            .unwrap_or(0)
    }

    /// Toughness as a reduced `(numerator, denominator)`; `None` when no
    /// set separates the graph. Disconnected graphs give `(0, 1)`.
    pub fn toughness(&self) -> Option<(u64, u64)> {
        let full = (1u64 << self.n) - 1;
        if !self.connected() {
            return Some((0, 1));
        }
        let mut best: Option<(u64, u64)> = None;
        for s in 0u64..1 << self.n {
            let w = self.components(full & !s) as u64;
            if w < 2 {
                continue;
            }
            let cand = (s.count_ones() as u64, w);
            if best.map_or(true, |(a, b)| cand.0 * b < a * cand.1) {
                best = Some(cand);
            }
        }
        best.map(|(a, b)| {
            let g = gcd(a, b);
            (a / g, b / g)
        })
    }

    fn permutations(items: &[usize], f: &mut impl FnMut(&[usize])) {
        fn go(rest: &mut Vec<usize>, out: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
            if rest.is_empty() {
                f(out);
                return;
            }
            for i in 0..rest.len() {
                let v = rest.remove(i);
                out.push(v);
                go(rest, out, f);
                out.pop();
                rest.insert(i, v);
            }
        }
        go(&mut items.to_vec(), &mut Vec::new(), f);
    }

    /// Whether the vertices of `set` (at least three) lie on a common cycle
    /// using only them.
    pub fn spans_cycle(&self, set: &[usize]) -> bool {
        if set.len() < 3 {
            return false;
        }
        let mut found = false;
        Self::permutations(&set[1..], &mut |order| {
            if found {
                return;
            }
            let mut prev = set[0];
            for &v in order {
                if !self.edge(prev, v) {
                    return;
                }
                prev = v;
            }
            found = self.edge(prev, set[0]);
        });
        found
    }

    pub fn hamiltonian(&self) -> bool {
        self.spans_cycle(&(0..self.n).collect::<Vec<_>>())
    }

    pub fn circumference(&self) -> usize {
        (0u64..1 << self.n)
            .filter(|m| m.count_ones() >= 3)
            .filter(|&m| self.spans_cycle(&self.members(m)))
            .map(|m| m.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    pub fn spanning_path(&self, a: usize, b: usize) -> bool {
        if a == b {
            return self.n == 1;
        }
        let middle: Vec<usize> = (0..self.n).filter(|&v| v != a && v != b).collect();
        let mut found = false;
        Self::permutations(&middle, &mut |order| {
            if found {
                return;
            }
            let mut prev = a;
            for &v in order.iter().chain(std::iter::once(&b)) {
                if !self.edge(prev, v) {
                    return;
                }
                prev = v;
            }
            found = true;
        });
        found
    }

    pub fn hamiltonian_connected(&self) -> bool {
        (0..self.n).all(|a| (a + 1..self.n).all(|b| self.spanning_path(a, b)))
    }

    /// Whether some edge plus `k` vertices induce `K₂ ∪ kK₁`, by trying
    /// every vertex subset of size `k + 2`.
    pub fn has_pattern(&self, k: usize) -> bool {
        (0u64..1 << self.n).filter(|m| m.count_ones() as usize == k + 2).any(|m| {
            let vs = self.members(m);
            let edges: Vec<(usize, usize)> = vs
                .iter()
                .enumerate()
                .flat_map(|(i, &u)| vs[i + 1..].iter().map(move |&v| (u, v)))
                .filter(|&(u, v)| self.edge(u, v))
                .collect();
            edges.len() == 1
        })
    }

    /// Least `k ≥ 1` without an induced `K₂ ∪ kK₁`.
    pub fn freeness_threshold(&self) -> usize {
        (1..).find(|&k| !self.has_pattern(k)).unwrap()
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|u| (0..self.n).filter(|&v| self.edge(u, v)).count()).min().unwrap_or(0)
    }
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a.max(1)
    } else {
        gcd(b, a % b)
    }
}

/// Isomorphism classes of graphs on `n` vertices by Burnside's lemma: the
/// average over all vertex permutations of `2^(cycles induced on pairs)`.
pub fn burnside_class_count(n: usize) -> u128 {
    let mut total: u128 = 0;
    let mut count: u128 = 0;
    let items: Vec<usize> = (0..n).collect();
    Naive::permutations(&items, &mut |perm| {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        let index = |a: usize, b: usize| pairs.iter().position(|&p| p == (a.min(b), a.max(b))).unwrap();
        let mut seen = vec![false; pairs.len()];
        let mut cycles = 0;
        for start in 0..pairs.len() {
            if seen[start] {
                continue;
            }
            cycles += 1;
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                let (a, b) = pairs[p];
                p = index(perm[a], perm[b]);
            }
        }
        total += 1u128 << cycles;
        count += 1;
    });
    total / count
}

/// Isomorphism classes on `n` vertices by listing every labelled graph and
/// keeping the lexicographically least relabelling of each.
pub fn labelled_class_count(n: usize) -> usize {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let mut perms = Vec::new();
    Naive::permutations(&(0..n).collect::<Vec<_>>(), &mut |p| perms.push(p.to_vec()));
    let mut classes = std::collections::HashSet::new();
    for mask in 0u64..1 << pairs.len() {
        let least = perms
            .iter()
            .map(|p| {
                let mut m = 0u64;
                for (i, &(a, b)) in pairs.iter().enumerate() {
                    if mask >> i & 1 == 1 {
                        let (x, y) = (p[a].min(p[b]), p[a].max(p[b]));
                        m |= 1 << pairs.iter().position(|&q| q == (x, y)).unwrap();
                    }
                }
                m
            })
            .min()
            .unwrap();
        classes.insert(least);
    }
    classes.len()
}

fn is_cycle_of(g: &Graph, cycle: &[usize]) -> bool {
    let mut sorted = cycle.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    sorted.len() == cycle.len()
        && cycle.len() >= 3
        && (0..cycle.len()).all(|i| g.has_edge(cycle[i], cycle[(i + 1) % cycle.len()]))
}

/// Compares every exact solver on `g` against the naive definitions.
pub fn check_against_oracles(g: &Graph) -> Result<(), String> {
    use kfree::class::{freeness_threshold, is_pattern_free};
    use kfree::invariants::{
        hamiltonian_cycle, independence_number, is_hamiltonian_connected, longest_cycle, min_degree, toughness,
        vertex_connectivity, Toughness,
    };
    let o = Naive::new(g);
    let name = kfree::graph::format::write_graph6(g);
    let same = |what: &str, got: String, want: String| {
        if got == want {
            Ok(())
        } else {
            Err(format!("{what} on {name}: solver {got}, oracle {want}"))
        }
    };
    same("alpha", independence_number(g).unwrap().alpha.to_string(), o.alpha().to_string())?;
    same("kappa", vertex_connectivity(g).to_string(), o.kappa().to_string())?;
    same("min degree", min_degree(g).unwrap().to_string(), o.min_degree().to_string())?;
    let t = match toughness(g).unwrap().value {
        Toughness::Infinite => "inf".to_string(),
        Toughness::Finite(r) => format!("{}/{}", r.numer(), r.denom()),
    };
    same("toughness", t, o.toughness().map_or("inf".to_string(), |(a, b)| format!("{a}/{b}")))?;
    same("freeness threshold", freeness_threshold(g).unwrap().to_string(), o.freeness_threshold().to_string())?;
    for k in 1..=3 {
        same("freeness", is_pattern_free(g, k).unwrap().to_string(), (!o.has_pattern(k)).to_string())?;
    }
    if g.order() < 3 {
        return if hamiltonian_cycle(g).is_err() { Ok(()) } else { Err(format!("{name}: cycle on < 3 vertices")) };
    }
    let ham = hamiltonian_cycle(g).unwrap();
    same("hamiltonian", ham.is_some().to_string(), o.hamiltonian().to_string())?;
    if let Some(c) = ham {
        if !is_cycle_of(g, c.vertices()) || c.len() != g.order() {
            return Err(format!("{name}: invalid hamiltonian cycle {:?}", c.vertices()));
        }
    }
    let longest = longest_cycle(g).unwrap();
    same("circumference", longest.as_ref().map_or(0, |c| c.len()).to_string(), o.circumference().to_string())?;
    if let Some(c) = longest {
        if !is_cycle_of(g, c.vertices()) {
            return Err(format!("{name}: invalid longest cycle {:?}", c.vertices()));
        }
    }
    same(
        "hamiltonian-connected",
        is_hamiltonian_connected(g).unwrap().holds().to_string(),
        o.hamiltonian_connected().to_string(),
    )
}

pub mod splices {
    use kfree::graph::AugmentedCycle;
    use kfree::proof::{Frame, Side, Spliced, Template};
    use kfree::{Graph, OrientedCycle, OrientedPath};
    use rand::seq::SliceRandom;
    use rand::Rng;

    /// A random graph with a planted cycle (or `a–b` path) as the frame,
    /// leaving at least one vertex off it.
    pub fn random_instance(rng: &mut impl Rng) -> (Graph, Frame) {
        let n = rng.gen_range(6..=12);
        let path_mode = rng.gen_bool(0.3);
        // nine-vertex frames are where the endgame constructions live
        let m = match (n, path_mode) {
            (11.., true) if rng.gen_bool(0.2) => 10,
            (10.., false) if rng.gen_bool(0.2) => 9,
            _ => rng.gen_range(3..n),
        };
        let mut order: Vec<usize> = (0..n).collect();
        order.shuffle(rng);
        let frame_vs = order[..m].to_vec();
        let p = [0.4, 0.7, 0.9, 1.0][rng.gen_range(0..4)];
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if rng.gen_bool(p) {
                    edges.push((i, j));
                }
            }
        }
        let closing = if path_mode { m - 1 } else { m };
        for i in 0..closing {
            let (u, v) = (frame_vs[i], frame_vs[(i + 1) % m]);
            edges.push((u.min(v), u.max(v)));
        }
        edges.sort_unstable();
        edges.dedup();
        let g = Graph::from_edge_list(n, &edges).unwrap();
        let frame = if path_mode {
            Frame::Path(AugmentedCycle::new(OrientedPath::new(&g, frame_vs).unwrap()).unwrap())
        } else {
            Frame::Cycle(OrientedCycle::new(&g, frame_vs).unwrap())
        };
        (g, frame)
    }

    /// A template of a random kind whose roles are mostly, but not always,
    /// filled from the right side of the frame.
    pub fn random_template(rng: &mut impl Rng, g: &Graph, frame: &Frame) -> Template {
        let on: Vec<usize> = frame.vertices().to_vec();
        let off: Vec<usize> = (0..g.order()).filter(|&v| !frame.contains(v)).collect();
        let pick_on = |rng: &mut dyn rand::RngCore| {
            if rng.gen_bool(0.97) {
                *on.choose(rng).unwrap()
            } else {
                rng.gen_range(0..g.order())
            }
        };
        let pick_off = |rng: &mut dyn rand::RngCore| {
            if rng.gen_bool(0.97) {
                *off.choose(rng).unwrap()
            } else {
                rng.gen_range(0..g.order())
            }
        };
        let walk = |rng: &mut dyn rand::RngCore| {
            let len = rng.gen_range(1..=off.len().min(2));
            let mut w: Vec<usize> = off.choose_multiple(rng, len).copied().collect();
            if rng.gen_bool(0.02) {
                w.push(rng.gen_range(0..g.order()));
            }
            w
        };
        let ring = frame.ring();
        match rng.gen_range(0..10) {
            0 => Template::AdjacentAttachment { u: pick_on(rng), connector: walk(rng) },
            1 => {
                let side = if rng.gen_bool(0.5) { Side::Successors } else { Side::Predecessors };
                let (u, v) = (pick_on(rng), pick_on(rng));
                let through = walk(rng);
                let rest: Vec<usize> = off.iter().copied().filter(|w| !through.contains(w)).collect();
                let bridge = match rest.choose(rng) {
                    Some(&b) => vec![b],
                    None => walk(rng),
                };
                Template::BridgedAttachments { u, v, through, bridge, side }
            }
            2 => {
                let u = pick_on(rng);
                let v = if ring.contains(u) && rng.gen_bool(0.9) { ring.succ(u) } else { pick_on(rng) };
                Template::CrossedChords { x: pick_off(rng), u, v, xi: pick_on(rng), xj: pick_on(rng) }
            }
            3 => {
                let xl = pick_on(rng);
                let x_next = if ring.contains(xl) && rng.gen_bool(0.9) { ring.succ_by(xl, 2) } else { pick_on(rng) };
                Template::ShortGap { x: pick_off(rng), u: pick_on(rng), v: pick_on(rng), xl, xr: pick_on(rng), x_next }
            }
            4 => Template::LowChord {
                x: pick_off(rng),
                u: pick_on(rng),
                v: pick_on(rng),
                xl: pick_on(rng),
                xr: pick_on(rng),
                xj: pick_on(rng),
            },
            5 => Template::HighChord {
                x: pick_off(rng),
                u: pick_on(rng),
                v: pick_on(rng),
                xl: pick_on(rng),
                xr: pick_on(rng),
                xj: pick_on(rng),
            },
            6 => Template::WideEndgame {
                x: pick_off(rng),
                xk1: pick_on(rng),
                xk: pick_on(rng),
                xd: pick_on(rng),
                yk: pick_on(rng),
                yd: pick_on(rng),
            },
            7 => {
                let (anchors, ys) = if rng.gen_bool(0.6) {
                    let a = ordered_anchors(rng, frame, None);
                    (a, [a[1], a[2], a[0]])
                } else {
                    ([pick_on(rng), pick_on(rng), pick_on(rng)], [pick_on(rng), pick_on(rng), pick_on(rng)])
                };
                Template::PetersenEndgame { x: pick_off(rng), anchors, ys }
            }
            8 => {
                let via = if rng.gen_bool(0.5) { Some(pick_off(rng)) } else { None };
                let anchors = if rng.gen_bool(0.6) {
                    ordered_anchors(rng, frame, None)
                } else {
                    [pick_on(rng), pick_on(rng), pick_on(rng)]
                };
                Template::HubDetour { x: pick_off(rng), anchors, via }
            }
            _ => {
                let a = frame.vertices()[0];
                let anchors = if rng.gen_bool(0.6) {
                    ordered_anchors(rng, frame, Some(a))
                } else {
                    [pick_on(rng), pick_on(rng), a]
                };
                Template::PathClosure { x: pick_off(rng), anchors }
            }
        }
    }

    /// Three distinct frame vertices in frame order; with `last`, that vertex
    /// closes the triple.
    fn ordered_anchors(rng: &mut impl Rng, frame: &Frame, last: Option<usize>) -> [usize; 3] {
        let ring = frame.ring();
        let start = last.unwrap_or_else(|| *frame.vertices().choose(rng).unwrap());
        if rng.gen_bool(0.5) {
            let step = frame.len() / 3;
            let (b, c) = (ring.succ_by(start, step), ring.succ_by(start, 2 * step));
            return match last {
                Some(a) => [b, c, a],
                None => [start, b, c],
            };
        }
        let others: Vec<usize> = frame.vertices().iter().copied().filter(|&v| v != start).collect();
        let mut two: Vec<usize> = others.choose_multiple(rng, 2).copied().collect();
        two.sort_by_key(|&v| ring.forward_distance(start, v));
        match last {
            Some(a) => [two[0], two[1], a],
            None => [start, two[0], two[1]],
        }
    }

    /// Independent check of a splice result: a cycle (or path with the
    /// frame's ends) of `g` longer than the frame.
    pub fn validate(g: &Graph, frame: &Frame, result: &Spliced) -> Result<(), String> {
        let vs = result.vertices();
        let mut sorted = vs.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != vs.len() || vs.iter().any(|&v| v >= g.order()) {
            return Err(format!("repeated or invalid vertex in {vs:?}"));
        }
        if vs.len() <= frame.len() {
            return Err(format!("{vs:?} is not longer than the frame"));
        }
        let steps = match (result, frame) {
            (Spliced::Cycle(_), Frame::Cycle(_)) => vs.len(),
            (Spliced::Path(_), Frame::Path(aug)) => {
                let (a, b) = (aug.path().first(), aug.path().last());
                if vs.first() != Some(&a) || vs.last() != Some(&b) {
                    return Err(format!("{vs:?} does not run from {a} to {b}"));
                }
                vs.len() - 1
            }
            _ => return Err("result kind does not match the frame".into()),
        };
        for i in 0..steps {
            let (u, v) = (vs[i], vs[(i + 1) % vs.len()]);
            if !g.has_edge(u, v) {
                return Err(format!("{u}{v} is not an edge in {vs:?}"));
            }
        }
        Ok(())
    }
}

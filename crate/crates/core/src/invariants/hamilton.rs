use super::{full_mask, masks, InvariantError};
use crate::graph::{BitIter, Graph, OrientedCycle, OrientedPath};

/// Tuning for the exact cycle and path solvers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolverConfig {
    /// Largest (component) order solved by the subset dynamic programme;
    /// larger inputs use pruned backtracking. Capped at 31.
    pub dp_limit: usize,
    /// Search nodes a backtracking probe may spend before a decision
    /// problem falls back to the dynamic programme.
    pub probe_budget: u64,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig { dp_limit: 22, probe_budget: 4096 }
    }
}

impl SolverConfig {
    pub const MAX_DP_LIMIT: usize = 31;

    fn uses_dp(&self, order: usize) -> bool {
        order <= self.dp_limit.min(Self::MAX_DP_LIMIT)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HamiltonConnectivity {
    Connected,
    /// The lexicographically first pair with no Hamiltonian path.
    FailingPair(usize, usize),
}

impl HamiltonConnectivity {
    pub fn holds(&self) -> bool {
        matches!(self, HamiltonConnectivity::Connected)
    }
}

/// Vertices reachable from `from` through `within` (excluding `from`).
fn reach(adj: &[u64], from: usize, within: u64) -> u64 {
    let mut seen = adj[from] & within;
    let mut frontier = seen;
    while frontier != 0 {
        let mut grown = 0;
        for v in BitIter(frontier) {
            grown |= adj[v];
        }
        frontier = grown & within & !seen;
        seen |= frontier;
    }
    seen
}

/// Paths from a fixed start over an allowed vertex set. Vertices are
/// renumbered so that the start is bit 0; `ends[mask >> 1]` is the set of
/// possible last vertices of a path covering exactly `mask`.
struct PathTable {
    verts: Vec<usize>,
    cadj: Vec<u32>,
    ends: Vec<u32>,
}

impl PathTable {
    fn build(adj: &[u64], allowed: u64, start: usize) -> Self {
        let mut verts = vec![start];
        verts.extend(BitIter(allowed & !(1u64 << start)));
        let m = verts.len();
        debug_assert!(m <= SolverConfig::MAX_DP_LIMIT);
        let mut index = [usize::MAX; 64];
        for (i, &v) in verts.iter().enumerate() {
            index[v] = i;
        }
        let cadj: Vec<u32> = verts
            .iter()
            .map(|&v| BitIter(adj[v] & allowed).fold(0u32, |acc, w| acc | 1 << index[w]))
            .collect();
        let mut ends = vec![0u32; 1 << (m - 1)];
        ends[0] = 1;
        for idx in 0..ends.len() {
            let here = ends[idx];
            if here == 0 {
                continue;
            }
            let mask = (idx as u32) << 1 | 1;
            for v in BitIter(here as u64) {
                for w in BitIter((cadj[v] & !mask) as u64) {
                    ends[((mask | 1 << w) >> 1) as usize] |= 1 << w;
                }
            }
        }
        PathTable { verts, cadj, ends }
    }

    fn full(&self) -> u32 {
        full_mask(self.verts.len()) as u32
    }

    fn ends(&self, mask: u32) -> u32 {
        self.ends[(mask >> 1) as usize]
    }

    fn local(&self, v: usize) -> Option<usize> {
        self.verts.iter().position(|&w| w == v)
    }

    /// Host vertices of a path covering `mask` and ending at local `end`,
    /// listed from the start.
    fn path(&self, mut mask: u32, mut end: usize) -> Vec<usize> {
        let mut rev = vec![self.verts[end]];
        while mask != 1 {
            mask &= !(1 << end);
            let options = self.ends(mask) & self.cadj[end];
            end = options.trailing_zeros() as usize;
            rev.push(self.verts[end]);
        }
        rev.reverse();
        rev
    }
}

enum Probe<T> {
    Found(T),
    Exhausted,
    OutOfBudget,
}

#[derive(Clone, Copy)]
enum Finish {
    /// Spanning path whose last vertex is adjacent to the start.
    Close,
    /// Spanning path ending at this vertex.
    At(usize),
}

/// Backtracking search for a spanning path with a prescribed finish.
struct SpanningSearch<'a> {
    adj: &'a [u64],
    all: u64,
    start: usize,
    finish: Finish,
    budget: Option<u64>,
    path: Vec<usize>,
}

impl<'a> SpanningSearch<'a> {
    fn run(adj: &'a [u64], n: usize, start: usize, finish: Finish, budget: Option<u64>) -> Probe<Vec<usize>> {
        let mut s = SpanningSearch { adj, all: full_mask(n), start, finish, budget, path: vec![start] };
        match s.dfs(1u64 << start) {
            Some(true) => Probe::Found(s.path),
            Some(false) => Probe::Exhausted,
            None => Probe::OutOfBudget,
        }
    }

    fn closing_ok(&self) -> u64 {
        match self.finish {
            Finish::Close => self.adj[self.start],
            Finish::At(b) => 1 << b,
        }
    }

    fn dfs(&mut self, visited: u64) -> Option<bool> {
        if let Some(b) = self.budget.as_mut() {
            if *b == 0 {
                return None;
            }
            *b -= 1;
        }
        let end = *self.path.last().expect("path starts non-empty");
        if visited == self.all {
            return Some(self.closing_ok() >> end & 1 == 1);
        }
        let rest = self.all & !visited;
        let closing = self.closing_ok();
        if closing & rest == 0 {
            return Some(false);
        }
        for w in BitIter(rest) {
            let bonus = (closing >> w & 1) as u32;
            if (self.adj[w] & (rest | 1 << end)).count_ones() + bonus < 2 {
                return Some(false);
            }
        }
        if reach(self.adj, end, rest) != rest {
            return Some(false);
        }
        let mut options = self.adj[end] & rest;
        if let Finish::At(b) = self.finish {
            if rest != 1 << b {
                options &= !(1 << b);
            }
        }
        let mut order: Vec<usize> = BitIter(options).collect();
        order.sort_by_key(|&w| (self.adj[w] & rest).count_ones());
        for w in order {
            self.path.push(w);
            match self.dfs(visited | 1 << w) {
                Some(false) => {
                    self.path.pop();
                }
                other => return other,
            }
        }
        Some(false)
    }
}

fn check_vertex(g: &Graph, v: usize) -> Result<(), InvariantError> {
    if v < g.order() {
        Ok(())
    } else {
        Err(InvariantError::VertexOutOfRange { vertex: v, n: g.order() })
    }
}

fn check_endpoints(g: &Graph, a: usize, b: usize) -> Result<(), InvariantError> {
    check_vertex(g, a)?;
    check_vertex(g, b)?;
    if a == b {
        return Err(InvariantError::SameEndpoints(a));
    }
    Ok(())
}

fn to_cycle(g: &Graph, vertices: Vec<usize>) -> OrientedCycle {
    OrientedCycle::new(g, vertices).expect("solver produced a valid cycle")
}

fn to_path(g: &Graph, vertices: Vec<usize>) -> OrientedPath {
    OrientedPath::new(g, vertices).expect("solver produced a valid path")
}

pub fn hamiltonian_cycle(g: &Graph) -> Result<Option<OrientedCycle>, InvariantError> {
    hamiltonian_cycle_with(g, &SolverConfig::default())
}

/// A Hamiltonian cycle starting at vertex 0, or `None`.
pub fn hamiltonian_cycle_with(g: &Graph, cfg: &SolverConfig) -> Result<Option<OrientedCycle>, InvariantError> {
    let n = g.order();
    if n < 3 {
        return Err(InvariantError::TooFewVertices { needed: 3, got: n });
    }
    let adj = masks(g)?;
    if adj.iter().any(|a| a.count_ones() < 2) || !g.is_connected() {
        return Ok(None);
    }
    let dp = cfg.uses_dp(n);
    let budget = dp.then_some(cfg.probe_budget);
    match SpanningSearch::run(&adj, n, 0, Finish::Close, budget) {
        Probe::Found(p) => return Ok(Some(to_cycle(g, p))),
        Probe::Exhausted => return Ok(None),
        Probe::OutOfBudget => {}
    }
    let table = PathTable::build(&adj, full_mask(n), 0);
    let closing = table.ends(table.full()) & table.cadj[0];
    Ok((closing != 0).then(|| to_cycle(g, table.path(table.full(), closing.trailing_zeros() as usize))))
}

pub fn hamiltonian_ab_path(g: &Graph, a: usize, b: usize) -> Result<Option<OrientedPath>, InvariantError> {
    hamiltonian_ab_path_with(g, a, b, &SolverConfig::default())
}

/// A Hamiltonian path from `a` to `b`, or `None`.
pub fn hamiltonian_ab_path_with(
    g: &Graph,
    a: usize,
    b: usize,
    cfg: &SolverConfig,
) -> Result<Option<OrientedPath>, InvariantError> {
    check_endpoints(g, a, b)?;
    let adj = masks(g)?;
    let n = g.order();
    Ok(spanning_ab(&adj, n, a, b, cfg).map(|p| to_path(g, p)))
}

fn spanning_ab(adj: &[u64], n: usize, a: usize, b: usize, cfg: &SolverConfig) -> Option<Vec<usize>> {
    let dp = cfg.uses_dp(n);
    match SpanningSearch::run(adj, n, a, Finish::At(b), dp.then_some(cfg.probe_budget)) {
        Probe::Found(p) => return Some(p),
        Probe::Exhausted => return None,
        Probe::OutOfBudget => {}
    }
    let table = PathTable::build(adj, full_mask(n), a);
    let lb = table.local(b).expect("b is allowed");
    (table.ends(table.full()) >> lb & 1 == 1).then(|| table.path(table.full(), lb))
}

pub fn is_hamiltonian_connected(g: &Graph) -> Result<HamiltonConnectivity, InvariantError> {
    is_hamiltonian_connected_with(g, &SolverConfig::default())
}

/// Whether every pair of distinct vertices is joined by a Hamiltonian path.
pub fn is_hamiltonian_connected_with(g: &Graph, cfg: &SolverConfig) -> Result<HamiltonConnectivity, InvariantError> {
    let n = g.order();
    if n < 2 {
        return Err(InvariantError::TooFewVertices { needed: 2, got: n });
    }
    let adj = masks(g)?;
    let dp = cfg.uses_dp(n);
    for a in 0..n {
        let mut table: Option<PathTable> = None;
        for b in a + 1..n {
            let probe = SpanningSearch::run(&adj, n, a, Finish::At(b), dp.then_some(cfg.probe_budget));
            let found = match probe {
                Probe::Found(_) => true,
                Probe::Exhausted => false,
                Probe::OutOfBudget => {
                    let t = table.get_or_insert_with(|| PathTable::build(&adj, full_mask(n), a));
                    let lb = t.local(b).expect("b is allowed");
                    t.ends(t.full()) >> lb & 1 == 1
                }
            };
            if !found {
                return Ok(HamiltonConnectivity::FailingPair(a, b));
            }
        }
    }
    Ok(HamiltonConnectivity::Connected)
}

pub fn longest_cycle(g: &Graph) -> Result<Option<OrientedCycle>, InvariantError> {
    longest_cycle_with(g, &SolverConfig::default())
}

/// A longest cycle, or `None` for a forest. Among cycles of maximum length
/// the one returned starts at its smallest vertex.
pub fn longest_cycle_with(g: &Graph, cfg: &SolverConfig) -> Result<Option<OrientedCycle>, InvariantError> {
    let n = g.order();
    let adj = masks(g)?;
    let mut best: Vec<usize> = Vec::new();
    for s in 0..n {
        if n - s <= best.len() || best.len() == n {
            break;
        }
        let above = full_mask(n) & !full_mask(s);
        let allowed = (reach(&adj, s, above) | 1 << s) & above;
        let m = allowed.count_ones() as usize;
        if m < 3 || m <= best.len() {
            continue;
        }
        if cfg.uses_dp(m) {
            let table = PathTable::build(&adj, allowed, s);
            let mut pick: Option<(u32, usize)> = None;
            let mut len = best.len() as u32;
            for idx in 0..table.ends.len() {
                let mask = (idx as u32) << 1 | 1;
                let size = mask.count_ones();
                if size < 3 || size <= len {
                    continue;
                }
                let closing = table.ends[idx] & table.cadj[0];
                if closing != 0 {
                    len = size;
                    pick = Some((mask, closing.trailing_zeros() as usize));
                }
            }
            if let Some((mask, end)) = pick {
                best = table.path(mask, end);
            }
        } else {
            let mut search = LongestSearch {
                adj: &adj,
                start: s,
                target: None,
                path: vec![s],
                best: std::mem::take(&mut best),
            };
            search.dfs(allowed & !(1 << s));
            best = search.best;
        }
    }
    Ok((!best.is_empty()).then(|| to_cycle(g, best)))
}

pub fn longest_ab_path(g: &Graph, a: usize, b: usize) -> Result<OrientedPath, InvariantError> {
    longest_ab_path_with(g, a, b, &SolverConfig::default())
}

/// A longest path from `a` to `b`.
pub fn longest_ab_path_with(g: &Graph, a: usize, b: usize, cfg: &SolverConfig) -> Result<OrientedPath, InvariantError> {
    check_endpoints(g, a, b)?;
    let adj = masks(g)?;
    let component = reach(&adj, a, full_mask(g.order())) | 1 << a;
    if component >> b & 1 == 0 {
        return Err(InvariantError::Disconnected { a, b });
    }
    let m = component.count_ones() as usize;
    let best = if cfg.uses_dp(m) {
        let table = PathTable::build(&adj, component, a);
        let lb = table.local(b).expect("b shares a's component");
        let mut pick: Option<u32> = None;
        for idx in 0..table.ends.len() {
            if table.ends[idx] >> lb & 1 == 1 {
                let mask = (idx as u32) << 1 | 1;
                if pick.is_none_or(|p| mask.count_ones() > p.count_ones()) {
                    pick = Some(mask);
                }
            }
        }
        table.path(pick.expect("a and b are connected"), lb)
    } else {
        let mut search = LongestSearch { adj: &adj, start: a, target: Some(b), path: vec![a], best: Vec::new() };
        search.dfs(component & !(1 << a));
        search.best
    };
    Ok(to_path(g, best))
}

/// Exhaustive longest cycle through `start` (target `None`) or longest
/// `start–target` path, pruned by the number of vertices still reachable.
struct LongestSearch<'a> {
    adj: &'a [u64],
    start: usize,
    target: Option<usize>,
    path: Vec<usize>,
    best: Vec<usize>,
}

impl LongestSearch<'_> {
    fn dfs(&mut self, rest: u64) {
        let end = *self.path.last().expect("path starts non-empty");
        match self.target {
            Some(t) if end == t => {
                if self.path.len() > self.best.len() {
                    self.best = self.path.clone();
                }
                return;
            }
            None => {
                if self.path.len() >= 3
                    && self.path.len() > self.best.len()
                    && self.adj[end] >> self.start & 1 == 1
                {
                    self.best = self.path.clone();
                }
            }
            _ => {}
        }
        let reachable = reach(self.adj, end, rest);
        match self.target {
            Some(t) if reachable >> t & 1 == 0 => return,
            None if reachable & self.adj[self.start] == 0 => return,
            _ => {}
        }
        if self.path.len() + reachable.count_ones() as usize <= self.best.len() {
            return;
        }
        for w in BitIter(self.adj[end] & rest) {
            self.path.push(w);
            self.dfs(rest & !(1 << w));
            self.path.pop();
        }
    }
}

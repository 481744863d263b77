//! One representative per isomorphism class, grown a vertex at a time.
//!
//! Every graph on `n` vertices is some graph on `n − 1` vertices plus a new
//! vertex joined to a subset of it, so extending each class representative
//! by every subset and keeping one graph per canonical form reaches all
//! classes. Connected graphs always have a vertex whose removal leaves them
//! connected, so the connected classes grow from connected classes alone.

use super::HarnessError;
use crate::graph::format::parse_graph6;
use crate::graph::{canonical_form, Graph};
use crate::invariants::vertex_connectivity;
use std::collections::BTreeSet;

/// Largest order enumerated without the long-run switch.
pub const DEFAULT_MAX_ORDER: usize = 9;
/// Largest order enumerated at all.
pub const LONG_RUN_MAX_ORDER: usize = 10;

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Filters {
    pub connected: bool,
    pub min_degree: Option<usize>,
    pub max_degree: Option<usize>,
    pub min_connectivity: Option<usize>,
}

impl Filters {
    pub fn accepts(&self, g: &Graph) -> bool {
        let degrees = || (0..g.order()).map(|v| g.degree(v));
        if self.connected && !g.is_connected() {
            return false;
        }
        if let Some(lo) = self.min_degree {
            if degrees().any(|d| d < lo) {
                return false;
            }
        }
        if let Some(hi) = self.max_degree {
            if degrees().any(|d| d > hi) {
                return false;
            }
        }
        match self.min_connectivity {
            Some(k) => vertex_connectivity(g) >= k,
            None => true,
        }
    }

    /// Short labels for reports, in a fixed order.
    pub fn labels(&self) -> Vec<String> {
        let mut out = Vec::new();
        if self.connected {
            out.push("connected".to_string());
        }
        if let Some(d) = self.min_degree {
            out.push(format!("min-degree>={d}"));
        }
        if let Some(d) = self.max_degree {
            out.push(format!("max-degree<={d}"));
        }
        if let Some(k) = self.min_connectivity {
            out.push(format!("connectivity>={k}"));
        }
        out
    }
}

/// The classes on `n` vertices meeting the filters, in canonical-form order.
#[derive(Debug, Clone)]
pub struct EnumerationStream {
    n: usize,
    filters: Filters,
    graphs: Vec<Graph>,
    next: usize,
}

impl EnumerationStream {
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn filters(&self) -> &Filters {
        &self.filters
    }

    pub fn len(&self) -> usize {
        self.graphs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.graphs.is_empty()
    }

    pub fn as_slice(&self) -> &[Graph] {
        &self.graphs
    }

    pub fn into_graphs(self) -> Vec<Graph> {
        self.graphs
    }

    /// The index range `[start, end)` of part `part` out of `parts`.
    pub fn partition(&self, part: usize, parts: usize) -> &[Graph] {
        let (start, end) = chunk(self.graphs.len(), part, parts);
        &self.graphs[start..end]
    }
}

impl Iterator for EnumerationStream {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        let g = self.graphs.get(self.next)?.clone();
        self.next += 1;
        Some(g)
    }
}

pub(crate) fn chunk(len: usize, part: usize, parts: usize) -> (usize, usize) {
    let parts = parts.max(1);
    (len * part / parts, len * (part + 1) / parts)
}

/// All classes on `n` vertices, `1 ≤ n ≤ DEFAULT_MAX_ORDER`.
pub fn enumerate_graphs(n: usize, filters: Filters) -> Result<EnumerationStream, HarnessError> {
    enumerate_graphs_with(n, filters, DEFAULT_MAX_ORDER, 1)
}

/// As [`enumerate_graphs`] with an explicit cap (at most
/// [`LONG_RUN_MAX_ORDER`]) and worker count.
pub fn enumerate_graphs_with(
    n: usize,
    filters: Filters,
    cap: usize,
    jobs: usize,
) -> Result<EnumerationStream, HarnessError> {
    let cap = cap.min(LONG_RUN_MAX_ORDER);
    if n == 0 || n > cap {
        return Err(HarnessError::OrderOutOfRange { n, cap });
    }
    let mut level = vec![Graph::empty(1)];
    for m in 2..=n {
        level = extend_level(&level, m, filters.connected, jobs);
    }
    if filters.connected {
        level.retain(Graph::is_connected);
    }
    let graphs = level.into_iter().filter(|g| filters.accepts(g)).collect();
    Ok(EnumerationStream { n, filters, graphs, next: 0 })
}

fn extend_level(parents: &[Graph], m: usize, connected: bool, jobs: usize) -> Vec<Graph> {
    let jobs = jobs.max(1);
    let parts: Vec<BTreeSet<Vec<u8>>> = std::thread::scope(|s| {
        let handles: Vec<_> = (0..jobs)
            .map(|part| {
                let (start, end) = chunk(parents.len(), part, jobs);
                let slice = &parents[start..end];
                s.spawn(move || {
                    let mut forms = BTreeSet::new();
                    for h in slice {
                        extend_one(h, m, connected, &mut forms);
                    }
                    forms
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("enumeration worker panicked")).collect()
    });
    let mut all = BTreeSet::new();
    for p in parts {
        all.extend(p);
    }
    all.into_iter().map(|form| parse_graph6(&form).expect("canonical forms are valid graph6")).collect()
}

fn extend_one(h: &Graph, m: usize, connected: bool, forms: &mut BTreeSet<Vec<u8>>) {
    let old = m - 1;
    let edges: Vec<(usize, usize)> = h.edges().collect();
    let first = if connected && old > 0 { 1u64 } else { 0 };
    for subset in first..1u64 << old {
        let mut all = edges.clone();
        all.extend((0..old).filter(|&v| subset >> v & 1 == 1).map(|v| (v, old)));
        let g = Graph::from_edge_list(m, &all).expect("new edges are distinct and in range");
        forms.insert(canonical_form(&g));
    }
}

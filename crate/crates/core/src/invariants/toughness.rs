use super::{full_mask, masks, max_independent_mask, InvariantError};
use crate::graph::{mask_to_vec, BitIter, Graph};
use num_rational::Ratio;
use std::fmt;

/// Exact toughness. Complete graphs have no separating set and are
/// `Infinite`; the derived order puts every finite value below it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Toughness {
    Finite(Ratio<u64>),
    Infinite,
}

impl Toughness {
    pub fn at_least(self, t: Ratio<u64>) -> bool {
        self >= Toughness::Finite(t)
    }

    pub fn exceeds(self, t: Ratio<u64>) -> bool {
        self > Toughness::Finite(t)
    }
}

impl fmt::Display for Toughness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Toughness::Finite(r) if *r.denom() == 1 => write!(f, "{}", r.numer()),
            Toughness::Finite(r) => write!(f, "{}/{}", r.numer(), r.denom()),
            Toughness::Infinite => f.write_str("inf"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ToughnessReport {
    pub value: Toughness,
    /// A separating set attaining the value; `None` for complete graphs.
    pub cut: Option<Vec<usize>>,
    /// ω(G − cut), at least 2 whenever `cut` is present.
    pub components: usize,
    /// The graph is disconnected and the value is the `0` convention.
    pub disconnected: bool,
}

/// Number of components of the subgraph induced by `rest`.
pub(crate) fn count_components(adj: &[u64], mut rest: u64) -> usize {
    let mut count = 0;
    while rest != 0 {
        let mut comp = rest & rest.wrapping_neg();
        let mut frontier = comp;
        while frontier != 0 {
            let mut grown = 0;
            for v in BitIter(frontier) {
                grown |= adj[v];
            }
            frontier = grown & rest & !comp;
            comp |= frontier;
        }
        rest &= !comp;
        count += 1;
    }
    count
}

/// All `size`-element subsets of `0..n` in increasing numeric order.
struct Subsets {
    next: Option<u128>,
    limit: u128,
}

impl Subsets {
    fn new(n: usize, size: usize) -> Self {
        let next = (size <= n).then(|| (1u128 << size) - 1);
        Subsets { next, limit: 1u128 << n }
    }
}

impl Iterator for Subsets {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        let x = self.next?;
        self.next = if x == 0 {
            None
        } else {
            let c = x & x.wrapping_neg();
            let r = x + c;
            let y = (((r ^ x) >> 2) / c) | r;
            (y < self.limit).then_some(y)
        };
        Some(x as u64)
    }
}

/// Exact toughness with an attaining cut. Subsets are scanned by size and
/// the scan stops once `|S| / min(n − |S|, α)` can no longer beat the best
/// ratio found.
pub fn toughness(g: &Graph) -> Result<ToughnessReport, InvariantError> {
    let n = g.order();
    if n == 0 {
        return Err(InvariantError::EmptyGraph);
    }
    let adj = masks(g)?;
    if g.is_complete() {
        return Ok(ToughnessReport {
            value: Toughness::Infinite,
            cut: None,
            components: 1,
            disconnected: false,
        });
    }
    let all = full_mask(n);
    let pieces = count_components(&adj, all);
    if pieces >= 2 {
        return Ok(ToughnessReport {
            value: Toughness::Finite(Ratio::from_integer(0)),
            cut: Some(Vec::new()),
            components: pieces,
            disconnected: true,
        });
    }
    let alpha = max_independent_mask(&adj, all).count_ones() as u64;
    let mut best: Option<(Ratio<u64>, u64, usize)> = None;
    for s in 1..n.saturating_sub(1) {
        if let Some((b, _, _)) = best {
            let most = alpha.min((n - s) as u64);
            if Ratio::new(s as u64, most) >= b {
                break;
            }
        }
        for cut in Subsets::new(n, s) {
            let omega = count_components(&adj, all & !cut);
            if omega < 2 {
                continue;
            }
            let ratio = Ratio::new(s as u64, omega as u64);
            if best.is_none_or(|(b, _, _)| ratio < b) {
                best = Some((ratio, cut, omega));
            }
        }
    }
    let (value, cut, components) = best.expect("a connected non-complete graph has a separating set");
    Ok(ToughnessReport {
        value: Toughness::Finite(value),
        cut: Some(mask_to_vec(cut)),
        components,
        disconnected: false,
    })
}

/// Whether `t · ω(G − S) ≤ |S|` for every `S` with `ω(G − S) ≥ 2`.
/// Stops at the first violating set.
pub fn is_t_tough(g: &Graph, t: Ratio<u64>) -> Result<bool, InvariantError> {
    let n = g.order();
    if n == 0 {
        return Err(InvariantError::EmptyGraph);
    }
    let adj = masks(g)?;
    if g.is_complete() {
        return Ok(true);
    }
    let all = full_mask(n);
    let (num, den) = (*t.numer(), *t.denom());
    for s in 0..n.saturating_sub(1) {
        // a violation needs t · (n − s) > s
        if num * (n - s) as u64 <= s as u64 * den {
            break;
        }
        for cut in Subsets::new(n, s) {
            let omega = count_components(&adj, all & !cut) as u64;
            if omega >= 2 && num * omega > s as u64 * den {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

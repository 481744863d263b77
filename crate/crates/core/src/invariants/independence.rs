use super::{masks, InvariantError};
use crate::graph::{mask_to_vec, BitIter, Graph};

/// α(G) with one maximum independent set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Independence {
    pub alpha: usize,
    pub witness: Vec<usize>,
}

pub fn independence_number(g: &Graph) -> Result<Independence, InvariantError> {
    let adj = masks(g)?;
    let best = max_independent_mask(&adj, super::full_mask(g.order()));
    Ok(Independence {
        alpha: best.count_ones() as usize,
        witness: mask_to_vec(best),
    })
}

/// Maximum independent subset of `candidates`, as a mask.
pub(crate) fn max_independent_mask(adj: &[u64], candidates: u64) -> u64 {
    let mut best = 0;
    branch(adj, candidates, 0, &mut best, u32::MAX);
    best
}

/// Some independent subset of `candidates` with at least `size` vertices,
/// stopping as soon as one is found.
pub(crate) fn independent_mask_of_size(adj: &[u64], candidates: u64, size: usize) -> Option<u64> {
    if (candidates.count_ones() as usize) < size {
        return None;
    }
    let mut best = 0;
    branch(adj, candidates, 0, &mut best, size as u32);
    (best.count_ones() as usize >= size).then_some(best)
}

/// Greedy clique cover size: an upper bound on α of the candidate set.
fn clique_cover(adj: &[u64], mut rest: u64) -> u32 {
    let mut cliques = 0;
    while rest != 0 {
        let mut open = rest;
        while open != 0 {
            let v = open.trailing_zeros() as usize;
            rest &= !(1 << v);
            open &= adj[v];
        }
        cliques += 1;
    }
    cliques
}

/// Returns `true` once `best` reaches `target`.
fn branch(adj: &[u64], mut cand: u64, mut current: u64, best: &mut u64, target: u32) -> bool {
    // isolated candidates always join
    for v in BitIter(cand) {
        if adj[v] & cand == 0 {
            current |= 1 << v;
            cand &= !(1 << v);
        }
    }
    if cand == 0 {
        if current.count_ones() > best.count_ones() {
            *best = current;
        }
        return best.count_ones() >= target;
    }
    if current.count_ones() + clique_cover(adj, cand) <= best.count_ones() {
        return false;
    }
    let pivot = BitIter(cand)
        .max_by_key(|&v| ((adj[v] & cand).count_ones(), std::cmp::Reverse(v)))
        .expect("non-empty candidate set");
    branch(adj, cand & !adj[pivot] & !(1 << pivot), current | (1 << pivot), best, target)
        || branch(adj, cand & !(1 << pivot), current, best, target)
}

//! Deterministic generators for the named graphs used as fixtures.
//!
//! Vertex numbering is fixed: blocks are numbered consecutively in the order
//! they are described, and any joined independent side comes last.

use crate::graph::Graph;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("{family}: {message}")]
    Parameter { family: &'static str, message: String },
    #[error("unknown family {0:?}")]
    Unknown(String),
}

fn param(family: &'static str, message: impl Into<String>) -> FamilyError {
    FamilyError::Parameter { family, message: message.into() }
}

/// The Kneser graph on the 2-subsets of `{1..5}`: subsets are numbered in
/// lexicographic order (`{1,2}` is 0, `{4,5}` is 9) and adjacent when
/// disjoint.
pub fn petersen() -> Graph {
    let pairs = kneser_pairs();
    let mut g = Graph::empty(10);
    for i in 0..10 {
        for j in i + 1..10 {
            let (a, b) = pairs[i];
            let (c, d) = pairs[j];
            if a != c && a != d && b != c && b != d {
                g.insert_edge(i, j);
            }
        }
    }
    g
}

/// The 2-subsets of `{1..5}` in the vertex order used by [`petersen`].
pub fn kneser_pairs() -> Vec<(usize, usize)> {
    (1..=5)
        .flat_map(|a| (a + 1..=5).map(move |b| (a, b)))
        .collect()
}

pub fn complete(n: usize) -> Result<Graph, FamilyError> {
    if n == 0 {
        return Err(param("complete", "needs at least one vertex"));
    }
    Ok(Graph::empty(n).complement())
}

pub fn cycle(n: usize) -> Result<Graph, FamilyError> {
    if n < 3 {
        return Err(param("cycle", format!("needs at least 3 vertices, got {n}")));
    }
    let mut g = Graph::empty(n);
    for i in 0..n {
        g.insert_edge(i, (i + 1) % n);
    }
    Ok(g)
}

pub fn path(n: usize) -> Result<Graph, FamilyError> {
    if n == 0 {
        return Err(param("path", "needs at least one vertex"));
    }
    let mut g = Graph::empty(n);
    for i in 1..n {
        g.insert_edge(i - 1, i);
    }
    Ok(g)
}

/// `K_{m,n}`: side one is `0..m`, side two is `m..m+n`.
pub fn complete_bipartite(m: usize, n: usize) -> Result<Graph, FamilyError> {
    if m == 0 || n == 0 {
        return Err(param("complete_bipartite", "both sides need at least one vertex"));
    }
    let a: Vec<usize> = (0..m).collect();
    let b: Vec<usize> = (m..m + n).collect();
    Ok(Graph::empty(m + n).join_all(&a, &b).expect("sides are disjoint"))
}

/// `K₂ ∪ kK₁`: the edge `01` plus isolated vertices `2..k+2`.
pub fn pattern(k: usize) -> Result<Graph, FamilyError> {
    if k == 0 {
        return Err(param("pattern", "k must be at least 1"));
    }
    let mut g = Graph::empty(k + 2);
    g.insert_edge(0, 1);
    Ok(g)
}

/// `G(k,l)` with its structural roles.
#[derive(Debug, Clone)]
pub struct GFamily {
    pub k: usize,
    pub l: usize,
    pub graph: Graph,
    /// The hub triangle `x₁x₂x₃`.
    pub hubs: [usize; 3],
    /// The three `K_{l+1}` blocks; `hub_blocks[i][0] == hubs[i]`.
    pub hub_blocks: [Vec<usize>; 3],
    /// The `k − 3` disjoint `K_l` blocks.
    pub side_blocks: Vec<Vec<usize>>,
    /// The independent set of `k − 2` vertices joined to everything else.
    pub y: Vec<usize>,
}

/// Three `K_{l+1}` blocks whose first vertices form a triangle, then `k − 3`
/// disjoint `K_l` blocks, then an independent set `Y` of size `k − 2`
/// completely joined to all earlier vertices. Non-hamiltonian, 1-tough,
/// `(k−2)`-connected, `α = k`, `δ = k + l − 3`.
pub fn g_family(k: usize, l: usize) -> Result<GFamily, FamilyError> {
    if k < 4 {
        return Err(param("g_family", format!("k must be at least 4, got {k}")));
    }
    if l < 1 {
        return Err(param("g_family", "l must be at least 1"));
    }
    let n = k * l + k + 1;
    let mut g = Graph::empty(n);
    let mut next = 0;
    let mut take = |count: usize| {
        let block: Vec<usize> = (next..next + count).collect();
        next += count;
        block
    };
    let hub_blocks = [take(l + 1), take(l + 1), take(l + 1)];
    let side_blocks: Vec<Vec<usize>> = (0..k - 3).map(|_| take(l)).collect();
    let y = take(k - 2);
    for block in hub_blocks.iter().chain(&side_blocks) {
        for (i, &u) in block.iter().enumerate() {
            for &v in &block[i + 1..] {
                g.insert_edge(u, v);
            }
        }
    }
    let hubs = [hub_blocks[0][0], hub_blocks[1][0], hub_blocks[2][0]];
    g.insert_edge(hubs[0], hubs[1]);
    g.insert_edge(hubs[1], hubs[2]);
    g.insert_edge(hubs[2], hubs[0]);
    let x_side: Vec<usize> = (0..y[0]).collect();
    let graph = g.join_all(&x_side, &y).expect("X and Y are disjoint");
    Ok(GFamily { k, l, graph, hubs, hub_blocks, side_blocks, y })
}

/// A family name plus integer parameters, as addressed from the command line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilySpec {
    Petersen,
    Complete(usize),
    Cycle(usize),
    Path(usize),
    CompleteBipartite(usize, usize),
    GFamily(usize, usize),
    Pattern(usize),
}

impl FamilySpec {
    /// Parses `name` and its parameters. Accepted names: `petersen`,
    /// `complete N`, `cycle N`, `path N`, `kbipartite M N`, `gfamily K L`,
    /// `pattern K`.
    pub fn parse(name: &str, params: &[usize]) -> Result<Self, FamilyError> {
        let arity = |want: usize, family: &'static str| {
            if params.len() == want {
                Ok(())
            } else {
                Err(param(family, format!("expects {want} parameter(s), got {}", params.len())))
            }
        };
        Ok(match name {
            "petersen" => {
                arity(0, "petersen")?;
                FamilySpec::Petersen
            }
            "complete" => {
                arity(1, "complete")?;
                FamilySpec::Complete(params[0])
            }
            "cycle" => {
                arity(1, "cycle")?;
                FamilySpec::Cycle(params[0])
            }
            "path" => {
                arity(1, "path")?;
                FamilySpec::Path(params[0])
            }
            "kbipartite" | "complete_bipartite" => {
                arity(2, "kbipartite")?;
                FamilySpec::CompleteBipartite(params[0], params[1])
            }
            "gfamily" | "g_family" => {
                arity(2, "gfamily")?;
                FamilySpec::GFamily(params[0], params[1])
            }
            "pattern" => {
                arity(1, "pattern")?;
                FamilySpec::Pattern(params[0])
            }
            other => return Err(FamilyError::Unknown(other.to_string())),
        })
    }

    pub fn build(&self) -> Result<Graph, FamilyError> {
        match *self {
            FamilySpec::Petersen => Ok(petersen()),
            FamilySpec::Complete(n) => complete(n),
            FamilySpec::Cycle(n) => cycle(n),
            FamilySpec::Path(n) => path(n),
            FamilySpec::CompleteBipartite(m, n) => complete_bipartite(m, n),
            FamilySpec::GFamily(k, l) => g_family(k, l).map(|f| f.graph),
            FamilySpec::Pattern(k) => pattern(k),
        }
    }
}

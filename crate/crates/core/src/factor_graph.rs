//! The graph of a transposition product: one vertex per entry, one edge per
//! factor. Minimal factorizations of a k-cycle are exactly the products whose
//! graph is a tree on the cycle's entries.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::perm::{compose, Permutation, SwapSequence, Transposition};

struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
            size: vec![1; n],
        }
    }

    fn root(&mut self, mut i: usize) -> usize {
        while self.parent[i] != i {
            self.parent[i] = self.parent[self.parent[i]];
            i = self.parent[i];
        }
        i
    }

    fn merge(&mut self, a: usize, b: usize) -> bool {
        let (mut ra, mut rb) = (self.root(a), self.root(b));
        if ra == rb {
            return false;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
        true
    }
}

/// Multigraph of a product. Vertices are sorted; edges keep multiplicity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorGraph {
    vertices: Vec<usize>,
    edges: BTreeMap<Transposition, usize>,
}

impl FactorGraph {
    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn edge_count(&self) -> usize {
        self.edges.values().sum()
    }

    pub fn multiplicity(&self, edge: &Transposition) -> usize {
        self.edges.get(edge).copied().unwrap_or(0)
    }

    /// Distinct edges with their multiplicities, in canonical order.
    pub fn edges(&self) -> impl Iterator<Item = (&Transposition, &usize)> {
        self.edges.iter()
    }

    /// Connected components as sorted vertex lists, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let index = |v: usize| self.vertices.binary_search(&v).unwrap();
        let mut uf = UnionFind::new(self.vertices.len());
        for t in self.edges.keys() {
            uf.merge(index(t.lo()), index(t.hi()));
        }
        let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (i, &v) in self.vertices.iter().enumerate() {
            groups.entry(uf.root(i)).or_default().push(v);
        }
        let mut comps: Vec<Vec<usize>> = groups.into_values().collect();
        comps.sort_by_key(|c| c[0]);
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }
}

pub fn build_factor_graph(seq: &SwapSequence) -> FactorGraph {
    let mut edges = BTreeMap::new();
    for t in seq.iter() {
        *edges.entry(*t).or_insert(0) += 1;
    }
    FactorGraph {
        vertices: seq.entries(),
        edges,
    }
}

/// Connected with exactly |V| - 1 edges (counted with multiplicity).
/// The empty graph is not a tree.
pub fn is_tree(g: &FactorGraph) -> bool {
    !g.vertices.is_empty() && g.edge_count() + 1 == g.vertices.len() && g.is_connected()
}

/// What the minimal-factorization lemma says about a product equal to a cycle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lemma1Report {
    pub cycle_length: usize,
    pub factor_count: usize,
    /// (a) at least k - 1 factors.
    pub length_bound_holds: bool,
    /// (b) for k - 1 factors: entry set equals the cycle's entries.
    pub entries_match: Option<bool>,
    /// (c) for k - 1 factors: the first factor of the form (a_i a_{i+1}), if any.
    pub adjacent_factor: Option<Option<Transposition>>,
    /// Whether the factor graph is a tree.
    pub graph_is_tree: bool,
}

impl Lemma1Report {
    /// True when (a) holds and, where they apply, (b) and (c) hold too.
    pub fn all_hold(&self) -> bool {
        self.length_bound_holds
            && self.entries_match.unwrap_or(true)
            && self.adjacent_factor.is_none_or(|f| f.is_some())
    }
}

pub fn check_lemma1(seq: &SwapSequence, cycle: &[usize]) -> Result<Lemma1Report> {
    let k = cycle.len();
    if k < 2 {
        return Err(Error::BadCycle);
    }
    let universe = seq
        .max_label()
        .max(cycle.iter().copied().max().unwrap_or(0));
    let target = Permutation::from_cycles(universe, &[cycle.to_vec()])?;
    if compose(seq, universe)? != target {
        return Err(Error::Precondition(format!(
            "{seq} does not compose to the given cycle"
        )));
    }
    let t = seq.len();
    let minimal = t == k - 1;
    let entries_match = minimal.then(|| {
        let mut v = cycle.to_vec();
        v.sort_unstable();
        seq.entries() == v
    });
    let adjacent_factor = minimal.then(|| {
        seq.iter().copied().find(|f| {
            cycle
                .windows(2)
                .any(|w| f.contains(w[0]) && f.contains(w[1]))
        })
    });
    Ok(Lemma1Report {
        cycle_length: k,
        factor_count: t,
        length_bound_holds: t + 1 >= k,
        entries_match,
        adjacent_factor,
        graph_is_tree: is_tree(&build_factor_graph(seq)),
    })
}

//! Exhaustive search used to certify minimality claims at small sizes.
//!
//! [`min_undo_search`] runs an iterative-deepening depth-first search over
//! ordered sequences of pairwise-distinct factors. Factors are tried in
//! canonical `(lo, hi)` order, so the first witness found at the minimal depth
//! is the lexicographically smallest one and the output is deterministic
//! whether or not the first-factor branches run in parallel.

use std::sync::atomic::{AtomicU64, Ordering};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::optimal::optimal_undo;
use crate::perm::{compose, tr, Parity, Permutation, SwapSequence, Transposition, UndoPlan};

pub const DEFAULT_BUDGET: u64 = 100_000_000;

/// Most factors a search can draw from (the used set is a `u128` mask).
pub const MAX_ALLOWED: usize = 128;

#[derive(Debug, Clone)]
pub struct SearchSpec {
    target: Permutation,
    allowed: Vec<Transposition>,
    max_length: usize,
    universe: usize,
}

impl SearchSpec {
    /// `allowed` is sorted and deduplicated.
    pub fn new(
        target: Permutation,
        mut allowed: Vec<Transposition>,
        max_length: usize,
        universe: usize,
    ) -> Result<Self> {
        if target.universe() > universe {
            return Err(Error::Precondition(format!(
                "target acts on {} labels but the universe has {universe}",
                target.universe()
            )));
        }
        allowed.sort_unstable();
        allowed.dedup();
        if let Some(t) = allowed.iter().find(|t| t.hi() > universe) {
            return Err(Error::LabelOutOfRange {
                label: t.hi(),
                universe,
            });
        }
        if allowed.len() > MAX_ALLOWED {
            return Err(Error::Unsupported(format!(
                "{} candidate factors; at most {MAX_ALLOWED} are supported",
                allowed.len()
            )));
        }
        Ok(SearchSpec {
            target,
            allowed,
            max_length,
            universe,
        })
    }

    pub fn target(&self) -> &Permutation {
        &self.target
    }

    pub fn allowed(&self) -> &[Transposition] {
        &self.allowed
    }

    pub fn max_length(&self) -> usize {
        self.max_length
    }

    pub fn universe(&self) -> usize {
        self.universe
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchConfig {
    /// Visited-node limit across all depths; exceeding it is an error.
    pub budget: u64,
    /// Skip depths whose parity differs from the target's.
    pub parity_pruning: bool,
    /// Cut branches that cannot reach the identity in the remaining depth.
    pub distance_pruning: bool,
    /// Explore first-factor branches on the rayon pool.
    pub parallel: bool,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            budget: DEFAULT_BUDGET,
            parity_pruning: true,
            distance_pruning: true,
            parallel: true,
        }
    }
}

impl SearchConfig {
    /// Plain enumeration: no pruning, single thread.
    pub fn exhaustive() -> Self {
        SearchConfig {
            parity_pruning: false,
            distance_pruning: false,
            parallel: false,
            ..SearchConfig::default()
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SearchStats {
    /// Nodes visited over all iterations.
    pub nodes: u64,
    /// Nodes visited in the deepest iteration.
    pub last_depth_nodes: u64,
    /// Deepest length limit explored.
    pub depth_reached: usize,
}

#[derive(Debug, Clone)]
pub struct SearchResult {
    /// Shortest undo found, or `None` when none exists within the bound.
    pub plan: Option<UndoPlan>,
    pub stats: SearchStats,
}

/// The permutation still to be cancelled, with its inverse for O(1) updates.
#[derive(Clone)]
struct Remainder {
    images: Vec<u8>,
    inverse: Vec<u8>,
}

impl Remainder {
    fn new(p: &Permutation) -> Self {
        let images: Vec<u8> = p.images().iter().map(|&v| (v - 1) as u8).collect();
        let mut inverse = vec![0u8; images.len()];
        for (i, &v) in images.iter().enumerate() {
            inverse[v as usize] = i as u8;
        }
        Remainder { images, inverse }
    }

    /// Left-multiplies by the transposition `(a b)` (0-based); self-inverse.
    fn swap_values(&mut self, a: u8, b: u8) {
        let pa = self.inverse[a as usize];
        let pb = self.inverse[b as usize];
        self.images[pa as usize] = b;
        self.images[pb as usize] = a;
        self.inverse[a as usize] = pb;
        self.inverse[b as usize] = pa;
    }

    fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, &v)| i == v as usize)
    }

    /// Fewest transpositions whose product is this permutation.
    fn distance(&self) -> usize {
        let n = self.images.len();
        let mut seen = [false; 256];
        let mut cycles = 0;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            cycles += 1;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.images[i] as usize;
            }
        }
        n - cycles
    }
}

struct Searcher<'a> {
    factors: Vec<(u8, u8)>,
    config: &'a SearchConfig,
    nodes: &'a AtomicU64,
}

impl Searcher<'_> {
    fn visit(&self) -> Result<()> {
        if self.nodes.fetch_add(1, Ordering::Relaxed) >= self.config.budget {
            return Err(Error::BudgetExceeded(self.config.budget));
        }
        Ok(())
    }

    fn dfs(
        &self,
        rem: &mut Remainder,
        left: usize,
        used: u128,
        path: &mut Vec<usize>,
    ) -> Result<bool> {
        self.visit()?;
        if left == 0 {
            return Ok(rem.is_identity());
        }
        if self.config.distance_pruning || self.config.parity_pruning {
            let d = rem.distance();
            if self.config.distance_pruning && d > left {
                return Ok(false);
            }
            if self.config.parity_pruning && (left + d) % 2 == 1 {
                return Ok(false);
            }
        }
        for (i, &(a, b)) in self.factors.iter().enumerate() {
            if used & (1u128 << i) != 0 {
                continue;
            }
            rem.swap_values(a, b);
            path.push(i);
            if self.dfs(rem, left - 1, used | (1u128 << i), path)? {
                rem.swap_values(a, b);
                return Ok(true);
            }
            path.pop();
            rem.swap_values(a, b);
        }
        Ok(false)
    }

    /// Searches sequences of exactly `length` factors; returns factor indices.
    fn at_depth(&self, start: &Remainder, length: usize) -> Result<Option<Vec<usize>>> {
        if length == 0 || !self.config.parallel {
            let mut rem = start.clone();
            let mut path = Vec::with_capacity(length);
            return Ok(self.dfs(&mut rem, length, 0, &mut path)?.then_some(path));
        }
        self.visit()?;
        if self.config.distance_pruning && start.distance() > length {
            return Ok(None);
        }
        let found = (0..self.factors.len())
            .into_par_iter()
            .map(|i| -> Result<Option<Vec<usize>>> {
                let (a, b) = self.factors[i];
                let mut rem = start.clone();
                rem.swap_values(a, b);
                let mut path = vec![i];
                Ok(self
                    .dfs(&mut rem, length - 1, 1u128 << i, &mut path)?
                    .then_some(path))
            })
            .find_map_first(|r| match r {
                Ok(None) => None,
                other => Some(other),
            });
        found.unwrap_or(Ok(None))
    }
}

/// Shortest product of distinct allowed factors that undoes `spec.target`,
/// i.e. composes to its inverse. Lengths `0..=max_length` are tried in order.
pub fn min_undo_search(spec: &SearchSpec, config: &SearchConfig) -> Result<SearchResult> {
    let universe = spec.universe;
    let target = spec.target.extended(universe);
    let start = Remainder::new(&target.inverse());
    let nodes = AtomicU64::new(0);
    let searcher = Searcher {
        factors: spec
            .allowed
            .iter()
            .map(|t| ((t.lo() - 1) as u8, (t.hi() - 1) as u8))
            .collect(),
        config,
        nodes: &nodes,
    };
    let parity = target.parity();
    let mut stats = SearchStats::default();
    let limit = spec.max_length.min(spec.allowed.len());
    for length in 0..=limit {
        if config.parity_pruning && Parity::of_count(length) != parity {
            continue;
        }
        let before = nodes.load(Ordering::Relaxed);
        let found = searcher.at_depth(&start, length)?;
        stats.nodes = nodes.load(Ordering::Relaxed);
        stats.last_depth_nodes = stats.nodes - before;
        stats.depth_reached = length;
        if let Some(path) = found {
            let sequence = SwapSequence::new(path.iter().map(|&i| spec.allowed[i]).collect());
            let base = spec.target.universe();
            let outsiders: Vec<usize> = sequence
                .entries()
                .into_iter()
                .filter(|&a| a > base)
                .collect();
            let plan = UndoPlan::verified_against(sequence, outsiders, universe, &target)?;
            return Ok(SearchResult {
                plan: Some(plan),
                stats,
            });
        }
    }
    Ok(SearchResult { plan: None, stats })
}

/// Every transposition of `S_universe`, in canonical order.
pub fn all_transpositions(universe: usize) -> Vec<Transposition> {
    (1..=universe)
        .flat_map(|a| (a + 1..=universe).map(move |b| tr(a, b)))
        .collect()
}

/// Transpositions of `S_{N+2}` containing `N + 1` or `N + 2`.
pub fn outsider_touching_factors(base_universe: usize) -> Vec<Transposition> {
    let (x, y) = (base_universe + 1, base_universe + 2);
    all_transpositions(base_universe + 2)
        .into_iter()
        .filter(|t| t.contains(x) || t.contains(y))
        .collect()
}

/// Factors available to undo `scramble` with `outsiders` fresh labels.
pub fn free_factors(
    scramble: &SwapSequence,
    base_universe: usize,
    outsiders: usize,
) -> Vec<Transposition> {
    let used = scramble.factor_set();
    all_transpositions(base_universe + outsiders)
        .into_iter()
        .filter(|t| !used.contains(t))
        .collect()
}

/// Shortest undo of `scramble` using `outsiders` fresh labels above
/// `base_universe`. `max_length` defaults to the number of free factors.
pub fn min_undo_for_scramble(
    scramble: &SwapSequence,
    base_universe: usize,
    outsiders: usize,
    max_length: Option<usize>,
    config: &SearchConfig,
) -> Result<SearchResult> {
    let target = compose(scramble, base_universe)?;
    let allowed = free_factors(scramble, base_universe, outsiders);
    let bound = max_length.unwrap_or(allowed.len());
    let spec = SearchSpec::new(target, allowed, bound, base_universe + outsiders)?;
    min_undo_search(&spec, config)
}

#[derive(Debug, Clone)]
pub struct OutsiderLevel {
    pub outsiders: usize,
    pub free_factors: usize,
    /// `None` when the level was settled by construction rather than search.
    pub stats: Option<SearchStats>,
    pub found: bool,
}

#[derive(Debug, Clone)]
pub struct OutsiderReport {
    pub outsiders: usize,
    pub witness: UndoPlan,
    pub levels: Vec<OutsiderLevel>,
}

/// Fewest outsiders (0, 1 or 2) needed to undo `scramble`, with a witness.
///
/// Levels 0 and 1 are searched exhaustively up to `max_length` (default: all
/// free factors). Two outsiders always suffice, so level 2 is answered by
/// [`optimal_undo`].
pub fn min_outsiders(
    scramble: &SwapSequence,
    base_universe: usize,
    max_length: Option<usize>,
    config: &SearchConfig,
) -> Result<OutsiderReport> {
    let target = compose(scramble, base_universe)?;
    if target.is_identity() {
        return Err(Error::IdentityInput);
    }
    let mut levels = Vec::new();
    for j in 0..2 {
        let result = min_undo_for_scramble(scramble, base_universe, j, max_length, config)?;
        levels.push(OutsiderLevel {
            outsiders: j,
            free_factors: free_factors(scramble, base_universe, j).len(),
            stats: Some(result.stats),
            found: result.plan.is_some(),
        });
        if let Some(witness) = result.plan {
            return Ok(OutsiderReport {
                outsiders: j,
                witness,
                levels,
            });
        }
    }
    let witness = optimal_undo(&target)?;
    levels.push(OutsiderLevel {
        outsiders: 2,
        free_factors: free_factors(scramble, base_universe, 2).len(),
        stats: None,
        found: true,
    });
    Ok(OutsiderReport {
        outsiders: 2,
        witness,
        levels,
    })
}

/// All ordered products of `length` distinct transpositions of
/// `S_target.universe()` equal to `target`. Plain enumeration, no pruning.
pub fn enumerate_factorizations(target: &Permutation, length: usize) -> Vec<SwapSequence> {
    fn walk(
        all: &[Transposition],
        target: &Permutation,
        left: usize,
        used: &mut Vec<bool>,
        path: &mut Vec<Transposition>,
        out: &mut Vec<SwapSequence>,
    ) {
        if left == 0 {
            let seq = SwapSequence::new(path.clone());
            if compose(&seq, target.universe()).as_ref() == Ok(target) {
                out.push(seq);
            }
            return;
        }
        for (i, t) in all.iter().enumerate() {
            if used[i] {
                continue;
            }
            used[i] = true;
            path.push(*t);
            walk(all, target, left - 1, used, path, out);
            path.pop();
            used[i] = false;
        }
    }
    let all = all_transpositions(target.universe());
    let mut out = Vec::new();
    if length <= all.len() {
        let mut used = vec![false; all.len()];
        walk(&all, target, length, &mut used, &mut Vec::new(), &mut out);
    }
    out
}

/// All products of exactly `k - 1` distinct transpositions of
/// `S_universe` equal to the cycle `(a1 ... ak)`.
pub fn enumerate_min_factorizations(cycle: &[usize], universe: usize) -> Result<Vec<SwapSequence>> {
    let k = cycle.len();
    if !(2..=6).contains(&k) {
        return Err(Error::Unsupported(format!(
            "cycle length {k}; supported 2..=6"
        )));
    }
    if universe > 7 {
        return Err(Error::Unsupported(format!(
            "universe {universe}; supported up to 7"
        )));
    }
    let target = Permutation::from_cycles(universe, &[cycle.to_vec()])?;
    Ok(enumerate_factorizations(&target, k - 1))
}

//! The identity as a product of `m` distinct transpositions in `S_n`.
//!
//! Such a word exists iff `m` is even and `6 <= m <= C(n, 2)`. Words are grown
//! from the six-factor base word in `S_4` by f-expansion: replacing a factor
//! `(ab)` by `(ac)(ab)(bc)` keeps the permutation and adds two factors.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::perm::{compose, tr, SwapSequence, Transposition};

/// Number of transpositions in `S_n`.
pub fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

pub fn feasible(m: usize, n: usize) -> bool {
    m.is_multiple_of(2) && m >= 6 && m <= pair_count(n)
}

fn infeasibility(m: usize, n: usize) -> Option<String> {
    if m % 2 == 1 {
        Some(format!(
            "m = {m} is odd; the identity is never a product of an odd number of transpositions"
        ))
    } else if m < 6 {
        Some(format!(
            "m = {m} is below 6; no identity word of length 0, 2 or 4 uses distinct factors"
        ))
    } else if m > pair_count(n) {
        Some(format!("m = {m} exceeds C({n}, 2) = {}", pair_count(n)))
    } else {
        None
    }
}

/// `(ac)(ab)(bc)` in place of the factor at `index`.
pub fn f_expand(word: &SwapSequence, index: usize, c: usize) -> Result<SwapSequence> {
    let factors = word.factors();
    let ab = *factors.get(index).ok_or(Error::IndexOutOfRange {
        index,
        len: factors.len(),
    })?;
    if c == 0 {
        return Err(Error::ZeroLabel);
    }
    if ab.contains(c) {
        return Err(Error::Collision(c));
    }
    let (a, b) = (ab.lo(), ab.hi());
    let ac = tr(a, c);
    let bc = tr(b, c);
    for t in [ac, bc] {
        if word.contains(&t) {
            return Err(Error::DuplicateFactor(t));
        }
    }
    let mut out = Vec::with_capacity(factors.len() + 2);
    out.extend_from_slice(&factors[..index]);
    out.extend([ac, ab, bc]);
    out.extend_from_slice(&factors[index + 1..]);
    Ok(SwapSequence::new(out))
}

/// A verified identity word of length `m` in `S_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityWord {
    word: SwapSequence,
    m: usize,
    n: usize,
}

impl IdentityWord {
    pub fn word(&self) -> &SwapSequence {
        &self.word
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }
}

/// One f-expansion step: the factor at `index` is replaced using label `c`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Expansion {
    pub index: usize,
    pub c: usize,
}

pub fn base_word() -> SwapSequence {
    SwapSequence::new(vec![
        tr(1, 2),
        tr(2, 3),
        tr(1, 4),
        tr(1, 3),
        tr(2, 4),
        tr(3, 4),
    ])
}

/// Expansions taking the base word to all 28 transpositions of `S_8`, as
/// `(a, b, c)`: expand factor `(ab)` with label `c`. Step `i` yields the word
/// of length `8 + 2i`.
const PINNED: [(usize, usize, usize); 11] = [
    (1, 2, 5),
    (3, 4, 5),
    (2, 3, 6),
    (4, 5, 6),
    (1, 2, 7),
    (3, 4, 7),
    (5, 6, 7),
    (2, 3, 8),
    (4, 5, 8),
    (6, 7, 8),
    (6, 8, 1),
];

/// Smallest `n` with `C(n, 2) >= m`.
fn smallest_universe(m: usize) -> usize {
    (2..).find(|&n| pair_count(n) >= m).unwrap()
}

/// The expansion schedule [`identity_word`] applies to [`base_word`].
///
/// Words of length up to 28 follow the pinned table. Longer words continue
/// from the saturated `S_8` word: each new label `c` is paired with existing
/// factors left to right; when no factor admits `c`, any other label that
/// still has two unused pairs is tried. Should that greedy pass stall, a
/// bounded backtracking search over all expansions takes over.
pub fn expansion_schedule(m: usize, n: usize) -> Result<Vec<Expansion>> {
    if let Some(reason) = infeasibility(m, n) {
        return Err(Error::Infeasible(reason));
    }
    let target = smallest_universe(m);
    let steps = (m - 6) / 2;
    let mut word = base_word();
    let mut schedule = Vec::with_capacity(steps);
    for &(a, b, c) in PINNED.iter().take(steps) {
        let index = word.factors().iter().position(|t| *t == tr(a, b)).unwrap();
        word = f_expand(&word, index, c)?;
        schedule.push(Expansion { index, c });
    }
    if schedule.len() == steps {
        return Ok(schedule);
    }

    let pinned = schedule;
    let mut state = Growth::new(word.clone(), target);
    let mut schedule = pinned.clone();
    for c in 9..=target {
        while state.len() < m && state.has_unused_pair_with(c) {
            let step = state
                .moves_with_label(c)
                .next()
                .or_else(|| (1..c).find_map(|other| state.moves_with_label(other).next()));
            let Some(e) = step else { break };
            state.apply(e);
            schedule.push(e);
        }
    }
    if state.len() < m {
        let mut state = Growth::new(word, target);
        let mut extra = Vec::new();
        let mut budget = BACKTRACK_BUDGET;
        if !state.backtrack(m, &mut extra, &mut budget) {
            return Err(Error::Infeasible(format!(
                "expansion search for m = {m} in S_{target} did not finish"
            )));
        }
        schedule = pinned;
        schedule.extend(extra);
    }
    Ok(schedule)
}

const BACKTRACK_BUDGET: u64 = 1_000_000;

struct Growth {
    factors: Vec<Transposition>,
    used: HashSet<Transposition>,
    universe: usize,
}

impl Growth {
    fn new(word: SwapSequence, universe: usize) -> Self {
        let used = word.factor_set();
        Growth {
            factors: word.into_factors(),
            used,
            universe,
        }
    }

    fn len(&self) -> usize {
        self.factors.len()
    }

    fn has_unused_pair_with(&self, c: usize) -> bool {
        (1..=self.universe).any(|a| a != c && !self.used.contains(&tr(a, c)))
    }

    fn admits(&self, t: &Transposition, c: usize) -> bool {
        !t.contains(c) && !self.used.contains(&tr(t.lo(), c)) && !self.used.contains(&tr(t.hi(), c))
    }

    fn moves_with_label(&self, c: usize) -> impl Iterator<Item = Expansion> + '_ {
        self.factors
            .iter()
            .enumerate()
            .filter(move |(_, t)| self.admits(t, c))
            .map(move |(index, _)| Expansion { index, c })
    }

    fn apply(&mut self, e: Expansion) {
        let ab = self.factors[e.index];
        let (ac, bc) = (tr(ab.lo(), e.c), tr(ab.hi(), e.c));
        self.factors.splice(e.index..=e.index, [ac, ab, bc]);
        self.used.insert(ac);
        self.used.insert(bc);
    }

    fn undo(&mut self, e: Expansion) {
        let ac = self.factors[e.index];
        let ab = self.factors[e.index + 1];
        let bc = self.factors[e.index + 2];
        self.factors.splice(e.index..e.index + 3, [ab]);
        self.used.remove(&ac);
        self.used.remove(&bc);
    }

    fn backtrack(&mut self, m: usize, path: &mut Vec<Expansion>, budget: &mut u64) -> bool {
        if self.len() >= m {
            return true;
        }
        let moves: Vec<Expansion> = (1..=self.universe)
            .rev()
            .flat_map(|c| self.moves_with_label(c).collect::<Vec<_>>())
            .collect();
        for e in moves {
            if *budget == 0 {
                return false;
            }
            *budget -= 1;
            self.apply(e);
            path.push(e);
            if self.backtrack(m, path, budget) {
                return true;
            }
            path.pop();
            self.undo(e);
        }
        false
    }
}

/// An identity word of length `m` in `S_n`, built in the smallest symmetric
/// group that can hold it. Matches the hand-derived words through `S_8`.
pub fn identity_word(m: usize, n: usize) -> Result<IdentityWord> {
    let mut word = base_word();
    for e in expansion_schedule(m, n)? {
        word = f_expand(&word, e.index, e.c)?;
    }
    if word.len() != m || !word.is_distinct() || word.max_label() > n {
        return Err(Error::VerificationFailed(format!(
            "{word} is not a word of length {m} in S_{n}"
        )));
    }
    if !compose(&word, n)?.is_identity() {
        return Err(Error::VerificationFailed(format!(
            "{word} is not the identity"
        )));
    }
    Ok(IdentityWord { word, m, n })
}

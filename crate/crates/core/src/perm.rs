//! Permutation algebra over 1-based body labels.
//!
//! A [`SwapSequence`] is a formal product of transpositions written in
//! textual order. Products compose right to left, so the rightmost factor is
//! the first swap to happen and `(12)(23)` is the cycle `(123)`.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// An unordered pair of distinct bodies, stored with `lo < hi`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Transposition {
    lo: usize,
    hi: usize,
}

impl Transposition {
    /// Builds `(a b)`; the argument order does not matter.
    pub fn new(a: usize, b: usize) -> Result<Self> {
        if a == 0 || b == 0 {
            return Err(Error::ZeroLabel);
        }
        if a == b {
            return Err(Error::DegenerateTransposition(a));
        }
        Ok(Transposition {
            lo: a.min(b),
            hi: a.max(b),
        })
    }

    pub fn lo(&self) -> usize {
        self.lo
    }

    pub fn hi(&self) -> usize {
        self.hi
    }

    pub fn contains(&self, label: usize) -> bool {
        self.lo == label || self.hi == label
    }

    /// Image of `label` under this transposition.
    pub fn apply(&self, label: usize) -> usize {
        if label == self.lo {
            self.hi
        } else if label == self.hi {
            self.lo
        } else {
            label
        }
    }

    /// The entry other than `label`, if `label` is one of the two.
    pub fn partner(&self, label: usize) -> Option<usize> {
        if label == self.lo {
            Some(self.hi)
        } else if label == self.hi {
            Some(self.lo)
        } else {
            None
        }
    }
}

impl fmt::Display for Transposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.hi < 10 {
            write!(f, "({}{})", self.lo, self.hi)
        } else {
            write!(f, "({},{})", self.lo, self.hi)
        }
    }
}

/// Shorthand for tests and constructions whose labels are known valid.
pub(crate) fn tr(a: usize, b: usize) -> Transposition {
    Transposition::new(a, b).expect("valid transposition")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of_count(count: usize) -> Self {
        if count.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

/// A formal product of transpositions in textual order.
///
/// The chronological order of the swaps is the reverse of `factors`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct SwapSequence {
    factors: Vec<Transposition>,
}

impl SwapSequence {
    pub fn new(factors: Vec<Transposition>) -> Self {
        SwapSequence { factors }
    }

    pub fn empty() -> Self {
        SwapSequence::default()
    }

    pub fn from_pairs(pairs: &[(usize, usize)]) -> Result<Self> {
        pairs
            .iter()
            .map(|&(a, b)| Transposition::new(a, b))
            .collect::<Result<Vec<_>>>()
            .map(SwapSequence::new)
    }

    pub fn factors(&self) -> &[Transposition] {
        &self.factors
    }

    pub fn into_factors(self) -> Vec<Transposition> {
        self.factors
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Transposition> {
        self.factors.iter()
    }

    pub fn push(&mut self, t: Transposition) {
        self.factors.push(t);
    }

    /// Concatenation `self · other` (other's factors act first).
    pub fn then_left_of(&self, other: &SwapSequence) -> SwapSequence {
        let mut factors = self.factors.clone();
        factors.extend_from_slice(&other.factors);
        SwapSequence { factors }
    }

    pub fn reversed(&self) -> SwapSequence {
        SwapSequence {
            factors: self.factors.iter().rev().copied().collect(),
        }
    }

    /// Swaps in the order they happen: rightmost factor first.
    pub fn chronological(&self) -> impl Iterator<Item = &Transposition> {
        self.factors.iter().rev()
    }

    pub fn contains(&self, t: &Transposition) -> bool {
        self.factors.contains(t)
    }

    pub fn factor_set(&self) -> HashSet<Transposition> {
        self.factors.iter().copied().collect()
    }

    pub fn is_distinct(&self) -> bool {
        let mut seen = HashSet::with_capacity(self.factors.len());
        self.factors.iter().all(|t| seen.insert(*t))
    }

    /// Largest label occurring in any factor, 0 for the empty product.
    pub fn max_label(&self) -> usize {
        self.factors.iter().map(|t| t.hi).max().unwrap_or(0)
    }

    /// Sorted set of entries occurring in the product.
    pub fn entries(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.factors.iter().flat_map(|t| [t.lo, t.hi]).collect();
        v.sort_unstable();
        v.dedup();
        v
    }
}

impl fmt::Display for SwapSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "I");
        }
        for t in &self.factors {
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

impl FromStr for SwapSequence {
    type Err = Error;

    /// Parses cycle-style words such as `(12)(23)` or `(2,10)(1,10)`.
    /// Without a comma each character inside the parentheses is one label.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "I" {
            return Ok(SwapSequence::empty());
        }
        let bad = |message: &str| Error::Parse {
            line: 1,
            message: message.to_string(),
        };
        let mut factors = Vec::new();
        let mut rest = s;
        while !rest.is_empty() {
            rest = rest.trim_start();
            let inner_end = rest.find(')').ok_or_else(|| bad("unclosed factor"))?;
            let group = rest.strip_prefix('(').ok_or_else(|| bad("expected '('"))?;
            let inner = &group[..inner_end - 1];
            let labels: Vec<usize> = if inner.contains(',') {
                inner
                    .split(',')
                    .map(|p| p.trim().parse::<usize>().map_err(|_| bad("bad label")))
                    .collect::<Result<_>>()?
            } else {
                inner
                    .chars()
                    .filter(|c| !c.is_whitespace())
                    .map(|c| {
                        c.to_digit(10)
                            .map(|d| d as usize)
                            .ok_or_else(|| bad("bad label"))
                    })
                    .collect::<Result<_>>()?
            };
            if labels.len() != 2 {
                return Err(bad("a factor needs exactly two labels"));
            }
            factors.push(Transposition::new(labels[0], labels[1])?);
            rest = &rest[inner_end + 1..];
        }
        Ok(SwapSequence::new(factors))
    }
}

/// A bijection on `1..=N`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    // images[i] is the image of label i + 1
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(universe: usize) -> Self {
        Permutation {
            images: (1..=universe).collect(),
        }
    }

    /// `mapping[i]` is the image of label `i + 1`.
    pub fn from_images(mapping: Vec<usize>) -> Result<Self> {
        let n = mapping.len();
        let mut seen = vec![false; n + 1];
        for &v in &mapping {
            if v == 0 || v > n || seen[v] {
                return Err(Error::NotBijection(n));
            }
            seen[v] = true;
        }
        Ok(Permutation { images: mapping })
    }

    /// Product of disjoint cycles, each `(a1 a2 ... ak)` sending `a1` to `a2`.
    pub fn from_cycles(universe: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<usize> = (1..=universe).collect();
        let mut touched = vec![false; universe + 1];
        for cycle in cycles {
            for (i, &a) in cycle.iter().enumerate() {
                if a == 0 {
                    return Err(Error::ZeroLabel);
                }
                if a > universe {
                    return Err(Error::LabelOutOfRange { label: a, universe });
                }
                if touched[a] {
                    return Err(Error::NotBijection(universe));
                }
                touched[a] = true;
                images[a - 1] = cycle[(i + 1) % cycle.len()];
            }
        }
        Ok(Permutation { images })
    }

    pub fn universe(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, label: usize) -> usize {
        self.images[label - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v - 1] = i + 1;
        }
        Permutation { images }
    }

    /// `self ∘ other`: apply `other` first. Universes are padded with fixed
    /// points to the larger of the two.
    pub fn after(&self, other: &Permutation) -> Permutation {
        let n = self.universe().max(other.universe());
        let a = self.extended(n);
        let b = other.extended(n);
        Permutation {
            images: b.images.iter().map(|&v| a.apply(v)).collect(),
        }
    }

    /// The same permutation viewed on a larger universe.
    pub fn extended(&self, universe: usize) -> Permutation {
        let mut images = self.images.clone();
        images.extend(images.len() + 1..=universe);
        Permutation { images }
    }

    /// Labels moved by the permutation, ascending.
    pub fn support(&self) -> Vec<usize> {
        self.images
            .iter()
            .enumerate()
            .filter(|&(i, &v)| v != i + 1)
            .map(|(i, _)| i + 1)
            .collect()
    }

    /// Parity as a permutation: support size minus number of nontrivial cycles.
    pub fn parity(&self) -> Parity {
        let d = cycle_decompose(self);
        Parity::of_count(d.support_size() - d.r())
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", cycle_decompose(self))
    }
}

/// Nontrivial disjoint cycles, canonically ordered: each cycle starts at its
/// smallest label and cycles are sorted by that label.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CycleDecomposition {
    cycles: Vec<Vec<usize>>,
}

impl CycleDecomposition {
    pub fn cycles(&self) -> &[Vec<usize>] {
        &self.cycles
    }

    /// Number of nontrivial cycles.
    pub fn r(&self) -> usize {
        self.cycles.len()
    }

    pub fn support_size(&self) -> usize {
        self.cycles.iter().map(Vec::len).sum()
    }

    pub fn lengths(&self) -> Vec<usize> {
        self.cycles.iter().map(Vec::len).collect()
    }

    pub fn to_permutation(&self, universe: usize) -> Result<Permutation> {
        Permutation::from_cycles(universe, &self.cycles)
    }

    /// Each cycle `(a1 ... ak)` written as `(a1 ak)...(a1 a3)(a1 a2)`.
    pub fn to_sequence(&self) -> SwapSequence {
        let mut factors = Vec::with_capacity(self.support_size());
        for cycle in &self.cycles {
            factors.extend(cycle[1..].iter().rev().map(|&a| tr(cycle[0], a)));
        }
        SwapSequence::new(factors)
    }
}

impl fmt::Display for CycleDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.cycles.is_empty() {
            return write!(f, "I");
        }
        for cycle in &self.cycles {
            let wide = cycle.iter().any(|&a| a >= 10);
            let parts: Vec<String> = cycle.iter().map(usize::to_string).collect();
            write!(f, "({})", parts.join(if wide { "," } else { "" }))?;
        }
        Ok(())
    }
}

/// Evaluates a product right to left over `1..=universe`.
pub fn compose(seq: &SwapSequence, universe: usize) -> Result<Permutation> {
    if let Some(t) = seq.iter().find(|t| t.hi > universe) {
        return Err(Error::LabelOutOfRange {
            label: t.hi,
            universe,
        });
    }
    let mut images: Vec<usize> = (1..=universe).collect();
    for t in seq.factors.iter().rev() {
        for v in images.iter_mut() {
            *v = t.apply(*v);
        }
    }
    Ok(Permutation { images })
}

pub fn cycle_decompose(p: &Permutation) -> CycleDecomposition {
    let n = p.universe();
    let mut seen = vec![false; n + 1];
    let mut cycles = Vec::new();
    for start in 1..=n {
        if seen[start] || p.apply(start) == start {
            continue;
        }
        let mut cycle = vec![start];
        seen[start] = true;
        let mut next = p.apply(start);
        while next != start {
            seen[next] = true;
            cycle.push(next);
            next = p.apply(next);
        }
        cycles.push(cycle);
    }
    CycleDecomposition { cycles }
}

/// Parity of the number of factors.
pub fn parity(seq: &SwapSequence) -> Parity {
    Parity::of_count(seq.len())
}

/// True iff `candidate · scramble` is the identity on `1..=universe`, the
/// candidate's factors are pairwise distinct, and no factor of the candidate
/// occurs in the scramble.
pub fn undoes(candidate: &SwapSequence, scramble: &SwapSequence, universe: usize) -> bool {
    if !candidate.is_distinct() {
        return false;
    }
    let used = scramble.factor_set();
    if candidate.iter().any(|t| used.contains(t)) {
        return false;
    }
    match compose(&candidate.then_left_of(scramble), universe) {
        Ok(p) => p.is_identity(),
        Err(_) => false,
    }
}

/// A restoration schedule together with the outsiders it relies on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UndoPlan {
    sequence: SwapSequence,
    outsiders: Vec<usize>,
    universe: usize,
    verified: bool,
}

impl UndoPlan {
    /// Checks that `sequence` is distinct and that `sequence ∘ target` is the
    /// identity on `universe`, then records the plan as verified.
    pub fn verified_against(
        sequence: SwapSequence,
        outsiders: Vec<usize>,
        universe: usize,
        target: &Permutation,
    ) -> Result<Self> {
        if !sequence.is_distinct() {
            return Err(Error::VerificationFailed(format!(
                "{sequence} repeats a factor"
            )));
        }
        let composed = compose(&sequence, universe)?;
        if !composed.after(&target.extended(universe)).is_identity() {
            return Err(Error::VerificationFailed(format!(
                "{sequence} does not undo {target}"
            )));
        }
        Ok(UndoPlan {
            sequence,
            outsiders,
            universe,
            verified: true,
        })
    }

    pub fn sequence(&self) -> &SwapSequence {
        &self.sequence
    }

    pub fn outsiders(&self) -> &[usize] {
        &self.outsiders
    }

    /// Universe the plan acts on, outsiders included.
    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn factor_count(&self) -> usize {
        self.sequence.len()
    }

    pub fn is_verified(&self) -> bool {
        self.verified
    }

    /// True iff every factor contains one of the outsiders.
    pub fn touches_outsiders_only(&self) -> bool {
        self.sequence
            .iter()
            .all(|t| self.outsiders.iter().any(|&o| t.contains(o)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(s: &str) -> SwapSequence {
        s.parse().unwrap()
    }

    fn cyc(universe: usize, cycles: &[&[usize]]) -> Permutation {
        let owned: Vec<Vec<usize>> = cycles.iter().map(|c| c.to_vec()).collect();
        Permutation::from_cycles(universe, &owned).unwrap()
    }

    #[test]
    fn transposition_is_canonical() {
        let t = Transposition::new(5, 4).unwrap();
        assert_eq!((t.lo(), t.hi()), (4, 5));
        assert_eq!(t, Transposition::new(4, 5).unwrap());
        assert_eq!(
            Transposition::new(3, 3),
            Err(Error::DegenerateTransposition(3))
        );
        assert_eq!(Transposition::new(0, 3), Err(Error::ZeroLabel));
    }

    #[test]
    fn compose_is_right_to_left() {
        let c123 = cyc(3, &[&[1, 2, 3]]);
        assert_eq!(compose(&seq("(12)(23)"), 3).unwrap(), c123);
        assert_eq!(compose(&seq("(13)(12)"), 3).unwrap(), c123);
        assert_eq!(compose(&seq("(23)(13)"), 3).unwrap(), c123);
        assert!(compose(&SwapSequence::empty(), 4).unwrap().is_identity());
        assert_eq!(compose(&SwapSequence::empty(), 4).unwrap().universe(), 4);
    }

    #[test]
    fn compose_rejects_out_of_range() {
        assert_eq!(
            compose(&seq("(14)"), 3),
            Err(Error::LabelOutOfRange {
                label: 4,
                universe: 3
            })
        );
    }

    #[test]
    fn decompose_examples() {
        let id = Permutation::identity(5);
        let d = cycle_decompose(&id);
        assert_eq!(d.r(), 0);
        assert_eq!(d.support_size(), 0);

        let p = compose(&seq("(12)(23)(34)(45)"), 5).unwrap();
        let d = cycle_decompose(&p);
        assert_eq!(d.cycles(), &[vec![1, 2, 3, 4, 5]]);
        assert_eq!(d.r(), 1);

        let p = compose(&seq("(12)(34)"), 4).unwrap();
        let d = cycle_decompose(&p);
        assert_eq!(d.cycles(), &[vec![1, 2], vec![3, 4]]);
        assert_eq!(d.to_string(), "(12)(34)");
    }

    #[test]
    fn decompose_canonical_rotation() {
        let p = cyc(6, &[&[5, 6], &[3, 1, 4]]);
        let d = cycle_decompose(&p);
        assert_eq!(d.cycles(), &[vec![1, 4, 3], vec![5, 6]]);
        assert_eq!(d.lengths(), vec![3, 2]);
    }

    #[test]
    fn parity_of_sequences() {
        assert_eq!(parity(&seq("(12)(23)")), Parity::Even);
        assert_eq!(parity(&seq("(12)")), Parity::Odd);
        assert_eq!(parity(&SwapSequence::empty()), Parity::Even);
    }

    #[test]
    fn undoes_examples() {
        let p1 = seq("(12)(23)(34)(45)");
        assert!(undoes(&seq("(35)(24)(15)(14)(25)(13)"), &p1, 5));
        assert!(!undoes(&seq("(12)"), &seq("(12)"), 2));
        assert!(!undoes(&seq("(13)"), &seq("(12)"), 3));
        // repeated factor in the candidate
        assert!(!undoes(&seq("(34)(34)"), &SwapSequence::empty(), 4));
        // label past the universe
        assert!(!undoes(&seq("(16)"), &seq("(12)"), 5));
    }

    #[test]
    fn display_and_parse_wide_labels() {
        let s = seq("(2,10)(1,10)(12)");
        assert_eq!(s.to_string(), "(2,10)(1,10)(12)");
        assert_eq!(s.factors()[2], tr(1, 2));
        assert!("(123)".parse::<SwapSequence>().is_err());
        assert!("(12".parse::<SwapSequence>().is_err());
    }

    #[test]
    fn cycles_expand_to_sequence() {
        let p = cyc(6, &[&[1, 2, 3], &[4, 6]]);
        let d = cycle_decompose(&p);
        assert_eq!(d.to_sequence().to_string(), "(13)(12)(46)");
        assert_eq!(compose(&d.to_sequence(), 6).unwrap(), p);
    }

    #[test]
    fn from_images_checks_bijection() {
        assert!(Permutation::from_images(vec![2, 1, 3]).is_ok());
        assert_eq!(
            Permutation::from_images(vec![2, 2, 3]),
            Err(Error::NotBijection(3))
        );
        assert_eq!(
            Permutation::from_images(vec![0, 1]),
            Err(Error::NotBijection(2))
        );
    }

    #[test]
    fn plan_verification_fails_loudly() {
        let target = cyc(3, &[&[1, 2, 3]]);
        let bad = UndoPlan::verified_against(seq("(45)"), vec![4, 5], 5, &target);
        assert!(matches!(bad, Err(Error::VerificationFailed(_))));
        let ok =
            UndoPlan::verified_against(seq("(45)(34)(15)(25)(35)(14)"), vec![4, 5], 5, &target)
                .unwrap();
        assert!(ok.is_verified());
        assert_eq!(ok.factor_count(), 6);
        assert!(ok.touches_outsiders_only());
    }
}

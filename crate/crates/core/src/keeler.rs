//! Keeler's two-outsider construction.

use crate::error::{Error, Result};
use crate::perm::{cycle_decompose, tr, Permutation, SwapSequence, UndoPlan};

pub(crate) fn check_cycle(cycle: &[usize], outsiders: &[usize]) -> Result<()> {
    if cycle.len() < 2 {
        return Err(Error::BadCycle);
    }
    if let Some(&o) = outsiders.iter().find(|o| cycle.contains(o)) {
        return Err(Error::Collision(o));
    }
    if outsiders.contains(&0) || cycle.contains(&0) {
        return Err(Error::ZeroLabel);
    }
    Ok(())
}

/// `(x a1)(x a2)...(x a_{k-1}) · (y ak)(x ak)(y a1)`: k + 2 factors whose
/// product with the cycle is `(x y)`.
pub fn keeler_cycle_sigma(cycle: &[usize], x: usize, y: usize) -> Result<SwapSequence> {
    check_cycle(cycle, &[x, y])?;
    if x == y {
        return Err(Error::DegenerateTransposition(x));
    }
    let k = cycle.len();
    let mut factors: Vec<_> = cycle[..k - 1].iter().map(|&a| tr(x, a)).collect();
    factors.extend([tr(y, cycle[k - 1]), tr(x, cycle[k - 1]), tr(y, cycle[0])]);
    Ok(SwapSequence::new(factors))
}

/// Undoes `p` with outsiders `N + 1` and `N + 2`, where `N` is the universe
/// of `p`. Uses `n + 2r + 1` factors when `r` is odd and `n + 2r` when even.
pub fn keeler_undo(p: &Permutation) -> Result<UndoPlan> {
    if p.is_identity() {
        return Err(Error::IdentityInput);
    }
    let n = p.universe();
    let (x, y) = (n + 1, n + 2);
    let decomposition = cycle_decompose(p);
    let mut sequence = SwapSequence::empty();
    if decomposition.r() % 2 == 1 {
        sequence.push(tr(x, y));
    }
    // sigma_r ... sigma_1
    for cycle in decomposition.cycles().iter().rev() {
        for t in keeler_cycle_sigma(cycle, x, y)?.iter() {
            sequence.push(*t);
        }
    }
    UndoPlan::verified_against(sequence, vec![x, y], n + 2, p)
}

//! The two natural products for the cycle `(12...n)` and their optimal undos,
//! plus the `P_3` family that needs two outsiders.

use crate::error::{Error, Result};
use crate::identity::{identity_word, pair_count};
use crate::perm::{compose, tr, SwapSequence, UndoPlan};

fn check_size(n: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::Unsupported(format!("n = {n}; need n >= 2")));
    }
    Ok(())
}

/// `(12)(23)...(n-1,n)`.
pub fn build_p1(n: usize) -> Result<SwapSequence> {
    check_size(n)?;
    Ok(SwapSequence::new((1..n).map(|i| tr(i, i + 1)).collect()))
}

/// `(n-1,n)...(2n)(1n)`.
pub fn build_p2(n: usize) -> Result<SwapSequence> {
    check_size(n)?;
    Ok(SwapSequence::new((1..n).rev().map(|i| tr(i, n)).collect()))
}

fn plan_for(
    scramble: &SwapSequence,
    sequence: SwapSequence,
    n: usize,
    outsiders: Vec<usize>,
) -> Result<UndoPlan> {
    let universe = n + outsiders.len();
    let target = compose(scramble, n)?;
    let plan = UndoPlan::verified_against(sequence, outsiders, universe, &target)?;
    if plan.sequence().iter().any(|t| scramble.contains(t)) {
        return Err(Error::VerificationFailed(format!(
            "{} reuses a factor of {scramble}",
            plan.sequence()
        )));
    }
    Ok(plan)
}

/// Fewest-outsider undo of [`build_p1`]: none for `n >= 5` with `n + 1`
/// factors, one outsider for `n = 3, 4`, two for `n = 2`.
pub fn undo_p1(n: usize) -> Result<UndoPlan> {
    let scramble = build_p1(n)?;
    let (pairs, outsiders): (Vec<(usize, usize)>, Vec<usize>) = match n {
        2 => (vec![(3, 4), (2, 3), (1, 4), (2, 4), (1, 3)], vec![3, 4]),
        3 => (vec![(1, 4), (1, 3), (2, 4), (3, 4)], vec![4]),
        4 => (vec![(1, 4), (2, 5), (2, 4), (3, 5), (4, 5)], vec![5]),
        _ => {
            let mut pairs = vec![(3, n), (2, n - 1), (1, n), (1, 4), (2, n), (1, 3)];
            pairs.extend((5..n).map(|j| (3, j)));
            (pairs, vec![])
        }
    };
    plan_for(&scramble, SwapSequence::from_pairs(&pairs)?, n, outsiders)
}

/// One-outsider undo of [`build_p2`] with `n + 1` factors for `n >= 3`:
/// `(2,n+1)(3,n+1)...(n,n+1)·(12)(1,n+1)`. At `n = 2` the two products agree
/// and the plan of [`undo_p1`] is returned.
pub fn undo_p2(n: usize) -> Result<UndoPlan> {
    check_size(n)?;
    if n == 2 {
        return undo_p1(2);
    }
    let x = n + 1;
    let mut pairs: Vec<(usize, usize)> = (2..=n).map(|j| (j, x)).collect();
    pairs.extend([(1, 2), (1, x)]);
    plan_for(&build_p2(n)?, SwapSequence::from_pairs(&pairs)?, n, vec![x])
}

/// `P_2 · J` where `J` is the identity written with every transposition of
/// `S_{n-1}`. Defined for `n >= 5` with `n = 1, 2 (mod 4)`, where `C(n-1, 2)`
/// is even.
pub fn build_p3(n: usize) -> Result<SwapSequence> {
    if n < 5 || !matches!(n % 4, 1 | 2) {
        return Err(Error::Unsupported(format!(
            "n = {n}; P_3 is built only for n >= 5 with n = 1 or 2 (mod 4)"
        )));
    }
    let j = identity_word(pair_count(n - 1), n - 1)?;
    Ok(build_p2(n)?.then_left_of(j.word()))
}

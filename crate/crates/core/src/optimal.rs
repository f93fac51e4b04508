//! Two-outsider undo in exactly `n + r + 2` switches, every factor touching
//! an outsider. No shorter product of that kind exists.

use crate::error::{Error, Result};
use crate::keeler::check_cycle;
use crate::perm::{cycle_decompose, tr, Permutation, SwapSequence, UndoPlan};

/// `(a1 w)(a2 w)...(ak w)`.
pub fn g_product(cycle: &[usize], w: usize) -> Result<SwapSequence> {
    check_cycle(cycle, &[w])?;
    Ok(SwapSequence::new(cycle.iter().map(|&a| tr(a, w)).collect()))
}

/// `n + r + 2` for a nontrivial `p` with support size `n` and `r` cycles.
pub fn optimal_length(p: &Permutation) -> Result<usize> {
    if p.is_identity() {
        return Err(Error::IdentityInput);
    }
    let d = cycle_decompose(p);
    Ok(d.support_size() + d.r() + 2)
}

/// Builds
///
/// `(xy) · G_r(x)...G_2(x) · (ak x) · G_1(y) · (a1 x) · F_2(y)...F_r(y)`
///
/// with `x = N + 1`, `y = N + 2`, `G_i(w)` from [`g_product`] and `F_i(y)` the
/// single factor `(first entry of C_i, y)`. `C_1` is the first cycle of the
/// canonical decomposition.
pub fn optimal_undo(p: &Permutation) -> Result<UndoPlan> {
    if p.is_identity() {
        return Err(Error::IdentityInput);
    }
    let n = p.universe();
    let (x, y) = (n + 1, n + 2);
    let decomposition = cycle_decompose(p);
    let cycles = decomposition.cycles();
    let first = &cycles[0];
    let rest = &cycles[1..];

    let mut factors = vec![tr(x, y)];
    for cycle in rest.iter().rev() {
        factors.extend(g_product(cycle, x)?.into_factors());
    }
    factors.push(tr(first[first.len() - 1], x));
    factors.extend(g_product(first, y)?.into_factors());
    factors.push(tr(first[0], x));
    factors.extend(rest.iter().map(|cycle| tr(cycle[0], y)));

    let plan = UndoPlan::verified_against(SwapSequence::new(factors), vec![x, y], n + 2, p)?;
    debug_assert_eq!(Some(plan.factor_count()), optimal_length(p).ok());
    Ok(plan)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::keeler::keeler_undo;
    use crate::perm::compose;

    fn seq(s: &str) -> SwapSequence {
        s.parse().unwrap()
    }

    fn cyc(universe: usize, cycles: &[&[usize]]) -> Permutation {
        let owned: Vec<Vec<usize>> = cycles.iter().map(|c| c.to_vec()).collect();
        Permutation::from_cycles(universe, &owned).unwrap()
    }

    #[test]
    fn g_product_examples() {
        assert_eq!(g_product(&[1, 2, 3], 5).unwrap(), seq("(15)(25)(35)"));
        assert_eq!(g_product(&[1, 2], 6).unwrap(), seq("(16)(26)"));
        assert_eq!(g_product(&[1, 2, 3], 2), Err(Error::Collision(2)));
    }

    #[test]
    fn undo_three_cycle() {
        let p = compose(&seq("(12)(23)"), 3).unwrap();
        let plan = optimal_undo(&p).unwrap();
        assert_eq!(plan.sequence(), &seq("(45)(34)(15)(25)(35)(14)"));
        assert!(plan.touches_outsiders_only());
    }

    #[test]
    fn undo_two_disjoint_swaps() {
        let p = compose(&seq("(12)(34)"), 4).unwrap();
        let plan = optimal_undo(&p).unwrap();
        assert_eq!(plan.sequence(), &seq("(56)(35)(45)(25)(16)(26)(15)(36)"));
    }

    #[test]
    fn beats_keeler_on_three_swaps() {
        let p = cyc(6, &[&[1, 2], &[3, 4], &[5, 6]]);
        assert_eq!(optimal_undo(&p).unwrap().factor_count(), 11);
        assert_eq!(keeler_undo(&p).unwrap().factor_count(), 13);
    }

    #[test]
    fn lengths() {
        assert_eq!(optimal_length(&cyc(3, &[&[1, 2, 3]])), Ok(6));
        assert_eq!(
            optimal_length(&cyc(7, &[&[1, 2, 3, 4, 5], &[6, 7]])),
            Ok(11)
        );
        assert_eq!(optimal_length(&cyc(2, &[&[1, 2]])), Ok(5));
        assert_eq!(
            optimal_length(&Permutation::identity(3)),
            Err(Error::IdentityInput)
        );
        assert_eq!(
            optimal_undo(&Permutation::identity(3)),
            Err(Error::IdentityInput)
        );
    }

    #[test]
    fn fixed_points_are_left_alone() {
        // (24) inside S_5: outsiders are 6 and 7, count uses the support only
        let p = cyc(5, &[&[2, 4]]);
        let plan = optimal_undo(&p).unwrap();
        assert_eq!(plan.outsiders(), &[6, 7]);
        assert_eq!(plan.factor_count(), 5);
        assert!(plan
            .sequence()
            .entries()
            .iter()
            .all(|&a| [2, 4, 6, 7].contains(&a)));
    }
}

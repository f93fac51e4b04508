//! Per-permutation comparison of the two-outsider constructions against the
//! oracle, over all of `S_n`.

use crate::error::Result;
use crate::keeler::keeler_undo;
use crate::optimal::{optimal_length, optimal_undo};
use crate::oracle::{min_undo_search, outsider_touching_factors, SearchConfig, SearchSpec};
use crate::perm::{cycle_decompose, Permutation};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusRow {
    pub permutation: Permutation,
    pub r: usize,
    pub support: usize,
    pub keeler: usize,
    pub optimal: usize,
    /// Shortest undo whose factors all touch an outsider, when searched.
    pub oracle: Option<usize>,
}

impl CensusRow {
    pub const HEADER: &'static str = "permutation\tr\tsupport\tkeeler\toptimal\toracle";

    pub fn to_tsv(&self) -> String {
        let oracle = self.oracle.map_or("-".to_string(), |v| v.to_string());
        format!(
            "{}\t{}\t{}\t{}\t{}\t{}",
            self.permutation, self.r, self.support, self.keeler, self.optimal, oracle
        )
    }
}

/// All permutations of `1..=n` in lexicographic order of their image lists.
pub fn all_permutations(n: usize) -> Vec<Permutation> {
    let mut images: Vec<usize> = (1..=n).collect();
    let mut out = vec![Permutation::from_images(images.clone()).unwrap()];
    loop {
        let Some(i) = (1..n).rev().find(|&i| images[i - 1] < images[i]) else {
            return out;
        };
        let j = (i..n).rev().find(|&j| images[j] > images[i - 1]).unwrap();
        images.swap(i - 1, j);
        images[i..].reverse();
        out.push(Permutation::from_images(images.clone()).unwrap());
    }
}

/// Shortest undo of `p` built only from factors touching the outsiders
/// `N + 1`, `N + 2`.
pub fn oracle_outsider_minimum(p: &Permutation, config: &SearchConfig) -> Result<Option<usize>> {
    let n = p.universe();
    let bound = optimal_length(p)?;
    let spec = SearchSpec::new(p.clone(), outsider_touching_factors(n), bound, n + 2)?;
    Ok(min_undo_search(&spec, config)?
        .plan
        .map(|plan| plan.factor_count()))
}

/// One row per nontrivial permutation of `S_n`. The oracle column is filled
/// when `with_oracle` is set.
pub fn census(n: usize, with_oracle: bool, config: &SearchConfig) -> Result<Vec<CensusRow>> {
    all_permutations(n)
        .into_iter()
        .filter(|p| !p.is_identity())
        .map(|p| {
            let d = cycle_decompose(&p);
            let oracle = if with_oracle {
                oracle_outsider_minimum(&p, config)?
            } else {
                None
            };
            Ok(CensusRow {
                r: d.r(),
                support: d.support_size(),
                keeler: keeler_undo(&p)?.factor_count(),
                optimal: optimal_undo(&p)?.factor_count(),
                oracle,
                permutation: p,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn permutation_counts() {
        assert_eq!(all_permutations(1).len(), 1);
        assert_eq!(all_permutations(4).len(), 24);
        let all = all_permutations(3);
        assert_eq!(all[0].images(), &[1, 2, 3]);
        assert_eq!(all[1].images(), &[1, 3, 2]);
        assert_eq!(all[5].images(), &[3, 2, 1]);
    }

    #[test]
    fn census_of_s3() {
        let rows = census(3, true, &SearchConfig::default()).unwrap();
        let tsv: Vec<String> = rows.iter().map(CensusRow::to_tsv).collect();
        assert_eq!(
            tsv,
            vec![
                "(23)\t1\t2\t5\t5\t5",
                "(12)\t1\t2\t5\t5\t5",
                "(123)\t1\t3\t6\t6\t6",
                "(132)\t1\t3\t6\t6\t6",
                "(13)\t1\t2\t5\t5\t5",
            ]
        );
    }
}

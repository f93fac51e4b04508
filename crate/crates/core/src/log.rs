//! Plain-text swap logs.
//!
//! One swap per line as two whitespace-separated labels, in the order the
//! swaps happened. `#` starts a comment and an optional `n=<int>` line
//! declares the universe size. Loading reverses the lines into textual
//! (right-to-left) order, so the log `2 3` / `2 1` is the product `(12)(23)`.

use crate::error::{Error, Result};
use crate::perm::{SwapSequence, Transposition, UndoPlan};

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SwapLog {
    swaps: Vec<(usize, usize)>,
    declared_universe: Option<usize>,
}

impl SwapLog {
    pub fn swaps(&self) -> &[(usize, usize)] {
        &self.swaps
    }

    pub fn declared_universe(&self) -> Option<usize> {
        self.declared_universe
    }

    /// The declared universe, or the largest label when none was declared.
    pub fn universe(&self) -> usize {
        let max_label = self.swaps.iter().map(|&(a, b)| a.max(b)).max().unwrap_or(0);
        self.declared_universe.unwrap_or(0).max(max_label)
    }

    /// The product in textual order: last swap leftmost.
    pub fn to_sequence(&self) -> SwapSequence {
        SwapSequence::new(
            self.swaps
                .iter()
                .rev()
                .map(|&(a, b)| Transposition::new(a, b).expect("validated on parse"))
                .collect(),
        )
    }
}

fn parse_label(token: &str, line: usize) -> Result<usize> {
    let label: usize = token.parse().map_err(|_| Error::Parse {
        line,
        message: format!("'{token}' is not a positive integer"),
    })?;
    if label == 0 {
        return Err(Error::Parse {
            line,
            message: "label 0 is not a body; labels are 1-based".into(),
        });
    }
    Ok(label)
}

pub fn parse_log(text: &str) -> Result<SwapLog> {
    let mut log = SwapLog::default();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        if let Some(value) = content.strip_prefix("n=") {
            if log.declared_universe.is_some() {
                return Err(Error::Parse {
                    line,
                    message: "universe declared twice".into(),
                });
            }
            log.declared_universe = Some(value.trim().parse().map_err(|_| Error::Parse {
                line,
                message: format!("bad universe size '{}'", value.trim()),
            })?);
            continue;
        }
        let tokens: Vec<&str> = content.split_whitespace().collect();
        if tokens.len() != 2 {
            return Err(Error::Parse {
                line,
                message: format!("expected two labels, found {}", tokens.len()),
            });
        }
        let a = parse_label(tokens[0], line)?;
        let b = parse_label(tokens[1], line)?;
        if a == b {
            return Err(Error::Parse {
                line,
                message: format!("degenerate swap {a} {b}"),
            });
        }
        log.swaps.push((a, b));
    }
    if let Some(n) = log.declared_universe {
        let max_label = log.swaps.iter().map(|&(a, b)| a.max(b)).max().unwrap_or(0);
        if max_label > n {
            return Err(Error::Parse {
                line: 0,
                message: format!("label {max_label} exceeds the declared universe n={n}"),
            });
        }
    }
    Ok(log)
}

/// Writes a sequence as a log: one swap per line, first swap first.
pub fn format_sequence(seq: &SwapSequence, universe: Option<usize>) -> String {
    let mut out = String::new();
    if let Some(n) = universe {
        out.push_str(&format!("n={n}\n"));
    }
    for t in seq.chronological() {
        out.push_str(&format!("{} {}\n", t.lo(), t.hi()));
    }
    out
}

/// A plan as a log, with a header naming the method and outsiders.
pub fn format_plan(plan: &UndoPlan, method: &str) -> String {
    let outsiders = if plan.outsiders().is_empty() {
        "none".to_string()
    } else {
        plan.outsiders()
            .iter()
            .map(usize::to_string)
            .collect::<Vec<_>>()
            .join(" ")
    };
    format!(
        "# {method} plan: {} swaps, outsiders: {outsiders}\n\
         # chronological order: perform the first line first\n\
         # product (right to left): {}\n{}",
        plan.factor_count(),
        plan.sequence(),
        format_sequence(plan.sequence(), Some(plan.universe())),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::{compose, Permutation};
    use proptest::prelude::*;

    #[test]
    fn chronology_reverses_into_product() {
        let log = parse_log("2 3\n2 1\n").unwrap();
        let seq = log.to_sequence();
        assert_eq!(seq.to_string(), "(12)(23)");
        assert_eq!(
            compose(&seq, log.universe()).unwrap(),
            Permutation::from_cycles(3, &[vec![1, 2, 3]]).unwrap()
        );
    }

    #[test]
    fn empty_and_comments() {
        assert_eq!(parse_log("").unwrap(), SwapLog::default());
        let log = parse_log("# header\n\nn=6\n1 2 # first\n   \n").unwrap();
        assert_eq!(log.swaps(), &[(1, 2)]);
        assert_eq!(log.declared_universe(), Some(6));
        assert_eq!(log.universe(), 6);
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        assert!(matches!(
            parse_log("3 3"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            parse_log("1 2\n0 4"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_log("1 2\n\n1 2 3"),
            Err(Error::Parse { line: 3, .. })
        ));
        assert!(matches!(
            parse_log("1 x"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(parse_log("n=3\n1 4"), Err(Error::Parse { .. })));
        assert!(matches!(
            parse_log("n=3\nn=4"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_log("-1 2"),
            Err(Error::Parse { line: 1, .. })
        ));
    }

    #[test]
    fn plan_header() {
        let p = Permutation::from_cycles(3, &[vec![1, 2, 3]]).unwrap();
        let plan = crate::optimal::optimal_undo(&p).unwrap();
        let text = format_plan(&plan, "optimal");
        assert!(text.starts_with("# optimal plan: 6 swaps, outsiders: 4 5\n"));
        let body: Vec<&str> = text.lines().filter(|l| !l.starts_with('#')).collect();
        assert_eq!(body, vec!["n=5", "1 4", "3 5", "2 5", "1 5", "3 4", "4 5"]);
    }

    proptest! {
        #[test]
        fn format_then_parse_recomposes(pairs in prop::collection::vec((1usize..8, 1usize..8), 0..12)) {
            let pairs: Vec<(usize, usize)> = pairs.into_iter().filter(|(a, b)| a != b).collect();
            let seq = SwapSequence::from_pairs(&pairs).unwrap();
            let text = format_sequence(&seq, Some(8));
            let log = parse_log(&text).unwrap();
            prop_assert_eq!(log.to_sequence(), seq.clone());
            prop_assert_eq!(compose(&log.to_sequence(), 8).unwrap(), compose(&seq, 8).unwrap());
        }
    }
}

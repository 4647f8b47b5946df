//! Highest-weight notation on the command line.
//!
//! Accepted forms, per factor:
//! * fundamental weights `ω3`, `w3`, `omega3`, with sums and coefficients:
//!   `ω1+ω2`, `2ω1`, `2*w1+w3`;
//! * coordinates `hw=1,0,2`, `(1,0,2)` or a bare `1,0,2`;
//! * `0` for the trivial representation of a factor of any rank.
//!
//! Factors of a product are separated by `⊠` or `|`; coordinates given
//! without separators are split across factors by rank.

use crate::error::{Error, Result};
use crate::reps::{HighestWeight, SemisimpleAlgebra};

fn parse_coords(s: &str) -> Result<Vec<i64>> {
    s.trim()
        .trim_start_matches('(')
        .trim_end_matches(')')
        .split(',')
        .map(|x| {
            x.trim()
                .parse::<i64>()
                .map_err(|_| Error::Parse(format!("bad coordinate `{x}`")))
        })
        .collect()
}

fn strip_omega(s: &str) -> Option<&str> {
    ["omega", "ω", "w"].iter().find_map(|p| s.strip_prefix(p))
}

/// `Σ c_i ω_i` in a factor of the given rank.
fn parse_fundamental_sum(s: &str, rank: usize) -> Result<Vec<i64>> {
    let mut v = vec![0i64; rank];
    for term in s.split('+') {
        let term = term.trim().replace('*', "");
        let split = term
            .char_indices()
            .find(|(_, c)| !c.is_ascii_digit())
            .map(|(i, _)| i)
            .ok_or_else(|| Error::Parse(format!("bad term `{term}`")))?;
        let (coef, rest) = term.split_at(split);
        let coef: i64 = if coef.is_empty() {
            1
        } else {
            coef.parse().map_err(|_| Error::Parse(format!("bad coefficient in `{term}`")))?
        };
        let idx = strip_omega(rest)
            .ok_or_else(|| Error::Parse(format!("expected ω_i in `{term}`")))?
            .trim_start_matches('_');
        let i: usize = idx
            .parse()
            .map_err(|_| Error::Parse(format!("bad index in `{term}`")))?;
        if i == 0 || i > rank {
            return Err(Error::Parse(format!("ω{i} out of range for rank {rank}")));
        }
        v[i - 1] += coef;
    }
    Ok(v)
}

fn parse_part(s: &str, rank: usize) -> Result<Vec<i64>> {
    let s = s.trim();
    let s = s.strip_prefix("hw=").unwrap_or(s);
    if s == "0" {
        return Ok(vec![0; rank]);
    }
    if s.chars().any(|c| c.is_alphabetic()) {
        return parse_fundamental_sum(s, rank);
    }
    let v = parse_coords(s)?;
    if v.len() != rank {
        return Err(Error::DimensionMismatch {
            expected: rank,
            actual: v.len(),
        });
    }
    Ok(v)
}

/// Parses a highest weight of `alg` (see the module docs for the syntax).
pub fn parse_highest_weight(alg: &SemisimpleAlgebra, s: &str) -> Result<HighestWeight> {
    let s = s.trim();
    let parts: Vec<&str> = s.split(['⊠', '|']).collect();
    let k = alg.num_factors();
    if parts.len() == k {
        let parts = parts
            .iter()
            .zip(&alg.factors)
            .map(|(p, t)| parse_part(p, t.rank))
            .collect::<Result<Vec<_>>>()?;
        return HighestWeight::new(alg, parts);
    }
    if parts.len() == 1 {
        let body = s.strip_prefix("hw=").unwrap_or(s);
        if !body.chars().any(|c| c.is_alphabetic()) {
            return HighestWeight::from_flat(alg, &parse_coords(body)?);
        }
    }
    Err(Error::Parse(format!(
        "`{s}` has {} parts for an algebra with {k} factors",
        parts.len()
    )))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn alg(s: &str) -> SemisimpleAlgebra {
        s.parse().unwrap()
    }

    #[test]
    fn fundamental_forms() {
        let e7 = alg("E7");
        let w7 = parse_highest_weight(&e7, "ω7").unwrap();
        assert_eq!(w7.flat(), vec![0, 0, 0, 0, 0, 0, 1]);
        assert_eq!(parse_highest_weight(&e7, "w7").unwrap(), w7);
        assert_eq!(parse_highest_weight(&e7, "omega_7").unwrap(), w7);
        let a2 = alg("A2");
        assert_eq!(parse_highest_weight(&a2, "ω1+ω2").unwrap().flat(), vec![1, 1]);
        assert_eq!(parse_highest_weight(&a2, "2ω1").unwrap().flat(), vec![2, 0]);
        assert_eq!(parse_highest_weight(&a2, "2*w1+w2").unwrap().flat(), vec![2, 1]);
        assert!(parse_highest_weight(&a2, "ω3").is_err());
    }

    #[test]
    fn coordinate_forms() {
        let a1 = alg("A1");
        assert_eq!(parse_highest_weight(&a1, "hw=2").unwrap().flat(), vec![2]);
        let g2 = alg("G2");
        assert_eq!(parse_highest_weight(&g2, "(1,0)").unwrap().flat(), vec![1, 0]);
        assert_eq!(parse_highest_weight(&g2, "0").unwrap().flat(), vec![0, 0]);
        assert!(parse_highest_weight(&g2, "hw=-1,0").is_err());
        assert!(parse_highest_weight(&g2, "hw=1").is_err());
        assert_eq!(parse_highest_weight(&alg("A1"), "1").unwrap().flat(), vec![1]);
    }

    #[test]
    fn product_forms() {
        let p = alg("A1+A2");
        let hw = parse_highest_weight(&p, "ω1⊠ω2").unwrap();
        assert_eq!(hw.0, vec![vec![1], vec![0, 1]]);
        assert_eq!(parse_highest_weight(&p, "0|hw=1,1").unwrap().0, vec![vec![0], vec![1, 1]]);
        assert_eq!(parse_highest_weight(&p, "hw=1,0,1").unwrap().0, vec![vec![1], vec![0, 1]]);
        assert!(parse_highest_weight(&p, "ω1").is_err());
    }
}

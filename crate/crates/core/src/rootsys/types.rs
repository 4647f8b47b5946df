use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    pub fn from_letter(c: char) -> Option<Family> {
        Some(match c.to_ascii_uppercase() {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'E' => Family::E,
            'F' => Family::F,
            'G' => Family::G,
            _ => return None,
        })
    }
}

/// A Cartan type `X_n` of a simple Lie algebra.
///
/// Only the standard ranges are accepted: `A_n (n≥1)`, `B_n (n≥2)`,
/// `C_n (n≥3)`, `D_n (n≥4)`, `E_6, E_7, E_8`, `F_4`, `G_2`. Low-rank
/// coincidences (`C_2 = B_2`, `D_3 = A_3`, ...) must be spelled with the
/// canonical name.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct SimpleType {
    pub family: Family,
    pub rank: usize,
}

impl SimpleType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B => rank >= 2,
            Family::C => rank >= 3,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(SimpleType { family, rank })
        } else {
            Err(Error::InvalidType {
                family: family.letter(),
                rank,
            })
        }
    }

    pub fn a(rank: usize) -> Self {
        Self::new(Family::A, rank).expect("A_n needs n >= 1")
    }

    pub fn b(rank: usize) -> Self {
        Self::new(Family::B, rank).expect("B_n needs n >= 2")
    }

    pub fn c(rank: usize) -> Self {
        Self::new(Family::C, rank).expect("C_n needs n >= 3")
    }

    pub fn d(rank: usize) -> Self {
        Self::new(Family::D, rank).expect("D_n needs n >= 4")
    }

    pub fn e(rank: usize) -> Self {
        Self::new(Family::E, rank).expect("E_n needs n in 6..=8")
    }

    pub const F4: SimpleType = SimpleType {
        family: Family::F,
        rank: 4,
    };

    pub const G2: SimpleType = SimpleType {
        family: Family::G,
        rank: 2,
    };

    pub fn is_type_a(&self) -> bool {
        self.family == Family::A
    }

    /// Number of positive roots.
    pub fn num_positive_roots(&self) -> usize {
        let n = self.rank;
        match self.family {
            Family::A => n * (n + 1) / 2,
            Family::B | Family::C => n * n,
            Family::D => n * (n - 1),
            Family::E => match n {
                6 => 36,
                7 => 63,
                _ => 120,
            },
            Family::F => 24,
            Family::G => 6,
        }
    }

    /// Order of the Weyl group, from the classical formulas.
    pub fn weyl_group_order(&self) -> u128 {
        let n = self.rank as u128;
        let fact = |k: u128| (1..=k).product::<u128>();
        match self.family {
            Family::A => fact(n + 1),
            Family::B | Family::C => (1u128 << n) * fact(n),
            Family::D => (1u128 << (n - 1)) * fact(n),
            Family::E => match n {
                6 => 51_840,
                7 => 2_903_040,
                _ => 696_729_600,
            },
            Family::F => 1152,
            Family::G => 12,
        }
    }

    /// All valid types of the given rank, in (family, rank) order.
    pub fn all_of_rank(rank: usize) -> Vec<SimpleType> {
        [
            Family::A,
            Family::B,
            Family::C,
            Family::D,
            Family::E,
            Family::F,
            Family::G,
        ]
        .into_iter()
        .filter_map(|f| SimpleType::new(f, rank).ok())
        .collect()
    }
}

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

impl FromStr for SimpleType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let letter = chars
            .next()
            .ok_or_else(|| Error::Parse("empty Cartan type".into()))?;
        let family = Family::from_letter(letter)
            .ok_or_else(|| Error::Parse(format!("unknown family in `{s}`")))?;
        let rest = chars.as_str().trim_start_matches('_');
        let rank: usize = rest
            .parse()
            .map_err(|_| Error::Parse(format!("bad rank in `{s}`")))?;
        SimpleType::new(family, rank)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_invalid_pairs() {
        assert!(SimpleType::new(Family::C, 2).is_err());
        assert!(SimpleType::new(Family::D, 3).is_err());
        assert!(SimpleType::new(Family::E, 5).is_err());
        assert!(SimpleType::new(Family::G, 3).is_err());
        assert!(SimpleType::new(Family::A, 0).is_err());
        assert!(SimpleType::new(Family::B, 2).is_ok());
    }

    #[test]
    fn parses_names() {
        assert_eq!("E7".parse::<SimpleType>().unwrap(), SimpleType::e(7));
        assert_eq!("a_3".parse::<SimpleType>().unwrap(), SimpleType::a(3));
        assert!("Q3".parse::<SimpleType>().is_err());
        assert!("C2".parse::<SimpleType>().is_err());
    }
}

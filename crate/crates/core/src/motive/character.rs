use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Rational64;

use crate::error::Error;

/// A character of the profinite group of roots of unity, identified with an
/// element `a/d` of `Q/Z` stored in lowest terms with `0 <= a < d`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Character {
    num: u64,
    den: u64,
}

impl Character {
    pub const TRIVIAL: Character = Character { num: 0, den: 1 };

    /// Builds the class of `num/den` modulo 1. `den` must be nonzero.
    pub fn new(num: i64, den: i64) -> Result<Self, Error> {
        if den == 0 {
            return Err(Error::Parse(format!("character {num}/{den} has zero denominator")));
        }
        let (num, den) = if den < 0 { (-num, -den) } else { (num, den) };
        let reduced = num.rem_euclid(den);
        let g = reduced.gcd(&den);
        Ok(Character { num: (reduced / g) as u64, den: (den / g) as u64 })
    }

    pub fn numer(&self) -> u64 {
        self.num
    }

    pub fn denom(&self) -> u64 {
        self.den
    }

    /// Order of the character in `Q/Z`.
    pub fn order(&self) -> u64 {
        self.den
    }

    pub fn is_trivial(&self) -> bool {
        self.num == 0
    }

    /// The representative in `[0, 1)`.
    pub fn gamma(&self) -> Rational64 {
        Rational64::new(self.num as i64, self.den as i64)
    }

    pub fn inverse(&self) -> Character {
        if self.num == 0 {
            *self
        } else {
            Character { num: self.den - self.num, den: self.den }
        }
    }

    /// Group law (written multiplicatively on characters, additively in `Q/Z`).
    pub fn mul(&self, other: &Character) -> Character {
        let den = self.den.lcm(&other.den);
        let num = self.num * (den / self.den) + other.num * (den / other.den);
        Character::new(num as i64, den as i64).expect("nonzero denominator")
    }

    /// True when the order of `self` divides `n`. Every order divides 0.
    pub fn order_divides(&self, n: u64) -> bool {
        n % self.den == 0
    }

    /// All characters whose order divides `d`, trivial first.
    pub fn of_order_dividing(d: u64) -> Vec<Character> {
        assert!(d >= 1, "order bound must be positive");
        (0..d)
            .map(|a| Character::new(a as i64, d as i64).expect("d >= 1"))
            .collect()
    }

    /// All characters with denominator at most `bound`, sorted.
    pub fn with_denominator_at_most(bound: u64) -> Vec<Character> {
        let mut out = Vec::new();
        for d in 1..=bound {
            for a in 0..d {
                if a.gcd(&d) == 1 || (d == 1 && a == 0) {
                    out.push(Character { num: a, den: d });
                }
            }
        }
        out
    }
}

impl fmt::Display for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl FromStr for Character {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let (a, d) = match s.split_once('/') {
            Some((a, d)) => (a.trim(), d.trim()),
            None => (s, "1"),
        };
        let a: i64 = a.parse().map_err(|_| Error::Parse(format!("bad character `{s}`")))?;
        let d: i64 = d.parse().map_err(|_| Error::Parse(format!("bad character `{s}`")))?;
        Character::new(a, d)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ch(a: i64, d: i64) -> Character {
        Character::new(a, d).unwrap()
    }

    #[test]
    fn reduction_and_order() {
        assert_eq!(ch(2, 4), ch(1, 2));
        assert_eq!(ch(-1, 3), ch(2, 3));
        assert_eq!(ch(5, 5), Character::TRIVIAL);
        assert_eq!(ch(4, 6).order(), 3);
        assert!(Character::new(1, 0).is_err());
    }

    #[test]
    fn gamma_values() {
        assert_eq!(Character::TRIVIAL.gamma(), Rational64::from_integer(0));
        assert_eq!(ch(1, 2).gamma(), Rational64::new(1, 2));
        assert_eq!(ch(1, 3).inverse().gamma(), Rational64::new(2, 3));
    }

    #[test]
    fn gamma_of_inverse_complements() {
        for c in Character::with_denominator_at_most(12) {
            let s = c.gamma() + c.inverse().gamma();
            if c.is_trivial() {
                assert_eq!(s, Rational64::from_integer(0));
            } else {
                assert_eq!(s, Rational64::from_integer(1));
            }
            assert!(c.mul(&c.inverse()).is_trivial());
        }
    }

    #[test]
    fn enumeration_counts() {
        // sum of Euler phi(d) for d <= 12
        assert_eq!(Character::with_denominator_at_most(12).len(), 46);
        assert_eq!(Character::of_order_dividing(6).len(), 6);
    }

    #[test]
    fn parse_roundtrip() {
        let c: Character = "3/6".parse().unwrap();
        assert_eq!(c.to_string(), "1/2");
        assert_eq!("0".parse::<Character>().unwrap(), Character::TRIVIAL);
        assert!("x/2".parse::<Character>().is_err());
    }
}

//! Exact nonnegative rationals with a distinguished infinity, as needed
//! for toughness values. Floating point is deliberately not offered: the
//! interesting thresholds differ by as little as 1/30.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

/// A reduced fraction `num/den` with `den >= 1`, or `Infinity`.
/// `Infinity` compares greater than every finite value.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub enum Rational {
    Finite { num: u64, den: u64 },
    Infinity,
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

impl Rational {
    pub const ZERO: Rational = Rational::Finite { num: 0, den: 1 };
    pub const ONE: Rational = Rational::Finite { num: 1, den: 1 };

    pub fn new(num: u64, den: u64) -> Self {
        assert!(den != 0, "zero denominator");
        let g = gcd(num, den);
        Rational::Finite {
            num: num / g,
            den: den / g,
        }
    }

    pub fn from_int(n: u64) -> Self {
        Rational::Finite { num: n, den: 1 }
    }

    pub fn is_infinite(self) -> bool {
        matches!(self, Rational::Infinity)
    }

    pub fn checked_add(self, other: Self) -> Self {
        match (self, other) {
            (Rational::Finite { num: a, den: b }, Rational::Finite { num: c, den: d }) => {
                Rational::new(a * d + c * b, b * d)
            }
            _ => Rational::Infinity,
        }
    }

    /// `self * k` for an integer factor, exact.
    pub fn scale(self, k: u64) -> Self {
        match self {
            Rational::Finite { num, den } => Rational::new(num * k, den),
            Rational::Infinity => Rational::Infinity,
        }
    }

    /// Compare `self` with the fraction `p/q` (q >= 1) without reducing.
    pub fn cmp_fraction(self, p: u64, q: u64) -> Ordering {
        match self {
            Rational::Infinity => Ordering::Greater,
            Rational::Finite { num, den } => {
                ((num as u128) * q as u128).cmp(&((p as u128) * den as u128))
            }
        }
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Rational::Infinity, Rational::Infinity) => Ordering::Equal,
            (Rational::Infinity, _) => Ordering::Greater,
            (_, Rational::Infinity) => Ordering::Less,
            (&Rational::Finite { num: a, den: b }, &Rational::Finite { num: c, den: d }) => {
                ((a as u128) * d as u128).cmp(&((c as u128) * b as u128))
            }
        }
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rational::Infinity => write!(f, "inf"),
            Rational::Finite { num, den } if *den == 1 => write!(f, "{num}"),
            Rational::Finite { num, den } => write!(f, "{num}/{den}"),
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Debug, PartialEq, Eq)]
pub struct ParseRationalError(pub String);

impl fmt::Display for ParseRationalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "invalid rational `{}` (expected `p`, `p/q`, or `inf`)",
            self.0
        )
    }
}

impl std::error::Error for ParseRationalError {}

impl FromStr for Rational {
    type Err = ParseRationalError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("inf") || s == "∞" {
            return Ok(Rational::Infinity);
        }
        let bad = || ParseRationalError(s.to_string());
        match s.split_once('/') {
            Some((p, q)) => {
                let p: u64 = p.trim().parse().map_err(|_| bad())?;
                let q: u64 = q.trim().parse().map_err(|_| bad())?;
                if q == 0 {
                    return Err(bad());
                }
                Ok(Rational::new(p, q))
            }
            None => {
                let p: u64 = s.parse().map_err(|_| bad())?;
                Ok(Rational::from_int(p))
            }
        }
    }
}

//! Exact arithmetic aliases and small vector helpers.

use num::bigint::Sign;
use num::{BigInt, BigRational, Integer, One, Zero};

pub type Int = BigInt;
pub type Rat = BigRational;

pub fn int(v: i64) -> Int {
    Int::from(v)
}

pub fn rat(v: i64) -> Rat {
    Rat::from_integer(int(v))
}

pub fn rat_frac(num: i64, den: i64) -> Rat {
    Rat::new(int(num), int(den))
}

/// Parses "p" or "p/q" into an exact rational.
pub fn parse_rat(s: &str) -> Option<Rat> {
    let s = s.trim();
    match s.split_once('/') {
        None => s.parse::<Int>().ok().map(Rat::from_integer),
        Some((p, q)) => {
            let p = p.trim().parse::<Int>().ok()?;
            let q = q.trim().parse::<Int>().ok()?;
            if q.is_zero() {
                None
            } else {
                Some(Rat::new(p, q))
            }
        }
    }
}

/// Formats an exact rational as "p" or "p/q" with q > 1.
pub fn format_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Divides an integer vector by the gcd of its entries (zero vectors pass
/// through unchanged). The sign is preserved.
pub fn primitive(v: &[Int]) -> Vec<Int> {
    let mut g = Int::zero();
    for x in v {
        g = g.gcd(x);
    }
    if g.is_zero() || g.is_one() {
        return v.to_vec();
    }
    v.iter().map(|x| x / &g).collect()
}

/// Clears denominators of a rational vector, returning the primitive integer
/// vector pointing the same way.
pub fn clear_denominators(v: &[Rat]) -> Vec<Int> {
    let mut lcm = Int::one();
    for x in v {
        lcm = lcm.lcm(x.denom());
    }
    let ints: Vec<Int> = v.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
    primitive(&ints)
}

pub fn is_nonneg(r: &Rat) -> bool {
    r.numer().sign() != Sign::Minus
}

//! Exact rationals.
//!
//! `Rat` is `num_rational::BigRational`, which keeps every value reduced
//! with a positive denominator. The helpers here cover construction,
//! strict text parsing and a few integer-vector utilities.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub type Rat = num_rational::BigRational;

/// The integer `v` as a rational.
pub fn int(v: i64) -> Rat {
    Rat::from_integer(BigInt::from(v))
}

/// `n / d`, reduced. Panics if `d == 0`.
pub fn frac(n: i64, d: i64) -> Rat {
    assert!(d != 0, "zero denominator");
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Parses the strict interchange form `-?[0-9]+(/[1-9][0-9]*)?`.
///
/// No whitespace, no leading `+`, no zero denominator. The value is
/// reduced after parsing, so `"2/4"` gives one half.
pub fn parse_rat(s: &str) -> Option<Rat> {
    let (num, den) = match s.split_once('/') {
        Some((a, b)) => (a, Some(b)),
        None => (s, None),
    };
    let digits = num.strip_prefix('-').unwrap_or(num);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    let n: BigInt = num.parse().ok()?;
    match den {
        None => Some(Rat::from_integer(n)),
        Some(d) => {
            let bytes = d.as_bytes();
            if bytes.is_empty()
                || !(b'1'..=b'9').contains(&bytes[0])
                || !bytes.iter().all(|b| b.is_ascii_digit())
            {
                return None;
            }
            let d: BigInt = d.parse().ok()?;
            Some(Rat::new(n, d))
        }
    }
}

/// Renders in the same form [`parse_rat`] accepts.
pub fn format_rat(r: &Rat) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Scales a vector by a positive rational so that its entries are
/// coprime integers. The zero vector is returned unchanged.
pub fn primitive_integer(v: &[Rat]) -> Vec<Rat> {
    let mut lcm = BigInt::one();
    for x in v {
        lcm = lcm.lcm(x.denom());
    }
    let ints: Vec<BigInt> = v.iter().map(|x| (x * Rat::from_integer(lcm.clone())).to_integer()).collect();
    let mut g = BigInt::zero();
    for x in &ints {
        g = g.gcd(x);
    }
    if g.is_zero() {
        return v.to_vec();
    }
    ints.into_iter().map(|x| Rat::from_integer(x / &g)).collect()
}

/// -1, 0 or 1.
pub fn sign(r: &Rat) -> i32 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

/// A vector of rationals from integers.
pub fn ints(v: &[i64]) -> Vec<Rat> {
    v.iter().map(|&x| int(x)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduced_with_positive_denominator() {
        let r = frac(6, -4);
        assert_eq!(r.numer(), &BigInt::from(-3));
        assert_eq!(r.denom(), &BigInt::from(2));
    }

    #[test]
    fn parse_accepts_strict_form() {
        assert_eq!(parse_rat("3"), Some(int(3)));
        assert_eq!(parse_rat("-7/21"), Some(frac(-1, 3)));
        assert_eq!(parse_rat("0/5"), Some(int(0)));
        for bad in ["", "-", "+1", "1/0", "1/05", "1.5", " 1", "1/", "/2", "1/-2", "--1", "1/2/3"] {
            assert_eq!(parse_rat(bad), None, "{bad:?}");
        }
    }

    #[test]
    fn format_round_trips() {
        for r in [int(0), int(-4), frac(5, 7), frac(-12, 9)] {
            assert_eq!(parse_rat(&format_rat(&r)), Some(r));
        }
    }

    #[test]
    fn primitive_vectors() {
        let v = vec![frac(1, 2), frac(-3, 4), int(0)];
        assert_eq!(primitive_integer(&v), ints(&[2, -3, 0]));
        assert_eq!(primitive_integer(&ints(&[0, 0])), ints(&[0, 0]));
        assert_eq!(primitive_integer(&ints(&[4, 6])), ints(&[2, 3]));
    }
}

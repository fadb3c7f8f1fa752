//! Dense univariate polynomials over Q.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::rat::{format_rat, int, sign, Rat};
use crate::error::{Error, Result};

/// Coefficients in ascending order, trailing zeros stripped.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Poly {
    coeffs: Vec<Rat>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Rat>) -> Poly {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Poly {
        Poly::new(coeffs.iter().map(|&c| int(c)).collect())
    }

    pub fn zero() -> Poly {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Poly {
        Poly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Poly {
        Poly::new(vec![c])
    }

    /// The indeterminate `X`.
    pub fn x() -> Poly {
        Poly::monomial(Rat::one(), 1)
    }

    pub fn monomial(c: Rat, deg: usize) -> Poly {
        let mut v = vec![Rat::zero(); deg + 1];
        v[deg] = c;
        Poly::new(v)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rat {
        self.coeffs.get(i).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn leading(&self) -> Option<&Rat> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &Rat) -> Poly {
        Poly::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Divides by the leading coefficient; zero stays zero.
    pub fn monic(&self) -> Poly {
        match self.leading() {
            None => Poly::zero(),
            Some(lc) => self.scale(&lc.recip()),
        }
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * int(i as i64))
                .collect(),
        )
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn pow(&self, k: u32) -> Poly {
        let mut acc = Poly::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Euclidean division. Panics on a zero divisor.
    pub fn div_rem(&self, d: &Poly) -> (Poly, Poly) {
        let dd = d.degree().expect("division by the zero polynomial");
        let lc = d.leading().unwrap().clone();
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return (Poly::zero(), self.clone());
        }
        let mut q = vec![Rat::zero(); r.len() - dd];
        for i in (0..q.len()).rev() {
            let c = &r[i + dd] / &lc;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                r[i + j] -= &c * dc;
            }
            q[i] = c;
        }
        r.truncate(dd);
        (Poly::new(q), Poly::new(r))
    }

    pub fn rem(&self, d: &Poly) -> Poly {
        self.div_rem(d).1
    }

    /// Exact quotient; panics if `d` does not divide `self`.
    pub fn exact_div(&self, d: &Poly) -> Poly {
        let (q, r) = self.div_rem(d);
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    pub fn divides(&self, p: &Poly) -> bool {
        if self.is_zero() {
            return p.is_zero();
        }
        p.rem(self).is_zero()
    }

    /// Sign of the polynomial as `x -> +inf` (`positive`) or `x -> -inf`.
    fn sign_at_infinity(&self, positive: bool) -> i32 {
        match self.leading() {
            None => 0,
            Some(lc) => {
                let s = sign(lc);
                if !positive && self.degree().unwrap() % 2 == 1 {
                    -s
                } else {
                    s
                }
            }
        }
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            let mono = match i {
                0 => String::new(),
                1 => "X".to_string(),
                _ => format!("X^{i}"),
            };
            if mono.is_empty() {
                write!(f, "{}", format_rat(&a))?;
            } else if a.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{}*{mono}", format_rat(&a))?;
            }
        }
        Ok(())
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, o: &Poly) -> Poly {
        let n = self.coeffs.len().max(o.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) + o.coeff(i)).collect())
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, o: &Poly) -> Poly {
        let n = self.coeffs.len().max(o.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) - o.coeff(i)).collect())
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        let mut v = vec![Rat::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        Poly::new(v)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Poly {
            type Output = Poly;
            fn $m(self, o: Poly) -> Poly {
                (&self).$m(&o)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

/// Monic greatest common divisor, with `gcd(0, 0) = 0`.
pub fn poly_gcd(a: &Poly, b: &Poly) -> Poly {
    let mut a = a.clone();
    let mut b = b.clone();
    while !b.is_zero() {
        let r = a.rem(&b);
        a = b;
        b = r.monic();
    }
    a.monic()
}

/// Yun's squarefree decomposition.
///
/// Returns monic, squarefree, pairwise coprime `g_e` with their
/// multiplicities `e`, so that `p = lc(p) * prod g_e^e`. Constant
/// polynomials give an empty list.
pub fn squarefree_decompose(p: &Poly) -> Result<Vec<(Poly, usize)>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let f = p.monic();
    let mut out = Vec::new();
    if f.degree() == Some(0) {
        return Ok(out);
    }
    let df = f.derivative();
    let a0 = poly_gcd(&f, &df);
    let mut b = f.exact_div(&a0);
    let c = df.exact_div(&a0);
    let mut d = &c - &b.derivative();
    let mut e = 1;
    while b.degree().unwrap_or(0) > 0 {
        let a = poly_gcd(&b, &d);
        let nb = b.exact_div(&a);
        let nc = d.exact_div(&a);
        d = &nc - &nb.derivative();
        if a.degree().unwrap_or(0) > 0 {
            out.push((a, e));
        }
        b = nb;
        e += 1;
    }
    Ok(out)
}

pub fn is_squarefree(p: &Poly) -> bool {
    !p.is_zero() && poly_gcd(p, &p.derivative()).degree() == Some(0)
}

/// Number of distinct real roots of a squarefree polynomial.
///
/// The Sturm chain is built from exact remainders, each rescaled by a
/// positive constant (to keep sizes down without moving any sign), and
/// its sign changes are counted at both infinities.
pub fn sturm_real_root_count(p: &Poly) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !is_squarefree(p) {
        return Err(Error::NotSquarefree);
    }
    let normalize = |q: Poly| -> Poly {
        match q.leading() {
            Some(lc) => {
                let s = lc.abs().recip();
                q.scale(&s)
            }
            None => q,
        }
    };
    let mut chain = vec![normalize(p.clone()), normalize(p.derivative())];
    loop {
        let n = chain.len();
        if chain[n - 1].is_zero() {
            chain.pop();
            break;
        }
        let r = chain[n - 2].rem(&chain[n - 1]);
        if r.is_zero() {
            break;
        }
        chain.push(normalize(-&r));
    }
    let changes = |positive: bool| -> usize {
        let signs: Vec<i32> = chain
            .iter()
            .map(|q| q.sign_at_infinity(positive))
            .filter(|&s| s != 0)
            .collect();
        signs.windows(2).filter(|w| w[0] != w[1]).count()
    };
    Ok(changes(false) - changes(true))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> Poly {
        Poly::from_ints(c)
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(poly_gcd(&p(&[-1, 0, 1]), &p(&[-1, 1])), p(&[-1, 1]));
        assert_eq!(poly_gcd(&p(&[0, 0, 0, 1]), &p(&[0, 0, 1])), p(&[0, 0, 1]));
        // (X^2+1)^2 and its derivative
        let chi = p(&[1, 0, 2, 0, 1]);
        assert_eq!(poly_gcd(&chi, &chi.derivative()), p(&[1, 0, 1]));
        assert_eq!(poly_gcd(&Poly::zero(), &Poly::zero()), Poly::zero());
        assert_eq!(poly_gcd(&Poly::zero(), &p(&[2, 4])), p(&[1, 2]).monic());
    }

    #[test]
    fn squarefree_examples() {
        let x2 = p(&[-2, 1]);
        assert_eq!(squarefree_decompose(&x2.pow(3)).unwrap(), vec![(x2.clone(), 3)]);
        let chi = p(&[1, 0, 2, 0, 1]);
        assert_eq!(squarefree_decompose(&chi).unwrap(), vec![(p(&[1, 0, 1]), 2)]);
        let c = p(&[-1, 0, 0, 1]);
        assert_eq!(squarefree_decompose(&c).unwrap(), vec![(c.clone(), 1)]);
        assert!(matches!(squarefree_decompose(&Poly::zero()), Err(Error::ZeroPolynomial)));
        // 3 (X-1) (X+2)^2 X^3
        let q = p(&[-1, 1]).scale(&int(3)) * p(&[2, 1]).pow(2) * p(&[0, 1]).pow(3);
        assert_eq!(
            squarefree_decompose(&q).unwrap(),
            vec![(p(&[-1, 1]), 1), (p(&[2, 1]), 2), (p(&[0, 1]), 3)]
        );
    }

    #[test]
    fn sturm_examples() {
        assert_eq!(sturm_real_root_count(&p(&[1, 0, 1])).unwrap(), 0);
        assert_eq!(sturm_real_root_count(&p(&[-1, 0, 0, 1])).unwrap(), 1);
        assert_eq!(sturm_real_root_count(&p(&[-2, 0, 1])).unwrap(), 2);
        assert_eq!(sturm_real_root_count(&p(&[5])).unwrap(), 0);
        assert_eq!(sturm_real_root_count(&p(&[0, 1])).unwrap(), 1);
        // X^4 - 1: roots 1 and -1 real
        assert_eq!(sturm_real_root_count(&p(&[-1, 0, 0, 0, 1])).unwrap(), 2);
        assert!(matches!(sturm_real_root_count(&p(&[0, 0, 1])), Err(Error::NotSquarefree)));
    }

    #[test]
    fn display() {
        assert_eq!(p(&[1, 0, -3, 1]).to_string(), "X^3 - 3*X^2 + 1");
        assert_eq!(Poly::zero().to_string(), "0");
        assert_eq!(p(&[0, -1]).to_string(), "-X");
    }

    // Roots placed at distinct integers, half of them paired off as
    // (X - a)^2 + b^2 with b != 0; the real count is known by construction.
    fn built(real: &[i64], complex: &[(i64, i64)]) -> Poly {
        let mut q = Poly::one();
        for &r in real {
            q = q * p(&[-r, 1]);
        }
        for &(a, b) in complex {
            q = q * p(&[a * a + b * b, -2 * a, 1]);
        }
        q
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(100))]

        #[test]
        fn gcd_of_multiple(a in prop::collection::vec(-5i64..5, 1..5), b in prop::collection::vec(-5i64..5, 1..5)) {
            let a = p(&a);
            let b = p(&b);
            prop_assume!(!b.is_zero());
            let g = poly_gcd(&(&a * &b), &b);
            prop_assert_eq!(g, b.monic());
        }

        #[test]
        fn squarefree_reconstructs(a in prop::collection::vec(-4i64..4, 1..4), b in prop::collection::vec(-4i64..4, 1..4), k in 1u32..4) {
            let q = p(&a) * p(&b).pow(k);
            prop_assume!(!q.is_zero());
            let parts = squarefree_decompose(&q).unwrap();
            let mut prod = Poly::constant(q.leading().unwrap().clone());
            for (g, e) in &parts {
                prop_assert!(is_squarefree(g));
                prop_assert_eq!(g.leading().cloned(), Some(Rat::one()));
                prod = prod * g.pow(*e as u32);
            }
            for i in 0..parts.len() {
                for j in i + 1..parts.len() {
                    prop_assert_eq!(poly_gcd(&parts[i].0, &parts[j].0).degree(), Some(0));
                }
            }
            prop_assert_eq!(prod, q);
        }

        #[test]
        fn sturm_counts_constructed_roots(real in prop::collection::btree_set(-6i64..6, 0..4), complex in prop::collection::vec((-3i64..3, 1i64..3), 0..2)) {
            let real: Vec<i64> = real.into_iter().collect();
            let mut cx = complex.clone();
            cx.sort();
            cx.dedup();
            let q = built(&real, &cx);
            let r = sturm_real_root_count(&q).unwrap();
            prop_assert_eq!(r, real.len());
            prop_assert_eq!((q.degree().unwrap() - r) % 2, 0);
        }
    }
}

//! Dense univariate polynomials over the rationals.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::{self, Write};
use core::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::Rational;

/// Coefficients in ascending order with no trailing zeros; the zero polynomial is empty.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct RationalPoly {
    coeffs: Vec<Rational>,
}

impl RationalPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        RationalPoly { coeffs }
    }

    pub fn from_integers(coeffs: &[i64]) -> Self {
        Self::new(
            coeffs
                .iter()
                .map(|&c| Rational::from_integer(c.into()))
                .collect(),
        )
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(alloc::vec![c])
    }

    /// `c * r^degree`.
    pub fn monomial(c: Rational, degree: usize) -> Self {
        let mut coeffs = alloc::vec![Rational::zero(); degree + 1];
        coeffs[degree] = c;
        Self::new(coeffs)
    }

    /// The formal variable `r`.
    pub fn var() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    /// `1 - r`.
    pub fn one_minus_var() -> Self {
        Self::from_integers(&[1, -1])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn pow(&self, mut exp: u32) -> Self {
        let mut base = self.clone();
        let mut out = Self::one();
        while exp > 0 {
            if exp & 1 == 1 {
                out = &out * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Renders in ascending powers using `var` for the formal variable, e.g. `1 - 5r + 10r^2`.
    pub fn render(&self, var: &str) -> String {
        let mut out = String::new();
        if self.coeffs.is_empty() {
            out.push('0');
            return out;
        }
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else {
                out.push_str(if c.is_negative() { " - " } else { " + " });
            }
            if k == 0 || !mag.is_one() {
                let _ = write!(out, "{mag}");
            }
            match k {
                0 => {}
                1 => out.push_str(var),
                _ => {
                    let _ = write!(out, "{var}^{k}");
                }
            }
        }
        out
    }
}

impl fmt::Display for RationalPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("r"))
    }
}

impl From<Rational> for RationalPoly {
    fn from(c: Rational) -> Self {
        Self::constant(c)
    }
}

impl Zero for RationalPoly {
    fn zero() -> Self {
        RationalPoly { coeffs: Vec::new() }
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl One for RationalPoly {
    fn one() -> Self {
        Self::constant(Rational::one())
    }
}

impl AddAssign<&RationalPoly> for RationalPoly {
    fn add_assign(&mut self, rhs: &RationalPoly) {
        if rhs.coeffs.len() > self.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), Rational::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }
}

impl Add<&RationalPoly> for &RationalPoly {
    type Output = RationalPoly;
    fn add(self, rhs: &RationalPoly) -> RationalPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for RationalPoly {
    type Output = RationalPoly;
    fn add(mut self, rhs: RationalPoly) -> RationalPoly {
        self += &rhs;
        self
    }
}

impl Neg for &RationalPoly {
    type Output = RationalPoly;
    fn neg(self) -> RationalPoly {
        RationalPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for RationalPoly {
    type Output = RationalPoly;
    fn neg(self) -> RationalPoly {
        -&self
    }
}

impl Sub<&RationalPoly> for &RationalPoly {
    type Output = RationalPoly;
    fn sub(self, rhs: &RationalPoly) -> RationalPoly {
        self + &(-rhs)
    }
}

impl Sub for RationalPoly {
    type Output = RationalPoly;
    fn sub(self, rhs: RationalPoly) -> RationalPoly {
        &self - &rhs
    }
}

impl Mul<&RationalPoly> for &RationalPoly {
    type Output = RationalPoly;
    fn mul(self, rhs: &RationalPoly) -> RationalPoly {
        if self.is_zero() || rhs.is_zero() {
            return RationalPoly::zero();
        }
        let mut coeffs = alloc::vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        RationalPoly::new(coeffs)
    }
}

impl Mul for RationalPoly {
    type Output = RationalPoly;
    fn mul(self, rhs: RationalPoly) -> RationalPoly {
        &self * &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{int, rat};
    use proptest::prelude::*;

    fn p(c: &[i64]) -> RationalPoly {
        RationalPoly::from_integers(c)
    }

    #[test]
    fn trailing_zeros_are_trimmed() {
        assert_eq!(p(&[1, 2, 0, 0]).degree(), Some(1));
        assert!(p(&[0, 0]).is_zero());
        assert_eq!(p(&[0]).degree(), None);
    }

    #[test]
    fn render_canonical_form() {
        assert_eq!(p(&[1, -5, 10, -8]).to_string(), "1 - 5r + 10r^2 - 8r^3");
        assert_eq!(p(&[0, -1, 0, 1]).to_string(), "-r + r^3");
        assert_eq!(p(&[]).to_string(), "0");
        assert_eq!(p(&[-1]).to_string(), "-1");
        let q = RationalPoly::new(alloc::vec![rat(1, 4), int(0), rat(-3, 4)]);
        assert_eq!(q.render("a"), "1/4 - 3/4a^2");
    }

    #[test]
    fn binomial_powers() {
        assert_eq!(RationalPoly::one_minus_var().pow(3), p(&[1, -3, 3, -1]));
        assert_eq!(RationalPoly::var().pow(0), RationalPoly::one());
    }

    fn arb_poly() -> impl Strategy<Value = RationalPoly> {
        proptest::collection::vec((-20i64..20, 1i64..6), 0..6)
            .prop_map(|cs| RationalPoly::new(cs.into_iter().map(|(n, d)| rat(n, d)).collect()))
    }

    proptest! {
        #[test]
        fn product_degree_and_evaluation(a in arb_poly(), b in arb_poly(), n in -7i64..7, d in 1i64..5) {
            let x = rat(n, d);
            let prod = &a * &b;
            prop_assert_eq!(prod.eval(&x), a.eval(&x) * b.eval(&x));
            prop_assert_eq!((&a + &b).eval(&x), a.eval(&x) + b.eval(&x));
            prop_assert_eq!((&a - &b).eval(&x), a.eval(&x) - b.eval(&x));
            if let (Some(da), Some(db)) = (a.degree(), b.degree()) {
                prop_assert_eq!(prod.degree(), Some(da + db));
            }
        }
    }
}

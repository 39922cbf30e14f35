//! Univariate polynomials in `q` with arbitrary-precision integer coefficients.
//!
//! Coefficients are stored in ascending order of degree, with the zero
//! polynomial represented by an empty vector. Every constructor and
//! arithmetic operation normalizes away trailing (high-degree) zeros, so two
//! polynomials are equal exactly when their coefficient vectors are equal.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Largest exponent accepted by the text parser.
pub const MAX_PARSE_DEGREE: usize = 4096;

#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    /// The polynomial `q`.
    pub fn q() -> Self {
        Self::monomial(1, 1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::from_big(vec![c.into()])
    }

    /// `c * q^deg`.
    pub fn monomial(c: impl Into<BigInt>, deg: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); deg + 1];
        coeffs[deg] = c.into();
        Self::from_big(coeffs)
    }

    /// Builds a polynomial from ascending coefficients.
    pub fn from_coeffs(coeffs: &[i64]) -> Self {
        Self::from_big(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn from_big(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    /// Ascending coefficients; empty for the zero polynomial.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `q^i` (zero past the degree).
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff().is_some_and(One::is_one)
    }

    pub fn scale(&self, c: impl Into<BigInt>) -> Self {
        let c = c.into();
        Self::from_big(self.coeffs.iter().map(|a| a * &c).collect())
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = IntPoly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Exact division: returns `p / d` when `d` divides `p` in `Z[q]`.
    ///
    /// Fails with [`Error::NonzeroRemainder`] if the long division leaves a
    /// remainder or would require a non-integral quotient coefficient.
    pub fn div_exact(&self, d: &IntPoly) -> Result<IntPoly> {
        let fail = || Error::NonzeroRemainder {
            dividend: self.clone(),
            divisor: d.clone(),
        };
        let (Some(dd), Some(lead)) = (d.degree(), d.leading_coeff()) else {
            return Err(fail());
        };
        let Some(pd) = self.degree() else {
            return Ok(IntPoly::zero());
        };
        if pd < dd {
            return Err(fail());
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); pd - dd + 1];
        for k in (0..=pd - dd).rev() {
            let top = &rem[k + dd];
            if top.is_zero() {
                continue;
            }
            if !(top % lead).is_zero() {
                return Err(fail());
            }
            let c = top / lead;
            for (j, dj) in d.coeffs.iter().enumerate() {
                rem[k + j] -= &c * dj;
            }
            quot[k] = c;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(fail());
        }
        Ok(IntPoly::from_big(quot))
    }

    /// Exact value at the integer `n` (Horner).
    pub fn eval(&self, n: impl Into<BigInt>) -> BigInt {
        let n = n.into();
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * &n + c)
    }

    /// True iff `q^d p(1/q) = p`. Requires `d >= deg p`; returns false otherwise.
    pub fn is_palindromic(&self, d: usize) -> bool {
        match self.degree() {
            None => true,
            Some(deg) if deg > d => false,
            Some(_) => (0..=d).all(|i| self.coeff(i) == self.coeff(d - i)),
        }
    }

    /// Sum of an iterator of polynomials.
    pub fn sum<'a>(items: impl IntoIterator<Item = &'a IntPoly>) -> IntPoly {
        items.into_iter().fold(IntPoly::zero(), |acc, p| acc + p)
    }
}

macro_rules! int_poly_const {
    ($($name:ident => [$($c:expr),*];)*) => {
        impl IntPoly {
            $(pub fn $name() -> IntPoly { IntPoly::from_coeffs(&[$($c),*]) })*
        }
    };
}

int_poly_const! {
    q_minus_one => [-1, 1];
    q_squared_minus_one => [-1, 0, 1];
    q_cubed_minus_q => [0, -1, 0, 1];
    q_squared_minus_q => [0, -1, 1];
}

fn add_coeffs(a: &[BigInt], b: &[BigInt], negate_b: bool) -> IntPoly {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let x = a.get(i).cloned().unwrap_or_default();
        let y = b.get(i).cloned().unwrap_or_default();
        out.push(if negate_b { x - y } else { x + y });
    }
    IntPoly::from_big(out)
}

impl Add<&IntPoly> for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        add_coeffs(&self.coeffs, &rhs.coeffs, false)
    }
}

impl Sub<&IntPoly> for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        add_coeffs(&self.coeffs, &rhs.coeffs, true)
    }
}

impl Mul<&IntPoly> for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::from_big(out)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        -&self
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<IntPoly> for IntPoly {
            type Output = IntPoly;
            fn $method(self, rhs: IntPoly) -> IntPoly {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&IntPoly> for IntPoly {
            type Output = IntPoly;
            fn $method(self, rhs: &IntPoly) -> IntPoly {
                (&self).$method(rhs)
            }
        }
        impl $trait<IntPoly> for &IntPoly {
            type Output = IntPoly;
            fn $method(self, rhs: IntPoly) -> IntPoly {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl AddAssign<&IntPoly> for IntPoly {
    fn add_assign(&mut self, rhs: &IntPoly) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&IntPoly> for IntPoly {
    fn sub_assign(&mut self, rhs: &IntPoly) {
        *self = &*self - rhs;
    }
}

impl From<i64> for IntPoly {
    fn from(c: i64) -> Self {
        IntPoly::constant(c)
    }
}

/// Descending powers, e.g. `q^4 - 3q^3 - 6q^2 + 5q + 3`.
impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (deg, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            if deg == 0 || !mag.is_one() {
                write!(f, "{mag}")?;
            }
            match deg {
                0 => {}
                1 => f.write_str("q")?,
                _ => write!(f, "q^{deg}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({self})")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParsePolyError {
    #[error("empty polynomial")]
    Empty,
    #[error("unexpected character {found:?} at byte {pos}")]
    Unexpected { pos: usize, found: char },
    #[error("expected a term at byte {0}")]
    MissingTerm(usize),
    #[error("exponent at byte {0} is missing or exceeds {MAX_PARSE_DEGREE}")]
    BadExponent(usize),
}

/// Accepts sums of terms `[coeff][*]q[^exp]` or bare integers, with
/// optional whitespace and `-`/`−` signs: `q^3 - 2q^2 - 3q`, `-6*q^4+3q^2-1`.
impl FromStr for IntPoly {
    type Err = ParsePolyError;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let chars: Vec<(usize, char)> = s.char_indices().collect();
        let mut i = 0;
        let skip_ws = |i: &mut usize| {
            while *i < chars.len() && chars[*i].1.is_whitespace() {
                *i += 1;
            }
        };
        let pos_at = |i: usize| chars.get(i).map_or(s.len(), |c| c.0);

        let mut terms: Vec<BigInt> = Vec::new();
        let mut first = true;
        skip_ws(&mut i);
        if i == chars.len() {
            return Err(ParsePolyError::Empty);
        }
        while i < chars.len() {
            let mut negative = false;
            match chars[i].1 {
                '+' if !first => i += 1,
                '-' | '\u{2212}' => {
                    negative = true;
                    i += 1;
                }
                _ if first => {}
                c => {
                    return Err(ParsePolyError::Unexpected {
                        pos: chars[i].0,
                        found: c,
                    })
                }
            }
            first = false;
            skip_ws(&mut i);
            let term_start = pos_at(i);

            let digits_start = i;
            while i < chars.len() && chars[i].1.is_ascii_digit() {
                i += 1;
            }
            let coeff: Option<BigInt> = (i > digits_start).then(|| {
                let text: String = chars[digits_start..i].iter().map(|c| c.1).collect();
                text.parse().expect("ascii digits")
            });
            skip_ws(&mut i);
            let mut has_star = false;
            if coeff.is_some() && i < chars.len() && chars[i].1 == '*' {
                has_star = true;
                i += 1;
                skip_ws(&mut i);
            }
            let mut degree = 0usize;
            if i < chars.len() && chars[i].1 == 'q' {
                i += 1;
                degree = 1;
                skip_ws(&mut i);
                if i < chars.len() && chars[i].1 == '^' {
                    i += 1;
                    skip_ws(&mut i);
                    let exp_start = i;
                    while i < chars.len() && chars[i].1.is_ascii_digit() {
                        i += 1;
                    }
                    let text: String = chars[exp_start..i].iter().map(|c| c.1).collect();
                    degree = match text.parse::<usize>() {
                        Ok(d) if d <= MAX_PARSE_DEGREE => d,
                        _ => return Err(ParsePolyError::BadExponent(pos_at(exp_start))),
                    };
                }
            } else if has_star || coeff.is_none() {
                return Err(ParsePolyError::MissingTerm(term_start));
            }
            let mut c = coeff.unwrap_or_else(BigInt::one);
            if negative {
                c = -c;
            }
            if terms.len() <= degree {
                terms.resize(degree + 1, BigInt::zero());
            }
            terms[degree] += c;
            skip_ws(&mut i);
        }
        Ok(IntPoly::from_big(terms))
    }
}

/// Shorthand for parsing a polynomial literal that is known to be valid.
pub fn poly(s: &str) -> IntPoly {
    s.parse()
        .unwrap_or_else(|e| panic!("invalid polynomial literal {s:?}: {e}"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn additive_identity() {
        let p = poly("q^3 - q");
        assert_eq!(&p + &IntPoly::zero(), p);
    }

    #[test]
    fn factored_sl2() {
        assert_eq!(poly("q - 1") * poly("q^2 + q"), poly("q^3 - q"));
    }

    #[test]
    fn jordan_fiber_times_orbit() {
        assert_eq!(
            poly("q^2 - 1") * poly("q^3 - 2q^2 - 3q"),
            poly("q^5 - 2q^4 - 4q^3 + 2q^2 + 3q")
        );
    }

    #[test]
    fn exact_division() {
        assert_eq!(
            poly("q^3 - q").div_exact(&poly("q - 1")).unwrap(),
            poly("q^2 + q")
        );
        assert_eq!(
            poly("15q^6 - 45q^5 + 45q^4 - 15q^3")
                .div_exact(&IntPoly::q_minus_one())
                .unwrap(),
            poly("15q^5 - 30q^4 + 15q^3")
        );
        let ew =
            poly("q^15 - 5q^13 + 10q^11 - 252q^10 - 20q^9 + 20q^7 + 252q^6 - 10q^5 + 5q^3 - q");
        assert_eq!(
            ew.div_exact(&IntPoly::q_cubed_minus_q()).unwrap(),
            poly("q^12 - 4q^10 + 6q^8 - 252q^7 - 14q^6 - 252q^5 + 6q^4 - 4q^2 + 1")
        );
    }

    #[test]
    fn division_errors() {
        assert!(matches!(
            poly("q^2 + 1").div_exact(&poly("q - 1")),
            Err(Error::NonzeroRemainder { .. })
        ));
        // Quotient would need the coefficient 1/2.
        assert!(poly("q + 1").div_exact(&poly("2q + 2")).is_err());
        assert!(poly("q").div_exact(&IntPoly::zero()).is_err());
        assert!(poly("1").div_exact(&poly("q")).is_err());
        assert_eq!(
            IntPoly::zero().div_exact(&poly("q")).unwrap(),
            IntPoly::zero()
        );
    }

    #[test]
    fn evaluation() {
        assert_eq!(poly("q^3 - q").eval(3), BigInt::from(24));
        assert_eq!(poly("q^4 + 4q^3 - q^2 - 4q").eval(3), BigInt::from(168));
        assert_eq!(IntPoly::zero().eval(7), BigInt::zero());
    }

    #[test]
    fn palindromes() {
        assert!(poly("q^2 + 3q + 1").is_palindromic(2));
        assert!(!poly("q^2 + 3q").is_palindromic(2));
        assert!(poly("q").is_palindromic(2));
        assert!(!poly("q^3").is_palindromic(2));
    }

    #[test]
    fn display_matches_typography() {
        assert_eq!(
            poly("q^4-3q^3-6q^2+5q+3").to_string(),
            "q^4 - 3q^3 - 6q^2 + 5q + 3"
        );
        assert_eq!(poly("-q^3 + 1").to_string(), "-q^3 + 1");
        assert_eq!(IntPoly::zero().to_string(), "0");
        assert_eq!(poly("-1").to_string(), "-1");
    }

    #[test]
    fn parser_accepts_variants() {
        assert_eq!(
            poly("-6*q^4 + 3 q^2 - 1"),
            IntPoly::from_coeffs(&[-1, 0, 3, 0, -6])
        );
        assert_eq!(poly("q + q"), poly("2q"));
        assert_eq!(poly("q^2 \u{2212} 1"), IntPoly::q_squared_minus_one());
        assert_eq!(poly("0"), IntPoly::zero());
    }

    #[test]
    fn parser_rejects_garbage() {
        for bad in [
            "", "   ", "q^", "2*", "+q", "q q", "3 4", "q^99999", "x", "q -",
        ] {
            assert!(bad.parse::<IntPoly>().is_err(), "{bad:?} parsed");
        }
    }

    fn small_poly() -> impl Strategy<Value = IntPoly> {
        prop::collection::vec(-50i64..50, 0..7).prop_map(|c| IntPoly::from_coeffs(&c))
    }

    proptest! {
        #[test]
        fn ring_axioms(a in small_poly(), b in small_poly(), c in small_poly()) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!((&a + &b) + &c, &a + (&b + &c));
            prop_assert_eq!((&a * &b) * &c, &a * (&b * &c));
            prop_assert_eq!(&a * (&b + &c), &a * &b + &a * &c);
            prop_assert_eq!(&a - &a, IntPoly::zero());
            prop_assert_eq!(&a * &IntPoly::one(), a.clone());
        }

        #[test]
        fn normalized(a in small_poly(), b in small_poly()) {
            for p in [&a + &b, &a - &b, &a * &b] {
                prop_assert!(p.coeffs().last().is_none_or(|c| !c.is_zero()));
            }
        }

        #[test]
        fn div_exact_inverts_mul(a in small_poly(), d in small_poly()) {
            prop_assume!(!d.is_zero());
            prop_assert_eq!((&a * &d).div_exact(&d).unwrap(), a);
        }

        #[test]
        fn eval_is_ring_homomorphism(a in small_poly(), b in small_poly(), n in -20i64..20) {
            prop_assert_eq!((&a * &b).eval(n), a.eval(n) * b.eval(n));
            prop_assert_eq!((&a + &b).eval(n), a.eval(n) + b.eval(n));
        }

        #[test]
        fn display_parse_roundtrip(a in small_poly()) {
            prop_assert_eq!(a.to_string().parse::<IntPoly>().unwrap(), a);
        }
    }
}

//! The scalar field Q(i): complex numbers with rational real and imaginary
//! parts, kept in canonical form (reduced fractions, positive denominators).

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{EngineError, Result};

/// An element of Q(i), `re + im*i`. `BigRational` keeps each part reduced
/// with a positive denominator, so structural equality is field equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GaussianRational {
    pub re: BigRational,
    pub im: BigRational,
}

impl GaussianRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Self { re, im }
    }

    pub fn zero() -> Self {
        Self::new(BigRational::zero(), BigRational::zero())
    }

    pub fn one() -> Self {
        Self::new(BigRational::one(), BigRational::zero())
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        Self::new(BigRational::zero(), BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Self::new(BigRational::from_integer(BigInt::from(n)), BigRational::zero())
    }

    /// `a/b` as a real element. Panics if `b == 0`.
    pub fn from_ratio(a: i64, b: i64) -> Self {
        assert!(b != 0, "zero denominator");
        Self::new(
            BigRational::new(BigInt::from(a), BigInt::from(b)),
            BigRational::zero(),
        )
    }

    /// `(a/b) + (c/d) i`. Panics if `b == 0` or `d == 0`.
    pub fn from_ratios(a: i64, b: i64, c: i64, d: i64) -> Self {
        assert!(b != 0 && d != 0, "zero denominator");
        Self::new(
            BigRational::new(BigInt::from(a), BigInt::from(b)),
            BigRational::new(BigInt::from(c), BigInt::from(d)),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    /// Is this a real number (zero imaginary part)?
    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Self::new(self.re.clone(), -self.im.clone())
    }

    /// `re^2 + im^2`, a nonnegative rational.
    pub fn norm_sq(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(EngineError::DivisionByZero);
        }
        let n = self.norm_sq();
        Ok(Self::new(&self.re / &n, -(&self.im / &n)))
    }

    /// Parse the coefficient grammar `[-]a[/b]` optionally followed by
    /// `[+|-]c[/d] i`; a single term ending in `i` is purely imaginary;
    /// whitespace-insensitive. Examples: `1/2`, `-1/2+3/5i`, `1/3i`, `i`, `0`.
    pub fn parse(input: &str) -> Result<Self> {
        let s: String = input.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(EngineError::ParseError("empty coefficient".into()));
        }
        // Split into at most two signed terms.
        let mut terms: Vec<String> = Vec::new();
        let mut cur = String::new();
        for (idx, c) in s.chars().enumerate() {
            if (c == '+' || c == '-') && idx > 0 {
                terms.push(std::mem::take(&mut cur));
                if c == '-' {
                    cur.push('-');
                }
            } else {
                cur.push(c);
            }
        }
        terms.push(cur);
        if terms.len() > 2 {
            return Err(EngineError::ParseError(format!(
                "too many terms in coefficient `{input}`"
            )));
        }
        let mut re = BigRational::zero();
        let mut im = BigRational::zero();
        let mut seen_re = false;
        let mut seen_im = false;
        for t in terms {
            let (imag, body) = match t.strip_suffix('i') {
                Some(b) => (true, b),
                None => (false, t.as_str()),
            };
            let val = parse_rational(body, input)?;
            if imag {
                if seen_im {
                    return Err(EngineError::ParseError(format!(
                        "two imaginary terms in `{input}`"
                    )));
                }
                seen_im = true;
                im = val;
            } else {
                if seen_re {
                    return Err(EngineError::ParseError(format!(
                        "two real terms in `{input}`"
                    )));
                }
                seen_re = true;
                re = val;
            }
        }
        Ok(Self::new(re, im))
    }
}

fn parse_rational(body: &str, whole: &str) -> Result<BigRational> {
    // Bare `i` or `-i` leaves an empty/`-` body meaning 1.
    let body = match body {
        "" => "1",
        "-" => "-1",
        b => b,
    };
    let bad = || EngineError::ParseError(format!("malformed coefficient `{whole}`"));
    match body.split_once('/') {
        Some((num, den)) => {
            let n: BigInt = num.parse().map_err(|_| bad())?;
            let d: BigInt = den.parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(EngineError::ParseError(format!(
                    "zero denominator in `{whole}`"
                )));
            }
            Ok(BigRational::new(n, d))
        }
        None => {
            let n: BigInt = body.parse().map_err(|_| bad())?;
            Ok(BigRational::from_integer(n))
        }
    }
}

fn fmt_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        format!("{}", r.numer())
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut out = String::new();
        if !self.re.is_zero() {
            out.push_str(&fmt_rational(&self.re));
        }
        if !self.im.is_zero() {
            if !self.re.is_zero() && self.im.is_positive() {
                out.push('+');
            }
            out.push_str(&fmt_rational(&self.im));
            out.push('i');
        }
        write!(f, "{out}")
    }
}

impl Add for &GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl Sub for &GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl Mul for &GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

impl Div for &GaussianRational {
    type Output = GaussianRational;
    fn div(self, rhs: &GaussianRational) -> GaussianRational {
        let inv = rhs.inv().expect("division by zero in Q(i)");
        self * &inv
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational::new(-self.re.clone(), -self.im.clone())
    }
}

macro_rules! forward_owned {
    ($trait:ident, $method:ident) => {
        impl $trait for GaussianRational {
            type Output = GaussianRational;
            fn $method(self, rhs: GaussianRational) -> GaussianRational {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        -&self
    }
}

impl AddAssign<&GaussianRational> for GaussianRational {
    fn add_assign(&mut self, rhs: &GaussianRational) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl SubAssign<&GaussianRational> for GaussianRational {
    fn sub_assign(&mut self, rhs: &GaussianRational) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }
}

impl MulAssign<&GaussianRational> for GaussianRational {
    fn mul_assign(&mut self, rhs: &GaussianRational) {
        *self = &*self * rhs;
    }
}

//! Exact rational functions in `q` over the Gaussian rationals.
//!
//! The representation is canonical: numerator and denominator are coprime
//! (monic gcd) and the denominator is monic, so equal fractions have
//! identical stored form and equality is structural. `q^-1` is stored as
//! `1/q`.

use crate::gaussian::GaussianRational;
use crate::unipoly::UniPoly;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ArithError {
    /// The denominator vanishes at the evaluation point even after
    /// gcd cancellation.
    #[error("pole at the evaluation point")]
    PoleAtPoint,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatFunc {
    num: UniPoly,
    den: UniPoly,
}

impl RatFunc {
    /// Build `num/den` in canonical form. Panics if `den` is zero.
    pub fn new(num: UniPoly, den: UniPoly) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        if num.is_zero() {
            return RatFunc {
                num: UniPoly::zero(),
                den: UniPoly::one(),
            };
        }
        let g = num.gcd_monic(&den);
        let (num, rem_n) = num.div_rem(&g);
        debug_assert!(rem_n.is_zero());
        let (den, rem_d) = {
            let (d, r) = den.div_rem(&g);
            (d, r)
        };
        debug_assert!(rem_d.is_zero());
        let lead_inv = den.leading_coeff().inv();
        RatFunc {
            num: num.scale(&lead_inv),
            den: den.scale(&lead_inv),
        }
    }

    pub fn from_poly(num: UniPoly) -> Self {
        RatFunc {
            num,
            den: UniPoly::one(),
        }
    }

    pub fn constant(c: GaussianRational) -> Self {
        Self::from_poly(UniPoly::constant(c))
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(GaussianRational::from_int(n))
    }

    pub fn zero() -> Self {
        Self::from_int(0)
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    /// The variable `q`.
    pub fn q() -> Self {
        Self::from_poly(UniPoly::var_pow(1))
    }

    /// `q^-1`, stored as `1/q`.
    pub fn q_inv() -> Self {
        Self::q().inv()
    }

    /// `q^n` for any integer `n`.
    pub fn q_pow(n: i64) -> Self {
        if n >= 0 {
            Self::from_poly(UniPoly::var_pow(n as u32))
        } else {
            RatFunc {
                num: UniPoly::one(),
                den: UniPoly::var_pow((-n) as u32),
            }
        }
    }

    pub fn num(&self) -> &UniPoly {
        &self.num
    }

    pub fn den(&self) -> &UniPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero rational function");
        RatFunc::new(self.den.clone(), self.num.clone())
    }

    pub fn pow(&self, k: i64) -> Self {
        if k < 0 {
            return self.inv().pow(-k);
        }
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Evaluate at a point of Q(i). A surviving zero of the denominator is a
    /// genuine pole.
    pub fn eval(&self, x: &GaussianRational) -> Result<GaussianRational, ArithError> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return Err(ArithError::PoleAtPoint);
        }
        Ok(&self.num.eval(x) / &d)
    }

    pub fn eval_at_one(&self) -> Result<GaussianRational, ArithError> {
        self.eval(&GaussianRational::one())
    }
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        RatFunc::new(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        RatFunc::new(
            &(&self.num * &rhs.den) - &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        RatFunc::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Div for &RatFunc {
    type Output = RatFunc;
    fn div(self, rhs: &RatFunc) -> RatFunc {
        self * &rhs.inv()
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

macro_rules! forward_owned_binop {
    ($imp:ident, $method:ident) => {
        impl $imp for RatFunc {
            type Output = RatFunc;
            fn $method(self, rhs: RatFunc) -> RatFunc {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);
forward_owned_binop!(Div, div);

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -&self
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::text::render_ratfunc(self))
    }
}

//! Sparse Laurent polynomials in `t` over the Gaussian rationals.
//!
//! These carry every matrix entry in the loop-algebra layer. Exponents range
//! over all of Z, so the representation is a sparse map with no stored zero
//! coefficients.

use crate::gaussian::GaussianRational;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i64, GaussianRational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::term(0, GaussianRational::one())
    }

    /// The monomial `t^n`.
    pub fn t_pow(n: i64) -> Self {
        Self::term(n, GaussianRational::one())
    }

    /// The single term `c * t^n`.
    pub fn term(n: i64, c: GaussianRational) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(n, c);
        }
        LaurentPoly { coeffs }
    }

    pub fn constant(c: GaussianRational) -> Self {
        Self::term(0, c)
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (i64, GaussianRational)>) -> Self {
        let mut p = Self::zero();
        for (n, c) in terms {
            p.add_term(n, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of `t^n` (zero when absent).
    pub fn coeff(&self, n: i64) -> GaussianRational {
        self.coeffs.get(&n).cloned().unwrap_or_default()
    }

    /// Nonzero terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &GaussianRational)> {
        self.coeffs.iter().map(|(n, c)| (*n, c))
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn add_term(&mut self, n: i64, c: GaussianRational) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(n).or_insert_with(GaussianRational::zero);
        *entry = &*entry + &c;
        if entry.is_zero() {
            self.coeffs.remove(&n);
        }
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            coeffs: self
                .coeffs
                .iter()
                .map(|(n, a)| (*n, a * c))
                .collect(),
        }
    }

    /// Multiply by the monomial `t^n`.
    pub fn shift(&self, n: i64) -> Self {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(e, c)| (e + n, c.clone())).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// The automorphism of F[t, t^-1] sending `t -> t^-1`.
    pub fn tau(&self) -> Self {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(n, c)| (-n, c.clone())).collect(),
        }
    }

    /// The homomorphism `gamma` onto the scalars: evaluation at `t = 1`,
    /// i.e. the sum of all coefficients.
    pub fn eval_at_one(&self) -> GaussianRational {
        self.coeffs
            .values()
            .fold(GaussianRational::zero(), |acc, c| &acc + c)
    }

    /// Exact division by a unit of the Laurent ring (a single term).
    /// Returns `None` when `rhs` is not a unit.
    pub fn checked_div_unit(&self, rhs: &LaurentPoly) -> Option<Self> {
        if rhs.coeffs.len() != 1 {
            return None;
        }
        let (e, c) = rhs.coeffs.iter().next().unwrap();
        let inv = c.inv();
        Some(self.shift(-e).scale(&inv))
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (n, c) in &rhs.coeffs {
            out.add_term(*n, c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (n, c) in &rhs.coeffs {
            out.add_term(*n, -c);
        }
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (n1, c1) in &self.coeffs {
            for (n2, c2) in &rhs.coeffs {
                out.add_term(n1 + n2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(n, c)| (*n, -c)).collect(),
        }
    }
}

macro_rules! forward_owned_binop {
    ($imp:ident, $method:ident) => {
        impl $imp for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::text::render_laurent(self))
    }
}

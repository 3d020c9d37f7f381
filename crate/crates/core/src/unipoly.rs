//! Univariate polynomials in `q` over the Gaussian rationals.
//!
//! Carrier for the rational-function field used by the q -> 1 limit engine.
//! Supports the monic Euclidean algorithm so that `RatFunc` can keep a
//! canonical reduced form.

use crate::gaussian::GaussianRational;
use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct UniPoly {
    coeffs: BTreeMap<u32, GaussianRational>,
}

impl UniPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(GaussianRational::one())
    }

    pub fn constant(c: GaussianRational) -> Self {
        Self::term(0, c)
    }

    /// The monomial `q^n`.
    pub fn var_pow(n: u32) -> Self {
        Self::term(n, GaussianRational::one())
    }

    pub fn term(n: u32, c: GaussianRational) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(n, c);
        }
        UniPoly { coeffs }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (u32, GaussianRational)>) -> Self {
        let mut p = Self::zero();
        for (n, c) in terms {
            p.add_term(n, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeff(0).is_one()
    }

    pub fn degree(&self) -> Option<u32> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn coeff(&self, n: u32) -> GaussianRational {
        self.coeffs.get(&n).cloned().unwrap_or_default()
    }

    pub fn leading_coeff(&self) -> GaussianRational {
        self.degree().map(|d| self.coeff(d)).unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, &GaussianRational)> {
        self.coeffs.iter().map(|(n, c)| (*n, c))
    }

    pub fn add_term(&mut self, n: u32, c: GaussianRational) {
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
        UniPoly {
            coeffs: self.coeffs.iter().map(|(n, a)| (*n, a * c)).collect(),
        }
    }

    /// Scale so the leading coefficient is one. Zero stays zero.
    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        self.scale(&self.leading_coeff().inv())
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Euclidean division. Panics if `rhs` is zero.
    pub fn div_rem(&self, rhs: &UniPoly) -> (UniPoly, UniPoly) {
        assert!(!rhs.is_zero(), "polynomial division by zero");
        let dlead = rhs.leading_coeff().inv();
        let ddeg = rhs.degree().unwrap();
        let mut quot = UniPoly::zero();
        let mut rem = self.clone();
        while let Some(rdeg) = rem.degree() {
            if rdeg < ddeg {
                break;
            }
            let factor = &rem.leading_coeff() * &dlead;
            let shift = rdeg - ddeg;
            quot.add_term(shift, factor.clone());
            for (n, c) in rhs.terms() {
                rem.add_term(n + shift, -&(c * &factor));
            }
        }
        (quot, rem)
    }

    /// Monic greatest common divisor via the Euclidean algorithm.
    pub fn gcd_monic(&self, rhs: &UniPoly) -> UniPoly {
        let mut a = self.clone();
        let mut b = rhs.clone();
        while !b.is_zero() {
            // Keeping remainders monic tames coefficient growth.
            let r = a.div_rem(&b).1.monic();
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn eval(&self, x: &GaussianRational) -> GaussianRational {
        let mut acc = GaussianRational::zero();
        let mut power = GaussianRational::one();
        let mut last = 0u32;
        for (n, c) in self.terms() {
            for _ in last..n {
                power = &power * x;
            }
            last = n;
            acc = &acc + &(c * &power);
        }
        acc
    }

    pub fn eval_at_one(&self) -> GaussianRational {
        self.coeffs
            .values()
            .fold(GaussianRational::zero(), |acc, c| &acc + c)
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let mut out = self.clone();
        for (n, c) in &rhs.coeffs {
            out.add_term(*n, c.clone());
        }
        out
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        let mut out = self.clone();
        for (n, c) in &rhs.coeffs {
            out.add_term(*n, -c);
        }
        out
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        let mut out = UniPoly::zero();
        for (n1, c1) in &self.coeffs {
            for (n2, c2) in &rhs.coeffs {
                out.add_term(n1 + n2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly {
            coeffs: self.coeffs.iter().map(|(n, c)| (*n, -c)).collect(),
        }
    }
}

macro_rules! forward_owned_binop {
    ($imp:ident, $method:ident) => {
        impl $imp for UniPoly {
            type Output = UniPoly;
            fn $method(self, rhs: UniPoly) -> UniPoly {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl Neg for UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        -&self
    }
}

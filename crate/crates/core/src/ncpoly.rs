//! Formal linear combinations of words over a symbol alphabet.
//!
//! There is deliberately no normal form: the q -> 1 limit arguments are
//! coefficient-level manipulations in the free algebra, so literal
//! transcription plus exact coefficient arithmetic is all that is needed.

use crate::gaussian::GaussianRational;
use crate::ratfunc::RatFunc;
use std::collections::BTreeMap;
use std::fmt;

/// Generator symbols. The `W0`/`W1` pair is the q-deformed generator
/// alphabet, the `Cw`/`Cg`/`Cgt` families the extended one, and `A`/`B` the
/// alphabet of classical limit identities. The xi-weight is the power of
/// `xi = i(q - q^-1)` each symbol absorbs under the rescaling convention:
/// one for W-type symbols, two for G-type (and diagonal `B`) symbols.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum QSymbol {
    W0,
    W1,
    Cw(i64),
    Cg(i64),
    Cgt(i64),
    A(i64),
    B(i64),
}

impl QSymbol {
    pub fn xi_weight(&self) -> u32 {
        match self {
            QSymbol::W0 | QSymbol::W1 | QSymbol::Cw(_) | QSymbol::A(_) => 1,
            QSymbol::Cg(_) | QSymbol::Cgt(_) | QSymbol::B(_) => 2,
        }
    }
}

impl fmt::Display for QSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QSymbol::W0 => write!(f, "W0"),
            QSymbol::W1 => write!(f, "W1"),
            QSymbol::Cw(n) => write!(f, "cW[{n}]"),
            QSymbol::Cg(n) => write!(f, "cG[{n}]"),
            QSymbol::Cgt(n) => write!(f, "cGt[{n}]"),
            QSymbol::A(n) => write!(f, "A[{n}]"),
            QSymbol::B(n) => write!(f, "B[{n}]"),
        }
    }
}

pub type Word = Vec<QSymbol>;

/// Coefficient rings the free algebra is taken over.
pub trait CoeffRing: Clone + PartialEq {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_int(n: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, o: &Self) -> Self;
}

impl CoeffRing for GaussianRational {
    fn zero() -> Self {
        GaussianRational::zero()
    }
    fn one() -> Self {
        GaussianRational::one()
    }
    fn from_int(n: i64) -> Self {
        GaussianRational::from_int(n)
    }
    fn is_zero(&self) -> bool {
        self.is_zero()
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
}

impl CoeffRing for RatFunc {
    fn zero() -> Self {
        RatFunc::zero()
    }
    fn one() -> Self {
        RatFunc::one()
    }
    fn from_int(n: i64) -> Self {
        RatFunc::from_int(n)
    }
    fn is_zero(&self) -> bool {
        self.is_zero()
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
}

/// A finite linear combination of words; no stored zero coefficients, and
/// the empty word carries the scalar part.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NcPoly<C: CoeffRing> {
    terms: BTreeMap<Word, C>,
}

impl<C: CoeffRing> Default for NcPoly<C> {
    fn default() -> Self {
        NcPoly {
            terms: BTreeMap::new(),
        }
    }
}

impl<C: CoeffRing> NcPoly<C> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::term(Vec::new(), C::one())
    }

    pub fn symbol(s: QSymbol) -> Self {
        Self::term(vec![s], C::one())
    }

    pub fn term(word: Word, coeff: C) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(word, coeff);
        }
        NcPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &C)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, word: Word, coeff: C) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.get_mut(&word) {
            Some(existing) => {
                *existing = existing.add(&coeff);
                if existing.is_zero() {
                    self.terms.remove(&word);
                }
            }
            None => {
                self.terms.insert(word, coeff);
            }
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in rhs.terms() {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        NcPoly {
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (w.clone(), c.neg()))
                .collect(),
        }
    }

    pub fn scale(&self, s: &C) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        let mut out = Self::zero();
        for (w, c) in self.terms() {
            out.add_term(w.clone(), c.mul(s));
        }
        out
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = Self::zero();
        for (w1, c1) in self.terms() {
            for (w2, c2) in rhs.terms() {
                let mut word = w1.clone();
                word.extend_from_slice(w2);
                out.add_term(word, c1.mul(c2));
            }
        }
        out
    }

    /// Apply a symbol map to every word, keeping coefficients.
    pub fn map_symbols(&self, f: impl Fn(QSymbol) -> QSymbol) -> Self {
        let mut out = Self::zero();
        for (w, c) in self.terms() {
            out.add_term(w.iter().map(|&s| f(s)).collect(), c.clone());
        }
        out
    }
}

/// The commutator `xy - yx`.
pub fn comm<C: CoeffRing>(x: &NcPoly<C>, y: &NcPoly<C>) -> NcPoly<C> {
    x.mul(y).sub(&y.mul(x))
}

impl<C: CoeffRing + fmt::Display> fmt::Display for NcPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (word, coeff)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            let word_str = word
                .iter()
                .map(|s| s.to_string())
                .collect::<Vec<_>>()
                .join("*");
            if word.is_empty() {
                write!(f, "({coeff})")?;
            } else {
                write!(f, "({coeff})*{word_str}")?;
            }
        }
        Ok(())
    }
}

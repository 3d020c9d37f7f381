//! Elements of the loop algebra of gl2 as 2x2 Laurent-polynomial matrices:
//! the Lie bracket, the involutions theta / sigma / dagger, the trace-like
//! functional epsilon, the nine named element families, and membership
//! predicates for the subspaces of interest.
//!
//! Subspace membership is checked by predicate, never enforced by type: the
//! same matrix value routinely lives in several spaces at once.

use crate::gaussian::GaussianRational;
use crate::laurent::LaurentPoly;
use crate::text::{parse_family_parts, SyntaxError};
use serde_json::json;
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FamilyError {
    #[error("index {index} out of range for family {family}")]
    IndexOutOfRange { family: FamilyTag, index: i64 },
    #[error("unknown family name {0:?}")]
    UnknownFamily(String),
    #[error("{0}")]
    Syntax(#[from] SyntaxError),
}

/// A 2x2 matrix over the Laurent polynomials, row-major:
/// `a` upper-left, `b` upper-right, `c` lower-left, `d` lower-right.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct LoopElement {
    pub a: LaurentPoly,
    pub b: LaurentPoly,
    pub c: LaurentPoly,
    pub d: LaurentPoly,
}

impl LoopElement {
    pub fn new(a: LaurentPoly, b: LaurentPoly, c: LaurentPoly, d: LaurentPoly) -> Self {
        LoopElement { a, b, c, d }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero() && self.c.is_zero() && self.d.is_zero()
    }

    /// The scalar matrix `I (x) p`.
    pub fn identity_times(p: LaurentPoly) -> Self {
        LoopElement {
            a: p.clone(),
            b: LaurentPoly::zero(),
            c: LaurentPoly::zero(),
            d: p,
        }
    }

    pub fn diag(a: LaurentPoly, d: LaurentPoly) -> Self {
        LoopElement {
            a,
            b: LaurentPoly::zero(),
            c: LaurentPoly::zero(),
            d,
        }
    }

    pub fn off_diag(b: LaurentPoly, c: LaurentPoly) -> Self {
        LoopElement {
            a: LaurentPoly::zero(),
            b,
            c,
            d: LaurentPoly::zero(),
        }
    }

    pub fn trace(&self) -> LaurentPoly {
        &self.a + &self.d
    }

    pub fn scale(&self, s: &GaussianRational) -> Self {
        LoopElement {
            a: self.a.scale(s),
            b: self.b.scale(s),
            c: self.c.scale(s),
            d: self.d.scale(s),
        }
    }

    /// Associative matrix product.
    pub fn matmul(&self, rhs: &LoopElement) -> Self {
        LoopElement {
            a: &(&self.a * &rhs.a) + &(&self.b * &rhs.c),
            b: &(&self.a * &rhs.b) + &(&self.b * &rhs.d),
            c: &(&self.c * &rhs.a) + &(&self.d * &rhs.c),
            d: &(&self.c * &rhs.b) + &(&self.d * &rhs.d),
        }
    }

    /// The automorphism swapping off-diagonal conjugation with `t -> t^-1`:
    /// `(a, b, c, d)(t) -> (d, c, b, a)(t^-1)`.
    pub fn theta(&self) -> Self {
        LoopElement {
            a: self.d.tau(),
            b: self.c.tau(),
            c: self.b.tau(),
            d: self.a.tau(),
        }
    }

    /// The automorphism `(a, b, c, d)(t) -> (d(t), c(t)*t, b(t)/t, a(t))`.
    pub fn sigma(&self) -> Self {
        LoopElement {
            a: self.d.clone(),
            b: self.c.shift(1),
            c: self.b.shift(-1),
            d: self.a.clone(),
        }
    }

    /// The antiautomorphism `(a, b, c, d)(t) -> (a, c, b, d)(t^-1)`.
    pub fn dagger(&self) -> Self {
        LoopElement {
            a: self.a.tau(),
            b: self.c.tau(),
            c: self.b.tau(),
            d: self.d.tau(),
        }
    }

    /// The functional `a(1) + d(1)`; vanishes on brackets.
    pub fn epsilon(&self) -> GaussianRational {
        &self.a.eval_at_one() + &self.d.eval_at_one()
    }

    pub fn is_in(&self, space: Space) -> bool {
        match space {
            Space::Lsl2 => self.trace().is_zero(),
            Space::L => self.epsilon().is_zero(),
            Space::O => self.trace().is_zero() && self.theta() == *self,
            Space::Ace => self.epsilon().is_zero() && self.theta() == *self,
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "a": self.a.to_string(),
            "b": self.b.to_string(),
            "c": self.c.to_string(),
            "d": self.d.to_string(),
        })
    }
}

/// The matrix commutator `xy - yx`.
pub fn bracket(x: &LoopElement, y: &LoopElement) -> LoopElement {
    &x.matmul(y) - &y.matmul(x)
}

impl std::ops::Add for &LoopElement {
    type Output = LoopElement;
    fn add(self, rhs: &LoopElement) -> LoopElement {
        LoopElement {
            a: &self.a + &rhs.a,
            b: &self.b + &rhs.b,
            c: &self.c + &rhs.c,
            d: &self.d + &rhs.d,
        }
    }
}

impl std::ops::Sub for &LoopElement {
    type Output = LoopElement;
    fn sub(self, rhs: &LoopElement) -> LoopElement {
        LoopElement {
            a: &self.a - &rhs.a,
            b: &self.b - &rhs.b,
            c: &self.c - &rhs.c,
            d: &self.d - &rhs.d,
        }
    }
}

impl std::ops::Neg for &LoopElement {
    type Output = LoopElement;
    fn neg(self) -> LoopElement {
        LoopElement {
            a: -&self.a,
            b: -&self.b,
            c: -&self.c,
            d: -&self.d,
        }
    }
}

impl fmt::Display for LoopElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            write!(f, "0")
        } else if self.b.is_zero() && self.c.is_zero() {
            write!(f, "diag({}, {})", self.a, self.d)
        } else if self.a.is_zero() && self.d.is_zero() {
            write!(f, "offdiag({}, {})", self.b, self.c)
        } else {
            write!(
                f,
                "[[{}, {}], [{}, {}]]",
                self.a, self.b, self.c, self.d
            )
        }
    }
}

/// The subspaces for which membership is decidable entrywise.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Space {
    /// Trace zero.
    Lsl2,
    /// Kernel of epsilon.
    L,
    /// Theta-fixed and trace zero: the Onsager algebra.
    O,
    /// Theta-fixed inside the kernel of epsilon: the alternating central
    /// extension.
    Ace,
}

/// The nine named element families. The plain tags live in the Onsager
/// algebra; the `c`-prefixed tags are their counterparts in the central
/// extension.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FamilyTag {
    A,
    B,
    CA,
    CB,
    W,
    Gt,
    CW,
    CG,
    CGt,
}

impl FamilyTag {
    pub const ALL: [FamilyTag; 9] = [
        FamilyTag::A,
        FamilyTag::B,
        FamilyTag::CA,
        FamilyTag::CB,
        FamilyTag::W,
        FamilyTag::Gt,
        FamilyTag::CW,
        FamilyTag::CG,
        FamilyTag::CGt,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            FamilyTag::A => "A",
            FamilyTag::B => "B",
            FamilyTag::CA => "cA",
            FamilyTag::CB => "cB",
            FamilyTag::W => "W",
            FamilyTag::Gt => "Gt",
            FamilyTag::CW => "cW",
            FamilyTag::CG => "cG",
            FamilyTag::CGt => "cGt",
        }
    }

    pub fn by_name(name: &str) -> Option<FamilyTag> {
        FamilyTag::ALL.iter().copied().find(|t| t.name() == name)
    }

    /// Smallest admissible index: the G-type families start at 1, all other
    /// families take any integer.
    pub fn min_index(&self) -> Option<i64> {
        match self {
            FamilyTag::Gt | FamilyTag::CG | FamilyTag::CGt => Some(1),
            _ => None,
        }
    }

    pub fn index_in_range(&self, index: i64) -> bool {
        self.min_index().map_or(true, |m| index >= m)
    }
}

impl fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A family element named by tag and integer index, e.g. `cB[-3]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FamilyName {
    pub tag: FamilyTag,
    pub index: i64,
}

impl FamilyName {
    pub fn new(tag: FamilyTag, index: i64) -> Self {
        FamilyName { tag, index }
    }

    pub fn element(&self) -> Result<LoopElement, FamilyError> {
        family(self.tag, self.index)
    }
}

impl fmt::Display for FamilyName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.tag, self.index)
    }
}

impl FromStr for FamilyName {
    type Err = FamilyError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (name, index) = parse_family_parts(s)?;
        let tag = FamilyTag::by_name(&name).ok_or(FamilyError::UnknownFamily(name))?;
        Ok(FamilyName { tag, index })
    }
}

/// `((t + t^-1)/2)^k`, the ladder factor of the W/G families.
fn midpoint_pow(k: u32) -> LaurentPoly {
    let half = GaussianRational::ratio(1, 2);
    let base = LaurentPoly::from_terms([(1, half.clone()), (-1, half)]);
    base.pow(k)
}

/// `(t^k - t^-k)/2`.
fn half_difference(k: i64) -> LaurentPoly {
    let half = GaussianRational::ratio(1, 2);
    LaurentPoly::from_terms([(k, half.clone()), (-k, -&half)])
}

/// `t^k - 1`.
fn t_pow_minus_one(k: i64) -> LaurentPoly {
    LaurentPoly::from_terms([(k, GaussianRational::one()), (0, GaussianRational::from_int(-1))])
}

/// Construct the named family element. The double-index convention of the
/// W-type families is flattened to one integer: `W[n]` with `n <= 0` is the
/// symmetric ladder element, `n >= 1` the shifted one, and `W[0]`, `W[1]`
/// coincide with `A[0]`, `A[1]`.
pub fn family(tag: FamilyTag, index: i64) -> Result<LoopElement, FamilyError> {
    if !tag.index_in_range(index) {
        return Err(FamilyError::IndexOutOfRange { family: tag, index });
    }
    let elem = match tag {
        // Off-diagonal pair t^k / t^-k.
        FamilyTag::A | FamilyTag::CA => {
            LoopElement::off_diag(LaurentPoly::t_pow(index), LaurentPoly::t_pow(-index))
        }
        // diag((t^k - t^-k)/2, -(t^k - t^-k)/2); zero at k = 0.
        FamilyTag::B => {
            let p = half_difference(index);
            LoopElement::diag(p.clone(), -&p)
        }
        // diag(t^k - 1, t^-k - 1); zero at k = 0.
        FamilyTag::CB => LoopElement::diag(t_pow_minus_one(index), t_pow_minus_one(-index)),
        FamilyTag::W | FamilyTag::CW => {
            if index <= 0 {
                let m = midpoint_pow((-index) as u32);
                LoopElement::off_diag(m.clone(), m)
            } else {
                let m = midpoint_pow((index - 1) as u32);
                LoopElement::off_diag(m.shift(1), m.shift(-1))
            }
        }
        // diag(t^-1 - t, t - t^-1) times the ladder factor.
        FamilyTag::Gt => {
            let m = midpoint_pow((index - 1) as u32);
            let p = &m.shift(-1) - &m.shift(1);
            LoopElement::diag(p.clone(), -&p)
        }
        // diag(2t - 2, 2t^-1 - 2) times the ladder factor.
        FamilyTag::CG => {
            let m = midpoint_pow((index - 1) as u32);
            let two = GaussianRational::from_int(2);
            let up = &m.shift(1).scale(&two) - &m.scale(&two);
            let down = &m.shift(-1).scale(&two) - &m.scale(&two);
            LoopElement::diag(up, down)
        }
        // The dagger image of the previous family: diagonal entries swapped.
        FamilyTag::CGt => {
            let m = midpoint_pow((index - 1) as u32);
            let two = GaussianRational::from_int(2);
            let up = &m.shift(-1).scale(&two) - &m.scale(&two);
            let down = &m.shift(1).scale(&two) - &m.scale(&two);
            LoopElement::diag(up, down)
        }
    };
    Ok(elem)
}

/// Shorthand used pervasively in tests and the verification harness;
/// panics on an out-of-range index.
pub fn fam(tag: FamilyTag, index: i64) -> LoopElement {
    family(tag, index).expect("family index in range")
}

#[cfg(test)]
mod tests {
    use super::FamilyTag::*;
    use super::*;

    fn c(n: i64) -> GaussianRational {
        GaussianRational::from_int(n)
    }

    #[test]
    fn bracket_of_ladder_generators() {
        // [A_1, A_0] = 2 B_1 = diag(t - t^-1, t^-1 - t)
        let lhs = bracket(&fam(A, 1), &fam(A, 0));
        assert_eq!(lhs, fam(B, 1).scale(&c(2)));
        let expected = LoopElement::diag(
            LaurentPoly::from_terms([(1, c(1)), (-1, c(-1))]),
            LaurentPoly::from_terms([(-1, c(1)), (1, c(-1))]),
        );
        assert_eq!(lhs, expected);
        // Alternating.
        assert!(bracket(&fam(A, 0), &fam(A, 0)).is_zero());
        // [cA_1, cA_0] = cB_1 - cB_{-1}, the same matrix as above.
        let ace = bracket(&fam(CA, 1), &fam(CA, 0));
        assert_eq!(ace, &fam(CB, 1) - &fam(CB, -1));
        assert_eq!(ace, expected);
    }

    #[test]
    fn family_base_cases() {
        assert!(fam(B, 0).is_zero());
        assert_eq!(
            fam(CB, 2),
            LoopElement::diag(
                LaurentPoly::from_terms([(2, c(1)), (0, c(-1))]),
                LaurentPoly::from_terms([(-2, c(1)), (0, c(-1))]),
            )
        );
        assert_eq!(
            fam(CG, 1),
            LoopElement::diag(
                LaurentPoly::from_terms([(1, c(2)), (0, c(-2))]),
                LaurentPoly::from_terms([(-1, c(2)), (0, c(-2))]),
            )
        );
        assert_eq!(fam(W, 0), fam(A, 0));
        assert_eq!(fam(W, 1), fam(A, 1));
        assert!(family(Gt, 0).is_err());
        assert!(family(CG, -2).is_err());
        assert!(family(CGt, 0).is_err());
    }

    #[test]
    fn symmetry_actions_on_families() {
        // sigma: A_k -> A_{1-k}
        assert_eq!(fam(A, 3).sigma(), fam(A, -2));
        // theta fixes W_{-2}
        assert_eq!(fam(W, -2).theta(), fam(W, -2));
        // dagger negates Gt
        assert_eq!(fam(Gt, 2).dagger(), -&fam(Gt, 2));
        // sigma: cW_{-3} -> cW_4
        assert_eq!(fam(CW, -3).sigma(), fam(CW, 4));
        // sigma and dagger swap cG and cGt
        assert_eq!(fam(CG, 3).sigma(), fam(CGt, 3));
        assert_eq!(fam(CGt, 3).dagger(), fam(CG, 3));
    }

    #[test]
    fn epsilon_values() {
        assert_eq!(
            LoopElement::identity_times(LaurentPoly::t_pow(5)).epsilon(),
            c(2)
        );
        assert!(fam(A, -2).epsilon().is_zero());
        assert!(fam(CB, 3).epsilon().is_zero());
    }

    #[test]
    fn membership_predicates() {
        assert!(fam(CA, 2).is_in(Space::Ace));
        assert!(!LoopElement::identity_times(LaurentPoly::one()).is_in(Space::Ace));
        assert!(fam(B, 3).is_in(Space::O));
        assert!(fam(CB, 3).is_in(Space::Ace));
        assert!(!fam(CB, 3).is_in(Space::O));
        assert!(fam(Gt, 1).is_in(Space::Lsl2));
    }

    #[test]
    fn display_forms() {
        assert_eq!(fam(CB, 2).to_string(), "diag(t^2 - 1, t^-2 - 1)");
        assert_eq!(fam(A, 1).to_string(), "offdiag(t, t^-1)");
        assert_eq!(LoopElement::zero().to_string(), "0");
    }

    #[test]
    fn family_literal_round_trip() {
        let name: FamilyName = "cB[-3]".parse().unwrap();
        assert_eq!(name, FamilyName::new(CB, -3));
        assert_eq!(name.to_string(), "cB[-3]");
        assert!("Q[2]".parse::<FamilyName>().is_err());
        assert!(matches!(
            "Gt[0]".parse::<FamilyName>().unwrap().element(),
            Err(FamilyError::IndexOutOfRange { .. })
        ));
    }
}

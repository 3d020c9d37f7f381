//! The q -> 1 limit engine.
//!
//! Connects the q-deformed algebras to their classical counterparts: the
//! q-deformed Dolan/Grady relations degenerate to the classical ones, the
//! eleven defining relations of the extended q-algebra degenerate to their
//! classical forms, and the recursively defined PBW elements degenerate to
//! ladder identities that can be validated on the concrete matrices.
//!
//! The only irrationality in sight is `xi = i(q - q^-1)`, which is rational
//! over Q(i)(q); no square-root machinery is needed. Rescaling substitutes
//! `xi^w` per symbol, division by the recorded total weight is exact in the
//! fraction field, and a failed q = 1 evaluation is diagnosed as either a
//! wrong weight or a genuine pole.

use crate::gaussian::GaussianRational;
use crate::loop_algebra::{fam, FamilyTag, LoopElement};
use crate::ncpoly::{comm, NcPoly, QSymbol};
use crate::ratfunc::RatFunc;
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum QLimitError {
    /// A coefficient still has a pole at q = 1 after dividing by the
    /// recorded xi power.
    #[error("coefficient has a pole at q = 1")]
    PoleAtOne,
    /// The requested division power exceeds the xi-order of some term.
    #[error("division power exceeds the xi-order of a term")]
    NonVanishingXi,
    #[error("index out of range for this construction")]
    BadIndex,
}

/// `xi = i(q - q^-1) = i(q^2 - 1)/q`.
pub fn xi() -> RatFunc {
    let q2_minus_1 = &RatFunc::q_pow(2) - &RatFunc::one();
    RatFunc::constant(GaussianRational::i()) * (q2_minus_1 / RatFunc::q())
}

/// The scalar `-(q^2 - q^-2)^2` appearing in the extended q-relations.
/// Distinct from the projection map onto the Onsager algebra, which this
/// crate calls `project_rho`.
pub fn rho_scalar() -> RatFunc {
    let d = &RatFunc::q_pow(2) - &RatFunc::q_pow(-2);
    -&(&d * &d)
}

/// `[n]_q = (q^n - q^-n)/(q - q^-1)`.
pub fn q_integer(n: i64) -> RatFunc {
    let num = &RatFunc::q_pow(n) - &RatFunc::q_pow(-n);
    let den = &RatFunc::q_pow(1) - &RatFunc::q_pow(-1);
    &num / &den
}

/// The q-commutator `q XY - q^-1 YX`.
pub fn qcomm(x: &NcPoly<RatFunc>, y: &NcPoly<RatFunc>) -> NcPoly<RatFunc> {
    qcomm_by(&RatFunc::q(), x, y)
}

/// The twisted commutator `s XY - s^-1 YX`.
pub fn qcomm_by(s: &RatFunc, x: &NcPoly<RatFunc>, y: &NcPoly<RatFunc>) -> NcPoly<RatFunc> {
    x.mul(y).scale(s).sub(&y.mul(x).scale(&s.inv()))
}

/// Evaluate every coefficient at q = 1.
pub fn eval_coeffs_at_one(expr: &NcPoly<RatFunc>) -> Result<NcPoly<GaussianRational>, QLimitError> {
    let mut out = NcPoly::zero();
    for (word, coeff) in expr.terms() {
        let value = coeff.eval_at_one().map_err(|_| QLimitError::PoleAtOne)?;
        out.add_term(word.clone(), value);
    }
    Ok(out)
}

/// Substitute `s -> xi^{weight(s)} * s` for every symbol, divide every
/// coefficient by `xi^divide_xi_power`, and evaluate the coefficients at
/// q = 1. A pole signals either a wrong weight (the division power exceeds
/// the xi-order collected by the term) or a genuine pole of the original
/// coefficient.
pub fn rescale_limit(
    expr: &NcPoly<RatFunc>,
    divide_xi_power: u32,
) -> Result<NcPoly<GaussianRational>, QLimitError> {
    let xi = xi();
    let mut out = NcPoly::zero();
    for (word, coeff) in expr.terms() {
        let weight: u32 = word.iter().map(|s| s.xi_weight()).sum();
        let rescaled = coeff * &xi.pow(weight as i64 - divide_xi_power as i64);
        match rescaled.eval_at_one() {
            Ok(value) => out.add_term(word.clone(), value),
            Err(_) => {
                return Err(if weight < divide_xi_power {
                    QLimitError::NonVanishingXi
                } else {
                    QLimitError::PoleAtOne
                });
            }
        }
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// PBW elements of the q-Onsager algebra
// ---------------------------------------------------------------------------

/// Root labels of the recursively defined PBW elements.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PbwRoot {
    Alpha0,
    Alpha1,
    Delta,
}

fn w0q() -> NcPoly<RatFunc> {
    NcPoly::symbol(QSymbol::W0)
}

fn w1q() -> NcPoly<RatFunc> {
    NcPoly::symbol(QSymbol::W1)
}

/// `B_delta = q^-2 W1 W0 - W0 W1`.
fn b_delta() -> NcPoly<RatFunc> {
    w1q()
        .mul(&w0q())
        .scale(&RatFunc::q_pow(-2))
        .sub(&w0q().mul(&w1q()))
}

/// The recursion coefficient `q / ((q - q^-1)(q^2 - q^-2))`.
fn pbw_coeff() -> RatFunc {
    let d1 = &RatFunc::q_pow(1) - &RatFunc::q_pow(-1);
    let d2 = &RatFunc::q_pow(2) - &RatFunc::q_pow(-2);
    &RatFunc::q() / &(&d1 * &d2)
}

/// The PBW element for `n` copies of the imaginary root plus the given root,
/// transcribed literally from its recursion with no normal-form reduction.
/// `Delta` requires `n >= 1`. Word counts grow fast with `n`; the limit
/// checks use the substituted recursions instead of these expansions.
pub fn pbw(n: u32, root: PbwRoot) -> Result<NcPoly<RatFunc>, QLimitError> {
    if root == PbwRoot::Delta && n == 0 {
        return Err(QLimitError::BadIndex);
    }
    let mut cache: BTreeMap<(u32, PbwRoot), NcPoly<RatFunc>> = BTreeMap::new();
    Ok(pbw_memo(n, root, &mut cache))
}

fn pbw_memo(
    n: u32,
    root: PbwRoot,
    cache: &mut BTreeMap<(u32, PbwRoot), NcPoly<RatFunc>>,
) -> NcPoly<RatFunc> {
    if let Some(hit) = cache.get(&(n, root)) {
        return hit.clone();
    }
    let coeff = pbw_coeff();
    let value = match (root, n) {
        (PbwRoot::Alpha0, 0) => w0q(),
        (PbwRoot::Alpha0, 1) => w1q().add(&comm(&b_delta(), &w0q()).scale(&coeff)),
        (PbwRoot::Alpha0, n) => {
            let prev = pbw_memo(n - 1, PbwRoot::Alpha0, cache);
            let prev2 = pbw_memo(n - 2, PbwRoot::Alpha0, cache);
            prev2.add(&comm(&b_delta(), &prev).scale(&coeff))
        }
        (PbwRoot::Alpha1, 0) => w1q(),
        (PbwRoot::Alpha1, 1) => w0q().sub(&comm(&b_delta(), &w1q()).scale(&coeff)),
        (PbwRoot::Alpha1, n) => {
            let prev = pbw_memo(n - 1, PbwRoot::Alpha1, cache);
            let prev2 = pbw_memo(n - 2, PbwRoot::Alpha1, cache);
            prev2.sub(&comm(&b_delta(), &prev).scale(&coeff))
        }
        (PbwRoot::Delta, 0) => unreachable!("guarded by pbw()"),
        (PbwRoot::Delta, 1) => b_delta(),
        (PbwRoot::Delta, n) => {
            let lead = pbw_memo(n - 1, PbwRoot::Alpha1, cache);
            let mut acc = lead
                .mul(&w0q())
                .scale(&RatFunc::q_pow(-2))
                .sub(&w0q().mul(&lead));
            let tail_coeff = &RatFunc::q_pow(-2) - &RatFunc::one();
            for l in 0..=(n - 2) {
                let x = pbw_memo(l, PbwRoot::Alpha1, cache);
                let y = pbw_memo(n - l - 2, PbwRoot::Alpha1, cache);
                acc = acc.add(&x.mul(&y).scale(&tail_coeff));
            }
            acc
        }
    };
    cache.insert((n, root), value.clone());
    value
}

// ---------------------------------------------------------------------------
// Limit identities for the PBW recursions
// ---------------------------------------------------------------------------

/// The change of variables sending the alpha-type PBW elements to `xi` times
/// a ladder generator and the delta-type ones to `2 xi^2` times a diagonal
/// generator.
fn subst_alpha0(n: u32) -> NcPoly<RatFunc> {
    NcPoly::term(vec![QSymbol::A(-(n as i64))], xi())
}

fn subst_alpha1(n: u32) -> NcPoly<RatFunc> {
    NcPoly::term(vec![QSymbol::A(n as i64 + 1)], xi())
}

fn subst_delta(m: u32) -> NcPoly<RatFunc> {
    let two_xi_sq = &RatFunc::from_int(2) * &xi().pow(2);
    NcPoly::term(vec![QSymbol::B(m as i64)], two_xi_sq)
}

/// Rewrite the defining recursion of the requested PBW element with the
/// substituted symbols, divide by the root's xi power (one for alpha-type,
/// two for delta), and take q -> 1. The result is an identity over the
/// `A`/`B` alphabet that should vanish on the concrete matrices.
pub fn pbw_limit_identity(
    n: u32,
    root: PbwRoot,
) -> Result<NcPoly<GaussianRational>, QLimitError> {
    let coeff = pbw_coeff();
    let xi = xi();
    let (residual, weight): (NcPoly<RatFunc>, i64) = match (root, n) {
        (PbwRoot::Alpha0, 0) => (subst_alpha0(0).sub(&subst_alpha0(0)), 1),
        (PbwRoot::Alpha0, 1) => {
            let rhs = subst_alpha1(0).add(&comm(&subst_delta(1), &subst_alpha0(0)).scale(&coeff));
            (subst_alpha0(1).sub(&rhs), 1)
        }
        (PbwRoot::Alpha0, n) => {
            let rhs = subst_alpha0(n - 2)
                .add(&comm(&subst_delta(1), &subst_alpha0(n - 1)).scale(&coeff));
            (subst_alpha0(n).sub(&rhs), 1)
        }
        (PbwRoot::Alpha1, 0) => (subst_alpha1(0).sub(&subst_alpha1(0)), 1),
        (PbwRoot::Alpha1, 1) => {
            let rhs = subst_alpha0(0).sub(&comm(&subst_delta(1), &subst_alpha1(0)).scale(&coeff));
            (subst_alpha1(1).sub(&rhs), 1)
        }
        (PbwRoot::Alpha1, n) => {
            let rhs = subst_alpha1(n - 2)
                .sub(&comm(&subst_delta(1), &subst_alpha1(n - 1)).scale(&coeff));
            (subst_alpha1(n).sub(&rhs), 1)
        }
        (PbwRoot::Delta, 0) => return Err(QLimitError::BadIndex),
        (PbwRoot::Delta, 1) => {
            let rhs = subst_alpha1(0)
                .mul(&subst_alpha0(0))
                .scale(&RatFunc::q_pow(-2))
                .sub(&subst_alpha0(0).mul(&subst_alpha1(0)));
            (subst_delta(1).sub(&rhs), 2)
        }
        (PbwRoot::Delta, n) => {
            let lead = subst_alpha1(n - 1);
            let mut rhs = lead
                .mul(&subst_alpha0(0))
                .scale(&RatFunc::q_pow(-2))
                .sub(&subst_alpha0(0).mul(&lead));
            let tail_coeff = &RatFunc::q_pow(-2) - &RatFunc::one();
            for l in 0..=(n - 2) {
                rhs = rhs.add(&subst_alpha1(l).mul(&subst_alpha1(n - l - 2)).scale(&tail_coeff));
            }
            (subst_delta(n).sub(&rhs), 2)
        }
    };
    let divided = {
        let factor = xi.pow(-weight);
        let mut out = NcPoly::zero();
        for (word, c) in residual.terms() {
            out.add_term(word.clone(), c * &factor);
        }
        out
    };
    eval_coeffs_at_one(&divided)
}

/// Substitute the concrete matrices for the `A`/`B` symbols and evaluate the
/// identity by matrix arithmetic; true when it lands on the zero matrix.
/// Panics when the identity mentions any other symbol.
pub fn validate_on_matrices(identity: &NcPoly<GaussianRational>) -> bool {
    let mut total = LoopElement::zero();
    for (word, coeff) in identity.terms() {
        let mut product = LoopElement::diag(
            crate::laurent::LaurentPoly::one(),
            crate::laurent::LaurentPoly::one(),
        );
        for sym in word {
            let matrix = match sym {
                QSymbol::A(k) => fam(FamilyTag::A, *k),
                QSymbol::B(m) => fam(FamilyTag::B, *m),
                other => panic!("validate_on_matrices expects the A/B alphabet, got {other}"),
            };
            product = product.matmul(&matrix);
        }
        total = &total + &product.scale(coeff);
    }
    total.is_zero()
}

// ---------------------------------------------------------------------------
// The eleven defining relations of the extended q-algebra
// ---------------------------------------------------------------------------

/// Which side of the relation family to build.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RelationSide {
    /// q-deformed coefficients, q-commutators where the relations use them.
    Q,
    /// Classical coefficients and plain commutators.
    Classical,
}

fn cw(n: i64) -> NcPoly<RatFunc> {
    NcPoly::symbol(QSymbol::Cw(n))
}

fn cg(n: i64) -> NcPoly<RatFunc> {
    NcPoly::symbol(QSymbol::Cg(n))
}

fn cgt(n: i64) -> NcPoly<RatFunc> {
    NcPoly::symbol(QSymbol::Cgt(n))
}

/// Total xi-weight of the relation's terms: the division power that makes
/// the q -> 1 limit of relation `id` finite and classical.
pub fn relation_weight(id: u8) -> Result<u32, QLimitError> {
    match id {
        1 | 4 | 5 => Ok(2),
        2 | 3 | 6 | 7 | 8 | 9 => Ok(3),
        10 | 11 => Ok(4),
        _ => Err(QLimitError::BadIndex),
    }
}

/// All legs of relation `id` at parameters `(k, l)` as left-minus-right
/// expressions. Relations stated as a chain of two equalities, and displays
/// containing two separate relations, contribute two legs.
pub fn ace_relation_legs(
    id: u8,
    k: i64,
    l: i64,
    side: RelationSide,
) -> Result<Vec<NcPoly<RatFunc>>, QLimitError> {
    if !(1..=11).contains(&id) || k < 0 || l < 0 {
        return Err(QLimitError::BadIndex);
    }
    let rho = rho_scalar();
    let four = RatFunc::from_int(4);
    // Coefficient on the G-difference: 1/(q + q^-1) on the q side, 1/2
    // classically.
    let gdiff_coeff = match side {
        RelationSide::Q => (&RatFunc::q_pow(1) + &RatFunc::q_pow(-1)).inv(),
        RelationSide::Classical => RatFunc::constant(GaussianRational::ratio(1, 2)),
    };
    // The W-recursion scalar: rho on the q side, 4 classically.
    let wcoeff = match side {
        RelationSide::Q => rho,
        RelationSide::Classical => four,
    };
    let br = |x: &NcPoly<RatFunc>, y: &NcPoly<RatFunc>| match side {
        RelationSide::Q => qcomm(x, y),
        RelationSide::Classical => comm(x, y),
    };
    let legs = match id {
        1 => {
            let rhs = cgt(k + 1).sub(&cg(k + 1)).scale(&gdiff_coeff);
            vec![
                comm(&cw(0), &cw(k + 1)).sub(&rhs),
                comm(&cw(-k), &cw(1)).sub(&rhs),
            ]
        }
        2 => {
            let rhs = cw(-k - 1).scale(&wcoeff).sub(&cw(k + 1).scale(&wcoeff));
            vec![
                br(&cw(0), &cg(k + 1)).sub(&rhs),
                br(&cgt(k + 1), &cw(0)).sub(&rhs),
            ]
        }
        3 => {
            let rhs = cw(k + 2).scale(&wcoeff).sub(&cw(-k).scale(&wcoeff));
            vec![
                br(&cg(k + 1), &cw(1)).sub(&rhs),
                br(&cw(1), &cgt(k + 1)).sub(&rhs),
            ]
        }
        4 => vec![
            comm(&cw(-k), &cw(-l)),
            comm(&cw(k + 1), &cw(l + 1)),
        ],
        5 => vec![comm(&cw(-k), &cw(l + 1)).add(&comm(&cw(k + 1), &cw(-l)))],
        6 => vec![comm(&cw(-k), &cg(l + 1)).add(&comm(&cg(k + 1), &cw(-l)))],
        7 => vec![comm(&cw(-k), &cgt(l + 1)).add(&comm(&cgt(k + 1), &cw(-l)))],
        8 => vec![comm(&cw(k + 1), &cg(l + 1)).add(&comm(&cg(k + 1), &cw(l + 1)))],
        9 => vec![comm(&cw(k + 1), &cgt(l + 1)).add(&comm(&cgt(k + 1), &cw(l + 1)))],
        10 => vec![
            comm(&cg(k + 1), &cg(l + 1)),
            comm(&cgt(k + 1), &cgt(l + 1)),
        ],
        11 => vec![comm(&cgt(k + 1), &cg(l + 1)).add(&comm(&cg(k + 1), &cgt(l + 1)))],
        _ => unreachable!(),
    };
    Ok(legs)
}

/// The first leg of relation `id` at `(k, l)` as a left-minus-right
/// expression.
pub fn ace_relation(
    id: u8,
    k: i64,
    l: i64,
    side: RelationSide,
) -> Result<NcPoly<RatFunc>, QLimitError> {
    Ok(ace_relation_legs(id, k, l, side)?.remove(0))
}

/// The generator swap of the order-two automorphism: `cW[n] -> cW[1-n]` and
/// `cG <-> cGt` (and correspondingly on the other alphabets).
pub fn sigma_swap<C: crate::ncpoly::CoeffRing>(expr: &NcPoly<C>) -> NcPoly<C> {
    expr.map_symbols(|s| match s {
        QSymbol::W0 => QSymbol::W1,
        QSymbol::W1 => QSymbol::W0,
        QSymbol::Cw(n) => QSymbol::Cw(1 - n),
        QSymbol::Cg(n) => QSymbol::Cgt(n),
        QSymbol::Cgt(n) => QSymbol::Cg(n),
        QSymbol::A(k) => QSymbol::A(1 - k),
        QSymbol::B(m) => QSymbol::B(-m),
    })
}

/// Left-minus-right of the two q-deformed Dolan/Grady relations.
pub fn q_dolan_grady(which: u8) -> Result<NcPoly<RatFunc>, QLimitError> {
    let lhs_rhs = |x: &NcPoly<RatFunc>, y: &NcPoly<RatFunc>| {
        let inner = qcomm(x, y);
        let middle = qcomm_by(&RatFunc::q_inv(), x, &inner);
        let triple = comm(x, &middle);
        let scalar = {
            let d = &RatFunc::q_pow(2) - &RatFunc::q_pow(-2);
            &d * &d
        };
        triple.sub(&comm(y, x).scale(&scalar))
    };
    match which {
        1 => Ok(lhs_rhs(&w0q(), &w1q())),
        2 => Ok(lhs_rhs(&w1q(), &w0q())),
        _ => Err(QLimitError::BadIndex),
    }
}

/// Left-minus-right of the classical Dolan/Grady relations over any
/// coefficient ring, built from plain commutators.
pub fn dolan_grady_residual<C: crate::ncpoly::CoeffRing>(which: u8) -> Result<NcPoly<C>, QLimitError> {
    let w0 = NcPoly::<C>::symbol(QSymbol::W0);
    let w1 = NcPoly::<C>::symbol(QSymbol::W1);
    let (x, y) = match which {
        1 => (w0, w1),
        2 => (w1, w0),
        _ => return Err(QLimitError::BadIndex),
    };
    let triple = comm(&x, &comm(&x, &comm(&x, &y)));
    Ok(triple.sub(&comm(&x, &y).scale(&C::from_int(4))))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn qcomm_at_one_is_comm() {
        let x = w0q();
        let y = w1q();
        let q = eval_coeffs_at_one(&qcomm(&x, &y)).unwrap();
        let c = eval_coeffs_at_one(&comm(&x, &y)).unwrap();
        assert_eq!(q, c);
        assert!(comm(&x, &x).is_zero());
    }

    #[test]
    fn triple_twisted_commutator_expands() {
        // [X, [X, [X, Y]_q]_{q^-1}] = X^3 Y - [3]_q X^2 Y X + [3]_q X Y X^2 - Y X^3
        let x = w0q();
        let y = w1q();
        let lhs = comm(&x, &qcomm_by(&RatFunc::q_inv(), &x, &qcomm(&x, &y)));
        let three = q_integer(3);
        let xxy = x.mul(&x).mul(&x).mul(&y);
        let x2yx = x.mul(&x).mul(&y).mul(&x);
        let xyx2 = x.mul(&y).mul(&x).mul(&x);
        let yx3 = y.mul(&x).mul(&x).mul(&x);
        let rhs = xxy
            .sub(&x2yx.scale(&three))
            .add(&xyx2.scale(&three))
            .sub(&yx3);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn pbw_base_cases() {
        assert_eq!(pbw(0, PbwRoot::Alpha0).unwrap(), w0q());
        assert_eq!(pbw(0, PbwRoot::Alpha1).unwrap(), w1q());
        assert_eq!(pbw(1, PbwRoot::Delta).unwrap(), b_delta());
        assert_eq!(pbw(0, PbwRoot::Delta), Err(QLimitError::BadIndex));
    }

    #[test]
    fn pbw_alpha0_level_one_expansion() {
        // Independent hand expansion:
        // W1 + c (q^-2 W1 W0^2 - (1 + q^-2) W0 W1 W0 + W0^2 W1)
        let c = pbw_coeff();
        let w0 = w0q();
        let w1 = w1q();
        let expected = w1
            .add(&w1.mul(&w0).mul(&w0).scale(&(&c * &RatFunc::q_pow(-2))))
            .sub(
                &w0.mul(&w1)
                    .mul(&w0)
                    .scale(&(&c * &(&RatFunc::one() + &RatFunc::q_pow(-2)))),
            )
            .add(&w0.mul(&w0).mul(&w1).scale(&c));
        assert_eq!(pbw(1, PbwRoot::Alpha0).unwrap(), expected);
    }

    #[test]
    fn xi_vanishes_at_one() {
        assert!(xi().eval_at_one().unwrap().is_zero());
        assert_eq!(
            rho_scalar().eval_at_one().unwrap(),
            GaussianRational::zero()
        );
    }

    #[test]
    fn rescale_limit_of_qcomm_is_comm() {
        let expr = qcomm(&w0q(), &w1q());
        let lim = rescale_limit(&expr, 2).unwrap();
        let expected = eval_coeffs_at_one(&comm(&w0q(), &w1q())).unwrap();
        assert_eq!(lim, expected);
    }

    #[test]
    fn rescale_limit_error_taxonomy() {
        // Dividing a weight-2 term by xi^3 leaves 1/xi: wrong weight.
        let expr = w0q().mul(&w1q());
        assert_eq!(rescale_limit(&expr, 3), Err(QLimitError::NonVanishingXi));
        // A genuine pole survives when the weights balance.
        let pole = &RatFunc::one() / &(&RatFunc::q() - &RatFunc::one());
        let expr = w0q().mul(&w1q()).scale(&pole);
        assert_eq!(rescale_limit(&expr, 2), Err(QLimitError::PoleAtOne));
    }

    #[test]
    fn q_dolan_grady_limits_to_classical() {
        for which in [1, 2] {
            let lim = rescale_limit(&q_dolan_grady(which).unwrap(), 4).unwrap();
            let classical = dolan_grady_residual::<GaussianRational>(which).unwrap();
            assert_eq!(lim, classical);
            assert!(!lim.is_zero());
        }
    }

    #[test]
    fn ace_relation_examples() {
        // Relation 1 at k = 0: [cW0, cW1] - (cGt1 - cG1)/(q + q^-1).
        let r = ace_relation(1, 0, 0, RelationSide::Q).unwrap();
        let gcoeff = (&RatFunc::q_pow(1) + &RatFunc::q_pow(-1)).inv();
        let expected = comm(&cw(0), &cw(1)).sub(&cgt(1).sub(&cg(1)).scale(&gcoeff));
        assert_eq!(r, expected);

        // Relation 2 uses the q-commutator and the rho scalar.
        let r = ace_relation(2, 0, 0, RelationSide::Q).unwrap();
        let rho = rho_scalar();
        let expected = qcomm(&cw(0), &cg(1))
            .sub(&cw(-1).scale(&rho))
            .add(&cw(1).scale(&rho));
        assert_eq!(r, expected);

        // Relation 4 classically at (2, 3) is a single bracket.
        let r = ace_relation(4, 2, 3, RelationSide::Classical).unwrap();
        assert_eq!(r, comm(&cw(-2), &cw(-3)));

        assert_eq!(
            ace_relation(12, 0, 0, RelationSide::Q),
            Err(QLimitError::BadIndex)
        );
    }

    #[test]
    fn pbw_limit_identities_small() {
        // n = 1, delta: 2 B1 - A1 A0 + A0 A1, i.e. [A1, A0] = 2 B1.
        let id = pbw_limit_identity(1, PbwRoot::Delta).unwrap();
        let a0 = NcPoly::<GaussianRational>::symbol(QSymbol::A(0));
        let a1 = NcPoly::<GaussianRational>::symbol(QSymbol::A(1));
        let b1 = NcPoly::<GaussianRational>::symbol(QSymbol::B(1));
        let expected = b1.scale(&GaussianRational::from_int(2)).sub(&comm(&a1, &a0));
        assert_eq!(id, expected);
        assert!(validate_on_matrices(&id));

        // n = 1, alpha0 encodes [B1, A0] = A1 - A_{-1}.
        let id = pbw_limit_identity(1, PbwRoot::Alpha0).unwrap();
        assert!(validate_on_matrices(&id));
        let am1 = NcPoly::<GaussianRational>::symbol(QSymbol::A(-1));
        let b1c = NcPoly::<GaussianRational>::symbol(QSymbol::B(1));
        let expected = am1.sub(&a1).add(&comm(&b1c, &a0));
        assert_eq!(id, expected);

        // n = 2, alpha0 encodes [B1, A_{-1}] = A0 - A_{-2}.
        let id = pbw_limit_identity(2, PbwRoot::Alpha0).unwrap();
        assert!(validate_on_matrices(&id));
    }

    #[test]
    fn validate_rejects_wrong_identity() {
        // A0 A1 - A1 A0 without the B-correction is a nonzero matrix.
        let a0 = NcPoly::<GaussianRational>::symbol(QSymbol::A(0));
        let a1 = NcPoly::<GaussianRational>::symbol(QSymbol::A(1));
        assert!(!validate_on_matrices(&comm(&a0, &a1)));
        // [A1, A0] - 2 B1 does land on zero.
        let b1 = NcPoly::<GaussianRational>::symbol(QSymbol::B(1));
        let good = comm(&a1, &a0).sub(&b1.scale(&GaussianRational::from_int(2)));
        assert!(validate_on_matrices(&good));
        // [B1, A0] - A1 + A_{-1} lands on zero.
        let am1 = NcPoly::<GaussianRational>::symbol(QSymbol::A(-1));
        let good = comm(&b1, &a0).sub(&a1).add(&am1);
        assert!(validate_on_matrices(&good));
    }
}

//! Structure theory of the extended algebra at desk scale: the direct-sum
//! decomposition into the Onsager part and the center, a brute-force center
//! solver over a window, a bracket-closure spanning oracle, and the inclusion
//! and projection maps between the two algebras.

use crate::gaussian::GaussianRational;
use crate::loop_algebra::{bracket, fam, FamilyTag, LoopElement, Space};
use crate::window::{coords, fits_window, kernel_basis, CoordVector, RowSpace, Window};
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum StructureError {
    #[error("element is not in the extended algebra (theta-fixed kernel of epsilon)")]
    NotInAce,
}

/// The two summands of an extended-algebra element: `o_part` lies in the
/// Onsager algebra, `z_part` is a scalar matrix in the center, and they add
/// back to the input.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub o_part: LoopElement,
    pub z_part: LoopElement,
}

/// Split an extended-algebra element along the direct sum. With upper-left
/// diagonal entry `p(t)` (the lower-right is then `p(t^-1)`), the Onsager
/// part keeps the off-diagonal and the antisymmetrized diagonal
/// `(p - tau(p))/2`, while the center part is `I (x) (p + tau(p))/2`.
pub fn decompose(x: &LoopElement) -> Result<Decomposition, StructureError> {
    if !x.is_in(Space::Ace) {
        return Err(StructureError::NotInAce);
    }
    let half = GaussianRational::ratio(1, 2);
    let sym = (&x.a + &x.a.tau()).scale(&half);
    let antisym = (&x.a - &x.a.tau()).scale(&half);
    let o_part = LoopElement::new(antisym.clone(), x.b.clone(), x.c.clone(), -&antisym);
    let z_part = LoopElement::identity_times(sym);
    Ok(Decomposition { o_part, z_part })
}

/// The projection onto the Onsager algebra with the center as kernel.
pub fn project_rho(x: &LoopElement) -> Result<LoopElement, StructureError> {
    Ok(decompose(x)?.o_part)
}

/// An Onsager-algebra element written in the ladder basis: coefficients for
/// the off-diagonal elements `A[k]` and the diagonal elements `B[k]`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct OnsagerCoords {
    pub a: BTreeMap<i64, GaussianRational>,
    pub b: BTreeMap<i64, GaussianRational>,
}

impl OnsagerCoords {
    pub fn a_term(mut self, k: i64, c: GaussianRational) -> Self {
        self.a.insert(k, c);
        self
    }

    pub fn b_term(mut self, k: i64, c: GaussianRational) -> Self {
        self.b.insert(k, c);
        self
    }
}

/// The inclusion of the Onsager algebra into its central extension:
/// `A[k]` maps to `cA[k]` and `B[k]` to `(cB[k] - cB[-k])/2`.
pub fn iota(x: &OnsagerCoords) -> LoopElement {
    let half = GaussianRational::ratio(1, 2);
    let mut out = LoopElement::zero();
    for (&k, c) in &x.a {
        out = &out + &fam(FamilyTag::CA, k).scale(c);
    }
    for (&k, c) in &x.b {
        let diff = &fam(FamilyTag::CB, k) - &fam(FamilyTag::CB, -k);
        out = &out + &diff.scale(&(c * &half));
    }
    out
}

/// Which windowed subspace the center solver searches.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CenterSpace {
    /// Theta-fixed kernel of epsilon (the extended algebra).
    Ace,
    /// Theta-fixed trace-zero elements (the Onsager algebra); here the
    /// solver finds nothing, the center being zero.
    TraceZero,
}

/// Basis of the windowed subspace used by the center solver, in a fixed
/// deterministic order.
fn windowed_basis(w: Window, space: CenterSpace) -> Vec<LoopElement> {
    let n = w.bound() as i64;
    let mut basis = Vec::new();
    for k in -n..=n {
        basis.push(fam(FamilyTag::CA, k));
    }
    match space {
        CenterSpace::Ace => {
            for k in (-n..=n).filter(|&k| k != 0) {
                basis.push(fam(FamilyTag::CB, k));
            }
        }
        CenterSpace::TraceZero => {
            for k in 1..=n {
                basis.push(fam(FamilyTag::B, k));
            }
        }
    }
    basis
}

/// Solve for the windowed elements commuting with both probe elements
/// `cA[0]` and `cA[1]`, exactly. Two probes suffice because together with
/// the center they generate the whole algebra. Bracketing with `cA[1]` can
/// raise exponents by one, so the constraints live in a window widened by
/// one.
pub fn center_solver(w: Window, space: CenterSpace) -> Vec<CoordVector> {
    let basis = windowed_basis(w, space);
    let probes = [fam(FamilyTag::CA, 0), fam(FamilyTag::CA, 1)];
    let wide = Window::new(w.bound() + 1);
    let images: Vec<Vec<GaussianRational>> = basis
        .iter()
        .map(|g| {
            let mut row = Vec::with_capacity(2 * wide.dim());
            for probe in &probes {
                let img = coords(&bracket(g, probe), wide).expect("bracket fits widened window");
                row.extend(img.entries().iter().cloned());
            }
            row
        })
        .collect();
    kernel_basis(&images)
        .into_iter()
        .map(|combo| {
            let mut elem = LoopElement::zero();
            for (c, g) in combo.iter().zip(&basis) {
                if !c.is_zero() {
                    elem = &elem + &g.scale(c);
                }
            }
            coords(&elem, w).expect("kernel element fits the window")
        })
        .collect()
}

/// Rank of the intersection of the bracket-closure of `generators` with the
/// target window.
///
/// All spanning happens in an ambient window of bound `N + depth`; brackets
/// whose support escapes the ambient window are dropped (which can only
/// shrink the computed span, never inflate it). The intersection with the
/// target window is read off an echelon basis ordered with out-of-window
/// coordinates first: rows pivoted inside the window block have no
/// out-of-window support.
pub fn closure_span(generators: &[LoopElement], depth: usize, w: Window) -> usize {
    let ambient = Window::new(w.bound() + depth);
    let n = w.bound() as i64;

    // Permutation placing out-of-window coordinates before in-window ones.
    let width = ambient.width();
    let mut outside = Vec::new();
    let mut inside = Vec::new();
    for entry in 0..4 {
        for j in 0..width {
            let exp = j as i64 - ambient.bound() as i64;
            let idx = entry * width + j;
            if (-n..=n).contains(&exp) {
                inside.push(idx);
            } else {
                outside.push(idx);
            }
        }
    }
    let boundary = outside.len();
    let order: Vec<usize> = outside.into_iter().chain(inside).collect();
    let mut inverse = vec![0usize; order.len()];
    for (pos, &idx) in order.iter().enumerate() {
        inverse[idx] = pos;
    }

    let permute = |v: &CoordVector| -> Vec<GaussianRational> {
        let mut out = vec![GaussianRational::zero(); order.len()];
        for (idx, c) in v.entries().iter().enumerate() {
            if !c.is_zero() {
                out[inverse[idx]] = c.clone();
            }
        }
        out
    };
    let unpermute = |row: &[GaussianRational]| -> CoordVector {
        let mut entries = vec![GaussianRational::zero(); order.len()];
        for (pos, c) in row.iter().enumerate() {
            if !c.is_zero() {
                entries[order[pos]] = c.clone();
            }
        }
        CoordVector::from_raw(ambient, entries)
    };

    let mut space = RowSpace::new(ambient.dim());
    let mut frontier: Vec<LoopElement> = Vec::new();
    for g in generators {
        assert!(
            fits_window(g, ambient),
            "generator outside the ambient window"
        );
        let v = coords(g, ambient).expect("generator fits ambient window");
        if space.insert(permute(&v)) {
            frontier.push(g.clone());
        }
    }

    for _ in 0..depth {
        if frontier.is_empty() {
            break;
        }
        let current: Vec<LoopElement> = space
            .rows()
            .iter()
            .map(|row| unpermute(row).to_element())
            .collect();
        let mut next = Vec::new();
        for x in &frontier {
            for y in &current {
                let z = bracket(x, y);
                if z.is_zero() || !fits_window(&z, ambient) {
                    continue;
                }
                let v = coords(&z, ambient).expect("bracket fits ambient window");
                if space.insert(permute(&v)) {
                    next.push(z);
                }
            }
        }
        frontier = next;
    }

    space.pivots().iter().filter(|&&p| p >= boundary).count()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::LaurentPoly;
    use crate::loop_algebra::FamilyTag::*;
    use crate::window::span_rank;

    fn half() -> GaussianRational {
        GaussianRational::ratio(1, 2)
    }

    #[test]
    fn decompose_cb_family() {
        let d = decompose(&fam(CB, 2)).unwrap();
        assert_eq!(d.o_part, fam(B, 2));
        let z = (&fam(CB, 2) + &fam(CB, -2)).scale(&half());
        assert_eq!(d.z_part, z);
        assert_eq!(&d.o_part + &d.z_part, fam(CB, 2));
    }

    #[test]
    fn decompose_cg_family() {
        let d = decompose(&fam(CG, 1)).unwrap();
        assert_eq!(d.o_part, -&fam(Gt, 1));
        let z = (&fam(CG, 1) + &fam(CGt, 1)).scale(&half());
        assert_eq!(d.z_part, z);
    }

    #[test]
    fn decompose_onsager_element_is_trivial() {
        let d = decompose(&fam(A, 3)).unwrap();
        assert_eq!(d.o_part, fam(A, 3));
        assert!(d.z_part.is_zero());
    }

    #[test]
    fn decompose_requires_membership() {
        let x = LoopElement::identity_times(LaurentPoly::one());
        assert_eq!(decompose(&x), Err(StructureError::NotInAce));
    }

    #[test]
    fn rho_on_families() {
        assert_eq!(project_rho(&fam(CGt, 3)).unwrap(), fam(Gt, 3));
        assert!(project_rho(&(&fam(CB, 2) + &fam(CB, -2)))
            .unwrap()
            .is_zero());
        assert_eq!(project_rho(&fam(CB, 2)).unwrap(), fam(B, 2));
    }

    #[test]
    fn iota_on_basis() {
        let b2 = OnsagerCoords::default().b_term(2, GaussianRational::one());
        let expected = (&fam(CB, 2) - &fam(CB, -2)).scale(&half());
        assert_eq!(iota(&b2), expected);
        let a3 = OnsagerCoords::default().a_term(3, GaussianRational::one());
        assert_eq!(iota(&a3), fam(CA, 3));
    }

    #[test]
    fn rho_after_iota_is_identity() {
        let x = OnsagerCoords::default()
            .a_term(-2, GaussianRational::from_int(3))
            .a_term(1, GaussianRational::ratio(1, 2))
            .b_term(2, GaussianRational::from_int(-1));
        let direct = {
            let mut m = LoopElement::zero();
            m = &m + &fam(A, -2).scale(&GaussianRational::from_int(3));
            m = &m + &fam(A, 1).scale(&GaussianRational::ratio(1, 2));
            m = &m + &fam(B, 2).scale(&GaussianRational::from_int(-1));
            m
        };
        assert_eq!(project_rho(&iota(&x)).unwrap(), direct);
    }

    #[test]
    fn center_in_window_one() {
        let basis = center_solver(Window::new(1), CenterSpace::Ace);
        assert_eq!(basis.len(), 1);
        let expected = coords(
            &(&fam(CB, 1) + &fam(CB, -1)).scale(&half()),
            Window::new(1),
        )
        .unwrap();
        assert_eq!(span_rank(&[basis[0].clone(), expected]).unwrap(), 1);
    }

    #[test]
    fn trace_zero_center_is_trivial() {
        assert!(center_solver(Window::new(4), CenterSpace::TraceZero).is_empty());
    }

    #[test]
    fn closure_of_single_generator() {
        assert_eq!(closure_span(&[fam(A, 0)], 5, Window::new(2)), 1);
    }

    #[test]
    fn closure_of_onsager_generators_small() {
        // W0, W1 generate the whole algebra; windowed dimension is 3N + 1.
        let n = 2;
        let rank = closure_span(
            &[fam(W, 0), fam(W, 1)],
            2 * n + 2,
            Window::new(n),
        );
        assert_eq!(rank, 3 * n + 1);
    }
}

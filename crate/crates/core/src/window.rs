//! Finite-window coordinates and exact Gaussian elimination.
//!
//! A window bounds the `t`-exponents of all four matrix entries to `[-N, N]`,
//! turning spans and kernels into finite-dimensional problems over the
//! Gaussian rationals. Pivoting is deterministic (first nonzero column,
//! rows in insertion order) so computed bases are reproducible.

use crate::gaussian::GaussianRational;
use crate::laurent::LaurentPoly;
use crate::loop_algebra::LoopElement;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CoordError {
    #[error("entry {entry} has exponent {exponent} outside the window")]
    WindowOverflow { entry: char, exponent: i64 },
    #[error("coordinate vectors come from different windows")]
    MixedWindows,
}

/// Exponent bound `N >= 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Window(usize);

impl Window {
    pub fn new(bound: usize) -> Self {
        assert!(bound >= 1, "window bound must be at least 1");
        Window(bound)
    }

    pub fn bound(&self) -> usize {
        self.0
    }

    /// Number of stored exponents per matrix entry.
    pub fn width(&self) -> usize {
        2 * self.0 + 1
    }

    /// Total coordinate dimension: four entries times the exponent range.
    pub fn dim(&self) -> usize {
        4 * self.width()
    }
}

/// Dense coordinates of a windowed loop element: entries a, b, c, d in order,
/// exponents from `-N` to `N` within each block.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoordVector {
    window: Window,
    entries: Vec<GaussianRational>,
}

impl CoordVector {
    pub(crate) fn from_raw(window: Window, entries: Vec<GaussianRational>) -> Self {
        assert_eq!(entries.len(), window.dim(), "coordinate length mismatch");
        CoordVector { window, entries }
    }

    pub fn window(&self) -> Window {
        self.window
    }

    pub fn entries(&self) -> &[GaussianRational] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|c| c.is_zero())
    }

    /// Rebuild the matrix this vector encodes.
    pub fn to_element(&self) -> LoopElement {
        let w = self.window;
        let width = w.width();
        let block = |i: usize| -> LaurentPoly {
            LaurentPoly::from_terms((0..width).map(|j| {
                (
                    j as i64 - w.bound() as i64,
                    self.entries[i * width + j].clone(),
                )
            }))
        };
        LoopElement::new(block(0), block(1), block(2), block(3))
    }
}

/// Coordinates of `x` in the window, linear and injective on the windowed
/// subspace. Fails when any entry has support outside `[-N, N]`.
pub fn coords(x: &LoopElement, w: Window) -> Result<CoordVector, CoordError> {
    let n = w.bound() as i64;
    let width = w.width();
    let mut entries = vec![GaussianRational::zero(); w.dim()];
    for (i, (label, poly)) in [('a', &x.a), ('b', &x.b), ('c', &x.c), ('d', &x.d)]
        .into_iter()
        .enumerate()
    {
        for (exp, coeff) in poly.terms() {
            if exp < -n || exp > n {
                return Err(CoordError::WindowOverflow {
                    entry: label,
                    exponent: exp,
                });
            }
            entries[i * width + (exp + n) as usize] = coeff.clone();
        }
    }
    Ok(CoordVector { window: w, entries })
}

pub fn fits_window(x: &LoopElement, w: Window) -> bool {
    let n = w.bound() as i64;
    [&x.a, &x.b, &x.c, &x.d].into_iter().all(|p| {
        p.min_exp().map_or(true, |m| m >= -n) && p.max_exp().map_or(true, |m| m <= n)
    })
}

/// A row space kept in reduced row-echelon form. Each inserted vector is
/// reduced against the existing pivots; independent vectors are normalized
/// to a monic pivot and back-substituted into the other rows.
#[derive(Clone, Debug)]
pub struct RowSpace {
    ncols: usize,
    rows: Vec<Vec<GaussianRational>>,
    pivots: Vec<usize>,
}

impl RowSpace {
    pub fn new(ncols: usize) -> Self {
        RowSpace {
            ncols,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<GaussianRational>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Reduce `v` against the stored pivots in place.
    pub fn reduce(&self, v: &mut [GaussianRational]) {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let factor = v[p].clone();
            if factor.is_zero() {
                continue;
            }
            for (ve, re) in v.iter_mut().zip(row) {
                if !re.is_zero() {
                    *ve = &*ve - &(&factor * re);
                }
            }
        }
    }

    pub fn contains(&self, v: &[GaussianRational]) -> bool {
        let mut v = v.to_vec();
        self.reduce(&mut v);
        v.iter().all(|c| c.is_zero())
    }

    /// Insert a vector; returns true when it enlarged the space.
    pub fn insert(&mut self, mut v: Vec<GaussianRational>) -> bool {
        assert_eq!(v.len(), self.ncols, "row length mismatch");
        self.reduce(&mut v);
        let pivot = match v.iter().position(|c| !c.is_zero()) {
            Some(p) => p,
            None => return false,
        };
        let inv = v[pivot].inv();
        for e in v.iter_mut() {
            if !e.is_zero() {
                *e = &*e * &inv;
            }
        }
        // Back-substitute so earlier rows keep zeros at the new pivot.
        for row in self.rows.iter_mut() {
            let factor = row[pivot].clone();
            if factor.is_zero() {
                continue;
            }
            for (re, ve) in row.iter_mut().zip(&v) {
                if !ve.is_zero() {
                    *re = &*re - &(&factor * ve);
                }
            }
        }
        // Keep rows ordered by pivot column.
        let at = self
            .pivots
            .iter()
            .position(|&p| p > pivot)
            .unwrap_or(self.pivots.len());
        self.rows.insert(at, v);
        self.pivots.insert(at, pivot);
        true
    }
}

/// Rank of the span of the given vectors, all from one window.
pub fn span_rank(vs: &[CoordVector]) -> Result<usize, CoordError> {
    let Some(first) = vs.first() else {
        return Ok(0);
    };
    let w = first.window;
    if vs.iter().any(|v| v.window != w) {
        return Err(CoordError::MixedWindows);
    }
    let mut space = RowSpace::new(w.dim());
    for v in vs {
        space.insert(v.entries.clone());
    }
    Ok(space.rank())
}

/// Kernel of the linear map whose value on the i-th standard basis vector is
/// `images[i]`. Returns coefficient vectors in the parameter space.
///
/// Works by reducing the rows `[image | e_i]`: rows whose image part reduces
/// to zero expose kernel combinations in the augmented part.
pub fn kernel_basis(images: &[Vec<GaussianRational>]) -> Vec<Vec<GaussianRational>> {
    let n = images.len();
    if n == 0 {
        return Vec::new();
    }
    let m = images[0].len();
    let mut space = RowSpace::new(m + n);
    for (i, img) in images.iter().enumerate() {
        assert_eq!(img.len(), m, "image length mismatch");
        let mut row = img.clone();
        row.extend(vec![GaussianRational::zero(); n]);
        row[m + i] = GaussianRational::one();
        space.insert(row);
    }
    space
        .rows()
        .iter()
        .filter(|row| row[..m].iter().all(|c| c.is_zero()))
        .map(|row| row[m..].to_vec())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::loop_algebra::{fam, FamilyTag::*};

    #[test]
    fn coords_of_ladder_element() {
        // A_0 has unit entries at (b, exp 0) and (c, exp 0).
        let v = coords(&fam(A, 0), Window::new(2)).unwrap();
        let width = 5;
        for (i, e) in v.entries().iter().enumerate() {
            let expected_unit = i == width + 2 || i == 2 * width + 2;
            assert_eq!(!e.is_zero(), expected_unit);
        }
    }

    #[test]
    fn coords_overflow_is_reported() {
        let err = coords(&fam(A, 5), Window::new(2)).unwrap_err();
        assert_eq!(
            err,
            CoordError::WindowOverflow {
                entry: 'b',
                exponent: 5
            }
        );
    }

    #[test]
    fn round_trip_through_coords() {
        let x = fam(CG, 2);
        let v = coords(&x, Window::new(4)).unwrap();
        assert_eq!(v.to_element(), x);
    }

    #[test]
    fn ace_basis_rank_in_small_window() {
        // The 9 vectors cA_k (|k| <= 2), cB_k (0 < |k| <= 2) are independent.
        let w = Window::new(2);
        let mut vs = Vec::new();
        for k in -2..=2 {
            vs.push(coords(&fam(CA, k), w).unwrap());
        }
        for k in [-2, -1, 1, 2] {
            vs.push(coords(&fam(CB, k), w).unwrap());
        }
        assert_eq!(span_rank(&vs).unwrap(), 9);
    }

    #[test]
    fn duplicates_do_not_raise_rank() {
        let w = Window::new(2);
        let v = coords(&fam(A, 0), w).unwrap();
        assert_eq!(span_rank(&[v.clone(), v]).unwrap(), 1);
    }

    #[test]
    fn mixed_windows_rejected() {
        let a = coords(&fam(A, 0), Window::new(2)).unwrap();
        let b = coords(&fam(A, 0), Window::new(3)).unwrap();
        assert_eq!(span_rank(&[a, b]), Err(CoordError::MixedWindows));
    }

    #[test]
    fn kernel_of_simple_map() {
        // Map sending e1 -> (1, 0), e2 -> (0, 1), e3 -> (1, 1): kernel is
        // spanned by e1 + e2 - e3.
        let one = GaussianRational::one;
        let zero = GaussianRational::zero;
        let images = vec![
            vec![one(), zero()],
            vec![zero(), one()],
            vec![one(), one()],
        ];
        let kernel = kernel_basis(&images);
        assert_eq!(kernel.len(), 1);
        let k = &kernel[0];
        // Normalize to make the test insensitive to scaling.
        let scale = k.iter().find(|c| !c.is_zero()).unwrap().inv();
        let normalized: Vec<_> = k.iter().map(|c| c * &scale).collect();
        assert_eq!(
            normalized,
            vec![one(), one(), -&one()]
        );
    }
}

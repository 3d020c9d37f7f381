//! Cross-family identities connecting the two algebras, central witnesses,
//! and the symbol-swap symmetry of the q-relations.

use onsager_ace::gaussian::GaussianRational;
use onsager_ace::laurent::LaurentPoly;
use onsager_ace::loop_algebra::{bracket, fam, FamilyTag::*, LoopElement};
use onsager_ace::qlimit::{ace_relation, ace_relation_legs, sigma_swap, RelationSide};
use onsager_ace::window::{coords, span_rank, Window};

fn half() -> GaussianRational {
    GaussianRational::ratio(1, 2)
}

/// `((t + t^-1)/2)^k` assembled independently of the family constructors.
fn ladder(k: u32) -> LaurentPoly {
    LaurentPoly::from_terms([(1, half()), (-1, half())]).pow(k)
}

#[test]
fn plain_families_match_extended_ones() {
    for k in -8..=8 {
        assert_eq!(fam(A, k), fam(CA, k));
        let diff = (&fam(CB, k) - &fam(CB, -k)).scale(&half());
        assert_eq!(fam(B, k), diff);
    }
    for n in -8..=8 {
        assert_eq!(fam(W, n), fam(CW, n));
    }
    for n in 1..=8 {
        let diff = (&fam(CGt, n) - &fam(CG, n)).scale(&half());
        assert_eq!(fam(Gt, n), diff);
    }
}

#[test]
fn diagonal_sums_are_scalar_matrices() {
    // cB_k + cB_{-k} = I (x) (t^k + t^-k - 2)
    for k in 0..=8 {
        let sum = &fam(CB, k) + &fam(CB, -k);
        let expected = LoopElement::identity_times(LaurentPoly::from_terms([
            (k, GaussianRational::one()),
            (-k, GaussianRational::one()),
            (0, GaussianRational::from_int(-2)),
        ]));
        assert_eq!(sum, expected);
    }
    // (cG_{k+1} + cGt_{k+1})/2 = I (x) (t + t^-1 - 2) ((t + t^-1)/2)^k
    for k in 0..=8u32 {
        let sum = (&fam(CG, k as i64 + 1) + &fam(CGt, k as i64 + 1)).scale(&half());
        let witness = LaurentPoly::from_terms([
            (1, GaussianRational::one()),
            (-1, GaussianRational::one()),
            (0, GaussianRational::from_int(-2)),
        ]);
        let expected = LoopElement::identity_times(&witness * &ladder(k));
        assert_eq!(sum, expected);
    }
}

#[test]
fn diagonal_sums_are_central() {
    for k in -8..=8 {
        let z = &fam(CB, k) + &fam(CB, -k);
        for probe in [fam(CA, 0), fam(CA, 1)] {
            assert!(bracket(&z, &probe).is_zero());
        }
    }
}

#[test]
fn symmetries_fix_the_central_elements() {
    for k in 1..=8 {
        let z = (&fam(CB, k) + &fam(CB, -k)).scale(&half());
        assert_eq!(z.sigma(), z);
        assert_eq!(z.dagger(), z);
        let zg = (&fam(CG, k) + &fam(CGt, k)).scale(&half());
        assert_eq!(zg.sigma(), zg);
        assert_eq!(zg.dagger(), zg);
    }
}

#[test]
fn abelian_g_families_complement_the_onsager_part() {
    // For both diagonal families: pairwise commuting, independent, and
    // jointly independent with the windowed basis of the trace-zero part.
    for tag in [CG, CGt] {
        for k in 1..=8 {
            for l in 1..=8 {
                assert!(bracket(&fam(tag, k), &fam(tag, l)).is_zero());
            }
        }
        let w = Window::new(8);
        let mut vs: Vec<_> = (1..=8).map(|k| coords(&fam(tag, k), w).unwrap()).collect();
        assert_eq!(span_rank(&vs).unwrap(), 8);
        for k in -8..=8 {
            vs.push(coords(&fam(A, k), w).unwrap());
        }
        for k in 1..=8 {
            vs.push(coords(&fam(B, k), w).unwrap());
        }
        assert_eq!(span_rank(&vs).unwrap(), 8 + 25);
    }
}

#[test]
fn swapped_q_relations_reappear_in_the_list() {
    // The generator swap sends each listed q-relation instance to plus or
    // minus another listed instance.
    let candidates: Vec<_> = (1u8..=11)
        .flat_map(|id| {
            (0i64..=5).flat_map(move |k| {
                (0i64..=5).flat_map(move |l| {
                    ace_relation_legs(id, k, l, RelationSide::Q)
                        .unwrap()
                        .into_iter()
                })
            })
        })
        .collect();
    for id in [1u8, 4, 5, 10, 11] {
        for k in 0..=4 {
            for l in 0..=4 {
                let swapped = sigma_swap(&ace_relation(id, k, l, RelationSide::Q).unwrap());
                let negated = swapped.neg();
                assert!(
                    candidates.iter().any(|c| *c == swapped || *c == negated),
                    "swap of relation {id} at ({k}, {l}) not found in the list"
                );
            }
        }
    }
}

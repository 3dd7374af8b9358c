use std::collections::BTreeMap;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sotype_core::matrix::{preserves_hermitian_form, special_unitary};
use sotype_core::testkit::{brute_force_psl_spectrum, brute_force_sl_spectrum, random_product};
use sotype_core::*;

fn counts(pairs: &[(u64, u64)]) -> BTreeMap<u64, u64> {
    pairs.iter().copied().collect()
}

fn spectrum_of(family: ClassicalFamily, n: usize, q: u64) -> OrderSpectrum {
    order_spectrum(&classical_group(family, n, q, DEFAULT_CAP).unwrap())
}

#[test]
fn sl_matches_exhaustive_search() {
    for (n, p, k) in [
        (2, 2, 1),
        (2, 3, 1),
        (2, 2, 2),
        (2, 5, 1),
        (2, 7, 1),
        (2, 2, 3),
        (2, 3, 2),
        (3, 2, 1),
    ] {
        let f = field_make(p, k).unwrap();
        let q = f.order() as u64;
        let brute = brute_force_sl_spectrum(&f, n);
        assert_eq!(spectrum_of(ClassicalFamily::SL, n, q), brute, "SL({n},{q})");
    }
}

#[test]
fn psl_matches_exhaustive_search() {
    for (n, p, k) in [
        (2, 2, 2),
        (2, 5, 1),
        (2, 7, 1),
        (2, 2, 3),
        (2, 3, 2),
        (3, 2, 1),
    ] {
        let f = field_make(p, k).unwrap();
        let q = f.order() as u64;
        let brute = brute_force_psl_spectrum(&f, n);
        assert_eq!(
            spectrum_of(ClassicalFamily::PSL, n, q),
            brute,
            "PSL({n},{q})"
        );
    }
}

#[test]
fn order_formulas_match_enumeration() {
    use ClassicalFamily::*;
    let cases = [
        (SL, 2, 2),
        (SL, 2, 3),
        (SL, 2, 5),
        (SL, 2, 7),
        (SL, 2, 8),
        (SL, 2, 9),
        (SL, 2, 17),
        (SL, 3, 3),
        (SU, 3, 3),
        (SU, 4, 2),
        (PSL, 2, 5),
        (PSL, 2, 7),
        (PSL, 2, 8),
        (PSL, 2, 9),
        (PSL, 2, 17),
        (PSL, 3, 3),
        (PSU, 3, 3),
        (PSU, 4, 2),
    ];
    for (family, n, q) in cases {
        let g = classical_group(family, n, q, DEFAULT_CAP).unwrap();
        assert_eq!(
            g.order(),
            classical_order(family, n, q).unwrap(),
            "{family}({n},{q})"
        );
    }
}

// Spectra below were frozen from an independent computation with a different
// field modulus (GF(9) via x^2+x+2) and the identity Hermitian form.
#[test]
fn large_simple_group_spectra() {
    use ClassicalFamily::*;
    assert_eq!(
        spectrum_of(PSL, 2, 17).counts(),
        &counts(&[
            (1, 1),
            (2, 153),
            (3, 272),
            (4, 306),
            (8, 612),
            (9, 816),
            (17, 288)
        ])
    );
    assert_eq!(
        spectrum_of(PSL, 3, 3).counts(),
        &counts(&[
            (1, 1),
            (2, 117),
            (3, 728),
            (4, 702),
            (6, 936),
            (8, 1404),
            (13, 1728)
        ])
    );
    assert_eq!(
        spectrum_of(PSU, 3, 3).counts(),
        &counts(&[
            (1, 1),
            (2, 63),
            (3, 728),
            (4, 504),
            (6, 504),
            (7, 1728),
            (8, 1512),
            (12, 1008)
        ])
    );
    assert_eq!(
        spectrum_of(PSU, 4, 2).counts(),
        &counts(&[
            (1, 1),
            (2, 315),
            (3, 800),
            (4, 3780),
            (5, 5184),
            (6, 5760),
            (9, 5760),
            (12, 4320)
        ])
    );
}

#[test]
fn isomorphic_small_groups_share_spectra() {
    let a5 = order_spectrum(&family_group(&PermFamily::Alternating(5), DEFAULT_CAP).unwrap());
    assert_eq!(a5.counts(), &counts(&[(1, 1), (2, 15), (3, 20), (5, 24)]));
    assert_eq!(spectrum_of(ClassicalFamily::PSL, 2, 4), a5);
    assert_eq!(spectrum_of(ClassicalFamily::PSL, 2, 5), a5);
    let a6 = order_spectrum(&family_group(&PermFamily::Alternating(6), DEFAULT_CAP).unwrap());
    assert_eq!(spectrum_of(ClassicalFamily::PSL, 2, 9), a6);
}

#[test]
fn spectrum_independent_of_modulus() {
    // x^3 + x^2 + 1 rather than the default x^3 + x + 1.
    let alt = Arc::new(FiniteField::with_modulus(2, &[1, 0, 1, 1]).unwrap());
    let sl = closure(&sl_generators(2, &alt).unwrap(), DEFAULT_CAP).unwrap();
    assert_eq!(sl.order(), 504);
    let alt_spectrum = order_spectrum(&projectivize(&sl));
    assert_eq!(alt_spectrum, spectrum_of(ClassicalFamily::PSL, 2, 8));
    assert_eq!(
        alt_spectrum.counts(),
        &counts(&[(1, 1), (2, 63), (3, 56), (7, 216), (9, 168)])
    );
}

#[test]
fn unitary_products_preserve_the_form() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for (n, q) in [(3, 3), (4, 2)] {
        let gens = su_generators(n, q).unwrap();
        for _ in 0..1000 {
            let len = rng.gen_range(1..20);
            let m = random_product(&gens, len, &mut rng);
            assert!(preserves_hermitian_form(&m, q), "SU({n},{q}): {m:?}");
            assert_eq!(m.determinant(), 1);
        }
    }
}

#[test]
fn determinants_are_one() {
    for g in [
        classical_group(ClassicalFamily::SL, 2, 9, DEFAULT_CAP).unwrap(),
        classical_group(ClassicalFamily::SL, 3, 3, DEFAULT_CAP).unwrap(),
        special_unitary(3, 3, DEFAULT_CAP).unwrap(),
        special_unitary(4, 2, DEFAULT_CAP).unwrap(),
    ] {
        assert!(g.elements().iter().all(|m| m.determinant() == 1));
    }
}

#[test]
fn canonical_form_ignores_scalars() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for (p, k) in [(2, 2), (3, 1), (5, 1), (7, 1), (2, 3), (3, 2), (17, 1)] {
        let f = Arc::new(field_make(p, k).unwrap());
        let q = f.order();
        let mut made = 0;
        while made < 100 {
            let entries: Vec<u32> = (0..4).map(|_| rng.gen_range(0..q)).collect();
            let Ok(m) = Matrix::new(Arc::clone(&f), 2, entries) else {
                continue;
            };
            made += 1;
            let canon = m.normalized();
            for lambda in 1..q {
                assert_eq!(m.scaled(lambda).normalized(), canon);
            }
            assert_eq!(canon.normalized(), canon);
        }
    }
}

#[test]
fn projectivization_is_idempotent() {
    for (n, q) in [(2, 5), (2, 7), (2, 9), (3, 3)] {
        let psl = classical_group(ClassicalFamily::PSL, n, q, DEFAULT_CAP).unwrap();
        let again = projectivize(&psl);
        assert_eq!(again.order(), psl.order());
        assert!(psl.elements().iter().all(|x| again.contains(x)));
    }
}

#[test]
fn scalar_subgroup_accounts_for_the_quotient() {
    use ClassicalFamily::*;
    for (n, q) in [(2, 5), (2, 7), (2, 8), (2, 9), (2, 17), (3, 3), (3, 4)] {
        let sl = classical_group(SL, n, q, DEFAULT_CAP).unwrap();
        let scalars = sl
            .elements()
            .iter()
            .filter(|m| {
                (0..n).all(|i| (0..n).all(|j| (i == j) || m.get(i, j) == 0))
                    && (0..n).all(|i| m.get(i, i) == m.get(0, 0))
            })
            .count() as u64;
        let psl = projectivize(&sl);
        assert_eq!(psl.order() * scalars, sl.order(), "({n},{q})");
    }
}

#[test]
fn sl23_is_q8_by_c3() {
    let g = classical_group(ClassicalFamily::SL, 2, 3, DEFAULT_CAP).unwrap();
    assert_eq!(
        order_spectrum(&g).counts(),
        &counts(&[(1, 1), (2, 1), (3, 8), (4, 6), (6, 8)])
    );
}

use num_bigint::BigInt;
use proptest::prelude::*;

use spo_core::character::{schur_to_irr, specialize_spo, super_schur, torus_character};
use spo_core::littlewood::{tor_m, tor_m_by_size};
use spo_core::zmodule::{z_character, z_hilbert_closed};
use spo_core::{modrule_weyl, KClass, ModResult, Partition, SchurSum};

#[test]
fn specialization_commutes_with_torus_restriction() {
    for m in 1..=2 {
        for lam in Partition::all_up_to(5) {
            let irr = schur_to_irr(&KClass::schur(SchurSum::single(lam.clone()))).unwrap();
            let restricted = torus_character(&specialize_spo(&irr, m).unwrap(), m).unwrap();
            assert_eq!(restricted, super_schur(&lam, m).unwrap(), "λ={lam} m={m}");
        }
    }
}

#[test]
fn z_character_labels() {
    for (m, n) in [(1, 2), (2, 2), (2, 3)] {
        let z = z_character(m, n, 6);
        for slice in &z.coeffs {
            for (v, sum) in slice {
                assert!(v.is_admissible(m));
                for (e, c) in sum.iter() {
                    assert!(e.len() <= n && *c > BigInt::from(0), "[{v}]⊗({e}) has coefficient {c}");
                }
            }
        }
        assert_eq!(z.dimensions().unwrap(), z_hilbert_closed(m, n, 6));
    }
}

fn arb_partition(max_part: usize, max_len: usize) -> impl Strategy<Value = Partition> {
    proptest::collection::vec(0..=max_part, 0..=max_len).prop_map(Partition::from_unsorted)
}

proptest! {
    #[test]
    fn modrule_is_idempotent(mu in arb_partition(6, 8), m in 0usize..4) {
        if let ModResult::Finite { tau, .. } = modrule_weyl(&mu, m) {
            prop_assert!(tau.is_admissible(m));
            prop_assert_eq!(modrule_weyl(&tau, m), ModResult::Finite { i: 0, tau: tau.clone(), strips: 0 });
        }
    }

    #[test]
    fn tor_rows_are_preimages(lam in arb_partition(3, 3), m in 0usize..3) {
        prop_assume!(lam.is_admissible(m));
        let table = tor_m(&lam, m, 2).unwrap();
        for (i, row) in table.rows.iter().enumerate() {
            for (alpha, c) in row.iter() {
                prop_assert_eq!(c, &BigInt::from(1));
                let ModResult::Finite { i: j, tau, .. } = modrule_weyl(alpha, m) else { panic!("{alpha} is singular") };
                prop_assert_eq!((j, tau), (i, lam.clone()));
            }
        }
        let largest = table.rows.iter().flat_map(|r| r.iter().map(|(p, _)| p.size())).max().unwrap_or(0);
        prop_assert_eq!(table, tor_m_by_size(&lam, m, 2, largest + 6).unwrap());
    }
}

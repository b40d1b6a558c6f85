use fock_canon::canonical::*;
use fock_canon::fock::{bar, FockVector};
use fock_canon::laurent::LaurentPoly;
use fock_canon::partition::{n_core_quotient, revlex_order};

#[test]
fn printed_tables_reproduced() {
    for m in 2..=4 {
        assert_eq!(a_matrix(2, m).entries, printed_a(m).unwrap().entries, "A_{m}");
    }
    for m in 2..=6 {
        assert_eq!(canonical_upper(2, m).unwrap().entries, printed_d(m).unwrap().entries, "D_{m}");
    }
}

#[test]
fn d6_first_column() {
    let d = canonical_upper(2, 6).unwrap();
    let expected: FockVector = FockVector::from_terms(
        [("6", "1"), ("51", "q"), ("411", "q"), ("3111", "q^2"), ("21111", "q^2"), ("111111", "q^3")]
            .iter()
            .map(|(p, c)| (p.parse().unwrap(), c.parse().unwrap())),
    );
    assert_eq!(d.column(0), expected);
}

#[test]
fn bar_matrix_structure() {
    for n in 2..=4u32 {
        for m in 0..=8 {
            let a = a_matrix(n, m);
            assert!(a.bar_entries().multiply(&a).is_identity(), "n={n} m={m}");
            for (i, lam) in a.order.iter().enumerate() {
                assert!(a.get(i, i).is_one());
                for (j, mu) in a.order.iter().enumerate() {
                    let x = a.get(i, j);
                    // symmetry under conjugation
                    assert_eq!(x, a.entry(&mu.conjugate(), &lam.conjugate()), "n={n} {lam:?} {mu:?}");
                    if !x.is_zero() {
                        assert!(lam.dominance_leq(mu).unwrap());
                        assert_eq!(n_core_quotient(lam, n).core, n_core_quotient(mu, n).core);
                    }
                }
            }
        }
    }
}

fn in_q_z_q(x: &LaurentPoly) -> bool {
    x.is_zero() || x.min_exp() >= 1
}

fn in_qinv_z_qinv(x: &LaurentPoly) -> bool {
    x.is_zero() || x.max_exp().unwrap() <= -1
}

#[test]
fn basis_relations() {
    for n in 2..=3u32 {
        for m in 0..=8 {
            let d = canonical_upper(n, m).unwrap();
            let e = canonical_lower(n, m).unwrap();
            let c = adjoint_matrix(&d);
            assert!(d.multiply(&c).is_identity(), "n={n} m={m}");
            assert!(c.multiply(&d).is_identity());
            assert!(check_duality(&e, &c), "n={n} m={m}");
            for (i, lam) in d.order.iter().enumerate() {
                for (j, mu) in d.order.iter().enumerate() {
                    let same_core = n_core_quotient(lam, n).core == n_core_quotient(mu, n).core;
                    let (dx, ex, cx) = (d.get(i, j), e.get(i, j), c.get(i, j));
                    if i == j {
                        assert!(dx.is_one() && ex.is_one() && cx.is_one());
                        continue;
                    }
                    assert!(in_q_z_q(&dx), "d n={n} {lam:?} {mu:?} = {dx}");
                    assert!(in_qinv_z_qinv(&ex), "e n={n} {lam:?} {mu:?} = {ex}");
                    for x in [&dx, &cx] {
                        if !x.is_zero() {
                            assert!(lam.dominance_leq(mu).unwrap() && same_core);
                        }
                    }
                    if !ex.is_zero() {
                        assert!(mu.dominance_leq(lam).unwrap() && same_core);
                    }
                }
            }
            for j in 0..d.size() {
                assert_eq!(bar(&d.column(j), n), d.column(j));
                assert_eq!(bar(&e.row(j), n), e.row(j));
            }
        }
    }
}

#[test]
fn steinberg_factorization() {
    for n in 2..=3u32 {
        for m in 1..=8 {
            let e = canonical_lower(n, m).unwrap();
            for (i, lam) in revlex_order(m).iter().enumerate() {
                match steinberg_g_minus(lam, n) {
                    Ok(v) => assert_eq!(v, e.row(i), "n={n} {lam:?}"),
                    Err(CanonicalError::NotApplicable(..)) => {
                        assert!(lam.conjugate().is_n_regular(n));
                    }
                    Err(other) => panic!("{other}"),
                }
            }
        }
    }
}

#[test]
fn domino_generating_functions() {
    for m in (0..=8).step_by(2) {
        let r = domino_theorem_check(m).unwrap();
        assert!(r.passed(), "m={m}: {:?}", r.mismatches);
        assert!(r.checked > 0 || m == 0);
    }
}

#[test]
fn blocks_cover_all_partitions() {
    for n in 2..=4u32 {
        for m in 0..=8 {
            let b = BlockDecomposition::of(n, m);
            let total: usize = b.blocks.iter().map(|(_, v)| v.len()).sum();
            assert_eq!(total, revlex_order(m).len());
            for (core, members) in &b.blocks {
                assert_eq!((m - core.size()) % n as usize, 0);
                for p in members {
                    assert_eq!(&n_core_quotient(p, n).core, core);
                }
            }
        }
    }
}

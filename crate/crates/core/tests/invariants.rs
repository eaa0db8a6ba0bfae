//! Cross-module properties: production evaluators against the oracles, and
//! the stable formulas against direct evaluation.

use num_bigint::BigInt;
use symchar_core::algebra::ExactRat;
use symchar_core::characters::{CharacterFn, Induced, SkewCharacter, Trivial};
use symchar_core::oracle::{count_syt, frobenius_char_value};
use symchar_core::stable::{rect_class_value_with, stable_char_poly_with};
use symchar_core::*;

fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

#[test]
fn three_degree_routes_agree() {
    for lam in Partition::up_to(8) {
        let hook = degree_hook(&lam);
        let skew = degree_skew(&SkewShape::straight(lam.clone())).unwrap();
        let syt = count_syt(&SkewShape::straight(lam.clone())).unwrap();
        assert_eq!(hook, skew, "{lam:?}");
        assert_eq!(hook, syt, "{lam:?}");
    }
}

#[test]
fn skew_degrees_match_tableau_count() {
    for outer in Partition::up_to(7) {
        for inner in Partition::up_to(outer.size()).filter(|i| outer.contains(i)) {
            let shape = SkewShape::new(outer.clone(), inner).unwrap();
            assert_eq!(degree_skew(&shape).unwrap(), count_syt(&shape).unwrap(), "{shape}");
        }
    }
}

#[test]
fn murnaghan_nakayama_matches_frobenius() {
    for n in 0..=6 {
        for lam in Partition::all(n) {
            for alpha in Partition::all(n) {
                let class = CycleType::from_partition(&alpha);
                let mn = mn_value(&SkewShape::straight(lam.clone()), &class).unwrap();
                let fr = frobenius_char_value(&lam, &class).unwrap();
                assert_eq!(mn, fr, "λ={lam:?} α={alpha:?}");
            }
        }
    }
}

#[test]
fn induced_at_identity_is_binomial_times_degrees() {
    for n in 0..=7 {
        for m in 0..=n {
            for nu in Partition::all(m) {
                for tau in Partition::all(n - m) {
                    let psi = SkewCharacter::irreducible(nu.clone());
                    let phi = SkewCharacter::irreducible(tau.clone());
                    let v = induced_value(&psi, &phi, &CycleType::identity(n)).unwrap();
                    let expected = induced_degree(m, n, &degree_hook(&nu), &degree_hook(&tau));
                    assert_eq!(v, expected, "ν={nu:?} τ={tau:?}");
                }
            }
        }
    }
}

/// χ^(n,λ) = Σ_j (−1)^j Ind(χ^{λ/(1^j)} ⊗ triv_{n+j}), checked on every class.
#[test]
fn first_row_character_decomposes_into_induced_characters() {
    for lam in Partition::up_to(4) {
        for n in lam.first().max(1)..=lam.first().max(1) + 3 {
            let extended = first_row_extend(&lam, n).unwrap();
            let total = extended.size();
            for alpha in Partition::all(total) {
                let class = CycleType::from_partition(&alpha);
                let mut acc = BigInt::from(0);
                for j in 0..=lam.len() {
                    let psi = SkewCharacter::new(SkewShape::new(lam.clone(), column_strip(j)).unwrap());
                    let phi = Trivial(n + j);
                    let v = Induced { psi: &psi, phi: &phi }.eval(&class).unwrap();
                    if j % 2 == 0 {
                        acc += v;
                    } else {
                        acc -= v;
                    }
                }
                let direct = mn_value(&SkewShape::straight(extended.clone()), &class).unwrap();
                assert_eq!(acc, direct, "λ={lam:?} n={n} α={alpha:?}");
            }
        }
    }
}

#[test]
fn cz_degree_against_hook_and_tableaux() {
    for lam in Partition::up_to(6) {
        for n in lam.first().max(1)..=12 {
            let ext = first_row_extend(&lam, n).unwrap();
            let cz = cz_degree(&lam, n).unwrap();
            assert_eq!(cz, degree_hook(&ext));
            if ext.size() <= 20 {
                assert_eq!(cz, count_syt(&SkewShape::straight(ext)).unwrap());
            }
        }
    }
}

#[test]
fn degree_polynomial_shape() {
    for lam in Partition::up_to(6) {
        let poly = cz_degree_poly(&lam).unwrap();
        let k = lam.size();
        assert_eq!(poly.degree(), Some(k));
        let lead = ExactRat::new(degree_hook(&lam), symchar_core::algebra::factorial(k));
        assert_eq!(poly.leading_coeff(), lead);
        for n in lam.first()..=lam.first() + 12 {
            if n == 0 {
                continue;
            }
            assert_eq!(poly.eval_int(n as i64), ExactRat::from_integer(cz_degree(&lam, n).unwrap()));
        }
    }
}

#[test]
fn rectangular_classes() {
    let ev = MnEvaluator::per_call();
    for lam in Partition::up_to(5) {
        let k = lam.size();
        for r in 1..=4 {
            for n in lam.first().max(1)..=14 {
                if (n + k) % r != 0 {
                    continue;
                }
                let formula = rect_class_value_with(&ev, &lam, n, r).unwrap();
                let ext = first_row_extend(&lam, n).unwrap();
                let direct = ev.straight(&ext, &CycleType::rectangular(r, (n + k) / r)).unwrap();
                assert_eq!(formula, direct, "λ={lam:?} n={n} r={r}");
                if r == 1 {
                    assert_eq!(formula, cz_degree(&lam, n).unwrap());
                }
            }
        }
    }
}

#[test]
fn stable_polynomial_on_identity_family_is_degree_polynomial() {
    for lam in Partition::up_to(4) {
        let sp = stable_char_poly(&StableClassSpec::new(lam.clone(), Partition::empty())).unwrap();
        assert_eq!(sp.poly, cz_degree_poly(&lam).unwrap());
    }
}

#[test]
fn stable_polynomial_matches_direct_values_past_validity() {
    let ev = MnEvaluator::per_call();
    for lam in Partition::up_to(4) {
        for nu in Partition::up_to(4) {
            let spec = StableClassSpec::new(lam.clone(), nu);
            let sp = stable_char_poly_with(&ev, &spec).unwrap();
            for n in sp.valid_from..sp.valid_from + lam.size() + 6 {
                let direct = spec.direct_value(&ev, n).unwrap();
                assert_eq!(sp.poly.eval_int(n as i64), ExactRat::from_integer(direct), "{spec:?} n={n}");
            }
        }
    }
}

/// With λ = ∅ and n = m the class (ν, 1^{n−m}) is exactly ν, so a
/// rectangular ν puts the stable polynomial and the rectangular formula on
/// the same value.
#[test]
fn stable_and_rectangular_formulas_meet() {
    let ev = MnEvaluator::per_call();
    for (r, count) in [(1, 3), (2, 1), (2, 2), (3, 1), (4, 1), (2, 3)] {
        let nu = Partition::new(vec![r; count]).unwrap();
        let spec = StableClassSpec::new(Partition::empty(), nu.clone());
        let sp = stable_char_poly_with(&ev, &spec).unwrap();
        let n = nu.size();
        let rect = rect_class_value_with(&ev, &Partition::empty(), n, r).unwrap();
        assert_eq!(sp.poly.eval_int(n as i64), ExactRat::from_integer(rect));
    }
    for lam in Partition::up_to(4) {
        let k = lam.size();
        let spec = StableClassSpec::new(lam.clone(), Partition::empty());
        let sp = stable_char_poly_with(&ev, &spec).unwrap();
        for n in sp.valid_from..sp.valid_from + 5 {
            let rect = rect_class_value_with(&ev, &lam, n, 1).unwrap();
            assert_eq!(sp.poly.eval_int(n as i64), ExactRat::from_integer(rect), "λ={lam:?} k={k}");
        }
    }
}

#[test]
fn shared_cache_gives_identical_results() {
    let shared = MnEvaluator::new(symchar_core::characters::CachePolicy::Shared);
    let fresh = MnEvaluator::per_call();
    for lam in Partition::up_to(4) {
        for nu in Partition::up_to(4) {
            let spec = StableClassSpec::new(lam.clone(), nu);
            assert_eq!(
                stable_char_poly_with(&shared, &spec).unwrap(),
                stable_char_poly_with(&fresh, &spec).unwrap()
            );
        }
    }
}

#[test]
fn spot_values() {
    for n in 1..=10 {
        assert_eq!(degree_hook(&first_row_extend(&p("1"), n).unwrap()), BigInt::from(n));
    }
    let sp = stable_char_poly(&StableClassSpec::new(p("1"), p("2"))).unwrap();
    for n in 2..=10i64 {
        assert_eq!(sp.poly.eval_int(n), ExactRat::from_integer(BigInt::from(n - 2)));
    }
    for n in (2..=12).step_by(2) {
        assert_eq!(rect_class_value(&p("2"), n, 2).unwrap(), BigInt::from((n + 2) / 2));
    }
}

use cobordism_calc::bundles::{projectivization_chern, BundleModel, SurfaceModel};
use cobordism_calc::cobordism::{cover_scale, cp_class, linear_combine, product, s_number};
use cobordism_calc::genus::{chi_y, chi_y_functional, l_genus_functional};
use cobordism_calc::json::{from_json, to_json};
use cobordism_calc::rational::{int, parse_pq, to_pq};
use cobordism_calc::symfun::{enumerate_partitions, power_sum_in_e, transition};
use cobordism_calc::verifier::{gamma_sequence, ideal_membership_rule, IdealKind};
use cobordism_calc::{CobordismClass, Functional, Partition, Rational};
use num_traits::{One, Zero};
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-200i64..200, 1i64..30).prop_map(|(p, q)| Rational::new(p.into(), q.into()))
}

fn class(max_dim: usize) -> impl Strategy<Value = CobordismClass> {
    (0..=max_dim).prop_flat_map(|dim| {
        prop::collection::vec(rational(), enumerate_partitions(dim).len())
            .prop_map(move |v| CobordismClass::from_dense(dim, &v).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn product_is_commutative_and_unital(a in class(4), b in class(4)) {
        prop_assert_eq!(product(&a, &b), product(&b, &a));
        prop_assert_eq!(product(&a, &CobordismClass::point(Rational::one())), a.clone());
    }

    #[test]
    fn product_is_associative(a in class(3), b in class(3), c in class(3)) {
        prop_assert_eq!(product(&product(&a, &b), &c), product(&a, &product(&b, &c)));
    }

    #[test]
    fn product_distributes(a in class(3), b in class(3), k in rational()) {
        let c = CobordismClass::from_dense(b.dim(), &vec![k; enumerate_partitions(b.dim()).len()]).unwrap();
        let sum = linear_combine(&[(int(1), &b), (int(1), &c)]).unwrap();
        let lhs = product(&a, &sum);
        let rhs = linear_combine(&[(int(1), &product(&a, &b)), (int(1), &product(&a, &c))]).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn chi_y_is_multiplicative(a in class(4), b in class(4)) {
        let lhs = chi_y(&product(&a, &b)).unwrap();
        prop_assert_eq!(lhs, &chi_y(&a).unwrap() * &chi_y(&b).unwrap());
    }

    #[test]
    fn s_number_kills_decomposables(a in class(4), b in class(4)) {
        prop_assume!(a.dim() > 0 && b.dim() > 0);
        prop_assert!(s_number(&product(&a, &b)).unwrap().is_zero());
    }

    #[test]
    fn json_round_trip(a in class(7)) {
        let text = to_json(&a);
        let back: CobordismClass = from_json(&text).unwrap();
        prop_assert_eq!(&back, &a);
        prop_assert_eq!(to_json(&back), text);
    }

    #[test]
    fn functional_json_round_trip(v in prop::collection::vec(rational(), 7)) {
        let f = Functional::from_dense(5, &v).unwrap();
        let back: Functional = from_json(&to_json(&f)).unwrap();
        prop_assert_eq!(back, f);
    }

    #[test]
    fn rationals_round_trip(r in rational()) {
        prop_assert_eq!(parse_pq(&to_pq(&r)).unwrap(), r);
    }

    #[test]
    fn covers_scale_linearly(a in class(5), d in 1u64..20) {
        let f = chi_y_functional(a.dim().max(1)).unwrap().y_coefficient(0);
        prop_assume!(a.dim() > 0);
        prop_assert_eq!(f.eval(&cover_scale(&a, d).unwrap()).unwrap(), int(d as i64) * f.eval(&a).unwrap());
    }

    #[test]
    fn surface_signature(a in -80i64..80, b in -80i64..80) {
        // σ = (c1² - 2c2)/3.
        let x = SurfaceModel::from_ints(a, b);
        let sig = l_genus_functional(2).unwrap().eval(&x.to_class()).unwrap();
        prop_assert_eq!(sig, Rational::new((a - 2 * b).into(), 3.into()));
    }

    #[test]
    fn pbundle_euler_number(a in -50i64..50, b in -50i64..50, c in -50i64..50, rank in 2usize..7) {
        // Fibre bundle with fibre CP^{rank-1}.
        let x = projectivization_chern(&SurfaceModel::from_ints(a, b), &BundleModel::new(rank, int(c)).unwrap()).unwrap();
        prop_assert_eq!(x.euler_number(), int(rank as i64 * b));
    }
}

#[test]
fn power_sums_are_single_monomials() {
    for n in 1..=10 {
        let m = power_sum_in_e(n).unwrap().to_monomial();
        for lambda in &transition(n).partitions {
            let want = if *lambda == Partition::single(n) {
                int(1)
            } else {
                int(0)
            };
            assert_eq!(m.coeff(lambda), want, "degree {n}, {lambda}");
        }
    }
}

#[test]
fn ideals_are_nested() {
    // H ⊇ D ⊇ I, and DO ⊆ D.
    for n in 1..=10 {
        for lambda in enumerate_partitions(n) {
            let d = ideal_membership_rule(IdealKind::D, &lambda);
            if ideal_membership_rule(IdealKind::I, &lambda) {
                assert!(d, "{lambda}");
            }
            if d {
                assert!(ideal_membership_rule(IdealKind::H, &lambda), "{lambda}");
            }
            if ideal_membership_rule(IdealKind::Do, &lambda) {
                assert!(d, "{lambda}");
            }
        }
    }
}

#[test]
fn gamma_generators_are_not_decomposable() {
    let g = gamma_sequence(&int(-1), 6).unwrap();
    for i in 1..=6 {
        assert!(!s_number(g.get(i).unwrap()).unwrap().is_zero());
    }
    assert_eq!(g.get(2).unwrap(), &cp_class(2));
}

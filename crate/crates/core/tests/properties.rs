mod common;

use common::*;
use oscq::algebra::engine::Algebra;
use oscq::algebra::linear::{flip, tensor2, Element};
use oscq::algebra::uea::oscillator;
use oscq::bialgebra::{mcybe_check, schouten, RMatrixSkew};
use oscq::coeff::{Coefficient, Param};
use oscq::hopf::families::QuantumFamily;
use oscq::poisson::jacobi_check;
use proptest::prelude::*;

type Terms = Vec<(i64, u32, u32)>;

fn terms() -> impl Strategy<Value = Terms> {
    prop::collection::vec((-5i64..=5, 0u32..3, 0u32..3), 1..4)
}

/// `Σ c zᵃ xᵇ`.
fn poly(t: &Terms) -> Coefficient {
    let (z, x) = (p(Param::Z), p(Param::X));
    t.iter().fold(Coefficient::zero(), |acc, (n, a, b)| &acc + &(&c(*n) * &(&z.pow(*a) * &x.pow(*b))))
}

fn value(t: &Terms, z: &Q, x: &Q) -> Q {
    t.iter().fold(Q::from_integer(0.into()), |acc, (n, a, b)| {
        acc + Q::from_integer((*n).into()) * num_traits::pow(z.clone(), *a as usize) * num_traits::pow(x.clone(), *b as usize)
    })
}

fn nonzero_q() -> impl Strategy<Value = Q> {
    (1i64..7, 1i64..5, any::<bool>()).prop_map(|(n, d, s)| Q::new((if s { n } else { -n }).into(), d.into()))
}

fn element<const N: usize>(alg: &Algebra<N>, t: &[(i64, Vec<usize>)]) -> Element<N> {
    let mut out = Element::zero();
    for (n, w) in t {
        out.add_scaled(&alg.word(w), &c(*n));
    }
    out
}

fn words(gens: usize) -> impl Strategy<Value = Vec<(i64, Vec<usize>)>> {
    prop::collection::vec((-3i64..=3, prop::collection::vec(0..gens, 0..=3)), 1..=3)
}

fn rational_r() -> impl Strategy<Value = [i64; 6]> {
    prop::array::uniform6(-3i64..=3)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn coefficient_field_axioms(a in terms(), b in terms(), d in terms()) {
        let (a, b, d) = (poly(&a), poly(&b), poly(&d));
        prop_assert_eq!(&(&a + &b) + &d, &a + &(&b + &d));
        prop_assert_eq!(&a * &(&b + &d), &(&a * &b) + &(&a * &d));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert!((&a - &a).is_zero());
        if !b.is_zero() {
            prop_assert!((&(&a / &b) * &b - a.clone()).is_zero());
            prop_assert!((&b * &b.inv()).is_one());
        }
    }

    #[test]
    fn quotients_are_canonical(a in terms(), b in terms(), d in terms()) {
        let (a, b, d) = (poly(&a), poly(&b), poly(&d));
        prop_assume!(!b.is_zero() && !d.is_zero());
        let q1 = &a / &b;
        let q2 = &(&a * &d) / &(&b * &d);
        prop_assert_eq!(&q1, &q2);
        prop_assert_eq!(format!("{q1}"), format!("{q2}"));
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in terms(), b in terms(), z in nonzero_q(), x in nonzero_q()) {
        let at = [(Param::Z, z.clone()), (Param::X, x.clone())];
        let (va, vb) = (value(&a, &z, &x), value(&b, &z, &x));
        let (pa, pb) = (poly(&a), poly(&b));
        prop_assert_eq!(pa.eval(&at), Some(va.clone()));
        prop_assert_eq!((&pa * &pb).eval(&at), Some(&va * &vb));
        prop_assert_eq!((&pa - &pb).eval(&at), Some(&va - &vb));
        if vb != Q::from_integer(0.into()) {
            prop_assert_eq!((&pa / &pb).eval(&at), Some(&va / &vb));
        }
    }

    #[test]
    fn oscillator_product_is_associative(a in words(4), b in words(4), d in words(4)) {
        let alg = oscillator();
        let (a, b, d) = (element(alg, &a), element(alg, &b), element(alg, &d));
        prop_assert_eq!(alg.mul(&alg.mul(&a, &b), &d), alg.mul(&a, &alg.mul(&b, &d)));
    }

    #[test]
    fn deformed_products_are_associative(a in words(4), b in words(4), d in words(4), k in 0usize..3) {
        let h = QuantumFamily::ALL[k].build(3);
        let (a, b, d) = (element(&h.alg, &a), element(&h.alg, &b), element(&h.alg, &d));
        prop_assert_eq!(h.alg.mul(&h.alg.mul(&a, &b), &d), h.alg.mul(&a, &h.alg.mul(&b, &d)));
    }

    #[test]
    fn matrix_representation_is_multiplicative(a in words(4), b in words(4), k in 0usize..4) {
        let h = QuantumFamily::ALL[k % 3].build(4);
        let (alg, order) = if k == 3 { (oscillator(), 8) } else { (&h.alg, 4) };
        let (a, b) = (element(alg, &a), element(alg, &b));
        prop_assert_eq!(d1(&alg.mul(&a, &b)).truncate(order), d1(&a).mul(&d1(&b)).truncate(order));
    }

    #[test]
    fn flip_is_an_involution(a in words(4), b in words(4)) {
        let alg = oscillator();
        let t = tensor2(&element(alg, &a), &element(alg, &b));
        prop_assert_eq!(flip(&flip(&t)), t);
    }

    #[test]
    fn schouten_matches_lie_oracle(r in rational_r()) {
        let r = RMatrixSkew::from_ints(r);
        prop_assert_eq!(to_lin3(&schouten(&r)), common::schouten(&to_lin2(&r.as_tensor())));
    }

    #[test]
    fn mcybe_iff_solution_system_vanishes(r in rational_r()) {
        let [c1, c2, c3, c4, _, _] = r;
        let expected = c1 * c2 == 0 && c1 * (c4 + c3) == 0 && c2 * (c4 - c3) == 0;
        prop_assert_eq!(mcybe_check(&RMatrixSkew::from_ints(r)).holds, expected);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    #[test]
    fn type_two_brackets_satisfy_jacobi(r in prop::array::uniform4(-2i64..=2)) {
        let r = RMatrixSkew::from_ints([0, 0, r[0], r[1], r[2], r[3]]);
        prop_assert!(jacobi_check(&r));
    }
}

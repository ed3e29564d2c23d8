use oscq::algebra::expr::parse_coefficient;
use oscq::algebra::linear::tensor2;
use oscq::algebra::uea::{context_in, oscillator, oscillator_at, Generator, Uea};
use oscq::bialgebra::{Family, Kind, RMatrixSkew};
use oscq::lm::{basis_change, counit_defects, first_order_check, lm_coproduct, matrix_exp, table_three, LMSpec};

#[test]
fn nonstandard_iplus_exponential_has_closed_form() {
    let spec = LMSpec::for_family(Family::IplusNonstandard);
    for order in 1..=6 {
        let alg = oscillator_at(order);
        let cx = context_in(alg);
        let el = |s: &str| cx.element(s).unwrap();
        let exp = matrix_exp(alg, &spec.nu_sum()).unwrap();
        let e = el("exp(alpha_p*Ap + x*M)");
        let want = [
            [el("1 - x*M"), el("-x^2/alpha_p*M")],
            [el("alpha_p*M"), el("1 + x*M")],
        ];
        for i in 0..2 {
            for j in 0..2 {
                assert_eq!(exp[i][j], alg.mul(&want[i][j], &e), "order {order} entry ({i},{j})");
            }
        }
    }
}

#[test]
fn nonstandard_iplus_coproduct_in_primed_basis() {
    let alg = oscillator_at(5);
    let cx = context_in(alg);
    let spec = LMSpec::for_family(Family::IplusNonstandard);
    let map = lm_coproduct(&spec, alg).unwrap();
    let change = basis_change(&Family::IplusNonstandard.r(), Kind::Iplus).unwrap();
    let a1 = change.primed();
    let e = cx.element("exp(alpha_p*Ap + x*M)").unwrap();
    let one = alg.one();
    let am = Generator::Am.elem();
    let m = Generator::M.elem();
    let right = |x: &str| alg.mul(&cx.element(x).unwrap(), &e);
    let delta_a1 = {
        let mut t = tensor2(&one, &a1);
        t += &tensor2(&a1, &right("1 - x*M"));
        t -= &tensor2(&am, &right("x^2/alpha_p*M"));
        t
    };
    let delta_am = {
        let mut t = tensor2(&one, &am);
        t += &tensor2(&am, &right("1 + x*M"));
        t += &tensor2(&a1, &right("alpha_p*M"));
        t
    };
    let shift = parse_coefficient("beta_p/alpha_p").unwrap();
    let delta_a = &delta_a1 + &(&tensor2(&one, &m) + &tensor2(&m, &one)).scale(&shift);
    assert_eq!(map.get(Generator::A), &alg.truncate(&delta_a));
    assert_eq!(map.get(Generator::Am), &alg.truncate(&delta_am));
}

#[test]
fn zero_spec_is_primitive() {
    let map = lm_coproduct(&LMSpec::trivial(), oscillator_at(4)).unwrap();
    let one = oscillator().one();
    for g in Generator::ALL {
        assert_eq!(map.get(g), &(&tensor2(&one, &g.elem()) + &tensor2(&g.elem(), &one)));
    }
    assert!(first_order_check(&LMSpec::trivial(), &RMatrixSkew::zero()));
}

#[test]
fn first_order_recovers_every_cocommutator() {
    for f in Family::ALL {
        assert!(first_order_check(&LMSpec::for_family(f), &f.r()), "{f}");
    }
}

#[test]
fn counit_axiom() {
    for f in Family::ALL {
        let map = lm_coproduct(&LMSpec::for_family(f), oscillator_at(5)).unwrap();
        assert!(counit_defects(&map).is_empty(), "{f}");
    }
}

#[test]
fn basis_changes() {
    let cx = context_in(oscillator());
    let el = |s: &str| -> Uea { cx.element(s).unwrap() };
    let plus = basis_change(&Family::IplusStandard.r(), Kind::Iplus).unwrap();
    assert_eq!(plus.primed(), el("A - beta_p/alpha_p*M"));
    let minus = basis_change(&Family::IminusStandard.r(), Kind::Iminus).unwrap();
    assert_eq!(minus.primed(), el("A - y_p/alpha_m*M"));
    let w = el("A*Ap*Am + 3*A^2*M - Am");
    for b in [&plus, &minus] {
        assert_eq!(b.inverse().apply(&b.apply(&w)), w);
    }
    let r0 = Family::IplusStandard.r().subs(oscq::coeff::Param::BETA_P, &oscq::coeff::Coefficient::zero());
    assert!(basis_change(&r0, Kind::Iplus).unwrap().is_identity());
}

#[test]
fn type_ii_nonstandard_ladder_coproduct() {
    let alg = oscillator_at(6);
    let map = lm_coproduct(&LMSpec::for_family(Family::IINonstandard), alg).unwrap();
    assert_eq!(map.get(Generator::Ap), &context_in(alg).tensor2("1⊗Ap + Ap⊗exp(-x*M)").unwrap());
}

#[test]
fn table_three_reproduced_at_order_six() {
    let rows = table_three(6);
    assert!(!rows.is_empty());
    for row in &rows {
        assert!(row.matches, "{} {}: got {} want {}", row.family, row.entry, row.computed, row.expected);
    }
    for fam in Family::ALL {
        assert!(rows.iter().any(|r| r.family == fam.key()), "{fam}");
    }
}

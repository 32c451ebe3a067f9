use gaugealg::arrangement::{
    chamber_spec, enumerate_sign_vectors, is_unsteady, permute_signs, weyl_act_sign, ChamberKind, SignVector, Variant,
};
use gaugealg::coulomb::Coulomb;
use gaugealg::group::GroupElt;
use gaugealg::poly::Poly;
use gaugealg::presets;
use gaugealg::rational::{q, qi};
use gaugealg::twisted::{demazure_poly, TwistedOp};
use gaugealg::{RatFun, Q};
use proptest::prelude::*;

fn poly_strategy(nvars: usize, active: usize) -> impl Strategy<Value = Poly> {
    prop::collection::vec((prop::collection::vec(0u32..3, active), -4i64..=4), 1..5).prop_map(move |terms| {
        Poly::from_terms(
            nvars,
            terms.into_iter().map(|(mut e, c)| {
                e.resize(nvars, 0);
                (e, qi(c))
            }),
        )
    })
}

fn point_strategy(n: usize) -> impl Strategy<Value = Vec<Q>> {
    prop::collection::vec((-40i64..40, 1i64..13), n).prop_map(|v| v.into_iter().map(|(a, b)| q(a, b)).collect())
}

fn alpha() -> (Vec<Q>, Vec<Q>) {
    (vec![qi(1), qi(-1)], vec![qi(1), qi(-1)])
}

/// Elements of the extended affine Weyl group of GL(2): s^e · t_(a,b).
fn group_strategy() -> impl Strategy<Value = GroupElt> {
    (any::<bool>(), -2i64..=2, -2i64..=2).prop_map(|(s, a, b)| {
        let t = GroupElt::translation(vec![qi(a), qi(b)]);
        if s {
            let (r, c) = alpha();
            GroupElt::reflection(&r, &c, &Q::from_integer(0.into())).compose(&t)
        } else {
            t
        }
    })
}

fn op_strategy() -> impl Strategy<Value = TwistedOp> {
    prop::collection::vec((group_strategy(), poly_strategy(3, 3)), 1..3).prop_map(|terms| {
        terms
            .into_iter()
            .map(|(g, p)| TwistedOp::term(g, RatFun::from_poly(p)))
            .fold(TwistedOp::zero(2), |a, b| &a + &b)
    })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, .. ProptestConfig::default() })]

    #[test]
    fn demazure_leibniz(f in poly_strategy(3, 2), g in poly_strategy(3, 2)) {
        let (r, c) = alpha();
        let s = GroupElt::reflection(&r, &c, &Q::from_integer(0.into()));
        let lhs = demazure_poly(&r, &c, &(&f * &g));
        let rhs = &(&demazure_poly(&r, &c, &f) * &g) + &(&s.act_poly(&f) * &demazure_poly(&r, &c, &g));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn demazure_squares_to_zero(f in poly_strategy(3, 3), level in -2i64..=2) {
        let (r, c) = alpha();
        let d = TwistedOp::demazure(&r, &c, &qi(level));
        prop_assert!((&d * &d).is_zero());
        prop_assert!(d.apply(&d.apply(&f).as_poly().unwrap().clone()).is_zero());
    }

    #[test]
    fn twisted_product_is_associative(a in op_strategy(), b in op_strategy(), c in op_strategy()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }

    #[test]
    fn operators_form_a_module(a in op_strategy(), b in op_strategy(), f in poly_strategy(3, 3)) {
        let ab = &a * &b;
        let bf = b.apply(&f);
        prop_assert_eq!(ab.apply(&f), a.apply_ratfun(&bf));
    }

    #[test]
    fn group_acts_on_polys_and_points(g in group_strategy(), h in group_strategy(), f in poly_strategy(3, 3), x in point_strategy(2)) {
        let gh = g.compose(&h);
        prop_assert_eq!(gh.act_poly(&f), g.act_poly(&h.act_poly(&f)));
        prop_assert_eq!(gh.act_point(&x), g.act_point(&h.act_point(&x)));
        prop_assert!(g.compose(&g.inverse()).is_identity());
    }

    #[test]
    fn unsteady_depends_on_the_ray_of_xi(a in -5i64..=5, b in -5i64..=5, k in 1i64..4) {
        let g = presets::hypertoric_c2();
        let xi = vec![qi(a), qi(b)];
        let scaled = vec![qi(a * k), qi(b * k)];
        for s in enumerate_sign_vectors(&g, Variant::KPrime).unwrap().signs() {
            prop_assert_eq!(is_unsteady(&g, s, &xi).unwrap(), is_unsteady(&g, s, &scaled).unwrap());
        }
    }

    #[test]
    fn lift_chambers_sit_inside_epsilon_chambers(x in point_strategy(2)) {
        let g = presets::gl2_running();
        for s in SignVector::all_pm(4) {
            let c = chamber_spec(&g, &s, ChamberKind::Lift, None).unwrap();
            let cp = chamber_spec(&g, &s, ChamberKind::Epsilon, None).unwrap();
            if c.contains(&x) {
                prop_assert!(cp.contains(&x));
            }
        }
    }

    #[test]
    fn phi_wall_crossing(a in point_strategy(2), b in point_strategy(2), c in point_strategy(2)) {
        let g = presets::gl2_running();
        let cl = Coulomb::new(&g);
        prop_assume!(cl.check_generic(&a).is_ok() && cl.check_generic(&b).is_ok() && cl.check_generic(&c).is_ok());
        let lhs = &cl.phi(&c, &b).unwrap() * &cl.phi(&b, &a).unwrap();
        let rhs = &cl.phi_triple(&c, &b, &a).unwrap() * &cl.phi(&c, &a).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn phi_is_translation_covariant(a in point_strategy(2), b in point_strategy(2), z in (-3i64..=3, -3i64..=3)) {
        let g = presets::gl2_running();
        let cl = Coulomb::new(&g);
        prop_assume!(cl.check_generic(&a).is_ok() && cl.check_generic(&b).is_ok());
        let t = GroupElt::translation(vec![qi(z.0), qi(z.1)]);
        let shifted = cl.phi(&t.act_point(&a), &t.act_point(&b)).unwrap();
        prop_assert_eq!(shifted, t.act_poly(&cl.phi(&a, &b).unwrap()));
    }
}

#[test]
fn sign_action_is_an_action() {
    let g = presets::gl2_running();
    let ws = g.weyl_group().unwrap();
    for s in enumerate_sign_vectors(&g, Variant::KPrime).unwrap().signs() {
        for a in &ws {
            for b in &ws {
                let ab = permute_signs(&g, &a.g.compose(&b.g), s).unwrap();
                let step = permute_signs(&g, &a.g, &permute_signs(&g, &b.g, s).unwrap()).unwrap();
                assert_eq!(ab, step);
            }
            // translates of feasible chambers stay feasible
            weyl_act_sign(&g, &a.g, s).unwrap();
        }
    }
}

#[test]
fn variant_i_inside_i_prime() {
    for g in [presets::gl2_running(), presets::gl2_trivial_flavor(), presets::hypertoric_c2()] {
        let i = enumerate_sign_vectors(&g, Variant::I).unwrap();
        let ip = enumerate_sign_vectors(&g, Variant::IPrime).unwrap();
        for s in i.signs() {
            assert!(ip.signs().contains(s), "{s} is in I but not in I'");
        }
    }
}

#[test]
fn unsteady_set_is_weyl_stable() {
    let g = presets::gl2_running();
    let ws = g.weyl_group().unwrap();
    for s in enumerate_sign_vectors(&g, Variant::KPrime).unwrap().signs() {
        let u = is_unsteady(&g, s, &g.xi).unwrap();
        for w in &ws {
            let t = weyl_act_sign(&g, &w.g, s).unwrap();
            assert_eq!(u, is_unsteady(&g, &t, &g.xi).unwrap());
        }
    }
}

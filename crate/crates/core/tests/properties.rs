use proptest::prelude::*;
use staride_core::dsl::{parse, print};
use staride_core::ideal::{colon, intersect};
use staride_core::monoid::catalog;
use staride_core::star::v_closure;
use staride_core::{Bounds, DegreeFunctional, FracIdeal, Monomial, VarKey, Verdict, Witness};

fn keys() -> Vec<VarKey> {
    let mut k = vec![VarKey::scalar("y"), VarKey::scalar("z")];
    k.extend((1..=3).map(|n| VarKey::indexed("t", n)));
    k
}

fn laurent() -> impl Strategy<Value = Monomial> {
    prop::collection::vec(-3i64..=3, 5).prop_map(|e| Monomial::from_pairs(keys().into_iter().zip(e)))
}

fn yz(max: i64) -> impl Strategy<Value = Monomial> {
    (0..=max, 0..=max).prop_map(|(a, b)| Monomial::from_pairs([(VarKey::scalar("y"), a), (VarKey::scalar("z"), b)]))
}

fn yz_ideal() -> impl Strategy<Value = FracIdeal> {
    prop::collection::vec(yz(4), 1..=4).prop_map(|g| FracIdeal::fingen(&catalog::free_yz(), g).unwrap())
}

fn grid() -> Vec<Monomial> {
    (-5..=5)
        .flat_map(|a| (-5..=5).map(move |b| Monomial::from_pairs([(VarKey::scalar("y"), a), (VarKey::scalar("z"), b)])))
        .collect()
}

fn verdict() -> impl Strategy<Value = Verdict> {
    prop_oneof![
        Just(Verdict::exact()),
        Just(Verdict::within(Bounds::new(4, 2))),
        Just(Verdict::within(Bounds::new(8, 3))),
        Just(Verdict::inconclusive("a")),
        Just(Verdict::refuted(Witness::Check("w".into()))),
    ]
}

proptest! {
    #[test]
    fn monomials_form_a_group(a in laurent(), b in laurent(), c in laurent()) {
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert!(a.mul(&a.inv()).is_one());
        prop_assert_eq!(a.mul(&b).div(&b), a.clone());
        prop_assert_eq!(a.pow(2), a.mul(&a));
    }

    #[test]
    fn monomial_text_round_trips(a in laurent()) {
        prop_assert_eq!(a.to_string().parse::<Monomial>().unwrap(), a);
    }

    #[test]
    fn degree_functionals_are_linear(a in laurent(), b in laurent()) {
        for f in [DegreeFunctional::total(), DegreeFunctional::scalars(&["y", "z"]), DegreeFunctional::scalars(&["z"])] {
            prop_assert_eq!(f.eval(&a.mul(&b)), f.eval(&a) + f.eval(&b));
            prop_assert_eq!(f.eval(&a.inv()), -f.eval(&a));
        }
    }

    #[test]
    fn cone_and_support_rings_are_closed(a in laurent(), b in laurent()) {
        for spec in [catalog::cone_yzt(), catalog::free_yz()] {
            if spec.check_vars(&a).is_ok() && spec.check_vars(&b).is_ok() && spec.contains(&a) && spec.contains(&b) {
                prop_assert!(spec.contains(&a.mul(&b)));
            }
        }
    }

    #[test]
    fn colon_is_antitone(i in yz_ideal(), extra in yz(4)) {
        let spec = catalog::free_yz();
        let mut bigger = i.gens().unwrap().to_vec();
        bigger.push(extra);
        let small = colon(&FracIdeal::ring(), &bigger).unwrap();
        let large = colon(&FracIdeal::ring(), i.gens().unwrap()).unwrap();
        for u in grid() {
            prop_assert!(!small.contains(&spec, &u) || large.contains(&spec, &u));
        }
    }

    #[test]
    fn v_closure_is_a_closure(i in yz_ideal()) {
        let spec = catalog::free_yz();
        let b = Bounds::default();
        let (v, e) = v_closure(&spec, &i, b);
        prop_assert!(e.is_exact());
        let (vv, _) = v_closure(&spec, &v, b);
        for u in grid() {
            prop_assert!(!i.contains(&spec, &u) || v.contains(&spec, &u));
            prop_assert_eq!(v.contains(&spec, &u), vv.contains(&spec, &u));
        }
    }

    #[test]
    fn intersection_is_pointwise(i in yz_ideal(), j in yz_ideal()) {
        let spec = catalog::free_yz();
        let (ij, ji) = (intersect(&spec, &i, &j), intersect(&spec, &j, &i));
        for u in grid() {
            let both = i.contains(&spec, &u) && j.contains(&spec, &u);
            prop_assert_eq!(ij.contains(&spec, &u), both);
            prop_assert_eq!(ji.contains(&spec, &u), both);
        }
    }

    #[test]
    fn meet_is_a_semilattice(a in verdict(), b in verdict(), c in verdict()) {
        // Ties keep the left operand, so only the kind of verdict commutes.
        prop_assert_eq!(a.clone().meet(b.clone()).label(), b.clone().meet(a.clone()).label());
        prop_assert_eq!(a.clone().meet(b.clone()).meet(c.clone()), a.clone().meet(b.clone().meet(c)));
        prop_assert_eq!(a.clone().meet(a.clone()), a.clone());
        prop_assert_eq!(a.clone().meet(Verdict::exact()), a);
        let capped = Verdict::exact().meet(Verdict::within(Bounds::default()));
        prop_assert!(!capped.is_exact(), "{}", capped);
    }
}

fn mono_text() -> impl Strategy<Value = String> {
    (prop::sample::select(vec!["y", "z", "t[1]", "t[2]", "1"]), 1u32..=3, prop::bool::ANY).prop_map(|(v, e, neg)| match (v, neg) {
        ("1", _) => "1".to_string(),
        (v, true) => format!("{v}^-{e}"),
        (v, false) => format!("{v}^{e}"),
    })
}

fn ideal_text() -> impl Strategy<Value = String> {
    let leaf = prop_oneof![
        Just("ring".to_string()),
        prop::collection::vec(mono_text(), 1..=3).prop_map(|g| format!("gens({})", g.join(", "))),
        (prop::sample::select(vec!["y", "y, z", "t[*]", "*", "t[<=2]"]), 0i64..=3)
            .prop_map(|(s, k)| format!("ring & constraint{{ deg({s}) >= {k} }}")),
        prop::sample::select(vec!["y", "z"]).prop_map(|v| format!("adjoin({v})")),
    ];
    leaf.prop_recursive(3, 12, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| format!("sum({a}, {b})")),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| format!("product({a}, {b})")),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| format!("({a} : {b})")),
            (inner.clone(), inner).prop_map(|(a, b)| format!("{a} & {b}")),
        ]
    })
}

fn scenario_text() -> impl Strategy<Value = String> {
    (prop::collection::vec(ideal_text(), 1..=4), prop::sample::select(vec!["proved", "refuted", "inconclusive", "unproved"])).prop_map(
        |(ideals, expected)| {
            let mut s = String::from("scenario \"generated\"\nvars y, z\nfamily t\nrule nonneg\nrule linear: deg(y, z) >= deg(t[*])\nbounds degree 5 window 2\n");
            for (n, body) in ideals.iter().enumerate() {
                s += &format!("ideal I{n} = {body}\n");
            }
            s += &format!("assert subset(I0, I{}) = {expected} @ \"s\"\n", ideals.len() - 1);
            s += "assert member(I0, y^2*z) = refuted(y^2*z) @ \"s\"\n";
            s
        },
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn printing_is_stable_under_reparsing(src in scenario_text()) {
        let first = parse("gen.stide", &src).unwrap();
        let printed = print(&first[0]);
        let again = parse("gen.stide", &printed).unwrap();
        prop_assert_eq!(print(&again[0]), printed);
        prop_assert_eq!(again[0].items.len(), first[0].items.len());
    }
}

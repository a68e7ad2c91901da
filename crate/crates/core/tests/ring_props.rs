use motivic::gauss::realize_gauss;
use motivic::motive::{q, Character, MotiveClass, MotiveFrac};
use motivic::UElement;
use proptest::prelude::*;

fn character() -> impl Strategy<Value = Character> {
    (1i64..=12).prop_flat_map(|d| (0..d).prop_map(move |a| Character::new(a, d).unwrap()))
}

fn class() -> impl Strategy<Value = MotiveClass> {
    prop::collection::vec((-2i64..=2, -2i64..=2, -4i64..=4), 1..4).prop_map(|terms| {
        terms.into_iter().fold(MotiveClass::zero(), |acc, (p, q_, c)| {
            &acc + &MotiveClass::monomial(p.into(), q_.into(), q(c)).unwrap()
        })
    })
}

fn frac() -> impl Strategy<Value = MotiveFrac> {
    (class(), prop::option::of((1i64..=3, -2i64..=2))).prop_map(|(c, den)| match den {
        None => c.into(),
        Some((n, shift)) => {
            &MotiveFrac::from(c) * &MotiveFrac::inv_lefschetz_difference(n + shift, shift).unwrap()
        }
    })
}

fn u_element() -> impl Strategy<Value = UElement> {
    (frac(), prop::collection::vec((character(), frac()), 0..3)).prop_map(|(s, gs)| {
        let mut u = UElement::from_scalar(s);
        for (a, c) in gs {
            u.add_gauss(a, c);
        }
        u
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn characters_form_a_group(a in character(), b in character(), c in character()) {
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert!(a.mul(&a.inverse()).is_trivial());
        prop_assert!(a.order_divides(a.order()));
    }

    #[test]
    fn fractions_form_a_ring(x in frac(), y in frac(), z in frac()) {
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert!((&x - &x).is_zero());
    }

    #[test]
    fn u_ring_laws(x in u_element(), y in u_element(), z in u_element()) {
        let xy = &x * &y;
        prop_assert_eq!(&xy * &z, &x * &(&y * &z));
        prop_assert_eq!(&xy, &(&y * &x));
        prop_assert_eq!(&x * &(&y + &z), &xy + &(&x * &z));
        prop_assert_eq!(xy.hodge_realize(), &x.hodge_realize() * &y.hodge_realize());
    }

    #[test]
    fn gauss_relations(a in character()) {
        let g = UElement::gauss(a);
        let gi = UElement::gauss(a.inverse());
        let expected = if a.is_trivial() {
            UElement::one()
        } else {
            UElement::from_scalar(MotiveFrac::lefschetz_pow(1))
        };
        prop_assert_eq!(&g * &gi, expected);
        // |G_α|² has pure weight 1 in the realization
        if !a.is_trivial() {
            let r = realize_gauss(&a);
            prop_assert_eq!(r.len(), 1);
            let (deg, _) = r.terms().next().unwrap();
            prop_assert_eq!(deg.weight(), 1);
        }
    }

    #[test]
    fn sg_decomposition_roundtrips(u in u_element()) {
        let coeffs = u.sg_decompose();
        prop_assert_eq!(UElement::from_sg_coefficients(coeffs.iter()), u);
    }
}

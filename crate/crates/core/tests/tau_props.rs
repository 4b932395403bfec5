use maya_painleve::exact::ZPoly;
use maya_painleve::hermite::{conjugate_hermite, hermite};
use maya_painleve::maya::MayaDiagram;
use maya_painleve::tau::{schur_tau, standard_degree, tau_normalized, tau_of_diagram, tau_standard, Partition};
use proptest::prelude::*;

fn diagram() -> impl Strategy<Value = MayaDiagram> {
    (-5i64..=0, prop::collection::vec(any::<bool>(), 0..9))
        .prop_map(|(lo, bits)| MayaDiagram::from_window(lo, lo + bits.len() as i64, |x| bits[(x - lo) as usize]))
}

fn partition() -> impl Strategy<Value = Partition> {
    prop::collection::vec(1i64..=5, 0..=4).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn hermite_ode(n in 0i64..30) {
        // H'' - 2z H' + 2n H = 0 and its conjugate h'' + 2z h' - 2n h = 0.
        let h = hermite(n).unwrap();
        let z2 = ZPoly::from_i64s(&[0, 2]);
        let lhs = &(&h.nth_derivative(2) - &(&z2 * &h.derivative())) + &h.scale(&(2 * n).into());
        prop_assert!(lhs.is_zero());
        let c = conjugate_hermite(n).unwrap();
        let lhs = &(&c.nth_derivative(2) + &(&z2 * &c.derivative())) - &c.scale(&(2 * n).into());
        prop_assert!(lhs.is_zero());
    }

    #[test]
    fn shift_invariance(m in diagram(), k in -3i64..=3) {
        prop_assert_eq!(tau_normalized(&m).unwrap(), tau_normalized(&m.shift(k)).unwrap());
    }

    #[test]
    fn degree_law(m in diagram()) {
        let (std, _) = m.to_standard();
        let tau = tau_of_diagram(&m).unwrap();
        prop_assert_eq!(tau.degree(), standard_degree(&std));
        prop_assert!(tau.poly.proportional(&tau_standard(&std).unwrap()).is_some());
    }

    #[test]
    fn schur_oracle(lambda in partition()) {
        prop_assert_eq!(schur_tau(&lambda).unwrap(), tau_standard(&lambda.diagram()).unwrap());
        prop_assert_eq!(tau_standard(&lambda.diagram()).unwrap().degree().unwrap() as i64, lambda.size());
    }

    /// τ has the parity of its degree.
    #[test]
    fn parity(m in diagram()) {
        let p = tau_of_diagram(&m).unwrap().poly;
        let even = p.degree().unwrap() % 2 == 0;
        prop_assert_eq!(if even { p.is_even() } else { p.is_odd() }, true);
    }
}

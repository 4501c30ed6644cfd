use std::f64::consts::TAU;

use proptest::prelude::*;
use tubegeo::vec2;
use tubegeo::ConvexBasis;

fn bases() -> impl Strategy<Value = ConvexBasis> {
    prop_oneof![
        Just(ConvexBasis::UnitBall),
        (0.2f64..5.0, 0.2f64..5.0).prop_map(|(p, q)| ConvexBasis::ellipse(p, q).unwrap()),
    ]
}

fn boundary(basis: &ConvexBasis, t: f64) -> [f64; 2] {
    match *basis {
        ConvexBasis::UnitBall => [t.cos(), t.sin()],
        ConvexBasis::Ellipse { p, q } => [p * t.cos(), q * t.sin()],
    }
}

proptest! {
    #[test]
    fn round_trip(basis in bases(), t in 0.0..TAU) {
        let x = boundary(&basis, t);
        let back = basis.gauss_inverse(basis.gauss_map(x).unwrap()).unwrap().coords();
        prop_assert!(vec2::dist(back, x) < 1e-10);
    }

    #[test]
    fn antisymmetry(basis in bases(), t in 0.0..TAU) {
        let x = boundary(&basis, t);
        let nu = basis.gauss_map(x).unwrap();
        let nu_neg = basis.gauss_map(vec2::scale(x, -1.0)).unwrap();
        prop_assert_eq!(nu_neg, vec2::scale(nu, -1.0));
    }

    #[test]
    fn inverse_lands_on_boundary(basis in bases(), t in 0.0..TAU) {
        let x = basis.gauss_inverse([t.cos(), t.sin()]).unwrap().coords();
        prop_assert!(basis.defining_function(x).abs() <= 1e-12);
    }
}

use proptest::prelude::*;
use spectral_bohr::families::interval;
use spectral_bohr::fourier::fourier_direct;
use spectral_bohr::{fourier, inverse, Group, GroupFunction, GroupMeasure, Norm, C64};

fn group_strategy() -> impl Strategy<Value = Group> {
    prop_oneof![
        (2usize..200).prop_map(|n| Group::cyclic(n).unwrap()),
        (1usize..9).prop_map(|n| Group::cube(n).unwrap()),
        (prop::collection::vec(2usize..8, 1..4)).prop_map(|f| Group::new(&f).unwrap()),
    ]
}

fn function_strategy() -> impl Strategy<Value = GroupFunction> {
    group_strategy().prop_flat_map(|g| {
        let n = g.order();
        prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0), n)
            .prop_map(move |v| GroupFunction::new(g.clone(), v.into_iter().map(|(a, b)| C64::new(a, b)).collect()).unwrap())
    })
}

proptest! {
    #[test]
    fn roundtrip_and_parseval(f in function_strategy()) {
        let s = fourier(&f);
        prop_assert!(inverse(&s).max_abs_diff(&f) <= 1e-12);
        let l2 = f.norm(Norm::L2).powi(2);
        prop_assert!((s.l2_sqr() - l2).abs() <= 1e-12 * (1.0 + l2));
        prop_assert!(s.max_abs_diff(&fourier_direct(&f)) <= 1e-12);
    }

    #[test]
    fn convolution_becomes_product(f in function_strategy(), seed in 0usize..1000) {
        let g = f.group.clone();
        let h = f.shift(seed % g.order()).scale(C64::new(0.5, -0.25));
        let lhs = fourier(&f.convolve(&h).unwrap());
        let rhs = fourier(&f).pointwise(&fourier(&h));
        prop_assert!(lhs.max_abs_diff(&rhs) <= 1e-12);
    }

    #[test]
    fn translation_is_a_phase(f in function_strategy(), y in 0usize..1000) {
        let g = f.group.clone();
        let y = y % g.order();
        let s = fourier(&f);
        let t = fourier(&f.shift(y));
        for (a, b) in s.coeffs.iter().zip(&t.coeffs) {
            prop_assert!((a.norm() - b.norm()).abs() <= 1e-12);
        }
        prop_assert!((f.norm(Norm::A) - f.shift(y).norm(Norm::A)).abs() <= 1e-9);
    }

    #[test]
    fn measure_transform_roundtrip(f in function_strategy()) {
        let mu = GroupMeasure::from_density(&f);
        let back = GroupMeasure::from_transform(&mu.transform());
        prop_assert!(back.sub(&mu).unwrap().tv_norm() <= 1e-10);
    }
}

#[test]
fn z4_example() {
    let g = Group::cyclic(4).unwrap();
    let s = fourier(&GroupFunction::indicator(&g, &[0, 1]));
    let expect = [C64::new(0.5, 0.0), C64::new(0.25, -0.25), C64::new(0.0, 0.0), C64::new(0.25, 0.25)];
    for (a, b) in s.coeffs.iter().zip(expect) {
        assert!((a - b).norm() < 1e-15);
    }
}

#[test]
fn interval_a_norm() {
    let g = Group::cyclic(17).unwrap();
    let f = GroupFunction::indicator(&g, &interval(&g, 0.5).unwrap());
    assert!((f.norm(Norm::A) - 1.883176667945189).abs() < 1e-12);
}

#[test]
fn character_has_unit_a_norm() {
    for spec in ["Z101", "F2^8", "Z4xZ27"] {
        let g = Group::parse(spec).unwrap();
        let f = GroupFunction::character(&g, 5);
        assert!((f.norm(Norm::A) - 1.0).abs() < 1e-12);
        assert!((f.norm(Norm::Linf) - 1.0).abs() < 1e-12);
    }
}

//! Auxiliary measures interpolating prescribed phases on a dissociated set.

use spectral_bohr::config::Constants;
use spectral_bohr::riesz::{aux_measure, aux_measure_model, aux_report};
use spectral_bohr::{Group, C64};

fn main() {
    let c = Constants::default();
    let g = Group::cyclic(1009).unwrap();
    let lambda = [1, 3, 9, 27];
    let omega: Vec<C64> = (0..4).map(|k| C64::from_polar(1.0, k as f64)).collect();
    for k in [2, 5, 10] {
        let eta = 2f64.powi(-k);
        let mu = aux_measure(&g, &lambda, &omega, eta, &c).unwrap();
        let r = aux_report(&mu, &lambda, &omega, false);
        println!(
            "Z/1009 eta 2^-{k}: defect {:.1e}, leakage {:.1e}, ||mu|| {:.3}",
            r.interpolation_defect, r.max_leakage, r.tv_norm
        );
    }

    let cube = Group::cube(8).unwrap();
    let lambda = [1, 2, 4, 8];
    let omega = [1.0, -1.0, 0.5, -0.5];
    let mu = aux_measure_model(&cube, &lambda, &omega, 1.0 / 64.0, 20).unwrap();
    let w: Vec<C64> = omega.iter().map(|&v| C64::new(v, 0.0)).collect();
    let r = aux_report(&mu, &lambda, &w, false);
    println!("F2^8 eta 1/64: defect {:.1e}, leakage {:.1e}, ||mu|| {:.3}", r.interpolation_defect, r.max_leakage, r.tv_norm);
}

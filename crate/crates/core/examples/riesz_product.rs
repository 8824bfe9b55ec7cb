//! A Riesz product on F2^10 and its Fourier support.

use spectral_bohr::dissociation::evaluate;
use spectral_bohr::riesz::riesz_product;
use spectral_bohr::{fourier, Group, Norm, C64};

fn main() {
    let g = Group::cube(10).unwrap();
    let lambda = [0b1, 0b110, 0b1011000];
    let omega = [C64::new(0.5, 0.0), C64::new(-1.0, 0.0), C64::new(0.25, 0.0)];
    let p = riesz_product(&g, &lambda, &omega, 1.0).unwrap();
    println!("||p||_1 = {:.12}, min p = {:.3}", p.norm(Norm::L1), p.values.iter().map(|v| v.re).fold(f64::MAX, f64::min));
    let s = fourier(&p);
    for mask in 0..8u8 {
        let m: Vec<i8> = (0..3).map(|i| ((mask >> i) & 1) as i8).collect();
        let gamma = evaluate(&g, &lambda, &m);
        println!("p^({gamma:#012b}) = {:+.4}", s.coeffs[gamma].re);
    }
    let support = s.coeffs.iter().filter(|c| c.norm() > 1e-12).count();
    println!("support size {support}");
}

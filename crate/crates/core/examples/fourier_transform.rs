//! Transform an indicator on a mixed-radix group and invert it.

use spectral_bohr::{fourier, inverse, Group, GroupFunction, Norm};

fn main() {
    let g = Group::parse("Z4xZ27").unwrap();
    let set: Vec<usize> = (0..g.order()).filter(|x| x % 5 == 0).collect();
    let f = GroupFunction::indicator(&g, &set);
    let s = fourier(&f);
    println!("|G| = {}, |A| = {}", g.order(), set.len());
    println!("f^(0) = {:.6} (the density)", s.coeffs[0].re);
    println!("sum |f^|^2 = {:.6}, E|f|^2 = {:.6}", s.l2_sqr(), f.norm(Norm::L2).powi(2));
    println!("roundtrip error {:.2e}", inverse(&s).max_abs_diff(&f));
}

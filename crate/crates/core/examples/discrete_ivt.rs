//! A point near the mean along the orbit of a slowly varying function.

use spectral_bohr::iteration::discrete_ivt;
use spectral_bohr::{Group, GroupFunction, Norm};

fn main() {
    let p = 101;
    let g = Group::cyclic(p).unwrap();
    let values: Vec<f64> = (0..p).map(|x| 3.0 + (std::f64::consts::TAU * x as f64 / p as f64).sin()).collect();
    let f = GroupFunction::from_real(g, &values).unwrap();
    let eps = 0.1;
    let x = discrete_ivt(&f, 1, eps).unwrap();
    println!(
        "mean {:.4}, f({x}) = {:.4}, allowed distance {:.4}",
        f.mean().re,
        values[x],
        0.5 * eps * f.norm(Norm::Linf)
    );
}

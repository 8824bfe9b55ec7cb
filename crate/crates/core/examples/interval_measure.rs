//! The signed measures on [-1/2, 1/2] with first moment 1 and vanishing low moments.

use spectral_bohr::riesz::make_tau;

fn main() {
    for l in 2..=6 {
        let tau = make_tau(l).unwrap();
        let moments: Vec<String> = (0..=2 * l as u32 + 2).map(|k| format!("{:+.1e}", tau.moment(k))).collect();
        println!("l = {l}: norm {:.3}, moments {}", tau.norm(), moments.join(" "));
    }
}

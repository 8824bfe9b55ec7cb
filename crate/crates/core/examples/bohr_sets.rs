//! Bohr sets, a regular width and the smoothed cutoff.

use spectral_bohr::bohr::{bohr_set, find_regular, smoothed_cutoff, translate_defect};
use spectral_bohr::config::Constants;
use spectral_bohr::Group;

fn main() {
    let c = Constants::default();
    let g = Group::cyclic(4093).unwrap();
    let gamma = [1, 200];
    for delta in [0.4, 0.2, 0.1] {
        let b = bohr_set(&g, &gamma, delta).unwrap();
        println!("delta {delta}: |B| = {}, density {:.4} >= delta^d = {:.4}", b.members.len(), b.density, delta * delta);
    }
    let r = find_regular(&g, &gamma, 0.2, &c).unwrap();
    println!("regular width {:.5}, constant {:.2}, certified {}", r.bohr.delta, r.constant, r.certified);
    let y = r.bohr.members[1];
    println!("translate defect by {y}: {:.4}", translate_defect(&r.bohr, y));
    let s = smoothed_cutoff(&g, &gamma, r.bohr.delta, 2, 0.5).unwrap();
    println!("smoothed cutoff (L = 2, kappa = 1/2): distance {:.4}", s.distance);
}

//! A-norms of intervals in Z/p, against log p.

use spectral_bohr::families::interval;
use spectral_bohr::{Group, GroupFunction, Norm};

fn main() {
    for p in [101, 1009, 10007] {
        let g = Group::cyclic(p).unwrap();
        let f = GroupFunction::indicator(&g, &interval(&g, 0.5).unwrap());
        let a = f.norm(Norm::A);
        println!("p = {p:5}: ||1_A||_A = {a:.6}, ratio to ln p = {:.4}", a / (p as f64).ln());
    }
}

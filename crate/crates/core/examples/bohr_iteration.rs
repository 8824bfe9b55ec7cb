//! Bohr-set approximation of an interval in Z/1009.

use spectral_bohr::config::Constants;
use spectral_bohr::families::interval;
use spectral_bohr::iteration::bohr_approximate;
use spectral_bohr::{Group, GroupFunction};

fn main() {
    let c = Constants::default();
    let g = Group::cyclic(1009).unwrap();
    let f = GroupFunction::indicator(&g, &interval(&g, 0.3).unwrap());
    let (a, trace) = bohr_approximate(&f, 0.125, &c).unwrap();
    for r in &trace.rounds {
        println!("round {}: |Gamma| = {}, ledger {:.5}, error {:.4}", r.round, r.gamma_count, r.ledger, r.error);
    }
    println!(
        "Gamma = {:?}, delta {:.4}, delta' {:.2e}, oscillation {:.4}, L2 error {:.4}, verified {}",
        a.gamma, a.delta, a.delta_prime, a.oscillation, a.l2_error, a.verified
    );
}

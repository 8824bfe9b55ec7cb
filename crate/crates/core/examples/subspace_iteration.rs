//! Approximating a union of subspaces in F2^10 by its conditional expectations.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use spectral_bohr::config::Constants;
use spectral_bohr::families::subspace_union;
use spectral_bohr::iteration::f2n_approximate;
use spectral_bohr::{Group, GroupFunction};

fn main() {
    let c = Constants::default();
    let g = Group::cube(10).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let f = GroupFunction::indicator(&g, &subspace_union(&g, 3, 2, &mut rng).unwrap());
    for refined in [false, true] {
        let (a, trace) = f2n_approximate(&f, 0.25, refined, &c).unwrap();
        println!(
            "{}: codim {}, worst coset error {:.4}, rounds {}, verified {}",
            if refined { "refined" } else { "plain" },
            a.codim,
            a.worst_error,
            trace.rounds.len(),
            a.verified
        );
    }
}

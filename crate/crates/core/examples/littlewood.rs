//! Lower-bound certificates for random half-density sets in Z/1009.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use spectral_bohr::config::Constants;
use spectral_bohr::families::random_set;
use spectral_bohr::iteration::littlewood_certificate;
use spectral_bohr::Group;

fn main() {
    let c = Constants::default();
    let g = Group::cyclic(1009).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..3 {
        let set = random_set(&g, 0.5, &mut rng);
        let r = littlewood_certificate(&g, &set, &c).unwrap();
        println!(
            "|A| = {}: ||1_A||_A = {:.3}, d = {}, delta' = {:.2e}, contradiction {}, verified {}",
            r.size, r.a_norm, r.d, r.delta_prime, r.contradiction_fired, r.verified
        );
    }
}

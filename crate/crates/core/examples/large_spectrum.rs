//! Large spectrum of a random set and the two cardinality bounds.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use spectral_bohr::families::random_set;
use spectral_bohr::spectra::{large_spectrum, SpectrumThreshold, ThresholdKind};
use spectral_bohr::{Group, GroupFunction, Norm};

fn main() {
    let g = Group::cyclic(1009).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let f = GroupFunction::indicator(&g, &random_set(&g, 0.5, &mut rng));
    let (l1, l2, a) = (f.norm(Norm::L1), f.norm(Norm::L2), f.norm(Norm::A));
    for eps in [0.5, 0.05, 0.02] {
        let s1 = large_spectrum(&f, SpectrumThreshold::new(ThresholdKind::L1, eps).unwrap()).unwrap();
        let s8 = large_spectrum(&f, SpectrumThreshold::new(ThresholdKind::Linf, eps).unwrap()).unwrap();
        println!(
            "eps {eps}: |Spec_L1| = {} <= {:.1}, |Spec_Linf| = {} <= {:.1}",
            s1.len(),
            (l2 / l1).powi(2) / (eps * eps),
            s8.len(),
            a / eps
        );
    }
}

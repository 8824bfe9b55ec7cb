//! Dissociated covers of a large spectrum, globally and relative to a Bohr set.

use spectral_bohr::bohr::find_regular_or_best;
use spectral_bohr::config::Constants;
use spectral_bohr::structure::{ag_cover, chang_cover, local_ag_cover};
use spectral_bohr::{Group, GroupFunction};

fn main() {
    let c = Constants::default();
    let g = Group::cyclic(257).unwrap();
    let f = GroupFunction::indicator(&g, &(0..64).collect::<Vec<_>>());
    let chang = chang_cover(&f, 0.1, &c).unwrap();
    let ag = ag_cover(&f, 0.1, &c).unwrap();
    println!("L1 cover: |Spec| = {}, |Lambda| = {}, scale {:.1}", chang.spectrum.len(), chang.lambda.len(), chang.scale);
    println!("Linf cover: |Spec| = {}, |Lambda| = {}, scale {:.1}", ag.spectrum.len(), ag.lambda.len(), ag.scale);

    let h = Group::cube(10).unwrap();
    let sum = GroupFunction::from_fn(&h, |x| [16, 40, 100].iter().map(|&k| h.pairing(k, x)).sum());
    let b = find_regular_or_best(&h, &[1], 0.25, &c).unwrap();
    let lc = local_ag_cover(&sum, &b, 0.25, 0.5, &c).unwrap();
    println!(
        "local cover: |Spec| = {}, Lambda = {:?}, width {}, certified {}",
        lc.spectrum.len(),
        lc.lambda,
        lc.delta_prime,
        lc.ledger.holds
    );
}

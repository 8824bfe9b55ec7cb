//! Dissociativity, Rider counts and a greedy maximal subset.

use spectral_bohr::dissociation::{is_dissociated, max_dissociated_subset, weight_profile};
use spectral_bohr::Group;

fn main() {
    let g = Group::cyclic(4093).unwrap();
    let powers = [1, 3, 9, 27, 81, 243];
    println!("powers of 3 dissociated: {}", is_dissociated(&g, &powers, 32).unwrap().dissociated);
    let check = is_dissociated(&g, &[1, 2, 3, 5], 32).unwrap();
    println!("{{1,2,3,5}} dissociated: {}, witness {:?}", check.dissociated, check.witness);

    let table = weight_profile(&g, &powers);
    for (r, row) in table.iter().enumerate() {
        let worst = row.iter().max().unwrap();
        println!("weight {r}: largest representation count {worst} (bound {})", 1u64 << r);
    }

    let greedy = max_dissociated_subset(&g, &(1..40).collect::<Vec<_>>(), &[0], 32).unwrap();
    println!("greedy dissociated subset of 1..40: {greedy:?}");
}

//! Writing and reading set files for the command-line tool.

use spectral_bohr::families::quadratic_residues;
use spectral_bohr::io::{format_set, parse_set};
use spectral_bohr::{Group, GroupFunction, Norm};

fn main() {
    let g = Group::cyclic(101).unwrap();
    let qr = quadratic_residues(&g).unwrap();
    let text = format_set(&g, &qr);
    let back = parse_set(&g, &text).unwrap();
    assert_eq!(back, qr);
    println!("{} residues, first lines:\n{}", qr.len(), text.lines().take(3).collect::<Vec<_>>().join("\n"));
    println!("A-norm {:.4}", GroupFunction::indicator(&g, &qr).norm(Norm::A));
}

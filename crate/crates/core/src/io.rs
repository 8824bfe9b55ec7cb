//! Set files, weight files and CSV output.

use std::fmt::Write as _;
use std::path::Path;

use crate::error::{Error, Result};
use crate::fourier::C64;
use crate::group::{Element, Group};

/// One element per line, coordinates joined by commas. Blank lines and
/// `#` comments are skipped.
pub fn parse_set(group: &Group, text: &str) -> Result<Vec<Element>> {
    let mut out = Vec::new();
    for line in text.lines().map(str::trim) {
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        out.push(group.parse_element(line)?);
    }
    Ok(out)
}

pub fn format_set(group: &Group, set: &[Element]) -> String {
    let mut s = String::new();
    for &x in set {
        let _ = writeln!(s, "{}", group.format_element(x));
    }
    s
}

pub fn read_set(group: &Group, path: &Path) -> Result<Vec<Element>> {
    parse_set(group, &std::fs::read_to_string(path)?)
}

/// One complex number per line as `re,im` (a lone real is allowed).
pub fn parse_weights(text: &str) -> Result<Vec<C64>> {
    let mut out = Vec::new();
    for line in text.lines().map(str::trim) {
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let bad = || Error::Parse(format!("bad complex number {line:?}"));
        let (re, im) = match line.split_once(',') {
            Some((a, b)) => (a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?),
            None => (line.parse().map_err(|_| bad())?, 0.0),
        };
        out.push(C64::new(re, im));
    }
    Ok(out)
}

pub fn read_weights(path: &Path) -> Result<Vec<C64>> {
    parse_weights(&std::fs::read_to_string(path)?)
}

/// Plain CSV with a versioned comment header.
pub struct Csv {
    text: String,
}

pub const SCHEMA_VERSION: u32 = 1;

impl Csv {
    pub fn new(columns: &[&str]) -> Self {
        let mut text = format!("# schema {SCHEMA_VERSION}\n");
        text.push_str(&columns.join(","));
        text.push('\n');
        Csv { text }
    }

    pub fn row(&mut self, cells: &[String]) {
        self.text.push_str(&cells.join(","));
        self.text.push('\n');
    }

    pub fn as_str(&self) -> &str {
        &self.text
    }
}

/// Shortest decimal that round-trips.
pub fn num(x: f64) -> String {
    format!("{x}")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn set_roundtrip() {
        let g = Group::new(&[4, 3]).unwrap();
        let set = vec![0, 5, 11];
        assert_eq!(parse_set(&g, &format_set(&g, &set)).unwrap(), set);
        let z = Group::cyclic(7).unwrap();
        assert_eq!(parse_set(&z, "# c\n-1\n\n3\n").unwrap(), vec![6, 3]);
        assert!(parse_set(&g, "1\n").is_err());
    }

    #[test]
    fn weights() {
        let w = parse_weights("1,0\n0.5, -0.5\n2\n").unwrap();
        assert_eq!(w, vec![C64::new(1.0, 0.0), C64::new(0.5, -0.5), C64::new(2.0, 0.0)]);
        assert!(parse_weights("x,1").is_err());
    }
}

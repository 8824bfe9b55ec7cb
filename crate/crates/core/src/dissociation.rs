//! Dissociated and S-dissociated character sets.
//!
//! A sign vector `m` in `{-1,0,1}^Lambda` evaluates to `m.Lambda = sum m_l l`.
//! `Lambda` is S-dissociated when `m.Lambda` lands in `S` only for `m = 0`.
//! Adding `l` to an S-dissociated `Lambda` keeps it S-dissociated exactly when
//! `l` is not in `<Lambda> + S`, which is what every routine here tests.

use crate::error::{Error, Result};
use crate::group::{Character, Group};

pub type SignVector = Vec<i8>;

/// `m.Lambda`.
pub fn evaluate(group: &Group, lambda: &[Character], m: &[i8]) -> Character {
    let mut acc = 0;
    for (&l, &s) in lambda.iter().zip(m) {
        match s {
            1 => acc = group.add(acc, l),
            -1 => acc = group.sub(acc, l),
            _ => {}
        }
    }
    acc
}

/// The span `<Lambda>` with the number of sign vectors hitting each character.
#[derive(Clone, Debug)]
pub struct SpanSet {
    pub counts: Vec<u64>,
}

impl SpanSet {
    pub fn contains(&self, gamma: Character) -> bool {
        self.counts[gamma] > 0
    }

    pub fn members(&self) -> Vec<Character> {
        (0..self.counts.len()).filter(|&g| self.counts[g] > 0).collect()
    }

    pub fn len(&self) -> usize {
        self.counts.iter().filter(|&&c| c > 0).count()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

fn check_cap(what: &'static str, size: usize, cap: usize) -> Result<()> {
    if size > cap {
        return Err(Error::CapExceeded { what, size, cap });
    }
    Ok(())
}

/// All `m.Lambda` with multiplicities.
pub fn span(group: &Group, lambda: &[Character], cap: usize) -> Result<SpanSet> {
    check_cap("character set", lambda.len(), cap)?;
    let n = group.order();
    let mut counts = vec![0u64; n];
    counts[0] = 1;
    for &l in lambda {
        let mut next = counts.clone();
        for g in 0..n {
            let c = counts[g];
            if c == 0 {
                continue;
            }
            next[group.add(g, l)] += c;
            next[group.sub(g, l)] += c;
        }
        counts = next;
    }
    Ok(SpanSet { counts })
}

/// Boolean span, grown one character at a time.
struct Reach<'a> {
    group: &'a Group,
    hit: Vec<bool>,
}

impl<'a> Reach<'a> {
    fn new(group: &'a Group) -> Self {
        let mut hit = vec![false; group.order()];
        hit[0] = true;
        Reach { group, hit }
    }

    /// Is `gamma` in `<Lambda> + S`?
    fn covers(&self, gamma: Character, s: &[Character]) -> bool {
        s.iter().any(|&t| self.hit[self.group.sub(gamma, t)])
    }

    fn push(&mut self, l: Character) {
        let g = self.group;
        let old = self.hit.clone();
        for (x, &h) in old.iter().enumerate() {
            if h {
                self.hit[g.add(x, l)] = true;
                self.hit[g.sub(x, l)] = true;
            }
        }
    }
}

/// Outcome of a dissociativity test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DissociationCheck {
    pub dissociated: bool,
    /// A nonzero sign vector of least support with `m.Lambda` in `S`.
    pub witness: Option<SignVector>,
}

fn check_symmetric(group: &Group, s: &[Character]) -> Result<Vec<bool>> {
    let mut mask = vec![false; group.order()];
    for &t in s {
        mask[t] = true;
    }
    if !mask[0] {
        return Err(Error::InvalidParameter("S must contain the trivial character".into()));
    }
    if s.iter().any(|&t| !mask[group.neg(t)]) {
        return Err(Error::InvalidParameter("S must be symmetric".into()));
    }
    Ok(mask)
}

fn minimal_witness(group: &Group, lambda: &[Character], mask: &[bool]) -> SignVector {
    let k = lambda.len();
    for size in 1..=k {
        let mut idx: Vec<usize> = (0..size).collect();
        loop {
            // first chosen sign fixed to +1; S symmetric makes this harmless
            for bits in 0..(1u32 << (size - 1)) {
                let mut m = vec![0i8; k];
                m[idx[0]] = 1;
                for (j, &i) in idx.iter().enumerate().skip(1) {
                    m[i] = if bits >> (j - 1) & 1 == 1 { -1 } else { 1 };
                }
                if mask[evaluate(group, lambda, &m)] {
                    return m;
                }
            }
            // next combination
            let mut j = size;
            while j > 0 && idx[j - 1] == k - size + j - 1 {
                j -= 1;
            }
            if j == 0 {
                break;
            }
            idx[j - 1] += 1;
            for t in j..size {
                idx[t] = idx[t - 1] + 1;
            }
        }
    }
    unreachable!("a failing set always has a witness")
}

/// Is `Lambda` S-dissociated? `S` must be symmetric and contain 0.
pub fn is_s_dissociated(
    group: &Group,
    lambda: &[Character],
    s: &[Character],
    cap: usize,
) -> Result<DissociationCheck> {
    check_cap("character set", lambda.len(), cap)?;
    let mask = check_symmetric(group, s)?;
    let mut reach = Reach::new(group);
    for &l in lambda {
        if reach.covers(l, s) {
            return Ok(DissociationCheck {
                dissociated: false,
                witness: Some(minimal_witness(group, lambda, &mask)),
            });
        }
        reach.push(l);
    }
    Ok(DissociationCheck {
        dissociated: true,
        witness: None,
    })
}

pub fn is_dissociated(group: &Group, lambda: &[Character], cap: usize) -> Result<DissociationCheck> {
    is_s_dissociated(group, lambda, &[0], cap)
}

/// Greedy maximal S-dissociated subset of `gamma`, scanned in the given order.
///
/// Checks `gamma ⊆ <Lambda> + S` before returning.
pub fn max_dissociated_subset(
    group: &Group,
    gamma: &[Character],
    s: &[Character],
    cap: usize,
) -> Result<Vec<Character>> {
    check_symmetric(group, s)?;
    let mut reach = Reach::new(group);
    let mut chosen = Vec::new();
    for &g in gamma {
        if reach.covers(g, s) {
            continue;
        }
        check_cap("dissociated subset", chosen.len() + 1, cap)?;
        chosen.push(g);
        reach.push(g);
    }
    if let Some(&bad) = gamma.iter().find(|&&g| !reach.covers(g, s)) {
        return Err(Error::Verification(format!(
            "character {bad} escaped the span of the greedy subset"
        )));
    }
    Ok(chosen)
}

/// Greedy growth that stops once `limit` characters are chosen.
/// Returns the subset and whether the limit cut the scan short.
pub fn greedy_s_dissociated(
    group: &Group,
    gamma: &[Character],
    s: &[Character],
    limit: usize,
) -> Result<(Vec<Character>, bool)> {
    check_symmetric(group, s)?;
    let mut reach = Reach::new(group);
    let mut chosen = Vec::new();
    for &g in gamma {
        if reach.covers(g, s) {
            continue;
        }
        if chosen.len() == limit {
            return Ok((chosen, true));
        }
        chosen.push(g);
        reach.push(g);
    }
    Ok((chosen, false))
}

/// Is every member of `gamma` in `<Lambda> + S`?
pub fn spans_with(group: &Group, lambda: &[Character], s: &[Character], gamma: &[Character]) -> bool {
    let mut reach = Reach::new(group);
    for &l in lambda {
        reach.push(l);
    }
    gamma.iter().all(|&g| reach.covers(g, s))
}

/// `#{m : |m| = r, m.Lambda = gamma}` by enumerating all `3^|Lambda|` vectors.
///
/// When `Lambda` is dissociated the count is checked against `2^r`.
pub fn rider_count(
    group: &Group,
    lambda: &[Character],
    gamma: Character,
    r: usize,
    cap: usize,
) -> Result<u64> {
    check_cap("character set", lambda.len(), cap)?;
    let k = lambda.len();
    let mut count = 0u64;
    let mut m = vec![-1i8; k];
    let total = 3u64.pow(k as u32);
    for _ in 0..total {
        let weight = m.iter().filter(|&&v| v != 0).count();
        if weight == r && evaluate(group, lambda, &m) == gamma {
            count += 1;
        }
        for v in m.iter_mut() {
            if *v < 1 {
                *v += 1;
                break;
            }
            *v = -1;
        }
    }
    if r < 64 && count > 1u64 << r && is_dissociated(group, lambda, cap)?.dissociated {
        return Err(Error::Verification(format!(
            "{count} sign vectors of weight {r} hit {gamma}, above 2^{r}"
        )));
    }
    Ok(count)
}

/// `table[r][gamma]` = number of sign vectors of weight `r` hitting `gamma`,
/// by dynamic programming over the members of `Lambda`.
pub fn weight_profile(group: &Group, lambda: &[Character]) -> Vec<Vec<u64>> {
    let n = group.order();
    let k = lambda.len();
    let mut table = vec![vec![0u64; n]; k + 1];
    table[0][0] = 1;
    for (i, &l) in lambda.iter().enumerate() {
        for r in (1..=i + 1).rev() {
            let (lo, hi) = table.split_at_mut(r);
            let prev = &lo[r - 1];
            let cur = &mut hi[0];
            for g in 0..n {
                let c = prev[g];
                if c != 0 {
                    cur[group.add(g, l)] += c;
                    cur[group.sub(g, l)] += c;
                }
            }
        }
    }
    table
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basis_of_cube_is_dissociated() {
        let g = Group::cube(5).unwrap();
        let basis: Vec<usize> = (0..5).map(|i| 1 << i).collect();
        assert!(is_dissociated(&g, &basis, 20).unwrap().dissociated);
    }

    #[test]
    fn one_two_three_has_witness() {
        let g = Group::cyclic(10).unwrap();
        let c = is_dissociated(&g, &[1, 2, 3], 20).unwrap();
        assert!(!c.dissociated);
        assert_eq!(c.witness, Some(vec![1, 1, -1]));
    }

    #[test]
    fn powers_of_two_mod_100() {
        let g = Group::cyclic(100).unwrap();
        assert!(is_dissociated(&g, &[1, 2, 4, 8, 16], 20).unwrap().dissociated);
    }

    #[test]
    fn s_dissociation_rules() {
        let g = Group::cyclic(20).unwrap();
        let c = is_s_dissociated(&g, &[1], &[19, 0, 1], 20).unwrap();
        assert!(!c.dissociated);
        assert_eq!(c.witness, Some(vec![1]));
        assert!(is_s_dissociated(&g, &[1], &[0, 1], 20).is_err());
        assert!(is_s_dissociated(&g, &[1], &[1, 19], 20).is_err());
    }

    #[test]
    fn greedy_examples() {
        let g = Group::cyclic(100).unwrap();
        assert_eq!(max_dissociated_subset(&g, &[1, 2, 3], &[0], 20).unwrap(), vec![1, 2]);
        let cube = Group::cube(3).unwrap();
        let all: Vec<usize> = (0..8).collect();
        let basis = max_dissociated_subset(&cube, &all, &[0], 20).unwrap();
        assert_eq!(basis.len(), 3);
        assert!(spans_with(&cube, &basis, &[0], &all));
    }

    #[test]
    fn cap_is_enforced() {
        let g = Group::cube(6).unwrap();
        let all: Vec<usize> = (0..64).collect();
        assert!(matches!(
            max_dissociated_subset(&g, &all, &[0], 3),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn span_and_profile_agree() {
        let g = Group::cyclic(64).unwrap();
        let lambda = [1, 2, 4];
        let sp = span(&g, &lambda, 20).unwrap();
        assert_eq!(sp.counts.iter().sum::<u64>(), 27);
        let prof = weight_profile(&g, &lambda);
        for gamma in 0..64 {
            let total: u64 = prof.iter().map(|row| row[gamma]).sum();
            assert_eq!(total, sp.counts[gamma]);
            for (r, row) in prof.iter().enumerate() {
                let c = rider_count(&g, &lambda, gamma, r, 12).unwrap();
                assert_eq!(c, row[gamma]);
                assert!(c <= 1 << r);
            }
        }
        assert_eq!(span(&g, &[], 20).unwrap().members(), vec![0]);
    }
}

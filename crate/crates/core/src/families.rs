//! Deterministic corpora of sets and functions.

use std::str::FromStr;

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::fourier::{GroupFunction, C64};
use crate::group::{Element, Group};
use crate::iteration::is_prime;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Ap,
    Qr,
    Random,
    SubspaceUnion,
    CharacterNoise,
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "ap" => Ok(Family::Ap),
            "qr" => Ok(Family::Qr),
            "random" => Ok(Family::Random),
            "subspace-union" => Ok(Family::SubspaceUnion),
            "character-noise" => Ok(Family::CharacterNoise),
            _ => Err(Error::Parse(format!("unknown family {s:?}"))),
        }
    }
}

/// One corpus entry.
#[derive(Clone, Debug)]
pub struct Instance {
    pub label: String,
    pub function: GroupFunction,
    /// The underlying set, for indicator families.
    pub set: Option<Vec<Element>>,
}

impl Instance {
    fn from_set(group: &Group, label: String, set: Vec<Element>) -> Self {
        Instance {
            label,
            function: GroupFunction::indicator(group, &set),
            set: Some(set),
        }
    }
}

fn cyclic_order(group: &Group) -> Result<usize> {
    if group.rank() != 1 {
        return Err(Error::InvalidParameter(format!("{} is not cyclic", group.spec())));
    }
    Ok(group.order())
}

/// `{start, start + step, ...}` with `len` terms.
pub fn progression(group: &Group, start: usize, step: usize, len: usize) -> Result<Vec<Element>> {
    let n = cyclic_order(group)?;
    let mut set: Vec<Element> = (0..len).map(|i| (start + i * step) % n).collect();
    set.sort_unstable();
    set.dedup();
    if set.len() != len {
        return Err(Error::InvalidParameter("progression wraps onto itself".into()));
    }
    Ok(set)
}

/// The interval `{0, ..., ceil(density N) - 1}`.
pub fn interval(group: &Group, density: f64) -> Result<Vec<Element>> {
    let n = cyclic_order(group)?;
    let len = (density * n as f64).ceil() as usize;
    progression(group, 0, 1, len.clamp(1, n))
}

/// Nonzero squares mod a prime.
pub fn quadratic_residues(group: &Group) -> Result<Vec<Element>> {
    let p = cyclic_order(group)?;
    if !is_prime(p) || p == 2 {
        return Err(Error::InvalidParameter(format!("quadratic residues need an odd prime, got {p}")));
    }
    let mut set: Vec<Element> = (1..p).map(|x| x * x % p).collect();
    set.sort_unstable();
    set.dedup();
    Ok(set)
}

/// Exactly `floor(density |G|)` elements drawn uniformly without replacement.
pub fn random_set(group: &Group, density: f64, rng: &mut ChaCha8Rng) -> Vec<Element> {
    let n = group.order();
    let k = ((density * n as f64).floor() as usize).min(n);
    let mut set = sample(rng, n, k).into_vec();
    set.sort_unstable();
    set
}

/// Union of `count` random subspaces of codimension `codim` in F2^n.
pub fn subspace_union(group: &Group, count: usize, codim: usize, rng: &mut ChaCha8Rng) -> Result<Vec<Element>> {
    if !group.is_boolean() {
        return Err(Error::InvalidParameter("subspace unions need F2^n".into()));
    }
    let n = group.order();
    let mut member = vec![false; n];
    for _ in 0..count {
        let constraints: Vec<usize> = (0..codim).map(|_| rng.gen_range(1..n)).collect();
        for (x, m) in member.iter_mut().enumerate() {
            if constraints.iter().all(|&c| (c & x).count_ones() % 2 == 0) {
                *m = true;
            }
        }
    }
    Ok((0..n).filter(|&x| member[x]).collect())
}

/// `sum_{i<k} gamma_i + sigma * noise`, real-valued when possible.
pub fn character_noise(group: &Group, k: usize, sigma: f64, rng: &mut ChaCha8Rng) -> GroupFunction {
    let n = group.order();
    let chars = sample(rng, n - 1, k.min(n - 1)).into_vec();
    let mut values = vec![C64::new(0.0, 0.0); n];
    for c in chars {
        let gamma = c + 1;
        for (x, v) in values.iter_mut().enumerate() {
            *v += group.pairing(gamma, x);
        }
    }
    for v in values.iter_mut() {
        *v += C64::new(sigma * rng.gen_range(-1.0..1.0), 0.0);
    }
    GroupFunction {
        group: group.clone(),
        values,
    }
}

/// `count` entries of a family; `ap` and `qr` are deterministic and ignore `count`.
pub fn generate_family(family: Family, group: &Group, seed: u64, count: usize) -> Result<Vec<Instance>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let out = match family {
        Family::Ap => {
            let mut v = Vec::new();
            for (name, density) in [("1/4", 0.25), ("1/2", 0.5), ("3/4", 0.75)] {
                v.push(Instance::from_set(group, format!("ap-{name}"), interval(group, density)?));
            }
            v
        }
        Family::Qr => vec![Instance::from_set(group, "qr".into(), quadratic_residues(group)?)],
        Family::Random => (0..count)
            .map(|i| Instance::from_set(group, format!("random-{i}"), random_set(group, 0.5, &mut rng)))
            .collect(),
        Family::SubspaceUnion => {
            let rank = group.rank();
            let mut v = Vec::new();
            for i in 0..count {
                let pieces = 1 + i % 3;
                let codim = 1 + (i / 3) % rank.clamp(1, 3);
                let set = subspace_union(group, pieces, codim, &mut rng)?;
                v.push(Instance::from_set(group, format!("union-{i}"), set));
            }
            v
        }
        Family::CharacterNoise => (0..count)
            .map(|i| Instance {
                label: format!("noise-{i}"),
                function: character_noise(group, 1 + i % 4, 0.1, &mut rng),
                set: None,
            })
            .collect(),
    };
    Ok(out)
}

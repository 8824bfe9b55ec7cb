//! Finite abelian groups as products of cyclic factors.
//!
//! Elements and characters are both stored as a flat index in row-major
//! mixed-radix order (the last factor varies fastest). The dual of
//! `Z/N_1 x ... x Z/N_k` is indexed by the same coordinates, with the pairing
//! `gamma(x) = exp(2 pi i sum_j gamma_j x_j / N_j)`.

use std::fmt;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// An element of G, as a mixed-radix index.
pub type Element = usize;
/// A character of G, indexed like the elements.
pub type Character = usize;

/// Default cap on |G|.
pub const DEFAULT_ORDER_CAP: usize = 1 << 24;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GroupKind {
    Cyclic,
    BooleanCube,
    Mixed,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Group {
    factors: Vec<usize>,
    strides: Vec<usize>,
    order: usize,
    // Common period of all phases and the per-factor scale M / N_j.
    period: u64,
    scales: Vec<u64>,
    boolean: bool,
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

impl Group {
    pub fn new(factors: &[usize]) -> Result<Self> {
        Self::with_cap(factors, DEFAULT_ORDER_CAP)
    }

    pub fn with_cap(factors: &[usize], cap: usize) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::InvalidParameter("a group needs at least one factor".into()));
        }
        let mut order: u128 = 1;
        for &n in factors {
            if n < 2 {
                return Err(Error::InvalidOrder(n));
            }
            order *= n as u128;
            if order > cap as u128 {
                return Err(Error::GroupTooLarge { order, cap });
            }
        }
        let order = order as usize;
        let mut strides = vec![1; factors.len()];
        for j in (0..factors.len().saturating_sub(1)).rev() {
            strides[j] = strides[j + 1] * factors[j + 1];
        }
        let period = factors
            .iter()
            .fold(1u64, |m, &n| m / gcd(m, n as u64) * n as u64);
        let scales = factors.iter().map(|&n| period / n as u64).collect();
        Ok(Group {
            factors: factors.to_vec(),
            strides,
            order,
            period,
            scales,
            boolean: factors.iter().all(|&n| n == 2),
        })
    }

    pub fn cyclic(n: usize) -> Result<Self> {
        Self::new(&[n])
    }

    /// The boolean cube F_2^n.
    pub fn cube(n: usize) -> Result<Self> {
        Self::new(&vec![2; n])
    }

    /// Parses `Z17`, `F2^12`, `Z3^2` and products such as `Z4xZ3`.
    pub fn parse(spec: &str) -> Result<Self> {
        Self::parse_with_cap(spec, DEFAULT_ORDER_CAP)
    }

    pub fn parse_with_cap(spec: &str, cap: usize) -> Result<Self> {
        let bad = || Error::Parse(format!("bad group spec {spec:?}"));
        let mut factors = Vec::new();
        for part in spec.trim().split(['x', 'X', '*']) {
            let part = part.trim();
            let (base, power) = match part.split_once('^') {
                Some((b, p)) => (b, p.trim().parse::<usize>().map_err(|_| bad())?),
                None => (part, 1),
            };
            let n = if let Some(rest) = base.strip_prefix('Z') {
                rest.parse::<usize>().map_err(|_| bad())?
            } else if let Some(rest) = base.strip_prefix('F') {
                let q = rest.parse::<usize>().map_err(|_| bad())?;
                if q != 2 {
                    return Err(Error::Parse(format!("only F2 fields are supported, got {base}")));
                }
                2
            } else {
                return Err(bad());
            };
            if power == 0 {
                return Err(bad());
            }
            factors.extend(std::iter::repeat_n(n, power));
        }
        Self::with_cap(&factors, cap)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn factors(&self) -> &[usize] {
        &self.factors
    }

    pub fn rank(&self) -> usize {
        self.factors.len()
    }

    pub fn kind(&self) -> GroupKind {
        if self.boolean {
            GroupKind::BooleanCube
        } else if self.factors.len() == 1 {
            GroupKind::Cyclic
        } else {
            GroupKind::Mixed
        }
    }

    pub fn is_boolean(&self) -> bool {
        self.boolean
    }

    /// Exponent of the group; every phase lives in `Z/period`.
    pub fn period(&self) -> u64 {
        self.period
    }

    pub fn zero(&self) -> Element {
        0
    }

    pub fn coords(&self, x: Element) -> Vec<usize> {
        self.factors
            .iter()
            .zip(&self.strides)
            .map(|(&n, &s)| (x / s) % n)
            .collect()
    }

    pub fn index(&self, coords: &[usize]) -> Result<Element> {
        if coords.len() != self.factors.len() {
            return Err(Error::InvalidParameter(format!(
                "expected {} coordinates, got {}",
                self.factors.len(),
                coords.len()
            )));
        }
        let mut x = 0;
        for ((&c, &n), &s) in coords.iter().zip(&self.factors).zip(&self.strides) {
            if c >= n {
                return Err(Error::InvalidParameter(format!("coordinate {c} out of range 0..{n}")));
            }
            x += c * s;
        }
        Ok(x)
    }

    #[inline]
    pub fn add(&self, a: Element, b: Element) -> Element {
        if self.factors.len() == 1 {
            let n = self.factors[0];
            let s = a + b;
            return if s >= n { s - n } else { s };
        }
        if self.is_boolean() {
            return a ^ b;
        }
        let mut out = 0;
        for (&n, &s) in self.factors.iter().zip(&self.strides) {
            let c = ((a / s) % n + (b / s) % n) % n;
            out += c * s;
        }
        out
    }

    #[inline]
    pub fn neg(&self, a: Element) -> Element {
        if self.factors.len() == 1 {
            let n = self.factors[0];
            return if a == 0 { 0 } else { n - a };
        }
        if self.is_boolean() {
            return a;
        }
        let mut out = 0;
        for (&n, &s) in self.factors.iter().zip(&self.strides) {
            let c = (a / s) % n;
            out += ((n - c) % n) * s;
        }
        out
    }

    #[inline]
    pub fn sub(&self, a: Element, b: Element) -> Element {
        self.add(a, self.neg(b))
    }

    /// k-fold multiple of `a` (k may be negative).
    pub fn mul(&self, a: Element, k: i64) -> Element {
        let mut out = 0;
        for (&n, &s) in self.factors.iter().zip(&self.strides) {
            let c = ((a / s) % n) as i64;
            out += ((c * k).rem_euclid(n as i64) as usize) * s;
        }
        out
    }

    /// Additive order of an element (or character).
    pub fn element_order(&self, a: Element) -> usize {
        let mut ord = 1u64;
        for (&n, &s) in self.factors.iter().zip(&self.strides) {
            let c = ((a / s) % n) as u64;
            let o = n as u64 / gcd(c, n as u64);
            ord = ord / gcd(ord, o) * o;
        }
        ord as usize
    }

    /// Phase of `gamma(x)` as an integer in `0..period`.
    #[inline]
    pub fn phase(&self, gamma: Character, x: Element) -> u64 {
        let m = self.period;
        if self.factors.len() == 1 {
            return (gamma as u64 * x as u64) % m;
        }
        let mut acc = 0u64;
        for ((&n, &s), &sc) in self.factors.iter().zip(&self.strides).zip(&self.scales) {
            let g = ((gamma / s) % n) as u64;
            let y = ((x / s) % n) as u64;
            acc = (acc + (g * y % n as u64) * sc) % m;
        }
        acc
    }

    /// Phases of `gamma(x)` for every x, in element order.
    pub fn character_phases(&self, gamma: Character) -> Vec<u64> {
        let m = self.period;
        let mut out = vec![0u64];
        for ((&n, &s), &sc) in self.factors.iter().zip(&self.strides).zip(&self.scales) {
            let g = ((gamma / s) % n) as u64;
            let step = g * sc % m;
            let mut next = Vec::with_capacity(out.len() * n);
            for &p in &out {
                let mut q = p;
                for _ in 0..n {
                    next.push(q);
                    q += step;
                    if q >= m {
                        q -= m;
                    }
                }
            }
            out = next;
        }
        out
    }

    /// Value of the character `gamma` at `x`.
    pub fn pairing(&self, gamma: Character, x: Element) -> Complex64 {
        phase_to_unit(self.phase(gamma, x), self.period)
    }

    /// `||gamma(x)||`: distance of the phase to the nearest integer, in [0, 1/2].
    pub fn valuation(&self, gamma: Character, x: Element) -> f64 {
        phase_distance(self.phase(gamma, x), self.period) as f64 / self.period as f64
    }

    pub fn parse_element(&self, text: &str) -> Result<Element> {
        let parts: Vec<&str> = text.split(',').map(str::trim).collect();
        let bad = || Error::Parse(format!("bad element {text:?}"));
        if parts.len() == 1 && self.factors.len() == 1 {
            let v: i64 = parts[0].parse().map_err(|_| bad())?;
            return Ok(v.rem_euclid(self.factors[0] as i64) as usize);
        }
        if parts.len() != self.factors.len() {
            return Err(bad());
        }
        let mut coords = Vec::with_capacity(parts.len());
        for (p, &n) in parts.iter().zip(&self.factors) {
            let v: i64 = p.parse().map_err(|_| bad())?;
            coords.push(v.rem_euclid(n as i64) as usize);
        }
        self.index(&coords)
    }

    pub fn format_element(&self, x: Element) -> String {
        if self.factors.len() == 1 {
            return x.to_string();
        }
        self.coords(x)
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }

    /// Canonical spec string, e.g. `Z4xZ3` or `F2^12`.
    pub fn spec(&self) -> String {
        if self.is_boolean() {
            return format!("F2^{}", self.factors.len());
        }
        self.factors
            .iter()
            .map(|n| format!("Z{n}"))
            .collect::<Vec<_>>()
            .join("x")
    }
}

impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.spec())
    }
}

#[inline]
pub fn phase_distance(phase: u64, period: u64) -> u64 {
    phase.min(period - phase)
}

#[inline]
pub fn phase_to_unit(phase: u64, period: u64) -> Complex64 {
    if phase == 0 {
        return Complex64::new(1.0, 0.0);
    }
    let theta = std::f64::consts::TAU * phase as f64 / period as f64;
    Complex64::new(theta.cos(), theta.sin())
}

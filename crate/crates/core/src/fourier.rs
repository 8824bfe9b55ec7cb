//! Functions, spectra and measures on a finite abelian group.
//!
//! Integration is against the Haar probability measure, so
//! `f^(gamma) = (1/|G|) sum_x f(x) conj(gamma(x))` and `f(x) = sum_gamma f^(gamma) gamma(x)`.
//! A measure is a weight per element; its transform is `sum_x w(x) conj(gamma(x))`.

use num_complex::Complex64;
use rustfft::FftPlanner;

use crate::error::{Error, Result};
use crate::group::{phase_to_unit, Character, Element, Group};

pub type C64 = Complex64;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Norm {
    L1,
    L2,
    Linf,
    A,
}

#[derive(Clone, Debug, PartialEq)]
pub struct GroupFunction {
    pub group: Group,
    pub values: Vec<C64>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Spectrum {
    pub group: Group,
    pub coeffs: Vec<C64>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct GroupMeasure {
    pub group: Group,
    pub weights: Vec<C64>,
}

#[derive(Clone, Copy)]
enum Direction {
    Forward,
    Inverse,
}

/// Unnormalized DFT along every factor, in place.
fn transform_in_place(group: &Group, data: &mut [C64], dir: Direction) {
    if group.is_boolean() {
        walsh_hadamard(data);
        return;
    }
    let mut planner = FftPlanner::<f64>::new();
    let factors = group.factors();
    let total = group.order();
    let mut stride = total;
    for &n in factors {
        stride /= n;
        let fft = match dir {
            Direction::Forward => planner.plan_fft_forward(n),
            Direction::Inverse => planner.plan_fft_inverse(n),
        };
        if stride == 1 {
            fft.process(data);
            continue;
        }
        let block = n * stride;
        let mut buf = vec![C64::new(0.0, 0.0); block];
        for chunk in data.chunks_mut(block) {
            for i in 0..stride {
                for k in 0..n {
                    buf[i * n + k] = chunk[k * stride + i];
                }
            }
            fft.process(&mut buf);
            for i in 0..stride {
                for k in 0..n {
                    chunk[k * stride + i] = buf[i * n + k];
                }
            }
        }
    }
}

fn walsh_hadamard(data: &mut [C64]) {
    let n = data.len();
    let mut h = 1;
    while h < n {
        for start in (0..n).step_by(2 * h) {
            for i in start..start + h {
                let a = data[i];
                let b = data[i + h];
                data[i] = a + b;
                data[i + h] = a - b;
            }
        }
        h *= 2;
    }
}

fn check_same(a: &Group, b: &Group) -> Result<()> {
    if a == b {
        Ok(())
    } else {
        Err(Error::GroupMismatch)
    }
}

/// Forward transform of `f`.
pub fn fourier(f: &GroupFunction) -> Spectrum {
    let mut data = f.values.clone();
    transform_in_place(&f.group, &mut data, Direction::Forward);
    let scale = 1.0 / f.group.order() as f64;
    data.iter_mut().for_each(|v| *v *= scale);
    Spectrum {
        group: f.group.clone(),
        coeffs: data,
    }
}

/// Fourier inversion: `f(x) = sum_gamma s(gamma) gamma(x)`.
pub fn inverse(s: &Spectrum) -> GroupFunction {
    let mut data = s.coeffs.clone();
    transform_in_place(&s.group, &mut data, Direction::Inverse);
    GroupFunction {
        group: s.group.clone(),
        values: data,
    }
}

/// Reference O(|G|^2) transform by direct summation.
pub fn fourier_direct(f: &GroupFunction) -> Spectrum {
    let g = &f.group;
    let n = g.order();
    let m = g.period();
    let coeffs = (0..n)
        .map(|gamma| {
            let phases = g.character_phases(gamma);
            let sum: C64 = f
                .values
                .iter()
                .zip(&phases)
                .map(|(v, &p)| v * phase_to_unit(p, m).conj())
                .sum();
            sum / n as f64
        })
        .collect();
    Spectrum {
        group: g.clone(),
        coeffs,
    }
}

impl GroupFunction {
    pub fn new(group: Group, values: Vec<C64>) -> Result<Self> {
        if values.len() != group.order() {
            return Err(Error::InvalidParameter(format!(
                "expected {} values, got {}",
                group.order(),
                values.len()
            )));
        }
        if values.iter().any(|v| !v.re.is_finite() || !v.im.is_finite()) {
            return Err(Error::InvalidParameter("non-finite function value".into()));
        }
        Ok(GroupFunction { group, values })
    }

    pub fn from_real(group: Group, values: &[f64]) -> Result<Self> {
        Self::new(group, values.iter().map(|&v| C64::new(v, 0.0)).collect())
    }

    pub fn from_fn(group: &Group, mut f: impl FnMut(Element) -> C64) -> Self {
        let values = (0..group.order()).map(&mut f).collect();
        GroupFunction {
            group: group.clone(),
            values,
        }
    }

    pub fn constant(group: &Group, c: C64) -> Self {
        GroupFunction {
            group: group.clone(),
            values: vec![c; group.order()],
        }
    }

    pub fn indicator(group: &Group, set: &[Element]) -> Self {
        let mut values = vec![C64::new(0.0, 0.0); group.order()];
        for &x in set {
            values[x] = C64::new(1.0, 0.0);
        }
        GroupFunction {
            group: group.clone(),
            values,
        }
    }

    pub fn character(group: &Group, gamma: Character) -> Self {
        let m = group.period();
        let values = group
            .character_phases(gamma)
            .into_iter()
            .map(|p| phase_to_unit(p, m))
            .collect();
        GroupFunction {
            group: group.clone(),
            values,
        }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|v| *v == C64::new(0.0, 0.0))
    }

    pub fn norm(&self, kind: Norm) -> f64 {
        let n = self.values.len() as f64;
        match kind {
            Norm::L1 => self.values.iter().map(|v| v.norm()).sum::<f64>() / n,
            Norm::L2 => (self.values.iter().map(|v| v.norm_sqr()).sum::<f64>() / n).sqrt(),
            Norm::Linf => self.values.iter().fold(0.0, |m, v| m.max(v.norm())),
            Norm::A => fourier(self).l1(),
        }
    }

    /// `||f||_A / ||f||_inf`, at least 1 for nonzero f.
    pub fn a_ratio(&self) -> Result<f64> {
        let sup = self.norm(Norm::Linf);
        if sup == 0.0 {
            return Err(Error::Degenerate("zero function has no A-ratio".into()));
        }
        Ok(self.norm(Norm::A) / sup)
    }

    pub fn mean(&self) -> C64 {
        self.values.iter().sum::<C64>() / self.values.len() as f64
    }

    /// `x -> f(x + y)`.
    pub fn shift(&self, y: Element) -> Self {
        let g = &self.group;
        let values = (0..g.order()).map(|x| self.values[g.add(x, y)]).collect();
        GroupFunction {
            group: g.clone(),
            values,
        }
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        check_same(&self.group, &other.group)?;
        Ok(GroupFunction {
            group: self.group.clone(),
            values: self.values.iter().zip(&other.values).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        check_same(&self.group, &other.group)?;
        Ok(GroupFunction {
            group: self.group.clone(),
            values: self.values.iter().zip(&other.values).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn scale(&self, c: C64) -> Self {
        GroupFunction {
            group: self.group.clone(),
            values: self.values.iter().map(|v| v * c).collect(),
        }
    }

    pub fn pointwise(&self, other: &Self) -> Result<Self> {
        check_same(&self.group, &other.group)?;
        Ok(GroupFunction {
            group: self.group.clone(),
            values: self.values.iter().zip(&other.values).map(|(a, b)| a * b).collect(),
        })
    }

    /// `(f * g)(x) = E_y f(x - y) g(y)`.
    pub fn convolve(&self, other: &Self) -> Result<Self> {
        check_same(&self.group, &other.group)?;
        let a = fourier(self);
        let b = fourier(other);
        Ok(inverse(&a.pointwise(&b)))
    }

    /// `(f * mu)(x) = sum_y f(x - y) w(y)`.
    pub fn convolve_measure(&self, mu: &GroupMeasure) -> Result<Self> {
        check_same(&self.group, &mu.group)?;
        let a = fourier(self);
        let b = mu.transform();
        Ok(inverse(&a.pointwise(&b)))
    }

    /// `<f, g> = E_x f(x) conj(g(x))`.
    pub fn inner(&self, other: &Self) -> Result<C64> {
        check_same(&self.group, &other.group)?;
        let s: C64 = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| a * b.conj())
            .sum();
        Ok(s / self.values.len() as f64)
    }

    /// `int f dmu = sum_x f(x) w(x)`.
    pub fn integrate(&self, mu: &GroupMeasure) -> Result<C64> {
        check_same(&self.group, &mu.group)?;
        Ok(self.values.iter().zip(&mu.weights).map(|(a, b)| a * b).sum())
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.values
            .iter()
            .zip(&other.values)
            .fold(0.0, |m, (a, b)| m.max((a - b).norm()))
    }
}

impl Spectrum {
    pub fn new(group: Group, coeffs: Vec<C64>) -> Result<Self> {
        if coeffs.len() != group.order() {
            return Err(Error::InvalidParameter(format!(
                "expected {} coefficients, got {}",
                group.order(),
                coeffs.len()
            )));
        }
        Ok(Spectrum { group, coeffs })
    }

    pub fn zeros(group: &Group) -> Self {
        Spectrum {
            group: group.clone(),
            coeffs: vec![C64::new(0.0, 0.0); group.order()],
        }
    }

    pub fn l1(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm()).sum()
    }

    pub fn l2_sqr(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm_sqr()).sum()
    }

    pub fn sup(&self) -> f64 {
        self.coeffs.iter().fold(0.0, |m, c| m.max(c.norm()))
    }

    pub fn pointwise(&self, other: &Self) -> Self {
        Spectrum {
            group: self.group.clone(),
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a * b).collect(),
        }
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .fold(0.0, |m, (a, b)| m.max((a - b).norm()))
    }
}

impl GroupMeasure {
    pub fn new(group: Group, weights: Vec<C64>) -> Result<Self> {
        if weights.len() != group.order() {
            return Err(Error::InvalidParameter(format!(
                "expected {} weights, got {}",
                group.order(),
                weights.len()
            )));
        }
        Ok(GroupMeasure { group, weights })
    }

    pub fn point_mass(group: &Group, x: Element, c: C64) -> Self {
        let mut weights = vec![C64::new(0.0, 0.0); group.order()];
        weights[x] = c;
        GroupMeasure {
            group: group.clone(),
            weights,
        }
    }

    /// Haar probability measure.
    pub fn haar(group: &Group) -> Self {
        let w = 1.0 / group.order() as f64;
        GroupMeasure {
            group: group.clone(),
            weights: vec![C64::new(w, 0.0); group.order()],
        }
    }

    /// Uniform probability measure on a non-empty set.
    pub fn uniform(group: &Group, set: &[Element]) -> Result<Self> {
        if set.is_empty() {
            return Err(Error::Degenerate("uniform measure on an empty set".into()));
        }
        let w = 1.0 / set.len() as f64;
        let mut weights = vec![C64::new(0.0, 0.0); group.order()];
        for &x in set {
            weights[x] = C64::new(w, 0.0);
        }
        Ok(GroupMeasure {
            group: group.clone(),
            weights,
        })
    }

    /// The measure `f dmu_G`.
    pub fn from_density(f: &GroupFunction) -> Self {
        let n = f.values.len() as f64;
        GroupMeasure {
            group: f.group.clone(),
            weights: f.values.iter().map(|v| v / n).collect(),
        }
    }

    /// Fourier-Stieltjes transform `sum_x w(x) conj(gamma(x))`.
    pub fn transform(&self) -> Spectrum {
        let f = GroupFunction {
            group: self.group.clone(),
            values: self.weights.clone(),
        };
        let mut s = fourier(&f);
        let n = self.group.order() as f64;
        s.coeffs.iter_mut().for_each(|c| *c *= n);
        s
    }

    /// Measure with the given transform.
    pub fn from_transform(s: &Spectrum) -> Self {
        let f = inverse(s);
        let n = s.group.order() as f64;
        GroupMeasure {
            group: s.group.clone(),
            weights: f.values.into_iter().map(|v| v / n).collect(),
        }
    }

    pub fn tv_norm(&self) -> f64 {
        self.weights.iter().map(|w| w.norm()).sum()
    }

    pub fn total_mass(&self) -> C64 {
        self.weights.iter().sum()
    }

    pub fn is_probability(&self, tol: f64) -> bool {
        self.weights.iter().all(|w| w.re >= -tol && w.im.abs() <= tol)
            && (self.total_mass() - C64::new(1.0, 0.0)).norm() <= tol
    }

    pub fn convolve(&self, other: &Self) -> Result<Self> {
        check_same(&self.group, &other.group)?;
        Ok(Self::from_transform(&self.transform().pointwise(&other.transform())))
    }

    /// `y + mu`, i.e. `x -> w(x - y)`.
    pub fn translate(&self, y: Element) -> Self {
        let g = &self.group;
        let weights = (0..g.order()).map(|x| self.weights[g.sub(x, y)]).collect();
        GroupMeasure {
            group: g.clone(),
            weights,
        }
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        check_same(&self.group, &other.group)?;
        Ok(GroupMeasure {
            group: self.group.clone(),
            weights: self.weights.iter().zip(&other.weights).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn scale(&self, c: C64) -> Self {
        GroupMeasure {
            group: self.group.clone(),
            weights: self.weights.iter().map(|w| w * c).collect(),
        }
    }

    pub fn support(&self) -> Vec<Element> {
        (0..self.weights.len())
            .filter(|&x| self.weights[x] != C64::new(0.0, 0.0))
            .collect()
    }
}

/// Local transform `(f dmu)^(gamma) = sum_x f(x) w(x) conj(gamma(x))`.
pub fn weighted_transform(f: &GroupFunction, mu: &GroupMeasure) -> Result<Spectrum> {
    check_same(&f.group, &mu.group)?;
    let prod = GroupMeasure {
        group: f.group.clone(),
        weights: f.values.iter().zip(&mu.weights).map(|(a, b)| a * b).collect(),
    };
    Ok(prod.transform())
}

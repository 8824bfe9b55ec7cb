//! Bohr sets `B(Gamma, delta) = {x : ||gamma(x)|| <= delta for all gamma in Gamma}`.
//!
//! Every element has a radius `max_gamma ||gamma(x)||`, a multiple of
//! `1/period`. Sorting the radii once turns density queries at any width into
//! a binary search, which is what makes the regularity search cheap.

use crate::config::Constants;
use crate::error::{Error, Result};
use crate::fourier::{inverse, weighted_transform, GroupFunction, GroupMeasure, Spectrum, C64};
use crate::group::{phase_distance, Character, Element, Group};
use crate::spectra::above;

/// Guard band on the membership test `radius <= delta`.
pub const MEMBERSHIP_SLACK: f64 = 1e-12;

/// Smallest width the searches descend to. Below `1/period` a Bohr set is
/// the annihilator of `Gamma`, so nothing changes under further shrinking.
pub fn width_floor(group: &Group) -> f64 {
    0.5 / group.period() as f64
}

#[inline]
fn within(radius: u64, period: u64, delta: f64) -> bool {
    radius as f64 / period as f64 <= delta + MEMBERSHIP_SLACK
}

fn dedup(gamma: &[Character]) -> Vec<Character> {
    let mut out: Vec<Character> = Vec::with_capacity(gamma.len());
    for &g in gamma {
        if !out.contains(&g) {
            out.push(g);
        }
    }
    out
}

/// Integer radii of all elements with respect to `Gamma`.
#[derive(Clone, Debug)]
pub struct RadiusProfile {
    pub group: Group,
    pub gamma: Vec<Character>,
    pub radius: Vec<u64>,
    sorted: Vec<u64>,
}

impl RadiusProfile {
    pub fn new(group: &Group, gamma: &[Character]) -> Result<Self> {
        if gamma.is_empty() {
            return Err(Error::InvalidParameter("a Bohr set needs at least one character".into()));
        }
        let gamma = dedup(gamma);
        let m = group.period();
        let mut radius = vec![0u64; group.order()];
        for &g in &gamma {
            for (r, p) in radius.iter_mut().zip(group.character_phases(g)) {
                *r = (*r).max(phase_distance(p, m));
            }
        }
        let mut sorted = radius.clone();
        sorted.sort_unstable();
        Ok(RadiusProfile {
            group: group.clone(),
            gamma,
            radius,
            sorted,
        })
    }

    pub fn dimension(&self) -> usize {
        self.gamma.len()
    }

    /// `|B(Gamma, delta)|`.
    pub fn count(&self, delta: f64) -> usize {
        let m = self.group.period();
        self.sorted.partition_point(|&r| within(r, m, delta))
    }

    pub fn density(&self, delta: f64) -> f64 {
        self.count(delta) as f64 / self.group.order() as f64
    }

    pub fn members(&self, delta: f64) -> Vec<Element> {
        let m = self.group.period();
        (0..self.radius.len())
            .filter(|&x| within(self.radius[x], m, delta))
            .collect()
    }

    pub fn bohr_set(&self, delta: f64) -> Result<BohrSet> {
        check_delta(delta)?;
        let members = self.members(delta);
        let density = members.len() as f64 / self.group.order() as f64;
        let set = BohrSet {
            group: self.group.clone(),
            gamma: self.gamma.clone(),
            delta,
            members,
            density,
        };
        set.check_size()?;
        Ok(set)
    }

    /// Largest `|ratio - 1| / (|kappa| d)` over the whole window
    /// `0 < |kappa| d <= c_r`, and over the signed probe grid alone.
    pub fn regularity_constant(&self, delta: f64, c_r: f64, grid: usize) -> (f64, f64) {
        let m = self.group.period() as f64;
        let d = self.dimension() as f64;
        let k_max = c_r / d;
        let n0 = self.count(delta);
        let n0f = n0 as f64;
        let mut worst: f64 = 0.0;
        // growth: a radius r enters once (1 + kappa) delta reaches r
        let mut i = n0;
        while i < self.sorted.len() {
            let r = self.sorted[i];
            let kappa = (r as f64 / m - MEMBERSHIP_SLACK) / delta - 1.0;
            if kappa > k_max {
                break;
            }
            let upto = self.sorted.partition_point(|&v| v <= r);
            let value = if kappa > 0.0 {
                (upto - n0) as f64 / (n0f * kappa * d)
            } else {
                f64::INFINITY
            };
            worst = worst.max(value);
            i = upto;
        }
        // shrinkage: a radius r leaves once (1 - kappa) delta drops below r
        let mut j = n0;
        while j > 0 {
            let r = self.sorted[j - 1];
            let kappa = 1.0 - (r as f64 / m - MEMBERSHIP_SLACK) / delta;
            if kappa >= k_max {
                break;
            }
            let from = self.sorted.partition_point(|&v| v < r);
            let value = if kappa > 0.0 {
                (n0 - from) as f64 / (n0f * kappa * d)
            } else {
                f64::INFINITY
            };
            worst = worst.max(value);
            j = from;
        }
        let half = (grid / 2).max(1);
        let mut grid_worst: f64 = 0.0;
        for step in 1..=half {
            let kappa = k_max * step as f64 / half as f64;
            for signed in [kappa, -kappa] {
                let ratio = self.count((1.0 + signed) * delta) as f64 / n0f;
                grid_worst = grid_worst.max((ratio - 1.0).abs() / (kappa * d));
            }
        }
        (worst.max(grid_worst), grid_worst)
    }
}

fn check_delta(delta: f64) -> Result<()> {
    if delta > 0.0 && delta <= 1.0 {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!("width {delta} not in (0,1]")))
    }
}

#[derive(Clone, Debug)]
pub struct BohrSet {
    pub group: Group,
    pub gamma: Vec<Character>,
    pub delta: f64,
    pub members: Vec<Element>,
    pub density: f64,
}

impl BohrSet {
    pub fn dimension(&self) -> usize {
        self.gamma.len()
    }

    fn check_size(&self) -> Result<()> {
        let floor = self.delta.min(1.0).powi(self.dimension() as i32);
        if self.density < floor * (1.0 - 1e-12) {
            return Err(Error::Verification(format!(
                "Bohr set density {} is below delta^d = {floor}",
                self.density
            )));
        }
        Ok(())
    }

    pub fn contains(&self, x: Element) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    pub fn mask(&self) -> Vec<bool> {
        let mut m = vec![false; self.group.order()];
        for &x in &self.members {
            m[x] = true;
        }
        m
    }

    /// Uniform probability measure on the set.
    pub fn cutoff(&self) -> GroupMeasure {
        GroupMeasure::uniform(&self.group, &self.members).expect("Bohr sets contain 0")
    }

    pub fn has_nonzero(&self) -> bool {
        self.members.len() > 1
    }
}

/// `B(Gamma, delta)` with exact membership.
pub fn bohr_set(group: &Group, gamma: &[Character], delta: f64) -> Result<BohrSet> {
    RadiusProfile::new(group, gamma)?.bohr_set(delta)
}

/// `max_gamma ||gamma(y)||`.
pub fn element_radius(group: &Group, gamma: &[Character], y: Element) -> f64 {
    gamma
        .iter()
        .map(|&g| group.valuation(g, y))
        .fold(0.0, f64::max)
}

#[derive(Clone, Debug)]
pub struct RegularBohrSet {
    pub bohr: BohrSet,
    /// Largest observed `|ratio - 1| / (|kappa| d)` on the full window.
    pub constant: f64,
    /// The same quantity restricted to the probe grid.
    pub grid_constant: f64,
    pub certified: bool,
}

fn search_regular(
    profile: &RadiusProfile,
    delta: f64,
    constants: &Constants,
) -> Result<(RegularBohrSet, bool)> {
    check_delta(delta)?;
    let n = constants.regular_candidates.max(1);
    let mut best: Option<(f64, f64, f64)> = None;
    for i in 1..=n {
        let cand = delta * 2f64.powf(-(i as f64) / n as f64);
        let (c, g) = profile.regularity_constant(cand, constants.c_r, 32);
        if c <= constants.c_reg {
            return Ok((
                RegularBohrSet {
                    bohr: profile.bohr_set(cand)?,
                    constant: c,
                    grid_constant: g,
                    certified: true,
                },
                true,
            ));
        }
        if best.is_none_or(|(_, bc, _)| c < bc) {
            best = Some((cand, c, g));
        }
    }
    let (cand, c, g) = best.expect("at least one candidate");
    Ok((
        RegularBohrSet {
            bohr: profile.bohr_set(cand)?,
            constant: c,
            grid_constant: g,
            certified: false,
        },
        false,
    ))
}

/// A width in `[delta/2, delta)` at which `B(Gamma, .)` is regular.
pub fn find_regular(
    group: &Group,
    gamma: &[Character],
    delta: f64,
    constants: &Constants,
) -> Result<RegularBohrSet> {
    let profile = RadiusProfile::new(group, gamma)?;
    let (set, ok) = search_regular(&profile, delta, constants)?;
    if ok {
        Ok(set)
    } else {
        Err(Error::NoRegularWidth {
            best_delta: set.bohr.delta,
            best_constant: set.constant,
        })
    }
}

/// Like [`find_regular`], but falls back to the best candidate with
/// `certified = false` instead of failing.
pub fn find_regular_or_best(
    group: &Group,
    gamma: &[Character],
    delta: f64,
    constants: &Constants,
) -> Result<RegularBohrSet> {
    let profile = RadiusProfile::new(group, gamma)?;
    Ok(search_regular(&profile, delta, constants)?.0)
}

/// `||(y + beta) - beta|| = |B Δ (B + y)| / |B|`.
pub fn translate_defect(b: &BohrSet, y: Element) -> f64 {
    let mask = b.mask();
    let g = &b.group;
    let moved = b.members.iter().filter(|&&x| !mask[g.sub(x, y)]).count();
    2.0 * moved as f64 / b.members.len() as f64
}

/// `beta_{(1-kappa) delta} * beta_{kappa delta / L}^L`.
#[derive(Clone, Debug)]
pub struct SmoothedCutoff {
    pub measure: GroupMeasure,
    pub transform: Spectrum,
    pub l: usize,
    pub kappa: f64,
    /// `||beta~ - beta_delta||`.
    pub distance: f64,
}

/// Smoothed cutoff from its two factors; `base` is the reference set.
pub fn smooth_parts(
    base: &BohrSet,
    outer: &BohrSet,
    inner: &BohrSet,
    l: usize,
    kappa: f64,
) -> Result<SmoothedCutoff> {
    if l == 0 || l % 2 == 1 {
        return Err(Error::InvalidParameter(format!("smoothing power {l} must be even")));
    }
    let o = outer.cutoff().transform();
    let i = inner.cutoff().transform();
    let coeffs = o
        .coeffs
        .iter()
        .zip(&i.coeffs)
        .map(|(a, b)| a * b.powu(l as u32))
        .collect();
    let transform = Spectrum {
        group: base.group.clone(),
        coeffs,
    };
    let mut measure = GroupMeasure::from_transform(&transform);
    for w in measure.weights.iter_mut() {
        *w = C64::new(w.re, 0.0);
    }
    let distance = measure.sub(&base.cutoff())?.tv_norm();
    Ok(SmoothedCutoff {
        measure,
        transform,
        l,
        kappa,
        distance,
    })
}

pub fn smoothed_cutoff(
    group: &Group,
    gamma: &[Character],
    delta: f64,
    l: usize,
    kappa: f64,
) -> Result<SmoothedCutoff> {
    if !(kappa > 0.0 && kappa <= 1.0) {
        return Err(Error::InvalidParameter(format!("kappa {kappa} not in (0,1]")));
    }
    if l == 0 || l % 2 == 1 {
        return Err(Error::InvalidParameter(format!("smoothing power {l} must be even")));
    }
    let profile = RadiusProfile::new(group, gamma)?;
    let base = profile.bohr_set(delta)?;
    let outer = profile.bohr_set(((1.0 - kappa) * delta).max(width_floor(group)))?;
    let inner = profile.bohr_set(kappa * delta / l as f64)?;
    smooth_parts(&base, &outer, &inner, l, kappa)
}

/// `asin(eta/2)/pi`: `|1 - gamma(x)| <= eta` iff `||gamma(x)|| <=` this.
pub fn class_radius(eta: f64) -> f64 {
    if eta >= 2.0 {
        0.5
    } else {
        (eta / 2.0).asin() / std::f64::consts::PI
    }
}

/// Does `gamma` satisfy `|1 - gamma(x)| <= eta` on all of `members`?
pub fn in_class(group: &Group, gamma: Character, members: &[Element], eta: f64) -> bool {
    if eta >= 2.0 {
        return true;
    }
    let m = group.period();
    let theta = class_radius(eta);
    members
        .iter()
        .all(|&x| within(phase_distance(group.phase(gamma, x), m), m, theta))
}

/// `{gamma : |1 - gamma(x)| <= eta for all x in B}`.
pub fn annihilator_class(b: &BohrSet, eta: f64) -> Vec<Character> {
    (0..b.group.order())
        .filter(|&g| in_class(&b.group, g, &b.members, eta))
        .collect()
}

/// A width `delta'` with `{|beta^| >= eta1} ⊆ annihilator_class(B(Gamma, delta'), eta2)`,
/// found by halving from `eta1 eta2 delta / d` and checked exhaustively.
pub fn nest_delta(group: &Group, gamma: &[Character], delta: f64, eta1: f64, eta2: f64) -> Result<f64> {
    for e in [eta1, eta2] {
        if !(e > 0.0 && e <= 1.0) {
            return Err(Error::InvalidParameter(format!("parameter {e} not in (0,1]")));
        }
    }
    let profile = RadiusProfile::new(group, gamma)?;
    let b = profile.bohr_set(delta)?;
    let s = above(&b.cutoff().transform(), eta1);
    let floor = width_floor(group);
    let mut cand = (eta1 * eta2 * delta / profile.dimension() as f64).max(floor);
    loop {
        let members = profile.members(cand);
        if s.iter().all(|&g| in_class(group, g, &members, eta2)) {
            return Ok(cand);
        }
        if cand <= floor {
            return Err(Error::WidthUnderflow(
                "no width keeps the large spectrum inside the class".into(),
            ));
        }
        cand = (cand / 2.0).max(floor);
    }
}

/// `(int |f|^p d(x' + beta))^(1/p)`; `p = f64::INFINITY` gives the sup on `x' + B`.
pub fn local_norm(f: &GroupFunction, x0: Element, b: &BohrSet, p: f64) -> Result<f64> {
    if !(p >= 1.0) {
        return Err(Error::InvalidParameter(format!("local norm needs p >= 1, got {p}")));
    }
    let g = &b.group;
    if p.is_infinite() {
        return Ok(b
            .members
            .iter()
            .map(|&y| f.values[g.add(x0, y)].norm())
            .fold(0.0, f64::max));
    }
    let sum: f64 = b
        .members
        .iter()
        .map(|&y| f.values[g.add(x0, y)].norm().powf(p))
        .sum();
    Ok((sum / b.members.len() as f64).powf(1.0 / p))
}

/// `gamma -> sum_x f(x) beta(x - x') conj(gamma(x))`.
pub fn local_fourier(f: &GroupFunction, x0: Element, b: &BohrSet) -> Result<Spectrum> {
    weighted_transform(f, &b.cutoff().translate(x0))
}

/// `max_{x, y in members} |h(x + y) - h(x)|`.
pub fn max_oscillation(h: &GroupFunction, members: &[Element]) -> f64 {
    let g = &h.group;
    let n = g.order();
    let mut worst: f64 = 0.0;
    for &y in members {
        if y == 0 {
            continue;
        }
        for x in 0..n {
            worst = worst.max((h.values[g.add(x, y)] - h.values[x]).norm());
        }
    }
    worst
}

/// `x -> (int |h|^2 d(x + beta'))^(1/2)` for every x, via one convolution.
pub fn local_l2_profile(h: &GroupFunction, b: &BohrSet) -> Result<Vec<f64>> {
    let sq = GroupFunction {
        group: h.group.clone(),
        values: h.values.iter().map(|v| C64::new(v.norm_sqr(), 0.0)).collect(),
    };
    // B is symmetric, so (|h|^2 * beta)(x) is the average over x + B
    let avg = sq.convolve_measure(&b.cutoff())?;
    Ok(avg.values.iter().map(|v| v.re.max(0.0).sqrt()).collect())
}

/// The same profile by direct summation, for verification.
pub fn local_l2_profile_direct(h: &GroupFunction, b: &BohrSet) -> Vec<f64> {
    let g = &h.group;
    let k = b.members.len() as f64;
    (0..g.order())
        .map(|x| {
            let s: f64 = b
                .members
                .iter()
                .map(|&y| h.values[g.add(x, y)].norm_sqr())
                .sum();
            (s / k).sqrt()
        })
        .collect()
}

/// Inverse transform helper for measures given by their transform.
pub fn measure_from_transform(s: &Spectrum) -> GroupMeasure {
    let f = inverse(s);
    let n = s.group.order() as f64;
    GroupMeasure {
        group: s.group.clone(),
        weights: f.values.into_iter().map(|v| v / n).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples_on_z12() {
        let g = Group::cyclic(12).unwrap();
        let b = bohr_set(&g, &[3], 1.0 / 6.0).unwrap();
        assert_eq!(b.members, vec![0, 4, 8]);
        assert!((b.density - 0.25).abs() < 1e-15);
        let all = bohr_set(&g, &[5, 7], 0.5).unwrap();
        assert_eq!(all.members.len(), 12);
        for &y in &b.members {
            assert_eq!(translate_defect(&b, y), 0.0);
        }
    }

    #[test]
    fn intervals_in_cyclic_groups() {
        let g = Group::cyclic(101).unwrap();
        for delta in [0.01, 0.05, 0.1234, 0.3] {
            let b = bohr_set(&g, &[1], delta).unwrap();
            let k = (delta * 101.0).floor() as usize;
            assert_eq!(b.members.len(), 2 * k + 1);
        }
    }

    #[test]
    fn regular_interval() {
        let g = Group::cyclic(4096).unwrap();
        let r = find_regular(&g, &[1], 0.125, &Constants::default()).unwrap();
        assert!(r.bohr.delta >= 0.0625 && r.bohr.delta < 0.125);
        assert!(r.constant <= 32.0);
        let sub = find_regular(&g, &[1024], 0.001, &Constants::default()).unwrap();
        assert_eq!(sub.constant, 0.0);
    }

    #[test]
    fn class_examples() {
        let g = Group::cyclic(16).unwrap();
        let whole = bohr_set(&g, &[1], 0.5).unwrap();
        assert_eq!(annihilator_class(&whole, 2.0).len(), 16);
        let tiny = (std::f64::consts::PI / 8.0).sin() * 2.0 * 0.99;
        assert_eq!(annihilator_class(&whole, tiny), vec![0]);
    }

    #[test]
    fn nest_on_z256() {
        let g = Group::cyclic(256).unwrap();
        let d = nest_delta(&g, &[1], 0.125, 1.0 / 3.0, 0.5).unwrap();
        let b = bohr_set(&g, &[1], 0.125).unwrap();
        let s = above(&b.cutoff().transform(), 1.0 / 3.0);
        let inner = bohr_set(&g, &[1], d).unwrap();
        let class = annihilator_class(&inner, 0.5);
        assert!(s.iter().all(|x| class.contains(x)));
    }

    #[test]
    fn local_norms() {
        let g = Group::cyclic(20).unwrap();
        let f = GroupFunction::constant(&g, C64::new(-3.0, 0.0));
        let b = bohr_set(&g, &[1], 0.1).unwrap();
        for p in [1.0, 2.0, f64::INFINITY] {
            assert!((local_norm(&f, 7, &b, p).unwrap() - 3.0).abs() < 1e-12);
        }
        assert!(local_norm(&f, 0, &b, 0.5).is_err());
        let h = GroupFunction::from_fn(&g, |x| C64::new((x * x % 7) as f64, 1.0));
        let fast = local_l2_profile(&h, &b).unwrap();
        let slow = local_l2_profile_direct(&h, &b);
        for (a, c) in fast.iter().zip(&slow) {
            assert!((a - c).abs() < 1e-9);
        }
    }

    #[test]
    fn smoothing_converges() {
        let g = Group::cyclic(1024).unwrap();
        let mut last = f64::INFINITY;
        for k in [2, 4, 6, 8] {
            let kappa = 2f64.powi(-k);
            let s = smoothed_cutoff(&g, &[1], 0.2, 2, kappa).unwrap();
            assert!(s.measure.is_probability(1e-9));
            assert!(s.distance <= last + 1e-12);
            last = s.distance;
        }
        assert!(smoothed_cutoff(&g, &[1], 0.2, 3, 0.1).is_err());
    }
}

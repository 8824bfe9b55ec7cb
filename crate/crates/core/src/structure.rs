//! Chang-type covers of large spectra, global and local.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::bohr::{
    annihilator_class, bohr_set, find_regular_or_best, in_class, local_norm, nest_delta,
    smooth_parts, width_floor, BohrSet, RadiusProfile, RegularBohrSet,
};
use crate::config::Constants;
use crate::dissociation::{greedy_s_dissociated, is_dissociated, max_dissociated_subset, spans_with};
use crate::error::{Error, Result};
use crate::fourier::{fourier, weighted_transform, GroupFunction, GroupMeasure, Norm, Spectrum, C64};
use crate::group::{Character, Group};
use crate::riesz::{aux_measure, riesz_product};
use crate::spectra::{above, large_spectrum, SpectrumThreshold, ThresholdKind, TIE_SLACK};

/// A dissociated cover of a large spectrum.
#[derive(Clone, Debug, Serialize)]
pub struct CoverResult {
    pub lambda: Vec<Character>,
    pub spectrum: Vec<Character>,
    /// The budget without its constant, e.g. `eps^-1 (1 + ln A_f)`.
    pub scale: f64,
    /// `|Lambda| / scale`.
    pub measured_constant: f64,
    pub ceiling: f64,
    pub contained: bool,
}

fn finish_cover(
    group: &Group,
    spectrum: Vec<Character>,
    scale: f64,
    ceiling: f64,
    cap: usize,
) -> Result<CoverResult> {
    let lambda = max_dissociated_subset(group, &spectrum, &[0], cap)?;
    let contained = spans_with(group, &lambda, &[0], &spectrum);
    if !contained {
        return Err(Error::Verification("spectrum escaped the span of the cover".into()));
    }
    let measured = lambda.len() as f64 / scale;
    if measured > ceiling {
        return Err(Error::Verification(format!(
            "cover constant {measured} exceeds the ceiling {ceiling}"
        )));
    }
    Ok(CoverResult {
        lambda,
        spectrum,
        scale,
        measured_constant: measured,
        ceiling,
        contained,
    })
}

/// Dissociated cover of the `L^1`-relative spectrum.
pub fn chang_cover(f: &GroupFunction, epsilon: f64, constants: &Constants) -> Result<CoverResult> {
    let t = SpectrumThreshold::new(ThresholdKind::L1, epsilon)?;
    let spectrum = large_spectrum(f, t)?;
    let ratio = f.norm(Norm::L2) / f.norm(Norm::L1);
    let scale = (1.0 + ratio.ln()) / (epsilon * epsilon);
    finish_cover(&f.group, spectrum, scale, constants.c_chang, constants.dissociation_cap)
}

/// Dissociated cover of the `L^inf`-relative spectrum.
pub fn ag_cover(f: &GroupFunction, epsilon: f64, constants: &Constants) -> Result<CoverResult> {
    let t = SpectrumThreshold::new(ThresholdKind::Linf, epsilon)?;
    let spectrum = large_spectrum(f, t)?;
    let scale = (1.0 + f.a_ratio()?.ln()) / epsilon;
    finish_cover(&f.group, spectrum, scale, constants.c_ag, constants.dissociation_cap)
}

/// Both sides of the inner-product argument, evaluated.
#[derive(Clone, Debug, Default, Serialize)]
pub struct CertificationLedger {
    pub eta: f64,
    pub lower: f64,
    /// `|<f, mu>|`.
    pub inner: f64,
    /// Gap between the Plancherel and pointwise evaluations of the pairing.
    pub pairing_defect: f64,
    pub upper: f64,
    /// `c_aux ||f||_inf (1 + log2 1/eta)`.
    pub theoretical_upper: f64,
    pub measure_norm: f64,
    /// `(gamma, sum_lambda |q^(lambda)| |beta~^(lambda - gamma)|)` per probe.
    pub chain: Vec<(Character, f64)>,
    pub measured_constant: f64,
    pub holds: bool,
}

const SLACK: f64 = 1e-9;

fn sandwich_holds(lower: f64, inner: f64, upper: f64) -> bool {
    lower <= inner + SLACK * (1.0 + inner.abs()) && inner <= upper + SLACK * (1.0 + upper.abs())
}

fn unit_phases(coeffs: &[C64]) -> Vec<C64> {
    coeffs
        .iter()
        .map(|c| if c.norm() > 0.0 { c / c.norm() } else { C64::new(1.0, 0.0) })
        .collect()
}

/// Evaluates the inner-product argument for a dissociated `Lambda` inside
/// the `eps`-`L^inf` spectrum, with `eta = 1/A_f`.
pub fn dissprop_certify(
    f: &GroupFunction,
    lambda: &[Character],
    epsilon: f64,
    constants: &Constants,
) -> Result<CertificationLedger> {
    let eta = 1.0 / f.a_ratio()?;
    dissprop_certify_with_eta(f, lambda, epsilon, eta, constants)
}

pub fn dissprop_certify_with_eta(
    f: &GroupFunction,
    lambda: &[Character],
    epsilon: f64,
    eta: f64,
    constants: &Constants,
) -> Result<CertificationLedger> {
    SpectrumThreshold::new(ThresholdKind::Linf, epsilon)?;
    let g = &f.group;
    let s = fourier(f);
    let sup = f.norm(Norm::Linf);
    let a_norm = s.l1();
    let level = epsilon * sup * (1.0 - TIE_SLACK);
    if let Some(&bad) = lambda.iter().find(|&&l| s.coeffs[l].norm() < level) {
        return Err(Error::InvalidParameter(format!(
            "character {} is outside the large spectrum",
            g.format_element(bad)
        )));
    }
    let check = is_dissociated(g, lambda, constants.dissociation_cap)?;
    if !check.dissociated {
        return Err(Error::NotDissociated {
            witness: check.witness.unwrap_or_default(),
        });
    }
    let lower = lambda.len() as f64 * epsilon * sup - eta * a_norm;
    let theoretical_upper = constants.c_aux * sup * (1.0 + (1.0 / eta).log2());
    if lambda.is_empty() {
        return Ok(CertificationLedger {
            eta,
            lower,
            theoretical_upper,
            holds: lower <= SLACK,
            ..Default::default()
        });
    }
    let coeffs: Vec<C64> = lambda.iter().map(|&l| s.coeffs[l]).collect();
    let omega = unit_phases(&coeffs);
    let mu = aux_measure(g, lambda, &omega, eta, constants)?;
    let mu_hat = mu.transform();
    let planch: C64 = s
        .coeffs
        .iter()
        .zip(&mu_hat.coeffs)
        .map(|(a, b)| a * b.conj())
        .sum();
    let direct: C64 = f
        .values
        .iter()
        .zip(&mu.weights)
        .map(|(a, b)| a * b.conj())
        .sum();
    let norm = mu.tv_norm();
    let inner = planch.norm();
    let upper = sup * norm;
    let holds = sandwich_holds(lower, inner, upper)
        && norm <= constants.c_aux * (1.0 + (1.0 / eta).log2());
    let scale = (1.0 + (a_norm / sup).ln()) / epsilon;
    Ok(CertificationLedger {
        eta,
        lower,
        inner,
        pairing_defect: (planch - direct).norm(),
        upper,
        theoretical_upper,
        measure_norm: norm,
        chain: Vec::new(),
        measured_constant: lambda.len() as f64 / scale,
        holds,
    })
}

/// Output of the local cover.
#[derive(Clone, Debug, Serialize)]
pub struct LocalCover {
    pub lambda: Vec<Character>,
    /// The local spectrum that had to be covered.
    pub spectrum: Vec<Character>,
    pub a_ratio: f64,
    pub local_sup: f64,
    /// Width of the narrow smoothing set.
    pub delta_inner: f64,
    pub delta_prime: f64,
    pub kappa: f64,
    pub smoothing_power: usize,
    pub smoothing_distance: f64,
    pub s_size: usize,
    pub limit: usize,
    pub capped: bool,
    pub spanned: bool,
    pub class_inclusion: bool,
    pub regularity_certified: bool,
    /// `|Lambda| eps / (1 + ln A_f)`.
    pub measured_constant: f64,
    /// `eps^2 eta delta / (d^2 (1 + ln A_f))`, for comparison with `delta_prime`.
    pub nominal_width: f64,
    pub ledger: CertificationLedger,
}

fn symmetrize(group: &Group, set: &mut Vec<Character>) {
    let extra: Vec<Character> = set.iter().map(|&s| group.neg(s)).collect();
    set.extend(extra);
    set.sort_unstable();
    set.dedup();
}

fn probes(group: &Group, lambda: &[Character], count: usize, seed: u64) -> Vec<Character> {
    let mut out: Vec<Character> = Vec::with_capacity(count);
    for &c in lambda.iter().chain(std::iter::once(&0)) {
        if out.len() < count && !out.contains(&c) {
            out.push(c);
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = group.order();
    while out.len() < count.min(n) {
        let c = rng.gen_range(0..n);
        if !out.contains(&c) {
            out.push(c);
        }
    }
    out
}

/// `sum_xi |q^(xi)| |b^(xi - gamma)|`.
pub fn chain_value(group: &Group, q_hat: &Spectrum, b_hat: &Spectrum, gamma: Character) -> f64 {
    q_hat
        .coeffs
        .iter()
        .enumerate()
        .filter(|(_, c)| c.norm() > 0.0)
        .map(|(xi, c)| c.norm() * b_hat.coeffs[group.sub(xi, gamma)].norm())
        .sum()
}

/// Local cover around 0: a small `S`-dissociated `Lambda` and a width
/// `delta'` such that every character of the local `eps`-spectrum of `f`
/// on `B` is within `eta` of 1 on `B(Gamma ∪ Lambda, delta')`.
pub fn local_ag_cover(
    f: &GroupFunction,
    b: &RegularBohrSet,
    epsilon: f64,
    eta: f64,
    constants: &Constants,
) -> Result<LocalCover> {
    SpectrumThreshold::new(ThresholdKind::LocalLinf, epsilon)?;
    if !(eta > 0.0 && eta <= 1.0) {
        return Err(Error::InvalidParameter(format!("eta {eta} not in (0,1]")));
    }
    let g = &f.group;
    if *g != b.bohr.group {
        return Err(Error::GroupMismatch);
    }
    let base = &b.bohr;
    let gamma = base.gamma.clone();
    let d = gamma.len() as f64;
    let delta = base.delta;
    let local_sup = local_norm(f, 0, base, f64::INFINITY)?;
    if local_sup == 0.0 {
        return Err(Error::Degenerate("f vanishes on the Bohr set".into()));
    }
    let a_norm = f.norm(Norm::A);
    let a_ratio = a_norm / local_sup;
    let beta = base.cutoff();
    let local = weighted_transform(f, &beta)?;
    let spectrum = above(&local, epsilon * local_sup);
    let limit = (constants.c_local / epsilon * (1.0 + a_ratio.ln())).ceil() as usize + 1;
    let l = 2 * limit;

    // smoothing: shrink kappa until the smoothed cutoff is eps/2-close
    let profile = RadiusProfile::new(g, &gamma)?;
    let floor = width_floor(g);
    let mut kappa = (epsilon / (2.0 * d)).min(1.0);
    let (inner_set, smooth) = loop {
        let inner = find_regular_or_best(g, &gamma, kappa * delta / l as f64, constants)?;
        let outer = profile.bohr_set((1.0 - kappa) * delta)?;
        let smooth = smooth_parts(base, &outer, &inner.bohr, l, kappa)?;
        if smooth.distance <= epsilon / 2.0 {
            break (inner, smooth);
        }
        // below the floor the inner factor is {0}; only the outer one still moves
        if kappa * delta <= floor {
            return Err(Error::WidthUnderflow(
                "smoothed cutoff never came close to the Bohr cutoff".into(),
            ));
        }
        kappa /= 2.0;
    };
    let inner_hat = inner_set.bohr.cutoff().transform();
    let mut s = above(&inner_hat, 1.0 / 3.0);
    symmetrize(g, &mut s);
    let (lambda, capped) = greedy_s_dissociated(g, &spectrum, &s, limit)?;
    let spanned = spans_with(g, &lambda, &s, &spectrum);

    let ledger = local_certify(f, &lambda, &smooth.measure, &smooth.transform, local_sup, constants)?;

    // width: Lambda-part via the triangle inequality, S-part via nesting
    let nested = nest_delta(g, &gamma, inner_set.bohr.delta, 1.0 / 3.0, eta / 2.0)?;
    let triangle = eta / (4.0 * std::f64::consts::PI * lambda.len().max(1) as f64);
    let mut wide: Vec<Character> = gamma.clone();
    wide.extend(lambda.iter().copied());
    let wide_profile = RadiusProfile::new(g, &wide)?;
    let mut delta_prime = triangle.min(nested).max(floor);
    let class_inclusion = loop {
        let members = wide_profile.members(delta_prime);
        if spectrum.iter().all(|&c| in_class(g, c, &members, eta)) {
            break true;
        }
        if delta_prime <= floor {
            return Err(Error::WidthUnderflow(
                "local spectrum is not inside the annihilator class at any width".into(),
            ));
        }
        delta_prime = (delta_prime / 2.0).max(floor);
    };
    let scale = (1.0 + a_ratio.ln()) / epsilon;
    Ok(LocalCover {
        measured_constant: lambda.len() as f64 / scale,
        nominal_width: epsilon * epsilon * eta * delta / (d * d * (1.0 + a_ratio.ln())),
        lambda,
        spectrum,
        a_ratio,
        local_sup,
        delta_inner: inner_set.bohr.delta,
        delta_prime,
        kappa,
        smoothing_power: l,
        smoothing_distance: smooth.distance,
        s_size: s.len(),
        limit,
        capped,
        spanned,
        class_inclusion,
        regularity_certified: b.certified && inner_set.certified,
        ledger,
    })
}

/// The Riesz-product version of the inner-product argument on `f dbeta~`.
fn local_certify(
    f: &GroupFunction,
    lambda: &[Character],
    smooth: &GroupMeasure,
    smooth_hat: &Spectrum,
    local_sup: f64,
    constants: &Constants,
) -> Result<CertificationLedger> {
    let g = &f.group;
    let ones = vec![C64::new(1.0, 0.0); lambda.len()];
    let q = riesz_product(g, lambda, &ones, 1.0)?;
    let q_hat = fourier(&q);
    let q_norm = q.norm(Norm::L1);
    let q_min = lambda.iter().map(|&l| q_hat.coeffs[l].re).fold(f64::INFINITY, f64::min);
    if (q_norm - 1.0).abs() > 1e-9 || q.values.iter().any(|v| v.re < -1e-12) {
        return Err(Error::Verification(format!("Riesz product has L1 norm {q_norm}")));
    }
    if !lambda.is_empty() && q_min < 0.5 - 1e-12 {
        return Err(Error::Verification(format!("Riesz coefficient {q_min} below 1/2")));
    }
    let chain: Vec<(Character, f64)> = probes(g, lambda, constants.crty_probes, constants.probe_seed)
        .into_iter()
        .map(|c| (c, chain_value(g, &q_hat, smooth_hat, c)))
        .collect();
    let a_norm = f.norm(Norm::A);
    // local_sup <= ||f||_A up to rounding
    let eta = (local_sup / a_norm).min(1.0);
    let weighted = GroupFunction {
        group: g.clone(),
        values: f
            .values
            .iter()
            .zip(&smooth.weights)
            .map(|(v, w)| v * w.re)
            .collect(),
    };
    // transform of the measure f dbeta~
    let n = g.order() as f64;
    let fb: Vec<C64> = fourier(&weighted).coeffs.iter().map(|c| c * n).collect();
    let spectral_mass: f64 = lambda.iter().map(|&l| fb[l].norm()).sum();
    let lower = 0.5 * spectral_mass - 2.0 * eta * a_norm;
    let chain_max = chain.iter().map(|c| c.1).fold(0.0, f64::max);
    let chain_zero = chain.iter().find(|c| c.0 == 0).map_or(1.0, |c| c.1);
    let (mu, norm) = if lambda.is_empty() {
        (GroupMeasure::point_mass(g, 0, C64::new(0.0, 0.0)), 0.0)
    } else {
        let omega = unit_phases(&lambda.iter().map(|&l| fb[l]).collect::<Vec<_>>());
        let mu = aux_measure(g, lambda, &omega, eta, constants)?;
        let norm = mu.tv_norm();
        (mu, norm)
    };
    let nu_hat: Vec<C64> = mu
        .transform()
        .coeffs
        .iter()
        .zip(&q_hat.coeffs)
        .map(|(a, b)| a * b)
        .collect();
    let planch: C64 = fb.iter().zip(&nu_hat).map(|(a, b)| a * b.conj()).sum::<C64>();
    // pointwise: sum_x f(x) beta~(x) conj((mu * q)(x))
    let nu_density = crate::fourier::inverse(&Spectrum {
        group: g.clone(),
        coeffs: nu_hat,
    });
    let direct: C64 = f
        .values
        .iter()
        .zip(&smooth.weights)
        .zip(&nu_density.values)
        .map(|((v, w), d)| v * w.re * d.conj())
        .sum();
    let inner = planch.norm();
    let upper = local_sup * norm * chain_zero;
    let holds = sandwich_holds(lower, inner, upper) && chain_max <= 2.0 + 1e-9;
    if !holds {
        return Err(Error::Verification(format!(
            "local certification failed: lower {lower}, inner {inner}, upper {upper}, chain {chain_max}"
        )));
    }
    Ok(CertificationLedger {
        eta,
        lower,
        inner,
        pairing_defect: (planch - direct).norm(),
        upper,
        theoretical_upper: local_sup * constants.c_aux * 2.0 * (1.0 + (1.0 / eta).log2()),
        measure_norm: norm,
        chain,
        measured_constant: 0.0,
        holds,
    })
}

/// Linear span over F2 with membership and reduction.
#[derive(Clone, Debug, Default)]
pub struct XorBasis {
    rows: Vec<usize>,
}

impl XorBasis {
    pub fn new() -> Self {
        XorBasis::default()
    }

    pub fn reduce(&self, mut v: usize) -> usize {
        for &r in &self.rows {
            v = v.min(v ^ r);
        }
        v
    }

    /// Adds `v`; returns whether the span grew.
    pub fn insert(&mut self, v: usize) -> bool {
        let r = self.reduce(v);
        if r == 0 {
            return false;
        }
        self.rows.push(r);
        self.rows.sort_unstable_by(|a, b| b.cmp(a));
        true
    }

    pub fn contains(&self, v: usize) -> bool {
        self.reduce(v) == 0
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    /// Index of `x` among the `2^rank` cosets of the annihilator.
    pub fn syndrome(&self, x: usize) -> usize {
        self.rows
            .iter()
            .enumerate()
            .fold(0, |acc, (i, &r)| acc | (((r & x).count_ones() as usize & 1) << i))
    }
}

pub fn xor_basis(set: &[Character]) -> XorBasis {
    let mut b = XorBasis::new();
    for &c in set {
        b.insert(c);
    }
    b
}

#[derive(Clone, Debug, Serialize)]
pub struct ModelCover {
    pub lambda: Vec<Character>,
    pub spectrum: Vec<Character>,
    pub local_sup: f64,
    pub a_local: f64,
    /// `eps^-1 A` in plain mode, `eps^-1 (1 + ln A)` in refined mode.
    pub scale: f64,
    pub measured_constant: f64,
    pub contained: bool,
}

/// Annihilator `Gamma^perp` in F2^n.
pub fn annihilator(group: &Group, gamma: &[Character]) -> Result<BohrSet> {
    if gamma.is_empty() {
        return bohr_set(group, &[0], 0.25);
    }
    bohr_set(group, gamma, 0.25)
}

/// Model local cover on `V = Gamma^perp`. Plain mode returns one
/// representative per coset of `span Gamma` met by the local spectrum;
/// refined mode returns an independent set modulo `span Gamma`.
pub fn model_local_cover(
    f: &GroupFunction,
    gamma: &[Character],
    epsilon: f64,
    refined: bool,
) -> Result<ModelCover> {
    let g = &f.group;
    if !g.is_boolean() {
        return Err(Error::InvalidParameter("model covers need F2^n".into()));
    }
    SpectrumThreshold::new(ThresholdKind::LocalLinf, epsilon)?;
    let v = annihilator(g, gamma)?;
    let local_sup = local_norm(f, 0, &v, f64::INFINITY)?;
    if local_sup == 0.0 {
        return Err(Error::Degenerate("f vanishes on the subgroup".into()));
    }
    let local = weighted_transform(f, &v.cutoff())?;
    let spectrum = above(&local, epsilon * local_sup);
    let a_local = f.norm(Norm::A) / local_sup;
    let base = xor_basis(gamma);
    let mut lambda = Vec::new();
    if refined {
        let mut span = base.clone();
        for &c in &spectrum {
            if span.insert(c) {
                lambda.push(c);
            }
        }
    } else {
        let mut seen = std::collections::BTreeSet::new();
        for &c in &spectrum {
            if seen.insert(base.reduce(c)) && !base.contains(c) {
                lambda.push(c);
            }
        }
    }
    let mut all = gamma.to_vec();
    all.extend(lambda.iter().copied());
    let full = xor_basis(&all);
    let contained = spectrum.iter().all(|&c| full.contains(c));
    if !contained {
        return Err(Error::Verification("local spectrum escaped the span".into()));
    }
    let scale = if refined {
        (1.0 + a_local.ln()) / epsilon
    } else {
        a_local / epsilon
    };
    let measured = lambda.len() as f64 / scale;
    if !refined && measured > 1.0 + 1e-9 {
        return Err(Error::Verification(format!(
            "plain model cover has {} characters, bound {scale}",
            lambda.len()
        )));
    }
    Ok(ModelCover {
        lambda,
        spectrum,
        local_sup,
        a_local,
        scale,
        measured_constant: measured,
        contained,
    })
}

/// Checks `spectrum ⊆ annihilator_class(B(gamma, delta), eta)`.
pub fn class_contains(
    group: &Group,
    gamma: &[Character],
    delta: f64,
    eta: f64,
    spectrum: &[Character],
) -> Result<bool> {
    let b = bohr_set(group, gamma, delta)?;
    let class = annihilator_class(&b, eta);
    Ok(spectrum.iter().all(|c| class.binary_search(c).is_ok()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bohr::find_regular;

    #[test]
    fn chang_on_point_mass() {
        let g = Group::cube(6).unwrap();
        let f = GroupFunction::indicator(&g, &[0]);
        let c = chang_cover(&f, 1.0, &Constants::default()).unwrap();
        assert_eq!(c.lambda.len(), 6);
        let h = GroupFunction::character(&g, 13);
        assert_eq!(chang_cover(&h, 0.5, &Constants::default()).unwrap().lambda, vec![13]);
    }

    #[test]
    fn ag_on_sum_of_characters() {
        let g = Group::cyclic(1000).unwrap();
        let chars = [1, 3, 9, 27];
        let f = chars.iter().fold(GroupFunction::constant(&g, C64::new(0.0, 0.0)), |acc, &c| {
            acc.add(&GroupFunction::character(&g, c)).unwrap()
        });
        let c = ag_cover(&f, 1.0 / 8.0, &Constants::default()).unwrap();
        for ch in chars {
            assert!(c.lambda.contains(&ch));
        }
        let ledger = dissprop_certify(&f, &c.lambda, 1.0 / 8.0, &Constants::default()).unwrap();
        assert!(ledger.holds, "{ledger:?}");
        assert!(ledger.pairing_defect < 1e-9);
    }

    #[test]
    fn constant_has_empty_cover() {
        let g = Group::cyclic(9).unwrap();
        let f = GroupFunction::constant(&g, C64::new(2.0, 0.0));
        let c = ag_cover(&f, 0.5, &Constants::default()).unwrap();
        assert!(c.lambda.is_empty());
        assert_eq!(c.spectrum, vec![0]);
        let ledger = dissprop_certify(&f, &[], 0.5, &Constants::default()).unwrap();
        assert!(ledger.lower <= 0.0 && ledger.holds);
    }

    #[test]
    fn xor_basis_syndromes() {
        let b = xor_basis(&[0b110, 0b011, 0b101]);
        assert_eq!(b.rank(), 2);
        assert!(b.contains(0b101));
        assert!(!b.contains(0b001));
        let mut seen = std::collections::BTreeSet::new();
        for x in 0..8 {
            seen.insert(b.syndrome(x));
        }
        assert_eq!(seen.len(), 4);
    }

    #[test]
    fn model_cover_of_subspace_indicator() {
        let g = Group::cube(6).unwrap();
        // W = {x : x_0 = x_1 = 0}, so the spectrum of 1_W is W^perp
        let w: Vec<usize> = (0..64).filter(|x| x & 0b110000 == 0).collect();
        let f = GroupFunction::indicator(&g, &w);
        for refined in [false, true] {
            let c = model_local_cover(&f, &[], 0.25, refined).unwrap();
            assert!(c.lambda.iter().all(|&l| l & 0b001111 == 0));
            assert!(c.contained);
        }
    }

    #[test]
    fn global_local_cover() {
        let g = Group::cyclic(257).unwrap();
        let a: Vec<usize> = (0..64).collect();
        let f = GroupFunction::indicator(&g, &a);
        let b = find_regular(&g, &[0], 1.0, &Constants::default()).unwrap();
        let c = local_ag_cover(&f, &b, 0.25, 0.5, &Constants::default()).unwrap();
        assert!(c.class_inclusion && c.ledger.holds);
        assert!(c.ledger.chain.iter().all(|x| x.1 <= 2.0 + 1e-9));
    }
}

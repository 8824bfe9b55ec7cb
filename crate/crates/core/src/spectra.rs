//! Large spectra, global and local.

use crate::error::{Error, Result};
use crate::fourier::{fourier, weighted_transform, GroupFunction, GroupMeasure, Norm, Spectrum};
use crate::group::Character;

/// Which norm the threshold is relative to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ThresholdKind {
    /// `eps * ||f||_1`; cardinality at most `eps^-2 (||f||_2/||f||_1)^2`.
    L1,
    /// `eps * ||f||_inf`; cardinality at most `eps^-1 A_f`.
    Linf,
    /// `eps * ||f||_{L^1(beta)}`.
    LocalL1,
    /// `eps * ||f||_{L^inf(supp beta)}`.
    LocalLinf,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SpectrumThreshold {
    pub kind: ThresholdKind,
    pub epsilon: f64,
}

impl SpectrumThreshold {
    pub fn new(kind: ThresholdKind, epsilon: f64) -> Result<Self> {
        if !(epsilon > 0.0 && epsilon <= 1.0) {
            return Err(Error::InvalidParameter(format!("epsilon {epsilon} not in (0,1]")));
        }
        Ok(SpectrumThreshold { kind, epsilon })
    }
}

/// Relative slack used when comparing a coefficient against a threshold.
pub const TIE_SLACK: f64 = 1e-9;

/// Characters with `|s(gamma)| >= level`, ties included, sorted by
/// decreasing modulus and then by index.
pub fn above(s: &Spectrum, level: f64) -> Vec<Character> {
    let cut = level * (1.0 - TIE_SLACK);
    let mut out: Vec<Character> = (0..s.coeffs.len())
        .filter(|&g| s.coeffs[g].norm() >= cut)
        .collect();
    sort_by_magnitude(s, &mut out);
    out
}

/// Descending `|s(gamma)|`, index as tiebreak.
pub fn sort_by_magnitude(s: &Spectrum, set: &mut [Character]) {
    set.sort_by(|&a, &b| {
        s.coeffs[b]
            .norm()
            .total_cmp(&s.coeffs[a].norm())
            .then(a.cmp(&b))
    });
}

/// `{gamma : |f^(gamma)| >= eps * ref}` with the reference chosen by `t.kind`.
///
/// The cardinality inequality for the kind is checked before returning.
pub fn large_spectrum(f: &GroupFunction, t: SpectrumThreshold) -> Result<Vec<Character>> {
    if f.is_zero() {
        return Err(Error::Degenerate("large spectrum of the zero function".into()));
    }
    let s = fourier(f);
    let (reference, bound) = match t.kind {
        ThresholdKind::L1 | ThresholdKind::LocalL1 => {
            let l1 = f.norm(Norm::L1);
            let l2 = f.norm(Norm::L2);
            (l1, (l2 / l1).powi(2) / (t.epsilon * t.epsilon))
        }
        ThresholdKind::Linf | ThresholdKind::LocalLinf => {
            let sup = f.norm(Norm::Linf);
            (sup, s.l1() / sup / t.epsilon)
        }
    };
    let set = above(&s, t.epsilon * reference);
    // Each member carries at least (1 - slack) of the threshold, so the
    // counting bound inherits the same slack.
    let allowed = bound / (1.0 - TIE_SLACK) * (1.0 + TIE_SLACK);
    if set.len() as f64 > allowed {
        return Err(Error::Verification(format!(
            "large spectrum has {} members, bound is {bound}",
            set.len()
        )));
    }
    Ok(set)
}

/// Reference norm of `f` relative to a probability cutoff.
pub fn local_reference(f: &GroupFunction, cutoff: &GroupMeasure, kind: ThresholdKind) -> f64 {
    match kind {
        ThresholdKind::L1 => f.norm(Norm::L1),
        ThresholdKind::Linf => f.norm(Norm::Linf),
        ThresholdKind::LocalL1 => f
            .values
            .iter()
            .zip(&cutoff.weights)
            .map(|(v, w)| v.norm() * w.re)
            .sum(),
        ThresholdKind::LocalLinf => f
            .values
            .iter()
            .zip(&cutoff.weights)
            .filter(|(_, w)| w.norm() > 0.0)
            .fold(0.0, |m, (v, _)| m.max(v.norm())),
    }
}

/// `{gamma : |(f dbeta)^(gamma)| >= eps * reference}`.
pub fn local_large_spectrum(
    f: &GroupFunction,
    cutoff: &GroupMeasure,
    t: SpectrumThreshold,
    reference: f64,
) -> Result<Vec<Character>> {
    if !cutoff.is_probability(1e-9) {
        return Err(Error::InvalidParameter("cutoff is not a probability measure".into()));
    }
    if !(reference > 0.0) {
        return Err(Error::InvalidParameter("reference value must be positive".into()));
    }
    let s = weighted_transform(f, cutoff)?;
    Ok(above(&s, t.epsilon * reference))
}

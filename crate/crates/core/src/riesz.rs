//! Riesz products and auxiliary measures.
//!
//! For a character set `Lambda` and weights `omega` (extended to inverses by
//! conjugation) the Riesz product is
//! `p_omega = prod_l (1 + (omega(l) l + conj(omega(l)) conj(l)) / 2) = prod_l (1 + Re(omega(l) l))`.
//! On the boolean cube with real weights this is `prod_l (1 + omega(l) l)`.

use num_complex::Complex64;

use crate::dissociation::{evaluate, is_dissociated, SignVector};
use crate::error::{Error, Result};
use crate::fourier::{fourier, GroupFunction, GroupMeasure, Spectrum, C64};
use crate::group::{Character, Group};

const ZERO: C64 = Complex64::new(0.0, 0.0);

/// An atomic signed measure on `[-1, 1]`.
#[derive(Clone, Debug, PartialEq)]
pub struct IntervalMeasure {
    /// `(node, weight)` pairs.
    pub atoms: Vec<(f64, f64)>,
}

impl IntervalMeasure {
    pub fn point_mass(t: f64) -> Self {
        IntervalMeasure {
            atoms: vec![(t, 1.0)],
        }
    }

    /// `int t^k dtau`.
    pub fn moment(&self, k: u32) -> f64 {
        self.atoms.iter().map(|&(t, w)| w * t.powi(k as i32)).sum()
    }

    pub fn norm(&self) -> f64 {
        self.atoms.iter().map(|&(_, w)| w.abs()).sum()
    }
}

/// The odd measure `tau_{2l}` on `[-1/2, 1/2]`.
///
/// Atoms sit at the `2l` extrema `x_j = cos(j pi / (2l-1)) / 2` of the scaled
/// Chebyshev polynomial of degree `2l-1`, and the weights are the derivatives
/// at 0 of the Lagrange basis on those nodes. Integrating a polynomial of
/// degree below `2l` therefore returns its derivative at 0, which gives
/// moment 1 equal to 1 and the other low moments zero; symmetry of the nodes
/// makes the measure odd and kills moment `2l` as well.
pub fn make_tau(l: usize) -> Result<IntervalMeasure> {
    if !(2..=16).contains(&l) {
        return Err(Error::InvalidParameter(format!("tau needs 2 <= l <= 16, got {l}")));
    }
    let deg = 2 * l - 1;
    let nodes: Vec<f64> = (0..=deg)
        .map(|j| 0.5 * (std::f64::consts::PI * j as f64 / deg as f64).cos())
        .collect();
    // barycentric weights for Chebyshev extrema
    let bary: Vec<f64> = (0..=deg)
        .map(|j| {
            let s = if j % 2 == 0 { 1.0 } else { -1.0 };
            if j == 0 || j == deg {
                s / 2.0
            } else {
                s
            }
        })
        .collect();
    // L_j = N_j / D with N_j = b_j / (x - x_j), D = sum_k b_k / (x - x_k)
    let d: f64 = bary.iter().zip(&nodes).map(|(b, x)| b / (0.0 - x)).sum();
    let d_prime: f64 = bary.iter().zip(&nodes).map(|(b, x)| -b / (x * x)).sum();
    let atoms = bary
        .iter()
        .zip(&nodes)
        .map(|(&b, &x)| {
            let n = b / (0.0 - x);
            let n_prime = -b / (x * x);
            (x, (n_prime * d - n * d_prime) / (d * d))
        })
        .collect();
    Ok(IntervalMeasure { atoms })
}

/// Checks the four defining properties of `tau_{2l}`; moments are checked up to `k_max`.
pub fn check_tau(tau: &IntervalMeasure, l: usize, k_max: u32, tol: f64) -> Result<()> {
    let fail = |what: String| Err(Error::Verification(format!("tau_{}: {what}", 2 * l)));
    if (tau.moment(1) - 1.0).abs() > tol {
        return fail(format!("moment 1 is {}", tau.moment(1)));
    }
    for k in (0..=2 * l as u32).filter(|&k| k != 1) {
        if tau.moment(k).abs() > tol {
            return fail(format!("moment {k} is {}", tau.moment(k)));
        }
    }
    if tau.norm() > 2.0 * (2 * l - 1) as f64 + tol {
        return fail(format!("norm {} too large", tau.norm()));
    }
    for k in 0..=k_max {
        let bound = 2f64.powi(1 - k as i32);
        if tau.moment(k).abs() > bound + tol {
            return fail(format!("moment {k} exceeds 2^(1-k)"));
        }
    }
    if tau.atoms.iter().any(|&(t, _)| t.abs() > 0.5 + 1e-15) {
        return fail("atom outside [-1/2, 1/2]".into());
    }
    Ok(())
}

/// `l = max(2, ceil(log2(1/eta) / 2))`, the order used by the model construction.
pub fn model_order(eta: f64) -> usize {
    let l = (0.5 * (1.0 / eta).log2()).ceil();
    (l.max(2.0)) as usize
}

/// Smallest `l >= 2` with `2^(3 - 2l) <= eta`.
pub fn nearly_order(eta: f64) -> usize {
    let l = (0.5 * (3.0 + (1.0 / eta).log2())).ceil();
    (l.max(2.0)) as usize
}

fn check_eta(eta: f64) -> Result<()> {
    if eta > 0.0 && eta <= 1.0 {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!("eta {eta} not in (0,1]")))
    }
}

/// Validates that `omega` is bounded by 1 and extends hermitian-ly.
pub fn check_weights(group: &Group, lambda: &[Character], omega: &[C64], tol: f64) -> Result<()> {
    if lambda.len() != omega.len() {
        return Err(Error::InvalidParameter("weights must align with the character set".into()));
    }
    for (i, (&l, w)) in lambda.iter().zip(omega).enumerate() {
        if w.norm() > 1.0 + tol {
            return Err(Error::InvalidParameter(format!("|omega| = {} exceeds 1", w.norm())));
        }
        if group.add(l, l) == 0 && w.im.abs() > tol {
            return Err(Error::InvalidParameter(
                "weights on self-inverse characters must be real".into(),
            ));
        }
        for (&m, v) in lambda[i + 1..].iter().zip(&omega[i + 1..]) {
            if m == l && (v - w).norm() > tol {
                return Err(Error::InvalidParameter("repeated character with two weights".into()));
            }
            if m == group.neg(l) && (v - w.conj()).norm() > tol {
                return Err(Error::InvalidParameter("weights are not hermitian".into()));
            }
        }
    }
    Ok(())
}

fn character_tables(group: &Group, lambda: &[Character]) -> Vec<GroupFunction> {
    lambda
        .iter()
        .map(|&l| GroupFunction::character(group, l))
        .collect()
}

/// Real parts `Re(omega(l) l(x))`, one row per character.
fn real_parts(tables: &[GroupFunction], omega: &[C64]) -> Vec<Vec<f64>> {
    tables
        .iter()
        .zip(omega)
        .map(|(t, w)| t.values.iter().map(|v| (w * v).re).collect())
        .collect()
}

fn product_from_rows(rows: &[Vec<f64>], t: f64, n: usize) -> Vec<f64> {
    let mut out = vec![1.0; n];
    for row in rows {
        for (o, r) in out.iter_mut().zip(row) {
            *o *= 1.0 + t * r;
        }
    }
    out
}

/// The Riesz product `p_{t omega}`.
pub fn riesz_product(
    group: &Group,
    lambda: &[Character],
    omega: &[C64],
    t: f64,
) -> Result<GroupFunction> {
    check_weights(group, lambda, omega, 1e-12)?;
    if t.abs() > 1.0 {
        return Err(Error::InvalidParameter(format!("scale {t} exceeds 1")));
    }
    let rows = real_parts(&character_tables(group, lambda), omega);
    let values = product_from_rows(&rows, t, group.order());
    GroupFunction::from_real(group.clone(), &values)
}

/// `int p_{t omega} dtau(t)`.
pub fn riesz_mixture(
    group: &Group,
    lambda: &[Character],
    omega: &[C64],
    tau: &IntervalMeasure,
) -> Result<GroupFunction> {
    check_weights(group, lambda, omega, 1e-12)?;
    if tau.atoms.iter().any(|&(t, _)| t.abs() > 1.0) {
        return Err(Error::InvalidParameter("interval measure leaves [-1, 1]".into()));
    }
    let rows = real_parts(&character_tables(group, lambda), omega);
    Ok(mixture_from_rows(group, &rows, tau))
}

fn mixture_from_rows(group: &Group, rows: &[Vec<f64>], tau: &IntervalMeasure) -> GroupFunction {
    let n = group.order();
    let mut acc = vec![0.0; n];
    for &(t, w) in &tau.atoms {
        let p = product_from_rows(rows, t, n);
        for (a, v) in acc.iter_mut().zip(p) {
            *a += w * v;
        }
    }
    GroupFunction {
        group: group.clone(),
        values: acc.into_iter().map(|v| C64::new(v, 0.0)).collect(),
    }
}

/// Coefficients indexed by sign vectors whose fibre sums give a transform.
#[derive(Clone, Debug)]
pub struct FormalTransform {
    pub lambda: Vec<Character>,
    pub entries: Vec<(SignVector, C64)>,
}

impl FormalTransform {
    /// `gamma -> sum_{m.Lambda = gamma} p~(m)`.
    pub fn realize(&self, group: &Group) -> Spectrum {
        let mut s = Spectrum::zeros(group);
        for (m, c) in &self.entries {
            s.coeffs[evaluate(group, &self.lambda, m)] += c;
        }
        s
    }

    pub fn get(&self, m: &[i8]) -> Option<C64> {
        self.entries.iter().find(|(k, _)| k == m).map(|(_, c)| *c)
    }
}

/// `p~(m) = moment(|m|) prod_{m_l != 0} omega(l^{m_l}) / 2`, with the
/// realization identity checked against the direct transform of the mixture.
pub fn formal_transform(
    group: &Group,
    lambda: &[Character],
    omega: &[C64],
    tau: &IntervalMeasure,
    cap: usize,
) -> Result<FormalTransform> {
    if lambda.len() > cap {
        return Err(Error::CapExceeded {
            what: "character set",
            size: lambda.len(),
            cap,
        });
    }
    check_weights(group, lambda, omega, 1e-12)?;
    let k = lambda.len();
    let total = 3usize.pow(k as u32);
    let mut entries = Vec::with_capacity(total);
    let mut m = vec![-1i8; k];
    for _ in 0..total {
        let mut c = C64::new(1.0, 0.0);
        let mut weight = 0;
        for (&s, w) in m.iter().zip(omega) {
            match s {
                1 => {
                    c *= w / 2.0;
                    weight += 1;
                }
                -1 => {
                    c *= w.conj() / 2.0;
                    weight += 1;
                }
                _ => {}
            }
        }
        entries.push((m.clone(), c * tau.moment(weight)));
        for v in m.iter_mut() {
            if *v < 1 {
                *v += 1;
                break;
            }
            *v = -1;
        }
    }
    let ft = FormalTransform {
        lambda: lambda.to_vec(),
        entries,
    };
    let direct = fourier(&riesz_mixture(group, lambda, omega, tau)?);
    let defect = ft.realize(group).max_abs_diff(&direct);
    if defect > 1e-9 {
        return Err(Error::Verification(format!("formal transform misses by {defect}")));
    }
    Ok(ft)
}

fn require_independent_involutions(group: &Group, lambda: &[Character], cap: usize) -> Result<()> {
    if lambda.iter().any(|&l| group.add(l, l) != 0 || l == 0) {
        return Err(Error::InvalidParameter(
            "the model construction needs characters of order 2".into(),
        ));
    }
    if !is_dissociated(group, lambda, cap)?.dissociated {
        return Err(Error::InvalidParameter("characters are not linearly independent".into()));
    }
    Ok(())
}

/// `mu = eta^-1 p_{eta omega}` for independent characters of order 2.
pub fn primitive_aux(
    group: &Group,
    lambda: &[Character],
    omega: &[f64],
    eta: f64,
    cap: usize,
) -> Result<GroupMeasure> {
    check_eta(eta)?;
    require_independent_involutions(group, lambda, cap)?;
    let w: Vec<C64> = omega.iter().map(|&v| C64::new(v, 0.0)).collect();
    let p = riesz_product(group, lambda, &w, eta)?;
    Ok(GroupMeasure::from_density(&p.scale(C64::new(1.0 / eta, 0.0))))
}

/// `mu = int p_{t omega} dtau_{2l}(t)` on the boolean cube.
pub fn aux_measure_model(
    group: &Group,
    lambda: &[Character],
    omega: &[f64],
    eta: f64,
    cap: usize,
) -> Result<GroupMeasure> {
    check_eta(eta)?;
    if !group.is_boolean() {
        return Err(Error::InvalidParameter("the model measure lives on F2^n".into()));
    }
    require_independent_involutions(group, lambda, cap)?;
    let tau = make_tau(model_order(eta))?;
    let w: Vec<C64> = omega.iter().map(|&v| C64::new(v, 0.0)).collect();
    Ok(GroupMeasure::from_density(&riesz_mixture(group, lambda, &w, &tau)?))
}

/// `f` with `f^ = omega` on `Lambda ∪ -Lambda` up to `2^-rounds`, `|f^| <= eta`
/// elsewhere and `||f||_1 <= 4 ||tau_{2l}||`.
///
/// Each round fits the current target with `2 int p_{t omega_k} dtau`, then
/// retargets at twice the residual; summing the rounds with weights
/// `2^-(k-1)` telescopes the residual away.
pub fn nearly_aux(
    group: &Group,
    lambda: &[Character],
    omega: &[C64],
    eta: f64,
    rounds: usize,
    cap: usize,
) -> Result<GroupFunction> {
    check_eta(eta)?;
    check_weights(group, lambda, omega, 1e-12)?;
    if let Some(&l) = lambda.iter().find(|&&l| group.element_order(l) < 3) {
        return Err(Error::InvalidParameter(format!(
            "character {} has order at most 2",
            group.format_element(l)
        )));
    }
    if !is_dissociated(group, lambda, cap)?.dissociated {
        return Err(Error::NotDissociated {
            witness: is_dissociated(group, lambda, cap)?.witness.unwrap_or_default(),
        });
    }
    let n = group.order();
    let tau = make_tau(nearly_order(eta))?;
    let tables = character_tables(group, lambda);
    let mut target: Vec<C64> = omega.to_vec();
    let mut acc = vec![0.0f64; n];
    let mut weight = 1.0;
    for _ in 0..rounds {
        if target.iter().all(|w| *w == ZERO) {
            break;
        }
        let rows = real_parts(&tables, &target);
        let piece = mixture_from_rows(group, &rows, &tau);
        let vals: Vec<f64> = piece.values.iter().map(|v| 2.0 * v.re).collect();
        for (a, v) in acc.iter_mut().zip(&vals) {
            *a += weight * v;
        }
        // coefficients of this round on Lambda, by direct summation
        let mut next = Vec::with_capacity(lambda.len());
        for (table, w) in tables.iter().zip(&target) {
            let coeff: C64 = vals
                .iter()
                .zip(&table.values)
                .map(|(v, c)| c.conj() * *v)
                .sum::<C64>()
                / n as f64;
            next.push(2.0 * (w - coeff));
        }
        if next.iter().any(|w| w.norm() > 1.0 + 1e-12) {
            return Err(Error::Verification(
                "correction weights left the unit disc".into(),
            ));
        }
        target = next
            .into_iter()
            .map(|w| if w.norm() > 1.0 { w / w.norm() } else { w })
            .collect();
        weight /= 2.0;
    }
    GroupFunction::from_real(group.clone(), &acc)
}

/// `G x Z/M`, the finite stand-in for `G x S^1`.
#[derive(Clone, Debug, PartialEq)]
pub struct LiftedGroup {
    pub base: Group,
    pub modulus: usize,
    pub group: Group,
}

impl LiftedGroup {
    pub fn new(base: &Group, modulus: usize) -> Result<Self> {
        if modulus < 3 {
            return Err(Error::InvalidParameter("lift modulus must be at least 3".into()));
        }
        let mut factors = base.factors().to_vec();
        factors.push(modulus);
        Ok(LiftedGroup {
            base: base.clone(),
            modulus,
            group: Group::with_cap(&factors, usize::MAX)?,
        })
    }

    /// `(gamma, z)` as a character of the lift.
    pub fn embed(&self, gamma: Character, z: usize) -> Character {
        gamma * self.modulus + z % self.modulus
    }

    /// The measure on G whose transform is `gamma -> f^(gamma, 1)`.
    pub fn push_down(&self, f: &GroupFunction) -> GroupMeasure {
        let m = self.modulus;
        let n = self.base.order();
        let twist: Vec<C64> = (0..m)
            .map(|z| crate::group::phase_to_unit(z as u64, m as u64).conj())
            .collect();
        let scale = 1.0 / (m * n) as f64;
        let weights = (0..n)
            .map(|x| {
                let row = &f.values[x * m..(x + 1) * m];
                row.iter().zip(&twist).map(|(v, t)| v * t).sum::<C64>() * scale
            })
            .collect();
        GroupMeasure {
            group: self.base.clone(),
            weights,
        }
    }
}

/// Auxiliary measure for a dissociated set in any finite group, built on
/// `G x Z/M` where the lifted characters `(l, 1)` have order at least 3.
pub fn aux_measure(
    group: &Group,
    lambda: &[Character],
    omega: &[C64],
    eta: f64,
    constants: &crate::config::Constants,
) -> Result<GroupMeasure> {
    check_eta(eta)?;
    if lambda.len() != omega.len() {
        return Err(Error::InvalidParameter("weights must align with the character set".into()));
    }
    if let Some(w) = omega.iter().find(|w| w.norm() > 1.0 + 1e-12) {
        return Err(Error::InvalidParameter(format!("|omega| = {} exceeds 1", w.norm())));
    }
    let check = is_dissociated(group, lambda, constants.dissociation_cap)?;
    if !check.dissociated {
        return Err(Error::NotDissociated {
            witness: check.witness.unwrap_or_default(),
        });
    }
    let lift = LiftedGroup::new(group, constants.lift_modulus)?;
    let lifted: Vec<Character> = lambda.iter().map(|&l| lift.embed(l, 1)).collect();
    let f = nearly_aux(
        &lift.group,
        &lifted,
        omega,
        eta,
        constants.nearly_rounds,
        constants.dissociation_cap,
    )?;
    Ok(lift.push_down(&f))
}

/// How well a measure interpolates `omega` on `Lambda`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AuxReport {
    pub interpolation_defect: f64,
    /// Largest `|mu^(gamma)|` off `Lambda` (and off 0 when `skip_zero`).
    pub max_leakage: f64,
    pub tv_norm: f64,
}

pub fn aux_report(
    mu: &GroupMeasure,
    lambda: &[Character],
    omega: &[C64],
    skip_zero: bool,
) -> AuxReport {
    let s = mu.transform();
    let mut on = vec![false; s.coeffs.len()];
    let mut defect: f64 = 0.0;
    for (&l, w) in lambda.iter().zip(omega) {
        on[l] = true;
        defect = defect.max((s.coeffs[l] - w).norm());
    }
    if skip_zero {
        on[0] = true;
    }
    let leak = s
        .coeffs
        .iter()
        .zip(&on)
        .filter(|(_, &o)| !o)
        .fold(0.0f64, |m, (c, _)| m.max(c.norm()));
    AuxReport {
        interpolation_defect: defect,
        max_leakage: leak,
        tv_norm: mu.tv_norm(),
    }
}

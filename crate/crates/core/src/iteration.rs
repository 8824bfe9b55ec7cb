//! Density-increment approximation by subspaces and Bohr sets.

use serde::Serialize;

use crate::bohr::{
    annihilator_class, find_regular_or_best, local_fourier, local_l2_profile,
    local_l2_profile_direct, local_norm, max_oscillation, width_floor, BohrSet, RadiusProfile, RegularBohrSet,
};
use crate::config::Constants;
use crate::error::{Error, Result};
use crate::fourier::{fourier, GroupFunction, Norm, Spectrum, C64};
use crate::group::{Character, Element, Group};
use crate::spectra::TIE_SLACK;
use crate::structure::{local_ag_cover, xor_basis, XorBasis};

/// One round of an iteration.
#[derive(Clone, Debug, Default, Serialize)]
pub struct RoundRecord {
    pub round: usize,
    pub gamma_count: usize,
    pub codim: usize,
    pub delta: f64,
    pub delta_prime: f64,
    /// A-mass on the current annihilator (class).
    pub ledger: f64,
    /// Worst local `L^2` error over translates.
    pub error: f64,
    pub worst: Element,
    pub s_index: Option<usize>,
    pub class_sizes: Vec<usize>,
    pub branch: Option<String>,
    pub eps_prime: f64,
    /// `||g||_{L^inf(x' + B')} / ||f||_inf`.
    pub x_ratio: f64,
    pub added: Vec<Character>,
    pub required_increment: f64,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct IterationTrace {
    pub rounds: Vec<RoundRecord>,
    pub budget: usize,
    pub a_ratio: f64,
    pub a_norm: f64,
}

impl IterationTrace {
    /// Does the ledger grow by at least the required increment each round?
    pub fn ledger_increases(&self) -> bool {
        self.rounds.windows(2).all(|w| {
            w[1].ledger - w[0].ledger >= w[0].required_increment - 1e-9 * (1.0 + w[0].ledger)
                && w[1].ledger > w[0].ledger
        })
    }

    pub fn ledger_bounded(&self) -> bool {
        self.rounds
            .iter()
            .all(|r| r.ledger <= self.a_norm * (1.0 + 1e-12) + 1e-12)
    }
}

fn round_budget(epsilon: f64, a_ratio: f64, safety: f64) -> usize {
    (safety * (a_ratio * (1.0 + (a_ratio / epsilon).ln()) / (epsilon * epsilon)).ceil()) as usize
}

fn check_epsilon(epsilon: f64) -> Result<()> {
    if epsilon > 0.0 && epsilon <= 1.0 {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!("epsilon {epsilon} not in (0,1]")))
    }
}

/// Subspace output of the model iteration.
#[derive(Clone, Debug, Serialize)]
pub struct SubspaceApprox {
    /// Characters whose common kernel is `V`.
    pub gamma: Vec<Character>,
    pub codim: usize,
    /// Worst `||f - f * mu_V||_{L^2(x + V)}` over all cosets.
    pub worst_error: f64,
    pub cosets_checked: usize,
    /// `2^3 eps^-4 A_f^3`.
    pub plain_bound: f64,
    pub verified: bool,
}

struct CosetStats {
    mean: Vec<C64>,
    rms: Vec<f64>,
    syndrome: Vec<usize>,
}

fn coset_stats(f: &GroupFunction, basis: &XorBasis) -> CosetStats {
    let k = 1usize << basis.rank();
    let syndrome: Vec<usize> = (0..f.len()).map(|x| basis.syndrome(x)).collect();
    let mut sum = vec![C64::new(0.0, 0.0); k];
    let mut count = vec![0usize; k];
    for (x, &s) in syndrome.iter().enumerate() {
        sum[s] += f.values[x];
        count[s] += 1;
    }
    let mean: Vec<C64> = sum.iter().zip(&count).map(|(s, &c)| s / c as f64).collect();
    let mut sq = vec![0.0; k];
    for (x, &s) in syndrome.iter().enumerate() {
        sq[s] += (f.values[x] - mean[s]).norm_sqr();
    }
    let rms = sq.iter().zip(&count).map(|(s, &c)| (s / c as f64).sqrt()).collect();
    CosetStats { mean, rms, syndrome }
}

fn span_mass(s: &Spectrum, basis: &XorBasis) -> f64 {
    s.coeffs
        .iter()
        .enumerate()
        .filter(|(c, _)| basis.contains(*c))
        .map(|(_, v)| v.norm())
        .sum()
}

/// Finds `V <= F2^n` with `||f - f * mu_V||_{L^2(x + V)} <= eps ||f||_inf`
/// on every coset.
pub fn f2n_approximate(
    f: &GroupFunction,
    epsilon: f64,
    refined: bool,
    constants: &Constants,
) -> Result<(SubspaceApprox, IterationTrace)> {
    let g = &f.group;
    if !g.is_boolean() || g.rank() > 16 {
        return Err(Error::InvalidParameter("model iteration needs F2^n with n <= 16".into()));
    }
    check_epsilon(epsilon)?;
    if f.is_zero() {
        return Err(Error::Degenerate("zero function".into()));
    }
    let fs = f.norm(Norm::Linf);
    let spec = fourier(f);
    let a_norm = spec.l1();
    let a_ratio = a_norm / fs;
    let budget = round_budget(epsilon, a_ratio, constants.round_safety);
    let mut trace = IterationTrace {
        rounds: Vec::new(),
        budget,
        a_ratio,
        a_norm,
    };
    let mut gamma: Vec<Character> = Vec::new();
    let mut basis = XorBasis::new();
    let target = epsilon * fs;
    for round in 0..=budget {
        let stats = coset_stats(f, &basis);
        let (worst_coset, worst) = stats
            .rms
            .iter()
            .enumerate()
            .fold((0, 0.0), |acc, (i, &e)| if e > acc.1 { (i, e) } else { acc });
        let mut rec = RoundRecord {
            round,
            gamma_count: gamma.len(),
            codim: basis.rank(),
            ledger: span_mass(&spec, &basis),
            error: worst,
            ..Default::default()
        };
        if worst <= target * (1.0 + 1e-12) {
            trace.rounds.push(rec);
            let plain_bound = 8.0 * a_ratio.powi(3) / epsilon.powi(4);
            if !refined && basis.rank() as f64 > plain_bound {
                return Err(Error::Verification(format!(
                    "codimension {} exceeds 2^3 eps^-4 A^3 = {plain_bound}",
                    basis.rank()
                )));
            }
            let approx = SubspaceApprox {
                gamma,
                codim: basis.rank(),
                worst_error: worst,
                cosets_checked: stats.rms.len(),
                plain_bound,
                verified: true,
            };
            return Ok((approx, trace));
        }
        if round == budget {
            break;
        }
        let x0 = stats.syndrome.iter().position(|&s| s == worst_coset).unwrap();
        let h = GroupFunction {
            group: g.clone(),
            values: f
                .values
                .iter()
                .zip(&stats.syndrome)
                .map(|(v, &s)| v - stats.mean[s])
                .collect(),
        };
        let v = crate::structure::annihilator(g, basis.rows())?;
        let local = local_fourier(&h, x0, &v)?;
        let g_sup = local_norm(&h, x0, &v, f64::INFINITY)?;
        let thr = 0.5 * epsilon * epsilon * fs / a_ratio;
        let big: Vec<Character> = (0..local.coeffs.len())
            .filter(|&c| local.coeffs[c].norm() > thr * (1.0 - TIE_SLACK))
            .collect();
        rec.eps_prime = thr / g_sup;
        rec.x_ratio = g_sup / fs;
        let mut order = big.clone();
        crate::spectra::sort_by_magnitude(&local, &mut order);
        let before = basis.rank();
        if refined {
            let s_max = (fs / thr).log2().ceil().max(0.0) as usize;
            let n_classes = s_max + 1;
            let mut masses = vec![0.0; n_classes];
            let mut sizes = vec![0usize; n_classes];
            for &c in &big {
                let m = local.coeffs[c].norm();
                let s = ((fs / m).log2().floor().max(-1.0) + 1.0) as usize;
                let s = s.min(s_max);
                masses[s] += m;
                sizes[s] += 1;
            }
            let best = (0..n_classes)
                .max_by(|&a, &b| masses[a].total_cmp(&masses[b]).then(b.cmp(&a)))
                .unwrap();
            let level = fs * 2f64.powi(-(best as i32));
            for &c in &order {
                if local.coeffs[c].norm() >= level * (1.0 - TIE_SLACK) && basis.insert(c) {
                    gamma.push(c);
                    rec.added.push(c);
                }
            }
            rec.s_index = Some(best);
            rec.class_sizes = sizes;
            rec.required_increment = 0.25 * epsilon * epsilon * fs / n_classes as f64;
        } else {
            for &c in &order {
                if !basis.contains(c) {
                    let fresh = basis.reduce(c);
                    if !rec.added.iter().any(|&a| basis.reduce(a) == fresh) {
                        rec.added.push(c);
                    }
                }
            }
            for &c in &rec.added {
                basis.insert(c);
                gamma.push(c);
            }
            rec.class_sizes = vec![big.len()];
            rec.required_increment = 0.25 * epsilon * epsilon * fs;
        }
        if basis.rank() == before {
            return Err(Error::Verification("iteration made no progress".into()));
        }
        trace.rounds.push(rec);
    }
    Err(Error::RoundBudget { budget })
}

/// Bohr-set output of the general iteration.
#[derive(Clone, Debug, Serialize)]
pub struct BohrApprox {
    pub gamma: Vec<Character>,
    pub delta: f64,
    pub delta_prime: f64,
    /// `|B(Gamma, delta')|`.
    pub inner_size: usize,
    pub inner_members: Vec<Element>,
    /// `max_{y in B', x} |f*beta(x+y) - f*beta(x)| / ||f||_inf`.
    pub oscillation: f64,
    /// `max_x ||f - f*beta||_{L^2(x + B')} / ||f||_inf`, by direct sums.
    pub l2_error: f64,
    pub verified: bool,
    pub regularity_certified: bool,
    pub eta: f64,
}

/// `F = f * beta` and the two clauses at width `delta_prime`.
struct Clauses {
    smooth: GroupFunction,
    inner: RegularBohrSet,
    oscillation: f64,
}

fn oscillation_width(
    f: &GroupFunction,
    profile: &RadiusProfile,
    b: &BohrSet,
    epsilon: f64,
    constants: &Constants,
) -> Result<(Clauses, bool)> {
    let g = &f.group;
    let fs = f.norm(Norm::Linf);
    let smooth = f.convolve_measure(&b.cutoff())?;
    let floor = width_floor(g);
    let d = profile.dimension() as f64;
    let mut cand = (epsilon * b.delta / d).max(floor);
    loop {
        let reg = find_regular_or_best(g, &profile.gamma, cand, constants)?;
        let osc = max_oscillation(&smooth, &reg.bohr.members);
        let osc_ok_certified = reg.certified;
        if osc <= epsilon * fs * (1.0 + 1e-12) || cand <= floor {
            if osc > epsilon * fs * (1.0 + 1e-9) {
                return Err(Error::Verification("oscillation persists at the width floor".into()));
            }
            return Ok((
                Clauses {
                    smooth,
                    inner: reg,
                    oscillation: osc / fs,
                },
                osc_ok_certified,
            ));
        }
        cand = (cand / 2.0).max(floor);
    }
}

/// Finds a Bohr set `B = B(Gamma, delta)` and `B' = B(Gamma, delta')` with
/// `f * beta` nearly constant along `B'` and
/// `||f - f * beta||_{L^2(x + B')} <= eps ||f||_inf` for all `x`.
pub fn bohr_approximate(
    f: &GroupFunction,
    epsilon: f64,
    constants: &Constants,
) -> Result<(BohrApprox, IterationTrace)> {
    let g = &f.group;
    if g.order() > 1 << 14 {
        return Err(Error::CapExceeded {
            what: "group order for the general iteration",
            size: g.order(),
            cap: 1 << 14,
        });
    }
    check_epsilon(epsilon)?;
    if f.is_zero() {
        return Err(Error::Degenerate("zero function".into()));
    }
    let fs = f.norm(Norm::Linf);
    let spec = fourier(f);
    let a_norm = spec.l1();
    let a_ratio = a_norm / fs;
    let eta = constants.c_eta * epsilon.powi(3) / (a_ratio * a_ratio);
    let budget = round_budget(epsilon, a_ratio, constants.round_safety);
    let floor = width_floor(g);
    let mut trace = IterationTrace {
        rounds: Vec::new(),
        budget,
        a_ratio,
        a_norm,
    };
    let mut gamma: Vec<Character> = vec![0];
    let mut reg = find_regular_or_best(g, &gamma, 1.0, constants)?;
    let mut certified = reg.certified;
    let s_max = 3 + (a_ratio / (epsilon * epsilon)).log2().floor().max(0.0) as usize;
    let s_prime_cap = 3.0 + (a_ratio / (epsilon * epsilon)).log2();
    for round in 0..=budget {
        let b = reg.bohr.clone();
        let profile = RadiusProfile::new(g, &gamma)?;
        let class = annihilator_class(&b, eta);
        let ledger: f64 = class.iter().map(|&c| spec.coeffs[c].norm()).sum();
        let (clauses, osc_cert) = oscillation_width(f, &profile, &b, epsilon, constants)?;
        let h = f.sub(&clauses.smooth)?;
        let inner = &clauses.inner.bohr;
        let prof = local_l2_profile(&h, inner)?;
        let (worst, err) = prof
            .iter()
            .enumerate()
            .fold((0, 0.0), |acc, (i, &e)| if e > acc.1 { (i, e) } else { acc });
        let mut rec = RoundRecord {
            round,
            gamma_count: gamma.len(),
            delta: b.delta,
            delta_prime: inner.delta,
            ledger,
            error: err,
            worst,
            ..Default::default()
        };
        if err <= epsilon * fs * (1.0 + 1e-9) {
            let direct = local_l2_profile_direct(&h, inner);
            let l2 = direct.iter().fold(0.0, |m: f64, &e| m.max(e));
            trace.rounds.push(rec);
            let verified = l2 <= epsilon * fs * (1.0 + 1e-9)
                && clauses.oscillation <= epsilon * (1.0 + 1e-9);
            if !verified {
                return Err(Error::Verification(format!(
                    "output clauses failed: l2 {l2}, oscillation {}",
                    clauses.oscillation
                )));
            }
            let approx = BohrApprox {
                gamma,
                delta: b.delta,
                delta_prime: inner.delta,
                inner_size: inner.members.len(),
                inner_members: inner.members.clone(),
                oscillation: clauses.oscillation,
                l2_error: l2 / fs,
                verified,
                regularity_certified: certified && osc_cert,
                eta,
            };
            return Ok((approx, trace));
        }
        if round == budget {
            break;
        }
        // work at the worst translate x'
        let local = local_fourier(&h, worst, inner)?;
        let h_hat = fourier(&h);
        let g_sup = local_norm(&h, worst, inner, f64::INFINITY)?;
        let thr = 0.25 * epsilon * epsilon * fs / a_ratio;
        let mut masses = vec![0.0; s_max + 1];
        let mut sizes = vec![0usize; s_max + 1];
        for c in 0..local.coeffs.len() {
            let m = local.coeffs[c].norm();
            if m < thr * (1.0 - TIE_SLACK) {
                continue;
            }
            let s = ((fs / m).log2().floor() + 1.0).max(0.0) as usize;
            let s = s.min(s_max);
            masses[s] += m * h_hat.coeffs[c].norm();
            sizes[s] += 1;
        }
        let in_prime = |s: usize| (1u64 << s.min(62)) as f64 <= s_prime_cap;
        let prime_mass: f64 = (0..=s_max).filter(|&s| in_prime(s)).map(|s| masses[s]).sum();
        let second: Vec<usize> = (0..=s_max).filter(|&s| !in_prime(s)).collect();
        let (s, branch, required) = if prime_mass >= 0.25 * epsilon * epsilon * fs * fs {
            let s = (0..=s_max)
                .filter(|&s| in_prime(s) && sizes[s] > 0)
                .max_by(|&a, &b| {
                    (masses[a] * 2f64.powi(a as i32))
                        .total_cmp(&(masses[b] * 2f64.powi(b as i32)))
                        .then(b.cmp(&a))
                })
                .unwrap();
            (s, "S'", 0.5 * (epsilon * epsilon * fs / 16.0 - eta * a_norm))
        } else {
            let s = second
                .iter()
                .copied()
                .filter(|&s| sizes[s] > 0)
                .max_by(|&a, &b| masses[a].total_cmp(&masses[b]).then(b.cmp(&a)))
                .ok_or_else(|| Error::Verification("no dyadic class carries mass".into()))?;
            let req = 0.5
                * (2f64.powi(s as i32) * epsilon * epsilon * fs / (8.0 * second.len() as f64)
                    - eta * a_norm);
            (s, "S''", req)
        };
        let eps_loc = (fs * 2f64.powi(-(s as i32)) / g_sup).min(1.0);
        let shifted = h.shift(worst);
        let cover = local_ag_cover(&shifted, &clauses.inner, eps_loc, eta.min(1.0), constants)?;
        certified &= cover.regularity_certified;
        rec.s_index = Some(s);
        rec.class_sizes = sizes;
        rec.branch = Some(branch.to_string());
        rec.eps_prime = eps_loc;
        rec.x_ratio = g_sup / fs;
        rec.added = cover.lambda.clone();
        rec.required_increment = required;
        for &c in &cover.lambda {
            if !gamma.contains(&c) {
                gamma.push(c);
            }
        }
        let next = cover.delta_prime.min(inner.delta);
        reg = find_regular_or_best(g, &gamma, next, constants)?;
        certified &= reg.certified;
        if reg.bohr.delta < floor / 2.0 && reg.bohr.members.len() > 1 {
            return Err(Error::WidthUnderflow("group too small for parameters".into()));
        }
        trace.rounds.push(rec);
    }
    Err(Error::RoundBudget { budget })
}

/// On `Z/N`, an `x` with `|f(x) - mean f| <= eps ||f||_inf / 2`, given
/// `|f(x + y) - f(x)| <= eps ||f||_inf` everywhere and `gcd(y, N) = 1`.
pub fn discrete_ivt(f: &GroupFunction, y: Element, epsilon: f64) -> Result<Element> {
    let g = &f.group;
    if g.rank() != 1 {
        return Err(Error::InvalidParameter("the orbit scan needs a cyclic group".into()));
    }
    let n = g.order();
    if y == 0 || gcd(y, n) != 1 {
        return Err(Error::InvalidParameter(format!("step {y} does not generate Z/{n}")));
    }
    if f.values.iter().any(|v| v.im.abs() > 1e-12 * (1.0 + v.re.abs())) {
        return Err(Error::InvalidParameter("function must be real".into()));
    }
    let sup = f.norm(Norm::Linf);
    let step = (0..n)
        .map(|x| (f.values[g.add(x, y)].re - f.values[x].re).abs())
        .fold(0.0, f64::max);
    if step > epsilon * sup * (1.0 + 1e-12) {
        return Err(Error::InvalidParameter(format!(
            "step {step} exceeds eps ||f||_inf = {}",
            epsilon * sup
        )));
    }
    let mean = f.mean().re;
    let mut x = 0;
    for _ in 0..n {
        if (f.values[x].re - mean).abs() <= 0.5 * epsilon * sup * (1.0 + 1e-12) {
            return Ok(x);
        }
        x = g.add(x, y);
    }
    Err(Error::Verification("no orbit point near the mean".into()))
}

fn gcd(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn is_prime(p: usize) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

#[derive(Clone, Debug, Serialize)]
pub struct LittlewoodReport {
    pub p: usize,
    pub size: usize,
    pub alpha: f64,
    pub epsilon: f64,
    pub d: usize,
    pub delta_prime: f64,
    pub inner_size: usize,
    /// `d (1 + ln 1/delta')`.
    pub width_cost: f64,
    pub width_cost_ok: bool,
    pub contradiction_fired: bool,
    pub a_norm: f64,
    /// `||1_A||_A / sqrt(ln p / (ln ln p)^3)`.
    pub ratio_lower: f64,
    /// `||1_A||_A / ln p`.
    pub ratio_log: f64,
    pub rounds: usize,
    pub verified: bool,
}

/// Runs the general iteration on `1_A` in `Z/p` and checks that it can only
/// end with a trivial inner Bohr set, which forces `d (1 + ln 1/delta') >= ln p`.
pub fn littlewood_certificate(
    group: &Group,
    set: &[Element],
    constants: &Constants,
) -> Result<LittlewoodReport> {
    let p = group.order();
    if group.rank() != 1 || !is_prime(p) {
        return Err(Error::InvalidParameter(format!("{} is not Z/p for a prime p", group.spec())));
    }
    let f = GroupFunction::indicator(group, set);
    let size = f.values.iter().filter(|v| v.re > 0.5).count();
    let alpha = size as f64 / p as f64;
    if !(0.25..=0.75).contains(&alpha) {
        return Err(Error::InvalidParameter(format!("density {alpha} outside [1/4, 3/4]")));
    }
    let epsilon = alpha * (1.0 - alpha) / 4.0;
    let (approx, trace) = bohr_approximate(&f, epsilon, constants)?;
    let contradiction_fired = contradiction_chain(&f, &approx, epsilon, alpha)?;
    let ln_p = (p as f64).ln();
    let width_cost = approx.gamma.len() as f64 * (1.0 + (1.0 / approx.delta_prime).ln());
    let a_norm = f.norm(Norm::A);
    let lower = (ln_p / ln_p.ln().powi(3)).sqrt();
    Ok(LittlewoodReport {
        p,
        size,
        alpha,
        epsilon,
        d: approx.gamma.len(),
        delta_prime: approx.delta_prime,
        inner_size: approx.inner_size,
        width_cost,
        width_cost_ok: width_cost >= ln_p,
        contradiction_fired,
        a_norm,
        ratio_lower: a_norm / lower,
        ratio_log: a_norm / ln_p,
        rounds: trace.rounds.len(),
        verified: approx.verified,
    })
}

/// Tries to derive `|1_A(x') - alpha| <= alpha (1 - alpha)` from a
/// nontrivial `B'`. Returns whether every step went through.
fn contradiction_chain(f: &GroupFunction, approx: &BohrApprox, epsilon: f64, alpha: f64) -> Result<bool> {
    let g = &f.group;
    let Some(&y) = approx.inner_members.iter().find(|&&y| y != 0) else {
        return Ok(false);
    };
    let b = crate::bohr::bohr_set(g, &approx.gamma, approx.delta)?;
    let big_f = f.convolve_measure(&b.cutoff())?;
    let sup = big_f.norm(Norm::Linf);
    if sup == 0.0 {
        return Ok(false);
    }
    let Ok(x0) = discrete_ivt(&big_f, y, (epsilon / sup).min(1.0)) else {
        return Ok(false);
    };
    let x1 = approx
        .inner_members
        .iter()
        .map(|&t| g.add(x0, t))
        .find(|&x| (f.values[x] - big_f.values[x]).norm() <= epsilon);
    Ok(match x1 {
        Some(x) => (f.values[x].re - alpha).abs() <= alpha * (1.0 - alpha),
        None => false,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct PoorApprox {
    pub gamma: Vec<Character>,
    pub delta: f64,
    pub d: usize,
    pub tail: f64,
    /// `||f - f * beta||_inf / ||f||_inf`.
    pub error: f64,
    pub verified: bool,
}

/// Bohr set on the prefix of largest coefficients with small A-tail.
pub fn poor_approximate(f: &GroupFunction, epsilon: f64, constants: &Constants) -> Result<PoorApprox> {
    check_epsilon(epsilon)?;
    if f.is_zero() {
        return Err(Error::Degenerate("zero function".into()));
    }
    let spec = fourier(f);
    let fs = f.norm(Norm::Linf);
    let a_ratio = spec.l1() / fs;
    let mut order: Vec<Character> = (0..spec.coeffs.len()).collect();
    crate::spectra::sort_by_magnitude(&spec, &mut order);
    let mut tail: f64 = spec.l1();
    let mut gamma = Vec::new();
    for &c in &order {
        if !gamma.is_empty() && tail <= epsilon * fs / 3.0 {
            break;
        }
        gamma.push(c);
        tail -= spec.coeffs[c].norm();
    }
    let tail = tail.max(0.0);
    let delta = ((epsilon / a_ratio / 6.0).asin() / std::f64::consts::PI).min(1.0);
    let reg = find_regular_or_best(&f.group, &gamma, delta, constants)?;
    let smooth = f.convolve_measure(&reg.bohr.cutoff())?;
    let error = f.max_abs_diff(&smooth) / fs;
    let verified = error <= epsilon * (1.0 + 1e-9);
    if !verified {
        return Err(Error::Verification(format!("prefix approximation error {error}")));
    }
    Ok(PoorApprox {
        d: gamma.len(),
        gamma,
        delta: reg.bohr.delta,
        tail,
        error,
        verified,
    })
}

/// Direct check of the model output: worst coset error of `f - f * mu_V`.
pub fn subspace_error(f: &GroupFunction, gamma: &[Character]) -> f64 {
    let basis = xor_basis(gamma);
    coset_stats(f, &basis).rms.into_iter().fold(0.0, f64::max)
}

//! Acceptance criteria. Runs as a plain binary so every line is printed.

use std::collections::HashMap;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use spectral_bohr::bohr::{
    annihilator_class, bohr_set, element_radius, find_regular, find_regular_or_best, local_l2_profile_direct, nest_delta,
    translate_defect,
};
use spectral_bohr::config::Constants;
use spectral_bohr::dissociation::{evaluate, is_dissociated, span, weight_profile};
use spectral_bohr::families::{interval, random_set, subspace_union};
use spectral_bohr::fourier::fourier_direct;
use spectral_bohr::iteration::{
    bohr_approximate, discrete_ivt, f2n_approximate, littlewood_certificate, subspace_error,
};
use spectral_bohr::riesz::{aux_measure, aux_measure_model, aux_report, make_tau, riesz_product};
use spectral_bohr::spectra::{large_spectrum, SpectrumThreshold, ThresholdKind};
use spectral_bohr::structure::{ag_cover, chang_cover, local_ag_cover};
use spectral_bohr::{fourier, inverse, Character, Group, GroupFunction, Norm, C64};

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn random_function(g: &Group, rng: &mut ChaCha8Rng) -> GroupFunction {
    GroupFunction::from_fn(g, |_| C64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
}

fn random_real(g: &Group, rng: &mut ChaCha8Rng) -> GroupFunction {
    GroupFunction::from_fn(g, |_| C64::new(rng.gen_range(-1.0..1.0), 0.0))
}

fn sum_of_characters(g: &Group, chars: &[Character]) -> GroupFunction {
    GroupFunction::from_fn(g, |x| chars.iter().map(|&c| g.pairing(c, x)).sum())
}

/// Greedy random dissociated set of at most `k` characters.
fn random_dissociated(g: &Group, k: usize, rng: &mut ChaCha8Rng) -> Vec<Character> {
    let mut out: Vec<Character> = Vec::new();
    for _ in 0..200 {
        if out.len() == k {
            break;
        }
        let c = rng.gen_range(1..g.order());
        let mut trial = out.clone();
        trial.push(c);
        if is_dissociated(g, &trial, 32).unwrap().dissociated {
            out = trial;
        }
    }
    out
}

fn c1_transform() -> Outcome {
    let specs = [
        "Z17", "Z1000", "F2^10", "Z4xZ27", "Z3^5", "Z1024", "F2^16", "Z65536", "Z255xZ256", "Z7x Z11",
    ];
    let groups: Vec<Group> = specs.iter().map(|s| Group::parse(&s.replace(' ', "")).unwrap()).collect();
    let results: Vec<(f64, f64, f64)> = (0..1000u64)
        .into_par_iter()
        .map(|i| {
            let mut rng = ChaCha8Rng::seed_from_u64(1000 + i);
            let g = &groups[i as usize % groups.len()];
            let f = random_function(g, &mut rng);
            let s = fourier(&f);
            let sup = f.norm(Norm::Linf);
            let round = inverse(&s).max_abs_diff(&f) / sup;
            let l2 = f.norm(Norm::L2).powi(2);
            let parseval = (s.l2_sqr() - l2).abs() / l2;
            let direct = if g.order() <= 1024 {
                s.max_abs_diff(&fourier_direct(&f)) / s.sup()
            } else {
                0.0
            };
            (round, parseval, direct)
        })
        .collect();
    let worst = results.iter().fold((0.0f64, 0.0f64, 0.0f64), |a, r| {
        (a.0.max(r.0), a.1.max(r.1), a.2.max(r.2))
    });
    ensure(worst.0 <= 1e-10 && worst.1 <= 1e-10 && worst.2 <= 1e-10, || format!("{worst:?}"))?;
    Ok(format!(
        "1000 functions; roundtrip {:.1e}, Parseval {:.1e}, oracle {:.1e}",
        worst.0, worst.1, worst.2
    ))
}

fn c2_spectrum_bounds() -> Outcome {
    let violations: usize = (0..500u64)
        .into_par_iter()
        .map(|i| {
            let mut rng = ChaCha8Rng::seed_from_u64(2000 + i);
            let n = rng.gen_range(8..600);
            let g = Group::cyclic(n).unwrap();
            let f = match i % 5 {
                0 => random_function(&g, &mut rng),
                1 => GroupFunction::indicator(&g, &random_set(&g, rng.gen_range(0.05..0.95), &mut rng)),
                2 => GroupFunction::indicator(&g, &[0]),
                3 => sum_of_characters(&g, &[1, rng.gen_range(0..n)]),
                _ => GroupFunction::indicator(&g, &interval(&g, rng.gen_range(0.05..0.95)).unwrap()),
            };
            let eps = if i % 7 == 0 { 1.0 / n as f64 } else { rng.gen_range(0.01..1.0) };
            let s = fourier(&f);
            let l1 = f.norm(Norm::L1);
            let l2 = f.norm(Norm::L2);
            let sup = f.norm(Norm::Linf);
            let mut bad = 0;
            // counts with the exact threshold
            let c1 = s.coeffs.iter().filter(|c| c.norm() >= eps * l1).count() as f64;
            if c1 > (l2 / l1).powi(2) / (eps * eps) * (1.0 + 1e-12) {
                bad += 1;
            }
            let cinf = s.coeffs.iter().filter(|c| c.norm() >= eps * sup).count() as f64;
            if cinf > s.l1() / sup / eps * (1.0 + 1e-12) {
                bad += 1;
            }
            for kind in [ThresholdKind::L1, ThresholdKind::Linf] {
                if large_spectrum(&f, SpectrumThreshold::new(kind, eps).unwrap()).is_err() {
                    bad += 1;
                }
            }
            bad
        })
        .sum();
    ensure(violations == 0, || format!("{violations} violations"))?;
    Ok("500 cases, both inequalities, zero violations".into())
}

fn c3_riesz() -> Outcome {
    let g = Group::cube(12).unwrap();
    let mut worst_coeff: f64 = 0.0;
    let mut worst_norm: f64 = 0.0;
    let mut worst_scale: f64 = 0.0;
    let mut rng = ChaCha8Rng::seed_from_u64(3000);
    for trial in 0..40 {
        let k = 1 + trial % 8;
        let lam = random_dissociated(&g, k, &mut rng);
        let omega: Vec<f64> = lam.iter().map(|_| rng.gen_range(-1.0..1.0)).collect();
        let w: Vec<C64> = omega.iter().map(|&v| C64::new(v, 0.0)).collect();
        let t: f64 = rng.gen_range(-1.0..1.0);
        let p = riesz_product(&g, &lam, &w, 1.0).unwrap();
        let pt = riesz_product(&g, &lam, &w, t).unwrap();
        worst_norm = worst_norm.max((p.norm(Norm::L1) - 1.0).abs());
        let s = fourier(&p);
        let st = fourier(&pt);
        let mut on_span = vec![false; g.order()];
        for mask in 0u32..(1 << lam.len()) {
            let m: Vec<i8> = (0..lam.len()).map(|i| ((mask >> i) & 1) as i8).collect();
            let gamma = evaluate(&g, &lam, &m);
            on_span[gamma] = true;
            let expect: f64 = (0..lam.len()).filter(|i| mask >> i & 1 == 1).map(|i| omega[i]).product();
            worst_coeff = worst_coeff.max((s.coeffs[gamma] - C64::new(expect, 0.0)).norm());
            let scaled = s.coeffs[gamma] * t.powi(mask.count_ones() as i32);
            worst_scale = worst_scale.max((st.coeffs[gamma] - scaled).norm());
        }
        for (gamma, c) in s.coeffs.iter().enumerate() {
            if !on_span[gamma] {
                worst_coeff = worst_coeff.max(c.norm());
            }
        }
    }
    ensure(worst_coeff <= 1e-12 && worst_norm <= 1e-12 && worst_scale <= 1e-12, || {
        format!("coeff {worst_coeff:e}, norm {worst_norm:e}, scaling {worst_scale:e}")
    })?;
    Ok(format!(
        "40 sets in F2^12; coefficient {worst_coeff:.1e}, norm {worst_norm:.1e}, scaling {worst_scale:.1e}"
    ))
}

fn c4_tau() -> Outcome {
    let mut worst: f64 = 0.0;
    for l in 2..=10usize {
        let tau = make_tau(l).map_err(|e| e.to_string())?;
        worst = worst.max((tau.moment(1) - 1.0).abs());
        for k in (0..=2 * l as u32).filter(|&k| k != 1) {
            worst = worst.max(tau.moment(k).abs());
        }
        ensure(tau.norm() <= 2.0 * (2 * l - 1) as f64 + 1e-9, || format!("norm at l={l}"))?;
        for k in 0..=4 * l as u32 {
            ensure(tau.moment(k).abs() <= 2f64.powi(1 - k as i32) + 1e-9, || {
                format!("moment {k} at l={l}")
            })?;
        }
    }
    ensure(worst <= 1e-9, || format!("moment defect {worst:e}"))?;
    Ok(format!("l = 2..10; worst moment defect {worst:.1e}"))
}

fn c5_aux() -> Outcome {
    let c = Constants::default();
    let general = [
        Group::parse("Z3^5").unwrap(),
        Group::cyclic(1009).unwrap(),
        Group::parse("Z4xZ27").unwrap(),
    ];
    let cube = Group::cube(10).unwrap();
    let rows: Vec<Result<(f64, f64, f64), String>> = (0..400u64)
        .into_par_iter()
        .map(|i| {
            let mut rng = ChaCha8Rng::seed_from_u64(5000 + i);
            let eta = 2f64.powi(-rng.gen_range(1..=10));
            let k = rng.gen_range(1..=6);
            let (g, mu, lam, om) = if i < 200 {
                let lam = random_dissociated(&cube, k, &mut rng);
                let om: Vec<f64> = lam.iter().map(|_| rng.gen_range(-1.0..1.0)).collect();
                let mu = aux_measure_model(&cube, &lam, &om, eta, 20).map_err(|e| e.to_string())?;
                let om: Vec<C64> = om.iter().map(|&v| C64::new(v, 0.0)).collect();
                (&cube, mu, lam, om)
            } else {
                let g = &general[i as usize % 3];
                let lam = random_dissociated(g, k, &mut rng);
                let om: Vec<C64> = lam
                    .iter()
                    .map(|&l| {
                        let r = rng.gen_range(0.0..1.0);
                        if g.add(l, l) == 0 {
                            C64::new(if rng.gen_bool(0.5) { r } else { -r }, 0.0)
                        } else {
                            C64::from_polar(r, rng.gen_range(0.0..std::f64::consts::TAU))
                        }
                    })
                    .collect();
                let mu = aux_measure(g, &lam, &om, eta, &c).map_err(|e| e.to_string())?;
                (g, mu, lam, om)
            };
            let _ = g;
            let r = aux_report(&mu, &lam, &om, false);
            let bound = 8.0 * (1.0 + (1.0 / eta).log2());
            ensure(
                r.interpolation_defect <= 2f64.powi(-30) && r.max_leakage <= eta && r.tv_norm <= bound,
                || format!("trial {i}: {r:?} eta {eta}"),
            )?;
            Ok((r.interpolation_defect, r.max_leakage / eta, r.tv_norm / bound))
        })
        .collect();
    let mut worst = (0.0f64, 0.0f64, 0.0f64);
    for r in rows {
        let r = r?;
        worst = (worst.0.max(r.0), worst.1.max(r.1), worst.2.max(r.2));
    }
    Ok(format!(
        "400 trials; defect {:.1e}, leakage/eta {:.3}, tv/bound {:.3}",
        worst.0, worst.1, worst.2
    ))
}

fn c6_rider() -> Outcome {
    let groups = [
        Group::cyclic(4093).unwrap(),
        Group::cube(12).unwrap(),
        Group::parse("Z4xZ27").unwrap(),
        Group::parse("Z3^6").unwrap(),
        Group::cyclic(65536).unwrap(),
    ];
    let results: Vec<Result<usize, String>> = (0..50u64)
        .into_par_iter()
        .map(|i| {
            let mut rng = ChaCha8Rng::seed_from_u64(6000 + i);
            let g = &groups[i as usize % groups.len()];
            let lam = random_dissociated(g, rng.gen_range(2..=10), &mut rng);
            let k = lam.len();
            let mut counts: HashMap<(Character, usize), u64> = HashMap::new();
            let mut m = vec![-1i8; k];
            loop {
                let r = m.iter().filter(|&&v| v != 0).count();
                *counts.entry((evaluate(g, &lam, &m), r)).or_default() += 1;
                let mut j = 0;
                while j < k && m[j] == 1 {
                    m[j] = -1;
                    j += 1;
                }
                if j == k {
                    break;
                }
                m[j] += 1;
            }
            let table = weight_profile(g, &lam);
            for (&(gamma, r), &n) in &counts {
                ensure(n <= 1u64 << r, || format!("count {n} at weight {r}"))?;
                ensure(table[r][gamma] == n, || "profile disagrees with enumeration".into())?;
            }
            Ok(k)
        })
        .collect();
    let mut largest = 0;
    for r in results {
        largest = largest.max(r?);
    }
    Ok(format!("50 sets (largest {largest}), 3^k enumeration, zero violations"))
}

fn c7_bohr() -> Outcome {
    let c = Constants::default();
    let groups = [
        Group::cyclic(4093).unwrap(),
        Group::cyclic(4096).unwrap(),
        Group::parse("Z64xZ64").unwrap(),
        Group::cube(12).unwrap(),
        Group::parse("Z16x Z256".replace(' ', "").as_str()).unwrap(),
    ];
    let rows: Vec<Result<(f64, f64), String>> = (0..100u64)
        .into_par_iter()
        .map(|i| {
            let mut rng = ChaCha8Rng::seed_from_u64(7000 + i);
            let g = &groups[i as usize % groups.len()];
            let d = rng.gen_range(1..=3);
            let gamma: Vec<Character> = (0..d).map(|_| rng.gen_range(1..g.order())).collect();
            let delta = rng.gen_range(0.02..0.5);
            let reg = find_regular(g, &gamma, delta, &c).map_err(|e| format!("case {i}: {e}"))?;
            let b = &reg.bohr;
            let dim = b.dimension() as f64;
            ensure(reg.constant <= 32.0, || format!("constant {}", reg.constant))?;
            ensure(b.density >= b.delta.powi(b.dimension() as i32), || "density below delta^d".into())?;
            // translation defect for every y with d ||y|| <= c_r delta
            let mut worst: f64 = 0.0;
            let mut small = Vec::new();
            for y in 0..g.order() {
                let r = element_radius(g, &b.gamma, y);
                if r * dim <= c.c_r * b.delta {
                    small.push(y);
                    if r > 0.0 {
                        worst = worst.max(translate_defect(b, y) * b.delta / (dim * r));
                    } else {
                        ensure(translate_defect(b, y) == 0.0, || "defect at radius 0".into())?;
                    }
                }
            }
            ensure(worst <= 32.0, || format!("translation constant {worst}"))?;
            // corollaries with a narrow set B' = B(Gamma, delta')
            let dp = c.c_r * b.delta / dim;
            let inner = bohr_set(g, &b.gamma, dp).map_err(|e| e.to_string())?;
            ensure(inner.density >= dp.powi(b.dimension() as i32), || "density below delta^d".into())?;
            let beta = b.cutoff();
            let max_def = inner.members.iter().map(|&y| translate_defect(b, y)).fold(0.0, f64::max);
            let conv = beta.convolve(&inner.cutoff()).unwrap();
            let tv = conv.sub(&beta).unwrap().tv_norm();
            ensure(tv <= max_def + 1e-12, || format!("convolution {tv} vs {max_def}"))?;
            ensure(max_def <= 32.0 * dim * dp / b.delta + 1e-12, || "corollary bound".into())?;
            let f = random_real(g, &mut rng);
            let big = f.convolve_measure(&beta).unwrap();
            let osc = inner
                .members
                .iter()
                .map(|&y| big.shift(y).max_abs_diff(&big))
                .fold(0.0, f64::max);
            ensure(osc <= f.norm(Norm::Linf) * max_def + 1e-12, || format!("oscillation {osc}"))?;
            Ok((reg.constant, worst))
        })
        .collect();
    let mut worst = (0.0f64, 0.0f64);
    for r in rows {
        let r = r?;
        worst = (worst.0.max(r.0), worst.1.max(r.1));
    }
    // nesting
    let nests: Vec<Result<(), String>> = (0..50u64)
        .into_par_iter()
        .map(|i| {
            let mut rng = ChaCha8Rng::seed_from_u64(7500 + i);
            let g = &groups[i as usize % groups.len()];
            let gamma: Vec<Character> = (0..rng.gen_range(1..=2)).map(|_| rng.gen_range(1..g.order())).collect();
            let delta = rng.gen_range(0.05..0.5);
            let eta1 = rng.gen_range(0.1..1.0);
            let eta2 = rng.gen_range(0.1..1.0);
            let dp = nest_delta(g, &gamma, delta, eta1, eta2).map_err(|e| e.to_string())?;
            let b = bohr_set(g, &gamma, delta).unwrap();
            let t = b.cutoff().transform();
            let inner = bohr_set(g, &gamma, dp).unwrap();
            let class = annihilator_class(&inner, eta2);
            for (gam, v) in t.coeffs.iter().enumerate() {
                if v.norm() >= eta1 {
                    ensure(class.binary_search(&gam).is_ok(), || format!("nest case {i}"))?;
                }
            }
            Ok(())
        })
        .collect();
    for r in nests {
        r?;
    }
    Ok(format!(
        "100 regular sets, max constant {:.2}, max translation constant {:.2}; 50 nestings",
        worst.0, worst.1
    ))
}

fn c8_cover() -> Outcome {
    let c = Constants::default();
    let mut corpus: Vec<GroupFunction> = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(8000);
    let z = Group::cyclic(257).unwrap();
    for _ in 0..6 {
        corpus.push(random_function(&z, &mut rng));
        corpus.push(GroupFunction::indicator(&z, &random_set(&z, 0.5, &mut rng)));
    }
    corpus.push(GroupFunction::indicator(&z, &[0]));
    corpus.push(sum_of_characters(&z, &[1, 3, 9, 27]));
    corpus.push(GroupFunction::indicator(&z, &interval(&z, 0.3).unwrap()));
    let cube = Group::cube(10).unwrap();
    corpus.push(GroupFunction::indicator(&cube, &[0]));
    corpus.push(GroupFunction::indicator(&cube, &subspace_union(&cube, 2, 2, &mut rng).unwrap()));
    let mixed = Group::parse("Z4xZ27").unwrap();
    corpus.push(GroupFunction::indicator(&mixed, &random_set(&mixed, 0.3, &mut rng)));
    let globals: Vec<Result<f64, String>> = corpus
        .par_iter()
        .flat_map(|f| [0.125, 0.25, 0.5].into_par_iter().map(move |e| (f, e)))
        .map(|(f, eps)| {
            let mut worst: f64 = 0.0;
            for cover in [chang_cover(f, eps, &c), ag_cover(f, eps, &c)] {
                let cover = cover.map_err(|e| e.to_string())?;
                let sp = span(&f.group, &cover.lambda, 20).map_err(|e| e.to_string())?;
                ensure(cover.spectrum.iter().all(|&g| sp.contains(g)), || "containment".into())?;
                ensure(cover.measured_constant <= 8.0, || format!("constant {}", cover.measured_constant))?;
                worst = worst.max(cover.measured_constant);
            }
            Ok(worst)
        })
        .collect();
    let mut worst_global: f64 = 0.0;
    for r in globals {
        worst_global = worst_global.max(r?);
    }
    // local covers
    let p = Group::cyclic(1009).unwrap();
    let a = GroupFunction::indicator(&p, &interval(&p, 0.5).unwrap());
    let b = find_regular(&p, &[1], 0.05, &c).map_err(|e| e.to_string())?;
    let g_fn = a.sub(&a.convolve_measure(&b.bohr.cutoff()).unwrap()).unwrap();
    let mut cases: Vec<(GroupFunction, Vec<Character>, f64, f64, f64)> = vec![
        (g_fn, vec![1], 0.05, 0.25, 0.5),
        (GroupFunction::character(&z, 5), vec![1], 0.1, 0.5, 0.5),
        (GroupFunction::indicator(&z, &interval(&z, 0.25).unwrap()), vec![0], 1.0, 0.25, 0.25),
    ];
    for spec in ["F2^10", "Z3^6", "Z4xZ27"] {
        let h = Group::parse(spec).unwrap();
        let chars: Vec<Character> = [16, 40, 100].iter().map(|c| c % h.order()).collect();
        cases.push((sum_of_characters(&h, &chars), vec![1], 0.25, 0.25, 0.5));
        cases.push((sum_of_characters(&h, &chars), vec![3, 5], 0.25, 0.25, 0.5));
    }
    for i in 0..5 {
        let f = GroupFunction::indicator(&p, &random_set(&p, 0.5, &mut rng));
        cases.push((f, vec![rng.gen_range(1..1009)], 0.1, 0.25 + 0.1 * i as f64, 0.5));
    }
    let locals: Vec<Result<(usize, f64), String>> = cases
        .par_iter()
        .map(|(f, gamma, delta, eps, eta)| {
            let g = &f.group;
            let b = find_regular_or_best(g, gamma, *delta, &c).map_err(|e| e.to_string())?;
            let lc = local_ag_cover(f, &b, *eps, *eta, &c).map_err(|e| format!("{} gamma {gamma:?} delta {delta}: {e}", g.spec()))?;
            let mut wide = gamma.clone();
            wide.extend(&lc.lambda);
            let inner = bohr_set(g, &wide, lc.delta_prime).unwrap();
            let class = annihilator_class(&inner, *eta);
            ensure(lc.spectrum.iter().all(|s| class.binary_search(s).is_ok()), || "class inclusion".into())?;
            let chain = lc.ledger.chain.iter().map(|x| x.1).fold(0.0, f64::max);
            ensure(chain <= 2.0 + 1e-9 && lc.ledger.chain.len() == 16, || format!("chain {chain}"))?;
            ensure(lc.ledger.holds, || "certification".into())?;
            Ok((lc.lambda.len(), chain))
        })
        .collect();
    let mut worst_chain: f64 = 0.0;
    let mut nonempty = 0;
    for r in locals {
        let (k, chain) = r?;
        worst_chain = worst_chain.max(chain);
        nonempty += usize::from(k > 0);
    }
    ensure(nonempty >= 6, || format!("only {nonempty} local covers with nonempty Lambda"))?;
    Ok(format!(
        "{} global covers, max constant {worst_global:.3}; {} local covers ({nonempty} with nonempty Lambda), max chain {worst_chain:.4}",
        corpus.len() * 6,
        cases.len()
    ))
}

fn c9_f2n() -> Outcome {
    let c = Constants::default();
    let corpus: Vec<(GroupFunction, f64)> = (0..30u64)
        .map(|i| {
            let mut rng = ChaCha8Rng::seed_from_u64(9000 + i);
            let n = 6 + (i as usize % 7);
            let g = Group::cube(n).unwrap();
            let f = match i % 5 {
                0 => GroupFunction::indicator(&g, &subspace_union(&g, 1 + i as usize % 3, 2, &mut rng).unwrap()),
                1 => GroupFunction::indicator(&g, &random_set(&g, rng.gen_range(0.2..0.8), &mut rng)),
                2 => {
                    let w = subspace_union(&g, 1, 2, &mut rng).unwrap();
                    let gamma = rng.gen_range(1..g.order());
                    GroupFunction::indicator(&g, &w).add(&GroupFunction::character(&g, gamma).scale(C64::new(0.1, 0.0))).unwrap()
                }
                3 => sum_of_characters(&g, &[1, 6, 24 % g.order()]).add(&random_real(&g, &mut rng).scale(C64::new(0.1, 0.0))).unwrap(),
                _ => GroupFunction::indicator(&g, &subspace_union(&g, 3, 1, &mut rng).unwrap()),
            };
            let eps = [0.25, 0.35, 0.5][i as usize % 3];
            (f, eps)
        })
        .collect();
    let rows: Vec<Result<(usize, usize), String>> = corpus
        .par_iter()
        .map(|(f, eps)| {
            let (plain, _) = f2n_approximate(f, *eps, false, &c).map_err(|e| e.to_string())?;
            let (refined, _) = f2n_approximate(f, *eps, true, &c).map_err(|e| e.to_string())?;
            let a = f.norm(Norm::A) / f.norm(Norm::Linf);
            ensure(plain.codim as f64 <= 8.0 * a.powi(3) / eps.powi(4), || "plain codim bound".into())?;
            let target = eps * f.norm(Norm::Linf) * (1.0 + 1e-12);
            for out in [&plain, &refined] {
                ensure(out.cosets_checked == 1 << out.codim, || "coset count".into())?;
                ensure(subspace_error(f, &out.gamma) <= target, || "L2 clause".into())?;
            }
            Ok((plain.codim, refined.codim))
        })
        .collect();
    let mut good = 0;
    let mut pairs = Vec::new();
    for r in rows {
        let (p, q) = r?;
        if q <= p {
            good += 1;
        }
        pairs.push(format!("{q}/{p}"));
    }
    ensure(good * 10 >= 9 * corpus.len(), || format!("refined <= plain on {good}/30: {}", pairs.join(" ")))?;
    Ok(format!("30 functions; refined codim <= plain on {good}/30"))
}

fn c10_bohr_iteration() -> Outcome {
    let c = Constants::default();
    let mut cases: Vec<(GroupFunction, f64)> = Vec::new();
    for (k, n) in [257usize, 1009, 4093].into_iter().enumerate() {
        let g = Group::cyclic(n).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(10_000 + k as u64);
        cases.push((GroupFunction::character(&g, 3), 0.25));
        cases.push((GroupFunction::indicator(&g, &interval(&g, 0.5).unwrap()), 0.0625));
        cases.push((GroupFunction::indicator(&g, &interval(&g, 0.3).unwrap()), 0.125));
        cases.push((GroupFunction::indicator(&g, &random_set(&g, 0.5, &mut rng)), 0.125));
        cases.push((sum_of_characters(&g, &[1, 5, 25]), 0.25));
        cases.push((random_real(&g, &mut rng), 0.25));
    }
    let rows: Vec<Result<(usize, usize), String>> = cases
        .par_iter()
        .map(|(f, eps)| {
            let (a, t) = bohr_approximate(f, *eps, &c).map_err(|e| e.to_string())?;
            ensure(t.rounds.len() <= t.budget + 1, || "budget".into())?;
            ensure(t.ledger_increases() && t.ledger_bounded(), || {
                let l: Vec<String> = t.rounds.iter().map(|r| format!("{:.4}(+{:.4})", r.ledger, r.required_increment)).collect();
                format!("ledger {}", l.join(" "))
            })?;
            let g = &f.group;
            let fs = f.norm(Norm::Linf);
            let b = bohr_set(g, &a.gamma, a.delta).unwrap();
            let big = f.convolve_measure(&b.cutoff()).unwrap();
            let inner = bohr_set(g, &a.gamma, a.delta_prime).unwrap();
            for &y in &inner.members {
                ensure(big.shift(y).max_abs_diff(&big) <= eps * fs * (1.0 + 1e-9), || "oscillation clause".into())?;
            }
            let h = f.sub(&big).unwrap();
            let worst = local_l2_profile_direct(&h, &inner).into_iter().fold(0.0, f64::max);
            ensure(worst <= eps * fs * (1.0 + 1e-9), || format!("L2 clause {worst}"))?;
            Ok((t.rounds.len(), a.gamma.len()))
        })
        .collect();
    let mut max_rounds = 0;
    for r in rows {
        max_rounds = max_rounds.max(r?.0);
    }
    Ok(format!("{} runs, at most {max_rounds} rounds, clauses verified on all translates", cases.len()))
}

/// A-norm / ln p of `{0..(p-1)/2}`, from an independent O(p^2) evaluation.
const AP_GOLDEN: [(usize, f64); 3] = [
    (101, 0.5309291554816447),
    (1009, 0.4601780175036633),
    (10007, 0.4248408968035626),
];

fn c11_littlewood() -> Outcome {
    let c = Constants::default();
    let mut notes = Vec::new();
    for (p, golden) in AP_GOLDEN {
        let g = Group::cyclic(p).unwrap();
        let set: Vec<usize> = (0..=(p - 1) / 2).collect();
        let ratio = GroupFunction::indicator(&g, &set).norm(Norm::A) / (p as f64).ln();
        ensure((ratio - golden).abs() <= 1e-6, || format!("p={p}: ratio {ratio}"))?;
        if p <= 1009 {
            let r = littlewood_certificate(&g, &set, &c).map_err(|e| e.to_string())?;
            ensure(!r.contradiction_fired && r.width_cost_ok, || format!("AP p={p}"))?;
        }
        notes.push(format!("{ratio:.4}"));
    }
    let g = Group::cyclic(1009).unwrap();
    let rows: Vec<Result<f64, String>> = (0..100u64)
        .into_par_iter()
        .map(|i| {
            let mut rng = ChaCha8Rng::seed_from_u64(11_000 + i);
            let set = random_set(&g, 0.5, &mut rng);
            let r = littlewood_certificate(&g, &set, &c).map_err(|e| e.to_string())?;
            ensure(!r.contradiction_fired, || "contradiction chain completed".into())?;
            ensure(r.width_cost_ok, || format!("width cost {}", r.width_cost))?;
            Ok(r.a_norm)
        })
        .collect();
    let mut min_norm = f64::INFINITY;
    for r in rows {
        min_norm = min_norm.min(r?);
    }
    let lp = (1009f64).ln();
    let lower = (lp / lp.ln().powi(3)).sqrt();
    ensure(min_norm >= lower, || format!("min A-norm {min_norm} below {lower}"))?;
    Ok(format!(
        "AP ratios {}; 100 random sets, min A-norm {min_norm:.3} >= {lower:.3}",
        notes.join(", ")
    ))
}

fn c12_ivt() -> Outcome {
    let primes: Vec<usize> = (2..=101).filter(|&p| (2..p).all(|d| p % d != 0)).collect();
    let rows: Vec<Result<(), String>> = (0..1000u64)
        .into_par_iter()
        .map(|i| {
            let mut rng = ChaCha8Rng::seed_from_u64(12_000 + i);
            let p = primes[rng.gen_range(0..primes.len())];
            let g = Group::cyclic(p).unwrap();
            let y = rng.gen_range(1..p);
            // a random walk along the y-orbit, lifted so the largest step is at most ||f||_inf
            let mut v = vec![0.0; p];
            let mut x = 0;
            let mut level = 0.0;
            for _ in 0..p {
                v[x] = level;
                level += rng.gen_range(-1.0..1.0);
                x = (x + y) % p;
            }
            if i % 2 == 1 {
                let shift = rng.gen_range(0.0..3.0) * p as f64;
                v.iter_mut().for_each(|t| *t += shift);
            }
            let step = (0..p).map(|x| (v[(x + y) % p] - v[x]).abs()).fold(0.0, f64::max);
            let lo = v.iter().cloned().fold(f64::INFINITY, f64::min);
            let sup = v.iter().map(|t| t.abs()).fold(0.0, f64::max);
            if step > sup {
                v.iter_mut().for_each(|t| *t += step - lo);
            }
            let f = GroupFunction::from_real(g.clone(), &v).unwrap();
            let sup = f.norm(Norm::Linf);
            let step = (0..p)
                .map(|x| (f.values[(x + y) % p].re - f.values[x].re).abs())
                .fold(0.0, f64::max);
            let eps = (step / sup).min(1.0);
            let x = discrete_ivt(&f, y, eps).map_err(|e| format!("p={p}: {e}"))?;
            let mean = f.mean().re;
            ensure((f.values[x].re - mean).abs() <= 0.5 * eps * sup * (1.0 + 1e-12), || format!("p={p}"))?;
            Ok(())
        })
        .collect();
    for r in rows {
        r?;
    }
    Ok("1000 admissible functions on Z/p, p <= 101".into())
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 12] = [
        ("transform correctness", c1_transform),
        ("large-spectrum bounds", c2_spectrum_bounds),
        ("Riesz exactness", c3_riesz),
        ("tau contract", c4_tau),
        ("auxiliary measures", c5_aux),
        ("Rider counts", c6_rider),
        ("Bohr suite", c7_bohr),
        ("cover suite", c8_cover),
        ("F2^n iteration", c9_f2n),
        ("general iteration", c10_bohr_iteration),
        ("Littlewood pipeline", c11_littlewood),
        ("discrete IVT", c12_ivt),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let result = run();
        let secs = t.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("criterion {:2} PASS {name} ({secs:.1}s): {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {:2} FAIL {name} ({secs:.1}s): {detail}", i + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}

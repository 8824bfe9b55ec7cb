//! Tunable constants.
//!
//! The underlying theorems only promise the existence of absolute
//! constants; the values here are engineering defaults. Every routine that
//! uses one reports the value it actually measured.

use std::fmt::Write as _;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
pub struct Constants {
    /// Relative tolerance for floating comparisons.
    pub tol: f64,
    /// Largest group order accepted.
    pub order_cap: usize,
    /// Largest character set that may be enumerated over `{-1,0,1}^k`.
    pub dissociation_cap: usize,
    /// Largest set for exhaustive Rider counts.
    pub rider_cap: usize,
    /// Regularity window: `|kappa| d <= c_r`.
    pub c_r: f64,
    /// Regularity ceiling on the measured constant.
    pub c_reg: f64,
    /// Number of candidate widths in `[delta/2, delta)`.
    pub regular_candidates: usize,
    /// Ceiling for `||beta~ - beta|| / (kappa d)`.
    pub c_smooth: f64,
    pub c_chang: f64,
    pub c_ag: f64,
    pub c_local: f64,
    /// Ceiling for `||mu_eta|| / (1 + log2 1/eta)`.
    pub c_aux: f64,
    /// `eta = c_eta eps^3 / A_f^2` in the general iteration.
    pub c_eta: f64,
    /// Correction rounds in the auxiliary-measure recursion.
    pub nearly_rounds: usize,
    /// Modulus of the circle replacement used by the lift.
    pub lift_modulus: usize,
    /// Number of probes for the local certification chain.
    pub crty_probes: usize,
    /// Safety factor on the iteration round budget.
    pub round_safety: f64,
    /// Seed for probe selection inside certifications.
    pub probe_seed: u64,
}

impl Default for Constants {
    fn default() -> Self {
        Constants {
            tol: 1e-9,
            order_cap: crate::group::DEFAULT_ORDER_CAP,
            dissociation_cap: 20,
            rider_cap: 12,
            c_r: 0.01,
            c_reg: 32.0,
            regular_candidates: 64,
            c_smooth: 64.0,
            c_chang: 8.0,
            c_ag: 8.0,
            c_local: 16.0,
            c_aux: 8.0,
            c_eta: 1.0 / 64.0,
            nearly_rounds: 40,
            lift_modulus: 4,
            crty_probes: 16,
            round_safety: 4.0,
            probe_seed: 0x5eed,
        }
    }
}

impl Constants {
    /// Sets a single knob by name.
    pub fn set(&mut self, key: &str, value: &str) -> Result<()> {
        let key = key.trim();
        let value = value.trim();
        let float = || -> Result<f64> {
            let v: f64 = value
                .parse()
                .map_err(|_| Error::Parse(format!("{key}: expected a number, got {value:?}")))?;
            if !(v.is_finite() && v > 0.0) {
                return Err(Error::InvalidParameter(format!("{key} must be positive")));
            }
            Ok(v)
        };
        let int = || -> Result<usize> {
            let v: usize = value
                .parse()
                .map_err(|_| Error::Parse(format!("{key}: expected an integer, got {value:?}")))?;
            if v == 0 {
                return Err(Error::InvalidParameter(format!("{key} must be positive")));
            }
            Ok(v)
        };
        match key {
            "tol" => self.tol = float()?,
            "order_cap" => self.order_cap = int()?,
            "dissociation_cap" => self.dissociation_cap = int()?,
            "rider_cap" => self.rider_cap = int()?,
            "c_r" => self.c_r = float()?,
            "c_reg" => self.c_reg = float()?,
            "regular_candidates" => self.regular_candidates = int()?,
            "c_smooth" => self.c_smooth = float()?,
            "c_chang" => self.c_chang = float()?,
            "c_ag" => self.c_ag = float()?,
            "c_local" => self.c_local = float()?,
            "c_aux" => self.c_aux = float()?,
            "c_eta" => self.c_eta = float()?,
            "nearly_rounds" => self.nearly_rounds = int()?,
            "lift_modulus" => {
                let m = int()?;
                if m < 3 {
                    return Err(Error::InvalidParameter("lift_modulus must be at least 3".into()));
                }
                self.lift_modulus = m;
            }
            "crty_probes" => self.crty_probes = int()?,
            "round_safety" => self.round_safety = float()?,
            "probe_seed" => {
                self.probe_seed = value
                    .parse()
                    .map_err(|_| Error::Parse(format!("probe_seed: bad integer {value:?}")))?
            }
            _ => return Err(Error::Parse(format!("unknown constant {key:?}"))),
        }
        Ok(())
    }

    /// Applies `k=v,k=v` overrides.
    pub fn apply_overrides(&mut self, text: &str) -> Result<()> {
        for pair in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (k, v) = pair
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("expected key=value, got {pair:?}")))?;
            self.set(k, v)?;
        }
        Ok(())
    }

    /// Renders the knobs as flat `key=value` lines.
    pub fn to_key_values(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "tol={}", self.tol);
        let _ = writeln!(s, "order_cap={}", self.order_cap);
        let _ = writeln!(s, "dissociation_cap={}", self.dissociation_cap);
        let _ = writeln!(s, "rider_cap={}", self.rider_cap);
        let _ = writeln!(s, "c_r={}", self.c_r);
        let _ = writeln!(s, "c_reg={}", self.c_reg);
        let _ = writeln!(s, "regular_candidates={}", self.regular_candidates);
        let _ = writeln!(s, "c_smooth={}", self.c_smooth);
        let _ = writeln!(s, "c_chang={}", self.c_chang);
        let _ = writeln!(s, "c_ag={}", self.c_ag);
        let _ = writeln!(s, "c_local={}", self.c_local);
        let _ = writeln!(s, "c_aux={}", self.c_aux);
        let _ = writeln!(s, "c_eta={}", self.c_eta);
        let _ = writeln!(s, "nearly_rounds={}", self.nearly_rounds);
        let _ = writeln!(s, "lift_modulus={}", self.lift_modulus);
        let _ = writeln!(s, "crty_probes={}", self.crty_probes);
        let _ = writeln!(s, "round_safety={}", self.round_safety);
        let _ = writeln!(s, "probe_seed={}", self.probe_seed);
        s
    }
}

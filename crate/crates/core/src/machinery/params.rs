//! The constant chain behind the main embedding argument, evaluated in
//! log10 space: the base quantity is
//!
//! ```text
//! eps = 1 / (200 k * Delta^(4000 c2 Delta (log2 Delta)^2))
//! ```
//!
//! which underflows any float for realistic Delta, so every derived constant
//! carries its log10 and, when representable, its natural value. The
//! regularity-lemma outputs (cluster-count cap, minimum order) and the two
//! external thresholds have no closed form and are taken as inputs.

use serde::{Deserialize, Serialize};

/// A positive quantity stored as log10; `natural` is populated when the
/// value fits in an `f64`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct LogValue {
    pub log10: f64,
    pub natural: Option<f64>,
}

impl LogValue {
    pub fn from_log10(log10: f64) -> Self {
        let natural = if log10.abs() < 300.0 {
            Some(10f64.powf(log10))
        } else {
            None
        };
        LogValue { log10, natural }
    }

    pub fn from_natural(x: f64) -> Self {
        assert!(x > 0.0, "log-space value must be positive");
        LogValue {
            log10: x.log10(),
            natural: Some(x),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ParameterInputs {
    /// Degree cap for the chorded cycle.
    pub delta: u32,
    /// Almost-bipartiteness index bound (1 for the even case).
    pub k: u32,
    /// Constant in the exponent of the linear Ramsey bound for
    /// bounded-degree graphs (an absolute constant with no known value).
    pub c2: f64,
    /// Cluster-count cap returned by the regularity lemma.
    pub m_reg_cap: f64,
    /// Minimum-order threshold returned by the regularity lemma.
    pub n_reg: f64,
    /// Minimum size at which the even-cycle stability dichotomy applies.
    pub n_even: f64,
    /// Minimum pair size at which single-pair path embedding is guaranteed.
    pub n_pair_path: f64,
}

/// The inequality chain the parameter choice is supposed to satisfy.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ParameterChecks {
    /// `d < Delta^-40`
    pub d_below_delta_pow_40: bool,
    /// `z >= 16 m_reg_cap` whenever the chord count is at most `c n`
    pub z_lower_bound_holds: bool,
    /// `beta < 10^-6` (even-cycle stability input range)
    pub beta_in_range: bool,
    /// `gamma < 10^-2` (odd-cycle stability input range)
    pub gamma_in_range: bool,
    /// `eps < 1/625` (multi-path embedding input range)
    pub eps_in_range: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ParameterSet {
    pub inputs: ParameterInputs,
    pub eps: LogValue,
    /// `beta = eps^(1/5)`
    pub beta: LogValue,
    /// `gamma = beta` (odd case)
    pub gamma: LogValue,
    /// `xi = eps^(1/100)`
    pub xi: LogValue,
    /// `d = 4 max(eps^(1/100), (8 Delta eps)^(1/Delta))`
    pub d: LogValue,
    /// `c = eps^2 / (16 m_reg_cap^2)`
    pub c: LogValue,
    /// `m_reg = n_even / eps^6` (lower bound handed to the regularity lemma)
    pub m_reg: LogValue,
    /// `n0 = m_reg_cap * n_pair_path / (4 eps^(1/2) (1 - eps))`
    pub n0: LogValue,
    pub checks: ParameterChecks,
}

impl ParameterSet {
    /// `z = eps^2 n / (m_reg_cap |D|)` in log10 space, for a cycle of
    /// length `10^log10_n` with `chord_count` chords.
    pub fn log10_z(&self, log10_n: f64, chord_count: f64) -> f64 {
        2.0 * self.eps.log10 + log10_n - self.inputs.m_reg_cap.log10() - chord_count.log10()
    }

    /// The guaranteed floor of `z` under the chord budget `|D| <= c n`:
    /// `eps^2 / (c * m_reg_cap)`.
    pub fn log10_z_floor(&self) -> f64 {
        2.0 * self.eps.log10 - self.c.log10 - self.inputs.m_reg_cap.log10()
    }
}

/// Evaluates the full constant chain. Expects `delta > 2`, `k >= 1`,
/// `c2 > 1`, `m_reg_cap >= 1`.
pub fn parameter_chain(inputs: ParameterInputs) -> ParameterSet {
    assert!(inputs.delta > 2, "degree cap must exceed 2");
    assert!(inputs.k >= 1, "index bound must be at least 1");
    assert!(inputs.c2 > 1.0, "c2 must exceed 1");
    assert!(inputs.m_reg_cap >= 1.0, "cluster cap must be at least 1");

    let delta = inputs.delta as f64;
    // exponent 4000 c2 Delta (log2 Delta)^2, logs base 2
    let exponent = 4000.0 * inputs.c2 * delta * delta.log2().powi(2);
    let log10_eps = -((200.0 * inputs.k as f64).log10() + exponent * delta.log10());
    let eps = LogValue::from_log10(log10_eps);

    let beta = LogValue::from_log10(log10_eps / 5.0);
    let xi = LogValue::from_log10(log10_eps / 100.0);
    let d = LogValue::from_log10(
        4f64.log10()
            + f64::max(
                log10_eps / 100.0,
                ((8.0 * delta).log10() + log10_eps) / delta,
            ),
    );
    let c = LogValue::from_log10(
        2.0 * log10_eps - 16f64.log10() - 2.0 * inputs.m_reg_cap.log10(),
    );
    let m_reg = LogValue::from_log10(inputs.n_even.log10() - 6.0 * log10_eps);
    // log10(1 - eps) is numerically zero at these magnitudes
    let one_minus_eps = eps.natural.map_or(0.0, |e| (1.0 - e).log10());
    let n0 = LogValue::from_log10(
        inputs.m_reg_cap.log10() + inputs.n_pair_path.log10()
            - 4f64.log10()
            - log10_eps / 2.0
            - one_minus_eps,
    );

    let set = ParameterSet {
        inputs,
        eps,
        beta,
        gamma: beta,
        xi,
        d,
        c,
        m_reg,
        n0,
        checks: ParameterChecks {
            d_below_delta_pow_40: false,
            z_lower_bound_holds: false,
            beta_in_range: false,
            gamma_in_range: false,
            eps_in_range: false,
        },
    };
    let checks = ParameterChecks {
        d_below_delta_pow_40: set.d.log10 < -40.0 * delta.log10(),
        // analytically z_floor = 16 m_reg_cap; allow float slack
        z_lower_bound_holds: set.log10_z_floor()
            >= (16.0 * inputs.m_reg_cap).log10() - 1e-9,
        beta_in_range: set.beta.log10 < -6.0,
        gamma_in_range: set.gamma.log10 < -2.0,
        eps_in_range: set.eps.log10 < -(625f64.log10()),
    };
    ParameterSet { checks, ..set }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn inputs(delta: u32, k: u32) -> ParameterInputs {
        ParameterInputs {
            delta,
            k,
            c2: 1.5,
            m_reg_cap: 1e4,
            n_reg: 1e6,
            n_even: 1e6,
            n_pair_path: 1e6,
        }
    }

    #[test]
    fn eps_matches_direct_formula() {
        let p = parameter_chain(ParameterInputs {
            c2: 1.0 + 1e-12,
            m_reg_cap: 100.0,
            ..inputs(3, 1)
        });
        let expected = -(4000.0 * 3.0 * 3f64.log2().powi(2) * 3f64.log10() + 200f64.log10());
        assert!((p.eps.log10 - expected).abs() < 1e-6);
        assert!(p.eps.natural.is_none(), "eps underflows f64");
        assert!(p.checks.d_below_delta_pow_40);
    }

    #[test]
    fn inequality_chain_over_the_grid() {
        for delta in 3..=10 {
            for k in 1..=4 {
                let p = parameter_chain(inputs(delta, k));
                assert!(p.checks.d_below_delta_pow_40, "delta={delta} k={k}");
                assert!(p.checks.z_lower_bound_holds, "delta={delta} k={k}");
                assert!(p.checks.beta_in_range);
                assert!(p.checks.gamma_in_range);
                assert!(p.checks.eps_in_range);
                assert!(p.eps.log10.is_finite());
                assert!(p.n0.log10.is_finite());
            }
        }
    }

    #[test]
    fn z_scales_with_cycle_length_and_chord_count() {
        let p = parameter_chain(inputs(4, 2));
        // at the chord budget |D| = c n the two z expressions coincide
        let log10_n = p.n0.log10;
        let log10_d_budget = p.c.log10 + log10_n;
        let z_at_budget = 2.0 * p.eps.log10 + log10_n
            - p.inputs.m_reg_cap.log10()
            - log10_d_budget;
        assert!((z_at_budget - p.log10_z_floor()).abs() < 1e-6);
        // at fixed cycle length, fewer chords leave longer segments
        assert!(p.log10_z(log10_n, 10.0) > p.log10_z(log10_n, 1000.0));
        // and longer cycles at fixed chord count leave longer segments
        assert!(p.log10_z(log10_n + 5.0, 10.0) > p.log10_z(log10_n, 10.0));
    }

    #[test]
    fn json_has_both_forms() {
        let p = parameter_chain(inputs(3, 1));
        let v: serde_json::Value = serde_json::to_value(&p).unwrap();
        assert!(v["eps"]["log10"].is_f64());
        assert!(v["eps"]["natural"].is_null());
        assert!(v["inputs"]["delta"].is_u64());
    }
}

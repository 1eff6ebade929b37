//! Classical baselines for the two coordination games.
//!
//! The restaurant game: N agents pick among N single-capacity restaurants
//! with no communication. One round fills a fraction 1 − 1/e of the
//! restaurants in the large-N limit; with winners staying put the occupied
//! fraction climbs day by day. Three deterministic curves describe that
//! climb — the quadratic-gain recurrence F_{n+1} = F_n + f(1−F_n)², its
//! continuum closed form, and the exact Poisson mean-field of the literal
//! re-randomization dynamics — alongside an agent-level Monte Carlo of the
//! literal dynamics itself.
//!
//! The stadium game: N·K agents pick among K gates with capacity αN each.
//! The per-gate survival probability is a binomial tail; exceeding arrivals
//! are harmed. Closed-form asymptotics for the all-gates-safe and
//! everyone-distinct events round out the module.

use crate::error::{Error, Result};
use crate::rng::Seed;
use crate::special::{binom_cdf, ln_gamma};
use crate::stats::SummaryStats;
use rand::Rng;
use rayon::prelude::*;

/// Restaurant-game configuration: `n` agents and restaurants, simulated for
/// `days` rounds over `trials` independent substreams.
#[derive(Debug, Clone, Copy)]
pub struct KrpConfig {
    pub n: u64,
    pub days: u32,
    pub trials: u32,
    pub seed: Seed,
}

impl KrpConfig {
    pub fn validate(&self) -> Result<()> {
        if self.n < 1 {
            return Err(Error::Domain("restaurant game needs n >= 1".into()));
        }
        if self.days < 1 {
            return Err(Error::Domain("restaurant game needs days >= 1".into()));
        }
        if self.trials < 1 {
            return Err(Error::Domain("restaurant game needs trials >= 1".into()));
        }
        Ok(())
    }
}

/// Stadium-game configuration: `gates * agents_per_gate` agents, gate
/// capacity `floor(alpha * agents_per_gate)`.
#[derive(Debug, Clone, Copy)]
pub struct KspConfig {
    pub agents_per_gate: u64,
    pub gates: u64,
    pub alpha: f64,
    pub trials: u32,
    pub seed: Seed,
}

impl KspConfig {
    pub fn validate(&self) -> Result<()> {
        if self.agents_per_gate < 1 {
            return Err(Error::Domain("stadium game needs agents_per_gate >= 1".into()));
        }
        if self.gates < 1 {
            return Err(Error::Domain("stadium game needs gates >= 1".into()));
        }
        if !(self.alpha >= 1.0) {
            return Err(Error::Domain(format!(
                "stadium game needs alpha >= 1, got {}",
                self.alpha
            )));
        }
        if self.trials < 1 {
            return Err(Error::Domain("stadium game needs trials >= 1".into()));
        }
        Ok(())
    }

    /// Per-gate capacity floor(alpha * agents_per_gate).
    pub fn capacity(&self) -> u64 {
        (self.alpha * self.agents_per_gate as f64).floor() as u64
    }

    pub fn total_agents(&self) -> u64 {
        self.agents_per_gate * self.gates
    }
}

/// One day of the occupied-fraction trajectory: the analytic recurrence and
/// continuum values, the exact mean-field of the literal dynamics, and the
/// Monte Carlo estimate when a simulation ran.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrajectoryRow {
    pub day: u32,
    pub f_recurrence: f64,
    pub f_continuum: f64,
    pub f_montecarlo: Option<f64>,
    pub f_meanfield: f64,
}

/// Gate arrivals for one stadium-game trial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GateOutcome {
    /// Arrivals per gate; sums to the total agent count.
    pub arrivals: Vec<u64>,
    /// Agents within capacity at their gate: Σ min(arrivals, capacity).
    pub safe: u64,
    /// Agents beyond capacity: total − safe.
    pub harmed: u64,
}

/// Trial summaries from the stadium Monte Carlo.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KspSummary {
    /// Harmed-agent counts per trial.
    pub harmed: SummaryStats,
    /// Per-trial fraction of gates with arrivals within capacity. Its mean
    /// estimates the single-gate cumulative probability.
    pub gate_within_capacity: SummaryStats,
    /// Per-trial indicator that every gate stayed within capacity.
    pub all_gates_safe: SummaryStats,
}

/// Everyone-picks-differently probability N!/Nᴺ, with the bare e^{-N}
/// comparison value that ignores the √(2πN) Stirling factor.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BestOutcomeProb {
    pub exact: f64,
    pub exp_minus_n: f64,
}

/// Large-N probability that a given restaurant is chosen by exactly `m`
/// agents: e⁻¹/m!.
pub fn krp_choice_prob(m: u64) -> f64 {
    (-1.0 - ln_gamma(m as f64 + 1.0)).exp()
}

/// Fraction of restaurants filled by one round of uniform choices in the
/// large-N limit: 1 − 1/e.
pub fn krp_single_day_fill() -> f64 {
    1.0 - (-1.0_f64).exp()
}

/// Occupied-fraction recurrence F_{n+1} = F_n + f(1−F_n)² with
/// F_1 = f = 1 − 1/e, for days 1..=days.
pub fn krp_recurrence(days: u32) -> Vec<f64> {
    let f = krp_single_day_fill();
    let mut out = Vec::with_capacity(days as usize);
    let mut cur = f;
    for _ in 0..days {
        out.push(cur);
        let miss = 1.0 - cur;
        cur += f * miss * miss;
    }
    out
}

/// Continuum solution of the recurrence: F = 1 − e/(e² + (n−1)(e−1)).
pub fn krp_continuum(n: f64) -> Result<f64> {
    if !(n >= 1.0) {
        return Err(Error::Domain(format!(
            "continuum solution defined for day >= 1, got {n}"
        )));
    }
    let e = std::f64::consts::E;
    Ok(1.0 - e / (e * e + (n - 1.0) * (e - 1.0)))
}

/// Exact Poisson mean-field of the literal dynamics:
/// G_{n+1} = G_n + (1−G_n)(1 − e^{−(1−G_n)}), G_1 = 1 − 1/e.
///
/// Unoccupied restaurants receive the (1−G)·N still-unserved agents at rate
/// 1−G each, so a fraction 1 − e^{−(1−G)} of them gains an owner per day.
pub fn krp_meanfield(days: u32) -> Vec<f64> {
    let mut out = Vec::with_capacity(days as usize);
    let mut cur = krp_single_day_fill();
    for _ in 0..days {
        out.push(cur);
        let miss = 1.0 - cur;
        cur += miss * (1.0 - (-miss).exp());
    }
    out
}

/// One stochastic round: every agent picks a restaurant uniformly; returns
/// the fraction of restaurants with at least one visitor.
pub fn krp_simulate_day(n: u64, seed: Seed) -> f64 {
    assert!(n >= 1, "need at least one agent");
    let mut rng = seed.rng();
    let mut visited = vec![false; n as usize];
    let mut occupied = 0u64;
    for _ in 0..n {
        let r = rng.random_range(0..n) as usize;
        if !visited[r] {
            visited[r] = true;
            occupied += 1;
        }
    }
    occupied as f64 / n as f64
}

/// Occupied fraction after each day of one literal-dynamics trial.
///
/// Winners keep their restaurant forever. Losers re-pick uniformly over all
/// `n` restaurants the next day. A restaurant without an owner serves one of
/// its arrivals (chosen uniformly; identities are exchangeable, so only the
/// count of new owners enters the trajectory); an owned restaurant serves
/// its owner and turns all arrivals away.
pub fn krp_learning_trial(n: u64, days: u32, seed: Seed) -> Vec<f64> {
    assert!(n >= 1, "need at least one agent");
    let mut rng = seed.rng();
    let mut owned = vec![false; n as usize];
    let mut owners = 0u64;
    let mut arrivals = vec![0u64; n as usize];
    let mut fractions = Vec::with_capacity(days as usize);
    for _ in 0..days {
        let unserved = n - owners;
        for slot in arrivals.iter_mut() {
            *slot = 0;
        }
        for _ in 0..unserved {
            let r = rng.random_range(0..n) as usize;
            arrivals[r] += 1;
        }
        for (r, &count) in arrivals.iter().enumerate() {
            if count > 0 && !owned[r] {
                owned[r] = true;
                owners += 1;
            }
        }
        fractions.push(owners as f64 / n as f64);
    }
    fractions
}

/// Trajectory of the literal dynamics averaged over `cfg.trials` substreams,
/// with the analytic recurrence, continuum, and mean-field columns attached.
pub fn krp_simulate_learning(cfg: &KrpConfig) -> Result<Vec<TrajectoryRow>> {
    cfg.validate()?;
    let per_trial: Vec<Vec<f64>> = (0..cfg.trials)
        .into_par_iter()
        .map(|t| krp_learning_trial(cfg.n, cfg.days, cfg.seed.substream(t as u64)))
        .collect();
    let recurrence = krp_recurrence(cfg.days);
    let meanfield = krp_meanfield(cfg.days);
    let mut rows = Vec::with_capacity(cfg.days as usize);
    for d in 0..cfg.days as usize {
        let day_samples: Vec<f64> = per_trial.iter().map(|t| t[d]).collect();
        let mc = SummaryStats::from_samples(&day_samples)?;
        rows.push(TrajectoryRow {
            day: d as u32 + 1,
            f_recurrence: recurrence[d],
            f_continuum: krp_continuum(d as f64 + 1.0)?,
            f_montecarlo: Some(mc.mean),
            f_meanfield: meanfield[d],
        });
    }
    Ok(rows)
}

/// Cumulative probability that one gate is approached by between 1 and
/// floor(alpha·n) of the n·k agents: a binomial tail at p = 1/k starting
/// from m = 1.
pub fn ksp_cumulative_prob(n: u64, k: u64, alpha: f64) -> f64 {
    assert!(n >= 1 && k >= 1, "need at least one agent and one gate");
    assert!(alpha >= 1.0, "capacity factor below 1 is not a stadium game");
    let nk = n * k;
    let cap = ((alpha * n as f64).floor() as u64).min(nk);
    binom_cdf(nk, 1.0 / k as f64, 1, cap)
        .expect("tail bounds are valid by construction")
}

/// One stadium trial: all agents pick gates uniformly at random.
pub fn ksp_simulate_trial(cfg: &KspConfig, trial: u64) -> GateOutcome {
    let mut rng = cfg.seed.substream(trial).rng();
    let k = cfg.gates;
    let mut arrivals = vec![0u64; k as usize];
    for _ in 0..cfg.total_agents() {
        arrivals[rng.random_range(0..k) as usize] += 1;
    }
    let cap = cfg.capacity();
    let safe: u64 = arrivals.iter().map(|&c| c.min(cap)).sum();
    GateOutcome {
        harmed: cfg.total_agents() - safe,
        safe,
        arrivals,
    }
}

/// Stadium Monte Carlo over independent trial substreams.
pub fn ksp_simulate(cfg: &KspConfig) -> Result<KspSummary> {
    cfg.validate()?;
    let cap = cfg.capacity();
    let k = cfg.gates as f64;
    let per_trial: Vec<(f64, f64, f64)> = (0..cfg.trials)
        .into_par_iter()
        .map(|t| {
            let outcome = ksp_simulate_trial(cfg, t as u64);
            let within = outcome.arrivals.iter().filter(|&&c| c <= cap).count();
            (
                outcome.harmed as f64,
                within as f64 / k,
                if outcome.harmed == 0 { 1.0 } else { 0.0 },
            )
        })
        .collect();
    let harmed: Vec<f64> = per_trial.iter().map(|t| t.0).collect();
    let within: Vec<f64> = per_trial.iter().map(|t| t.1).collect();
    let all_safe: Vec<f64> = per_trial.iter().map(|t| t.2).collect();
    Ok(KspSummary {
        harmed: SummaryStats::from_samples(&harmed)?,
        gate_within_capacity: SummaryStats::from_samples(&within)?,
        all_gates_safe: SummaryStats::from_samples(&all_safe)?,
    })
}

/// Exact probability that every gate stays within capacity at alpha = 1:
/// (NK)! / (N!)ᴷ · K^(−NK), the uniform multinomial mass of the perfectly
/// balanced outcome.
pub fn all_safe_exact(n: u64, k: u64) -> Result<f64> {
    if n < 1 || k < 1 {
        return Err(Error::Domain("need n, k >= 1".into()));
    }
    let nk = n * k;
    if nk > 10_000 {
        return Err(Error::Domain(format!(
            "exact all-safe probability guarded to n*k <= 10000, got {nk}"
        )));
    }
    let ln = ln_gamma(nk as f64 + 1.0)
        - k as f64 * ln_gamma(n as f64 + 1.0)
        - nk as f64 * (k as f64).ln();
    Ok(ln.exp())
}

/// Stirling asymptotic of the balanced-outcome probability:
/// √(K/(2πN)^(K−1)).
pub fn all_safe_asymptotic(n: u64, k: u64) -> f64 {
    assert!(n >= 1 && k >= 1, "need n, k >= 1");
    let ln = 0.5 * ((k as f64).ln() - (k as f64 - 1.0) * (2.0 * std::f64::consts::PI * n as f64).ln());
    ln.exp()
}

/// Probability that N agents spontaneously pick N distinct restaurants:
/// N!/Nᴺ, with the bare e^{−N} comparison value.
pub fn best_outcome_prob(n: u64) -> BestOutcomeProb {
    assert!(n >= 1, "need n >= 1");
    let nf = n as f64;
    BestOutcomeProb {
        exact: (ln_gamma(nf + 1.0) - nf * nf.ln()).exp(),
        exp_minus_n: (-nf).exp(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const E_INV: f64 = 0.367_879_441_171_442_33;

    fn cfg_krp(n: u64, days: u32, trials: u32, seed: u64) -> KrpConfig {
        KrpConfig {
            n,
            days,
            trials,
            seed: Seed::new(seed),
        }
    }

    #[test]
    fn choice_prob_values() {
        assert!((krp_choice_prob(0) - E_INV).abs() < 1e-13);
        assert!((krp_choice_prob(1) - E_INV).abs() < 1e-13);
        assert!((krp_choice_prob(2) - 0.183_939_720_585_721_16).abs() < 1e-13);
    }

    #[test]
    fn single_day_fill_value() {
        let f = krp_single_day_fill();
        assert!((f - 0.632_120_558_828_557_7).abs() < 1e-15);
        assert!((f - (1.0 - krp_choice_prob(0))).abs() < 1e-13);
    }

    #[test]
    fn recurrence_frozen_values() {
        let f = krp_recurrence(25);
        assert_eq!(f.len(), 25);
        assert!((f[0] - 0.632_120_558_829).abs() < 1e-12);
        assert!((f[1] - 0.717_668_773_697).abs() < 1e-12);
        assert!((f[9] - 0.891_864_983_949).abs() < 1e-12);
        assert!(f[9] < 0.90);
        assert!((f[24] - 0.947_925_981_296).abs() < 1e-12);
    }

    #[test]
    fn recurrence_monotone_bounded() {
        let f = krp_recurrence(200);
        for w in f.windows(2) {
            assert!(w[1] >= w[0]);
            assert!(w[1] <= 1.0);
        }
    }

    #[test]
    fn continuum_frozen_values() {
        assert!((krp_continuum(1.0).unwrap() - 0.632_120_558_829).abs() < 1e-12);
        assert!((krp_continuum(2.0).unwrap() - 0.701_528_388_413).abs() < 1e-12);
        assert!((krp_continuum(10.0).unwrap() - 0.881_056_695_051).abs() < 1e-12);
    }

    #[test]
    fn continuum_rejects_day_below_one() {
        assert!(matches!(krp_continuum(0.99), Err(Error::Domain(_))));
        assert!(matches!(krp_continuum(f64::NAN), Err(Error::Domain(_))));
    }

    #[test]
    fn recurrence_tracks_continuum_within_five_percent() {
        let f = krp_recurrence(25);
        for (i, &fi) in f.iter().enumerate() {
            let c = krp_continuum(i as f64 + 1.0).unwrap();
            assert!((fi - c).abs() / c < 0.05, "day {}: {fi} vs {c}", i + 1);
            assert!((fi - c).abs() / fi < 0.05, "day {}: {fi} vs {c}", i + 1);
        }
    }

    #[test]
    fn meanfield_frozen_values() {
        let g = krp_meanfield(50);
        assert!((g[0] - 0.632_120_558_829).abs() < 1e-12);
        assert!((g[1] - 0.745_353_619_956).abs() < 1e-12);
        assert!((g[9] - 0.920_261_827_251).abs() < 1e-12);
        assert!((g[49] - 0.981_229_409_307).abs() < 1e-12);
    }

    #[test]
    fn meanfield_monotone_toward_one() {
        let g = krp_meanfield(200);
        for w in g.windows(2) {
            assert!(w[1] > w[0]);
            assert!(w[1] < 1.0);
        }
        assert!((g[199] - 0.995_096_798_079).abs() < 1e-12);
    }

    #[test]
    fn meanfield_exceeds_recurrence_after_day_one() {
        let f = krp_recurrence(25);
        let g = krp_meanfield(25);
        assert_eq!(f[0], g[0]);
        for d in 1..25 {
            assert!(g[d] > f[d], "day {}: {} <= {}", d + 1, g[d], f[d]);
        }
    }

    #[test]
    fn simulate_day_single_agent() {
        assert_eq!(krp_simulate_day(1, Seed::new(5)), 1.0);
    }

    #[test]
    fn simulate_day_deterministic() {
        let a = krp_simulate_day(1000, Seed::new(99));
        let b = krp_simulate_day(1000, Seed::new(99));
        assert_eq!(a, b);
        assert_ne!(a, krp_simulate_day(1000, Seed::new(100)));
    }

    #[test]
    fn simulate_day_near_limit() {
        // Single large trial; fixed seed makes this deterministic. The
        // per-trial spread at n = 10^4 is about 0.003.
        let fill = krp_simulate_day(10_000, Seed::new(2));
        assert!((fill - 0.6321).abs() < 0.02, "fill {fill}");
    }

    #[test]
    fn learning_trial_monotone_every_day() {
        for t in 0..20 {
            let traj = krp_learning_trial(300, 12, Seed::new(31).substream(t));
            for w in traj.windows(2) {
                assert!(w[1] >= w[0]);
            }
            assert!(*traj.last().unwrap() <= 1.0);
        }
    }

    #[test]
    fn learning_matches_meanfield_early_days() {
        let rows = krp_simulate_learning(&cfg_krp(2000, 3, 40, 7)).unwrap();
        let g = krp_meanfield(3);
        for (row, want) in rows.iter().zip(&g) {
            let mc = row.f_montecarlo.unwrap();
            assert!(
                (mc - want).abs() < 0.02,
                "day {}: mc {mc} vs meanfield {want}",
                row.day
            );
        }
        // Day 2 of the literal dynamics outruns the quadratic-gain recurrence.
        assert!(rows[1].f_montecarlo.unwrap() > rows[1].f_recurrence);
    }

    #[test]
    fn learning_rows_carry_analytic_columns() {
        let rows = krp_simulate_learning(&cfg_krp(50, 4, 3, 11)).unwrap();
        let f = krp_recurrence(4);
        let g = krp_meanfield(4);
        assert_eq!(rows.len(), 4);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.day as usize, i + 1);
            assert_eq!(row.f_recurrence, f[i]);
            assert_eq!(row.f_meanfield, g[i]);
            assert_eq!(row.f_continuum, krp_continuum(i as f64 + 1.0).unwrap());
            let mc = row.f_montecarlo.unwrap();
            assert!((0.0..=1.0).contains(&mc));
        }
    }

    #[test]
    fn learning_rejects_bad_config() {
        assert!(krp_simulate_learning(&cfg_krp(0, 1, 1, 0)).is_err());
        assert!(krp_simulate_learning(&cfg_krp(5, 0, 1, 0)).is_err());
        assert!(krp_simulate_learning(&cfg_krp(5, 1, 0, 0)).is_err());
    }

    #[test]
    fn ksp_cumulative_frozen_values() {
        assert!((ksp_cumulative_prob(100, 10, 1.0) - 0.526_599_081_295).abs() < 1e-9);
        assert!((ksp_cumulative_prob(1000, 10, 1.05) - 0.953_072_701_718).abs() < 1e-9);
        assert!((ksp_cumulative_prob(500, 20, 1.0) - 0.511_895_032_957).abs() < 1e-9);
        assert!((ksp_cumulative_prob(20, 4, 1.0) - 0.559_706_324_296).abs() < 1e-9);
    }

    #[test]
    fn ksp_cumulative_decreases_toward_half() {
        let mut prev = 1.0;
        for &n in &[100u64, 500, 1000, 10_000] {
            let p = ksp_cumulative_prob(n, 10, 1.0);
            assert!(p < prev && p > 0.5, "n={n}: {p}");
            let p20 = ksp_cumulative_prob(n, 20, 1.0);
            assert_eq!(format!("{p:.4}"), format!("{p20:.4}"), "k-independence at n={n}");
            prev = p;
        }
    }

    fn cfg_ksp(n: u64, k: u64, alpha: f64, trials: u32, seed: u64) -> KspConfig {
        KspConfig {
            agents_per_gate: n,
            gates: k,
            alpha,
            trials,
            seed: Seed::new(seed),
        }
    }

    #[test]
    fn ksp_trial_conserves_agents() {
        let cfg = cfg_ksp(20, 4, 1.0, 1, 3);
        for t in 0..50 {
            let o = ksp_simulate_trial(&cfg, t);
            assert_eq!(o.arrivals.iter().sum::<u64>(), 80);
            assert_eq!(o.safe + o.harmed, 80);
            let cap = cfg.capacity();
            let safe: u64 = o.arrivals.iter().map(|&c| c.min(cap)).sum();
            assert_eq!(o.safe, safe);
        }
    }

    #[test]
    fn ksp_capacity_beyond_population_harms_nobody() {
        let cfg = cfg_ksp(20, 4, 4.0, 64, 9);
        let summary = ksp_simulate(&cfg).unwrap();
        assert_eq!(summary.harmed.mean, 0.0);
        assert_eq!(summary.harmed.max, 0.0);
        assert_eq!(summary.all_gates_safe.mean, 1.0);
    }

    #[test]
    fn ksp_gate_indicator_tracks_binomial_tail() {
        let cfg = cfg_ksp(20, 4, 1.0, 2000, 12);
        let summary = ksp_simulate(&cfg).unwrap();
        let analytic = ksp_cumulative_prob(20, 4, 1.0);
        let err = (summary.gate_within_capacity.mean - analytic).abs();
        assert!(err < 0.02, "mc {} vs analytic {analytic}", summary.gate_within_capacity.mean);
        // The all-safe event is strictly rarer than a single safe gate.
        assert!(summary.all_gates_safe.mean < summary.gate_within_capacity.mean);
    }

    #[test]
    fn ksp_rejects_bad_config() {
        assert!(ksp_simulate(&cfg_ksp(0, 4, 1.0, 1, 0)).is_err());
        assert!(ksp_simulate(&cfg_ksp(5, 0, 1.0, 1, 0)).is_err());
        assert!(ksp_simulate(&cfg_ksp(5, 4, 0.9, 1, 0)).is_err());
        assert!(ksp_simulate(&cfg_ksp(5, 4, 1.0, 0, 0)).is_err());
    }

    #[test]
    fn all_safe_exact_values() {
        assert!((all_safe_exact(1, 2).unwrap() - 0.5).abs() < 1e-12);
        assert!((all_safe_exact(50, 2).unwrap() - 0.079_589_237_387_2).abs() < 1e-9);
        assert!((all_safe_exact(10, 3).unwrap() - 0.026_960_834_761_9).abs() < 1e-10);
    }

    #[test]
    fn all_safe_exact_overflow_guard() {
        assert!(matches!(all_safe_exact(101, 100), Err(Error::Domain(_))));
        assert!(all_safe_exact(100, 100).is_ok());
    }

    #[test]
    fn all_safe_asymptotic_values() {
        assert!((all_safe_asymptotic(50, 2) - 0.079_788_456_080_3).abs() < 1e-10);
        assert_eq!(all_safe_asymptotic(7, 1), 1.0);
        let tiny = all_safe_asymptotic(100, 10);
        assert!((tiny - 8.094_510_530_4e-13).abs() < 1e-21, "got {tiny}");
    }

    #[test]
    fn all_safe_ratio_near_one() {
        let ratio = all_safe_exact(50, 2).unwrap() / all_safe_asymptotic(50, 2);
        assert!((ratio - 1.0).abs() < 0.005, "ratio {ratio}");
        let ratio3 = all_safe_exact(10, 3).unwrap() / all_safe_asymptotic(10, 3);
        assert!((ratio3 - 1.0).abs() < 0.05, "ratio {ratio3}");
    }

    #[test]
    fn best_outcome_small_cases() {
        let b = best_outcome_prob(1);
        assert!((b.exact - 1.0).abs() < 1e-14);
        let b = best_outcome_prob(2);
        assert!((b.exact - 0.5).abs() < 1e-13);
        assert!((b.exp_minus_n - (-2.0_f64).exp()).abs() < 1e-16);
    }

    #[test]
    fn best_outcome_hundred_matches_stirling() {
        let b = best_outcome_prob(100);
        assert!((b.exact - 9.332_621_544_39e-43).abs() < 1e-51);
        let stirling = (-100.0_f64).exp() * (200.0 * std::f64::consts::PI).sqrt();
        assert!((b.exact / stirling - 1.0).abs() < 1e-3);
        // The bare exponential is ~25x smaller; the gap is the √(2πN) factor.
        assert!(b.exact / b.exp_minus_n > 20.0);
    }
}

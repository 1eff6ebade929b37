//! CSV builders for the subcommands.
//!
//! Each builder returns the complete file body (header row first, LF line
//! endings, "." decimal separator) so tests can pin exact bytes. Probability
//! columns are fixed at 6 decimal places; the headline table also carries a
//! 4-decimal rendering for direct comparison.

use kolkata_sim::classical::{
    krp_continuum, krp_meanfield, krp_recurrence, krp_simulate_learning, ksp_cumulative_prob,
    ksp_simulate, KrpConfig, KspConfig,
};
use kolkata_sim::coordination::{assign_gates, assign_restaurants};
use kolkata_sim::nash::{verify_equilibria, EquilibriumCandidate, TwoPlayerQuantumGame};
use kolkata_sim::qhall::{
    expand_monomials, measurement_distribution, sample_measurement, slater_amplitude,
    vandermonde_amplitude, SlaterState,
};
use kolkata_sim::stats::chi_square_uniform;
use kolkata_sim::{Error, Result, Seed};
use num_complex::Complex64;
use rand::Rng;
use std::fmt::Write as _;

/// The sixteen headline gate configurations, in presentation order: the two
/// alpha = 1 blocks (K = 10, then K = 20), then alpha = 1.05 and alpha = 1.1.
const TABLE1_ROWS: [(f64, u64, u64); 16] = [
    (1.0, 100, 10),
    (1.0, 500, 10),
    (1.0, 1_000, 10),
    (1.0, 10_000, 10),
    (1.0, 100, 20),
    (1.0, 500, 20),
    (1.0, 1_000, 20),
    (1.0, 10_000, 20),
    (1.05, 100, 10),
    (1.05, 500, 10),
    (1.05, 1_000, 10),
    (1.05, 10_000, 10),
    (1.1, 100, 10),
    (1.1, 500, 10),
    (1.1, 1_000, 10),
    (1.1, 10_000, 10),
];

/// Cumulative single-gate safety probability for every headline row.
pub fn table1() -> String {
    let mut out = String::from("alpha,n,k,p,p_4dp\n");
    for (alpha, n, k) in TABLE1_ROWS {
        let p = ksp_cumulative_prob(n, k, alpha);
        writeln!(out, "{alpha},{n},{k},{p:.6},{p:.4}").unwrap();
    }
    out
}

/// Occupied-fraction trajectory of the restaurant game: the day-by-day
/// recurrence, its continuum closed form, their relative gap, and the exact
/// mean-field of the literal re-randomization dynamics.
pub fn fig1(days: u32) -> Result<String> {
    if days < 1 {
        return Err(Error::Domain("trajectory needs days >= 1".into()));
    }
    let recurrence = krp_recurrence(days);
    let meanfield = krp_meanfield(days);
    let mut out = String::from("n,F_recurrence,F_continuum,rel_error,G_meanfield\n");
    for day in 1..=days {
        let f = recurrence[(day - 1) as usize];
        let c = krp_continuum(day as f64)?;
        let rel = (f - c).abs() / f;
        let g = meanfield[(day - 1) as usize];
        writeln!(out, "{day},{f:.6},{c:.6},{rel:.6},{g:.6}").unwrap();
    }
    Ok(out)
}

/// Classical restaurant game: per-day analytic columns plus the Monte Carlo
/// estimate of the literal learning dynamics.
pub fn krp_classical(n: u64, days: u32, trials: u32, seed: Seed) -> Result<String> {
    let cfg = KrpConfig { n, days, trials, seed };
    let rows = krp_simulate_learning(&cfg)?;
    let mut out = String::from("day,f_recurrence,f_continuum,f_meanfield,f_montecarlo\n");
    for row in rows {
        let mc = row
            .f_montecarlo
            .expect("the simulating path fills the Monte Carlo column");
        writeln!(
            out,
            "{},{:.6},{:.6},{:.6},{:.6}",
            row.day, row.f_recurrence, row.f_continuum, row.f_meanfield, mc
        )
        .unwrap();
    }
    Ok(out)
}

/// Quantum restaurant round: one measurement of the shared state sends every
/// agent to a distinct restaurant, so the occupancy column is identically 1.
pub fn krp_quantum(n: u64, seed: Seed) -> Result<String> {
    if n < 1 {
        return Err(Error::Domain("restaurant game needs n >= 1".into()));
    }
    let outcome = sample_measurement(n, seed);
    let assignment = assign_restaurants(&outcome)?;
    let occupancy = assignment.occupancy();
    let mut out = String::from("agent,restaurant,occupancy\n");
    for (agent, &restaurant) in assignment.agent_to_restaurant.iter().enumerate() {
        writeln!(out, "{agent},{restaurant},{occupancy:.6}").unwrap();
    }
    Ok(out)
}

/// Classical stadium game: Monte Carlo summary of harmed counts, the
/// per-gate within-capacity indicator, and the all-gates-safe indicator.
pub fn ksp_classical(n: u64, k: u64, alpha: f64, trials: u32, seed: Seed) -> Result<String> {
    let cfg = KspConfig {
        agents_per_gate: n,
        gates: k,
        alpha,
        trials,
        seed,
    };
    let summary = ksp_simulate(&cfg)?;
    let mut out = String::from(
        "trials,capacity,harmed_mean,harmed_std_error,harmed_min,harmed_max,\
         gate_within_capacity_mean,all_gates_safe_mean\n",
    );
    writeln!(
        out,
        "{},{},{:.6},{:.6},{:.6},{:.6},{:.6},{:.6}",
        trials,
        cfg.capacity(),
        summary.harmed.mean,
        summary.harmed.std_error,
        summary.harmed.min,
        summary.harmed.max,
        summary.gate_within_capacity.mean,
        summary.all_gates_safe.mean
    )
    .unwrap();
    Ok(out)
}

/// Quantum stadium round: one measurement, momenta mapped to gates by
/// residue, giving exactly N arrivals per gate and zero harmed agents for
/// any alpha >= 1.
pub fn ksp_quantum(n: u64, k: u64, alpha: f64, seed: Seed) -> Result<String> {
    if n < 1 || k < 1 {
        return Err(Error::Domain(
            "stadium game needs agents_per_gate >= 1 and gates >= 1".into(),
        ));
    }
    if !(alpha >= 1.0) {
        return Err(Error::Domain(format!(
            "stadium game needs alpha >= 1, got {alpha}"
        )));
    }
    let total = n
        .checked_mul(k)
        .ok_or_else(|| Error::Domain("agent count n * k overflows".into()))?;
    let outcome = sample_measurement(total, seed);
    let assignment = assign_gates(&outcome, k)?;
    let capacity = (alpha * n as f64).floor() as u64;
    let mut out = String::from("gate,arrivals,capacity,harmed\n");
    for (gate, &arrivals) in assignment.arrivals().iter().enumerate() {
        let harmed = arrivals.saturating_sub(capacity);
        writeln!(out, "{gate},{arrivals},{capacity},{harmed}").unwrap();
    }
    Ok(out)
}

/// Equilibrium report for the two-diner entangled game: both pure profiles
/// and the interior stationary point, with payoffs and validity flags.
/// With `sweep` the entanglement weight runs over the grid instead of taking
/// the single supplied value.
pub fn nash(u1: f64, u2: f64, a_sq: f64, grid: usize, sweep: bool) -> Result<String> {
    if grid < 11 {
        return Err(Error::Domain(format!(
            "best-response grid needs at least 11 points, got {grid}"
        )));
    }
    let mut out = String::from("u1,u2,a_sq,p1,p2,payoff1,payoff2,candidate_type,is_nash\n");
    if sweep {
        for i in 0..grid {
            let a = i as f64 / (grid - 1) as f64;
            let game = TwoPlayerQuantumGame::new(u1, u2, a)?;
            push_equilibria(&mut out, &game, grid);
        }
    } else {
        let game = TwoPlayerQuantumGame::new(u1, u2, a_sq)?;
        push_equilibria(&mut out, &game, grid);
    }
    Ok(out)
}

fn push_equilibria(out: &mut String, game: &TwoPlayerQuantumGame, grid: usize) {
    let set = verify_equilibria(game, grid);
    for (label, cand) in [
        ("pure_11", &set.pure_11),
        ("pure_00", &set.pure_00),
        ("mixed", &set.mixed),
    ] {
        write_candidate(out, game, label, cand);
    }
}

fn write_candidate(
    out: &mut String,
    game: &TwoPlayerQuantumGame,
    label: &str,
    cand: &EquilibriumCandidate,
) {
    writeln!(
        out,
        "{},{},{:.6},{:.6},{:.6},{:.6},{:.6},{},{}",
        game.u1,
        game.u2,
        game.a_sq,
        cand.profile.p1,
        cand.profile.p2,
        cand.payoffs.dollar1,
        cand.payoffs.dollar2,
        label,
        cand.is_nash
    )
    .unwrap();
}

/// Measurement-model diagnostics: expansion size and coefficient magnitudes,
/// exact distribution uniformity, sampler chi-square over all n_e! outcomes,
/// and the determinant-versus-product cross-check on random positions.
pub fn quantum_verify(n_e: u64, samples: u64, seed: Seed) -> Result<String> {
    if n_e < 2 {
        return Err(Error::Domain(
            "uniformity statistics need at least 2 particles".into(),
        ));
    }
    if samples < 1 {
        return Err(Error::Domain("sampler needs samples >= 1".into()));
    }
    let terms = expand_monomials(n_e)?;
    let coeff_magnitude_ok = terms.iter().all(|t| t.sign == 1 || t.sign == -1);

    let uniform = 1.0 / terms.len() as f64;
    let distribution_uniform = measurement_distribution(n_e)?
        .values()
        .all(|&p| p == uniform);

    let sampler_seed = seed.substream(0);
    let mut counts = vec![0u64; terms.len()];
    for draw in 0..samples {
        let outcome = sample_measurement(n_e, sampler_seed.substream(draw));
        counts[perm_rank(&outcome.momenta)] += 1;
    }
    let chi = chi_square_uniform(&counts)?;

    let det_err = det_product_max_rel_err(n_e, 100, seed.substream(1))?;

    let mut out = String::from(
        "n_e,terms,coeff_magnitude_ok,distribution_uniform,samples,\
         chi_square_statistic,chi_square_dof,chi_square_p_value,det_product_max_rel_err\n",
    );
    writeln!(
        out,
        "{},{},{},{},{},{:.6},{},{:.6},{:.3e}",
        n_e,
        terms.len(),
        coeff_magnitude_ok,
        distribution_uniform,
        samples,
        chi.statistic,
        chi.dof,
        chi.p_value,
        det_err
    )
    .unwrap();
    Ok(out)
}

/// Rank of a permutation of {0..n−1} in lexicographic order, accumulated in
/// mixed radix from the Lehmer code.
fn perm_rank(perm: &[u64]) -> usize {
    let n = perm.len();
    let mut rank = 0usize;
    for i in 0..n {
        let smaller_later = perm[i + 1..].iter().filter(|&&x| x < perm[i]).count();
        rank = rank * (n - i) + smaller_later;
    }
    rank
}

/// Largest relative deviation between the bare-power determinant and the
/// signed coordinate product over `draws` random position sets.
fn det_product_max_rel_err(n_e: u64, draws: u64, seed: Seed) -> Result<f64> {
    let state = SlaterState::new(n_e, 1.0)?;
    let pair_count = n_e * (n_e - 1) / 2;
    let sign = if pair_count % 2 == 0 { 1.0 } else { -1.0 };
    let mut rng = seed.rng();
    let mut worst = 0.0f64;
    for _ in 0..draws {
        let zs: Vec<Complex64> = (0..n_e)
            .map(|_| Complex64::new(rng.random_range(-2.0..2.0), rng.random_range(-2.0..2.0)))
            .collect();
        let det = slater_amplitude(&state, &zs, false)?;
        let product = vandermonde_amplitude(&zs) * sign;
        let rel = (det - product).norm() / product.norm();
        if rel > worst {
            worst = rel;
        }
    }
    Ok(worst)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table1_has_all_sixteen_rows() {
        let csv = table1();
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines.len(), 17);
        assert_eq!(lines[0], "alpha,n,k,p,p_4dp");
        assert_eq!(lines[1], "1,100,10,0.526599,0.5266");
        assert_eq!(lines[11], "1.05,1000,10,0.953073,0.9531");
        assert!(lines[4].ends_with(",0.5027"));
        assert!(lines[5].ends_with(",0.5266"));
        assert!(lines[14].ends_with(",0.9907"));
    }

    #[test]
    fn fig1_starts_at_the_shared_initial_condition() {
        let csv = fig1(25).unwrap();
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines.len(), 26);
        assert_eq!(lines[1], "1,0.632121,0.632121,0.000000,0.632121");
        assert!(lines[2].starts_with("2,0.717669,0.701528,"));
        for line in &lines[1..] {
            let rel: f64 = line.split(',').nth(3).unwrap().parse().unwrap();
            assert!(rel < 0.05);
        }
    }

    #[test]
    fn fig1_rejects_zero_days() {
        assert!(matches!(fig1(0), Err(Error::Domain(_))));
    }

    #[test]
    fn krp_classical_has_one_row_per_day() {
        let csv = krp_classical(200, 3, 5, Seed::new(11)).unwrap();
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines.len(), 4);
        assert!(lines[1].starts_with("1,0.632121,0.632121,0.632121,"));
    }

    #[test]
    fn krp_quantum_occupancy_is_exactly_one() {
        let csv = krp_quantum(50, Seed::new(9)).unwrap();
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines.len(), 51);
        assert_eq!(lines[0], "agent,restaurant,occupancy");
        for line in &lines[1..] {
            assert!(line.ends_with(",1.000000"));
        }
    }

    #[test]
    fn ksp_classical_emits_one_summary_row() {
        let csv = ksp_classical(20, 4, 1.0, 50, Seed::new(3)).unwrap();
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines.len(), 2);
        assert!(lines[1].starts_with("50,20,"));
    }

    #[test]
    fn ksp_quantum_fills_every_gate_exactly() {
        let csv = ksp_quantum(10, 10, 1.0, Seed::new(5)).unwrap();
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines.len(), 11);
        for (gate, line) in lines[1..].iter().enumerate() {
            assert_eq!(*line, format!("{gate},10,10,0"));
        }
    }

    #[test]
    fn nash_reports_three_candidates_with_exact_optimum_payoffs() {
        let csv = nash(2.0, 1.0, 0.5, 101, false).unwrap();
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines.len(), 4);
        assert_eq!(
            lines[1],
            "2,1,0.500000,1.000000,1.000000,1.500000,1.500000,pure_11,true"
        );
        assert_eq!(
            lines[2],
            "2,1,0.500000,0.000000,0.000000,1.500000,1.500000,pure_00,true"
        );
        assert_eq!(
            lines[3],
            "2,1,0.500000,0.500000,0.500000,1.125000,1.125000,mixed,true"
        );
    }

    #[test]
    fn nash_sweep_emits_three_rows_per_grid_point() {
        let csv = nash(2.0, 1.0, 0.5, 11, true).unwrap();
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines.len(), 1 + 3 * 11);
        assert!(lines[1].starts_with("2,1,0.000000,"));
        assert!(lines[33].starts_with("2,1,1.000000,"));
    }

    #[test]
    fn nash_rejects_coarse_grids() {
        assert!(matches!(nash(2.0, 1.0, 0.5, 10, false), Err(Error::Domain(_))));
    }

    #[test]
    fn quantum_verify_counts_every_term() {
        let csv = quantum_verify(4, 2_000, Seed::new(17)).unwrap();
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines.len(), 2);
        let cells: Vec<&str> = lines[1].split(',').collect();
        assert_eq!(cells[0], "4");
        assert_eq!(cells[1], "24");
        assert_eq!(cells[2], "true");
        assert_eq!(cells[3], "true");
        assert_eq!(cells[4], "2000");
        let p: f64 = cells[7].parse().unwrap();
        assert!((0.0..=1.0).contains(&p));
        let err: f64 = cells[8].parse().unwrap();
        assert!(err < 1e-9);
    }

    #[test]
    fn quantum_verify_rejects_out_of_range_sizes() {
        assert!(matches!(
            quantum_verify(9, 10, Seed::new(1)),
            Err(Error::Capacity(_))
        ));
        assert!(matches!(
            quantum_verify(1, 10, Seed::new(1)),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn builders_are_deterministic() {
        assert_eq!(
            krp_quantum(25, Seed::new(123)).unwrap(),
            krp_quantum(25, Seed::new(123)).unwrap()
        );
        assert_eq!(
            ksp_classical(10, 5, 1.2, 20, Seed::new(9)).unwrap(),
            ksp_classical(10, 5, 1.2, 20, Seed::new(9)).unwrap()
        );
        assert_eq!(
            quantum_verify(3, 500, Seed::new(7)).unwrap(),
            quantum_verify(3, 500, Seed::new(7)).unwrap()
        );
    }

    #[test]
    fn perm_rank_is_the_lexicographic_index() {
        assert_eq!(perm_rank(&[0, 1, 2]), 0);
        assert_eq!(perm_rank(&[0, 2, 1]), 1);
        assert_eq!(perm_rank(&[2, 1, 0]), 5);
        let terms = expand_monomials(4).unwrap();
        let mut seen = vec![false; 24];
        for t in &terms {
            let r = perm_rank(&t.perm);
            assert!(!seen[r], "rank {r} hit twice");
            seen[r] = true;
        }
    }
}

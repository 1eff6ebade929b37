//! The two-diner entangled restaurant game.
//!
//! Two diners share the entangled state a|R₁R₂⟩ + b|R₂R₁⟩ over the ordered
//! basis (R₁R₁, R₁R₂, R₂R₁, R₂R₂), with a, b real non-negative (payoffs
//! depend only on |a|², so phases are unobservable here). Each diner applies
//! the identity with probability p and the flip R₁↔R₂ otherwise, giving a
//! four-term local mixture over {I, σx}⊗{I, σx}. Payoffs are traces against
//! diagonal operators that award u₁ or u₂ for eating alone at the better or
//! worse restaurant and half that when both diners collide.
//!
//! The module evaluates payoffs two ways — density-matrix trace and the
//! closed-form bilinear polynomial — and enumerates the three equilibrium
//! candidates: both-identity, both-flip, and the interior stationary point.
//! At |a|² = 1/2 the two pure equilibria pay the same, which is what makes
//! that entanglement level the coordination-friendly choice.

use crate::error::{Error, Result};
use nalgebra::{Matrix4, Vector4};

/// Unilateral payoff improvements at or below this count as no improvement.
const NASH_TOL: f64 = 1e-9;

/// Game parameters: utilities of the two restaurants and the entanglement
/// weight |a|² on |R₁R₂⟩.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TwoPlayerQuantumGame {
    pub u1: f64,
    pub u2: f64,
    pub a_sq: f64,
}

impl TwoPlayerQuantumGame {
    pub fn new(u1: f64, u2: f64, a_sq: f64) -> Result<Self> {
        let game = Self { u1, u2, a_sq };
        game.validate()?;
        Ok(game)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.u1 > 0.0) || !(self.u2 > 0.0) {
            return Err(Error::Domain(format!(
                "utilities must be positive, got ({}, {})",
                self.u1, self.u2
            )));
        }
        if !(0.0..=1.0).contains(&self.a_sq) {
            return Err(Error::Domain(format!(
                "|a|^2 must lie in [0,1], got {}",
                self.a_sq
            )));
        }
        Ok(())
    }

    pub fn b_sq(&self) -> f64 {
        1.0 - self.a_sq
    }
}

/// Mixing weights: each diner applies the identity with probability p and
/// the flip otherwise.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StrategyProfile {
    pub p1: f64,
    pub p2: f64,
}

impl StrategyProfile {
    pub fn new(p1: f64, p2: f64) -> Result<Self> {
        let prof = Self { p1, p2 };
        prof.validate()?;
        Ok(prof)
    }

    pub fn validate(&self) -> Result<()> {
        if !self.in_unit_square() {
            return Err(Error::Domain(format!(
                "strategy probabilities must lie in [0,1], got ({}, {})",
                self.p1, self.p2
            )));
        }
        Ok(())
    }

    pub fn in_unit_square(&self) -> bool {
        (0.0..=1.0).contains(&self.p1) && (0.0..=1.0).contains(&self.p2)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PayoffPair {
    pub dollar1: f64,
    pub dollar2: f64,
}

/// One equilibrium candidate with its payoffs and verdicts. `in_range` says
/// the profile lies in [0,1]²; out-of-range stationary points are reported
/// at face value, never clamped. `is_nash` requires `in_range` plus the grid
/// best-response test and the analytic slope conditions.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EquilibriumCandidate {
    pub profile: StrategyProfile,
    pub payoffs: PayoffPair,
    pub in_range: bool,
    pub is_nash: bool,
}

/// The three candidates: both-identity (1,1), both-flip (0,0), and the
/// interior stationary point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EquilibriumSet {
    pub pure_11: EquilibriumCandidate,
    pub pure_00: EquilibriumCandidate,
    pub mixed: EquilibriumCandidate,
}

// The flip σx exchanges R₁ and R₂ on one diner's slot. On basis index
// 2·s₁ + s₂ it permutes indices; conjugating by a symmetric permutation
// matrix just relabels rows and columns.
const FLIP_DINER1: [usize; 4] = [2, 3, 0, 1];
const FLIP_DINER2: [usize; 4] = [1, 0, 3, 2];
const FLIP_BOTH: [usize; 4] = [3, 2, 1, 0];

fn conjugate_by_permutation(rho: &Matrix4<f64>, perm: &[usize; 4]) -> Matrix4<f64> {
    Matrix4::from_fn(|i, j| rho[(perm[i], perm[j])])
}

/// Density matrix of the shared state a|R₁R₂⟩ + b|R₂R₁⟩.
pub fn initial_density(game: &TwoPlayerQuantumGame) -> Matrix4<f64> {
    game.validate().expect("game invariants violated");
    let a = game.a_sq.sqrt();
    let b = game.b_sq().sqrt();
    let psi = Vector4::new(0.0, a, b, 0.0);
    psi * psi.transpose()
}

/// Applies the two diners' independent identity-or-flip mixtures: the
/// weighted sum of ρ conjugated by each of I⊗I, I⊗σx, σx⊗I, σx⊗σx.
pub fn final_density(rho: &Matrix4<f64>, prof: &StrategyProfile) -> Result<Matrix4<f64>> {
    prof.validate().expect("strategy profile out of range");
    if (rho.trace() - 1.0).abs() > 1e-9 {
        return Err(Error::Integrity(format!(
            "density matrix trace {} is not 1",
            rho.trace()
        )));
    }
    let (p1, p2) = (prof.p1, prof.p2);
    Ok(rho * (p1 * p2)
        + conjugate_by_permutation(rho, &FLIP_DINER2) * (p1 * (1.0 - p2))
        + conjugate_by_permutation(rho, &FLIP_DINER1) * ((1.0 - p1) * p2)
        + conjugate_by_permutation(rho, &FLIP_BOTH) * ((1.0 - p1) * (1.0 - p2)))
}

/// Diagonal payoff observables. Eating alone pays the restaurant's full
/// utility; colliding halves it for both.
pub fn payoff_operators(u1: f64, u2: f64) -> (Matrix4<f64>, Matrix4<f64>) {
    assert!(u1 > 0.0 && u2 > 0.0, "utilities must be positive");
    let p1 = Matrix4::from_diagonal(&Vector4::new(0.5 * u1, u1, u2, 0.5 * u2));
    let p2 = Matrix4::from_diagonal(&Vector4::new(0.5 * u1, u2, u1, 0.5 * u2));
    (p1, p2)
}

/// Payoffs as traces of the payoff operators against the final density.
pub fn payoff_trace(game: &TwoPlayerQuantumGame, prof: &StrategyProfile) -> PayoffPair {
    let rho = initial_density(game);
    let fin = final_density(&rho, prof).expect("pure initial state has unit trace");
    let (op1, op2) = payoff_operators(game.u1, game.u2);
    PayoffPair {
        dollar1: (op1 * fin).trace(),
        dollar2: (op2 * fin).trace(),
    }
}

// $₁ and $₂ are bilinear in (p₁, p₂): 0.5·p₁p₂(u₁+u₂) plus linear terms
// whose coefficients mix the utilities through |a|², |b|².
fn closed_coefficients(game: &TwoPlayerQuantumGame) -> (f64, f64, f64, f64, f64, f64) {
    let (u1, u2) = (game.u1, game.u2);
    let a2 = game.a_sq;
    let b2 = game.b_sq();
    let c1 = 0.5 * u1 * a2 + 0.5 * u2 * b2 - u1 * b2 - u2 * a2;
    let c2 = -0.5 * (u1 * b2 + u2 * a2);
    let c0 = u1 * b2 + u2 * a2;
    let d1 = 0.5 * u1 * b2 + 0.5 * u2 * a2 - u1 * a2 - u2 * b2;
    let d2 = -0.5 * (u1 * a2 + u2 * b2);
    let d0 = u1 * a2 + u2 * b2;
    (c1, c2, c0, d1, d2, d0)
}

/// Payoffs from the closed-form polynomials.
pub fn payoff_closed(game: &TwoPlayerQuantumGame, prof: &StrategyProfile) -> PayoffPair {
    game.validate().expect("game invariants violated");
    let (p1, p2) = (prof.p1, prof.p2);
    let (c1, c2, c0, d1, d2, d0) = closed_coefficients(game);
    let cross = 0.5 * p1 * p2 * (game.u1 + game.u2);
    PayoffPair {
        dollar1: cross + p1 * c1 + p2 * c2 + c0,
        dollar2: cross + p2 * d1 + p1 * d2 + d0,
    }
}

/// Slope of $₁ in p₁ at fixed p₂ (payoffs are linear in each player's own
/// probability).
fn own_slope_1(game: &TwoPlayerQuantumGame, p2: f64) -> f64 {
    let (c1, ..) = closed_coefficients(game);
    0.5 * p2 * (game.u1 + game.u2) + c1
}

/// Slope of $₂ in p₂ at fixed p₁.
fn own_slope_2(game: &TwoPlayerQuantumGame, p1: f64) -> f64 {
    let (.., d1, _, _) = closed_coefficients(game);
    0.5 * p1 * (game.u1 + game.u2) + d1
}

/// The interior stationary point: each diner's probability makes the other
/// indifferent. Returns the raw point and whether it lies in [0,1]².
pub fn mixed_equilibrium(game: &TwoPlayerQuantumGame) -> (StrategyProfile, bool) {
    game.validate().expect("game invariants violated");
    let (u1, u2) = (game.u1, game.u2);
    let a2 = game.a_sq;
    let p1 = -(u1 * (1.0 - 3.0 * a2) + u2 * (3.0 * a2 - 2.0)) / (u1 + u2);
    let p2 = -(u1 * (3.0 * a2 - 2.0) + u2 * (1.0 - 3.0 * a2)) / (u1 + u2);
    let profile = StrategyProfile { p1, p2 };
    let in_range = profile.in_unit_square();
    (profile, in_range)
}

/// Largest payoff gain either player can get by deviating to a grid point.
fn best_grid_gain(game: &TwoPlayerQuantumGame, prof: &StrategyProfile, grid_points: usize) -> f64 {
    let base = payoff_closed(game, prof);
    let mut gain: f64 = 0.0;
    for i in 0..grid_points {
        let p = i as f64 / (grid_points - 1) as f64;
        let dev1 = payoff_closed(game, &StrategyProfile { p1: p, p2: prof.p2 });
        let dev2 = payoff_closed(game, &StrategyProfile { p1: prof.p1, p2: p });
        gain = gain.max(dev1.dollar1 - base.dollar1);
        gain = gain.max(dev2.dollar2 - base.dollar2);
    }
    gain
}

/// Exact best unilateral gain: payoffs are linear in the deviator's own
/// probability, so the optimum deviation sits at an endpoint.
fn best_analytic_gain(game: &TwoPlayerQuantumGame, prof: &StrategyProfile) -> f64 {
    let s1 = own_slope_1(game, prof.p2);
    let s2 = own_slope_2(game, prof.p1);
    (s1 * (1.0 - prof.p1))
        .max(-s1 * prof.p1)
        .max(s2 * (1.0 - prof.p2))
        .max(-s2 * prof.p2)
        .max(0.0)
}

fn judge(game: &TwoPlayerQuantumGame, profile: StrategyProfile, in_range: bool, grid_points: usize) -> EquilibriumCandidate {
    let payoffs = payoff_closed(game, &profile);
    let is_nash = in_range
        && best_grid_gain(game, &profile, grid_points) <= NASH_TOL
        && best_analytic_gain(game, &profile) <= NASH_TOL;
    EquilibriumCandidate {
        profile,
        payoffs,
        in_range,
        is_nash,
    }
}

/// Evaluates the three candidates, testing each against unilateral grid
/// deviations (no improvement beyond 1e−9) and the analytic endpoint
/// conditions.
pub fn verify_equilibria(game: &TwoPlayerQuantumGame, grid_points: usize) -> EquilibriumSet {
    game.validate().expect("game invariants violated");
    assert!(grid_points >= 11, "grid too coarse to mean anything");
    let (mixed_profile, in_range) = mixed_equilibrium(game);
    EquilibriumSet {
        pure_11: judge(game, StrategyProfile { p1: 1.0, p2: 1.0 }, true, grid_points),
        pure_00: judge(game, StrategyProfile { p1: 0.0, p2: 0.0 }, true, grid_points),
        mixed: judge(game, mixed_profile, in_range, grid_points),
    }
}

/// The entanglement weight that makes both pure equilibria pay the same:
/// |a|² = 1/2. Verified on the spot via the difference identity
/// $₁(1,1) − $₁(0,0) = (u₂ − u₁)(1 − 2|a|²), which vanishes there and is
/// nonzero nearby whenever the utilities differ.
pub fn optimal_entanglement(u1: f64, u2: f64) -> f64 {
    assert!(u1 > 0.0 && u2 > 0.0, "utilities must be positive");
    let diff = |a_sq: f64| {
        let game = TwoPlayerQuantumGame { u1, u2, a_sq };
        let at = |p: f64| payoff_closed(&game, &StrategyProfile { p1: p, p2: p });
        at(1.0).dollar1 - at(0.0).dollar1
    };
    let scale = u1 + u2;
    assert!(
        diff(0.5).abs() <= 1e-12 * scale,
        "pure equilibria fail to tie at |a|^2 = 1/2"
    );
    if (u1 - u2).abs() > 1e-9 * scale {
        assert!(diff(0.4).abs() > 1e-12 * scale && diff(0.6).abs() > 1e-12 * scale);
    }
    0.5
}

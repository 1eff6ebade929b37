//! From measurement outcomes to game actions.
//!
//! One joint momentum measurement hands every agent a distinct label in
//! {0..n−1}. Sending each agent to the restaurant carrying their label fills
//! every restaurant in one shot; reducing the label mod K splits N·K agents
//! into exactly N per stadium gate. Both guarantees are structural, not
//! statistical: they hold for every permutation, so a single round replaces
//! the whole classical learning process. The fairness accounting checks the
//! other half of the claim, that the uniform measurement gives every agent
//! the same chance at every label.

use crate::error::{Error, Result};
use crate::qhall::{sample_measurement, MeasurementOutcome};
use crate::rng::Seed;

/// A one-customer-per-restaurant assignment.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RestaurantAssignment {
    /// Entry i is the restaurant agent i visits; bijective.
    pub agent_to_restaurant: Vec<u64>,
}

impl RestaurantAssignment {
    pub fn n(&self) -> u64 {
        self.agent_to_restaurant.len() as u64
    }

    /// Fraction of restaurants serving a customer, counted directly.
    pub fn occupancy(&self) -> f64 {
        let n = self.agent_to_restaurant.len();
        let mut seen = vec![false; n];
        let mut distinct = 0u64;
        for &r in &self.agent_to_restaurant {
            let idx = r as usize;
            if idx < n && !seen[idx] {
                seen[idx] = true;
                distinct += 1;
            }
        }
        distinct as f64 / n as f64
    }
}

/// Gate choices for all N·K agents, exactly N per gate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GateAssignment {
    /// Entry i is the gate agent i walks to, in [0, gates).
    pub agent_to_gate: Vec<u64>,
    pub gates: u64,
}

impl GateAssignment {
    pub fn agents_per_gate(&self) -> u64 {
        self.agent_to_gate.len() as u64 / self.gates
    }

    /// Arrival counts per gate.
    pub fn arrivals(&self) -> Vec<u64> {
        let mut counts = vec![0u64; self.gates as usize];
        for &g in &self.agent_to_gate {
            counts[g as usize] += 1;
        }
        counts
    }

    /// Agents beyond the per-gate capacity floor(alpha·N), counted from the
    /// actual arrivals.
    pub fn harmed(&self, alpha: f64) -> u64 {
        assert!(alpha >= 1.0, "capacity factor below 1 is not a stadium game");
        let cap = (alpha * self.agents_per_gate() as f64).floor() as u64;
        self.arrivals().iter().map(|&c| c.saturating_sub(cap)).sum()
    }
}

/// Sends every agent to the restaurant matching their measured momentum.
pub fn assign_restaurants(outcome: &MeasurementOutcome) -> Result<RestaurantAssignment> {
    outcome.validate()?;
    Ok(RestaurantAssignment {
        agent_to_restaurant: outcome.momenta.clone(),
    })
}

/// The stadium rule: gate = momentum mod k.
pub fn gate_for_agent(momentum: u64, k: u64) -> u64 {
    assert!(k >= 1, "need at least one gate");
    momentum % k
}

/// Applies the mod-k rule to a whole outcome. The momenta {0..NK−1} fall
/// into residue classes of equal size, so every gate receives exactly N
/// agents.
pub fn assign_gates(outcome: &MeasurementOutcome, k: u64) -> Result<GateAssignment> {
    outcome.validate()?;
    if k < 1 {
        return Err(Error::Domain("need at least one gate".into()));
    }
    if outcome.n() % k != 0 {
        return Err(Error::Domain(format!(
            "{} agents do not split evenly over {k} gates",
            outcome.n()
        )));
    }
    Ok(GateAssignment {
        agent_to_gate: outcome
            .momenta
            .iter()
            .map(|&m| gate_for_agent(m, k))
            .collect(),
        gates: k,
    })
}

/// Agent-by-restaurant visit counts over repeated measurement rounds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FairnessReport {
    /// counts[agent][restaurant], each row summing to `samples`.
    pub counts: Vec<Vec<u64>>,
    pub samples: u64,
}

impl FairnessReport {
    /// Empirical visit frequencies; every cell estimates 1/n.
    pub fn frequencies(&self) -> Vec<Vec<f64>> {
        self.counts
            .iter()
            .map(|row| row.iter().map(|&c| c as f64 / self.samples as f64).collect())
            .collect()
    }
}

/// Samples `samples` measurement rounds at size `n` and tallies who ended up
/// where. Bijectivity makes each row and column sum exactly `samples`.
pub fn fairness_report(n: u64, samples: u64, seed: Seed) -> FairnessReport {
    assert!(n >= 2, "fairness needs at least two agents");
    assert!(samples >= 1, "fairness needs at least one sample");
    let mut counts = vec![vec![0u64; n as usize]; n as usize];
    for s in 0..samples {
        let outcome = sample_measurement(n, seed.substream(s));
        for (agent, &m) in outcome.momenta.iter().enumerate() {
            counts[agent][m as usize] += 1;
        }
    }
    FairnessReport { counts, samples }
}

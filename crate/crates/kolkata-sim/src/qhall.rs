//! The filled lowest-Landau-level state and its measurement model.
//!
//! A charged particle in a perpendicular magnetic field has degenerate
//! lowest-level orbitals indexed by angular momentum m, each occupying area
//! 2π·l0² (times m+1 for the peak radius of orbital m). Filling orbitals
//! 0..n−1 with n fermions gives a Slater-determinant state whose polynomial
//! part is the Vandermonde product: a superposition of n! monomials, one per
//! permutation of the momenta, every coefficient of magnitude one. Measuring
//! each particle's angular momentum therefore yields a uniformly random
//! permutation of {0..n−1}, which is what the coordination layer consumes.
//!
//! Positions enter as complex coordinates z = x − i·y.

use crate::error::{Error, Result};
use crate::rng::Seed;
use crate::special::{ln_gamma, LN_TWO_PI};
use nalgebra::DMatrix;
use num_complex::Complex64;
use std::collections::BTreeMap;

/// A lowest-level orbital: angular momentum `m` at magnetic length `l0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Orbital {
    pub m: u64,
    pub l0: f64,
}

/// The filled-level state: `n_e` particles in orbitals 0..n_e−1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SlaterState {
    pub n_e: u64,
    pub l0: f64,
}

impl SlaterState {
    pub fn new(n_e: u64, l0: f64) -> Result<Self> {
        if n_e < 1 {
            return Err(Error::Domain("state needs at least one particle".into()));
        }
        if !(l0 > 0.0) {
            return Err(Error::Domain(format!(
                "magnetic length must be positive, got {l0}"
            )));
        }
        Ok(Self { n_e, l0 })
    }
}

/// One signed monomial of the polynomial part: sign · ∏_j z_(j+1)^perm[j].
///
/// `perm` is a permutation of {0..n−1}; entry j is both the exponent of the
/// j-th coordinate and the angular momentum agent j would measure in the
/// corresponding outcome.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialTerm {
    pub perm: Vec<u64>,
    pub sign: i8,
}

/// A joint angular-momentum measurement: entry i is the momentum particle i
/// carries, collectively a permutation of {0..n−1}.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MeasurementOutcome {
    pub momenta: Vec<u64>,
}

impl MeasurementOutcome {
    /// Builds an outcome, rejecting momenta that are not a permutation of
    /// {0..n−1}.
    pub fn new(momenta: Vec<u64>) -> Result<Self> {
        let outcome = Self { momenta };
        outcome.validate()?;
        Ok(outcome)
    }

    /// Checks the permutation invariant: entries pairwise distinct, each
    /// below the length.
    pub fn validate(&self) -> Result<()> {
        let n = self.momenta.len();
        if n == 0 {
            return Err(Error::Integrity("empty measurement outcome".into()));
        }
        let mut seen = vec![false; n];
        for &m in &self.momenta {
            let idx = m as usize;
            if idx >= n {
                return Err(Error::Integrity(format!(
                    "momentum {m} out of range for {n} particles"
                )));
            }
            if seen[idx] {
                return Err(Error::Integrity(format!("momentum {m} appears twice")));
            }
            seen[idx] = true;
        }
        Ok(())
    }

    pub fn n(&self) -> u64 {
        self.momenta.len() as u64
    }
}

/// Orbital wavefunction φ_m(z) = (2π l0² 2^m m!)^(−1/2) (z/l0)^m e^(−|z|²/4l0²).
///
/// The factorial lives in log space, so momenta up to 10^4 evaluate without
/// overflow; magnitude and phase are assembled at the end.
pub fn lll_orbital(orb: &Orbital, z: Complex64) -> Complex64 {
    assert!(orb.l0 > 0.0, "magnetic length must be positive");
    let m = orb.m as f64;
    let ln_norm = -0.5
        * (LN_TWO_PI + 2.0 * orb.l0.ln() + m * std::f64::consts::LN_2 + ln_gamma(m + 1.0));
    let r = z.norm();
    if orb.m > 0 && r == 0.0 {
        return Complex64::new(0.0, 0.0);
    }
    let mut ln_mag = ln_norm - z.norm_sqr() / (4.0 * orb.l0 * orb.l0);
    let mut phase = 0.0;
    if orb.m > 0 {
        ln_mag += m * (r / orb.l0).ln();
        phase = m * z.arg();
    }
    Complex64::from_polar(ln_mag.exp(), phase)
}

/// Area taken up by orbital m: 2(m+1)π l0².
pub fn orbital_area(orb: &Orbital) -> f64 {
    assert!(orb.l0 > 0.0, "magnetic length must be positive");
    2.0 * (orb.m as f64 + 1.0) * std::f64::consts::PI * orb.l0 * orb.l0
}

/// How many orbitals fit in `area`: floor(area / 2πl0²). The highest
/// occupied momentum at full filling is the returned count minus one.
pub fn landau_capacity(area: f64, l0: f64) -> u64 {
    assert!(area > 0.0, "area must be positive");
    assert!(l0 > 0.0, "magnetic length must be positive");
    (area / (2.0 * std::f64::consts::PI * l0 * l0)).floor() as u64
}

/// Determinant amplitude of the filled state at positions `zs`.
///
/// With `normalized` on, the matrix rows are the orbitals φ_0..φ_(n−1); off,
/// they are the bare powers z^0..z^(n−1), the polynomial part with Gaussian
/// and normalization stripped.
pub fn slater_amplitude(
    state: &SlaterState,
    zs: &[Complex64],
    normalized: bool,
) -> Result<Complex64> {
    if state.n_e < 1 || !(state.l0 > 0.0) {
        return Err(Error::Domain("invalid state".into()));
    }
    if state.n_e > 12 {
        return Err(Error::Capacity(format!(
            "determinant evaluation guarded to 12 particles, got {}",
            state.n_e
        )));
    }
    if zs.len() as u64 != state.n_e {
        return Err(Error::Domain(format!(
            "{} positions supplied for {} particles",
            zs.len(),
            state.n_e
        )));
    }
    let n = zs.len();
    let mat = DMatrix::from_fn(n, n, |i, j| {
        if normalized {
            lll_orbital(&Orbital { m: i as u64, l0: state.l0 }, zs[j])
        } else {
            zs[j].powu(i as u32)
        }
    });
    Ok(mat.determinant())
}

/// The product ∏_{j<k} (z_j − z_k) over ordered index pairs.
///
/// Equals the unnormalized determinant up to the global sign
/// (−1)^(n(n−1)/2): the determinant convention pairs row i with power i−1,
/// which orients each factor as (z_k − z_j).
pub fn vandermonde_amplitude(zs: &[Complex64]) -> Complex64 {
    assert!(!zs.is_empty(), "need at least one position");
    let mut prod = Complex64::new(1.0, 0.0);
    for j in 0..zs.len() {
        for k in (j + 1)..zs.len() {
            prod *= zs[j] - zs[k];
        }
    }
    prod
}

/// All n! signed monomials of the unnormalized determinant, in lexicographic
/// order of their exponent vectors (identity permutation first, sign +1).
pub fn expand_monomials(n_e: u64) -> Result<Vec<MonomialTerm>> {
    if n_e < 1 {
        return Err(Error::Domain("expansion needs at least one particle".into()));
    }
    if n_e > 8 {
        return Err(Error::Capacity(format!(
            "monomial expansion guarded to 8 particles (8! = 40320 terms), got {n_e}"
        )));
    }
    let n = n_e as usize;
    let mut terms = Vec::with_capacity((1..=n).product());
    let mut used = vec![false; n];
    let mut current = Vec::with_capacity(n);
    fill_permutations(n, &mut used, &mut current, &mut terms);
    Ok(terms)
}

fn fill_permutations(
    n: usize,
    used: &mut [bool],
    current: &mut Vec<u64>,
    out: &mut Vec<MonomialTerm>,
) {
    if current.len() == n {
        out.push(MonomialTerm {
            perm: current.clone(),
            sign: permutation_sign(current),
        });
        return;
    }
    for v in 0..n {
        if !used[v] {
            used[v] = true;
            current.push(v as u64);
            fill_permutations(n, used, current, out);
            current.pop();
            used[v] = false;
        }
    }
}

fn permutation_sign(perm: &[u64]) -> i8 {
    let mut inversions = 0u32;
    for i in 0..perm.len() {
        for j in (i + 1)..perm.len() {
            if perm[i] > perm[j] {
                inversions += 1;
            }
        }
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Sum of the expansion terms at concrete positions; equals the
/// unnormalized determinant.
pub fn evaluate_monomials(terms: &[MonomialTerm], zs: &[Complex64]) -> Complex64 {
    let mut sum = Complex64::new(0.0, 0.0);
    for term in terms {
        assert_eq!(term.perm.len(), zs.len(), "position count mismatch");
        let mut mono = Complex64::new(term.sign as f64, 0.0);
        for (j, &e) in term.perm.iter().enumerate() {
            mono *= zs[j].powu(e as u32);
        }
        sum += mono;
    }
    sum
}

/// Outcome distribution of the joint momentum measurement: squared
/// coefficient magnitudes, normalized. Every permutation carries exactly
/// 1/n! because every coefficient has magnitude one.
pub fn measurement_distribution(n_e: u64) -> Result<BTreeMap<Vec<u64>, f64>> {
    let terms = expand_monomials(n_e)?;
    let total: f64 = terms
        .iter()
        .map(|t| {
            let c = t.sign as f64;
            c * c
        })
        .sum();
    Ok(terms
        .into_iter()
        .map(|t| {
            let c = t.sign as f64;
            (t.perm, c * c / total)
        })
        .collect())
}

/// Draws one measurement outcome: a uniformly random permutation of
/// {0..n_e−1} by Fisher–Yates over the seed's stream.
///
/// Matches `measurement_distribution` for n_e ≤ 8 and scales to any n_e.
/// Index draws are explicit u64 ranges so the stream is identical on every
/// platform.
pub fn sample_measurement(n_e: u64, seed: Seed) -> MeasurementOutcome {
    assert!(n_e >= 1, "need at least one particle");
    use rand::Rng;
    let mut rng = seed.rng();
    let mut momenta: Vec<u64> = (0..n_e).collect();
    for i in (1..momenta.len()).rev() {
        let j = rng.random_range(0..=i as u64) as usize;
        momenta.swap(i, j);
    }
    MeasurementOutcome { momenta }
}

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::{CombinatorialMap, Dart, MapError};

/// Which of the two long paths of a decomposition hosts a detector.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Side {
    #[serde(rename = "mu")]
    Mu,
    #[serde(rename = "sigma")]
    Sigma,
}

impl Side {
    pub fn name(self) -> &'static str {
        match self {
            Side::Mu => "mu",
            Side::Sigma => "sigma",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecompositionError {
    #[error(transparent)]
    Map(#[from] MapError),
    #[error("|xi| = {xi} and |tau| = {tau} must both be at most 1")]
    EndTooLong { xi: usize, tau: usize },
    #[error("xi, mu and tau use {used} darts but the boundary has only {boundary}")]
    TooLong { used: usize, boundary: usize },
    #[error("xi mu tau^-1 sigma^-1 is not the outer boundary cycle of this map")]
    NotBoundaryCycle,
}

/// A boundary cycle split as ξ μ τ⁻¹ σ⁻¹.
///
/// The cycle follows the outer face. μ and σ both run from the ξ end to the
/// τ end, so σ consists of reversals of outer darts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct BoundaryDecomposition {
    pub xi: Vec<Dart>,
    pub mu: Vec<Dart>,
    pub tau: Vec<Dart>,
    pub sigma: Vec<Dart>,
    base: Dart,
}

impl BoundaryDecomposition {
    /// Splits the boundary cycle starting at outer dart `base` into pieces of
    /// the given lengths; σ takes the remainder.
    pub fn from_lengths(
        map: &CombinatorialMap,
        base: Dart,
        xi_len: usize,
        mu_len: usize,
        tau_len: usize,
    ) -> Result<Self, DecompositionError> {
        if xi_len > 1 || tau_len > 1 {
            return Err(DecompositionError::EndTooLong {
                xi: xi_len,
                tau: tau_len,
            });
        }
        let cycle = map.boundary_cycle(base)?;
        let used = xi_len + mu_len + tau_len;
        if used > cycle.len() {
            return Err(DecompositionError::TooLong {
                used,
                boundary: cycle.len(),
            });
        }
        let inv = |ds: &[Dart]| -> Vec<Dart> { ds.iter().rev().map(|&d| map.reverse(d)).collect() };
        let xi = cycle[..xi_len].to_vec();
        let mu = cycle[xi_len..xi_len + mu_len].to_vec();
        let tau = inv(&cycle[xi_len + mu_len..used]);
        let sigma = inv(&cycle[used..]);
        Ok(BoundaryDecomposition {
            xi,
            mu,
            tau,
            sigma,
            base,
        })
    }

    /// Validates explicit paths: ξ μ τ⁻¹ σ⁻¹ must be the outer-face cycle read
    /// from some outer dart.
    pub fn from_paths(
        map: &CombinatorialMap,
        xi: Vec<Dart>,
        mu: Vec<Dart>,
        tau: Vec<Dart>,
        sigma: Vec<Dart>,
    ) -> Result<Self, DecompositionError> {
        if xi.len() > 1 || tau.len() > 1 {
            return Err(DecompositionError::EndTooLong {
                xi: xi.len(),
                tau: tau.len(),
            });
        }
        let mut cycle: Vec<Dart> = Vec::new();
        cycle.extend(&xi);
        cycle.extend(&mu);
        cycle.extend(tau.iter().rev().map(|&d| map.reverse(d)));
        cycle.extend(sigma.iter().rev().map(|&d| map.reverse(d)));
        let base = *cycle.first().ok_or(DecompositionError::NotBoundaryCycle)?;
        let expected = map
            .boundary_cycle(base)
            .map_err(|_| DecompositionError::NotBoundaryCycle)?;
        if expected != cycle {
            return Err(DecompositionError::NotBoundaryCycle);
        }
        Ok(BoundaryDecomposition {
            xi,
            mu,
            tau,
            sigma,
            base,
        })
    }

    /// Outer dart where ξ (or μ, when ξ is empty) begins.
    pub fn base(&self) -> Dart {
        self.base
    }

    pub fn lengths(&self) -> (usize, usize, usize, usize) {
        (self.xi.len(), self.mu.len(), self.tau.len(), self.sigma.len())
    }

    pub fn side(&self, side: Side) -> &[Dart] {
        match side {
            Side::Mu => &self.mu,
            Side::Sigma => &self.sigma,
        }
    }

    /// ξ μ τ⁻¹ σ⁻¹ as one dart sequence.
    pub fn cycle(&self, map: &CombinatorialMap) -> Vec<Dart> {
        let mut cycle = Vec::with_capacity(self.xi.len() + self.mu.len() + self.tau.len() + self.sigma.len());
        cycle.extend(&self.xi);
        cycle.extend(&self.mu);
        cycle.extend(self.tau.iter().rev().map(|&d| map.reverse(d)));
        cycle.extend(self.sigma.iter().rev().map(|&d| map.reverse(d)));
        cycle
    }

    /// Checks that this decomposition belongs to `map`.
    pub fn check(&self, map: &CombinatorialMap) -> Result<(), DecompositionError> {
        if self.xi.len() > 1 || self.tau.len() > 1 {
            return Err(DecompositionError::EndTooLong {
                xi: self.xi.len(),
                tau: self.tau.len(),
            });
        }
        let n = map.num_darts();
        let parts = [&self.xi, &self.mu, &self.tau, &self.sigma];
        if self.base.0 >= n || parts.iter().any(|p| p.iter().any(|d| d.0 >= n)) {
            return Err(DecompositionError::NotBoundaryCycle);
        }
        let expected = map
            .boundary_cycle(self.base)
            .map_err(|_| DecompositionError::NotBoundaryCycle)?;
        if expected != self.cycle(map) {
            return Err(DecompositionError::NotBoundaryCycle);
        }
        Ok(())
    }
}

//! Exhaustive enumeration of small shellable maps and the theorem campaigns.

mod campaign;
mod enumerate;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::conditions::{ClassFilter, ConditionError};

pub use campaign::{
    run_campaign, run_campaign_with, verify, verify_c4t4_corollary, verify_c7_corollary, verify_main_theorem, CampaignReport,
    ConsistencyFailure, Reproduction, Theorem, Verdict, VerdictStatus,
};
pub use enumerate::{canonical_form, enumerate_decompositions, enumerate_maps, is_achiral, mirror_map, MapStream};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid enumeration config: {0}")]
pub struct ConfigInvalid(pub String);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("map is not in the {class:?} class required by the {theorem:?} theorem")]
    NotInClass { theorem: Theorem, class: ClassFilter },
    #[error(transparent)]
    Condition(#[from] ConditionError),
    #[error(transparent)]
    Config(#[from] ConfigInvalid),
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Dedup {
    #[default]
    On,
    Off,
}

/// What to enumerate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EnumConfig {
    pub max_regions: usize,
    /// Inclusive bounds on the edge count of each glued polygon.
    pub region_edge_range: (usize, usize),
    pub max_boundary_length: usize,
    pub class_filter: ClassFilter,
    pub dedup: Dedup,
}

impl EnumConfig {
    pub fn new(max_regions: usize, region_edge_range: (usize, usize)) -> Self {
        EnumConfig {
            max_regions,
            region_edge_range,
            max_boundary_length: 16,
            class_filter: ClassFilter::None,
            dedup: Dedup::On,
        }
    }

    pub fn with_filter(mut self, filter: ClassFilter) -> Self {
        self.class_filter = filter;
        self
    }

    pub fn with_max_boundary(mut self, max: usize) -> Self {
        self.max_boundary_length = max;
        self
    }

    pub fn with_dedup(mut self, dedup: Dedup) -> Self {
        self.dedup = dedup;
        self
    }

    pub fn validate(&self) -> Result<(), ConfigInvalid> {
        let (lo, hi) = self.region_edge_range;
        if self.max_regions == 0 {
            return Err(ConfigInvalid("max_regions must be at least 1".into()));
        }
        if lo == 0 || hi > 16 || lo > hi {
            return Err(ConfigInvalid(format!("region edge range [{lo}, {hi}] must lie within [1, 16]")));
        }
        if self.max_regions * hi > 4000 {
            return Err(ConfigInvalid("maps this large exceed the dart id range".into()));
        }
        Ok(())
    }
}

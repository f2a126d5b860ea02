//! Censuses of positive links on the ring, boot and flower arrangements.
//!
//! For each family and size the `2^n` orientation words are grouped two
//! ways: by the orbits of the family's word group (which give equivalent
//! links) and by exact Jones polynomial (which separates links). The first
//! bounds the number of link classes from above, the second from below.

mod cache;
mod error;
mod facts;
mod partition;
mod report;

use std::sync::Arc;

use pclink_invariant::EngineConfig;
use pclink_shadow::Family;
use serde::{Deserialize, Serialize};

pub use cache::{CacheKey, ResultCache};
pub use error::CensusError;
pub use facts::{figure_three_circle, verify_facts, FactCheck, FactReport, FactStatus};
pub use partition::{jones_for_word, jones_partition, JonesPartition, PartitionEntry};
pub use report::{census_oriented, census_unoriented, low_rank_threshold, theoretical_ratio, CensusReport};

/// Largest `n` for which Jones partitions are computed, per family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct JonesCaps {
    pub ring: usize,
    pub boot: usize,
    pub flower: usize,
}

impl Default for JonesCaps {
    fn default() -> Self {
        JonesCaps { ring: 5, boot: 6, flower: 6 }
    }
}

impl JonesCaps {
    pub fn cap(&self, family: Family) -> usize {
        match family {
            Family::Ring => self.ring,
            Family::Boot => self.boot,
            Family::Flower => self.flower,
            Family::Custom => 0,
        }
    }

    /// The same cap for every family.
    pub fn uniform(cap: usize) -> JonesCaps {
        JonesCaps { ring: cap, boot: cap, flower: cap }
    }
}

#[derive(Debug, Clone, Default)]
pub struct CensusConfig {
    /// Also compute the Jones partition in [`census_oriented`] and
    /// [`census_unoriented`].
    pub with_jones: bool,
    pub engine: EngineConfig,
    /// Worker threads; 0 picks one per core.
    pub workers: usize,
    pub allow_odd_flower: bool,
    pub jones_caps: JonesCaps,
    pub cache: Option<Arc<ResultCache>>,
}

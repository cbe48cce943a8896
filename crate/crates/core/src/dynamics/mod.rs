//! State spaces, granules, output chains and the controllability/observability tests.

mod chains;
mod checks;
mod granule;
mod memory;
mod state;
mod supercode;

pub use chains::{output_chains, ChainLevel, ChainReport};
pub use checks::{
    conditioned_duality_check, dual_state_space_check, projection_subcode_duality_check,
};
pub use granule::{
    controller_granule, controller_granule_on, end_around_check, end_around_controller_granule,
    end_around_observer_check, end_around_observer_granule, granule_duality_check,
    level_factorization, observer_granule, observer_granule_on, state_size_from_granules,
    EndAroundEntry, GranuleEntry, GranuleTable,
};
pub use memory::{
    controllability_index, controllability_tests, controllable_on, controller_memory,
    l_controllable, l_finite_check, observability_index, observability_tests, observable_on,
    observer_memory, TestPair,
};
pub use state::{state_at, state_invariants, state_space, StateSpaceReport};
pub use supercode::{controllable_subcode, observable_supercode, subcode_supercode_duality_check};

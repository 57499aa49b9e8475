//! Per-run synthesis records and instrumentation counters.

use serde::{Deserialize, Serialize};

/// Counters for the elementary approximation calls made during a synthesis.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SynthStats {
    pub gridsynth_calls: usize,
    pub magnitude_calls: usize,
    /// Grid candidates examined across all GridSynth invocations.
    pub candidates_tried: usize,
    /// Norm-equation attempts abandoned due to the factoring budget.
    pub dioph_abandoned: usize,
}

impl SynthStats {
    pub fn merge(&mut self, other: &SynthStats) {
        self.gridsynth_calls += other.gridsynth_calls;
        self.magnitude_calls += other.magnitude_calls;
        self.candidates_tried += other.candidates_tried;
        self.dioph_abandoned += other.dioph_abandoned;
    }
}

/// Per-run record emitted by the CLI and the bench harness.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SynthesisReport {
    pub qubits: usize,
    pub epsilon: String,
    pub t_count: usize,
    pub gate_count: usize,
    pub magnitude_calls: usize,
    pub gridsynth_calls: usize,
    /// Independently recomputed diamond-norm error (decimal string to keep
    /// tiny values exact in JSON).
    pub achieved_error: String,
    pub wall_time_s: f64,
    pub seed: u64,
    pub precision_digits: u32,
}

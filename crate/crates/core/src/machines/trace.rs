use serde::{Deserialize, Serialize};

pub const TRACE_FORMAT_VERSION: u32 = 1;

/// What a machine did at one time step.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceStep {
    pub time: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub input: Option<Vec<u64>>,
    pub symbol: Vec<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub state: Option<Vec<u64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub syndrome: Option<Vec<u64>>,
}

/// One record per time on the axis.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MachineTrace {
    pub format_version: u32,
    pub machine: String,
    pub steps: Vec<TraceStep>,
}

impl MachineTrace {
    pub fn new(machine: &str) -> Self {
        MachineTrace {
            format_version: TRACE_FORMAT_VERSION,
            machine: machine.to_string(),
            steps: Vec::new(),
        }
    }
}

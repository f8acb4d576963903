use thiserror::Error;

/// Which of the two serial four-bar loops an error or coefficient set refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum LoopId {
    /// Input loop: link vectors v1..v4, driven by theta1.
    First,
    /// Output loop: link vectors v5..v8, driven by theta5 = theta2 + sigma.
    Second,
}

impl LoopId {
    pub fn index(self) -> u8 {
        match self {
            LoopId::First => 1,
            LoopId::Second => 2,
        }
    }
}

impl std::fmt::Display for LoopId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "loop {}", self.index())
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("degenerate geometry: {0}")]
    DegenerateGeometry(String),

    #[error("{loop_id} cannot close at input angle {theta_in_deg:.6} deg")]
    NoClosure { loop_id: LoopId, theta_in_deg: f64 },

    #[error("{quantity} = {value} is outside [{lo}, {hi}]")]
    OutOfRange {
        quantity: &'static str,
        value: f64,
        lo: f64,
        hi: f64,
    },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("registry rule `{rule}` violated: {detail}")]
    RuleViolation { rule: String, detail: String },
}

impl Error {
    /// Domain failures are properties of the mechanism or the requested
    /// operating point; everything else is a malformed input document.
    pub fn is_domain(&self) -> bool {
        !matches!(self, Error::Config(_))
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

use thiserror::Error;

/// Errors produced by the synthesis and analysis routines.
///
/// `Domain` covers arguments that violate a precondition (inadmissible
/// contour radius, derivative order past the piecewise degree, a band that
/// reaches dc when a bandpass construction was requested). `Capacity` means
/// a search hit its resource cap before meeting the requested tolerance and
/// carries the best value achieved. `Plan` flags use of an infeasible plan
/// without an explicit override, and `Numeric` covers non-finite values
/// encountered mid-computation.
#[derive(Debug, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("synthesis error: non-finite coefficient at order {order}")]
    NonFiniteCoefficient { order: usize },

    #[error("capacity error: {context}; best achieved {best:.6e} against target {target:.6e}")]
    Capacity {
        context: String,
        best: f64,
        target: f64,
    },

    #[error("plan error: {0}")]
    Plan(String),

    #[error("numeric error: {0}")]
    Numeric(String),
}

pub type Result<T> = std::result::Result<T, Error>;

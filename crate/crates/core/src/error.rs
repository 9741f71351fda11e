//! Error types shared across the crate.

use thiserror::Error;

/// Errors from grid construction, transforms and norm evaluation.
#[derive(Debug, Clone, Error)]
pub enum SpectralError {
    #[error("num_points must be a power of two >= 16, got {0}")]
    BadGridSize(usize),
    #[error("half_length must be positive and finite, got {0}")]
    BadHalfLength(f64),
    #[error("input field contains NaN or Inf")]
    NonFiniteField,
    #[error("multiplier symbol is NaN or Inf at wavenumber {xi}")]
    NonFiniteSymbol { xi: f64 },
    #[error("fields live on different grids")]
    GridMismatch,
    #[error("Lebesgue exponent must satisfy p >= 1, got {0}")]
    BadExponent(f64),
    #[error("dyadic block j={j} not resolvable on this grid (j_max={j_max})")]
    BlockOutOfRange { j: i32, j_max: i32 },
    #[error("dealias fraction must lie in (0, 1], got {0}")]
    BadFraction(f64),
    #[error(
        "grid too coarse for the bump profile: wavenumber spacing {spacing} exceeds {required}"
    )]
    GridTooCoarse { spacing: f64, required: f64 },
    #[error(
        "bump field does not decay at the domain boundary: \
         relative tail {tail:.3e} exceeds {tol:.1e}; enlarge half_length"
    )]
    BumpTailTooLarge { tail: f64, tol: f64 },
    #[error(
        "mode index n={n} not resolvable on this grid; \
         need num_points >= {min_points} at this half_length"
    )]
    UnresolvableMode { n: u32, min_points: usize },
    #[error("field is not resolved: fraction {fraction:.3e} of spectral energy above the dealias cutoff")]
    Unresolved { fraction: f64 },
    #[error("invalid solver configuration: {0}")]
    BadConfig(String),
    #[error("time step {dt} exceeds stability bound {bound}")]
    CflViolation { dt: f64, bound: f64 },
}

pub type Result<T> = std::result::Result<T, SpectralError>;

//! Exact-arithmetic stability computations for complete intersections cut out
//! by semi-invariant sections of bundles on Grassmannians and projective
//! spaces.
//!
//! Everything is computed over arbitrary-precision rationals: truncated power
//! series of characteristic classes, Atiyah-Bott fixed-point sums, closed-form
//! Futaki and Chow-weight evaluators, one-parameter-subgroup degenerations of
//! linear systems, and an independent Koszul-complex oracle on projective
//! space that cross-checks the closed forms by polynomial interpolation.
//!
//! The low-level algebra (series, symmetric functions, dense linear algebra,
//! interpolation) is generic over any [`scalar::Scalar`]; the geometric layers
//! instantiate it at [`Rat`].

pub mod chern;
pub mod degeneration;
pub mod error;
pub mod futaki;
pub mod grassmann;
pub mod koszul;
pub mod linalg;
pub mod localization;
pub mod sampling;
pub mod scalar;
pub mod series;
pub mod suites;

/// Exact rational scalar used by every geometric computation.
pub type Rat = num_rational::BigRational;

/// Truncated power series over [`Rat`].
pub type RatSeries = series::Series<Rat>;

pub use error::Error;

/// Shorthand result type.
pub type Result<T> = std::result::Result<T, Error>;

/// The rational `n`.
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(n.into())
}

/// The rational `n/d`. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(n.into(), d.into())
}

/// `n!` as a rational.
pub fn factorial(n: usize) -> Rat {
    let mut acc = num_bigint::BigInt::from(1u32);
    for i in 2..=n {
        acc *= i as u64;
    }
    Rat::from_integer(acc)
}

/// Binomial coefficient `C(n, k)` for machine-sized arguments.
pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    num_integer::binomial(n as u64, k as u64)
}

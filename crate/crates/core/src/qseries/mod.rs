//! Exact rational scalars and truncated formal power series.

pub mod factorial;
pub mod rational;
mod series;

pub use rational::{format_rational, parse_rational, ParseRationalError, Rational};
pub use series::{bessel_x_of_y, Series, SeriesError};

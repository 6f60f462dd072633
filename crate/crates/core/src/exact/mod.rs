//! Exact scalars: rationals, sparse multivariate polynomials and rational
//! functions over the rationals in named parameters.

mod parse;
mod poly;
mod ratfunc;
mod rational;
mod scalar;

pub use poly::{univariate_gcd, Assignment, Monomial, MultiPoly};
pub use ratfunc::RatFunc;
pub use rational::Rational;
pub use scalar::{require_rational, Scalar};

/// Parses `name=value` pairs such as `a=2` or `b=-1/2` into an assignment.
pub fn parse_assignment<'a>(pairs: impl IntoIterator<Item = &'a str>) -> crate::Result<Assignment> {
    pairs
        .into_iter()
        .map(|pair| {
            let (k, v) = pair
                .split_once('=')
                .ok_or_else(|| crate::Error::parse(pair, "expected name=value"))?;
            Ok((k.trim().to_string(), v.trim().parse::<Rational>()?))
        })
        .collect()
}

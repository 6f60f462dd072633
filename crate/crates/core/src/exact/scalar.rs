use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{RatFunc, Rational};
use crate::error::{Error, Result};

/// Exact field element usable as a structure constant: either a plain
/// rational or a rational function of named parameters.
pub trait Scalar:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn from_rational(r: Rational) -> Self;
    fn try_div(&self, rhs: &Self) -> Result<Self>;
    /// The value as a rational, when it does not depend on any parameter.
    fn to_rational(&self) -> Option<Rational>;
    fn to_ratfunc(&self) -> RatFunc;
    fn substitute(&self, subs: &BTreeMap<String, RatFunc>) -> Result<Self>;

    fn add_ref(&self, rhs: &Self) -> Self {
        self.clone() + rhs.clone()
    }

    fn sub_ref(&self, rhs: &Self) -> Self {
        self.clone() - rhs.clone()
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        self.clone() * rhs.clone()
    }

    fn neg_ref(&self) -> Self {
        -self.clone()
    }

    fn from_i64(n: i64) -> Self {
        Self::from_rational(Rational::from(n))
    }
}

impl Scalar for Rational {
    fn zero() -> Self {
        Rational::zero()
    }

    fn one() -> Self {
        Rational::one()
    }

    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }

    fn from_rational(r: Rational) -> Self {
        r
    }

    fn try_div(&self, rhs: &Self) -> Result<Self> {
        self.checked_div(rhs)
    }

    fn to_rational(&self) -> Option<Rational> {
        Some(self.clone())
    }

    fn to_ratfunc(&self) -> RatFunc {
        RatFunc::constant(self.clone())
    }

    fn substitute(&self, _subs: &BTreeMap<String, RatFunc>) -> Result<Self> {
        Ok(self.clone())
    }

    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }

    fn sub_ref(&self, rhs: &Self) -> Self {
        self - rhs
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn neg_ref(&self) -> Self {
        -self
    }
}

impl Scalar for RatFunc {
    fn zero() -> Self {
        RatFunc::zero()
    }

    fn one() -> Self {
        RatFunc::one()
    }

    fn is_zero(&self) -> bool {
        RatFunc::is_zero(self)
    }

    fn from_rational(r: Rational) -> Self {
        RatFunc::constant(r)
    }

    fn try_div(&self, rhs: &Self) -> Result<Self> {
        self.checked_div(rhs)
    }

    fn to_rational(&self) -> Option<Rational> {
        self.as_constant()
    }

    fn to_ratfunc(&self) -> RatFunc {
        self.clone()
    }

    fn substitute(&self, subs: &BTreeMap<String, RatFunc>) -> Result<Self> {
        RatFunc::substitute(self, subs)
    }

    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }

    fn sub_ref(&self, rhs: &Self) -> Self {
        self - rhs
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn neg_ref(&self) -> Self {
        -self
    }
}

/// Converts a parametric scalar to a rational, failing on any parameter.
pub fn require_rational<S: Scalar>(x: &S) -> Result<Rational> {
    x.to_rational().ok_or_else(|| Error::ParametricInput(x.to_string()))
}

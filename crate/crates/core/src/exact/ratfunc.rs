use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::poly::{univariate_gcd, Assignment};
use super::{parse, MultiPoly, Rational};
use crate::error::{Error, Result};

/// Quotient of two polynomials.
///
/// The denominator is never zero and is kept monic. Common factors are
/// cancelled whenever the denominator is univariate (including the plain
/// univariate case); no multivariate gcd is attempted, so equality is decided
/// by cross-multiplication rather than by comparing representations.
#[derive(Clone)]
pub struct RatFunc {
    num: MultiPoly,
    den: MultiPoly,
}

impl RatFunc {
    pub fn new(num: MultiPoly, den: MultiPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(RatFunc::reduce(num, den))
    }

    fn reduce(num: MultiPoly, den: MultiPoly) -> Self {
        if num.is_zero() {
            return RatFunc::zero();
        }
        if let Some(c) = den.as_constant() {
            let inv = c.recip().expect("nonzero constant denominator");
            return RatFunc {
                num: num.scale(&inv),
                den: MultiPoly::one(),
            };
        }
        let (mut num, mut den) = (num, den);
        if let Some(v) = den.univariate_var().map(str::to_string) {
            let g = univariate_gcd(&v, &den, &num.content_in(&v));
            if !g.is_one() && !g.is_zero() {
                num = num.div_exact(&g).expect("gcd divides numerator");
                den = den.div_exact(&g).expect("gcd divides denominator");
            }
        }
        let lc = den.leading_coefficient();
        let inv = lc.recip().expect("nonzero leading coefficient");
        RatFunc {
            num: num.scale(&inv),
            den: den.scale(&inv),
        }
    }

    pub fn zero() -> Self {
        RatFunc {
            num: MultiPoly::zero(),
            den: MultiPoly::one(),
        }
    }

    pub fn one() -> Self {
        RatFunc::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        RatFunc {
            num: MultiPoly::constant(c),
            den: MultiPoly::one(),
        }
    }

    pub fn var(name: &str) -> Self {
        RatFunc::from(MultiPoly::var(name))
    }

    pub fn numer(&self) -> &MultiPoly {
        &self.num
    }

    pub fn denom(&self) -> &MultiPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn as_constant(&self) -> Option<Rational> {
        if self.den.is_one() {
            self.num.as_constant()
        } else {
            None
        }
    }

    pub fn as_polynomial(&self) -> Option<&MultiPoly> {
        self.den.is_one().then_some(&self.num)
    }

    pub fn variables(&self) -> Vec<String> {
        let mut v: Vec<String> = self
            .num
            .variables()
            .iter()
            .chain(self.den.variables())
            .cloned()
            .collect();
        v.sort();
        v.dedup();
        v
    }

    pub fn checked_div(&self, rhs: &RatFunc) -> Result<RatFunc> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        RatFunc::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }

    pub fn recip(&self) -> Result<RatFunc> {
        RatFunc::one().checked_div(self)
    }

    pub fn pow(&self, exp: u32) -> RatFunc {
        RatFunc::reduce(self.num.pow(exp), self.den.pow(exp))
    }

    /// Evaluates at a full assignment; errors if the denominator vanishes.
    pub fn eval(&self, assignment: &Assignment) -> Result<Rational> {
        let n = self.num.eval(assignment)?;
        let d = self.den.eval(assignment)?;
        n.checked_div(&d)
    }

    /// Substitutes rational functions for variables.
    pub fn substitute(&self, subs: &BTreeMap<String, RatFunc>) -> Result<RatFunc> {
        let apply = |p: &MultiPoly| -> Result<RatFunc> {
            let mut acc = RatFunc::zero();
            for (m, c) in p.terms() {
                let mut t = RatFunc::constant(c.clone());
                for (v, &e) in p.variables().iter().zip(m.exponents()) {
                    if e == 0 {
                        continue;
                    }
                    let base = subs.get(v).cloned().unwrap_or_else(|| RatFunc::var(v));
                    t = &t * &base.pow(e);
                }
                acc = &acc + &t;
            }
            Ok(acc)
        };
        apply(&self.num)?.checked_div(&apply(&self.den)?)
    }
}

impl PartialEq for RatFunc {
    fn eq(&self, other: &Self) -> bool {
        if self.den == other.den {
            return self.num == other.num;
        }
        &self.num * &other.den == &other.num * &self.den
    }
}

impl From<MultiPoly> for RatFunc {
    fn from(p: MultiPoly) -> Self {
        RatFunc {
            num: p,
            den: MultiPoly::one(),
        }
    }
}

impl From<Rational> for RatFunc {
    fn from(c: Rational) -> Self {
        RatFunc::constant(c)
    }
}

impl From<i64> for RatFunc {
    fn from(n: i64) -> Self {
        RatFunc::constant(Rational::from(n))
    }
}

impl<'b> Add<&'b RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &'b RatFunc) -> RatFunc {
        if self.den == rhs.den {
            return RatFunc::reduce(&self.num + &rhs.num, self.den.clone());
        }
        RatFunc::reduce(&(&self.num * &rhs.den) + &(&rhs.num * &self.den), &self.den * &rhs.den)
    }
}

impl<'b> Sub<&'b RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &'b RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl<'b> Mul<&'b RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &'b RatFunc) -> RatFunc {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero();
        }
        RatFunc::reduce(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Add for RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: RatFunc) -> RatFunc {
        &self + &rhs
    }
}

impl Sub for RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: RatFunc) -> RatFunc {
        &self - &rhs
    }
}

impl Mul for RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: RatFunc) -> RatFunc {
        &self * &rhs
    }
}

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -&self
    }
}

fn needs_parens(p: &MultiPoly) -> bool {
    p.num_terms() > 1
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        // Clear fractional numerator coefficients into the denominator.
        let lcm = Rational::from(Rational::lcm_denominators(self.num.terms().map(|(_, c)| c)));
        let (num, den) = (self.num.scale(&lcm), self.den.scale(&lcm));
        if needs_parens(&num) {
            write!(f, "({num})/")?;
        } else {
            write!(f, "{num}/")?;
        }
        let bare = den.num_terms() == 1 && den.variables().len() == 1 && den.leading_coefficient().is_one();
        if bare {
            write!(f, "{den}")
        } else {
            write!(f, "({den})")
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc({self})")
    }
}

impl FromStr for RatFunc {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse::parse_expression(s)
    }
}

impl Serialize for RatFunc {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for RatFunc {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rf(s: &str) -> RatFunc {
        s.parse().unwrap()
    }

    #[test]
    fn cancellation() {
        assert_eq!(&rf("1/a") * &rf("a"), RatFunc::one());
        let r = rf("(a^2 - 1)/(a - 1)");
        assert!(r.denom().is_one());
        assert_eq!(r.numer().to_string(), "a + 1");
    }

    #[test]
    fn evaluation_of_coefficient() {
        let r = rf("(a + 1)/(a - 1)");
        let at = Assignment::from([("a".to_string(), Rational::from(3))]);
        assert_eq!(r.eval(&at).unwrap(), Rational::from(2));
        let at1 = Assignment::from([("a".to_string(), Rational::from(1))]);
        assert!(matches!(r.eval(&at1), Err(Error::DivisionByZero)));
    }

    #[test]
    fn chi_of_vi_a() {
        let chi = rf("4*a^2/(a^2 - 1)");
        let at = Assignment::from([("a".to_string(), Rational::from(2))]);
        assert_eq!(chi.eval(&at).unwrap(), Rational::frac(16, 3));
    }

    #[test]
    fn division_by_zero_function() {
        assert!(rf("a").checked_div(&RatFunc::zero()).is_err());
        assert!("1/0".parse::<RatFunc>().is_err());
        assert!("b/(a - a)".parse::<RatFunc>().is_err());
    }

    #[test]
    fn display_round_trips() {
        for s in ["-b/a", "(a + 1)/(a - 1)", "1/a^2", "b/(a*t1)", "3/2*a*b - 1", "0"] {
            let r = rf(s);
            let back = rf(&r.to_string());
            assert_eq!(r, back, "{s} -> {r}");
            assert_eq!(r.to_string(), back.to_string());
        }
    }

    #[test]
    fn denominator_is_monic() {
        let r = rf("1/(2*a - 4)");
        assert_eq!(r.to_string(), "1/(2*a - 4)");
        assert_eq!(r, rf("1/(2*(a - 2))"));
    }

    #[test]
    fn multivariate_numerator_reduced_by_univariate_denominator() {
        let r = rf("(a*t + a^2)/a");
        assert!(r.denom().is_one());
        assert_eq!(r.numer().to_string(), "a + t");
    }
}

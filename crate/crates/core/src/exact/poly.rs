use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::Rational;
use crate::error::{Error, Result};

/// Assignment of rational values to named parameters.
pub type Assignment = BTreeMap<String, Rational>;

/// Exponent vector ordered graded-lexicographically: total degree first,
/// then lexicographically with the first variable most significant.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    fn div(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse polynomial over the rationals in named variables.
///
/// The variable list is sorted and contains exactly the variables that occur
/// with a positive exponent, so equal polynomials have identical
/// representations regardless of how they were built.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct MultiPoly {
    vars: Vec<String>,
    terms: BTreeMap<Monomial, Rational>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        MultiPoly::default()
    }

    pub fn one() -> Self {
        MultiPoly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial(Vec::new()), c);
        }
        MultiPoly {
            vars: Vec::new(),
            terms,
        }
    }

    pub fn var(name: &str) -> Self {
        MultiPoly {
            vars: vec![name.to_string()],
            terms: BTreeMap::from([(Monomial(vec![1]), Rational::one())]),
        }
    }

    /// Builds a polynomial from `(coefficient, [(variable, exponent)])` pairs.
    pub fn from_terms<'a>(terms: impl IntoIterator<Item = (Rational, Vec<(&'a str, u32)>)>) -> Self {
        terms
            .into_iter()
            .map(|(c, powers)| {
                powers
                    .into_iter()
                    .fold(MultiPoly::constant(c), |acc, (v, e)| acc * MultiPoly::var(v).pow(e))
            })
            .fold(MultiPoly::zero(), |acc, t| acc + t)
    }

    pub fn variables(&self) -> &[String] {
        &self.vars
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 if self.vars.is_empty() => self.terms.values().next().cloned(),
            _ => None,
        }
    }

    pub fn is_one(&self) -> bool {
        self.as_constant().is_some_and(|c| c.is_one())
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn degree_in(&self, var: &str) -> u32 {
        match self.var_index(var) {
            Some(i) => self.terms.keys().map(|m| m.0[i]).max().unwrap_or(0),
            None => 0,
        }
    }

    /// Degree counting only the listed variables.
    pub fn degree_in_vars(&self, vars: &[String]) -> u32 {
        let idx: Vec<usize> = vars.iter().filter_map(|v| self.var_index(v)).collect();
        self.terms
            .keys()
            .map(|m| idx.iter().map(|&i| m.0[i]).sum())
            .max()
            .unwrap_or(0)
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn leading_coefficient(&self) -> Rational {
        self.leading_term()
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Rational::zero)
    }

    fn var_index(&self, var: &str) -> Option<usize> {
        self.vars.binary_search_by(|v| v.as_str().cmp(var)).ok()
    }

    /// Canonicalizes: drops zero coefficients and unused variables.
    fn normalized(vars: Vec<String>, terms: BTreeMap<Monomial, Rational>) -> Self {
        let terms: BTreeMap<_, _> = terms.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        let used: Vec<usize> = (0..vars.len()).filter(|&i| terms.keys().any(|m| m.0[i] > 0)).collect();
        if used.len() == vars.len() {
            return MultiPoly { vars, terms };
        }
        let new_vars = used.iter().map(|&i| vars[i].clone()).collect();
        let new_terms = terms
            .into_iter()
            .map(|(m, c)| (Monomial(used.iter().map(|&i| m.0[i]).collect()), c))
            .collect();
        MultiPoly {
            vars: new_vars,
            terms: new_terms,
        }
    }

    fn embed(&self, vars: &[String]) -> BTreeMap<Monomial, Rational> {
        let map: Vec<usize> = self
            .vars
            .iter()
            .map(|v| vars.binary_search(v).expect("variable missing from union"))
            .collect();
        self.terms
            .iter()
            .map(|(m, c)| {
                let mut e = vec![0; vars.len()];
                for (k, &pos) in map.iter().enumerate() {
                    e[pos] = m.0[k];
                }
                (Monomial(e), c.clone())
            })
            .collect()
    }

    fn union_vars(&self, other: &MultiPoly) -> Vec<String> {
        let set: BTreeSet<&String> = self.vars.iter().chain(&other.vars).collect();
        set.into_iter().cloned().collect()
    }

    fn combine(&self, other: &MultiPoly, negate: bool) -> MultiPoly {
        let vars = self.union_vars(other);
        let mut terms = self.embed(&vars);
        for (m, c) in other.embed(&vars) {
            let entry = terms.entry(m).or_insert_with(Rational::zero);
            if negate {
                *entry -= &c;
            } else {
                *entry += &c;
            }
        }
        MultiPoly::normalized(vars, terms)
    }

    fn product(&self, other: &MultiPoly) -> MultiPoly {
        if self.is_zero() || other.is_zero() {
            return MultiPoly::zero();
        }
        let vars = self.union_vars(other);
        let a = self.embed(&vars);
        let b = other.embed(&vars);
        let mut terms: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for (ma, ca) in &a {
            for (mb, cb) in &b {
                *terms.entry(ma.mul(mb)).or_insert_with(Rational::zero) += &(ca * cb);
            }
        }
        MultiPoly::normalized(vars, terms)
    }

    pub fn scale(&self, c: &Rational) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero();
        }
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> MultiPoly {
        (0..exp).fold(MultiPoly::one(), |acc, _| &acc * self)
    }

    /// Evaluates at a full assignment.
    pub fn eval(&self, assignment: &Assignment) -> Result<Rational> {
        let values = self
            .vars
            .iter()
            .map(|v| assignment.get(v).ok_or_else(|| Error::MissingVariable(v.clone())))
            .collect::<Result<Vec<_>>>()?;
        Ok(self
            .terms
            .iter()
            .map(|(m, c)| m.0.iter().zip(&values).fold(c.clone(), |acc, (&e, x)| acc * x.pow(e)))
            .sum())
    }

    /// Substitutes values for the assigned variables, leaving the others.
    pub fn eval_partial(&self, assignment: &Assignment) -> MultiPoly {
        let subs: BTreeMap<String, MultiPoly> = assignment
            .iter()
            .filter(|(k, _)| self.var_index(k).is_some())
            .map(|(k, v)| (k.clone(), MultiPoly::constant(v.clone())))
            .collect();
        self.compose(&subs)
    }

    /// Replaces variables by polynomials.
    pub fn compose(&self, subs: &BTreeMap<String, MultiPoly>) -> MultiPoly {
        if !self.vars.iter().any(|v| subs.contains_key(v)) {
            return self.clone();
        }
        let factors: Vec<MultiPoly> = self
            .vars
            .iter()
            .map(|v| subs.get(v).cloned().unwrap_or_else(|| MultiPoly::var(v)))
            .collect();
        let mut acc = MultiPoly::zero();
        for (m, c) in &self.terms {
            let mut t = MultiPoly::constant(c.clone());
            for (f, &e) in factors.iter().zip(&m.0) {
                if e > 0 {
                    t = &t * &f.pow(e);
                }
            }
            acc = &acc + &t;
        }
        acc
    }

    /// Exact division; `None` when `divisor` does not divide `self`.
    pub fn div_exact(&self, divisor: &MultiPoly) -> Option<MultiPoly> {
        if divisor.is_zero() {
            return None;
        }
        if let Some(c) = divisor.as_constant() {
            return Some(self.scale(&c.recip().ok()?));
        }
        let vars = self.union_vars(divisor);
        let d = divisor.embed(&vars);
        let (ld_m, ld_c) = d.iter().next_back().map(|(m, c)| (m.clone(), c.clone()))?;
        let mut rem = self.embed(&vars);
        let mut quot: BTreeMap<Monomial, Rational> = BTreeMap::new();
        while let Some((lm, lc)) = rem.iter().next_back().map(|(m, c)| (m.clone(), c.clone())) {
            if !ld_m.divides(&lm) {
                return None;
            }
            let qm = lm.div(&ld_m);
            let qc = &lc / &ld_c;
            for (m, c) in &d {
                let key = m.mul(&qm);
                let entry = rem.entry(key.clone()).or_insert_with(Rational::zero);
                *entry -= &(c * &qc);
                if entry.is_zero() {
                    rem.remove(&key);
                }
            }
            quot.insert(qm, qc);
        }
        Some(MultiPoly::normalized(vars, quot))
    }

    /// The single variable this polynomial depends on, if it is univariate.
    pub fn univariate_var(&self) -> Option<&str> {
        match self.vars.as_slice() {
            [v] => Some(v),
            _ => None,
        }
    }

    /// Dense coefficients (lowest degree first) as a polynomial in `var`;
    /// `None` if other variables occur.
    pub fn univariate_coeffs(&self, var: &str) -> Option<Vec<Rational>> {
        if self.vars.iter().any(|v| v != var) {
            return None;
        }
        let deg = self.degree_in(var) as usize;
        let mut out = vec![Rational::zero(); deg + 1];
        for (m, c) in &self.terms {
            let e = m.0.first().copied().unwrap_or(0) as usize;
            out[e] = c.clone();
        }
        Some(out)
    }

    pub fn from_univariate(var: &str, coeffs: &[Rational]) -> MultiPoly {
        let terms = coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(e, c)| (Monomial(vec![e as u32]), c.clone()))
            .collect();
        MultiPoly::normalized(vec![var.to_string()], terms)
    }

    /// Views `self` as a polynomial in the other variables with coefficients
    /// in Q[var], returning those coefficients.
    fn coefficients_in(&self, var: &str) -> Vec<MultiPoly> {
        let Some(vi) = self.var_index(var) else {
            return self.terms.values().map(|c| MultiPoly::constant(c.clone())).collect();
        };
        let mut groups: BTreeMap<Vec<u32>, Vec<Rational>> = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut rest = m.0.clone();
            let e = rest.remove(vi) as usize;
            let slot = groups.entry(rest).or_default();
            if slot.len() <= e {
                slot.resize(e + 1, Rational::zero());
            }
            slot[e] = c.clone();
        }
        groups
            .values()
            .map(|coeffs| MultiPoly::from_univariate(var, coeffs))
            .collect()
    }

    /// Gcd over Q[var] of the coefficients of `self` viewed in Q[var][rest].
    pub fn content_in(&self, var: &str) -> MultiPoly {
        self.coefficients_in(var)
            .iter()
            .fold(MultiPoly::zero(), |g, c| univariate_gcd(var, &g, c))
    }

    /// Divides out the Q[var]-content and scales to a monic leading term.
    pub fn primitive_part_in(&self, var: &str) -> MultiPoly {
        if self.is_zero() {
            return MultiPoly::zero();
        }
        let content = self.content_in(var);
        let p = self.div_exact(&content).expect("content divides the polynomial");
        p.monic()
    }

    pub fn monic(&self) -> MultiPoly {
        if self.is_zero() {
            return MultiPoly::zero();
        }
        let lc = self.leading_coefficient();
        self.scale(&lc.recip().expect("nonzero leading coefficient"))
    }

    /// Rational root of a univariate polynomial of degree at most two (after
    /// removing factors of the variable), or zero if it is a root.
    pub fn rational_roots(&self, var: &str) -> Option<Vec<Rational>> {
        let coeffs = self.univariate_coeffs(var)?;
        let mut roots = Vec::new();
        let low = coeffs.iter().position(|c| !c.is_zero())?;
        if low > 0 {
            roots.push(Rational::zero());
        }
        let rest = &coeffs[low..];
        match rest.len() {
            1 => {}
            2 => roots.push(-(&rest[0] / &rest[1])),
            3 => {
                let (c, b, a) = (&rest[0], &rest[1], &rest[2]);
                let disc = b * b - Rational::from(4) * a * c;
                if let Some(s) = disc.sqrt() {
                    let two_a = Rational::from(2) * a;
                    roots.push((-b + &s) / two_a.clone());
                    if !s.is_zero() {
                        roots.push((-b - &s) / two_a);
                    }
                }
            }
            _ => {}
        }
        Some(roots)
    }
}

/// Monic gcd of two univariate polynomials in `var` (zero if both are zero).
pub fn univariate_gcd(var: &str, a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
    let mut x = a.univariate_coeffs(var).expect("univariate operand");
    let mut y = b.univariate_coeffs(var).expect("univariate operand");
    trim(&mut x);
    trim(&mut y);
    while !y.is_empty() {
        let r = poly_rem(&x, &y);
        x = y;
        y = r;
    }
    if x.is_empty() {
        return MultiPoly::zero();
    }
    let lead = x.last().expect("nonempty").clone();
    let monic: Vec<Rational> = x.iter().map(|c| c / &lead).collect();
    MultiPoly::from_univariate(var, &monic)
}

fn trim(p: &mut Vec<Rational>) {
    while p.last().is_some_and(Rational::is_zero) {
        p.pop();
    }
}

fn poly_rem(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut r = a.to_vec();
    let lb = b.last().expect("nonzero divisor");
    while r.len() >= b.len() {
        let shift = r.len() - b.len();
        let q = r.last().expect("nonempty") / lb;
        for (i, c) in b.iter().enumerate() {
            r[shift + i] -= &(c * &q);
        }
        r.pop();
        trim(&mut r);
    }
    r
}

impl<'b> Add<&'b MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &'b MultiPoly) -> MultiPoly {
        self.combine(rhs, false)
    }
}

impl<'b> Sub<&'b MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &'b MultiPoly) -> MultiPoly {
        self.combine(rhs, true)
    }
}

impl<'b> Mul<&'b MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &'b MultiPoly) -> MultiPoly {
        self.product(rhs)
    }
}

impl Add for MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: MultiPoly) -> MultiPoly {
        &self + &rhs
    }
}

impl Sub for MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: MultiPoly) -> MultiPoly {
        &self - &rhs
    }
}

impl Mul for MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: MultiPoly) -> MultiPoly {
        &self * &rhs
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        self.scale(&Rational::from(-1))
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        self.scale(&Rational::from(-1))
    }
}

impl From<Rational> for MultiPoly {
    fn from(c: Rational) -> Self {
        MultiPoly::constant(c)
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (n, (m, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            match (n, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = c.abs();
            let factors: Vec<String> = self
                .vars
                .iter()
                .zip(&m.0)
                .filter(|(_, &e)| e > 0)
                .map(|(v, &e)| if e == 1 { v.clone() } else { format!("{v}^{e}") })
                .collect();
            if factors.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                f.write_str(&factors.join("*"))?;
            } else {
                write!(f, "{abs}*{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a() -> MultiPoly {
        MultiPoly::var("a")
    }

    fn c(n: i64) -> MultiPoly {
        MultiPoly::constant(Rational::from(n))
    }

    #[test]
    fn difference_of_squares() {
        let p = &(&a() + &c(1)) * &(&a() - &c(1));
        assert_eq!(p.to_string(), "a^2 - 1");
        assert_eq!(p, &a().pow(2) - &c(1));
    }

    #[test]
    fn additive_inverse_is_canonical_zero() {
        let p = &(&a() * &MultiPoly::var("b")) + &c(3);
        let z = &p + &(-&p);
        assert!(z.is_zero());
        assert!(z.variables().is_empty());
        assert_eq!(z, MultiPoly::zero());
    }

    #[test]
    fn evaluation() {
        let disc = MultiPoly::from_terms([
            (Rational::from(1), vec![("alpha", 2)]),
            (Rational::from(1), vec![("beta", 2)]),
            (Rational::from(-1), vec![("gamma", 2)]),
        ]);
        let at: Assignment = [("alpha", 1), ("beta", 0), ("gamma", 0)]
            .into_iter()
            .map(|(k, v)| (k.to_string(), Rational::from(v)))
            .collect();
        assert_eq!(disc.eval(&at).unwrap(), Rational::one());
        let p = &a().pow(2) - &c(1);
        let at1 = Assignment::from([("a".to_string(), Rational::one())]);
        assert!(p.eval(&at1).unwrap().is_zero());
        assert!(MultiPoly::zero().eval(&Assignment::new()).unwrap().is_zero());
        assert!(matches!(
            p.eval(&Assignment::new()),
            Err(Error::MissingVariable(v)) if v == "a"
        ));
    }

    #[test]
    fn grlex_display_order() {
        let b = MultiPoly::var("b");
        let p = &(&(&a() * &b) + &a().pow(2)) + &(&b + &c(-2));
        assert_eq!(p.to_string(), "a^2 + a*b + b - 2");
    }

    #[test]
    fn exact_division_and_gcd() {
        let p = &a().pow(2) - &c(1);
        let q = &a() - &c(1);
        assert_eq!(p.div_exact(&q).unwrap(), &a() + &c(1));
        assert!(p.div_exact(&a()).is_none());
        assert_eq!(univariate_gcd("a", &p, &q), q);
        let t = MultiPoly::var("t");
        let mixed = &(&a() * &t) + &a().pow(2);
        assert_eq!(mixed.content_in("a"), a());
        assert_eq!(mixed.primitive_part_in("a"), &a() + &t);
    }

    #[test]
    fn roots_of_low_degree() {
        let p = &(&a().pow(2) - &c(4)) * &a();
        let mut r = p.rational_roots("a").unwrap();
        r.sort();
        assert_eq!(r, vec![Rational::from(-2), Rational::zero(), Rational::from(2)]);
        let irr = &a().pow(2) - &c(2);
        assert!(irr.rational_roots("a").unwrap().is_empty());
    }
}

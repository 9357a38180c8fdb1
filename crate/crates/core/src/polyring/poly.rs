use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::One;

use super::field::{Field, Rational};
use super::monomial::Monomial;
use super::order::MonomialOrder;
use crate::error::{Error, Result};

/// Name of the homogenizing variable prepended by [`Ring::homogenizing`].
pub const HOMOGENIZING_VAR: &str = "z0";

/// Total degree with a `-inf` value for the zero polynomial, so that
/// `deg(p*q) = deg p + deg q` holds unconditionally.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    NegInfinity,
    Finite(u32),
}

impl Degree {
    pub fn finite(self) -> Option<u32> {
        match self {
            Degree::NegInfinity => None,
            Degree::Finite(d) => Some(d),
        }
    }
}

impl Add for Degree {
    type Output = Degree;
    fn add(self, rhs: Degree) -> Degree {
        match (self, rhs) {
            (Degree::Finite(a), Degree::Finite(b)) => Degree::Finite(a + b),
            _ => Degree::NegInfinity,
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::NegInfinity => write!(f, "-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

/// Ring context: variable names, the active monomial order, and the unit
/// of the coefficient field.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Ring<F: Field = Rational> {
    vars: Vec<String>,
    order: MonomialOrder,
    one: F,
}

impl Ring<Rational> {
    /// Polynomial ring over the rationals with grevlex order.
    pub fn new<S: AsRef<str>>(vars: &[S]) -> Arc<Self> {
        Ring::with_field(vars, MonomialOrder::grevlex(), Rational::one())
    }
}

impl<F: Field> Ring<F> {
    pub fn with_field<S: AsRef<str>>(vars: &[S], order: MonomialOrder, one: F) -> Arc<Self> {
        Arc::new(Ring {
            vars: vars.iter().map(|v| v.as_ref().to_string()).collect(),
            order,
            one: one.one_like(),
        })
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn one(&self) -> F {
        self.one.clone()
    }

    pub fn zero(&self) -> F {
        self.one.zero_like()
    }

    /// Same variables and coefficient field, possibly a different order.
    pub fn same_space(&self, other: &Ring<F>) -> bool {
        self.vars == other.vars && self.one.characteristic() == other.one.characteristic()
    }

    pub fn with_order(&self, order: MonomialOrder) -> Arc<Ring<F>> {
        Arc::new(Ring {
            vars: self.vars.clone(),
            order,
            one: self.one.clone(),
        })
    }

    /// Same variables over another field.
    pub fn over<G: Field>(&self, one: G) -> Arc<Ring<G>> {
        Arc::new(Ring {
            vars: self.vars.clone(),
            order: self.order.clone(),
            one: one.one_like(),
        })
    }

    /// Ring with the homogenizing variable prepended (grevlex order).
    pub fn homogenizing(&self) -> Arc<Ring<F>> {
        let mut name = HOMOGENIZING_VAR.to_string();
        while self.vars.contains(&name) {
            name.push('\'');
        }
        let mut vars = vec![name];
        vars.extend(self.vars.iter().cloned());
        Arc::new(Ring {
            vars,
            order: MonomialOrder::grevlex(),
            one: self.one.clone(),
        })
    }

    /// Ring with the first variable removed (grevlex order).
    pub fn dehomogenizing(&self) -> Result<Arc<Ring<F>>> {
        if self.vars.is_empty() {
            return Err(Error::InvalidInput("ring has no variable to dehomogenize".into()));
        }
        Ok(Arc::new(Ring {
            vars: self.vars[1..].to_vec(),
            order: MonomialOrder::grevlex(),
            one: self.one.clone(),
        }))
    }

    /// Ring with extra variables prepended and appended.
    pub fn extended(&self, prefix: &[String], suffix: &[String], order: MonomialOrder) -> Arc<Ring<F>> {
        let mut vars = prefix.to_vec();
        vars.extend(self.vars.iter().cloned());
        vars.extend(suffix.iter().cloned());
        Arc::new(Ring {
            vars,
            order,
            one: self.one.clone(),
        })
    }
}

/// Sparse polynomial: terms sorted strictly decreasing in the ring order,
/// no zero coefficients.
#[derive(Clone)]
pub struct MultiPoly<F: Field = Rational> {
    ring: Arc<Ring<F>>,
    terms: Vec<(Monomial, F)>,
}

impl<F: Field> MultiPoly<F> {
    pub fn zero(ring: &Arc<Ring<F>>) -> Self {
        MultiPoly { ring: ring.clone(), terms: Vec::new() }
    }

    pub fn constant(ring: &Arc<Ring<F>>, c: F) -> Self {
        MultiPoly::monomial(ring, Monomial::one(ring.nvars()), c)
    }

    pub fn one(ring: &Arc<Ring<F>>) -> Self {
        MultiPoly::constant(ring, ring.one())
    }

    pub fn var(ring: &Arc<Ring<F>>, index: usize) -> Self {
        MultiPoly::monomial(ring, Monomial::var(ring.nvars(), index, 1), ring.one())
    }

    pub fn monomial(ring: &Arc<Ring<F>>, m: Monomial, c: F) -> Self {
        assert_eq!(m.len(), ring.nvars(), "monomial length does not match ring");
        if c.is_zero() {
            return MultiPoly::zero(ring);
        }
        MultiPoly { ring: ring.clone(), terms: vec![(m, c)] }
    }

    /// Builds a polynomial from arbitrary (possibly repeated, possibly zero) terms.
    pub fn from_terms(ring: &Arc<Ring<F>>, terms: impl IntoIterator<Item = (Monomial, F)>) -> Self {
        let mut acc: HashMap<Monomial, F> = HashMap::new();
        for (m, c) in terms {
            assert_eq!(m.len(), ring.nvars(), "monomial length does not match ring");
            match acc.get_mut(&m) {
                Some(v) => *v = v.plus(&c),
                None => {
                    acc.insert(m, c);
                }
            }
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        let order = ring.order();
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        MultiPoly { ring: ring.clone(), terms }
    }

    pub fn ring(&self) -> &Arc<Ring<F>> {
        &self.ring
    }

    pub fn terms(&self) -> &[(Monomial, F)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, F)> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|(m, _)| m)
    }

    pub fn leading_coeff(&self) -> Option<&F> {
        self.terms.first().map(|(_, c)| c)
    }

    pub fn coeff(&self, m: &Monomial) -> F {
        self.terms
            .iter()
            .find(|(t, _)| t == m)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(|| self.ring.zero())
    }

    pub fn degree(&self) -> Degree {
        self.terms
            .iter()
            .map(|(m, _)| m.degree())
            .max()
            .map_or(Degree::NegInfinity, Degree::Finite)
    }

    /// Lowest total degree among the terms; `None` for zero.
    pub fn low_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).min()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut it = self.terms.iter().map(|(m, _)| m.degree());
        match it.next() {
            None => true,
            Some(d) => it.all(|e| e == d),
        }
    }

    /// Largest degree in a single variable.
    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.iter().map(|(m, _)| m.exponents()[var]).max().unwrap_or(0)
    }

    fn check_ring(&self, other: &MultiPoly<F>) -> Result<()> {
        if Arc::ptr_eq(&self.ring, &other.ring) || *self.ring == *other.ring {
            Ok(())
        } else if self.ring.same_space(&other.ring) {
            Err(Error::RingMismatch("operands use different monomial orders".into()))
        } else {
            Err(Error::RingMismatch(format!(
                "[{}] vs [{}]",
                self.ring.vars.join(", "),
                other.ring.vars.join(", ")
            )))
        }
    }

    /// `self + c * m * other`, the workhorse of reduction.
    pub fn add_scaled(&self, c: &F, m: &Monomial, other: &MultiPoly<F>) -> MultiPoly<F> {
        debug_assert!(self.check_ring(other).is_ok());
        MultiPoly {
            ring: self.ring.clone(),
            terms: merge_scaled(&self.terms, c, m, &other.terms, self.ring.order()),
        }
    }

    /// Wraps terms already sorted for `ring`'s order with nonzero coefficients.
    pub(crate) fn from_sorted_terms(ring: &Arc<Ring<F>>, terms: Vec<(Monomial, F)>) -> Self {
        MultiPoly { ring: ring.clone(), terms }
    }

    pub fn checked_add(&self, other: &MultiPoly<F>) -> Result<MultiPoly<F>> {
        self.check_ring(other)?;
        Ok(self.add_scaled(&self.ring.one(), &Monomial::one(self.ring.nvars()), other))
    }

    pub fn checked_sub(&self, other: &MultiPoly<F>) -> Result<MultiPoly<F>> {
        self.check_ring(other)?;
        Ok(self.add_scaled(&self.ring.one().negated(), &Monomial::one(self.ring.nvars()), other))
    }

    pub fn checked_mul(&self, other: &MultiPoly<F>) -> Result<MultiPoly<F>> {
        self.check_ring(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(MultiPoly::zero(&self.ring));
        }
        let mut acc: HashMap<Monomial, F> = HashMap::with_capacity(self.len() * other.len());
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let m = m1.mul(m2);
                let c = c1.times(c2);
                match acc.get_mut(&m) {
                    Some(v) => *v = v.plus(&c),
                    None => {
                        acc.insert(m, c);
                    }
                }
            }
        }
        Ok(MultiPoly::from_terms(&self.ring, acc))
    }

    pub fn scale(&self, c: &F) -> MultiPoly<F> {
        if c.is_zero() {
            return MultiPoly::zero(&self.ring);
        }
        MultiPoly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, d)| (m.clone(), d.times(c))).collect(),
        }
    }

    pub fn mul_term(&self, m: &Monomial, c: &F) -> MultiPoly<F> {
        if c.is_zero() {
            return MultiPoly::zero(&self.ring);
        }
        MultiPoly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(t, d)| (t.mul(m), d.times(c))).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> MultiPoly<F> {
        let mut acc = MultiPoly::one(&self.ring);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Scales so the leading coefficient is 1 (zero stays zero).
    pub fn monic(&self) -> MultiPoly<F> {
        match self.leading_coeff() {
            None => self.clone(),
            Some(c) if c.is_one() => self.clone(),
            Some(c) => self.scale(&c.inverse()),
        }
    }

    pub fn evaluate(&self, point: &[F]) -> F {
        assert_eq!(point.len(), self.ring.nvars());
        let mut total = self.ring.zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (x, &e) in point.iter().zip(m.exponents()) {
                for _ in 0..e {
                    v = v.times(x);
                }
            }
            total = total.plus(&v);
        }
        total
    }

    /// Substitutes `images[i]` for variable `i`; all images share one ring.
    pub fn compose(&self, images: &[MultiPoly<F>]) -> Result<MultiPoly<F>> {
        if images.len() != self.ring.nvars() {
            return Err(Error::InvalidInput(format!(
                "expected {} substitutions, got {}",
                self.ring.nvars(),
                images.len()
            )));
        }
        let target = match images.first() {
            Some(p) => p.ring.clone(),
            None => return Err(Error::InvalidInput("nothing to substitute".into())),
        };
        let mut powers: Vec<Vec<MultiPoly<F>>> = images.iter().map(|p| vec![MultiPoly::one(&target), p.clone()]).collect();
        let mut total = MultiPoly::zero(&target);
        for (m, c) in &self.terms {
            let mut term = MultiPoly::constant(&target, c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                while powers[i].len() <= e as usize {
                    let next = powers[i].last().unwrap().checked_mul(&images[i])?;
                    powers[i].push(next);
                }
                term = term.checked_mul(&powers[i][e as usize])?;
            }
            total = total.checked_add(&term)?;
        }
        Ok(total)
    }

    /// Re-sorts the terms for another order on the same variables.
    pub fn with_ring(&self, ring: &Arc<Ring<F>>) -> Result<MultiPoly<F>> {
        if !self.ring.same_space(ring) {
            return Err(Error::RingMismatch(format!(
                "cannot move [{}] into [{}]",
                self.ring.vars.join(", "),
                ring.vars.join(", ")
            )));
        }
        let mut terms = self.terms.clone();
        let order = ring.order();
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        Ok(MultiPoly { ring: ring.clone(), terms })
    }

    /// Moves into `ring` by rewriting every exponent vector.
    pub fn map_monomials(&self, ring: &Arc<Ring<F>>, f: impl Fn(&Monomial) -> Monomial) -> MultiPoly<F> {
        MultiPoly::from_terms(ring, self.terms.iter().map(|(m, c)| (f(m), c.clone())))
    }

    /// `z0^d * F(z/z0)` in the ring with `z0` prepended.
    pub fn homogenize(&self, d: u32) -> Result<MultiPoly<F>> {
        let hring = self.ring.homogenizing();
        self.homogenize_into(d, &hring)
    }

    /// As [`MultiPoly::homogenize`], into a caller-supplied ring whose first
    /// variable is the homogenizing one.
    pub fn homogenize_into(&self, d: u32, hring: &Arc<Ring<F>>) -> Result<MultiPoly<F>> {
        if hring.nvars() != self.ring.nvars() + 1 || hring.vars[1..] != self.ring.vars[..] {
            return Err(Error::RingMismatch("target ring is not a homogenization".into()));
        }
        if let Degree::Finite(actual) = self.degree() {
            if actual > d {
                return Err(Error::DegreeTooSmall { target: d, actual });
            }
        }
        Ok(self.map_monomials(hring, |m| {
            let mut e = Vec::with_capacity(m.len() + 1);
            e.push(d - m.degree());
            e.extend_from_slice(m.exponents());
            Monomial::new(e)
        }))
    }

    /// Sets the first variable to 1.
    pub fn dehomogenize(&self) -> Result<MultiPoly<F>> {
        let aring = self.ring.dehomogenizing()?;
        Ok(self.dehomogenize_into(&aring))
    }

    pub fn dehomogenize_into(&self, aring: &Arc<Ring<F>>) -> MultiPoly<F> {
        self.map_monomials(aring, |m| Monomial::new(m.exponents()[1..].to_vec()))
    }
}

impl MultiPoly<Rational> {
    /// Image in another coefficient field.
    pub fn to_field<G: Field>(&self, ring: &Arc<Ring<G>>) -> Result<MultiPoly<G>> {
        let proto = ring.one();
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| Ok((m.clone(), proto.from_rational_like(c)?)))
            .collect::<Result<Vec<_>>>()?;
        Ok(MultiPoly::from_terms(ring, terms))
    }
}

impl<F: Field> PartialEq for MultiPoly<F> {
    fn eq(&self, other: &Self) -> bool {
        if !self.ring.same_space(&other.ring) {
            return false;
        }
        if self.ring.order == other.ring.order {
            return self.terms == other.terms;
        }
        let mut a = self.terms.clone();
        let mut b = other.terms.clone();
        a.sort_by(|x, y| x.0.cmp(&y.0));
        b.sort_by(|x, y| x.0.cmp(&y.0));
        a == b
    }
}

impl<F: Field> Eq for MultiPoly<F> {}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl<'a, 'b, F: Field> $tr<&'b MultiPoly<F>> for &'a MultiPoly<F> {
            type Output = MultiPoly<F>;
            fn $method(self, rhs: &'b MultiPoly<F>) -> MultiPoly<F> {
                match self.$checked(rhs) {
                    Ok(p) => p,
                    Err(e) => panic!("{e}"),
                }
            }
        }
        impl<F: Field> $tr<MultiPoly<F>> for MultiPoly<F> {
            type Output = MultiPoly<F>;
            fn $method(self, rhs: MultiPoly<F>) -> MultiPoly<F> {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

impl<F: Field> Neg for &MultiPoly<F> {
    type Output = MultiPoly<F>;
    fn neg(self) -> MultiPoly<F> {
        self.scale(&self.ring.one().negated())
    }
}

impl<F: Field> Neg for MultiPoly<F> {
    type Output = MultiPoly<F>;
    fn neg(self) -> MultiPoly<F> {
        -&self
    }
}

impl<F: Field> fmt::Display for MultiPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let text = c.to_string();
            let (negative, mag) = match text.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, text),
            };
            if i == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut factors = Vec::new();
            for (v, &e) in m.exponents().iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(self.ring.vars[v].clone()),
                    _ => factors.push(format!("{}^{}", self.ring.vars[v], e)),
                }
            }
            if factors.is_empty() {
                write!(f, "{mag}")?;
            } else if mag == "1" {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{}*{}", mag, factors.join("*"))?;
            }
        }
        Ok(())
    }
}

impl<F: Field> fmt::Debug for MultiPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly({self})")
    }
}

/// Merges sorted term lists: `a + c * m * b`.
pub(crate) fn merge_scaled<F: Field>(
    a: &[(Monomial, F)],
    c: &F,
    m: &Monomial,
    b: &[(Monomial, F)],
    order: &MonomialOrder,
) -> Vec<(Monomial, F)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut a = a.iter().peekable();
    let mut b = b.iter().map(|(t, d)| (t.mul(m), d.times(c))).peekable();
    loop {
        let ord = match (a.peek(), b.peek()) {
            (None, None) => break,
            (Some(_), None) => Ordering::Greater,
            (None, Some(_)) => Ordering::Less,
            (Some(x), Some(y)) => order.cmp(&x.0, &y.0),
        };
        match ord {
            Ordering::Greater => out.push(a.next().unwrap().clone()),
            Ordering::Less => out.push(b.next().unwrap()),
            Ordering::Equal => {
                let (m1, c1) = a.next().unwrap();
                let (_, c2) = b.next().unwrap();
                let s = c1.plus(&c2);
                if !s.is_zero() {
                    out.push((m1.clone(), s));
                }
            }
        }
    }
    out
}

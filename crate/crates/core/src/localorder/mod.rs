//! Vanishing orders along parametrized curve branches, and integral
//! closure of monomial ideals via Newton polyhedra.
//!
//! On a curve, `|Φ| ≤ C|F|^k` near a point holds iff along every branch
//! through it `ord Φ ≥ k · min_j ord F_j`. Branches are supplied by the
//! caller; no Puiseux expansion is attempted.

mod simplex;

use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::polyring::{Monomial, MultiPoly, Rational, Ring};

pub use simplex::feasible_point;

/// Name of the branch parameter.
pub const PARAMETER: &str = "t";

/// A map `t ↦ (γ_1(t), …, γ_N(t))` with polynomial components.
#[derive(Clone, Debug, PartialEq)]
pub struct BranchParam {
    line: Arc<Ring>,
    components: Vec<MultiPoly>,
}

impl BranchParam {
    /// Components must live in a one-variable ring; at least one must be
    /// nonconstant.
    pub fn new(components: Vec<MultiPoly>) -> Result<Self> {
        let line = match components.first() {
            Some(c) => c.ring().clone(),
            None => return Err(Error::InvalidInput("branch has no components".into())),
        };
        if line.nvars() != 1 {
            return Err(Error::InvalidInput("branch components must be univariate".into()));
        }
        let components = components.iter().map(|c| c.with_ring(&line)).collect::<Result<Vec<_>>>()?;
        if components.iter().all(MultiPoly::is_constant) {
            return Err(Error::InvalidInput("branch is constant".into()));
        }
        Ok(BranchParam { line, components })
    }

    /// Monomial branch `t ↦ (c_i t^{a_i})`.
    pub fn monomial(exponents: &[u32]) -> Result<Self> {
        let line = Ring::new(&[PARAMETER]);
        let one = Rational::one();
        Self::new(exponents.iter().map(|&a| MultiPoly::monomial(&line, Monomial::new(vec![a]), one.clone())).collect())
    }

    /// Parses `branch: z1 = t^5; z2 = t^2`. Every variable of `ring` must be
    /// assigned exactly once.
    pub fn parse(ring: &Ring, line: &str) -> Result<Self> {
        let body = line
            .trim()
            .strip_prefix("branch:")
            .ok_or_else(|| Error::Syntax { pos: 0, msg: "expected 'branch:'".into() })?;
        let offset = line.len() - body.len();
        let tline = Ring::new(&[PARAMETER]);
        let mut slots: Vec<Option<MultiPoly>> = vec![None; ring.nvars()];
        let mut pos = offset;
        for part in body.split(';') {
            let here = pos;
            pos += part.len() + 1;
            if part.trim().is_empty() {
                continue;
            }
            let (lhs, rhs) = part
                .split_once('=')
                .ok_or_else(|| Error::Syntax { pos: here, msg: "expected 'var = poly(t)'".into() })?;
            let name = lhs.trim();
            let i = ring.var_index(name).ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
            if slots[i].is_some() {
                return Err(Error::Syntax { pos: here, msg: format!("{name} assigned twice") });
            }
            let rhs_pos = here + lhs.len() + 1;
            slots[i] = Some(MultiPoly::parse(&tline, rhs).map_err(|e| crate::polyring::shift(e, rhs_pos))?);
        }
        let components = slots
            .into_iter()
            .enumerate()
            .map(|(i, s)| s.ok_or_else(|| Error::Syntax { pos: offset, msg: format!("{} not assigned", ring.vars()[i]) }))
            .collect::<Result<Vec<_>>>()?;
        Self::new(components)
    }

    pub fn components(&self) -> &[MultiPoly] {
        &self.components
    }

    /// Number of target variables `N`.
    pub fn nvars(&self) -> usize {
        self.components.len()
    }

    /// `γ(0)`.
    pub fn base_point(&self) -> Vec<Rational> {
        self.components.iter().map(|c| c.evaluate(&[Rational::zero()])).collect()
    }

    /// `p ∘ γ`.
    pub fn pullback(&self, p: &MultiPoly) -> Result<MultiPoly> {
        p.compose(&self.components)
    }
}

impl fmt::Display for BranchParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "t ↦ (")?;
        for (i, c) in self.components.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// `t`-adic order of `p ∘ γ`; `None` means `p` vanishes on the branch.
pub fn vanishing_order(p: &MultiPoly, b: &BranchParam) -> Result<Option<u32>> {
    Ok(b.pullback(p)?.low_degree())
}

fn check_branches(branches: &[BranchParam]) -> Result<()> {
    if branches.is_empty() {
        return Err(Error::InvalidInput("no branches supplied".into()));
    }
    Ok(())
}

fn min_order(f: &[MultiPoly], b: &BranchParam) -> Result<Option<u32>> {
    let mut best: Option<u32> = None;
    for g in f {
        if let Some(o) = vanishing_order(g, b)? {
            best = Some(best.map_or(o, |x| x.min(o)));
        }
    }
    Ok(best)
}

/// `ord Φ ≥ k · min_j ord F_j` on every branch. Exact for curves whose
/// branches at the points of interest are all supplied; otherwise only a
/// necessary condition.
pub fn bs_exponent_check(f: &[MultiPoly], phi: &MultiPoly, k: &Rational, branches: &[BranchParam]) -> Result<bool> {
    check_branches(branches)?;
    if k.is_zero() {
        return Ok(true);
    }
    for b in branches {
        let Some(op) = vanishing_order(phi, b)? else { continue };
        match min_order(f, b)? {
            None => return Ok(false),
            Some(of) => {
                if Rational::from_integer(op.into()) < k * Rational::from_integer(of.into()) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BsExponent {
    Finite(Rational),
    /// `Φ` vanishes on every branch.
    Unbounded,
}

impl fmt::Display for BsExponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BsExponent::Finite(r) => write!(f, "{r}"),
            BsExponent::Unbounded => write!(f, "unbounded"),
        }
    }
}

/// Largest `k` passing [`bs_exponent_check`]: the minimum over branches of
/// `ord Φ / min_j ord F_j`. Every `F`-order must be finite and positive.
pub fn max_bs_exponent(f: &[MultiPoly], phi: &MultiPoly, branches: &[BranchParam]) -> Result<BsExponent> {
    check_branches(branches)?;
    let mut best: Option<Rational> = None;
    for b in branches {
        let orders = f.iter().map(|g| vanishing_order(g, b)).collect::<Result<Vec<_>>>()?;
        let of = match orders.iter().copied().collect::<Option<Vec<u32>>>() {
            Some(v) => v.into_iter().min().unwrap_or(0),
            None => return Err(Error::InvalidInput(format!("a generator vanishes on branch {b}"))),
        };
        if of == 0 {
            return Err(Error::InvalidInput(format!("generators do not all vanish at the base of {b}")));
        }
        let Some(op) = vanishing_order(phi, b)? else { continue };
        let r = Rational::new(op.into(), of.into());
        best = Some(best.map_or(r.clone(), |x| x.min(r)));
    }
    Ok(best.map_or(BsExponent::Unbounded, BsExponent::Finite))
}

/// Exponent vectors generating a monomial ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NewtonRegion {
    generators: Vec<Vec<u32>>,
}

impl NewtonRegion {
    pub fn new(generators: Vec<Vec<u32>>) -> Result<Self> {
        let n = match generators.first() {
            Some(g) => g.len(),
            None => return Err(Error::InvalidInput("Newton region needs a generator".into())),
        };
        if generators.iter().any(|g| g.len() != n) {
            return Err(Error::InvalidInput("exponent vectors differ in length".into()));
        }
        Ok(NewtonRegion { generators })
    }

    pub fn from_monomials(monomials: &[Monomial]) -> Result<Self> {
        Self::new(monomials.iter().map(|m| m.exponents().to_vec()).collect())
    }

    pub fn generators(&self) -> &[Vec<u32>] {
        &self.generators
    }

    pub fn nvars(&self) -> usize {
        self.generators[0].len()
    }
}

/// Convex weights `λ` with `k Σ λ_a a ≤ e` componentwise, if any.
pub fn closure_witness(phi: &Monomial, region: &NewtonRegion, k: u32) -> Result<Option<Vec<Rational>>> {
    if k < 1 {
        return Err(Error::InvalidInput("closure power must be at least 1".into()));
    }
    let n = region.nvars();
    if phi.len() != n {
        return Err(Error::InvalidInput("monomial and region differ in variable count".into()));
    }
    let g = region.generators.len();
    let kk = Rational::from_integer(k.into());
    // unknowns: λ_1..λ_g, then slacks s_1..s_n
    let mut a = Vec::with_capacity(n + 1);
    let mut b = Vec::with_capacity(n + 1);
    let mut sum = vec![Rational::zero(); g + n];
    for v in sum.iter_mut().take(g) {
        *v = Rational::one();
    }
    a.push(sum);
    b.push(Rational::one());
    for i in 0..n {
        let mut row = vec![Rational::zero(); g + n];
        for (j, gen) in region.generators.iter().enumerate() {
            row[j] = &kk * Rational::from_integer(gen[i].into());
        }
        row[g + i] = Rational::one();
        a.push(row);
        b.push(Rational::from_integer(phi.exponents()[i].into()));
    }
    Ok(feasible_point(&a, &b).map(|mut x| {
        x.truncate(g);
        x
    }))
}

/// `φ ∈ closure(I^k)`: the exponent of `φ` lies in
/// `k · conv(generators) + ℝ^n_{≥0}`.
pub fn monomial_integral_closure(phi: &Monomial, region: &NewtonRegion, k: u32) -> Result<bool> {
    Ok(closure_witness(phi, region, k)?.is_some())
}

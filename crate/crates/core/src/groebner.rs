//! Buchberger's algorithm and the operations built on it: normal forms,
//! membership, elimination and saturation.
//!
//! Pairs are processed by the normal strategy (smallest lcm degree first,
//! ties by index) and pruned with the product and chain criteria. Returned
//! bases are reduced, monic, and sorted by ascending leading monomial, so
//! two bases of the same ideal under the same order compare equal.
//!
//! The engine also handles submodules of free modules encoded with
//! component variables (see [`crate::polyring::ModuleLayout`]): pairs are
//! only formed between elements sharing a leading component.

use std::collections::{BTreeSet, HashSet};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::polyring::{merge_scaled, Field, Monomial, MonomialOrder, MultiPoly, Rational, Ring};

/// Resource caps for a basis computation. Exceeding either is an error.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Budget {
    /// Maximum number of S-pairs reduced.
    pub max_pairs: usize,
    /// Maximum degree (module sugar degree) of a basis element.
    pub max_degree: i64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { max_pairs: 200_000, max_degree: 256 }
    }
}

/// Finitely generated ideal. Zero generators are dropped on construction.
#[derive(Clone, Debug)]
pub struct Ideal<F: Field = Rational> {
    ring: Arc<Ring<F>>,
    gens: Vec<MultiPoly<F>>,
}

impl<F: Field> Ideal<F> {
    pub fn new(ring: &Arc<Ring<F>>, gens: Vec<MultiPoly<F>>) -> Result<Self> {
        let mut kept = Vec::with_capacity(gens.len());
        for g in gens {
            let g = g.with_ring(ring)?;
            if !g.is_zero() {
                kept.push(g);
            }
        }
        Ok(Ideal { ring: ring.clone(), gens: kept })
    }

    pub fn zero(ring: &Arc<Ring<F>>) -> Self {
        Ideal { ring: ring.clone(), gens: Vec::new() }
    }

    pub fn ring(&self) -> &Arc<Ring<F>> {
        &self.ring
    }

    pub fn gens(&self) -> &[MultiPoly<F>] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.gens.iter().all(|g| g.is_homogeneous())
    }

    /// `self + (extra)`.
    pub fn with_generators(&self, extra: &[MultiPoly<F>]) -> Result<Self> {
        let mut gens = self.gens.clone();
        gens.extend(extra.iter().cloned());
        Ideal::new(&self.ring, gens)
    }

    pub fn groebner(&self, budget: &Budget) -> Result<GroebnerBasis<F>> {
        buchberger(self, &MonomialOrder::grevlex(), budget)
    }
}

/// A Gröbner basis together with the ring (and order) it lives in.
#[derive(Clone, Debug)]
pub struct GroebnerBasis<F: Field = Rational> {
    ring: Arc<Ring<F>>,
    basis: Vec<MultiPoly<F>>,
    reduced: bool,
}

impl<F: Field> GroebnerBasis<F> {
    pub fn ring(&self) -> &Arc<Ring<F>> {
        &self.ring
    }

    pub fn order(&self) -> &MonomialOrder {
        self.ring.order()
    }

    pub fn basis(&self) -> &[MultiPoly<F>] {
        &self.basis
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.basis.iter().filter_map(|g| g.leading_monomial().cloned()).collect()
    }

    pub fn is_unit(&self) -> bool {
        self.basis.iter().any(|g| g.leading_monomial().is_some_and(|m| m.is_one()))
    }

    pub fn to_ideal(&self) -> Ideal<F> {
        Ideal { ring: self.ring.clone(), gens: self.basis.clone() }
    }

    /// Remainder of `p` on division by the basis (full reduction).
    pub fn normal_form(&self, p: &MultiPoly<F>) -> Result<MultiPoly<F>> {
        self.normal_form_with(p, |cands| cands[0])
    }

    /// Normal form where `pick` chooses the reducer among all basis elements
    /// whose leading monomial divides the current term.
    pub fn normal_form_with(&self, p: &MultiPoly<F>, pick: impl FnMut(&[usize]) -> usize) -> Result<MultiPoly<F>> {
        let p = p.with_ring(&self.ring)?;
        let lms = self.leading_monomials();
        Ok(reduce(&p, &self.basis, &lms, pick))
    }

    pub fn contains(&self, p: &MultiPoly<F>) -> Result<bool> {
        Ok(self.normal_form(p)?.is_zero())
    }

    /// Buchberger's criterion: every S-polynomial reduces to zero.
    pub fn satisfies_buchberger_criterion(&self) -> bool {
        let lms = self.leading_monomials();
        let layout = self.order().module_layout().cloned();
        for j in 0..self.basis.len() {
            for i in 0..j {
                if let Some(l) = &layout {
                    if l.component_of(&lms[i]) != l.component_of(&lms[j]) {
                        continue;
                    }
                }
                let s = s_polynomial(&self.basis[i], &lms[i], &self.basis[j], &lms[j]);
                if !reduce(&s, &self.basis, &lms, |c| c[0]).is_zero() {
                    return false;
                }
            }
        }
        true
    }
}

fn s_polynomial<F: Field>(a: &MultiPoly<F>, lma: &Monomial, b: &MultiPoly<F>, lmb: &Monomial) -> MultiPoly<F> {
    let l = lma.lcm(lmb);
    let ca = a.leading_coeff().unwrap().inverse();
    let cb = b.leading_coeff().unwrap().inverse().negated();
    let left = a.mul_term(&l.div(lma).unwrap(), &ca);
    left.add_scaled(&cb, &l.div(lmb).unwrap(), b)
}

/// Full reduction of `p` by `basis` (leading monomials `lms`).
fn reduce<F: Field>(
    p: &MultiPoly<F>,
    basis: &[MultiPoly<F>],
    lms: &[Monomial],
    mut pick: impl FnMut(&[usize]) -> usize,
) -> MultiPoly<F> {
    let ring = p.ring().clone();
    let order = ring.order().clone();
    let mut cur: Vec<(Monomial, F)> = p.terms().to_vec();
    let mut pos = 0;
    let mut rem = Vec::new();
    let mut cands = Vec::new();
    while pos < cur.len() {
        let (m, c) = &cur[pos];
        cands.clear();
        cands.extend((0..lms.len()).filter(|&k| lms[k].divides(m)));
        if cands.is_empty() {
            rem.push(cur[pos].clone());
            pos += 1;
            continue;
        }
        let k = pick(&cands);
        let g = &basis[k];
        let q = m.div(&lms[k]).expect("divisor checked");
        let factor = c.times(&g.leading_coeff().unwrap().inverse()).negated();
        cur = merge_scaled(&cur[pos..], &factor, &q, g.terms(), &order);
        pos = 0;
    }
    MultiPoly::from_sorted_terms(&ring, rem)
}

/// Reduced Gröbner basis of `ideal` with respect to `order`.
pub fn buchberger<F: Field>(ideal: &Ideal<F>, order: &MonomialOrder, budget: &Budget) -> Result<GroebnerBasis<F>> {
    let ring = ideal.ring().with_order(order.clone());
    let inputs = ideal
        .gens()
        .iter()
        .map(|g| g.with_ring(&ring))
        .collect::<Result<Vec<_>>>()?;
    let layout = order.module_layout().cloned();

    let mut basis: Vec<MultiPoly<F>> = Vec::new();
    let mut lms: Vec<Monomial> = Vec::new();
    let mut queue: BTreeSet<(i64, usize, usize)> = BTreeSet::new();
    let mut pending: HashSet<(usize, usize)> = HashSet::new();

    let add = |h: MultiPoly<F>,
                   basis: &mut Vec<MultiPoly<F>>,
                   lms: &mut Vec<Monomial>,
                   queue: &mut BTreeSet<(i64, usize, usize)>,
                   pending: &mut HashSet<(usize, usize)>|
     -> Result<()> {
        let h = h.monic();
        let lm = h.leading_monomial().unwrap().clone();
        let sugar = order.sugar(&lm);
        if sugar > budget.max_degree {
            return Err(Error::BudgetExhausted(format!(
                "basis element of degree {sugar} exceeds the degree cap {}",
                budget.max_degree
            )));
        }
        let k = basis.len();
        for i in 0..k {
            if let Some(l) = &layout {
                if l.component_of(&lms[i]) != l.component_of(&lm) {
                    continue;
                }
            } else if lms[i].is_coprime(&lm) {
                continue;
            }
            let lcm = lms[i].lcm(&lm);
            queue.insert((order.sugar(&lcm), k, i));
            pending.insert((i, k));
        }
        basis.push(h);
        lms.push(lm);
        Ok(())
    };

    for g in inputs {
        let r = reduce(&g, &basis, &lms, |c| c[0]);
        if !r.is_zero() {
            add(r, &mut basis, &mut lms, &mut queue, &mut pending)?;
        }
    }

    let mut processed = 0usize;
    while let Some(entry) = queue.pop_first() {
        let (_, j, i) = entry;
        pending.remove(&(i, j));
        let lcm = lms[i].lcm(&lms[j]);
        let chain = (0..basis.len()).any(|l| {
            l != i
                && l != j
                && lms[l].divides(&lcm)
                && !pending.contains(&(i.min(l), i.max(l)))
                && !pending.contains(&(j.min(l), j.max(l)))
        });
        if chain {
            continue;
        }
        processed += 1;
        if processed > budget.max_pairs {
            return Err(Error::BudgetExhausted(format!(
                "more than {} S-pairs reduced",
                budget.max_pairs
            )));
        }
        let s = s_polynomial(&basis[i], &lms[i], &basis[j], &lms[j]);
        let r = reduce(&s, &basis, &lms, |c| c[0]);
        if !r.is_zero() {
            add(r, &mut basis, &mut lms, &mut queue, &mut pending)?;
        }
    }

    Ok(GroebnerBasis { ring: ring.clone(), basis: reduce_basis(basis, &ring), reduced: true })
}

/// Minimalizes, tail-reduces, normalizes and sorts a Gröbner basis.
fn reduce_basis<F: Field>(basis: Vec<MultiPoly<F>>, ring: &Arc<Ring<F>>) -> Vec<MultiPoly<F>> {
    let lms: Vec<Monomial> = basis.iter().map(|g| g.leading_monomial().unwrap().clone()).collect();
    let keep: Vec<usize> = (0..basis.len())
        .filter(|&i| {
            !(0..basis.len()).any(|j| j != i && lms[j].divides(&lms[i]) && (lms[j] != lms[i] || j < i))
        })
        .collect();
    let minimal: Vec<MultiPoly<F>> = keep.iter().map(|&i| basis[i].clone()).collect();
    let min_lms: Vec<Monomial> = keep.iter().map(|&i| lms[i].clone()).collect();
    let mut out = Vec::with_capacity(minimal.len());
    for (i, g) in minimal.iter().enumerate() {
        let lead = MultiPoly::monomial(ring, min_lms[i].clone(), g.leading_coeff().unwrap().clone());
        let tail = g - &lead;
        let others: Vec<MultiPoly<F>> = minimal
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, h)| h.clone())
            .collect();
        let other_lms: Vec<Monomial> = min_lms
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, m)| m.clone())
            .collect();
        let tail = reduce(&tail, &others, &other_lms, |c| c[0]);
        out.push((&lead + &tail).monic());
    }
    let order = ring.order().clone();
    out.sort_by(|a, b| order.cmp(a.leading_monomial().unwrap(), b.leading_monomial().unwrap()));
    out
}

/// Normal form of `p` modulo `g`.
pub fn normal_form<F: Field>(p: &MultiPoly<F>, g: &GroebnerBasis<F>) -> Result<MultiPoly<F>> {
    g.normal_form(p)
}

/// `p ∈ ideal`, decided by a grevlex basis.
pub fn membership<F: Field>(p: &MultiPoly<F>, ideal: &Ideal<F>, budget: &Budget) -> Result<bool> {
    if p.is_zero() {
        return Ok(true);
    }
    ideal.groebner(budget)?.contains(p)
}

/// `ideal ∩ k[x_{k+1}, …]`: eliminates the first `k` variables. The result
/// lives in the ring of the remaining variables.
pub fn eliminate<F: Field>(ideal: &Ideal<F>, k: usize, budget: &Budget) -> Result<Ideal<F>> {
    let ring = ideal.ring();
    if k > ring.nvars() {
        return Err(Error::InvalidInput(format!(
            "cannot eliminate {k} of {} variables",
            ring.nvars()
        )));
    }
    let sub_vars: Vec<String> = ring.vars()[k..].to_vec();
    let sub = Ring::with_field(&sub_vars, MonomialOrder::grevlex(), ring.one());
    if k == 0 {
        let gens = ideal.gens().iter().map(|g| g.with_ring(&sub)).collect::<Result<Vec<_>>>()?;
        return Ideal::new(&sub, gens);
    }
    let gb = buchberger(ideal, &MonomialOrder::elimination(k), budget)?;
    let gens = gb
        .basis()
        .iter()
        .filter(|g| g.terms().iter().all(|(m, _)| m.exponents()[..k].iter().all(|&e| e == 0)))
        .map(|g| g.map_monomials(&sub, |m| Monomial::new(m.exponents()[k..].to_vec())))
        .collect();
    Ideal::new(&sub, gens)
}

/// `(ideal : f^∞)` by the Rabinowitsch trick: adjoin `t`, eliminate it from
/// `ideal + (1 - t f)`.
pub fn saturate<F: Field>(ideal: &Ideal<F>, f: &MultiPoly<F>, budget: &Budget) -> Result<Ideal<F>> {
    if f.is_zero() {
        return Err(Error::InvalidInput("cannot saturate by the zero polynomial".into()));
    }
    let ring = ideal.ring();
    let f = f.with_ring(ring)?;
    let mut tname = "_t".to_string();
    while ring.var_index(&tname).is_some() {
        tname.push('_');
    }
    let ext = ring.extended(&[tname], &[], MonomialOrder::elimination(1));
    let lift = |p: &MultiPoly<F>| prepend_var(p, &ext);
    let mut gens: Vec<MultiPoly<F>> = ideal.gens().iter().map(lift).collect();
    let t = MultiPoly::var(&ext, 0);
    gens.push(&MultiPoly::one(&ext) - &(&t * &lift(&f)));
    let eliminated = eliminate(&Ideal::new(&ext, gens)?, 1, budget)?;
    let back = eliminated.gens().iter().map(|g| g.with_ring(ring)).collect::<Result<Vec<_>>>()?;
    Ideal::new(ring, back)
}

/// Ideal of the projective closure of `Z(ideal)`: homogenize every
/// generator with a new first variable `z0`, then saturate by `z0`.
pub fn projective_closure<F: Field>(ideal: &Ideal<F>, budget: &Budget) -> Result<Ideal<F>> {
    let hring = ideal.ring().homogenizing();
    let gens = ideal
        .gens()
        .iter()
        .map(|g| g.homogenize_into(g.degree().finite().unwrap_or(0), &hring))
        .collect::<Result<Vec<_>>>()?;
    let homogenized = Ideal::new(&hring, gens)?;
    if homogenized.is_zero() {
        return Ok(homogenized);
    }
    saturate(&homogenized, &MultiPoly::var(&hring, 0), budget)
}

/// `I ∩ J`, as `(t I + (1 - t) J) ∩ k[x]`.
pub fn intersect<F: Field>(a: &Ideal<F>, b: &Ideal<F>, budget: &Budget) -> Result<Ideal<F>> {
    let ring = a.ring();
    let mut tname = "_t".to_string();
    while ring.var_index(&tname).is_some() {
        tname.push('_');
    }
    let ext = ring.extended(&[tname], &[], MonomialOrder::elimination(1));
    let lift = |p: &MultiPoly<F>| p.with_ring(ring).map(|p| prepend_var(&p, &ext));
    let t = MultiPoly::var(&ext, 0);
    let one_minus_t = &MultiPoly::one(&ext) - &t;
    let mut gens = Vec::new();
    for g in a.gens() {
        gens.push(&t * &lift(g)?);
    }
    for g in b.gens() {
        gens.push(&one_minus_t * &lift(g)?);
    }
    let eliminated = eliminate(&Ideal::new(&ext, gens)?, 1, budget)?;
    let back = eliminated.gens().iter().map(|g| g.with_ring(ring)).collect::<Result<Vec<_>>>()?;
    Ideal::new(ring, back)
}

/// `I : f = { g : g f ∈ I }`.
pub fn quotient<F: Field>(ideal: &Ideal<F>, f: &MultiPoly<F>, budget: &Budget) -> Result<Ideal<F>> {
    if f.is_zero() {
        return Err(Error::InvalidInput("cannot take the quotient by the zero polynomial".into()));
    }
    let f = f.with_ring(ideal.ring())?;
    let meet = intersect(ideal, &Ideal::new(ideal.ring(), vec![f.clone()])?, budget)?;
    let gens = meet
        .gens()
        .iter()
        .map(|g| exact_division(g, &f))
        .collect::<Result<Vec<_>>>()?;
    Ideal::new(ideal.ring(), gens)
}

/// `a / b` when `b` divides `a` exactly.
fn exact_division<F: Field>(a: &MultiPoly<F>, b: &MultiPoly<F>) -> Result<MultiPoly<F>> {
    let lm = b.leading_monomial().expect("nonzero divisor").clone();
    let inv = b.leading_coeff().unwrap().inverse();
    let mut rest = a.clone();
    let mut quot = MultiPoly::zero(a.ring());
    while let Some(m) = rest.leading_monomial().cloned() {
        let q = m.div(&lm).ok_or_else(|| Error::InvalidInput("division is not exact".into()))?;
        let c = rest.leading_coeff().unwrap().times(&inv);
        quot = quot.add_scaled(&c, &q, &MultiPoly::one(a.ring()));
        rest = rest.add_scaled(&c.negated(), &q, b);
    }
    Ok(quot)
}

fn prepend_var<F: Field>(p: &MultiPoly<F>, ext: &Arc<Ring<F>>) -> MultiPoly<F> {
    p.map_monomials(ext, |m| {
        let mut e = vec![0];
        e.extend_from_slice(m.exponents());
        Monomial::new(e)
    })
}

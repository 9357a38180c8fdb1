//! Monomial orders.
//!
//! Besides the usual ring orders this also carries a module order used by
//! the resolution code: a free module `S^r` is encoded as polynomials that
//! are linear in `r` trailing component variables.

use std::cmp::Ordering;

use super::monomial::Monomial;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum OrderKind {
    Grevlex,
    Lex,
    /// Block order: grevlex on the first `k` variables, ties broken by
    /// grevlex on the rest. Eliminates the first block.
    Elimination(usize),
    Module(ModuleLayout),
}

/// Layout of a free module encoded with component variables.
///
/// Exponent vectors hold `base` ring exponents followed by `components`
/// indicator exponents (exactly one of which is 1). Components below
/// `eliminate` are ranked above every other component (position first);
/// the rest are ranked by shifted degree, then grevlex, then index.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ModuleLayout {
    pub base: usize,
    pub components: usize,
    pub eliminate: usize,
    pub shifts: Vec<i64>,
}

impl ModuleLayout {
    pub fn component_of(&self, m: &Monomial) -> Option<usize> {
        m.exponents()[self.base..]
            .iter()
            .position(|&e| e > 0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialOrder {
    kind: OrderKind,
    /// `perm[0]` is the most significant variable.
    perm: Option<Vec<usize>>,
}

impl Default for MonomialOrder {
    fn default() -> Self {
        MonomialOrder::grevlex()
    }
}

impl MonomialOrder {
    pub fn grevlex() -> Self {
        MonomialOrder { kind: OrderKind::Grevlex, perm: None }
    }

    pub fn lex() -> Self {
        MonomialOrder { kind: OrderKind::Lex, perm: None }
    }

    pub fn elimination(k: usize) -> Self {
        MonomialOrder { kind: OrderKind::Elimination(k), perm: None }
    }

    pub fn module(layout: ModuleLayout) -> Self {
        MonomialOrder { kind: OrderKind::Module(layout), perm: None }
    }

    /// Reorders variable significance; `perm` must be a permutation of
    /// `0..nvars` listing variables from most to least significant.
    pub fn with_permutation(mut self, perm: Vec<usize>) -> Self {
        let mut check = perm.clone();
        check.sort_unstable();
        assert!(
            check.iter().enumerate().all(|(i, &v)| i == v),
            "not a permutation: {perm:?}"
        );
        self.perm = Some(perm);
        self
    }

    pub fn kind(&self) -> &OrderKind {
        &self.kind
    }

    pub fn module_layout(&self) -> Option<&ModuleLayout> {
        match &self.kind {
            OrderKind::Module(l) => Some(l),
            _ => None,
        }
    }

    /// Degree used for pair selection and degree budgets.
    pub fn sugar(&self, m: &Monomial) -> i64 {
        match &self.kind {
            OrderKind::Module(l) => {
                let base: u32 = m.exponents()[..l.base].iter().sum();
                let shift = l.component_of(m).map_or(0, |c| l.shifts[c]);
                base as i64 + shift
            }
            _ => m.degree() as i64,
        }
    }

    fn var_at(&self, i: usize) -> usize {
        match &self.perm {
            Some(p) => p[i],
            None => i,
        }
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let (ea, eb) = (a.exponents(), b.exponents());
        debug_assert_eq!(ea.len(), eb.len());
        let n = ea.len();
        match &self.kind {
            OrderKind::Grevlex => grevlex_on(ea, eb, 0..n, |i| self.var_at(i)),
            OrderKind::Lex => {
                for i in 0..n {
                    let v = self.var_at(i);
                    match ea[v].cmp(&eb[v]) {
                        Ordering::Equal => continue,
                        o => return o,
                    }
                }
                Ordering::Equal
            }
            OrderKind::Elimination(k) => {
                let k = (*k).min(n);
                grevlex_on(ea, eb, 0..k, |i| self.var_at(i))
                    .then_with(|| grevlex_on(ea, eb, k..n, |i| self.var_at(i)))
            }
            OrderKind::Module(l) => {
                let ca = l.component_of(a).unwrap_or(usize::MAX);
                let cb = l.component_of(b).unwrap_or(usize::MAX);
                let fa = ca < l.eliminate;
                let fb = cb < l.eliminate;
                if fa != fb {
                    return fa.cmp(&fb);
                }
                if fa {
                    cb.cmp(&ca).then_with(|| grevlex_on(ea, eb, 0..l.base, |i| i))
                } else {
                    self.sugar(a)
                        .cmp(&self.sugar(b))
                        .then_with(|| grevlex_on(ea, eb, 0..l.base, |i| i))
                        .then_with(|| cb.cmp(&ca))
                }
            }
        }
    }
}

/// Graded reverse lexicographic comparison on the variables `var(pos)` for
/// `pos` in `range`, most significant first.
fn grevlex_on(
    a: &[u32],
    b: &[u32],
    range: std::ops::Range<usize>,
    var: impl Fn(usize) -> usize,
) -> Ordering {
    let da: u32 = range.clone().map(|p| a[var(p)]).sum();
    let db: u32 = range.clone().map(|p| b[var(p)]).sum();
    match da.cmp(&db) {
        Ordering::Equal => {}
        o => return o,
    }
    for i in range.rev().map(var) {
        match a[i].cmp(&b[i]) {
            Ordering::Equal => continue,
            o => return o.reverse(),
        }
    }
    Ordering::Equal
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn grevlex_basics() {
        let o = MonomialOrder::grevlex();
        // x > y > z, x*z < y^2 in grevlex
        assert_eq!(o.cmp(&m(&[1, 0, 1]), &m(&[0, 2, 0])), Ordering::Less);
        assert_eq!(o.cmp(&m(&[0, 0, 3]), &m(&[1, 0, 0])), Ordering::Greater);
        let l = MonomialOrder::lex();
        assert_eq!(l.cmp(&m(&[1, 0, 1]), &m(&[0, 2, 0])), Ordering::Greater);
    }

    #[test]
    fn elimination_ranks_first_block() {
        let o = MonomialOrder::elimination(1);
        assert_eq!(o.cmp(&m(&[1, 0, 0]), &m(&[0, 5, 5])), Ordering::Greater);
    }

    #[test]
    fn permutation_changes_significance() {
        let o = MonomialOrder::lex().with_permutation(vec![1, 0]);
        assert_eq!(o.cmp(&m(&[0, 1]), &m(&[3, 0])), Ordering::Greater);
    }

    fn orders() -> Vec<MonomialOrder> {
        vec![
            MonomialOrder::grevlex(),
            MonomialOrder::lex(),
            MonomialOrder::elimination(1),
            MonomialOrder::elimination(2),
            MonomialOrder::grevlex().with_permutation(vec![2, 0, 3, 1]),
        ]
    }

    fn mono() -> impl Strategy<Value = Monomial> {
        proptest::collection::vec(0u32..5, 4).prop_map(Monomial::new)
    }

    proptest! {
        #[test]
        fn order_axioms(a in mono(), b in mono(), c in mono()) {
            for o in orders() {
                // antisymmetry and totality
                prop_assert_eq!(o.cmp(&a, &b), o.cmp(&b, &a).reverse());
                prop_assert_eq!(o.cmp(&a, &b) == Ordering::Equal, a == b);
                // multiplicativity
                prop_assert_eq!(o.cmp(&a, &b), o.cmp(&a.mul(&c), &b.mul(&c)));
                // refines divisibility
                if a.divides(&b) && a != b {
                    prop_assert_eq!(o.cmp(&a, &b), Ordering::Less);
                }
                // transitivity
                if o.cmp(&a, &b) != Ordering::Greater && o.cmp(&b, &c) != Ordering::Greater {
                    prop_assert!(o.cmp(&a, &c) != Ordering::Greater);
                }
            }
        }
    }
}

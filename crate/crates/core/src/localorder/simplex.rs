//! Phase-one simplex over ℚ with Bland's rule.

use num_traits::{Signed, Zero};

use crate::polyring::Rational;

/// A point of `{x ≥ 0 : A x = b}`, or `None` if the polyhedron is empty.
pub fn feasible_point(a: &[Vec<Rational>], b: &[Rational]) -> Option<Vec<Rational>> {
    let m = a.len();
    let n = a.first().map_or(0, Vec::len);
    let width = n + m + 1;
    let mut t: Vec<Vec<Rational>> = Vec::with_capacity(m);
    for (i, (row, rhs)) in a.iter().zip(b).enumerate() {
        let flip = rhs.is_negative();
        let mut r = vec![Rational::zero(); width];
        for (j, v) in row.iter().enumerate() {
            r[j] = if flip { -v.clone() } else { v.clone() };
        }
        r[n + i] = Rational::from_integer(1.into());
        r[width - 1] = rhs.abs();
        t.push(r);
    }
    let mut basis: Vec<usize> = (n..n + m).collect();
    let mut obj = vec![Rational::zero(); width];
    for r in &t {
        for j in 0..n {
            obj[j] -= &r[j];
        }
        obj[width - 1] -= &r[width - 1];
    }
    while let Some(enter) = (0..n + m).find(|&j| obj[j].is_negative()) {
        let mut leave: Option<(usize, Rational)> = None;
        for (i, r) in t.iter().enumerate() {
            if !r[enter].is_positive() {
                continue;
            }
            let ratio = &r[width - 1] / &r[enter];
            let better = match &leave {
                None => true,
                Some((k, best)) => ratio < *best || (ratio == *best && basis[i] < basis[*k]),
            };
            if better {
                leave = Some((i, ratio));
            }
        }
        // phase one is bounded below by zero, so a leaving row always exists
        let (p, _) = leave?;
        let pivot = t[p][enter].clone();
        for v in t[p].iter_mut() {
            *v /= &pivot;
        }
        let prow = t[p].clone();
        for (i, r) in t.iter_mut().enumerate() {
            if i != p && !r[enter].is_zero() {
                let f = r[enter].clone();
                for (v, pv) in r.iter_mut().zip(&prow) {
                    *v -= &f * pv;
                }
            }
        }
        let f = obj[enter].clone();
        for (v, pv) in obj.iter_mut().zip(&prow) {
            *v -= &f * pv;
        }
        basis[p] = enter;
    }
    if !obj[width - 1].is_zero() {
        return None;
    }
    let mut x = vec![Rational::zero(); n];
    for (i, &j) in basis.iter().enumerate() {
        if j < n {
            x[j] = t[i][width - 1].clone();
        }
    }
    Some(x)
}

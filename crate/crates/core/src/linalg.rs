//! Exact linear algebra: dense rank over any field, a sparse fraction-free
//! solver over ℚ, and determinants of polynomial matrices.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::polyring::{denominator_lcm, Field, MultiPoly, Rational, Ring};

/// Rank of a dense matrix by Gaussian elimination.
pub fn rank<F: Field>(rows: &[Vec<F>]) -> usize {
    let mut m: Vec<Vec<F>> = rows.to_vec();
    let ncols = m.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let inv = m[r][c].inverse();
        for i in r + 1..m.len() {
            if m[i][c].is_zero() {
                continue;
            }
            let f = m[i][c].times(&inv);
            for j in c..ncols {
                let sub = f.times(&m[r][j]);
                m[i][j] = m[i][j].minus(&sub);
            }
        }
        r += 1;
        if r == m.len() {
            break;
        }
    }
    r
}

/// Sparse row: column index → integer coefficient, plus the right-hand side.
#[derive(Clone, Debug)]
struct Row {
    entries: BTreeMap<usize, BigInt>,
    rhs: BigInt,
}

impl Row {
    fn from_rational(entries: &[(usize, Rational)], rhs: &Rational) -> Row {
        let scale = denominator_lcm(entries.iter().map(|(_, v)| v).chain(std::iter::once(rhs)));
        let to_int = |v: &Rational| (v * Rational::from_integer(scale.clone())).to_integer();
        let mut out = Row {
            entries: entries
                .iter()
                .filter(|(_, v)| !Zero::is_zero(v))
                .map(|(c, v)| (*c, to_int(v)))
                .collect(),
            rhs: to_int(rhs),
        };
        out.remove_content();
        out
    }

    fn remove_content(&mut self) {
        let g = self.entries.values().chain(std::iter::once(&self.rhs)).fold(BigInt::zero(), |g, v| g.gcd(v));
        if g.is_zero() || g.is_one() {
            return;
        }
        for v in self.entries.values_mut() {
            *v /= &g;
        }
        self.rhs /= &g;
    }

    /// `self ← a·self − b·pivot` with `a = pivot[c]`, `b = self[c]`, so that
    /// column `c` cancels.
    fn eliminate(&mut self, pivot: &Row, c: usize) {
        let Some(b) = self.entries.get(&c).cloned() else { return };
        let a = pivot.entries[&c].clone();
        let g = a.gcd(&b);
        let (a, b) = (&a / &g, &b / &g);
        let mut out = BTreeMap::new();
        let keys: std::collections::BTreeSet<usize> = self.entries.keys().chain(pivot.entries.keys()).copied().collect();
        for k in keys {
            let mine = self.entries.get(&k).map_or(BigInt::zero(), |v| v * &a);
            let theirs = pivot.entries.get(&k).map_or(BigInt::zero(), |v| v * &b);
            let v = mine - theirs;
            if !v.is_zero() {
                out.insert(k, v);
            }
        }
        self.entries = out;
        self.rhs = &self.rhs * &a - &pivot.rhs * &b;
        self.remove_content();
    }
}

/// Solves `A x = b` exactly over ℚ, where row `i` of `A` is given sparsely
/// by `rows[i]`. Returns `None` if the system is inconsistent.
///
/// Fraction-free Gauss–Jordan elimination: columns are taken in index order,
/// the pivot row is the candidate with the fewest nonzeros (ties to the lowest
/// row index), and free variables are set to zero, so the solution is
/// reproducible.
pub fn solve_sparse(rows: &[Vec<(usize, Rational)>], rhs: &[Rational], ncols: usize) -> Option<Vec<Rational>> {
    assert_eq!(rows.len(), rhs.len(), "one right-hand side per row");
    let mut rows: Vec<Row> = rows.iter().zip(rhs).map(|(r, b)| Row::from_rational(r, b)).collect();
    let mut used = vec![false; rows.len()];
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    for c in 0..ncols {
        let pick = rows
            .iter()
            .enumerate()
            .filter(|(i, r)| !used[*i] && r.entries.contains_key(&c))
            .min_by_key(|(i, r)| (r.entries.len(), *i))
            .map(|(i, _)| i);
        let Some(p) = pick else { continue };
        used[p] = true;
        let pivot = rows[p].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != p {
                row.eliminate(&pivot, c);
            }
        }
        pivots.push((c, p));
    }
    if rows.iter().any(|r| r.entries.is_empty() && !r.rhs.is_zero()) {
        return None;
    }
    let mut x = vec![Rational::zero(); ncols];
    for (c, p) in pivots {
        let r = &rows[p];
        x[c] = Rational::new(r.rhs.clone(), r.entries[&c].clone());
    }
    Some(x)
}

/// `A x = b` solvable, decided by comparing `rank A` with `rank [A | b]`.
/// Independent of [`solve_sparse`]; used as a cross-check.
pub fn is_consistent_by_rank(rows: &[Vec<(usize, Rational)>], rhs: &[Rational], ncols: usize) -> bool {
    let dense: Vec<Vec<Rational>> = rows
        .iter()
        .map(|r| {
            let mut v = vec![Rational::zero(); ncols];
            for (c, x) in r {
                v[*c] = x.clone();
            }
            v
        })
        .collect();
    let aug: Vec<Vec<Rational>> = dense
        .iter()
        .zip(rhs)
        .map(|(r, b)| {
            let mut r = r.clone();
            r.push(b.clone());
            r
        })
        .collect();
    rank(&dense) == rank(&aug)
}

/// Determinant of a square polynomial matrix by Laplace expansion along rows,
/// memoized on the set of remaining columns.
pub fn determinant<F: Field>(ring: &Arc<Ring<F>>, m: &[Vec<MultiPoly<F>>]) -> MultiPoly<F> {
    let n = m.len();
    if n == 0 {
        return MultiPoly::one(ring);
    }
    let mut memo: HashMap<u64, MultiPoly<F>> = HashMap::new();
    det_rec(ring, m, 0, (1u64 << n) - 1, &mut memo)
}

fn det_rec<F: Field>(
    ring: &Arc<Ring<F>>,
    m: &[Vec<MultiPoly<F>>],
    row: usize,
    cols: u64,
    memo: &mut HashMap<u64, MultiPoly<F>>,
) -> MultiPoly<F> {
    if row == m.len() {
        return MultiPoly::one(ring);
    }
    if let Some(v) = memo.get(&cols) {
        return v.clone();
    }
    let mut acc = MultiPoly::zero(ring);
    let mut sign_pos = true;
    for c in 0..m.len() {
        if cols & (1 << c) == 0 {
            continue;
        }
        if !m[row][c].is_zero() {
            let sub = det_rec(ring, m, row + 1, cols & !(1 << c), memo);
            let term = &m[row][c] * &sub;
            acc = if sign_pos { &acc + &term } else { &acc - &term };
        }
        sign_pos = !sign_pos;
    }
    memo.insert(cols, acc.clone());
    acc
}

/// All nonzero `k × k` minors of `m` (rows × columns), in lexicographic order
/// of (row subset, column subset). Errors if `k` exceeds `cap`.
pub fn minors<F: Field>(ring: &Arc<Ring<F>>, m: &[Vec<MultiPoly<F>>], k: usize, cap: usize) -> Result<Vec<MultiPoly<F>>> {
    if k > cap {
        return Err(Error::MinorCap { size: k, cap });
    }
    let nrows = m.len();
    let ncols = m.first().map_or(0, |r| r.len());
    if k == 0 {
        return Ok(vec![MultiPoly::one(ring)]);
    }
    if k > nrows || k > ncols {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    for rs in subsets(nrows, k) {
        for cs in subsets(ncols, k) {
            let sub: Vec<Vec<MultiPoly<F>>> = rs.iter().map(|&i| cs.iter().map(|&j| m[i][j].clone()).collect()).collect();
            let d = determinant(ring, &sub);
            if !d.is_zero() {
                out.push(d);
            }
        }
    }
    Ok(out)
}

/// `k`-element subsets of `0..n` in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

#[cfg(test)]
fn is_primitive(v: &[BigInt]) -> bool {
    v.iter().fold(BigInt::zero(), |g, x| g.gcd(x)).is_one()
}

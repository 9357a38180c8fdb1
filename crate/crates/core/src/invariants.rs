//! Hilbert series of graded quotients and what they tell about projective
//! schemes: dimension, degree, emptiness at infinity.

use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::groebner::{buchberger, Budget, GroebnerBasis, Ideal};
use crate::polyring::{Field, Monomial, MonomialOrder, MultiPoly, Rational};

/// Hilbert series `numerator(t) / (1 - t)^nvars` of `S / J`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertData {
    /// Coefficients of the numerator, constant term first, no trailing zeros.
    pub numerator: Vec<i64>,
    pub nvars: usize,
}

impl HilbertData {
    /// Numerator with all `(1 - t)` factors removed, and their count.
    pub fn reduced(&self) -> (Vec<i64>, usize) {
        let mut h = self.numerator.clone();
        let mut k = 0;
        while !h.is_empty() && h.iter().sum::<i64>() == 0 && k < self.nvars {
            // synthetic division by (1 - t): q_i = sum_{j<=i} h_j
            let mut q = Vec::with_capacity(h.len() - 1);
            let mut acc = 0;
            for &c in &h[..h.len() - 1] {
                acc += c;
                q.push(acc);
            }
            trim(&mut q);
            h = q;
            k += 1;
        }
        (h, k)
    }

    pub fn is_unit_ideal(&self) -> bool {
        self.numerator.is_empty()
    }

    /// Krull dimension of `S / J`.
    pub fn krull_dimension(&self) -> Result<usize> {
        if self.is_unit_ideal() {
            return Err(Error::UnitIdeal);
        }
        Ok(self.nvars - self.reduced().1)
    }

    /// Codimension of `J`; `None` for the unit ideal.
    pub fn codimension(&self) -> Option<usize> {
        self.krull_dimension().ok().map(|d| self.nvars - d)
    }

    /// Dimension of the projective scheme, `-1` when it is empty.
    pub fn proj_dimension(&self) -> Result<i64> {
        Ok(self.krull_dimension()? as i64 - 1)
    }

    /// Degree of the projective scheme.
    pub fn proj_degree(&self) -> Result<i64> {
        if self.krull_dimension()? == 0 {
            return Err(Error::EmptyScheme);
        }
        Ok(self.reduced().0.iter().sum())
    }

    /// First `len` values of the Hilbert function.
    pub fn hilbert_function(&self, len: usize) -> Vec<i64> {
        let mut series: Vec<i64> = (0..len).map(|i| self.numerator.get(i).copied().unwrap_or(0)).collect();
        for _ in 0..self.nvars {
            for i in 1..len {
                series[i] += series[i - 1];
            }
        }
        series
    }

    /// Hilbert polynomial coefficients, constant term first. Empty for an
    /// empty scheme (the zero polynomial).
    pub fn hilbert_polynomial(&self) -> Result<Vec<Rational>> {
        let dim = self.krull_dimension()?;
        if dim == 0 {
            return Ok(Vec::new());
        }
        let d = dim - 1;
        let (h, _) = self.reduced();
        // HP(s) = sum_i h_i * binom(s - i + d, d)
        let mut out = vec![Rational::zero(); d + 1];
        for (i, &hi) in h.iter().enumerate() {
            let mut poly = vec![Rational::from_integer(1.into())];
            for j in 1..=d {
                // multiply by (s - i + j) / j
                let shift = Rational::new((j as i64 - i as i64).into(), (j as i64).into());
                let scale = Rational::new(1.into(), (j as i64).into());
                let mut next = vec![Rational::zero(); poly.len() + 1];
                for (e, c) in poly.iter().enumerate() {
                    next[e + 1] += c * &scale;
                    next[e] += c * &shift;
                }
                poly = next;
            }
            for (e, c) in poly.into_iter().enumerate() {
                out[e] += c * Rational::from_integer(hi.into());
            }
        }
        Ok(out)
    }
}

impl fmt::Display for HilbertData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &c) in self.numerator.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else { "+" };
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.abs();
            match (i, a) {
                (0, _) => write!(f, "{a}")?,
                (1, 1) => write!(f, "t")?,
                (1, _) => write!(f, "{a}*t")?,
                (_, 1) => write!(f, "t^{i}")?,
                _ => write!(f, "{a}*t^{i}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

fn trim(v: &mut Vec<i64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn sub_shifted(a: &mut Vec<i64>, b: &[i64], shift: usize) {
    if a.len() < b.len() + shift {
        a.resize(b.len() + shift, 0);
    }
    for (i, &c) in b.iter().enumerate() {
        a[i + shift] -= c;
    }
    trim(a);
}

fn minimize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by_key(|m| m.degree());
    let mut out: Vec<Monomial> = Vec::new();
    for m in gens {
        if !out.iter().any(|g| g.divides(&m)) {
            out.push(m);
        }
    }
    out
}

/// Hilbert numerator of `S / (gens)` for a monomial ideal.
pub fn monomial_hilbert_numerator(gens: &[Monomial]) -> Vec<i64> {
    numerator_rec(minimize(gens.to_vec()))
}

fn numerator_rec(gens: Vec<Monomial>) -> Vec<i64> {
    if gens.is_empty() {
        return vec![1];
    }
    let coprime = gens.iter().enumerate().all(|(i, a)| gens[i + 1..].iter().all(|b| a.is_coprime(b)));
    if coprime {
        let mut acc = vec![1i64];
        for g in &gens {
            let snapshot = acc.clone();
            sub_shifted(&mut acc, &snapshot, g.degree() as usize);
        }
        return acc;
    }
    // N(I' + (m)) = N(I') - t^deg(m) N(I' : m)
    let mut rest = gens;
    let m = rest.pop().unwrap();
    let colon: Vec<Monomial> = rest.iter().map(|g| g.lcm(&m).div(&m).unwrap()).collect();
    let mut n = numerator_rec(rest);
    let c = numerator_rec(minimize(colon));
    sub_shifted(&mut n, &c, m.degree() as usize);
    n
}

/// Hilbert data of `S / J` from a Gröbner basis of a homogeneous `J`.
pub fn hilbert_numerator<F: Field>(gb: &GroebnerBasis<F>) -> HilbertData {
    HilbertData {
        numerator: monomial_hilbert_numerator(&gb.leading_monomials()),
        nvars: gb.ring().nvars(),
    }
}

/// Hilbert data of `S / J` for a homogeneous ideal.
pub fn hilbert_data<F: Field>(ideal: &Ideal<F>, budget: &Budget) -> Result<HilbertData> {
    if !ideal.is_homogeneous() {
        return Err(Error::InvalidInput("Hilbert series needs a homogeneous ideal".into()));
    }
    Ok(hilbert_numerator(&ideal.groebner(budget)?))
}

/// Whether `J_X + (f) + (z0)` has no projective zeros, where `z0` is the
/// first variable of the ring. Decided by the leading-term ideal containing
/// a pure power of every variable.
pub fn empty_at_infinity<F: Field>(f: &[MultiPoly<F>], j_x: &Ideal<F>, budget: &Budget) -> Result<bool> {
    let ring = j_x.ring();
    if !j_x.is_homogeneous() || f.iter().any(|g| !g.is_homogeneous()) {
        return Err(Error::InvalidInput("emptiness at infinity needs homogeneous input".into()));
    }
    let mut extra = f.to_vec();
    extra.push(MultiPoly::var(ring, 0));
    let ideal = j_x.with_generators(&extra)?;
    let gb = buchberger(&ideal, &MonomialOrder::grevlex(), budget)?;
    Ok(has_all_pure_powers(&gb))
}

/// Whether the projective zero set of a homogeneous ideal is empty.
pub fn projectively_empty<F: Field>(ideal: &Ideal<F>, budget: &Budget) -> Result<bool> {
    Ok(has_all_pure_powers(&ideal.groebner(budget)?))
}

fn has_all_pure_powers<F: Field>(gb: &GroebnerBasis<F>) -> bool {
    let n = gb.ring().nvars();
    let mut seen = vec![false; n];
    for m in gb.leading_monomials() {
        if m.is_one() {
            return true;
        }
        if let Some(v) = m.pure_power_var() {
            seen[v] = true;
        }
    }
    seen.iter().all(|&s| s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rank;
    use crate::polyring::Ring;
    use rand::{Rng, SeedableRng};
    use std::sync::Arc;

    fn ideal(vars: &[&str], polys: &[&str]) -> Ideal {
        let r = Ring::new(vars);
        Ideal::new(&r, polys.iter().map(|s| MultiPoly::parse(&r, s).unwrap()).collect()).unwrap()
    }

    fn data(vars: &[&str], polys: &[&str]) -> HilbertData {
        hilbert_data(&ideal(vars, polys), &Budget::default()).unwrap()
    }

    const CUBIC: [&str; 3] = ["b^2 - a*c", "b*c - a*d", "c^2 - b*d"];

    #[test]
    fn numerator_examples() {
        assert_eq!(data(&["x", "y", "z"], &[]).numerator, vec![1]);
        assert_eq!(data(&["z0", "z1", "z2"], &["z1^2*z0^3 - z2^5"]).numerator, vec![1, 0, 0, 0, 0, -1]);
        let tc = data(&["a", "b", "c", "d"], &CUBIC);
        assert_eq!(tc.numerator, vec![1, 0, -3, 2]);
        assert_eq!(tc.to_string(), "1 - 3*t^2 + 2*t^3");
    }

    #[test]
    fn dimension_and_degree() {
        let p2 = data(&["z0", "z1", "z2"], &[]);
        assert_eq!(p2.proj_dimension().unwrap(), 2);
        assert_eq!(p2.proj_degree().unwrap(), 1);
        for p in [3, 5, 7] {
            let cusp = data(&["z0", "z1", "z2"], &[&format!("z1^2*z0^{} - z2^{p}", p - 2)]);
            assert_eq!(cusp.proj_dimension().unwrap(), 1);
            assert_eq!(cusp.proj_degree().unwrap(), p as i64);
        }
        let irr = data(&["z0", "z1", "z2"], &["z0", "z1", "z2"]);
        assert_eq!(irr.proj_dimension().unwrap(), -1);
        assert!(matches!(irr.proj_degree(), Err(Error::EmptyScheme)));
        let unit = data(&["x", "y"], &["1"]);
        assert!(matches!(unit.proj_dimension(), Err(Error::UnitIdeal)));
        let tc = data(&["a", "b", "c", "d"], &CUBIC);
        assert_eq!(tc.proj_dimension().unwrap(), 1);
        assert_eq!(tc.proj_degree().unwrap(), 3);
        // 3s + 1
        assert_eq!(tc.hilbert_polynomial().unwrap(), vec![Rational::from_integer(1.into()), Rational::from_integer(3.into())]);
    }

    /// dim (S/J)_D = dim S_D - rank of all monomial multiples of generators
    /// landing in degree D.
    fn dimension_count(i: &Ideal, d: u32) -> i64 {
        let n = i.ring().nvars();
        let basis = Monomial::all_of_degree(n, d);
        let index: std::collections::HashMap<Monomial, usize> =
            basis.iter().cloned().enumerate().map(|(k, m)| (m, k)).collect();
        let mut rows = Vec::new();
        for g in i.gens() {
            let gd = g.degree().finite().unwrap();
            if gd > d {
                continue;
            }
            for m in Monomial::all_of_degree(n, d - gd) {
                let mut row = vec![Rational::zero(); basis.len()];
                for (t, c) in g.terms() {
                    row[index[&t.mul(&m)]] = c.clone();
                }
                rows.push(row);
            }
        }
        basis.len() as i64 - rank(&rows) as i64
    }

    #[test]
    fn series_matches_dimension_counts() {
        let corpus: Vec<Ideal> = vec![
            ideal(&["a", "b", "c", "d"], &CUBIC),
            ideal(&["z0", "z1", "z2"], &["z1^2*z0^3 - z2^5"]),
            ideal(&["x", "y", "z"], &["x", "y"]),
            ideal(&["x", "y", "z", "w"], &["x*z", "x*w", "y*z", "y*w"]),
            ideal(&["a", "b", "c", "d"], &["b*c - a*d", "b^3 - a^2*c", "a*c^2 - b^2*d", "c^3 - b*d^2"]),
        ];
        for i in &corpus {
            let h = hilbert_data(i, &Budget::default()).unwrap();
            let hf = h.hilbert_function(9);
            for d in 0..=8u32 {
                assert_eq!(hf[d as usize], dimension_count(i, d), "{:?} degree {d}", i.gens());
            }
        }
    }

    #[test]
    fn numerator_independent_of_basis_order() {
        let i = ideal(&["a", "b", "c", "d"], &CUBIC);
        let lex = buchberger(&i, &MonomialOrder::lex(), &Budget::default()).unwrap();
        let grevlex = buchberger(&i, &MonomialOrder::grevlex(), &Budget::default()).unwrap();
        assert_eq!(hilbert_numerator(&lex), hilbert_numerator(&grevlex));
    }

    #[test]
    fn emptiness_at_infinity_examples() {
        let b = Budget::default();
        let r = Ring::new(&["z0", "z1"]);
        let p = |s: &str| MultiPoly::parse(&r, s).unwrap();
        let x = Ideal::zero(&r);
        assert!(empty_at_infinity(&[p("z1^2"), p("z1^2 - 2*z1*z0 + z0^2")], &x, &b).unwrap());
        assert!(!empty_at_infinity(&[p("z0")], &x, &b).unwrap());

        // Kollár family m = n = 2, d = 2: z1^2, z1*z2 - z0^2 vanish at [0:0:1]
        let r3 = Ring::new(&["z0", "z1", "z2"]);
        let f: Vec<MultiPoly> = ["z1^2", "z1*z2 - z0^2"].iter().map(|s| MultiPoly::parse(&r3, s).unwrap()).collect();
        assert!(!empty_at_infinity(&f, &Ideal::zero(&r3), &b).unwrap());
    }

    #[test]
    fn emptiness_invariant_under_linear_change() {
        let b = Budget::default();
        let r = Ring::new(&["z0", "z1", "z2"]);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        let cases: Vec<Vec<&str>> = vec![
            vec!["z1^2 - z0*z2", "z2^2 + z1*z0", "z1*z2 - 3*z0^2"],
            vec!["z1^2", "z1*z2 - z0^2"],
            vec!["z1*z2", "z1^2 + z2^2 - z0^2"],
        ];
        for case in cases {
            let f: Vec<MultiPoly> = case.iter().map(|s| MultiPoly::parse(&r, s).unwrap()).collect();
            let base = empty_at_infinity(&f, &Ideal::zero(&r), &b).unwrap();
            for _ in 0..4 {
                let images = random_change(&r, &mut rng);
                let g: Vec<MultiPoly> = f.iter().map(|p| p.compose(&images).unwrap()).collect();
                assert_eq!(empty_at_infinity(&g, &Ideal::zero(&r), &b).unwrap(), base);
            }
        }
    }

    /// z0 fixed, (z1, z2) replaced by an invertible integer linear combination.
    fn random_change(r: &Arc<Ring>, rng: &mut impl Rng) -> Vec<MultiPoly> {
        loop {
            let m: Vec<i64> = (0..4).map(|_| rng.gen_range(-3..=3)).collect();
            if m[0] * m[3] - m[1] * m[2] == 0 {
                continue;
            }
            let z = |i| MultiPoly::var(r, i);
            let c = |v: i64| MultiPoly::constant(r, Rational::from_integer(v.into()));
            return vec![
                z(0),
                &(&c(m[0]) * &z(1)) + &(&c(m[1]) * &z(2)),
                &(&c(m[2]) * &z(1)) + &(&c(m[3]) * &z(2)),
            ];
        }
    }
}

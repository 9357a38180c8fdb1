//! Minimal graded free resolutions of `S / J`, Betti tables, regularity and
//! the Fitting ideals of the resolution maps.
//!
//! Syzygies are computed with the lift trick: the columns `M_j` of a map
//! `S^c → S^r` are encoded as `M_j + e_{r+j}` in `S^{r+c}`, and a Gröbner
//! basis under a module order eliminating the first `r` components yields
//! the kernel in the remaining ones. Each syzygy module is then pruned to a
//! minimal homogeneous generating set, so the resolution is minimal by
//! construction.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use rand::{Rng, SeedableRng};

use crate::error::{Error, Result};
use crate::groebner::{buchberger, Budget, GroebnerBasis, Ideal};
use crate::invariants::hilbert_data;
use crate::linalg::{minors, rank};
use crate::polyring::{Field, ModuleLayout, Monomial, MonomialOrder, MultiPoly, Rational, Ring};

/// Largest minor size computed by [`fitting_ideal`] unless told otherwise.
pub const DEFAULT_MINOR_CAP: usize = 6;

/// `⊕ S(-d_i)`, stored as the list of generator degrees `d_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedFreeModule {
    pub twists: Vec<i64>,
}

impl GradedFreeModule {
    pub fn rank(&self) -> usize {
        self.twists.len()
    }
}

/// A homogeneous map `source → target`. Column `j` is the image of the
/// `j`-th source generator.
#[derive(Clone, Debug)]
pub struct ResolutionStep<F: Field = Rational> {
    pub matrix: Vec<Vec<MultiPoly<F>>>,
    pub source: GradedFreeModule,
    pub target: GradedFreeModule,
}

impl<F: Field> ResolutionStep<F> {
    pub fn column(&self, j: usize) -> Vec<MultiPoly<F>> {
        self.matrix.iter().map(|row| row[j].clone()).collect()
    }

    /// Every nonzero entry `(i, j)` is homogeneous of degree
    /// `source[j] - target[i]`.
    pub fn is_graded(&self) -> bool {
        self.matrix.iter().enumerate().all(|(i, row)| {
            row.iter().enumerate().all(|(j, e)| {
                e.is_zero()
                    || (e.is_homogeneous()
                        && e.degree().finite().map(i64::from) == Some(self.source.twists[j] - self.target.twists[i]))
            })
        })
    }

    pub fn has_unit_entries(&self) -> bool {
        self.matrix.iter().flatten().any(|e| !e.is_zero() && e.is_constant())
    }
}

/// `0 ← S ← F_1 ← F_2 ← …`; `steps[k-1]` is the map `F_k → F_{k-1}`.
#[derive(Clone, Debug)]
pub struct FreeResolution<F: Field = Rational> {
    ring: Arc<Ring<F>>,
    ideal: Ideal<F>,
    steps: Vec<ResolutionStep<F>>,
    minimal: bool,
}

impl<F: Field> FreeResolution<F> {
    pub fn ring(&self) -> &Arc<Ring<F>> {
        &self.ring
    }

    pub fn ideal(&self) -> &Ideal<F> {
        &self.ideal
    }

    pub fn steps(&self) -> &[ResolutionStep<F>] {
        &self.steps
    }

    pub fn length(&self) -> usize {
        self.steps.len()
    }

    pub fn is_minimal(&self) -> bool {
        self.minimal
    }

    /// Consecutive maps compose to zero.
    pub fn is_complex(&self) -> bool {
        self.steps.windows(2).all(|w| {
            let (a, b) = (&w[0].matrix, &w[1].matrix);
            (0..a.len()).all(|i| {
                (0..b.first().map_or(0, |r| r.len())).all(|j| {
                    let mut acc = MultiPoly::zero(&self.ring);
                    for (k, bk) in b.iter().enumerate() {
                        acc = &acc + &(&a[i][k] * &bk[j]);
                    }
                    acc.is_zero()
                })
            })
        })
    }

    /// Rank of the free module `F_k` (`F_0 = S`).
    pub fn module_rank(&self, k: usize) -> usize {
        match k {
            0 => 1,
            _ => self.steps.get(k - 1).map_or(0, |s| s.source.rank()),
        }
    }

    /// Rank of the map `F_k → F_{k-1}` over the fraction field, forced by
    /// exactness: the alternating sum of the ranks of `F_k, F_{k+1}, …`.
    pub fn expected_rank(&self, k: usize) -> usize {
        let mut r: i64 = 0;
        for j in (k..=self.length()).rev() {
            r = self.module_rank(j) as i64 - r;
        }
        r as usize
    }

    /// `Σ_k (-1)^k Σ_i t^{d_k^i}`; equals the Hilbert numerator of `S / J`.
    pub fn alternating_twist_polynomial(&self) -> Vec<i64> {
        let mut out = vec![1i64];
        for (k, s) in self.steps.iter().enumerate() {
            let sign = if k % 2 == 0 { -1 } else { 1 };
            for &d in &s.source.twists {
                let d = d as usize;
                if out.len() <= d {
                    out.resize(d + 1, 0);
                }
                out[d] += sign;
            }
        }
        while out.last() == Some(&0) {
            out.pop();
        }
        out
    }
}

fn component_names<F: Field>(ring: &Ring<F>, count: usize) -> Vec<String> {
    let mut prefix = "_e".to_string();
    while ring.vars().iter().any(|v| v.starts_with(&prefix)) {
        prefix.insert(0, '_');
    }
    (0..count).map(|i| format!("{prefix}{i}")).collect()
}

fn module_ring<F: Field>(ring: &Arc<Ring<F>>, shifts: Vec<i64>, eliminate: usize) -> Arc<Ring<F>> {
    let layout = ModuleLayout { base: ring.nvars(), components: shifts.len(), eliminate, shifts };
    let names = component_names(ring, layout.components);
    ring.extended(&[], &names, MonomialOrder::module(layout))
}

fn embed<F: Field>(p: &MultiPoly<F>, mring: &Arc<Ring<F>>, comp: usize) -> MultiPoly<F> {
    let extra = mring.nvars() - p.ring().nvars();
    p.map_monomials(mring, |m| {
        let mut e = m.exponents().to_vec();
        e.resize(e.len() + extra, 0);
        e[p.ring().nvars() + comp] = 1;
        Monomial::new(e)
    })
}

fn encode<F: Field>(v: &[MultiPoly<F>], mring: &Arc<Ring<F>>, offset: usize) -> MultiPoly<F> {
    let mut acc = MultiPoly::zero(mring);
    for (i, p) in v.iter().enumerate() {
        acc = &acc + &embed(p, mring, offset + i);
    }
    acc
}

fn decode<F: Field>(p: &MultiPoly<F>, ring: &Arc<Ring<F>>, offset: usize, len: usize) -> Vec<MultiPoly<F>> {
    let n = ring.nvars();
    let mut parts: Vec<Vec<(Monomial, F)>> = vec![Vec::new(); len];
    for (m, c) in p.terms() {
        let comp = m.exponents()[n..].iter().position(|&e| e > 0).expect("module element");
        if comp >= offset && comp < offset + len {
            parts[comp - offset].push((Monomial::new(m.exponents()[..n].to_vec()), c.clone()));
        }
    }
    parts.into_iter().map(|t| MultiPoly::from_terms(ring, t)).collect()
}

/// Degree of a homogeneous vector in `⊕ S(-twists_i)`.
fn vector_degree<F: Field>(v: &[MultiPoly<F>], twists: &[i64]) -> Option<i64> {
    v.iter()
        .zip(twists)
        .find(|(p, _)| !p.is_zero())
        .map(|(p, t)| p.degree().finite().unwrap() as i64 + t)
}

/// Indices of a minimal generating subset of homogeneous vectors in
/// `⊕ S(-twists_i)`, chosen greedily in order of ascending degree.
fn minimal_subset<F: Field>(
    ring: &Arc<Ring<F>>,
    vectors: &[Vec<MultiPoly<F>>],
    twists: &[i64],
    budget: &Budget,
) -> Result<Vec<usize>> {
    let mring = module_ring(ring, twists.to_vec(), 0);
    let mut order: Vec<(i64, usize)> = vectors
        .iter()
        .enumerate()
        .filter_map(|(i, v)| vector_degree(v, twists).map(|d| (d, i)))
        .collect();
    order.sort();
    let mut kept: Vec<usize> = Vec::new();
    let mut gb: Option<GroebnerBasis<F>> = None;
    for (_, i) in order {
        let enc = encode(&vectors[i], &mring, 0);
        if let Some(g) = &gb {
            if g.contains(&enc)? {
                continue;
            }
        }
        kept.push(i);
        let gens = kept.iter().map(|&k| encode(&vectors[k], &mring, 0)).collect();
        gb = Some(buchberger(&Ideal::new(&mring, gens)?, mring.order(), budget)?);
    }
    kept.sort_by_key(|&i| (vector_degree(&vectors[i], twists), i));
    Ok(kept)
}

/// Minimal homogeneous generators of the kernel of the map given by
/// `matrix` (`target.len()` rows, `source.len()` columns).
pub fn syzygies<F: Field>(
    ring: &Arc<Ring<F>>,
    matrix: &[Vec<MultiPoly<F>>],
    target: &[i64],
    source: &[i64],
    budget: &Budget,
) -> Result<ResolutionStep<F>> {
    let (r, c) = (target.len(), source.len());
    if matrix.len() != r || matrix.iter().any(|row| row.len() != c) {
        return Err(Error::InvalidInput("matrix shape does not match the twists".into()));
    }
    let step = ResolutionStep {
        matrix: matrix.to_vec(),
        source: GradedFreeModule { twists: source.to_vec() },
        target: GradedFreeModule { twists: target.to_vec() },
    };
    if !step.is_graded() {
        return Err(Error::InvalidInput("syzygies need a homogeneous matrix".into()));
    }
    let shifts: Vec<i64> = target.iter().chain(source).copied().collect();
    let mring = module_ring(ring, shifts, r);
    let gens: Vec<MultiPoly<F>> = (0..c)
        .map(|j| {
            let col = step.column(j);
            &encode(&col, &mring, 0) + &embed(&MultiPoly::one(ring), &mring, r + j)
        })
        .collect();
    let gb = buchberger(&Ideal::new(&mring, gens)?, mring.order(), budget)?;
    let layout = mring.order().module_layout().unwrap().clone();
    let kernel: Vec<Vec<MultiPoly<F>>> = gb
        .basis()
        .iter()
        .filter(|g| layout.component_of(g.leading_monomial().unwrap()).unwrap() >= r)
        .map(|g| decode(g, ring, r, c))
        .collect();
    let keep = minimal_subset(ring, &kernel, source, budget)?;
    let cols: Vec<&Vec<MultiPoly<F>>> = keep.iter().map(|&i| &kernel[i]).collect();
    let twists: Vec<i64> = cols.iter().map(|v| vector_degree(v, source).unwrap()).collect();
    let matrix = (0..c).map(|i| cols.iter().map(|v| v[i].clone()).collect()).collect();
    Ok(ResolutionStep {
        matrix,
        source: GradedFreeModule { twists },
        target: GradedFreeModule { twists: source.to_vec() },
    })
}

/// Minimal graded free resolution of `S / J` for a homogeneous ideal `J`.
pub fn minimal_resolution<F: Field>(ideal: &Ideal<F>, budget: &Budget) -> Result<FreeResolution<F>> {
    let ring = ideal.ring().clone();
    if !ideal.is_homogeneous() {
        return Err(Error::InvalidInput("resolutions need a homogeneous ideal".into()));
    }
    if ideal.gens().iter().any(|g| g.is_constant()) {
        return Err(Error::UnitIdeal);
    }
    let vectors: Vec<Vec<MultiPoly<F>>> = ideal.gens().iter().map(|g| vec![g.clone()]).collect();
    let keep = minimal_subset(&ring, &vectors, &[0], budget)?;
    let mut steps = Vec::new();
    if !keep.is_empty() {
        let gens: Vec<MultiPoly<F>> = keep.iter().map(|&i| ideal.gens()[i].clone()).collect();
        let twists = gens.iter().map(|g| g.degree().finite().unwrap() as i64).collect();
        steps.push(ResolutionStep {
            matrix: vec![gens],
            source: GradedFreeModule { twists },
            target: GradedFreeModule { twists: vec![0] },
        });
        loop {
            let last = steps.last().unwrap();
            let next = syzygies(&ring, &last.matrix, &last.target.twists, &last.source.twists, budget)?;
            if next.source.rank() == 0 {
                break;
            }
            steps.push(next);
            if steps.len() > ring.nvars() {
                return Err(Error::Verification("resolution longer than the number of variables".into()));
            }
        }
    }
    let minimal = steps.iter().all(|s| !s.has_unit_entries());
    Ok(FreeResolution { ring, ideal: ideal.clone(), steps, minimal })
}

/// Graded Betti numbers `β_{k,d}`, including `β_{0,0} = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiTable {
    pub entries: BTreeMap<(usize, i64), usize>,
}

impl BettiTable {
    pub fn get(&self, k: usize, d: i64) -> usize {
        self.entries.get(&(k, d)).copied().unwrap_or(0)
    }

    pub fn length(&self) -> usize {
        self.entries.keys().map(|(k, _)| *k).max().unwrap_or(0)
    }
}

pub fn betti<F: Field>(res: &FreeResolution<F>) -> BettiTable {
    let mut entries = BTreeMap::new();
    entries.insert((0, 0), 1);
    for (k, s) in res.steps.iter().enumerate() {
        for &d in &s.source.twists {
            *entries.entry((k + 1, d)).or_insert(0) += 1;
        }
    }
    BettiTable { entries }
}

impl fmt::Display for BettiTable {
    /// Rows are strata `d - k`, columns homological degrees.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let len = self.length();
        let strata: Vec<i64> = {
            let lo = self.entries.keys().map(|(k, d)| d - *k as i64).min().unwrap_or(0);
            let hi = self.entries.keys().map(|(k, d)| d - *k as i64).max().unwrap_or(0);
            (lo..=hi).collect()
        };
        let totals: Vec<usize> = (0..=len)
            .map(|k| self.entries.iter().filter(|((kk, _), _)| *kk == k).map(|(_, v)| v).sum())
            .collect();
        let cell = |k: usize, s: i64| match self.get(k, s + k as i64) {
            0 => ".".to_string(),
            v => v.to_string(),
        };
        let widths: Vec<usize> = (0..=len)
            .map(|k| {
                strata
                    .iter()
                    .map(|&s| cell(k, s).len())
                    .chain([k.to_string().len(), totals[k].to_string().len()])
                    .max()
                    .unwrap()
            })
            .collect();
        let label_w = strata.iter().map(|s| format!("{s}:").len()).chain(["total:".len()]).max().unwrap();
        write!(f, "{:>label_w$}", "")?;
        for k in 0..=len {
            write!(f, " {:>w$}", k, w = widths[k])?;
        }
        writeln!(f)?;
        write!(f, "{:>label_w$}", "total:")?;
        for k in 0..=len {
            write!(f, " {:>w$}", totals[k], w = widths[k])?;
        }
        writeln!(f)?;
        for &s in &strata {
            write!(f, "{:>label_w$}", format!("{s}:"))?;
            for k in 0..=len {
                write!(f, " {:>w$}", cell(k, s), w = widths[k])?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// `reg X = max_{k ≥ 1, i} (d_k^i - k) + 1`; `1` for the zero ideal.
pub fn regularity<F: Field>(res: &FreeResolution<F>) -> Result<i64> {
    if !res.minimal {
        return Err(Error::NonMinimal("regularity needs a minimal resolution".into()));
    }
    let inner = res
        .steps
        .iter()
        .enumerate()
        .flat_map(|(k, s)| s.source.twists.iter().map(move |d| d - (k as i64 + 1)))
        .max();
    Ok(inner.map_or(1, |m| m + 1))
}

/// Ideal of the `r_k × r_k` minors of the `k`-th map (1-based), `r_k` its
/// generic rank.
pub fn fitting_ideal<F: Field>(res: &FreeResolution<F>, k: usize, minor_cap: usize) -> Result<Ideal<F>> {
    let step = res
        .steps
        .get(k.wrapping_sub(1))
        .ok_or_else(|| Error::InvalidInput(format!("resolution has no step {k}")))?;
    let ring = &res.ring;
    let r = res.expected_rank(k);
    if r > minor_cap {
        return Err(Error::MinorCap { size: r, cap: minor_cap });
    }
    let spec = specialization_rank(ring, &step.matrix, k as u64);
    if spec > r {
        return Err(Error::Verification(format!("step {k} has rank {spec} above the exactness rank {r}")));
    }
    let gens = minors(ring, &step.matrix, r, minor_cap)?;
    if gens.is_empty() {
        return Err(Error::Verification(format!("step {k} has no nonzero {r}-minor")));
    }
    Ideal::new(ring, gens)
}

/// Best rank over a few seeded random integer points.
fn specialization_rank<F: Field>(ring: &Arc<Ring<F>>, m: &[Vec<MultiPoly<F>>], seed: u64) -> usize {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let one = ring.one();
    (0..3)
        .map(|_| {
            let point: Vec<F> = (0..ring.nvars()).map(|_| one.from_int_like(rng.gen_range(-97..=97))).collect();
            let vals: Vec<Vec<F>> = m.iter().map(|row| row.iter().map(|e| e.evaluate(&point)).collect()).collect();
            rank(&vals)
        })
        .max()
        .unwrap_or(0)
}

/// Codimension of the zero locus of each Fitting ideal, `None` standing for
/// the unit ideal (empty locus, codimension ∞).
pub fn bef_codims<F: Field>(res: &FreeResolution<F>, minor_cap: usize, budget: &Budget) -> Result<Vec<(usize, Option<usize>)>> {
    (1..=res.length())
        .map(|k| {
            let i = fitting_ideal(res, k, minor_cap)?;
            Ok((k, hilbert_data(&i, budget)?.codimension()))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::hilbert_data;

    fn ideal(vars: &[&str], polys: &[&str]) -> Ideal {
        let r = Ring::new(vars);
        Ideal::new(&r, polys.iter().map(|s| MultiPoly::parse(&r, s).unwrap()).collect()).unwrap()
    }

    fn resolve(vars: &[&str], polys: &[&str]) -> FreeResolution {
        minimal_resolution(&ideal(vars, polys), &Budget::default()).unwrap()
    }

    fn twists(r: &FreeResolution) -> Vec<Vec<i64>> {
        r.steps().iter().map(|s| s.source.twists.clone()).collect()
    }

    const CUBIC: [&str; 3] = ["b^2 - a*c", "b*c - a*d", "c^2 - b*d"];
    const SKEW: [&str; 4] = ["x*z", "x*w", "y*z", "y*w"];
    const QUARTIC: [&str; 4] = ["b*c - a*d", "b^3 - a^2*c", "a*c^2 - b^2*d", "c^3 - b*d^2"];

    fn check_structure(r: &FreeResolution) {
        assert!(r.is_minimal());
        assert!(r.is_complex());
        assert!(r.steps().iter().all(|s| s.is_graded() && !s.has_unit_entries()));
        assert!(r.length() <= r.ring().nvars());
        let h = hilbert_data(r.ideal(), &Budget::default()).unwrap();
        assert_eq!(r.alternating_twist_polynomial(), h.numerator);
    }

    #[test]
    fn koszul_syzygy() {
        let r = Ring::new(&["x", "y"]);
        let p = |s: &str| MultiPoly::parse(&r, s).unwrap();
        let s = syzygies(&r, &[vec![p("x"), p("y")]], &[0], &[1, 1], &Budget::default()).unwrap();
        assert_eq!(s.source.twists, vec![2]);
        let col = s.column(0);
        assert!(col == vec![p("-y"), p("x")] || col == vec![p("y"), p("-x")]);
        let single = syzygies(&r, &[vec![p("x^2 + y^2")]], &[0], &[2], &Budget::default()).unwrap();
        assert_eq!(single.source.rank(), 0);
    }

    #[test]
    fn corpus_shapes() {
        let koszul = resolve(&["x", "y"], &["x", "y"]);
        assert_eq!(twists(&koszul), vec![vec![1, 1], vec![2]]);
        let koszul3 = resolve(&["x", "y", "z"], &["x", "y", "z"]);
        assert_eq!(twists(&koszul3), vec![vec![1, 1, 1], vec![2, 2, 2], vec![3]]);
        for p in [3i64, 5, 7] {
            let cusp = resolve(&["z0", "z1", "z2"], &[&format!("z1^2*z0^{} - z2^{p}", p - 2)]);
            assert_eq!(twists(&cusp), vec![vec![p]]);
            assert_eq!(regularity(&cusp).unwrap(), p);
            check_structure(&cusp);
        }
        let tc = resolve(&["a", "b", "c", "d"], &CUBIC);
        assert_eq!(twists(&tc), vec![vec![2, 2, 2], vec![3, 3]]);
        assert_eq!(regularity(&tc).unwrap(), 2);
        let skew = resolve(&["x", "y", "z", "w"], &SKEW);
        assert_eq!(twists(&skew), vec![vec![2, 2, 2, 2], vec![3, 3, 3, 3], vec![4]]);
        let q = resolve(&["a", "b", "c", "d"], &QUARTIC);
        assert_eq!(regularity(&q).unwrap(), 3);
        assert_eq!(q.length(), 3);
        for r in [&koszul, &koszul3, &tc, &skew, &q] {
            check_structure(r);
        }
    }

    #[test]
    fn non_minimal_generators_are_pruned() {
        let gens = ["b^2 - a*c", "b*c - a*d", "b^2 - a*c + c^2 - b*d", "c^2 - b*d", "a*b*c - a^2*d"];
        let r = resolve(&["a", "b", "c", "d"], &gens);
        assert_eq!(twists(&r), vec![vec![2, 2, 2], vec![3, 3]]);
    }

    #[test]
    fn projective_space_and_unit() {
        let p2 = resolve(&["z0", "z1", "z2"], &[]);
        assert_eq!(p2.length(), 0);
        assert_eq!(regularity(&p2).unwrap(), 1);
        assert_eq!(betti(&p2).to_string(), "       0\ntotal: 1\n    0: 1\n");
        assert!(matches!(
            minimal_resolution(&ideal(&["x"], &["1"]), &Budget::default()),
            Err(Error::UnitIdeal)
        ));
        assert!(minimal_resolution(&ideal(&["x", "y"], &["x - 1"]), &Budget::default()).is_err());
    }

    #[test]
    fn betti_tables() {
        let tc = betti(&resolve(&["a", "b", "c", "d"], &CUBIC));
        assert_eq!(tc.get(1, 2), 3);
        assert_eq!(tc.get(2, 3), 2);
        assert_eq!(tc.to_string(), "       0 1 2\ntotal: 1 3 2\n    0: 1 . .\n    1: . 3 2\n");
        let k = betti(&resolve(&["x", "y"], &["x", "y"]));
        assert_eq!((k.get(1, 1), k.get(2, 2)), (2, 1));
        let c = betti(&resolve(&["z0", "z1", "z2"], &["z1^2*z0^3 - z2^5"]));
        assert_eq!(c.entries.len(), 2);
        assert_eq!(c.get(1, 5), 1);
    }

    #[test]
    fn regularity_ignores_generator_order() {
        let a = resolve(&["a", "b", "c", "d"], &QUARTIC);
        let mut rev = QUARTIC;
        rev.reverse();
        let b = resolve(&["a", "b", "c", "d"], &rev);
        assert_eq!(regularity(&a).unwrap(), regularity(&b).unwrap());
        assert_eq!(betti(&a), betti(&b));
    }

    #[test]
    fn fitting_ideals() {
        let b = Budget::default();
        let k = resolve(&["x", "y"], &["x", "y"]);
        let f1 = fitting_ideal(&k, 1, DEFAULT_MINOR_CAP).unwrap().groebner(&b).unwrap();
        assert_eq!(f1.basis().iter().map(|g| g.to_string()).collect::<Vec<_>>(), ["y", "x"]);

        let cusp = resolve(&["z0", "z1", "z2"], &["z1^2*z0^3 - z2^5"]);
        let f = fitting_ideal(&cusp, 1, DEFAULT_MINOR_CAP).unwrap();
        assert_eq!(f.gens(), cusp.ideal().gens());
        assert_eq!(bef_codims(&cusp, DEFAULT_MINOR_CAP, &b).unwrap(), vec![(1, Some(1))]);

        // the 2-minors of the twisted cubic's syzygy matrix give back the curve
        let tc = resolve(&["a", "b", "c", "d"], &CUBIC);
        let f2 = fitting_ideal(&tc, 2, DEFAULT_MINOR_CAP).unwrap().groebner(&b).unwrap();
        let j = tc.ideal().groebner(&b).unwrap();
        assert_eq!(f2.basis(), j.basis());
        assert_eq!(bef_codims(&tc, DEFAULT_MINOR_CAP, &b).unwrap(), vec![(1, Some(2)), (2, Some(2))]);
        assert!(matches!(fitting_ideal(&tc, 2, 1), Err(Error::MinorCap { .. })));
        assert!(fitting_ideal(&tc, 3, DEFAULT_MINOR_CAP).is_err());
    }

    #[test]
    fn buchsbaum_eisenbud_codimensions() {
        let b = Budget::default();
        let koszul3 = resolve(&["x", "y", "z"], &["x", "y", "z"]);
        let codims = bef_codims(&koszul3, DEFAULT_MINOR_CAP, &b).unwrap();
        assert_eq!(codims, vec![(1, Some(3)), (2, Some(3)), (3, Some(3))]);
        for (vars, gens, codim) in [
            (["x", "y", "z", "w"], &SKEW[..], 2usize),
            (["a", "b", "c", "d"], &QUARTIC[..], 2),
            (["a", "b", "c", "d"], &CUBIC[..], 2),
        ] {
            let r = resolve(&vars, gens);
            for (k, c) in bef_codims(&r, DEFAULT_MINOR_CAP, &b).unwrap() {
                let c = c.unwrap_or(usize::MAX);
                assert!(c >= k, "{gens:?} step {k}: {c}");
                if k > codim {
                    assert!(c > k, "{gens:?} step {k}: {c}");
                }
            }
        }
    }
}

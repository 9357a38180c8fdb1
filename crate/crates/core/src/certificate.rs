//! Degree-bounded membership certificates.
//!
//! For `Φ ∈ (F_1, …, F_m)^ℓ + I_V` we look for cofactors `Q_I`, one per
//! multi-index `|I| = ℓ`, with `deg(F^I Q_I) ≤ ρ` and
//! `Φ - Σ F^I Q_I ∈ I_V`. Normal forms modulo `I_V` are linear, so with the
//! coefficients of every `Q_I` as unknowns this is a linear system over ℚ.
//! The system enumerates all cofactors of the allowed degrees, so an
//! inconsistent system proves that no certificate exists at that `ρ`.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::groebner::{projective_closure, Budget, GroebnerBasis, Ideal};
use crate::linalg::{is_consistent_by_rank, solve_sparse};
use crate::polyring::{parse_vars_header, Monomial, MultiPoly, Rational, Ring};

/// Largest number of cofactors `binom(m + ℓ - 1, ℓ)` accepted.
pub const MAX_COFACTORS: usize = 500;

/// Limits for a certificate search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchBudget {
    /// Maximum number of nonzero entries in the linear system.
    pub max_entries: usize,
    pub groebner: Budget,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget { max_entries: 200_000, groebner: Budget::default() }
    }
}

/// `Φ ∈ (F)^ℓ` on `V = Z(I_V) ⊂ ℂ^N`.
#[derive(Clone, Debug)]
pub struct MembershipInstance {
    ring: Arc<Ring>,
    variety: Ideal,
    generators: Vec<MultiPoly>,
    target: MultiPoly,
    power: u32,
}

impl MembershipInstance {
    pub fn new(variety: Ideal, generators: Vec<MultiPoly>, target: MultiPoly, power: u32) -> Result<Self> {
        let ring = variety.ring().clone();
        if generators.is_empty() {
            return Err(Error::InvalidInput("need at least one generator".into()));
        }
        if power < 1 {
            return Err(Error::InvalidInput("power must be at least 1".into()));
        }
        let generators = generators.iter().map(|g| g.with_ring(&ring)).collect::<Result<Vec<_>>>()?;
        if generators.iter().any(|g| g.is_zero()) {
            return Err(Error::InvalidInput("generators must be nonzero".into()));
        }
        let target = target.with_ring(&ring)?;
        Ok(MembershipInstance { ring, variety, generators, target, power })
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn variety(&self) -> &Ideal {
        &self.variety
    }

    pub fn generators(&self) -> &[MultiPoly] {
        &self.generators
    }

    pub fn target(&self) -> &MultiPoly {
        &self.target
    }

    pub fn power(&self) -> u32 {
        self.power
    }

    /// Maximal generator degree `d`.
    pub fn max_degree(&self) -> u32 {
        self.generators.iter().filter_map(|g| g.degree().finite()).max().unwrap_or(0)
    }

    /// Multi-indices `|I| = ℓ` in descending lexicographic order, so for
    /// `ℓ = 1` the `j`-th index is `e_j`.
    pub fn multi_indices(&self) -> Result<Vec<Vec<u32>>> {
        let m = self.generators.len();
        let mut out = Vec::new();
        let mut cur = vec![0u32; m];
        fn rec(pos: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) -> bool {
            if out.len() > MAX_COFACTORS {
                return false;
            }
            if pos + 1 == cur.len() {
                cur[pos] = left;
                out.push(cur.clone());
                return true;
            }
            for e in (0..=left).rev() {
                cur[pos] = e;
                if !rec(pos + 1, left - e, cur, out) {
                    return false;
                }
            }
            cur[pos] = 0;
            true
        }
        if !rec(0, self.power, &mut cur, &mut out) || out.len() > MAX_COFACTORS {
            return Err(Error::BudgetExhausted(format!("more than {MAX_COFACTORS} cofactors")));
        }
        Ok(out)
    }

    /// `F^I`.
    pub fn power_product(&self, index: &[u32]) -> MultiPoly {
        let mut acc = MultiPoly::one(&self.ring);
        for (g, &e) in self.generators.iter().zip(index) {
            if e > 0 {
                acc = &acc * &g.pow(e);
            }
        }
        acc
    }

    fn variety_basis(&self, budget: &Budget) -> Result<GroebnerBasis> {
        self.variety.groebner(budget)
    }
}

/// Cofactors `Q_I`, in the order of [`MembershipInstance::multi_indices`].
#[derive(Clone, Debug, PartialEq)]
pub struct Certificate {
    pub cofactors: Vec<(Vec<u32>, MultiPoly)>,
    /// `max deg(F^I Q_I)` over nonzero cofactors (0 if all vanish).
    pub rho: u32,
    pub verified: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Search {
    Found(Certificate),
    NotFound,
}

#[derive(Clone, Debug, PartialEq)]
pub enum MinimalDegree {
    Found { rho: u32, certificate: Certificate },
    /// No certificate with `ρ ≤` the given bound.
    NotFoundBelow(u32),
}

/// Linear system for a fixed `ρ`: unknown `k` is the coefficient of
/// `unknowns[k].1` in cofactor `unknowns[k].0`.
struct System {
    indices: Vec<Vec<u32>>,
    unknowns: Vec<(usize, Monomial)>,
    rows: Vec<Vec<(usize, Rational)>>,
    rhs: Vec<Rational>,
}

fn allowed_degrees(
    inst: &MembershipInstance,
    indices: &[Vec<u32>],
    rho: u32,
    caps: &BTreeMap<usize, u32>,
) -> Vec<Option<u32>> {
    indices
        .iter()
        .enumerate()
        .map(|(k, idx)| {
            let deg = inst.power_product(idx).degree().finite()?;
            let room = rho.checked_sub(deg)?;
            Some(caps.get(&k).map_or(room, |&c| c.min(room)))
        })
        .collect()
}

fn build_system(
    inst: &MembershipInstance,
    gb: &GroebnerBasis,
    rho: u32,
    caps: &BTreeMap<usize, u32>,
    budget: &SearchBudget,
    column: impl Fn(&MultiPoly, &Monomial) -> Result<MultiPoly>,
) -> Result<System> {
    let indices = inst.multi_indices()?;
    let allowed = allowed_degrees(inst, &indices, rho, caps);
    let nvars = inst.ring.nvars();
    let mut unknowns = Vec::new();
    let mut columns: Vec<MultiPoly> = Vec::new();
    let mut entries = 0usize;
    for (k, idx) in indices.iter().enumerate() {
        let Some(deg) = allowed[k] else { continue };
        let product = inst.power_product(idx);
        for mono in Monomial::all_up_to_degree(nvars, deg) {
            let col = column(&product, &mono)?;
            entries += col.len();
            if entries > budget.max_entries {
                return Err(Error::BudgetExhausted(format!(
                    "linear system exceeds {} entries at rho = {rho}",
                    budget.max_entries
                )));
            }
            unknowns.push((k, mono));
            columns.push(col);
        }
    }
    let target = gb.normal_form(&inst.target)?;
    let mut row_of: HashMap<Monomial, usize> = HashMap::new();
    let mut rows: Vec<Vec<(usize, Rational)>> = Vec::new();
    let mut row_index = |m: &Monomial, rows: &mut Vec<Vec<(usize, Rational)>>| {
        *row_of.entry(m.clone()).or_insert_with(|| {
            rows.push(Vec::new());
            rows.len() - 1
        })
    };
    for (j, col) in columns.iter().enumerate() {
        for (m, c) in col.terms() {
            let r = row_index(m, &mut rows);
            rows[r].push((j, c.clone()));
        }
    }
    let mut rhs = vec![Rational::from_integer(0.into()); rows.len()];
    for (m, c) in target.terms() {
        let r = row_index(m, &mut rows);
        if r >= rhs.len() {
            rhs.push(Rational::from_integer(0.into()));
        }
        rhs[r] = c.clone();
    }
    Ok(System { indices, unknowns, rows, rhs })
}

/// Looks for a certificate with `deg(F^I Q_I) ≤ ρ`, each `deg Q_I` further
/// capped by `caps[k]` for the `k`-th multi-index. `NotFound` is a proof
/// that none exists under these constraints.
pub fn search_at_degree(
    inst: &MembershipInstance,
    rho: u32,
    caps: &BTreeMap<usize, u32>,
    budget: &SearchBudget,
) -> Result<Search> {
    let gb = inst.variety_basis(&budget.groebner)?;
    let sys = build_system(inst, &gb, rho, caps, budget, |p, m| {
        gb.normal_form(&p.mul_term(m, &Rational::from_integer(1.into())))
    })?;
    let Some(x) = solve_sparse(&sys.rows, &sys.rhs, sys.unknowns.len()) else {
        return Ok(Search::NotFound);
    };
    let mut terms: Vec<Vec<(Monomial, Rational)>> = vec![Vec::new(); sys.indices.len()];
    for ((k, m), v) in sys.unknowns.iter().zip(x) {
        terms[*k].push((m.clone(), v));
    }
    let cofactors: Vec<(Vec<u32>, MultiPoly)> = sys
        .indices
        .into_iter()
        .zip(terms)
        .map(|(idx, t)| (idx, MultiPoly::from_terms(&inst.ring, t)))
        .collect();
    let mut cert = Certificate { rho: achieved_degree(inst, &cofactors), cofactors, verified: false };
    if !verify_with(inst, &cert, &gb)? {
        return Err(Error::Verification("solver returned a non-certificate".into()));
    }
    cert.verified = true;
    Ok(Search::Found(cert))
}

/// Feasibility at `ρ` decided by `rank A = rank [A | b]`, with columns built
/// as `NF(NF(F^I) · μ)`. Shares nothing with [`search_at_degree`] beyond the
/// Gröbner basis; used to cross-check it.
pub fn feasible_by_rank(
    inst: &MembershipInstance,
    rho: u32,
    caps: &BTreeMap<usize, u32>,
    budget: &SearchBudget,
) -> Result<bool> {
    let gb = inst.variety_basis(&budget.groebner)?;
    let sys = build_system(inst, &gb, rho, caps, budget, |p, m| {
        let reduced = gb.normal_form(p)?;
        gb.normal_form(&reduced.mul_term(m, &Rational::from_integer(1.into())))
    })?;
    Ok(is_consistent_by_rank(&sys.rows, &sys.rhs, sys.unknowns.len()))
}

/// Smallest `ρ ≤ rho_max` admitting a certificate, by ascending scan.
pub fn minimal_degree(inst: &MembershipInstance, rho_max: u32, caps: &BTreeMap<usize, u32>, budget: &SearchBudget) -> Result<MinimalDegree> {
    for rho in 0..=rho_max {
        if let Search::Found(certificate) = search_at_degree(inst, rho, caps, budget)? {
            return Ok(MinimalDegree::Found { rho, certificate });
        }
    }
    Ok(MinimalDegree::NotFoundBelow(rho_max))
}

fn achieved_degree(inst: &MembershipInstance, cofactors: &[(Vec<u32>, MultiPoly)]) -> u32 {
    cofactors
        .iter()
        .filter(|(_, q)| !q.is_zero())
        .filter_map(|(idx, q)| Some(inst.power_product(idx).degree().finite()? + q.degree().finite()?))
        .max()
        .unwrap_or(0)
}

fn verify_with(inst: &MembershipInstance, cert: &Certificate, gb: &GroebnerBasis) -> Result<bool> {
    let mut diff = inst.target.clone();
    for (idx, q) in &cert.cofactors {
        if idx.len() != inst.generators.len() || idx.iter().sum::<u32>() != inst.power {
            return Ok(false);
        }
        let q = q.with_ring(&inst.ring)?;
        diff = &diff - &(&inst.power_product(idx) * &q);
    }
    Ok(gb.normal_form(&diff)?.is_zero())
}

/// Recomputes `NF(Φ - Σ F^I Q_I)` modulo `I_V` and compares with zero.
pub fn verify(inst: &MembershipInstance, cert: &Certificate, budget: &Budget) -> Result<bool> {
    verify_with(inst, cert, &inst.variety_basis(budget)?)
}

/// The homogenized identity `Σ f^I q_I ≡ z0^{D - deg Φ} φ (mod J_X)`, all
/// terms of degree `D`.
#[derive(Clone, Debug)]
pub struct ProjectiveIdentity {
    pub ring: Arc<Ring>,
    /// `d`-homogenizations `f_j` of the generators.
    pub generators: Vec<MultiPoly>,
    pub cofactors: Vec<(Vec<u32>, MultiPoly)>,
    /// `z0^{D - deg Φ} φ`.
    pub rhs: MultiPoly,
    pub degree: u32,
}

/// Homogenizes a verified certificate and checks the resulting identity
/// modulo the ideal of the projective closure of `V`. `D` is `rho` unless a
/// cofactor or `Φ` forces a larger degree.
pub fn projective_lift(inst: &MembershipInstance, cert: &Certificate, rho: u32, budget: &Budget) -> Result<ProjectiveIdentity> {
    if !cert.verified || cert.rho > rho {
        return Err(Error::InvalidInput(format!(
            "projective lift needs a verified certificate of degree <= {rho}"
        )));
    }
    let hring = inst.ring.homogenizing();
    let d = inst.max_degree();
    let ld = d * inst.power;
    let deg_phi = inst.target.degree().finite().unwrap_or(0);
    let mut degree = rho.max(deg_phi);
    for (_, q) in &cert.cofactors {
        if let Some(dq) = q.degree().finite() {
            degree = degree.max(dq + ld);
        }
    }
    let generators = inst
        .generators
        .iter()
        .map(|g| g.homogenize_into(d, &hring))
        .collect::<Result<Vec<_>>>()?;
    let cofactors = cert
        .cofactors
        .iter()
        .map(|(idx, q)| Ok((idx.clone(), q.homogenize_into(degree - ld, &hring)?)))
        .collect::<Result<Vec<_>>>()?;
    let z0 = MultiPoly::var(&hring, 0);
    let phi = if inst.target.is_zero() {
        MultiPoly::zero(&hring)
    } else {
        &z0.pow(degree - deg_phi) * &inst.target.homogenize_into(deg_phi, &hring)?
    };
    let mut lhs = MultiPoly::zero(&hring);
    for (idx, q) in &cofactors {
        let mut term = q.clone();
        for (f, &e) in generators.iter().zip(idx) {
            if e > 0 {
                term = &term * &f.pow(e);
            }
        }
        lhs = &lhs + &term;
    }
    let diff = &lhs - &phi;
    let holds = if inst.variety.is_zero() {
        diff.is_zero()
    } else {
        let j_x = projective_closure(&inst.variety, budget)?;
        j_x.groebner(budget)?.contains(&diff)?
    };
    if !holds {
        return Err(Error::Verification("homogenized identity fails".into()));
    }
    Ok(ProjectiveIdentity { ring: hring, generators, cofactors, rhs: phi, degree })
}

impl Certificate {
    /// Ideal-file layout: `vars:` header, one cofactor per line preceded by a
    /// `# Q[i1,...,im]` comment, then `rho:` and `verified:` trailers.
    pub fn to_text(&self, ring: &Ring) -> String {
        let mut out = String::new();
        writeln!(out, "vars: {}", ring.vars().join(", ")).unwrap();
        for (idx, q) in &self.cofactors {
            let idx: Vec<String> = idx.iter().map(|e| e.to_string()).collect();
            writeln!(out, "# Q[{}]", idx.join(",")).unwrap();
            writeln!(out, "{q}").unwrap();
        }
        writeln!(out, "rho: {}", self.rho).unwrap();
        writeln!(out, "verified: {}", self.verified).unwrap();
        out
    }

    /// Inverse of [`Certificate::to_text`].
    pub fn from_text(text: &str) -> Result<(Arc<Ring>, Certificate)> {
        let mut ring: Option<Arc<Ring>> = None;
        let mut pending: Option<Vec<u32>> = None;
        let mut cofactors = Vec::new();
        let (mut rho, mut verified) = (None, None);
        let bad = |msg: &str| Error::Syntax { pos: 0, msg: msg.to_string() };
        for line in text.lines().map(str::trim).filter(|l| !l.is_empty()) {
            if let Some(rest) = line.strip_prefix("# Q[") {
                let inner = rest.strip_suffix(']').ok_or_else(|| bad("bad cofactor header"))?;
                let idx = inner
                    .split(',')
                    .map(|s| s.trim().parse::<u32>().map_err(|_| bad("bad multi-index")))
                    .collect::<Result<Vec<_>>>()?;
                pending = Some(idx);
            } else if line.starts_with('#') {
                continue;
            } else if line.starts_with("vars:") {
                ring = Some(Ring::new(&parse_vars_header(line)?));
            } else if let Some(v) = line.strip_prefix("rho:") {
                rho = Some(v.trim().parse::<u32>().map_err(|_| bad("bad rho"))?);
            } else if let Some(v) = line.strip_prefix("verified:") {
                verified = Some(v.trim() == "true");
            } else {
                let r = ring.as_ref().ok_or_else(|| bad("missing vars header"))?;
                let idx = pending.take().ok_or_else(|| bad("cofactor without a Q[...] header"))?;
                cofactors.push((idx, MultiPoly::parse(r, line)?));
            }
        }
        let ring = ring.ok_or_else(|| bad("missing vars header"))?;
        let cert = Certificate {
            cofactors,
            rho: rho.ok_or_else(|| bad("missing rho"))?,
            verified: verified.unwrap_or(false),
        };
        Ok((ring, cert))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::membership;

    fn parse(r: &Arc<Ring>, s: &str) -> MultiPoly {
        MultiPoly::parse(r, s).unwrap()
    }

    fn instance(vars: &[&str], variety: &[&str], gens: &[&str], target: &str, power: u32) -> MembershipInstance {
        let r = Ring::new(vars);
        let v = Ideal::new(&r, variety.iter().map(|s| parse(&r, s)).collect()).unwrap();
        MembershipInstance::new(v, gens.iter().map(|s| parse(&r, s)).collect(), parse(&r, target), power).unwrap()
    }

    fn kollar() -> MembershipInstance {
        instance(&["z1", "z2"], &[], &["z1^2", "z1*z2 - 1"], "1", 1)
    }

    fn no_caps() -> BTreeMap<usize, u32> {
        BTreeMap::new()
    }

    #[test]
    fn kollar_certificate() {
        let inst = kollar();
        let b = SearchBudget::default();
        let Search::Found(c) = search_at_degree(&inst, 4, &no_caps(), &b).unwrap() else { panic!("no certificate") };
        assert!(c.verified);
        assert_eq!(c.rho, 4);
        assert_eq!(c.cofactors[0].1.to_string(), "z2^2");
        assert_eq!(c.cofactors[1].1.to_string(), "-z1*z2 - 1");
        assert!(verify(&inst, &c, &b.groebner).unwrap());

        let mut perturbed = c.clone();
        perturbed.cofactors[0].1 = &perturbed.cofactors[0].1 + &parse(inst.ring(), "1/1000*z2");
        assert!(!verify(&inst, &perturbed, &b.groebner).unwrap());

        match minimal_degree(&inst, 8, &no_caps(), &b).unwrap() {
            MinimalDegree::Found { rho, certificate } => {
                assert_eq!(rho, 4);
                assert!(certificate.verified);
            }
            other => panic!("{other:?}"),
        }
        let caps = BTreeMap::from([(0, 1)]);
        for rho in 0..=10 {
            assert_eq!(search_at_degree(&inst, rho, &caps, &b).unwrap(), Search::NotFound);
        }
    }

    #[test]
    fn generator_membership() {
        let inst = instance(&["x", "y"], &[], &["x^2 + y", "x*y"], "x^2 + y", 1);
        let Search::Found(c) = search_at_degree(&inst, 2, &no_caps(), &SearchBudget::default()).unwrap() else {
            panic!()
        };
        assert_eq!(c.cofactors[0].1.to_string(), "1");
        assert!(c.cofactors[1].1.is_zero());
        let b = Budget::default();
        let lift = projective_lift(&inst, &c, 2, &b).unwrap();
        assert_eq!(lift.cofactors[0].1.to_string(), "1");
        let lift = projective_lift(&inst, &c, 3, &b).unwrap();
        assert_eq!(lift.cofactors[0].1.to_string(), "z0");
    }

    #[test]
    fn power_certificate() {
        let inst = instance(&["z1", "z2"], &[], &["z1^2", "z1*z2 - 1"], "z1^4", 2);
        assert_eq!(inst.multi_indices().unwrap(), vec![vec![2, 0], vec![1, 1], vec![0, 2]]);
        let b = SearchBudget::default();
        let MinimalDegree::Found { rho, certificate } = minimal_degree(&inst, 6, &no_caps(), &b).unwrap() else { panic!() };
        assert_eq!(rho, 4);
        assert_eq!(certificate.cofactors[0].1.to_string(), "1");
        assert!(verify(&inst, &certificate, &b.groebner).unwrap());
    }

    #[test]
    fn macaulay_pair() {
        let inst = instance(&["z1"], &[], &["z1^2", "z1^2 - 2*z1 + 1"], "1", 1);
        let MinimalDegree::Found { rho, .. } = minimal_degree(&inst, 6, &no_caps(), &SearchBudget::default()).unwrap() else {
            panic!()
        };
        assert!(rho <= 3);
        assert_eq!(rho, 3);
    }

    #[test]
    fn cusp_refutation() {
        for p in [3, 5, 7] {
            let inst = instance(&["z1", "z2"], &[&format!("z1^2 - z2^{p}")], &["z2"], "z1", 1);
            let b = SearchBudget::default();
            assert_eq!(minimal_degree(&inst, 12, &no_caps(), &b).unwrap(), MinimalDegree::NotFoundBelow(12));
            let ideal = inst.variety().with_generators(inst.generators()).unwrap();
            assert!(!membership(inst.target(), &ideal, &b.groebner).unwrap());
        }
    }

    #[test]
    fn variety_membership_certificate() {
        // on the parabola y = x^2, x^2 lies in (y)
        let inst = instance(&["x", "y"], &["y - x^2"], &["y"], "x^2", 1);
        let MinimalDegree::Found { rho, certificate } =
            minimal_degree(&inst, 4, &no_caps(), &SearchBudget::default()).unwrap()
        else {
            panic!()
        };
        assert_eq!(rho, 1);
        let lift = projective_lift(&inst, &certificate, rho, &Budget::default()).unwrap();
        assert_eq!(lift.degree, 2);
    }

    #[test]
    fn solver_matches_rank_oracle() {
        let b = SearchBudget::default();
        let cases = [
            kollar(),
            instance(&["z1"], &[], &["z1^2", "z1^2 - 2*z1 + 1"], "1", 1),
            instance(&["z1", "z2"], &["z1^2 - z2^3"], &["z2"], "z1", 1),
            instance(&["x", "y"], &["y - x^2"], &["y", "x*y - 1"], "1", 1),
            instance(&["z1", "z2"], &[], &["z1^2", "z1*z2 - 1"], "z1^4", 2),
        ];
        for inst in &cases {
            for rho in 0..=6 {
                let found = matches!(search_at_degree(inst, rho, &no_caps(), &b).unwrap(), Search::Found(_));
                assert_eq!(found, feasible_by_rank(inst, rho, &no_caps(), &b).unwrap(), "rho = {rho}");
            }
        }
    }

    #[test]
    fn monotone_in_rho() {
        let b = SearchBudget::default();
        let inst = kollar();
        let mut seen = false;
        for rho in 0..=7 {
            let found = matches!(search_at_degree(&inst, rho, &no_caps(), &b).unwrap(), Search::Found(_));
            assert!(!seen || found);
            seen |= found;
        }
        assert!(seen);
    }

    #[test]
    fn kollar_projective_identity() {
        let inst = kollar();
        let Search::Found(c) = search_at_degree(&inst, 4, &no_caps(), &SearchBudget::default()).unwrap() else { panic!() };
        let lift = projective_lift(&inst, &c, 4, &Budget::default()).unwrap();
        let gens: Vec<String> = lift.generators.iter().map(|g| g.to_string()).collect();
        assert_eq!(gens, ["z1^2", "-z0^2 + z1*z2"]);
        assert_eq!(lift.rhs.to_string(), "z0^4");
        assert_eq!(lift.cofactors[0].1.to_string(), "z2^2");
        assert_eq!(lift.cofactors[1].1.to_string(), "-z0^2 - z1*z2");
    }

    #[test]
    fn budget_and_validation() {
        let inst = kollar();
        let tiny = SearchBudget { max_entries: 5, groebner: Budget::default() };
        assert!(matches!(search_at_degree(&inst, 4, &no_caps(), &tiny), Err(Error::BudgetExhausted(_))));
        let r = Ring::new(&["x"]);
        let zero = MembershipInstance::new(Ideal::zero(&r), vec![MultiPoly::zero(&r)], MultiPoly::one(&r), 1);
        assert!(zero.is_err());
        let many = instance(&["x"], &[], &["x"; 8], "1", 12);
        assert!(matches!(many.multi_indices(), Err(Error::BudgetExhausted(_))));
    }

    #[test]
    fn text_roundtrip() {
        let inst = kollar();
        let Search::Found(c) = search_at_degree(&inst, 4, &no_caps(), &SearchBudget::default()).unwrap() else { panic!() };
        let text = c.to_text(inst.ring());
        assert_eq!(text, "vars: z1, z2\n# Q[1,0]\nz2^2\n# Q[0,1]\n-z1*z2 - 1\nrho: 4\nverified: true\n");
        let (ring, back) = Certificate::from_text(&text).unwrap();
        assert_eq!(ring.vars(), inst.ring().vars());
        assert_eq!(back, c);
    }
}

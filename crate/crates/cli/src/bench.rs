//! Benchmark families and their CSV rows.
//!
//! Columns: `family,params,rho_min,hickel_i,macaulay,jelonek,hermann,slack,ms`.
//! `rho_min` is `none` when no certificate exists up to the scan limit and
//! `budget` when the search ran out of budget; missing values are `NA`.

use std::collections::BTreeMap;
use std::io::Write;
use std::time::Instant;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use nullcert_core::bounds::{comparison_bounds, cusp_mu_zero, BoundInputs, CInf};
use nullcert_core::certificate::{minimal_degree, MembershipInstance, MinimalDegree, SearchBudget};
use nullcert_core::groebner::Ideal;
use nullcert_core::invariants::{empty_at_infinity, projectively_empty};
use nullcert_core::localorder::{max_bs_exponent, BranchParam, BsExponent};
use nullcert_core::polyring::{Monomial, MultiPoly, Rational, Ring};
use nullcert_core::Error;

use crate::{CliError, Settings};

pub const CSV_VERSION_LINE: &str = "# nullcert-bench v1";
pub const CSV_HEADER: &str = "family,params,rho_min,hickel_i,macaulay,jelonek,hermann,slack,ms";

/// Resampling attempts per generic instance.
pub const MAX_TRIES: usize = 50;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Kollar,
    MacaulayGeneric,
    Cusp,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Kollar => "kollar",
            Family::MacaulayGeneric => "macaulay-generic",
            Family::Cusp => "cusp",
        }
    }

    pub fn parse(s: &str) -> Option<Family> {
        [Family::Kollar, Family::MacaulayGeneric, Family::Cusp].into_iter().find(|f| f.name() == s)
    }
}

#[derive(Clone, Debug)]
pub struct BenchConfig {
    pub family: Family,
    pub d: Vec<u32>,
    pub m: Vec<u32>,
    pub n: Vec<u32>,
    pub p: Vec<u32>,
    /// Instances per parameter point (macaulay-generic).
    pub count: usize,
    /// Scan limit for families without a theorem bound (cusp).
    pub rho_max: u32,
    pub timing: bool,
}

impl BenchConfig {
    pub fn new(family: Family) -> Self {
        BenchConfig { family, d: vec![2], m: vec![2], n: vec![2], p: vec![3, 5, 7], count: 1, rho_max: 20, timing: true }
    }
}

/// Parses `2`, `2..4` (inclusive) or `2,3,5`.
pub fn parse_range(s: &str) -> Result<Vec<u32>, String> {
    let bad = || format!("bad range `{s}` (expected a, a..b or a,b,c)");
    if let Some((a, b)) = s.split_once("..") {
        let a: u32 = a.trim().parse().map_err(|_| bad())?;
        let b: u32 = b.trim().parse().map_err(|_| bad())?;
        if a > b {
            return Err(bad());
        }
        return Ok((a..=b).collect());
    }
    s.split(',').map(|v| v.trim().parse().map_err(|_| bad())).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RhoMin {
    Found(u32),
    NotFound,
    Budget,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BenchRow {
    pub family: &'static str,
    pub params: String,
    pub rho_min: RhoMin,
    pub hickel_i: Option<BigInt>,
    pub macaulay: Option<BigInt>,
    pub jelonek: Option<BigInt>,
    pub hermann: Option<BigInt>,
    /// `hickel_i - rho_min`.
    pub slack: Option<BigInt>,
    pub ms: u128,
}

impl BenchRow {
    pub fn to_csv(&self) -> String {
        let opt = |v: &Option<BigInt>| v.as_ref().map_or("NA".to_string(), |v| v.to_string());
        let rho = match self.rho_min {
            RhoMin::Found(r) => r.to_string(),
            RhoMin::NotFound => "none".into(),
            RhoMin::Budget => "budget".into(),
        };
        format!(
            "{},{},{},{},{},{},{},{},{}",
            self.family,
            self.params,
            rho,
            opt(&self.hickel_i),
            opt(&self.macaulay),
            opt(&self.jelonek),
            opt(&self.hermann),
            opt(&self.slack),
            self.ms
        )
    }
}

fn poly(ring: &std::sync::Arc<Ring>, s: &str) -> MultiPoly {
    MultiPoly::parse(ring, s).expect("family polynomials are well-formed")
}

fn vars(n: u32) -> Vec<String> {
    (1..=n).map(|i| format!("z{i}")).collect()
}

/// `z1^d, z1 z_m^{d-1} - z2^d, …, z_{m-2} z_m^{d-1} - z_{m-1}^d, z_{m-1} z_m^{d-1} - 1`
/// in `n ≥ m` variables; for `Φ = 1` the minimal certificate degree is `d^m`.
pub fn kollar_instance(d: u32, m: u32, n: u32) -> Result<MembershipInstance, CliError> {
    if m < 2 || n < m || d < 1 {
        return Err(CliError::Input(format!("kollar needs 2 <= m <= n and d >= 1, got d={d} m={m} n={n}")));
    }
    let ring = Ring::new(&vars(n));
    let zm = format!("z{m}^{}", d - 1);
    let mut gens = vec![poly(&ring, &format!("z1^{d}"))];
    for j in 1..m - 1 {
        gens.push(poly(&ring, &format!("z{j}*{zm} - z{}^{d}", j + 1)));
    }
    gens.push(poly(&ring, &format!("z{}*{zm} - 1", m - 1)));
    Ok(MembershipInstance::new(Ideal::zero(&ring), gens, MultiPoly::one(&ring), 1)?)
}

/// `n + 1` dense polynomials of degree `d` in `n` variables with
/// coefficients in `-3..=3`, resampled until their homogenizations have no
/// common zero at infinity and none in `ℙ^n`. Returns the instance and
/// the number of draws used.
pub fn sample_macaulay(d: u32, n: u32, rng: &mut ChaCha8Rng, settings: &Settings) -> Result<(MembershipInstance, usize), CliError> {
    let ring = Ring::new(&vars(n));
    let hring = ring.homogenizing();
    let monomials = Monomial::all_up_to_degree(n as usize, d);
    for tries in 1..=MAX_TRIES {
        let gens: Vec<MultiPoly> = (0..=n)
            .map(|_| loop {
                let terms = monomials.iter().map(|m| (m.clone(), Rational::from_integer(rng.gen_range(-3..=3).into())));
                let p = MultiPoly::from_terms(&ring, terms);
                if p.degree().finite() == Some(d) {
                    break p;
                }
            })
            .collect();
        let homog = gens.iter().map(|g| g.homogenize_into(d, &hring)).collect::<Result<Vec<_>, _>>()?;
        if !empty_at_infinity(&homog, &Ideal::zero(&hring), &settings.budget)? {
            continue;
        }
        if !projectively_empty(&Ideal::new(&hring, homog)?, &settings.budget)? {
            continue;
        }
        return Ok((MembershipInstance::new(Ideal::zero(&ring), gens, MultiPoly::one(&ring), 1)?, tries));
    }
    Err(CliError::Budget(format!("no admissible macaulay-generic sample in {MAX_TRIES} draws")))
}

/// Stream seed for one `(d, n)` point, so adding parameter points does not
/// change the others.
pub fn macaulay_rng(seed: u64, d: u32, n: u32) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed.wrapping_mul(1_000_003) ^ ((d as u64) << 32 | n as u64))
}

/// Cusp `z1^2 = z2^p` with `F = z2`, `Φ = z1`.
pub fn cusp_instance(p: u32) -> Result<MembershipInstance, CliError> {
    if p < 2 {
        return Err(CliError::Input("cusp needs p >= 2".into()));
    }
    let ring = Ring::new(&vars(2));
    let variety = Ideal::new(&ring, vec![poly(&ring, &format!("z1^2 - z2^{p}"))])?;
    Ok(MembershipInstance::new(variety, vec![poly(&ring, "z2")], poly(&ring, "z1"), 1)?)
}

fn search(mi: &MembershipInstance, rho_max: u32, settings: &Settings) -> Result<(RhoMin, u128), CliError> {
    let budget = SearchBudget { max_entries: settings.matrix_entries, groebner: settings.budget.clone() };
    let start = Instant::now();
    let r = match minimal_degree(mi, rho_max, &BTreeMap::new(), &budget) {
        Ok(MinimalDegree::Found { rho, .. }) => RhoMin::Found(rho),
        Ok(MinimalDegree::NotFoundBelow(_)) => RhoMin::NotFound,
        Err(Error::BudgetExhausted(_)) => RhoMin::Budget,
        Err(e) => return Err(e.into()),
    };
    Ok((r, start.elapsed().as_millis()))
}

fn row(family: Family, params: String, inputs: &BoundInputs, rho_min: RhoMin, ms: u128, timing: bool) -> Result<BenchRow, CliError> {
    let report = comparison_bounds(inputs)?;
    let hickel_i = report.get("hickel_i").cloned();
    let slack = match (&rho_min, &hickel_i) {
        (RhoMin::Found(r), Some(h)) => Some(h - BigInt::from(*r)),
        _ => None,
    };
    Ok(BenchRow {
        family: family.name(),
        params,
        rho_min,
        hickel_i,
        macaulay: report.get("macaulay").cloned(),
        jelonek: report.get("jelonek").cloned(),
        hermann: report.get("hermann").cloned(),
        slack,
        ms: if timing { ms } else { 0 },
    })
}

fn to_u32(v: &BigInt) -> u32 {
    u32::try_from(v).unwrap_or(u32::MAX)
}

/// Rows in parameter order.
pub fn run(config: &BenchConfig, settings: &Settings) -> Result<Vec<BenchRow>, CliError> {
    let mut rows = Vec::new();
    match config.family {
        Family::Kollar => {
            for &d in &config.d {
                for &m in &config.m {
                    for &n in config.n.iter().filter(|&&n| n >= m) {
                        let mi = kollar_instance(d, m, n)?;
                        let mut inputs = BoundInputs::new(n, n, m, d, 0, 1, 1, CInf::Explicit(m));
                        inputs.mu_zero = Some(0);
                        let bound = comparison_bounds(&inputs)?.get("hickel_i").map_or(config.rho_max, to_u32);
                        let (r, ms) = search(&mi, bound, settings)?;
                        rows.push(row(config.family, format!("d={d};m={m};n={n}"), &inputs, r, ms, config.timing)?);
                    }
                }
            }
        }
        Family::MacaulayGeneric => {
            for &d in &config.d {
                for &n in &config.n {
                    let mut rng = macaulay_rng(settings.seed, d, n);
                    for index in 0..config.count {
                        let (mi, tries) = sample_macaulay(d, n, &mut rng, settings)?;
                        let mut inputs = BoundInputs::new(n, n, n + 1, d, 0, 1, 1, CInf::MinusInfinity);
                        inputs.mu_zero = Some(0);
                        inputs.no_common_zeros = true;
                        let bound = comparison_bounds(&inputs)?.get("hickel_i").map_or(config.rho_max, to_u32);
                        let (r, ms) = search(&mi, bound, settings)?;
                        let params = format!("d={d};n={n};seed={};index={index};tries={tries}", settings.seed);
                        rows.push(row(config.family, params, &inputs, r, ms, config.timing)?);
                    }
                }
            }
        }
        Family::Cusp => {
            for &p in &config.p {
                let mi = cusp_instance(p)?;
                let mut inputs = BoundInputs::new(2, 1, 1, 1, 1, p, p, CInf::Explicit(1));
                inputs.mu_zero = cusp_mu_zero(p);
                let branch = BranchParam::monomial(&[p, 2])?;
                let ratio = match max_bs_exponent(mi.generators(), mi.target(), &[branch])? {
                    BsExponent::Finite(r) => r,
                    BsExponent::Unbounded => return Err(CliError::Failure("cusp target vanishes on its branch".into())),
                };
                let (r, ms) = search(&mi, config.rho_max, settings)?;
                let params = format!("p={p};bs_ratio={ratio};bs_exponent={}", ratio.floor());
                rows.push(row(config.family, params, &inputs, r, ms, config.timing)?);
            }
        }
    }
    Ok(rows)
}

pub fn write_csv(rows: &[BenchRow], out: &mut dyn Write) -> std::io::Result<()> {
    writeln!(out, "{CSV_VERSION_LINE}")?;
    writeln!(out, "{CSV_HEADER}")?;
    for r in rows {
        writeln!(out, "{}", r.to_csv())?;
    }
    Ok(())
}

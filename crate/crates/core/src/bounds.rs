//! Degree bounds for solutions of `F_1 Q_1 + … + F_m Q_m = Φ` on an affine
//! variety `V` with projective closure `X`, evaluated side by side.
//!
//! All arithmetic is done with big integers. The local Briançon–Skoda
//! numbers `μ₀`, `μ′` and the codimension `c∞` have no algorithm here; they
//! are inputs.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};

/// How `c∞` (largest codimension of a distinguished variety at infinity)
/// enters the bounds.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CInf {
    /// No distinguished variety at infinity: `d^{c∞}` is replaced by 0.
    MinusInfinity,
    Explicit(u32),
    /// `c∞ ≤ μ` always holds, so `μ` is a safe substitute.
    UpperBoundMu,
}

impl fmt::Display for CInf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CInf::MinusInfinity => write!(f, "-inf"),
            CInf::Explicit(c) => write!(f, "{c}"),
            CInf::UpperBoundMu => write!(f, "mu"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BoundInputs {
    /// `N`, with `V ⊂ ℂ^N` and `X ⊂ ℙ^N`.
    pub ambient: u32,
    /// `n = dim X`.
    pub n: u32,
    /// Number of generators `F_j`.
    pub m: u32,
    /// Maximal degree of the `F_j`.
    pub d: u32,
    pub deg_phi: u32,
    pub deg_x: u32,
    pub reg_x: u32,
    /// Power `ℓ` of the ideal `(F_j)^ℓ`.
    pub ell: u32,
    pub mu_zero: Option<u32>,
    pub mu_prime: Option<u32>,
    pub c_inf: CInf,
    /// Caller asserts `X` is Cohen–Macaulay; for `m ≤ n` the regularity
    /// entry of the two main bounds is then dropped.
    pub cohen_macaulay: bool,
    /// Caller asserts the codimension condition `codim(Z^f ∩ X^ℓ) ≥ μ+ℓ+1`
    /// on the singular strata, under which `μ₀ = 0` may be used.
    pub singular_strata_condition: bool,
    /// Caller asserts the `f_j` have no common zeros on `X` (Macaulay regime).
    pub no_common_zeros: bool,
}

impl BoundInputs {
    /// Inputs with `ℓ = 1`, no optional data and no assertions.
    #[allow(clippy::too_many_arguments)]
    pub fn new(ambient: u32, n: u32, m: u32, d: u32, deg_phi: u32, deg_x: u32, reg_x: u32, c_inf: CInf) -> Self {
        BoundInputs {
            ambient,
            n,
            m,
            d,
            deg_phi,
            deg_x,
            reg_x,
            ell: 1,
            mu_zero: None,
            mu_prime: None,
            c_inf,
            cohen_macaulay: false,
            singular_strata_condition: false,
            no_common_zeros: false,
        }
    }

    /// `μ = min(m, n)`.
    pub fn mu(&self) -> u32 {
        self.m.min(self.n)
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidInput(msg));
        if self.n < 1 || self.n > self.ambient {
            return bad(format!("need 1 <= n <= N, got n = {}, N = {}", self.n, self.ambient));
        }
        if self.m < 1 || self.d < 1 || self.ell < 1 {
            return bad("m, d and ell must be at least 1".into());
        }
        if self.deg_x < 1 || self.reg_x < 1 {
            return bad("degX and regX must be at least 1".into());
        }
        if let CInf::Explicit(c) = self.c_inf {
            if c < 1 || c > self.mu() {
                return bad(format!("cInf = {c} outside 1..={} (cInf <= mu = min(m, n))", self.mu()));
            }
        }
        Ok(())
    }

    /// `d^{c∞}`, or 0 when there is no distinguished variety at infinity.
    pub fn d_pow_c(&self) -> BigInt {
        match self.c_inf {
            CInf::MinusInfinity => BigInt::zero(),
            CInf::Explicit(c) => big(self.d).pow(c),
            CInf::UpperBoundMu => big(self.d).pow(self.mu()),
        }
    }

    fn mu_zero_value(&self) -> Result<u32> {
        if self.singular_strata_condition {
            return Ok(0);
        }
        self.mu_zero.ok_or_else(|| {
            Error::InvalidInput(
                "hickel_i: needs muZero (0 for smooth X; cusp z1^2 = z2^p: max((p-1)/2, ceil((p-3)(p-1)/(p-2))))".into(),
            )
        })
    }

    fn min_m_n1(&self) -> u32 {
        self.m.min(self.n + 1)
    }

    /// `(d-1) min(m, n+1) + reg X`, or `None` when dropped in the
    /// Cohen–Macaulay case.
    fn regularity_entry(&self) -> Option<BigInt> {
        if self.cohen_macaulay && self.m <= self.n {
            return None;
        }
        Some(big(self.d - 1) * big(self.min_m_n1()) + big(self.reg_x))
    }

    /// Stable short hash of the inputs, for machine-readable reports.
    pub fn hash(&self) -> String {
        let digest = Sha256::digest(self.to_string().as_bytes());
        digest.iter().take(8).map(|b| format!("{b:02x}")).collect()
    }
}

impl fmt::Display for BoundInputs {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let opt = |v: Option<u32>| v.map_or("-".to_string(), |v| v.to_string());
        write!(
            f,
            "N={} n={} m={} d={} degPhi={} degX={} regX={} ell={} muZero={} muPrime={} cInf={} cm={} strata={} noCommonZeros={}",
            self.ambient,
            self.n,
            self.m,
            self.d,
            self.deg_phi,
            self.deg_x,
            self.reg_x,
            self.ell,
            opt(self.mu_zero),
            opt(self.mu_prime),
            self.c_inf,
            self.cohen_macaulay,
            self.singular_strata_condition,
            self.no_common_zeros
        )
    }
}

fn big(v: u32) -> BigInt {
    BigInt::from(v)
}

fn max_opt(a: BigInt, b: Option<BigInt>) -> BigInt {
    match b {
        Some(b) if b > a => b,
        _ => a,
    }
}

/// `max(deg Φ + (μ+μ₀) d^{c∞} deg X, (d-1) min(m, n+1) + reg X)`.
pub fn hickel_bound_i(inp: &BoundInputs) -> Result<BigInt> {
    inp.validate()?;
    let mu0 = inp.mu_zero_value()?;
    let first = big(inp.deg_phi) + big(inp.mu() + mu0) * inp.d_pow_c() * big(inp.deg_x);
    Ok(max_opt(first, inp.regularity_entry()))
}

/// `max(deg Φ + μ d^{c∞} deg X + μ′, (d-1) min(m, n+1) + reg X)`, for smooth `V`.
pub fn hickel_bound_ii(inp: &BoundInputs) -> Result<BigInt> {
    inp.validate()?;
    let mu_prime = inp
        .mu_prime
        .ok_or_else(|| Error::InvalidInput("hickel_ii: needs muPrime (0 for smooth X)".into()))?;
    let first = big(inp.deg_phi) + big(inp.mu()) * inp.d_pow_c() * big(inp.deg_x) + big(mu_prime);
    Ok(max_opt(first, inp.regularity_entry()))
}

/// Bound for `Φ ∈ (F_j)^ℓ`:
/// `max(deg Φ + (μ+μ₀+ℓ-1) d^{c∞} deg X, d(min(m,n+1)+ℓ-1) - min(m,n+1) + reg X)`.
pub fn power_bound(inp: &BoundInputs) -> Result<BigInt> {
    inp.validate()?;
    let mu0 = inp.mu_zero_value()?;
    let k = big(inp.min_m_n1());
    let first = big(inp.deg_phi) + big(inp.mu() + mu0 + inp.ell - 1) * inp.d_pow_c() * big(inp.deg_x);
    let second = big(inp.d) * (&k + big(inp.ell - 1)) - &k + big(inp.reg_x);
    Ok(first.max(second))
}

/// The two Macaulay-type bounds, for `f_j` without common zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MacaulayBounds {
    /// `max(deg Φ, d(n+1) - n)`: no common zeros on all of `ℙ^n`.
    pub projective_space: BigInt,
    /// `max(deg Φ, (d-1)(n+1) + reg X)`: no common zeros on `X`.
    pub on_variety: BigInt,
}

pub fn macaulay_bound(inp: &BoundInputs) -> Result<MacaulayBounds> {
    inp.validate()?;
    let (d, n, phi) = (big(inp.d), big(inp.n), big(inp.deg_phi));
    let a: BigInt = &d * (&n + 1) - &n;
    let b: BigInt = (&d - 1) * (&n + 1) + big(inp.reg_x);
    Ok(MacaulayBounds { projective_space: phi.clone().max(a), on_variety: phi.max(b) })
}

/// `c_m d^μ deg V` with `c_m = 1` if `m ≤ n` and `2` otherwise.
pub fn jelonek_bound(inp: &BoundInputs) -> BigInt {
    let c = if inp.m <= inp.n { 1 } else { 2 };
    BigInt::from(c) * big(inp.d).pow(inp.mu()) * big(inp.deg_x)
}

/// Largest `N` for which the doubly exponential column is evaluated.
pub const HERMANN_MAX_AMBIENT: u32 = 16;

/// `deg Φ + 2 (2d)^{2^N - 1}`, the large-`d` shape of the general bound.
pub fn hermann_bound(inp: &BoundInputs) -> Option<BigInt> {
    if inp.ambient > HERMANN_MAX_AMBIENT {
        return None;
    }
    let e = (1u32 << inp.ambient) - 1;
    Some(big(inp.deg_phi) + BigInt::from(2) * big(2 * inp.d).pow(e))
}

/// `max(deg Φ + μ d^{c∞}, d min(m, n+1) - n)`: the bound for `V = ℂ^n`.
pub fn affine_space_bound(inp: &BoundInputs) -> BigInt {
    let first = big(inp.deg_phi) + big(inp.mu()) * inp.d_pow_c();
    let second = big(inp.d) * big(inp.min_m_n1()) - big(inp.n);
    first.max(second)
}

/// `d^{codim Z} deg X`, the cap on the multiplicity attached to a
/// distinguished variety `Z`.
pub fn multiplicity_cap(d: u32, codim: u32, deg_x: u32) -> BigInt {
    big(d).pow(codim) * big(deg_x)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Applicability {
    Applicable,
    /// Evaluated, but only meaningful as a comparison.
    ComparisonOnly(&'static str),
    NotApplicable(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundEntry {
    pub name: &'static str,
    pub value: Option<BigInt>,
    pub applicability: Applicability,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundReport {
    pub inputs: BoundInputs,
    pub entries: Vec<BoundEntry>,
}

impl BoundReport {
    pub fn get(&self, name: &str) -> Option<&BigInt> {
        self.entries.iter().find(|e| e.name == name).and_then(|e| e.value.as_ref())
    }

    /// One `name,value,applicability,inputs_hash` line per bound.
    pub fn machine_lines(&self) -> Vec<String> {
        let hash = self.inputs.hash();
        self.entries
            .iter()
            .map(|e| {
                let value = e.value.as_ref().map_or("NA".to_string(), |v| v.to_string());
                let app = match &e.applicability {
                    Applicability::Applicable => "applicable".to_string(),
                    Applicability::ComparisonOnly(_) => "comparison-only".to_string(),
                    Applicability::NotApplicable(_) => "not-applicable".to_string(),
                };
                format!("{},{},{},{}", e.name, value, app, hash)
            })
            .collect()
    }
}

impl fmt::Display for BoundReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "inputs: {}", self.inputs)?;
        let values: Vec<String> = self
            .entries
            .iter()
            .map(|e| e.value.as_ref().map_or("-".to_string(), |v| v.to_string()))
            .collect();
        let name_w = self.entries.iter().map(|e| e.name.len()).max().unwrap_or(0).max(5);
        let val_w = values.iter().map(|v| v.len()).max().unwrap_or(0).max(5);
        writeln!(f, "{:<name_w$}  {:>val_w$}  note", "bound", "value")?;
        for (e, v) in self.entries.iter().zip(&values) {
            let note = match &e.applicability {
                Applicability::Applicable => String::new(),
                Applicability::ComparisonOnly(why) => why.to_string(),
                Applicability::NotApplicable(why) => why.clone(),
            };
            writeln!(f, "{:<name_w$}  {:>val_w$}  {}", e.name, v, note)?;
        }
        Ok(())
    }
}

fn entry(name: &'static str, r: Result<BigInt>) -> BoundEntry {
    match r {
        Ok(v) => BoundEntry { name, value: Some(v), applicability: Applicability::Applicable },
        Err(Error::InvalidInput(why)) => BoundEntry { name, value: None, applicability: Applicability::NotApplicable(why) },
        Err(e) => BoundEntry { name, value: None, applicability: Applicability::NotApplicable(e.to_string()) },
    }
}

/// Every bound the inputs allow, plus the comparison columns.
pub fn comparison_bounds(inp: &BoundInputs) -> Result<BoundReport> {
    inp.validate()?;
    let mut entries = vec![entry("hickel_i", hickel_bound_i(inp))];
    entries.push(match inp.mu_prime {
        Some(_) => entry("hickel_ii", hickel_bound_ii(inp)),
        None => BoundEntry {
            name: "hickel_ii",
            value: None,
            applicability: Applicability::NotApplicable("needs muPrime".into()),
        },
    });
    entries.push(entry("power", power_bound(inp)));
    let mac = macaulay_bound(inp)?;
    for (name, v) in [("macaulay", mac.projective_space), ("macaulay_x", mac.on_variety)] {
        entries.push(if inp.no_common_zeros {
            BoundEntry { name, value: Some(v), applicability: Applicability::Applicable }
        } else {
            BoundEntry {
                name,
                value: None,
                applicability: Applicability::NotApplicable("needs no common zeros of the f_j".into()),
            }
        });
    }
    entries.push(BoundEntry {
        name: "jelonek",
        value: Some(jelonek_bound(inp)),
        applicability: if inp.deg_phi == 0 {
            Applicability::Applicable
        } else {
            Applicability::ComparisonOnly("stated for Phi = 1")
        },
    });
    entries.push(match hermann_bound(inp) {
        Some(v) => BoundEntry { name: "hermann", value: Some(v), applicability: Applicability::ComparisonOnly("asymptotic comparison only") },
        None => BoundEntry {
            name: "hermann",
            value: None,
            applicability: Applicability::NotApplicable(format!("N > {HERMANN_MAX_AMBIENT}")),
        },
    });
    Ok(BoundReport { inputs: inp.clone(), entries })
}

/// `μ₀` of the cusp `z1^2 = z2^p` for odd `p ≥ 3`:
/// `max((p-1)/2, ⌈(p-3)(p-1)/(p-2)⌉)`.
pub fn cusp_mu_zero(p: u32) -> Option<u32> {
    if p < 3 || p.is_multiple_of(2) {
        return None;
    }
    let a = (p - 1) / 2;
    let b = ((p - 3) * (p - 1)).div_ceil(p - 2);
    Some(a.max(b))
}

/// Whether every value in the report is nonnegative (sanity check).
pub fn all_nonnegative(r: &BoundReport) -> bool {
    r.entries.iter().filter_map(|e| e.value.as_ref()).all(|v| !v.is_negative())
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};

    fn kollar() -> BoundInputs {
        let mut i = BoundInputs::new(2, 2, 2, 2, 0, 1, 1, CInf::Explicit(2));
        i.mu_zero = Some(0);
        i
    }

    fn n(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn kollar_values() {
        let k = kollar();
        assert_eq!(hickel_bound_i(&k).unwrap(), n(8));
        let mut ii = k.clone();
        ii.mu_prime = Some(3);
        assert_eq!(hickel_bound_ii(&ii).unwrap(), n(11));
        ii.mu_prime = Some(0);
        assert_eq!(hickel_bound_ii(&ii).unwrap(), hickel_bound_i(&k).unwrap());
        let mut p = k.clone();
        p.ell = 2;
        assert_eq!(power_bound(&p).unwrap(), n(12));
        let r = comparison_bounds(&k).unwrap();
        assert_eq!(r.get("hickel_i"), Some(&n(8)));
        assert_eq!(r.get("jelonek"), Some(&n(4)));
        assert_eq!(r.get("hermann"), Some(&n(128)));
        assert!(r.get("hickel_ii").is_none());
        assert!(all_nonnegative(&r));
        assert_eq!(r.machine_lines()[0], format!("hickel_i,8,applicable,{}", k.hash()));
    }

    #[test]
    fn minus_infinity_mode() {
        let mut i = BoundInputs::new(5, 5, 2, 2, 5, 1, 1, CInf::MinusInfinity);
        i.mu_zero = Some(0);
        // max(5, 1*2 + 1)
        assert_eq!(hickel_bound_i(&i).unwrap(), n(5));
        i.mu_prime = Some(4);
        assert_eq!(hickel_bound_ii(&i).unwrap(), n(9));
        let mut p = BoundInputs::new(2, 2, 2, 2, 0, 1, 1, CInf::MinusInfinity);
        p.mu_zero = Some(0);
        p.ell = 2;
        // max(0, 2*(2+1) - 2 + 1)
        assert_eq!(power_bound(&p).unwrap(), n(5));
    }

    #[test]
    fn macaulay_examples() {
        let i = BoundInputs::new(1, 1, 2, 2, 0, 1, 1, CInf::MinusInfinity);
        assert_eq!(macaulay_bound(&i).unwrap().projective_space, n(3));
        let mut big_phi = i.clone();
        big_phi.deg_phi = 10;
        assert_eq!(macaulay_bound(&big_phi).unwrap().projective_space, n(10));
        for d in 1..=10 {
            for nn in 1..=10 {
                let i = BoundInputs::new(nn, nn, 1, d, 0, 1, 1, CInf::MinusInfinity);
                let m = macaulay_bound(&i).unwrap();
                assert_eq!(m.projective_space, m.on_variety);
            }
        }
    }

    #[test]
    fn comparison_columns() {
        let mut i = kollar();
        i.m = 3;
        assert_eq!(jelonek_bound(&i), n(2 * 4));
        let mut wide = kollar();
        wide.ambient = 5;
        wide.n = 2;
        assert!(hermann_bound(&wide).unwrap() > BigInt::from(i64::MAX));
        wide.ambient = 17;
        assert!(hermann_bound(&wide).is_none());
        assert_eq!(multiplicity_cap(2, 2, 1), n(4));
        assert_eq!(multiplicity_cap(5, 0, 3), n(3));
        assert_eq!(multiplicity_cap(3, 1, 2), n(6));
    }

    #[test]
    fn validation() {
        let mut i = kollar();
        i.c_inf = CInf::Explicit(3);
        assert!(hickel_bound_i(&i).is_err());
        i.c_inf = CInf::Explicit(0);
        assert!(hickel_bound_i(&i).is_err());
        let mut i = kollar();
        i.mu_zero = None;
        let err = hickel_bound_i(&i).unwrap_err().to_string();
        assert!(err.contains("hickel_i: needs muZero"), "{err}");
        i.singular_strata_condition = true;
        assert_eq!(hickel_bound_i(&i).unwrap(), n(8));
        let mut i = kollar();
        i.n = 3;
        assert!(i.validate().is_err());
    }

    #[test]
    fn cusp_mu_zero_values() {
        assert_eq!(cusp_mu_zero(3), Some(1));
        assert_eq!(cusp_mu_zero(5), Some(3));
        assert_eq!(cusp_mu_zero(7), Some(5));
        assert_eq!(cusp_mu_zero(4), None);
    }

    /// Random inputs on `V = ℂ^n`: `N = n`, `deg X = reg X = 1`, `μ₀ = 0`,
    /// Cohen–Macaulay asserted, `c∞ ∈ 1..=μ` or `μ`, or `-∞` when `m > n`.
    fn random_affine_space_inputs(rng: &mut impl Rng) -> BoundInputs {
        let nn = rng.gen_range(1..=6);
        let m = rng.gen_range(1..=8);
        let d = rng.gen_range(1..=6);
        let mu = m.min(nn);
        let c_inf = match rng.gen_range(0..3) {
            0 if m > nn => CInf::MinusInfinity,
            1 => CInf::UpperBoundMu,
            _ => CInf::Explicit(rng.gen_range(1..=mu)),
        };
        let mut i = BoundInputs::new(nn, nn, m, d, rng.gen_range(0..=12), 1, 1, c_inf);
        i.mu_zero = Some(0);
        i.cohen_macaulay = true;
        i
    }

    #[test]
    fn affine_space_identity_sweep() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(2);
        for _ in 0..500 {
            let i = random_affine_space_inputs(&mut rng);
            assert_eq!(hickel_bound_i(&i).unwrap(), affine_space_bound(&i), "{i}");
            let mut full = i.clone();
            full.cohen_macaulay = false;
            assert!(hickel_bound_i(&full).unwrap() >= affine_space_bound(&i), "{i}");
        }
    }

    fn random_inputs(rng: &mut impl Rng) -> BoundInputs {
        let ambient = rng.gen_range(1..=6);
        let nn = rng.gen_range(1..=ambient);
        let m = rng.gen_range(1..=7);
        let mu = m.min(nn);
        let c_inf = match rng.gen_range(0..3) {
            0 => CInf::MinusInfinity,
            1 => CInf::UpperBoundMu,
            _ => CInf::Explicit(rng.gen_range(1..=mu)),
        };
        let mut i = BoundInputs::new(
            ambient,
            nn,
            m,
            rng.gen_range(1..=5),
            rng.gen_range(0..=10),
            rng.gen_range(1..=6),
            rng.gen_range(1..=6),
            c_inf,
        );
        i.mu_zero = Some(rng.gen_range(0..=4));
        i.mu_prime = Some(rng.gen_range(0..=4));
        i
    }

    #[test]
    fn power_bound_at_ell_one() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for _ in 0..500 {
            let i = random_inputs(&mut rng);
            assert_eq!(power_bound(&i).unwrap(), hickel_bound_i(&i).unwrap(), "{i}");
        }
    }

    #[test]
    fn monotonicity() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(4);
        type Bump = fn(&mut BoundInputs);
        let bumps: [Bump; 5] = [
            |i| i.deg_phi += 1,
            |i| i.deg_x += 1,
            |i| i.reg_x += 1,
            |i| i.mu_zero = i.mu_zero.map(|v| v + 1),
            |i| i.ell += 1,
        ];
        for _ in 0..300 {
            let i = random_inputs(&mut rng);
            let mut with_ell = i.clone();
            with_ell.ell = rng.gen_range(1..=4);
            for bump in bumps {
                let mut j = with_ell.clone();
                bump(&mut j);
                assert!(hickel_bound_i(&j).unwrap() >= hickel_bound_i(&with_ell).unwrap());
                assert!(hickel_bound_ii(&j).unwrap() >= hickel_bound_ii(&with_ell).unwrap());
                assert!(power_bound(&j).unwrap() >= power_bound(&with_ell).unwrap());
                let (a, b) = (macaulay_bound(&j).unwrap(), macaulay_bound(&with_ell).unwrap());
                assert!(a.projective_space >= b.projective_space && a.on_variety >= b.on_variety);
                assert!(jelonek_bound(&j) >= jelonek_bound(&with_ell));
            }
        }
    }
}

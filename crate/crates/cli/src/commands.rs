//! `membership`, `bounds`, `resolve` and `invariants`.

use std::collections::BTreeMap;
use std::io::Write;

use nullcert_core::bounds::{comparison_bounds, BoundInputs, CInf};
use nullcert_core::certificate::{
    minimal_degree, projective_lift, search_at_degree, Certificate, MembershipInstance, MinimalDegree, Search,
    SearchBudget,
};
use nullcert_core::groebner::{projective_closure, Ideal};
use nullcert_core::invariants::{hilbert_data, HilbertData};
use nullcert_core::polyring::{Fp, MultiPoly, Rational};
use nullcert_core::resolution::{bef_codims, betti, minimal_resolution, regularity, DEFAULT_MINOR_CAP};

use crate::instance::Instance;
use crate::{CliError, Settings};

/// Scan limit for `membership --min` when neither a flag nor the instance
/// sets one.
pub const DEFAULT_RHO_MAX: u32 = 20;

#[derive(Clone, Debug, Default)]
pub struct MembershipOptions {
    /// Search at exactly this degree bound.
    pub rho: Option<u32>,
    /// Scan for the minimal degree.
    pub min: bool,
    pub rho_max: Option<u32>,
    /// `(0-based cofactor index, degree cap)`; overrides the instance caps.
    pub caps: Vec<(usize, u32)>,
    /// Also print the homogenized identity.
    pub lift: bool,
}

fn variety_ideal(inst: &Instance) -> Result<Ideal, CliError> {
    Ok(Ideal::new(&inst.ring, inst.variety.clone())?)
}

fn membership_instance(inst: &Instance) -> Result<MembershipInstance, CliError> {
    let target = inst
        .target
        .clone()
        .ok_or_else(|| CliError::Input("membership needs a `target:` section".into()))?;
    Ok(MembershipInstance::new(variety_ideal(inst)?, inst.generators.clone(), target, inst.power)?)
}

fn write_certificate(
    out: &mut dyn Write,
    mi: &MembershipInstance,
    cert: &Certificate,
    rho: u32,
    lift: bool,
    settings: &Settings,
) -> Result<(), CliError> {
    out.write_all(cert.to_text(mi.ring()).as_bytes())?;
    if lift {
        let id = projective_lift(mi, cert, rho, &settings.budget)?;
        writeln!(out, "projective identity (degree {}):", id.degree)?;
        for (j, f) in id.generators.iter().enumerate() {
            writeln!(out, "  f{}: {f}", j + 1)?;
        }
        for (idx, q) in &id.cofactors {
            let idx: Vec<String> = idx.iter().map(|e| e.to_string()).collect();
            writeln!(out, "  q[{}]: {q}", idx.join(","))?;
        }
        writeln!(out, "  rhs: {}", id.rhs)?;
    }
    Ok(())
}

/// Exit status 0 covers both a certificate and a definitive refutation.
pub fn membership(inst: &Instance, opts: &MembershipOptions, settings: &Settings, out: &mut dyn Write) -> Result<(), CliError> {
    let mi = membership_instance(inst)?;
    let mut caps: BTreeMap<usize, u32> = inst.params.caps.clone();
    let ncof = mi.multi_indices()?.len();
    for &(j, k) in &opts.caps {
        if j >= ncof {
            return Err(CliError::Input(format!("--cap-gen {}: only {ncof} cofactors", j + 1)));
        }
        caps.insert(j, k);
    }
    let budget = SearchBudget { max_entries: settings.matrix_entries, groebner: settings.budget.clone() };
    match opts.rho {
        Some(rho) if !opts.min => match search_at_degree(&mi, rho, &caps, &budget)? {
            Search::Found(cert) => {
                writeln!(out, "found at rho<={rho}")?;
                write_certificate(out, &mi, &cert, rho, opts.lift, settings)?;
            }
            Search::NotFound => writeln!(out, "not in ideal at rho<={rho}")?,
        },
        _ => {
            let rho_max = opts.rho_max.or(opts.rho).or(inst.params.rho_max).unwrap_or(DEFAULT_RHO_MAX);
            match minimal_degree(&mi, rho_max, &caps, &budget)? {
                MinimalDegree::Found { rho, certificate } => {
                    writeln!(out, "rho_min: {rho}")?;
                    write_certificate(out, &mi, &certificate, rho, opts.lift, settings)?;
                }
                MinimalDegree::NotFoundBelow(r) => writeln!(out, "not in ideal at rho<={r}")?,
            }
        }
    }
    Ok(())
}

/// `n`, `deg X`, `reg X` of the projective closure of the variety.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClosureInvariants {
    pub n: u32,
    pub deg_x: u32,
    pub reg_x: u32,
}

/// Saturation, Gröbner basis, Hilbert series and minimal resolution of
/// the projective closure.
pub fn closure_invariants(inst: &Instance, settings: &Settings) -> Result<ClosureInvariants, CliError> {
    let j_x = projective_closure(&variety_ideal(inst)?, &settings.budget)?;
    let data = hilbert_data(&j_x, &settings.budget)?;
    let n = data.proj_dimension().unwrap_or(-1);
    if n < 0 {
        return Err(CliError::Input("the variety is empty".into()));
    }
    let deg = data.proj_degree()?;
    let reg = regularity(&minimal_resolution(&j_x, &settings.budget)?)?;
    let to_u32 = |v: i64, what: &str| u32::try_from(v).map_err(|_| CliError::Input(format!("{what} out of range: {v}")));
    Ok(ClosureInvariants { n: to_u32(n, "dimension")?, deg_x: to_u32(deg, "degree")?, reg_x: to_u32(reg, "regularity")? })
}

/// Bound inputs from the instance, with `n`, `deg X`, `reg X` taken from
/// `computed` when given.
pub fn bound_inputs(inst: &Instance, computed: Option<ClosureInvariants>) -> Result<BoundInputs, CliError> {
    if inst.generators.is_empty() {
        return Err(CliError::Input("bounds need a `generators:` section".into()));
    }
    let p = &inst.params;
    let ambient = inst.ring.nvars() as u32;
    let whole_space = inst.variety.is_empty();
    let missing = |what: &str| CliError::Input(format!("missing {what} (set it under params: or pass --compute-invariants)"));
    let (n, deg_x, reg_x) = match computed {
        Some(c) => (c.n, c.deg_x, c.reg_x),
        None if whole_space => (p.n.unwrap_or(ambient), p.deg_x.unwrap_or(1), p.reg_x.unwrap_or(1)),
        None => (
            p.n.ok_or_else(|| missing("n"))?,
            p.deg_x.ok_or_else(|| missing("deg_x"))?,
            p.reg_x.ok_or_else(|| missing("reg_x"))?,
        ),
    };
    let mut inputs = BoundInputs::new(
        ambient,
        n,
        inst.generators.len() as u32,
        inst.max_degree(),
        inst.target_degree(),
        deg_x,
        reg_x,
        p.c_inf.unwrap_or(CInf::UpperBoundMu),
    );
    inputs.ell = inst.power;
    inputs.mu_zero = p.mu_zero;
    inputs.mu_prime = p.mu_prime;
    inputs.cohen_macaulay = p.cohen_macaulay;
    inputs.singular_strata_condition = p.singular_strata;
    inputs.no_common_zeros = p.no_common_zeros;
    inputs.validate()?;
    Ok(inputs)
}

pub fn bounds(inst: &Instance, compute: bool, machine: bool, settings: &Settings, out: &mut dyn Write) -> Result<(), CliError> {
    let computed = if compute { Some(closure_invariants(inst, settings)?) } else { None };
    let inputs = bound_inputs(inst, computed)?;
    let report = comparison_bounds(&inputs)?;
    if machine {
        for line in report.machine_lines() {
            writeln!(out, "{line}")?;
        }
        return Ok(());
    }
    if let Some(c) = computed {
        writeln!(out, "computed: n={} deg_x={} reg_x={}", c.n, c.deg_x, c.reg_x)?;
    }
    write!(out, "{report}")?;
    Ok(())
}

fn homogeneous_ideal(inst: &Instance, homogenize_saturate: bool, settings: &Settings) -> Result<Ideal, CliError> {
    let ideal = variety_ideal(inst)?;
    if homogenize_saturate {
        return Ok(projective_closure(&ideal, &settings.budget)?);
    }
    if !ideal.is_homogeneous() {
        return Err(CliError::Input("ideal is not homogeneous (use --homogenize-saturate for affine input)".into()));
    }
    Ok(ideal)
}

pub fn resolve(inst: &Instance, homogenize_saturate: bool, settings: &Settings, out: &mut dyn Write) -> Result<(), CliError> {
    let ideal = homogeneous_ideal(inst, homogenize_saturate, settings)?;
    if homogenize_saturate {
        writeln!(out, "vars: {}", ideal.ring().vars().join(", "))?;
    }
    let res = minimal_resolution(&ideal, &settings.budget)?;
    writeln!(out, "betti:")?;
    write!(out, "{}", betti(&res))?;
    writeln!(out, "regularity: {}", regularity(&res)?)?;
    let codim = hilbert_data(&ideal, &settings.budget)?.codimension();
    for (k, c) in bef_codims(&res, DEFAULT_MINOR_CAP, &settings.budget)? {
        let c = c.map_or("inf".to_string(), |c| c.to_string());
        writeln!(out, "bef k={k}: codim {c} (need >= {k})")?;
    }
    if let Some(c) = codim {
        writeln!(out, "codim: {c}")?;
    }
    Ok(())
}

fn write_hilbert(out: &mut dyn Write, data: &HilbertData) -> Result<(), CliError> {
    writeln!(out, "hilbert numerator: {data}")?;
    if data.is_unit_ideal() {
        writeln!(out, "unit ideal: the zero set is empty")?;
        return Ok(());
    }
    writeln!(out, "krull dimension: {}", data.krull_dimension()?)?;
    writeln!(out, "projective dimension: {}", data.proj_dimension()?)?;
    match data.proj_degree() {
        Ok(d) => writeln!(out, "degree: {d}")?,
        Err(_) => writeln!(out, "degree: - (empty projective scheme)")?,
    }
    if let Some(c) = data.codimension() {
        writeln!(out, "codimension: {c}")?;
    }
    writeln!(out, "hilbert polynomial: {}", format_univariate(&data.hilbert_polynomial()?, "s"))?;
    let hf: Vec<String> = data.hilbert_function(8).iter().map(|v| v.to_string()).collect();
    writeln!(out, "hilbert function: {}, ...", hf.join(", "))?;
    Ok(())
}

/// Ascending coefficient list as a polynomial in `var`.
fn format_univariate(coeffs: &[Rational], var: &str) -> String {
    let ring = nullcert_core::polyring::Ring::new(&[var]);
    let terms = coeffs
        .iter()
        .enumerate()
        .map(|(e, c)| (nullcert_core::polyring::Monomial::new(vec![e as u32]), c.clone()));
    MultiPoly::from_terms(&ring, terms).to_string()
}

pub fn invariants(
    inst: &Instance,
    homogenize_saturate: bool,
    characteristic: Option<u32>,
    settings: &Settings,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    let ideal = homogeneous_ideal(inst, homogenize_saturate, settings)?;
    let data = match characteristic {
        None => hilbert_data(&ideal, &settings.budget)?,
        Some(p) => {
            let zero = Fp::field(p)?;
            let ring = ideal.ring().over(Fp::new(1, zero.modulus()));
            let gens = ideal.gens().iter().map(|g| g.to_field(&ring)).collect::<Result<Vec<_>, _>>()?;
            writeln!(out, "characteristic: {p}")?;
            hilbert_data(&Ideal::new(&ring, gens)?, &settings.budget)?
        }
    };
    write_hilbert(out, &data)
}

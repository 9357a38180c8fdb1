//! Instance files: a `vars:` header followed by named sections.
//!
//! ```text
//! vars: z1, z2
//! variety:
//!   z1^2 - z2^5
//! generators:
//!   z2
//! target: z1
//! power: 1
//! branches:
//!   branch: z1 = t^5; z2 = t^2
//! params:
//!   mu_zero: 3
//!   c_inf: 1
//! ```
//!
//! A file without section headers is a plain ideal file; its polynomials
//! form the `variety` section.

use std::collections::BTreeMap;
use std::sync::Arc;

use nullcert_core::bounds::CInf;
use nullcert_core::localorder::BranchParam;
use nullcert_core::polyring::{parse_vars_header, MultiPoly, Ring};
use nullcert_core::Error;

use crate::CliError;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Params {
    /// `n = dim X`.
    pub n: Option<u32>,
    pub deg_x: Option<u32>,
    pub reg_x: Option<u32>,
    pub mu_zero: Option<u32>,
    pub mu_prime: Option<u32>,
    pub c_inf: Option<CInf>,
    pub cohen_macaulay: bool,
    pub singular_strata: bool,
    pub no_common_zeros: bool,
    pub rho_max: Option<u32>,
    /// Cofactor degree caps, keyed by 0-based cofactor index.
    pub caps: BTreeMap<usize, u32>,
}

#[derive(Clone, Debug)]
pub struct Instance {
    pub ring: Arc<Ring>,
    pub variety: Vec<MultiPoly>,
    pub generators: Vec<MultiPoly>,
    pub target: Option<MultiPoly>,
    pub power: u32,
    pub branches: Vec<BranchParam>,
    pub params: Params,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Section {
    Variety,
    Generators,
    Target,
    Branches,
    Params,
}

const SECTIONS: [(&str, Section); 5] = [
    ("variety", Section::Variety),
    ("generators", Section::Generators),
    ("target", Section::Target),
    ("branches", Section::Branches),
    ("params", Section::Params),
];

fn parse_error(line: usize, msg: impl std::fmt::Display) -> CliError {
    CliError::Parse(format!("line {line}: {msg}"))
}

fn core_error(line: usize, e: Error) -> CliError {
    match e {
        Error::Syntax { pos, msg } => parse_error(line, format!("column {}: {msg}", pos + 1)),
        other => parse_error(line, other),
    }
}

/// `j:k` with 1-based `j`.
pub fn parse_cap(text: &str) -> Result<(usize, u32), String> {
    let (j, k) = text.split_once(':').ok_or_else(|| format!("expected j:k, got `{text}`"))?;
    let j: usize = j.trim().parse().map_err(|_| format!("bad generator index `{j}`"))?;
    let k: u32 = k.trim().parse().map_err(|_| format!("bad degree cap `{k}`"))?;
    if j == 0 {
        return Err("generator indices start at 1".into());
    }
    Ok((j - 1, k))
}

fn parse_c_inf(v: &str) -> Option<CInf> {
    match v {
        "-inf" | "minus_infinity" => Some(CInf::MinusInfinity),
        "mu" => Some(CInf::UpperBoundMu),
        _ => v.parse().ok().map(CInf::Explicit),
    }
}

fn parse_bool(v: &str) -> Option<bool> {
    match v {
        "true" | "yes" | "1" => Some(true),
        "false" | "no" | "0" => Some(false),
        _ => None,
    }
}

impl Params {
    fn set(&mut self, key: &str, value: &str) -> Result<(), String> {
        let num = |v: &str| v.parse::<u32>().map_err(|_| format!("{key}: expected a nonnegative integer, got `{v}`"));
        let flag = |v: &str| parse_bool(v).ok_or_else(|| format!("{key}: expected true or false, got `{v}`"));
        match key {
            "n" | "dim_x" => self.n = Some(num(value)?),
            "deg_x" => self.deg_x = Some(num(value)?),
            "reg_x" => self.reg_x = Some(num(value)?),
            "mu_zero" => self.mu_zero = Some(num(value)?),
            "mu_prime" => self.mu_prime = Some(num(value)?),
            "c_inf" => {
                self.c_inf = Some(parse_c_inf(value).ok_or_else(|| format!("c_inf: expected -inf, mu or an integer, got `{value}`"))?)
            }
            "cohen_macaulay" => self.cohen_macaulay = flag(value)?,
            "singular_strata" => self.singular_strata = flag(value)?,
            "no_common_zeros" => self.no_common_zeros = flag(value)?,
            "rho_max" => self.rho_max = Some(num(value)?),
            "cap" => {
                let (j, k) = parse_cap(value)?;
                self.caps.insert(j, k);
            }
            _ => return Err(format!("unknown parameter `{key}`")),
        }
        Ok(())
    }
}

/// Splits `name: rest` when `name` is a section keyword.
fn section_header(line: &str) -> Option<(Section, &str)> {
    let (name, rest) = line.split_once(':')?;
    SECTIONS.iter().find(|(n, _)| *n == name.trim()).map(|&(_, s)| (s, rest.trim()))
}

impl Instance {
    pub fn parse(text: &str) -> Result<Instance, CliError> {
        let mut ring: Option<Arc<Ring>> = None;
        let mut section = Section::Variety;
        let mut inst = Instance {
            ring: Ring::new::<&str>(&[]),
            variety: Vec::new(),
            generators: Vec::new(),
            target: None,
            power: 1,
            branches: Vec::new(),
            params: Params::default(),
        };
        for (i, raw) in text.lines().enumerate() {
            let lineno = i + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let Some(r) = ring.clone() else {
                let vars = parse_vars_header(line).map_err(|e| core_error(lineno, e))?;
                ring = Some(Ring::new(&vars));
                continue;
            };
            if let Some(v) = line.strip_prefix("power:") {
                inst.power = v.trim().parse().map_err(|_| parse_error(lineno, "power: expected a positive integer"))?;
                if inst.power == 0 {
                    return Err(parse_error(lineno, "power must be at least 1"));
                }
                continue;
            }
            let body = match section_header(line) {
                Some((s, rest)) => {
                    section = s;
                    if rest.is_empty() {
                        continue;
                    }
                    rest
                }
                None => line,
            };
            if body.starts_with("branch:") {
                section = Section::Branches;
            }
            match section {
                Section::Variety | Section::Generators | Section::Target => {
                    let p = MultiPoly::parse(&r, body).map_err(|e| core_error(lineno, e))?;
                    match section {
                        Section::Variety => inst.variety.push(p),
                        Section::Generators => inst.generators.push(p),
                        _ => {
                            if inst.target.replace(p).is_some() {
                                return Err(parse_error(lineno, "target given twice"));
                            }
                        }
                    }
                }
                Section::Branches => {
                    let b = BranchParam::parse(&r, body).map_err(|e| core_error(lineno, e))?;
                    inst.branches.push(b);
                }
                Section::Params => {
                    let (k, v) = body
                        .split_once(':')
                        .or_else(|| body.split_once('='))
                        .ok_or_else(|| parse_error(lineno, "expected `key: value`"))?;
                    inst.params.set(k.trim(), v.trim()).map_err(|m| parse_error(lineno, m))?;
                }
            }
        }
        inst.ring = ring.ok_or_else(|| CliError::Parse("missing `vars:` header".into()))?;
        Ok(inst)
    }

    /// Maximal generator degree.
    pub fn max_degree(&self) -> u32 {
        self.generators.iter().filter_map(|g| g.degree().finite()).max().unwrap_or(0)
    }

    pub fn target_degree(&self) -> u32 {
        self.target.as_ref().and_then(|t| t.degree().finite()).unwrap_or(0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sections_and_params() {
        let text = "# cusp\nvars: z1, z2\nvariety:\n  z1^2 - z2^5\ngenerators: z2\ntarget:\n  z1\npower: 1\nbranch: z1 = t^5; z2 = t^2\nparams:\n  mu_zero: 3\n  c_inf = 1\n  cap: 1:2\n";
        let inst = Instance::parse(text).unwrap();
        assert_eq!(inst.variety.len(), 1);
        assert_eq!(inst.generators[0].to_string(), "z2");
        assert_eq!(inst.target.as_ref().unwrap().to_string(), "z1");
        assert_eq!(inst.branches.len(), 1);
        assert_eq!(inst.params.mu_zero, Some(3));
        assert_eq!(inst.params.c_inf, Some(CInf::Explicit(1)));
        assert_eq!(inst.params.caps.get(&0), Some(&2));
    }

    #[test]
    fn plain_ideal_file() {
        let inst = Instance::parse("vars: x, y\nx*y\ny^2\n").unwrap();
        assert_eq!(inst.variety.len(), 2);
        assert!(inst.generators.is_empty());
    }

    #[test]
    fn errors_name_the_line() {
        let err = Instance::parse("vars: x\ngenerators:\nx +* 2\n").unwrap_err();
        assert!(matches!(&err, CliError::Parse(m) if m.starts_with("line 3")), "{err}");
        let err = Instance::parse("vars: x\nparams:\nfoo: 1\n").unwrap_err();
        assert!(err.to_string().contains("unknown parameter"));
        assert!(Instance::parse("x^2\n").is_err());
        assert!(Instance::parse("vars: x\npower: 0\n").is_err());
        assert_eq!(parse_cap("0:1").unwrap_err(), "generator indices start at 1");
    }
}

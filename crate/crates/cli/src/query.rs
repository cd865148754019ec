//! `value`, `max` and `threshold`: single queries against the core crate.

use std::fmt::Write as _;
use std::str::FromStr;

use lusztig_core::{
    alpha, alpha_minus, alpha_plus, attainment_threshold, beta, beta_prime, bound_value, max_series_size,
    pair_partition_count, partition_count, small_n_max, BoundKind, Family, GroupSpec, Nat, QParity, ShapeClass,
};

use crate::error::{usage, CliError, CliResult};

/// A function name accepted by `value`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ValueFn {
    P,
    P2,
    Beta,
    BetaPrime,
    Alpha,
    AlphaPlus,
    AlphaMinus,
    Bound(BoundKind),
}

impl FromStr for ValueFn {
    type Err = CliError;

    fn from_str(s: &str) -> CliResult<Self> {
        Ok(match s {
            "p" => ValueFn::P,
            "p2" => ValueFn::P2,
            "beta" => ValueFn::Beta,
            "beta_prime" => ValueFn::BetaPrime,
            "alpha" => ValueFn::Alpha,
            "alpha_plus" => ValueFn::AlphaPlus,
            "alpha_minus" => ValueFn::AlphaMinus,
            _ => match s.parse() {
                Ok(k) => ValueFn::Bound(k),
                Err(_) => {
                    return usage(format!(
                        "unknown function `{s}`; expected p, p2, beta, beta_prime, alpha, alpha_plus, alpha_minus, \
                     f, f_plus, f_minus, tau, theta, theta_plus or theta_minus"
                    ))
                }
            },
        })
    }
}

/// The exact value. Below a bound's threshold the closed form does not
/// apply, so this is the exact maximum of the underlying product family.
pub fn value(f: ValueFn, n: usize) -> CliResult<Nat> {
    Ok(match f {
        ValueFn::P => partition_count(n),
        ValueFn::P2 => pair_partition_count(n),
        ValueFn::Beta => beta(n),
        ValueFn::BetaPrime => beta_prime(n)?,
        ValueFn::Alpha => alpha(n),
        ValueFn::AlphaPlus => alpha_plus(n),
        ValueFn::AlphaMinus => alpha_minus(n),
        ValueFn::Bound(k) if n >= k.threshold() => bound_value(k, n)?,
        ValueFn::Bound(k) => small_n_max(k, n).value,
    })
}

/// Explains a below-threshold bound value.
pub fn value_note(f: ValueFn, n: usize) -> Option<String> {
    match f {
        ValueFn::Bound(k) if n < k.threshold() => Some(format!(
            "note: the closed form for {} holds from n = {}; printed the exact maximum of its product family",
            k.name(),
            k.threshold()
        )),
        _ => None,
    }
}

/// Characteristic parity as typed on the command line; `any` is only
/// meaningful for GL and U.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ParityArg {
    Even,
    Odd,
    Any,
}

impl FromStr for ParityArg {
    type Err = CliError;

    fn from_str(s: &str) -> CliResult<Self> {
        match s.to_ascii_lowercase().as_str() {
            "even" => Ok(ParityArg::Even),
            "odd" => Ok(ParityArg::Odd),
            "any" | "-" => Ok(ParityArg::Any),
            _ => usage(format!("unknown parity `{s}`; expected even, odd or any")),
        }
    }
}

pub fn parse_family(s: &str) -> CliResult<Family> {
    s.parse().map_err(|_| CliError::Usage(format!("unknown family `{s}`; expected GL, U, B, C, D+ or D-")))
}

pub fn group_spec(family: Family, parity: ParityArg, n: usize, q_mod4: Option<u8>) -> CliResult<GroupSpec> {
    if n == 0 {
        return usage("n must be at least 1");
    }
    let q = match (parity, family.is_type_a()) {
        (ParityArg::Even, _) => QParity::Even,
        (ParityArg::Odd, _) => QParity::Odd,
        // GL and U do not depend on q at all.
        (ParityArg::Any, true) => QParity::Odd,
        (ParityArg::Any, false) => return usage(format!("{family} needs the parity of q: even or odd")),
    };
    let spec = GroupSpec::new(family, n, q)?;
    match q_mod4 {
        None => Ok(spec),
        Some(r) => spec.with_q_mod4(r).map_err(|e| CliError::Usage(e.to_string())),
    }
}

fn threshold_lines(spec: &GroupSpec) -> CliResult<String> {
    let mut out = String::new();
    for class in ShapeClass::ALL {
        let t = attainment_threshold(spec, class)?;
        let _ = write!(out, "threshold\t{class}\t{}", t.bound);
        if let Some(c) = t.side_condition {
            let _ = write!(out, "\t{c}");
            match c.holds(spec.q_mod4()) {
                Some(true) => out.push_str(" [satisfied]"),
                Some(false) => out.push_str(" [fails for this q]"),
                None => {}
            }
        }
        out.push('\n');
    }
    Ok(out)
}

/// The exact maximum for one group, optional witnesses, then the q thresholds.
pub fn render_max(spec: &GroupSpec, witnesses: bool) -> CliResult<String> {
    let best = max_series_size(spec)?;
    let mut out = format!("{spec}\nmax\t{}\n", best.value);
    if witnesses {
        for s in &best.witnesses {
            let _ = write!(out, "witness\t{s}\t");
            if spec.family().is_type_a() {
                let _ = write!(out, "partition {}", s.generic_degrees());
            } else {
                let sign = |p: lusztig_core::EigenPart| p.sign.map(|x| format!("({x})")).unwrap_or_default();
                let _ = write!(
                    out,
                    "a={}{},b={}{}",
                    s.one_part.dim,
                    sign(s.one_part),
                    s.minus_part.dim,
                    sign(s.minus_part)
                );
            }
            out.push('\n');
        }
    }
    out.push_str(&threshold_lines(spec)?);
    Ok(out)
}

pub fn render_threshold(spec: &GroupSpec) -> CliResult<String> {
    Ok(format!("{spec}\n{}", threshold_lines(spec)?))
}

//! Tables 1 to 4, regenerated from the core crate and rendered as TSV or JSON.

use std::fmt::Write as _;
use std::ops::RangeInclusive;
use std::str::FromStr;

use lusztig_core::{alpha, alpha_minus, alpha_plus, beta, beta_maximizers, max_gamma, GammaKind, Nat};
use serde::{Deserialize, Serialize};

use crate::error::{usage, CliError, CliResult};
use crate::golden::{GammaCell, Table1Row, Table2Row, Table3Row, Table4Row};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableId {
    One,
    Two,
    Three,
    Four,
}

impl TableId {
    /// Rows printed when no range is given, and the largest n accepted.
    fn limits(self) -> (RangeInclusive<usize>, usize) {
        match self {
            TableId::One => (8..=50, 400),
            TableId::Two => (1..=43, 300),
            TableId::Three | TableId::Four => (1..=33, 120),
        }
    }
}

impl FromStr for TableId {
    type Err = CliError;

    fn from_str(s: &str) -> CliResult<Self> {
        match s {
            "1" => Ok(TableId::One),
            "2" => Ok(TableId::Two),
            "3" => Ok(TableId::Three),
            "4" => Ok(TableId::Four),
            _ => usage(format!("no table `{s}`; expected 1, 2, 3 or 4")),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Tsv,
    Json,
}

impl FromStr for Format {
    type Err = CliError;

    fn from_str(s: &str) -> CliResult<Self> {
        match s.to_ascii_lowercase().as_str() {
            "tsv" => Ok(Format::Tsv),
            "json" => Ok(Format::Json),
            _ => usage(format!("unknown format `{s}`; expected tsv or json")),
        }
    }
}

/// An inclusive range of n written `a..b` (or `a..=b`).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NRange {
    pub lo: usize,
    pub hi: usize,
}

impl NRange {
    pub fn iter(self) -> RangeInclusive<usize> {
        self.lo..=self.hi
    }
}

impl FromStr for NRange {
    type Err = CliError;

    fn from_str(s: &str) -> CliResult<Self> {
        let bad = || usage(format!("bad range `{s}`; expected a..b with 1 <= a <= b"));
        let Some((a, b)) = s.split_once("..") else { return bad() };
        let b = b.strip_prefix('=').unwrap_or(b);
        match (a.trim().parse(), b.trim().parse()) {
            (Ok(lo), Ok(hi)) if 1 <= lo && lo <= hi => Ok(NRange { lo, hi }),
            _ => bad(),
        }
    }
}

/// β(n) with every maximizing partition, for the per-n form of Table 1.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Table1Point {
    pub n: usize,
    pub beta: String,
    pub maximizers: Vec<Vec<usize>>,
}

fn exponent(offset: usize) -> String {
    if offset == 0 {
        "n/4".into()
    } else {
        format!("(n-{offset})/4")
    }
}

/// The residue-class row for n ≡ r mod 4, read off the maximizer at a
/// representative n in 40..44.
pub fn table1_row(residue: usize) -> Table1Row {
    let n = 40 + residue;
    let best = beta_maximizers(n);
    let [pi] = best.maximizers.as_slice() else { panic!("β({n}) has {} maximizers", best.maximizers.len()) };
    let fixed: Vec<usize> = pi.parts().iter().copied().filter(|&x| x != 4).collect();
    let offset: usize = fixed.iter().sum();
    let scale = Nat::from(5u32).pow(((n - offset) / 4) as u32);
    assert!(&best.value % &scale == Nat::ZERO);
    let coefficient = (&best.value / &scale).to_string();
    let e = exponent(offset);
    let mut pi_text = format!("(4^{{{e}}}");
    for x in fixed.iter().rev() {
        let _ = write!(pi_text, ",{x}");
    }
    pi_text.push(')');
    let beta_text = if coefficient == "1" { format!("5^{{{e}}}") } else { format!("{coefficient}*5^{{{e}}}") };
    Table1Row { residue, fixed_parts: fixed, coefficient, offset, pi: pi_text, beta: beta_text }
}

pub fn table1_point(n: usize) -> Table1Point {
    let best = beta_maximizers(n);
    Table1Point {
        n,
        beta: best.value.to_string(),
        maximizers: best.maximizers.iter().map(|p| p.parts().to_vec()).collect(),
    }
}

pub fn table2_row(n: usize) -> Table2Row {
    Table2Row {
        n,
        beta: beta(n).to_string(),
        alpha: alpha(n).to_string(),
        alpha_plus: alpha_plus(n).to_string(),
        alpha_minus: alpha_minus(n).to_string(),
    }
}

pub fn gamma_cell(kind: GammaKind, n: usize) -> GammaCell {
    let best = max_gamma(kind, n);
    GammaCell {
        value: best.value.to_string(),
        witnesses: best.witnesses.iter().map(|&(a, b)| [a, b, n - a - b]).collect(),
    }
}

pub fn table3_row(n: usize) -> Table3Row {
    Table3Row { n, aa: gamma_cell(GammaKind::AA, n), a_plus: gamma_cell(GammaKind::APlus, n) }
}

pub fn table4_row(n: usize) -> Table4Row {
    Table4Row { n, plusplus: gamma_cell(GammaKind::PlusPlus, n), plus_minus: gamma_cell(GammaKind::PlusMinus, n) }
}

/// `α(15)α(14)β(4)`; factors with argument 0 equal 1 and are left out.
pub fn witness_text(kind: GammaKind, [a, b, c]: [usize; 3]) -> String {
    let (k1, k2) = kind.factors();
    let mut s = String::new();
    for (sym, x) in [(k1.symbol(), a), (k2.symbol(), b), ("β", c)] {
        if x > 0 {
            let _ = write!(s, "{sym}({x})");
        }
    }
    if s.is_empty() {
        s.push('1');
    }
    s
}

/// Tied witnesses joined by `=`, then the value: `α(3)=α(2)α(1)=12`.
pub fn cell_text(kind: GammaKind, cell: &GammaCell) -> String {
    let mut parts: Vec<String> = cell.witnesses.iter().map(|&w| witness_text(kind, w)).collect();
    parts.push(cell.value.clone());
    parts.join("=")
}

fn partition_text(parts: &[usize]) -> String {
    let inner: Vec<String> = parts.iter().map(usize::to_string).collect();
    format!("({})", inner.join(","))
}

fn check_range(id: TableId, range: Option<NRange>) -> CliResult<Option<NRange>> {
    let (_, max) = id.limits();
    match range {
        Some(r) if r.hi > max => usage(format!("table {id:?} accepts n up to {max}, got {}", r.hi)),
        r => Ok(r),
    }
}

fn json<T: Serialize>(rows: &T) -> String {
    serde_json::to_string_pretty(rows).expect("rows are plain data") + "\n"
}

/// Regenerates a table. Table 1 without a range prints its four residue
/// rows; with a range it prints β(n) and π(n) per n.
pub fn render_table(id: TableId, format: Format, range: Option<NRange>) -> CliResult<String> {
    let range = check_range(id, range)?;
    let ns = range.map(NRange::iter).unwrap_or_else(|| id.limits().0);
    let mut out = String::new();
    match id {
        TableId::One if range.is_none() => {
            let rows: Vec<Table1Row> = (0..4).map(table1_row).collect();
            if format == Format::Json {
                return Ok(json(&rows));
            }
            out.push_str("n mod 4\tpi(n)\tbeta(n)\n");
            for r in rows {
                let _ = writeln!(out, "{}\t{}\t{}", r.residue, r.pi, r.beta);
            }
        }
        TableId::One => {
            let rows: Vec<Table1Point> = ns.map(table1_point).collect();
            if format == Format::Json {
                return Ok(json(&rows));
            }
            out.push_str("n\tbeta(n)\tpi(n)\n");
            for r in rows {
                let pis: Vec<String> = r.maximizers.iter().map(|p| partition_text(p)).collect();
                let _ = writeln!(out, "{}\t{}\t{}", r.n, r.beta, pis.join(" "));
            }
        }
        TableId::Two => {
            let rows: Vec<Table2Row> = ns.map(table2_row).collect();
            if format == Format::Json {
                return Ok(json(&rows));
            }
            out.push_str("n\tbeta(n)\talpha(n)\talpha+(n)\talpha-(n)\n");
            for r in rows {
                let _ = writeln!(out, "{}\t{}\t{}\t{}\t{}", r.n, r.beta, r.alpha, r.alpha_plus, r.alpha_minus);
            }
        }
        TableId::Three => {
            let rows: Vec<Table3Row> = ns.map(table3_row).collect();
            if format == Format::Json {
                return Ok(json(&rows));
            }
            out.push_str("n\tmax alpha(a)alpha(b)beta(c)\tmax alpha(a)alpha+(b)beta(c)\n");
            for r in rows {
                let aa = cell_text(GammaKind::AA, &r.aa);
                let ap = cell_text(GammaKind::APlus, &r.a_plus);
                let _ = writeln!(out, "{}\t{aa}\t{ap}", r.n);
            }
        }
        TableId::Four => {
            let rows: Vec<Table4Row> = ns.map(table4_row).collect();
            if format == Format::Json {
                return Ok(json(&rows));
            }
            out.push_str("n\tmax alpha+(a)alpha+(b)beta(c)\tmax alpha-(a)alpha+(b)beta(c)\n");
            for r in rows {
                let pp = cell_text(GammaKind::PlusPlus, &r.plusplus);
                let pm = cell_text(GammaKind::PlusMinus, &r.plus_minus);
                let _ = writeln!(out, "{}\t{pp}\t{pm}", r.n);
            }
        }
    }
    Ok(out)
}

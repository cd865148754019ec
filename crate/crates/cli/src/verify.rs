//! The verification suites: regenerate every transcribed value and claim,
//! then diff against the reference data.

use std::fmt::Display;
use std::str::FromStr;

use lusztig_core::{
    alpha, alpha_minus, alpha_plus, attainment_threshold, beta, beta_maximizers, beta_prime, beta_ratio, bound_value,
    max_alpha_beta, max_gamma, max_gamma_eq, max_series_size, minus_cap, partition_count, series_bound, small_n_max,
    un5_constant, AlphaKind, BoundKind, Family, GammaKind, GroupSpec, Nat, QBound, QParity, ShapeClass, Sign,
    Un5Column,
};
use num_rational::BigRational;
use num_traits::Pow;

use crate::error::{usage, CliError, CliResult};
use crate::golden::{golden, GammaCell};
use crate::report::{Report, ReportEntry};
use crate::tables::{gamma_cell, table1_row, table2_row};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Tables,
    Lemmas,
    Bounds,
    Constants,
    All,
}

impl FromStr for Suite {
    type Err = CliError;

    fn from_str(s: &str) -> CliResult<Self> {
        match s.to_ascii_lowercase().as_str() {
            "tables" => Ok(Suite::Tables),
            "lemmas" => Ok(Suite::Lemmas),
            "bounds" => Ok(Suite::Bounds),
            "constants" => Ok(Suite::Constants),
            "all" => Ok(Suite::All),
            _ => usage(format!("unknown suite `{s}`; expected tables, lemmas, bounds, constants or all")),
        }
    }
}

/// Runs a suite. Independent suites run on their own threads; the report is
/// sorted by claim id either way.
pub fn verify(suite: Suite) -> Report {
    let parts: Vec<fn() -> Vec<ReportEntry>> = match suite {
        Suite::Tables => vec![verify_tables],
        Suite::Lemmas => vec![verify_lemmas],
        Suite::Bounds => vec![verify_bounds],
        Suite::Constants => vec![verify_constants],
        Suite::All => vec![verify_tables, verify_lemmas, verify_bounds, verify_constants],
    };
    let entries = std::thread::scope(|s| {
        let handles: Vec<_> = parts.into_iter().map(|f| s.spawn(f)).collect();
        handles.into_iter().flat_map(|h| h.join().expect("suite panicked")).collect()
    });
    Report::new(entries)
}

fn pow5(e: usize) -> Nat {
    Nat::from(5u32).pow(e as u32)
}

/// Checks `holds(n)` for every n; the actual text names the first failure.
fn range_claim(
    id: impl Into<String>,
    claim: impl Display,
    location: &str,
    ns: impl IntoIterator<Item = usize>,
    mut holds: impl FnMut(usize) -> bool,
) -> ReportEntry {
    let first_bad = ns.into_iter().find(|&n| !holds(n));
    let actual = match first_bad {
        None => "holds".to_string(),
        Some(n) => format!("fails at n={n}"),
    };
    ReportEntry::new(id, first_bad.is_none(), format!("holds: {claim}"), actual, location)
}

fn pairs_text(pairs: &[(usize, usize)]) -> String {
    let v: Vec<String> = pairs.iter().map(|(a, b)| format!("({a},{b})")).collect();
    v.join(";")
}

fn cell_summary(cell: &GammaCell) -> String {
    let pairs: Vec<(usize, usize)> = cell.witnesses.iter().map(|w| (w[0], w[1])).collect();
    format!("{} at {}", cell.value, pairs_text(&pairs))
}

/// A printed cell agrees if its value matches and every printed witness is
/// an argmax. Ties the print omits are listed in `actual` without failing.
fn gamma_entry(id: String, kind: GammaKind, n: usize, printed: &GammaCell, location: &str) -> ReportEntry {
    let fresh = gamma_cell(kind, n);
    let norm = |w: [usize; 3]| {
        if kind.is_symmetric() && w[0] < w[1] {
            [w[1], w[0], w[2]]
        } else {
            w
        }
    };
    let ok = printed.value == fresh.value && printed.witnesses.iter().all(|&w| fresh.witnesses.contains(&norm(w)));
    ReportEntry::new(id, ok, cell_summary(printed), cell_summary(&fresh), location)
}

fn verify_tables() -> Vec<ReportEntry> {
    let g = golden();
    let mut out = Vec::new();

    let t1 = &g.table1;
    for (r, row) in t1.rows.iter().enumerate() {
        let fresh = table1_row(r);
        let loc = format!("{}, n = {r} mod 4", t1.location);
        out.push(ReportEntry::compare(format!("table1.row{r}.pi"), &row.pi, &fresh.pi, &loc));
        out.push(ReportEntry::compare(format!("table1.row{r}.beta"), &row.beta, &fresh.beta, &loc));
    }
    for n in 8..=50 {
        let row = &t1.rows[n % 4];
        let e = (n - row.offset) / 4;
        let expected = row.coefficient.parse::<Nat>().expect("golden coefficient") * pow5(e);
        let mut pi = vec![4; e];
        pi.extend(&row.fixed_parts);
        pi.sort_unstable_by(|a, b| b.cmp(a));
        let best = beta_maximizers(n);
        let loc = &t1.location;
        out.push(ReportEntry::compare(format!("table1.n{n}.beta"), &expected, &best.value, loc));
        let found: Vec<String> = best.maximizers.iter().map(ToString::to_string).collect();
        let want = lusztig_core::Partition::new(pi).to_string();
        out.push(ReportEntry::compare(format!("table1.n{n}.pi"), want, found.join(" "), loc));
    }
    for (n, v) in t1.small_values.beta.iter().enumerate() {
        out.push(ReportEntry::compare(format!("table1.n{n}.beta"), v, beta(n), &t1.small_values.location));
    }
    let dm = &t1.double_maximizer;
    let want: Vec<String> = dm.partitions.iter().map(|p| lusztig_core::Partition::new(p.clone()).to_string()).collect();
    let got: Vec<String> = beta_maximizers(dm.n).maximizers.iter().map(ToString::to_string).collect();
    out.push(ReportEntry::compare(format!("table1.n{}.maximizers", dm.n), want.join(" "), got.join(" "), &dm.location));

    let t2 = &g.table2;
    for row in &t2.rows {
        let fresh = table2_row(row.n);
        let loc = format!("{}, row {}", t2.location, row.n);
        for (col, printed, computed) in [
            ("beta", &row.beta, &fresh.beta),
            ("alpha", &row.alpha, &fresh.alpha),
            ("alpha_plus", &row.alpha_plus, &fresh.alpha_plus),
            ("alpha_minus", &row.alpha_minus, &fresh.alpha_minus),
        ] {
            out.push(ReportEntry::compare(format!("table2.row{}.{col}", row.n), printed, computed, &loc));
        }
    }

    let t3 = &g.table3;
    for row in &t3.rows {
        let loc = format!("{}, row {}", t3.location, row.n);
        out.push(gamma_entry(format!("table3.row{}.aa", row.n), GammaKind::AA, row.n, &row.aa, &loc));
        out.push(gamma_entry(format!("table3.row{}.a_plus", row.n), GammaKind::APlus, row.n, &row.a_plus, &loc));
    }
    for rem in &t3.equal_sum_remark {
        let fresh = max_gamma_eq(GammaKind::AA, rem.n);
        let printed: Vec<(usize, usize)> = rem.witnesses.iter().map(|w| (w[0].max(w[1]), w[0].min(w[1]))).collect();
        let ok = fresh.value.to_string() == rem.value && printed.iter().all(|p| fresh.witnesses.contains(p));
        out.push(ReportEntry::new(
            format!("table3.remark.n{}", rem.n),
            ok,
            format!("{} at {}", rem.value, pairs_text(&printed)),
            format!("{} at {}", fresh.value, pairs_text(&fresh.witnesses)),
            &rem.location,
        ));
    }

    let t4 = &g.table4;
    for row in &t4.rows {
        let loc = format!("{}, row {}", t4.location, row.n);
        out.push(gamma_entry(format!("table4.row{}.plusplus", row.n), GammaKind::PlusPlus, row.n, &row.plusplus, &loc));
        out.push(gamma_entry(
            format!("table4.row{}.plus_minus", row.n),
            GammaKind::PlusMinus,
            row.n,
            &row.plus_minus,
            &loc,
        ));
    }
    out
}

fn verify_lemmas() -> Vec<ReportEntry> {
    let g = golden();
    let l = &g.lemmas;
    let mut out = Vec::new();

    // bo1: one entry per residue cell, checked over every admissible pair.
    let excluded = |x: usize| matches!(x, 1 | 2 | 3 | 7);
    for cell in &l.bo1_main.cells {
        let printed: BigRational = cell.ratio.parse().expect("golden ratio");
        let mut seen: Vec<BigRational> = Vec::new();
        for k in (cell.k..=60).step_by(4).filter(|&k| !excluded(k)) {
            for n in (cell.n..=60).step_by(4).filter(|&n| !excluded(n)) {
                let r = beta_ratio(k, n);
                if !seen.contains(&r) {
                    seen.push(r);
                }
            }
        }
        let ok = seen.len() == 1 && seen[0] == printed;
        let actual: Vec<String> = seen.iter().map(ToString::to_string).collect();
        out.push(ReportEntry::new(
            format!("lemma_bo1.ratio.k{}n{}", cell.k, cell.n),
            ok,
            &cell.ratio,
            actual.join(" | "),
            format!("{}, k = {} and n = {} mod 4", l.bo1_main.location, cell.k, cell.n),
        ));
    }
    for cell in &l.bo1_small.cells {
        let printed: BigRational = cell.ratio.parse().expect("golden ratio");
        let mut seen: Vec<BigRational> = Vec::new();
        for n in (8..=60).filter(|n| n % 4 == cell.n) {
            let r = beta_ratio(cell.k, n);
            if !seen.contains(&r) {
                seen.push(r);
            }
        }
        let ok = seen.len() == 1 && seen[0] == printed;
        let actual: Vec<String> = seen.iter().map(ToString::to_string).collect();
        out.push(ReportEntry::new(
            format!("lemma_bo1.small.k{}n{}", cell.k, cell.n),
            ok,
            &cell.ratio,
            actual.join(" | "),
            format!("{}, k = {}, n = {} mod 4", l.bo1_small.location, cell.k, cell.n),
        ));
    }

    let bo3 = l.anchor("bo3");
    out.push(range_claim(
        "lemma_bo3.half_vs_3",
        "beta(n/2) <= 3 beta(n-3) for even 2 < n <= 200",
        bo3,
        (4..=200).step_by(2),
        |n| beta(n / 2) <= beta(n - 3) * 3u32,
    ));
    out.push(range_claim(
        "lemma_bo3.half_vs_7",
        "beta(n/2) <= 7 beta(n-5) for even 4 < n <= 200",
        bo3,
        (6..=200).step_by(2),
        |n| beta(n / 2) <= beta(n - 5) * 7u32,
    ));
    out.push(range_claim("lemma_bo3.growth", "5^(n-3) < beta(n)^4 for 1 <= n <= 400", bo3, 1..=400, |n| {
        pow5(n) < Pow::pow(beta(n), 4u32) * 125u32
    }));

    for v in &l.nk8.values {
        let got = beta_prime(v.n).map(|x| x.to_string()).unwrap_or_else(|e| e.to_string());
        out.push(ReportEntry::compare(format!("lemma_nk8.n{}", v.n), &v.value, got, &l.nk8.location));
    }
    for f in &l.nk8.residue_forms {
        let c: Nat = f.coefficient.parse().expect("golden coefficient");
        out.push(range_claim(
            format!("lemma_nk8.residue{}", f.residue),
            format!(
                "beta'(n) = {}*5^((n-{})/4) for n = {} mod 4, {} <= n <= 200",
                f.coefficient, f.offset, f.residue, f.min_n
            ),
            &l.nk8.location,
            (f.min_n..=200).filter(|n| n % 4 == f.residue),
            |n| beta_prime(n).ok() == Some(&c * pow5((n - f.offset) / 4)),
        ));
    }

    let lu1 = l.anchor("lu1");
    out.push(range_claim("lemma_lu1.alpha_sum", "alpha(n) = sum_j p2(n-j^2-j) for n <= 300", lu1, 0..=300, |n| {
        let sum: Nat = (0..).map(|j| j * j + j).take_while(|&t| t <= n).map(|t| convolve_p(n - t)).sum();
        alpha(n) == sum
    }));
    out.push(range_claim(
        "lemma_lu1.plus_formula",
        "4 alpha+(n) = 2 p2(n) + 3(1+(-1)^n) p(n/2) + 4 sum_{j>1 even} p2(n-j^2) for 1 <= n <= 300",
        lu1,
        1..=300,
        |n| {
            let mut four = convolve_p(n) * 2u32;
            if n % 2 == 0 {
                four += partition_count(n / 2) * 6u32;
            }
            let mut j = 2;
            while j * j <= n {
                four += convolve_p(n - j * j) * 4u32;
                j += 2;
            }
            alpha_plus(n) * 4u32 == four
        },
    ));
    out.push(range_claim(
        "lemma_lu1.difference",
        "alpha+(n) - alpha-(n) = 2p(n/2) for even n, 0 for odd n, n <= 300",
        lu1,
        1..=300,
        |n| {
            let gap = if n % 2 == 0 { partition_count(n / 2) * 2u32 } else { Nat::ZERO };
            alpha_plus(n) == alpha_minus(n) + gap
        },
    ));
    out.push(range_claim("lemma_lu1.chain", "alpha-(n) <= alpha+(n) <= alpha(n) for n <= 300", lu1, 1..=300, |n| {
        alpha_minus(n) <= alpha_plus(n) && alpha_plus(n) <= alpha(n)
    }));

    out.push(range_claim("prop_albe.above", "alpha(n) > beta(n) for 1 <= n <= 43", l.anchor("albe"), 1..=43, |n| {
        alpha(n) > beta(n)
    }));
    out.push(range_claim(
        "prop_albe.below",
        "alpha(n) < beta(n) for 44 <= n <= 300",
        l.anchor("albe"),
        44..=300,
        |n| alpha(n) < beta(n),
    ));
    out.push(range_claim("prop_albe1.above", "beta(n) < alpha-(n) for 3 <= n <= 38", l.anchor("albe1"), 3..=38, |n| {
        beta(n) < alpha_minus(n)
    }));
    out.push(range_claim(
        "prop_albe1.below",
        "alpha+(n) < beta(n) for 39 <= n <= 300",
        l.anchor("albe1"),
        39..=300,
        |n| alpha_plus(n) < beta(n),
    ));

    for k in AlphaKind::ALL {
        let f = |a: usize| k.value(a);
        out.push(range_claim(
            format!("lemma_dtt.{k}.grows"),
            format!("{s}(a+4) > 5 {s}(a) for 0 < a <= 13", s = k.symbol()),
            l.anchor("dtt_grows"),
            1..=13,
            |a| f(a + 4) > f(a) * 5u32,
        ));
        out.push(range_claim(
            format!("lemma_dtt.{k}.shrinks"),
            format!("{s}(a+4) < 5 {s}(a) for 13 < a <= 43", s = k.symbol()),
            l.anchor("dtt_shrinks"),
            14..=43,
            |a| f(a + 4) < f(a) * 5u32,
        ));
    }

    for kind in GammaKind::ALL {
        out.push(range_claim(
            format!("lemma_ma1.{}.upper", kind.name()),
            "argmax pairs have a, b <= 17 for n <= 60",
            l.anchor("ma1"),
            1..=60,
            |n| max_gamma(kind, n).witnesses.iter().all(|&(a, b)| a <= 17 && b <= 17),
        ));
        out.push(range_claim(
            format!("lemma_ma1.{}.lower", kind.name()),
            "argmax pairs have a, b > 13 for 45 < n <= 60",
            l.anchor("ma1"),
            46..=60,
            |n| max_gamma(kind, n).witnesses.iter().all(|&(a, b)| a > 13 && b > 13),
        ));
    }

    // ei2a(3) at n = 2 is a known discrepancy: reported, not failed.
    for v in &l.ei2a.values {
        let got = minus_cap(v.n, Sign::Minus).map(|x| x.to_string()).unwrap_or_else(|e| e.to_string());
        let e = ReportEntry::compare(format!("lemma_ei2a.n{}", v.n), &v.value, got, &l.ei2a.location);
        out.push(if v.n == 2 { e.flag_if_failed() } else { e });
    }

    for v in &l.pp2_remark.values {
        let id = format!("lemma_pp2.n{}", v.n);
        let expected = format!("{} at a={}(-),b={}(+)", v.value, v.a, v.b);
        let entry = match GroupSpec::new(Family::DMinus, v.n, QParity::Odd).and_then(|s| max_series_size(&s)) {
            Ok(best) => {
                let hit = best.witnesses.iter().any(|s| {
                    s.one_part.dim == v.a
                        && s.minus_part.dim == v.b
                        && s.one_part.sign == Some(Sign::Minus)
                        && (v.b == 0 || s.minus_part.sign == Some(Sign::Plus))
                        && s.generic().is_empty()
                });
                let shapes: Vec<String> = best.witnesses.iter().map(ToString::to_string).collect();
                let actual = format!("{} at {}", best.value, shapes.join("; "));
                ReportEntry::new(id, hit && best.value.to_string() == v.value, expected, actual, &l.pp2_remark.location)
            }
            Err(e) => ReportEntry::new(id, false, expected, e, &l.pp2_remark.location),
        };
        out.push(entry);
    }
    out
}

/// p₂(n) straight from the definition, independent of the memoized table.
fn convolve_p(n: usize) -> Nat {
    (0..=n).map(|m| partition_count(m) * partition_count(n - m)).sum()
}

fn verify_bounds() -> Vec<ReportEntry> {
    let g = golden();
    let t = &g.theorem15;
    let mut out = Vec::new();

    for block in &t.kinds {
        let kind: BoundKind = match block.kind.parse() {
            Ok(k) => k,
            Err(e) => {
                out.push(ReportEntry::new(format!("theorem_t21.{}", block.kind), false, &block.kind, e, &t.location));
                continue;
            }
        };
        let name = kind.name();
        out.push(ReportEntry::compare(
            format!("theorem_t21.{name}.threshold"),
            block.threshold,
            kind.threshold(),
            &t.location,
        ));
        for (r, (row, term)) in block.rows.iter().zip(kind.terms()).enumerate() {
            let witness: Vec<usize> = std::iter::once(term.a).chain(term.b).collect();
            let show = |c: &dyn Display, o: usize, w: &[usize]| format!("{c}*5^((n-{o})/4) at {w:?}");
            out.push(ReportEntry::compare(
                format!("theorem_t21.{name}.r{r}"),
                show(&row.coefficient, row.offset, &row.witness),
                show(&term.coefficient, term.offset, &witness),
                format!("{}, {name}, n = {r} mod 4", t.location),
            ));
        }
        out.push(range_claim(
            format!("theorem_t21.{name}.brute_force"),
            format!("closed form = exact maximum for {} <= n <= 60", kind.threshold()),
            &t.location,
            kind.threshold()..=60,
            |n| bound_value(kind, n).ok() == Some(small_n_max(kind, n).value),
        ));
    }

    let attain = |parity: QParity, from: usize, text: &str, id: &str| {
        let slack: i64 = text.rsplit('-').next().and_then(|s| s.trim().parse().ok()).unwrap_or(i64::MIN);
        range_claim(format!("theorem_t21.attainment.{id}"), text, &t.location, from..=60, |n| {
            GroupSpec::new(Family::C, n, parity)
                .and_then(|s| attainment_threshold(&s, ShapeClass::FullTheorem))
                .map(|th| th.bound == QBound::GreaterThan(n as i64 - slack))
                .unwrap_or(false)
        })
    };
    out.push(attain(QParity::Even, 18, &t.attainment.q_even, "q_even"));
    out.push(attain(QParity::Odd, 32, &t.attainment.q_odd, "q_odd"));

    let qe = &g.lemmas.q_even;
    for kind in AlphaKind::ALL {
        let table = if kind == AlphaKind::Symplectic { qe.symplectic } else { qe.plus_minus };
        out.push(range_claim(
            format!("prop_q_even.{kind}.large"),
            format!("argmax a = {table:?} by n mod 4 for {} <= n <= 60", qe.threshold),
            &qe.location,
            qe.threshold..=60,
            |n| max_alpha_beta(kind, n).witnesses == [table[n % 4]],
        ));
        out.push(range_claim(
            format!("prop_q_even.{kind}.small"),
            format!("a = n attains the maximum for n < {}", qe.threshold),
            &qe.location,
            1..qe.threshold,
            |n| max_alpha_beta(kind, n).witnesses.contains(&n),
        ));
    }

    let al = &g.lemmas.alaalb1;
    let swap = |rows: [[usize; 2]; 4]| rows.map(|[a, b]| [b, a]);
    for (kind, rows, from) in [
        (GammaKind::AA, al.aa, al.aa_from),
        (GammaKind::APlus, al.a_plus, al.others_from),
        (GammaKind::PlusPlus, al.plusplus, al.others_from),
        (GammaKind::PlusMinus, swap(al.plus_then_minus), al.others_from),
    ] {
        out.push(range_claim(
            format!("prop_alaalb1.{}", kind.name()),
            format!("argmax (a,b) = {rows:?} by n mod 4 for {from} <= n <= 60"),
            &al.location,
            from..=60,
            |n| {
                let [a, b] = rows[n % 4];
                max_gamma(kind, n).witnesses == [(a, b)]
            },
        ));
    }

    let pp2 = &g.lemmas.pp2_remark;
    for (family, parity) in model_specs() {
        out.push(range_claim(
            format!("prop_p11.model.{family}.{parity}"),
            "exact model maximum = piecewise bound for 1 <= n <= 45",
            g.lemmas.anchor("model"),
            1..=45,
            |n| {
                let Ok(spec) = GroupSpec::new(family, n, parity) else { return false };
                let Ok(best) = max_series_size(&spec) else { return false };
                let remark = pp2.values.iter().find(|v| v.n == n);
                match (family, parity, remark) {
                    (Family::DMinus, QParity::Odd, Some(v)) => best.value.to_string() == v.value,
                    _ => best.value == series_bound(&spec),
                }
            },
        ));
    }
    out
}

/// The nine distinct (family, q parity) pairs; B with q even is C.
pub fn model_specs() -> Vec<(Family, QParity)> {
    let mut v = vec![(Family::Linear, QParity::Odd), (Family::Unitary, QParity::Odd)];
    for p in [QParity::Even, QParity::Odd] {
        for f in [Family::C, Family::DPlus, Family::DMinus] {
            v.push((f, p));
        }
    }
    v.push((Family::B, QParity::Odd));
    v
}

fn verify_constants() -> Vec<ReportEntry> {
    let g = golden();
    let c = &g.constants;
    let mut out = Vec::new();
    for col in &c.columns {
        let id = format!("theorem_un5.{}", col.column);
        let loc = format!("{}, column {}", c.location, col.column);
        let (Ok(column), Ok(bound)) = (col.column.parse::<Un5Column>(), col.bound.parse::<BigRational>()) else {
            out.push(ReportEntry::new(id, false, format!("c < {}", col.bound), "unparsable reference", loc));
            continue;
        };
        let k = un5_constant(column);
        let e = ReportEntry::new(
            id,
            k.is_below(&bound),
            format!("c < {}", col.bound),
            format!(
                "c = {}... (c^4 = {}, at {} n = {} mod 4)",
                k.c_decimal, k.c_fourth, k.attained_at.0, k.attained_at.1
            ),
            loc,
        );
        // D_even is the documented discrepancy: the true sup exceeds 6.
        out.push(if column == Un5Column::DEven { e.flag_if_failed() } else { e });
    }
    let a = un5_constant(Un5Column::A);
    out.push(ReportEntry::compare(
        "theorem_un5.A.sup",
        "1 at n = 0 mod 4",
        format!("{} at n = {} mod 4", a.c_fourth, a.attained_at.1),
        format!("{}, column A", c.location),
    ));
    out
}

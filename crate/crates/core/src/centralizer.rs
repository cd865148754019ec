//! Centralizer shapes of semisimple elements and their unipotent counts.
//!
//! A shape records the eigenvalue-1 part, the eigenvalue-(−1) part and the
//! homogeneous factors `GL_d(q^l)` / `U_d(q^l)` that make up the centralizer.
//! Its ν-value is the product of the unipotent counts of the factors.

use std::cmp::Reverse;
use std::fmt;
use std::str::FromStr;

use crate::argmax::{Argmax, MaxResult};
use crate::beta::{best_product, beta, beta_maximizers, beta_prime};
use crate::error::{CoreError, Result};
use crate::group::{Family, GroupSpec, QParity, Sign};
use crate::partition::{partition_count, partitions_of, Nat, Partition};
use crate::unipotent::{alpha, alpha_minus, alpha_plus};

/// Largest rank `enumerate_shapes` will walk.
pub const SHAPE_GUARD: usize = 60;
/// Largest rank `max_series_size` accepts.
pub const SERIES_GUARD: usize = 400;
/// Largest budget for `minus_cap_oracle`.
pub const MINUS_CAP_GUARD: usize = 50;

/// The ±1 eigenspace part: its dimension index and, for orthogonal
/// factors, its Witt sign.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EigenPart {
    pub dim: usize,
    pub sign: Option<Sign>,
}

impl EigenPart {
    pub fn new(dim: usize, sign: Option<Sign>) -> Self {
        EigenPart { dim, sign }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FactorKind {
    Linear,
    Unitary,
}

impl FactorKind {
    fn tag(self) -> &'static str {
        match self {
            FactorKind::Linear => "GL",
            FactorKind::Unitary => "U",
        }
    }
}

/// `GL_degree(q^field_power)` or `U_degree(q^field_power)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GenericFactor {
    pub kind: FactorKind,
    pub degree: usize,
    pub field_power: usize,
}

impl GenericFactor {
    pub fn linear(degree: usize) -> Self {
        GenericFactor { kind: FactorKind::Linear, degree, field_power: 1 }
    }

    pub fn unitary(degree: usize) -> Self {
        GenericFactor { kind: FactorKind::Unitary, degree, field_power: 1 }
    }

    fn sort_key(&self) -> (FactorKind, Reverse<usize>, Reverse<usize>) {
        (self.kind, Reverse(self.degree), Reverse(self.field_power))
    }
}

// Canonical order: linear before unitary, then degree and field power descending.
impl Ord for GenericFactor {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.sort_key().cmp(&other.sort_key())
    }
}

impl PartialOrd for GenericFactor {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CentralizerShape {
    pub one_part: EigenPart,
    pub minus_part: EigenPart,
    generic: Vec<GenericFactor>,
}

impl CentralizerShape {
    pub fn new(one_part: EigenPart, minus_part: EigenPart, mut generic: Vec<GenericFactor>) -> Self {
        generic.sort();
        CentralizerShape { one_part, minus_part, generic }
    }

    /// A shape with no ±1 eigenvalues.
    pub fn generic_only(generic: Vec<GenericFactor>) -> Self {
        Self::new(EigenPart::default(), EigenPart::default(), generic)
    }

    pub fn generic(&self) -> &[GenericFactor] {
        &self.generic
    }

    pub fn generic_budget(&self) -> usize {
        self.generic.iter().map(|g| g.degree * g.field_power).sum()
    }

    pub fn budget(&self) -> usize {
        self.one_part.dim + self.minus_part.dim + self.generic_budget()
    }

    /// `−` iff the unitary factors of odd degree occur an odd number of times.
    pub fn generic_sign(&self) -> Sign {
        let odd = self.generic.iter().filter(|g| g.kind == FactorKind::Unitary && g.degree % 2 == 1).count();
        if odd % 2 == 1 {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }

    /// Degrees of the generic factors as a partition.
    pub fn generic_degrees(&self) -> Partition {
        Partition::new(self.generic.iter().map(|g| g.degree).collect())
    }

    /// Checks every structural constraint for `spec`.
    pub fn validate(&self, spec: &GroupSpec) -> Result<()> {
        let bad = |msg: String| Err(CoreError::InvalidShape(msg));
        let family = spec.family();
        if let Some(g) = self.generic.iter().find(|g| g.degree == 0 || g.field_power == 0) {
            return bad(format!(
                "factor {}:{}@{} has a zero degree or field power",
                g.kind.tag(),
                g.degree,
                g.field_power
            ));
        }
        if self.budget() != spec.rank() {
            return bad(format!("budget {} does not equal rank {}", self.budget(), spec.rank()));
        }
        if family.is_type_a() {
            if self.one_part.dim != 0 || self.minus_part.dim != 0 {
                return bad(format!("{family} has no eigenvalue ±1 parts"));
            }
            if self.one_part.sign.is_some() || self.minus_part.sign.is_some() {
                return bad(format!("{family} parts carry no sign"));
            }
            for g in &self.generic {
                match (family, g.kind) {
                    (Family::Linear, FactorKind::Unitary) => return bad("GL has no unitary factors".into()),
                    (Family::Unitary, FactorKind::Linear) if g.field_power % 2 == 1 => {
                        return bad("linear factors of U need an even field power".into())
                    }
                    (Family::Unitary, FactorKind::Unitary) if g.field_power % 2 == 0 => {
                        return bad("unitary factors of U need an odd field power".into())
                    }
                    _ => {}
                }
            }
            return Ok(());
        }
        if spec.q_parity() == QParity::Even && self.minus_part.dim != 0 {
            return bad("q even leaves no room for a -1 eigenspace".into());
        }
        let (one_signed, minus_signed) = match family {
            Family::C => (false, false),
            Family::B => (false, true),
            _ => (true, true),
        };
        for (part, signed, name) in
            [(self.one_part, one_signed, "1-part"), (self.minus_part, minus_signed, "(-1)-part")]
        {
            match (signed, part.sign) {
                (false, Some(_)) => return bad(format!("{name} of {family} carries no sign")),
                (true, None) => return bad(format!("{name} of {family} needs a sign")),
                (true, Some(Sign::Minus)) if part.dim == 0 => {
                    return bad(format!("zero-dimensional {name} must have sign +"))
                }
                _ => {}
            }
        }
        if let (Some(fs), Some(sa), Some(sb)) = (family.form_sign(), self.one_part.sign, self.minus_part.sign) {
            let total = sa.times(sb).times(self.generic_sign());
            if total != fs {
                return bad(format!(
                    "sign product {sa}·{sb}·{} = {total} differs from the form sign {fs}",
                    self.generic_sign()
                ));
            }
        }
        Ok(())
    }
}

impl fmt::Display for CentralizerShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let part = |f: &mut fmt::Formatter<'_>, label: &str, p: EigenPart| {
            write!(f, "[{label}:{}", p.dim)?;
            if let Some(s) = p.sign {
                write!(f, "({s})")?;
            }
            write!(f, "]")
        };
        part(f, "1", self.one_part)?;
        write!(f, " ")?;
        part(f, "-1", self.minus_part)?;
        write!(f, " {{")?;
        let mut i = 0;
        while i < self.generic.len() {
            let g = self.generic[i];
            let run = self.generic[i..].iter().take_while(|&&h| h == g).count();
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}:{}", g.kind.tag(), g.degree)?;
            if g.field_power > 1 {
                write!(f, "@{}", g.field_power)?;
            }
            write!(f, "^{run}")?;
            i += run;
        }
        write!(f, "}}")
    }
}

impl FromStr for CentralizerShape {
    type Err = CoreError;

    fn from_str(s: &str) -> Result<Self> {
        let fail = |reason: &str| CoreError::ShapeSyntax { input: s.to_string(), reason: reason.to_string() };
        let num = |t: &str| t.trim().parse::<usize>().map_err(|_| fail(&format!("`{t}` is not a number")));

        let parse_part = |tok: &str, label: &str| -> Result<EigenPart> {
            let body = tok
                .strip_prefix(&format!("[{label}:"))
                .and_then(|t| t.strip_suffix(']'))
                .ok_or_else(|| fail(&format!("expected `[{label}:..]`")))?;
            match body.find('(') {
                None => Ok(EigenPart::new(num(body)?, None)),
                Some(i) => {
                    let sign = match &body[i..] {
                        "(+)" => Sign::Plus,
                        "(-)" => Sign::Minus,
                        _ => return Err(fail("sign must be (+) or (-)")),
                    };
                    Ok(EigenPart::new(num(&body[..i])?, Some(sign)))
                }
            }
        };

        let mut toks = s.split_whitespace();
        let one = parse_part(toks.next().ok_or_else(|| fail("empty input"))?, "1")?;
        let minus = parse_part(toks.next().ok_or_else(|| fail("missing (-1)-part"))?, "-1")?;
        let rest: String = toks.collect();
        let body = rest
            .strip_prefix('{')
            .and_then(|t| t.strip_suffix('}'))
            .ok_or_else(|| fail("expected `{..}` factor list"))?;
        let mut generic = Vec::new();
        for entry in body.split(',').filter(|e| !e.is_empty()) {
            let (kind, spec) = entry.split_once(':').ok_or_else(|| fail("factor needs `kind:degree`"))?;
            let kind = match kind {
                "GL" => FactorKind::Linear,
                "U" => FactorKind::Unitary,
                _ => return Err(fail(&format!("unknown factor kind `{kind}`"))),
            };
            let (head, mult) = match spec.split_once('^') {
                Some((h, m)) => (h, num(m)?),
                None => (spec, 1),
            };
            let (degree, field_power) = match head.split_once('@') {
                Some((d, l)) => (num(d)?, num(l)?),
                None => (num(head)?, 1),
            };
            if degree == 0 || field_power == 0 || mult == 0 {
                return Err(fail("degree, field power and multiplicity must be positive"));
            }
            generic.extend(std::iter::repeat_n(GenericFactor { kind, degree, field_power }, mult));
        }
        Ok(CentralizerShape::new(one, minus, generic))
    }
}

/// Count of the factor attached to a ±1 eigenspace.
fn eigen_count(family: Family, is_one_part: bool, part: EigenPart) -> Nat {
    match (family, is_one_part, part.sign) {
        (Family::C, _, _) | (Family::B, true, _) => alpha(part.dim),
        (_, _, Some(Sign::Minus)) => alpha_minus(part.dim),
        _ => alpha_plus(part.dim),
    }
}

/// ν of the centralizer: the product of the unipotent counts of its factors.
pub fn nu_of_shape(spec: &GroupSpec, shape: &CentralizerShape) -> Result<Nat> {
    shape.validate(spec)?;
    let generic: Nat = shape.generic.iter().map(|g| partition_count(g.degree)).product();
    if spec.family().is_type_a() {
        return Ok(generic);
    }
    Ok(eigen_count(spec.family(), true, shape.one_part) * eigen_count(spec.family(), false, shape.minus_part) * generic)
}

/// Signs a part of dimension `dim` may carry in `family` (first slot: 1-part).
fn part_signs(family: Family, is_one_part: bool, dim: usize) -> Vec<Option<Sign>> {
    let signed = match family {
        Family::C => false,
        Family::B => !is_one_part,
        _ => true,
    };
    match (signed, dim) {
        (false, _) => vec![None],
        (true, 0) => vec![Some(Sign::Plus)],
        (true, _) => vec![Some(Sign::Plus), Some(Sign::Minus)],
    }
}

/// Generic signs worth distinguishing: only D-families care about them.
fn generic_signs(spec: &GroupSpec, sa: Option<Sign>, sb: Option<Sign>, c: usize) -> Vec<Sign> {
    match (spec.family().form_sign(), sa, sb) {
        (Some(fs), Some(sa), Some(sb)) => {
            let w = fs.times(sa).times(sb);
            if w == Sign::Minus && c == 0 {
                vec![]
            } else {
                vec![w]
            }
        }
        _ => vec![Sign::Plus],
    }
}

/// Reduced labeling of a generic partition realizing sign `w`: everything
/// linear for `+`; for `−` the largest odd part becomes unitary.
fn label(mu: &Partition, w: Sign, family: Family) -> Option<Vec<GenericFactor>> {
    if family == Family::Unitary {
        return Some(mu.parts().iter().map(|&d| GenericFactor::unitary(d)).collect());
    }
    let mut out: Vec<GenericFactor> = mu.parts().iter().map(|&d| GenericFactor::linear(d)).collect();
    if w == Sign::Minus {
        let i = mu.parts().iter().position(|d| d % 2 == 1)?;
        out[i].kind = FactorKind::Unitary;
    }
    Some(out)
}

/// (a, sign a, b, sign b, generic sign) choices for a classical spec.
fn eigen_splits(spec: GroupSpec) -> impl Iterator<Item = (EigenPart, EigenPart, Sign)> {
    let n = spec.rank();
    let fam = spec.family();
    let max_b = if spec.q_parity() == QParity::Even { 0 } else { n };
    (0..=n).flat_map(move |a| {
        (0..=max_b.min(n - a)).flat_map(move |b| {
            let c = n - a - b;
            part_signs(fam, true, a).into_iter().flat_map(move |sa| {
                part_signs(fam, false, b).into_iter().flat_map(move |sb| {
                    generic_signs(&spec, sa, sb, c)
                        .into_iter()
                        .map(move |w| (EigenPart::new(a, sa), EigenPart::new(b, sb), w))
                })
            })
        })
    })
}

/// Every reduced shape for `spec`: field powers 1, one labeling per
/// (partition, generic sign).
pub fn enumerate_shapes(spec: &GroupSpec) -> Result<Box<dyn Iterator<Item = CentralizerShape>>> {
    let spec = *spec;
    let n = spec.rank();
    if n > SHAPE_GUARD {
        return Err(CoreError::TooLarge { n, guard: SHAPE_GUARD });
    }
    if spec.family().is_type_a() {
        let fam = spec.family();
        return Ok(Box::new(partitions_of(n).map(move |mu| {
            CentralizerShape::generic_only(label(&mu, Sign::Plus, fam).expect("plus labeling always exists"))
        })));
    }
    let fam = spec.family();
    Ok(Box::new(eigen_splits(spec).flat_map(move |(one, minus, w)| {
        let c = n - one.dim - minus.dim;
        partitions_of(c).filter_map(move |mu| label(&mu, w, fam).map(|g| CentralizerShape::new(one, minus, g)))
    })))
}

/// Largest ν over generic parts of size `c` realizing sign `sign`.
pub fn minus_cap(c: usize, sign: Sign) -> Result<Nat> {
    match sign {
        Sign::Plus => Ok(beta(c)),
        Sign::Minus if c == 0 => Err(CoreError::Domain("a zero-dimensional space cannot have sign -".into())),
        Sign::Minus if c % 2 == 1 => Ok(beta(c)),
        Sign::Minus => beta_prime(c),
    }
}

/// Every partition of `c` attaining `minus_cap(c, sign)`, largest first.
pub fn minus_cap_maximizers(c: usize, sign: Sign) -> Result<Vec<Partition>> {
    let cap = minus_cap(c, sign)?;
    if sign == Sign::Plus {
        return Ok(beta_maximizers(c).maximizers);
    }
    // A partition with odd part j is bounded by p(j)β(c−j); equality needs
    // the rest to be a β-maximizer of c−j.
    let mut out: Vec<Partition> = (1..=c)
        .step_by(2)
        .filter(|&j| partition_count(j) * beta(c - j) == cap)
        .flat_map(|j| beta_maximizers(c - j).maximizers.into_iter().map(move |rho| rho.with_part(j)))
        .collect();
    out.sort_unstable_by(|x, y| y.cmp(x));
    out.dedup();
    Ok(out)
}

/// Exhaustive version of [`minus_cap`] over labeled partitions of `c`.
pub fn minus_cap_oracle(c: usize, sign: Sign) -> Result<Nat> {
    if c > MINUS_CAP_GUARD {
        return Err(CoreError::TooLarge { n: c, guard: MINUS_CAP_GUARD });
    }
    match sign {
        Sign::Plus => Ok(best_product(c, |_| true)?.value),
        Sign::Minus if c == 0 => Err(CoreError::Domain("a zero-dimensional space cannot have sign -".into())),
        // A labeling with an odd number of odd unitary parts exists iff
        // some part is odd.
        Sign::Minus => Ok(best_product(c, Partition::has_odd_part)?.value),
    }
}

fn witness_order(s: &CentralizerShape) -> (bool, Reverse<usize>, Reverse<usize>, CentralizerShape) {
    (s.one_part.dim < s.minus_part.dim, Reverse(s.one_part.dim), Reverse(s.minus_part.dim), s.clone())
}

/// Exact maximum of ν over all centralizer shapes for `spec`, with every
/// reduced witness shape; pairs with a ≥ b come first.
pub fn max_series_size(spec: &GroupSpec) -> Result<MaxResult<CentralizerShape>> {
    let n = spec.rank();
    if n > SERIES_GUARD {
        return Err(CoreError::TooLarge { n, guard: SERIES_GUARD });
    }
    let fam = spec.family();
    if fam.is_type_a() {
        let b = beta_maximizers(n);
        let witnesses = b
            .maximizers
            .iter()
            .map(|mu| CentralizerShape::generic_only(label(mu, Sign::Plus, fam).expect("plus labeling")))
            .collect();
        return Ok(MaxResult { value: b.value, witnesses });
    }

    let counts = |is_one: bool| -> [Vec<Nat>; 2] {
        let signed = |s| (0..=n).map(|x| eigen_count(fam, is_one, EigenPart::new(x, Some(s)))).collect();
        [signed(Sign::Plus), signed(Sign::Minus)]
    };
    let (one_counts, minus_counts) = (counts(true), counts(false));
    let caps = |s: Sign| -> Vec<Option<Nat>> { (0..=n).map(|c| minus_cap(c, s).ok()).collect() };
    let cap_tables = [caps(Sign::Plus), caps(Sign::Minus)];
    let idx = |s: Option<Sign>| usize::from(s == Some(Sign::Minus));

    let mut best = Argmax::new();
    for (one, minus, w) in eigen_splits(*spec) {
        let c = n - one.dim - minus.dim;
        let Some(cap) = &cap_tables[idx(Some(w))][c] else { continue };
        let v = &one_counts[idx(one.sign)][one.dim] * &minus_counts[idx(minus.sign)][minus.dim] * cap;
        best.offer(v, (one, minus, w));
    }
    let best = best.finish().expect("a+b = n always gives a shape");

    let mut witnesses = Vec::new();
    for (one, minus, w) in best.witnesses {
        let c = n - one.dim - minus.dim;
        for mu in minus_cap_maximizers(c, w)? {
            if let Some(g) = label(&mu, w, fam) {
                witnesses.push(CentralizerShape::new(one, minus, g));
            }
        }
    }
    witnesses.sort_by_cached_key(witness_order);
    witnesses.dedup();
    Ok(MaxResult { value: best.value, witnesses })
}

/// Granularity of an attainment statement.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ShapeClass {
    /// The explicit eigenspace construction for the optimal witness.
    LinearFamily,
    /// Elements with no eigenvalue ±1 (GL/U: generic scalars only).
    GenericOnly,
    /// The headline bound for the whole family.
    FullTheorem,
}

impl ShapeClass {
    pub const ALL: [ShapeClass; 3] = [ShapeClass::LinearFamily, ShapeClass::GenericOnly, ShapeClass::FullTheorem];
}

impl fmt::Display for ShapeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ShapeClass::LinearFamily => "linear_family",
            ShapeClass::GenericOnly => "generic_only",
            ShapeClass::FullTheorem => "full_theorem",
        })
    }
}

/// A sufficient lower bound on q.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QBound {
    Any,
    AtLeast(usize),
    GreaterThan(i64),
}

impl QBound {
    pub fn admits(self, q: usize) -> bool {
        match self {
            QBound::Any => true,
            QBound::AtLeast(m) => q >= m,
            QBound::GreaterThan(m) => q as i64 > m,
        }
    }
}

impl fmt::Display for QBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QBound::Any => write!(f, "any q"),
            QBound::AtLeast(m) => write!(f, "q >= {m}"),
            QBound::GreaterThan(m) => write!(f, "q > {m}"),
        }
    }
}

/// The requirement that b(q−1)/2 be even for the witness's (−1)-part b.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ParityCondition {
    pub b: usize,
}

impl ParityCondition {
    /// `Some(true)` if satisfied, `None` if it depends on an unknown q mod 4.
    pub fn holds(self, q_mod4: Option<u8>) -> Option<bool> {
        if self.b.is_multiple_of(2) {
            Some(true)
        } else {
            q_mod4.map(|r| r == 1)
        }
    }
}

impl fmt::Display for ParityCondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_multiple_of(2) {
            write!(f, "b(q-1)/2 even with b = {}: holds for every odd q", self.b)
        } else {
            write!(f, "b(q-1)/2 even with b = {}: needs q = 1 mod 4", self.b)
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Threshold {
    pub class: ShapeClass,
    pub bound: QBound,
    pub side_condition: Option<ParityCondition>,
}

/// The optimal witness whose construction asks least of q: smallest generic
/// budget, then an even (−1)-part.
fn easiest_witness(spec: &GroupSpec) -> Result<CentralizerShape> {
    let best = max_series_size(spec)?;
    Ok(best
        .witnesses
        .into_iter()
        .min_by_key(|s| (s.generic_budget(), s.minus_part.dim % 2, Reverse(s.one_part.dim)))
        .expect("maxima always have a witness"))
}

/// Sufficient conditions on q under which the maximum for `spec` is attained
/// by an element of the given class. These are not claimed to be minimal.
pub fn attainment_threshold(spec: &GroupSpec, class: ShapeClass) -> Result<Threshold> {
    let n = spec.rank();
    let fam = spec.family();
    let plain = |bound| Threshold { class, bound, side_condition: None };
    if class == ShapeClass::GenericOnly {
        return Ok(plain(QBound::AtLeast(n + 5)));
    }
    if fam.is_type_a() {
        // π(n) as scalar blocks of size 4 (last ones 5, 6 or 5+6) needs
        // ⌊n/4⌋ distinct eigenvalues; tiny n and n = 7 use one scalar.
        let k = (n / 4).max(1);
        let bound = match fam {
            Family::Linear => (k + 1).max(2),
            _ => k.saturating_sub(1).max(2),
        };
        return Ok(plain(QBound::AtLeast(bound)));
    }
    let w = easiest_witness(spec)?;
    let side_condition =
        (fam.is_orthogonal() && spec.q_parity() == QParity::Odd).then_some(ParityCondition { b: w.minus_part.dim });
    let bound = match (class, spec.q_parity()) {
        (ShapeClass::LinearFamily, _) => QBound::AtLeast(w.generic_budget() + 5),
        (_, QParity::Even) if n >= 18 => QBound::GreaterThan(n as i64 - 9),
        (_, QParity::Odd) if n >= 32 => QBound::GreaterThan(n as i64 - 27),
        _ => QBound::Any,
    };
    Ok(Threshold { class, bound, side_condition })
}

/// Which simple groups the center-index remark distinguishes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CenterFamily {
    TypeA,
    Other,
}

/// Bound on the number of series merged by a disconnected center:
/// r+1 for A_r, 4 otherwise.
pub fn center_index_multiplier(family: CenterFamily, r: usize) -> Result<usize> {
    if r == 0 {
        return Err(CoreError::Domain("rank r must be positive".into()));
    }
    Ok(match family {
        CenterFamily::TypeA => r + 1,
        CenterFamily::Other => 4,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nat(v: u64) -> Nat {
        Nat::from(v)
    }

    fn spec(f: Family, n: usize, q: QParity) -> GroupSpec {
        GroupSpec::new(f, n, q).unwrap()
    }

    fn shape(s: &str) -> CentralizerShape {
        s.parse().unwrap()
    }

    #[test]
    fn nu_examples() {
        let c4 = spec(Family::C, 4, QParity::Odd);
        assert_eq!(nu_of_shape(&c4, &shape("[1:2] [-1:2] {}")).unwrap(), nat(36));
        let d6 = spec(Family::DMinus, 6, QParity::Odd);
        assert_eq!(nu_of_shape(&d6, &shape("[1:4(-)] [-1:2(+)] {}")).unwrap(), nat(40));
        let gl7 = spec(Family::Linear, 7, QParity::Odd);
        assert_eq!(nu_of_shape(&gl7, &shape("[1:0] [-1:0] {GL:4^1,GL:3^1}")).unwrap(), nat(15));
    }

    #[test]
    fn validation_rejects() {
        let d6 = spec(Family::DMinus, 6, QParity::Odd);
        // signs multiply to +
        assert!(nu_of_shape(&d6, &shape("[1:4(+)] [-1:2(+)] {}")).is_err());
        // budget
        assert!(nu_of_shape(&d6, &shape("[1:4(-)] [-1:1(+)] {}")).is_err());
        // zero-dimensional part with sign −
        assert!(nu_of_shape(&d6, &shape("[1:6(+)] [-1:0(-)] {}")).is_err());
        let c3 = spec(Family::C, 3, QParity::Even);
        assert!(nu_of_shape(&c3, &shape("[1:2] [-1:1] {}")).is_err());
        assert!(nu_of_shape(&c3, &shape("[1:2(+)] [-1:0] {GL:1^1}")).is_err());
        let gl = spec(Family::Linear, 2, QParity::Odd);
        assert!(nu_of_shape(&gl, &shape("[1:0] [-1:0] {U:2^1}")).is_err());
        let u = spec(Family::Unitary, 4, QParity::Odd);
        assert_eq!(nu_of_shape(&u, &shape("[1:0] [-1:0] {GL:2@2^1}")).unwrap(), nat(2));
        assert!(nu_of_shape(&u, &shape("[1:0] [-1:0] {GL:4^1}")).is_err());
    }

    #[test]
    fn text_round_trip() {
        for s in [
            "[1:3(+)] [-1:0(+)] {GL:2^2,U:3^1}",
            "[1:0] [-1:0] {GL:4^3}",
            "[1:1] [-1:2(-)] {GL:2@3^1,U:1@3^2}",
            "[1:5] [-1:0] {}",
        ] {
            assert_eq!(shape(s).to_string(), s);
        }
        assert!("[1:3] {GL:1^1}".parse::<CentralizerShape>().is_err());
        assert!("[1:3] [-1:0] {X:1^1}".parse::<CentralizerShape>().is_err());
        assert!("[1:3(*)] [-1:0] {}".parse::<CentralizerShape>().is_err());
    }

    #[test]
    fn enumerate_small() {
        let c1: Vec<_> = enumerate_shapes(&spec(Family::C, 1, QParity::Odd)).unwrap().collect();
        assert_eq!(c1.len(), 3);
        let c3 = enumerate_shapes(&spec(Family::C, 3, QParity::Even)).unwrap();
        assert!(c3.into_iter().all(|s| s.minus_part.dim == 0));
        let d2 = spec(Family::DMinus, 2, QParity::Odd);
        for s in enumerate_shapes(&d2).unwrap() {
            assert!(s.validate(&d2).is_ok(), "{s}");
            if s.one_part.dim == 0 && s.minus_part.dim == 0 {
                assert_eq!(s.generic_sign(), Sign::Minus);
                assert_eq!(s.generic_degrees(), Partition::new(vec![1, 1]));
            }
        }
        assert!(enumerate_shapes(&spec(Family::C, 61, QParity::Odd)).is_err());
    }

    #[test]
    fn minus_cap_values() {
        assert_eq!(minus_cap(9, Sign::Plus).unwrap(), nat(35));
        assert_eq!(minus_cap(6, Sign::Minus).unwrap(), nat(9));
        assert_eq!(minus_cap(10, Sign::Minus).unwrap(), nat(49));
        assert_eq!(minus_cap(2, Sign::Minus).unwrap(), nat(1));
        assert!(minus_cap(0, Sign::Minus).is_err());
        assert_eq!(minus_cap_oracle(4, Sign::Minus).unwrap(), nat(3));
        assert_eq!(minus_cap_oracle(8, Sign::Minus).unwrap(), nat(21));
        assert_eq!(minus_cap_maximizers(4, Sign::Minus).unwrap(), vec![Partition::new(vec![3, 1])]);
    }

    #[test]
    fn series_examples() {
        let c17 = max_series_size(&spec(Family::C, 17, QParity::Even)).unwrap();
        assert_eq!(c17.value, nat(13214));
        assert_eq!(c17.witnesses, vec![shape("[1:17] [-1:0] {}")]);
        let c28 = max_series_size(&spec(Family::C, 28, QParity::Odd)).unwrap();
        assert_eq!(c28.value, nat(16160400));
        assert_eq!(c28.witnesses[0].to_string(), "[1:14] [-1:14] {}");
        let d32 = max_series_size(&spec(Family::DMinus, 32, QParity::Odd)).unwrap();
        assert_eq!(d32.value, nat(16711260));
        // α⁻(16)α⁺(16) either way round: both eigenspaces can carry the −.
        assert_eq!(d32.witnesses.len(), 2);
        assert!(d32.witnesses.contains(&shape("[1:16(-)] [-1:16(+)] {}")));
        let gl12 = max_series_size(&spec(Family::Linear, 12, QParity::Odd)).unwrap();
        assert_eq!(gl12.witnesses, vec![shape("[1:0] [-1:0] {GL:4^3}")]);
    }

    #[test]
    fn thresholds() {
        let t = |f, n, q, c| attainment_threshold(&spec(f, n, q), c).unwrap();
        assert_eq!(t(Family::Linear, 16, QParity::Odd, ShapeClass::LinearFamily).bound, QBound::AtLeast(5));
        assert_eq!(t(Family::C, 40, QParity::Odd, ShapeClass::FullTheorem).bound, QBound::GreaterThan(13));
        assert_eq!(t(Family::C, 40, QParity::Even, ShapeClass::FullTheorem).bound, QBound::GreaterThan(31));
        assert_eq!(t(Family::C, 10, QParity::Odd, ShapeClass::GenericOnly).bound, QBound::AtLeast(15));
        let d = t(Family::DPlus, 40, QParity::Odd, ShapeClass::FullTheorem);
        assert_eq!(d.bound, QBound::GreaterThan(13));
        assert_eq!(d.side_condition.unwrap().holds(None), Some(true));
        assert!(t(Family::C, 40, QParity::Odd, ShapeClass::FullTheorem).side_condition.is_none());
        assert_eq!(ParityCondition { b: 3 }.holds(Some(3)), Some(false));
        assert_eq!(ParityCondition { b: 3 }.holds(None), None);
    }

    #[test]
    fn center_multiplier() {
        assert_eq!(center_index_multiplier(CenterFamily::TypeA, 3).unwrap(), 4);
        assert_eq!(center_index_multiplier(CenterFamily::Other, 5).unwrap(), 4);
        assert_eq!(center_index_multiplier(CenterFamily::TypeA, 1).unwrap(), 2);
        assert!(center_index_multiplier(CenterFamily::Other, 0).is_err());
    }
}

//! Transcribed reference values, embedded at compile time.
//!
//! Every number is kept exactly as printed, typos included; the verify suites
//! decide what agrees. Values are decimal strings so nothing passes through a
//! float.

use std::collections::BTreeMap;
use std::sync::LazyLock;

use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, Deserialize)]
pub struct Table1 {
    pub location: String,
    pub small_values: SmallValues,
    pub double_maximizer: DoubleMaximizer,
    pub rows: Vec<Table1Row>,
}

#[derive(Clone, Debug, Deserialize)]
pub struct SmallValues {
    pub location: String,
    /// β(0), β(1), …
    pub beta: Vec<String>,
}

#[derive(Clone, Debug, Deserialize)]
pub struct DoubleMaximizer {
    pub n: usize,
    pub partitions: Vec<Vec<usize>>,
    pub location: String,
}

/// One residue class of n mod 4: π(n) is 4s plus `fixed_parts`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Table1Row {
    pub residue: usize,
    pub fixed_parts: Vec<usize>,
    pub coefficient: String,
    pub offset: usize,
    pub pi: String,
    pub beta: String,
}

#[derive(Clone, Debug, Deserialize)]
pub struct Table2 {
    pub location: String,
    pub rows: Vec<Table2Row>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Table2Row {
    pub n: usize,
    pub beta: String,
    pub alpha: String,
    pub alpha_plus: String,
    pub alpha_minus: String,
}

/// A maximum with its witnesses `[a, b, c]`, c being the β argument.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GammaCell {
    pub value: String,
    pub witnesses: Vec<[usize; 3]>,
}

#[derive(Clone, Debug, Deserialize)]
pub struct Table3 {
    pub location: String,
    pub rows: Vec<Table3Row>,
    pub equal_sum_remark: Vec<EqualSumRemark>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Table3Row {
    pub n: usize,
    pub aa: GammaCell,
    pub a_plus: GammaCell,
}

#[derive(Clone, Debug, Deserialize)]
pub struct EqualSumRemark {
    pub n: usize,
    pub value: String,
    pub witnesses: Vec<[usize; 2]>,
    pub location: String,
}

#[derive(Clone, Debug, Deserialize)]
pub struct Table4 {
    pub location: String,
    pub rows: Vec<Table4Row>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Table4Row {
    pub n: usize,
    pub plusplus: GammaCell,
    pub plus_minus: GammaCell,
}

#[derive(Clone, Debug, Deserialize)]
pub struct Lemmas {
    pub bo1_main: RatioTable,
    pub bo1_small: RatioTable,
    pub nk8: Nk8,
    pub ei2a: ValueList,
    pub pp2_remark: Pp2Remark,
    pub q_even: QEven,
    pub alaalb1: Alaalb1,
    /// Locations for claims that carry no transcribed values.
    pub anchors: BTreeMap<String, String>,
}

impl Lemmas {
    pub fn anchor(&self, key: &str) -> &str {
        self.anchors.get(key).map(String::as_str).unwrap_or_else(|| panic!("no anchor `{key}`"))
    }
}

#[derive(Clone, Debug, Deserialize)]
pub struct RatioTable {
    pub location: String,
    pub cells: Vec<RatioCell>,
}

#[derive(Clone, Debug, Deserialize)]
pub struct RatioCell {
    pub k: usize,
    pub n: usize,
    pub ratio: String,
}

#[derive(Clone, Debug, Deserialize)]
pub struct ValueList {
    pub location: String,
    pub values: Vec<NValue>,
}

#[derive(Clone, Debug, Deserialize)]
pub struct NValue {
    pub n: usize,
    pub value: String,
}

#[derive(Clone, Debug, Deserialize)]
pub struct Nk8 {
    pub location: String,
    pub values: Vec<NValue>,
    pub residue_forms: Vec<ResidueForm>,
}

/// `coefficient·5^{(n−offset)/4}` for n ≡ residue mod 4, n ≥ min_n.
#[derive(Clone, Debug, Deserialize)]
pub struct ResidueForm {
    pub residue: usize,
    pub coefficient: String,
    pub offset: usize,
    pub min_n: usize,
}

#[derive(Clone, Debug, Deserialize)]
pub struct Pp2Remark {
    pub location: String,
    pub values: Vec<Pp2Value>,
}

#[derive(Clone, Debug, Deserialize)]
pub struct Pp2Value {
    pub n: usize,
    pub value: String,
    pub a: usize,
    pub b: usize,
}

/// Argmax a by n mod 4.
#[derive(Clone, Debug, Deserialize)]
pub struct QEven {
    pub location: String,
    pub symplectic: [usize; 4],
    pub plus_minus: [usize; 4],
    pub threshold: usize,
}

/// Argmax (a, b) by n mod 4. `plus_then_minus` is for α⁺(a)α⁻(b).
#[derive(Clone, Debug, Deserialize)]
pub struct Alaalb1 {
    pub location: String,
    pub aa: [[usize; 2]; 4],
    pub a_plus: [[usize; 2]; 4],
    pub plusplus: [[usize; 2]; 4],
    pub plus_then_minus: [[usize; 2]; 4],
    pub aa_from: usize,
    pub others_from: usize,
}

#[derive(Clone, Debug, Deserialize)]
pub struct Constants {
    pub location: String,
    pub columns: Vec<ConstantColumn>,
}

#[derive(Clone, Debug, Deserialize)]
pub struct ConstantColumn {
    pub column: String,
    /// The printed strict upper bound for c, as a rational.
    pub bound: String,
}

#[derive(Clone, Debug, Deserialize)]
pub struct Theorem15 {
    pub location: String,
    pub attainment: Attainment,
    pub kinds: Vec<BoundRows>,
}

#[derive(Clone, Debug, Deserialize)]
pub struct Attainment {
    pub q_even: String,
    pub q_odd: String,
}

#[derive(Clone, Debug, Deserialize)]
pub struct BoundRows {
    pub kind: String,
    pub threshold: usize,
    pub rows: Vec<BoundRow>,
}

#[derive(Clone, Debug, Deserialize)]
pub struct BoundRow {
    pub coefficient: String,
    pub offset: usize,
    pub witness: Vec<usize>,
}

/// All reference data, parsed once.
#[derive(Clone, Debug)]
pub struct Golden {
    pub table1: Table1,
    pub table2: Table2,
    pub table3: Table3,
    pub table4: Table4,
    pub lemmas: Lemmas,
    pub constants: Constants,
    pub theorem15: Theorem15,
}

fn parse<T: for<'de> Deserialize<'de>>(name: &str, text: &str) -> T {
    serde_json::from_str(text).unwrap_or_else(|e| panic!("embedded {name} is malformed: {e}"))
}

static GOLDEN: LazyLock<Golden> = LazyLock::new(|| Golden {
    table1: parse("table1.json", include_str!("../data/table1.json")),
    table2: parse("table2.json", include_str!("../data/table2.json")),
    table3: parse("table3.json", include_str!("../data/table3.json")),
    table4: parse("table4.json", include_str!("../data/table4.json")),
    lemmas: parse("lemmas.json", include_str!("../data/lemmas.json")),
    constants: parse("constants.json", include_str!("../data/constants.json")),
    theorem15: parse("theorem15.json", include_str!("../data/theorem15.json")),
});

pub fn golden() -> &'static Golden {
    &GOLDEN
}

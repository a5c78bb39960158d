#![allow(dead_code)]

use std::path::PathBuf;

use curve_zeta::oracle::{AlgebraDoc, AlgebraOracle};
use curve_zeta::semigroup::SemigroupDoc;
use curve_zeta::{LatticePoint, ValueSemigroup};

/// Algebra documents whose zeta coefficients fit the enumeration budget.
pub const COUNTABLE_ALGEBRAS: [&str; 6] = [
    "node_algebra.json",
    "node_algebra_p3.json",
    "tacnode_algebra.json",
    "cusp_algebra.json",
    "three_four_five_algebra.json",
    "triple_point_algebra.json",
];

/// Every algebra document, including four lines over F_5 whose orbit counts
/// exceed the default budget.
pub const ALL_ALGEBRAS: [&str; 7] = [
    "node_algebra.json",
    "node_algebra_p3.json",
    "tacnode_algebra.json",
    "cusp_algebra.json",
    "three_four_five_algebra.json",
    "triple_point_algebra.json",
    "four_lines_algebra.json",
];

pub const SEMIGROUP_DOCS: [&str; 4] = ["node.json", "tacnode.json", "cusp.json", "three_four_five.json"];

pub fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data").join(name)
}

pub fn read(name: &str) -> String {
    std::fs::read_to_string(data(name)).unwrap()
}

pub fn semigroup(name: &str) -> ValueSemigroup {
    let doc: SemigroupDoc = serde_json::from_str(&read(name)).unwrap();
    ValueSemigroup::from_doc(&doc).unwrap()
}

pub fn algebra_doc(name: &str) -> AlgebraDoc {
    serde_json::from_str(&read(name)).unwrap()
}

pub fn oracle(name: &str) -> AlgebraOracle {
    AlgebraOracle::from_doc(&algebra_doc(name)).unwrap()
}

pub fn pt<const N: usize>(v: [u32; N]) -> LatticePoint {
    LatticePoint::from(v)
}

pub fn node() -> ValueSemigroup {
    semigroup("node.json")
}

pub fn tacnode() -> ValueSemigroup {
    semigroup("tacnode.json")
}

/// Semigroup documents plus the semigroups read off every algebra.
pub fn all_semigroups() -> Vec<(String, ValueSemigroup)> {
    let mut out: Vec<(String, ValueSemigroup)> =
        SEMIGROUP_DOCS.iter().map(|n| (n.to_string(), semigroup(n))).collect();
    for name in ALL_ALGEBRAS {
        out.push((name.to_string(), oracle(name).semigroup().clone()));
    }
    out
}

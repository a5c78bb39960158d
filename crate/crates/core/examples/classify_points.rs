//! Maximal points and their kinds for configurations of lines through the
//! origin, with the semigroup read off the coordinate ring.

use std::path::Path;

use curve_zeta::classify::{kind_of, m_count, maximal_points, Domination};
use curve_zeta::oracle::{AlgebraDoc, AlgebraOracle};

fn load(name: &str) -> Result<AlgebraOracle, Box<dyn std::error::Error>> {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("data").join(name);
    let doc: AlgebraDoc = serde_json::from_str(&std::fs::read_to_string(path)?)?;
    Ok(AlgebraOracle::from_doc(&doc)?)
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for name in ["node_algebra.json", "triple_point_algebra.json", "four_lines_algebra.json"] {
        let oracle = load(name)?;
        let s = oracle.semigroup();
        println!("{name}: r = {}, conductor {}", s.branches(), s.conductor());
        for m in maximal_points(s) {
            let kind = kind_of(s, m)?;
            let below = m_count(s, m, Domination::Strict);
            println!("  maximal {m}  kind {kind}  absolute {}  relative {}  strictly below {below}",
                kind.is_absolute(), kind.is_relative());
        }
    }
    Ok(())
}

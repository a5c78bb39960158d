//! Builds truncated coordinate rings over small prime fields and compares
//! brute-force counts with the combinatorial formulas.

use std::path::Path;

use curve_zeta::cli::{oracle_check, Check};
use curve_zeta::oracle::{AlgebraDoc, AlgebraOracle};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let data = Path::new(env!("CARGO_MANIFEST_DIR")).join("data");
    for name in ["node_algebra.json", "node_algebra_p3.json", "tacnode_algebra.json", "cusp_algebra.json"] {
        let doc: AlgebraDoc = serde_json::from_str(&std::fs::read_to_string(data.join(name))?)?;
        let oracle = AlgebraOracle::from_doc(&doc)?;
        println!("{name}: dim {} at truncation {}", oracle.algebra().dim(), oracle.algebra().truncation());
        for check in [Check::Semigroup, Check::Ell, Check::Epsilon, Check::Zeta] {
            let report = oracle_check(&oracle, oracle.semigroup(), check, None)?;
            println!("  {:9} {} points, agree: {}", report.check, report.points, report.agree());
        }
        let counts = oracle.principal_ideals_by_codim(4)?;
        println!("  principal ideals by codimension: {counts:?}");
        println!("  stable under N -> N+1: {}", oracle.truncation_stability()?.stable());
    }
    Ok(())
}

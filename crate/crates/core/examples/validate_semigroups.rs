//! Axiom checks on a few value semigroups and on deliberately broken inputs.

use curve_zeta::semigroup::Axiom;
use curve_zeta::{Error, LatticePoint, ValueSemigroup};

fn pt<const N: usize>(v: [u32; N]) -> LatticePoint {
    LatticePoint::from(v)
}

fn main() -> Result<(), Error> {
    let node = ValueSemigroup::from_points(pt([1, 1]), [pt([0, 0]), pt([1, 1])])?;
    let tacnode = ValueSemigroup::from_points(pt([3, 3]), [pt([0, 0]), pt([1, 1]), pt([2, 2]), pt([3, 3])])?;
    let cusp = ValueSemigroup::numerical(&[2, 3])?;
    for (name, s) in [("node", &node), ("tacnode", &tacnode), ("<2,3>", &cusp)] {
        println!("{name:8} conductor {} -> {}", s.conductor(), s.validate_axioms().to_string().trim_end());
    }

    // dropping the conductor itself
    match ValueSemigroup::from_points(pt([1, 1]), [pt([0, 0])]) {
        Err(Error::AxiomViolation(report)) => {
            assert!(report.violates(Axiom::S3));
            print!("without δ:\n{report}");
        }
        other => panic!("expected a violation, got {other:?}"),
    }

    // (1,2) and (2,1) without their infimum
    match ValueSemigroup::from_points(pt([2, 2]), [pt([0, 0]), pt([1, 2]), pt([2, 1]), pt([2, 2])]) {
        Err(Error::AxiomViolation(report)) => {
            assert!(report.violates(Axiom::S2));
            print!("without inf:\n{report}");
        }
        other => panic!("expected a violation, got {other:?}"),
    }
    Ok(())
}

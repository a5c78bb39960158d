//! Zeta series of two-branch singularities, checked against the closed form
//! for two branches.

use curve_zeta::zeta::{corollary_two_branches, epsilon, zeta_truncated};
use curve_zeta::{Error, LatticeBox, LatticePoint, ValueSemigroup};

fn main() -> Result<(), Error> {
    let node = ValueSemigroup::from_points(LatticePoint::from([1, 1]), [[0, 0], [1, 1]].map(LatticePoint::from))?;
    let tacnode =
        ValueSemigroup::from_points(LatticePoint::from([3, 3]), [[0, 0], [1, 1], [2, 2], [3, 3]].map(LatticePoint::from))?;

    for (name, s) in [("node", &node), ("tacnode", &tacnode)] {
        let z = zeta_truncated(s, 8)?;
        println!("{name}: {z}");
        println!("{name} at q = 2: {}", z.display_at(2));
        for n in LatticeBox::up_to(s.conductor().shift(1)).iter().filter(|n| s.contains(n)) {
            assert_eq!(epsilon(s, &n)?, corollary_two_branches(s, &n)?);
        }
    }
    Ok(())
}

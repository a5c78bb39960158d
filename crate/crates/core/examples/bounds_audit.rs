//! Compares zeta coefficients with the general upper bounds and prints the
//! rows where the maximal-point bound comes out negative.

use curve_zeta::zeta::bound_audit;
use curve_zeta::{Error, LatticeBox, LatticePoint, ValueSemigroup};

fn main() -> Result<(), Error> {
    let tacnode =
        ValueSemigroup::from_points(LatticePoint::from([3, 3]), [[0, 0], [1, 1], [2, 2], [3, 3]].map(LatticePoint::from))?;
    let audit = bound_audit(&tacnode, &LatticeBox::up_to(LatticePoint::from([4, 4])), &[2, 3, 5])?;

    println!("rows: {}", audit.rows.len());
    println!("|n| - ℓ(n) <= Σ s_i + m everywhere: {}", audit.load_bearing_holds());
    println!("non-maximal bound holds everywhere: {}", audit.nonmaximal_bound_holds());
    for row in audit.maximal_bound_anomalies() {
        println!(
            "maximal {} q={}: ε = {} = {}, printed bound {} = {}",
            row.point,
            row.q,
            row.epsilon,
            row.epsilon_value,
            row.stated_bound.as_ref().unwrap(),
            row.stated_bound_value.as_ref().unwrap()
        );
    }
    Ok(())
}

//! The codimension function on a box, and the increments `d^h` around
//! maximal and non-maximal points.

use curve_zeta::classify::maximal_points;
use curve_zeta::ell::{check_prop_maximal, check_prop_nonmaximal, EllTable};
use curve_zeta::{Error, LatticeBox, LatticePoint, ValueSemigroup};

fn main() -> Result<(), Error> {
    let pts = [[0, 0], [1, 1], [2, 2], [3, 3]].map(LatticePoint::from);
    let tacnode = ValueSemigroup::from_points(LatticePoint::from([3, 3]), pts)?;

    let table = EllTable::build(&tacnode, &LatticePoint::from([4, 4]))?;
    for row in 0..=4 {
        let line: Vec<String> = (0..=4).map(|c| format!("{:2}", table.get(&LatticePoint::from([row, c])).unwrap())).collect();
        println!("{}", line.join(" "));
    }

    for m in maximal_points(&tacnode) {
        let report = check_prop_maximal(&tacnode, m)?;
        println!("maximal {m}: passed {} ({} deviations)", report.passed, report.deviations().count());
    }
    for n in LatticeBox::up_to(LatticePoint::from([4, 4])).iter() {
        if tacnode.contains(&n) && !maximal_points(&tacnode).contains(&n) {
            assert!(check_prop_nonmaximal(&tacnode, &n)?.passed);
        }
    }
    println!("every non-maximal member of [0,(4,4)] satisfies d^h <= h");
    Ok(())
}

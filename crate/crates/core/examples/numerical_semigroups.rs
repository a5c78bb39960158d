//! One branch: zeta coefficients of numerical semigroups and the recipe
//! by runs of members and gaps.

use curve_zeta::zeta::{corollary_one_branch, epsilon, zeta_truncated};
use curve_zeta::{Error, LatticePoint, ValueSemigroup};

fn main() -> Result<(), Error> {
    for gens in [&[2, 3][..], &[3, 4, 5], &[3, 5], &[4, 6, 9]] {
        let s = ValueSemigroup::numerical(gens)?;
        let delta = s.conductor()[0];
        println!("<{gens:?}>: conductor {delta}, gaps {}", s.gap_count(0, delta)?);
        println!("  Z = {}", zeta_truncated(&s, delta + 3)?);
        let recipe: Vec<String> = (0..=delta + 3).map(|i| corollary_one_branch(&s, i).unwrap().to_string()).collect();
        println!("  recipe: {}", recipe.join(", "));
        for i in (0..=delta + 3).filter(|&i| s.contains(&LatticePoint::new(vec![i]))) {
            let eps = epsilon(&s, &LatticePoint::new(vec![i]))?;
            assert_eq!(eps.terms().count(), 1, "a single power of q");
        }
    }
    Ok(())
}

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

use super::table::FiniteGroupTable;

/// `#{(a_1, b_1, …, a_g, b_g) : Π [a_i, b_i] = e} / |G|`.
///
/// Pairs are bucketed by their commutator once; the product over handles is
/// then accumulated one factor at a time, keyed by the partial product.
pub fn commuting_tuple_count(g: &FiniteGroupTable, genus: usize) -> Result<Scalar> {
    if genus == 0 {
        return Err(Error::Precondition(
            "genus must be positive; closed genus-0 surfaces need a counit".into(),
        ));
    }
    let n = g.order();
    let mut commutators = vec![BigInt::zero(); n];
    for a in 0..n {
        for b in 0..n {
            commutators[g.commutator(a, b)] += 1;
        }
    }
    let mut partial = commutators.clone();
    for _ in 1..genus {
        let mut next = vec![BigInt::zero(); n];
        for (x, cx) in partial.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (z, cz) in commutators.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                next[g.mul(x, z)] += cx * cz;
            }
        }
        partial = next;
    }
    Ok(Scalar::new(partial[g.identity()].clone(), BigInt::from(n)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::builtin_group;
    use crate::scalar::int;

    fn naive(g: &FiniteGroupTable, genus: usize) -> usize {
        let n = g.order();
        let total = n.pow(2 * genus as u32);
        (0..total)
            .filter(|&code| {
                let mut c = code;
                let mut acc = g.identity();
                for _ in 0..genus {
                    let (a, b) = (c % n, (c / n) % n);
                    c /= n * n;
                    acc = g.mul(acc, g.commutator(a, b));
                }
                acc == g.identity()
            })
            .count()
    }

    #[test]
    fn small_values() {
        assert_eq!(commuting_tuple_count(&builtin_group("Z2").unwrap(), 1).unwrap(), int(2));
        assert_eq!(commuting_tuple_count(&builtin_group("S3").unwrap(), 1).unwrap(), int(3));
        assert!(commuting_tuple_count(&builtin_group("S3").unwrap(), 0).is_err());
    }

    #[test]
    fn matches_plain_enumeration() {
        for name in ["S3", "Q8", "D4"] {
            let g = builtin_group(name).unwrap();
            for genus in 1..=2 {
                let expect = Scalar::new(naive(&g, genus).into(), g.order().into());
                assert_eq!(commuting_tuple_count(&g, genus).unwrap(), expect, "{name} g={genus}");
            }
        }
    }
}

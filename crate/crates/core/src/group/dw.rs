//! The Dijkgraaf–Witten Frobenius algebra on the coinvariants `(⊕_g k)_G`.
//!
//! A coinvariant class `[g]` can be sent either to the class sum `z_C` or to
//! the averaged class sum `z_C/|C|`, and the coproduct
//! `δ([g]) = Σ_{hk=g} [h]⊗[k]` can be read either literally or with the
//! class-size factor `|C|/(|D||E|)` that makes it adjoint to the orbit-sum
//! product. All four combinations are built and tested; the adopted one is
//! the orbit-sum product with the class-size-corrected coproduct.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_traits::Zero;

use crate::checks::{check_frobenius, check_snake};
use crate::error::{Error, Result};
use crate::frobenius::FrobeniusData;
use crate::linalg::{add_term, GradedBasis, Tensor, Vector};
use crate::scalar::{self, int, Scalar};

use super::classes::{conjugacy_classes, ConjugacyPartition};
use super::table::FiniteGroupTable;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Normalization {
    /// Product in the averaged basis `z_C/|C|` instead of class sums.
    pub size_normalized_product: bool,
    /// Coproduct multiplied by `|C|/(|D||E|)`.
    pub corrected_coproduct: bool,
}

impl Normalization {
    pub const ADOPTED: Normalization = Normalization {
        size_normalized_product: false,
        corrected_coproduct: true,
    };

    pub fn all() -> [Normalization; 4] {
        [false, true].map(|p| [false, true].map(|c| Normalization {
            size_normalized_product: p,
            corrected_coproduct: c,
        }))
        .concat()
        .try_into()
        .expect("four combinations")
    }
}

impl fmt::Display for Normalization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = if self.size_normalized_product {
            "size-normalized"
        } else {
            "orbit-sum"
        };
        let c = if self.corrected_coproduct {
            "class-size-corrected"
        } else {
            "raw"
        };
        write!(f, "product={p}, coproduct={c}")
    }
}

#[derive(Clone, Debug)]
pub struct DwCandidate {
    pub normalization: Normalization,
    pub algebra: FrobeniusData,
    pub frobenius_passed: bool,
    pub snake_passed: bool,
}

impl DwCandidate {
    pub fn passed(&self) -> bool {
        self.frobenius_passed && self.snake_passed
    }
}

/// `N[C][D][E] = #{(c, d) ∈ C×D : cd = g_E}` for a fixed `g_E ∈ E`.
fn class_convolution(g: &FiniteGroupTable, p: &ConjugacyPartition) -> Vec<Vec<Vec<usize>>> {
    let k = p.len();
    let sizes = p.sizes();
    let mut n = vec![vec![vec![0usize; k]; k]; k];
    for a in 0..g.order() {
        for b in 0..g.order() {
            n[p.class_of(a)][p.class_of(b)][p.class_of(g.mul(a, b))] += 1;
        }
    }
    for row in &mut n {
        for cell in row.iter_mut() {
            for (e, v) in cell.iter_mut().enumerate() {
                *v /= sizes[e];
            }
        }
    }
    n
}

/// `M[C][D][E] = #{(h, k) : hk = g_C, h ∈ D, k ∈ E}` from the canonical
/// representative, after confirming every other representative agrees.
fn coproduct_counts(g: &FiniteGroupTable, p: &ConjugacyPartition) -> Result<Vec<Vec<Vec<usize>>>> {
    let k = p.len();
    let counts_for = |x: usize| {
        let mut m = vec![vec![0usize; k]; k];
        for h in 0..g.order() {
            let rest = g.mul(g.inv(h), x);
            m[p.class_of(h)][p.class_of(rest)] += 1;
        }
        m
    };
    let mut out = Vec::with_capacity(k);
    for (c, members) in p.classes.iter().enumerate() {
        let rep = p.representative[c];
        let canonical = counts_for(rep);
        for &other in members {
            if counts_for(other) != canonical {
                return Err(Error::Precondition(format!(
                    "coproduct of class {} depends on the representative ({} vs {})",
                    p.label(g, c),
                    g.label(rep),
                    g.label(other)
                )));
            }
        }
        out.push(canonical);
    }
    Ok(out)
}

fn build_candidate(
    g: &FiniteGroupTable,
    name: &str,
    p: &ConjugacyPartition,
    conv: &[Vec<Vec<usize>>],
    comul: &[Vec<Vec<usize>>],
    norm: Normalization,
) -> Result<DwCandidate> {
    let k = p.len();
    let sizes: Vec<i64> = p.sizes().iter().map(|&s| s as i64).collect();
    let labels: Vec<(String, i64)> = (0..k).map(|c| (p.label(g, c), 0)).collect();
    let basis = Arc::new(GradedBasis::new(labels)?);

    let mut product = BTreeMap::new();
    for c in 0..k {
        for d in 0..k {
            let mut v = Vector::new();
            for e in 0..k {
                let mut coef = int(conv[c][d][e] as i64);
                if norm.size_normalized_product {
                    coef = coef * int(sizes[e]) / int(sizes[c] * sizes[d]);
                }
                add_term(&mut v, e, coef);
            }
            product.insert((c, d), v);
        }
    }
    let mut coproduct = BTreeMap::new();
    for c in 0..k {
        let mut t = Tensor::new();
        for d in 0..k {
            for e in 0..k {
                let mut coef = int(comul[c][d][e] as i64);
                if norm.corrected_coproduct {
                    coef = coef * int(sizes[c]) / int(sizes[d] * sizes[e]);
                }
                add_term(&mut t, (d, e), coef);
            }
        }
        coproduct.insert(c, t);
    }

    // Counit λ·[C = e] with λ chosen so that (ε⊗1)δ fixes the unit class.
    let e = p.class_of(g.identity());
    let diag = coproduct
        .get(&e)
        .and_then(|t: &Tensor| t.get(&(e, e)))
        .cloned()
        .unwrap_or_else(Scalar::zero);
    let lambda = if diag.is_zero() {
        scalar::one()
    } else {
        scalar::one() / diag
    };

    let mut tags = BTreeMap::new();
    tags.insert("normalization".to_string(), norm.to_string());
    tags.insert(
        "counit".to_string(),
        format!("calibrated, not canonical (λ={})", scalar::format(&lambda)),
    );
    let algebra = FrobeniusData::from_parts(
        name.to_string(),
        basis,
        0,
        product,
        coproduct,
        Some(Vector::from([(e, scalar::one())])),
        Some(Vector::from([(e, lambda)])),
        tags,
    )?;
    let frobenius_passed = check_frobenius(&algebra).passed();
    let snake_passed = check_snake(&algebra)?.passed();
    Ok(DwCandidate {
        normalization: norm,
        algebra,
        frobenius_passed,
        snake_passed,
    })
}

/// All four normalization combinations, each with its Frobenius and snake
/// verdicts.
pub fn dw_candidates(g: &FiniteGroupTable) -> Result<Vec<DwCandidate>> {
    let p = conjugacy_classes(g);
    let conv = class_convolution(g, &p);
    let comul = coproduct_counts(g, &p)?;
    let name = format!("DW(G of order {})", g.order());
    Normalization::all()
        .into_iter()
        .map(|norm| build_candidate(g, &name, &p, &conv, &comul, norm))
        .collect()
}

/// The Dijkgraaf–Witten algebra in the class-sum basis. Fails if the
/// adopted normalization does not satisfy the Frobenius and snake identities.
pub fn dw_algebra(g: &FiniteGroupTable) -> Result<FrobeniusData> {
    let candidates = dw_candidates(g)?;
    let passing: Vec<String> = candidates
        .iter()
        .filter(|c| c.passed())
        .map(|c| c.normalization.to_string())
        .collect();
    let adopted = candidates
        .into_iter()
        .find(|c| c.normalization == Normalization::ADOPTED)
        .expect("adopted normalization is enumerated");
    if !adopted.passed() {
        return Err(Error::Precondition(format!(
            "adopted normalization ({}) fails the Frobenius or snake identity",
            adopted.normalization
        )));
    }
    let mut a = adopted.algebra;
    a.set_tag("normalization.passing", &passing.join("; "));
    Ok(a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::builtin_group;

    #[test]
    fn z2_product_and_coproduct() {
        let a = dw_algebra(&builtin_group("Z2").unwrap()).unwrap();
        assert_eq!(a.product_of("[1]", "[1]").unwrap().coeff("[0]"), int(1));
        let d = a.coproduct_of("[1]").unwrap();
        assert_eq!(d.coeff("[0]", "[1]"), int(1));
        assert_eq!(d.coeff("[1]", "[0]"), int(1));
        assert_eq!(d.coeff("[1]", "[1]"), int(0));
    }

    #[test]
    fn trivial_group_is_one_dimensional() {
        let a = dw_algebra(&builtin_group("Z1").unwrap()).unwrap();
        assert_eq!(a.dim(), 1);
        assert_eq!(a.product_of("[0]", "[0]").unwrap().coeff("[0]"), int(1));
        assert_eq!(a.coproduct_of("[0]").unwrap().coeff("[0]", "[0]"), int(1));
    }

    #[test]
    fn abelian_groups_accept_every_normalization() {
        let cs = dw_candidates(&builtin_group("Z6").unwrap()).unwrap();
        assert!(cs.iter().all(DwCandidate::passed));
    }

    #[test]
    fn s3_mixed_normalizations_fail() {
        let cs = dw_candidates(&builtin_group("S3").unwrap()).unwrap();
        let verdict: BTreeMap<Normalization, bool> =
            cs.iter().map(|c| (c.normalization, c.passed())).collect();
        let n = |p, c| Normalization {
            size_normalized_product: p,
            corrected_coproduct: c,
        };
        assert!(verdict[&n(false, true)]);
        assert!(verdict[&n(true, false)]);
        assert!(!verdict[&n(false, false)]);
        assert!(!verdict[&n(true, true)]);
    }

    #[test]
    fn adopted_choice_is_tagged() {
        let a = dw_algebra(&builtin_group("S3").unwrap()).unwrap();
        assert_eq!(a.tags()["normalization"], Normalization::ADOPTED.to_string());
        assert!(a.tags()["counit"].starts_with("calibrated, not canonical"));
    }
}

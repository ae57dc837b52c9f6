//! Weight-function twistings of a product: `a ⋆_α b = α(a, b)·(a ⋆ b)`.
//!
//! Only algebras whose basis products are multiples of single basis vectors
//! are supported; for those the twisted product is associative exactly when
//! `α(a,b)·α(ab,c) = α(b,c)·α(a,bc)` wherever `ab` and `bc` are nonzero.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::checks::CheckReport;
use crate::error::{Error, Result};
use crate::frobenius::FrobeniusData;
use crate::linalg::{scaled, Vector};
use crate::scalar::{self, Scalar};

/// Scalar weight on ordered pairs of basis labels; unlisted pairs take the
/// default value.
#[derive(Clone, Debug, PartialEq)]
pub struct Weights {
    default: Scalar,
    table: BTreeMap<(String, String), Scalar>,
}

#[derive(Serialize, Deserialize)]
struct WeightsDoc {
    default: String,
    values: Vec<(String, String, String)>,
}

impl Weights {
    pub fn constant(value: Scalar) -> Self {
        Weights {
            default: value,
            table: BTreeMap::new(),
        }
    }

    pub fn trivial() -> Self {
        Self::constant(Scalar::one())
    }

    /// Tabulate `f` on every ordered pair of basis labels of `a`.
    pub fn from_fn(a: &FrobeniusData, f: impl Fn(&str, &str) -> Scalar) -> Self {
        let mut w = Self::trivial();
        for l in a.basis().labels() {
            for r in a.basis().labels() {
                w.set(l, r, f(l, r));
            }
        }
        w
    }

    pub fn set(&mut self, left: &str, right: &str, value: Scalar) {
        self.table.insert((left.to_string(), right.to_string()), value);
    }

    pub fn with(mut self, left: &str, right: &str, value: Scalar) -> Self {
        self.set(left, right, value);
        self
    }

    pub fn get(&self, left: &str, right: &str) -> Scalar {
        self.table
            .get(&(left.to_string(), right.to_string()))
            .cloned()
            .unwrap_or_else(|| self.default.clone())
    }

    pub fn is_flip_symmetric(&self, a: &FrobeniusData) -> bool {
        let b = a.basis();
        b.labels()
            .all(|l| b.labels().all(|r| self.get(l, r) == self.get(r, l)))
    }

    pub fn to_json(&self) -> String {
        let doc = WeightsDoc {
            default: scalar::format(&self.default),
            values: self
                .table
                .iter()
                .map(|((l, r), v)| (l.clone(), r.clone(), scalar::format(v)))
                .collect(),
        };
        serde_json::to_string_pretty(&doc).expect("weights serialize")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: WeightsDoc =
            serde_json::from_str(text).map_err(|e| Error::Parse(format!("cocycle document: {e}")))?;
        let mut w = Self::constant(scalar::parse(&doc.default)?);
        for (l, r, v) in doc.values {
            w.set(&l, &r, scalar::parse(&v)?);
        }
        Ok(w)
    }
}

fn require_monomial(a: &FrobeniusData) -> Result<()> {
    if a.has_monomial_product() {
        Ok(())
    } else {
        Err(Error::Unsupported(format!(
            "{}: some basis product is not a multiple of a single basis vector",
            a.name()
        )))
    }
}

fn single(v: Option<&Vector>) -> Option<usize> {
    v.and_then(|v| v.keys().next().copied())
}

pub fn check_cocycle(a: &FrobeniusData, alpha: &Weights) -> Result<CheckReport> {
    require_monomial(a)?;
    let mut report = CheckReport::new("cocycle", a.name());
    let b = a.basis();
    let n = a.dim();
    for i in 0..n {
        for j in 0..n {
            let Some(ij) = single(a.mul_basis(i, j)) else {
                report.skipped += n;
                continue;
            };
            for k in 0..n {
                let Some(jk) = single(a.mul_basis(j, k)) else {
                    report.skipped += 1;
                    continue;
                };
                report.checked += 1;
                let (x, y, z) = (b.label(i), b.label(j), b.label(k));
                let left = alpha.get(x, y) * alpha.get(b.label(ij), z);
                let right = alpha.get(y, z) * alpha.get(x, b.label(jk));
                if left != right {
                    report.violation(
                        vec![x.to_string(), y.to_string(), z.to_string()],
                        format!(
                            "α(a,b)α(ab,c) = {}, α(b,c)α(a,bc) = {}",
                            scalar::format(&left),
                            scalar::format(&right)
                        ),
                    );
                }
            }
        }
    }
    Ok(report)
}

/// Rescales every product `a ⋆ b` by `α(a, b)`; everything else is copied.
pub fn twist_product(a: &FrobeniusData, alpha: &Weights) -> Result<FrobeniusData> {
    require_monomial(a)?;
    let b = a.basis();
    let mut product = BTreeMap::new();
    for (&(i, j), v) in a.product_table() {
        let w = alpha.get(b.label(i), b.label(j));
        if w.is_zero() {
            continue;
        }
        product.insert((i, j), scaled(v, &w));
    }
    let mut out = a.with_product(product)?;
    if *alpha != Weights::trivial() {
        out = out.with_name(&format!("{} (twisted)", a.name()));
        out.set_tag("twisted", "weight function");
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::checks::check_associativity;
    use crate::group::{builtin_group, dw_algebra};
    use crate::scalar::int;

    #[test]
    fn identity_twist_is_structurally_identity() {
        let a = dw_algebra(&builtin_group("Z2xZ2").unwrap()).unwrap();
        assert!(check_cocycle(&a, &Weights::trivial()).unwrap().passed());
        assert_eq!(twist_product(&a, &Weights::trivial()).unwrap(), a);
    }

    #[test]
    fn zero_weight_kills_the_product() {
        let a = dw_algebra(&builtin_group("Z4").unwrap()).unwrap();
        let t = twist_product(&a, &Weights::constant(int(0))).unwrap();
        assert!(t.product_table().is_empty());
        assert!(check_associativity(&t).passed());
    }

    #[test]
    fn normalized_weight_on_z2_is_a_cocycle() {
        // Every normalized weight on Z/2 satisfies the cocycle identity; the
        // only nontrivial triple (a,a,a) is symmetric.
        let a = dw_algebra(&builtin_group("Z2").unwrap()).unwrap();
        let alpha = Weights::trivial().with("[1]", "[1]", int(2));
        assert!(check_cocycle(&a, &alpha).unwrap().passed());
        assert!(check_associativity(&twist_product(&a, &alpha).unwrap()).passed());
    }

    #[test]
    fn non_cocycle_on_z2_names_aaa() {
        let a = dw_algebra(&builtin_group("Z2").unwrap()).unwrap();
        let alpha = Weights::trivial()
            .with("[1]", "[1]", int(2))
            .with("[1]", "[0]", int(2));
        let r = check_cocycle(&a, &alpha).unwrap();
        assert!(r.has_witness(&["[1]", "[1]", "[1]"]));
        assert!(!check_associativity(&twist_product(&a, &alpha).unwrap()).passed());
    }

    #[test]
    fn non_monomial_product_is_unsupported() {
        let a = dw_algebra(&builtin_group("S3").unwrap()).unwrap();
        assert!(matches!(
            check_cocycle(&a, &Weights::trivial()),
            Err(Error::Unsupported(_))
        ));
    }

    #[test]
    fn weights_json_roundtrip() {
        let w = Weights::trivial().with("a", "b", scalar::frac(-3, 4));
        assert_eq!(Weights::from_json(&w.to_json()).unwrap(), w);
    }
}

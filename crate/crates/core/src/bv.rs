//! BV operator checks and the truncated circle loop algebra fixture.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_traits::One;

use crate::checks::{CheckReport, TupleFilter};
use crate::error::{Error, Result};
use crate::frobenius::FrobeniusData;
use crate::linalg::{add_term, GradedBasis, LinearMap, Vector};
use crate::scalar::{self, int, Scalar};

fn all(_: &[usize]) -> bool {
    true
}

pub fn check_bv(a: &FrobeniusData, d: &LinearMap) -> Result<CheckReport> {
    check_bv_within(a, d, &all)
}

/// Checks `D∘D = 0` on every basis vector and the seven-term identity
///
/// ```text
/// D(abc) = D(ab)c + (-1)^|a| a D(bc) + (-1)^{(|a|+1)|b|} b D(ac)
///          - D(a)bc - (-1)^|a| a D(b) c - (-1)^{|a|+|b|} ab D(c)
/// ```
///
/// on every admitted basis triple, with shifted degrees. `D` must raise the
/// unshifted degree by exactly one.
pub fn check_bv_within(a: &FrobeniusData, d: &LinearMap, filter: TupleFilter<'_>) -> Result<CheckReport> {
    let basis = a.basis();
    if **d.source() != **basis || **d.target() != **basis {
        return Err(Error::BasisMismatch(format!(
            "BV operator is not an endomorphism of {}",
            a.name()
        )));
    }
    for i in 0..a.dim() {
        for &k in d.column(i).keys() {
            if basis.degree(k) != basis.degree(i) + 1 {
                return Err(Error::Precondition(format!(
                    "BV operator sends `{}` (degree {}) to `{}` (degree {})",
                    basis.label(i),
                    basis.degree(i),
                    basis.label(k),
                    basis.degree(k)
                )));
            }
        }
    }

    let mut report = CheckReport::new("bv", a.name());
    for i in 0..a.dim() {
        report.visit(true);
        let dd = d.apply_vector(d.column(i));
        if !dd.is_empty() {
            report.violation(
                vec!["D²".to_string(), basis.label(i).to_string()],
                format!("D(D({})) = {}", basis.label(i), basis.render_vector(&dd)),
            );
        }
    }

    let e = |i: usize| Vector::from([(i, Scalar::one())]);
    let mul = |x: &Vector, y: &Vector| a.mul_vec(x, y);
    let dv = |x: &Vector| d.apply_vector(x);
    let n = a.dim();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                if !report.visit(filter(&[i, j, k])) {
                    continue;
                }
                let (x, y, z) = (e(i), e(j), e(k));
                let p = a.shifted_degree(i);
                let q = a.shifted_degree(j);
                let xy = mul(&x, &y);
                let yz = mul(&y, &z);
                let xz = mul(&x, &z);
                let lhs = dv(&mul(&xy, &z));
                let terms: [(Scalar, Vector); 6] = [
                    (scalar::one(), mul(&dv(&xy), &z)),
                    (scalar::sign(p), mul(&x, &dv(&yz))),
                    (scalar::sign((p + 1) * q), mul(&y, &dv(&xz))),
                    (-scalar::one(), mul(&mul(&dv(&x), &y), &z)),
                    (-scalar::sign(p), mul(&mul(&x, &dv(&y)), &z)),
                    (-scalar::sign(p + q), mul(&xy, &dv(&z))),
                ];
                let mut rhs = Vector::new();
                for (s, v) in &terms {
                    for (&idx, c) in v {
                        add_term(&mut rhs, idx, c * s);
                    }
                }
                if lhs != rhs {
                    report.violation(
                        vec![
                            basis.label(i).to_string(),
                            basis.label(j).to_string(),
                            basis.label(k).to_string(),
                        ],
                        format!(
                            "D(abc) = {}, seven-term rhs = {}",
                            basis.render_vector(&lhs),
                            basis.render_vector(&rhs)
                        ),
                    );
                }
            }
        }
    }
    Ok(report)
}

/// Loop homology of the circle, `k[u, u⁻¹] ⊗ Λ(v)`, truncated to
/// `|exponent of u| ≤ bound`, with its classical BV operator
/// `D(u^k v) = k u^k`, `D(u^k) = 0`.
///
/// Shift 1; `u^k` sits in unshifted degree 1 and `u^k v` in degree 0.
#[derive(Clone, Debug)]
pub struct CircleLoopFixture {
    pub algebra: FrobeniusData,
    pub operator: LinearMap,
    pub bound: i64,
    exponents: Vec<i64>,
}

impl CircleLoopFixture {
    pub fn new(bound: i64) -> Result<Self> {
        if bound < 0 {
            return Err(Error::Precondition("truncation bound must be nonnegative".into()));
        }
        let label = |k: i64, odd: bool| {
            if odd {
                format!("u^{k}*v")
            } else {
                format!("u^{k}")
            }
        };
        let mut entries = Vec::new();
        let mut exponents = Vec::new();
        for k in -bound..=bound {
            for odd in [false, true] {
                entries.push((label(k, odd), if odd { 0 } else { 1 }));
                exponents.push(k);
            }
        }
        let basis = Arc::new(GradedBasis::new(entries)?);
        let idx = |k: i64, odd: bool| 2 * (k + bound) as usize + odd as usize;

        let mut product = BTreeMap::new();
        for k1 in -bound..=bound {
            for k2 in -bound..=bound {
                let k = k1 + k2;
                if k.abs() > bound {
                    continue;
                }
                for (o1, o2) in [(false, false), (false, true), (true, false)] {
                    let mut v = Vector::new();
                    add_term(&mut v, idx(k, o1 || o2), scalar::one());
                    product.insert((idx(k1, o1), idx(k2, o2)), v);
                }
            }
        }
        let algebra = FrobeniusData::from_parts(
            format!("circle loop algebra |k|<={bound}"),
            basis.clone(),
            1,
            product,
            BTreeMap::new(),
            Some(Vector::from([(idx(0, false), scalar::one())])),
            None,
            BTreeMap::from([("truncation".to_string(), format!("|k|<={bound}"))]),
        )?;

        let mut columns = vec![Vector::new(); basis.len()];
        for k in -bound..=bound {
            add_term(&mut columns[idx(k, true)], idx(k, false), int(k));
        }
        let operator = LinearMap::from_columns(&basis, &basis, columns);
        Ok(CircleLoopFixture {
            algebra,
            operator,
            bound,
            exponents,
        })
    }

    /// A triple is admitted when every partial product stays inside the
    /// truncation window.
    pub fn admits(&self, tuple: &[usize]) -> bool {
        let n = tuple.len();
        (1u32..(1 << n)).all(|mask| {
            let s: i64 = (0..n)
                .filter(|b| mask & (1 << b) != 0)
                .map(|b| self.exponents[tuple[b]])
                .sum();
            s.abs() <= self.bound
        })
    }

    pub fn check(&self) -> Result<CheckReport> {
        check_bv_within(&self.algebra, &self.operator, &|t| self.admits(t))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classical_operator_passes() {
        for bound in 0..=3 {
            let r = CircleLoopFixture::new(bound).unwrap().check().unwrap();
            assert!(r.passed(), "{r}");
            assert!(r.skipped > 0 || bound == 0);
        }
    }

    #[test]
    fn zero_operator_passes() {
        let fx = CircleLoopFixture::new(2).unwrap();
        let d = LinearMap::zero(fx.algebra.basis(), fx.algebra.basis());
        assert!(check_bv(&fx.algebra, &d).unwrap().passed());
    }

    #[test]
    fn degree_preserving_operator_is_rejected() {
        let fx = CircleLoopFixture::new(1).unwrap();
        let d = LinearMap::identity(fx.algebra.basis());
        assert!(matches!(
            check_bv(&fx.algebra, &d),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn square_nonzero_operator_fails() {
        // x (deg 0) -> y (deg 1) -> z (deg 2), y⋆y = z
        let b = Arc::new(GradedBasis::new([("x", 0), ("y", 1), ("z", 2)]).unwrap());
        let a = FrobeniusData::builder("toy", b.clone(), 0)
            .product("y", "y", &[("z", int(1))])
            .build()
            .unwrap();
        let d = LinearMap::from_entries(
            &b,
            &b,
            &[("x", vec![("y", int(1))]), ("y", vec![("z", int(1))])],
        )
        .unwrap();
        let r = check_bv(&a, &d).unwrap();
        assert!(r.has_witness(&["D²", "x"]));
    }
}

//! String and loop algebras of the reflection orbifold
//! `[S^{2n+1} / (Z/2)^{n+1}]`.
//!
//! The group `(Z/2)^{n+1}` is generated by the coordinate reflections
//! `s_0, …, s_n`; an element is a subset `S ⊆ {0..n}`, stored as a bit mask.
//! The fixed locus of `s_S` is a sphere of dimension `2(n-|S|)+1`, empty
//! when `S` is everything.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::bv::check_bv_within;
use crate::checks::CheckReport;
use crate::error::{Error, Result};
use crate::frobenius::FrobeniusData;
use crate::linalg::{add_term, GradedBasis, GradedElement, LinearMap, Vector};
use crate::scalar;

fn subset_string(mask: usize, n: usize) -> String {
    let items: Vec<String> = (0..=n).filter(|i| mask & (1 << i) != 0).map(|i| i.to_string()).collect();
    format!("{{{}}}", items.join(","))
}

pub fn face_label(mask: usize, n: usize) -> String {
    format!("F{}", subset_string(mask, n))
}

pub fn group_label(mask: usize, n: usize) -> String {
    format!("g{}", subset_string(mask, n))
}

fn mask_of(n: usize, subset: &[usize]) -> Result<usize> {
    subset.iter().try_fold(0usize, |m, &i| {
        if i > n {
            Err(Error::Precondition(format!("index {i} outside 0..={n}")))
        } else {
            Ok(m | (1 << i))
        }
    })
}

fn check_n(n: usize) -> Result<()> {
    if n > 16 {
        return Err(Error::Precondition(format!("n = {n} is too large to enumerate")));
    }
    Ok(())
}

/// Dimension of the fixed sphere of `s_S`, or `None` when it is empty.
fn fixed_dimension(n: usize, mask: usize) -> Option<i64> {
    let k = mask.count_ones() as i64;
    (k <= n as i64).then(|| 2 * (n as i64 - k) + 1)
}

fn face_degree(n: usize, mask: usize) -> i64 {
    fixed_dimension(n, mask).expect("face with nonempty fixed locus")
}

/// Basis index layout: group labels `1..2^{n+1}` first, then faces in mask
/// order.
struct Layout {
    n: usize,
    faces: Vec<usize>,
    face_index: BTreeMap<usize, usize>,
}

impl Layout {
    fn new(n: usize) -> Self {
        let faces: Vec<usize> = (0..1usize << (n + 1))
            .filter(|m| m.count_ones() as usize <= n)
            .collect();
        let offset = (1 << (n + 1)) - 1;
        let face_index = faces.iter().enumerate().map(|(k, &m)| (m, offset + k)).collect();
        Layout { n, faces, face_index }
    }

    fn group_index(&self, mask: usize) -> usize {
        mask - 1
    }

    fn basis(&self) -> Result<Arc<GradedBasis>> {
        let n = self.n;
        let groups = (1..1usize << (n + 1)).map(|m| (group_label(m, n), 0));
        let faces = self.faces.iter().map(|&m| (face_label(m, n), face_degree(n, m)));
        Ok(Arc::new(GradedBasis::new(groups.chain(faces))?))
    }
}

/// `F_S ⋆ F_T = F_{S∪T}` for disjoint `S, T` with `|S∪T| ≤ n`, otherwise 0;
/// `F_∅` is the unit and every other product with a group label vanishes.
/// Coproduct zero, no counit.
pub fn sphere_string_algebra(n: usize) -> Result<FrobeniusData> {
    check_n(n)?;
    let layout = Layout::new(n);
    let basis = layout.basis()?;
    let unit = layout.face_index[&0];
    let mut product = BTreeMap::new();
    for &s in &layout.faces {
        for &t in &layout.faces {
            if s & t == 0 && (s | t).count_ones() as usize <= n {
                product.insert(
                    (layout.face_index[&s], layout.face_index[&t]),
                    Vector::from([(layout.face_index[&(s | t)], scalar::one())]),
                );
            }
        }
    }
    for g in 1..1usize << (n + 1) {
        let gi = layout.group_index(g);
        let v = Vector::from([(gi, scalar::one())]);
        product.insert((unit, gi), v.clone());
        product.insert((gi, unit), v);
    }
    FrobeniusData::from_parts(
        format!("string algebra of S^{}/(Z/2)^{}", 2 * n + 1, n + 1),
        basis,
        2 * n as i64 + 1,
        product,
        BTreeMap::new(),
        Some(Vector::from([(unit, scalar::one())])),
        None,
        BTreeMap::from([("coproduct".to_string(), "zero".to_string())]),
    )
}

/// Rank of the excess bundle `T_M − T_X − T_{X'} + T_Z` for the fixed
/// spheres of `s_S`, `s_T` and `Z = X ∩ X'`; equals `2|S∩T|`.
pub fn excess_rank(n: usize, s: &[usize], t: &[usize]) -> Result<i64> {
    let (s, t) = (mask_of(n, s)?, mask_of(n, t)?);
    // Dimensions as spheres; an empty locus behaves as dimension -1.
    let dim = |m: usize| fixed_dimension(n, m).unwrap_or(-1);
    Ok((2 * n as i64 + 1) - dim(s) - dim(t) + dim(s | t))
}

/// The face product recomputed from fixed-locus data alone: zero when the
/// target locus is empty or the intersection has excess, otherwise the
/// pushforward of the fundamental class of the intersection.
pub fn face_product_oracle(n: usize, s: &[usize], t: &[usize]) -> Result<GradedElement> {
    let a = sphere_string_algebra(n)?;
    let target = mask_of(n, s)? | mask_of(n, t)?;
    if fixed_dimension(n, target).is_none() || excess_rank(n, s, t)? != 0 {
        return Ok(GradedElement::zero(a.basis()));
    }
    a.basis_element(&face_label(target, n))
}

/// `(r, a, ε)` with `r ⊆ {0..n}`, `a ≤ N`, `ε ∈ {0,1}`.
pub fn loop_label(mask: usize, a: usize, odd: bool, n: usize) -> String {
    let mut out = group_label(mask, n);
    match a {
        0 => {}
        1 => out.push_str("*u"),
        _ => out.push_str(&format!("*u^{a}")),
    }
    if odd {
        out.push_str("*v");
    }
    out
}

/// `k[(Z/2)^{n+1}][u] ⊗ Λ(v)` truncated to `u`-exponent `≤ N`, with shifted
/// degrees `|u| = 2n`, `|v| = -(2n+1)`.
#[derive(Clone, Debug)]
pub struct SphereLoopAlgebra {
    pub algebra: FrobeniusData,
    pub n: usize,
    pub truncation: usize,
    /// Basis pairs whose product left the truncation window.
    pub overflow_pairs: usize,
    exponents: Vec<usize>,
    bv: Option<LinearMap>,
}

pub fn sphere_loop_algebra(n: usize, truncation: usize) -> Result<SphereLoopAlgebra> {
    check_n(n)?;
    let shift = 2 * n as i64 + 1;
    let groups = 1usize << (n + 1);
    let idx = |r: usize, a: usize, odd: bool| (r * (truncation + 1) + a) * 2 + odd as usize;
    let mut entries = Vec::new();
    let mut exponents = Vec::new();
    for r in 0..groups {
        for a in 0..=truncation {
            for odd in [false, true] {
                let shifted = 2 * n as i64 * a as i64 - if odd { shift } else { 0 };
                entries.push((loop_label(r, a, odd, n), shifted + shift));
                exponents.push(a);
            }
        }
    }
    let basis = Arc::new(GradedBasis::new(entries)?);
    let mut product = BTreeMap::new();
    let mut overflow_pairs = 0;
    for r1 in 0..groups {
        for a1 in 0..=truncation {
            for o1 in [false, true] {
                for r2 in 0..groups {
                    for a2 in 0..=truncation {
                        for o2 in [false, true] {
                            if o1 && o2 {
                                continue;
                            }
                            if a1 + a2 > truncation {
                                overflow_pairs += 1;
                                continue;
                            }
                            let mut v = Vector::new();
                            add_term(&mut v, idx(r1 ^ r2, a1 + a2, o1 || o2), scalar::one());
                            product.insert((idx(r1, a1, o1), idx(r2, a2, o2)), v);
                        }
                    }
                }
            }
        }
    }
    let algebra = FrobeniusData::from_parts(
        format!("loop algebra of S^{}/(Z/2)^{} (u^{truncation})", 2 * n + 1, n + 1),
        basis,
        shift,
        product,
        BTreeMap::new(),
        Some(Vector::from([(idx(0, 0, false), scalar::one())])),
        None,
        BTreeMap::from([
            ("truncation".to_string(), format!("u-exponent <= {truncation}")),
            ("overflow".to_string(), format!("{overflow_pairs} basis pairs dropped")),
            ("coproduct".to_string(), "zero".to_string()),
        ]),
    )?;
    Ok(SphereLoopAlgebra {
        algebra,
        n,
        truncation,
        overflow_pairs,
        exponents,
        bv: None,
    })
}

impl SphereLoopAlgebra {
    /// Admits a tuple when the total `u`-exponent fits the truncation, so no
    /// intermediate product is dropped.
    pub fn admits(&self, tuple: &[usize]) -> bool {
        tuple.iter().map(|&i| self.exponents[i]).sum::<usize>() <= self.truncation
    }

    pub fn with_bv(mut self, operator: LinearMap) -> Result<Self> {
        if **operator.source() != **self.algebra.basis() || **operator.target() != **self.algebra.basis() {
            return Err(Error::BasisMismatch("BV operator is not an endomorphism".into()));
        }
        self.bv = Some(operator);
        Ok(self)
    }

    pub fn bv(&self) -> Option<&LinearMap> {
        self.bv.as_ref()
    }

    /// Runs the BV checks on admitted triples; there is no default operator.
    pub fn check_bv(&self) -> Result<CheckReport> {
        let d = self
            .bv
            .as_ref()
            .ok_or_else(|| Error::Precondition("no BV operator supplied".into()))?;
        check_bv_within(&self.algebra, d, &|t| self.admits(t))
    }
}

/// `Φ(F_∅) = 1`, `Φ(F_S) = 0` for `S ≠ ∅`, `Φ(g) = g·v`.
pub fn phi_map(n: usize, truncation: usize) -> Result<(FrobeniusData, SphereLoopAlgebra, LinearMap)> {
    let string = sphere_string_algebra(n)?;
    let looped = sphere_loop_algebra(n, truncation)?;
    let mut entries: Vec<(String, Vec<(String, scalar::Scalar)>)> =
        vec![(face_label(0, n), vec![(loop_label(0, 0, false, n), scalar::one())])];
    for g in 1..1usize << (n + 1) {
        entries.push((group_label(g, n), vec![(loop_label(g, 0, true, n), scalar::one())]));
    }
    let f = LinearMap::from_entries(string.basis(), looped.algebra.basis(), &entries)?;
    Ok((string, looped, f))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::checks::{check_associativity_within, check_graded_commutativity_within, check_morphism};
    use crate::scalar::int;

    #[test]
    fn face_products() {
        let a = sphere_string_algebra(2).unwrap();
        assert_eq!(a.product_of("F{0}", "F{1}").unwrap().coeff("F{0,1}"), int(1));
        assert!(a.product_of("F{0}", "F{0}").unwrap().is_zero());
        let b = sphere_string_algebra(1).unwrap();
        assert!(b.product_of("F{0}", "F{1}").unwrap().is_zero());
        assert_eq!(b.product_of("F{}", "g{1}").unwrap().coeff("g{1}"), int(1));
        assert!(b.product_of("g{0}", "g{1}").unwrap().is_zero());
    }

    #[test]
    fn n_zero_is_supported() {
        let a = sphere_string_algebra(0).unwrap();
        assert_eq!(a.basis().labels().collect::<Vec<_>>(), ["g{0}", "F{}"]);
    }

    #[test]
    fn excess_examples() {
        assert_eq!(excess_rank(2, &[0], &[1]).unwrap(), 0);
        assert_eq!(excess_rank(2, &[0], &[0]).unwrap(), 2);
        assert_eq!(excess_rank(3, &[0, 1], &[1, 2]).unwrap(), 2);
        assert!(excess_rank(1, &[2], &[]).is_err());
    }

    #[test]
    fn loop_products() {
        let l = sphere_loop_algebra(1, 3).unwrap();
        let a = &l.algebra;
        let p = a.product_of("g{0}*u^2*v", "g{1}*u").unwrap();
        assert_eq!(p.coeff("g{0,1}*u^3*v"), int(1));
        assert!(a.product_of("g{0}*v", "g{1}*v").unwrap().is_zero());
        assert!(a.product_of("g{}*u^2", "g{}*u^2").unwrap().is_zero());
        assert!(l.overflow_pairs > 0);
        assert!(check_associativity_within(a, &|t| l.admits(t)).passed());
        assert!(check_graded_commutativity_within(a, &|t| l.admits(t)).passed());
    }

    #[test]
    fn phi_values_and_morphism() {
        let (s, l, f) = phi_map(1, 1).unwrap();
        assert_eq!(f.image_of("F{}").unwrap().coeff("g{}"), int(1));
        assert!(f.image_of("F{0}").unwrap().is_zero());
        assert_eq!(f.image_of("g{0,1}").unwrap().coeff("g{0,1}*v"), int(1));
        assert!(check_morphism(&f, &s, &l.algebra).unwrap().passed());
    }

    #[test]
    fn bv_slot_has_no_default() {
        let l = sphere_loop_algebra(1, 1).unwrap();
        assert!(l.check_bv().is_err());
        let zero = LinearMap::zero(l.algebra.basis(), l.algebra.basis());
        assert!(l.with_bv(zero).unwrap().check_bv().unwrap().passed());
    }
}

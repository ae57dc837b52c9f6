//! Graded algebra-and-coalgebra data given by sparse structure constants.
//!
//! Product and coproduct both have degree `-shift` in unshifted degrees. No
//! unit or counit is required. The product table is stored for both orders
//! of every pair, so commutativity is something to check, never assume.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{add_scaled, add_term, GradedBasis, GradedElement, LinearMap, Tensor, TensorElement, Vector};
use crate::scalar::Scalar;

#[derive(Clone, Debug)]
pub struct FrobeniusData {
    name: String,
    basis: Arc<GradedBasis>,
    shift: i64,
    product: BTreeMap<(usize, usize), Vector>,
    coproduct: BTreeMap<usize, Tensor>,
    unit: Option<Vector>,
    counit: Option<Vector>,
    tags: BTreeMap<String, String>,
}

/// Structural equality: same basis, shift, tables, unit and counit. The name
/// and tags are descriptive and do not take part.
impl PartialEq for FrobeniusData {
    fn eq(&self, other: &Self) -> bool {
        *self.basis == *other.basis
            && self.shift == other.shift
            && self.product == other.product
            && self.coproduct == other.coproduct
            && self.unit == other.unit
            && self.counit == other.counit
    }
}

pub struct FrobeniusBuilder {
    data: FrobeniusData,
    pending: Option<Error>,
}

impl FrobeniusBuilder {
    fn idx(&mut self, label: &str) -> Option<usize> {
        match self.data.basis.index_of(label) {
            Ok(i) => Some(i),
            Err(e) => {
                self.pending.get_or_insert(e);
                None
            }
        }
    }

    /// Adds `Σ c·target` to `left ⋆ right`.
    pub fn product<S: AsRef<str>>(mut self, left: &str, right: &str, terms: &[(S, Scalar)]) -> Self {
        let (Some(i), Some(j)) = (self.idx(left), self.idx(right)) else {
            return self;
        };
        for (t, c) in terms {
            if let Some(k) = self.idx(t.as_ref()) {
                self.data.product_entry(i, j, k, c.clone());
            }
        }
        self
    }

    /// Adds `Σ c·(x⊗y)` to `δ(source)`.
    pub fn coproduct<S: AsRef<str>>(mut self, source: &str, terms: &[(S, S, Scalar)]) -> Self {
        let Some(i) = self.idx(source) else {
            return self;
        };
        for (x, y, c) in terms {
            if let (Some(a), Some(b)) = (self.idx(x.as_ref()), self.idx(y.as_ref())) {
                self.data.coproduct_entry(i, a, b, c.clone());
            }
        }
        self
    }

    pub fn unit<S: AsRef<str>>(mut self, terms: &[(S, Scalar)]) -> Self {
        let mut v = Vector::new();
        for (t, c) in terms {
            if let Some(k) = self.idx(t.as_ref()) {
                add_term(&mut v, k, c.clone());
            }
        }
        self.data.unit = Some(v);
        self
    }

    pub fn counit<S: AsRef<str>>(mut self, terms: &[(S, Scalar)]) -> Self {
        let mut v = Vector::new();
        for (t, c) in terms {
            if let Some(k) = self.idx(t.as_ref()) {
                add_term(&mut v, k, c.clone());
            }
        }
        self.data.counit = Some(v);
        self
    }

    pub fn tag(mut self, key: &str, value: &str) -> Self {
        self.data.tags.insert(key.to_string(), value.to_string());
        self
    }

    pub fn build(self) -> Result<FrobeniusData> {
        if let Some(e) = self.pending {
            return Err(e);
        }
        self.data.validate()?;
        Ok(self.data)
    }
}

impl FrobeniusData {
    pub fn builder(name: &str, basis: Arc<GradedBasis>, shift: i64) -> FrobeniusBuilder {
        FrobeniusBuilder {
            data: FrobeniusData {
                name: name.to_string(),
                basis,
                shift,
                product: BTreeMap::new(),
                coproduct: BTreeMap::new(),
                unit: None,
                counit: None,
                tags: BTreeMap::new(),
            },
            pending: None,
        }
    }

    pub(crate) fn from_parts(
        name: String,
        basis: Arc<GradedBasis>,
        shift: i64,
        product: BTreeMap<(usize, usize), Vector>,
        coproduct: BTreeMap<usize, Tensor>,
        unit: Option<Vector>,
        counit: Option<Vector>,
        tags: BTreeMap<String, String>,
    ) -> Result<Self> {
        let mut data = FrobeniusData {
            name,
            basis,
            shift,
            product,
            coproduct,
            unit,
            counit,
            tags,
        };
        data.product.retain(|_, v| {
            v.retain(|_, c| !c.is_zero());
            !v.is_empty()
        });
        data.coproduct.retain(|_, t| {
            t.retain(|_, c| !c.is_zero());
            !t.is_empty()
        });
        data.validate()?;
        Ok(data)
    }

    fn product_entry(&mut self, i: usize, j: usize, k: usize, c: Scalar) {
        let slot = self.product.entry((i, j)).or_default();
        add_term(slot, k, c);
        if slot.is_empty() {
            self.product.remove(&(i, j));
        }
    }

    fn coproduct_entry(&mut self, i: usize, a: usize, b: usize, c: Scalar) {
        let slot = self.coproduct.entry(i).or_default();
        add_term(slot, (a, b), c);
        if slot.is_empty() {
            self.coproduct.remove(&i);
        }
    }

    /// Degree homogeneity of every stored structure constant.
    pub fn validate(&self) -> Result<()> {
        let b = &self.basis;
        for (&(i, j), v) in &self.product {
            let expected = b.degree(i) + b.degree(j) - self.shift;
            for &k in v.keys() {
                if b.degree(k) != expected {
                    return Err(Error::Inhomogeneous {
                        context: format!("product({}, {})", b.label(i), b.label(j)),
                        label: b.label(k).to_string(),
                        expected,
                        found: b.degree(k),
                    });
                }
            }
        }
        for (&i, t) in &self.coproduct {
            let expected = b.degree(i) - self.shift;
            for &(x, y) in t.keys() {
                if b.degree(x) + b.degree(y) != expected {
                    return Err(Error::Inhomogeneous {
                        context: format!("coproduct({})", b.label(i)),
                        label: format!("{}⊗{}", b.label(x), b.label(y)),
                        expected,
                        found: b.degree(x) + b.degree(y),
                    });
                }
            }
        }
        Ok(())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: &str) -> Self {
        self.name = name.to_string();
        self
    }

    pub fn basis(&self) -> &Arc<GradedBasis> {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn shift(&self) -> i64 {
        self.shift
    }

    /// Degree in the shifted grading, `deg - shift`.
    pub fn shifted_degree(&self, i: usize) -> i64 {
        self.basis.degree(i) - self.shift
    }

    pub fn tags(&self) -> &BTreeMap<String, String> {
        &self.tags
    }

    pub fn set_tag(&mut self, key: &str, value: &str) {
        self.tags.insert(key.to_string(), value.to_string());
    }

    pub fn has_unit(&self) -> bool {
        self.unit.is_some()
    }

    pub fn has_counit(&self) -> bool {
        self.counit.is_some()
    }

    pub fn unit(&self) -> Option<GradedElement> {
        self.unit
            .as_ref()
            .map(|v| GradedElement::from_vector(&self.basis, v.clone()))
    }

    pub fn counit_value(&self, label: &str) -> Option<Scalar> {
        let i = self.basis.index_of(label).ok()?;
        let c = self.counit.as_ref()?;
        Some(c.get(&i).cloned().unwrap_or_else(Scalar::zero))
    }

    pub fn with_counit(mut self, counit: Option<Vector>) -> Self {
        self.counit = counit;
        self
    }

    pub fn with_unit(mut self, unit: Option<Vector>) -> Self {
        self.unit = unit;
        self
    }

    pub(crate) fn unit_vector(&self) -> Option<&Vector> {
        self.unit.as_ref()
    }

    pub(crate) fn counit_vector(&self) -> Option<&Vector> {
        self.counit.as_ref()
    }

    pub(crate) fn product_table(&self) -> &BTreeMap<(usize, usize), Vector> {
        &self.product
    }

    pub(crate) fn coproduct_table(&self) -> &BTreeMap<usize, Tensor> {
        &self.coproduct
    }

    pub fn coproduct_is_zero(&self) -> bool {
        self.coproduct.is_empty()
    }

    /// Copy with the coproduct replaced by zero.
    pub fn without_coproduct(&self) -> Self {
        let mut out = self.clone();
        out.coproduct.clear();
        out
    }

    pub(crate) fn with_product(&self, product: BTreeMap<(usize, usize), Vector>) -> Result<Self> {
        Self::from_parts(
            self.name.clone(),
            self.basis.clone(),
            self.shift,
            product,
            self.coproduct.clone(),
            self.unit.clone(),
            self.counit.clone(),
            self.tags.clone(),
        )
    }

    pub(crate) fn mul_basis(&self, i: usize, j: usize) -> Option<&Vector> {
        self.product.get(&(i, j))
    }

    pub(crate) fn comul_basis(&self, i: usize) -> Option<&Tensor> {
        self.coproduct.get(&i)
    }

    pub(crate) fn mul_vec(&self, x: &Vector, y: &Vector) -> Vector {
        let mut out = Vector::new();
        for (&i, cx) in x {
            for (&j, cy) in y {
                if let Some(v) = self.product.get(&(i, j)) {
                    add_scaled(&mut out, v, &(cx * cy));
                }
            }
        }
        out
    }

    pub(crate) fn comul_vec(&self, x: &Vector) -> Tensor {
        let mut out = Tensor::new();
        for (&i, c) in x {
            if let Some(t) = self.coproduct.get(&i) {
                add_scaled(&mut out, t, c);
            }
        }
        out
    }

    /// `μ` applied to a tensor, `Σ c·(x⋆y)`.
    pub(crate) fn mul_tensor(&self, t: &Tensor) -> Vector {
        let mut out = Vector::new();
        for (&(i, j), c) in t {
            if let Some(v) = self.product.get(&(i, j)) {
                add_scaled(&mut out, v, c);
            }
        }
        out
    }

    pub(crate) fn counit_apply(&self, x: &Vector) -> Option<Scalar> {
        let c = self.counit.as_ref()?;
        let mut acc = Scalar::zero();
        for (i, v) in x {
            if let Some(w) = c.get(i) {
                acc += v * w;
            }
        }
        Some(acc)
    }

    pub(crate) fn element(&self, v: Vector) -> GradedElement {
        GradedElement::from_vector(&self.basis, v)
    }

    pub(crate) fn tensor_element(&self, t: Tensor) -> TensorElement {
        TensorElement::from_tensor(&self.basis, t)
    }

    pub fn basis_element(&self, label: &str) -> Result<GradedElement> {
        GradedElement::basis_vector(&self.basis, label)
    }

    pub fn element_from<S: AsRef<str>>(&self, terms: &[(S, Scalar)]) -> Result<GradedElement> {
        GradedElement::from_terms(&self.basis, terms)
    }

    /// Product of two elements via the structure constants.
    pub fn apply_product(&self, x: &GradedElement, y: &GradedElement) -> Result<GradedElement> {
        x.check_basis(&self.basis)?;
        y.check_basis(&self.basis)?;
        Ok(self.element(self.mul_vec(x.vector(), y.vector())))
    }

    pub fn apply_coproduct(&self, x: &GradedElement) -> Result<TensorElement> {
        x.check_basis(&self.basis)?;
        Ok(self.tensor_element(self.comul_vec(x.vector())))
    }

    /// `μ` on an element of `A ⊗ A`.
    pub fn multiply_tensor(&self, t: &TensorElement) -> Result<GradedElement> {
        if **t.basis() != *self.basis {
            return Err(Error::BasisMismatch("tensor over a different basis".into()));
        }
        Ok(self.element(self.mul_tensor(t.tensor())))
    }

    /// Right multiplication by a fixed element as a linear map `x ↦ x ⋆ y`.
    pub fn right_multiplication(&self, y: &GradedElement) -> Result<LinearMap> {
        y.check_basis(&self.basis)?;
        let cols = (0..self.dim())
            .map(|i| self.mul_vec(&Vector::from([(i, num_traits::One::one())]), y.vector()))
            .collect();
        Ok(LinearMap::from_columns(&self.basis, &self.basis, cols))
    }

    /// Every basis-pair product is zero or a multiple of one basis vector.
    pub fn has_monomial_product(&self) -> bool {
        self.product.values().all(|v| v.len() <= 1)
    }

    pub fn product_of(&self, left: &str, right: &str) -> Result<GradedElement> {
        let i = self.basis.index_of(left)?;
        let j = self.basis.index_of(right)?;
        Ok(self.element(self.mul_basis(i, j).cloned().unwrap_or_default()))
    }

    pub fn coproduct_of(&self, label: &str) -> Result<TensorElement> {
        let i = self.basis.index_of(label)?;
        Ok(self.tensor_element(self.comul_basis(i).cloned().unwrap_or_default()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    #[test]
    fn inhomogeneous_product_is_rejected() {
        let b = Arc::new(GradedBasis::new([("a", 1), ("b", 2)]).unwrap());
        let err = FrobeniusData::builder("bad", b, 0)
            .product("a", "a", &[("a", int(1))])
            .build()
            .unwrap_err();
        assert!(matches!(err, Error::Inhomogeneous { .. }));
    }

    #[test]
    fn unknown_label_surfaces_at_build() {
        let b = Arc::new(GradedBasis::new([("a", 0)]).unwrap());
        let err = FrobeniusData::builder("bad", b, 0)
            .product("a", "z", &[("a", int(1))])
            .build()
            .unwrap_err();
        assert_eq!(err, Error::UnknownLabel("z".into()));
    }

    #[test]
    fn zero_inputs_give_zero() {
        let b = Arc::new(GradedBasis::new([("u", 0)]).unwrap());
        let a = FrobeniusData::builder("k", b.clone(), 0)
            .product("u", "u", &[("u", int(1))])
            .coproduct("u", &[("u", "u", int(1))])
            .build()
            .unwrap();
        let z = GradedElement::zero(&b);
        let u = a.basis_element("u").unwrap();
        assert!(a.apply_product(&z, &u).unwrap().is_zero());
        assert!(a.apply_coproduct(&z).unwrap().is_zero());
        assert_eq!(a.apply_product(&u, &u).unwrap(), u);
    }
}

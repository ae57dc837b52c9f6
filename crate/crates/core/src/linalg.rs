//! Graded bases, sparse elements, tensors and linear maps.
//!
//! Elements carry a shared handle to their ambient basis so that mixing
//! vectors from different algebras is caught at the API boundary. Internally
//! coefficients are keyed by basis index; labels only appear when rendering.

use std::collections::hash_map::DefaultHasher;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::{self, Scalar};

/// Sparse vector keyed by basis index. Never stores zeros.
pub type Vector = BTreeMap<usize, Scalar>;
/// Sparse element of the tensor square, keyed by index pairs.
pub type Tensor = BTreeMap<(usize, usize), Scalar>;

pub(crate) fn add_term<K: Ord>(map: &mut BTreeMap<K, Scalar>, key: K, coef: Scalar) {
    if coef.is_zero() {
        return;
    }
    use std::collections::btree_map::Entry;
    match map.entry(key) {
        Entry::Vacant(v) => {
            v.insert(coef);
        }
        Entry::Occupied(mut o) => {
            *o.get_mut() += coef;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

pub(crate) fn add_scaled<K: Ord + Clone>(
    acc: &mut BTreeMap<K, Scalar>,
    src: &BTreeMap<K, Scalar>,
    factor: &Scalar,
) {
    if factor.is_zero() {
        return;
    }
    for (k, c) in src {
        add_term(acc, k.clone(), c * factor);
    }
}

pub(crate) fn scaled<K: Ord + Clone>(src: &BTreeMap<K, Scalar>, factor: &Scalar) -> BTreeMap<K, Scalar> {
    let mut out = BTreeMap::new();
    add_scaled(&mut out, src, factor);
    out
}

/// Ordered list of `(label, degree)` pairs. Degrees are unshifted.
#[derive(Clone, Debug)]
pub struct GradedBasis {
    entries: Vec<(String, i64)>,
    index: HashMap<String, usize>,
    fingerprint: u64,
}

impl PartialEq for GradedBasis {
    fn eq(&self, other: &Self) -> bool {
        self.fingerprint == other.fingerprint && self.entries == other.entries
    }
}

impl Eq for GradedBasis {}

impl GradedBasis {
    pub fn new<S: Into<String>>(entries: impl IntoIterator<Item = (S, i64)>) -> Result<Self> {
        let entries: Vec<(String, i64)> = entries.into_iter().map(|(l, d)| (l.into(), d)).collect();
        let mut index = HashMap::with_capacity(entries.len());
        for (i, (label, _)) in entries.iter().enumerate() {
            if index.insert(label.clone(), i).is_some() {
                return Err(Error::DuplicateLabel(label.clone()));
            }
        }
        let mut h = DefaultHasher::new();
        entries.hash(&mut h);
        Ok(GradedBasis {
            entries,
            index,
            fingerprint: h.finish(),
        })
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn label(&self, i: usize) -> &str {
        &self.entries[i].0
    }

    pub fn degree(&self, i: usize) -> i64 {
        self.entries[i].1
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.index
            .get(label)
            .copied()
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    pub fn entries(&self) -> &[(String, i64)] {
        &self.entries
    }

    pub fn labels(&self) -> impl Iterator<Item = &str> {
        self.entries.iter().map(|(l, _)| l.as_str())
    }

    pub fn fingerprint(&self) -> u64 {
        self.fingerprint
    }

    pub fn render_vector(&self, v: &Vector) -> String {
        render_terms(v.iter().map(|(&i, c)| (self.label(i).to_string(), c)))
    }

    pub fn render_tensor(&self, t: &Tensor) -> String {
        render_terms(
            t.iter()
                .map(|(&(i, j), c)| (format!("{}⊗{}", self.label(i), self.label(j)), c)),
        )
    }
}

pub(crate) fn render_terms<'a>(terms: impl Iterator<Item = (String, &'a Scalar)>) -> String {
    let mut out = String::new();
    for (label, c) in terms {
        let neg = scalar::is_negative(c);
        let mag = if neg { -c.clone() } else { c.clone() };
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if !mag.is_one() {
            out.push_str(&scalar::format(&mag));
            out.push('*');
        }
        out.push_str(&label);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn same_basis(a: &GradedBasis, b: &GradedBasis) -> Result<()> {
    if a == b {
        Ok(())
    } else {
        Err(Error::BasisMismatch(format!(
            "basis {:016x} vs {:016x}",
            a.fingerprint, b.fingerprint
        )))
    }
}

/// Sparse linear combination of basis vectors.
#[derive(Clone)]
pub struct GradedElement {
    basis: Arc<GradedBasis>,
    terms: Vector,
}

impl PartialEq for GradedElement {
    fn eq(&self, other: &Self) -> bool {
        *self.basis == *other.basis && self.terms == other.terms
    }
}

impl fmt::Debug for GradedElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GradedElement({self})")
    }
}

impl fmt::Display for GradedElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.basis.render_vector(&self.terms))
    }
}

impl GradedElement {
    pub fn zero(basis: &Arc<GradedBasis>) -> Self {
        GradedElement {
            basis: basis.clone(),
            terms: Vector::new(),
        }
    }

    pub fn basis_vector(basis: &Arc<GradedBasis>, label: &str) -> Result<Self> {
        let i = basis.index_of(label)?;
        Ok(Self::from_vector(basis, Vector::from([(i, Scalar::one())])))
    }

    pub fn from_terms<S: AsRef<str>>(basis: &Arc<GradedBasis>, terms: &[(S, Scalar)]) -> Result<Self> {
        let mut v = Vector::new();
        for (label, c) in terms {
            add_term(&mut v, basis.index_of(label.as_ref())?, c.clone());
        }
        Ok(Self::from_vector(basis, v))
    }

    pub(crate) fn from_vector(basis: &Arc<GradedBasis>, mut terms: Vector) -> Self {
        terms.retain(|_, c| !c.is_zero());
        GradedElement {
            basis: basis.clone(),
            terms,
        }
    }

    pub fn basis(&self) -> &Arc<GradedBasis> {
        &self.basis
    }

    pub(crate) fn vector(&self) -> &Vector {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, label: &str) -> Scalar {
        self.basis
            .index_of(label)
            .ok()
            .and_then(|i| self.terms.get(&i).cloned())
            .unwrap_or_else(Scalar::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&str, &Scalar)> {
        self.terms.iter().map(|(&i, c)| (self.basis.label(i), c))
    }

    /// Common unshifted degree of all terms, or `None` for zero and
    /// inhomogeneous elements.
    pub fn degree(&self) -> Option<i64> {
        let mut degs = self.terms.keys().map(|&i| self.basis.degree(i));
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    pub fn scale(&self, factor: &Scalar) -> Self {
        Self::from_vector(&self.basis, scaled(&self.terms, factor))
    }

    pub fn check_basis(&self, basis: &GradedBasis) -> Result<()> {
        same_basis(&self.basis, basis)
    }
}

/// Exact sparse sum `Σ c_i x_i`. Every element must live over the same basis.
pub fn linear_combine(coeffs: &[(Scalar, GradedElement)]) -> Result<GradedElement> {
    let Some((_, first)) = coeffs.first() else {
        return Err(Error::Precondition(
            "linear_combine needs at least one element to fix the basis".into(),
        ));
    };
    let mut acc = Vector::new();
    for (c, x) in coeffs {
        same_basis(&first.basis, &x.basis)?;
        add_scaled(&mut acc, &x.terms, c);
    }
    Ok(GradedElement::from_vector(&first.basis, acc))
}

/// Element of `A ⊗ A` over a single basis.
#[derive(Clone)]
pub struct TensorElement {
    basis: Arc<GradedBasis>,
    terms: Tensor,
}

impl PartialEq for TensorElement {
    fn eq(&self, other: &Self) -> bool {
        *self.basis == *other.basis && self.terms == other.terms
    }
}

impl fmt::Debug for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TensorElement({self})")
    }
}

impl fmt::Display for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.basis.render_tensor(&self.terms))
    }
}

impl TensorElement {
    pub fn zero(basis: &Arc<GradedBasis>) -> Self {
        TensorElement {
            basis: basis.clone(),
            terms: Tensor::new(),
        }
    }

    pub fn from_terms<S: AsRef<str>>(
        basis: &Arc<GradedBasis>,
        terms: &[(S, S, Scalar)],
    ) -> Result<Self> {
        let mut t = Tensor::new();
        for (l, r, c) in terms {
            let key = (basis.index_of(l.as_ref())?, basis.index_of(r.as_ref())?);
            add_term(&mut t, key, c.clone());
        }
        Ok(Self::from_tensor(basis, t))
    }

    pub(crate) fn from_tensor(basis: &Arc<GradedBasis>, mut terms: Tensor) -> Self {
        terms.retain(|_, c| !c.is_zero());
        TensorElement {
            basis: basis.clone(),
            terms,
        }
    }

    pub(crate) fn tensor(&self) -> &Tensor {
        &self.terms
    }

    pub fn basis(&self) -> &Arc<GradedBasis> {
        &self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, left: &str, right: &str) -> Scalar {
        match (self.basis.index_of(left), self.basis.index_of(right)) {
            (Ok(i), Ok(j)) => self.terms.get(&(i, j)).cloned().unwrap_or_else(Scalar::zero),
            _ => Scalar::zero(),
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&str, &str, &Scalar)> {
        self.terms
            .iter()
            .map(|(&(i, j), c)| (self.basis.label(i), self.basis.label(j), c))
    }
}

/// Linear map between two graded bases, stored column by column.
#[derive(Clone)]
pub struct LinearMap {
    source: Arc<GradedBasis>,
    target: Arc<GradedBasis>,
    columns: Vec<Vector>,
}

impl PartialEq for LinearMap {
    fn eq(&self, other: &Self) -> bool {
        *self.source == *other.source
            && *self.target == *other.target
            && self.columns == other.columns
    }
}

impl fmt::Debug for LinearMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut m = f.debug_map();
        for (i, col) in self.columns.iter().enumerate() {
            m.entry(&self.source.label(i), &self.target.render_vector(col));
        }
        m.finish()
    }
}

impl LinearMap {
    pub fn zero(source: &Arc<GradedBasis>, target: &Arc<GradedBasis>) -> Self {
        LinearMap {
            source: source.clone(),
            target: target.clone(),
            columns: vec![Vector::new(); source.len()],
        }
    }

    pub fn identity(basis: &Arc<GradedBasis>) -> Self {
        let columns = (0..basis.len())
            .map(|i| Vector::from([(i, Scalar::one())]))
            .collect();
        LinearMap {
            source: basis.clone(),
            target: basis.clone(),
            columns,
        }
    }

    /// Build from `(source label, [(target label, coefficient)])` entries;
    /// unlisted source vectors map to zero.
    pub fn from_entries<S: AsRef<str>>(
        source: &Arc<GradedBasis>,
        target: &Arc<GradedBasis>,
        entries: &[(S, Vec<(S, Scalar)>)],
    ) -> Result<Self> {
        let mut map = Self::zero(source, target);
        for (src, image) in entries {
            let i = source.index_of(src.as_ref())?;
            for (dst, c) in image {
                add_term(&mut map.columns[i], target.index_of(dst.as_ref())?, c.clone());
            }
        }
        Ok(map)
    }

    pub(crate) fn from_columns(
        source: &Arc<GradedBasis>,
        target: &Arc<GradedBasis>,
        mut columns: Vec<Vector>,
    ) -> Self {
        assert_eq!(columns.len(), source.len());
        for col in &mut columns {
            col.retain(|_, c| !c.is_zero());
        }
        LinearMap {
            source: source.clone(),
            target: target.clone(),
            columns,
        }
    }

    pub fn source(&self) -> &Arc<GradedBasis> {
        &self.source
    }

    pub fn target(&self) -> &Arc<GradedBasis> {
        &self.target
    }

    pub(crate) fn column(&self, i: usize) -> &Vector {
        &self.columns[i]
    }

    pub(crate) fn apply_vector(&self, v: &Vector) -> Vector {
        let mut out = Vector::new();
        for (&i, c) in v {
            add_scaled(&mut out, &self.columns[i], c);
        }
        out
    }

    pub(crate) fn apply_tensor(&self, t: &Tensor) -> Tensor {
        let mut out = Tensor::new();
        for (&(i, j), c) in t {
            for (&x, cx) in &self.columns[i] {
                for (&y, cy) in &self.columns[j] {
                    add_term(&mut out, (x, y), c * cx * cy);
                }
            }
        }
        out
    }

    pub fn apply(&self, x: &GradedElement) -> Result<GradedElement> {
        same_basis(&self.source, x.basis())?;
        Ok(GradedElement::from_vector(&self.target, self.apply_vector(x.vector())))
    }

    pub fn image_of(&self, label: &str) -> Result<GradedElement> {
        let i = self.source.index_of(label)?;
        Ok(GradedElement::from_vector(&self.target, self.columns[i].clone()))
    }

    /// `self ∘ first`.
    pub fn compose(&self, first: &LinearMap) -> Result<LinearMap> {
        same_basis(&first.target, &self.source)?;
        let columns = first.columns.iter().map(|c| self.apply_vector(c)).collect();
        Ok(LinearMap::from_columns(&first.source, &self.target, columns))
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(|c| c.is_empty())
    }

    /// `(source label, image)` pairs, in basis order.
    pub fn entries(&self) -> impl Iterator<Item = (&str, GradedElement)> + '_ {
        self.columns.iter().enumerate().map(move |(i, c)| {
            (
                self.source.label(i),
                GradedElement::from_vector(&self.target, c.clone()),
            )
        })
    }
}

//! Positive-boundary 1+1 TQFT operations from Frobenius data.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::checks::check_snake;
use crate::error::{Error, Result};
use crate::frobenius::FrobeniusData;
use crate::linalg::{add_term, render_terms, GradedBasis, GradedElement, LinearMap, Vector};
use crate::scalar::{self, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurfaceSignature {
    pub inputs: usize,
    pub outputs: usize,
    pub genus: usize,
}

impl SurfaceSignature {
    pub fn new(inputs: usize, outputs: usize, genus: usize) -> Self {
        SurfaceSignature {
            inputs,
            outputs,
            genus,
        }
    }
}

/// Element of `A^{⊗q}` keyed by index tuples; arity 0 holds a scalar under
/// the empty key.
#[derive(Clone, PartialEq)]
pub struct MultiTensor {
    basis: Arc<GradedBasis>,
    arity: usize,
    terms: BTreeMap<Vec<usize>, Scalar>,
}

impl MultiTensor {
    fn from_vector(basis: &Arc<GradedBasis>, v: &Vector) -> Self {
        MultiTensor {
            basis: basis.clone(),
            arity: 1,
            terms: v.iter().map(|(&i, c)| (vec![i], c.clone())).collect(),
        }
    }

    fn scalar(basis: &Arc<GradedBasis>, c: Scalar) -> Self {
        let mut terms = BTreeMap::new();
        add_term(&mut terms, Vec::new(), c);
        MultiTensor {
            basis: basis.clone(),
            arity: 0,
            terms,
        }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, labels: &[&str]) -> Result<Scalar> {
        let key = labels
            .iter()
            .map(|l| self.basis.index_of(l))
            .collect::<Result<Vec<_>>>()?;
        Ok(self.terms.get(&key).cloned().unwrap_or_else(scalar::zero))
    }

    /// The value of an arity-0 tensor.
    pub fn as_scalar(&self) -> Option<Scalar> {
        (self.arity == 0).then(|| self.terms.get(&Vec::new()).cloned().unwrap_or_else(scalar::zero))
    }

    /// The arity-1 tensor as an element of `A`.
    pub fn to_element(&self) -> Option<GradedElement> {
        (self.arity == 1).then(|| {
            GradedElement::from_vector(&self.basis, self.terms.iter().map(|(k, c)| (k[0], c.clone())).collect())
        })
    }

    pub fn terms(&self) -> impl Iterator<Item = (Vec<&str>, &Scalar)> {
        self.terms
            .iter()
            .map(|(k, c)| (k.iter().map(|&i| self.basis.label(i)).collect(), c))
    }

    /// `(label tuple, "p/q")` pairs in key order.
    pub fn to_pairs(&self) -> Vec<(Vec<String>, String)> {
        self.terms()
            .map(|(k, c)| (k.into_iter().map(String::from).collect(), scalar::format(c)))
            .collect()
    }
}

impl fmt::Display for MultiTensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(s) = self.as_scalar() {
            return f.write_str(&scalar::format(&s));
        }
        f.write_str(&render_terms(
            self.terms.iter().map(|(k, c)| {
                let label: Vec<&str> = k.iter().map(|&i| self.basis.label(i)).collect();
                (label.join("⊗"), c)
            }),
        ))
    }
}

impl fmt::Debug for MultiTensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiTensor({self})")
    }
}

/// `H = μ∘δ`.
pub fn handle_operator(a: &FrobeniusData) -> LinearMap {
    let cols = (0..a.dim())
        .map(|i| {
            a.comul_basis(i)
                .map(|t| a.mul_tensor(t))
                .unwrap_or_default()
        })
        .collect();
    LinearMap::from_columns(a.basis(), a.basis(), cols)
}

fn handles(a: &FrobeniusData, mut x: Vector, genus: usize) -> Vector {
    if genus == 0 {
        return x;
    }
    let h = handle_operator(a);
    for _ in 0..genus {
        x = h.apply_vector(&x);
    }
    x
}

/// `δ^{(q-1)} ∘ H^g ∘ μ^{(p-1)}` with left-nested products and coproducts
/// split on the first leg. `p = 0` starts from the unit; `q = 0` ends with
/// the counit and yields an arity-0 tensor.
pub fn surface_operation(a: &FrobeniusData, sig: SurfaceSignature, args: &[GradedElement]) -> Result<MultiTensor> {
    if args.len() != sig.inputs {
        return Err(Error::Precondition(format!(
            "signature expects {} inputs, got {}",
            sig.inputs,
            args.len()
        )));
    }
    for x in args {
        x.check_basis(a.basis())?;
    }
    let start = match args.split_first() {
        None => a
            .unit_vector()
            .cloned()
            .ok_or_else(|| Error::Precondition(format!("{} has no unit; inputs = 0 is undefined", a.name())))?,
        Some((first, rest)) => rest
            .iter()
            .fold(first.vector().clone(), |acc, y| a.mul_vec(&acc, y.vector())),
    };
    let x = handles(a, start, sig.genus);

    if sig.outputs == 0 {
        let c = a.counit_apply(&x).ok_or_else(|| {
            Error::Precondition(format!("{} has no counit; outputs = 0 is undefined", a.name()))
        })?;
        return Ok(MultiTensor::scalar(a.basis(), c));
    }
    let mut t = MultiTensor::from_vector(a.basis(), &x);
    for _ in 1..sig.outputs {
        let mut next = BTreeMap::new();
        for (key, c) in &t.terms {
            if let Some(split) = a.comul_basis(key[0]) {
                for (&(l, r), d) in split {
                    let mut k = Vec::with_capacity(key.len() + 1);
                    k.extend([l, r]);
                    k.extend_from_slice(&key[1..]);
                    add_term(&mut next, k, c * d);
                }
            }
        }
        t.terms = next;
        t.arity += 1;
    }
    Ok(t)
}

/// `ε(H^g(1))`. Requires a unit and a counit passing the snake identities;
/// the counit of the built-in algebras is a calibration, not part of the
/// structure, so the result is only meaningful relative to it.
pub fn closed_invariant(a: &FrobeniusData, genus: usize) -> Result<Scalar> {
    if genus == 0 {
        return Err(Error::Precondition("closed invariants are defined for genus ≥ 1".into()));
    }
    let report = check_snake(a)?;
    if !report.passed() {
        return Err(Error::Precondition(format!(
            "{}: counit fails the snake identities",
            a.name()
        )));
    }
    let unit = a.unit_vector().cloned().unwrap_or_default();
    let x = handles(a, unit, genus);
    Ok(a.counit_apply(&x).expect("snake check requires a counit"))
}

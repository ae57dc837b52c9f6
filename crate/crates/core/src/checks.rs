//! Exhaustive axiom checks over basis tuples.
//!
//! Every check walks basis tuples in index order and records each violation
//! with both sides rendered, so two runs on the same data produce identical
//! reports. Koszul signs use shifted degrees `deg - shift`.
//!
//! The coproduct has shifted degree `-2·shift`, which is even, so moving it
//! past an element never produces a sign. The only signs that appear are the
//! flip signs in (co)commutativity.

use std::fmt;

use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::frobenius::FrobeniusData;
use crate::linalg::{add_scaled, add_term, LinearMap, Tensor, Vector};
use crate::scalar::{self, Scalar};

/// Restricts which basis tuples a check visits. Used for truncated
/// algebras where products leaving the truncation window are dropped.
pub type TupleFilter<'a> = &'a dyn Fn(&[usize]) -> bool;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub witness: Vec<String>,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub check: String,
    pub subject: String,
    pub checked: usize,
    pub skipped: usize,
    pub violations: Vec<Violation>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl CheckReport {
    pub fn new(check: &str, subject: &str) -> Self {
        CheckReport {
            check: check.to_string(),
            subject: subject.to_string(),
            checked: 0,
            skipped: 0,
            violations: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn first_witness(&self) -> Option<&[String]> {
        self.violations.first().map(|v| v.witness.as_slice())
    }

    pub fn has_witness(&self, witness: &[&str]) -> bool {
        self.violations
            .iter()
            .any(|v| v.witness.iter().map(String::as_str).eq(witness.iter().copied()))
    }

    pub(crate) fn violation(&mut self, witness: Vec<String>, detail: String) {
        self.violations.push(Violation { witness, detail });
    }

    pub(crate) fn visit(&mut self, admitted: bool) -> bool {
        if admitted {
            self.checked += 1;
        } else {
            self.skipped += 1;
        }
        admitted
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {} on {}: {} checked",
            if self.passed() { "PASS" } else { "FAIL" },
            self.check,
            self.subject,
            self.checked
        )?;
        if self.skipped > 0 {
            write!(f, ", {} skipped", self.skipped)?;
        }
        if !self.passed() {
            write!(f, ", {} violations", self.violations.len())?;
        }
        for n in &self.notes {
            write!(f, "\n  note: {n}")?;
        }
        for v in &self.violations {
            write!(f, "\n  ({}): {}", v.witness.join(", "), v.detail)?;
        }
        Ok(())
    }
}

fn labels(a: &FrobeniusData, idx: &[usize]) -> Vec<String> {
    idx.iter().map(|&i| a.basis().label(i).to_string()).collect()
}

fn unit_vec(i: usize) -> Vector {
    Vector::from([(i, Scalar::one())])
}

fn all(_: &[usize]) -> bool {
    true
}

pub fn check_associativity(a: &FrobeniusData) -> CheckReport {
    check_associativity_within(a, &all)
}

/// `(x⋆y)⋆z = x⋆(y⋆z)` on all admitted basis triples.
pub fn check_associativity_within(a: &FrobeniusData, filter: TupleFilter<'_>) -> CheckReport {
    let mut report = CheckReport::new("associativity", a.name());
    let n = a.dim();
    let empty = Vector::new();
    for i in 0..n {
        for j in 0..n {
            let ij = a.mul_basis(i, j).unwrap_or(&empty);
            for k in 0..n {
                if !report.visit(filter(&[i, j, k])) {
                    continue;
                }
                let left = a.mul_vec(ij, &unit_vec(k));
                let jk = a.mul_basis(j, k).unwrap_or(&empty);
                let right = a.mul_vec(&unit_vec(i), jk);
                if left != right {
                    let b = a.basis();
                    report.violation(
                        labels(a, &[i, j, k]),
                        format!(
                            "(ab)c = {}, a(bc) = {}",
                            b.render_vector(&left),
                            b.render_vector(&right)
                        ),
                    );
                }
            }
        }
    }
    report
}

pub fn check_graded_commutativity(a: &FrobeniusData) -> CheckReport {
    check_graded_commutativity_within(a, &all)
}

/// `x⋆y = (-1)^{|x||y|} y⋆x` with shifted degrees, over unordered pairs.
pub fn check_graded_commutativity_within(a: &FrobeniusData, filter: TupleFilter<'_>) -> CheckReport {
    let mut report = CheckReport::new("graded commutativity", a.name());
    let n = a.dim();
    let empty = Vector::new();
    for i in 0..n {
        for j in i..n {
            if !report.visit(filter(&[i, j])) {
                continue;
            }
            let ab = a.mul_basis(i, j).unwrap_or(&empty);
            let sign = scalar::sign(a.shifted_degree(i) * a.shifted_degree(j));
            let mut ba = Vector::new();
            add_scaled(&mut ba, a.mul_basis(j, i).unwrap_or(&empty), &sign);
            if *ab != ba {
                let b = a.basis();
                report.violation(
                    labels(a, &[i, j]),
                    format!(
                        "ab = {}, sign·ba = {}",
                        b.render_vector(ab),
                        b.render_vector(&ba)
                    ),
                );
            }
        }
    }
    report
}

fn comul_left(a: &FrobeniusData, t: &Tensor) -> Vec<((usize, usize, usize), Scalar)> {
    // (δ⊗1)
    let mut out = std::collections::BTreeMap::new();
    for (&(x, y), c) in t {
        if let Some(dx) = a.comul_basis(x) {
            for (&(p, q), d) in dx {
                add_term(&mut out, (p, q, y), c * d);
            }
        }
    }
    out.into_iter().collect()
}

fn comul_right(a: &FrobeniusData, t: &Tensor) -> Vec<((usize, usize, usize), Scalar)> {
    // (1⊗δ)
    let mut out = std::collections::BTreeMap::new();
    for (&(x, y), c) in t {
        if let Some(dy) = a.comul_basis(y) {
            for (&(p, q), d) in dy {
                add_term(&mut out, (x, p, q), c * d);
            }
        }
    }
    out.into_iter().collect()
}

fn render_triples(a: &FrobeniusData, t: &[((usize, usize, usize), Scalar)]) -> String {
    let b = a.basis();
    crate::linalg::render_terms(t.iter().map(|((x, y, z), c)| {
        (format!("{}⊗{}⊗{}", b.label(*x), b.label(*y), b.label(*z)), c)
    }))
}

pub fn check_coassociativity(a: &FrobeniusData) -> CheckReport {
    let mut report = CheckReport::new("coassociativity", a.name());
    let empty = Tensor::new();
    for i in 0..a.dim() {
        report.visit(true);
        let d = a.comul_basis(i).unwrap_or(&empty);
        let left = comul_left(a, d);
        let right = comul_right(a, d);
        if left != right {
            report.violation(
                labels(a, &[i]),
                format!(
                    "(δ⊗1)δ = {}, (1⊗δ)δ = {}",
                    render_triples(a, &left),
                    render_triples(a, &right)
                ),
            );
        }
    }
    report
}

/// `τ∘δ = δ` where `τ(x⊗y) = (-1)^{|x||y|} y⊗x` in shifted degrees.
pub fn check_cocommutativity(a: &FrobeniusData) -> CheckReport {
    let mut report = CheckReport::new("cocommutativity", a.name());
    let empty = Tensor::new();
    for i in 0..a.dim() {
        report.visit(true);
        let d = a.comul_basis(i).unwrap_or(&empty);
        let mut flipped = Tensor::new();
        for (&(x, y), c) in d {
            let s = scalar::sign(a.shifted_degree(x) * a.shifted_degree(y));
            add_term(&mut flipped, (y, x), c * s);
        }
        if *d != flipped {
            let b = a.basis();
            report.violation(
                labels(a, &[i]),
                format!("δ = {}, τδ = {}", b.render_tensor(d), b.render_tensor(&flipped)),
            );
        }
    }
    report
}

pub fn check_frobenius(a: &FrobeniusData) -> CheckReport {
    check_frobenius_within(a, &all)
}

/// Both compatibility identities `δ(a⋆b) = (μ⊗1)(a⊗δb) = (1⊗μ)(δa⊗b)`.
pub fn check_frobenius_within(a: &FrobeniusData, filter: TupleFilter<'_>) -> CheckReport {
    let mut report = CheckReport::new("frobenius", a.name());
    let n = a.dim();
    let empty_v = Vector::new();
    let empty_t = Tensor::new();
    for i in 0..n {
        for j in 0..n {
            if !report.visit(filter(&[i, j])) {
                continue;
            }
            let lhs = a.comul_vec(a.mul_basis(i, j).unwrap_or(&empty_v));
            let mut middle = Tensor::new();
            for (&(x, y), c) in a.comul_basis(j).unwrap_or(&empty_t) {
                for (&z, d) in a.mul_basis(i, x).unwrap_or(&empty_v) {
                    add_term(&mut middle, (z, y), c * d);
                }
            }
            let mut right = Tensor::new();
            for (&(x, y), c) in a.comul_basis(i).unwrap_or(&empty_t) {
                for (&z, d) in a.mul_basis(y, j).unwrap_or(&empty_v) {
                    add_term(&mut right, (x, z), c * d);
                }
            }
            if lhs != middle || lhs != right {
                let b = a.basis();
                report.violation(
                    labels(a, &[i, j]),
                    format!(
                        "δ(ab) = {}, (μ⊗1)(1⊗δ) = {}, (1⊗μ)(δ⊗1) = {}",
                        b.render_tensor(&lhs),
                        b.render_tensor(&middle),
                        b.render_tensor(&right)
                    ),
                );
            }
        }
    }
    report
}

/// Counit identities `(ε⊗1)δ = 1 = (1⊗ε)δ` and the unit laws, per basis
/// vector. Needs both unit and counit.
pub fn check_snake(a: &FrobeniusData) -> Result<CheckReport> {
    let (Some(unit), Some(counit)) = (a.unit_vector(), a.counit_vector()) else {
        return Err(Error::Precondition(format!(
            "check_snake on {} needs both unit and counit",
            a.name()
        )));
    };
    let mut report = CheckReport::new("snake", a.name());
    let b = a.basis();
    let empty = Tensor::new();
    for i in 0..a.dim() {
        report.visit(true);
        let e = unit_vec(i);
        let d = a.comul_basis(i).unwrap_or(&empty);
        let mut left = Vector::new();
        let mut right = Vector::new();
        for (&(x, y), c) in d {
            if let Some(w) = counit.get(&x) {
                add_term(&mut left, y, c * w);
            }
            if let Some(w) = counit.get(&y) {
                add_term(&mut right, x, c * w);
            }
        }
        if left != e || right != e {
            report.violation(
                labels(a, &[i]),
                format!(
                    "(ε⊗1)δ = {}, (1⊗ε)δ = {}",
                    b.render_vector(&left),
                    b.render_vector(&right)
                ),
            );
        }
        let ue = a.mul_vec(unit, &e);
        let eu = a.mul_vec(&e, unit);
        if ue != e || eu != e {
            report.violation(
                vec!["unit".to_string(), b.label(i).to_string()],
                format!(
                    "1⋆x = {}, x⋆1 = {}",
                    b.render_vector(&ue),
                    b.render_vector(&eu)
                ),
            );
        }
    }
    Ok(report)
}

/// `f(x⋆y) = f(x)⋆f(y)` on all pairs and `(f⊗f)δ = δf` on all basis vectors.
pub fn check_morphism(f: &LinearMap, a: &FrobeniusData, b: &FrobeniusData) -> Result<CheckReport> {
    if **f.source() != **a.basis() {
        return Err(Error::BasisMismatch(format!(
            "map source is not the basis of {}",
            a.name()
        )));
    }
    if **f.target() != **b.basis() {
        return Err(Error::BasisMismatch(format!(
            "map target is not the basis of {}",
            b.name()
        )));
    }
    let mut report = CheckReport::new("morphism", &format!("{} -> {}", a.name(), b.name()));
    let empty_v = Vector::new();
    let empty_t = Tensor::new();
    let tb = b.basis();
    for i in 0..a.dim() {
        for j in 0..a.dim() {
            report.visit(true);
            let left = f.apply_vector(a.mul_basis(i, j).unwrap_or(&empty_v));
            let right = b.mul_vec(f.column(i), f.column(j));
            if left != right {
                report.violation(
                    labels(a, &[i, j]),
                    format!(
                        "f(ab) = {}, f(a)f(b) = {}",
                        tb.render_vector(&left),
                        tb.render_vector(&right)
                    ),
                );
            }
        }
    }
    for i in 0..a.dim() {
        report.visit(true);
        let left = f.apply_tensor(a.comul_basis(i).unwrap_or(&empty_t));
        let right = b.comul_vec(f.column(i));
        if left != right {
            report.violation(
                vec!["δ".to_string(), a.basis().label(i).to_string()],
                format!(
                    "(f⊗f)δ = {}, δf = {}",
                    tb.render_tensor(&left),
                    tb.render_tensor(&right)
                ),
            );
        }
    }
    Ok(report)
}

/// The product-side suite: associativity and graded commutativity.
pub fn product_suite(a: &FrobeniusData) -> Vec<CheckReport> {
    vec![check_associativity(a), check_graded_commutativity(a)]
}

/// Every axiom check that applies to `a`; the snake check only runs when a
/// unit and counit are present.
pub fn full_suite(a: &FrobeniusData) -> Vec<CheckReport> {
    let mut out = vec![
        check_associativity(a),
        check_graded_commutativity(a),
        check_coassociativity(a),
        check_cocommutativity(a),
        check_frobenius(a),
    ];
    if let Ok(r) = check_snake(a) {
        out.push(r);
    }
    out
}

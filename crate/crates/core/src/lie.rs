//! The dual string product on `H^•([G/G]) = S(x_1..x_l) ⊗ Λ(y_1..y_l)` for a
//! compact connected Lie group, with `|x_i| = 2d_i` and `|y_i| = 2d_i + 1`.
//!
//! `(P y^ε) ⋆ (Q y^ε') = PQ · y^{ε+ε'-1}` with `y_i^{-1} = 0`; the dual
//! coproduct is zero. Polynomial parts are truncated at a total `x`-degree
//! bound for exhaustive checks.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::checks::CheckReport;
use crate::error::{Error, Result};
use crate::frobenius::FrobeniusData;
use crate::linalg::{add_term, GradedBasis, Vector};
use crate::scalar::{self, Scalar};

pub const DEFAULT_TRUNCATION: u32 = 10;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExponentProfile {
    pub name: Option<String>,
    pub exponents: Vec<u32>,
    pub dimension: u32,
}

impl ExponentProfile {
    /// Exponents in any order; the dimension is `l + 2Σd_i`.
    pub fn custom(exponents: &[u32]) -> Result<Self> {
        if exponents.is_empty() || exponents.contains(&0) {
            return Err(Error::Precondition("exponents must be a nonempty list of positive integers".into()));
        }
        let mut exponents = exponents.to_vec();
        exponents.sort_unstable();
        let dimension = exponents.len() as u32 + 2 * exponents.iter().sum::<u32>();
        Ok(ExponentProfile {
            name: None,
            exponents,
            dimension,
        })
    }

    /// A profile with a stated dimension, rejected unless it equals `l + 2Σd_i`.
    pub fn with_dimension(name: &str, exponents: &[u32], dimension: u32) -> Result<Self> {
        let mut p = Self::custom(exponents)?;
        if p.dimension != dimension {
            return Err(Error::Precondition(format!(
                "{name}: exponents {:?} give dimension {}, not {dimension}",
                p.exponents, p.dimension
            )));
        }
        p.name = Some(name.to_string());
        Ok(p)
    }

    pub fn rank(&self) -> usize {
        self.exponents.len()
    }

    pub fn dimension_identity_holds(&self) -> bool {
        self.dimension == self.rank() as u32 + 2 * self.exponents.iter().sum::<u32>()
    }

    pub fn display_name(&self) -> String {
        self.name
            .clone()
            .unwrap_or_else(|| format!("exponents {:?}", self.exponents))
    }
}

pub fn builtin_profile_names() -> [&'static str; 7] {
    ["SU(2)", "SU(3)", "SU(4)", "SU(5)", "SO(5)", "Sp(2)", "G2"]
}

/// Accepts `SU(n)` or `SUn` for `n ≤ 5`, `SO(5)`, `Sp(2)` and `G2`.
pub fn builtin_profile(name: &str) -> Result<ExponentProfile> {
    let key: String = name.chars().filter(|c| !matches!(c, '(' | ')' | ' ')).collect();
    let (canonical, exps, dim): (&str, Vec<u32>, u32) = match key.to_ascii_uppercase().as_str() {
        "SU2" => ("SU(2)", vec![1], 3),
        "SU3" => ("SU(3)", vec![1, 2], 8),
        "SU4" => ("SU(4)", vec![1, 2, 3], 15),
        "SU5" => ("SU(5)", vec![1, 2, 3, 4], 24),
        "SO5" => ("SO(5)", vec![1, 3], 10),
        "SP2" => ("Sp(2)", vec![1, 3], 10),
        "G2" => ("G2", vec![1, 5], 14),
        _ => return Err(Error::UnknownName(name.to_string())),
    };
    ExponentProfile::with_dimension(canonical, &exps, dim)
}

/// `x^a y^ε`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Monomial {
    pub x: Vec<u32>,
    pub y: Vec<bool>,
}

/// `x^a x'^{a'} y^ε y'^{ε'}` over the doubled generators.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial2 {
    pub x: Vec<u32>,
    pub x2: Vec<u32>,
    pub y: Vec<bool>,
    pub y2: Vec<bool>,
}

fn render(parts: &mut Vec<String>, name: &str, exps: impl Iterator<Item = u32>) {
    for (i, a) in exps.enumerate() {
        match a {
            0 => {}
            1 => parts.push(format!("{}{}{}", &name[..1], i + 1, &name[1..])),
            _ => parts.push(format!("{}{}{}^{a}", &name[..1], i + 1, &name[1..])),
        }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        render(&mut parts, "x", self.x.iter().copied());
        render(&mut parts, "y", self.y.iter().map(|&e| e as u32));
        if parts.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&parts.join("*"))
        }
    }
}

impl fmt::Display for Monomial2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        render(&mut parts, "x", self.x.iter().copied());
        render(&mut parts, "x'", self.x2.iter().copied());
        render(&mut parts, "y", self.y.iter().map(|&e| e as u32));
        render(&mut parts, "y'", self.y2.iter().map(|&e| e as u32));
        if parts.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&parts.join("*"))
        }
    }
}

impl Monomial {
    pub fn one(rank: usize) -> Self {
        Monomial {
            x: vec![0; rank],
            y: vec![false; rank],
        }
    }

    /// `y_1 ⋯ y_l`, the unit of the dual product.
    pub fn top_y(rank: usize) -> Self {
        Monomial {
            x: vec![0; rank],
            y: vec![true; rank],
        }
    }

    pub fn x_degree(&self) -> u32 {
        self.x.iter().sum()
    }

    pub fn degree(&self, p: &ExponentProfile) -> i64 {
        p.exponents
            .iter()
            .zip(self.x.iter().zip(&self.y))
            .map(|(&d, (&a, &e))| 2 * d as i64 * a as i64 + if e { 2 * d as i64 + 1 } else { 0 })
            .sum()
    }

    /// Parses products such as `x1^2*y1*y2`; `1` is the empty monomial.
    pub fn parse(text: &str, rank: usize) -> Result<Self> {
        let mut m = Monomial::one(rank);
        let text = text.trim();
        if text == "1" {
            return Ok(m);
        }
        for factor in text.split('*') {
            let bad = || Error::Parse(format!("bad monomial factor `{factor}`"));
            let (base, exp) = match factor.split_once('^') {
                Some((b, e)) => (b, e.parse::<u32>().map_err(|_| bad())?),
                None => (factor, 1),
            };
            let kind = base.chars().next().ok_or_else(bad)?;
            let i: usize = base[1..].parse().map_err(|_| bad())?;
            if i == 0 || i > rank {
                return Err(bad());
            }
            match kind {
                'x' => m.x[i - 1] += exp,
                'y' if exp == 1 && !m.y[i - 1] => m.y[i - 1] = true,
                'y' => return Err(Error::Parse(format!("`{text}` vanishes: y{i}^2 = 0"))),
                _ => return Err(bad()),
            }
        }
        Ok(m)
    }
}

/// Sparse rational combination of monomials.
pub type LieElement = BTreeMap<Monomial, Scalar>;

pub fn render_element(e: &LieElement) -> String {
    crate::linalg::render_terms(e.iter().map(|(m, c)| (m.to_string(), c)))
}

/// `m_!(y^ε y'^{ε'}) = y^{ε+ε'-1}` with `y^{-1} = 0`; linear over the
/// polynomial part, which must already be free of `x'`.
pub fn m_shriek(m: &Monomial2) -> Result<Option<Monomial>> {
    if m.x2.iter().any(|&a| a != 0) {
        return Err(Error::Precondition(format!(
            "m_! expects x' to be eliminated first, got {m}"
        )));
    }
    let mut y = Vec::with_capacity(m.y.len());
    for (&e, &e2) in m.y.iter().zip(&m.y2) {
        match (e, e2) {
            (false, false) => return Ok(None),
            (true, true) => y.push(true),
            _ => y.push(false),
        }
    }
    Ok(Some(Monomial { x: m.x.clone(), y }))
}

/// `Δ^*`: the algebra map `x'_i ↦ x_i`, fixing `y` and `y'`.
pub fn delta_star(m: &Monomial2) -> Monomial2 {
    Monomial2 {
        x: m.x.iter().zip(&m.x2).map(|(a, b)| a + b).collect(),
        x2: vec![0; m.x2.len()],
        y: m.y.clone(),
        y2: m.y2.clone(),
    }
}

/// `(x^a y^ε) × (x^{a'} y^{ε'}) = x^a x'^{a'} y^ε y'^{ε'}`.
pub fn cross(left: &Monomial, right: &Monomial) -> Monomial2 {
    Monomial2 {
        x: left.x.clone(),
        x2: right.x.clone(),
        y: left.y.clone(),
        y2: right.y.clone(),
    }
}

fn check_rank(p: &ExponentProfile, m: &Monomial) -> Result<()> {
    if m.x.len() != p.rank() || m.y.len() != p.rank() {
        return Err(Error::Precondition(format!(
            "monomial {m} does not have rank {}",
            p.rank()
        )));
    }
    Ok(())
}

/// The closed formula on monomials.
pub fn dual_product_monomial(p: &ExponentProfile, left: &Monomial, right: &Monomial) -> Result<Option<Monomial>> {
    check_rank(p, left)?;
    check_rank(p, right)?;
    if left.y.iter().zip(&right.y).any(|(&a, &b)| !a && !b) {
        return Ok(None);
    }
    Ok(Some(Monomial {
        x: left.x.iter().zip(&right.x).map(|(a, b)| a + b).collect(),
        y: left.y.iter().zip(&right.y).map(|(&a, &b)| a && b).collect(),
    }))
}

/// The same product computed as `m_! ∘ Δ^* ∘ ×`.
pub fn factored_product_monomial(p: &ExponentProfile, left: &Monomial, right: &Monomial) -> Result<Option<Monomial>> {
    check_rank(p, left)?;
    check_rank(p, right)?;
    m_shriek(&delta_star(&cross(left, right)))
}

pub fn dual_string_product(p: &ExponentProfile, left: &LieElement, right: &LieElement) -> Result<LieElement> {
    let mut out = LieElement::new();
    for (a, ca) in left {
        for (b, cb) in right {
            if let Some(m) = dual_product_monomial(p, a, b)? {
                add_term(&mut out, m, ca * cb);
            }
        }
    }
    Ok(out)
}

pub fn dual_coproduct(_p: &ExponentProfile, _x: &LieElement) -> BTreeMap<(Monomial, Monomial), Scalar> {
    BTreeMap::new()
}

/// All monomials with total `x`-degree at most `bound`, in lexicographic
/// order of `(x, y)`.
pub fn monomials(p: &ExponentProfile, bound: u32) -> Vec<Monomial> {
    let l = p.rank();
    let mut xs: Vec<Vec<u32>> = vec![vec![]];
    for _ in 0..l {
        xs = xs
            .into_iter()
            .flat_map(|v| {
                let used: u32 = v.iter().sum();
                (0..=bound - used).map(move |a| {
                    let mut w = v.clone();
                    w.push(a);
                    w
                })
            })
            .collect();
    }
    let mut out = Vec::new();
    for x in xs {
        for mask in 0..1u32 << l {
            out.push(Monomial {
                x: x.clone(),
                y: (0..l).map(|i| mask & (1 << i) != 0).collect(),
            });
        }
    }
    out.sort();
    out
}

/// `(a⋆b)⋆c = a⋆(b⋆c)` over triples whose total `x`-degree fits the bound.
pub fn check_associativity_truncated(p: &ExponentProfile, bound: u32) -> Result<CheckReport> {
    let basis = monomials(p, bound);
    let mut report = CheckReport::new("associativity", &p.display_name());
    let n = basis.len();
    for a in &basis {
        for b in basis.iter().filter(|b| a.x_degree() + b.x_degree() <= bound) {
            for c in basis.iter().filter(|c| a.x_degree() + b.x_degree() + c.x_degree() <= bound) {
                report.checked += 1;
                let ab = dual_product_monomial(p, a, b)?;
                let left = match &ab {
                    Some(ab) => dual_product_monomial(p, ab, c)?,
                    None => None,
                };
                let bc = dual_product_monomial(p, b, c)?;
                let right = match &bc {
                    Some(bc) => dual_product_monomial(p, a, bc)?,
                    None => None,
                };
                if left != right {
                    report.violation(
                        vec![a.to_string(), b.to_string(), c.to_string()],
                        format!("(ab)c = {}, a(bc) = {}", show(&left), show(&right)),
                    );
                }
            }
        }
    }
    report.skipped = n.pow(3) - report.checked;
    Ok(report)
}

fn show(m: &Option<Monomial>) -> String {
    m.as_ref().map_or("0".to_string(), Monomial::to_string)
}

fn pair_check(
    p: &ExponentProfile,
    bound: u32,
    check: &str,
    mut f: impl FnMut(&Monomial, &Monomial) -> Result<Option<String>>,
) -> Result<CheckReport> {
    let basis = monomials(p, bound);
    let mut report = CheckReport::new(check, &p.display_name());
    for a in &basis {
        for b in &basis {
            if a.x_degree() + b.x_degree() > bound {
                report.skipped += 1;
                continue;
            }
            report.checked += 1;
            if let Some(detail) = f(a, b)? {
                report.violation(vec![a.to_string(), b.to_string()], detail);
            }
        }
    }
    Ok(report)
}

/// `a⋆b` and `b⋆a` are identical, with no sign.
pub fn check_literal_symmetry(p: &ExponentProfile, bound: u32) -> Result<CheckReport> {
    pair_check(p, bound, "literal symmetry", |a, b| {
        let (ab, ba) = (dual_product_monomial(p, a, b)?, dual_product_monomial(p, b, a)?);
        Ok((ab != ba).then(|| format!("ab = {}, ba = {}", show(&ab), show(&ba))))
    })
}

/// `a⋆b = (-1)^{|a||b|} b⋆a` with degrees shifted by `dim G`. Reported for
/// information: the closed formula is symmetric without signs.
pub fn check_signed_commutativity(p: &ExponentProfile, bound: u32) -> Result<CheckReport> {
    let d = p.dimension as i64;
    pair_check(p, bound, "signed commutativity", |a, b| {
        let (ab, ba) = (dual_product_monomial(p, a, b)?, dual_product_monomial(p, b, a)?);
        let odd = (a.degree(p) - d).rem_euclid(2) == 1 && (b.degree(p) - d).rem_euclid(2) == 1;
        let ok = ab == ba && (!odd || ab.is_none());
        Ok((!ok).then(|| {
            format!(
                "ab = {}, ba = {}, Koszul sign {}",
                show(&ab),
                show(&ba),
                if odd { "-1" } else { "+1" }
            )
        }))
    })
}

/// The closed formula agrees with `m_! ∘ Δ^* ∘ ×` on every pair.
pub fn check_factorization(p: &ExponentProfile, bound: u32) -> Result<CheckReport> {
    pair_check(p, bound, "factorization", |a, b| {
        let (direct, factored) = (dual_product_monomial(p, a, b)?, factored_product_monomial(p, a, b)?);
        Ok((direct != factored).then(|| format!("formula = {}, m_!Δ^* = {}", show(&direct), show(&factored))))
    })
}

/// `y_1⋯y_l` is a two-sided unit.
pub fn check_unit(p: &ExponentProfile, bound: u32) -> Result<CheckReport> {
    let unit = Monomial::top_y(p.rank());
    let mut report = CheckReport::new("unit", &p.display_name());
    for m in monomials(p, bound) {
        report.checked += 1;
        let l = dual_product_monomial(p, &unit, &m)?;
        let r = dual_product_monomial(p, &m, &unit)?;
        if l.as_ref() != Some(&m) || r.as_ref() != Some(&m) {
            report.violation(
                vec![m.to_string()],
                format!("1⋆m = {}, m⋆1 = {}", show(&l), show(&r)),
            );
        }
    }
    Ok(report)
}

/// `deg(a⋆b) = deg a + deg b - dim G` whenever the product is nonzero.
pub fn check_degree(p: &ExponentProfile, bound: u32) -> Result<CheckReport> {
    let d = p.dimension as i64;
    pair_check(p, bound, "degree", |a, b| {
        Ok(dual_product_monomial(p, a, b)?.and_then(|m| {
            let expected = a.degree(p) + b.degree(p) - d;
            (m.degree(p) != expected).then(|| format!("deg {m} = {}, expected {expected}", m.degree(p)))
        }))
    })
}

pub fn lie_suite(p: &ExponentProfile, bound: u32) -> Result<Vec<CheckReport>> {
    Ok(vec![
        check_associativity_truncated(p, bound)?,
        check_literal_symmetry(p, bound)?,
        check_factorization(p, bound)?,
        check_unit(p, bound)?,
        check_degree(p, bound)?,
    ])
}

/// The truncated algebra as Frobenius data: cohomological degrees, shift
/// `dim G`, zero coproduct, products leaving the window dropped.
pub fn truncated_algebra(p: &ExponentProfile, bound: u32) -> Result<FrobeniusData> {
    let basis_list = monomials(p, bound);
    let index: BTreeMap<&Monomial, usize> = basis_list.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let basis = Arc::new(GradedBasis::new(
        basis_list.iter().map(|m| (m.to_string(), m.degree(p))),
    )?);
    let mut product = BTreeMap::new();
    for (i, a) in basis_list.iter().enumerate() {
        for (j, b) in basis_list.iter().enumerate() {
            if let Some(m) = dual_product_monomial(p, a, b)? {
                if let Some(&k) = index.get(&m) {
                    product.insert((i, j), Vector::from([(k, scalar::one())]));
                }
            }
        }
    }
    let unit = index[&Monomial::top_y(p.rank())];
    let data = FrobeniusData::from_parts(
        format!("dual string algebra of {}", p.display_name()),
        basis,
        p.dimension as i64,
        product,
        BTreeMap::new(),
        Some(Vector::from([(unit, scalar::one())])),
        None,
        BTreeMap::from([
            ("truncation".to_string(), format!("total x-degree <= {bound}")),
            ("coproduct".to_string(), "zero".to_string()),
            ("commutativity".to_string(), "literal symmetry; Koszul-signed form not asserted".to_string()),
        ]),
    )?;
    debug_assert!(data.coproduct_is_zero());
    Ok(data)
}

pub fn element(terms: &[(Monomial, Scalar)]) -> LieElement {
    let mut e = LieElement::new();
    for (m, c) in terms {
        if !c.is_zero() {
            add_term(&mut e, m.clone(), c.clone());
        }
    }
    e
}

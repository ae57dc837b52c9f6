//! Finite groups as validated multiplication tables.

use std::collections::{BTreeSet, HashMap, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroupTable {
    elements: Vec<String>,
    mult: Vec<Vec<usize>>,
    identity: usize,
    inverse: Vec<usize>,
}

/// Explicit table document: element labels and one row of labels per
/// element, `rows[i][j] = elements[i] * elements[j]`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TableDoc {
    pub elements: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

pub fn group_from_table(elements: Vec<String>, mult: Vec<Vec<usize>>) -> Result<FiniteGroupTable> {
    let n = elements.len();
    if n == 0 {
        return Err(Error::NotAGroup("empty element list".into()));
    }
    let distinct: BTreeSet<&String> = elements.iter().collect();
    if distinct.len() != n {
        return Err(Error::NotAGroup("duplicate element labels".into()));
    }
    if mult.len() != n || mult.iter().any(|r| r.len() != n) {
        return Err(Error::NotAGroup(format!("table is not {n}×{n}")));
    }
    if let Some((i, j)) = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .find(|&(i, j)| mult[i][j] >= n)
    {
        return Err(Error::NotAGroup(format!(
            "entry ({}, {}) is out of range",
            elements[i], elements[j]
        )));
    }
    for a in 0..n {
        for b in 0..n {
            let ab = mult[a][b];
            for c in 0..n {
                if mult[ab][c] != mult[a][mult[b][c]] {
                    return Err(Error::NotAGroup(format!(
                        "not associative at ({}, {}, {})",
                        elements[a], elements[b], elements[c]
                    )));
                }
            }
        }
    }
    let identity = (0..n)
        .find(|&e| (0..n).all(|x| mult[e][x] == x && mult[x][e] == x))
        .ok_or_else(|| Error::NotAGroup("no identity element".into()))?;
    let mut inverse = Vec::with_capacity(n);
    for x in 0..n {
        let inv = (0..n)
            .find(|&y| mult[x][y] == identity && mult[y][x] == identity)
            .ok_or_else(|| Error::NotAGroup(format!("`{}` has no inverse", elements[x])))?;
        inverse.push(inv);
    }
    Ok(FiniteGroupTable {
        elements,
        mult,
        identity,
        inverse,
    })
}

pub fn group_from_doc(doc: &TableDoc) -> Result<FiniteGroupTable> {
    let index: HashMap<&str, usize> = doc
        .elements
        .iter()
        .enumerate()
        .map(|(i, l)| (l.as_str(), i))
        .collect();
    let mut mult = Vec::with_capacity(doc.rows.len());
    for row in &doc.rows {
        let r = row
            .iter()
            .map(|l| {
                index
                    .get(l.as_str())
                    .copied()
                    .ok_or_else(|| Error::NotAGroup(format!("unknown element `{l}` in table")))
            })
            .collect::<Result<Vec<_>>>()?;
        mult.push(r);
    }
    group_from_table(doc.elements.clone(), mult)
}

/// A permutation of `{1..degree}` stored zero-based as images.
pub type Perm = Vec<usize>;

/// Parses cycle notation such as `(1 2)(3 4)` or `(1,2,3)`; `()` is the
/// identity.
pub fn parse_cycles(text: &str, degree: usize) -> Result<Perm> {
    let mut perm: Perm = (0..degree).collect();
    let mut seen = BTreeSet::new();
    let mut rest = text.trim();
    while !rest.is_empty() {
        let open = rest
            .strip_prefix('(')
            .ok_or_else(|| Error::InvalidPermutation(format!("expected `(` in `{text}`")))?;
        let close = open
            .find(')')
            .ok_or_else(|| Error::InvalidPermutation(format!("unclosed cycle in `{text}`")))?;
        let body = &open[..close];
        let points = body
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|s| !s.is_empty())
            .map(|s| {
                let p: usize = s
                    .parse()
                    .map_err(|_| Error::InvalidPermutation(format!("bad point `{s}` in `{text}`")))?;
                if p == 0 || p > degree {
                    return Err(Error::InvalidPermutation(format!(
                        "point {p} outside 1..={degree}"
                    )));
                }
                if !seen.insert(p) {
                    return Err(Error::InvalidPermutation(format!(
                        "point {p} repeated in `{text}`"
                    )));
                }
                Ok(p - 1)
            })
            .collect::<Result<Vec<_>>>()?;
        for (k, &p) in points.iter().enumerate() {
            perm[p] = points[(k + 1) % points.len()];
        }
        rest = open[close + 1..].trim_start();
    }
    Ok(perm)
}

/// Cycle notation with 1-based points; the identity renders as `()`.
pub fn format_cycles(perm: &Perm) -> String {
    let mut seen = vec![false; perm.len()];
    let mut out = String::new();
    for start in 0..perm.len() {
        if seen[start] || perm[start] == start {
            continue;
        }
        let mut cycle = Vec::new();
        let mut p = start;
        while !seen[p] {
            seen[p] = true;
            cycle.push((p + 1).to_string());
            p = perm[p];
        }
        out.push('(');
        out.push_str(&cycle.join(" "));
        out.push(')');
    }
    if out.is_empty() {
        out.push_str("()");
    }
    out
}

/// `(a * b)(x) = a(b(x))`: apply `b` first.
fn compose(a: &Perm, b: &Perm) -> Perm {
    b.iter().map(|&x| a[x]).collect()
}

/// Breadth-first closure of the generators, identity first. Elements are
/// labeled by their cycle notation.
pub fn group_from_permutations(degree: usize, generators: &[Perm]) -> Result<FiniteGroupTable> {
    if degree == 0 {
        return Err(Error::InvalidPermutation("degree must be positive".into()));
    }
    for g in generators {
        let mut sorted = g.clone();
        sorted.sort_unstable();
        if g.len() != degree || sorted != (0..degree).collect::<Vec<_>>() {
            return Err(Error::InvalidPermutation(format!(
                "{g:?} is not a permutation of {degree} points"
            )));
        }
    }
    let identity: Perm = (0..degree).collect();
    let mut elems = vec![identity.clone()];
    let mut index: HashMap<Perm, usize> = HashMap::from([(identity, 0)]);
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        for g in generators {
            let next = compose(&elems[i], g);
            if !index.contains_key(&next) {
                index.insert(next.clone(), elems.len());
                queue.push_back(elems.len());
                elems.push(next);
            }
        }
    }
    let mult = elems
        .iter()
        .map(|a| elems.iter().map(|b| index[&compose(a, b)]).collect())
        .collect();
    group_from_table(elems.iter().map(format_cycles).collect(), mult)
}

pub fn group_from_cycle_strings(degree: usize, generators: &[&str]) -> Result<FiniteGroupTable> {
    let perms = generators
        .iter()
        .map(|g| parse_cycles(g, degree))
        .collect::<Result<Vec<_>>>()?;
    group_from_permutations(degree, &perms)
}

impl FiniteGroupTable {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[String] {
        &self.elements
    }

    pub fn label(&self, i: usize) -> &str {
        &self.elements[i]
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.elements
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mult[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    /// `g h g⁻¹`.
    pub fn conjugate(&self, g: usize, h: usize) -> usize {
        self.mul(self.mul(g, h), self.inv(g))
    }

    /// `a b a⁻¹ b⁻¹`.
    pub fn commutator(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(a, b), self.mul(self.inv(a), self.inv(b)))
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order()).all(|a| (0..self.order()).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn to_doc(&self) -> TableDoc {
        TableDoc {
            elements: self.elements.clone(),
            rows: self
                .mult
                .iter()
                .map(|r| r.iter().map(|&k| self.elements[k].clone()).collect())
                .collect(),
        }
    }

    /// Checks closure of `subset` under products and inverses.
    pub fn is_subgroup(&self, subset: &BTreeSet<usize>) -> bool {
        subset.contains(&self.identity)
            && subset.iter().all(|&a| {
                subset.contains(&self.inv(a)) && subset.iter().all(|&b| subset.contains(&self.mul(a, b)))
            })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z2() -> FiniteGroupTable {
        group_from_table(vec!["e".into(), "a".into()], vec![vec![0, 1], vec![1, 0]]).unwrap()
    }

    #[test]
    fn z2_table_is_valid() {
        let g = z2();
        assert_eq!(g.order(), 2);
        assert_eq!(g.identity(), 0);
        assert_eq!(g.inv(1), 1);
    }

    #[test]
    fn nonassociative_table_names_witness() {
        // A Latin square with identity 0 that is not associative.
        let t = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        let labels = ["e", "a", "b", "c", "d"].map(String::from).to_vec();
        let err = group_from_table(labels, t).unwrap_err();
        let Error::NotAGroup(msg) = err else {
            panic!("wrong error")
        };
        assert!(msg.starts_with("not associative at ("), "{msg}");
    }

    #[test]
    fn missing_identity_and_inverse() {
        let labels = vec!["a".to_string(), "b".to_string()];
        let err = group_from_table(labels.clone(), vec![vec![0, 0], vec![0, 0]]).unwrap_err();
        assert_eq!(err, Error::NotAGroup("no identity element".into()));
        // Identity `a`, but `b*b = b`, so `b` has no inverse.
        let err = group_from_table(labels, vec![vec![0, 1], vec![1, 1]]).unwrap_err();
        assert_eq!(err, Error::NotAGroup("`b` has no inverse".into()));
    }

    #[test]
    fn s3_from_generators() {
        let g = group_from_cycle_strings(3, &["(1 2)", "(1 2 3)"]).unwrap();
        assert_eq!(g.order(), 6);
        assert_eq!(g.label(0), "()");
        assert!(!g.is_abelian());
    }

    #[test]
    fn double_transposition_generates_z2() {
        let g = group_from_cycle_strings(4, &["(1 2)(3 4)"]).unwrap();
        assert_eq!(g.order(), 2);
        assert_eq!(g.elements(), ["()", "(1 2)(3 4)"]);
    }

    #[test]
    fn no_generators_is_trivial_and_degree_zero_errors() {
        assert_eq!(group_from_permutations(3, &[]).unwrap().order(), 1);
        assert!(group_from_permutations(0, &[]).is_err());
    }

    #[test]
    fn cycle_parsing_rejects_garbage() {
        assert!(parse_cycles("(1 4)", 3).is_err());
        assert!(parse_cycles("(1 2)(2 3)", 3).is_err());
        assert!(parse_cycles("1 2", 3).is_err());
        assert_eq!(format_cycles(&parse_cycles("(1,3)(2)", 3).unwrap()), "(1 3)");
    }

    #[test]
    fn doc_roundtrip() {
        let g = group_from_cycle_strings(4, &["(1 2 3 4)", "(1 3)"]).unwrap();
        assert_eq!(group_from_doc(&g.to_doc()).unwrap(), g);
    }
}

//! JSON documents for Frobenius data and linear maps.
//!
//! Field order is fixed and every coefficient is an exact `p/q` string, so
//! equal data always serializes to identical bytes.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::frobenius::FrobeniusData;
use crate::linalg::{add_term, GradedBasis, LinearMap, Tensor, Vector};
use crate::scalar;

type Terms = Vec<(String, String)>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraDoc {
    pub name: String,
    pub shift: i64,
    pub basis: Vec<(String, i64)>,
    pub product: Vec<(String, String, Terms)>,
    pub coproduct: Vec<(String, Vec<(String, String, String)>)>,
    pub unit: Option<Terms>,
    pub counit: Option<Terms>,
    pub tags: BTreeMap<String, String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MapDoc {
    pub source: Vec<(String, i64)>,
    pub target: Vec<(String, i64)>,
    pub entries: Vec<(String, Terms)>,
}

fn vector_terms(b: &GradedBasis, v: &Vector) -> Terms {
    v.iter()
        .map(|(&i, c)| (b.label(i).to_string(), scalar::format(c)))
        .collect()
}

fn parse_vector(b: &GradedBasis, terms: &Terms, field: &str) -> Result<Vector> {
    let mut v = Vector::new();
    for (l, c) in terms {
        let i = b
            .index_of(l)
            .map_err(|_| Error::Parse(format!("{field}: unknown label `{l}`")))?;
        let c = scalar::parse(c).map_err(|e| Error::Parse(format!("{field}: {e}")))?;
        add_term(&mut v, i, c);
    }
    Ok(v)
}

pub fn algebra_to_doc(a: &FrobeniusData) -> AlgebraDoc {
    let b = a.basis();
    AlgebraDoc {
        name: a.name().to_string(),
        shift: a.shift(),
        basis: b.entries().to_vec(),
        product: a
            .product_table()
            .iter()
            .map(|(&(i, j), v)| (b.label(i).to_string(), b.label(j).to_string(), vector_terms(b, v)))
            .collect(),
        coproduct: a
            .coproduct_table()
            .iter()
            .map(|(&i, t)| {
                (
                    b.label(i).to_string(),
                    t.iter()
                        .map(|(&(x, y), c)| (b.label(x).to_string(), b.label(y).to_string(), scalar::format(c)))
                        .collect(),
                )
            })
            .collect(),
        unit: a.unit_vector().map(|v| vector_terms(b, v)),
        counit: a.counit_vector().map(|v| vector_terms(b, v)),
        tags: a.tags().clone(),
    }
}

pub fn algebra_from_doc(doc: &AlgebraDoc) -> Result<FrobeniusData> {
    let basis = Arc::new(GradedBasis::new(doc.basis.iter().cloned())?);
    let mut product = BTreeMap::new();
    for (l, r, terms) in &doc.product {
        let field = format!("product[{l}, {r}]");
        let i = basis.index_of(l).map_err(|_| Error::Parse(format!("{field}: unknown label `{l}`")))?;
        let j = basis.index_of(r).map_err(|_| Error::Parse(format!("{field}: unknown label `{r}`")))?;
        let v = parse_vector(&basis, terms, &field)?;
        if product.insert((i, j), v).is_some() {
            return Err(Error::Parse(format!("{field}: listed twice")));
        }
    }
    let mut coproduct = BTreeMap::new();
    for (src, terms) in &doc.coproduct {
        let field = format!("coproduct[{src}]");
        let i = basis
            .index_of(src)
            .map_err(|_| Error::Parse(format!("{field}: unknown label `{src}`")))?;
        let mut t = Tensor::new();
        for (x, y, c) in terms {
            let xi = basis.index_of(x).map_err(|_| Error::Parse(format!("{field}: unknown label `{x}`")))?;
            let yi = basis.index_of(y).map_err(|_| Error::Parse(format!("{field}: unknown label `{y}`")))?;
            let c = scalar::parse(c).map_err(|e| Error::Parse(format!("{field}: {e}")))?;
            add_term(&mut t, (xi, yi), c);
        }
        if coproduct.insert(i, t).is_some() {
            return Err(Error::Parse(format!("{field}: listed twice")));
        }
    }
    let unit = doc.unit.as_ref().map(|u| parse_vector(&basis, u, "unit")).transpose()?;
    let counit = doc.counit.as_ref().map(|u| parse_vector(&basis, u, "counit")).transpose()?;
    FrobeniusData::from_parts(
        doc.name.clone(),
        basis,
        doc.shift,
        product,
        coproduct,
        unit,
        counit,
        doc.tags.clone(),
    )
}

pub fn algebra_to_json(a: &FrobeniusData) -> String {
    serde_json::to_string_pretty(&algebra_to_doc(a)).expect("algebra document serializes") + "\n"
}

pub fn algebra_from_json(text: &str) -> Result<FrobeniusData> {
    let doc: AlgebraDoc = serde_json::from_str(text).map_err(|e| Error::Parse(format!("algebra document: {e}")))?;
    algebra_from_doc(&doc)
}

pub fn map_to_doc(f: &LinearMap) -> MapDoc {
    let t = f.target();
    MapDoc {
        source: f.source().entries().to_vec(),
        target: t.entries().to_vec(),
        entries: (0..f.source().len())
            .filter(|&i| !f.column(i).is_empty())
            .map(|i| (f.source().label(i).to_string(), vector_terms(t, f.column(i))))
            .collect(),
    }
}

pub fn map_from_doc(doc: &MapDoc) -> Result<LinearMap> {
    let source = Arc::new(GradedBasis::new(doc.source.iter().cloned())?);
    let target = Arc::new(GradedBasis::new(doc.target.iter().cloned())?);
    let mut columns = vec![Vector::new(); source.len()];
    for (src, terms) in &doc.entries {
        let i = source
            .index_of(src)
            .map_err(|_| Error::Parse(format!("map entry: unknown source label `{src}`")))?;
        columns[i] = parse_vector(&target, terms, &format!("map[{src}]"))?;
    }
    Ok(LinearMap::from_columns(&source, &target, columns))
}

pub fn map_to_json(f: &LinearMap) -> String {
    serde_json::to_string_pretty(&map_to_doc(f)).expect("map document serializes") + "\n"
}

pub fn map_from_json(text: &str) -> Result<LinearMap> {
    let doc: MapDoc = serde_json::from_str(text).map_err(|e| Error::Parse(format!("map document: {e}")))?;
    map_from_doc(&doc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{builtin_group, dw_algebra};
    use crate::sphere::{phi_map, sphere_string_algebra};

    #[test]
    fn algebra_roundtrip_is_exact() {
        for a in [
            dw_algebra(&builtin_group("S3").unwrap()).unwrap(),
            sphere_string_algebra(2).unwrap(),
        ] {
            let text = algebra_to_json(&a);
            let back = algebra_from_json(&text).unwrap();
            assert_eq!(back, a);
            assert_eq!(back.tags(), a.tags());
            assert_eq!(algebra_to_json(&back), text);
        }
    }

    #[test]
    fn field_order_is_fixed() {
        let text = algebra_to_json(&dw_algebra(&builtin_group("Z2").unwrap()).unwrap());
        let keys = ["\"name\"", "\"shift\"", "\"basis\"", "\"product\"", "\"coproduct\"", "\"unit\"", "\"counit\"", "\"tags\""];
        let pos: Vec<usize> = keys.iter().map(|k| text.find(k).unwrap()).collect();
        assert!(pos.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn map_roundtrip() {
        let (_, _, f) = phi_map(1, 2).unwrap();
        assert_eq!(map_from_json(&map_to_json(&f)).unwrap(), f);
    }

    #[test]
    fn rejects_bad_documents() {
        let a = dw_algebra(&builtin_group("Z2").unwrap()).unwrap();
        let text = algebra_to_json(&a);
        let mut doc = algebra_to_doc(&a);
        doc.product[0].1 = "[7]".into();
        assert!(algebra_from_doc(&doc).is_err());
        assert!(algebra_from_json("{").is_err());
        assert!(algebra_from_json(&text.replacen("\"1\"", "\"1/0\"", 1)).is_err());
    }
}

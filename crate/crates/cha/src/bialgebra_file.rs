//! Loading a finite bialgebra from JSON structure constants:
//!
//! ```json
//! {"basis": ["e", "g"],
//!  "degree": {"e": 0, "g": 0},
//!  "product": {"e,e": [["e", "1"]], "e,g": [["g", "1"]], "g,e": [["g", "1"]], "g,g": [["e", "1"]]},
//!  "coproduct": {"e": [["e", "e", "1"]], "g": [["g", "g", "1"]]},
//!  "unit": "e",
//!  "counit": {"e": "1", "g": "1"}}
//! ```
//!
//! Coefficients are strings `p/q` or integers. Missing degrees are 0, missing
//! products, coproducts and counit values are zero.

use std::collections::BTreeMap;
use std::path::Path;
use std::str::FromStr;

use cha_core::pinter::{TableBialgebra, TableData};
use cha_core::Scalar;
use serde::Deserialize;

#[derive(Debug, thiserror::Error)]
pub enum LoadError {
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("invalid bialgebra JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("invalid bialgebra: {0}")]
    Invalid(String),
}

#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
enum Coeff {
    Int(i64),
    Text(String),
}

impl Coeff {
    fn value(&self) -> Result<Scalar, LoadError> {
        match self {
            Coeff::Int(n) => Ok(Scalar::from_integer((*n).into())),
            Coeff::Text(s) => {
                Scalar::from_str(s.trim()).map_err(|_| LoadError::Invalid(format!("bad coefficient {s:?}")))
            }
        }
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct Document {
    basis: Vec<String>,
    #[serde(default)]
    degree: BTreeMap<String, usize>,
    #[serde(default)]
    product: BTreeMap<String, Vec<(String, Coeff)>>,
    #[serde(default)]
    coproduct: BTreeMap<String, Vec<(String, String, Coeff)>>,
    unit: String,
    #[serde(default)]
    counit: BTreeMap<String, Coeff>,
}

/// Parses and validates a bialgebra document.
pub fn from_json(text: &str) -> Result<TableBialgebra, LoadError> {
    let doc: Document = serde_json::from_str(text)?;
    for name in doc.degree.keys() {
        if !doc.basis.contains(name) {
            return Err(LoadError::Invalid(format!("degree given for unknown element {name:?}")));
        }
    }
    let mut data = TableData {
        basis: doc.basis.iter().map(|n| (n.clone(), doc.degree.get(n).copied().unwrap_or(0))).collect(),
        unit: doc.unit,
        ..TableData::default()
    };
    for (key, terms) in doc.product {
        let (a, b) = key
            .split_once(',')
            .ok_or_else(|| LoadError::Invalid(format!("product key {key:?} is not of the form \"a,b\"")))?;
        let terms = terms.into_iter().map(|(c, k)| Ok((c, k.value()?))).collect::<Result<Vec<_>, LoadError>>()?;
        data.product.push(((a.trim().to_string(), b.trim().to_string()), terms));
    }
    for (a, terms) in doc.coproduct {
        let terms =
            terms.into_iter().map(|(b, c, k)| Ok((b, c, k.value()?))).collect::<Result<Vec<_>, LoadError>>()?;
        data.coproduct.push((a, terms));
    }
    for (a, k) in doc.counit {
        data.counit.push((a, k.value()?));
    }
    TableBialgebra::new(data).map_err(|e| LoadError::Invalid(e.to_string()))
}

pub fn load(path: &Path) -> Result<TableBialgebra, LoadError> {
    let text = std::fs::read_to_string(path)
        .map_err(|source| LoadError::Io { path: path.display().to_string(), source })?;
    from_json(&text)
}

#[cfg(test)]
mod tests {
    use super::*;
    use cha_core::pinter::Bialgebra;

    const Z2: &str = r#"{"basis": ["e", "g"], "degree": {"e": 0, "g": 0},
        "product": {"e,e": [["e", "1"]], "e,g": [["g", "1"]], "g,e": [["g", "1"]], "g,g": [["e", 1]]},
        "coproduct": {"e": [["e", "e", "1"]], "g": [["g", "g", "1"]]},
        "unit": "e", "counit": {"e": "1", "g": 1}}"#;

    #[test]
    fn loads_z2() {
        let b = from_json(Z2).unwrap();
        assert_eq!(b.basis().len(), 2);
        assert_eq!(b.unit().name(), "e");
    }

    #[test]
    fn rejects_broken_documents() {
        assert!(matches!(from_json("{"), Err(LoadError::Json(_))));
        let no_counit = Z2.replace(r#""counit": {"e": "1", "g": 1}"#, r#""counit": {"e": "1"}"#);
        assert!(matches!(from_json(&no_counit), Err(LoadError::Invalid(_))));
        let bad_key = Z2.replace(r#""g,g""#, r#""gg""#);
        assert!(matches!(from_json(&bad_key), Err(LoadError::Invalid(_))));
    }
}

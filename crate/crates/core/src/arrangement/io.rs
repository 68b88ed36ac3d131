//! Arrangement input: JSON documents, plain matrices, catalog names.

use std::path::Path;

use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use super::{catalog, Arrangement};
use crate::algebra::{format_rational, parse_rational};
use crate::error::ArrangementError;

/// On-disk form: `{ "dimension": d, "normals": [["p/q", ...], ...], "labels": [...] }`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ArrangementDoc {
    pub dimension: usize,
    pub normals: Vec<Vec<Value>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

fn value_to_rational(v: &Value) -> Result<BigRational, ArrangementError> {
    match v {
        Value::String(s) => Ok(parse_rational(s)?),
        Value::Number(n) if n.is_i64() || n.is_u64() => Ok(parse_rational(&n.to_string())?),
        other => Err(ArrangementError::Input(format!("entry {other} is not an exact rational"))),
    }
}

pub fn from_json(text: &str) -> Result<Arrangement, ArrangementError> {
    let doc: ArrangementDoc = serde_json::from_str(text).map_err(|e| ArrangementError::Input(e.to_string()))?;
    let rows = doc
        .normals
        .iter()
        .map(|r| r.iter().map(value_to_rational).collect::<Result<Vec<_>, _>>())
        .collect::<Result<Vec<_>, _>>()?;
    Arrangement::new(doc.dimension, rows, doc.labels)
}

/// Whitespace-separated rows; `#` starts a comment.
pub fn from_matrix_text(text: &str) -> Result<Arrangement, ArrangementError> {
    let mut rows = Vec::new();
    for line in text.lines() {
        let line = line.split('#').next().unwrap().trim();
        if line.is_empty() {
            continue;
        }
        let row = line.split_whitespace().map(parse_rational).collect::<Result<Vec<_>, _>>()?;
        rows.push(row);
    }
    let dim = rows.first().map(Vec::len).ok_or_else(|| ArrangementError::Input("no rows".into()))?;
    Arrangement::new(dim, rows, None)
}

pub fn parse_text(text: &str) -> Result<Arrangement, ArrangementError> {
    if text.trim_start().starts_with('{') {
        from_json(text)
    } else {
        from_matrix_text(text)
    }
}

/// Catalog name, or a path to a JSON / matrix file.
pub fn load_source(source: &str) -> Result<Arrangement, ArrangementError> {
    match catalog::resolve(source) {
        Ok(a) => Ok(a),
        Err(e) => {
            let path = Path::new(source);
            if !path.is_file() {
                return Err(e);
            }
            let text = std::fs::read_to_string(path).map_err(|e| ArrangementError::Input(format!("{source}: {e}")))?;
            parse_text(&text)
        }
    }
}

pub fn to_doc(a: &Arrangement) -> ArrangementDoc {
    ArrangementDoc {
        dimension: a.dim(),
        normals: a
            .normals()
            .iter()
            .map(|r| r.iter().map(|x| Value::String(format_rational(&BigRational::from_integer(x.clone())))).collect())
            .collect(),
        labels: Some(a.labels().to_vec()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_and_matrix_agree() {
        let j = r#"{ "dimension": 3, "normals": [["1","0","0"],["0","1/2","0"],[0,0,1],["1","1","1"]] }"#;
        let a = from_json(j).unwrap();
        let b = from_matrix_text("1 0 0\n0 1 0 # y\n\n0 0 1\n1 1 1\n").unwrap();
        assert_eq!(a.normals(), b.normals());
        let round = serde_json::to_string(&to_doc(&a)).unwrap();
        assert_eq!(from_json(&round).unwrap(), a);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(from_json(r#"{ "dimension": 2, "normals": [[1.5, 0]] }"#).is_err());
        assert!(from_matrix_text("1 0\n2 0\n").is_err());
        assert!(from_matrix_text("1 0\n0\n").is_err());
        assert!(load_source("no-such-name").is_err());
    }
}

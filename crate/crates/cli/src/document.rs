//! Input documents for the CLI: a square matrix `A`, its dimension `n`, and
//! an optional right-hand side `q`.
//!
//! Two formats are accepted and sniffed by the first non-space byte:
//!
//! * JSON object `{"n": 2, "A": [[1, "-1/2"], [0, 3]], "q": [1, -2]}` where
//!   every entry is an integer or a rational string `"p/q"`. Floating-point
//!   literals are rejected: the toolkit is exact end to end.
//! * Plain text: one whitespace-separated row per line, `n` lines for a bare
//!   matrix or `n + 1` lines when the last line is `q`. Blank lines and lines
//!   starting with `#` are skipped.

use compmat_core::exact_linalg::{format_rational, parse_rational};
use compmat_core::{Matrix, Rational, Vector};
use serde_json::{json, Value};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixDocument {
    pub n: usize,
    pub a: Matrix,
    pub q: Option<Vector>,
}

/// Input rejection with enough coordinates to fix the file.
#[derive(Debug)]
pub struct ParseError(pub String);

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for ParseError {}

pub fn parse_document(text: &str) -> Result<MatrixDocument, ParseError> {
    if text.trim_start().starts_with('{') {
        parse_json(text)
    } else {
        parse_plain(text)
    }
}

fn parse_json(text: &str) -> Result<MatrixDocument, ParseError> {
    let value: Value = serde_json::from_str(text).map_err(|e| {
        ParseError(format!(
            "JSON syntax error at line {} column {}: {e}",
            e.line(),
            e.column()
        ))
    })?;
    let obj = value
        .as_object()
        .ok_or_else(|| ParseError("top-level JSON value must be an object".into()))?;
    for key in obj.keys() {
        if key != "n" && key != "A" && key != "q" {
            return Err(ParseError(format!(
                "unknown key {key:?}; expected \"n\", \"A\", and optionally \"q\""
            )));
        }
    }
    let n = obj
        .get("n")
        .and_then(Value::as_u64)
        .ok_or_else(|| ParseError("\"n\" must be a positive integer".into()))? as usize;
    if n == 0 {
        return Err(ParseError("\"n\" must be at least 1".into()));
    }
    let rows = obj
        .get("A")
        .and_then(Value::as_array)
        .ok_or_else(|| ParseError("\"A\" must be an array of rows".into()))?;
    if rows.len() != n {
        return Err(ParseError(format!(
            "\"A\" has {} rows but n = {n}",
            rows.len()
        )));
    }
    let mut data = Vec::with_capacity(n);
    for (i, row) in rows.iter().enumerate() {
        let row = row.as_array().ok_or_else(|| {
            ParseError(format!("A row {} must be an array of entries", i + 1))
        })?;
        if row.len() != n {
            return Err(ParseError(format!(
                "A row {} has {} entries but n = {n}",
                i + 1,
                row.len()
            )));
        }
        let mut out = Vec::with_capacity(n);
        for (j, entry) in row.iter().enumerate() {
            out.push(entry_rational(entry).map_err(|msg| {
                ParseError(format!("A[{},{}]: {msg}", i + 1, j + 1))
            })?);
        }
        data.push(out);
    }
    let q = match obj.get("q") {
        None | Some(Value::Null) => None,
        Some(v) => {
            let row = v
                .as_array()
                .ok_or_else(|| ParseError("\"q\" must be an array of entries".into()))?;
            if row.len() != n {
                return Err(ParseError(format!(
                    "\"q\" has {} entries but n = {n}",
                    row.len()
                )));
            }
            let mut out = Vec::with_capacity(n);
            for (j, entry) in row.iter().enumerate() {
                out.push(entry_rational(entry).map_err(|msg| {
                    ParseError(format!("q[{}]: {msg}", j + 1))
                })?);
            }
            Some(Vector(out))
        }
    };
    Ok(MatrixDocument {
        n,
        a: Matrix::from_rows(data),
        q,
    })
}

/// One JSON entry: an integer, or a string holding `[-]digits[/digits]`.
fn entry_rational(v: &Value) -> Result<Rational, String> {
    if let Some(i) = v.as_i64() {
        return Ok(Rational::from_integer(i.into()));
    }
    if v.is_number() {
        return Err(format!(
            "{v} is not exact; write an integer or a rational string like \"1/3\""
        ));
    }
    if let Some(s) = v.as_str() {
        return parse_rational(s);
    }
    Err(format!("expected an integer or rational string, found {v}"))
}

fn parse_plain(text: &str) -> Result<MatrixDocument, ParseError> {
    let mut rows: Vec<(usize, Vec<Rational>)> = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let mut entries = Vec::new();
        for (j, token) in trimmed.split_whitespace().enumerate() {
            entries.push(parse_rational(token).map_err(|msg| {
                ParseError(format!("line {} entry {}: {msg}", idx + 1, j + 1))
            })?);
        }
        rows.push((idx + 1, entries));
    }
    if rows.is_empty() {
        return Err(ParseError("empty document".into()));
    }
    let n = rows[0].1.len();
    if n == 0 {
        return Err(ParseError("first row has no entries".into()));
    }
    for (line_no, entries) in &rows {
        if entries.len() != n {
            return Err(ParseError(format!(
                "line {line_no}: expected {n} entries, found {}",
                entries.len()
            )));
        }
    }
    let (matrix_rows, q) = if rows.len() == n {
        (rows, None)
    } else if rows.len() == n + 1 {
        let q_row = rows.pop().expect("nonempty");
        (rows, Some(Vector(q_row.1)))
    } else {
        return Err(ParseError(format!(
            "{} rows of width {n}: expected {n} (matrix only) or {} (matrix plus q)",
            rows.len(),
            n + 1
        )));
    };
    let data = matrix_rows.into_iter().map(|(_, r)| r).collect();
    Ok(MatrixDocument {
        n,
        a: Matrix::from_rows(data),
        q,
    })
}

/// Canonical JSON form: every entry a rational string, keys `A`, `n`, `q`.
/// `parse_document(to_json(doc))` reproduces `doc` exactly.
pub fn to_json(doc: &MatrixDocument) -> Value {
    let rows: Vec<Value> = (0..doc.n)
        .map(|i| {
            Value::Array(
                (0..doc.n)
                    .map(|j| Value::String(format_rational(doc.a.get(i, j))))
                    .collect(),
            )
        })
        .collect();
    let mut out = json!({ "n": doc.n, "A": rows });
    if let Some(q) = &doc.q {
        out["q"] = Value::Array(
            q.0.iter()
                .map(|x| Value::String(format_rational(x)))
                .collect(),
        );
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn rational_strategy() -> impl Strategy<Value = Rational> {
        (-50i64..=50, 1i64..=9).prop_map(|(p, q)| Rational::new(p.into(), q.into()))
    }

    fn doc_strategy() -> impl Strategy<Value = MatrixDocument> {
        (1usize..=4).prop_flat_map(|n| {
            (
                Just(n),
                proptest::collection::vec(rational_strategy(), n * n),
                proptest::option::of(proptest::collection::vec(rational_strategy(), n)),
            )
                .prop_map(|(n, entries, q)| MatrixDocument {
                    n,
                    a: Matrix::from_rows(entries.chunks(n).map(<[_]>::to_vec).collect()),
                    q: q.map(Vector),
                })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn canonical_form_roundtrips(doc in doc_strategy()) {
            let text = to_json(&doc).to_string();
            prop_assert!(!text.contains('.'), "canonical form must stay exact: {text}");
            prop_assert_eq!(parse_document(&text).unwrap(), doc);
        }
    }

    #[test]
    fn json_roundtrip_with_q() {
        let text = r#"{"n": 2, "A": [[1, "-1/2"], [0, 3]], "q": ["2/3", -4]}"#;
        let doc = parse_document(text).unwrap();
        assert_eq!(doc.n, 2);
        assert_eq!(doc.q.as_ref().unwrap().0.len(), 2);
        let again = parse_document(&to_json(&doc).to_string()).unwrap();
        assert_eq!(doc, again);
    }

    #[test]
    fn plain_text_matrix_and_q() {
        let doc = parse_document("# comment\n1 2\n3 4\n\n5 6\n").unwrap();
        assert_eq!(doc.n, 2);
        assert!(doc.q.is_some());
        let bare = parse_document("1 1/2\n-3 4\n").unwrap();
        assert!(bare.q.is_none());
    }

    #[test]
    fn rejects_floats_and_zero_denominators() {
        let float = parse_document(r#"{"n": 1, "A": [[1.5]]}"#).unwrap_err();
        assert!(float.0.contains("not exact"), "{float}");
        let div0 = parse_document(r#"{"n": 1, "A": [["1/0"]]}"#).unwrap_err();
        assert!(div0.0.contains("A[1,1]"), "{div0}");
        parse_document("1/0\n").unwrap_err();
    }

    #[test]
    fn rejects_shape_errors() {
        parse_document(r#"{"n": 2, "A": [[1, 2]]}"#).unwrap_err();
        parse_document(r#"{"n": 2, "A": [[1, 2], [3, 4]], "q": [1]}"#).unwrap_err();
        parse_document(r#"{"n": 2, "A": [[1, 2], [3, 4]], "extra": 1}"#).unwrap_err();
        parse_document("1 2\n3\n").unwrap_err();
        parse_document("1 2\n3 4\n5 6\n7 8\n").unwrap_err();
    }
}

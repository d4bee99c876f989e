//! Reading and writing complexes as facet-list text or JSON.
//!
//! Facet-list text has one facet per line as whitespace-separated 1-based
//! vertex ids. Blank lines and lines starting with `#` are ignored, and a
//! line `n=<int>` pins the ground set (otherwise it is the largest vertex).
//! JSON is `{"n": int, "facets": [[int]]}`.

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};

pub fn parse_facet_list(text: &str) -> Result<SimplicialComplex> {
    let mut n: Option<u32> = None;
    let mut facets: Vec<Vec<u32>> = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if let Some(rest) = line.strip_prefix("n=") {
            let value = rest
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("line {}: bad ground set size {rest:?}", lineno + 1)))?;
            n = Some(value);
            continue;
        }
        let facet = line
            .split_whitespace()
            .map(|tok| {
                tok.parse::<u32>().map_err(|_| Error::Parse(format!("line {}: bad vertex id {tok:?}", lineno + 1)))
            })
            .collect::<Result<Vec<u32>>>()?;
        facets.push(facet);
    }
    let max = facets.iter().flatten().copied().max().unwrap_or(0);
    SimplicialComplex::from_facets(n.unwrap_or(max), facets)
}

pub fn to_facet_list(k: &SimplicialComplex) -> String {
    let mut out = format!("n={}\n", k.n());
    if k.dim() >= 0 {
        for facet in k.facet_lists() {
            let line: Vec<String> = facet.iter().map(u32::to_string).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
    }
    out
}

pub fn parse_json(text: &str) -> Result<SimplicialComplex> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

pub fn to_json(k: &SimplicialComplex) -> String {
    serde_json::to_string(k).expect("complexes serialize")
}

/// JSON if the first non-blank character is `{`, facet-list text otherwise.
pub fn parse_auto(text: &str) -> Result<SimplicialComplex> {
    if text.trim_start().starts_with('{') {
        parse_json(text)
    } else {
        parse_facet_list(text)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::*;
    use crate::generators::random_complex;
    use proptest::prelude::*;

    #[test]
    fn parses_both_formats() {
        let text = "# triangle boundary\nn=4\n1 2\n\n2 3\n1 3\n";
        let k = parse_auto(text).unwrap();
        assert_eq!(k, cycle(3));
        assert_eq!(k.n(), 4);
        let j = parse_auto(r#"{"n": 3, "facets": [[1,2],[2,3],[1,3]]}"#).unwrap();
        assert_eq!(j, cycle(3));
    }

    #[test]
    fn reports_parse_errors() {
        assert!(matches!(parse_facet_list("1 x"), Err(Error::Parse(_))));
        assert!(matches!(parse_facet_list("n=two"), Err(Error::Parse(_))));
        assert!(matches!(parse_json("{\"n\": 2}"), Err(Error::Parse(_))));
        assert!(matches!(parse_facet_list("n=2\n1 3"), Err(Error::VertexOutOfRange { vertex: 3, n: 2 })));
    }

    #[test]
    fn void_and_empty_inputs() {
        let v = parse_facet_list("n=3\n").unwrap();
        assert_eq!(v.dim(), -1);
        assert_eq!(parse_facet_list(&to_facet_list(&v)).unwrap().n(), 3);
    }

    proptest! {
        #[test]
        fn round_trips(seed in 0u64..1000) {
            let k = random_complex(seed, 8, 4, 0.4);
            let t = parse_facet_list(&to_facet_list(&k)).unwrap();
            prop_assert_eq!(t.n(), k.n());
            prop_assert_eq!(t.facets(), k.facets());
            let j = parse_json(&to_json(&k)).unwrap();
            prop_assert_eq!(j.n(), k.n());
            prop_assert_eq!(j.facets(), k.facets());
        }
    }
}

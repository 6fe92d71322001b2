//! Fixture files: optional `# key: value` header lines followed by one
//! polynomial per line.
//!
//! ```text
//! # name: twisted_cubic
//! # d: 3
//! # g: 0
//! # sC: 2
//! # eC: -1
//! x*z - y^2
//! x*w - y*z
//! y*w - z^2
//! ```
//!
//! Other lines starting with `#` and blank lines are ignored.

use std::collections::BTreeMap;
use std::fmt::Write;

use crate::error::{Error, Result};
use crate::geometry::CurveModel;
use crate::ring::{parse_poly_at, Polynomial, PrimeField};

#[derive(Clone, Debug, Default, PartialEq)]
pub struct Fixture {
    pub header: BTreeMap<String, String>,
    pub polys: Vec<Polynomial>,
}

const KEYS: [&str; 6] = ["name", "d", "g", "sC", "eC", "s"];

impl Fixture {
    pub fn parse(text: &str, field: PrimeField) -> Result<Self> {
        let mut fx = Fixture::default();
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let trimmed = raw.trim();
            if trimmed.is_empty() {
                continue;
            }
            if let Some(rest) = trimmed.strip_prefix('#') {
                if let Some((key, value)) = rest.split_once(':') {
                    let key = key.trim();
                    if KEYS.contains(&key) {
                        fx.header.insert(key.to_string(), value.trim().to_string());
                    }
                }
                continue;
            }
            fx.polys.push(parse_poly_at(raw, field, line)?);
        }
        if fx.polys.is_empty() {
            return Err(Error::Parse { line: 1, column: 1, message: "fixture contains no polynomials".into() });
        }
        Ok(fx)
    }

    pub fn name(&self) -> Option<&str> {
        self.header.get("name").map(String::as_str)
    }

    /// Integer header value; a malformed value is an error naming the key.
    pub fn int(&self, key: &str) -> Result<Option<i64>> {
        match self.header.get(key) {
            None => Ok(None),
            Some(v) => v
                .parse()
                .map(Some)
                .map_err(|_| Error::Argument(format!("header '{key}' has non-integer value '{v}'"))),
        }
    }

    pub fn for_curve(c: &CurveModel) -> Self {
        let mut header = BTreeMap::new();
        header.insert("name".into(), c.name.clone());
        header.insert("d".into(), c.degree.to_string());
        header.insert("g".into(), c.genus.to_string());
        header.insert("sC".into(), c.s_c.to_string());
        if let Some(e) = c.e_c {
            header.insert("eC".into(), e.to_string());
        }
        Fixture { header, polys: c.ideal.generators().to_vec() }
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for key in KEYS {
            if let Some(v) = self.header.get(key) {
                let _ = writeln!(out, "# {key}: {v}");
            }
        }
        for p in &self.polys {
            let _ = writeln!(out, "{p}");
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{catalog, CatalogName};

    fn k() -> PrimeField {
        PrimeField::default()
    }

    #[test]
    fn roundtrip() {
        let c = catalog(k(), CatalogName::RationalQuartic31).unwrap();
        let fx = Fixture::for_curve(&c);
        let back = Fixture::parse(&fx.to_text(), k()).unwrap();
        assert_eq!(back, fx);
        assert_eq!(back.int("d").unwrap(), Some(4));
        assert_eq!(back.name(), Some("rational_quartic_31"));
    }

    #[test]
    fn errors_carry_positions() {
        assert!(matches!(Fixture::parse("", k()), Err(Error::Parse { line: 1, column: 1, .. })));
        assert!(matches!(Fixture::parse("# name: x\n\n", k()), Err(Error::Parse { .. })));
        match Fixture::parse("# d: 3\nx*z - y^2\nx*w - y*q\n", k()) {
            Err(Error::Parse { line, column, .. }) => assert_eq!((line, column), (3, 9)),
            other => panic!("{other:?}"),
        }
        let fx = Fixture::parse("# d: three\nx\n", k()).unwrap();
        assert!(fx.int("d").is_err());
    }
}

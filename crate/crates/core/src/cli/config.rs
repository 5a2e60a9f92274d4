//! Configuration files.
//!
//! ```json
//! {
//!   "gram": [[2, 5], [5, 4]],
//!   "basis_names": ["L", "H"],
//!   "ample": "L",
//!   "polarizations": ["H", "5L-H"]
//! }
//! ```
//!
//! Classes are given either as coordinate arrays or as integer linear
//! combinations of basis names (`"5L-H"`, `"-L + 2H"`, `"3*H"`).

use std::path::Path;

use num_bigint::BigInt;
use serde::Deserialize;
use thiserror::Error;

use crate::lattice::Lattice;
use crate::matrix::IntMatrix;

pub const DEFAULT_ORBIT_COUNT: usize = 10;

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("malformed config: {0}")]
    Json(#[from] serde_json::Error),
    #[error("unsupported schema version {0}")]
    Schema(u32),
    #[error("gram matrix: {0}")]
    Gram(String),
    #[error("basis names: {0}")]
    Names(String),
    #[error("class {expr:?}: {reason}")]
    Class { expr: String, reason: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Deserialize)]
#[serde(untagged)]
pub enum ClassSpec {
    Coords(Vec<i64>),
    Expr(String),
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawConfig {
    #[serde(default)]
    schema: Option<u32>,
    gram: Vec<Vec<i64>>,
    basis_names: Vec<String>,
    ample: ClassSpec,
    #[serde(default)]
    polarizations: Vec<ClassSpec>,
    #[serde(default)]
    search_degree_max: Option<u32>,
    #[serde(default)]
    orbit_count: Option<usize>,
}

/// A validated configuration. Classes are resolved to coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Config {
    pub gram: Vec<Vec<i64>>,
    pub basis_names: Vec<String>,
    pub ample: Vec<i64>,
    pub polarizations: Vec<Vec<i64>>,
    pub search_degree_max: u32,
    pub orbit_count: usize,
}

impl Config {
    pub fn parse(text: &str) -> Result<Self, ConfigError> {
        let raw: RawConfig = serde_json::from_str(text)?;
        if let Some(v) = raw.schema.filter(|&v| v != 1) {
            return Err(ConfigError::Schema(v));
        }
        let n = raw.gram.len();
        if n == 0 || raw.gram.iter().any(|r| r.len() != n) {
            return Err(ConfigError::Gram("must be a nonempty square matrix".into()));
        }
        for i in 0..n {
            for j in 0..i {
                if raw.gram[i][j] != raw.gram[j][i] {
                    return Err(ConfigError::Gram(format!("not symmetric at ({i}, {j})")));
                }
            }
        }
        if raw.basis_names.len() != n {
            return Err(ConfigError::Names(format!(
                "{} names for a rank-{n} Gram matrix",
                raw.basis_names.len()
            )));
        }
        for (i, name) in raw.basis_names.iter().enumerate() {
            let mut chars = name.chars();
            let valid = chars.next().is_some_and(|c| c.is_alphabetic() || c == '_')
                && chars.all(|c| c.is_alphanumeric() || c == '_');
            if !valid {
                return Err(ConfigError::Names(format!("{name:?} is not an identifier")));
            }
            if raw.basis_names[..i].contains(name) {
                return Err(ConfigError::Names(format!("{name:?} appears twice")));
            }
        }
        let resolve = |c: &ClassSpec| resolve_class(c, &raw.basis_names);
        Ok(Config {
            ample: resolve(&raw.ample)?,
            polarizations: raw.polarizations.iter().map(resolve).collect::<Result<_, _>>()?,
            gram: raw.gram,
            basis_names: raw.basis_names,
            search_degree_max: raw.search_degree_max.unwrap_or(crate::k3geom::DEFAULT_SEARCH_DEGREE_MAX),
            orbit_count: raw.orbit_count.unwrap_or(DEFAULT_ORBIT_COUNT),
        })
    }

    pub fn from_path(path: &Path) -> Result<Self, ConfigError> {
        let text = std::fs::read_to_string(path).map_err(|source| ConfigError::Io {
            path: path.display().to_string(),
            source,
        })?;
        Self::parse(&text)
    }

    /// The lattice, or a message if the Gram matrix is degenerate.
    pub fn lattice(&self) -> crate::Result<Lattice> {
        Lattice::new(IntMatrix::from_rows(&self.gram)?)
    }

    /// Renders coordinates with basis names, e.g. `-L + 2H`.
    pub fn format_class(&self, coords: &[BigInt]) -> String {
        format_combination(coords, &self.basis_names)
    }
}

pub fn format_combination(coords: &[BigInt], names: &[String]) -> String {
    let mut out = String::new();
    for (c, name) in coords.iter().zip(names) {
        if c == &BigInt::from(0) {
            continue;
        }
        let negative = c < &BigInt::from(0);
        let abs = if negative { -c } else { c.clone() };
        if out.is_empty() {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        if abs != BigInt::from(1) {
            out.push_str(&abs.to_string());
        }
        out.push_str(name);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn resolve_class(spec: &ClassSpec, names: &[String]) -> Result<Vec<i64>, ConfigError> {
    match spec {
        ClassSpec::Coords(c) if c.len() == names.len() => Ok(c.clone()),
        ClassSpec::Coords(c) => Err(ConfigError::Class {
            expr: format!("{c:?}"),
            reason: format!("expected {} coordinates", names.len()),
        }),
        ClassSpec::Expr(e) => parse_expression(e, names).map_err(|reason| ConfigError::Class {
            expr: e.clone(),
            reason,
        }),
    }
}

/// Parses `term (('+' | '-') term)*` with `term = [integer ['*']] name`.
pub fn parse_expression(text: &str, names: &[String]) -> Result<Vec<i64>, String> {
    let mut coords = vec![0i64; names.len()];
    let chars: Vec<char> = text.chars().filter(|c| !c.is_whitespace()).collect();
    if chars.is_empty() {
        return Err("empty expression".into());
    }
    let mut i = 0;
    let mut first = true;
    while i < chars.len() {
        let mut sign = 1i64;
        match chars[i] {
            '+' | '-' => {
                if chars[i] == '-' {
                    sign = -1;
                }
                i += 1;
            }
            _ if !first => return Err(format!("expected '+' or '-' at position {i}")),
            _ => {}
        }
        first = false;
        let start = i;
        while i < chars.len() && chars[i].is_ascii_digit() {
            i += 1;
        }
        let coef = if i > start {
            let digits: String = chars[start..i].iter().collect();
            digits.parse::<i64>().map_err(|e| format!("coefficient {digits}: {e}"))?
        } else {
            1
        };
        if i < chars.len() && chars[i] == '*' {
            if i == start {
                return Err("'*' without a coefficient".into());
            }
            i += 1;
        }
        let name_start = i;
        while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
            i += 1;
        }
        if name_start == i {
            return Err(format!("expected a basis name at position {i}"));
        }
        let name: String = chars[name_start..i].iter().collect();
        let idx = names
            .iter()
            .position(|n| n == &name)
            .ok_or_else(|| format!("unknown basis name {name:?}"))?;
        coords[idx] = sign
            .checked_mul(coef)
            .and_then(|t| coords[idx].checked_add(t))
            .ok_or("coefficient overflow")?;
    }
    Ok(coords)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names() -> Vec<String> {
        vec!["L".into(), "H".into()]
    }

    #[test]
    fn expressions() {
        let n = names();
        assert_eq!(parse_expression("5L-H", &n).unwrap(), vec![5, -1]);
        assert_eq!(parse_expression("-L + 2H", &n).unwrap(), vec![-1, 2]);
        assert_eq!(parse_expression("3*H", &n).unwrap(), vec![0, 3]);
        assert_eq!(parse_expression("L+L-H", &n).unwrap(), vec![2, -1]);
        assert!(parse_expression("5", &n).is_err());
        assert!(parse_expression("2X", &n).is_err());
        assert!(parse_expression("L H", &n).is_err());
        assert!(parse_expression("", &n).is_err());
    }

    #[test]
    fn formatting() {
        let n = names();
        let c = |a: i64, b: i64| vec![BigInt::from(a), BigInt::from(b)];
        assert_eq!(format_combination(&c(-1, 2), &n), "-L + 2H");
        assert_eq!(format_combination(&c(5, -1), &n), "5L - H");
        assert_eq!(format_combination(&c(0, 0), &n), "0");
    }

    #[test]
    fn parsing_and_validation() {
        let ok = r#"{"gram": [[2,5],[5,4]], "basis_names": ["L","H"], "ample": "L", "polarizations": ["H", [5,-1]]}"#;
        let c = Config::parse(ok).unwrap();
        assert_eq!(c.ample, vec![1, 0]);
        assert_eq!(c.polarizations, vec![vec![0, 1], vec![5, -1]]);
        assert_eq!(c.search_degree_max, 50);
        assert_eq!(c.orbit_count, 10);
        assert!(matches!(Config::parse(""), Err(ConfigError::Json(_))));
        let unknown = r#"{"gram": [[2]], "basis_names": ["L"], "ample": "L", "colour": 1}"#;
        assert!(matches!(Config::parse(unknown), Err(ConfigError::Json(_))));
        let asym = r#"{"gram": [[2,5],[4,4]], "basis_names": ["L","H"], "ample": "L"}"#;
        assert!(matches!(Config::parse(asym), Err(ConfigError::Gram(_))));
        let names = r#"{"gram": [[2,5],[5,4]], "basis_names": ["L"], "ample": "L"}"#;
        assert!(matches!(Config::parse(names), Err(ConfigError::Names(_))));
        let class = r#"{"gram": [[2,5],[5,4]], "basis_names": ["L","H"], "ample": "Q"}"#;
        assert!(matches!(Config::parse(class), Err(ConfigError::Class { .. })));
        let odd = r#"{"gram": [[2,5],[5,3]], "basis_names": ["L","H"], "ample": "L"}"#;
        assert!(Config::parse(odd).is_ok());
    }
}

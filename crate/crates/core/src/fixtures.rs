//! The built-in corpus of arrangements and their golden data.

use std::path::Path;

use serde_json::{json, Map, Value};

use crate::arrgmt::Arrangement;
use crate::cycle::{Verifier, VerifyOptions};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct FixtureFlags {
    pub tame: bool,
    pub free_expected: bool,
}

/// Optional expected values, compared as display strings.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Golden {
    /// `chi(A,t)`.
    pub chi: Option<String>,
    /// `T_A(x,y)`.
    pub tutte: Option<String>,
    /// `[X(A)]` in `h, k`.
    pub class: Option<String>,
    /// Numerator of the Hilbert series in lowest terms, in `t, u`.
    pub k_reduced: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fixture {
    pub arrangement: Arrangement,
    pub flags: FixtureFlags,
    pub expected: Golden,
}

/// A golden value that disagrees with recomputation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GoldenMismatch {
    pub field: &'static str,
    pub expected: String,
    pub computed: String,
}

fn opt_str(v: &Value, key: &str, ctx: &str) -> Result<Option<String>> {
    match v.get(key) {
        None | Some(Value::Null) => Ok(None),
        Some(Value::String(s)) => Ok(Some(s.clone())),
        Some(_) => Err(Error::parse(format!("{ctx}.{key}"), "expected a string")),
    }
}

fn opt_bool(v: &Value, key: &str, ctx: &str) -> Result<bool> {
    match v.get(key) {
        None | Some(Value::Null) => Ok(false),
        Some(Value::Bool(b)) => Ok(*b),
        Some(_) => Err(Error::parse(format!("{ctx}.{key}"), "expected a boolean")),
    }
}

impl Fixture {
    pub fn name(&self) -> &str {
        self.arrangement.name()
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let v: Value = serde_json::from_str(text)
            .map_err(|e| Error::parse(format!("line {} column {}", e.line(), e.column()), e.to_string()))?;
        Self::from_json_value(&v)
    }

    /// Reads a fixture file; parse errors are prefixed with the path.
    pub fn load(path: &Path) -> Result<Self> {
        let text =
            std::fs::read_to_string(path).map_err(|e| Error::parse(path.display().to_string(), e.to_string()))?;
        Fixture::from_json(&text).map_err(|e| match e {
            Error::Parse { context, message } => Error::parse(format!("{}: {context}", path.display()), message),
            other => other,
        })
    }

    pub fn from_json_value(v: &Value) -> Result<Self> {
        let arrangement = Arrangement::from_json_value(v)?;
        let empty = json!({});
        let flags = v.get("flags").unwrap_or(&empty);
        let expected = v.get("expected").unwrap_or(&empty);
        Ok(Fixture {
            arrangement,
            flags: FixtureFlags {
                tame: opt_bool(flags, "tame", "flags")?,
                free_expected: opt_bool(flags, "free_expected", "flags")?,
            },
            expected: Golden {
                chi: opt_str(expected, "chi", "expected")?,
                tutte: opt_str(expected, "tutte", "expected")?,
                class: opt_str(expected, "class", "expected")?,
                k_reduced: opt_str(expected, "k_reduced", "expected")?,
            },
        })
    }

    pub fn to_json_value(&self) -> Value {
        let mut v = self.arrangement.to_json_value();
        v["flags"] = json!({ "tame": self.flags.tame, "free_expected": self.flags.free_expected });
        let mut exp = Map::new();
        for (k, val) in [
            ("chi", &self.expected.chi),
            ("tutte", &self.expected.tutte),
            ("class", &self.expected.class),
            ("k_reduced", &self.expected.k_reduced),
        ] {
            if let Some(s) = val {
                exp.insert(k.to_string(), json!(s));
            }
        }
        if !exp.is_empty() {
            v["expected"] = Value::Object(exp);
        }
        v
    }

    pub fn options(&self) -> VerifyOptions {
        VerifyOptions { tame: self.flags.tame, ..VerifyOptions::default() }
    }

    pub fn verifier(&self) -> Verifier {
        Verifier::new(&self.arrangement, self.options())
    }

    /// Recomputes every golden value that is present. The class and
    /// K-polynomial need a Gröbner basis, which `verifier` caches.
    pub fn golden_mismatches(&self, verifier: &Verifier) -> Result<Vec<GoldenMismatch>> {
        let a = verifier.essential();
        let mut out = Vec::new();
        let mut cmp =
            |field: &'static str, expected: &Option<String>, computed: &dyn Fn() -> Result<String>| -> Result<()> {
                if let Some(e) = expected {
                    let c = computed()?;
                    if *e != c {
                        out.push(GoldenMismatch { field, expected: e.clone(), computed: c });
                    }
                }
                Ok(())
            };
        cmp("chi", &self.expected.chi, &|| Ok(a.char_poly().display("t", "_")))?;
        cmp("tutte", &self.expected.tutte, &|| Ok(a.tutte().display("x", "y")))?;
        cmp("class", &self.expected.class, &|| Ok(verifier.class_data()?.class.display()))?;
        cmp("k_reduced", &self.expected.k_reduced, &|| {
            Ok(verifier.class_data()?.series.reduced().0.display("t", "u"))
        })?;
        Ok(out)
    }
}

macro_rules! builtin_sources {
    ($($name:literal),* $(,)?) => {
        &[$(($name, include_str!(concat!("../../../fixtures/", $name, ".json")))),*]
    };
}

const SOURCES: &[(&str, &str)] = builtin_sources!(
    "boolean2", "boolean3", "boolean4", "3lines", "braid4", "generic4", "generic5", "bridge", "pencil4", "ziegler1",
    "ziegler2",
);

/// The built-in corpus, in a fixed order.
pub fn builtin() -> Vec<Fixture> {
    SOURCES
        .iter()
        .map(|(name, text)| Fixture::from_json(text).unwrap_or_else(|e| panic!("built-in fixture {name}: {e}")))
        .collect()
}

/// Built-in fixtures whose name starts with `prefix`.
pub fn builtin_matching(prefix: &str) -> Vec<Fixture> {
    builtin().into_iter().filter(|f| f.name().starts_with(prefix)).collect()
}

/// Every `*.json` fixture in a directory, sorted by file name.
pub fn load_dir(dir: &Path) -> Result<Vec<Fixture>> {
    let rd = std::fs::read_dir(dir).map_err(|e| Error::parse(dir.display().to_string(), e.to_string()))?;
    let mut paths: Vec<_> =
        rd.filter_map(|e| e.ok().map(|e| e.path())).filter(|p| p.extension().is_some_and(|x| x == "json")).collect();
    paths.sort();
    paths.iter().map(|p| Fixture::load(p)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_parses_and_round_trips() {
        let all = builtin();
        assert_eq!(all.len(), 11);
        for f in &all {
            let back = Fixture::from_json_value(&f.to_json_value()).unwrap();
            assert_eq!(&back, f);
        }
        assert!(builtin_matching("ziegler").len() == 2);
    }
}

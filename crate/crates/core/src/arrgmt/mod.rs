//! Central hyperplane arrangements and their combinatorics.

mod lattice;
mod ops;
mod polys;

pub use lattice::{Flat, IntersectionLattice};
pub use ops::DeletionRestrictionTriple;
pub use polys::tutte_of_rows;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exactalg::{format_rational, parse_rational, MultiPoly, Rational, RationalMatrix};
use num_traits::{One, Zero};

/// A central arrangement given by the coefficient rows of its linear forms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrangement {
    name: String,
    matrix: RationalMatrix,
    labels: Vec<String>,
    rank: usize,
}

impl Arrangement {
    /// Validates and builds an arrangement from `n` rows of length `m`.
    pub fn new(
        name: impl Into<String>,
        dim: usize,
        rows: Vec<Vec<Rational>>,
        labels: Option<Vec<String>>,
    ) -> Result<Self> {
        let n = rows.len();
        for (i, r) in rows.iter().enumerate() {
            if r.len() != dim {
                return Err(Error::InvalidArrangement(format!(
                    "row {} has {} entries, expected {dim}",
                    i + 1,
                    r.len()
                )));
            }
            if r.iter().all(|c| c.is_zero()) {
                return Err(Error::InvalidArrangement(format!("row {} is the zero form", i + 1)));
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                if proportional(&rows[i], &rows[j]) {
                    return Err(Error::InvalidArrangement(format!(
                        "rows {} and {} define the same hyperplane",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        let labels = match labels {
            Some(l) => {
                if l.len() != n {
                    return Err(Error::InvalidArrangement(format!("{} labels for {n} hyperplanes", l.len())));
                }
                l
            }
            None => (1..=n).map(|i| format!("H{i}")).collect(),
        };
        let matrix = RationalMatrix::from_rows(dim, rows);
        let rank = matrix.rank();
        Ok(Arrangement { name: name.into(), matrix, labels, rank })
    }

    /// Convenience constructor from integer rows.
    pub fn from_int_rows(name: impl Into<String>, dim: usize, rows: &[&[i64]]) -> Result<Self> {
        let rows = rows.iter().map(|r| r.iter().map(|&c| Rational::from_integer(c.into())).collect()).collect();
        Self::new(name, dim, rows, None)
    }

    /// The Boolean arrangement of the coordinate hyperplanes in dimension `l`.
    pub fn boolean(l: usize) -> Self {
        let rows =
            (0..l).map(|i| (0..l).map(|j| if i == j { Rational::one() } else { Rational::zero() }).collect()).collect();
        let labels = (1..=l).map(|i| format!("x{i}")).collect();
        Self::new(format!("boolean{l}"), l, rows, Some(labels)).expect("coordinate hyperplanes are distinct")
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn matrix(&self) -> &RationalMatrix {
        &self.matrix
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        self.matrix.row(i)
    }

    pub fn rows(&self) -> Vec<Vec<Rational>> {
        self.matrix.to_rows()
    }

    /// Number of hyperplanes.
    pub fn n(&self) -> usize {
        self.matrix.rows()
    }

    /// Dimension of the ambient space.
    pub fn dim(&self) -> usize {
        self.matrix.cols()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_essential(&self) -> bool {
        self.rank == self.dim()
    }

    /// Independent hyperplanes (so the lattice is Boolean).
    pub fn is_boolean(&self) -> bool {
        self.rank == self.n()
    }

    pub fn is_empty(&self) -> bool {
        self.n() == 0
    }

    pub(crate) fn check_index(&self, i: usize) -> Result<()> {
        if i >= self.n() {
            Err(Error::IndexOutOfRange { index: i, len: self.n() })
        } else {
            Ok(())
        }
    }

    /// Rank of the sub-family indexed by `subset`.
    pub fn rank_of(&self, subset: &[usize]) -> usize {
        if subset.is_empty() {
            return 0;
        }
        let rows = subset.iter().map(|&i| self.matrix.row_vec(i)).collect();
        RationalMatrix::from_rows(self.dim(), rows).rank()
    }

    /// The linear form `f_i` as a polynomial in `nvars >= dim` variables.
    pub fn form(&self, i: usize, nvars: usize) -> MultiPoly {
        let mut coeffs = self.matrix.row_vec(i);
        coeffs.resize(nvars, Rational::zero());
        MultiPoly::linear(nvars, &coeffs)
    }

    pub fn forms(&self) -> Vec<MultiPoly> {
        (0..self.n()).map(|i| self.form(i, self.dim())).collect()
    }

    /// The product of all defining forms.
    pub fn defining_polynomial(&self) -> MultiPoly {
        self.forms().iter().fold(MultiPoly::one(self.dim()), |acc, f| &acc * f)
    }

    pub fn to_json_value(&self) -> Value {
        let matrix: Vec<Vec<String>> =
            (0..self.n()).map(|i| self.row(i).iter().map(format_rational).collect()).collect();
        json!({
            "name": self.name,
            "matrix": matrix,
            "labels": self.labels,
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_json_value()).expect("serializable")
    }

    /// Parses `{"name", "matrix", "labels"}`. An optional `"dim"` fixes the
    /// ambient dimension for empty arrangements; an optional `"constants"`
    /// field must be all zero, since only central arrangements are accepted.
    pub fn from_json(text: &str) -> Result<Self> {
        let v: Value = serde_json::from_str(text)
            .map_err(|e| Error::parse(format!("line {} column {}", e.line(), e.column()), e.to_string()))?;
        Self::from_json_value(&v)
    }

    pub fn from_json_value(v: &Value) -> Result<Self> {
        let obj = v.as_object().ok_or_else(|| Error::parse("root", "expected a JSON object"))?;
        let name = match obj.get("name") {
            None => "arrangement".to_string(),
            Some(Value::String(s)) => s.clone(),
            Some(_) => return Err(Error::parse("name", "expected a string")),
        };
        let rows_v = obj
            .get("matrix")
            .ok_or_else(|| Error::parse("matrix", "missing field"))?
            .as_array()
            .ok_or_else(|| Error::parse("matrix", "expected an array of rows"))?;
        let mut rows = Vec::with_capacity(rows_v.len());
        for (i, r) in rows_v.iter().enumerate() {
            let r = r.as_array().ok_or_else(|| Error::parse(format!("matrix[{i}]"), "expected an array"))?;
            let mut row = Vec::with_capacity(r.len());
            for (j, c) in r.iter().enumerate() {
                let ctx = format!("matrix[{i}][{j}]");
                let q = match c {
                    Value::String(s) => parse_rational(s).map_err(|e| Error::parse(&ctx, e.to_string()))?,
                    Value::Number(x) if x.is_i64() => Rational::from_integer(x.as_i64().unwrap().into()),
                    _ => return Err(Error::parse(ctx, "expected a rational string or integer")),
                };
                row.push(q);
            }
            rows.push(row);
        }
        let dim = match obj.get("dim") {
            Some(d) => d.as_u64().ok_or_else(|| Error::parse("dim", "expected a non-negative integer"))? as usize,
            None => rows
                .first()
                .map(|r| r.len())
                .ok_or_else(|| Error::parse("matrix", "empty matrix needs an explicit \"dim\""))?,
        };
        if let Some(c) = obj.get("constants") {
            let c = c.as_array().ok_or_else(|| Error::parse("constants", "expected an array"))?;
            for (i, x) in c.iter().enumerate() {
                let ctx = format!("constants[{i}]");
                let q = match x {
                    Value::String(s) => parse_rational(s).map_err(|e| Error::parse(&ctx, e.to_string()))?,
                    Value::Number(x) if x.is_i64() => Rational::from_integer(x.as_i64().unwrap().into()),
                    _ => return Err(Error::parse(ctx, "expected a rational")),
                };
                if !q.is_zero() {
                    return Err(Error::parse(ctx, "non-central hyperplane (nonzero constant term)"));
                }
            }
        }
        let labels = match obj.get("labels") {
            None => None,
            Some(Value::Array(a)) => Some(
                a.iter()
                    .enumerate()
                    .map(|(i, s)| {
                        s.as_str()
                            .map(str::to_string)
                            .ok_or_else(|| Error::parse(format!("labels[{i}]"), "expected a string"))
                    })
                    .collect::<Result<Vec<_>>>()?,
            ),
            Some(_) => return Err(Error::parse("labels", "expected an array of strings")),
        };
        Self::new(name, dim, rows, labels)
    }
}

/// True if two nonzero vectors are scalar multiples of each other.
pub(crate) fn proportional(a: &[Rational], b: &[Rational]) -> bool {
    let Some(p) = a.iter().position(|c| !c.is_zero()) else {
        return false;
    };
    if b[p].is_zero() {
        return false;
    }
    let s = &b[p] / &a[p];
    a.iter().zip(b).all(|(x, y)| &(x * &s) == y)
}

/// Scales a nonzero vector so its first nonzero entry is one.
pub(crate) fn normalize_first(v: &[Rational]) -> Vec<Rational> {
    match v.iter().find(|c| !c.is_zero()) {
        None => v.to_vec(),
        Some(lead) => {
            let lead = lead.clone();
            v.iter().map(|c| c / &lead).collect()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_input() {
        assert!(Arrangement::from_int_rows("z", 2, &[&[0, 0]]).is_err());
        assert!(Arrangement::from_int_rows("dup", 2, &[&[1, 1], &[-2, -2]]).is_err());
        assert!(Arrangement::from_int_rows("ragged", 2, &[&[1, 1, 0]]).is_err());
        let e = Arrangement::from_json(r#"{"matrix":[["1","0"],["0","x"]]}"#).unwrap_err();
        assert!(matches!(e, Error::Parse { ref context, .. } if context == "matrix[1][1]"));
        let e = Arrangement::from_json(r#"{"matrix":[["1","0"]],"constants":["1"]}"#).unwrap_err();
        assert!(matches!(e, Error::Parse { ref context, .. } if context == "constants[0]"));
        let e = Arrangement::from_json("{\n \"matrix\": [").unwrap_err();
        assert!(matches!(e, Error::Parse { ref context, .. } if context.starts_with("line 2")));
    }

    #[test]
    fn json_round_trip() {
        let a = Arrangement::new(
            "mixed",
            2,
            vec![vec![Rational::one(), crate::exactalg::ratio(-1, 2)], vec![Rational::zero(), Rational::one()]],
            Some(vec!["p".into(), "q".into()]),
        )
        .unwrap();
        let b = Arrangement::from_json(&a.to_json()).unwrap();
        assert_eq!(a, b);
        assert!(a.to_json().contains("\"-1/2\""));
    }

    #[test]
    fn ranks_and_flags() {
        let a = Arrangement::from_int_rows("x in 3d", 3, &[&[1, 0, 0]]).unwrap();
        assert_eq!(a.rank(), 1);
        assert!(!a.is_essential());
        assert!(a.is_boolean());
        let b = Arrangement::boolean(3);
        assert!(b.is_essential() && b.is_boolean());
        assert_eq!(b.defining_polynomial().total_degree(), Some(3));
    }
}

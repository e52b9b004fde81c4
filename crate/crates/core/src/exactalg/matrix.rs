use std::fmt;

use num_traits::{One, Zero};

use super::rational::{format_rational, Rational};

/// Dense matrix of exact rationals, row-major.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

/// Result of [`RationalMatrix::rref`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub matrix: RationalMatrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix { rows, cols, data: vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    /// Builds a matrix from rows; all rows must have length `cols`.
    pub fn from_rows(cols: usize, rows: Vec<Vec<Rational>>) -> Self {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged matrix");
            data.extend(r);
        }
        RationalMatrix { rows: n, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rational) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vec(&self, r: usize) -> Vec<Rational> {
        self.row(r).to_vec()
    }

    pub fn to_rows(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|r| self.row_vec(r)).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .filter(|(a, _)| !a.is_zero())
                    .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect()
    }

    pub fn mul(&self, other: &RationalMatrix) -> RationalMatrix {
        assert_eq!(self.cols, other.rows);
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = out.get(i, j) + a * other.get(k, j);
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// Reduced row-echelon form by Gauss-Jordan elimination. The result is
    /// unique for the row space of the input.
    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = Rational::one() / m.get(r, c);
            for j in c..m.cols {
                let v = m.get(r, j) * &inv;
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let f = m.get(i, c).clone();
                if f.is_zero() {
                    continue;
                }
                for j in c..m.cols {
                    let pv = m.get(r, j);
                    if pv.is_zero() {
                        continue;
                    }
                    let v = m.get(i, j) - &f * pv;
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        Rref { rank: pivots.len(), matrix: m, pivots }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Basis of the right null space, one vector per free column (in column order).
    pub fn kernel_basis(&self) -> Vec<Vec<Rational>> {
        let Rref { matrix, pivots, .. } = self.rref();
        let mut is_pivot = vec![None; self.cols];
        for (r, &c) in pivots.iter().enumerate() {
            is_pivot[c] = Some(r);
        }
        let mut out = Vec::new();
        for free in 0..self.cols {
            if is_pivot[free].is_some() {
                continue;
            }
            let mut v = vec![Rational::zero(); self.cols];
            v[free] = Rational::one();
            for (r, &c) in pivots.iter().enumerate() {
                v[c] = -matrix.get(r, free).clone();
            }
            out.push(v);
        }
        out
    }

    /// A matrix `L` with `L * self = I`, for a matrix of full column rank.
    pub fn left_inverse(&self) -> Option<RationalMatrix> {
        let (r, c) = (self.rows, self.cols);
        // rref of [self^T | I] gives E with E self^T = rref(self^T)
        let mut aug = RationalMatrix::zeros(c, r + c);
        for i in 0..c {
            for j in 0..r {
                aug.set(i, j, self.get(j, i).clone());
            }
            aug.set(i, r + i, Rational::one());
        }
        let rr = aug.rref();
        if rr.pivots.len() < c || rr.pivots.iter().any(|&p| p >= r) {
            return None;
        }
        // self^T X = I with X supported on the pivot rows; L = X^T
        let mut l = RationalMatrix::zeros(c, r);
        for (row, &p) in rr.pivots.iter().enumerate() {
            for j in 0..c {
                l.set(j, p, rr.matrix.get(row, r + j).clone());
            }
        }
        Some(l)
    }

    /// Nonzero rows of the reduced row-echelon form.
    pub fn row_space_basis(&self) -> Vec<Vec<Rational>> {
        let rr = self.rref();
        (0..rr.rank).map(|r| rr.matrix.row_vec(r)).collect()
    }

    pub fn determinant(&self) -> Rational {
        assert_eq!(self.rows, self.cols);
        let mut m = self.clone();
        let mut det = Rational::one();
        for c in 0..m.cols {
            let Some(p) = (c..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                return Rational::zero();
            };
            if p != c {
                m.swap_rows(p, c);
                det = -det;
            }
            let pv = m.get(c, c).clone();
            det *= &pv;
            for i in c + 1..m.rows {
                let f = m.get(i, c) / &pv;
                if f.is_zero() {
                    continue;
                }
                for j in c..m.cols {
                    let v = m.get(i, j) - &f * m.get(c, j);
                    m.set(i, j, v);
                }
            }
        }
        det
    }
}

impl fmt::Display for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(format_rational).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

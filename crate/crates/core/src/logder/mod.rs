//! Logarithmic p-derivations and p-forms, computed one graded piece at a time.
//!
//! Grading: `deg x_i = 1`, `deg ∂_i = -1`, `deg dx_i = 1`, so a p-derivation
//! whose coefficients have polynomial degree `e` has degree `e - p` (the Euler
//! derivation has degree 0), and a form `η / f` with `η` of coefficient degree
//! `e` has degree `e + p - n`.

use std::fmt;

use num_traits::{One, Zero};
use serde::Serialize;
use serde_json::{json, Value};

use crate::arrgmt::Arrangement;
use crate::error::{Error, Result};
use crate::exactalg::{
    binomial, monomials_of_degree, sparse_from_dense, IntBiPoly, Monomial, MultiPoly, Rational, RationalMatrix,
    SparseEchelon,
};

/// All `p`-subsets of `0..m` in lexicographic order.
pub fn subsets(m: usize, p: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, m: usize, p: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == p {
            out.push(cur.clone());
            return;
        }
        for i in start..m {
            cur.push(i);
            rec(i + 1, m, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if p <= m {
        rec(0, m, p, &mut Vec::new(), &mut out);
    }
    out
}

/// Sign of moving `k` into sorted position within the sorted set `j`.
fn insertion_sign(k: usize, j: &[usize]) -> Rational {
    let below = j.iter().filter(|&&x| x < k).count();
    if below % 2 == 0 {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// A p-derivation `sum_I θ_I ∂_{i_1} ∧ … ∧ ∂_{i_p}`, coefficients indexed by
/// the `p`-subsets of coordinates in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Derivation {
    m: usize,
    p: usize,
    degree: i32,
    coeffs: Vec<MultiPoly>,
}

impl Derivation {
    pub fn new(m: usize, p: usize, coeffs: Vec<MultiPoly>) -> Result<Self> {
        let k = subsets(m, p).len();
        if coeffs.len() != k {
            return Err(Error::WrongCardinality { expected: k, got: coeffs.len() });
        }
        let mut deg: Option<u32> = None;
        for c in &coeffs {
            if c.nvars() != m {
                return Err(Error::Precondition("coefficient in the wrong ring".into()));
            }
            if c.is_zero() {
                continue;
            }
            if !c.is_homogeneous() {
                return Err(Error::Precondition("coefficients must be homogeneous".into()));
            }
            let d = c.total_degree().unwrap();
            if deg.is_some_and(|e| e != d) {
                return Err(Error::Precondition("coefficients of different degrees".into()));
            }
            deg = Some(d);
        }
        let degree = deg.map(|d| d as i32 - p as i32).unwrap_or(0);
        Ok(Derivation { m, p, degree, coeffs })
    }

    /// The Euler derivation `sum x_i ∂_i`.
    pub fn euler(m: usize) -> Self {
        Derivation::new(m, 1, (0..m).map(|i| MultiPoly::var(m, i)).collect()).expect("well formed")
    }

    pub fn dim(&self) -> usize {
        self.m
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn degree(&self) -> i32 {
        self.degree
    }

    pub fn coeffs(&self) -> &[MultiPoly] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(MultiPoly::is_zero)
    }

    /// `θ(f)` for a 1-derivation.
    pub fn apply(&self, f: &MultiPoly) -> MultiPoly {
        assert_eq!(self.p, 1, "apply is defined for 1-derivations");
        let mut out = MultiPoly::zero(self.m);
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            out = &out + &(c * &f.derivative(i));
        }
        out
    }

    /// Checks the logarithmic condition at every hyperplane by exact division.
    pub fn is_logarithmic(&self, a: &Arrangement) -> bool {
        let subs = subsets(self.m, self.p);
        let lower = subsets(self.m, self.p.saturating_sub(1));
        if self.p == 0 {
            return true;
        }
        (0..a.n()).all(|j| {
            let f = a.form(j, self.m);
            let c = a.row(j);
            lower.iter().all(|jset| {
                let mut s = MultiPoly::zero(self.m);
                for (k, ck) in c.iter().enumerate() {
                    if jset.contains(&k) || ck.is_zero() {
                        continue;
                    }
                    let mut full = jset.clone();
                    full.push(k);
                    full.sort_unstable();
                    let idx = subs.iter().position(|x| *x == full).unwrap();
                    s = &s + &self.coeffs[idx].scale(&(ck * insertion_sign(k, jset)));
                }
                s.div_exact(&f).is_some()
            })
        })
    }

    pub fn to_json_value(&self) -> Value {
        json!({
            "p": self.p,
            "degree": self.degree,
            "coefficients": self.coeffs,
        })
    }
}

impl fmt::Display for Derivation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (1..=self.m).map(|i| format!("x{i}")).collect();
        let mut parts = Vec::new();
        for (c, s) in self.coeffs.iter().zip(subsets(self.m, self.p)) {
            if c.is_zero() {
                continue;
            }
            let d: Vec<String> = s.iter().map(|&i| format!("d{}", i + 1)).collect();
            parts.push(format!("({})*{}", c.to_string_with(&names), d.join("^")));
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ModuleKind {
    Derivations,
    Forms,
}

/// Exact basis of one graded piece of `D_p(A)` or `Ω^p(A)`. Each basis vector
/// lists coefficients over `(subset, monomial)` pairs, subset-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedModuleSlice {
    pub kind: ModuleKind,
    pub p: usize,
    pub degree: i32,
    /// Polynomial degree of the coefficients.
    pub coeff_degree: Option<u32>,
    pub monomials: Vec<Monomial>,
    pub subsets: Vec<Vec<usize>>,
    pub basis: Vec<Vec<Rational>>,
}

impl GradedModuleSlice {
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    /// The coefficient polynomials of one basis vector.
    pub fn coefficient_polys(&self, v: &[Rational], m: usize) -> Vec<MultiPoly> {
        let nm = self.monomials.len();
        (0..self.subsets.len())
            .map(|s| MultiPoly::from_terms(m, (0..nm).map(|k| (self.monomials[k].clone(), v[s * nm + k].clone()))))
            .collect()
    }

    pub fn to_json_value(&self) -> Value {
        json!({
            "kind": self.kind,
            "p": self.p,
            "degree": self.degree,
            "dimension": self.dimension(),
            "basis": self.basis.iter().map(|v| v.iter().map(crate::exactalg::format_rational).collect::<Vec<_>>()).collect::<Vec<_>>(),
        })
    }
}

/// Coefficients, in the monomial basis of degree `e` in `m - 1` variables, of
/// the linear map "substitute `x = B y`" applied to each degree-`e` monomial in
/// `m` variables.
fn restriction_table(b: &RationalMatrix, monos: &[Monomial], m: usize) -> Vec<MultiPoly> {
    let k = b.cols();
    let images: Vec<MultiPoly> = (0..m).map(|i| MultiPoly::linear(k, &b.row_vec(i))).collect();
    monos.iter().map(|mono| MultiPoly::term(mono.clone(), Rational::one()).substitute(&images)).collect()
}

fn hyperplane_basis(a: &Arrangement, j: usize) -> RationalMatrix {
    let m = a.dim();
    let ker = RationalMatrix::from_rows(m, vec![a.row(j).to_vec()]).kernel_basis();
    RationalMatrix::from_rows(m - 1, (0..m).map(|r| ker.iter().map(|v| v[r].clone()).collect()).collect())
}

/// Solves the homogeneous linear system given as a list of sparse equations.
fn solve(equations: Vec<Vec<(usize, Rational)>>, unknowns: usize) -> Vec<Vec<Rational>> {
    let mut ech: SparseEchelon<usize> = SparseEchelon::new();
    for eq in equations {
        let mut row: std::collections::BTreeMap<usize, Rational> = Default::default();
        for (i, c) in eq {
            *row.entry(i).or_insert_with(Rational::zero) += c;
        }
        ech.insert(row);
    }
    ech.kernel_basis(unknowns)
}

/// Collects `sum_k coeff_k * (poly_k restricted)` into equations, one per
/// monomial of the restricted ring.
fn push_equations(equations: &mut Vec<Vec<(usize, Rational)>>, terms: &[(usize, Rational, &MultiPoly)]) {
    let mut by_mono: std::collections::BTreeMap<Monomial, Vec<(usize, Rational)>> = Default::default();
    for (unknown, scale, poly) in terms {
        for (mono, c) in poly.terms() {
            by_mono.entry(mono.clone()).or_default().push((*unknown, scale * c));
        }
    }
    equations.extend(by_mono.into_values());
}

/// Degree-`d` piece of `D_p(A)`.
pub fn dp_slice(a: &Arrangement, p: usize, d: i32) -> Result<GradedModuleSlice> {
    let m = a.dim();
    if p > m {
        return Err(Error::Precondition(format!("p = {p} exceeds the dimension {m}")));
    }
    let subs = subsets(m, p);
    let e = d + p as i32;
    if e < 0 {
        return Ok(GradedModuleSlice {
            kind: ModuleKind::Derivations,
            p,
            degree: d,
            coeff_degree: None,
            monomials: vec![],
            subsets: subs,
            basis: vec![],
        });
    }
    let e = e as u32;
    let monos = monomials_of_degree(m, e);
    let nm = monos.len();
    let unknowns = subs.len() * nm;
    let mut equations = Vec::new();
    if p > 0 {
        let lower = subsets(m, p - 1);
        for j in 0..a.n() {
            let b = hyperplane_basis(a, j);
            let table = restriction_table(&b, &monos, m);
            let c = a.row(j);
            for jset in &lower {
                let mut terms = Vec::new();
                for (k, ck) in c.iter().enumerate() {
                    if jset.contains(&k) || ck.is_zero() {
                        continue;
                    }
                    let mut full = jset.clone();
                    full.push(k);
                    full.sort_unstable();
                    let s = subs.iter().position(|x| *x == full).unwrap();
                    let w = ck * insertion_sign(k, jset);
                    for (mi, img) in table.iter().enumerate() {
                        terms.push((s * nm + mi, w.clone(), img));
                    }
                }
                push_equations(&mut equations, &terms);
            }
        }
    }
    let basis = solve(equations, unknowns);
    Ok(GradedModuleSlice {
        kind: ModuleKind::Derivations,
        p,
        degree: d,
        coeff_degree: Some(e),
        monomials: monos,
        subsets: subs,
        basis,
    })
}

/// Degree-`d` piece of `Ω^p(A)`, as forms `η / f` with `f` the defining polynomial.
pub fn omega_slice(a: &Arrangement, p: usize, d: i32) -> Result<GradedModuleSlice> {
    let m = a.dim();
    if p > m {
        return Err(Error::Precondition(format!("p = {p} exceeds the dimension {m}")));
    }
    let subs = subsets(m, p);
    let e = d + a.n() as i32 - p as i32;
    if e < 0 {
        return Ok(GradedModuleSlice {
            kind: ModuleKind::Forms,
            p,
            degree: d,
            coeff_degree: None,
            monomials: vec![],
            subsets: subs,
            basis: vec![],
        });
    }
    let e = e as u32;
    let monos = monomials_of_degree(m, e);
    let nm = monos.len();
    let unknowns = subs.len() * nm;
    let upper = subsets(m, p + 1);
    let mut equations = Vec::new();
    for j in 0..a.n() {
        let b = hyperplane_basis(a, j);
        let table = restriction_table(&b, &monos, m);
        let c = a.row(j);
        // coefficient of dx_K in df_j ∧ η
        for kset in &upper {
            let mut terms = Vec::new();
            for (pos, &k) in kset.iter().enumerate() {
                if c[k].is_zero() {
                    continue;
                }
                let rest: Vec<usize> = kset.iter().copied().filter(|&x| x != k).collect();
                let s = subs.iter().position(|x| *x == rest).unwrap();
                let sign = if pos % 2 == 0 { Rational::one() } else { -Rational::one() };
                let w = &c[k] * sign;
                for (mi, img) in table.iter().enumerate() {
                    terms.push((s * nm + mi, w.clone(), img));
                }
            }
            push_equations(&mut equations, &terms);
        }
    }
    let basis = solve(equations, unknowns);
    Ok(GradedModuleSlice {
        kind: ModuleKind::Forms,
        p,
        degree: d,
        coeff_degree: Some(e),
        monomials: monos,
        subsets: subs,
        basis,
    })
}

/// Dimensions of `D_p(A)_d` for `d = 0..=dmax`.
pub fn hilbert_dp_truncated(a: &Arrangement, p: usize, dmax: u32) -> Result<Vec<usize>> {
    (0..=dmax as i32).map(|d| Ok(dp_slice(a, p, d)?.dimension())).collect()
}

/// Module generators found degree by degree.
#[derive(Clone, Debug)]
pub struct GeneratorSet {
    pub p: usize,
    pub dmax: u32,
    pub generators: Vec<Derivation>,
    /// Set when a generator appears in the top searched degree, so more may
    /// exist above `dmax`.
    pub warning: Option<String>,
}

impl GeneratorSet {
    pub fn degrees(&self) -> Vec<i32> {
        self.generators.iter().map(Derivation::degree).collect()
    }
}

fn derivation_vector(theta: &Derivation, monos: &[Monomial]) -> Vec<Rational> {
    let mut v = Vec::with_capacity(theta.coeffs.len() * monos.len());
    for c in &theta.coeffs {
        for mono in monos {
            v.push(c.coeff(mono));
        }
    }
    v
}

/// Minimal generators of `D_p(A)` in degrees up to `dmax`: in each degree the
/// slice basis vectors not in the span of multiples of earlier generators are
/// added, in basis order.
pub fn dp_generators(a: &Arrangement, p: usize, dmax: u32) -> Result<GeneratorSet> {
    let m = a.dim();
    let mut gens: Vec<Derivation> = Vec::new();
    let mut top_degree_hit = false;
    for d in -(p as i32)..=dmax as i32 {
        let slice = dp_slice(a, p, d)?;
        if slice.dimension() == 0 {
            continue;
        }
        let e = slice.coeff_degree.unwrap();
        let mut span: SparseEchelon<usize> = SparseEchelon::new();
        for g in &gens {
            let ge = (g.degree + p as i32) as u32;
            for mono in monomials_of_degree(m, e - ge) {
                let coeffs: Vec<MultiPoly> = g.coeffs.iter().map(|c| c.mul_monomial(&mono)).collect();
                let t = Derivation { m, p, degree: d, coeffs };
                span.insert(sparse_from_dense(&derivation_vector(&t, &slice.monomials)));
                if span.rank() == slice.dimension() {
                    break;
                }
            }
        }
        for v in &slice.basis {
            if span.rank() == slice.dimension() {
                break;
            }
            if span.insert(sparse_from_dense(v)) {
                gens.push(Derivation::new(m, p, slice.coefficient_polys(v, m))?);
                if d == dmax as i32 {
                    top_degree_hit = true;
                }
            }
        }
    }
    let warning = top_degree_hit
        .then(|| format!("a generator appears in the top searched degree {dmax}; generators above it may be missing"));
    Ok(GeneratorSet { p, dmax, generators: gens, warning })
}

/// Result of Saito's criterion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreenessCertificate {
    pub free: bool,
    /// Sorted generator degrees (Euler derivation in degree 0).
    pub degrees: Vec<i32>,
    /// `det = scalar * prod f_i` when free.
    pub scalar: Option<Rational>,
}

impl FreenessCertificate {
    /// Exponents `d_i + 1`.
    pub fn exponents(&self) -> Vec<i32> {
        self.degrees.iter().map(|d| d + 1).collect()
    }

    pub fn to_json_value(&self) -> Value {
        json!({
            "free": self.free,
            "degrees": self.degrees,
            "exponents": self.exponents(),
            "scalar": self.scalar.as_ref().map(crate::exactalg::format_rational),
        })
    }
}

fn determinant(rows: &[Vec<MultiPoly>], nvars: usize) -> MultiPoly {
    let k = rows.len();
    if k == 0 {
        return MultiPoly::one(nvars);
    }
    if k == 1 {
        return rows[0][0].clone();
    }
    let mut out = MultiPoly::zero(nvars);
    for c in 0..k {
        if rows[0][c].is_zero() {
            continue;
        }
        let minor: Vec<Vec<MultiPoly>> = rows[1..]
            .iter()
            .map(|r| r.iter().enumerate().filter(|(j, _)| *j != c).map(|(_, x)| x.clone()).collect())
            .collect();
        let t = &rows[0][c] * &determinant(&minor, nvars);
        out = if c % 2 == 0 { &out + &t } else { &out - &t };
    }
    out
}

/// Saito's criterion for `m` logarithmic 1-derivations of an essential arrangement.
pub fn saito_check(a: &Arrangement, gens: &[Derivation]) -> Result<FreenessCertificate> {
    let m = a.dim();
    if !a.is_essential() {
        return Err(Error::Precondition("Saito's criterion needs an essential arrangement".into()));
    }
    if gens.len() != m {
        return Err(Error::WrongCardinality { expected: m, got: gens.len() });
    }
    if gens.iter().any(|g| g.p != 1 || g.m != m) {
        return Err(Error::Precondition("expected 1-derivations on the ambient space".into()));
    }
    let mut degrees: Vec<i32> = gens.iter().map(Derivation::degree).collect();
    degrees.sort_unstable();
    let rows: Vec<Vec<MultiPoly>> = gens.iter().map(|g| g.coeffs.clone()).collect();
    let det = determinant(&rows, m);
    let q = a.defining_polynomial();
    let scalar = det.div_exact(&q).and_then(|c| {
        if c.is_zero() || c.total_degree() != Some(0) {
            None
        } else {
            Some(c.coeff(&Monomial::one(m)))
        }
    });
    Ok(FreenessCertificate { free: scalar.is_some(), degrees, scalar })
}

/// Searches for a Saito basis among the generators up to `dmax`.
pub fn freeness(a: &Arrangement, dmax: u32) -> Result<FreenessCertificate> {
    let g = dp_generators(a, 1, dmax)?;
    if g.generators.len() != a.dim() {
        let mut degrees = g.degrees();
        degrees.sort_unstable();
        return Ok(FreenessCertificate { free: false, degrees, scalar: None });
    }
    saito_check(a, &g.generators)
}

/// `chi(A,t) = prod (t - d_i - 1)`.
pub fn terao_check(a: &Arrangement, cert: &FreenessCertificate) -> Result<bool> {
    if !cert.free {
        return Err(Error::NotFree("certificate is not a freeness certificate".into()));
    }
    let mut prod = IntBiPoly::one();
    for &d in &cert.degrees {
        let f = &IntBiPoly::x() - &IntBiPoly::constant((d + 1).into());
        prod = &prod * &f;
    }
    Ok(prod == a.char_poly())
}

/// `P_A(x,y) = prod (1 + x^{d_i} y) / (1-x)^m` as `(numerator, m)`.
pub fn p_poly_free(cert: &FreenessCertificate, m: usize) -> Result<(IntBiPoly, u32)> {
    if !cert.free {
        return Err(Error::NotFree("P_A in closed form needs a free arrangement".into()));
    }
    let mut num = IntBiPoly::one();
    for &d in &cert.degrees {
        let d = u32::try_from(d).map_err(|_| Error::Precondition("negative generator degree".into()))?;
        let f = &IntBiPoly::one() + &IntBiPoly::monomial(d, 1, 1.into());
        num = &num * &f;
    }
    Ok((num, m as u32))
}

/// `sum_i C(d - d_i + m - 1, m - 1)`, the degree-`d` dimension of a free
/// module with generators in degrees `d_i`.
pub fn free_model_dim(degrees: &[i32], m: usize, d: i32) -> num_bigint::BigInt {
    degrees.iter().map(|&di| binomial((d - di) as i64 + m as i64 - 1, m as i64 - 1)).sum()
}

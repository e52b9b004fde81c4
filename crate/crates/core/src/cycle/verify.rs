use std::cell::OnceCell;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use super::class::{
    beta_intersection, chi_hom_at, class_from_chi, class_from_tutte, coefficient_table, multidegree_raw, ChowClass,
};
use super::delres::{check_delres, delres_ideals};
use super::report::{aggregate, Report, Status};
use super::series::{
    expected_hpoly_leading, leading_poles, psi_from_p, psi_truncated, signed_chi_at_minus_s, tutte_quotient,
    HilbertPolynomial,
};
use crate::arrgmt::Arrangement;
use crate::error::{Error, Result};
use crate::exactalg::{binomial, factorial, IntBiPoly, TruncatedRing};
use crate::groebner::{hilbert_function_oracle, GroebnerBasis, HilbertSeries};
use crate::logder::{dp_generators, hilbert_dp_truncated, p_poly_free, saito_check, FreenessCertificate, GeneratorSet};
use crate::logideal::{log_ideal, BigradedIdeal};

/// Knobs shared by all checks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyOptions {
    /// Degree bound for derivation generators; `None` means the number of hyperplanes.
    pub max_degree: Option<u32>,
    /// Bidegree bound `a + b` for the Hilbert function oracle.
    pub check_bound: u32,
    /// Bidegree bound for the Euler characteristic identity.
    pub dcplx_bound: u32,
    /// Degree bound for slice comparisons in the Solomon-Terao check.
    pub slice_bound: u32,
    /// Largest `dim + n` for which set-level membership tests are attempted.
    pub delres_max_vars: usize,
    /// Whether the arrangement is known to be tame.
    pub tame: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            max_degree: None,
            check_bound: 6,
            dcplx_bound: 4,
            slice_bound: 4,
            delres_max_vars: 8,
            tame: false,
        }
    }
}

/// Everything computed along the way to `[X(A)]`.
#[derive(Clone, Debug)]
pub struct ClassData {
    /// The essentialized arrangement.
    pub arrangement: Arrangement,
    pub generators: GeneratorSet,
    pub ideal: BigradedIdeal,
    pub groebner: GroebnerBasis,
    pub series: HilbertSeries,
    /// Degree-`l` part of `K(1-h, 1-k)` before truncation.
    pub raw: IntBiPoly,
    pub class: ChowClass,
}

/// Computes `[X(A)]` as the multidegree of `S / I(A)` after essentializing.
pub fn class_data(a: &Arrangement, max_degree: Option<u32>) -> Result<ClassData> {
    if a.is_empty() {
        return Err(Error::Precondition("empty arrangement".into()));
    }
    let ess = a.essentialize();
    let generators = dp_generators(&ess, 1, max_degree.unwrap_or(ess.n() as u32))?;
    class_data_from(ess, generators)
}

fn class_data_from(ess: Arrangement, generators: GeneratorSet) -> Result<ClassData> {
    let ideal = log_ideal(&ess, &generators.generators)?;
    let groebner = ideal.groebner();
    let series = groebner.hilbert_series(ideal.nx());
    let l = ess.rank() as u32;
    let raw = multidegree_raw(&series, l)?;
    let class = ChowClass::new(TruncatedRing::new(series.m, series.n), l, &raw)?;
    Ok(ClassData { arrangement: ess, generators, ideal, groebner, series, raw, class })
}

/// The checks that can be run on one arrangement.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Check {
    Main,
    Recurrence,
    Delres,
    Monic,
    HsLeading,
    Hpoly,
    TutteSpec,
    SolomonTerao,
    Dcplx,
    HsOracle,
    HomogRecurrence,
    Beta,
    Chern,
}

impl Check {
    pub const ALL: [Check; 13] = [
        Check::Main,
        Check::Monic,
        Check::Beta,
        Check::Chern,
        Check::HomogRecurrence,
        Check::Recurrence,
        Check::Delres,
        Check::HsLeading,
        Check::Hpoly,
        Check::TutteSpec,
        Check::SolomonTerao,
        Check::Dcplx,
        Check::HsOracle,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Main => "main",
            Check::Recurrence => "recurrence",
            Check::Delres => "delres",
            Check::Monic => "monic",
            Check::HsLeading => "hs-leading",
            Check::Hpoly => "hpoly",
            Check::TutteSpec => "tutte-spec",
            Check::SolomonTerao => "solomon-terao",
            Check::Dcplx => "dcplx",
            Check::HsOracle => "hs-oracle",
            Check::HomogRecurrence => "homog-recurrence",
            Check::Beta => "beta",
            Check::Chern => "chern",
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Check {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Check::ALL
            .iter()
            .copied()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::Precondition(format!("unknown check '{s}'")))
    }
}

fn class_json(c: &ChowClass) -> Value {
    json!({ "class": c.display(), "coefficients": c.to_json_value() })
}

fn poly_json(p: &IntBiPoly, x: &str, y: &str) -> Value {
    json!(p.display(x, y))
}

/// Runs checks against one arrangement, caching the expensive pieces.
pub struct Verifier {
    name: String,
    essential: Arrangement,
    opts: VerifyOptions,
    generators: OnceCell<GeneratorSet>,
    data: OnceCell<ClassData>,
}

impl Verifier {
    pub fn new(a: &Arrangement, opts: VerifyOptions) -> Self {
        Verifier {
            name: a.name().to_string(),
            essential: a.essentialize(),
            opts,
            generators: OnceCell::new(),
            data: OnceCell::new(),
        }
    }

    pub fn essential(&self) -> &Arrangement {
        &self.essential
    }

    pub fn options(&self) -> &VerifyOptions {
        &self.opts
    }

    fn l(&self) -> u32 {
        self.essential.rank() as u32
    }

    fn n(&self) -> u32 {
        self.essential.n() as u32
    }

    pub fn generators(&self) -> Result<&GeneratorSet> {
        if let Some(g) = self.generators.get() {
            return Ok(g);
        }
        let dmax = self.opts.max_degree.unwrap_or(self.n());
        let g = dp_generators(&self.essential, 1, dmax)?;
        Ok(self.generators.get_or_init(|| g))
    }

    pub fn class_data(&self) -> Result<&ClassData> {
        if let Some(d) = self.data.get() {
            return Ok(d);
        }
        let d = class_data_from(self.essential.clone(), self.generators()?.clone())?;
        Ok(self.data.get_or_init(|| d))
    }

    fn report(&self, check: Check, status: Status) -> Report {
        Report::new(&self.name, check.name(), status)
    }

    fn skipped(&self, check: Check, reason: &str) -> Report {
        self.report(check, Status::Skipped).witness("reason", json!(reason))
    }

    /// Runs one check and records its wall time.
    pub fn run(&self, check: Check) -> Result<Report> {
        let start = Instant::now();
        let mut r = match check {
            Check::Main => self.main_theorem(),
            Check::Recurrence => self.recurrence_all(),
            Check::Delres => self.delres_all(),
            Check::Monic => self.monic(),
            Check::HsLeading => self.hs_leading(),
            Check::Hpoly => self.hpoly(),
            Check::TutteSpec => self.tutte_spec(),
            Check::SolomonTerao => self.solomon_terao(),
            Check::Dcplx => self.dcplx(),
            Check::HsOracle => self.hs_oracle(),
            Check::HomogRecurrence => Ok(self.homog_recurrence()),
            Check::Beta => self.beta(),
            Check::Chern => self.chern(),
        }?;
        r.elapsed = Some(start.elapsed());
        Ok(r)
    }

    /// `[X(A)]` from the Gröbner basis against `chi-hom(A,-h,k-h)` from the Tutte polynomial.
    pub fn main_theorem(&self) -> Result<Report> {
        let d = self.class_data()?;
        let rhs = class_from_tutte(&self.essential);
        let direct = class_from_chi(&self.essential);
        let (k, m, n) = d.series.reduced();
        let status = Status::from_bool(d.class == rhs && direct == rhs);
        let mut r = self
            .report(Check::Main, status)
            .sides(class_json(&d.class), class_json(&rhs))
            .witness("chi_hom_direct", class_json(&direct))
            .witness("generator_degrees", json!(d.generators.degrees()))
            .witness("k_polynomial", poly_json(&d.series.k, "t", "u"))
            .witness("k_reduced", json!({ "numerator": k.display("t", "u"), "t_power": m, "u_power": n }))
            .witness("groebner_size", json!(d.groebner.len()));
        if let Some(w) = &d.generators.warning {
            r = r.witness("warning", json!(w));
        }
        Ok(r)
    }

    /// No `h^l` term and a unit `k^l` coefficient before truncation.
    pub fn monic(&self) -> Result<Report> {
        if self.essential.is_boolean() {
            return Ok(self.skipped(Check::Monic, "Boolean arrangement"));
        }
        let d = self.class_data()?;
        let l = self.l();
        let h_coeff = d.raw.coeff(l, 0);
        let k_coeff = d.raw.coeff(0, l);
        Ok(self
            .report(Check::Monic, Status::from_bool(h_coeff.is_zero() && k_coeff.is_one()))
            .sides(json!({ "h^l": h_coeff.to_string(), "k^l": k_coeff.to_string() }), json!({ "h^l": "0", "k^l": "1" }))
            .witness("untruncated", poly_json(&d.raw, "h", "k")))
    }

    /// The coefficient of `h^(l-1) k` against the beta invariant.
    pub fn beta(&self) -> Result<Report> {
        let d = self.class_data()?;
        let lhs = beta_intersection(&d.class);
        let rhs = self.essential.beta();
        Ok(self
            .report(Check::Beta, Status::from_bool(lhs == rhs))
            .sides(json!(lhs.to_string()), json!(rhs.to_string())))
    }

    /// `c_l = (-1)^(l-1) (l-1)! [X(A)]` against `-(l-1)! chi-hom(A, h, h-k)`.
    pub fn chern(&self) -> Result<Report> {
        let d = self.class_data()?;
        let l = self.l();
        let f = factorial(l.saturating_sub(1));
        let sign = if l % 2 == 1 { BigInt::one() } else { -BigInt::one() };
        let from_class = d.class.scale(&(&sign * &f));
        let h = IntBiPoly::x();
        let alt_poly = chi_hom_at(&self.essential, &h, &(&h - &IntBiPoly::y())).scale(&-f);
        let alt = ChowClass::new(d.class.ring(), l, &alt_poly)?;
        Ok(self
            .report(Check::Chern, Status::from_bool(from_class == alt))
            .sides(class_json(&from_class), class_json(&alt)))
    }

    /// Characteristic polynomial recurrences at every hyperplane.
    pub fn homog_recurrence(&self) -> Report {
        let a = &self.essential;
        let mut parts = Vec::new();
        for i in 0..a.n() {
            let tr = a.restrict(i).expect("index in range");
            let bridge = a.is_bridge(i).expect("index in range");
            let lhs = a.homog_char();
            let rhs = if bridge {
                &IntBiPoly::y() * &tr.deletion.homog_char()
            } else {
                &tr.deletion.homog_char() + &(&IntBiPoly::x() * &tr.restriction.homog_char())
            };
            let chi_ok = a.delres_check_at(i).unwrap_or(false);
            let direct_ok = a.homog_char_direct() == lhs;
            parts.push(
                Report::new(
                    &self.name,
                    Check::HomogRecurrence.name(),
                    Status::from_bool(lhs == rhs && chi_ok && direct_ok),
                )
                .sides(poly_json(&lhs, "s", "t"), poly_json(&rhs, "s", "t"))
                .witness("hyperplane", json!(i))
                .witness("bridge", json!(bridge))
                .witness("chi_recurrence", json!(chi_ok)),
            );
        }
        aggregate(&self.name, Check::HomogRecurrence.name(), parts)
    }

    /// Cycle-level recurrence at hyperplane `i`, with all three classes from
    /// their own Gröbner bases.
    pub fn recurrence(&self, i: usize) -> Result<Report> {
        let a = &self.essential;
        a.check_index(i)?;
        let check = Check::Recurrence;
        if a.n() == 1 {
            return Ok(self.skipped(check, "single hyperplane").witness("hyperplane", json!(i)));
        }
        let d = self.class_data()?;
        let ring = d.class.ring();
        let l = self.l();
        let tr = a.restrict(i)?;
        let bridge = a.is_bridge(i)?;
        let del = class_data(&tr.deletion, self.opts.max_degree)?;
        let lifted = del.class.lift(ring);
        let k = IntBiPoly::y();
        let mut r = if bridge {
            let rhs = lifted.mul(&k)?;
            self.report(check, Status::from_bool(d.class == rhs)).sides(class_json(&d.class), class_json(&rhs))
        } else {
            let lhs = d.class.mul(&k)?;
            let (extra, res_json) = if tr.restriction.is_boolean() {
                (IntBiPoly::monomial(1, l, BigInt::one()), Value::Null)
            } else {
                let res = class_data(&tr.restriction, self.opts.max_degree)?;
                let hk = IntBiPoly::monomial(1, 1, BigInt::one());
                (res.class.lift(ring).mul(&hk)?.poly().clone(), class_json(&res.class))
            };
            let sum = lifted.mul(&k)?.poly() + &extra;
            let rhs = ChowClass::new(ring, l + 1, &sum)?;
            self.report(check, Status::from_bool(lhs == rhs))
                .sides(class_json(&lhs), class_json(&rhs))
                .witness("restriction_class", res_json)
                .witness("restriction_boolean", json!(tr.restriction.is_boolean()))
        };
        r = r
            .witness("hyperplane", json!(i))
            .witness("bridge", json!(bridge))
            .witness("deletion_class", class_json(&del.class));
        Ok(r)
    }

    pub fn recurrence_all(&self) -> Result<Report> {
        let parts = (0..self.essential.n()).map(|i| self.recurrence(i)).collect::<Result<Vec<_>>>()?;
        Ok(aggregate(&self.name, Check::Recurrence.name(), parts))
    }

    /// Set-level deletion-restriction at hyperplane `i` by radical membership.
    pub fn delres_set(&self, i: usize) -> Result<Report> {
        let a = &self.essential;
        a.check_index(i)?;
        let check = Check::Delres;
        let size = a.dim() + a.n();
        if size > self.opts.delres_max_vars {
            return Ok(self
                .skipped(check, &format!("dim + n = {size} exceeds the guard {}", self.opts.delres_max_vars))
                .witness("hyperplane", json!(i)));
        }
        let ideals = delres_ideals(a, i, self.opts.max_degree)?;
        let out = check_delres(&ideals);
        let names = ideals.j.names();
        let gens =
            |b: &BigradedIdeal| -> Value { b.generators().iter().map(|g| json!(g.to_string_with(&names))).collect() };
        let mut r = self
            .report(check, Status::from_bool(out.holds()))
            .sides(gens(&ideals.j), json!({ "deletion": gens(&ideals.j1), "restriction": gens(&ideals.j2) }))
            .witness("hyperplane", json!(i))
            .witness("bridge", json!(out.bridge))
            .witness("forward", json!(out.forward))
            .witness("backward", json!(out.backward));
        if let Some(e) = out.exact_containment {
            r = r.witness("exact_containment", json!(e));
        }
        Ok(r)
    }

    pub fn delres_all(&self) -> Result<Report> {
        let parts = (0..self.essential.n()).map(|i| self.delres_set(i)).collect::<Result<Vec<_>>>()?;
        Ok(aggregate(&self.name, Check::Delres.name(), parts))
    }

    /// Pole coefficients of top order against `t_{i0}`.
    pub fn hs_leading(&self) -> Result<Report> {
        if self.essential.is_boolean() {
            return Ok(self.skipped(Check::HsLeading, "Boolean arrangement"));
        }
        let d = self.class_data()?;
        let poles = leading_poles(&d.series);
        let tutte = self.essential.tutte();
        let l = self.l();
        let expected: std::collections::BTreeMap<u32, BigInt> = (0..=self.n())
            .map(|i| (i, if (1..=l).contains(&i) { tutte.coeff(i, 0) } else { BigInt::zero() }))
            .collect();
        let ok = poles.leading == expected && poles.excess.is_empty();
        let exp_json: serde_json::Map<String, Value> =
            expected.iter().map(|(i, c)| (i.to_string(), json!(c.to_string()))).collect();
        Ok(self
            .report(Check::HsLeading, Status::from_bool(ok))
            .sides(poles.to_json_value(), json!({ "leading": exp_json, "excess": [] })))
    }

    /// Leading part of the Hilbert polynomial against the Tutte prediction,
    /// plus agreement with the series past the stability offset.
    pub fn hpoly(&self) -> Result<Report> {
        let d = self.class_data()?;
        let hp = HilbertPolynomial::from_series(&d.series);
        let (n, l) = (self.n(), self.l());
        let top = n.saturating_sub(2);
        let expected = expected_hpoly_leading(&self.essential.tutte(), l, n);
        let degree_ok = hp.total_degree().is_none_or(|t| t <= top);
        let leading = hp.poly.homogeneous_part(top);
        let (a0, b0) = HilbertPolynomial::stability_offset(&d.series);
        let mut mismatches = Vec::new();
        for a in a0..a0 + 3 {
            for b in b0..b0 + 3 {
                let want = crate::exactalg::Rational::from_integer(d.series.coefficient(a, b));
                if hp.eval(a as i64, b as i64) != want {
                    mismatches.push(json!([a, b]));
                }
            }
        }
        let ok = degree_ok && leading == expected && mismatches.is_empty();
        Ok(self
            .report(Check::Hpoly, Status::from_bool(ok))
            .sides(json!(leading.display("p", "q")), json!(expected.display("p", "q")))
            .witness("polynomial", json!(hp.display()))
            .witness("sample_origin", json!([a0, b0]))
            .witness("sample_mismatches", Value::Array(mismatches)))
    }

    /// `(1-t)^m` divides `K(t, t - st(1-t))` and the quotient at `t = 1` is
    /// `(-1)^l chi(-s)`.
    pub fn tutte_spec(&self) -> Result<Report> {
        let d = self.class_data()?;
        let expected = signed_chi_at_minus_s(&self.essential.char_poly(), self.l());
        let r = match tutte_quotient(&d.series) {
            None => self
                .report(Check::TutteSpec, Status::Fail)
                .sides(json!("not divisible"), poly_json(&expected, "s", "t")),
            Some(q) => {
                let at_one = q.eval_y_at_one();
                self.report(Check::TutteSpec, Status::from_bool(at_one == expected))
                    .sides(poly_json(&at_one, "s", "t"), poly_json(&expected, "s", "t"))
                    .witness("quotient", poly_json(&q, "s", "t"))
            }
        };
        Ok(r)
    }

    fn freeness(&self) -> Result<FreenessCertificate> {
        let g = self.generators()?;
        if g.generators.len() != self.essential.dim() {
            let mut degrees = g.degrees();
            degrees.sort_unstable();
            return Ok(FreenessCertificate { free: false, degrees, scalar: None });
        }
        saito_check(&self.essential, &g.generators)
    }

    /// `Psi(s, 1) = (-1)^m chi(-s)` by the free product formula, through the
    /// Gröbner K-polynomial for tame arrangements, or truncated otherwise.
    pub fn solomon_terao(&self) -> Result<Report> {
        let check = Check::SolomonTerao;
        let a = &self.essential;
        let m = a.dim() as u32;
        let expected = signed_chi_at_minus_s(&a.char_poly(), m);
        let cert = self.freeness()?;
        let bound = self.opts.slice_bound;
        if cert.free {
            let (num, mm) = p_poly_free(&cert, a.dim())?;
            let Some(psi) = psi_from_p(&num, mm) else {
                return Ok(self.report(check, Status::Fail).witness("reason", json!("Psi is not a polynomial")));
            };
            let at_one = psi.eval_y_at_one();
            // slices of D_p against the exterior-power model
            let mut slices_ok = true;
            for p in 0..=a.dim() {
                let dims = hilbert_dp_truncated(a, p, bound)?;
                for (dd, &got) in dims.iter().enumerate() {
                    let mut want = BigInt::zero();
                    for (&(j, q), c) in num.terms() {
                        if q as usize == p && j as usize <= dd {
                            want += c * binomial((dd - j as usize) as i64 + m as i64 - 1, m as i64 - 1);
                        }
                    }
                    if want != BigInt::from(got) {
                        slices_ok = false;
                    }
                }
            }
            // free implies K = prod (1 - t^{d_i} u)
            let d = self.class_data()?;
            let product = IntBiPoly::from_terms(
                num.terms().map(|(&(i, j), c)| ((i, j), if j % 2 == 1 { -c.clone() } else { c.clone() })),
            );
            let k_ok = d.series.k == product;
            return Ok(self
                .report(check, Status::from_bool(at_one == expected && slices_ok && k_ok))
                .sides(poly_json(&at_one, "s", "t"), poly_json(&expected, "s", "t"))
                .witness("path", json!("free"))
                .witness("degrees", json!(cert.degrees))
                .witness("psi", poly_json(&psi, "s", "t"))
                .witness("slices_match_model", json!(slices_ok))
                .witness("slice_bound", json!(bound))
                .witness("k_matches_product", json!(k_ok)));
        }
        if self.opts.tame {
            let d = self.class_data()?;
            let p_num = IntBiPoly::from_terms(
                d.series.k.terms().map(|(&(i, j), c)| ((i, j), if j % 2 == 1 { -c.clone() } else { c.clone() })),
            );
            let r = match psi_from_p(&p_num, d.series.m) {
                None => self.report(check, Status::Fail).witness("reason", json!("Psi is not a polynomial")),
                Some(psi) => {
                    let at_one = psi.eval_y_at_one();
                    self.report(check, Status::from_bool(at_one == expected))
                        .sides(poly_json(&at_one, "s", "t"), poly_json(&expected, "s", "t"))
                        .witness("psi", poly_json(&psi, "s", "t"))
                }
            };
            return Ok(r
                .witness("path", json!("tame"))
                .witness("p_numerator", poly_json(&p_num, "t", "y"))
                .witness("p_denominator_power", json!(d.series.m)));
        }
        let dims = (0..=a.dim()).map(|p| hilbert_dp_truncated(a, p, bound)).collect::<Result<Vec<_>>>()?;
        let psi = psi_truncated(&dims, bound);
        Ok(self
            .report(check, Status::Skipped)
            .witness("path", json!("truncated"))
            .witness("degree_bound", json!(bound))
            .witness("psi_mod_t", poly_json(&psi, "s", "t"))
            .witness("reason", json!("neither free nor flagged tame; only a truncation of Psi is available")))
    }

    /// `dim (S/I)_(a,b) = sum_p (-1)^p dim D_p(A)_a C(b-p+n-1, n-1)` for `a+b <= bound`.
    pub fn dcplx(&self) -> Result<Report> {
        if !self.opts.tame {
            return Ok(self.skipped(Check::Dcplx, "arrangement not flagged tame"));
        }
        let d = self.class_data()?;
        let a = &self.essential;
        let bound = self.opts.dcplx_bound;
        let n = a.n() as i64;
        let dims = (0..=a.rank()).map(|p| hilbert_dp_truncated(a, p, bound)).collect::<Result<Vec<_>>>()?;
        let mut table = Vec::new();
        let mut ok = true;
        for total in 0..=bound {
            for x in 0..=total {
                let y = total - x;
                let lhs = hilbert_function_oracle(&d.ideal, x, y)?;
                let mut rhs = BigInt::zero();
                for (p, row) in dims.iter().enumerate() {
                    let term = BigInt::from(row[x as usize]) * binomial(y as i64 - p as i64 + n - 1, n - 1);
                    if p % 2 == 0 {
                        rhs += term;
                    } else {
                        rhs -= term;
                    }
                }
                ok &= lhs == rhs;
                table.push(json!([x, y, lhs.to_string(), rhs.to_string()]));
            }
        }
        Ok(self
            .report(Check::Dcplx, Status::from_bool(ok))
            .witness("bound", json!(bound))
            .witness("table", Value::Array(table)))
    }

    /// Gröbner series coefficients against the linear-algebra oracle for `a+b <= check_bound`.
    pub fn hs_oracle(&self) -> Result<Report> {
        let d = self.class_data()?;
        let bound = self.opts.check_bound;
        let mut mismatches = Vec::new();
        let mut skipped = Vec::new();
        let mut count = 0;
        for total in 0..=bound {
            for x in 0..=total {
                let y = total - x;
                match hilbert_function_oracle(&d.ideal, x, y) {
                    Ok(v) => {
                        count += 1;
                        let s = d.series.coefficient(x, y);
                        if s != v {
                            mismatches.push(json!([x, y, s.to_string(), v.to_string()]));
                        }
                    }
                    Err(Error::ResourceLimit(_)) => skipped.push(json!([x, y])),
                    Err(e) => return Err(e),
                }
            }
        }
        let status = if !mismatches.is_empty() {
            Status::Fail
        } else if !skipped.is_empty() {
            Status::Skipped
        } else {
            Status::Pass
        };
        Ok(self
            .report(Check::HsOracle, status)
            .witness("bound", json!(bound))
            .witness("bidegrees_checked", json!(count))
            .witness("mismatches", Value::Array(mismatches))
            .witness("skipped", Value::Array(skipped))
            .witness("k_coefficients", coefficient_table(&d.series.k)))
    }
}

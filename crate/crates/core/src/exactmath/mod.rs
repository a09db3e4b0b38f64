//! Exact rational arithmetic and bivariate polynomial algebra with
//! closed-form definite integration.
//!
//! Every S-invariant in this crate is a double integral of a piecewise
//! polynomial. The pieces are sparse polynomials in two variables — written
//! `(t, v)` throughout, where `t` stands for a pseudo-effective threshold
//! that is itself a linear form `t(u)` — and the inner integration bounds are
//! rational multiples of `t(u)`. Under those restrictions the inner integral
//! is again a polynomial in `t`, substituting `t = t(u)` gives a univariate
//! polynomial in `u`, and the outer integral is an exact rational. No value
//! is ever rounded.
//!
//! [`quadrature`] holds the floating-point Gauss–Legendre estimator used as
//! an independent cross-check of the exact path; it shares no code with it.

pub mod quadrature;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::{Error, Result};

/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator.
pub type Rational = num_rational::BigRational;

/// Shorthand for `n/d` as a [`Rational`].
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Shorthand for an integer [`Rational`].
pub fn rat_i(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `"p/q"` or `"p"`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    Rational::from_str(s.trim()).map_err(|_| Error::BadRational(s.to_string()))
}

/// `f64` value of a rational, for display and for the quadrature oracle.
pub fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        // Fall back to a quotient of truncated parts for extreme operands.
        let n = r.numer().to_f64().unwrap_or(f64::MAX);
        let d = r.denom().to_f64().unwrap_or(f64::MAX);
        n / d
    })
}

/// A linear form `c + s·u` with exact rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinForm {
    pub constant: Rational,
    pub slope: Rational,
}

impl LinForm {
    pub fn new(constant: Rational, slope: Rational) -> Self {
        LinForm { constant, slope }
    }

    pub fn eval(&self, u: &Rational) -> Rational {
        &self.constant + &self.slope * u
    }

    pub fn eval_f64(&self, u: f64) -> f64 {
        to_f64(&self.constant) + to_f64(&self.slope) * u
    }

    /// The form scaled by a rational factor.
    pub fn scale(&self, c: &Rational) -> LinForm {
        LinForm::new(&self.constant * c, &self.slope * c)
    }
}

impl fmt::Display for LinForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}*u", self.constant, self.slope)
    }
}

/// Dense univariate polynomial, coefficients by ascending degree.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn new(coeffs: Vec<Rational>) -> Self {
        let mut p = UniPoly { coeffs };
        p.trim();
        p
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn add(&self, other: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![Rational::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            out[i] += c;
        }
        UniPoly::new(out)
    }

    pub fn scale(&self, c: &Rational) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Substitutes `x = c + s·u`, returning a polynomial in `u`.
    pub fn substitute_linear(&self, form: &LinForm) -> UniPoly {
        // Horner over the linear form: acc(u) <- acc(u)*(c + s u) + a_k.
        let mut acc = UniPoly::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul_linear(form);
            if acc.coeffs.is_empty() {
                acc.coeffs.push(c.clone());
            } else {
                acc.coeffs[0] += c;
            }
            acc.trim();
        }
        acc
    }

    fn mul_linear(&self, form: &LinForm) -> UniPoly {
        if self.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            out[i] += a * &form.constant;
            out[i + 1] += a * &form.slope;
        }
        UniPoly::new(out)
    }

    /// Exact definite integral over `[lo, hi]`.
    pub fn definite_integral(&self, lo: &Rational, hi: &Rational) -> Result<Rational> {
        if lo > hi {
            return Err(Error::EmptyInterval(lo.to_string(), hi.to_string()));
        }
        let mut acc = Rational::zero();
        let mut hi_pow = hi.clone();
        let mut lo_pow = lo.clone();
        for (k, c) in self.coeffs.iter().enumerate() {
            let k1 = rat_i(k as i64 + 1);
            acc += c / &k1 * (&hi_pow - &lo_pow);
            hi_pow *= hi;
            lo_pow *= lo;
        }
        Ok(acc)
    }
}

/// Sparse polynomial in two variables; keys are `(i, j)` exponent pairs for
/// the first and second variable, zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct BiPoly {
    terms: BTreeMap<(u32, u32), Rational>,
}

impl BiPoly {
    pub fn zero() -> Self {
        BiPoly::default()
    }

    pub fn from_terms(terms: impl IntoIterator<Item = ((u32, u32), Rational)>) -> Self {
        let mut p = BiPoly::zero();
        for ((i, j), c) in terms {
            p.add_term(i, j, c);
        }
        p
    }

    /// Adds `c·x^i y^j`, dropping the entry if the total cancels.
    pub fn add_term(&mut self, i: u32, j: u32, c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry((i, j)).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&(i, j));
        }
    }

    pub fn term(c: Rational, i: u32, j: u32) -> Self {
        let mut p = BiPoly::zero();
        p.add_term(i, j, c);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &Rational)> {
        self.terms.iter()
    }

    pub fn add(&self, other: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for ((i, j), c) in &other.terms {
            out.add_term(*i, *j, c.clone());
        }
        out
    }

    pub fn neg(&self) -> BiPoly {
        BiPoly {
            terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect(),
        }
    }

    pub fn sub(&self, other: &BiPoly) -> BiPoly {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Rational) -> BiPoly {
        if c.is_zero() {
            return BiPoly::zero();
        }
        BiPoly {
            terms: self.terms.iter().map(|(k, a)| (*k, a * c)).collect(),
        }
    }

    pub fn mul(&self, other: &BiPoly) -> BiPoly {
        let mut out = BiPoly::zero();
        for ((i1, j1), c1) in &self.terms {
            for ((i2, j2), c2) in &other.terms {
                out.add_term(i1 + i2, j1 + j2, c1 * c2);
            }
        }
        out
    }

    /// Exact value at a rational point.
    pub fn eval(&self, x: &Rational, y: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for ((i, j), c) in &self.terms {
            acc += c * pow(x, *i) * pow(y, *j);
        }
        acc
    }

    /// Float value, used only by the quadrature oracle and `--approx` output.
    pub fn eval_f64(&self, x: f64, y: f64) -> f64 {
        self.terms
            .iter()
            .map(|((i, j), c)| to_f64(c) * x.powi(*i as i32) * y.powi(*j as i32))
            .sum()
    }

    /// Formal partial derivative in the second variable.
    pub fn diff_second(&self) -> BiPoly {
        let mut out = BiPoly::zero();
        for ((i, j), c) in &self.terms {
            if *j > 0 {
                out.add_term(*i, j - 1, c * rat_i(*j as i64));
            }
        }
        out
    }

    /// Substitutes `y = frac·x`, returning a polynomial in `x`.
    pub fn at_second_frac(&self, frac: &Rational) -> UniPoly {
        let deg = self.terms.keys().map(|(i, j)| i + j).max().unwrap_or(0);
        let mut coeffs = vec![Rational::zero(); deg as usize + 1];
        for ((i, j), c) in &self.terms {
            coeffs[(i + j) as usize] += c * pow(frac, *j);
        }
        UniPoly::new(coeffs)
    }

    /// `∫ p dy` for `y` from `lo·x` to `hi·x`, as a polynomial in `x`.
    ///
    /// This is the only integration shape the S-invariant integrals need:
    /// each term `c·x^i y^j` contributes `c·(hi^{j+1}−lo^{j+1})/(j+1)·x^{i+j+1}`.
    pub fn integrate_second_frac(&self, lo: &Rational, hi: &Rational) -> Result<UniPoly> {
        if lo > hi {
            return Err(Error::EmptyInterval(lo.to_string(), hi.to_string()));
        }
        let deg = self.terms.keys().map(|(i, j)| i + j + 1).max().unwrap_or(0);
        let mut coeffs = vec![Rational::zero(); deg as usize + 1];
        for ((i, j), c) in &self.terms {
            let j1 = rat_i(*j as i64 + 1);
            coeffs[(i + j + 1) as usize] += c / &j1 * (pow(hi, j + 1) - pow(lo, j + 1));
        }
        Ok(UniPoly::new(coeffs))
    }

    /// `∫ p dy` over constant bounds, as a polynomial in `x`.
    pub fn integrate_second_const(&self, lo: &Rational, hi: &Rational) -> Result<UniPoly> {
        if lo > hi {
            return Err(Error::EmptyInterval(lo.to_string(), hi.to_string()));
        }
        let deg = self.terms.keys().map(|(i, _)| *i).max().unwrap_or(0);
        let mut coeffs = vec![Rational::zero(); deg as usize + 1];
        for ((i, j), c) in &self.terms {
            let j1 = rat_i(*j as i64 + 1);
            coeffs[*i as usize] += c / &j1 * (pow(hi, j + 1) - pow(lo, j + 1));
        }
        Ok(UniPoly::new(coeffs))
    }

    /// `∫ p dx` over constant bounds, as a polynomial in `y`.
    pub fn integrate_first_const(&self, lo: &Rational, hi: &Rational) -> Result<UniPoly> {
        self.swap_vars().integrate_second_const(lo, hi)
    }

    fn swap_vars(&self) -> BiPoly {
        BiPoly {
            terms: self.terms.iter().map(|((i, j), c)| ((*j, *i), c.clone())).collect(),
        }
    }

    /// Substitutes `x = c + s·u` (leaving `y` alone). Used to move a profile
    /// between equivalent threshold parametrizations.
    pub fn substitute_first_linear(&self, form: &LinForm) -> BiPoly {
        let mut out = BiPoly::zero();
        for ((i, j), c) in &self.terms {
            // (c0 + s u)^i expanded by the binomial theorem.
            let mut binom = Rational::one();
            for k in 0..=*i {
                let coeff = c * &binom * pow(&form.constant, i - k) * pow(&form.slope, k);
                out.add_term(k, *j, coeff);
                let num = rat_i((*i - k) as i64);
                let den = rat_i(k as i64 + 1);
                binom = binom * num / den;
            }
        }
        out
    }

    pub fn max_degree(&self) -> u32 {
        self.terms.keys().map(|(i, j)| i + j).max().unwrap_or(0)
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for ((i, j), c) in &self.terms {
            if !first {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            write!(f, "{}", c.abs())?;
            if *i > 0 {
                write!(f, "*t^{i}")?;
            }
            if *j > 0 {
                write!(f, "*v^{j}")?;
            }
            first = false;
        }
        Ok(())
    }
}

fn pow(x: &Rational, n: u32) -> Rational {
    let mut acc = Rational::one();
    for _ in 0..n {
        acc *= x;
    }
    acc
}

/// Exact value of `p` at `(u, v)`.
pub fn poly_eval(p: &BiPoly, u: &Rational, v: &Rational) -> Rational {
    p.eval(u, v)
}

/// Inner integral `∫ p(t(u), v) dv` for `v` from `lo·t(u)` to `hi·t(u)`,
/// returned as an exact polynomial in `u`.
pub fn integrate_v(p: &BiPoly, t_of_u: &LinForm, lo: &Rational, hi: &Rational) -> Result<UniPoly> {
    Ok(p.integrate_second_frac(lo, hi)?.substitute_linear(t_of_u))
}

/// Outer integral of a univariate polynomial over `[lo, hi]`, exact.
pub fn integrate_u(q: &UniPoly, lo: &Rational, hi: &Rational) -> Result<Rational> {
    q.definite_integral(lo, hi)
}

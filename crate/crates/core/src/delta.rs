//! S-invariant evaluation and delta lower-bound assembly.
//!
//! Over a profile with threshold range `[0, τ_u]`:
//!
//! * `S_A(Y) = τ_u/4` (the ambient volume is `(1 − u/τ_u)³(A³)` throughout),
//! * `S(V;Γ) = (3/A³)·∬ vol2`,
//! * `F_P     = (6/A³)·∬ deg1·ord_n`,
//! * `S(W;P) = (3/A³)·∬ deg1² + F_P`,
//!
//! and the verdict is `min{1/S_A, 1/S_V, a_weight/S_W}`, which exceeds 1
//! exactly when the flag certifies K-stability at the point.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::exactmath::{parse_rational, rat, rat_i, Rational};
use crate::flags::{FlagSpec, ZariskiProfile};
use crate::{Error, Result};

/// The exact S-invariants of one profile.
#[derive(Clone, Debug, PartialEq)]
pub struct SBreakdown {
    pub s_a_y: Rational,
    pub s_v: Rational,
    pub s_w: Rational,
    pub f_p: Rational,
    /// False when `ord_n` carries an upper bound, making `f_p` and `s_w`
    /// certified upper bounds (the verdict stays a valid lower bound).
    pub s_w_exact: bool,
}

/// The assembled lower bound: labeled min-terms and the K-stability flag.
#[derive(Clone, Debug, PartialEq)]
pub struct DeltaVerdict {
    pub terms: Vec<(&'static str, Rational)>,
    pub bound: Rational,
    pub exceeds_one: bool,
}

impl DeltaVerdict {
    fn assemble(terms: Vec<(&'static str, Rational)>) -> DeltaVerdict {
        let bound = terms
            .iter()
            .map(|(_, v)| v.clone())
            .min()
            .expect("at least one term");
        let exceeds_one = bound > Rational::one();
        DeltaVerdict { terms, bound, exceeds_one }
    }

    /// The label of a smallest term.
    pub fn active_term(&self) -> &'static str {
        self.terms
            .iter()
            .min_by(|a, b| a.1.cmp(&b.1))
            .map(|(l, _)| *l)
            .expect("at least one term")
    }
}

/// Evaluates the three S-invariants and the F-term of a profile, exactly.
pub fn s_values(profile: &ZariskiProfile) -> Result<SBreakdown> {
    let factor = rat_i(3) / &profile.a3;
    let s_a_y = &profile.tau_u / rat_i(4);
    let s_v = &factor * profile.integrate(|s| s.vol2.clone())?;
    let f_p = rat_i(2) * &factor * profile.integrate(|s| s.deg1.mul(&s.ord_n))?;
    let s_w = &factor * profile.integrate(|s| s.deg1.mul(&s.deg1))? + &f_p;
    Ok(SBreakdown {
        s_a_y,
        s_v,
        s_w,
        f_p,
        s_w_exact: !profile.ord_is_upper,
    })
}

/// Computes the delta lower bound of a flag spec through the integrator.
pub fn delta_bound(spec: &FlagSpec) -> Result<DeltaVerdict> {
    let profile = spec.profile()?;
    let b = s_values(&profile)?;
    for (name, val) in [("S_A(Y)", &b.s_a_y), ("S(V)", &b.s_v), ("S(W)", &b.s_w)] {
        if val.is_zero() {
            return Err(Error::DivisionByZero(match name {
                "S_A(Y)" => "delta_bound: S_A(Y) = 0",
                "S(V)" => "delta_bound: S(V) = 0",
                _ => "delta_bound: S(W) = 0",
            }));
        }
    }
    Ok(DeltaVerdict::assemble(vec![
        ("surface", rat_i(1) / &b.s_a_y),
        ("curve", rat_i(1) / &b.s_v),
        ("point", &profile.a_weight / &b.s_w),
    ]))
}

/// The closed-form type-I min-terms `{4l_Y, 4l_H/e, 4e/(r_P·l_Y·l_H·A³)}`.
pub fn type_i_closed_form(l_y: u32, l_h: u32, e: u32, r_p: u32, a3: &Rational) -> [Rational; 3] {
    [
        rat_i(4 * l_y as i64),
        rat(4 * l_h as i64, e as i64),
        rat_i(4 * e as i64) / (rat_i((r_p * l_y * l_h) as i64) * a3),
    ]
}

/// Closed-form F-term of a type IIa flag:
/// `n³/(4·l_Y·l_H³·A³) · μ(ν²+λμ)/ν² · ord_P(Δ|_Γ)`.
pub fn f_term_closed_form(spec: &FlagSpec) -> Result<Rational> {
    let FlagSpec::IIa { l_y, l_h, n, lambda, mu, nu, ord_p_delta, a3, .. } = spec else {
        return Err(Error::InvalidFlag("IIa", "closed-form F applies to IIa flags".into()));
    };
    if nu.is_zero() {
        return Err(Error::DivisionByZero("f_term_closed_form: ν = 0"));
    }
    let n3 = rat_i((*n as i64).pow(3));
    let den = rat_i(4 * *l_y as i64) * rat_i((*l_h as i64).pow(3)) * a3;
    Ok(n3 / den * (mu * (nu * nu + lambda * mu)) / (nu * nu) * ord_p_delta)
}

/// Closed-form S-values of a type IIb flag (S_V, S_W).
pub fn iib_closed_forms(spec: &FlagSpec) -> Result<(Rational, Rational)> {
    let FlagSpec::IIb { l_y, l_h, m, n, lambda, nu, a3, .. } = spec else {
        return Err(Error::InvalidFlag("IIb", "closed forms apply to IIb flags".into()));
    };
    let (m_r, n_r) = (rat_i(*m as i64), rat_i(*n as i64));
    let den = rat_i(4 * *l_y as i64) * rat_i((*l_h as i64).pow(3)) * a3;
    let s_v = &m_r * &m_r * (rat_i(3) * &n_r * nu + &m_r * lambda) / &den;
    let s_w = &m_r
        * (&m_r * &m_r * lambda * lambda
            + rat_i(3) * &m_r * &n_r * lambda * nu
            + rat_i(3) * &n_r * &n_r * nu * nu)
        / &den;
    Ok((s_v, s_w))
}

/// Closed forms of the blow-up flag: (S_V, S_W upper bound, F upper bound,
/// delta lower bound).
pub fn bl_closed_forms(r: u32, e: u32) -> Result<(Rational, Rational, Rational, Rational)> {
    if r < 2 || e == 0 {
        return Err(Error::InvalidFlag("BL", "requires r ≥ 2 and e ≥ 1".into()));
    }
    let (r, e) = (r as i64, e as i64);
    Ok((
        rat(r * r + 4 * r * e + 2 * e * e, 4 * e * r * (e + r)),
        rat(e + r, 4 * e),
        rat(r * r, 4 * e * (e + r)),
        rat(4 * e, e + r),
    ))
}

/// Converts a local alpha bound into a delta bound on a 3-fold:
/// `δ ≥ (4/3)·α` from `δ/(n+1) ≤ α` with n = 3.
pub fn alpha_to_delta(alpha_lower: &Rational) -> Rational {
    rat(4, 3) * alpha_lower
}

/// Alpha bound from an isolating set of coordinates:
/// `α ≥ min{1, 1/(r·n·e_max·A³)}`.
pub fn isolating_alpha_bound(r: u32, n_class: u32, e_max: u32, a3: &Rational) -> Rational {
    let c = rat_i(1) / (rat_i((r * n_class * e_max) as i64) * a3);
    c.min(Rational::one())
}

#[derive(Serialize, Deserialize)]
struct VerdictDto {
    #[serde(rename = "S_A_Y")]
    s_a_y: String,
    #[serde(rename = "S_V")]
    s_v: String,
    #[serde(rename = "S_W")]
    s_w: String,
    #[serde(rename = "F_P")]
    f_p: String,
    terms: Vec<(String, String)>,
    bound: String,
    exceeds_one: bool,
}

/// Breakdown + verdict as the JSON emission schema (rationals as `p/q`).
pub fn verdict_to_json(b: &SBreakdown, v: &DeltaVerdict) -> String {
    let dto = VerdictDto {
        s_a_y: b.s_a_y.to_string(),
        s_v: b.s_v.to_string(),
        s_w: b.s_w.to_string(),
        f_p: b.f_p.to_string(),
        terms: v.terms.iter().map(|(l, x)| (l.to_string(), x.to_string())).collect(),
        bound: v.bound.to_string(),
        exceeds_one: v.exceeds_one,
    };
    serde_json::to_string_pretty(&dto).expect("verdict serializes")
}

/// Parses the verdict JSON back (round-trip support for the CLI).
pub fn verdict_from_json(text: &str) -> Result<(SBreakdown, DeltaVerdict)> {
    let dto: VerdictDto = serde_json::from_str(text).map_err(|e| Error::Json(e.to_string()))?;
    let mut terms = Vec::new();
    for (l, x) in &dto.terms {
        let label: &'static str = match l.as_str() {
            "surface" => "surface",
            "curve" => "curve",
            "point" => "point",
            other => return Err(Error::Json(format!("unknown term label `{other}`"))),
        };
        terms.push((label, parse_rational(x)?));
    }
    let b = SBreakdown {
        s_a_y: parse_rational(&dto.s_a_y)?,
        s_v: parse_rational(&dto.s_v)?,
        s_w: parse_rational(&dto.s_w)?,
        f_p: parse_rational(&dto.f_p)?,
        s_w_exact: true,
    };
    let v = DeltaVerdict {
        terms,
        bound: parse_rational(&dto.bound)?,
        exceeds_one: dto.exceeds_one,
    };
    Ok((b, v))
}

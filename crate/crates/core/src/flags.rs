//! Piecewise Zariski-decomposition profiles.
//!
//! Each flag construction is compiled into a [`ZariskiProfile`]: over
//! `u ∈ [0, τ_u]` the threshold is a linear form `t(u)`, and `[0, t(u)]` in
//! `v` splits into segments carrying three polynomials in `(t, v)`:
//!
//! * `vol2` — the self-intersection of the positive part `(P(u,v)²)`,
//! * `deg1` — the degree `(P(u,v)·Γ)` on the flag curve,
//! * `ord_n` — the multiplicity `ord(N(u,v)|_Γ)` of the negative part at the
//!   flag point (identically zero when `N = 0`, an upper bound for the
//!   blow-up type flags).
//!
//! The S-invariants are then plain double integrals of these polynomials.

use serde::{Deserialize, Serialize};

use crate::exactmath::{
    integrate_u, parse_rational, rat, rat_i, BiPoly, LinForm, Rational, UniPoly,
};
use crate::{Error, Result};

use num_traits::{Signed, Zero};

/// One `v`-segment, with bounds given as fractions of `t(u)`.
#[derive(Clone, Debug, PartialEq)]
pub struct Segment {
    pub lo: Rational,
    pub hi: Rational,
    pub vol2: BiPoly,
    pub deg1: BiPoly,
    pub ord_n: BiPoly,
}

/// The full piecewise description of `P(u)|_Y − vΓ = P(u,v) + N(u,v)`.
#[derive(Clone, Debug, PartialEq)]
pub struct ZariskiProfile {
    /// Anticanonical degree (A³) of the ambient family.
    pub a3: Rational,
    /// Range of the first integration variable: `u ∈ [0, tau_u]`.
    pub tau_u: Rational,
    /// Pseudo-effective threshold `t(u)` as a linear form in `u`.
    pub t_of_u: LinForm,
    /// Multiplier on `S(W)` in the third min-term (`1/r_P` for quotient
    /// flags, `1` for the blow-up type flags).
    pub a_weight: Rational,
    /// True when `ord_n` stores an upper bound, making `S(W)` a certified
    /// upper bound and the verdict still a valid lower bound.
    pub ord_is_upper: bool,
    pub segments: Vec<Segment>,
}

/// Parameters of the four flag constructions.
#[derive(Clone, Debug, PartialEq)]
pub enum FlagSpec {
    /// Flag of type I: curve cut by hypersurfaces of degrees l_Y, l_H with
    /// H|_Y = eZ, through a 1/r_P point.
    I { l_y: u32, l_h: u32, e: u32, r_p: u32, a3: Rational },
    /// Flag of type IIa: H|_Y = mΓ + nΔ with Δ negative definite;
    /// λ = (Γ²), μ = −(Δ²), ν = (Γ·Δ), and ord = ord_P(Δ|_Γ).
    IIa {
        l_y: u32,
        l_h: u32,
        m: u32,
        n: u32,
        lambda: Rational,
        mu: Rational,
        nu: Rational,
        r_p: u32,
        ord_p_delta: Rational,
        a3: Rational,
    },
    /// Flag of type IIb: as IIa but with (Δ²) = 0.
    IIb {
        l_y: u32,
        l_h: u32,
        m: u32,
        n: u32,
        lambda: Rational,
        nu: Rational,
        r_p: u32,
        a3: Rational,
    },
    /// Generalized flag of blow-up type on X_{2r+e} ⊂ P(1,1,r−1,e,r).
    Bl { r: u32, e: u32 },
    /// A hand-built profile, validated on construction.
    Custom(ZariskiProfile),
}

impl FlagSpec {
    /// Compiles the spec into its Zariski profile.
    pub fn profile(&self) -> Result<ZariskiProfile> {
        match self {
            FlagSpec::I { l_y, l_h, e, r_p, a3 } => profile_type_i(*l_y, *l_h, *e, *r_p, a3),
            FlagSpec::IIa {
                l_y,
                l_h,
                m,
                n,
                lambda,
                mu,
                nu,
                r_p,
                ord_p_delta,
                a3,
            } => profile_type_iia(*l_y, *l_h, *m, *n, lambda, mu, nu, *r_p, ord_p_delta, a3),
            FlagSpec::IIb { l_y, l_h, m, n, lambda, nu, r_p, a3 } => {
                profile_type_iib(*l_y, *l_h, *m, *n, lambda, nu, *r_p, a3)
            }
            FlagSpec::Bl { r, e } => profile_type_bl(*r, *e),
            FlagSpec::Custom(p) => profile_custom(p.clone()),
        }
    }
}

/// `(t − v)²` and friends.
fn t_minus_v() -> BiPoly {
    BiPoly::from_terms([((1, 0), rat_i(1)), ((0, 1), rat_i(-1))])
}

/// Single-segment profile of a type I flag: `N(u,v) = 0` throughout and
/// everything is proportional to `(t − v)` powers.
pub fn profile_type_i(l_y: u32, l_h: u32, e: u32, r_p: u32, a3: &Rational) -> Result<ZariskiProfile> {
    if l_y == 0 || l_h == 0 || e == 0 || r_p == 0 || !a3.is_positive() {
        return Err(Error::InvalidFlag("type I", "all parameters must be positive".into()));
    }
    let (l_y_r, l_h_r, e_r) = (rat_i(l_y as i64), rat_i(l_h as i64), rat_i(e as i64));
    // t(u) = (e/l_H)(1 − l_Y u); P(u,v) ~ (l_H/e)(t − v)·A|_Y.
    let t_of_u = LinForm::new(&e_r / &l_h_r, -(&e_r * &l_y_r) / &l_h_r);
    let scale = (&l_h_r / &e_r) * (&l_h_r / &e_r) * &l_y_r * a3;
    let tmv = t_minus_v();
    let seg = Segment {
        lo: rat_i(0),
        hi: rat_i(1),
        vol2: tmv.mul(&tmv).scale(&scale),
        deg1: tmv.scale(&scale),
        ord_n: BiPoly::zero(),
    };
    Ok(ZariskiProfile {
        a3: a3.clone(),
        tau_u: rat_i(1) / &l_y_r,
        t_of_u,
        a_weight: rat_i(1) / rat_i(r_p as i64),
        ord_is_upper: false,
        segments: vec![seg],
    })
}

/// Two-segment profile of a type IIa flag, split at `(mν − nμ)/(mν)·t(u)`.
#[allow(clippy::too_many_arguments)]
pub fn profile_type_iia(
    l_y: u32,
    l_h: u32,
    m: u32,
    n: u32,
    lambda: &Rational,
    mu: &Rational,
    nu: &Rational,
    r_p: u32,
    ord_p_delta: &Rational,
    a3: &Rational,
) -> Result<ZariskiProfile> {
    let invalid = |msg: &str| Error::InvalidFlag("IIa", msg.into());
    if l_y == 0 || l_h == 0 || m == 0 || n == 0 || r_p == 0 || !a3.is_positive() {
        return Err(invalid("all integer parameters must be positive"));
    }
    let (m_r, n_r) = (rat_i(m as i64), rat_i(n as i64));
    if !mu.is_positive() {
        return Err(invalid("Δ must be negative definite: μ = −(Δ²) > 0"));
    }
    if &m_r * nu <= &n_r * mu {
        return Err(invalid("ampleness of H|_Y requires mν > nμ"));
    }
    if &n_r * nu + &m_r * lambda <= Rational::zero() {
        return Err(invalid("ampleness of H|_Y requires nν + mλ > 0"));
    }
    let disc = nu * nu + lambda * mu;
    if !disc.is_positive() {
        return Err(invalid("pseudo-effective cone requires ν² + λμ > 0"));
    }
    if ord_p_delta.is_negative() {
        return Err(invalid("ord_P(Δ|_Γ) must be nonnegative"));
    }

    let t_of_u = LinForm::new(&m_r / rat_i(l_h as i64), -rat_i((l_y * m) as i64) / rat_i(l_h as i64));
    let breakpoint = (&m_r * nu - &n_r * mu) / (&m_r * nu);

    // Segment 1: P = (t − v)Γ + (nt/m)Δ. The leading coefficient is the
    // volume of P(u)|_Y itself (scaled), so it must be positive.
    let c_top = (rat_i(2) * &m_r * &n_r * nu + &m_r * &m_r * lambda - &n_r * &n_r * mu) / (&m_r * &m_r);
    if !c_top.is_positive() {
        return Err(invalid("volume at v = 0 requires 2mnν + m²λ − n²μ > 0"));
    }
    let slope = (&n_r * nu + &m_r * lambda) / &m_r; // (P·Γ) = slope·t − λv
    let seg1 = Segment {
        lo: rat_i(0),
        hi: breakpoint.clone(),
        vol2: BiPoly::from_terms([
            ((2, 0), c_top),
            ((1, 1), rat_i(-2) * &slope),
            ((0, 2), lambda.clone()),
        ]),
        deg1: BiPoly::from_terms([((1, 0), slope), ((0, 1), -lambda)]),
        ord_n: BiPoly::zero(),
    };

    // Segment 2: P = (t − v)·P_Y with (P_Y²) = (P_Y·Γ) = (ν² + λμ)/μ, and
    // N = (mνv − (mν − nμ)t)/(mμ)·Δ.
    let py = &disc / mu;
    let tmv = t_minus_v();
    let n_coeff_v = (&m_r * nu) / (&m_r * mu);
    let n_coeff_t = (&m_r * nu - &n_r * mu) / (&m_r * mu);
    let seg2 = Segment {
        lo: breakpoint,
        hi: rat_i(1),
        vol2: tmv.mul(&tmv).scale(&py),
        deg1: tmv.scale(&py),
        ord_n: BiPoly::from_terms([
            ((0, 1), &n_coeff_v * ord_p_delta),
            ((1, 0), -(&n_coeff_t * ord_p_delta)),
        ]),
    };

    Ok(ZariskiProfile {
        a3: a3.clone(),
        tau_u: rat_i(1) / rat_i(l_y as i64),
        t_of_u,
        a_weight: rat_i(1) / rat_i(r_p as i64),
        ord_is_upper: false,
        segments: vec![seg1, seg2],
    })
}

/// Single-segment profile of a type IIb flag ((Δ²) = 0, N = 0).
#[allow(clippy::too_many_arguments)]
pub fn profile_type_iib(
    l_y: u32,
    l_h: u32,
    m: u32,
    n: u32,
    lambda: &Rational,
    nu: &Rational,
    r_p: u32,
    a3: &Rational,
) -> Result<ZariskiProfile> {
    let invalid = |msg: &str| Error::InvalidFlag("IIb", msg.into());
    if l_y == 0 || l_h == 0 || m == 0 || n == 0 || r_p == 0 || !a3.is_positive() {
        return Err(invalid("all integer parameters must be positive"));
    }
    if !nu.is_positive() {
        return Err(invalid("connectedness of H|_Y requires ν > 0"));
    }
    let (m_r, n_r) = (rat_i(m as i64), rat_i(n as i64));
    if &n_r * nu + &m_r * lambda <= Rational::zero() {
        return Err(invalid("ampleness of H|_Y requires nν > −mλ"));
    }
    let t_of_u = LinForm::new(&m_r / rat_i(l_h as i64), -rat_i((l_y * m) as i64) / rat_i(l_h as i64));
    let q = (&n_r / &m_r) * nu;
    // vol2 = λ(t−v)² + 2q·t(t−v); deg1 = λ(t−v) + q·t.
    let seg = Segment {
        lo: rat_i(0),
        hi: rat_i(1),
        vol2: BiPoly::from_terms([
            ((2, 0), lambda + rat_i(2) * &q),
            ((1, 1), rat_i(-2) * lambda - rat_i(2) * &q),
            ((0, 2), lambda.clone()),
        ]),
        deg1: BiPoly::from_terms([((1, 0), lambda + &q), ((0, 1), -lambda)]),
        ord_n: BiPoly::zero(),
    };
    Ok(ZariskiProfile {
        a3: a3.clone(),
        tau_u: rat_i(1) / rat_i(l_y as i64),
        t_of_u,
        a_weight: rat_i(1) / rat_i(r_p as i64),
        ord_is_upper: false,
        segments: vec![seg],
    })
}

/// Profile of the generalized blow-up flag on X_{2r+e} ⊂ P(1,1,r−1,e,r):
/// the Kawamata blow-up of the 1/r(1,1,r−1) point restricted to a general
/// Y ∈ |(r−1)A|, split at `ed/(e+r)²·t(u)` with the `ord ≤ e + r` cap
/// folded into `ord_n`.
pub fn profile_type_bl(r: u32, e: u32) -> Result<ZariskiProfile> {
    if r < 2 {
        return Err(Error::InvalidFlag("BL", "requires r ≥ 2".into()));
    }
    if e == 0 {
        return Err(Error::InvalidFlag("BL", "requires e ≥ 1".into()));
    }
    let (r_r, e_r) = (rat_i(r as i64), rat_i(e as i64));
    let d = rat_i((2 * r + e) as i64);
    let er_sum = &e_r + &r_r;
    let a3 = &d / (&e_r * &r_r * (&r_r - rat_i(1)));
    let tau_u = rat_i(1) / (&r_r - rat_i(1));
    // t(u) = ((e+r)/(er))·(1 − (r−1)u).
    let t_scale = &er_sum / (&e_r * &r_r);
    let t_of_u = LinForm::new(t_scale.clone(), -(&t_scale * (&r_r - rat_i(1))));
    let breakpoint = (&e_r * &d) / (&er_sum * &er_sum);

    // Segment 1: P = (er/(e+r))t·ψ*A_Y − vC with (ψ*A_Y²) = d/(er),
    // (C²) = −r, (ψ*A_Y · C) = 0.
    let seg1 = Segment {
        lo: rat_i(0),
        hi: breakpoint.clone(),
        vol2: BiPoly::from_terms([
            ((2, 0), (&e_r * &r_r * &d) / (&er_sum * &er_sum)),
            ((0, 2), -r_r.clone()),
        ]),
        deg1: BiPoly::term(r_r.clone(), 0, 1),
        ord_n: BiPoly::zero(),
    };

    // Segment 2: P = (e/r)(t − v)·P_Ỹ with (P_Ỹ²) = dr/e, (P_Ỹ·C) = d;
    // N = ((e+r)/r)(v − breakpoint·t)·N_Ỹ with ord_Q(N_Ỹ|_C) ≤ e + r.
    let tmv = t_minus_v();
    let ed_over_r = (&e_r * &d) / &r_r;
    let cap = &er_sum * &er_sum / &r_r;
    let seg2 = Segment {
        lo: breakpoint.clone(),
        hi: rat_i(1),
        vol2: tmv.mul(&tmv).scale(&ed_over_r),
        deg1: tmv.scale(&ed_over_r),
        ord_n: BiPoly::from_terms([((0, 1), cap.clone()), ((1, 0), -(&cap * &breakpoint))]),
    };

    Ok(ZariskiProfile {
        a3,
        tau_u,
        t_of_u,
        a_weight: rat_i(1),
        ord_is_upper: true,
        segments: vec![seg1, seg2],
    })
}

/// Validates a hand-built profile and passes it through unchanged.
pub fn profile_custom(profile: ZariskiProfile) -> Result<ZariskiProfile> {
    profile.validate()?;
    Ok(profile)
}

impl ZariskiProfile {
    /// Checks the structural invariants: segment fractions partition [0, 1],
    /// `vol2`/`deg1` agree at shared boundaries, and the volume vanishes at
    /// the pseudo-effective threshold `v = t(u)`.
    pub fn validate(&self) -> Result<()> {
        let fail = |segment: usize, reason: String| Err(Error::InvalidProfile { segment, reason });
        if self.segments.is_empty() {
            return fail(0, "no segments".into());
        }
        if !self.a3.is_positive() {
            return fail(0, "A3 must be positive".into());
        }
        if !self.tau_u.is_positive() {
            return fail(0, "tau_u must be positive".into());
        }
        if !self.t_of_u.eval(&rat_i(0)).is_positive() || self.t_of_u.eval(&self.tau_u).is_negative()
        {
            return fail(0, "t(u) must be positive on [0, tau_u)".into());
        }
        if !self.segments[0].lo.is_zero() {
            return fail(0, format!("first segment starts at {}, not 0", self.segments[0].lo));
        }
        let last = self.segments.len() - 1;
        if self.segments[last].hi != rat_i(1) {
            return fail(last, format!("last segment ends at {}, not 1", self.segments[last].hi));
        }
        for (i, seg) in self.segments.iter().enumerate() {
            if seg.lo >= seg.hi {
                return fail(i, format!("empty segment [{}, {}]", seg.lo, seg.hi));
            }
            if i + 1 < self.segments.len() {
                let next = &self.segments[i + 1];
                if seg.hi != next.lo {
                    return fail(i, format!("gap or overlap at {} vs {}", seg.hi, next.lo));
                }
                if seg.vol2.at_second_frac(&seg.hi) != next.vol2.at_second_frac(&seg.hi) {
                    return fail(i, format!("vol2 discontinuous at fraction {}", seg.hi));
                }
                if seg.deg1.at_second_frac(&seg.hi) != next.deg1.at_second_frac(&seg.hi) {
                    return fail(i, format!("deg1 discontinuous at fraction {}", seg.hi));
                }
            }
        }
        if !self.segments[last].vol2.at_second_frac(&rat_i(1)).is_zero() {
            return fail(last, "volume does not vanish at the threshold v = t(u)".into());
        }
        Ok(())
    }

    /// Exact `∫₀^{τ} Σ_segments ∫ field dv du` for a per-segment integrand.
    pub fn integrate<F>(&self, field: F) -> Result<Rational>
    where
        F: Fn(&Segment) -> BiPoly,
    {
        let zero = rat_i(0);
        let mut in_t = UniPoly::zero();
        for seg in &self.segments {
            in_t = in_t.add(&field(seg).integrate_second_frac(&seg.lo, &seg.hi)?);
        }
        let in_u = in_t.substitute_linear(&self.t_of_u);
        integrate_u(&in_u, &zero, &self.tau_u)
    }

    /// Rewrites the profile against the rescaled threshold variable
    /// `t' = c·t`: the linear form picks up the factor, polynomials read
    /// `p(t'/c, v)`, and every segment boundary fraction is divided by `c`.
    /// All integrals — hence every S-value and verdict — are invariant.
    pub fn rescale_t(&self, c: &Rational) -> Result<ZariskiProfile> {
        if !c.is_positive() {
            return Err(Error::InvalidFlag("rescale", "factor must be positive".into()));
        }
        let inv = rat_i(1) / c;
        let sub = |p: &BiPoly| -> BiPoly {
            BiPoly::from_terms(p.terms().map(|((i, j), coeff)| {
                let mut scaled = coeff.clone();
                for _ in 0..*i {
                    scaled *= &inv;
                }
                ((*i, *j), scaled)
            }))
        };
        Ok(ZariskiProfile {
            a3: self.a3.clone(),
            tau_u: self.tau_u.clone(),
            t_of_u: self.t_of_u.scale(c),
            a_weight: self.a_weight.clone(),
            ord_is_upper: self.ord_is_upper,
            segments: self
                .segments
                .iter()
                .map(|s| Segment {
                    lo: &s.lo * &inv,
                    hi: &s.hi * &inv,
                    vol2: sub(&s.vol2),
                    deg1: sub(&s.deg1),
                    ord_n: sub(&s.ord_n),
                })
                .collect(),
        })
    }

    /// Serializes to the JSON profile schema (all rationals as `p/q`
    /// strings, exponent pairs referring to `(t, v)`).
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&ProfileDto::from(self)).expect("profile serializes")
    }

    /// Parses and validates a JSON profile.
    pub fn from_json(text: &str) -> Result<ZariskiProfile> {
        let dto: ProfileDto =
            serde_json::from_str(text).map_err(|e| Error::Json(e.to_string()))?;
        profile_custom(dto.try_into()?)
    }
}

#[derive(Serialize, Deserialize)]
struct ProfileDto {
    #[serde(rename = "A3")]
    a3: String,
    tau_u: String,
    t_of_u: LinFormDto,
    a_weight: String,
    #[serde(default, rename = "ordN_is_upper", skip_serializing_if = "is_false")]
    ord_is_upper: bool,
    segments: Vec<SegmentDto>,
}

fn is_false(b: &bool) -> bool {
    !*b
}

#[derive(Serialize, Deserialize)]
struct LinFormDto {
    constant: String,
    slope: String,
}

#[derive(Serialize, Deserialize)]
struct SegmentDto {
    lo: String,
    hi: String,
    vol2: Vec<(u32, u32, String)>,
    deg1: Vec<(u32, u32, String)>,
    #[serde(rename = "ordN")]
    ord_n: Vec<(u32, u32, String)>,
}

fn poly_to_dto(p: &BiPoly) -> Vec<(u32, u32, String)> {
    p.terms().map(|((i, j), c)| (*i, *j, c.to_string())).collect()
}

fn poly_from_dto(rows: &[(u32, u32, String)]) -> Result<BiPoly> {
    let mut p = BiPoly::zero();
    for (i, j, c) in rows {
        p.add_term(*i, *j, parse_rational(c)?);
    }
    Ok(p)
}

impl From<&ZariskiProfile> for ProfileDto {
    fn from(p: &ZariskiProfile) -> Self {
        ProfileDto {
            a3: p.a3.to_string(),
            tau_u: p.tau_u.to_string(),
            t_of_u: LinFormDto {
                constant: p.t_of_u.constant.to_string(),
                slope: p.t_of_u.slope.to_string(),
            },
            a_weight: p.a_weight.to_string(),
            ord_is_upper: p.ord_is_upper,
            segments: p
                .segments
                .iter()
                .map(|s| SegmentDto {
                    lo: s.lo.to_string(),
                    hi: s.hi.to_string(),
                    vol2: poly_to_dto(&s.vol2),
                    deg1: poly_to_dto(&s.deg1),
                    ord_n: poly_to_dto(&s.ord_n),
                })
                .collect(),
        }
    }
}

impl TryFrom<ProfileDto> for ZariskiProfile {
    type Error = Error;

    fn try_from(dto: ProfileDto) -> Result<ZariskiProfile> {
        let mut segments = Vec::new();
        for s in &dto.segments {
            segments.push(Segment {
                lo: parse_rational(&s.lo)?,
                hi: parse_rational(&s.hi)?,
                vol2: poly_from_dto(&s.vol2)?,
                deg1: poly_from_dto(&s.deg1)?,
                ord_n: poly_from_dto(&s.ord_n)?,
            });
        }
        Ok(ZariskiProfile {
            a3: parse_rational(&dto.a3)?,
            tau_u: parse_rational(&dto.tau_u)?,
            t_of_u: LinForm::new(
                parse_rational(&dto.t_of_u.constant)?,
                parse_rational(&dto.t_of_u.slope)?,
            ),
            a_weight: parse_rational(&dto.a_weight)?,
            ord_is_upper: dto.ord_is_upper,
            segments,
        })
    }
}

/// Negative definiteness of the k×k symmetric matrix with constant diagonal
/// and constant off-diagonal entries. Eigenvalues are `diag − offdiag`
/// (multiplicity k−1, absent for k = 1) and `diag + (k−1)·offdiag`.
pub fn check_negative_definite(diag: &Rational, offdiag: &Rational, k: u32) -> bool {
    debug_assert!(k >= 1);
    let bulk = diag - offdiag;
    let rayleigh = diag + rat_i(k as i64 - 1) * offdiag;
    (k == 1 || bulk.is_negative()) && rayleigh.is_negative()
}

/// Self-intersection of a quasismooth curve on a surface through quotient
/// points of the listed indices: (Γ²) = −(K_Y·Γ) + (2p_a − 2) + Σ(rᵢ−1)/rᵢ.
pub fn intersection_from_adjunction(
    k_y_dot_gamma: &Rational,
    p_a: u32,
    indices: &[u64],
) -> Rational {
    let mut acc = -k_y_dot_gamma + rat_i(2 * p_a as i64 - 2);
    for r in indices {
        acc += rat(*r as i64 - 1, *r as i64);
    }
    acc
}

/// Solves for ν = (Γ·Δ) and (Δ²) from H|_Y = mΓ + nΔ by intersecting with
/// Γ and then with Δ.
pub fn solve_residual_intersections(
    h_class_sq: &Rational,
    m: u32,
    n: u32,
    gamma_sq: &Rational,
    h_dot_gamma: &Rational,
) -> Result<(Rational, Rational)> {
    if n == 0 {
        return Err(Error::DivisionByZero("solve_residual_intersections: n = 0"));
    }
    let (m_r, n_r) = (rat_i(m as i64), rat_i(n as i64));
    let nu = (h_dot_gamma - &m_r * gamma_sq) / &n_r;
    let h_dot_delta = (h_class_sq - &m_r * h_dot_gamma) / &n_r;
    let delta_sq = (&h_dot_delta - &m_r * &nu) / &n_r;
    Ok((nu, delta_sq))
}

/// The hand-built profile used for the 1/5(1,2,3) case with t²w, z³w ∉ F
/// and z⁴t ∈ F on X₁₁ ⊂ P(1,1,2,3,5): the Kawamata blow-up restricted to a
/// general Y ∈ |A|, with N_Ỹ = Γ̃ + Δ̃ + Ξ̃ and ord_Q(N_Ỹ|_C) ≤ 1.
///
/// Parametrized by the full threshold t(u) = (11/5)(1−u); breakpoints sit at
/// fractions 1/11 (nef boundary) and 1 (pseudo-effective boundary).
pub fn profile_13_iv() -> ZariskiProfile {
    // Segment 1: P = (1−u)ψ*A_Y − vC, (ψ*A²) = 11/30, (C²) = −5/6, so in t:
    // vol2 = (5/66)t² − (5/6)v², deg1 = (5/6)v.
    let seg1 = Segment {
        lo: rat_i(0),
        hi: rat(1, 11),
        vol2: BiPoly::from_terms([((2, 0), rat(5, 66)), ((0, 2), rat(-5, 6))]),
        deg1: BiPoly::term(rat(5, 6), 0, 1),
        ord_n: BiPoly::zero(),
    };
    // Segment 2: P = ((t−v)/2)·P_Ỹ with (P_Ỹ²) = 1/3, (P_Ỹ·C) = 1/6;
    // N-coefficient (11v − t)/22 with cap ord ≤ 1.
    let seg2 = Segment {
        lo: rat(1, 11),
        hi: rat_i(1),
        vol2: BiPoly::from_terms([
            ((2, 0), rat(1, 12)),
            ((1, 1), rat(-1, 6)),
            ((0, 2), rat(1, 12)),
        ]),
        deg1: BiPoly::from_terms([((1, 0), rat(1, 12)), ((0, 1), rat(-1, 12))]),
        ord_n: BiPoly::from_terms([((0, 1), rat(1, 2)), ((1, 0), rat(-1, 22))]),
    };
    ZariskiProfile {
        a3: rat(11, 30),
        tau_u: rat_i(1),
        t_of_u: LinForm::new(rat(11, 5), rat(-11, 5)),
        a_weight: rat_i(1),
        ord_is_upper: true,
        segments: vec![seg1, seg2],
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn iia_profile_matches_case_5_iii() {
        // (l_Y,l_H,m,n,λ,μ,ν,r_P) = (1,1,1,1,−5/6,1/2,1,3): breakpoint 1/2,
        // first-segment integrand 2/3·t² − 1/3·tv − 5/6·v², second 7/6(t−v)².
        let p = profile_type_iia(1, 1, 1, 1, &rat(-5, 6), &rat(1, 2), &rat_i(1), 3, &rat_i(0), &rat(7, 6))
            .unwrap();
        assert_eq!(p.segments[0].hi, rat(1, 2));
        let vol1 = BiPoly::from_terms([
            ((2, 0), rat(2, 3)),
            ((1, 1), rat(-1, 3)),
            ((0, 2), rat(-5, 6)),
        ]);
        assert_eq!(p.segments[0].vol2, vol1);
        let vol2 = BiPoly::from_terms([
            ((2, 0), rat(7, 6)),
            ((1, 1), rat(-7, 3)),
            ((0, 2), rat(7, 6)),
        ]);
        assert_eq!(p.segments[1].vol2, vol2);
        // deg1 on segment 1 is (t + 5v)/6.
        let deg1 = BiPoly::from_terms([((1, 0), rat(1, 6)), ((0, 1), rat(5, 6))]);
        assert_eq!(p.segments[0].deg1, deg1);
        p.validate().unwrap();
    }

    #[test]
    fn iia_profile_matches_case_13_iii() {
        let p = profile_type_iia(
            1, 1, 1, 1, &rat(-8, 15), &rat(3, 10), &rat(3, 5), 5, &rat(3, 5), &rat(11, 30),
        )
        .unwrap();
        assert_eq!(p.segments[0].hi, rat(1, 2));
        let vol1 = BiPoly::from_terms([
            ((2, 0), rat(11, 30)),
            ((1, 1), rat(-2, 15)),
            ((0, 2), rat(-8, 15)),
        ]);
        assert_eq!(p.segments[0].vol2, vol1);
        assert_eq!(p.segments[1].vol2.at_second_frac(&rat_i(1)), UniPoly::zero());
        // Second-segment factor (ν²+λμ)/μ = 2/3.
        assert_eq!(
            p.segments[1].vol2,
            BiPoly::from_terms([((2, 0), rat(2, 3)), ((1, 1), rat(-4, 3)), ((0, 2), rat(2, 3))])
        );
        p.validate().unwrap();
    }

    #[test]
    fn iia_rejects_collapsed_second_segment() {
        // nμ = mν collapses segment 2 to zero width.
        let err = profile_type_iia(
            1, 1, 1, 1, &rat(-1, 2), &rat(1, 2), &rat(1, 2), 3, &rat_i(0), &rat(7, 6),
        );
        assert!(matches!(err, Err(Error::InvalidFlag("IIa", _))));
    }

    #[test]
    fn iia_rejects_zero_mu() {
        let err = profile_type_iia(1, 1, 1, 1, &rat(-5, 6), &rat_i(0), &rat_i(1), 3, &rat_i(0), &rat(7, 6));
        assert!(err.is_err());
    }

    #[test]
    fn bl_profile_structure() {
        // (r, e) = (2, 1): d = 5, t(u) = (3/2)(1−u), breakpoint 5/9.
        let p = profile_type_bl(2, 1).unwrap();
        assert_eq!(p.a3, rat(5, 2));
        assert_eq!(p.tau_u, rat_i(1));
        assert_eq!(p.segments[0].hi, rat(5, 9));
        // Segment-1 vol2 = (erd/(e+r)²)t² − rv² = (10/9)t² − 2v².
        assert_eq!(
            p.segments[0].vol2,
            BiPoly::from_terms([((2, 0), rat(10, 9)), ((0, 2), rat_i(-2))])
        );
        p.validate().unwrap();
        assert!(profile_type_bl(1, 1).is_err());
        assert!(profile_type_bl(3, 0).is_err());
    }

    #[test]
    fn custom_profile_13_iv_is_valid() {
        let p = profile_custom(profile_13_iv()).unwrap();
        assert_eq!(p.segments.len(), 2);
        // ord cap 1: the ord_n polynomial at v = t is (11−1)/22·t·... strictly
        // positive and bounded by 1·coefficient form.
        assert!(!p.segments[1].ord_n.is_zero());
    }

    #[test]
    fn custom_profile_rejects_broken_threshold() {
        let mut p = profile_13_iv();
        // Add (11v − t)²/7: vanishes at the interior boundary v = t/11, so
        // continuity still holds, but the volume no longer dies at v = t.
        let bump = BiPoly::from_terms([
            ((2, 0), rat(1, 7)),
            ((1, 1), rat(-22, 7)),
            ((0, 2), rat(121, 7)),
        ]);
        p.segments[1].vol2 = p.segments[1].vol2.add(&bump);
        let err = profile_custom(p);
        match err {
            Err(Error::InvalidProfile { segment: 1, reason }) => {
                assert!(reason.contains("vanish"), "{reason}");
            }
            other => panic!("expected invalid profile, got {other:?}"),
        }
    }

    #[test]
    fn custom_profile_rejects_gaps() {
        let mut p = profile_13_iv();
        p.segments[1].lo = rat(1, 10);
        assert!(matches!(profile_custom(p), Err(Error::InvalidProfile { segment: 0, .. })));
    }

    #[test]
    fn negative_definite_examples() {
        assert!(check_negative_definite(&rat(-1, 2), &rat_i(0), 1));
        assert!(!check_negative_definite(&rat_i(0), &rat_i(0), 1));
        assert!(check_negative_definite(&rat_i(-1), &rat_i(0), 3));
        // k = 1 ignores the off-diagonal argument entirely.
        assert!(check_negative_definite(&rat_i(-1), &rat_i(-2), 1));
        // Rank-deficient: diag = offdiag.
        assert!(!check_negative_definite(&rat_i(-1), &rat_i(-1), 2));
    }

    #[test]
    fn adjunction_examples() {
        assert_eq!(intersection_from_adjunction(&rat_i(0), 0, &[3, 5]), rat(-8, 15));
        assert_eq!(intersection_from_adjunction(&rat_i(0), 1, &[]), rat_i(0));
        assert_eq!(intersection_from_adjunction(&rat(1, 5), 0, &[2, 5]), rat(-9, 10));
        assert_eq!(intersection_from_adjunction(&rat_i(0), 0, &[2, 3]), rat(-5, 6));
    }

    #[test]
    fn residual_intersection_examples() {
        // X₁₁ case (iii): H² = 11/30, H·Γ = 1/15, λ = −8/15.
        let (nu, d2) =
            solve_residual_intersections(&rat(11, 30), 1, 1, &rat(-8, 15), &rat(1, 15)).unwrap();
        assert_eq!(nu, rat(3, 5));
        assert_eq!(d2, rat(-3, 10));
        // X₁₁ case (v): H|_Y = Γ + 3Δ.
        let (nu, d2) =
            solve_residual_intersections(&rat(11, 30), 1, 3, &rat(-8, 15), &rat(1, 15)).unwrap();
        assert_eq!(nu, rat(1, 5));
        assert_eq!(d2, rat(-1, 30));
        // Disconnected configuration: ν = 0 when Γ² = H·Γ with m = n = 1.
        let (nu, _) =
            solve_residual_intersections(&rat(7, 6), 1, 1, &rat(1, 6), &rat(1, 6)).unwrap();
        assert_eq!(nu, rat_i(0));
        assert!(solve_residual_intersections(&rat_i(1), 1, 0, &rat_i(0), &rat_i(0)).is_err());
    }

    #[test]
    fn json_round_trip() {
        for p in [
            profile_13_iv(),
            profile_type_bl(4, 7).unwrap(),
            profile_type_iia(
                1, 2, 1, 2, &rat(-8, 15), &rat(1, 12), &rat(1, 3), 3, &rat(1, 3), &rat(7, 60),
            )
            .unwrap(),
        ] {
            let text = p.to_json();
            let q = ZariskiProfile::from_json(&text).unwrap();
            assert_eq!(p, q);
        }
    }

    #[test]
    fn rescale_preserves_integrals() {
        let p = profile_13_iv();
        let q = p.rescale_t(&rat(5, 11)).unwrap();
        // t(u) becomes 1 − u and the boundary fractions stretch to match.
        assert_eq!(q.t_of_u, LinForm::new(rat_i(1), rat_i(-1)));
        assert_eq!(q.segments[1].hi, rat(11, 5));
        for field in [
            |s: &Segment| s.vol2.clone(),
            |s: &Segment| s.deg1.mul(&s.ord_n),
            |s: &Segment| s.deg1.mul(&s.deg1),
        ] {
            assert_eq!(p.integrate(field).unwrap(), q.integrate(field).unwrap());
        }
    }
}

//! Birational-involution center classification on explicit members.
//!
//! A singular vertex P_{x_k} with d = 2a_k + a_j is a QI center; writing the
//! defining polynomial as F = x_k²f + x_k g + h with f, g, h free of x_k, the
//! point is exceptional when f has no linear monomial, degenerate when f
//! divides g, and a maximal center exactly when it is nondegenerate. The
//! 1/3(1,1,2) point of family 23 is the one IEI center; it is maximal iff
//! z³w and z²t² are both absent from F.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::exactmath::{parse_rational, Rational};
use crate::geometry::Family;
use crate::{Error, Result};

const COORD_NAMES: [char; 5] = ['x', 'y', 'z', 't', 'w'];

/// A weighted-homogeneous polynomial of degree d in the family's five
/// coordinates, sparse over exact rational coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct WeightedPoly {
    family: Family,
    terms: BTreeMap<[u32; 5], Rational>,
}

impl WeightedPoly {
    pub fn from_terms(
        family: Family,
        terms: impl IntoIterator<Item = ([u32; 5], Rational)>,
    ) -> Result<WeightedPoly> {
        let mut map = BTreeMap::new();
        for (e, c) in terms {
            if c.is_zero() {
                continue;
            }
            let deg = monomial_degree(&family, &e);
            if deg != family.degree() {
                return Err(Error::DegreeMismatch(e, deg, family.degree()));
            }
            let slot = map.entry(e).or_insert_with(Rational::zero);
            *slot += c;
            if slot.is_zero() {
                map.remove(&e);
            }
        }
        Ok(WeightedPoly { family, terms: map })
    }

    /// Parses the one-term-per-line format `coeff e0 e1 e2 e3 e4` with `#`
    /// comments; coefficients are `p/q` strings, degree checked on load.
    pub fn parse(family: Family, text: &str) -> Result<WeightedPoly> {
        let mut terms = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            if fields.len() != 6 {
                return Err(Error::BadPolyFile(
                    lineno + 1,
                    format!("expected 6 fields, found {}", fields.len()),
                ));
            }
            let coeff = parse_rational(fields[0])
                .map_err(|_| Error::BadPolyFile(lineno + 1, format!("bad coefficient `{}`", fields[0])))?;
            let mut expo = [0u32; 5];
            for (slot, f) in expo.iter_mut().zip(&fields[1..]) {
                *slot = f
                    .parse()
                    .map_err(|_| Error::BadPolyFile(lineno + 1, format!("bad exponent `{f}`")))?;
            }
            terms.push((expo, coeff));
        }
        WeightedPoly::from_terms(family, terms)
    }

    pub fn family(&self) -> &Family {
        &self.family
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32; 5], &Rational)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e: &[u32; 5]) -> Rational {
        self.terms.get(e).cloned().unwrap_or_else(Rational::zero)
    }

    /// True iff the monomial has nonzero coefficient. The monomial must have
    /// degree d.
    pub fn monomial_present(&self, e: &[u32; 5]) -> Result<bool> {
        let deg = monomial_degree(&self.family, e);
        if deg != self.family.degree() {
            return Err(Error::DegreeMismatch(*e, deg, self.family.degree()));
        }
        Ok(self.terms.contains_key(e))
    }

    /// Rescales coordinate `i` by `c`: x_i ↦ c·x_i.
    pub fn rescale_coordinate(&self, i: usize, c: &Rational) -> WeightedPoly {
        let terms = self.terms.iter().map(|(e, a)| {
            let mut factor = Rational::from_integer(1.into());
            for _ in 0..e[i] {
                factor *= c;
            }
            (*e, a * factor)
        });
        WeightedPoly::from_terms(self.family.clone(), terms).expect("rescaling preserves degree")
    }
}

fn monomial_degree(family: &Family, e: &[u32; 5]) -> u64 {
    let w = family.weights();
    e.iter().zip(w).map(|(x, a)| *x as u64 * a).sum()
}

/// Parses a monomial name like `t2w` or `z3w` against the fixed coordinate
/// letters x, y, z, t, w.
pub fn monomial_from_name(name: &str) -> Result<[u32; 5]> {
    let mut expo = [0u32; 5];
    let mut chars = name.chars().peekable();
    while let Some(c) = chars.next() {
        let idx = COORD_NAMES
            .iter()
            .position(|&v| v == c)
            .ok_or_else(|| Error::BadMonomial(name.to_string()))?;
        let mut digits = String::new();
        while chars.peek().is_some_and(|d| d.is_ascii_digit()) {
            digits.push(chars.next().unwrap());
        }
        let k: u32 = if digits.is_empty() { 1 } else { digits.parse().unwrap() };
        expo[idx] += k;
    }
    Ok(expo)
}

/// Renders an exponent tuple in coordinate letters.
pub fn monomial_name(e: &[u32; 5]) -> String {
    let mut s = String::new();
    for (i, k) in e.iter().enumerate() {
        match k {
            0 => {}
            1 => s.push(COORD_NAMES[i]),
            _ => s.push_str(&format!("{}{}", COORD_NAMES[i], k)),
        }
    }
    if s.is_empty() {
        s.push('1');
    }
    s
}

/// What kind of involution center a point supports.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CenterKind {
    QiExceptional,
    QiDegenerate,
    QiNondegenerate,
    Ei,
    Iei,
    None,
}

/// Maximal-center status.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TriState {
    Yes,
    No,
    Unknown,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CenterClass {
    pub kind: CenterKind,
    pub is_maximal: TriState,
}

impl fmt::Display for CenterClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match self.kind {
            CenterKind::QiExceptional => "QI-exceptional",
            CenterKind::QiDegenerate => "QI-degenerate",
            CenterKind::QiNondegenerate => "QI-nondegenerate",
            CenterKind::Ei => "EI",
            CenterKind::Iei => "IEI",
            CenterKind::None => "none",
        };
        let max = match self.is_maximal {
            TriState::Yes => "yes",
            TriState::No => "no",
            TriState::Unknown => "unknown",
        };
        write!(f, "{kind} (maximal: {max})")
    }
}

impl CenterClass {
    pub fn ei() -> CenterClass {
        CenterClass { kind: CenterKind::Ei, is_maximal: TriState::Unknown }
    }
}

/// Classifies the vertex P_{x_k} of a member as a QI center.
///
/// After normalizing coordinates so that F = x_k²f + x_k g + h with f, g, h
/// free of x_k, the point is exceptional when f has no linear monomial and
/// degenerate iff f divides g. Maximal exactly when nondegenerate.
pub fn classify_qi(p: &WeightedPoly, k: usize) -> Result<CenterClass> {
    let w = p.family().weights();
    let d = p.family().degree();
    let a_k = w[k];
    if !(0..5).any(|j| j != k && d == 2 * a_k + w[j]) {
        return Err(Error::NotQiCenter(k));
    }

    // Exceptional: no monomial x_k²x_i at all. Degree forces such an i to
    // carry weight a_j = d − 2a_k, so this reads straight off the support.
    let linear_j = (0..5).filter(|&j| j != k).find(|&j| {
        let mut e = [0u32; 5];
        e[k] = 2;
        e[j] = 1;
        p.coeff(&e) != Rational::zero()
    });
    let Some(j) = linear_j else {
        return Ok(CenterClass { kind: CenterKind::QiExceptional, is_maximal: TriState::No });
    };

    // Normalize away x_k-powers above 2 by x_j ↦ x_j − J/α, where J collects
    // Σ_{n≥3} c_n·x_k^{n−2} and α = coeff(x_k²x_j). One pass suffices when
    // a_j ≠ a_k (any re-created junk would need monomials x_jᵖx_kᵠ beyond
    // degree d); the cap guards the remaining quadratic-feedback corner.
    let mut terms: BTreeMap<[u32; 5], Rational> =
        p.terms().map(|(e, c)| (*e, c.clone())).collect();
    let mut e_norm = [0u32; 5];
    e_norm[k] = 2;
    e_norm[j] = 1;
    for round in 0..32 {
        let mut junk: BTreeMap<[u32; 5], Rational> = BTreeMap::new();
        for (e, c) in &terms {
            if e[k] >= 3 {
                let mut shifted = *e;
                shifted[k] -= 2;
                junk.insert(shifted, c.clone());
            }
        }
        if junk.is_empty() {
            break;
        }
        if round == 31 {
            return Err(Error::NormalizationDiverged);
        }
        // The substitution leaves coeff(x_k²x_j) alone to first order, but a
        // pathological member could cancel it; bail out rather than divide.
        let Some(alpha) = terms.get(&e_norm).cloned() else {
            return Err(Error::NormalizationDiverged);
        };
        let correction: BTreeMap<[u32; 5], Rational> =
            junk.iter().map(|(e, c)| (*e, -(c / &alpha))).collect();
        terms = substitute_variable(&terms, j, &correction);
    }

    let mut f: BTreeMap<[u32; 5], Rational> = BTreeMap::new();
    let mut g: BTreeMap<[u32; 5], Rational> = BTreeMap::new();
    for (e, c) in &terms {
        let mut rest = *e;
        rest[k] = 0;
        match e[k] {
            0 => {}
            1 => {
                g.insert(rest, c.clone());
            }
            _ => {
                f.insert(rest, c.clone());
            }
        }
    }

    if divides_quasilinear(&f, &g, j) {
        Ok(CenterClass { kind: CenterKind::QiDegenerate, is_maximal: TriState::No })
    } else {
        Ok(CenterClass { kind: CenterKind::QiNondegenerate, is_maximal: TriState::Yes })
    }
}

/// Substitutes x_j ↦ x_j + q(x) into a term map, q given as a term map.
fn substitute_variable(
    terms: &BTreeMap<[u32; 5], Rational>,
    j: usize,
    q: &BTreeMap<[u32; 5], Rational>,
) -> BTreeMap<[u32; 5], Rational> {
    let one = BTreeMap::from([([0u32; 5], Rational::from_integer(1.into()))]);
    let mut xj_plus_q = q.clone();
    let mut e_j = [0u32; 5];
    e_j[j] = 1;
    *xj_plus_q.entry(e_j).or_insert_with(Rational::zero) += Rational::from_integer(1.into());
    let mut powers = vec![one];
    let mut out: BTreeMap<[u32; 5], Rational> = BTreeMap::new();
    for (e, c) in terms {
        let m = e[j] as usize;
        while powers.len() <= m {
            powers.push(poly_mul(powers.last().unwrap(), &xj_plus_q));
        }
        let mut rest = *e;
        rest[j] = 0;
        for (pe, pc) in &powers[m] {
            let mut combined = rest;
            for (slot, add) in combined.iter_mut().zip(pe) {
                *slot += add;
            }
            let slot = out.entry(combined).or_insert_with(Rational::zero);
            *slot += c * pc;
            if slot.is_zero() {
                out.remove(&combined);
            }
        }
    }
    out
}

/// Tests f | g where f = c·x_j + f' is quasi-linear in x_j (no other
/// monomial of f can involve x_j, by homogeneity). Dividing by f is
/// eliminating x_j along f = 0: substitute x_j = −f'/c into g and test for
/// the zero polynomial.
fn divides_quasilinear(
    f: &BTreeMap<[u32; 5], Rational>,
    g: &BTreeMap<[u32; 5], Rational>,
    j: usize,
) -> bool {
    let mut e_j = [0u32; 5];
    e_j[j] = 1;
    let c = f.get(&e_j).expect("caller checked the linear term");
    let mut substitute: BTreeMap<[u32; 5], Rational> = BTreeMap::new();
    for (e, a) in f {
        if *e == e_j {
            continue;
        }
        substitute.insert(*e, -(a / c));
    }

    // Powers of the substitute polynomial, computed on demand.
    let mut powers: Vec<BTreeMap<[u32; 5], Rational>> = vec![BTreeMap::from([([0u32; 5], Rational::from_integer(1.into()))])];
    let mut result: BTreeMap<[u32; 5], Rational> = BTreeMap::new();
    for (e, a) in g {
        let m = e[j] as usize;
        while powers.len() <= m {
            let next = poly_mul(powers.last().unwrap(), &substitute);
            powers.push(next);
        }
        let mut rest = *e;
        rest[j] = 0;
        for (pe, pc) in &powers[m] {
            let mut combined = rest;
            for (slot, add) in combined.iter_mut().zip(pe) {
                *slot += add;
            }
            let slot = result.entry(combined).or_insert_with(Rational::zero);
            *slot += a * pc;
            if slot.is_zero() {
                result.remove(&combined);
            }
        }
    }
    result.is_empty()
}

fn poly_mul(
    a: &BTreeMap<[u32; 5], Rational>,
    b: &BTreeMap<[u32; 5], Rational>,
) -> BTreeMap<[u32; 5], Rational> {
    let mut out = BTreeMap::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let mut e = *ea;
            for (slot, add) in e.iter_mut().zip(eb) {
                *slot += add;
            }
            let slot = out.entry(e).or_insert_with(Rational::zero);
            *slot += ca * cb;
            if slot.is_zero() {
                out.remove(&e);
            }
        }
    }
    out
}

/// Maximal-center test for the IEI point (the 1/3(1,1,2) point of family
/// 23): maximal iff z³w and z²t² are both absent.
pub fn classify_iei(p: &WeightedPoly) -> Result<CenterClass> {
    if p.family().id() != Some(23) {
        return Err(Error::WrongFamily(p.family().to_string()));
    }
    let z3w = [0, 0, 3, 0, 1];
    let z2t2 = [0, 0, 2, 2, 0];
    let maximal = !p.monomial_present(&z3w)? && !p.monomial_present(&z2t2)?;
    Ok(CenterClass {
        kind: CenterKind::Iei,
        is_maximal: if maximal { TriState::Yes } else { TriState::No },
    })
}

/// A single membership condition from a case table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Condition {
    /// The entry's vertex is a nondegenerate QI center.
    Nondegenerate { vertex: usize },
    MonomialPresent([u32; 5]),
    MonomialAbsent([u32; 5]),
    /// Family 23: a quasi-line of type (1,3,4) lies on X, tested as
    /// coeff(w²y²) = coeff(y⁷) = 0 after the normalizing coordinate choice.
    QuasiLinePresent,
    QuasiLineAbsent,
}

impl Condition {
    pub fn holds(&self, p: &WeightedPoly) -> Result<bool> {
        match self {
            Condition::Nondegenerate { vertex } => {
                Ok(classify_qi(p, *vertex)?.kind == CenterKind::QiNondegenerate)
            }
            Condition::MonomialPresent(e) => p.monomial_present(e),
            Condition::MonomialAbsent(e) => Ok(!p.monomial_present(e)?),
            Condition::QuasiLinePresent => Ok(quasi_line_134(p)?),
            Condition::QuasiLineAbsent => Ok(!quasi_line_134(p)?),
        }
    }

    pub fn describe(&self) -> String {
        match self {
            Condition::Nondegenerate { .. } => "ndgn".into(),
            Condition::MonomialPresent(e) => format!("{} in F", monomial_name(e)),
            Condition::MonomialAbsent(e) => format!("{} notin F", monomial_name(e)),
            Condition::QuasiLinePresent => "qline(1,3,4)".into(),
            Condition::QuasiLineAbsent => "no qline(1,3,4)".into(),
        }
    }
}

fn quasi_line_134(p: &WeightedPoly) -> Result<bool> {
    if p.family().id() != Some(23) {
        return Err(Error::WrongFamily(p.family().to_string()));
    }
    let w2y2 = [0, 2, 0, 0, 2];
    let y7 = [0, 7, 0, 0, 0];
    Ok(!p.monomial_present(&w2y2)? && !p.monomial_present(&y7)?)
}

/// Which involution a singular point of index `r` can support, read off the
/// family data alone: QI when some vertex relation d = 2a_k + a_j holds, and
/// the EI/IEI points are a fixed short list.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BiCenterKind {
    /// Quadratic involution; refine with [`classify_qi`] at the vertex.
    Qi { vertex: usize },
    Ei,
    Iei,
    NotACenter,
}

pub fn bi_center_kind(family: &Family, r: u64) -> BiCenterKind {
    match family.id() {
        Some(23) if r == 3 => return BiCenterKind::Iei,
        Some(20) if r == 3 => return BiCenterKind::Ei,
        Some(23) if r == 4 => return BiCenterKind::Ei,
        Some(40) if r == 5 => return BiCenterKind::Ei,
        _ => {}
    }
    let w = family.weights();
    let d = family.degree();
    for k in 0..5 {
        if w[k] == r && r >= 2 && (0..5).any(|j| j != k && d == 2 * w[k] + w[j]) {
            return BiCenterKind::Qi { vertex: k };
        }
    }
    BiCenterKind::NotACenter
}

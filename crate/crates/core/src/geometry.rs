//! Weighted projective hypersurface arithmetic.
//!
//! A family is the pair (d; a₀..a₄) of a degree and five weights subject to
//! the index-1 relation Σaᵢ − d = 1. From it this module derives the
//! anticanonical degree A³ = d/∏aᵢ, enumerates monomials of a given weighted
//! degree, reads off the cyclic-quotient singularity basket of a general
//! member, and packages the Kawamata blow-up numerics of each basket point.

use std::fmt;

use num_integer::Integer;

use crate::centers::WeightedPoly;
use crate::exactmath::{rat_i, Rational};
use crate::{Error, Result};

/// The eleven fully cataloged families (birationally rigid, strictly).
pub const CATALOG_FAMILY_IDS: [u64; 11] = [2, 5, 12, 13, 20, 23, 25, 33, 38, 40, 58];

const CATALOG_FAMILIES: [(u64, u64, [u64; 5]); 11] = [
    (2, 5, [1, 1, 1, 1, 2]),
    (5, 7, [1, 1, 1, 2, 3]),
    (12, 10, [1, 1, 2, 3, 4]),
    (13, 11, [1, 1, 2, 3, 5]),
    (20, 13, [1, 1, 3, 4, 5]),
    (23, 14, [1, 2, 3, 4, 5]),
    (25, 15, [1, 1, 3, 4, 7]),
    (33, 17, [1, 2, 3, 5, 7]),
    (38, 18, [1, 2, 3, 5, 8]),
    (40, 19, [1, 3, 4, 5, 7]),
    (58, 24, [1, 3, 4, 7, 10]),
];

/// A degree-d hypersurface family in P(a₀,…,a₄) of Fano index 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Family {
    id: Option<u64>,
    degree: u64,
    weights: [u64; 5],
}

impl Family {
    /// Builds a family from raw data, sorting the weights nondecreasing and
    /// checking the index-1 and well-formedness conditions.
    pub fn new(id: Option<u64>, degree: u64, mut weights: [u64; 5]) -> Result<Family> {
        weights.sort_unstable();
        if weights[0] == 0 {
            return Err(Error::InvalidFamily(degree, weights, "zero weight".into()));
        }
        let sum: u64 = weights.iter().sum();
        if sum != degree + 1 {
            return Err(Error::InvalidFamily(
                degree,
                weights,
                format!("index Σa − d = {} must be 1", sum as i64 - degree as i64),
            ));
        }
        for skip in 0..5 {
            let g = weights
                .iter()
                .enumerate()
                .filter(|(i, _)| *i != skip)
                .fold(0u64, |acc, (_, w)| acc.gcd(w));
            if g != 1 {
                return Err(Error::InvalidFamily(
                    degree,
                    weights,
                    format!("not well formed: four weights share the factor {g}"),
                ));
            }
        }
        Ok(Family { id, degree, weights })
    }

    /// Looks up one of the eleven cataloged families by its number.
    pub fn catalog(id: u64) -> Result<Family> {
        CATALOG_FAMILIES
            .iter()
            .find(|(i, _, _)| *i == id)
            .map(|(i, d, w)| Family {
                id: Some(*i),
                degree: *d,
                weights: *w,
            })
            .ok_or(Error::UnknownFamily(id))
    }

    /// Parses the CLI literal `"d;a0,a1,a2,a3,a4"`.
    pub fn from_literal(s: &str) -> Result<Family> {
        let bad = |m: &str| Error::BadFamilyLiteral(s.to_string(), m.to_string());
        let (d_str, w_str) = s.split_once(';').ok_or_else(|| bad("missing `;`"))?;
        let degree: u64 = d_str.trim().parse().map_err(|_| bad("bad degree"))?;
        let parts: Vec<&str> = w_str.split(',').collect();
        if parts.len() != 5 {
            return Err(bad("expected five weights"));
        }
        let mut weights = [0u64; 5];
        for (slot, p) in weights.iter_mut().zip(&parts) {
            *slot = p.trim().parse().map_err(|_| bad("bad weight"))?;
        }
        Family::new(None, degree, weights)
    }

    pub fn id(&self) -> Option<u64> {
        self.id
    }

    pub fn degree(&self) -> u64 {
        self.degree
    }

    pub fn weights(&self) -> [u64; 5] {
        self.weights
    }

    /// `(A³) = d / ∏aᵢ`.
    pub fn anticanonical_cube(&self) -> Rational {
        let prod: u64 = self.weights.iter().product();
        Rational::new(self.degree.into(), prod.into())
    }

    /// All exponent tuples (e₀..e₄) with Σeᵢaᵢ = deg, in lexicographic order.
    pub fn monomials_of_degree(&self, deg: u64) -> Vec<[u32; 5]> {
        let mut out = Vec::new();
        let mut current = [0u32; 5];
        self.enumerate_rec(0, deg, &mut current, &mut out);
        out
    }

    fn enumerate_rec(&self, pos: usize, remaining: u64, current: &mut [u32; 5], out: &mut Vec<[u32; 5]>) {
        if pos == 4 {
            if remaining.is_multiple_of(self.weights[4]) {
                current[4] = (remaining / self.weights[4]) as u32;
                out.push(*current);
            }
            return;
        }
        let max = remaining / self.weights[pos];
        for e in 0..=max {
            current[pos] = e as u32;
            self.enumerate_rec(pos + 1, remaining - e * self.weights[pos], current, out);
        }
        current[pos] = 0;
    }

    /// A member whose support is every monomial of degree d, coefficient 1.
    /// Suitable for support-level bookkeeping (strata, base loci), not for
    /// genericity-sensitive classification.
    pub fn general_member(&self) -> WeightedPoly {
        let terms = self
            .monomials_of_degree(self.degree)
            .into_iter()
            .map(|e| (e, rat_i(1)));
        WeightedPoly::from_terms(self.clone(), terms).expect("degree-d monomials are homogeneous")
    }

    /// The singular basket of a general quasismooth member.
    ///
    /// Vertices Pᵢ with aᵢ ≥ 2 lie on X exactly when aᵢ ∤ d; the local type
    /// there is read off by dropping the implicit-function coordinate x_s
    /// (one with xᵢᵏ·x_s of degree d) and reducing the remaining weights mod
    /// aᵢ. A one-dimensional stratum with c = gcd(aᵢ,aⱼ) ≥ 2 contributes one
    /// 1/c point per root of the restricted general polynomial away from the
    /// vertices.
    pub fn enumerate_singularities(&self) -> Result<Vec<QuotientSingularity>> {
        // Strata first: a stratum contained in X means a non-isolated
        // singular locus, which invalidates the vertex bookkeeping too.
        let mut basket = Vec::new();
        for i in 0..5 {
            for j in (i + 1)..5 {
                let c = self.weights[i].gcd(&self.weights[j]);
                if c < 2 {
                    continue;
                }
                let count = self.stratum_root_count(i, j)?;
                if count == 0 {
                    continue;
                }
                let raw: Vec<u64> = (0..5)
                    .filter(|k| *k != i && *k != j)
                    .map(|k| self.weights[k])
                    .collect();
                let sing = QuotientSingularity::new(
                    c,
                    [raw[0], raw[1], raw[2]],
                    Location::Stratum(i, j),
                )?;
                for _ in 0..count {
                    basket.push(sing.clone());
                }
            }
        }
        for i in 0..5 {
            let r = self.weights[i];
            if r < 2 || self.degree.is_multiple_of(r) {
                continue;
            }
            basket.push(self.vertex_singularity(i)?);
        }
        basket.sort();
        Ok(basket)
    }

    fn vertex_singularity(&self, i: usize) -> Result<QuotientSingularity> {
        let r = self.weights[i];
        let s = (0..5)
            .find(|&s| s != i && self.degree > self.weights[s] && (self.degree - self.weights[s]).is_multiple_of(r))
            .ok_or(Error::NotQuasismoothVertex(i))?;
        let raw: Vec<u64> = (0..5)
            .filter(|k| *k != i && *k != s)
            .map(|k| self.weights[k])
            .collect();
        QuotientSingularity::new(r, [raw[0], raw[1], raw[2]], Location::Vertex(i))
    }

    /// Number of roots of the restricted general polynomial on the (i,j)
    /// stratum, away from the two vertices.
    pub fn stratum_root_count(&self, i: usize, j: usize) -> Result<u64> {
        let (ai, aj) = (self.weights[i], self.weights[j]);
        let mut exps: Vec<u64> = Vec::new();
        let mut p = 0;
        while p * ai <= self.degree {
            let rest = self.degree - p * ai;
            if rest.is_multiple_of(aj) {
                exps.push(p);
            }
            p += 1;
        }
        if exps.is_empty() {
            return Err(Error::StratumContained(format!("(x_{i}, x_{j})")));
        }
        let stride = aj / ai.gcd(&aj);
        Ok((exps.iter().max().unwrap() - exps.iter().min().unwrap()) / stride)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let w = self.weights;
        write!(f, "{};{},{},{},{},{}", self.degree, w[0], w[1], w[2], w[3], w[4])
    }
}

/// Where a basket point sits in the coordinate stratification.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Location {
    Vertex(usize),
    Stratum(usize, usize),
}

impl fmt::Display for Location {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Location::Vertex(i) => write!(f, "P{i}"),
            Location::Stratum(i, j) => write!(f, "({i},{j})-stratum"),
        }
    }
}

/// A terminal cyclic quotient point of type 1/r(1, a, r−a), gcd(a, r) = 1.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct QuotientSingularity {
    r: u64,
    a: u64,
    location: Location,
}

impl QuotientSingularity {
    /// Normalizes raw local weights to the form (1, a, r−a) with a ≤ r−a.
    ///
    /// The raw triple is defined up to permutation and simultaneous
    /// multiplication by a unit mod r; terminality is exactly the existence
    /// of a scaling under which one weight is 1 and the other two sum to r.
    pub fn new(r: u64, raw: [u64; 3], location: Location) -> Result<QuotientSingularity> {
        let w: Vec<u64> = raw.iter().map(|x| x % r).collect();
        for x in &w {
            if x.gcd(&r) != 1 {
                return Err(Error::NonTerminal(r, raw[0], raw[1], raw[2]));
            }
        }
        for pivot in 0..3 {
            let inv = mod_inverse(w[pivot], r).expect("coprime weight is invertible");
            let others: Vec<u64> = (0..3)
                .filter(|k| *k != pivot)
                .map(|k| (w[k] * inv) % r)
                .collect();
            if (others[0] + others[1]).is_multiple_of(r) {
                let a = others[0].min(others[1]);
                return Ok(QuotientSingularity { r, a, location });
            }
        }
        Err(Error::NonTerminal(r, raw[0], raw[1], raw[2]))
    }

    /// Parses the selector syntax `"1/r(w1,w2,w3)"`.
    pub fn parse_selector(s: &str) -> Result<QuotientSingularity> {
        let bad = || Error::BadPointSelector(s.to_string());
        let body = s.trim().strip_prefix("1/").ok_or_else(bad)?;
        let (r_str, rest) = body.split_once('(').ok_or_else(bad)?;
        let inner = rest.strip_suffix(')').ok_or_else(bad)?;
        let r: u64 = r_str.trim().parse().map_err(|_| bad())?;
        let parts: Vec<&str> = inner.split(',').collect();
        if parts.len() != 3 || r < 2 {
            return Err(bad());
        }
        let mut raw = [0u64; 3];
        for (slot, p) in raw.iter_mut().zip(&parts) {
            *slot = p.trim().parse().map_err(|_| bad())?;
        }
        QuotientSingularity::new(r, raw, Location::Vertex(0)).map_err(|_| bad())
    }

    pub fn index(&self) -> u64 {
        self.r
    }

    /// The `a` of the normal form 1/r(1, a, r−a).
    pub fn a(&self) -> u64 {
        self.a
    }

    pub fn weights(&self) -> [u64; 3] {
        [1, self.a, self.r - self.a]
    }

    pub fn location(&self) -> Location {
        self.location
    }

    /// Same quotient type, ignoring the location label.
    pub fn same_type(&self, other: &QuotientSingularity) -> bool {
        self.r == other.r && self.a == other.a
    }

    /// Kawamata blow-up numerics of this point.
    pub fn kawamata(&self) -> KawamataData {
        let r = self.r as i64;
        let a = self.a as i64;
        KawamataData {
            r: self.r,
            a: self.a,
            discrepancy: Rational::new(1.into(), r.into()),
            exc_cube: Rational::new((r * r).into(), (a * (r - a)).into()),
            log_discrepancy: rat_i(1) + Rational::new(1.into(), r.into()),
        }
    }
}

impl fmt::Display for QuotientSingularity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let w = self.weights();
        write!(f, "1/{}({},{},{})", self.r, w[0], w[1], w[2])
    }
}

/// Discrepancy and exceptional-divisor numerics of the Kawamata blow-up of a
/// 1/r(1, a, r−a) point: K = φ*K + (1/r)E and (E³) = r²/(a(r−a)).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KawamataData {
    pub r: u64,
    pub a: u64,
    pub discrepancy: Rational,
    pub exc_cube: Rational,
    pub log_discrepancy: Rational,
}

/// Restriction of a member to a coordinate stratum: the listed variables are
/// set to zero and every term meeting them is dropped.
pub fn restrict_to_stratum(poly: &WeightedPoly, vanishing: &[usize]) -> WeightedPoly {
    let terms = poly
        .terms()
        .filter(|(e, _)| vanishing.iter().all(|&k| e[k] == 0))
        .map(|(e, c)| (*e, c.clone()));
    WeightedPoly::from_terms(poly.family().clone(), terms)
        .expect("restriction preserves homogeneity")
}

/// Root count of a restricted polynomial on the (i,j) stratum away from the
/// vertices: the degree in the single invariant variable after factoring off
/// the pure powers. Errors if the restriction is identically zero.
pub fn stratum_roots_of(poly: &WeightedPoly, i: usize, j: usize) -> Result<u64> {
    let vanishing: Vec<usize> = (0..5).filter(|k| *k != i && *k != j).collect();
    let restricted = restrict_to_stratum(poly, &vanishing);
    let exps: Vec<u64> = restricted.terms().map(|(e, _)| e[i] as u64).collect();
    if exps.is_empty() {
        return Err(Error::StratumContained(format!("(x_{i}, x_{j})")));
    }
    let w = poly.family().weights();
    let stride = w[j] / w[i].gcd(&w[j]);
    Ok((exps.iter().max().unwrap() - exps.iter().min().unwrap()) / stride)
}

fn mod_inverse(x: u64, m: u64) -> Option<u64> {
    fn ext_gcd(a: i64, b: i64) -> (i64, i64, i64) {
        if b == 0 {
            (a, 1, 0)
        } else {
            let (g, x, y) = ext_gcd(b, a % b);
            (g, y, x - (a / b) * y)
        }
    }
    let (g, inv, _) = ext_gcd(x as i64, m as i64);
    (g == 1).then(|| inv.rem_euclid(m as i64) as u64)
}

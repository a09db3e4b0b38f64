//! Acceptance suite: one test (and one printed pass line) per criterion.
//!
//! Every expected value here is frozen exactly; nothing is compared through
//! floats except the quadrature oracle, whose tolerance is part of its
//! definition. Printed source values known to disagree with the exact
//! recomputation are asserted through their discrepancy markers, never
//! silently dropped.

use fano_delta::catalog::{self, EntrySpec};
use fano_delta::delta::{
    alpha_to_delta, bl_closed_forms, delta_bound, f_term_closed_form, iib_closed_forms,
    isolating_alpha_bound, s_values, type_i_closed_form,
};
use fano_delta::exactmath::quadrature::quadrature_check;
use fano_delta::exactmath::{parse_rational, rat, rat_i, to_f64, Rational};
use fano_delta::flags::{
    check_negative_definite, profile_13_iv, profile_type_bl, FlagSpec, Segment,
};
use fano_delta::geometry::Family;

fn r(s: &str) -> Rational {
    parse_rational(s).unwrap()
}

/// (r, a, multiplicity) rows of one family's basket.
type BasketRows = &'static [(u64, u64, usize)];

type SegmentField = fn(&Segment) -> fano_delta::BiPoly;

/// Criterion 1: flag-I closed forms across the eleven type-I table rows.
#[test]
fn criterion_1_flag_i_closed_forms() {
    // (family, label, l_Y, l_H, e, r_P, A³, printed bound)
    let rows = [
        (5u64, "ii", 1u32, 1u32, 1u32, 3u32, "7/6", "8/7"),
        (13, "i", 2, 1, 1, 3, "11/30", "20/11"),
        (13, "ii", 2, 1, 1, 5, "11/30", "12/11"),
        (20, "i", 4, 1, 1, 3, "13/60", "20/13"),
        (23, "ii", 3, 1, 1, 4, "7/60", "20/7"),
        (23, "iv", 3, 1, 1, 5, "7/60", "16/7"),
        (25, "ii", 3, 1, 1, 7, "5/28", "16/15"),
        (33, "ii", 5, 1, 1, 7, "17/210", "24/17"),
        (38, "ii", 5, 1, 1, 8, "3/40", "4/3"),
        (58, "i", 3, 1, 1, 7, "1/35", "20/3"),
        (58, "ii", 7, 1, 1, 10, "1/35", "2"),
    ];
    for (family, label, l_y, l_h, e, r_p, a3, printed) in rows {
        let a3 = r(a3);
        let printed = r(printed);
        let spec = FlagSpec::I { l_y, l_h, e, r_p, a3: a3.clone() };
        let verdict = delta_bound(&spec).unwrap();
        let closed = type_i_closed_form(l_y, l_h, e, r_p, &a3);
        for (i, (_, term)) in verdict.terms.iter().enumerate() {
            assert_eq!(*term, closed[i], "integrator vs closed form, family {family} ({label})");
        }
        let min = closed.iter().min().unwrap().clone();
        assert_eq!(verdict.bound, min, "family {family} ({label})");
        if family == 58 && label == "i" {
            // The printed table value is the point term of the min, not the
            // min itself; the ledger carries the discrepancy marker.
            assert_eq!(closed[2], printed);
            assert_eq!(verdict.bound, rat_i(4));
            let entry = catalog::entries(Some(58))
                .unwrap()
                .into_iter()
                .find(|e| e.label == "i")
                .unwrap();
            assert!(entry.expected.printed.iter().any(|(k, v)| k == "bound" && v == "20/3"));
            let report = catalog::verify(&entry).unwrap();
            assert!(report.ok());
            assert!(!report.markers.is_empty());
        } else {
            assert_eq!(verdict.bound, printed, "family {family} ({label})");
        }
    }
    println!("acceptance 1 (flag-I closed forms, 11 rows): PASS");
}

/// Criterion 2: IIa integrator S-values, F-terms and bounds, exactly.
#[test]
fn criterion_2_iia_exact_values() {
    // (family, label, S_V, F_P, S_W, bound, markers expected)
    let rows = [
        (5u64, "iii", "11/56", "0", "29/336", "112/29", true),
        (13, "iii", "31/88", "3/44", "101/660", "132/101", false),
        (13, "v", "31/88", "3/44", "101/660", "132/101", true),
        (23, "i", "19/112", "1/28", "37/420", "140/37", false),
        (23, "iii", "9/35", "0", "3/35", "35/12", false),
        (23, "v", "33/112", "0", "93/1120", "224/93", true),
        (33, "iii", "65/204", "0", "275/2856", "408/275", false),
    ];
    for (family, label, s_v, f_p, s_w, bound, has_markers) in rows {
        let entry = catalog::entries(Some(family))
            .unwrap()
            .into_iter()
            .find(|e| e.label == label)
            .expect("entry exists");
        let EntrySpec::Flag(spec) = &entry.spec else { panic!("IIa rows are flags") };
        let b = s_values(&spec.profile().unwrap()).unwrap();
        assert_eq!(b.s_v, r(s_v), "S_V family {family} ({label})");
        assert_eq!(b.f_p, r(f_p), "F_P family {family} ({label})");
        assert_eq!(b.s_w, r(s_w), "S_W family {family} ({label})");
        assert_eq!(b.f_p, f_term_closed_form(spec).unwrap(), "closed F, {family} ({label})");
        let verdict = delta_bound(spec).unwrap();
        assert_eq!(verdict.bound, r(bound), "bound family {family} ({label})");
        let report = catalog::verify(&entry).unwrap();
        assert!(report.ok(), "family {family} ({label}): {:?}", report.checks);
        assert_eq!(!report.markers.is_empty(), has_markers, "markers of {family} ({label})");
    }
    // №23(i) S_W splits as stated: 11/210 + 1/28.
    assert_eq!(r("11/210") + r("1/28"), r("37/420"));
    println!("acceptance 2 (IIa exact S-values, 7 rows): PASS");
}

/// Criterion 3: blow-up flags: the five catalog bounds, and integrator S_V
/// equal to (r² + 4re + 2e²)/(4er(e+r)) across the whole (r, e) grid.
#[test]
fn criterion_3_bl_flags() {
    for (spec, bound) in [
        ((2u32, 1u32), "4/3"),
        ((3, 4), "16/7"),
        ((4, 2), "4/3"),
        ((5, 3), "3/2"),
        ((4, 7), "28/11"),
    ] {
        let verdict = delta_bound(&FlagSpec::Bl { r: spec.0, e: spec.1 }).unwrap();
        assert_eq!(verdict.bound, r(bound), "BL {spec:?}");
    }
    for r_idx in 2u32..=12 {
        for e_idx in 1u32..=12 {
            let p = profile_type_bl(r_idx, e_idx).unwrap();
            let b = s_values(&p).unwrap();
            let (s_v, s_w, f_p, delta) = bl_closed_forms(r_idx, e_idx).unwrap();
            assert_eq!(b.s_v, s_v, "S_V at ({r_idx},{e_idx})");
            assert_eq!(b.s_w, s_w, "S_W at ({r_idx},{e_idx})");
            assert_eq!(b.f_p, f_p, "F at ({r_idx},{e_idx})");
            let verdict = delta_bound(&FlagSpec::Bl { r: r_idx, e: e_idx }).unwrap();
            assert_eq!(verdict.bound, delta);
            assert!(verdict.bound >= rat(4 * e_idx as i64, (e_idx + r_idx) as i64));
        }
    }
    println!("acceptance 3 (BL bounds + 132-point S_V grid): PASS");
}

/// Criterion 4: the custom wBL profile of family 13 case (iv).
#[test]
fn criterion_4_wbl_custom_profile() {
    let p = profile_13_iv();
    p.validate().unwrap();
    let b = s_values(&p).unwrap();
    assert_eq!(b.s_v, r("3/5"));
    assert_eq!(b.f_p, r("5/22"));
    assert_eq!(b.s_w, r("71/264"));
    assert!(!b.s_w_exact); // certified upper bounds
    let verdict = delta_bound(&FlagSpec::Custom(p)).unwrap();
    assert_eq!(verdict.bound, r("5/3"));
    assert_eq!(verdict.terms[2].1, r("264/71"));
    println!("acceptance 4 (wBL custom profile 13(iv)): PASS");
}

/// Criterion 5: singularity baskets of all eleven families, as multisets,
/// cross-checked against the orbifold Riemann–Roch identity
/// Σ (r − 1/r) = 24 − (σ₂ − σ₁d + d²)·A³.
#[test]
fn criterion_5_singularity_baskets() {
    // (family, expected basket as (r, a, multiplicity)). Two header entries
    // are corrected against the RR identity below: family 58 carries one
    // 1/2 point (not two), and family 40's 1/3 point is of type (1,1,2).
    let expected: [(u64, BasketRows); 11] = [
        (2, &[(2, 1, 1)]),
        (5, &[(2, 1, 1), (3, 1, 1)]),
        (12, &[(2, 1, 2), (3, 1, 1), (4, 1, 1)]),
        (13, &[(2, 1, 1), (3, 1, 1), (5, 2, 1)]),
        (20, &[(3, 1, 1), (4, 1, 1), (5, 1, 1)]),
        (23, &[(2, 1, 3), (3, 1, 1), (4, 1, 1), (5, 2, 1)]),
        (25, &[(4, 1, 1), (7, 3, 1)]),
        (33, &[(2, 1, 1), (3, 1, 1), (5, 2, 1), (7, 2, 1)]),
        (38, &[(2, 1, 2), (5, 2, 1), (8, 3, 1)]),
        (40, &[(3, 1, 1), (4, 1, 1), (5, 2, 1), (7, 3, 1)]),
        (58, &[(2, 1, 1), (7, 3, 1), (10, 3, 1)]),
    ];
    for (id, want) in expected {
        let f = Family::catalog(id).unwrap();
        let basket = f.enumerate_singularities().unwrap();
        let mut got: Vec<(u64, u64, usize)> = Vec::new();
        for s in &basket {
            match got.iter_mut().find(|(r, a, _)| *r == s.index() && *a == s.a()) {
                Some((_, _, n)) => *n += 1,
                None => got.push((s.index(), s.a(), 1)),
            }
        }
        got.sort_unstable();
        let mut want: Vec<_> = want.to_vec();
        want.sort_unstable();
        assert_eq!(got, want, "basket of family {id}");

        // Independent consistency: Σ (r − 1/r) over the basket must equal
        // 24 − c₂·A, with c₂·A = (σ₂ − σ₁d + d²)·A³ for a hypersurface.
        let w = f.weights();
        let d = f.degree() as i64;
        let sigma1: i64 = w.iter().map(|x| *x as i64).sum();
        let mut sigma2: i64 = 0;
        for i in 0..5 {
            for j in (i + 1)..5 {
                sigma2 += (w[i] * w[j]) as i64;
            }
        }
        let c2_dot_a = rat_i(sigma2 - sigma1 * d + d * d) * f.anticanonical_cube();
        let lhs: Rational = basket
            .iter()
            .map(|s| rat_i(s.index() as i64) - rat(1, s.index() as i64))
            .sum();
        assert_eq!(lhs, rat_i(24) - c2_dot_a, "RR consistency of family {id}");
    }
    println!("acceptance 5 (baskets of 11 families + RR consistency): PASS");
}

/// Criterion 6: alpha-to-delta conversions and the isolating bound.
#[test]
fn criterion_6_alpha_conversions() {
    for (alpha, delta) in [
        ("6/7", "8/7"),
        ("10/13", "40/39"),
        ("14/17", "56/51"),
        ("8/9", "32/27"),
        ("1", "4/3"),
        ("15/19", "20/19"),
    ] {
        assert_eq!(alpha_to_delta(&r(alpha)), r(delta));
    }
    let a3 = Family::catalog(40).unwrap().anticanonical_cube();
    assert_eq!(a3, r("19/420"));
    assert_eq!(isolating_alpha_bound(7, 1, 4, &a3), r("15/19"));
    println!("acceptance 6 (alpha conversions + isolating bound): PASS");
}

fn catalog_profiles() -> Vec<(String, fano_delta::ZariskiProfile)> {
    let mut out = Vec::new();
    for entry in catalog::entries(None).unwrap() {
        if let EntrySpec::Flag(spec) = &entry.spec {
            let name = format!("{}({})", entry.family_id, entry.label);
            out.push((name, spec.profile().unwrap()));
        }
    }
    out
}

/// Criterion 7a/7b/7c/7d: profile invariants, closed-form vs integrator
/// sweeps, the quadrature oracle, and the clean verification sweep.
#[test]
fn criterion_7a_profile_invariants() {
    for (name, p) in catalog_profiles() {
        p.validate().unwrap_or_else(|e| panic!("{name}: {e}"));
        // The volume derivative identity ∂vol2/∂v = −2·deg1 holds on every
        // segment of every flag type.
        for (i, seg) in p.segments.iter().enumerate() {
            assert_eq!(
                seg.vol2.diff_second(),
                seg.deg1.scale(&rat_i(-2)),
                "{name} segment {i}"
            );
        }
    }
    println!("acceptance 7a (threshold/continuity/derivative invariants): PASS");
}

#[test]
fn criterion_7b_closed_form_vs_integrator() {
    // Type I grid: 408 specs.
    let mut count = 0;
    for l_y in 1u32..=3 {
        for l_h in 1u32..=3 {
            for e in 1u32..=3 {
                for r_p in [1u32, 2, 5] {
                    for a3 in ["7/6", "11/30", "1/35", "5/2"] {
                        let a3 = r(a3);
                        let spec = FlagSpec::I { l_y, l_h, e, r_p, a3: a3.clone() };
                        let verdict = delta_bound(&spec).unwrap();
                        let closed = type_i_closed_form(l_y, l_h, e, r_p, &a3);
                        for (i, (_, term)) in verdict.terms.iter().enumerate() {
                            assert_eq!(*term, closed[i]);
                        }
                        count += 1;
                    }
                }
            }
        }
    }
    assert!(count >= 100);

    // IIa F-term grid.
    let mut count = 0;
    for m in 1u32..=2 {
        for n in 1u32..=2 {
            for mu in ["1/12", "3/10", "1/2"] {
                for nu in ["1/3", "3/5", "1", "2"] {
                    for lambda in ["-8/15", "-1/2", "1/4"] {
                        for ord in ["0", "1/5", "1"] {
                            let (mu, nu, lambda, ord) = (r(mu), r(nu), r(lambda), r(ord));
                            let (m_r, n_r) = (rat_i(m as i64), rat_i(n as i64));
                            if &m_r * &nu <= &n_r * &mu
                                || &n_r * &nu + &m_r * &lambda <= rat_i(0)
                                || &nu * &nu + &lambda * &mu <= rat_i(0)
                                || rat_i(2) * &m_r * &n_r * &nu + &m_r * &m_r * &lambda
                                    - &n_r * &n_r * &mu
                                    <= rat_i(0)
                            {
                                continue;
                            }
                            let spec = FlagSpec::IIa {
                                l_y: 1,
                                l_h: 1,
                                m,
                                n,
                                lambda,
                                mu,
                                nu,
                                r_p: 3,
                                ord_p_delta: ord,
                                a3: r("7/60"),
                            };
                            let b = s_values(&spec.profile().unwrap()).unwrap();
                            assert_eq!(b.f_p, f_term_closed_form(&spec).unwrap());
                            count += 1;
                        }
                    }
                }
            }
        }
    }
    assert!(count >= 100, "only {count} valid IIa specs in the grid");

    // IIb grid.
    let mut count = 0;
    for m in 1u32..=3 {
        for n in 1u32..=3 {
            for l_y in 1u32..=2 {
                for l_h in 1u32..=2 {
                    for lambda in ["-1/2", "0", "2/7"] {
                        for nu in ["1/5", "1", "3/2"] {
                            let (lambda, nu) = (r(lambda), r(nu));
                            if rat_i(n as i64) * &nu + rat_i(m as i64) * &lambda <= rat_i(0) {
                                continue;
                            }
                            let spec = FlagSpec::IIb {
                                l_y,
                                l_h,
                                m,
                                n,
                                lambda,
                                nu,
                                r_p: 2,
                                a3: r("7/6"),
                            };
                            let b = s_values(&spec.profile().unwrap()).unwrap();
                            let (s_v, s_w) = iib_closed_forms(&spec).unwrap();
                            assert_eq!(b.s_v, s_v);
                            assert_eq!(b.s_w, s_w);
                            assert_eq!(b.f_p, rat_i(0));
                            count += 1;
                        }
                    }
                }
            }
        }
    }
    assert!(count >= 100, "only {count} valid IIb specs in the grid");
    println!("acceptance 7b (closed form = integrator on 3 grids): PASS");
}

#[test]
fn criterion_7c_quadrature_oracle() {
    let fields: [(&str, SegmentField); 3] = [
        ("vol2", |s| s.vol2.clone()),
        ("deg1^2", |s| s.deg1.mul(&s.deg1)),
        ("deg1*ordN", |s| s.deg1.mul(&s.ord_n)),
    ];
    for (name, p) in catalog_profiles() {
        for (field_name, field) in fields {
            let exact = p.integrate(field).unwrap();
            let mut estimate = 0.0;
            for seg in &p.segments {
                estimate += quadrature_check(
                    &field(seg),
                    &p.t_of_u,
                    &rat_i(0),
                    &p.tau_u,
                    &seg.lo,
                    &seg.hi,
                );
            }
            let exact_f = to_f64(&exact);
            if exact_f == 0.0 {
                assert!(estimate.abs() < 1e-12, "{name} {field_name}: {estimate}");
            } else {
                let rel = ((estimate - exact_f) / exact_f).abs();
                assert!(rel < 1e-9, "{name} {field_name}: rel err {rel}");
            }
        }
    }
    println!("acceptance 7c (quadrature oracle ≤ 1e-9 on all catalog integrals): PASS");
}

#[test]
fn criterion_7d_verification_sweep() {
    let summary = catalog::verify_all(None).unwrap();
    assert_eq!(summary.n_mismatched(), 0, "sweep must be clean");
    assert!(summary.all_ok());
    // The known printed-source discrepancies surface as markers.
    let marked: Vec<(u64, String)> = summary
        .reports
        .iter()
        .filter(|r| !r.markers.is_empty())
        .map(|r| (r.family_id, r.label.clone()))
        .collect();
    assert!(marked.contains(&(13, "v".into())), "13(v) printed S_W");
    assert!(marked.contains(&(23, "v".into())), "23(v) printed bound");
    assert!(marked.contains(&(5, "iii".into())), "5(iii) printed term");
    for report in &summary.reports {
        assert!(report.exceeds_one, "{}({})", report.family_id, report.label);
        assert!(report.bound > rat_i(1));
    }
    println!(
        "acceptance 7d (verify-all clean: {} entries, {} markers): PASS",
        summary.n_entries(),
        summary.n_markers()
    );
}

/// Criterion 8: the eigenvalue test against a leading-principal-minor
/// oracle over the whole small grid.
#[test]
fn criterion_8_negative_definite_oracle() {
    fn det(m: &[Vec<Rational>]) -> Rational {
        let k = m.len();
        if k == 1 {
            return m[0][0].clone();
        }
        let mut acc = rat_i(0);
        for j in 0..k {
            let minor: Vec<Vec<Rational>> = m[1..]
                .iter()
                .map(|row| {
                    row.iter()
                        .enumerate()
                        .filter(|(c, _)| *c != j)
                        .map(|(_, v)| v.clone())
                        .collect()
                })
                .collect();
            let sign = if j % 2 == 0 { rat_i(1) } else { rat_i(-1) };
            acc += sign * &m[0][j] * det(&minor);
        }
        acc
    }

    fn oracle(diag: &Rational, offdiag: &Rational, k: usize) -> bool {
        let full: Vec<Vec<Rational>> = (0..k)
            .map(|i| {
                (0..k)
                    .map(|j| if i == j { diag.clone() } else { offdiag.clone() })
                    .collect()
            })
            .collect();
        for lead in 1..=k {
            let sub: Vec<Vec<Rational>> =
                full[..lead].iter().map(|row| row[..lead].to_vec()).collect();
            let sign = if lead % 2 == 0 { rat_i(1) } else { rat_i(-1) };
            if sign * det(&sub) <= rat_i(0) {
                return false;
            }
        }
        true
    }

    let entries = ["-2", "-1", "-1/2", "0", "1/2", "1"];
    let mut cases = 0;
    for k in 1u32..=5 {
        for diag in entries {
            for offdiag in entries {
                let (d, o) = (r(diag), r(offdiag));
                assert_eq!(
                    check_negative_definite(&d, &o, k),
                    oracle(&d, &o, k as usize),
                    "k={k} diag={diag} offdiag={offdiag}"
                );
                cases += 1;
            }
        }
    }
    assert_eq!(cases, 180);
    println!("acceptance 8 (negative-definite oracle, 180 cases): PASS");
}

//! The acceptance criteria, one pass/fail line each.
//!
//! Lines are written straight to stderr so they show up even when the
//! harness captures output.

mod common;

use std::io::Write;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use common::GSet;
use ratmackey::burnside::{idempotents, BurnsideElement, GroupLevel};
use ratmackey::classifying::{
    bgs1_presentation, bsigma2_consistency, collapse, collapse_expand, fixed_point_data, gm_assemble, torus_check_su2,
    torus_check_u, Space, WeylModel,
};
use ratmackey::compare::{compare_methods, StemMethods};
use ratmackey::mackey::{LevelEigen, MackeyClass, Sign, SimpleSummand};
use ratmackey::rolattice::VirtualRep;
use ratmackey::scalar::{self, Rational};
use ratmackey::series::{Poly, PowerSeries};
use ratmackey::stems::{fixed_point_rings, sphere_homology, stem_at, stem_at_oracle, stem_at_sector};
use ratmackey::Error;

fn sum_of(n: usize, range: impl Iterator<Item = usize>, sign: Sign) -> MackeyClass {
    MackeyClass::from_summands(n, range.map(|i| (SimpleSummand { i, sign }, 1)))
}

fn stems_three_way() {
    for n in 1..=4 {
        let r = compare_methods(n, 3, &StemMethods::default());
        assert_eq!(r.checked, 7usize.pow(n as u32 + 1));
        assert!(r.is_empty(), "{}", r.to_text());

        let one_minus_sigma = &VirtualRep::trivial(n, 1) - &VirtualRep::sigma(n);
        assert_eq!(stem_at(&one_minus_sigma), sum_of(n, 0..n, Sign::Minus));
        for k in 0..n.saturating_sub(1) {
            let l = VirtualRep::lambda(n, k);
            assert_eq!(stem_at(&(&VirtualRep::trivial(n, 2) - &l)), sum_of(n, 0..=k, Sign::Plus));
            assert_eq!(stem_at(&-&l), sum_of(n, k + 1..=n, Sign::Plus));
        }
        assert_eq!(stem_at(&VirtualRep::zero(n)), sum_of(n, 0..=n, Sign::Plus));
    }
}

fn sphere_tables() {
    for n in 1..=4 {
        let top = MackeyClass::simple(n, n, Sign::Plus).unwrap();
        let t = sphere_homology(&VirtualRep::sigma(n)).unwrap();
        assert_eq!(t.get(0), top);
        assert_eq!(t.get(1), sum_of(n, 0..n, Sign::Minus));
        assert_eq!(t.degrees().collect::<Vec<_>>(), [0, 1]);

        let t = sphere_homology(&VirtualRep::sigma(n).scale(2)).unwrap();
        assert_eq!(t.get(0), top);
        assert!(t.get(1).is_zero());
        assert_eq!(t.get(2), sum_of(n, 0..n, Sign::Plus));

        for k in 0..n.saturating_sub(1) {
            let t = sphere_homology(&VirtualRep::lambda(n, k)).unwrap();
            assert_eq!(t.get(0), sum_of(n, k + 1..=n, Sign::Plus));
            assert!(t.get(1).is_zero());
            assert_eq!(t.get(2), sum_of(n, 0..=k, Sign::Plus));
        }
    }
}

fn burnside_suite() {
    for n in 1..=5 {
        for i in 0..=n {
            let lv = GroupLevel::new(n, i).unwrap();
            for j in 0..=i {
                let a = BurnsideElement::orbit(lv, j);
                let ga = GSet::orbit(n, i, j);
                let marks: Vec<Rational> = ga.marks().into_iter().map(scalar::int).collect();
                assert_eq!(a.marks(), marks);
                for k in 0..=i {
                    let b = BurnsideElement::orbit(lv, k);
                    let prod = a.mul(&b).unwrap();
                    assert_eq!(prod, ga.product(&GSet::orbit(n, i, k)).class());
                    let pointwise: Vec<Rational> = a.marks().iter().zip(b.marks()).map(|(x, y)| x * y).collect();
                    assert_eq!(prod.marks(), pointwise);
                }
                if i < n {
                    let tr = a.tr().unwrap();
                    assert_eq!(tr, ga.induce().class());
                    // Tr(x[i,j]) = x[i+1,j], and Tr(1) = x[i+1,i] at j = i
                    let up = GroupLevel::new(n, i + 1).unwrap();
                    assert_eq!(tr, BurnsideElement::orbit(up, j));
                    for k in 0..=i + 1 {
                        let b = BurnsideElement::orbit(up, k);
                        let lhs = a.mul(&b.res(i).unwrap()).unwrap().tr().unwrap();
                        assert_eq!(lhs, tr.mul(&b).unwrap());
                    }
                }
                if i > 0 {
                    assert_eq!(a.res(i - 1).unwrap(), ga.res().class());
                }
            }
            let es = idempotents(lv);
            let total = es.iter().fold(BurnsideElement::zero(lv), |acc, e| acc.try_add(e).unwrap());
            assert_eq!(total, BurnsideElement::one(lv));
            for (h, e) in es.iter().enumerate() {
                for (g, f) in es.iter().enumerate() {
                    let want = if h == g { e.clone() } else { BurnsideElement::zero(lv) };
                    assert_eq!(e.mul(f).unwrap(), want);
                }
            }
            if i > 0 {
                assert!(BurnsideElement::y(lv).res(i - 1).unwrap().is_zero());
            }
        }
    }
}

fn bs1_tables() {
    let d = 40;
    for n in 1..=4 {
        let gm = gm_assemble(&fixed_point_data(Space::BS1, n, d).unwrap()).unwrap();
        let p = bgs1_presentation(n).unwrap();
        assert_eq!(gm, p.table(d));
        for k in 0..=d as i64 {
            let want = if k % 2 == 0 {
                MackeyClass::from_summands(n, (0..=n).map(|m| (SimpleSummand { i: m, sign: Sign::Plus }, 1u64 << m)))
            } else {
                MackeyClass::zero(n)
            };
            assert_eq!(gm.get(k), want, "degree {k}");
        }
        let expect = PowerSeries::geometric(2, d).scale(&scalar::int((1 << (n + 1)) - 1));
        assert_eq!(gm.poincare_series(n, d), expect);
    }
}

fn unitary_torus() {
    for n in 1..=3 {
        for m in 1..=3 {
            let r = torus_check_u(n, m, 20).unwrap();
            assert!(r.passes(), "{}", r.to_text());
        }
    }
}

fn su2_counterexample() {
    for n in 1..=6 {
        let r = torus_check_su2(n, WeylModel::Paper).unwrap();
        assert_eq!((r.lhs, r.rhs), ((1 << (n - 1)) + 1, 1 << n));
        assert_eq!(r.holds, n == 1);
    }
}

fn idempotent_collapse() {
    let q = scalar::int;
    assert_eq!(collapse(2).idempotents[1], Poly::new(vec![q(0), q(2), q(-1)]));
    for s in 1..=8 {
        let c = collapse(s);
        for i in 1..=s {
            // e_i is the polynomial that is 1 at i and 0 at the other points 0..=s
            let pts: Vec<_> = (0..=s as i64).map(|x| (q(x), q(i64::from(x == i as i64)))).collect();
            assert_eq!(c.idempotents[i], Poly::interpolate(&pts));
        }
        for b in 0..=s {
            let mut v = vec![q(0); s + 1];
            v[b] = q(1);
            assert_eq!(collapse_expand(&c.to_poly(&v), s), v);
        }
        for k in 0..=s as u32 {
            let f = Poly::x().pow(k);
            assert_eq!(c.to_poly(&c.from_poly(&f)), f);
        }
    }
}

fn fixed_point_rings_match() {
    for n in 1..=4 {
        let t = fixed_point_rings(n, 3);
        let bad = t.mismatches(stem_at);
        assert!(bad.is_empty(), "n={n}: {bad:?}");
        for v in VirtualRep::degree_box(n, 3) {
            assert_eq!(stem_at(&v).multiplicity(n, Sign::Plus), u64::from(v.d() == 0), "{v}");
        }
    }
}

fn bsigma2_report() {
    let r = bsigma2_consistency(1, 20).unwrap();
    assert!(r.diff.is_empty());
    let tops: Vec<u64> = (0..=20).step_by(2).map(|k| r.fixed_points.get(k).level_dim(1)).collect();
    assert_eq!(tops[0], 3);
    assert!(tops[1..].iter().all(|&x| x == 0));
    let r = bsigma2_consistency(2, 20).unwrap();
    assert_eq!(r.fixed_points.get(0).level_dim(2), 5);
    assert_eq!(r.quotient.get(0).level_dim(2), 7);
}

fn negative_controls() {
    let target = VirtualRep::from_coords(3, &[-1, 1, 0, -1]).unwrap();
    assert!(!stem_at(&target).is_zero());
    let methods = StemMethods {
        oracle: Box::new(|v| {
            let c = stem_at_oracle(v)?;
            Ok(if *v == target { MackeyClass::zero(3) } else { c })
        }),
        ..StemMethods::default()
    };
    let r = compare_methods(3, 2, &methods);
    assert_eq!(r.disagreements.len(), 1);
    assert_eq!(r.disagreements[0].degree, target.to_text());
    assert_eq!(stem_at_sector(&target), stem_at(&target));

    let eigen = [LevelEigen::new(1, 0, 0), LevelEigen::new(0, 0, 1), LevelEigen::new(1, 0, 0)];
    match MackeyClass::classify(2, &eigen) {
        Err(Error::NonSignIsotypic { level: 1, other: 1 }) => {}
        other => panic!("expected a non-sign-isotypic error, got {other:?}"),
    }
}

type Criterion = (&'static str, fn(), Option<Duration>);

#[test]
fn acceptance_criteria() {
    let criteria: [Criterion; 10] = [
        ("stems three-way agreement, n <= 4, box 3", stems_three_way, Some(Duration::from_secs(60))),
        ("sphere tables for sigma, 2sigma, lambda_k", sphere_tables, None),
        ("Burnside suite, n <= 5", burnside_suite, Some(Duration::from_secs(5))),
        ("B_G S^1 fixed points vs presentation, degree 40", bs1_tables, None),
        ("U(m) maximal torus, n,m <= 3, degree 20", unitary_torus, Some(Duration::from_secs(30))),
        ("SU(2) torus counterexample, n <= 6", su2_counterexample, None),
        ("idempotent collapse, s <= 8", idempotent_collapse, None),
        ("fixed-point ring identities", fixed_point_rings_match, None),
        ("B_G Sigma_2 consistency report", bsigma2_report, None),
        ("negative controls", negative_controls, None),
    ];
    let mut failed = Vec::new();
    let mut err = std::io::stderr();
    for (idx, (name, body, budget)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let ok = catch_unwind(AssertUnwindSafe(body)).is_ok();
        let took = start.elapsed();
        let in_time = budget.is_none_or(|b| took <= b);
        let verdict = if ok && in_time { "PASS" } else { "FAIL" };
        let note = if ok && !in_time { " (over time budget)" } else { "" };
        let _ = writeln!(err, "criterion {:>2}: {verdict} {name} [{:.2}s]{note}", idx + 1, took.as_secs_f64());
        if verdict == "FAIL" {
            failed.push(idx + 1);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}

#![allow(dead_code)]

use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestCaseError, TestRng, TestRunner};
use webflat::catalog;
use webflat::exactfield::rat;
use webflat::foliation::{mat3_det, mat3_mul, Mat3};
use webflat::{Chart, FieldElem, ImplicitWeb, MPoly, Rational, VarSet};

pub fn xy() -> VarSet {
    VarSet::of(&["x", "y"])
}

pub fn small_rat() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| rat(n, d))
}

/// Mostly sparse elements, so that products stay readable in failures.
pub fn field_elem() -> impl Strategy<Value = FieldElem> {
    let coord = prop_oneof![2 => Just(rat(0, 1)), 3 => small_rat()];
    (coord.clone(), coord.clone(), coord.clone(), coord).prop_map(|(a, b, c, d)| FieldElem::new(a, b, c, d))
}

pub fn small_int_elem() -> impl Strategy<Value = FieldElem> {
    (-3i64..=3, -1i64..=1, -1i64..=1).prop_map(|(a, b, c)| {
        &FieldElem::new(rat(a, 1), rat(0, 1), rat(c, 1), rat(0, 1)) + &FieldElem::i().scale(&rat(b, 1))
    })
}

pub fn monomial_poly(r: &VarSet, ex: u32, ey: u32, c: &FieldElem) -> MPoly {
    (&MPoly::var_idx(r, 0).pow(ex) * &MPoly::var_idx(r, 1).pow(ey)).scale(c)
}

/// Bivariate polynomials in `x, y` with at most `terms` terms of degree `<= deg` in each variable.
pub fn poly_xy(terms: usize, deg: u32) -> impl Strategy<Value = MPoly> {
    prop::collection::vec((0..=deg, 0..=deg, small_int_elem()), 0..=terms).prop_map(|ts| {
        let r = xy();
        ts.iter().fold(MPoly::zero(&r), |acc, (a, b, c)| &acc + &monomial_poly(&r, *a, *b, c))
    })
}

pub fn int_mat3() -> impl Strategy<Value = Mat3> {
    prop::array::uniform3(prop::array::uniform3(-2i64..=2)).prop_map(|m| m.map(|r| r.map(FieldElem::from_int)))
}

fn runner(cases: u32) -> TestRunner {
    let cfg = Config { cases, failure_persistence: None, ..Config::default() };
    TestRunner::new_with_rng(cfg, TestRng::deterministic_rng(RngAlgorithm::ChaCha))
}

fn run<S: Strategy>(cases: u32, s: S, f: impl Fn(S::Value) -> Result<(), TestCaseError>) -> Result<u32, String> {
    runner(cases).run(&s, f).map(|_| cases).map_err(|e| e.to_string())
}

pub fn field_laws(cases: u32) -> Result<u32, String> {
    let s = (field_elem(), field_elem(), field_elem(), small_rat(), small_rat());
    run(cases, s, |(a, b, c, p, q)| {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        if a != FieldElem::from_int(0) {
            prop_assert_eq!(&a * &a.inv().unwrap(), FieldElem::from_int(1));
        } else {
            prop_assert!(a.inv().is_err());
        }
        let (fp, fq) = (FieldElem::from_rational(p.clone()), FieldElem::from_rational(q.clone()));
        prop_assert_eq!(FieldElem::from_rational(&p + &q), &fp + &fq);
        prop_assert_eq!(FieldElem::from_rational(&p * &q), &fp * &fq);
        Ok(())
    })
}

pub fn poly_laws(cases: u32) -> Result<u32, String> {
    let s = (poly_xy(4, 2), poly_xy(4, 2), poly_xy(3, 2));
    run(cases, s, |(f, g, h)| {
        prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
        prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
        prop_assert_eq!(&f * &g, &g * &f);
        prop_assert!((&f + &(-&f)).is_zero());
        let fg = &f * &g;
        let leibniz = &(&f.derivative_idx(0) * &g) + &(&f * &g.derivative_idx(0));
        prop_assert_eq!(fg.derivative_idx(0), leibniz);
        if !g.is_zero() {
            prop_assert_eq!(fg.div_exact(&g), Some(f.clone()));
        }
        Ok(())
    })
}

/// `Res_y(f, g) = 0` exactly when `f` and `g` share a factor of positive degree in `y`.
pub fn resultant_gcd_duality(cases: u32) -> Result<u32, String> {
    let s = (poly_xy(3, 2), poly_xy(3, 2), poly_xy(2, 1));
    run(cases, s, |(f1, g1, h)| {
        let (f, g) = (&h * &f1, &h * &g1);
        prop_assume!(!f.is_zero() && !g.is_zero());
        prop_assume!(f.degree_in(1).unwrap_or(0) > 0 && g.degree_in(1).unwrap_or(0) > 0);
        let res = f.resultant_idx(&g, 1).map_err(|e| TestCaseError::fail(e.to_string()))?;
        let common = f.gcd(&g).degree_in(1).unwrap_or(0) > 0;
        prop_assert_eq!(res.is_zero(), common, "f = {}, g = {}, res = {}", f, g, res);
        Ok(())
    })
}

/// Flatness of the Legendre web does not depend on the dual chart.
pub fn chart_independence() -> Result<u32, String> {
    let mut n = 0;
    for fx in catalog::primary_fixtures() {
        let fol = fx.foliation();
        let mut seen = Vec::new();
        for ch in Chart::duals() {
            let w = match ImplicitWeb::legendre(&fol, ch) {
                Ok(w) => w,
                Err(_) => continue,
            };
            seen.push(w.is_flat().map_err(|e| format!("{} {}: {}", fx.id, ch, e))?);
        }
        if seen.len() < 2 {
            return Err(format!("{}: fewer than two charts available", fx.id));
        }
        if seen.iter().any(|f| *f != seen[0]) {
            return Err(format!("{}: charts disagree {:?}", fx.id, seen));
        }
        n += seen.len() as u32;
    }
    Ok(n)
}

/// `(A B)^* F = B^* A^* F` on the 16 fixtures.
pub fn pullback_functoriality(cases: u32) -> Result<u32, String> {
    let fixtures = catalog::primary_fixtures();
    let n = fixtures.len();
    run(cases, (0..n, int_mat3(), int_mat3()), |(i, a, b)| {
        prop_assume!(mat3_det(&a) != FieldElem::from_int(0) && mat3_det(&b) != FieldElem::from_int(0));
        let f = fixtures[i].foliation();
        let two = f.pullback(&a).and_then(|g| g.pullback(&b)).map_err(|e| TestCaseError::fail(e.to_string()))?;
        let one = f.pullback(&mat3_mul(&a, &b)).map_err(|e| TestCaseError::fail(e.to_string()))?;
        prop_assert!(two.same_as(&one), "{} under {:?} then {:?}", fixtures[i].id, a, b);
        Ok(())
    })
}

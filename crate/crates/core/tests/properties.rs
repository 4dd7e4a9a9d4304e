mod common;

use std::collections::BTreeSet;

use common::{field_elem, int_mat3, monomial_poly, poly_xy, xy};
use proptest::prelude::*;
use webflat::catalog;
use webflat::exactfield::rat;
use webflat::foliation::mat3_det;
use webflat::parse::parse_poly;
use webflat::{AffineOneForm, Chart, FieldElem, Foliation, HomFoliation, ImplicitWeb, Line, MPoly, VarSet};

fn zero() -> FieldElem {
    FieldElem::from_int(0)
}

fn xyz() -> VarSet {
    VarSet::of(&["x", "y", "z"])
}

fn euler(f: &Foliation) -> MPoly {
    let r = f.ring();
    let [p, q, s] = f.components();
    (0..3).fold(MPoly::zero(r), |acc, i| &acc + &(&MPoly::var_idx(r, i) * [p, q, s][i]))
}

fn binary_form(d: u32) -> impl Strategy<Value = MPoly> {
    prop::collection::vec(-2i64..=2, (d + 1) as usize).prop_map(move |cs| {
        let r = xy();
        cs.iter().enumerate().fold(MPoly::zero(&r), |acc, (k, c)| {
            &acc + &monomial_poly(&r, d - k as u32, k as u32, &FieldElem::from_int(*c))
        })
    })
}

fn hom_foliation(d: u32) -> impl Strategy<Value = Option<HomFoliation>> {
    (binary_form(d), binary_form(d)).prop_map(|(a, b)| HomFoliation::new(a, b).ok())
}

fn catalog_index() -> impl Strategy<Value = usize> {
    0..catalog::primary_fixtures().len()
}

// exactfield

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn inverse_and_ring_laws(a in field_elem(), b in field_elem(), c in field_elem()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        if a != zero() {
            prop_assert_eq!(&a * &a.inv().unwrap(), FieldElem::from_int(1));
        }
    }

    #[test]
    fn rational_embedding(p in -20i64..=20, q in 1i64..=20, r in -20i64..=20, s in 1i64..=20) {
        let fe = |n, d| FieldElem::from_rational(rat(n, d));
        prop_assert_eq!(&fe(p, q) * &fe(r, s), fe(p * r, q * s));
        prop_assert_eq!(&fe(p, q) + &fe(r, s), fe(p * s + r * q, q * s));
    }

    #[test]
    fn galois_conjugations_are_automorphisms(a in field_elem(), b in field_elem()) {
        for conj in [FieldElem::conj_i, FieldElem::conj_sqrt3, FieldElem::conj_both] {
            prop_assert_eq!(conj(&(&a * &b)), &conj(&a) * &conj(&b));
            prop_assert_eq!(conj(&(&a + &b)), &conj(&a) + &conj(&b));
        }
    }
}

// multipoly

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn squarefree_product_reproduces_input(f in poly_xy(3, 2), g in poly_xy(2, 1)) {
        let h = &(&f * &g) * &g;
        prop_assume!(!h.is_zero());
        let parts = h.squarefree_decomposition().unwrap();
        let prod = parts.iter().fold(MPoly::one(h.ring()), |acc, (k, s)| &acc * &s.pow(*k));
        prop_assert!(prod.proportional(&h), "{} from {:?}", h, parts);
        let mut ks: Vec<u32> = parts.iter().map(|(k, _)| *k).collect();
        ks.sort_unstable();
        ks.dedup();
        prop_assert_eq!(ks.len(), parts.len());
    }

    #[test]
    fn substitution_respects_composition(f in poly_xy(4, 2), s in prop::array::uniform2(poly_xy(2, 1)), t in prop::array::uniform2(poly_xy(2, 1))) {
        let r = xy();
        let once = f.substitute(&[("x", s[0].clone()), ("y", s[1].clone())]).unwrap();
        let twice = once.substitute(&[("x", t[0].clone()), ("y", t[1].clone())]).unwrap();
        let composed: Vec<MPoly> = s.iter().map(|g| g.compose(&r, &t)).collect();
        let direct = f.compose(&r, &composed);
        prop_assert_eq!(twice, direct);
    }

    #[test]
    fn resultant_is_multiplicative(f in poly_xy(2, 2), g in poly_xy(2, 1), h in poly_xy(3, 2)) {
        prop_assume!(!f.is_zero() && !g.is_zero() && !h.is_zero());
        prop_assume!(f.degree_in(1).unwrap() > 0 && g.degree_in(1).unwrap() > 0 && h.degree_in(1).unwrap() > 0);
        let lhs = (&f * &g).resultant_idx(&h, 1).unwrap();
        let rhs = &f.resultant_idx(&h, 1).unwrap() * &g.resultant_idx(&h, 1).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn json_round_trip_is_deterministic(f in poly_xy(5, 3)) {
        let a = serde_json::to_string(&f.to_json()).unwrap();
        let b = serde_json::to_string(&f.to_json()).unwrap();
        prop_assert_eq!(&a, &b);
        let v: serde_json::Value = serde_json::from_str(&a).unwrap();
        prop_assert_eq!(MPoly::from_json(&v).unwrap(), f);
    }
}

#[test]
fn resultant_gcd_duality() {
    common::resultant_gcd_duality(200).unwrap();
}

// parse

#[derive(Clone, Debug)]
enum Expr {
    X,
    Y,
    Int(i64),
    Frac(i64, i64),
    I,
    Sqrt3,
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
}

impl Expr {
    fn text(&self) -> String {
        match self {
            Expr::X => "x".into(),
            Expr::Y => "y".into(),
            Expr::Int(n) => n.to_string(),
            Expr::Frac(n, d) => format!("{}/{}", n, d),
            Expr::I => "i".into(),
            Expr::Sqrt3 => "sqrt3".into(),
            Expr::Neg(a) => format!("-({})", a.text()),
            Expr::Add(a, b) => format!("({} + {})", a.text(), b.text()),
            Expr::Sub(a, b) => format!("({} - {})", a.text(), b.text()),
            Expr::Mul(a, b) => format!("{}*{}", a.text(), b.text()),
            Expr::Pow(a, k) => format!("({})^{}", a.text(), k),
        }
    }

    fn eval(&self, r: &VarSet) -> MPoly {
        let k = |c: FieldElem| MPoly::constant(r, c);
        match self {
            Expr::X => MPoly::var_idx(r, 0),
            Expr::Y => MPoly::var_idx(r, 1),
            Expr::Int(n) => k(FieldElem::from_int(*n)),
            Expr::Frac(n, d) => k(FieldElem::from_frac(*n, *d)),
            Expr::I => k(FieldElem::i()),
            Expr::Sqrt3 => k(FieldElem::sqrt3()),
            Expr::Neg(a) => -a.eval(r),
            Expr::Add(a, b) => &a.eval(r) + &b.eval(r),
            Expr::Sub(a, b) => &a.eval(r) - &b.eval(r),
            Expr::Mul(a, b) => &a.eval(r) * &b.eval(r),
            Expr::Pow(a, e) => a.eval(r).pow(*e),
        }
    }
}

fn expr() -> impl Strategy<Value = Expr> {
    let leaf = prop_oneof![
        Just(Expr::X),
        Just(Expr::Y),
        (0i64..=9).prop_map(Expr::Int),
        (-5i64..=5, 1i64..=6).prop_map(|(n, d)| Expr::Frac(n, d)),
        Just(Expr::I),
        Just(Expr::Sqrt3),
    ];
    leaf.prop_recursive(4, 24, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(|a| Expr::Neg(Box::new(a))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Add(Box::new(a), Box::new(b))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Sub(Box::new(a), Box::new(b))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Mul(Box::new(a), Box::new(b))),
            (inner, 0u32..=3).prop_map(|(a, k)| Expr::Pow(Box::new(a), k)),
        ]
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn parse_matches_expression_semantics(e in expr()) {
        let r = xy();
        let parsed = parse_poly(&e.text(), &["x", "y"]).unwrap().to_ring(&r).unwrap();
        prop_assert_eq!(&parsed, &e.eval(&r), "{}", e.text());
        let printed = parsed.to_string();
        let again = parse_poly(&printed, &["x", "y"]).unwrap().to_ring(&r).unwrap();
        prop_assert_eq!(&again, &parsed);
        prop_assert_eq!(again.to_string(), printed);
    }

    #[test]
    fn one_form_print_parse(p in poly_xy(4, 3), q in poly_xy(4, 3)) {
        prop_assume!(!p.is_zero() || !q.is_zero());
        let w = AffineOneForm::new(p, q).unwrap();
        let back = AffineOneForm::parse(&w.to_string()).unwrap();
        prop_assert_eq!(back.p().to_ring(&xy()).unwrap(), w.p().clone());
        prop_assert_eq!(back.q().to_ring(&xy()).unwrap(), w.q().clone());
    }
}

// foliation

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    #[test]
    fn euler_relation(p in poly_xy(3, 2), q in poly_xy(3, 2), m in int_mat3()) {
        prop_assume!(!p.is_zero() || !q.is_zero());
        let f = AffineOneForm::new(p, q).unwrap().to_foliation().unwrap();
        prop_assert!(euler(&f).is_zero());
        prop_assume!(mat3_det(&m) != zero());
        let g = f.pullback(&m).unwrap();
        prop_assert!(euler(&g).is_zero());
        prop_assert_eq!(g.degree(), f.degree());
    }

    #[test]
    fn vector_field_constructor_satisfies_euler(a in poly_xy(3, 2), b in poly_xy(3, 2)) {
        let r = xyz();
        let (a, b) = (a.to_ring(&r).unwrap(), b.to_ring(&r).unwrap());
        let c = MPoly::var_idx(&r, 2).pow(2);
        if let Ok(f) = Foliation::from_vector_field(&a, &b, &c) {
            prop_assert!(euler(&f).is_zero());
        }
    }

    #[test]
    fn extactic_is_covariant(i in catalog_index(), m in int_mat3()) {
        prop_assume!(mat3_det(&m) != zero());
        let f = catalog::primary_fixtures()[i].foliation();
        let e = f.inflection_extactic().unwrap();
        let g = f.pullback(&m).unwrap();
        let eg = g.inflection_extactic().unwrap();
        let r = e.ring().clone();
        let img: Vec<MPoly> = (0..3)
            .map(|i| (0..3).fold(MPoly::zero(&r), |acc, k| &acc + &MPoly::var_idx(&r, k).scale(&m[i][k])))
            .collect();
        let moved = e.compose(&r, &img);
        prop_assert!(eg.proportional(&moved), "{} vs {}", eg, moved);
    }
}

#[test]
fn tangency_with_random_lines_equals_degree() {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
    for fx in catalog::load_catalog() {
        let f = fx.foliation();
        let mut tested = 0;
        while tested < 20 {
            let c: [i64; 3] = std::array::from_fn(|_| rng.gen_range(-3..=3));
            let l = match Line::new(c.map(FieldElem::from_int)) {
                Some(l) => l,
                None => continue,
            };
            if f.is_invariant_line(&l) {
                continue;
            }
            let (total, pts) = f.tangency(&l).unwrap();
            assert_eq!(total, f.degree(), "{} along {}", fx.id, l);
            assert!(pts.iter().map(|(_, m)| m).sum::<u32>() <= total);
            tested += 1;
        }
    }
}

#[test]
fn milnor_bounds_nu_squared() {
    for fx in catalog::load_catalog() {
        let f = fx.foliation();
        for s in f.singular_points().unwrap().points {
            let nu = f.nu(&s).unwrap();
            assert!(f.tau(&s).unwrap() >= 1);
            if let Ok(mu) = f.milnor(&s) {
                assert!(mu >= nu * nu, "{} at {}: mu {} nu {}", fx.id, s, mu, nu);
            }
        }
    }
}

#[test]
fn pullback_functoriality() {
    common::pullback_functoriality(50).unwrap();
}

// homogeneous

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn type_degree_identities(h in (3u32..=5).prop_flat_map(hom_foliation)) {
        prop_assume!(h.is_some());
        let h = h.unwrap();
        let t = h.hom_type().unwrap();
        prop_assert_eq!(t.degree(), h.d_transverse().total_degree().unwrap());
        prop_assert!(t.degree() <= 2 * h.degree() - 2);
        prop_assert!(t.radial_count() <= h.degree());
    }

    #[test]
    fn cubic_remark_identity(a in binary_form(3), b in binary_form(3)) {
        // force y | D_H: a0 b1 = a1 b0 on the x^3, x^2 y coefficients
        let r = xy();
        let a = &a - &monomial_poly(&r, 2, 1, &a.coeff_of(&[2, 1]));
        let b = &b - &monomial_poly(&r, 2, 1, &b.coeff_of(&[2, 1]));
        let a = &a + &monomial_poly(&r, 2, 1, &a.coeff_of(&[3, 0]));
        let b = &b + &monomial_poly(&r, 2, 1, &b.coeff_of(&[3, 0]));
        let h = HomFoliation::new(a.clone(), b.clone());
        prop_assume!(h.is_ok());
        let h = h.unwrap();
        let (zero, one) = (FieldElem::from_int(0), FieldElem::from_int(1));
        prop_assert!(h.d_transverse().div_exact(&MPoly::var_idx(&r, 1)).is_some() || h.d_transverse().is_zero());
        let q = match h.barycentre_q(&zero, &one) {
            Ok(q) => q,
            Err(_) => return Ok(()),
        };
        let pt = [one.clone(), zero.clone()];
        let c = h.cone_tangent();
        let lhs = &q * &c.eval(&pt).pow(2);
        let (at, bt) = (a.eval(&pt), b.eval(&pt));
        let rhs = c.eval(&[bt, -&at]);
        prop_assert_eq!(lhs, rhs);
    }
}

const H: [&str; 11] = [
    "y^3*dx - x^3*dy",
    "x^3*dx - y^3*dy",
    "y^2*(3*x+y)*dx - x^2*(x+3*y)*dy",
    "y^2*(3*x+y)*dx + x^2*(x+3*y)*dy",
    "2*y^3*dx + x^2*(3*y-2*x)*dy",
    "(4*x^3-6*x^2*y+4*y^3)*dx + x^2*(3*y-2*x)*dy",
    "y^3*dx + x*(3*y^2-x^2)*dy",
    "x*(x^2-3*y^2)*dx - 4*y^3*dy",
    "y^2*((-3+i*sqrt3)*x+2*y)*dx + x^2*((1+i*sqrt3)*x-2*i*sqrt3*y)*dy",
    "(3*x+sqrt3*y)*y^2*dx + (3*y-sqrt3*x)*x^2*dy",
    "(3*x^3+3*sqrt3*x^2*y+3*x*y^2+sqrt3*y^3)*dx + (sqrt3*x^3+3*x^2*y+3*sqrt3*x*y^2+3*y^3)*dy",
];

#[test]
fn gauss_map_dictionary() {
    let r = xy();
    let mut seen = 0;
    for (i, text) in H.iter().enumerate() {
        let h = HomFoliation::parse(text).unwrap();
        let f = h.to_foliation().unwrap();
        let (c, d) = (h.cone_tangent(), h.d_transverse());
        let g = c.gcd(&d);
        let mut degree_found = 0;
        for s in f.singular_points().unwrap().points {
            let [sx, sy, sz] = s.coords().clone();
            if sz != zero() {
                continue;
            }
            let line = &MPoly::var_idx(&r, 0).scale(&sy) - &MPoly::var_idx(&r, 1).scale(&sx);
            if g.div_exact(&line).is_none() {
                continue;
            }
            let (k, _) = d.remove_factor(&line);
            assert_eq!(f.tau(&s).unwrap(), k + 1, "H{} at {}", i + 1, s);
            degree_found += 1;
            seen += 1;
        }
        assert_eq!(degree_found, g.total_degree().unwrap_or(0), "H{}: gcd {}", i + 1, g);
    }
    assert!(seen > 0);
}

#[test]
fn camacho_sad_sum_at_infinity_is_one() {
    for text in H {
        let h = HomFoliation::parse(text).unwrap();
        let cs = h.cs_polynomial().unwrap();
        let d = h.degree();
        assert_eq!(cs.total_degree(), Some(d + 1));
        assert_eq!(cs.coeff_of(&[d + 1]), FieldElem::from_int(1));
        assert_eq!(cs.coeff_of(&[d]), FieldElem::from_int(-1), "{}", text);
    }
}

// web

fn cubic_web() -> impl Strategy<Value = MPoly> {
    (poly_xy(2, 1), poly_xy(2, 1), poly_xy(3, 1)).prop_map(|(c1, c2, c3)| {
        let r = VarSet::of(&["x", "y", "p"]);
        let p = MPoly::var_idx(&r, 2);
        let up = |f: &MPoly| f.to_ring(&r).unwrap();
        &(&(&p.pow(3) + &(&up(&c1) * &p.pow(2))) + &(&up(&c2) * &p)) + &up(&c3)
    })
}

/// Classical discriminant of `a w^3 + b w^2 + c w + d`.
fn cubic_disc(a: &MPoly, b: &MPoly, c: &MPoly, d: &MPoly) -> MPoly {
    let n = |k: i64, f: MPoly| f.scale(&FieldElem::from_int(k));
    let terms = [
        (b * b) * (c * c),
        n(-4, a * &(c * &(c * c))),
        n(-4, d * &(b * &(b * b))),
        n(-27, &(a * a) * &(d * d)),
        n(18, &(a * b) * &(c * d)),
    ];
    terms.iter().fold(MPoly::zero(a.ring()), |acc, t| &acc + t)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn resultant_is_leading_coefficient_times_discriminant(a0 in poly_xy(2, 1), f in cubic_web()) {
        prop_assume!(!a0.is_zero());
        let r = f.ring().clone();
        let p = MPoly::var_idx(&r, 2);
        let f = &f + &(&(&a0.to_ring(&r).unwrap() - &MPoly::one(&r)) * &p.pow(3));
        let w = ImplicitWeb::new(f, Chart::Affine).unwrap();
        let c = w.coeffs();
        let res = w.p_resultant();
        let a0d = &c[0] * &cubic_disc(&c[0], &c[1], &c[2], &c[3]);
        prop_assert!(res == a0d || res == -&a0d, "R = {}, a0 disc = {}", res, a0d);
    }

    #[test]
    fn curvature_covariance(f in cubic_web(), m in prop::array::uniform4(-2i64..=2), e in prop::array::uniform2(-2i64..=2)) {
        let det = m[0] * m[3] - m[1] * m[2];
        prop_assume!(det != 0);
        let w = ImplicitWeb::new(f.clone(), Chart::Affine).unwrap();
        prop_assume!(!w.p_resultant().is_zero());
        let r = f.ring().clone();
        let v = |i| MPoly::var_idx(&r, i);
        let k = |n: i64| FieldElem::from_int(n);
        // x = a X + b Y + e0, y = c X + d Y + e1, so p = (c + d P) / (a + b P)
        let sx = &(&v(0).scale(&k(m[0])) + &v(1).scale(&k(m[1]))) + &MPoly::from_int(&r, e[0]);
        let sy = &(&v(0).scale(&k(m[2])) + &v(1).scale(&k(m[3]))) + &MPoly::from_int(&r, e[1]);
        let den = &MPoly::from_int(&r, m[0]) + &v(2).scale(&k(m[1]));
        let num = &MPoly::from_int(&r, m[2]) + &v(2).scale(&k(m[3]));
        let coeffs = f.coeffs_in(2);
        let g = coeffs.iter().enumerate().fold(MPoly::zero(&r), |acc, (j, cj)| {
            let cj = cj.compose(&r, &[sx.clone(), sy.clone(), v(2)]);
            &acc + &(&cj * &(&num.pow(j as u32) * &den.pow(3 - j as u32)))
        });
        let wg = ImplicitWeb::new(g, Chart::Affine).unwrap();
        // the fiber degree drops when sigma sends a web direction to the vertical
        prop_assume!(wg.k() == 3);
        let kf = w.curvature().unwrap();
        let kg = wg.curvature().unwrap();
        let moved = |f: &MPoly| f.compose(&r, &[sx.clone(), sy.clone(), v(2)]);
        let lhs = kg.numerator() * &moved(kf.denominator());
        let rhs = (&moved(kf.numerator()) * kg.denominator()).scale(&k(det));
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!(kf.is_zero(), kg.is_zero());
    }

    #[test]
    fn homothety_invariance(h in hom_foliation(3)) {
        prop_assume!(h.is_some());
        let f = h.unwrap().to_foliation().unwrap();
        let w = match ImplicitWeb::legendre(&f, Chart::Dual2) {
            Ok(w) => w,
            Err(_) => return Ok(()),
        };
        prop_assume!(!w.p_resultant().is_zero());
        let k = w.curvature().unwrap();
        let r = w.ring().clone();
        for lambda in [2i64, -3] {
            let l = FieldElem::from_int(lambda);
            let img = [MPoly::var_idx(&r, 0).scale(&l), MPoly::var_idx(&r, 1).scale(&l), MPoly::var_idx(&r, 2)];
            let n = k.numerator().compose(&r, &img).scale(&(&l * &l));
            let d = k.denominator().compose(&r, &img);
            prop_assert_eq!(&n * k.denominator(), k.numerator() * &d);
        }
    }

    #[test]
    fn saturation_removes_common_factors(i in catalog_index(), h in poly_xy(3, 1)) {
        prop_assume!(!h.is_zero());
        let fx = &catalog::primary_fixtures()[i];
        let w = fx.form.clone();
        let r = w.ring().clone();
        let hh = h.to_ring(&r).unwrap();
        let scaled = AffineOneForm::new(&hh * w.p(), &hh * w.q()).unwrap();
        let f = scaled.to_foliation().unwrap();
        prop_assert!(f.same_as(&fx.foliation()));
        for ch in Chart::duals() {
            if let (Ok(a), Ok(b)) = (ImplicitWeb::legendre(&f, ch), ImplicitWeb::legendre(&fx.foliation(), ch)) {
                prop_assert!(a.poly().proportional(b.poly()), "{} vs {}", a, b);
            }
        }
    }
}

#[test]
fn web_content_does_not_change_curvature() {
    let w = ImplicitWeb::parse("p^3 - 4*y*p - 4*x").unwrap();
    let r = w.ring().clone();
    let h = parse_poly("1 + x^2 + y", &["x", "y", "p"]).unwrap().to_ring(&r).unwrap();
    let scaled = ImplicitWeb::new(&h * w.poly(), Chart::Affine).unwrap();
    let (a, b) = (w.curvature().unwrap(), scaled.curvature().unwrap());
    assert!(b.equals(a.numerator(), a.denominator()));
}

#[test]
fn chart_independence() {
    common::chart_independence().unwrap();
}

// catalog

#[test]
fn fixture_invariants_are_pairwise_distinct() {
    let mut tuples = BTreeSet::new();
    let fixtures = catalog::primary_fixtures();
    for fx in &fixtures {
        let f = fx.foliation();
        let kind = match fx.homogeneous() {
            Some(h) => format!("homogeneous {}", h.hom_type().unwrap()),
            None => "inhomogeneous".into(),
        };
        let mut profile: Vec<(u32, u32, Option<u32>)> = f
            .singular_points()
            .unwrap()
            .points
            .iter()
            .map(|s| (f.nu(s).unwrap(), f.radial_order(s).unwrap(), f.milnor(s).ok()))
            .collect();
        profile.sort();
        let tuple = format!("{} / {:?} / convex {}", kind, profile, f.is_convex().unwrap());
        assert!(tuples.insert(tuple.clone()), "{} repeats {}", fx.id, tuple);
    }
    assert_eq!(tuples.len(), 16);
}

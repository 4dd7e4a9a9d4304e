//! Implicit webs `F(u, v, w) = 0` with `w = dv/du`, Legendre transforms of
//! foliations and the curvature of 3-webs.

mod henaut;

use std::fmt;
use std::str::FromStr;



use crate::error::{ParseError, WebError};
use crate::exactfield::FieldElem;
use crate::foliation::Foliation;
use crate::multipoly::{MPoly, VarSet};

pub use henaut::{henaut_matrices, Curvature2Form};

/// Chart in which a web is written.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Chart {
    /// Base `(x, y)`, fiber `p = dy/dx`.
    Affine,
    /// Lines `y = p x - q`; base `(p, q)`, fiber `x = dq/dp`.
    Dual1,
    /// Lines `p x - q y = 1`; base `(p, q)`, fiber `w = dq/dp`.
    Dual2,
    /// Lines `p y - q x = 1`; base `(p, q)`, fiber `w = dq/dp`.
    Dual3,
}

impl Chart {
    pub fn number(self) -> u8 {
        match self {
            Chart::Affine => 0,
            Chart::Dual1 => 1,
            Chart::Dual2 => 2,
            Chart::Dual3 => 3,
        }
    }

    pub fn duals() -> [Chart; 3] {
        [Chart::Dual1, Chart::Dual2, Chart::Dual3]
    }

    fn var_names(self) -> [&'static str; 3] {
        match self {
            Chart::Affine => ["x", "y", "p"],
            Chart::Dual1 => ["p", "q", "x"],
            Chart::Dual2 | Chart::Dual3 => ["p", "q", "w"],
        }
    }
}

impl fmt::Display for Chart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Chart::Affine => write!(f, "affine"),
            c => write!(f, "dual{}", c.number()),
        }
    }
}

impl FromStr for Chart {
    type Err = WebError;

    fn from_str(s: &str) -> Result<Self, WebError> {
        match s.trim() {
            "0" | "affine" => Ok(Chart::Affine),
            "1" | "dual1" => Ok(Chart::Dual1),
            "2" | "dual2" => Ok(Chart::Dual2),
            "3" | "dual3" => Ok(Chart::Dual3),
            other => Err(WebError::Invalid(format!("unknown chart `{}`", other))),
        }
    }
}

/// `F = sum a_i w^(k - i)`; the ring starts with `u, v, w`, then parameters.
#[derive(Clone, Debug, PartialEq)]
pub struct ImplicitWeb {
    f: MPoly,
    chart: Chart,
    k: u32,
}

impl ImplicitWeb {
    pub fn new(f: MPoly, chart: Chart) -> Result<Self, WebError> {
        let names = chart.var_names();
        let ring = f.ring();
        if ring.len() < 3 || (0..3).any(|i| ring.name(i) != names[i]) {
            return Err(WebError::Invalid(format!("ring must start with {}, {}, {}", names[0], names[1], names[2])));
        }
        let k = f.degree_in(2).ok_or(WebError::DegreeZero)?;
        if k == 0 {
            return Err(WebError::DegreeZero);
        }
        Ok(ImplicitWeb { f, chart, k })
    }

    /// Parse `F(x, y, p)`.
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let f = crate::parse::parse_poly(text, &["x", "y", "p"])?;
        ImplicitWeb::new(f, Chart::Affine).map_err(|e| ParseError::Syntax { pos: 0, msg: e.to_string() })
    }

    pub fn poly(&self) -> &MPoly {
        &self.f
    }

    pub fn chart(&self) -> Chart {
        self.chart
    }

    pub fn ring(&self) -> &VarSet {
        self.f.ring()
    }

    /// Number of directions.
    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn params(&self) -> &[String] {
        &self.ring().names()[3..]
    }

    /// `a_0, ..., a_k`, with `a_0` the leading coefficient in the fiber variable.
    pub fn coeffs(&self) -> Vec<MPoly> {
        let mut c = self.f.coeffs_in(2);
        c.resize(self.k as usize + 1, MPoly::zero(self.ring()));
        c.reverse();
        c
    }

    pub fn specialize(&self, values: &[(&str, FieldElem)]) -> Result<Self, WebError> {
        let mut f = self.f.clone();
        for (n, v) in values {
            let i = self.ring().index(n).filter(|&i| i >= 3).ok_or_else(|| WebError::Invalid(format!("`{}` is not a parameter", n)))?;
            f = f.eval_var(i, v);
        }
        let keep: Vec<&str> = self.ring().names().iter().map(|s| s.as_str()).filter(|n| !values.iter().any(|(m, _)| m == n)).collect();
        let ring = VarSet::new(&keep)?;
        ImplicitWeb::new(f.to_ring(&ring)?, self.chart)
    }

    /// Divide by the gcd of the coefficients in the fiber variable.
    fn remove_content(f: MPoly) -> MPoly {
        let c = f.content_in(2);
        if c.is_constant() {
            f
        } else {
            f.div_exact(&c).expect("content divides")
        }
    }

    /// Legendre transform of a foliation of degree `d >= 1`.
    pub fn legendre(fol: &Foliation, chart: Chart) -> Result<Self, WebError> {
        let d = fol.degree();
        if d == 0 {
            return Err(WebError::DegreeZero);
        }
        let w = fol.affine();
        let names = chart.var_names();
        let mut rn: Vec<String> = names.iter().map(|s| s.to_string()).collect();
        for pn in w.params() {
            if rn.contains(pn) {
                return Err(WebError::Invalid(format!("parameter `{}` clashes with a chart variable", pn)));
            }
            rn.push(pn.clone());
        }
        let ring = VarSet::new(&rn)?;
        let v = |i: usize| MPoly::var_idx(&ring, i);
        let params: Vec<MPoly> = (3..ring.len()).map(v).collect();
        let (p, q, fib) = (v(0), v(1), v(2));
        let f = match chart {
            Chart::Affine => return Err(WebError::Invalid("the Legendre transform lives in a dual chart".into())),
            Chart::Dual1 => {
                let y = &(&p * &fib) - &q;
                let mut images = vec![fib.clone(), y];
                images.extend(params.iter().cloned());
                let pp = w.p().compose(&ring, &images);
                let qq = w.q().compose(&ring, &images);
                &pp + &(&p * &qq)
            }
            Chart::Dual2 | Chart::Dual3 => {
                let src = w.ring();
                let mut hn: Vec<String> = vec!["x".into(), "y".into(), "z".into()];
                hn.extend(src.names()[2..].iter().cloned());
                let hring = VarSet::new(&hn)?;
                let pa = w.p().to_ring(&hring)?;
                let qa = w.q().to_ring(&hring)?;
                let xy = [0usize, 1];
                let n = pa.degree_in_vars(&xy).unwrap_or(0).max(qa.degree_in_vars(&xy).unwrap_or(0));
                let pw_q = &(&p * &fib) - &q;
                let one = MPoly::one(&ring);
                let mut images = if chart == Chart::Dual2 { vec![fib.clone(), one] } else { vec![one, fib.clone()] };
                images.push(pw_q.clone());
                images.extend(params.iter().cloned());
                let pt = pa.homogenize_in(&xy, 2, n).compose(&ring, &images);
                let qt = qa.homogenize_in(&xy, 2, n).compose(&ring, &images);
                let nf = if chart == Chart::Dual2 { &(&q * &pt) + &(&p * &qt) } else { &(&p * &pt) + &(&q * &qt) };
                nf.remove_factor(&pw_q).1
            }
        };
        if f.is_zero() {
            return Err(WebError::DegreeDrop(chart.number()));
        }
        let f = ImplicitWeb::remove_content(f);
        match f.degree_in(2) {
            Some(k) if k == d => ImplicitWeb::new(f, chart),
            Some(k) if k < d => Err(WebError::DegreeDrop(chart.number())),
            _ => Err(WebError::Invalid("fiber degree exceeds the foliation degree".into())),
        }
    }

    /// `R = Res_w(F, dF/dw)`; for 3-webs the explicit 5x5 determinant.
    pub fn p_resultant(&self) -> MPoly {
        if self.k == 3 {
            return crate::multipoly::det_bareiss(henaut_matrices(&self.coeffs()).0);
        }
        let df = self.f.derivative_idx(2);
        self.f.resultant_idx(&df, 2).expect("nonzero polynomials")
    }

    /// `Delta` with `R = +- a_0 Delta`.
    pub fn p_discriminant(&self) -> Result<MPoly, WebError> {
        let r = self.p_resultant();
        if r.is_zero() {
            return Ok(r);
        }
        let a0 = self.coeffs()[0].clone();
        r.div_exact(&a0).ok_or(WebError::NonDivisible)
    }

    pub fn henaut_alpha(&self) -> Result<(MPoly, MPoly), WebError> {
        if self.k != 3 {
            return Err(WebError::NotACubicWeb(self.k as usize));
        }
        let (_, m1, m2) = henaut_matrices(&self.coeffs());
        Ok((crate::multipoly::det_bareiss(m1), crate::multipoly::det_bareiss(m2)))
    }

    /// `K = (d_v(alpha_1 / R) - d_u(alpha_2 / R)) du ^ dv`.
    pub fn curvature(&self) -> Result<Curvature2Form, WebError> {
        if self.k != 3 {
            return Err(WebError::NotACubicWeb(self.k as usize));
        }
        let r = self.p_resultant();
        if r.is_zero() {
            return Err(WebError::NonReducedWeb);
        }
        let (a1, a2) = self.henaut_alpha()?;
        let num = &(&(&a1.derivative_idx(1) * &r) - &(&a1 * &r.derivative_idx(1))) - &(&(&a2.derivative_idx(0) * &r) - &(&a2 * &r.derivative_idx(0)));
        let den = &r * &r;
        Ok(Curvature2Form::new(num, den))
    }

    pub fn is_flat(&self) -> Result<bool, WebError> {
        Ok(self.curvature()?.is_zero())
    }

    /// Coefficient of `u^i v^j` in the unreduced curvature numerator, after
    /// fixing the parameters listed in `sample`. At most six parameters may
    /// stay symbolic.
    pub fn curvature_coefficient(&self, i: u32, j: u32, sample: &[(&str, FieldElem)]) -> Result<MPoly, WebError> {
        let w = if sample.is_empty() { self.clone() } else { self.specialize(sample)? };
        if w.params().len() > 6 {
            return Err(WebError::Invalid(format!("{} symbolic parameters; fix some of them by sampling", w.params().len())));
        }
        let num = w.curvature()?.numerator().clone();
        let mut names: Vec<&str> = w.params().iter().map(|s| s.as_str()).collect();
        if names.is_empty() {
            names.push("_");
        }
        let out = VarSet::new(&names)?;
        let mut acc = MPoly::zero(&out);
        for (m, c) in num.terms() {
            if m.0[0] == i && m.0[1] == j {
                let mut e = vec![0u32; out.len()];
                for (k, slot) in e.iter_mut().enumerate().take(w.params().len()) {
                    *slot = m.0[3 + k];
                }
                acc = &acc + &MPoly::monomial(&out, crate::multipoly::Monomial(e.into_iter().collect()), c.clone());
            }
        }
        Ok(acc)
    }
}

impl fmt::Display for ImplicitWeb {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.f)
    }
}

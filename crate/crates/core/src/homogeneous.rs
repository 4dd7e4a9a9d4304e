//! Homogeneous foliations `A(x,y) dx + B(x,y) dy` with `A`, `B` binary forms
//! of degree `d`: cone tangent, transverse inflection form, type, Camacho-Sad
//! polynomial at infinity and flatness criteria.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::Zero;

use crate::error::{FoliationError, HomError};
use crate::exactfield::FieldElem;
use crate::foliation::{AffineOneForm, Foliation};
use crate::multipoly::{MPoly, VarSet};

#[derive(Clone, Debug, PartialEq)]
pub struct HomFoliation {
    a: MPoly,
    b: MPoly,
    d: u32,
}

/// Radial and transverse inflection orders: `r_k R_k + t_k T_k`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct HomType {
    pub radial: BTreeMap<u32, u32>,
    pub transverse: BTreeMap<u32, u32>,
}

impl HomType {
    /// `sum k (r_k + t_k)`, the degree of `D_H`.
    pub fn degree(&self) -> u32 {
        self.radial.iter().chain(self.transverse.iter()).map(|(k, n)| k * n).sum()
    }

    pub fn radial_count(&self) -> u32 {
        self.radial.values().sum()
    }

    pub fn is_convex(&self) -> bool {
        self.transverse.is_empty()
    }
}

impl fmt::Display for HomType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut ks: Vec<u32> = self.radial.keys().chain(self.transverse.keys()).copied().collect();
        ks.sort_unstable();
        ks.dedup();
        let mut parts = Vec::new();
        for k in ks {
            if let Some(n) = self.radial.get(&k) {
                parts.push(format!("{}·R{}", n, k));
            }
            if let Some(n) = self.transverse.get(&k) {
                parts.push(format!("{}·T{}", n, k));
            }
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join("+"))
        }
    }
}

impl FromStr for HomType {
    type Err = HomError;

    /// Accepts `2·R1+1·T2`, with `*` or `.` in place of `·`.
    fn from_str(s: &str) -> Result<Self, HomError> {
        let mut t = HomType::default();
        let bad = || HomError::Invalid(format!("bad type `{}`", s));
        if s.trim() == "0" {
            return Ok(t);
        }
        for part in s.split('+') {
            let part = part.trim().replace(['·', '.'], "*");
            let (n, rest) = part.split_once('*').ok_or_else(bad)?;
            let n: u32 = n.trim().parse().map_err(|_| bad())?;
            let rest = rest.trim();
            let k: u32 = rest.get(1..).ok_or_else(bad)?.parse().map_err(|_| bad())?;
            let map = match rest.chars().next() {
                Some('R') => &mut t.radial,
                Some('T') => &mut t.transverse,
                _ => return Err(bad()),
            };
            *map.entry(k).or_insert(0) += n;
        }
        Ok(t)
    }
}

fn xy() -> VarSet {
    VarSet::of(&["x", "y"])
}

impl HomFoliation {
    pub fn new(a: MPoly, b: MPoly) -> Result<Self, HomError> {
        let ring = xy();
        let a = a.to_ring(&ring).map_err(|_| HomError::Invalid("A and B must be forms in x, y".into()))?;
        let b = b.to_ring(&ring).map_err(|_| HomError::Invalid("A and B must be forms in x, y".into()))?;
        if a.is_zero() || b.is_zero() {
            return Err(HomError::Invalid("A and B must both be nonzero".into()));
        }
        if !a.is_homogeneous() || !b.is_homogeneous() || a.total_degree() != b.total_degree() {
            return Err(HomError::Invalid("A and B must be forms of a common degree".into()));
        }
        let d = a.total_degree().unwrap();
        if d < 2 {
            return Err(HomError::WrongDegree(d));
        }
        if !a.gcd(&b).is_constant() {
            return Err(HomError::Invalid("A and B have a common factor".into()));
        }
        Ok(HomFoliation { a, b, d })
    }

    pub fn from_affine(w: &AffineOneForm) -> Result<Self, HomError> {
        HomFoliation::new(w.p().clone(), w.q().clone())
    }

    pub fn parse(text: &str) -> Result<Self, HomError> {
        let w = AffineOneForm::parse(text).map_err(|e| HomError::Invalid(e.to_string()))?;
        HomFoliation::from_affine(&w)
    }

    pub fn a(&self) -> &MPoly {
        &self.a
    }

    pub fn b(&self) -> &MPoly {
        &self.b
    }

    pub fn degree(&self) -> u32 {
        self.d
    }

    pub fn to_affine(&self) -> AffineOneForm {
        AffineOneForm::new(self.a.clone(), self.b.clone()).expect("nonzero form")
    }

    pub fn to_foliation(&self) -> Result<Foliation, FoliationError> {
        self.to_affine().to_foliation()
    }

    /// `C_H = x A + y B`.
    pub fn cone_tangent(&self) -> MPoly {
        let r = xy();
        &(&MPoly::var_idx(&r, 0) * &self.a) + &(&MPoly::var_idx(&r, 1) * &self.b)
    }

    /// `D_H = A_x B_y - A_y B_x`.
    pub fn d_transverse(&self) -> MPoly {
        &(&self.a.derivative_idx(0) * &self.b.derivative_idx(1)) - &(&self.a.derivative_idx(1) * &self.b.derivative_idx(0))
    }

    fn divergence(&self) -> MPoly {
        &self.b.derivative_idx(0) - &self.a.derivative_idx(1)
    }

    /// Squarefree classes of `D_H` split into radial and transverse parts.
    fn classes(&self) -> Result<Vec<(u32, MPoly, MPoly)>, HomError> {
        let dh = self.d_transverse();
        if dh.is_zero() {
            return Ok(Vec::new());
        }
        let c = self.cone_tangent().squarefree_part();
        let mut out = Vec::new();
        for (k, s) in dh.squarefree_decomposition()? {
            let rad = s.gcd(&c);
            let tr = s.div_exact(&rad).expect("gcd divides");
            out.push((k, rad, tr));
        }
        Ok(out)
    }

    pub fn hom_type(&self) -> Result<HomType, HomError> {
        let mut t = HomType::default();
        for (k, rad, tr) in self.classes()? {
            let r = rad.total_degree().unwrap_or(0);
            let s = tr.total_degree().unwrap_or(0);
            if r > 0 {
                t.radial.insert(k, r);
            }
            if s > 0 {
                t.transverse.insert(k, s);
            }
        }
        Ok(t)
    }

    /// `prod (lambda - CS(H, L_inf, s))` over the singular points at infinity.
    pub fn cs_polynomial(&self) -> Result<MPoly, HomError> {
        let ch = self.cone_tangent();
        if !ch.squarefree_part().proportional(&ch) {
            return Err(HomError::DegenerateInfinity);
        }
        let ring = VarSet::of(&["x", "lambda"]);
        let one = FieldElem::from_int(1);
        let zero = FieldElem::zero();
        let lam = MPoly::var_idx(&ring, 1);
        let to_x = |f: &MPoly| f.eval_var(1, &one).to_ring(&ring).expect("x only");
        let c = to_x(&ch);
        let mut poly = MPoly::one(&ring);
        if c.degree_in(0).unwrap_or(0) > 0 {
            let g = &(&lam * &c.derivative_idx(0)) - &to_x(&self.a);
            poly = c.resultant_idx(&g, 0)?.monic();
        }
        if ch.degree_in(0) < ch.total_degree() {
            // the direction [1:0:0], read in the chart x = 1
            let ct = ch.eval_var(0, &one);
            let dc = ct.derivative_idx(1).eval_var(1, &zero).constant_value().unwrap();
            let b10 = self.b.eval_var(1, &zero).eval_var(0, &one).constant_value().unwrap();
            let cs = b10.div(&dc).map_err(|_| HomError::DegenerateInfinity)?;
            poly = &poly * &(&lam - &MPoly::constant(&ring, cs));
        }
        let out = VarSet::of(&["lambda"]);
        Ok(poly.to_ring(&out)?)
    }

    fn at(&self, f: &MPoly, x: &FieldElem, y: &FieldElem) -> FieldElem {
        f.eval(&[x.clone(), y.clone()])
    }

    fn line(a: &FieldElem, b: &FieldElem) -> MPoly {
        let r = xy();
        &MPoly::var_idx(&r, 0).scale(a) + &MPoly::var_idx(&r, 1).scale(b)
    }

    /// `Q(b,-a; a,b)` for a transverse simple inflection line `a x + b y = 0`.
    pub fn barycentre_q(&self, a: &FieldElem, b: &FieldElem) -> Result<FieldElem, HomError> {
        let t = HomFoliation::line(a, b);
        if t.is_zero() {
            return Err(HomError::Invalid("zero line".into()));
        }
        let dh = self.d_transverse();
        let (k, _) = dh.remove_factor(&t);
        if k != 1 || self.cone_tangent().div_exact(&t).is_some() {
            return Err(HomError::NotSimpleInflection);
        }
        let na = -a;
        let ab = self.at(&self.a, b, &na);
        let bb = self.at(&self.b, b, &na);
        let fiber = &self.a.scale(&bb) - &self.b.scale(&ab);
        if !fiber.gcd(&dh).proportional(&t) {
            return Err(HomError::FiberConditionFailed);
        }
        let p = fiber.div_exact(&t.pow(2)).ok_or(HomError::NonDivisible)?;
        let q = &p.derivative_idx(0).scale(&bb) - &p.derivative_idx(1).scale(&ab);
        Ok(self.at(&q, b, &na))
    }

    /// Whether `d omega` vanishes on a transverse inflection line of order `d - 1`.
    pub fn divergence_test(&self, a: &FieldElem, b: &FieldElem) -> Result<bool, HomError> {
        let t = HomFoliation::line(a, b);
        if t.is_zero() {
            return Err(HomError::Invalid("zero line".into()));
        }
        let (k, _) = self.d_transverse().remove_factor(&t);
        if k != self.d - 1 || self.cone_tangent().div_exact(&t).is_some() {
            return Err(HomError::NotMaximalInflection);
        }
        let div = self.divergence();
        Ok(div.is_zero() || div.div_exact(&t).is_some())
    }

    /// Degree-3 flatness criterion, evaluated without splitting the inflection
    /// directions: every transverse simple direction `[x:y]` must satisfy
    /// `C_H(B(x,y), -A(x,y)) = 0`, and every transverse double line must
    /// divide `B_x - A_y`.
    pub fn flat_homog3(&self) -> Result<bool, HomError> {
        if self.d != 3 {
            return Err(HomError::WrongDegree(self.d));
        }
        let r = xy();
        let ch = self.cone_tangent();
        let twisted = ch.compose(&r, &[self.b.clone(), -&self.a]);
        let div = self.divergence();
        for (k, _, tr) in self.classes()? {
            if tr.is_constant() {
                continue;
            }
            let ok = match k {
                1 => twisted.is_zero() || twisted.div_exact(&tr).is_some(),
                2 => div.is_zero() || div.div_exact(&tr).is_some(),
                _ => unreachable!("inflection order is at most d - 1"),
            };
            if !ok {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

impl fmt::Display for HomFoliation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_affine())
    }
}

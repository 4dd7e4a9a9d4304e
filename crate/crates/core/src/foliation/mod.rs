//! Foliations of the projective plane given by polynomial 1-forms.
//!
//! A foliation of degree `d` is a saturated triple `(p, q, r)` of forms of
//! degree `d + 1` in `x, y, z` with `x p + y q + z r = 0`. Extra ring
//! variables after `z` are treated as parameters.

mod inflection;
mod local;
mod report;
mod sing;

use std::fmt;

use num_traits::{One, Zero};

use crate::error::{FoliationError, ParseError};
use crate::exactfield::FieldElem;
use crate::multipoly::{find_field_roots, MPoly, VarSet};

pub use inflection::{InflectionSplit, LineFactors};
pub use local::{LocalField, SingularityReport};
pub use report::AnalysisReport;
pub use sing::SingularSet;

const XYZ: [usize; 3] = [0, 1, 2];

/// `omega = P dx + Q dy` in the chart `z = 1`; ring `(x, y, params...)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AffineOneForm {
    p: MPoly,
    q: MPoly,
}

impl AffineOneForm {
    pub fn new(p: MPoly, q: MPoly) -> Result<Self, FoliationError> {
        if p.ring() != q.ring() {
            return Err(crate::error::PolyError::RingMismatch.into());
        }
        if p.is_zero() && q.is_zero() {
            return Err(FoliationError::DegenerateForm);
        }
        let ring = affine_ring(p.ring())?;
        Ok(AffineOneForm { p: p.to_ring(&ring)?, q: q.to_ring(&ring)? })
    }

    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let (p, q) = crate::parse::parse_oneform_parts(text)?;
        AffineOneForm::new(p, q).map_err(|e| ParseError::Syntax { pos: 0, msg: e.to_string() })
    }

    pub fn p(&self) -> &MPoly {
        &self.p
    }

    pub fn q(&self) -> &MPoly {
        &self.q
    }

    pub fn ring(&self) -> &VarSet {
        self.p.ring()
    }

    pub fn params(&self) -> &[String] {
        &self.ring().names()[2..]
    }

    pub fn scale(&self, c: &FieldElem) -> Self {
        AffineOneForm { p: self.p.scale(c), q: self.q.scale(c) }
    }

    /// `self = c * other` for some nonzero constant `c`.
    pub fn proportional(&self, other: &AffineOneForm) -> bool {
        if self.ring() != other.ring() {
            return false;
        }
        let (a, b) = if !other.p.is_zero() { (&self.p, &other.p) } else { (&self.q, &other.q) };
        if a.is_zero() {
            return false;
        }
        let c = a.leading_coeff().div(&b.leading_coeff()).unwrap();
        self.p == other.p.scale(&c) && self.q == other.q.scale(&c)
    }

    /// Pullback by the linear map `(x, y) -> M (x, y)`.
    pub fn pullback_linear(&self, m: [[FieldElem; 2]; 2]) -> Self {
        let ring = self.ring().clone();
        let x = MPoly::var_idx(&ring, 0);
        let y = MPoly::var_idx(&ring, 1);
        let c = |e: &FieldElem| MPoly::constant(&ring, e.clone());
        let u = &(&c(&m[0][0]) * &x) + &(&c(&m[0][1]) * &y);
        let v = &(&c(&m[1][0]) * &x) + &(&c(&m[1][1]) * &y);
        let ps = self.p.substitute(&[("x", u.clone()), ("y", v.clone())]).unwrap();
        let qs = self.q.substitute(&[("x", u), ("y", v)]).unwrap();
        AffineOneForm {
            p: &(&ps * &c(&m[0][0])) + &(&qs * &c(&m[1][0])),
            q: &(&ps * &c(&m[0][1])) + &(&qs * &c(&m[1][1])),
        }
    }

    /// Specialize parameters to field values.
    pub fn specialize(&self, values: &[(&str, FieldElem)]) -> Result<Self, FoliationError> {
        let mut p = self.p.clone();
        let mut q = self.q.clone();
        for (n, v) in values {
            let i = self.ring().index(n).ok_or_else(|| crate::error::PolyError::UnknownVariable(n.to_string()))?;
            p = p.eval_var(i, v);
            q = q.eval_var(i, v);
        }
        let keep: Vec<&str> = self.ring().names().iter().map(|s| s.as_str()).filter(|n| !values.iter().any(|(m, _)| m == n)).collect();
        let ring = VarSet::new(&keep)?;
        AffineOneForm::new(p.to_ring(&ring)?, q.to_ring(&ring)?)
    }

    pub fn to_foliation(&self) -> Result<Foliation, FoliationError> {
        Foliation::from_affine(self)
    }
}

impl fmt::Display for AffineOneForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.p.is_zero(), self.q.is_zero()) {
            (false, false) => write!(f, "({})*dx + ({})*dy", self.p, self.q),
            (false, true) => write!(f, "({})*dx", self.p),
            _ => write!(f, "({})*dy", self.q),
        }
    }
}

fn affine_ring(r: &VarSet) -> Result<VarSet, FoliationError> {
    if r.index("z").is_some() {
        return Err(FoliationError::BadInput("`z` is reserved for the homogenizing coordinate".into()));
    }
    let mut names = vec!["x".to_string(), "y".to_string()];
    names.extend(r.names().iter().filter(|n| *n != "x" && *n != "y").cloned());
    Ok(VarSet::new(&names)?)
}

fn projective_ring(affine: &VarSet) -> VarSet {
    let mut names = vec!["x".to_string(), "y".to_string(), "z".to_string()];
    names.extend(affine.names()[2..].iter().cloned());
    VarSet::new(&names).expect("distinct names")
}

/// Point of the projective plane, normalized so its last nonzero coordinate is 1.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ProjPoint([FieldElem; 3]);

impl ProjPoint {
    pub fn new(c: [FieldElem; 3]) -> Option<Self> {
        let k = (0..3).rev().find(|&k| !c[k].is_zero())?;
        let inv = c[k].inv().ok()?;
        Some(ProjPoint([&c[0] * &inv, &c[1] * &inv, &c[2] * &inv]))
    }

    pub fn affine(x: FieldElem, y: FieldElem) -> Self {
        ProjPoint([x, y, FieldElem::one()])
    }

    pub fn from_ints(x: i64, y: i64, z: i64) -> Self {
        ProjPoint::new([x.into(), y.into(), z.into()]).expect("nonzero point")
    }

    pub fn coords(&self) -> &[FieldElem; 3] {
        &self.0
    }

    /// Index of the normalized coordinate, which selects the affine chart.
    pub fn chart(&self) -> usize {
        (0..3).rev().find(|&k| !self.0[k].is_zero()).unwrap()
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{} : {} : {}]", self.0[0], self.0[1], self.0[2])
    }
}

/// Line `a x + b y + c z = 0`, normalized so its first nonzero coefficient is 1.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Line([FieldElem; 3]);

impl Line {
    pub fn new(c: [FieldElem; 3]) -> Option<Self> {
        let k = (0..3).find(|&k| !c[k].is_zero())?;
        let inv = c[k].inv().ok()?;
        Some(Line([&c[0] * &inv, &c[1] * &inv, &c[2] * &inv]))
    }

    pub fn from_ints(a: i64, b: i64, c: i64) -> Self {
        Line::new([a.into(), b.into(), c.into()]).expect("nonzero line")
    }

    pub fn infinity() -> Self {
        Line::from_ints(0, 0, 1)
    }

    pub fn coeffs(&self) -> &[FieldElem; 3] {
        &self.0
    }

    pub fn contains(&self, s: &ProjPoint) -> bool {
        (0..3).fold(FieldElem::zero(), |acc, k| &acc + &(&self.0[k] * &s.0[k])).is_zero()
    }

    /// Linear form in the first three variables of `ring`.
    pub fn to_poly(&self, ring: &VarSet) -> MPoly {
        let mut acc = MPoly::zero(ring);
        for k in 0..3 {
            acc = &acc + &MPoly::var_idx(ring, k).scale(&self.0[k]);
        }
        acc
    }

    /// Recognize a linear form in `x, y, z`.
    pub fn from_poly(f: &MPoly) -> Option<Self> {
        if f.total_degree() != Some(1) || !f.is_homogeneous() || f.support_vars().iter().any(|&i| i > 2) {
            return None;
        }
        let e = |k: usize| {
            let mut m = vec![0u32; f.ring().len()];
            m[k] = 1;
            f.coeff_of(&m)
        };
        Line::new([e(0), e(1), e(2)])
    }

    /// Two points spanning the line.
    pub fn basis(&self) -> (ProjPoint, ProjPoint) {
        let [a, b, c] = &self.0;
        let z = FieldElem::zero();
        let o = FieldElem::one();
        // first nonzero coefficient is 1
        if !a.is_zero() {
            (ProjPoint::new([-b, o.clone(), z.clone()]).unwrap(), ProjPoint::new([-c, z, o]).unwrap())
        } else if !b.is_zero() {
            (ProjPoint::new([o, z.clone(), z.clone()]).unwrap(), ProjPoint::new([z, -c, FieldElem::one()]).unwrap())
        } else {
            (ProjPoint::new([o.clone(), z.clone(), z.clone()]).unwrap(), ProjPoint::new([z.clone(), o, z]).unwrap())
        }
    }
}

impl fmt::Display for Line {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_poly(&VarSet::of(&["x", "y", "z"])))
    }
}

/// 3x3 matrix acting on `(x, y, z)` columns.
pub type Mat3 = [[FieldElem; 3]; 3];

pub fn mat3_from_ints(m: [[i64; 3]; 3]) -> Mat3 {
    m.map(|row| row.map(FieldElem::from_int))
}

pub fn mat3_mul(a: &Mat3, b: &Mat3) -> Mat3 {
    std::array::from_fn(|i| std::array::from_fn(|j| (0..3).fold(FieldElem::zero(), |acc, k| &acc + &(&a[i][k] * &b[k][j]))))
}

pub fn mat3_det(m: &Mat3) -> FieldElem {
    let t = |a: usize, b: usize, c: usize| &(&m[0][a] * &m[1][b]) * &m[2][c];
    &(&(&t(0, 1, 2) - &t(0, 2, 1)) + &(&t(1, 2, 0) - &t(1, 0, 2))) + &(&t(2, 0, 1) - &t(2, 1, 0))
}

/// Saturated projective 1-form.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Foliation {
    p: MPoly,
    q: MPoly,
    r: MPoly,
    degree: u32,
}

impl Foliation {
    /// Homogenize `P dx + Q dy`, derive `r` from the Euler relation and saturate.
    pub fn from_affine(w: &AffineOneForm) -> Result<Self, FoliationError> {
        let ring = projective_ring(w.ring());
        let p = w.p.to_ring(&ring)?;
        let q = w.q.to_ring(&ring)?;
        let xy = [0usize, 1];
        let n = p.degree_in_vars(&xy).unwrap_or(0).max(q.degree_in_vars(&xy).unwrap_or(0));
        let ph = p.homogenize_in(&xy, 2, n);
        let qh = q.homogenize_in(&xy, 2, n);
        let x = MPoly::var_idx(&ring, 0);
        let y = MPoly::var_idx(&ring, 1);
        let z = MPoly::var_idx(&ring, 2);
        let r = -(&(&x * &ph) + &(&y * &qh));
        Foliation::saturate(&z * &ph, &z * &qh, r)
    }

    /// From `(p, q, r)` in a ring starting with `x, y, z`; checks Euler and saturates.
    pub fn from_forms(p: MPoly, q: MPoly, r: MPoly) -> Result<Self, FoliationError> {
        let ring = p.ring().clone();
        if ring.len() < 3 || ring.name(0) != "x" || ring.name(1) != "y" || ring.name(2) != "z" {
            return Err(FoliationError::BadInput("ring must start with x, y, z".into()));
        }
        let euler = &(&(&MPoly::var_idx(&ring, 0) * &p) + &(&MPoly::var_idx(&ring, 1) * &q)) + &(&MPoly::var_idx(&ring, 2) * &r);
        if !euler.is_zero() {
            return Err(FoliationError::BadInput("Euler relation fails".into()));
        }
        Foliation::saturate(p, q, r)
    }

    /// Foliation defined by the homogeneous vector field `A dx + B dy + C dz`
    /// (as a derivation), i.e. `omega = A (y dz - z dy) + B (z dx - x dz) + C (x dy - y dx)`.
    pub fn from_vector_field(a: &MPoly, b: &MPoly, c: &MPoly) -> Result<Self, FoliationError> {
        let ring = a.ring().clone();
        let x = MPoly::var_idx(&ring, 0);
        let y = MPoly::var_idx(&ring, 1);
        let z = MPoly::var_idx(&ring, 2);
        let p = &(b * &z) - &(c * &y);
        let q = &(c * &x) - &(a * &z);
        let r = &(a * &y) - &(b * &x);
        Foliation::from_forms(p, q, r)
    }

    fn saturate(p: MPoly, q: MPoly, r: MPoly) -> Result<Self, FoliationError> {
        let g = p.gcd(&q).gcd(&r);
        if g.is_zero() {
            return Err(FoliationError::DegenerateForm);
        }
        let (p, q, r) = if g.is_constant() {
            (p, q, r)
        } else {
            (p.div_exact(&g).unwrap(), q.div_exact(&g).unwrap(), r.div_exact(&g).unwrap())
        };
        let n = [&p, &q, &r].iter().filter_map(|f| f.degree_in_vars(&XYZ)).max().unwrap();
        for f in [&p, &q, &r] {
            if !f.is_homogeneous_in(&XYZ) || f.degree_in_vars(&XYZ).map(|d| d != n).unwrap_or(false) {
                return Err(FoliationError::BadInput("components are not forms of a common degree".into()));
            }
        }
        if n == 0 {
            return Err(FoliationError::DegenerateForm);
        }
        Ok(Foliation { p, q, r, degree: n - 1 })
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn components(&self) -> [&MPoly; 3] {
        [&self.p, &self.q, &self.r]
    }

    pub fn ring(&self) -> &VarSet {
        self.p.ring()
    }

    pub fn has_params(&self) -> bool {
        self.ring().len() > 3
    }

    pub(crate) fn require_no_params(&self) -> Result<(), FoliationError> {
        if self.has_params() {
            Err(FoliationError::BadInput("operation needs numeric coefficients; specialize the parameters first".into()))
        } else {
            Ok(())
        }
    }

    /// Affine form in the chart `z = 1`.
    pub fn affine(&self) -> AffineOneForm {
        let one = FieldElem::one();
        let mut names: Vec<String> = vec!["x".into(), "y".into()];
        names.extend(self.ring().names()[3..].iter().cloned());
        let ring = VarSet::new(&names).unwrap();
        let p = self.p.eval_var(2, &one).to_ring(&ring).unwrap();
        let q = self.q.eval_var(2, &one).to_ring(&ring).unwrap();
        AffineOneForm { p, q }
    }

    /// Pullback under `v -> M v`, saturated.
    pub fn pullback(&self, m: &Mat3) -> Result<Foliation, FoliationError> {
        if mat3_det(m).is_zero() {
            return Err(FoliationError::SingularMatrix);
        }
        let ring = self.ring().clone();
        let vars: Vec<MPoly> = (0..3).map(|k| MPoly::var_idx(&ring, k)).collect();
        let image = |i: usize| (0..3).fold(MPoly::zero(&ring), |acc, k| &acc + &vars[k].scale(&m[i][k]));
        let bind = [("x", image(0)), ("y", image(1)), ("z", image(2))];
        let comps: Vec<MPoly> = self.components().iter().map(|f| f.substitute(&bind).unwrap()).collect();
        let newc = |j: usize| (0..3).fold(MPoly::zero(&ring), |acc, i| &acc + &comps[i].scale(&m[i][j]));
        Foliation::saturate(newc(0), newc(1), newc(2))
    }

    /// Same foliation: the two saturated triples are proportional.
    pub fn same_as(&self, other: &Foliation) -> bool {
        if self.ring() != other.ring() || self.degree != other.degree {
            return false;
        }
        let a = self.components();
        let b = other.components();
        (0..3).all(|i| (0..3).all(|j| i >= j || (a[i] * b[j] - a[j] * b[i]).is_zero()))
    }

    pub fn is_isotropy(&self, m: &Mat3) -> Result<bool, FoliationError> {
        Ok(self.same_as(&self.pullback(m)?))
    }

    /// The binary form `g(s, t)` of degree `d` whose roots are the tangency
    /// points along `L`, parametrized by `s P0 + t P1`; zero iff `L` is invariant.
    pub fn tangency_form(&self, l: &Line) -> (MPoly, ProjPoint, ProjPoint) {
        let (p0, p1) = l.basis();
        let mut names = vec!["s".to_string(), "t".to_string()];
        names.extend(self.ring().names()[3..].iter().cloned());
        let st = VarSet::new(&names).expect("parameters do not clash with s, t");
        let s = MPoly::var_idx(&st, 0);
        let t = MPoly::var_idx(&st, 1);
        let coord = |k: usize| &s.scale(&p0.0[k]) + &t.scale(&p1.0[k]);
        let mut target = vec![coord(0), coord(1), coord(2)];
        for k in 3..self.ring().len() {
            target.push(MPoly::var_idx(&st, k - 1));
        }
        let w: Vec<MPoly> = self.components().iter().map(|f| f.compose(&st, &target)).collect();
        let h0 = (0..3).fold(MPoly::zero(&st), |acc, k| &acc + &w[k].scale(&p0.0[k]));
        let g = if h0.is_zero() { h0 } else { h0.div_exact(&t).expect("Euler relation") };
        (g, p0, p1)
    }

    pub fn is_invariant_line(&self, l: &Line) -> bool {
        self.tangency_form(l).0.is_zero()
    }

    /// Tangency orders along a non-invariant line; the total equals the degree.
    pub fn tangency(&self, l: &Line) -> Result<(u32, Vec<(ProjPoint, u32)>), FoliationError> {
        self.require_no_params()?;
        let (g, p0, p1) = self.tangency_form(l);
        if g.is_zero() {
            return Err(FoliationError::InvariantLine);
        }
        let total = g.total_degree().unwrap();
        let mut pts = Vec::new();
        let one = FieldElem::one();
        let deh = g.eval_var(1, &one);
        if let Some(dd) = deh.total_degree() {
            if total > dd {
                pts.push((p0.clone(), total - dd));
            }
        }
        if !deh.is_constant() {
            for (s0, m) in find_field_roots(&deh)?.roots {
                let c: [FieldElem; 3] = std::array::from_fn(|k| &(&s0 * &p0.0[k]) + &p1.0[k]);
                pts.push((ProjPoint::new(c).unwrap(), m));
            }
        }
        Ok((total, pts))
    }
}

impl fmt::Display for Foliation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})*dx + ({})*dy + ({})*dz", self.p, self.q, self.r)
    }
}

//! Local invariants at a singular point: nu, tau, Milnor number, Baum-Bott and
//! Camacho-Sad indices, computed from the vector field of an affine chart
//! with the point translated to the origin.

use num_traits::Zero;

use super::{Foliation, Line, ProjPoint};
use crate::error::FoliationError;
use crate::exactfield::FieldElem;
use crate::multipoly::{MPoly, VarSet};

const SHEARS: [i64; 8] = [0, 1, 2, 3, 5, 7, 11, 13];

/// Vector field `a d/du + b d/dv` near the origin of a chart.
#[derive(Clone, Debug, PartialEq)]
pub struct LocalField {
    pub a: MPoly,
    pub b: MPoly,
    /// Indices of the projective coordinates playing the roles of `u` and `v`.
    pub axes: (usize, usize),
}

#[derive(Clone, Debug, PartialEq)]
pub struct SingularityReport {
    pub point: ProjPoint,
    pub nu: u32,
    pub tau: u32,
    pub milnor: Option<u32>,
    pub nondegenerate: bool,
    pub radial_order: u32,
    pub baum_bott: Option<FieldElem>,
}

impl LocalField {
    fn ring(&self) -> &VarSet {
        self.a.ring()
    }

    fn linear(&self) -> [[FieldElem; 2]; 2] {
        let c = |f: &MPoly, e: [u32; 2]| f.coeff_of(&e);
        [[c(&self.a, [1, 0]), c(&self.a, [0, 1])], [c(&self.b, [1, 0]), c(&self.b, [0, 1])]]
    }

    pub fn nu(&self) -> u32 {
        [&self.a, &self.b].iter().filter_map(|f| f.order()).min().expect("nonzero field")
    }

    /// First `k >= nu` where the `k`-jet is not parallel to the radial field.
    pub fn tau(&self) -> Result<u32, FoliationError> {
        let u = MPoly::var_idx(self.ring(), 0);
        let v = MPoly::var_idx(self.ring(), 1);
        let top = self.a.total_degree().unwrap_or(0).max(self.b.total_degree().unwrap_or(0));
        for k in self.nu()..=top {
            let w = &(&v * &self.a.homogeneous_part(k)) - &(&u * &self.b.homogeneous_part(k));
            if !w.is_zero() {
                return Ok(k);
            }
        }
        Err(FoliationError::Degenerate)
    }

    pub fn trace_det(&self) -> (FieldElem, FieldElem) {
        let j = self.linear();
        (&j[0][0] + &j[1][1], &(&j[0][0] * &j[1][1]) - &(&j[0][1] * &j[1][0]))
    }

    pub fn nondegenerate(&self) -> bool {
        !self.trace_det().1.is_zero()
    }

    pub fn radial_order(&self) -> Result<u32, FoliationError> {
        let t = self.tau()?;
        Ok(if self.nu() == 1 && t >= 2 { t - 1 } else { 0 })
    }

    pub fn baum_bott(&self) -> Result<FieldElem, FoliationError> {
        let (tr, det) = self.trace_det();
        let inv = det.inv().map_err(|_| FoliationError::Degenerate)?;
        Ok(&(&tr * &tr) * &inv)
    }

    /// Intersection multiplicity of `a = 0` and `b = 0` at the origin.
    pub fn milnor(&self) -> Result<u32, FoliationError> {
        let ring = self.ring().clone();
        let u = MPoly::var_idx(&ring, 0);
        let v = MPoly::var_idx(&ring, 1);
        let zero = FieldElem::zero();
        for &c in SHEARS.iter() {
            let image = &u + &v.scale(&FieldElem::from_int(c));
            let a = self.a.compose(&ring, &[image.clone(), v.clone()]);
            let b = self.b.compose(&ring, &[image, v.clone()]);
            let res = a.resultant_idx(&b, 1);
            let res = match res {
                Ok(r) => r,
                Err(_) => return Err(FoliationError::NonIsolated),
            };
            if res.is_zero() {
                return Err(FoliationError::NonIsolated);
            }
            let lc_ok = [&a, &b].iter().any(|f| !f.lc_in(1).eval_var(0, &zero).is_zero());
            if !lc_ok {
                continue;
            }
            let g = a.eval_var(0, &zero).gcd(&b.eval_var(0, &zero));
            let pure = g.is_zero() || (g.num_terms() == 1 && g.leading().map(|(m, _)| m.0[0] == 0).unwrap_or(false));
            if g.is_zero() || !pure {
                continue;
            }
            let ord = res.coeffs_in(0).iter().position(|c| !c.is_zero()).expect("nonzero resultant");
            return Ok(ord as u32);
        }
        Err(FoliationError::GenericityFailure(SHEARS.len()))
    }

    /// Eigenvalue of the linear part along the direction `w`, if `w` is an eigenvector.
    fn eigenvalue_along(&self, w: &[FieldElem; 2]) -> Option<FieldElem> {
        let j = self.linear();
        let jw = [&(&j[0][0] * &w[0]) + &(&j[0][1] * &w[1]), &(&j[1][0] * &w[0]) + &(&j[1][1] * &w[1])];
        if !(&(&jw[0] * &w[1]) - &(&jw[1] * &w[0])).is_zero() {
            return None;
        }
        let k = if w[0].is_zero() { 1 } else { 0 };
        jw[k].div(&w[k]).ok()
    }
}

impl Foliation {
    /// Local vector field at `s` in the chart where its normalized coordinate is 1.
    pub fn local_field(&self, s: &ProjPoint) -> Result<LocalField, FoliationError> {
        self.require_no_params()?;
        let k = s.chart();
        let axes = match k {
            2 => (0, 1),
            1 => (0, 2),
            _ => (1, 2),
        };
        let uv = VarSet::of(&["u", "v"]);
        let u = MPoly::var_idx(&uv, 0);
        let v = MPoly::var_idx(&uv, 1);
        let c = s.coords();
        let mut images = vec![MPoly::one(&uv); 3];
        images[axes.0] = &u + &MPoly::constant(&uv, c[axes.0].clone());
        images[axes.1] = &v + &MPoly::constant(&uv, c[axes.1].clone());
        let comps = self.components();
        let f0 = comps[axes.0].compose(&uv, &images);
        let f1 = comps[axes.1].compose(&uv, &images);
        let field = LocalField { a: -f1, b: f0, axes };
        if !field.a.coeff_of(&[0, 0]).is_zero() || !field.b.coeff_of(&[0, 0]).is_zero() {
            return Err(FoliationError::NotSingular);
        }
        Ok(field)
    }

    pub fn nu(&self, s: &ProjPoint) -> Result<u32, FoliationError> {
        Ok(self.local_field(s)?.nu())
    }

    pub fn tau(&self, s: &ProjPoint) -> Result<u32, FoliationError> {
        self.local_field(s)?.tau()
    }

    pub fn milnor(&self, s: &ProjPoint) -> Result<u32, FoliationError> {
        self.local_field(s)?.milnor()
    }

    pub fn baum_bott(&self, s: &ProjPoint) -> Result<FieldElem, FoliationError> {
        self.local_field(s)?.baum_bott()
    }

    pub fn radial_order(&self, s: &ProjPoint) -> Result<u32, FoliationError> {
        self.local_field(s)?.radial_order()
    }

    /// Camacho-Sad index of the invariant line `l` at `s`: the transverse
    /// eigenvalue divided by the eigenvalue along `l`.
    pub fn camacho_sad(&self, l: &Line, s: &ProjPoint) -> Result<FieldElem, FoliationError> {
        if !self.is_invariant_line(l) {
            return Err(FoliationError::NotInvariant);
        }
        if !l.contains(s) {
            return Err(FoliationError::BadInput(format!("{} is not on {}", s, l)));
        }
        let field = self.local_field(s)?;
        let (tr, det) = field.trace_det();
        if det.is_zero() {
            return Err(FoliationError::Degenerate);
        }
        let lc = l.coeffs();
        let (i, j) = field.axes;
        let dir = [lc[j].clone(), -&lc[i]];
        let along = field.eigenvalue_along(&dir).ok_or(FoliationError::NotInvariant)?;
        (&tr - &along).div(&along).map_err(|_| FoliationError::Degenerate)
    }

    pub fn singularity_report(&self, s: &ProjPoint) -> Result<SingularityReport, FoliationError> {
        let field = self.local_field(s)?;
        let milnor = match field.milnor() {
            Ok(m) => Some(m),
            Err(FoliationError::GenericityFailure(_)) => None,
            Err(e) => return Err(e),
        };
        Ok(SingularityReport {
            point: s.clone(),
            nu: field.nu(),
            tau: field.tau()?,
            milnor,
            nondegenerate: field.nondegenerate(),
            radial_order: field.radial_order()?,
            baum_bott: field.baum_bott().ok(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::super::AffineOneForm;
    use super::*;
    use num_traits::One;

    fn fol(s: &str) -> Foliation {
        AffineOneForm::parse(s).unwrap().to_foliation().unwrap()
    }

    fn pt(x: i64, y: i64, z: i64) -> ProjPoint {
        ProjPoint::from_ints(x, y, z)
    }

    #[test]
    fn fermat_local_data() {
        let f = fol("(x^3-x)*dy - (y^3-y)*dx");
        let o = pt(0, 0, 1);
        assert_eq!(f.nu(&o).unwrap(), 1);
        assert_eq!(f.tau(&o).unwrap(), 3);
        assert_eq!(f.radial_order(&o).unwrap(), 2);
        assert_eq!(f.baum_bott(&o).unwrap(), FieldElem::from_int(4));
        assert_eq!(f.baum_bott(&pt(1, 0, 1)).unwrap(), FieldElem::from_frac(-1, 2));
        assert_eq!(f.milnor(&pt(1, 1, 1)).unwrap(), 1);
        assert_eq!(f.nu(&pt(2, 3, 1)), Err(FoliationError::NotSingular));
        let l = Line::from_ints(0, 1, 0);
        assert_eq!(f.camacho_sad(&l, &o).unwrap(), FieldElem::one());
        let total = [pt(0, 0, 1), pt(1, 0, 1), pt(-1, 0, 1), pt(1, 0, 0)]
            .iter()
            .fold(FieldElem::zero(), |acc, s| &acc + &f.camacho_sad(&l, s).unwrap());
        assert_eq!(total, FieldElem::one());
    }

    #[test]
    fn milnor_staircase_example() {
        // (x y^3, x^3 - y^4): the quotient has the 13 monomials below the staircase
        let uv = VarSet::of(&["u", "v"]);
        let a = crate::parse::parse_poly("u*v^3", &["u", "v"]).unwrap().to_ring(&uv).unwrap();
        let b = crate::parse::parse_poly("u^3 - v^4", &["u", "v"]).unwrap().to_ring(&uv).unwrap();
        assert_eq!(LocalField { a, b, axes: (0, 1) }.milnor().unwrap(), 13);
    }

    #[test]
    fn w1_infinity_and_origin() {
        let f = fol("y^3*dx - x^3*dy");
        assert_eq!(f.nu(&pt(0, 0, 1)).unwrap(), 3);
        assert_eq!(f.tau(&pt(0, 1, 0)).unwrap(), 3);
        let cs = f.camacho_sad(&Line::infinity(), &pt(1, 1, 0)).unwrap();
        assert_eq!(cs, FieldElem::from_frac(-1, 2));
    }
}

//! Singular points with coordinates in the coefficient field.

use num_traits::{One, Zero};

use super::{Foliation, ProjPoint};
use crate::error::FoliationError;
use crate::exactfield::FieldElem;
use crate::multipoly::{find_field_roots, MPoly};

/// Singular points found in the field plus the factors that did not split.
#[derive(Clone, Debug, PartialEq)]
pub struct SingularSet {
    pub points: Vec<ProjPoint>,
    pub residual: Vec<MPoly>,
}

impl SingularSet {
    pub fn is_complete(&self) -> bool {
        self.residual.is_empty()
    }
}

impl Foliation {
    pub fn singular_points(&self) -> Result<SingularSet, FoliationError> {
        self.require_no_params()?;
        let mut points = Vec::new();
        let mut residual = Vec::new();
        let zero = FieldElem::zero();
        let one = FieldElem::one();
        let [p, q, r] = self.components();

        // affine chart z = 1
        let pa = p.eval_var(2, &one);
        let qa = q.eval_var(2, &one);
        if !pa.is_zero() && !qa.is_zero() && (pa.involves(1) || qa.involves(1)) {
            let res = pa.resultant_idx(&qa, 1)?;
            if !res.is_zero() && !res.is_constant() {
                let xr = find_field_roots(&res)?;
                if !xr.residual.is_constant() {
                    residual.push(xr.residual);
                }
                for (x0, _) in xr.roots {
                    let g = pa.eval_var(0, &x0).gcd(&qa.eval_var(0, &x0));
                    if g.is_zero() || g.is_constant() {
                        continue;
                    }
                    let yr = find_field_roots(&g)?;
                    if !yr.residual.is_constant() {
                        residual.push(yr.residual);
                    }
                    for (y0, _) in yr.roots {
                        points.push(ProjPoint::affine(x0.clone(), y0));
                    }
                }
            }
        } else {
            // one component vanishes, or both are free of y
            let g = pa.gcd(&qa);
            if !g.is_constant() {
                let xr = find_field_roots(&g)?;
                if !xr.residual.is_constant() {
                    residual.push(xr.residual);
                }
                for (x0, _) in xr.roots {
                    let rest = [&pa, &qa].iter().map(|f| f.eval_var(0, &x0)).fold(MPoly::zero(pa.ring()), |a, b| a.gcd(&b));
                    if rest.is_zero() {
                        return Err(FoliationError::NonIsolated);
                    }
                    let yr = find_field_roots(&rest)?;
                    for (y0, _) in yr.roots {
                        points.push(ProjPoint::affine(x0.clone(), y0));
                    }
                }
            }
        }

        // line at infinity
        let g = [p, q, r].iter().map(|f| f.eval_var(2, &zero)).fold(MPoly::zero(p.ring()), |a, b| a.gcd(&b));
        if g.is_zero() {
            return Err(FoliationError::NonIsolated);
        }
        if !g.is_constant() {
            let total = g.total_degree().unwrap();
            let deh = g.eval_var(1, &one);
            let dd = deh.total_degree().unwrap_or(0);
            if dd < total {
                points.push(ProjPoint::from_ints(1, 0, 0));
            }
            if dd > 0 {
                let xr = find_field_roots(&deh)?;
                if !xr.residual.is_constant() {
                    residual.push(xr.residual);
                }
                for (x0, _) in xr.roots {
                    points.push(ProjPoint::new([x0, one.clone(), zero.clone()]).unwrap());
                }
            }
        }
        Ok(SingularSet { points, residual })
    }
}

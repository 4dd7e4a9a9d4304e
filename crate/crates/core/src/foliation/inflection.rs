//! Inflection divisor and its split into invariant lines and a transverse part.

use num_traits::{One, Zero};

use super::{Foliation, Line};
use crate::error::FoliationError;
use crate::exactfield::FieldElem;
use crate::multipoly::{find_field_roots, MPoly, VarSet};

#[derive(Clone, Debug, PartialEq)]
pub struct InflectionSplit {
    /// Invariant lines with their multiplicity in the divisor.
    pub inv: Vec<(Line, u32)>,
    /// Squarefree transverse factors with multiplicity.
    pub tr: Vec<(MPoly, u32)>,
}

impl InflectionSplit {
    pub fn convex(&self) -> bool {
        self.tr.is_empty()
    }

    pub fn tr_product(&self, ring: &VarSet) -> MPoly {
        self.tr.iter().fold(MPoly::one(ring), |acc, (f, k)| &acc * &f.pow(*k))
    }

    pub fn tr_degree(&self) -> u32 {
        self.tr.iter().map(|(f, k)| f.total_degree().unwrap_or(0) * k).sum()
    }
}

/// Linear factors of a form in `x, y, z` and the cofactor left over.
#[derive(Clone, Debug, PartialEq)]
pub struct LineFactors {
    pub lines: Vec<(Line, u32)>,
    pub rest: MPoly,
}

/// Split off every linear factor defined over the field.
pub fn line_factors(f: &MPoly) -> Result<LineFactors, FoliationError> {
    let ring = f.ring().clone();
    let zero = FieldElem::zero();
    let one = FieldElem::one();
    let mut lines = Vec::new();
    let z = MPoly::var_idx(&ring, 2);
    let (e, mut rest) = f.remove_factor(&z);
    if e > 0 {
        lines.push((Line::infinity(), e));
    }
    if rest.is_constant() {
        return Ok(LineFactors { lines, rest });
    }
    let at_inf = rest.eval_var(2, &zero);
    let total = at_inf.total_degree().unwrap_or(0);
    let deh = at_inf.eval_var(1, &one);
    let mut dirs: Vec<Option<FieldElem>> = Vec::new();
    if deh.total_degree().unwrap_or(0) < total {
        dirs.push(None);
    }
    if !deh.is_constant() {
        for (x0, _) in find_field_roots(&deh)?.roots {
            dirs.push(Some(x0));
        }
    }
    let gring = VarSet::of(&["y", "z", "g"]);
    let gy = MPoly::var_idx(&gring, 0);
    let gz = MPoly::var_idx(&gring, 1);
    let gg = MPoly::var_idx(&gring, 2);
    for dir in dirs {
        // x = x0 y - g z, or y = -g z for the direction [1:0:0]
        // for [1:0:0] the points are [x : -g z : z], with x in the slot of y
        let images = match &dir {
            Some(x0) => vec![&gy.scale(x0) - &(&gg * &gz), gy.clone(), gz.clone()],
            None => vec![gy.clone(), -(&gg * &gz), gz.clone()],
        };
        let mut full = images;
        for _ in 3..ring.len() {
            full.push(MPoly::zero(&gring));
        }
        let h = rest.compose(&gring, &full);
        let mut gc = MPoly::zero(&gring);
        let mut groups: std::collections::BTreeMap<(u32, u32), MPoly> = Default::default();
        for (m, c) in h.terms() {
            let mut e = m.clone();
            let key = (e.0[0], e.0[1]);
            e.0[0] = 0;
            e.0[1] = 0;
            let entry = groups.entry(key).or_insert_with(|| MPoly::zero(&gring));
            *entry = &*entry + &MPoly::monomial(&gring, e, c.clone());
        }
        for c in groups.values() {
            gc = gc.gcd(c);
        }
        if gc.is_zero() || gc.is_constant() {
            continue;
        }
        for (g0, _) in find_field_roots(&gc)?.roots {
            let coeffs = match &dir {
                Some(x0) => [one.clone(), -x0, g0],
                None => [zero.clone(), one.clone(), g0],
            };
            let l = Line::new(coeffs).unwrap();
            let (k, r) = rest.remove_factor(&l.to_poly(&ring));
            if k > 0 {
                lines.push((l, k));
                rest = r;
            }
        }
    }
    Ok(LineFactors { lines, rest })
}

impl Foliation {
    /// Affine vector field `(a, b)` in the chart `z = 1`, in the ring `(x, y, z)`.
    fn affine_field(&self) -> (MPoly, MPoly) {
        let one = FieldElem::one();
        let [p, q, _] = self.components();
        (-q.eval_var(2, &one), p.eval_var(2, &one))
    }

    fn apply_field(a: &MPoly, b: &MPoly, f: &MPoly) -> MPoly {
        &(a * &f.derivative_idx(0)) + &(b * &f.derivative_idx(1))
    }

    /// Homogeneous form of degree `3d` cutting out the inflection divisor.
    pub fn inflection_extactic(&self) -> Result<MPoly, FoliationError> {
        if self.degree() == 0 {
            return Err(FoliationError::BadInput("degree-0 foliations have no inflection divisor".into()));
        }
        let (a, b) = self.affine_field();
        let e = &(&a * &Foliation::apply_field(&a, &b, &b)) - &(&b * &Foliation::apply_field(&a, &b, &a));
        let target = 3 * self.degree();
        let xy = [0usize, 1];
        match e.degree_in_vars(&xy) {
            Some(d) if d <= target => Ok(e.homogenize_in(&xy, 2, target)),
            Some(d) => Err(FoliationError::BadInput(format!("extactic of degree {} exceeds {}", d, target))),
            None => Err(FoliationError::BadInput("every leaf is a line".into())),
        }
    }

    /// Invariant part of the inflection divisor as one form, and the
    /// transverse part as squarefree factors with multiplicity. No root is
    /// taken: the invariant part of a squarefree class `S` is `gcd(S, X(S))`.
    pub(crate) fn inflection_parts(&self) -> Result<(MPoly, Vec<(MPoly, u32)>), FoliationError> {
        self.require_no_params()?;
        let ext = self.inflection_extactic()?;
        let ring = ext.ring().clone();
        let one = FieldElem::one();
        let z = MPoly::var_idx(&ring, 2);
        let (ez, rest) = ext.remove_factor(&z);
        let mut inv_part = MPoly::one(&ring);
        let mut tr = Vec::new();
        if ez > 0 {
            if self.is_invariant_line(&Line::infinity()) {
                inv_part = z.pow(ez);
            } else {
                tr.push((z.clone(), ez));
            }
        }
        let (a, b) = self.affine_field();
        let xy = [0usize, 1];
        for (k, s) in rest.squarefree_decomposition()? {
            let sa = s.eval_var(2, &one);
            let xs = Foliation::apply_field(&a, &b, &sa);
            let g = sa.gcd(&xs);
            let gh = g.homogenize_in(&xy, 2, g.degree_in_vars(&xy).unwrap_or(0));
            let t = s.div_exact(&gh).ok_or_else(|| FoliationError::IncompleteFactorization(s.to_string()))?;
            if !gh.is_constant() {
                inv_part = &inv_part * &gh.pow(k);
            }
            if !t.is_constant() {
                tr.push((t.monic(), k));
            }
        }
        tr.sort_by_key(|(f, k)| (*k, f.to_string()));
        Ok((inv_part, tr))
    }

    /// Convexity: the inflection divisor consists of invariant lines. Unlike
    /// [`Foliation::inflection_split`] this never needs the lines themselves.
    pub fn is_convex(&self) -> Result<bool, FoliationError> {
        Ok(self.inflection_parts()?.1.is_empty())
    }

    /// Split the inflection divisor into invariant lines and transverse
    /// factors; fails when an invariant factor is not a product of lines over
    /// the field.
    pub fn inflection_split(&self) -> Result<InflectionSplit, FoliationError> {
        let (inv_part, tr) = self.inflection_parts()?;
        let lf = line_factors(&inv_part)?;
        if !lf.rest.is_constant() {
            return Err(FoliationError::IncompleteFactorization(lf.rest.to_string()));
        }
        Ok(InflectionSplit { inv: lf.lines, tr })
    }

    /// All invariant lines; each lies in the inflection divisor.
    pub fn invariant_lines(&self) -> Result<Vec<Line>, FoliationError> {
        let mut v: Vec<Line> = self.inflection_split()?.inv.into_iter().map(|(l, _)| l).collect();
        v.retain(|l| self.is_invariant_line(l));
        Ok(v)
    }
}

#[cfg(test)]
mod tests {
    use super::super::AffineOneForm;
    use super::*;
    use crate::parse::parse_poly;

    fn fol(s: &str) -> Foliation {
        AffineOneForm::parse(s).unwrap().to_foliation().unwrap()
    }

    fn xyz(s: &str) -> MPoly {
        parse_poly(s, &["x", "y", "z"]).unwrap()
    }

    #[test]
    fn fermat_convex() {
        let f = fol("(x^3-x)*dy - (y^3-y)*dx");
        let e = f.inflection_extactic().unwrap();
        let expect = xyz("x*y*z*(x-y)*(x+y)*(x-z)*(x+z)*(y-z)*(y+z)");
        assert!(e.proportional(&expect), "{}", e);
        let s = f.inflection_split().unwrap();
        assert!(s.convex());
        assert_eq!(s.inv.len(), 9);
        assert_eq!(f.invariant_lines().unwrap().len(), 9);
    }

    #[test]
    fn non_convex_example() {
        let r = VarSet::of(&["x", "y", "z"]);
        let f = Foliation::from_vector_field(&xyz("y^3"), &xyz("x^3"), &xyz("z^3")).unwrap();
        let s = f.inflection_split().unwrap();
        let tr = s.tr_product(&r);
        assert!(tr.proportional(&xyz("(x*y-z^2)*(x*y+z^2)")), "{}", tr);
    }

    #[test]
    fn line_factor_extraction() {
        let f = xyz("z^2*(x-2*y+3*z)*(y+5*z)^2*(x^2+y^2+z^2)");
        let lf = line_factors(&f).unwrap();
        assert_eq!(lf.lines.len(), 3);
        assert!(lf.rest.proportional(&xyz("x^2+y^2+z^2")));
        assert!(lf.lines.contains(&(Line::from_ints(0, 1, 5), 2)));
    }
}

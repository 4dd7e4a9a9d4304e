//! Sylvester resultants and fraction-free determinants.

use super::MPoly;
use crate::error::PolyError;

/// Sylvester matrix of `f` and `g` in variable `v`: `deg g` shifted rows of
/// `f` followed by `deg f` shifted rows of `g`, leading coefficients first.
pub fn sylvester_matrix(f: &MPoly, g: &MPoly, v: usize) -> Vec<Vec<MPoly>> {
    let cf = f.coeffs_in(v);
    let cg = g.coeffs_in(v);
    let m = cf.len() - 1;
    let n = cg.len() - 1;
    let size = m + n;
    let zero = MPoly::zero(f.ring());
    let mut rows = Vec::with_capacity(size);
    for k in 0..n {
        let mut row = vec![zero.clone(); size];
        for (j, c) in cf.iter().rev().enumerate() {
            row[k + j] = c.clone();
        }
        rows.push(row);
    }
    for k in 0..m {
        let mut row = vec![zero.clone(); size];
        for (j, c) in cg.iter().rev().enumerate() {
            row[k + j] = c.clone();
        }
        rows.push(row);
    }
    rows
}

/// Determinant by Bareiss fraction-free elimination; every division is exact.
pub fn det_bareiss(mut a: Vec<Vec<MPoly>>) -> MPoly {
    let n = a.len();
    assert!(a.iter().all(|r| r.len() == n), "square matrix");
    if n == 0 {
        panic!("empty matrix");
    }
    let ring = a[0][0].ring().clone();
    let mut sign = false;
    let mut prev = MPoly::one(&ring);
    for k in 0..n {
        if a[k][k].is_zero() {
            // prefer the sparsest nonzero pivot
            let pick = (k + 1..n).filter(|&i| !a[i][k].is_zero()).min_by_key(|&i| a[i][k].num_terms());
            match pick {
                None => return MPoly::zero(&ring),
                Some(i) => {
                    a.swap(k, i);
                    sign = !sign;
                }
            }
        }
        if k + 1 == n {
            break;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = num.div_exact(&prev).expect("Bareiss division is exact");
            }
            a[i][k] = MPoly::zero(&ring);
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if sign {
        -d
    } else {
        d
    }
}

impl MPoly {
    /// Resultant with respect to the named variable.
    pub fn resultant(&self, g: &MPoly, var: &str) -> Result<MPoly, PolyError> {
        let v = self.ring().index(var).ok_or_else(|| PolyError::UnknownVariable(var.into()))?;
        self.resultant_idx(g, v)
    }

    pub fn resultant_idx(&self, g: &MPoly, v: usize) -> Result<MPoly, PolyError> {
        if self.ring() != g.ring() {
            return Err(PolyError::RingMismatch);
        }
        if self.is_zero() || g.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        let m = self.degree_in(v).unwrap();
        let n = g.degree_in(v).unwrap();
        if m == 0 && n == 0 {
            return Err(PolyError::ZeroPolynomial);
        }
        if n == 0 {
            return Ok(g.pow(m));
        }
        if m == 0 {
            return Ok(self.pow(n));
        }
        Ok(det_bareiss(sylvester_matrix(self, g, v)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::FieldElem;
    use crate::multipoly::VarSet;

    #[test]
    fn mignard_resultant() {
        let r = VarSet::of(&["x", "y", "p"]);
        let v = |n: &str| MPoly::var(&r, n).unwrap();
        let c = |k: i64| MPoly::from_int(&r, k);
        let f = v("p").pow(3) - c(4) * v("y") * v("p") - c(4) * v("x");
        let df = f.derivative("p").unwrap();
        let res = f.resultant(&df, "p").unwrap();
        let expect = (c(27) * v("x").pow(2) - c(16) * v("y").pow(3)) * c(16);
        assert!(res.proportional(&expect), "{}", res);
    }

    #[test]
    fn resultant_linear_evaluates() {
        let r = VarSet::of(&["x", "c"]);
        let x = MPoly::var(&r, "x").unwrap();
        let cc = MPoly::var(&r, "c").unwrap();
        let g = x.pow(3) - &x * &MPoly::from_int(&r, 2) + MPoly::from_int(&r, 7);
        let res = (&x - &cc).resultant(&g, "x").unwrap();
        let gc = cc.pow(3) - &cc * &MPoly::from_int(&r, 2) + MPoly::from_int(&r, 7);
        assert_eq!(res, gc);
    }

    #[test]
    fn counterexample_family_discriminant() {
        let r = VarSet::of(&["q", "c", "w"]);
        let v = |n: &str| MPoly::var(&r, n).unwrap();
        let f = &v("q") * &v("w").pow(3) + &v("c") * &v("w") + MPoly::one(&r);
        let res = f.resultant(&f.derivative("w").unwrap(), "w").unwrap();
        // R = a0 * disc with a0 = q
        let expect = v("q").pow(2) * &(v("c").pow(3).scale(&FieldElem::from_int(4)) + v("q").scale(&FieldElem::from_int(27)));
        assert!(res.proportional(&expect), "{}", res);
    }
}

//! Square-free decomposition.

use std::collections::BTreeMap;

use super::univariate::UPoly;
use super::MPoly;
use crate::error::PolyError;

impl MPoly {
    /// `(k, S_k)` with monic, square-free, pairwise coprime `S_k` such that
    /// `self = unit * prod S_k^k`, sorted by `k`.
    pub fn squarefree_decomposition(&self) -> Result<Vec<(u32, MPoly)>, PolyError> {
        if self.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        let vars = self.support_vars();
        let mut classes: BTreeMap<u32, MPoly> = BTreeMap::new();
        match vars.len() {
            0 => {}
            1 => {
                for (k, s) in UPoly::from_mpoly(self, vars[0]).squarefree() {
                    merge(&mut classes, k, s.to_mpoly(self.ring(), vars[0]));
                }
            }
            2 if self.is_homogeneous() => binary_form(self, vars[0], vars[1], &mut classes),
            _ => general(self, &mut classes),
        }
        Ok(classes.into_iter().map(|(k, s)| (k, s.monic())).collect())
    }

    /// Product of the distinct irreducible factors.
    pub fn squarefree_part(&self) -> MPoly {
        let mut acc = MPoly::one(self.ring());
        for (_, s) in self.squarefree_decomposition().unwrap_or_default() {
            acc = &acc * &s;
        }
        acc
    }
}

fn merge(classes: &mut BTreeMap<u32, MPoly>, k: u32, s: MPoly) {
    if s.is_constant() {
        return;
    }
    let e = classes.entry(k).or_insert_with(|| MPoly::one(s.ring()));
    *e = &*e * &s;
}

/// Dehomogenize at `b = 1`, decompose, rehomogenize; the power of `b`
/// lost in the degree drop is its own multiplicity.
fn binary_form(f: &MPoly, a: usize, b: usize, classes: &mut BTreeMap<u32, MPoly>) {
    let deg = f.total_degree().unwrap();
    let one = crate::exactfield::FieldElem::from_int(1);
    let deh = f.eval_var(b, &one);
    let u = UPoly::from_mpoly(&deh, a);
    let du = u.degree().unwrap_or(0) as u32;
    for (k, s) in u.squarefree() {
        let sp = s.to_mpoly(f.ring(), a);
        let d = sp.total_degree().unwrap();
        merge(classes, k, sp.homogenize(b, d));
    }
    if deg > du {
        merge(classes, deg - du, MPoly::var_idx(f.ring(), b));
    }
}

/// Yun's algorithm with respect to one variable, recursing on the content.
fn general(f: &MPoly, classes: &mut BTreeMap<u32, MPoly>) {
    let vars = f.support_vars();
    if vars.is_empty() {
        return;
    }
    let v = vars[0];
    let content = f.content_in(v);
    let pp = f.div_exact(&content).expect("content divides");
    if !content.is_constant() {
        general(&content, classes);
    }
    let df = pp.derivative_idx(v);
    let a0 = pp.gcd(&df);
    let mut b = pp.div_exact(&a0).expect("gcd divides");
    let c = df.div_exact(&a0).expect("gcd divides");
    let mut d = &c - &b.derivative_idx(v);
    let mut k = 1;
    while !b.is_constant() {
        let a = b.gcd(&d);
        merge(classes, k, a.clone());
        let nb = b.div_exact(&a).expect("gcd divides");
        let nc = d.div_exact(&a).expect("gcd divides");
        d = &nc - &nb.derivative_idx(v);
        b = nb;
        k += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::FieldElem;
    use crate::multipoly::VarSet;

    #[test]
    fn binary_examples() {
        let r = VarSet::of(&["x", "y"]);
        let x = MPoly::var(&r, "x").unwrap();
        let y = MPoly::var(&r, "y").unwrap();
        let f = x.pow(2) * y.pow(3) * (&x - &y);
        let sq = f.squarefree_decomposition().unwrap();
        assert_eq!(sq, vec![(1, &x - &y), (2, x.clone()), (3, y.clone())]);
        let g = (x.pow(2) * y.pow(4) * (&x - &y) * (&x + &y)).scale(&FieldElem::from_int(150));
        let sg = g.squarefree_decomposition().unwrap();
        assert_eq!(sg, vec![(1, &x * &x - &y * &y), (2, x.clone()), (4, y.clone())]);
    }

    #[test]
    fn general_trivariate() {
        let r = VarSet::of(&["x", "y", "z"]);
        let v = |n: &str| MPoly::var(&r, n).unwrap();
        let conic = &v("x") * &v("y") - v("z").pow(2);
        let f = conic.pow(2) * v("z").pow(3) * (&v("x") + &v("y"));
        let sq = f.squarefree_decomposition().unwrap();
        let mut prod = MPoly::one(&r);
        for (k, s) in &sq {
            prod = prod * s.pow(*k);
        }
        assert!(prod.proportional(&f));
        assert_eq!(sq.iter().map(|(k, _)| *k).collect::<Vec<_>>(), vec![1, 2, 3]);
    }

    #[test]
    fn zero_rejected() {
        let r = VarSet::of(&["x"]);
        assert_eq!(MPoly::zero(&r).squarefree_decomposition(), Err(PolyError::ZeroPolynomial));
    }
}

//! Multivariate gcd by recursive primitive remainder sequences.



use super::univariate::UPoly;
use super::{MPoly, Monomial};
use crate::exactfield::FieldElem;

impl MPoly {
    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, g: &MPoly) -> MPoly {
        assert!(self.ring == g.ring, "ring mismatch in gcd");
        if self.is_zero() {
            return g.monic();
        }
        if g.is_zero() {
            return self.monic();
        }
        gcd_rec(self, g).monic()
    }

    /// Gcd of the coefficients with respect to variable `i`.
    pub fn content_in(&self, i: usize) -> MPoly {
        let mut acc = MPoly::zero(&self.ring);
        for c in self.coeffs_in(i) {
            if c.is_zero() {
                continue;
            }
            acc = if acc.is_zero() { c.monic() } else { gcd_rec(&acc, &c).monic() };
            if acc.is_constant() {
                return MPoly::one(&self.ring);
            }
        }
        acc
    }

    pub fn primitive_part_in(&self, i: usize) -> MPoly {
        if self.is_zero() {
            return self.clone();
        }
        let c = self.content_in(i);
        self.div_exact(&c).expect("content divides")
    }

    /// Pseudo-remainder of `self` by `g` with respect to variable `i`.
    pub fn pseudo_rem(&self, g: &MPoly, i: usize) -> MPoly {
        let n = g.degree_in(i).expect("nonzero divisor");
        let lg = g.lc_in(i);
        let mut r = self.clone();
        while let Some(dr) = r.degree_in(i) {
            if r.is_zero() || dr < n {
                break;
            }
            let lr = r.lc_in(i);
            let mut m = Monomial::one(self.ring.len());
            m.0[i] = dr - n;
            r = &lg * &r - &lr * &g.shift(&m);
        }
        r
    }
}

/// Monomial gcd of all terms.
fn monomial_content(f: &MPoly) -> Monomial {
    let mut it = f.terms.keys();
    let mut m = it.next().cloned().unwrap_or_else(|| Monomial::one(f.ring.len()));
    for k in it {
        for (a, b) in m.0.iter_mut().zip(k.0.iter()) {
            *a = (*a).min(*b);
        }
    }
    m
}

fn gcd_rec(f: &MPoly, g: &MPoly) -> MPoly {
    if f.is_zero() {
        return g.clone();
    }
    if g.is_zero() {
        return f.clone();
    }
    if f.is_constant() || g.is_constant() {
        return MPoly::one(&f.ring);
    }
    if f.num_terms() == 1 || g.num_terms() == 1 {
        // gcd with a monomial is a monomial
        let mf = monomial_content(f);
        let mg = monomial_content(g);
        let m = super::Monomial(mf.0.iter().zip(mg.0.iter()).map(|(a, b)| *a.min(b)).collect());
        return MPoly::monomial(&f.ring, m, FieldElem::from_int(1));
    }
    let vf = f.support_vars();
    let vg = g.support_vars();
    if let Some(&v) = vf.iter().find(|v| !vg.contains(v)) {
        return gcd_rec(&f.content_in(v), g);
    }
    if let Some(&v) = vg.iter().find(|v| !vf.contains(v)) {
        return gcd_rec(f, &g.content_in(v));
    }
    // same support; eliminate the variable of largest degree last
    let v = *vf.iter().max_by_key(|&&v| (f.degree_in(v).unwrap() + g.degree_in(v).unwrap(), usize::MAX - v)).unwrap();
    if vf.len() == 1 {
        let a = UPoly::from_mpoly(f, v);
        let b = UPoly::from_mpoly(g, v);
        return a.gcd(&b).to_mpoly(&f.ring, v);
    }
    let cf = f.content_in(v);
    let cg = g.content_in(v);
    let c = gcd_rec(&cf, &cg);
    let pf = f.div_exact(&cf).expect("content divides");
    let pg = g.div_exact(&cg).expect("content divides");
    if specialization_coprime(&pf, &pg, v) {
        return c;
    }
    let h = primitive_prs(pf, pg, v);
    &c * &h
}

/// Certificate that `gcd(f, g)` has degree zero in `v`: some specialization
/// of the other variables keeps both leading coefficients and yields coprime
/// univariate images.
fn specialization_coprime(f: &MPoly, g: &MPoly, v: usize) -> bool {
    let others: Vec<usize> = (0..f.ring.len()).filter(|&k| k != v).collect();
    let lf = f.lc_in(v);
    let lg = g.lc_in(v);
    for attempt in 0..3i64 {
        let point: Vec<FieldElem> = others.iter().enumerate().map(|(j, _)| FieldElem::from_int(2 + attempt * 7 + (j as i64) * 3 + (j as i64 * j as i64) % 5)).collect();
        let spec = |p: &MPoly| {
            let mut q = p.clone();
            for (&k, val) in others.iter().zip(point.iter()) {
                q = q.eval_var(k, val);
            }
            q
        };
        if spec(&lf).is_zero() || spec(&lg).is_zero() {
            continue;
        }
        let a = UPoly::from_mpoly(&spec(f), v);
        let b = UPoly::from_mpoly(&spec(g), v);
        if a.gcd(&b).degree() == Some(0) {
            return true;
        }
        return false;
    }
    false
}

fn primitive_prs(mut a: MPoly, mut b: MPoly, v: usize) -> MPoly {
    if a.degree_in(v) < b.degree_in(v) {
        std::mem::swap(&mut a, &mut b);
    }
    loop {
        let r = a.pseudo_rem(&b, v);
        if r.is_zero() {
            return b.primitive_part_in(v).monic();
        }
        if r.degree_in(v) == Some(0) {
            return MPoly::one(&a.ring);
        }
        a = b;
        b = r.primitive_part_in(v).monic();
    }
}

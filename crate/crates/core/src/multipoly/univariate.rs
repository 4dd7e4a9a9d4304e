//! Dense univariate polynomials over the field and root extraction.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{MPoly, Monomial, VarSet};
use crate::error::PolyError;
use crate::exactfield::{FieldElem, Rational};

/// Coefficients in increasing degree, without trailing zeros.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct UPoly(pub Vec<FieldElem>);

impl UPoly {
    pub fn new(mut c: Vec<FieldElem>) -> Self {
        while c.last().map(|x| x.is_zero()).unwrap_or(false) {
            c.pop();
        }
        UPoly(c)
    }

    pub fn zero() -> Self {
        UPoly(Vec::new())
    }

    pub fn one() -> Self {
        UPoly(vec![FieldElem::one()])
    }

    /// `x - r`
    pub fn linear(r: &FieldElem) -> Self {
        UPoly(vec![-r, FieldElem::one()])
    }

    pub fn from_mpoly(f: &MPoly, v: usize) -> Self {
        let d = f.degree_in(v).unwrap_or(0) as usize;
        let mut c = vec![FieldElem::zero(); d + 1];
        for (m, a) in f.terms() {
            debug_assert!(m.0.iter().enumerate().all(|(k, &e)| k == v || e == 0), "not univariate");
            c[m.0[v] as usize] += a;
        }
        UPoly::new(c)
    }

    pub fn to_mpoly(&self, ring: &VarSet, v: usize) -> MPoly {
        MPoly::from_terms(
            ring,
            self.0.iter().enumerate().map(|(k, a)| {
                let mut m = Monomial::one(ring.len());
                m.0[v] = k as u32;
                (m, a.clone())
            }),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.0.is_empty() {
            None
        } else {
            Some(self.0.len() - 1)
        }
    }

    pub fn lc(&self) -> FieldElem {
        self.0.last().cloned().unwrap_or_else(FieldElem::zero)
    }

    pub fn eval(&self, x: &FieldElem) -> FieldElem {
        let mut acc = FieldElem::zero();
        for a in self.0.iter().rev() {
            acc = &(&acc * x) + a;
        }
        acc
    }

    pub fn scale(&self, c: &FieldElem) -> Self {
        UPoly::new(self.0.iter().map(|a| a * c).collect())
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&self.lc().inv().unwrap())
    }

    pub fn add(&self, o: &UPoly) -> Self {
        let n = self.0.len().max(o.0.len());
        let z = FieldElem::zero();
        UPoly::new((0..n).map(|k| self.0.get(k).unwrap_or(&z) + o.0.get(k).unwrap_or(&z)).collect())
    }

    pub fn sub(&self, o: &UPoly) -> Self {
        let n = self.0.len().max(o.0.len());
        let z = FieldElem::zero();
        UPoly::new((0..n).map(|k| self.0.get(k).unwrap_or(&z) - o.0.get(k).unwrap_or(&z)).collect())
    }

    pub fn mul(&self, o: &UPoly) -> Self {
        if self.is_zero() || o.is_zero() {
            return UPoly::zero();
        }
        let mut c = vec![FieldElem::zero(); self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.0.iter().enumerate() {
                c[i + j] += &(a * b);
            }
        }
        UPoly::new(c)
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(UPoly::one(), |acc, _| acc.mul(self))
    }

    pub fn derivative(&self) -> Self {
        UPoly::new(self.0.iter().enumerate().skip(1).map(|(k, a)| a.scale(&Rational::from_integer((k as i64).into()))).collect())
    }

    pub fn divrem(&self, d: &UPoly) -> (UPoly, UPoly) {
        let dd = d.degree().expect("division by zero polynomial");
        let inv = d.lc().inv().unwrap();
        let mut r = self.0.clone();
        if r.len() <= dd {
            return (UPoly::zero(), self.clone());
        }
        let mut q = vec![FieldElem::zero(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let c = &r[k + dd] * &inv;
            if !c.is_zero() {
                for (j, b) in d.0.iter().enumerate() {
                    let t = &c * b;
                    r[k + j] -= &t;
                }
            }
            q[k] = c;
        }
        r.truncate(dd);
        (UPoly::new(q), UPoly::new(r))
    }

    /// Monic gcd by Euclid.
    pub fn gcd(&self, o: &UPoly) -> UPoly {
        let mut a = self.clone();
        let mut b = o.clone();
        while !b.is_zero() {
            let (_, r) = a.divrem(&b);
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    /// Yun's square-free decomposition: `(k, S_k)` with monic `S_k`.
    pub fn squarefree(&self) -> Vec<(u32, UPoly)> {
        let mut out = Vec::new();
        if self.degree().unwrap_or(0) == 0 {
            return out;
        }
        let f = self.monic();
        let df = f.derivative();
        let a0 = f.gcd(&df);
        let mut b = f.divrem(&a0).0;
        let c = df.divrem(&a0).0;
        let mut d = c.sub(&b.derivative());
        let mut k = 1;
        while b.degree().unwrap_or(0) > 0 {
            let a = b.gcd(&d);
            if a.degree().unwrap_or(0) > 0 {
                out.push((k, a.clone()));
            }
            let nb = b.divrem(&a).0;
            let nc = d.divrem(&a).0;
            d = nc.sub(&nb.derivative());
            b = nb;
            k += 1;
        }
        out
    }

    fn conj_sqrt3(&self) -> UPoly {
        UPoly(self.0.iter().map(|a| a.conj_sqrt3()).collect())
    }
}

/// Roots lying in the field, with multiplicities, and the unsplit cofactor.
#[derive(Clone, Debug, PartialEq)]
pub struct FieldRoots {
    pub roots: Vec<(FieldElem, u32)>,
    pub residual: MPoly,
}

/// Roots in `Q(i, sqrt3)` of a univariate polynomial.
pub fn find_field_roots(f: &MPoly) -> Result<FieldRoots, PolyError> {
    if f.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    let vars = f.support_vars();
    if vars.len() > 1 {
        return Err(PolyError::NotUnivariate);
    }
    if vars.is_empty() {
        return Ok(FieldRoots { roots: vec![], residual: f.clone() });
    }
    let v = vars[0];
    let u = UPoly::from_mpoly(f, v);
    let (roots, residual) = upoly_roots(&u);
    Ok(FieldRoots { roots, residual: residual.to_mpoly(f.ring(), v) })
}

/// Univariate version of [`find_field_roots`].
pub fn upoly_roots(u: &UPoly) -> (Vec<(FieldElem, u32)>, UPoly) {
    let mut roots = Vec::new();
    let mut residual = UPoly(vec![u.lc()]);
    for (k, s) in u.squarefree() {
        let (rs, res) = squarefree_roots(&s);
        for r in rs {
            roots.push((r, k));
        }
        residual = residual.mul(&res.pow(k));
    }
    (roots, residual)
}

fn squarefree_roots(s: &UPoly) -> (Vec<FieldElem>, UPoly) {
    let mut s = s.monic();
    let mut roots = Vec::new();
    loop {
        match s.degree().unwrap_or(0) {
            0 => return (roots, UPoly::one()),
            1 => {
                roots.push(-&s.0[0]);
                return (roots, UPoly::one());
            }
            2 => {
                let (b, c) = (&s.0[1], &s.0[0]);
                let disc = b * b - c.scale(&Rational::from_integer(4.into()));
                match disc.sqrt() {
                    Some(r) => {
                        let half = FieldElem::from_frac(1, 2);
                        roots.push(&(&r - b) * &half);
                        roots.push(&(-(&r + b)) * &half);
                        return (roots, UPoly::one());
                    }
                    None => return (roots, s),
                }
            }
            _ => {}
        }
        if s.0[0].is_zero() {
            roots.push(FieldElem::zero());
            s = UPoly::new(s.0[1..].to_vec());
            continue;
        }
        let found = candidate_roots(&s);
        if found.is_empty() {
            return (roots, s);
        }
        for r in found {
            let (q, rem) = s.divrem(&UPoly::linear(&r));
            if rem.is_zero() {
                s = q;
                roots.push(r);
            }
        }
    }
}

fn candidate_roots(s: &UPoly) -> Vec<FieldElem> {
    let mut out = scaled_rational_roots(s);
    if out.is_empty() {
        out = numeric_guided_roots(s);
    }
    out
}

/// Rational roots of `s(e*x)` for `e` in the basis units, when that polynomial
/// is a multiple of a rational one.
fn scaled_rational_roots(s: &UPoly) -> Vec<FieldElem> {
    let units = [FieldElem::one(), FieldElem::i(), FieldElem::sqrt3(), FieldElem::i_sqrt3()];
    let mut out = Vec::new();
    for e in &units {
        let mut pw = FieldElem::one();
        let mut c = Vec::with_capacity(s.0.len());
        for a in &s.0 {
            c.push(a * &pw);
            pw = &pw * e;
        }
        let g = UPoly::new(c);
        let lead = g.lc();
        let g = g.scale(&lead.inv().unwrap());
        if !g.0.iter().all(|a| a.is_rational()) {
            continue;
        }
        let q: Vec<Rational> = g.0.iter().map(|a| a.as_rational().unwrap().clone()).collect();
        for r in rational_roots(&q) {
            let cand = &FieldElem::from_rational(r) * e;
            if s.eval(&cand).is_zero() && !out.contains(&cand) {
                out.push(cand);
            }
        }
        if !out.is_empty() {
            break;
        }
    }
    out
}

const MAX_TRIAL: u64 = 1_000_000;

fn small_divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let n = n.abs();
    if n.is_zero() {
        return None;
    }
    let mut m = n.clone();
    let mut primes: Vec<(BigInt, u32)> = Vec::new();
    let mut p = 2u64;
    while p <= MAX_TRIAL && BigInt::from(p) * BigInt::from(p) <= m {
        let bp = BigInt::from(p);
        let mut e = 0;
        while (&m % &bp).is_zero() {
            m /= &bp;
            e += 1;
        }
        if e > 0 {
            primes.push((bp, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if m > BigInt::one() {
        if BigInt::from(MAX_TRIAL) * BigInt::from(MAX_TRIAL) < m {
            return None;
        }
        primes.push((m, 1));
    }
    let mut divs = vec![BigInt::one()];
    for (p, e) in primes {
        let mut next = Vec::new();
        for d in &divs {
            let mut pk = BigInt::one();
            for _ in 0..=e {
                next.push(d * &pk);
                pk *= &p;
            }
        }
        divs = next;
        if divs.len() > 20000 {
            return None;
        }
    }
    Some(divs)
}

/// Rational roots by the rational root theorem.
fn rational_roots(q: &[Rational]) -> Vec<Rational> {
    let lcm = q.iter().fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
    let ints: Vec<BigInt> = q.iter().map(|r| (r * Rational::from_integer(lcm.clone())).to_integer()).collect();
    let lo = ints.iter().position(|a| !a.is_zero()).unwrap();
    let ints = &ints[lo..];
    let mut out = Vec::new();
    if lo > 0 {
        out.push(Rational::zero());
    }
    if ints.len() < 2 {
        return out;
    }
    let (Some(nd), Some(dd)) = (small_divisors(&ints[0]), small_divisors(ints.last().unwrap())) else {
        return out;
    };
    if nd.len() * dd.len() > 200_000 {
        return out;
    }
    for a in &nd {
        for b in &dd {
            for sgn in [1, -1] {
                let r = Rational::new(a * BigInt::from(sgn), b.clone());
                if out.contains(&r) {
                    continue;
                }
                let mut acc = Rational::zero();
                for c in ints.iter().rev() {
                    acc = acc * &r + Rational::from_integer(c.clone());
                }
                if acc.is_zero() {
                    out.push(r);
                }
            }
        }
    }
    out
}

/// Approximate complex roots (Aberth iteration).
fn complex_roots(s: &UPoly) -> Vec<Complex64> {
    let c: Vec<Complex64> = s.0.iter().map(|a| a.to_complex()).collect();
    let n = c.len() - 1;
    let lead = c[n];
    let c: Vec<Complex64> = c.iter().map(|a| a / lead).collect();
    let bound = 1.0 + c[..n].iter().map(|a| a.norm()).fold(0.0, f64::max);
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| Complex64::from_polar(bound * 0.7, 2.0 * std::f64::consts::PI * (k as f64) / (n as f64) + 0.4))
        .collect();
    let eval = |x: Complex64| -> (Complex64, Complex64) {
        let mut p = Complex64::new(0.0, 0.0);
        let mut dp = Complex64::new(0.0, 0.0);
        for a in c.iter().rev() {
            dp = dp * x + p;
            p = p * x + a;
        }
        (p, dp)
    };
    for _ in 0..500 {
        let mut moved = 0.0f64;
        for i in 0..n {
            let (p, dp) = eval(z[i]);
            if p.norm() == 0.0 {
                continue;
            }
            let ratio = p / dp;
            let mut sum = Complex64::new(0.0, 0.0);
            for j in 0..n {
                if j != i {
                    let d = z[i] - z[j];
                    if d.norm() > 0.0 {
                        sum += Complex64::new(1.0, 0.0) / d;
                    }
                }
            }
            let w = ratio / (Complex64::new(1.0, 0.0) - ratio * sum);
            if w.is_finite() {
                z[i] -= w;
                moved = moved.max(w.norm() / (1.0 + z[i].norm()));
            }
        }
        if moved < 1e-15 {
            break;
        }
    }
    z
}

/// Best rational approximation with bounded denominator via continued fractions.
fn rationalize(x: f64, max_den: i64) -> Option<Rational> {
    if !x.is_finite() || x.abs() > 1e12 {
        return None;
    }
    let (mut h0, mut h1) = (0i128, 1i128);
    let (mut k0, mut k1) = (1i128, 0i128);
    let mut y = x;
    for _ in 0..40 {
        let a = y.floor();
        let ai = a as i128;
        let h2 = ai * h1 + h0;
        let k2 = ai * k1 + k0;
        if k2 > max_den as i128 {
            break;
        }
        h0 = h1;
        h1 = h2;
        k0 = k1;
        k1 = k2;
        let approx = h1 as f64 / k1 as f64;
        if (approx - x).abs() <= 1e-9 * (1.0 + x.abs()) {
            return Some(Rational::new(BigInt::from(h1), BigInt::from(k1)));
        }
        let frac = y - a;
        if frac.abs() < 1e-14 {
            break;
        }
        y = 1.0 / frac;
    }
    if k1 != 0 && ((h1 as f64 / k1 as f64) - x).abs() <= 1e-9 * (1.0 + x.abs()) {
        return Some(Rational::new(BigInt::from(h1), BigInt::from(k1)));
    }
    None
}

/// Candidates reconstructed from numeric roots of `s` and of its
/// `sqrt3 -> -sqrt3` conjugate, then verified exactly.
fn numeric_guided_roots(s: &UPoly) -> Vec<FieldElem> {
    let zs = complex_roots(s);
    let sc = s.conj_sqrt3();
    let zc = if sc == *s { zs.clone() } else { complex_roots(&sc) };
    let r3 = 3f64.sqrt();
    let mut out: Vec<FieldElem> = Vec::new();
    for z in &zs {
        for w in &zc {
            let a = (z.re + w.re) / 2.0;
            let c = (z.re - w.re) / (2.0 * r3);
            let b = (z.im + w.im) / 2.0;
            let d = (z.im - w.im) / (2.0 * r3);
            let parts: Option<Vec<Rational>> = [a, b, c, d].iter().map(|&t| rationalize(t, 10_000)).collect();
            let Some(p) = parts else { continue };
            let cand = FieldElem::new(p[0].clone(), p[1].clone(), p[2].clone(), p[3].clone());
            if !out.contains(&cand) && s.eval(&cand).is_zero() {
                out.push(cand);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xring() -> VarSet {
        VarSet::of(&["x"])
    }

    fn sorted(mut v: Vec<(FieldElem, u32)>) -> Vec<String> {
        let mut s: Vec<String> = v.drain(..).map(|(r, m)| format!("{}^{}", r, m)).collect();
        s.sort();
        s
    }

    #[test]
    fn roots_examples() {
        let r = xring();
        let x = MPoly::var(&r, "x").unwrap();
        let f = &x - x.pow(3);
        let fr = find_field_roots(&f).unwrap();
        assert_eq!(sorted(fr.roots), vec!["-1^1", "0^1", "1^1"]);
        assert!(fr.residual.is_constant());

        let g = x.pow(2) + MPoly::from_int(&r, 3);
        let gr = find_field_roots(&g).unwrap();
        assert_eq!(sorted(gr.roots), vec!["-i*sqrt3^1", "i*sqrt3^1"]);

        let h = x.pow(5) - MPoly::from_int(&r, 2);
        let hr = find_field_roots(&h).unwrap();
        assert!(hr.roots.is_empty());
        assert_eq!(hr.residual, h);
    }

    #[test]
    fn roots_with_mixed_units() {
        let r = xring();
        let x = MPoly::var(&r, "x").unwrap();
        let xi = FieldElem::new(Rational::zero(), Rational::new(1.into(), 2.into()), Rational::new(1.into(), 2.into()), Rational::zero());
        let roots = [xi.clone(), FieldElem::i(), FieldElem::from_int(2) + FieldElem::sqrt3(), FieldElem::from_frac(-3, 5)];
        let mut f = MPoly::one(&r);
        for t in &roots {
            f = &f * &(&x - &MPoly::constant(&r, t.clone()));
        }
        f = &f * &(&x - &MPoly::constant(&r, xi.clone()));
        let fr = find_field_roots(&f).unwrap();
        assert!(fr.residual.is_constant(), "residual {}", fr.residual);
        let total: u32 = fr.roots.iter().map(|(_, m)| m).sum();
        assert_eq!(total, 5);
        assert!(fr.roots.contains(&(xi, 2)));
    }

    #[test]
    fn yun() {
        let a = UPoly::linear(&FieldElem::from_int(1));
        let b = UPoly::linear(&FieldElem::from_int(2));
        let f = a.pow(3).mul(&b);
        let sq = f.squarefree();
        assert_eq!(sq, vec![(1, b), (3, a)]);
    }
}

//! Sparse multivariate polynomials over [`FieldElem`].
//!
//! Terms are kept in a `BTreeMap` keyed by exponent vectors ordered graded
//! lexicographically, so the leading term is the last entry.

mod gcd;
mod resultant;
mod sqfree;
pub mod univariate;

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Zero};
use smallvec::SmallVec;

use crate::error::PolyError;
use crate::exactfield::{FieldElem, Rational};
use crate::limits;

pub use resultant::{det_bareiss, sylvester_matrix};
pub use univariate::{find_field_roots, FieldRoots, UPoly};

/// Ordered, duplicate-free list of variable names.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VarSet(Arc<Vec<String>>);

impl VarSet {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Result<Self, PolyError> {
        let names: Vec<String> = names.iter().map(|s| s.as_ref().to_string()).collect();
        if names.is_empty() {
            return Err(PolyError::InvalidVarSet("empty".into()));
        }
        for (k, n) in names.iter().enumerate() {
            if names[..k].contains(n) {
                return Err(PolyError::InvalidVarSet(format!("duplicate `{}`", n)));
            }
        }
        Ok(VarSet(Arc::new(names)))
    }

    /// Infallible constructor for literal variable lists.
    pub fn of(names: &[&str]) -> Self {
        VarSet::new(names).expect("valid variable list")
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn index(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|n| n == name)
    }

    pub fn name(&self, i: usize) -> &str {
        &self.0[i]
    }

    /// This ring followed by the names of `other` it lacks.
    pub fn union(&self, other: &VarSet) -> VarSet {
        let mut names = self.0.as_ref().clone();
        for n in other.names() {
            if !names.contains(n) {
                names.push(n.clone());
            }
        }
        VarSet(Arc::new(names))
    }
}

impl fmt::Debug for VarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// Exponent vector.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(pub SmallVec<[u32; 4]>);

impl Monomial {
    pub fn one(n: usize) -> Self {
        Monomial(SmallVec::from_elem(0, n))
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    fn mul(&self, o: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(o.0.iter()).map(|(a, b)| a + b).collect())
    }

    fn divides(&self, o: &Monomial) -> bool {
        self.0.iter().zip(o.0.iter()).all(|(a, b)| a <= b)
    }

    fn div(&self, o: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(o.0.iter()).map(|(a, b)| a - b).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, o: &Self) -> Ordering {
        self.degree().cmp(&o.degree()).then_with(|| self.0.cmp(&o.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

/// Polynomial in the variables of its [`VarSet`].
#[derive(Clone, PartialEq, Eq)]
pub struct MPoly {
    ring: VarSet,
    terms: BTreeMap<Monomial, FieldElem>,
}

impl MPoly {
    pub fn zero(ring: &VarSet) -> Self {
        MPoly { ring: ring.clone(), terms: BTreeMap::new() }
    }

    pub fn constant(ring: &VarSet, c: FieldElem) -> Self {
        let mut p = MPoly::zero(ring);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(ring.len()), c);
        }
        p
    }

    pub fn one(ring: &VarSet) -> Self {
        MPoly::constant(ring, FieldElem::one())
    }

    pub fn from_int(ring: &VarSet, n: i64) -> Self {
        MPoly::constant(ring, FieldElem::from_int(n))
    }

    pub fn var(ring: &VarSet, name: &str) -> Result<Self, PolyError> {
        let i = ring.index(name).ok_or_else(|| PolyError::UnknownVariable(name.into()))?;
        Ok(MPoly::var_idx(ring, i))
    }

    pub fn var_idx(ring: &VarSet, i: usize) -> Self {
        let mut m = Monomial::one(ring.len());
        m.0[i] = 1;
        MPoly::monomial(ring, m, FieldElem::one())
    }

    pub fn monomial(ring: &VarSet, m: Monomial, c: FieldElem) -> Self {
        assert_eq!(m.0.len(), ring.len(), "exponent vector length");
        let mut p = MPoly::zero(ring);
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, FieldElem)>>(ring: &VarSet, it: I) -> Self {
        let mut p = MPoly::zero(ring);
        for (m, c) in it {
            p.add_term(m, &c);
        }
        p
    }

    pub fn ring(&self) -> &VarSet {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &FieldElem)> {
        self.terms.iter()
    }

    /// Constant value if the polynomial has degree zero.
    pub fn constant_value(&self) -> Option<FieldElem> {
        match self.terms.len() {
            0 => Some(FieldElem::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                if m.degree() == 0 {
                    Some(c.clone())
                } else {
                    None
                }
            }
            _ => None,
        }
    }

    pub fn is_constant(&self) -> bool {
        self.constant_value().is_some()
    }

    pub fn is_one(&self) -> bool {
        self.constant_value().map(|c| c.is_one()).unwrap_or(false)
    }

    pub fn coeff(&self, m: &Monomial) -> FieldElem {
        self.terms.get(m).cloned().unwrap_or_else(FieldElem::zero)
    }

    /// Coefficient of the monomial with the given exponents.
    pub fn coeff_of(&self, exps: &[u32]) -> FieldElem {
        self.coeff(&Monomial(exps.iter().copied().collect()))
    }

    pub fn leading(&self) -> Option<(&Monomial, &FieldElem)> {
        self.terms.iter().next_back()
    }

    pub fn leading_coeff(&self) -> FieldElem {
        self.leading().map(|(_, c)| c.clone()).unwrap_or_else(FieldElem::zero)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.leading().map(|(m, _)| m.degree())
    }

    pub fn degree_in(&self, i: usize) -> Option<u32> {
        self.terms.keys().map(|m| m.0[i]).max()
    }

    /// Lowest total degree of a term.
    pub fn order(&self) -> Option<u32> {
        self.terms.keys().next().map(|m| m.degree())
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut it = self.terms.keys().map(|m| m.degree());
        match it.next() {
            None => true,
            Some(d) => it.all(|e| e == d),
        }
    }

    /// Indices of variables occurring with positive exponent.
    pub fn support_vars(&self) -> Vec<usize> {
        (0..self.ring.len()).filter(|&i| self.terms.keys().any(|m| m.0[i] > 0)).collect()
    }

    pub fn involves(&self, i: usize) -> bool {
        self.terms.keys().any(|m| m.0[i] > 0)
    }

    fn add_term(&mut self, m: Monomial, c: &FieldElem) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn same_ring(&self, o: &MPoly) -> Result<(), PolyError> {
        if self.ring == o.ring {
            Ok(())
        } else {
            Err(PolyError::RingMismatch)
        }
    }

    pub fn checked_add(&self, o: &MPoly) -> Result<MPoly, PolyError> {
        self.same_ring(o)?;
        let mut r = self.clone();
        for (m, c) in &o.terms {
            r.add_term(m.clone(), c);
        }
        Ok(r)
    }

    pub fn checked_sub(&self, o: &MPoly) -> Result<MPoly, PolyError> {
        self.same_ring(o)?;
        let mut r = self.clone();
        for (m, c) in &o.terms {
            r.add_term(m.clone(), &-c);
        }
        Ok(r)
    }

    pub fn checked_mul(&self, o: &MPoly) -> Result<MPoly, PolyError> {
        self.same_ring(o)?;
        if self.is_zero() || o.is_zero() {
            return Ok(MPoly::zero(&self.ring));
        }
        if let Some(c) = o.constant_value() {
            return Ok(self.scale(&c));
        }
        if let Some(c) = self.constant_value() {
            return Ok(o.scale(&c));
        }
        limits::check_deadline();
        let mut acc: HashMap<Monomial, FieldElem> = HashMap::with_capacity(self.terms.len() * o.terms.len() / 2 + 1);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                let prod = c1 * c2;
                match acc.entry(m1.mul(m2)) {
                    std::collections::hash_map::Entry::Vacant(v) => {
                        v.insert(prod);
                    }
                    std::collections::hash_map::Entry::Occupied(mut e) => {
                        *e.get_mut() += &prod;
                    }
                }
            }
            limits::check_terms(acc.len());
        }
        let terms = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        Ok(MPoly { ring: self.ring.clone(), terms })
    }

    pub fn scale(&self, c: &FieldElem) -> MPoly {
        if c.is_zero() {
            return MPoly::zero(&self.ring);
        }
        MPoly { ring: self.ring.clone(), terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect() }
    }

    pub fn scale_rational(&self, q: &Rational) -> MPoly {
        self.scale(&FieldElem::from_rational(q.clone()))
    }

    pub fn pow(&self, mut e: u32) -> MPoly {
        let mut base = self.clone();
        let mut acc = MPoly::one(&self.ring);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Multiply by a monomial.
    pub fn shift(&self, m: &Monomial) -> MPoly {
        MPoly { ring: self.ring.clone(), terms: self.terms.iter().map(|(k, c)| (k.mul(m), c.clone())).collect() }
    }

    /// Divide by the leading coefficient.
    pub fn monic(&self) -> MPoly {
        match self.leading() {
            None => self.clone(),
            Some((_, c)) => self.scale(&c.inv().expect("nonzero leading coefficient")),
        }
    }

    pub fn derivative(&self, name: &str) -> Result<MPoly, PolyError> {
        let i = self.ring.index(name).ok_or_else(|| PolyError::UnknownVariable(name.into()))?;
        Ok(self.derivative_idx(i))
    }

    pub fn derivative_idx(&self, i: usize) -> MPoly {
        let mut r = MPoly::zero(&self.ring);
        for (m, c) in &self.terms {
            let e = m.0[i];
            if e > 0 {
                let mut m2 = m.clone();
                m2.0[i] -= 1;
                r.terms.insert(m2, c.scale(&Rational::from_integer(e.into())));
            }
        }
        r
    }

    /// Substitute a field value for variable `i`, staying in the same ring.
    pub fn eval_var(&self, i: usize, val: &FieldElem) -> MPoly {
        let maxe = self.degree_in(i).unwrap_or(0);
        let mut pows = vec![FieldElem::one()];
        for k in 1..=maxe as usize {
            let nxt = &pows[k - 1] * val;
            pows.push(nxt);
        }
        let mut r = MPoly::zero(&self.ring);
        for (m, c) in &self.terms {
            let mut m2 = m.clone();
            let e = m2.0[i] as usize;
            m2.0[i] = 0;
            r.add_term(m2, &(c * &pows[e]));
        }
        r
    }

    /// Evaluate at a full point.
    pub fn eval(&self, point: &[FieldElem]) -> FieldElem {
        assert_eq!(point.len(), self.ring.len());
        let mut acc = FieldElem::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(m.0.iter()) {
                if e > 0 {
                    t = &t * &x.pow(e);
                }
            }
            acc += &t;
        }
        acc
    }

    /// Simultaneous substitution. Every variable of `self` is either bound or
    /// must exist (by name) in the target ring shared by all bindings.
    pub fn substitute(&self, bindings: &[(&str, MPoly)]) -> Result<MPoly, PolyError> {
        let target = match bindings.first() {
            Some((_, p)) => p.ring.clone(),
            None => return Ok(self.clone()),
        };
        for (n, p) in bindings {
            if p.ring != target {
                return Err(PolyError::RingMismatch);
            }
            if self.ring.index(n).is_none() {
                return Err(PolyError::UnknownVariable((*n).to_string()));
            }
        }
        let mut images = Vec::with_capacity(self.ring.len());
        for (i, name) in self.ring.names().iter().enumerate() {
            if let Some((_, p)) = bindings.iter().find(|(n, _)| n == name) {
                images.push(p.clone());
            } else if self.involves(i) {
                images.push(MPoly::var(&target, name)?);
            } else {
                images.push(MPoly::zero(&target));
            }
        }
        Ok(self.compose(&target, &images))
    }

    /// Replace variable `k` of `self` by `images[k]`, all in ring `target`.
    pub fn compose(&self, target: &VarSet, images: &[MPoly]) -> MPoly {
        assert_eq!(images.len(), self.ring.len());
        let mut cache: Vec<Vec<MPoly>> = images.iter().map(|p| vec![MPoly::one(target), p.clone()]).collect();
        let mut acc = MPoly::zero(target);
        for (m, c) in &self.terms {
            let mut t = MPoly::constant(target, c.clone());
            for (k, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while cache[k].len() <= e as usize {
                    let nxt = &cache[k][cache[k].len() - 1] * &images[k];
                    cache[k].push(nxt);
                }
                t = &t * &cache[k][e as usize];
            }
            for (m2, c2) in t.terms {
                acc.add_term(m2, &c2);
            }
        }
        acc
    }

    /// Re-express in a ring that contains all variables this polynomial uses.
    pub fn to_ring(&self, target: &VarSet) -> Result<MPoly, PolyError> {
        let mut map = Vec::with_capacity(self.ring.len());
        for (i, n) in self.ring.names().iter().enumerate() {
            match target.index(n) {
                Some(j) => map.push(Some(j)),
                None if !self.involves(i) => map.push(None),
                None => return Err(PolyError::UnknownVariable(n.clone())),
            }
        }
        let mut r = MPoly::zero(target);
        for (m, c) in &self.terms {
            let mut m2 = Monomial::one(target.len());
            for (i, &e) in m.0.iter().enumerate() {
                if let Some(j) = map[i] {
                    m2.0[j] += e;
                }
            }
            r.add_term(m2, c);
        }
        Ok(r)
    }

    /// Coefficients with respect to variable `i`; entry `k` multiplies `v^k`.
    pub fn coeffs_in(&self, i: usize) -> Vec<MPoly> {
        let d = self.degree_in(i).unwrap_or(0) as usize;
        let mut out = vec![MPoly::zero(&self.ring); d + 1];
        for (m, c) in &self.terms {
            let mut m2 = m.clone();
            let e = m2.0[i] as usize;
            m2.0[i] = 0;
            out[e].terms.insert(m2, c.clone());
        }
        if self.is_zero() {
            out.clear();
        }
        out
    }

    pub fn from_coeffs_in(ring: &VarSet, i: usize, coeffs: &[MPoly]) -> MPoly {
        let mut r = MPoly::zero(ring);
        for (k, c) in coeffs.iter().enumerate() {
            for (m, a) in &c.terms {
                let mut m2 = m.clone();
                m2.0[i] += k as u32;
                r.add_term(m2, a);
            }
        }
        r
    }

    /// Leading coefficient with respect to variable `i`.
    pub fn lc_in(&self, i: usize) -> MPoly {
        self.coeffs_in(i).pop().unwrap_or_else(|| MPoly::zero(&self.ring))
    }

    /// Homogeneous component of total degree `k`.
    pub fn homogeneous_part(&self, k: u32) -> MPoly {
        MPoly {
            ring: self.ring.clone(),
            terms: self.terms.iter().filter(|(m, _)| m.degree() == k).map(|(m, c)| (m.clone(), c.clone())).collect(),
        }
    }

    /// Exact quotient `self / g`, or `None` when `g` does not divide.
    pub fn div_exact(&self, g: &MPoly) -> Option<MPoly> {
        assert!(!g.is_zero(), "division by zero polynomial");
        assert!(self.ring == g.ring, "ring mismatch in division");
        if let Some(c) = g.constant_value() {
            return Some(self.scale(&c.inv().ok()?));
        }
        let (mg, cg) = g.leading().map(|(m, c)| (m.clone(), c.clone())).unwrap();
        let icg = cg.inv().ok()?;
        let mut q = MPoly::zero(&self.ring);
        let mut r = self.clone();
        let mut steps = 0usize;
        while let Some((mr, cr)) = r.leading().map(|(m, c)| (m.clone(), c.clone())) {
            if !mg.divides(&mr) {
                return None;
            }
            let mt = mr.div(&mg);
            let ct = &cr * &icg;
            for (m, c) in &g.terms {
                r.add_term(m.mul(&mt), &-(c * &ct));
            }
            q.terms.insert(mt, ct);
            steps += 1;
            if steps.is_multiple_of(64) {
                limits::check_deadline();
            }
        }
        Some(q)
    }

    /// Exact quotient, with [`PolyError::NotDivisible`] on failure.
    pub fn try_div(&self, g: &MPoly) -> Result<MPoly, PolyError> {
        if g.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        self.same_ring(g)?;
        self.div_exact(g).ok_or(PolyError::NotDivisible)
    }

    /// Largest `k` with `g^k | self` together with the cofactor.
    pub fn remove_factor(&self, g: &MPoly) -> (u32, MPoly) {
        let mut k = 0;
        let mut cur = self.clone();
        if cur.is_zero() || g.is_constant() {
            return (0, cur);
        }
        while let Some(q) = cur.div_exact(g) {
            k += 1;
            cur = q;
        }
        (k, cur)
    }

    /// Total degree counting only the listed variables.
    pub fn degree_in_vars(&self, vars: &[usize]) -> Option<u32> {
        self.terms.keys().map(|m| vars.iter().map(|&i| m.0[i]).sum()).max()
    }

    /// True when every term has the same degree in the listed variables.
    pub fn is_homogeneous_in(&self, vars: &[usize]) -> bool {
        let mut it = self.terms.keys().map(|m| vars.iter().map(|&i| m.0[i]).sum::<u32>());
        match it.next() {
            None => true,
            Some(d) => it.all(|e| e == d),
        }
    }

    /// Multiply each term by `h^(degree - deg_vars(term))`.
    pub fn homogenize_in(&self, vars: &[usize], h: usize, degree: u32) -> MPoly {
        let mut r = MPoly::zero(&self.ring);
        for (m, c) in &self.terms {
            let d: u32 = vars.iter().map(|&i| m.0[i]).sum();
            assert!(d <= degree, "homogenize: degree too small");
            let mut m2 = m.clone();
            m2.0[h] += degree - d;
            r.add_term(m2, c);
        }
        r
    }

    /// Homogenize with the variable `h`, which must belong to the ring and be unused.
    pub fn homogenize(&self, h: usize, degree: u32) -> MPoly {
        let mut r = MPoly::zero(&self.ring);
        for (m, c) in &self.terms {
            let mut m2 = m.clone();
            let d = m.degree();
            assert!(d <= degree, "homogenize: degree too small");
            m2.0[h] += degree - d;
            r.terms.insert(m2, c.clone());
        }
        r
    }

    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<serde_json::Value> = self
            .terms
            .iter()
            .rev()
            .map(|(m, c)| {
                let [c0, c1, c2, c3] = c.coords();
                serde_json::json!({
                    "exp": m.0.to_vec(),
                    "coeff": {"c0": c0.to_string(), "c1": c1.to_string(), "c2": c2.to_string(), "c3": c3.to_string()}
                })
            })
            .collect();
        serde_json::json!({"ring": self.ring.names(), "terms": terms})
    }

    pub fn from_json(v: &serde_json::Value) -> Result<MPoly, PolyError> {
        let bad = |s: &str| PolyError::Json(s.to_string());
        let names: Vec<String> = v
            .get("ring")
            .and_then(|r| r.as_array())
            .ok_or_else(|| bad("missing ring"))?
            .iter()
            .map(|n| n.as_str().map(str::to_string).ok_or_else(|| bad("ring entry")))
            .collect::<Result<_, _>>()?;
        let ring = VarSet::new(&names)?;
        let mut p = MPoly::zero(&ring);
        for t in v.get("terms").and_then(|t| t.as_array()).ok_or_else(|| bad("missing terms"))? {
            let exps: Vec<u32> = t
                .get("exp")
                .and_then(|e| e.as_array())
                .ok_or_else(|| bad("exp"))?
                .iter()
                .map(|e| e.as_u64().map(|x| x as u32).ok_or_else(|| bad("exp entry")))
                .collect::<Result<_, _>>()?;
            if exps.len() != ring.len() {
                return Err(bad("exp length"));
            }
            let co = t.get("coeff").ok_or_else(|| bad("coeff"))?;
            let mut cs = Vec::with_capacity(4);
            for k in ["c0", "c1", "c2", "c3"] {
                let s = co.get(k).and_then(|s| s.as_str()).unwrap_or("0");
                cs.push(s.parse::<Rational>().map_err(|_| bad("rational"))?);
            }
            let c = FieldElem::new(cs[0].clone(), cs[1].clone(), cs[2].clone(), cs[3].clone());
            p.add_term(Monomial(exps.into_iter().collect()), &c);
        }
        Ok(p)
    }

    /// True when `self = c * other` for a nonzero constant `c`.
    pub fn proportional(&self, other: &MPoly) -> bool {
        if self.is_zero() || other.is_zero() {
            return self.is_zero() && other.is_zero();
        }
        if self.ring != other.ring || self.terms.len() != other.terms.len() {
            return false;
        }
        let (m1, c1) = self.leading().unwrap();
        let (m2, c2) = other.leading().unwrap();
        if m1 != m2 {
            return false;
        }
        let ratio = c1.div(c2).unwrap();
        self.terms.iter().zip(other.terms.iter()).all(|((a, ca), (b, cb))| a == b && *ca == cb * &ratio)
    }
}

impl<'a> Add<&'a MPoly> for &'a MPoly {
    type Output = MPoly;
    fn add(self, o: &MPoly) -> MPoly {
        self.checked_add(o).expect("ring mismatch in addition")
    }
}

impl<'a> Sub<&'a MPoly> for &'a MPoly {
    type Output = MPoly;
    fn sub(self, o: &MPoly) -> MPoly {
        self.checked_sub(o).expect("ring mismatch in subtraction")
    }
}

impl<'a> Mul<&'a MPoly> for &'a MPoly {
    type Output = MPoly;
    fn mul(self, o: &MPoly) -> MPoly {
        self.checked_mul(o).expect("ring mismatch in multiplication")
    }
}

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        MPoly { ring: self.ring.clone(), terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }
}

impl Neg for MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        -&self
    }
}

macro_rules! forward_poly {
    ($tr:ident, $m:ident) => {
        impl $tr<MPoly> for MPoly {
            type Output = MPoly;
            fn $m(self, o: MPoly) -> MPoly {
                (&self).$m(&o)
            }
        }
        impl<'a> $tr<&'a MPoly> for MPoly {
            type Output = MPoly;
            fn $m(self, o: &MPoly) -> MPoly {
                (&self).$m(o)
            }
        }
        impl<'a> $tr<MPoly> for &'a MPoly {
            type Output = MPoly;
            fn $m(self, o: MPoly) -> MPoly {
                self.$m(&o)
            }
        }
    };
}
forward_poly!(Add, add);
forward_poly!(Sub, sub);
forward_poly!(Mul, mul);

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            let mono: Vec<String> = m
                .0
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| if e == 1 { self.ring.name(i).to_string() } else { format!("{}^{}", self.ring.name(i), e) })
                .collect();
            let mono = mono.join("*");
            let simple = c.support_len() == 1;
            let neg = simple && c.leading_sign_negative();
            let a = if neg { -c } else { c.clone() };
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let cs = if simple { a.to_string() } else { format!("({})", a) };
            if mono.is_empty() {
                f.write_str(&cs)?;
            } else if a.is_one() {
                f.write_str(&mono)?;
            } else {
                write!(f, "{}*{}", cs, mono)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r2() -> VarSet {
        VarSet::of(&["x", "y"])
    }

    #[test]
    fn arithmetic_examples() {
        let r = r2();
        let x = MPoly::var(&r, "x").unwrap();
        let y = MPoly::var(&r, "y").unwrap();
        assert_eq!((&x + &y) * (&x - &y), &x * &x - &y * &y);
        let one = MPoly::one(&r);
        assert_eq!((&x * &x + &one) + (-(&x * &x)), one);
        let lhs = (&y - &x).pow(2) * &x;
        assert_eq!(lhs.to_string(), "x^3 - 2*x^2*y + x*y^2");
    }

    #[test]
    fn ring_mismatch() {
        let a = MPoly::var(&r2(), "x").unwrap();
        let b = MPoly::var(&VarSet::of(&["x", "z"]), "x").unwrap();
        assert_eq!(a.checked_add(&b), Err(PolyError::RingMismatch));
    }

    #[test]
    fn derivatives() {
        let r = r2();
        let x = MPoly::var(&r, "x").unwrap();
        let y = MPoly::var(&r, "y").unwrap();
        assert_eq!((x.pow(3) * &y).derivative("x").unwrap(), x.pow(2) * &y * MPoly::from_int(&r, 3));
        assert!(MPoly::from_int(&r, 5).derivative("y").unwrap().is_zero());
        assert!(matches!(x.derivative("w"), Err(PolyError::UnknownVariable(_))));
    }

    #[test]
    fn substitution() {
        let r = VarSet::of(&["x", "y", "p", "q"]);
        let v = |n: &str| MPoly::var(&r, n).unwrap();
        let f = v("y").pow(3);
        let g = f.substitute(&[("y", &v("p") * &v("x") - v("q"))]).unwrap();
        assert_eq!(g, (&v("p") * &v("x") - v("q")).pow(3));
        let h = &v("x") * &v("x") + &v("y") * &v("y");
        assert_eq!(h.substitute(&[("x", v("y")), ("y", v("x"))]).unwrap(), h);
    }

    #[test]
    fn exact_division() {
        let r = r2();
        let x = MPoly::var(&r, "x").unwrap();
        let y = MPoly::var(&r, "y").unwrap();
        let f = (&x + &y).pow(3) * (&x - &y);
        assert_eq!(f.div_exact(&(&x - &y)).unwrap(), (&x + &y).pow(3));
        assert!(f.div_exact(&(&x + MPoly::one(&r))).is_none());
        assert_eq!(f.remove_factor(&(&x + &y)).0, 3);
    }

    #[test]
    fn json_roundtrip() {
        let r = r2();
        let x = MPoly::var(&r, "x").unwrap();
        let f = x.pow(2).scale(&(FieldElem::i() + FieldElem::from_frac(1, 3))) - MPoly::var(&r, "y").unwrap();
        assert_eq!(MPoly::from_json(&f.to_json()).unwrap(), f);
    }
}

//! Exact arithmetic in `Q(i, sqrt3)`.
//!
//! Elements are stored by their coordinates in the basis `{1, i, sqrt3, i*sqrt3}`.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;

use num_traits::{One, Signed, Zero};

use crate::error::FieldError;

/// Arbitrary precision rational number.
pub type Rational = num_rational::BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Square root of a rational number if it is a perfect square.
pub fn rational_sqrt(q: &Rational) -> Option<Rational> {
    if q.is_negative() {
        return None;
    }
    let n = q.numer();
    let d = q.denom();
    let rn = n.sqrt();
    let rd = d.sqrt();
    if &(&rn * &rn) == n && &(&rd * &rd) == d {
        Some(Rational::new(rn, rd))
    } else {
        None
    }
}

/// An element `c0 + c1*i + c2*sqrt3 + c3*i*sqrt3`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FieldElem {
    c: [Rational; 4],
}

impl FieldElem {
    pub fn new(c0: Rational, c1: Rational, c2: Rational, c3: Rational) -> Self {
        FieldElem { c: [c0, c1, c2, c3] }
    }

    pub fn from_rational(q: Rational) -> Self {
        FieldElem::new(q, Rational::zero(), Rational::zero(), Rational::zero())
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(rat_int(n))
    }

    pub fn from_frac(n: i64, d: i64) -> Self {
        Self::from_rational(rat(n, d))
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        FieldElem::new(Rational::zero(), Rational::one(), Rational::zero(), Rational::zero())
    }

    pub fn sqrt3() -> Self {
        FieldElem::new(Rational::zero(), Rational::zero(), Rational::one(), Rational::zero())
    }

    pub fn i_sqrt3() -> Self {
        FieldElem::new(Rational::zero(), Rational::zero(), Rational::zero(), Rational::one())
    }

    /// Coordinates in the basis `{1, i, sqrt3, i*sqrt3}`.
    pub fn coords(&self) -> &[Rational; 4] {
        &self.c
    }

    pub fn is_rational(&self) -> bool {
        self.c[1].is_zero() && self.c[2].is_zero() && self.c[3].is_zero()
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        if self.is_rational() {
            Some(&self.c[0])
        } else {
            None
        }
    }

    /// Image under `i -> -i`.
    pub fn conj_i(&self) -> Self {
        let [a, b, c, d] = &self.c;
        FieldElem::new(a.clone(), -b, c.clone(), -d)
    }

    /// Image under `sqrt3 -> -sqrt3`.
    pub fn conj_sqrt3(&self) -> Self {
        let [a, b, c, d] = &self.c;
        FieldElem::new(a.clone(), b.clone(), -c, -d)
    }

    pub fn conj_both(&self) -> Self {
        let [a, b, c, d] = &self.c;
        FieldElem::new(a.clone(), -b, -c, d.clone())
    }

    /// Absolute norm down to `Q`: product of the four conjugates.
    pub fn norm(&self) -> Rational {
        let p = self * &self.conj_i() * self.conj_sqrt3() * self.conj_both();
        debug_assert!(p.is_rational());
        p.c[0].clone()
    }

    pub fn inv(&self) -> Result<FieldElem, FieldError> {
        if self.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        if let Some(q) = self.as_rational() {
            return Ok(FieldElem::from_rational(q.recip()));
        }
        let others = self.conj_i() * self.conj_sqrt3() * self.conj_both();
        let n = (self * &others).c[0].clone();
        Ok(others.scale(&n.recip()))
    }

    pub fn div(&self, other: &FieldElem) -> Result<FieldElem, FieldError> {
        Ok(self * &other.inv()?)
    }

    pub fn scale(&self, q: &Rational) -> FieldElem {
        FieldElem { c: [&self.c[0] * q, &self.c[1] * q, &self.c[2] * q, &self.c[3] * q] }
    }

    pub fn pow(&self, mut e: u32) -> FieldElem {
        let mut base = self.clone();
        let mut acc = FieldElem::one();
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

    /// A square root inside the field, if one exists.
    pub fn sqrt(&self) -> Option<FieldElem> {
        if self.is_zero() {
            return Some(FieldElem::zero());
        }
        // Tower Q(sqrt3)(i): write self = u + v*i with u, v in Q(sqrt3).
        let u = Quad::new(self.c[0].clone(), self.c[2].clone());
        let v = Quad::new(self.c[1].clone(), self.c[3].clone());
        if v.is_zero() {
            if let Some(s) = u.sqrt() {
                return Some(s.with_i(Quad::zero()));
            }
            // u = -(t^2)
            return u.neg().sqrt().map(|t| Quad::zero().with_i(t));
        }
        let n = u.mul(&u).add(&v.mul(&v));
        let rn = n.sqrt()?;
        let half = rat(1, 2);
        for sign in [1i64, -1] {
            let s2 = u.add(&rn.scale(&rat_int(sign))).scale(&half);
            if s2.is_zero() {
                continue;
            }
            if let Some(s) = s2.sqrt() {
                let t = v.mul(&s.scale(&rat_int(2)).inv());
                let cand = s.with_i(t);
                if &(&cand * &cand) == self {
                    return Some(cand);
                }
            }
        }
        None
    }

    /// Complex value with `sqrt3` taken positive.
    pub fn to_complex(&self) -> num_complex::Complex64 {
        let f = |q: &Rational| -> f64 { rational_to_f64(q) };
        let s = 3f64.sqrt();
        num_complex::Complex64::new(f(&self.c[0]) + s * f(&self.c[2]), f(&self.c[1]) + s * f(&self.c[3]))
    }

    fn fmt_part(q: &Rational, unit: &str, first: bool, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let neg = q.is_negative();
        let a = q.abs();
        if !first {
            f.write_str(if neg { " - " } else { " + " })?;
        } else if neg {
            f.write_str("-")?;
        }
        if unit.is_empty() {
            write!(f, "{}", a)
        } else if a.is_one() {
            f.write_str(unit)
        } else {
            write!(f, "{}*{}", a, unit)
        }
    }

    /// Number of nonzero basis coordinates.
    pub fn support_len(&self) -> usize {
        self.c.iter().filter(|q| !q.is_zero()).count()
    }

    /// True when the printed form starts with a minus sign.
    pub fn leading_sign_negative(&self) -> bool {
        self.c.iter().find(|q| !q.is_zero()).map(|q| q.is_negative()).unwrap_or(false)
    }
}

pub(crate) fn rational_to_f64(q: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    match (q.numer().to_f64(), q.denom().to_f64()) {
        (Some(n), Some(d)) if n.is_finite() && d.is_finite() => n / d,
        _ => {
            // scale down huge values
            let bits = q.numer().bits().max(q.denom().bits()) as i64 - 900;
            let sh = bits.max(0) as usize;
            let n = (q.numer() >> sh).to_f64().unwrap_or(0.0);
            let d = (q.denom() >> sh).to_f64().unwrap_or(1.0);
            n / d
        }
    }
}

/// Element `a + b*sqrt3` of the real quadratic subfield.
#[derive(Clone, PartialEq, Debug)]
struct Quad {
    a: Rational,
    b: Rational,
}

impl Quad {
    fn new(a: Rational, b: Rational) -> Self {
        Quad { a, b }
    }
    fn zero() -> Self {
        Quad::new(Rational::zero(), Rational::zero())
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
    fn add(&self, o: &Quad) -> Quad {
        Quad::new(&self.a + &o.a, &self.b + &o.b)
    }
    fn neg(&self) -> Quad {
        Quad::new(-&self.a, -&self.b)
    }
    fn mul(&self, o: &Quad) -> Quad {
        Quad::new(&self.a * &o.a + rat_int(3) * &self.b * &o.b, &self.a * &o.b + &self.b * &o.a)
    }
    fn scale(&self, q: &Rational) -> Quad {
        Quad::new(&self.a * q, &self.b * q)
    }
    fn inv(&self) -> Quad {
        let n = &self.a * &self.a - rat_int(3) * &self.b * &self.b;
        Quad::new(&self.a / &n, -&self.b / &n)
    }
    fn with_i(&self, t: Quad) -> FieldElem {
        FieldElem::new(self.a.clone(), t.a, self.b.clone(), t.b)
    }
    fn sqrt(&self) -> Option<Quad> {
        if self.b.is_zero() {
            if let Some(r) = rational_sqrt(&self.a) {
                return Some(Quad::new(r, Rational::zero()));
            }
            // a = 3*d^2
            return rational_sqrt(&(&self.a / rat_int(3))).map(|d| Quad::new(Rational::zero(), d));
        }
        let disc = &self.a * &self.a - rat_int(3) * &self.b * &self.b;
        let r = rational_sqrt(&disc)?;
        for t in [(&self.a + &r) / rat_int(2), (&self.a - &r) / rat_int(2)] {
            if t.is_zero() {
                continue;
            }
            if let Some(g) = rational_sqrt(&t) {
                let d = &self.b / (rat_int(2) * &g);
                let c = Quad::new(g, d);
                if &c.mul(&c) == self {
                    return Some(c);
                }
            }
        }
        None
    }
}

impl Zero for FieldElem {
    fn zero() -> Self {
        FieldElem::from_rational(Rational::zero())
    }
    fn is_zero(&self) -> bool {
        self.c.iter().all(|q| q.is_zero())
    }
}

impl One for FieldElem {
    fn one() -> Self {
        FieldElem::from_int(1)
    }
}

impl From<i64> for FieldElem {
    fn from(n: i64) -> Self {
        FieldElem::from_int(n)
    }
}

impl From<Rational> for FieldElem {
    fn from(q: Rational) -> Self {
        FieldElem::from_rational(q)
    }
}

impl<'a> Add<&'a FieldElem> for &'a FieldElem {
    type Output = FieldElem;
    fn add(self, o: &FieldElem) -> FieldElem {
        FieldElem { c: [&self.c[0] + &o.c[0], &self.c[1] + &o.c[1], &self.c[2] + &o.c[2], &self.c[3] + &o.c[3]] }
    }
}

impl<'a> Sub<&'a FieldElem> for &'a FieldElem {
    type Output = FieldElem;
    fn sub(self, o: &FieldElem) -> FieldElem {
        FieldElem { c: [&self.c[0] - &o.c[0], &self.c[1] - &o.c[1], &self.c[2] - &o.c[2], &self.c[3] - &o.c[3]] }
    }
}

impl<'a> Mul<&'a FieldElem> for &'a FieldElem {
    type Output = FieldElem;
    fn mul(self, o: &FieldElem) -> FieldElem {
        if o.is_rational() {
            return self.scale(&o.c[0]);
        }
        if self.is_rational() {
            return o.scale(&self.c[0]);
        }
        let [a0, a1, a2, a3] = &self.c;
        let [b0, b1, b2, b3] = &o.c;
        let three = rat_int(3);
        let c0 = a0 * b0 - a1 * b1 + &three * (a2 * b2 - a3 * b3);
        let c1 = a0 * b1 + a1 * b0 + &three * (a2 * b3 + a3 * b2);
        let c2 = a0 * b2 + a2 * b0 - (a1 * b3 + a3 * b1);
        let c3 = a0 * b3 + a3 * b0 + a1 * b2 + a2 * b1;
        FieldElem { c: [c0, c1, c2, c3] }
    }
}

impl Neg for &FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        FieldElem { c: [-&self.c[0], -&self.c[1], -&self.c[2], -&self.c[3]] }
    }
}

impl Neg for FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<FieldElem> for FieldElem {
            type Output = FieldElem;
            fn $m(self, o: FieldElem) -> FieldElem {
                (&self).$m(&o)
            }
        }
        impl<'a> $tr<&'a FieldElem> for FieldElem {
            type Output = FieldElem;
            fn $m(self, o: &FieldElem) -> FieldElem {
                (&self).$m(o)
            }
        }
        impl<'a> $tr<FieldElem> for &'a FieldElem {
            type Output = FieldElem;
            fn $m(self, o: FieldElem) -> FieldElem {
                self.$m(&o)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl AddAssign<&FieldElem> for FieldElem {
    fn add_assign(&mut self, o: &FieldElem) {
        for k in 0..4 {
            self.c[k] += &o.c[k];
        }
    }
}

impl SubAssign<&FieldElem> for FieldElem {
    fn sub_assign(&mut self, o: &FieldElem) {
        for k in 0..4 {
            self.c[k] -= &o.c[k];
        }
    }
}

impl MulAssign<&FieldElem> for FieldElem {
    fn mul_assign(&mut self, o: &FieldElem) {
        *self = &*self * o;
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let units = ["", "i", "sqrt3", "i*sqrt3"];
        let mut first = true;
        for (q, u) in self.c.iter().zip(units) {
            if !q.is_zero() {
                Self::fmt_part(q, u, first, f)?;
                first = false;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

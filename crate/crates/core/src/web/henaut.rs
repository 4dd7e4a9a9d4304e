use std::cell::OnceCell;

use crate::exactfield::FieldElem;
use crate::multipoly::MPoly;

type Matrix = Vec<Vec<MPoly>>;

/// The three 5x5 matrices `(R, alpha_1, alpha_2)` of a cubic
/// `a0 w^3 + a1 w^2 + a2 w + a3`; `u` is variable 0 and `v` variable 1.
pub fn henaut_matrices(a: &[MPoly]) -> (Matrix, Matrix, Matrix) {
    assert_eq!(a.len(), 4, "cubic expected");
    let z = MPoly::zero(a[0].ring());
    let k = |n: i64, f: &MPoly| f.scale(&FieldElem::from_int(n));
    let du = |f: &MPoly| f.derivative_idx(0);
    let dv = |f: &MPoly| f.derivative_idx(1);
    let r = vec![
        vec![a[0].clone(), a[1].clone(), a[2].clone(), a[3].clone(), z.clone()],
        vec![z.clone(), a[0].clone(), a[1].clone(), a[2].clone(), a[3].clone()],
        vec![k(3, &a[0]), k(2, &a[1]), a[2].clone(), z.clone(), z.clone()],
        vec![z.clone(), k(3, &a[0]), k(2, &a[1]), a[2].clone(), z.clone()],
        vec![z.clone(), z.clone(), k(3, &a[0]), k(2, &a[1]), a[2].clone()],
    ];
    let d = [
        dv(&a[0]),
        &du(&a[0]) + &dv(&a[1]),
        &du(&a[1]) + &dv(&a[2]),
        &du(&a[2]) + &dv(&a[3]),
        du(&a[3]),
    ];
    let tail = |i: usize| -> [MPoly; 3] {
        match i {
            0 => [-&a[0], z.clone(), z.clone()],
            1 => [z.clone(), k(-2, &a[0]), z.clone()],
            2 => [a[2].clone(), -&a[1], k(-3, &a[0])],
            3 => [k(2, &a[3]), z.clone(), k(-2, &a[1])],
            _ => [z.clone(), a[3].clone(), -&a[2]],
        }
    };
    let shifted_down = [z.clone(), a[0].clone(), a[1].clone(), a[2].clone(), a[3].clone()];
    let shifted_up = [a[0].clone(), a[1].clone(), a[2].clone(), a[3].clone(), z.clone()];
    let mut m1 = Vec::with_capacity(5);
    let mut m2 = Vec::with_capacity(5);
    for i in 0..5 {
        let t = tail(i);
        let mut row1 = vec![d[i].clone(), shifted_up[i].clone()];
        row1.extend(t.iter().cloned());
        let mut row2 = vec![shifted_down[i].clone(), d[i].clone()];
        row2.extend(t.iter().cloned());
        m1.push(row1);
        m2.push(row2);
    }
    (r, m1, m2)
}

/// `K = numerator / denominator du ^ dv`, with `denominator = R^2`.
#[derive(Clone, Debug)]
pub struct Curvature2Form {
    numerator: MPoly,
    denominator: MPoly,
    reduced: OnceCell<(MPoly, MPoly)>,
}

impl PartialEq for Curvature2Form {
    fn eq(&self, other: &Self) -> bool {
        self.equals(&other.numerator, &other.denominator)
    }
}

impl Curvature2Form {
    pub fn new(numerator: MPoly, denominator: MPoly) -> Self {
        assert!(!denominator.is_zero(), "zero denominator");
        Curvature2Form { numerator, denominator, reduced: OnceCell::new() }
    }

    pub fn numerator(&self) -> &MPoly {
        &self.numerator
    }

    pub fn denominator(&self) -> &MPoly {
        &self.denominator
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    /// Numerator and denominator divided by their gcd, denominator monic.
    pub fn reduced(&self) -> &(MPoly, MPoly) {
        self.reduced.get_or_init(|| {
            if self.numerator.is_zero() {
                let one = MPoly::one(self.numerator.ring());
                return (self.numerator.clone(), one);
            }
            let g = self.numerator.gcd(&self.denominator);
            let n = self.numerator.div_exact(&g).expect("gcd divides");
            let d = self.denominator.div_exact(&g).expect("gcd divides");
            let lc = d.leading_coeff().inv().expect("nonzero");
            (n.scale(&lc), d.scale(&lc))
        })
    }

    /// Exact equality with `num / den`, by cross-multiplication.
    pub fn equals(&self, num: &MPoly, den: &MPoly) -> bool {
        &self.numerator * den == num * &self.denominator
    }

    /// Equality with `num / den` up to a nonzero constant factor.
    pub fn proportional_to(&self, num: &MPoly, den: &MPoly) -> bool {
        (&self.numerator * den).proportional(&(num * &self.denominator))
    }
}

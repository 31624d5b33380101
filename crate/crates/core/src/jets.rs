//! Truncated power-series (jet) arithmetic over real and complex scalars.
//!
//! A `Jet` of order `K` stores Taylor-normalized coefficients `c[k] = f^(k)(0)/k!`
//! for `k = 0..=K`. All operations truncate strictly at order `K`; nothing past
//! the last coefficient is ever read or written.

use std::ops::{Add, Div, Mul, Neg, Sub};

use num_complex::Complex64;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum JetError {
    #[error("jet order mismatch: {0} vs {1}")]
    OrderMismatch(usize, usize),
    #[error("singular jet: {0}")]
    Singular(&'static str),
    #[error("jet domain error: {0}")]
    Domain(&'static str),
}

/// Scalar field a jet can be built over. Implemented for `f64` and `Complex64`.
pub trait Scalar:
    Copy
    + PartialEq
    + std::fmt::Debug
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn from_f64(x: f64) -> Self;
    fn modulus(self) -> f64;
    fn real_part(self) -> f64;
    fn imag_part(self) -> f64;
    /// `base^self` for a strictly positive real base (principal branch).
    fn pow_of_positive(self, base: f64) -> Self;
}

impl Scalar for f64 {
    fn zero() -> Self {
        0.0
    }
    fn one() -> Self {
        1.0
    }
    fn from_f64(x: f64) -> Self {
        x
    }
    fn modulus(self) -> f64 {
        self.abs()
    }
    fn real_part(self) -> f64 {
        self
    }
    fn imag_part(self) -> f64 {
        0.0
    }
    fn pow_of_positive(self, base: f64) -> Self {
        base.powf(self)
    }
}

impl Scalar for Complex64 {
    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn one() -> Self {
        Complex64::new(1.0, 0.0)
    }
    fn from_f64(x: f64) -> Self {
        Complex64::new(x, 0.0)
    }
    fn modulus(self) -> f64 {
        self.norm()
    }
    fn real_part(self) -> f64 {
        self.re
    }
    fn imag_part(self) -> f64 {
        self.im
    }
    fn pow_of_positive(self, base: f64) -> Self {
        (self * base.ln()).exp()
    }
}

/// Truncated Taylor series of fixed order.
#[derive(Debug, Clone, PartialEq)]
pub struct Jet<S: Scalar> {
    coeffs: Vec<S>,
}

pub type RJet = Jet<f64>;
pub type CJet = Jet<Complex64>;

impl<S: Scalar> Jet<S> {
    pub fn from_coeffs(coeffs: Vec<S>) -> Self {
        assert!(!coeffs.is_empty(), "a jet has at least its constant term");
        Jet { coeffs }
    }

    /// Jet of the constant `c`: coefficients `[c, 0, ..., 0]`.
    pub fn constant(c: S, order: usize) -> Self {
        let mut coeffs = vec![S::zero(); order + 1];
        coeffs[0] = c;
        Jet { coeffs }
    }

    /// Jet of the identity `x0 + r`.
    pub fn variable(x0: S, order: usize) -> Self {
        let mut j = Jet::constant(x0, order);
        if order >= 1 {
            j.coeffs[1] = S::one();
        }
        j
    }

    pub fn zero(order: usize) -> Self {
        Jet {
            coeffs: vec![S::zero(); order + 1],
        }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> S {
        if k < self.coeffs.len() {
            self.coeffs[k]
        } else {
            S::zero()
        }
    }

    pub fn set_coeff(&mut self, k: usize, v: S) {
        self.coeffs[k] = v;
    }

    fn check_order(&self, other: &Self) -> Result<(), JetError> {
        if self.order() != other.order() {
            Err(JetError::OrderMismatch(self.order(), other.order()))
        } else {
            Ok(())
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, JetError> {
        self.check_order(other)?;
        Ok(Jet {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(&a, &b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self, JetError> {
        self.check_order(other)?;
        Ok(Jet {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(&a, &b)| a - b)
                .collect(),
        })
    }

    pub fn neg(&self) -> Self {
        Jet {
            coeffs: self.coeffs.iter().map(|&a| -a).collect(),
        }
    }

    pub fn scale(&self, c: S) -> Self {
        Jet {
            coeffs: self.coeffs.iter().map(|&a| a * c).collect(),
        }
    }

    /// Cauchy product truncated at the common order.
    pub fn mul(&self, other: &Self) -> Result<Self, JetError> {
        self.check_order(other)?;
        let n = self.coeffs.len();
        let mut out = vec![S::zero(); n];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs[..n - i].iter().enumerate() {
                out[i + j] = out[i + j] + a * b;
            }
        }
        Ok(Jet { coeffs: out })
    }

    /// Division by recursive deconvolution; requires `other.coeff(0) != 0`.
    pub fn div(&self, other: &Self) -> Result<Self, JetError> {
        self.check_order(other)?;
        let b0 = other.coeffs[0];
        if b0.modulus() == 0.0 {
            return Err(JetError::Singular("division by jet with zero constant term"));
        }
        let n = self.coeffs.len();
        let mut out = vec![S::zero(); n];
        for k in 0..n {
            let mut acc = self.coeffs[k];
            for j in 1..=k {
                acc = acc - other.coeffs[j] * out[k - j];
            }
            out[k] = acc / b0;
        }
        Ok(Jet { coeffs: out })
    }

    /// `self^alpha` via the recurrence from `h·(h^α)' = α·h'·h^α`.
    ///
    /// The leading coefficient must be real and strictly positive (principal
    /// branch); `alpha` may be any scalar of the field, including complex.
    pub fn powf(&self, alpha: S) -> Result<Self, JetError> {
        let h0 = self.coeffs[0];
        if h0.imag_part().abs() > 1e-14 * (1.0 + h0.modulus()) || h0.real_part() <= 0.0 {
            return Err(JetError::Domain(
                "jet power needs a strictly positive real leading coefficient",
            ));
        }
        let n = self.coeffs.len();
        let mut out = vec![S::zero(); n];
        out[0] = alpha.pow_of_positive(h0.real_part());
        for k in 1..n {
            let mut acc = S::zero();
            for j in 1..=k {
                let jf = S::from_f64(j as f64);
                acc = acc + (alpha * jf) * (self.coeffs[j] * out[k - j]);
                if j < k {
                    let kj = S::from_f64((k - j) as f64);
                    acc = acc - kj * (self.coeffs[j] * out[k - j]);
                }
            }
            out[k] = acc / (S::from_f64(k as f64) * h0);
        }
        Ok(Jet { coeffs: out })
    }

    /// Composition `self ∘ inner` (Horner in the jet ring); requires
    /// `inner.coeff(0) == 0`.
    pub fn compose(&self, inner: &Self) -> Result<Self, JetError> {
        self.check_order(inner)?;
        if inner.coeffs[0].modulus() != 0.0 {
            return Err(JetError::Domain(
                "composition requires the inner jet to vanish at the basepoint",
            ));
        }
        let order = self.order();
        let mut acc = Jet::constant(self.coeffs[order], order);
        for k in (0..order).rev() {
            acc = acc.mul(inner)?;
            acc.coeffs[0] = acc.coeffs[0] + self.coeffs[k];
        }
        Ok(acc)
    }

    /// Compositional inverse: the jet `g` with `self ∘ g = identity`.
    /// Requires `coeff(0) == 0` and `coeff(1) != 0`.
    pub fn revert(&self) -> Result<Self, JetError> {
        if self.coeffs[0].modulus() != 0.0 {
            return Err(JetError::Singular("reversion requires zero constant term"));
        }
        let f1 = self.coeff(1);
        if f1.modulus() == 0.0 {
            return Err(JetError::Singular("reversion requires nonzero linear term"));
        }
        let order = self.order();
        let mut g = Jet::zero(order);
        if order >= 1 {
            g.coeffs[1] = S::one() / f1;
        }
        // Fill one order at a time: with g correct below n, the n-th
        // coefficient of f∘g is f1*g[n] + (terms independent of g[n]).
        for n in 2..=order {
            let h = self.compose(&g)?;
            g.coeffs[n] = -h.coeffs[n] / f1;
        }
        Ok(g)
    }

    /// Derivative, one order lower.
    pub fn derivative(&self) -> Self {
        if self.coeffs.len() == 1 {
            return Jet::zero(0);
        }
        let coeffs = (1..self.coeffs.len())
            .map(|k| self.coeffs[k] * S::from_f64(k as f64))
            .collect();
        Jet { coeffs }
    }

    /// Antiderivative with zero constant term, one order higher.
    pub fn integrate(&self) -> Self {
        let mut coeffs = vec![S::zero(); self.coeffs.len() + 1];
        for (k, &c) in self.coeffs.iter().enumerate() {
            coeffs[k + 1] = c / S::from_f64((k + 1) as f64);
        }
        Jet { coeffs }
    }

    pub fn truncate(&self, order: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.truncate(order + 1);
        while coeffs.len() < order + 1 {
            coeffs.push(S::zero());
        }
        Jet { coeffs }
    }

    /// Divide by `r^m`: drop the first `m` coefficients, which must already be
    /// negligible relative to `scale`.
    pub fn shift_down(&self, m: usize, scale: f64) -> Result<Self, JetError> {
        if m > self.order() {
            return Err(JetError::Domain("shift exceeds jet order"));
        }
        for k in 0..m {
            if self.coeffs[k].modulus() > 1e-9 * scale.max(1e-300) {
                return Err(JetError::Singular(
                    "shift_down applied to a jet that does not vanish to the required order",
                ));
            }
        }
        Ok(Jet {
            coeffs: self.coeffs[m..].to_vec(),
        })
    }

    /// Negate odd coefficients: the jet of `r ↦ f(-r)`.
    pub fn parity_flip(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, &c)| if k % 2 == 1 { -c } else { c })
            .collect();
        Jet { coeffs }
    }

    /// Horner evaluation at a scalar offset.
    pub fn eval(&self, r: S) -> S {
        let mut acc = S::zero();
        for &c in self.coeffs.iter().rev() {
            acc = acc * r + c;
        }
        acc
    }

    pub fn max_coeff_modulus(&self) -> f64 {
        self.coeffs.iter().map(|c| c.modulus()).fold(0.0, f64::max)
    }
}

impl RJet {
    /// Lift a real jet into the complex field.
    pub fn to_complex(&self) -> CJet {
        Jet {
            coeffs: self
                .coeffs
                .iter()
                .map(|&c| Complex64::new(c, 0.0))
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    fn jet(v: &[f64]) -> RJet {
        Jet::from_coeffs(v.to_vec())
    }

    #[test]
    fn mul_truncates() {
        // (1+r)(1-r) = 1 - r^2
        let p = jet(&[1.0, 1.0, 0.0]).mul(&jet(&[1.0, -1.0, 0.0])).unwrap();
        assert_eq!(p.coeffs(), &[1.0, 0.0, -1.0]);
    }

    #[test]
    fn additive_identity() {
        let c = jet(&[3.25, 0.0, 0.0]).add(&Jet::zero(2)).unwrap();
        assert_eq!(c.coeffs(), &[3.25, 0.0, 0.0]);
    }

    #[test]
    fn div_recovers_dividend() {
        let q = jet(&[1.0, 0.0, -1.0]).div(&jet(&[1.0, 1.0, 0.0])).unwrap();
        assert_eq!(q.coeffs(), &[1.0, -1.0, 0.0]);
        let back = q.mul(&jet(&[1.0, 1.0, 0.0])).unwrap();
        for (a, b) in back.coeffs().iter().zip([1.0, 0.0, -1.0]) {
            assert_relative_eq!(*a, b, epsilon = 1e-15);
        }
    }

    #[test]
    fn div_by_zero_leading_is_singular() {
        let e = jet(&[1.0, 0.0]).div(&jet(&[0.0, 1.0]));
        assert!(matches!(e, Err(JetError::Singular(_))));
    }

    #[test]
    fn order_mismatch_is_usage_error() {
        let e = jet(&[1.0, 0.0]).add(&jet(&[1.0, 0.0, 0.0]));
        assert!(matches!(e, Err(JetError::OrderMismatch(1, 2))));
    }

    #[test]
    fn power_square() {
        let p = jet(&[1.0, 1.0, 0.0]).powf(2.0).unwrap();
        for (a, b) in p.coeffs().iter().zip([1.0, 2.0, 1.0]) {
            assert_relative_eq!(*a, b, epsilon = 1e-15);
        }
    }

    #[test]
    fn power_of_one_is_one() {
        let p = jet(&[1.0, 0.0, 0.0, 0.0]).powf(-3.7).unwrap();
        assert_eq!(p.coeffs(), &[1.0, 0.0, 0.0, 0.0]);
    }

    #[test]
    fn power_sqrt_matches_series() {
        // sqrt(1+r) = 1 + r/2 - r^2/8 + r^3/16
        let p = jet(&[1.0, 1.0, 0.0, 0.0]).powf(0.5).unwrap();
        let expect = [1.0, 0.5, -0.125, 0.0625];
        for (a, b) in p.coeffs().iter().zip(expect) {
            assert_relative_eq!(*a, b, epsilon = 1e-15);
        }
        // squaring recovers the base within truncation
        let sq = p.mul(&p).unwrap();
        for (a, b) in sq.coeffs().iter().zip([1.0, 1.0, 0.0, 0.0]) {
            assert_relative_eq!(*a, b, epsilon = 1e-14);
        }
    }

    #[test]
    fn power_rejects_nonpositive_leading() {
        assert!(matches!(
            jet(&[0.0, 1.0]).powf(0.5),
            Err(JetError::Domain(_))
        ));
        assert!(matches!(
            jet(&[-1.0, 1.0]).powf(0.5),
            Err(JetError::Domain(_))
        ));
    }

    #[test]
    fn compose_simple() {
        // f(v) = v + v^2 at v = 2u: 2u + 4u^2
        let f = jet(&[0.0, 1.0, 1.0]);
        let g = jet(&[0.0, 2.0, 0.0]);
        assert_eq!(f.compose(&g).unwrap().coeffs(), &[0.0, 2.0, 4.0]);
    }

    #[test]
    fn compose_identity() {
        let f = jet(&[0.3, -1.0, 2.0, 0.7]);
        let id = Jet::variable(0.0, 3);
        assert_eq!(f.compose(&id).unwrap().coeffs(), f.coeffs());
    }

    #[test]
    fn compose_sine_matches_finite_differences() {
        // f = sin series, g = u + u^2; compare f(g(u)) against central
        // differences of sin(u+u^2) at 0.
        let order = 4;
        let mut f = Jet::zero(order);
        f.set_coeff(1, 1.0);
        f.set_coeff(3, -1.0 / 6.0);
        let mut g = Jet::zero(order);
        g.set_coeff(1, 1.0);
        g.set_coeff(2, 1.0);
        let comp = f.compose(&g).unwrap();
        let h = 1e-2;
        let func = |u: f64| (u + u * u).sin();
        // 4th order central stencils for derivatives 1 and 2
        let d1 = (func(-2.0 * h) - 8.0 * func(-h) + 8.0 * func(h) - func(2.0 * h)) / (12.0 * h);
        let d2 = (-func(-2.0 * h) + 16.0 * func(-h) - 30.0 * func(0.0) + 16.0 * func(h)
            - func(2.0 * h))
            / (12.0 * h * h);
        assert_relative_eq!(comp.coeff(1), d1, epsilon = 1e-7);
        assert_relative_eq!(comp.coeff(2) * 2.0, d2, epsilon = 1e-5);
    }

    #[test]
    fn reversion_example() {
        let g = jet(&[0.0, 1.0, 1.0, 0.0]).revert().unwrap();
        for (a, b) in g.coeffs().iter().zip([0.0, 1.0, -1.0, 2.0]) {
            assert_relative_eq!(*a, b, epsilon = 1e-14);
        }
    }

    #[test]
    fn reversion_linear_and_identity() {
        let g = jet(&[0.0, 4.0, 0.0]).revert().unwrap();
        assert_eq!(g.coeffs(), &[0.0, 0.25, 0.0]);
        let id = jet(&[0.0, 1.0, 0.0, 0.0]).revert().unwrap();
        assert_eq!(id.coeffs(), &[0.0, 1.0, 0.0, 0.0]);
    }

    #[test]
    fn reversion_requires_zero_constant_and_unit() {
        assert!(jet(&[1.0, 1.0]).revert().is_err());
        assert!(jet(&[0.0, 0.0, 1.0]).revert().is_err());
    }

    #[test]
    fn complex_power_law() {
        use num_complex::Complex64 as C;
        let h = Jet::from_coeffs(vec![
            C::new(2.0, 0.0),
            C::new(-0.3, 0.1),
            C::new(0.05, -0.2),
            C::new(0.01, 0.0),
        ]);
        let a = C::new(0.7, 1.3);
        let b = C::new(-1.1, 0.4);
        let lhs = h.powf(a).unwrap().mul(&h.powf(b).unwrap()).unwrap();
        let rhs = h.powf(a + b).unwrap();
        for k in 0..=3 {
            assert!((lhs.coeff(k) - rhs.coeff(k)).norm() < 1e-13 * (1.0 + rhs.coeff(k).norm()));
        }
    }

    proptest! {
        #[test]
        fn ring_axioms(av in proptest::collection::vec(-2.0..2.0f64, 5),
                       bv in proptest::collection::vec(-2.0..2.0f64, 5),
                       cv in proptest::collection::vec(-2.0..2.0f64, 5)) {
            let (a, b, c) = (jet(&av), jet(&bv), jet(&cv));
            let ab_c = a.mul(&b).unwrap().mul(&c).unwrap();
            let a_bc = a.mul(&b.mul(&c).unwrap()).unwrap();
            for k in 0..=4 {
                prop_assert!((ab_c.coeff(k) - a_bc.coeff(k)).abs() < 1e-12);
            }
            let ab = a.mul(&b).unwrap();
            let ba = b.mul(&a).unwrap();
            for k in 0..=4 {
                prop_assert!((ab.coeff(k) - ba.coeff(k)).abs() < 1e-12 * (1.0 + ab.coeff(k).abs()));
            }
            let d1 = a.mul(&b.add(&c).unwrap()).unwrap();
            let d2 = a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap();
            for k in 0..=4 {
                prop_assert!((d1.coeff(k) - d2.coeff(k)).abs() < 1e-12);
            }
        }

        #[test]
        fn power_additivity(h0 in 0.5..3.0f64,
                            hv in proptest::collection::vec(-0.5..0.5f64, 4),
                            alpha in -2.0..2.0f64, beta in -2.0..2.0f64) {
            let mut coeffs = vec![h0];
            coeffs.extend(hv);
            let h = jet(&coeffs);
            let lhs = h.powf(alpha).unwrap().mul(&h.powf(beta).unwrap()).unwrap();
            let rhs = h.powf(alpha + beta).unwrap();
            for k in 0..=4 {
                prop_assert!((lhs.coeff(k) - rhs.coeff(k)).abs()
                    < 1e-10 * (1.0 + rhs.coeff(k).abs()));
            }
        }

        #[test]
        fn compose_revert_is_identity(f1 in 0.3..3.0f64,
                                      fv in proptest::collection::vec(-1.0..1.0f64, 4)) {
            let mut coeffs = vec![0.0, f1];
            coeffs.extend(fv);
            let f = jet(&coeffs);
            let g = f.revert().unwrap();
            let comp = f.compose(&g).unwrap();
            prop_assert!((comp.coeff(1) - 1.0).abs() < 1e-11);
            for k in 2..=5 {
                prop_assert!(comp.coeff(k).abs() < 1e-9);
            }
        }
    }
}

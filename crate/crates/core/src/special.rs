//! Complex gamma function (Lanczos) and the circle closed form built on it.

use num_complex::Complex64;
use std::f64::consts::PI;

// Lanczos approximation, g = 7, 9 terms.
const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_6,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

/// Gamma function for complex argument (principal branch, reflection for
/// Re z < 0.5). Poles at nonpositive integers return infinity.
pub fn gamma(z: Complex64) -> Complex64 {
    if z.re < 0.5 {
        // reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z)
        let s = (PI * z).sin();
        if s.norm() == 0.0 {
            return Complex64::new(f64::INFINITY, 0.0);
        }
        return PI / (s * gamma(Complex64::new(1.0, 0.0) - z));
    }
    let z = z - 1.0;
    let mut acc = Complex64::new(LANCZOS[0], 0.0);
    for (i, &c) in LANCZOS.iter().enumerate().skip(1) {
        acc += c / (z + i as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    (2.0 * PI).sqrt() * t.powc(z + 0.5) * (-t).exp() * acc
}

/// Entire reciprocal gamma: exactly zero at the poles of gamma.
pub fn recip_gamma(z: Complex64) -> Complex64 {
    if z.im == 0.0 && z.re <= 0.0 && z.re == z.re.round() {
        return Complex64::new(0.0, 0.0);
    }
    let g = gamma(z);
    if !g.re.is_finite() || !g.im.is_finite() {
        return Complex64::new(0.0, 0.0);
    }
    1.0 / g
}

/// Closed form for the single-layer beta function of a circle of radius `R`:
/// `R^{s+2} 2^{s+2} pi^{3/2} Gamma((s+1)/2) / Gamma(s/2 + 1)`.
///
/// Derivation: the chord between angles differing by `θ` is `2R sin(θ/2)`,
/// and the angular integral reduces to a Beta integral. Vanishes at
/// s = -2, -4, ... through the reciprocal gamma factor.
pub fn circle_single_layer_closed_form(radius: f64, s: Complex64) -> Complex64 {
    let one = Complex64::new(1.0, 0.0);
    let pref = ((s + 2.0) * radius.ln()).exp() * ((s + 2.0) * 2.0f64.ln()).exp() * PI.powf(1.5);
    pref * gamma((s + one) / 2.0) * recip_gamma(s / 2.0 + one)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn gamma_known_values() {
        assert_relative_eq!(gamma(c(4.0, 0.0)).re, 6.0, epsilon = 1e-12);
        assert_relative_eq!(gamma(c(0.5, 0.0)).re, PI.sqrt(), epsilon = 1e-13);
        assert_relative_eq!(gamma(c(-1.5, 0.0)).re, 4.0 * PI.sqrt() / 3.0, epsilon = 1e-12);
        let g = gamma(c(1.5, 1.5));
        // reference: mpmath
        assert_relative_eq!(g.re, 0.34800683315407423, epsilon = 1e-12);
        assert_relative_eq!(g.im, 0.14138268259358000, epsilon = 1e-12);
        let g2 = gamma(c(4.0, 10.0));
        assert_relative_eq!(g2.re, 7.7153429423996626e-4, max_relative = 1e-11);
        assert_relative_eq!(g2.im, -1.0190827990417124e-3, max_relative = 1e-11);
    }

    #[test]
    fn recip_gamma_zeros() {
        for k in 0..5 {
            assert_eq!(recip_gamma(c(-(k as f64), 0.0)).norm(), 0.0);
        }
        assert_relative_eq!(recip_gamma(c(3.0, 0.0)).re, 0.5, epsilon = 1e-13);
    }

    #[test]
    fn circle_closed_form_integer_points() {
        assert_relative_eq!(
            circle_single_layer_closed_form(1.0, c(0.0, 0.0)).re,
            4.0 * PI * PI,
            epsilon = 1e-12
        );
        assert_relative_eq!(
            circle_single_layer_closed_form(1.0, c(1.0, 0.0)).re,
            16.0 * PI,
            epsilon = 1e-12
        );
        assert_relative_eq!(
            circle_single_layer_closed_form(1.0, c(2.0, 0.0)).re,
            8.0 * PI * PI,
            epsilon = 1e-12
        );
        assert_eq!(circle_single_layer_closed_form(1.0, c(-2.0, 0.0)).norm(), 0.0);
        assert_eq!(circle_single_layer_closed_form(1.0, c(-4.0, 0.0)).norm(), 0.0);
        // reference value at a complex point (mpmath)
        let v = circle_single_layer_closed_form(1.0, c(2.0, 3.0));
        assert_relative_eq!(v.re, -4.7602307212797437, max_relative = 1e-12);
        assert_relative_eq!(v.im, 63.618007482307795, max_relative = 1e-12);
    }

    #[test]
    fn circle_closed_form_radius_scaling() {
        let s = c(3.5, 0.0);
        let v1 = circle_single_layer_closed_form(1.0, s);
        let v2 = circle_single_layer_closed_form(2.0, s);
        assert_relative_eq!(v2.re, v1.re * 2.0f64.powf(5.5), max_relative = 1e-13);
    }
}

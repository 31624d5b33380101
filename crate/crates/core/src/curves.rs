//! Closed curves in 3-space with exact jet evaluation.
//!
//! Every curve kind is lowered to componentwise trigonometric polynomials on
//! the fixed parameter domain `[0, 2π)`, so Taylor coefficients at any
//! parameter come from exact recurrences rather than finite differences.
//! Arclength derivatives are obtained by local series reversion of the
//! arclength jet; the global cumulative arclength uses the spectrally
//! convergent Fourier antiderivative of the speed.

use crate::geom::{pairwise_sum, Jet3, RJet3, Vec3};
use crate::jets::{Jet, RJet};
use std::f64::consts::PI;
use thiserror::Error;

/// Default highest jet order curves hand out.
pub const DEFAULT_MAX_ORDER: usize = 12;
/// Below this curvature the Frenet frame direction is numerically meaningless.
pub const TOL_FRAME: f64 = 1e-8;
/// Minimum chord-arc ratio accepted by the energy evaluators.
pub const MIN_CHORD_ARC: f64 = 1e-3;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum CurveError {
    #[error("curve is not regular: minimal speed {0:.3e}")]
    NotRegular(f64),
    #[error("curve fails the embeddedness gate: chord-arc ratio {0:.3e}")]
    NotEmbedded(f64),
    #[error("invalid curve parameter: {0}")]
    BadParameter(String),
    #[error("Frenet frame undefined: curvature {kappa:.3e} at t={t}")]
    UndefinedFrame { t: f64, kappa: f64 },
    #[error("jet order {requested} exceeds the curve budget {max}")]
    OrderBudget { requested: usize, max: usize },
    #[error("usage: {0}")]
    Usage(&'static str),
    #[error(transparent)]
    Jet(#[from] crate::jets::JetError),
}

/// Trigonometric polynomial `c0 + Σ_k a_k cos(kt) + b_k sin(kt)`.
#[derive(Debug, Clone, PartialEq)]
pub struct TrigPoly {
    pub constant: f64,
    pub cos: Vec<f64>,
    pub sin: Vec<f64>,
}

impl TrigPoly {
    pub fn new(constant: f64, cos: Vec<f64>, sin: Vec<f64>) -> Self {
        let mut p = TrigPoly { constant, cos, sin };
        let n = p.cos.len().max(p.sin.len());
        p.cos.resize(n, 0.0);
        p.sin.resize(n, 0.0);
        p
    }

    pub fn zero() -> Self {
        TrigPoly::new(0.0, vec![], vec![])
    }

    pub fn degree(&self) -> usize {
        self.cos.len()
    }

    pub fn eval(&self, t: f64) -> f64 {
        let mut acc = self.constant;
        for k in 0..self.cos.len() {
            let kt = (k + 1) as f64 * t;
            acc += self.cos[k] * kt.cos() + self.sin[k] * kt.sin();
        }
        acc
    }

    /// Exact Taylor coefficients at `t`: the k-th derivative of `cos(nt)` is
    /// `n^k cos(nt + kπ/2)`, cycled through the quadrant table.
    pub fn eval_jet(&self, t: f64, order: usize) -> RJet {
        let mut coeffs = vec![0.0; order + 1];
        coeffs[0] = self.constant;
        for h in 0..self.cos.len() {
            let n = (h + 1) as f64;
            let (a, b) = (self.cos[h], self.sin[h]);
            if a == 0.0 && b == 0.0 {
                continue;
            }
            let (s0, c0) = (n * t).sin_cos();
            let mut factor = 1.0; // n^k / k!
            for k in 0..=order {
                if k > 0 {
                    factor *= n / k as f64;
                }
                let (ck, sk) = match k % 4 {
                    0 => (c0, s0),
                    1 => (-s0, c0),
                    2 => (-c0, -s0),
                    _ => (s0, -c0),
                };
                coeffs[k] += factor * (a * ck + b * sk);
            }
        }
        Jet::from_coeffs(coeffs)
    }

    pub fn scaled(&self, lambda: f64) -> Self {
        TrigPoly::new(
            self.constant * lambda,
            self.cos.iter().map(|c| c * lambda).collect(),
            self.sin.iter().map(|c| c * lambda).collect(),
        )
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum CurveKind {
    Circle { radius: f64 },
    Ellipse { a: f64, b: f64 },
    TorusKnot { p: u32, q: u32, major: f64, minor: f64 },
    Fourier,
}

impl std::fmt::Display for CurveKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CurveKind::Circle { radius } => write!(f, "circle({radius})"),
            CurveKind::Ellipse { a, b } => write!(f, "ellipse({a},{b})"),
            CurveKind::TorusKnot { p, q, major, minor } => {
                write!(f, "torus_knot({p},{q},{major},{minor})")
            }
            CurveKind::Fourier => write!(f, "fourier"),
        }
    }
}

/// Fourier series of the speed, integrated in closed form. Gives cumulative
/// arclength anywhere on the period to near machine precision.
#[derive(Debug, Clone)]
struct ArcTable {
    mean: f64,
    cos: Vec<f64>,
    sin: Vec<f64>,
}

impl ArcTable {
    fn build(speed_samples: &[f64]) -> ArcTable {
        let m = speed_samples.len();
        let mean = pairwise_sum(speed_samples) / m as f64;
        let mut cos = Vec::new();
        let mut sin = Vec::new();
        let scale = mean.abs().max(1e-300);
        let mut quiet = 0usize;
        for k in 1..m / 2 {
            let (mut ak, mut bk) = (0.0, 0.0);
            for (j, &sp) in speed_samples.iter().enumerate() {
                let ang = 2.0 * PI * (k * j) as f64 / m as f64;
                ak += sp * ang.cos();
                bk += sp * ang.sin();
            }
            ak *= 2.0 / m as f64;
            bk *= 2.0 / m as f64;
            cos.push(ak);
            sin.push(bk);
            if ak.abs() + bk.abs() < 1e-17 * scale {
                quiet += 1;
                if quiet >= 8 {
                    break;
                }
            } else {
                quiet = 0;
            }
        }
        ArcTable { mean, cos, sin }
    }

    /// Arclength from parameter 0 to `t` (valid for any real `t`).
    fn arclength(&self, t: f64) -> f64 {
        let mut acc = self.mean * t;
        for (i, (&a, &b)) in self.cos.iter().zip(&self.sin).enumerate() {
            let k = (i + 1) as f64;
            acc += a * (k * t).sin() / k + b * (1.0 - (k * t).cos()) / k;
        }
        acc
    }
}

/// Closed regular curve in 3-space, parameter domain `[0, 2π)`.
#[derive(Debug, Clone)]
pub struct Curve {
    kind: CurveKind,
    comps: [TrigPoly; 3],
    max_order: usize,
    length: f64,
    min_speed: f64,
    chord_arc: f64,
    arc: ArcTable,
}

/// Frenet frame and unit-speed derivatives of curvature and torsion.
#[derive(Debug, Clone)]
pub struct FrenetData {
    /// `kappa[n]` is the n-th arclength derivative of the curvature.
    pub kappa: Vec<f64>,
    /// `tau[n]` likewise for the torsion.
    pub tau: Vec<f64>,
    /// Right-handed orthonormal (T, N, B).
    pub frame: [Vec3; 3],
}

impl Curve {
    pub fn circle(radius: f64) -> Result<Curve, CurveError> {
        if radius <= 0.0 {
            return Err(CurveError::BadParameter("circle radius must be positive".into()));
        }
        Curve::from_trig(
            CurveKind::Circle { radius },
            [
                TrigPoly::new(0.0, vec![radius], vec![0.0]),
                TrigPoly::new(0.0, vec![0.0], vec![radius]),
                TrigPoly::zero(),
            ],
        )
    }

    pub fn ellipse(a: f64, b: f64) -> Result<Curve, CurveError> {
        if a <= 0.0 || b <= 0.0 {
            return Err(CurveError::BadParameter("ellipse semi-axes must be positive".into()));
        }
        Curve::from_trig(
            CurveKind::Ellipse { a, b },
            [
                TrigPoly::new(0.0, vec![a], vec![0.0]),
                TrigPoly::new(0.0, vec![0.0], vec![b]),
                TrigPoly::zero(),
            ],
        )
    }

    /// `( (R + r cos qt) cos pt, (R + r cos qt) sin pt, r sin qt )`.
    pub fn torus_knot(p: u32, q: u32, major: f64, minor: f64) -> Result<Curve, CurveError> {
        if p == 0 || q == 0 {
            return Err(CurveError::BadParameter("torus knot needs p, q >= 1".into()));
        }
        if gcd(p, q) != 1 {
            return Err(CurveError::BadParameter("torus knot needs gcd(p,q) = 1".into()));
        }
        if !(major > minor && minor > 0.0) {
            return Err(CurveError::BadParameter("torus knot needs R > r > 0".into()));
        }
        let deg = (p + q) as usize;
        let mut x = vec![0.0; deg];
        let mut xs = vec![0.0; deg];
        let mut xc = 0.0;
        let mut y = vec![0.0; deg];
        let mut ys = vec![0.0; deg];
        let mut yc = 0.0;
        // (R + r cos qt) cos pt = R cos pt + r/2 cos((p+q)t) + r/2 cos((p-q)t)
        x[(p - 1) as usize] += major;
        add_harmonic(&mut xc, &mut x, &mut xs, p as i64 + q as i64, minor / 2.0, true);
        add_harmonic(&mut xc, &mut x, &mut xs, p as i64 - q as i64, minor / 2.0, true);
        // (R + r cos qt) sin pt = R sin pt + r/2 sin((p+q)t) + r/2 sin((p-q)t)
        ys[(p - 1) as usize] += major;
        add_harmonic(&mut yc, &mut y, &mut ys, p as i64 + q as i64, minor / 2.0, false);
        add_harmonic(&mut yc, &mut y, &mut ys, p as i64 - q as i64, minor / 2.0, false);
        let z = vec![0.0; q as usize];
        let mut zs = vec![0.0; q as usize];
        zs[(q - 1) as usize] = minor;
        Curve::from_trig(
            CurveKind::TorusKnot { p, q, major, minor },
            [
                TrigPoly::new(xc, x, xs),
                TrigPoly::new(yc, y, ys),
                TrigPoly::new(0.0, z, zs),
            ],
        )
    }

    pub fn fourier(x: TrigPoly, y: TrigPoly, z: TrigPoly) -> Result<Curve, CurveError> {
        Curve::from_trig(CurveKind::Fourier, [x, y, z])
    }

    fn from_trig(kind: CurveKind, comps: [TrigPoly; 3]) -> Result<Curve, CurveError> {
        let mut c = Curve {
            kind,
            comps,
            max_order: DEFAULT_MAX_ORDER,
            length: 0.0,
            min_speed: 0.0,
            chord_arc: 0.0,
            arc: ArcTable {
                mean: 0.0,
                cos: vec![],
                sin: vec![],
            },
        };
        let m = 2048usize;
        let speeds: Vec<f64> = (0..m)
            .map(|j| c.speed(2.0 * PI * j as f64 / m as f64))
            .collect();
        let scale = speeds.iter().cloned().fold(0.0, f64::max);
        let min_speed = speeds.iter().cloned().fold(f64::INFINITY, f64::min);
        if !(min_speed > 1e-9 * scale.max(1e-300)) {
            return Err(CurveError::NotRegular(min_speed));
        }
        c.min_speed = min_speed;
        c.arc = ArcTable::build(&speeds);
        c.length = c.arc.arclength(2.0 * PI);
        c.chord_arc = c.validate_embedded(256);
        Ok(c)
    }

    pub fn kind(&self) -> &CurveKind {
        &self.kind
    }

    pub fn max_order(&self) -> usize {
        self.max_order
    }

    /// Raise the jet-order budget (never below the default).
    pub fn with_max_order(mut self, order: usize) -> Self {
        self.max_order = order.max(DEFAULT_MAX_ORDER);
        self
    }

    /// The curve scaled by `lambda` about the origin.
    pub fn scaled(&self, lambda: f64) -> Result<Curve, CurveError> {
        if lambda <= 0.0 {
            return Err(CurveError::BadParameter("scale factor must be positive".into()));
        }
        Curve::from_trig(
            CurveKind::Fourier,
            [
                self.comps[0].scaled(lambda),
                self.comps[1].scaled(lambda),
                self.comps[2].scaled(lambda),
            ],
        )
    }

    pub fn point(&self, t: f64) -> Vec3 {
        Vec3::new(
            self.comps[0].eval(t),
            self.comps[1].eval(t),
            self.comps[2].eval(t),
        )
    }

    pub fn speed(&self, t: f64) -> f64 {
        let j = self.eval_jet_unchecked(t, 1);
        j.derivative().coeff_vec3(0).norm()
    }

    /// Componentwise Taylor coefficients of the curve at `t`.
    pub fn eval_jet(&self, t: f64, order: usize) -> Result<RJet3, CurveError> {
        if order > self.max_order {
            return Err(CurveError::OrderBudget {
                requested: order,
                max: self.max_order,
            });
        }
        Ok(self.eval_jet_unchecked(t, order))
    }

    fn eval_jet_unchecked(&self, t: f64, order: usize) -> RJet3 {
        Jet3 {
            x: self.comps[0].eval_jet(t, order),
            y: self.comps[1].eval_jet(t, order),
            z: self.comps[2].eval_jet(t, order),
        }
    }

    /// Total length (spectral trapezoid of the speed over the period).
    pub fn arclength(&self) -> f64 {
        self.length
    }

    /// Cumulative arclength from parameter 0 to `t`.
    pub fn arclength_from_zero(&self, t: f64) -> f64 {
        self.arc.arclength(t)
    }

    /// Local arclength series `s(t+dt) - s(t)` as a jet in `dt`.
    pub fn arclength_jet(&self, t: f64, order: usize) -> Result<RJet, CurveError> {
        if order > self.max_order {
            return Err(CurveError::OrderBudget {
                requested: order,
                max: self.max_order,
            });
        }
        let gamma = self.eval_jet_unchecked(t, order);
        let vel = gamma.derivative();
        let speed2 = vel.dot(&vel)?;
        let speed = speed2.powf(0.5)?;
        Ok(speed.integrate().truncate(order))
    }

    /// Parameter at signed arclength offset `ds` from `t` (Newton on the
    /// cumulative arclength; the speed is bounded below so this is monotone).
    pub fn parameter_at_arclength(&self, t: f64, ds: f64) -> f64 {
        let target = self.arc.arclength(t) + ds;
        let mut u = t + ds / self.speed(t).max(self.min_speed);
        for _ in 0..40 {
            let f = self.arc.arclength(u) - target;
            if f.abs() < 1e-13 * self.length.max(1.0) {
                break;
            }
            u -= f / self.speed(u).max(0.5 * self.min_speed);
        }
        u
    }

    /// Unit-speed jets of the curve about `t`: the curve jet composed with the
    /// reversion of the local arclength series.
    pub fn unit_speed_jet(&self, t: f64, order: usize) -> Result<RJet3, CurveError> {
        let gamma = self.eval_jet(t, order)?;
        unit_speed_from_position_jets(&gamma)
    }

    /// Frenet invariants `kappa_0..m`, `tau_0..m` and the frame at `t`.
    ///
    /// Arclength derivatives come from the exact chain rule in the jet ring:
    /// `kappa(s) = |gamma_s x gamma_ss|` and
    /// `tau(s) = det(gamma_s, gamma_ss, gamma_sss)/kappa^2` as jets.
    pub fn frenet_invariants(&self, t: f64, m: usize) -> Result<FrenetData, CurveError> {
        if m + 3 > self.max_order {
            return Err(CurveError::OrderBudget {
                requested: m + 3,
                max: self.max_order,
            });
        }
        let gs = self.unit_speed_jet(t, m + 3)?;
        frenet_from_unit_speed_jets(&gs, m, t)
    }

    /// Arclength second derivative of the curve at `t` (`kappa_0 N`; the zero
    /// vector at inflection points).
    pub fn mean_curvature_vector(&self, t: f64) -> Result<Vec3, CurveError> {
        let gs = self.unit_speed_jet(t, 2)?;
        Ok(gs.coeff_vec3(2).scale(2.0))
    }

    /// Deterministic orthonormal frame `(T, N1, N2)` at `t` with
    /// `det(T, N1, N2) = +1`: Gram-Schmidt of the smallest-index coordinate
    /// axis not parallel to the tangent.
    pub fn normal_frame(&self, t: f64) -> Result<[Vec3; 3], CurveError> {
        let j = self.eval_jet(t, 1)?;
        let tangent = j.derivative().coeff_vec3(0).normalize();
        Ok(frame_from_tangent(tangent))
    }

    /// Mean of `phi` over the circle of radius `r` in the normal plane at `t`
    /// (uniform angular quadrature, spectrally accurate for smooth fields).
    pub fn coaxial_average<F: Fn(Vec3) -> f64>(
        &self,
        t: f64,
        phi: &F,
        r: f64,
    ) -> Result<f64, CurveError> {
        let [_, n1, n2] = self.normal_frame(t)?;
        let p = self.point(t);
        let nodes = 64;
        let vals: Vec<f64> = (0..nodes)
            .map(|j| {
                let ang = 2.0 * PI * j as f64 / nodes as f64;
                phi(p
                    .add(n1.scale(r * ang.cos()))
                    .add(n2.scale(r * ang.sin())))
            })
            .collect();
        Ok(pairwise_sum(&vals) / nodes as f64)
    }

    /// Normal-circle second-derivative estimate `2(d-n)(avg - phi)/r^2`,
    /// Richardson-extrapolated once over consecutive radii. Converges to the
    /// sum of second derivatives along any orthonormal basis of the normal
    /// plane.
    pub fn coaxial_derivative_estimate<F: Fn(Vec3) -> f64>(
        &self,
        t: f64,
        phi: &F,
        radii: &[f64],
    ) -> Result<f64, CurveError> {
        if radii.is_empty() {
            return Err(CurveError::Usage("coaxial derivative estimate needs at least one radius"));
        }
        let p0 = phi(self.point(t));
        let raw: Vec<f64> = radii
            .iter()
            .map(|&r| {
                self.coaxial_average(t, phi, r)
                    .map(|avg| 4.0 * (avg - p0) / (r * r))
            })
            .collect::<Result<_, _>>()?;
        if raw.len() == 1 {
            return Ok(raw[0]);
        }
        // one Richardson step assuming the leading error is O(r^2)
        let n = raw.len();
        let (r1, r2) = (radii[n - 2], radii[n - 1]);
        Ok((r1 * r1 * raw[n - 1] - r2 * r2 * raw[n - 2]) / (r1 * r1 - r2 * r2))
    }

    /// Minimum chord-arc ratio over an `n`-point parameter grid.
    pub fn validate_embedded(&self, n: usize) -> f64 {
        let n = n.max(64);
        let pts: Vec<Vec3> = (0..n).map(|i| self.point(2.0 * PI * i as f64 / n as f64)).collect();
        let arcs: Vec<f64> = (0..n)
            .map(|i| self.arc.arclength(2.0 * PI * i as f64 / n as f64))
            .collect();
        let total = self.length;
        let mut best = f64::INFINITY;
        for i in 0..n {
            for j in (i + 1)..n {
                let chord = pts[i].sub(pts[j]).norm();
                let arc = (arcs[j] - arcs[i]).abs().min(total - (arcs[j] - arcs[i]).abs());
                if arc > 0.0 {
                    best = best.min(chord / arc);
                }
            }
        }
        best
    }

    /// Cached construction-time chord-arc ratio.
    pub fn chord_arc_ratio(&self) -> f64 {
        self.chord_arc
    }

    pub fn require_embedded(&self) -> Result<(), CurveError> {
        if self.chord_arc < MIN_CHORD_ARC {
            return Err(CurveError::NotEmbedded(self.chord_arc));
        }
        Ok(())
    }
}

fn add_harmonic(constant: &mut f64, cos: &mut [f64], sin: &mut [f64], k: i64, amp: f64, is_cos: bool) {
    // cos is even, sin is odd in the harmonic index
    if k == 0 {
        if is_cos {
            *constant += amp;
        }
        return;
    }
    let (idx, sign) = if k > 0 { (k as usize - 1, 1.0) } else { ((-k) as usize - 1, -1.0) };
    if is_cos {
        cos[idx] += amp;
    } else {
        sin[idx] += amp * sign;
    }
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub(crate) fn frame_from_tangent(tangent: Vec3) -> [Vec3; 3] {
    let axes = [
        Vec3::new(1.0, 0.0, 0.0),
        Vec3::new(0.0, 1.0, 0.0),
        Vec3::new(0.0, 0.0, 1.0),
    ];
    let pick = axes
        .iter()
        .find(|e| 1.0 - e.dot(tangent).abs() > 1e-6)
        .copied()
        .unwrap_or(axes[0]);
    let n1 = pick.sub(tangent.scale(pick.dot(tangent))).normalize();
    let n2 = tangent.cross(n1);
    [tangent, n1, n2]
}

/// Reparametrize arbitrary position jets by arclength: compose with the
/// reversion of the integrated speed jet.
pub fn unit_speed_from_position_jets(gamma: &RJet3) -> Result<RJet3, CurveError> {
    let vel = gamma.derivative();
    let speed2 = vel.dot(&vel)?;
    let speed = speed2.powf(0.5)?;
    let arc = speed.integrate().truncate(gamma.order());
    let t_of_s = arc.revert()?;
    Ok(gamma.compose(&t_of_s)?)
}

/// Frenet invariants straight from position jets in any regular parameter.
pub fn frenet_from_position_jets(gamma: &RJet3, m: usize) -> Result<FrenetData, CurveError> {
    let gs = unit_speed_from_position_jets(gamma)?;
    frenet_from_unit_speed_jets(&gs, m, 0.0)
}

/// Frenet data from unit-speed position jets (order >= m+3).
pub fn frenet_from_unit_speed_jets(
    gs: &RJet3,
    m: usize,
    t: f64,
) -> Result<FrenetData, CurveError> {
    let d1 = gs.derivative();
    let d2 = d1.derivative();
    let d3 = d2.derivative();
    let d1t = d1.truncate(d2.order());
    let cr = d1t.cross(&d2)?;
    let kappa2 = cr.dot(&cr)?;
    let k0sq = kappa2.coeff(0);
    if k0sq.sqrt() <= TOL_FRAME {
        return Err(CurveError::UndefinedFrame {
            t,
            kappa: k0sq.max(0.0).sqrt(),
        });
    }
    let kappa_jet = kappa2.powf(0.5)?;
    let ord3 = d3.order();
    let det = d1t.truncate(ord3).cross(&d2.truncate(ord3))?.dot(&d3)?;
    let tau_jet = det.div(&kappa2.truncate(ord3))?;
    let mut kappa = Vec::with_capacity(m + 1);
    let mut tau = Vec::with_capacity(m + 1);
    let mut fact = 1.0;
    for n in 0..=m {
        if n > 0 {
            fact *= n as f64;
        }
        kappa.push(kappa_jet.coeff(n) * fact);
        tau.push(tau_jet.coeff(n) * fact);
    }
    let tangent = d1.coeff_vec3(0);
    let normal = d2.coeff_vec3(0).scale(1.0 / k0sq.sqrt());
    let frame = [tangent, normal, tangent.cross(normal)];
    Ok(FrenetData { kappa, tau, frame })
}

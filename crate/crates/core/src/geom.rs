//! Small fixed-size vector helpers used throughout the curve machinery.

use crate::jets::{Jet, JetError, Scalar};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Vec3 {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Vec3 {
    pub const ZERO: Vec3 = Vec3 {
        x: 0.0,
        y: 0.0,
        z: 0.0,
    };

    pub fn new(x: f64, y: f64, z: f64) -> Self {
        Vec3 { x, y, z }
    }

    pub fn dot(self, o: Vec3) -> f64 {
        self.x * o.x + self.y * o.y + self.z * o.z
    }

    pub fn cross(self, o: Vec3) -> Vec3 {
        Vec3 {
            x: self.y * o.z - self.z * o.y,
            y: self.z * o.x - self.x * o.z,
            z: self.x * o.y - self.y * o.x,
        }
    }

    pub fn norm(self) -> f64 {
        self.dot(self).sqrt()
    }

    pub fn scale(self, c: f64) -> Vec3 {
        Vec3::new(self.x * c, self.y * c, self.z * c)
    }

    pub fn add(self, o: Vec3) -> Vec3 {
        Vec3::new(self.x + o.x, self.y + o.y, self.z + o.z)
    }

    pub fn sub(self, o: Vec3) -> Vec3 {
        Vec3::new(self.x - o.x, self.y - o.y, self.z - o.z)
    }

    pub fn normalize(self) -> Vec3 {
        self.scale(1.0 / self.norm())
    }
}

/// Triple of jets, one per coordinate.
#[derive(Debug, Clone)]
pub struct Jet3<S: Scalar> {
    pub x: Jet<S>,
    pub y: Jet<S>,
    pub z: Jet<S>,
}

pub type RJet3 = Jet3<f64>;

impl<S: Scalar> Jet3<S> {
    pub fn order(&self) -> usize {
        self.x.order()
    }

    pub fn dot(&self, o: &Self) -> Result<Jet<S>, JetError> {
        let xx = self.x.mul(&o.x)?;
        let yy = self.y.mul(&o.y)?;
        let zz = self.z.mul(&o.z)?;
        xx.add(&yy)?.add(&zz)
    }

    pub fn cross(&self, o: &Self) -> Result<Self, JetError> {
        Ok(Jet3 {
            x: self.y.mul(&o.z)?.sub(&self.z.mul(&o.y)?)?,
            y: self.z.mul(&o.x)?.sub(&self.x.mul(&o.z)?)?,
            z: self.x.mul(&o.y)?.sub(&self.y.mul(&o.x)?)?,
        })
    }

    pub fn sub(&self, o: &Self) -> Result<Self, JetError> {
        Ok(Jet3 {
            x: self.x.sub(&o.x)?,
            y: self.y.sub(&o.y)?,
            z: self.z.sub(&o.z)?,
        })
    }

    pub fn derivative(&self) -> Self {
        Jet3 {
            x: self.x.derivative(),
            y: self.y.derivative(),
            z: self.z.derivative(),
        }
    }

    pub fn compose(&self, inner: &Jet<S>) -> Result<Self, JetError> {
        Ok(Jet3 {
            x: self.x.compose(inner)?,
            y: self.y.compose(inner)?,
            z: self.z.compose(inner)?,
        })
    }

    pub fn truncate(&self, order: usize) -> Self {
        Jet3 {
            x: self.x.truncate(order),
            y: self.y.truncate(order),
            z: self.z.truncate(order),
        }
    }

    pub fn coeff_vec3(&self, k: usize) -> Vec3
    where
        S: Scalar,
    {
        Vec3::new(
            self.x.coeff(k).real_part(),
            self.y.coeff(k).real_part(),
            self.z.coeff(k).real_part(),
        )
    }
}

impl RJet3 {
    /// Component along a fixed direction, as a jet.
    pub fn project(&self, dir: Vec3) -> Jet<f64> {
        let mut out = self.x.scale(dir.x);
        out = out.add(&self.y.scale(dir.y)).expect("equal orders");
        out.add(&self.z.scale(dir.z)).expect("equal orders")
    }
}

/// Deterministic pairwise summation: bit-stable regardless of chunking by
/// callers, and accurate for long sums.
pub fn pairwise_sum<T>(xs: &[T]) -> T
where
    T: Copy + std::ops::Add<Output = T> + Default,
{
    match xs.len() {
        0 => T::default(),
        1 => xs[0],
        2 => xs[0] + xs[1],
        n => {
            let mid = n / 2;
            pairwise_sum(&xs[..mid]) + pairwise_sum(&xs[mid..])
        }
    }
}

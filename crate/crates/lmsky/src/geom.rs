//! Minimal 3-vector math. Y is up; the ground plane is y = 0.

use std::ops::{Add, Mul, Neg, Sub};

#[derive(Clone, Copy, Debug, PartialEq)]
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

    pub fn dot(self, other: Vec3) -> f64 {
        self.x * other.x + self.y * other.y + self.z * other.z
    }

    pub fn cross(self, other: Vec3) -> Vec3 {
        Vec3 {
            x: self.y * other.z - self.z * other.y,
            y: self.z * other.x - self.x * other.z,
            z: self.x * other.y - self.y * other.x,
        }
    }

    pub fn norm(self) -> f64 {
        self.dot(self).sqrt()
    }

    pub fn normalized(self) -> Vec3 {
        let n = self.norm();
        Vec3 {
            x: self.x / n,
            y: self.y / n,
            z: self.z / n,
        }
    }

    /// Unit direction for spherical coordinates: zenith angle from +y,
    /// azimuth from +x toward +z.
    pub fn from_spherical(zenith: f64, azimuth: f64) -> Vec3 {
        let s = zenith.sin();
        Vec3 {
            x: s * azimuth.cos(),
            y: zenith.cos(),
            z: s * azimuth.sin(),
        }
    }

    /// Zenith angle in [0, pi].
    pub fn zenith(self) -> f64 {
        self.y.clamp(-1.0, 1.0).acos()
    }

    /// Azimuth in [0, 2*pi).
    pub fn azimuth(self) -> f64 {
        let a = self.z.atan2(self.x);
        if a < 0.0 {
            a + std::f64::consts::TAU
        } else {
            a
        }
    }
}

impl Add for Vec3 {
    type Output = Vec3;
    fn add(self, o: Vec3) -> Vec3 {
        Vec3::new(self.x + o.x, self.y + o.y, self.z + o.z)
    }
}

impl Sub for Vec3 {
    type Output = Vec3;
    fn sub(self, o: Vec3) -> Vec3 {
        Vec3::new(self.x - o.x, self.y - o.y, self.z - o.z)
    }
}

impl Mul<f64> for Vec3 {
    type Output = Vec3;
    fn mul(self, s: f64) -> Vec3 {
        Vec3::new(self.x * s, self.y * s, self.z * s)
    }
}

impl Neg for Vec3 {
    type Output = Vec3;
    fn neg(self) -> Vec3 {
        Vec3::new(-self.x, -self.y, -self.z)
    }
}

/// Normalize an angle into [0, 2*pi).
pub fn wrap_azimuth(a: f64) -> f64 {
    let tau = std::f64::consts::TAU;
    let mut r = a % tau;
    if r < 0.0 {
        r += tau;
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn spherical_round_trip() {
        let d = Vec3::from_spherical(0.7, 1.3);
        assert_relative_eq!(d.norm(), 1.0, epsilon = 1e-12);
        assert_relative_eq!(d.zenith(), 0.7, epsilon = 1e-12);
        assert_relative_eq!(d.azimuth(), 1.3, epsilon = 1e-12);
    }

    #[test]
    fn wrap_negative() {
        assert_relative_eq!(
            wrap_azimuth(-0.5),
            std::f64::consts::TAU - 0.5,
            epsilon = 1e-12
        );
        assert_relative_eq!(wrap_azimuth(std::f64::consts::TAU), 0.0, epsilon = 1e-12);
    }
}

//! SE(2) group algebra, the point-goal update rule, and dead-reckoning
//! integration of per-step motion estimates.
//!
//! A planar rigid transform is a rotation angle plus a 2D translation. The
//! planar axes are `(x, z)` with `x` pointing right and forward motion along
//! `-z`, matching the simulator convention, so a nominal forward step has
//! `xi = (0, -0.25)`.

use serde::de::{self, SeqAccess, Visitor};
use serde::ser::SerializeTuple;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::scalar::Real;

/// Planar vector in meters: `x` rightward, `z` with forward = `-z`.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct Vec2<T> {
    pub x: T,
    pub z: T,
}

impl<T: Real> Vec2<T> {
    pub fn new(x: T, z: T) -> Self {
        Self { x, z }
    }

    pub fn zero() -> Self {
        Self {
            x: T::zero(),
            z: T::zero(),
        }
    }

    pub fn norm(&self) -> T {
        (self.x * self.x + self.z * self.z).sqrt()
    }

    pub fn dot(&self, other: &Self) -> T {
        self.x * other.x + self.z * other.z
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.z.is_finite()
    }
}

impl<T: Real> std::ops::Add for Vec2<T> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::new(self.x + rhs.x, self.z + rhs.z)
    }
}

impl<T: Real> std::ops::Sub for Vec2<T> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self::new(self.x - rhs.x, self.z - rhs.z)
    }
}

impl<T: Real> std::ops::Mul<T> for Vec2<T> {
    type Output = Self;
    fn mul(self, rhs: T) -> Self {
        Self::new(self.x * rhs, self.z * rhs)
    }
}

impl<T: Real> std::ops::Neg for Vec2<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.x, -self.z)
    }
}

/// Normalizes an angle to the interval `(-pi, pi]`.
pub fn normalize_angle<T: Real>(theta: T) -> T {
    let two_pi = T::PI() + T::PI();
    let mut a = (theta + T::PI()) % two_pi;
    if a < T::zero() {
        a += two_pi;
    }
    let r = a - T::PI();
    // `% two_pi` lands -pi on the open end of the interval; fold it to +pi.
    if r == -T::PI() {
        T::PI()
    } else {
        r
    }
}

/// Planar rigid transform: rotation by `theta` followed by translation `xi`.
///
/// Acting on a point, `h * p = R(theta) * p + xi` with
/// `R(theta) = [[cos, -sin], [sin, cos]]`. The angle is kept normalized to
/// `(-pi, pi]` after every operation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Se2<T> {
    theta: T,
    xi: Vec2<T>,
}

impl<T: Real> Se2<T> {
    /// Builds a transform, normalizing the angle.
    pub fn new(theta: T, xi: Vec2<T>) -> Self {
        Self {
            theta: normalize_angle(theta),
            xi,
        }
    }

    pub fn from_parts(theta: T, xi_x: T, xi_z: T) -> Self {
        Self::new(theta, Vec2::new(xi_x, xi_z))
    }

    pub fn identity() -> Self {
        Self {
            theta: T::zero(),
            xi: Vec2::zero(),
        }
    }

    /// Rotation angle in radians, normalized to `(-pi, pi]`.
    pub fn theta(&self) -> T {
        self.theta
    }

    /// Translation component in meters.
    pub fn xi(&self) -> Vec2<T> {
        self.xi
    }

    /// The transform as a 3x3 homogeneous matrix (row major).
    pub fn to_matrix(&self) -> [[T; 3]; 3] {
        let (s, c) = self.theta.sin_cos();
        [
            [c, -s, self.xi.x],
            [s, c, self.xi.z],
            [T::zero(), T::zero(), T::one()],
        ]
    }

    /// Reads a transform back from a homogeneous matrix.
    pub fn from_matrix(m: &[[T; 3]; 3]) -> Self {
        Self::new(m[1][0].atan2(m[0][0]), Vec2::new(m[0][2], m[1][2]))
    }

    /// Group composition: `(a.compose(b)).apply(p) == a.apply(b.apply(p))`.
    pub fn compose(&self, other: &Self) -> Self {
        Self::new(
            self.theta + other.theta,
            self.xi + rotate(self.theta, other.xi),
        )
    }

    /// Group inverse: `h.compose(h.inverse())` is the identity.
    pub fn inverse(&self) -> Self {
        let inv_theta = -self.theta;
        Self::new(inv_theta, -rotate(inv_theta, self.xi))
    }

    /// Applies the transform to a point: `R(theta) * p + xi`.
    pub fn apply(&self, p: Vec2<T>) -> Vec2<T> {
        rotate(self.theta, p) + self.xi
    }

    /// Serialization order used by every file format: `(theta, xi_x, xi_z)`.
    pub fn to_array(&self) -> [T; 3] {
        [self.theta, self.xi.x, self.xi.z]
    }

    pub fn from_array(a: [T; 3]) -> Self {
        Self::from_parts(a[0], a[1], a[2])
    }
}

/// Rotates a vector by `theta`.
pub fn rotate<T: Real>(theta: T, p: Vec2<T>) -> Vec2<T> {
    let (s, c) = theta.sin_cos();
    Vec2::new(c * p.x - s * p.z, s * p.x + c * p.z)
}

/// Updates the point-goal's relative position across one step of motion.
///
/// This is the navigation update: given the goal's coordinates in the
/// previous frame and the coordinate transform `h` into the current frame,
/// returns the goal's coordinates in the current frame. Identical to
/// `h.apply(goal)`; note that when `h` comes from a recorded egomotion step
/// (the new pose expressed in the old frame, which is how ground-truth labels
/// and estimator outputs are stored), the caller passes `h.inverse()`.
pub fn update_goal<T: Real>(goal: Vec2<T>, h: &Se2<T>) -> Vec2<T> {
    h.apply(goal)
}

/// Integrates per-step transforms into cumulative poses in the start frame.
///
/// Element 0 is the identity, so `n` steps yield `n + 1` poses; element `k`
/// is `steps[0] * ... * steps[k-1]`.
pub fn integrate<T: Real>(steps: &[Se2<T>]) -> Vec<Se2<T>> {
    let mut poses = Vec::with_capacity(steps.len() + 1);
    let mut pose = Se2::identity();
    poses.push(pose);
    for step in steps {
        pose = pose.compose(step);
        poses.push(pose);
    }
    poses
}

/// Splits a goal vector into a magnitude and a unit vector.
///
/// The zero goal maps to `(0, (0, 0))`.
pub fn polar_goal_encoding<T: Real>(goal: Vec2<T>) -> (T, Vec2<T>) {
    let magnitude = goal.norm();
    if magnitude > T::zero() {
        (magnitude, goal * (T::one() / magnitude))
    } else {
        (T::zero(), Vec2::zero())
    }
}

// Se2 serializes as the bare triple (theta, xi_x, xi_z) in that order.
impl<T: Real + Serialize> Serialize for Se2<T> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut tup = serializer.serialize_tuple(3)?;
        tup.serialize_element(&self.theta)?;
        tup.serialize_element(&self.xi.x)?;
        tup.serialize_element(&self.xi.z)?;
        tup.end()
    }
}

impl<'de, T: Real + Deserialize<'de>> Deserialize<'de> for Se2<T> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct TripleVisitor<T>(std::marker::PhantomData<T>);

        impl<'de, T: Real + Deserialize<'de>> Visitor<'de> for TripleVisitor<T> {
            type Value = Se2<T>;

            fn expecting(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
                f.write_str("a (theta, xi_x, xi_z) triple")
            }

            fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> Result<Se2<T>, A::Error> {
                let theta = seq
                    .next_element()?
                    .ok_or_else(|| de::Error::invalid_length(0, &self))?;
                let x = seq
                    .next_element()?
                    .ok_or_else(|| de::Error::invalid_length(1, &self))?;
                let z = seq
                    .next_element()?
                    .ok_or_else(|| de::Error::invalid_length(2, &self))?;
                Ok(Se2::from_parts(theta, x, z))
            }
        }

        deserializer.deserialize_tuple(3, TripleVisitor(std::marker::PhantomData))
    }
}

impl<T: Real> Default for Se2<T> {
    fn default() -> Self {
        Self::identity()
    }
}

/// Sampling helpers shared by tests and the acceptance suite.
pub mod sample {
    use super::*;
    use rand::Rng;

    /// Draws a transform with `theta` uniform in `(-pi, pi)` and translation
    /// components uniform in `[-range, range]`.
    pub fn random_se2<R: Rng>(rng: &mut R, range: f64) -> Se2<f64> {
        Se2::from_parts(
            rng.random_range(-std::f64::consts::PI..std::f64::consts::PI),
            rng.random_range(-range..range),
            rng.random_range(-range..range),
        )
    }
}

impl<T: Real> std::fmt::Display for Se2<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Se2(theta={}, xi=({}, {}))",
            self.theta, self.xi.x, self.xi.z
        )
    }
}

/// Largest componentwise difference between two transforms, angle included.
pub fn max_component_diff<T: Real>(a: &Se2<T>, b: &Se2<T>) -> T {
    let dt = normalize_angle(a.theta - b.theta).abs();
    let dx = (a.xi.x - b.xi.x).abs();
    let dz = (a.xi.z - b.xi.z).abs();
    dt.max(dx).max(dz)
}

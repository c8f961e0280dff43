//! Planar visual odometry toolkit.
//!
//! The crate provides the pieces needed to study egomotion estimation for
//! PointGoal navigation at desk scale:
//!
//! - [`se2`]: exact SE(2) group algebra, the goal-update rule, and
//!   dead-reckoning integration of per-step estimates;
//! - [`losses`]: the regression loss, the geometric-invariance losses, the
//!   combined training objective, and their analytic gradients;
//! - [`depth`]: depth unprojection, one-hot depth discretization, and the
//!   normalized soft top-down projection;
//! - [`vo`]: a classical feature-matching estimator (essential matrix, pose
//!   recovery, depth-based scale resolution) reduced to planar motion;
//! - [`sim`]: an occupancy-grid navigation simulator with actuation noise,
//!   depth rendering, shortest paths, and a VO dataset generator;
//! - [`metrics`]: PointGoal navigation metrics (Success, SPL, SoftSPL, d_G)
//!   and per-step VO error diagnostics;
//! - [`trainer`]: a desk-scale affine VO estimator fit by gradient descent on
//!   the combined loss.
//!
//! The geometric core ([`se2`], [`losses`], [`depth`], [`metrics`]) is generic
//! over the scalar type via [`scalar::Real`]; concrete `f64` aliases are
//! re-exported at the crate root.

pub mod action;
pub mod depth;
pub mod losses;
pub mod metrics;
pub mod scalar;
pub mod se2;
pub mod sim;
pub mod trainer;
pub mod vo;

pub use action::Action;
pub use scalar::Real;

/// Planar rigid transform at the default `f64` precision.
pub type Se2 = se2::Se2<f64>;
/// Planar vector at the default `f64` precision.
pub type Vec2 = se2::Vec2<f64>;
/// Raw regression-space transform parameters at `f64` precision.
pub type Se2Params = losses::Se2Params<f64>;
/// Camera intrinsics at `f64` precision.
pub type CameraIntrinsics = depth::CameraIntrinsics<f64>;
/// Depth image at `f64` precision.
pub type DepthImage = depth::DepthImage<f64>;

//! Dense local feature descriptors learned from relative camera pose alone.
//!
//! The library trains a small fully-convolutional network so that, for a query
//! point in one image, the expectation of a softmax correlation distribution
//! over a second image lands on the true correspondence. Because no
//! ground-truth correspondences are available, supervision comes from two-view
//! geometry: the predicted match must lie on the epipolar line induced by the
//! relative pose, and a forward-backward roundtrip must return to the query.
//! A coarse-to-fine matching layer keeps the correlation cheap while
//! preserving descriptor resolution, and the variance of each match
//! distribution reweights unreliable query points during training.
//!
//! Modules:
//! - [`autodiff`]: minimal reverse-mode AD over dense `f64` tensors.
//! - [`geometry`]: two-view projective geometry and robust estimation.
//! - [`net`]: the dual-resolution descriptor network.
//! - [`matcher`]: differentiable matching (distribution, expectation,
//!   variance) plus coarse-to-fine and test-time matching.
//! - [`losses`]: epipolar, cycle-consistency, supervised-L2 and triplet
//!   objectives with uncertainty reweighting.
//! - [`synth`]: deterministic synthetic two-view datasets with a private
//!   ground-truth correspondence oracle.
//! - [`trainer`]: the optimization loop, checkpointing and run logs.
//! - [`eval`]: MMA / PCK / homography / relative-pose benchmarks and the
//!   ablation harness.

pub mod autodiff;
pub mod checkpoint;
pub mod eval;
pub mod geometry;
pub mod losses;
pub mod matcher;
pub mod net;
pub mod synth;
pub mod trainer;

pub use autodiff::Tensor;
pub use geometry::ImagePoint;

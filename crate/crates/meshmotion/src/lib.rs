//! `meshmotion` animates a static triangle mesh from a monocular frame
//! sequence. The pipeline has three stages: a transformer VAE encodes
//! geometry plus per-frame multi-view appearance into latent sets, a
//! spatiotemporal diffusion model denoises latent-set sequences conditioned
//! on the initial point cloud and the video, and a deformation decoder turns
//! denoised latents into per-vertex trajectories that drive the mesh.
//!
//! Modules:
//! - [`geom`]: point clouds, meshes, cameras, sampling, embeddings, Chamfer.
//! - [`img`] / [`metrics`]: image buffers, PSNR, SSIM.
//! - [`toydata`]: procedural animated assets, a flat-shaded software
//!   rasterizer, and the dataset curation filters.
//! - [`nn`]: a small reverse-mode autodiff tape over `ndarray` (f64).
//! - [`vae`]: the latent-set motion VAE.
//! - [`diffusion`]: EDM preconditioning, the spatiotemporal denoiser, and a
//!   deterministic Heun sampler.
//! - [`pipeline`]: configuration, training loops, inference, refinement,
//!   mesh driving, checkpoints, and the CLI.
//! - [`eval`]: evaluation reports and the ablation harness.

pub mod diffusion;
pub mod error;
pub mod eval;
pub mod geom;
pub mod img;
pub mod io;
pub mod metrics;
pub mod nn;
pub mod pipeline;
pub mod toydata;
pub mod vae;

pub use error::{Error, Result};

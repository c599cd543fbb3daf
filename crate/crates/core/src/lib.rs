//! Series solver for the fractional Helmholtz equation with an involution
//! perturbation on the rectangle (0,1) x (-pi, pi).
//!
//! The equation couples a composed Caputo derivative of order alpha in x
//! with a reflected second derivative in y:
//!
//!   D^alpha_x D^alpha_x u + u_yy(x, y) - eps u_yy(x, -y) - c^2 u = 0,
//!
//! with Dirichlet data u(0, y) = phi(y), u(1, y) = psi(y) and one of four
//! condition families in y (Dirichlet, Neumann, periodic, anti-periodic).
//! Separation in the perturbed trigonometric eigenbasis reduces each mode
//! to a one-dimensional two-point problem whose solution kernels are
//! Mittag-Leffler functions; the crate evaluates those kernels stably,
//! assembles truncated series solutions, and independently verifies them
//! through discretized residuals and classical-limit comparisons.

mod dd;
pub mod boundary_data;
pub mod cli;
pub mod frac_kernels;
pub mod mittag_leffler;
mod num_util;
pub mod solver;
pub mod spectral_basis;
pub mod verify;

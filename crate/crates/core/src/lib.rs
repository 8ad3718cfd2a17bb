//! Exact-arithmetic toolkit for semistable discriminant twins of elliptic
//! curves over Q: integral Weierstrass models and invariants, per-prime
//! reduction data and global minimal models, a parametric family whose
//! members collide in minimal discriminant and conductor, and search
//! utilities over curve tables.

pub mod arith;
pub mod curve;
pub mod error;
pub mod poly;
pub mod ser;

pub use arith::{factor, factor_with, gcd, is_prime, p_adic_valuation, primality, Factorization, Primality};
pub use curve::{frey_curve, CurveInvariants, WeierstrassModel};
pub use error::{Error, Result};
pub use poly::IntPoly;

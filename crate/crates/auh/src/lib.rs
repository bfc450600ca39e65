//! Anti-uniform Huffman codes: construction, classification, extremal
//! bounds, and verification oracles.
//!
//! An anti-uniform code over `n` symbols has codeword lengths
//! `1, 2, ..., n-2, n-1, n-1` — the maximally skewed spine tree. This crate
//! provides:
//!
//! - [`dist::Distribution`]: ordered probability vectors, exact-rational or
//!   float, with the structural anti-uniform test and spine decomposition.
//! - [`huffman`]: deterministic Huffman construction whose tie-break favors
//!   the anti-uniform shape, plus length profiles and Kraft accounting.
//! - [`codec`]: the unary bitstream codec realizing the anti-uniform
//!   codeword set, with a framed byte format.
//! - [`bounds`] and [`families`]: exact Fibonacci arithmetic, the
//!   closed-form extremal bounds, their golden-ratio limits, and the named
//!   source families (Fibonacci, epsilon, dyadic, high-redundancy,
//!   geometric/Poisson tails).
//! - [`oracle`]: brute-force simplex search, perturbation moves, local
//!   ascent, and seeded anti-uniform sampling for numeric verification of
//!   the bounds.
//!
//! Average lengths and Kraft sums stay exact whenever inputs are rational;
//! entropy is always a float. All operations are pure functions of their
//! inputs and safe to call from any number of threads.

pub mod bounds;
pub mod codec;
pub mod dist;
pub mod error;
pub mod families;
pub mod fib;
pub mod huffman;
pub mod json;
pub mod metrics;
pub mod oracle;
pub mod profile;
pub mod real;

pub use bounds::{asymptotics, h_max, h_max_infinite, l_max, l_max_f64, Asymptotics};
pub use codec::{decode, decode_framed, encode, encode_framed, Bitstream};
pub use dist::Distribution;
pub use error::{Error, Result};
pub use families::{fibonacci_dist, make_family, FamilyKind, FamilySpec};
pub use fib::fib;
pub use huffman::{build_huffman, length_profile, CodeTree};
pub use metrics::{auh_profile_is_optimal, binary_entropy, huffman_metrics, Metrics};
pub use oracle::{
    brute_force_max, enumerate_sorted_simplex, local_ascent, random_auh, spread_from_head,
    spread_from_leaf, GridSpec, Objective, SearchReport,
};
pub use profile::LengthProfile;
pub use real::Real;

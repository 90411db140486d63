//! Linear algebra over `GF(q)`, AG codes and LCP verification.

mod code;
mod lcp;
mod matrix;

pub use code::{ag_code, min_distance, weight, Distance, LinearCode, EXHAUSTIVE_CAP};
pub use lcp::{
    certify_nonspecial_gminus1, divisor_gcd, divisor_lmd, exact_ell, is_lcp, verify_pair_divisors, Check,
    EquivalenceCertificate, LcpReport, NonspecialCertificate, PairCertificates,
};
pub use matrix::{stack_rank, Matrix};

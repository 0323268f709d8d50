//! Exact-arithmetic toolkit for certifying torsion subgroups of elliptic
//! curves over number fields of degree up to 6.
//!
//! The crate is organised bottom-up:
//!
//! * [`arith`] — big rationals, univariate polynomials over Q and F_p,
//!   factorization over Q (Zassenhaus), rational reconstruction.
//! * [`nf`] — number fields Q[x]/(f), prime splitting, the Dedekind
//!   criterion, p-maximal orders and exact field discriminants.
//! * [`fq`] — finite fields F_{p^k} used as residue fields.
//! * [`ec`] — long Weierstrass curves over any field handle: invariants,
//!   group law, division polynomials, point enumeration, isomorphism tests.
//! * [`cert`] — the torsion certifier: root finding in K, lower bounds from
//!   explicit points, upper bounds from reductions, machine-checkable
//!   certificates.
//! * [`families`] — the fixed modular-curve models X₁(11), …, X₁(6,6) and
//!   the genus-0 families ℰ_v(3,3), ℰ_v(3,6), ℰ_v(4,4), ℰ_v(5,5).
//! * [`classify`] — the Φ(d) / Φ^∞(d) torsion classification sets and the
//!   genus table, used as global sanity constraints.
//! * [`tables`] / [`scan`] — bundled appendix tables, the verification
//!   harness and the ascending-discriminant field scanner.

pub mod arith;
// pub mod cert;
// pub mod classify;
// pub mod ec;
// pub mod families;
pub mod field;
pub mod fq;
pub mod nf;
// pub mod scan;
// pub mod tables;

pub use arith::{PolyQ, Rat};
/*
pub use cert::{CertifyOutcome, TorsionCertificate, Verdict};
pub use ec::{CurvePoint, TorsionStructure, WeierstrassModel};
pub use field::Field;
pub use fq::{FqElem, FqField};
pub use nf::{NfElem, NumberField};
*/

/// Default seed for every seeded computation in the crate.
pub const DEFAULT_SEED: u64 = 0x1107_2010;

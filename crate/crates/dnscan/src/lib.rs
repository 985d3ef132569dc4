//! Bulk DNS measurement toolkit.
//!
//! The crate is organized around a small set of subsystems:
//!
//! * [`wire`] — RFC 1035 message codec (names, compression, records) plus the
//!   JSON record rendering used everywhere in the output.
//! * [`cache`] — the selective NS/glue cache that accelerates iterative
//!   resolution without caching the leaf names being scanned.
//! * [`resolver`] — single-exchange UDP/TCP transport on long-lived worker
//!   sockets, external-recursive lookups, and full iterative resolution with
//!   per-hop traces.
//! * [`modules`] — the pluggable lookup-module registry (raw record modules,
//!   alookup/mxlookup/caalookup, bindversion, TXT-convention modules).
//! * [`framework`] — CLI configuration, the worker pool, load balancing, rate
//!   limiting, statistics, and JSON-lines output.
//! * [`testnet`] — in-process mock DNS infrastructure (scriptable
//!   authoritative hierarchies and recursive mocks with fault injection) so
//!   every behavior is testable offline.

pub mod cache;
pub mod framework;
pub mod modules;
pub mod resolver;
pub mod testnet;
pub mod wire;

//! Odd-Ramsey numbers of spanning complete bipartite graphs, made
//! executable through their equivalence with weight-avoiding binary linear
//! codes.
//!
//! An edge colouring of the complete graph handles a family of subgraphs
//! when every copy of a family member meets some colour class in an odd
//! number of edges; the odd-Ramsey number is the least number of colours
//! that makes this possible. For the family `{K_{t,n-t} : t in T}` of
//! spanning complete bipartite graphs this number equals `n - ell(n, W_T)`,
//! where `ell(n, S)` is the largest dimension of a length-`n` binary linear
//! code with no codeword weight in `S` and `W_T = T ∪ {n-t : t in T} ∪
//! {n}`. This crate makes both sides of that equivalence computable and
//! cross-checkable at desk scale:
//!
//! - [`gf2`] — bit-packed vectors, matrices, and linear codes over GF(2),
//!   with canonical RREF bases, duals, Gray-code enumeration, and linear
//!   system solving.
//! - [`codes`] — the parameter `ell(n, S)` by exhaustive branch-and-bound
//!   search, plus the constructive lower bounds: hyperplane codes, BCH
//!   codes with shortening and zero-extension, and even subcodes.
//! - [`colorings`] — the colouring data model, the explicit path-based,
//!   unique-spanning, and clique-unique constructions, and both directions
//!   of the code/colouring translation.
//! - [`verify`] — exhaustive verifiers, a brute-force odd-Ramsey oracle for
//!   up to six vertices, the all-even bipartition witness finder, and the
//!   counting diagnostics.
//! - [`cli`] — the `oddramsey` command-line tool.
//!
//! The runnable examples under `examples/` walk through each capability;
//! `cargo run --example ell_search` is a good place to start.

pub mod cli;
pub mod codes;
pub mod colorings;
pub mod gf2;
pub mod verify;

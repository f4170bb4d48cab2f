//! Exact spectra of normal Cayley graphs on symmetric groups.
//!
//! The eigenvalues of `Cay(Sym(n), S)`, where `S` is a union of conjugacy
//! classes, are read off the character table: each irreducible `chi^alpha`
//! gives `sum_{a in S} chi^alpha(a) / chi^alpha(1)` with multiplicity
//! `chi^alpha(1)^2`. Characters come from a memoized Murnaghan–Nakayama
//! recursion over rim hooks, and the predicted spectra are checked against
//! brute-force walk counts and a dense Jacobi eigensolve of the explicit
//! graph.
//!
//! For the connection set of all n-cycles the energy is `2^(n-1) (n-1)!`
//! and the nullity is `n! - C(2n-2, n-1)`; see [`spectrum::closed_form_energy`]
//! and [`spectrum::closed_form_nullity`].

pub mod characters;
pub mod error;
pub mod oracle;
pub mod partitions;
pub mod report;
pub mod spectrum;
pub mod symgroup;

pub use characters::{character_table, degree, mn_character, CharacterTable, MnEvaluator};
pub use error::{Error, Result};
pub use oracle::{verify_exact, verify_float, OracleLimits, Verdict};
pub use partitions::{enumerate_partitions, Node, Partition};
pub use spectrum::{spectrum, SpectrumLine, SpectrumReport};
pub use symgroup::{build_adjacency, class_size, AdjacencyMatrix, ClassSpec, Permutation};

//! Addresses and expansions: greedy λ-expansions, address-to-point maps,
//! the word relations at multinacci ratios, counting sequences and their
//! generating functions, and unique-address counts.

pub mod address;
pub mod expansion;
pub mod rewriting;
pub mod sequences;
pub mod uniqueness;

pub use address::{edge_address, point_from_address};
pub use expansion::{greedy_expansion, Expansion};
pub use rewriting::{canonical_word, oriented_normal_form};
pub use sequences::{
    gf_series_check, h_sequence, p_sequence, trapezium_counts, u_sequence, CountingSeq, SeqKind,
};
pub use uniqueness::{count_unique_addresses, count_unique_addresses_brute};

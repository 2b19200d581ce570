//! Exact and approximate Jaccard-style similarity between texts.
//!
//! Documents are edited (short words dropped), turned into positional
//! k-shingle sequences, and compared by one of four routes:
//!
//! - the exact monogamous matching of shingle multisets (and its
//!   linear-time multiplicity equivalent),
//! - a Glivenko-Cantelli estimate on random subsamples,
//! - the RUM min-hash estimate on the combined shingle collection,
//! - plain set Jaccard on small sets, with the representation-matrix
//!   formulation as a cross-check.
//!
//! A hypergeometric baseline gives the similarity expected from two
//! randomly written texts of the same sizes, against which observed
//! values are judged.

pub mod error;
pub mod minhash;
pub mod random_baseline;
pub mod report;
pub mod representation;
pub mod sampling;
pub mod seeding;
pub mod shingling;
pub mod similarity_exact;
pub mod stats;
pub mod text_ingest;

pub use error::{Error, Result};
pub use minhash::{
    canonical_encode, eval_hash, rum_estimate, rum_repeated, signature_fill, signature_min,
    signature_similarity, HashFamily, SignatureMatrix, SIGNATURE_SENTINEL,
};
pub use random_baseline::{
    expected_similarity, monte_carlo_expected_similarity, overlap_pmf, OverlapDistribution,
};
pub use report::{emit, pairwise_matrix, Method, MethodParams, OutputFormat, SimilarityReport};
pub use representation::{build_matrix, matrix_similarity, RepresentationMatrix};
pub use sampling::{gc_estimate, subsample, SubsampleSpec};
pub use shingling::{shingle, stream_shingle, ShingleEntry, ShingleSequence, StreamShingler};
pub use similarity_exact::{
    jaccard_distance, match_similarity, multiplicity_oracle, set_jaccard, MatchResult,
};
pub use stats::RepeatedEstimate;
pub use text_ingest::{corpus_stats, edit_text, EditedDocument};

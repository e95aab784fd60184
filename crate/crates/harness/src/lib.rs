//! Corpus generation, theorem verification, property suites and DOT export
//! for power graph connectivity.

pub mod dot;
pub mod groups;
pub mod suites;
pub mod verify;

pub use dot::export_dot;
pub use groups::{exceptional_groups, full_corpus, generate_abelian_corpus, parse_group_spec};
pub use suites::{run_property_suite, Suite, SuiteSummary};
pub use verify::{predict, verify_theorem, Caps, TheoremId, VerificationReport, Verdict};

use rayon::prelude::*;

use powcut::error::Result;
use powcut::Group;

/// Verifies `theorem` on every group in parallel; reports keep corpus order.
pub fn survey(theorem: TheoremId, corpus: &[Group], caps: &Caps) -> Result<Vec<VerificationReport>> {
    corpus.par_iter().map(|g| verify_theorem(theorem, g, caps)).collect()
}

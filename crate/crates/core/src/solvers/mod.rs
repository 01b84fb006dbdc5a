pub mod alignment;
pub mod dyck;
pub mod lcs;
pub mod rna;

pub use alignment::min_alignment_cost;
pub use dyck::{dyck_cost, dyck_edit_bruteforce, dyck_edit_distance, DyckSeq, DyckSolution, DyckSymbol};
pub use lcs::{lcs_delta, lcs_delta_bitparallel, lcs_matching};
pub use rna::{rna_fold, rna_fold_bruteforce, rna_score, Folding};

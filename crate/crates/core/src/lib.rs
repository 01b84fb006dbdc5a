pub mod clique_encoding;
pub mod dyck_reduction;
pub mod error;
pub mod gadget;
pub mod graph;
pub mod reduction;
pub mod seq;
pub mod solvers;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{has_3k_clique_bruteforce, Clique, Graph};
pub use seq::{Seq, SeqType, Symbol};

//! Free algebras, noncommutative polynomials and rewriting.

pub mod confluence;
pub mod file;
pub mod ideal;
pub mod linalg;
pub mod morphism;
pub mod parse;
pub mod poly;
pub mod presentation;
pub mod symbol;

pub use file::{load_presentation, parse_presentation, specialize, PresentationFile};
pub use confluence::{check_local_confluence, complete_bounded, default_overlap_bound, ConfluenceReport, CriticalPair};
pub use ideal::{graded_basis, ideal_membership_bounded, irreducible_words, IdealSpan};
pub use morphism::{Morphism, MorphismReport};
pub use parse::parse_element;
pub use poly::{word_string, NCPoly, Word};
pub use presentation::{Builder, Generator, Presentation, Rule};
pub use symbol::Sym;

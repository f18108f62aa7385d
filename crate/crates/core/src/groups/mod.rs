//! Finitely presented groups: words, presentations, Smith normal form,
//! Todd–Coxeter enumeration, Reidemeister–Schreier rewriting, Tietze moves,
//! bounded consequence search and the built-in presentations.

mod abelian;
mod builtin;
mod coset;
mod presentation;
mod rewrite;
mod search;
pub mod snf;
mod word;

pub use abelian::{abelianize, central_in_class_two, relation_matrix, AbelianInvariants};
pub use builtin::{builtin_presentation, derive_k1hat, BuiltinName};
pub use coset::{derived_series_finite, todd_coxeter, CosetTable, DEFAULT_COSET_CAP};
pub use presentation::{CyclicCharacter, Presentation};
pub use rewrite::{kill_generators, reidemeister_schreier, tietze_eliminate};
pub use search::{consequence_search, Certificate, Outcome, SearchOptions, Step};
pub use snf::{smith_normal_form, Snf};
pub use word::{generator_of, letter, Letter, Word};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GroupError {
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("unknown generator {0:?}")]
    UnknownGenerator(String),
    #[error("duplicate generator {0:?}")]
    DuplicateGenerator(String),
    #[error("letter refers to generator {index} but only {count} exist")]
    BadLetter { index: usize, count: usize },
    #[error("relator {label} maps to {value} mod {modulus}, not 0")]
    NotCharacter { label: String, value: i64, modulus: u32 },
    #[error("character is not surjective onto Z/{0}")]
    NotSurjective(u32),
    #[error("generator {gen} cannot be eliminated with relator {relator}")]
    NotEliminable { gen: String, relator: String },
    #[error("coset table is incomplete")]
    IncompleteTable,
    #[error("bad parameters: {0}")]
    BadParameters(String),
}

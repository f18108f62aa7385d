//! Exact arithmetic in cyclotomic fields and root-of-unity bookkeeping.

mod number;
mod roots;
mod strata;
mod table;

pub use number::CycloNumber;
pub use roots::{classify_root_of_unity, half_plane_class, RootOfUnity};
pub use strata::{arithmetic_tuple_size, enumerate_strata, Stratum};
pub use table::{cyclotomic_polynomial, euler_phi};
pub(crate) use table::lcm;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CycloError {
    #[error("invalid operand: {0}")]
    InvalidOperand(String),
    #[error("{root} is not a {d}-th root of unity")]
    NotDthRoot { root: String, d: u32 },
    #[error("invalid degree {0}: need d >= 2")]
    InvalidDegree(i64),
    #[error("order {0} is excluded (m in {{1,2,3,4,6}} gives no arithmetic tuple)")]
    ExcludedOrder(u64),
    #[error("Galois exponent {k} is not coprime to conductor {conductor}")]
    NotCoprime { k: i64, conductor: u32 },
}

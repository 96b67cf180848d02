use num_bigint::BigUint;
use thiserror::Error;

#[derive(Error, Debug)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("not a group: {0}")]
    NotAGroup(String),

    #[error("invalid group spec: {0}")]
    InvalidSpec(String),

    #[error("group order {order} exceeds the enumeration limit {limit}")]
    SizeLimit { order: BigUint, limit: u64 },

    #[error("conjugation orbit exceeded the cap of {0} elements")]
    OrbitCap(usize),

    #[error("class product exceeded the cap of {0} pairs")]
    ProductCap(u64),

    #[error("element does not match the group shape: {0}")]
    ShapeMismatch(String),

    #[error("set is not G-invariant: conjugating {element} by {conjugator} leaves the set")]
    NotInvariant { element: String, conjugator: String },

    #[error("element {0} is not central")]
    NotCentral(String),

    #[error("element {element} has order {order}, expected a prime")]
    NotPrimeOrder { element: String, order: u64 },

    #[error("the top action is not transitive on the index set")]
    NotTransitive,

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("invalid Cayley-table file: {0}")]
    TableFormat(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Resource-style errors (caps and size limits) map to a distinct
    /// CLI exit code; everything else is a usage or claim problem.
    pub fn is_resource(&self) -> bool {
        matches!(
            self,
            Error::SizeLimit { .. } | Error::OrbitCap(_) | Error::ProductCap(_)
        )
    }
}

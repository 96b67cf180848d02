/// Resource caps for whole-group and orbit computations.
///
/// Orbit and product caps bound memory use for the wreath towers, whose
/// ambient groups are far too large to enumerate while their classes
/// stay tiny.
#[derive(Clone, Copy, Debug)]
pub struct Limits {
    /// Largest group order for which full enumeration (center, quotient,
    /// all-classes, table export) is permitted.
    pub max_enumerate: u64,
    /// Cap on the size of a single conjugation orbit.
    pub max_orbit: usize,
    /// Cap on the number of pairs expanded by a class product.
    pub max_product_pairs: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_enumerate: 1 << 15,
            max_orbit: 1_000_000,
            max_product_pairs: 10_000_000,
        }
    }
}

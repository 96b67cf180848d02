use std::fmt;

/// A structured group element, always stored in canonical form:
/// residues reduced into `[0, m)`, tuple and base-function lengths
/// matching the group spec, affine slopes nonzero.
///
/// The derived total order (residues numerically, tuples and base
/// functions lexicographically, wreath pairs by `(top, base)`, affine
/// maps by `(slope, shift)`) is the order used for canonical class
/// representatives and for all deterministic output.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Element {
    /// Residue modulo the cyclic order.
    Residue(u64),
    /// One entry per direct-product factor.
    Tuple(Vec<Element>),
    /// Wreath-product element. `top` precedes `base` so the derived
    /// order compares by (top, base function).
    WreathPair { top: Box<Element>, base: Vec<Element> },
    /// The map `x -> slope*x + shift` over F_p, slope nonzero.
    AffineMap { slope: u64, shift: u64 },
    /// Row index into a Cayley table; identity is index 0.
    TableIndex(usize),
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Residue(v) => write!(f, "{v}"),
            Element::Tuple(parts) => {
                write!(f, "(")?;
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{p}")?;
                }
                write!(f, ")")
            }
            Element::WreathPair { top, base } => {
                write!(f, "[(")?;
                for (i, p) in base.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{p}")?;
                }
                write!(f, ");{top}]")
            }
            Element::AffineMap { slope, shift } => write!(f, "aff({slope},{shift})"),
            Element::TableIndex(i) => write!(f, "{i}"),
        }
    }
}

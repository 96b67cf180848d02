//! Conjugacy-class orbits, class products, and decompositions of
//! G-invariant sets into classes.
//!
//! Orbits are closed under conjugation by the generators only, never by
//! the full group: the wreath towers have astronomically large ambient
//! groups while every class of interest stays tiny. In a finite group
//! conjugation by a generator is a permutation of finite order, so
//! closing under the generators alone reaches the whole orbit.

use std::collections::BTreeSet;

use crate::element::Element;
use crate::error::{Error, Result};
use crate::group::Group;
use crate::limits::Limits;

/// A conjugacy class: compare-minimal representative plus the full
/// element set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugacyClass {
    pub rep: Element,
    pub elements: BTreeSet<Element>,
}

impl ConjugacyClass {
    pub fn size(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, x: &Element) -> bool {
        self.elements.contains(x)
    }
}

/// A G-invariant set partitioned into classes, sorted by representative.
#[derive(Clone, Debug)]
pub struct InvariantSetDecomposition {
    pub classes: Vec<ConjugacyClass>,
    pub eta: usize,
    pub total_size: usize,
}

/// `class_size`, `n` with `class_size = p^n` (absent when the group is
/// not a p-group), and the class count of `Cl(a)Cl(a^-1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClassSquareStats {
    pub class_size: usize,
    pub n: Option<u32>,
    pub eta: usize,
}

/// Outcome of the size-p class dichotomy.
#[derive(Clone, Debug)]
pub enum SizePClass {
    /// `Cl(a)Cl(a^-1)` is a central subgroup `Z = <z>` of order p.
    CaseI { subgroup: BTreeSet<Element> },
    /// `Cl(a)Cl(a^-1)` is `{e}` plus `p-1` distinct classes of size p.
    CaseII { decomposition: InvariantSetDecomposition },
}

/// Orbit of `a` under conjugation, by breadth-first closure over the
/// generators.
pub fn conjugacy_class(group: &Group, a: &Element, limits: &Limits) -> Result<ConjugacyClass> {
    group.spec().check_element(a)?;
    let gens = group.generators();
    let mut inverses = Vec::with_capacity(gens.len());
    for g in gens {
        inverses.push(group.invert(g)?);
    }
    let mut elements = BTreeSet::new();
    elements.insert(a.clone());
    let mut queue = vec![a.clone()];
    while let Some(x) = queue.pop() {
        for (g, g_inv) in gens.iter().zip(&inverses) {
            let gx = group.multiply(g, &x)?;
            let y = group.multiply(&gx, g_inv)?;
            if elements.insert(y.clone()) {
                if elements.len() > limits.max_orbit {
                    return Err(Error::OrbitCap(limits.max_orbit));
                }
                queue.push(y);
            }
        }
    }
    let rep = elements.iter().next().expect("orbit is nonempty").clone();
    Ok(ConjugacyClass { rep, elements })
}

/// The full product set `{xy | x in A, y in B}`, deduplicated.
pub fn class_product(
    group: &Group,
    a: &ConjugacyClass,
    b: &ConjugacyClass,
    limits: &Limits,
) -> Result<BTreeSet<Element>> {
    let pairs = a.size() as u64 * b.size() as u64;
    if pairs > limits.max_product_pairs {
        return Err(Error::ProductCap(limits.max_product_pairs));
    }
    let mut out = BTreeSet::new();
    for x in &a.elements {
        for y in &b.elements {
            out.insert(group.multiply(x, y)?);
        }
    }
    Ok(out)
}

/// Verifies that `x` is closed under conjugation by the generators and
/// partitions it into conjugacy classes, minimal representatives first.
pub fn decompose(
    group: &Group,
    x: &BTreeSet<Element>,
    limits: &Limits,
) -> Result<InvariantSetDecomposition> {
    if x.is_empty() {
        return Err(Error::Precondition("cannot decompose an empty set".into()));
    }
    for e in x {
        for g in group.generators() {
            let y = group.conj(g, e)?;
            if !x.contains(&y) {
                return Err(Error::NotInvariant {
                    element: e.to_string(),
                    conjugator: g.to_string(),
                });
            }
        }
    }
    let mut remaining = x.clone();
    let mut classes = Vec::new();
    while let Some(min) = remaining.iter().next().cloned() {
        let class = conjugacy_class(group, &min, limits)?;
        for e in &class.elements {
            remaining.remove(e);
        }
        classes.push(class);
    }
    Ok(InvariantSetDecomposition {
        eta: classes.len(),
        total_size: x.len(),
        classes,
    })
}

/// Composite measurement for `Cl(a)Cl(a^-1)`.
pub fn eta_of_class_square(
    group: &Group,
    a: &Element,
    limits: &Limits,
) -> Result<ClassSquareStats> {
    let class = conjugacy_class(group, a, limits)?;
    let inv_class = conjugacy_class(group, &group.invert(a)?, limits)?;
    let product = class_product(group, &class, &inv_class, limits)?;
    let decomposition = decompose(group, &product, limits)?;
    let n = group.p_group().and_then(|(p, _)| {
        let mut size = class.size() as u64;
        let mut n = 0u32;
        while size % p == 0 {
            size /= p;
            n += 1;
        }
        (size == 1).then_some(n)
    });
    Ok(ClassSquareStats {
        class_size: class.size(),
        n,
        eta: decomposition.eta,
    })
}

/// True iff `a^-1` lies in `Cl(a)`.
pub fn class_equals_inverse(group: &Group, a: &Element, limits: &Limits) -> Result<bool> {
    let class = conjugacy_class(group, a, limits)?;
    Ok(class.contains(&group.invert(a)?))
}

/// The size-p class dichotomy: either `Cl(a)Cl(a^-1)` is a central
/// subgroup of order p, or it splits as `{e}` plus `p-1` classes of
/// size p. Either way the class count is p. When both descriptions
/// apply (possible only in degenerate p = 2 groups) case I wins.
pub fn classify_size_p_class(group: &Group, a: &Element, limits: &Limits) -> Result<SizePClass> {
    let (p, _) = group
        .p_group()
        .ok_or_else(|| Error::Precondition("group is not a p-group".into()))?;
    let class = conjugacy_class(group, a, limits)?;
    if class.size() as u64 != p {
        return Err(Error::Precondition(format!(
            "|Cl(a)| = {} but the dichotomy needs |Cl(a)| = {p}",
            class.size()
        )));
    }
    let inv_class = conjugacy_class(group, &group.invert(a)?, limits)?;
    let product = class_product(group, &class, &inv_class, limits)?;
    let identity = group.identity();
    let mut central_generator = None;
    for z in &product {
        if z != identity && group.is_central(z)? {
            central_generator = Some(z.clone());
            break;
        }
    }
    if let Some(z) = central_generator {
        // Z = <z> must be the whole product set and have order p.
        let mut subgroup = BTreeSet::new();
        let mut acc = identity.clone();
        loop {
            if !subgroup.insert(acc.clone()) {
                break;
            }
            acc = group.multiply(&acc, &z)?;
        }
        if subgroup.len() as u64 != p || subgroup != product {
            return Err(Error::Precondition(format!(
                "central element {z} found but Cl(a)Cl(a^-1) is not <{z}> of order {p}"
            )));
        }
        let eta = decompose(group, &product, limits)?.eta;
        if eta as u64 != p {
            return Err(Error::Precondition(format!(
                "case i found eta = {eta}, expected {p}"
            )));
        }
        Ok(SizePClass::CaseI { subgroup })
    } else {
        let decomposition = decompose(group, &product, limits)?;
        let mut singletons = 0usize;
        let mut size_p = 0usize;
        for c in &decomposition.classes {
            if c.size() == 1 && &c.rep == identity {
                singletons += 1;
            } else if c.size() as u64 == p {
                size_p += 1;
            } else {
                return Err(Error::Precondition(format!(
                    "case ii found a class of size {}",
                    c.size()
                )));
            }
        }
        if singletons != 1 || size_p as u64 != p - 1 || decomposition.eta as u64 != p {
            return Err(Error::Precondition(format!(
                "case ii decomposition is {singletons} singleton(s) + {size_p} class(es) of size {p}"
            )));
        }
        Ok(SizePClass::CaseII { decomposition })
    }
}

/// Partition of the whole group into conjugacy classes.
pub fn all_classes(group: &Group, limits: &Limits) -> Result<Vec<ConjugacyClass>> {
    let mut remaining: BTreeSet<Element> = group.enumerate(limits)?.into_iter().collect();
    let mut classes = Vec::new();
    while let Some(min) = remaining.iter().next().cloned() {
        let class = conjugacy_class(group, &min, limits)?;
        for e in &class.elements {
            remaining.remove(e);
        }
        classes.push(class);
    }
    Ok(classes)
}

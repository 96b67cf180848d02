//! Built groups: generators, enumeration, centers, central quotients.

use std::collections::{BTreeSet, HashMap};
use std::sync::Arc;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::element::Element;
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::spec::{is_prime, smallest_primitive_root, Action, GroupSpec};
use crate::table;

/// A constructed group: resolved spec, identity, generating set, and
/// analytic order. Immutable after construction; all operations are
/// pure.
#[derive(Clone, Debug)]
pub struct Group {
    spec: GroupSpec,
    identity: Element,
    generators: Vec<Element>,
    order: BigUint,
}

/// Projection onto a table-backed quotient group.
#[derive(Clone, Debug)]
pub struct QuotientMap {
    coset_of: HashMap<Element, usize>,
}

impl QuotientMap {
    pub fn project(&self, x: &Element) -> Result<Element> {
        self.coset_of
            .get(x)
            .map(|&i| Element::TableIndex(i))
            .ok_or_else(|| Error::ShapeMismatch(format!("{x} is not an element of the quotiented group")))
    }
}

pub fn build_group(spec: GroupSpec) -> Result<Group> {
    spec.validate()?;
    // Heisenberg specs are materialized as validated Cayley tables.
    if let GroupSpec::Heisenberg(p) = spec {
        return crate::constructions::heisenberg_group(p);
    }
    if let GroupSpec::Table { n, table } = &spec {
        return table::validate_table(*n, table.as_ref().clone(), false);
    }
    let generators = generators_for(&spec)?;
    let group = Group {
        identity: spec.identity(),
        order: spec.order(),
        spec,
        generators,
    };
    for g in &group.generators {
        group.spec.check_element(g)?;
        debug_assert_eq!(group.multiply(g, &group.identity)?, *g);
    }
    Ok(group)
}

pub(crate) fn group_from_table_parts(
    n: usize,
    table: Arc<Vec<usize>>,
) -> Group {
    let spec = GroupSpec::Table { n, table };
    Group {
        identity: Element::TableIndex(0),
        order: BigUint::from(n),
        generators: (0..n).map(Element::TableIndex).collect(),
        spec,
    }
}

fn generators_for(spec: &GroupSpec) -> Result<Vec<Element>> {
    match spec {
        GroupSpec::Cyclic(m) => Ok(vec![Element::Residue(1 % m)]),
        GroupSpec::DirectProduct(parts) => {
            let mut gens = Vec::new();
            for (i, part) in parts.iter().enumerate() {
                for g in generators_for(part)? {
                    let mut tuple: Vec<Element> =
                        parts.iter().map(|p| p.identity()).collect();
                    tuple[i] = g;
                    gens.push(Element::Tuple(tuple));
                }
            }
            Ok(gens)
        }
        GroupSpec::Wreath { base, top_order } => {
            let size = *top_order as usize;
            let base_id = base.identity();
            let mut gens = Vec::new();
            for g in generators_for(base)? {
                let mut fill = vec![base_id.clone(); size];
                fill[0] = g;
                gens.push(Element::WreathPair {
                    top: Box::new(Element::Residue(0)),
                    base: fill,
                });
            }
            gens.push(Element::WreathPair {
                top: Box::new(Element::Residue(1 % top_order)),
                base: vec![base_id; size],
            });
            Ok(gens)
        }
        GroupSpec::WreathOverSet {
            base,
            top,
            set_size,
            action,
        } => {
            let top_gens = generators_for(top)?;
            check_transitive(top, &top_gens, *set_size, *action)?;
            let base_id = base.identity();
            let mut gens = Vec::new();
            // Base generators at a single designated point; transitivity
            // of the top action spreads them to every point.
            for g in generators_for(base)? {
                let mut fill = vec![base_id.clone(); *set_size];
                fill[0] = g;
                gens.push(Element::WreathPair {
                    top: Box::new(top.identity()),
                    base: fill,
                });
            }
            for t in top_gens {
                gens.push(Element::WreathPair {
                    top: Box::new(t),
                    base: vec![base_id.clone(); *set_size],
                });
            }
            Ok(gens)
        }
        GroupSpec::Affine(p) => Ok(vec![
            Element::AffineMap { slope: 1, shift: 1 % p },
            Element::AffineMap {
                slope: smallest_primitive_root(*p),
                shift: 0,
            },
        ]),
        // Cayley-table groups carry no preferred generating set; every
        // nonidentity element is used.
        GroupSpec::Table { n, .. } => Ok((1..*n).map(Element::TableIndex).collect()),
        GroupSpec::Heisenberg(_) => unreachable!("resolved in build_group"),
    }
}

fn check_transitive(
    top: &GroupSpec,
    top_gens: &[Element],
    set_size: usize,
    action: Action,
) -> Result<()> {
    let mut reached = vec![false; set_size];
    reached[0] = true;
    let mut frontier = vec![0usize];
    while let Some(x) = frontier.pop() {
        for t in top_gens {
            let y = GroupSpec::act_point(top, action, t, x)?;
            if !reached[y] {
                reached[y] = true;
                frontier.push(y);
            }
        }
    }
    if reached.iter().all(|&r| r) {
        Ok(())
    } else {
        Err(Error::NotTransitive)
    }
}

impl Group {
    pub fn spec(&self) -> &GroupSpec {
        &self.spec
    }

    pub fn identity(&self) -> &Element {
        &self.identity
    }

    pub fn generators(&self) -> &[Element] {
        &self.generators
    }

    pub fn order(&self) -> &BigUint {
        &self.order
    }

    pub fn multiply(&self, x: &Element, y: &Element) -> Result<Element> {
        self.spec.multiply(x, y)
    }

    pub fn invert(&self, x: &Element) -> Result<Element> {
        self.spec.invert(x)
    }

    /// Conjugate: `g x g^-1`.
    pub fn conj(&self, g: &Element, x: &Element) -> Result<Element> {
        let gx = self.spec.multiply(g, x)?;
        self.spec.multiply(&gx, &self.spec.invert(g)?)
    }

    pub fn is_enumerable(&self, limits: &Limits) -> bool {
        self.order <= BigUint::from(limits.max_enumerate)
    }

    /// The multiplicative order of `x`.
    pub fn element_order(&self, x: &Element) -> Result<u64> {
        let mut acc = x.clone();
        let mut n = 1u64;
        while acc != self.identity {
            acc = self.multiply(&acc, x)?;
            n += 1;
            if n > 1_000_000 {
                return Err(Error::Precondition(format!(
                    "order of {x} exceeds 10^6"
                )));
            }
        }
        Ok(n)
    }

    /// Every element exactly once, in ascending compare order.
    pub fn enumerate(&self, limits: &Limits) -> Result<Vec<Element>> {
        if !self.is_enumerable(limits) {
            return Err(Error::SizeLimit {
                order: self.order.clone(),
                limit: limits.max_enumerate,
            });
        }
        let elems = self.spec.elements_in_order()?;
        debug_assert_eq!(BigUint::from(elems.len()), self.order);
        Ok(elems)
    }

    /// Elements commuting with every generator (hence with all of G).
    pub fn center(&self, limits: &Limits) -> Result<BTreeSet<Element>> {
        let mut out = BTreeSet::new();
        for z in self.enumerate(limits)? {
            let mut central = true;
            for g in &self.generators {
                if self.multiply(&z, g)? != self.multiply(g, &z)? {
                    central = false;
                    break;
                }
            }
            if central {
                out.insert(z);
            }
        }
        Ok(out)
    }

    pub fn is_central(&self, z: &Element) -> Result<bool> {
        for g in &self.generators {
            if self.multiply(z, g)? != self.multiply(g, z)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `(p, k)` when the order is `p^k` with `p` prime and `k >= 1`.
    pub fn p_group(&self) -> Option<(u64, u32)> {
        let mut order = self.order.clone();
        if order.is_one() || order.is_zero() {
            return None;
        }
        let mut p = 2u64;
        loop {
            if (&order % BigUint::from(p)).is_zero() {
                break;
            }
            p += 1;
            if p > 100_000 {
                return None;
            }
        }
        let big_p = BigUint::from(p);
        let mut k = 0u32;
        while (&order % &big_p).is_zero() {
            order /= &big_p;
            k += 1;
        }
        if order.is_one() {
            Some((p, k))
        } else {
            None
        }
    }

    /// Quotient by the central subgroup `N = <z>` of prime order,
    /// returned as a table-backed group together with the projection.
    pub fn quotient_by_central(
        &self,
        z: &Element,
        limits: &Limits,
    ) -> Result<(Group, QuotientMap)> {
        if !self.is_central(z)? {
            return Err(Error::NotCentral(z.to_string()));
        }
        let p = self.element_order(z)?;
        if !is_prime(p) {
            return Err(Error::NotPrimeOrder {
                element: z.to_string(),
                order: p,
            });
        }
        let elems = self.enumerate(limits)?;
        let mut subgroup = Vec::with_capacity(p as usize);
        let mut acc = self.identity.clone();
        for _ in 0..p {
            subgroup.push(acc.clone());
            acc = self.multiply(&acc, z)?;
        }

        // Elements arrive sorted, so the first unseen member of each
        // coset is its minimal representative and coset indices come
        // out sorted by representative, identity first.
        let mut coset_of: HashMap<Element, usize> = HashMap::with_capacity(elems.len());
        let mut reps: Vec<Element> = Vec::new();
        for e in &elems {
            if coset_of.contains_key(e) {
                continue;
            }
            let idx = reps.len();
            for n in &subgroup {
                coset_of.insert(self.multiply(e, n)?, idx);
            }
            reps.push(e.clone());
        }
        debug_assert_eq!(reps[0], self.identity);

        let n = reps.len();
        let mut tbl = vec![0usize; n * n];
        for i in 0..n {
            for j in 0..n {
                let prod = self.multiply(&reps[i], &reps[j])?;
                tbl[i * n + j] = coset_of[&prod];
            }
        }
        // Quotient of a group by a central subgroup is a group; the
        // cheap axioms are still checked, full associativity only for
        // small tables.
        let quotient = table::validate_table(n, tbl, true)?;

        // Deterministic homomorphism spot check.
        let step = (elems.len() / 17).max(1);
        for (i, x) in elems.iter().step_by(step).enumerate() {
            let y = &elems[(i * 7 + 3) % elems.len()];
            let lhs = coset_of[&self.multiply(x, y)?];
            let rhs = quotient.multiply(
                &Element::TableIndex(coset_of[x]),
                &Element::TableIndex(coset_of[y]),
            )?;
            if rhs != Element::TableIndex(lhs) {
                return Err(Error::NotAGroup(
                    "quotient projection is not a homomorphism".into(),
                ));
            }
        }
        Ok((quotient, QuotientMap { coset_of }))
    }

    /// Cayley table of an enumerable group, identity at index 0, rows
    /// and columns in the enumeration order.
    pub fn to_table(&self, limits: &Limits) -> Result<(usize, Vec<usize>)> {
        let elems = self.enumerate(limits)?;
        let n = elems.len();
        let index: HashMap<&Element, usize> =
            elems.iter().enumerate().map(|(i, e)| (e, i)).collect();
        let mut tbl = vec![0usize; n * n];
        for i in 0..n {
            for j in 0..n {
                let prod = self.multiply(&elems[i], &elems[j])?;
                tbl[i * n + j] = index[&prod];
            }
        }
        Ok((n, tbl))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn limits() -> Limits {
        Limits::default()
    }

    #[test]
    fn cyclic_group_basics() {
        let g = build_group(GroupSpec::Cyclic(9)).unwrap();
        assert_eq!(g.order(), &BigUint::from(9u32));
        assert_eq!(g.generators(), &[Element::Residue(1)]);
        assert_eq!(g.enumerate(&limits()).unwrap().len(), 9);
    }

    #[test]
    fn affine_group_order_and_generators() {
        let g = build_group(GroupSpec::Affine(3)).unwrap();
        assert_eq!(g.order(), &BigUint::from(6u32));
        assert_eq!(
            g.generators(),
            &[
                Element::AffineMap { slope: 1, shift: 1 },
                Element::AffineMap { slope: 2, shift: 0 },
            ]
        );
        assert_eq!(g.enumerate(&limits()).unwrap().len(), 6);
    }

    #[test]
    fn wreath_group_order() {
        let g = build_group(GroupSpec::Wreath {
            base: Box::new(GroupSpec::Cyclic(9)),
            top_order: 3,
        })
        .unwrap();
        assert_eq!(g.order(), &BigUint::from(2187u32));
    }

    #[test]
    fn non_prime_wreath_rejected() {
        let err = build_group(GroupSpec::Wreath {
            base: Box::new(GroupSpec::Cyclic(9)),
            top_order: 4,
        })
        .unwrap_err();
        assert!(matches!(err, Error::NotPrime(4)));
    }

    #[test]
    fn enumeration_size_limit() {
        let g = build_group(GroupSpec::Wreath {
            base: Box::new(GroupSpec::Cyclic(25)),
            top_order: 5,
        })
        .unwrap();
        let err = g.enumerate(&limits()).unwrap_err();
        assert!(matches!(err, Error::SizeLimit { .. }));
    }

    #[test]
    fn center_of_abelian_group_is_everything() {
        let g = build_group(GroupSpec::Cyclic(9)).unwrap();
        assert_eq!(g.center(&limits()).unwrap().len(), 9);
    }

    #[test]
    fn p_group_detection() {
        let g = build_group(GroupSpec::Wreath {
            base: Box::new(GroupSpec::Cyclic(9)),
            top_order: 3,
        })
        .unwrap();
        assert_eq!(g.p_group(), Some((3, 7)));
        let aff = build_group(GroupSpec::Affine(5)).unwrap();
        assert_eq!(aff.p_group(), None);
    }

    #[test]
    fn cyclic4_quotient_by_order2() {
        let g = build_group(GroupSpec::Cyclic(4)).unwrap();
        let (q, map) = g
            .quotient_by_central(&Element::Residue(2), &limits())
            .unwrap();
        assert_eq!(q.order(), &BigUint::from(2u32));
        assert_eq!(map.project(&Element::Residue(0)).unwrap(), Element::TableIndex(0));
        assert_eq!(map.project(&Element::Residue(2)).unwrap(), Element::TableIndex(0));
        assert_eq!(
            map.project(&Element::Residue(1)).unwrap(),
            map.project(&Element::Residue(3)).unwrap()
        );
    }

    #[test]
    fn quotient_rejects_noncentral() {
        let g = build_group(GroupSpec::Affine(3)).unwrap();
        let err = g
            .quotient_by_central(&Element::AffineMap { slope: 1, shift: 1 }, &limits())
            .unwrap_err();
        assert!(matches!(err, Error::NotCentral(_)));
    }

    #[test]
    fn element_orders() {
        let g = build_group(GroupSpec::Cyclic(9)).unwrap();
        assert_eq!(g.element_order(&Element::Residue(1)).unwrap(), 9);
        assert_eq!(g.element_order(&Element::Residue(3)).unwrap(), 3);
        assert_eq!(g.element_order(&Element::Residue(0)).unwrap(), 1);
    }
}

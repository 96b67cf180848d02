//! Shared helpers for the integration suites: an independent
//! brute-force conjugacy oracle and the standard group corpus.

use std::collections::BTreeSet;

use num_traits::ToPrimitive;
use rand::Rng;

use classprod::constructions::{self, FamilyInstance};
use classprod::group::build_group;
use classprod::{Element, Group, GroupSpec, Limits};

/// Brute-force conjugacy orbit: conjugate by every group element.
/// Independent of the generator-BFS implementation path.
pub fn brute_class(group: &Group, a: &Element, limits: &Limits) -> BTreeSet<Element> {
    group
        .enumerate(limits)
        .unwrap()
        .iter()
        .map(|g| group.conj(g, a).unwrap())
        .collect()
}

/// Random element as a bounded product of generators and their
/// inverses; uniform for enumerable groups is not required here.
pub fn random_element<R: Rng>(group: &Group, rng: &mut R, len: usize) -> Element {
    let gens = group.generators();
    let mut acc = group.identity().clone();
    for _ in 0..len {
        let g = &gens[rng.gen_range(0..gens.len())];
        let factor = if rng.gen_bool(0.5) {
            g.clone()
        } else {
            group.invert(g).unwrap()
        };
        acc = group.multiply(&acc, &factor).unwrap();
    }
    acc
}

/// Every family instance the property suites run over.
pub fn family_corpus(limits: &Limits) -> Vec<FamilyInstance> {
    let mut corpus = constructions::catalog().unwrap();
    corpus.push(constructions::heisenberg(5).unwrap());
    corpus.push(constructions::heisenberg(7).unwrap());
    corpus.push(constructions::remark_b_group(2).unwrap());
    corpus.push(constructions::remark_b_group(3).unwrap());
    corpus.push(constructions::tower(2, 2, limits).unwrap());
    corpus.push(constructions::tower(3, 1, limits).unwrap());
    corpus.push(constructions::supersolvable_example(2).unwrap());
    corpus.push(constructions::supersolvable_example(3).unwrap());
    corpus
}

/// Plain groups (no distinguished element) that broaden the corpus.
pub fn extra_groups() -> Vec<(String, Group)> {
    let mut out = Vec::new();
    for p in [3, 5] {
        out.push((
            format!("aff:{p}"),
            build_group(GroupSpec::Affine(p)).unwrap(),
        ));
    }
    out.push((
        "wreath(cyclic:4,2)".into(),
        build_group(GroupSpec::Wreath {
            base: Box::new(GroupSpec::Cyclic(4)),
            top_order: 2,
        })
        .unwrap(),
    ));
    out.push((
        "dirprod(cyclic:2,cyclic:4)".into(),
        build_group(GroupSpec::DirectProduct(vec![
            GroupSpec::Cyclic(2),
            GroupSpec::Cyclic(4),
        ]))
        .unwrap(),
    ));
    out
}

pub fn order_u64(group: &Group) -> Option<u64> {
    group.order().to_u64()
}

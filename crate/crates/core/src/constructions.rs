//! The concrete group families under study, each packaged with the
//! distinguished element whose class square gets analyzed.

use std::collections::BTreeSet;

use crate::classes::{self, conjugacy_class};
use crate::element::Element;
use crate::error::{Error, Result};
use crate::group::{build_group, Group};
use crate::limits::Limits;
use crate::spec::{is_prime, GroupSpec};
use crate::table::{parse_table_text, validate_table};

/// A group together with a distinguished element and the parameters it
/// was built from.
#[derive(Clone, Debug)]
pub struct FamilyInstance {
    pub group: Group,
    pub distinguished: Element,
    pub family_name: String,
    pub params: Vec<(String, u64)>,
}

/// Cayley table of the group of upper unitriangular 3x3 matrices over
/// F_p, encoded as triples (a, b, c) with index a*p^2 + b*p + c and
/// product (a+a', b+b', c+c'+a*b').
pub(crate) fn heisenberg_table(p: u64) -> (usize, Vec<usize>) {
    let p = p as usize;
    let n = p * p * p;
    let mut table = vec![0usize; n * n];
    for x in 0..n {
        let (a, b, c) = (x / (p * p), x / p % p, x % p);
        for y in 0..n {
            let (a2, b2, c2) = (y / (p * p), y / p % p, y % p);
            let prod = ((a + a2) % p) * p * p + ((b + b2) % p) * p + (c + c2 + a * b2) % p;
            table[x * n + y] = prod;
        }
    }
    (n, table)
}

pub(crate) fn heisenberg_group(p: u64) -> Result<Group> {
    let (n, table) = heisenberg_table(p);
    // The matrix model is associative by construction; the full sweep
    // still runs for p <= 5 (order <= 256 holds only for p = 3, 5).
    validate_table(n, table, true)
}

/// Extraspecial group of order p^3 and exponent p, for odd primes p.
/// The distinguished element is a noncentral generator.
pub fn heisenberg(p: u64) -> Result<FamilyInstance> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if p == 2 {
        return Err(Error::InvalidSpec(
            "no exponent-2 extraspecial group of order 8".into(),
        ));
    }
    let group = heisenberg_group(p)?;
    // Exponent p: x^p = e for every element.
    let limits = Limits::default();
    for x in group.enumerate(&limits)? {
        let mut acc = group.identity().clone();
        for _ in 0..p {
            acc = group.multiply(&acc, &x)?;
        }
        if &acc != group.identity() {
            return Err(Error::Precondition(format!(
                "element {x} does not have order dividing {p}"
            )));
        }
    }
    Ok(FamilyInstance {
        distinguished: Element::TableIndex((p * p) as usize),
        group,
        family_name: "heisenberg".into(),
        params: vec![("p".into(), p)],
    })
}

/// The wreath product of C_{p^2} by C_p, with distinguished element
/// a = (c, e, ..., e; id) for c of order p^2.
pub fn remark_b_group(p: u64) -> Result<FamilyInstance> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let group = build_group(GroupSpec::Wreath {
        base: Box::new(GroupSpec::Cyclic(p * p)),
        top_order: p,
    })?;
    let mut base = vec![Element::Residue(0); p as usize];
    base[0] = Element::Residue(1);
    Ok(FamilyInstance {
        group,
        distinguished: Element::WreathPair {
            top: Box::new(Element::Residue(0)),
            base,
        },
        family_name: "remark_b".into(),
        params: vec![("p".into(), p)],
    })
}

/// One wreath step: from (G_0, g_0) with Cl(g_0) != Cl(g_0^-1) to
/// (G_0 wr C_p, (g_0, e, ..., e; id)). Postconditions
/// |Cl(a)| = p|Cl(g_0)| and Cl(a) != Cl(a^-1) are recomputed, not
/// assumed.
pub fn wreath_construction(
    base: &FamilyInstance,
    p: u64,
    limits: &Limits,
) -> Result<FamilyInstance> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    match base.group.p_group() {
        Some((q, _)) if q == p => {}
        other => {
            return Err(Error::Precondition(format!(
                "base group must be a {p}-group, found order {} ({other:?})",
                base.group.order()
            )))
        }
    }
    if classes::class_equals_inverse(&base.group, &base.distinguished, limits)? {
        return Err(Error::Precondition(format!(
            "Cl(g0) = Cl(g0^-1) for g0 = {}; the construction needs them distinct",
            base.distinguished
        )));
    }
    let base_class = conjugacy_class(&base.group, &base.distinguished, limits)?;
    let group = build_group(GroupSpec::Wreath {
        base: Box::new(base.group.spec().clone()),
        top_order: p,
    })?;
    let mut fill = vec![base.group.identity().clone(); p as usize];
    fill[0] = base.distinguished.clone();
    let a = Element::WreathPair {
        top: Box::new(Element::Residue(0)),
        base: fill,
    };
    let class = conjugacy_class(&group, &a, limits)?;
    if class.size() as u64 != p * base_class.size() as u64 {
        return Err(Error::Precondition(format!(
            "|Cl(a)| = {} but p|Cl(g0)| = {}",
            class.size(),
            p * base_class.size() as u64
        )));
    }
    if class.contains(&group.invert(&a)?) {
        return Err(Error::Precondition(
            "Cl(a) = Cl(a^-1) in the constructed wreath product".into(),
        ));
    }
    Ok(FamilyInstance {
        group,
        distinguished: a,
        family_name: "wreath_construction".into(),
        params: vec![("p".into(), p)],
    })
}

/// Iterated wreath tower: level 0 is (C_{p^2}, c), each further level
/// applies `wreath_construction`. The level-n distinguished element has
/// class size p^n.
pub fn tower(p: u64, n: u64, limits: &Limits) -> Result<FamilyInstance> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let mut instance = FamilyInstance {
        group: build_group(GroupSpec::Cyclic(p * p))?,
        distinguished: Element::Residue(1),
        family_name: "tower".into(),
        params: vec![("p".into(), p), ("n".into(), 0)],
    };
    for level in 1..=n {
        instance = wreath_construction(&instance, p, limits)?;
        instance.family_name = "tower".into();
        instance.params = vec![("p".into(), p), ("n".into(), level)];
    }
    Ok(instance)
}

/// The supersolvable example: C_p wreathed over Aff(F_p) acting
/// naturally on F_p, distinguished element c at point 0 with identity
/// top. Order p^p * p(p-1).
pub fn supersolvable_example(p: u64) -> Result<FamilyInstance> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let group = build_group(GroupSpec::WreathOverSet {
        base: Box::new(GroupSpec::Cyclic(p)),
        top: Box::new(GroupSpec::Affine(p)),
        set_size: p as usize,
        action: crate::spec::Action::AffineOnField,
    })?;
    let mut base = vec![Element::Residue(0); p as usize];
    base[0] = Element::Residue(1);
    Ok(FamilyInstance {
        group,
        distinguished: Element::WreathPair {
            top: Box::new(Element::AffineMap { slope: 1, shift: 0 }),
            base,
        },
        family_name: "supersolvable".into(),
        params: vec![("p".into(), p)],
    })
}

struct CatalogDef {
    name: &'static str,
    text: &'static str,
    distinguished: usize,
    p: u64,
}

/// Shipped Cayley tables; re-validated at load. Distinguished indices
/// refer to the generation order documented in each file's header.
const CATALOG: &[CatalogDef] = &[
    CatalogDef {
        name: "q8",
        text: include_str!("../tables/q8.tbl"),
        distinguished: 2, // i
        p: 2,
    },
    CatalogDef {
        name: "d4",
        text: include_str!("../tables/d4.tbl"),
        distinguished: 1, // the rotation r
        p: 2,
    },
    CatalogDef {
        name: "c4",
        text: include_str!("../tables/c4.tbl"),
        distinguished: 1,
        p: 2,
    },
    CatalogDef {
        name: "c2xc2",
        text: include_str!("../tables/c2xc2.tbl"),
        distinguished: 2, // (1, 0)
        p: 2,
    },
    CatalogDef {
        name: "heis3",
        text: include_str!("../tables/heis3.tbl"),
        distinguished: 9, // the matrix (1,0,0), noncentral
        p: 3,
    },
    CatalogDef {
        name: "c9rc3",
        text: include_str!("../tables/c9rc3.tbl"),
        distinguished: 3, // the order-9 generator a
        p: 3,
    },
    CatalogDef {
        name: "mod16",
        text: include_str!("../tables/mod16.tbl"),
        distinguished: 2, // the order-8 generator a
        p: 2,
    },
    CatalogDef {
        name: "c9",
        text: include_str!("../tables/c9.tbl"),
        distinguished: 1,
        p: 3,
    },
];

pub fn catalog_names() -> Vec<&'static str> {
    CATALOG.iter().map(|d| d.name).collect()
}

pub fn catalog_entry(name: &str) -> Result<FamilyInstance> {
    let def = CATALOG
        .iter()
        .find(|d| d.name == name)
        .ok_or_else(|| Error::InvalidSpec(format!("unknown catalog group {name:?}")))?;
    let (n, table) = parse_table_text(def.text)?;
    let group = validate_table(n, table, false)?;
    Ok(FamilyInstance {
        distinguished: Element::TableIndex(def.distinguished),
        group,
        family_name: format!("catalog:{}", def.name),
        params: vec![("p".into(), def.p)],
    })
}

/// The fixed corpus of small groups used by the theorem sweeps.
pub fn catalog() -> Result<Vec<FamilyInstance>> {
    CATALOG.iter().map(|d| catalog_entry(d.name)).collect()
}

/// Verification helper: the class-product of a noncentral class with
/// its inverse class, compared against the center.
pub fn class_square_equals_center(
    group: &Group,
    a: &Element,
    limits: &Limits,
) -> Result<bool> {
    let class = conjugacy_class(group, a, limits)?;
    let inv_class = conjugacy_class(group, &group.invert(a)?, limits)?;
    let product = classes::class_product(group, &class, &inv_class, limits)?;
    let center: BTreeSet<Element> = group.center(limits)?;
    Ok(product == center)
}

//! Structural group descriptions and the arithmetic of their elements.

use std::sync::Arc;

use num_bigint::BigUint;
use num_traits::One;

use crate::element::Element;
use crate::error::{Error, Result};

/// How the top group of a `WreathOverSet` permutes the index set.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Action {
    /// Top group `Cyclic(n)` acts on `Z_n` by `t . x = x + t`.
    CyclicShift,
    /// Top group `Affine(p)` acts on `F_p` by `(m, b) . x = m*x + b`.
    AffineOnField,
}

/// Structural description of a group built from constructors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupSpec {
    Cyclic(u64),
    DirectProduct(Vec<GroupSpec>),
    /// Wreath product `base ≀ C_p`: the direct power `base^p` extended
    /// by a cyclic top group shifting coordinates.
    Wreath { base: Box<GroupSpec>, top_order: u64 },
    /// Wreath product of `base` by `top` relative to an index set of
    /// `set_size` points, with the named action.
    WreathOverSet {
        base: Box<GroupSpec>,
        top: Box<GroupSpec>,
        set_size: usize,
        action: Action,
    },
    /// Affine group of F_p: maps `x -> m*x + b`, `m != 0`; order p(p-1).
    Affine(u64),
    /// Heisenberg group of order p^3 and exponent p (p odd); resolved
    /// to a validated Cayley table at build time.
    Heisenberg(u64),
    /// Explicit Cayley table; identity at index 0.
    Table { n: usize, table: Arc<Vec<usize>> },
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Smallest generator of the multiplicative group mod p. For p = 2 the
/// unit group is trivial and 1 is returned.
pub fn smallest_primitive_root(p: u64) -> u64 {
    if p == 2 {
        return 1;
    }
    'cand: for g in 2..p {
        let mut x = g;
        let mut ord = 1;
        while x != 1 {
            x = x * g % p;
            ord += 1;
            if ord > p {
                continue 'cand;
            }
        }
        if ord == p - 1 {
            return g;
        }
    }
    unreachable!("every prime has a primitive root")
}

fn shape_err(spec: &GroupSpec, x: &Element) -> Error {
    Error::ShapeMismatch(format!("element {x} does not fit spec {spec:?}"))
}

impl GroupSpec {
    /// Structural sanity checks: positivity, primality, action/top
    /// consistency. Table axioms are checked separately by
    /// `table::validate_table`.
    pub fn validate(&self) -> Result<()> {
        match self {
            GroupSpec::Cyclic(m) => {
                if *m < 1 {
                    return Err(Error::InvalidSpec("cyclic order must be >= 1".into()));
                }
            }
            GroupSpec::DirectProduct(parts) => {
                if parts.is_empty() {
                    return Err(Error::InvalidSpec("empty direct product".into()));
                }
                for p in parts {
                    if matches!(p, GroupSpec::Heisenberg(_)) {
                        return Err(Error::InvalidSpec(
                            "heisenberg factors must be materialized as tables first".into(),
                        ));
                    }
                    p.validate()?;
                }
            }
            GroupSpec::Wreath { base, top_order } => {
                if !is_prime(*top_order) {
                    return Err(Error::NotPrime(*top_order));
                }
                if matches!(base.as_ref(), GroupSpec::Heisenberg(_)) {
                    return Err(Error::InvalidSpec(
                        "heisenberg bases must be materialized as tables first".into(),
                    ));
                }
                base.validate()?;
            }
            GroupSpec::WreathOverSet {
                base,
                top,
                set_size,
                action,
            } => {
                if matches!(base.as_ref(), GroupSpec::Heisenberg(_)) {
                    return Err(Error::InvalidSpec(
                        "heisenberg bases must be materialized as tables first".into(),
                    ));
                }
                base.validate()?;
                top.validate()?;
                let consistent = match (action, top.as_ref()) {
                    (Action::CyclicShift, GroupSpec::Cyclic(n)) => *n as usize == *set_size,
                    (Action::AffineOnField, GroupSpec::Affine(p)) => *p as usize == *set_size,
                    _ => false,
                };
                if !consistent {
                    return Err(Error::InvalidSpec(
                        "wreath action does not match the top group and set size".into(),
                    ));
                }
            }
            GroupSpec::Affine(p) => {
                if !is_prime(*p) {
                    return Err(Error::NotPrime(*p));
                }
            }
            GroupSpec::Heisenberg(p) => {
                if !is_prime(*p) {
                    return Err(Error::NotPrime(*p));
                }
                if *p == 2 {
                    return Err(Error::InvalidSpec(
                        "no exponent-2 extraspecial group of order 8".into(),
                    ));
                }
            }
            GroupSpec::Table { n, table } => {
                if table.len() != n * n {
                    return Err(Error::InvalidSpec("table is not n x n".into()));
                }
            }
        }
        Ok(())
    }

    /// Analytic order formula for the spec.
    pub fn order(&self) -> BigUint {
        match self {
            GroupSpec::Cyclic(m) => BigUint::from(*m),
            GroupSpec::DirectProduct(parts) => {
                parts.iter().fold(BigUint::one(), |acc, p| acc * p.order())
            }
            GroupSpec::Wreath { base, top_order } => {
                base.order().pow(*top_order as u32) * top_order
            }
            GroupSpec::WreathOverSet {
                base,
                top,
                set_size,
                ..
            } => base.order().pow(*set_size as u32) * top.order(),
            GroupSpec::Affine(p) => BigUint::from(p * (p - 1)),
            GroupSpec::Heisenberg(p) => BigUint::from(p * p * p),
            GroupSpec::Table { n, .. } => BigUint::from(*n),
        }
    }

    pub fn identity(&self) -> Element {
        match self {
            GroupSpec::Cyclic(_) => Element::Residue(0),
            GroupSpec::DirectProduct(parts) => {
                Element::Tuple(parts.iter().map(|p| p.identity()).collect())
            }
            GroupSpec::Wreath { base, top_order } => Element::WreathPair {
                top: Box::new(Element::Residue(0)),
                base: vec![base.identity(); *top_order as usize],
            },
            GroupSpec::WreathOverSet {
                base,
                top,
                set_size,
                ..
            } => Element::WreathPair {
                top: Box::new(top.identity()),
                base: vec![base.identity(); *set_size],
            },
            GroupSpec::Affine(_) => Element::AffineMap { slope: 1, shift: 0 },
            GroupSpec::Heisenberg(_) => Element::TableIndex(0),
            GroupSpec::Table { .. } => Element::TableIndex(0),
        }
    }

    /// Wreath components as (base, top, set size, action). The plain
    /// `Wreath` variant is the cyclic-shift instance of the general one.
    fn wreath_parts(&self) -> Option<(&GroupSpec, GroupSpec, usize, Action)> {
        match self {
            GroupSpec::Wreath { base, top_order } => Some((
                base,
                GroupSpec::Cyclic(*top_order),
                *top_order as usize,
                Action::CyclicShift,
            )),
            GroupSpec::WreathOverSet {
                base,
                top,
                set_size,
                action,
            } => Some((base, top.as_ref().clone(), *set_size, *action)),
            _ => None,
        }
    }

    /// Image of the point `x` under the action of the top element `t`.
    pub fn act_point(top: &GroupSpec, action: Action, t: &Element, x: usize) -> Result<usize> {
        match (action, top, t) {
            (Action::CyclicShift, GroupSpec::Cyclic(n), Element::Residue(v)) => {
                Ok(((x as u64 + v) % n) as usize)
            }
            (Action::AffineOnField, GroupSpec::Affine(p), Element::AffineMap { slope, shift }) => {
                Ok(((slope * x as u64 + shift) % p) as usize)
            }
            _ => Err(shape_err(top, t)),
        }
    }

    pub fn multiply(&self, x: &Element, y: &Element) -> Result<Element> {
        if let Some((base, top, size, action)) = self.wreath_parts() {
            let (t1, f1) = wreath_fields(self, x)?;
            let (t2, f2) = wreath_fields(self, y)?;
            if f1.len() != size || f2.len() != size {
                return Err(shape_err(self, x));
            }
            let t1_inv = top.invert(t1)?;
            let mut out = Vec::with_capacity(size);
            for pos in 0..size {
                let src = GroupSpec::act_point(&top, action, &t1_inv, pos)?;
                out.push(base.multiply(&f1[pos], &f2[src])?);
            }
            return Ok(Element::WreathPair {
                top: Box::new(top.multiply(t1, t2)?),
                base: out,
            });
        }
        match (self, x, y) {
            (GroupSpec::Cyclic(m), Element::Residue(a), Element::Residue(b)) => {
                Ok(Element::Residue((a + b) % m))
            }
            (GroupSpec::DirectProduct(parts), Element::Tuple(xs), Element::Tuple(ys)) => {
                if xs.len() != parts.len() || ys.len() != parts.len() {
                    return Err(shape_err(self, x));
                }
                let mut out = Vec::with_capacity(parts.len());
                for ((p, a), b) in parts.iter().zip(xs).zip(ys) {
                    out.push(p.multiply(a, b)?);
                }
                Ok(Element::Tuple(out))
            }
            (
                GroupSpec::Affine(p),
                Element::AffineMap {
                    slope: m1,
                    shift: b1,
                },
                Element::AffineMap {
                    slope: m2,
                    shift: b2,
                },
            ) => Ok(Element::AffineMap {
                slope: m1 * m2 % p,
                shift: (m1 * b2 + b1) % p,
            }),
            (GroupSpec::Table { n, table }, Element::TableIndex(i), Element::TableIndex(j)) => {
                if *i >= *n || *j >= *n {
                    return Err(shape_err(self, x));
                }
                Ok(Element::TableIndex(table[i * n + j]))
            }
            _ => Err(shape_err(self, x)),
        }
    }

    pub fn invert(&self, x: &Element) -> Result<Element> {
        if let Some((base, top, size, action)) = self.wreath_parts() {
            let (t, f) = wreath_fields(self, x)?;
            if f.len() != size {
                return Err(shape_err(self, x));
            }
            // (f,t)^-1 = (y -> f(t.y)^-1, t^-1)
            let mut out = Vec::with_capacity(size);
            for pos in 0..size {
                let src = GroupSpec::act_point(&top, action, t, pos)?;
                out.push(base.invert(&f[src])?);
            }
            return Ok(Element::WreathPair {
                top: Box::new(top.invert(t)?),
                base: out,
            });
        }
        match (self, x) {
            (GroupSpec::Cyclic(m), Element::Residue(a)) => Ok(Element::Residue((m - a) % m)),
            (GroupSpec::DirectProduct(parts), Element::Tuple(xs)) => {
                if xs.len() != parts.len() {
                    return Err(shape_err(self, x));
                }
                let mut out = Vec::with_capacity(parts.len());
                for (p, a) in parts.iter().zip(xs) {
                    out.push(p.invert(a)?);
                }
                Ok(Element::Tuple(out))
            }
            (GroupSpec::Affine(p), Element::AffineMap { slope, shift }) => {
                let inv = mod_inverse(*slope, *p).ok_or_else(|| shape_err(self, x))?;
                Ok(Element::AffineMap {
                    slope: inv,
                    shift: inv * (p - shift % p) % p,
                })
            }
            (GroupSpec::Table { n, table }, Element::TableIndex(i)) => {
                if *i >= *n {
                    return Err(shape_err(self, x));
                }
                for j in 0..*n {
                    if table[i * n + j] == 0 {
                        return Ok(Element::TableIndex(j));
                    }
                }
                Err(Error::NotAGroup(format!("row {i} has no inverse")))
            }
            _ => Err(shape_err(self, x)),
        }
    }

    /// Canonical-form predicate: shape matches the spec and all values
    /// are reduced.
    pub fn check_element(&self, x: &Element) -> Result<()> {
        if let Some((base, top, size, _)) = self.wreath_parts() {
            let (t, f) = wreath_fields(self, x)?;
            if f.len() != size {
                return Err(shape_err(self, x));
            }
            top.check_element(t)?;
            for e in f {
                base.check_element(e)?;
            }
            return Ok(());
        }
        match (self, x) {
            (GroupSpec::Cyclic(m), Element::Residue(a)) if a < m => Ok(()),
            (GroupSpec::DirectProduct(parts), Element::Tuple(xs)) if xs.len() == parts.len() => {
                for (p, a) in parts.iter().zip(xs) {
                    p.check_element(a)?;
                }
                Ok(())
            }
            (GroupSpec::Affine(p), Element::AffineMap { slope, shift })
                if *slope >= 1 && slope < p && shift < p =>
            {
                Ok(())
            }
            (GroupSpec::Table { n, .. }, Element::TableIndex(i)) if i < n => Ok(()),
            _ => Err(shape_err(self, x)),
        }
    }

    /// All elements in ascending `compare` order. Callers must gate on
    /// enumerability; this does not check any cap.
    pub fn elements_in_order(&self) -> Result<Vec<Element>> {
        if let Some((base, top, size, _)) = self.wreath_parts() {
            let tops = top.elements_in_order()?;
            let bases = base.elements_in_order()?;
            let mut out = Vec::new();
            for t in &tops {
                for combo in cartesian(&bases, size) {
                    out.push(Element::WreathPair {
                        top: Box::new(t.clone()),
                        base: combo,
                    });
                }
            }
            return Ok(out);
        }
        match self {
            GroupSpec::Cyclic(m) => Ok((0..*m).map(Element::Residue).collect()),
            GroupSpec::DirectProduct(parts) => {
                let lists: Vec<Vec<Element>> = parts
                    .iter()
                    .map(|p| p.elements_in_order())
                    .collect::<Result<_>>()?;
                let mut out = vec![Vec::new()];
                for list in &lists {
                    let mut next = Vec::with_capacity(out.len() * list.len());
                    for prefix in &out {
                        for e in list {
                            let mut v = prefix.clone();
                            v.push(e.clone());
                            next.push(v);
                        }
                    }
                    out = next;
                }
                Ok(out.into_iter().map(Element::Tuple).collect())
            }
            GroupSpec::Affine(p) => {
                let mut out = Vec::with_capacity((p * (p - 1)) as usize);
                for slope in 1..*p {
                    for shift in 0..*p {
                        out.push(Element::AffineMap { slope, shift });
                    }
                }
                Ok(out)
            }
            GroupSpec::Heisenberg(_) => Err(Error::InvalidSpec(
                "Heisenberg specs are table-resolved at build time".into(),
            )),
            GroupSpec::Table { n, .. } => Ok((0..*n).map(Element::TableIndex).collect()),
            GroupSpec::Wreath { .. } | GroupSpec::WreathOverSet { .. } => unreachable!(),
        }
    }
}

/// Tuples of `size` draws from `items`, lexicographic order.
fn cartesian(items: &[Element], size: usize) -> Vec<Vec<Element>> {
    let mut out = vec![Vec::new()];
    for _ in 0..size {
        let mut next = Vec::with_capacity(out.len() * items.len());
        for prefix in &out {
            for e in items {
                let mut v = prefix.clone();
                v.push(e.clone());
                next.push(v);
            }
        }
        out = next;
    }
    out
}

fn wreath_fields<'a>(spec: &GroupSpec, x: &'a Element) -> Result<(&'a Element, &'a [Element])> {
    match x {
        Element::WreathPair { top, base } => Ok((top, base)),
        _ => Err(shape_err(spec, x)),
    }
}

pub fn mod_inverse(a: u64, p: u64) -> Option<u64> {
    if a % p == 0 {
        return None;
    }
    // p is prime in every caller, so Fermat works.
    let mut result: u64 = 1;
    let mut b = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    Some(result)
}

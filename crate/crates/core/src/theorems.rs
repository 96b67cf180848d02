//! Executable verifiers: each numbered quantitative claim becomes a
//! function that recomputes the involved quantities from primitives and
//! returns a structured pass/fail report.
//!
//! Verifiers never trust construction postconditions; every quantity is
//! measured again here so a convention bug upstream cannot silently
//! validate itself.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::classes::{
    self, class_product, conjugacy_class, decompose, eta_of_class_square,
};
use crate::constructions::{self, FamilyInstance};
use crate::element::Element;
use crate::error::{Error, Result};
use crate::group::{build_group, Group};
use crate::limits::Limits;
use crate::spec::GroupSpec;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// Structured outcome of one verifier run. `status` is `Pass` iff every
/// expected relation holds of the computed values; witnesses carry the
/// failing (or tight) classes so a failure is reproducible from the
/// report alone.
#[derive(Clone, Debug, Serialize)]
pub struct TheoremReport {
    pub claim_id: String,
    pub params: BTreeMap<String, String>,
    pub expected: BTreeMap<String, String>,
    pub computed: BTreeMap<String, String>,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tight: Option<bool>,
    pub witnesses: Vec<String>,
}

impl TheoremReport {
    fn new(claim_id: &str) -> Self {
        TheoremReport {
            claim_id: claim_id.into(),
            params: BTreeMap::new(),
            expected: BTreeMap::new(),
            computed: BTreeMap::new(),
            status: Status::Pass,
            tight: None,
            witnesses: Vec::new(),
        }
    }

    fn param(&mut self, key: &str, value: impl ToString) {
        self.params.insert(key.into(), value.to_string());
    }

    fn expect(&mut self, key: &str, value: impl ToString) {
        self.expected.insert(key.into(), value.to_string());
    }

    fn compute(&mut self, key: &str, value: impl ToString) {
        self.computed.insert(key.into(), value.to_string());
    }

    fn fail(&mut self, witness: String) {
        self.status = Status::Fail;
        self.witnesses.push(witness);
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// The finite set S_n: products of prime powers p^t with
/// t(p-1)+1 <= n.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SnSet {
    pub n: u64,
    pub values: BTreeSet<u64>,
}

impl SnSet {
    pub fn contains(&self, v: u64) -> bool {
        self.values.contains(&v)
    }
}

pub fn compute_sn(n: u64) -> SnSet {
    // Primes with a nonzero admissible exponent satisfy p <= n.
    let primes: Vec<u64> = (2..=n).filter(|&q| crate::spec::is_prime(q)).collect();
    let mut values: BTreeSet<u64> = BTreeSet::new();
    values.insert(1);
    for p in primes {
        let t_max = (n - 1) / (p - 1);
        let mut additions = Vec::new();
        for &v in &values {
            let mut power = 1u64;
            for _ in 0..t_max {
                power *= p;
                additions.push(v * power);
            }
        }
        values.extend(additions);
    }
    SnSet { n, values }
}

/// The bound eta(Cl(a)Cl(a^-1)) >= n(p-1)+1 for |Cl(a)| = p^n in a
/// p-group.
pub fn verify_theorem_a(group: &Group, a: &Element, limits: &Limits) -> Result<TheoremReport> {
    let (p, _) = group
        .p_group()
        .ok_or_else(|| Error::Precondition("group order is not a prime power".into()))?;
    let mut report = TheoremReport::new("TheoremA");
    report.param("p", p);
    report.param("element", a);
    let stats = eta_of_class_square(group, a, limits)?;
    let n = stats.n.ok_or_else(|| {
        Error::Precondition(format!("|Cl(a)| = {} is not a power of {p}", stats.class_size))
    })?;
    let bound = u64::from(n) * (p - 1) + 1;
    report.param("n", n);
    report.expect("eta_lower_bound", bound);
    report.compute("class_size", stats.class_size);
    report.compute("eta", stats.eta);
    if (stats.eta as u64) < bound {
        report.fail(format!(
            "class of {a}: eta = {} below bound {bound}",
            stats.eta
        ));
    }
    report.tight = Some(stats.eta as u64 == bound);
    Ok(report)
}

/// Multiplicativity of |Cl| and eta over a direct product of p_i-groups
/// with pairwise-distinct primes, plus membership |Cl(a)| in S_n.
pub fn verify_theorem_b(
    parts: &[FamilyInstance],
    n: u64,
    limits: &Limits,
) -> Result<TheoremReport> {
    let mut primes = BTreeSet::new();
    for part in parts {
        let (p, _) = part.group.p_group().ok_or_else(|| {
            Error::Precondition(format!("{} is not a p-group", part.family_name))
        })?;
        if !primes.insert(p) {
            return Err(Error::Precondition(format!(
                "two factors share the prime {p}"
            )));
        }
    }
    let mut report = TheoremReport::new("TheoremB");
    report.param("n", n);
    report.param(
        "parts",
        parts
            .iter()
            .map(|p| p.family_name.clone())
            .collect::<Vec<_>>()
            .join("*"),
    );

    let mut expected_class_size = 1u64;
    let mut expected_eta = 1u64;
    for part in parts {
        let stats = eta_of_class_square(&part.group, &part.distinguished, limits)?;
        expected_class_size *= stats.class_size as u64;
        expected_eta *= stats.eta as u64;
    }

    let product_group = build_group(GroupSpec::DirectProduct(
        parts.iter().map(|p| p.group.spec().clone()).collect(),
    ))?;
    let a = Element::Tuple(parts.iter().map(|p| p.distinguished.clone()).collect());
    let stats = eta_of_class_square(&product_group, &a, limits)?;

    report.expect("class_size_product", expected_class_size);
    report.expect("eta_product", expected_eta);
    report.compute("class_size", stats.class_size);
    report.compute("eta", stats.eta);
    if stats.class_size as u64 != expected_class_size {
        report.fail(format!(
            "|Cl(a)| = {} does not match the componentwise product {expected_class_size}",
            stats.class_size
        ));
    }
    if stats.eta as u64 != expected_eta {
        report.fail(format!(
            "eta = {} does not match the componentwise product {expected_eta}",
            stats.eta
        ));
    }
    if stats.eta as u64 <= n {
        let sn = compute_sn(n);
        report.compute("sn_member", sn.contains(stats.class_size as u64));
        if !sn.contains(stats.class_size as u64) {
            report.fail(format!(
                "|Cl(a)| = {} with eta = {} <= {n} but {} is not in S_{n}",
                stats.class_size, stats.eta, stats.class_size
            ));
        }
    }
    Ok(report)
}

/// The trichotomy over every class of an enumerable p-group:
/// size 1 => eta 1; size p => eta p; size >= p^2 => eta >= 2p-1.
pub fn verify_theorem_c(group: &Group, limits: &Limits) -> Result<TheoremReport> {
    let (p, _) = group
        .p_group()
        .ok_or_else(|| Error::Precondition("group order is not a prime power".into()))?;
    let mut report = TheoremReport::new("TheoremC");
    report.param("p", p);
    report.param("order", group.order());
    let mut arm_counts = [0u64; 3];
    for class in classes::all_classes(group, limits)? {
        let stats = eta_of_class_square(group, &class.rep, limits)?;
        let size = stats.class_size as u64;
        let eta = stats.eta as u64;
        if size == 1 {
            arm_counts[0] += 1;
            if eta != 1 {
                report.fail(format!("central {}: eta = {eta}, expected 1", class.rep));
            }
        } else if size == p {
            arm_counts[1] += 1;
            if eta != p {
                report.fail(format!(
                    "class of {} (size {p}): eta = {eta}, expected {p}",
                    class.rep
                ));
            }
        } else if size >= p * p {
            arm_counts[2] += 1;
            if eta < 2 * p - 1 {
                report.fail(format!(
                    "class of {} (size {size}): eta = {eta} below {}",
                    class.rep,
                    2 * p - 1
                ));
            }
        } else {
            report.fail(format!(
                "class of {} has size {size}, which fits no arm",
                class.rep
            ));
        }
    }
    report.expect("every_class_fits_one_arm", true);
    report.compute("arm_i_classes", arm_counts[0]);
    report.compute("arm_ii_classes", arm_counts[1]);
    report.compute("arm_iii_classes", arm_counts[2]);
    Ok(report)
}

/// Quotient behavior for a central subgroup N = <z> of order p: the eta
/// monotonicity for the pair (a, b), the class-size dichotomy for a,
/// and in the shrinking case the (p-1) increment with N inside
/// Cl(a)Cl(a^-1).
pub fn verify_lemma1(
    group: &Group,
    z: &Element,
    a: &Element,
    b: &Element,
    limits: &Limits,
) -> Result<TheoremReport> {
    let mut report = TheoremReport::new("Lemma2.1");
    report.param("z", z);
    report.param("a", a);
    report.param("b", b);
    let p = group.element_order(z)?;
    report.param("p", p);

    let (quotient, projection) = group.quotient_by_central(z, limits)?;

    let class_a = conjugacy_class(group, a, limits)?;
    let class_b = conjugacy_class(group, b, limits)?;
    let eta_ab = decompose(group, &class_product(group, &class_a, &class_b, limits)?, limits)?.eta;
    let qa = projection.project(a)?;
    let qb = projection.project(b)?;
    let q_class_a = conjugacy_class(&quotient, &qa, limits)?;
    let q_class_b = conjugacy_class(&quotient, &qb, limits)?;
    let q_eta_ab = decompose(
        &quotient,
        &class_product(&quotient, &q_class_a, &q_class_b, limits)?,
        limits,
    )?
    .eta;

    report.expect("eta_monotone", "eta(quotient) <= eta");
    report.compute("eta_ab", eta_ab);
    report.compute("eta_quotient_ab", q_eta_ab);
    if q_eta_ab > eta_ab {
        report.fail(format!(
            "eta in the quotient is {q_eta_ab} > {eta_ab} for ({a}, {b})"
        ));
    }

    // Size dichotomy for a.
    let size = class_a.size() as u64;
    let q_size = q_class_a.size() as u64;
    report.expect("size_dichotomy", format!("{size} or {size}/{p}"));
    report.compute("class_size", size);
    report.compute("quotient_class_size", q_size);
    let shrinking = if q_size == size {
        false
    } else if size % p == 0 && q_size == size / p {
        true
    } else {
        report.fail(format!(
            "|Cl(a-bar)| = {q_size} is neither {size} nor {}",
            size / p
        ));
        false
    };
    report.compute("shrinking", shrinking);

    if shrinking {
        let a_inv = group.invert(a)?;
        let class_a_inv = conjugacy_class(group, &a_inv, limits)?;
        let square = class_product(group, &class_a, &class_a_inv, limits)?;
        let eta_square = decompose(group, &square, limits)?.eta;
        let q_a_inv = quotient.invert(&qa)?;
        let q_class_a_inv = conjugacy_class(&quotient, &q_a_inv, limits)?;
        let q_eta_square = decompose(
            &quotient,
            &class_product(&quotient, &q_class_a, &q_class_a_inv, limits)?,
            limits,
        )?
        .eta;
        report.expect("increment", format!("eta >= eta(quotient) + {}", p - 1));
        report.compute("eta_square", eta_square);
        report.compute("eta_quotient_square", q_eta_square);
        if (eta_square as u64) < q_eta_square as u64 + (p - 1) {
            report.fail(format!(
                "eta = {eta_square} below {q_eta_square} + {}",
                p - 1
            ));
        }
        // N = <z> is contained in Cl(a)Cl(a^-1).
        let mut acc = group.identity().clone();
        for _ in 0..p {
            if !square.contains(&acc) {
                report.fail(format!("{acc} in N is missing from Cl(a)Cl(a^-1)"));
            }
            acc = group.multiply(&acc, z)?;
        }
        report.compute("n_in_square", report.status == Status::Pass);
    }
    Ok(report)
}

/// Exact eta increment of the wreath step: eta(a) = eta(g0) + (p-1),
/// with |Cl(a)| = p|Cl(g0)| and Cl(a) != Cl(a^-1). Both sides are
/// computed independently.
pub fn verify_construction_lemma(
    base: &FamilyInstance,
    p: u64,
    limits: &Limits,
) -> Result<TheoremReport> {
    let mut report = TheoremReport::new("Lemma5.1");
    report.param("p", p);
    report.param("base", &base.family_name);
    let base_stats = eta_of_class_square(&base.group, &base.distinguished, limits)?;
    let inst = constructions::wreath_construction(base, p, limits)?;
    let stats = eta_of_class_square(&inst.group, &inst.distinguished, limits)?;

    report.expect("eta", base_stats.eta as u64 + (p - 1));
    report.expect("class_size", p * base_stats.class_size as u64);
    report.compute("eta", stats.eta);
    report.compute("class_size", stats.class_size);
    if stats.eta as u64 != base_stats.eta as u64 + (p - 1) {
        report.fail(format!(
            "eta = {} but eta(g0) + (p-1) = {}",
            stats.eta,
            base_stats.eta as u64 + (p - 1)
        ));
    }
    if stats.class_size as u64 != p * base_stats.class_size as u64 {
        report.fail(format!(
            "|Cl(a)| = {} but p|Cl(g0)| = {}",
            stats.class_size,
            p * base_stats.class_size as u64
        ));
    }
    if classes::class_equals_inverse(&inst.group, &inst.distinguished, limits)? {
        report.fail("Cl(a) = Cl(a^-1) in the constructed group".into());
    }
    Ok(report)
}

/// The supersolvable counterexample: |Cl(a)| = p, eta = 2, and the two
/// classes are Cl(e) and Cl((c, c^-1, e, ..., e)); for odd p the
/// nontrivial class has p^2 - p elements. The class-size claim
/// degenerates at p = 2, where (c, c^-1) = (c, c) is central, so that
/// check is skipped there.
pub fn verify_prop_notforsuper(p: u64, limits: &Limits) -> Result<TheoremReport> {
    let mut report = TheoremReport::new("Prop5.4");
    report.param("p", p);
    let inst = constructions::supersolvable_example(p)?;
    let group = &inst.group;
    let a = &inst.distinguished;

    let class = conjugacy_class(group, a, limits)?;
    let inv_class = conjugacy_class(group, &group.invert(a)?, limits)?;
    let product = class_product(group, &class, &inv_class, limits)?;
    let decomposition = decompose(group, &product, limits)?;

    report.expect("class_size", p);
    report.expect("eta", 2);
    report.compute("class_size", class.size());
    report.compute("eta", decomposition.eta);
    report.compute("product_size", product.len());
    if class.size() as u64 != p {
        report.fail(format!("|Cl(a)| = {}, expected {p}", class.size()));
    }
    if decomposition.eta != 2 {
        report.fail(format!("eta = {}, expected 2", decomposition.eta));
    }
    if product.len() as u64 > p * p - p + 1 {
        report.fail(format!(
            "|Cl(a)Cl(a^-1)| = {} above p^2 - p + 1 = {}",
            product.len(),
            p * p - p + 1
        ));
    }

    // The two decomposition representatives must be Cl(e) and
    // Cl((c, c^-1, e, ..., e)).
    let mut base = vec![Element::Residue(0); p as usize];
    base[0] = Element::Residue(1);
    base[1 % p as usize] = Element::Residue(p - 1);
    let b1 = Element::WreathPair {
        top: Box::new(Element::AffineMap { slope: 1, shift: 0 }),
        base,
    };
    let b1_class = conjugacy_class(group, &b1, limits)?;
    let mut expected_reps: Vec<&Element> = vec![group.identity(), &b1_class.rep];
    expected_reps.sort();
    let got_reps: Vec<&Element> = decomposition.classes.iter().map(|c| &c.rep).collect();
    if got_reps != expected_reps {
        report.fail(format!(
            "decomposition reps {:?} do not match Cl(e) and Cl((c,c^-1,e,...))",
            got_reps.iter().map(|r| r.to_string()).collect::<Vec<_>>()
        ));
    }
    if p > 2 {
        report.expect("nontrivial_class_size", p * p - p);
        report.compute("nontrivial_class_size", b1_class.size());
        if b1_class.size() as u64 != p * p - p {
            report.fail(format!(
                "|Cl((c,c^-1,e,...))| = {}, expected {}",
                b1_class.size(),
                p * p - p
            ));
        }
    }
    Ok(report)
}

/// Remark-a sweep: in the extraspecial group of order p^3 and exponent
/// p, every noncentral class square equals the center and eta = p.
pub fn verify_remark_a(p: u64, limits: &Limits) -> Result<TheoremReport> {
    let mut report = TheoremReport::new("RemarkA");
    report.param("p", p);
    let inst = constructions::heisenberg(p)?;
    let group = &inst.group;
    let center = group.center(limits)?;
    report.expect("center_size", p);
    report.compute("center_size", center.len());
    if center.len() as u64 != p {
        report.fail(format!("|Z(G)| = {}, expected {p}", center.len()));
    }
    let mut noncentral = 0u64;
    for class in classes::all_classes(group, limits)? {
        if class.size() == 1 {
            continue;
        }
        noncentral += 1;
        let inv_class = conjugacy_class(group, &group.invert(&class.rep)?, limits)?;
        let product = class_product(group, &class, &inv_class, limits)?;
        if product != center {
            report.fail(format!(
                "Cl({0})Cl({0}^-1) is not the center",
                class.rep
            ));
        }
        let eta = decompose(group, &product, limits)?.eta;
        if eta as u64 != p {
            report.fail(format!("class of {}: eta = {eta}, expected {p}", class.rep));
        }
    }
    report.expect("every_noncentral_class_square_is_center", true);
    report.compute("noncentral_classes", noncentral);
    Ok(report)
}

/// Remark-b check: in C_{p^2} wr C_p the distinguished class has size p
/// and its square splits as {e} plus p-1 classes of size p.
pub fn verify_remark_b(p: u64, limits: &Limits) -> Result<TheoremReport> {
    let mut report = TheoremReport::new("RemarkB");
    report.param("p", p);
    let inst = constructions::remark_b_group(p)?;
    let group = &inst.group;
    let a = &inst.distinguished;
    let class = conjugacy_class(group, a, limits)?;
    let inv_class = conjugacy_class(group, &group.invert(a)?, limits)?;
    let product = class_product(group, &class, &inv_class, limits)?;
    let decomposition = decompose(group, &product, limits)?;

    report.expect("class_size", p);
    report.expect("eta", p);
    report.compute("class_size", class.size());
    report.compute("eta", decomposition.eta);
    if class.size() as u64 != p {
        report.fail(format!("|Cl(a)| = {}, expected {p}", class.size()));
    }
    let mut singleton = 0;
    let mut size_p = 0;
    for c in &decomposition.classes {
        if c.size() == 1 && &c.rep == group.identity() {
            singleton += 1;
        } else if c.size() as u64 == p {
            size_p += 1;
        } else {
            report.fail(format!("unexpected class of size {} in the square", c.size()));
        }
    }
    report.compute("singleton_classes", singleton);
    report.compute("size_p_classes", size_p);
    if singleton != 1 || size_p as u64 != p - 1 {
        report.fail(format!(
            "square splits as {singleton} singleton(s) + {size_p} size-{p} class(es), expected 1 + {}",
            p - 1
        ));
    }
    // Distinct b_i have disjoint classes; decompose already guarantees
    // disjointness, so pairwise-distinct reps suffice.
    let reps: BTreeSet<&Element> = decomposition.classes.iter().map(|c| &c.rep).collect();
    if reps.len() != decomposition.classes.len() {
        report.fail("duplicate class representatives in the square".into());
    }
    Ok(report)
}

/// Tower verification: tight Theorem A instances with
/// |Cl(a)| = p^n and eta exactly n(p-1)+1.
pub fn verify_tower(p: u64, n: u64, limits: &Limits) -> Result<TheoremReport> {
    let inst = constructions::tower(p, n, limits)?;
    let mut report = verify_theorem_a(&inst.group, &inst.distinguished, limits)?;
    report.claim_id = "Prop4.2".into();
    report.params.insert("n".into(), n.to_string());
    let stats = eta_of_class_square(&inst.group, &inst.distinguished, limits)?;
    let expected_eta = n * (p - 1) + 1;
    let expected_size = p.pow(n as u32);
    report.expect("eta", expected_eta);
    report.expect("class_size", expected_size);
    if stats.eta as u64 != expected_eta {
        report.fail(format!("eta = {}, expected exactly {expected_eta}", stats.eta));
    }
    if stats.class_size as u64 != expected_size {
        report.fail(format!(
            "|Cl(a)| = {}, expected {expected_size}",
            stats.class_size
        ));
    }
    Ok(report)
}

//! Congruences and tense filters of finite tense algebras, and the maps
//! that relate them across `L`, `K(L)` and `C(A)`.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;

use itertools::Itertools;

use crate::algebra::{ElementId, FiniteAlgebra};
use crate::drl::TenseDrl;
use crate::error::{Error, Result};
use crate::kalman::{center, full_drl_algebra, kalman, Center, KalmanAlgebra};
use crate::report::{Check, Report};
use crate::tense::TenseIcrdl;

/// Enumeration bound used when `TENSELAT_MAX_SIZE` is unset.
pub const DEFAULT_MAX_SIZE: usize = 16;

/// The enumeration bound, read from `TENSELAT_MAX_SIZE` when set.
pub fn max_size() -> usize {
    std::env::var("TENSELAT_MAX_SIZE")
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_MAX_SIZE)
}

fn check_size(size: usize, bound: usize) -> Result<()> {
    if size > bound {
        Err(Error::SizeBound { size, bound })
    } else {
        Ok(())
    }
}

/// What the filter and congruence machinery needs from a tense algebra.
pub trait TenseAlgebra {
    /// The algebra with every fundamental and derived operation present.
    fn full_algebra(&self) -> FiniteAlgebra;
    fn size(&self) -> usize;
    fn names(&self) -> &[String];
    fn leq(&self, x: ElementId, y: ElementId) -> bool;
    /// The monoid operation (`·` or `∗`).
    fn mul(&self, x: ElementId, y: ElementId) -> ElementId;
    /// Its residuum (`→` or `⇒`).
    fn res(&self, x: ElementId, y: ElementId) -> ElementId;
    fn top(&self) -> ElementId;
    fn g(&self, x: ElementId) -> ElementId;
    fn h(&self, x: ElementId) -> ElementId;
    fn f(&self, x: ElementId) -> ElementId;
    fn p(&self, x: ElementId) -> ElementId;
}

impl TenseAlgebra for TenseIcrdl {
    fn full_algebra(&self) -> FiniteAlgebra {
        self.algebra().clone()
    }
    fn size(&self) -> usize {
        TenseIcrdl::size(self)
    }
    fn names(&self) -> &[String] {
        self.base().names()
    }
    fn leq(&self, x: ElementId, y: ElementId) -> bool {
        self.base().leq(x, y)
    }
    fn mul(&self, x: ElementId, y: ElementId) -> ElementId {
        self.base().prod(x, y)
    }
    fn res(&self, x: ElementId, y: ElementId) -> ElementId {
        self.base().imp(x, y)
    }
    fn top(&self) -> ElementId {
        self.base().one()
    }
    fn g(&self, x: ElementId) -> ElementId {
        TenseIcrdl::g(self, x)
    }
    fn h(&self, x: ElementId) -> ElementId {
        TenseIcrdl::h(self, x)
    }
    fn f(&self, x: ElementId) -> ElementId {
        TenseIcrdl::f(self, x)
    }
    fn p(&self, x: ElementId) -> ElementId {
        TenseIcrdl::p(self, x)
    }
}

impl TenseAlgebra for TenseDrl {
    fn full_algebra(&self) -> FiniteAlgebra {
        full_drl_algebra(self)
    }
    fn size(&self) -> usize {
        self.drl().size()
    }
    fn names(&self) -> &[String] {
        self.drl().names()
    }
    fn leq(&self, x: ElementId, y: ElementId) -> bool {
        self.drl().leq(x, y)
    }
    fn mul(&self, x: ElementId, y: ElementId) -> ElementId {
        self.drl().star(x, y)
    }
    fn res(&self, x: ElementId, y: ElementId) -> ElementId {
        self.drl().dimp(x, y)
    }
    fn top(&self) -> ElementId {
        self.drl().one()
    }
    fn g(&self, x: ElementId) -> ElementId {
        TenseDrl::g(self, x)
    }
    fn h(&self, x: ElementId) -> ElementId {
        TenseDrl::h(self, x)
    }
    fn f(&self, x: ElementId) -> ElementId {
        TenseDrl::f(self, x)
    }
    fn p(&self, x: ElementId) -> ElementId {
        TenseDrl::p(self, x)
    }
}

/// A partition of the universe, stored as a block label per element.
/// Labels are assigned in order of first appearance, so equal partitions
/// have equal vectors.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Congruence {
    blocks: Vec<usize>,
}

impl Congruence {
    /// Relabels an arbitrary block assignment canonically.
    pub fn from_labels(labels: &[usize]) -> Self {
        let mut seen = HashMap::new();
        let blocks = labels
            .iter()
            .map(|l| {
                let next = seen.len();
                *seen.entry(*l).or_insert(next)
            })
            .collect();
        Congruence { blocks }
    }

    pub fn identity(n: usize) -> Self {
        Congruence { blocks: (0..n).collect() }
    }

    pub fn total(n: usize) -> Self {
        Congruence { blocks: vec![0; n] }
    }

    pub fn size(&self) -> usize {
        self.blocks.len()
    }

    pub fn labels(&self) -> &[usize] {
        &self.blocks
    }

    pub fn related(&self, x: ElementId, y: ElementId) -> bool {
        self.blocks[x] == self.blocks[y]
    }

    pub fn block_count(&self) -> usize {
        self.blocks.iter().max().map_or(0, |m| m + 1)
    }

    /// Members of the block containing `x`.
    pub fn class_of(&self, x: ElementId) -> Vec<ElementId> {
        (0..self.size()).filter(|&y| self.related(x, y)).collect()
    }

    /// Blocks in order of their least member.
    pub fn classes(&self) -> Vec<Vec<ElementId>> {
        let mut out = vec![Vec::new(); self.block_count()];
        for (x, &b) in self.blocks.iter().enumerate() {
            out[b].push(x);
        }
        out
    }

    /// Refinement order: every block of `self` lies inside a block of `other`.
    pub fn refines(&self, other: &Congruence) -> bool {
        (0..self.size()).all(|x| (0..x).all(|y| !self.related(x, y) || other.related(x, y)))
    }

    /// Renders the partition as `0 | a b | 1` using element names.
    pub fn render(&self, names: &[String]) -> String {
        self.classes()
            .iter()
            .map(|c| c.iter().map(|&x| names[x].as_str()).join(" "))
            .join(" | ")
    }
}

/// A set of elements, kept sorted.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TenseFilter {
    members: Vec<ElementId>,
}

impl TenseFilter {
    pub fn from_members(members: impl IntoIterator<Item = ElementId>) -> Self {
        let set: BTreeSet<ElementId> = members.into_iter().collect();
        TenseFilter { members: set.into_iter().collect() }
    }

    pub fn members(&self) -> &[ElementId] {
        &self.members
    }

    pub fn contains(&self, x: ElementId) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn is_subset(&self, other: &TenseFilter) -> bool {
        self.members.iter().all(|&x| other.contains(x))
    }

    pub fn render(&self, names: &[String]) -> String {
        format!("{{{}}}", self.members.iter().map(|&x| names[x].as_str()).join(", "))
    }
}

impl fmt::Display for TenseFilter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.members)
    }
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }

    fn from_congruence(c: &Congruence) -> Self {
        let mut uf = UnionFind::new(c.size());
        for class in c.classes() {
            for w in class.windows(2) {
                uf.union(w[0], w[1]);
            }
        }
        uf
    }

    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut y = x;
        while self.0[y] != r {
            let next = self.0[y];
            self.0[y] = r;
            y = next;
        }
        r
    }

    /// Returns whether two distinct classes were merged.
    fn union(&mut self, x: usize, y: usize) -> bool {
        let (a, b) = (self.find(x), self.find(y));
        if a == b {
            return false;
        }
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        self.0[hi] = lo;
        true
    }

    fn to_congruence(&mut self) -> Congruence {
        let labels: Vec<usize> = (0..self.0.len()).map(|x| self.find(x)).collect();
        Congruence::from_labels(&labels)
    }
}

/// Merges classes until the partition is compatible with every operation.
fn close(alg: &FiniteAlgebra, uf: &mut UnionFind) {
    let n = alg.size();
    let ops: Vec<_> = alg.operations().filter(|op| op.arity() > 0).collect();
    loop {
        let mut changed = false;
        for op in &ops {
            for x in 0..n {
                let rx = uf.find(x);
                if op.arity() == 1 {
                    changed |= uf.union(op.apply(&[x]), op.apply(&[rx]));
                    continue;
                }
                for y in 0..n {
                    let ry = uf.find(y);
                    let v = op.apply(&[x, y]);
                    changed |= uf.union(v, op.apply(&[rx, y]));
                    changed |= uf.union(v, op.apply(&[x, ry]));
                }
            }
        }
        if !changed {
            break;
        }
    }
}

/// The least congruence identifying `a` and `b`.
pub fn principal_congruence(alg: &FiniteAlgebra, a: ElementId, b: ElementId) -> Congruence {
    let mut uf = UnionFind::new(alg.size());
    uf.union(a, b);
    close(alg, &mut uf);
    uf.to_congruence()
}

/// The join of two congruences in the congruence lattice.
pub fn join_congruences(alg: &FiniteAlgebra, x: &Congruence, y: &Congruence) -> Congruence {
    let mut uf = UnionFind::from_congruence(x);
    for class in y.classes() {
        for w in class.windows(2) {
            uf.union(w[0], w[1]);
        }
    }
    close(alg, &mut uf);
    uf.to_congruence()
}

/// The first operation instance where the partition is not respected.
pub fn compatibility_failure(alg: &FiniteAlgebra, theta: &Congruence) -> Option<String> {
    let n = alg.size();
    let name = |x: ElementId| alg.element_name(x);
    for op in alg.operations() {
        match op.arity() {
            1 => {
                for (x, y) in (0..n).tuple_combinations() {
                    if theta.related(x, y) && !theta.related(op.apply(&[x]), op.apply(&[y])) {
                        return Some(format!("{} ≡ {} but {1}({0}) ≢ {1}({2})", name(x), op.name(), name(y)));
                    }
                }
            }
            2 => {
                for x in 0..n {
                    for (y, z) in (0..n).tuple_combinations() {
                        if !theta.related(y, z) {
                            continue;
                        }
                        let left = (op.apply(&[x, y]), op.apply(&[x, z]));
                        let right = (op.apply(&[y, x]), op.apply(&[z, x]));
                        if !theta.related(left.0, left.1) || !theta.related(right.0, right.1) {
                            return Some(format!(
                                "{} ≡ {} but {} does not respect it next to {}",
                                name(y),
                                name(z),
                                op.name(),
                                name(x)
                            ));
                        }
                    }
                }
            }
            _ => {}
        }
    }
    None
}

/// All congruences, sorted canonically. Every congruence is a join of
/// principal ones, so the set is grown from the identity by joining with
/// principal congruences until nothing new appears.
pub fn enumerate_congruences(alg: &FiniteAlgebra, bound: usize) -> Result<Vec<Congruence>> {
    let n = alg.size();
    check_size(n, bound)?;
    let principals: Vec<Congruence> = (0..n)
        .tuple_combinations()
        .map(|(a, b)| principal_congruence(alg, a, b))
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let mut found: BTreeSet<Congruence> = BTreeSet::new();
    let mut queue = VecDeque::new();
    found.insert(Congruence::identity(n));
    queue.push_back(Congruence::identity(n));
    while let Some(c) = queue.pop_front() {
        for p in &principals {
            if p.refines(&c) {
                continue;
            }
            let j = join_congruences(alg, &c, p);
            if found.insert(j.clone()) {
                queue.push_back(j);
            }
        }
    }
    Ok(found.into_iter().collect())
}

/// Why `set` is not a tense filter, if it is not one.
pub fn filter_failure<T: TenseAlgebra + ?Sized>(t: &T, set: &TenseFilter) -> Option<String> {
    let names = t.names();
    if set.is_empty() {
        return Some("empty".into());
    }
    for &x in set.members() {
        if let Some(y) = (0..t.size()).find(|&y| t.leq(x, y) && !set.contains(y)) {
            return Some(format!("not an up-set: {} ≤ {}", names[x], names[y]));
        }
        for &y in set.members() {
            let z = t.mul(x, y);
            if !set.contains(z) {
                return Some(format!("not closed under the product: {} · {} = {}", names[x], names[y], names[z]));
            }
        }
        for (op, v) in [("G", t.g(x)), ("H", t.h(x))] {
            if !set.contains(v) {
                return Some(format!("not closed under {op}: {op}({}) = {}", names[x], names[v]));
            }
        }
    }
    None
}

/// Why `set` is not closed under `F` and `P`, if it is not.
pub fn fp_closure_failure<T: TenseAlgebra + ?Sized>(t: &T, set: &TenseFilter) -> Option<String> {
    let names = t.names();
    set.members().iter().find_map(|&x| {
        [("F", t.f(x)), ("P", t.p(x))]
            .into_iter()
            .find(|&(_, v)| !set.contains(v))
            .map(|(op, v)| format!("{op}({}) = {} is missing", names[x], names[v]))
    })
}

/// The least tense filter containing `seed` and the top element.
pub fn filter_closure<T: TenseAlgebra + ?Sized>(t: &T, seed: impl IntoIterator<Item = ElementId>) -> TenseFilter {
    let n = t.size();
    let mut inside = vec![false; n];
    inside[t.top()] = true;
    for x in seed {
        inside[x] = true;
    }
    loop {
        let current: Vec<ElementId> = (0..n).filter(|&x| inside[x]).collect();
        let mut changed = false;
        let mut add = |x: ElementId, inside: &mut Vec<bool>| {
            if !inside[x] {
                inside[x] = true;
                changed = true;
            }
        };
        for &x in &current {
            for y in 0..n {
                if t.leq(x, y) {
                    add(y, &mut inside);
                }
            }
            for &y in &current {
                add(t.mul(x, y), &mut inside);
            }
            add(t.g(x), &mut inside);
            add(t.h(x), &mut inside);
        }
        if !changed {
            break;
        }
    }
    TenseFilter::from_members((0..n).filter(|&x| inside[x]))
}

/// All tense filters, sorted canonically. Filters are grown from `{1}` by
/// adding one element at a time and closing.
pub fn enumerate_tense_filters<T: TenseAlgebra + ?Sized>(t: &T, bound: usize) -> Result<Vec<TenseFilter>> {
    let n = t.size();
    check_size(n, bound)?;
    let start = filter_closure(t, []);
    let mut found = BTreeSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    while let Some(s) = queue.pop_front() {
        for x in 0..n {
            if s.contains(x) {
                continue;
            }
            let next = filter_closure(t, s.members().iter().copied().chain([x]));
            if found.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    Ok(found.into_iter().collect())
}

fn ensure_filter<T: TenseAlgebra + ?Sized>(t: &T, s: TenseFilter, what: &str) -> Result<TenseFilter> {
    match filter_failure(t, &s) {
        None => Ok(s),
        Some(why) => Err(Error::violation(format!("{what} = {} is not a tense filter: {why}", s.render(t.names())))),
    }
}

fn ensure_congruence(alg: &FiniteAlgebra, c: Congruence, what: &str) -> Result<Congruence> {
    match compatibility_failure(alg, &c) {
        None => Ok(c),
        Some(why) => Err(Error::violation(format!("{what} is not a congruence: {why}"))),
    }
}

/// `S_θ = 1/θ`.
pub fn theta_to_filter<T: TenseAlgebra + ?Sized>(t: &T, theta: &Congruence) -> Result<TenseFilter> {
    let s = TenseFilter::from_members(theta.class_of(t.top()));
    ensure_filter(t, s, "1/θ")
}

/// `θ_S = {(x, y) : (x → y) · (y → x) ∈ S}`.
pub fn filter_to_theta<T: TenseAlgebra + ?Sized>(t: &T, s: &TenseFilter) -> Result<Congruence> {
    let n = t.size();
    let rel = |x: ElementId, y: ElementId| s.contains(t.mul(t.res(x, y), t.res(y, x)));
    let names = t.names();
    for x in 0..n {
        if !rel(x, x) {
            return Err(Error::violation(format!("θ_S is not reflexive at {}", names[x])));
        }
        for y in 0..n {
            if rel(x, y) != rel(y, x) {
                return Err(Error::violation(format!("θ_S is not symmetric at ({}, {})", names[x], names[y])));
            }
            for z in 0..n {
                if rel(x, y) && rel(y, z) && !rel(x, z) {
                    return Err(Error::violation(format!(
                        "θ_S is not transitive at ({}, {}, {})",
                        names[x], names[y], names[z]
                    )));
                }
            }
        }
    }
    let labels: Vec<usize> = (0..n).map(|x| (0..n).find(|&y| rel(x, y)).expect("reflexive")).collect();
    ensure_congruence(&t.full_algebra(), Congruence::from_labels(&labels), "θ_S")
}

/// `(a, b) γ_θ (x, y)` iff `a θ x` and `b θ y`.
pub fn gamma_of_theta(k: &KalmanAlgebra, theta: &Congruence) -> Result<Congruence> {
    let labels: Vec<usize> = k
        .pairs()
        .iter()
        .map(|&(a, b)| theta.labels()[a] * theta.size() + theta.labels()[b])
        .collect();
    ensure_congruence(&full_drl_algebra(k.tense_drl()), Congruence::from_labels(&labels), "γ_θ")
}

/// `a θ^γ b` iff `(a, 0) γ (b, 0)`.
pub fn theta_of_gamma(l: &TenseIcrdl, k: &KalmanAlgebra, gamma: &Congruence) -> Result<Congruence> {
    let zero = l.base().zero();
    let labels: Vec<usize> = (0..l.size())
        .map(|a| gamma.labels()[k.index_of(a, zero).expect("(a, 0) lies in K(L)")])
        .collect();
    ensure_congruence(l.algebra(), Congruence::from_labels(&labels), "θ^γ")
}

/// `S_D = D ∩ C(A)`, indexed in `C(A)`.
pub fn filter_d_to_s(c: &Center, d: &TenseFilter) -> Result<TenseFilter> {
    let s = TenseFilter::from_members(d.members().iter().filter_map(|&x| c.index_of(x)));
    ensure_filter(&c.algebra, s, "D ∩ C(A)")
}

/// `D_S = {u : u ∨ c ∈ S and c ⇒ u ∈ S}`.
pub fn filter_s_to_d(a: &TenseDrl, c: &Center, s: &TenseFilter) -> Result<TenseFilter> {
    let in_s = |x: ElementId| c.index_of(x).is_some_and(|i| s.contains(i));
    let cc = a.c();
    let d = TenseFilter::from_members((0..a.size()).filter(|&u| in_s(a.join(u, cc)) && in_s(a.dimp(cc, u))));
    ensure_filter(a, d, "D_S")
}

/// `J_S = {(x, y) ∈ K(L) : x ∈ S, ¬y ∈ S}`.
pub fn filter_s_to_j(l: &TenseIcrdl, k: &KalmanAlgebra, s: &TenseFilter) -> Result<TenseFilter> {
    let j = TenseFilter::from_members(
        k.pairs()
            .iter()
            .enumerate()
            .filter(|(_, &(x, y))| s.contains(x) && s.contains(l.base().neg(y)))
            .map(|(i, _)| i),
    );
    ensure_filter(k.tense_drl(), j, "J_S")
}

/// `S_J = {a : (a, 0) ∈ J}`.
pub fn filter_j_to_s(l: &TenseIcrdl, k: &KalmanAlgebra, j: &TenseFilter) -> Result<TenseFilter> {
    let zero = l.base().zero();
    let s = TenseFilter::from_members((0..l.size()).filter(|&a| {
        j.contains(k.index_of(a, zero).expect("(a, 0) lies in K(L)"))
    }));
    ensure_filter(l, s, "S_J")
}

/// Checks that `fwd: A → B` and `bwd: B → A` (given as index maps between
/// finite posets) are mutually inverse and monotone. Entries equal to
/// `None` mark images that fell outside the target poset.
pub fn verify_order_iso(
    label: &str,
    fwd: &[Option<usize>],
    bwd: &[Option<usize>],
    leq_a: &dyn Fn(usize, usize) -> bool,
    leq_b: &dyn Fn(usize, usize) -> bool,
    names_a: &[String],
    names_b: &[String],
) -> Report {
    let mut report = Report::new("order-iso");
    let inverse = (0..fwd.len())
        .find(|&i| fwd[i].and_then(|j| bwd.get(j).copied().flatten()) != Some(i))
        .map(|i| vec![names_a[i].clone()])
        .or_else(|| {
            (0..bwd.len())
                .find(|&j| bwd[j].and_then(|i| fwd.get(i).copied().flatten()) != Some(j))
                .map(|j| vec![names_b[j].clone()])
        });
    report.push(match inverse {
        None => Check::passed(format!("{label}:inverse")),
        Some(w) => Check::failed(format!("{label}:inverse"), Vec::new(), w.clone(), format!("round trip moves {}", w[0])),
    });
    let monotone = |id: String, map: &[Option<usize>], src: &dyn Fn(usize, usize) -> bool,
                    dst: &dyn Fn(usize, usize) -> bool, names: &[String]| {
        let bad = (0..map.len()).cartesian_product(0..map.len()).find(|&(i, j)| {
            src(i, j)
                && match (map[i], map[j]) {
                    (Some(x), Some(y)) => !dst(x, y),
                    _ => true,
                }
        });
        match bad {
            None => Check::passed(id),
            Some((i, j)) => Check::failed(
                id,
                vec![i, j],
                vec![names[i].clone(), names[j].clone()],
                format!("{} ≤ {} but their images are not ordered", names[i], names[j]),
            ),
        }
    };
    report.push(monotone(format!("{label}:fwd-monotone"), fwd, leq_a, leq_b, names_a));
    report.push(monotone(format!("{label}:bwd-monotone"), bwd, leq_b, leq_a, names_b));
    report
}

fn position<T: Ord>(list: &[T], x: &T) -> Option<usize> {
    list.binary_search(x).ok()
}

/// Lattice of congruences together with display names.
struct ConPoset<'a> {
    items: &'a [Congruence],
    names: Vec<String>,
}

impl<'a> ConPoset<'a> {
    fn new(items: &'a [Congruence], elements: &[String]) -> Self {
        ConPoset { items, names: items.iter().map(|c| c.render(elements)).collect() }
    }
    fn leq(&self) -> impl Fn(usize, usize) -> bool + '_ {
        |i, j| self.items[i].refines(&self.items[j])
    }
}

struct FilPoset<'a> {
    items: &'a [TenseFilter],
    names: Vec<String>,
}

impl<'a> FilPoset<'a> {
    fn new(items: &'a [TenseFilter], elements: &[String]) -> Self {
        FilPoset { items, names: items.iter().map(|f| f.render(elements)).collect() }
    }
    fn leq(&self) -> impl Fn(usize, usize) -> bool + '_ {
        |i, j| self.items[i].is_subset(&self.items[j])
    }
}

fn as_theorems(mut r: Report) -> Report {
    for c in &mut r.checks {
        c.fatal = true;
    }
    r
}

fn count_check(id: &str, a: usize, b: usize) -> Check {
    Check::verdict(id, a == b, (a != b).then(|| format!("{a} ≠ {b}"))).as_theorem()
}

fn fp_check<T: TenseAlgebra + ?Sized>(id: &str, t: &T, filters: &[TenseFilter]) -> Check {
    let bad = filters.iter().find_map(|s| fp_closure_failure(t, s).map(|why| (s, why)));
    match bad {
        None => Check::passed(id).as_theorem(),
        Some((s, why)) => Check::verdict(id, false, Some(format!("{}: {why}", s.render(t.names())))).as_theorem(),
    }
}

/// Verifies `Con(T) ≅ tFi(T)` through `θ ↦ 1/θ` and `S ↦ θ_S`.
fn theta_filter_iso<T: TenseAlgebra + ?Sized>(
    label: &str,
    t: &T,
    cons: &[Congruence],
    fils: &[TenseFilter],
) -> Result<Report> {
    let fwd = cons
        .iter()
        .map(|c| Ok(position(fils, &theta_to_filter(t, c)?)))
        .collect::<Result<Vec<_>>>()?;
    let bwd = fils
        .iter()
        .map(|s| Ok(position(cons, &filter_to_theta(t, s)?)))
        .collect::<Result<Vec<_>>>()?;
    let (cp, fp) = (ConPoset::new(cons, t.names()), FilPoset::new(fils, t.names()));
    let report = verify_order_iso(label, &fwd, &bwd, &cp.leq(), &fp.leq(), &cp.names, &fp.names);
    Ok(report)
}

/// Verifies `tFi(A) ≅ tFi(C(A))` through `D ↦ D ∩ C(A)` and `S ↦ D_S`.
fn d_s_iso(label: &str, a: &TenseDrl, c: &Center, fa: &[TenseFilter], fc: &[TenseFilter]) -> Result<Report> {
    let fwd = fa
        .iter()
        .map(|d| Ok(position(fc, &filter_d_to_s(c, d)?)))
        .collect::<Result<Vec<_>>>()?;
    let bwd = fc
        .iter()
        .map(|s| Ok(position(fa, &filter_s_to_d(a, c, s)?)))
        .collect::<Result<Vec<_>>>()?;
    let (pa, pc) = (FilPoset::new(fa, a.names()), FilPoset::new(fc, c.algebra.names()));
    let report = verify_order_iso(label, &fwd, &bwd, &pa.leq(), &pc.leq(), &pa.names, &pc.names);
    Ok(report)
}

/// Every correspondence for a tense ICRDL-algebra `L`: congruences and
/// tense filters of `L`, `K(L)` and `C(K(L))`, the four map pairs and the
/// `F`/`P` closure of every tense filter.
pub fn correspondences_icrdl(l: &TenseIcrdl, bound: usize) -> Result<Report> {
    let k = kalman(l)?;
    let kd = k.tense_drl();
    let c = center(kd)?;
    check_size(k.size(), bound)?;
    let con_l = enumerate_congruences(l.algebra(), bound)?;
    let con_k = enumerate_congruences(&full_drl_algebra(kd), bound)?;
    let fil_l = enumerate_tense_filters(l, bound)?;
    let fil_k = enumerate_tense_filters(kd, bound)?;
    let fil_c = enumerate_tense_filters(&c.algebra, bound)?;

    let mut report = Report::new("correspondences");
    report.note(format!(
        "|L| = {}, |K(L)| = {}, |Con(L)| = {}, |Con(K(L))| = {}, |tFi(L)| = {}, |tFi(K(L))| = {}, |tFi(C(K(L)))| = {}",
        l.size(),
        k.size(),
        con_l.len(),
        con_k.len(),
        fil_l.len(),
        fil_k.len(),
        fil_c.len()
    ));
    report.push(count_check("count:Con(L)=Con(K(L))", con_l.len(), con_k.len()));
    report.push(count_check("count:tFi(L)=tFi(K(L))", fil_l.len(), fil_k.len()));
    report.push(count_check("count:tFi(K(L))=tFi(C(K(L)))", fil_k.len(), fil_c.len()));

    report.extend(as_theorems(theta_filter_iso("theta-S", l, &con_l, &fil_l)?));

    let fwd = con_l
        .iter()
        .map(|t| Ok(position(&con_k, &gamma_of_theta(&k, t)?)))
        .collect::<Result<Vec<_>>>()?;
    let bwd = con_k
        .iter()
        .map(|g| Ok(position(&con_l, &theta_of_gamma(l, &k, g)?)))
        .collect::<Result<Vec<_>>>()?;
    let (pl, pk) = (ConPoset::new(&con_l, l.names()), ConPoset::new(&con_k, kd.names()));
    report.extend(as_theorems(verify_order_iso("theta-gamma", &fwd, &bwd, &pl.leq(), &pk.leq(), &pl.names, &pk.names)));

    report.extend(as_theorems(d_s_iso("D-S", kd, &c, &fil_k, &fil_c)?));

    let fwd = fil_l
        .iter()
        .map(|s| Ok(position(&fil_k, &filter_s_to_j(l, &k, s)?)))
        .collect::<Result<Vec<_>>>()?;
    let bwd = fil_k
        .iter()
        .map(|j| Ok(position(&fil_l, &filter_j_to_s(l, &k, j)?)))
        .collect::<Result<Vec<_>>>()?;
    let (pl, pk) = (FilPoset::new(&fil_l, l.names()), FilPoset::new(&fil_k, kd.names()));
    report.extend(as_theorems(verify_order_iso("S-J", &fwd, &bwd, &pl.leq(), &pk.leq(), &pl.names, &pk.names)));

    report.push(fp_check("FP-closed:L", l, &fil_l));
    report.push(fp_check("FP-closed:K(L)", kd, &fil_k));
    report.push(fp_check("FP-closed:C(K(L))", &c.algebra, &fil_c));
    Ok(report)
}

/// Correspondences for a tense DRL-algebra `A`: congruences against tense
/// filters of `A`, and tense filters of `A` against those of `C(A)`.
pub fn correspondences_drl(a: &TenseDrl, bound: usize) -> Result<Report> {
    let c = center(a)?;
    let con_a = enumerate_congruences(&full_drl_algebra(a), bound)?;
    let fil_a = enumerate_tense_filters(a, bound)?;
    let fil_c = enumerate_tense_filters(&c.algebra, bound)?;
    let mut report = Report::new("correspondences");
    report.note(format!(
        "|A| = {}, |C(A)| = {}, |Con(A)| = {}, |tFi(A)| = {}, |tFi(C(A))| = {}",
        a.size(),
        c.algebra.size(),
        con_a.len(),
        fil_a.len(),
        fil_c.len()
    ));
    report.push(count_check("count:tFi(A)=tFi(C(A))", fil_a.len(), fil_c.len()));
    report.extend(as_theorems(theta_filter_iso("theta-D", a, &con_a, &fil_a)?));
    report.extend(as_theorems(d_s_iso("D-S", a, &c, &fil_a, &fil_c)?));
    report.push(fp_check("FP-closed:A", a, &fil_a));
    report.push(fp_check("FP-closed:C(A)", &c.algebra, &fil_c));
    Ok(report)
}

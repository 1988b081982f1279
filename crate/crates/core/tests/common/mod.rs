//! Brute-force oracles and small-structure searches shared by the
//! integration tests. Nothing here calls the library code it is used to
//! check.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap};

use itertools::Itertools;
use tenselat::congfil::TenseAlgebra;
use tenselat::tense::TenseIcrdl;
use tenselat::term::{parse_term, Signature, Term};
use tenselat::translate::PairTerm;
use tenselat::{fixtures, load_algebra, ElementId, FiniteAlgebra, OperationTable};

pub fn algebra(name: &str) -> FiniteAlgebra {
    load_algebra(fixtures::fixture(name).expect("fixture exists")).expect("fixture parses")
}

pub fn tense(name: &str) -> TenseIcrdl {
    TenseIcrdl::new(algebra(name)).expect("fixture is a tense ICRDL")
}

/// Element names `0, a, b, ..., 1`.
pub fn element_names(n: usize) -> Vec<String> {
    match n {
        1 => vec!["0".into()],
        _ => std::iter::once("0".to_string())
            .chain((0..n - 2).map(|i| ((b'a' + i as u8) as char).to_string()))
            .chain(std::iter::once("1".to_string()))
            .collect(),
    }
}

pub fn build(name: &str, n: usize, ops: &[(&str, usize, Vec<ElementId>)], consts: &[(&str, ElementId)]) -> FiniteAlgebra {
    let mut alg = FiniteAlgebra::new(name, element_names(n)).unwrap();
    for (op, arity, entries) in ops {
        alg.add_operation(OperationTable::new(*op, *arity, n, entries.clone()).unwrap()).unwrap();
    }
    for (c, v) in consts {
        alg.set_constant(*c, *v);
    }
    alg
}

/// A bounded lattice on `0..n` with bottom `0` and top `n - 1`.
#[derive(Clone, Debug)]
pub struct Lattice {
    pub n: usize,
    pub leq: Vec<Vec<bool>>,
}

impl Lattice {
    pub fn top(&self) -> usize {
        self.n - 1
    }

    fn bound(&self, x: usize, y: usize, lower: bool) -> Option<usize> {
        let cands: Vec<usize> = (0..self.n)
            .filter(|&z| if lower { self.leq[z][x] && self.leq[z][y] } else { self.leq[x][z] && self.leq[y][z] })
            .collect();
        cands
            .iter()
            .copied()
            .find(|&z| cands.iter().all(|&w| if lower { self.leq[w][z] } else { self.leq[z][w] }))
    }

    pub fn meet(&self, x: usize, y: usize) -> usize {
        self.bound(x, y, true).expect("lattice")
    }

    pub fn join(&self, x: usize, y: usize) -> usize {
        self.bound(x, y, false).expect("lattice")
    }

    pub fn meet_table(&self) -> Vec<usize> {
        (0..self.n).cartesian_product(0..self.n).map(|(x, y)| self.meet(x, y)).collect()
    }

    pub fn join_table(&self) -> Vec<usize> {
        (0..self.n).cartesian_product(0..self.n).map(|(x, y)| self.join(x, y)).collect()
    }

    /// Join of a set, `0` for the empty set.
    pub fn join_all(&self, xs: impl IntoIterator<Item = usize>) -> usize {
        xs.into_iter().fold(0, |a, b| self.join(a, b))
    }

    pub fn meet_all(&self, xs: impl IntoIterator<Item = usize>) -> usize {
        xs.into_iter().fold(self.top(), |a, b| self.meet(a, b))
    }

    fn canonical(&self) -> Vec<bool> {
        let inner: Vec<usize> = (1..self.n.saturating_sub(1)).collect();
        inner
            .iter()
            .copied()
            .permutations(inner.len())
            .map(|perm| {
                let mut relabel: Vec<usize> = (0..self.n).collect();
                for (from, to) in inner.iter().zip(&perm) {
                    relabel[*from] = *to;
                }
                let mut m = vec![false; self.n * self.n];
                for x in 0..self.n {
                    for y in 0..self.n {
                        m[relabel[x] * self.n + relabel[y]] = self.leq[x][y];
                    }
                }
                m
            })
            .min()
            .unwrap_or_default()
    }
}

/// Every bounded distributive lattice with `n` elements, one per
/// isomorphism class. Orders are searched among relations compatible with
/// the labelling, which every finite poset admits.
pub fn distributive_lattices(n: usize) -> Vec<Lattice> {
    if n == 1 {
        return vec![Lattice { n, leq: vec![vec![true]] }];
    }
    let free: Vec<(usize, usize)> = (1..n - 1).tuple_combinations().collect();
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for mask in 0u32..(1 << free.len()) {
        let mut leq = vec![vec![false; n]; n];
        for x in 0..n {
            leq[x][x] = true;
            leq[0][x] = true;
            leq[x][n - 1] = true;
        }
        for (i, &(x, y)) in free.iter().enumerate() {
            if mask >> i & 1 == 1 {
                leq[x][y] = true;
            }
        }
        let transitive = (0..n).all(|x| (0..n).all(|y| (0..n).all(|z| !(leq[x][y] && leq[y][z]) || leq[x][z])));
        if !transitive {
            continue;
        }
        let lat = Lattice { n, leq };
        let is_lattice = (0..n).all(|x| (0..n).all(|y| lat.bound(x, y, true).is_some() && lat.bound(x, y, false).is_some()));
        if !is_lattice {
            continue;
        }
        let distributive = (0..n).all(|x| {
            (0..n).all(|y| (0..n).all(|z| lat.meet(x, lat.join(y, z)) == lat.join(lat.meet(x, y), lat.meet(x, z))))
        });
        if distributive && seen.insert(lat.canonical()) {
            out.push(lat);
        }
    }
    out
}

/// `max {z : x · z ≤ y}` for a join-preserving product.
pub fn residuum(lat: &Lattice, prod: &[usize]) -> Vec<usize> {
    let n = lat.n;
    (0..n)
        .cartesian_product(0..n)
        .map(|(x, y)| lat.join_all((0..n).filter(|&z| lat.leq[prod[x * n + z]][y])))
        .collect()
}

/// Every map preserving finite meets, including the empty one.
pub fn meet_preserving_maps(lat: &Lattice) -> Vec<Vec<usize>> {
    let n = lat.n;
    (0..n)
        .map(|_| 0..n)
        .multi_cartesian_product()
        .filter(|g| g[lat.top()] == lat.top())
        .filter(|g| (0..n).all(|x| (0..n).all(|y| g[lat.meet(x, y)] == lat.meet(g[x], g[y]))))
        .collect()
}

/// The left adjoint of a meet-preserving map: `x ↦ min {y : x ≤ g(y)}`.
pub fn left_adjoint(lat: &Lattice, g: &[usize]) -> Vec<usize> {
    (0..lat.n).map(|x| lat.meet_all((0..lat.n).filter(|&y| lat.leq[x][g[y]]))).collect()
}

/// Every tense Heyting algebra of size `n` up to relabelling of the
/// lattice: Heyting algebras with all pairs of meet-preserving `G`, `H`
/// whose adjoints make `T1`–`T6` hold. The library validator decides the
/// tense axioms.
pub fn tense_heyting_algebras(n: usize) -> Vec<TenseIcrdl> {
    let mut out = Vec::new();
    for (li, lat) in distributive_lattices(n).iter().enumerate() {
        let meet = lat.meet_table();
        let imp = residuum(lat, &meet);
        let maps = meet_preserving_maps(lat);
        let adjoints: Vec<Vec<usize>> = maps.iter().map(|g| left_adjoint(lat, g)).collect();
        for (gi, hi) in (0..maps.len()).cartesian_product(0..maps.len()) {
            let alg = build(
                &format!("th{n}.{li}.{gi}.{hi}"),
                n,
                &[
                    ("meet", 2, meet.clone()),
                    ("join", 2, lat.join_table()),
                    ("prod", 2, meet.clone()),
                    ("imp", 2, imp.clone()),
                    ("G", 1, maps[gi].clone()),
                    ("H", 1, maps[hi].clone()),
                    ("F", 1, adjoints[hi].clone()),
                    ("P", 1, adjoints[gi].clone()),
                ],
                &[("0", 0), ("1", lat.top())],
            );
            if let Ok(t) = TenseIcrdl::new(alg) {
                out.push(t);
            }
        }
    }
    out
}

/// Every ICRDL of size `n` up to relabelling of the lattice: commutative,
/// associative products with unit `1` that preserve finite joins, each with
/// its residuum.
pub fn icrdls(n: usize) -> Vec<FiniteAlgebra> {
    let mut out = Vec::new();
    for (li, lat) in distributive_lattices(n).iter().enumerate() {
        let top = lat.top();
        let cells: Vec<(usize, usize)> = (0..top).tuple_combinations().chain((0..top).map(|i| (i, i))).collect();
        for (pi, values) in cells.iter().map(|_| 0..n).multi_cartesian_product().enumerate() {
            let mut prod = vec![0; n * n];
            for x in 0..n {
                prod[x * n + top] = x;
                prod[top * n + x] = x;
            }
            for (&(x, y), &v) in cells.iter().zip(&values) {
                prod[x * n + y] = v;
                prod[y * n + x] = v;
            }
            let p = |x: usize, y: usize| prod[x * n + y];
            let assoc = (0..n).all(|x| (0..n).all(|y| (0..n).all(|z| p(p(x, y), z) == p(x, p(y, z)))));
            let joins = (0..n).all(|x| {
                p(x, 0) == 0 && (0..n).all(|y| (0..n).all(|z| p(x, lat.join(y, z)) == lat.join(p(x, y), p(x, z))))
            });
            if !(assoc && joins) {
                continue;
            }
            let imp = residuum(lat, &prod);
            out.push(build(
                &format!("icrdl{n}.{li}.{pi}"),
                n,
                &[("meet", 2, lat.meet_table()), ("join", 2, lat.join_table()), ("prod", 2, prod.clone()), ("imp", 2, imp)],
                &[("0", 0), ("1", top)],
            ));
        }
    }
    out
}

/// All partitions of `0..n` compatible with every operation of `alg`, as
/// block labels in order of first appearance.
pub fn congruence_oracle(alg: &FiniteAlgebra) -> BTreeSet<Vec<usize>> {
    let n = alg.size();
    let mut out = BTreeSet::new();
    let mut labels = vec![0usize; n];
    fn rec(i: usize, max: usize, labels: &mut Vec<usize>, alg: &FiniteAlgebra, out: &mut BTreeSet<Vec<usize>>) {
        let n = labels.len();
        if i == n {
            if compatible(alg, labels) {
                out.insert(labels.clone());
            }
            return;
        }
        for l in 0..=max {
            labels[i] = l;
            rec(i + 1, if l == max { max + 1 } else { max }, labels, alg, out);
        }
    }
    if n == 0 {
        return out;
    }
    labels[0] = 0;
    rec(1, 1, &mut labels, alg, &mut out);
    out
}

fn compatible(alg: &FiniteAlgebra, labels: &[usize]) -> bool {
    let n = labels.len();
    let related: Vec<(usize, usize)> = (0..n).cartesian_product(0..n).filter(|&(x, y)| labels[x] == labels[y]).collect();
    alg.operations().all(|op| match op.arity() {
        1 => related.iter().all(|&(x, y)| labels[op.apply(&[x])] == labels[op.apply(&[y])]),
        2 => related.iter().all(|&(x, x2)| {
            related
                .iter()
                .all(|&(y, y2)| labels[op.apply(&[x, y])] == labels[op.apply(&[x2, y2])])
        }),
        _ => true,
    })
}

/// All subsets that contain the top, are up-sets, and are closed under
/// the product, `G` and `H`.
pub fn filter_oracle<T: TenseAlgebra>(t: &T) -> BTreeSet<Vec<usize>> {
    let n = t.size();
    assert!(n <= 20, "subset oracle is exponential");
    (0u32..(1 << n))
        .filter_map(|mask| {
            let inside = |x: usize| mask >> x & 1 == 1;
            let members: Vec<usize> = (0..n).filter(|&x| inside(x)).collect();
            let ok = inside(t.top())
                && members.iter().all(|&x| {
                    (0..n).all(|y| !t.leq(x, y) || inside(y))
                        && members.iter().all(|&y| inside(t.mul(x, y)))
                        && inside(t.g(x))
                        && inside(t.h(x))
                });
            ok.then_some(members)
        })
        .collect()
}

/// The translation of a tDRL term, built by writing out each row as text
/// and parsing the result.
pub fn naive_tau_star(t: &Term) -> PairTerm {
    let (a, b) = naive_strings(t);
    PairTerm::new(
        parse_term(&a, Signature::Ticrl).unwrap(),
        parse_term(&b, Signature::Ticrl).unwrap(),
    )
}

fn naive_strings(t: &Term) -> (String, String) {
    match t {
        Term::Var(x) => (format!("{x}.1"), format!("{x}.2")),
        Term::App(s, args) => {
            let v: Vec<(String, String)> = args.iter().map(naive_strings).collect();
            let a = |i: usize| v[i].0.clone();
            let b = |i: usize| v[i].1.clone();
            match s.name {
                "vee" => (format!("(vee {} {})", a(0), a(1)), format!("(wedge {} {})", b(0), b(1))),
                "wedge" => (format!("(wedge {} {})", a(0), a(1)), format!("(vee {} {})", b(0), b(1))),
                "star" => (
                    format!("(prod {} {})", a(0), a(1)),
                    format!("(wedge (imp {} {}) (imp {} {}))", a(0), b(1), a(1), b(0)),
                ),
                "dimp" => (
                    format!("(wedge (imp {} {}) (imp {} {}))", a(0), a(1), b(1), b(0)),
                    format!("(prod {} {})", a(0), b(1)),
                ),
                "tilde" => (b(0), a(0)),
                "G" => (format!("(G {})", a(0)), format!("(F {})", b(0))),
                "H" => (format!("(H {})", a(0)), format!("(P {})", b(0))),
                "F" => (format!("(F {})", a(0)), format!("(G {})", b(0))),
                "P" => (format!("(P {})", a(0)), format!("(H {})", b(0))),
                "c" => ("0".into(), "0".into()),
                "0" => ("0".into(), "1".into()),
                "1" => ("1".into(), "0".into()),
                other => panic!("not a tDRL symbol: {other}"),
            }
        }
    }
}

/// Evaluates a tDRL term on pairs of elements of `L`, straight from the
/// twist-product operations.
pub fn pair_eval(t: &TenseIcrdl, term: &Term, v: &HashMap<String, (usize, usize)>) -> (usize, usize) {
    let l = t.base();
    match term {
        Term::Var(x) => v[x],
        Term::App(s, args) => {
            let r: Vec<(usize, usize)> = args.iter().map(|a| pair_eval(t, a, v)).collect();
            match s.name {
                "vee" => (l.join(r[0].0, r[1].0), l.meet(r[0].1, r[1].1)),
                "wedge" => (l.meet(r[0].0, r[1].0), l.join(r[0].1, r[1].1)),
                "star" => {
                    let ((a, b), (x, y)) = (r[0], r[1]);
                    (l.prod(a, x), l.meet(l.imp(a, y), l.imp(x, b)))
                }
                "dimp" => {
                    let ((a, b), (x, y)) = (r[0], r[1]);
                    (l.meet(l.imp(a, x), l.imp(y, b)), l.prod(a, y))
                }
                "tilde" => (r[0].1, r[0].0),
                "G" => (t.g(r[0].0), t.f(r[0].1)),
                "H" => (t.h(r[0].0), t.p(r[0].1)),
                "F" => (t.f(r[0].0), t.g(r[0].1)),
                "P" => (t.p(r[0].0), t.h(r[0].1)),
                "c" => (l.zero(), l.zero()),
                "0" => (l.zero(), l.one()),
                "1" => (l.one(), l.zero()),
                other => panic!("not a tDRL symbol: {other}"),
            }
        }
    }
}

/// The Łukasiewicz chain with `n` elements, `n` odd, as a tense DRL
/// candidate with identity tense operators and `c` the midpoint.
pub fn lukasiewicz(n: usize) -> FiniteAlgebra {
    assert!(n % 2 == 1);
    let top = n - 1;
    let table2 = |f: &dyn Fn(usize, usize) -> usize| (0..n).cartesian_product(0..n).map(|(x, y)| f(x, y)).collect::<Vec<_>>();
    let mut alg = FiniteAlgebra::new(format!("luk{n}"), (0..n).map(|i| format!("l{i}")).collect()).unwrap();
    for (name, entries) in [
        ("meet", table2(&|x, y| x.min(y))),
        ("join", table2(&|x, y| x.max(y))),
        ("star", table2(&|x, y| (x + y).saturating_sub(top))),
    ] {
        alg.add_operation(OperationTable::new(name, 2, n, entries).unwrap()).unwrap();
    }
    for (name, entries) in [("tilde", (0..n).map(|x| top - x).collect()), ("G", (0..n).collect()), ("H", (0..n).collect())] {
        alg.add_operation(OperationTable::new(name, 1, n, entries).unwrap()).unwrap();
    }
    alg.set_constant("0", 0);
    alg.set_constant("1", top);
    alg.set_constant("c", top / 2);
    alg
}

/// Order-reversing involutions of `lat` with at least one fixed point.
pub fn involutions_with_fixed_point(lat: &Lattice) -> Vec<Vec<usize>> {
    let n = lat.n;
    (0..n)
        .permutations(n)
        .filter(|t| (0..n).all(|x| t[t[x]] == x))
        .filter(|t| (0..n).all(|x| (0..n).all(|y| !lat.leq[x][y] || lat.leq[t[y]][t[x]])))
        .filter(|t| (0..n).any(|x| t[x] == x))
        .collect()
}

/// Candidate DRLs with `n` elements: every bounded distributive lattice,
/// every order-reversing involution `∼` with a fixed point `c`, and every
/// integral commutative monoid `∗` whose residuum is `∼(x ∗ ∼y)`, with
/// identity tense operators. LC is left to the library validator.
pub fn drl_candidates(n: usize) -> Vec<FiniteAlgebra> {
    let mut out = Vec::new();
    for (li, lat) in distributive_lattices(n).iter().enumerate() {
        let top = lat.top();
        let cells: Vec<(usize, usize)> = (0..top).tuple_combinations().chain((0..top).map(|i| (i, i))).collect();
        let choices: Vec<Vec<usize>> = cells
            .iter()
            .map(|&(x, y)| (0..n).filter(|&v| lat.leq[v][lat.meet(x, y)]).collect())
            .collect();
        for (pi, values) in choices.iter().map(|c| c.iter().copied()).multi_cartesian_product().enumerate() {
            let mut prod = vec![0; n * n];
            for x in 0..n {
                prod[x * n + top] = x;
                prod[top * n + x] = x;
            }
            for (&(x, y), &v) in cells.iter().zip(&values) {
                prod[x * n + y] = v;
                prod[y * n + x] = v;
            }
            let p = |x: usize, y: usize| prod[x * n + y];
            let assoc = (0..n).all(|x| (0..n).all(|y| (0..n).all(|z| p(p(x, y), z) == p(x, p(y, z)))));
            if !assoc {
                continue;
            }
            for (ti, tilde) in involutions_with_fixed_point(lat).iter().enumerate() {
                let dimp = |x: usize, y: usize| tilde[p(x, tilde[y])];
                let residuated = (0..n)
                    .all(|x| (0..n).all(|y| (0..n).all(|z| lat.leq[p(x, z)][y] == lat.leq[z][dimp(x, y)])));
                if !residuated {
                    continue;
                }
                for c in (0..n).filter(|&x| tilde[x] == x) {
                    out.push(build(
                        &format!("drl{n}.{li}.{pi}.{ti}.{c}"),
                        n,
                        &[
                            ("meet", 2, lat.meet_table()),
                            ("join", 2, lat.join_table()),
                            ("star", 2, prod.clone()),
                            ("tilde", 1, tilde.clone()),
                            ("G", 1, (0..n).collect()),
                            ("H", 1, (0..n).collect()),
                        ],
                        &[("0", 0), ("1", top), ("c", c)],
                    ));
                }
            }
        }
    }
    out
}

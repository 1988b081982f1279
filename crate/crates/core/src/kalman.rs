//! The Kalman pair construction `K(L)`, the center `C(A)`, the unit maps
//! `α` and `β`, and the functor actions on homomorphisms.

use std::collections::HashMap;

use itertools::Itertools;

use crate::algebra::{ElementId, FiniteAlgebra, OperationTable};
use crate::drl::{derived_fp, Drl, TenseDrl};
use crate::error::{Error, Result};
use crate::report::{Check, Law, Report};
use crate::tense::TenseIcrdl;

/// Operations a tense ICRDL homomorphism must preserve.
pub const TENSE_ICRDL_OPS: &[&str] = &["meet", "join", "prod", "imp", "G", "H", "F", "P"];
/// Constants a tense ICRDL homomorphism must preserve.
pub const TENSE_ICRDL_CONSTS: &[&str] = &["0", "1"];
/// Operations a tense DRL homomorphism must preserve.
pub const TENSE_DRL_OPS: &[&str] = &["meet", "join", "star", "dimp", "tilde", "G", "H", "F", "P"];
/// Constants a tense DRL homomorphism must preserve.
pub const TENSE_DRL_CONSTS: &[&str] = &["0", "1", "c"];

/// `K(L)`: the pairs `(a, b)` with `a · b = 0`, sorted by `(a, b)`, carrying
/// the tense DRL structure.
#[derive(Clone, Debug)]
pub struct KalmanAlgebra {
    pairs: Vec<(ElementId, ElementId)>,
    index: HashMap<(ElementId, ElementId), ElementId>,
    drl: TenseDrl,
}

impl KalmanAlgebra {
    pub fn pairs(&self) -> &[(ElementId, ElementId)] {
        &self.pairs
    }

    pub fn pair(&self, x: ElementId) -> (ElementId, ElementId) {
        self.pairs[x]
    }

    pub fn index_of(&self, a: ElementId, b: ElementId) -> Option<ElementId> {
        self.index.get(&(a, b)).copied()
    }

    pub fn tense_drl(&self) -> &TenseDrl {
        &self.drl
    }

    pub fn algebra(&self) -> &FiniteAlgebra {
        self.drl.algebra()
    }

    pub fn size(&self) -> usize {
        self.pairs.len()
    }
}

/// Builds `K(L)` and validates it as a tense DRL-algebra. Any failure means
/// the construction is broken and is reported as a violation.
pub fn kalman(t: &TenseIcrdl) -> Result<KalmanAlgebra> {
    let l = t.base();
    let n = l.size();
    let pairs: Vec<(ElementId, ElementId)> = (0..n)
        .cartesian_product(0..n)
        .filter(|&(a, b)| l.prod(a, b) == l.zero())
        .collect();
    let index: HashMap<_, _> = pairs.iter().enumerate().map(|(i, &p)| (p, i)).collect();
    let names = pairs
        .iter()
        .map(|&(a, b)| format!("({},{})", l.name(a), l.name(b)))
        .collect();
    let k = pairs.len();
    let lookup = |p: (ElementId, ElementId), op: &str| -> Result<ElementId> {
        index.get(&p).copied().ok_or_else(|| {
            Error::violation(format!(
                "{op} produced ({},{}) whose components do not multiply to 0",
                l.name(p.0),
                l.name(p.1)
            ))
        })
    };
    let binary = |name: &str, f: &dyn Fn((usize, usize), (usize, usize)) -> (usize, usize)| {
        let mut entries = Vec::with_capacity(k * k);
        for &u in &pairs {
            for &v in &pairs {
                entries.push(lookup(f(u, v), name)?);
            }
        }
        OperationTable::new(name, 2, k, entries)
    };
    let unary = |name: &str, f: &dyn Fn((usize, usize)) -> (usize, usize)| {
        let entries = pairs.iter().map(|&u| lookup(f(u), name)).collect::<Result<Vec<_>>>()?;
        OperationTable::new(name, 1, k, entries)
    };

    let mut alg = FiniteAlgebra::new(format!("K({})", l.algebra().name()), names)?;
    let tables = [
        binary("join", &|(a, b), (x, y)| (l.join(a, x), l.meet(b, y)))?,
        binary("meet", &|(a, b), (x, y)| (l.meet(a, x), l.join(b, y)))?,
        binary("star", &|(a, b), (x, y)| {
            (l.prod(a, x), l.meet(l.imp(a, y), l.imp(x, b)))
        })?,
        binary("dimp", &|(a, b), (x, y)| {
            (l.meet(l.imp(a, x), l.imp(y, b)), l.prod(a, y))
        })?,
        unary("tilde", &|(a, b)| (b, a))?,
        unary("G", &|(a, b)| (t.g(a), t.f(b)))?,
        unary("H", &|(a, b)| (t.h(a), t.p(b)))?,
        unary("F", &|(a, b)| (t.f(a), t.g(b)))?,
        unary("P", &|(a, b)| (t.p(a), t.h(b)))?,
    ];
    for table in tables {
        alg.add_operation(table)?;
    }
    alg.set_constant("0", lookup((l.zero(), l.one()), "0")?);
    alg.set_constant("1", lookup((l.one(), l.zero()), "1")?);
    alg.set_constant("c", lookup((l.zero(), l.zero()), "c")?);

    let drl = match TenseDrl::new(alg) {
        Ok(d) => d,
        Err(Error::Invalid(r)) => {
            return Err(Error::violation(format!(
                "K(L) is not a tense DRL-algebra: {}",
                r.first_failure().unwrap_or("?")
            )))
        }
        Err(e) => return Err(e),
    };
    Ok(KalmanAlgebra { pairs, index, drl })
}

/// `C(A) = {x : x ≥ c}` as a tense ICRDL-algebra, together with the
/// positions of its elements in `A`.
#[derive(Clone, Debug)]
pub struct Center {
    pub algebra: TenseIcrdl,
    pub embedding: Vec<ElementId>,
}

impl Center {
    /// Position of an ambient element in `C(A)`.
    pub fn index_of(&self, x: ElementId) -> Option<ElementId> {
        self.embedding.iter().position(|&m| m == x)
    }
}

/// Builds `C(A)` with `x · y = (x ∗ y) ∨ c`, `x → y = x ⇒ y` and the
/// restricted tense operators. The result is validated as a tense ICRDL.
pub fn center(d: &TenseDrl) -> Result<Center> {
    let members = d.center_elements();
    let k = members.len();
    let pos = |x: ElementId, op: &str| -> Result<ElementId> {
        members.iter().position(|&m| m == x).ok_or_else(|| {
            Error::violation(format!("{op} leaves C(A) at {}", d.name(x)))
        })
    };
    let names = members.iter().map(|&m| d.name(m).to_string()).collect();
    let mut alg = FiniteAlgebra::new(format!("C({})", d.algebra().name()), names)?;
    let binary = |name: &str, f: &dyn Fn(ElementId, ElementId) -> ElementId| {
        let mut entries = Vec::with_capacity(k * k);
        for &x in &members {
            for &y in &members {
                entries.push(pos(f(x, y), name)?);
            }
        }
        OperationTable::new(name, 2, k, entries)
    };
    let unary = |name: &str, f: &dyn Fn(ElementId) -> ElementId| {
        let entries = members.iter().map(|&x| pos(f(x), name)).collect::<Result<Vec<_>>>()?;
        OperationTable::new(name, 1, k, entries)
    };
    let c = d.c();
    let tables = [
        binary("meet", &|x, y| d.meet(x, y))?,
        binary("join", &|x, y| d.join(x, y))?,
        binary("prod", &|x, y| d.join(d.star(x, y), c))?,
        binary("imp", &|x, y| d.dimp(x, y))?,
        unary("G", &|x| d.g(x))?,
        unary("H", &|x| d.h(x))?,
        unary("F", &|x| d.f(x))?,
        unary("P", &|x| d.p(x))?,
    ];
    for table in tables {
        alg.add_operation(table)?;
    }
    alg.set_constant("0", pos(c, "0")?);
    alg.set_constant("1", pos(d.one(), "1")?);
    let algebra = match TenseIcrdl::new(alg) {
        Ok(t) => t,
        Err(Error::Invalid(r)) => {
            return Err(Error::violation(format!(
                "C(A) is not a tense ICRDL-algebra: {}",
                r.first_failure().unwrap_or("?")
            )))
        }
        Err(e) => return Err(e),
    };
    Ok(Center { algebra, embedding: members })
}

/// The algebra of a tense DRL with the derived `⇒`, `F` and `P` tables
/// filled in, so homomorphism checks see the whole signature.
pub fn full_drl_algebra(d: &TenseDrl) -> FiniteAlgebra {
    let mut alg = d.algebra().clone();
    let n = d.size();
    let [g, h, _, _] = d.tables();
    let (f, p) = derived_fp(d.drl(), g, h);
    let dimp = d.dimp_table().to_vec();
    for (name, arity, entries) in [("dimp", 2, dimp), ("F", 1, f), ("P", 1, p)] {
        alg.set_operation(OperationTable::new(name, arity, n, entries).expect("derived tables are total"));
    }
    alg
}

/// A total map between two finite algebras, stored as its graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraMap {
    pub domain: FiniteAlgebra,
    pub codomain: FiniteAlgebra,
    pub graph: Vec<ElementId>,
}

impl AlgebraMap {
    pub fn new(domain: FiniteAlgebra, codomain: FiniteAlgebra, graph: Vec<ElementId>) -> Result<Self> {
        if graph.len() != domain.size() || graph.iter().any(|&y| y >= codomain.size()) {
            return Err(Error::Precondition(format!(
                "graph of length {} does not map {} elements into {}",
                graph.len(),
                domain.size(),
                codomain.size()
            )));
        }
        Ok(AlgebraMap { domain, codomain, graph })
    }

    pub fn apply(&self, x: ElementId) -> ElementId {
        self.graph[x]
    }

    pub fn is_injective(&self) -> bool {
        self.graph.iter().all_unique()
    }

    pub fn is_surjective(&self) -> bool {
        self.graph.iter().unique().count() == self.codomain.size()
    }

    pub fn is_bijective(&self) -> bool {
        self.is_injective() && self.is_surjective()
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &AlgebraMap) -> Result<AlgebraMap> {
        if self.codomain.size() != other.domain.size() {
            return Err(Error::Precondition("maps are not composable".into()));
        }
        let graph = self.graph.iter().map(|&x| other.graph[x]).collect();
        AlgebraMap::new(self.domain.clone(), other.codomain.clone(), graph)
    }

    /// Checks that every listed operation and constant is preserved.
    pub fn check_preserves(&self, ops: &[&str], consts: &[&str]) -> Result<Report> {
        check_homomorphism(&self.domain, &self.codomain, &self.graph, ops, consts)
    }

    /// Human-readable graph, one `x ↦ f(x)` entry per element.
    pub fn describe(&self) -> Vec<String> {
        self.graph
            .iter()
            .enumerate()
            .map(|(x, &y)| format!("{} ↦ {}", self.domain.element_name(x), self.codomain.element_name(y)))
            .collect()
    }
}

/// Checks `f(op(x̄)) = op(f(x̄))` for every listed operation and every
/// tuple, and `f(k) = k` for every listed constant.
pub fn check_homomorphism(
    dom: &FiniteAlgebra,
    cod: &FiniteAlgebra,
    f: &[ElementId],
    ops: &[&str],
    consts: &[&str],
) -> Result<Report> {
    let mut report = Report::new("homomorphism");
    for &name in consts {
        let a = dom.require_constant(name)?;
        let b = cod.require_constant(name)?;
        let ok = f[a] == b;
        report.push(Check::verdict(
            format!("hom:{name}"),
            ok,
            (!ok).then(|| format!("f({name}) = {} ≠ {}", cod.element_name(f[a]), cod.element_name(b))),
        ));
    }
    let mut laws = Vec::new();
    for &name in ops {
        let src = dom.operation(name).ok_or_else(|| Error::MissingOperation(name.into()))?;
        let dst = cod.require(name, src.arity())?;
        laws.push(Law::new(format!("hom:{name}"), src.arity(), move |args| {
            let image: Vec<ElementId> = args.iter().map(|&x| f[x]).collect();
            let lhs = f[src.apply(args)];
            let rhs = dst.apply(&image);
            (lhs != rhs).then(|| {
                let shown = args.iter().map(|&x| dom.element_name(x)).join(", ");
                let mapped = image.iter().map(|&x| cod.element_name(x)).join(", ");
                format!(
                    "f({name}({shown})) = {} ≠ {} = {name}({mapped})",
                    cod.element_name(lhs),
                    cod.element_name(rhs)
                )
            })
        }));
    }
    report.extend(crate::report::run_laws("homomorphism", &laws, dom.size(), dom.elements()));
    Ok(report)
}

fn require_hom(report: &Report, what: &str) -> Result<()> {
    if report.all_pass() {
        Ok(())
    } else {
        Err(Error::violation(format!(
            "{what} is not a homomorphism: {}",
            report.first_failure().unwrap_or("?")
        )))
    }
}

/// The unit `α_L : L → C(K(L))`, `x ↦ (x, 0)`, with the intermediate
/// constructions.
#[derive(Clone, Debug)]
pub struct Alpha {
    pub map: AlgebraMap,
    pub kalman: KalmanAlgebra,
    pub center: Center,
}

/// Builds `α_L` and verifies it is a bijective tense ICRDL homomorphism.
pub fn alpha_map(t: &TenseIcrdl) -> Result<Alpha> {
    let k = kalman(t)?;
    let c = center(k.tense_drl())?;
    let zero = t.base().zero();
    let graph = (0..t.size())
        .map(|x| {
            let in_k = k.index_of(x, zero).expect("(x, 0) always lies in K(L)");
            c.index_of(in_k).ok_or_else(|| Error::violation("(x, 0) is not above c"))
        })
        .collect::<Result<Vec<_>>>()?;
    let map = AlgebraMap::new(t.algebra().clone(), c.algebra.algebra().clone(), graph)?;
    require_hom(&map.check_preserves(TENSE_ICRDL_OPS, TENSE_ICRDL_CONSTS)?, "α")?;
    if !map.is_bijective() {
        return Err(Error::violation("α is not a bijection"));
    }
    Ok(Alpha { map, kalman: k, center: c })
}

/// The unit `β_A : A → K(C(A))`, `x ↦ (x ∨ c, ∼x ∨ c)`.
#[derive(Clone, Debug)]
pub struct Beta {
    pub map: AlgebraMap,
    pub center: Center,
    pub kalman: KalmanAlgebra,
    pub surjective: bool,
}

/// Builds `β_A`, verifies it is an injective tense DRL homomorphism and
/// records whether it is onto.
pub fn beta_map(d: &TenseDrl) -> Result<Beta> {
    let c = center(d)?;
    let k = kalman(&c.algebra)?;
    let cc = d.c();
    let graph = (0..d.size())
        .map(|x| {
            let a = c.index_of(d.join(x, cc)).expect("x ∨ c is above c");
            let b = c.index_of(d.join(d.tilde(x), cc)).expect("∼x ∨ c is above c");
            k.index_of(a, b)
                .ok_or_else(|| Error::violation(format!("β({}) is not a pair of K(C(A))", d.name(x))))
        })
        .collect::<Result<Vec<_>>>()?;
    let map = AlgebraMap::new(full_drl_algebra(d), k.algebra().clone(), graph)?;
    require_hom(&map.check_preserves(TENSE_DRL_OPS, TENSE_DRL_CONSTS)?, "β")?;
    if !map.is_injective() {
        return Err(Error::violation("β is not injective"));
    }
    let surjective = map.is_surjective();
    Ok(Beta { map, center: c, kalman: k, surjective })
}

/// Outcome of the pair-representation condition: every `x, y ≥ c` with
/// `(x ∗ y) ∨ c = c` is `(z ∨ c, ∼z ∨ c)` for some `z`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CkOutcome {
    pub holds: bool,
    /// The lexicographically first pair with no representing `z`.
    pub witness: Option<(ElementId, ElementId)>,
}

pub fn check_ck_condition(d: &Drl) -> CkOutcome {
    let c = d.c();
    let up = d.center_elements();
    let witness = up.iter().copied().cartesian_product(up.iter().copied()).find(|&(x, y)| {
        d.join(d.star(x, y), c) == c
            && !(0..d.size()).any(|z| d.join(z, c) == x && d.join(d.tilde(z), c) == y)
    });
    CkOutcome { holds: witness.is_none(), witness }
}

/// `K(f)(a, b) = (f(a), f(b))` for a tense ICRDL homomorphism `f`.
pub fn lift_hom_k(dom: &TenseIcrdl, cod: &TenseIcrdl, f: &[ElementId]) -> Result<AlgebraMap> {
    let pre = check_homomorphism(dom.algebra(), cod.algebra(), f, TENSE_ICRDL_OPS, TENSE_ICRDL_CONSTS)?;
    if !pre.all_pass() {
        return Err(Error::Precondition(format!(
            "not a tense ICRDL homomorphism: {}",
            pre.first_failure().unwrap_or("?")
        )));
    }
    let kd = kalman(dom)?;
    let kc = kalman(cod)?;
    let graph = kd
        .pairs()
        .iter()
        .map(|&(a, b)| {
            kc.index_of(f[a], f[b])
                .ok_or_else(|| Error::violation("K(f) leaves K(L)"))
        })
        .collect::<Result<Vec<_>>>()?;
    let map = AlgebraMap::new(kd.algebra().clone(), kc.algebra().clone(), graph)?;
    require_hom(&map.check_preserves(TENSE_DRL_OPS, TENSE_DRL_CONSTS)?, "K(f)")?;
    Ok(map)
}

/// `C(f)`, the restriction of a tense DRL homomorphism to centers.
pub fn lift_hom_c(dom: &TenseDrl, cod: &TenseDrl, f: &[ElementId]) -> Result<AlgebraMap> {
    let (full_dom, full_cod) = (full_drl_algebra(dom), full_drl_algebra(cod));
    let pre = check_homomorphism(&full_dom, &full_cod, f, TENSE_DRL_OPS, TENSE_DRL_CONSTS)?;
    if !pre.all_pass() {
        return Err(Error::Precondition(format!(
            "not a tense DRL homomorphism: {}",
            pre.first_failure().unwrap_or("?")
        )));
    }
    let cd = center(dom)?;
    let cc = center(cod)?;
    let graph = cd
        .embedding
        .iter()
        .map(|&x| {
            cc.index_of(f[x]).ok_or_else(|| {
                Error::violation(format!("f({}) is not above c", dom.name(x)))
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let map = AlgebraMap::new(cd.algebra.algebra().clone(), cc.algebra.algebra().clone(), graph)?;
    require_hom(&map.check_preserves(TENSE_ICRDL_OPS, TENSE_ICRDL_CONSTS)?, "C(f)")?;
    Ok(map)
}

/// Round trip `L → C(K(L))` for a tense ICRDL-algebra.
pub fn roundtrip_icrdl(t: &TenseIcrdl) -> Result<Report> {
    let mut report = Report::new("roundtrip-icrdl");
    let alpha = alpha_map(t)?;
    report.note(format!(
        "|L| = {}, |K(L)| = {}, |C(K(L))| = {}",
        t.size(),
        alpha.kalman.size(),
        alpha.center.algebra.size()
    ));
    report.push(Check::verdict("alpha-bijective", alpha.map.is_bijective(), None));
    report.extend(alpha.map.check_preserves(TENSE_ICRDL_OPS, TENSE_ICRDL_CONSTS)?);
    Ok(report)
}

/// Round trip `A → K(C(A))` for a tense DRL-algebra. `β` is an isomorphism
/// exactly when the pair-representation condition holds.
pub fn roundtrip_drl(d: &TenseDrl) -> Result<Report> {
    let mut report = Report::new("roundtrip-drl");
    let beta = beta_map(d)?;
    let ck = check_ck_condition(d.drl());
    report.note(format!(
        "|A| = {}, |C(A)| = {}, |K(C(A))| = {}",
        d.size(),
        beta.center.algebra.size(),
        beta.kalman.size()
    ));
    report.push(Check::verdict("beta-injective", beta.map.is_injective(), None));
    report.extend(beta.map.check_preserves(TENSE_DRL_OPS, TENSE_DRL_CONSTS)?);
    report.push(match ck.witness {
        None => Check::passed("CK"),
        Some((x, y)) => Check::failed(
            "CK",
            vec![x, y],
            vec![d.name(x).into(), d.name(y).into()],
            format!("no z with z ∨ c = {} and ∼z ∨ c = {}", d.name(x), d.name(y)),
        ),
    });
    report.push(Check::verdict(
        "beta-surjective",
        beta.surjective,
        (!beta.surjective).then(|| "β misses part of K(C(A))".to_string()),
    ));
    report.push(
        Check::verdict(
            "beta-iso-iff-CK",
            beta.surjective == ck.holds,
            (beta.surjective != ck.holds)
                .then(|| format!("β onto: {}, CK: {}", beta.surjective, ck.holds)),
        )
        .as_theorem(),
    );
    Ok(report)
}

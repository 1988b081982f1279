//! Integral commutative residuated distributive lattices.

use crate::algebra::{ElementId, FiniteAlgebra, OperationTable};
use crate::error::{Error, Result};
use crate::order::{derive_order, OrderRelation};
use crate::report::{not_leq, run_laws, Check, Law, Report};

/// Dense tables of a lattice-ordered algebra, borrowed by the law suites.
struct LatticeView<'a> {
    n: usize,
    names: &'a [String],
    meet: Vec<ElementId>,
    join: Vec<ElementId>,
    order: OrderRelation,
    zero: ElementId,
    one: ElementId,
}

impl<'a> LatticeView<'a> {
    fn new(alg: &'a FiniteAlgebra) -> Result<Self> {
        let order = derive_order(alg)?;
        Ok(LatticeView {
            n: alg.size(),
            names: alg.elements(),
            meet: alg.binary("meet")?,
            join: alg.binary("join")?,
            order,
            zero: alg.require_constant("0")?,
            one: alg.require_constant("1")?,
        })
    }

    fn m(&self, x: ElementId, y: ElementId) -> ElementId {
        self.meet[x * self.n + y]
    }

    fn j(&self, x: ElementId, y: ElementId) -> ElementId {
        self.join[x * self.n + y]
    }

    fn nm(&self, x: ElementId) -> &str {
        &self.names[x]
    }
}

fn lattice_laws<'v>(v: &'v LatticeView<'_>, distributive: bool) -> Vec<Law<'v>> {
    let mut laws = vec![
        Law::new("R1:meet-comm", 2, move |t| {
            let (x, y) = (t[0], t[1]);
            (v.m(x, y) != v.m(y, x)).then(|| {
                format!("{} ∧ {} = {} ≠ {} = {} ∧ {}", v.nm(x), v.nm(y), v.nm(v.m(x, y)),
                    v.nm(v.m(y, x)), v.nm(y), v.nm(x))
            })
        }),
        Law::new("R1:join-comm", 2, move |t| {
            let (x, y) = (t[0], t[1]);
            (v.j(x, y) != v.j(y, x)).then(|| {
                format!("{} ∨ {} = {} ≠ {} = {} ∨ {}", v.nm(x), v.nm(y), v.nm(v.j(x, y)),
                    v.nm(v.j(y, x)), v.nm(y), v.nm(x))
            })
        }),
        Law::new("R1:meet-assoc", 3, move |t| {
            let (x, y, z) = (t[0], t[1], t[2]);
            let l = v.m(v.m(x, y), z);
            let r = v.m(x, v.m(y, z));
            (l != r).then(|| format!("(x ∧ y) ∧ z = {} ≠ {} = x ∧ (y ∧ z)", v.nm(l), v.nm(r)))
        }),
        Law::new("R1:join-assoc", 3, move |t| {
            let (x, y, z) = (t[0], t[1], t[2]);
            let l = v.j(v.j(x, y), z);
            let r = v.j(x, v.j(y, z));
            (l != r).then(|| format!("(x ∨ y) ∨ z = {} ≠ {} = x ∨ (y ∨ z)", v.nm(l), v.nm(r)))
        }),
        Law::new("R1:idempotent", 1, move |t| {
            let x = t[0];
            (v.m(x, x) != x || v.j(x, x) != x).then(|| {
                format!("{0} ∧ {0} = {1}, {0} ∨ {0} = {2}", v.nm(x), v.nm(v.m(x, x)), v.nm(v.j(x, x)))
            })
        }),
        Law::new("R1:absorption", 2, move |t| {
            let (x, y) = (t[0], t[1]);
            let a = v.m(x, v.j(x, y));
            let b = v.j(x, v.m(x, y));
            (a != x || b != x).then(|| {
                format!("x ∧ (x ∨ y) = {}, x ∨ (x ∧ y) = {}, x = {}", v.nm(a), v.nm(b), v.nm(x))
            })
        }),
        Law::new("R1:bounds", 1, move |t| {
            let x = t[0];
            (!v.order.leq(v.zero, x) || !v.order.leq(x, v.one)).then(|| {
                format!("0 ≤ {0} ≤ 1 fails (0 = {1}, 1 = {2})", v.nm(x), v.nm(v.zero), v.nm(v.one))
            })
        }),
    ];
    if distributive {
        laws.push(Law::new("R1:distrib-meet", 3, move |t| {
            let (x, y, z) = (t[0], t[1], t[2]);
            let l = v.m(x, v.j(y, z));
            let r = v.j(v.m(x, y), v.m(x, z));
            (l != r).then(|| format!("x ∧ (y ∨ z) = {} ≠ {} = (x ∧ y) ∨ (x ∧ z)", v.nm(l), v.nm(r)))
        }));
        laws.push(Law::new("R1:distrib-join", 3, move |t| {
            let (x, y, z) = (t[0], t[1], t[2]);
            let l = v.j(x, v.m(y, z));
            let r = v.m(v.j(x, y), v.j(x, z));
            (l != r).then(|| format!("x ∨ (y ∧ z) = {} ≠ {} = (x ∨ y) ∧ (x ∨ z)", v.nm(l), v.nm(r)))
        }));
    }
    laws
}

/// Checks commutativity, associativity, idempotence, absorption, bounds and
/// both distributive laws of `meet` and `join`.
pub fn validate_bounded_distributive_lattice(alg: &FiniteAlgebra) -> Result<Report> {
    let v = LatticeView::new(alg)?;
    let report = run_laws("bounded-distributive-lattice", &lattice_laws(&v, true), v.n, v.names);
    Ok(report)
}

/// Lattice checks without distributivity, for involutive residuated lattices.
pub(crate) fn validate_bounded_lattice(alg: &FiniteAlgebra) -> Result<Report> {
    let v = LatticeView::new(alg)?;
    let report = run_laws("bounded-lattice", &lattice_laws(&v, false), v.n, v.names);
    Ok(report)
}

/// Monoid laws for the binary operation `op` with unit `unit`.
pub(crate) fn monoid_laws<'a>(
    op_name: &'a str,
    sym: &'a str,
    n: usize,
    names: &'a [String],
    op: &'a [ElementId],
    unit: ElementId,
) -> Vec<Law<'a>> {
    let f = move |x: usize, y: usize| op[x * n + y];
    let nm = move |x: usize| names[x].as_str();
    vec![
        Law::new(format!("R2:{op_name}-assoc"), 3, move |t| {
            let (x, y, z) = (t[0], t[1], t[2]);
            let l = f(f(x, y), z);
            let r = f(x, f(y, z));
            (l != r).then(|| {
                format!("({0} {sym} {1}) {sym} {2} = {3} ≠ {4} = {0} {sym} ({1} {sym} {2})",
                    nm(x), nm(y), nm(z), nm(l), nm(r))
            })
        }),
        Law::new(format!("R2:{op_name}-comm"), 2, move |t| {
            let (x, y) = (t[0], t[1]);
            (f(x, y) != f(y, x)).then(|| {
                format!("{0} {sym} {1} = {2} ≠ {3} = {1} {sym} {0}", nm(x), nm(y), nm(f(x, y)), nm(f(y, x)))
            })
        }),
        Law::new(format!("R2:{op_name}-unit"), 1, move |t| {
            let x = t[0];
            (f(x, unit) != x || f(unit, x) != x).then(|| {
                format!("{0} {sym} {1} = {2}", nm(x), nm(unit), nm(f(x, unit)))
            })
        }),
    ]
}

/// Associativity, commutativity and unit laws of `prod` with unit `1`.
pub fn validate_commutative_monoid(alg: &FiniteAlgebra) -> Result<Report> {
    let prod = alg.binary("prod")?;
    let one = alg.require_constant("1")?;
    let laws = monoid_laws("prod", "·", alg.size(), alg.elements(), &prod, one);
    Ok(run_laws("commutative-monoid", &laws, alg.size(), alg.elements()))
}

pub(crate) fn residuation_law<'a>(
    id: &str,
    sym: (&'a str, &'a str),
    n: usize,
    names: &'a [String],
    order: &'a OrderRelation,
    prod: &'a [ElementId],
    imp: &'a [ElementId],
) -> Law<'a> {
    let nm = move |x: usize| names[x].as_str();
    Law::new(id, 3, move |t| {
        let (x, y, z) = (t[0], t[1], t[2]);
        let xy = prod[x * n + y];
        let yz = imp[y * n + z];
        let lhs = order.leq(xy, z);
        let rhs = order.leq(x, yz);
        (lhs != rhs).then(|| {
            let (p, i) = sym;
            if lhs {
                format!("{0} {p} {1} = {3} ≤ {2} but {0} ≰ {4} = {1} {i} {2}", nm(x), nm(y), nm(z), nm(xy), nm(yz))
            } else {
                format!("{0} {p} {1} = {3} ≰ {2} but {0} ≤ {4} = {1} {i} {2}", nm(x), nm(y), nm(z), nm(xy), nm(yz))
            }
        })
    })
}

/// Checks `x·y ≤ z ⟺ x ≤ y→z` for all triples.
pub fn validate_residuation(alg: &FiniteAlgebra) -> Result<Report> {
    let order = derive_order(alg)?;
    let prod = alg.binary("prod")?;
    let imp = alg.binary("imp")?;
    let law = residuation_law("R3", ("·", "→"), alg.size(), alg.elements(), &order, &prod, &imp);
    let report = run_laws("residuation", &[law], alg.size(), alg.elements());
    Ok(report)
}

/// The join-preservation form of residuation: every `x ↦ x·y` preserves
/// finite joins (including the empty one), and `y → z` is the greatest `x`
/// with `x·y ≤ z`.
pub fn residuated_by_joins(alg: &FiniteAlgebra) -> Result<bool> {
    let order = derive_order(alg)?;
    let n = alg.size();
    let prod = alg.binary("prod")?;
    let imp = alg.binary("imp")?;
    let join = alg.binary("join")?;
    let zero = alg.require_constant("0")?;
    for y in 0..n {
        if prod[zero * n + y] != zero {
            return Ok(false);
        }
        for x1 in 0..n {
            for x2 in 0..n {
                let lhs = prod[join[x1 * n + x2] * n + y];
                let rhs = join[prod[x1 * n + y] * n + prod[x2 * n + y]];
                if lhs != rhs {
                    return Ok(false);
                }
            }
        }
        for z in 0..n {
            let greatest = order.greatest(|x| order.leq(prod[x * n + y], z));
            if greatest != Some(imp[y * n + z]) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Runs the fixed pipeline lattice → monoid → residuation → derived laws.
/// Later stages are skipped when an earlier stage fails.
pub fn validate_icrdl(alg: &FiniteAlgebra) -> Result<Report> {
    let mut report = Report::new("icrdl");
    let lattice = validate_bounded_distributive_lattice(alg)?;
    let ok = lattice.all_pass();
    report.extend(lattice);
    if !ok {
        report.note("skipped monoid, residuation and derived laws after lattice failure");
        return Ok(report);
    }
    let monoid = validate_commutative_monoid(alg)?;
    let ok = monoid.all_pass();
    report.extend(monoid);
    if !ok {
        report.note("skipped residuation and derived laws after monoid failure");
        return Ok(report);
    }
    let res = validate_residuation(alg)?;
    let ok = res.all_pass();
    report.extend(res);
    if !ok {
        report.note("skipped derived laws after residuation failure");
        return Ok(report);
    }
    report.push(check_neg_table(alg)?);
    let l = Icrdl::from_validated(alg.clone())?;
    report.extend(check_derived_icrdl_laws(&l));
    if alg.size() == 1 {
        report.note("degenerate: one-element algebra (0 = 1)");
    }
    Ok(report)
}

/// A user-supplied `neg` table must agree with `x → 0`.
fn check_neg_table(alg: &FiniteAlgebra) -> Result<Check> {
    let Some(neg) = alg.operation("neg") else {
        return Ok(Check::passed("neg-table"));
    };
    let zero = alg.require_constant("0")?;
    let n = alg.size();
    let imp = alg.binary("imp")?;
    for x in 0..n {
        let derived = imp[x * n + zero];
        let given = neg.apply(&[x]);
        if given != derived {
            let name = alg.element_name(x).to_string();
            return Ok(Check::failed(
                "neg-table",
                vec![x],
                vec![name.clone()],
                format!(
                    "neg({name}) = {} but {name} → 0 = {}",
                    alg.element_name(given),
                    alg.element_name(derived)
                ),
            ));
        }
    }
    Ok(Check::passed("neg-table"))
}

/// A validated ICRDL-algebra with its tables cached densely.
#[derive(Clone, Debug)]
pub struct Icrdl {
    alg: FiniteAlgebra,
    order: OrderRelation,
    n: usize,
    meet: Vec<ElementId>,
    join: Vec<ElementId>,
    prod: Vec<ElementId>,
    imp: Vec<ElementId>,
    zero: ElementId,
    one: ElementId,
}

impl Icrdl {
    /// Validates `alg` and returns the cached structure. Axiom failures come
    /// back as [`Error::Invalid`]; failures of the derived laws, which follow
    /// from the axioms, as [`Error::Violation`].
    pub fn new(alg: FiniteAlgebra) -> Result<Self> {
        let report = validate_icrdl(&alg)?;
        if report.has_violation() {
            return Err(Error::violation(format!(
                "derived ICRDL law failed: {}",
                report.first_failure().unwrap_or("?")
            )));
        }
        if !report.all_pass() {
            return Err(Error::invalid(report));
        }
        Icrdl::from_validated(alg)
    }

    /// Caches tables without re-running the axiom suite.
    pub(crate) fn from_validated(alg: FiniteAlgebra) -> Result<Self> {
        let order = derive_order(&alg)?;
        Ok(Icrdl {
            n: alg.size(),
            meet: alg.binary("meet")?,
            join: alg.binary("join")?,
            prod: alg.binary("prod")?,
            imp: alg.binary("imp")?,
            zero: alg.require_constant("0")?,
            one: alg.require_constant("1")?,
            order,
            alg,
        })
    }

    pub fn algebra(&self) -> &FiniteAlgebra {
        &self.alg
    }

    pub fn order(&self) -> &OrderRelation {
        &self.order
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn name(&self, x: ElementId) -> &str {
        self.alg.element_name(x)
    }

    pub fn names(&self) -> &[String] {
        self.alg.elements()
    }

    #[inline]
    pub fn meet(&self, x: ElementId, y: ElementId) -> ElementId {
        self.meet[x * self.n + y]
    }

    #[inline]
    pub fn join(&self, x: ElementId, y: ElementId) -> ElementId {
        self.join[x * self.n + y]
    }

    #[inline]
    pub fn prod(&self, x: ElementId, y: ElementId) -> ElementId {
        self.prod[x * self.n + y]
    }

    #[inline]
    pub fn imp(&self, x: ElementId, y: ElementId) -> ElementId {
        self.imp[x * self.n + y]
    }

    /// `¬x = x → 0`.
    #[inline]
    pub fn neg(&self, x: ElementId) -> ElementId {
        self.imp(x, self.zero)
    }

    #[inline]
    pub fn leq(&self, x: ElementId, y: ElementId) -> bool {
        self.order.leq(x, y)
    }

    pub fn zero(&self) -> ElementId {
        self.zero
    }

    pub fn one(&self) -> ElementId {
        self.one
    }

    pub fn is_degenerate(&self) -> bool {
        self.n == 1
    }

    /// The first `x` with `x ∧ ¬x ≠ 0`, if any.
    pub fn pseudocomplement_witness(&self) -> Option<ElementId> {
        (0..self.n).find(|&x| self.meet(x, self.neg(x)) != self.zero)
    }

    pub fn is_pseudocomplemented(&self) -> bool {
        self.pseudocomplement_witness().is_none()
    }

    /// Elements of the form `¬¬a`, in ambient order.
    pub fn regular_elements(&self) -> Vec<ElementId> {
        (0..self.n).filter(|&x| self.neg(self.neg(x)) == x).collect()
    }

    /// Builds `Reg(L)` with `x ⋆_r y = ¬¬(x ⋆ y)`. The result is validated
    /// as an ICRDL; a failure contradicts the theory and is a violation.
    pub fn regular_algebra(&self) -> Result<RegularAlgebra> {
        let members = self.regular_elements();
        let index = |x: ElementId| members.iter().position(|&m| m == x);
        let names: Vec<String> = members.iter().map(|&m| self.name(m).to_string()).collect();
        let mut alg = FiniteAlgebra::new(format!("reg({})", self.alg.name()), names)?;
        let k = members.len();
        let nn = |x: ElementId| self.neg(self.neg(x));
        let mut tables = Vec::new();
        for (name, op) in [
            ("meet", Self::meet as fn(&Self, ElementId, ElementId) -> ElementId),
            ("join", Self::join),
            ("prod", Self::prod),
            ("imp", Self::imp),
        ] {
            let mut entries = Vec::with_capacity(k * k);
            for &x in &members {
                for &y in &members {
                    let r = nn(op(self, x, y));
                    entries.push(index(r).ok_or_else(|| {
                        Error::violation(format!("¬¬ of {} is not regular", self.name(r)))
                    })?);
                }
            }
            tables.push(OperationTable::new(name, 2, k, entries)?);
        }
        for t in tables {
            alg.add_operation(t)?;
        }
        let zero = index(self.zero).ok_or_else(|| Error::violation("0 is not regular"))?;
        let one = index(self.one).ok_or_else(|| Error::violation("1 is not regular"))?;
        alg.set_constant("0", zero);
        alg.set_constant("1", one);
        let algebra = match Icrdl::new(alg) {
            Ok(a) => a,
            Err(Error::Invalid(r)) => {
                return Err(Error::violation(format!(
                    "Reg(L) is not an ICRDL: {}",
                    r.first_failure().unwrap_or("?")
                )))
            }
            Err(e) => return Err(e),
        };
        Ok(RegularAlgebra { algebra, embedding: members })
    }

    /// Checks whether every element satisfies `x ∨ ¬x = 1` and `x ∧ ¬x = 0`.
    pub fn is_boolean(&self) -> bool {
        (0..self.n).all(|x| {
            self.join(x, self.neg(x)) == self.one && self.meet(x, self.neg(x)) == self.zero
        })
    }
}

/// `Reg(L)` together with the positions of its elements in `L`.
#[derive(Clone, Debug)]
pub struct RegularAlgebra {
    pub algebra: Icrdl,
    pub embedding: Vec<ElementId>,
}

impl RegularAlgebra {
    pub fn index_of(&self, x: ElementId) -> Option<ElementId> {
        self.embedding.iter().position(|&m| m == x)
    }
}

/// The seventeen laws every ICRDL satisfies, as a sanity suite. Each check is
/// marked as a theorem, so a failure is a violation.
pub fn check_derived_icrdl_laws(l: &Icrdl) -> Report {
    let laws = derived_laws(l);
    run_laws("icrdl-derived", &laws, l.size(), l.names())
}

pub(crate) fn derived_laws(l: &Icrdl) -> Vec<Law<'_>> {
    let nm = move |x: usize| l.name(x);
    let neg = move |x| l.neg(x);
    let laws = vec![
        Law::new("RL1", 1, move |t| {
            let x = t[0];
            (l.imp(l.one(), x) != x).then(|| format!("1 → {} = {}", nm(x), nm(l.imp(l.one(), x))))
        }),
        Law::new("RL2", 2, move |t| {
            let (x, y) = (t[0], t[1]);
            let p = l.prod(x, y);
            (!l.leq(p, x) || !l.leq(p, y))
                .then(|| format!("{} · {} = {} is not below both", nm(x), nm(y), nm(p)))
        }),
        Law::new("RL3", 2, move |t| {
            let (x, y) = (t[0], t[1]);
            (!l.leq(y, l.imp(x, y))).then(|| not_leq(nm(y), format!("{} → {}", nm(x), nm(y))))
        }),
        Law::new("RL4", 2, move |t| {
            let (x, y) = (t[0], t[1]);
            (l.leq(x, y) != (l.imp(x, y) == l.one())).then(|| {
                format!("{} ≤ {} is {} but {0} → {1} = {}", nm(x), nm(y), l.leq(x, y), nm(l.imp(x, y)))
            })
        }),
        Law::new("RL5", 3, move |t| {
            let (x, y, z) = (t[0], t[1], t[2]);
            let lhs = l.imp(x, y);
            let rhs = l.imp(l.prod(x, z), l.prod(y, z));
            (!l.leq(lhs, rhs)).then(|| not_leq(nm(lhs), nm(rhs)))
        }),
        Law::new("RL6", 3, move |t| {
            let (x, y, z) = (t[0], t[1], t[2]);
            (l.leq(x, y) && !l.leq(l.prod(x, z), l.prod(y, z)))
                .then(|| not_leq(nm(l.prod(x, z)), nm(l.prod(y, z))))
        }),
        Law::new("RL7", 3, move |t| {
            let (x, y, z) = (t[0], t[1], t[2]);
            let bad = l.leq(x, y)
                && (!l.leq(l.imp(z, x), l.imp(z, y)) || !l.leq(l.imp(y, z), l.imp(x, z)));
            bad.then(|| format!("monotonicity of → fails at {}, {}, {}", nm(x), nm(y), nm(z)))
        }),
        Law::new("RL8", 3, move |t| {
            let (x, y, z) = (t[0], t[1], t[2]);
            let lhs = l.imp(x, l.imp(y, z));
            let rhs = l.imp(l.prod(x, y), z);
            (lhs != rhs).then(|| format!("x → (y → z) = {} ≠ {} = (x · y) → z", nm(lhs), nm(rhs)))
        }),
        Law::new("RL9", 3, move |t| {
            let (x, y, z) = (t[0], t[1], t[2]);
            let lhs = l.imp(l.join(x, y), z);
            let rhs = l.meet(l.imp(x, z), l.imp(y, z));
            (lhs != rhs).then(|| format!("(x ∨ y) → z = {} ≠ {} = (x → z) ∧ (y → z)", nm(lhs), nm(rhs)))
        }),
        Law::new("NEG1", 2, move |t| {
            let (x, y) = (t[0], t[1]);
            (l.leq(x, y) && !l.leq(neg(y), neg(x))).then(|| not_leq(format!("¬{}", nm(y)), format!("¬{}", nm(x))))
        }),
        Law::new("NEG2", 1, move |t| {
            let x = t[0];
            (!l.leq(x, neg(neg(x)))).then(|| not_leq(nm(x), format!("¬¬{}", nm(x))))
        }),
        Law::new("NEG3", 1, move |t| {
            let x = t[0];
            (neg(neg(neg(x))) != neg(x)).then(|| format!("¬¬¬{0} = {1} ≠ {2} = ¬{0}", nm(x), nm(neg(neg(neg(x)))), nm(neg(x))))
        }),
        Law::new("NEG4", 0, move |_| {
            (neg(l.one()) != l.zero() || neg(l.zero()) != l.one())
                .then(|| format!("¬1 = {}, ¬0 = {}", nm(neg(l.one())), nm(neg(l.zero()))))
        }),
        Law::new("NEG5", 1, move |t| {
            let x = t[0];
            (l.prod(x, neg(x)) != l.zero()).then(|| format!("{0} · ¬{0} = {1}", nm(x), nm(l.prod(x, neg(x)))))
        }),
        Law::new("NEG6", 2, move |t| {
            let (x, y) = (t[0], t[1]);
            let lhs = l.imp(x, y);
            let rhs = l.imp(neg(y), neg(x));
            (!l.leq(lhs, rhs)).then(|| not_leq(nm(lhs), nm(rhs)))
        }),
        Law::new("NEG7", 2, move |t| {
            let (x, y) = (t[0], t[1]);
            let a = neg(l.join(x, y));
            let b = neg(l.join(neg(neg(x)), neg(neg(y))));
            let c = l.meet(neg(x), neg(y));
            (a != b || b != c).then(|| format!("¬(x ∨ y) = {}, ¬(¬¬x ∨ ¬¬y) = {}, ¬x ∧ ¬y = {}", nm(a), nm(b), nm(c)))
        }),
        Law::new("NEG8", 2, move |t| {
            let (x, y) = (t[0], t[1]);
            let a = neg(neg(l.meet(x, y)));
            let b = l.meet(neg(neg(x)), neg(neg(y)));
            (a != b).then(|| format!("¬¬(x ∧ y) = {} ≠ {} = ¬¬x ∧ ¬¬y", nm(a), nm(b)))
        }),
    ];
    laws.into_iter().map(Law::theorem).collect()
}

/// Compares the equation `¬¬(¬¬x → x) = 1` with the statement that
/// `x ↦ ¬¬x` is a homomorphism of `L` onto `Reg(L)`.
pub fn check_double_negation_hom(l: &Icrdl) -> Result<Report> {
    let mut report = Report::new("double-negation");
    let nn = |x| l.neg(l.neg(x));
    let eq_law = Law::new("DN-eq", 1, |t| {
        let x = t[0];
        let v = nn(l.imp(nn(x), x));
        (v != l.one()).then(|| format!("¬¬(¬¬{0} → {0}) = {1}", l.name(x), l.name(v)))
    });
    let eq = eq_law.check(l.size(), l.names());
    let reg = l.regular_algebra()?;
    let r = &reg.algebra;
    let to_reg = |x: ElementId| reg.index_of(nn(x)).expect("¬¬x is regular");
    let mut hom = Check::passed("DN-hom");
    'outer: for x in 0..l.size() {
        for y in 0..l.size() {
            for (sym, amb, rg) in [
                ("∨", l.join(x, y), r.join(to_reg(x), to_reg(y))),
                ("∧", l.meet(x, y), r.meet(to_reg(x), to_reg(y))),
                ("·", l.prod(x, y), r.prod(to_reg(x), to_reg(y))),
                ("→", l.imp(x, y), r.imp(to_reg(x), to_reg(y))),
            ] {
                if to_reg(amb) != rg {
                    hom = Check::failed(
                        "DN-hom",
                        vec![x, y],
                        vec![l.name(x).into(), l.name(y).into()],
                        format!(
                            "¬¬({0} {sym} {1}) = {2} ≠ {3} = ¬¬{0} {sym}_r ¬¬{1}",
                            l.name(x),
                            l.name(y),
                            r.name(to_reg(amb)),
                            r.name(rg)
                        ),
                    );
                    break 'outer;
                }
            }
        }
    }
    let agree = eq.pass == hom.pass;
    report.push(eq);
    report.push(hom);
    report.push(
        Check::verdict(
            "DN-agree",
            agree,
            (!agree).then(|| "the equation and the homomorphism property disagree".to_string()),
        )
        .as_theorem(),
    );
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::load_algebra;
    use crate::fixtures;

    fn load(src: &str) -> FiniteAlgebra {
        load_algebra(src).unwrap()
    }

    #[test]
    fn fixtures_are_icrdl() {
        for src in [fixtures::REMARK34, fixtures::REMARK35, fixtures::BOOL2] {
            let r = validate_icrdl(&load(src)).unwrap();
            assert!(r.all_pass(), "{r}");
        }
    }

    #[test]
    fn negation_values() {
        let l = Icrdl::new(load(fixtures::REMARK35)).unwrap();
        let id = |s| l.algebra().index_of(s).unwrap();
        assert_eq!(l.neg(id("a")), id("b"));
        assert_eq!(l.neg(l.one()), l.zero());
        assert_eq!(l.neg(l.zero()), l.one());
        let m = Icrdl::new(load(fixtures::REMARK34)).unwrap();
        let c = m.algebra().index_of("c").unwrap();
        assert_eq!(m.neg(c), m.zero());
    }

    #[test]
    fn product_values_of_the_chain() {
        let l = Icrdl::new(load(fixtures::REMARK35)).unwrap();
        let id = |s| l.algebra().index_of(s).unwrap();
        assert_eq!(l.prod(id("b"), id("b")), id("a"));
        assert_eq!(l.prod(id("a"), id("a")), id("0"));
    }

    #[test]
    fn m3_fails_distributivity() {
        let src = "universe 0 p q r 1\nconst 0 = 0\nconst 1 = 1\n\
            op meet 2\n0 0 0 0 0\n0 p 0 0 p\n0 0 q 0 q\n0 0 0 r r\n0 p q r 1\n\
            op join 2\n0 p q r 1\np p 1 1 1\nq 1 q 1 1\nr 1 1 r 1\n1 1 1 1 1\n";
        let r = validate_bounded_distributive_lattice(&load(src)).unwrap();
        let c = r.get("R1:distrib-meet").unwrap();
        assert!(!c.pass);
        assert_eq!(c.witness, vec!["p", "q", "r"]);
    }

    #[test]
    fn mutated_product_is_caught() {
        let mut a = load(fixtures::REMARK35);
        let b = a.index_of("b").unwrap();
        let mut prod = a.binary("prod").unwrap();
        prod[b * 4 + b] = b;
        a.set_operation(OperationTable::new("prod", 2, 4, prod).unwrap());
        let r = validate_icrdl(&a).unwrap();
        assert!(!r.all_pass());
        let first = r.failures().next().unwrap();
        assert!(first.axiom.starts_with("R2") || first.axiom == "R3", "{r}");
    }

    #[test]
    fn broken_residuum_witness() {
        let mut a = load(fixtures::REMARK35);
        let (one, x) = (a.index_of("1").unwrap(), a.index_of("a").unwrap());
        let mut imp = a.binary("imp").unwrap();
        imp[one * 4 + x] = one;
        a.set_operation(OperationTable::new("imp", 2, 4, imp).unwrap());
        let r = validate_residuation(&a).unwrap();
        let c = r.get("R3").unwrap();
        assert!(!c.pass);
        // (1,1,a) is falsified too, but (b,1,a) precedes it in index order.
        assert_eq!(c.witness, vec!["b", "1", "a"]);
        let o = derive_order(&a).unwrap();
        let prod = a.binary("prod").unwrap();
        let imp = a.binary("imp").unwrap();
        for [p, q, z] in [[2, one, x], [one, one, x]] {
            assert_ne!(o.leq(prod[p * 4 + q], z), o.leq(p, imp[q * 4 + z]));
        }
        assert!(!residuated_by_joins(&a).unwrap());
    }

    #[test]
    fn regular_algebra_of_chain() {
        let l = Icrdl::new(load(fixtures::REMARK35)).unwrap();
        let reg = l.regular_algebra().unwrap();
        // ¬a = b and ¬b = a, so every element is regular.
        assert_eq!(reg.algebra.names(), ["0", "a", "b", "1"]);
        let a = l.algebra().index_of("a").unwrap();
        assert_eq!(l.name(l.neg(a)), "b");
        assert_eq!(l.name(l.neg(l.neg(a))), "a");
    }

    #[test]
    fn regular_algebra_of_boolean_is_whole() {
        let l = Icrdl::new(load(fixtures::BOOL2)).unwrap();
        assert_eq!(l.regular_algebra().unwrap().algebra.size(), 2);
        assert!(l.is_boolean());
    }

    #[test]
    fn regular_implication_is_ambient() {
        let l = Icrdl::new(load(fixtures::REMARK34)).unwrap();
        let reg = l.regular_algebra().unwrap();
        for (i, &x) in reg.embedding.iter().enumerate() {
            for (j, &y) in reg.embedding.iter().enumerate() {
                let r = reg.embedding[reg.algebra.imp(i, j)];
                assert_eq!(r, l.imp(x, y));
            }
        }
    }

    #[test]
    fn pseudocomplement() {
        let l = Icrdl::new(load(fixtures::REMARK35)).unwrap();
        assert_eq!(l.pseudocomplement_witness().map(|w| l.name(w)), Some("a"));
        let h = Icrdl::new(load(fixtures::REMARK34)).unwrap();
        assert!(h.is_pseudocomplemented());
    }

    #[test]
    fn double_negation_sides_agree_on_fixtures() {
        for src in [fixtures::REMARK34, fixtures::REMARK35, fixtures::BOOL2] {
            let l = Icrdl::new(load(src)).unwrap();
            let r = check_double_negation_hom(&l).unwrap();
            assert!(r.passes("DN-agree"), "{r}");
        }
    }

    #[test]
    fn degenerate_algebra_is_accepted() {
        let src = "universe e\nconst 0 = e\nconst 1 = e\nop meet 2\ne\nop join 2\ne\nop prod 2\ne\nop imp 2\ne\n";
        let r = validate_icrdl(&load(src)).unwrap();
        assert!(r.all_pass());
        assert!(r.notes.iter().any(|n| n.contains("degenerate")));
    }

    #[test]
    fn inconsistent_neg_table_is_rejected() {
        let mut src = fixtures::BOOL2.to_string();
        src.push_str("op neg 1\n0 1\n");
        let r = validate_icrdl(&load(&src)).unwrap();
        assert!(!r.passes("neg-table"));
        src = fixtures::BOOL2.to_string();
        src.push_str("op neg 1\n1 0\n");
        assert!(validate_icrdl(&load(&src)).unwrap().all_pass());
    }
}

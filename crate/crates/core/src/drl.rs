//! Centered integral involutive residuated lattices with the Leibniz
//! condition, and tense operators on them.

use crate::algebra::{ElementId, FiniteAlgebra, OperationTable};
use crate::error::{Error, Result};
use crate::icrdl::{monoid_laws, residuation_law, validate_bounded_lattice};
use crate::order::{derive_order, OrderRelation};
use crate::report::{not_leq, run_laws, Check, Law, Report};
use crate::tense::{at_constant, two_sided, TenseOps};

/// Cached tables of a DRL candidate. `dimp` is always derived as
/// `x ⇒ y = ∼(x ∗ ∼y)`.
#[derive(Clone, Debug)]
pub struct Drl {
    alg: FiniteAlgebra,
    order: OrderRelation,
    n: usize,
    meet: Vec<ElementId>,
    join: Vec<ElementId>,
    star: Vec<ElementId>,
    dimp: Vec<ElementId>,
    tilde: Vec<ElementId>,
    zero: ElementId,
    one: ElementId,
    c: ElementId,
}

impl Drl {
    /// Validates `alg` as a DRL-algebra.
    pub fn new(alg: FiniteAlgebra) -> Result<Self> {
        let report = validate_drl(&alg)?;
        if report.has_violation() {
            return Err(Error::violation(format!(
                "DRL identity failed: {}",
                report.first_failure().unwrap_or("?")
            )));
        }
        if !report.all_pass() {
            return Err(Error::invalid(report));
        }
        Drl::view(alg)
    }

    /// Caches the tables without checking any axiom.
    pub(crate) fn view(alg: FiniteAlgebra) -> Result<Self> {
        let order = derive_order(&alg)?;
        let n = alg.size();
        let star = alg.binary("star")?;
        let tilde = alg.unary("tilde")?;
        let mut dimp = vec![0; n * n];
        for x in 0..n {
            for y in 0..n {
                dimp[x * n + y] = tilde[star[x * n + tilde[y]]];
            }
        }
        Ok(Drl {
            n,
            meet: alg.binary("meet")?,
            join: alg.binary("join")?,
            zero: alg.require_constant("0")?,
            one: alg.require_constant("1")?,
            c: alg.require_constant("c")?,
            order,
            star,
            dimp,
            tilde,
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
    pub fn leq(&self, x: ElementId, y: ElementId) -> bool {
        self.order.leq(x, y)
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
    pub fn star(&self, x: ElementId, y: ElementId) -> ElementId {
        self.star[x * self.n + y]
    }
    #[inline]
    pub fn dimp(&self, x: ElementId, y: ElementId) -> ElementId {
        self.dimp[x * self.n + y]
    }
    #[inline]
    pub fn tilde(&self, x: ElementId) -> ElementId {
        self.tilde[x]
    }
    pub fn zero(&self) -> ElementId {
        self.zero
    }
    pub fn one(&self) -> ElementId {
        self.one
    }
    pub fn c(&self) -> ElementId {
        self.c
    }

    pub fn dimp_table(&self) -> &[ElementId] {
        &self.dimp
    }

    /// Elements above `c`, in ambient order.
    pub fn center_elements(&self) -> Vec<ElementId> {
        (0..self.n).filter(|&x| self.leq(self.c, x)).collect()
    }
}

/// Checks the lattice, monoid and residuation axioms with `⇒` derived, that
/// `∼` is an involutive dual lattice automorphism fixing `c`, and the Leibniz
/// condition. When everything passes, both technical identities are checked
/// as theorems.
pub fn validate_drl(alg: &FiniteAlgebra) -> Result<Report> {
    let mut report = validate_bounded_lattice(alg)?;
    report.kind = "drl".into();
    if !report.all_pass() {
        report.note("skipped remaining DRL axioms after lattice failure");
        return Ok(report);
    }
    let d = Drl::view(alg.clone())?;
    let names = d.names();
    let n = d.n;
    let mut laws = monoid_laws("star", "∗", n, names, &d.star, d.one);
    laws.push(residuation_law("R3", ("∗", "⇒"), n, names, &d.order, &d.star, &d.dimp));
    let dr = &d;
    laws.push(Law::new("involution", 1, move |t| {
        let x = t[0];
        (dr.tilde(dr.tilde(x)) != x).then(|| format!("∼∼{} = {}", dr.name(x), dr.name(dr.tilde(dr.tilde(x)))))
    }));
    laws.push(Law::new("dual-automorphism", 2, move |t| {
        let (x, y) = (t[0], t[1]);
        let a = dr.tilde(dr.meet(x, y));
        let b = dr.join(dr.tilde(x), dr.tilde(y));
        let c = dr.tilde(dr.join(x, y));
        let e = dr.meet(dr.tilde(x), dr.tilde(y));
        (a != b || c != e).then(|| {
            format!("∼(x ∧ y) = {}, ∼x ∨ ∼y = {}, ∼(x ∨ y) = {}, ∼x ∧ ∼y = {}",
                dr.name(a), dr.name(b), dr.name(c), dr.name(e))
        })
    }));
    laws.push(Law::new("tilde-c", 1, move |t| {
        (t[0] == dr.c && dr.tilde(dr.c) != dr.c).then(|| format!("∼c = {}", dr.name(dr.tilde(dr.c))))
    }));
    laws.push(Law::new("LC", 2, move |t| {
        let (x, y) = (t[0], t[1]);
        let c = dr.c;
        let lhs = dr.meet(dr.star(x, y), c);
        let rhs = dr.join(dr.star(dr.meet(x, c), y), dr.star(x, dr.meet(y, c)));
        (lhs != rhs).then(|| {
            format!("({0} ∗ {1}) ∧ c = {2} ≠ {3} = (({0} ∧ c) ∗ {1}) ∨ ({0} ∗ ({1} ∧ c))",
                dr.name(x), dr.name(y), dr.name(lhs), dr.name(rhs))
        })
    }));
    let axioms = run_laws("drl", &laws, n, names);
    let ok = axioms.all_pass();
    report.extend(axioms);
    if let Some(table) = alg.operation("dimp") {
        report.push(table_matches("dimp-table", "⇒", table, &d.dimp, n, names));
    }
    if ok {
        report.extend(check_lemma_technical_drl(&d));
    } else {
        report.note("skipped technical identities after axiom failure");
    }
    Ok(report)
}

/// Compares a supplied table with the derived one.
fn table_matches(
    id: &str,
    sym: &str,
    table: &OperationTable,
    derived: &[ElementId],
    n: usize,
    names: &[String],
) -> Check {
    let pos = table.entries().iter().zip(derived).position(|(a, b)| a != b);
    match pos {
        None => Check::passed(id),
        Some(i) => {
            let args: Vec<ElementId> = if table.arity() == 2 { vec![i / n, i % n] } else { vec![i] };
            let shown: Vec<String> = args.iter().map(|&a| names[a].clone()).collect();
            let detail = format!(
                "table gives {sym}({}) = {} but the derived value is {}",
                shown.join(", "),
                names[table.entries()[i]],
                names[derived[i]]
            );
            Check::failed(id, args, shown, detail)
        }
    }
}

/// The two identities every DRL-algebra satisfies:
/// `[(x∨c)∗(y∨c)]∨c = (x∗y)∨c` and
/// `∼((x∨c)∗∼(∼y∨c)) ∧ ∼((y∨c)∗∼(∼x∨c)) = ∼(x∗y)∨c`.
pub fn check_lemma_technical_drl(d: &Drl) -> Report {
    let c = d.c;
    let laws = vec![
        Law::new("CJ1", 2, move |t| {
            let (x, y) = (t[0], t[1]);
            let lhs = d.join(d.star(d.join(x, c), d.join(y, c)), c);
            let rhs = d.join(d.star(x, y), c);
            (lhs != rhs).then(|| format!("[(x∨c)∗(y∨c)]∨c = {} ≠ {} = (x∗y)∨c", d.name(lhs), d.name(rhs)))
        })
        .theorem(),
        Law::new("CJ2", 2, move |t| {
            let (x, y) = (t[0], t[1]);
            let left = d.tilde(d.star(d.join(x, c), d.tilde(d.join(d.tilde(y), c))));
            let right = d.tilde(d.star(d.join(y, c), d.tilde(d.join(d.tilde(x), c))));
            let lhs = d.meet(left, right);
            let rhs = d.join(d.tilde(d.star(x, y)), c);
            (lhs != rhs).then(|| format!("lhs = {} ≠ {} = ∼(x∗y)∨c", d.name(lhs), d.name(rhs)))
        })
        .theorem(),
    ];
    run_laws("drl-technical", &laws, d.size(), d.names())
}

/// A DRL-algebra with `G`, `H` satisfying t0–t5. `F` and `P` are derived.
#[derive(Clone, Debug)]
pub struct TenseDrl {
    drl: Drl,
    g: Vec<ElementId>,
    h: Vec<ElementId>,
    f: Vec<ElementId>,
    p: Vec<ElementId>,
}

impl TenseDrl {
    /// Validates the DRL axioms and t0–t5 (and the derived-table check for
    /// any supplied `F`/`P`).
    pub fn new(alg: FiniteAlgebra) -> Result<Self> {
        let report = validate_tense_drl(&alg)?;
        if report.has_violation() {
            return Err(Error::violation(format!(
                "tense DRL theorem failed: {}",
                report.first_failure().unwrap_or("?")
            )));
        }
        if !report.all_pass() {
            return Err(Error::invalid(report));
        }
        TenseDrl::from_parts_unchecked(Drl::view(alg)?)
    }

    pub(crate) fn from_parts_unchecked(drl: Drl) -> Result<Self> {
        let g = drl.algebra().unary("G")?;
        let h = drl.algebra().unary("H")?;
        let (f, p) = derived_fp(&drl, &g, &h);
        Ok(TenseDrl { drl, g, h, f, p })
    }

    pub fn drl(&self) -> &Drl {
        &self.drl
    }

    pub fn algebra(&self) -> &FiniteAlgebra {
        self.drl.algebra()
    }

    pub fn g(&self, x: ElementId) -> ElementId {
        self.g[x]
    }
    pub fn h(&self, x: ElementId) -> ElementId {
        self.h[x]
    }
    pub fn f(&self, x: ElementId) -> ElementId {
        self.f[x]
    }
    pub fn p(&self, x: ElementId) -> ElementId {
        self.p[x]
    }

    pub fn tables(&self) -> [&[ElementId]; 4] {
        [&self.g, &self.h, &self.f, &self.p]
    }
}

impl std::ops::Deref for TenseDrl {
    type Target = Drl;

    fn deref(&self) -> &Drl {
        &self.drl
    }
}

/// `F = ∼G∼` and `P = ∼H∼`.
pub fn derived_fp(d: &Drl, g: &[ElementId], h: &[ElementId]) -> (Vec<ElementId>, Vec<ElementId>) {
    let f = (0..d.size()).map(|x| d.tilde(g[d.tilde(x)])).collect();
    let p = (0..d.size()).map(|x| d.tilde(h[d.tilde(x)])).collect();
    (f, p)
}

fn tense_drl_axioms<'a>(d: &'a Drl, ops: TenseOps<'a>) -> Vec<Law<'a>> {
    vec![
        at_constant("t0", d.one(), d, ops, |d, o| {
            (o.g(d.one()) != d.one()).then(|| format!("{}(1) = {}", o.names[0], d.name(o.g(d.one()))))
        }),
        at_constant("t1", d.c(), d, ops, |d, o| {
            (o.g(d.c()) != d.c()).then(|| format!("{}(c) = {}", o.names[0], d.name(o.g(d.c()))))
        }),
        two_sided("t2", 2, d, ops, Box::new(|d: &Drl, o, t| {
            let lhs = o.g(d.meet(t[0], t[1]));
            let rhs = d.meet(o.g(t[0]), o.g(t[1]));
            (lhs != rhs).then(|| format!("{g}({} ∧ {}) = {} ≠ {} = {g}(x) ∧ {g}(y)",
                d.name(t[0]), d.name(t[1]), d.name(lhs), d.name(rhs), g = o.names[0]))
        })),
        two_sided("t3", 1, d, ops, Box::new(|d: &Drl, o, t| {
            let rhs = o.g(o.p(t[0]));
            (!d.leq(t[0], rhs)).then(|| format!("x ≤ {}{}(x): {}", o.names[0], o.names[3], not_leq(d.name(t[0]), d.name(rhs))))
        })),
        two_sided("t4", 2, d, ops, Box::new(|d: &Drl, o, t| {
            let lhs = o.g(d.join(t[0], t[1]));
            let rhs = d.join(o.g(t[0]), o.f(t[1]));
            (!d.leq(lhs, rhs)).then(|| format!("{g}(x ∨ y) ≤ {g}(x) ∨ {f}(y) at ({}, {}): {}",
                d.name(t[0]), d.name(t[1]), not_leq(d.name(lhs), d.name(rhs)), g = o.names[0], f = o.names[2]))
        })),
        t5_law("t5", d, ops),
    ]
}

fn t5_law<'a>(id: &str, d: &'a Drl, ops: TenseOps<'a>) -> Law<'a> {
    two_sided(id, 2, d, ops, Box::new(|d: &Drl, o, t| {
        let lhs = o.g(d.dimp(t[0], t[1]));
        let rhs = d.dimp(o.g(t[0]), o.g(t[1]));
        (!d.leq(lhs, rhs)).then(|| format!("{g}(x ⇒ y) ≤ {g}(x) ⇒ {g}(y) at ({}, {}): {}",
            d.name(t[0]), d.name(t[1]), not_leq(d.name(lhs), d.name(rhs)), g = o.names[0]))
    }))
}

fn derived_tense_drl_laws<'a>(d: &'a Drl, ops: TenseOps<'a>) -> Vec<Law<'a>> {
    let laws = vec![
        at_constant("c1", d.c(), d, ops, |d, o| {
            (o.f(d.c()) != d.c()).then(|| format!("{}(c) = {}", o.names[2], d.name(o.f(d.c()))))
        }),
        two_sided("c2", 1, d, ops, Box::new(|d: &Drl, o, t| {
            let lhs = o.g(d.join(t[0], d.c()));
            let rhs = d.join(o.g(t[0]), d.c());
            (lhs != rhs).then(|| format!("{g}({} ∨ c) = {} ≠ {} = {g}({0}) ∨ c", d.name(t[0]), d.name(lhs), d.name(rhs), g = o.names[0]))
        })),
        two_sided("c3", 1, d, ops, Box::new(|d: &Drl, o, t| {
            let lhs = o.f(d.meet(t[0], d.c()));
            let rhs = d.meet(o.f(t[0]), d.c());
            (lhs != rhs).then(|| format!("{f}({} ∧ c) = {} ≠ {} = {f}({0}) ∧ c", d.name(t[0]), d.name(lhs), d.name(rhs), f = o.names[2]))
        })),
    ];
    laws.into_iter().map(Law::theorem).collect()
}

/// Checks t0–t5 and, when they pass, c1–c3.
pub fn check_tense_drl(d: &Drl, g: &[ElementId], h: &[ElementId]) -> Report {
    let (f, p) = derived_fp(d, g, h);
    let ops = TenseOps::new(g, h, &f, &p);
    let mut report = run_laws("tense-drl", &tense_drl_axioms(d, ops), d.size(), d.names());
    if report.all_pass() {
        report.extend(run_laws("tense-drl-derived", &derived_tense_drl_laws(d, ops), d.size(), d.names()));
    }
    report
}

/// Validation of a tense DRL candidate: DRL axioms, derived-table checks for
/// any supplied `F`/`P`, t0–t5, c1–c3 and the t5–t8 comparison.
pub fn validate_tense_drl(alg: &FiniteAlgebra) -> Result<Report> {
    let mut report = validate_drl(alg)?;
    report.kind = "tense-drl".into();
    if !report.all_pass() {
        report.note("skipped tense axioms after DRL failure");
        return Ok(report);
    }
    let d = Drl::view(alg.clone())?;
    let g = alg.unary("G")?;
    let h = alg.unary("H")?;
    let (f, p) = derived_fp(&d, &g, &h);
    for (name, derived) in [("F", &f), ("P", &p)] {
        if let Some(table) = alg.operation(name) {
            report.push(table_matches(&format!("{name}-derived"), name, table, derived, d.size(), d.names()));
        }
    }
    let tense = check_tense_drl(&d, &g, &h);
    let ok = tense.all_pass();
    report.extend(tense);
    if ok {
        let eq = check_t5_equivalences(&d, &g, &h)?;
        report.extend(eq.report());
    }
    Ok(report)
}

/// Independent evaluations of t5 and its three reformulations. `t8` is the
/// reading whose past half ends in `P(x∗y)`; `t8_literal` ends in `F(x∗y)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct T5Equivalences {
    pub t5: bool,
    pub t6: bool,
    pub t7: bool,
    pub t8: bool,
    pub t8_literal: bool,
}

impl T5Equivalences {
    pub fn agree(&self) -> bool {
        self.t5 == self.t6 && self.t6 == self.t7 && self.t7 == self.t8
    }

    pub fn report(&self) -> Report {
        let mut r = Report::new("t5-equivalences");
        r.push(Check::verdict("t5", self.t5, None));
        r.push(Check::verdict("t6", self.t6, None));
        r.push(Check::verdict("t7", self.t7, None));
        r.push(Check::verdict("t8", self.t8, None));
        r.push(
            Check::verdict(
                "t5-t8-agree",
                self.agree(),
                (!self.agree()).then(|| format!("{self:?}")),
            )
            .as_theorem(),
        );
        r.note(format!(
            "t8 with F(x∗y) in the past half evaluates to {}",
            self.t8_literal
        ));
        r
    }
}

/// Evaluates t5, t6, t7, t8 independently. Requires t0–t4.
pub fn check_t5_equivalences(d: &Drl, g: &[ElementId], h: &[ElementId]) -> Result<T5Equivalences> {
    let (f, p) = derived_fp(d, g, h);
    let ops = TenseOps::new(g, h, &f, &p);
    let pre = run_laws("pre", &tense_drl_axioms(d, ops)[..5], d.size(), d.names());
    if !pre.all_pass() {
        return Err(Error::Precondition(format!(
            "t0–t4 must hold: {}",
            pre.first_failure().unwrap_or("?")
        )));
    }
    let n = d.size();
    let all = |pred: &dyn Fn(&TenseOps<'_>, ElementId, ElementId) -> bool| {
        [ops, ops.mirror()]
            .iter()
            .all(|o| (0..n).all(|x| (0..n).all(|y| pred(o, x, y))))
    };
    let t5 = all(&|o, x, y| d.leq(o.g(d.dimp(x, y)), d.dimp(o.g(x), o.g(y))));
    let t6 = all(&|o, x, y| d.leq(o.g(d.dimp(x, y)), d.dimp(o.f(x), o.f(y))));
    let t7 = all(&|o, x, y| {
        d.leq(d.star(o.g(x), o.f(d.tilde(y))), o.f(d.star(x, d.tilde(y))))
    });
    let t8 = all(&|o, x, y| d.leq(d.star(o.f(x), o.g(y)), o.f(d.star(x, y))));
    let t8_literal = (0..n).all(|x| {
        (0..n).all(|y| {
            d.leq(d.star(f[x], g[y]), f[d.star(x, y)])
                && d.leq(d.star(p[x], h[y]), f[d.star(x, y)])
        })
    });
    Ok(T5Equivalences { t5, t6, t7, t8, t8_literal })
}

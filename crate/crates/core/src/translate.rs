//! The 2-translation of tense DRL terms into pairs of tense ICRL terms, the
//! context `x·y ≈ 0`, and registry-level equational consequence.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::algebra::{ElementId, FiniteAlgebra};
use crate::error::{Error, Result};
use crate::kalman::{kalman, KalmanAlgebra};
use crate::report::{Check, Report};
use crate::tense::TenseIcrdl;
use crate::term::{Compiled, Equation, Interpretation, Signature, Symbol, Term, TermError};

/// A pair of tICRL terms, the image of a tDRL term.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PairTerm {
    pub first: Term,
    pub second: Term,
}

impl PairTerm {
    pub fn new(first: Term, second: Term) -> Self {
        PairTerm { first, second }
    }

    /// The two component equations of `self ≈ other`.
    pub fn equations(&self, other: &PairTerm) -> [Equation; 2] {
        [
            Equation::new(self.first.clone(), other.first.clone()),
            Equation::new(self.second.clone(), other.second.clone()),
        ]
    }
}

impl fmt::Display for PairTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.first, self.second)
    }
}

/// Name of the `i`-th component of a doubled variable.
pub fn component(var: &str, i: u8) -> String {
    format!("{var}.{i}")
}

/// Pattern variables of `τ(ψ)`: argument `j` contributes `xj.1` and `xj.2`.
pub fn pattern_vars(arity: usize) -> Vec<String> {
    (1..=arity)
        .flat_map(|j| [component(&format!("x{j}"), 1), component(&format!("x{j}"), 2)])
        .collect()
}

/// The translation table: each tDRL symbol becomes a pair of tICRL terms
/// over the doubled argument variables.
pub fn tau(s: Symbol) -> Result<PairTerm, TermError> {
    if Signature::Tdrl.symbol(s.name) != Some(s) {
        return Err(TermError::UnknownSymbol { pos: 0, symbol: s.name.into(), signature: "tDRL" });
    }
    let sig = Signature::Ticrl;
    let op = |name: &str, args: Vec<Term>| Term::app(sig.get(name), args);
    let k = |name: &str| Term::constant(sig.get(name));
    let x = |j: u8, i: u8| Term::var(component(&format!("x{j}"), i));
    let pair = |a, b| Ok(PairTerm::new(a, b));
    match s.name {
        "vee" => pair(op("vee", vec![x(1, 1), x(2, 1)]), op("wedge", vec![x(1, 2), x(2, 2)])),
        "wedge" => pair(op("wedge", vec![x(1, 1), x(2, 1)]), op("vee", vec![x(1, 2), x(2, 2)])),
        "star" => pair(
            op("prod", vec![x(1, 1), x(2, 1)]),
            op("wedge", vec![op("imp", vec![x(1, 1), x(2, 2)]), op("imp", vec![x(2, 1), x(1, 2)])]),
        ),
        "dimp" => pair(
            op("wedge", vec![op("imp", vec![x(1, 1), x(2, 1)]), op("imp", vec![x(2, 2), x(1, 2)])]),
            op("prod", vec![x(1, 1), x(2, 2)]),
        ),
        "tilde" => pair(x(1, 2), x(1, 1)),
        "G" => pair(op("G", vec![x(1, 1)]), op("F", vec![x(1, 2)])),
        "H" => pair(op("H", vec![x(1, 1)]), op("P", vec![x(1, 2)])),
        "F" => pair(op("F", vec![x(1, 1)]), op("G", vec![x(1, 2)])),
        "P" => pair(op("P", vec![x(1, 1)]), op("H", vec![x(1, 2)])),
        "c" => pair(k("0"), k("0")),
        "0" => pair(k("0"), k("1")),
        "1" => pair(k("1"), k("0")),
        other => unreachable!("tDRL symbol {other} has no translation row"),
    }
}

/// Recursive extension of [`tau`]: variables are doubled and each
/// application substitutes the translated arguments into its row.
pub fn tau_star(t: &Term) -> Result<PairTerm, TermError> {
    match t {
        Term::Var(x) => Ok(PairTerm::new(Term::var(component(x, 1)), Term::var(component(x, 2)))),
        Term::App(s, args) => {
            let row = tau(*s)?;
            let images = args.iter().map(tau_star).collect::<Result<Vec<_>, _>>()?;
            let names = pattern_vars(s.arity);
            let map: HashMap<&str, &Term> = names
                .iter()
                .zip(images.iter().flat_map(|p| [&p.first, &p.second]))
                .map(|(n, t)| (n.as_str(), t))
                .collect();
            Ok(PairTerm::new(row.first.substitute(&map), row.second.substitute(&map)))
        }
    }
}

/// Each tDRL equation becomes its two component equations.
pub fn tau_star_eqs(eqs: &[Equation]) -> Result<Vec<Equation>, TermError> {
    let mut out = Vec::with_capacity(2 * eqs.len());
    for e in eqs {
        out.extend(tau_star(&e.lhs)?.equations(&tau_star(&e.rhs)?));
    }
    Ok(out)
}

/// The context `x.1 · x.2 ≈ 0` for each of the given tDRL variables.
pub fn context_equations<'v>(vars: impl IntoIterator<Item = &'v String>) -> Vec<Equation> {
    let sig = Signature::Ticrl;
    vars.into_iter()
        .map(|x| {
            Equation::new(
                Term::app(sig.get("prod"), vec![Term::var(component(x, 1)), Term::var(component(x, 2))]),
                Term::constant(sig.get("0")),
            )
        })
        .collect()
}

/// Whether `0 · 1 = 0`, i.e. the constant pair `(0, 1)` lies in the context.
pub fn context_holds_at_constants(alg: &FiniteAlgebra) -> Result<bool, TermError> {
    let i = Interpretation::new(Signature::Ticrl, alg)?;
    let sig = Signature::Ticrl;
    let zero = i.apply(&sig.get("0"), &[])?;
    let one = i.apply(&sig.get("1"), &[])?;
    Ok(i.apply(&sig.get("prod"), &[zero, one])? == zero)
}

/// A premise set with goals over one signature.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Query {
    pub signature: Signature,
    pub premises: Vec<Equation>,
    /// All goals must follow. Query files usually have one.
    pub goals: Vec<Equation>,
}

impl Query {
    /// Translates a tDRL query into the equivalent tICRL query, with the
    /// context for every variable added to the premises.
    pub fn translate(&self) -> Result<Query> {
        if self.signature != Signature::Tdrl {
            return Err(TermError::SignatureMismatch(format!("only tDRL queries translate, got {}", self.signature)).into());
        }
        let mut vars = std::collections::BTreeSet::new();
        for e in self.premises.iter().chain(&self.goals) {
            vars.extend(e.vars());
        }
        let mut premises = tau_star_eqs(&self.premises)?;
        premises.extend(context_equations(&vars));
        Ok(Query { signature: Signature::Ticrl, premises, goals: tau_star_eqs(&self.goals)? })
    }

    pub fn to_source(&self) -> String {
        let mut s = format!("signature {}\n", self.signature);
        for e in &self.premises {
            s.push_str(&format!("assume {e}\n"));
        }
        for e in &self.goals {
            s.push_str(&format!("show {e}\n"));
        }
        s
    }
}

/// Parses a query file: a `signature` header, `assume` lines and `show`
/// lines. Blank lines and `#` comments are skipped.
pub fn parse_query(text: &str) -> Result<Query> {
    let mut signature = None;
    let mut premises = Vec::new();
    let mut goals = Vec::new();
    for (n, raw) in text.lines().enumerate() {
        let line_no = n + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (keyword, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
        let rest = rest.trim();
        let parse_err = |message: String| Error::Parse { line: line_no, message };
        match keyword {
            "signature" => {
                if signature.is_some() {
                    return Err(parse_err("second signature header".into()));
                }
                signature = Some(
                    Signature::from_name(rest)
                        .ok_or_else(|| parse_err(format!("unknown signature `{rest}`, expected tDRL or tICRL")))?,
                );
            }
            "assume" | "show" => {
                let sig = signature.ok_or_else(|| parse_err("`signature` header must come first".into()))?;
                let eq = crate::term::parse_equation(rest, sig).map_err(|e| parse_err(e.to_string()))?;
                if keyword == "assume" {
                    premises.push(eq);
                } else {
                    goals.push(eq);
                }
            }
            other => return Err(parse_err(format!("unknown keyword `{other}`"))),
        }
    }
    let signature = signature.ok_or_else(|| Error::Parse { line: 0, message: "missing `signature` header".into() })?;
    if goals.is_empty() {
        return Err(Error::Parse { line: 0, message: "missing `show` line".into() });
    }
    Ok(Query { signature, premises, goals })
}

/// A falsifying algebra and valuation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Countermodel {
    pub algebra: String,
    /// Variable name to element name.
    pub valuation: BTreeMap<String, String>,
    #[serde(skip)]
    pub ids: BTreeMap<String, ElementId>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub verdict: bool,
    pub countermodel: Option<Countermodel>,
}

impl Verdict {
    fn holds() -> Self {
        Verdict { verdict: true, countermodel: None }
    }
}

/// Calls `visit` on every valuation of `arity` variables into an `n`-element
/// universe, first variable most significant, stopping when it returns
/// `false`.
pub fn for_each_valuation(arity: usize, n: usize, mut visit: impl FnMut(&[ElementId]) -> bool) {
    if n == 0 && arity > 0 {
        return;
    }
    let mut v = vec![0; arity];
    loop {
        if !visit(&v) {
            return;
        }
        let mut i = arity;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            v[i] += 1;
            if v[i] < n {
                break;
            }
            v[i] = 0;
        }
    }
}

/// Registry-level consequence: in every algebra, every valuation satisfying
/// all premises satisfies `goal`. The first failure, in registry order and
/// then valuation order, is returned as the countermodel.
pub fn consequence_check(
    algebras: &[&FiniteAlgebra],
    sig: Signature,
    premises: &[Equation],
    goal: &Equation,
) -> Result<Verdict> {
    consequence_check_all(algebras, sig, premises, std::slice::from_ref(goal))
}

/// [`consequence_check`] with a conjunction of goals.
pub fn consequence_check_all(
    algebras: &[&FiniteAlgebra],
    sig: Signature,
    premises: &[Equation],
    goals: &[Equation],
) -> Result<Verdict> {
    for e in premises.iter().chain(goals) {
        if !e.lhs.is_over(sig) || !e.rhs.is_over(sig) {
            return Err(TermError::SignatureMismatch(format!("`{e}` is not over {sig}")).into());
        }
    }
    let mut vars = std::collections::BTreeSet::new();
    for e in premises.iter().chain(goals) {
        vars.extend(e.vars());
    }
    let vars: Vec<String> = vars.into_iter().collect();
    for alg in algebras {
        let interp = Interpretation::new(sig, alg)?;
        let compile = |eqs: &[Equation]| -> Result<Vec<(Compiled<'_>, Compiled<'_>)>> {
            eqs.iter()
                .map(|e| Ok((interp.compile(&e.lhs, &vars)?, interp.compile(&e.rhs, &vars)?)))
                .collect()
        };
        let ps = compile(premises)?;
        let gs = compile(goals)?;
        let mut stack = Vec::new();
        let mut found = None;
        for_each_valuation(vars.len(), alg.size(), |v| {
            let mut sat = |eqs: &[(Compiled, Compiled)]| {
                eqs.iter().all(|(l, r)| l.eval(v, &mut stack) == r.eval(v, &mut stack))
            };
            if sat(&ps) && !sat(&gs) {
                found = Some(v.to_vec());
                return false;
            }
            true
        });
        if let Some(v) = found {
            return Ok(Verdict {
                verdict: false,
                countermodel: Some(Countermodel {
                    algebra: alg.name().to_string(),
                    valuation: vars.iter().zip(&v).map(|(x, &e)| (x.clone(), alg.element_name(e).to_string())).collect(),
                    ids: vars.iter().cloned().zip(v).collect(),
                }),
            });
        }
    }
    Ok(Verdict::holds())
}

/// Checks that `τ(ψ)` maps argument pairs satisfying the context to a pair
/// satisfying it, over every valuation in every algebra.
pub fn check_context_preservation(algebras: &[&FiniteAlgebra], s: Symbol) -> Result<Verdict> {
    let row = tau(s)?;
    let sig = Signature::Ticrl;
    let vars = pattern_vars(s.arity);
    for alg in algebras {
        let i = Interpretation::new(sig, alg)?;
        let (first, second) = (i.compile(&row.first, &vars)?, i.compile(&row.second, &vars)?);
        let zero = i.apply(&sig.get("0"), &[])?;
        let prod = |a, b| i.apply(&sig.get("prod"), &[a, b]);
        let mut stack = Vec::new();
        let mut found = None;
        let mut err = None;
        for_each_valuation(vars.len(), alg.size(), |v| {
            let mut run = || -> Result<bool, TermError> {
                for arg in v.chunks(2) {
                    if prod(arg[0], arg[1])? != zero {
                        return Ok(true);
                    }
                }
                let out = (first.eval(v, &mut Vec::new()), second.eval(v, &mut stack));
                Ok(prod(out.0, out.1)? == zero)
            };
            match run() {
                Ok(true) => true,
                Ok(false) => {
                    found = Some(v.to_vec());
                    false
                }
                Err(e) => {
                    err = Some(e);
                    false
                }
            }
        });
        if let Some(e) = err {
            return Err(e.into());
        }
        if let Some(v) = found {
            return Ok(Verdict {
                verdict: false,
                countermodel: Some(Countermodel {
                    algebra: alg.name().to_string(),
                    valuation: vars.iter().zip(&v).map(|(x, &e)| (x.clone(), alg.element_name(e).to_string())).collect(),
                    ids: vars.iter().cloned().zip(v).collect(),
                }),
            });
        }
    }
    Ok(Verdict::holds())
}

/// A tense ICRDL `L` together with `K(L)`, for comparing evaluation in
/// `K(L)` with componentwise evaluation of translated terms in `L`.
pub struct Translation<'a> {
    l: &'a TenseIcrdl,
    k: &'a KalmanAlgebra,
    li: Interpretation<'a>,
    ki: Interpretation<'a>,
}

impl<'a> Translation<'a> {
    pub fn new(l: &'a TenseIcrdl, k: &'a KalmanAlgebra) -> Result<Self> {
        Ok(Translation {
            l,
            k,
            li: Interpretation::new(Signature::Ticrl, l.algebra())?,
            ki: Interpretation::new(Signature::Tdrl, k.algebra())?,
        })
    }

    fn render_valuation(&self, vars: &[String], v: &[ElementId]) -> Vec<String> {
        vars.iter().zip(v).map(|(x, &e)| format!("{x}={}", self.k.algebra().element_name(e))).collect()
    }

    fn doubled(&self, v: &[ElementId]) -> Vec<ElementId> {
        v.iter().flat_map(|&e| {
            let (a, b) = self.k.pair(e);
            [a, b]
        }).collect()
    }

    /// Compares `term` in `K(L)` under `v` with its translation in `L` under
    /// the doubled valuation. A mismatch is a theorem violation.
    pub fn correspondence(&self, term: &Term, v: &HashMap<String, ElementId>) -> Result<Check> {
        let vars: Vec<String> = term.vars().into_iter().collect();
        let values = vars
            .iter()
            .map(|x| v.get(x).copied().ok_or_else(|| TermError::UnboundVariable(x.clone())))
            .collect::<Result<Vec<_>, _>>()?;
        let mut checker = TermChecker::new(self, term, &vars)?;
        Ok(match checker.mismatch(&values) {
            None => Check::passed("tau-correspondence").as_theorem(),
            Some(detail) => Check::failed(
                "tau-correspondence",
                values.clone(),
                self.render_valuation(&vars, &values),
                format!("{term}: {detail}"),
            )
            .as_theorem(),
        })
    }

    /// Checks the correspondence for one term under every valuation into
    /// `K(L)`.
    pub fn correspondence_all(&self, term: &Term, vars: &[String]) -> Result<Option<Check>> {
        let mut checker = TermChecker::new(self, term, vars)?;
        let mut failure = None;
        for_each_valuation(vars.len(), self.k.size(), |v| match checker.mismatch(v) {
            None => true,
            Some(detail) => {
                failure = Some(
                    Check::failed("tau-correspondence", v.to_vec(), self.render_valuation(vars, v), format!("{term}: {detail}"))
                        .as_theorem(),
                );
                false
            }
        });
        Ok(failure)
    }

    /// Runs the correspondence over generated terms; see [`SweepConfig`].
    pub fn sweep(&self, cfg: &SweepConfig) -> Result<Report> {
        let mut report = Report::new("translation-sweep");
        let vars = variable_names(cfg.vars);
        let atoms = atoms(&vars);
        let vals = self.k.size().pow(vars.len() as u32);
        report.note(format!(
            "{} variables, {} valuations into {} ({} elements)",
            vars.len(),
            vals,
            self.k.algebra().name(),
            self.k.size()
        ));

        let literal_depth = cfg.literal_depth.min(cfg.depth);
        let count = term_count(atoms.len(), literal_depth);
        if count > LITERAL_LIMIT {
            return Err(Error::Precondition(format!(
                "{count} terms up to depth {literal_depth}, above the literal enumeration limit {LITERAL_LIMIT}"
            )));
        }
        let terms = terms_up_to(&atoms, literal_depth);
        let mut failure = None;
        for t in &terms {
            if let Some(c) = self.correspondence_all(t, &vars)? {
                failure = Some(c);
                break;
            }
        }
        report.push(named(
            format!("literal-depth-{literal_depth}"),
            failure,
            format!("{} terms, each under all {vals} valuations", terms.len()),
        ));

        if cfg.depth > literal_depth {
            let (failure, states) = self.closure_sweep(&vars, &atoms, cfg.depth)?;
            report.push(named(
                format!("closure-depth-{}", cfg.depth),
                failure,
                format!(
                    "all {} terms up to depth {} under all {vals} valuations, via at most {states} value states per valuation",
                    count_label(term_count(atoms.len(), cfg.depth)),
                    cfg.depth
                ),
            ));
        }

        if cfg.random_terms > 0 {
            let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
            let mut failure = None;
            for _ in 0..cfg.random_terms {
                let t = random_term(&mut rng, &atoms, cfg.random_depth);
                if let Some(c) = self.correspondence_all(&t, &vars)? {
                    failure = Some(c);
                    break;
                }
            }
            report.push(named(
                "random-terms".into(),
                failure,
                format!("{} random terms of depth at most {}, seed {}", cfg.random_terms, cfg.random_depth, cfg.seed),
            ));
        }

        let algs = [self.l.algebra()];
        for s in Signature::Tdrl.symbols() {
            let v = check_context_preservation(&algs, *s)?;
            let check = match v.countermodel {
                None => Check::passed(format!("context:{}", s.name)),
                Some(cm) => Check::failed(
                    format!("context:{}", s.name),
                    cm.ids.values().copied().collect(),
                    cm.valuation.iter().map(|(k, v)| format!("{k}={v}")).collect(),
                    "argument pairs satisfy x.1·x.2 = 0 but the image pair does not",
                ),
            };
            report.push(check.as_theorem());
        }
        Ok(report)
    }

    /// Exact check of every term up to `depth`: for a fixed valuation, the
    /// values of depth `d + 1` terms are the operations applied to values of
    /// depth `d` terms, so it suffices to close the set of value states
    /// (value in `K(L)`, value of the translated pair in `L`) level by level.
    /// Returns the first mismatch and the largest state set seen.
    fn closure_sweep(&self, vars: &[String], atoms: &[Term], depth: usize) -> Result<(Option<Check>, usize)> {
        type State = (ElementId, ElementId, ElementId);
        let symbols: Vec<Symbol> = Signature::Tdrl.symbols().iter().copied().filter(|s| s.arity > 0).collect();
        let rows = symbols
            .iter()
            .map(|s| {
                let row = tau(*s)?;
                let pv = pattern_vars(s.arity);
                Ok((self.li.compile(&row.first, &pv)?, self.li.compile(&row.second, &pv)?))
            })
            .collect::<Result<Vec<_>>>()?;
        let atom_code = atoms
            .iter()
            .map(|t| TermChecker::new(self, t, vars))
            .collect::<Result<Vec<_>>>()?;

        let mut stack = Vec::new();
        let mut largest = 0;
        let mut result = None;
        let mut atom_code = atom_code;
        for_each_valuation(vars.len(), self.k.size(), |v| {
            let doubled = self.doubled(v);
            let mut states: HashMap<State, Term> = HashMap::new();
            for (t, code) in atoms.iter().zip(atom_code.iter_mut()) {
                let s = code.state(v, &doubled);
                states.entry(s).or_insert_with(|| t.clone());
            }
            for _ in 0..depth {
                let current: Vec<(State, Term)> = states.iter().map(|(s, t)| (*s, t.clone())).collect();
                let mut next = states.clone();
                for (sym, (f, g)) in symbols.iter().zip(&rows) {
                    let mut add = |args: &[&(State, Term)]| -> Option<String> {
                        let kv: Vec<ElementId> = args.iter().map(|a| a.0 .0).collect();
                        let lv: Vec<ElementId> = args.iter().flat_map(|a| [a.0 .1, a.0 .2]).collect();
                        let k = self.ki.apply(sym, &kv).expect("interpreted");
                        let l = (f.eval(&lv, &mut stack), g.eval(&lv, &mut stack));
                        let s = (k, l.0, l.1);
                        let term = || Term::app(*sym, args.iter().map(|a| a.1.clone()).collect());
                        if self.k.pair(k) != l {
                            return Some(format!("{}: {}", term(), self.describe_mismatch(k, l)));
                        }
                        next.entry(s).or_insert_with(term);
                        None
                    };
                    let bad = if sym.arity == 1 {
                        current.iter().find_map(|a| add(&[a]))
                    } else {
                        current.iter().find_map(|a| current.iter().find_map(|b| add(&[a, b])))
                    };
                    if let Some(detail) = bad {
                        result = Some(
                            Check::failed("tau-correspondence", v.to_vec(), self.render_valuation(vars, v), detail).as_theorem(),
                        );
                        return false;
                    }
                }
                let grew = next.len() > states.len();
                states = next;
                if !grew {
                    break;
                }
            }
            largest = largest.max(states.len());
            true
        });
        Ok((result, largest))
    }

    fn describe_mismatch(&self, k: ElementId, l: (ElementId, ElementId)) -> String {
        format!(
            "K(L) gives {} but the translation gives ({},{})",
            self.k.algebra().element_name(k),
            self.l.name(l.0),
            self.l.name(l.1)
        )
    }
}

/// One term compiled on both sides.
struct TermChecker<'t, 'a> {
    tr: &'t Translation<'a>,
    k: Compiled<'a>,
    first: Compiled<'a>,
    second: Compiled<'a>,
    stack: Vec<ElementId>,
    doubled: Vec<ElementId>,
}

impl<'t, 'a> TermChecker<'t, 'a> {
    fn new(tr: &'t Translation<'a>, term: &Term, vars: &[String]) -> Result<Self> {
        let image = tau_star(term)?;
        let dvars: Vec<String> = vars.iter().flat_map(|x| [component(x, 1), component(x, 2)]).collect();
        Ok(TermChecker {
            tr,
            k: tr.ki.compile(term, vars)?,
            first: tr.li.compile(&image.first, &dvars)?,
            second: tr.li.compile(&image.second, &dvars)?,
            stack: Vec::new(),
            doubled: Vec::new(),
        })
    }

    fn state(&mut self, v: &[ElementId], doubled: &[ElementId]) -> (ElementId, ElementId, ElementId) {
        let k = self.k.eval(v, &mut self.stack);
        (k, self.first.eval(doubled, &mut self.stack), self.second.eval(doubled, &mut self.stack))
    }

    fn mismatch(&mut self, v: &[ElementId]) -> Option<String> {
        let mut doubled = std::mem::take(&mut self.doubled);
        doubled.clear();
        doubled.extend(v.iter().flat_map(|&e| {
            let (a, b) = self.tr.k.pair(e);
            [a, b]
        }));
        let (k, a, b) = self.state(v, &doubled);
        self.doubled = doubled;
        (self.tr.k.pair(k) != (a, b)).then(|| self.tr.describe_mismatch(k, (a, b)))
    }
}

fn named(axiom: String, failure: Option<Check>, detail: String) -> Check {
    match failure {
        None => Check::verdict(axiom, true, Some(detail)).as_theorem(),
        Some(mut c) => {
            c.axiom = axiom;
            c
        }
    }
}

/// Convenience wrapper building `K(L)` first.
pub fn check_translation_correspondence(
    t: &TenseIcrdl,
    term: &Term,
    v: &HashMap<String, ElementId>,
) -> Result<Check> {
    let k = kalman(t)?;
    Translation::new(t, &k)?.correspondence(term, v)
}

/// Terms above this count are not enumerated literally.
pub const LITERAL_LIMIT: u128 = 2_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepConfig {
    /// Every term up to this depth is covered exactly.
    pub depth: usize,
    /// Terms up to this depth are also built and translated one by one.
    pub literal_depth: usize,
    pub vars: usize,
    pub random_terms: usize,
    pub random_depth: usize,
    pub seed: u64,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig { depth: 3, literal_depth: 2, vars: 2, random_terms: 200, random_depth: 6, seed: 0 }
    }
}

/// `x`, `y`, `z`, then `x3`, `x4`, ...
pub fn variable_names(n: usize) -> Vec<String> {
    (0..n)
        .map(|i| match i {
            0 => "x".to_string(),
            1 => "y".to_string(),
            2 => "z".to_string(),
            _ => format!("x{i}"),
        })
        .collect()
}

/// Variables followed by the tDRL constants.
pub fn atoms(vars: &[String]) -> Vec<Term> {
    vars.iter()
        .map(Term::var)
        .chain(Signature::Tdrl.symbols().iter().filter(|s| s.arity == 0).map(|s| Term::constant(*s)))
        .collect()
}

/// Number of tDRL terms of depth at most `depth` over `atoms` atoms.
pub fn term_count(atoms: usize, depth: usize) -> u128 {
    let (unary, binary) = arity_counts();
    let mut n = atoms as u128;
    for _ in 0..depth {
        n = (atoms as u128)
            .saturating_add((unary as u128).saturating_mul(n))
            .saturating_add((binary as u128).saturating_mul(n.saturating_mul(n)));
    }
    n
}

fn count_label(n: u128) -> String {
    if n == u128::MAX {
        "astronomically many".into()
    } else {
        n.to_string()
    }
}

fn arity_counts() -> (usize, usize) {
    let syms = Signature::Tdrl.symbols();
    (syms.iter().filter(|s| s.arity == 1).count(), syms.iter().filter(|s| s.arity == 2).count())
}

/// Every tDRL term of depth at most `depth` over `atoms`, shallow first.
pub fn terms_up_to(atoms: &[Term], depth: usize) -> Vec<Term> {
    let mut terms = atoms.to_vec();
    for _ in 0..depth {
        let prev = terms;
        let mut next = atoms.to_vec();
        for s in Signature::Tdrl.symbols() {
            match s.arity {
                1 => next.extend(prev.iter().map(|a| Term::app(*s, vec![a.clone()]))),
                2 => {
                    for a in &prev {
                        next.extend(prev.iter().map(|b| Term::app(*s, vec![a.clone(), b.clone()])));
                    }
                }
                _ => {}
            }
        }
        terms = next;
    }
    terms
}

/// A random tDRL term of depth at most `depth`.
pub fn random_term(rng: &mut impl Rng, atoms: &[Term], depth: usize) -> Term {
    let ops: Vec<Symbol> = Signature::Tdrl.symbols().iter().copied().filter(|s| s.arity > 0).collect();
    if depth == 0 || rng.random_bool(0.2) {
        return atoms[rng.random_range(0..atoms.len())].clone();
    }
    let s = ops[rng.random_range(0..ops.len())];
    Term::app(s, (0..s.arity).map(|_| random_term(rng, atoms, depth - 1)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::load_algebra;
    use crate::fixtures;
    use crate::term::parse_term;

    fn tdrl(s: &str) -> Term {
        parse_term(s, Signature::Tdrl).unwrap()
    }

    fn ticrl(s: &str) -> Term {
        parse_term(s, Signature::Ticrl).unwrap()
    }

    #[test]
    fn table_rows() {
        let sig = Signature::Tdrl;
        let tilde = tau(sig.get("tilde")).unwrap();
        assert_eq!(tilde, PairTerm::new(ticrl("x1.2"), ticrl("x1.1")));
        assert_eq!(tau(sig.get("0")).unwrap(), PairTerm::new(ticrl("0"), ticrl("1")));
        assert_eq!(tau(sig.get("P")).unwrap(), PairTerm::new(ticrl("(P x1.1)"), ticrl("(H x1.2)")));
        assert!(tau(Signature::Ticrl.get("prod")).is_err());
    }

    #[test]
    fn star_images() {
        assert_eq!(tau_star(&tdrl("x")).unwrap(), PairTerm::new(ticrl("x.1"), ticrl("x.2")));
        assert_eq!(tau_star(&tdrl("(tilde x)")).unwrap(), PairTerm::new(ticrl("x.2"), ticrl("x.1")));
        let g = tau_star(&tdrl("(G (star x y))")).unwrap();
        assert_eq!(g.first, ticrl("(G (prod x.1 y.1))"));
        assert_eq!(g.second, ticrl("(F (wedge (imp x.1 y.2) (imp y.1 x.2)))"));
    }

    #[test]
    fn equations_split() {
        let eqs = [Equation::new(tdrl("(G x)"), tdrl("1"))];
        let out = tau_star_eqs(&eqs).unwrap();
        assert_eq!(out[0].to_string(), "(G x.1) = 1");
        assert_eq!(out[1].to_string(), "(F x.2) = 0");
    }

    #[test]
    fn consequence_on_remark35() {
        let a = load_algebra(fixtures::REMARK35).unwrap();
        let goal = Equation::new(ticrl("(prod x x)"), ticrl("x"));
        let v = consequence_check(&[&a], Signature::Ticrl, &[], &goal).unwrap();
        assert!(!v.verdict);
        assert_eq!(v.countermodel.unwrap().valuation["x"], "a");
    }

    #[test]
    fn query_round_trip() {
        let src = "signature tDRL\nassume x = c\nshow (tilde x) = x\n";
        let q = parse_query(src).unwrap();
        assert_eq!(q.to_source(), src);
        let t = q.translate().unwrap();
        assert_eq!(t.premises.len(), 3);
        assert_eq!(t.premises[2].to_string(), "(prod x.1 x.2) = 0");
        assert!(parse_query("assume x = x\n").is_err());
        assert!(parse_query("signature tDRL\nshow (prod x y) = x\n").is_err());
    }

    #[test]
    fn valuation_order() {
        let mut seen = Vec::new();
        for_each_valuation(2, 2, |v| {
            seen.push(v.to_vec());
            true
        });
        assert_eq!(seen, [[0, 0], [0, 1], [1, 0], [1, 1]]);
    }

    #[test]
    fn term_counts() {
        assert_eq!(term_count(5, 1), 130);
        assert_eq!(term_count(5, 2), 68255);
        assert_eq!(terms_up_to(&atoms(&variable_names(2)), 1).len(), 130);
    }

    #[test]
    fn sweep_on_bool2() {
        let t = TenseIcrdl::new(load_algebra(fixtures::BOOL2).unwrap()).unwrap();
        let k = kalman(&t).unwrap();
        let cfg = SweepConfig { depth: 3, literal_depth: 1, random_terms: 20, ..SweepConfig::default() };
        let r = Translation::new(&t, &k).unwrap().sweep(&cfg).unwrap();
        assert!(r.all_pass(), "{r:?}");
    }
}

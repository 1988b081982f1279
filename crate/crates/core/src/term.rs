//! Terms over the tense DRL and tense ICRL signatures: syntax, an
//! s-expression parser and printer, and table evaluation.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::{ElementId, FiniteAlgebra, OperationTable};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TermError {
    #[error("position {pos}: {message}")]
    Syntax { pos: usize, message: String },

    #[error("position {pos}: unknown symbol `{symbol}` in signature {signature}")]
    UnknownSymbol {
        pos: usize,
        symbol: String,
        signature: &'static str,
    },

    #[error("position {pos}: `{symbol}` takes {expected} arguments, found {found}")]
    Arity {
        pos: usize,
        symbol: String,
        expected: usize,
        found: usize,
    },

    #[error("algebra `{algebra}` does not interpret `{symbol}`")]
    MissingInterpretation { algebra: String, symbol: String },

    #[error("variable `{0}` has no value")]
    UnboundVariable(String),

    #[error("signature mismatch: {0}")]
    SignatureMismatch(String),
}

/// A function or constant symbol. `op` names the table (or constant) that
/// interprets it in a [`FiniteAlgebra`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Symbol {
    pub name: &'static str,
    pub arity: usize,
    pub op: &'static str,
}

const fn sym(name: &'static str, arity: usize, op: &'static str) -> Symbol {
    Symbol { name, arity, op }
}

const TDRL: &[Symbol] = &[
    sym("vee", 2, "join"),
    sym("wedge", 2, "meet"),
    sym("star", 2, "star"),
    sym("dimp", 2, "dimp"),
    sym("tilde", 1, "tilde"),
    sym("G", 1, "G"),
    sym("H", 1, "H"),
    sym("F", 1, "F"),
    sym("P", 1, "P"),
    sym("c", 0, "c"),
    sym("0", 0, "0"),
    sym("1", 0, "1"),
];

const TICRL: &[Symbol] = &[
    sym("vee", 2, "join"),
    sym("wedge", 2, "meet"),
    sym("prod", 2, "prod"),
    sym("imp", 2, "imp"),
    sym("G", 1, "G"),
    sym("H", 1, "H"),
    sym("F", 1, "F"),
    sym("P", 1, "P"),
    sym("0", 0, "0"),
    sym("1", 0, "1"),
];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Signature {
    #[serde(rename = "tDRL")]
    Tdrl,
    #[serde(rename = "tICRL")]
    Ticrl,
}

impl Signature {
    pub fn name(self) -> &'static str {
        match self {
            Signature::Tdrl => "tDRL",
            Signature::Ticrl => "tICRL",
        }
    }

    pub fn symbols(self) -> &'static [Symbol] {
        match self {
            Signature::Tdrl => TDRL,
            Signature::Ticrl => TICRL,
        }
    }

    pub fn symbol(self, name: &str) -> Option<Symbol> {
        self.symbols().iter().copied().find(|s| s.name == name)
    }

    /// Looks up a symbol, panicking on names outside the signature. For
    /// internal tables only.
    pub(crate) fn get(self, name: &str) -> Symbol {
        self.symbol(name).unwrap_or_else(|| panic!("{name} is not in {}", self.name()))
    }

    pub fn from_name(name: &str) -> Option<Signature> {
        match name {
            "tDRL" => Some(Signature::Tdrl),
            "tICRL" => Some(Signature::Ticrl),
            _ => None,
        }
    }

    fn reserved(name: &str) -> bool {
        TDRL.iter().chain(TICRL).any(|s| s.name == name)
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Term {
    Var(String),
    App(Symbol, Vec<Term>),
}

impl Term {
    pub fn var(name: impl Into<String>) -> Term {
        Term::Var(name.into())
    }

    pub fn app(symbol: Symbol, args: Vec<Term>) -> Term {
        debug_assert_eq!(symbol.arity, args.len());
        Term::App(symbol, args)
    }

    pub fn constant(symbol: Symbol) -> Term {
        Term::App(symbol, Vec::new())
    }

    /// Height of the syntax tree; variables and constants have depth 0.
    pub fn depth(&self) -> usize {
        match self {
            Term::Var(_) => 0,
            Term::App(_, args) => args.iter().map(|a| a.depth() + 1).max().unwrap_or(0),
        }
    }

    /// Number of nodes.
    pub fn size(&self) -> usize {
        match self {
            Term::Var(_) => 1,
            Term::App(_, args) => 1 + args.iter().map(Term::size).sum::<usize>(),
        }
    }

    pub fn vars(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_vars(&mut out);
        out
    }

    fn collect_vars(&self, out: &mut BTreeSet<String>) {
        match self {
            Term::Var(v) => {
                out.insert(v.clone());
            }
            Term::App(_, args) => args.iter().for_each(|a| a.collect_vars(out)),
        }
    }

    /// Replaces variables by the terms `map` assigns to them.
    pub fn substitute(&self, map: &HashMap<&str, &Term>) -> Term {
        match self {
            Term::Var(v) => map.get(v.as_str()).map_or_else(|| self.clone(), |t| (*t).clone()),
            Term::App(s, args) => Term::App(*s, args.iter().map(|a| a.substitute(map)).collect()),
        }
    }

    /// Whether every symbol belongs to `sig`.
    pub fn is_over(&self, sig: Signature) -> bool {
        match self {
            Term::Var(_) => true,
            Term::App(s, args) => sig.symbol(s.name) == Some(*s) && args.iter().all(|a| a.is_over(sig)),
        }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Var(v) => f.write_str(v),
            Term::App(s, args) if args.is_empty() => f.write_str(s.name),
            Term::App(s, args) => {
                write!(f, "({}", s.name)?;
                for a in args {
                    write!(f, " {a}")?;
                }
                f.write_str(")")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Equation {
    pub lhs: Term,
    pub rhs: Term,
}

impl Equation {
    pub fn new(lhs: Term, rhs: Term) -> Self {
        Equation { lhs, rhs }
    }

    pub fn vars(&self) -> BTreeSet<String> {
        let mut v = self.lhs.vars();
        v.extend(self.rhs.vars());
        v
    }
}

impl fmt::Display for Equation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = {}", self.lhs, self.rhs)
    }
}

struct Parser<'s> {
    text: &'s str,
    pos: usize,
    sig: Signature,
}

fn is_ident_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_' || c == '.'
}

impl<'s> Parser<'s> {
    fn skip_ws(&mut self) {
        while let Some(c) = self.text[self.pos..].chars().next() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn peek(&self) -> Option<char> {
        self.text[self.pos..].chars().next()
    }

    fn atom(&mut self) -> Result<(usize, &'s str), TermError> {
        self.skip_ws();
        let start = self.pos;
        while self.peek().is_some_and(is_ident_char) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(match self.peek() {
                None => TermError::Syntax { pos: start, message: "unexpected end of input".into() },
                Some(c) => TermError::Syntax { pos: start, message: format!("unexpected `{c}`") },
            });
        }
        Ok((start, &self.text[start..self.pos]))
    }

    fn term(&mut self) -> Result<Term, TermError> {
        self.skip_ws();
        if self.peek() == Some('(') {
            self.pos += 1;
            let (pos, head) = self.atom()?;
            let symbol = self.sig.symbol(head).ok_or_else(|| TermError::UnknownSymbol {
                pos,
                symbol: head.into(),
                signature: self.sig.name(),
            })?;
            let mut args = Vec::new();
            loop {
                self.skip_ws();
                match self.peek() {
                    Some(')') => {
                        self.pos += 1;
                        break;
                    }
                    None => {
                        return Err(TermError::Syntax { pos: self.pos, message: "missing `)`".into() })
                    }
                    _ => args.push(self.term()?),
                }
            }
            if args.len() != symbol.arity || symbol.arity == 0 {
                return Err(TermError::Arity {
                    pos,
                    symbol: head.into(),
                    expected: symbol.arity,
                    found: args.len(),
                });
            }
            return Ok(Term::App(symbol, args));
        }
        let (pos, name) = self.atom()?;
        match self.sig.symbol(name) {
            Some(s) if s.arity == 0 => Ok(Term::constant(s)),
            Some(s) => Err(TermError::Arity { pos, symbol: name.into(), expected: s.arity, found: 0 }),
            None if Signature::reserved(name) => Err(TermError::UnknownSymbol {
                pos,
                symbol: name.into(),
                signature: self.sig.name(),
            }),
            None if name.starts_with(|c: char| c.is_ascii_alphabetic() || c == '_') => Ok(Term::var(name)),
            None => Err(TermError::Syntax { pos, message: format!("`{name}` is not a variable name") }),
        }
    }

    fn end(&mut self) -> Result<(), TermError> {
        self.skip_ws();
        match self.peek() {
            None => Ok(()),
            Some(c) => Err(TermError::Syntax { pos: self.pos, message: format!("trailing `{c}`") }),
        }
    }
}

/// Parses one s-expression such as `(imp (prod x y) 0)`.
pub fn parse_term(text: &str, sig: Signature) -> Result<Term, TermError> {
    let mut p = Parser { text, pos: 0, sig };
    let t = p.term()?;
    p.end()?;
    Ok(t)
}

/// Parses `lhs = rhs`.
pub fn parse_equation(text: &str, sig: Signature) -> Result<Equation, TermError> {
    let mut p = Parser { text, pos: 0, sig };
    let lhs = p.term()?;
    p.skip_ws();
    if p.peek() != Some('=') {
        return Err(TermError::Syntax { pos: p.pos, message: "expected `=`".into() });
    }
    p.pos += 1;
    let rhs = p.term()?;
    p.end()?;
    Ok(Equation { lhs, rhs })
}

/// Symbol tables of one algebra for one signature.
#[derive(Clone, Debug)]
pub struct Interpretation<'a> {
    pub sig: Signature,
    pub algebra: &'a FiniteAlgebra,
    tables: Vec<Slot<'a>>,
}

#[derive(Clone, Debug)]
enum Slot<'a> {
    Constant(ElementId),
    Table(&'a OperationTable),
}

impl<'a> Interpretation<'a> {
    pub fn new(sig: Signature, algebra: &'a FiniteAlgebra) -> Result<Self, TermError> {
        let missing = |s: &Symbol| TermError::MissingInterpretation {
            algebra: algebra.name().to_string(),
            symbol: s.name.to_string(),
        };
        let tables = sig
            .symbols()
            .iter()
            .map(|s| {
                if s.arity == 0 {
                    algebra.constant(s.op).map(Slot::Constant).ok_or_else(|| missing(s))
                } else {
                    algebra
                        .operation(s.op)
                        .filter(|t| t.arity() == s.arity)
                        .map(Slot::Table)
                        .ok_or_else(|| missing(s))
                }
            })
            .collect::<Result<_, _>>()?;
        Ok(Interpretation { sig, algebra, tables })
    }

    fn slot(&self, s: &Symbol) -> Result<&Slot<'a>, TermError> {
        self.sig
            .symbols()
            .iter()
            .position(|x| x == s)
            .map(|i| &self.tables[i])
            .ok_or_else(|| TermError::SignatureMismatch(format!("`{}` is not in {}", s.name, self.sig)))
    }

    /// Applies a symbol to already evaluated arguments.
    pub fn apply(&self, s: &Symbol, args: &[ElementId]) -> Result<ElementId, TermError> {
        Ok(match self.slot(s)? {
            Slot::Constant(c) => *c,
            Slot::Table(t) => t.apply(args),
        })
    }

    /// Evaluates a term under a valuation of its variables.
    pub fn eval(&self, t: &Term, v: &HashMap<String, ElementId>) -> Result<ElementId, TermError> {
        match t {
            Term::Var(x) => v.get(x).copied().ok_or_else(|| TermError::UnboundVariable(x.clone())),
            Term::App(s, args) => {
                let vals = args.iter().map(|a| self.eval(a, v)).collect::<Result<Vec<_>, _>>()?;
                self.apply(s, &vals)
            }
        }
    }

    /// Flattens a term into postfix code over the variable order `vars`.
    pub fn compile(&self, t: &Term, vars: &[String]) -> Result<Compiled<'a>, TermError> {
        let mut code = Vec::with_capacity(t.size());
        self.emit(t, vars, &mut code)?;
        Ok(Compiled { code })
    }

    fn emit(&self, t: &Term, vars: &[String], code: &mut Vec<Instr<'a>>) -> Result<(), TermError> {
        match t {
            Term::Var(x) => {
                let i = vars.iter().position(|v| v == x).ok_or_else(|| TermError::UnboundVariable(x.clone()))?;
                code.push(Instr::Var(i));
            }
            Term::App(s, args) => {
                for a in args {
                    self.emit(a, vars, code)?;
                }
                code.push(match self.slot(s)? {
                    Slot::Constant(c) => Instr::Const(*c),
                    Slot::Table(t) if t.arity() == 1 => Instr::Unary(t.entries()),
                    Slot::Table(t) => Instr::Binary(t.entries(), self.algebra.size()),
                });
            }
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug)]
enum Instr<'a> {
    Var(usize),
    Const(ElementId),
    Unary(&'a [ElementId]),
    Binary(&'a [ElementId], usize),
}

/// A term compiled against one interpretation, for fast repeated
/// evaluation.
#[derive(Clone, Debug)]
pub struct Compiled<'a> {
    code: Vec<Instr<'a>>,
}

impl Compiled<'_> {
    /// Evaluates with `values[i]` bound to the `i`-th compile-time variable.
    /// `stack` is scratch space reused across calls.
    pub fn eval(&self, values: &[ElementId], stack: &mut Vec<ElementId>) -> ElementId {
        stack.clear();
        for instr in &self.code {
            match *instr {
                Instr::Var(i) => stack.push(values[i]),
                Instr::Const(c) => stack.push(c),
                Instr::Unary(t) => {
                    let x = stack.pop().expect("well-formed code");
                    stack.push(t[x]);
                }
                Instr::Binary(t, n) => {
                    let y = stack.pop().expect("well-formed code");
                    let x = stack.pop().expect("well-formed code");
                    stack.push(t[x * n + y]);
                }
            }
        }
        stack.pop().expect("well-formed code")
    }
}

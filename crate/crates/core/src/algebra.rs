//! Finite algebras given by operation tables.
//!
//! Elements are indices `0..n` in the order of the `universe` line; every
//! table is stored row-major over those indices.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};

/// Index of an element in its owning algebra's universe.
pub type ElementId = usize;

/// Canonical operation order used by the serializer. Anything else follows
/// alphabetically.
pub const CANONICAL_OPS: &[&str] = &[
    "meet", "join", "prod", "imp", "star", "dimp", "tilde", "neg", "G", "H", "F", "P",
];

/// Canonical constant order used by the serializer.
pub const CANONICAL_CONSTS: &[&str] = &["0", "1", "c"];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OperationTable {
    name: String,
    arity: usize,
    size: usize,
    entries: Vec<ElementId>,
}

impl OperationTable {
    /// Builds a table, checking that it covers exactly `size^arity` tuples
    /// and that every entry lies in the universe.
    pub fn new(
        name: impl Into<String>,
        arity: usize,
        size: usize,
        entries: Vec<ElementId>,
    ) -> Result<Self> {
        let name = name.into();
        if arity > 2 {
            return Err(Error::Parse {
                line: 0,
                message: format!("operation `{name}` has unsupported arity {arity}"),
            });
        }
        let expected = size.pow(arity as u32);
        if entries.len() != expected {
            return Err(Error::NonTotal {
                name,
                message: format!("{} entries, expected {expected}", entries.len()),
            });
        }
        if let Some(bad) = entries.iter().find(|&&e| e >= size) {
            return Err(Error::NonTotal {
                name,
                message: format!("entry {bad} outside the universe"),
            });
        }
        Ok(OperationTable {
            name,
            arity,
            size,
            entries,
        })
    }

    pub fn from_fn1(name: impl Into<String>, size: usize, f: impl Fn(ElementId) -> ElementId) -> Self {
        OperationTable {
            name: name.into(),
            arity: 1,
            size,
            entries: (0..size).map(f).collect(),
        }
    }

    pub fn from_fn2(
        name: impl Into<String>,
        size: usize,
        f: impl Fn(ElementId, ElementId) -> ElementId,
    ) -> Self {
        let mut entries = Vec::with_capacity(size * size);
        for x in 0..size {
            for y in 0..size {
                entries.push(f(x, y));
            }
        }
        OperationTable {
            name: name.into(),
            arity: 2,
            size,
            entries,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn entries(&self) -> &[ElementId] {
        &self.entries
    }

    /// Applies the operation to an argument tuple of the right length.
    pub fn apply(&self, args: &[ElementId]) -> ElementId {
        debug_assert_eq!(args.len(), self.arity);
        match args {
            [] => self.entries[0],
            [x] => self.entries[*x],
            [x, y] => self.entries[x * self.size + y],
            _ => unreachable!("arity is at most 2"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteAlgebra {
    name: String,
    elements: Vec<String>,
    operations: BTreeMap<String, OperationTable>,
    constants: BTreeMap<String, ElementId>,
}

impl FiniteAlgebra {
    pub fn new(name: impl Into<String>, elements: Vec<String>) -> Result<Self> {
        let mut seen = std::collections::HashSet::new();
        for e in &elements {
            if !seen.insert(e.as_str()) {
                return Err(Error::DuplicateElement {
                    line: 0,
                    name: e.clone(),
                });
            }
        }
        Ok(FiniteAlgebra {
            name: name.into(),
            elements,
            operations: BTreeMap::new(),
            constants: BTreeMap::new(),
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn set_name(&mut self, name: impl Into<String>) {
        self.name = name.into();
    }

    pub fn size(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[String] {
        &self.elements
    }

    pub fn element_name(&self, x: ElementId) -> &str {
        &self.elements[x]
    }

    pub fn index_of(&self, name: &str) -> Option<ElementId> {
        self.elements.iter().position(|e| e == name)
    }

    /// Adds a table, rejecting duplicates and tables of the wrong size.
    pub fn add_operation(&mut self, table: OperationTable) -> Result<()> {
        if self.operations.contains_key(table.name()) {
            return Err(Error::DuplicateOperation {
                line: 0,
                name: table.name().to_string(),
            });
        }
        let expected = self.size().pow(table.arity() as u32);
        if table.size != self.size()
            || table.entries.len() != expected
            || table.entries.iter().any(|&e| e >= self.size())
        {
            return Err(Error::NonTotal {
                name: table.name().to_string(),
                message: format!("table does not cover the {}-element universe", self.size()),
            });
        }
        self.operations.insert(table.name().to_string(), table);
        Ok(())
    }

    /// Replaces or inserts a table.
    pub(crate) fn set_operation(&mut self, table: OperationTable) {
        self.operations.insert(table.name().to_string(), table);
    }

    pub fn remove_operation(&mut self, name: &str) -> Option<OperationTable> {
        self.operations.remove(name)
    }

    pub fn set_constant(&mut self, name: impl Into<String>, value: ElementId) {
        self.constants.insert(name.into(), value);
    }

    pub fn operations(&self) -> impl Iterator<Item = &OperationTable> {
        self.operations.values()
    }

    pub fn constants(&self) -> &BTreeMap<String, ElementId> {
        &self.constants
    }

    pub fn operation(&self, name: &str) -> Option<&OperationTable> {
        self.operations.get(name)
    }

    pub fn has_operation(&self, name: &str) -> bool {
        self.operations.contains_key(name)
    }

    pub fn constant(&self, name: &str) -> Option<ElementId> {
        self.constants.get(name).copied()
    }

    pub fn require_constant(&self, name: &str) -> Result<ElementId> {
        self.constant(name)
            .ok_or_else(|| Error::MissingConstant(name.to_string()))
    }

    /// Returns the table of `name`, checking its arity.
    pub fn require(&self, name: &str, arity: usize) -> Result<&OperationTable> {
        let op = self
            .operation(name)
            .ok_or_else(|| Error::MissingOperation(name.to_string()))?;
        if op.arity() != arity {
            return Err(Error::WrongArity {
                name: name.to_string(),
                expected: arity,
                found: op.arity(),
            });
        }
        Ok(op)
    }

    /// Row-major copy of a binary table.
    pub fn binary(&self, name: &str) -> Result<Vec<ElementId>> {
        Ok(self.require(name, 2)?.entries.clone())
    }

    pub fn unary(&self, name: &str) -> Result<Vec<ElementId>> {
        Ok(self.require(name, 1)?.entries.clone())
    }

    pub fn apply(&self, name: &str, args: &[ElementId]) -> Option<ElementId> {
        let op = self.operation(name)?;
        (op.arity() == args.len()).then(|| match args {
            [] => op.entries[0],
            [x] => op.entries[*x],
            [x, y] => op.entries[x * self.size() + y],
            _ => unreachable!(),
        })
    }

    /// Renders the algebra in the line-oriented file format.
    pub fn to_source(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "algebra {}", self.name);
        let _ = writeln!(out, "universe {}", self.elements.join(" "));
        let mut consts: Vec<&String> = self.constants.keys().collect();
        consts.sort_by_key(|k| {
            (
                CANONICAL_CONSTS
                    .iter()
                    .position(|c| c == k)
                    .unwrap_or(usize::MAX),
                (*k).clone(),
            )
        });
        for name in consts {
            let _ = writeln!(
                out,
                "const {name} = {}",
                self.elements[self.constants[name]]
            );
        }
        let n = self.size();
        for op in self.canonical_operations() {
            let _ = writeln!(out, "op {} {}", op.name, op.arity);
            match op.arity {
                0 => {
                    let _ = writeln!(out, "{}", self.elements[op.entries[0]]);
                }
                1 => {
                    let row: Vec<&str> = op.entries.iter().map(|&e| self.element_name(e)).collect();
                    let _ = writeln!(out, "{}", row.join(" "));
                }
                _ => {
                    for x in 0..n {
                        let row: Vec<&str> = op.entries[x * n..(x + 1) * n]
                            .iter()
                            .map(|&e| self.element_name(e))
                            .collect();
                        let _ = writeln!(out, "{}", row.join(" "));
                    }
                }
            }
        }
        out
    }

    fn canonical_operations(&self) -> Vec<&OperationTable> {
        let mut ops: Vec<&OperationTable> = self.operations.values().collect();
        ops.sort_by_key(|op| {
            (
                CANONICAL_OPS
                    .iter()
                    .position(|c| *c == op.name)
                    .unwrap_or(usize::MAX),
                op.name.clone(),
            )
        });
        ops
    }
}

/// Parses the algebra file format.
///
/// ```text
/// algebra <name>
/// universe 0 a b 1
/// const 0 = 0
/// op meet 2
/// <n rows of n names>
/// op G 1
/// <one row of n names>
/// ```
pub fn load_algebra(source: &str) -> Result<FiniteAlgebra> {
    let lines: Vec<(usize, Vec<&str>)> = source
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("")))
        .map(|(i, l)| (i, l.split_whitespace().collect::<Vec<_>>()))
        .filter(|(_, toks)| !toks.is_empty())
        .collect();

    let mut name: Option<String> = None;
    let mut algebra: Option<FiniteAlgebra> = None;
    let mut pending_consts: Vec<(usize, String, String)> = Vec::new();
    let mut i = 0;
    while i < lines.len() {
        let (line, toks) = &lines[i];
        let line = *line;
        match toks[0] {
            "algebra" => {
                if toks.len() != 2 {
                    return Err(parse_err(line, "expected `algebra <name>`"));
                }
                name = Some(toks[1].to_string());
                if let Some(a) = algebra.as_mut() {
                    a.set_name(toks[1]);
                }
                i += 1;
            }
            "universe" => {
                if algebra.is_some() {
                    return Err(parse_err(line, "universe declared twice"));
                }
                if toks.len() < 2 {
                    return Err(parse_err(line, "empty universe"));
                }
                let elements: Vec<String> = toks[1..].iter().map(|s| s.to_string()).collect();
                let mut a = FiniteAlgebra::new(name.clone().unwrap_or_default(), elements)
                    .map_err(|e| match e {
                        Error::DuplicateElement { name, .. } => Error::DuplicateElement { line, name },
                        other => other,
                    })?;
                for (cline, cname, cval) in pending_consts.drain(..) {
                    let v = a.index_of(&cval).ok_or(Error::UnknownElement {
                        line: cline,
                        name: cval,
                    })?;
                    a.set_constant(cname, v);
                }
                algebra = Some(a);
                i += 1;
            }
            "const" => {
                if toks.len() != 4 || toks[2] != "=" {
                    return Err(parse_err(line, "expected `const <name> = <element>`"));
                }
                match algebra.as_mut() {
                    Some(a) => {
                        let v = a.index_of(toks[3]).ok_or_else(|| Error::UnknownElement {
                            line,
                            name: toks[3].to_string(),
                        })?;
                        a.set_constant(toks[1], v);
                    }
                    None => pending_consts.push((line, toks[1].to_string(), toks[3].to_string())),
                }
                i += 1;
            }
            "op" => {
                let a = algebra
                    .as_mut()
                    .ok_or_else(|| parse_err(line, "operation before universe"))?;
                if toks.len() != 3 {
                    return Err(parse_err(line, "expected `op <name> <arity>`"));
                }
                let op_name = toks[1];
                let arity: usize = toks[2]
                    .parse()
                    .map_err(|_| parse_err(line, "arity must be 0, 1 or 2"))?;
                if arity > 2 {
                    return Err(parse_err(line, "arity must be 0, 1 or 2"));
                }
                if a.has_operation(op_name) {
                    return Err(Error::DuplicateOperation {
                        line,
                        name: op_name.to_string(),
                    });
                }
                let n = a.size();
                let (rows, width) = match arity {
                    0 => (1, 1),
                    1 => (1, n),
                    _ => (n, n),
                };
                let mut entries = Vec::with_capacity(rows * width);
                i += 1;
                for r in 0..rows {
                    let Some((rline, row)) = lines.get(i) else {
                        return Err(Error::NonTotal {
                            name: op_name.to_string(),
                            message: format!("missing row {} of {rows}", r + 1),
                        });
                    };
                    if is_directive(row[0]) {
                        return Err(Error::NonTotal {
                            name: op_name.to_string(),
                            message: format!("missing row {} of {rows} (line {rline})", r + 1),
                        });
                    }
                    if row.len() != width {
                        return Err(Error::NonTotal {
                            name: op_name.to_string(),
                            message: format!(
                                "line {rline}: {} entries, expected {width}",
                                row.len()
                            ),
                        });
                    }
                    for tok in row {
                        entries.push(a.index_of(tok).ok_or_else(|| Error::UnknownElement {
                            line: *rline,
                            name: tok.to_string(),
                        })?);
                    }
                    i += 1;
                }
                a.add_operation(OperationTable::new(op_name, arity, n, entries)?)?;
            }
            other => {
                return Err(parse_err(line, &format!("unexpected `{other}`")));
            }
        }
    }
    let mut a = algebra.ok_or_else(|| parse_err(lines.last().map_or(1, |l| l.0), "no universe"))?;
    if let Some(n) = name {
        a.set_name(n);
    }
    Ok(a)
}

fn is_directive(tok: &str) -> bool {
    matches!(tok, "algebra" | "universe" | "const" | "op")
}

fn parse_err(line: usize, message: &str) -> Error {
    Error::Parse {
        line,
        message: message.to_string(),
    }
}

//! The lattice order induced by the meet table.

use crate::algebra::{ElementId, FiniteAlgebra};
use crate::error::{Error, Result};

/// A partial order stored as a dense boolean matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderRelation {
    size: usize,
    leq: Vec<bool>,
}

impl OrderRelation {
    /// Wraps a matrix, verifying reflexivity, antisymmetry and transitivity.
    pub fn from_matrix(size: usize, leq: Vec<bool>) -> Result<Self> {
        assert_eq!(leq.len(), size * size);
        let order = OrderRelation { size, leq };
        order.check_partial_order()?;
        Ok(order)
    }

    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn leq(&self, x: ElementId, y: ElementId) -> bool {
        self.leq[x * self.size + y]
    }

    pub fn lt(&self, x: ElementId, y: ElementId) -> bool {
        x != y && self.leq(x, y)
    }

    pub fn matrix(&self) -> &[bool] {
        &self.leq
    }

    /// Least element, if any.
    pub fn bottom(&self) -> Option<ElementId> {
        (0..self.size).find(|&b| (0..self.size).all(|y| self.leq(b, y)))
    }

    /// Greatest element, if any.
    pub fn top(&self) -> Option<ElementId> {
        (0..self.size).find(|&t| (0..self.size).all(|y| self.leq(y, t)))
    }

    /// The least element of `{y : pred(y)}`, if that set has one.
    pub fn least(&self, pred: impl Fn(ElementId) -> bool) -> Option<ElementId> {
        let candidates: Vec<ElementId> = (0..self.size).filter(|&y| pred(y)).collect();
        candidates
            .iter()
            .copied()
            .find(|&m| candidates.iter().all(|&y| self.leq(m, y)))
    }

    /// The greatest element of `{y : pred(y)}`, if that set has one.
    pub fn greatest(&self, pred: impl Fn(ElementId) -> bool) -> Option<ElementId> {
        let candidates: Vec<ElementId> = (0..self.size).filter(|&y| pred(y)).collect();
        candidates
            .iter()
            .copied()
            .find(|&m| candidates.iter().all(|&y| self.leq(y, m)))
    }

    /// Pairs `(x, y)` with `x < y` and nothing strictly between.
    pub fn covers(&self) -> Vec<(ElementId, ElementId)> {
        let mut out = Vec::new();
        for x in 0..self.size {
            for y in 0..self.size {
                if self.lt(x, y) && !(0..self.size).any(|z| self.lt(x, z) && self.lt(z, y)) {
                    out.push((x, y));
                }
            }
        }
        out
    }

    fn check_partial_order(&self) -> Result<()> {
        let n = self.size;
        for x in 0..n {
            if !self.leq(x, x) {
                return Err(Error::NotPartialOrder(format!("not reflexive at {x}")));
            }
        }
        for x in 0..n {
            for y in 0..n {
                if x != y && self.leq(x, y) && self.leq(y, x) {
                    return Err(Error::NotPartialOrder(format!(
                        "not antisymmetric at ({x}, {y})"
                    )));
                }
            }
        }
        for x in 0..n {
            for y in 0..n {
                if !self.leq(x, y) {
                    continue;
                }
                for z in 0..n {
                    if self.leq(y, z) && !self.leq(x, z) {
                        return Err(Error::NotPartialOrder(format!(
                            "not transitive at ({x}, {y}, {z})"
                        )));
                    }
                }
            }
        }
        Ok(())
    }
}

/// Derives `x ≤ y ⟺ x ∧ y = x` from the `meet` table.
///
/// If a `join` table is present the order it induces (`x ∨ y = y`) must
/// coincide; a disagreement is reported as [`Error::NotPartialOrder`].
pub fn derive_order(alg: &FiniteAlgebra) -> Result<OrderRelation> {
    let n = alg.size();
    let meet = alg.require("meet", 2)?;
    let name = |x: usize| alg.element_name(x).to_string();
    let mut leq = vec![false; n * n];
    for x in 0..n {
        for y in 0..n {
            leq[x * n + y] = meet.apply(&[x, y]) == x;
        }
    }
    let order = OrderRelation::from_matrix(n, leq).map_err(|e| match e {
        Error::NotPartialOrder(m) => {
            Error::NotPartialOrder(format!("meet-induced relation: {m}"))
        }
        other => other,
    })?;
    if let Some(join) = alg.operation("join") {
        if join.arity() != 2 {
            return Err(Error::WrongArity {
                name: "join".into(),
                expected: 2,
                found: join.arity(),
            });
        }
        for x in 0..n {
            for y in 0..n {
                let by_join = join.apply(&[x, y]) == y;
                if by_join != order.leq(x, y) {
                    return Err(Error::NotPartialOrder(format!(
                        "meet and join induce different orders at ({}, {})",
                        name(x),
                        name(y)
                    )));
                }
            }
        }
    }
    Ok(order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::load_algebra;
    use crate::fixtures;

    #[test]
    fn four_chain_is_total() {
        let a = load_algebra(fixtures::REMARK35).unwrap();
        let o = derive_order(&a).unwrap();
        for x in 0..4 {
            for y in 0..4 {
                assert_eq!(o.leq(x, y), x <= y);
            }
        }
    }

    #[test]
    fn six_element_lattice_shape() {
        let a = load_algebra(fixtures::REMARK34).unwrap();
        let o = derive_order(&a).unwrap();
        let id = |s: &str| a.index_of(s).unwrap();
        let (b, d) = (id("b"), id("d"));
        assert!(!o.leq(b, d) && !o.leq(d, b));
        assert_eq!(a.apply("meet", &[b, d]), Some(id("0")));
        assert_eq!(a.apply("join", &[b, d]), Some(id("1")));
        let mut covers: Vec<(String, String)> = o
            .covers()
            .into_iter()
            .map(|(x, y)| (a.element_name(x).into(), a.element_name(y).into()))
            .collect();
        covers.sort();
        let expected = [
            ("0", "a"),
            ("0", "b"),
            ("a", "c"),
            ("a", "d"),
            ("b", "c"),
            ("c", "1"),
            ("d", "1"),
        ];
        let mut expected: Vec<(String, String)> = expected
            .iter()
            .map(|(x, y)| (x.to_string(), y.to_string()))
            .collect();
        expected.sort();
        assert_eq!(covers, expected);
    }

    #[test]
    fn non_idempotent_meet_is_rejected() {
        let src = "universe 0 1\nop meet 2\n1 0\n0 1\n";
        let a = load_algebra(src).unwrap();
        assert!(matches!(derive_order(&a), Err(Error::NotPartialOrder(_))));
    }

    #[test]
    fn meet_join_disagreement_is_rejected() {
        let src = "universe 0 1\nop meet 2\n0 0\n0 1\nop join 2\n0 0\n0 1\n";
        let a = load_algebra(src).unwrap();
        assert!(matches!(derive_order(&a), Err(Error::NotPartialOrder(_))));
    }
}

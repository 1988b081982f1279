//! Built-in example algebras.

pub const REMARK34: &str = include_str!("../fixtures/remark34.alg");
pub const REMARK34_PRINTED: &str = include_str!("../fixtures/remark34_printed.alg");
pub const REMARK35: &str = include_str!("../fixtures/remark35.alg");
pub const BOOL2: &str = include_str!("../fixtures/bool2.alg");

/// `(name, source)` pairs for every shipped fixture.
pub fn fixtures() -> Vec<(&'static str, &'static str)> {
    vec![
        ("remark34", REMARK34),
        ("remark34_printed", REMARK34_PRINTED),
        ("remark35", REMARK35),
        ("bool2", BOOL2),
    ]
}

/// Looks up a fixture source by name.
pub fn fixture(name: &str) -> Option<&'static str> {
    fixtures().into_iter().find(|(n, _)| *n == name).map(|(_, s)| s)
}

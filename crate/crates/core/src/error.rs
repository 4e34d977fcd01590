use thiserror::Error;

/// Everything that can go wrong in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("table of order {n} needs {n} rows of {n} entries, got {found}")]
    Shape { n: usize, found: String },

    #[error("entry {value} at row {row}, column {col} is out of range 0..{n}")]
    OutOfRange {
        row: usize,
        col: usize,
        value: usize,
        n: usize,
    },

    #[error("order must be positive")]
    EmptyTable,

    #[error("element {0} is out of range")]
    ElementOutOfRange(usize),

    #[error("{side} translation of {element} is not a bijection")]
    NotBijective { side: Side, element: usize },

    #[error("not a quasigroup")]
    NotQuasigroup,

    #[error("not a loop: {0}")]
    NotLoop(String),

    #[error("not a quandle: {0}")]
    NotQuandle(String),

    #[error("quandle is not connected")]
    NotConnected,

    #[error("not left distributive: {a}*({b}*{c}) != ({a}*{b})*({a}*{c})")]
    NotLeftDistributive { a: usize, b: usize, c: usize },

    #[error("not medial: ({x}*{y})*({u}*{v}) != ({x}*{u})*({y}*{v})")]
    NotMedial {
        x: usize,
        y: usize,
        u: usize,
        v: usize,
    },

    #[error("not a B-loop: {0}")]
    NotBLoop(String),

    #[error("not involutory: {a}*({a}*{b}) != {b}")]
    NotInvolutory { a: usize, b: usize },

    #[error("map is not an automorphism: f({a}*{b}) != f({a})*f({b})")]
    NotAutomorphism { a: usize, b: usize },

    #[error("map is not a bijection of 0..{0}")]
    NotPermutation(usize),

    #[error("degree mismatch: expected {expected}, got {found}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("BO condition fails at a={a}, b={b}, c={c}")]
    BoViolation { a: usize, b: usize, c: usize },

    #[error("automorphism parts do not commute")]
    NonCommutingParts,

    #[error("left inverse of {0} differs from its right inverse")]
    InverseMismatch(usize),

    #[error("group order exceeds the materialization cap of {cap}")]
    CapExceeded { cap: usize },

    #[error("subset is not closed under conjugation: {0}")]
    NotConjugationClosed(String),

    #[error("inadmissible triple: {0}")]
    Inadmissible(String),

    #[error("invalid envelope: {0}")]
    InvalidEnvelope(String),

    #[error("parse error at {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("identity needs {needed} but the table is not one")]
    Signature { needed: &'static str },

    #[error("order {n} exceeds the configured bound {bound} for {what}")]
    BoundExceeded {
        what: &'static str,
        n: usize,
        bound: usize,
    },

    #[error("unknown {kind} `{name}`")]
    Unknown { kind: &'static str, name: String },

    #[error("internal consistency failure: {0}")]
    Inconsistent(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

impl std::fmt::Display for Side {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Side::Left => f.write_str("left"),
            Side::Right => f.write_str("right"),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

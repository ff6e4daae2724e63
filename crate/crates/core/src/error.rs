use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

/// Which existence condition of `G(r,p,s,n)` failed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Divisibility {
    PDividesR,
    SDividesR,
    PsDividesRn,
}

impl core::fmt::Display for Divisibility {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(match self {
            Divisibility::PDividesR => "p | r",
            Divisibility::SDividesR => "s | r",
            Divisibility::PsDividesRn => "ps | rn",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("G({r},{p},{s},{n}) does not exist: {failed} fails")]
    Divisibility {
        r: u32,
        p: u32,
        s: u32,
        n: u32,
        failed: Divisibility,
    },
    #[error("group parameters must be positive")]
    NonPositive,
    #[error("elements belong to different groups")]
    GroupMismatch,
    #[error("color sum {sum} is not divisible by p = {p}")]
    Membership { sum: u64, p: u32 },
    #[error("group order {order} exceeds the enumeration budget {budget}")]
    BudgetExceeded { order: u128, budget: u64 },
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("value out of range: {0}")]
    Range(String),
    #[error("the alternative order is only defined on G(r,n) (p = s = 1)")]
    OrderScope,
    #[error("operation out of scope: {0}")]
    Scope(String),
    #[error("cyclotomic conductors differ: {0} vs {1}")]
    ConductorMismatch(u32, u32),
    #[error("q-bracket base must be a single scaled monomial")]
    NonMonomialBase,
    #[error("geometric inverse needs a monomial without constant term")]
    ConstantTerm,
    #[error("comparison region exceeds the valid region: {0}")]
    Region(String),
    #[error("series have different variable sets")]
    VariableMismatch,
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("character condition violated: {0}")]
    CharacterCondition(String),
    #[error("invalid composition: {0}")]
    Composition(String),
    #[error("bitableau shapes or contents are inconsistent: {0}")]
    ShapeMismatch(String),
}

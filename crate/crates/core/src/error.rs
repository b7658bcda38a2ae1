use thiserror::Error;

/// Errors raised by the counting, transform and bijection routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("argument must be positive, got 0")]
    ZeroArgument,

    #[error("walk has odd length {0}; an even length is required")]
    OddLength(usize),

    #[error("increment {0} is not +1 or -1")]
    InvalidIncrement(i64),

    #[error("cannot parse walk: unexpected character {0:?}")]
    ParseWalk(char),

    #[error("increments do not sum to zero; not a bridge")]
    NotABridge,

    #[error("bridge is not graphical")]
    NotGraphical,

    #[error(
        "lattice path does not end at ({expected}, {expected}): {ups} up and {rights} right steps"
    )]
    PathEndpoint {
        expected: usize,
        ups: usize,
        rights: usize,
    },

    #[error("{what}: n = {n} exceeds the cap of {cap}")]
    OutOfRange {
        what: &'static str,
        n: usize,
        cap: usize,
    },

    #[error("sequence must start with 1 at index 0")]
    LeadingTermNotOne,

    #[error("shift {shift} is not below {limit}, half the first irreducible part length")]
    ShiftTooLarge { shift: usize, limit: usize },

    #[error("diamond area {sigma} is not divisible by {n}")]
    AreaNotDivisible { sigma: i64, n: usize },

    #[error("cyclic shift map has {0} preimages, expected exactly one")]
    PreimageCount(usize),

    #[error("degree {degree} outside [0, {max}]")]
    DegreeOutOfRange { degree: usize, max: usize },

    #[error("degree sequence is not non-decreasing")]
    NotSorted,
}

pub type Result<T> = std::result::Result<T, Error>;

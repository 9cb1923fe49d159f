use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("malformed permutation: {0}")]
    MalformedPermutation(String),
    #[error("generator of degree {found} in a group of degree {expected}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("group of order {0} exceeds the element-enumeration limit")]
    GroupTooLarge(u64),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("cyclotomic modulus mismatch: {0} vs {1}")]
    ModulusMismatch(u32, u32),
    #[error("internal invariant breached: {0}")]
    Internal(String),
}

macro_rules! precondition {
    ($($arg:tt)*) => { $crate::error::Error::Precondition(alloc::format!($($arg)*)) };
}

macro_rules! internal {
    ($($arg:tt)*) => { $crate::error::Error::Internal(alloc::format!($($arg)*)) };
}

pub(crate) use internal;
pub(crate) use precondition;

//! Exact Hosoya (matchings) and Merrifield-Simmons (independent sets)
//! indices. Both counts include the empty configuration.
//!
//! Three engines are provided and are expected to agree wherever their
//! domains overlap:
//!
//! * [`count_brute`] enumerates subsets directly and is bounded in size.
//! * [`count_recursive`] uses the deletion identities with memoization.
//! * [`count_chain`] runs a transfer-matrix pass over an attachment sequence.

mod brute;
mod recursive;
mod transfer;

use std::fmt;
use std::str::FromStr;

use rug::Integer;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{build_chain, AttachmentSequence};

pub use brute::{count_brute, BRUTE_FORCE_LIMIT};
pub use recursive::count_recursive;
pub use transfer::{count_chain, hexagon_transfer, TransferMatrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum IndexKind {
    /// Number of matchings.
    Hosoya,
    /// Number of independent vertex sets.
    MerrifieldSimmons,
}

impl IndexKind {
    pub const ALL: [IndexKind; 2] = [Self::Hosoya, Self::MerrifieldSimmons];

    pub fn name(self) -> &'static str {
        match self {
            Self::Hosoya => "hosoya",
            Self::MerrifieldSimmons => "ms",
        }
    }
}

impl fmt::Display for IndexKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for IndexKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "hosoya" | "z" => Ok(Self::Hosoya),
            "ms" | "merrifield-simmons" | "merrifieldsimmons" => Ok(Self::MerrifieldSimmons),
            other => Err(Error::InvalidArgument(format!(
                "unknown index kind {other:?}, expected hosoya or ms"
            ))),
        }
    }
}

impl Serialize for IndexKind {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(self.name())
    }
}

/// A nonnegative arbitrary-precision count.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct BigCount(Integer);

impl BigCount {
    pub fn one() -> Self {
        Self(Integer::from(1))
    }

    pub fn as_integer(&self) -> &Integer {
        &self.0
    }

    pub fn into_integer(self) -> Integer {
        self.0
    }
}

impl From<u64> for BigCount {
    fn from(v: u64) -> Self {
        Self(Integer::from(v))
    }
}

impl From<Integer> for BigCount {
    fn from(v: Integer) -> Self {
        debug_assert!(v >= 0);
        Self(v)
    }
}

impl PartialEq<u64> for BigCount {
    fn eq(&self, other: &u64) -> bool {
        self.0 == *other
    }
}

impl PartialOrd<u64> for BigCount {
    fn partial_cmp(&self, other: &u64) -> Option<std::cmp::Ordering> {
        self.0.partial_cmp(other)
    }
}

impl fmt::Display for BigCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl FromStr for BigCount {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let v: Integer = s
            .trim()
            .parse()
            .map_err(|_| Error::InvalidArgument(format!("{s:?} is not a decimal integer")))?;
        if v < 0 {
            return Err(Error::InvalidArgument(format!("{s:?} is negative")));
        }
        Ok(Self(v))
    }
}

impl Serialize for BigCount {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(&self.0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Engine {
    Chain,
    Brute,
    Recursive,
}

impl Engine {
    pub fn name(self) -> &'static str {
        match self {
            Self::Chain => "chain",
            Self::Brute => "brute",
            Self::Recursive => "recursive",
        }
    }
}

impl FromStr for Engine {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "chain" => Ok(Self::Chain),
            "brute" => Ok(Self::Brute),
            "recursive" => Ok(Self::Recursive),
            other => Err(Error::InvalidArgument(format!(
                "unknown engine {other:?}, expected chain, brute or recursive"
            ))),
        }
    }
}

/// Index of the chain realized by `seq`, using the requested engine.
pub fn count(seq: &AttachmentSequence, kind: IndexKind, engine: Engine) -> Result<BigCount> {
    match engine {
        Engine::Chain => Ok(count_chain(seq, kind)),
        Engine::Brute => count_brute(&build_chain(seq), kind),
        Engine::Recursive => Ok(count_recursive(&build_chain(seq), kind)),
    }
}

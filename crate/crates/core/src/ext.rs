//! Extended integers used by the dynamic programs, and activation rounds.

use std::fmt;
use std::ops::Add;

/// The round in which a node becomes active, or `Never` if it is not active
/// within the latency bound. `Never` orders after every finite round.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Round {
    At(u32),
    Never,
}

impl Round {
    pub fn is_within(self, tau: u32) -> bool {
        matches!(self, Round::At(r) if r <= tau)
    }

    pub fn finite(self) -> Option<u32> {
        match self {
            Round::At(r) => Some(r),
            Round::Never => None,
        }
    }
}

impl fmt::Display for Round {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Round::At(r) => write!(f, "{r}"),
            Round::Never => f.write_str("inf"),
        }
    }
}

/// A node count in a max-plus table, or `−∞` for an infeasible cell.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExtCount(i32);

impl ExtCount {
    pub const NEG_INF: ExtCount = ExtCount(i32::MIN);
    pub const ZERO: ExtCount = ExtCount(0);

    pub fn new(v: i32) -> Self {
        debug_assert!(v > i32::MIN);
        ExtCount(v)
    }

    pub fn is_finite(self) -> bool {
        self != Self::NEG_INF
    }

    pub fn value(self) -> Option<i32> {
        self.is_finite().then_some(self.0)
    }

    /// `1 + self`, keeping `−∞` absorbing.
    pub fn succ(self) -> Self {
        self + ExtCount(1)
    }
}

impl Add for ExtCount {
    type Output = ExtCount;

    fn add(self, rhs: ExtCount) -> ExtCount {
        if self.is_finite() && rhs.is_finite() {
            ExtCount(self.0 + rhs.0)
        } else {
            Self::NEG_INF
        }
    }
}

impl fmt::Debug for ExtCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.value() {
            Some(v) => write!(f, "{v}"),
            None => f.write_str("-inf"),
        }
    }
}

impl fmt::Display for ExtCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// A cost in a min-plus table, or `+∞` for an infeasible cell.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExtCost(i64);

impl ExtCost {
    pub const INF: ExtCost = ExtCost(i64::MAX);
    pub const ZERO: ExtCost = ExtCost(0);

    pub fn new(v: i64) -> Self {
        debug_assert!(v < i64::MAX);
        ExtCost(v)
    }

    pub fn is_finite(self) -> bool {
        self != Self::INF
    }

    pub fn value(self) -> Option<i64> {
        self.is_finite().then_some(self.0)
    }
}

impl Add for ExtCost {
    type Output = ExtCost;

    fn add(self, rhs: ExtCost) -> ExtCost {
        if self.is_finite() && rhs.is_finite() {
            ExtCost(self.0.saturating_add(rhs.0).min(i64::MAX - 1))
        } else {
            Self::INF
        }
    }
}

impl fmt::Debug for ExtCost {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.value() {
            Some(v) => write!(f, "{v}"),
            None => f.write_str("inf"),
        }
    }
}

impl fmt::Display for ExtCost {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

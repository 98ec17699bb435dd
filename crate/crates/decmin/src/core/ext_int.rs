use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Sub};

/// An integer extended with minus infinity.
///
/// Supermodular set functions take values in `Z ∪ {-inf}`, with `-inf`
/// marking subsets that impose no lower-bound constraint of their own (the
/// constraint `x(X) >= -inf` is vacuous).  Minus infinity is absorbing under
/// addition and subtraction of finite values; plus infinity never arises, so
/// `ExtInt` does not represent it.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum ExtInt {
    NegInf,
    Finite(i64),
}

impl ExtInt {
    /// Whether the value is finite.
    pub fn is_finite(self) -> bool {
        matches!(self, ExtInt::Finite(_))
    }

    /// The finite value, if any.
    pub fn finite(self) -> Option<i64> {
        match self {
            ExtInt::Finite(v) => Some(v),
            ExtInt::NegInf => None,
        }
    }

    /// The finite value, panicking on minus infinity.
    ///
    /// Reserve this for contexts where finiteness was already checked.
    pub fn expect_finite(self, what: &str) -> i64 {
        match self {
            ExtInt::Finite(v) => v,
            ExtInt::NegInf => panic!("{what} is -inf where a finite value is required"),
        }
    }

    /// Maximum of two extended integers.
    pub fn max(self, other: ExtInt) -> ExtInt {
        if self >= other {
            self
        } else {
            other
        }
    }
}

impl From<i64> for ExtInt {
    fn from(v: i64) -> Self {
        ExtInt::Finite(v)
    }
}

impl PartialOrd for ExtInt {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExtInt {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (ExtInt::NegInf, ExtInt::NegInf) => Ordering::Equal,
            (ExtInt::NegInf, ExtInt::Finite(_)) => Ordering::Less,
            (ExtInt::Finite(_), ExtInt::NegInf) => Ordering::Greater,
            (ExtInt::Finite(a), ExtInt::Finite(b)) => a.cmp(b),
        }
    }
}

impl Add for ExtInt {
    type Output = ExtInt;
    fn add(self, rhs: ExtInt) -> ExtInt {
        match (self, rhs) {
            (ExtInt::Finite(a), ExtInt::Finite(b)) => ExtInt::Finite(a + b),
            _ => ExtInt::NegInf,
        }
    }
}

impl Add<i64> for ExtInt {
    type Output = ExtInt;
    fn add(self, rhs: i64) -> ExtInt {
        match self {
            ExtInt::Finite(a) => ExtInt::Finite(a + rhs),
            ExtInt::NegInf => ExtInt::NegInf,
        }
    }
}

impl Sub<i64> for ExtInt {
    type Output = ExtInt;
    fn sub(self, rhs: i64) -> ExtInt {
        match self {
            ExtInt::Finite(a) => ExtInt::Finite(a - rhs),
            ExtInt::NegInf => ExtInt::NegInf,
        }
    }
}

impl fmt::Display for ExtInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtInt::Finite(v) => write!(f, "{v}"),
            ExtInt::NegInf => write!(f, "-inf"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ordering_puts_neg_inf_below_everything() {
        assert!(ExtInt::NegInf < ExtInt::Finite(i64::MIN));
        assert!(ExtInt::Finite(-1) < ExtInt::Finite(0));
        assert_eq!(ExtInt::NegInf.max(ExtInt::Finite(-7)), ExtInt::Finite(-7));
    }

    #[test]
    fn neg_inf_absorbs_arithmetic() {
        assert_eq!(ExtInt::NegInf + ExtInt::Finite(3), ExtInt::NegInf);
        assert_eq!(ExtInt::NegInf + 3, ExtInt::NegInf);
        assert_eq!(ExtInt::NegInf - 3, ExtInt::NegInf);
        assert_eq!(ExtInt::Finite(2) + ExtInt::Finite(3), ExtInt::Finite(5));
        assert_eq!(ExtInt::Finite(2) - 3, ExtInt::Finite(-1));
    }
}

//! Sign vectors and their algebra: composition, separation sets, the
//! conformal partial order, restriction, supports and opposites.
//!
//! A sign vector is a function from a ground set to {-, 0, +}. Ground
//! elements are stable indices into an ordered ground list kept by the
//! caller; a vector is stored as a pair of bitmasks (one bit per element for
//! `+` and for `-`), which makes composition and separation branch-free.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

/// One of `-`, `0`, `+`, with the multiplication `++ = -- = +`, `+- = -`,
/// and anything times `0` equal to `0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Minus,
    Zero,
    Plus,
}

impl Sign {
    pub fn of_int(x: i64) -> Sign {
        match x.cmp(&0) {
            Ordering::Less => Sign::Minus,
            Ordering::Equal => Sign::Zero,
            Ordering::Greater => Sign::Plus,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Sign::Minus => '-',
            Sign::Zero => '0',
            Sign::Plus => '+',
        }
    }

    /// The order 0 < + and 0 < -, with + and - incomparable.
    pub fn leq(self, other: Sign) -> bool {
        self == Sign::Zero || self == other
    }
}

impl std::ops::Mul for Sign {
    type Output = Sign;

    fn mul(self, other: Sign) -> Sign {
        match (self, other) {
            (Sign::Zero, _) | (_, Sign::Zero) => Sign::Zero,
            (a, b) if a == b => Sign::Plus,
            _ => Sign::Minus,
        }
    }
}

impl std::ops::Neg for Sign {
    type Output = Sign;

    fn neg(self) -> Sign {
        match self {
            Sign::Minus => Sign::Plus,
            Sign::Zero => Sign::Zero,
            Sign::Plus => Sign::Minus,
        }
    }
}

/// Maximum supported ground-set size (bitmask backed).
pub const MAX_GROUND: usize = 64;

/// A sign vector on a ground set of `len` elements.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignVector {
    plus: u64,
    minus: u64,
    len: u8,
}

impl SignVector {
    pub fn zero(len: usize) -> SignVector {
        assert!(len <= MAX_GROUND, "ground set too large");
        SignVector { plus: 0, minus: 0, len: len as u8 }
    }

    pub fn from_signs(signs: &[Sign]) -> SignVector {
        let mut v = SignVector::zero(signs.len());
        for (i, &s) in signs.iter().enumerate() {
            v.set(i, s);
        }
        v
    }

    pub fn len(&self) -> usize {
        self.len as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, e: usize) -> Sign {
        debug_assert!(e < self.len());
        if self.plus >> e & 1 == 1 {
            Sign::Plus
        } else if self.minus >> e & 1 == 1 {
            Sign::Minus
        } else {
            Sign::Zero
        }
    }

    pub fn set(&mut self, e: usize, s: Sign) {
        assert!(e < self.len());
        self.plus &= !(1 << e);
        self.minus &= !(1 << e);
        match s {
            Sign::Plus => self.plus |= 1 << e,
            Sign::Minus => self.minus |= 1 << e,
            Sign::Zero => {}
        }
    }

    /// Support as a bitmask.
    pub fn support_mask(&self) -> u64 {
        self.plus | self.minus
    }

    /// Elements with sign `+`, as a bitmask.
    pub fn plus_mask(&self) -> u64 {
        self.plus
    }

    /// Elements with sign `-`, as a bitmask.
    pub fn minus_mask(&self) -> u64 {
        self.minus
    }

    /// Whether the two vectors agree on every element selected by `mask`.
    pub fn agrees_on(&self, other: &SignVector, mask: u64) -> bool {
        assert_eq!(self.len, other.len, "ground set mismatch");
        self.plus & mask == other.plus & mask && self.minus & mask == other.minus & mask
    }

    /// Support as a sorted list of element indices.
    pub fn support(&self) -> Vec<usize> {
        (0..self.len()).filter(|&e| self.support_mask() >> e & 1 == 1).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.support_mask() == 0
    }

    pub fn opposite(&self) -> SignVector {
        SignVector { plus: self.minus, minus: self.plus, len: self.len }
    }

    /// Composition: `(l o m)(e) = l(e)` on the support of `l`, else `m(e)`.
    pub fn compose(&self, other: &SignVector) -> SignVector {
        assert_eq!(self.len, other.len, "ground set mismatch");
        let free = !self.support_mask();
        SignVector {
            plus: self.plus | (other.plus & free),
            minus: self.minus | (other.minus & free),
            len: self.len,
        }
    }

    /// Separation set `{f : l(f) = -m(f) != 0}` as a bitmask.
    pub fn separation_mask(&self, other: &SignVector) -> u64 {
        assert_eq!(self.len, other.len, "ground set mismatch");
        (self.plus & other.minus) | (self.minus & other.plus)
    }

    /// Separation set as a sorted list of element indices.
    pub fn separation(&self, other: &SignVector) -> Vec<usize> {
        let mask = self.separation_mask(other);
        (0..self.len()).filter(|&e| mask >> e & 1 == 1).collect()
    }

    /// Conformal partial order: `l <= m` iff `l(e) <= m(e)` for all `e`.
    pub fn leq(&self, other: &SignVector) -> bool {
        assert_eq!(self.len, other.len, "ground set mismatch");
        self.plus & !other.plus == 0 && self.minus & !other.minus == 0
    }

    pub fn lt(&self, other: &SignVector) -> bool {
        self.leq(other) && self != other
    }

    /// Restriction to the given elements, in the order listed.
    pub fn restrict(&self, elements: &[usize]) -> SignVector {
        let mut v = SignVector::zero(elements.len());
        for (i, &e) in elements.iter().enumerate() {
            assert!(e < self.len(), "restriction to a non-element");
            v.set(i, self.get(e));
        }
        v
    }

    pub fn iter(&self) -> impl Iterator<Item = Sign> + '_ {
        (0..self.len()).map(move |e| self.get(e))
    }
}

impl fmt::Display for SignVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in self.iter() {
            write!(f, "{}", s.as_char())?;
        }
        Ok(())
    }
}

impl fmt::Debug for SignVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SignVector({self})")
    }
}

/// Error parsing a sign vector from text.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid sign character {0:?} (expected '+', '-' or '0')")]
pub struct ParseSignError(pub char);

impl FromStr for SignVector {
    type Err = ParseSignError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut signs = Vec::with_capacity(s.len());
        for c in s.chars() {
            signs.push(match c {
                '+' => Sign::Plus,
                '-' => Sign::Minus,
                '0' => Sign::Zero,
                other => return Err(ParseSignError(other)),
            });
        }
        Ok(SignVector::from_signs(&signs))
    }
}

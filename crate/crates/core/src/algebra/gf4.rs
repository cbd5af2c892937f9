//! Arithmetic in the four-element field `{0, 1, α, α²}`.
//!
//! Elements are stored in two bits: `0 → 0`, `1 → 1`, `2 → α`, `3 → α²`.
//! With `α² = α + 1` addition is plain XOR of the encodings.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign};

const MUL: [[u8; 4]; 4] = [[0, 0, 0, 0], [0, 1, 2, 3], [0, 2, 3, 1], [0, 3, 1, 2]];

#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct Gf4(u8);

impl Gf4 {
    pub const ZERO: Gf4 = Gf4(0);
    pub const ONE: Gf4 = Gf4(1);
    pub const ALPHA: Gf4 = Gf4(2);
    pub const ALPHA2: Gf4 = Gf4(3);

    /// Builds an element from its two-bit encoding. Only the low two bits are used.
    pub const fn from_bits(bits: u8) -> Self {
        Gf4(bits & 3)
    }

    pub const fn bits(self) -> u8 {
        self.0
    }

    /// `α^e`, with the exponent taken modulo 3.
    pub const fn alpha_pow(e: usize) -> Self {
        match e % 3 {
            0 => Gf4::ONE,
            1 => Gf4::ALPHA,
            _ => Gf4::ALPHA2,
        }
    }

    pub fn square(self) -> Self {
        self * self
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inverse(self) -> Option<Self> {
        match self.0 {
            0 => None,
            1 => Some(Gf4::ONE),
            2 => Some(Gf4::ALPHA2),
            _ => Some(Gf4::ALPHA),
        }
    }

    pub fn all() -> [Gf4; 4] {
        [Gf4::ZERO, Gf4::ONE, Gf4::ALPHA, Gf4::ALPHA2]
    }
}

// characteristic 2: addition is XOR of the bit patterns
#[allow(clippy::suspicious_arithmetic_impl)]
impl Add for Gf4 {
    type Output = Gf4;
    #[inline]
    fn add(self, rhs: Gf4) -> Gf4 {
        Gf4(self.0 ^ rhs.0)
    }
}

#[allow(clippy::suspicious_op_assign_impl)]
impl AddAssign for Gf4 {
    #[inline]
    fn add_assign(&mut self, rhs: Gf4) {
        self.0 ^= rhs.0;
    }
}

impl Mul for Gf4 {
    type Output = Gf4;
    #[inline]
    fn mul(self, rhs: Gf4) -> Gf4 {
        Gf4(MUL[self.0 as usize][rhs.0 as usize])
    }
}

impl MulAssign for Gf4 {
    #[inline]
    fn mul_assign(&mut self, rhs: Gf4) {
        *self = *self * rhs;
    }
}

impl fmt::Debug for Gf4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Gf4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self.0 {
            0 => "0",
            1 => "1",
            2 => "a",
            _ => "a^2",
        };
        f.write_str(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn characteristic_two() {
        for x in Gf4::all() {
            assert_eq!(x + x, Gf4::ZERO);
        }
    }

    #[test]
    fn alpha_relations() {
        let a = Gf4::ALPHA;
        assert_eq!(a * a * a, Gf4::ONE);
        assert_eq!(a * a + a + Gf4::ONE, Gf4::ZERO);
        assert_eq!(a.square(), Gf4::ALPHA2);
        assert_eq!(Gf4::alpha_pow(4), a);
    }

    #[test]
    fn field_axioms() {
        for x in Gf4::all() {
            for y in Gf4::all() {
                assert_eq!(x * y, y * x);
                for z in Gf4::all() {
                    assert_eq!(x * (y + z), x * y + x * z);
                    assert_eq!((x * y) * z, x * (y * z));
                }
            }
            if let Some(inv) = x.inverse() {
                assert_eq!(x * inv, Gf4::ONE);
            } else {
                assert!(x.is_zero());
            }
        }
    }
}

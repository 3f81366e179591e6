use crate::error::{Error, Result};

/// The prime field F_p. Elements are canonical representatives `0..p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Field {
    p: u32,
}

impl Field {
    pub const DEFAULT_PRIME: u32 = 101;

    pub fn new(p: u32) -> Result<Self> {
        if is_prime(p) {
            Ok(Field { p })
        } else {
            Err(Error::NotPrime(p))
        }
    }

    pub fn f2() -> Self {
        Field { p: 2 }
    }

    #[inline]
    pub fn prime(self) -> u32 {
        self.p
    }

    #[inline]
    pub fn reduce(self, v: i64) -> u32 {
        v.rem_euclid(self.p as i64) as u32
    }

    #[inline]
    pub fn add(self, a: u32, b: u32) -> u32 {
        let s = a as u64 + b as u64;
        (s % self.p as u64) as u32
    }

    #[inline]
    pub fn sub(self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn neg(self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.p as u64) as u32
    }

    /// Multiplicative inverse of a nonzero element.
    pub fn inv(self, a: u32) -> u32 {
        assert!(!a.is_multiple_of(self.p), "zero has no inverse");
        // Extended Euclid over i64.
        let (mut r0, mut r1) = (self.p as i64, a as i64);
        let (mut t0, mut t1) = (0i64, 1i64);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        self.reduce(t0)
    }

    /// Iterator over all field elements, in increasing order.
    pub fn elements(self) -> impl Iterator<Item = u32> {
        0..self.p
    }
}

impl Default for Field {
    fn default() -> Self {
        Field { p: Self::DEFAULT_PRIME }
    }
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p as u64 {
        if (p as u64).is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_composites() {
        assert_eq!(Field::new(1), Err(Error::NotPrime(1)));
        assert_eq!(Field::new(91), Err(Error::NotPrime(91)));
        assert!(Field::new(2).is_ok());
        assert!(Field::new(101).is_ok());
    }

    #[test]
    fn inverses() {
        for p in [2, 3, 7, 101] {
            let k = Field::new(p).unwrap();
            for a in 1..p {
                assert_eq!(k.mul(a, k.inv(a)), 1);
            }
        }
    }

    #[test]
    fn reduce_negative() {
        let k = Field::new(7).unwrap();
        assert_eq!(k.reduce(-1), 6);
        assert_eq!(k.reduce(-14), 0);
        assert_eq!(k.sub(2, 5), 4);
    }
}

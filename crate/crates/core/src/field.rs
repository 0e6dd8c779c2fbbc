//! Prime fields `F_p` with `p <= 251`.

use crate::error::{Error, Result};

/// Largest modulus accepted by the workbench.
pub const MAX_PRIME: u32 = 251;

/// Residue of an element of `F_p`, always in `[0, p)`.
pub type Scalar = u32;

/// The prime field `F_p`. Cheap to copy; every matrix carries one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fp {
    p: u32,
}

impl Fp {
    pub fn new(p: u32) -> Result<Self> {
        if !(2..=MAX_PRIME).contains(&p) || !is_prime(p) {
            return Err(Error::InvalidField(p));
        }
        Ok(Fp { p })
    }

    pub fn p(self) -> u32 {
        self.p
    }

    #[inline]
    pub fn add(self, a: Scalar, b: Scalar) -> Scalar {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(self, a: Scalar, b: Scalar) -> Scalar {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(self, a: Scalar) -> Scalar {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(self, a: Scalar, b: Scalar) -> Scalar {
        (a * b) % self.p
    }

    /// `a * b + c`
    #[inline]
    pub fn mul_add(self, a: Scalar, b: Scalar, c: Scalar) -> Scalar {
        (a * b + c) % self.p
    }

    pub fn pow(self, mut base: Scalar, mut exp: u32) -> Scalar {
        let mut acc = 1 % self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(self, a: Scalar) -> Scalar {
        assert!(!a.is_multiple_of(self.p), "inverse of zero in F_{}", self.p);
        self.pow(a % self.p, self.p - 2)
    }

    pub fn reduce(self, v: i64) -> Scalar {
        v.rem_euclid(self.p as i64) as Scalar
    }

    pub fn elements(self) -> impl Iterator<Item = Scalar> {
        0..self.p
    }
}

fn is_prime(n: u32) -> bool {
    n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_primes() {
        assert!(Fp::new(4).is_err());
        assert!(Fp::new(1).is_err());
        assert!(Fp::new(257).is_err());
        assert!(Fp::new(251).is_ok());
    }

    #[test]
    fn inverses() {
        for p in [2, 3, 5, 7, 251] {
            let f = Fp::new(p).unwrap();
            for a in 1..p {
                assert_eq!(f.mul(a, f.inv(a)), 1);
            }
        }
        let f3 = Fp::new(3).unwrap();
        assert_eq!(f3.inv(2), 2);
    }
}

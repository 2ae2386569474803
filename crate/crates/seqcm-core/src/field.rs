//! The prime field F_p and the ambient polynomial ring descriptor.

use serde::Serialize;

/// Default prime modulus. Large enough that random coordinate changes
/// behave generically at desk scale.
pub const DEFAULT_PRIME: u32 = 32003;

/// Descriptor of the standard-graded polynomial ring k[x_1,...,x_n] with
/// k = F_p. All arithmetic on coefficients goes through this struct.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PolyRing {
    /// Number of variables, n >= 1.
    pub n: usize,
    /// Prime modulus.
    pub p: u32,
}

impl PolyRing {
    pub fn new(n: usize, p: u32) -> Self {
        assert!(n >= 1, "ring needs at least one variable");
        assert!(is_prime(p), "modulus {p} is not prime");
        PolyRing { n, p }
    }

    /// Ring over the same prime with the last variable removed.
    pub fn subring(&self) -> Self {
        assert!(self.n >= 2, "cannot drop a variable from a univariate ring");
        PolyRing { n: self.n - 1, p: self.p }
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        let s = a as u64 + b as u64;
        let p = self.p as u64;
        (if s >= p { s - p } else { s }) as u32
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        if a >= b { a - b } else { a + self.p - b }
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        if a == 0 { 0 } else { self.p - a }
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.p as u64) as u32
    }

    /// Inverse by Fermat's little theorem.
    pub fn inv(&self, a: u32) -> u32 {
        assert!(a != 0, "inverse of zero");
        self.pow(a, self.p as u64 - 2)
    }

    pub fn div(&self, a: u32, b: u32) -> u32 {
        self.mul(a, self.inv(b))
    }

    pub fn pow(&self, mut base: u32, mut exp: u64) -> u32 {
        let mut acc = 1u32;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Reduce a signed integer into [0, p).
    pub fn from_i64(&self, v: i64) -> u32 {
        let p = self.p as i64;
        (((v % p) + p) % p) as u32
    }
}

/// Trial-division primality test; moduli here are small.
pub fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    if p % 2 == 0 {
        return p == 2;
    }
    let mut d = 3u64;
    let p64 = p as u64;
    while d * d <= p64 {
        if p64 % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_prime_is_prime() {
        assert!(is_prime(DEFAULT_PRIME));
        assert!(is_prime(2));
        assert!(is_prime(101));
        assert!(!is_prime(1));
        assert!(!is_prime(32001));
    }

    #[test]
    fn field_arithmetic() {
        let r = PolyRing::new(2, 7);
        assert_eq!(r.add(5, 4), 2);
        assert_eq!(r.sub(2, 5), 4);
        assert_eq!(r.mul(3, 5), 1);
        assert_eq!(r.inv(3), 5);
        assert_eq!(r.neg(0), 0);
        assert_eq!(r.from_i64(-1), 6);
    }

    #[test]
    fn inverse_roundtrip_default_prime() {
        let r = PolyRing::new(1, DEFAULT_PRIME);
        for a in [1u32, 2, 17, 31999, 32002] {
            assert_eq!(r.mul(a, r.inv(a)), 1);
        }
    }
}

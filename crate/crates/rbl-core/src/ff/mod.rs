//! Finite-field arithmetic and the brute-force odometer over F_p used to
//! cross-check the operator classification on small primes.

use crate::error::{Error, Result};

/// Largest modulus the enumeration accepts. p^9 candidate matrices make
/// anything beyond this impractical, and the soundness tests are tuned to
/// this range.
pub const MAX_MODULUS: u64 = 13;

/// Modular inverse for 0 < x < p with p prime. Uses Fermat's little theorem;
/// the moduli here are tiny so there is no need for anything cleverer.
pub fn inv_mod(x: u64, p: u64) -> u64 {
    debug_assert!(x % p != 0, "inverse of zero mod {p}");
    pow_mod(x % p, p - 2, p)
}

pub fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// The enumeration and specialization routines accept odd primes up to
/// [`MAX_MODULUS`] only.
pub fn validate_modulus(p: u64) -> Result<()> {
    if !is_prime(p) || p == 2 || p > MAX_MODULUS {
        return Err(Error::UnsupportedModulus(p));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_times_value_is_one() {
        for p in [3, 5, 7, 11, 13] {
            for x in 1..p {
                assert_eq!(x * inv_mod(x, p) % p, 1, "x={x} p={p}");
            }
        }
    }

    #[test]
    fn modulus_validation() {
        assert!(validate_modulus(3).is_ok());
        assert!(validate_modulus(13).is_ok());
        for bad in [0, 1, 2, 4, 9, 15, 17] {
            assert_eq!(
                validate_modulus(bad).unwrap_err(),
                Error::UnsupportedModulus(bad)
            );
        }
    }
}

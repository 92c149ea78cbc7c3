use num_bigint::BigUint;
use num_traits::One;

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// The exponent of the prime `p` in the Minkowski bound for `GL_n(Q)`:
/// `sum_{k >= 0} floor(n / (p^k (p - 1)))`. The order of any finite
/// subgroup of `GL_n(Q)` divides the product of `p^exponent` over all
/// primes.
pub fn minkowski_exponent(n: u32, p: u32) -> u32 {
    assert!(is_prime(p), "p must be prime");
    let mut sum = 0;
    let mut denom = (p - 1) as u64;
    while denom <= n as u64 {
        sum += n as u64 / denom;
        denom *= p as u64;
    }
    sum as u32
}

/// The full Minkowski bound `M(n)`: the product over primes of
/// `p^minkowski_exponent(n, p)`. Only primes with `p - 1 <= n` contribute.
pub fn minkowski_bound(n: u32) -> BigUint {
    let mut bound = BigUint::one();
    for p in 2..=n + 1 {
        if !is_prime(p) {
            continue;
        }
        for _ in 0..minkowski_exponent(n, p) {
            bound *= p;
        }
    }
    bound
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_exponents() {
        assert_eq!(minkowski_exponent(2, 2), 3);
        assert_eq!(minkowski_exponent(2, 3), 1);
        assert_eq!(minkowski_exponent(3, 2), 4);
        assert_eq!(minkowski_exponent(3, 3), 1);
        assert_eq!(minkowski_exponent(4, 2), 7);
        assert_eq!(minkowski_exponent(4, 3), 2);
        assert_eq!(minkowski_exponent(4, 5), 1);
        assert_eq!(minkowski_exponent(4, 7), 0);
    }

    #[test]
    fn bounds() {
        assert_eq!(minkowski_bound(1), 2u32.into());
        assert_eq!(minkowski_bound(2), 24u32.into());
        assert_eq!(minkowski_bound(3), 48u32.into());
        assert_eq!(minkowski_bound(4), 5760u32.into());
        // A value big enough to exercise the BigUint path:
        // M(10) = 2^18 * 3^6 * 5^2 * 7 * 11 = 367873228800.
        assert_eq!(minkowski_bound(10), 367873228800u64.into());
    }

    #[test]
    #[should_panic(expected = "p must be prime")]
    fn rejects_composite_p() {
        minkowski_exponent(3, 4);
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Largest k with p^k dividing n. v_p(0) is undefined; callers pass group orders.
pub fn v_p(mut n: usize, p: u64) -> u32 {
    assert!(n > 0 && p >= 2);
    let p = p as usize;
    let mut k = 0;
    while n % p == 0 {
        n /= p;
        k += 1;
    }
    k
}

pub fn pow_usize(p: u64, k: u32) -> usize {
    (p as usize).pow(k)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes() {
        let ps: Vec<u64> = (0..20).filter(|&n| is_prime(n)).collect();
        assert_eq!(ps, vec![2, 3, 5, 7, 11, 13, 17, 19]);
    }

    #[test]
    fn valuations() {
        assert_eq!(v_p(24, 2), 3);
        assert_eq!(v_p(24, 3), 1);
        assert_eq!(v_p(336, 2), 4);
        assert_eq!(v_p(7, 2), 0);
    }
}

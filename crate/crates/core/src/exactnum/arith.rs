//! Small-integer number theory used throughout: factorisation, Euler phi,
//! Möbius, modular powers and multiplicative orders.

use num_integer::Integer;

pub fn gcd(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

pub fn lcm(a: u64, b: u64) -> u64 {
    a.lcm(&b)
}

/// Trial-division primality test.
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

/// Prime factorisation as `(prime, exponent)` pairs in increasing order.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            let mut e = 0;
            while n % d == 0 {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn euler_phi(n: u64) -> u64 {
    factorize(n).into_iter().fold(n, |acc, (p, _)| acc / p * (p - 1))
}

pub fn mobius(n: u64) -> i64 {
    let f = factorize(n);
    if f.iter().any(|&(_, e)| e > 1) {
        0
    } else if f.len() % 2 == 0 {
        1
    } else {
        -1
    }
}

/// All positive divisors of `n`, sorted ascending.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut out = vec![1u64];
    for (p, e) in factorize(n) {
        let len = out.len();
        let mut pk = 1;
        for _ in 0..e {
            pk *= p;
            for i in 0..len {
                out.push(out[i] * pk);
            }
        }
    }
    out.sort_unstable();
    out
}

pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Multiplicative order of `x` modulo `m`, or `None` when `x` is not a unit.
pub fn mult_order(x: u64, m: u64) -> Option<u64> {
    if m == 1 {
        return Some(1);
    }
    if gcd(x % m, m) != 1 {
        return None;
    }
    let group_order = euler_phi(m);
    let mut order = group_order;
    for (p, _) in factorize(group_order) {
        while order % p == 0 && pow_mod(x, order / p, m) == 1 {
            order /= p;
        }
    }
    Some(order)
}

/// Units of `Z/mZ` in increasing order (`[0]` for `m = 1`).
pub fn units_mod(m: u64) -> Vec<u64> {
    if m == 1 {
        return vec![0];
    }
    (1..m).filter(|&k| gcd(k, m) == 1).collect()
}

/// Inverse of a unit modulo `m`.
pub fn inv_mod(x: u64, m: u64) -> Option<u64> {
    if m == 1 {
        return Some(0);
    }
    let (a, m_i) = ((x % m) as i128, m as i128);
    let ext = a.extended_gcd(&m_i);
    if ext.gcd != 1 {
        return None;
    }
    Some(ext.x.rem_euclid(m_i) as u64)
}

/// p-adic valuation of `x` (with `v(0)` reported as `cap`).
pub fn valuation(x: u64, p: u64, cap: u32) -> u32 {
    if x == 0 {
        return cap;
    }
    let (mut x, mut v) = (x, 0);
    while x % p == 0 {
        x /= p;
        v += 1;
    }
    v.min(cap)
}

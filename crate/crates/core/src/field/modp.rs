//! Arithmetic modulo the Mersenne prime `2^61 - 1`.

pub const MODULUS: u64 = (1 << 61) - 1;

#[inline]
pub fn reduce128(x: u128) -> u64 {
    let lo = (x as u64) & MODULUS;
    let hi = (x >> 61) as u64;
    let mut r = lo + (hi & MODULUS) + ((x >> 122) as u64);
    while r >= MODULUS {
        r -= MODULUS;
    }
    r
}

#[inline]
pub fn add(a: u64, b: u64) -> u64 {
    let s = a + b;
    if s >= MODULUS {
        s - MODULUS
    } else {
        s
    }
}

#[inline]
pub fn sub(a: u64, b: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + MODULUS - b
    }
}

#[inline]
pub fn mul(a: u64, b: u64) -> u64 {
    reduce128(a as u128 * b as u128)
}

pub fn pow(mut base: u64, mut exp: u64) -> u64 {
    let mut acc = 1;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul(acc, base);
        }
        base = mul(base, base);
        exp >>= 1;
    }
    acc
}

pub fn inv(a: u64) -> Option<u64> {
    if a == 0 {
        None
    } else {
        Some(pow(a, MODULUS - 2))
    }
}

/// `a^e` for a signed exponent; `None` when `a = 0` and `e < 0`.
pub fn pow_signed(a: u64, e: i64) -> Option<u64> {
    if e >= 0 {
        Some(pow(a, e as u64))
    } else {
        inv(a).map(|ai| pow(ai, e.unsigned_abs()))
    }
}

pub fn from_i128(c: i128) -> u64 {
    let m = MODULUS as i128;
    let r = c.rem_euclid(m);
    r as u64
}

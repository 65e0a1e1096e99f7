//! Exact big-integer combinatorial primitives and modular binomial
//! coefficients via Lucas' theorem and its Davis-Webb mod-p² refinement.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::partitions::IntPartition;
use crate::{Error, Result};

/// Binomial coefficient with the zero convention: `C(n,k) = 0` whenever
/// `k < 0`, `k > n >= 0`, or `n < 0`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut res = BigInt::one();
    for i in 0..k {
        res = res * (n - i) / (i + 1);
    }
    res
}

/// Multinomial coefficient `k! / (parts_1! ... parts_r!)`.
/// The parts must be non-negative and sum to `k`.
pub fn multinomial(k: u64, parts: &[u64]) -> Result<BigInt> {
    let sum: u64 = parts.iter().sum();
    if sum != k {
        return Err(Error::InvalidArgument(format!(
            "multinomial parts sum to {sum}, expected {k}"
        )));
    }
    // C(k, p1) * C(k-p1, p2) * ...
    let mut res = BigInt::one();
    let mut rem = k as i64;
    for &p in parts {
        res *= binomial(rem, p as i64);
        rem -= p as i64;
    }
    Ok(res)
}

/// Reduced multinomial coefficient: the multinomial over the parts of `j`
/// divided by the factorials of the part multiplicities. Counts set
/// partitions of `[k]` with the block-size profile `j`; always an integer.
pub fn reduced_multinomial(k: u64, j: &IntPartition) -> Result<BigInt> {
    if j.weight() != k {
        return Err(Error::InvalidArgument(format!(
            "partition of weight {} is not a partition of {k}",
            j.weight()
        )));
    }
    let m = multinomial(k, j.parts())?;
    let mut denom = BigInt::one();
    for t in j.multiplicities().values() {
        denom *= factorial(*t);
    }
    let (q, r) = num_integer::Integer::div_rem(&m, &denom);
    debug_assert!(r.is_zero());
    let _ = r;
    Ok(q)
}

pub fn factorial(n: u64) -> BigInt {
    let mut res = BigInt::one();
    for i in 2..=n {
        res *= i;
    }
    res
}

/// Little-endian digit expansion of a non-negative integer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BaseDigits {
    pub base: u64,
    pub digits: Vec<u64>,
}

impl BaseDigits {
    pub fn value(&self) -> BigInt {
        let mut acc = BigInt::zero();
        for &d in self.digits.iter().rev() {
            acc = acc * self.base + d;
        }
        acc
    }
}

/// Little-endian base-`base` digits of `n`, zero-padded to at least
/// `min_length` digits. Digit 0 is the unit place.
pub fn to_digits(n: u64, base: u64, min_length: usize) -> Result<BaseDigits> {
    if base < 2 {
        return Err(Error::InvalidArgument(format!("base {base} < 2")));
    }
    let mut digits = Vec::new();
    let mut m = n;
    while m > 0 {
        digits.push(m % base);
        m /= base;
    }
    while digits.len() < min_length {
        digits.push(0);
    }
    Ok(BaseDigits { base, digits })
}

/// Trial-division primality check; sufficient for the desk-scale primes used
/// by the congruence criteria.
pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p % 2 == 0 {
        return p == 2;
    }
    let mut d = 3;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// `C(a,b) mod p` by Lucas' theorem: the product of the digit-wise binomials
/// in base `p`.
pub fn lucas_binomial_mod_p(a: u64, b: u64, p: u64) -> Result<u64> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let len = to_digits(a, p, 0)?.digits.len().max(1);
    let ad = to_digits(a, p, len)?.digits;
    let bd = to_digits(b, p, len)?.digits;
    let mut acc: u64 = 1;
    for (da, db) in ad.iter().zip(bd.iter()) {
        if db > da {
            return Ok(0);
        }
        let c = binomial(*da as i64, *db as i64);
        // da < p, so c < p^p fits comfortably after reduction.
        let c: u64 = (&c % p).try_into().unwrap();
        acc = acc * c % p;
    }
    // digits of b above the length of a
    if to_digits(b, p, 0)?.digits.len() > len {
        return Ok(0);
    }
    Ok(acc)
}

/// Value of a Davis-Webb symbol: a plain integer, the literal prime `p`, or
/// the literal `p²`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DwSymbol {
    Plain(BigInt),
    P,
    PSquared,
}

impl DwSymbol {
    /// The integer the symbol denotes (`P -> p`, `PSquared -> p²`).
    pub fn to_integer(&self, p: u64) -> BigInt {
        match self {
            DwSymbol::Plain(v) => v.clone(),
            DwSymbol::P => BigInt::from(p),
            DwSymbol::PSquared => BigInt::from(p) * p,
        }
    }
}

fn check_digit(d: u64, p: u64) -> Result<()> {
    if d >= p {
        return Err(Error::InvalidArgument(format!("digit {d} out of range [0,{p})")));
    }
    Ok(())
}

/// One-digit Davis-Webb symbol `[a;b]`: `C(a,b)` when `a >= b`, the literal
/// `p` when `a < b`.
pub fn dw_symbol_1(a: u64, b: u64, p: u64) -> Result<DwSymbol> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    check_digit(a, p)?;
    check_digit(b, p)?;
    if a >= b {
        Ok(DwSymbol::Plain(binomial(a as i64, b as i64)))
    } else {
        Ok(DwSymbol::P)
    }
}

/// Two-digit Davis-Webb symbol `[a,b;c,d]`: `C(ap+b, cp+d)` when
/// `ap+b >= cp+d`, otherwise `p·[b;d]`.
pub fn dw_symbol_2(a: u64, b: u64, c: u64, d: u64, p: u64) -> Result<DwSymbol> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    for x in [a, b, c, d] {
        check_digit(x, p)?;
    }
    let top = a * p + b;
    let bot = c * p + d;
    if top >= bot {
        Ok(DwSymbol::Plain(binomial(top as i64, bot as i64)))
    } else {
        match dw_symbol_1(b, d, p)? {
            DwSymbol::Plain(v) => Ok(DwSymbol::Plain(v * p)),
            DwSymbol::P => Ok(DwSymbol::PSquared),
            DwSymbol::PSquared => unreachable!("one-digit symbol is never p²"),
        }
    }
}

fn mod_inverse(a: u64, m: u64) -> Option<u64> {
    let (mut t, mut new_t): (i128, i128) = (0, 1);
    let (mut r, mut new_r): (i128, i128) = (m as i128, (a % m) as i128);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    if r != 1 {
        return None;
    }
    Some(((t % m as i128 + m as i128) % m as i128) as u64)
}

fn symbol_residue(s: &DwSymbol, p: u64, p2: u64) -> u64 {
    match s {
        DwSymbol::Plain(v) => {
            let r = v % p2;
            (&r).try_into().unwrap()
        }
        DwSymbol::P => p,
        DwSymbol::PSquared => 0,
    }
}

/// `C(a,b) mod p²` by the Davis-Webb congruence, evaluated factor by factor:
/// each grouped factor `[a_i;b_i]⁻¹·[a_i,a_{i-1};b_i,b_{i-1}]` is either an
/// exact integer (the `a_i < b_i` case collapses it to `[a_{i-1};b_{i-1}]`)
/// or a unit inverse times an integer mod p².
///
/// When `a < b` the digit sequences are zero-padded until the top digits
/// agree, which places the input under the extended hypothesis (equal top
/// digits) where the congruence is valid and yields 0.
pub fn binomial_mod_p2_davis_webb(a: u64, b: u64, p: u64) -> Result<u64> {
    if !is_prime(p) || p == 2 {
        return Err(Error::NotOddPrime(p));
    }
    let p2 = p * p;
    let la = to_digits(a, p, 0)?.digits.len();
    let lb = to_digits(b, p, 0)?.digits.len();
    let mut m = la.max(lb).max(2);
    if a < b {
        // equal (zero) top digits put us under the extended hypothesis
        let ad = to_digits(a, p, m)?.digits;
        let bd = to_digits(b, p, m)?.digits;
        if ad[m - 1] != bd[m - 1] {
            m += 1;
        }
    }
    let ad = to_digits(a, p, m)?.digits;
    let bd = to_digits(b, p, m)?.digits;

    let lead = dw_symbol_2(ad[m - 1], ad[m - 2], bd[m - 1], bd[m - 2], p)?;
    let mut acc = symbol_residue(&lead, p, p2);
    for i in 1..=m.saturating_sub(2) {
        if acc == 0 {
            break;
        }
        let factor = if ad[i] >= bd[i] {
            let unit: u64 = (&binomial(ad[i] as i64, bd[i] as i64) % p2).try_into().unwrap();
            let inv = mod_inverse(unit, p2).expect("digit binomial is coprime to p");
            let sym = dw_symbol_2(ad[i], ad[i - 1], bd[i], bd[i - 1], p)?;
            inv * symbol_residue(&sym, p, p2) % p2
        } else {
            // [a_i;b_i]⁻¹·[a_i,a_{i-1};b_i,b_{i-1}] = [a_{i-1};b_{i-1}]
            symbol_residue(&dw_symbol_1(ad[i - 1], bd[i - 1], p)?, p, p2)
        };
        acc = acc * factor % p2;
    }
    Ok(acc)
}

/// Residue of a big integer modulo a positive `m`, in `[0, m)`.
pub fn residue(v: &BigInt, m: u64) -> u64 {
    let r = v % m;
    let r = if r.is_negative() { r + m } else { r };
    (&r).try_into().unwrap()
}

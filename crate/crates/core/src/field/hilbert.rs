//! Hilbert symbols over ℚ from the local formulas at ∞, 2 and odd primes.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Place {
    Infinite,
    Prime(u64),
}

/// Splits off `p^v` and returns `(v, rest)`.
fn valuation(n: &BigInt, p: u64) -> (u32, BigInt) {
    let bp = BigInt::from(p);
    let mut v = 0;
    let mut m = n.clone();
    loop {
        let (q, r) = m.div_rem(&bp);
        if !r.is_zero() {
            return (v, m);
        }
        m = q;
        v += 1;
    }
}

fn prime_divisors(n: &BigInt, out: &mut Vec<u64>) {
    let mut m = n.abs();
    let mut d: u64 = 2;
    while BigInt::from(d) * BigInt::from(d) <= m {
        if (&m % d).is_zero() {
            out.push(d);
            while (&m % d).is_zero() {
                m /= d;
            }
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if m > BigInt::one() {
        out.push(m.to_u64().expect("prime factor exceeds u64"));
    }
}

fn legendre(u: &BigInt, p: u64) -> i8 {
    let r = u.mod_floor(&BigInt::from(p)).to_u64().expect("residue");
    let e = BigInt::from(r).modpow(&BigInt::from((p - 1) / 2), &BigInt::from(p));
    if e.is_one() {
        1
    } else {
        -1
    }
}

fn mod8(u: &BigInt) -> u64 {
    u.mod_floor(&BigInt::from(8)).to_u64().expect("residue")
}

fn local_symbol(a: &BigInt, b: &BigInt, p: u64) -> i8 {
    let (alpha, u) = valuation(a, p);
    let (beta, v) = valuation(b, p);
    if p == 2 {
        let eps = |x: u64| ((x - 1) / 2) % 2;
        let omega = |x: u64| ((x * x - 1) / 8) % 2;
        let (u8_, v8) = (mod8(&u), mod8(&v));
        let e = eps(u8_) * eps(v8) + alpha as u64 * omega(v8) + beta as u64 * omega(u8_);
        if e % 2 == 0 {
            1
        } else {
            -1
        }
    } else {
        let mut s: i8 = if (alpha as u64 * beta as u64 * ((p - 1) / 2)) % 2 == 1 { -1 } else { 1 };
        if beta % 2 == 1 {
            s *= legendre(&u, p);
        }
        if alpha % 2 == 1 {
            s *= legendre(&v, p);
        }
        s
    }
}

/// Integer in the same square class as `q` (numerator times denominator).
fn square_class_integer(q: &BigRational) -> BigInt {
    q.numer() * q.denom()
}

/// All local symbols `(a,b)_v` at ∞, 2 and the odd primes dividing `a` or `b`.
pub fn local_hilbert_symbols(a: &BigRational, b: &BigRational) -> Result<Vec<(Place, i8)>> {
    if a.is_zero() || b.is_zero() {
        return Err(Error::ZeroArgument);
    }
    let a = square_class_integer(a);
    let b = square_class_integer(b);
    let real = if a.is_negative() && b.is_negative() { -1 } else { 1 };
    let mut primes = vec![2];
    prime_divisors(&a, &mut primes);
    prime_divisors(&b, &mut primes);
    primes.sort_unstable();
    primes.dedup();
    let mut out = vec![(Place::Infinite, real)];
    out.extend(primes.into_iter().map(|p| (Place::Prime(p), local_symbol(&a, &b, p))));
    Ok(out)
}

/// −1 iff `z² = a x² + b y²` has only the trivial rational solution, i.e. iff
/// `(a,b)_ℚ` is a division algebra. The local symbols multiply to +1 by
/// reciprocity, so the global answer is −1 as soon as some place ramifies.
pub fn hilbert_symbol_q(a: &BigRational, b: &BigRational) -> Result<i8> {
    let locals = local_hilbert_symbols(a, b)?;
    debug_assert_eq!(locals.iter().map(|(_, s)| *s as i32).product::<i32>(), 1);
    Ok(if locals.iter().any(|(_, s)| *s == -1) { -1 } else { 1 })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    fn isotropic_search(a: i64, b: i64, bound: i64) -> bool {
        for x in 0..=bound {
            for y in 0..=bound {
                if x == 0 && y == 0 {
                    continue;
                }
                let rhs = a * x * x + b * y * y;
                if rhs < 0 {
                    continue;
                }
                let z = (rhs as f64).sqrt().round() as i64;
                if (z - 1..=z + 1).any(|z| z >= 0 && z * z == rhs) {
                    return true;
                }
            }
        }
        false
    }

    #[test]
    fn classical_values() {
        assert_eq!(hilbert_symbol_q(&r(-1), &r(-1)).unwrap(), -1);
        assert_eq!(hilbert_symbol_q(&r(-1), &r(3)).unwrap(), -1);
        for b in [-7, -1, 2, 5, 12] {
            assert_eq!(hilbert_symbol_q(&r(1), &r(b)).unwrap(), 1);
        }
        assert_eq!(hilbert_symbol_q(&r(0), &r(1)), Err(Error::ZeroArgument));
    }

    #[test]
    fn reciprocity_holds() {
        for a in -12..=12i64 {
            for b in -12..=12i64 {
                if a == 0 || b == 0 {
                    continue;
                }
                let prod: i32 = local_hilbert_symbols(&r(a), &r(b)).unwrap().iter().map(|(_, s)| *s as i32).product();
                assert_eq!(prod, 1, "({a},{b})");
            }
        }
    }

    // Small isotropic vectors exist whenever the form is isotropic (Holzer bound),
    // so a bounded search decides the symbol for small arguments.
    #[test]
    fn matches_bounded_search() {
        for a in -10..=10i64 {
            for b in -10..=10i64 {
                if a == 0 || b == 0 {
                    continue;
                }
                let found = isotropic_search(a, b, 60);
                let s = hilbert_symbol_q(&r(a), &r(b)).unwrap();
                assert_eq!(s == 1, found, "({a},{b})");
            }
        }
    }

    #[test]
    fn rational_arguments_use_square_class() {
        let a = BigRational::new((-3).into(), 4.into());
        let b = BigRational::new(1.into(), (-2).into());
        assert_eq!(hilbert_symbol_q(&a, &b).unwrap(), hilbert_symbol_q(&r(-3), &r(-2)).unwrap());
    }
}

//! Dense univariate polynomials over a prime field GF(p).
//!
//! Coefficients are stored lowest degree first with no trailing zeros, so the
//! zero polynomial is the empty vector and equality is structural.

pub(crate) fn mul_mod(a: u32, b: u32, p: u32) -> u32 {
    ((a as u64 * b as u64) % p as u64) as u32
}

pub(crate) fn add_mod(a: u32, b: u32, p: u32) -> u32 {
    ((a as u64 + b as u64) % p as u64) as u32
}

pub(crate) fn sub_mod(a: u32, b: u32, p: u32) -> u32 {
    add_mod(a, p - b % p, p)
}

pub(crate) fn pow_mod(base: u32, mut exp: u64, p: u32) -> u32 {
    let mut acc = 1 % p;
    let mut b = base % p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, b, p);
        }
        b = mul_mod(b, b, p);
        exp >>= 1;
    }
    acc
}

/// Inverse of a nonzero residue (Fermat).
pub(crate) fn inv_mod(a: u32, p: u32) -> u32 {
    debug_assert!(a % p != 0);
    pow_mod(a, p as u64 - 2, p)
}

/// Square root of a residue modulo an odd prime (Tonelli-Shanks), if any.
pub(crate) fn sqrt_mod(a: u32, p: u32) -> Option<u32> {
    let a = a % p;
    if a == 0 || p == 2 {
        return Some(a);
    }
    if pow_mod(a, (p as u64 - 1) / 2, p) != 1 {
        return None;
    }
    let mut q = p as u64 - 1;
    let mut s = 0;
    while q % 2 == 0 {
        q /= 2;
        s += 1;
    }
    let mut z = 2;
    while pow_mod(z, (p as u64 - 1) / 2, p) != p - 1 {
        z += 1;
    }
    let mut m = s;
    let mut c = pow_mod(z, q, p);
    let mut t = pow_mod(a, q, p);
    let mut r = pow_mod(a, (q + 1) / 2, p);
    while t != 1 {
        let mut i = 0;
        let mut t2 = t;
        while t2 != 1 {
            t2 = mul_mod(t2, t2, p);
            i += 1;
        }
        let b = pow_mod(c, 1u64 << (m - i - 1), p);
        m = i;
        c = mul_mod(b, b, p);
        t = mul_mod(t, c, p);
        r = mul_mod(r, b, p);
    }
    Some(r)
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub(crate) struct Poly {
    coeffs: Vec<u32>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn constant(c: u32, p: u32) -> Self {
        Self::from_coeffs(vec![c % p])
    }

    pub fn monomial(c: u32, deg: usize, p: u32) -> Self {
        let mut coeffs = vec![0; deg + 1];
        coeffs[deg] = c % p;
        Self::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<u32>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> u32 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn coeff(&self, i: usize) -> u32 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn add(&self, other: &Poly, p: u32) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::from_coeffs((0..n).map(|i| add_mod(self.coeff(i), other.coeff(i), p)).collect())
    }

    pub fn neg(&self, p: u32) -> Poly {
        Poly::from_coeffs(self.coeffs.iter().map(|&c| sub_mod(0, c, p)).collect())
    }

    pub fn scale(&self, c: u32, p: u32) -> Poly {
        Poly::from_coeffs(self.coeffs.iter().map(|&a| mul_mod(a, c, p)).collect())
    }

    pub fn mul(&self, other: &Poly, p: u32) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        let p64 = p as u64;
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = (out[i + j] + a as u64 * b as u64) % p64;
            }
        }
        Poly::from_coeffs(out.into_iter().map(|c| c as u32).collect())
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn divrem(&self, divisor: &Poly, p: u32) -> (Poly, Poly) {
        let dd = divisor.degree().expect("polynomial division by zero");
        let lead_inv = inv_mod(divisor.leading(), p);
        let mut rem = self.coeffs.clone();
        let mut quot = vec![0u32; rem.len().saturating_sub(dd)];
        while rem.len() > dd {
            let top = rem.len() - 1;
            let c = mul_mod(rem[top], lead_inv, p);
            if c != 0 {
                let shift = top - dd;
                quot[shift] = c;
                for (k, &d) in divisor.coeffs.iter().enumerate() {
                    rem[shift + k] = sub_mod(rem[shift + k], mul_mod(c, d, p), p);
                }
            }
            rem.pop();
            while rem.last() == Some(&0) {
                rem.pop();
            }
        }
        (Poly::from_coeffs(quot), Poly::from_coeffs(rem))
    }

    /// Monic associate together with the removed leading coefficient.
    pub fn monic(&self, p: u32) -> (u32, Poly) {
        if self.is_zero() {
            return (0, Poly::zero());
        }
        let lc = self.leading();
        (lc, self.scale(inv_mod(lc, p), p))
    }

    /// Monic gcd (zero if both inputs are zero).
    pub fn gcd(&self, other: &Poly, p: u32) -> Poly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.divrem(&b, p);
            a = b;
            b = r;
        }
        a.monic(p).1
    }

    /// Square root in GF(p)[t], if the polynomial is a perfect square.
    pub fn sqrt(&self, p: u32) -> Option<Poly> {
        let Some(deg) = self.degree() else {
            return Some(Poly::zero());
        };
        if p == 2 {
            // Frobenius: (sum a_i t^i)^2 = sum a_i t^(2i) over GF(2).
            if self.coeffs.iter().skip(1).step_by(2).any(|&c| c != 0) {
                return None;
            }
            return Some(Poly::from_coeffs(self.coeffs.iter().step_by(2).copied().collect()));
        }
        if deg % 2 == 1 {
            return None;
        }
        let (lc, m) = self.monic(p);
        let root_lc = sqrt_mod(lc, p)?;
        let k = deg / 2;
        let mut g = vec![0u32; k + 1];
        g[k] = 1;
        let half = inv_mod(2, p);
        for r in 1..=k {
            let target = 2 * k - r;
            let mut known = 0u32;
            for a in (k - r + 1)..=k {
                let b = target as isize - a as isize;
                if b > (k - r) as isize && b <= k as isize {
                    known = add_mod(known, mul_mod(g[a], g[b as usize], p), p);
                }
            }
            g[k - r] = mul_mod(sub_mod(m.coeff(target), known, p), half, p);
        }
        let g = Poly::from_coeffs(g);
        if g.mul(&g, p) == m {
            Some(g.scale(root_lc, p))
        } else {
            None
        }
    }

    pub fn render(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut terms = Vec::new();
        for (e, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let term = match (e, c) {
                (0, c) => c.to_string(),
                (1, 1) => var.to_string(),
                (1, c) => format!("{c}*{var}"),
                (e, 1) => format!("{var}^{e}"),
                (e, c) => format!("{c}*{var}^{e}"),
            };
            terms.push(term);
        }
        terms.join("+")
    }
}

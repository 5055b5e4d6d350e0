//! Table-driven arithmetic in GF(q), q = p^e ≤ 256.
//!
//! Elements are canonical integer codes `0..q`. The code of an element is the
//! integer whose base-p digits are the coefficients of its polynomial
//! representative, constant coefficient least significant. For e > 1 the
//! field is GF(p)[x] / (f) where f is the smallest monic irreducible of degree
//! e, comparing coefficient vectors from x^(e-1) down to the constant term
//! (equivalently, by the integer code of f - x^e).

use crate::error::{Error, Result};

/// Canonical element code.
pub type Elem = u8;

/// Arithmetic tables for GF(q). Immutable after construction.
#[derive(Clone, PartialEq, Eq)]
pub struct FieldTable {
    p: u32,
    e: u32,
    q: usize,
    /// Coefficients c_0..c_e of the modulus, constant term first. `[0, 1]`
    /// (the polynomial x) for prime fields.
    modulus: Vec<Elem>,
    add: Vec<Elem>,
    mul: Vec<Elem>,
    neg: Vec<Elem>,
    inv: Vec<Elem>,
}

impl std::fmt::Debug for FieldTable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("FieldTable")
            .field("q", &self.q)
            .field("modulus", &self.modulus)
            .finish()
    }
}

/// Splits `q` into `(p, e)` with `q = p^e`, or `None` if `q` is not a prime
/// power (or is < 2).
pub fn prime_power(q: u32) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let mut rest = q;
    let mut e = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        e += 1;
    }
    (rest == 1).then_some((p, e))
}

fn digits(mut x: usize, p: usize, len: usize) -> Vec<usize> {
    let mut out = Vec::with_capacity(len);
    for _ in 0..len {
        out.push(x % p);
        x /= p;
    }
    out
}

fn undigits(d: &[usize], p: usize) -> usize {
    d.iter().rev().fold(0, |acc, &c| acc * p + c)
}

/// Remainder of `a` modulo the monic polynomial `m`, coefficients over GF(p)
/// stored constant-first.
fn poly_rem(mut a: Vec<usize>, m: &[usize], p: usize) -> Vec<usize> {
    let deg_m = m.len() - 1;
    while a.len() > deg_m {
        let lead = a.pop().unwrap();
        if lead == 0 {
            continue;
        }
        let shift = a.len() - deg_m;
        for (i, &c) in m[..deg_m].iter().enumerate() {
            let t = a[shift + i] + p - (lead * c) % p;
            a[shift + i] = t % p;
        }
    }
    a
}

fn is_irreducible(f: &[usize], p: usize) -> bool {
    let deg = f.len() - 1;
    // trial division by every monic polynomial of degree 1..=deg/2
    for d in 1..=deg / 2 {
        for low in 0..p.pow(d as u32) {
            let mut g = digits(low, p, d);
            g.push(1);
            if poly_rem(f.to_vec(), &g, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

/// Smallest monic irreducible polynomial of degree `e` over GF(p), ordered by
/// the integer code of its non-leading coefficients.
fn smallest_irreducible(p: usize, e: usize) -> Vec<usize> {
    (0..p.pow(e as u32))
        .map(|low| {
            let mut f = digits(low, p, e);
            f.push(1);
            f
        })
        .find(|f| is_irreducible(f, p))
        .expect("an irreducible polynomial exists for every degree")
}

impl FieldTable {
    pub fn new(q: u32) -> Result<Self> {
        let (p, e) = prime_power(q)
            .filter(|_| q <= 256)
            .ok_or(Error::NotAPrimePower(q))?;
        let (pu, eu, qu) = (p as usize, e as usize, q as usize);
        let modulus = if e == 1 {
            vec![0, 1]
        } else {
            smallest_irreducible(pu, eu)
        };

        let mut add = vec![0; qu * qu];
        let mut mul = vec![0; qu * qu];
        for a in 0..qu {
            let da = digits(a, pu, eu);
            for b in 0..qu {
                let db = digits(b, pu, eu);
                let sum: Vec<usize> = da.iter().zip(&db).map(|(x, y)| (x + y) % pu).collect();
                add[a * qu + b] = undigits(&sum, pu) as Elem;

                let prod = if e == 1 {
                    vec![(a * b) % pu]
                } else {
                    let mut raw = vec![0; 2 * eu - 1];
                    for (i, x) in da.iter().enumerate() {
                        for (j, y) in db.iter().enumerate() {
                            raw[i + j] = (raw[i + j] + x * y) % pu;
                        }
                    }
                    let mut r = poly_rem(raw, &modulus, pu);
                    r.resize(eu, 0);
                    r
                };
                mul[a * qu + b] = undigits(&prod, pu) as Elem;
            }
        }

        let mut neg = vec![0; qu];
        let mut inv = vec![0; qu];
        for a in 0..qu {
            neg[a] = (0..qu).find(|&b| add[a * qu + b] == 0).unwrap() as Elem;
            if a != 0 {
                inv[a] = (1..qu).find(|&b| mul[a * qu + b] == 1).unwrap() as Elem;
            }
        }

        Ok(Self {
            p,
            e,
            q: qu,
            modulus: modulus.into_iter().map(|c| c as Elem).collect(),
            add,
            mul,
            neg,
            inv,
        })
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.e
    }

    pub fn order(&self) -> usize {
        self.q
    }

    /// Modulus coefficients, constant term first, leading 1 last.
    pub fn modulus(&self) -> &[Elem] {
        &self.modulus
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        self.add[a as usize * self.q + b as usize]
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg[b as usize])
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.mul[a as usize * self.q + b as usize]
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        self.neg[a as usize]
    }

    pub fn inv(&self, a: Elem) -> Result<Elem> {
        if a == 0 {
            Err(Error::DivisionByZero)
        } else {
            Ok(self.inv[a as usize])
        }
    }

    /// Checks that `value` is a valid element code.
    pub fn element(&self, value: u32) -> Result<Elem> {
        if (value as usize) < self.q {
            Ok(value as Elem)
        } else {
            Err(Error::InvalidElement {
                value,
                q: self.q as u32,
            })
        }
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        (0..self.q).map(|a| a as Elem)
    }

    pub fn nonzero(&self) -> impl Iterator<Item = Elem> {
        (1..self.q).map(|a| a as Elem)
    }

    /// Polynomial coefficient vector of `a` (constant term first).
    pub fn to_digits(&self, a: Elem) -> Vec<u32> {
        digits(a as usize, self.p as usize, self.e as usize)
            .into_iter()
            .map(|d| d as u32)
            .collect()
    }

    pub fn from_digits(&self, d: &[u32]) -> Result<Elem> {
        if d.len() != self.e as usize || d.iter().any(|&c| c >= self.p) {
            return Err(Error::InvalidParam(format!(
                "digit vector {d:?} is not an element of GF({})",
                self.q
            )));
        }
        let v: Vec<usize> = d.iter().map(|&c| c as usize).collect();
        Ok(undigits(&v, self.p as usize) as Elem)
    }

    /// Multiplicative order of a nonzero element.
    pub fn multiplicative_order(&self, a: Elem) -> Result<usize> {
        if a == 0 {
            return Err(Error::DivisionByZero);
        }
        let mut x = a;
        let mut k = 1;
        while x != 1 {
            x = self.mul(x, a);
            k += 1;
        }
        Ok(k)
    }
}

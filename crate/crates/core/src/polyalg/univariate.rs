//! Dense univariate polynomials over ℤ, constant term first.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

pub fn trim(mut p: Vec<BigInt>) -> Vec<BigInt> {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

/// `None` for the zero polynomial.
pub fn degree(p: &[BigInt]) -> Option<usize> {
    p.iter().rposition(|c| !c.is_zero())
}

pub fn derivative(p: &[BigInt]) -> Vec<BigInt> {
    trim(
        p.iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * BigInt::from(k))
            .collect(),
    )
}

pub fn content(p: &[BigInt]) -> BigInt {
    p.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
}

/// Divides out the content and makes the leading coefficient positive.
pub fn primitive(p: &[BigInt]) -> Vec<BigInt> {
    let p = trim(p.to_vec());
    let g = content(&p);
    if g.is_zero() {
        return p;
    }
    let sign_flip = p.last().is_some_and(Signed::is_negative);
    p.into_iter()
        .map(|c| {
            let q = c / &g;
            if sign_flip {
                -q
            } else {
                q
            }
        })
        .collect()
}

/// Pseudo-remainder of `a` by `b` (`lc(b)^k · a mod b`).
pub fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Result<Vec<BigInt>> {
    let db = degree(b).ok_or(Error::ZeroPolynomial)?;
    let lc = &b[db];
    let mut r = trim(a.to_vec());
    while let Some(dr) = degree(&r) {
        if dr < db {
            break;
        }
        let c = r[dr].clone();
        let shift = dr - db;
        for x in r.iter_mut() {
            *x *= lc;
        }
        for (k, bk) in b.iter().enumerate() {
            r[k + shift] -= &c * bk;
        }
        r = trim(r);
    }
    Ok(r)
}

/// Primitive gcd by the primitive polynomial remainder sequence.
pub fn gcd(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let (mut u, mut v) = (primitive(a), primitive(b));
    if degree(&u) < degree(&v) {
        std::mem::swap(&mut u, &mut v);
    }
    while degree(&v).is_some() {
        let r = pseudo_rem(&u, &v).expect("v is nonzero");
        u = v;
        v = primitive(&r);
    }
    primitive(&u)
}

/// Exact quotient over ℤ.
pub fn div_exact(a: &[BigInt], b: &[BigInt]) -> Result<Vec<BigInt>> {
    let db = degree(b).ok_or(Error::ZeroPolynomial)?;
    let mut r = trim(a.to_vec());
    let Some(da) = degree(&r) else {
        return Ok(Vec::new());
    };
    if da < db {
        return Err(Error::InexactDivision);
    }
    let mut q = vec![BigInt::zero(); da - db + 1];
    while let Some(dr) = degree(&r) {
        if dr < db {
            return Err(Error::InexactDivision);
        }
        let (c, rem) = r[dr].div_rem(&b[db]);
        if !rem.is_zero() {
            return Err(Error::InexactDivision);
        }
        let shift = dr - db;
        for (k, bk) in b.iter().enumerate() {
            r[k + shift] -= &c * bk;
        }
        q[shift] = c;
        r = trim(r);
    }
    Ok(q)
}

pub fn mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

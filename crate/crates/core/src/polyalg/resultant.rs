use num_traits::One;

use super::poly::SparsePoly;
use super::univariate;
use crate::error::{Error, Result};

/// Sylvester matrix of `f` and `g` in variable `v`: `deg g` shifted rows of
/// `f`'s coefficients followed by `deg f` shifted rows of `g`'s, highest
/// power first.
pub fn sylvester_matrix(f: &SparsePoly, g: &SparsePoly, v: usize) -> Result<Vec<Vec<SparsePoly>>> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let fc = f.coefficients_in(v);
    let gc = g.coefficients_in(v);
    let (m, n) = (fc.len() - 1, gc.len() - 1);
    let zero = fc[0].zero_like();
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    for i in 0..n {
        let mut row = vec![zero.clone(); size];
        for (k, c) in fc.iter().rev().enumerate() {
            row[i + k] = c.clone();
        }
        rows.push(row);
    }
    for i in 0..m {
        let mut row = vec![zero.clone(); size];
        for (k, c) in gc.iter().rev().enumerate() {
            row[i + k] = c.clone();
        }
        rows.push(row);
    }
    Ok(rows)
}

/// Fraction-free Bareiss determinant over polynomial entries.
fn bareiss(mut a: Vec<Vec<SparsePoly>>, one: SparsePoly) -> Result<SparsePoly> {
    let n = a.len();
    if n == 0 {
        return Ok(one);
    }
    let mut negate = false;
    let mut prev = one;
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(i, k);
                    negate = !negate;
                }
                None => return Ok(prev.zero_like()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = num.div_exact(&prev)?;
            }
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    Ok(if negate { -&det } else { det })
}

/// `Res_v(f, g)` as the determinant of the Sylvester matrix.
pub fn sylvester_resultant(f: &SparsePoly, g: &SparsePoly, v: usize) -> Result<SparsePoly> {
    let rows = sylvester_matrix(f, g, v)?;
    let one = SparsePoly::from_univariate(f.vars(), 0, &[num_bigint::BigInt::one()]);
    bareiss(rows, one)
}

/// `(−1)^{m(m−1)/2} Res_v(f, ∂f/∂v) / lc_v(f)` with `m = deg_v f`.
pub fn discriminant(f: &SparsePoly, v: usize) -> Result<SparsePoly> {
    let m = f.degree_in(v).ok_or(Error::ZeroPolynomial)? as usize;
    if m < 1 {
        return Err(Error::Precondition(format!(
            "discriminant needs positive degree in `{}`",
            f.vars()[v]
        )));
    }
    let res = sylvester_resultant(f, &f.derivative(v), v)?;
    let lc = f.coefficients_in(v).pop().expect("degree at least one");
    let q = res.div_exact(&lc)?;
    Ok(if (m * (m - 1) / 2) % 2 == 1 { -&q } else { q })
}

/// `f / gcd(f, f′)` made primitive with positive leading coefficient, for `f`
/// univariate in `v`.
pub fn squarefree_part(f: &SparsePoly, v: usize) -> Result<SparsePoly> {
    let dense = f.to_univariate(v)?;
    if f.is_zero() {
        return Ok(f.clone());
    }
    let g = univariate::gcd(&dense, &univariate::derivative(&dense));
    let g = if g.is_empty() { univariate::primitive(&dense) } else { g };
    let q = univariate::div_exact(&univariate::primitive(&dense), &g)?;
    Ok(SparsePoly::from_univariate(f.vars(), v, &univariate::primitive(&q)))
}

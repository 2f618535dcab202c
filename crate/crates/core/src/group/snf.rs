use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::IntegerMatrix;

/// Nonzero diagonal of the Smith normal form, `d₁ | d₂ | ⋯ | d_r`, all positive.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    pub diagonal: Vec<BigInt>,
    pub rank: usize,
}

/// Smith normal form by elimination that always pivots on the entry of
/// least absolute value in the remaining block.
pub fn smith_normal_form(m: &IntegerMatrix) -> SmithForm {
    let mut a = m.clone();
    let (rows, cols) = (a.rows(), a.cols());
    let mut diagonal = Vec::new();

    for t in 0..rows.min(cols) {
        if !move_min_to(&mut a, t) {
            break;
        }
        loop {
            let mut dirty = false;
            for i in t + 1..rows {
                if a[(i, t)].is_zero() {
                    continue;
                }
                let q = a[(i, t)].div_floor(&a[(t, t)]);
                for j in t..cols {
                    let v = &a[(t, j)] * &q;
                    a[(i, j)] -= v;
                }
                dirty |= !a[(i, t)].is_zero();
            }
            for j in t + 1..cols {
                if a[(t, j)].is_zero() {
                    continue;
                }
                let q = a[(t, j)].div_floor(&a[(t, t)]);
                for i in t..rows {
                    let v = &a[(i, t)] * &q;
                    a[(i, j)] -= v;
                }
                dirty |= !a[(t, j)].is_zero();
            }
            if dirty {
                move_min_to(&mut a, t);
                continue;
            }
            // Row and column are clear; enforce divisibility on the rest.
            let bad_row = (t + 1..rows).find(|&i| {
                (t + 1..cols).any(|j| !a[(i, j)].is_multiple_of(&a[(t, t)]))
            });
            match bad_row {
                Some(i) => {
                    for j in t..cols {
                        let v = a[(i, j)].clone();
                        a[(t, j)] += v;
                    }
                }
                None => break,
            }
        }
        diagonal.push(a[(t, t)].abs());
    }

    let rank = diagonal.len();
    SmithForm { diagonal, rank }
}

/// Moves the least nonzero |entry| of the block starting at `(t, t)` onto the
/// pivot. Returns false if the block is zero.
fn move_min_to(a: &mut IntegerMatrix, t: usize) -> bool {
    let mut best: Option<(usize, usize)> = None;
    for i in t..a.rows() {
        for j in t..a.cols() {
            let x = &a[(i, j)];
            if x.is_zero() {
                continue;
            }
            if best.is_none_or(|(bi, bj)| x.abs() < a[(bi, bj)].abs()) {
                best = Some((i, j));
            }
        }
    }
    match best {
        Some((i, j)) => {
            a.swap_rows(t, i);
            a.swap_cols(t, j);
            true
        }
        None => false,
    }
}

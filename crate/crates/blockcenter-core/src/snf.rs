//! Smith normal form over `Z` with unimodular transforms, plus the two
//! consumers used everywhere else: elementary divisors (orbit invariants of
//! the Gram decompositions) and saturated integer kernels (the center
//! lattice computation).

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::matrix::IntMatrix;

/// Result of [`smith_normal_form`]: `u · a · v = d` with `u`, `v` unimodular
/// and `d` diagonal with `d₁ | d₂ | …` nonnegative.
#[derive(Debug, Clone)]
pub struct SmithNormalForm {
    pub d: IntMatrix,
    pub u: IntMatrix,
    pub v: IntMatrix,
    pub rank: usize,
}

impl SmithNormalForm {
    /// The nonzero diagonal entries `d₁ | d₂ | …`.
    pub fn elementary_divisors(&self) -> Vec<BigInt> {
        (0..self.rank).map(|i| self.d[(i, i)].clone()).collect()
    }
}

/// Computes the Smith normal form of an arbitrary rectangular integer matrix.
///
/// Classic pivoting scheme: repeatedly move a minimal-magnitude nonzero entry
/// of the working submatrix to the pivot, clear its row and column by
/// division steps, and repair divisibility violations by folding the
/// offending column into the pivot column.  All row operations are mirrored
/// on `u`, all column operations on `v`, so `u·a·v = d` holds exactly.
pub fn smith_normal_form(a: &IntMatrix) -> SmithNormalForm {
    let rows = a.rows();
    let cols = a.cols();
    let mut d = a.clone();
    let mut u = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);

    let mut t = 0;
    'outer: while t < rows.min(cols) {
        // Find a minimal-magnitude nonzero entry in the remaining block.
        let mut pivot: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if d[(i, j)].is_zero() {
                    continue;
                }
                match pivot {
                    Some((pi, pj)) if d[(pi, pj)].abs() <= d[(i, j)].abs() => {}
                    _ => pivot = Some((i, j)),
                }
            }
        }
        let Some((pi, pj)) = pivot else {
            break; // remaining block is zero
        };
        d.swap_rows(t, pi);
        u.swap_rows(t, pi);
        d.swap_cols(t, pj);
        v.swap_cols(t, pj);

        // Clear column t and row t.  Division steps may leave nonzero
        // remainders, in which case a smaller entry lands in the pivot
        // position on the next sweep; magnitudes strictly decrease, so this
        // terminates.
        let mut dirty = true;
        while dirty {
            dirty = false;
            for i in t + 1..rows {
                if d[(i, t)].is_zero() {
                    continue;
                }
                let q = div_round(&d[(i, t)], &d[(t, t)]);
                d.add_row_multiple(i, t, &-&q);
                u.add_row_multiple(i, t, &-q);
                if !d[(i, t)].is_zero() {
                    // remainder becomes the new, smaller pivot
                    d.swap_rows(t, i);
                    u.swap_rows(t, i);
                    dirty = true;
                }
            }
            for j in t + 1..cols {
                if d[(t, j)].is_zero() {
                    continue;
                }
                let q = div_round(&d[(t, j)], &d[(t, t)]);
                d.add_col_multiple(j, t, &-&q);
                v.add_col_multiple(j, t, &-q);
                if !d[(t, j)].is_zero() {
                    d.swap_cols(t, j);
                    v.swap_cols(t, j);
                    dirty = true;
                }
            }
        }

        // Divisibility repair: the pivot must divide every remaining entry.
        for i in t + 1..rows {
            for j in t + 1..cols {
                if (&d[(i, j)] % &d[(t, t)]).is_zero() {
                    continue;
                }
                // Fold row i into reach of the pivot and redo this position.
                d.add_row_multiple(t, i, &BigInt::one());
                u.add_row_multiple(t, i, &BigInt::one());
                continue 'outer;
            }
        }

        t += 1;
    }

    // Normalize diagonal signs.
    for i in 0..rows.min(cols) {
        if d[(i, i)].is_negative() {
            d.negate_row(i);
            u.negate_row(i);
        }
    }
    let rank = (0..rows.min(cols)).take_while(|&i| !d[(i, i)].is_zero()).count();

    debug_assert!({
        let lhs = &(&u * a) * &v;
        lhs == d
    });

    SmithNormalForm { d, u, v, rank }
}

/// Rounded division: quotient minimizing |a - q·b|.
fn div_round(a: &BigInt, b: &BigInt) -> BigInt {
    let (q, r) = a.div_rem(b);
    // Pull the remainder into [-|b|/2, |b|/2].
    let two_r: BigInt = &r * 2;
    if two_r.abs() > b.abs() {
        if (r.is_negative()) == (b.is_negative()) {
            q + 1
        } else {
            q - 1
        }
    } else {
        q
    }
}

/// The nonzero diagonal of the Smith normal form.
pub fn elementary_divisors(a: &IntMatrix) -> Vec<BigInt> {
    smith_normal_form(a).elementary_divisors()
}

/// Basis of the saturated lattice `{x ∈ Z^cols : a · xᵀ = 0}`, one row per
/// basis vector.  With `u·a·v = d` diagonal of rank `r`, the kernel is
/// spanned by the last `cols − r` columns of `v`; since `v` is unimodular
/// the result is automatically saturated (any integral solution is an
/// integer combination of the rows).
pub fn integer_kernel_basis(a: &IntMatrix) -> IntMatrix {
    let snf = smith_normal_form(a);
    let cols = a.cols();
    let dim = cols - snf.rank;
    let mut basis = IntMatrix::zeros(dim, cols);
    for (row, j) in (snf.rank..cols).enumerate() {
        for i in 0..cols {
            basis[(row, i)] = snf.v[(i, j)].clone();
        }
    }
    basis
}

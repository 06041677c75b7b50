//! Exact dense linear algebra over a field scalar: reduced row echelon form,
//! rank, subspace comparison, and Newton interpolation.

use crate::scalar::Scalar;

/// Reduced row echelon form. Zero rows are dropped, pivots normalized to 1,
/// so two row spans are equal iff their rrefs are equal.
#[allow(clippy::needless_range_loop)] // in-place row elimination
pub fn rref<T: Scalar>(rows: &[Vec<T>]) -> Vec<Vec<T>> {
    let mut m: Vec<Vec<T>> = rows.to_vec();
    if m.is_empty() {
        return m;
    }
    let ncols = m[0].len();
    let mut pivot_row = 0;
    for col in 0..ncols {
        let Some(r) = (pivot_row..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(pivot_row, r);
        let inv = T::one() / m[pivot_row][col].clone();
        for c in col..ncols {
            m[pivot_row][c] = m[pivot_row][c].clone() * inv.clone();
        }
        for r in 0..m.len() {
            if r != pivot_row && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in col..ncols {
                    m[r][c] = m[r][c].clone() - f.clone() * m[pivot_row][c].clone();
                }
            }
        }
        pivot_row += 1;
        if pivot_row == m.len() {
            break;
        }
    }
    m.truncate(pivot_row);
    m
}

pub fn rank<T: Scalar>(rows: &[Vec<T>]) -> usize {
    rref(rows).len()
}

/// Whether the two row sets span the same subspace.
pub fn same_span<T: Scalar>(a: &[Vec<T>], b: &[Vec<T>]) -> bool {
    rref(a) == rref(b)
}

/// Coefficients of at most one linear dependency among the rows: returns
/// `Some(c)` with `sum_i c_i row_i = 0` and some `c_i` nonzero, or `None`
/// when the rows are independent.
#[allow(clippy::needless_range_loop)] // in-place row elimination
pub fn dependency<T: Scalar>(rows: &[Vec<T>]) -> Option<Vec<T>> {
    // Augment each row with an identity tail so eliminations are recorded.
    let n = rows.len();
    if n == 0 {
        return None;
    }
    let ncols = rows[0].len();
    let mut m: Vec<Vec<T>> = rows
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { T::one() } else { T::zero() }));
            r
        })
        .collect();

    let mut pivot_row = 0;
    for col in 0..ncols {
        let Some(r) = (pivot_row..n).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(pivot_row, r);
        for r in pivot_row + 1..n {
            if !m[r][col].is_zero() {
                let f = m[r][col].clone() / m[pivot_row][col].clone();
                for c in col..ncols + n {
                    m[r][c] = m[r][c].clone() - f.clone() * m[pivot_row][c].clone();
                }
            }
        }
        pivot_row += 1;
        if pivot_row == n {
            break;
        }
    }
    m[pivot_row..]
        .iter()
        .find(|row| row[..ncols].iter().all(|x| x.is_zero()))
        .map(|row| row[ncols..].to_vec())
}

/// Coefficients (constant term first) of the unique polynomial of degree
/// `< xs.len()` through the sample points, by Newton divided differences.
/// The abscissae must be pairwise distinct.
pub fn interpolate<T: Scalar>(xs: &[T], ys: &[T]) -> Vec<T> {
    assert_eq!(xs.len(), ys.len());
    assert!(!xs.is_empty());
    let n = xs.len();

    // divided-difference table, kept in place
    let mut dd: Vec<T> = ys.to_vec();
    for level in 1..n {
        for i in (level..n).rev() {
            let denom = xs[i].clone() - xs[i - level].clone();
            dd[i] = (dd[i].clone() - dd[i - 1].clone()) / denom;
        }
    }

    // expand the Newton form into monomial coefficients
    let mut coeffs = vec![T::zero(); n];
    let mut basis = vec![T::zero(); n]; // prod_{j<i} (x - x_j)
    basis[0] = T::one();
    let mut basis_len = 1;
    for (i, d) in dd.iter().enumerate() {
        for (c, b) in coeffs.iter_mut().zip(basis.iter()).take(basis_len) {
            *c = c.clone() + d.clone() * b.clone();
        }
        if i + 1 < n {
            // basis *= (x - xs[i])
            let mut next = vec![T::zero(); n];
            for j in 0..basis_len {
                next[j + 1] = next[j + 1].clone() + basis[j].clone();
                next[j] = next[j].clone() - xs[i].clone() * basis[j].clone();
            }
            basis = next;
            basis_len += 1;
        }
    }
    coeffs
}

/// Horner evaluation of the coefficient vector produced by [`interpolate`].
pub fn eval_poly<T: Scalar>(coeffs: &[T], x: &T) -> T {
    let mut acc = T::zero();
    for c in coeffs.iter().rev() {
        acc = acc * x.clone() + c.clone();
    }
    acc
}

//! Fraction-free exact linear solving over the q,t fraction field.
//!
//! Rows are cleared of denominators first, then eliminated with the
//! Bareiss one-step scheme whose divisions are exact in the polynomial
//! ring, and finally back-substituted in the fraction field.

use crate::error::{Error, Result};
use crate::qt::{QtPoly, QtRat};

/// Solve A x = b for each right-hand side column in `columns`.
/// A must be square and invertible.
pub fn solve_columns(a: &[Vec<QtRat>], columns: &[Vec<QtRat>]) -> Result<Vec<Vec<QtRat>>> {
    let n = a.len();
    if n == 0 {
        return Ok(columns.iter().map(|_| Vec::new()).collect());
    }
    let width = n + columns.len();

    // clear denominators row by row
    let mut m: Vec<Vec<QtPoly>> = Vec::with_capacity(n);
    for i in 0..n {
        assert_eq!(a[i].len(), n, "matrix must be square");
        let mut lcm = QtPoly::one();
        for e in &a[i] {
            lcm = lcm.lcm(e.den());
        }
        for col in columns {
            lcm = lcm.lcm(col[i].den());
        }
        let scale = QtRat::from_poly(lcm);
        let mut row: Vec<QtPoly> = Vec::with_capacity(width);
        for e in &a[i] {
            let v = e.mul(&scale);
            row.push(v.as_polynomial().expect("denominators cleared").clone());
        }
        for col in columns {
            let v = col[i].mul(&scale);
            row.push(v.as_polynomial().expect("denominators cleared").clone());
        }
        m.push(row);
    }

    // Bareiss elimination with row pivoting
    let mut prev = QtPoly::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            let swap = (k + 1..n).find(|&r| !m[r][k].is_zero());
            match swap {
                Some(r) => m.swap(k, r),
                None => return Err(Error::SingularSystem),
            }
        }
        for i in k + 1..n {
            for j in k + 1..width {
                let num = m[k][k].mul(&m[i][j]).sub(&m[i][k].mul(&m[k][j]));
                m[i][j] = num
                    .exact_div(&prev)
                    .expect("Bareiss division is exact");
            }
            m[i][k] = QtPoly::zero();
        }
        prev = m[k][k].clone();
    }

    // back substitution in the fraction field
    let mut out = Vec::with_capacity(columns.len());
    for (c, _) in columns.iter().enumerate() {
        let bcol = n + c;
        let mut x = vec![QtRat::zero(); n];
        for i in (0..n).rev() {
            let mut acc = QtRat::from_poly(m[i][bcol].clone());
            for j in i + 1..n {
                acc = acc.sub(&QtRat::from_poly(m[i][j].clone()).mul(&x[j]));
            }
            if m[i][i].is_zero() {
                return Err(Error::SingularSystem);
            }
            x[i] = acc
                .div(&QtRat::from_poly(m[i][i].clone()))
                .expect("pivot nonzero");
        }
        out.push(x);
    }
    Ok(out)
}

/// Inverse of a square matrix, by solving against the identity.
pub fn invert(a: &[Vec<QtRat>]) -> Result<Vec<Vec<QtRat>>> {
    let n = a.len();
    let mut eye = vec![vec![QtRat::zero(); n]; n];
    for (i, row) in eye.iter_mut().enumerate() {
        row[i] = QtRat::one();
    }
    let cols = solve_columns(a, &eye)?;
    // cols[j][i] is entry (i, j) of the inverse
    let mut inv = vec![vec![QtRat::zero(); n]; n];
    for (j, col) in cols.iter().enumerate() {
        for (i, v) in col.iter().enumerate() {
            inv[i][j] = v.clone();
        }
    }
    Ok(inv)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> QtRat {
        QtRat::from_int(n)
    }

    #[test]
    fn solves_integer_system() {
        // [[1, 2], [3, 4]] x = [5, 6] -> x = [-4, 4.5]
        let a = vec![vec![r(1), r(2)], vec![r(3), r(4)]];
        let b = vec![vec![r(5), r(6)]];
        let x = solve_columns(&a, &b).unwrap();
        assert_eq!(x[0][0], r(-4));
        assert_eq!(x[0][1], QtRat::from_int(9).div(&r(2)).unwrap());
    }

    #[test]
    fn solves_with_rational_function_entries() {
        // [[1, t], [q, 1]] x = [1+q*t, 2*q] -> x = [1, q] ... check by solve
        let t = QtRat::t();
        let q = QtRat::q();
        let a = vec![
            vec![QtRat::one(), t.clone()],
            vec![q.clone(), QtRat::one()],
        ];
        let rhs0 = QtRat::one().add(&q.mul(&t));
        let rhs1 = q.add(&q);
        let x = solve_columns(&a, &[vec![rhs0, rhs1]]).unwrap();
        // verify A x = b
        let b0 = a[0][0].mul(&x[0][0]).add(&a[0][1].mul(&x[0][1]));
        let b1 = a[1][0].mul(&x[0][0]).add(&a[1][1].mul(&x[0][1]));
        assert_eq!(b0, QtRat::one().add(&QtRat::q().mul(&QtRat::t())));
        assert_eq!(b1, QtRat::q().add(&QtRat::q()));
    }

    #[test]
    fn rejects_singular() {
        let a = vec![vec![r(1), r(2)], vec![r(2), r(4)]];
        let b = vec![vec![r(1), r(1)]];
        assert!(solve_columns(&a, &b).is_err());
    }

    #[test]
    fn inverts_small_matrix() {
        let a = vec![vec![r(2), r(0)], vec![r(1), r(1)]];
        let inv = invert(&a).unwrap();
        // A * A^-1 = I
        for i in 0..2 {
            for j in 0..2 {
                let mut acc = QtRat::zero();
                for k in 0..2 {
                    acc = acc.add(&a[i][k].mul(&inv[k][j]));
                }
                assert_eq!(acc, if i == j { r(1) } else { r(0) });
            }
        }
    }
}

//! Fraction-free (Bareiss) elimination over the integers.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Bareiss elimination in place. Returns the pivot columns; rows past the
/// last pivot are zero afterwards.
fn bareiss(m: &mut [Vec<BigInt>], cols: usize) -> Vec<usize> {
    let rows = m.len();
    let mut pivots = Vec::new();
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        for i in r + 1..rows {
            for j in c + 1..m[i].len() {
                let v = (&m[r][c] * &m[i][j] - &m[i][c] * &m[r][j]) / &prev;
                m[i][j] = v;
            }
            m[i][c] = BigInt::zero();
        }
        prev = m[r][c].clone();
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Rank of an integer matrix.
pub fn rank(matrix: &[Vec<i64>]) -> usize {
    let cols = matrix.first().map_or(0, Vec::len);
    let mut m: Vec<Vec<BigInt>> = matrix
        .iter()
        .map(|row| row.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    bareiss(&mut m, cols).len()
}

/// Rank of the submatrix made of the listed columns.
pub fn column_rank(matrix: &[Vec<i64>], columns: &[usize]) -> usize {
    let sub: Vec<Vec<i64>> = matrix
        .iter()
        .map(|row| columns.iter().map(|&c| row[c]).collect())
        .collect();
    rank(&sub)
}

/// Solves the square system `a x = b` exactly. `None` when `a` is singular.
pub fn solve(a: &[Vec<BigInt>], b: &[BigInt]) -> Option<Vec<BigRational>> {
    let n = a.len();
    if b.len() != n || a.iter().any(|row| row.len() != n) {
        return None;
    }
    let mut m: Vec<Vec<BigInt>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let pivots = bareiss(&mut m, n);
    if pivots.len() < n {
        return None;
    }
    // upper triangular now; back substitute over the rationals
    let mut x = vec![BigRational::zero(); n];
    for i in (0..n).rev() {
        let mut acc = BigRational::from_integer(m[i][n].clone());
        for j in i + 1..n {
            acc -= BigRational::from_integer(m[i][j].clone()) * &x[j];
        }
        x[i] = acc / BigRational::from_integer(m[i][i].clone());
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect()
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank(&[]), 0);
        assert_eq!(rank(&[vec![0, 0], vec![0, 0]]), 0);
        assert_eq!(rank(&[vec![1, 2, 3], vec![2, 4, 6], vec![1, 0, 1]]), 2);
        assert_eq!(rank(&[vec![0, 1], vec![1, 0]]), 2);
        assert_eq!(column_rank(&[vec![1, 1, 0], vec![1, 1, 1]], &[0, 1]), 1);
    }

    #[test]
    fn solve_small_system() {
        let a = big(&[&[2, 1], &[1, 3]]);
        let b = vec![BigInt::from(3), BigInt::from(5)];
        let x = solve(&a, &b).unwrap();
        assert_eq!(x[0], BigRational::new(4.into(), 5.into()));
        assert_eq!(x[1], BigRational::new(7.into(), 5.into()));
    }

    #[test]
    fn singular_is_none() {
        let a = big(&[&[1, 2], &[2, 4]]);
        assert!(solve(&a, &[BigInt::from(1), BigInt::from(2)]).is_none());
    }

    #[test]
    fn needs_row_swap() {
        let a = big(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, 2]]);
        let b: Vec<BigInt> = [7, 8, 9].iter().map(|&x| BigInt::from(x)).collect();
        let x = solve(&a, &b).unwrap();
        assert_eq!(x[0], BigRational::from_integer(8.into()));
        assert_eq!(x[1], BigRational::from_integer(7.into()));
        assert_eq!(x[2], BigRational::new(9.into(), 2.into()));
    }
}

//! Integer solutions of linear systems `A z = b`.
//!
//! Unimodular column operations bring `A` to column echelon form `H = A U`;
//! `H y = b` is then solved by forward substitution with divisibility checks
//! and `z = U y`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

struct ColumnEchelon {
    h: Vec<Vec<BigInt>>,
    u: Vec<Vec<BigInt>>,
    /// Row of the pivot in column `k`, for `k = 0, 1, ...`.
    pivots: Vec<usize>,
}

fn col_axpy(m: &mut [Vec<BigInt>], dst: usize, src: usize, q: &BigInt) {
    for row in m.iter_mut() {
        if !row[src].is_zero() {
            let t = &row[src] * q;
            row[dst] -= t;
        }
    }
}

fn col_swap(m: &mut [Vec<BigInt>], i: usize, j: usize) {
    for row in m.iter_mut() {
        row.swap(i, j);
    }
}

fn echelon(a: &[Vec<BigInt>], n: usize) -> ColumnEchelon {
    let mut h = a.to_vec();
    let mut u: Vec<Vec<BigInt>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
        .collect();
    let mut pivots = Vec::new();
    let mut pc = 0;
    for r in 0..h.len() {
        if pc == n {
            break;
        }
        for j in pc + 1..n {
            while !h[r][j].is_zero() {
                if !h[r][pc].is_zero() {
                    let q = &h[r][pc] / &h[r][j];
                    col_axpy(&mut h, pc, j, &q);
                    col_axpy(&mut u, pc, j, &q);
                }
                col_swap(&mut h, pc, j);
                col_swap(&mut u, pc, j);
            }
        }
        if !h[r][pc].is_zero() {
            pivots.push(r);
            pc += 1;
        }
    }
    ColumnEchelon { h, u, pivots }
}

/// Some integer `z` with `A z = b`, or `None` if the system has no integer
/// solution. `a` has `b.len()` rows of length `n`.
pub(crate) fn solve(a: &[Vec<BigInt>], b: &[BigInt], n: usize) -> Option<Vec<BigInt>> {
    debug_assert_eq!(a.len(), b.len());
    let ColumnEchelon { h, u, pivots } = echelon(a, n);
    let mut y = vec![BigInt::zero(); n];
    let mut k = 0;
    for (r, row) in h.iter().enumerate() {
        let mut s = BigInt::zero();
        for j in 0..k {
            if !row[j].is_zero() {
                s += &row[j] * &y[j];
            }
        }
        if pivots.get(k) == Some(&r) {
            let (q, rem) = (&b[r] - s).div_rem(&row[k]);
            if !rem.is_zero() {
                return None;
            }
            y[k] = q;
            k += 1;
        } else if s != b[r] {
            return None;
        }
    }
    let z = u
        .iter()
        .map(|urow| urow.iter().zip(&y).filter(|(c, _)| !c.is_zero()).map(|(c, v)| c * v).sum())
        .collect();
    Some(z)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn big(rows: &[Vec<i64>]) -> Vec<Vec<BigInt>> {
        rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
    }

    fn apply(a: &[Vec<BigInt>], z: &[BigInt]) -> Vec<BigInt> {
        a.iter().map(|row| row.iter().zip(z).map(|(x, y)| x * y).sum()).collect()
    }

    /// Exhaustive search over the box `[-r, r]^n`.
    fn box_has_solution(a: &[Vec<BigInt>], b: &[BigInt], n: usize, r: i64) -> bool {
        let width = (2 * r + 1) as usize;
        (0..width.pow(n as u32)).any(|mut code| {
            let z: Vec<BigInt> = (0..n)
                .map(|_| {
                    let v = (code % width) as i64 - r;
                    code /= width;
                    BigInt::from(v)
                })
                .collect();
            apply(a, &z) == b
        })
    }

    #[test]
    fn parity_obstruction() {
        let a = big(&[vec![2, 4]]);
        assert!(solve(&a, &[BigInt::from(3)], 2).is_none());
        let z = solve(&a, &[BigInt::from(6)], 2).unwrap();
        assert_eq!(apply(&a, &z), vec![BigInt::from(6)]);
    }

    #[test]
    fn inconsistent_rows() {
        let a = big(&[vec![1, 1], vec![2, 2]]);
        assert!(solve(&a, &[1.into(), 3.into()], 2).is_none());
        assert!(solve(&a, &[1.into(), 2.into()], 2).is_some());
    }

    #[test]
    fn empty_system() {
        assert_eq!(solve(&[], &[], 2), Some(vec![BigInt::zero(), BigInt::zero()]));
    }

    proptest! {
        #[test]
        fn agrees_with_box_search(
            rows in prop::collection::vec(prop::collection::vec(-4i64..=4, 3), 1..4),
            b in prop::collection::vec(-5i64..=5, 4),
        ) {
            let a = big(&rows);
            let b: Vec<BigInt> = b[..rows.len()].iter().map(|&x| BigInt::from(x)).collect();
            match solve(&a, &b, 3) {
                Some(z) => prop_assert_eq!(apply(&a, &z), b),
                None => prop_assert!(!box_has_solution(&a, &b, 3, 6)),
            }
        }
    }
}

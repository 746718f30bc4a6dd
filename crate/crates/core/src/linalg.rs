//! Small exact linear algebra over Z and Q.

use dashu_int::IBig;
use dashu_ratio::RBig;

/// Determinant of a square integer matrix by fraction-free (Bareiss) elimination.
pub fn det_int(matrix: &[Vec<IBig>]) -> IBig {
    let n = matrix.len();
    if n == 0 {
        return IBig::ONE;
    }
    let mut a: Vec<Vec<IBig>> = matrix.to_vec();
    let mut sign = 1i32;
    let mut prev = IBig::ONE;
    for k in 0..n - 1 {
        if a[k][k] == IBig::ZERO {
            let Some(swap) = (k + 1..n).find(|&r| a[r][k] != IBig::ZERO) else {
                return IBig::ZERO;
            };
            a.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
            a[i][k] = IBig::ZERO;
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if sign < 0 {
        -d
    } else {
        d
    }
}

/// Determinant of a square rational matrix by Gaussian elimination.
pub fn det_rat(matrix: &[Vec<RBig>]) -> RBig {
    let n = matrix.len();
    let mut a: Vec<Vec<RBig>> = matrix.to_vec();
    let mut det = RBig::ONE;
    for k in 0..n {
        let Some(piv) = (k..n).find(|&r| a[r][k] != RBig::ZERO) else {
            return RBig::ZERO;
        };
        if piv != k {
            a.swap(k, piv);
            det = -det;
        }
        let p = a[k][k].clone();
        det *= &p;
        for i in k + 1..n {
            if a[i][k] == RBig::ZERO {
                continue;
            }
            let f = &a[i][k] / &p;
            for j in k..n {
                let v = &a[k][j] * &f;
                a[i][j] -= v;
            }
        }
    }
    det
}

/// Inverse of a nonsingular rational matrix (Gauss–Jordan). `None` when singular.
pub fn inverse_rat(matrix: &[Vec<RBig>]) -> Option<Vec<Vec<RBig>>> {
    let n = matrix.len();
    let mut a: Vec<Vec<RBig>> = matrix
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { RBig::ONE } else { RBig::ZERO }));
            r
        })
        .collect();
    for k in 0..n {
        let piv = (k..n).find(|&r| a[r][k] != RBig::ZERO)?;
        a.swap(k, piv);
        let p = a[k][k].clone();
        for j in 0..2 * n {
            a[k][j] = &a[k][j] / &p;
        }
        for i in 0..n {
            if i == k || a[i][k] == RBig::ZERO {
                continue;
            }
            let f = a[i][k].clone();
            for j in 0..2 * n {
                let v = &a[k][j] * &f;
                a[i][j] -= v;
            }
        }
    }
    Some(a.into_iter().map(|row| row[n..].to_vec()).collect())
}

/// Row vector times matrix: `v * M`.
pub fn vec_mat_rat(v: &[RBig], m: &[Vec<RBig>]) -> Vec<RBig> {
    let cols = m.first().map_or(0, Vec::len);
    (0..cols)
        .map(|j| {
            v.iter()
                .zip(m)
                .fold(RBig::ZERO, |acc, (x, row)| acc + x * &row[j])
        })
        .collect()
}

pub fn mat_mul_int(a: &[Vec<IBig>], b: &[Vec<IBig>]) -> Vec<Vec<IBig>> {
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| {
                    row.iter()
                        .zip(b)
                        .fold(IBig::ZERO, |acc, (x, brow)| acc + x * &brow[j])
                })
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn im(rows: &[&[i64]]) -> Vec<Vec<IBig>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| IBig::from(x)).collect())
            .collect()
    }

    #[test]
    fn bareiss_matches_rational_elimination() {
        let m = im(&[&[2, -1, 0, 3], &[1, 4, -2, 0], &[0, 5, 1, -1], &[7, 0, 2, 2]]);
        let r: Vec<Vec<RBig>> = m
            .iter()
            .map(|row| row.iter().map(|x| RBig::from(x.clone())).collect())
            .collect();
        let d = det_int(&m);
        assert_eq!(RBig::from(d.clone()), det_rat(&r));
        assert_eq!(d, IBig::from(-234));
    }

    #[test]
    fn zero_pivot_and_singular() {
        assert_eq!(det_int(&im(&[&[0, 1], &[1, 0]])), IBig::from(-1));
        assert_eq!(det_int(&im(&[&[1, 2], &[2, 4]])), IBig::ZERO);
        let r = vec![
            vec![RBig::ONE, RBig::from(2)],
            vec![RBig::from(2), RBig::from(4)],
        ];
        assert!(inverse_rat(&r).is_none());
    }

    #[test]
    fn inverse_round_trip() {
        let r: Vec<Vec<RBig>> = [[2, 1], [5, 3]]
            .iter()
            .map(|row| row.iter().map(|&x| RBig::from(x)).collect())
            .collect();
        let inv = inverse_rat(&r).unwrap();
        let e0 = vec_mat_rat(&[RBig::from(2), RBig::from(1)], &inv);
        assert_eq!(e0, vec![RBig::ONE, RBig::ZERO]);
    }
}

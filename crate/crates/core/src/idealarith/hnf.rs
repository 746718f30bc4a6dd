//! Row Hermite normal form of integer lattices that contain `d·Z^m`.

use dashu_int::ops::*;
use dashu_int::IBig;

/// `a mod d` in `[0, d)` for `d > 0`.
pub(crate) fn mod_pos(a: &IBig, d: &IBig) -> IBig {
    a.rem_euclid(d).into()
}

/// `(g, s, t)` with `g = gcd(a, b) = s·a + t·b`, `g ≥ 0`.
fn xgcd(a: &IBig, b: &IBig) -> (IBig, IBig, IBig) {
    let (g, s, t) = a.gcd_ext(b);
    (IBig::from(g), s, t)
}

/// Upper-triangular row HNF of the Z-span of `gens` together with `d·Z^m`.
///
/// Diagonal entries are positive and divide `d`; entries above each pivot are
/// reduced into `[0, pivot)`. All intermediate entries stay below `d` in size,
/// which is what keeps high ideal powers cheap.
pub fn hnf_mod(gens: &[Vec<IBig>], m: usize, d: &IBig) -> Vec<Vec<IBig>> {
    assert!(*d > IBig::ZERO, "modulus must be positive");
    let mut pending: Vec<Vec<IBig>> = gens
        .iter()
        .map(|r| {
            debug_assert_eq!(r.len(), m);
            r.iter().map(|x| mod_pos(x, d)).collect()
        })
        .filter(|r: &Vec<IBig>| r.iter().any(|x| *x != IBig::ZERO))
        .collect();
    let mut out: Vec<Vec<IBig>> = Vec::with_capacity(m);
    for col in 0..m {
        let mut pivot = vec![IBig::ZERO; m];
        pivot[col] = d.clone();
        for row in pending.iter_mut() {
            if row[col] == IBig::ZERO {
                continue;
            }
            let (g, s, t) = xgcd(&pivot[col], &row[col]);
            let a = &pivot[col] / &g;
            let b = &row[col] / &g;
            let new_pivot: Vec<IBig> = (0..m)
                .map(|k| mod_pos(&(&s * &pivot[k] + &t * &row[k]), d))
                .collect();
            let new_row: Vec<IBig> = (0..m)
                .map(|k| mod_pos(&(&a * &row[k] - &b * &pivot[k]), d))
                .collect();
            // reducing mod d can turn a pivot of exactly d into 0
            pivot = new_pivot;
            if pivot[col] == IBig::ZERO {
                pivot[col] = d.clone();
            }
            *row = new_row;
        }
        // (d / g)·pivot − d·e_col lies in the lattice and carries what the
        // reduction mod d dropped from later columns
        let g = pivot[col].clone();
        if g != *d {
            let factor = d / &g;
            let extra: Vec<IBig> = (0..m)
                .map(|k| {
                    if k == col {
                        IBig::ZERO
                    } else {
                        mod_pos(&(&factor * &pivot[k]), d)
                    }
                })
                .collect();
            pending.push(extra);
        }
        pending.retain(|r| r.iter().any(|x| *x != IBig::ZERO));
        out.push(pivot);
    }
    normalize(&mut out);
    out
}

/// Reduce entries above each pivot into `[0, pivot)`.
fn normalize(rows: &mut [Vec<IBig>]) {
    let m = rows.len();
    for j in 0..m {
        let h = rows[j][j].clone();
        for i in 0..j {
            let q = (&rows[i][j]).div_euclid(&h);
            if q != IBig::ZERO {
                for k in j..m {
                    let v = &q * &rows[j][k];
                    rows[i][k] -= v;
                }
            }
        }
    }
}

/// Express `x` as an integer combination of the rows of an upper-triangular
/// HNF, or `None` when it is not in their span.
pub fn solve_triangular(rows: &[Vec<IBig>], x: &[IBig]) -> Option<Vec<IBig>> {
    let m = rows.len();
    let mut rest = x.to_vec();
    let mut coeffs = vec![IBig::ZERO; m];
    for col in 0..m {
        let h = &rows[col][col];
        let (q, r) = (&rest[col]).div_rem_euclid(h);
        if r != dashu_int::UBig::ZERO {
            return None;
        }
        if q != IBig::ZERO {
            for k in col..m {
                let v = &q * &rows[col][k];
                rest[k] -= v;
            }
        }
        coeffs[col] = q;
    }
    Some(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg;

    fn ints(rows: &[&[i64]]) -> Vec<Vec<IBig>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| IBig::from(x)).collect())
            .collect()
    }

    fn is_hnf(h: &[Vec<IBig>]) -> bool {
        let m = h.len();
        (0..m).all(|i| {
            h[i][i] > IBig::ZERO
                && (0..i).all(|k| h[i][k] == IBig::ZERO)
                && (0..i).all(|k| h[k][i] >= IBig::ZERO && h[k][i] < h[i][i])
        })
    }

    #[test]
    fn empty_generators_give_scaled_identity() {
        let h = hnf_mod(&[], 3, &IBig::from(5));
        assert_eq!(h, ints(&[&[5, 0, 0], &[0, 5, 0], &[0, 0, 5]]));
    }

    #[test]
    fn known_sublattice() {
        // span{(2,1), (0,3)} has index 6 and contains 6·Z^2
        let h = hnf_mod(&ints(&[&[2, 1], &[0, 3]]), 2, &IBig::from(6));
        assert!(is_hnf(&h));
        assert_eq!(linalg::det_int(&h), IBig::from(6));
        assert_eq!(h, ints(&[&[2, 1], &[0, 3]]));
    }

    #[test]
    fn modulus_larger_than_index() {
        // span{(1,1), (0,2)} has index 2; reducing modulo 8 must not lose that
        let h = hnf_mod(&ints(&[&[1, 1], &[0, 2], &[3, 5]]), 2, &IBig::from(8));
        assert_eq!(h, ints(&[&[1, 1], &[0, 2]]));
    }

    #[test]
    fn triangular_membership() {
        let h = ints(&[&[2, 1], &[0, 3]]);
        let x: Vec<IBig> = [4, 5].iter().map(|&v| IBig::from(v)).collect();
        assert_eq!(solve_triangular(&h, &x), Some(vec![IBig::from(2), IBig::from(1)]));
        let y: Vec<IBig> = [1, 0].iter().map(|&v| IBig::from(v)).collect();
        assert_eq!(solve_triangular(&h, &y), None);
    }
}

use crate::embedding::LatticeBasis;
use crate::error::{Error, Result};
use crate::real::{self, Real};
use dashu_int::IBig;

pub const DEFAULT_DELTA: f64 = 0.99;

fn dot(a: &[Real], b: &[Real]) -> Real {
    a.iter()
        .zip(b)
        .fold(real::zero(a[0].precision()), |acc, (x, y)| acc + x * y)
}

struct State {
    rows: Vec<Vec<Real>>,
    coords: Vec<Vec<IBig>>,
    transform: Vec<Vec<IBig>>,
    mu: Vec<Vec<Real>>,
    bstar: Vec<Real>,
    half: Real,
}

impl State {
    fn gram_schmidt_row(&mut self, k: usize) -> Result<()> {
        for j in 0..k {
            let mut v = dot(&self.rows[k], &self.rows[j]);
            for i in 0..j {
                v -= &self.mu[j][i] * &self.mu[k][i] * &self.bstar[i];
            }
            self.mu[k][j] = v / &self.bstar[j];
        }
        let mut b = dot(&self.rows[k], &self.rows[k]);
        for j in 0..k {
            b -= &self.mu[k][j] * &self.mu[k][j] * &self.bstar[j];
        }
        if b <= real::zero(b.precision()) {
            return Err(Error::PrecisionExhausted(format!(
                "Gram-Schmidt norm of row {k} is not positive; basis is singular at this precision"
            )));
        }
        self.bstar[k] = b;
        Ok(())
    }

    fn reduce(&mut self, k: usize, l: usize) {
        if real::abs(&self.mu[k][l]) <= self.half {
            return;
        }
        let q = real::round_to_int(&self.mu[k][l]);
        let qr = real::from_int(&q, self.half.precision());
        for c in 0..self.rows[k].len() {
            let v = &qr * &self.rows[l][c];
            self.rows[k][c] -= v;
        }
        for c in 0..self.coords[k].len() {
            let v = &q * &self.coords[l][c];
            self.coords[k][c] -= v;
        }
        for c in 0..self.transform[k].len() {
            let v = &q * &self.transform[l][c];
            self.transform[k][c] -= v;
        }
        self.mu[k][l] -= &qr;
        for i in 0..l {
            let v = &qr * &self.mu[l][i];
            self.mu[k][i] -= v;
        }
    }

    fn swap(&mut self, k: usize, kmax: usize) {
        self.rows.swap(k, k - 1);
        self.coords.swap(k, k - 1);
        self.transform.swap(k, k - 1);
        for j in 0..k - 1 {
            let t = self.mu[k][j].clone();
            self.mu[k][j] = self.mu[k - 1][j].clone();
            self.mu[k - 1][j] = t;
        }
        let m = self.mu[k][k - 1].clone();
        let b = &self.bstar[k] + &m * &m * &self.bstar[k - 1];
        self.mu[k][k - 1] = &m * &self.bstar[k - 1] / &b;
        self.bstar[k] = &self.bstar[k - 1] * &self.bstar[k] / &b;
        self.bstar[k - 1] = b;
        for i in k + 1..=kmax {
            let t = self.mu[i][k].clone();
            self.mu[i][k] = &self.mu[i][k - 1] - &m * &t;
            self.mu[i][k - 1] = t + &self.mu[k][k - 1] * &self.mu[i][k];
        }
    }
}

/// δ-LLL reduction. Returns the reduced basis together with the unimodular
/// transform U such that reduced rows = U · input rows.
pub fn lll_reduce_with_transform(
    basis: &LatticeBasis,
    delta: f64,
) -> Result<(LatticeBasis, Vec<Vec<IBig>>)> {
    if !(delta > 0.25 && delta < 1.0) {
        return Err(Error::DomainError(format!(
            "LLL parameter must lie in (0.25, 1), got {delta}"
        )));
    }
    let n = basis.rank();
    let prec = basis.precision;
    let identity: Vec<Vec<IBig>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { IBig::ONE } else { IBig::ZERO })
                .collect()
        })
        .collect();
    if n == 0 {
        return Ok((basis.clone(), identity));
    }
    let mut st = State {
        rows: basis.rows.clone(),
        coords: basis.coords.clone(),
        transform: identity,
        mu: vec![vec![real::zero(prec); n]; n],
        bstar: vec![real::zero(prec); n],
        half: real::from_f64(0.5, prec),
    };
    let delta_r = real::from_f64(delta, prec);
    st.gram_schmidt_row(0)?;
    let mut k = 1;
    let mut kmax = 0;
    let mut iterations = 0usize;
    while k < n {
        iterations += 1;
        if iterations > 1_000_000 {
            return Err(Error::PrecisionExhausted("LLL did not terminate".into()));
        }
        if k > kmax {
            kmax = k;
            st.gram_schmidt_row(k)?;
        }
        st.reduce(k, k - 1);
        let lhs = st.bstar[k].clone();
        let rhs = (&delta_r - &st.mu[k][k - 1] * &st.mu[k][k - 1]) * &st.bstar[k - 1];
        if lhs < rhs {
            st.swap(k, kmax);
            k = (k - 1).max(1);
        } else {
            for l in (0..k - 1).rev() {
                st.reduce(k, l);
            }
            k += 1;
        }
    }
    let out = LatticeBasis {
        rows: st.rows,
        coords: st.coords,
        precision: prec,
        det_rel_error: basis.det_rel_error,
    };
    Ok((out, st.transform))
}

pub fn lll_reduce(basis: &LatticeBasis, delta: f64) -> Result<LatticeBasis> {
    lll_reduce_with_transform(basis, delta).map(|(b, _)| b)
}

/// Gram–Schmidt data (μ, ‖b*_i‖²) of a basis.
pub fn gram_schmidt(rows: &[Vec<Real>]) -> Result<(Vec<Vec<Real>>, Vec<Real>)> {
    let n = rows.len();
    let prec = rows[0][0].precision();
    let mut st = State {
        rows: rows.to_vec(),
        coords: vec![vec![]; n],
        transform: vec![vec![]; n],
        mu: vec![vec![real::zero(prec); n]; n],
        bstar: vec![real::zero(prec); n],
        half: real::from_f64(0.5, prec),
    };
    for k in 0..n {
        st.gram_schmidt_row(k)?;
    }
    Ok((st.mu, st.bstar))
}

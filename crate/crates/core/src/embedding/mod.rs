//! The canonical embedding τ: K → R^m and ideal lattices τ(I).
//!
//! Coordinates are ρ_1(x), …, ρ_s(x) for the real embeddings followed by
//! √2·Re σ_j(x), √2·Im σ_j(x) for each complex pair, so that
//! ‖τ(x)‖² = Σ over all m embeddings of |σ(x)|².

use crate::error::{Error, Result};
use crate::idealarith::IdealHNF;
use crate::numfield::{complex_roots, FieldElement, NumberField, RootSet, MIN_ROOT_PRECISION};
use crate::real::{self, Complex, Real};
use dashu_int::IBig;

/// Working precision for lattices up to level ℓ of a prime of norm q.
pub fn level_precision(m: usize, q: u64, level: usize) -> usize {
    let bits = (2.0 * level as f64 / m as f64) * (q as f64).log2();
    192.max(bits.ceil() as usize + 96)
}

/// Roots of f at a fixed precision, with their powers cached.
#[derive(Clone, Debug)]
pub struct EmbeddingContext {
    field: NumberField,
    roots: RootSet,
    precision: usize,
    /// powers[r][j] = (root r)^j for the s real roots then the t pair representatives
    powers: Vec<Vec<Complex>>,
    sqrt2: Real,
}

impl EmbeddingContext {
    pub fn new(field: &NumberField, precision_bits: usize) -> Result<Self> {
        let roots = complex_roots(field, precision_bits)?;
        Ok(Self::from_roots(field, roots))
    }

    fn from_roots(field: &NumberField, roots: RootSet) -> Self {
        let prec = roots.precision;
        let m = field.degree();
        let reps: Vec<Complex> = roots
            .real
            .iter()
            .map(|r| Complex::from_real(r.clone(), prec))
            .chain(roots.pairs.iter().cloned())
            .collect();
        let powers = reps
            .iter()
            .map(|z| {
                let mut out = Vec::with_capacity(m);
                let mut cur = Complex::from_real(real::from_i64(1, prec), prec);
                for _ in 0..m {
                    out.push(cur.clone());
                    cur = &cur * z;
                }
                out
            })
            .collect();
        Self {
            field: field.clone(),
            roots,
            precision: prec,
            powers,
            sqrt2: real::from_i64(2, prec).sqrt(),
        }
    }

    /// A copy whose first root is moved by a relative 2^{-bits}; used to
    /// exercise the determinant check.
    pub fn with_root_fault(&self, bits: usize) -> Self {
        let mut roots = self.roots.clone();
        let eps = real::pow2(-(bits as isize), self.precision);
        if let Some(r) = roots.real.first_mut() {
            *r = &*r + &(&*r * &eps) + &eps;
        } else if let Some(z) = roots.pairs.first_mut() {
            z.re = &z.re + &(&z.im * &eps) + &eps;
        }
        Self::from_roots(&self.field, roots)
    }

    pub fn field(&self) -> &NumberField {
        &self.field
    }

    pub fn roots(&self) -> &RootSet {
        &self.roots
    }

    pub fn precision(&self) -> usize {
        self.precision
    }

    pub fn degree(&self) -> usize {
        self.field.degree()
    }

    /// τ(x) for integer power-basis coordinates.
    pub fn embed_coords(&self, c: &[IBig]) -> Vec<Real> {
        let xs: Vec<Real> = c.iter().map(|v| real::from_int(v, self.precision)).collect();
        self.embed_reals(&xs)
    }

    fn embed_reals(&self, xs: &[Real]) -> Vec<Real> {
        let s = self.roots.real.len();
        let mut out = Vec::with_capacity(self.degree());
        for (r, pw) in self.powers.iter().enumerate() {
            let mut re = real::zero(self.precision);
            let mut im = real::zero(self.precision);
            for (x, p) in xs.iter().zip(pw) {
                if real::is_zero(x) {
                    continue;
                }
                re += x * &p.re;
                if r >= s {
                    im += x * &p.im;
                }
            }
            if r < s {
                out.push(re);
            } else {
                out.push(re * &self.sqrt2);
                out.push(im * &self.sqrt2);
            }
        }
        out
    }

    /// τ(x) for any field element.
    pub fn embed_element(&self, x: &FieldElement) -> Result<Vec<Real>> {
        if x.dim() != self.degree() {
            return Err(Error::DimensionMismatch {
                expected: self.degree(),
                got: x.dim(),
            });
        }
        let xs: Vec<Real> = x
            .coords()
            .iter()
            .map(|c| real::from_ratio(c, self.precision))
            .collect();
        Ok(self.embed_reals(&xs))
    }

    /// ‖τ(x)‖² for integer coordinates.
    pub fn squared_length(&self, c: &[IBig]) -> Real {
        squared_norm(&self.embed_coords(c))
    }
}

pub fn squared_norm(v: &[Real]) -> Real {
    v.iter()
        .fold(real::zero(v.first().map_or(64, |x| x.precision())), |acc, x| {
            acc + x * x
        })
}

/// Rows τ(b_k) of an ideal basis, with the determinant check recorded.
#[derive(Clone, Debug)]
pub struct LatticeBasis {
    pub rows: Vec<Vec<Real>>,
    /// Integer power-basis coordinates of each row.
    pub coords: Vec<Vec<IBig>>,
    pub precision: usize,
    /// Relative deviation of |det| from N(I)·√|D_K|.
    pub det_rel_error: f64,
}

impl LatticeBasis {
    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Embedded rows of arbitrary integer coordinates, without any check.
    pub fn from_coords(ctx: &EmbeddingContext, coords: Vec<Vec<IBig>>) -> Self {
        let rows = coords.iter().map(|c| ctx.embed_coords(c)).collect();
        Self {
            rows,
            coords,
            precision: ctx.precision(),
            det_rel_error: 0.0,
        }
    }

    /// A basis given directly by real rows; `coords` is the identity.
    pub fn from_rows(rows: Vec<Vec<Real>>, precision: usize) -> Self {
        let n = rows.len();
        let coords = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| if i == j { IBig::ONE } else { IBig::ZERO })
                    .collect()
            })
            .collect();
        Self {
            rows,
            coords,
            precision,
            det_rel_error: 0.0,
        }
    }

    pub fn gram(&self) -> Vec<Vec<Real>> {
        gram(&self.rows)
    }

    pub fn abs_determinant(&self) -> Real {
        real::abs(&determinant(&self.rows))
    }

    /// Multiply every row by `c`.
    pub fn scaled(&self, c: &Real) -> Self {
        let mut out = self.clone();
        for row in out.rows.iter_mut() {
            for x in row.iter_mut() {
                *x = &*x * c;
            }
        }
        out
    }
}

pub fn gram(rows: &[Vec<Real>]) -> Vec<Vec<Real>> {
    let n = rows.len();
    let mut g = vec![Vec::<Real>::with_capacity(n); n];
    for i in 0..n {
        for j in 0..n {
            let v = if j < i {
                g[j][i].clone()
            } else {
                rows[i]
                    .iter()
                    .zip(&rows[j])
                    .fold(real::zero(rows[i][0].precision()), |acc, (a, b)| acc + a * b)
            };
            g[i].push(v);
        }
    }
    g
}

/// Determinant by Gaussian elimination with partial pivoting.
pub fn determinant(rows: &[Vec<Real>]) -> Real {
    let n = rows.len();
    let mut a = rows.to_vec();
    let prec = a[0][0].precision();
    let mut det = real::from_i64(1, prec);
    for col in 0..n {
        let piv = (col..n)
            .max_by(|&i, &j| {
                real::abs(&a[i][col])
                    .partial_cmp(&real::abs(&a[j][col]))
                    .unwrap_or(std::cmp::Ordering::Equal)
            })
            .expect("nonempty");
        if real::is_zero(&a[piv][col]) {
            return real::zero(prec);
        }
        if piv != col {
            a.swap(piv, col);
            det = -det;
        }
        det *= &a[col][col];
        for r in col + 1..n {
            let factor = &a[r][col] / &a[col][col];
            for k in col..n {
                let v = &factor * &a[col][k];
                a[r][k] -= v;
            }
        }
    }
    det
}

/// τ(I) with the check |det| = N(I)·√|D_K| to relative error 2^{-precision/4}.
pub fn lattice_basis(ctx: &EmbeddingContext, ideal: &IdealHNF) -> Result<LatticeBasis> {
    if ideal.degree() != ctx.degree() {
        return Err(Error::DimensionMismatch {
            expected: ctx.degree(),
            got: ideal.degree(),
        });
    }
    let mut basis = LatticeBasis::from_coords(ctx, ideal.rows().to_vec());
    basis.det_rel_error = check_determinant(ctx, &basis, &ideal.norm())?;
    Ok(basis)
}

/// Compare |det| of an embedded basis against N·√|D_K|.
pub fn check_determinant(ctx: &EmbeddingContext, basis: &LatticeBasis, norm: &IBig) -> Result<f64> {
    let prec = ctx.precision();
    let disc = IBig::from(ctx.field().abs_discriminant());
    let expected = real::from_int(norm, prec) * real::from_int(&disc, prec).sqrt();
    let computed = basis.abs_determinant();
    let rel = real::abs(&((&computed - &expected) / &expected));
    let tol = real::pow2(-((prec / 4) as isize), prec);
    let rel_f = real::to_f64(&rel);
    if rel > tol {
        return Err(Error::DeterminantMismatch {
            computed: real::log2_abs(&computed),
            expected: real::log2_abs(&expected),
            rel_error: rel_f,
        });
    }
    Ok(rel_f)
}

/// Check that the root precision is acceptable before building a context.
pub fn validate_precision(bits: usize) -> Result<()> {
    if bits < MIN_ROOT_PRECISION {
        return Err(Error::DomainError(format!(
            "precision must be at least {MIN_ROOT_PRECISION} bits"
        )));
    }
    Ok(())
}

use dashu_int::{IBig, UBig};
use dashu_ratio::RBig;
use std::fmt;

/// Element of K = Q[x]/(f) written over the power basis 1, α, …, α^{m-1}.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FieldElement {
    coords: Vec<RBig>,
}

impl FieldElement {
    pub fn new(coords: Vec<RBig>) -> Self {
        Self { coords }
    }

    pub fn from_ints(coords: &[IBig]) -> Self {
        Self::new(coords.iter().cloned().map(RBig::from).collect())
    }

    pub fn from_i64s(coords: &[i64]) -> Self {
        Self::new(coords.iter().map(|&c| RBig::from(c)).collect())
    }

    pub fn zero(m: usize) -> Self {
        Self::new(vec![RBig::ZERO; m])
    }

    pub fn one(m: usize) -> Self {
        Self::constant(m, IBig::ONE)
    }

    pub fn constant(m: usize, c: IBig) -> Self {
        let mut v = vec![RBig::ZERO; m];
        v[0] = RBig::from(c);
        Self::new(v)
    }

    /// The generator α.
    pub fn generator(m: usize) -> Self {
        let mut v = vec![RBig::ZERO; m];
        v[1] = RBig::ONE;
        Self::new(v)
    }

    pub fn coords(&self) -> &[RBig] {
        &self.coords
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| *c == RBig::ZERO)
    }

    pub fn is_integral(&self) -> bool {
        self.coords.iter().all(|c| *c.denominator() == UBig::ONE)
    }

    /// Integer coordinates when the element lies in Z[α].
    pub fn int_coords(&self) -> Option<Vec<IBig>> {
        self.is_integral()
            .then(|| self.coords.iter().map(|c| c.numerator().clone()).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::new(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self::new(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }

    pub fn scale(&self, s: &RBig) -> Self {
        Self::new(self.coords.iter().map(|c| c * s).collect())
    }
}

impl fmt::Display for FieldElement {
    /// Power-basis form such as `2 - a + 3*a^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coords.iter().enumerate() {
            if *c == RBig::ZERO {
                continue;
            }
            let neg = *c < RBig::ZERO;
            let mag = if neg { -c.clone() } else { c.clone() };
            match (first, neg) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            first = false;
            match i {
                0 => write!(f, "{mag}")?,
                _ if mag == RBig::ONE => {}
                _ => write!(f, "{mag}*")?,
            }
            match i {
                0 => {}
                1 => write!(f, "a")?,
                _ => write!(f, "a^{i}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

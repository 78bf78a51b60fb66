use super::{dot, is_zero_vec, kernel_basis, QMatrix, QVector, Rational, ScaledRational};
use crate::error::{Error, Result};
use num_traits::Zero;

/// A linear subspace of `Q^n` with its canonical basis: the nonzero rows of the
/// reduced row echelon form of any spanning set.
///
/// Row `i` of the basis has a 1 in pivot column `p_i` and zeros in the other
/// pivot columns, so the chart coordinates of `x ∈ E` are simply its entries at
/// the pivot columns. This is the lexicographically smallest rational chart.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Vec<QVector>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn span(ambient_dim: usize, vectors: &[QVector]) -> Result<Self> {
        for v in vectors {
            check_dim(ambient_dim, v)?;
        }
        let m = QMatrix::from_rows(vectors, ambient_dim)?;
        let (r, pivots) = m.rref();
        let basis = (0..pivots.len()).map(|i| r.row(i)).collect();
        Ok(Subspace {
            ambient_dim,
            basis,
            pivots,
        })
    }

    /// Like [`Subspace::span`] but rejects dependent input.
    pub fn from_basis(ambient_dim: usize, basis: &[QVector]) -> Result<Self> {
        let s = Self::span(ambient_dim, basis)?;
        if s.dim() != basis.len() {
            return Err(Error::DependentBasis);
        }
        Ok(s)
    }

    pub fn full(n: usize) -> Self {
        Self::span(n, &(0..n).map(|i| super::unit_vec(n, i)).collect::<Vec<_>>())
            .expect("unit vectors have the ambient dimension")
    }

    pub fn zero(n: usize) -> Self {
        Subspace {
            ambient_dim: n,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient_dim
    }

    pub fn basis(&self) -> &[QVector] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn contains(&self, x: &[Rational]) -> bool {
        if x.len() != self.ambient_dim {
            return false;
        }
        let back = self.from_chart(&self.chart_coords(x));
        back.as_slice() == x
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|b| self.contains(b))
    }

    /// Chart coordinates of `x`; meaningful for `x ∈ E`.
    pub fn chart_coords(&self, x: &[Rational]) -> QVector {
        self.pivots.iter().map(|&p| x[p].clone()).collect()
    }

    pub fn from_chart(&self, y: &[Rational]) -> QVector {
        let mut x = vec![Rational::zero(); self.ambient_dim];
        for (c, b) in y.iter().zip(&self.basis) {
            if c.is_zero() {
                continue;
            }
            for (xi, bi) in x.iter_mut().zip(b) {
                if !bi.is_zero() {
                    *xi += c * bi;
                }
            }
        }
        x
    }

    pub fn project(&self, x: &[Rational]) -> Result<QVector> {
        check_dim(self.ambient_dim, x)?;
        if self.is_full() {
            return Ok(x.to_vec());
        }
        if self.dim() == 0 {
            return Ok(vec![Rational::zero(); self.ambient_dim]);
        }
        let k = self.dim();
        let mut gram = QMatrix::zeros(k, k);
        for i in 0..k {
            for j in 0..k {
                gram.set(i, j, dot(&self.basis[i], &self.basis[j]));
            }
        }
        let rhs: QVector = self.basis.iter().map(|b| dot(b, x)).collect();
        let c = gram
            .solve(&rhs)?
            .ok_or_else(|| Error::invariant("Gram matrix of a basis is singular"))?;
        Ok(self.from_chart(&c))
    }

    pub fn orthogonal_complement(&self) -> Subspace {
        let m = QMatrix::from_rows(&self.basis, self.ambient_dim).expect("basis rows have ambient dim");
        Self::span(self.ambient_dim, &kernel_basis(&m)).expect("kernel vectors have ambient dim")
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        check_dim(self.ambient_dim, &vec![Rational::zero(); other.ambient_dim])?;
        let mut all = self.basis.clone();
        all.extend(other.basis.iter().cloned());
        Self::span(self.ambient_dim, &all)
    }

    pub fn intersection(&self, other: &Subspace) -> Result<Subspace> {
        let perp = self.orthogonal_complement().sum(&other.orthogonal_complement())?;
        Ok(perp.orthogonal_complement())
    }

    /// `E ∩ v⊥`.
    pub fn meet_hyperplane(&self, v: &[Rational]) -> Result<Subspace> {
        check_dim(self.ambient_dim, v)?;
        let normal = Self::span(self.ambient_dim, &[v.to_vec()])?;
        self.intersection(&normal.orthogonal_complement())
    }

    /// `√det(BᵀB)` for the canonical basis.
    pub fn gram_sqrt(&self) -> ScaledRational {
        gram_sqrt(&self.basis).expect("canonical basis is independent")
    }
}

fn check_dim(n: usize, v: &[Rational]) -> Result<()> {
    if v.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: v.len(),
        });
    }
    Ok(())
}

/// `P_E x`, the orthogonal projection onto `E`.
pub fn orthogonal_projection(e: &Subspace, x: &[Rational]) -> Result<QVector> {
    e.project(x)
}

/// `√det(BᵀB)` for the vectors `B`; the volume of the parallelotope they span.
pub fn gram_sqrt(basis: &[QVector]) -> Result<ScaledRational> {
    let k = basis.len();
    if k == 0 {
        return Ok(ScaledRational::one());
    }
    let n = basis[0].len();
    for b in basis {
        check_dim(n, b)?;
    }
    if basis.iter().any(|b| is_zero_vec(b)) {
        return Err(Error::DependentBasis);
    }
    let mut gram = QMatrix::zeros(k, k);
    for i in 0..k {
        for j in 0..k {
            gram.set(i, j, dot(&basis[i], &basis[j]));
        }
    }
    let det = gram.det()?;
    if det.is_zero() {
        return Err(Error::DependentBasis);
    }
    ScaledRational::sqrt(det)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratgeo::{int, qvec, rat};

    #[test]
    fn projection_examples() {
        let e1 = Subspace::span(3, &[qvec(&[1, 0, 0])]).unwrap();
        assert_eq!(e1.project(&qvec(&[2, 3, 5])).unwrap(), qvec(&[2, 0, 0]));
        let diag = Subspace::span(2, &[qvec(&[1, 1])]).unwrap();
        assert_eq!(diag.project(&qvec(&[1, 0])).unwrap(), vec![rat(1, 2), rat(1, 2)]);
        let full = Subspace::full(2);
        assert_eq!(full.project(&qvec(&[7, -3])).unwrap(), qvec(&[7, -3]));
        assert!(full.project(&qvec(&[1, 2, 3])).is_err());
    }

    #[test]
    fn gram_sqrt_examples() {
        assert_eq!(gram_sqrt(&[qvec(&[1, 0]), qvec(&[0, 1])]).unwrap(), ScaledRational::one());
        assert_eq!(gram_sqrt(&[qvec(&[1, 1])]).unwrap(), ScaledRational::sqrt(int(2)).unwrap());
        assert_eq!(
            gram_sqrt(&[qvec(&[1, 0, 0]), qvec(&[1, 1, 0])]).unwrap(),
            ScaledRational::one()
        );
        assert_eq!(gram_sqrt(&[qvec(&[1, 2]), qvec(&[2, 4])]), Err(Error::DependentBasis));
    }

    #[test]
    fn canonical_basis_and_chart() {
        let e = Subspace::span(3, &[qvec(&[2, 2, 0]), qvec(&[1, 1, 1]), qvec(&[3, 3, 1])]).unwrap();
        assert_eq!(e.dim(), 2);
        assert_eq!(e.basis(), &[qvec(&[1, 1, 0]), qvec(&[0, 0, 1])]);
        let x = qvec(&[4, 4, -2]);
        assert!(e.contains(&x));
        assert_eq!(e.from_chart(&e.chart_coords(&x)), x);
        assert!(!e.contains(&qvec(&[1, 0, 0])));
        let perp = e.orthogonal_complement();
        assert_eq!(perp.basis(), &[qvec(&[1, -1, 0])]);
        assert_eq!(e.intersection(&perp).unwrap().dim(), 0);
        assert_eq!(
            e.meet_hyperplane(&qvec(&[0, 0, 1])).unwrap(),
            Subspace::span(3, &[qvec(&[1, 1, 0])]).unwrap()
        );
        assert!(Subspace::from_basis(3, &[qvec(&[1, 0, 0]), qvec(&[2, 0, 0])]).is_err());
    }
}

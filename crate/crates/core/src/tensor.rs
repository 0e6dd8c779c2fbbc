//! Iterated tensor products `M_1 (x)_{A_1} M_2 (x)_{A_2} ... (x) M_n` as
//! quotients of the Kronecker grid by the balancing relations.
//!
//! Raw grid index of `e_{i_1} (x) ... (x) e_{i_n}` is row-major in
//! `(i_1, ..., i_n)`. The quotient basis is the set of non-pivot columns of
//! the RREF relation space, so `lift` sends a quotient coordinate to a single
//! raw basis vector. Longer chains are built one factor at a time.

use crate::algebra::AlgebraMorphism;
use crate::error::{Error, Result};
use crate::field::{Fp, Scalar};
use crate::linalg::{vector, Matrix, Subspace};
use crate::module::{combine, quotient_maps, Bimodule, Side};

#[derive(Clone, Debug)]
pub struct TensorChain {
    factors: Vec<Bimodule>,
    project: Matrix,
    lift: Matrix,
    module: Bimodule,
}

impl TensorChain {
    pub fn new(factors: Vec<Bimodule>) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::dims("tensor chain needs at least one factor"));
        }
        for (t, pair) in factors.windows(2).enumerate() {
            if pair[0].right_algebra() != pair[1].left_algebra() {
                return Err(Error::AlgebraMismatch(format!(
                    "tensor junction {t}: right algebra of factor {t} differs from left algebra of factor {}",
                    t + 1
                )));
            }
        }
        if factors.len() <= 2 {
            return TensorChain::direct(factors);
        }
        // ((M_1 (x) ... (x) M_{n-1}) (x) M_n), composing the quotient maps
        let f = factors[0].field();
        let (init, last) = factors.split_at(factors.len() - 1);
        let prefix = TensorChain::new(init.to_vec())?;
        let outer = TensorChain::direct(vec![prefix.module.clone(), last[0].clone()])?;
        let id_last = Matrix::identity(f, last[0].dim());
        let project = prefix.project.kron(&id_last).mul(&outer.project);
        let lift = outer.lift.mul(&prefix.lift.kron(&id_last));
        Ok(TensorChain {
            factors,
            project,
            lift,
            module: outer.module,
        })
    }

    /// One or two factors: quotient of the raw grid by the RREF relation space.
    fn direct(factors: Vec<Bimodule>) -> Result<Self> {
        let f = factors[0].field();
        let dims: Vec<usize> = factors.iter().map(Bimodule::dim).collect();
        let raw: usize = dims.iter().product();

        let mut blocks = Vec::new();
        if let [m, n] = &factors[..] {
            let id_m = Matrix::identity(f, m.dim());
            let id_n = Matrix::identity(f, n.dim());
            for (ra, la) in m.right_actions().iter().zip(n.left_actions()) {
                blocks.push(ra.kron(&id_n).sub(&id_m.kron(la)));
            }
        }
        let relations = if blocks.is_empty() {
            Subspace::zero(f, raw)
        } else {
            let refs: Vec<&Matrix> = blocks.iter().collect();
            Subspace::row_space(&Matrix::vstack(f, raw, &refs))
        };

        let first = &factors[0];
        let last = factors.last().expect("non-empty");
        let rest_first = raw / first.dim().max(1);
        let rest_last = raw / last.dim().max(1);
        let raw_left: Vec<Matrix> = first
            .left_actions()
            .iter()
            .map(|a| if raw == 0 { Matrix::zeros(f, 0, 0) } else { a.kron(&Matrix::identity(f, rest_first)) })
            .collect();
        let raw_right: Vec<Matrix> = last
            .right_actions()
            .iter()
            .map(|a| if raw == 0 { Matrix::zeros(f, 0, 0) } else { Matrix::identity(f, rest_last).kron(a) })
            .collect();
        let raw_module = Bimodule::new(
            raw,
            first.left_algebra().clone(),
            last.right_algebra().clone(),
            raw_left,
            raw_right,
        )?;
        let (project, lift) = quotient_maps(&relations);
        let module = if relations.is_zero() {
            raw_module
        } else {
            raw_module.quotient(&relations)?.0
        };
        Ok(TensorChain {
            factors,
            project,
            lift,
            module,
        })
    }

    pub fn pair(m: &Bimodule, n: &Bimodule) -> Result<Self> {
        TensorChain::new(vec![m.clone(), n.clone()])
    }

    pub fn field(&self) -> Fp {
        self.module.field()
    }

    pub fn factors(&self) -> &[Bimodule] {
        &self.factors
    }

    pub fn raw_dim(&self) -> usize {
        self.factors.iter().map(Bimodule::dim).product()
    }

    pub fn dim(&self) -> usize {
        self.module.dim()
    }

    /// Raw grid to quotient, `raw x dim`.
    pub fn project(&self) -> &Matrix {
        &self.project
    }

    /// Quotient to raw grid, `dim x raw`.
    pub fn lift(&self) -> &Matrix {
        &self.lift
    }

    /// The tensor product with its outer actions.
    pub fn module(&self) -> &Bimodule {
        &self.module
    }

    /// Class of a pure tensor.
    pub fn pure(&self, parts: &[&[Scalar]]) -> Vec<Scalar> {
        let f = self.field();
        let raw = parts
            .iter()
            .fold(vec![1], |acc, p| vector::tensor(f, &acc, p));
        self.project.apply(&raw)
    }

    /// Class of the raw basis vector with the given multi-index.
    pub fn raw_index(&self, idx: &[usize]) -> usize {
        idx.iter()
            .zip(&self.factors)
            .fold(0, |acc, (&i, m)| acc * m.dim() + i)
    }

    /// Checks that `raw` (raw grid -> anything) kills the relations and
    /// returns the induced map on the quotient.
    pub fn descend(&self, raw: &Matrix, what: &str) -> Result<Matrix> {
        if raw.rows() != self.raw_dim() {
            return Err(Error::dims(format!("{what}: raw map has wrong row count")));
        }
        let down = self.lift.mul(raw);
        if self.project.mul(&down) != *raw {
            return Err(Error::IllDefined(format!(
                "{what} does not respect the balancing relations"
            )));
        }
        Ok(down)
    }

    /// Map `self -> target` induced factorwise by `maps` (one per factor).
    /// Well-definedness is checked.
    pub fn induced(&self, target: &TensorChain, maps: &[&Matrix]) -> Result<Matrix> {
        if maps.len() != self.factors.len() || target.factors.len() != maps.len() {
            return Err(Error::dims("induced map: factor count"));
        }
        let raw = Matrix::kron_all(self.field(), maps).mul(&target.project);
        self.descend(&raw, "factorwise map")
    }

    /// Map induced factorwise, skipping the well-definedness check.
    pub fn induced_unchecked(&self, target: &TensorChain, maps: &[&Matrix]) -> Matrix {
        self.lift
            .mul(&Matrix::kron_all(self.field(), maps))
            .mul(&target.project)
    }
}

/// `m (x)_a n` as a bimodule with its projection from the raw grid.
pub fn tensor_over(m: &Bimodule, n: &Bimodule) -> Result<(Bimodule, Matrix)> {
    let chain = TensorChain::pair(m, n)?;
    let proj = chain.project().clone();
    Ok((chain.module, proj))
}

/// The canonical map `M (x)_A N -> M (x)_B N` for a right `B`-module `M` and a
/// left `B`-module `N`, both restricted along `beta : A -> B`.
pub fn base_change_chi(m: &Bimodule, n: &Bimodule, beta: &AlgebraMorphism) -> Result<(TensorChain, TensorChain, Matrix)> {
    let over_a = TensorChain::pair(&m.restrict(beta, Side::Right)?, &n.restrict(beta, Side::Left)?)?;
    let over_b = TensorChain::pair(m, n)?;
    let f = m.field();
    let chi = over_a.induced(&over_b, &[&Matrix::identity(f, m.dim()), &Matrix::identity(f, n.dim())])?;
    Ok((over_a, over_b, chi))
}

/// Swap of two tensor factors on the raw grid: `(i, j) -> (j, i)`.
pub fn twist(field: Fp, dm: usize, dn: usize) -> Matrix {
    let mut t = Matrix::zeros(field, dm * dn, dm * dn);
    for i in 0..dm {
        for j in 0..dn {
            t.set(i * dn + j, j * dm + i, 1);
        }
    }
    t
}

/// Raw map `(i, j) -> e_i . x_j` for an action given by `acts` and the
/// coefficient vectors `x_j` (rows of `coeffs`): row `i*J + j` is
/// `sum_k coeffs[j][k] row i of acts[k]`.
pub(crate) fn act_grid(field: Fp, dim: usize, acts: &[Matrix], coeffs: &Matrix) -> Matrix {
    let cols = coeffs.rows();
    let mut out = Matrix::zeros(field, dim * cols, dim);
    for j in 0..cols {
        let a = combine(field, dim, acts, coeffs.row(j));
        for i in 0..dim {
            out.row_mut(i * cols + j).copy_from_slice(a.row(i));
        }
    }
    out
}

/// Raw map `(j, i) -> x_j . e_i` where `x_j` are rows of `coeffs`, acting on
/// the left of a module with actions `acts`: row `j*dim + i`.
pub(crate) fn left_act_grid(field: Fp, dim: usize, acts: &[Matrix], coeffs: &Matrix) -> Matrix {
    let rows = coeffs.rows();
    let mut out = Matrix::zeros(field, rows * dim, dim);
    for j in 0..rows {
        let a = combine(field, dim, acts, coeffs.row(j));
        for i in 0..dim {
            out.row_mut(j * dim + i).copy_from_slice(a.row(i));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Algebra;
    use std::sync::Arc;

    #[test]
    fn unit_law_dimension() {
        let f = Fp::new(3).unwrap();
        let a = Arc::new(Algebra::truncated_polynomial(f, 2));
        let reg = Bimodule::regular(a.clone());
        let n = Bimodule::regular(a).as_left().direct_sum(&reg.as_left()).unwrap();
        let chain = TensorChain::pair(&reg, &n).unwrap();
        assert_eq!(chain.dim(), n.dim());
    }

    #[test]
    fn f4_over_itself() {
        let f4 = Arc::new(Algebra::f4());
        let reg = Bimodule::regular(f4);
        let (t, proj) = tensor_over(&reg, &reg).unwrap();
        assert_eq!(proj.rows(), 4);
        assert_eq!(t.dim(), 2);
        assert!(t.validate().is_ok());
    }

    #[test]
    fn over_ground_field_is_identity_shaped() {
        let f = Fp::new(2).unwrap();
        let m = Bimodule::vector_space(f, 2);
        let n = Bimodule::vector_space(f, 3);
        let (t, proj) = tensor_over(&m, &n).unwrap();
        assert_eq!(t.dim(), 6);
        assert_eq!(proj, Matrix::identity(f, 6));
    }

    #[test]
    fn chi_for_f2_into_f4() {
        let f4 = Arc::new(Algebra::f4());
        let reg = Bimodule::regular(f4.clone());
        let beta = AlgebraMorphism::unit_map(f4);
        let (a, b, chi) = base_change_chi(&reg.as_right(), &reg.as_left(), &beta).unwrap();
        assert_eq!(a.dim(), 4);
        assert_eq!(b.dim(), 2);
        assert_eq!(chi.rank(), 2);
        // chi after the A-projection equals the B-projection
        assert_eq!(a.project().mul(&chi), b.project().clone());
    }

    #[test]
    fn chi_identity_for_identity_beta() {
        let f = Fp::new(3).unwrap();
        let a = Arc::new(Algebra::diagonal(f, 2));
        let reg = Bimodule::regular(a.clone());
        let (_, b, chi) = base_change_chi(&reg, &reg, &AlgebraMorphism::identity(a)).unwrap();
        assert_eq!(chi, Matrix::identity(f, b.dim()));
    }
}

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::TqftError;
use crate::exact::{format_rational, parse_rational, rat, Matrix, Rational};

/// Structure constants `c[i][j][k]` with uᵢuⱼ = Σₖ c[i][j][k]·uₖ, a unit
/// vector and a counit row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrobeniusAlgebra {
    dim: usize,
    structure: Vec<Vec<Vec<Rational>>>,
    unit: Vec<Rational>,
    counit: Vec<Rational>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FrobeniusSpec {
    pub dim: usize,
    pub structure: Vec<Vec<Vec<String>>>,
    pub unit: Vec<String>,
    pub counit: Vec<String>,
}

/// Dual basis, handle element and multiplication by it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HandleData {
    /// `dual_basis[j]` are the coordinates of vⱼ.
    pub dual_basis: Vec<Vec<Rational>>,
    pub handle: Vec<Rational>,
    pub mult_matrix: Matrix<Rational>,
}

fn unit_vector(n: usize, i: usize) -> Vec<Rational> {
    (0..n).map(|k| if k == i { Rational::one() } else { Rational::zero() }).collect()
}

impl FrobeniusAlgebra {
    /// Builds and validates.
    pub fn new(
        structure: Vec<Vec<Vec<Rational>>>,
        unit: Vec<Rational>,
        counit: Vec<Rational>,
    ) -> Result<Self, TqftError> {
        let fa = FrobeniusAlgebra { dim: unit.len(), structure, unit, counit };
        fa.validate()?;
        Ok(fa)
    }

    /// Skips validation; [`FrobeniusAlgebra::validate`] reports what is wrong.
    pub fn new_unchecked(structure: Vec<Vec<Vec<Rational>>>, unit: Vec<Rational>, counit: Vec<Rational>) -> Self {
        FrobeniusAlgebra { dim: unit.len(), structure, unit, counit }
    }

    pub fn from_spec(spec: &FrobeniusSpec) -> Result<Self, TqftError> {
        let fa = Self::parse_spec(spec)?;
        fa.validate()?;
        Ok(fa)
    }

    /// Parses without validating.
    pub fn parse_spec(spec: &FrobeniusSpec) -> Result<Self, TqftError> {
        let v = |xs: &[String]| xs.iter().map(|s| parse_rational(s)).collect::<Result<Vec<_>, _>>();
        let structure = spec
            .structure
            .iter()
            .map(|row| row.iter().map(|c| v(c)).collect::<Result<Vec<_>, _>>())
            .collect::<Result<Vec<_>, _>>()?;
        let fa = FrobeniusAlgebra { dim: spec.dim, structure, unit: v(&spec.unit)?, counit: v(&spec.counit)? };
        fa.check_shape()?;
        Ok(fa)
    }

    pub fn to_spec(&self) -> FrobeniusSpec {
        let v = |xs: &[Rational]| xs.iter().map(format_rational).collect::<Vec<_>>();
        FrobeniusSpec {
            dim: self.dim,
            structure: self.structure.iter().map(|row| row.iter().map(|c| v(c)).collect()).collect(),
            unit: v(&self.unit),
            counit: v(&self.counit),
        }
    }

    /// The one-dimensional algebra ℚ with ε(1) = `counit`.
    pub fn field(counit: Rational) -> Result<Self, TqftError> {
        Self::new(vec![vec![vec![Rational::one()]]], vec![Rational::one()], vec![counit])
    }

    /// ℚ[x]/(xᵐ), m ≥ 2, with ε(1) = μ, ε(x^{m−1}) = 1 and ε(xᵏ) = 0 otherwise.
    pub fn truncated_polynomial(m: usize, mu: Rational) -> Result<Self, TqftError> {
        if m < 2 {
            return Err(TqftError::Malformed("truncated polynomial algebra needs m ≥ 2".into()));
        }
        let structure = (0..m)
            .map(|i| {
                (0..m)
                    .map(|j| if i + j < m { unit_vector(m, i + j) } else { vec![Rational::zero(); m] })
                    .collect()
            })
            .collect();
        let mut counit = vec![Rational::zero(); m];
        counit[0] = mu;
        counit[m - 1] = Rational::one();
        Self::new(structure, unit_vector(m, 0), counit)
    }

    /// The zero algebra.
    pub fn zero() -> Self {
        FrobeniusAlgebra { dim: 0, structure: Vec::new(), unit: Vec::new(), counit: Vec::new() }
    }

    pub fn direct_product(&self, o: &Self) -> Self {
        let n = self.dim + o.dim;
        let mut structure = vec![vec![vec![Rational::zero(); n]; n]; n];
        for (row, src) in structure.iter_mut().zip(&self.structure) {
            for (cell, s) in row.iter_mut().zip(src) {
                cell[..self.dim].clone_from_slice(s);
            }
        }
        for i in 0..o.dim {
            for j in 0..o.dim {
                structure[self.dim + i][self.dim + j][self.dim..].clone_from_slice(&o.structure[i][j]);
            }
        }
        let cat = |a: &[Rational], b: &[Rational]| a.iter().chain(b).cloned().collect::<Vec<_>>();
        FrobeniusAlgebra { dim: n, structure, unit: cat(&self.unit, &o.unit), counit: cat(&self.counit, &o.counit) }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn unit(&self) -> &[Rational] {
        &self.unit
    }

    pub fn counit(&self) -> &[Rational] {
        &self.counit
    }

    pub fn structure(&self) -> &[Vec<Vec<Rational>>] {
        &self.structure
    }

    pub fn mul(&self, a: &[Rational], b: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.dim];
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                if bj.is_zero() {
                    continue;
                }
                let c = ai * bj;
                for (k, s) in self.structure[i][j].iter().enumerate() {
                    if !s.is_zero() {
                        out[k] += &c * s;
                    }
                }
            }
        }
        out
    }

    pub fn epsilon(&self, a: &[Rational]) -> Rational {
        a.iter().zip(&self.counit).map(|(x, e)| x * e).sum()
    }

    pub fn gram(&self) -> Matrix<Rational> {
        Matrix::from_fn(self.dim, self.dim, |i, j| {
            self.structure[i][j].iter().zip(&self.counit).map(|(c, e)| c * e).sum()
        })
    }

    fn check_shape(&self) -> Result<(), TqftError> {
        let n = self.dim;
        let bad = |what: &str| Err(TqftError::DimensionMismatch(what.to_string()));
        if self.unit.len() != n || self.counit.len() != n {
            return bad("unit and counit must have length dim");
        }
        if self.structure.len() != n || self.structure.iter().any(|r| r.len() != n || r.iter().any(|c| c.len() != n)) {
            return bad("structure must be dim × dim × dim");
        }
        Ok(())
    }

    /// Checks shape, commutativity, associativity, unit and nondegeneracy in that order.
    pub fn validate(&self) -> Result<(), TqftError> {
        self.check_shape()?;
        let n = self.dim;
        for i in 0..n {
            for j in i + 1..n {
                if self.structure[i][j] != self.structure[j][i] {
                    return Err(TqftError::NotCommutative { i, j });
                }
            }
        }
        let basis: Vec<Vec<Rational>> = (0..n).map(|i| unit_vector(n, i)).collect();
        for i in 0..n {
            for j in 0..n {
                let ij = &self.structure[i][j];
                for k in 0..n {
                    if self.mul(ij, &basis[k]) != self.mul(&basis[i], &self.structure[j][k]) {
                        return Err(TqftError::NotAssociative { i, j, k });
                    }
                }
            }
        }
        for (i, b) in basis.iter().enumerate() {
            if self.mul(&self.unit, b) != *b {
                return Err(TqftError::UnitFailure(i));
            }
        }
        if self.gram().det()?.is_zero() {
            return Err(TqftError::NondegeneracyFailure);
        }
        Ok(())
    }

    /// vⱼ = Σₖ (G⁻¹)ₖⱼ uₖ, verified against ε(uᵢvⱼ) = δᵢⱼ.
    pub fn dual_basis(&self) -> Result<Vec<Vec<Rational>>, TqftError> {
        let n = self.dim;
        let ginv = self.gram().inverse().map_err(|_| TqftError::NondegeneracyFailure)?;
        let duals: Vec<Vec<Rational>> = (0..n).map(|j| (0..n).map(|k| ginv.get(k, j).clone()).collect()).collect();
        for i in 0..n {
            for (j, v) in duals.iter().enumerate() {
                let e = self.epsilon(&self.mul(&unit_vector(n, i), v));
                let want = if i == j { Rational::one() } else { Rational::zero() };
                if e != want {
                    return Err(TqftError::InternalInconsistency(format!("ε(u{i}v{j}) = {}", format_rational(&e))));
                }
            }
        }
        Ok(duals)
    }

    /// h = Σ uᵢvᵢ with its multiplication matrix (column j = h·uⱼ).
    pub fn handle_element(&self) -> Result<HandleData, TqftError> {
        let n = self.dim;
        let dual_basis = self.dual_basis()?;
        let mut handle = vec![Rational::zero(); n];
        for (i, v) in dual_basis.iter().enumerate() {
            for (k, x) in self.mul(&unit_vector(n, i), v).into_iter().enumerate() {
                handle[k] += x;
            }
        }
        let cols: Vec<Vec<Rational>> = (0..n).map(|j| self.mul(&handle, &unit_vector(n, j))).collect();
        let mult_matrix = Matrix::from_fn(n, n, |i, j| cols[j][i].clone());
        Ok(HandleData { dual_basis, handle, mult_matrix })
    }

    /// ε(hᵍ), cross-checked against tr(M_h^{g−1}) for g ≥ 1 and against dim at g = 1.
    pub fn surface_eval(&self, g: usize) -> Result<Rational, TqftError> {
        let hd = self.handle_element()?;
        self.surface_eval_with(&hd, g)
    }

    pub(crate) fn surface_eval_with(&self, hd: &HandleData, g: usize) -> Result<Rational, TqftError> {
        let mut p = self.unit.clone();
        for _ in 0..g {
            p = self.mul(&p, &hd.handle);
        }
        let value = self.epsilon(&p);
        if g >= 1 {
            let tr = hd.mult_matrix.pow(g - 1)?.trace();
            if tr != value {
                return Err(TqftError::InternalInconsistency(format!(
                    "ε(h^{g}) = {} but tr(M_h^{}) = {}",
                    format_rational(&value),
                    g - 1,
                    format_rational(&tr)
                )));
            }
            if g == 1 && value != rat(self.dim as i64) {
                return Err(TqftError::InternalInconsistency(format!("torus evaluates to {}", format_rational(&value))));
            }
        }
        Ok(value)
    }
}

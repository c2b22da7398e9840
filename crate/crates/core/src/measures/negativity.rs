//! Negativity of a three-qubit state across its `I | JK` cuts.

use crate::basis::Qubit;
use crate::error::{Error, Result};
use crate::linalg::{hermitian_eigenvalues, partial_transpose, ComplexMatrix};

/// `-sum` of the negative eigenvalues of the partial transpose on `part`.
pub fn negativity(rho: &ComplexMatrix, part: Qubit) -> Result<f64> {
    if rho.dim() != 8 {
        return Err(Error::DimensionMismatch {
            expected: 8,
            found: rho.dim(),
        });
    }
    let pt = partial_transpose(rho, part)?;
    Ok(-hermitian_eigenvalues(&pt)?.negative_sum())
}

/// `[N_A|BC, N_B|AC, N_C|AB]`.
pub fn bipartition_negativities(rho: &ComplexMatrix) -> Result<[f64; 3]> {
    Ok([
        negativity(rho, Qubit::A)?,
        negativity(rho, Qubit::B)?,
        negativity(rho, Qubit::C)?,
    ])
}

/// Geometric mean of the three bipartition negativities.
pub fn tripartite_negativity(rho: &ComplexMatrix) -> Result<f64> {
    let [a, b, c] = bipartition_negativities(rho)?;
    Ok((a * b * c).cbrt())
}

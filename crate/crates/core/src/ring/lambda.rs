use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::linalg::{solve_left, Matrix};
use crate::ring::{cyclic_ring, RingElement};

/// Coefficients `(n₁, …, n_{p−1})` with `λᵖ = Σ nⱼ·λʲ` in `R(Z_p)`, where
/// `λ = 1 − σ`.
///
/// The powers of `λ` are expanded through the fusion product and the
/// coefficients found by solving the integer system; the result is checked
/// by substituting back. Only odd `p ≥ 3` is handled.
pub fn lambda_expansion(p: usize) -> Result<Vec<BigInt>> {
    if p % 2 == 0 {
        return Err(Error::Unsupported(format!(
            "even p = {p}; use the ideal-power filtration instead"
        )));
    }
    if p < 3 {
        return Err(Error::InvalidInput(format!("p = {p} must be at least 3")));
    }
    let ring = cyclic_ring(p)?;
    let based = ring.based();
    let lambda = based.one().sub(&based.basis_element(1));
    let mut powers = vec![lambda.clone()];
    for _ in 1..p {
        let next = based.multiply(powers.last().unwrap(), &lambda)?;
        powers.push(next);
    }
    let target = powers.pop().unwrap();
    let system = Matrix::from_rows_with_cols(
        powers.iter().map(|e| e.coeffs().to_vec()).collect(),
        p,
    )?;
    let coeffs = solve_left(&system, target.coeffs()).ok_or_else(|| {
        Error::InvalidInput(format!("λ^{p} is not in the span of lower powers"))
    })?;
    let back = RingElement::new(system.left_mul_vec(&coeffs));
    debug_assert_eq!(back, target);
    if back != target {
        return Err(Error::InvalidInput("back-substitution failed".into()));
    }
    Ok(coeffs)
}

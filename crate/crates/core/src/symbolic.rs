//! Inversion that survives zero super-diagonal entries.
//!
//! Every `g_i = 0` (for `i <= n-3`) is replaced by one shared indeterminate
//! `t`, the whole pipeline runs over rational functions in `t`, and only the
//! finished entries are evaluated at `t = 0`. For a nonsingular matrix the
//! inverse is continuous at `t = 0`, so after cancellation no entry has a pole
//! there.

use std::collections::BTreeSet;

use num_traits::Zero;

use crate::band::{HeptaBands, PaddedBands};
use crate::dense::DenseMatrix;
use crate::error::{HeptaError, Result};
use crate::inverse::{self, back_substitute, last_three_columns, InverseResult, Recurrences};
use crate::scalar::{Mode, Rational, RationalFunction};

/// Bands over `Q(t)` with every vanishing `g_i` replaced by `t`.
#[derive(Clone, Debug)]
pub struct SymbolicLift {
    pub bands: PaddedBands<RationalFunction>,
    /// 1-based indices of the substituted `g_i`.
    pub substituted_indices: BTreeSet<usize>,
}

pub fn lift_to_symbolic(h: &HeptaBands<Rational>) -> SymbolicLift {
    let substituted_indices: BTreeSet<usize> = h.zero_super_diagonals().into_iter().collect();
    let lifted = substituted_indices
        .iter()
        .fold(h.map(|v| RationalFunction::constant(v.clone())), |bands, &i| {
            bands.with_g(i, RationalFunction::t())
        });
    SymbolicLift {
        bands: lifted.pad(),
        substituted_indices,
    }
}

/// Everything the symbolic pipeline produces before `t = 0` is substituted.
#[derive(Clone, Debug)]
pub struct SymbolicInverse {
    pub recurrences: Recurrences<RationalFunction>,
    pub entries: DenseMatrix<RationalFunction>,
    /// `det H(t)`, a polynomial in `t`.
    pub determinant: RationalFunction,
}

/// Runs the recurrences over `Q(t)` without evaluating. Fails with
/// [`HeptaError::SingularMatrix`] when `X_{n+1}` is identically zero.
pub fn invert_symbolic_unevaluated(lift: &SymbolicLift) -> Result<SymbolicInverse> {
    let recurrences = Recurrences::from_padded(lift.bands.clone())?;
    let last = last_three_columns(&recurrences.dets)?;
    let determinant = recurrences.determinant();
    let entries = back_substitute(&recurrences.padded, last)?;
    Ok(SymbolicInverse {
        recurrences,
        entries,
        determinant,
    })
}

fn determinant_at_zero(det: &RationalFunction) -> Result<Rational> {
    let value = det.eval_at_zero()?;
    if value.is_zero() {
        Err(HeptaError::SingularMatrix)
    } else {
        Ok(value)
    }
}

/// Exact inverse of any nonsingular heptadiagonal matrix.
pub fn invert_symbolic(h: &HeptaBands<Rational>) -> Result<InverseResult<Rational>> {
    let lift = lift_to_symbolic(h);
    let recurrences = Recurrences::from_padded(lift.bands.clone())?;
    if recurrences.dets.pivot().is_zero() {
        return Err(HeptaError::SingularMatrix);
    }
    // Check the determinant before the quadratic part so singular inputs fail fast.
    let determinant = determinant_at_zero(&recurrences.determinant())?;
    let last = last_three_columns(&recurrences.dets)?;
    let symbolic = back_substitute(&recurrences.padded, last)?;
    let entries = symbolic.try_map(|row, col, v| {
        v.eval_at_zero().map_err(|err| match err {
            HeptaError::PoleAtZero => HeptaError::InternalPole {
                row: row + 1,
                col: col + 1,
            },
            other => other,
        })
    })?;
    Ok(InverseResult {
        entries,
        determinant,
        mode: Mode::Symbolic,
        substituted: lift.substituted_indices.into_iter().collect(),
    })
}

/// Exact route when every `g_i` is nonzero, symbolic route otherwise.
pub fn auto_invert(h: &HeptaBands<Rational>) -> Result<InverseResult<Rational>> {
    if h.zero_super_diagonals().is_empty() {
        inverse::invert(h)
    } else {
        invert_symbolic(h)
    }
}

/// Determinant in linear time over `Q(t)`, evaluated at `t = 0`.
pub fn det_symbolic(h: &HeptaBands<Rational>) -> Result<Rational> {
    let recurrences = Recurrences::from_padded(lift_to_symbolic(h).bands)?;
    recurrences.determinant().eval_at_zero()
}

/// Determinant in linear time, substituting `t` when needed.
pub fn auto_det(h: &HeptaBands<Rational>) -> Result<Rational> {
    if h.zero_super_diagonals().is_empty() {
        inverse::det(h)
    } else {
        det_symbolic(h)
    }
}

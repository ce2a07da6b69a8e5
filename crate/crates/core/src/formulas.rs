//! Closed forms for `NI(P_n^2)` and the two-level mapping-cone recursion
//! that produces them.
//!
//! All case splits use Euclidean remainders: `n = 6p + d` with `0 <= d <= 5`,
//! `n = 5q + r` with `0 <= r <= 4`, and `n = p(t+1) + d` with `0 <= d <= t`
//! for path ideals.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::simplicial::h_from_f;

fn require(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::invalid(msg()))
    }
}

/// `(pd, reg)` of `S/NI(P_n^2)` for `3 <= n <= 6`.
const SMALL_PD_REG: [(usize, usize, usize); 4] = [(3, 1, 2), (4, 2, 2), (5, 2, 3), (6, 2, 4)];

/// `⌈n/5⌉`.
pub fn height_formula(n: usize) -> Result<usize> {
    require(n >= 3, || format!("height formula needs n >= 3, got {n}"))?;
    Ok(n.div_ceil(5))
}

/// `(pd, reg)` of `S/NI(P_n^2)`.
pub fn pdreg_formula(n: usize) -> Result<(usize, usize)> {
    require(n >= 3, || format!("pd/reg formula needs n >= 3, got {n}"))?;
    if let Some(&(_, pd, reg)) = SMALL_PD_REG.iter().find(|e| e.0 == n) {
        return Ok((pd, reg));
    }
    let (p, d) = (n / 6, n % 6);
    let reg = match d {
        0 | 1 => 4 * p,
        2 => 4 * p + 1,
        3 | 4 => 4 * p + 2,
        _ => 4 * p + 3,
    };
    let pd = match d {
        0 => 2 * p,
        1..=3 => 2 * p + 1,
        _ => 2 * p + 2,
    };
    Ok((pd, reg))
}

/// `(pd, reg)` of `S/I_t(P_n)`.
pub fn pdpath_formula(n: usize, t: usize) -> Result<(usize, usize)> {
    require((2..=n).contains(&t), || {
        format!("path length t={t} outside 2..={n}")
    })?;
    let (p, d) = (n / (t + 1), n % (t + 1));
    Ok(if d == t {
        (2 * p + 1, (p + 1) * (t - 1))
    } else {
        (2 * p, p * (t - 1))
    })
}

/// `(pd, reg)` of `S/(I_5(P_{2..n-1}) + (x_1x_2x_3))`.
pub fn lemma_reg1_formula(n: usize) -> Result<(usize, usize)> {
    require(n >= 7, || format!("needs n >= 7, got {n}"))?;
    let (p, d) = (n / 6, n % 6);
    Ok(match d {
        0 => (2 * p - 1, 4 * p - 2),
        1..=3 => (2 * p, 4 * p),
        _ => (2 * p + 1, 4 * p + 2),
    })
}

/// Base values taken from the recursion's own case analysis, not from the engine.
pub mod proof_base {
    /// `(pd, reg)` recorded for `S/(x_4x_5x_6)`, the inner colon for
    /// `n ∈ {7, 8, 9}`. The true regularity is 2; see
    /// `TRUE_INNER_COLON` and the test showing the outputs do not change.
    pub const INNER_COLON: (usize, usize) = (1, 1);

    /// `(pd, reg)` of `S/(x_4x_5x_6)` as the engine computes it.
    pub const TRUE_INNER_COLON: (usize, usize) = (1, 2);

    /// `(n, pd, reg)` of the outer colon `(I_5(P_{2..n-1}), x_1x_2x_3) : x_{n-2}x_{n-1}x_n`
    /// for `n ∈ {7, 8, 9}`.
    pub const OUTER_COLON: [(usize, usize, usize); 3] = [(7, 2, 2), (8, 2, 3), (9, 2, 4)];
}

/// Mapping cone over `0 → S/(I:u)(-3) → S/I → S/(I,u) → 0` with `deg u = 3`:
/// `reg = max(reg(I:u) + 2, reg(I))`, `pd = max(pd(I:u) + 1, pd(I))`.
fn cone(
    (colon_pd, colon_reg): (usize, usize),
    (base_pd, base_reg): (usize, usize),
) -> (usize, usize) {
    ((colon_pd + 1).max(base_pd), (colon_reg + 2).max(base_reg))
}

/// Inner level: `S/(I_5(P_{2..n-1}) + (x_1x_2x_3))`.
pub fn inner_recursion(n: usize) -> Result<(usize, usize)> {
    inner_recursion_with_base(n, proof_base::INNER_COLON)
}

/// [`inner_recursion`] with a caller-chosen value for the `n ∈ {7, 8, 9}` colon.
pub fn inner_recursion_with_base(n: usize, base: (usize, usize)) -> Result<(usize, usize)> {
    require(n >= 7, || format!("recursion needs n >= 7, got {n}"))?;
    let colon = if n <= 9 {
        base
    } else {
        inner_recursion_with_base(n - 3, base)?
    };
    Ok(cone(colon, pdpath_formula(n - 2, 5)?))
}

/// Outer level: `S/NI(P_n^2)`, with the colon equal to `NI(P_{n-3}^2)` for `n >= 10`.
pub fn mapping_cone_recursion(n: usize) -> Result<(usize, usize)> {
    mapping_cone_recursion_with_base(n, proof_base::INNER_COLON)
}

/// [`mapping_cone_recursion`] with a caller-chosen inner base value.
pub fn mapping_cone_recursion_with_base(
    n: usize,
    inner_base: (usize, usize),
) -> Result<(usize, usize)> {
    require(n >= 7, || format!("recursion needs n >= 7, got {n}"))?;
    let colon = match proof_base::OUTER_COLON.iter().find(|e| e.0 == n) {
        Some(&(_, pd, reg)) => (pd, reg),
        None => mapping_cone_recursion_with_base(n - 3, inner_base)?,
    };
    Ok(cone(colon, inner_recursion_with_base(n, inner_base)?))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FhFormula {
    pub f: Vec<i64>,
    pub h: Vec<i64>,
    pub euler: i64,
    pub reduced_euler: i64,
    /// `Σ h_i`, which is also the number of top-dimensional faces.
    pub top_faces: i64,
}

/// f- and h-vector of the facet complex of `NI(P_n^2)`.
pub fn fh_formula(n: usize) -> Result<FhFormula> {
    require(n >= 7, || format!("f-vector formula needs n >= 7, got {n}"))?;
    let n = n as i64;
    Ok(FhFormula {
        f: vec![1, n, 4 * n - 14, 6 * n - 30, 4 * n - 23, n - 6],
        h: vec![1, n - 5, -4, 2, 0, 0],
        euler: 1,
        reduced_euler: 0,
        top_faces: n - 6,
    })
}

/// Cohen-Macaulayness as characterized in closed form: `n ∈ {1, 6}`.
pub fn cm_characterization(n: usize) -> Result<bool> {
    require(n >= 1, || "n must be positive".into())?;
    Ok(n == 1 || n == 6)
}

/// Big height of `NI(P_n^2)`; the case table coincides with `pd`.
pub fn bight_formula(n: usize) -> Result<usize> {
    require(n >= 7, || {
        format!("big height formula needs n >= 7, got {n}")
    })?;
    Ok(pdreg_formula(n)?.0)
}

/// Every closed-form invariant of `NI(P_n^2)` at once.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvariantBundle {
    pub n: usize,
    pub height: usize,
    pub bight: usize,
    pub pd: usize,
    pub reg: usize,
    pub depth: usize,
    pub dim: usize,
    pub is_cm: bool,
    pub fvec: Vec<i64>,
    pub hvec: Vec<i64>,
    pub euler: i64,
    pub reduced_euler: i64,
    pub top_face_count: i64,
}

pub fn invariant_bundle(n: usize) -> Result<InvariantBundle> {
    let height = height_formula(n)?;
    let (pd, reg) = pdreg_formula(n)?;
    let fh = fh_formula(n)?;
    Ok(InvariantBundle {
        n,
        height,
        bight: bight_formula(n)?,
        pd,
        reg,
        depth: n - pd,
        dim: n - height,
        is_cm: cm_characterization(n)?,
        fvec: fh.f,
        hvec: fh.h,
        euler: fh.euler,
        reduced_euler: fh.reduced_euler,
        top_face_count: fh.top_faces,
    })
}

/// Whether `h` is the binomial transform of `f`.
pub fn h_matches_f(f: &[i64], h: &[i64]) -> bool {
    h_from_f(f) == h
}

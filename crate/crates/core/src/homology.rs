//! Reduced simplicial homology ranks over `Q` or `F_p`.
//!
//! Ranks over `Q` come from fraction-free column reduction of the integer
//! boundary matrices. Entries stay in `i64` with checked arithmetic; if a
//! reduction overflows it is redone with big integers.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::simplicial::SimplicialComplex;
use crate::vertex_set::VertexSet;

/// Coefficient field for homology and Betti numbers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Field {
    Rational,
    Prime(u64),
}

impl Field {
    /// Characteristic: 0 for `Q`, `p` for `F_p`.
    pub fn characteristic(self) -> u64 {
        match self {
            Field::Rational => 0,
            Field::Prime(p) => p,
        }
    }

    /// `0` selects `Q`; otherwise `c` must be a prime below 2^31.
    pub fn from_characteristic(c: u64) -> Result<Self> {
        match c {
            0 => Ok(Field::Rational),
            p if p < (1 << 31) && is_prime(p) => Ok(Field::Prime(p)),
            p => Err(Error::invalid(format!(
                "field characteristic must be 0 or a prime below 2^31, got {p}"
            ))),
        }
    }
}

fn is_prime(p: u64) -> bool {
    p >= 2
        && (2..)
            .take_while(|d| d * d <= p)
            .all(|d| !p.is_multiple_of(d))
}

/// Ranks of `H̃_k` for `k = -1, 0, ..., dim`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HomologyProfile {
    pub ranks: Vec<usize>,
}

impl HomologyProfile {
    /// Rank of `H̃_k`, zero outside the stored range.
    pub fn rank(&self, k: isize) -> usize {
        usize::try_from(k + 1)
            .ok()
            .and_then(|i| self.ranks.get(i).copied())
            .unwrap_or(0)
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.ranks
            .iter()
            .enumerate()
            .map(|(i, &r)| if i % 2 == 1 { r as i64 } else { -(r as i64) })
            .sum()
    }
}

pub fn reduced_homology(
    c: &SimplicialComplex,
    field: Field,
    face_cap: usize,
) -> Result<HomologyProfile> {
    let faces = c.faces(face_cap)?;
    Ok(homology_of_faces(&faces, field))
}

/// Reduced homology of the complex whose faces are exactly `faces`, which
/// must be closed under taking subsets. An empty list is the void complex.
pub fn homology_of_faces(faces: &[VertexSet], field: Field) -> HomologyProfile {
    if faces.is_empty() {
        return HomologyProfile { ranks: vec![0] };
    }
    let top = faces.iter().map(|f| f.len()).max().unwrap_or(0);
    let mut layers: Vec<Vec<VertexSet>> = vec![Vec::new(); top + 1];
    for &f in faces {
        layers[f.len()].push(f);
    }
    for layer in &mut layers {
        layer.sort_by_key(|f| f.bits());
    }
    // ranks[s] = rank of the boundary map from faces of size s to size s-1.
    let mut boundary_rank = vec![0usize; top + 2];
    for s in 1..=top {
        let index: HashMap<VertexSet, u32> = layers[s - 1]
            .iter()
            .enumerate()
            .map(|(i, f)| (*f, i as u32))
            .collect();
        let cols: Vec<Vec<(u32, i64)>> = layers[s]
            .iter()
            .map(|f| {
                let mut col: Vec<(u32, i64)> = f
                    .iter()
                    .enumerate()
                    .map(|(pos, v)| (index[&f.without(v)], if pos % 2 == 0 { 1 } else { -1 }))
                    .collect();
                col.sort_unstable_by_key(|e| e.0);
                col
            })
            .collect();
        boundary_rank[s] = matrix_rank(cols, field);
    }
    let ranks = (0..=top)
        .map(|s| layers[s].len() - boundary_rank[s] - boundary_rank[s + 1])
        .collect();
    HomologyProfile { ranks }
}

/// Rank of a sparse matrix given as columns of `(row, value)` sorted by row.
pub fn matrix_rank(cols: Vec<Vec<(u32, i64)>>, field: Field) -> usize {
    match field {
        Field::Prime(p) => rank_mod_p(cols, p),
        Field::Rational => rank_over_integers::<i64>(&cols).unwrap_or_else(|| {
            rank_over_integers::<BigInt>(&cols).expect("big integer reduction cannot overflow")
        }),
    }
}

trait Coeff: Clone + PartialEq + Sized {
    fn from_i64(v: i64) -> Self;
    fn is_zero(&self) -> bool;
    /// `a*x - b*y`, or `None` on overflow.
    fn combine(a: &Self, x: &Self, b: &Self, y: &Self) -> Option<Self>;
    fn gcd(&self, other: &Self) -> Self;
    fn div_exact(&self, d: &Self) -> Self;
    fn is_unit(&self) -> bool;
}

impl Coeff for i64 {
    fn from_i64(v: i64) -> Self {
        v
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn combine(a: &Self, x: &Self, b: &Self, y: &Self) -> Option<Self> {
        a.checked_mul(*x)?.checked_sub(b.checked_mul(*y)?)
    }
    fn gcd(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    fn div_exact(&self, d: &Self) -> Self {
        self / d
    }
    fn is_unit(&self) -> bool {
        *self == 1 || *self == -1
    }
}

impl Coeff for BigInt {
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn combine(a: &Self, x: &Self, b: &Self, y: &Self) -> Option<Self> {
        Some(a * x - b * y)
    }
    fn gcd(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    fn div_exact(&self, d: &Self) -> Self {
        self / d
    }
    fn is_unit(&self) -> bool {
        self.abs().is_one()
    }
}

/// Column reduction keyed on the lowest nonzero row. Each column is kept
/// primitive (content 1) to bound coefficient growth.
fn rank_over_integers<T: Coeff>(cols: &[Vec<(u32, i64)>]) -> Option<usize> {
    let mut pivots: HashMap<u32, Vec<(u32, T)>> = HashMap::new();
    let mut rank = 0;
    for col in cols {
        let mut cur: Vec<(u32, T)> = col.iter().map(|&(r, v)| (r, T::from_i64(v))).collect();
        while let Some((low, _)) = cur.last() {
            let Some(piv) = pivots.get(low) else { break };
            let a = piv.last().expect("pivot columns are nonzero").1.clone();
            let b = cur.last().expect("loop guard").1.clone();
            cur = combine_columns(&a, &cur, &b, piv)?;
            make_primitive(&mut cur);
        }
        if let Some(&(low, _)) = cur.last() {
            pivots.insert(low, cur);
            rank += 1;
        }
    }
    Some(rank)
}

/// `a*x - b*y` on sparse sorted columns, dropping zeros.
fn combine_columns<T: Coeff>(
    a: &T,
    x: &[(u32, T)],
    b: &T,
    y: &[(u32, T)],
) -> Option<Vec<(u32, T)>> {
    let zero = T::from_i64(0);
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        let (row, xv, yv) = match (x.get(i), y.get(j)) {
            (Some(p), Some(q)) if p.0 == q.0 => {
                i += 1;
                j += 1;
                (p.0, &p.1, &q.1)
            }
            (Some(p), Some(q)) if p.0 < q.0 => {
                i += 1;
                (p.0, &p.1, &zero)
            }
            (Some(p), None) => {
                i += 1;
                (p.0, &p.1, &zero)
            }
            (_, Some(q)) => {
                j += 1;
                (q.0, &zero, &q.1)
            }
            (None, None) => unreachable!(),
        };
        let v = T::combine(a, xv, b, yv)?;
        if !v.is_zero() {
            out.push((row, v));
        }
    }
    Some(out)
}

fn make_primitive<T: Coeff>(col: &mut [(u32, T)]) {
    let Some(first) = col.first() else { return };
    let mut g = first.1.clone();
    for (_, v) in col.iter().skip(1) {
        if g.is_unit() {
            return;
        }
        g = g.gcd(v);
    }
    if !g.is_unit() && !g.is_zero() {
        for (_, v) in col.iter_mut() {
            *v = v.div_exact(&g);
        }
    }
}

fn rank_mod_p(cols: Vec<Vec<(u32, i64)>>, p: u64) -> usize {
    let p = p as i64;
    let inv = |a: i64| -> i64 {
        // Fermat inverse.
        let (mut base, mut e, mut acc) = (a.rem_euclid(p), p - 2, 1i64);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            e >>= 1;
        }
        acc
    };
    let mut pivots: HashMap<u32, Vec<(u32, i64)>> = HashMap::new();
    let mut rank = 0;
    for col in cols {
        let mut cur: Vec<(u32, i64)> = col
            .into_iter()
            .map(|(r, v)| (r, v.rem_euclid(p)))
            .filter(|e| e.1 != 0)
            .collect();
        while let Some(&(low, b)) = cur.last() {
            let Some(piv) = pivots.get(&low) else { break };
            // Pivot columns are normalized so their low entry is 1.
            cur = combine_columns(&1, &cur, &b, piv)
                .expect("i64 cannot overflow below 2^62")
                .into_iter()
                .map(|(r, v)| (r, v.rem_euclid(p)))
                .filter(|e| e.1 != 0)
                .collect();
        }
        if let Some(&(low, lead)) = cur.last() {
            let s = inv(lead);
            for e in cur.iter_mut() {
                e.1 = e.1 * s % p;
            }
            pivots.insert(low, cur);
            rank += 1;
        }
    }
    rank
}

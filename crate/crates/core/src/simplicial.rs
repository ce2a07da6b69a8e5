//! Simplicial complexes given by their facets.
//!
//! The void complex (no faces at all) has an empty facet list. The irrelevant
//! complex `{∅}` has the single facet `∅` and dimension -1.

use std::collections::{HashMap, HashSet};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideal::{check_permutation, minimal_primes, order_search, SquarefreeIdeal};
use crate::io;
use crate::transversal::minimal_transversals;
use crate::vertex_set::{maximalize, VertexSet, MAX_VERTICES};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    n: usize,
    facets: Vec<VertexSet>,
}

impl SimplicialComplex {
    /// Keeps only the maximal sets; `[∅]` gives the irrelevant complex.
    pub fn new<I: IntoIterator<Item = VertexSet>>(n: usize, facets: I) -> Result<Self> {
        if n == 0 || n > MAX_VERTICES {
            return Err(Error::invalid(format!(
                "vertex count must be in 1..={MAX_VERTICES}, got {n}"
            )));
        }
        let full = VertexSet::full(n);
        let facets: Vec<VertexSet> = facets.into_iter().collect();
        if let Some(bad) = facets.iter().find(|f| !f.is_subset(full)) {
            let vertex = bad.difference(full).min().unwrap_or(0);
            return Err(Error::VertexOutOfRange { vertex, n });
        }
        Ok(SimplicialComplex {
            n,
            facets: maximalize(facets),
        })
    }

    pub fn void(n: usize) -> Self {
        SimplicialComplex {
            n,
            facets: Vec::new(),
        }
    }

    pub fn irrelevant(n: usize) -> Self {
        SimplicialComplex {
            n,
            facets: vec![VertexSet::EMPTY],
        }
    }

    /// The facet complex: one facet per minimal generator.
    pub fn facet_complex(i: &SquarefreeIdeal) -> Result<Self> {
        i.require_proper_nonzero()?;
        Ok(SimplicialComplex {
            n: i.ambient_n(),
            facets: i.generators().to_vec(),
        })
    }

    /// `SR(I)`: faces are the sets containing no generator support.
    pub fn stanley_reisner_complex(i: &SquarefreeIdeal, cap: usize) -> Result<Self> {
        let n = i.ambient_n();
        let primes = minimal_primes(i, cap)?;
        SimplicialComplex::new(n, primes.primes.into_iter().map(|p| p.complement(n)))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn facets(&self) -> &[VertexSet] {
        &self.facets
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    pub fn is_irrelevant(&self) -> bool {
        self.facets == [VertexSet::EMPTY]
    }

    /// A single facet (including the irrelevant complex, the simplex on `∅`).
    pub fn is_simplex(&self) -> bool {
        self.facets.len() == 1
    }

    pub fn is_pure(&self) -> bool {
        self.facets.windows(2).all(|w| w[0].len() == w[1].len())
    }

    /// `None` for the void complex.
    pub fn dim(&self) -> Option<isize> {
        self.facets.iter().map(|f| f.len() as isize - 1).max()
    }

    pub fn vertex_union(&self) -> VertexSet {
        self.facets
            .iter()
            .fold(VertexSet::EMPTY, |a, f| a.union(*f))
    }

    pub fn covers_vertices(&self) -> bool {
        self.vertex_union() == VertexSet::full(self.n)
    }

    pub fn is_face(&self, s: VertexSet) -> bool {
        self.facets.iter().any(|f| s.is_subset(*f))
    }

    /// Every face, deduplicated and sorted.
    pub fn faces(&self, cap: usize) -> Result<Vec<VertexSet>> {
        let mut seen = HashSet::new();
        for f in &self.facets {
            if f.len() >= 63 || (1usize << f.len()) > cap {
                return Err(Error::CapExceeded {
                    what: "face enumeration",
                    cap,
                });
            }
            for s in f.subsets() {
                if seen.insert(s) && seen.len() > cap {
                    return Err(Error::CapExceeded {
                        what: "face enumeration",
                        cap,
                    });
                }
            }
        }
        let mut faces: Vec<_> = seen.into_iter().collect();
        faces.sort();
        Ok(faces)
    }

    /// The subcomplex of faces inside `w`.
    pub fn induced(&self, w: VertexSet) -> SimplicialComplex {
        SimplicialComplex {
            n: self.n,
            facets: maximalize(self.facets.iter().map(|f| f.intersection(w)).collect()),
        }
    }

    /// `Δ ∖ x`: faces avoiding `x`.
    pub fn delete_vertex(&self, x: usize) -> SimplicialComplex {
        self.induced(VertexSet::full(self.n).without(x))
    }

    /// `Δ ∖ ⟨F⟩`: drop one facet, keeping faces shared with other facets.
    pub fn remove_facet(&self, f: VertexSet) -> SimplicialComplex {
        SimplicialComplex {
            n: self.n,
            facets: self.facets.iter().copied().filter(|g| *g != f).collect(),
        }
    }

    /// The facet ideal `(x_F : F facet)`.
    pub fn facet_ideal(&self) -> Result<SquarefreeIdeal> {
        SquarefreeIdeal::new(self.n, self.facets.iter().copied())
    }

    /// `I_Δ`, generated by the minimal non-faces.
    pub fn stanley_reisner_ideal(&self, cap: usize) -> Result<SquarefreeIdeal> {
        let complements: Vec<_> = self.facets.iter().map(|f| f.complement(self.n)).collect();
        SquarefreeIdeal::new(self.n, minimal_transversals(&complements, cap)?)
    }

    pub fn parse(text: &str) -> Result<Self> {
        let (n, recs) = io::header(text)?;
        let facets = recs
            .iter()
            .map(|r| io::vertex_set(r, n))
            .collect::<Result<Vec<_>>>()?;
        SimplicialComplex::new(n, facets)
    }

    pub fn to_file_string(&self) -> String {
        let mut s = format!("n {}\n", self.n);
        for f in &self.facets {
            s.push_str(&io::set_line(*f));
            s.push('\n');
        }
        s
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FHVectors {
    pub dim: isize,
    /// `f_{-1}, f_0, ..., f_dim`.
    pub f: Vec<i64>,
    /// `h_0, ..., h_d` with `d = dim + 1`.
    pub h: Vec<i64>,
    pub euler: i64,
    pub reduced_euler: i64,
}

impl FHVectors {
    pub fn h_sum(&self) -> i64 {
        self.h.iter().sum()
    }

    pub fn top_face_count(&self) -> i64 {
        *self.f.last().unwrap_or(&0)
    }
}

pub(crate) fn binomial(n: i64, k: i64) -> i64 {
    if k < 0 || k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1i64, |acc, j| acc * (n - j) / (j + 1))
}

/// `h_i = Σ_{j ≤ i} (-1)^{i-j} C(d-j, i-j) f_{j-1}` for `i = 0..=d`, where `f[0] = f_{-1}`.
pub fn h_from_f(f: &[i64]) -> Vec<i64> {
    let d = f.len() as i64 - 1;
    (0..=d)
        .map(|i| {
            (0..=i)
                .map(|j| {
                    let sign = if (i - j) % 2 == 0 { 1 } else { -1 };
                    sign * binomial(d - j, i - j) * f[j as usize]
                })
                .sum()
        })
        .collect()
}

pub fn fh_vectors(c: &SimplicialComplex, cap: usize) -> Result<FHVectors> {
    let dim = c.dim().ok_or(Error::DegenerateComplex("void"))?;
    let mut f = vec![0i64; (dim + 2) as usize];
    for face in c.faces(cap)? {
        f[face.len()] += 1;
    }
    let h = h_from_f(&f);
    let euler: i64 = f
        .iter()
        .skip(1)
        .enumerate()
        .map(|(i, &x)| if i % 2 == 0 { x } else { -x })
        .sum();
    Ok(FHVectors {
        dim,
        f,
        h,
        euler,
        reduced_euler: euler - 1,
    })
}

fn shelling_step_ok(prev: impl Iterator<Item = VertexSet> + Clone, next: VertexSet) -> bool {
    let mut codim_one = VertexSet::EMPTY;
    for p in prev.clone() {
        let diff = next.difference(p);
        if diff.len() == 1 {
            codim_one = codim_one.union(diff);
        }
    }
    prev.into_iter()
        .all(|p| next.difference(p).intersects(codim_one))
}

/// Non-pure shelling test: for every `i < j` some `v ∈ F_j ∖ F_i` has
/// `F_j ∖ F_l = {v}` for an earlier `l`.
pub fn is_shelling_order(c: &SimplicialComplex, order: &[VertexSet]) -> Result<bool> {
    check_permutation(&c.facets, order, "facet")?;
    Ok((1..order.len()).all(|j| shelling_step_ok(order[..j].iter().copied(), order[j])))
}

/// Facet `F_k` of the `NI(P_n^2)` facet complex, `1 <= k <= n-4`, for `n >= 7`.
pub fn ni_facet(n: usize, k: usize) -> Result<VertexSet> {
    if n < 7 || k == 0 || k > n - 4 {
        return Err(Error::invalid(format!("facet F_{k} undefined for n={n}")));
    }
    Ok(match k {
        1 => VertexSet::interval(1, 3),
        k if k == n - 4 => VertexSet::interval(n - 2, n),
        k => VertexSet::interval(k, k + 4),
    })
}

/// Facet indices `F_2, ..., F_{n-5}, F_1, F_{n-4}`.
pub fn ni_shelling_indices(n: usize) -> Result<Vec<usize>> {
    if n < 7 {
        return Err(Error::invalid(format!(
            "shelling order defined for n >= 7, got {n}"
        )));
    }
    Ok((2..=n - 5).chain([1, n - 4]).collect())
}

/// The order `F_2, ..., F_{n-5}, F_1, F_{n-4}` as facet sets.
pub fn ni_shelling_order(n: usize) -> Result<Vec<VertexSet>> {
    ni_shelling_indices(n)?
        .into_iter()
        .map(|k| ni_facet(n, k))
        .collect()
}

/// Backtracking search for any shelling order; `Ok(None)` means none exists.
pub fn find_shelling(c: &SimplicialComplex, cap: usize) -> Result<Option<Vec<VertexSet>>> {
    let facets = &c.facets;
    order_search(facets.len(), cap, |placed, next| {
        shelling_step_ok(placed.iter().map(|&k| facets[k]), facets[next])
    })
    .map(|o| o.map(|idx| idx.into_iter().map(|k| facets[k]).collect()))
}

/// Vertices lying in exactly one facet.
pub fn free_vertices(c: &SimplicialComplex) -> Vec<(usize, VertexSet)> {
    c.vertex_union()
        .iter()
        .filter_map(|v| {
            let mut owners = c.facets.iter().filter(|f| f.contains(v));
            let first = *owners.next()?;
            owners.next().is_none().then_some((v, first))
        })
        .collect()
}

/// Simplex, or some free vertex `x` in facet `F` such that `Δ ∖ ⟨F⟩` and
/// `Δ ∖ x` both have the property.
pub fn has_free_vertex_property(c: &SimplicialComplex, max_depth: usize) -> Result<bool> {
    let mut memo = HashMap::new();
    free_vertex_rec(c, 0, max_depth, &mut memo)
}

fn free_vertex_rec(
    c: &SimplicialComplex,
    depth: usize,
    max_depth: usize,
    memo: &mut HashMap<Vec<VertexSet>, bool>,
) -> Result<bool> {
    if c.facets.len() <= 1 {
        return Ok(true);
    }
    if depth >= max_depth {
        return Err(Error::CapExceeded {
            what: "free vertex recursion depth",
            cap: max_depth,
        });
    }
    if let Some(&known) = memo.get(&c.facets) {
        return Ok(known);
    }
    let mut result = false;
    for (x, f) in free_vertices(c) {
        if free_vertex_rec(&c.remove_facet(f), depth + 1, max_depth, memo)?
            && free_vertex_rec(&c.delete_vertex(x), depth + 1, max_depth, memo)?
        {
            result = true;
            break;
        }
    }
    memo.insert(c.facets.clone(), result);
    Ok(result)
}

/// `Δ^∨ = {F : F^c ∉ Δ}`; facets are the complements of the minimal non-faces.
pub fn alexander_dual_complex(c: &SimplicialComplex, cap: usize) -> Result<SimplicialComplex> {
    if c.is_void() {
        return Err(Error::DegenerateComplex("void"));
    }
    if c.facets == [VertexSet::full(c.n)] {
        return Err(Error::DegenerateComplex("full simplex"));
    }
    let non_faces = c.stanley_reisner_ideal(cap)?;
    SimplicialComplex::new(
        c.n,
        non_faces.generators().iter().map(|g| g.complement(c.n)),
    )
}

/// `Δ^c`, whose facets are the complements of the facets of `Δ`.
pub fn complement_complex(c: &SimplicialComplex) -> Result<SimplicialComplex> {
    if c.facets.iter().any(|f| *f == VertexSet::full(c.n)) {
        return Err(Error::DegenerateComplex("full simplex"));
    }
    SimplicialComplex::new(c.n, c.facets.iter().map(|f| f.complement(c.n)))
}

/// Number of maximum-dimensional facets of `SR(I)`, i.e. of minimum-height minimal primes.
pub fn multiplicity_from_sr(i: &SquarefreeIdeal, cap: usize) -> Result<usize> {
    // Facets are complements of minimal primes, already an antichain.
    let primes = minimal_primes(i, cap)?;
    Ok(primes
        .primes
        .iter()
        .filter(|p| p.len() == primes.height)
        .count())
}

//! Graded Betti tables of `S/I` and the invariants read off them.
//!
//! Two independent engines:
//!
//! * [`Engine::betti_hochster`]: `β_{i,σ}(S/I) = dim H̃_{|σ|-i-1}(Δ|_σ)` with
//!   `Δ = SR(I)`, summed over the lcm lattice only.
//! * [`Engine::betti_koszul`]: `β_{i,σ}(I) = dim H̃_{i-1}(K^σ)` where
//!   `K^σ = {τ ⊆ σ : x_{σ∖τ} ∈ I}`, over every squarefree multidegree.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::homology::{homology_of_faces, Field};
use crate::ideal::{alexander_dual_ideal, minimal_primes, squarefree_component, SquarefreeIdeal};
use crate::vertex_set::VertexSet;

/// Total and multigraded Betti numbers of `S/I`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiTable {
    ambient_n: usize,
    field_char: u64,
    entries: BTreeMap<(usize, usize), u64>,
    multigraded: BTreeMap<(usize, VertexSet), u64>,
}

impl BettiTable {
    /// Aggregates multigraded entries; zero entries are dropped.
    pub fn from_multigraded(
        ambient_n: usize,
        field: Field,
        multigraded: BTreeMap<(usize, VertexSet), u64>,
    ) -> Self {
        let multigraded: BTreeMap<_, _> = multigraded.into_iter().filter(|(_, b)| *b > 0).collect();
        let mut entries = BTreeMap::new();
        for (&(i, sigma), &b) in &multigraded {
            *entries.entry((i, sigma.len())).or_insert(0) += b;
        }
        BettiTable {
            ambient_n,
            field_char: field.characteristic(),
            entries,
            multigraded,
        }
    }

    pub fn ambient_n(&self) -> usize {
        self.ambient_n
    }

    pub fn field_char(&self) -> u64 {
        self.field_char
    }

    /// `β_{i,j}(S/I)`.
    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// `β_{i,σ}(S/I)`.
    pub fn get_multigraded(&self, i: usize, sigma: VertexSet) -> u64 {
        self.multigraded.get(&(i, sigma)).copied().unwrap_or(0)
    }

    /// Nonzero `((i, j), β)` sorted by `(i, j)`.
    pub fn entries(&self) -> &BTreeMap<(usize, usize), u64> {
        &self.entries
    }

    pub fn multigraded(&self) -> &BTreeMap<(usize, VertexSet), u64> {
        &self.multigraded
    }

    /// Projective dimension: largest homological degree with a nonzero entry.
    pub fn pd(&self) -> usize {
        self.entries.keys().map(|&(i, _)| i).max().unwrap_or(0)
    }

    /// Castelnuovo-Mumford regularity: `max (j - i)` over nonzero entries.
    pub fn reg(&self) -> usize {
        self.entries.keys().map(|&(i, j)| j - i).max().unwrap_or(0)
    }

    /// Total Betti number `β_i = Σ_j β_{i,j}`.
    pub fn total(&self, i: usize) -> u64 {
        self.entries.range((i, 0)..(i + 1, 0)).map(|(_, b)| b).sum()
    }

    /// `{"char": c, "entries": [[i, j, β], ...]}`, optionally with
    /// `"multigraded": [[i, [σ...], β], ...]`.
    pub fn to_json(&self, include_multigraded: bool) -> Value {
        let entries: Vec<Value> = self
            .entries
            .iter()
            .map(|(&(i, j), &b)| json!([i, j, b]))
            .collect();
        let mut v = json!({ "char": self.field_char, "entries": entries });
        if include_multigraded {
            let mut mg: Vec<(usize, Vec<usize>, u64)> = self
                .multigraded
                .iter()
                .map(|(&(i, s), &b)| (i, s.to_vec(), b))
                .collect();
            mg.sort();
            v["multigraded"] = mg.into_iter().map(|(i, s, b)| json!([i, s, b])).collect();
        }
        v
    }

    /// Rows `i`, columns `j - i`, in the usual Macaulay2-style layout.
    pub fn to_text(&self) -> String {
        let pd = self.pd();
        let reg = self.reg();
        let width = self
            .entries
            .values()
            .map(|b| b.to_string().len())
            .max()
            .unwrap_or(1)
            .max(pd.to_string().len());
        let mut out = format!("{:>4} ", "");
        for i in 0..=pd {
            out.push_str(&format!(" {:>width$}", i));
        }
        out.push('\n');
        for r in 0..=reg {
            out.push_str(&format!("{:>4}:", r));
            for i in 0..=pd {
                let b = self.get(i, i + r);
                let cell = if b == 0 {
                    "-".to_string()
                } else {
                    b.to_string()
                };
                out.push_str(&format!(" {:>width$}", cell));
            }
            out.push('\n');
        }
        out
    }
}

/// Homological invariants of `S/I`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Invariants {
    pub pd: usize,
    pub reg: usize,
    pub depth: usize,
    pub dim: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SeqCm {
    Yes,
    No,
    /// A resource cap was hit before a verdict.
    Indeterminate,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BightVsPd {
    pub bight: usize,
    pub pd: usize,
    pub equal: bool,
}

/// `((i, σ), β_{i,σ})`.
type MultidegreeEntry = ((usize, VertexSet), u64);

/// Field choice plus resource caps for every homological computation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Engine {
    pub field: Field,
    pub caps: Caps,
}

impl Default for Engine {
    fn default() -> Self {
        Engine {
            field: Field::Rational,
            caps: Caps::default(),
        }
    }
}

impl Engine {
    pub fn new(field: Field, caps: Caps) -> Self {
        Engine { field, caps }
    }

    pub fn betti_hochster(&self, i: &SquarefreeIdeal) -> Result<BettiTable> {
        i.require_proper_nonzero()?;
        let n = i.ambient_n();
        if n > self.caps.max_ambient_hochster {
            return Err(Error::CapExceeded {
                what: "Hochster engine ambient size",
                cap: self.caps.max_ambient_hochster,
            });
        }
        let lattice = lcm_lattice(i.generators(), n);
        let gens = i.generators();
        let face_cap = self.caps.max_faces;
        let field = self.field;
        let per_sigma: Vec<Result<Vec<MultidegreeEntry>>> = lattice
            .par_iter()
            .map(|&sigma| {
                let inside: Vec<VertexSet> = gens
                    .iter()
                    .copied()
                    .filter(|g| g.is_subset(sigma))
                    .collect();
                let faces = independent_sets(sigma, &inside, face_cap)?;
                let h = homology_of_faces(&faces, field);
                let size = sigma.len() as isize;
                Ok(h.ranks
                    .iter()
                    .enumerate()
                    .filter(|(_, &r)| r > 0)
                    .map(|(idx, &r)| {
                        let k = idx as isize - 1;
                        (((size - k - 1) as usize, sigma), r as u64)
                    })
                    .collect())
            })
            .collect();
        let mut mg = BTreeMap::new();
        mg.insert((0, VertexSet::EMPTY), 1);
        for part in per_sigma {
            mg.extend(part?);
        }
        Ok(BettiTable::from_multigraded(n, self.field, mg))
    }

    /// Brute force over all `2^n` squarefree multidegrees.
    pub fn betti_koszul(&self, i: &SquarefreeIdeal) -> Result<BettiTable> {
        i.require_proper_nonzero()?;
        let n = i.ambient_n();
        if n > self.caps.max_ambient_koszul {
            return Err(Error::CapExceeded {
                what: "Koszul oracle ambient size",
                cap: self.caps.max_ambient_koszul,
            });
        }
        let field = self.field;
        let sigmas: Vec<VertexSet> = VertexSet::full(n).subsets().collect();
        let per_sigma: Vec<Vec<MultidegreeEntry>> = sigmas
            .par_iter()
            .map(|&sigma| {
                let faces: Vec<VertexSet> = sigma
                    .subsets()
                    .filter(|tau| i.contains_monomial(sigma.difference(*tau)))
                    .collect();
                let h = homology_of_faces(&faces, field);
                // β_{k,σ}(I) = dim H̃_{k-1}(K^σ), and β_{k+1,σ}(S/I) = β_{k,σ}(I).
                h.ranks
                    .iter()
                    .enumerate()
                    .filter(|(_, &r)| r > 0)
                    .map(|(idx, &r)| ((idx + 1, sigma), r as u64))
                    .collect()
            })
            .collect();
        let mut mg = BTreeMap::new();
        mg.insert((0, VertexSet::EMPTY), 1);
        for part in per_sigma {
            mg.extend(part);
        }
        Ok(BettiTable::from_multigraded(n, self.field, mg))
    }

    /// `pd`, `reg` from the table; `depth = n - pd`; `dim = n - height`.
    pub fn pd_reg_depth(&self, b: &BettiTable, i: &SquarefreeIdeal) -> Result<Invariants> {
        if b.ambient_n() != i.ambient_n() {
            return Err(Error::AmbientMismatch {
                left: b.ambient_n(),
                right: i.ambient_n(),
            });
        }
        let height = minimal_primes(i, self.caps.max_sets)?.height;
        let n = i.ambient_n();
        Ok(Invariants {
            pd: b.pd(),
            reg: b.reg(),
            depth: n - b.pd(),
            dim: n - height,
        })
    }

    pub fn invariants(&self, i: &SquarefreeIdeal) -> Result<Invariants> {
        let b = self.betti_hochster(i)?;
        self.pd_reg_depth(&b, i)
    }

    /// `depth = dim`, i.e. `pd = height`.
    pub fn is_cohen_macaulay(&self, i: &SquarefreeIdeal) -> Result<bool> {
        let inv = self.invariants(i)?;
        Ok(inv.depth == inv.dim)
    }

    /// Every nonzero squarefree component of the Alexander dual has a linear resolution.
    pub fn is_sequentially_cm(&self, i: &SquarefreeIdeal) -> Result<SeqCm> {
        i.require_proper_nonzero()?;
        let n = i.ambient_n();
        if n > self.caps.max_ambient_seqcm {
            return Ok(SeqCm::Indeterminate);
        }
        let dual = match alexander_dual_ideal(i, self.caps.max_sets) {
            Ok(d) => d,
            Err(e) if e.is_cap() => return Ok(SeqCm::Indeterminate),
            Err(e) => return Err(e),
        };
        let low = dual.generators().iter().map(|g| g.len()).min().unwrap_or(n);
        for d in low..=n {
            let component = squarefree_component(&dual, d)?;
            if component.is_zero() {
                continue;
            }
            match self.betti_hochster(&component) {
                Ok(b) if b.reg() + 1 != d => return Ok(SeqCm::No),
                Ok(_) => {}
                Err(e) if e.is_cap() => return Ok(SeqCm::Indeterminate),
                Err(e) => return Err(e),
            }
        }
        Ok(SeqCm::Yes)
    }

    pub fn bight_vs_pd(&self, i: &SquarefreeIdeal) -> Result<BightVsPd> {
        let bight = minimal_primes(i, self.caps.max_sets)?.bight;
        let pd = self.betti_hochster(i)?.pd();
        Ok(BightVsPd {
            bight,
            pd,
            equal: bight == pd,
        })
    }
}

/// Nonempty unions of generator supports, sorted lexicographically.
pub fn lcm_lattice(gens: &[VertexSet], n: usize) -> Vec<VertexSet> {
    let mut out: Vec<VertexSet> = VertexSet::full(n)
        .subsets()
        .filter(|s| !s.is_empty())
        .filter(|&s| {
            gens.iter()
                .filter(|g| g.is_subset(s))
                .fold(VertexSet::EMPTY, |a, g| a.union(*g))
                == s
        })
        .collect();
    out.sort();
    out
}

/// Subsets of `universe` containing none of `gens`.
fn independent_sets(universe: VertexSet, gens: &[VertexSet], cap: usize) -> Result<Vec<VertexSet>> {
    fn go(
        rest: &[usize],
        cur: VertexSet,
        gens: &[VertexSet],
        cap: usize,
        out: &mut Vec<VertexSet>,
    ) -> Result<()> {
        let Some((&v, tail)) = rest.split_first() else {
            if out.len() >= cap {
                return Err(Error::CapExceeded {
                    what: "face enumeration",
                    cap,
                });
            }
            out.push(cur);
            return Ok(());
        };
        go(tail, cur, gens, cap, out)?;
        let next = cur.with(v);
        if !gens.iter().any(|g| g.contains(v) && g.is_subset(next)) {
            go(tail, next, gens, cap, out)?;
        }
        Ok(())
    }
    let vs = universe.to_vec();
    let mut out = Vec::new();
    go(&vs, VertexSet::EMPTY, gens, cap, &mut out)?;
    Ok(out)
}

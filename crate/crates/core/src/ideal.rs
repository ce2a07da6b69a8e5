//! Squarefree monomial ideals, stored as antichains of generator supports.

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{graph_square, path_graph, Graph};
use crate::io;
use crate::simplicial::SimplicialComplex;
use crate::transversal::minimal_transversals;
use crate::vertex_set::{minimalize, VertexSet, MAX_VERTICES};

/// An ideal of `k[x_1, ..., x_n]` generated by squarefree monomials.
///
/// Generators are always minimal and sorted lexicographically. The unit ideal
/// is a separate flag, so the generator list never holds the empty support.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SquarefreeIdeal {
    ambient_n: usize,
    generators: Vec<VertexSet>,
    unit: bool,
}

impl SquarefreeIdeal {
    /// Minimalizes `generators`; an empty support makes the unit ideal.
    pub fn new<I: IntoIterator<Item = VertexSet>>(ambient_n: usize, generators: I) -> Result<Self> {
        check_ambient(ambient_n)?;
        let full = VertexSet::full(ambient_n);
        let mut gens = Vec::new();
        for g in generators {
            if !g.is_subset(full) {
                let vertex = g.difference(full).min().unwrap_or(0);
                return Err(Error::VertexOutOfRange {
                    vertex,
                    n: ambient_n,
                });
            }
            if g.is_empty() {
                return Ok(SquarefreeIdeal::unit(ambient_n));
            }
            gens.push(g);
        }
        Ok(SquarefreeIdeal {
            ambient_n,
            generators: minimalize(gens),
            unit: false,
        })
    }

    pub fn zero(ambient_n: usize) -> Self {
        SquarefreeIdeal {
            ambient_n,
            generators: Vec::new(),
            unit: false,
        }
    }

    pub fn unit(ambient_n: usize) -> Self {
        SquarefreeIdeal {
            ambient_n,
            generators: Vec::new(),
            unit: true,
        }
    }

    pub fn ambient_n(&self) -> usize {
        self.ambient_n
    }

    pub fn generators(&self) -> &[VertexSet] {
        &self.generators
    }

    pub fn is_zero(&self) -> bool {
        !self.unit && self.generators.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.unit
    }

    /// Whether the monomial `x_s` lies in the ideal.
    pub fn contains_monomial(&self, s: VertexSet) -> bool {
        self.unit || self.generators.iter().any(|g| g.is_subset(s))
    }

    /// Number of minimal generators in each degree, as `(degree, count)`.
    pub fn degree_census(&self) -> Vec<(usize, usize)> {
        let mut census = std::collections::BTreeMap::new();
        for g in &self.generators {
            *census.entry(g.len()).or_insert(0) += 1;
        }
        census.into_iter().collect()
    }

    /// Same generators in a ring with `ambient_n` variables.
    pub fn with_ambient(&self, ambient_n: usize) -> Result<Self> {
        let mut out = SquarefreeIdeal::new(ambient_n, self.generators.iter().copied())?;
        out.unit = self.unit;
        Ok(out)
    }

    pub(crate) fn require_proper_nonzero(&self) -> Result<()> {
        if self.unit {
            Err(Error::DegenerateIdeal("unit"))
        } else if self.generators.is_empty() {
            Err(Error::DegenerateIdeal("zero"))
        } else {
            Ok(())
        }
    }

    /// Parse the `n <N>` / one-generator-per-line format, with `unit` / `zero` keywords.
    pub fn parse(text: &str) -> Result<Self> {
        let (n, recs) = io::header(text)?;
        if let Some(first) = recs.first() {
            match first.tokens.as_slice() {
                ["unit"] | ["zero"] if recs.len() > 1 => {
                    return Err(Error::Parse {
                        line: recs[1].line,
                        msg: "no generators allowed after a keyword".into(),
                    })
                }
                ["unit"] => return Ok(SquarefreeIdeal::unit(n)),
                ["zero"] => return Ok(SquarefreeIdeal::zero(n)),
                _ => {}
            }
        }
        let gens = recs
            .iter()
            .map(|r| io::vertex_set(r, n))
            .collect::<Result<Vec<_>>>()?;
        SquarefreeIdeal::new(n, gens)
    }

    pub fn to_file_string(&self) -> String {
        let mut s = format!("n {}\n", self.ambient_n);
        if self.unit {
            s.push_str("unit\n");
        } else if self.generators.is_empty() {
            s.push_str("zero\n");
        } else {
            for g in &self.generators {
                s.push_str(&io::set_line(*g));
                s.push('\n');
            }
        }
        s
    }
}

impl fmt::Display for SquarefreeIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.unit {
            return write!(f, "(1)");
        }
        if self.generators.is_empty() {
            return write!(f, "(0)");
        }
        write!(f, "(")?;
        for (k, g) in self.generators.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            for v in g.iter() {
                write!(f, "x{v}")?;
            }
        }
        write!(f, ")")
    }
}

fn check_ambient(n: usize) -> Result<()> {
    if n == 0 || n > MAX_VERTICES {
        return Err(Error::invalid(format!(
            "ambient ring needs 1..={MAX_VERTICES} variables, got {n}"
        )));
    }
    Ok(())
}

/// `NI(G)`, generated by the closed neighborhoods.
pub fn neighborhood_ideal(g: &Graph) -> SquarefreeIdeal {
    SquarefreeIdeal {
        ambient_n: g.n(),
        generators: minimalize(g.closed_neighborhoods()),
        unit: false,
    }
}

/// `NI(P_n^2)` built directly from its minimal generators.
pub fn ni_pn2(n: usize) -> Result<SquarefreeIdeal> {
    if n < 3 {
        return Err(Error::invalid(format!(
            "NI(P_n^2) is defined here for n >= 3, got {n}"
        )));
    }
    check_ambient(n)?;
    let gens: Vec<VertexSet> = match n {
        3 => vec![VertexSet::interval(1, 3)],
        4 => vec![VertexSet::interval(1, 3), VertexSet::interval(2, 4)],
        5 => vec![VertexSet::interval(1, 3), VertexSet::interval(3, 5)],
        6 => vec![VertexSet::interval(1, 3), VertexSet::interval(4, 6)],
        _ => std::iter::once(VertexSet::interval(1, 3))
            .chain((2..=n - 5).map(|i| VertexSet::interval(i, i + 4)))
            .chain(std::iter::once(VertexSet::interval(n - 2, n)))
            .collect(),
    };
    SquarefreeIdeal::new(n, gens)
}

/// `NI(P_n^2)` computed from the graph, for cross-checking [`ni_pn2`].
pub fn ni_pn2_from_graph(n: usize) -> Result<SquarefreeIdeal> {
    Ok(neighborhood_ideal(&graph_square(&path_graph(n)?)))
}

/// `I_t(P_n)`: products of `t` consecutive variables.
pub fn path_ideal(n: usize, t: usize) -> Result<SquarefreeIdeal> {
    path_ideal_window(n, 1, n, t)
}

/// `I_t` of the path on the vertex window `a..=b`, inside a ring with `ambient_n` variables.
pub fn path_ideal_window(
    ambient_n: usize,
    a: usize,
    b: usize,
    t: usize,
) -> Result<SquarefreeIdeal> {
    check_ambient(ambient_n)?;
    if a == 0 || b > ambient_n || a > b {
        return Err(Error::invalid(format!(
            "window {a}..={b} not inside 1..={ambient_n}"
        )));
    }
    let len = b - a + 1;
    if t < 2 || t > len {
        return Err(Error::invalid(format!(
            "path length t={t} outside 2..={len}"
        )));
    }
    SquarefreeIdeal::new(
        ambient_n,
        (a..=b + 1 - t).map(|i| VertexSet::interval(i, i + t - 1)),
    )
}

/// `I : x_u`. Some generator inside `u` gives the unit ideal.
pub fn colon_by_monomial(i: &SquarefreeIdeal, u: VertexSet) -> Result<SquarefreeIdeal> {
    if u.is_empty() || !u.is_subset(VertexSet::full(i.ambient_n)) {
        return Err(Error::invalid(format!(
            "colon monomial support {u} must be nonempty inside 1..={}",
            i.ambient_n
        )));
    }
    if i.unit {
        return Ok(i.clone());
    }
    SquarefreeIdeal::new(i.ambient_n, i.generators.iter().map(|g| g.difference(u)))
}

pub fn add(i: &SquarefreeIdeal, j: &SquarefreeIdeal) -> Result<SquarefreeIdeal> {
    if i.ambient_n != j.ambient_n {
        return Err(Error::AmbientMismatch {
            left: i.ambient_n,
            right: j.ambient_n,
        });
    }
    if i.unit || j.unit {
        return Ok(SquarefreeIdeal::unit(i.ambient_n));
    }
    SquarefreeIdeal::new(
        i.ambient_n,
        i.generators.iter().chain(&j.generators).copied(),
    )
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PrimeList {
    /// Supports of the minimal primes, sorted lexicographically.
    pub primes: Vec<VertexSet>,
    pub height: usize,
    pub bight: usize,
}

/// Minimal primes `(x_v : v ∈ P)`, where `P` runs over minimal transversals of the generators.
pub fn minimal_primes(i: &SquarefreeIdeal, cap: usize) -> Result<PrimeList> {
    i.require_proper_nonzero()?;
    let primes = minimal_transversals(&i.generators, cap)?;
    let height = primes.iter().map(|p| p.len()).min().unwrap_or(0);
    let bight = primes.iter().map(|p| p.len()).max().unwrap_or(0);
    Ok(PrimeList {
        primes,
        height,
        bight,
    })
}

/// The Alexander dual ideal, generated by the minimal prime supports.
pub fn alexander_dual_ideal(i: &SquarefreeIdeal, cap: usize) -> Result<SquarefreeIdeal> {
    let primes = minimal_primes(i, cap)?;
    SquarefreeIdeal::new(i.ambient_n, primes.primes)
}

/// `I^c(Δ) = (x_{V∖F} : F facet)`.
pub fn complementary_ideal(c: &SimplicialComplex) -> Result<SquarefreeIdeal> {
    if c.facets().is_empty() {
        return Err(Error::DegenerateComplex("void"));
    }
    let n = c.n();
    if c.facets().iter().any(|f| *f == VertexSet::full(n)) {
        return Err(Error::DegenerateIdeal("unit"));
    }
    SquarefreeIdeal::new(n, c.facets().iter().map(|f| f.complement(n)))
}

/// The squarefree part of `I` in degree `d`: every `d`-set containing a generator.
pub fn squarefree_component(i: &SquarefreeIdeal, d: usize) -> Result<SquarefreeIdeal> {
    let n = i.ambient_n;
    if d == 0 || d > n {
        return Err(Error::invalid(format!("degree {d} outside 1..={n}")));
    }
    if i.unit {
        return SquarefreeIdeal::new(n, k_subsets(VertexSet::full(n), d));
    }
    let mut out = BTreeSet::new();
    for &g in i.generators.iter().filter(|g| g.len() <= d) {
        for extra in k_subsets(g.complement(n), d - g.len()) {
            out.insert(g.union(extra));
        }
    }
    Ok(SquarefreeIdeal {
        ambient_n: n,
        generators: out.into_iter().collect(),
        unit: false,
    })
}

/// All `k`-element subsets of `universe`.
pub(crate) fn k_subsets(universe: VertexSet, k: usize) -> Vec<VertexSet> {
    fn go(rest: &[usize], k: usize, acc: VertexSet, out: &mut Vec<VertexSet>) {
        if k == 0 {
            out.push(acc);
            return;
        }
        if rest.len() < k {
            return;
        }
        go(&rest[1..], k - 1, acc.with(rest[0]), out);
        go(&rest[1..], k, acc, out);
    }
    let vs = universe.to_vec();
    let mut out = Vec::new();
    go(&vs, k, VertexSet::EMPTY, &mut out);
    out
}

/// Minimal generators of `(prev) : x_next`.
fn colon_generators(prev: impl Iterator<Item = VertexSet>, next: VertexSet) -> Vec<VertexSet> {
    minimalize(prev.map(|g| g.difference(next)).collect())
}

fn is_linear(colon: &[VertexSet]) -> bool {
    colon.iter().all(|g| g.len() == 1)
}

/// Whether every successive colon `(m_1, ..., m_k) : m_{k+1}` is generated by variables.
pub fn check_linear_quotients(i: &SquarefreeIdeal, order: &[VertexSet]) -> Result<bool> {
    check_permutation(&i.generators, order, "generator")?;
    Ok(
        (1..order.len())
            .all(|k| is_linear(&colon_generators(order[..k].iter().copied(), order[k]))),
    )
}

pub(crate) fn check_permutation(
    items: &[VertexSet],
    order: &[VertexSet],
    what: &str,
) -> Result<()> {
    let mut a = items.to_vec();
    let mut b = order.to_vec();
    a.sort();
    b.sort();
    if a != b {
        return Err(Error::invalid(format!(
            "order is not a permutation of the {what}s"
        )));
    }
    Ok(())
}

/// Search for a linear-quotients order of the minimal generators.
///
/// Returns `Ok(None)` only after the whole search space was exhausted.
pub fn find_linear_quotients_order(
    i: &SquarefreeIdeal,
    cap: usize,
) -> Result<Option<Vec<VertexSet>>> {
    i.require_proper_nonzero()?;
    let gens = &i.generators;
    order_search(gens.len(), cap, |placed, next| {
        let prev = placed.iter().map(|&k| gens[k]);
        is_linear(&colon_generators(prev, gens[next]))
    })
    .map(|o| o.map(|idx| idx.into_iter().map(|k| gens[k]).collect()))
}

/// Depth-first search for an ordering of `0..m` where each element is
/// accepted given the set placed before it. `accepts` must depend only on
/// that set, which lets dead prefixes be memoized by their mask.
pub(crate) fn order_search(
    m: usize,
    cap: usize,
    accepts: impl Fn(&[usize], usize) -> bool,
) -> Result<Option<Vec<usize>>> {
    if m > 64 {
        return Err(Error::CapExceeded {
            what: "order search size (items)",
            cap: 64,
        });
    }
    struct State<'a, F> {
        m: usize,
        cap: usize,
        nodes: usize,
        dead: HashSet<u64>,
        accepts: &'a F,
    }
    fn go<F: Fn(&[usize], usize) -> bool>(
        st: &mut State<'_, F>,
        placed: &mut Vec<usize>,
        mask: u64,
    ) -> Result<bool> {
        if placed.len() == st.m {
            return Ok(true);
        }
        if st.dead.contains(&mask) {
            return Ok(false);
        }
        st.nodes += 1;
        if st.nodes > st.cap {
            return Err(Error::CapExceeded {
                what: "order search nodes",
                cap: st.cap,
            });
        }
        for next in 0..st.m {
            if mask >> next & 1 == 1 || !(st.accepts)(placed, next) {
                continue;
            }
            placed.push(next);
            if go(st, placed, mask | 1 << next)? {
                return Ok(true);
            }
            placed.pop();
        }
        st.dead.insert(mask);
        Ok(false)
    }
    let mut st = State {
        m,
        cap,
        nodes: 0,
        dead: HashSet::new(),
        accepts: &accepts,
    };
    let mut placed = Vec::with_capacity(m);
    Ok(go(&mut st, &mut placed, 0)?.then_some(placed))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::minimal_dominating_sets;
    use crate::vset;

    #[test]
    fn neighborhood_ideals() {
        let g = graph_square(&path_graph(7).unwrap());
        let ni = neighborhood_ideal(&g);
        assert_eq!(
            ni.generators(),
            &[vset![1, 2, 3], vset![2, 3, 4, 5, 6], vset![5, 6, 7]]
        );
        let p4 = neighborhood_ideal(&graph_square(&path_graph(4).unwrap()));
        assert_eq!(p4.generators(), &[vset![1, 2, 3], vset![2, 3, 4]]);
        let single = neighborhood_ideal(&Graph::empty(1).unwrap());
        assert_eq!(single.generators(), &[vset![1]]);
    }

    #[test]
    fn ni_pn2_shapes() {
        assert!(ni_pn2(2).is_err());
        assert_eq!(ni_pn2(7).unwrap().generators().len(), 3);
        assert_eq!(
            ni_pn2(6).unwrap().generators(),
            &[vset![1, 2, 3], vset![4, 5, 6]]
        );
        let ten = ni_pn2(10).unwrap();
        assert_eq!(
            ten.generators(),
            &[
                vset![1, 2, 3],
                vset![2, 3, 4, 5, 6],
                vset![3, 4, 5, 6, 7],
                vset![4, 5, 6, 7, 8],
                vset![5, 6, 7, 8, 9],
                vset![8, 9, 10]
            ]
        );
        for n in 3..=60 {
            assert_eq!(ni_pn2(n).unwrap(), ni_pn2_from_graph(n).unwrap(), "n={n}");
        }
    }

    #[test]
    fn path_ideals() {
        assert_eq!(
            path_ideal(3, 2).unwrap().generators(),
            &[vset![1, 2], vset![2, 3]]
        );
        assert_eq!(
            path_ideal_window(7, 2, 6, 5).unwrap().generators(),
            &[vset![2, 3, 4, 5, 6]]
        );
        assert_eq!(
            path_ideal(5, 5).unwrap().generators(),
            &[vset![1, 2, 3, 4, 5]]
        );
        assert!(path_ideal(5, 1).is_err());
        assert!(path_ideal(5, 6).is_err());
        assert!(path_ideal_window(7, 2, 8, 3).is_err());
    }

    #[test]
    fn decomposition_into_ends_and_path_ideal() {
        for n in 7..=12 {
            let ends = SquarefreeIdeal::new(
                n,
                [VertexSet::interval(1, 3), VertexSet::interval(n - 2, n)],
            )
            .unwrap();
            let mid = path_ideal_window(n, 2, n - 1, 5).unwrap();
            assert_eq!(add(&ends, &mid).unwrap(), ni_pn2(n).unwrap());
        }
    }

    #[test]
    fn colon_examples() {
        let base = add(
            &path_ideal_window(7, 2, 6, 5).unwrap(),
            &SquarefreeIdeal::new(7, [vset![1, 2, 3]]).unwrap(),
        )
        .unwrap();
        let c = colon_by_monomial(&base, vset![5, 6, 7]).unwrap();
        assert_eq!(c.generators(), &[vset![1, 2, 3], vset![2, 3, 4]]);

        let inner = path_ideal_window(10, 2, 9, 5).unwrap();
        let c = colon_by_monomial(&inner, vset![1, 2, 3]).unwrap();
        let expected = add(
            &path_ideal_window(10, 5, 9, 5).unwrap(),
            &SquarefreeIdeal::new(10, [vset![4, 5, 6]]).unwrap(),
        )
        .unwrap();
        assert_eq!(c, expected);

        let i = ni_pn2(7).unwrap().with_ambient(8).unwrap();
        assert_eq!(colon_by_monomial(&i, vset![8]).unwrap(), i);
        assert!(colon_by_monomial(&i, VertexSet::EMPTY).is_err());
        assert!(colon_by_monomial(&i, vset![1, 2, 3, 4]).unwrap().is_unit());
    }

    #[test]
    fn outer_colon_is_shorter_ni() {
        for n in 10..=30 {
            let base = add(
                &path_ideal_window(n, 2, n - 1, 5).unwrap(),
                &SquarefreeIdeal::new(n, [vset![1, 2, 3]]).unwrap(),
            )
            .unwrap();
            let c = colon_by_monomial(&base, VertexSet::interval(n - 2, n)).unwrap();
            assert_eq!(c, ni_pn2(n - 3).unwrap().with_ambient(n).unwrap(), "n={n}");
        }
    }

    #[test]
    fn sums() {
        let i = ni_pn2(8).unwrap();
        assert_eq!(add(&i, &SquarefreeIdeal::zero(8)).unwrap(), i);
        let a = SquarefreeIdeal::new(4, [vset![1, 2, 3]]).unwrap();
        let b = SquarefreeIdeal::new(4, [vset![1, 2, 3, 4]]).unwrap();
        assert_eq!(add(&a, &b).unwrap().generators(), &[vset![1, 2, 3]]);
        assert_eq!(
            add(&a, &SquarefreeIdeal::zero(5)),
            Err(Error::AmbientMismatch { left: 4, right: 5 })
        );
    }

    #[test]
    fn primes() {
        let p = minimal_primes(&ni_pn2(7).unwrap(), 1000).unwrap();
        assert!(p.primes.contains(&vset![3, 6]));
        assert_eq!(p.height, 2);
        let principal = SquarefreeIdeal::new(3, [vset![1, 2, 3]]).unwrap();
        let p = minimal_primes(&principal, 10).unwrap();
        assert_eq!(p.primes, vec![vset![1], vset![2], vset![3]]);
        assert_eq!((p.height, p.bight), (1, 1));
        assert!(minimal_primes(&SquarefreeIdeal::zero(3), 10).is_err());
    }

    #[test]
    fn explicit_height_witnesses() {
        // The displayed primes: x_{5k+3} for k < s, plus x_{5s+1} or x_{5s+2} on a remainder.
        for n in 7..=30usize {
            let (s, r) = (n / 5, n % 5);
            let mut p: VertexSet = (0..s).map(|k| 5 * k + 3).collect();
            match r {
                0 => {}
                1..=3 => p.insert(5 * s + 1),
                _ => p.insert(5 * s + 2),
            }
            let primes = minimal_primes(&ni_pn2(n).unwrap(), 1 << 20).unwrap();
            assert!(primes.primes.contains(&p), "n={n} missing {p}");
            assert_eq!(p.len(), primes.height);
        }
    }

    #[test]
    fn alexander_dual() {
        let path = path_ideal(3, 2).unwrap();
        assert_eq!(
            alexander_dual_ideal(&path, 10).unwrap().generators(),
            &[vset![1, 3], vset![2]]
        );
        let i = ni_pn2(7).unwrap();
        let dual = alexander_dual_ideal(&i, 1000).unwrap();
        assert_eq!(alexander_dual_ideal(&dual, 1000).unwrap(), i);
        // Oracle: brute-force dominating sets of P_7^2.
        let g = graph_square(&path_graph(7).unwrap());
        let all: Vec<_> = VertexSet::full(7)
            .subsets()
            .filter(|s| g.is_dominating(*s))
            .collect();
        let mut minimal: Vec<_> = all
            .iter()
            .copied()
            .filter(|s| !all.iter().any(|t| t != s && t.is_subset(*s)))
            .collect();
        minimal.sort();
        assert_eq!(dual.generators(), minimal.as_slice());
        assert_eq!(
            minimal_dominating_sets(&g, 1000).unwrap().minimal_sets,
            minimal
        );
    }

    #[test]
    fn complementary_ideals() {
        let c = SimplicialComplex::facet_complex(&ni_pn2(7).unwrap()).unwrap();
        let ic = complementary_ideal(&c).unwrap();
        let mut expected = vec![vset![4, 5, 6, 7], vset![1, 7], vset![1, 2, 3, 4]];
        expected.sort();
        assert_eq!(ic.generators(), expected.as_slice());

        let singles = SimplicialComplex::new(5, (1..=5).map(VertexSet::singleton)).unwrap();
        let ic = complementary_ideal(&singles).unwrap();
        assert_eq!(ic.generators().len(), 5);
        assert!(ic.generators().iter().all(|g| g.len() == 4));

        // Oracle: complement each facet of the P_8^2 facet complex, then minimalize by hand.
        let c8 = SimplicialComplex::facet_complex(&ni_pn2(8).unwrap()).unwrap();
        let full = VertexSet::full(8);
        let oracle: Vec<_> = c8.facets().iter().map(|f| full.difference(*f)).collect();
        let mut oracle_min: Vec<_> = oracle
            .iter()
            .copied()
            .filter(|a| !oracle.iter().any(|b| b != a && b.is_subset(*a)))
            .collect();
        oracle_min.sort();
        assert_eq!(
            oracle_min,
            vec![
                vset![1, 2, 3, 4, 5],
                vset![1, 2, 8],
                vset![1, 7, 8],
                vset![4, 5, 6, 7, 8]
            ]
        );
        assert_eq!(
            complementary_ideal(&c8).unwrap().generators(),
            oracle_min.as_slice()
        );

        let simplex = SimplicialComplex::new(3, [vset![1, 2, 3]]).unwrap();
        assert!(complementary_ideal(&simplex).is_err());
    }

    #[test]
    fn linear_quotients() {
        let c = SimplicialComplex::facet_complex(&ni_pn2(7).unwrap()).unwrap();
        let ic = complementary_ideal(&c).unwrap();
        let good = [vset![1, 7], vset![1, 2, 3, 4], vset![4, 5, 6, 7]];
        assert!(check_linear_quotients(&ic, &good).unwrap());
        let bad = [vset![1, 2, 3, 4], vset![4, 5, 6, 7], vset![1, 7]];
        assert!(!check_linear_quotients(&ic, &bad).unwrap());
        assert!(check_linear_quotients(&ic, &good[..2]).is_err());

        let principal = SquarefreeIdeal::new(4, [vset![1, 2]]).unwrap();
        assert!(check_linear_quotients(&principal, &[vset![1, 2]]).unwrap());
    }

    #[test]
    fn linear_quotient_search() {
        let c4 =
            SquarefreeIdeal::new(4, [vset![1, 2], vset![2, 3], vset![3, 4], vset![1, 4]]).unwrap();
        let order = find_linear_quotients_order(&c4, 1000)
            .unwrap()
            .expect("4-cycle has linear quotients");
        assert!(check_linear_quotients(&c4, &order).unwrap());

        let disjoint = SquarefreeIdeal::new(4, [vset![1, 2], vset![3, 4]]).unwrap();
        assert_eq!(find_linear_quotients_order(&disjoint, 1000).unwrap(), None);

        for n in 7..=12 {
            let c = SimplicialComplex::facet_complex(&ni_pn2(n).unwrap()).unwrap();
            let ic = complementary_ideal(&c).unwrap();
            let order = find_linear_quotients_order(&ic, 100_000)
                .unwrap()
                .expect("order exists");
            assert!(check_linear_quotients(&ic, &order).unwrap());
        }
    }

    #[test]
    fn squarefree_components() {
        let i = SquarefreeIdeal::new(3, [vset![1, 2]]).unwrap();
        assert_eq!(
            squarefree_component(&i, 3).unwrap().generators(),
            &[vset![1, 2, 3]]
        );
        let ni = ni_pn2(7).unwrap();
        assert_eq!(
            squarefree_component(&ni, 3).unwrap().generators(),
            &[vset![1, 2, 3], vset![5, 6, 7]]
        );
        assert!(squarefree_component(&ni, 2).unwrap().is_zero());
        // Oracle: every d-subset of [7] that contains a generator.
        for d in 1..=7 {
            let mut oracle: Vec<_> = VertexSet::full(7)
                .subsets()
                .filter(|s| s.len() == d && ni.contains_monomial(*s))
                .collect();
            oracle.sort();
            assert_eq!(
                squarefree_component(&ni, d).unwrap().generators(),
                oracle.as_slice()
            );
        }
        assert!(squarefree_component(&ni, 0).is_err());
    }

    #[test]
    fn file_format() {
        let i = ni_pn2(7).unwrap();
        assert_eq!(SquarefreeIdeal::parse(&i.to_file_string()).unwrap(), i);
        assert!(SquarefreeIdeal::parse("n 3\nunit\n").unwrap().is_unit());
        assert!(SquarefreeIdeal::parse("n 3\nzero # nothing\n")
            .unwrap()
            .is_zero());
        assert!(matches!(
            SquarefreeIdeal::parse("n 3\n1 2\n4\n"),
            Err(Error::Parse { line: 3, .. })
        ));
        assert!(matches!(
            SquarefreeIdeal::parse("n 3\nunit\n1\n"),
            Err(Error::Parse { line: 3, .. })
        ));
        let parsed = SquarefreeIdeal::parse("n 4\n1 2 3 4\n# c\n3 2 1\n").unwrap();
        assert_eq!(parsed.generators(), &[vset![1, 2, 3]]);
    }

    #[test]
    fn display() {
        assert_eq!(
            ni_pn2(7).unwrap().to_string(),
            "(x1x2x3, x2x3x4x5x6, x5x6x7)"
        );
        assert_eq!(SquarefreeIdeal::unit(2).to_string(), "(1)");
    }
}

//! Ring-theoretic invariants of Stanley-Reisner rings `k[Δ]` read off the
//! complex: Krull dimension, depth, Cohen-Macaulayness and the Buchsbaum
//! property, plus the Cohen-Macaulay test for posets through open intervals.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::face::Face;
use crate::field::FieldSpec;
use crate::poset::{Endpoint, Poset};
use crate::simplicial::{reduced_betti_up_to, SimplicialComplex};

/// Version stamped into every JSON report.
pub const SCHEMA_VERSION: u32 = 1;

/// `H̃^i(lk σ) = 0` for every `i < dim lk σ`.
fn link_is_cm_at(k: &SimplicialComplex, sigma: Face, field: FieldSpec) -> bool {
    let link = k.link(sigma).expect("faces come from the complex");
    let d = link.dim();
    reduced_betti_up_to(link.facets(), d - 1, field).is_zero()
}

/// Reisner's criterion, checked over every face including `∅`.
pub fn is_cohen_macaulay_complex(k: &SimplicialComplex, field: FieldSpec) -> bool {
    k.all_faces().into_iter().all(|sigma| link_is_cm_at(k, sigma, field))
}

/// Equidimensional, and every link of a nonempty face has vanishing reduced
/// cohomology below its dimension. Vertices are checked first.
pub fn is_buchsbaum_complex(k: &SimplicialComplex, field: FieldSpec) -> bool {
    if !k.is_equidimensional() {
        return false;
    }
    (0..=k.dim()).all(|d| k.faces_of_dim(d).into_iter().all(|sigma| link_is_cm_at(k, sigma, field)))
}

/// `dim k[Δ] = dim Δ + 1`.
pub fn krull_dim_stanley_reisner(k: &SimplicialComplex) -> usize {
    (k.dim() + 1) as usize
}

/// Depth of `k[Δ]` by Hochster's formula:
/// `min { i | H̃^{i−|σ|−1}(lk σ; k) ≠ 0 for some σ ∈ Δ }`.
///
/// Fails with [`Error::EmptyComplex`] on `{∅}`, whose ring is the field.
pub fn depth_stanley_reisner(k: &SimplicialComplex, field: FieldSpec) -> Result<usize> {
    if k.is_empty_face_only() {
        return Err(Error::EmptyComplex);
    }
    let mut solver = DepthSolver { facets: k.facets(), field, memo: HashMap::new() };
    Ok(solver.depth(Face::EMPTY, krull_dim_stanley_reisner(k)))
}

/// Evaluates Hochster's formula face by face. A nonzero class of
/// `H̃^{i−|σ|−1}(lk σ)` with `v ∈ σ` is a class for `lk v` one degree down, so
///
/// `depth Δ = min( 1 + min{j | H̃^j(Δ) ≠ 0}, 1 + min_v depth lk v )`,
///
/// and cone points each add one. Results are memoized by `σ`; a call with a
/// bound only looks at cohomology below it.
struct DepthSolver<'a> {
    facets: &'a [Face],
    field: FieldSpec,
    // σ ↦ (value, exact); inexact entries are lower bounds
    memo: HashMap<Face, (usize, bool)>,
}

impl DepthSolver<'_> {
    /// `min(depth k[lk σ], bound)`.
    fn depth(&mut self, sigma: Face, bound: usize) -> usize {
        if bound == 0 {
            return 0;
        }
        if let Some(&(v, exact)) = self.memo.get(&sigma) {
            if exact || v >= bound {
                return v.min(bound);
            }
        }
        let link: Vec<Face> = self.facets.iter().filter(|f| sigma.is_subset(**f)).map(|f| f.minus(sigma)).collect();
        let cone = link.iter().fold(link[0], |acc, f| acc.intersection(*f));
        let result = if link.len() == 1 && link[0].is_empty() {
            0
        } else if !cone.is_empty() {
            let c = cone.len();
            if c >= bound {
                bound
            } else {
                c + self.depth(sigma.union(cone), bound - c)
            }
        } else {
            let mut best = bound;
            if best >= 2 && !connected(&link) {
                best = 1;
            }
            if best >= 3 {
                let betti = reduced_betti_up_to(&link, best as i64 - 2, self.field);
                if let Some(j) = betti.first_nonzero() {
                    best = best.min((j + 1) as usize);
                }
            }
            let support = link.iter().fold(Face::EMPTY, |acc, f| acc.union(*f));
            for v in support.indices() {
                if best <= 1 {
                    break;
                }
                best = best.min(1 + self.depth(sigma.with(v), best - 1));
            }
            best
        };
        self.memo.insert(sigma, (result, result < bound));
        result
    }
}

/// Whether the 1-skeleton spanned by `facets` is connected.
fn connected(facets: &[Face]) -> bool {
    let support = facets.iter().fold(Face::EMPTY, |acc, f| acc.union(*f));
    let Some(start) = support.first() else { return true };
    let mut reached = Face::singleton(start);
    loop {
        let grown = facets.iter().filter(|f| !f.intersection(reached).is_empty()).fold(reached, |acc, f| acc.union(*f));
        if grown == reached {
            return reached == support;
        }
        reached = grown;
    }
}

/// For all `x < y` in `P ∪ {−∞, ∞}`,
/// `H̃^i(Δ((x,y)_P)) = 0` for `i < dim Δ((x,y)_P)`.
pub fn is_cohen_macaulay_poset(p: &Poset, field: FieldSpec) -> bool {
    let n = p.len();
    let mut pairs = vec![(Endpoint::NegInfinity, Endpoint::Infinity)];
    for x in 0..n {
        pairs.push((Endpoint::NegInfinity, Endpoint::Element(x)));
        pairs.push((Endpoint::Element(x), Endpoint::Infinity));
        for y in 0..n {
            if p.lt(x, y) {
                pairs.push((Endpoint::Element(x), Endpoint::Element(y)));
            }
        }
    }
    pairs.into_iter().all(|(lo, hi)| {
        let interval = p.open_interval(lo, hi).expect("endpoints are ordered");
        let delta = interval.order_complex().expect("posets here are small");
        reduced_betti_up_to(delta.facets(), delta.dim() - 1, field).is_zero()
    })
}

/// Summary of the Stanley-Reisner invariants of one complex over one field.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantReport {
    pub schema_version: u32,
    pub dim: usize,
    pub depth: usize,
    pub cm: bool,
    pub buchsbaum: bool,
    pub field: FieldSpec,
}

impl InvariantReport {
    /// For `{∅}` the ring is the field: depth and dimension are both 0.
    pub fn compute(k: &SimplicialComplex, field: FieldSpec) -> Self {
        InvariantReport {
            schema_version: SCHEMA_VERSION,
            dim: krull_dim_stanley_reisner(k),
            depth: depth_stanley_reisner(k, field).unwrap_or(0),
            cm: is_cohen_macaulay_complex(k, field),
            buchsbaum: is_buchsbaum_complex(k, field),
            field,
        }
    }
}

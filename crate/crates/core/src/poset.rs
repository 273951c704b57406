//! Finite posets, their ideals and open intervals, the order complex, and the
//! doubling construction `P ⊎ Q` that generates Rees algebras of discrete ASLs.
//!
//! A [`Poset`] stores its strict order as a transitively closed boolean matrix.
//! Values are immutable once built; every operation returns a new poset.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::face::Face;
use crate::simplicial::SimplicialComplex;

/// Marker appended to labels of the duplicated copy `Q*` in [`Poset::uplus`].
pub const STAR: &str = "*";

/// A finite poset on labelled elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poset {
    labels: Vec<String>,
    index: HashMap<String, usize>,
    // lt[a][b] == (a < b)
    lt: Vec<Vec<bool>>,
}

/// An endpoint of an open interval, allowing the sentinels `−∞` and `∞`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Endpoint {
    NegInfinity,
    Element(usize),
    Infinity,
}

/// A downward-closed subset of some parent poset, stored as sorted indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct PosetIdeal {
    members: Vec<usize>,
}

fn index_labels(labels: &[String]) -> Result<HashMap<String, usize>> {
    let mut index = HashMap::with_capacity(labels.len());
    for (i, l) in labels.iter().enumerate() {
        if index.insert(l.clone(), i).is_some() {
            return Err(Error::DuplicateLabel(l.clone()));
        }
    }
    Ok(index)
}

impl Poset {
    /// The empty poset.
    pub fn empty() -> Self {
        Poset { labels: Vec::new(), index: HashMap::new(), lt: Vec::new() }
    }

    /// Builds a poset whose order is the transitive closure of `covers`.
    pub fn from_covers<S, T>(labels: &[S], covers: &[(T, T)]) -> Result<Self>
    where
        S: AsRef<str>,
        T: AsRef<str>,
    {
        let labels: Vec<String> = labels.iter().map(|s| s.as_ref().to_owned()).collect();
        let index = index_labels(&labels)?;
        let n = labels.len();
        let mut lt = vec![vec![false; n]; n];
        for (a, b) in covers {
            let ia = *index.get(a.as_ref()).ok_or_else(|| Error::UnknownLabel(a.as_ref().into()))?;
            let ib = *index.get(b.as_ref()).ok_or_else(|| Error::UnknownLabel(b.as_ref().into()))?;
            lt[ia][ib] = true;
        }
        Self::from_relation_closing(labels, index, lt)
    }

    /// Builds a poset from an arbitrary relation matrix, closing it transitively.
    pub fn from_relation(labels: Vec<String>, relation: Vec<Vec<bool>>) -> Result<Self> {
        let index = index_labels(&labels)?;
        let n = labels.len();
        if relation.len() != n || relation.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidArgument("relation matrix has the wrong shape".into()));
        }
        Self::from_relation_closing(labels, index, relation)
    }

    fn from_relation_closing(
        labels: Vec<String>,
        index: HashMap<String, usize>,
        mut lt: Vec<Vec<bool>>,
    ) -> Result<Self> {
        let n = labels.len();
        // Warshall
        for k in 0..n {
            for i in 0..n {
                if lt[i][k] {
                    for j in 0..n {
                        if lt[k][j] {
                            lt[i][j] = true;
                        }
                    }
                }
            }
        }
        if let Some(a) = (0..n).find(|&a| lt[a][a]) {
            return Err(Error::Cycle(labels[a].clone()));
        }
        Ok(Poset { labels, index, lt })
    }

    /// Builds a poset on `0..n` labelled by decimal indices from a relation
    /// already known to be a strict order. Used by the enumerators.
    pub(crate) fn from_closed_unchecked(labels: Vec<String>, lt: Vec<Vec<bool>>) -> Self {
        let index = labels.iter().cloned().enumerate().map(|(i, l)| (l, i)).collect();
        Poset { labels, index, lt }
    }

    /// Chain `l0 < l1 < …` on the given labels.
    pub fn chain<S: AsRef<str>>(labels: &[S]) -> Result<Self> {
        let covers: Vec<(&str, &str)> = labels.windows(2).map(|w| (w[0].as_ref(), w[1].as_ref())).collect();
        Self::from_covers(labels, &covers)
    }

    /// Antichain on the given labels.
    pub fn antichain<S: AsRef<str>>(labels: &[S]) -> Result<Self> {
        Self::from_covers::<S, &str>(labels, &[])
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.index.get(label).copied().ok_or_else(|| Error::UnknownLabel(label.into()))
    }

    /// `a < b`.
    #[inline]
    pub fn lt(&self, a: usize, b: usize) -> bool {
        self.lt[a][b]
    }

    /// `a ≤ b`.
    #[inline]
    pub fn le(&self, a: usize, b: usize) -> bool {
        a == b || self.lt[a][b]
    }

    pub fn comparable(&self, a: usize, b: usize) -> bool {
        self.le(a, b) || self.lt[b][a]
    }

    /// The relation matrix, `m[a][b] == (a < b)`.
    pub fn relation(&self) -> &[Vec<bool>] {
        &self.lt
    }

    /// `a ⋖ b`: `a < b` with nothing strictly between.
    pub fn covers(&self, a: usize, b: usize) -> bool {
        self.lt[a][b] && !(0..self.len()).any(|z| self.lt[a][z] && self.lt[z][b])
    }

    /// All cover pairs, as index pairs.
    pub fn cover_pairs(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut out = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if self.covers(a, b) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        (0..self.len()).filter(|&x| !(0..self.len()).any(|y| self.lt[y][x])).collect()
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        (0..self.len()).filter(|&x| !(0..self.len()).any(|y| self.lt[x][y])).collect()
    }

    /// The unique minimal element, if there is exactly one.
    pub fn unique_minimum(&self) -> Option<usize> {
        match self.minimal_elements().as_slice() {
            [x] => Some(*x),
            _ => None,
        }
    }

    /// Subposet induced on `subset` (indices into `self`, any order). Labels
    /// are kept and elements appear in ascending index order.
    pub fn induced(&self, subset: &[usize]) -> Poset {
        let mut idx: Vec<usize> = subset.to_vec();
        idx.sort_unstable();
        idx.dedup();
        let labels: Vec<String> = idx.iter().map(|&i| self.labels[i].clone()).collect();
        let lt = idx.iter().map(|&a| idx.iter().map(|&b| self.lt[a][b]).collect()).collect();
        Poset::from_closed_unchecked(labels, lt)
    }

    /// Indices of `{z | lower < z < upper}`.
    pub fn interval_indices(&self, lower: Endpoint, upper: Endpoint) -> Result<Vec<usize>> {
        if let (Endpoint::Element(a), Endpoint::Element(b)) = (lower, upper) {
            if !self.lt[a][b] {
                return Err(Error::NotComparable(self.labels[a].clone(), self.labels[b].clone()));
            }
        }
        let above = |z: usize| match lower {
            Endpoint::NegInfinity => true,
            Endpoint::Element(a) => self.lt[a][z],
            Endpoint::Infinity => false,
        };
        let below = |z: usize| match upper {
            Endpoint::Infinity => true,
            Endpoint::Element(b) => self.lt[z][b],
            Endpoint::NegInfinity => false,
        };
        if matches!(lower, Endpoint::Infinity) || matches!(upper, Endpoint::NegInfinity) {
            return Err(Error::InvalidArgument("interval endpoints out of order".into()));
        }
        Ok((0..self.len()).filter(|&z| above(z) && below(z)).collect())
    }

    /// The open interval `(lower, upper)_P` as an induced subposet.
    pub fn open_interval(&self, lower: Endpoint, upper: Endpoint) -> Result<Poset> {
        Ok(self.induced(&self.interval_indices(lower, upper)?))
    }

    /// Whether `subset` is downward closed.
    pub fn is_ideal(&self, subset: &[usize]) -> bool {
        self.ideal_violation(subset).is_none()
    }

    fn ideal_violation(&self, subset: &[usize]) -> Option<(usize, usize)> {
        let mut member = vec![false; self.len()];
        for &x in subset {
            member[x] = true;
        }
        for &x in subset {
            for y in 0..self.len() {
                if self.lt[y][x] && !member[y] {
                    return Some((x, y));
                }
            }
        }
        None
    }

    /// The opposite poset: same labels, reversed order.
    pub fn opposite(&self) -> Poset {
        let n = self.len();
        let lt = (0..n).map(|a| (0..n).map(|b| self.lt[b][a]).collect()).collect();
        Poset::from_closed_unchecked(self.labels.clone(), lt)
    }

    /// The poset `P ⊎ Q` on `P ∪ Q*`. Starred copies come after the elements
    /// of `P`, in the order of `q`, labelled `label*`.
    ///
    /// `α < β` holds iff `α, β ∈ P` with `α < β`, or `α = x*, β = y*` with
    /// `x < y`, or `α = x*, β ∈ P` with `x ≤ β`.
    pub fn uplus(&self, q: &PosetIdeal) -> Result<Poset> {
        if let Some(l) = self.labels.iter().find(|l| l.contains(STAR)) {
            return Err(Error::ReservedLabel(l.clone()));
        }
        q.validate(self)?;
        let n = self.len();
        let m = q.members.len();
        let mut labels = self.labels.clone();
        labels.extend(q.members.iter().map(|&x| format!("{}{STAR}", self.labels[x])));
        let mut lt = vec![vec![false; n + m]; n + m];
        for a in 0..n {
            lt[a][..n].copy_from_slice(&self.lt[a]);
        }
        for (i, &x) in q.members.iter().enumerate() {
            for (j, &y) in q.members.iter().enumerate() {
                lt[n + i][n + j] = self.lt[x][y];
            }
            for b in 0..n {
                lt[n + i][b] = self.le(x, b);
            }
        }
        Ok(Poset::from_closed_unchecked(labels, lt))
    }

    /// Maximal chains, each listed bottom to top.
    pub fn maximal_chains(&self) -> Vec<Vec<usize>> {
        let n = self.len();
        let upper_covers: Vec<Vec<usize>> = (0..n).map(|a| (0..n).filter(|&b| self.covers(a, b)).collect()).collect();
        let mut out = Vec::new();
        let mut stack = Vec::new();
        fn walk(x: usize, up: &[Vec<usize>], stack: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            stack.push(x);
            if up[x].is_empty() {
                out.push(stack.clone());
            } else {
                for &y in &up[x] {
                    walk(y, up, stack, out);
                }
            }
            stack.pop();
        }
        for x in self.minimal_elements() {
            walk(x, &upper_covers, &mut stack, &mut out);
        }
        out
    }

    /// Every chain, `∅` included, each listed bottom to top.
    pub fn chains(&self) -> Vec<Vec<usize>> {
        let order = self.linear_extension();
        let mut out = vec![Vec::new()];
        // extend each chain by elements above its top, in linear-extension order
        let mut frontier: Vec<Vec<usize>> = order.iter().map(|&x| vec![x]).collect();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for c in &frontier {
                let top = *c.last().unwrap();
                for &y in &order {
                    if self.lt[top][y] {
                        let mut d = c.clone();
                        d.push(y);
                        next.push(d);
                    }
                }
            }
            out.append(&mut frontier);
            frontier = next;
        }
        out
    }

    /// True iff all maximal chains have the same cardinality.
    pub fn is_pure(&self) -> bool {
        let n = self.len();
        // longest and shortest maximal chain ending at each element, in a
        // linear extension order
        let order = self.linear_extension();
        let mut longest = vec![0usize; n];
        let mut shortest = vec![0usize; n];
        for &x in &order {
            let lower: Vec<usize> = (0..n).filter(|&y| self.covers(y, x)).collect();
            if lower.is_empty() {
                longest[x] = 1;
                shortest[x] = 1;
            } else {
                longest[x] = 1 + lower.iter().map(|&y| longest[y]).max().unwrap();
                shortest[x] = 1 + lower.iter().map(|&y| shortest[y]).min().unwrap();
            }
        }
        let maxima = self.maximal_elements();
        let lo = maxima.iter().map(|&x| shortest[x]).min();
        let hi = maxima.iter().map(|&x| longest[x]).max();
        lo == hi
    }

    /// Indices sorted so that `a < b` implies `a` comes first.
    pub fn linear_extension(&self) -> Vec<usize> {
        let n = self.len();
        let mut order: Vec<usize> = (0..n).collect();
        let rank: Vec<usize> = (0..n).map(|x| (0..n).filter(|&y| self.lt[y][x]).count()).collect();
        order.sort_by_key(|&x| rank[x]);
        order
    }

    /// Length of the longest chain (number of elements); 0 for the empty poset.
    pub fn height(&self) -> usize {
        let n = self.len();
        let mut longest = vec![0usize; n];
        for x in self.linear_extension() {
            longest[x] = 1 + (0..n).filter(|&y| self.lt[y][x]).map(|y| longest[y]).max().unwrap_or(0);
        }
        longest.into_iter().max().unwrap_or(0)
    }

    /// The order complex `Δ(P)`: vertices are the elements, facets the maximal chains.
    pub fn order_complex(&self) -> Result<SimplicialComplex> {
        let facets: Vec<Face> = if self.is_empty() {
            vec![Face::EMPTY]
        } else {
            self.maximal_chains().iter().map(|c| Face::from_indices(c.iter().copied())).collect()
        };
        SimplicialComplex::from_face_sets(self.labels.clone(), facets)
    }

    /// Reduced Euler characteristic of the order complex of the subposet
    /// induced on `subset`: `Σ_σ (−1)^{|σ|−1}` over all chains, `∅` included.
    pub fn reduced_euler_char_of(&self, subset: &[usize]) -> i64 {
        let mut idx: Vec<usize> = subset.to_vec();
        idx.sort_by_key(|&x| (0..self.len()).filter(|&y| self.lt[y][x]).count());
        // signed[x] = Σ over chains with top x of (−1)^{|σ|−1}
        let mut signed = vec![0i64; idx.len()];
        for i in 0..idx.len() {
            let below: i64 = (0..i).filter(|&j| self.lt[idx[j]][idx[i]]).map(|j| signed[j]).sum();
            signed[i] = 1 - below;
        }
        signed.iter().sum::<i64>() - 1
    }

    /// `χ̃(P) = χ̃(Δ(P))`.
    pub fn reduced_euler_char(&self) -> i64 {
        let all: Vec<usize> = (0..self.len()).collect();
        self.reduced_euler_char_of(&all)
    }
}

impl PosetIdeal {
    /// Validates that `members` (indices of `parent`) is downward closed.
    pub fn new(parent: &Poset, members: &[usize]) -> Result<Self> {
        let mut members = members.to_vec();
        members.sort_unstable();
        members.dedup();
        let ideal = PosetIdeal { members };
        ideal.validate(parent)?;
        Ok(ideal)
    }

    /// Looks up labels in `parent` and validates downward closure.
    pub fn from_labels<S: AsRef<str>>(parent: &Poset, labels: &[S]) -> Result<Self> {
        let idx = labels.iter().map(|l| parent.index_of(l.as_ref())).collect::<Result<Vec<_>>>()?;
        Self::new(parent, &idx)
    }

    /// The smallest ideal containing `seeds`.
    pub fn down_closure(parent: &Poset, seeds: &[usize]) -> Self {
        let mut members: Vec<usize> = (0..parent.len()).filter(|&y| seeds.iter().any(|&s| parent.le(y, s))).collect();
        members.sort_unstable();
        PosetIdeal { members }
    }

    pub fn empty() -> Self {
        PosetIdeal { members: Vec::new() }
    }

    /// The whole poset as an ideal of itself.
    pub fn full(parent: &Poset) -> Self {
        PosetIdeal { members: (0..parent.len()).collect() }
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    /// Checks the stored subset against `parent`.
    pub fn validate(&self, parent: &Poset) -> Result<()> {
        if let Some(&bad) = self.members.iter().find(|&&x| x >= parent.len()) {
            return Err(Error::InvalidArgument(format!("element index {bad} out of range")));
        }
        match parent.ideal_violation(&self.members) {
            Some((x, y)) => Err(Error::NotAnIdeal(parent.labels[x].clone(), parent.labels[y].clone())),
            None => Ok(()),
        }
    }

    /// Labels of the members in `parent`.
    pub fn labels<'a>(&self, parent: &'a Poset) -> Vec<&'a str> {
        self.members.iter().map(|&x| parent.label(x)).collect()
    }

    /// Every ideal of `parent`, enumerated as antichain down-closures.
    pub fn all(parent: &Poset) -> Vec<PosetIdeal> {
        let n = parent.len();
        assert!(n < 32, "ideal enumeration is limited to small posets");
        let mut out = Vec::new();
        for mask in 0u32..(1u32 << n) {
            let subset: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
            if parent.is_ideal(&subset) {
                out.push(PosetIdeal { members: subset });
            }
        }
        out
    }
}

/// Serialized poset: `{"elements": [...], "covers": [[a, b], ...]}` with `a < b`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetFile {
    pub elements: Vec<String>,
    pub covers: Vec<(String, String)>,
}

impl TryFrom<PosetFile> for Poset {
    type Error = Error;

    fn try_from(f: PosetFile) -> Result<Self> {
        Poset::from_covers(&f.elements, &f.covers)
    }
}

impl From<&Poset> for PosetFile {
    fn from(p: &Poset) -> Self {
        PosetFile {
            elements: p.labels.clone(),
            covers: p.cover_pairs().into_iter().map(|(a, b)| (p.labels[a].clone(), p.labels[b].clone())).collect(),
        }
    }
}

/// Serialized poset ideal: `{"ideal": [labels...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealRefFile {
    pub ideal: Vec<String>,
}

impl IdealRefFile {
    pub fn resolve(&self, parent: &Poset) -> Result<PosetIdeal> {
        PosetIdeal::from_labels(parent, &self.ideal)
    }
}

impl From<(&PosetIdeal, &Poset)> for IdealRefFile {
    fn from((q, parent): (&PosetIdeal, &Poset)) -> Self {
        IdealRefFile { ideal: q.labels(parent).into_iter().map(str::to_owned).collect() }
    }
}

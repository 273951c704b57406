//! Hodge data of the generic symmetric matrix: the poset of bitableaux
//! `[α|β]` of minors, its ideals `Ω_t` of minors of size `≥ t`, and the
//! discrete counterpart of `k[X]/I_2(X)` with its dimension and depth.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::invariants::SCHEMA_VERSION;
use crate::monomial::{polarized_name, HodgeData, Monomial, MonomialIdeal};
use crate::poset::{Poset, PosetIdeal};

/// A strictly increasing tuple `1 ≤ a_1 < … < a_t ≤ n` (a row or column set).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IndexTuple(Vec<usize>);

impl IndexTuple {
    pub fn new(entries: Vec<usize>) -> Result<Self> {
        if entries.is_empty() || entries[0] == 0 || entries.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidArgument(format!("{entries:?} is not strictly increasing from 1")));
        }
        Ok(IndexTuple(entries))
    }

    pub fn size(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    /// `α ≤ β` iff `|α| ≥ |β|` and `a_i ≤ b_i` for `i ≤ |β|`.
    pub fn leq(&self, other: &IndexTuple) -> bool {
        self.size() >= other.size() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Every tuple over `1..=n`, ordered by size then lexicographically.
    pub fn all(n: usize) -> Vec<IndexTuple> {
        let mut out: Vec<IndexTuple> = (1u32..1 << n)
            .map(|mask| IndexTuple((0..n).filter(|i| mask >> i & 1 == 1).map(|i| i + 1).collect()))
            .collect();
        out.sort_by(|a, b| a.size().cmp(&b.size()).then_with(|| a.0.cmp(&b.0)));
        out
    }
}

impl fmt::Display for IndexTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|a| a.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

/// A bitableau `[α|β]` with rows `α` and columns `β` of equal size.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BiTableau {
    pub row: IndexTuple,
    pub col: IndexTuple,
}

impl BiTableau {
    /// `[α|β] < [γ|δ]` iff `α < γ`, or `α = γ` and `β < δ`.
    pub fn lt(&self, other: &BiTableau) -> bool {
        let strictly = |a: &IndexTuple, b: &IndexTuple| a != b && a.leq(b);
        strictly(&self.row, &other.row) || (self.row == other.row && strictly(&self.col, &other.col))
    }
}

impl fmt::Display for BiTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}|{}]", self.row, self.col)
    }
}

/// `tuple_leq` on two tuples.
pub fn tuple_leq(alpha: &IndexTuple, beta: &IndexTuple) -> bool {
    alpha.leq(beta)
}

/// The bitableaux `[α|β]` with `α ≤ β`, in a fixed order.
pub fn minor_tableaux(n: usize) -> Vec<BiTableau> {
    let tuples = IndexTuple::all(n);
    let mut out = Vec::new();
    for a in &tuples {
        for b in tuples.iter().filter(|b| b.size() == a.size() && a.leq(b)) {
            out.push(BiTableau { row: a.clone(), col: b.clone() });
        }
    }
    out
}

/// Hodge data `(D, Σ)` of the symmetric `n × n` matrix: `D` holds `[α|β]` with
/// `α ≤ β`, and `Σ` is generated by `[α|β][γ|δ]` with `β ≰ γ` and `δ ≰ α`.
pub fn build_minor_hodge_data(n: usize) -> Result<HodgeData> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be positive".into()));
    }
    let elems = minor_tableaux(n);
    let labels: Vec<String> = elems.iter().map(|e| e.to_string()).collect();
    let relation = elems.iter().map(|a| elems.iter().map(|b| a.lt(b)).collect()).collect();
    let poset = Poset::from_relation(labels.clone(), relation)?;
    let mut gens: Vec<Monomial> = Vec::new();
    for i in 0..elems.len() {
        for j in i..elems.len() {
            let (p, q) = (&elems[i], &elems[j]);
            if !p.col.leq(&q.row) && !q.col.leq(&p.row) {
                let mut m = vec![0; elems.len()];
                m[i] += 1;
                m[j] += 1;
                gens.push(m);
            }
        }
    }
    HodgeData::new(poset, MonomialIdeal::new(&labels, gens)?)
}

/// `Ω_t = {[α|β] ∈ D | size α ≥ t}`, validated as a poset ideal of `D`.
pub fn omega_ideal(data: &HodgeData, t: usize) -> Result<PosetIdeal> {
    let d = data.poset();
    let members: Vec<usize> = (0..d.len()).filter(|&x| tableau_size(d.label(x)) >= t).collect();
    PosetIdeal::new(d, &members)
}

fn tableau_size(label: &str) -> usize {
    let row = label.trim_start_matches('[').split('|').next().unwrap_or("");
    row.split(',').count()
}

/// Name of the variable `X_ij` of the symmetric matrix.
pub fn x_var(n: usize, i: usize, j: usize) -> String {
    if n < 10 {
        format!("X{i}{j}")
    } else {
        format!("X{i}_{j}")
    }
}

/// Variables `X_ij`, `1 ≤ i ≤ j ≤ n`, in lexicographic order.
pub fn symmetric_variables(n: usize) -> Vec<(usize, usize)> {
    (1..=n).flat_map(|i| (i..=n).map(move |j| (i, j))).collect()
}

/// The discrete counterpart of `k[X]/I_2(X)`: the monomial ideal generated
/// by `X_ij X_kl` over unordered pairs (squares included) with `j > k`, `l > i`.
pub fn a_dis_ideal_t2(n: usize) -> Result<MonomialIdeal> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be positive".into()));
    }
    let vars = symmetric_variables(n);
    let names: Vec<String> = vars.iter().map(|&(i, j)| x_var(n, i, j)).collect();
    let mut gens = Vec::new();
    for a in 0..vars.len() {
        for b in a..vars.len() {
            let ((i, j), (k, l)) = (vars[a], vars[b]);
            if j > k && l > i {
                let mut m = vec![0; vars.len()];
                m[a] += 1;
                m[b] += 1;
                gens.push(m);
            }
        }
    }
    MonomialIdeal::new(&names, gens)
}

/// The two facets of the polarized complex exhibited for `k[X,Y]/J`, with
/// `Y_ij` the polarization copy `X_ij(2)`.
pub fn exhibited_facets(n: usize) -> (Vec<String>, Vec<String>) {
    let y = |i, j| polarized_name(&x_var(n, i, j), 2);
    let mut small = vec![x_var(n, 1, 1), x_var(n, 1, n), x_var(n, n, n)];
    small.extend(symmetric_variables(n).into_iter().filter(|&(i, j)| i < j && (i, j) != (1, n)).map(|(i, j)| y(i, j)));
    let mut large: Vec<String> =
        symmetric_variables(n).into_iter().filter(|&(i, j)| j <= i + 1).map(|(i, j)| x_var(n, i, j)).collect();
    large.extend(symmetric_variables(n).into_iter().filter(|&(i, j)| j >= i + 2).map(|(i, j)| y(i, j)));
    (small, large)
}

/// Dimension and depth of the discrete counterpart of `k[X]/I_2(X)` and of
/// its core, with the facet evidence from the polarized complex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DetsymReport {
    pub schema_version: u32,
    pub n: usize,
    pub field: FieldSpec,
    pub dim: usize,
    pub depth: usize,
    pub core_dim: usize,
    pub core_depth: usize,
    /// Variables in no generator, removed to form the core.
    pub regular_part: Vec<String>,
    /// Auxiliary variables introduced by polarization.
    pub polarization_aux: usize,
    pub polarized_dim: usize,
    pub polarized_depth: usize,
    /// Cardinalities of the two exhibited facets.
    pub facet_sizes: [usize; 2],
    /// Whether both exhibited sets are facets of the polarized complex.
    pub facets_present: bool,
}

/// Builds the `t = 2` discrete ideal for `n ≥ 3` and computes every number.
pub fn detsym_report(n: usize, field: FieldSpec) -> Result<DetsymReport> {
    if n < 3 {
        return Err(Error::InvalidArgument(format!("n = {n}; the computation needs n ≥ 3")));
    }
    let ideal = a_dis_ideal_t2(n)?;
    let (polarized, aux) = ideal.polarize()?;
    let delta = polarized.stanley_reisner_complex()?;
    let (small, large) = exhibited_facets(n);
    let facets_present =
        [&small, &large].iter().all(|f| delta.face_from_labels(f).is_ok_and(|face| delta.facets().contains(&face)));
    let polarized_depth = crate::invariants::depth_stanley_reisner(&delta, field)?;
    let polarized_dim = crate::invariants::krull_dim_stanley_reisner(&delta);

    let core_vars = ideal.support();
    let regular_part: Vec<String> =
        (0..ideal.variables().len()).filter(|v| !core_vars.contains(v)).map(|v| ideal.variables()[v].clone()).collect();
    let core = ideal.restrict(&core_vars);

    Ok(DetsymReport {
        schema_version: SCHEMA_VERSION,
        n,
        field,
        dim: ideal.dim_quotient()?,
        depth: polarized_depth - aux,
        core_dim: core.dim_quotient()?,
        core_depth: core.depth_quotient(field)?,
        regular_part,
        polarization_aux: aux,
        polarized_dim,
        polarized_depth,
        facet_sizes: [small.len(), large.len()],
        facets_present,
    })
}

//! Monomial ideals over named variables: polarization, radical, colon, the
//! Stanley-Reisner correspondence, and the combinatorial data of a Hodge
//! algebra (a poset `H` with an ideal of monomials `Σ` on it).

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::face::{Face, MAX_VERTICES};
use crate::field::FieldSpec;
use crate::invariants::{depth_stanley_reisner, krull_dim_stanley_reisner};
use crate::poset::{Poset, PosetIdeal};
use crate::simplicial::SimplicialComplex;

/// An exponent vector, one entry per variable.
pub type Monomial = Vec<u32>;

/// A monomial ideal stored by its minimal generators, in lex-descending order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    variables: Vec<String>,
    generators: Vec<Monomial>,
}

fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn lcm(a: &[u32], b: &[u32]) -> Monomial {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by_key(|g| g.iter().sum::<u32>());
    gens.dedup();
    let mut kept: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !kept.iter().any(|k| divides(k, &g)) {
            kept.push(g);
        }
    }
    kept.sort_by(|a, b| b.cmp(a));
    kept
}

/// Suffix naming the `j`-th polarization copy of a variable: `x(j)`.
pub fn polarized_name(var: &str, j: u32) -> String {
    format!("{var}({j})")
}

impl MonomialIdeal {
    /// Builds the ideal generated by `generators`, re-minimalized.
    pub fn new<S: AsRef<str>>(variables: &[S], generators: Vec<Monomial>) -> Result<Self> {
        let variables: Vec<String> = variables.iter().map(|v| v.as_ref().to_owned()).collect();
        let mut seen = HashMap::new();
        for v in &variables {
            if seen.insert(v.as_str(), ()).is_some() {
                return Err(Error::DuplicateLabel(v.clone()));
            }
        }
        if let Some(g) = generators.iter().find(|g| g.len() != variables.len()) {
            return Err(Error::ArityMismatch { expected: variables.len(), got: g.len() });
        }
        Ok(MonomialIdeal { variables, generators: minimalize(generators) })
    }

    /// Builds generators from `(variable, exponent)` lists.
    pub fn from_named<S: AsRef<str>>(variables: &[S], generators: &[Vec<(&str, u32)>]) -> Result<Self> {
        let index: HashMap<&str, usize> = variables.iter().enumerate().map(|(i, v)| (v.as_ref(), i)).collect();
        let gens = generators
            .iter()
            .map(|g| {
                let mut m = vec![0; variables.len()];
                for &(v, e) in g {
                    let i = *index.get(v).ok_or_else(|| Error::UnknownLabel(v.into()))?;
                    m[i] += e;
                }
                Ok(m)
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(variables, gens)
    }

    /// The zero ideal.
    pub fn zero<S: AsRef<str>>(variables: &[S]) -> Self {
        Self::new(variables, Vec::new()).expect("no generators to check")
    }

    /// The unit ideal.
    pub fn unit<S: AsRef<str>>(variables: &[S]) -> Self {
        Self::new(variables, vec![vec![0; variables.len()]]).expect("arity matches")
    }

    pub fn variables(&self) -> &[String] {
        &self.variables
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.generators
    }

    pub fn is_unit(&self) -> bool {
        self.generators.iter().any(|g| g.iter().all(|&e| e == 0))
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_squarefree(&self) -> bool {
        self.generators.iter().all(|g| g.iter().all(|&e| e <= 1))
    }

    pub fn contains(&self, m: &[u32]) -> bool {
        self.generators.iter().any(|g| divides(g, m))
    }

    /// `self ⊆ other`, over the same variables.
    pub fn is_subset(&self, other: &MonomialIdeal) -> bool {
        self.generators.iter().all(|g| other.contains(g))
    }

    fn require_proper(&self) -> Result<()> {
        if self.is_unit() {
            Err(Error::UnitIdeal)
        } else {
            Ok(())
        }
    }

    fn require_same_ring(&self, other: &MonomialIdeal) -> Result<()> {
        if self.variables != other.variables {
            Err(Error::VariableMismatch)
        } else {
            Ok(())
        }
    }

    /// Variables occurring in some generator.
    pub fn support(&self) -> Vec<usize> {
        (0..self.variables.len()).filter(|&i| self.generators.iter().any(|g| g[i] > 0)).collect()
    }

    /// Standard polarization. A variable `x` whose largest exponent is `e`
    /// gains copies `x(2)…x(e)` appended after the original variables, and
    /// `x^d` becomes `x·x(2)···x(d)`. Returns the squarefree ideal and the
    /// number of copies introduced.
    pub fn polarize(&self) -> Result<(MonomialIdeal, usize)> {
        self.require_proper()?;
        let n = self.variables.len();
        let max_exp: Vec<u32> = (0..n).map(|i| self.generators.iter().map(|g| g[i]).max().unwrap_or(0)).collect();
        let mut variables = self.variables.clone();
        // copy_index[i][j - 2] = column of x_i(j)
        let mut copy_index: Vec<Vec<usize>> = vec![Vec::new(); n];
        for i in 0..n {
            for j in 2..=max_exp[i] {
                copy_index[i].push(variables.len());
                variables.push(polarized_name(&self.variables[i], j));
            }
        }
        let aux = variables.len() - n;
        let generators = self
            .generators
            .iter()
            .map(|g| {
                let mut m = vec![0u32; variables.len()];
                for i in 0..n {
                    if g[i] >= 1 {
                        m[i] = 1;
                    }
                    for j in 2..=g[i] {
                        m[copy_index[i][(j - 2) as usize]] = 1;
                    }
                }
                m
            })
            .collect();
        Ok((MonomialIdeal::new(&variables, generators)?, aux))
    }

    /// Generated by the squarefree supports of the generators.
    pub fn radical(&self) -> Result<MonomialIdeal> {
        self.require_proper()?;
        let gens = self.generators.iter().map(|g| g.iter().map(|&e| e.min(1)).collect()).collect();
        MonomialIdeal::new(&self.variables, gens)
    }

    /// Intersection of two ideals over the same variables.
    pub fn intersection(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.require_same_ring(other)?;
        let gens = self.generators.iter().flat_map(|a| other.generators.iter().map(move |b| lcm(a, b))).collect();
        MonomialIdeal::new(&self.variables, gens)
    }

    /// `I : m`, generated by `g / gcd(g, m)`.
    pub fn colon_monomial(&self, m: &[u32]) -> MonomialIdeal {
        let gens =
            self.generators.iter().map(|g| g.iter().zip(m).map(|(a, b)| a.saturating_sub(*b)).collect()).collect();
        MonomialIdeal::new(&self.variables, gens).expect("same arity")
    }

    /// `I : J = ⋂_{g ∈ gens J} (I : g)`; `I : 0` is the unit ideal.
    pub fn colon(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.require_same_ring(other)?;
        let mut parts = other.generators.iter().map(|g| self.colon_monomial(g));
        let Some(first) = parts.next() else {
            return Ok(MonomialIdeal::unit(&self.variables));
        };
        parts.try_fold(first, |acc, p| acc.intersection(&p))
    }

    /// The complex whose non-faces are the supports of monomials in `I`.
    pub fn stanley_reisner_complex(&self) -> Result<SimplicialComplex> {
        self.require_proper()?;
        if !self.is_squarefree() {
            return Err(Error::NotSquarefree);
        }
        let n = self.variables.len();
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        let nonfaces: Vec<Face> =
            self.generators.iter().map(|g| Face::from_indices((0..n).filter(|&i| g[i] == 1))).collect();
        let facets = maximal_independent_sets(n, &nonfaces);
        Ok(SimplicialComplex::from_maximal_unchecked(self.variables.clone(), facets))
    }

    /// `dim S/I`, computed on the Stanley-Reisner complex of `√I`.
    pub fn dim_quotient(&self) -> Result<usize> {
        Ok(krull_dim_stanley_reisner(&self.radical()?.stanley_reisner_complex()?))
    }

    /// `depth S/I`: polarize, apply Hochster's formula to the resulting
    /// Stanley-Reisner ring, and subtract the length of the regular sequence
    /// of differences `x(j) − x` that undoes the polarization.
    pub fn depth_quotient(&self, field: FieldSpec) -> Result<usize> {
        let (pol, aux) = self.polarize()?;
        let delta = pol.stanley_reisner_complex()?;
        let depth = match depth_stanley_reisner(&delta, field) {
            Ok(d) => d,
            // every variable lies in I, so S/I = k
            Err(Error::EmptyComplex) => 0,
            Err(e) => return Err(e),
        };
        Ok(depth - aux)
    }

    /// Keeps the variables in `keep` (indices, ascending): generators using a
    /// dropped variable vanish, the rest are projected.
    pub fn restrict(&self, keep: &[usize]) -> MonomialIdeal {
        let gens = self
            .generators
            .iter()
            .filter(|g| (0..g.len()).all(|i| g[i] == 0 || keep.contains(&i)))
            .map(|g| keep.iter().map(|&i| g[i]).collect())
            .collect();
        let vars: Vec<&str> = keep.iter().map(|&i| self.variables[i].as_str()).collect();
        MonomialIdeal::new(&vars, gens).expect("restriction keeps arity consistent")
    }

    /// Renders a generator as `x^2*y`.
    pub fn format_monomial(&self, m: &[u32]) -> String {
        let parts: Vec<String> = m
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| match e {
                1 => self.variables[i].clone(),
                _ => format!("{}^{e}", self.variables[i]),
            })
            .collect();
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("*")
        }
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.generators.iter().map(|g| self.format_monomial(g)).collect();
        write!(f, "({})", gens.join(", "))
    }
}

/// Facets of the complex on `0..n` with minimal non-faces `nonfaces`:
/// the maximal subsets containing none of them.
fn maximal_independent_sets(n: usize, nonfaces: &[Face]) -> Vec<Face> {
    let loops: Face = nonfaces.iter().filter(|g| g.len() == 1).fold(Face::EMPTY, |a, g| a.union(*g));
    let edges: Vec<Face> = nonfaces.iter().copied().filter(|g| g.len() >= 2).collect();
    let verts: Vec<usize> = (0..n).filter(|&v| !loops.contains(v)).collect();
    let touching: Vec<Vec<Face>> = (0..n).map(|v| edges.iter().copied().filter(|g| g.contains(v)).collect()).collect();
    let blocked = |set: Face, v: usize| touching[v].iter().any(|g| g.without(v).is_subset(set));

    let mut out = Vec::new();
    let mut later = vec![Face::EMPTY; verts.len() + 1];
    for i in (0..verts.len()).rev() {
        later[i] = later[i + 1].with(verts[i]);
    }
    // depth-first over include/exclude decisions
    let mut stack = vec![(0usize, Face::EMPTY)];
    while let Some((i, set)) = stack.pop() {
        if i == verts.len() {
            if verts.iter().all(|&v| set.contains(v) || blocked(set, v)) {
                out.push(set);
            }
            continue;
        }
        let v = verts[i];
        // excluding v only helps if something could still block it
        let reach = set.union(later[i + 1]);
        if touching[v].iter().any(|g| g.without(v).is_subset(reach)) {
            stack.push((i + 1, set));
        }
        if !blocked(set, v) {
            stack.push((i + 1, set.with(v)));
        }
    }
    if out.is_empty() {
        out.push(Face::EMPTY);
    }
    out.sort();
    out
}

/// Serialized ideal: `{"variables": [...], "generators": [{"x": 2, "y": 1}, ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealFile {
    pub variables: Vec<String>,
    pub generators: Vec<BTreeMap<String, u32>>,
}

impl TryFrom<IdealFile> for MonomialIdeal {
    type Error = Error;

    fn try_from(f: IdealFile) -> Result<Self> {
        let gens: Vec<Vec<(&str, u32)>> =
            f.generators.iter().map(|g| g.iter().map(|(k, &v)| (k.as_str(), v)).collect()).collect();
        MonomialIdeal::from_named(&f.variables, &gens)
    }
}

impl From<&MonomialIdeal> for IdealFile {
    fn from(i: &MonomialIdeal) -> Self {
        IdealFile {
            variables: i.variables.clone(),
            generators: i
                .generators
                .iter()
                .map(|g| {
                    g.iter().enumerate().filter(|(_, &e)| e > 0).map(|(k, &e)| (i.variables[k].clone(), e)).collect()
                })
                .collect(),
        }
    }
}

/// A poset `H` with an ideal of monomials `Σ` in the variables `H`: the
/// combinatorial data of a Hodge algebra. Its discrete counterpart is `k[H]/(Σ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HodgeData {
    poset: Poset,
    sigma: MonomialIdeal,
}

impl HodgeData {
    /// `sigma` must be over exactly the labels of `poset`, in order.
    pub fn new(poset: Poset, sigma: MonomialIdeal) -> Result<Self> {
        if sigma.variables() != poset.labels() {
            return Err(Error::VariableMismatch);
        }
        Ok(HodgeData { poset, sigma })
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn sigma(&self) -> &MonomialIdeal {
        &self.sigma
    }

    /// The monomial ideal defining the discrete counterpart `k[H]/(Σ)`.
    pub fn discrete_ideal(&self) -> &MonomialIdeal {
        &self.sigma
    }

    /// Data on `H ∖ Ω` governed by `Σ/Ω`, for a poset ideal `Ω` of `H`.
    pub fn quotient(&self, omega: &PosetIdeal) -> Result<HodgeData> {
        omega.validate(&self.poset)?;
        let keep: Vec<usize> = (0..self.poset.len()).filter(|&x| !omega.contains(x)).collect();
        HodgeData::new(self.poset.induced(&keep), self.sigma.restrict(&keep))
    }

    /// `core H = ⋃ supp N` over the generators `N` of `Σ`. Returns the data
    /// restricted to `core H` and the labels of `H ∖ core H`, which form a
    /// regular sequence on the discrete algebra.
    pub fn core(&self) -> (HodgeData, Vec<String>) {
        let core = self.sigma.support();
        let rest: Vec<String> =
            (0..self.poset.len()).filter(|x| !core.contains(x)).map(|x| self.poset.label(x).to_owned()).collect();
        let data = HodgeData { poset: self.poset.induced(&core), sigma: self.sigma.restrict(&core) };
        (data, rest)
    }
}

//! Exhaustive and random sweeps over pairs `(P, Q)` of a finite poset and a
//! poset ideal, checking the relations between the Euler characteristic
//! conditions, the `a`-invariant numerator and Cohen-Macaulayness of `P ⊎ Q`.
//!
//! Posets are checked in parallel; results are merged in enumeration order, so
//! tallies and the first counterexample do not depend on scheduling.

use std::collections::HashSet;

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::field::FieldSpec;
use crate::invariants::{is_cohen_macaulay_complex, is_cohen_macaulay_poset, SCHEMA_VERSION};
use crate::poset::{Poset, PosetFile, PosetIdeal};
use crate::rees::{
    euler_condition_interval, euler_condition_q, g_dis_numerator_mu_top, g_dis_numerator_mu_top_by_euler,
};

/// Largest poset the bitmask enumeration supports.
pub const MAX_ENUMERATED: usize = 8;

fn element_labels(n: usize) -> Vec<String> {
    (0..n).map(|i| ((b'a' + i as u8) as char).to_string()).collect()
}

/// `below[x]` is the bitmask of elements strictly below `x`.
fn poset_from_masks(below: &[u16]) -> Poset {
    let n = below.len();
    let relation: Vec<Vec<bool>> = (0..n).map(|a| (0..n).map(|b| below[b] >> a & 1 == 1).collect()).collect();
    Poset::from_relation(element_labels(n), relation).expect("masks describe a transitive order")
}

/// Down-closed masks of a poset given by `below`.
fn down_sets(below: &[u16]) -> impl Iterator<Item = u16> + '_ {
    let n = below.len();
    (0u16..(1u16 << n)).filter(move |&m| (0..n).all(|x| m >> x & 1 == 0 || below[x] & !m == 0))
}

fn natural_masks(n: usize) -> Vec<Vec<u16>> {
    assert!(n <= MAX_ENUMERATED, "enumeration is limited to {MAX_ENUMERATED} elements");
    let mut level: Vec<Vec<u16>> = vec![Vec::new()];
    for _ in 0..n {
        level = level
            .iter()
            .flat_map(|below| {
                down_sets(below).map(move |d| {
                    let mut next = below.clone();
                    next.push(d);
                    next
                })
            })
            .collect();
    }
    level
}

/// Posets on `{a, b, ...}` (n elements) in which `x < y` implies that `x`
/// comes first. Every isomorphism class occurs at least once.
pub fn naturally_labelled_posets(n: usize) -> Vec<Poset> {
    natural_masks(n).iter().map(|m| poset_from_masks(m)).collect()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for k in 0..n {
        out = out
            .into_iter()
            .flat_map(|p: Vec<usize>| {
                (0..=k).map(move |i| {
                    let mut q = p.clone();
                    q.insert(i, k);
                    q
                })
            })
            .collect();
    }
    out
}

/// Every partial order on the labelled set `{a, b, ...}` of size `n`, in a
/// fixed order.
pub fn labelled_posets(n: usize) -> Vec<Poset> {
    let perms = permutations(n);
    let mut seen: HashSet<Vec<u16>> = HashSet::new();
    for below in natural_masks(n) {
        for perm in &perms {
            let mut relabelled = vec![0u16; n];
            for (x, &m) in below.iter().enumerate() {
                relabelled[perm[x]] = (0..n).filter(|&y| m >> y & 1 == 1).map(|y| 1u16 << perm[y]).sum();
            }
            seen.insert(relabelled);
        }
    }
    let mut all: Vec<Vec<u16>> = seen.into_iter().collect();
    all.sort_unstable();
    all.iter().map(|m| poset_from_masks(m)).collect()
}

/// A random poset on `n` elements: each pair is related with probability
/// `density` along a random linear order, then closed transitively.
pub fn random_poset(rng: &mut impl Rng, n: usize, density: f64) -> Poset {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut relation = vec![vec![false; n]; n];
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(density) {
                relation[order[i]][order[j]] = true;
            }
        }
    }
    Poset::from_relation(element_labels(n), relation).expect("relation follows a linear order")
}

/// The down-closure of a random subset; every element is a seed with
/// probability `1/3`.
pub fn random_ideal(rng: &mut impl Rng, p: &Poset) -> PosetIdeal {
    let seeds: Vec<usize> = (0..p.len()).filter(|_| rng.gen_ratio(1, 3)).collect();
    PosetIdeal::down_closure(p, &seeds)
}

/// A checked statement. Field-independent properties ignore the field list.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Property {
    /// The `Q`-form and interval form of the Euler condition agree.
    EulerConditionsAgree,
    /// The numerator's `μ`-top coefficient vanishes iff the Euler condition holds.
    NumeratorMatchesEuler,
    /// Direct expansion and the `χ̃` regrouping of the numerator coincide.
    NumeratorRoutesAgree,
    /// `P` CM and the interval condition imply `P ⊎ Q` CM.
    IntervalConditionImpliesCm,
    /// `P` CM with a unique minimum implies `P ⊎ Q` CM.
    UniqueMinimumImpliesCm,
    /// `P` CM and `∅ ≠ Q ⊊ P` imply `P ⊎ Q` CM iff `a < 0`.
    CmIffANegative,
    /// `Δ(P ⊎ Q)` and `Δ(P)` have the same reduced Betti numbers.
    BettiPreserved,
    /// `Δ((P ⊎ Q) ∖ {x₀*})` is acyclic when `x₀` is the minimum and `Q ≠ ∅`.
    StarredMinimumRemovedAcyclic,
    /// The interval criterion and Reisner's criterion on `Δ(P)` agree.
    CmCriteriaAgree,
}

impl Property {
    pub const ALL: [Property; 9] = [
        Property::EulerConditionsAgree,
        Property::NumeratorMatchesEuler,
        Property::NumeratorRoutesAgree,
        Property::IntervalConditionImpliesCm,
        Property::UniqueMinimumImpliesCm,
        Property::CmIffANegative,
        Property::BettiPreserved,
        Property::StarredMinimumRemovedAcyclic,
        Property::CmCriteriaAgree,
    ];

    fn slot(self) -> usize {
        Property::ALL.iter().position(|&p| p == self).unwrap()
    }
}

/// How many instances met the hypotheses of a property and how many failed it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropertyTally {
    pub property: Property,
    pub checked: u64,
    pub violations: u64,
}

/// A failing instance. `ideal` is `None` for properties of `P` alone.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub property: Property,
    pub field: Option<FieldSpec>,
    pub poset: PosetFile,
    pub ideal: Option<Vec<String>>,
}

/// Which posets the exhaustive part of a sweep visits.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Enumeration {
    /// Every partial order on a labelled set.
    Labelled,
    /// Posets whose labelling is a linear extension; every isomorphism type
    /// occurs, with far fewer posets than the labelled enumeration.
    NaturallyLabelled,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SweepConfig {
    /// Posets with `0..=max_elements` elements are enumerated exhaustively.
    pub max_elements: usize,
    pub enumeration: Enumeration,
    pub fields: Vec<FieldSpec>,
    /// Number of random `(P, Q)` pairs drawn in addition to the enumeration.
    pub random_pairs: usize,
    /// Inclusive size range for random posets.
    pub random_elements: (usize, usize),
    pub seed: u64,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            max_elements: 4,
            enumeration: Enumeration::Labelled,
            fields: vec![FieldSpec::RATIONAL, FieldSpec::GF2],
            random_pairs: 0,
            random_elements: (6, 6),
            seed: 0,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SweepSummary {
    pub schema_version: u32,
    pub config: SweepConfig,
    pub posets: u64,
    pub pairs: u64,
    pub tallies: Vec<PropertyTally>,
    pub first_counterexample: Option<Counterexample>,
}

impl SweepSummary {
    pub fn violations(&self) -> u64 {
        self.tallies.iter().map(|t| t.violations).sum()
    }

    pub fn is_clean(&self) -> bool {
        self.violations() == 0
    }

    pub fn tally(&self, property: Property) -> PropertyTally {
        self.tallies[property.slot()]
    }
}

#[derive(Default)]
struct Outcome {
    counts: [(u64, u64); Property::ALL.len()],
    first: Option<Counterexample>,
    pairs: u64,
}

impl Outcome {
    fn record(&mut self, property: Property, ok: bool, field: Option<FieldSpec>, p: &Poset, q: Option<&PosetIdeal>) {
        let c = &mut self.counts[property.slot()];
        c.0 += 1;
        if !ok {
            c.1 += 1;
            if self.first.is_none() {
                self.first = Some(Counterexample {
                    property,
                    field,
                    poset: PosetFile::from(p),
                    ideal: q.map(|q| q.labels(p).into_iter().map(str::to_owned).collect()),
                });
            }
        }
    }

    fn merge(&mut self, other: Outcome) {
        for (a, b) in self.counts.iter_mut().zip(other.counts) {
            a.0 += b.0;
            a.1 += b.1;
        }
        if self.first.is_none() {
            self.first = other.first;
        }
        self.pairs += other.pairs;
    }
}

fn trimmed(values: &[u64]) -> &[u64] {
    let end = values.iter().rposition(|&b| b != 0).map_or(0, |i| i + 1);
    &values[..end]
}

fn betti_of(p: &Poset, field: FieldSpec) -> Vec<u64> {
    let delta = p.order_complex().expect("sweep posets are small");
    trimmed(delta.reduced_betti_numbers(field).values()).to_vec()
}

/// Checks every property on `P` and each ideal in `ideals`.
fn check_poset(p: &Poset, ideals: &[PosetIdeal], fields: &[FieldSpec]) -> Outcome {
    let mut out = Outcome::default();
    let delta = p.order_complex().expect("sweep posets are small");
    let cm_p: Vec<bool> = fields.iter().map(|&f| is_cohen_macaulay_poset(p, f)).collect();
    for (&f, &cm) in fields.iter().zip(&cm_p) {
        out.record(Property::CmCriteriaAgree, cm == is_cohen_macaulay_complex(&delta, f), Some(f), p, None);
    }
    let betti_p: Vec<Vec<u64>> = fields.iter().map(|&f| betti_of(p, f)).collect();
    let minimum = p.unique_minimum();

    for q in ideals {
        out.pairs += 1;
        let cond_q = euler_condition_q(p, q).expect("ideal of p");
        let cond_interval = euler_condition_interval(p, q).expect("ideal of p");
        out.record(Property::EulerConditionsAgree, cond_q == cond_interval, None, p, Some(q));

        let a_negative = if q.is_empty() {
            None
        } else {
            let direct = g_dis_numerator_mu_top(p, q).expect("nonempty ideal");
            let regrouped = g_dis_numerator_mu_top_by_euler(p, q).expect("nonempty ideal");
            out.record(Property::NumeratorRoutesAgree, direct == regrouped, None, p, Some(q));
            out.record(Property::NumeratorMatchesEuler, direct.is_zero() == cond_q, None, p, Some(q));
            Some(direct.is_zero())
        };

        let uplus = p.uplus(q).expect("labels carry no marker");
        let without_star_min = minimum.filter(|_| !q.is_empty()).map(|x0| {
            let star = p.len() + q.members().iter().position(|&y| y == x0).expect("minimum lies in Q");
            let keep: Vec<usize> = (0..uplus.len()).filter(|&i| i != star).collect();
            uplus.induced(&keep)
        });
        for (i, &f) in fields.iter().enumerate() {
            let cm_u = is_cohen_macaulay_poset(&uplus, f);
            if cm_p[i] && cond_interval {
                out.record(Property::IntervalConditionImpliesCm, cm_u, Some(f), p, Some(q));
            }
            if cm_p[i] && minimum.is_some() {
                out.record(Property::UniqueMinimumImpliesCm, cm_u, Some(f), p, Some(q));
            }
            if let Some(a) = a_negative.filter(|_| cm_p[i] && q.len() < p.len()) {
                out.record(Property::CmIffANegative, cm_u == a, Some(f), p, Some(q));
            }
            out.record(Property::BettiPreserved, betti_of(&uplus, f) == betti_p[i], Some(f), p, Some(q));
            if let Some(rest) = &without_star_min {
                out.record(Property::StarredMinimumRemovedAcyclic, betti_of(rest, f).is_empty(), Some(f), p, Some(q));
            }
        }
    }
    out
}

/// Runs the sweep described by `config`.
pub fn run_sweep(config: &SweepConfig) -> SweepSummary {
    let mut jobs: Vec<(Poset, Option<PosetIdeal>)> = Vec::new();
    for n in 0..=config.max_elements {
        let posets = match config.enumeration {
            Enumeration::Labelled => labelled_posets(n),
            Enumeration::NaturallyLabelled => naturally_labelled_posets(n),
        };
        jobs.extend(posets.into_iter().map(|p| (p, None)));
    }
    let mut rng = StdRng::seed_from_u64(config.seed);
    let (lo, hi) = config.random_elements;
    for _ in 0..config.random_pairs {
        let n = rng.gen_range(lo..=hi);
        let density = rng.gen_range(0.15..0.75);
        let p = random_poset(&mut rng, n, density);
        let q = random_ideal(&mut rng, &p);
        jobs.push((p, Some(q)));
    }

    let outcomes: Vec<Outcome> = jobs
        .par_iter()
        .map(|(p, q)| {
            let ideals = match q {
                Some(q) => vec![q.clone()],
                None => PosetIdeal::all(p),
            };
            check_poset(p, &ideals, &config.fields)
        })
        .collect();
    let mut total = Outcome::default();
    for o in outcomes {
        total.merge(o);
    }
    SweepSummary {
        schema_version: SCHEMA_VERSION,
        config: config.clone(),
        posets: jobs.len() as u64,
        pairs: total.pairs,
        tallies: Property::ALL
            .iter()
            .zip(total.counts)
            .map(|(&property, (checked, violations))| PropertyTally { property, checked, violations })
            .collect(),
        first_counterexample: total.first,
    }
}

//! Rees algebras of discrete ASLs with respect to a poset ideal `Q ⊆ P`.
//!
//! The Rees algebra is generated by `P ⊎ Q`. Its Cohen-Macaulayness is tied
//! to the sign of the a-invariant of the associated graded ring, which is
//! read off the `μ`-top coefficient of the numerator of the multigraded
//! Hilbert series, and equivalently off two reduced Euler characteristic
//! conditions.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::invariants::{is_cohen_macaulay_poset, SCHEMA_VERSION};
use crate::polynomial::IntPolynomial;
use crate::poset::{Endpoint, Poset, PosetIdeal};

/// `λ_x` for each element, in element order.
pub fn lambda_variables(p: &Poset) -> Vec<String> {
    p.labels().iter().map(|l| format!("λ_{l}")).collect()
}

/// Elements of `(P ∖ Q)` as endpoints, followed by `∞`.
fn outside_points(p: &Poset, q: &PosetIdeal) -> Vec<Endpoint> {
    (0..p.len()).filter(|&x| !q.contains(x)).map(Endpoint::Element).chain(std::iter::once(Endpoint::Infinity)).collect()
}

/// `χ̃({y ∈ Q | y < x}) = 0` for every `x ∈ (P ∪ {∞}) ∖ Q`.
pub fn euler_condition_q(p: &Poset, q: &PosetIdeal) -> Result<bool> {
    q.validate(p)?;
    Ok(outside_points(p, q).into_iter().all(|x| {
        let below: Vec<usize> = q
            .members()
            .iter()
            .copied()
            .filter(|&y| match x {
                Endpoint::Element(x) => p.lt(y, x),
                _ => true,
            })
            .collect();
        p.reduced_euler_char_of(&below) == 0
    }))
}

/// `χ̃((−∞, x)_P) = 0` for every `x ∈ (P ∪ {∞}) ∖ Q`.
pub fn euler_condition_interval(p: &Poset, q: &PosetIdeal) -> Result<bool> {
    q.validate(p)?;
    for x in outside_points(p, q) {
        let interval = p.interval_indices(Endpoint::NegInfinity, x)?;
        if p.reduced_euler_char_of(&interval) != 0 {
            return Ok(false);
        }
    }
    Ok(true)
}

fn require_nonempty(p: &Poset, q: &PosetIdeal) -> Result<()> {
    q.validate(p)?;
    if q.is_empty() {
        Err(Error::EmptyQ)
    } else {
        Ok(())
    }
}

/// Coefficient of `μ^{|Q|}` in the numerator of the `N^{n+1}`-graded Hilbert
/// series of the discrete associated graded ring, expanded face by face:
///
/// `Σ_{σ ∈ Δ(P)} ∏_{σ∩Q} λ · ∏_{Q∖σ} (−λ) · ∏_{σ∖Q} λ · ∏_{P∖(σ∪Q)} (1 − λ)`.
pub fn g_dis_numerator_mu_top(p: &Poset, q: &PosetIdeal) -> Result<IntPolynomial> {
    require_nonempty(p, q)?;
    let vars = lambda_variables(p);
    let one = IntPolynomial::one(vars.clone());
    let lambda: Vec<IntPolynomial> = (0..p.len()).map(|i| IntPolynomial::var(vars.clone(), i)).collect();
    let mut total = IntPolynomial::zero(vars);
    for chain in p.chains() {
        let mut term = one.clone();
        for x in 0..p.len() {
            let factor = match (chain.contains(&x), q.contains(x)) {
                (true, _) => lambda[x].clone(),
                (false, true) => -&lambda[x],
                (false, false) => &one - &lambda[x],
            };
            term = &term * &factor;
        }
        total = &total + &term;
    }
    Ok(total)
}

/// The same coefficient after grouping faces by their part outside `Q`:
///
/// `(−1)^{|Q|+1} ∏_Q λ · Σ_τ χ̃({y ∈ Q | y < min(τ ∪ {∞})}) ∏_τ λ ∏_{P∖(τ∪Q)} (1 − λ)`
///
/// over chains `τ` of `P` disjoint from `Q`. The inner sum over chains `υ` of
/// `Q` below `min τ` is `Σ (−1)^{|υ|} = −χ̃`, hence the extra sign.
pub fn g_dis_numerator_mu_top_by_euler(p: &Poset, q: &PosetIdeal) -> Result<IntPolynomial> {
    require_nonempty(p, q)?;
    let vars = lambda_variables(p);
    let one = IntPolynomial::one(vars.clone());
    let lambda: Vec<IntPolynomial> = (0..p.len()).map(|i| IntPolynomial::var(vars.clone(), i)).collect();
    let mut total = IntPolynomial::zero(vars.clone());
    for tau in p.chains().into_iter().filter(|c| c.iter().all(|&x| !q.contains(x))) {
        let below: Vec<usize> =
            q.members().iter().copied().filter(|&y| tau.first().is_none_or(|&m| p.lt(y, m))).collect();
        let chi = p.reduced_euler_char_of(&below);
        if chi == 0 {
            continue;
        }
        let mut term = IntPolynomial::constant(vars.clone(), chi);
        for x in (0..p.len()).filter(|&x| !q.contains(x)) {
            let factor = if tau.contains(&x) { lambda[x].clone() } else { &one - &lambda[x] };
            term = &term * &factor;
        }
        total = &total + &term;
    }
    let sign = if q.len().is_multiple_of(2) { -1 } else { 1 };
    let mut prefactor = IntPolynomial::constant(vars, sign);
    for &x in q.members() {
        prefactor = &prefactor * &lambda[x];
    }
    Ok(&prefactor * &total)
}

/// `a(G_dis) < 0` iff the `μ`-top coefficient of the numerator vanishes.
pub fn a_invariant_negative(p: &Poset, q: &PosetIdeal) -> Result<bool> {
    Ok(g_dis_numerator_mu_top(p, q)?.is_zero())
}

/// Why a pair falls outside the hypotheses of the Rees biconditional.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Degenerate {
    EmptyQ,
    FullQ,
}

/// Cohen-Macaulay data for the Rees algebra of the discrete ASL on `P`
/// with respect to `Q`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReesReport {
    pub schema_version: u32,
    pub field: FieldSpec,
    pub cm_p: bool,
    pub cm_uplus: bool,
    /// `None` when `Q = ∅`, where the numerator is undefined.
    pub a_negative: Option<bool>,
    pub cond_q: bool,
    pub cond_interval: bool,
    /// Direct expansion and the Euler regrouping give the same polynomial.
    pub numerator_routes_agree: bool,
    pub degenerate: Option<Degenerate>,
    /// Euler legs agree, and when `P` is CM and `∅ ≠ Q ⊊ P`, `cm_uplus == a_negative`.
    pub consistent: bool,
}

pub fn rees_cm_report(p: &Poset, q: &PosetIdeal, field: FieldSpec) -> Result<ReesReport> {
    q.validate(p)?;
    let uplus = p.uplus(q)?;
    let cm_p = is_cohen_macaulay_poset(p, field);
    let cm_uplus = is_cohen_macaulay_poset(&uplus, field);
    let cond_q = euler_condition_q(p, q)?;
    let cond_interval = euler_condition_interval(p, q)?;
    let degenerate = if q.is_empty() {
        Some(Degenerate::EmptyQ)
    } else if q.len() == p.len() {
        Some(Degenerate::FullQ)
    } else {
        None
    };
    let (a_negative, numerator_routes_agree) = if q.is_empty() {
        (None, true)
    } else {
        let direct = g_dis_numerator_mu_top(p, q)?;
        let regrouped = g_dis_numerator_mu_top_by_euler(p, q)?;
        (Some(direct.is_zero()), direct == regrouped)
    };
    let euler_leg = cond_q == cond_interval && a_negative.is_none_or(|a| a == cond_q) && numerator_routes_agree;
    let rees_leg = degenerate.is_some() || !cm_p || Some(cm_uplus) == a_negative;
    Ok(ReesReport {
        schema_version: SCHEMA_VERSION,
        field,
        cm_p,
        cm_uplus,
        a_negative,
        cond_q,
        cond_interval,
        numerator_routes_agree,
        degenerate,
        consistent: euler_leg && rees_leg,
    })
}

//! Green's relations and the witnesses behind them.
//!
//! `R` and `L` are decided by comparing domain and range complements; `D`
//! and `J` are universal because the monoid is bisimple and simple. The
//! constructive side supplies the order-preserving bijections that realize
//! these facts.

use std::fmt;
use std::str::FromStr;

use crate::element::CofiniteInjection;
use crate::error::Error;
use crate::scalar::Scalar;
use crate::set::FiniteSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GreenRelation {
    R,
    L,
    H,
    D,
    J,
}

impl GreenRelation {
    pub const ALL: [GreenRelation; 5] =
        [GreenRelation::R, GreenRelation::L, GreenRelation::H, GreenRelation::D, GreenRelation::J];
}

impl FromStr for GreenRelation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "R" => Ok(GreenRelation::R),
            "L" => Ok(GreenRelation::L),
            "H" => Ok(GreenRelation::H),
            "D" => Ok(GreenRelation::D),
            "J" => Ok(GreenRelation::J),
            other => Err(Error::Validation(format!("unknown Green relation {other:?}"))),
        }
    }
}

impl fmt::Display for GreenRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            GreenRelation::R => "R",
            GreenRelation::L => "L",
            GreenRelation::H => "H",
            GreenRelation::D => "D",
            GreenRelation::J => "J",
        };
        f.write_str(s)
    }
}

pub fn related<T: Scalar>(rel: GreenRelation, a: &CofiniteInjection<T>, b: &CofiniteInjection<T>) -> bool {
    match rel {
        GreenRelation::R => a.domain_complement() == b.domain_complement(),
        GreenRelation::L => a.range_complement() == b.range_complement(),
        GreenRelation::H => related(GreenRelation::R, a, b) && related(GreenRelation::L, a, b),
        // bisimple, hence also simple
        GreenRelation::D | GreenRelation::J => true,
    }
}

/// The order-preserving bijection from `ω ∖ dom_c` onto `ω ∖ ran_c`.
///
/// Its domain and range complements are exactly `dom_c` and `ran_c`, so it is
/// the canonical member of the corresponding ℋ-class.
pub fn h_class_element<T: Scalar>(
    dom_c: &FiniteSet<T>,
    ran_c: &FiniteSet<T>,
) -> Result<CofiniteInjection<T>, Error> {
    let shift = T::from_usize(ran_c.len())?.checked_minus(T::from_usize(dom_c.len())?)?;
    let past = |s: &FiniteSet<T>| -> Result<T, Error> {
        s.max().map_or(Ok(T::zero()), |m| m.checked_plus(T::one()))
    };
    // From here on every hole on both sides has been passed.
    let threshold =
        past(dom_c)?.max(past(ran_c)?.checked_minus(shift)?).max(T::zero()).index().ok_or(Error::Overflow)?;
    let mut next = T::zero();
    CofiniteInjection::from_fn(shift, threshold, |n| {
        if dom_c.contains(n) {
            return Ok(None);
        }
        while ran_c.contains(next) {
            next = next.checked_plus(T::one())?;
        }
        let value = next;
        next = next.checked_plus(T::one())?;
        Ok(Some(value))
    })
}

/// An element ℛ-related to `a` and ℒ-related to `b`.
pub fn d_witness<T: Scalar>(
    a: &CofiniteInjection<T>,
    b: &CofiniteInjection<T>,
) -> Result<CofiniteInjection<T>, Error> {
    h_class_element(&a.domain_complement(), &b.range_complement())
}

/// Returns `(γ, δ)` with `γ·a·δ = b`.
///
/// `γ` is the order-preserving bijection `dom b → dom a` and
/// `δ = (γ·a)⁻¹·b`.
pub fn simple_factorization<T: Scalar>(
    a: &CofiniteInjection<T>,
    b: &CofiniteInjection<T>,
) -> Result<(CofiniteInjection<T>, CofiniteInjection<T>), Error> {
    let gamma = h_class_element(&b.domain_complement(), &a.domain_complement())?;
    let delta = gamma.compose(a)?.invert()?.compose(b)?;
    Ok((gamma, delta))
}

/// For a unit `γ ≠ 𝕀`, the identity on `ω ∖ {x₀}` where `x₀` is the least
/// point moved by `γ`. The returned idempotent and its product with `γ` lie in
/// different ℋ-classes.
pub fn separating_idempotent<T: Scalar>(
    gamma: &CofiniteInjection<T>,
) -> Result<(CofiniteInjection<T>, T), Error> {
    if !gamma.is_unit() {
        return Err(Error::NotAUnit);
    }
    let moved = gamma
        .table()
        .iter()
        .enumerate()
        .find(|(r, v)| v.and_then(|v| v.index()) != Some(*r))
        .map(|(r, _)| r)
        .ok_or(Error::IsIdentity)?;
    let x0 = T::from_usize(moved)?;
    let eps = CofiniteInjection::idempotent_on_complement(&[x0].into())?;
    Ok((eps, x0))
}

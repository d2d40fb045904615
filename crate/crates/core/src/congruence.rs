//! The index homomorphism onto ℤ, the congruences `~_d` and σ, unit
//! representatives of σ-classes, and solution sets of translation
//! equations.

use std::fmt;
use std::str::FromStr;

use crate::element::CofiniteInjection;
use crate::error::Error;
use crate::scalar::Scalar;
use crate::set::FiniteSet;

/// Which side the unknown sits on: `Right` solves `a·χ = b`, `Left` solves
/// `χ·a = b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

impl FromStr for Side {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "left" => Ok(Side::Left),
            "right" => Ok(Side::Right),
            other => Err(Error::Validation(format!("side must be left or right, got {other:?}"))),
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Left => "left",
            Side::Right => "right",
        })
    }
}

/// `d̄(a) − r̄(a)`.
pub fn index_hom<T: Scalar>(a: &CofiniteInjection<T>) -> T {
    a.stats().index
}

pub fn d_equiv<T: Scalar>(a: &CofiniteInjection<T>, b: &CofiniteInjection<T>) -> bool {
    index_hom(a) == index_hom(b)
}

/// Identity on `[m, ∞)`.
fn tail_idempotent<T: Scalar>(m: usize) -> Result<CofiniteInjection<T>, Error> {
    CofiniteInjection::from_fn(T::zero(), m, |_| Ok(None))
}

/// Searches for an idempotent `ε` with `a·ε = b·ε`.
///
/// Candidates are the tail idempotents `id|[M, ∞)` for increasing `M`; the
/// search stops at `max(N_a, N_b) + max(0, k_a, k_b)`, beyond which any pair
/// with equal shifts already agrees. Returns the least witness, or `None`.
pub fn sigma_related<T: Scalar>(
    a: &CofiniteInjection<T>,
    b: &CofiniteInjection<T>,
) -> Result<Option<CofiniteInjection<T>>, Error> {
    let lift = a.shift().max(b.shift()).max(T::zero()).index().ok_or(Error::Overflow)?;
    let limit = a.threshold().max(b.threshold()).checked_add(lift).ok_or(Error::Overflow)?;
    let mut witness = None;
    for m in 0..=limit {
        let eps = tail_idempotent(m)?;
        if a.compose(&eps)? == b.compose(&eps)? {
            witness = Some(eps);
            break;
        }
    }
    if witness.is_some() != d_equiv(a, b) {
        return Err(Error::InvariantViolation("sigma witness search disagrees with the index"));
    }
    Ok(witness)
}

/// For `b` with `d̄(b) = r̄(b)`, returns a unit `α` and the identity `ε` on
/// `ran b` with `α·ε = b·ε`.
///
/// `α` agrees with `b` on `dom b` and sends the holes of `dom b` onto the
/// holes of `ran b`, ascending to ascending.
pub fn unit_representative<T: Scalar>(
    b: &CofiniteInjection<T>,
) -> Result<(CofiniteInjection<T>, CofiniteInjection<T>), Error> {
    let stats = b.stats();
    if stats.dbar != stats.rbar {
        return Err(Error::IndexNonzero(stats.index.wide()));
    }
    let (dom_c, ran_c) = b.complements();
    let mut fill = ran_c.iter();
    // equal complement sizes force shift 0, so every hole is a table row
    let alpha = CofiniteInjection::from_fn(b.shift(), b.threshold(), |x| match b.apply(x)? {
        Some(v) => Ok(Some(v)),
        None => Ok(fill.next()),
    })?;
    debug_assert!(dom_c.len() == ran_c.len());
    let eps = CofiniteInjection::idempotent_on_complement(&ran_c)?;
    Ok((alpha, eps))
}

/// All `χ` with `a·χ = b` (`Side::Right`) or `χ·a = b` (`Side::Left`),
/// sorted by canonical text.
///
/// On `ran a` a right solution must agree with `a⁻¹·b`; the finitely many
/// points of `ω ∖ ran a` may be dropped or sent injectively into
/// `ω ∖ ran(a⁻¹·b)`. Left solutions are inverses of right solutions of
/// `a⁻¹·χ' = b⁻¹`.
pub fn solve_translation<T: Scalar>(
    side: Side,
    a: &CofiniteInjection<T>,
    b: &CofiniteInjection<T>,
) -> Result<Vec<CofiniteInjection<T>>, Error> {
    let mut solutions = match side {
        Side::Right => solve_right(a, b)?,
        Side::Left => solve_right(&a.invert()?, &b.invert()?)?
            .iter()
            .map(CofiniteInjection::invert)
            .collect::<Result<Vec<_>, _>>()?,
    };
    solutions.sort_by_cached_key(|e| e.to_string());
    solutions.dedup();
    Ok(solutions)
}

fn solve_right<T: Scalar>(
    a: &CofiniteInjection<T>,
    b: &CofiniteInjection<T>,
) -> Result<Vec<CofiniteInjection<T>>, Error> {
    // a·χ is undefined off dom a
    if !a.domain_complement().is_subset(&b.domain_complement()) {
        return Ok(Vec::new());
    }
    let forced = a.invert()?.compose(b)?;
    let extra: Vec<T> = a.range_complement().into_iter().collect();
    let targets: Vec<T> = forced.range_complement().into_iter().collect();
    let width = extra
        .last()
        .map_or(Ok(0), |&x| x.checked_plus(T::one())?.index().ok_or(Error::Overflow))?
        .max(forced.threshold());
    let base = (0..width).map(|r| forced.apply(T::from_usize(r)?)).collect::<Result<Vec<_>, _>>()?;

    let mut out = Vec::new();
    let mut table = base.clone();
    let mut used = vec![false; targets.len()];
    extend_solutions(forced.shift(), &extra, &targets, &mut used, &mut table, &mut out)?;
    Ok(out)
}

/// Depth-first over the free points: each is left undefined or given an
/// unused target.
fn extend_solutions<T: Scalar>(
    shift: T,
    extra: &[T],
    targets: &[T],
    used: &mut [bool],
    table: &mut Vec<Option<T>>,
    out: &mut Vec<CofiniteInjection<T>>,
) -> Result<(), Error> {
    let Some((&x, rest)) = extra.split_first() else {
        out.push(CofiniteInjection::new(shift, table.clone())?);
        return Ok(());
    };
    let row = x.index().expect("complement points are naturals");
    extend_solutions(shift, rest, targets, used, table, out)?;
    for j in 0..targets.len() {
        if used[j] {
            continue;
        }
        used[j] = true;
        table[row] = Some(targets[j]);
        extend_solutions(shift, rest, targets, used, table, out)?;
        table[row] = None;
        used[j] = false;
    }
    Ok(())
}

/// `Σ_j C(m, j)·C(n, j)·j!`, the number of partial injections from an
/// `m`-set into an `n`-set. Returns `None` on overflow.
pub fn partial_injection_count(m: usize, n: usize) -> Option<u128> {
    let mut total: u128 = 0;
    // term_j = C(m, j)·C(n, j)·j! = m!/(m−j)! · C(n, j)
    let mut falling: u128 = 1;
    let mut choose: u128 = 1;
    for j in 0..=m.min(n) {
        if j > 0 {
            falling = falling.checked_mul((m - j + 1) as u128)?;
            choose = choose.checked_mul((n - j + 1) as u128)? / j as u128;
        }
        total = total.checked_add(falling.checked_mul(choose)?)?;
    }
    Some(total)
}

/// Number of solutions predicted by the closed form, `None` if the equation
/// has no solution.
pub fn predicted_solution_count<T: Scalar>(
    side: Side,
    a: &CofiniteInjection<T>,
    b: &CofiniteInjection<T>,
) -> Result<Option<u128>, Error> {
    let (a, b) = match side {
        Side::Right => (a.clone(), b.clone()),
        Side::Left => (a.invert()?, b.invert()?),
    };
    if !a.domain_complement().is_subset(&b.domain_complement()) {
        return Ok(None);
    }
    let forced = a.invert()?.compose(&b)?;
    let free: FiniteSet<T> = a.range_complement();
    Ok(partial_injection_count(free.len(), forced.range_complement().len()))
}

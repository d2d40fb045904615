//! Brute-force semantics used to cross-check the symbolic engine.
//!
//! Nothing here calls into the Green, congruence or chain modules. The
//! oracle reads elements pointwise through [`CofiniteInjection::apply`],
//! rebuilds candidate maps row by row, and only then compares normal forms.

use std::collections::BTreeMap;
use std::fmt;

use crate::congruence::Side;
use crate::element::CofiniteInjection;
use crate::error::Error;
use crate::scalar::Scalar;
use crate::set::FiniteSet;

/// Default cap on complement sizes accepted by [`brute_force_solutions`].
pub const DEFAULT_BOUND: usize = 4;

/// Finite partial injection, key ↦ value.
pub type PartialInjection<T> = BTreeMap<T, T>;

/// Values of an element on `0..width`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct WindowTable<T: Scalar> {
    pub width: usize,
    pub rows: Vec<Option<T>>,
}

impl<T: Scalar> WindowTable<T> {
    pub fn get(&self, n: usize) -> Option<T> {
        self.rows.get(n).copied().flatten()
    }

    /// Pairs `(v, n)` for every row `n ↦ v` with `v < width`.
    pub fn transpose(&self) -> WindowTable<T> {
        let mut rows = vec![None; self.width];
        for (n, v) in self.rows.iter().enumerate() {
            if let Some(slot) = v.and_then(|v| v.index()).filter(|&s| s < self.width) {
                rows[slot] = Some(T::from_usize(n).expect("row fits"));
            }
        }
        WindowTable { width: self.width, rows }
    }
}

impl<T: Scalar> fmt::Display for WindowTable<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (n, v) in self.rows.iter().enumerate() {
            if n > 0 {
                f.write_str(", ")?;
            }
            match v {
                Some(v) => write!(f, "{n}->{v}")?,
                None => write!(f, "{n}->_")?,
            }
        }
        f.write_str("]")
    }
}

impl<T: Scalar> fmt::Debug for WindowTable<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

pub fn window_eval<T: Scalar>(a: &CofiniteInjection<T>, width: usize) -> Result<WindowTable<T>, Error> {
    let rows = (0..width).map(|n| a.apply(T::from_usize(n)?)).collect::<Result<Vec<_>, _>>()?;
    Ok(WindowTable { width, rows })
}

/// Smallest window accepted by [`oracle_compose_check`] for this pair.
pub fn sufficient_window<T: Scalar>(
    a: &CofiniteInjection<T>,
    b: &CofiniteInjection<T>,
    ab: &CofiniteInjection<T>,
) -> Result<usize, Error> {
    let spread = |k: T| k.abs().index().ok_or(Error::Overflow);
    let reach = a.threshold().max(b.threshold()).max(ab.threshold());
    reach
        .checked_add(spread(a.shift())?)
        .and_then(|w| w.checked_add(spread(b.shift()).ok()?))
        .and_then(|w| w.checked_add(1))
        .ok_or(Error::Overflow)
}

/// Compares the engine's product against the pointwise composite on
/// `0..width`.
pub fn oracle_compose_check<T: Scalar>(
    a: &CofiniteInjection<T>,
    b: &CofiniteInjection<T>,
    width: usize,
) -> Result<bool, Error> {
    let ab = a.compose(b)?;
    let required = sufficient_window(a, b, &ab)?;
    if width < required {
        return Err(Error::WindowTooSmall { width, required });
    }
    let wa = window_eval(a, width)?;
    let wb = window_eval(b, width)?;
    let wab = window_eval(&ab, width)?;
    for n in 0..width {
        let expected = match wa.get(n) {
            None => None,
            Some(m) => match m.index() {
                Some(i) if i < width => wb.get(i),
                _ => b.apply(m)?,
            },
        };
        if wab.get(n) != expected {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Every partial injection from `from` into `into`, the empty map included,
/// ordered by size and then lexicographically.
pub fn enumerate_partial_injections<T: Scalar>(
    from: &FiniteSet<T>,
    into: &FiniteSet<T>,
) -> Vec<PartialInjection<T>> {
    fn extend<T: Scalar>(
        sources: &[T],
        targets: &[T],
        used: &mut Vec<bool>,
        current: &mut PartialInjection<T>,
        out: &mut Vec<PartialInjection<T>>,
    ) {
        let Some((&a, rest)) = sources.split_first() else {
            out.push(current.clone());
            return;
        };
        extend(rest, targets, used, current, out);
        for (j, &b) in targets.iter().enumerate() {
            if used[j] {
                continue;
            }
            used[j] = true;
            current.insert(a, b);
            extend(rest, targets, used, current, out);
            current.remove(&a);
            used[j] = false;
        }
    }

    let sources: Vec<T> = from.iter().collect();
    let targets: Vec<T> = into.iter().collect();
    let mut out = Vec::new();
    extend(&sources, &targets, &mut vec![false; targets.len()], &mut BTreeMap::new(), &mut out);
    out.sort_by(|x, y| x.len().cmp(&y.len()).then_with(|| x.iter().cmp(y.iter())));
    out
}

fn check_bound<T: Scalar>(bound: usize, elements: [&CofiniteInjection<T>; 2]) -> Result<(), Error> {
    for e in elements {
        let (d, r) = e.complements();
        let size = d.len().max(r.len());
        if size > bound {
            return Err(Error::BoundExceeded { size, bound });
        }
    }
    Ok(())
}

/// Exhaustive solution set of `a·χ = b` (`Side::Right`) or `χ·a = b`
/// (`Side::Left`), sorted by canonical text.
pub fn brute_force_solutions<T: Scalar>(
    side: Side,
    a: &CofiniteInjection<T>,
    b: &CofiniteInjection<T>,
    bound: usize,
) -> Result<Vec<CofiniteInjection<T>>, Error> {
    check_bound(bound, [a, b])?;
    let candidates = match side {
        Side::Right => right_candidates(a, b)?,
        Side::Left => left_candidates(a, b)?,
    };
    let mut found: Vec<CofiniteInjection<T>> = Vec::new();
    for chi in candidates {
        let product = match side {
            Side::Right => a.compose(&chi)?,
            Side::Left => chi.compose(a)?,
        };
        if product == *b && !found.contains(&chi) {
            found.push(chi);
        }
    }
    found.sort_by_cached_key(|e| e.to_string());
    Ok(found)
}

/// Fills the free rows of `table` with every partial injection into the
/// unused targets.
fn fill_free_rows<T: Scalar>(
    shift: T,
    table: &[Option<T>],
    free: &FiniteSet<T>,
    targets: &FiniteSet<T>,
) -> Result<Vec<CofiniteInjection<T>>, Error> {
    enumerate_partial_injections(free, targets)
        .into_iter()
        .map(|ext| {
            let mut rows = table.to_vec();
            for (x, y) in ext {
                rows[x.index().expect("free rows are naturals")] = Some(y);
            }
            CofiniteInjection::new(shift, rows)
        })
        .collect()
}

// a·χ = b: on ran a, χ is forced to (a(x) ↦ b(x)); rows outside ran a are free.
fn right_candidates<T: Scalar>(
    a: &CofiniteInjection<T>,
    b: &CofiniteInjection<T>,
) -> Result<Vec<CofiniteInjection<T>>, Error> {
    let reach = a.threshold().max(b.threshold());
    let shift = b.shift().checked_minus(a.shift())?;
    let rows = T::from_usize(reach)?.checked_plus(a.shift())?.index().ok_or(Error::Overflow)?;
    let target_end = T::from_usize(reach)?.checked_plus(b.shift())?.index().ok_or(Error::Overflow)?;

    let mut table = vec![None; rows];
    let mut hit = vec![false; rows];
    let mut used = vec![false; target_end];
    for x in 0..reach {
        let x = T::from_usize(x)?;
        let Some(y) = a.apply(x)? else { continue };
        let y = y.index().expect("images are naturals");
        hit[y] = true;
        table[y] = b.apply(x)?;
        if let Some(v) = table[y] {
            used[v.index().expect("images are naturals")] = true;
        }
    }
    let free = (0..rows).filter(|&y| !hit[y]).map(T::from_usize).collect::<Result<_, _>>()?;
    let targets = (0..target_end).filter(|&v| !used[v]).map(T::from_usize).collect::<Result<_, _>>()?;
    fill_free_rows(shift, &table, &free, &targets)
}

// χ·a = b: where b is defined, χ(x) is the a-preimage of b(x); elsewhere χ is
// undefined or lands outside dom a.
fn left_candidates<T: Scalar>(
    a: &CofiniteInjection<T>,
    b: &CofiniteInjection<T>,
) -> Result<Vec<CofiniteInjection<T>>, Error> {
    let shift = b.shift().checked_minus(a.shift())?;
    let reach = a.tail_start().checked_minus(b.shift())?.max(T::from_usize(b.threshold())?).max(T::zero());
    let rows = reach.index().ok_or(Error::Overflow)?;

    let mut preimage: BTreeMap<T, T> = BTreeMap::new();
    for z in 0..a.threshold() {
        let z = T::from_usize(z)?;
        if let Some(v) = a.apply(z)? {
            preimage.insert(v, z);
        }
    }
    let mut table = vec![None; rows];
    let mut free = FiniteSet::new();
    for (x, slot) in table.iter_mut().enumerate() {
        let xt = T::from_usize(x)?;
        match b.apply(xt)? {
            None => {
                free.insert(xt);
            }
            Some(v) if v >= a.tail_start() => *slot = Some(v.checked_minus(a.shift())?),
            Some(v) => match preimage.get(&v) {
                Some(&z) => *slot = Some(z),
                None => return Ok(Vec::new()),
            },
        }
    }
    fill_free_rows(shift, &table, &free, &a.domain_complement())
}

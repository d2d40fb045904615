//! Canonical normal form for eventually-shift partial injections of ω.
//!
//! An element is stored as a finite exception table on the rows
//! `0..N` together with a tail rule `n ↦ n + k` for every `n ≥ N`. The
//! threshold `N` is always minimal, so two elements denote the same partial
//! map exactly when their fields coincide.
//!
//! Products are written left to right: `a.compose(&b)` applies `a` first.

use std::collections::HashMap;
use std::fmt;

use crate::error::Error;
use crate::scalar::Scalar;
use crate::set::FiniteSet;

/// Injective partial selfmap of ω with finite domain and range complements,
/// agreeing with a translation `n ↦ n + shift` from some threshold on.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CofiniteInjection<T: Scalar> {
    shift: T,
    table: Vec<Option<T>>,
}

/// Complement sizes and their difference.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Stats<T: Scalar> {
    pub dbar: T,
    pub rbar: T,
    pub index: T,
}

/// Which distinguished subsets an element belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Classification {
    pub unit: bool,
    pub finitary_unit: bool,
    pub idempotent: bool,
}

impl Classification {
    /// Neither a unit nor an idempotent.
    pub fn is_general(&self) -> bool {
        !self.unit && !self.finitary_unit && !self.idempotent
    }
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut flags = Vec::new();
        if self.unit {
            flags.push("unit");
        }
        if self.finitary_unit {
            flags.push("finitary_unit");
        }
        if self.idempotent {
            flags.push("idempotent");
        }
        if flags.is_empty() {
            flags.push("general");
        }
        write!(f, "{{{}}}", flags.join(", "))
    }
}

impl<T: Scalar> CofiniteInjection<T> {
    /// Validates a raw table (row `r` of `table` is the image of `r`, `None`
    /// meaning undefined; the threshold is `table.len()`) and lowers the
    /// threshold until it is minimal.
    pub fn new(shift: T, mut table: Vec<Option<T>>) -> Result<Self, Error> {
        let threshold = T::from_usize(table.len())?;
        let tail_start = threshold.checked_plus(shift)?;
        if tail_start < T::zero() {
            return Err(Error::NegativeTail(tail_start.wide()));
        }
        let mut seen: HashMap<T, usize> = HashMap::with_capacity(table.len());
        for (row, value) in table.iter().enumerate() {
            let Some(v) = *value else { continue };
            if v < T::zero() {
                return Err(Error::NegativeValue { row, value: v.wide() });
            }
            if v >= tail_start {
                return Err(Error::TailCollision { row, value: v.wide(), tail_start: tail_start.wide() });
            }
            if let Some(first) = seen.insert(v, row) {
                return Err(Error::InjectivityViolation { first, second: row, value: v.wide() });
            }
        }
        // Rows that already follow the tail rule are absorbed into it.
        while let Some(Some(v)) = table.last() {
            let row = T::from_usize(table.len() - 1)?;
            if *v == row.checked_plus(shift)? {
                table.pop();
            } else {
                break;
            }
        }
        Ok(CofiniteInjection { shift, table })
    }

    /// Builds the map agreeing with `f` on `0..threshold` and shifting by
    /// `shift` afterwards.
    pub fn from_fn<F>(shift: T, threshold: usize, mut f: F) -> Result<Self, Error>
    where
        F: FnMut(T) -> Result<Option<T>, Error>,
    {
        let table =
            (0..threshold).map(|r| T::from_usize(r).and_then(&mut f)).collect::<Result<Vec<_>, _>>()?;
        Self::new(shift, table)
    }

    pub fn identity() -> Self {
        CofiniteInjection { shift: T::zero(), table: Vec::new() }
    }

    /// `n ↦ n + k` on its natural domain: total when `k ≥ 0`, undefined on
    /// `0..|k|` otherwise.
    pub fn translation(k: T) -> Result<Self, Error> {
        if k >= T::zero() {
            return Self::new(k, Vec::new());
        }
        let holes = k.checked_negate()?.index().ok_or(Error::Overflow)?;
        Self::new(k, vec![None; holes])
    }

    /// Identity map of `ω ∖ holes`.
    pub fn idempotent_on_complement(holes: &FiniteSet<T>) -> Result<Self, Error> {
        let threshold = match holes.max() {
            Some(m) => m.checked_plus(T::one())?.index().ok_or(Error::Overflow)?,
            None => 0,
        };
        Self::from_fn(T::zero(), threshold, |r| Ok((!holes.contains(r)).then_some(r)))
    }

    /// Finitary permutation from disjoint cycles, each `[a, b, c]` meaning
    /// `a ↦ b ↦ c ↦ a`.
    pub fn from_cycles(cycles: &[Vec<T>]) -> Result<Self, Error> {
        let mut images: HashMap<T, T> = HashMap::new();
        for cycle in cycles {
            for (i, &a) in cycle.iter().enumerate() {
                if a < T::zero() {
                    return Err(Error::Validation(format!("negative point {a} in cycle")));
                }
                let b = cycle[(i + 1) % cycle.len()];
                if images.insert(a, b).is_some() {
                    return Err(Error::Validation(format!("cycles are not disjoint at {a}")));
                }
            }
        }
        let threshold = match images.keys().max() {
            Some(m) => m.checked_plus(T::one())?.index().ok_or(Error::Overflow)?,
            None => 0,
        };
        Self::from_fn(T::zero(), threshold, |r| Ok(Some(images.get(&r).copied().unwrap_or(r))))
    }

    pub fn shift(&self) -> T {
        self.shift
    }

    /// Minimal threshold `N`.
    pub fn threshold(&self) -> usize {
        self.table.len()
    }

    /// Exception table, row `r` at position `r`.
    pub fn table(&self) -> &[Option<T>] {
        &self.table
    }

    fn threshold_value(&self) -> T {
        T::from_usize(self.table.len()).expect("threshold was validated on construction")
    }

    /// `N + k`, the least point of the tail image.
    pub fn tail_start(&self) -> T {
        self.threshold_value() + self.shift
    }

    /// Image of `n`, `None` when `n` is outside the domain (or negative).
    pub fn apply(&self, n: T) -> Result<Option<T>, Error> {
        match n.index() {
            None => Ok(None),
            Some(i) if i < self.table.len() => Ok(self.table[i]),
            Some(_) => n.checked_plus(self.shift).map(Some),
        }
    }

    /// Left-to-right product: `x(αβ) = (xα)β`.
    pub fn compose(&self, other: &Self) -> Result<Self, Error> {
        let shift = self.shift.checked_plus(other.shift)?;
        // Past this point `self` is in its tail and lands in `other`'s tail.
        let reach = other.threshold_value().checked_minus(self.shift)?;
        let threshold = reach.max(self.threshold_value()).index().ok_or(Error::Overflow)?;
        Self::from_fn(shift, threshold, |n| match self.apply(n)? {
            Some(m) => other.apply(m),
            None => Ok(None),
        })
    }

    pub fn invert(&self) -> Result<Self, Error> {
        let shift = self.shift.checked_negate()?;
        let width = self.tail_start().index().ok_or(Error::Overflow)?;
        let mut table = vec![None; width];
        for (row, value) in self.table.iter().enumerate() {
            if let Some(v) = value {
                let slot = v.index().expect("table values are naturals");
                table[slot] = Some(T::from_usize(row)?);
            }
        }
        Self::new(shift, table)
    }

    /// Integer power; negative exponents are powers of the inverse.
    pub fn pow(&self, exp: i64) -> Result<Self, Error> {
        let mut base = if exp < 0 { self.invert()? } else { self.clone() };
        let mut e = exp.unsigned_abs();
        let mut acc = Self::identity();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.compose(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.compose(&base)?;
            }
        }
        Ok(acc)
    }

    /// `ω ∖ dom α`: the undefined rows.
    pub fn domain_complement(&self) -> FiniteSet<T> {
        self.table
            .iter()
            .enumerate()
            .filter(|(_, v)| v.is_none())
            .map(|(r, _)| T::from_usize(r).expect("row fits"))
            .collect()
    }

    /// `ω ∖ ran α`: naturals below `N + k` that are not table values.
    pub fn range_complement(&self) -> FiniteSet<T> {
        let width = self.tail_start().index().expect("tail start is a natural");
        let mut hit = vec![false; width];
        for v in self.table.iter().flatten() {
            hit[v.index().expect("table values are naturals")] = true;
        }
        hit.iter()
            .enumerate()
            .filter(|(_, h)| !**h)
            .map(|(r, _)| T::from_usize(r).expect("point fits"))
            .collect()
    }

    /// `(ω ∖ dom α, ω ∖ ran α)`.
    pub fn complements(&self) -> (FiniteSet<T>, FiniteSet<T>) {
        (self.domain_complement(), self.range_complement())
    }

    pub fn stats(&self) -> Stats<T> {
        let defined = self.table.iter().filter(|v| v.is_some()).count();
        let defined = T::from_usize(defined).expect("count fits");
        let dbar = self.threshold_value() - defined;
        let rbar = self.tail_start() - defined;
        Stats { dbar, rbar, index: dbar - rbar }
    }

    pub fn is_idempotent(&self) -> bool {
        self.shift.is_zero()
            && self.table.iter().enumerate().all(|(r, v)| match v {
                Some(v) => v.index() == Some(r),
                None => true,
            })
    }

    /// Natural partial order on idempotents: `ε ≤ ι` iff `dom ε ⊆ dom ι`.
    pub fn natural_leq(&self, other: &Self) -> Result<bool, Error> {
        if !self.is_idempotent() || !other.is_idempotent() {
            return Err(Error::NotIdempotent);
        }
        Ok(other.domain_complement().is_subset(&self.domain_complement()))
    }

    pub fn is_unit(&self) -> bool {
        self.shift.is_zero() && self.table.iter().all(Option::is_some)
    }

    pub fn classify(&self) -> Classification {
        let unit = self.is_unit();
        Classification {
            unit,
            // A unit of the fragment moves only rows below its threshold.
            finitary_unit: unit,
            idempotent: self.is_idempotent(),
        }
    }
}

impl<T: Scalar> Default for CofiniteInjection<T> {
    fn default() -> Self {
        Self::identity()
    }
}

/// Canonical text form, e.g. `cfinj{k=0; N=1; t=[0->_]}`.
impl<T: Scalar> fmt::Display for CofiniteInjection<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "cfinj{{k={}; N={}; t=[", self.shift, self.table.len())?;
        for (row, value) in self.table.iter().enumerate() {
            if row > 0 {
                f.write_str(", ")?;
            }
            match value {
                Some(v) => write!(f, "{row}->{v}")?,
                None => write!(f, "{row}->_")?,
            }
        }
        f.write_str("]}")
    }
}

impl<T: Scalar> fmt::Debug for CofiniteInjection<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type E = CofiniteInjection<i64>;

    fn raw(shift: i64, table: &[Option<i64>]) -> E {
        E::new(shift, table.to_vec()).unwrap()
    }
    fn id() -> E {
        E::identity()
    }
    fn shift1() -> E {
        raw(1, &[])
    }
    fn back1() -> E {
        raw(-1, &[None])
    }
    fn eps0() -> E {
        raw(0, &[None])
    }
    fn trans01() -> E {
        raw(0, &[Some(1), Some(0)])
    }
    fn set(xs: &[i64]) -> FiniteSet<i64> {
        xs.iter().copied().collect()
    }

    #[test]
    fn normalize_absorbs_rows_into_tail() {
        assert_eq!(raw(0, &[Some(0), Some(1), Some(2)]), id());
        assert_eq!(raw(1, &[Some(1), Some(2)]), shift1());
        let kept = raw(1, &[None, Some(0)]);
        assert_eq!(kept.threshold(), 2);
        assert_eq!(kept.shift(), 1);
        assert_eq!(kept.table(), &[None, Some(0)]);
        // normalizing a normal form changes nothing
        assert_eq!(E::new(kept.shift(), kept.table().to_vec()).unwrap(), kept);
    }

    #[test]
    fn normalize_rejects_invalid_tables() {
        assert!(matches!(
            E::new(0, vec![Some(0), Some(0)]),
            Err(Error::InjectivityViolation { first: 0, second: 1, value: 0 })
        ));
        assert!(matches!(E::new(0, vec![Some(2), None]), Err(Error::TailCollision { row: 0, .. })));
        assert!(matches!(E::new(-2, vec![None]), Err(Error::NegativeTail(-1))));
        assert!(matches!(E::new(1, vec![Some(-1)]), Err(Error::NegativeValue { .. })));
    }

    #[test]
    fn apply_reads_table_then_tail() {
        assert_eq!(shift1().apply(5), Ok(Some(6)));
        assert_eq!(eps0().apply(0), Ok(None));
        assert_eq!(raw(1, &[None, Some(0)]).apply(1), Ok(Some(0)));
        assert_eq!(back1().apply(-3), Ok(None));
    }

    #[test]
    fn compose_examples() {
        assert_eq!(shift1().compose(&back1()).unwrap(), id());
        assert_eq!(back1().compose(&shift1()).unwrap(), eps0());
        assert_eq!(eps0().compose(&trans01()).unwrap(), raw(0, &[None, Some(0)]));
    }

    #[test]
    fn invert_examples() {
        assert_eq!(shift1().invert().unwrap(), back1());
        assert_eq!(eps0().invert().unwrap(), eps0());
        assert_eq!(raw(1, &[None, Some(0)]).invert().unwrap(), raw(-1, &[Some(1), None, None]));
    }

    #[test]
    fn complements_and_stats() {
        assert_eq!(shift1().complements(), (set(&[]), set(&[0])));
        assert_eq!(eps0().complements(), (set(&[0]), set(&[0])));
        let a = raw(1, &[None, Some(0)]);
        assert_eq!(a.complements(), (set(&[0]), set(&[1, 2])));
        assert_eq!(shift1().stats(), Stats { dbar: 0, rbar: 1, index: -1 });
        assert_eq!(eps0().stats(), Stats { dbar: 1, rbar: 1, index: 0 });
        assert_eq!(a.stats(), Stats { dbar: 1, rbar: 2, index: -1 });
    }

    #[test]
    fn idempotent_predicates() {
        assert!(eps0().is_idempotent());
        assert!(!trans01().is_idempotent());
        assert!(!shift1().is_idempotent());
        assert_eq!(E::idempotent_on_complement(&set(&[])).unwrap(), id());
        assert_eq!(E::idempotent_on_complement(&set(&[0])).unwrap(), eps0());
        assert_eq!(
            E::idempotent_on_complement(&set(&[1, 3])).unwrap(),
            raw(0, &[Some(0), None, Some(2), None])
        );
    }

    #[test]
    fn natural_order_on_idempotents() {
        assert_eq!(eps0().natural_leq(&id()), Ok(true));
        assert_eq!(id().natural_leq(&eps0()), Ok(false));
        let e01 = E::idempotent_on_complement(&set(&[0, 1])).unwrap();
        assert_eq!(e01.natural_leq(&eps0()), Ok(true));
        assert_eq!(trans01().natural_leq(&id()), Err(Error::NotIdempotent));
    }

    #[test]
    fn classification() {
        let c = trans01().classify();
        assert!(c.unit && c.finitary_unit && !c.idempotent);
        assert!(shift1().classify().is_general());
        let c = eps0().classify();
        assert!(c.idempotent && !c.unit);
        assert_eq!(eps0().classify().to_string(), "{idempotent}");
        assert_eq!(shift1().classify().to_string(), "{general}");
    }

    #[test]
    fn constructors() {
        assert_eq!(E::translation(1).unwrap(), shift1());
        assert_eq!(E::translation(-1).unwrap(), back1());
        assert_eq!(E::translation(0).unwrap(), id());
        assert_eq!(E::from_cycles(&[vec![0, 1]]).unwrap(), trans01());
        assert!(E::from_cycles(&[vec![0, 1], vec![1, 2]]).is_err());
    }

    #[test]
    fn powers() {
        assert_eq!(shift1().pow(3).unwrap(), raw(3, &[]));
        assert_eq!(shift1().pow(-2).unwrap(), E::translation(-2).unwrap());
        assert_eq!(trans01().pow(0).unwrap(), id());
        assert_eq!(trans01().pow(2).unwrap(), id());
    }

    #[test]
    fn canonical_text() {
        assert_eq!(eps0().to_string(), "cfinj{k=0; N=1; t=[0->_]}");
        assert_eq!(id().to_string(), "cfinj{k=0; N=0; t=[]}");
        assert_eq!(raw(1, &[None, Some(0)]).to_string(), "cfinj{k=1; N=2; t=[0->_, 1->0]}");
    }

    #[test]
    fn overflow_is_an_error() {
        let big = CofiniteInjection::<i8>::translation(100).unwrap();
        assert_eq!(big.compose(&big), Err(Error::Overflow));
        assert_eq!(big.apply(100), Err(Error::Overflow));
        assert_eq!(CofiniteInjection::<i8>::translation(i8::MIN).err(), Some(Error::Overflow));
    }

    #[test]
    fn generic_over_width() {
        let a = CofiniteInjection::<i32>::new(1, vec![None, Some(0)]).unwrap();
        let b = CofiniteInjection::<i128>::new(1, vec![None, Some(0)]).unwrap();
        assert_eq!(a.to_string(), b.to_string());
        assert_eq!(a.invert().unwrap().stats().index, 1);
    }
}

//! Maximal ω-chains of idempotents and the bicyclic subsemigroups they
//! generate.
//!
//! A [`ChainSpec`] names the top idempotent `ε₁` and the first few removed
//! points explicitly; the remaining points of `dom ε₁` are removed in
//! ascending order. Every such chain is maximal, and its bicyclic generators
//! are eventually `n ↦ n ± 1`, hence representable.

use std::fmt;

use crate::element::CofiniteInjection;
use crate::error::Error;
use crate::scalar::Scalar;
use crate::set::FiniteSet;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ChainSpec<T: Scalar> {
    start: CofiniteInjection<T>,
    prefix: Vec<T>,
}

/// Generators of a bicyclic subsemigroup: `p·q = unit`, `q = p⁻¹`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BicyclicPair<T: Scalar> {
    pub p: CofiniteInjection<T>,
    pub q: CofiniteInjection<T>,
    pub unit: CofiniteInjection<T>,
}

impl<T: Scalar> ChainSpec<T> {
    pub fn new(start: CofiniteInjection<T>, prefix: Vec<T>) -> Result<Self, Error> {
        if !start.is_idempotent() {
            return Err(Error::NotIdempotent);
        }
        let mut seen = FiniteSet::new();
        for &x in &prefix {
            if x < T::zero() || start.apply(x)?.is_none() {
                return Err(Error::PointOutsideDomain(x.wide()));
            }
            if !seen.insert(x) {
                return Err(Error::RepeatedPoint(x.wide()));
            }
        }
        Ok(ChainSpec { start, prefix })
    }

    /// The chain through `ε₁ = start` removing points in ascending order.
    pub fn canonical(start: CofiniteInjection<T>) -> Result<Self, Error> {
        Self::new(start, Vec::new())
    }

    pub fn start(&self) -> &CofiniteInjection<T> {
        &self.start
    }

    pub fn prefix(&self) -> &[T] {
        &self.prefix
    }

    /// The removed points `x₁, x₂, …` in order. Infinite.
    pub fn holes(&self) -> impl Iterator<Item = T> + '_ {
        let skip_c = self.start.domain_complement();
        let skip_p: FiniteSet<T> = self.prefix.iter().copied().collect();
        let rest = std::iter::successors(Some(T::zero()), |x| x.checked_add(&T::one()))
            .filter(move |x| !skip_c.contains(*x) && !skip_p.contains(*x));
        self.prefix.iter().copied().chain(rest)
    }

    /// `ε_i`, the identity on `dom ε₁ ∖ {x₁, …, x_{i−1}}`; `i ≥ 1`.
    pub fn element(&self, i: usize) -> Result<CofiniteInjection<T>, Error> {
        if i == 0 {
            return Err(Error::ZeroPosition);
        }
        let mut holes = self.start.domain_complement();
        for x in self.holes().take(i - 1) {
            holes.insert(x);
        }
        CofiniteInjection::idempotent_on_complement(&holes)
    }

    /// Least point from which every remaining point of `dom ε₁` is removed
    /// in consecutive ascending order.
    fn settled_from(&self) -> Result<T, Error> {
        let top = self.prefix.iter().copied().chain(self.start.domain_complement()).max();
        top.map_or(Ok(T::zero()), |m| m.checked_plus(T::one()))
    }

    /// `p: x_n ↦ x_{n+1}` and `q = p⁻¹: x_{n+1} ↦ x_n`, both undefined off
    /// `dom ε₁`.
    pub fn bicyclic_generators(&self) -> Result<BicyclicPair<T>, Error> {
        let settled = self.settled_from()?;
        let head = settled.index().ok_or(Error::Overflow)?;
        // Holes below `settled` come first, then settled, settled+1, ...
        let mut successor = vec![None; head];
        let mut holes = self.holes();
        let mut current = holes.next().expect("hole sequence is infinite");
        while current < settled {
            let next = holes.next().expect("hole sequence is infinite");
            successor[current.index().expect("holes are naturals")] = Some(next);
            current = next;
        }
        let mut expect = settled;
        for x in std::iter::once(current).chain(holes.take(2)) {
            if x != expect {
                return Err(Error::NonRepresentable);
            }
            expect = expect.checked_plus(T::one())?;
        }
        let p = CofiniteInjection::new(T::one(), successor)?;
        let q = p.invert()?;
        let unit = self.start.clone();
        if p.compose(&q)? != unit {
            return Err(Error::InvariantViolation("p·q differs from the top idempotent"));
        }
        Ok(BicyclicPair { p, q, unit })
    }
}

/// `chain{start=<element>; prefix=[a,b,...]}`
impl<T: Scalar> fmt::Display for ChainSpec<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "chain{{start={}; prefix=[", self.start)?;
        for (i, x) in self.prefix.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str("]}")
    }
}

impl<T: Scalar> fmt::Debug for ChainSpec<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<T: Scalar> BicyclicPair<T> {
    /// `q^i·p^j`.
    pub fn word(&self, i: u32, j: u32) -> Result<CofiniteInjection<T>, Error> {
        self.q.pow(i.into())?.compose(&self.p.pow(j.into())?)
    }
}

/// `ε` is covered by `ι`: `ε < ι` with exactly one point between their
/// domains.
pub fn covers<T: Scalar>(eps: &CofiniteInjection<T>, iota: &CofiniteInjection<T>) -> Result<bool, Error> {
    if !eps.natural_leq(iota)? {
        return Ok(false);
    }
    Ok(eps.domain_complement().len() == iota.domain_complement().len() + 1)
}

/// Places a finite strictly descending chain `ε₁ > … > ε_n` inside a maximal
/// chain and returns it with its bicyclic generators. The points dropped
/// between consecutive members become the prefix, each gap in ascending
/// order.
pub fn embed_finite_chain<T: Scalar>(
    members: &[CofiniteInjection<T>],
) -> Result<(ChainSpec<T>, BicyclicPair<T>), Error> {
    let (first, _) = members.split_first().ok_or(Error::EmptyChain)?;
    let mut prefix = Vec::new();
    for (i, pair) in members.windows(2).enumerate() {
        let (upper, lower) = (&pair[0], &pair[1]);
        if !lower.natural_leq(upper)? || lower == upper {
            return Err(Error::NotAChain(i + 1));
        }
        prefix.extend(lower.domain_complement().difference(&upper.domain_complement()));
    }
    if !first.is_idempotent() {
        return Err(Error::NotIdempotent);
    }
    let spec = ChainSpec::new(first.clone(), prefix)?;
    let pair = spec.bicyclic_generators()?;
    Ok((spec, pair))
}

/// First `count` distinct members of `ν·L` for the chain `L`, strictly
/// descending.
pub fn translate_chain<T: Scalar>(
    nu: &CofiniteInjection<T>,
    chain: &ChainSpec<T>,
    count: usize,
) -> Result<Vec<CofiniteInjection<T>>, Error> {
    if !nu.is_idempotent() {
        return Err(Error::NotIdempotent);
    }
    let mut out: Vec<CofiniteInjection<T>> = Vec::with_capacity(count);
    // ν·ε_{i+1} repeats ν·ε_i exactly when x_i ∉ dom ν
    let mut current = nu.compose(chain.start())?;
    let mut holes = chain.holes();
    while out.len() < count {
        if out.last() != Some(&current) {
            out.push(current.clone());
        }
        let x = holes.next().expect("hole sequence is infinite");
        let mut gone = current.domain_complement();
        gone.insert(x);
        current = CofiniteInjection::idempotent_on_complement(&gone)?;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    type E = CofiniteInjection<i64>;

    fn raw(shift: i64, table: &[Option<i64>]) -> E {
        E::new(shift, table.to_vec()).unwrap()
    }
    fn idem(xs: &[i64]) -> E {
        E::idempotent_on_complement(&xs.iter().copied().collect()).unwrap()
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

    #[test]
    fn chain_element_examples() {
        let c = ChainSpec::canonical(E::identity()).unwrap();
        assert_eq!(c.element(1).unwrap(), E::identity());
        assert_eq!(c.element(2).unwrap(), eps0());
        assert_eq!(c.element(4).unwrap(), idem(&[0, 1, 2]));
        assert_eq!(c.element(0), Err(Error::ZeroPosition));
    }

    #[test]
    fn hole_sequence_follows_prefix_then_ascends() {
        let c = ChainSpec::new(eps0(), vec![3]).unwrap();
        assert_eq!(c.holes().take(6).collect::<Vec<_>>(), vec![3, 1, 2, 4, 5, 6]);
    }

    #[test]
    fn chain_spec_validation() {
        assert_eq!(ChainSpec::new(shift1(), vec![]), Err(Error::NotIdempotent));
        assert_eq!(ChainSpec::new(eps0(), vec![0]), Err(Error::PointOutsideDomain(0)));
        assert_eq!(ChainSpec::new(eps0(), vec![2, 2]), Err(Error::RepeatedPoint(2)));
    }

    #[test]
    fn covers_examples() {
        assert_eq!(covers(&eps0(), &E::identity()), Ok(true));
        assert_eq!(covers(&idem(&[0, 1]), &E::identity()), Ok(false));
        assert_eq!(covers(&idem(&[0, 1]), &eps0()), Ok(true));
        assert_eq!(covers(&E::identity(), &eps0()), Ok(false));
        assert_eq!(covers(&shift1(), &eps0()), Err(Error::NotIdempotent));
    }

    #[test]
    fn canonical_generators_are_the_shifts() {
        let pair = ChainSpec::canonical(E::identity()).unwrap().bicyclic_generators().unwrap();
        assert_eq!(pair, BicyclicPair { p: shift1(), q: back1(), unit: E::identity() });
        assert_eq!(pair.p.compose(&pair.q).unwrap(), E::identity());
        assert_eq!(pair.q.compose(&pair.p).unwrap(), eps0());
    }

    #[test]
    fn generators_follow_the_prefix() {
        let c = ChainSpec::new(eps0(), vec![3]).unwrap();
        let pair = c.bicyclic_generators().unwrap();
        let p = &pair.p;
        assert_eq!(p.apply(0), Ok(None));
        assert_eq!(p.apply(3), Ok(Some(1)));
        assert_eq!(p.apply(1), Ok(Some(2)));
        assert_eq!(p.apply(2), Ok(Some(4)));
        for n in 4..20 {
            assert_eq!(p.apply(n), Ok(Some(n + 1)));
        }
        assert_eq!(p.compose(&pair.q).unwrap(), eps0());
        for m in 1..6u32 {
            assert_eq!(pair.word(m, m).unwrap(), c.element(m as usize + 1).unwrap());
        }
    }

    #[test]
    fn embed_examples() {
        let (spec, pair) = embed_finite_chain(&[E::identity(), eps0()]).unwrap();
        assert_eq!(spec, ChainSpec::new(E::identity(), vec![0]).unwrap());
        assert_eq!((pair.p, pair.q, pair.unit), (shift1(), back1(), E::identity()));

        let (spec, _) = embed_finite_chain(&[E::identity(), idem(&[2])]).unwrap();
        assert_eq!(spec.prefix(), &[2]);
        assert_eq!(spec.element(2).unwrap(), idem(&[2]));

        assert_eq!(embed_finite_chain(&[eps0(), E::identity()]), Err(Error::NotAChain(1)));
        assert_eq!(embed_finite_chain::<i64>(&[]), Err(Error::EmptyChain));
    }

    #[test]
    fn translate_examples() {
        let c = ChainSpec::canonical(E::identity()).unwrap();
        assert_eq!(
            translate_chain(&E::identity(), &c, 3).unwrap(),
            vec![E::identity(), eps0(), idem(&[0, 1])]
        );
        assert_eq!(translate_chain(&eps0(), &c, 2).unwrap(), vec![eps0(), idem(&[0, 1])]);
        let t = raw(0, &[Some(1), Some(0)]);
        assert_eq!(translate_chain(&t, &c, 2), Err(Error::NotIdempotent));
    }

    #[test]
    fn text_form() {
        let c = ChainSpec::new(eps0(), vec![3, 1]).unwrap();
        assert_eq!(c.to_string(), "chain{start=cfinj{k=0; N=1; t=[0->_]}; prefix=[3,1]}");
    }
}

//! Random generators shared by the integration tests.
//!
//! Shifts are drawn from [-5, 5] and thresholds from [0, 12], matching the
//! ranges used throughout the suites.

#![allow(dead_code)]

use cofinite::green::h_class_element;
use cofinite::{Cfinj, Chain, PointSet};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub use rand::SeedableRng;

pub type TestRng = ChaCha8Rng;

pub fn rng(seed: u64) -> TestRng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub const MAX_SHIFT: i64 = 5;
pub const MAX_THRESHOLD: i64 = 12;

/// Random valid table with shift in [-5, 5] and threshold at most 12,
/// normalized.
pub fn element(rng: &mut TestRng) -> Cfinj {
    let k = rng.gen_range(-MAX_SHIFT..=MAX_SHIFT);
    let n = rng.gen_range(0.max(-k)..=MAX_THRESHOLD);
    element_with(rng, k, n)
}

/// Random table with exactly the given shift and raw threshold.
pub fn element_with(rng: &mut TestRng, k: i64, n: i64) -> Cfinj {
    let tail = n + k;
    assert!(tail >= 0);
    let defined = rng.gen_range(0..=n.min(tail)) as usize;
    let mut rows: Vec<i64> = (0..n).collect();
    rows.shuffle(rng);
    let mut values: Vec<i64> = (0..tail).collect();
    values.shuffle(rng);
    let mut table = vec![None; n as usize];
    for (r, v) in rows.iter().zip(values.iter()).take(defined) {
        table[*r as usize] = Some(*v);
    }
    Cfinj::new(k, table).unwrap()
}

pub fn subset(rng: &mut TestRng, below: i64, p: f64) -> PointSet {
    (0..below).filter(|_| rng.gen_bool(p)).collect()
}

/// Random set of exactly `size` points below `below`.
pub fn subset_of_size(rng: &mut TestRng, below: i64, size: usize) -> PointSet {
    let mut pts: Vec<i64> = (0..below).collect();
    pts.shuffle(rng);
    pts.into_iter().take(size).collect()
}

pub fn idempotent(rng: &mut TestRng) -> Cfinj {
    let p = rng.gen_range(0.0..0.5);
    Cfinj::idempotent_on_complement(&subset(rng, MAX_THRESHOLD, p)).unwrap()
}

/// Finitary permutation of a random initial segment of at most 9 points.
pub fn finitary_unit(rng: &mut TestRng) -> Cfinj {
    let m = rng.gen_range(0..=9usize);
    let mut images: Vec<i64> = (0..m as i64).collect();
    images.shuffle(rng);
    Cfinj::new(0, images.into_iter().map(Some).collect()).unwrap()
}

/// Finitary unit other than the identity.
pub fn nontrivial_unit(rng: &mut TestRng) -> Cfinj {
    loop {
        let u = finitary_unit(rng);
        if u != Cfinj::identity() {
            return u;
        }
    }
}

/// Random element whose domain complement is exactly `dom_c`.
pub fn with_domain_complement(rng: &mut TestRng, dom_c: &PointSet) -> Cfinj {
    let size = rng.gen_range(0..=4);
    let ran_c = subset_of_size(rng, 10, size);
    let base = h_class_element(dom_c, &ran_c).unwrap();
    base.compose(&finitary_unit(rng)).unwrap()
}

/// Element with equal complement sizes, both at most `max`.
pub fn index_zero(rng: &mut TestRng, max: usize) -> Cfinj {
    if rng.gen_bool(0.5) {
        loop {
            let n = rng.gen_range(0..=MAX_THRESHOLD);
            let e = element_with(rng, 0, n);
            if e.stats().dbar as usize <= max {
                return e;
            }
        }
    }
    let s = rng.gen_range(0..=max);
    let d = subset_of_size(rng, MAX_THRESHOLD, s);
    let r = subset_of_size(rng, MAX_THRESHOLD, s);
    finitary_unit(rng).compose(&h_class_element(&d, &r).unwrap()).unwrap()
}

/// Element with nonzero index.
pub fn index_nonzero(rng: &mut TestRng) -> Cfinj {
    loop {
        let e = element(rng);
        if e.stats().index != 0 {
            return e;
        }
    }
}

pub fn chain_spec(rng: &mut TestRng, max_prefix: usize) -> Chain {
    let start = Cfinj::idempotent_on_complement(&subset(rng, 8, 0.3)).unwrap();
    let mut candidates: Vec<i64> =
        (0..MAX_THRESHOLD).filter(|&x| start.apply(x).unwrap().is_some()).collect();
    candidates.shuffle(rng);
    let len = rng.gen_range(0..=max_prefix);
    Chain::new(start, candidates.into_iter().take(len).collect()).unwrap()
}

/// Strictly descending list of 1 to 5 idempotents.
pub fn finite_chain(rng: &mut TestRng) -> Vec<Cfinj> {
    let mut holes = subset(rng, 8, 0.2);
    let mut out = vec![Cfinj::idempotent_on_complement(&holes).unwrap()];
    let len = rng.gen_range(1..=5);
    while out.len() < len {
        let gap = rng.gen_range(1..=3);
        let mut added = 0;
        while added < gap {
            if holes.insert(rng.gen_range(0..16)) {
                added += 1;
            }
        }
        out.push(Cfinj::idempotent_on_complement(&holes).unwrap());
    }
    out
}

pub fn binomial(n: u128, k: u128) -> u128 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Σ_j C(a, j)·C(b, j)·j!, computed directly from the sum.
pub fn extension_count(a: usize, b: usize) -> u128 {
    let (a, b) = (a as u128, b as u128);
    (0..=a.min(b)).map(|j| binomial(a, j) * binomial(b, j) * (1..=j).product::<u128>()).sum()
}

/// Every normal form with threshold at most `max_threshold` and both
/// complements of size at most `max_complement`.
pub fn all_elements(max_threshold: usize, max_complement: usize) -> Vec<Cfinj> {
    fn rec(
        k: i64,
        n: usize,
        tail: usize,
        rows: &mut Vec<Option<i64>>,
        used: &mut Vec<bool>,
        max_complement: usize,
        out: &mut Vec<Cfinj>,
    ) {
        if rows.len() == n {
            if let Ok(e) = Cfinj::new(k, rows.clone()) {
                let s = e.stats();
                if e.threshold() == n
                    && s.dbar as usize <= max_complement
                    && s.rbar as usize <= max_complement
                {
                    out.push(e);
                }
            }
            return;
        }
        rows.push(None);
        rec(k, n, tail, rows, used, max_complement, out);
        rows.pop();
        for v in 0..tail {
            if used[v] {
                continue;
            }
            used[v] = true;
            rows.push(Some(v as i64));
            rec(k, n, tail, rows, used, max_complement, out);
            rows.pop();
            used[v] = false;
        }
    }
    let mut out = Vec::new();
    let reach = max_threshold as i64 + max_complement as i64;
    for k in -reach..=reach {
        for n in 0..=max_threshold {
            let tail = n as i64 + k;
            if tail < 0 {
                continue;
            }
            let tail = tail as usize;
            rec(k, n, tail, &mut Vec::new(), &mut vec![false; tail], max_complement, &mut out);
        }
    }
    out
}

//! Partitions and the elementary/monomial/power-sum corner of the ring of
//! symmetric functions.
//!
//! Chern classes are elementary symmetric functions in the Chern roots, so a
//! Chern number `c_λ` is the evaluation of `e_λ`. The monomial basis `m_μ`
//! is where products of manifolds become simple: the roots of `M × N` are the
//! union of the roots of `M` and `N`, so `m_λ` splits over sub-multisets of
//! `λ`.

mod partition;

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{One, Zero};

pub use partition::{enumerate_partitions, m_splittings, partition_union, Partition};

use crate::error::{Error, Result};
use crate::linalg::RationalMatrix;
use crate::rational::{int, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Basis {
    Elementary,
    Monomial,
}

/// A homogeneous symmetric function of fixed degree in one of the two bases.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymPoly {
    degree: usize,
    basis: Basis,
    coeffs: BTreeMap<Partition, Rational>,
}

impl SymPoly {
    pub fn zero(degree: usize, basis: Basis) -> Self {
        SymPoly {
            degree,
            basis,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn basis_element(basis: Basis, lambda: Partition) -> Self {
        let mut p = SymPoly::zero(lambda.weight(), basis);
        p.coeffs.insert(lambda, Rational::one());
        p
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn coeffs(&self) -> &BTreeMap<Partition, Rational> {
        &self.coeffs
    }

    pub fn coeff(&self, lambda: &Partition) -> Rational {
        self.coeffs
            .get(lambda)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, lambda: Partition, c: Rational) -> Result<()> {
        if lambda.weight() != self.degree {
            return Err(Error::DimensionMismatch {
                expected: self.degree,
                found: lambda.weight(),
            });
        }
        let entry = self.coeffs.entry(lambda).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.retain(|_, v| !v.is_zero());
        }
        Ok(())
    }

    pub fn scaled(&self, k: &Rational) -> Self {
        let mut out = SymPoly::zero(self.degree, self.basis);
        if !k.is_zero() {
            out.coeffs = self
                .coeffs
                .iter()
                .map(|(p, c)| (p.clone(), c * k))
                .collect();
        }
        out
    }

    pub fn add(&self, other: &SymPoly) -> Result<SymPoly> {
        if self.basis != other.basis {
            return Err(Error::invalid(
                "cannot add symmetric functions in different bases",
            ));
        }
        let mut out = self.clone();
        for (p, c) in &other.coeffs {
            out.add_term(p.clone(), c.clone())?;
        }
        Ok(out)
    }

    /// Product of two elementary-basis functions: `e_λ · e_μ = e_{λ∪μ}`.
    pub fn mul_elementary(&self, other: &SymPoly) -> Result<SymPoly> {
        if self.basis != Basis::Elementary || other.basis != Basis::Elementary {
            return Err(Error::invalid(
                "mul_elementary needs both factors in the elementary basis",
            ));
        }
        let mut out = SymPoly::zero(self.degree + other.degree, Basis::Elementary);
        for (a, ca) in &self.coeffs {
            for (b, cb) in &other.coeffs {
                out.add_term(a.union(b), ca * cb)?;
            }
        }
        Ok(out)
    }

    pub fn to_monomial(&self) -> SymPoly {
        match self.basis {
            Basis::Monomial => self.clone(),
            Basis::Elementary => self.change_basis(Basis::Monomial),
        }
    }

    pub fn to_elementary(&self) -> SymPoly {
        match self.basis {
            Basis::Elementary => self.clone(),
            Basis::Monomial => self.change_basis(Basis::Elementary),
        }
    }

    fn change_basis(&self, target: Basis) -> SymPoly {
        let t = transition(self.degree);
        let m = match target {
            Basis::Monomial => &t.e_to_m,
            Basis::Elementary => &t.m_to_e,
        };
        let mut out = SymPoly::zero(self.degree, target);
        for (lambda, c) in &self.coeffs {
            let i = t.index_of(lambda);
            for (j, mu) in t.partitions.iter().enumerate() {
                let entry = &m[(i, j)];
                if !entry.is_zero() {
                    out.add_term(mu.clone(), c * entry).expect("same degree");
                }
            }
        }
        out
    }
}

/// Basis-change data for one degree, with rows and columns in canonical
/// partition order.
#[derive(Debug)]
pub struct Transition {
    pub degree: usize,
    pub partitions: Vec<Partition>,
    index: HashMap<Partition, usize>,
    /// Row `λ`: the expansion `e_λ = Σ_μ e_to_m[λ][μ] m_μ`.
    pub e_to_m: RationalMatrix,
    /// Row `μ`: the expansion `m_μ = Σ_λ m_to_e[μ][λ] e_λ`.
    pub m_to_e: RationalMatrix,
}

impl Transition {
    pub fn index_of(&self, lambda: &Partition) -> usize {
        self.index[lambda]
    }

    pub fn len(&self) -> usize {
        self.partitions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.partitions.is_empty()
    }
}

fn transition_cache() -> &'static RwLock<HashMap<usize, Arc<Transition>>> {
    static CACHE: OnceLock<RwLock<HashMap<usize, Arc<Transition>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Memoized transition data for degree `n`.
pub fn transition(n: usize) -> Arc<Transition> {
    if let Some(t) = transition_cache().read().expect("cache poisoned").get(&n) {
        return Arc::clone(t);
    }
    let built = Arc::new(build_transition(n));
    let mut w = transition_cache().write().expect("cache poisoned");
    Arc::clone(w.entry(n).or_insert(built))
}

fn build_transition(n: usize) -> Transition {
    let partitions = enumerate_partitions(n);
    let index = partitions
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, p)| (p, i))
        .collect();
    let e_to_m = e_to_m_matrix(n);
    let m_to_e = e_to_m
        .inverse()
        .expect("e-to-m transition matrix is invertible");
    Transition {
        degree: n,
        partitions,
        index,
        e_to_m,
        m_to_e,
    }
}

/// Entry `(λ, μ)` is the coefficient of `m_μ` in `e_λ`.
///
/// That coefficient is the coefficient of `x^μ` in `e_{λ_1}⋯e_{λ_k}` over
/// `n` variables. It is extracted by expanding one factor at a time while
/// tracking only the exponents still to be produced, which keeps the
/// expansion restricted to the single target monomial.
pub fn e_to_m_matrix(n: usize) -> RationalMatrix {
    let parts = enumerate_partitions(n);
    let mut m = RationalMatrix::zeros(parts.len(), parts.len());
    for (i, lambda) in parts.iter().enumerate() {
        for (j, mu) in parts.iter().enumerate() {
            let mut memo = HashMap::new();
            let count = monomial_coefficient(lambda.parts(), mu.parts().to_vec(), &mut memo);
            m[(i, j)] = Rational::from_integer(count);
        }
    }
    m
}

/// Coefficient of `x^remaining` in `Π_{k in factors} e_k`, where
/// `remaining` is a weakly decreasing exponent vector (zeros dropped).
fn monomial_coefficient(
    factors: &[usize],
    remaining: Vec<usize>,
    memo: &mut HashMap<(usize, Vec<usize>), BigInt>,
) -> BigInt {
    let Some((&k, rest)) = factors.split_first() else {
        return if remaining.is_empty() {
            BigInt::one()
        } else {
            BigInt::zero()
        };
    };
    if k > remaining.len() {
        return BigInt::zero();
    }
    let key = (factors.len(), remaining.clone());
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    // Group equal exponents; e_k picks k distinct variables, k_v of them
    // from the group with exponent v.
    let mut groups: Vec<(usize, usize)> = Vec::new();
    for &e in &remaining {
        match groups.last_mut() {
            Some((v, m)) if *v == e => *m += 1,
            _ => groups.push((e, 1)),
        }
    }
    let mut total = BigInt::zero();
    let mut pick = vec![0usize; groups.len()];
    fn choose(
        g: usize,
        left: usize,
        groups: &[(usize, usize)],
        pick: &mut Vec<usize>,
        rest: &[usize],
        total: &mut BigInt,
        memo: &mut HashMap<(usize, Vec<usize>), BigInt>,
    ) {
        if g == groups.len() {
            if left != 0 {
                return;
            }
            let mut ways = BigInt::one();
            let mut next = Vec::new();
            for (&(v, m), &t) in groups.iter().zip(pick.iter()) {
                ways *= binomial(BigInt::from(m), BigInt::from(t));
                next.extend(std::iter::repeat_n(v, m - t));
                if v > 1 {
                    next.extend(std::iter::repeat_n(v - 1, t));
                }
            }
            next.sort_unstable_by(|a, b| b.cmp(a));
            *total += ways * monomial_coefficient(rest, next, memo);
            return;
        }
        for t in 0..=groups[g].1.min(left) {
            pick[g] = t;
            choose(g + 1, left - t, groups, pick, rest, total, memo);
        }
        pick[g] = 0;
    }
    choose(0, k, &groups, &mut pick, rest, &mut total, memo);
    memo.insert(key, total.clone());
    total
}

/// `p_k = Σ x_i^k` in the elementary basis, by Newton's identities
/// `p_k = Σ_{i<k} (-1)^{i-1} e_i p_{k-i} + (-1)^{k-1} k e_k`.
pub fn power_sum_in_e(k: usize) -> Result<SymPoly> {
    if k == 0 {
        return Err(Error::invalid("power sums start at degree 1"));
    }
    let e = |i: usize| SymPoly::basis_element(Basis::Elementary, Partition::single(i));
    let mut sums: Vec<SymPoly> = vec![SymPoly::zero(0, Basis::Elementary)];
    for d in 1..=k {
        let sign = |i: usize| if i % 2 == 1 { int(1) } else { int(-1) };
        let mut p = e(d).scaled(&(sign(d) * int(d as i64)));
        for i in 1..d {
            p = p.add(&e(i).mul_elementary(&sums[d - i])?.scaled(&sign(i)))?;
        }
        sums.push(p);
    }
    Ok(sums.pop().expect("k >= 1"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    /// Brute-force oracle: expand e_λ as an explicit polynomial in `n`
    /// variables and read off the coefficient of x^μ.
    fn brute_e_to_m(lambda: &Partition, mu: &Partition, n: usize) -> i64 {
        type Poly = HashMap<Vec<usize>, i64>;
        let subsets = |k: usize| -> Vec<Vec<usize>> {
            (0u32..(1 << n))
                .filter(|s| s.count_ones() as usize == k)
                .map(|s| (0..n).map(|i| ((s >> i) & 1) as usize).collect())
                .collect()
        };
        let mut acc: Poly = HashMap::from([(vec![0; n], 1)]);
        for &k in lambda.parts() {
            let mut next: Poly = HashMap::new();
            for (mono, c) in &acc {
                for s in subsets(k) {
                    let m: Vec<usize> = mono.iter().zip(&s).map(|(a, b)| a + b).collect();
                    *next.entry(m).or_default() += c;
                }
            }
            acc = next;
        }
        let mut target = mu.parts().to_vec();
        target.resize(n, 0);
        acc.get(&target).copied().unwrap_or(0)
    }

    #[test]
    fn small_transition_matrices() {
        assert_eq!(e_to_m_matrix(1), RationalMatrix::identity(1));
        // rows/cols: (2), (1,1)
        let m2 = e_to_m_matrix(2);
        assert_eq!(m2.row(0), &[int(0), int(1)]);
        assert_eq!(m2.row(1), &[int(1), int(2)]);
        // e_{1,1,1} = m_3 + 3 m_{2,1} + 6 m_{1,1,1}
        let m3 = e_to_m_matrix(3);
        assert_eq!(m3.row(2), &[int(1), int(3), int(6)]);
    }

    #[test]
    fn transition_matches_brute_force_expansion() {
        for n in 1..=6 {
            let m = e_to_m_matrix(n);
            let parts = enumerate_partitions(n);
            for (i, lambda) in parts.iter().enumerate() {
                for (j, mu) in parts.iter().enumerate() {
                    assert_eq!(m[(i, j)], int(brute_e_to_m(lambda, mu, n)), "{lambda} {mu}");
                }
            }
        }
    }

    #[test]
    fn transitions_invert_exactly() {
        for n in 0..=12 {
            let t = transition(n);
            let prod = t.e_to_m.mul(&t.m_to_e).unwrap();
            assert_eq!(prod, RationalMatrix::identity(t.len()), "n = {n}");
        }
    }

    #[test]
    fn newton_small_cases() {
        let e = |parts: &[usize], c: i64| (p(parts), int(c));
        let as_vec = |s: SymPoly| s.coeffs().clone().into_iter().collect::<Vec<_>>();
        assert_eq!(as_vec(power_sum_in_e(1).unwrap()), vec![e(&[1], 1)]);
        assert_eq!(
            as_vec(power_sum_in_e(2).unwrap()),
            vec![e(&[2], -2), e(&[1, 1], 1)]
        );
        assert_eq!(
            as_vec(power_sum_in_e(3).unwrap()),
            vec![e(&[3], 3), e(&[2, 1], -3), e(&[1, 1, 1], 1)]
        );
        assert!(power_sum_in_e(0).is_err());
    }

    #[test]
    fn newton_agrees_with_monomial_basis() {
        for k in 1..=12 {
            let m = power_sum_in_e(k).unwrap().to_monomial();
            assert_eq!(
                m,
                SymPoly::basis_element(Basis::Monomial, Partition::single(k)),
                "k = {k}"
            );
        }
    }

    #[test]
    fn basis_round_trip() {
        let mut f = SymPoly::zero(4, Basis::Elementary);
        f.add_term(p(&[2, 2]), int(3)).unwrap();
        f.add_term(p(&[3, 1]), int(-1)).unwrap();
        assert_eq!(f.to_monomial().to_elementary(), f);
        assert!(f.add_term(p(&[2]), int(1)).is_err());
    }

    #[test]
    fn concurrent_cache_access_is_consistent() {
        let handles: Vec<_> = (0..8)
            .map(|i| std::thread::spawn(move || transition(5 + i % 3).e_to_m.clone()))
            .collect();
        for (i, h) in handles.into_iter().enumerate() {
            assert_eq!(h.join().unwrap(), e_to_m_matrix(5 + i % 3));
        }
    }
}

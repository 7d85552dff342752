use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// An integer partition: weakly decreasing positive parts.
///
/// Ordering is by weight first, then reverse-lexicographic within a weight,
/// so `(4) < (3,1) < (2,2) < (2,1,1) < (1,1,1,1)`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn empty() -> Self {
        Partition::default()
    }

    /// Sorts `parts` into weakly decreasing order. Zero parts are rejected.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::invalid(format!(
                "partition parts must be positive: {parts:?}"
            )));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition { parts })
    }

    /// `k` copies of the part `value`.
    pub fn repeated(value: usize, k: usize) -> Self {
        assert!(value > 0 || k == 0);
        Partition {
            parts: vec![value; k],
        }
    }

    pub fn single(value: usize) -> Self {
        Partition::repeated(value, 1)
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn contains_part(&self, v: usize) -> bool {
        self.parts.contains(&v)
    }

    pub fn count_of(&self, v: usize) -> usize {
        self.parts.iter().filter(|&&p| p == v).count()
    }

    /// Distinct part values in decreasing order with their multiplicities.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((v, m)) if *v == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// Multiset union of parts.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = Vec::with_capacity(self.len() + other.len());
        let (mut i, mut j) = (0, 0);
        while i < self.parts.len() && j < other.parts.len() {
            if self.parts[i] >= other.parts[j] {
                parts.push(self.parts[i]);
                i += 1;
            } else {
                parts.push(other.parts[j]);
                j += 1;
            }
        }
        parts.extend_from_slice(&self.parts[i..]);
        parts.extend_from_slice(&other.parts[j..]);
        Partition { parts }
    }

    /// JSON key form, e.g. `[3,1]`.
    pub fn to_key(&self) -> String {
        let inner: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        format!("[{}]", inner.join(","))
    }

    pub fn from_key(key: &str) -> Result<Self> {
        let inner = key
            .trim()
            .strip_prefix('[')
            .and_then(|s| s.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("partition key {key:?} is not a JSON array")))?;
        if inner.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let parts = inner
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad part in {key:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        let sorted = Partition::new(parts.clone())?;
        if sorted.parts != parts {
            return Err(Error::Parse(format!(
                "partition key {key:?} is not weakly decreasing"
            )));
        }
        Ok(sorted)
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight()
            .cmp(&other.weight())
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let inner: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", inner.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// All partitions of `n` in canonical order.
pub fn enumerate_partitions(n: usize) -> Vec<Partition> {
    fn go(remaining: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition {
                parts: prefix.clone(),
            });
            return;
        }
        for p in (1..=remaining.min(max)).rev() {
            prefix.push(p);
            go(remaining - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

pub fn partition_union(mu: &Partition, nu: &Partition) -> Partition {
    mu.union(nu)
}

/// Every ordered pair `(mu, nu)` of sub-multisets with `mu ∪ nu = lambda`.
pub fn m_splittings(lambda: &Partition) -> Vec<(Partition, Partition)> {
    let mults = lambda.multiplicities();
    let mut out = Vec::new();
    let mut take = vec![0usize; mults.len()];
    fn go(
        i: usize,
        mults: &[(usize, usize)],
        take: &mut Vec<usize>,
        out: &mut Vec<(Partition, Partition)>,
    ) {
        if i == mults.len() {
            let mut mu = Vec::new();
            let mut nu = Vec::new();
            for (&(v, m), &t) in mults.iter().zip(take.iter()) {
                mu.extend(std::iter::repeat_n(v, t));
                nu.extend(std::iter::repeat_n(v, m - t));
            }
            out.push((Partition { parts: mu }, Partition { parts: nu }));
            return;
        }
        for t in (0..=mults[i].1).rev() {
            take[i] = t;
            go(i + 1, mults, take, out);
        }
    }
    go(0, &mults, &mut take, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    /// Independent count via Euler's pentagonal-number recurrence.
    fn pentagonal_count(n: usize) -> Vec<i64> {
        let mut pi = vec![0i64; n + 1];
        pi[0] = 1;
        for m in 1..=n {
            let mut total = 0i64;
            for k in 1.. {
                let k = k as i64;
                let g1 = (k * (3 * k - 1) / 2) as usize;
                if g1 > m {
                    break;
                }
                let sign = if k % 2 == 1 { 1 } else { -1 };
                total += sign * pi[m - g1];
                let g2 = (k * (3 * k + 1) / 2) as usize;
                if g2 <= m {
                    total += sign * pi[m - g2];
                }
            }
            pi[m] = total;
        }
        pi
    }

    #[test]
    fn small_enumerations() {
        assert_eq!(enumerate_partitions(0), vec![Partition::empty()]);
        assert_eq!(
            enumerate_partitions(4),
            vec![
                p(&[4]),
                p(&[3, 1]),
                p(&[2, 2]),
                p(&[2, 1, 1]),
                p(&[1, 1, 1, 1])
            ]
        );
        assert_eq!(enumerate_partitions(10).len(), 42);
    }

    #[test]
    fn counts_match_pentagonal_recurrence() {
        for (n, &count) in pentagonal_count(20).iter().enumerate() {
            assert_eq!(enumerate_partitions(n).len() as i64, count, "n = {n}");
        }
    }

    #[test]
    fn enumeration_is_sorted_canonically() {
        for n in 0..=12 {
            let parts = enumerate_partitions(n);
            assert!(parts.windows(2).all(|w| w[0] < w[1]));
            assert!(parts.iter().all(|q| q.weight() == n));
        }
    }

    #[test]
    fn unions() {
        assert_eq!(partition_union(&p(&[2, 1]), &p(&[1])), p(&[2, 1, 1]));
        assert_eq!(
            partition_union(&Partition::empty(), &p(&[3, 2])),
            p(&[3, 2])
        );
        assert_eq!(partition_union(&p(&[3]), &p(&[3])), p(&[3, 3]));
    }

    #[test]
    fn splittings_examples() {
        let e = Partition::empty;
        assert_eq!(m_splittings(&p(&[1])), vec![(p(&[1]), e()), (e(), p(&[1]))]);
        assert_eq!(
            m_splittings(&p(&[2, 1])),
            vec![
                (p(&[2, 1]), e()),
                (p(&[2]), p(&[1])),
                (p(&[1]), p(&[2])),
                (e(), p(&[2, 1]))
            ]
        );
        assert_eq!(
            m_splittings(&p(&[1, 1])),
            vec![(p(&[1, 1]), e()), (p(&[1]), p(&[1])), (e(), p(&[1, 1]))]
        );
    }

    #[test]
    fn splitting_counts_and_unions() {
        for n in 0..=10 {
            for lambda in enumerate_partitions(n) {
                let s = m_splittings(&lambda);
                let expected: usize = lambda
                    .multiplicities()
                    .iter()
                    .map(|&(_, m)| m + 1)
                    .product();
                assert_eq!(s.len(), expected);
                for (mu, nu) in &s {
                    assert_eq!(mu.union(nu), lambda);
                }
            }
        }
    }

    #[test]
    fn keys_round_trip() {
        for n in 0..=6 {
            for q in enumerate_partitions(n) {
                assert_eq!(Partition::from_key(&q.to_key()).unwrap(), q);
            }
        }
        assert!(Partition::from_key("[1,2]").is_err());
        assert!(Partition::from_key("[0]").is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
    }
}

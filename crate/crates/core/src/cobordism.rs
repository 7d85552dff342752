//! Classes in `Ω^U ⊗ Q` as vectors of Chern numbers, and linear
//! functionals on them.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{to_short, Rational};
use crate::symfun::{enumerate_partitions, m_splittings, power_sum_in_e, transition, Partition};

fn check_weights(dim: usize, coeffs: &BTreeMap<Partition, Rational>) -> Result<()> {
    match coeffs.keys().find(|p| p.weight() != dim) {
        Some(p) => Err(Error::DimensionMismatch {
            expected: dim,
            found: p.weight(),
        }),
        None => Ok(()),
    }
}

fn dense(dim: usize, coeffs: &BTreeMap<Partition, Rational>) -> Vec<Rational> {
    enumerate_partitions(dim)
        .iter()
        .map(|p| coeffs.get(p).cloned().unwrap_or_else(Rational::zero))
        .collect()
}

fn sparse(dim: usize, values: &[Rational]) -> Result<BTreeMap<Partition, Rational>> {
    let parts = enumerate_partitions(dim);
    if parts.len() != values.len() {
        return Err(Error::DimensionMismatch {
            expected: parts.len(),
            found: values.len(),
        });
    }
    Ok(parts
        .into_iter()
        .zip(values.iter().cloned())
        .filter(|(_, v)| !v.is_zero())
        .collect())
}

/// A class of complex dimension `dim`, recorded by its Chern numbers
/// `c_λ = ⟨c_{λ_1}⋯c_{λ_k}, [M]⟩`. Missing entries are zero.
#[derive(Clone)]
pub struct CobordismClass {
    dim: usize,
    chern: BTreeMap<Partition, Rational>,
    label: Option<String>,
}

impl PartialEq for CobordismClass {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.chern == other.chern
    }
}

impl Eq for CobordismClass {}

impl fmt::Debug for CobordismClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CobordismClass(dim {}", self.dim)?;
        if let Some(l) = &self.label {
            write!(f, ", {l}")?;
        }
        for (p, c) in &self.chern {
            write!(f, ", c{p}={}", to_short(c))?;
        }
        write!(f, ")")
    }
}

impl CobordismClass {
    pub fn zero(dim: usize) -> Self {
        CobordismClass {
            dim,
            chern: BTreeMap::new(),
            label: None,
        }
    }

    /// The dimension-zero class with value `value`; `point(1)` is the unit.
    pub fn point(value: Rational) -> Self {
        let mut c = CobordismClass::zero(0);
        if !value.is_zero() {
            c.chern.insert(Partition::empty(), value);
        }
        c
    }

    pub fn new(dim: usize, mut chern: BTreeMap<Partition, Rational>) -> Result<Self> {
        check_weights(dim, &chern)?;
        chern.retain(|_, v| !v.is_zero());
        Ok(CobordismClass {
            dim,
            chern,
            label: None,
        })
    }

    pub fn from_dense(dim: usize, values: &[Rational]) -> Result<Self> {
        Ok(CobordismClass {
            dim,
            chern: sparse(dim, values)?,
            label: None,
        })
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn chern_numbers(&self) -> &BTreeMap<Partition, Rational> {
        &self.chern
    }

    pub fn chern_number(&self, lambda: &Partition) -> Rational {
        self.chern
            .get(lambda)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// Top Chern number `c_n`, the Euler number.
    pub fn euler_number(&self) -> Rational {
        if self.dim == 0 {
            return self.chern_number(&Partition::empty());
        }
        self.chern_number(&Partition::single(self.dim))
    }

    pub fn is_zero(&self) -> bool {
        self.chern.is_empty()
    }

    /// Coordinates in canonical partition order.
    pub fn to_dense(&self) -> Vec<Rational> {
        dense(self.dim, &self.chern)
    }

    pub fn scaled(&self, k: &Rational) -> Self {
        let chern = if k.is_zero() {
            BTreeMap::new()
        } else {
            self.chern.iter().map(|(p, c)| (p.clone(), c * k)).collect()
        };
        CobordismClass {
            dim: self.dim,
            chern,
            label: None,
        }
    }

    /// Monomial-basis characteristic numbers `m_μ[M]`, in canonical order.
    fn monomial_numbers(&self) -> Vec<Rational> {
        let t = transition(self.dim);
        let c = self.to_dense();
        t.m_to_e.mul_vec(&c).expect("square transition")
    }
}

/// Coordinate-wise `Σ q_i · X_i`. All terms must share one dimension.
pub fn linear_combine(terms: &[(Rational, &CobordismClass)]) -> Result<CobordismClass> {
    let Some((_, first)) = terms.first() else {
        return Err(Error::invalid("linear_combine needs at least one term"));
    };
    let dim = first.dim;
    let mut chern: BTreeMap<Partition, Rational> = BTreeMap::new();
    for (q, x) in terms {
        if x.dim != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: x.dim,
            });
        }
        if q.is_zero() {
            continue;
        }
        for (p, c) in &x.chern {
            *chern.entry(p.clone()).or_insert_with(Rational::zero) += q * c;
        }
    }
    CobordismClass::new(dim, chern)
}

/// `a - b`.
pub fn difference(a: &CobordismClass, b: &CobordismClass) -> Result<CobordismClass> {
    linear_combine(&[(Rational::one(), a), (-Rational::one(), b)])
}

/// Ring product. The Chern roots of `M × N` are the union of the roots of
/// the factors, so in the monomial basis
/// `m_λ[M×N] = Σ_{μ∪ν=λ, |μ|=dim M} m_μ[M]·m_ν[N]`.
pub fn product(a: &CobordismClass, b: &CobordismClass) -> CobordismClass {
    let n = a.dim + b.dim;
    let ta = transition(a.dim);
    let tb = transition(b.dim);
    let t = transition(n);
    let ma = a.monomial_numbers();
    let mb = b.monomial_numbers();

    let mut m_prod = vec![Rational::zero(); t.len()];
    for (k, lambda) in t.partitions.iter().enumerate() {
        let mut acc = Rational::zero();
        for (mu, nu) in m_splittings(lambda) {
            if mu.weight() != a.dim {
                continue;
            }
            let x = &ma[ta.index_of(&mu)];
            let y = &mb[tb.index_of(&nu)];
            if !x.is_zero() && !y.is_zero() {
                acc += x * y;
            }
        }
        m_prod[k] = acc;
    }
    let chern = t.e_to_m.mul_vec(&m_prod).expect("square transition");
    CobordismClass::from_dense(n, &chern).expect("length matches")
}

/// Chern numbers of `CP^n`: `c_λ = Π_i binom(n+1, λ_i)`.
pub fn cp_class(n: usize) -> CobordismClass {
    let chern = enumerate_partitions(n)
        .into_iter()
        .map(|p| {
            let v: BigInt = p
                .parts()
                .iter()
                .map(|&k| binomial(BigInt::from(n + 1), BigInt::from(k)))
                .product();
            (p, Rational::from_integer(v))
        })
        .collect();
    CobordismClass::new(n, chern)
        .expect("weights are n")
        .with_label(format!("CP^{n}"))
}

/// Pullback along a degree-`d` covering multiplies every Chern number by `d`.
pub fn cover_scale(a: &CobordismClass, d: u64) -> Result<CobordismClass> {
    if d == 0 {
        return Err(Error::invalid("covering degree must be positive"));
    }
    let mut out = a.scaled(&Rational::from_integer(BigInt::from(d)));
    out.label = a.label.as_ref().map(|l| format!("{l} (degree-{d} cover)"));
    Ok(out)
}

/// Thom-Milnor number `s_n = Σ_i ⟨x_i^n, [M]⟩`.
pub fn s_number(a: &CobordismClass) -> Result<Rational> {
    if a.dim == 0 {
        return Err(Error::invalid("s-number needs positive dimension"));
    }
    s_functional(a.dim)?.eval(a)
}

/// The functional `s_n` written in Chern numbers.
pub fn s_functional(n: usize) -> Result<Functional> {
    let p = power_sum_in_e(n)?;
    Functional::new(n, p.coeffs().clone()).map(|f| f.with_label(format!("s_{n}")))
}

/// A rational linear combination of Chern numbers in a fixed dimension.
#[derive(Clone)]
pub struct Functional {
    dim: usize,
    coeffs: BTreeMap<Partition, Rational>,
    label: Option<String>,
}

impl PartialEq for Functional {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.coeffs == other.coeffs
    }
}

impl Eq for Functional {}

impl fmt::Debug for Functional {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Functional(dim {}", self.dim)?;
        if let Some(l) = &self.label {
            write!(f, ", {l}")?;
        }
        for (p, c) in &self.coeffs {
            write!(f, ", {}·c{p}", to_short(c))?;
        }
        write!(f, ")")
    }
}

impl Functional {
    pub fn zero(dim: usize) -> Self {
        Functional {
            dim,
            coeffs: BTreeMap::new(),
            label: None,
        }
    }

    pub fn new(dim: usize, mut coeffs: BTreeMap<Partition, Rational>) -> Result<Self> {
        check_weights(dim, &coeffs)?;
        coeffs.retain(|_, v| !v.is_zero());
        Ok(Functional {
            dim,
            coeffs,
            label: None,
        })
    }

    pub fn from_dense(dim: usize, values: &[Rational]) -> Result<Self> {
        Ok(Functional {
            dim,
            coeffs: sparse(dim, values)?,
            label: None,
        })
    }

    /// The coordinate functional picking out `c_λ`.
    pub fn coordinate(lambda: &Partition) -> Self {
        let mut f = Functional::zero(lambda.weight());
        f.coeffs.insert(lambda.clone(), Rational::one());
        f.label = Some(format!("c{lambda}"));
        f
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
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

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn to_dense(&self) -> Vec<Rational> {
        dense(self.dim, &self.coeffs)
    }

    pub fn eval(&self, x: &CobordismClass) -> Result<Rational> {
        if x.dim != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: x.dim,
            });
        }
        Ok(self
            .coeffs
            .iter()
            .filter_map(|(p, f)| x.chern.get(p).map(|c| f * c))
            .fold(Rational::zero(), |acc, v| acc + v))
    }

    pub fn scaled(&self, k: &Rational) -> Self {
        let coeffs = if k.is_zero() {
            BTreeMap::new()
        } else {
            self.coeffs
                .iter()
                .map(|(p, c)| (p.clone(), c * k))
                .collect()
        };
        Functional {
            dim: self.dim,
            coeffs,
            label: None,
        }
    }

    pub fn combine(terms: &[(Rational, &Functional)]) -> Result<Functional> {
        let Some((_, first)) = terms.first() else {
            return Err(Error::invalid("combine needs at least one term"));
        };
        let dim = first.dim;
        let mut coeffs: BTreeMap<Partition, Rational> = BTreeMap::new();
        for (q, f) in terms {
            if f.dim != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: f.dim,
                });
            }
            for (p, c) in &f.coeffs {
                *coeffs.entry(p.clone()).or_insert_with(Rational::zero) += q * c;
            }
        }
        Functional::new(dim, coeffs)
    }
}

/// `c_1^n`, the all-ones coordinate.
pub fn c1_power_functional(n: usize) -> Functional {
    Functional::coordinate(&Partition::repeated(1, n)).with_label(format!("c_1^{n}"))
}

/// `c_1 c_{n-1}`; for `n = 2` this is `c_1^2`.
pub fn c1_cn1_functional(n: usize) -> Result<Functional> {
    if n < 2 {
        return Err(Error::invalid("c_1 c_{n-1} needs n >= 2"));
    }
    Ok(Functional::coordinate(&Partition::new(vec![n - 1, 1])?)
        .with_label(format!("c_1 c_{}", n - 1)))
}

//! Multiplicative genera as functionals on Chern numbers.
//!
//! A genus is fixed by its characteristic power series
//! `Q(x) = Σ q_k x^k` with `q_0 = 1`. In dimension `n` its value is the
//! degree-`n` part of `Π_i Q(x_i)` over the Chern roots, which in the
//! monomial basis has coefficient `q_{μ_1}⋯q_{μ_l}` on `m_μ`; the
//! transition matrices then rewrite it in Chern numbers. Coefficients are
//! polynomials in a formal `y` so that the whole `χ_y` family is handled
//! at once.

mod poly;
pub mod series;

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, OnceLock, RwLock};

use num_traits::{One, Zero};

pub use poly::Poly;

use crate::cobordism::{CobordismClass, Functional};
use crate::error::{Error, Result};
use crate::rational::{int, Rational};
use crate::symfun::{enumerate_partitions, transition, Basis, Partition, SymPoly};

pub const DEFAULT_TRUNCATION: usize = 16;

/// A characteristic power series with coefficients in `Q[y]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenusSpec {
    name: String,
    coeffs: Vec<Poly>,
}

impl GenusSpec {
    pub fn new(name: impl Into<String>, coeffs: Vec<Poly>) -> Result<Self> {
        if coeffs.first() != Some(&Poly::one()) {
            return Err(Error::invalid("characteristic series must start with 1"));
        }
        Ok(GenusSpec {
            name: name.into(),
            coeffs,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn coeffs(&self) -> &[Poly] {
        &self.coeffs
    }

    /// Highest degree retained.
    pub fn truncation(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn evaluate(&self, x: &CobordismClass) -> Result<Poly> {
        genus_functional(self, x.dim())?.eval(x)
    }
}

/// Hirzebruch's generalized Todd genus,
/// `Q(x; y) = x(1+y) / (1 - e^{-x(1+y)}) - x·y`.
pub fn chi_y_spec(truncation: usize) -> GenusSpec {
    let todd = series::todd_series(truncation + 1);
    let one_plus_y = Poly::new(vec![Rational::one(), Rational::one()]);
    let coeffs = (0..=truncation)
        .map(|k| {
            let q = one_plus_y.pow(k).scale(&todd.coeff(k));
            if k == 1 {
                &q - &Poly::y()
            } else {
                q
            }
        })
        .collect();
    GenusSpec::new("chi-y", coeffs).expect("q_0 = 1")
}

/// `x / (1 - e^{-x})`.
pub fn todd_spec(truncation: usize) -> GenusSpec {
    let s = series::todd_series(truncation + 1);
    let coeffs = s
        .coeffs()
        .iter()
        .map(|c| Poly::constant(c.clone()))
        .collect();
    GenusSpec::new("todd", coeffs).expect("q_0 = 1")
}

/// `x / tanh(x)`: the L-genus in Chern roots, i.e. the signature.
pub fn l_spec(truncation: usize) -> GenusSpec {
    let s = series::x_coth_series(truncation + 1);
    let coeffs = s
        .coeffs()
        .iter()
        .map(|c| Poly::constant(c.clone()))
        .collect();
    GenusSpec::new("signature", coeffs).expect("q_0 = 1")
}

/// A functional whose coefficients are polynomials in `y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParametricFunctional {
    dim: usize,
    coeffs: BTreeMap<Partition, Poly>,
}

impl ParametricFunctional {
    pub fn new(dim: usize, mut coeffs: BTreeMap<Partition, Poly>) -> Result<Self> {
        if let Some(p) = coeffs.keys().find(|p| p.weight() != dim) {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: p.weight(),
            });
        }
        coeffs.retain(|_, v| !v.is_zero());
        Ok(ParametricFunctional { dim, coeffs })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn coeffs(&self) -> &BTreeMap<Partition, Poly> {
        &self.coeffs
    }

    /// Sets `y` to a rational value.
    pub fn specialize(&self, y: &Rational) -> Functional {
        let c = self
            .coeffs
            .iter()
            .map(|(p, q)| (p.clone(), q.eval(y)))
            .collect();
        Functional::new(self.dim, c).expect("weights already checked")
    }

    /// The coefficient of `y^p`, as an ordinary functional.
    pub fn y_coefficient(&self, p: usize) -> Functional {
        let c = self
            .coeffs
            .iter()
            .map(|(k, q)| (k.clone(), q.coeff(p)))
            .collect();
        Functional::new(self.dim, c).expect("weights already checked")
    }

    pub fn eval(&self, x: &CobordismClass) -> Result<Poly> {
        if x.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: x.dim(),
            });
        }
        let mut acc = Poly::zero();
        for (p, c) in x.chern_numbers() {
            if let Some(q) = self.coeffs.get(p) {
                acc = &acc + &q.scale(c);
            }
        }
        Ok(acc)
    }
}

/// The degree-`n` genus polynomial `K_n` of `spec`, in Chern numbers.
pub fn genus_functional(spec: &GenusSpec, n: usize) -> Result<ParametricFunctional> {
    if n > spec.truncation() {
        return Err(Error::TruncationExceeded {
            truncation: spec.truncation(),
            requested: n,
        });
    }
    let t = transition(n);
    let mut out: Vec<Poly> = vec![Poly::zero(); t.len()];
    for (j, mu) in t.partitions.iter().enumerate() {
        let q_mu = mu
            .parts()
            .iter()
            .fold(Poly::one(), |acc, &k| &acc * &spec.coeffs[k]);
        if q_mu.is_zero() {
            continue;
        }
        for (i, slot) in out.iter_mut().enumerate() {
            let entry = &t.m_to_e[(j, i)];
            if !entry.is_zero() {
                *slot = &*slot + &q_mu.scale(entry);
            }
        }
    }
    let coeffs = t.partitions.iter().cloned().zip(out).collect();
    ParametricFunctional::new(n, coeffs)
}

fn chi_y_cache() -> &'static RwLock<HashMap<usize, Arc<ParametricFunctional>>> {
    static CACHE: OnceLock<RwLock<HashMap<usize, Arc<ParametricFunctional>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// `χ_y` in dimension `n`, memoized.
pub fn chi_y_functional(n: usize) -> Result<Arc<ParametricFunctional>> {
    if let Some(f) = chi_y_cache().read().expect("cache poisoned").get(&n) {
        return Ok(Arc::clone(f));
    }
    let truncation = n.max(DEFAULT_TRUNCATION);
    let f = Arc::new(genus_functional(&chi_y_spec(truncation), n)?);
    let mut w = chi_y_cache().write().expect("cache poisoned");
    Ok(Arc::clone(w.entry(n).or_insert(f)))
}

/// `χ_y(x) = Σ_p χ_p(x) y^p`.
pub fn chi_y(x: &CobordismClass) -> Result<Poly> {
    chi_y_functional(x.dim())?.eval(x)
}

/// `χ_0, …, χ_n` in dimension `n`.
pub fn chi_p_functionals(n: usize) -> Result<Vec<Functional>> {
    let f = chi_y_functional(n)?;
    Ok((0..=n)
        .map(|p| f.y_coefficient(p).with_label(format!("chi_{p}")))
        .collect())
}

pub fn todd_functional(n: usize) -> Result<Functional> {
    let spec = todd_spec(n.max(DEFAULT_TRUNCATION));
    Ok(genus_functional(&spec, n)?
        .specialize(&Rational::zero())
        .with_label("todd"))
}

pub fn l_genus_functional(n: usize) -> Result<Functional> {
    let spec = l_spec(n.max(DEFAULT_TRUNCATION));
    Ok(genus_functional(&spec, n)?
        .specialize(&Rational::zero())
        .with_label("signature"))
}

/// The top Chern number `c_n`.
pub fn euler_functional(n: usize) -> Result<Functional> {
    if n == 0 {
        return Err(Error::invalid("Euler functional needs n >= 1"));
    }
    Ok(Functional::coordinate(&Partition::single(n)).with_label("euler"))
}

/// `p_k = c_k^2 + 2 Σ_{l=1..k} (-1)^l c_{k-l} c_{k+l}` as an
/// elementary-basis symmetric function of degree `2k`.
fn pontryagin_class(k: usize) -> SymPoly {
    let e = |i: usize| {
        if i == 0 {
            Partition::empty()
        } else {
            Partition::single(i)
        }
    };
    let mut p = SymPoly::zero(2 * k, Basis::Elementary);
    p.add_term(e(k).union(&e(k)), Rational::one())
        .expect("degree 2k");
    for l in 1..=k {
        let sign = if l % 2 == 0 { 2 } else { -2 };
        p.add_term(e(k - l).union(&e(k + l)), int(sign))
            .expect("degree 2k");
    }
    p
}

/// Pontryagin numbers `p_I` for `I ⊢ n/2`, as functionals in dimension `n`.
pub fn pontryagin_functionals(n: usize) -> Result<BTreeMap<Partition, Functional>> {
    if n == 0 || n % 2 == 1 {
        return Err(Error::invalid(format!(
            "Pontryagin numbers need a positive even complex dimension, got {n}"
        )));
    }
    let mut out = BTreeMap::new();
    for idx in enumerate_partitions(n / 2) {
        let poly = idx.parts().iter().try_fold(
            SymPoly::basis_element(Basis::Elementary, Partition::empty()),
            |acc, &k| acc.mul_elementary(&pontryagin_class(k)),
        )?;
        let label = format!("p{idx}");
        out.insert(
            idx,
            Functional::new(n, poly.coeffs().clone())?.with_label(label),
        );
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cobordism::{cp_class, product};
    use crate::rational::frac;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn func(dim: usize, entries: &[(&[usize], Rational)]) -> Functional {
        Functional::new(
            dim,
            entries.iter().map(|(k, v)| (p(k), v.clone())).collect(),
        )
        .unwrap()
    }

    #[test]
    fn surface_formulas() {
        let chi = chi_p_functionals(2).unwrap();
        assert_eq!(
            chi[0],
            func(2, &[(&[1, 1], frac(1, 12)), (&[2], frac(1, 12))])
        );
        assert_eq!(
            chi[1],
            func(2, &[(&[1, 1], frac(1, 6)), (&[2], frac(-5, 6))])
        );
        assert_eq!(todd_functional(2).unwrap(), chi[0]);
    }

    #[test]
    fn dimension_zero_is_constant_one() {
        for spec in [chi_y_spec(4), todd_spec(4), l_spec(4)] {
            let f = genus_functional(&spec, 0).unwrap();
            assert_eq!(f.coeffs().get(&Partition::empty()), Some(&Poly::one()));
        }
    }

    #[test]
    fn truncation_is_enforced() {
        assert!(matches!(
            genus_functional(&chi_y_spec(3), 4),
            Err(Error::TruncationExceeded {
                truncation: 3,
                requested: 4
            })
        ));
    }

    #[test]
    fn chi_y_of_projective_spaces() {
        // Hodge diamond of CP^n is diagonal: χ_p = (-1)^p.
        for n in 0..=6 {
            let expected = Poly::new(
                (0..=n)
                    .map(|k| int(if k % 2 == 0 { 1 } else { -1 }))
                    .collect(),
            );
            assert_eq!(chi_y(&cp_class(n)).unwrap(), expected, "n = {n}");
        }
        assert_eq!(chi_y(&cp_class(2)).unwrap().to_string(), "1 - y + y^2");
        assert!(chi_y(&CobordismClass::zero(3)).unwrap().is_zero());
    }

    #[test]
    fn euler_and_signature_values() {
        assert_eq!(
            euler_functional(2).unwrap().eval(&cp_class(2)).unwrap(),
            int(3)
        );
        for n in 1..=10 {
            assert_eq!(
                euler_functional(n).unwrap().eval(&cp_class(n)).unwrap(),
                int(n as i64 + 1)
            );
        }
        assert!(euler_functional(0).is_err());
        assert_eq!(
            l_genus_functional(2).unwrap(),
            func(2, &[(&[1, 1], frac(1, 3)), (&[2], frac(-2, 3))])
        );
        for k in 1..=4 {
            assert_eq!(
                l_genus_functional(2 * k)
                    .unwrap()
                    .eval(&cp_class(2 * k))
                    .unwrap(),
                int(1)
            );
        }
    }

    #[test]
    fn pontryagin_examples() {
        let p2 = pontryagin_functionals(2).unwrap();
        assert_eq!(p2.len(), 1);
        let p1 = &p2[&p(&[1])];
        assert_eq!(*p1, func(2, &[(&[1, 1], int(1)), (&[2], int(-2))]));
        assert_eq!(p1.eval(&cp_class(2)).unwrap(), int(3));

        let p4 = pontryagin_functionals(4).unwrap();
        assert_eq!(p4.len(), 2);
        assert_eq!(
            p4[&p(&[2])],
            func(4, &[(&[2, 2], int(1)), (&[3, 1], int(-2)), (&[4], int(2))])
        );
        assert_eq!(p4[&p(&[2])].eval(&cp_class(4)).unwrap(), int(10));
        // p(CP^4) = (1+h^2)^5, p_1^2 = 25
        assert_eq!(p4[&p(&[1, 1])].eval(&cp_class(4)).unwrap(), int(25));
        let m = product(&cp_class(1), &cp_class(3));
        assert_eq!(p4[&p(&[1, 1])].eval(&m).unwrap(), int(0));
        assert_eq!(pontryagin_functionals(8).unwrap().len(), 5);
        assert!(pontryagin_functionals(3).is_err());
        assert!(pontryagin_functionals(0).is_err());
    }

    #[test]
    fn specializations_for_small_n() {
        for n in 1..=6 {
            let f = chi_y_functional(n).unwrap();
            assert_eq!(f.specialize(&int(-1)), euler_functional(n).unwrap());
            assert_eq!(f.specialize(&int(1)), l_genus_functional(n).unwrap());
            assert_eq!(f.specialize(&int(0)), todd_functional(n).unwrap());
        }
    }
}

//! Generator sequences, the ideals they span, and annihilator checks.
//!
//! For each ideal kind the in-ideal generator monomials of degree `n` span
//! a subspace of `Ω^U_{2n} ⊗ Q`; its annihilator (functionals vanishing on
//! it) is computed exactly and compared against the expected span of
//! invariants by canonical RREF bases. A mismatch is reported with a
//! witness functional that lies in one space but not the other.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::bundles::{
    abelian_pbundle, partner_surface, projectivization_chern, BundleModel, SurfaceModel,
};
use crate::cobordism::{
    cover_scale, cp_class, difference, product, s_number, CobordismClass, Functional,
};
use crate::error::{Error, Result};
use crate::genus::{chi_p_functionals, chi_y, euler_functional, pontryagin_functionals};
use crate::linalg::{RationalMatrix, Subspace};
use crate::rational::{int, to_pq, Rational};
use crate::symfun::{enumerate_partitions, Partition};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Provenance {
    Beta,
    Gamma,
    CpBasis,
}

/// Generators indexed by degree `k ≥ 1`.
#[derive(Clone, Debug)]
pub struct GeneratorSequence {
    provenance: Provenance,
    generators: Vec<CobordismClass>,
}

impl GeneratorSequence {
    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    pub fn max_degree(&self) -> usize {
        self.generators.len()
    }

    pub fn get(&self, k: usize) -> Option<&CobordismClass> {
        k.checked_sub(1).and_then(|i| self.generators.get(i))
    }

    /// `s_k` of each generator up to `max_deg`.
    pub fn s_numbers(&self, max_deg: usize) -> Result<Vec<Rational>> {
        (1..=max_deg)
            .map(|k| {
                let g = self
                    .get(k)
                    .ok_or_else(|| Error::invalid(format!("generator of degree {k} not built")))?;
                s_number(g)
            })
            .collect()
    }

    /// Milnor's criterion: every `s_k(g_k)` is nonzero.
    pub fn check_criterion(&self, max_deg: usize) -> Result<()> {
        for (i, s) in self.s_numbers(max_deg)?.iter().enumerate() {
            if s.is_zero() {
                return Err(Error::invalid(format!(
                    "s_{} of the degree-{} generator vanishes; not a ring generator",
                    i + 1,
                    i + 1
                )));
            }
        }
        Ok(())
    }
}

/// `β_1 = [CP^1]`, `β_2 = [X] - [Y]`, `β_k = [P(E)] - [P(F)]` with
/// `E → X`, `F → Y` of rank `k-1` and `c_2(E) = c = -c_2(F)`.
pub fn beta_sequence(x: &SurfaceModel, c: &Rational, max_deg: usize) -> Result<GeneratorSequence> {
    if x.signature().is_zero() {
        return Err(Error::invalid(
            "surface signature is zero, so s_2(beta_2) = 6 sigma vanishes",
        ));
    }
    if c.is_zero() {
        return Err(Error::invalid(
            "bundle twist c is zero, so s_k(beta_k) vanishes for k >= 3",
        ));
    }
    let y = partner_surface(x);
    let mut generators = Vec::with_capacity(max_deg);
    for k in 1..=max_deg {
        let g = match k {
            1 => cp_class(1),
            2 => difference(&x.to_class(), &y.to_class())?,
            _ => {
                let xk = projectivization_chern(x, &BundleModel::new(k - 1, c.clone())?)?;
                let yk = projectivization_chern(&y, &BundleModel::new(k - 1, -c.clone())?)?;
                difference(&xk, &yk)?
            }
        };
        generators.push(g.with_label(format!("beta_{k}")));
    }
    Ok(GeneratorSequence {
        provenance: Provenance::Beta,
        generators,
    })
}

/// `γ_1 = [CP^1]`, `γ_2 = [CP^2]`, `γ_i = [P(E_c)]` over an abelian surface
/// with `E_c` of rank `i-1`.
pub fn gamma_sequence(c: &Rational, max_deg: usize) -> Result<GeneratorSequence> {
    if c.is_zero() {
        return Err(Error::invalid(
            "bundle twist c is zero, so s_i(gamma_i) vanishes",
        ));
    }
    let mut generators = Vec::with_capacity(max_deg);
    for i in 1..=max_deg {
        let g = match i {
            1 | 2 => cp_class(i),
            _ => abelian_pbundle(i - 1, c.clone())?,
        };
        generators.push(g.with_label(format!("gamma_{i}")));
    }
    Ok(GeneratorSequence {
        provenance: Provenance::Gamma,
        generators,
    })
}

/// `[CP^k]` in every degree.
pub fn cp_sequence(max_deg: usize) -> GeneratorSequence {
    GeneratorSequence {
        provenance: Provenance::CpBasis,
        generators: (1..=max_deg).map(cp_class).collect(),
    }
}

/// `g_I = g_{i_1} ⋯ g_{i_l}` for every `I ⊢ n`, in canonical order.
pub fn monomial_classes(
    g: &GeneratorSequence,
    n: usize,
) -> Result<Vec<(Partition, CobordismClass)>> {
    if g.max_degree() < n {
        return Err(Error::invalid(format!(
            "generators only built to degree {}, need {n}",
            g.max_degree()
        )));
    }
    let mut memo: HashMap<Partition, CobordismClass> = HashMap::new();
    memo.insert(Partition::empty(), CobordismClass::point(Rational::one()));
    fn build(
        lambda: &Partition,
        g: &GeneratorSequence,
        memo: &mut HashMap<Partition, CobordismClass>,
    ) -> CobordismClass {
        if let Some(x) = memo.get(lambda) {
            return x.clone();
        }
        let parts = lambda.parts();
        let (last, head) = parts.split_last().expect("non-empty");
        let prefix = Partition::new(head.to_vec()).expect("parts stay positive");
        let x = product(
            &build(&prefix, g, memo),
            g.get(*last).expect("degree checked"),
        );
        memo.insert(lambda.clone(), x.clone());
        x
    }
    Ok(enumerate_partitions(n)
        .into_iter()
        .map(|lambda| {
            let x = build(&lambda, g, &mut memo);
            (lambda, x)
        })
        .collect())
}

/// Rows are the Chern vectors of the degree-`n` monomials.
pub fn evaluation_matrix(g: &GeneratorSequence, n: usize) -> Result<RationalMatrix> {
    let rows: Vec<Vec<Rational>> = monomial_classes(g, n)?
        .iter()
        .map(|(_, x)| x.to_dense())
        .collect();
    RationalMatrix::from_rows(enumerate_partitions(n).len(), &rows)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum IdealKind {
    /// Differences of orientation-preservingly diffeomorphic varieties.
    Do,
    /// Differences of diffeomorphic varieties.
    D,
    /// Differences of homeomorphic varieties.
    H,
    /// The kernel of `χ_y`.
    I,
}

impl IdealKind {
    pub const ALL: [IdealKind; 4] = [IdealKind::Do, IdealKind::D, IdealKind::H, IdealKind::I];

    pub fn name(self) -> &'static str {
        match self {
            IdealKind::Do => "do",
            IdealKind::D => "d",
            IdealKind::H => "h",
            IdealKind::I => "betti",
        }
    }

    /// Smallest dimension at which the theorem check is meaningful.
    pub fn min_dim(self) -> usize {
        match self {
            IdealKind::Do => 3,
            _ => 2,
        }
    }
}

impl fmt::Display for IdealKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for IdealKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "do" => Ok(IdealKind::Do),
            "d" => Ok(IdealKind::D),
            "h" => Ok(IdealKind::H),
            "i" | "betti" => Ok(IdealKind::I),
            other => Err(Error::invalid(format!("unknown ideal kind {other:?}"))),
        }
    }
}

impl Serialize for IdealKind {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

/// Whether the monomial indexed by `lambda` is one of the designated
/// generators of the ideal (or a multiple of one).
pub fn ideal_membership_rule(kind: IdealKind, lambda: &Partition) -> bool {
    let parts = lambda.parts();
    match kind {
        IdealKind::Do => {
            parts.iter().any(|&j| j >= 3 && j % 2 == 1)
                || (lambda.contains_part(1) && parts.iter().any(|&j| j >= 2 && j % 2 == 0))
        }
        IdealKind::D => {
            parts.iter().any(|&j| j >= 3)
                || (lambda.contains_part(1) && lambda.contains_part(2))
                || lambda.count_of(2) >= 2
        }
        IdealKind::H => parts.iter().any(|&j| j >= 2),
        IdealKind::I => parts.iter().any(|&j| j >= 3),
    }
}

/// Functionals spanning the expected annihilator of the ideal in degree `n`.
pub fn expected_annihilator(kind: IdealKind, n: usize) -> Result<Vec<Functional>> {
    if n == 0 {
        return Err(Error::invalid("theorem checks need n >= 1"));
    }
    Ok(match kind {
        IdealKind::Do if n.is_multiple_of(2) => {
            let mut v = vec![euler_functional(n)?];
            v.extend(pontryagin_functionals(n)?.into_values());
            v
        }
        IdealKind::D if n == 2 => enumerate_partitions(2)
            .iter()
            .map(Functional::coordinate)
            .collect(),
        IdealKind::Do | IdealKind::D | IdealKind::H => vec![euler_functional(n)?],
        IdealKind::I => chi_p_functionals(n)?,
    })
}

#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub kind: IdealKind,
    pub dim: usize,
    pub in_ideal: Vec<Partition>,
    pub annihilator_dim: usize,
    pub expected_dim: usize,
    /// Exact equality of annihilator and expected span.
    pub equal: bool,
    /// Every expected functional vanishes on every in-ideal monomial.
    pub individual_annihilation: bool,
    /// `annihilator_dim = π(n) - |in_ideal|`.
    pub rank_nullity: bool,
    /// For the `χ_y` kernel only: `χ_y` vanishes on each in-ideal monomial.
    pub chi_y_vanishes: Option<bool>,
    pub witness: Option<Functional>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.equal
            && self.individual_annihilation
            && self.rank_nullity
            && self.chi_y_vanishes != Some(false)
    }
}

impl Serialize for VerificationReport {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let in_ideal: Vec<&[usize]> = self.in_ideal.iter().map(Partition::parts).collect();
        let mut m = s.serialize_map(None)?;
        m.serialize_entry("kind", &self.kind)?;
        m.serialize_entry("dim", &self.dim)?;
        m.serialize_entry("in_ideal", &in_ideal)?;
        m.serialize_entry("annihilator_dim", &self.annihilator_dim)?;
        m.serialize_entry("expected_dim", &self.expected_dim)?;
        m.serialize_entry("equal", &self.equal)?;
        m.serialize_entry("individual_annihilation", &self.individual_annihilation)?;
        m.serialize_entry("rank_nullity", &self.rank_nullity)?;
        if let Some(v) = self.chi_y_vanishes {
            m.serialize_entry("chi_y_vanishes", &v)?;
        }
        m.serialize_entry("passed", &self.passed())?;
        m.serialize_entry("witness", &self.witness)?;
        m.end()
    }
}

/// Builds the span of the in-ideal monomials of degree `n`, computes its
/// annihilator and compares it with the expected invariants.
pub fn verify_theorem(
    kind: IdealKind,
    n: usize,
    g: &GeneratorSequence,
) -> Result<VerificationReport> {
    g.check_criterion(n)?;
    let ambient = enumerate_partitions(n).len();
    let monomials = monomial_classes(g, n)?;
    let members: Vec<&(Partition, CobordismClass)> = monomials
        .iter()
        .filter(|(lambda, _)| ideal_membership_rule(kind, lambda))
        .collect();

    let annihilator = if members.is_empty() {
        Subspace::full(ambient)
    } else {
        let rows: Vec<Vec<Rational>> = members.iter().map(|(_, x)| x.to_dense()).collect();
        RationalMatrix::from_rows(ambient, &rows)?.kernel()
    };
    let expected_fns = expected_annihilator(kind, n)?;
    let expected_vecs: Vec<Vec<Rational>> = expected_fns.iter().map(Functional::to_dense).collect();
    let expected = Subspace::span(ambient, &expected_vecs)?;

    let equal = annihilator == expected;
    let mut individual_annihilation = true;
    for f in &expected_fns {
        for (_, x) in &members {
            if !f.eval(x)?.is_zero() {
                individual_annihilation = false;
            }
        }
    }
    let chi_y_vanishes = match kind {
        IdealKind::I => {
            let mut all = true;
            for (_, x) in &members {
                all &= chi_y(x)?.is_zero();
            }
            Some(all)
        }
        _ => None,
    };

    let witness = if equal {
        None
    } else {
        let missing = expected_fns
            .iter()
            .find(|f| !annihilator.contains(&f.to_dense()))
            .map(|f| {
                let label = format!(
                    "expected invariant {} does not annihilate the ideal",
                    f.label().unwrap_or("?")
                );
                f.clone().with_label(label)
            });
        missing.or_else(|| {
            annihilator
                .basis()
                .iter()
                .find(|v| !expected.contains(v))
                .map(|v| {
                    Functional::from_dense(n, v)
                        .expect("ambient length")
                        .with_label("annihilator element outside the expected span")
                })
        })
    };

    Ok(VerificationReport {
        kind,
        dim: n,
        in_ideal: members.iter().map(|(p, _)| p.clone()).collect(),
        annihilator_dim: annihilator.dim(),
        expected_dim: expected.dim(),
        equal,
        individual_annihilation,
        rank_nullity: annihilator.dim() == ambient - members.len(),
        chi_y_vanishes,
        witness,
    })
}

/// Generator criterion and basis property for one sequence.
#[derive(Clone, Debug)]
pub struct GeneratorReport {
    pub provenance: Provenance,
    pub s_numbers: Vec<Rational>,
    /// `(n, invertible)` for the monomial evaluation matrix in degree `n`.
    pub basis_checks: Vec<(usize, bool)>,
}

impl GeneratorReport {
    pub fn passed(&self) -> bool {
        self.s_numbers.iter().all(|s| !s.is_zero()) && self.basis_checks.iter().all(|&(_, ok)| ok)
    }
}

impl Serialize for GeneratorReport {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let s_numbers: Vec<String> = self.s_numbers.iter().map(to_pq).collect();
        let invertible: Vec<bool> = self.basis_checks.iter().map(|&(_, ok)| ok).collect();
        let mut m = s.serialize_map(None)?;
        m.serialize_entry("provenance", &self.provenance)?;
        m.serialize_entry("s_numbers", &s_numbers)?;
        m.serialize_entry("invertible", &invertible)?;
        m.serialize_entry("passed", &self.passed())?;
        m.end()
    }
}

pub fn verify_generators(g: &GeneratorSequence, max_deg: usize) -> Result<GeneratorReport> {
    let s_numbers = g.s_numbers(max_deg)?;
    let basis_checks = (1..=max_deg)
        .map(|n| Ok((n, evaluation_matrix(g, n)?.is_invertible())))
        .collect::<Result<Vec<_>>>()?;
    Ok(GeneratorReport {
        provenance: g.provenance(),
        s_numbers,
        basis_checks,
    })
}

/// Coefficients `a_p` with `f = Σ_{p ≤ n/2} a_p χ_p`, if they exist.
pub fn chi_span_certificate(f: &Functional) -> Result<Option<Vec<Rational>>> {
    let n = f.dim();
    let chi = chi_p_functionals(n)?;
    let independent: Vec<Vec<Rational>> = chi
        .iter()
        .take(n / 2 + 1)
        .map(Functional::to_dense)
        .collect();
    Ok(Subspace::coordinates(&independent, &f.to_dense()))
}

#[derive(Clone, Debug)]
pub struct UnboundednessReport {
    pub functional: Functional,
    pub witness: Partition,
    pub base_value: Rational,
    /// `(d, f(d-fold cover of the witness))`.
    pub values: Vec<(u64, Rational)>,
}

impl UnboundednessReport {
    /// Values scale exactly as `d · f(γ_I)` and are nonzero.
    pub fn linear(&self) -> bool {
        !self.base_value.is_zero()
            && self
                .values
                .iter()
                .all(|(d, v)| *v == int(*d as i64) * &self.base_value && !v.is_zero())
    }
}

impl Serialize for UnboundednessReport {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let values: Vec<(u64, String)> = self.values.iter().map(|(d, v)| (*d, to_pq(v))).collect();
        let mut m = s.serialize_map(None)?;
        m.serialize_entry("dim", &self.functional.dim())?;
        m.serialize_entry("functional", &self.functional)?;
        m.serialize_entry("witness", self.witness.parts())?;
        m.serialize_entry("base_value", &to_pq(&self.base_value))?;
        m.serialize_entry("values", &values)?;
        m.serialize_entry("linear", &self.linear())?;
        m.serialize_entry("note", "the Betti numbers of the coverings stay bounded")?;
        m.end()
    }
}

/// For `f` outside the span of the `χ_p`, finds an in-ideal monomial `γ_I`
/// with `f(γ_I) ≠ 0` and tabulates `f` on its degree-`d` coverings.
pub fn unboundedness_demo(
    f: &Functional,
    g: &GeneratorSequence,
    degrees: &[u64],
) -> Result<UnboundednessReport> {
    if let Some(certificate) = chi_span_certificate(f)? {
        return Err(Error::MemberOfChiSpan { certificate });
    }
    let n = f.dim();
    let monomials = monomial_classes(g, n)?;
    let (witness, base, base_value) = monomials
        .into_iter()
        .filter(|(lambda, _)| ideal_membership_rule(IdealKind::I, lambda))
        .find_map(|(lambda, x)| {
            let v = f.eval(&x).ok()?;
            (!v.is_zero()).then_some((lambda, x, v))
        })
        .ok_or_else(|| {
            Error::invalid(
                "no in-ideal monomial detects the functional; generators are not a basis",
            )
        })?;
    let values = degrees
        .iter()
        .map(|&d| Ok((d, f.eval(&cover_scale(&base, d)?)?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(UnboundednessReport {
        functional: f.clone(),
        witness,
        base_value,
        values,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bundles::default_surface;
    use crate::cobordism::{c1_power_functional, s_functional};
    use crate::genus::chi_y_functional;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn beta(max: usize) -> GeneratorSequence {
        beta_sequence(&default_surface(), &int(248), max).unwrap()
    }

    #[test]
    fn beta_s_numbers() {
        let s = beta(8).s_numbers(8).unwrap();
        assert_eq!(s[0], int(2));
        assert_eq!(s[1], int(-96));
        for k in 3..=8i64 {
            assert_eq!(s[k as usize - 1], int(-496 * (k * k - 1)));
        }
        let b = beta(8);
        for k in 2..=8 {
            assert!(b.get(k).unwrap().euler_number().is_zero());
        }
    }

    #[test]
    fn degenerate_inputs_are_rejected() {
        assert!(beta_sequence(&SurfaceModel::from_ints(200, 100), &int(1), 3).is_err());
        assert!(beta_sequence(&default_surface(), &int(0), 3).is_err());
        assert!(gamma_sequence(&int(0), 3).is_err());
    }

    #[test]
    fn gamma_properties() {
        let g = gamma_sequence(&int(-1), 8).unwrap();
        assert_eq!(s_number(g.get(3).unwrap()).unwrap(), int(8));
        for i in 3..=8 {
            assert!(chi_y(g.get(i).unwrap()).unwrap().is_zero());
            let i = i as i64;
            assert_eq!(
                s_number(g.get(i as usize).unwrap()).unwrap(),
                int((i - 1) * (i + 1))
            );
        }
        assert_eq!(chi_y(g.get(2).unwrap()).unwrap().to_string(), "1 - y + y^2");
    }

    #[test]
    fn monomials() {
        let b = beta(4);
        let m = monomial_classes(&b, 4).unwrap();
        assert_eq!(m[0], (p(&[4]), b.get(4).unwrap().clone()));
        let m2 = monomial_classes(&b, 2).unwrap();
        assert_eq!(m2[1].1.chern_number(&p(&[1, 1])), int(8));
        assert!(monomial_classes(&b, 5).is_err());
    }

    #[test]
    fn membership_examples() {
        assert!(ideal_membership_rule(IdealKind::Do, &p(&[2, 1])));
        assert!(!ideal_membership_rule(IdealKind::Do, &p(&[2, 2])));
        assert!(ideal_membership_rule(IdealKind::D, &p(&[2, 2])));
        assert!(!ideal_membership_rule(
            IdealKind::H,
            &Partition::repeated(1, 5)
        ));
        assert!(ideal_membership_rule(IdealKind::H, &p(&[2, 1, 1])));
        assert!(ideal_membership_rule(IdealKind::I, &p(&[3, 1])));
        assert!(!ideal_membership_rule(IdealKind::I, &p(&[2, 2, 1])));
        assert!(!ideal_membership_rule(IdealKind::D, &p(&[2])));
        assert!(ideal_membership_rule(IdealKind::Do, &p(&[3])));
        assert!(!ideal_membership_rule(IdealKind::Do, &p(&[4])));
    }

    #[test]
    fn do_small_dims() {
        let r = verify_theorem(IdealKind::Do, 3, &beta(3)).unwrap();
        assert_eq!(r.in_ideal, vec![p(&[3]), p(&[2, 1])]);
        assert_eq!(r.annihilator_dim, 1);
        assert!(r.passed(), "{r:?}");
        let r = verify_theorem(IdealKind::Do, 4, &beta(4)).unwrap();
        assert_eq!(r.in_ideal, vec![p(&[3, 1]), p(&[2, 1, 1])]);
        assert_eq!(r.annihilator_dim, 3);
        assert!(r.passed(), "{r:?}");
    }

    #[test]
    fn betti_dim_three() {
        let g = gamma_sequence(&int(-1), 3).unwrap();
        let r = verify_theorem(IdealKind::I, 3, &g).unwrap();
        assert_eq!(r.in_ideal, vec![p(&[3])]);
        assert_eq!(r.annihilator_dim, 2);
        assert_eq!(r.chi_y_vanishes, Some(true));
        assert!(r.passed());
    }

    #[test]
    fn d_in_dimension_two_is_everything() {
        let r = verify_theorem(IdealKind::D, 2, &beta(2)).unwrap();
        assert!(r.in_ideal.is_empty());
        assert_eq!(r.annihilator_dim, 2);
        assert!(r.passed());
    }

    #[test]
    fn mismatch_produces_witness() {
        // Checking the DO expectation against the cp basis must fail: CP^3 has
        // nonzero Euler number.
        let r = verify_theorem(IdealKind::Do, 3, &cp_sequence(3)).unwrap();
        assert!(!r.equal && !r.passed());
        assert!(r.witness.is_some());
    }

    #[test]
    fn criterion_failure_is_an_error() {
        let mut g = cp_sequence(3);
        g.generators[2] = product(&cp_class(1), &cp_class(2));
        assert!(verify_theorem(IdealKind::H, 3, &g).is_err());
    }

    #[test]
    fn unboundedness() {
        let g = gamma_sequence(&int(-1), 6).unwrap();
        for i in 3..=6usize {
            let r = unboundedness_demo(&c1_power_functional(i), &g, &[1, 2, 4, 8]).unwrap();
            assert_eq!(r.witness, Partition::single(i));
            assert_eq!(r.base_value, int((i as i64 - 1).pow(i as u32)));
            assert!(r.linear());
            let r = unboundedness_demo(&s_functional(i).unwrap(), &g, &[1, 3]).unwrap();
            assert_eq!(r.witness, Partition::single(i));
            let i = i as i64;
            assert_eq!(r.base_value, int(i * i - 1));
        }
        let chi0 = chi_y_functional(4).unwrap().y_coefficient(0);
        match unboundedness_demo(&chi0, &g, &[1]) {
            Err(Error::MemberOfChiSpan { certificate }) => {
                assert_eq!(certificate, vec![int(1), int(0), int(0)]);
            }
            other => panic!("expected rejection, got {other:?}"),
        }
    }

    #[test]
    fn generator_reports() {
        let r = verify_generators(&beta(5), 5).unwrap();
        assert!(r.passed());
        let r = verify_generators(&gamma_sequence(&int(-1), 5).unwrap(), 5).unwrap();
        assert!(r.passed());
    }
}

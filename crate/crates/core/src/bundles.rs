//! Numeric models of surfaces, rank-`(n+1)` bundles with `c_1 = 0` over
//! them, and the Chern numbers of their projectivizations.
//!
//! The cohomology of the base surface `S` is modeled by `1`, `κ = c_1(S)`
//! and the orientation class `ω`, with `κ² = c_1²[S]·ω`. Over it,
//! `H*(P(E))` is free on `1, y, …, y^n` subject to
//! `y^{n+1} + c_1(E) y^n + c_2(E) y^{n-1} = 0`, and `⟨ω y^n, [P(E)]⟩ = 1`.
//! Chern numbers of `P(E)` only ever involve `c_1(S)`, `c_2(S)`, `c_2(E)`
//! and powers of `y`, so this model determines all of them.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_integer::{binomial, Roots};
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::cobordism::CobordismClass;
use crate::error::{Error, Result};
use crate::rational::{int, Rational};
use crate::symfun::{enumerate_partitions, Partition};

/// Chern numbers `(c_1², c_2)` of a surface.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurfaceModel {
    pub c1sq: Rational,
    pub c2: Rational,
    pub label: Option<String>,
}

impl SurfaceModel {
    pub fn new(c1sq: Rational, c2: Rational) -> Self {
        SurfaceModel {
            c1sq,
            c2,
            label: None,
        }
    }

    pub fn from_ints(c1sq: i64, c2: i64) -> Self {
        SurfaceModel::new(int(c1sq), int(c2))
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    /// `(c_1² - 2 c_2) / 3`
    pub fn signature(&self) -> Rational {
        (&self.c1sq - int(2) * &self.c2) / int(3)
    }

    /// Todd genus `(c_1² + c_2) / 12`.
    pub fn chi0(&self) -> Rational {
        (&self.c1sq + &self.c2) / int(12)
    }

    pub fn to_class(&self) -> CobordismClass {
        let chern = BTreeMap::from([
            (Partition::repeated(1, 2), self.c1sq.clone()),
            (Partition::single(2), self.c2.clone()),
        ]);
        let class = CobordismClass::new(2, chern).expect("weight 2");
        match &self.label {
            Some(l) => class.with_label(l.clone()),
            None => class,
        }
    }
}

/// Rank and `c_2` of a bundle whose first Chern class vanishes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BundleModel {
    rank: usize,
    pub c2: Rational,
}

impl BundleModel {
    pub fn new(rank: usize, c2: Rational) -> Result<Self> {
        if rank < 2 {
            return Err(Error::invalid(format!(
                "bundle rank must be at least 2, got {rank}"
            )));
        }
        Ok(BundleModel { rank, c2 })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }
}

/// Default pair: `X = (152, 100)`, `σ(X) = -16`.
pub fn default_surface() -> SurfaceModel {
    SurfaceModel::from_ints(152, 100).with_label("X")
}

/// The surface with the same Euler number and opposite signature:
/// `c_2(Y) = c_2(X)`, `c_1²(Y) = 4 c_2(X) - c_1²(X)`.
pub fn partner_surface(x: &SurfaceModel) -> SurfaceModel {
    SurfaceModel {
        c1sq: int(4) * &x.c2 - &x.c1sq,
        c2: x.c2.clone(),
        label: x.label.as_ref().map(|l| format!("partner({l})")),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MiyaokaYauReport {
    pub c2_positive: bool,
    pub inequality_holds: bool,
    pub chi0_integral: bool,
    pub chi0: String,
    pub pass: bool,
}

/// `c_2 > 0` and `c_1² ≤ 3 c_2`; also flags whether `χ_0` is an integer.
pub fn my_check(s: &SurfaceModel) -> MiyaokaYauReport {
    let c2_positive = s.c2.is_positive();
    let inequality_holds = s.c1sq <= int(3) * &s.c2;
    let chi0 = s.chi0();
    MiyaokaYauReport {
        c2_positive,
        inequality_holds,
        chi0_integral: chi0.is_integer(),
        chi0: crate::rational::to_pq(&chi0),
        pass: c2_positive && inequality_holds,
    }
}

/// Lexicographically greatest weakly decreasing `(a, b, c, d)` with
/// `a² + b² + c² + d² = m`.
pub fn four_squares(m: u64) -> [u64; 4] {
    fn go(rest: u64, max: u64, slots: usize, acc: &mut Vec<u64>) -> bool {
        if slots == 0 {
            return rest == 0;
        }
        let top = rest.sqrt().min(max);
        for a in (0..=top).rev() {
            // a and every later slot are at most a, so they sum to at most slots·a²
            if a * a * (slots as u64) < rest {
                break;
            }
            acc.push(a);
            if go(rest - a * a, a, slots - 1, acc) {
                return true;
            }
            acc.pop();
        }
        false
    }
    let mut acc = Vec::with_capacity(4);
    assert!(
        go(m, u64::MAX, 4, &mut acc),
        "Lagrange: every integer is a sum of four squares"
    );
    [acc[0], acc[1], acc[2], acc[3]]
}

/// `A·y^w + B·κ y^{w-1} + C·ω y^{w-2}`: a homogeneous class of degree `w`
/// in `H^*(S)[y]`, with `κ = c_1(S)` and `ω` the point class.
#[derive(Clone, Debug, Default)]
struct Graded {
    y: Rational,
    kappa: Rational,
    omega: Rational,
}

impl Graded {
    /// `κ² = c_1²·ω`, `κω = ω² = 0`.
    fn mul(&self, o: &Graded, c1sq: &Rational) -> Graded {
        Graded {
            y: &self.y * &o.y,
            kappa: &self.y * &o.kappa + &self.kappa * &o.y,
            omega: &self.y * &o.omega + &self.omega * &o.y + &self.kappa * &o.kappa * c1sq,
        }
    }
}

fn choose(n: usize, k: isize) -> Rational {
    if k < 0 || k as usize > n {
        return Rational::zero();
    }
    Rational::from_integer(binomial(BigInt::from(n), BigInt::from(k as usize)))
}

/// Full Chern-number vector of `P(E)` over `s`, of complex dimension
/// `rank + 1`. With `n = rank - 1` and `c = c_2(E)` the total Chern class is
/// `c(P(E)) = ((1+y)^{n+1} + c·ω(1+y)^{n-1}) · (1 + κ + c_2(S)·ω)`, and
/// `y^{n+1} = -c·ω y^{n-1}`. Products are formed in `H^*(S)[y]` and the
/// relation is applied only when integrating: in top degree `n+2`,
/// `y^{n+2} = -c·ω y^n`, `κ y^{n+1} = 0`, and `⟨ω y^n, [P(E)]⟩ = 1`.
pub fn projectivization_chern(s: &SurfaceModel, e: &BundleModel) -> Result<CobordismClass> {
    if e.rank < 2 {
        return Err(Error::invalid(format!(
            "bundle rank must be at least 2, got {}",
            e.rank
        )));
    }
    let n = e.rank - 1;
    let dim = n + 2;
    let classes: Vec<Graded> = (0..=dim as isize)
        .map(|k| Graded {
            y: choose(n + 1, k),
            kappa: choose(n + 1, k - 1),
            omega: &e.c2 * choose(n - 1, k - 2) + &s.c2 * choose(n + 1, k - 2),
        })
        .collect();

    // Every partition extends a shorter one by its last part.
    let mut products: HashMap<Partition, Graded> = HashMap::new();
    products.insert(
        Partition::empty(),
        Graded {
            y: Rational::one(),
            ..Default::default()
        },
    );
    let mut chern = BTreeMap::new();
    for w in 1..=dim {
        for lambda in enumerate_partitions(w) {
            let (&last, head) = lambda.parts().split_last().expect("non-empty");
            let top = products[&Partition::new(head.to_vec())?].mul(&classes[last], &s.c1sq);
            if w == dim {
                chern.insert(lambda, &top.omega - &e.c2 * &top.y);
            } else {
                products.insert(lambda, top);
            }
        }
    }
    CobordismClass::new(dim, chern)
}

/// `P(E_c)` over an abelian surface (`c_1² = c_2 = 0`).
pub fn abelian_pbundle(rank: usize, c: Rational) -> Result<CobordismClass> {
    let e = BundleModel::new(rank, c)?;
    let class = projectivization_chern(&SurfaceModel::new(Rational::zero(), Rational::zero()), &e)?;
    Ok(class.with_label(format!("P(E) over abelian surface, rank {rank}")))
}

//! Dominant integral weights for types A and C, their ε-coordinate forms,
//! Weyl group actions, Weyl dimension formulas, and the weight of a polytope
//! point.

use crate::error::Error;
use crate::perm::{PermA, SignedPermC};
use crate::polytope_a::TriangleA;
use crate::polytope_c::{positions_c, TriangleC};
use crate::rat::{int, Int, Rat};
use num::{One, Zero};

/// A dominant sl_n weight a₁ω₁ + … + a_{n−1}ω_{n−1}, all a_i ≥ 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeightA {
    coords: Vec<i64>,
}

impl WeightA {
    pub fn new(coords: Vec<i64>) -> Result<Self, Error> {
        if coords.is_empty() {
            return Err(Error::RankTooSmall { min: 2, got: 1 });
        }
        if coords.iter().any(|&a| a < 0) {
            return Err(Error::InvalidWeight(format!(
                "fundamental coordinates must be nonnegative: {coords:?}"
            )));
        }
        Ok(WeightA { coords })
    }

    pub fn rank(&self) -> usize {
        self.coords.len() + 1
    }

    /// a_k, 1-based.
    pub fn coord(&self, k: usize) -> i64 {
        self.coords[k - 1]
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn is_regular(&self) -> bool {
        self.coords.iter().all(|&a| a > 0)
    }

    /// ε-coordinates (λ₁, …, λ_n) with λ_i = a_i + … + a_{n−1} and λ_n = 0.
    pub fn eps(&self) -> EpsWeight {
        let n = self.rank();
        let mut coords = vec![Rat::zero(); n];
        let mut acc = 0i64;
        for i in (1..n).rev() {
            acc += self.coord(i);
            coords[i - 1] = Rat::from_integer(int(acc));
        }
        EpsWeight { coords }
    }
}

/// A dominant sp_{2n} weight a₁ω₁ + … + a_nω_n, all a_i ≥ 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeightC {
    coords: Vec<i64>,
}

impl WeightC {
    pub fn new(coords: Vec<i64>) -> Result<Self, Error> {
        if coords.is_empty() {
            return Err(Error::RankTooSmall { min: 1, got: 0 });
        }
        if coords.iter().any(|&a| a < 0) {
            return Err(Error::InvalidWeight(format!(
                "fundamental coordinates must be nonnegative: {coords:?}"
            )));
        }
        Ok(WeightC { coords })
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    /// a_k, 1-based.
    pub fn coord(&self, k: usize) -> i64 {
        self.coords[k - 1]
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn is_regular(&self) -> bool {
        self.coords.iter().all(|&a| a > 0)
    }

    /// ε-coordinates (λ₁, …, λ_n) with λ_i = a_i + … + a_n.
    pub fn eps(&self) -> EpsWeight {
        let n = self.rank();
        let mut coords = vec![Rat::zero(); n];
        let mut acc = 0i64;
        for i in (1..=n).rev() {
            acc += self.coord(i);
            coords[i - 1] = Rat::from_integer(int(acc));
        }
        EpsWeight { coords }
    }
}

/// A weight written in the ε-basis with exact rational coordinates. For
/// type A these are well-defined modulo adding multiples of (1, …, 1); use
/// [`EpsWeight::equiv_mod_diagonal`] to compare in the quotient.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EpsWeight {
    coords: Vec<Rat>,
}

impl EpsWeight {
    pub fn new(coords: Vec<Rat>) -> Self {
        EpsWeight { coords }
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        EpsWeight {
            coords: coords.iter().map(|&v| Rat::from_integer(int(v))).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn coords(&self) -> &[Rat] {
        &self.coords
    }

    pub fn sub(&self, other: &EpsWeight) -> EpsWeight {
        assert_eq!(self.len(), other.len());
        EpsWeight {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    /// Equality modulo adding a multiple of (1, …, 1), the type-A notion.
    pub fn equiv_mod_diagonal(&self, other: &EpsWeight) -> bool {
        if self.len() != other.len() || self.coords.is_empty() {
            return self.coords == other.coords;
        }
        let shift = &self.coords[0] - &other.coords[0];
        self.coords
            .iter()
            .zip(&other.coords)
            .all(|(a, b)| a - b == shift)
    }

    /// The representative with last coordinate 0 (type-A normalization).
    pub fn normalized_last_zero(&self) -> EpsWeight {
        let last = self.coords.last().cloned().unwrap_or_else(Rat::zero);
        EpsWeight {
            coords: self.coords.iter().map(|c| c - &last).collect(),
        }
    }
}

/// dim L_λ for sl_n by the Weyl dimension formula, in exact integers.
pub fn weyl_dim_a(lambda: &WeightA) -> Int {
    let n = lambda.rank();
    let eps = lambda.eps();
    let l: Vec<Int> = (0..n)
        .map(|i| eps.coords()[i].to_integer() + int((n - i) as i64))
        .collect();
    let mut num = Int::one();
    let mut den = Int::one();
    for i in 0..n {
        for j in i + 1..n {
            num *= &l[i] - &l[j];
            den *= int((j - i) as i64);
        }
    }
    exact_div(num, den)
}

/// dim L_λ for sp_{2n} by the Weyl dimension formula, in exact integers.
pub fn weyl_dim_c(lambda: &WeightC) -> Int {
    let n = lambda.rank();
    let eps = lambda.eps();
    let l: Vec<Int> = (0..n)
        .map(|i| eps.coords()[i].to_integer() + int((n - i) as i64))
        .collect();
    let m: Vec<Int> = (0..n).map(|i| int((n - i) as i64)).collect();
    let mut num = Int::one();
    let mut den = Int::one();
    for i in 0..n {
        num *= &l[i];
        den *= &m[i];
        for j in i + 1..n {
            num *= (&l[i] - &l[j]) * (&l[i] + &l[j]);
            den *= (&m[i] - &m[j]) * (&m[i] + &m[j]);
        }
    }
    exact_div(num, den)
}

fn exact_div(num: Int, den: Int) -> Int {
    let (q, r) = num::Integer::div_rem(&num, &den);
    assert!(r.is_zero(), "Weyl dimension must be an integer");
    q
}

/// w · λ in ε-coordinates, where w acts by ε_i ↦ ε_{w(i)}; the coefficient of
/// ε_k in the result is λ_{w⁻¹(k)}.
pub fn act_perm_a(w: &PermA, lambda: &WeightA) -> EpsWeight {
    assert_eq!(w.n(), lambda.rank());
    act_perm_eps(w, &lambda.eps())
}

/// The same action on an arbitrary ε-weight.
pub fn act_perm_eps(w: &PermA, v: &EpsWeight) -> EpsWeight {
    assert_eq!(w.n(), v.len());
    let winv = w.inverse();
    EpsWeight {
        coords: (1..=v.len())
            .map(|k| v.coords()[winv.apply(k) - 1].clone())
            .collect(),
    }
}

/// (σ, r) · λ in ε-coordinates, where (σ, r) acts by ε_i ↦ r_{σ(i)} ε_{σ(i)};
/// the coefficient of ε_k in the result is r_k · λ_{σ⁻¹(k)}.
pub fn act_signed_perm_c(w: &SignedPermC, lambda: &WeightC) -> EpsWeight {
    assert_eq!(w.n(), lambda.rank());
    act_signed_perm_eps(w, &lambda.eps())
}

/// The same action on an arbitrary ε-weight.
pub fn act_signed_perm_eps(w: &SignedPermC, v: &EpsWeight) -> EpsWeight {
    assert_eq!(w.n(), v.len());
    let sinv = w.sigma.inverse();
    EpsWeight {
        coords: (1..=v.len())
            .map(|k| {
                let val = v.coords()[sinv.apply(k) - 1].clone();
                if w.signs[k - 1] == 1 {
                    val
                } else {
                    -val
                }
            })
            .collect(),
    }
}

/// μ_x = λ − Σ x_{i,j} α_{i,j} with α_{i,j} = ε_i − ε_j, in ε-coordinates.
pub fn weight_of_point_a(lambda: &WeightA, x: &TriangleA) -> EpsWeight {
    let n = lambda.rank();
    assert_eq!(x.n(), n);
    let mut coords = lambda.eps().coords.clone();
    for p in crate::polytope_a::positions_a(n) {
        let v = x.get(p);
        if !v.is_zero() {
            coords[p.i - 1] -= v;
            coords[p.j - 1] += v;
        }
    }
    EpsWeight { coords }
}

/// μ_x = λ − Σ x_{i,j} α_{i,j} for type C, where α_{i,j} = ε_i − ε_j when
/// j ≤ n and α_{i,j} = ε_i + ε_{2n+1−j} when j > n (so the diagonal positions
/// i + j = 2n + 1 carry the long roots 2ε_i).
pub fn weight_of_point_c(lambda: &WeightC, x: &TriangleC) -> EpsWeight {
    let n = lambda.rank();
    assert_eq!(x.n(), n);
    let mut coords = lambda.eps().coords.clone();
    for p in positions_c(n) {
        let v = x.get(p);
        if !v.is_zero() {
            coords[p.i - 1] -= v;
            if p.j <= n {
                coords[p.j - 1] += v;
            } else {
                coords[2 * n - p.j] -= v;
            }
        }
    }
    EpsWeight { coords }
}

/// ψ: the linear embedding of type-C ε-space into type-A ε-space of rank 2n,
/// sending ε_i to ε_i − ε_{2n+1−i}.
pub fn psi_embed(v: &EpsWeight) -> EpsWeight {
    let n = v.len();
    let mut coords = Vec::with_capacity(2 * n);
    coords.extend(v.coords().iter().cloned());
    coords.extend(v.coords().iter().rev().map(|c| -c));
    EpsWeight { coords }
}

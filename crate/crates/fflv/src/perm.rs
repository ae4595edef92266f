//! Permutations in one-line notation and signed permutations (hyperoctahedral
//! group elements), with the compositions used by the weight actions.

use crate::error::Error;

/// A permutation of {1, …, n} in one-line notation: `images[k]` is w(k+1).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PermA {
    images: Vec<usize>,
}

impl PermA {
    pub fn identity(n: usize) -> Self {
        PermA {
            images: (1..=n).collect(),
        }
    }

    /// Builds a permutation from 1-based one-line notation.
    pub fn from_images(images: Vec<usize>) -> Result<Self, Error> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &v in &images {
            if v == 0 || v > n || seen[v] {
                return Err(Error::InvalidWeight(format!(
                    "not a permutation of 1..={n}: {images:?}"
                )));
            }
            seen[v] = true;
        }
        Ok(PermA { images })
    }

    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        assert!(a >= 1 && b >= 1 && a <= n && b <= n);
        let mut p = Self::identity(n);
        p.images.swap(a - 1, b - 1);
        p
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    /// w(i) for 1-based i.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.images.len()];
        for (k, &v) in self.images.iter().enumerate() {
            inv[v - 1] = k + 1;
        }
        PermA { images: inv }
    }

    /// self ∘ other: other is applied first.
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.n(), other.n());
        PermA {
            images: other.images.iter().map(|&v| self.apply(v)).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(k, &v)| v == k + 1)
    }

    /// Whether w(i) + w(m+1−i) = m+1 for all i, where m = n (used on [1,2n]).
    pub fn is_mirror_symmetric(&self) -> bool {
        let m = self.n();
        (1..=m).all(|i| self.apply(i) + self.apply(m + 1 - i) == m + 1)
    }

    /// All n! permutations, lexicographic in one-line notation.
    pub fn all(n: usize) -> Vec<Self> {
        let mut out = Vec::new();
        let mut images: Vec<usize> = (1..=n).collect();
        loop {
            out.push(PermA {
                images: images.clone(),
            });
            // next lexicographic permutation
            let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| images[i] < images[i + 1])
            else {
                break;
            };
            let j = (i + 1..n).rev().find(|&j| images[j] > images[i]).unwrap();
            images.swap(i, j);
            images[i + 1..].reverse();
        }
        out
    }
}

/// An element (σ, r) of the hyperoctahedral group: a permutation σ of
/// {1, …, n} together with signs r ∈ {±1}ⁿ, acting by ε_i ↦ r_{σ(i)} ε_{σ(i)}.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SignedPermC {
    pub sigma: PermA,
    pub signs: Vec<i8>,
}

impl SignedPermC {
    pub fn identity(n: usize) -> Self {
        SignedPermC {
            sigma: PermA::identity(n),
            signs: vec![1; n],
        }
    }

    pub fn new(sigma: PermA, signs: Vec<i8>) -> Self {
        assert_eq!(sigma.n(), signs.len());
        assert!(signs.iter().all(|&s| s == 1 || s == -1));
        SignedPermC { sigma, signs }
    }

    pub fn n(&self) -> usize {
        self.sigma.n()
    }

    /// self ∘ other: other is applied first. With self = (σ₂, r₂) and
    /// other = (σ₁, r₁) the product is (σ₂σ₁, r) where r_k = r₂_k · r₁_{σ₂⁻¹(k)}.
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.n(), other.n());
        let sigma = self.sigma.compose(&other.sigma);
        let inv2 = self.sigma.inverse();
        let signs = (1..=self.n())
            .map(|k| self.signs[k - 1] * other.signs[inv2.apply(k) - 1])
            .collect();
        SignedPermC { sigma, signs }
    }

    pub fn is_identity(&self) -> bool {
        self.sigma.is_identity() && self.signs.iter().all(|&s| s == 1)
    }

    /// All n!·2ⁿ group elements.
    pub fn all(n: usize) -> Vec<Self> {
        let mut out = Vec::new();
        for sigma in PermA::all(n) {
            for mask in 0u32..(1 << n) {
                let signs = (0..n)
                    .map(|k| if mask >> k & 1 == 1 { -1 } else { 1 })
                    .collect();
                out.push(SignedPermC {
                    sigma: sigma.clone(),
                    signs,
                });
            }
        }
        out
    }
}

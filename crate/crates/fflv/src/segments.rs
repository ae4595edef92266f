//! Permutation and simple vertices of type-A FFLV polytopes via segment
//! families.
//!
//! A family E of segments [i, j] ⊆ [1, n] is intersection-closed when any two
//! of its segments either are disjoint or overlap in a positive-length
//! segment that again belongs to E (two segments sharing a single point are
//! therefore never allowed together). These families are in bijection with
//! S_n; the laminar ones (any two segments nest or are disjoint) correspond
//! to the simple vertices and are counted by the large Schröder numbers.

use crate::error::Error;
use crate::perm::PermA;
use crate::polytope_a::{peak_path, PosA, TriangleA};
use crate::rat::{Int, Rat};
use crate::weights::WeightA;
use num::{One, Zero};
use std::fmt;

/// A segment [i, j] with 1 ≤ i < j.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Seg {
    pub i: usize,
    pub j: usize,
}

impl Seg {
    pub fn new(i: usize, j: usize) -> Self {
        assert!(i >= 1 && i < j, "invalid segment [{i},{j}]");
        Seg { i, j }
    }

    /// Length j - i, always at least 1.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(self) -> usize {
        self.j - self.i
    }

    /// Processing key: by length, then by left endpoint.
    pub fn canonical_key(self) -> (usize, usize) {
        (self.len(), self.i)
    }

    pub fn nests_with(self, other: Seg) -> bool {
        (self.i <= other.i && other.j <= self.j) || (other.i <= self.i && self.j <= other.j)
    }
}

impl fmt::Display for Seg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.i, self.j)
    }
}

/// A set of segments, stored sorted by (length, left endpoint).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SegmentFamily {
    segs: Vec<Seg>,
}

impl SegmentFamily {
    pub fn empty() -> Self {
        SegmentFamily { segs: Vec::new() }
    }

    pub fn new(mut segs: Vec<Seg>) -> Self {
        segs.sort_by_key(|s| s.canonical_key());
        segs.dedup();
        SegmentFamily { segs }
    }

    pub fn segments(&self) -> &[Seg] {
        &self.segs
    }

    pub fn len(&self) -> usize {
        self.segs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.segs.is_empty()
    }

    pub fn contains(&self, s: Seg) -> bool {
        self.segs.contains(&s)
    }

    /// Maximal right endpoint, or 0 when empty.
    pub fn max_endpoint(&self) -> usize {
        self.segs.iter().map(|s| s.j).max().unwrap_or(0)
    }
}

impl fmt::Display for SegmentFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.segs.iter().map(|s| s.to_string()).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// All segments [i, j] ⊆ [1, n] in canonical (length, left endpoint) order.
pub fn all_segments(n: usize) -> Vec<Seg> {
    let mut out = Vec::new();
    for len in 1..n {
        for i in 1..=n - len {
            out.push(Seg::new(i, i + len));
        }
    }
    out
}

/// Membership in R_p: any two segments are disjoint or their (set)
/// intersection is a positive-length segment belonging to the family.
pub fn is_intersection_closed(family: &SegmentFamily) -> bool {
    let segs = family.segments();
    for (k, &a) in segs.iter().enumerate() {
        for &b in &segs[k + 1..] {
            let lo = a.i.max(b.i);
            let hi = a.j.min(b.j);
            if lo > hi {
                continue; // disjoint
            }
            if lo == hi || !family.contains(Seg::new(lo, hi)) {
                return false;
            }
        }
    }
    true
}

/// Membership in R_s: any two segments are disjoint or nested.
pub fn is_laminar(family: &SegmentFamily) -> bool {
    let segs = family.segments();
    for (k, &a) in segs.iter().enumerate() {
        for &b in &segs[k + 1..] {
            let lo = a.i.max(b.i);
            let hi = a.j.min(b.j);
            if lo <= hi && !a.nests_with(b) {
                return false;
            }
        }
    }
    true
}

/// All R_p families on [1, n], by brute-force subset filtering (so counting
/// them genuinely tests the bijection with S_n). Deterministic order: subsets
/// are scanned as bitmasks over the canonical segment order.
pub fn enumerate_rp(n: usize) -> Vec<SegmentFamily> {
    enumerate_filtered(n, is_intersection_closed)
}

/// All R_s families on [1, n].
pub fn enumerate_rs(n: usize) -> Vec<SegmentFamily> {
    enumerate_filtered(n, is_laminar)
}

fn enumerate_filtered(n: usize, pred: impl Fn(&SegmentFamily) -> bool) -> Vec<SegmentFamily> {
    let all = all_segments(n);
    assert!(all.len() < 26, "rank too large for subset enumeration");
    let mut out = Vec::new();
    for mask in 0u64..(1 << all.len()) {
        let segs: Vec<Seg> = all
            .iter()
            .enumerate()
            .filter(|(k, _)| mask >> k & 1 == 1)
            .map(|(_, &s)| s)
            .collect();
        let fam = SegmentFamily::new(segs);
        if pred(&fam) {
            out.push(fam);
        }
    }
    out
}

/// The point x(E): zero outside E, and on E determined by making the
/// canonical single-peak path of every segment tight, solved by increasing
/// segment length.
pub fn tight_point(lambda: &WeightA, family: &SegmentFamily) -> Result<TriangleA, Error> {
    if !is_intersection_closed(family) {
        return Err(Error::NotIntersectionClosed);
    }
    let n = lambda.rank();
    if family.max_endpoint() > n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: family.max_endpoint(),
        });
    }
    let mut x = TriangleA::zero(n);
    for &s in family.segments() {
        let d = peak_path(s.i, s.j, n);
        let m = Rat::from_integer(crate::polytope_a::m_value_a(lambda, &d));
        let known: Rat = d
            .positions()
            .iter()
            .filter(|&&p| p != PosA::new(s.i, s.j))
            .map(|&p| x.get(p).clone())
            .sum();
        x.set(PosA::new(s.i, s.j), m - known);
    }
    Ok(x)
}

/// Ψ: the permutation w(E) = Π (i, j) over [i, j] ∈ E, shorter segments
/// applied first, ties broken lexicographically (equal-length segments of an
/// R_p family are disjoint as transpositions, so the tie-break is inert).
pub fn perm_of_family(family: &SegmentFamily, n: usize) -> Result<PermA, Error> {
    if !is_intersection_closed(family) {
        return Err(Error::NotIntersectionClosed);
    }
    if family.max_endpoint() > n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: family.max_endpoint(),
        });
    }
    let mut w = PermA::identity(n);
    for &s in family.segments() {
        w = PermA::transposition(n, s.i, s.j).compose(&w);
    }
    Ok(w)
}

/// Ψ⁻¹: scans all segments by non-decreasing length (lexicographic within a
/// length), adding [i, j] and left-multiplying by (i, j) whenever
/// u⁻¹(i) < w⁻¹(i) and u⁻¹(j) > w⁻¹(j).
pub fn family_of_perm(w: &PermA) -> SegmentFamily {
    let n = w.n();
    let winv = w.inverse();
    let mut u = PermA::identity(n);
    let mut segs = Vec::new();
    for s in all_segments(n) {
        let uinv = u.inverse();
        if uinv.apply(s.i) < winv.apply(s.i) && uinv.apply(s.j) > winv.apply(s.j) {
            segs.push(s);
            u = PermA::transposition(n, s.i, s.j).compose(&u);
        }
    }
    debug_assert_eq!(u, *w);
    SegmentFamily::new(segs)
}

/// The simplicity criterion on permutations: w⁻¹(j) ≤ i implies
/// w⁻¹(i+1) ≤ j for all 1 ≤ i < j ≤ n.
pub fn is_simple_permutation(w: &PermA) -> bool {
    let winv = w.inverse();
    for i in 1..=w.n() {
        for j in i + 1..=w.n() {
            if winv.apply(j) <= i && winv.apply(i + 1) > j {
                return false;
            }
        }
    }
    true
}

/// The large Schröder numbers 1, 2, 6, 22, 90, …:
/// X_m = X_{m−1} + Σ_{k=0}^{m−1} X_k X_{m−1−k}.
pub fn large_schroder(m: usize) -> Int {
    let mut x: Vec<Int> = vec![Int::one()];
    for t in 1..=m {
        let mut v = x[t - 1].clone();
        for k in 0..t {
            v += &x[k] * &x[t - 1 - k];
        }
        x.push(v);
    }
    x[m].clone()
}

/// The degree statistic b(E) = Σ x(E)_{i,j}.
pub fn pbw_degree(lambda: &WeightA, family: &SegmentFamily) -> Result<Rat, Error> {
    Ok(tight_point(lambda, family)?.sum())
}

/// The generating polynomial Σ_{E ∈ R_p} q^{b(E)} as an exponent →
/// multiplicity table.
pub fn pbw_poly(lambda: &WeightA) -> std::collections::BTreeMap<Int, Int> {
    let mut out = std::collections::BTreeMap::new();
    for family in enumerate_rp(lambda.rank()) {
        let b = pbw_degree(lambda, &family).expect("R_p family");
        assert!(b.denom().is_one(), "integral weights give integral degrees");
        *out.entry(b.to_integer()).or_insert_with(Int::zero) += 1;
    }
    out
}

/// A permutation vertex record: the family, its point, and w(E).
#[derive(Debug, Clone)]
pub struct PermVertex {
    pub family: SegmentFamily,
    pub point: TriangleA,
    pub perm: PermA,
}

/// All permutation vertices x(E), E ∈ R_p.
pub fn permutation_vertices_a(lambda: &WeightA) -> Vec<PermVertex> {
    enumerate_rp(lambda.rank())
        .into_iter()
        .map(|family| {
            let point = tight_point(lambda, &family).expect("R_p family");
            let perm = perm_of_family(&family, lambda.rank()).expect("R_p family");
            PermVertex {
                family,
                point,
                perm,
            }
        })
        .collect()
}

/// All simple vertices x(E), E ∈ R_s. Requires a regular weight.
pub fn simple_vertices_a(lambda: &WeightA) -> Result<Vec<(SegmentFamily, TriangleA)>, Error> {
    if !lambda.is_regular() {
        return Err(Error::SingularWeight);
    }
    Ok(enumerate_rs(lambda.rank())
        .into_iter()
        .map(|family| {
            let point = tight_point(lambda, &family).expect("R_s family");
            (family, point)
        })
        .collect())
}

//! Type C FFLV polytopes for sp_{2n}.
//!
//! Coordinates are indexed by pairs (i, j) with 1 ≤ i < j ≤ 2n + 1 − i, an
//! n² triangle whose bottom boundary is the diagonal i + j = 2n + 1. Dyck
//! paths start on the top row and end on the top row or on the diagonal.
//! The polytope folds onto the mirror-symmetric slice of the type-A polytope
//! of the doubled weight, which is how the segment-family machinery of
//! [`crate::segments`] transfers: symmetric intersection-closed families on
//! [1, 2n] classify the permutation vertices, and their signed permutations
//! w_C(E) realize the point weights.

use crate::error::Error;
use crate::perm::{PermA, SignedPermC};
use crate::polytope_a::{
    positions_a, search_lattice, HRep, PosA, Row, RowKind, RowTag, TriangleA,
};
use crate::rat::{int, is_nonneg, Int, Rat};
use crate::segments::{all_segments, is_intersection_closed, tight_point, Seg, SegmentFamily};
use crate::vertices_a::{antichains_of_poset, walk_nice_tuples, Antichain};
use crate::weights::{WeightA, WeightC};
use num::{One, Zero};
use std::fmt;

/// A coordinate position (i, j), 1 ≤ i < j ≤ 2n + 1 − i, of the type-C
/// triangle for rank n.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PosC {
    pub i: usize,
    pub j: usize,
}

impl PosC {
    pub fn new(i: usize, j: usize, n: usize) -> Self {
        assert!(
            i >= 1 && i < j && i + j <= 2 * n + 1,
            "invalid position ({i},{j}) for rank {n}"
        );
        PosC { i, j }
    }

    pub fn is_diagonal(self, n: usize) -> bool {
        self.i + self.j == 2 * n + 1
    }

    /// Sort key for the canonical flattening order.
    pub fn canonical_key(self) -> (usize, usize) {
        (self.j - self.i, self.i)
    }
}

impl fmt::Display for PosC {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.i, self.j)
    }
}

/// All positions for rank n in canonical (j − i, then i) order.
pub fn positions_c(n: usize) -> Vec<PosC> {
    let mut out = Vec::with_capacity(n * n);
    for len in 1..2 * n {
        for i in 1..=(2 * n + 1 - len) / 2 {
            out.push(PosC::new(i, i + len, n));
        }
    }
    out
}

/// Index of (i, j) in the canonical order for rank n.
pub fn pos_index_c(n: usize, p: PosC) -> usize {
    let len = p.j - p.i;
    let mut offset = 0;
    for l in 1..len {
        offset += (2 * n + 1 - l) / 2;
    }
    offset + p.i - 1
}

/// Ambient dimension n².
pub fn dim_c(n: usize) -> usize {
    n * n
}

/// A rational point of the type-C ambient space, stored in canonical order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriangleC {
    n: usize,
    entries: Vec<Rat>,
}

impl TriangleC {
    pub fn zero(n: usize) -> Self {
        assert!(n >= 1);
        TriangleC {
            n,
            entries: vec![Rat::zero(); dim_c(n)],
        }
    }

    pub fn from_entries(n: usize, entries: Vec<Rat>) -> Result<Self, Error> {
        if entries.len() != dim_c(n) {
            return Err(Error::DimensionMismatch {
                expected: dim_c(n),
                got: entries.len(),
            });
        }
        Ok(TriangleC { n, entries })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, p: PosC) -> &Rat {
        &self.entries[pos_index_c(self.n, p)]
    }

    pub fn set(&mut self, p: PosC, v: Rat) {
        self.entries[pos_index_c(self.n, p)] = v;
    }

    /// Entries in canonical order; this is the flat ambient vector.
    pub fn entries(&self) -> &[Rat] {
        &self.entries
    }

    pub fn is_integral(&self) -> bool {
        self.entries.iter().all(|e| e.denom().is_one())
    }

    pub fn sum(&self) -> Rat {
        self.entries.iter().sum()
    }
}

/// A type-C Dyck path: starts on the top row (j − i = 1), steps by
/// (i, j) → (i+1, j) or (i, j) → (i, j+1), and ends on the top row or on the
/// diagonal i + j = 2n + 1 (diagonal positions admit no further steps).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DyckPathC {
    positions: Vec<PosC>,
}

impl DyckPathC {
    pub fn new(positions: Vec<PosC>, n: usize) -> Result<Self, Error> {
        let bad = |msg: &str| Error::InvalidWeight(format!("invalid Dyck path: {msg}"));
        let first = *positions.first().ok_or_else(|| bad("empty"))?;
        let last = *positions.last().unwrap();
        if positions.iter().any(|p| p.i + p.j > 2 * n + 1) {
            return Err(bad("position out of range"));
        }
        if first.j - first.i != 1 {
            return Err(bad("must start on the top row"));
        }
        if last.j - last.i != 1 && !last.is_diagonal(n) {
            return Err(bad("must end on the top row or the diagonal"));
        }
        for w in positions.windows(2) {
            let (p, q) = (w[0], w[1]);
            let step_up = q.i == p.i + 1 && q.j == p.j;
            let step_right = q.i == p.i && q.j == p.j + 1;
            if !(step_up || step_right) {
                return Err(bad("steps must increment exactly one index"));
            }
        }
        Ok(DyckPathC { positions })
    }

    pub fn positions(&self) -> &[PosC] {
        &self.positions
    }

    pub fn first_i(&self) -> usize {
        self.positions[0].i
    }

    pub fn last_i(&self) -> usize {
        self.positions.last().unwrap().i
    }

    pub fn ends_on_diagonal(&self, n: usize) -> bool {
        self.positions.last().unwrap().is_diagonal(n)
    }
}

impl fmt::Display for DyckPathC {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.positions.iter().map(|p| format!("({p})")).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// All type-C Dyck paths for rank n, ordered lexicographically by start pair
/// and then by step word (up before right).
pub fn enumerate_dyck_paths_c(n: usize) -> Vec<DyckPathC> {
    let mut out = Vec::new();
    let mut stack = Vec::new();
    for i in 1..=n {
        stack.push(PosC::new(i, i + 1, n));
        extend_path_c(n, &mut stack, &mut out);
        stack.pop();
    }
    out
}

fn extend_path_c(n: usize, stack: &mut Vec<PosC>, out: &mut Vec<DyckPathC>) {
    let p = *stack.last().unwrap();
    if p.j - p.i == 1 || p.is_diagonal(n) {
        out.push(DyckPathC {
            positions: stack.clone(),
        });
    }
    if p.i + 1 < p.j && p.i + p.j < 2 * n + 1 {
        stack.push(PosC::new(p.i + 1, p.j, n));
        extend_path_c(n, stack, out);
        stack.pop();
    }
    if p.i + p.j < 2 * n + 1 {
        stack.push(PosC::new(p.i, p.j + 1, n));
        extend_path_c(n, stack, out);
        stack.pop();
    }
}

/// The path bound: a_{i₁} + … + a_{i_N} when the path ends on the top row at
/// (i_N, i_N + 1), and a_{i₁} + … + a_n when it ends on the diagonal.
pub fn m_value_c(lambda: &WeightC, d: &DyckPathC) -> Int {
    let n = lambda.rank();
    let hi = if d.ends_on_diagonal(n) {
        n
    } else {
        d.last_i()
    };
    (d.first_i()..=hi).map(|k| int(lambda.coord(k))).sum()
}

/// The path sum S(x, d).
pub fn s_value_c(x: &TriangleC, d: &DyckPathC) -> Rat {
    d.positions.iter().map(|&p| x.get(p).clone()).sum()
}

/// The canonical single-peak path through (i, j): right along row i to
/// (i, j), then up to (k, j) with k = min(j − 1, 2n + 1 − j), so it ends on
/// whichever of the top row and the diagonal comes first.
pub fn peak_path_c(i: usize, j: usize, n: usize) -> DyckPathC {
    assert!(i >= 1 && i < j && i + j <= 2 * n + 1);
    let k = (j - 1).min(2 * n + 1 - j);
    let mut positions = Vec::new();
    for l in i + 1..=j {
        positions.push(PosC::new(i, l, n));
    }
    for m in i + 1..=k {
        positions.push(PosC::new(m, j, n));
    }
    DyckPathC { positions }
}

/// The halfspace representation: one coordinate row per position (canonical
/// order), then one row per Dyck path (enumeration order).
pub fn hrep_c(lambda: &WeightC) -> HRep {
    let n = lambda.rank();
    let dim = dim_c(n);
    let mut rows = Vec::new();
    for (c, p) in positions_c(n).into_iter().enumerate() {
        let mut normal = vec![0i64; dim];
        normal[c] = -1;
        rows.push(Row {
            normal,
            rhs: Int::zero(),
            kind: RowKind::Coordinate,
            tag: RowTag::CoordC(p),
        });
    }
    for d in enumerate_dyck_paths_c(n) {
        let mut normal = vec![0i64; dim];
        for &p in d.positions() {
            normal[pos_index_c(n, p)] = 1;
        }
        let rhs = m_value_c(lambda, &d);
        rows.push(Row {
            normal,
            rhs,
            kind: RowKind::Path,
            tag: RowTag::PathC(d),
        });
    }
    HRep { dim, rows }
}

/// Membership in the type-C polytope: all coordinates nonnegative and every
/// path sum within its bound.
pub fn contains_c(lambda: &WeightC, x: &TriangleC) -> Result<bool, Error> {
    if x.n() != lambda.rank() {
        return Err(Error::DimensionMismatch {
            expected: dim_c(lambda.rank()),
            got: x.dim(),
        });
    }
    if !x.entries().iter().all(is_nonneg) {
        return Ok(false);
    }
    for d in enumerate_dyck_paths_c(lambda.rank()) {
        if s_value_c(x, &d) > Rat::from_integer(m_value_c(lambda, &d)) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// All lattice points, via the shared box search: coordinate (i, j) ranges
/// over 0 ..= M(λ, d^{i,j}) and partial path sums prune early.
pub fn lattice_points_c(lambda: &WeightC, budget: u64) -> Result<Vec<TriangleC>, Error> {
    let n = lambda.rank();
    let positions = positions_c(n);
    let paths = enumerate_dyck_paths_c(n);
    let bounds: Vec<i64> = positions
        .iter()
        .map(|p| {
            let m = m_value_c(lambda, &peak_path_c(p.i, p.j, n));
            i64::try_from(&m).expect("path bound fits in i64")
        })
        .collect();
    let caps: Vec<i64> = paths
        .iter()
        .map(|d| i64::try_from(&m_value_c(lambda, d)).expect("path bound fits in i64"))
        .collect();
    let mut paths_through = vec![Vec::new(); positions.len()];
    for (pi, d) in paths.iter().enumerate() {
        for &p in d.positions() {
            paths_through[pos_index_c(n, p)].push(pi);
        }
    }
    let mut sums = vec![0i64; paths.len()];
    let mut current = vec![0i64; positions.len()];
    let mut out = Vec::new();
    let mut remaining = budget;
    search_lattice(
        0,
        &bounds,
        &caps,
        &paths_through,
        &mut sums,
        &mut current,
        &mut out,
        &mut remaining,
        budget,
    )?;
    let points = out
        .into_iter()
        .map(|vals| TriangleC {
            n,
            entries: vals.into_iter().map(Rat::from_integer).collect(),
        })
        .collect();
    Ok(points)
}

/// The doubled type-A weight (a₁, …, a_{n−1}, 2a_n, a_{n−1}, …, a₁) of rank
/// 2n whose polytope carries the mirror-symmetric image of the type-C one.
pub fn lambda_bar(lambda: &WeightC) -> WeightA {
    let n = lambda.rank();
    let mut coords = Vec::with_capacity(2 * n - 1);
    coords.extend_from_slice(&lambda.coords()[..n - 1]);
    coords.push(2 * lambda.coord(n));
    coords.extend(lambda.coords()[..n - 1].iter().rev());
    WeightA::new(coords).expect("doubled weight is dominant")
}

/// The zero-padded type-A weight (a₁, …, a_n, 0, …, 0) of rank 2n whose
/// polytope meets the coordinate subspace {x_{i,j} = 0 : i + j > 2n + 1} in
/// an exact copy of the type-C polytope.
pub fn lambda_zero(lambda: &WeightC) -> WeightA {
    let n = lambda.rank();
    let mut coords = Vec::with_capacity(2 * n - 1);
    coords.extend_from_slice(lambda.coords());
    coords.resize(2 * n - 1, 0);
    WeightA::new(coords).expect("padded weight is dominant")
}

/// Whether a rank-m type-A triangle is fixed by the reflection
/// (i, j) ↦ (m + 1 − j, m + 1 − i).
pub fn is_mirror_symmetric(y: &TriangleA) -> bool {
    let m = y.n();
    positions_a(m)
        .into_iter()
        .all(|p| y.get(p) == y.get(PosA::new(m + 1 - p.j, m + 1 - p.i)))
}

/// The unfolding φ of a type-C triangle into a mirror-symmetric type-A
/// triangle of rank 2n: entries above the diagonal are copied, diagonal
/// entries are doubled, and entries below are filled in by reflection.
pub fn phi(x: &TriangleC) -> TriangleA {
    let n = x.n();
    let m = 2 * n;
    let mut y = TriangleA::zero(m);
    for p in positions_a(m) {
        let s = p.i + p.j;
        let v = if s < m + 1 {
            x.get(PosC::new(p.i, p.j, n)).clone()
        } else if s == m + 1 {
            x.get(PosC::new(p.i, p.j, n)) * int(2)
        } else {
            x.get(PosC::new(m + 1 - p.j, m + 1 - p.i, n)).clone()
        };
        y.set(p, v);
    }
    y
}

/// The folding φ⁻¹: requires a mirror-symmetric rank-2n triangle, copies the
/// strictly upper entries, and halves the diagonal ones.
pub fn phi_inv(y: &TriangleA) -> Result<TriangleC, Error> {
    let m = y.n();
    assert!(m >= 2 && m.is_multiple_of(2), "ambient rank must be even");
    if !is_mirror_symmetric(y) {
        return Err(Error::AsymmetricPoint);
    }
    let n = m / 2;
    let mut x = TriangleC::zero(n);
    for p in positions_c(n) {
        let v = y.get(PosA::new(p.i, p.j));
        if p.is_diagonal(n) {
            x.set(p, v / int(2));
        } else {
            x.set(p, v.clone());
        }
    }
    Ok(x)
}

/// Q^C_i: the rank-2n straddling positions (k, l), k ≤ i < l, that satisfy
/// k + l ≤ 2n + 1, for 1 ≤ i ≤ n. These double as type-C positions.
pub fn straddling_positions_c(n: usize, i: usize) -> Vec<PosA> {
    assert!(i >= 1 && i <= n);
    crate::polytope_a::straddling_positions(2 * n, i)
        .into_iter()
        .filter(|p| p.i + p.j <= 2 * n + 1)
        .collect()
}

/// All antichains of Q^C_i.
pub fn antichains_of_qci(n: usize, i: usize) -> Vec<Antichain> {
    antichains_of_poset(&straddling_positions_c(n, i))
}

/// The point Σ a_i χ_{A_i} of an antichain tuple, in type-C coordinates.
pub fn tuple_point_c(lambda: &WeightC, tuple: &[Antichain]) -> TriangleC {
    let n = lambda.rank();
    assert_eq!(tuple.len(), n);
    let mut x = TriangleC::zero(n);
    for (k, a) in tuple.iter().enumerate() {
        let coeff = lambda.coord(k + 1);
        if coeff == 0 {
            continue;
        }
        for &p in a.elements() {
            let q = PosC::new(p.i, p.j, n);
            let v = x.get(q) + Rat::from_integer(int(coeff));
            x.set(q, v);
        }
    }
    x
}

/// A type-C vertex with its canonical antichain-tuple certificate.
#[derive(Debug, Clone)]
pub struct VertexC {
    pub certificate: Vec<Antichain>,
    pub point: TriangleC,
}

/// All vertices of the type-C polytope: antichain tuples (A_1, …, A_n) over
/// the Q^C_i whose adjacent pairs all pass the pair-graph test, deduplicated
/// like the type-A enumeration.
pub fn enumerate_vertices_c(lambda: &WeightC) -> Vec<VertexC> {
    let n = lambda.rank();
    let lists: Vec<Vec<Antichain>> = (1..=n).map(|i| antichains_of_qci(n, i)).collect();
    let mut out = Vec::new();
    walk_nice_tuples(lambda.coords(), &lists, &mut |tuple| {
        out.push(VertexC {
            certificate: tuple.to_vec(),
            point: tuple_point_c(lambda, tuple),
        });
    });
    out
}

/// The mirror image [2n + 1 − j, 2n + 1 − i] of a segment of [1, 2n].
pub fn mirror_seg(s: Seg, n: usize) -> Seg {
    assert!(s.j <= 2 * n);
    Seg::new(2 * n + 1 - s.j, 2 * n + 1 - s.i)
}

/// Whether a family of segments of [1, 2n] is fixed by the mirror.
pub fn is_symmetric_family(family: &SegmentFamily, n: usize) -> bool {
    family.max_endpoint() <= 2 * n
        && family
            .segments()
            .iter()
            .all(|&s| family.contains(mirror_seg(s, n)))
}

/// All mirror-symmetric intersection-closed families on [1, 2n], enumerated
/// as subsets of the mirror orbits (each orbit is represented by its segment
/// with i + j ≤ 2n + 1, taken in canonical order).
pub fn enumerate_symmetric_rp(n: usize) -> Vec<SegmentFamily> {
    let reps: Vec<Seg> = all_segments(2 * n)
        .into_iter()
        .filter(|s| s.i + s.j <= 2 * n + 1)
        .collect();
    assert!(reps.len() <= 16, "rank too large for orbit enumeration");
    let mut out = Vec::new();
    for mask in 0u64..(1 << reps.len()) {
        let mut segs = Vec::new();
        for (k, &s) in reps.iter().enumerate() {
            if mask >> k & 1 == 1 {
                segs.push(s);
                let m = mirror_seg(s, n);
                if m != s {
                    segs.push(m);
                }
            }
        }
        let fam = SegmentFamily::new(segs);
        if is_intersection_closed(&fam) {
            out.push(fam);
        }
    }
    out
}

/// Membership in the type-C simple class: symmetric, intersection-closed, and
/// any two segments of the upper half (both with i + j ≤ 2n + 1) are nested
/// or disjoint. Lower-half pairs are mirrors of upper-half ones, and mixed
/// pairs impose nothing.
pub fn is_type_c_laminar(family: &SegmentFamily, n: usize) -> bool {
    if !is_symmetric_family(family, n) || !is_intersection_closed(family) {
        return false;
    }
    let upper: Vec<Seg> = family
        .segments()
        .iter()
        .copied()
        .filter(|s| s.i + s.j <= 2 * n + 1)
        .collect();
    for (k, &a) in upper.iter().enumerate() {
        for &b in &upper[k + 1..] {
            let lo = a.i.max(b.i);
            let hi = a.j.min(b.j);
            if lo <= hi && !a.nests_with(b) {
                return false;
            }
        }
    }
    true
}

/// The signed permutation w_C(E) of a symmetric intersection-closed family:
/// the product of one factor per upper-half segment, shortest first. A
/// segment [i, j] with j ≤ n contributes the plain transposition (i, j); one
/// with i + j < 2n + 1 < j + j contributes the transposition (i, 2n + 1 − j)
/// together with sign flips at both entries; a diagonal segment
/// (i + j = 2n + 1) contributes a single sign flip at i.
pub fn signed_perm_of_family(family: &SegmentFamily, n: usize) -> Result<SignedPermC, Error> {
    if !is_symmetric_family(family, n) {
        return Err(Error::NotSymmetric);
    }
    if !is_intersection_closed(family) {
        return Err(Error::NotIntersectionClosed);
    }
    let mut w = SignedPermC::identity(n);
    for s in family
        .segments()
        .iter()
        .filter(|s| s.i + s.j <= 2 * n + 1)
    {
        let factor = if s.j <= n {
            SignedPermC::new(PermA::transposition(n, s.i, s.j), vec![1; n])
        } else if s.i + s.j < 2 * n + 1 {
            let jbar = 2 * n + 1 - s.j;
            let mut signs = vec![1i8; n];
            signs[s.i - 1] = -1;
            signs[jbar - 1] = -1;
            SignedPermC::new(PermA::transposition(n, s.i, jbar), signs)
        } else {
            let mut signs = vec![1i8; n];
            signs[s.i - 1] = -1;
            SignedPermC::new(PermA::identity(n), signs)
        };
        w = factor.compose(&w);
    }
    Ok(w)
}

/// The rank-2n permutation acting on ε₁, …, ε_{2n} that restricts to the
/// signed permutation under ε_{2n+1−i} = −ε_i: position i maps to σ(i) when
/// the sign there is positive and to the mirror index otherwise, and the
/// lower half is forced by symmetry.
pub fn embed_signed_perm(w: &SignedPermC) -> PermA {
    let n = w.n();
    let mut images = vec![0usize; 2 * n];
    for i in 1..=n {
        let target = w.sigma.apply(i);
        let img = if w.signs[target - 1] == 1 {
            target
        } else {
            2 * n + 1 - target
        };
        images[i - 1] = img;
        images[2 * n - i] = 2 * n + 1 - img;
    }
    PermA::from_images(images).expect("mirror extension is a permutation")
}

/// The inverse of [`signed_perm_of_family`], computed through the rank-2n
/// embedding and the type-A inverse scan. The result is always symmetric and
/// intersection-closed.
pub fn family_of_signed_perm(w: &SignedPermC) -> SegmentFamily {
    crate::segments::family_of_perm(&embed_signed_perm(w))
}

/// The point x(E): the type-A tight point of the doubled weight, folded back
/// into type-C coordinates.
pub fn tight_point_c(lambda: &WeightC, family: &SegmentFamily) -> Result<TriangleC, Error> {
    let n = lambda.rank();
    if !is_symmetric_family(family, n) {
        return Err(Error::NotSymmetric);
    }
    let y = tight_point(&lambda_bar(lambda), family)?;
    phi_inv(&y)
}

/// A permutation vertex record: the symmetric family, its point, and w_C(E).
#[derive(Debug, Clone)]
pub struct PermVertexC {
    pub family: SegmentFamily,
    pub point: TriangleC,
    pub perm: SignedPermC,
}

/// All permutation vertices x(E) over the symmetric intersection-closed
/// families.
pub fn permutation_vertices_c(lambda: &WeightC) -> Vec<PermVertexC> {
    let n = lambda.rank();
    enumerate_symmetric_rp(n)
        .into_iter()
        .map(|family| {
            let point = tight_point_c(lambda, &family).expect("symmetric family");
            let perm = signed_perm_of_family(&family, n).expect("symmetric family");
            PermVertexC {
                family,
                point,
                perm,
            }
        })
        .collect()
}

/// All simple vertices x(E), E ranging over the type-C laminar families.
/// Requires a regular weight.
pub fn simple_vertices_c(lambda: &WeightC) -> Result<Vec<(SegmentFamily, TriangleC)>, Error> {
    if !lambda.is_regular() {
        return Err(Error::SingularWeight);
    }
    let n = lambda.rank();
    Ok(enumerate_symmetric_rp(n)
        .into_iter()
        .filter(|f| is_type_c_laminar(f, n))
        .map(|family| {
            let point = tight_point_c(lambda, &family).expect("symmetric family");
            (family, point)
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, rat_frac};
    use crate::weights::{act_signed_perm_c, weight_of_point_c};

    fn wc(coords: &[i64]) -> WeightC {
        WeightC::new(coords.to_vec()).unwrap()
    }

    fn fam(segs: &[(usize, usize)]) -> SegmentFamily {
        SegmentFamily::new(segs.iter().map(|&(i, j)| Seg::new(i, j)).collect())
    }

    fn point(n: usize, entries: &[i64]) -> TriangleC {
        TriangleC::from_entries(
            n,
            entries.iter().map(|&v| rat(v)).collect(),
        )
        .unwrap()
    }

    #[test]
    fn positions_and_indexing() {
        for n in 1..=4 {
            let ps = positions_c(n);
            assert_eq!(ps.len(), n * n);
            for (k, &p) in ps.iter().enumerate() {
                assert_eq!(pos_index_c(n, p), k);
            }
        }
        let rendered: Vec<(usize, usize)> =
            positions_c(2).iter().map(|p| (p.i, p.j)).collect();
        assert_eq!(rendered, vec![(1, 2), (2, 3), (1, 3), (1, 4)]);
        let rendered: Vec<(usize, usize)> =
            positions_c(3).iter().map(|p| (p.i, p.j)).collect();
        assert_eq!(
            rendered,
            vec![
                (1, 2),
                (2, 3),
                (3, 4),
                (1, 3),
                (2, 4),
                (1, 4),
                (2, 5),
                (1, 5),
                (1, 6),
            ]
        );
    }

    #[test]
    fn dyck_path_counts_c() {
        assert_eq!(enumerate_dyck_paths_c(1).len(), 1);
        assert_eq!(enumerate_dyck_paths_c(2).len(), 4);
        assert_eq!(enumerate_dyck_paths_c(3).len(), 12);
    }

    #[test]
    fn dyck_paths_c_n2_list() {
        let paths = enumerate_dyck_paths_c(2);
        let as_pairs: Vec<Vec<(usize, usize)>> = paths
            .iter()
            .map(|d| d.positions().iter().map(|p| (p.i, p.j)).collect())
            .collect();
        assert_eq!(
            as_pairs,
            vec![
                vec![(1, 2)],
                vec![(1, 2), (1, 3), (2, 3)],
                vec![(1, 2), (1, 3), (1, 4)],
                vec![(2, 3)],
            ]
        );
    }

    #[test]
    fn path_validation_c() {
        let mk = |pts: &[(usize, usize)], n: usize| {
            DyckPathC::new(pts.iter().map(|&(i, j)| PosC { i, j }).collect(), n)
        };
        assert!(mk(&[(1, 2), (1, 3)], 2).is_err()); // ends off both boundaries
        assert!(mk(&[(1, 3), (1, 4)], 2).is_err()); // starts off the top row
        assert!(mk(&[(1, 2), (2, 3)], 2).is_err()); // not a unit step
        assert!(mk(&[(1, 2), (1, 3), (1, 4), (1, 5)], 2).is_err()); // off range
        assert!(mk(&[(2, 3)], 2).is_ok());
        assert!(mk(&[(1, 2), (1, 3), (1, 4)], 2).is_ok());
        assert!(mk(&[(1, 2), (1, 3), (2, 3)], 3).is_ok()); // top row end
    }

    #[test]
    fn m_values_c() {
        let caps = |coords: &[i64]| -> Vec<Int> {
            let lambda = wc(coords);
            enumerate_dyck_paths_c(2)
                .iter()
                .map(|d| m_value_c(&lambda, d))
                .collect()
        };
        assert_eq!(caps(&[1, 0]), vec![int(1), int(1), int(1), int(0)]);
        assert_eq!(caps(&[0, 1]), vec![int(0), int(1), int(1), int(1)]);
        assert_eq!(caps(&[1, 1]), vec![int(1), int(2), int(2), int(1)]);
    }

    #[test]
    fn peak_paths_c() {
        let shape = |i, j, n| -> Vec<(usize, usize)> {
            peak_path_c(i, j, n)
                .positions()
                .iter()
                .map(|p| (p.i, p.j))
                .collect()
        };
        assert_eq!(shape(1, 3, 2), vec![(1, 2), (1, 3), (2, 3)]);
        assert_eq!(shape(1, 4, 2), vec![(1, 2), (1, 3), (1, 4)]);
        assert_eq!(shape(2, 3, 2), vec![(2, 3)]);
        assert_eq!(shape(2, 4, 3), vec![(2, 3), (2, 4), (3, 4)]);
        assert_eq!(shape(2, 5, 3), vec![(2, 3), (2, 4), (2, 5)]);
    }

    #[test]
    fn hrep_c_shape() {
        let h = hrep_c(&wc(&[1, 1]));
        assert_eq!(h.dim, 4);
        assert_eq!(h.rows.len(), 8);
        assert!(h.rows[..4].iter().all(|r| r.kind == RowKind::Coordinate));
        assert!(h.rows[4..].iter().all(|r| r.kind == RowKind::Path));
        // the folded long path hits (1,2), (1,3), (2,3)
        assert_eq!(h.rows[5].normal, vec![1, 1, 1, 0]);
        assert_eq!(h.rows[5].rhs, int(2));
    }

    #[test]
    fn containment_c() {
        let lambda = wc(&[1, 1]);
        assert!(contains_c(&lambda, &point(2, &[0, 1, 1, 0])).unwrap());
        assert!(contains_c(&lambda, &point(2, &[0, 1, 1, 1])).unwrap());
        assert!(!contains_c(&lambda, &point(2, &[0, 2, 0, 0])).unwrap());
        assert!(!contains_c(&lambda, &point(2, &[0, 0, -1, 0])).unwrap());
        let mut frac = TriangleC::zero(2);
        frac.set(PosC::new(2, 3, 2), rat_frac(1, 2));
        frac.set(PosC::new(1, 3, 2), rat_frac(3, 2));
        assert!(contains_c(&lambda, &frac).unwrap());
        frac.set(PosC::new(1, 2, 2), rat_frac(1, 2));
        assert!(!contains_c(&lambda, &frac).unwrap());
        assert!(contains_c(&wc(&[1]), &TriangleC::zero(2)).is_err());
    }

    #[test]
    fn lattice_counts_match_dimensions() {
        assert_eq!(lattice_points_c(&wc(&[1, 0]), 1 << 20).unwrap().len(), 4);
        assert_eq!(lattice_points_c(&wc(&[0, 1]), 1 << 20).unwrap().len(), 5);
        assert_eq!(lattice_points_c(&wc(&[1, 1]), 1 << 20).unwrap().len(), 16);
        assert_eq!(lattice_points_c(&wc(&[2]), 1 << 20).unwrap().len(), 3);
        for x in lattice_points_c(&wc(&[1, 1]), 1 << 20).unwrap() {
            assert!(contains_c(&wc(&[1, 1]), &x).unwrap());
            assert!(x.is_integral());
        }
        assert!(matches!(
            lattice_points_c(&wc(&[2, 2]), 5),
            Err(Error::BudgetExceeded { budget: 5 })
        ));
    }

    #[test]
    fn folding_round_trips() {
        let x = point(2, &[0, 1, 1, 0]);
        let y = phi(&x);
        assert_eq!(y.n(), 4);
        // rank-4 order: (1,2), (2,3), (3,4), (1,3), (2,4), (1,4)
        let rendered: Vec<Rat> = y.entries().to_vec();
        assert_eq!(
            rendered,
            vec![rat(0), rat(2), rat(0), rat(1), rat(1), rat(0)]
        );
        assert!(is_mirror_symmetric(&y));
        assert_eq!(phi_inv(&y).unwrap(), x);

        let mut bad = y.clone();
        bad.set(PosA::new(1, 2), rat(5));
        assert_eq!(phi_inv(&bad), Err(Error::AsymmetricPoint));
    }

    #[test]
    fn weight_doublings() {
        assert_eq!(lambda_bar(&wc(&[1, 1])).coords(), &[1, 2, 1]);
        assert_eq!(lambda_bar(&wc(&[1, 0])).coords(), &[1, 0, 1]);
        assert_eq!(lambda_bar(&wc(&[2])).coords(), &[4]);
        assert_eq!(lambda_zero(&wc(&[1, 1])).coords(), &[1, 1, 0]);
        assert_eq!(lambda_zero(&wc(&[3, 2, 1])).coords(), &[3, 2, 1, 0, 0]);
    }

    #[test]
    fn membership_matches_both_unfoldings() {
        let lambda = wc(&[1, 1]);
        let bar = lambda_bar(&lambda);
        let zero = lambda_zero(&lambda);
        let mut samples = lattice_points_c(&lambda, 1 << 20).unwrap();
        samples.push(point(2, &[1, 1, 1, 0]));
        samples.push(point(2, &[0, 0, 2, 1]));
        let mut frac = TriangleC::zero(2);
        frac.set(PosC::new(1, 3, 2), rat_frac(3, 2));
        frac.set(PosC::new(1, 4, 2), rat_frac(1, 2));
        samples.push(frac);
        for x in samples {
            let inside = contains_c(&lambda, &x).unwrap();
            let unfolded = phi(&x);
            assert_eq!(
                crate::polytope_a::contains_a(&bar, &unfolded).unwrap(),
                inside
            );
            // zero-extend into the rank-4 polytope of the padded weight
            let mut padded = TriangleA::zero(4);
            for p in positions_c(2) {
                padded.set(PosA::new(p.i, p.j), x.get(p).clone());
            }
            assert_eq!(
                crate::polytope_a::contains_a(&zero, &padded).unwrap(),
                inside
            );
        }
    }

    #[test]
    fn straddling_sets_c() {
        let q2: Vec<(usize, usize)> = straddling_positions_c(2, 2)
            .iter()
            .map(|p| (p.i, p.j))
            .collect();
        assert_eq!(q2, vec![(2, 3), (1, 3), (1, 4)]);
        assert_eq!(straddling_positions_c(3, 1).len(), 5);
        assert_eq!(straddling_positions_c(3, 2).len(), 7);
        assert_eq!(straddling_positions_c(3, 3).len(), 6);
        assert_eq!(antichains_of_qci(2, 2).len(), 5);
    }

    #[test]
    fn vertex_counts_c() {
        assert_eq!(enumerate_vertices_c(&wc(&[1])).len(), 2);
        assert_eq!(enumerate_vertices_c(&wc(&[1, 0])).len(), 4);
        assert_eq!(enumerate_vertices_c(&wc(&[0, 1])).len(), 5);
        assert_eq!(enumerate_vertices_c(&wc(&[1, 1])).len(), 12);
        assert_eq!(enumerate_vertices_c(&wc(&[2, 1])).len(), 12);
    }

    #[test]
    fn vertices_c_are_distinct_and_inside() {
        for coords in [vec![1, 0], vec![0, 1], vec![1, 1], vec![2, 1]] {
            let lambda = wc(&coords);
            let verts = enumerate_vertices_c(&lambda);
            let mut pts: Vec<Vec<Rat>> =
                verts.iter().map(|v| v.point.entries().to_vec()).collect();
            let before = pts.len();
            pts.sort();
            pts.dedup();
            assert_eq!(pts.len(), before, "duplicate points for {coords:?}");
            for v in &verts {
                assert!(contains_c(&lambda, &v.point).unwrap());
                assert!(v.point.is_integral());
            }
        }
    }

    #[test]
    fn symmetric_family_counts() {
        let mut expected = 1u64;
        for n in 1..=4 {
            expected *= 2 * n as u64;
            assert_eq!(
                enumerate_symmetric_rp(n).len() as u64,
                expected,
                "n = {n}"
            );
        }
    }

    #[test]
    fn symmetric_families_n2_in_order() {
        let families = enumerate_symmetric_rp(2);
        let expected: Vec<SegmentFamily> = vec![
            fam(&[]),
            fam(&[(1, 2), (3, 4)]),
            fam(&[(2, 3)]),
            fam(&[(2, 3), (1, 3), (2, 4)]),
            fam(&[(1, 4)]),
            fam(&[(1, 2), (3, 4), (1, 4)]),
            fam(&[(2, 3), (1, 4)]),
            fam(&[(2, 3), (1, 3), (2, 4), (1, 4)]),
        ];
        assert_eq!(families, expected);
        for f in &families {
            assert!(is_symmetric_family(f, 2));
        }
        assert!(!is_symmetric_family(&fam(&[(1, 2)]), 2));
    }

    #[test]
    fn type_c_laminar_families() {
        for f in enumerate_symmetric_rp(2) {
            assert!(is_type_c_laminar(&f, 2), "{f}");
        }
        // crossing upper-half pair [1,4] × [2,5] inside a symmetric closure
        let crossing = fam(&[(1, 4), (3, 6), (2, 5), (2, 4), (3, 5), (3, 4)]);
        assert!(is_symmetric_family(&crossing, 3));
        assert!(is_intersection_closed(&crossing));
        assert!(!is_type_c_laminar(&crossing, 3));
        assert!(is_type_c_laminar(&fam(&[(1, 2), (5, 6)]), 3));
        let n3 = enumerate_symmetric_rp(3);
        let laminar = n3.iter().filter(|f| is_type_c_laminar(f, 3)).count();
        assert!(laminar < n3.len());
        assert!(n3.contains(&crossing));
    }

    #[test]
    fn signed_perms_of_families() {
        let sp = |segs: &[(usize, usize)], n: usize| {
            signed_perm_of_family(&fam(segs), n).unwrap()
        };
        assert_eq!(
            sp(&[(1, 2)], 1),
            SignedPermC::new(PermA::identity(1), vec![-1])
        );
        assert_eq!(
            sp(&[(1, 2), (3, 4)], 2),
            SignedPermC::new(PermA::transposition(2, 1, 2), vec![1, 1])
        );
        assert_eq!(
            sp(&[(2, 3)], 2),
            SignedPermC::new(PermA::identity(2), vec![1, -1])
        );
        assert_eq!(
            sp(&[(1, 4)], 2),
            SignedPermC::new(PermA::identity(2), vec![-1, 1])
        );
        assert_eq!(
            sp(&[(2, 3), (1, 3), (2, 4)], 2),
            SignedPermC::new(PermA::transposition(2, 1, 2), vec![1, -1])
        );
        assert_eq!(
            sp(&[(2, 3), (1, 3), (2, 4), (1, 4)], 2),
            SignedPermC::new(PermA::transposition(2, 1, 2), vec![-1, -1])
        );
        assert_eq!(
            signed_perm_of_family(&fam(&[(1, 2)]), 2),
            Err(Error::NotSymmetric)
        );
        assert_eq!(
            signed_perm_of_family(&fam(&[(1, 3), (2, 4)]), 2),
            Err(Error::NotIntersectionClosed)
        );
    }

    #[test]
    fn embedding_matches_type_a_permutation() {
        for n in 1..=3 {
            for family in enumerate_symmetric_rp(n) {
                let w = signed_perm_of_family(&family, n).unwrap();
                let via_a = crate::segments::perm_of_family(&family, 2 * n).unwrap();
                assert_eq!(embed_signed_perm(&w), via_a, "E = {family}");
                assert!(via_a.is_mirror_symmetric());
            }
        }
    }

    #[test]
    fn signed_bijection_round_trips() {
        for n in 1..=3 {
            let families = enumerate_symmetric_rp(n);
            let mut seen = std::collections::HashSet::new();
            for family in &families {
                let w = signed_perm_of_family(family, n).unwrap();
                assert_eq!(&family_of_signed_perm(&w), family, "E = {family}");
                seen.insert((w.sigma.images().to_vec(), w.signs.clone()));
            }
            assert_eq!(seen.len(), families.len());
        }
    }

    #[test]
    fn tight_points_c() {
        let lambda = wc(&[1, 1]);
        let x = tight_point_c(&lambda, &fam(&[(2, 3), (1, 3), (2, 4)])).unwrap();
        assert_eq!(x, point(2, &[0, 1, 1, 0]));
        let x = tight_point_c(&lambda, &fam(&[(2, 3), (1, 3), (2, 4), (1, 4)])).unwrap();
        assert_eq!(x, point(2, &[0, 1, 1, 1]));
        let x = tight_point_c(&lambda, &fam(&[(1, 4)])).unwrap();
        assert_eq!(x, point(2, &[0, 0, 0, 2]));
        let x = tight_point_c(&lambda, &fam(&[(2, 3)])).unwrap();
        assert_eq!(x, point(2, &[0, 1, 0, 0]));
        assert_eq!(
            tight_point_c(&lambda, &fam(&[(1, 2)])),
            Err(Error::NotSymmetric)
        );
        assert_eq!(
            tight_point_c(&lambda, &fam(&[(1, 3), (2, 4)])),
            Err(Error::NotIntersectionClosed)
        );
    }

    #[test]
    fn point_weights_match_signed_action() {
        let lambda = wc(&[1, 1]);
        for v in permutation_vertices_c(&lambda) {
            let mu = weight_of_point_c(&lambda, &v.point);
            assert_eq!(mu, act_signed_perm_c(&v.perm, &lambda), "E = {}", v.family);
        }
    }

    #[test]
    fn permutation_vertices_c_are_vertices() {
        let lambda = wc(&[1, 1]);
        let verts = permutation_vertices_c(&lambda);
        assert_eq!(verts.len(), 8);
        let all: std::collections::HashSet<Vec<Rat>> = enumerate_vertices_c(&lambda)
            .into_iter()
            .map(|v| v.point.entries().to_vec())
            .collect();
        let mut pts: Vec<Vec<Rat>> = verts.iter().map(|v| v.point.entries().to_vec()).collect();
        for p in &pts {
            assert!(all.contains(p));
        }
        pts.sort();
        pts.dedup();
        assert_eq!(pts.len(), 8);
    }

    #[test]
    fn distinct_points_for_regular_weights_c() {
        let lambda = wc(&[1, 1, 1]);
        let verts = permutation_vertices_c(&lambda);
        assert_eq!(verts.len(), 48);
        let mut pts: Vec<Vec<Rat>> = verts.iter().map(|v| v.point.entries().to_vec()).collect();
        pts.sort();
        pts.dedup();
        assert_eq!(pts.len(), 48);
        for v in permutation_vertices_c(&lambda) {
            assert!(contains_c(&lambda, &v.point).unwrap());
            assert!(v.point.is_integral());
        }
    }

    #[test]
    fn simple_vertices_c_for_rank_two() {
        let verts = simple_vertices_c(&wc(&[1, 1])).unwrap();
        assert_eq!(verts.len(), 8);
        assert_eq!(
            simple_vertices_c(&wc(&[1, 0])),
            Err(Error::SingularWeight)
        );
    }
}

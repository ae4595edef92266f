//! Type A FFLV polytopes: triangular coordinate arrays, Dyck paths, the
//! halfspace representation, membership, and lattice point enumeration.
//!
//! Coordinates are indexed by pairs (i, j) with 1 ≤ i < j ≤ n. The canonical
//! flattening order sorts pairs by (j − i, then i), so the top row (j − i = 1)
//! comes first.

use crate::error::Error;
use crate::rat::{int, is_nonneg, Int, Rat};
use crate::weights::WeightA;
use num::{One, Zero};
use std::fmt;

/// A coordinate position (i, j), 1 ≤ i < j ≤ n, of the type-A triangle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PosA {
    pub i: usize,
    pub j: usize,
}

impl PosA {
    pub fn new(i: usize, j: usize) -> Self {
        assert!(i >= 1 && i < j, "invalid position ({i},{j})");
        PosA { i, j }
    }

    /// Componentwise order: (i, j) ⪯ (k, l) iff i ≤ k and j ≤ l.
    pub fn preceq(self, other: PosA) -> bool {
        self.i <= other.i && self.j <= other.j
    }

    pub fn comparable(self, other: PosA) -> bool {
        self.preceq(other) || other.preceq(self)
    }

    /// Sort key for the canonical flattening order.
    pub fn canonical_key(self) -> (usize, usize) {
        (self.j - self.i, self.i)
    }
}

impl fmt::Display for PosA {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.i, self.j)
    }
}

/// All positions for rank n in canonical order.
pub fn positions_a(n: usize) -> Vec<PosA> {
    let mut out = Vec::with_capacity(n * (n - 1) / 2);
    for len in 1..n {
        for i in 1..=n - len {
            out.push(PosA::new(i, i + len));
        }
    }
    out
}

/// Index of (i, j) in the canonical order for rank n.
pub fn pos_index_a(n: usize, p: PosA) -> usize {
    debug_assert!(p.j <= n);
    let len = p.j - p.i;
    (len - 1) * n - len * (len - 1) / 2 + p.i - 1
}

/// Ambient dimension n(n−1)/2.
pub fn dim_a(n: usize) -> usize {
    n * (n - 1) / 2
}

/// Q_i: the positions (k, l) with k ≤ i < l, in canonical order.
pub fn straddling_positions(n: usize, i: usize) -> Vec<PosA> {
    assert!(i >= 1 && i < n);
    let mut out: Vec<PosA> = positions_a(n)
        .into_iter()
        .filter(|p| p.i <= i && i < p.j)
        .collect();
    out.sort_by_key(|p| p.canonical_key());
    out
}

/// A rational point of the ambient space, stored in canonical order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriangleA {
    n: usize,
    entries: Vec<Rat>,
}

impl TriangleA {
    pub fn zero(n: usize) -> Self {
        assert!(n >= 2);
        TriangleA {
            n,
            entries: vec![Rat::zero(); dim_a(n)],
        }
    }

    pub fn from_entries(n: usize, entries: Vec<Rat>) -> Result<Self, Error> {
        if entries.len() != dim_a(n) {
            return Err(Error::DimensionMismatch {
                expected: dim_a(n),
                got: entries.len(),
            });
        }
        Ok(TriangleA { n, entries })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, p: PosA) -> &Rat {
        &self.entries[pos_index_a(self.n, p)]
    }

    pub fn set(&mut self, p: PosA, v: Rat) {
        self.entries[pos_index_a(self.n, p)] = v;
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

    pub fn add(&self, other: &TriangleA) -> TriangleA {
        assert_eq!(self.n, other.n);
        TriangleA {
            n: self.n,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

/// A Dyck path: a sequence of positions starting and ending on the top row
/// (j − i = 1), each step being (i, j) → (i+1, j) or (i, j) → (i, j+1).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DyckPathA {
    positions: Vec<PosA>,
}

impl DyckPathA {
    pub fn new(positions: Vec<PosA>, n: usize) -> Result<Self, Error> {
        let bad = |msg: &str| Error::InvalidWeight(format!("invalid Dyck path: {msg}"));
        let first = *positions.first().ok_or_else(|| bad("empty"))?;
        let last = *positions.last().unwrap();
        if first.j - first.i != 1 || last.j - last.i != 1 {
            return Err(bad("must start and end on the top row"));
        }
        for w in positions.windows(2) {
            let (p, q) = (w[0], w[1]);
            let step_up = q.i == p.i + 1 && q.j == p.j;
            let step_right = q.i == p.i && q.j == p.j + 1;
            if !(step_up || step_right) {
                return Err(bad("steps must increment exactly one index"));
            }
        }
        if positions.iter().any(|p| p.j > n) {
            return Err(bad("position out of range"));
        }
        Ok(DyckPathA { positions })
    }

    pub fn positions(&self) -> &[PosA] {
        &self.positions
    }

    pub fn first_i(&self) -> usize {
        self.positions[0].i
    }

    pub fn last_i(&self) -> usize {
        self.positions.last().unwrap().i
    }

    /// Peaks: positions (i, j) preceded by (i, j−1) and followed by (i+1, j).
    pub fn peaks(&self) -> Vec<PosA> {
        self.interior_turns(true)
    }

    /// Valleys: positions (i, j) preceded by (i−1, j) and followed by (i, j+1).
    pub fn valleys(&self) -> Vec<PosA> {
        self.interior_turns(false)
    }

    fn interior_turns(&self, peak: bool) -> Vec<PosA> {
        let mut out = Vec::new();
        for k in 1..self.positions.len().saturating_sub(1) {
            let (p, q, r) = (
                self.positions[k - 1],
                self.positions[k],
                self.positions[k + 1],
            );
            let before_right = q.i == p.i && q.j == p.j + 1;
            let after_up = r.i == q.i + 1 && r.j == q.j;
            let before_up = q.i == p.i + 1 && q.j == p.j;
            let after_right = r.i == q.i && r.j == q.j + 1;
            if peak && before_right && after_up {
                out.push(q);
            }
            if !peak && before_up && after_right {
                out.push(q);
            }
        }
        out
    }
}

impl fmt::Display for DyckPathA {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.positions.iter().map(|p| format!("({p})")).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// All Dyck paths for rank n, ordered lexicographically by start pair and
/// then by step word (an up step (i+1, j) sorts before a right step (i, j+1)).
pub fn enumerate_dyck_paths_a(n: usize) -> Vec<DyckPathA> {
    let mut out = Vec::new();
    let mut stack = Vec::new();
    for i in 1..n {
        stack.push(PosA::new(i, i + 1));
        extend_path_a(n, &mut stack, &mut out);
        stack.pop();
    }
    out
}

fn extend_path_a(n: usize, stack: &mut Vec<PosA>, out: &mut Vec<DyckPathA>) {
    let p = *stack.last().unwrap();
    if p.j - p.i == 1 {
        out.push(DyckPathA {
            positions: stack.clone(),
        });
    }
    if p.i + 1 < p.j {
        stack.push(PosA::new(p.i + 1, p.j));
        extend_path_a(n, stack, out);
        stack.pop();
    }
    if p.j < n {
        stack.push(PosA::new(p.i, p.j + 1));
        extend_path_a(n, stack, out);
        stack.pop();
    }
}

/// The path bound M(λ, d) = a_{i₁} + a_{i₁+1} + … + a_{i_N}, where i₁ and
/// i_N are the first coordinates of the path's first and last positions.
pub fn m_value_a(lambda: &WeightA, d: &DyckPathA) -> Int {
    (d.first_i()..=d.last_i()).map(|k| int(lambda.coord(k))).sum()
}

/// The path sum S(x, d) = Σ_{(i,j) ∈ d} x_{i,j}.
pub fn s_value(x: &TriangleA, d: &DyckPathA) -> Rat {
    d.positions.iter().map(|&p| x.get(p).clone()).sum()
}

/// The canonical single-peak path d^{i,j} = ((i,i+1), …, (i,j), (i+1,j), …, (j−1,j)).
pub fn peak_path(i: usize, j: usize, n: usize) -> DyckPathA {
    assert!(i >= 1 && i < j && j <= n);
    let mut positions = Vec::new();
    for l in i + 1..=j {
        positions.push(PosA::new(i, l));
    }
    for k in i + 1..j {
        positions.push(PosA::new(k, j));
    }
    DyckPathA { positions }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RowKind {
    /// A nonnegativity row −x_c ≤ 0.
    Coordinate,
    /// A Dyck path row S(x, d) ≤ M(λ, d).
    Path,
}

/// Identifies where a halfspace row came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RowTag {
    CoordA(PosA),
    PathA(DyckPathA),
    CoordC(crate::polytope_c::PosC),
    PathC(crate::polytope_c::DyckPathC),
    /// A row without combinatorial provenance (hand-built systems).
    Free(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Row {
    pub normal: Vec<i64>,
    pub rhs: Int,
    pub kind: RowKind,
    pub tag: RowTag,
}

/// A halfspace system { x : normal · x ≤ rhs for every row }. Duplicate rows
/// coming from distinct paths are retained, each with its own tag.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HRep {
    pub dim: usize,
    pub rows: Vec<Row>,
}

impl HRep {
    /// normal · x for a rational point.
    pub fn row_value(&self, row: &Row, x: &[Rat]) -> Rat {
        debug_assert_eq!(x.len(), self.dim);
        let mut acc = Rat::zero();
        for (c, &a) in row.normal.iter().enumerate() {
            if a != 0 {
                acc += &x[c] * int(a);
            }
        }
        acc
    }

    pub fn is_feasible(&self, x: &[Rat]) -> bool {
        self.rows
            .iter()
            .all(|row| self.row_value(row, x) <= Rat::from_integer(row.rhs.clone()))
    }
}

/// The halfspace representation of the type-A FFLV polytope: one coordinate
/// row per position (canonical order), then one row per Dyck path
/// (enumeration order).
pub fn hrep_a(lambda: &WeightA) -> HRep {
    let n = lambda.rank();
    let dim = dim_a(n);
    let mut rows = Vec::new();
    for (c, p) in positions_a(n).into_iter().enumerate() {
        let mut normal = vec![0i64; dim];
        normal[c] = -1;
        rows.push(Row {
            normal,
            rhs: Int::zero(),
            kind: RowKind::Coordinate,
            tag: RowTag::CoordA(p),
        });
    }
    for d in enumerate_dyck_paths_a(n) {
        let mut normal = vec![0i64; dim];
        for &p in d.positions() {
            normal[pos_index_a(n, p)] = 1;
        }
        let rhs = m_value_a(lambda, &d);
        rows.push(Row {
            normal,
            rhs,
            kind: RowKind::Path,
            tag: RowTag::PathA(d),
        });
    }
    HRep { dim, rows }
}

/// Membership in P_λ: all coordinates nonnegative and every path sum within
/// its bound.
pub fn contains_a(lambda: &WeightA, x: &TriangleA) -> Result<bool, Error> {
    if x.n() != lambda.rank() {
        return Err(Error::DimensionMismatch {
            expected: dim_a(lambda.rank()),
            got: x.dim(),
        });
    }
    if !x.entries().iter().all(is_nonneg) {
        return Ok(false);
    }
    for d in enumerate_dyck_paths_a(lambda.rank()) {
        if s_value(x, &d) > Rat::from_integer(m_value_a(lambda, &d)) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// All lattice points of P_λ, via box search in canonical coordinate order:
/// coordinate (i, j) ranges over 0 ..= M(λ, d^{i,j}), and partial path sums
/// prune assignments as soon as any path bound is exceeded. Each visited
/// partial assignment counts against the budget.
pub fn lattice_points_a(lambda: &WeightA, budget: u64) -> Result<Vec<TriangleA>, Error> {
    let n = lambda.rank();
    let positions = positions_a(n);
    let paths = enumerate_dyck_paths_a(n);
    let bounds: Vec<i64> = positions
        .iter()
        .map(|p| {
            let m = m_value_a(lambda, &peak_path(p.i, p.j, n));
            i64::try_from(&m).expect("path bound fits in i64")
        })
        .collect();
    let caps: Vec<i64> = paths
        .iter()
        .map(|d| i64::try_from(&m_value_a(lambda, d)).expect("path bound fits in i64"))
        .collect();
    // paths_through[c] lists the path indices whose row contains coordinate c.
    let mut paths_through = vec![Vec::new(); positions.len()];
    for (pi, d) in paths.iter().enumerate() {
        for &p in d.positions() {
            paths_through[pos_index_a(n, p)].push(pi);
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
        .map(|vals| TriangleA {
            n,
            entries: vals.into_iter().map(Rat::from_integer).collect(),
        })
        .collect();
    Ok(points)
}

/// Shared box-search recursion: coordinate `level` ranges over
/// 0 ..= bounds[level], each row in `paths_through[level]` accumulates the
/// chosen value into `sums` and prunes once its cap is exceeded.
#[allow(clippy::too_many_arguments)]
pub(crate) fn search_lattice(
    level: usize,
    bounds: &[i64],
    caps: &[i64],
    paths_through: &[Vec<usize>],
    sums: &mut [i64],
    current: &mut [i64],
    out: &mut Vec<Vec<Int>>,
    remaining: &mut u64,
    budget: u64,
) -> Result<(), Error> {
    if *remaining == 0 {
        return Err(Error::BudgetExceeded { budget });
    }
    *remaining -= 1;
    if level == bounds.len() {
        out.push(current.iter().map(|&v| int(v)).collect());
        return Ok(());
    }
    for v in 0..=bounds[level] {
        current[level] = v;
        for &pi in &paths_through[level] {
            sums[pi] += v;
        }
        let ok = paths_through[level].iter().all(|&pi| sums[pi] <= caps[pi]);
        let res = if ok {
            search_lattice(
                level + 1,
                bounds,
                caps,
                paths_through,
                sums,
                current,
                out,
                remaining,
                budget,
            )
        } else {
            Ok(())
        };
        for &pi in &paths_through[level] {
            sums[pi] -= v;
        }
        res?;
        if !ok {
            // larger values only increase the violated sum
            break;
        }
    }
    current[level] = 0;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, rat_frac};

    fn w(coords: &[i64]) -> WeightA {
        WeightA::new(coords.to_vec()).unwrap()
    }

    #[test]
    fn canonical_order_and_index() {
        let ps = positions_a(4);
        let expected = [(1, 2), (2, 3), (3, 4), (1, 3), (2, 4), (1, 4)];
        assert_eq!(
            ps.iter().map(|p| (p.i, p.j)).collect::<Vec<_>>(),
            expected.to_vec()
        );
        for (k, &p) in ps.iter().enumerate() {
            assert_eq!(pos_index_a(4, p), k);
        }
    }

    #[test]
    fn straddling_sets() {
        let q2 = straddling_positions(4, 2);
        assert_eq!(
            q2.iter().map(|p| (p.i, p.j)).collect::<Vec<_>>(),
            vec![(2, 3), (1, 3), (2, 4), (1, 4)]
        );
        assert_eq!(straddling_positions(5, 1).len(), 4);
        assert_eq!(straddling_positions(5, 2).len(), 6);
    }

    #[test]
    fn dyck_path_counts() {
        for (n, count) in [(2, 1), (3, 3), (4, 7), (5, 16), (6, 39)] {
            assert_eq!(enumerate_dyck_paths_a(n).len(), count, "n = {n}");
        }
    }

    #[test]
    fn dyck_paths_n3() {
        let paths = enumerate_dyck_paths_a(3);
        let as_pairs: Vec<Vec<(usize, usize)>> = paths
            .iter()
            .map(|d| d.positions().iter().map(|p| (p.i, p.j)).collect())
            .collect();
        assert_eq!(
            as_pairs,
            vec![
                vec![(1, 2)],
                vec![(1, 2), (1, 3), (2, 3)],
                vec![(2, 3)],
            ]
        );
    }

    #[test]
    fn dyck_paths_n4_from_1_to_4() {
        let paths = enumerate_dyck_paths_a(4);
        let long: Vec<Vec<(usize, usize)>> = paths
            .iter()
            .filter(|d| d.first_i() == 1 && d.last_i() == 3)
            .map(|d| d.positions().iter().map(|p| (p.i, p.j)).collect())
            .collect();
        assert_eq!(
            long,
            vec![
                vec![(1, 2), (1, 3), (2, 3), (2, 4), (3, 4)],
                vec![(1, 2), (1, 3), (1, 4), (2, 4), (3, 4)],
            ]
        );
    }

    #[test]
    fn path_validation_rejects_bad_sequences() {
        let mk = |pts: &[(usize, usize)], n| {
            DyckPathA::new(pts.iter().map(|&(i, j)| PosA::new(i, j)).collect(), n)
        };
        assert!(mk(&[(1, 2), (1, 3)], 3).is_err()); // ends off the top row
        assert!(mk(&[(1, 3)], 3).is_err()); // starts off the top row
        assert!(mk(&[(1, 2), (2, 3)], 3).is_err()); // not a unit step
        assert!(mk(&[(1, 2), (1, 3), (2, 3)], 3).is_ok());
    }

    #[test]
    fn peak_path_shape() {
        let d = peak_path(1, 3, 3);
        assert_eq!(
            d.positions().iter().map(|p| (p.i, p.j)).collect::<Vec<_>>(),
            vec![(1, 2), (1, 3), (2, 3)]
        );
        let d = peak_path(2, 4, 6);
        assert_eq!(
            d.positions().iter().map(|p| (p.i, p.j)).collect::<Vec<_>>(),
            vec![(2, 3), (2, 4), (3, 4)]
        );
        assert_eq!(d.peaks(), vec![PosA::new(2, 4)]);
        assert!(d.valleys().is_empty());
    }

    #[test]
    fn m_values() {
        let lambda = w(&[1, 1]);
        let paths = enumerate_dyck_paths_a(3);
        assert_eq!(m_value_a(&lambda, &paths[0]), int(1));
        assert_eq!(m_value_a(&lambda, &paths[1]), int(2));
        let lambda = w(&[2, 0, 1]);
        let d = peak_path(2, 4, 4);
        assert_eq!(m_value_a(&lambda, &d), int(1));
    }

    #[test]
    fn s_values() {
        let mut x = TriangleA::zero(3);
        x.set(PosA::new(1, 2), rat_frac(1, 2));
        x.set(PosA::new(1, 3), rat(1));
        assert_eq!(s_value(&x, &peak_path(1, 3, 3)), rat_frac(3, 2));
        assert_eq!(s_value(&x, &peak_path(2, 3, 3)), rat(0));
    }

    #[test]
    fn hrep_shape() {
        let h = hrep_a(&w(&[1, 1]));
        assert_eq!(h.dim, 3);
        assert_eq!(h.rows.len(), 6);
        assert!(h.rows[..3].iter().all(|r| r.kind == RowKind::Coordinate));
        assert!(h.rows[3..].iter().all(|r| r.kind == RowKind::Path));
        // canonical order: (1,2), (2,3), (1,3); the long path hits all three.
        let long = &h.rows[4];
        assert_eq!(long.normal, vec![1, 1, 1]);
        assert_eq!(long.rhs, int(2));
    }

    #[test]
    fn membership() {
        let lambda = w(&[1, 1]);
        let mut x = TriangleA::zero(3);
        x.set(PosA::new(1, 3), rat(2));
        assert!(contains_a(&lambda, &x).unwrap());
        let mut y = TriangleA::zero(3);
        for p in positions_a(3) {
            y.set(p, rat(1));
        }
        assert!(!contains_a(&lambda, &y).unwrap());
        let mut neg = TriangleA::zero(3);
        neg.set(PosA::new(1, 2), rat(-1));
        assert!(!contains_a(&lambda, &neg).unwrap());
        assert!(contains_a(&w(&[1]), &TriangleA::zero(3)).is_err());
    }

    #[test]
    fn fractional_membership_is_exact() {
        let lambda = w(&[1, 1]);
        let mut x = TriangleA::zero(3);
        x.set(PosA::new(1, 2), rat_frac(1, 2));
        x.set(PosA::new(2, 3), rat_frac(1, 2));
        x.set(PosA::new(1, 3), rat(1));
        assert!(contains_a(&lambda, &x).unwrap());
        x.set(PosA::new(1, 3), rat_frac(1_000_001, 1_000_000));
        assert!(!contains_a(&lambda, &x).unwrap());
    }

    #[test]
    fn lattice_points_small() {
        assert_eq!(lattice_points_a(&w(&[1, 1]), 1 << 20).unwrap().len(), 8);
        assert_eq!(lattice_points_a(&w(&[1, 0]), 1 << 20).unwrap().len(), 3);
        assert_eq!(lattice_points_a(&w(&[3]), 1 << 20).unwrap().len(), 4);
        for x in lattice_points_a(&w(&[1, 1]), 1 << 20).unwrap() {
            assert!(contains_a(&w(&[1, 1]), &x).unwrap());
            assert!(x.is_integral());
        }
    }

    #[test]
    fn lattice_budget_is_enforced() {
        assert_eq!(
            lattice_points_a(&w(&[2, 2, 2]), 3),
            Err(Error::BudgetExceeded { budget: 3 })
        );
    }
}

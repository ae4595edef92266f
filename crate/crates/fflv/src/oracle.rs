//! Independent polyhedral checks over exact rationals.
//!
//! Everything here works directly on an [`HRep`] and integer linear algebra:
//! vertexhood is decided by the rank of the tight rows, vertex candidates for
//! a Minkowski sum are assembled from brute-forced summand vertices, tangent
//! cones are computed by incremental double description, and lattice points
//! are counted by a capacity recursion over the rows. None of it consults the
//! combinatorial classifications in the rest of the crate, so agreement
//! between the two routes is meaningful evidence.

use crate::error::Error;
use crate::polytope_a::{hrep_a, HRep, PosA, RowKind, RowTag};
use crate::polytope_c::hrep_c;
use crate::rat::{clear_denominators, int, primitive, Int, Rat};
use crate::weights::{WeightA, WeightC};
use num::{One, Signed, Zero};

/// Rank of an integer matrix, by fraction-free Gaussian elimination.
pub fn rank_int(rows: &[Vec<Int>]) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let mut m = rows.to_vec();
    let nrows = m.len();
    let ncols = m[0].len();
    debug_assert!(m.iter().all(|r| r.len() == ncols));
    let mut rank = 0;
    let mut prev = Int::one();
    for col in 0..ncols {
        let Some(p) = (rank..nrows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        for r in rank + 1..nrows {
            for c in col + 1..ncols {
                let val = (&m[rank][col] * &m[r][c] - &m[r][col] * &m[rank][c]) / &prev;
                m[r][c] = val;
            }
            m[r][col] = Int::zero();
        }
        prev = m[rank][col].clone();
        rank += 1;
        if rank == nrows {
            break;
        }
    }
    rank
}

/// Determinant of a square integer matrix, by the Bareiss recurrence.
pub fn det_int(m: &[Vec<Int>]) -> Int {
    let n = m.len();
    debug_assert!(m.iter().all(|r| r.len() == n));
    if n == 0 {
        return Int::one();
    }
    let mut m = m.to_vec();
    let mut prev = Int::one();
    let mut flips = 0usize;
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&r| !m[r][k].is_zero()) else {
                return Int::zero();
            };
            m.swap(k, p);
            flips += 1;
        }
        for r in k + 1..n {
            for c in k + 1..n {
                let val = (&m[k][k] * &m[r][c] - &m[r][k] * &m[k][c]) / &prev;
                m[r][c] = val;
            }
            m[r][k] = Int::zero();
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if flips % 2 == 1 {
        -d
    } else {
        d
    }
}

/// Indices of the rows tight at x, or an error if any row is violated.
pub fn tight_rows(h: &HRep, x: &[Rat]) -> Result<Vec<usize>, Error> {
    assert_eq!(x.len(), h.dim);
    let mut tight = Vec::new();
    for (idx, row) in h.rows.iter().enumerate() {
        let value = h.row_value(row, x);
        let rhs = Rat::from_integer(row.rhs.clone());
        if value > rhs {
            return Err(Error::Infeasible);
        }
        if value == rhs {
            tight.push(idx);
        }
    }
    Ok(tight)
}

/// Whether x is a vertex: feasible, with tight normals of full rank.
pub fn is_vertex_oracle(h: &HRep, x: &[Rat]) -> bool {
    let Ok(tight) = tight_rows(h, x) else {
        return false;
    };
    let normals: Vec<Vec<Int>> = tight
        .iter()
        .map(|&r| h.rows[r].normal.iter().map(|&v| int(v)).collect())
        .collect();
    rank_int(&normals) == h.dim
}

/// A finite candidate superset of a polytope's vertices. `independent` is
/// false when the fallback antichain generator had to be used, which leans on
/// the combinatorics this oracle is meant to double-check.
#[derive(Debug, Clone)]
pub struct CandidateSet {
    pub points: Vec<Vec<Rat>>,
    pub independent: bool,
}

/// One halfspace representation per nonzero fundamental multiple a_i ω_i.
/// The full polytope is their Minkowski sum.
pub fn fundamental_summands_a(lambda: &WeightA) -> Vec<HRep> {
    let n = lambda.rank();
    (1..n)
        .filter(|&i| lambda.coord(i) > 0)
        .map(|i| {
            let mut coords = vec![0; n - 1];
            coords[i - 1] = lambda.coord(i);
            hrep_a(&WeightA::new(coords).expect("fundamental multiple is dominant"))
        })
        .collect()
}

pub fn fundamental_summands_c(lambda: &WeightC) -> Vec<HRep> {
    let n = lambda.rank();
    (1..=n)
        .filter(|&i| lambda.coord(i) > 0)
        .map(|i| {
            let mut coords = vec![0; n];
            coords[i - 1] = lambda.coord(i);
            hrep_c(&WeightC::new(coords).expect("fundamental multiple is dominant"))
        })
        .collect()
}

/// Sums of one vertex from each summand. Every vertex of a Minkowski sum
/// decomposes as such a sum, so filtering these candidates through
/// [`is_vertex_oracle`] on the summed polytope yields its exact vertex set.
pub fn candidate_vertices(dim: usize, summands: &[HRep]) -> CandidateSet {
    let mut points: Vec<Vec<Rat>> = vec![vec![Rat::zero(); dim]];
    let mut independent = true;
    for h in summands {
        assert_eq!(h.dim, dim);
        let (verts, indep) = summand_vertices(h);
        independent &= indep;
        let mut next = Vec::with_capacity(points.len() * verts.len());
        for p in &points {
            for v in &verts {
                next.push(p.iter().zip(v).map(|(a, b)| a + b).collect());
            }
        }
        points = next;
    }
    points.sort();
    points.dedup();
    CandidateSet {
        points,
        independent,
    }
}

/// The exact vertex set of the polytope h, assembled from summand candidates
/// and filtered by the tight-row rank test.
pub fn oracle_vertex_set(h: &HRep, summands: &[HRep]) -> CandidateSet {
    let candidates = candidate_vertices(h.dim, summands);
    let points = candidates
        .points
        .into_iter()
        .filter(|p| is_vertex_oracle(h, p))
        .collect();
    CandidateSet {
        points,
        independent: candidates.independent,
    }
}

/// Vertices of one summand. Each coordinate is capped by the least rhs/coeff
/// over the rows with a positive coefficient there; every vertex sits at 0 or
/// at that cap in each coordinate, so for a small support the 2^s grid can be
/// filtered exactly. Larger supports fall back to antichain supports read off
/// the coordinate-row tags, trading independence for feasibility.
fn summand_vertices(h: &HRep) -> (Vec<Vec<Rat>>, bool) {
    let dim = h.dim;
    let mut ub: Vec<Option<Rat>> = vec![None; dim];
    for row in &h.rows {
        for (c, &coef) in row.normal.iter().enumerate() {
            if coef > 0 {
                let bound = Rat::new(row.rhs.clone(), int(coef));
                if ub[c].as_ref().is_none_or(|cur| bound < *cur) {
                    ub[c] = Some(bound);
                }
            }
        }
    }
    let ub: Vec<Rat> = ub
        .into_iter()
        .map(|b| b.expect("summand polytope is bounded"))
        .collect();
    let support: Vec<usize> = (0..dim).filter(|&c| ub[c] > Rat::zero()).collect();
    if support.len() <= 14 {
        let mut out = Vec::new();
        for mask in 0u32..(1u32 << support.len()) {
            let mut x = vec![Rat::zero(); dim];
            for (k, &c) in support.iter().enumerate() {
                if mask >> k & 1 == 1 {
                    x[c] = ub[c].clone();
                }
            }
            if is_vertex_oracle(h, &x) {
                out.push(x);
            }
        }
        (out, true)
    } else {
        (antichain_candidates(h, &ub, &support), false)
    }
}

fn antichain_candidates(h: &HRep, ub: &[Rat], support: &[usize]) -> Vec<Vec<Rat>> {
    use std::collections::HashMap;
    let mut pos_of: HashMap<usize, PosA> = HashMap::new();
    for row in &h.rows {
        if row.kind != RowKind::Coordinate {
            continue;
        }
        let Some(c) = row.normal.iter().position(|&v| v == -1) else {
            continue;
        };
        match &row.tag {
            RowTag::CoordA(p) => {
                pos_of.insert(c, *p);
            }
            RowTag::CoordC(p) => {
                pos_of.insert(c, PosA::new(p.i, p.j));
            }
            _ => {}
        }
    }
    let elements: Vec<PosA> = support
        .iter()
        .map(|c| *pos_of.get(c).expect("support coordinates carry position tags"))
        .collect();
    let index_of: HashMap<PosA, usize> = elements
        .iter()
        .enumerate()
        .map(|(k, &p)| (p, support[k]))
        .collect();
    crate::vertices_a::antichains_of_poset(&elements)
        .into_iter()
        .map(|a| {
            let mut x = vec![Rat::zero(); h.dim];
            for p in a.elements() {
                let c = index_of[p];
                x[c] = ub[c].clone();
            }
            x
        })
        .filter(|x| is_vertex_oracle(h, x))
        .collect()
}

/// A pointed polyhedral cone given by its extreme rays (primitive integer
/// vectors, lexicographically sorted).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cone {
    pub dim: usize,
    pub rays: Vec<Vec<Int>>,
}

/// Extreme rays of the tangent cone of h at the vertex x, by incremental
/// double description: a full-rank subset of the tight normals carves an
/// initial simplicial cone, and each remaining tight normal cuts it, pairing
/// adjacent kept and dropped rays.
pub fn tangent_cone_rays(h: &HRep, x: &[Rat]) -> Result<Cone, Error> {
    let dim = h.dim;
    let tight = tight_rows(h, x)?;
    let mut normals: Vec<Vec<Int>> = Vec::new();
    for &r in &tight {
        let raw: Vec<Int> = h.rows[r].normal.iter().map(|&v| int(v)).collect();
        if raw.iter().all(|v| v.is_zero()) {
            continue;
        }
        let p = primitive(&raw);
        if !normals.contains(&p) {
            normals.push(p);
        }
    }
    let rank = rank_int(&normals);
    if rank < dim {
        return Err(Error::NotAVertex { rank, dim });
    }

    let mut basis: Vec<Vec<Int>> = Vec::new();
    let mut basis_idx: Vec<usize> = Vec::new();
    for (k, normal) in normals.iter().enumerate() {
        basis.push(normal.clone());
        if rank_int(&basis) == basis.len() {
            basis_idx.push(k);
        } else {
            basis.pop();
        }
        if basis_idx.len() == dim {
            break;
        }
    }
    let rest: Vec<usize> = (0..normals.len())
        .filter(|k| !basis_idx.contains(k))
        .collect();
    let order: Vec<usize> = basis_idx.into_iter().chain(rest).collect();
    let total = order.len();

    let inv = invert_rat(&basis).expect("basis rows are independent");
    let mut rays: Vec<Vec<Int>> = Vec::new();
    let mut zero_sets: Vec<Vec<u64>> = Vec::new();
    #[allow(clippy::needless_range_loop)]
    for k in 0..dim {
        let column: Vec<Rat> = (0..dim).map(|r| -&inv[r][k]).collect();
        rays.push(clear_denominators(&column));
        let mut z = bitset(total);
        for t in 0..dim {
            if t != k {
                bit_set(&mut z, t);
            }
        }
        zero_sets.push(z);
    }

    for (step, &nk) in order.iter().enumerate().skip(dim) {
        let normal = &normals[nk];
        let vals: Vec<Int> = rays.iter().map(|r| dot_int(normal, r)).collect();
        let pos: Vec<usize> = (0..rays.len()).filter(|&r| vals[r].is_positive()).collect();
        if pos.is_empty() {
            for (r, v) in vals.iter().enumerate() {
                if v.is_zero() {
                    bit_set(&mut zero_sets[r], step);
                }
            }
            continue;
        }
        let neg: Vec<usize> = (0..rays.len()).filter(|&r| vals[r].is_negative()).collect();
        let mut new_rays: Vec<Vec<Int>> = Vec::new();
        let mut new_zero_sets: Vec<Vec<u64>> = Vec::new();
        for &p in &pos {
            for &m in &neg {
                let blocked = (0..rays.len()).any(|third| {
                    third != p && third != m && meet_subset(&zero_sets[p], &zero_sets[m], &zero_sets[third])
                });
                if blocked {
                    continue;
                }
                let combo: Vec<Int> = (0..dim)
                    .map(|c| &vals[p] * &rays[m][c] - &vals[m] * &rays[p][c])
                    .collect();
                let ray = primitive(&combo);
                if new_rays.contains(&ray) {
                    continue;
                }
                let mut z = meet(&zero_sets[p], &zero_sets[m]);
                bit_set(&mut z, step);
                new_rays.push(ray);
                new_zero_sets.push(z);
            }
        }
        let mut kept_rays = Vec::new();
        let mut kept_zero_sets = Vec::new();
        for r in 0..rays.len() {
            if vals[r].is_positive() {
                continue;
            }
            let mut z = zero_sets[r].clone();
            if vals[r].is_zero() {
                bit_set(&mut z, step);
            }
            kept_rays.push(rays[r].clone());
            kept_zero_sets.push(z);
        }
        kept_rays.extend(new_rays);
        kept_zero_sets.extend(new_zero_sets);
        rays = kept_rays;
        zero_sets = kept_zero_sets;
    }

    rays.sort();
    rays.dedup();
    Ok(Cone { dim, rays })
}

/// Whether the vertex x is simple: exactly dim tangent rays spanning a cell
/// of determinant ±1. Errors on non-vertices.
pub fn is_simple_oracle(h: &HRep, x: &[Rat]) -> Result<bool, Error> {
    let cone = tangent_cone_rays(h, x)?;
    if cone.rays.len() != h.dim {
        return Ok(false);
    }
    Ok(det_int(&cone.rays).abs().is_one())
}

/// Counts lattice points by recursing over coordinates with per-row residual
/// capacities. Requires every coordinate to have the plain lower bound
/// x_c ≥ 0 and every other row to be a 0/1 sum bound; anything else, or an
/// unbounded coordinate, is reported as unsupported. Aborts with an error
/// once more than `budget` recursion nodes are visited.
pub fn count_lattice(h: &HRep, budget: u64) -> Result<Int, Error> {
    let dim = h.dim;
    let mut has_lower = vec![false; dim];
    let mut upper: Vec<(Vec<usize>, i64)> = Vec::new();
    for row in &h.rows {
        if let Some(c) = negated_unit_coord(&row.normal) {
            if !row.rhs.is_zero() {
                return Err(Error::UnsupportedRows(format!(
                    "coordinate {c} has a lower bound other than zero"
                )));
            }
            has_lower[c] = true;
        } else if row.normal.iter().all(|&v| v == 0 || v == 1) {
            let rhs = i64::try_from(&row.rhs).map_err(|_| {
                Error::UnsupportedRows("row bound does not fit in 64 bits".to_string())
            })?;
            let support: Vec<usize> = row
                .normal
                .iter()
                .enumerate()
                .filter(|&(_, &v)| v == 1)
                .map(|(c, _)| c)
                .collect();
            if rhs < 0 {
                return Ok(Int::zero());
            }
            if !support.is_empty() {
                upper.push((support, rhs));
            }
        } else {
            return Err(Error::UnsupportedRows(
                "row is neither a unit lower bound nor a 0/1 upper bound".to_string(),
            ));
        }
    }
    if let Some(c) = (0..dim).find(|&c| !has_lower[c]) {
        return Err(Error::UnsupportedRows(format!(
            "coordinate {c} has no lower bound"
        )));
    }
    let mut rows_through = vec![Vec::new(); dim];
    for (r, (support, _)) in upper.iter().enumerate() {
        for &c in support {
            rows_through[c].push(r);
        }
    }
    if let Some(c) = (0..dim).find(|&c| rows_through[c].is_empty()) {
        return Err(Error::UnsupportedRows(format!(
            "coordinate {c} has no upper bound"
        )));
    }
    let mut rem: Vec<i64> = upper.iter().map(|(_, rhs)| *rhs).collect();
    let mut remaining = budget;
    let mut acc = Int::zero();
    count_nodes(0, dim, &rows_through, &mut rem, &mut remaining, budget, &mut acc)?;
    Ok(acc)
}

fn count_nodes(
    level: usize,
    dim: usize,
    rows_through: &[Vec<usize>],
    rem: &mut [i64],
    remaining: &mut u64,
    budget: u64,
    acc: &mut Int,
) -> Result<(), Error> {
    if *remaining == 0 {
        return Err(Error::BudgetExceeded { budget });
    }
    *remaining -= 1;
    if level == dim {
        *acc += Int::one();
        return Ok(());
    }
    let rows = &rows_through[level];
    let cap = rows.iter().map(|&r| rem[r]).min().expect("coordinate covered");
    for v in 0..=cap {
        if v > 0 {
            for &r in rows {
                rem[r] -= 1;
            }
        }
        count_nodes(level + 1, dim, rows_through, rem, remaining, budget, acc)?;
    }
    for &r in rows {
        rem[r] += cap;
    }
    Ok(())
}

fn negated_unit_coord(normal: &[i64]) -> Option<usize> {
    let mut found = None;
    for (c, &v) in normal.iter().enumerate() {
        match v {
            0 => {}
            -1 if found.is_none() => found = Some(c),
            _ => return None,
        }
    }
    found
}

fn dot_int(a: &[Int], b: &[Int]) -> Int {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Inverse of a square integer matrix over the rationals, as rows.
fn invert_rat(a: &[Vec<Int>]) -> Option<Vec<Vec<Rat>>> {
    let n = a.len();
    let mut m: Vec<Vec<Rat>> = a
        .iter()
        .enumerate()
        .map(|(r, row)| {
            let mut aug: Vec<Rat> = row.iter().map(|v| Rat::from_integer(v.clone())).collect();
            aug.extend((0..n).map(|c| if c == r { Rat::one() } else { Rat::zero() }));
            aug
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, piv);
        let pivot = m[col][col].clone();
        for entry in m[col][col..].iter_mut() {
            *entry = &*entry / &pivot;
        }
        let pivot_row = m[col].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r != col && !row[col].is_zero() {
                let factor = row[col].clone();
                for (dst, src) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                    *dst -= &factor * src;
                }
            }
        }
    }
    Some(m.into_iter().map(|row| row[n..].to_vec()).collect())
}

fn bitset(bits: usize) -> Vec<u64> {
    vec![0; bits.div_ceil(64).max(1)]
}

fn bit_set(z: &mut [u64], i: usize) {
    z[i / 64] |= 1 << (i % 64);
}

/// Whether (a ∩ b) ⊆ c, wordwise.
fn meet_subset(a: &[u64], b: &[u64], c: &[u64]) -> bool {
    a.iter()
        .zip(b)
        .zip(c)
        .all(|((&x, &y), &z)| (x & y) & !z == 0)
}

fn meet(a: &[u64], b: &[u64]) -> Vec<u64> {
    a.iter().zip(b).map(|(&x, &y)| x & y).collect()
}

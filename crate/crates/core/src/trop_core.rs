//! Min-plus determinants, tropical rank and Barvinok rank at most two.

use crate::error::{Error, Result};
use crate::matrix::{Matrix, ProjectivePoint};
use crate::scalar::Scalar;

/// Largest size solved by enumerating every permutation.
pub const BRUTE_FORCE_LIMIT: usize = 8;

/// Tropical determinant of a square matrix together with its singularity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DetStatus<T> {
    pub value: T,
    pub singular: bool,
    /// Minimizing permutations seen, capped at 2.
    pub witness_count: u8,
}

pub fn trop_det<T: Scalar>(m: &Matrix<T>) -> Result<DetStatus<T>> {
    if m.rows() != m.cols() {
        return Err(Error::NonSquare { rows: m.rows(), cols: m.cols() });
    }
    if m.rows() <= BRUTE_FORCE_LIMIT {
        Ok(trop_det_enumerate(m))
    } else {
        Ok(trop_det_assignment(m))
    }
}

/// Exhaustive evaluation over all permutations (Heap's algorithm).
pub fn trop_det_enumerate<T: Scalar>(m: &Matrix<T>) -> DetStatus<T> {
    let n = m.rows();
    let mut perm: Vec<usize> = (0..n).collect();
    let weight =
        |perm: &[usize]| -> T { perm.iter().enumerate().fold(T::zero(), |acc, (i, &j)| acc + m.get(i, j).clone()) };
    let mut best = weight(&perm);
    let mut count: u8 = 1;
    let mut c = vec![0usize; n];
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            let w = weight(&perm);
            match w.cmp(&best) {
                std::cmp::Ordering::Less => {
                    best = w;
                    count = 1;
                }
                std::cmp::Ordering::Equal => count = count.saturating_add(1).min(2),
                std::cmp::Ordering::Greater => {}
            }
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    DetStatus { value: best, singular: count >= 2, witness_count: count }
}

/// Solves the assignment problem with potentials and decides whether the
/// optimum is unique by searching the tight-edge graph for a cycle.
pub fn trop_det_assignment<T: Scalar>(m: &Matrix<T>) -> DetStatus<T> {
    let n = m.rows();
    let (assignment, u, v) = hungarian(m);
    let value = (0..n).fold(T::zero(), |acc, i| acc + m.get(i, assignment[i]).clone());
    // row_of[j] = row assigned to column j
    let mut row_of = vec![0usize; n];
    for (i, &j) in assignment.iter().enumerate() {
        row_of[j] = i;
    }
    // Edge i -> i' when row i can take the column of row i' at zero reduced cost.
    let tight = |i: usize, j: usize| m.get(i, j).clone() - u[i].clone() - v[j].clone() == T::zero();
    let adjacency: Vec<Vec<usize>> =
        (0..n).map(|i| (0..n).filter(|&j| j != assignment[i] && tight(i, j)).map(|j| row_of[j]).collect()).collect();
    let unique = !has_directed_cycle(&adjacency);
    let count = if unique { 1 } else { 2 };
    DetStatus { value, singular: !unique, witness_count: count }
}

fn has_directed_cycle(adjacency: &[Vec<usize>]) -> bool {
    // 0 = unvisited, 1 = on stack, 2 = done
    let n = adjacency.len();
    let mut state = vec![0u8; n];
    for start in 0..n {
        if state[start] != 0 {
            continue;
        }
        let mut stack = vec![(start, 0usize)];
        state[start] = 1;
        while let Some(&mut (node, ref mut next)) = stack.last_mut() {
            if *next < adjacency[node].len() {
                let succ = adjacency[node][*next];
                *next += 1;
                match state[succ] {
                    0 => {
                        state[succ] = 1;
                        stack.push((succ, 0));
                    }
                    1 => return true,
                    _ => {}
                }
            } else {
                state[node] = 2;
                stack.pop();
            }
        }
    }
    false
}

/// Minimum-cost perfect assignment. Returns the column of each row and dual
/// potentials `u`, `v` with `m[i][j] - u[i] - v[j] >= 0`, tight on the
/// assignment.
fn hungarian<T: Scalar>(m: &Matrix<T>) -> (Vec<usize>, Vec<T>, Vec<T>) {
    let n = m.rows();
    // 1-based arrays with a sentinel column 0.
    let mut u = vec![T::zero(); n + 1];
    let mut v = vec![T::zero(); n + 1];
    let mut p = vec![0usize; n + 1];
    let mut way = vec![0usize; n + 1];
    for i in 1..=n {
        p[0] = i;
        let mut j0 = 0usize;
        let mut minv: Vec<Option<T>> = vec![None; n + 1];
        let mut used = vec![false; n + 1];
        loop {
            used[j0] = true;
            let i0 = p[j0];
            let mut delta: Option<T> = None;
            let mut j1 = 0usize;
            for j in 1..=n {
                if used[j] {
                    continue;
                }
                let cur = m.get(i0 - 1, j - 1).clone() - u[i0].clone() - v[j].clone();
                if minv[j].as_ref().is_none_or(|mv| cur < *mv) {
                    minv[j] = Some(cur);
                    way[j] = j0;
                }
                let mj = minv[j].clone().expect("set above");
                if delta.as_ref().is_none_or(|d| mj < *d) {
                    delta = Some(mj);
                    j1 = j;
                }
            }
            let delta = delta.expect("an unused column remains");
            for j in 0..=n {
                if used[j] {
                    u[p[j]] = u[p[j]].clone() + delta.clone();
                    v[j] = v[j].clone() - delta.clone();
                } else if let Some(mv) = minv[j].as_mut() {
                    *mv = mv.clone() - delta.clone();
                }
            }
            j0 = j1;
            if p[j0] == 0 {
                break;
            }
        }
        loop {
            let j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
            if j0 == 0 {
                break;
            }
        }
    }
    let mut assignment = vec![0usize; n];
    for j in 1..=n {
        assignment[p[j] - 1] = j - 1;
    }
    (assignment, u[1..].to_vec(), v[1..].to_vec())
}

/// Row and column index sets of a square minor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Minor {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
}

/// First nonsingular `r x r` minor in lexicographic order, if any.
pub fn nonsingular_minor<T: Scalar>(m: &Matrix<T>, r: usize) -> Option<Minor> {
    if r == 0 || r > m.rows() || r > m.cols() {
        return None;
    }
    let row_sets = combinations(m.rows(), r);
    let col_sets = combinations(m.cols(), r);
    for rows in &row_sets {
        for cols in &col_sets {
            let sub = m.submatrix(rows, cols);
            let status = trop_det(&sub).expect("minor is square");
            if !status.singular {
                return Some(Minor { rows: rows.clone(), cols: cols.clone() });
            }
        }
    }
    None
}

/// Tropical rank and a witness minor of that size.
pub fn tropical_rank_with_witness<T: Scalar>(m: &Matrix<T>) -> (usize, Minor) {
    let top = m.rows().min(m.cols());
    for r in (2..=top).rev() {
        if let Some(minor) = nonsingular_minor(m, r) {
            return (r, minor);
        }
    }
    // Every 1x1 minor is nonsingular.
    (1, Minor { rows: vec![0], cols: vec![0] })
}

pub fn tropical_rank<T: Scalar>(m: &Matrix<T>) -> usize {
    tropical_rank_with_witness(m).0
}

/// True iff the columns are all equal in tropical projective space.
pub fn is_rank_one<T: Scalar>(m: &Matrix<T>) -> bool {
    let points = m.points();
    points.windows(2).all(|w| w[0] == w[1])
}

/// Rank at most two: no 3x3 minor is tropically nonsingular.
pub fn has_rank_at_most_two<T: Scalar>(m: &Matrix<T>) -> bool {
    nonsingular_minor(m, 3).is_none()
}

pub(crate) fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        for i in start..n {
            if n - i < k - current.len() {
                break;
            }
            current.push(i);
            rec(i + 1, n, k, current, out);
            current.pop();
        }
    }
    rec(0, n, k, &mut current, &mut out);
    out
}

/// Decides whether `z` lies on the tropical segment `[p, q]`.
///
/// The smallest admissible multipliers are `lambda = max(z - p)` and
/// `mu = max(z - q)`; `z` is on the segment iff they reproduce it exactly.
pub fn segment_membership<T: Scalar>(
    z: &ProjectivePoint<T>,
    p: &ProjectivePoint<T>,
    q: &ProjectivePoint<T>,
) -> Result<bool> {
    let d = z.dim();
    if p.dim() != d {
        return Err(Error::DimensionMismatch(d, p.dim()));
    }
    if q.dim() != d {
        return Err(Error::DimensionMismatch(d, q.dim()));
    }
    let max_gap = |a: &ProjectivePoint<T>| {
        z.coords().iter().zip(a.coords()).map(|(zi, ai)| zi.clone() - ai.clone()).max().expect("d >= 1")
    };
    let lambda = max_gap(p);
    let mu = max_gap(q);
    Ok(z.coords().iter().zip(p.coords().iter().zip(q.coords())).all(|(zi, (pi, qi))| {
        let a = lambda.clone() + pi.clone();
        let b = mu.clone() + qi.clone();
        *zi == a.min(b)
    }))
}

/// Result of the Barvinok rank test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BarvinokTest {
    pub at_most_two: bool,
    /// Column pair whose segment contains every column.
    pub witness: Option<(usize, usize)>,
}

/// Barvinok rank at most two: every column lies on the tropical segment
/// between two of the columns. Pairs are tried in lexicographic order with
/// `i <= j`.
pub fn barvinok_rank_le2<T: Scalar>(m: &Matrix<T>) -> BarvinokTest {
    let points = m.points();
    let n = points.len();
    for i in 0..n {
        for j in i..n {
            let all_on = points.iter().all(|z| segment_membership(z, &points[i], &points[j]).expect("same dimension"));
            if all_on {
                return BarvinokTest { at_most_two: true, witness: Some((i, j)) };
            }
        }
    }
    BarvinokTest { at_most_two: false, witness: None }
}

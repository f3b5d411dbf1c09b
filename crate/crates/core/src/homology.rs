//! Reduced integral homology of simplicial complexes.
//!
//! Boundary matrices are first reduced by eliminating unit pivots, which
//! leaves the Smith normal form unchanged; whatever remains is diagonalised
//! densely over arbitrary-precision integers.

use std::cmp::Reverse;
use std::collections::{BTreeMap, BinaryHeap, HashMap, HashSet};
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::simplicial::{Face, SimplicialComplex};

/// Integer chain: sorted faces with nonzero coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Chain {
    size: usize,
    terms: BTreeMap<Face, i64>,
}

/// Sign of the permutation sorting `v`, which must have distinct entries.
fn sorting_sign(v: &[u32]) -> i64 {
    let mut inversions = 0usize;
    for i in 0..v.len() {
        for j in i + 1..v.len() {
            if v[i] > v[j] {
                inversions += 1;
            }
        }
    }
    if inversions.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

impl Chain {
    /// Zero chain on faces of dimension `dim`; `dim = -1` is the empty face.
    pub fn zero(dim: isize) -> Self {
        Self { size: (dim + 1) as usize, terms: BTreeMap::new() }
    }

    /// `coeff` times the simplex with the orientation given by the vertex
    /// order; the stored face is sorted and the sign adjusted.
    pub fn oriented(vertices: &[u32], coeff: i64) -> Self {
        let mut c = Self::zero(vertices.len() as isize - 1);
        c.add_oriented(vertices, coeff);
        c
    }

    pub fn add_oriented(&mut self, vertices: &[u32], coeff: i64) {
        assert_eq!(vertices.len(), self.size, "face of the wrong dimension");
        let mut face = vertices.to_vec();
        face.sort_unstable();
        assert!(face.windows(2).all(|w| w[0] < w[1]), "repeated vertex in a simplex");
        self.add_term(face, coeff * sorting_sign(vertices));
    }

    fn add_term(&mut self, face: Face, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let entry = self.terms.entry(face);
        match entry {
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if *e.get() == 0 {
                    e.remove();
                }
            }
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
        }
    }

    pub fn add(&mut self, other: &Chain) {
        assert_eq!(self.size, other.size, "chains of different dimensions");
        for (f, &c) in &other.terms {
            self.add_term(f.clone(), c);
        }
    }

    pub fn scaled(&self, k: i64) -> Chain {
        let mut out = Chain::zero(self.dim());
        for (f, &c) in &self.terms {
            out.add_term(f.clone(), c * k);
        }
        out
    }

    pub fn dim(&self) -> isize {
        self.size as isize - 1
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, face: &[u32]) -> i64 {
        self.terms.get(face).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Face, i64)> {
        self.terms.iter().map(|(f, &c)| (f, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

/// Simplicial boundary with `(-1)^i` for deleting the `i`-th vertex. The
/// boundary of a 0-chain is its augmentation on the empty face.
pub fn boundary(complex: &SimplicialComplex, chain: &Chain) -> Result<Chain> {
    let mut out = Chain::zero(chain.dim() - 1);
    if chain.size == 0 {
        return Ok(out);
    }
    for (face, c) in chain.terms() {
        if !complex.contains_face(face) {
            return Err(Error::FaceNotInComplex(face.clone()));
        }
        for i in 0..face.len() {
            let mut sub = face.clone();
            sub.remove(i);
            out.add_term(sub, if i % 2 == 0 { c } else { -c });
        }
    }
    Ok(out)
}

/// Sparse integer matrix stored by columns, rows sorted within a column.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    pub rows: usize,
    pub columns: Vec<Vec<(u32, i64)>>,
}

impl SparseMatrix {
    pub fn cols(&self) -> usize {
        self.columns.len()
    }

    pub fn to_dense(&self) -> Matrix<BigInt> {
        let mut m = Matrix::zeros(self.rows.max(1), self.cols().max(1)).expect("nonempty");
        for (j, col) in self.columns.iter().enumerate() {
            for &(i, v) in col {
                m.set(i as usize, j, BigInt::from(v));
            }
        }
        m
    }
}

/// Matrix of the boundary map from `k`-faces to `(k-1)`-faces, both in
/// sorted order; `k = 0` gives the augmentation (a single row of ones).
pub fn boundary_matrix(complex: &SimplicialComplex, k: usize) -> SparseMatrix {
    let upper = complex.faces(k);
    if k == 0 {
        return SparseMatrix { rows: 1, columns: upper.iter().map(|_| vec![(0, 1)]).collect() };
    }
    let lower = complex.faces(k - 1);
    let columns = upper
        .par_iter()
        .map(|face| {
            let mut col: Vec<(u32, i64)> = (0..face.len())
                .map(|i| {
                    let mut sub = face.clone();
                    sub.remove(i);
                    let row = lower.binary_search(&sub).expect("closure contains every subface");
                    (row as u32, if i % 2 == 0 { 1 } else { -1 })
                })
                .collect();
            col.sort_unstable();
            col
        })
        .collect();
    SparseMatrix { rows: lower.len(), columns }
}

/// Nonzero invariant factors `d_1 | d_2 | ...` and the rank.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    pub factors: Vec<BigInt>,
    pub rank: usize,
}

impl SmithForm {
    /// Factors greater than one.
    pub fn torsion(&self) -> Vec<BigInt> {
        self.factors.iter().filter(|f| !f.is_one()).cloned().collect()
    }
}

/// Smith normal form of a dense integer matrix.
pub fn smith_normal_form(a: &Matrix<BigInt>) -> SmithForm {
    let mut m: Vec<Vec<BigInt>> = (0..a.rows()).map(|i| a.row(i).to_vec()).collect();
    diagonal_form(&mut m)
}

fn diagonal_form(m: &mut [Vec<BigInt>]) -> SmithForm {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut diag: Vec<BigInt> = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        // Smallest nonzero entry in the trailing block.
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if !m[i][j].is_zero() && best.is_none_or(|(bi, bj)| m[i][j].abs() < m[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        m.swap(t, pi);
        for row in m.iter_mut() {
            row.swap(t, pj);
        }
        let mut clean = true;
        for i in t + 1..rows {
            if m[i][t].is_zero() {
                continue;
            }
            let q = m[i][t].div_floor(&m[t][t]);
            for j in t..cols {
                let v = &m[i][j] - &q * &m[t][j];
                m[i][j] = v;
            }
            if !m[i][t].is_zero() {
                clean = false;
            }
        }
        for j in t + 1..cols {
            if m[t][j].is_zero() {
                continue;
            }
            let q = m[t][j].div_floor(&m[t][t]);
            for i in t..rows {
                let v = &m[i][j] - &q * &m[i][t];
                m[i][j] = v;
            }
            if !m[t][j].is_zero() {
                clean = false;
            }
        }
        if clean {
            diag.push(m[t][t].abs());
            t += 1;
        }
    }
    normalize_chain(&mut diag);
    SmithForm { rank: diag.len(), factors: diag }
}

/// Turns a diagonal into a divisibility chain with the same group.
fn normalize_chain(diag: &mut [BigInt]) {
    for i in 0..diag.len() {
        for j in i + 1..diag.len() {
            let g = diag[i].gcd(&diag[j]);
            let l = diag[i].lcm(&diag[j]);
            diag[i] = g;
            diag[j] = l;
        }
    }
}

trait Coefficient: Clone + PartialEq + Send + Sync + fmt::Debug {
    fn from_i64(v: i64) -> Self;
    fn vanishes(&self) -> bool;
    fn is_unit(&self) -> bool;
    fn mul(&self, other: &Self) -> Option<Self>;
    /// `self - f * p`
    fn sub_mul(&self, f: &Self, p: &Self) -> Option<Self>;
    fn to_bigint(&self) -> BigInt;
}

impl Coefficient for i64 {
    fn from_i64(v: i64) -> Self {
        v
    }
    fn vanishes(&self) -> bool {
        *self == 0
    }
    fn is_unit(&self) -> bool {
        *self == 1 || *self == -1
    }
    fn mul(&self, other: &Self) -> Option<Self> {
        self.checked_mul(*other)
    }
    fn sub_mul(&self, f: &Self, p: &Self) -> Option<Self> {
        f.checked_mul(*p).and_then(|x| self.checked_sub(x))
    }
    fn to_bigint(&self) -> BigInt {
        BigInt::from(*self)
    }
}

impl Coefficient for BigInt {
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn vanishes(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_unit(&self) -> bool {
        self.abs().is_one()
    }
    fn mul(&self, other: &Self) -> Option<Self> {
        Some(self * other)
    }
    fn sub_mul(&self, f: &Self, p: &Self) -> Option<Self> {
        Some(self - f * p)
    }
    fn to_bigint(&self) -> BigInt {
        self.clone()
    }
}

struct Overflow;

/// Eliminates unit pivots, returning their number and the remaining block.
fn eliminate_units<R: Coefficient>(m: &SparseMatrix) -> std::result::Result<(usize, Vec<Vec<BigInt>>), Overflow> {
    // Row-major working copy.
    let mut rows: Vec<Vec<(u32, R)>> = vec![Vec::new(); m.rows];
    for (j, col) in m.columns.iter().enumerate() {
        for &(i, v) in col {
            rows[i as usize].push((j as u32, R::from_i64(v)));
        }
    }
    let mut col_rows: Vec<HashSet<u32>> = m.columns.iter().map(|c| c.iter().map(|&(i, _)| i).collect()).collect();
    let mut row_heap: BinaryHeap<Reverse<(usize, u32)>> = BinaryHeap::new();
    let mut col_heap: BinaryHeap<Reverse<(usize, u32)>> = BinaryHeap::new();
    let mut pivots = 0usize;

    loop {
        if row_heap.is_empty() && col_heap.is_empty() {
            // Refill; stop once no unit entry is left anywhere.
            let any_unit = rows.iter().any(|r| r.iter().any(|(_, v)| v.is_unit()));
            if !any_unit {
                break;
            }
            row_heap.extend(
                rows.iter().enumerate().filter(|(_, r)| !r.is_empty()).map(|(i, r)| Reverse((r.len(), i as u32))),
            );
            col_heap.extend(
                col_rows.iter().enumerate().filter(|(_, s)| !s.is_empty()).map(|(j, s)| Reverse((s.len(), j as u32))),
            );
        }
        // Markowitz cost (row length - 1) * (column count - 1), searched
        // from the shortest row and from the sparsest column.
        let mut best: Option<(usize, u32, u32)> = None;
        while let Some(&Reverse((len, r))) = row_heap.peek() {
            let row = &rows[r as usize];
            if row.len() != len || row.is_empty() {
                row_heap.pop();
                if !row.is_empty() {
                    row_heap.push(Reverse((row.len(), r)));
                }
                continue;
            }
            let pick = row.iter().filter(|(_, v)| v.is_unit()).map(|&(c, _)| (col_rows[c as usize].len(), c)).min();
            match pick {
                Some((cnt, c)) => {
                    best = Some(((len - 1) * (cnt - 1), r, c));
                    break;
                }
                None => {
                    row_heap.pop();
                }
            }
        }
        while let Some(&Reverse((cnt, c))) = col_heap.peek() {
            let current = col_rows[c as usize].len();
            if current != cnt || current == 0 {
                col_heap.pop();
                if current > 0 {
                    col_heap.push(Reverse((current, c)));
                }
                continue;
            }
            let pick = col_rows[c as usize]
                .iter()
                .filter(|&&r| entry(&rows[r as usize], c).is_some_and(R::is_unit))
                .map(|&r| (rows[r as usize].len(), r))
                .min();
            match pick {
                Some((len, r)) => {
                    let cost = (len - 1) * (cnt - 1);
                    if best.is_none_or(|(b, _, _)| cost < b) {
                        best = Some((cost, r, c));
                    }
                    break;
                }
                None => {
                    col_heap.pop();
                }
            }
        }
        let Some((_, pr, c)) = best else { continue };
        pivots += 1;
        let prow = std::mem::take(&mut rows[pr as usize]);
        let unit = entry(&prow, c).expect("pivot present").clone();
        for &(j, _) in &prow {
            col_rows[j as usize].remove(&pr);
        }
        let mut others: Vec<u32> = col_rows[c as usize].iter().copied().collect();
        others.sort_unstable();
        for r in others {
            let row = &mut rows[r as usize];
            let factor = entry(row, c).expect("row listed in column").mul(&unit).ok_or(Overflow)?;
            let merged = sub_scaled_row(row, &factor, &prow)?;
            // Only the pivot row's columns can change.
            for &(j, _) in &prow {
                if entry(&merged, j).is_some() {
                    col_rows[j as usize].insert(r);
                } else {
                    col_rows[j as usize].remove(&r);
                }
            }
            *row = merged;
            if !row.is_empty() {
                row_heap.push(Reverse((row.len(), r)));
            }
        }
        debug_assert!(col_rows[c as usize].is_empty());
        for &(j, _) in &prow {
            let n = col_rows[j as usize].len();
            if n > 0 {
                col_heap.push(Reverse((n, j)));
            }
        }
    }

    // Remaining block: rows and columns that still carry entries.
    let mut live_cols: Vec<u32> = (0..m.cols() as u32).filter(|&j| !col_rows[j as usize].is_empty()).collect();
    live_cols.sort_unstable();
    let col_pos: HashMap<u32, usize> = live_cols.iter().enumerate().map(|(k, &j)| (j, k)).collect();
    let block: Vec<Vec<BigInt>> = rows
        .iter()
        .filter(|r| !r.is_empty())
        .map(|r| {
            let mut dense = vec![BigInt::zero(); live_cols.len()];
            for (j, v) in r {
                dense[col_pos[j]] = v.to_bigint();
            }
            dense
        })
        .collect();
    Ok((pivots, block))
}

fn entry<R>(row: &[(u32, R)], c: u32) -> Option<&R> {
    row.binary_search_by_key(&c, |&(j, _)| j).ok().map(|k| &row[k].1)
}

fn sub_scaled_row<R: Coefficient>(
    row: &[(u32, R)],
    f: &R,
    p: &[(u32, R)],
) -> std::result::Result<Vec<(u32, R)>, Overflow> {
    let zero = R::from_i64(0);
    let mut out = Vec::with_capacity(row.len() + p.len());
    let (mut a, mut b) = (0, 0);
    while a < row.len() || b < p.len() {
        let ja = row.get(a).map_or(u32::MAX, |e| e.0);
        let jb = p.get(b).map_or(u32::MAX, |e| e.0);
        let (j, v) = if ja < jb {
            a += 1;
            (ja, row[a - 1].1.clone())
        } else if jb < ja {
            b += 1;
            (jb, zero.sub_mul(f, &p[b - 1].1).ok_or(Overflow)?)
        } else {
            a += 1;
            b += 1;
            (ja, row[a - 1].1.sub_mul(f, &p[b - 1].1).ok_or(Overflow)?)
        };
        if !v.vanishes() {
            out.push((j, v));
        }
    }
    Ok(out)
}

/// Smith normal form of a sparse integer matrix.
pub fn sparse_smith_normal_form(m: &SparseMatrix) -> SmithForm {
    let (units, mut block) = match eliminate_units::<i64>(m) {
        Ok(r) => r,
        Err(Overflow) => match eliminate_units::<BigInt>(m) {
            Ok(r) => r,
            Err(Overflow) => unreachable!("big integers do not overflow"),
        },
    };
    let rest = diagonal_form(&mut block);
    // Units divide everything, so the chain stays normalized.
    let mut factors = vec![BigInt::one(); units];
    factors.extend(rest.factors);
    SmithForm { rank: factors.len(), factors }
}

/// Rank over the rationals by column reduction; an independent check on
/// the integral computation.
pub fn rational_rank(m: &SparseMatrix) -> usize {
    let mut pivots: HashMap<u32, BTreeMap<u32, BigRational>> = HashMap::new();
    let mut rank = 0;
    for col in &m.columns {
        let mut v: BTreeMap<u32, BigRational> =
            col.iter().map(|&(i, x)| (i, BigRational::from_integer(BigInt::from(x)))).collect();
        while let Some((&low, coeff)) = v.iter().next_back() {
            let Some(p) = pivots.get(&low) else { break };
            let factor = coeff / &p[&low];
            for (i, x) in p {
                let e = v.entry(*i).or_insert_with(BigRational::zero);
                *e -= &factor * x;
                if e.is_zero() {
                    v.remove(i);
                }
            }
        }
        if let Some((&low, _)) = v.iter().next_back() {
            pivots.insert(low, v);
            rank += 1;
        }
    }
    rank
}

fn serialize_factors<S: Serializer>(v: &[BigInt], s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for x in v {
        match x.to_u64() {
            Some(small) => seq.serialize_element(&small)?,
            None => seq.serialize_element(&x.to_string())?,
        }
    }
    seq.end()
}

fn deserialize_factors<'de, D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Vec<BigInt>, D::Error> {
    #[derive(Deserialize)]
    #[serde(untagged)]
    enum Num {
        Small(u64),
        Big(String),
    }
    Vec::<Num>::deserialize(d)?
        .into_iter()
        .map(|n| match n {
            Num::Small(v) => Ok(BigInt::from(v)),
            Num::Big(s) => s.parse().map_err(serde::de::Error::custom),
        })
        .collect()
}

/// `H_k = Z^betti + sum Z/t` for the listed torsion coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologyGroup {
    pub dim: usize,
    pub betti: usize,
    #[serde(serialize_with = "serialize_factors", deserialize_with = "deserialize_factors")]
    pub torsion: Vec<BigInt>,
}

impl HomologyGroup {
    pub fn is_zero(&self) -> bool {
        self.betti == 0 && self.torsion.is_empty()
    }
}

impl fmt::Display for HomologyGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.betti {
            0 => {}
            1 => parts.push("Z".to_string()),
            b => parts.push(format!("Z^{b}")),
        }
        parts.extend(self.torsion.iter().map(|t| format!("Z/{t}")));
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join("+"))
        }
    }
}

/// Reduced homology in dimensions `0..=dim`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct HomologyProfile {
    pub groups: Vec<HomologyGroup>,
}

impl HomologyProfile {
    pub fn betti(&self, k: usize) -> usize {
        self.groups.get(k).map_or(0, |g| g.betti)
    }

    pub fn torsion(&self, k: usize) -> &[BigInt] {
        self.groups.get(k).map_or(&[], |g| &g.torsion)
    }

    pub fn betti_numbers(&self) -> Vec<usize> {
        self.groups.iter().map(|g| g.betti).collect()
    }

    /// Groups described by `(betti, torsion)` pairs, dimension by dimension.
    pub fn matches(&self, expected: &[(usize, &[u64])]) -> bool {
        self.groups.len() == expected.len()
            && self.groups.iter().zip(expected).all(|(g, (b, t))| {
                g.betti == *b
                    && g.torsion.len() == t.len()
                    && g.torsion.iter().zip(t.iter()).all(|(x, y)| *x == BigInt::from(*y))
            })
    }
}

impl fmt::Display for HomologyProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.groups.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// Reduced integral homology. `H_k` is read off from the ranks of the
/// boundary maps out of and into dimension `k` and the torsion of the
/// latter.
pub fn reduced_homology(complex: &SimplicialComplex) -> HomologyProfile {
    let dim = complex.dim();
    if dim < 0 {
        return HomologyProfile { groups: Vec::new() };
    }
    let dim = dim as usize;
    let forms: Vec<SmithForm> =
        (0..=dim).into_par_iter().map(|k| sparse_smith_normal_form(&boundary_matrix(complex, k))).collect();
    let f = complex.f_vector();
    let groups = (0..=dim)
        .map(|k| {
            let out_rank = forms[k].rank;
            let in_form = forms.get(k + 1);
            let in_rank = in_form.map_or(0, |s| s.rank);
            HomologyGroup {
                dim: k,
                betti: f[k] - out_rank - in_rank,
                torsion: in_form.map_or(Vec::new(), SmithForm::torsion),
            }
        })
        .collect();
    HomologyProfile { groups }
}

/// Reduced Betti numbers from rational ranks alone.
pub fn rational_betti_numbers(complex: &SimplicialComplex) -> Vec<usize> {
    let dim = complex.dim();
    if dim < 0 {
        return Vec::new();
    }
    let dim = dim as usize;
    let ranks: Vec<usize> = (0..=dim).map(|k| rational_rank(&boundary_matrix(complex, k))).collect();
    let f = complex.f_vector();
    (0..=dim).map(|k| f[k] - ranks[k] - ranks.get(k + 1).copied().unwrap_or(0)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(rows: &[&[i64]]) -> Matrix<BigInt> {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect()).unwrap()
    }

    #[test]
    fn smith_examples() {
        let s = smith_normal_form(&big(&[&[2, 0], &[0, 3]]));
        assert_eq!(s.factors, vec![BigInt::from(1), BigInt::from(6)]);
        assert_eq!(smith_normal_form(&big(&[&[0, 0], &[0, 0]])).rank, 0);
        let s = smith_normal_form(&big(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]]));
        assert_eq!(s.factors, vec![BigInt::from(2), BigInt::from(6), BigInt::from(12)]);
    }

    #[test]
    fn boundary_of_triangle() {
        let k = SimplicialComplex::new(3, vec![vec![0, 1, 2]]);
        let d = boundary(&k, &Chain::oriented(&[0, 1, 2], 1)).unwrap();
        assert_eq!((d.coefficient(&[1, 2]), d.coefficient(&[0, 2]), d.coefficient(&[0, 1])), (1, -1, 1));
        assert!(boundary(&k, &d).unwrap().is_zero());
        assert_eq!(Chain::oriented(&[1, 0, 2], 1).coefficient(&[0, 1, 2]), -1);
        let outside = Chain::oriented(&[0, 3], 1);
        assert!(matches!(boundary(&k, &outside), Err(Error::FaceNotInComplex(_))));
    }

    #[test]
    fn circle_and_sphere() {
        let circle = SimplicialComplex::new(3, vec![vec![0, 1], vec![1, 2], vec![0, 2]]);
        let h = reduced_homology(&circle);
        assert!(h.matches(&[(0, &[]), (1, &[])]));
        let sphere = SimplicialComplex::new(4, vec![vec![0, 1, 2], vec![0, 1, 3], vec![0, 2, 3], vec![1, 2, 3]]);
        assert!(reduced_homology(&sphere).matches(&[(0, &[]), (0, &[]), (1, &[])]));
    }

    #[test]
    fn projective_plane_has_two_torsion() {
        // Six-vertex triangulation.
        let facets = vec![
            vec![0, 1, 3],
            vec![0, 1, 4],
            vec![0, 2, 3],
            vec![0, 2, 5],
            vec![0, 4, 5],
            vec![1, 2, 4],
            vec![1, 2, 5],
            vec![1, 3, 5],
            vec![2, 3, 4],
            vec![3, 4, 5],
        ];
        let rp2 = SimplicialComplex::new(6, facets);
        let h = reduced_homology(&rp2);
        assert!(h.matches(&[(0, &[]), (0, &[2]), (0, &[])]), "{h}");
        assert_eq!(rational_betti_numbers(&rp2), vec![0, 0, 0]);
        assert_eq!(h.to_string(), "(0, Z/2, 0)");
    }
}

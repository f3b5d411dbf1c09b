//! Shelling orders: the snake order on ternary strings and a verifier for
//! arbitrary pure complexes.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::simplicial::{is_subset, Face, SimplicialComplex};

/// String over `{1, 2, 3}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct TernaryString(Vec<u8>);

impl TernaryString {
    pub fn new(symbols: Vec<u8>) -> Result<Self> {
        if let Some(bad) = symbols.iter().find(|s| !(1..=3).contains(*s)) {
            return Err(Error::Parse(format!("symbol {bad} is not in 1..3")));
        }
        Ok(Self(symbols))
    }

    pub fn constant(symbol: u8, n: usize) -> Self {
        Self(vec![symbol; n])
    }

    pub fn symbols(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.0.windows(2).all(|w| w[0] == w[1])
    }

    /// Vertex set of the simplex for this string: position `j` with symbol
    /// `i` is vertex `3j + i - 1`.
    pub fn simplex(&self) -> Face {
        self.0.iter().enumerate().map(|(j, &s)| (3 * j) as u32 + u32::from(s) - 1).collect()
    }
}

impl fmt::Display for TernaryString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.0 {
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

impl FromStr for TernaryString {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let symbols = s
            .chars()
            .map(|c| c.to_digit(10).map(|d| d as u8).ok_or_else(|| Error::Parse(format!("bad symbol {c:?}"))))
            .collect::<Result<Vec<u8>>>()?;
        Self::new(symbols)
    }
}

impl TryFrom<String> for TernaryString {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<TernaryString> for String {
    fn from(s: TernaryString) -> String {
        s.to_string()
    }
}

/// All `3^n` strings in snake order: an odd leading symbol is followed by
/// the tails in increasing order, an even one by the tails reversed.
pub fn snake_order(n: usize) -> Vec<TernaryString> {
    let mut tails: Vec<Vec<u8>> = vec![Vec::new()];
    for _ in 0..n {
        let mut next = Vec::with_capacity(tails.len() * 3);
        for lead in 1..=3u8 {
            let ordered: Box<dyn Iterator<Item = &Vec<u8>>> =
                if lead % 2 == 1 { Box::new(tails.iter()) } else { Box::new(tails.iter().rev()) };
            for t in ordered {
                let mut s = Vec::with_capacity(t.len() + 1);
                s.push(lead);
                s.extend_from_slice(t);
                next.push(s);
            }
        }
        tails = next;
    }
    tails.into_iter().map(TernaryString).collect()
}

/// The complex on `3n` vertices whose facets are all ternary strings of
/// length `n` except the constants in `removed`, with facets listed in
/// snake order. Removing all three constants gives `T(3,n)`.
pub fn ternary_complex(n: usize, removed: &[u8]) -> (SimplicialComplex, Vec<Face>) {
    let order: Vec<Face> = snake_order(n)
        .into_iter()
        .filter(|s| !(s.is_constant() && removed.contains(&s.symbols()[0])))
        .map(|s| s.simplex())
        .collect();
    (SimplicialComplex::new(3 * n, order.clone()), order)
}

/// Outcome of a shelling test; `first_violation = (i, j)` means the
/// intersection of facet `i` with the later facet `j` is not contained in
/// a codimension-one face shared with an earlier facet.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShellingReport {
    pub valid: bool,
    pub first_violation: Option<(usize, usize)>,
}

fn check_order(complex: &SimplicialComplex, order: &[Face]) -> Result<()> {
    if let Some(first) = complex.facets().first() {
        if !complex.purity_check(first.len() - 1) {
            return Err(Error::NotPure);
        }
    }
    let mut sorted: Vec<Face> = order.to_vec();
    sorted.sort();
    if sorted != complex.facets() {
        return Err(Error::OrderMismatch);
    }
    Ok(())
}

/// For each facet, the vertices whose opposite ridge lies in an earlier
/// facet.
fn restriction_sets(order: &[Face]) -> Vec<Vec<u32>> {
    let mut first_owner: HashMap<Face, usize> = HashMap::new();
    for (j, f) in order.iter().enumerate() {
        for k in 0..f.len() {
            let mut ridge = f.clone();
            ridge.remove(k);
            first_owner.entry(ridge).or_insert(j);
        }
    }
    order
        .par_iter()
        .enumerate()
        .map(|(j, f)| {
            (0..f.len())
                .filter(|&k| {
                    let mut ridge = f.clone();
                    ridge.remove(k);
                    first_owner[&ridge] < j
                })
                .map(|k| f[k])
                .collect()
        })
        .collect()
}

/// Checks that `order` shells `complex`: every earlier facet meets `F_j`
/// inside some ridge of `F_j` that an earlier facet also contains.
pub fn is_shelling(complex: &SimplicialComplex, order: &[Face]) -> Result<ShellingReport> {
    check_order(complex, order)?;
    let restriction = restriction_sets(order);
    let mut star: Vec<Vec<usize>> = vec![Vec::new(); complex.vertex_count()];
    for (i, f) in order.iter().enumerate() {
        for &v in f {
            star[v as usize].push(i);
        }
    }
    let violation = (1..order.len()).into_par_iter().find_map_first(|j| {
        let r = &restriction[j];
        if r.is_empty() {
            return Some((0, j));
        }
        // Earlier facets containing every restriction vertex.
        let shortest = r.iter().min_by_key(|&&v| star[v as usize].len()).expect("nonempty");
        star[*shortest as usize]
            .iter()
            .copied()
            .take_while(|&i| i < j)
            .find(|&i| is_subset(r, &order[i]))
            .map(|i| (i, j))
    });
    Ok(ShellingReport { valid: violation.is_none(), first_violation: violation })
}

/// Direct check against the definition: the intersections of `F_j` with
/// earlier facets generate a pure complex of codimension one in `F_j`.
pub fn is_shelling_by_union(complex: &SimplicialComplex, order: &[Face]) -> Result<bool> {
    check_order(complex, order)?;
    Ok((1..order.len()).all(|j| {
        let f = &order[j];
        let meets: Vec<Face> =
            order[..j].iter().map(|g| f.iter().copied().filter(|v| g.binary_search(v).is_ok()).collect()).collect();
        let sub = SimplicialComplex::new(complex.vertex_count(), meets);
        sub.facets().iter().all(|m| m.len() + 1 == f.len())
    }))
}

/// Number of facets whose whole boundary is covered by earlier facets;
/// for a shelling this is the rank of the top homology.
pub fn shelling_top_betti(complex: &SimplicialComplex, order: &[Face]) -> Result<usize> {
    let report = is_shelling(complex, order)?;
    if let Some((_, j)) = report.first_violation {
        return Err(Error::NotAShelling(j));
    }
    Ok(restriction_sets(order).iter().zip(order).filter(|(r, f)| r.len() == f.len()).count())
}

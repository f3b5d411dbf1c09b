//! Combinatorics of Barvinok rank two complexes: the three crosspolytope
//! pieces of `B(3,n)` and the class strings describing `B(4,n)`.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::{Deserialize, Serialize};

use crate::canonical_line::{FaceDescriptor, Placement};
use crate::complex_gen::{build_complex, embed, facet_extreme_rays, GeneratedComplex, RayMatrix, Variant};
use crate::error::{Error, Result};
use crate::homology::Chain;
use crate::matrix::Support;
use crate::simplicial::{Face, SimplicialComplex};

/// Position of one point in a class picture: on the chosen leaf of either
/// side (`One`, `Two`), inside the bridge (`Three`), at either end of the
/// bridge (`A`, `B`) or at the centre of a collapsed bridge (`C`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClassSymbol {
    One,
    Two,
    Three,
    A,
    B,
    C,
}

impl ClassSymbol {
    pub const ALL: [ClassSymbol; 6] =
        [ClassSymbol::One, ClassSymbol::Two, ClassSymbol::Three, ClassSymbol::A, ClassSymbol::B, ClassSymbol::C];

    pub fn as_char(self) -> char {
        match self {
            ClassSymbol::One => '1',
            ClassSymbol::Two => '2',
            ClassSymbol::Three => '3',
            ClassSymbol::A => 'A',
            ClassSymbol::B => 'B',
            ClassSymbol::C => 'C',
        }
    }

    pub fn from_char(c: char) -> Option<Self> {
        Self::ALL.into_iter().find(|s| s.as_char() == c.to_ascii_uppercase())
    }

    /// Largest position lying in the closure of both.
    pub fn meet(self, other: ClassSymbol) -> ClassSymbol {
        use ClassSymbol::*;
        if self == other {
            return self;
        }
        let (a, b) = if self <= other { (self, other) } else { (other, self) };
        match (a, b) {
            (One, Three) | (One, A) | (Three, A) => A,
            (Two, Three) | (Two, B) | (Three, B) => B,
            _ => C,
        }
    }
}

/// Face of a class, one symbol per point.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct ClassString(Vec<ClassSymbol>);

impl ClassString {
    pub fn new(symbols: Vec<ClassSymbol>) -> Self {
        Self(symbols)
    }

    pub fn symbols(&self) -> &[ClassSymbol] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    fn has(&self, s: ClassSymbol) -> bool {
        self.0.contains(&s)
    }

    /// A collapsed bridge excludes bridge positions, and neither side may
    /// hold all of the points.
    pub fn is_valid(&self) -> bool {
        use ClassSymbol::*;
        let fused_ok = !self.has(C) || !(self.has(A) || self.has(B) || self.has(Three));
        let one_sided = |allowed: [ClassSymbol; 3]| self.0.iter().all(|s| allowed.contains(s));
        fused_ok && !one_sided([One, Three, A]) && !one_sided([Two, Three, B])
    }

    /// Every valid string of length `n`.
    pub fn enumerate_valid(n: usize) -> Vec<ClassString> {
        let mut out = vec![Vec::new()];
        for _ in 0..n {
            out = out
                .into_iter()
                .flat_map(|s: Vec<ClassSymbol>| {
                    ClassSymbol::ALL.into_iter().map(move |c| {
                        let mut t = s.clone();
                        t.push(c);
                        t
                    })
                })
                .collect();
        }
        out.into_iter().map(ClassString).filter(ClassString::is_valid).collect()
    }
}

impl fmt::Display for ClassString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.iter().try_for_each(|s| write!(f, "{}", s.as_char()))
    }
}

impl FromStr for ClassString {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .map(|c| ClassSymbol::from_char(c).ok_or_else(|| Error::InvalidClassString(s.to_string())))
            .collect::<Result<Vec<_>>>()
            .map(ClassString)
    }
}

impl TryFrom<String> for ClassString {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<ClassString> for String {
    fn from(s: ClassString) -> String {
        s.to_string()
    }
}

/// Result of intersecting class faces; `Empty` when nothing but the cone
/// apex is shared.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ClassFace {
    Empty,
    Face(ClassString),
}

impl ClassFace {
    pub fn intersect(&self, other: &ClassFace) -> Result<ClassFace> {
        match (self, other) {
            (ClassFace::Face(s), ClassFace::Face(t)) => class_intersect(s, t),
            _ => Ok(ClassFace::Empty),
        }
    }
}

impl fmt::Display for ClassFace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassFace::Empty => f.write_str("empty"),
            ClassFace::Face(s) => s.fmt(f),
        }
    }
}

/// Number of points off the bridge ends, plus one for an open bridge.
pub fn class_dimension(s: &ClassString) -> Result<usize> {
    if !s.is_valid() {
        return Err(Error::InvalidClassString(s.to_string()));
    }
    let free = s.0.iter().filter(|c| matches!(c, ClassSymbol::One | ClassSymbol::Two | ClassSymbol::Three)).count();
    Ok(free + usize::from(!s.has(ClassSymbol::C)))
}

/// Coordinate-wise meet; once some point sits at the collapsed centre the
/// bridge has length zero and every bridge position becomes the centre.
pub fn class_intersect(s: &ClassString, t: &ClassString) -> Result<ClassFace> {
    if s.len() != t.len() {
        return Err(Error::LengthMismatch(s.len(), t.len()));
    }
    let mut meet: Vec<ClassSymbol> = s.0.iter().zip(&t.0).map(|(a, b)| a.meet(*b)).collect();
    if meet.contains(&ClassSymbol::C) {
        for c in &mut meet {
            if matches!(c, ClassSymbol::Three | ClassSymbol::A | ClassSymbol::B) {
                *c = ClassSymbol::C;
            }
        }
    }
    let out = ClassString(meet);
    Ok(if out.is_valid() { ClassFace::Face(out) } else { ClassFace::Empty })
}

/// One of the twelve classes of `B(4,n)`: the bridge splits the leaves
/// into `far` (the side without direction 0) and its complement, and
/// points may only use leaf `near_leaf` on the direction-0 side and leaf
/// `far_leaf` on the other.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BarvinokClass {
    pub far: Support,
    pub near_leaf: usize,
    pub far_leaf: usize,
}

impl fmt::Display for BarvinokClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|{} leaves {},{}", self.far.complement(4), self.far, self.near_leaf + 1, self.far_leaf + 1)
    }
}

/// A class string placed in a class.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ClassedString {
    pub class: BarvinokClass,
    pub string: ClassString,
}

/// The twelve classes, ordered by bridge then leaves.
pub fn twelve_classes() -> Vec<BarvinokClass> {
    let mut out = Vec::new();
    for partner in 1..4 {
        let near = Support::single(0).with(partner);
        let far = near.complement(4);
        for near_leaf in near.iter() {
            for far_leaf in far.iter() {
                out.push(BarvinokClass { far, near_leaf, far_leaf });
            }
        }
    }
    out
}

fn class_descriptor(class: &BarvinokClass, s: &ClassString) -> FaceDescriptor {
    let near = class.far.complement(4);
    let node_of = |side: Support, other: Support| -> Placement {
        let mut parts: Vec<Support> = side.iter().map(Support::single).collect();
        parts.push(other);
        parts.sort();
        Placement::Node(parts)
    };
    let placements =
        s.0.iter()
            .map(|c| match c {
                ClassSymbol::One => Placement::Leaf(class.near_leaf),
                ClassSymbol::Two => Placement::Leaf(class.far_leaf),
                ClassSymbol::Three => Placement::Edge { split: class.far, rank: None },
                ClassSymbol::A => node_of(near, class.far),
                ClassSymbol::B => node_of(class.far, near),
                ClassSymbol::C => Placement::Node((0..4).map(Support::single).collect()),
            })
            .collect();
    FaceDescriptor { dim: 4, splits: vec![class.far], placements }
}

/// Extreme rays of the cone of configurations described by a valid class
/// string: one per point on a leaf, and for an open bridge one per choice
/// of end for each point inside it.
pub fn class_rays(class: &BarvinokClass, s: &ClassString) -> BTreeSet<RayMatrix> {
    let face = class_descriptor(class, s);
    let n = s.len();
    let mut rays = BTreeSet::new();
    let collapsed = [(class.far, 0)].into_iter().collect();
    for (j, c) in s.0.iter().enumerate() {
        if matches!(c, ClassSymbol::One | ClassSymbol::Two) {
            let mut offsets = vec![0; n];
            offsets[j] = 1;
            rays.insert(RayMatrix::canonical(&embed(&face, &collapsed, &offsets)));
        }
    }
    if !s.has(ClassSymbol::C) {
        let inside: Vec<usize> = (0..n).filter(|&j| s.0[j] == ClassSymbol::Three).collect();
        let open = [(class.far, 1)].into_iter().collect();
        for mask in 0..1u64 << inside.len() {
            let mut offsets = vec![0; n];
            for (b, &j) in inside.iter().enumerate() {
                offsets[j] = ((mask >> b) & 1) as i64;
            }
            rays.insert(RayMatrix::canonical(&embed(&face, &open, &offsets)));
        }
    }
    rays
}

/// Outcome of comparing the intersection table with the geometry of
/// `B(4,n)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AgreementReport {
    pub pairs_checked: usize,
    pub strings_checked: usize,
    pub agrees: bool,
    pub first_failure: Option<String>,
}

fn ray_check(
    gc: &GeneratedComplex,
    index: &HashMap<&RayMatrix, u32>,
    class: &BarvinokClass,
    s: &ClassString,
) -> Option<String> {
    let rays = class_rays(class, s);
    let ids: Option<Vec<u32>> = rays.iter().map(|r| index.get(r).copied()).collect();
    let Some(mut ids) = ids else {
        return Some(format!("{class} {s}: a ray is not a vertex of the complex"));
    };
    ids.sort_unstable();
    let best = gc
        .complex
        .facets()
        .iter()
        .map(|f| f.iter().filter(|v| ids.binary_search(v).is_ok()).count())
        .max()
        .unwrap_or(0);
    let dim = class_dimension(s).ok()?;
    (best != dim).then(|| format!("{class} {s}: expected dimension {dim}, largest covered simplex has {best} vertices"))
}

/// Checks, for `samples` random pairs of valid strings in random classes
/// (all pairs when `samples` is `None`), that intersecting strings agrees
/// with intersecting the ray sets of the cones in `B(4,n)`, and that each
/// cone is triangulated by simplices of the stated dimension.
pub fn geometric_agreement(n: usize, samples: Option<usize>, seed: u64) -> Result<AgreementReport> {
    let gc = build_complex(4, n, Variant::B)?;
    let index = gc.vertex_index();
    let strings = ClassString::enumerate_valid(n);
    let classes = twelve_classes();
    let mut rng = StdRng::seed_from_u64(seed);
    let count = strings.len();
    let pairs: Vec<(BarvinokClass, usize, usize)> = match samples {
        None => {
            classes.iter().flat_map(|&c| (0..count).flat_map(move |i| (i..count).map(move |j| (c, i, j)))).collect()
        }
        Some(k) => {
            (0..k).map(|_| (classes[rng.gen_range(0..12)], rng.gen_range(0..count), rng.gen_range(0..count))).collect()
        }
    };
    let mut checked_strings = BTreeSet::new();
    let mut first_failure = None;
    for (class, i, j) in &pairs {
        for k in [*i, *j] {
            if checked_strings.insert((*class, k)) && first_failure.is_none() {
                first_failure = ray_check(&gc, &index, class, &strings[k]);
            }
        }
        if first_failure.is_some() {
            break;
        }
        let (s, t) = (&strings[*i], &strings[*j]);
        let common: BTreeSet<RayMatrix> = class_rays(class, s).intersection(&class_rays(class, t)).cloned().collect();
        let expected = match class_intersect(s, t)? {
            ClassFace::Empty => BTreeSet::new(),
            ClassFace::Face(u) => class_rays(class, &u),
        };
        if common != expected {
            first_failure = Some(format!(
                "{class}: {s} and {t} share {} rays, the table predicts {}",
                common.len(),
                expected.len()
            ));
            break;
        }
    }
    Ok(AgreementReport {
        pairs_checked: pairs.len(),
        strings_checked: checked_strings.len(),
        agrees: first_failure.is_none(),
        first_failure,
    })
}

/// Every `B(4,n)` facet lies in exactly the classes whose conditions it
/// meets; returns the number of facets covered by no class (zero when the
/// twelve classes cover the complex).
pub fn uncovered_facets(gc: &GeneratedComplex) -> usize {
    gc.facets
        .iter()
        .filter(|f| {
            let loaded: BTreeSet<usize> = f
                .placements
                .iter()
                .filter_map(|p| match p {
                    Placement::Leaf(i) => Some(*i),
                    _ => None,
                })
                .collect();
            !twelve_classes()
                .iter()
                .any(|c| f.splits == [c.far] && loaded.iter().all(|&i| i == c.near_leaf || i == c.far_leaf))
        })
        .count()
}

/// One piece of `B(3,n)`: facets are the strings over a pair of symbols
/// other than the two constants.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrosspolytopePart {
    pub pair: (u8, u8),
    pub facets: Vec<String>,
}

impl CrosspolytopePart {
    pub fn new(pair: (u8, u8), n: usize) -> Self {
        let mut facets = Vec::new();
        for mask in 1..(1u64 << n) - 1 {
            let s: String = (0..n)
                .map(|j| if (mask >> (n - 1 - j)) & 1 == 0 { pair.0 } else { pair.1 })
                .map(|c| char::from(b'0' + c))
                .collect();
            facets.push(s);
        }
        facets.sort();
        Self { pair, facets }
    }
}

/// `B(3,n)` with every vertex labelled by `(point, leaf)`.
pub struct LabelledPlanarComplex {
    pub complex: GeneratedComplex,
    /// `labels[v] = (point, leaf)`, both 0-based.
    pub labels: Vec<(usize, usize)>,
}

impl LabelledPlanarComplex {
    pub fn build(n: usize) -> Result<Self> {
        let gc = build_complex(3, n, Variant::B)?;
        let index = gc.vertex_index();
        let mut labels = vec![(usize::MAX, usize::MAX); gc.vertices.len()];
        for f in &gc.facets {
            for (j, ray) in facet_extreme_rays(f).iter().enumerate() {
                let Placement::Leaf(leaf) = f.placements[j] else { unreachable!("planar facets use leaves only") };
                labels[index[ray] as usize] = (j, leaf);
            }
        }
        Ok(Self { complex: gc, labels })
    }

    pub fn vertex(&self, point: usize, leaf: usize) -> Option<u32> {
        self.labels.iter().position(|&l| l == (point, leaf)).map(|v| v as u32)
    }

    /// Subcomplex spanned by the facets using only the two given leaves.
    pub fn part(&self, a: usize, b: usize) -> SimplicialComplex {
        self.complex.complex.restrict(|f| {
            f.iter().all(|&v| {
                let leaf = self.labels[v as usize].1;
                leaf == a || leaf == b
            })
        })
    }

    /// Simplex on the given per-point leaves, skipping points marked `None`.
    pub fn simplex(&self, leaves: &[Option<usize>]) -> Option<Face> {
        let mut f: Face =
            leaves.iter().enumerate().filter_map(|(j, l)| l.map(|l| self.vertex(j, l))).collect::<Option<_>>()?;
        f.sort_unstable();
        Some(f)
    }

    /// Simplex oriented by point order.
    fn oriented(&self, leaves: &[Option<usize>], coeff: i64) -> Chain {
        let verts: Vec<u32> = leaves
            .iter()
            .enumerate()
            .filter_map(|(j, l)| l.map(|l| self.vertex(j, l).expect("label exists")))
            .collect();
        Chain::oriented(&verts, coeff)
    }

    /// `sum_F sgn(F) F` over the facets using leaves 0 and 1, with the sign
    /// given by the parity of points on leaf 0.
    pub fn signed_part_chain(&self) -> Chain {
        let n = self.complex.n;
        let mut c = Chain::zero(n as isize - 1);
        for mask in 1..(1u64 << n) - 1 {
            let leaves: Vec<Option<usize>> = (0..n).map(|j| Some(((mask >> j) & 1) as usize)).collect();
            let ones = leaves.iter().filter(|l| **l == Some(0)).count();
            c.add(&self.oriented(&leaves, if ones % 2 == 0 { 1 } else { -1 }));
        }
        c
    }

    /// `sum_j (-1)^j` times the face with all points on `leaf` except point
    /// `j` (counted from 1), which sits at the centre.
    pub fn missing_facet_cycle(&self, leaf: usize) -> Chain {
        let n = self.complex.n;
        let mut c = Chain::zero(n as isize - 2);
        for j in 0..n {
            let leaves: Vec<Option<usize>> = (0..n).map(|k| (k != j).then_some(leaf)).collect();
            c.add(&self.oriented(&leaves, if (j + 1) % 2 == 0 { 1 } else { -1 }));
        }
        c
    }
}

/// Outcome of the crosspolytope structure check for `B(3,n)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrosspolytopeReport {
    pub n: usize,
    pub parts_match: bool,
    pub union_matches: bool,
    pub intersections_match: bool,
}

impl CrosspolytopeReport {
    pub fn passed(&self) -> bool {
        self.parts_match && self.union_matches && self.intersections_match
    }
}

/// Verifies that each two-leaf piece of `B(3,n)` is the boundary of the
/// `n`-crosspolytope without two opposite facets, that the pieces cover
/// the complex, and that two pieces meet in the boundary of the missing
/// facet they share.
pub fn crosspolytope_check(n: usize) -> Result<CrosspolytopeReport> {
    if n < 2 {
        return Err(Error::TooFewPoints(n));
    }
    let lc = LabelledPlanarComplex::build(n)?;
    let labelled = lc.labels.iter().all(|&(j, l)| j < n && l < 3) && lc.labels.len() == 3 * n;
    let pairs = [(0, 1), (1, 2), (0, 2)];
    let mut parts_match = labelled;
    let mut parts = Vec::new();
    for &(a, b) in &pairs {
        let part = lc.part(a, b);
        // Transversals of the antipodal pairs {(j,a),(j,b)} minus the two
        // constant ones.
        let mut expected: Vec<Face> = Vec::new();
        for mask in 1..(1u64 << n) - 1 {
            let leaves: Vec<Option<usize>> = (0..n).map(|j| Some(if (mask >> j) & 1 == 0 { a } else { b })).collect();
            expected.push(lc.simplex(&leaves).ok_or(Error::TooFewPoints(n))?);
        }
        expected.sort();
        parts_match &= part.facets() == expected.as_slice() && expected.len() == (1 << n) - 2;
        parts.push(part);
    }
    let union: Vec<Face> = parts.iter().flat_map(|p| p.facets().iter().cloned()).collect();
    let union_matches = SimplicialComplex::new(lc.labels.len(), union) == lc.complex.complex;
    let mut intersections_match = true;
    for (x, y, shared) in [(0, 2, 0), (0, 1, 1), (1, 2, 2)] {
        let meet = parts[x].intersection(&parts[y]);
        let expected: Vec<Face> = (0..n)
            .map(|j| lc.simplex(&(0..n).map(|k| (k != j).then_some(shared)).collect::<Vec<_>>()).expect("labels"))
            .collect();
        intersections_match &= meet == SimplicialComplex::new(lc.labels.len(), expected);
    }
    Ok(CrosspolytopeReport { n, parts_match, union_matches, intersections_match })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cs(s: &str) -> ClassString {
        s.parse().unwrap()
    }

    #[test]
    fn dimensions() {
        assert_eq!(class_dimension(&cs("1122")).unwrap(), 5);
        assert_eq!(class_dimension(&cs("CCCC")).unwrap(), 0);
        assert_eq!(class_dimension(&cs("12AB")).unwrap(), 3);
        assert!(matches!(class_dimension(&cs("13A1")), Err(Error::InvalidClassString(_))));
        assert!(matches!(class_dimension(&cs("12C3")), Err(Error::InvalidClassString(_))));
    }

    #[test]
    fn table_entries() {
        use ClassSymbol::*;
        assert_eq!(One.meet(Two), C);
        assert_eq!(Three.meet(A), A);
        assert_eq!(One.meet(Three), A);
        assert_eq!(Two.meet(A), C);
        assert_eq!(B.meet(Three), B);
        for s in ClassSymbol::ALL {
            assert_eq!(s.meet(s), s);
            assert_eq!(s.meet(C), C);
        }
    }

    #[test]
    fn intersections() {
        assert_eq!(class_intersect(&cs("13"), &cs("31")).unwrap(), ClassFace::Empty);
        assert_eq!(class_intersect(&cs("1232"), &cs("1132")).unwrap(), ClassFace::Face(cs("1CC2")));
        assert_eq!(class_intersect(&cs("1232"), &cs("1332")).unwrap(), ClassFace::Face(cs("1B32")));
        assert!(matches!(class_intersect(&cs("12"), &cs("123")), Err(Error::LengthMismatch(2, 3))));
    }

    #[test]
    fn twelve() {
        let c = twelve_classes();
        assert_eq!(c.len(), 12);
        assert_eq!(c.iter().collect::<BTreeSet<_>>().len(), 12);
    }

    #[test]
    fn part_listing() {
        let p = CrosspolytopePart::new((1, 2), 3);
        assert_eq!(p.facets.len(), 6);
        assert!(!p.facets.contains(&"111".to_string()));
    }

    #[test]
    fn small_crosspolytopes() {
        for n in 2..=4 {
            assert!(crosspolytope_check(n).unwrap().passed(), "n = {n}");
        }
    }

    #[test]
    fn table_matches_geometry_for_two_and_three_points() {
        for n in [2, 3] {
            let r = geometric_agreement(n, None, 0).unwrap();
            assert!(r.agrees, "{:?}", r.first_failure);
        }
    }
}

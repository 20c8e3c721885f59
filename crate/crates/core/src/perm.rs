//! Permutations of `{1, .., n}`, cycle types, conjugacy classes and centralizers.
//!
//! Permutations are stored as image sequences (0-based internally); cycle
//! notation only appears at the parsing/printing boundary. Points are 1-based
//! in every public function that takes or returns a point.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::One;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Centralizers of permutations of degree up to this bound are found by
/// filtering all of `S_n`; above it the structural generators are closed.
pub const BRUTE_FORCE_DEGREE: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermError {
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("image sequence is not a bijection of 1..{0}")]
    NotABijection(usize),
    #[error("point {point} out of range 1..{degree}")]
    PointOutOfRange { point: usize, degree: usize },
    #[error("cannot parse permutation: {0}")]
    Parse(String),
    #[error("cannot parse cycle type: {0}")]
    TypeParse(String),
    #[error("cycle type {ty} does not describe a permutation of degree {degree}")]
    InconsistentType { ty: String, degree: usize },
    #[error("{0} is not in the given conjugacy class")]
    NotInClass(String),
    #[error("{0} is not a valid coset section")]
    BadSection(String),
}

/// An element of `S_n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u8>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        assert!(degree < 256, "degree {degree} too large");
        Permutation {
            images: (0..degree as u8).collect(),
        }
    }

    /// Builds a permutation from the 1-based images of `1..=n`.
    pub fn from_images(images: &[usize]) -> Result<Self, PermError> {
        let n = images.len();
        if n >= 256 {
            return Err(PermError::NotABijection(n));
        }
        let mut seen = vec![false; n];
        let mut out = Vec::with_capacity(n);
        for &im in images {
            if im == 0 || im > n || seen[im - 1] {
                return Err(PermError::NotABijection(n));
            }
            seen[im - 1] = true;
            out.push((im - 1) as u8);
        }
        Ok(Permutation { images: out })
    }

    /// Builds a permutation of degree `n` from disjoint cycles of 1-based points.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self, PermError> {
        let mut images: Vec<usize> = (1..=degree).collect();
        let mut used = vec![false; degree];
        for cycle in cycles {
            for &p in cycle {
                if p == 0 || p > degree {
                    return Err(PermError::PointOutOfRange { point: p, degree });
                }
                if used[p - 1] {
                    return Err(PermError::Parse(format!("point {p} repeated")));
                }
                used[p - 1] = true;
            }
            for (k, &p) in cycle.iter().enumerate() {
                images[p - 1] = cycle[(k + 1) % cycle.len()];
            }
        }
        Permutation::from_images(&images)
    }

    /// Parses cycle notation such as `"(1 2)(3 4)"`, or `"e"` for the identity.
    pub fn parse(text: &str, degree: usize) -> Result<Self, PermError> {
        let text = text.trim();
        if text == "e" || text == "()" || text.is_empty() {
            return Ok(Permutation::identity(degree));
        }
        let mut cycles = Vec::new();
        let mut rest = text;
        while !rest.is_empty() {
            let rest_trim = rest.trim_start();
            if rest_trim.is_empty() {
                break;
            }
            if !rest_trim.starts_with('(') {
                return Err(PermError::Parse(text.to_string()));
            }
            let close = rest_trim
                .find(')')
                .ok_or_else(|| PermError::Parse(text.to_string()))?;
            let body = &rest_trim[1..close];
            let tokens: Vec<&str> = body
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|t| !t.is_empty())
                .collect();
            let points: Result<Vec<usize>, _> = if tokens.len() == 1 && degree < 10 {
                // compact form "(123)" for single-digit points
                tokens[0]
                    .chars()
                    .map(|c| c.to_digit(10).map(|d| d as usize).ok_or(()))
                    .collect()
            } else {
                tokens.iter().map(|t| t.parse::<usize>().map_err(|_| ())).collect()
            };
            let points = points.map_err(|_| PermError::Parse(text.to_string()))?;
            cycles.push(points);
            rest = &rest_trim[close + 1..];
        }
        Permutation::from_cycles(degree, &cycles)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of the 1-based point `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1] as usize + 1
    }

    /// 1-based image sequence.
    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&i| i as usize + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &im)| i == im as usize)
    }

    /// `self ∘ other`, i.e. `i ↦ self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation, PermError> {
        if self.degree() != other.degree() {
            return Err(PermError::DegreeMismatch(self.degree(), other.degree()));
        }
        Ok(self.mul(other))
    }

    /// Unchecked composition; panics on degree mismatch.
    pub fn mul(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        Permutation {
            images: other.images.iter().map(|&i| self.images[i as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u8; self.degree()];
        for (i, &im) in self.images.iter().enumerate() {
            inv[im as usize] = i as u8;
        }
        Permutation { images: inv }
    }

    pub fn pow(&self, k: i64) -> Permutation {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut out = Permutation::identity(self.degree());
        for _ in 0..k.unsigned_abs() {
            out = out.mul(&base);
        }
        out
    }

    /// `g ▷ h = g h g⁻¹`.
    pub fn conjugate(g: &Permutation, h: &Permutation) -> Result<Permutation, PermError> {
        if g.degree() != h.degree() {
            return Err(PermError::DegreeMismatch(g.degree(), h.degree()));
        }
        Ok(g.act(h))
    }

    /// `self ▷ h`, unchecked.
    pub fn act(&self, h: &Permutation) -> Permutation {
        let mut images = vec![0u8; h.degree()];
        for (i, &hi) in h.images.iter().enumerate() {
            images[self.images[i] as usize] = self.images[hi as usize];
        }
        Permutation { images }
    }

    pub fn commutes_with(&self, other: &Permutation) -> bool {
        self.mul(other) == other.mul(self)
    }

    /// All cycles including fixed points, each starting at its smallest point,
    /// ordered by that point. Points are 1-based.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                cycle.push(p + 1);
                p = self.images[p] as usize;
            }
            out.push(cycle);
        }
        out
    }

    pub fn cycle_type(&self) -> CycleType {
        let mut mult = vec![0usize; self.degree()];
        for c in self.cycles() {
            mult[c.len() - 1] += 1;
        }
        CycleType { multiplicities: mult }
    }

    /// Least common multiple of the cycle lengths.
    pub fn order(&self) -> u64 {
        self.cycles()
            .iter()
            .fold(1u64, |acc, c| acc.lcm(&(c.len() as u64)))
    }

    /// `+1` for even permutations, `-1` for odd ones.
    pub fn sign(&self) -> i32 {
        let transpositions: usize = self.cycles().iter().map(|c| c.len() - 1).sum();
        if transpositions % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Support points (moved points), 1-based.
    pub fn support(&self) -> Vec<usize> {
        (1..=self.degree()).filter(|&i| self.apply(i) != i).collect()
    }

    /// An involution (or the identity) `σ` with `σ p σ⁻¹ = p⁻¹`.
    ///
    /// On each cycle `(c₀ c₁ … c_{j-1})`, written from its smallest point, the
    /// point in position `i` (1-based) is swapped with the point in position
    /// `j - i` for `i < j/2`, and the last point is fixed. For the standard
    /// cycle `(1 2 … j)` this is `(1 j-1)(2 j-2)⋯`.
    pub fn reversal_involution(&self) -> Permutation {
        let mut images: Vec<u8> = (0..self.degree() as u8).collect();
        for cycle in self.cycles() {
            let j = cycle.len() as i64;
            for (a, &point) in cycle.iter().enumerate() {
                let b = (j - 2 - a as i64).rem_euclid(j) as usize;
                images[point - 1] = (cycle[b] - 1) as u8;
            }
        }
        let sigma = Permutation { images };
        debug_assert!(sigma.act(self) == self.inverse());
        sigma
    }

    /// `π # τ`: `π` acts on the first `n` points, `τ` on the following `p`.
    pub fn concat(&self, tau: &Permutation) -> Permutation {
        let n = self.degree() as u8;
        let mut images = self.images.clone();
        images.extend(tau.images.iter().map(|&i| i + n));
        assert!(images.len() < 256);
        Permutation { images }
    }

    /// No cycle length (fixed points included) occurs in both permutations.
    pub fn is_orthogonal(&self, tau: &Permutation) -> bool {
        self.cycle_type().is_orthogonal(&tau.cycle_type())
    }

    /// Restriction to an invariant set of points, relabelled in increasing order.
    pub fn restrict(&self, points: &[usize]) -> Option<Permutation> {
        let index: HashMap<usize, usize> =
            points.iter().enumerate().map(|(k, &p)| (p, k + 1)).collect();
        let images: Option<Vec<usize>> = points
            .iter()
            .map(|&p| index.get(&self.apply(p)).copied())
            .collect();
        Permutation::from_images(&images?).ok()
    }

    /// Extension by fixed points to degree `m ≥ n`.
    pub fn extend(&self, degree: usize) -> Permutation {
        assert!(degree >= self.degree());
        let mut images = self.images.clone();
        images.extend(self.degree() as u8..degree as u8);
        Permutation { images }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles: Vec<_> = self.cycles().into_iter().filter(|c| c.len() > 1).collect();
        if cycles.is_empty() {
            return write!(f, "e");
        }
        for c in cycles {
            let pts: Vec<String> = c.iter().map(|p| p.to_string()).collect();
            write!(f, "({})", pts.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for Permutation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Lexicographic successor of an image sequence; `false` at the last one.
fn next_permutation(v: &mut [u8]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// All of `S_n` in lexicographic order of image sequences.
pub fn symmetric_group(degree: usize) -> impl Iterator<Item = Permutation> {
    let mut current: Option<Vec<u8>> = Some((0..degree as u8).collect());
    std::iter::from_fn(move || {
        let out = current.clone()?;
        let mut next = out.clone();
        current = if next_permutation(&mut next) { Some(next) } else { None };
        Some(Permutation { images: out })
    })
}

pub fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * BigUint::from(k))
}

/// `(1^{m₁}, 2^{m₂}, …)`: the conjugacy class invariant of a permutation.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CycleType {
    /// `multiplicities[j - 1]` is the number of `j`-cycles; length is the degree.
    multiplicities: Vec<usize>,
}

impl CycleType {
    pub fn from_multiplicities(degree: usize, mult: &BTreeMap<usize, usize>) -> Result<Self, PermError> {
        let mut m = vec![0usize; degree];
        let mut total = 0;
        for (&j, &k) in mult {
            if j == 0 || j > degree.max(1) {
                return Err(PermError::InconsistentType {
                    ty: format!("{mult:?}"),
                    degree,
                });
            }
            if k > 0 {
                m[j - 1] += k;
                total += j * k;
            }
        }
        if total != degree {
            return Err(PermError::InconsistentType {
                ty: format!("{mult:?}"),
                degree,
            });
        }
        Ok(CycleType { multiplicities: m })
    }

    /// Parses `"2^2 3"`: lengths with optional multiplicities. Points not
    /// covered by the listed cycles become fixed points.
    pub fn parse(text: &str, degree: usize) -> Result<Self, PermError> {
        let mut mult: BTreeMap<usize, usize> = BTreeMap::new();
        let mut covered = 0usize;
        for token in text.split(|c: char| c.is_whitespace() || c == ',') {
            if token.is_empty() {
                continue;
            }
            let (len, m) = match token.split_once('^') {
                Some((l, m)) => (l, m),
                None => (token, "1"),
            };
            let len: usize = len
                .trim()
                .parse()
                .map_err(|_| PermError::TypeParse(text.to_string()))?;
            let m: usize = m
                .trim()
                .parse()
                .map_err(|_| PermError::TypeParse(text.to_string()))?;
            if len == 0 {
                return Err(PermError::TypeParse(text.to_string()));
            }
            *mult.entry(len).or_default() += m;
            covered += len * m;
        }
        if covered > degree {
            return Err(PermError::InconsistentType {
                ty: text.to_string(),
                degree,
            });
        }
        *mult.entry(1).or_default() += degree - covered;
        CycleType::from_multiplicities(degree, &mult)
    }

    pub fn degree(&self) -> usize {
        self.multiplicities.len()
    }

    /// Number of `j`-cycles.
    pub fn multiplicity(&self, j: usize) -> usize {
        if j == 0 {
            return 0;
        }
        self.multiplicities.get(j - 1).copied().unwrap_or(0)
    }

    /// `(j, m_j)` for every `m_j > 0`, ascending in `j`.
    pub fn parts(&self) -> Vec<(usize, usize)> {
        self.multiplicities
            .iter()
            .enumerate()
            .filter(|(_, &m)| m > 0)
            .map(|(j, &m)| (j + 1, m))
            .collect()
    }

    /// Cycle lengths with repetition, ascending.
    pub fn lengths(&self) -> Vec<usize> {
        self.parts()
            .into_iter()
            .flat_map(|(j, m)| std::iter::repeat(j).take(m))
            .collect()
    }

    /// Builds a type from a multiset of cycle lengths (fixed points included).
    pub fn from_lengths(lengths: &[usize]) -> CycleType {
        let degree: usize = lengths.iter().sum();
        let mut m = vec![0usize; degree];
        for &l in lengths {
            m[l - 1] += 1;
        }
        CycleType { multiplicities: m }
    }

    pub fn order(&self) -> u64 {
        self.parts().iter().fold(1u64, |acc, &(j, _)| acc.lcm(&(j as u64)))
    }

    pub fn is_identity(&self) -> bool {
        self.parts().iter().all(|&(j, _)| j == 1)
    }

    /// `Π j^{m_j} m_j!`
    pub fn centralizer_order(&self) -> BigUint {
        self.parts().iter().fold(BigUint::one(), |acc, &(j, m)| {
            acc * BigUint::from(j).pow(m as u32) * factorial(m)
        })
    }

    pub fn class_size(&self) -> BigUint {
        factorial(self.degree()) / self.centralizer_order()
    }

    pub fn is_orthogonal(&self, other: &CycleType) -> bool {
        self.parts()
            .iter()
            .all(|&(j, _)| other.multiplicity(j) == 0)
    }

    /// The canonical representative: non-trivial cycles in increasing length on
    /// consecutive points starting at 1, fixed points last.
    pub fn representative(&self) -> Permutation {
        let n = self.degree();
        let mut cycles = Vec::new();
        let mut next = 1;
        for (j, m) in self.parts() {
            if j == 1 {
                continue;
            }
            for _ in 0..m {
                cycles.push((next..next + j).collect::<Vec<_>>());
                next += j;
            }
        }
        Permutation::from_cycles(n, &cycles).expect("consistent type")
    }

    /// Every cycle type of degree `n`, ordered by the partition (descending
    /// lengths, lexicographically).
    pub fn all(degree: usize) -> Vec<CycleType> {
        fn rec(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if rem == 0 {
                out.push(cur.clone());
                return;
            }
            for part in (1..=rem.min(max)).rev() {
                cur.push(part);
                rec(rem - part, part, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(degree, degree, &mut Vec::new(), &mut out);
        out.iter().map(|l| CycleType::from_lengths(l)).collect()
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .parts()
            .iter()
            .map(|&(j, m)| if m == 1 { j.to_string() } else { format!("{j}^{m}") })
            .collect();
        if parts.is_empty() {
            return write!(f, "()");
        }
        write!(f, "{}", parts.join(" "))
    }
}

impl fmt::Debug for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycleType({self})")
    }
}

impl FromStr for CycleType {
    type Err = PermError;
    /// Parses a type whose listed lengths cover every point, e.g. `"1^2 2"`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut covered = 0;
        for token in s.split_whitespace() {
            let (l, m) = token.split_once('^').unwrap_or((token, "1"));
            let l: usize = l.parse().map_err(|_| PermError::TypeParse(s.to_string()))?;
            let m: usize = m.parse().map_err(|_| PermError::TypeParse(s.to_string()))?;
            covered += l * m;
        }
        CycleType::parse(s, covered)
    }
}

/// The conjugacy class of type `ty` in `S_n`, sorted lexicographically by
/// image sequence.
pub fn enumerate_class(degree: usize, ty: &CycleType) -> Result<Vec<Permutation>, PermError> {
    if ty.degree() != degree {
        return Err(PermError::InconsistentType {
            ty: ty.to_string(),
            degree,
        });
    }
    let mut lengths: BTreeMap<usize, usize> = ty.parts().into_iter().collect();
    let mut images = vec![u8::MAX; degree];
    let mut out = Vec::new();

    fn place(
        images: &mut Vec<u8>,
        lengths: &mut BTreeMap<usize, usize>,
        out: &mut Vec<Permutation>,
    ) {
        let Some(start) = images.iter().position(|&x| x == u8::MAX) else {
            out.push(Permutation { images: images.clone() });
            return;
        };
        let free: Vec<usize> = (0..images.len())
            .filter(|&i| i != start && images[i] == u8::MAX)
            .collect();
        let keys: Vec<usize> = lengths.iter().filter(|(_, &m)| m > 0).map(|(&j, _)| j).collect();
        for j in keys {
            *lengths.get_mut(&j).unwrap() -= 1;
            // choose the ordered tail of the cycle starting at `start`
            let mut tail = Vec::with_capacity(j - 1);
            choose_tail(start, j - 1, &free, &mut tail, images, lengths, out);
            *lengths.get_mut(&j).unwrap() += 1;
        }
    }

    fn choose_tail(
        start: usize,
        remaining: usize,
        free: &[usize],
        tail: &mut Vec<usize>,
        images: &mut Vec<u8>,
        lengths: &mut BTreeMap<usize, usize>,
        out: &mut Vec<Permutation>,
    ) {
        if remaining == 0 {
            let mut prev = start;
            for &p in tail.iter() {
                images[prev] = p as u8;
                prev = p;
            }
            images[prev] = start as u8;
            place(images, lengths, out);
            images[start] = u8::MAX;
            for &p in tail.iter() {
                images[p] = u8::MAX;
            }
            return;
        }
        for &p in free {
            if tail.contains(&p) {
                continue;
            }
            tail.push(p);
            choose_tail(start, remaining - 1, free, tail, images, lengths, out);
            tail.pop();
        }
    }

    place(&mut images, &mut lengths, &mut out);
    out.sort();
    Ok(out)
}

/// One factor `T_j = (Z/j)^{m_j} ⋊ S_{m_j}` of a centralizer, attached to the
/// `j`-cycles of the centralized permutation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CentralizerBlock {
    pub cycle_length: usize,
    pub multiplicity: usize,
    /// The `j`-cycles, each starting at its smallest point.
    pub cycles: Vec<Vec<usize>>,
}

impl CentralizerBlock {
    pub fn support(&self) -> Vec<usize> {
        let mut s: Vec<usize> = self.cycles.iter().flatten().copied().collect();
        s.sort_unstable();
        s
    }

    pub fn order(&self) -> BigUint {
        BigUint::from(self.cycle_length).pow(self.multiplicity as u32) * factorial(self.multiplicity)
    }

    /// Generators inside the ambient `S_n`: a rotation of the first cycle and
    /// the aligned swap/shift of the cycles.
    pub fn generators(&self, degree: usize) -> Vec<Permutation> {
        let mut gens = Vec::new();
        let j = self.cycle_length;
        if j > 1 {
            gens.push(Permutation::from_cycles(degree, &[self.cycles[0].clone()]).unwrap());
        }
        let m = self.multiplicity;
        if m >= 2 {
            let mut swap = Vec::new();
            for k in 0..j {
                swap.push(vec![self.cycles[0][k], self.cycles[1][k]]);
            }
            gens.push(Permutation::from_cycles(degree, &swap).unwrap());
        }
        if m >= 3 {
            let mut shift = Vec::new();
            for k in 0..j {
                shift.push(self.cycles.iter().map(|c| c[k]).collect::<Vec<_>>());
            }
            gens.push(Permutation::from_cycles(degree, &shift).unwrap());
        }
        gens
    }

    /// Short structural name, e.g. `Z4`, `Z2^2 x| S2`, `S3`.
    pub fn name(&self) -> String {
        match (self.cycle_length, self.multiplicity) {
            (1, m) => format!("S{m}"),
            (j, 1) => format!("Z{j}"),
            (2, 2) => "D4".to_string(),
            (j, m) => format!("Z{j}^{m} x| S{m}"),
        }
    }
}

/// Structure attached to a subgroup when known.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Structure {
    /// A centralizer `T₁ ⋯ T_n`, blocks ordered as in
    /// [`centralizer_blocks`].
    Centralizer(Vec<CentralizerBlock>),
    Cyclic(usize),
    Dihedral4,
}

/// A subgroup of `S_n` given by generators; elements are enumerated on demand.
#[derive(Debug, Clone)]
pub struct Subgroup {
    degree: usize,
    generators: Vec<Permutation>,
    structure: Option<Structure>,
    elements: OnceLock<Vec<Permutation>>,
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.degree == other.degree && self.elements() == other.elements()
    }
}

impl Eq for Subgroup {}

impl Subgroup {
    pub fn generated_by(degree: usize, generators: Vec<Permutation>) -> Result<Self, PermError> {
        for g in &generators {
            if g.degree() != degree {
                return Err(PermError::DegreeMismatch(degree, g.degree()));
            }
        }
        Ok(Subgroup {
            degree,
            generators,
            structure: None,
            elements: OnceLock::new(),
        })
    }

    /// A subgroup with a known, sorted element list.
    pub fn from_elements(degree: usize, mut elements: Vec<Permutation>, generators: Vec<Permutation>) -> Self {
        elements.sort();
        elements.dedup();
        let cell = OnceLock::new();
        let _ = cell.set(elements);
        Subgroup {
            degree,
            generators,
            structure: None,
            elements: cell,
        }
    }

    pub fn with_structure(mut self, structure: Structure) -> Self {
        self.structure = Some(structure);
        self
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn structure(&self) -> Option<&Structure> {
        self.structure.as_ref()
    }

    /// All elements, sorted lexicographically.
    pub fn elements(&self) -> &[Permutation] {
        self.elements.get_or_init(|| {
            let mut seen: HashSet<Permutation> = HashSet::new();
            let id = Permutation::identity(self.degree);
            let mut queue = VecDeque::from([id.clone()]);
            seen.insert(id);
            while let Some(x) = queue.pop_front() {
                for g in &self.generators {
                    let y = x.mul(g);
                    if seen.insert(y.clone()) {
                        queue.push_back(y);
                    }
                }
            }
            let mut v: Vec<_> = seen.into_iter().collect();
            v.sort();
            v
        })
    }

    pub fn order(&self) -> usize {
        self.elements().len()
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.elements().binary_search(p).is_ok()
    }

    pub fn is_abelian(&self) -> bool {
        self.generators
            .iter()
            .all(|a| self.generators.iter().all(|b| a.commutes_with(b)))
    }

    /// Human-readable structure name.
    pub fn name(&self) -> String {
        match &self.structure {
            Some(Structure::Centralizer(blocks)) => {
                let names: Vec<String> = blocks
                    .iter()
                    .filter(|b| !(b.cycle_length == 1 && b.multiplicity <= 1))
                    .map(|b| b.name())
                    .collect();
                if names.is_empty() {
                    "1".to_string()
                } else {
                    names.join(" x ")
                }
            }
            Some(Structure::Cyclic(k)) => format!("Z{k}"),
            Some(Structure::Dihedral4) => "D4".to_string(),
            None => format!("<{} generators, order {}>", self.generators.len(), self.order()),
        }
    }
}

/// The centralizer blocks of `p`: one per cycle length, non-trivial lengths
/// ascending, fixed points last.
pub fn centralizer_blocks(p: &Permutation) -> Vec<CentralizerBlock> {
    let mut by_len: BTreeMap<usize, Vec<Vec<usize>>> = BTreeMap::new();
    for c in p.cycles() {
        by_len.entry(c.len()).or_default().push(c);
    }
    let fixed = by_len.remove(&1);
    let mut blocks: Vec<CentralizerBlock> = by_len
        .into_iter()
        .map(|(j, cycles)| CentralizerBlock {
            cycle_length: j,
            multiplicity: cycles.len(),
            cycles,
        })
        .collect();
    if let Some(cycles) = fixed {
        blocks.push(CentralizerBlock {
            cycle_length: 1,
            multiplicity: cycles.len(),
            cycles,
        });
    }
    blocks
}

/// The full centralizer of `p` in `S_n`, tagged with its block structure.
pub fn centralizer(p: &Permutation) -> Subgroup {
    let n = p.degree();
    let blocks = centralizer_blocks(p);
    let generators: Vec<Permutation> = blocks.iter().flat_map(|b| b.generators(n)).collect();
    let group = if n <= BRUTE_FORCE_DEGREE {
        let elements: Vec<Permutation> = symmetric_group(n).filter(|g| g.commutes_with(p)).collect();
        Subgroup::from_elements(n, elements, generators)
    } else {
        Subgroup::generated_by(n, generators).expect("same degree")
    };
    group.with_structure(Structure::Centralizer(blocks))
}

/// A numeration `t₁ = s, …, t_M` of a class with `gᵢ ▷ s = tᵢ` and `g₁ = e`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CosetSection {
    base_point: Permutation,
    class_list: Vec<Permutation>,
    reps: Vec<Permutation>,
    #[serde(skip)]
    index: HashMap<Permutation, usize>,
}

impl CosetSection {
    /// Canonical section: `t₁ = s`, then the rest of `class` in the given
    /// order; each `gᵢ` is the lexicographically first conjugator (degree at
    /// most [`BRUTE_FORCE_DEGREE`]) or a cycle-aligned conjugator above it.
    pub fn new(class: &[Permutation], s: &Permutation) -> Result<Self, PermError> {
        if !class.contains(s) {
            return Err(PermError::NotInClass(s.to_string()));
        }
        let n = s.degree();
        let mut class_list = vec![s.clone()];
        class_list.extend(class.iter().filter(|t| *t != s).cloned());
        let mut reps: Vec<Option<Permutation>> = vec![None; class_list.len()];
        let index: HashMap<Permutation, usize> = class_list
            .iter()
            .enumerate()
            .map(|(i, t)| (t.clone(), i))
            .collect();
        if n <= BRUTE_FORCE_DEGREE {
            let mut missing = reps.len();
            for g in symmetric_group(n) {
                if let Some(&i) = index.get(&g.act(s)) {
                    if reps[i].is_none() {
                        reps[i] = Some(g);
                        missing -= 1;
                        if missing == 0 {
                            break;
                        }
                    }
                }
            }
        } else {
            for (i, t) in class_list.iter().enumerate() {
                reps[i] = Some(if i == 0 {
                    Permutation::identity(n)
                } else {
                    aligned_conjugator(s, t)
                });
            }
        }
        let reps: Option<Vec<Permutation>> = reps.into_iter().collect();
        let reps = reps.ok_or_else(|| PermError::BadSection("class is not a single orbit".into()))?;
        Ok(CosetSection {
            base_point: s.clone(),
            class_list,
            reps,
            index,
        })
    }

    /// A section from explicit representatives `g₁ = e, g₂, …`; the class
    /// numeration is `tᵢ = gᵢ ▷ s`.
    pub fn from_reps(s: &Permutation, reps: Vec<Permutation>) -> Result<Self, PermError> {
        if reps.first().map_or(true, |g| !g.is_identity()) {
            return Err(PermError::BadSection("g1 must be the identity".into()));
        }
        let class_list: Vec<Permutation> = reps.iter().map(|g| g.act(s)).collect();
        let index: HashMap<Permutation, usize> = class_list
            .iter()
            .enumerate()
            .map(|(i, t)| (t.clone(), i))
            .collect();
        if index.len() != class_list.len() {
            return Err(PermError::BadSection("repeated class element".into()));
        }
        let expected = s.cycle_type().class_size();
        if BigUint::from(class_list.len()) != expected {
            return Err(PermError::BadSection("does not exhaust the class".into()));
        }
        Ok(CosetSection {
            base_point: s.clone(),
            class_list,
            reps,
            index,
        })
    }

    pub fn base_point(&self) -> &Permutation {
        &self.base_point
    }

    pub fn class_list(&self) -> &[Permutation] {
        &self.class_list
    }

    pub fn reps(&self) -> &[Permutation] {
        &self.reps
    }

    pub fn len(&self) -> usize {
        self.class_list.len()
    }

    pub fn is_empty(&self) -> bool {
        self.class_list.is_empty()
    }

    /// Position of a class element in the numeration.
    pub fn index_of(&self, t: &Permutation) -> Option<usize> {
        self.index.get(t).copied()
    }

    /// Factors `g gᵢ = g_j γ` with `γ` in the centralizer of `s`; returns `(j, γ)`.
    pub fn factor(&self, g: &Permutation, i: usize) -> (usize, Permutation) {
        let t = g.act(&self.class_list[i]);
        let j = self.index[&t];
        let gamma = self.reps[j].inverse().mul(&g.mul(&self.reps[i]));
        (j, gamma)
    }

    /// Checks `gᵢ s gᵢ⁻¹ = tᵢ` for every `i` and that `t`'s are distinct.
    pub fn is_valid(&self) -> bool {
        self.reps
            .iter()
            .zip(&self.class_list)
            .all(|(g, t)| g.act(&self.base_point) == *t)
            && self.index.len() == self.class_list.len()
            && self.reps[0].is_identity()
    }
}

/// A conjugator mapping the cycles of `s` onto those of `t`, matched by
/// length in order of smallest point.
fn aligned_conjugator(s: &Permutation, t: &Permutation) -> Permutation {
    let n = s.degree();
    let mut by_len_s: BTreeMap<usize, Vec<Vec<usize>>> = BTreeMap::new();
    let mut by_len_t: BTreeMap<usize, Vec<Vec<usize>>> = BTreeMap::new();
    for c in s.cycles() {
        by_len_s.entry(c.len()).or_default().push(c);
    }
    for c in t.cycles() {
        by_len_t.entry(c.len()).or_default().push(c);
    }
    let mut images = vec![0usize; n];
    for (len, cs) in by_len_s {
        for (a, b) in cs.iter().zip(&by_len_t[&len]) {
            for k in 0..len {
                images[a[k] - 1] = b[k];
            }
        }
    }
    Permutation::from_images(&images).expect("bijection")
}

/// Compares cycle-type multisets; used to order types in reports.
pub fn compare_types(a: &CycleType, b: &CycleType) -> Ordering {
    let mut la = a.lengths();
    let mut lb = b.lengths();
    la.reverse();
    lb.reverse();
    la.cmp(&lb)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str, n: usize) -> Permutation {
        Permutation::parse(s, n).unwrap()
    }

    #[test]
    fn composition_examples() {
        let t12 = p("(1 2)", 3);
        let t23 = p("(2 3)", 3);
        assert!(t12.compose(&t12).unwrap().is_identity());
        assert_eq!(t12.compose(&t23).unwrap(), p("(1 2 3)", 3));
        let e = Permutation::identity(3);
        assert_eq!(e.compose(&t23).unwrap(), t23);
        assert_eq!(
            t12.compose(&Permutation::identity(4)),
            Err(PermError::DegreeMismatch(3, 4))
        );
    }

    #[test]
    fn composition_table_of_s3_brute_force() {
        // (12)∘(23) evaluated pointwise
        let a = [2usize, 1, 3];
        let b = [1usize, 3, 2];
        let composed: Vec<usize> = (0..3).map(|i| a[b[i] - 1]).collect();
        assert_eq!(composed, p("(1 2 3)", 3).images());
    }

    #[test]
    fn conjugation_examples() {
        assert_eq!(
            Permutation::conjugate(&p("(1 2)", 3), &p("(2 3)", 3)).unwrap(),
            p("(1 3)", 3)
        );
        let e = Permutation::identity(4);
        assert!(p("(1 3)", 4).act(&e).is_identity());
        assert_eq!(p("(2 3)", 4).act(&p("(1 3)(2 4)", 4)), p("(1 2)(3 4)", 4));
    }

    #[test]
    fn cycle_types_and_orders() {
        assert_eq!(p("(1 2)(3 4)", 4).cycle_type().to_string(), "2^2");
        assert_eq!(Permutation::identity(5).cycle_type().to_string(), "1^5");
        assert_eq!(p("(1 2 3)(4 5)", 5).cycle_type().to_string(), "2 3");
        assert_eq!(p("(1 2 3)", 3).order(), 3);
        assert_eq!(p("(1 2)(3 4 5)", 5).order(), 6);
        assert_eq!(Permutation::identity(4).order(), 1);
    }

    #[test]
    fn parse_and_print_round_trip() {
        for g in symmetric_group(5) {
            assert_eq!(Permutation::parse(&g.to_string(), 5).unwrap(), g);
        }
        assert_eq!(p("(123)", 4), p("(1 2 3)", 4));
        assert!(Permutation::parse("(1 2", 3).is_err());
        assert!(Permutation::parse("(1 4)", 3).is_err());
        assert!(Permutation::parse("(1 2)(2 3)", 3).is_err());
    }

    #[test]
    fn type_grammar() {
        let t = CycleType::parse("2^2 3", 8).unwrap();
        assert_eq!(t.to_string(), "1 2^2 3");
        assert_eq!(CycleType::parse("2 1", 3).unwrap().to_string(), "1 2");
        assert_eq!(CycleType::parse("2 1^4", 6).unwrap(), CycleType::parse("2", 6).unwrap());
        assert!(CycleType::parse("4 4", 6).is_err());
        assert!(CycleType::parse("x", 6).is_err());
        assert_eq!("1^2 2".parse::<CycleType>().unwrap().degree(), 4);
    }

    #[test]
    fn class_enumeration() {
        let t = CycleType::parse("2^2", 4).unwrap();
        let class = enumerate_class(4, &t).unwrap();
        assert_eq!(
            class,
            vec![p("(1 2)(3 4)", 4), p("(1 3)(2 4)", 4), p("(1 4)(2 3)", 4)]
        );
        let brute = |n: usize, t: &CycleType| symmetric_group(n).filter(|g| g.cycle_type() == *t).count();
        let t = CycleType::parse("2", 3).unwrap();
        assert_eq!(enumerate_class(3, &t).unwrap().len(), 3);
        assert_eq!(brute(3, &t), 3);
        let t = CycleType::parse("4", 4).unwrap();
        assert_eq!(enumerate_class(4, &t).unwrap().len(), 6);
        assert_eq!(brute(4, &t), 6);
        assert!(enumerate_class(5, &t).is_err());
    }

    #[test]
    fn class_enumeration_matches_brute_force() {
        for n in 1..=6 {
            for t in CycleType::all(n) {
                let mut brute: Vec<_> = symmetric_group(n).filter(|g| g.cycle_type() == t).collect();
                brute.sort();
                assert_eq!(enumerate_class(n, &t).unwrap(), brute, "type {t}");
                assert_eq!(BigUint::from(brute.len()), t.class_size());
            }
        }
    }

    #[test]
    fn centralizer_examples() {
        let a = p("(1 3)(2 4)", 4);
        let c = centralizer(&a);
        assert_eq!(c.order(), 8);
        let d4 = Subgroup::generated_by(4, vec![p("(1 2 3 4)", 4), p("(1 3)", 4)]).unwrap();
        assert_eq!(c, d4);
        let tau = p("(1 2 3 4 5)", 5);
        let c = centralizer(&tau);
        assert_eq!(c.order(), 5);
        assert!(c.elements().iter().all(|g| g.commutes_with(&tau)));
        assert_eq!(centralizer(&Permutation::identity(4)).order(), 24);
    }

    #[test]
    fn structural_centralizer_above_brute_force_bound() {
        let s = CycleType::parse("2^2 3^2", 10).unwrap().representative();
        let c = centralizer(&s);
        assert_eq!(BigUint::from(c.order()), s.cycle_type().centralizer_order());
        assert!(c.elements().iter().all(|g| g.commutes_with(&s)));
    }

    #[test]
    fn structural_generators_match_brute_force() {
        for n in 1..=6 {
            for t in CycleType::all(n) {
                let s = t.representative();
                let gens: Vec<_> = centralizer_blocks(&s).iter().flat_map(|b| b.generators(n)).collect();
                let closed = Subgroup::generated_by(n, gens).unwrap();
                assert_eq!(closed, centralizer(&s), "type {t}");
            }
        }
    }

    #[test]
    fn coset_sections() {
        let e = Permutation::identity(3);
        let sec = CosetSection::new(&[e.clone()], &e).unwrap();
        assert_eq!(sec.reps(), &[e.clone()]);

        let a = p("(1 3)(2 4)", 4);
        let paper = CosetSection::from_reps(
            &a,
            vec![Permutation::identity(4), p("(1 2)", 4), p("(2 3)", 4)],
        )
        .unwrap();
        assert!(paper.is_valid());
        assert_eq!(paper.class_list()[1], p("(1 4)(2 3)", 4));
        assert_eq!(paper.class_list()[2], p("(1 2)(3 4)", 4));

        let class = enumerate_class(3, &CycleType::parse("2", 3).unwrap()).unwrap();
        let s = p("(1 2)", 3);
        let sec = CosetSection::new(&class, &s).unwrap();
        assert!(sec.is_valid());
        for (g, t) in sec.reps().iter().zip(sec.class_list()) {
            assert_eq!(Permutation::conjugate(g, &s).unwrap(), *t);
        }
        assert!(CosetSection::new(&class, &p("(1 2 3)", 3)).is_err());
        assert!(CosetSection::from_reps(&s, vec![Permutation::identity(3), p("(1 2)", 3)]).is_err());
    }

    #[test]
    fn aligned_sections_are_valid() {
        let s = CycleType::parse("2 3", 9).unwrap().representative();
        let class = enumerate_class(9, &s.cycle_type()).unwrap();
        let sec = CosetSection::new(&class, &s).unwrap();
        assert_eq!(sec.len(), 2520);
        assert!(sec.is_valid());
    }

    #[test]
    fn reversal_examples() {
        assert_eq!(p("(1 2 3 4)", 4).reversal_involution(), p("(1 3)", 4));
        assert_eq!(p("(1 3)", 4).act(&p("(1 2 3 4)", 4)), p("(1 4 3 2)", 4));
        let s = p("(1 2 3)", 3);
        let sigma = s.reversal_involution();
        assert_eq!(sigma, p("(1 2)", 3));
        assert_eq!(sigma.act(&s), s.inverse());
        assert!(Permutation::identity(3).reversal_involution().is_identity());
    }

    #[test]
    fn concat_and_orthogonality() {
        assert_eq!(p("(1 2)", 2).concat(&p("(1 2)", 2)), p("(1 2)(3 4)", 4));
        assert!(p("(1 2)(3 4)", 4).is_orthogonal(&p("(1 2 3)", 3)));
        assert!(!p("(1 2)", 2).is_orthogonal(&p("(1 2)", 2)));
        // fixed points count as 1-cycles
        assert!(!p("(1 2)", 3).is_orthogonal(&p("(1 2)", 3).concat(&Permutation::identity(0))));
        assert!(!p("(1 2)", 3).is_orthogonal(&p("(1 2 3)", 4)));
    }

    #[test]
    fn conjugation_preserves_type_exhaustively_in_s4() {
        let all: Vec<_> = symmetric_group(4).collect();
        for g in &all {
            for h in &all {
                assert_eq!(g.act(h).cycle_type(), h.cycle_type());
            }
        }
    }

    #[test]
    fn orbit_stabilizer_up_to_degree_5() {
        for n in 1..=5 {
            let total = factorial(n);
            for t in CycleType::all(n) {
                let class = enumerate_class(n, &t).unwrap();
                for s in &class {
                    let c = centralizer(s);
                    assert_eq!(BigUint::from(class.len() * c.order()), total);
                }
            }
        }
    }

    #[test]
    fn orthogonal_concat_splits_centralizers() {
        for n in 1..=3 {
            for p_ in 1..=3 {
                for pi in symmetric_group(n) {
                    for tau in symmetric_group(p_) {
                        if pi.is_orthogonal(&tau) {
                            let whole = centralizer(&pi.concat(&tau)).order();
                            assert_eq!(whole, centralizer(&pi).order() * centralizer(&tau).order());
                        }
                    }
                }
            }
        }
    }
}

//! Braided vector spaces of diagonal type: Cartan exponents, generalized
//! Cartan matrices, their connected components and finite-type test.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::cyclo::Cyclotomic;

/// `c(vᵢ ⊗ vⱼ) = q_ij vⱼ ⊗ vᵢ`.
#[derive(Clone, PartialEq, Eq, Serialize)]
pub struct DiagonalBraiding {
    q: Vec<Vec<Cyclotomic>>,
}

impl fmt::Debug for DiagonalBraiding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DiagonalBraiding({:?})", self.q)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiagonalError {
    #[error("braiding matrix must be square with nonzero entries")]
    Malformed,
}

impl DiagonalBraiding {
    pub fn new(q: Vec<Vec<Cyclotomic>>) -> Result<Self, DiagonalError> {
        let n = q.len();
        if q.iter().any(|r| r.len() != n || r.iter().any(Cyclotomic::is_zero)) {
            return Err(DiagonalError::Malformed);
        }
        Ok(DiagonalBraiding { q })
    }

    pub fn rank(&self) -> usize {
        self.q.len()
    }

    pub fn q(&self, i: usize, j: usize) -> &Cyclotomic {
        &self.q[i][j]
    }

    pub fn matrix(&self) -> &[Vec<Cyclotomic>] {
        &self.q
    }

    /// The principal sub-braiding on `indices`.
    pub fn principal(&self, indices: &[usize]) -> DiagonalBraiding {
        DiagonalBraiding {
            q: indices
                .iter()
                .map(|&i| indices.iter().map(|&j| self.q[i][j].clone()).collect())
                .collect(),
        }
    }
}

/// A generalized Cartan matrix.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Gcm {
    a: Vec<Vec<i64>>,
}

impl fmt::Debug for Gcm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Gcm({:?})", self.a)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GcmError {
    #[error("not a generalized Cartan matrix: {0}")]
    Invalid(String),
}

impl Gcm {
    pub fn new(a: Vec<Vec<i64>>) -> Result<Self, GcmError> {
        let n = a.len();
        for (i, row) in a.iter().enumerate() {
            if row.len() != n {
                return Err(GcmError::Invalid("not square".into()));
            }
            if row[i] != 2 {
                return Err(GcmError::Invalid(format!("a[{i}][{i}] != 2")));
            }
            for (j, &x) in row.iter().enumerate() {
                if i != j && (x > 0 || (x == 0) != (a[j][i] == 0)) {
                    return Err(GcmError::Invalid(format!("entry ({i},{j})")));
                }
            }
        }
        Ok(Gcm { a })
    }

    pub fn rank(&self) -> usize {
        self.a.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.a[i][j]
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.a
    }

    pub fn principal(&self, indices: &[usize]) -> Gcm {
        Gcm {
            a: indices
                .iter()
                .map(|&i| indices.iter().map(|&j| self.a[i][j]).collect())
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error, Serialize)]
#[serde(tag = "error", content = "at", rename_all = "kebab-case")]
pub enum CartanError {
    #[error("q[{0}][{0}] = 1")]
    QiiOne(usize),
    #[error("q[{0}][{0}] is not a root of unity")]
    NotARoot(usize),
    #[error("no Cartan exponent for the pair ({0}, {1})")]
    NotCartan(usize, usize),
}

/// Solves `q_ij q_ji = q_ii^{a_ij}` with `-ord q_ii < a_ij ≤ 0`.
pub fn cartan_exponents(d: &DiagonalBraiding) -> Result<Gcm, CartanError> {
    let n = d.rank();
    let mut orders = Vec::with_capacity(n);
    for i in 0..n {
        let qii = d.q(i, i);
        if qii.is_one() {
            return Err(CartanError::QiiOne(i));
        }
        orders.push(qii.order_of().ok_or(CartanError::NotARoot(i))?);
    }
    let mut a = vec![vec![0i64; n]; n];
    for i in 0..n {
        a[i][i] = 2;
        let qii = d.q(i, i);
        let qii_inv = qii.inv().expect("root of unity");
        for j in 0..n {
            if i == j {
                continue;
            }
            let target = d.q(i, j) * d.q(j, i);
            let mut power = Cyclotomic::one();
            let mut found = None;
            for k in 0..orders[i] as i64 {
                if power == target {
                    found = Some(-k);
                    break;
                }
                power = &power * &qii_inv;
            }
            a[i][j] = found.ok_or(CartanError::NotCartan(i, j))?;
        }
    }
    Ok(Gcm { a })
}

/// Connected components of the Dynkin graph (`i – j` iff `a_ij ≠ 0`), each
/// sorted, ordered by smallest vertex.
pub fn components(a: &Gcm) -> Vec<Vec<usize>> {
    let n = a.rank();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut comp = BTreeSet::new();
        let mut stack = vec![start];
        seen[start] = true;
        while let Some(v) = stack.pop() {
            comp.insert(v);
            for w in 0..n {
                if w != v && !seen[w] && (a.entry(v, w) != 0 || a.entry(w, v) != 0) {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        out.push(comp.into_iter().collect());
    }
    out
}

/// Classification of one connected component.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "class", content = "name", rename_all = "kebab-case")]
pub enum ComponentKind {
    /// A finite Dynkin diagram, e.g. `A2`, `B3`, `E8`.
    Finite(String),
    /// Positive semidefinite symmetrization of corank one; the name when it
    /// is recognised, e.g. `A2^(1)`.
    Affine(Option<String>),
    Indefinite,
}

impl ComponentKind {
    pub fn is_finite(&self) -> bool {
        matches!(self, ComponentKind::Finite(_))
    }
}

impl fmt::Display for ComponentKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ComponentKind::Finite(name) => write!(f, "{name}"),
            ComponentKind::Affine(Some(name)) => write!(f, "affine {name}"),
            ComponentKind::Affine(None) => write!(f, "affine"),
            ComponentKind::Indefinite => write!(f, "indefinite"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComponentReport {
    pub vertices: Vec<usize>,
    pub kind: ComponentKind,
    pub gcm: Gcm,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TypeVerdict {
    pub finite: bool,
    pub components: Vec<ComponentReport>,
}

impl TypeVerdict {
    /// One line per component: vertices (1-based), kind, and edges with
    /// multiplicities `|a_ij|,|a_ji|`.
    pub fn diagram(&self) -> String {
        let mut lines = Vec::new();
        for c in &self.components {
            let verts: Vec<String> = c.vertices.iter().map(|v| (v + 1).to_string()).collect();
            let mut edges = Vec::new();
            for (x, &i) in c.vertices.iter().enumerate() {
                for (y, &j) in c.vertices.iter().enumerate() {
                    if x < y && c.gcm.entry(x, y) != 0 {
                        edges.push(format!(
                            "{}-{}[{},{}]",
                            i + 1,
                            j + 1,
                            -c.gcm.entry(x, y),
                            -c.gcm.entry(y, x)
                        ));
                    }
                }
            }
            lines.push(format!(
                "{{{}}}: {}{}",
                verts.join(","),
                c.kind,
                if edges.is_empty() { String::new() } else { format!("  {}", edges.join(" ")) }
            ));
        }
        lines.join("\n")
    }
}

fn rat(x: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

/// `d` with `d_i a_ij = d_j a_ji` for an indecomposable GCM, or `None`.
fn symmetrizer(a: &Gcm) -> Option<Vec<BigRational>> {
    let n = a.rank();
    let mut d: Vec<Option<BigRational>> = vec![None; n];
    d[0] = Some(BigRational::one());
    let mut stack = vec![0];
    while let Some(i) = stack.pop() {
        let di = d[i].clone().unwrap();
        for j in 0..n {
            if i == j || a.entry(i, j) == 0 {
                continue;
            }
            let dj = &di * rat(a.entry(i, j)) / rat(a.entry(j, i));
            match &d[j] {
                Some(existing) if *existing != dj => return None,
                Some(_) => {}
                None => {
                    d[j] = Some(dj);
                    stack.push(j);
                }
            }
        }
    }
    d.into_iter().collect()
}

/// Determinant by exact rational elimination.
fn det(m: &[Vec<BigRational>]) -> BigRational {
    let mut a = m.to_vec();
    let n = a.len();
    let mut result = BigRational::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| !a[r][c].is_zero()) else {
            return BigRational::zero();
        };
        if p != c {
            a.swap(p, c);
            result = -result;
        }
        let pivot = a[c][c].clone();
        result *= &pivot;
        for r in c + 1..n {
            if a[r][c].is_zero() {
                continue;
            }
            let f = &a[r][c] / &pivot;
            for k in c..n {
                let delta = &f * &a[c][k];
                a[r][k] -= delta;
            }
        }
    }
    result
}

fn classify_component(a: &Gcm) -> ComponentKind {
    let n = a.rank();
    let Some(d) = symmetrizer(a) else {
        return ComponentKind::Indefinite;
    };
    let sym: Vec<Vec<BigRational>> = (0..n)
        .map(|i| (0..n).map(|j| &d[i] * rat(a.entry(i, j))).collect())
        .collect();
    // Sylvester: all leading principal minors positive
    let minors: Vec<BigRational> = (1..=n)
        .map(|k| {
            let sub: Vec<Vec<BigRational>> = sym[..k].iter().map(|r| r[..k].to_vec()).collect();
            det(&sub)
        })
        .collect();
    if minors.iter().all(|m| m.is_positive()) {
        return ComponentKind::Finite(finite_name(a).unwrap_or_else(|| "finite".to_string()));
    }
    // affine: every proper principal submatrix positive definite, det = 0
    if det(&sym).is_zero() && (0..n).all(|skip| {
        let idx: Vec<usize> = (0..n).filter(|&i| i != skip).collect();
        let sub: Vec<Vec<BigRational>> = idx.iter().map(|&i| idx.iter().map(|&j| sym[i][j].clone()).collect()).collect();
        (1..=sub.len()).all(|k| {
            let lead: Vec<Vec<BigRational>> = sub[..k].iter().map(|r| r[..k].to_vec()).collect();
            det(&lead).is_positive()
        })
    }) {
        return ComponentKind::Affine(affine_name(a));
    }
    ComponentKind::Indefinite
}

/// Edge list `(i, j, a_ij, a_ji)` for `i < j` with `a_ij ≠ 0`.
fn edges(a: &Gcm) -> Vec<(usize, usize, i64, i64)> {
    let n = a.rank();
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if a.entry(i, j) != 0 {
                out.push((i, j, a.entry(i, j), a.entry(j, i)));
            }
        }
    }
    out
}

fn degrees(a: &Gcm) -> Vec<usize> {
    let mut deg = vec![0; a.rank()];
    for (i, j, _, _) in edges(a) {
        deg[i] += 1;
        deg[j] += 1;
    }
    deg
}

/// Name of a connected finite-type component in the Dynkin catalogue.
fn finite_name(a: &Gcm) -> Option<String> {
    let n = a.rank();
    if n == 1 {
        return Some("A1".into());
    }
    let es = edges(a);
    if es.len() != n - 1 {
        return None;
    }
    let deg = degrees(a);
    let simple = |e: &(usize, usize, i64, i64)| e.2 == -1 && e.3 == -1;
    let multi: Vec<_> = es.iter().filter(|e| !simple(e)).collect();
    match multi.as_slice() {
        [] => {
            let branch: Vec<usize> = (0..n).filter(|&v| deg[v] >= 3).collect();
            match branch.as_slice() {
                [] => Some(format!("A{n}")),
                [c] if deg[*c] == 3 => {
                    let mut arms: Vec<usize> = neighbours(a, *c)
                        .into_iter()
                        .map(|nb| arm_length(a, *c, nb))
                        .collect();
                    arms.sort_unstable();
                    match arms.as_slice() {
                        [1, 1, k] => Some(format!("D{}", k + 3)),
                        [1, 2, 2] => Some("E6".into()),
                        [1, 2, 3] => Some("E7".into()),
                        [1, 2, 4] => Some("E8".into()),
                        _ => None,
                    }
                }
                _ => None,
            }
        }
        [e] => {
            let (x, y) = (e.2.min(e.3), e.2.max(e.3));
            if (x, y) == (-3, -1) && n == 2 {
                return Some("G2".into());
            }
            if (x, y) != (-2, -1) || deg.iter().any(|&d| d > 2) {
                return None;
            }
            if n == 2 {
                return Some("B2".into());
            }
            let (i, j) = (e.0, e.1);
            let end = if deg[i] == 1 { Some((i, j)) } else if deg[j] == 1 { Some((j, i)) } else { None };
            match end {
                // end vertex short (a_end,nb = -2) gives B, long gives C
                Some((v, w)) => Some(if a.entry(v, w) == -2 { format!("B{n}") } else { format!("C{n}") }),
                None if n == 4 => Some("F4".into()),
                None => None,
            }
        }
        _ => None,
    }
}

fn neighbours(a: &Gcm, v: usize) -> Vec<usize> {
    (0..a.rank()).filter(|&w| w != v && a.entry(v, w) != 0).collect()
}

fn arm_length(a: &Gcm, from: usize, first: usize) -> usize {
    let mut prev = from;
    let mut cur = first;
    let mut len = 1;
    loop {
        let next: Vec<usize> = neighbours(a, cur).into_iter().filter(|&w| w != prev).collect();
        match next.as_slice() {
            [w] => {
                prev = cur;
                cur = *w;
                len += 1;
            }
            _ => return len,
        }
    }
}

fn affine_name(a: &Gcm) -> Option<String> {
    let n = a.rank();
    let es = edges(a);
    if n == 2 && es.len() == 1 {
        let e = es[0];
        return match (e.2.min(e.3), e.2.max(e.3)) {
            (-2, -2) => Some("A1^(1)".into()),
            (-4, -1) => Some("A2^(2)".into()),
            _ => None,
        };
    }
    let deg = degrees(a);
    if es.len() == n && es.iter().all(|e| e.2 == -1 && e.3 == -1) && deg.iter().all(|&d| d == 2) {
        return Some(format!("A{}^(1)", n - 1));
    }
    None
}

/// Per-component classification by positive-definiteness of the
/// symmetrization; names from the Dynkin catalogue.
pub fn is_finite_type(a: &Gcm) -> TypeVerdict {
    let comps: Vec<ComponentReport> = components(a)
        .into_iter()
        .map(|vertices| {
            let sub = a.principal(&vertices);
            ComponentReport {
                kind: classify_component(&sub),
                gcm: sub,
                vertices,
            }
        })
        .collect();
    TypeVerdict {
        finite: comps.iter().all(|c| c.kind.is_finite()),
        components: comps,
    }
}

/// What a diagonal braided subspace says about the whole Nichols algebra.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum DiagonalVerdict {
    /// Some `q_ii = 1`: `c(v ⊗ v) = v ⊗ v` for a nonzero `v`.
    TrivialSelfBraiding { index: usize },
    /// Cartan type with a GCM that is not of finite type.
    InfiniteCartan { gcm: Gcm, report: TypeVerdict },
    /// Cartan type of finite type: no obstruction from this subspace.
    FinitePossible { gcm: Gcm, report: TypeVerdict },
    /// Not of Cartan type, or some `q_ii` is not a root of unity.
    Inapplicable { reason: CartanError },
}

impl DiagonalVerdict {
    pub fn is_infinite(&self) -> bool {
        matches!(
            self,
            DiagonalVerdict::TrivialSelfBraiding { .. } | DiagonalVerdict::InfiniteCartan { .. }
        )
    }
}

pub fn verdict_from_diagonal(d: &DiagonalBraiding) -> DiagonalVerdict {
    if let Some(i) = (0..d.rank()).find(|&i| d.q(i, i).is_one()) {
        return DiagonalVerdict::TrivialSelfBraiding { index: i };
    }
    match cartan_exponents(d) {
        Ok(gcm) => {
            let report = is_finite_type(&gcm);
            if report.finite {
                DiagonalVerdict::FinitePossible { gcm, report }
            } else {
                DiagonalVerdict::InfiniteCartan { gcm, report }
            }
        }
        Err(reason) => DiagonalVerdict::Inapplicable { reason },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(n: u32, k: i64) -> Cyclotomic {
        Cyclotomic::root_of_unity(n, k)
    }

    fn gcm(rows: &[&[i64]]) -> Gcm {
        Gcm::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn rank2_real(q: Cyclotomic) -> DiagonalBraiding {
        let qi = q.inv().unwrap();
        DiagonalBraiding::new(vec![vec![q.clone(), qi.clone()], vec![qi, q]]).unwrap()
    }

    #[test]
    fn exponents_of_real_rank_two() {
        let a = cartan_exponents(&rank2_real(w(3, 1))).unwrap();
        assert_eq!(a, gcm(&[&[2, -2], &[-2, 2]]));
        let a = cartan_exponents(&rank2_real(Cyclotomic::from_int(-1))).unwrap();
        assert_eq!(a, gcm(&[&[2, 0], &[0, 2]]));
        let a = cartan_exponents(&rank2_real(w(5, 2))).unwrap();
        assert_eq!(a, gcm(&[&[2, -2], &[-2, 2]]));
    }

    #[test]
    fn exponent_errors() {
        let one = DiagonalBraiding::new(vec![vec![Cyclotomic::one()]]).unwrap();
        assert_eq!(cartan_exponents(&one), Err(CartanError::QiiOne(0)));
        let two = DiagonalBraiding::new(vec![vec![Cyclotomic::from_int(2)]]).unwrap();
        assert_eq!(cartan_exponents(&two), Err(CartanError::NotARoot(0)));
        // q11 = -1 but q12 q21 = ω₃ is no power of -1
        let d = DiagonalBraiding::new(vec![
            vec![Cyclotomic::from_int(-1), w(3, 1)],
            vec![Cyclotomic::one(), Cyclotomic::from_int(-1)],
        ])
        .unwrap();
        assert_eq!(cartan_exponents(&d), Err(CartanError::NotCartan(0, 1)));
        assert!(DiagonalBraiding::new(vec![vec![Cyclotomic::zero()]]).is_err());
    }

    #[test]
    fn component_examples() {
        assert_eq!(components(&gcm(&[&[2, 0], &[0, 2]])), vec![vec![0], vec![1]]);
        assert_eq!(components(&gcm(&[&[2, -1], &[-1, 2]])), vec![vec![0, 1]]);
        let six = {
            let mut a = vec![vec![0i64; 6]; 6];
            for (i, row) in a.iter_mut().enumerate() {
                row[i] = 2;
            }
            for comp in [[0usize, 3, 5], [1, 2, 4]] {
                for &i in &comp {
                    for &j in &comp {
                        if i != j {
                            a[i][j] = -1;
                        }
                    }
                }
            }
            Gcm::new(a).unwrap()
        };
        assert_eq!(components(&six), vec![vec![0, 3, 5], vec![1, 2, 4]]);
    }

    #[test]
    fn finite_type_examples() {
        let v = is_finite_type(&gcm(&[&[2, -1], &[-1, 2]]));
        assert!(v.finite);
        assert_eq!(v.components[0].kind, ComponentKind::Finite("A2".into()));
        let v = is_finite_type(&gcm(&[&[2, -1, -1], &[-1, 2, -1], &[-1, -1, 2]]));
        assert!(!v.finite);
        assert_eq!(v.components[0].kind, ComponentKind::Affine(Some("A2^(1)".into())));
        let v = is_finite_type(&gcm(&[&[2, 0], &[0, 2]]));
        assert!(v.finite);
        assert_eq!(v.components.len(), 2);
        let v = is_finite_type(&gcm(&[&[2, -2], &[-2, 2]]));
        assert_eq!(v.components[0].kind, ComponentKind::Affine(Some("A1^(1)".into())));
        let v = is_finite_type(&gcm(&[&[2, -3], &[-3, 2]]));
        assert_eq!(v.components[0].kind, ComponentKind::Indefinite);
    }

    #[test]
    fn catalogue_names() {
        let b3 = gcm(&[&[2, -1, 0], &[-1, 2, -1], &[0, -2, 2]]);
        assert_eq!(is_finite_type(&b3).components[0].kind, ComponentKind::Finite("B3".into()));
        let c3 = gcm(&[&[2, -1, 0], &[-1, 2, -2], &[0, -1, 2]]);
        assert_eq!(is_finite_type(&c3).components[0].kind, ComponentKind::Finite("C3".into()));
        let g2 = gcm(&[&[2, -1], &[-3, 2]]);
        assert_eq!(is_finite_type(&g2).components[0].kind, ComponentKind::Finite("G2".into()));
        let d4 = gcm(&[&[2, -1, -1, -1], &[-1, 2, 0, 0], &[-1, 0, 2, 0], &[-1, 0, 0, 2]]);
        assert_eq!(is_finite_type(&d4).components[0].kind, ComponentKind::Finite("D4".into()));
        let f4 = gcm(&[&[2, -1, 0, 0], &[-1, 2, -2, 0], &[0, -1, 2, -1], &[0, 0, -1, 2]]);
        assert_eq!(is_finite_type(&f4).components[0].kind, ComponentKind::Finite("F4".into()));
        // E8 as a path 1-2-3-4-5-6-7 with vertex 8 attached to vertex 5
        let mut e8 = vec![vec![0i64; 8]; 8];
        for i in 0..8 {
            e8[i][i] = 2;
        }
        for (i, j) in [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (4, 7)] {
            e8[i][j] = -1;
            e8[j][i] = -1;
        }
        assert_eq!(
            is_finite_type(&Gcm::new(e8).unwrap()).components[0].kind,
            ComponentKind::Finite("E8".into())
        );
        // non-symmetrizable triangle
        let ns = gcm(&[&[2, -1, -1], &[-2, 2, -1], &[-1, -1, 2]]);
        assert_eq!(is_finite_type(&ns).components[0].kind, ComponentKind::Indefinite);
    }

    #[test]
    fn verdicts() {
        assert!(matches!(
            verdict_from_diagonal(&rank2_real(w(3, 1))),
            DiagonalVerdict::InfiniteCartan { .. }
        ));
        assert!(matches!(
            verdict_from_diagonal(&rank2_real(Cyclotomic::from_int(-1))),
            DiagonalVerdict::FinitePossible { .. }
        ));
        let one = DiagonalBraiding::new(vec![vec![Cyclotomic::one()]]).unwrap();
        assert_eq!(verdict_from_diagonal(&one), DiagonalVerdict::TrivialSelfBraiding { index: 0 });
        let two = DiagonalBraiding::new(vec![vec![Cyclotomic::from_int(2)]]).unwrap();
        assert!(matches!(verdict_from_diagonal(&two), DiagonalVerdict::Inapplicable { .. }));
    }

    #[test]
    fn gcm_validation() {
        assert!(Gcm::new(vec![vec![2, -1], vec![0, 2]]).is_err());
        assert!(Gcm::new(vec![vec![2, 1], vec![1, 2]]).is_err());
        assert!(Gcm::new(vec![vec![1]]).is_err());
    }
}

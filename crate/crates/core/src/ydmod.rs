//! Irreducible Yetter–Drinfeld modules `M(C, ρ) = ⊕ gᵢ ⊗ V` over `S_n`,
//! their braidings, and braided subspaces.
//!
//! Basis vector `gᵢ v_k` has index `i·deg ρ + k`. Group elements act by
//! coset-monomial operators: `g·(gᵢv) = g_j(ρ(γ)v)` where `g gᵢ = g_j γ`.

use std::collections::BTreeMap;
use std::fmt;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::Serialize;
use serde_json::{json, Value};
use thiserror::Error;

use crate::cyclo::Cyclotomic;
use crate::diagonal::DiagonalBraiding;
use crate::linalg::{invert, nullspace, rank_of_rows, Matrix};
use crate::perm::{centralizer, enumerate_class, CosetSection, PermError, Permutation};
use crate::reps::{q_ss, RepError, Representation};

/// Braid-equation checks are exhaustive up to this module dimension.
pub const EXHAUSTIVE_BRAID_DIM: usize = 12;
const SAMPLED_TRIPLES: usize = 4096;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum YdError {
    #[error("the representation is not defined on the centralizer of {0}")]
    GroupMismatch(String),
    #[error("the subspace is not stable under the braiding (pair {0}, {1})")]
    NotClosed(usize, usize),
    #[error("the given vectors are linearly dependent")]
    Dependent,
    #[error("hypothesis fails: {0}")]
    Hypothesis(String),
    #[error("the class elements do not pairwise commute")]
    NotAbelian,
    #[error("not simultaneously diagonalizable: {0}")]
    NotDiagonalizable(String),
    #[error(transparent)]
    Rep(#[from] RepError),
    #[error(transparent)]
    Perm(#[from] PermError),
}

pub type SparseVec = BTreeMap<usize, Cyclotomic>;

fn add_into(v: &mut SparseVec, index: usize, x: Cyclotomic) {
    if x.is_zero() {
        return;
    }
    match v.remove(&index) {
        Some(y) => {
            let z = y + x;
            if !z.is_zero() {
                v.insert(index, z);
            }
        }
        None => {
            v.insert(index, x);
        }
    }
}

/// `g_i v ↦ g_{targets[i]} (blocks[i] v)`: how a group element acts on `M`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetOperator {
    pub targets: Vec<usize>,
    pub blocks: Vec<Matrix>,
}

impl CosetOperator {
    pub fn identity(cosets: usize, deg: usize) -> Self {
        CosetOperator {
            targets: (0..cosets).collect(),
            blocks: vec![Matrix::identity(deg); cosets],
        }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &CosetOperator) -> CosetOperator {
        let targets = other.targets.iter().map(|&j| self.targets[j]).collect();
        let blocks = other
            .blocks
            .iter()
            .zip(&other.targets)
            .map(|(b, &j)| &self.blocks[j] * b)
            .collect();
        CosetOperator { targets, blocks }
    }

    /// Applies the operator to a dense vector of `M`.
    pub fn apply(&self, v: &[Cyclotomic]) -> Vec<Cyclotomic> {
        let deg = self.blocks.first().map_or(1, Matrix::nrows);
        let mut out = vec![Cyclotomic::zero(); v.len()];
        for (i, (&j, b)) in self.targets.iter().zip(&self.blocks).enumerate() {
            let part = &v[i * deg..(i + 1) * deg];
            if part.iter().all(Cyclotomic::is_zero) {
                continue;
            }
            for (r, x) in b.apply(part).into_iter().enumerate() {
                out[j * deg + r] = x;
            }
        }
        out
    }
}

/// `g = s_{k₁} ⋯ s_{k_m}` with `s_k = (k k+1)`, a reduced word (1-based `k`).
pub fn coxeter_word(g: &Permutation) -> Vec<usize> {
    let n = g.degree();
    let mut images = g.images();
    let mut word = Vec::new();
    // right descents: g(k) > g(k+1) means g = (g s_k) s_k with shorter g s_k
    while let Some(k) = (0..n.saturating_sub(1)).find(|&k| images[k] > images[k + 1]) {
        images.swap(k, k + 1);
        word.push(k + 1);
    }
    word.reverse();
    word
}

fn coxeter_generator(n: usize, k: usize) -> Permutation {
    Permutation::from_cycles(n, &[vec![k, k + 1]]).expect("adjacent transposition")
}

/// The Yetter–Drinfeld module `M(C, ρ)` for a coset section of `C`.
#[derive(Clone)]
pub struct YdModule {
    section: CosetSection,
    rho: Representation,
    /// Action of the Coxeter generators `s_1, …, s_{n-1}`.
    table: Vec<CosetOperator>,
    /// True while `table` is the one induced from `ρ`, so actions may be
    /// computed by coset factorization instead of by words.
    canonical: bool,
}

impl fmt::Debug for YdModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("YdModule")
            .field("base_point", &self.section.base_point().to_string())
            .field("class_size", &self.section.len())
            .field("rho", &self.rho)
            .finish()
    }
}

impl YdModule {
    /// `M(C, ρ)` with the canonical section of `class` at `s`.
    pub fn build(class: &[Permutation], s: &Permutation, rho: Representation) -> Result<Self, YdError> {
        let section = CosetSection::new(class, s)?;
        YdModule::with_section(section, rho)
    }

    /// `M(O_s, ρ)` with the class enumerated in lexicographic order.
    pub fn for_pair(s: &Permutation, rho: Representation) -> Result<Self, YdError> {
        let class = enumerate_class(s.degree(), &s.cycle_type())?;
        YdModule::build(&class, s, rho)
    }

    pub fn with_section(section: CosetSection, rho: Representation) -> Result<Self, YdError> {
        let s = section.base_point();
        if *rho.group() != centralizer(s) {
            return Err(YdError::GroupMismatch(s.to_string()));
        }
        let n = s.degree();
        let mut module = YdModule {
            section,
            rho,
            table: Vec::new(),
            canonical: true,
        };
        module.table = (1..n)
            .map(|k| module.induced_action(&coxeter_generator(n, k)))
            .collect();
        Ok(module)
    }

    /// Replaces the action of `s_k = (k k+1)`; used to study broken tables.
    pub fn with_generator_action(mut self, k: usize, op: CosetOperator) -> Self {
        self.table[k - 1] = op;
        self.canonical = false;
        self
    }

    pub fn section(&self) -> &CosetSection {
        &self.section
    }

    pub fn rho(&self) -> &Representation {
        &self.rho
    }

    pub fn base_point(&self) -> &Permutation {
        self.section.base_point()
    }

    pub fn rep_dim(&self) -> usize {
        self.rho.dim()
    }

    pub fn class_size(&self) -> usize {
        self.section.len()
    }

    pub fn dim(&self) -> usize {
        self.section.len() * self.rho.dim()
    }

    pub fn q_ss(&self) -> Result<Cyclotomic, YdError> {
        Ok(q_ss(self.base_point(), &self.rho)?)
    }

    /// The coset of a basis index.
    pub fn coset_of(&self, b: usize) -> usize {
        b / self.rep_dim()
    }

    /// Coaction degree `tᵢ` of basis vector `gᵢ v_k`.
    pub fn degree_of(&self, b: usize) -> &Permutation {
        &self.section.class_list()[self.coset_of(b)]
    }

    pub fn basis_label(&self, b: usize) -> String {
        format!("g{} v{}", self.coset_of(b) + 1, b % self.rep_dim() + 1)
    }

    pub fn generator_table(&self) -> &[CosetOperator] {
        &self.table
    }

    fn induced_action(&self, g: &Permutation) -> CosetOperator {
        let (targets, blocks) = (0..self.section.len())
            .map(|i| {
                let (j, gamma) = self.section.factor(g, i);
                (j, self.rho.matrix(&gamma).clone())
            })
            .unzip();
        CosetOperator { targets, blocks }
    }

    /// The action of `g` on `M`.
    pub fn action(&self, g: &Permutation) -> CosetOperator {
        if self.canonical {
            return self.induced_action(g);
        }
        coxeter_word(g)
            .into_iter()
            .fold(CosetOperator::identity(self.section.len(), self.rep_dim()), |acc, k| {
                acc.compose(&self.table[k - 1])
            })
    }

    pub fn act(&self, g: &Permutation, v: &[Cyclotomic]) -> Vec<Cyclotomic> {
        self.action(g).apply(v)
    }

    /// `c(e_a ⊗ e_b) = Σ coeff · e_x ⊗ e_a`, returned as `(x, coeff)`.
    pub fn braid_basis_pair(&self, a: usize, b: usize) -> Vec<(usize, Cyclotomic)> {
        let op = self.action(self.degree_of(a));
        braid_with(&op, self.rep_dim(), b)
    }

    /// `c(x ⊗ y)` for vectors supported in single cosets, as `(t_p·y, x)`:
    /// only the first leg changes.
    fn first_leg_after_braiding(&self, x_coset: usize, y: &[Cyclotomic]) -> Vec<Cyclotomic> {
        self.act(&self.section.class_list()[x_coset].clone(), y)
    }

    /// The braiding restricted to `span(w)`; fails if it is not `c`-stable.
    pub fn restrict(&self, w: &[Vec<Cyclotomic>]) -> Result<BraidingOperator, YdError> {
        let ops: Vec<CosetOperator> = self
            .section
            .class_list()
            .iter()
            .map(|t| self.action(t))
            .collect();
        let deg = self.rep_dim();
        let dim = self.dim();
        restrict_with(dim, w, |a, b| braid_with(&ops[a / deg], deg, b))
    }
}

fn braid_with(op: &CosetOperator, deg: usize, b: usize) -> Vec<(usize, Cyclotomic)> {
    let (j, l) = (b / deg, b % deg);
    let h = op.targets[j];
    let block = &op.blocks[j];
    (0..deg)
        .filter(|&r| !block.get(r, l).is_zero())
        .map(|r| (h * deg + r, block.get(r, l).clone()))
        .collect()
}

/// A braiding `c` of `V ⊗ V`: `columns[a·dim + b]` is `c(e_a ⊗ e_b)` as a list
/// of `(x·dim + y, coeff)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BraidingOperator {
    dim: usize,
    columns: Vec<Vec<(usize, Cyclotomic)>>,
    labels: Vec<String>,
}

impl BraidingOperator {
    pub fn new(dim: usize, columns: Vec<Vec<(usize, Cyclotomic)>>) -> Self {
        assert_eq!(columns.len(), dim * dim, "one column per basis pair");
        let labels = (1..=dim).map(|i| format!("v{i}")).collect();
        BraidingOperator { dim, columns, labels }
    }

    /// `c(v_i ⊗ v_j) = q_ij v_j ⊗ v_i`.
    pub fn from_diagonal(q: &DiagonalBraiding) -> Self {
        let n = q.rank();
        let columns = (0..n * n)
            .map(|p| {
                let (i, j) = (p / n, p % n);
                vec![(j * n + i, q.q(i, j).clone())]
            })
            .collect();
        BraidingOperator::new(n, columns)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.dim);
        self.labels = labels;
        self
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// `c(e_a ⊗ e_b)`.
    pub fn image(&self, a: usize, b: usize) -> &[(usize, Cyclotomic)] {
        &self.columns[a * self.dim + b]
    }

    pub fn apply(&self, v: &SparseVec) -> SparseVec {
        self.apply_in_legs(v, 2, 0)
    }

    /// Applies `c` in legs `(i, i+1)` (0-based) of `V^{⊗d}`; tensor indices are
    /// base-`dim` numerals with leg 0 most significant.
    pub fn apply_in_legs(&self, v: &SparseVec, d: usize, i: usize) -> SparseVec {
        assert!(i + 1 < d, "leg index out of range");
        let n = self.dim;
        let stride = n.pow((d - 2 - i) as u32);
        let mut out = SparseVec::new();
        for (&x, coeff) in v {
            let a = x / (stride * n) % n;
            let b = x / stride % n;
            let base = x - a * stride * n - b * stride;
            for (y, c) in &self.columns[a * n + b] {
                let (p, q) = (y / n, y % n);
                add_into(&mut out, base + p * stride * n + q * stride, coeff * c);
            }
        }
        out
    }

    /// `Some(q)` when every `c(e_i ⊗ e_j)` is a multiple of `e_j ⊗ e_i`.
    pub fn as_diagonal(&self) -> Option<DiagonalBraiding> {
        let n = self.dim;
        let mut q = vec![vec![Cyclotomic::zero(); n]; n];
        for i in 0..n {
            for j in 0..n {
                match self.image(i, j) {
                    [(y, c)] if *y == j * n + i => q[i][j] = c.clone(),
                    _ => return None,
                }
            }
        }
        DiagonalBraiding::new(q).ok()
    }

    /// Checks the braid equation on `e_a ⊗ e_b ⊗ e_c`; `None` if it holds.
    pub fn braid_defect(&self, a: usize, b: usize, c: usize) -> Option<(SparseVec, SparseVec)> {
        let n = self.dim;
        let start = SparseVec::from([((a * n + b) * n + c, Cyclotomic::one())]);
        let lhs = self.apply_in_legs(&self.apply_in_legs(&self.apply_in_legs(&start, 3, 0), 3, 1), 3, 0);
        let rhs = self.apply_in_legs(&self.apply_in_legs(&self.apply_in_legs(&start, 3, 1), 3, 0), 3, 1);
        (lhs != rhs).then_some((lhs, rhs))
    }

    /// JSON dump: basis labels and, for each pair `(i, j)`, the terms of
    /// `c(v_i ⊗ v_j)` in cyclotomic text form, in index order.
    pub fn to_json(&self) -> Value {
        let n = self.dim;
        let entries: Vec<Value> = (0..n * n)
            .map(|p| {
                let terms: Vec<Value> = self.columns[p]
                    .iter()
                    .map(|(y, c)| json!({"pair": [y / n, y % n], "coeff": c.to_string()}))
                    .collect();
                json!({"pair": [p / n, p % n], "image": terms})
            })
            .collect();
        json!({"dim": n, "basis": self.labels, "entries": entries})
    }
}

/// The full braiding of `M`, column by column.
pub fn braiding(m: &YdModule) -> BraidingOperator {
    let deg = m.rep_dim();
    let dim = m.dim();
    let ops: Vec<CosetOperator> = m.section.class_list().iter().map(|t| m.action(t)).collect();
    let columns = (0..dim * dim)
        .map(|p| {
            let (a, b) = (p / dim, p % dim);
            braid_with(&ops[a / deg], deg, b)
                .into_iter()
                .map(|(x, c)| (x * dim + a, c))
                .collect()
        })
        .collect();
    BraidingOperator::new(dim, columns).with_labels((0..dim).map(|b| m.basis_label(b)).collect())
}

/// Restriction of a braiding given basis-pair images `c(e_a ⊗ e_b) = Σ c_x e_x ⊗ e_a`.
fn restrict_with(
    dim: usize,
    w: &[Vec<Cyclotomic>],
    basis_pair: impl Fn(usize, usize) -> Vec<(usize, Cyclotomic)>,
) -> Result<BraidingOperator, YdError> {
    let r = w.len();
    if w.iter().any(|v| v.len() != dim) || rank_of_rows(w) != r {
        return Err(YdError::Dependent);
    }
    // rows of W (as a dim × r matrix) forming an invertible block
    let mut pivots = Vec::new();
    let mut chosen: Vec<Vec<Cyclotomic>> = Vec::new();
    for x in 0..dim {
        let row: Vec<Cyclotomic> = w.iter().map(|v| v[x].clone()).collect();
        let mut candidate = chosen.clone();
        candidate.push(row);
        if rank_of_rows(&candidate) == candidate.len() {
            chosen = candidate;
            pivots.push(x);
            if pivots.len() == r {
                break;
            }
        }
    }
    let binv = invert(&chosen).expect("pivot block is invertible");
    let support = |v: &[Cyclotomic]| -> Vec<usize> { (0..dim).filter(|&x| !v[x].is_zero()).collect() };
    let supports: Vec<Vec<usize>> = w.iter().map(|v| support(v)).collect();
    let mut columns = Vec::with_capacity(r * r);
    for a in 0..r {
        for b in 0..r {
            // z = c(w_a ⊗ w_b) as a map (x, y) ↦ coefficient
            let mut z: BTreeMap<(usize, usize), Cyclotomic> = BTreeMap::new();
            for &p in &supports[a] {
                for &q in &supports[b] {
                    let scale = &w[a][p] * &w[b][q];
                    for (x, c) in basis_pair(p, q) {
                        let key = (x, p);
                        let val = z.remove(&key).unwrap_or_else(Cyclotomic::zero) + &scale * &c;
                        if !val.is_zero() {
                            z.insert(key, val);
                        }
                    }
                }
            }
            // coordinates C with z = Σ C_cd w_c ⊗ w_d, read off the pivot rows
            let zp: Vec<Vec<Cyclotomic>> = pivots
                .iter()
                .map(|&x| {
                    pivots
                        .iter()
                        .map(|&y| z.get(&(x, y)).cloned().unwrap_or_else(Cyclotomic::zero))
                        .collect()
                })
                .collect();
            let coords = mat_mul(&mat_mul(&binv, &zp), &transpose(&binv));
            let mut column = Vec::new();
            let mut rebuilt: BTreeMap<(usize, usize), Cyclotomic> = BTreeMap::new();
            for c in 0..r {
                for d in 0..r {
                    let k = &coords[c][d];
                    if k.is_zero() {
                        continue;
                    }
                    column.push((c * r + d, k.clone()));
                    for &x in &supports[c] {
                        for &y in &supports[d] {
                            let key = (x, y);
                            let val = rebuilt.remove(&key).unwrap_or_else(Cyclotomic::zero) + k * &(&w[c][x] * &w[d][y]);
                            if !val.is_zero() {
                                rebuilt.insert(key, val);
                            }
                        }
                    }
                }
            }
            if rebuilt != z {
                return Err(YdError::NotClosed(a, b));
            }
            columns.push(column);
        }
    }
    Ok(BraidingOperator::new(r, columns))
}

fn mat_mul(a: &[Vec<Cyclotomic>], b: &[Vec<Cyclotomic>]) -> Vec<Vec<Cyclotomic>> {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| {
                    (0..inner)
                        .filter(|&k| !row[k].is_zero() && !b[k][j].is_zero())
                        .fold(Cyclotomic::zero(), |acc, k| acc + &row[k] * &b[k][j])
                })
                .collect()
        })
        .collect()
}

fn transpose(a: &[Vec<Cyclotomic>]) -> Vec<Vec<Cyclotomic>> {
    let cols = a.first().map_or(0, Vec::len);
    (0..cols).map(|j| a.iter().map(|row| row[j].clone()).collect()).collect()
}

/// Outcome of [`verify_axioms`]; `witness` describes the first violation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub module_action: bool,
    pub yd_compatibility: bool,
    pub braid_equation: bool,
    pub exhaustive: bool,
    pub triples_checked: usize,
    pub witness: Option<String>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.module_action && self.yd_compatibility && self.braid_equation
    }
}

/// Checks (i) the Coxeter relations on the generator table, so it defines an
/// `S_n`-action; (ii) `δ(g·m) = (g ▷ deg m) ⊗ g·m` for the generators; (iii)
/// the braid equation on basis triples, all of them up to dimension
/// [`EXHAUSTIVE_BRAID_DIM`], otherwise a fixed pseudo-random sample.
pub fn verify_axioms(m: &YdModule) -> AxiomReport {
    let n = m.base_point().degree();
    let cosets = m.class_size();
    let deg = m.rep_dim();
    let id = CosetOperator::identity(cosets, deg);
    let table = m.generator_table();
    let power = |op: &CosetOperator, e: usize| (0..e).fold(id.clone(), |acc, _| acc.compose(op));
    let mut report = AxiomReport {
        module_action: true,
        yd_compatibility: true,
        braid_equation: true,
        exhaustive: m.dim() <= EXHAUSTIVE_BRAID_DIM,
        triples_checked: 0,
        witness: None,
    };

    'relations: for k in 0..table.len() {
        for l in k..table.len() {
            // (s_k s_l)^{m_kl} = e with m_kk = 1 (on s_k²), m = 3 for neighbours, 2 otherwise
            let (word, e) = match l - k {
                0 => (table[k].compose(&table[k]), 1),
                1 => (table[k].compose(&table[l]), 3),
                _ => (table[k].compose(&table[l]), 2),
            };
            if power(&word, e) != id {
                report.module_action = false;
                report.witness = Some(format!("Coxeter relation fails for s{} s{}", k + 1, l + 1));
                break 'relations;
            }
        }
    }

    'compat: for (k, op) in table.iter().enumerate() {
        let g = coxeter_generator(n, k + 1);
        for i in 0..cosets {
            let expected = m.section().index_of(&g.act(&m.section().class_list()[i]));
            if expected != Some(op.targets[i]) {
                report.yd_compatibility = false;
                report.witness.get_or_insert_with(|| {
                    format!("s{} moves g{} v out of degree {}", k + 1, i + 1, g.act(&m.section().class_list()[i]))
                });
                break 'compat;
            }
        }
    }

    let c = braiding(m);
    let dim = m.dim();
    let triples: Vec<(usize, usize, usize)> = if report.exhaustive {
        (0..dim * dim * dim)
            .map(|x| (x / (dim * dim), x / dim % dim, x % dim))
            .collect()
    } else {
        let mut rng = StdRng::seed_from_u64(0x5eed);
        (0..SAMPLED_TRIPLES)
            .map(|_| (rng.gen_range(0..dim), rng.gen_range(0..dim), rng.gen_range(0..dim)))
            .collect()
    };
    for (a, b, x) in triples {
        report.triples_checked += 1;
        if c.braid_defect(a, b, x).is_some() {
            report.braid_equation = false;
            report.witness.get_or_insert_with(|| {
                format!(
                    "braid equation fails on {} ⊗ {} ⊗ {}",
                    m.basis_label(a),
                    m.basis_label(b),
                    m.basis_label(x)
                )
            });
            break;
        }
    }
    report
}

/// The span of `g₁v, σ·(g₁v)` for the first basis vector `v` of `V`, where
/// `σ ▷ s = s⁻¹ ≠ s`; its q-matrix is `[[q, q⁻¹], [q⁻¹, q]]`, `q = q_ss`.
pub fn rank2_real_subspace(m: &YdModule, sigma: &Permutation) -> Result<BraidingOperator, YdError> {
    let s = m.base_point();
    let s_inv = s.inverse();
    if s_inv == *s {
        return Err(YdError::Hypothesis(format!("{s} is its own inverse")));
    }
    if sigma.act(s) != s_inv {
        return Err(YdError::Hypothesis(format!("{sigma} does not invert {s}")));
    }
    let mut w1 = vec![Cyclotomic::zero(); m.dim()];
    w1[0] = Cyclotomic::one();
    let w2 = m.act(sigma, &w1);
    Ok(m.restrict(&[w1, w2])?.with_labels(vec!["g1 v".into(), "σ·g1 v".into()]))
}

/// A diagonal braided subspace spanned by joint eigenvectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagonalSubspace {
    /// `(coset, vector in V)` for each basis vector `g_coset ⊗ vector`.
    pub basis: Vec<(usize, Vec<Cyclotomic>)>,
    pub braiding: DiagonalBraiding,
}

impl DiagonalSubspace {
    /// Basis vectors as dense vectors of `M`.
    pub fn vectors(&self, m: &YdModule) -> Vec<Vec<Cyclotomic>> {
        let deg = m.rep_dim();
        self.basis
            .iter()
            .map(|(i, v)| {
                let mut out = vec![Cyclotomic::zero(); m.dim()];
                out[i * deg..(i + 1) * deg].clone_from_slice(v);
                out
            })
            .collect()
    }
}

/// Roots of unity of order dividing `order`, sorted by `(order, exponent)`.
fn candidate_eigenvalues(order: u64) -> Vec<Cyclotomic> {
    let mut out = Vec::new();
    for d in (1..=order).filter(|d| order % d == 0) {
        for k in (0..d).filter(|&k| num_integer::gcd(k, d) == 1) {
            out.push(Cyclotomic::root_of_unity(d as u32, k as i64));
        }
    }
    out
}

/// Joint eigenvectors of the degrees `t_i`, `i ∈ cosets`, on the blocks
/// `g_j ⊗ V`, `j ∈ cosets`; the resulting subspace is diagonal with
/// `q_{ab}` = eigenvalue of `t_{coset(a)}` on basis vector `b`.
pub fn diagonalize_commuting(m: &YdModule, cosets: &[usize]) -> Result<DiagonalSubspace, YdError> {
    let class = m.section().class_list();
    for &i in cosets {
        for &j in cosets {
            if !class[i].commutes_with(&class[j]) {
                return Err(YdError::NotAbelian);
            }
        }
    }
    let deg = m.rep_dim();
    let ops: Vec<CosetOperator> = cosets.iter().map(|&i| m.action(&class[i])).collect();
    let candidates: Vec<Vec<Cyclotomic>> = cosets
        .iter()
        .map(|&i| candidate_eigenvalues(class[i].order()))
        .collect();
    let mut basis = Vec::new();
    // eigenvalues[v][k]: eigenvalue of t_{cosets[k]} on basis vector v
    let mut eigenvalues: Vec<Vec<Cyclotomic>> = Vec::new();
    for &j in cosets {
        let identity: Vec<Vec<Cyclotomic>> = (0..deg)
            .map(|k| (0..deg).map(|r| Cyclotomic::from_int((r == k) as i64)).collect())
            .collect();
        let mut spaces: Vec<(Vec<Vec<Cyclotomic>>, Vec<Cyclotomic>)> = vec![(identity, Vec::new())];
        for (k, op) in ops.iter().enumerate() {
            if op.targets[j] != j {
                return Err(YdError::NotClosed(cosets[k], j));
            }
            let a = &op.blocks[j];
            let mut refined = Vec::new();
            for (space, values) in spaces {
                let mut found = 0;
                for lambda in &candidates[k] {
                    // (A - λ) B x = 0
                    let shifted = a.sub_scalar(lambda);
                    let image: Vec<Vec<Cyclotomic>> = space.iter().map(|b| shifted.apply(b)).collect();
                    let kernel = nullspace(&transpose(&image), space.len());
                    if kernel.is_empty() {
                        continue;
                    }
                    found += kernel.len();
                    let vectors: Vec<Vec<Cyclotomic>> = kernel
                        .iter()
                        .map(|x| {
                            (0..deg)
                                .map(|r| {
                                    x.iter()
                                        .zip(&space)
                                        .fold(Cyclotomic::zero(), |acc, (c, b)| acc + c * &b[r])
                                })
                                .collect()
                        })
                        .collect();
                    let mut vals = values.clone();
                    vals.push(lambda.clone());
                    refined.push((vectors, vals));
                }
                if found != space.len() {
                    return Err(YdError::NotDiagonalizable(format!(
                        "t{} on block g{}",
                        cosets[k] + 1,
                        j + 1
                    )));
                }
            }
            spaces = refined;
        }
        for (vectors, values) in spaces {
            for v in vectors {
                basis.push((j, v));
                eigenvalues.push(values.clone());
            }
        }
    }
    let position: BTreeMap<usize, usize> = cosets.iter().enumerate().map(|(k, &i)| (i, k)).collect();
    let q: Vec<Vec<Cyclotomic>> = basis
        .iter()
        .map(|(i, _)| {
            let k = position[i];
            eigenvalues.iter().map(|vals| vals[k].clone()).collect()
        })
        .collect();
    let braiding = DiagonalBraiding::new(q).map_err(|e| YdError::NotDiagonalizable(e.to_string()))?;
    Ok(DiagonalSubspace { basis, braiding })
}

/// Diagonalizes the whole module when its class is abelian.
pub fn diagonalize_abelian_class(m: &YdModule) -> Result<DiagonalSubspace, YdError> {
    let all: Vec<usize> = (0..m.class_size()).collect();
    diagonalize_commuting(m, &all)
}

/// The class indices of a maximal commuting family chosen greedily in class
/// order, starting from `t₁ = s`.
pub fn greedy_commuting_cosets(m: &YdModule) -> Vec<usize> {
    let class = m.section().class_list();
    let mut chosen: Vec<usize> = Vec::new();
    for (i, t) in class.iter().enumerate() {
        if chosen.iter().all(|&j| class[j].commutes_with(t)) {
            chosen.push(i);
        }
    }
    chosen
}

/// Result of comparing `c(ψx ⊗ ψy)` with `(ψ ⊗ ψ)(c(x ⊗ y))`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EmbeddingReport {
    /// The common factor `q` with `c(ψx ⊗ ψy) = q (ψ ⊗ ψ) c(x ⊗ y)`.
    pub scalar: Option<Cyclotomic>,
    pub consistent: bool,
    /// `scalar = 1`: `ψ` is a morphism of braided vector spaces.
    pub is_morphism: bool,
    pub pairs_checked: usize,
}

/// `ψ(gᵢv) = (gᵢ # e)(v ⊗ w)` from `M(O_π, ρ)` into `M(O_{π#τ}, ρ ⊗ λ)`.
pub fn product_embedding(m_pi: &YdModule, m_prod: &YdModule, w: &[Cyclotomic]) -> Result<EmbeddingReport, YdError> {
    let pi = m_pi.base_point();
    let n = pi.degree();
    let whole = m_prod.base_point();
    let tau = whole
        .restrict(&(n + 1..=whole.degree()).collect::<Vec<_>>())
        .ok_or_else(|| YdError::Hypothesis("the product does not split".into()))?;
    if pi.concat(&tau) != *whole {
        return Err(YdError::Hypothesis(format!("{whole} is not {pi} # {tau}")));
    }
    if !pi.is_orthogonal(&tau) {
        return Err(YdError::Hypothesis(format!("{pi} and {tau} are not orthogonal")));
    }
    let dl = w.len();
    if m_prod.rep_dim() != m_pi.rep_dim() * dl || w.iter().all(Cyclotomic::is_zero) {
        return Err(YdError::Hypothesis("w must be a nonzero vector of the second factor".into()));
    }
    let deg = m_pi.rep_dim();
    let e_tau = Permutation::identity(tau.degree());
    // ψ on V-vectors in coset i: a vector of M_prod
    let psi = |i: usize, v: &[Cyclotomic]| -> Vec<Cyclotomic> {
        let mut u = vec![Cyclotomic::zero(); m_prod.dim()];
        for k in 0..deg {
            for l in 0..dl {
                u[k * dl + l] = &v[k] * &w[l];
            }
        }
        m_prod.act(&m_pi.section().reps()[i].concat(&e_tau), &u)
    };
    let unit = |k: usize| -> Vec<Cyclotomic> { (0..deg).map(|r| Cyclotomic::from_int((r == k) as i64)).collect() };
    let mut scalar: Option<Cyclotomic> = None;
    let mut consistent = true;
    let mut pairs = 0;
    for a in 0..m_pi.dim() {
        for b in 0..m_pi.dim() {
            pairs += 1;
            let (i, j) = (a / deg, b / deg);
            let psi_a = psi(i, &unit(a % deg));
            let psi_b = psi(j, &unit(b % deg));
            let p = m_prod.coset_of(psi_a.iter().position(|x| !x.is_zero()).expect("nonzero"));
            let lhs = m_prod.first_leg_after_braiding(p, &psi_b);
            // (ψ ⊗ ψ) c(x ⊗ y) = ψ(Σ coeff e_x) ⊗ ψ(e_a)
            let mut rhs = vec![Cyclotomic::zero(); m_prod.dim()];
            for (x, coeff) in m_pi.braid_basis_pair(a, b) {
                let image = psi(x / deg, &unit(x % deg));
                for (r, val) in image.into_iter().enumerate() {
                    if !val.is_zero() {
                        rhs[r] = &rhs[r] + &(&coeff * &val);
                    }
                }
            }
            let Some(pos) = rhs.iter().position(|x| !x.is_zero()) else {
                consistent &= lhs.iter().all(Cyclotomic::is_zero);
                continue;
            };
            let q = scalar
                .get_or_insert_with(|| &lhs[pos] * &rhs[pos].inv().expect("nonzero"))
                .clone();
            consistent &= lhs.iter().zip(&rhs).all(|(l, r)| *l == &q * r);
        }
    }
    let is_morphism = consistent && scalar.as_ref().map_or(true, Cyclotomic::is_one);
    Ok(EmbeddingReport {
        scalar,
        consistent,
        is_morphism,
        pairs_checked: pairs,
    })
}

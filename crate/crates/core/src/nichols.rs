//! Low-degree Hilbert series of Nichols algebras: `dim B^d(V)` is the rank of
//! the quantum symmetrizer on `V^{⊗d}`.

use serde::Serialize;
use thiserror::Error;

use crate::cyclo::Cyclotomic;
use crate::linalg::{rank_bareiss, SparseMatrix};
use crate::perm::{symmetric_group, Permutation};
use crate::ydmod::{braiding, coxeter_word, BraidingOperator, SparseVec, YdModule};

/// Largest `dim(V)^d` handled without an explicit override.
pub const DEFAULT_BUDGET: u64 = 1_000_000;
/// Environment variable overriding [`DEFAULT_BUDGET`].
pub const BUDGET_ENV: &str = "NICHOLS_BUDGET";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NicholsError {
    #[error("strand index {index} out of range for degree {degree}")]
    StrandOutOfRange { index: usize, degree: usize },
    #[error("degree {degree} needs {size} basis tensors, over the budget of {budget}; completed: {completed}")]
    BudgetExceeded {
        degree: usize,
        size: u128,
        budget: u64,
        completed: GradedDims,
    },
}

/// `d_0, d_1, …`; `exhausted` once some `d_k = 0`, which forces all later ones.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GradedDims {
    pub dims: Vec<usize>,
    pub exhausted: bool,
}

impl GradedDims {
    pub fn total(&self) -> usize {
        self.dims.iter().sum()
    }
}

impl std::fmt::Display for GradedDims {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let ds: Vec<String> = self.dims.iter().map(ToString::to_string).collect();
        write!(f, "[{}]", ds.join(", "))?;
        if self.exhausted {
            write!(f, " (exhausted)")?;
        }
        Ok(())
    }
}

/// How ranks are computed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum RankRoute {
    /// Column elimination on the sparse symmetrizer.
    #[default]
    Sparse,
    /// Fraction-free elimination on the dense symmetrizer.
    Dense,
}

/// The budget from [`BUDGET_ENV`] if set and valid, else the default.
pub fn budget_from_env() -> u64 {
    std::env::var(BUDGET_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_BUDGET)
}

/// A linear operator on `V^{⊗d}`, stored by columns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TensorOperator {
    size: usize,
    columns: Vec<SparseVec>,
}

impl TensorOperator {
    pub fn identity(size: usize) -> Self {
        TensorOperator {
            size,
            columns: (0..size).map(|x| SparseVec::from([(x, Cyclotomic::one())])).collect(),
        }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn column(&self, x: usize) -> &SparseVec {
        &self.columns[x]
    }

    pub fn apply(&self, v: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (&x, c) in v {
            for (&y, d) in &self.columns[x] {
                add_into(&mut out, y, c * d);
            }
        }
        out
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &TensorOperator) -> TensorOperator {
        TensorOperator {
            size: self.size,
            columns: other.columns.iter().map(|c| self.apply(c)).collect(),
        }
    }

    pub fn to_sparse(&self) -> SparseMatrix {
        SparseMatrix::new(self.size, self.columns.clone())
    }

    pub fn rank(&self, route: RankRoute) -> usize {
        match route {
            RankRoute::Sparse => self.to_sparse().rank(),
            RankRoute::Dense => rank_bareiss(&self.to_sparse().to_dense()),
        }
    }
}

fn add_into(v: &mut SparseVec, index: usize, x: Cyclotomic) {
    if x.is_zero() {
        return;
    }
    let sum = match v.remove(&index) {
        Some(y) => y + x,
        None => x,
    };
    if !sum.is_zero() {
        v.insert(index, sum);
    }
}

fn add_vec(acc: &mut SparseVec, v: &SparseVec) {
    for (&x, c) in v {
        add_into(acc, x, c.clone());
    }
}

fn tensor_size(dim: usize, d: usize) -> usize {
    dim.pow(d as u32)
}

/// `σ_i` on `V^{⊗d}`: `c` in strands `i, i+1` (1-based), identity elsewhere.
pub fn braid_action(c: &BraidingOperator, d: usize, i: usize) -> Result<TensorOperator, NicholsError> {
    if i == 0 || i >= d {
        return Err(NicholsError::StrandOutOfRange { index: i, degree: d });
    }
    let size = tensor_size(c.dim(), d);
    Ok(TensorOperator {
        size,
        columns: (0..size)
            .map(|x| c.apply_in_legs(&SparseVec::from([(x, Cyclotomic::one())]), d, i - 1))
            .collect(),
    })
}

/// `T_w v` for `w = s_{k₁} ⋯ s_{k_m}`: the rightmost letter acts first.
pub fn braid_lift(c: &BraidingOperator, d: usize, word: &[usize], v: &SparseVec) -> SparseVec {
    word.iter()
        .rev()
        .fold(v.clone(), |acc, &k| c.apply_in_legs(&acc, d, k - 1))
}

/// `S_d = Σ_{w ∈ S_d} T_w`, each `T_w` lifted along the reduced word of
/// [`coxeter_word`]. Exponential in `d`; used as a reference.
pub fn quantum_symmetrizer_matsumoto(c: &BraidingOperator, d: usize) -> TensorOperator {
    let size = tensor_size(c.dim(), d);
    let words: Vec<Vec<usize>> = symmetric_group(d).map(|w| coxeter_word(&w)).collect();
    let columns = (0..size)
        .map(|x| {
            let e = SparseVec::from([(x, Cyclotomic::one())]);
            let mut acc = SparseVec::new();
            for word in &words {
                add_vec(&mut acc, &braid_lift(c, d, word, &e));
            }
            acc
        })
        .collect();
    TensorOperator { size, columns }
}

/// `S_d = (1 + σ_{d-1} + σ_{d-2}σ_{d-1} + ⋯ + σ_1⋯σ_{d-1})(S_{d-1} ⊗ id)`,
/// from the factorization of `S_d` over the minimal coset representatives
/// of `S_{d-1}`.
pub fn quantum_symmetrizer(c: &BraidingOperator, d: usize) -> TensorOperator {
    let mut s = TensorOperator::identity(tensor_size(c.dim(), d.min(1)));
    for k in 2..=d {
        s = symmetrizer_step(c, &s, k);
    }
    if d == 0 {
        TensorOperator::identity(1)
    } else {
        s
    }
}

/// `S_d` from `S_{d-1}`.
fn symmetrizer_step(c: &BraidingOperator, prev: &TensorOperator, d: usize) -> TensorOperator {
    let n = c.dim();
    let size = tensor_size(n, d);
    let columns = (0..size)
        .map(|x| {
            // (S_{d-1} ⊗ id) e_x
            let (head, last) = (x / n, x % n);
            let mut term = SparseVec::new();
            for (&z, val) in prev.column(head) {
                add_into(&mut term, z * n + last, val.clone());
            }
            // then the coset sum, σ_{d-1} acting first
            let mut out = term.clone();
            for i in (1..d).rev() {
                term = c.apply_in_legs(&term, d, i - 1);
                add_vec(&mut out, &term);
            }
            out
        })
        .collect();
    TensorOperator { size, columns }
}

/// `dim B^k(V)` for `k ≤ dmax`, refusing degrees with more than `budget`
/// basis tensors.
pub fn hilbert_prefix_of(
    c: &BraidingOperator,
    dmax: usize,
    budget: u64,
    route: RankRoute,
) -> Result<GradedDims, NicholsError> {
    let n = c.dim();
    let mut out = GradedDims {
        dims: vec![1],
        exhausted: n == 0,
    };
    let mut s = TensorOperator::identity(1);
    for d in 1..=dmax {
        if out.exhausted {
            out.dims.push(0);
            continue;
        }
        let size = (n as u128).pow(d as u32);
        if size > budget as u128 {
            return Err(NicholsError::BudgetExceeded {
                degree: d,
                size,
                budget,
                completed: out,
            });
        }
        s = if d == 1 {
            TensorOperator::identity(n)
        } else {
            symmetrizer_step(c, &s, d)
        };
        let rank = s.rank(route);
        out.dims.push(rank);
        out.exhausted = rank == 0;
    }
    Ok(out)
}

/// Hilbert prefix of `B(M)` for a Yetter–Drinfeld module.
pub fn hilbert_prefix(m: &YdModule, dmax: usize, budget: u64, route: RankRoute) -> Result<GradedDims, NicholsError> {
    hilbert_prefix_of(&braiding(m), dmax, budget, route)
}

/// `T_w` as an operator, for comparing lifts along different reduced words.
pub fn braid_lift_operator(c: &BraidingOperator, d: usize, word: &[usize]) -> TensorOperator {
    let size = tensor_size(c.dim(), d);
    TensorOperator {
        size,
        columns: (0..size)
            .map(|x| braid_lift(c, d, word, &SparseVec::from([(x, Cyclotomic::one())])))
            .collect(),
    }
}

/// A second reduced word of `w`, read off the inverse.
pub fn alternative_word(w: &Permutation) -> Vec<usize> {
    let mut word = coxeter_word(&w.inverse());
    word.reverse();
    word
}

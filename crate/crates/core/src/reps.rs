//! Representations of centralizers: trivial and sign characters, characters of
//! cyclic groups, the dihedral group of order 8, outer tensor products over
//! the centralizer blocks, and user-supplied matrices.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::cyclo::Cyclotomic;
use crate::linalg::Matrix;
use crate::perm::{centralizer, centralizer_blocks, CentralizerBlock, PermError, Permutation, Structure, Subgroup};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RepError {
    #[error("unknown representation label: {0}")]
    UnknownLabel(String),
    #[error("label {label} does not fit the group {group}")]
    LabelMismatch { label: String, group: String },
    #[error("the assignment is not a group homomorphism")]
    NotAHomomorphism,
    #[error("the generator images do not cover the group")]
    IncompleteImages,
    #[error("the base point does not act by a scalar")]
    NonScalarAction,
    #[error("the base point is not central in the group")]
    NotCentral,
    #[error("not a dihedral group of order 8: {0}")]
    NotDihedral(String),
    #[error("supports are not orthogonal")]
    NonOrthogonal,
    #[error(transparent)]
    Perm(#[from] PermError),
}

/// A finite-dimensional representation of a subgroup of `S_n`, stored as the
/// matrix of every group element.
#[derive(Clone)]
pub struct Representation {
    group: Subgroup,
    dim: usize,
    images: HashMap<Permutation, Matrix>,
    label: Option<String>,
}

impl fmt::Debug for Representation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Representation")
            .field("group", &self.group.name())
            .field("dim", &self.dim)
            .field("label", &self.label)
            .finish()
    }
}

impl Representation {
    /// Extends generator images multiplicatively over the whole group.
    pub fn from_generator_images(
        group: Subgroup,
        generator_images: Vec<(Permutation, Matrix)>,
    ) -> Result<Self, RepError> {
        let dim = generator_images.first().map_or(1, |(_, m)| m.nrows());
        if generator_images.iter().any(|(_, m)| m.nrows() != dim || !m.is_square()) {
            return Err(RepError::NotAHomomorphism);
        }
        let id = Permutation::identity(group.degree());
        let mut images: HashMap<Permutation, Matrix> = HashMap::new();
        images.insert(id.clone(), Matrix::identity(dim));
        let mut queue = VecDeque::from([id]);
        while let Some(x) = queue.pop_front() {
            for (g, mg) in &generator_images {
                let y = x.mul(g);
                let my = &images[&x] * mg;
                match images.get(&y) {
                    Some(existing) if *existing != my => return Err(RepError::NotAHomomorphism),
                    Some(_) => {}
                    None => {
                        images.insert(y.clone(), my);
                        queue.push_back(y);
                    }
                }
            }
        }
        if images.len() != group.order() || !images.keys().all(|g| group.contains(g)) {
            return Err(RepError::IncompleteImages);
        }
        Ok(Representation {
            group,
            dim,
            images,
            label: None,
        })
    }

    /// A representation given by an explicit element table, unchecked; see
    /// [`Representation::verify`].
    pub fn from_table(group: Subgroup, dim: usize, images: HashMap<Permutation, Matrix>) -> Self {
        Representation {
            group,
            dim,
            images,
            label: None,
        }
    }

    /// A one-dimensional representation from its values.
    pub fn character(group: Subgroup, value: impl Fn(&Permutation) -> Cyclotomic) -> Self {
        let images = group
            .elements()
            .iter()
            .map(|g| (g.clone(), Matrix::scalar(1, value(g))))
            .collect();
        Representation {
            group,
            dim: 1,
            images,
            label: None,
        }
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn group(&self) -> &Subgroup {
        &self.group
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Panics if `g` is not in the group.
    pub fn matrix(&self, g: &Permutation) -> &Matrix {
        self.images
            .get(g)
            .unwrap_or_else(|| panic!("{g} is not in the group"))
    }

    pub fn try_matrix(&self, g: &Permutation) -> Option<&Matrix> {
        self.images.get(g)
    }

    pub fn trace(&self, g: &Permutation) -> Cyclotomic {
        let m = self.matrix(g);
        (0..self.dim).fold(Cyclotomic::zero(), |acc, i| acc + m.get(i, i))
    }

    pub fn is_trivial(&self) -> bool {
        self.images.values().all(|m| *m == Matrix::identity(self.dim))
    }

    /// Same group and same character: equivalent for the irreducibles used here.
    pub fn equivalent(&self, other: &Representation) -> bool {
        self.dim == other.dim
            && self.group == other.group
            && self
                .group
                .elements()
                .iter()
                .all(|g| self.trace(g) == other.trace(g))
    }

    /// Checks `ρ(e) = Id` and `ρ(gh) = ρ(g)ρ(h)`: over all pairs for groups of
    /// order at most 24, otherwise for `g` in the group and `h` a generator.
    pub fn verify(&self) -> bool {
        let elements = self.group.elements();
        let id = Permutation::identity(self.group.degree());
        if self.images.get(&id) != Some(&Matrix::identity(self.dim)) {
            return false;
        }
        if !elements.iter().all(|g| self.images.get(g).map_or(false, |m| m.nrows() == self.dim)) {
            return false;
        }
        let right: Vec<&Permutation> = if elements.len() <= 24 {
            elements.iter().collect()
        } else {
            self.group.generators().iter().collect()
        };
        elements.iter().all(|g| {
            right
                .iter()
                .all(|h| self.images[&g.mul(h)] == &self.images[g] * &self.images[*h])
        })
    }
}

pub fn verify_representation(rho: &Representation) -> bool {
    rho.verify()
}

/// `q_ss`: the scalar by which the central element `s` acts.
pub fn q_ss(s: &Permutation, rho: &Representation) -> Result<Cyclotomic, RepError> {
    if !rho.group().contains(s) || !rho.group().generators().iter().all(|g| g.commutes_with(s)) {
        return Err(RepError::NotCentral);
    }
    rho.matrix(s).as_scalar().ok_or(RepError::NonScalarAction)
}

/// Names of representations, as written on the command line.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub enum CharacterLabel {
    /// `eps`
    Trivial,
    /// `sgn`: restriction of the sign of `S_n`.
    Sign,
    /// `chi{j}^{k}`: the generating `j`-cycle goes to `ω_j^k`.
    Chi { j: u32, k: u32 },
    /// `d4:(e1,e2)`: `A ↦ e1`, `B ↦ e2`.
    D4Char(i8, i8),
    /// `d4:rho2`: the two-dimensional irreducible representation.
    D4Rho2,
    /// `a*b*…`: one factor per non-trivial centralizer block.
    Tensor(Vec<CharacterLabel>),
}

impl CharacterLabel {
    /// Unicode rendering used in tables.
    pub fn pretty(&self) -> String {
        fn sup(k: u32) -> String {
            k.to_string()
                .chars()
                .map(|c| match c {
                    '0' => '⁰',
                    '1' => '¹',
                    '2' => '²',
                    '3' => '³',
                    '4' => '⁴',
                    '5' => '⁵',
                    '6' => '⁶',
                    '7' => '⁷',
                    '8' => '⁸',
                    _ => '⁹',
                })
                .collect()
        }
        fn sub(k: u32) -> String {
            k.to_string()
                .chars()
                .map(|c| char::from_u32('₀' as u32 + c.to_digit(10).unwrap()).unwrap())
                .collect()
        }
        match self {
            CharacterLabel::Trivial => "ε".to_string(),
            CharacterLabel::Sign => "sgn".to_string(),
            CharacterLabel::Chi { j, k: 1 } => format!("χ{}", sub(*j)),
            CharacterLabel::Chi { j, k } => format!("χ{}{}", sub(*j), sup(*k)),
            CharacterLabel::D4Char(a, b) => format!("({a},{b})"),
            CharacterLabel::D4Rho2 => "ρ₂".to_string(),
            CharacterLabel::Tensor(fs) => fs.iter().map(|f| f.pretty()).collect::<Vec<_>>().join(" ⊕ "),
        }
    }

    /// The factor for each centralizer block (blocks with trivial group get `eps`).
    pub fn per_block(&self, blocks: &[CentralizerBlock]) -> Result<Vec<CharacterLabel>, RepError> {
        let nontrivial: Vec<usize> = blocks
            .iter()
            .enumerate()
            .filter(|(_, b)| !is_trivial_block(b))
            .map(|(i, _)| i)
            .collect();
        let mismatch = || RepError::LabelMismatch {
            label: self.to_string(),
            group: blocks.iter().map(|b| b.name()).collect::<Vec<_>>().join(" x "),
        };
        let mut out = vec![CharacterLabel::Trivial; blocks.len()];
        match self {
            CharacterLabel::Trivial => {}
            CharacterLabel::Sign => out.fill(CharacterLabel::Sign),
            CharacterLabel::Tensor(factors) => {
                if factors.len() != nontrivial.len()
                    || factors.iter().any(|f| matches!(f, CharacterLabel::Tensor(_)))
                {
                    return Err(mismatch());
                }
                for (&b, f) in nontrivial.iter().zip(factors) {
                    out[b] = f.clone();
                }
            }
            single => {
                if nontrivial.len() != 1 {
                    return Err(mismatch());
                }
                out[nontrivial[0]] = single.clone();
            }
        }
        Ok(out)
    }
}

fn is_trivial_block(b: &CentralizerBlock) -> bool {
    b.cycle_length == 1 && b.multiplicity <= 1
}

impl fmt::Display for CharacterLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CharacterLabel::Trivial => write!(f, "eps"),
            CharacterLabel::Sign => write!(f, "sgn"),
            CharacterLabel::Chi { j, k } => write!(f, "chi{j}^{k}"),
            CharacterLabel::D4Char(a, b) => write!(f, "d4:({a},{b})"),
            CharacterLabel::D4Rho2 => write!(f, "d4:rho2"),
            CharacterLabel::Tensor(fs) => {
                let parts: Vec<String> = fs.iter().map(|x| x.to_string()).collect();
                write!(f, "{}", parts.join("*"))
            }
        }
    }
}

impl FromStr for CharacterLabel {
    type Err = RepError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let t: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let err = || RepError::UnknownLabel(text.to_string());
        if t.contains('*') {
            let factors: Result<Vec<_>, _> = t.split('*').map(str::parse).collect();
            return Ok(CharacterLabel::Tensor(factors?));
        }
        match t.as_str() {
            "eps" | "ε" | "triv" => return Ok(CharacterLabel::Trivial),
            "sgn" | "sign" => return Ok(CharacterLabel::Sign),
            "d4:rho2" => return Ok(CharacterLabel::D4Rho2),
            _ => {}
        }
        if let Some(rest) = t.strip_prefix("chi") {
            let (j, k) = rest.split_once('^').unwrap_or((rest, "1"));
            let j: u32 = j.parse().map_err(|_| err())?;
            let k: u32 = k.parse().map_err(|_| err())?;
            if j == 0 {
                return Err(err());
            }
            return Ok(CharacterLabel::Chi { j, k: k % j });
        }
        if let Some(rest) = t.strip_prefix("d4:") {
            let inner = rest
                .strip_prefix('(')
                .and_then(|r| r.strip_suffix(')'))
                .ok_or_else(err)?;
            let (a, b) = inner.split_once(',').ok_or_else(err)?;
            let sign = |s: &str| match s {
                "1" | "+1" | "+" => Some(1i8),
                "-1" | "-" => Some(-1i8),
                _ => None,
            };
            return Ok(CharacterLabel::D4Char(sign(a).ok_or_else(err)?, sign(b).ok_or_else(err)?));
        }
        Err(err())
    }
}

/// The characters `ε`, `sgn` and `χ_j^k`, one-dimensional, on `group`.
/// `χ_j^k` needs a cyclic group of order `j` with a single generator.
pub fn build_character(label: &CharacterLabel, group: &Subgroup) -> Result<Representation, RepError> {
    let mismatch = || RepError::LabelMismatch {
        label: label.to_string(),
        group: group.name(),
    };
    let rep = match label {
        CharacterLabel::Trivial => Representation::character(group.clone(), |_| Cyclotomic::one()),
        CharacterLabel::Sign => {
            Representation::character(group.clone(), |g| Cyclotomic::from_int(g.sign() as i64))
        }
        CharacterLabel::Chi { j, k } => {
            let generator = cyclic_generator(group).ok_or_else(mismatch)?;
            if group.order() != *j as usize {
                return Err(mismatch());
            }
            let mut images = Vec::new();
            let mut x = Permutation::identity(group.degree());
            for m in 0..*j as i64 {
                images.push((x.clone(), Cyclotomic::root_of_unity(*j, m * *k as i64)));
                x = x.mul(&generator);
            }
            let table: HashMap<_, _> = images.into_iter().collect();
            Representation::character(group.clone(), |g| table[g].clone())
        }
        _ => return Err(mismatch()),
    };
    Ok(rep.with_label(label.to_string()))
}

fn cyclic_generator(group: &Subgroup) -> Option<Permutation> {
    match group.structure() {
        Some(Structure::Centralizer(blocks)) => {
            let nontrivial: Vec<_> = blocks.iter().filter(|b| !is_trivial_block(b)).collect();
            match nontrivial.as_slice() {
                [b] if b.multiplicity == 1 => b.generators(group.degree()).into_iter().next(),
                [] => Some(Permutation::identity(group.degree())),
                _ => None,
            }
        }
        _ => match group.generators() {
            [g] => Some(g.clone()),
            [] => Some(Permutation::identity(group.degree())),
            _ => None,
        },
    }
}

/// `A` and `B` for a dihedral group of order 8 with centre `{e, A²}`: `A` is
/// the lexicographically first element of order 4 squaring to `center`, `B`
/// the transposition of smallest support with `BAB = A⁻¹` (falling back to
/// the first such involution).
pub fn standard_d4_generators(
    group: &Subgroup,
    center: &Permutation,
) -> Result<(Permutation, Permutation), RepError> {
    let fail = |why: &str| RepError::NotDihedral(why.to_string());
    if group.order() != 8 {
        return Err(fail("order is not 8"));
    }
    let a = group
        .elements()
        .iter()
        .find(|g| g.order() == 4 && g.mul(g) == *center)
        .cloned()
        .ok_or_else(|| fail("no element of order 4"))?;
    let a_inv = a.inverse();
    let powers: Vec<Permutation> = (0..4).map(|i| a.pow(i)).collect();
    let mut candidates: Vec<&Permutation> = group
        .elements()
        .iter()
        .filter(|b| b.order() == 2 && !powers.contains(b) && b.act(&a) == a_inv)
        .collect();
    candidates.sort_by_key(|b| (b.support().len(), b.support()));
    let b = candidates.first().copied().cloned().ok_or_else(|| fail("no reflection"))?;
    Ok((a, b))
}

/// The five irreducible representations of `D₄ = ⟨A, B⟩`: the characters
/// `(ε₁, ε₂)` in the order `(1,1), (1,-1), (-1,1), (-1,-1)`, then the
/// two-dimensional `ρ(A) = [[0,-1],[1,0]]`, `ρ(B) = [[-1,0],[0,1]]`.
pub fn dihedral4_irreps(group: &Subgroup, a: &Permutation, b: &Permutation) -> Result<Vec<Representation>, RepError> {
    let fail = |why: &str| RepError::NotDihedral(why.to_string());
    if group.order() != 8 || !group.contains(a) || !group.contains(b) {
        return Err(fail("order is not 8 or generators outside the group"));
    }
    if a.order() != 4 || b.order() != 2 || b.act(a) != a.inverse() {
        return Err(fail("A, B do not satisfy A⁴ = B² = e, BAB = A⁻¹"));
    }
    let word_images = |ma: &Matrix, mb: &Matrix| -> Result<Representation, RepError> {
        Representation::from_generator_images(group.clone(), vec![(a.clone(), ma.clone()), (b.clone(), mb.clone())])
    };
    let mut out = Vec::new();
    for (e1, e2) in [(1i8, 1i8), (1, -1), (-1, 1), (-1, -1)] {
        let rep = word_images(
            &Matrix::scalar(1, Cyclotomic::from_int(e1 as i64)),
            &Matrix::scalar(1, Cyclotomic::from_int(e2 as i64)),
        )?;
        out.push(rep.with_label(CharacterLabel::D4Char(e1, e2).to_string()));
    }
    let rho_a = Matrix::from_ints(&[&[0, -1], &[1, 0]]);
    let rho_b = Matrix::from_ints(&[&[-1, 0], &[0, 1]]);
    out.push(word_images(&rho_a, &rho_b)?.with_label(CharacterLabel::D4Rho2.to_string()));
    Ok(out)
}

/// Resolves a single-block label on the subgroup of one centralizer block.
fn resolve_on_block(
    label: &CharacterLabel,
    block: &CentralizerBlock,
    degree: usize,
) -> Result<Representation, RepError> {
    let group = Subgroup::generated_by(degree, block.generators(degree))?
        .with_structure(Structure::Centralizer(vec![block.clone()]));
    match label {
        CharacterLabel::Trivial | CharacterLabel::Sign | CharacterLabel::Chi { .. } => {
            build_character(label, &group)
        }
        CharacterLabel::D4Char(e1, e2) if block.cycle_length == 2 && block.multiplicity == 2 => {
            let center = Permutation::from_cycles(degree, &block.cycles)?;
            let (a, b) = standard_d4_generators(&group, &center)?;
            let idx = match (e1, e2) {
                (1, 1) => 0,
                (1, -1) => 1,
                (-1, 1) => 2,
                _ => 3,
            };
            Ok(dihedral4_irreps(&group, &a, &b)?.swap_remove(idx))
        }
        CharacterLabel::D4Rho2 if block.cycle_length == 2 && block.multiplicity == 2 => {
            let center = Permutation::from_cycles(degree, &block.cycles)?;
            let (a, b) = standard_d4_generators(&group, &center)?;
            Ok(dihedral4_irreps(&group, &a, &b)?.swap_remove(4))
        }
        _ => Err(RepError::LabelMismatch {
            label: label.to_string(),
            group: block.name(),
        }),
    }
}

/// Product over blocks of pairwise disjoint supports: an element of `group`
/// restricts to each block and the block matrices are tensored in order.
fn block_product(
    group: &Subgroup,
    supports: &[Vec<usize>],
    factors: &[Representation],
) -> Representation {
    let degree = group.degree();
    let dim = factors.iter().map(Representation::dim).product();
    let images = group
        .elements()
        .iter()
        .map(|g| {
            let mut m = Matrix::identity(1);
            for (support, rho) in supports.iter().zip(factors) {
                let part = restrict_to_support(g, support, degree);
                m = m.kron(rho.matrix(&part));
            }
            (g.clone(), m)
        })
        .collect();
    Representation::from_table(group.clone(), dim, images)
}

/// `g` on `support`, identity elsewhere (the support must be `g`-invariant).
fn restrict_to_support(g: &Permutation, support: &[usize], degree: usize) -> Permutation {
    let mut images: Vec<usize> = (1..=degree).collect();
    for &p in support {
        images[p - 1] = g.apply(p);
    }
    Permutation::from_images(&images).expect("invariant support")
}

/// Resolves a label on the centralizer of `s`.
pub fn resolve_label(label: &CharacterLabel, s: &Permutation) -> Result<Representation, RepError> {
    let group = centralizer(s);
    let blocks = centralizer_blocks(s);
    let per_block = label.per_block(&blocks)?;
    let degree = s.degree();
    let factors: Result<Vec<Representation>, RepError> = blocks
        .iter()
        .zip(&per_block)
        .map(|(b, l)| resolve_on_block(l, b, degree))
        .collect();
    let supports: Vec<Vec<usize>> = blocks.iter().map(CentralizerBlock::support).collect();
    Ok(block_product(&group, &supports, &factors?).with_label(label.to_string()))
}

/// `ρ ⊗ λ` on the centralizer of `π # τ`, for orthogonal `π` and `τ`.
pub fn outer_tensor(
    rho: &Representation,
    pi: &Permutation,
    lambda: &Representation,
    tau: &Permutation,
) -> Result<Representation, RepError> {
    if !pi.is_orthogonal(tau) {
        return Err(RepError::NonOrthogonal);
    }
    let n = pi.degree();
    let whole = pi.concat(tau);
    let group = centralizer(&whole);
    let images = group
        .elements()
        .iter()
        .map(|g| {
            let left = g.restrict(&(1..=n).collect::<Vec<_>>()).ok_or(RepError::NonOrthogonal)?;
            let right = g
                .restrict(&(n + 1..=whole.degree()).collect::<Vec<_>>())
                .ok_or(RepError::NonOrthogonal)?;
            let ml = rho.try_matrix(&left).ok_or(RepError::NonOrthogonal)?;
            let mr = lambda.try_matrix(&right).ok_or(RepError::NonOrthogonal)?;
            Ok((g.clone(), ml.kron(mr)))
        })
        .collect::<Result<HashMap<_, _>, RepError>>()?;
    let label = match (rho.label(), lambda.label()) {
        (Some(a), Some(b)) => Some(format!("{a}*{b}")),
        _ => None,
    };
    let mut out = Representation::from_table(group, rho.dim() * lambda.dim(), images);
    out.label = label;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::CycleType;

    fn p(s: &str, n: usize) -> Permutation {
        Permutation::parse(s, n).unwrap()
    }

    fn d4() -> (Subgroup, Permutation, Permutation) {
        let a = p("(1 3)(2 4)", 4);
        (centralizer(&a), p("(1 2 3 4)", 4), p("(1 3)", 4))
    }

    #[test]
    fn label_grammar() {
        for text in ["eps", "sgn", "chi4^2", "d4:(1,-1)", "d4:rho2", "sgn*eps", "chi3^1*sgn"] {
            let l: CharacterLabel = text.parse().unwrap();
            assert_eq!(l.to_string().parse::<CharacterLabel>().unwrap(), l);
        }
        assert_eq!("chi4".parse::<CharacterLabel>().unwrap(), CharacterLabel::Chi { j: 4, k: 1 });
        assert!("chi".parse::<CharacterLabel>().is_err());
        assert!("d4:(2,1)".parse::<CharacterLabel>().is_err());
        assert!("foo".parse::<CharacterLabel>().is_err());
        assert_eq!(CharacterLabel::Chi { j: 4, k: 2 }.pretty(), "χ₄²");
    }

    #[test]
    fn characters() {
        let s = p("(1 2 3 4)", 4);
        let g = centralizer(&s);
        let chi = build_character(&"chi4^2".parse().unwrap(), &g).unwrap();
        assert_eq!(chi.matrix(&s).as_scalar(), Some(Cyclotomic::from_int(-1)));
        let chi1 = build_character(&"chi4".parse().unwrap(), &g).unwrap();
        assert_eq!(chi1.matrix(&s).as_scalar(), Some(Cyclotomic::root_of_unity(4, 1)));

        let t = p("(1 2)", 2);
        let sgn = build_character(&CharacterLabel::Sign, &centralizer(&t)).unwrap();
        assert_eq!(sgn.matrix(&t).as_scalar(), Some(Cyclotomic::from_int(-1)));

        let eps = build_character(&CharacterLabel::Trivial, &g).unwrap();
        assert!(eps.is_trivial());

        let mismatch = build_character(&"chi3".parse().unwrap(), &g);
        assert!(matches!(mismatch, Err(RepError::LabelMismatch { .. })));
    }

    #[test]
    fn dihedral_irreps() {
        let (g, a, b) = d4();
        let irreps = dihedral4_irreps(&g, &a, &b).unwrap();
        assert_eq!(irreps.len(), 5);
        assert!(irreps.iter().all(Representation::verify));
        let rho = &irreps[4];
        assert_eq!(rho.matrix(&p("(1 3)(2 4)", 4)), &Matrix::from_ints(&[&[-1, 0], &[0, -1]]));
        assert_eq!(rho.matrix(&p("(1 2)(3 4)", 4)), &Matrix::from_ints(&[&[0, 1], &[1, 0]]));
        assert_eq!(rho.matrix(&p("(1 4)(2 3)", 4)), &Matrix::from_ints(&[&[0, -1], &[-1, 0]]));
        assert!(irreps[0].is_trivial());
        assert!(dihedral4_irreps(&g, &a, &a).is_err());
    }

    #[test]
    fn standard_generators_match_the_worked_example() {
        let (g, a, b) = d4();
        assert_eq!(standard_d4_generators(&g, &p("(1 3)(2 4)", 4)).unwrap(), (a, b));
    }

    #[test]
    fn verify_detects_broken_tables() {
        let (g, a, b) = d4();
        let rho = dihedral4_irreps(&g, &a, &b).unwrap().swap_remove(4);
        let mut images: HashMap<Permutation, Matrix> =
            g.elements().iter().map(|x| (x.clone(), rho.matrix(x).clone())).collect();
        images.insert(a.clone(), Matrix::scalar(2, Cyclotomic::from_int(-1)));
        images.insert(b.clone(), Matrix::from_ints(&[&[0, 1], &[1, 0]]));
        assert!(!Representation::from_table(g.clone(), 2, images).verify());
        let bad = Representation::from_generator_images(
            g.clone(),
            vec![
                (a, Matrix::from_ints(&[&[0, -1], &[1, 0]])),
                (b, Matrix::from_ints(&[&[1, 1], &[0, 1]])),
            ],
        );
        assert!(bad.is_err());
        let eps = build_character(&CharacterLabel::Trivial, &g).unwrap();
        assert!(eps.verify());
    }

    #[test]
    fn q_scalars() {
        let s = p("(1 2 3 4)", 4);
        let chi = resolve_label(&"chi4^2".parse().unwrap(), &s).unwrap();
        assert_eq!(q_ss(&s, &chi).unwrap(), Cyclotomic::from_int(-1));
        let a = p("(1 3)(2 4)", 4);
        let rho = resolve_label(&CharacterLabel::D4Rho2, &a).unwrap();
        assert_eq!(q_ss(&a, &rho).unwrap(), Cyclotomic::from_int(-1));
        let eps = resolve_label(&CharacterLabel::Trivial, &a).unwrap();
        assert!(q_ss(&a, &eps).unwrap().is_one());
        // a non-central element
        assert_eq!(q_ss(&p("(1 3)", 4), &rho), Err(RepError::NotCentral));
    }

    #[test]
    fn non_scalar_action_is_reported() {
        let (g, a, b) = d4();
        let rho = dihedral4_irreps(&g, &a, &b).unwrap().swap_remove(4);
        // pretend A were central: its matrix is not scalar
        let cyclic = Subgroup::generated_by(4, vec![a.clone()]).unwrap();
        let images = cyclic.elements().iter().map(|x| (x.clone(), rho.matrix(x).clone())).collect();
        let restricted = Representation::from_table(cyclic, 2, images);
        assert_eq!(q_ss(&a, &restricted), Err(RepError::NonScalarAction));
    }

    #[test]
    fn tensor_labels_on_transposition_centralizers() {
        let s = CycleType::parse("2", 4).unwrap().representative();
        assert_eq!(s, p("(1 2)", 4));
        let plus = resolve_label(&"sgn*eps".parse().unwrap(), &s).unwrap();
        let minus = resolve_label(&"sgn*sgn".parse().unwrap(), &s).unwrap();
        assert!(plus.verify() && minus.verify());
        assert_eq!(plus.matrix(&p("(1 2)", 4)).as_scalar(), Some(Cyclotomic::from_int(-1)));
        assert_eq!(plus.matrix(&p("(3 4)", 4)).as_scalar(), Some(Cyclotomic::from_int(1)));
        assert_eq!(minus.matrix(&p("(3 4)", 4)).as_scalar(), Some(Cyclotomic::from_int(-1)));
        // a bare "sgn" is the sign of S_n restricted, i.e. sgn*sgn here
        assert!(resolve_label(&CharacterLabel::Sign, &s).unwrap().equivalent(&minus));
        assert!(resolve_label(&"sgn*eps*eps".parse().unwrap(), &s).is_err());
    }

    #[test]
    fn outer_tensor_products() {
        let pi = p("(1 2)", 2);
        let tau = p("(1 2 3)", 3);
        let sgn = build_character(&CharacterLabel::Sign, &centralizer(&pi)).unwrap();
        let chi3 = build_character(&"chi3".parse().unwrap(), &centralizer(&tau)).unwrap();
        let mu = outer_tensor(&sgn, &pi, &chi3, &tau).unwrap();
        assert!(mu.verify());
        let e2 = Permutation::identity(2);
        let e3 = Permutation::identity(3);
        assert_eq!(mu.matrix(&pi.concat(&e3)).as_scalar(), Some(Cyclotomic::from_int(-1)));
        assert_eq!(mu.matrix(&e2.concat(&tau)).as_scalar(), Some(Cyclotomic::root_of_unity(3, 1)));
        let whole = pi.concat(&tau);
        assert_eq!(
            q_ss(&whole, &mu).unwrap(),
            q_ss(&pi, &sgn).unwrap() * q_ss(&tau, &chi3).unwrap()
        );
        let eps_pi = build_character(&CharacterLabel::Trivial, &centralizer(&pi)).unwrap();
        let eps_tau = build_character(&CharacterLabel::Trivial, &centralizer(&tau)).unwrap();
        assert!(outer_tensor(&eps_pi, &pi, &eps_tau, &tau).unwrap().is_trivial());
        assert_eq!(
            outer_tensor(&sgn, &pi, &sgn, &pi).unwrap_err(),
            RepError::NonOrthogonal
        );
    }
}

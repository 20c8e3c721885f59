//! The decision pipeline for `dim B(O_s, ρ)` over `S_n`.
//!
//! Rules are tried in a fixed order and every attempt is recorded, so a
//! verdict carries an auditable trace whose witnesses can be re-checked with
//! [`recheck_step`].

use std::fmt;
use std::sync::OnceLock;

use num_integer::Integer;
use serde::Serialize;
use serde_json::{json, Value};
use thiserror::Error;

use crate::cyclo::Cyclotomic;
use crate::diagonal::{cartan_exponents, components, is_finite_type, verdict_from_diagonal, DiagonalBraiding, DiagonalVerdict};
use crate::perm::{centralizer_blocks, CentralizerBlock, CycleType, PermError, Permutation};
use crate::reps::{q_ss, resolve_label, CharacterLabel, RepError, Representation};
use crate::ydmod::{diagonalize_abelian_class, diagonalize_commuting, greedy_commuting_cosets, YdError, YdModule};

/// Version of the verdict and table JSON documents.
pub const SCHEMA_VERSION: &str = "1";

/// Modules larger than this are not built for the diagonal search.
pub const DIAGONAL_SEARCH_LIMIT: usize = 2000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CriteriaError {
    #[error(transparent)]
    Rep(#[from] RepError),
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error(transparent)]
    Yd(#[from] YdError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Rule {
    /// A nonzero `v` with `c(v ⊗ v) = v ⊗ v`, e.g. `q_ss = 1`.
    TrivialBraiding,
    /// Lookup of a published finite-dimensional case.
    Registry,
    /// `σ s σ⁻¹ = s⁻¹ ≠ s` gives a rank-two subspace of Cartan type; finite
    /// dimension forces `q_ss = -1`.
    RealClass,
    /// `s` of odd order: the real-class rule applies to every `ρ`.
    OddOrder,
    /// `deg ρ > 2` forces `q_ss = -1`; `deg ρ = 2` forces `q_ss ∈ {-1, ω₃, ω₃²}`.
    MatiasDegree,
    /// Types `(1^a, 2², odd cycles)`: reduction to `O_{2,2}` in `S₄`.
    Dosdos,
    /// Orthogonal split `π # τ` with coprime orders and `τ` of odd order.
    Reduction,
    /// A diagonal braided subspace whose Cartan matrix is not of finite type.
    DiagonalCartan,
}

impl Rule {
    pub fn id(&self) -> &'static str {
        match self {
            Rule::TrivialBraiding => "trivial-braiding",
            Rule::Registry => "registry",
            Rule::RealClass => "real-class",
            Rule::OddOrder => "odd-order",
            Rule::MatiasDegree => "matias-degree",
            Rule::Dosdos => "dosdos",
            Rule::Reduction => "reduction",
            Rule::DiagonalCartan => "diagonal-cartan",
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

/// Data that lets a step be re-verified independently.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Witness {
    None,
    Scalar {
        s: Permutation,
        q_ss: Cyclotomic,
    },
    Registry {
        dim: u64,
        source: String,
    },
    /// `σ ▷ s = s⁻¹` and the rank-two q-matrix `[[q, q⁻¹], [q⁻¹, q]]`.
    Reversal {
        s: Permutation,
        sigma: Permutation,
        q_ss: Cyclotomic,
        q_matrix: DiagonalBraiding,
    },
    Order {
        cycle_type: String,
        order: u64,
    },
    Degree {
        rep_dim: usize,
        q_ss: Cyclotomic,
    },
    Split {
        pi: String,
        tau: String,
    },
    Reduction {
        pi: String,
        tau: String,
        sub: Box<Verdict>,
    },
    /// A diagonal subspace spanned by joint eigenvectors in the blocks of
    /// `elements`, with its q-matrix.
    Diagonal {
        elements: Vec<Permutation>,
        q_matrix: DiagonalBraiding,
        verdict: DiagonalVerdict,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReasonStep {
    pub rule: Rule,
    pub fired: bool,
    pub note: String,
    pub witness: Witness,
}

impl ReasonStep {
    fn new(rule: Rule, fired: bool, note: impl Into<String>, witness: Witness) -> Self {
        ReasonStep {
            rule,
            fired,
            note: note.into(),
            witness,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "kebab-case")]
pub enum Outcome {
    Infinite,
    KnownFinite { dim: u64, source: String },
    Unknown,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    #[serde(flatten)]
    pub outcome: Outcome,
    pub trace: Vec<ReasonStep>,
}

impl Verdict {
    pub fn is_infinite(&self) -> bool {
        self.outcome == Outcome::Infinite
    }

    /// The rule that decided the verdict.
    pub fn deciding_rule(&self) -> Option<Rule> {
        self.trace.iter().find(|s| s.fired).map(|s| s.rule)
    }

    pub fn to_json(&self) -> Value {
        let mut v = serde_json::to_value(self).expect("serializable");
        v["schema_version"] = json!(SCHEMA_VERSION);
        v
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum OrbitOutcome {
    InfiniteForAllRho,
    Unknown,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrbitVerdict {
    pub outcome: OrbitOutcome,
    pub trace: Vec<ReasonStep>,
}

impl OrbitVerdict {
    pub fn deciding_rule(&self) -> Option<Rule> {
        self.trace.iter().find(|s| s.fired).map(|s| s.rule)
    }

    pub fn to_json(&self) -> Value {
        let mut v = serde_json::to_value(self).expect("serializable");
        v["schema_version"] = json!(SCHEMA_VERSION);
        v
    }
}

/// A representation named by a label or given by matrices on the centralizer
/// of the canonical class representative.
#[derive(Debug, Clone)]
pub enum RepSpec {
    Label(CharacterLabel),
    Matrices(Representation),
}

impl From<CharacterLabel> for RepSpec {
    fn from(l: CharacterLabel) -> Self {
        RepSpec::Label(l)
    }
}

/// One published finite-dimensional case.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RegistryEntry {
    pub degree: usize,
    pub cycle_type: &'static str,
    pub label: &'static str,
    pub dim: u64,
    pub source: &'static str,
}

/// The finite cases printed in the `S₃` and `S₄` tables, and nothing else.
pub const KNOWN_FINITE: [RegistryEntry; 4] = [
    RegistryEntry { degree: 3, cycle_type: "2", label: "sgn", dim: 12, source: "ms" },
    RegistryEntry { degree: 4, cycle_type: "4", label: "chi4^2", dim: 576, source: "AG2 6.12" },
    RegistryEntry { degree: 4, cycle_type: "2", label: "sgn*eps", dim: 576, source: "FK" },
    RegistryEntry { degree: 4, cycle_type: "2", label: "sgn*sgn", dim: 576, source: "ms" },
];

/// Exact lookup: same degree and type, and `rho` equivalent to the entry's
/// representation on the centralizer of the canonical representative.
pub fn known_finite_registry(n: usize, t: &CycleType, rho: &Representation) -> Option<(u64, &'static str)> {
    let s = t.representative();
    KNOWN_FINITE.iter().find_map(|e| {
        if e.degree != n || CycleType::parse(e.cycle_type, n).ok().as_ref() != Some(t) {
            return None;
        }
        let entry_rep = resolve_label(&e.label.parse().ok()?, &s).ok()?;
        entry_rep.equivalent(rho).then_some((e.dim, e.source))
    })
}

/// Splits of the cycle lengths of `t` into `(π, τ)`: each length goes wholly
/// to one side (orthogonality), both sides are non-empty, `τ` has only odd
/// lengths and the orders are coprime. Ordered by the set of `τ` lengths.
pub fn reduction_decompose(t: &CycleType) -> Vec<(CycleType, CycleType)> {
    let parts = t.parts();
    let odd: Vec<usize> = (0..parts.len()).filter(|&i| parts[i].0 % 2 == 1).collect();
    let mut out = Vec::new();
    for mask in 1u32..(1 << odd.len()) {
        let tau_idx: Vec<usize> = (0..odd.len()).filter(|b| mask >> b & 1 == 1).map(|b| odd[b]).collect();
        if tau_idx.len() == parts.len() {
            continue;
        }
        let side = |inside: bool| -> CycleType {
            let lengths: Vec<usize> = parts
                .iter()
                .enumerate()
                .filter(|(i, _)| tau_idx.contains(i) == inside)
                .flat_map(|(_, &(len, m))| std::iter::repeat(len).take(m))
                .collect();
            CycleType::from_lengths(&lengths)
        };
        let (pi, tau) = (side(false), side(true));
        if pi.order().gcd(&tau.order()) == 1 {
            out.push((pi, tau));
        }
    }
    out
}

fn is_dosdos_type(t: &CycleType) -> bool {
    t.multiplicity(2) == 2 && t.parts().iter().all(|&(len, _)| len == 2 || len % 2 == 1)
}

fn minus_one() -> Cyclotomic {
    Cyclotomic::from_int(-1)
}

fn rank_two_real(q: &Cyclotomic) -> DiagonalBraiding {
    let qi = q.inv().expect("root of unity");
    DiagonalBraiding::new(vec![vec![q.clone(), qi.clone()], vec![qi, q.clone()]]).expect("nonzero")
}

/// The steps proving `dim B(O_{2,2}, ρ) = ∞` for every irreducible `ρ` of
/// `D₄`: the four characters have `q_ss = 1`, and the two-dimensional one
/// has a diagonal subspace with two affine components.
fn two_two_steps() -> &'static [ReasonStep] {
    static STEPS: OnceLock<Vec<ReasonStep>> = OnceLock::new();
    STEPS.get_or_init(|| {
        let s = CycleType::parse("2^2", 4).expect("type").representative();
        let mut steps = Vec::new();
        for label in ["d4:(1,1)", "d4:(1,-1)", "d4:(-1,1)", "d4:(-1,-1)"] {
            let rho = resolve_label(&label.parse().expect("label"), &s).expect("D4 character");
            let q = q_ss(&s, &rho).expect("central");
            steps.push(ReasonStep::new(
                Rule::TrivialBraiding,
                q.is_one(),
                format!("O_(2,2) in S4 with {label}: q_ss = {q}"),
                Witness::Scalar { s: s.clone(), q_ss: q },
            ));
        }
        let rho = resolve_label(&CharacterLabel::D4Rho2, &s).expect("D4 irrep");
        let m = YdModule::for_pair(&s, rho).expect("module");
        let d = diagonalize_abelian_class(&m).expect("abelian class");
        let verdict = verdict_from_diagonal(&d.braiding);
        steps.push(ReasonStep::new(
            Rule::DiagonalCartan,
            verdict.is_infinite(),
            format!("O_(2,2) in S4 with d4:rho2: {}", describe_diagonal(&verdict)),
            Witness::Diagonal {
                elements: m.section().class_list().to_vec(),
                q_matrix: d.braiding,
                verdict,
            },
        ));
        steps
    })
}

fn describe_diagonal(v: &DiagonalVerdict) -> String {
    match v {
        DiagonalVerdict::TrivialSelfBraiding { index } => format!("q_ii = 1 at vertex {}", index + 1),
        DiagonalVerdict::InfiniteCartan { report, .. } | DiagonalVerdict::FinitePossible { report, .. } => {
            let comps: Vec<String> = report
                .components
                .iter()
                .map(|c| {
                    let vs: Vec<String> = c.vertices.iter().map(|v| (v + 1).to_string()).collect();
                    format!("{{{}}} {}", vs.join(","), c.kind)
                })
                .collect();
            let what = if report.finite { "finite type" } else { "not of finite type" };
            format!("Cartan matrix {what}; components {}", comps.join(", "))
        }
        DiagonalVerdict::Inapplicable { reason } => format!("no conclusion ({reason})"),
    }
}

/// Restriction of a label to the blocks whose cycle lengths lie in `lengths`.
fn sub_label(
    label: &CharacterLabel,
    blocks: &[CentralizerBlock],
    lengths: &[usize],
) -> Result<CharacterLabel, RepError> {
    let per_block = label.per_block(blocks)?;
    let factors: Vec<CharacterLabel> = blocks
        .iter()
        .zip(per_block)
        .filter(|(b, _)| lengths.contains(&b.cycle_length) && !(b.cycle_length == 1 && b.multiplicity <= 1))
        .map(|(_, l)| l)
        .collect();
    Ok(match factors.len() {
        0 => CharacterLabel::Trivial,
        1 => factors.into_iter().next().expect("one factor"),
        _ => CharacterLabel::Tensor(factors),
    })
}

/// Runs the rules in `Rule` order and stops at the first that decides.
pub fn pair_verdict(n: usize, t: &CycleType, rho: &RepSpec) -> Result<Verdict, CriteriaError> {
    if t.degree() != n {
        return Err(PermError::InconsistentType {
            ty: t.to_string(),
            degree: n,
        }
        .into());
    }
    let s = t.representative();
    let rep = match rho {
        RepSpec::Label(l) => resolve_label(l, &s)?,
        RepSpec::Matrices(r) => r.clone(),
    };
    let q = q_ss(&s, &rep)?;
    let mut trace = Vec::new();
    let infinite = |trace: Vec<ReasonStep>| Ok(Verdict { outcome: Outcome::Infinite, trace });

    // trivial braiding
    let why = if s.is_identity() {
        "trivial class: q_ss = 1".to_string()
    } else if rep.is_trivial() {
        "trivial representation: q_ss = 1".to_string()
    } else {
        format!("q_ss = {q}")
    };
    let fired = q.is_one();
    trace.push(ReasonStep::new(
        Rule::TrivialBraiding,
        fired,
        why,
        Witness::Scalar { s: s.clone(), q_ss: q.clone() },
    ));
    if fired {
        return infinite(trace);
    }

    // registry
    if let Some((dim, source)) = known_finite_registry(n, t, &rep) {
        trace.push(ReasonStep::new(
            Rule::Registry,
            true,
            format!("published: dim = {dim}"),
            Witness::Registry { dim, source: source.to_string() },
        ));
        return Ok(Verdict {
            outcome: Outcome::KnownFinite { dim, source: source.to_string() },
            trace,
        });
    }
    trace.push(ReasonStep::new(Rule::Registry, false, "no published entry", Witness::None));

    // real class / odd order
    let order = s.order();
    let rule = if order % 2 == 1 { Rule::OddOrder } else { Rule::RealClass };
    if order > 2 {
        let sigma = s.reversal_involution();
        let fired = q != minus_one();
        let note = if fired {
            format!("σ = {sigma} inverts s; q_ss = {q} ≠ -1")
        } else {
            "q_ss = -1: the rank-two subspace is of finite type A1 x A1".to_string()
        };
        trace.push(ReasonStep::new(
            rule,
            fired,
            note,
            Witness::Reversal {
                s: s.clone(),
                sigma,
                q_ss: q.clone(),
                q_matrix: rank_two_real(&q),
            },
        ));
        if fired {
            return infinite(trace);
        }
    } else {
        trace.push(ReasonStep::new(rule, false, "s is an involution", Witness::None));
    }

    // degree bound
    let deg = rep.dim();
    let w3 = [Cyclotomic::root_of_unity(3, 1), Cyclotomic::root_of_unity(3, 2)];
    let (fired, note) = match deg {
        1 => (false, "deg ρ = 1".to_string()),
        2 if q == minus_one() => (false, "deg ρ = 2 with q_ss = -1".to_string()),
        2 if w3.contains(&q) => (false, format!("deg ρ = 2 with q_ss = {q}: recorded, no conclusion")),
        2 => (true, format!("deg ρ = 2 needs q_ss ∈ {{-1, ω₃, ω₃²}}, got {q}")),
        _ if q == minus_one() => (false, format!("deg ρ = {deg} with q_ss = -1")),
        _ => (true, format!("deg ρ = {deg} > 2 needs q_ss = -1, got {q}")),
    };
    trace.push(ReasonStep::new(
        Rule::MatiasDegree,
        fired,
        note,
        Witness::Degree { rep_dim: deg, q_ss: q.clone() },
    ));
    if fired {
        return infinite(trace);
    }

    // two transpositions
    if is_dosdos_type(t) {
        let tau: Vec<usize> = t.lengths().into_iter().filter(|&l| l != 2).collect();
        trace.push(ReasonStep::new(
            Rule::Dosdos,
            true,
            "type (1^a, 2^2, odd cycles): reduce to O_(2,2) in S4, infinite for every irreducible of D4",
            Witness::Split {
                pi: "2^2".into(),
                tau: CycleType::from_lengths(&tau).to_string(),
            },
        ));
        trace.extend(two_two_steps().iter().cloned());
        return infinite(trace);
    }
    trace.push(ReasonStep::new(Rule::Dosdos, false, "not of type (1^a, 2^2, odd cycles)", Witness::None));

    // reduction
    let mut reduction_fired = false;
    match rho {
        RepSpec::Label(label) => {
            let blocks = centralizer_blocks(&s);
            for (pi, tau) in reduction_decompose(t) {
                let lengths: Vec<usize> = pi.parts().iter().map(|&(l, _)| l).collect();
                let sub = pair_verdict(pi.degree(), &pi, &RepSpec::Label(sub_label(label, &blocks, &lengths)?))?;
                let fired = sub.is_infinite();
                trace.push(ReasonStep::new(
                    Rule::Reduction,
                    fired,
                    format!("split {pi} # {tau}: the {pi} part is {}", outcome_word(&sub.outcome)),
                    Witness::Reduction {
                        pi: pi.to_string(),
                        tau: tau.to_string(),
                        sub: Box::new(sub),
                    },
                ));
                if fired {
                    reduction_fired = true;
                    break;
                }
            }
        }
        RepSpec::Matrices(_) => trace.push(ReasonStep::new(
            Rule::Reduction,
            false,
            "splitting a matrix representation into block factors is not supported",
            Witness::None,
        )),
    }
    if reduction_fired {
        return infinite(trace);
    }
    if !trace.iter().any(|st| st.rule == Rule::Reduction) {
        trace.push(ReasonStep::new(Rule::Reduction, false, "no admissible orthogonal split", Witness::None));
    }

    // diagonal subspaces
    let class_size = t.class_size();
    let size_ok = class_size <= num_bigint::BigUint::from(DIAGONAL_SEARCH_LIMIT / deg.max(1));
    if size_ok {
        let m = YdModule::for_pair(&s, rep)?;
        let cosets = greedy_commuting_cosets(&m);
        match diagonalize_commuting(&m, &cosets) {
            Ok(d) => {
                let verdict = verdict_from_diagonal(&d.braiding);
                let fired = verdict.is_infinite();
                let elements: Vec<Permutation> =
                    cosets.iter().map(|&i| m.section().class_list()[i].clone()).collect();
                trace.push(ReasonStep::new(
                    Rule::DiagonalCartan,
                    fired,
                    format!("commuting family of {} class elements: {}", elements.len(), describe_diagonal(&verdict)),
                    Witness::Diagonal {
                        elements,
                        q_matrix: d.braiding,
                        verdict,
                    },
                ));
                if fired {
                    return infinite(trace);
                }
            }
            Err(e) => trace.push(ReasonStep::new(Rule::DiagonalCartan, false, e.to_string(), Witness::None)),
        }
    } else {
        trace.push(ReasonStep::new(
            Rule::DiagonalCartan,
            false,
            format!("module too large for the diagonal search (class size {class_size})"),
            Witness::None,
        ));
    }
    Ok(Verdict { outcome: Outcome::Unknown, trace })
}

fn outcome_word(o: &Outcome) -> String {
    match o {
        Outcome::Infinite => "infinite".into(),
        Outcome::KnownFinite { dim, .. } => format!("finite (dim {dim})"),
        Outcome::Unknown => "undecided".into(),
    }
}

/// Verdicts valid for every irreducible `ρ` of the centralizer.
pub fn orbit_verdict(n: usize, t: &CycleType) -> OrbitVerdict {
    debug_assert_eq!(t.degree(), n);
    let mut trace = Vec::new();
    let done = |trace| OrbitVerdict { outcome: OrbitOutcome::InfiniteForAllRho, trace };

    if t.is_identity() {
        trace.push(ReasonStep::new(
            Rule::TrivialBraiding,
            true,
            "trivial class: s = e acts by 1 in every ρ",
            Witness::Order { cycle_type: t.to_string(), order: 1 },
        ));
        return done(trace);
    }
    trace.push(ReasonStep::new(Rule::TrivialBraiding, false, "non-trivial class", Witness::None));

    let order = t.order();
    if order % 2 == 1 {
        trace.push(ReasonStep::new(
            Rule::OddOrder,
            true,
            format!("order {order} is odd, so q_ss ≠ -1 and the class is real"),
            Witness::Order { cycle_type: t.to_string(), order },
        ));
        return done(trace);
    }
    trace.push(ReasonStep::new(Rule::OddOrder, false, format!("order {order} is even"), Witness::None));

    if is_dosdos_type(t) {
        let tau: Vec<usize> = t.lengths().into_iter().filter(|&l| l != 2).collect();
        trace.push(ReasonStep::new(
            Rule::Dosdos,
            true,
            "type (1^a, 2^2, odd cycles): reduce to O_(2,2) in S4, infinite for every irreducible of D4",
            Witness::Split {
                pi: "2^2".into(),
                tau: CycleType::from_lengths(&tau).to_string(),
            },
        ));
        trace.extend(two_two_steps().iter().cloned());
        return done(trace);
    }
    trace.push(ReasonStep::new(Rule::Dosdos, false, "not of type (1^a, 2^2, odd cycles)", Witness::None));

    for (pi, tau) in reduction_decompose(t) {
        let sub = orbit_verdict(pi.degree(), &pi);
        if sub.outcome == OrbitOutcome::InfiniteForAllRho {
            trace.push(ReasonStep::new(
                Rule::Reduction,
                true,
                format!("split {pi} # {tau}: infinite for all ρ on the {pi} part"),
                Witness::Split {
                    pi: pi.to_string(),
                    tau: tau.to_string(),
                },
            ));
            return done(trace);
        }
    }
    trace.push(ReasonStep::new(Rule::Reduction, false, "no split with a decided part", Witness::None));
    OrbitVerdict { outcome: OrbitOutcome::Unknown, trace }
}

/// Cycle lengths of a type as printed in a witness; `()` is the empty type.
fn witness_lengths(text: &str) -> Vec<usize> {
    text.split_whitespace()
        .filter(|part| *part != "()")
        .flat_map(|part| {
            let (l, m) = part.split_once('^').unwrap_or((part, "1"));
            let (l, m): (usize, usize) = (l.parse().unwrap_or(0), m.parse().unwrap_or(0));
            std::iter::repeat(l).take(m)
        })
        .collect()
}

/// Re-verifies the witness of a fired step from scratch.
pub fn recheck_step(step: &ReasonStep) -> Result<(), String> {
    if !step.fired {
        return Ok(());
    }
    let fail = |why: &str| Err(format!("{}: {why}", step.rule));
    match (&step.rule, &step.witness) {
        (Rule::TrivialBraiding, Witness::Scalar { q_ss, .. }) => {
            if q_ss.is_one() {
                Ok(())
            } else {
                fail("q_ss is not 1")
            }
        }
        (Rule::TrivialBraiding, Witness::Order { order, .. }) => {
            if *order == 1 {
                Ok(())
            } else {
                fail("class is not trivial")
            }
        }
        (Rule::Registry, Witness::Registry { .. }) => Ok(()),
        (Rule::RealClass | Rule::OddOrder, Witness::Reversal { s, sigma, q_ss, q_matrix }) => {
            if sigma.act(s) != s.inverse() || s.inverse() == *s {
                return fail("σ does not invert s");
            }
            if *q_matrix != rank_two_real(q_ss) {
                return fail("q-matrix is not [[q, 1/q], [1/q, q]]");
            }
            if !verdict_from_diagonal(q_matrix).is_infinite() {
                return fail("rank-two subspace does not obstruct");
            }
            Ok(())
        }
        (Rule::OddOrder, Witness::Order { cycle_type, order }) => {
            let lcm = witness_lengths(cycle_type).iter().fold(1u64, |a, &b| a.lcm(&(b as u64)));
            if lcm == *order && order % 2 == 1 {
                Ok(())
            } else {
                fail("order is not odd")
            }
        }
        (Rule::MatiasDegree, Witness::Degree { rep_dim, q_ss }) => {
            let w3 = [Cyclotomic::root_of_unity(3, 1), Cyclotomic::root_of_unity(3, 2)];
            let allowed = *q_ss == minus_one() || (*rep_dim == 2 && w3.contains(q_ss)) || *rep_dim == 1;
            if allowed {
                fail("q_ss satisfies the degree bound")
            } else {
                Ok(())
            }
        }
        (Rule::Dosdos, Witness::Split { pi, tau }) => {
            let lengths = witness_lengths(tau);
            if pi == "2^2" && lengths.iter().all(|l| l % 2 == 1) {
                two_two_steps().iter().try_for_each(|st| {
                    if st.fired {
                        recheck_step(st)
                    } else {
                        Err("a D4 irreducible is not covered".into())
                    }
                })
            } else {
                fail("split is not 2^2 # odd")
            }
        }
        (Rule::Reduction, Witness::Reduction { sub, .. }) => {
            if !sub.is_infinite() {
                return fail("sub-verdict is not infinite");
            }
            sub.trace.iter().try_for_each(recheck_step)
        }
        (Rule::Reduction, Witness::Split { .. }) => Ok(()),
        (Rule::DiagonalCartan, Witness::Diagonal { q_matrix, verdict, .. }) => {
            let again = verdict_from_diagonal(q_matrix);
            if again != *verdict || !again.is_infinite() {
                return fail("diagonal subspace does not re-classify as infinite");
            }
            if let DiagonalVerdict::InfiniteCartan { gcm, .. } = &again {
                let recomputed = cartan_exponents(q_matrix).map_err(|e| e.to_string())?;
                if recomputed != *gcm || is_finite_type(gcm).finite || components(gcm).is_empty() {
                    return fail("Cartan matrix does not re-classify");
                }
            }
            Ok(())
        }
        _ => fail("witness does not match the rule"),
    }
}

/// The labels this crate can resolve on the centralizer of `s`, one per
/// irreducible representation; `complete` is false when some irreducible is
/// not expressible (symmetric factors of degree ≥ 3, wreath factors).
pub fn irreducible_labels(s: &Permutation) -> (Vec<CharacterLabel>, bool) {
    let blocks = centralizer_blocks(s);
    let mut complete = true;
    let mut choices: Vec<Vec<CharacterLabel>> = Vec::new();
    for b in &blocks {
        let options = match (b.cycle_length, b.multiplicity) {
            (1, m) if m <= 1 => continue,
            (1, m) => {
                complete &= m <= 2;
                vec![CharacterLabel::Trivial, CharacterLabel::Sign]
            }
            (j, 1) => (0..j as u32)
                .map(|k| {
                    if k == 0 {
                        CharacterLabel::Trivial
                    } else {
                        CharacterLabel::Chi { j: j as u32, k }
                    }
                })
                .collect(),
            (2, 2) => vec![
                CharacterLabel::D4Char(1, 1),
                CharacterLabel::D4Char(1, -1),
                CharacterLabel::D4Char(-1, 1),
                CharacterLabel::D4Char(-1, -1),
                CharacterLabel::D4Rho2,
            ],
            _ => {
                complete = false;
                vec![CharacterLabel::Trivial, CharacterLabel::Sign]
            }
        };
        choices.push(options);
    }
    let mut combos: Vec<Vec<CharacterLabel>> = vec![Vec::new()];
    for options in &choices {
        combos = combos
            .into_iter()
            .flat_map(|prefix| {
                options.iter().map(move |o| {
                    let mut next = prefix.clone();
                    next.push(o.clone());
                    next
                })
            })
            .collect();
    }
    let labels = combos
        .into_iter()
        .map(|mut factors| match factors.len() {
            0 => CharacterLabel::Trivial,
            1 => factors.pop().expect("one factor"),
            _ => CharacterLabel::Tensor(factors),
        })
        .collect();
    (labels, complete)
}

/// Which of the two classification tables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Table {
    S3,
    S4,
}

impl std::str::FromStr for Table {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "s3" => Ok(Table::S3),
            "s4" => Ok(Table::S4),
            other => Err(format!("unknown table {other}; expected s3 or s4")),
        }
    }
}

/// A table row: the orbit, its isotropy group and representation as printed,
/// and the labels it stands for (`None` for "any").
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub orbit: &'static str,
    pub cycle_type: &'static str,
    pub isotropy: &'static str,
    pub representation: &'static str,
    pub labels: Option<Vec<&'static str>>,
}

pub fn table_rows(which: Table) -> Vec<TableRow> {
    let row = |orbit, cycle_type, isotropy, representation, labels: Option<Vec<&'static str>>| TableRow {
        orbit,
        cycle_type,
        isotropy,
        representation,
        labels,
    };
    match which {
        Table::S3 => vec![
            row("e", "1^3", "S₃", "any", None),
            row("O₃", "3", "ℤ₃", "any", None),
            row("O₂", "2", "ℤ₂", "ε", Some(vec!["eps"])),
            row("O₂", "2", "ℤ₂", "sgn", Some(vec!["sgn"])),
        ],
        Table::S4 => vec![
            row("e", "1^4", "S₄", "any", None),
            row("O₂,₂", "2^2", "D₄", "any", None),
            row("O₄", "4", "ℤ₄", "ε", Some(vec!["eps"])),
            row("O₄", "4", "ℤ₄", "χ₄ or χ₄³", Some(vec!["chi4^1", "chi4^3"])),
            row("O₄", "4", "ℤ₄", "χ₄²", Some(vec!["chi4^2"])),
            row("O₃", "3", "ℤ₃", "any", None),
            row("O₂", "2", "ℤ₂ ⊕ ℤ₂", "ε or ε ⊕ sgn", Some(vec!["eps*eps", "eps*sgn"])),
            row("O₂", "2", "ℤ₂ ⊕ ℤ₂", "sgn ⊕ ε", Some(vec!["sgn*eps"])),
            row("O₂", "2", "ℤ₂ ⊕ ℤ₂", "sgn ⊕ sgn", Some(vec!["sgn*sgn"])),
        ],
    }
}

/// The `dim B(V)` column.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "value", content = "dim", rename_all = "kebab-case")]
pub enum TableValue {
    Infinite,
    Finite(u64),
    Unknown,
}

/// An evaluated row; `reference` is a rule id or a literature tag.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableLine {
    pub row: TableRow,
    pub value: TableValue,
    pub reference: String,
}

impl TableLine {
    pub fn dim_text(&self) -> String {
        match self.value {
            TableValue::Infinite => "∞".into(),
            TableValue::Finite(d) => d.to_string(),
            TableValue::Unknown => "?".into(),
        }
    }

    /// The reference as printed: literature tags in brackets, rules by id.
    pub fn reference_text(&self) -> String {
        match self.value {
            TableValue::Finite(_) => format!("[{}]", self.reference),
            _ => self.reference.clone(),
        }
    }
}

/// Runs the library verdicts behind every row of a table. Rows covering
/// several labels agree on their value, otherwise the row reads Unknown.
pub fn evaluate_table(which: Table) -> Result<Vec<TableLine>, CriteriaError> {
    let n = match which {
        Table::S3 => 3,
        Table::S4 => 4,
    };
    let unknown = "no implemented criterion applies".to_string();
    table_rows(which)
        .into_iter()
        .map(|row| {
            let t = CycleType::parse(row.cycle_type, n)?;
            let (value, reference) = match &row.labels {
                None => {
                    let v = orbit_verdict(n, &t);
                    match (v.outcome, v.deciding_rule()) {
                        (OrbitOutcome::InfiniteForAllRho, Some(r)) => (TableValue::Infinite, r.id().to_string()),
                        _ => (TableValue::Unknown, unknown.clone()),
                    }
                }
                Some(labels) => {
                    let mut values = Vec::new();
                    let mut refs: Vec<String> = Vec::new();
                    for l in labels {
                        let v = pair_verdict(n, &t, &RepSpec::Label(l.parse()?))?;
                        let (value, reference) = match v.outcome {
                            Outcome::Infinite => (TableValue::Infinite, v.deciding_rule().map(|r| r.id().to_string())),
                            Outcome::KnownFinite { dim, source } => (TableValue::Finite(dim), Some(source)),
                            Outcome::Unknown => (TableValue::Unknown, None),
                        };
                        values.push(value);
                        if let Some(r) = reference.filter(|r| !refs.contains(r)) {
                            refs.push(r);
                        }
                    }
                    if values.iter().all(|v| *v == values[0]) && values[0] != TableValue::Unknown {
                        (values[0], refs.join(", "))
                    } else {
                        (TableValue::Unknown, unknown.clone())
                    }
                }
            };
            Ok(TableLine { row, value, reference })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ty(s: &str, n: usize) -> CycleType {
        CycleType::parse(s, n).unwrap()
    }

    fn label(s: &str) -> RepSpec {
        RepSpec::Label(s.parse().unwrap())
    }

    #[test]
    fn pair_examples() {
        let v = pair_verdict(3, &ty("2", 3), &label("sgn")).unwrap();
        assert_eq!(v.outcome, Outcome::KnownFinite { dim: 12, source: "ms".into() });

        let v = pair_verdict(4, &ty("4", 4), &label("chi4")).unwrap();
        assert!(v.is_infinite());
        assert_eq!(v.deciding_rule(), Some(Rule::RealClass));

        let v = pair_verdict(4, &ty("2^2", 4), &label("d4:rho2")).unwrap();
        assert!(v.is_infinite());
        assert_eq!(v.trace.last().unwrap().rule, Rule::DiagonalCartan);
        for s in &v.trace {
            recheck_step(s).unwrap();
        }
    }

    #[test]
    fn transpositions_in_s6_stay_unknown() {
        for l in ["sgn*eps", "sgn*sgn"] {
            let v = pair_verdict(6, &ty("2", 6), &label(l)).unwrap();
            assert_eq!(v.outcome, Outcome::Unknown, "{l}: {:#?}", v.trace);
        }
    }

    #[test]
    fn orbit_examples() {
        assert_eq!(orbit_verdict(9, &ty("3^3", 9)).outcome, OrbitOutcome::InfiniteForAllRho);
        let v = orbit_verdict(8, &ty("1 2^2 3", 8));
        assert_eq!(v.outcome, OrbitOutcome::InfiniteForAllRho);
        assert_eq!(v.deciding_rule(), Some(Rule::Dosdos));
        assert_eq!(orbit_verdict(4, &ty("4", 4)).outcome, OrbitOutcome::Unknown);
    }

    #[test]
    fn reduction_splits() {
        let splits = reduction_decompose(&ty("2^2 3", 7));
        assert_eq!(splits, vec![(ty("2^2", 4), ty("3", 3))]);
        assert!(reduction_decompose(&ty("2", 2)).is_empty());
        let odd = reduction_decompose(&ty("3 5", 8));
        assert!(odd.contains(&(ty("3", 3), ty("5", 5))));
        assert!(odd.contains(&(ty("5", 5), ty("3", 3))));
    }

    #[test]
    fn registry_lookups() {
        let s = ty("2", 3).representative();
        let sgn = resolve_label(&"sgn".parse().unwrap(), &s).unwrap();
        assert_eq!(known_finite_registry(3, &ty("2", 3), &sgn), Some((12, "ms")));
        let s4 = ty("4", 4).representative();
        let chi = resolve_label(&"chi4^2".parse().unwrap(), &s4).unwrap();
        assert_eq!(known_finite_registry(4, &ty("4", 4), &chi), Some((576, "AG2 6.12")));
        let s5 = ty("2", 5).representative();
        let chi_minus = resolve_label(&"sgn*eps".parse().unwrap(), &s5).unwrap();
        assert_eq!(known_finite_registry(5, &ty("2", 5), &chi_minus), None);
    }

    #[test]
    fn tables() {
        let s3 = evaluate_table(Table::S3).unwrap();
        let dims: Vec<String> = s3.iter().map(TableLine::dim_text).collect();
        assert_eq!(dims, ["∞", "∞", "∞", "12"]);
        let s4 = evaluate_table(Table::S4).unwrap();
        assert_eq!(s4.len(), 9);
        assert_eq!(s4.iter().filter(|l| l.value == TableValue::Finite(576)).count(), 3);
    }

    #[test]
    fn verdict_json_has_schema_version() {
        let v = pair_verdict(3, &ty("2", 3), &label("sgn")).unwrap().to_json();
        assert_eq!(v["schema_version"], SCHEMA_VERSION);
        assert_eq!(v["outcome"], "known-finite");
        assert_eq!(v["dim"], 12);
    }
}

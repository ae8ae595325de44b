//! Model enumeration over closed literal sets, entailment, minimal models,
//! the `Simp_M` reduct, least models and both stable-model pipelines.
//!
//! All searches are brute force and decide questions over Herbrand
//! interpretations only.

use std::cmp::Reverse;
use std::collections::BTreeSet;

use crate::herbrand::{all_closed_sets, h2, ClosedLiteralSet, GroundClause, GroundLiteral, GroundProgram, HerbrandBase2, HerbrandError};
use crate::semantics::{is_model_closed, EvalError};
use crate::syntax::{ArityConflict, Formula, Signature};

/// Atom-count bounds for the `3ⁿ` and `2ⁿ` sweeps.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchLimits {
    pub max_atoms: usize,
    pub max_atoms_stable: usize,
}

/// Absolute ceilings: masks are `u64` and code-space counters must not overflow.
pub const HARD_MAX_ATOMS: usize = 40;
pub const HARD_MAX_ATOMS_STABLE: usize = 63;

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits { max_atoms: 12, max_atoms_stable: 20 }
    }
}

impl SearchLimits {
    pub fn with_max_atoms(max_atoms: usize) -> Self {
        SearchLimits { max_atoms, max_atoms_stable: max_atoms.max(20) }
    }

    fn check(&self, atoms: usize, stable: bool) -> Result<(), ModelError> {
        let (limit, hard) = if stable {
            (self.max_atoms_stable, HARD_MAX_ATOMS_STABLE)
        } else {
            (self.max_atoms, HARD_MAX_ATOMS)
        };
        let limit = limit.min(hard);
        if atoms > limit {
            let space = if stable { format!("2^{atoms}") } else { format!("3^{atoms}") };
            return Err(ModelError::SearchSpaceTooLarge { atoms, limit, space });
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum ModelError {
    #[error("search space too large: {atoms} ground atoms ({space} candidates) exceeds the limit of {limit} atoms")]
    SearchSpaceTooLarge { atoms: usize, limit: usize, space: String },
    #[error("closed set mentions atom #{0}, outside the program's base")]
    BaseMismatch(usize),
    #[error("program is not positive: clause `{0}` has a negated body literal")]
    NotPositive(String),
    #[error(transparent)]
    Herbrand(#[from] HerbrandError),
    #[error(transparent)]
    Eval(#[from] EvalError),
    #[error(transparent)]
    Arity(#[from] ArityConflict),
}

/// Descending lexicographic order on per-atom states; lists models the way the truth tables do.
pub fn sort_models(models: &mut [ClosedLiteralSet], atoms: usize) {
    models.sort_by_cached_key(|m| Reverse(m.states(atoms)));
}

fn check_base(g: &GroundProgram, m: &ClosedLiteralSet) -> Result<(), ModelError> {
    match m.dneg().iter().find(|&&a| a >= g.base().len()) {
        Some(&a) => Err(ModelError::BaseMismatch(a)),
        None => Ok(()),
    }
}

fn clause_holds(c: &GroundClause, m: &ClosedLiteralSet) -> bool {
    m.plain().contains(&c.head)
        || c.pos.iter().any(|b| !m.plain().contains(b))
        || c.neg.iter().any(|b| m.dneg().contains(b))
}

/// `H²(m)` is an N⁴ model of every clause's clausal form `A ∨ ¬B ∨ … ∨ ¬²C ∨ …`.
pub fn satisfies_program(m: &ClosedLiteralSet, g: &GroundProgram) -> Result<bool, ModelError> {
    check_base(g, m)?;
    Ok(g.clauses().iter().all(|c| clause_holds(c, m)))
}

#[derive(Clone, Copy, Debug)]
struct MaskClause {
    head: u64,
    pos: u64,
    neg: u64,
}

fn bits(atoms: &[usize]) -> u64 {
    atoms.iter().fold(0, |m, &a| m | 1 << a)
}

fn compile(g: &GroundProgram) -> Vec<MaskClause> {
    g.clauses()
        .iter()
        .map(|c| MaskClause { head: 1 << c.head, pos: bits(&c.pos), neg: bits(&c.neg) })
        .collect()
}

fn masks_hold(clauses: &[MaskClause], plain: u64, dneg: u64) -> bool {
    clauses.iter().all(|c| c.head & plain != 0 || c.pos & !plain != 0 || c.neg & dneg != 0)
}

/// Calls `f(plain, dneg)` for every closed set over `n` atoms.
fn for_each_closed(n: usize, mut f: impl FnMut(u64, u64)) {
    for dneg in 0..(1u64 << n) {
        let mut plain = dneg;
        loop {
            f(plain, dneg);
            if plain == 0 {
                break;
            }
            plain = (plain - 1) & dneg;
        }
    }
}

fn minimal_masks(models: &[(u64, u64)]) -> Vec<(u64, u64)> {
    let mut sorted = models.to_vec();
    sorted.sort_by_key(|&(p, d)| p.count_ones() + d.count_ones());
    let mut minimal: Vec<(u64, u64)> = Vec::new();
    for (p, d) in sorted {
        if !minimal.iter().any(|&(mp, md)| mp & !p == 0 && md & !d == 0) {
            minimal.push((p, d));
        }
    }
    minimal
}

/// One reported model with its classification.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModelEntry {
    pub set: ClosedLiteralSet,
    pub minimal: bool,
    pub complete: bool,
}

/// Models of a program or formula set over a fixed base, in report order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModelSet {
    pub base: HerbrandBase2,
    pub members: Vec<ModelEntry>,
}

impl ModelSet {
    fn from_masks(base: &HerbrandBase2, models: &[(u64, u64)], keep_all: bool) -> Self {
        let minimal: BTreeSet<(u64, u64)> = minimal_masks(models).into_iter().collect();
        let mut members: Vec<ModelEntry> = models
            .iter()
            .filter(|m| keep_all || minimal.contains(m))
            .map(|&(p, d)| ModelEntry {
                set: ClosedLiteralSet::from_masks(p, d),
                minimal: minimal.contains(&(p, d)),
                complete: p == d,
            })
            .collect();
        let n = base.len();
        members.sort_by_cached_key(|e| Reverse(e.set.states(n)));
        ModelSet { base: base.clone(), members }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn sets(&self) -> Vec<ClosedLiteralSet> {
        self.members.iter().map(|e| e.set.clone()).collect()
    }

    pub fn contains(&self, m: &ClosedLiteralSet) -> bool {
        self.members.iter().any(|e| &e.set == m)
    }

    pub fn minimal(&self) -> ModelSet {
        self.filtered(|e| e.minimal)
    }

    pub fn complete_minimal(&self) -> ModelSet {
        self.filtered(|e| e.minimal && e.complete)
    }

    fn filtered(&self, keep: impl Fn(&ModelEntry) -> bool) -> ModelSet {
        ModelSet { base: self.base.clone(), members: self.members.iter().filter(|e| keep(e)).cloned().collect() }
    }
}

fn program_masks(g: &GroundProgram, limits: &SearchLimits) -> Result<Vec<(u64, u64)>, ModelError> {
    limits.check(g.base().len(), false)?;
    let clauses = compile(g);
    let mut out = Vec::new();
    for_each_closed(g.base().len(), |p, d| {
        if masks_hold(&clauses, p, d) {
            out.push((p, d));
        }
    });
    Ok(out)
}

/// Every closed `m` with `satisfies_program(m, g)`, flagged minimal/complete.
pub fn all_models(g: &GroundProgram, limits: &SearchLimits) -> Result<ModelSet, ModelError> {
    Ok(ModelSet::from_masks(g.base(), &program_masks(g, limits)?, true))
}

/// The ⊆-minimal models of `g`.
pub fn minimal_models(g: &GroundProgram, limits: &SearchLimits) -> Result<ModelSet, ModelError> {
    Ok(ModelSet::from_masks(g.base(), &program_masks(g, limits)?, false))
}

/// Propositional atoms of a formula set, as a base.
pub fn formula_base(formulas: &[Formula]) -> Result<HerbrandBase2, ModelError> {
    let mut sig = Signature::default();
    for f in formulas {
        sig.add_formula(f)?;
    }
    sig.ensure_constant();
    Ok(HerbrandBase2::new(&sig, None)?)
}

/// All closed `m` such that `H²(m)` models every formula (under universal closure).
pub fn formula_models(base: &HerbrandBase2, formulas: &[Formula], limits: &SearchLimits) -> Result<ModelSet, ModelError> {
    limits.check(base.len(), false)?;
    let closed: Vec<Formula> = formulas.iter().cloned().map(Formula::universal_closure).collect();
    let mut out = Vec::new();
    for m in all_closed_sets(base.len()) {
        let i = h2(base, &m)?;
        let mut ok = true;
        for f in &closed {
            if !is_model_closed(&i, f)? {
                ok = false;
                break;
            }
        }
        if ok {
            out.push(m.to_masks().expect("bounded base"));
        }
    }
    Ok(ModelSet::from_masks(base, &out, true))
}

/// `M̃ = {¬L | L ∈ B² \ M}`: `(A, 1)` for `A ∉ M`, `(A, 3)` for `¬²A ∉ M`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MTilde {
    pub literals: Vec<GroundLiteral>,
}

impl MTilde {
    pub fn of(base: &HerbrandBase2, m: &ClosedLiteralSet) -> Self {
        let mut literals = Vec::new();
        for a in 0..base.len() {
            if !m.plain().contains(&a) {
                literals.push(GroundLiteral::new(a, 1));
            }
            if !m.dneg().contains(&a) {
                literals.push(GroundLiteral::new(a, 3));
            }
        }
        MTilde { literals }
    }

    pub fn len(&self) -> usize {
        self.literals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.literals.is_empty()
    }
}

/// `g ∪ facts ⊨ l` over Herbrand interpretations, by brute force.
pub fn entails_herbrand(g: &GroundProgram, facts: &[GroundLiteral], l: GroundLiteral, limits: &SearchLimits) -> Result<bool, ModelError> {
    limits.check(g.base().len(), false)?;
    let clauses = compile(g);
    let mut entailed = true;
    for_each_closed(g.base().len(), |p, d| {
        if entailed && masks_hold(&clauses, p, d) {
            let m = ClosedLiteralSet::from_masks(p, d);
            if facts.iter().all(|&f| m.satisfies(f)) && !m.satisfies(l) {
                entailed = false;
            }
        }
    });
    Ok(entailed)
}

/// Classical consequence `g ∪ facts ⊨ A` over two-valued assignments, where
/// `¬ⁿA` reads as `A` for even `n` and `¬A` for odd `n`.
pub fn entails_classical(g: &GroundProgram, facts: &[GroundLiteral], l: GroundLiteral, limits: &SearchLimits) -> Result<bool, ModelError> {
    limits.check(g.base().len(), true)?;
    let clauses = compile(g);
    let holds = |v: u64, lit: GroundLiteral| (v >> lit.atom & 1 == 1) == (lit.negations.is_multiple_of(2));
    Ok((0..1u64 << g.base().len())
        .filter(|&v| masks_hold(&clauses, v, v) && facts.iter().all(|&f| holds(v, f)))
        .all(|v| holds(v, l)))
}

/// The characterization of minimality: `m` is a model and
/// `g ∪ M̃ ⊨ L` for every `L ∈ m`.
pub fn is_minimal_by_characterization(g: &GroundProgram, m: &ClosedLiteralSet, limits: &SearchLimits) -> Result<bool, ModelError> {
    if !satisfies_program(m, g)? {
        return Ok(false);
    }
    let tilde = MTilde::of(g.base(), m);
    for l in m.literals() {
        if !entails_herbrand(g, &tilde.literals, l, limits)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Which literal of `M` a negated body atom `¬A` is tested against when
/// `Simp_M` decides to delete a clause.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum SimpReading {
    /// Delete when `¬²A ∈ M`.
    #[default]
    Dneg,
    /// Delete when `A ∈ M`.
    Plain,
}

/// `Simp_M(g)` under the default reading.
pub fn simp(g: &GroundProgram, m: &ClosedLiteralSet) -> GroundProgram {
    simp_with(g, m, SimpReading::default())
}

/// Deletes every clause with a negated body atom found in `M`, then strips
/// the remaining negated body atoms.
pub fn simp_with(g: &GroundProgram, m: &ClosedLiteralSet, reading: SimpReading) -> GroundProgram {
    let inside = |a: &usize| match reading {
        SimpReading::Dneg => m.dneg().contains(a),
        SimpReading::Plain => m.plain().contains(a),
    };
    g.with_clauses(
        g.clauses()
            .iter()
            .filter(|c| !c.neg.iter().any(inside))
            .map(|c| GroundClause::new(c.head, c.pos.clone(), Vec::new())),
    )
}

/// Least fixpoint of the immediate-consequence operator, as a complete set.
pub fn least_model_positive(g: &GroundProgram) -> Result<ClosedLiteralSet, ModelError> {
    if let Some(c) = g.clauses().iter().find(|c| !c.is_positive()) {
        return Err(ModelError::NotPositive(c.to_clause(g.base()).to_string()));
    }
    let mut derived = BTreeSet::new();
    loop {
        let before = derived.len();
        for c in g.clauses() {
            if c.pos.iter().all(|b| derived.contains(b)) {
                derived.insert(c.head);
            }
        }
        if derived.len() == before {
            return Ok(ClosedLiteralSet::complete(derived));
        }
    }
}

fn sort_atom_sets(sets: &mut [BTreeSet<usize>], n: usize) {
    sets.sort_by_cached_key(|s| Reverse((0..n).map(|a| s.contains(&a)).collect::<Vec<_>>()));
}

/// Stable models as `M ⊆ atoms` with `M` the least model of `Simp_M(g)`.
pub fn stable_models_gl(g: &GroundProgram, limits: &SearchLimits) -> Result<Vec<BTreeSet<usize>>, ModelError> {
    let n = g.base().len();
    limits.check(n, true)?;
    let mut out = Vec::new();
    for code in 0..1u64 << n {
        let m = ClosedLiteralSet::from_masks(code, code);
        if least_model_positive(&simp(g, &m))? == m {
            out.push(m.plain().clone());
        }
    }
    sort_atom_sets(&mut out, n);
    Ok(out)
}

/// Stable models as the complete minimal N⁴ Herbrand models.
pub fn stable_models_n4(g: &GroundProgram, limits: &SearchLimits) -> Result<Vec<BTreeSet<usize>>, ModelError> {
    let minimal = minimal_models(g, limits)?;
    let mut out: Vec<_> = minimal.complete_minimal().members.into_iter().map(|e| e.set.plain().clone()).collect();
    sort_atom_sets(&mut out, g.base().len());
    Ok(out)
}

/// `{a}, {b}` style rendering of atom sets; `∅` when there are none.
pub fn render_atom_sets(base: &HerbrandBase2, sets: &[BTreeSet<usize>]) -> String {
    if sets.is_empty() {
        return "∅".to_string();
    }
    sets.iter()
        .map(|s| format!("{{{}}}", s.iter().map(|&a| base.atom(a).to_string()).collect::<Vec<_>>().join(", ")))
        .collect::<Vec<_>>()
        .join(", ")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::herbrand::{ground, AtomState};
    use crate::parser::parse_program;
    use crate::semantics::is_model;

    fn prog(text: &str) -> GroundProgram {
        ground(&parse_program(text).unwrap(), None).unwrap()
    }

    fn set(g: &GroundProgram, plain: &[&str], dneg: &[&str]) -> ClosedLiteralSet {
        let ids = |xs: &[&str]| g.base().ids_of(xs.iter().copied()).unwrap();
        ClosedLiteralSet::closure(ids(plain), ids(dneg))
    }

    fn lim() -> SearchLimits {
        SearchLimits::default()
    }

    #[test]
    fn satisfies_examples() {
        let p1 = prog("p :- not p.");
        assert!(satisfies_program(&set(&p1, &[], &["p"]), &p1).unwrap());
        assert!(!satisfies_program(&ClosedLiteralSet::empty(), &p1).unwrap());
        assert!(satisfies_program(&ClosedLiteralSet::full(1), &p1).unwrap());
        assert!(satisfies_program(&ClosedLiteralSet::full(2), &p1).is_err());
    }

    #[test]
    fn fast_path_agrees_with_clausal_form() {
        let g = prog("a :- b, not c. c :- not a. b. d :- d, not b.");
        let clausal: Vec<_> = g.to_program().clauses.iter().map(|c| c.clausal_form()).collect();
        for m in all_closed_sets(g.base().len()) {
            let i = h2(g.base(), &m).unwrap();
            let expected = clausal.iter().all(|f| is_model(&i, f).unwrap());
            assert_eq!(satisfies_program(&m, &g).unwrap(), expected);
            let (p, d) = m.to_masks().unwrap();
            assert_eq!(masks_hold(&compile(&g), p, d), expected);
        }
    }

    #[test]
    fn all_models_examples() {
        let g = prog("p :- not p. p :- p.");
        let all = all_models(&g, &lim()).unwrap();
        assert_eq!(all.len(), 2);
        assert!(all.members.iter().all(|e| e.set.dneg().contains(&0)));
        let empty = prog("#pred a/0. #pred b/0.");
        assert_eq!(all_models(&empty, &lim()).unwrap().len(), 9);
    }

    #[test]
    fn minimal_model_examples() {
        let p1 = prog("p :- not p.");
        let m1 = minimal_models(&p1, &lim()).unwrap();
        assert_eq!(m1.sets(), vec![set(&p1, &[], &["p"])]);
        assert!(!m1.members[0].complete);

        let p2 = prog("b :- not a. a :- not b.");
        let expected = vec![set(&p2, &["a"], &[]), set(&p2, &[], &["a", "b"]), set(&p2, &["b"], &[])];
        assert_eq!(minimal_models(&p2, &lim()).unwrap().sets(), expected);

        let p4 = prog("p :- not p. p :- p.");
        assert_eq!(minimal_models(&p4, &lim()).unwrap().sets(), vec![set(&p4, &[], &["p"])]);
    }

    #[test]
    fn limits_are_enforced() {
        let names: Vec<String> = (0..13).map(|i| format!("a{i}")).collect();
        let text: String = names.iter().map(|n| format!("{n}.\n")).collect();
        let g = prog(&text);
        assert!(matches!(all_models(&g, &lim()), Err(ModelError::SearchSpaceTooLarge { atoms: 13, limit: 12, .. })));
        assert!(all_models(&g, &SearchLimits::with_max_atoms(13)).is_ok());
    }

    #[test]
    fn entailment_examples() {
        let fact = prog("p.");
        assert!(entails_herbrand(&fact, &[], GroundLiteral::plain(0), &lim()).unwrap());
        assert!(entails_herbrand(&fact, &[], GroundLiteral::dneg(0), &lim()).unwrap());
        let none = prog("#pred a/0.");
        assert!(!entails_herbrand(&none, &[GroundLiteral::dneg(0)], GroundLiteral::plain(0), &lim()).unwrap());
        let p1 = prog("p :- not p.");
        assert!(entails_herbrand(&p1, &[GroundLiteral::new(0, 1)], GroundLiteral::dneg(0), &lim()).unwrap());
    }

    #[test]
    fn characterization_examples() {
        let p1 = prog("p :- not p.");
        assert!(is_minimal_by_characterization(&p1, &set(&p1, &[], &["p"]), &lim()).unwrap());
        assert!(!is_minimal_by_characterization(&p1, &set(&p1, &["p"], &[]), &lim()).unwrap());
    }

    #[test]
    fn mtilde_size() {
        let g = prog("a. b :- not c.");
        for m in all_closed_sets(g.base().len()) {
            assert_eq!(MTilde::of(g.base(), &m).len(), g.base().literal_count() - m.len());
        }
    }

    #[test]
    fn simp_examples() {
        let p1 = prog("p :- not p.");
        assert!(simp(&p1, &ClosedLiteralSet::full(1)).clauses().is_empty());
        let s = prog("p :- not q.");
        assert_eq!(simp(&s, &ClosedLiteralSet::empty()).to_string(), "p.");
        let p2 = prog("b :- not a. a :- not b.");
        assert_eq!(simp(&p2, &set(&p2, &["b"], &[])).to_string(), "b.");
        let gap = ClosedLiteralSet::from_states(&[AtomState::Absent, AtomState::DnegOnly]);
        assert_eq!(simp(&s, &gap).to_string(), "");
        assert_eq!(simp_with(&s, &gap, SimpReading::Plain).to_string(), "p.");
    }

    #[test]
    fn least_model_examples() {
        let g = prog("p. q :- p.");
        assert_eq!(least_model_positive(&g).unwrap(), ClosedLiteralSet::full(2));
        let e = prog("");
        assert_eq!(least_model_positive(&e).unwrap(), ClosedLiteralSet::empty());
        assert!(matches!(least_model_positive(&prog("p :- not p.")), Err(ModelError::NotPositive(_))));
    }

    #[test]
    fn stable_examples() {
        for (text, expected) in [
            ("p :- not p.", "∅"),
            ("b :- not a. a :- not b.", "{a}, {b}"),
            ("p :- not p. p :- p.", "∅"),
            ("p. q :- p. r :- r.", "{p, q}"),
        ] {
            let g = prog(text);
            let gl = stable_models_gl(&g, &lim()).unwrap();
            assert_eq!(render_atom_sets(g.base(), &gl), expected, "{text}");
            assert_eq!(stable_models_n4(&g, &lim()).unwrap(), gl, "{text}");
        }
    }

    #[test]
    fn classical_entailment_counterexample() {
        let p1 = prog("p :- not p.");
        let m = ClosedLiteralSet::full(1);
        let tilde = MTilde::of(p1.base(), &m);
        assert!(tilde.is_empty());
        assert!(entails_classical(&p1, &tilde.literals, GroundLiteral::plain(0), &lim()).unwrap());
        let reduct = simp(&p1, &m);
        assert!(!least_model_positive(&reduct).unwrap().plain().contains(&0));
    }
}

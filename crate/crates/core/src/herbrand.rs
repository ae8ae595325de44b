//! N⁴ Herbrand universe and base, closed literal sets, the generated
//! interpretations `H²(M)`, the sub-interpretation order, intersections and
//! grounding.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::semantics::{tuples, Element, FunctionTable, Interpretation, PredicateValue, Tuple};
use crate::syntax::{Atom, Polarity, Program, Signature, Term};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum HerbrandError {
    #[error("infinite Herbrand universe: function symbols present and no depth bound given")]
    InfiniteUniverse,
    #[error("atom `{0}` is not in the Herbrand base")]
    AtomOutsideBase(String),
    #[error("cannot intersect an empty collection of interpretations")]
    EmptyCollection,
    #[error("incompatible interpretations: {0}")]
    Incompatible(String),
}

/// All ground terms of nesting depth at most `depth_bound`, sorted.
pub fn herbrand_universe(sig: &Signature, depth_bound: Option<usize>) -> Result<Vec<Term>, HerbrandError> {
    let mut universe: BTreeSet<Term> = sig.constants.iter().map(|c| Term::Constant(c.clone())).collect();
    if sig.functions.is_empty() {
        return Ok(universe.into_iter().collect());
    }
    let depth = depth_bound.ok_or(HerbrandError::InfiniteUniverse)?;
    for _ in 0..depth {
        let current: Vec<Term> = universe.iter().cloned().collect();
        for (f, &arity) in &sig.functions {
            for t in tuples(current.len(), arity) {
                universe.insert(Term::Application(f.clone(), t.iter().map(|e| current[e.0].clone()).collect()));
            }
        }
    }
    Ok(universe.into_iter().collect())
}

/// Ground atoms of a signature, sorted by predicate then arguments.
///
/// The positive ground N⁴ literals are these atoms and their double negations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HerbrandBase2 {
    atoms: Vec<Atom>,
    index: BTreeMap<Atom, usize>,
    universe: Vec<Term>,
    signature: Signature,
    approximate: bool,
}

impl HerbrandBase2 {
    pub fn new(sig: &Signature, depth_bound: Option<usize>) -> Result<Self, HerbrandError> {
        let universe = herbrand_universe(sig, depth_bound)?;
        let mut atoms = Vec::new();
        for (p, &arity) in &sig.predicates {
            for t in tuples(universe.len(), arity) {
                atoms.push(Atom::new(p.clone(), t.iter().map(|e| universe[e.0].clone()).collect()));
            }
        }
        atoms.sort();
        let index = atoms.iter().cloned().enumerate().map(|(i, a)| (a, i)).collect();
        Ok(HerbrandBase2 {
            atoms,
            index,
            universe,
            signature: sig.clone(),
            approximate: !sig.functions.is_empty(),
        })
    }

    /// Base of a propositional signature with the given atoms.
    pub fn propositional(names: &[&str]) -> Self {
        let mut sig = Signature::default();
        for n in names {
            sig.add_predicate(n, 0).expect("0-ary predicates never conflict");
        }
        sig.ensure_constant();
        HerbrandBase2::new(&sig, None).expect("function-free")
    }

    pub fn atoms(&self) -> &[Atom] {
        &self.atoms
    }

    pub fn len(&self) -> usize {
        self.atoms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.atoms.is_empty()
    }

    /// `|B²| = 2·|atoms|`.
    pub fn literal_count(&self) -> usize {
        2 * self.atoms.len()
    }

    pub fn id(&self, atom: &Atom) -> Option<usize> {
        self.index.get(atom).copied()
    }

    pub fn atom(&self, id: usize) -> &Atom {
        &self.atoms[id]
    }

    pub fn universe(&self) -> &[Term] {
        &self.universe
    }

    pub fn signature(&self) -> &Signature {
        &self.signature
    }

    /// True when the universe was cut at a depth bound.
    pub fn is_approximate(&self) -> bool {
        self.approximate
    }

    pub fn ids_of<'a>(&self, names: impl IntoIterator<Item = &'a str>) -> Result<BTreeSet<usize>, HerbrandError> {
        names
            .into_iter()
            .map(|n| {
                let atom = crate::parser::parse_formula(n)
                    .ok()
                    .and_then(|f| match f {
                        crate::syntax::Formula::Atom(a) => Some(a),
                        _ => None,
                    })
                    .ok_or_else(|| HerbrandError::AtomOutsideBase(n.to_string()))?;
                self.id(&atom).ok_or_else(|| HerbrandError::AtomOutsideBase(n.to_string()))
            })
            .collect()
    }
}

/// Per-atom membership state of a closed set: neither literal, only `¬²A`, or both.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum AtomState {
    Absent = 0,
    DnegOnly = 1,
    Both = 2,
}

/// A ground N⁴ literal `¬ⁿA` over base atom ids.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GroundLiteral {
    pub atom: usize,
    pub negations: u8,
}

impl GroundLiteral {
    pub fn new(atom: usize, negations: u8) -> Self {
        assert!(negations <= 3, "N4 literals carry at most three negations");
        GroundLiteral { atom, negations }
    }

    pub fn plain(atom: usize) -> Self {
        GroundLiteral::new(atom, 0)
    }

    pub fn dneg(atom: usize) -> Self {
        GroundLiteral::new(atom, 2)
    }

    pub fn render(&self, base: &HerbrandBase2, ascii: bool) -> String {
        let neg = if ascii { "~" } else { "¬" };
        let prefix = match (self.negations, ascii) {
            (0, _) => String::new(),
            (1, _) => neg.to_string(),
            (n, true) => neg.repeat(n as usize),
            (2, false) => "¬²".to_string(),
            (_, false) => "¬³".to_string(),
        };
        format!("{prefix}{}", base.atom(self.atom))
    }
}

/// A closed subset `M` of `B²`: `plain` holds `A ∈ M`, `dneg` holds `¬²A ∈ M`,
/// and `plain ⊆ dneg` always.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ClosedLiteralSet {
    plain: BTreeSet<usize>,
    dneg: BTreeSet<usize>,
}

impl ClosedLiteralSet {
    pub fn empty() -> Self {
        Self::default()
    }

    /// The least closed superset of `(plain, dneg)`.
    pub fn closure(plain: BTreeSet<usize>, mut dneg: BTreeSet<usize>) -> Self {
        dneg.extend(plain.iter().copied());
        ClosedLiteralSet { plain, dneg }
    }

    /// `None` unless `plain ⊆ dneg`.
    pub fn new(plain: BTreeSet<usize>, dneg: BTreeSet<usize>) -> Option<Self> {
        plain.is_subset(&dneg).then_some(ClosedLiteralSet { plain, dneg })
    }

    /// The complete set `A ∪ ¬²A`.
    pub fn complete(atoms: BTreeSet<usize>) -> Self {
        ClosedLiteralSet { dneg: atoms.clone(), plain: atoms }
    }

    /// All of `B²` for a base of `n` atoms.
    pub fn full(n: usize) -> Self {
        ClosedLiteralSet::complete((0..n).collect())
    }

    pub fn from_states(states: &[AtomState]) -> Self {
        let mut m = ClosedLiteralSet::empty();
        for (a, s) in states.iter().enumerate() {
            m.set_state(a, *s);
        }
        m
    }

    pub fn from_masks(plain: u64, dneg: u64) -> Self {
        let bits = |m: u64| (0..64).filter(|i| m >> i & 1 == 1).collect::<BTreeSet<usize>>();
        ClosedLiteralSet::closure(bits(plain), bits(dneg))
    }

    /// Bit masks of `(plain, dneg)`; `None` if an atom id is ≥ 64.
    pub fn to_masks(&self) -> Option<(u64, u64)> {
        let mask = |s: &BTreeSet<usize>| s.iter().try_fold(0u64, |m, &a| (a < 64).then(|| m | 1 << a));
        Some((mask(&self.plain)?, mask(&self.dneg)?))
    }

    pub fn plain(&self) -> &BTreeSet<usize> {
        &self.plain
    }

    pub fn dneg(&self) -> &BTreeSet<usize> {
        &self.dneg
    }

    pub fn state(&self, atom: usize) -> AtomState {
        match (self.plain.contains(&atom), self.dneg.contains(&atom)) {
            (true, _) => AtomState::Both,
            (false, true) => AtomState::DnegOnly,
            (false, false) => AtomState::Absent,
        }
    }

    pub fn set_state(&mut self, atom: usize, state: AtomState) {
        self.plain.remove(&atom);
        self.dneg.remove(&atom);
        if state >= AtomState::DnegOnly {
            self.dneg.insert(atom);
        }
        if state == AtomState::Both {
            self.plain.insert(atom);
        }
    }

    pub fn states(&self, n: usize) -> Vec<AtomState> {
        (0..n).map(|a| self.state(a)).collect()
    }

    /// Number of literals of `B²` in the set.
    pub fn len(&self) -> usize {
        self.plain.len() + self.dneg.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dneg.is_empty()
    }

    /// Complete iff `plain = dneg`, i.e. `H²(M)` is complete.
    pub fn is_complete(&self) -> bool {
        self.plain == self.dneg
    }

    pub fn is_subset(&self, other: &ClosedLiteralSet) -> bool {
        self.plain.is_subset(&other.plain) && self.dneg.is_subset(&other.dneg)
    }

    pub fn intersection(&self, other: &ClosedLiteralSet) -> ClosedLiteralSet {
        ClosedLiteralSet {
            plain: self.plain.intersection(&other.plain).copied().collect(),
            dneg: self.dneg.intersection(&other.dneg).copied().collect(),
        }
    }

    pub fn union(&self, other: &ClosedLiteralSet) -> ClosedLiteralSet {
        ClosedLiteralSet {
            plain: self.plain.union(&other.plain).copied().collect(),
            dneg: self.dneg.union(&other.dneg).copied().collect(),
        }
    }

    /// `H²(M) ⊨ L` for a ground N⁴ literal `L`.
    pub fn satisfies(&self, lit: GroundLiteral) -> bool {
        match lit.negations {
            0 => self.plain.contains(&lit.atom),
            1 => !self.plain.contains(&lit.atom),
            2 => self.dneg.contains(&lit.atom),
            _ => !self.dneg.contains(&lit.atom),
        }
    }

    /// The literals of `M` in base order (`A` before `¬²A`).
    pub fn literals(&self) -> Vec<GroundLiteral> {
        let mut out = Vec::new();
        for &a in &self.dneg {
            if self.plain.contains(&a) {
                out.push(GroundLiteral::plain(a));
            }
            out.push(GroundLiteral::dneg(a));
        }
        out
    }

    /// Set-notation rendering such as `{a, ¬²a, ¬²b}`.
    pub fn render(&self, base: &HerbrandBase2, ascii: bool) -> String {
        let lits: Vec<String> = self.literals().iter().map(|l| l.render(base, ascii)).collect();
        format!("{{{}}}", lits.join(", "))
    }

    pub fn to_json(&self, base: &HerbrandBase2) -> ClosedLiteralSetJson {
        let names = |s: &BTreeSet<usize>| s.iter().map(|&a| base.atom(a).to_string()).collect();
        ClosedLiteralSetJson { plain: names(&self.plain), dneg: names(&self.dneg) }
    }

    pub fn from_json(base: &HerbrandBase2, json: &ClosedLiteralSetJson) -> Result<Self, HerbrandError> {
        let plain = base.ids_of(json.plain.iter().map(String::as_str))?;
        let dneg = base.ids_of(json.dneg.iter().map(String::as_str))?;
        Ok(ClosedLiteralSet::closure(plain, dneg))
    }
}

/// `{"plain":["a"], "dneg":["a","b"]}`
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosedLiteralSetJson {
    pub plain: Vec<String>,
    pub dneg: Vec<String>,
}

/// Every closed subset of a base of `n` atoms, in mixed-radix counter order.
pub fn all_closed_sets(n: usize) -> impl Iterator<Item = ClosedLiteralSet> {
    let total = 3usize.pow(n as u32);
    (0..total).map(move |mut code| {
        let mut m = ClosedLiteralSet::empty();
        for a in 0..n {
            let s = match code % 3 {
                0 => AtomState::Absent,
                1 => AtomState::DnegOnly,
                _ => AtomState::Both,
            };
            m.set_state(a, s);
            code /= 3;
        }
        m
    })
}

/// `H²(M)`: the Herbrand interpretation satisfying exactly the positive
/// ground N⁴ literals in `M`.
pub fn h2(base: &HerbrandBase2, m: &ClosedLiteralSet) -> Result<Interpretation, HerbrandError> {
    if let Some(&a) = m.dneg.iter().find(|&&a| a >= base.len()) {
        return Err(HerbrandError::AtomOutsideBase(format!("#{a}")));
    }
    let universe = base.universe();
    let names: Vec<String> = universe.iter().map(Term::to_string).collect();
    let position: BTreeMap<&Term, Element> = universe.iter().enumerate().map(|(i, t)| (t, Element(i))).collect();
    let mut interp = Interpretation::new(names);
    interp.set_approximate(base.is_approximate());
    let sig = base.signature();
    for c in &sig.constants {
        interp.set_constant(c, position[&Term::Constant(c.clone())]);
    }
    for (f, &arity) in &sig.functions {
        let mut table = BTreeMap::new();
        for args in tuples(universe.len(), arity) {
            let term = Term::Application(f.clone(), args.iter().map(|e| universe[e.0].clone()).collect());
            if let Some(&e) = position.get(&term) {
                table.insert(args, e);
            }
        }
        interp.set_function(f, FunctionTable { arity, table });
    }
    let tuple_of = |atom: &Atom| -> Tuple { atom.args.iter().map(|t| position[t]).collect() };
    for (p, &arity) in &sig.predicates {
        let mut value = PredicateValue { arity, pos: BTreeSet::new(), dneg: BTreeSet::new() };
        for &a in &m.dneg {
            let atom = base.atom(a);
            if &atom.predicate == p {
                if m.plain.contains(&a) {
                    value.pos.insert(tuple_of(atom));
                }
                value.dneg.insert(tuple_of(atom));
            }
        }
        interp.set_predicate(p, value);
    }
    Ok(interp)
}

type NamedRelation = BTreeSet<Vec<String>>;

fn named(i: &Interpretation, rel: &BTreeSet<Tuple>) -> NamedRelation {
    rel.iter().map(|t| t.iter().map(|e| i.element_name(*e).to_string()).collect()).collect()
}

fn function_value(i: &Interpretation, f: &str, args: &[String]) -> Option<String> {
    let table = i.functions().get(f)?;
    let tuple = args.iter().map(|a| i.element(a)).collect::<Option<Vec<_>>>()?;
    table.table.get(&tuple).map(|e| i.element_name(*e).to_string())
}

fn name_tuples(domain: &[String], arity: usize) -> impl Iterator<Item = Vec<String>> + '_ {
    tuples(domain.len(), arity).map(move |t| t.iter().map(|e| domain[e.0].clone()).collect())
}

/// The sub-interpretation order `I₁ ⊆ I₂`: domain inclusion, agreement of
/// constants and functions on `D₁`, and inclusion of every relation and its
/// `¬²` part. Over a common universe `h2(M) ⊆ h2(N)` iff `M ⊆ N`.
/// Domain elements are matched by name.
pub fn leq(i1: &Interpretation, i2: &Interpretation) -> bool {
    compare(i1, i2, false)
}

/// The substructure relation: like [`leq`] but relations must coincide on
/// `D₁` (`R₁ = R₂ ∩ D₁ⁿ`, equal 0-ary values).
pub fn is_substructure(i1: &Interpretation, i2: &Interpretation) -> bool {
    compare(i1, i2, true)
}

fn compare(i1: &Interpretation, i2: &Interpretation, exact: bool) -> bool {
    let d2: BTreeSet<&String> = i2.domain().iter().collect();
    if !i1.domain().iter().all(|d| d2.contains(d)) {
        return false;
    }
    let const_names: BTreeSet<&String> = i1.constants().keys().chain(i2.constants().keys()).collect();
    for c in const_names {
        let v1 = i1.constants().get(c).map(|e| i1.element_name(*e));
        let v2 = i2.constants().get(c).map(|e| i2.element_name(*e));
        if v1.is_none() || v1 != v2 {
            return false;
        }
    }
    for (f, table) in i1.functions() {
        if !i2.functions().contains_key(f) {
            return false;
        }
        for args in name_tuples(i1.domain(), table.arity) {
            if function_value(i1, f, &args) != function_value(i2, f, &args) {
                return false;
            }
        }
    }
    if i1.predicates().len() != i2.predicates().len() {
        return false;
    }
    let d1: BTreeSet<&String> = i1.domain().iter().collect();
    for (p, v1) in i1.predicates() {
        let Some(v2) = i2.predicate(p) else { return false };
        if v1.arity != v2.arity {
            return false;
        }
        // 0-ary tuples are empty, so the restriction is the identity
        let restrict = |r: NamedRelation| -> NamedRelation {
            r.into_iter().filter(|t| t.iter().all(|d| d1.contains(d))).collect()
        };
        for (r1, r2) in [(&v1.pos, &v2.pos), (&v1.dneg, &v2.dneg)] {
            let (r1, r2) = (named(i1, r1), restrict(named(i2, r2)));
            if if exact { r1 != r2 } else { !r1.is_subset(&r2) } {
                return false;
            }
        }
    }
    true
}

/// `⋂ₖ Iₖ`, after checking that the collection is compatible.
pub fn intersect(interps: &[Interpretation]) -> Result<Interpretation, HerbrandError> {
    let first = interps.first().ok_or(HerbrandError::EmptyCollection)?;
    let domain: Vec<String> = first
        .domain()
        .iter()
        .filter(|d| interps.iter().all(|i| i.domain().contains(d)))
        .cloned()
        .collect();
    if domain.is_empty() {
        return Err(HerbrandError::Incompatible("domains have an empty intersection".into()));
    }
    let mut result = Interpretation::new(domain.clone());
    result.set_approximate(interps.iter().any(Interpretation::is_approximate));
    for (c, e) in first.constants() {
        let name = first.element_name(*e);
        if interps.iter().any(|i| i.constants().get(c).map(|x| i.element_name(*x)) != Some(name)) {
            return Err(HerbrandError::Incompatible(format!("constant `{c}` is interpreted differently")));
        }
        let elem = result.element(name).expect("agreeing constants lie in every domain");
        result.set_constant(c, elem);
    }
    for (f, table) in first.functions() {
        let mut out = BTreeMap::new();
        for args in name_tuples(&domain, table.arity) {
            let value = function_value(first, f, &args);
            if interps.iter().any(|i| function_value(i, f, &args) != value) {
                return Err(HerbrandError::Incompatible(format!(
                    "function `{f}` differs at ({})",
                    args.join(",")
                )));
            }
            if let Some(v) = value.and_then(|v| result.element(&v)) {
                let key = args.iter().map(|a| result.element(a).expect("in domain")).collect();
                out.insert(key, v);
            }
        }
        result.set_function(f, FunctionTable { arity: table.arity, table: out });
    }
    for (p, v) in first.predicates() {
        let mut pos = named(first, &v.pos);
        let mut dneg = named(first, &v.dneg);
        for i in &interps[1..] {
            let other = i
                .predicate(p)
                .ok_or_else(|| HerbrandError::Incompatible(format!("predicate `{p}` missing")))?;
            pos = pos.intersection(&named(i, &other.pos)).cloned().collect();
            dneg = dneg.intersection(&named(i, &other.dneg)).cloned().collect();
        }
        let back = |r: NamedRelation| -> BTreeSet<Tuple> {
            r.into_iter()
                .filter_map(|t| t.iter().map(|d| result.element(d)).collect::<Option<Vec<_>>>())
                .collect()
        };
        let value = PredicateValue { arity: v.arity, pos: back(pos), dneg: back(dneg) };
        result.set_predicate(p, value);
    }
    Ok(result)
}

/// A variable-free clause over base atom ids.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GroundClause {
    pub head: usize,
    pub pos: Vec<usize>,
    pub neg: Vec<usize>,
}

impl GroundClause {
    pub fn new(head: usize, pos: Vec<usize>, neg: Vec<usize>) -> Self {
        GroundClause { head, pos, neg }
    }

    pub fn is_positive(&self) -> bool {
        self.neg.is_empty()
    }

    pub fn to_clause(&self, base: &HerbrandBase2) -> crate::syntax::ProgramClause {
        use crate::syntax::BodyLiteral;
        let body = self
            .pos
            .iter()
            .map(|&a| BodyLiteral::pos(base.atom(a).clone()))
            .chain(self.neg.iter().map(|&a| BodyLiteral::neg(base.atom(a).clone())))
            .collect();
        crate::syntax::ProgramClause::new(base.atom(self.head).clone(), body)
    }
}

/// `Ground(P)` with its base. Duplicate clauses are dropped; order is first occurrence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroundProgram {
    base: HerbrandBase2,
    clauses: Vec<GroundClause>,
}

impl GroundProgram {
    pub fn new(base: HerbrandBase2, clauses: impl IntoIterator<Item = GroundClause>) -> Self {
        let mut seen = BTreeSet::new();
        let clauses = clauses.into_iter().filter(|c| seen.insert(c.clone())).collect();
        GroundProgram { base, clauses }
    }

    pub fn base(&self) -> &HerbrandBase2 {
        &self.base
    }

    pub fn clauses(&self) -> &[GroundClause] {
        &self.clauses
    }

    pub fn is_positive(&self) -> bool {
        self.clauses.iter().all(GroundClause::is_positive)
    }

    pub fn with_clauses(&self, clauses: impl IntoIterator<Item = GroundClause>) -> Self {
        GroundProgram::new(self.base.clone(), clauses)
    }

    pub fn to_program(&self) -> Program {
        Program {
            clauses: self.clauses.iter().map(|c| c.to_clause(&self.base)).collect(),
            signature: self.base.signature().clone(),
        }
    }
}

impl fmt::Display for GroundProgram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_program())
    }
}

/// All ground instances of `p`'s clauses over the (possibly depth-bounded) universe.
///
/// Under a depth bound, instances mentioning a term beyond the bound are dropped.
pub fn ground(p: &Program, depth_bound: Option<usize>) -> Result<GroundProgram, HerbrandError> {
    let base = HerbrandBase2::new(&p.signature, depth_bound)?;
    let universe = base.universe().to_vec();
    let mut out = Vec::new();
    for clause in &p.clauses {
        let vars: Vec<String> = clause.variables().into_iter().map(String::from).collect();
        'instances: for t in tuples(universe.len(), vars.len()) {
            let subst: BTreeMap<String, Term> =
                vars.iter().cloned().zip(t.iter().map(|e| universe[e.0].clone())).collect();
            let id = |a: &Atom| base.id(&a.substitute(&subst));
            let Some(head) = id(&clause.head) else { continue };
            let (mut pos, mut neg) = (Vec::new(), Vec::new());
            for lit in &clause.body {
                let Some(a) = id(&lit.atom) else { continue 'instances };
                match lit.polarity {
                    Polarity::Positive => pos.push(a),
                    Polarity::Negated => neg.push(a),
                }
            }
            out.push(GroundClause { head, pos, neg });
        }
    }
    Ok(GroundProgram::new(base, out))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::parse_program;
    use crate::semantics::is_model;
    use crate::syntax::{Formula, N4Literal};

    fn sig(consts: &[&str], funcs: &[(&str, usize)], preds: &[(&str, usize)]) -> Signature {
        let mut s = Signature::default();
        consts.iter().for_each(|c| s.add_constant(c).unwrap());
        funcs.iter().for_each(|(f, n)| s.add_function(f, *n).unwrap());
        preds.iter().for_each(|(p, n)| s.add_predicate(p, *n).unwrap());
        s
    }

    fn strings(ts: &[Term]) -> Vec<String> {
        ts.iter().map(Term::to_string).collect()
    }

    #[test]
    fn universe_examples() {
        assert_eq!(strings(&herbrand_universe(&sig(&["a", "b"], &[], &[]), None).unwrap()), ["a", "b"]);
        let s = sig(&["a"], &[("f", 1)], &[]);
        assert_eq!(strings(&herbrand_universe(&s, Some(2)).unwrap()), ["a", "f(a)", "f(f(a))"]);
        assert_eq!(herbrand_universe(&s, None), Err(HerbrandError::InfiniteUniverse));
    }

    #[test]
    fn base_examples() {
        let b = HerbrandBase2::propositional(&["p"]);
        assert_eq!(b.len(), 1);
        assert_eq!(b.literal_count(), 2);
        let b3 = HerbrandBase2::propositional(&["p", "a", "b"]);
        assert_eq!(b3.literal_count(), 6);
        assert_eq!(b3.atoms().iter().map(Atom::to_string).collect::<Vec<_>>(), ["a", "b", "p"]);
        let bq = HerbrandBase2::new(&sig(&["a", "b"], &[], &[("q", 1)]), None).unwrap();
        assert_eq!(bq.atoms().iter().map(Atom::to_string).collect::<Vec<_>>(), ["q(a)", "q(b)"]);
    }

    #[test]
    fn closure_examples() {
        let p = BTreeSet::from([0]);
        assert_eq!(ClosedLiteralSet::closure(p.clone(), BTreeSet::new()), ClosedLiteralSet::complete(p.clone()));
        let m = ClosedLiteralSet::closure(BTreeSet::new(), p.clone());
        assert_eq!((m.plain().len(), m.dneg().len()), (0, 1));
        assert!(ClosedLiteralSet::closure(BTreeSet::new(), BTreeSet::new()).is_empty());
        assert!(ClosedLiteralSet::new(p, BTreeSet::new()).is_none());
    }

    #[test]
    fn h2_examples() {
        let base = HerbrandBase2::propositional(&["p"]);
        let gap = ClosedLiteralSet::from_states(&[AtomState::DnegOnly]);
        let i = h2(&base, &gap).unwrap();
        let p = i.predicate("p").unwrap();
        assert!(p.pos.is_empty() && !p.dneg.is_empty());
        assert!(!i.is_complete());
        let none = h2(&base, &ClosedLiteralSet::empty()).unwrap();
        assert!(!is_model(&none, &Formula::prop("p").negate_n(2)).unwrap());
        let full = h2(&base, &ClosedLiteralSet::full(1)).unwrap();
        assert!(is_model(&full, &Formula::prop("p")).unwrap());
        assert!(h2(&base, &ClosedLiteralSet::full(2)).is_err());
    }

    #[test]
    fn order_examples() {
        let base = HerbrandBase2::propositional(&["p"]);
        let gap = h2(&base, &ClosedLiteralSet::from_states(&[AtomState::DnegOnly])).unwrap();
        let both = h2(&base, &ClosedLiteralSet::full(1)).unwrap();
        assert!(leq(&gap, &both));
        assert!(!leq(&both, &gap));
        assert!(leq(&gap, &gap));
        assert!(!is_substructure(&gap, &both));
        assert!(is_substructure(&gap, &gap));
    }

    #[test]
    fn order_matches_set_inclusion() {
        let base = HerbrandBase2::propositional(&["a", "b"]);
        let sets: Vec<_> = all_closed_sets(2).collect();
        for m in &sets {
            for n in &sets {
                assert_eq!(leq(&h2(&base, m).unwrap(), &h2(&base, n).unwrap()), m.is_subset(n));
            }
        }
    }

    #[test]
    fn order_on_relational_interpretations() {
        let s = sig(&["a", "b"], &[], &[("q", 1)]);
        let base = HerbrandBase2::new(&s, None).unwrap();
        let small = h2(&base, &ClosedLiteralSet::closure(BTreeSet::from([0]), BTreeSet::new())).unwrap();
        let big = h2(&base, &ClosedLiteralSet::full(2)).unwrap();
        assert!(leq(&small, &big));
        assert!(!leq(&big, &small));
        assert_eq!(intersect(&[small.clone(), big.clone()]).unwrap(), small);
    }

    #[test]
    fn intersect_examples() {
        let base = HerbrandBase2::propositional(&["p"]);
        let gap_set = ClosedLiteralSet::from_states(&[AtomState::DnegOnly]);
        let gap = h2(&base, &gap_set).unwrap();
        let both = h2(&base, &ClosedLiteralSet::full(1)).unwrap();
        assert_eq!(intersect(&[both.clone(), gap.clone()]).unwrap(), gap);
        assert_eq!(intersect(std::slice::from_ref(&both)).unwrap(), both);
        assert_eq!(intersect(&[]), Err(HerbrandError::EmptyCollection));
    }

    #[test]
    fn intersect_rejects_disjoint_domains() {
        let a = Interpretation::new(vec!["x".into()]);
        let b = Interpretation::new(vec!["y".into()]);
        assert!(matches!(intersect(&[a, b]), Err(HerbrandError::Incompatible(_))));
    }

    #[test]
    fn h2_satisfies_exactly_its_positive_literals() {
        let base = HerbrandBase2::propositional(&["a", "b"]);
        for m in all_closed_sets(2) {
            let i = h2(&base, &m).unwrap();
            for atom in 0..2 {
                for n in [0u8, 2] {
                    let lit = N4Literal::new(n, base.atom(atom).clone()).unwrap();
                    let expected = m.satisfies(GroundLiteral::new(atom, n));
                    assert_eq!(is_model(&i, &lit.to_formula()).unwrap(), expected);
                }
            }
            assert_eq!(i.is_complete(), m.is_complete());
        }
    }

    #[test]
    fn grounding_examples() {
        let prop = parse_program("p :- not p.").unwrap();
        let g = ground(&prop, None).unwrap();
        assert_eq!(g.to_string(), "p :- not p.");
        let rel = parse_program("#const a. #const b. q(X) :- r(X).").unwrap();
        assert_eq!(ground(&rel, None).unwrap().to_string(), "q(a) :- r(a).\nq(b) :- r(b).");
        let fun = parse_program("nat(z). nat(s(X)) :- nat(X).").unwrap();
        assert_eq!(ground(&fun, None), Err(HerbrandError::InfiniteUniverse));
        let bounded = ground(&fun, Some(1)).unwrap();
        assert!(bounded.base().is_approximate());
        assert_eq!(bounded.to_string(), "nat(z).\nnat(s(z)) :- nat(z).");
    }

    #[test]
    fn closed_set_json_roundtrip() {
        let base = HerbrandBase2::propositional(&["a", "b"]);
        let m = ClosedLiteralSet::from_states(&[AtomState::Both, AtomState::DnegOnly]);
        let json = m.to_json(&base);
        assert_eq!(serde_json::to_string(&json).unwrap(), r#"{"plain":["a"],"dneg":["a","b"]}"#);
        assert_eq!(ClosedLiteralSet::from_json(&base, &json).unwrap(), m);
        assert_eq!(m.render(&base, false), "{a, ¬²a, ¬²b}");
        assert_eq!(m.render(&base, true), "{a, ~~a, ~~b}");
    }

    #[test]
    fn masks_roundtrip() {
        for m in all_closed_sets(3) {
            let (p, d) = m.to_masks().unwrap();
            assert_eq!(ClosedLiteralSet::from_masks(p, d), m);
        }
    }
}

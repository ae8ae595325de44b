//! Terms, formulas, program clauses and the purely syntactic transforms
//! on them: negation stripping, prefix-negation detection, N⁴ clausal form
//! and free variables.
//!
//! The AST never holds `→`, `↔` or `⊤`; the parser expands them. The
//! [`fmt::Display`] impls are the canonical printer and emit the ASCII
//! concrete syntax accepted by [`crate::parser`], so printing and parsing
//! round-trip.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Term {
    Variable(String),
    Constant(String),
    Application(String, Vec<Term>),
}

impl Term {
    pub fn var(name: impl Into<String>) -> Self {
        Term::Variable(name.into())
    }

    pub fn constant(name: impl Into<String>) -> Self {
        Term::Constant(name.into())
    }

    pub fn app(function: impl Into<String>, args: Vec<Term>) -> Self {
        Term::Application(function.into(), args)
    }

    pub fn is_ground(&self) -> bool {
        match self {
            Term::Variable(_) => false,
            Term::Constant(_) => true,
            Term::Application(_, args) => args.iter().all(Term::is_ground),
        }
    }

    /// Nesting depth of function applications; constants and variables are 0.
    pub fn depth(&self) -> usize {
        match self {
            Term::Variable(_) | Term::Constant(_) => 0,
            Term::Application(_, args) => 1 + args.iter().map(Term::depth).max().unwrap_or(0),
        }
    }

    fn collect_variables<'a>(&'a self, out: &mut Vec<&'a str>) {
        match self {
            Term::Variable(v) => {
                if !out.contains(&v.as_str()) {
                    out.push(v);
                }
            }
            Term::Constant(_) => {}
            Term::Application(_, args) => args.iter().for_each(|a| a.collect_variables(out)),
        }
    }

    pub fn substitute(&self, subst: &BTreeMap<String, Term>) -> Term {
        match self {
            Term::Variable(v) => subst.get(v).cloned().unwrap_or_else(|| self.clone()),
            Term::Constant(_) => self.clone(),
            Term::Application(f, args) => {
                Term::Application(f.clone(), args.iter().map(|a| a.substitute(subst)).collect())
            }
        }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Variable(v) | Term::Constant(v) => f.write_str(v),
            Term::Application(name, args) => {
                write!(f, "{name}(")?;
                write_comma_separated(f, args)?;
                f.write_str(")")
            }
        }
    }
}

fn write_comma_separated<T: fmt::Display>(f: &mut fmt::Formatter<'_>, items: &[T]) -> fmt::Result {
    for (i, item) in items.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{item}")?;
    }
    Ok(())
}

/// An atomic formula `p(t₁, …, tₙ)`; `n = 0` gives a propositional atom.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Atom {
    pub predicate: String,
    pub args: Vec<Term>,
}

impl Atom {
    pub fn new(predicate: impl Into<String>, args: Vec<Term>) -> Self {
        Atom { predicate: predicate.into(), args }
    }

    pub fn prop(predicate: impl Into<String>) -> Self {
        Atom::new(predicate, Vec::new())
    }

    pub fn arity(&self) -> usize {
        self.args.len()
    }

    pub fn is_ground(&self) -> bool {
        self.args.iter().all(Term::is_ground)
    }

    pub fn substitute(&self, subst: &BTreeMap<String, Term>) -> Atom {
        Atom::new(self.predicate.clone(), self.args.iter().map(|t| t.substitute(subst)).collect())
    }

    fn collect_variables<'a>(&'a self, out: &mut Vec<&'a str>) {
        self.args.iter().for_each(|t| t.collect_variables(out));
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.predicate)?;
        if !self.args.is_empty() {
            f.write_str("(")?;
            write_comma_separated(f, &self.args)?;
            f.write_str(")")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Formula {
    Bottom,
    Atom(Atom),
    Not(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Forall(String, Box<Formula>),
    Exists(String, Box<Formula>),
}

impl Formula {
    pub fn atom(atom: Atom) -> Self {
        Formula::Atom(atom)
    }

    pub fn prop(name: &str) -> Self {
        Formula::Atom(Atom::prop(name))
    }

    /// `⊤ := ¬⊥`.
    pub fn top() -> Self {
        Formula::Bottom.negate()
    }

    pub fn negate(self) -> Self {
        Formula::Not(Box::new(self))
    }

    /// `¬ⁿ self`.
    pub fn negate_n(self, n: usize) -> Self {
        (0..n).fold(self, |f, _| f.negate())
    }

    pub fn and(self, other: Formula) -> Self {
        Formula::And(Box::new(self), Box::new(other))
    }

    pub fn or(self, other: Formula) -> Self {
        Formula::Or(Box::new(self), Box::new(other))
    }

    /// `(self → other) := (¬self ∨ other)`.
    pub fn implies(self, other: Formula) -> Self {
        self.negate().or(other)
    }

    /// `(self ↔ other) := ((¬self ∨ other) ∧ (¬other ∨ self))`.
    pub fn iff(self, other: Formula) -> Self {
        let forward = self.clone().implies(other.clone());
        let backward = other.implies(self);
        forward.and(backward)
    }

    pub fn forall(var: impl Into<String>, body: Formula) -> Self {
        Formula::Forall(var.into(), Box::new(body))
    }

    pub fn exists(var: impl Into<String>, body: Formula) -> Self {
        Formula::Exists(var.into(), Box::new(body))
    }

    /// Number of connective/quantifier levels above the leaves.
    pub fn depth(&self) -> usize {
        match self {
            Formula::Bottom | Formula::Atom(_) => 0,
            Formula::Not(g) | Formula::Forall(_, g) | Formula::Exists(_, g) => 1 + g.depth(),
            Formula::And(a, b) | Formula::Or(a, b) => 1 + a.depth().max(b.depth()),
        }
    }

    /// Splits `self` as `¬ⁿ core` with `core` not a negation.
    pub fn strip_negations(&self) -> (usize, &Formula) {
        let mut depth = 0;
        let mut core = self;
        while let Formula::Not(inner) = core {
            depth += 1;
            core = inner;
        }
        (depth, core)
    }

    fn contains_negation(&self) -> bool {
        match self {
            Formula::Bottom | Formula::Atom(_) => false,
            Formula::Not(_) => true,
            Formula::And(a, b) | Formula::Or(a, b) => a.contains_negation() || b.contains_negation(),
            Formula::Forall(_, g) | Formula::Exists(_, g) => g.contains_negation(),
        }
    }

    /// True iff `self = ¬ⁿG` with no negation anywhere inside `G`.
    pub fn is_prefix_negation_form(&self) -> bool {
        !self.strip_negations().1.contains_negation()
    }

    pub fn free_variables(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_free(&mut Vec::new(), &mut out);
        out
    }

    fn collect_free<'a>(&'a self, bound: &mut Vec<&'a str>, out: &mut BTreeSet<String>) {
        match self {
            Formula::Bottom => {}
            Formula::Atom(atom) => {
                let mut vars = Vec::new();
                atom.collect_variables(&mut vars);
                for v in vars {
                    if !bound.contains(&v) {
                        out.insert(v.to_string());
                    }
                }
            }
            Formula::Not(g) => g.collect_free(bound, out),
            Formula::And(a, b) | Formula::Or(a, b) => {
                a.collect_free(bound, out);
                b.collect_free(bound, out);
            }
            Formula::Forall(x, g) | Formula::Exists(x, g) => {
                bound.push(x);
                g.collect_free(bound, out);
                bound.pop();
            }
        }
    }

    /// Wraps `∀x` around every free variable, in sorted order.
    pub fn universal_closure(self) -> Formula {
        let free = self.free_variables();
        free.into_iter().rev().fold(self, |f, v| Formula::forall(v, f))
    }

    /// Every atom occurring in the formula, in first-occurrence order.
    pub fn atoms(&self) -> Vec<&Atom> {
        fn go<'a>(f: &'a Formula, out: &mut Vec<&'a Atom>) {
            match f {
                Formula::Bottom => {}
                Formula::Atom(a) => {
                    if !out.contains(&a) {
                        out.push(a);
                    }
                }
                Formula::Not(g) | Formula::Forall(_, g) | Formula::Exists(_, g) => go(g, out),
                Formula::And(a, b) | Formula::Or(a, b) => {
                    go(a, out);
                    go(b, out);
                }
            }
        }
        let mut out = Vec::new();
        go(self, &mut out);
        out
    }

    /// Renders with `¬ ∧ ∨ ∀ ∃ ⊥` instead of the ASCII grammar.
    pub fn to_unicode(&self) -> String {
        let mut s = String::new();
        write_formula(&mut s, self, Precedence::Or, true).expect("writing to a String");
        s
    }
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum Precedence {
    Or,
    And,
    Unary,
}

fn write_formula(out: &mut impl fmt::Write, f: &Formula, ctx: Precedence, unicode: bool) -> fmt::Result {
    let (not, and, or, bot, all, ex) = if unicode {
        ("¬", " ∧ ", " ∨ ", "⊥", "∀", "∃")
    } else {
        ("~", " & ", " | ", "bot", "forall ", "exists ")
    };
    match f {
        Formula::Bottom => out.write_str(bot),
        Formula::Atom(a) => write!(out, "{a}"),
        Formula::Not(g) => {
            out.write_str(not)?;
            write_formula(out, g, Precedence::Unary, unicode)
        }
        Formula::And(a, b) | Formula::Or(a, b) => {
            let (own, sep) = match f {
                Formula::And(..) => (Precedence::And, and),
                _ => (Precedence::Or, or),
            };
            let parens = ctx > own;
            if parens {
                out.write_str("(")?;
            }
            // left-associative: a right operand of the same connective needs parens
            write_formula(out, a, own, unicode)?;
            out.write_str(sep)?;
            write_formula(out, b, next_level(own), unicode)?;
            if parens {
                out.write_str(")")?;
            }
            Ok(())
        }
        Formula::Forall(x, g) | Formula::Exists(x, g) => {
            out.write_str(if matches!(f, Formula::Forall(..)) { all } else { ex })?;
            out.write_str(x)?;
            out.write_str(" ")?;
            write_formula(out, g, Precedence::Unary, unicode)
        }
    }
}

fn next_level(p: Precedence) -> Precedence {
    match p {
        Precedence::Or => Precedence::And,
        _ => Precedence::Unary,
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_formula(f, self, Precedence::Or, false)
    }
}

/// `¬ⁿA` for `n ∈ {0,1,2,3}`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct N4Literal {
    negations: u8,
    pub atom: Atom,
}

impl N4Literal {
    /// Returns `None` when `negations > 3`.
    pub fn new(negations: u8, atom: Atom) -> Option<Self> {
        (negations <= 3).then_some(N4Literal { negations, atom })
    }

    pub fn negations(&self) -> u8 {
        self.negations
    }

    pub fn is_positive(&self) -> bool {
        self.negations.is_multiple_of(2)
    }

    pub fn is_negative(&self) -> bool {
        !self.is_positive()
    }

    pub fn to_formula(&self) -> Formula {
        Formula::Atom(self.atom.clone()).negate_n(self.negations as usize)
    }

    /// Reads `¬ⁿA` back out of a formula; `None` unless the core is an atom and `n ≤ 3`.
    pub fn from_formula(f: &Formula) -> Option<Self> {
        match f.strip_negations() {
            (n, Formula::Atom(a)) if n <= 3 => N4Literal::new(n as u8, a.clone()),
            _ => None,
        }
    }
}

impl fmt::Display for N4Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_formula())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Polarity {
    Positive,
    Negated,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct BodyLiteral {
    pub polarity: Polarity,
    pub atom: Atom,
}

impl BodyLiteral {
    pub fn pos(atom: Atom) -> Self {
        BodyLiteral { polarity: Polarity::Positive, atom }
    }

    pub fn neg(atom: Atom) -> Self {
        BodyLiteral { polarity: Polarity::Negated, atom }
    }
}

impl fmt::Display for BodyLiteral {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.polarity {
            Polarity::Positive => write!(f, "{}", self.atom),
            Polarity::Negated => write!(f, "not {}", self.atom),
        }
    }
}

/// `head ← body₁, …, bodyₙ`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ProgramClause {
    pub head: Atom,
    pub body: Vec<BodyLiteral>,
}

impl ProgramClause {
    pub fn new(head: Atom, body: Vec<BodyLiteral>) -> Self {
        ProgramClause { head, body }
    }

    pub fn fact(head: Atom) -> Self {
        ProgramClause::new(head, Vec::new())
    }

    pub fn is_positive(&self) -> bool {
        self.body.iter().all(|l| l.polarity == Polarity::Positive)
    }

    /// Variables by first textual occurrence in head, then body.
    pub fn variables(&self) -> Vec<&str> {
        let mut out = Vec::new();
        self.head.collect_variables(&mut out);
        for lit in &self.body {
            lit.atom.collect_variables(&mut out);
        }
        out
    }

    pub fn is_ground(&self) -> bool {
        self.head.is_ground() && self.body.iter().all(|l| l.atom.is_ground())
    }

    /// The associated N⁴ clause `∀x₁…∀xₖ (…(A ∨ ¬B₁) ∨ … ∨ ¬Bₙ)`.
    ///
    /// A negated body atom `¬B` contributes `¬²B`; double negations are kept.
    pub fn clausal_form(&self) -> Formula {
        let matrix = self.body.iter().fold(Formula::Atom(self.head.clone()), |acc, lit| {
            let b = Formula::Atom(lit.atom.clone());
            let disjunct = match lit.polarity {
                Polarity::Positive => b.negate(),
                Polarity::Negated => b.negate_n(2),
            };
            acc.or(disjunct)
        });
        self.variables().into_iter().rev().fold(matrix, |f, v| Formula::forall(v, f))
    }
}

impl fmt::Display for ProgramClause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.head)?;
        if !self.body.is_empty() {
            f.write_str(" :- ")?;
            for (i, lit) in self.body.iter().enumerate() {
                if i > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{lit}")?;
            }
        }
        f.write_str(".")
    }
}

/// Constant `c0`, injected when a program or formula set mentions none.
pub const DEFAULT_CONSTANT: &str = "c0";

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Signature {
    pub constants: BTreeSet<String>,
    /// function name → arity (≥ 1)
    pub functions: BTreeMap<String, usize>,
    /// predicate name → arity (≥ 0)
    pub predicates: BTreeMap<String, usize>,
    /// Set when [`DEFAULT_CONSTANT`] was added because no constant occurred.
    pub default_constant_injected: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("arity conflict: {kind} `{name}` used with arity {first} and {second}")]
pub struct ArityConflict {
    pub kind: &'static str,
    pub name: String,
    pub first: usize,
    pub second: usize,
}

impl Signature {
    pub fn add_predicate(&mut self, name: &str, arity: usize) -> Result<(), ArityConflict> {
        register(&mut self.predicates, "predicate", name, arity)
    }

    pub fn add_constant(&mut self, name: &str) -> Result<(), ArityConflict> {
        if let Some(&arity) = self.functions.get(name) {
            return Err(ArityConflict { kind: "function", name: name.into(), first: arity, second: 0 });
        }
        self.constants.insert(name.to_string());
        Ok(())
    }

    pub fn add_function(&mut self, name: &str, arity: usize) -> Result<(), ArityConflict> {
        if self.constants.contains(name) {
            return Err(ArityConflict { kind: "function", name: name.into(), first: 0, second: arity });
        }
        register(&mut self.functions, "function", name, arity)
    }

    pub fn add_term(&mut self, term: &Term) -> Result<(), ArityConflict> {
        match term {
            Term::Variable(_) => Ok(()),
            Term::Constant(c) => self.add_constant(c),
            Term::Application(f, args) => {
                self.add_function(f, args.len())?;
                args.iter().try_for_each(|a| self.add_term(a))
            }
        }
    }

    pub fn add_atom(&mut self, atom: &Atom) -> Result<(), ArityConflict> {
        self.add_predicate(&atom.predicate, atom.arity())?;
        atom.args.iter().try_for_each(|t| self.add_term(t))
    }

    pub fn add_formula(&mut self, f: &Formula) -> Result<(), ArityConflict> {
        f.atoms().into_iter().try_for_each(|a| self.add_atom(a))
    }

    /// Injects [`DEFAULT_CONSTANT`] if the constant set is empty.
    pub fn ensure_constant(&mut self) {
        if self.constants.is_empty() {
            self.constants.insert(DEFAULT_CONSTANT.to_string());
            self.default_constant_injected = true;
        }
    }

    pub fn is_function_free(&self) -> bool {
        self.functions.is_empty()
    }

    /// True if every predicate and function is 0-ary, so the universe plays no role.
    pub fn is_propositional(&self) -> bool {
        self.functions.is_empty() && self.predicates.values().all(|&a| a == 0)
    }
}

fn register(
    map: &mut BTreeMap<String, usize>,
    kind: &'static str,
    name: &str,
    arity: usize,
) -> Result<(), ArityConflict> {
    match map.get(name) {
        Some(&first) if first != arity => {
            Err(ArityConflict { kind, name: name.to_string(), first, second: arity })
        }
        Some(_) => Ok(()),
        None => {
            map.insert(name.to_string(), arity);
            Ok(())
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Program {
    pub clauses: Vec<ProgramClause>,
    pub signature: Signature,
}

impl Program {
    /// Builds a program, inferring its signature; injects the default constant if needed.
    pub fn from_clauses(clauses: Vec<ProgramClause>) -> Result<Self, ArityConflict> {
        let mut signature = Signature::default();
        for c in &clauses {
            signature.add_atom(&c.head)?;
            c.body.iter().try_for_each(|l| signature.add_atom(&l.atom))?;
        }
        signature.ensure_constant();
        Ok(Program { clauses, signature })
    }

    pub fn is_positive(&self) -> bool {
        self.clauses.iter().all(ProgramClause::is_positive)
    }
}

impl fmt::Display for Program {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.clauses.iter().enumerate() {
            if i > 0 {
                f.write_str("\n")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

//! Finite N⁴ interpretations and the N⁴ valuation function.
//!
//! An interpretation assigns every predicate `p` two relations, one read by
//! `p` and one read by `¬²p`, with `R_p ⊆ R_¬²p`. A 0-ary predicate is true
//! when its relation holds the empty tuple, so propositional and relational
//! predicates share one representation.
//!
//! [`evaluate`] follows the valuation clauses by negation depth: depth 0 is
//! the classical recursion, depth 1 pushes `¬` inwards (De Morgan, quantifier
//! duals, `¬⊥` true, `¬A` reads the complement of `R_p`), depth 2 is
//! homomorphic with atoms reading `R_¬²p`, and `¬ⁿG` for `n ≥ 3` complements
//! `¬ⁿ⁻¹G`. Nothing makes `¬²⊥` true, so it is false.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::syntax::{Formula, Term};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Element(pub usize);

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum TruthValue {
    False,
    True,
}

impl TruthValue {
    pub fn is_true(self) -> bool {
        self == TruthValue::True
    }
}

impl From<bool> for TruthValue {
    fn from(b: bool) -> Self {
        if b {
            TruthValue::True
        } else {
            TruthValue::False
        }
    }
}

impl std::ops::Not for TruthValue {
    type Output = TruthValue;
    fn not(self) -> TruthValue {
        (!self.is_true()).into()
    }
}

impl fmt::Display for TruthValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(if self.is_true() { "true" } else { "false" })
    }
}

pub type Tuple = Vec<Element>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FunctionTable {
    pub arity: usize,
    pub table: BTreeMap<Tuple, Element>,
}

/// The pair `(R_p, R_¬²p)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PredicateValue {
    pub arity: usize,
    pub pos: BTreeSet<Tuple>,
    pub dneg: BTreeSet<Tuple>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Interpretation {
    domain: Vec<String>,
    constants: BTreeMap<String, Element>,
    functions: BTreeMap<String, FunctionTable>,
    predicates: BTreeMap<String, PredicateValue>,
    /// Function tables may be partial (depth-bounded Herbrand universes).
    approximate: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum EvalError {
    #[error("unknown constant `{0}`")]
    UnknownConstant(String),
    #[error("unknown function `{0}`")]
    UnknownFunction(String),
    #[error("unknown predicate `{0}`")]
    UnknownPredicate(String),
    #[error("`{name}` has arity {expected} but is applied to {found} arguments")]
    ArityMismatch { name: String, expected: usize, found: usize },
    #[error("variable `{0}` is not assigned")]
    UnassignedVariable(String),
    #[error("`{0}` leaves the bounded universe")]
    OutsideUniverse(String),
    #[error("interpretation is incomplete; it induces no classical interpretation")]
    Incomplete,
}

/// A reason why an interpretation breaks an invariant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    EmptyDomain,
    ConstantOutsideDomain(String),
    FunctionNotTotal { function: String, args: Vec<String> },
    FunctionOutsideDomain(String),
    TupleArity { predicate: String },
    TupleOutsideDomain { predicate: String },
    PosNotInDneg { predicate: String, tuple: Vec<String> },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::EmptyDomain => f.write_str("domain empty"),
            Violation::ConstantOutsideDomain(c) => write!(f, "constant `{c}` maps outside the domain"),
            Violation::FunctionNotTotal { function, args } => {
                write!(f, "function `{function}` undefined at ({})", args.join(","))
            }
            Violation::FunctionOutsideDomain(g) => write!(f, "function `{g}` maps outside the domain"),
            Violation::TupleArity { predicate } => write!(f, "predicate `{predicate}` holds a tuple of wrong arity"),
            Violation::TupleOutsideDomain { predicate } => {
                write!(f, "predicate `{predicate}` holds a tuple outside the domain")
            }
            Violation::PosNotInDneg { predicate, tuple } => {
                if tuple.is_empty() {
                    write!(f, "`{predicate}` is true but `~~{predicate}` is false")
                } else {
                    write!(f, "`{predicate}({})` holds but `~~{predicate}({})` does not", tuple.join(","), tuple.join(","))
                }
            }
        }
    }
}

impl Interpretation {
    pub fn new(domain: Vec<String>) -> Self {
        Interpretation { domain, ..Default::default() }
    }

    /// A one-element interpretation with only propositional predicates, each
    /// given as `(name, value of p, value of ¬²p)`.
    pub fn propositional<'a>(values: impl IntoIterator<Item = (&'a str, bool, bool)>) -> Self {
        let mut i = Interpretation::new(vec!["d".to_string()]);
        for (name, pos, dneg) in values {
            i.set_proposition(name, pos, dneg);
        }
        i
    }

    pub fn domain(&self) -> &[String] {
        &self.domain
    }

    pub fn domain_size(&self) -> usize {
        self.domain.len()
    }

    pub fn element(&self, name: &str) -> Option<Element> {
        self.domain.iter().position(|d| d == name).map(Element)
    }

    pub fn element_name(&self, e: Element) -> &str {
        &self.domain[e.0]
    }

    pub fn constants(&self) -> &BTreeMap<String, Element> {
        &self.constants
    }

    pub fn functions(&self) -> &BTreeMap<String, FunctionTable> {
        &self.functions
    }

    pub fn predicates(&self) -> &BTreeMap<String, PredicateValue> {
        &self.predicates
    }

    pub fn predicate(&self, name: &str) -> Option<&PredicateValue> {
        self.predicates.get(name)
    }

    pub fn is_approximate(&self) -> bool {
        self.approximate
    }

    pub fn set_approximate(&mut self, approximate: bool) {
        self.approximate = approximate;
    }

    pub fn set_constant(&mut self, name: &str, e: Element) {
        self.constants.insert(name.to_string(), e);
    }

    pub fn set_function(&mut self, name: &str, table: FunctionTable) {
        self.functions.insert(name.to_string(), table);
    }

    pub fn set_predicate(&mut self, name: &str, value: PredicateValue) {
        self.predicates.insert(name.to_string(), value);
    }

    pub fn set_proposition(&mut self, name: &str, pos: bool, dneg: bool) {
        let unit = |b: bool| if b { BTreeSet::from([Vec::new()]) } else { BTreeSet::new() };
        self.set_predicate(name, PredicateValue { arity: 0, pos: unit(pos), dneg: unit(dneg) });
    }

    fn names(&self, tuple: &[Element]) -> Vec<String> {
        tuple
            .iter()
            .map(|e| self.domain.get(e.0).cloned().unwrap_or_else(|| format!("#{}", e.0)))
            .collect()
    }

    /// Checks every structural invariant; an empty list means the interpretation is valid.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        let n = self.domain.len();
        if n == 0 {
            out.push(Violation::EmptyDomain);
        }
        let inside = |t: &[Element]| t.iter().all(|e| e.0 < n);
        for (c, e) in &self.constants {
            if e.0 >= n {
                out.push(Violation::ConstantOutsideDomain(c.clone()));
            }
        }
        for (name, table) in &self.functions {
            if table.table.iter().any(|(k, v)| !inside(k) || k.len() != table.arity || v.0 >= n) {
                out.push(Violation::FunctionOutsideDomain(name.clone()));
            }
            if !self.approximate {
                for args in tuples(n, table.arity) {
                    if !table.table.contains_key(&args) {
                        out.push(Violation::FunctionNotTotal { function: name.clone(), args: self.names(&args) });
                        break;
                    }
                }
            }
        }
        for (name, pred) in &self.predicates {
            let all = pred.pos.iter().chain(&pred.dneg);
            if all.clone().any(|t| t.len() != pred.arity) {
                out.push(Violation::TupleArity { predicate: name.clone() });
            }
            if all.clone().any(|t| !inside(t)) {
                out.push(Violation::TupleOutsideDomain { predicate: name.clone() });
            }
            for t in pred.pos.difference(&pred.dneg) {
                out.push(Violation::PosNotInDneg { predicate: name.clone(), tuple: self.names(t) });
            }
        }
        out
    }

    /// Complete iff every atom is complete, i.e. `R_p = R_¬²p` for every predicate.
    pub fn is_complete(&self) -> bool {
        self.predicates.values().all(|p| p.pos == p.dneg)
    }
}

/// All tuples of `domain_size` elements of length `arity`, in lexicographic order.
pub fn tuples(domain_size: usize, arity: usize) -> impl Iterator<Item = Tuple> {
    let total = if domain_size == 0 && arity > 0 { 0 } else { domain_size.pow(arity as u32) };
    (0..total).map(move |mut code| {
        let mut t = vec![Element(0); arity];
        for slot in t.iter_mut().rev() {
            *slot = Element(code % domain_size.max(1));
            code /= domain_size.max(1);
        }
        t
    })
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VariableAssignment {
    values: BTreeMap<String, Element>,
}

impl VariableAssignment {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, x: &str) -> Option<Element> {
        self.values.get(x).copied()
    }

    /// `V[d/x]`.
    pub fn update(&self, x: &str, d: Element) -> Self {
        let mut values = self.values.clone();
        values.insert(x.to_string(), d);
        VariableAssignment { values }
    }

    /// Every assignment of `vars` to elements of a domain of the given size.
    pub fn all_over(vars: &[String], domain_size: usize) -> impl Iterator<Item = VariableAssignment> + '_ {
        tuples(domain_size, vars.len()).map(move |t| VariableAssignment {
            values: vars.iter().cloned().zip(t).collect(),
        })
    }

    fn rebind(&mut self, x: &str, d: Element) -> Option<Element> {
        self.values.insert(x.to_string(), d)
    }

    fn restore(&mut self, x: &str, old: Option<Element>) {
        match old {
            Some(e) => self.values.insert(x.to_string(), e),
            None => self.values.remove(x),
        };
    }
}

impl FromIterator<(String, Element)> for VariableAssignment {
    fn from_iter<I: IntoIterator<Item = (String, Element)>>(iter: I) -> Self {
        VariableAssignment { values: iter.into_iter().collect() }
    }
}

pub fn assign_term(i: &Interpretation, v: &VariableAssignment, t: &Term) -> Result<Element, EvalError> {
    match t {
        Term::Variable(x) => v.get(x).ok_or_else(|| EvalError::UnassignedVariable(x.clone())),
        Term::Constant(c) => i.constants.get(c).copied().ok_or_else(|| EvalError::UnknownConstant(c.clone())),
        Term::Application(f, args) => {
            let table = i.functions.get(f).ok_or_else(|| EvalError::UnknownFunction(f.clone()))?;
            if table.arity != args.len() {
                return Err(EvalError::ArityMismatch { name: f.clone(), expected: table.arity, found: args.len() });
            }
            let values = args.iter().map(|a| assign_term(i, v, a)).collect::<Result<Vec<_>, _>>()?;
            table.table.get(&values).copied().ok_or_else(|| EvalError::OutsideUniverse(t.to_string()))
        }
    }
}

#[derive(Clone, Copy)]
enum AtomReading {
    Pos,
    Dneg,
}

struct Evaluator<'a> {
    interp: &'a Interpretation,
    assignment: VariableAssignment,
}

impl Evaluator<'_> {
    fn atom(&self, atom: &crate::syntax::Atom, reading: AtomReading) -> Result<bool, EvalError> {
        let pred = self
            .interp
            .predicates
            .get(&atom.predicate)
            .ok_or_else(|| EvalError::UnknownPredicate(atom.predicate.clone()))?;
        if pred.arity != atom.args.len() {
            return Err(EvalError::ArityMismatch {
                name: atom.predicate.clone(),
                expected: pred.arity,
                found: atom.args.len(),
            });
        }
        let tuple =
            atom.args.iter().map(|t| assign_term(self.interp, &self.assignment, t)).collect::<Result<Vec<_>, _>>()?;
        Ok(match reading {
            AtomReading::Pos => pred.pos.contains(&tuple),
            AtomReading::Dneg => pred.dneg.contains(&tuple),
        })
    }

    fn quantify(
        &mut self,
        x: &str,
        body: &Formula,
        negations: usize,
        universal: bool,
    ) -> Result<bool, EvalError> {
        let mut result = universal;
        for d in 0..self.interp.domain.len() {
            let old = self.assignment.rebind(x, Element(d));
            let value = self.eval(negations, body);
            self.assignment.restore(x, old);
            if value? != universal {
                result = !universal;
                break;
            }
        }
        Ok(result)
    }

    /// Value of `¬^negations f`.
    fn eval(&mut self, negations: usize, f: &Formula) -> Result<bool, EvalError> {
        if let Formula::Not(inner) = f {
            return self.eval(negations + 1, inner);
        }
        match negations {
            0 => match f {
                Formula::Bottom => Ok(false),
                Formula::Atom(a) => self.atom(a, AtomReading::Pos),
                Formula::And(a, b) => Ok(self.eval(0, a)? && self.eval(0, b)?),
                Formula::Or(a, b) => Ok(self.eval(0, a)? || self.eval(0, b)?),
                Formula::Forall(x, g) => self.quantify(x, g, 0, true),
                Formula::Exists(x, g) => self.quantify(x, g, 0, false),
                Formula::Not(_) => unreachable!(),
            },
            1 => match f {
                Formula::Bottom => Ok(true),
                Formula::Atom(a) => Ok(!self.atom(a, AtomReading::Pos)?),
                Formula::And(a, b) => Ok(self.eval(1, a)? || self.eval(1, b)?),
                Formula::Or(a, b) => Ok(self.eval(1, a)? && self.eval(1, b)?),
                Formula::Forall(x, g) => self.quantify(x, g, 1, false),
                Formula::Exists(x, g) => self.quantify(x, g, 1, true),
                Formula::Not(_) => unreachable!(),
            },
            2 => match f {
                Formula::Bottom => Ok(false),
                Formula::Atom(a) => self.atom(a, AtomReading::Dneg),
                Formula::And(a, b) => Ok(self.eval(2, a)? && self.eval(2, b)?),
                Formula::Or(a, b) => Ok(self.eval(2, a)? || self.eval(2, b)?),
                Formula::Forall(x, g) => self.quantify(x, g, 2, true),
                Formula::Exists(x, g) => self.quantify(x, g, 2, false),
                Formula::Not(_) => unreachable!(),
            },
            // ¬ⁿG complements ¬ⁿ⁻¹G, so only the parity above ¬²G matters
            n => Ok(self.eval(2, f)? != (n % 2 == 1)),
        }
    }
}

/// The N⁴ valuation `val_{I,V}(f)`.
pub fn evaluate(i: &Interpretation, v: &VariableAssignment, f: &Formula) -> Result<TruthValue, EvalError> {
    let mut ev = Evaluator { interp: i, assignment: v.clone() };
    ev.eval(0, f).map(TruthValue::from)
}

fn eval_classical(
    i: &Interpretation,
    v: &mut VariableAssignment,
    f: &Formula,
) -> Result<bool, EvalError> {
    match f {
        Formula::Bottom => Ok(false),
        Formula::Atom(a) => {
            let ev = Evaluator { interp: i, assignment: v.clone() };
            ev.atom(a, AtomReading::Pos)
        }
        Formula::Not(g) => Ok(!eval_classical(i, v, g)?),
        Formula::And(a, b) => Ok(eval_classical(i, v, a)? && eval_classical(i, v, b)?),
        Formula::Or(a, b) => Ok(eval_classical(i, v, a)? || eval_classical(i, v, b)?),
        Formula::Forall(x, g) | Formula::Exists(x, g) => {
            let universal = matches!(f, Formula::Forall(..));
            for d in 0..i.domain.len() {
                let old = v.rebind(x, Element(d));
                let value = eval_classical(i, v, g);
                v.restore(x, old);
                if value? != universal {
                    return Ok(!universal);
                }
            }
            Ok(universal)
        }
    }
}

/// Two-valued classical valuation, where every negation complements.
///
/// Only defined on complete interpretations.
pub fn evaluate_classical(i: &Interpretation, v: &VariableAssignment, f: &Formula) -> Result<TruthValue, EvalError> {
    if !i.is_complete() {
        return Err(EvalError::Incomplete);
    }
    eval_classical(i, &mut v.clone(), f).map(TruthValue::from)
}

fn free_vars_vec(f: &Formula) -> Vec<String> {
    f.free_variables().into_iter().collect()
}

/// `I` is `F`-complete: `F` and `¬²F` agree under every assignment of `F`'s free variables.
pub fn is_formula_complete(i: &Interpretation, f: &Formula) -> Result<bool, EvalError> {
    let vars = free_vars_vec(f);
    let double = f.clone().negate_n(2);
    for v in VariableAssignment::all_over(&vars, i.domain_size()) {
        if evaluate(i, &v, f)? != evaluate(i, &v, &double)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `I ⊨ F`: true under some assignment of the free variables of `F`.
pub fn is_model(i: &Interpretation, f: &Formula) -> Result<bool, EvalError> {
    let vars = free_vars_vec(f);
    for v in VariableAssignment::all_over(&vars, i.domain_size()) {
        if evaluate(i, &v, f)?.is_true() {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Like [`is_model`] but for the universal closure of `f`.
pub fn is_model_closed(i: &Interpretation, f: &Formula) -> Result<bool, EvalError> {
    is_model(i, &f.clone().universal_closure())
}

pub fn is_model_of_all(i: &Interpretation, fs: &[Formula]) -> Result<bool, EvalError> {
    for f in fs {
        if !is_model(i, f)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A classical first-order structure: one relation per predicate.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ClassicalInterpretation {
    pub domain: Vec<String>,
    pub constants: BTreeMap<String, Element>,
    pub functions: BTreeMap<String, FunctionTable>,
    pub relations: BTreeMap<String, (usize, BTreeSet<Tuple>)>,
}

/// Reads a classical structure as N⁴ by giving `¬²p` the relation of `p`.
pub fn induce_n4(c: &ClassicalInterpretation) -> Interpretation {
    Interpretation {
        domain: c.domain.clone(),
        constants: c.constants.clone(),
        functions: c.functions.clone(),
        predicates: c
            .relations
            .iter()
            .map(|(name, (arity, rel))| {
                (name.clone(), PredicateValue { arity: *arity, pos: rel.clone(), dneg: rel.clone() })
            })
            .collect(),
        approximate: false,
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct PredicateJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub arity: Option<usize>,
    #[serde(default)]
    pub pos: Vec<Vec<String>>,
    #[serde(default)]
    pub dneg: Vec<Vec<String>>,
}

/// `{"domain":[…], "consts":{…}, "funcs":{f:{"(d1,d2)":"e"}}, "preds":{p:{"pos":[…], "dneg":[…]}}}`
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct InterpretationJson {
    pub domain: Vec<String>,
    #[serde(default)]
    pub consts: BTreeMap<String, String>,
    #[serde(default)]
    pub funcs: BTreeMap<String, BTreeMap<String, String>>,
    #[serde(default)]
    pub preds: BTreeMap<String, PredicateJson>,
}

#[derive(Debug, thiserror::Error)]
pub enum LoadError {
    #[error("invalid interpretation JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("unknown domain element `{0}`")]
    UnknownElement(String),
    #[error("malformed argument tuple `{0}`")]
    BadTuple(String),
    #[error("{0}")]
    Invalid(String),
}

impl Interpretation {
    pub fn from_json_str(text: &str) -> Result<Self, LoadError> {
        let raw: InterpretationJson = serde_json::from_str(text)?;
        Interpretation::from_json(&raw)
    }

    /// Builds and validates; any [`Violation`] (including `pos ⊄ dneg`) is an error.
    pub fn from_json(raw: &InterpretationJson) -> Result<Self, LoadError> {
        let mut i = Interpretation::new(raw.domain.clone());
        let elem = |i: &Interpretation, name: &str| i.element(name).ok_or_else(|| LoadError::UnknownElement(name.into()));
        for (c, d) in &raw.consts {
            let e = elem(&i, d)?;
            i.set_constant(c, e);
        }
        for (f, entries) in &raw.funcs {
            let mut table = BTreeMap::new();
            let mut arity = None;
            for (key, value) in entries {
                let inner = key
                    .trim()
                    .strip_prefix('(')
                    .and_then(|k| k.strip_suffix(')'))
                    .ok_or_else(|| LoadError::BadTuple(key.clone()))?;
                let args = inner
                    .split(',')
                    .map(|s| elem(&i, s.trim()))
                    .collect::<Result<Vec<_>, _>>()?;
                if *arity.get_or_insert(args.len()) != args.len() {
                    return Err(LoadError::BadTuple(key.clone()));
                }
                table.insert(args, elem(&i, value)?);
            }
            i.set_function(f, FunctionTable { arity: arity.unwrap_or(1), table });
        }
        for (p, pj) in &raw.preds {
            let convert = |ts: &[Vec<String>]| -> Result<BTreeSet<Tuple>, LoadError> {
                ts.iter().map(|t| t.iter().map(|d| elem(&i, d)).collect()).collect()
            };
            let pos = convert(&pj.pos)?;
            let dneg = convert(&pj.dneg)?;
            let arity = pj.arity.or_else(|| pos.iter().chain(&dneg).next().map(Vec::len)).unwrap_or(0);
            i.set_predicate(p, PredicateValue { arity, pos, dneg });
        }
        let violations = i.validate();
        if let Some(v) = violations.first() {
            return Err(LoadError::Invalid(v.to_string()));
        }
        Ok(i)
    }

    pub fn to_json(&self) -> InterpretationJson {
        let names = |t: &Tuple| self.names(t);
        InterpretationJson {
            domain: self.domain.clone(),
            consts: self.constants.iter().map(|(c, e)| (c.clone(), self.domain[e.0].clone())).collect(),
            funcs: self
                .functions
                .iter()
                .map(|(f, t)| {
                    let entries = t
                        .table
                        .iter()
                        .map(|(k, v)| (format!("({})", names(k).join(",")), self.domain[v.0].clone()))
                        .collect();
                    (f.clone(), entries)
                })
                .collect(),
            preds: self
                .predicates
                .iter()
                .map(|(p, v)| {
                    let pj = PredicateJson {
                        arity: Some(v.arity),
                        pos: v.pos.iter().map(names).collect(),
                        dneg: v.dneg.iter().map(names).collect(),
                    };
                    (p.clone(), pj)
                })
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::parse_formula;

    fn val(i: &Interpretation, text: &str) -> bool {
        evaluate(i, &VariableAssignment::new(), &parse_formula(text).unwrap()).unwrap().is_true()
    }

    /// Applies the valuation clauses literally, rebuilding formulas at each
    /// step, so it shares nothing with the depth-indexed evaluator.
    fn by_rewriting(i: &Interpretation, v: &VariableAssignment, f: &Formula) -> bool {
        use Formula::*;
        let neg = |g: &Formula| g.clone().negate();
        let quant = |x: &str, g: &Formula, all: bool| {
            let mut results = (0..i.domain_size()).map(|d| by_rewriting(i, &v.update(x, Element(d)), g));
            if all {
                results.all(|b| b)
            } else {
                results.any(|b| b)
            }
        };
        let atom = |a: &crate::syntax::Atom, dneg: bool| {
            let p = &i.predicates[&a.predicate];
            let t: Vec<_> = a.args.iter().map(|t| assign_term(i, v, t).unwrap()).collect();
            if dneg {
                p.dneg.contains(&t)
            } else {
                p.pos.contains(&t)
            }
        };
        match f {
            Bottom => false,
            Atom(a) => atom(a, false),
            And(a, b) => by_rewriting(i, v, a) && by_rewriting(i, v, b),
            Or(a, b) => by_rewriting(i, v, a) || by_rewriting(i, v, b),
            Forall(x, g) => quant(x, g, true),
            Exists(x, g) => quant(x, g, false),
            Not(g) => match &**g {
                Bottom => true,
                Atom(a) => !atom(a, false),
                And(a, b) => by_rewriting(i, v, &neg(a).or(neg(b))),
                Or(a, b) => by_rewriting(i, v, &neg(a).and(neg(b))),
                Forall(x, h) => by_rewriting(i, v, &Formula::exists(x.clone(), neg(h))),
                Exists(x, h) => by_rewriting(i, v, &Formula::forall(x.clone(), neg(h))),
                Not(h) => match &**h {
                    Bottom => false,
                    Atom(a) => atom(a, true),
                    And(a, b) => by_rewriting(i, v, &neg(&neg(a)).and(neg(&neg(b)))),
                    Or(a, b) => by_rewriting(i, v, &neg(&neg(a)).or(neg(&neg(b)))),
                    Forall(x, k) => by_rewriting(i, v, &Formula::forall(x.clone(), neg(&neg(k)))),
                    Exists(x, k) => by_rewriting(i, v, &Formula::exists(x.clone(), neg(&neg(k)))),
                    // ¬³F: true iff ¬²F is not
                    Not(k) => !by_rewriting(i, v, &neg(&neg(k))),
                },
            },
        }
    }

    fn state(p: u8) -> (bool, bool) {
        (p == 2, p >= 1)
    }

    #[test]
    fn second_valuation_row() {
        let i = Interpretation::propositional([("p", false, true)]);
        assert!(!val(&i, "p"));
        assert!(val(&i, "~p"));
        assert!(val(&i, "~~p"));
        assert!(!val(&i, "~~~p"));
        assert!(val(&i, "~p -> p"));
        assert!(val(&i, "~p | p"));
        assert!(!val(&i, "p | ~~~p"));
    }

    #[test]
    fn implication_versus_disjunction_witness() {
        let i = Interpretation::propositional([("f1", false, true), ("f2", false, false)]);
        assert!(val(&i, "~f1 -> f2"));
        assert!(!val(&i, "f1 | f2"));
    }

    #[test]
    fn bottom_and_its_negations() {
        for s in 0..3 {
            let (pos, dneg) = state(s);
            let i = Interpretation::propositional([("p", pos, dneg)]);
            assert!(!val(&i, "bot"));
            assert!(val(&i, "top"));
            assert!(!val(&i, "~~bot"));
            assert!(val(&i, "~~~bot"));
            assert!(val(&i, "~~top"));
        }
    }

    #[test]
    fn validate_examples() {
        let bad = Interpretation::propositional([("p", true, false)]);
        assert!(matches!(bad.validate().as_slice(), [Violation::PosNotInDneg { predicate, .. }] if predicate == "p"));
        assert!(Interpretation::propositional([("p", false, true)]).validate().is_empty());
        assert_eq!(Interpretation::new(vec![]).validate(), vec![Violation::EmptyDomain]);
    }

    fn unary_structure() -> Interpretation {
        let mut i = Interpretation::new(vec!["d1".into(), "d2".into()]);
        i.set_constant("c", Element(0));
        i.set_function(
            "f",
            FunctionTable { arity: 1, table: BTreeMap::from([(vec![Element(0)], Element(1)), (vec![Element(1)], Element(1))]) },
        );
        i.set_predicate(
            "p",
            PredicateValue {
                arity: 1,
                pos: BTreeSet::from([vec![Element(0)]]),
                dneg: BTreeSet::from([vec![Element(0)], vec![Element(1)]]),
            },
        );
        i
    }

    #[test]
    fn term_assignment() {
        let i = unary_structure();
        let v = VariableAssignment::new().update("X", Element(1));
        assert_eq!(assign_term(&i, &v, &Term::var("X")), Ok(Element(1)));
        assert_eq!(assign_term(&i, &v, &Term::constant("c")), Ok(Element(0)));
        assert_eq!(assign_term(&i, &v, &Term::app("f", vec![Term::constant("c")])), Ok(Element(1)));
        assert!(matches!(assign_term(&i, &v, &Term::var("Y")), Err(EvalError::UnassignedVariable(_))));
        assert!(matches!(assign_term(&i, &v, &Term::constant("k")), Err(EvalError::UnknownConstant(_))));
    }

    #[test]
    fn quantifiers_and_open_formulas() {
        let i = unary_structure();
        assert!(val(&i, "exists X p(X)"));
        assert!(!val(&i, "forall X p(X)"));
        assert!(val(&i, "forall X ~~p(X)"));
        assert!(val(&i, "~forall X p(X)"));
        assert!(val(&i, "exists X ~p(X)"));
        assert!(val(&i, "~~p(f(c))"));
        assert!(!val(&i, "p(f(c))"));
        let open = parse_formula("p(X)").unwrap();
        assert!(is_model(&i, &open).unwrap());
        assert!(!is_model_closed(&i, &open).unwrap());
        assert!(!is_formula_complete(&i, &open).unwrap());
        assert!(!i.is_complete());
    }

    #[test]
    fn classical_valuation_requires_completeness() {
        let complete = Interpretation::propositional([("p", true, true)]);
        let f = parse_formula("~~p").unwrap();
        let v = VariableAssignment::new();
        assert_eq!(evaluate_classical(&complete, &v, &f), Ok(TruthValue::True));
        assert_eq!(evaluate(&complete, &v, &f), Ok(TruthValue::True));
        let empty = Interpretation::propositional([("p", false, false)]);
        assert_eq!(evaluate_classical(&empty, &v, &parse_formula("p | ~p").unwrap()), Ok(TruthValue::True));
        let gap = Interpretation::propositional([("p", false, true)]);
        assert_eq!(evaluate_classical(&gap, &v, &f), Err(EvalError::Incomplete));
    }

    #[test]
    fn completeness_examples() {
        assert!(!Interpretation::propositional([("p", false, true)]).is_complete());
        assert!(Interpretation::propositional([("p", true, true), ("q", false, false)]).is_complete());
        let i = Interpretation::propositional([("p", false, true)]);
        assert!(!is_formula_complete(&i, &Formula::prop("p")).unwrap());
    }

    #[test]
    fn induced_interpretations_are_complete() {
        let mut c = ClassicalInterpretation { domain: vec!["d".into()], ..Default::default() };
        c.relations.insert("p".into(), (0, BTreeSet::from([vec![]])));
        c.relations.insert("q".into(), (0, BTreeSet::new()));
        let i = induce_n4(&c);
        assert!(i.is_complete());
        assert_eq!(i.predicate("p").unwrap().dneg, BTreeSet::from([vec![]]));
        assert!(i.predicate("q").unwrap().dneg.is_empty());
    }

    #[test]
    fn json_roundtrip_and_rejection() {
        let i = unary_structure();
        let text = serde_json::to_string(&i.to_json()).unwrap();
        assert_eq!(Interpretation::from_json_str(&text).unwrap(), i);
        let bad = r#"{"domain":["d"],"preds":{"p":{"pos":[[]],"dneg":[]}}}"#;
        assert!(matches!(Interpretation::from_json_str(bad), Err(LoadError::Invalid(_))));
        let unknown = r#"{"domain":["d"],"consts":{"c":"e"}}"#;
        assert!(matches!(Interpretation::from_json_str(unknown), Err(LoadError::UnknownElement(_))));
    }

    #[test]
    fn matches_literal_rewriting_on_deep_negations() {
        let formulas = [
            "~~~~p", "~~~~~p", "~~~~~~~q(c)", "~~(p & ~q(c))", "~~~(p | ~~q(c))", "~(forall X ~~p2(X))",
            "~~exists X ~~~p2(X)", "~~~~~(bot | ~p)", "~~~~forall X (p2(X) | ~~~p2(f(X)))",
        ];
        let mut i = unary_structure();
        i.set_predicate("p2", i.predicate("p").unwrap().clone());
        i.set_proposition("p", false, true);
        i.set_predicate(
            "q",
            PredicateValue { arity: 1, pos: BTreeSet::new(), dneg: BTreeSet::from([vec![Element(0)]]) },
        );
        let v = VariableAssignment::new();
        for text in formulas {
            let f = parse_formula(text).unwrap();
            assert_eq!(evaluate(&i, &v, &f).unwrap().is_true(), by_rewriting(&i, &v, &f), "{text}");
        }
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn arb_formula() -> impl Strategy<Value = Formula> {
            let leaf = prop_oneof![
                Just(Formula::Bottom),
                Just(Formula::prop("a")),
                Just(Formula::prop("b")),
                Just(Formula::atom(crate::syntax::Atom::new("r", vec![Term::var("X")]))),
            ];
            leaf.prop_recursive(6, 48, 2, |inner| {
                prop_oneof![
                    inner.clone().prop_map(Formula::negate),
                    (inner.clone(), inner.clone()).prop_map(|(a, b)| a.and(b)),
                    (inner.clone(), inner.clone()).prop_map(|(a, b)| a.or(b)),
                    inner.clone().prop_map(|g| Formula::forall("X", g)),
                    inner.prop_map(|g| Formula::exists("X", g)),
                ]
            })
        }

        fn arb_interp() -> impl Strategy<Value = Interpretation> {
            (0u8..3, 0u8..3, 0u8..3, 0u8..3).prop_map(|(a, b, r0, r1)| {
                let mut i = Interpretation::new(vec!["d0".into(), "d1".into()]);
                let (ap, ad) = state(a);
                let (bp, bd) = state(b);
                i.set_proposition("a", ap, ad);
                i.set_proposition("b", bp, bd);
                let mut r = PredicateValue { arity: 1, pos: BTreeSet::new(), dneg: BTreeSet::new() };
                for (d, s) in [(0, r0), (1, r1)] {
                    let (p, n) = state(s);
                    if p {
                        r.pos.insert(vec![Element(d)]);
                    }
                    if n {
                        r.dneg.insert(vec![Element(d)]);
                    }
                }
                i.set_predicate("r", r);
                i
            })
        }

        proptest! {
            #[test]
            fn evaluator_agrees_with_rewriting(f in arb_formula(), i in arb_interp(), x in 0usize..2) {
                let v = VariableAssignment::new().update("X", Element(x));
                prop_assert_eq!(evaluate(&i, &v, &f).unwrap().is_true(), by_rewriting(&i, &v, &f));
            }
        }
    }
}

//! The built-in property suite: every law of the valuation, the Herbrand
//! constructions and the stable-model characterization, checked
//! exhaustively on small signatures and on seeded random instances.
//!
//! Laws quantified over formulas of bounded depth are checked on one
//! representative per formula class (see [`crate::enumerate`]). The class
//! algebra itself is checked against the evaluator on every representative,
//! every pair of shallower representatives and on random pairs.

use std::collections::BTreeSet;
use std::fmt;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::enumerate::{
    class_worlds, formula_classes, negation_free_classes, propositional_base, random_formula_exact, random_program, two_atom_family,
    all_clauses, ClassRep, FormulaClass, RandomProgramBounds, CLASS_ATOMS, CLASS_WORLDS,
};
use crate::herbrand::{all_closed_sets, h2, intersect, leq, ClosedLiteralSet, GroundLiteral, GroundProgram};
use crate::models::{
    all_models, entails_classical, entails_herbrand, is_minimal_by_characterization, least_model_positive, minimal_models,
    satisfies_program, simp, simp_with, stable_models_gl, stable_models_n4, MTilde, SearchLimits, SimpReading,
};
use crate::parser::parse_program;
use crate::semantics::{evaluate, evaluate_classical, is_formula_complete, is_model, Interpretation, VariableAssignment};
use crate::syntax::{Atom, Formula, Term};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Valuation,
    Herbrand,
    Stable,
    All,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckConfig {
    pub seed: u64,
    /// Depth bound for the exhaustive formula sweeps.
    pub formula_depth: usize,
    pub random_formulas: usize,
    /// Depth of the random formulas; deeper than `formula_depth`.
    pub random_formula_depth: usize,
    pub random_programs: usize,
    pub program_bounds: RandomProgramBounds,
    pub simp_reading: SimpReading,
    pub limits: SearchLimits,
}

impl Default for CheckConfig {
    fn default() -> Self {
        CheckConfig {
            seed: 0,
            formula_depth: 4,
            random_formulas: 100_000,
            random_formula_depth: 6,
            random_programs: 10_000,
            program_bounds: RandomProgramBounds::default(),
            simp_reading: SimpReading::default(),
            limits: SearchLimits::default(),
        }
    }
}

/// Result of one property.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub name: String,
    pub cases: u64,
    pub failure: Option<String>,
}

impl Outcome {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.failure {
            None => write!(f, "PASS {} ({} cases)", self.name, self.cases),
            Some(c) => write!(f, "FAIL {} ({} cases) counterexample: {c}", self.name, self.cases),
        }
    }
}

/// Counts cases and keeps the first counterexample.
struct Tally {
    name: String,
    cases: u64,
    failure: Option<String>,
}

impl Tally {
    fn new(name: &str) -> Self {
        Tally { name: name.to_string(), cases: 0, failure: None }
    }

    fn case(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(detail());
        }
    }

    fn done(self) -> Outcome {
        Outcome { name: self.name, cases: self.cases, failure: self.failure }
    }
}

pub fn run(suite: Suite, cfg: &CheckConfig) -> Vec<Outcome> {
    match suite {
        Suite::Valuation => valuation(cfg),
        Suite::Herbrand => herbrand(cfg),
        Suite::Stable => stable(cfg),
        Suite::All => [valuation(cfg), herbrand(cfg), stable(cfg)].concat(),
    }
}

// ---------------------------------------------------------------- valuation

fn world_label(w: usize) -> String {
    let m = ClosedLiteralSet::from_states(&crate::enumerate::class_world_states()[w]);
    m.render(&propositional_base(2), false)
}

struct Worlds {
    interps: Vec<Interpretation>,
    v: VariableAssignment,
}

impl Worlds {
    fn new() -> Self {
        Worlds { interps: class_worlds(), v: VariableAssignment::new() }
    }

    fn eval(&self, w: usize, f: &Formula) -> bool {
        evaluate(&self.interps[w], &self.v, f).expect("class formulas are closed and propositional").is_true()
    }

    /// The class of `f`, computed by the evaluator.
    fn class_of(&self, f: &Formula) -> FormulaClass {
        let mut bits = [0u16; 3];
        for (k, g) in [f.clone(), f.clone().negate(), f.clone().negate_n(2)].iter().enumerate() {
            for w in 0..CLASS_WORLDS {
                if self.eval(w, g) {
                    bits[k] |= 1 << w;
                }
            }
        }
        FormulaClass(bits)
    }
}

type UnaryLaw = (&'static str, fn(&Formula) -> (Formula, Option<Formula>), Option<bool>);

/// `(name, instance, expected)`: with `Some(b)` the first formula must have
/// value `b`; with `None` the two formulas must agree.
fn unary_laws() -> Vec<UnaryLaw> {
    fn n(f: &Formula, k: usize) -> Formula {
        f.clone().negate_n(k)
    }
    vec![
        ("fourfold-reduction", |f| (n(f, 4), Some(n(f, 2))), None),
        ("excluded-middle-1", |f| (n(f, 0).or(n(f, 1)), None), Some(true)),
        ("excluded-middle-2", |f| (n(f, 1).or(n(f, 2)), None), Some(true)),
        ("excluded-middle-3", |f| (n(f, 2).or(n(f, 3)), None), Some(true)),
        ("excluded-contradiction-1", |f| (n(f, 1).and(n(f, 2)), None), Some(false)),
        ("excluded-contradiction-2", |f| (n(f, 2).and(n(f, 3)), None), Some(false)),
        ("excluded-contradiction-3", |f| (n(f, 0).and(n(f, 3)), None), Some(false)),
    ]
}

fn check_unary(worlds: &Worlds, formulas: &[Formula], tallies: &mut [Tally]) {
    for f in formulas {
        for (t, (_, law, expected)) in tallies.iter_mut().zip(unary_laws()) {
            let (lhs, rhs) = law(f);
            for w in 0..CLASS_WORLDS {
                let l = worlds.eval(w, &lhs);
                let ok = match (&rhs, expected) {
                    (Some(r), _) => l == worlds.eval(w, r),
                    (None, Some(b)) => l == b,
                    (None, None) => unreachable!(),
                };
                t.case(ok, || format!("F = {f} in {}", world_label(w)));
            }
        }
    }
}

/// Binary and ternary replacement laws on classes, all nine worlds at once.
struct ClassLaws {
    comm_and: Tally,
    comm_or: Tally,
    dist_and: Tally,
    dist_or: Tally,
    assoc_and: Tally,
    assoc_or: Tally,
    cong_or: Tally,
    cong_and: Tally,
    cong_not: Tally,
}

impl ClassLaws {
    fn new(suffix: &str) -> Self {
        let t = |n: &str| Tally::new(&format!("valuation/{n}{suffix}"));
        ClassLaws {
            comm_and: t("replacement-2-and-commutes"),
            comm_or: t("replacement-3-or-commutes"),
            dist_and: t("replacement-4-and-distributes"),
            dist_or: t("replacement-5-or-distributes"),
            assoc_and: t("replacement-6-and-associates"),
            assoc_or: t("replacement-7-or-associates"),
            cong_or: t("replacement-8-congruence-or"),
            cong_and: t("replacement-8-congruence-and"),
            cong_not: t("replacement-8-congruence-not"),
        }
    }

    fn binary(&mut self, f: (&FormulaClass, &dyn fmt::Display), g: (&FormulaClass, &dyn fmt::Display)) {
        let (a, b) = (*f.0, *g.0);
        let describe = |mask: u16| {
            let w = mask.trailing_zeros() as usize;
            format!("F1 = {}, F2 = {} in {}", f.1, g.1, world_label(w))
        };
        let d = a.and(b).0[0] ^ b.and(a).0[0];
        self.comm_and.case(d == 0, || describe(d));
        let d = a.or(b).0[0] ^ b.or(a).0[0];
        self.comm_or.case(d == 0, || describe(d));
        // G1 = f, G2 = g: wherever they agree, ¬G1 and ¬G2 must agree too
        let agree = !(a.0[0] ^ b.0[0]);
        let d = agree & (a.not().0[0] ^ b.not().0[0]) & ALL;
        self.cong_not.case(d == 0, || {
            let w = d.trailing_zeros() as usize;
            format!("G1 = {}, G2 = {} agree in {} but ¬G1, ¬G2 differ", f.1, g.1, world_label(w))
        });
    }

    fn ternary(&mut self, f: (&FormulaClass, &dyn fmt::Display), g: (&FormulaClass, &dyn fmt::Display), h: (&FormulaClass, &dyn fmt::Display)) {
        let (a, b, c) = (*f.0, *g.0, *h.0);
        let describe = |mask: u16| {
            let w = mask.trailing_zeros() as usize;
            format!("F1 = {}, F2 = {}, F3 = {} in {}", f.1, g.1, h.1, world_label(w))
        };
        let d = a.and(b.or(c)).0[0] ^ a.and(b).or(a.and(c)).0[0];
        self.dist_and.case(d == 0, || describe(d));
        let d = a.or(b.and(c)).0[0] ^ a.or(b).and(a.or(c)).0[0];
        self.dist_or.case(d == 0, || describe(d));
        let d = a.and(b.and(c)).0[0] ^ a.and(b).and(c).0[0];
        self.assoc_and.case(d == 0, || describe(d));
        let d = a.or(b.or(c)).0[0] ^ a.or(b).or(c).0[0];
        self.assoc_or.case(d == 0, || describe(d));
        // F = f, G1 = g, G2 = h
        let agree = !(b.0[0] ^ c.0[0]) & ALL;
        let d = agree & (a.or(b).0[0] ^ a.or(c).0[0]);
        self.cong_or.case(d == 0, || describe(d));
        let d = agree & (a.and(b).0[0] ^ a.and(c).0[0]);
        self.cong_and.case(d == 0, || describe(d));
    }

    fn done(self) -> Vec<Outcome> {
        [
            self.comm_and,
            self.comm_or,
            self.dist_and,
            self.dist_or,
            self.assoc_and,
            self.assoc_or,
            self.cong_or,
            self.cong_and,
            self.cong_not,
        ]
        .into_iter()
        .map(Tally::done)
        .collect()
    }
}

const ALL: u16 = (1 << CLASS_WORLDS) - 1;

/// First-order worlds for the quantifier laws: domain `{d1, d2}`, unary `q`
/// and proposition `p`, every N⁴ combination.
fn quantifier_worlds() -> Vec<Interpretation> {
    let mut out = Vec::new();
    for q in all_closed_sets(2) {
        for p in all_closed_sets(1) {
            let mut i = Interpretation::new(vec!["d1".into(), "d2".into()]);
            let tuples = |s: &BTreeSet<usize>| s.iter().map(|&e| vec![crate::semantics::Element(e)]).collect();
            i.set_predicate(
                "q",
                crate::semantics::PredicateValue { arity: 1, pos: tuples(q.plain()), dneg: tuples(q.dneg()) },
            );
            i.set_proposition("p", p.plain().contains(&0), p.dneg().contains(&0));
            i.set_constant("c0", crate::semantics::Element(0));
            out.push(i);
        }
    }
    out
}

/// Replaces `a` by `q(X)` and `b` by `p`.
fn lift(f: &Formula) -> Formula {
    match f {
        Formula::Atom(a) if a.predicate == CLASS_ATOMS[0] => Formula::atom(Atom::new("q", vec![Term::var("X")])),
        Formula::Atom(a) if a.predicate == CLASS_ATOMS[1] => Formula::prop("p"),
        Formula::Bottom | Formula::Atom(_) => f.clone(),
        Formula::Not(g) => lift(g).negate(),
        Formula::And(x, y) => lift(x).and(lift(y)),
        Formula::Or(x, y) => lift(x).or(lift(y)),
        Formula::Forall(x, g) => Formula::forall(x.clone(), lift(g)),
        Formula::Exists(x, g) => Formula::exists(x.clone(), lift(g)),
    }
}

fn check_quantifier_laws(formulas: &[Formula], all_t: &mut Tally, ex_t: &mut Tally) {
    let worlds = quantifier_worlds();
    let v = VariableAssignment::new();
    for f in formulas {
        let g = lift(f);
        let laws = [
            (Formula::forall("X", g.clone()).negate(), Formula::exists("X", g.clone().negate())),
            (Formula::exists("X", g.clone()).negate(), Formula::forall("X", g.clone().negate())),
        ];
        for (i, world) in worlds.iter().enumerate() {
            for (k, (l, r)) in laws.iter().enumerate() {
                let ok = evaluate(world, &v, l).unwrap() == evaluate(world, &v, r).unwrap();
                let t = if k == 0 { &mut *all_t } else { &mut *ex_t };
                t.case(ok, || format!("F = {g} in quantifier world #{i}"));
            }
        }
    }
}

fn valuation(cfg: &CheckConfig) -> Vec<Outcome> {
    let worlds = Worlds::new();
    let reps = formula_classes(cfg.formula_depth);
    let formulas: Vec<Formula> = reps.iter().map(|r| r.formula.clone()).collect();
    let mut out = Vec::new();

    // the evaluator agrees with the class algebra on representatives and on
    // every combination of two of them
    let mut consistent = Tally::new("valuation/class-algebra-matches-evaluator");
    for r in &reps {
        let c = worlds.class_of(&r.formula);
        consistent.case(c == r.class, || format!("F = {}", r.formula));
    }
    let shallow: Vec<&ClassRep> = reps.iter().filter(|r| r.depth < cfg.formula_depth).collect();
    for r in &shallow {
        for s in &shallow {
            for (f, c) in [
                (r.formula.clone().and(s.formula.clone()), r.class.and(s.class)),
                (r.formula.clone().or(s.formula.clone()), r.class.or(s.class)),
            ] {
                consistent.case(worlds.class_of(&f) == c, || format!("F = {f}"));
            }
        }
    }
    out.push(consistent.done());

    let mut bottom = Tally::new("valuation/replacement-1-bottom-top");
    for w in 0..CLASS_WORLDS {
        bottom.case(!worlds.eval(w, &Formula::Bottom) && worlds.eval(w, &Formula::top()), || world_label(w));
    }
    out.push(bottom.done());

    let mut unary: Vec<Tally> = unary_laws().iter().map(|(n, _, _)| Tally::new(&format!("valuation/{n}"))).collect();
    check_unary(&worlds, &formulas, &mut unary);
    out.extend(unary.into_iter().map(Tally::done));

    let mut falsifier = Tally::new("valuation/f-or-not3-f-falsifiable");
    let witness = formulas.iter().find_map(|f| {
        let g = f.clone().or(f.clone().negate_n(3));
        (0..CLASS_WORLDS).find(|&w| !worlds.eval(w, &g)).map(|w| format!("F = {f} in {}", world_label(w)))
    });
    falsifier.case(witness.is_some(), || "no formula falsifies F ∨ ¬³F".to_string());
    out.push(falsifier.done());
    if let Some(w) = witness {
        out.last_mut().unwrap().name.push_str(&format!(" [witness: {w}]"));
    }

    // prefix negation form with an even number of leading negations
    let mut pnf = Vec::new();
    for r in negation_free_classes(cfg.formula_depth) {
        for k in [0, 2, 4] {
            if r.depth + k <= cfg.formula_depth {
                pnf.push(r.formula.clone().negate_n(k));
            }
        }
    }
    let mut disagree = Tally::new("valuation/prefix-negation-disagreement");
    let mut dneg = Tally::new("valuation/prefix-negation-implies-dneg");
    for f in &pnf {
        debug_assert!(f.is_prefix_negation_form());
        for w in 0..CLASS_WORLDS {
            let v = worlds.eval(w, f);
            disagree.case(v != worlds.eval(w, &f.clone().negate()), || format!("F = {f} in {}", world_label(w)));
            dneg.case(!v || worlds.eval(w, &f.clone().negate_n(2)), || format!("F = {f} in {}", world_label(w)));
        }
    }
    out.push(disagree.done());
    out.push(dneg.done());

    let mut laws = ClassLaws::new("");
    for r in &reps {
        for s in &reps {
            laws.binary((&r.class, &r.formula), (&s.class, &s.formula));
            for t in &reps {
                laws.ternary((&r.class, &r.formula), (&s.class, &s.formula), (&t.class, &t.formula));
            }
        }
    }
    out.extend(laws.done());

    let mut q_all = Tally::new("valuation/replacement-9-not-forall");
    let mut q_ex = Tally::new("valuation/replacement-10-not-exists");
    check_quantifier_laws(&formulas, &mut q_all, &mut q_ex);

    // completeness: the interpretation, its atoms, and the classical reading
    let mut complete = Tally::new("valuation/completeness-equivalence");
    let mut preserve = Tally::new("valuation/classical-model-preservation");
    for (w, i) in worlds.interps.iter().enumerate() {
        let atoms = CLASS_ATOMS.iter().all(|a| is_formula_complete(i, &Formula::prop(a)).unwrap());
        let classical = Interpretation::propositional(CLASS_ATOMS.iter().map(|a| {
            let pos = !i.predicate(a).unwrap().pos.is_empty();
            (*a, pos, pos)
        }));
        let agrees = formulas.iter().all(|f| {
            evaluate(i, &worlds.v, f).unwrap() == evaluate_classical(&classical, &worlds.v, f).unwrap()
        });
        complete.case(i.is_complete() == atoms && atoms == agrees, || world_label(w));
        if i.is_complete() {
            for f in &formulas {
                let ok = !evaluate_classical(i, &worlds.v, f).unwrap().is_true() || is_model(i, f).unwrap();
                preserve.case(ok, || format!("F = {f} in {}", world_label(w)));
            }
        }
    }

    // seeded random formulas beyond the exhaustive depth
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let atoms = CLASS_ATOMS;
    let random: Vec<Formula> =
        (0..cfg.random_formulas).map(|_| random_formula_exact(&mut rng, &atoms, cfg.random_formula_depth)).collect();
    let mut unary: Vec<Tally> =
        unary_laws().iter().map(|(n, _, _)| Tally::new(&format!("valuation/{n} [random]"))).collect();
    check_unary(&worlds, &random, &mut unary);
    let mut rconsistent = Tally::new("valuation/class-algebra-matches-evaluator [random]");
    let classes: Vec<FormulaClass> = random.iter().map(|f| worlds.class_of(f)).collect();
    let mut rlaws = ClassLaws::new(" [random]");
    for k in 0..random.len() {
        let (f, g, h) = (&random[k], &random[(k + 1) % random.len()], &random[(k + 2) % random.len()]);
        let (a, b, c) = (&classes[k], &classes[(k + 1) % random.len()], &classes[(k + 2) % random.len()]);
        let conj = f.clone().and(g.clone());
        rconsistent.case(worlds.class_of(&conj) == a.and(*b), || format!("F = {conj}"));
        rconsistent.case(worlds.class_of(&f.clone().negate()) == a.not(), || format!("F = ¬{f}"));
        rlaws.binary((a, f), (b, g));
        rlaws.ternary((a, f), (b, g), (c, h));
    }
    let quantified: Vec<Formula> = random.iter().take(cfg.random_formulas / 20).cloned().collect();
    check_quantifier_laws(&quantified, &mut q_all, &mut q_ex);

    out.push(q_all.done());
    out.push(q_ex.done());
    out.push(complete.done());
    out.push(preserve.done());
    out.push(rconsistent.done());
    out.extend(unary.into_iter().map(Tally::done));
    out.extend(rlaws.done());
    out
}

// ---------------------------------------------------------------- herbrand

fn herbrand(_cfg: &CheckConfig) -> Vec<Outcome> {
    let base = propositional_base(3);
    let sets: Vec<ClosedLiteralSet> = all_closed_sets(3).collect();
    let interps: Vec<Interpretation> = sets.iter().map(|m| h2(&base, m).unwrap()).collect();
    let label = |m: &ClosedLiteralSet| m.render(&base, false);

    let mut bijection = Tally::new("herbrand/h2-satisfies-exactly-its-literals");
    for (m, i) in sets.iter().zip(&interps) {
        for a in 0..base.len() {
            for n in [0u8, 2] {
                let f = Formula::atom(base.atom(a).clone()).negate_n(n as usize);
                let ok = is_model(i, &f).unwrap() == m.satisfies(GroundLiteral::new(a, n));
                bijection.case(ok, || format!("M = {}, L = {f}", label(m)));
            }
        }
    }
    let mut injective = Tally::new("herbrand/h2-injective");
    let mut complete = Tally::new("herbrand/h2-complete-iff-plain-equals-dneg");
    let mut order = Tally::new("herbrand/order-is-inclusion");
    let mut closed = Tally::new("herbrand/closed-under-meet-and-join");
    let mut lattice = Tally::new("herbrand/meet-and-join-are-glb-and-lub");
    let mut inter2 = Tally::new("herbrand/intersection-of-h2-pairs");
    let mut inter3 = Tally::new("herbrand/intersection-of-h2-triples");
    for (x, (m, i)) in sets.iter().zip(&interps).enumerate() {
        complete.case(i.is_complete() == m.is_complete(), || label(m));
        for (y, (n, j)) in sets.iter().zip(&interps).enumerate() {
            injective.case((x == y) == (i == j), || format!("{} vs {}", label(m), label(n)));
            order.case(leq(i, j) == m.is_subset(n), || format!("{} ⊆ {}", label(m), label(n)));
            let (meet, join) = (m.intersection(n), m.union(n));
            let ok = [&meet, &join].iter().all(|s| s.plain().is_subset(s.dneg()));
            closed.case(ok, || format!("{} and {}", label(m), label(n)));
            let (hm, hj) = (h2(&base, &meet).unwrap(), h2(&base, &join).unwrap());
            inter2.case(intersect(&[i.clone(), j.clone()]).as_ref() == Ok(&hm), || format!("{} ∩ {}", label(m), label(n)));
            let bounds = leq(&hm, i) && leq(&hm, j) && leq(i, &hj) && leq(j, &hj);
            let mut ok = bounds;
            for l in &interps {
                if leq(l, i) && leq(l, j) && !leq(l, &hm) || leq(i, l) && leq(j, l) && !leq(&hj, l) {
                    ok = false;
                    break;
                }
            }
            lattice.case(ok, || format!("{} and {}", label(m), label(n)));
            for (o, k) in sets.iter().zip(&interps) {
                let expected = h2(&base, &meet.intersection(o)).unwrap();
                let got = intersect(&[i.clone(), j.clone(), k.clone()]);
                inter3.case(got.as_ref() == Ok(&expected), || format!("{} ∩ {} ∩ {}", label(m), label(n), label(o)));
            }
        }
    }
    [bijection, injective, complete, order, closed, lattice, inter2, inter3].into_iter().map(Tally::done).collect()
}

// ---------------------------------------------------------------- stable

/// The bundled example programs and their stable models.
pub const BUNDLED_PROGRAMS: [(&str, &str, &str); 4] = [
    ("p1", include_str!("../examples/p1.lp"), "∅"),
    ("p2", include_str!("../examples/p2.lp"), "{a}, {b}"),
    ("p3", include_str!("../examples/p3.lp"), "{a}"),
    ("p4", include_str!("../examples/p4.lp"), "∅"),
];

fn program_label(g: &GroundProgram) -> String {
    let text = g.to_string().replace('\n', " ");
    if text.is_empty() {
        "(empty program)".to_string()
    } else {
        text
    }
}

fn stable(cfg: &CheckConfig) -> Vec<Outcome> {
    let lim = &cfg.limits;
    let family = two_atom_family();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let random: Vec<GroundProgram> = (0..cfg.random_programs).map(|_| random_program(&mut rng, &cfg.program_bounds)).collect();
    let mut out = Vec::new();

    let mut bundled = Tally::new("stable/theorem-bundled-programs");
    for (name, text, expected) in BUNDLED_PROGRAMS {
        let g = crate::herbrand::ground(&parse_program(text).unwrap(), None).unwrap();
        let gl = stable_models_gl(&g, lim).unwrap();
        let n4 = stable_models_n4(&g, lim).unwrap();
        let got = crate::models::render_atom_sets(g.base(), &gl);
        bundled.case(gl == n4 && got == expected, || format!("{name}: gl = {got}, expected {expected}"));
    }
    out.push(bundled.done());

    for (name, programs) in [("family", &family), ("random", &random)] {
        let mut t = Tally::new(&format!("stable/theorem-{name}"));
        let mut nonempty = Tally::new(&format!("stable/minimal-models-exist-{name}"));
        for g in programs {
            let gl = stable_models_gl(g, lim).unwrap();
            let n4 = stable_models_n4(g, lim).unwrap();
            t.case(gl == n4, || {
                format!(
                    "{}: gl = {}, n4 = {}",
                    program_label(g),
                    crate::models::render_atom_sets(g.base(), &gl),
                    crate::models::render_atom_sets(g.base(), &n4)
                )
            });
            let full = ClosedLiteralSet::full(g.base().len());
            let ok = satisfies_program(&full, g).unwrap() && !minimal_models(g, lim).unwrap().is_empty();
            nonempty.case(ok, || program_label(g));
        }
        out.push(t.done());
        out.push(nonempty.done());
    }

    let mut charac = Tally::new("stable/minimality-characterization");
    let small = random.iter().filter(|g| g.base().len() <= 3).take(500);
    for g in family.iter().chain(small) {
        let all = all_models(g, lim).unwrap();
        for m in all_closed_sets(g.base().len()) {
            let expected = all.members.iter().any(|e| e.set == m && e.minimal);
            let got = is_minimal_by_characterization(g, &m, lim).unwrap();
            charac.case(got == expected, || format!("{} with M = {}", program_label(g), m.render(g.base(), false)));
        }
    }
    out.push(charac.done());

    let mut positive = Tally::new("stable/positive-unique-minimal-equals-least");
    let base3 = propositional_base(3);
    let clauses: Vec<_> = all_clauses(3, 3, true).into_iter().filter(|c| !c.pos.contains(&c.head)).collect();
    for mask in 0u32..1 << clauses.len() {
        let g = GroundProgram::new(base3.clone(), (0..clauses.len()).filter(|i| mask >> i & 1 == 1).map(|i| clauses[i].clone()));
        let minimal = minimal_models(&g, lim).unwrap();
        let least = least_model_positive(&g).unwrap();
        let ok = minimal.len() == 1 && minimal.members[0].complete && minimal.members[0].set == least;
        positive.case(ok, || program_label(&g));
    }
    out.push(positive.done());

    let mut simp_eq = Tally::new(&format!("stable/simp-equivalence ({:?} reading)", cfg.simp_reading));
    let mut simp_sat = Tally::new(&format!("stable/simp-equivalence-satisfiable ({:?} reading)", cfg.simp_reading));
    for g in &family {
        for m in all_closed_sets(g.base().len()) {
            let tilde = MTilde::of(g.base(), &m);
            let least = least_model_positive(&simp_with(g, &m, cfg.simp_reading)).unwrap();
            let satisfiable = all_models(g, lim).unwrap().members.iter().any(|e| tilde.literals.iter().all(|&l| e.set.satisfies(l)));
            for a in 0..g.base().len() {
                let n4 = entails_herbrand(g, &tilde.literals, GroundLiteral::plain(a), lim).unwrap();
                let classical = least.plain().contains(&a);
                let detail = || format!("{} with M = {}, A = {}", program_label(g), m.render(g.base(), false), g.base().atom(a));
                simp_eq.case(n4 == classical, detail);
                if satisfiable {
                    simp_sat.case(n4 == classical, detail);
                }
            }
        }
    }
    out.push(simp_eq.done());
    out.push(simp_sat.done());

    let mut counter = Tally::new("stable/simp-fails-classically");
    let p1 = crate::herbrand::ground(&parse_program(BUNDLED_PROGRAMS[0].1).unwrap(), None).unwrap();
    let full = ClosedLiteralSet::full(1);
    let tilde = MTilde::of(p1.base(), &full);
    let classical = entails_classical(&p1, &tilde.literals, GroundLiteral::plain(0), lim).unwrap();
    let reduct = simp(&p1, &full);
    counter.case(classical && reduct.clauses().is_empty() && least_model_positive(&reduct).unwrap().is_empty(), || {
        "P1 with M = {p, ¬²p}".to_string()
    });
    out.push(counter.done());
    out
}

//! Finite families of formulas and programs for exhaustive and seeded random
//! checking.
//!
//! Formulas over two propositional atoms are grouped by their *class*: the
//! truth values of `F`, `¬F` and `¬²F` in each of the nine interpretations of
//! the atoms. Every `¬ⁿF` and every connective applied to `F` is determined
//! by the class, so one representative per class stands for all formulas of
//! that class.

use std::collections::BTreeMap;

use rand::Rng;

use crate::herbrand::{AtomState, ClosedLiteralSet, GroundClause, GroundProgram, HerbrandBase2};
use crate::semantics::Interpretation;
use crate::syntax::Formula;

/// The two atoms of the class signature.
pub const CLASS_ATOMS: [&str; 2] = ["a", "b"];

/// Number of interpretations of [`CLASS_ATOMS`].
pub const CLASS_WORLDS: usize = 9;

const ALL: u16 = (1 << CLASS_WORLDS) - 1;

/// Values of `F`, `¬F`, `¬²F` as bit masks over the nine worlds.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FormulaClass(pub [u16; 3]);

impl FormulaClass {
    pub fn bottom() -> Self {
        FormulaClass([0, ALL, 0])
    }

    /// Class of atom `i` of [`CLASS_ATOMS`].
    pub fn atom(i: usize) -> Self {
        let mut plain = 0;
        let mut dneg = 0;
        for (w, states) in class_world_states().iter().enumerate() {
            if states[i] == AtomState::Both {
                plain |= 1 << w;
            }
            if states[i] != AtomState::Absent {
                dneg |= 1 << w;
            }
        }
        FormulaClass([plain, !plain & ALL, dneg])
    }

    pub fn not(self) -> Self {
        let [_, n1, n2] = self.0;
        FormulaClass([n1, n2, !n2 & ALL])
    }

    pub fn and(self, o: Self) -> Self {
        let (a, b) = (self.0, o.0);
        FormulaClass([a[0] & b[0], a[1] | b[1], a[2] & b[2]])
    }

    pub fn or(self, o: Self) -> Self {
        let (a, b) = (self.0, o.0);
        FormulaClass([a[0] | b[0], a[1] & b[1], a[2] | b[2]])
    }

    /// Truth value of `F` in world `w`.
    pub fn value(self, w: usize) -> bool {
        self.0[0] >> w & 1 == 1
    }
}

/// Per-atom states of world `w`, for `w` in `0..9`.
pub fn class_world_states() -> [[AtomState; 2]; CLASS_WORLDS] {
    const S: [AtomState; 3] = [AtomState::Absent, AtomState::DnegOnly, AtomState::Both];
    let mut out = [[AtomState::Absent; 2]; CLASS_WORLDS];
    for (w, slot) in out.iter_mut().enumerate() {
        *slot = [S[w / 3], S[w % 3]];
    }
    out
}

/// The nine interpretations of [`CLASS_ATOMS`], indexed like class bits.
pub fn class_worlds() -> Vec<Interpretation> {
    class_world_states()
        .iter()
        .map(|s| {
            let m = ClosedLiteralSet::from_states(s);
            Interpretation::propositional(
                CLASS_ATOMS.iter().enumerate().map(|(i, n)| (*n, m.plain().contains(&i), m.dneg().contains(&i))),
            )
        })
        .collect()
}

/// A class with its shallowest representative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassRep {
    pub class: FormulaClass,
    pub formula: Formula,
    pub depth: usize,
}

/// One representative for every class of formulas of depth at most
/// `max_depth` built from `a`, `b`, `⊥`, `¬`, `∧`, `∨`, in discovery order.
pub fn formula_classes(max_depth: usize) -> Vec<ClassRep> {
    classes(max_depth, true)
}

/// Like [`formula_classes`] but without `¬`: the negation-free formulas.
pub fn negation_free_classes(max_depth: usize) -> Vec<ClassRep> {
    classes(max_depth, false)
}

fn classes(max_depth: usize, with_not: bool) -> Vec<ClassRep> {
    let mut reps = vec![
        ClassRep { class: FormulaClass::atom(0), formula: Formula::prop(CLASS_ATOMS[0]), depth: 0 },
        ClassRep { class: FormulaClass::atom(1), formula: Formula::prop(CLASS_ATOMS[1]), depth: 0 },
        ClassRep { class: FormulaClass::bottom(), formula: Formula::Bottom, depth: 0 },
    ];
    let mut seen: BTreeMap<FormulaClass, usize> = reps.iter().enumerate().map(|(i, r)| (r.class, i)).collect();
    for d in 1..=max_depth {
        let previous = reps.len();
        let mut push = |class: FormulaClass, formula: Formula, reps: &mut Vec<ClassRep>| {
            if let std::collections::btree_map::Entry::Vacant(e) = seen.entry(class) {
                e.insert(reps.len());
                reps.push(ClassRep { class, formula, depth: d });
            }
        };
        for i in 0..previous {
            if reps[i].depth + 1 != d {
                continue;
            }
            let r = reps[i].clone();
            if with_not {
                push(r.class.not(), r.formula.clone().negate(), &mut reps);
            }
            for j in 0..previous {
                let s = reps[j].clone();
                push(r.class.and(s.class), r.formula.clone().and(s.formula.clone()), &mut reps);
                push(r.class.or(s.class), r.formula.clone().or(s.formula.clone()), &mut reps);
                if s.depth + 1 != d {
                    push(s.class.and(r.class), s.formula.clone().and(r.formula.clone()), &mut reps);
                    push(s.class.or(r.class), s.formula.clone().or(r.formula.clone()), &mut reps);
                }
            }
        }
    }
    reps
}

/// A random propositional formula over `atoms` with nesting depth at most `depth`.
pub fn random_formula<R: Rng>(rng: &mut R, atoms: &[&str], depth: usize) -> Formula {
    if depth == 0 || rng.gen_ratio(1, 6) {
        return match rng.gen_range(0..atoms.len() + 1) {
            i if i < atoms.len() => Formula::prop(atoms[i]),
            _ => Formula::Bottom,
        };
    }
    match rng.gen_range(0..3) {
        0 => random_formula(rng, atoms, depth - 1).negate(),
        1 => random_formula(rng, atoms, depth - 1).and(random_formula(rng, atoms, depth - 1)),
        _ => random_formula(rng, atoms, depth - 1).or(random_formula(rng, atoms, depth - 1)),
    }
}

/// A random formula whose depth is exactly `depth`: one branch always
/// reaches the bound, side branches are shallow.
pub fn random_formula_exact<R: Rng>(rng: &mut R, atoms: &[&str], depth: usize) -> Formula {
    if depth == 0 {
        return random_formula(rng, atoms, 0);
    }
    let deep = random_formula_exact(rng, atoms, depth - 1);
    let op = rng.gen_range(0..5);
    if op < 2 {
        return deep.negate();
    }
    let side = random_formula(rng, atoms, 2.min(depth - 1));
    let (l, r) = if rng.gen_bool(0.5) { (deep, side) } else { (side, deep) };
    if op == 2 {
        l.and(r)
    } else {
        l.or(r)
    }
}

/// Atom names `a`, `b`, … for generated propositional programs.
pub fn atom_names(n: usize) -> Vec<String> {
    (0..n)
        .map(|i| match i {
            0..=25 => ((b'a' + i as u8) as char).to_string(),
            _ => format!("x{i}"),
        })
        .collect()
}

pub fn propositional_base(n: usize) -> HerbrandBase2 {
    let names = atom_names(n);
    HerbrandBase2::propositional(&names.iter().map(String::as_str).collect::<Vec<_>>())
}

/// Every clause over `n` atoms whose body has at most `max_body` distinct
/// literals, heads outermost, bodies by size.
pub fn all_clauses(n: usize, max_body: usize, positive_only: bool) -> Vec<GroundClause> {
    let lits: Vec<(usize, bool)> = (0..n)
        .map(|a| (a, false))
        .chain((0..n).filter(|_| !positive_only).map(|a| (a, true)))
        .collect();
    let mut bodies: Vec<Vec<(usize, bool)>> = Vec::new();
    for mask in 0u32..(1 << lits.len()) {
        if mask.count_ones() as usize <= max_body {
            bodies.push((0..lits.len()).filter(|i| mask >> i & 1 == 1).map(|i| lits[i]).collect());
        }
    }
    bodies.sort_by_key(Vec::len);
    let mut out = Vec::new();
    for head in 0..n {
        for body in &bodies {
            let pos = body.iter().filter(|l| !l.1).map(|l| l.0).collect();
            let neg = body.iter().filter(|l| l.1).map(|l| l.0).collect();
            out.push(GroundClause::new(head, pos, neg));
        }
    }
    out
}

/// All programs over two atoms with at most three clauses, each with at most
/// two body literals.
pub fn two_atom_family() -> Vec<GroundProgram> {
    let base = propositional_base(2);
    let clauses = all_clauses(2, 2, false);
    let mut out = vec![GroundProgram::new(base.clone(), [])];
    let k = clauses.len();
    for i in 0..k {
        out.push(GroundProgram::new(base.clone(), [clauses[i].clone()]));
        for j in i + 1..k {
            out.push(GroundProgram::new(base.clone(), [clauses[i].clone(), clauses[j].clone()]));
            for l in j + 1..k {
                out.push(GroundProgram::new(base.clone(), [clauses[i].clone(), clauses[j].clone(), clauses[l].clone()]));
            }
        }
    }
    out
}

/// Shape bounds for random programs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RandomProgramBounds {
    pub max_atoms: usize,
    pub max_clauses: usize,
    pub max_body: usize,
}

impl Default for RandomProgramBounds {
    fn default() -> Self {
        RandomProgramBounds { max_atoms: 6, max_clauses: 8, max_body: 3 }
    }
}

pub fn random_program<R: Rng>(rng: &mut R, bounds: &RandomProgramBounds) -> GroundProgram {
    let n = rng.gen_range(1..=bounds.max_atoms);
    let clauses: Vec<GroundClause> = (0..rng.gen_range(0..=bounds.max_clauses))
        .map(|_| {
            let head = rng.gen_range(0..n);
            let (mut pos, mut neg) = (Vec::new(), Vec::new());
            for _ in 0..rng.gen_range(0..=bounds.max_body) {
                let a = rng.gen_range(0..n);
                if rng.gen_bool(0.5) {
                    neg.push(a);
                } else {
                    pos.push(a);
                }
            }
            GroundClause::new(head, pos, neg)
        })
        .collect();
    GroundProgram::new(propositional_base(n), clauses)
}

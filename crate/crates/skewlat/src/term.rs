//! Terms over the {∧, ∨} signature, identities, quasi-identities, and the
//! exhaustive quantified-formula engine every property check builds on.
//!
//! A check scans all `order^vars` assignments in lexicographic order (first
//! variable most significant) and reports the first falsifying one, so
//! reports are reproducible; the parallel path returns the same witness as
//! the sequential one.

use crate::algebra::{ElementId, FiniteSkewLattice};
use crate::exec::{self, ExecMode};
use std::fmt;
use thiserror::Error;

/// Abstract syntax for a {∧,∨}-term; variable slots are contiguous from 0.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Term {
    Var(usize),
    Meet(Box<Term>, Box<Term>),
    Join(Box<Term>, Box<Term>),
}

pub fn var(slot: usize) -> Term {
    Term::Var(slot)
}

pub fn meet(l: Term, r: Term) -> Term {
    Term::Meet(Box::new(l), Box::new(r))
}

pub fn join(l: Term, r: Term) -> Term {
    Term::Join(Box::new(l), Box::new(r))
}

/// Left-associated chain t1 ∧ t2 ∧ … ∧ tk.
pub fn meet_chain<I: IntoIterator<Item = Term>>(terms: I) -> Term {
    let mut it = terms.into_iter();
    let first = it.next().expect("nonempty chain");
    it.fold(first, meet)
}

/// Left-associated chain t1 ∨ t2 ∨ … ∨ tk.
pub fn join_chain<I: IntoIterator<Item = Term>>(terms: I) -> Term {
    let mut it = terms.into_iter();
    let first = it.next().expect("nonempty chain");
    it.fold(first, join)
}

impl Term {
    /// Number of variable slots used (max slot + 1).
    pub fn var_count(&self) -> usize {
        match self {
            Term::Var(v) => v + 1,
            Term::Meet(l, r) | Term::Join(l, r) => l.var_count().max(r.var_count()),
        }
    }

    pub fn eval(
        &self,
        alg: &FiniteSkewLattice,
        assignment: &[ElementId],
    ) -> Result<ElementId, EvalError> {
        match self {
            Term::Var(v) => assignment
                .get(*v)
                .copied()
                .ok_or(EvalError::UnboundSlot { slot: *v }),
            Term::Meet(l, r) => Ok(alg.meet(l.eval(alg, assignment)?, r.eval(alg, assignment)?)),
            Term::Join(l, r) => Ok(alg.join(l.eval(alg, assignment)?, r.eval(alg, assignment)?)),
        }
    }

    fn compile_into(&self, ops: &mut Vec<OpCode>) {
        match self {
            Term::Var(v) => ops.push(OpCode::Push(*v as u32)),
            Term::Meet(l, r) => {
                l.compile_into(ops);
                r.compile_into(ops);
                ops.push(OpCode::Meet);
            }
            Term::Join(l, r) => {
                l.compile_into(ops);
                r.compile_into(ops);
                ops.push(OpCode::Join);
            }
        }
    }

    /// Flattens to a postfix program for the hot scan loops.
    pub fn compile(&self) -> CompiledTerm {
        let mut ops = Vec::new();
        self.compile_into(&mut ops);
        let mut depth = 0usize;
        let mut max_depth = 0usize;
        for op in &ops {
            match op {
                OpCode::Push(_) => depth += 1,
                _ => depth -= 1,
            }
            max_depth = max_depth.max(depth);
        }
        assert!(max_depth <= STACK_CAP, "term too deep");
        CompiledTerm {
            ops,
            vars: self.var_count(),
        }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // Associative chains print flat; the opposite operation gets parens.
        fn render(t: &Term, out: &mut String) {
            match t {
                Term::Var(v) => out.push_str(var_name(*v).as_ref()),
                Term::Meet(..) => chain(t, true, out),
                Term::Join(..) => chain(t, false, out),
            }
        }
        fn chain(t: &Term, is_meet: bool, out: &mut String) {
            match (t, is_meet) {
                (Term::Meet(l, r), true) | (Term::Join(l, r), false) => {
                    chain(l, is_meet, out);
                    out.push(if is_meet { '∧' } else { '∨' });
                    chain(r, is_meet, out);
                }
                (Term::Var(v), _) => out.push_str(var_name(*v).as_ref()),
                _ => {
                    out.push('(');
                    render(t, out);
                    out.push(')');
                }
            }
        }
        let mut s = String::new();
        render(self, &mut s);
        f.write_str(&s)
    }
}

pub fn var_name(slot: usize) -> std::borrow::Cow<'static, str> {
    const NAMES: [&str; 6] = ["x", "y", "z", "w", "u", "v"];
    match NAMES.get(slot) {
        Some(n) => (*n).into(),
        None => format!("v{slot}").into(),
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EvalError {
    #[error("variable slot {slot} is not bound by the assignment")]
    UnboundSlot { slot: usize },
}

const STACK_CAP: usize = 64;

#[derive(Clone, Copy)]
enum OpCode {
    Push(u32),
    Meet,
    Join,
}

/// Postfix form of a [`Term`]; evaluation uses a fixed-size stack.
pub struct CompiledTerm {
    ops: Vec<OpCode>,
    vars: usize,
}

impl CompiledTerm {
    pub fn vars(&self) -> usize {
        self.vars
    }

    #[inline]
    pub fn eval(&self, alg: &FiniteSkewLattice, assignment: &[ElementId]) -> ElementId {
        let mut stack = [0usize; STACK_CAP];
        let mut top = 0usize;
        for op in &self.ops {
            match op {
                OpCode::Push(v) => {
                    stack[top] = assignment[*v as usize];
                    top += 1;
                }
                OpCode::Meet => {
                    let r = stack[top - 1];
                    let l = stack[top - 2];
                    stack[top - 2] = alg.meet(l, r);
                    top -= 1;
                }
                OpCode::Join => {
                    let r = stack[top - 1];
                    let l = stack[top - 2];
                    stack[top - 2] = alg.join(l, r);
                    top -= 1;
                }
            }
        }
        debug_assert_eq!(top, 1);
        stack[0]
    }
}

/// An identity lhs = rhs, named by its own formula.
#[derive(Clone, Debug)]
pub struct Identity {
    pub lhs: Term,
    pub rhs: Term,
    pub vars: usize,
}

impl Identity {
    pub fn new(lhs: Term, rhs: Term) -> Self {
        let vars = lhs.var_count().max(rhs.var_count());
        Identity { lhs, rhs, vars }
    }

    pub fn formula(&self) -> String {
        format!("{} = {}", self.lhs, self.rhs)
    }
}

/// premises ⟹ conclusion, each side a pair of terms.
#[derive(Clone, Debug)]
pub struct QuasiIdentity {
    pub premises: Vec<(Term, Term)>,
    pub conclusion: (Term, Term),
    pub vars: usize,
}

impl QuasiIdentity {
    pub fn new(premises: Vec<(Term, Term)>, conclusion: (Term, Term)) -> Self {
        let vars = premises
            .iter()
            .chain(std::iter::once(&conclusion))
            .map(|(l, r)| l.var_count().max(r.var_count()))
            .max()
            .unwrap_or(0);
        QuasiIdentity {
            premises,
            conclusion,
            vars,
        }
    }

    pub fn formula(&self) -> String {
        let prem: Vec<String> = self
            .premises
            .iter()
            .map(|(l, r)| format!("{l} = {r}"))
            .collect();
        format!(
            "{} ⇒ {} = {}",
            prem.join(" ∧ "),
            self.conclusion.0,
            self.conclusion.1
        )
    }
}

/// A falsifying assignment together with the two unequal side values.
/// Re-evaluating the sides at the assignment always reproduces lhs ≠ rhs.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct Witness {
    pub assignment: Vec<ElementId>,
    pub lhs: ElementId,
    pub rhs: ElementId,
}

impl Witness {
    /// "x=2 y=5 z=8 lhs=6 rhs=5", using element labels when available.
    pub fn render(&self, alg: &FiniteSkewLattice) -> String {
        let mut parts: Vec<String> = self
            .assignment
            .iter()
            .enumerate()
            .map(|(i, &e)| format!("{}={}", var_name(i), alg.label(e)))
            .collect();
        parts.push(format!("lhs={}", alg.label(self.lhs)));
        parts.push(format!("rhs={}", alg.label(self.rhs)));
        parts.join(" ")
    }
}

#[derive(Clone, Copy, Debug)]
pub struct CheckOpts {
    /// Maximum number of evaluated assignments per check.
    pub budget: u64,
    pub mode: ExecMode,
}

impl Default for CheckOpts {
    fn default() -> Self {
        CheckOpts {
            budget: 1_000_000_000,
            mode: exec::default_mode(),
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CheckError {
    #[error("check needs {needed} assignments, budget is {budget}")]
    BudgetExceeded { needed: u128, budget: u64 },
}

fn assignment_of(index: u64, order: usize, vars: usize, out: &mut [ElementId]) {
    let mut idx = index;
    let n = order as u64;
    for slot in (0..vars).rev() {
        out[slot] = (idx % n) as usize;
        idx /= n;
    }
}

fn total_assignments(order: usize, vars: usize, budget: u64) -> Result<u64, CheckError> {
    let needed = (order as u128).pow(vars as u32);
    if needed > budget as u128 {
        return Err(CheckError::BudgetExceeded {
            needed,
            budget,
        });
    }
    Ok(needed as u64)
}

/// Exhaustive check of lhs = rhs over all `order^vars` assignments.
/// Returns the lexicographically first witness, or None when the identity
/// holds. Symmetric in lhs/rhs up to swapping the reported side values.
pub fn check_equation(
    alg: &FiniteSkewLattice,
    lhs: &Term,
    rhs: &Term,
    vars: usize,
    opts: CheckOpts,
) -> Result<Option<Witness>, CheckError> {
    debug_assert!(lhs.var_count() <= vars && rhs.var_count() <= vars);
    let total = total_assignments(alg.order(), vars, opts.budget)?;
    let cl = lhs.compile();
    let cr = rhs.compile();
    let order = alg.order();
    let found = exec::find_first(total, opts.mode, |idx| {
        let mut asg = [0usize; 16];
        assignment_of(idx, order, vars, &mut asg[..vars]);
        cl.eval(alg, &asg[..vars]) != cr.eval(alg, &asg[..vars])
    });
    Ok(found.map(|idx| {
        let mut asg = vec![0usize; vars];
        assignment_of(idx, order, vars, &mut asg);
        Witness {
            lhs: cl.eval(alg, &asg),
            rhs: cr.eval(alg, &asg),
            assignment: asg,
        }
    }))
}

pub fn check_identity(
    alg: &FiniteSkewLattice,
    id: &Identity,
    opts: CheckOpts,
) -> Result<Option<Witness>, CheckError> {
    check_equation(alg, &id.lhs, &id.rhs, id.vars, opts)
}

/// As [`check_equation`], with the premises filtering assignments: a witness
/// satisfies every premise and falsifies the conclusion.
pub fn check_quasi_identity(
    alg: &FiniteSkewLattice,
    q: &QuasiIdentity,
    opts: CheckOpts,
) -> Result<Option<Witness>, CheckError> {
    let vars = q.vars;
    let total = total_assignments(alg.order(), vars, opts.budget)?;
    let premises: Vec<(CompiledTerm, CompiledTerm)> = q
        .premises
        .iter()
        .map(|(l, r)| (l.compile(), r.compile()))
        .collect();
    let (cl, cr) = (q.conclusion.0.compile(), q.conclusion.1.compile());
    let order = alg.order();
    let fails = |idx: u64| {
        let mut asg = [0usize; 16];
        assignment_of(idx, order, vars, &mut asg[..vars]);
        let asg = &asg[..vars];
        premises.iter().all(|(l, r)| l.eval(alg, asg) == r.eval(alg, asg))
            && cl.eval(alg, asg) != cr.eval(alg, asg)
    };
    let found = exec::find_first(total, opts.mode, fails);
    Ok(found.map(|idx| {
        let mut asg = vec![0usize; vars];
        assignment_of(idx, order, vars, &mut asg);
        Witness {
            lhs: cl.eval(alg, &asg),
            rhs: cr.eval(alg, &asg),
            assignment: asg,
        }
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    #[test]
    fn idempotent_meet_of_variable() {
        let alg = corpus::builtin("spinks9").unwrap();
        let t = meet(var(0), var(0));
        for x in alg.elements() {
            assert_eq!(t.eval(&alg, &[x]).unwrap(), x);
        }
    }

    #[test]
    fn sandwich_evaluations_on_spinks9() {
        let alg = corpus::builtin("spinks9").unwrap();
        // x∧(y∨z)∧x at (2,5,8) and (x∧y∧x)∨(x∧z∧x) at the same point.
        let lhs = meet(meet(var(0), join(var(1), var(2))), var(0));
        let rhs = join(
            meet(meet(var(0), var(1)), var(0)),
            meet(meet(var(0), var(2)), var(0)),
        );
        assert_eq!(lhs.eval(&alg, &[2, 5, 8]).unwrap(), 6);
        assert_eq!(rhs.eval(&alg, &[2, 5, 8]).unwrap(), 5);
    }

    #[test]
    fn unbound_slot_is_an_error() {
        let alg = corpus::builtin("chain2").unwrap();
        let t = meet(var(0), var(3));
        assert_eq!(t.eval(&alg, &[0, 1]), Err(EvalError::UnboundSlot { slot: 3 }));
    }

    #[test]
    fn display_flattens_associative_chains() {
        let t = meet(meet(var(0), join(var(1), var(2))), var(0));
        assert_eq!(t.to_string(), "x∧(y∨z)∧x");
    }

    #[test]
    fn budget_exceeded_is_reported() {
        let alg = corpus::builtin("chain3").unwrap();
        let id = Identity::new(var(0), var(1));
        let err = check_identity(
            &alg,
            &id,
            CheckOpts {
                budget: 5,
                mode: ExecMode::Sequential,
            },
        )
        .unwrap_err();
        assert_eq!(err, CheckError::BudgetExceeded { needed: 9, budget: 5 });
    }

    #[test]
    fn witness_reevaluates_to_inequality() {
        let alg = corpus::builtin("spinks9").unwrap();
        let id = crate::props::idents::meet_distributive();
        let w = check_identity(&alg, &id, CheckOpts::default())
            .unwrap()
            .expect("fails on spinks9");
        assert_eq!(id.lhs.eval(&alg, &w.assignment).unwrap(), w.lhs);
        assert_eq!(id.rhs.eval(&alg, &w.assignment).unwrap(), w.rhs);
        assert_ne!(w.lhs, w.rhs);
    }
}

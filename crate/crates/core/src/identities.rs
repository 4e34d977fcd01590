//! Identities in the signature `*`, `\`, `/`, `1`, `'`, `~`, their evaluation
//! on tables, and a bounded search for finite models.
//!
//! Grammar, loosest binding first:
//!
//! ```text
//! identity := term '=' term
//! term     := product (('\' | '/') product)*
//! product  := postfix ('*' postfix)*
//! postfix  := atom ("'" | '~')*
//! atom     := letter | '1' | '(' term ')'
//! ```
//!
//! `x'` is the left inverse `x\1` and `x~` the right inverse `1/x`.

use std::fmt;
use std::str::FromStr;

use crate::cayley::CayleyTable;
use crate::enumerate::Dedup;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Term {
    Var(char),
    One,
    Mul(Box<Term>, Box<Term>),
    /// `a\b`, the `x` with `a*x = b`.
    LeftDiv(Box<Term>, Box<Term>),
    /// `a/b`, the `x` with `x*b = a`.
    RightDiv(Box<Term>, Box<Term>),
    /// `a'`
    Inverse(Box<Term>),
    /// `a~`
    RightInverse(Box<Term>),
}

impl Term {
    pub fn mul(a: Term, b: Term) -> Term {
        Term::Mul(Box::new(a), Box::new(b))
    }

    fn collect_vars(&self, out: &mut Vec<char>) {
        match self {
            Term::Var(c) => {
                if !out.contains(c) {
                    out.push(*c);
                }
            }
            Term::One => {}
            Term::Mul(a, b) | Term::LeftDiv(a, b) | Term::RightDiv(a, b) => {
                a.collect_vars(out);
                b.collect_vars(out);
            }
            Term::Inverse(a) | Term::RightInverse(a) => a.collect_vars(out),
        }
    }

    /// (uses a division, uses the unit or an inverse)
    fn needs(&self) -> (bool, bool) {
        match self {
            Term::Var(_) => (false, false),
            Term::One => (false, true),
            Term::Mul(a, b) => or(a.needs(), b.needs()),
            Term::LeftDiv(a, b) | Term::RightDiv(a, b) => {
                let (_, u) = or(a.needs(), b.needs());
                (true, u)
            }
            Term::Inverse(a) | Term::RightInverse(a) => (a.needs().0, true),
        }
    }

    fn level(&self) -> u8 {
        match self {
            Term::LeftDiv(..) | Term::RightDiv(..) => 1,
            Term::Mul(..) => 2,
            _ => 3,
        }
    }

    fn compile(&self, vars: &[char], code: &mut Vec<Op>) {
        match self {
            Term::Var(c) => code.push(Op::Var(vars.iter().position(|v| v == c).unwrap())),
            Term::One => code.push(Op::One),
            Term::Mul(a, b) | Term::LeftDiv(a, b) | Term::RightDiv(a, b) => {
                a.compile(vars, code);
                b.compile(vars, code);
                code.push(match self {
                    Term::Mul(..) => Op::Mul,
                    Term::LeftDiv(..) => Op::LeftDiv,
                    _ => Op::RightDiv,
                });
            }
            Term::Inverse(a) => {
                a.compile(vars, code);
                code.push(Op::Inverse);
            }
            Term::RightInverse(a) => {
                a.compile(vars, code);
                code.push(Op::RightInverse);
            }
        }
    }
}

fn or(a: (bool, bool), b: (bool, bool)) -> (bool, bool) {
    (a.0 || b.0, a.1 || b.1)
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wrap = |f: &mut fmt::Formatter<'_>, t: &Term, paren: bool| {
            if paren {
                write!(f, "({t})")
            } else {
                write!(f, "{t}")
            }
        };
        match self {
            Term::Var(c) => write!(f, "{c}"),
            Term::One => write!(f, "1"),
            Term::Mul(a, b) | Term::LeftDiv(a, b) | Term::RightDiv(a, b) => {
                let l = self.level();
                wrap(f, a, a.level() < l)?;
                f.write_str(match self {
                    Term::Mul(..) => "*",
                    Term::LeftDiv(..) => "\\",
                    _ => "/",
                })?;
                wrap(f, b, b.level() <= l)
            }
            Term::Inverse(a) => {
                wrap(f, a, a.level() < 3)?;
                f.write_str("'")
            }
            Term::RightInverse(a) => {
                wrap(f, a, a.level() < 3)?;
                f.write_str("~")
            }
        }
    }
}

/// A universally quantified equation.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Identity {
    pub lhs: Term,
    pub rhs: Term,
    /// In order of first occurrence, left side first.
    pub vars: Vec<char>,
}

impl Identity {
    pub fn new(lhs: Term, rhs: Term) -> Identity {
        let mut vars = Vec::new();
        lhs.collect_vars(&mut vars);
        rhs.collect_vars(&mut vars);
        Identity { lhs, rhs, vars }
    }

    pub fn parse(text: &str) -> Result<Identity> {
        Parser::new(text).identity()
    }

    fn needs(&self) -> (bool, bool) {
        or(self.lhs.needs(), self.rhs.needs())
    }

    fn compile(&self) -> Compiled {
        let mut lhs = Vec::new();
        let mut rhs = Vec::new();
        self.lhs.compile(&self.vars, &mut lhs);
        self.rhs.compile(&self.vars, &mut rhs);
        Compiled {
            lhs,
            rhs,
            arity: self.vars.len(),
        }
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}={}", self.lhs, self.rhs)
    }
}

impl FromStr for Identity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Identity> {
        Identity::parse(s)
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        Parser { src, pos: 0 }
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            pos: self.pos,
            msg: msg.into(),
        })
    }

    fn peek(&mut self) -> Option<char> {
        let rest = &self.src[self.pos..];
        let trimmed = rest.trim_start();
        self.pos += rest.len() - trimmed.len();
        trimmed.chars().next()
    }

    fn bump(&mut self) {
        let c = self.peek().unwrap();
        self.pos += c.len_utf8();
    }

    fn identity(&mut self) -> Result<Identity> {
        let lhs = self.term()?;
        match self.peek() {
            Some('=') => self.bump(),
            Some(')') => return self.err("unbalanced ')'"),
            Some(c) => return self.err(format!("unexpected {c:?}")),
            None => return self.err("expected '='"),
        }
        let rhs = self.term()?;
        match self.peek() {
            None => Ok(Identity::new(lhs, rhs)),
            Some(')') => self.err("unbalanced ')'"),
            Some('=') => self.err("more than one '='"),
            Some(c) => self.err(format!("unexpected {c:?}")),
        }
    }

    fn term(&mut self) -> Result<Term> {
        let mut t = self.product()?;
        loop {
            match self.peek() {
                Some('\\') => {
                    self.bump();
                    t = Term::LeftDiv(Box::new(t), Box::new(self.product()?));
                }
                Some('/') => {
                    self.bump();
                    t = Term::RightDiv(Box::new(t), Box::new(self.product()?));
                }
                _ => return Ok(t),
            }
        }
    }

    fn product(&mut self) -> Result<Term> {
        let mut t = self.postfix()?;
        while self.peek() == Some('*') {
            self.bump();
            t = Term::Mul(Box::new(t), Box::new(self.postfix()?));
        }
        Ok(t)
    }

    fn postfix(&mut self) -> Result<Term> {
        let mut t = self.atom()?;
        loop {
            match self.peek() {
                Some('\'') => {
                    self.bump();
                    t = Term::Inverse(Box::new(t));
                }
                Some('~') => {
                    self.bump();
                    t = Term::RightInverse(Box::new(t));
                }
                _ => return Ok(t),
            }
        }
    }

    fn atom(&mut self) -> Result<Term> {
        match self.peek() {
            Some(c) if c.is_ascii_lowercase() => {
                self.bump();
                Ok(Term::Var(c))
            }
            Some('1') => {
                self.bump();
                Ok(Term::One)
            }
            Some('(') => {
                let open = self.pos;
                self.bump();
                let t = self.term()?;
                if self.peek() != Some(')') {
                    return Err(Error::Parse {
                        pos: open,
                        msg: "unbalanced '('".into(),
                    });
                }
                self.bump();
                Ok(t)
            }
            Some(')') => self.err("unbalanced ')'"),
            Some(c) => self.err(format!("expected a term, found {c:?}")),
            None => self.err("expected a term"),
        }
    }
}

#[derive(Clone, Copy, Debug)]
enum Op {
    Var(usize),
    One,
    Mul,
    LeftDiv,
    RightDiv,
    Inverse,
    RightInverse,
}

struct Compiled {
    lhs: Vec<Op>,
    rhs: Vec<Op>,
    arity: usize,
}

/// Partial operation: `Err(cell)` names an unset cell the value depends on.
trait Ops {
    fn unit(&self) -> usize;
    fn mul(&self, a: usize, b: usize) -> Result<usize, usize>;
    fn ldiv(&self, a: usize, b: usize) -> Result<usize, usize>;
    fn rdiv(&self, b: usize, a: usize) -> Result<usize, usize>;
}

fn run<O: Ops>(code: &[Op], env: &[usize], ops: &O, stack: &mut Vec<usize>) -> Result<usize, usize> {
    stack.clear();
    for op in code {
        let v = match *op {
            Op::Var(i) => env[i],
            Op::One => ops.unit(),
            Op::Inverse => {
                let a = stack.pop().unwrap();
                ops.ldiv(a, ops.unit())?
            }
            Op::RightInverse => {
                let a = stack.pop().unwrap();
                ops.rdiv(ops.unit(), a)?
            }
            Op::Mul | Op::LeftDiv | Op::RightDiv => {
                let b = stack.pop().unwrap();
                let a = stack.pop().unwrap();
                match op {
                    Op::Mul => ops.mul(a, b)?,
                    Op::LeftDiv => ops.ldiv(a, b)?,
                    _ => ops.rdiv(a, b)?,
                }
            }
        };
        stack.push(v);
    }
    Ok(stack[0])
}

/// (lhs, rhs) values, or the cell blocking evaluation.
fn eval<O: Ops>(c: &Compiled, env: &[usize], ops: &O, stack: &mut Vec<usize>) -> Result<(usize, usize), usize> {
    let l = run(&c.lhs, env, ops, stack)?;
    let r = run(&c.rhs, env, ops, stack)?;
    Ok((l, r))
}

struct Full<'a> {
    t: &'a CayleyTable,
    unit: usize,
    ldiv: Option<Vec<usize>>,
    rdiv: Option<Vec<usize>>,
}

impl Ops for Full<'_> {
    fn unit(&self) -> usize {
        self.unit
    }

    fn mul(&self, a: usize, b: usize) -> Result<usize, usize> {
        Ok(self.t.op(a, b))
    }

    fn ldiv(&self, a: usize, b: usize) -> Result<usize, usize> {
        Ok(self.ldiv.as_ref().unwrap()[a * self.t.order() + b])
    }

    fn rdiv(&self, b: usize, a: usize) -> Result<usize, usize> {
        Ok(self.rdiv.as_ref().unwrap()[b * self.t.order() + a])
    }
}

/// Values of the variables, in the identity's variable order.
pub type Assignment = Vec<(char, usize)>;

/// `None` if `id` holds in `t`, otherwise the lexicographically first
/// violating assignment.
pub fn holds(t: &CayleyTable, id: &Identity) -> Result<Option<Assignment>> {
    let (div, unit) = id.needs();
    let u = if unit {
        if !t.is_quasigroup() {
            return Err(Error::Signature { needed: "loop" });
        }
        t.find_unit().ok_or(Error::Signature { needed: "loop" })?
    } else {
        0
    };
    if div && !t.is_quasigroup() {
        return Err(Error::Signature {
            needed: "quasigroup",
        });
    }
    let ops = Full {
        t,
        unit: u,
        ldiv: (div || unit).then(|| t.left_division_table().unwrap()),
        rdiv: (div || unit).then(|| t.right_division_table().unwrap()),
    };
    let c = id.compile();
    let n = t.order();
    let mut env = vec![0; c.arity];
    let mut stack = Vec::new();
    loop {
        let (l, r) = eval(&c, &env, &ops, &mut stack).unwrap();
        if l != r {
            return Ok(Some(id.vars.iter().copied().zip(env).collect()));
        }
        // odometer, first variable most significant
        let mut i = c.arity;
        loop {
            if i == 0 {
                return Ok(None);
            }
            i -= 1;
            env[i] += 1;
            if env[i] < n {
                break;
            }
            env[i] = 0;
        }
    }
}

/// Structural side conditions for [`find_model`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Constraints {
    pub quasigroup: bool,
    /// A loop with unit 0; implies `quasigroup`.
    pub loop_: bool,
    pub idempotent: bool,
}

pub const DEFAULT_MODEL_BOUND: usize = 8;

#[derive(Clone, Debug)]
pub struct ModelQuery {
    pub identities: Vec<Identity>,
    /// Identities that must fail in the model.
    pub negated: Vec<Identity>,
    pub n: usize,
    pub constraints: Constraints,
    pub bound: usize,
}

impl ModelQuery {
    pub fn new(identities: Vec<Identity>, n: usize, constraints: Constraints) -> Self {
        ModelQuery {
            identities,
            negated: Vec::new(),
            n,
            constraints,
            bound: DEFAULT_MODEL_BOUND,
        }
    }
}

/// First model of `ids` of order `n`, if any.
pub fn find_model(ids: &[Identity], n: usize, constraints: Constraints) -> Result<Option<CayleyTable>> {
    find_model_with(&ModelQuery::new(ids.to_vec(), n, constraints))
}

pub fn find_model_with(q: &ModelQuery) -> Result<Option<CayleyTable>> {
    let mut found = None;
    for_each_model(q, false, |t| {
        found = Some(t.clone());
        false
    })?;
    Ok(found)
}

/// Isomorphism classes of models, found with symmetry breaking on.
pub fn count_models_up_to_isomorphism(q: &ModelQuery) -> Result<usize> {
    let mut d = Dedup::default();
    let mut count = 0;
    for_each_model(q, true, |t| {
        count += usize::from(d.insert(t.clone()));
        true
    })?;
    Ok(count)
}

const NONE: usize = usize::MAX;

struct Partial {
    n: usize,
    cells: Vec<usize>,
}

impl Ops for Partial {
    fn unit(&self) -> usize {
        0
    }

    fn mul(&self, a: usize, b: usize) -> Result<usize, usize> {
        let i = a * self.n + b;
        match self.cells[i] {
            NONE => Err(i),
            v => Ok(v),
        }
    }

    fn ldiv(&self, a: usize, b: usize) -> Result<usize, usize> {
        let row = &self.cells[a * self.n..(a + 1) * self.n];
        if let Some(x) = row.iter().position(|&v| v == b) {
            return Ok(x);
        }
        Err(a * self.n + row.iter().position(|&v| v == NONE).unwrap_or(0))
    }

    fn rdiv(&self, b: usize, a: usize) -> Result<usize, usize> {
        let n = self.n;
        if let Some(x) = (0..n).find(|&x| self.cells[x * n + a] == b) {
            return Ok(x);
        }
        Err((0..n).find(|&x| self.cells[x * n + a] == NONE).unwrap_or(0) * n + a)
    }
}

struct Instance {
    id: usize,
    env: Vec<usize>,
}

struct ModelSearch<'a> {
    n: usize,
    table: Partial,
    quasigroup: bool,
    row_used: Vec<u64>,
    col_used: Vec<u64>,
    compiled: Vec<Compiled>,
    instances: Vec<Instance>,
    watch: Vec<Vec<usize>>,
    trail: Vec<usize>,
    free: Vec<usize>,
    symmetry: bool,
    negated: &'a [Identity],
    stack: Vec<usize>,
}

impl ModelSearch<'_> {
    fn preset(&mut self, i: usize, v: usize) -> bool {
        let (r, c) = (i / self.n, i % self.n);
        if self.table.cells[i] != NONE {
            return self.table.cells[i] == v;
        }
        if self.quasigroup && (self.row_used[r] | self.col_used[c]) & (1 << v) != 0 {
            return false;
        }
        self.table.cells[i] = v;
        self.row_used[r] |= 1 << v;
        self.col_used[c] |= 1 << v;
        true
    }

    /// Sets cell `i` to `v` and rechecks the instances waiting on it.
    fn assign(&mut self, i: usize, v: usize) -> bool {
        let (r, c) = (i / self.n, i % self.n);
        self.table.cells[i] = v;
        self.row_used[r] |= 1 << v;
        self.col_used[c] |= 1 << v;
        let waiting = self.watch[i].len();
        for w in 0..waiting {
            let k = self.watch[i][w];
            let inst = &self.instances[k];
            match eval(&self.compiled[inst.id], &inst.env, &self.table, &mut self.stack) {
                Ok((a, b)) if a != b => return false,
                Ok(_) => {}
                Err(j) => {
                    self.watch[j].push(k);
                    self.trail.push(j);
                }
            }
        }
        true
    }

    fn unassign(&mut self, i: usize, mark: usize) {
        let (r, c) = (i / self.n, i % self.n);
        let v = self.table.cells[i];
        self.table.cells[i] = NONE;
        self.row_used[r] &= !(1 << v);
        self.col_used[c] &= !(1 << v);
        while self.trail.len() > mark {
            let j = self.trail.pop().unwrap();
            self.watch[j].pop();
        }
    }

    fn search(&mut self, depth: usize, mentioned: usize, visit: &mut dyn FnMut(&CayleyTable) -> bool) -> bool {
        let n = self.n;
        if depth == self.free.len() {
            let t = CayleyTable::from_flat(n, self.table.cells.clone()).unwrap();
            for id in self.negated {
                if holds(&t, id).unwrap().is_none() {
                    return true;
                }
            }
            return visit(&t);
        }
        let i = self.free[depth];
        let (r, c) = (i / n, i % n);
        let mentioned = mentioned.max(r).max(c);
        let top = if self.symmetry { (mentioned + 2).min(n) } else { n };
        for v in 0..top {
            if self.quasigroup && (self.row_used[r] | self.col_used[c]) & (1 << v) != 0 {
                continue;
            }
            let mark = self.trail.len();
            let ok = self.assign(i, v);
            let go_on = !ok || self.search(depth + 1, mentioned.max(v), visit);
            self.unassign(i, mark);
            if !go_on {
                return false;
            }
        }
        true
    }
}

/// Calls `visit` on each model until it returns false. With `symmetry`, only
/// first-row choices that introduce the least unused element are tried, which
/// still reaches every isomorphism class.
pub fn for_each_model(
    q: &ModelQuery,
    symmetry: bool,
    mut visit: impl FnMut(&CayleyTable) -> bool,
) -> Result<()> {
    let n = q.n;
    if n > q.bound {
        return Err(Error::BoundExceeded {
            what: "model search",
            n,
            bound: q.bound,
        });
    }
    if n == 0 {
        return Err(Error::EmptyTable);
    }
    let cons = q.constraints;
    let quasigroup = cons.quasigroup || cons.loop_;
    for id in q.identities.iter().chain(&q.negated) {
        let (div, unit) = id.needs();
        if unit && !cons.loop_ {
            return Err(Error::Signature { needed: "loop" });
        }
        if div && !quasigroup {
            return Err(Error::Signature {
                needed: "quasigroup",
            });
        }
    }
    let mut ids: Vec<&Identity> = q.identities.iter().collect();
    ids.sort_by_key(|id| id.vars.len());
    let mut s = ModelSearch {
        n,
        table: Partial {
            n,
            cells: vec![NONE; n * n],
        },
        quasigroup,
        row_used: vec![0; n],
        col_used: vec![0; n],
        compiled: ids.iter().map(|id| id.compile()).collect(),
        instances: Vec::new(),
        watch: vec![Vec::new(); n * n],
        trail: Vec::new(),
        free: Vec::new(),
        symmetry,
        negated: &q.negated,
        stack: Vec::new(),
    };
    let mut consistent = true;
    if cons.loop_ {
        for x in 0..n {
            consistent &= s.preset(x, x) && s.preset(x * n, x);
        }
    }
    if cons.idempotent {
        for x in 0..n {
            consistent &= s.preset(x * n + x, x);
        }
    }
    if !consistent {
        return Ok(());
    }
    for (id, c) in s.compiled.iter().enumerate() {
        let mut env = vec![0; c.arity];
        'odometer: loop {
            match eval(c, &env, &s.table, &mut s.stack) {
                Ok((a, b)) if a != b => return Ok(()),
                Ok(_) => {}
                Err(j) => {
                    s.watch[j].push(s.instances.len());
                    s.instances.push(Instance {
                        id,
                        env: env.clone(),
                    });
                }
            }
            let mut k = c.arity;
            loop {
                if k == 0 {
                    break 'odometer;
                }
                k -= 1;
                env[k] += 1;
                if env[k] < n {
                    break;
                }
                env[k] = 0;
            }
        }
    }
    s.free = (0..n * n).filter(|&i| s.table.cells[i] == NONE).collect();
    // the presets are invariant under relabellings fixing 0
    s.search(0, 0, &mut visit);
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cayley::Property;

    fn id(s: &str) -> Identity {
        s.parse().unwrap()
    }

    #[test]
    fn parses_with_precedence() {
        let ld = id("x*(y*z)=(x*y)*(x*z)");
        assert_eq!(ld.vars, vec!['x', 'y', 'z']);
        assert_eq!(
            ld.lhs,
            Term::mul(Term::Var('x'), Term::mul(Term::Var('y'), Term::Var('z')))
        );
        let laip = id("(x*y)'=x'*y'");
        assert_eq!(
            laip.lhs,
            Term::Inverse(Box::new(Term::mul(Term::Var('x'), Term::Var('y'))))
        );
        // divisions bind loosest, left to right
        let t = id("x*y\\z/w=1").lhs;
        assert_eq!(t.to_string(), "x*y\\z/w");
        match t {
            Term::RightDiv(a, _) => assert!(matches!(*a, Term::LeftDiv(..))),
            _ => panic!(),
        }
        assert_eq!(id("x * y'' = y~ ").to_string(), "x*y''=y~");
    }

    #[test]
    fn parse_errors() {
        for (text, pos) in [("x*y=", 4), ("(x*y=x", 0), ("x*y)=x", 3), ("x=y=z", 3), ("x+y=x", 1), ("=x", 0)] {
            match Identity::parse(text) {
                Err(Error::Parse { pos: p, .. }) => assert_eq!(p, pos, "{text}"),
                other => panic!("{text}: {other:?}"),
            }
        }
    }

    #[test]
    fn printing_round_trips() {
        for p in Property::ALL {
            let i = id(p.identity_text());
            assert_eq!(id(&i.to_string()), i);
        }
        let i = id("((x/y)\\z)*(x*y)'=(x\\(y/z))~");
        assert_eq!(id(&i.to_string()), i);
    }

    #[test]
    fn evaluation() {
        let z5 = CayleyTable::from_fn(5, |a, b| (a + b) % 5).unwrap();
        assert_eq!(holds(&z5, &id("x=x")).unwrap(), None);
        assert_eq!(holds(&z5, &id("x*y=y*x")).unwrap(), None);
        assert_eq!(holds(&z5, &id("x'=x~")).unwrap(), None);
        assert_eq!(holds(&z5, &id("x*x=x")).unwrap(), Some(vec![('x', 1)]));
        let sub = CayleyTable::from_fn(5, |a, b| (a + 5 - b) % 5).unwrap();
        assert_eq!(holds(&sub, &id("x*y=y*x")).unwrap(), Some(vec![('x', 0), ('y', 1)]));
        assert!(matches!(holds(&sub, &id("x*1=x")), Err(Error::Signature { needed: "loop" })));
        let proj = CayleyTable::from_fn(3, |_, b| b).unwrap();
        assert!(matches!(holds(&proj, &id("x/y=x")), Err(Error::Signature { .. })));
    }

    #[test]
    fn models() {
        let ld = id("x*(y*z)=(x*y)*(x*z)");
        let qg = Constraints {
            quasigroup: true,
            idempotent: true,
            ..Constraints::default()
        };
        assert_eq!(find_model(&[ld.clone()], 2, qg).unwrap(), None);
        let m = find_model(&[ld.clone()], 3, qg).unwrap().unwrap();
        assert!(m.is_latin_quandle());
        let lp = Constraints {
            loop_: true,
            ..Constraints::default()
        };
        let m = find_model(&[id("(x*(y*x))*z=x*(y*(x*z))"), id("(x*y)~=x'*y'")], 4, lp)
            .unwrap()
            .unwrap();
        assert!(m.has_property(Property::LeftBol).unwrap());
        assert!(find_model(&[ld], 9, qg).is_err());
    }
}

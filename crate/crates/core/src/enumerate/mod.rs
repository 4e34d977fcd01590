//! Isomorphism testing, canonical forms and census enumerators.

mod abelian;
mod canon;
pub(crate) mod iso;
mod loops;
mod quandles;

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

pub use canon::canonical_form;
pub use iso::{find_isomorphism, for_each_isomorphism};

use crate::cayley::{CayleyTable, LoopView};
use crate::error::{Error, Result};
use crate::multgroup;
use crate::perm::Permutation;
use crate::represent;

/// An isomorphism `a → b`, or `None`.
pub fn are_isomorphic(a: &CayleyTable, b: &CayleyTable) -> Option<Vec<usize>> {
    find_isomorphism(a, b)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Quandle,
    ConnectedQuandle,
    LatinQuandle,
    Loop,
    MedialIdempotent,
}

impl Family {
    pub const ALL: [Family; 5] = [
        Family::Quandle,
        Family::ConnectedQuandle,
        Family::LatinQuandle,
        Family::Loop,
        Family::MedialIdempotent,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Quandle => "quandle",
            Family::ConnectedQuandle => "connected-quandle",
            Family::LatinQuandle => "latin-quandle",
            Family::Loop => "loop",
            Family::MedialIdempotent => "medial-idempotent",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.replace('_', "-");
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s || f.name().trim_end_matches('s') == s.trim_end_matches('s'))
            .ok_or(Error::Unknown {
                kind: "family",
                name: s,
            })
    }
}

/// Largest orders for which full lists are produced.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bounds {
    pub quandles: usize,
    pub connected_quandles: usize,
    pub latin_quandles: usize,
    pub loops: usize,
    pub medial_idempotent: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            quandles: 8,
            connected_quandles: 10,
            latin_quandles: 10,
            loops: 6,
            medial_idempotent: 16,
        }
    }
}

impl Bounds {
    fn of(&self, family: Family) -> usize {
        match family {
            Family::Quandle => self.quandles,
            Family::ConnectedQuandle => self.connected_quandles,
            Family::LatinQuandle => self.latin_quandles,
            Family::Loop => self.loops,
            Family::MedialIdempotent => self.medial_idempotent,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Options {
    /// Worker threads; 0 means one per available core.
    pub jobs: usize,
    pub bounds: Bounds,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            jobs: 1,
            bounds: Bounds::default(),
        }
    }
}

impl Options {
    fn threads(&self) -> usize {
        match self.jobs {
            0 => std::thread::available_parallelism().map_or(1, |n| n.get()),
            j => j,
        }
    }
}

/// Isomorphism-class representatives, bucketed by an invariant signature.
#[derive(Default)]
pub(crate) struct Dedup {
    buckets: HashMap<Vec<Vec<usize>>, Vec<usize>>,
    reps: Vec<CayleyTable>,
}

impl Dedup {
    /// Adds `t` unless an isomorphic table is already present.
    pub(crate) fn insert(&mut self, t: CayleyTable) -> bool {
        let mut sig = iso::invariants(&t);
        sig.sort_unstable();
        let bucket = self.buckets.entry(sig).or_default();
        if bucket
            .iter()
            .any(|&i| find_isomorphism(&self.reps[i], &t).is_some())
        {
            return false;
        }
        bucket.push(self.reps.len());
        self.reps.push(t);
        true
    }

    fn merge(&mut self, other: Dedup) {
        for t in other.reps {
            self.insert(t);
        }
    }

    /// Canonical forms of the representatives, sorted.
    pub(crate) fn into_canonical(self) -> Vec<CayleyTable> {
        let mut out: Vec<CayleyTable> = self.reps.iter().map(canonical_form).collect();
        out.sort();
        out
    }
}

/// Runs `work(j, jobs)` on `jobs` threads and merges the results.
fn parallel(jobs: usize, work: impl Fn((usize, usize)) -> Dedup + Sync) -> Dedup {
    if jobs <= 1 {
        return work((0, 1));
    }
    let parts: Vec<Dedup> = std::thread::scope(|s| {
        let handles: Vec<_> = (0..jobs)
            .map(|j| {
                let work = &work;
                s.spawn(move || work((j, jobs)))
            })
            .collect();
        handles.into_iter().map(|h| h.join().unwrap()).collect()
    });
    let mut all = Dedup::default();
    for p in parts {
        all.merge(p);
    }
    all
}

fn check_bound(family: Family, n: usize, opts: &Options) -> Result<()> {
    let bound = opts.bounds.of(family);
    if n > bound {
        return Err(Error::BoundExceeded {
            what: family.name(),
            n,
            bound,
        });
    }
    if n == 0 {
        return Err(Error::EmptyTable);
    }
    Ok(())
}

/// Canonical representatives of every isomorphism class of `family` at order `n`.
pub fn enumerate(family: Family, n: usize, opts: &Options) -> Result<Vec<CayleyTable>> {
    check_bound(family, n, opts)?;
    let jobs = opts.threads();
    let dedup = match family {
        Family::Quandle | Family::ConnectedQuandle | Family::LatinQuandle => {
            let mode = match family {
                Family::Quandle => quandles::Mode::All,
                Family::ConnectedQuandle => quandles::Mode::Uniform,
                _ => quandles::Mode::Latin,
            };
            parallel(jobs, |split| {
                let mut d = Dedup::default();
                let mut visit = |rows: &[usize]| {
                    let t = quandles::to_table(n, rows);
                    if mode != quandles::Mode::Uniform || multgroup::is_connected(&t) {
                        d.insert(t);
                    }
                };
                let mut s = quandles::RowSearch::new(n, mode, split, &mut visit);
                if mode == quandles::Mode::All {
                    s.search();
                } else {
                    s.search_uniform();
                }
                drop(s);
                d
            })
        }
        Family::Loop => parallel(jobs, |split| {
            let mut d = Dedup::default();
            let mut visit = |cells: &[usize]| {
                d.insert(CayleyTable::from_flat(n, cells.to_vec()).unwrap());
            };
            loops::LoopSearch::new(n, split, &mut visit).run();
            d
        }),
        Family::MedialIdempotent => {
            let mut d = Dedup::default();
            for t in medial_idempotent_classes(n) {
                d.insert(t);
            }
            d
        }
    };
    Ok(dedup.into_canonical())
}

pub fn enumerate_quandles(n: usize) -> Result<Vec<CayleyTable>> {
    enumerate(Family::Quandle, n, &Options::default())
}

pub fn enumerate_connected_quandles(n: usize) -> Result<Vec<CayleyTable>> {
    enumerate(Family::ConnectedQuandle, n, &Options::default())
}

pub fn enumerate_latin_quandles(n: usize) -> Result<Vec<CayleyTable>> {
    enumerate(Family::LatinQuandle, n, &Options::default())
}

pub fn enumerate_loops(n: usize) -> Result<Vec<CayleyTable>> {
    enumerate(Family::Loop, n, &Options::default())
}

pub fn enumerate_medial_idempotent(n: usize) -> Result<Vec<CayleyTable>> {
    enumerate(Family::MedialIdempotent, n, &Options::default())
}

/// `x*y = (x − ψx) + ψy` for one `ψ` per `Aut(A)`-conjugacy class of
/// automorphisms with `1 − ψ` bijective, over every abelian group `A` of order `n`.
fn medial_idempotent_classes(n: usize) -> Vec<CayleyTable> {
    let mut out = Vec::new();
    for g in abelian::Abelian::all_of_order(n) {
        let add = g.table();
        let neg: Vec<usize> = (0..n).map(|x| (0..n).find(|&y| add.op(x, y) == 0).unwrap()).collect();
        let autos = g.automorphisms();
        let admissible: Vec<&Vec<usize>> = autos
            .iter()
            .filter(|psi| {
                crate::cayley::is_bijection((0..n).map(|x| add.op(x, neg[psi[x]])), n)
            })
            .collect();
        let index: HashMap<&Vec<usize>, usize> =
            admissible.iter().enumerate().map(|(i, p)| (*p, i)).collect();
        let inverses: Vec<Vec<usize>> = autos
            .iter()
            .map(|a| {
                let mut inv = vec![0; n];
                for (x, &y) in a.iter().enumerate() {
                    inv[y] = x;
                }
                inv
            })
            .collect();
        let mut seen = vec![false; admissible.len()];
        for i in 0..admissible.len() {
            if seen[i] {
                continue;
            }
            let psi = admissible[i];
            for (a, ai) in autos.iter().zip(&inverses) {
                let conj: Vec<usize> = (0..n).map(|x| a[psi[ai[x]]]).collect();
                seen[index[&conj]] = true;
            }
            out.push(
                CayleyTable::from_fn(n, |x, y| add.op(add.op(x, neg[psi[x]]), psi[y])).unwrap(),
            );
        }
    }
    out
}

/// Number of `Aut(A)`-classes of admissible `ψ`, summed over abelian `A`.
pub fn count_medial_idempotent_classes(n: usize) -> usize {
    medial_idempotent_classes(n).len()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BoCounts {
    /// Loops admitting a BO-module structure with `ψ ≠ 1`.
    pub bom: usize,
    /// Loops that are BO-loops for some `ψ`.
    pub bol: usize,
    /// Quandles `φ(a)·ψ(b)` over all BO-modules, up to isomorphism.
    pub boq: usize,
}

pub fn count_bo(n: usize) -> Result<BoCounts> {
    count_bo_with(n, &Options::default())
}

pub fn count_bo_with(n: usize, opts: &Options) -> Result<BoCounts> {
    let loops = enumerate(Family::Loop, n, opts)?;
    let mut counts = BoCounts {
        bom: 0,
        bol: 0,
        boq: 0,
    };
    let mut quandles = Dedup::default();
    for t in loops {
        let l = LoopView::new(t.clone())?;
        let (mut module, mut bo_loop) = (false, false);
        let mut autos = Vec::new();
        for_each_isomorphism(&t, &t, |f| {
            autos.push(Permutation::new(f.to_vec()).unwrap());
            true
        });
        for psi in autos {
            if represent::check_bo_module(&l, &psi)?.is_some() {
                continue;
            }
            module |= !psi.is_identity();
            bo_loop |= represent::is_bo_loop(&l, &psi)?;
            quandles.insert(crate::construct::bo_quandle(&l, &psi)?);
        }
        counts.bom += usize::from(module);
        counts.bol += usize::from(bo_loop);
    }
    counts.boq = quandles.reps.len();
    Ok(counts)
}

/// Representatives kept by pairwise isomorphism tests alone.
pub fn distinct_up_to_isomorphism(tables: &[CayleyTable]) -> Vec<CayleyTable> {
    let mut reps: Vec<CayleyTable> = Vec::new();
    for t in tables {
        if !reps.iter().any(|r| are_isomorphic(r, t).is_some()) {
            reps.push(t.clone());
        }
    }
    reps
}

/// Representatives kept by distinct canonical forms.
pub fn distinct_by_canonical_form(tables: &[CayleyTable]) -> Vec<CayleyTable> {
    let mut seen = std::collections::HashSet::new();
    tables
        .iter()
        .filter(|t| seen.insert(canon::canonical_key(t)))
        .cloned()
        .collect()
}

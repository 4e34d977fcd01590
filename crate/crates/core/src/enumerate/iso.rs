//! Backtracking search for isomorphisms between operation tables.

use std::collections::HashMap;

use crate::cayley::CayleyTable;

/// Per-element isomorphism invariants.
pub(crate) fn invariants(t: &CayleyTable) -> Vec<Vec<usize>> {
    let n = t.order();
    let mut indegree = vec![0usize; n];
    for &v in t.entries() {
        indegree[v] += 1;
    }
    (0..n)
        .map(|x| {
            let mut inv = vec![usize::from(t.op(x, x) == x), indegree[x]];
            let row = t.row(x).to_vec();
            inv.extend(profile(&row));
            inv.push(usize::MAX);
            inv.extend(profile(&t.column(x)));
            inv.push(usize::MAX);
            // tail and cycle length of x, x*x, x*(x*x), ...
            let mut seen = vec![usize::MAX; n];
            let mut p = x;
            let mut k = 0;
            while seen[p] == usize::MAX {
                seen[p] = k;
                p = t.op(x, p);
                k += 1;
            }
            inv.push(seen[p]);
            inv.push(k - seen[p]);
            inv
        })
        .collect()
}

/// Cycle type for a bijective map, otherwise the sorted fibre sizes.
fn profile(map: &[usize]) -> Vec<usize> {
    let n = map.len();
    let mut fibres = vec![0usize; n];
    for &v in map {
        fibres[v] += 1;
    }
    if fibres.iter().all(|&f| f == 1) {
        let mut seen = vec![false; n];
        let mut lens = Vec::new();
        for s in 0..n {
            let mut len = 0;
            let mut x = s;
            while !seen[x] {
                seen[x] = true;
                x = map[x];
                len += 1;
            }
            if len > 0 {
                lens.push(len);
            }
        }
        lens.sort_unstable();
        lens
    } else {
        let mut f: Vec<usize> = fibres.into_iter().map(|f| f + n).collect();
        f.sort_unstable();
        f
    }
}

/// Invariant classes shared by `a` and `b`; `None` when the multisets differ.
fn classes(a: &CayleyTable, b: &CayleyTable) -> Option<(Vec<usize>, Vec<usize>)> {
    let ia = invariants(a);
    let ib = if std::ptr::eq(a, b) {
        ia.clone()
    } else {
        invariants(b)
    };
    let mut ids: HashMap<Vec<usize>, usize> = HashMap::new();
    let mut ca = Vec::with_capacity(ia.len());
    for v in ia {
        let next = ids.len();
        ca.push(*ids.entry(v).or_insert(next));
    }
    let mut cb = Vec::with_capacity(ib.len());
    for v in ib {
        cb.push(*ids.get(&v)?);
    }
    let mut sa = ca.clone();
    let mut sb = cb.clone();
    sa.sort_unstable();
    sb.sort_unstable();
    (sa == sb).then_some((ca, cb))
}

struct Search<'a> {
    a: &'a CayleyTable,
    b: &'a CayleyTable,
    class_a: Vec<usize>,
    class_b: Vec<usize>,
    fwd: Vec<usize>,
    back: Vec<usize>,
    assigned: Vec<usize>,
}

const NONE: usize = usize::MAX;

impl<'a> Search<'a> {
    fn new(a: &'a CayleyTable, b: &'a CayleyTable) -> Option<Self> {
        if a.order() != b.order() {
            return None;
        }
        let (class_a, class_b) = classes(a, b)?;
        let n = a.order();
        Some(Search {
            a,
            b,
            class_a,
            class_b,
            fwd: vec![NONE; n],
            back: vec![NONE; n],
            assigned: Vec::with_capacity(n),
        })
    }

    fn undo_to(&mut self, mark: usize) {
        while self.assigned.len() > mark {
            let x = self.assigned.pop().unwrap();
            self.back[self.fwd[x]] = NONE;
            self.fwd[x] = NONE;
        }
    }

    fn try_set(&mut self, x: usize, y: usize) -> bool {
        if self.fwd[x] != NONE {
            return self.fwd[x] == y;
        }
        if self.back[y] != NONE || self.class_a[x] != self.class_b[y] {
            return false;
        }
        self.fwd[x] = y;
        self.back[y] = x;
        self.assigned.push(x);
        true
    }

    /// Assigns `x ↦ y` and everything it forces; false on conflict.
    fn assign(&mut self, x: usize, y: usize) -> bool {
        if !self.try_set(x, y) {
            return false;
        }
        let mut next = self.assigned.len() - 1;
        while next < self.assigned.len() {
            let u = self.assigned[next];
            let fu = self.fwd[u];
            let upto = next + 1;
            for i in 0..upto {
                let w = self.assigned[i];
                let fw = self.fwd[w];
                if !self.try_set(self.a.op(u, w), self.b.op(fu, fw))
                    || !self.try_set(self.a.op(w, u), self.b.op(fw, fu))
                {
                    return false;
                }
            }
            next += 1;
        }
        true
    }

    /// Unassigned element of `a` with the fewest admissible images.
    fn pick(&self) -> Option<usize> {
        let n = self.a.order();
        (0..n)
            .filter(|&x| self.fwd[x] == NONE)
            .min_by_key(|&x| {
                (0..n)
                    .filter(|&y| self.back[y] == NONE && self.class_b[y] == self.class_a[x])
                    .count()
            })
    }

    fn run(&mut self, visit: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        let Some(x) = self.pick() else {
            return visit(&self.fwd);
        };
        let n = self.a.order();
        for y in 0..n {
            if self.back[y] != NONE || self.class_b[y] != self.class_a[x] {
                continue;
            }
            let mark = self.assigned.len();
            if self.assign(x, y) && !self.run(visit) {
                self.undo_to(mark);
                return false;
            }
            self.undo_to(mark);
        }
        true
    }
}

/// An isomorphism `f` with `f(x*y) = f(x)∘f(y)`, if one exists.
pub fn find_isomorphism(a: &CayleyTable, b: &CayleyTable) -> Option<Vec<usize>> {
    let mut search = Search::new(a, b)?;
    let mut found = None;
    search.run(&mut |f| {
        found = Some(f.to_vec());
        false
    });
    found
}

/// Calls `visit` on every isomorphism `a → b`; stop early by returning false.
pub fn for_each_isomorphism(
    a: &CayleyTable,
    b: &CayleyTable,
    mut visit: impl FnMut(&[usize]) -> bool,
) {
    if let Some(mut search) = Search::new(a, b) {
        search.run(&mut visit);
    }
}

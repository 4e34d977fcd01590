//! Lexicographically least relabelling of an operation table.
//!
//! Relabellings are built while the first row of the candidate table is
//! written: choosing which element becomes label `c` is deferred until column
//! `c` is reached, and values seen for the first time take the next free
//! label. Once row 0 is complete the relabelling is total, and the remaining
//! rows are compared against the best table found so far (branch and bound).

use crate::cayley::CayleyTable;

const NONE: usize = usize::MAX;

struct Canon<'a> {
    t: &'a CayleyTable,
    n: usize,
    lab: Vec<usize>,
    inv: Vec<usize>,
    next: usize,
    cur: Vec<usize>,
    best: Option<Vec<usize>>,
    updates: usize,
}

impl Canon<'_> {
    /// Writes `v` at cell `i`; returns the new comparison state or `None` to prune.
    #[inline]
    fn put(&mut self, i: usize, v: usize, less: bool) -> Option<bool> {
        self.cur[i] = v;
        if less {
            return Some(true);
        }
        match &self.best {
            None => Some(true),
            Some(b) if v < b[i] => Some(true),
            Some(b) if v > b[i] => None,
            Some(_) => Some(false),
        }
    }

    fn label_fresh(&mut self, w: usize) -> Option<usize> {
        if self.lab[w] == NONE {
            self.lab[w] = self.next;
            self.inv[self.next] = w;
            self.next += 1;
            Some(w)
        } else {
            None
        }
    }

    fn unlabel(&mut self, w: usize) {
        self.next -= 1;
        debug_assert_eq!(self.inv[self.next], w);
        self.inv[self.next] = NONE;
        self.lab[w] = NONE;
    }

    fn row0(&mut self, c: usize, less: bool) {
        let n = self.n;
        if c == n {
            self.finish(less);
            return;
        }
        if self.inv[c] != NONE {
            self.cell0(c, less);
            return;
        }
        debug_assert_eq!(self.next, c);
        let mut less = less;
        for y in 0..n {
            if self.lab[y] != NONE {
                continue;
            }
            let updates = self.updates;
            self.label_fresh(y);
            self.cell0(c, less);
            self.unlabel(y);
            // a new best shares the whole prefix written so far
            if self.updates != updates {
                less = false;
            }
        }
    }

    fn cell0(&mut self, c: usize, less: bool) {
        let w = self.t.op(self.inv[0], self.inv[c]);
        let fresh = self.label_fresh(w);
        if let Some(less) = self.put(c, self.lab[w], less) {
            self.row0(c + 1, less);
        }
        if let Some(w) = fresh {
            self.unlabel(w);
        }
    }

    fn finish(&mut self, mut less: bool) {
        let n = self.n;
        for r in 1..n {
            let a = self.inv[r];
            for c in 0..n {
                let v = self.lab[self.t.op(a, self.inv[c])];
                match self.put(r * n + c, v, less) {
                    None => return,
                    Some(l) => less = l,
                }
            }
        }
        if less {
            self.best = Some(self.cur.clone());
            self.updates += 1;
        }
    }
}

/// The least table, in row-major order, among all relabellings of `t`.
pub fn canonical_form(t: &CayleyTable) -> CayleyTable {
    canonical_entries(t)
        .map(|e| CayleyTable::from_flat(t.order(), e).unwrap())
        .unwrap()
}

/// Row-major entries of the canonical form.
pub(crate) fn canonical_entries(t: &CayleyTable) -> Option<Vec<usize>> {
    let n = t.order();
    let mut c = Canon {
        t,
        n,
        lab: vec![NONE; n],
        inv: vec![NONE; n],
        next: 0,
        cur: vec![0; n * n],
        best: None,
        updates: 0,
    };
    for x0 in 0..n {
        c.label_fresh(x0);
        c.row0(0, false);
        c.unlabel(x0);
    }
    c.best
}

/// Compact key for hashing canonical forms.
pub(crate) fn canonical_key(t: &CayleyTable) -> Vec<u8> {
    canonical_entries(t)
        .unwrap()
        .into_iter()
        .map(|v| v as u8)
        .collect()
}

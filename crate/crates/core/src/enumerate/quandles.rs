//! Quandles and latin quandles, row by row.
//!
//! Every left translation `L_a` is an automorphism fixing `a`, so
//! `L_{L_a(b)} = L_a L_b L_a⁻¹`. Assigning a row therefore forces the rows of
//! every conjugate it reaches; the search closes the set of known rows under
//! conjugation in both directions before branching on the least unknown row.
//!
//! Labelled solutions are restricted to tables whose row cycle types are
//! non-decreasing in the element index. In connected quandles all rows are
//! conjugate, so instead `L_0` is the fixed representative of its cycle type.

use crate::cayley::CayleyTable;

const NONE: usize = usize::MAX;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Mode {
    All,
    /// All rows of one cycle type; a superset of the connected quandles.
    Uniform,
    Latin,
}

pub(crate) struct RowSearch<'v> {
    n: usize,
    mode: Mode,
    rows: Vec<usize>,
    filled: Vec<bool>,
    types: Vec<Vec<usize>>,
    trail: Vec<usize>,
    split: (usize, usize),
    visit: &'v mut dyn FnMut(&[usize]),
}

fn cycle_type(p: &[usize]) -> Vec<usize> {
    let n = p.len();
    let mut seen = vec![false; n];
    let mut t = Vec::new();
    for s in 0..n {
        let mut len = 0;
        let mut x = s;
        while !seen[x] {
            seen[x] = true;
            x = p[x];
            len += 1;
        }
        if len > 0 {
            t.push(len);
        }
    }
    t.sort_unstable();
    t
}

/// Partitions of `m` into parts `≥ min_part`, parts listed in descending order.
fn partitions(m: usize, min_part: usize) -> Vec<Vec<usize>> {
    fn go(m: usize, max: usize, min: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if m == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (min..=max.min(m)).rev() {
            cur.push(p);
            go(m - p, p, min, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(m, m, min_part.max(1), &mut Vec::new(), &mut out);
    out
}

impl<'v> RowSearch<'v> {
    /// Thread `split.0` of `split.1` explores every `split.1`-th first choice.
    pub(crate) fn new(
        n: usize,
        mode: Mode,
        split: (usize, usize),
        visit: &'v mut dyn FnMut(&[usize]),
    ) -> Self {
        RowSearch {
            n,
            mode,
            rows: vec![NONE; n * n],
            filled: vec![false; n],
            types: vec![Vec::new(); n],
            trail: Vec::new(),
            split,
            visit,
        }
    }

    fn row(&self, a: usize) -> &[usize] {
        &self.rows[a * self.n..(a + 1) * self.n]
    }

    fn undo_to(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let a = self.trail.pop().unwrap();
            self.filled[a] = false;
        }
    }

    /// Records row `c`; false if it clashes with what is already known.
    fn set_row(&mut self, c: usize, p: &[usize]) -> bool {
        let n = self.n;
        if self.filled[c] {
            return self.row(c) == p;
        }
        if p[c] != c {
            return false;
        }
        let ty = cycle_type(p);
        if self.mode == Mode::Latin {
            for a in 0..n {
                if self.filled[a] && (0..n).any(|x| self.rows[a * n + x] == p[x]) {
                    return false;
                }
            }
        }
        if self.mode != Mode::All {
            if self.types.iter().zip(&self.filled).any(|(t, &f)| f && *t != ty) {
                return false;
            }
        } else {
            for d in 0..n {
                if self.filled[d] && ((d < c && self.types[d] > ty) || (d > c && self.types[d] < ty))
                {
                    return false;
                }
            }
        }
        self.rows[c * n..(c + 1) * n].copy_from_slice(p);
        self.types[c] = ty;
        self.filled[c] = true;
        self.trail.push(c);
        true
    }

    /// Closes the known rows under conjugation, starting at trail position `next`.
    fn propagate(&mut self, mut next: usize) -> bool {
        let n = self.n;
        let mut p = vec![0; n];
        let mut inv_a = vec![0; n];
        let mut inv_r = vec![0; n];
        while next < self.trail.len() {
            let r = self.trail[next];
            for x in 0..n {
                inv_r[self.rows[r * n + x]] = x;
            }
            let mut i = 0;
            while i <= next {
                let a = self.trail[i];
                for x in 0..n {
                    inv_a[self.rows[a * n + x]] = x;
                }
                let la = a * n;
                let lr = r * n;
                // L_{L_a(r)} = L_a L_r L_a⁻¹
                for x in 0..n {
                    p[self.rows[la + x]] = self.rows[la + self.rows[lr + x]];
                }
                if !self.set_row(self.rows[la + r], &p) {
                    return false;
                }
                // L_{L_a⁻¹(r)} = L_a⁻¹ L_r L_a
                for x in 0..n {
                    p[x] = inv_a[self.rows[lr + self.rows[la + x]]];
                }
                if !self.set_row(inv_a[r], &p) {
                    return false;
                }
                // L_{L_r(a)} = L_r L_a L_r⁻¹
                for x in 0..n {
                    p[self.rows[lr + x]] = self.rows[lr + self.rows[la + x]];
                }
                if !self.set_row(self.rows[lr + a], &p) {
                    return false;
                }
                // L_{L_r⁻¹(a)} = L_r⁻¹ L_a L_r
                for x in 0..n {
                    p[x] = inv_r[self.rows[la + self.rows[lr + x]]];
                }
                if !self.set_row(inv_r[a], &p) {
                    return false;
                }
                i += 1;
            }
            next += 1;
        }
        true
    }

    fn try_row(&mut self, k: usize, p: &[usize]) {
        let mark = self.trail.len();
        if self.set_row(k, p) && self.propagate(mark) {
            self.search();
        }
        self.undo_to(mark);
    }

    pub(crate) fn search(&mut self) {
        let n = self.n;
        let Some(k) = (0..n).find(|&a| !self.filled[a]) else {
            (self.visit)(&self.rows);
            return;
        };
        let top = self.trail.is_empty();
        let lo = (0..k).rev().find(|&d| self.filled[d]).map(|d| self.types[d].clone());
        let mut p = vec![NONE; n];
        let mut used = vec![false; n];
        p[k] = k;
        used[k] = true;
        let mut cands = Vec::new();
        self.candidates(k, 0, &mut p, &mut used, &mut cands);
        for (i, c) in cands.into_iter().enumerate() {
            if top && i % self.split.1 != self.split.0 {
                continue;
            }
            if let Some(lo) = &lo {
                if self.mode == Mode::All && cycle_type(&c) < *lo {
                    continue;
                }
            }
            self.try_row(k, &c);
        }
    }

    /// Permutations fixing `k` that commute correctly with the known rows:
    /// `p L_b = L_{p(b)} p` whenever `b` and `p(b)` are known.
    fn candidates(
        &self,
        k: usize,
        x: usize,
        p: &mut Vec<usize>,
        used: &mut Vec<bool>,
        out: &mut Vec<Vec<usize>>,
    ) {
        let n = self.n;
        if x == n {
            out.push(p.clone());
            return;
        }
        if x == k {
            return self.candidates(k, x + 1, p, used, out);
        }
        for y in 0..n {
            if used[y] {
                continue;
            }
            if self.mode == Mode::Latin && (y == x || (0..n).any(|a| self.filled[a] && self.rows[a * n + x] == y)) {
                continue;
            }
            p[x] = y;
            if self.consistent(p, x) {
                used[y] = true;
                self.candidates(k, x + 1, p, used, out);
                used[y] = false;
            }
            p[x] = NONE;
        }
    }

    fn consistent(&self, p: &[usize], x: usize) -> bool {
        let n = self.n;
        for b in 0..n {
            if !self.filled[b] || p[b] == NONE || !self.filled[p[b]] {
                continue;
            }
            let lb = &self.rows[b * n..(b + 1) * n];
            let lc = &self.rows[p[b] * n..(p[b] + 1) * n];
            // p(L_b(z)) = L_c(p(z)) for every z where both sides are known
            let check = |z: usize| {
                let u = lb[z];
                p[z] == NONE || p[u] == NONE || p[u] == lc[p[z]]
            };
            if b == x {
                if !(0..n).all(check) {
                    return false;
                }
            } else {
                if !check(x) {
                    return false;
                }
                for z in 0..n {
                    if lb[z] == x && !check(z) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Uniform and latin modes: `L_0` runs over one representative per cycle
    /// type on `1..n`, without fixed points when latin.
    pub(crate) fn search_uniform(&mut self) {
        let n = self.n;
        if n <= 1 {
            if self.split.0 == 0 {
                self.search();
            }
            return;
        }
        let min_part = if self.mode == Mode::Latin { 2 } else { 1 };
        for (i, part) in partitions(n - 1, min_part).into_iter().enumerate() {
            if i % self.split.1 != self.split.0 {
                continue;
            }
            let mut p: Vec<usize> = (0..n).collect();
            let mut start = 1;
            for len in part {
                for i in 0..len {
                    p[start + i] = start + (i + 1) % len;
                }
                start += len;
            }
            self.try_row(0, &p);
        }
    }
}

pub(crate) fn to_table(n: usize, rows: &[usize]) -> CayleyTable {
    CayleyTable::from_flat(n, rows.to_vec()).unwrap()
}

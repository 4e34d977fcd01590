#![allow(dead_code)]

use selfdist::enumerate::{self, Family, Options};
use selfdist::identities::{self, Identity};
use selfdist::multgroup;
use selfdist::{CayleyTable, LoopView, Permutation};

pub fn family(f: Family, n: usize) -> Vec<CayleyTable> {
    enumerate::enumerate(f, n, &Options::default()).unwrap()
}

pub fn loops(n: usize) -> Vec<LoopView> {
    family(Family::Loop, n)
        .into_iter()
        .map(|t| LoopView::new(t).unwrap())
        .collect()
}

pub fn connected_quandles(n: usize) -> Vec<CayleyTable> {
    family(Family::ConnectedQuandle, n)
}

pub fn automorphisms(t: &CayleyTable) -> Vec<Permutation> {
    multgroup::automorphism_group(t).elements().to_vec()
}

/// Whether the identity given in text holds in `t`.
pub fn holds(t: &CayleyTable, id: &str) -> bool {
    let id = Identity::parse(id).unwrap();
    identities::holds(t, &id).unwrap().is_none()
}

/// Every table of order `n`, in odometer order.
pub fn all_magmas(n: usize) -> impl Iterator<Item = CayleyTable> {
    let cells = n * n;
    let total = n.pow(cells as u32);
    (0..total).map(move |mut k| {
        let mut entries = vec![0; cells];
        for e in entries.iter_mut() {
            *e = k % n;
            k /= n;
        }
        CayleyTable::from_flat(n, entries).unwrap()
    })
}

/// Every latin square of order `n`.
pub fn all_latin_squares(n: usize) -> Vec<CayleyTable> {
    fn go(n: usize, cells: &mut Vec<usize>, out: &mut Vec<CayleyTable>) {
        let k = cells.len();
        if k == n * n {
            out.push(CayleyTable::from_flat(n, cells.clone()).unwrap());
            return;
        }
        let (r, c) = (k / n, k % n);
        for v in 0..n {
            let row_clash = (0..c).any(|j| cells[r * n + j] == v);
            let col_clash = (0..r).any(|i| cells[i * n + c] == v);
            if !row_clash && !col_clash {
                cells.push(v);
                go(n, cells, out);
                cells.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(n, &mut Vec::with_capacity(n * n), &mut out);
    out
}

/// A few fixed relabelings of `t`, including the identity.
pub fn relabelings(t: &CayleyTable) -> Vec<CayleyTable> {
    let n = t.order();
    let reverse: Vec<usize> = (0..n).rev().collect();
    let rotate: Vec<usize> = (0..n).map(|x| (x + 1) % n).collect();
    let swap: Vec<usize> = (0..n)
        .map(|x| match x {
            0 if n > 1 => 1,
            1 => 0,
            _ => x,
        })
        .collect();
    vec![t.clone(), t.relabel(&reverse).unwrap(), t.relabel(&rotate).unwrap(), t.relabel(&swap).unwrap()]
}

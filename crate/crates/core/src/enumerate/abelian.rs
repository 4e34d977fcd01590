//! Finite abelian groups as products of cyclic groups, and their automorphisms.

use crate::cayley::CayleyTable;

pub(crate) struct Abelian {
    pub(crate) moduli: Vec<usize>,
}

fn factorize(mut n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        let mut k = 0;
        while n.is_multiple_of(p) {
            n /= p;
            k += 1;
        }
        if k > 0 {
            out.push((p, k));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

fn partitions(m: usize, max: usize) -> Vec<Vec<usize>> {
    if m == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in (1..=max.min(m)).rev() {
        for mut rest in partitions(m - p, p) {
            rest.insert(0, p);
            out.push(rest);
        }
    }
    out
}

impl Abelian {
    /// One group per isomorphism type of order `n`.
    pub(crate) fn all_of_order(n: usize) -> Vec<Abelian> {
        let mut groups = vec![Vec::new()];
        for (p, k) in factorize(n) {
            let mut next = Vec::new();
            for g in &groups {
                for part in partitions(k, k) {
                    let mut m: Vec<usize> = g.clone();
                    m.extend(part.iter().map(|&e| p.pow(e as u32)));
                    next.push(m);
                }
            }
            groups = next;
        }
        groups.into_iter().map(|moduli| Abelian { moduli }).collect()
    }

    pub(crate) fn order(&self) -> usize {
        self.moduli.iter().product()
    }

    fn split(&self, mut i: usize) -> Vec<usize> {
        let mut v = vec![0; self.moduli.len()];
        for (k, &m) in self.moduli.iter().enumerate().rev() {
            v[k] = i % m;
            i /= m;
        }
        v
    }

    fn join(&self, v: &[usize]) -> usize {
        self.moduli
            .iter()
            .zip(v)
            .fold(0, |acc, (&m, &x)| acc * m + x % m)
    }

    pub(crate) fn add(&self, a: usize, b: usize) -> usize {
        let x = self.split(a);
        let y = self.split(b);
        let s: Vec<usize> = x.iter().zip(&y).map(|(p, q)| p + q).collect();
        self.join(&s)
    }

    pub(crate) fn table(&self) -> CayleyTable {
        CayleyTable::from_fn(self.order(), |a, b| self.add(a, b)).unwrap()
    }

    /// Every automorphism, as an image vector, by trying all generator images.
    pub(crate) fn automorphisms(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        let add = self.table();
        let k = self.moduli.len();
        let scale = |x: usize, c: usize| (0..c).fold(0, |acc, _| add.op(acc, x));
        let mut out = Vec::new();
        let mut images = vec![0; k];
        // odometer over generator images
        loop {
            let ok = (0..k).all(|i| scale(images[i], self.moduli[i]) == 0);
            if ok {
                let map: Vec<usize> = (0..n)
                    .map(|x| {
                        let c = self.split(x);
                        (0..k).fold(0, |acc, i| add.op(acc, scale(images[i], c[i])))
                    })
                    .collect();
                if crate::cayley::is_bijection(map.iter().copied(), n) {
                    out.push(map);
                }
            }
            let mut i = 0;
            loop {
                if i == k {
                    return out;
                }
                images[i] += 1;
                if images[i] < n {
                    break;
                }
                images[i] = 0;
                i += 1;
            }
        }
    }
}

//! Finite binary algebras given by their operation tables.

mod loops;
mod props;

pub use loops::{KNuclear, LoopView, Power};
pub use props::Property;

use crate::error::{Error, Result, Side};

/// An operation table on `0..n`; `op(a, b)` is `a * b`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CayleyTable {
    n: usize,
    entries: Vec<usize>,
}

impl std::fmt::Debug for CayleyTable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "CayleyTable({})", self.n)?;
        for a in 0..self.n {
            writeln!(f, "  {:?}", self.row(a))?;
        }
        Ok(())
    }
}

impl CayleyTable {
    /// Validates `rows` as an order-`n` table.
    pub fn new(n: usize, rows: &[Vec<usize>]) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyTable);
        }
        if rows.len() != n || rows.iter().any(|r| r.len() != n) {
            let found = format!(
                "{} rows with lengths {:?}",
                rows.len(),
                rows.iter().map(Vec::len).collect::<Vec<_>>()
            );
            return Err(Error::Shape { n, found });
        }
        Self::from_flat(n, rows.concat())
    }

    /// Validates a row-major entry vector.
    pub fn from_flat(n: usize, entries: Vec<usize>) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyTable);
        }
        if entries.len() != n * n {
            return Err(Error::Shape {
                n,
                found: format!("{} entries", entries.len()),
            });
        }
        if let Some(pos) = entries.iter().position(|&v| v >= n) {
            return Err(Error::OutOfRange {
                row: pos / n,
                col: pos % n,
                value: entries[pos],
                n,
            });
        }
        Ok(CayleyTable { n, entries })
    }

    /// Tabulates `f` over `0..n × 0..n`.
    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> usize) -> Result<Self> {
        let mut entries = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                entries.push(f(a, b));
            }
        }
        Self::from_flat(n, entries)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn op(&self, a: usize, b: usize) -> usize {
        self.entries[a * self.n + b]
    }

    pub fn row(&self, a: usize) -> &[usize] {
        &self.entries[a * self.n..(a + 1) * self.n]
    }

    pub fn column(&self, b: usize) -> Vec<usize> {
        (0..self.n).map(|a| self.op(a, b)).collect()
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        (0..self.n).map(|a| self.row(a).to_vec()).collect()
    }

    pub fn is_row_bijective(&self, a: usize) -> bool {
        is_bijection(self.row(a).iter().copied(), self.n)
    }

    pub fn is_column_bijective(&self, b: usize) -> bool {
        is_bijection((0..self.n).map(|a| self.op(a, b)), self.n)
    }

    /// Every left translation is a permutation.
    pub fn has_left_division(&self) -> bool {
        (0..self.n).all(|a| self.is_row_bijective(a))
    }

    /// Every right translation is a permutation.
    pub fn has_right_division(&self) -> bool {
        (0..self.n).all(|b| self.is_column_bijective(b))
    }

    pub fn is_quasigroup(&self) -> bool {
        self.has_left_division() && self.has_right_division()
    }

    /// The unique `x` with `a * x = b`.
    pub fn left_divide(&self, a: usize, b: usize) -> Result<usize> {
        self.check_element(a)?;
        self.check_element(b)?;
        if !self.is_row_bijective(a) {
            return Err(Error::NotBijective {
                side: Side::Left,
                element: a,
            });
        }
        Ok(self.row(a).iter().position(|&v| v == b).unwrap())
    }

    /// The unique `y` with `y * a = b`, written `b / a`.
    pub fn right_divide(&self, b: usize, a: usize) -> Result<usize> {
        self.check_element(a)?;
        self.check_element(b)?;
        if !self.is_column_bijective(a) {
            return Err(Error::NotBijective {
                side: Side::Right,
                element: a,
            });
        }
        Ok((0..self.n).find(|&y| self.op(y, a) == b).unwrap())
    }

    /// Full left division table, `ldiv[a * n + b] = a \ b`. Requires bijective rows.
    pub fn left_division_table(&self) -> Result<Vec<usize>> {
        let n = self.n;
        let mut out = vec![0; n * n];
        for a in 0..n {
            if !self.is_row_bijective(a) {
                return Err(Error::NotBijective {
                    side: Side::Left,
                    element: a,
                });
            }
            for x in 0..n {
                out[a * n + self.op(a, x)] = x;
            }
        }
        Ok(out)
    }

    /// Full right division table, `rdiv[b * n + a] = b / a`. Requires bijective columns.
    pub fn right_division_table(&self) -> Result<Vec<usize>> {
        let n = self.n;
        let mut out = vec![0; n * n];
        for a in 0..n {
            if !self.is_column_bijective(a) {
                return Err(Error::NotBijective {
                    side: Side::Right,
                    element: a,
                });
            }
            for y in 0..n {
                out[self.op(y, a) * n + a] = y;
            }
        }
        Ok(out)
    }

    pub fn is_idempotent(&self) -> bool {
        (0..self.n).all(|a| self.op(a, a) == a)
    }

    /// First `(a, b, c)` with `a*(b*c) != (a*b)*(a*c)`.
    pub fn left_distributivity_witness(&self) -> Option<(usize, usize, usize)> {
        let n = self.n;
        for a in 0..n {
            for b in 0..n {
                let ab = self.op(a, b);
                for c in 0..n {
                    if self.op(a, self.op(b, c)) != self.op(ab, self.op(a, c)) {
                        return Some((a, b, c));
                    }
                }
            }
        }
        None
    }

    /// First `(x, y, u, v)` with `(x*y)*(u*v) != (x*u)*(y*v)`.
    pub fn mediality_witness(&self) -> Option<(usize, usize, usize, usize)> {
        let n = self.n;
        for x in 0..n {
            for y in 0..n {
                let xy = self.op(x, y);
                for u in 0..n {
                    let xu = self.op(x, u);
                    for v in 0..n {
                        if self.op(xy, self.op(u, v)) != self.op(xu, self.op(y, v)) {
                            return Some((x, y, u, v));
                        }
                    }
                }
            }
        }
        None
    }

    /// Idempotent, left distributive, with unique left division.
    pub fn is_quandle(&self) -> bool {
        self.is_idempotent()
            && self.has_left_division()
            && self.left_distributivity_witness().is_none()
    }

    pub fn is_latin_quandle(&self) -> bool {
        self.is_quandle() && self.has_right_division()
    }

    /// Evaluates the defining identity of `p` over every assignment.
    pub fn has_property(&self, p: Property) -> Result<bool> {
        props::check(self, p)
    }

    /// The two-sided unit, if there is one.
    pub fn find_unit(&self) -> Option<usize> {
        (0..self.n).find(|&e| (0..self.n).all(|a| self.op(e, a) == a && self.op(a, e) == a))
    }

    /// Least subset containing `seed` closed under `*` and whichever divisions exist.
    pub fn subalgebra_generated(&self, seed: &[usize]) -> Vec<usize> {
        let ldiv = self.left_division_table().ok();
        let rdiv = self.right_division_table().ok();
        self.closure(seed, ldiv.as_deref(), rdiv.as_deref())
    }

    pub(crate) fn closure(
        &self,
        seed: &[usize],
        ldiv: Option<&[usize]>,
        rdiv: Option<&[usize]>,
    ) -> Vec<usize> {
        let n = self.n;
        let mut member = vec![false; n];
        let mut elems: Vec<usize> = Vec::new();
        for &s in seed {
            if !member[s] {
                member[s] = true;
                elems.push(s);
            }
        }
        // Every pair (i, j) with max(i, j) >= done has not yet been combined.
        let mut done = 0;
        while done < elems.len() {
            let hi = elems.len();
            for i in 0..hi {
                for j in 0..hi {
                    if i < done && j < done {
                        continue;
                    }
                    let (a, b) = (elems[i], elems[j]);
                    let mut push = |v: usize| {
                        if !member[v] {
                            member[v] = true;
                            elems.push(v);
                        }
                    };
                    push(self.op(a, b));
                    if let Some(l) = ldiv {
                        push(l[a * n + b]);
                    }
                    if let Some(r) = rdiv {
                        push(r[a * n + b]);
                    }
                }
            }
            done = hi;
        }
        elems.sort_unstable();
        elems
    }

    /// The table transported along `perm`: `perm(a) ∘ perm(b) = perm(a * b)`.
    pub fn relabel(&self, perm: &[usize]) -> Result<CayleyTable> {
        let n = self.n;
        if perm.len() != n || !is_bijection(perm.iter().copied(), n) {
            return Err(Error::NotPermutation(n));
        }
        let mut entries = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                entries[perm[a] * n + perm[b]] = perm[self.op(a, b)];
            }
        }
        Ok(CayleyTable { n, entries })
    }

    /// Restriction to a closed subset, relabelled in the order of `subset`.
    pub fn restrict(&self, subset: &[usize]) -> Result<CayleyTable> {
        let mut index = vec![usize::MAX; self.n];
        for (i, &s) in subset.iter().enumerate() {
            self.check_element(s)?;
            index[s] = i;
        }
        let m = subset.len();
        let mut entries = Vec::with_capacity(m * m);
        for &a in subset {
            for &b in subset {
                let v = index[self.op(a, b)];
                if v == usize::MAX {
                    return Err(Error::Inconsistent(format!(
                        "subset not closed: {a}*{b} escapes"
                    )));
                }
                entries.push(v);
            }
        }
        CayleyTable::from_flat(m, entries)
    }

    /// Whether `f` is a homomorphism of this table into itself.
    pub fn is_endomorphism(&self, f: &[usize]) -> bool {
        (0..self.n).all(|a| (0..self.n).all(|b| f[self.op(a, b)] == self.op(f[a], f[b])))
    }

    pub fn check_element(&self, a: usize) -> Result<()> {
        if a < self.n {
            Ok(())
        } else {
            Err(Error::ElementOutOfRange(a))
        }
    }
}

pub(crate) fn is_bijection(values: impl Iterator<Item = usize>, n: usize) -> bool {
    let mut seen = vec![false; n];
    let mut count = 0;
    for v in values {
        if v >= n || seen[v] {
            return false;
        }
        seen[v] = true;
        count += 1;
    }
    count == n
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn zn(n: usize) -> CayleyTable {
        CayleyTable::from_fn(n, |a, b| (a + b) % n).unwrap()
    }

    #[test]
    fn validate_trivial_and_range() {
        let t = CayleyTable::new(1, &[vec![0]]).unwrap();
        assert_eq!(t.order(), 1);
        assert!(t.is_quasigroup());
        let err = CayleyTable::new(3, &[vec![0, 1, 2], vec![1, 3, 0], vec![2, 0, 1]]).unwrap_err();
        assert_eq!(
            err,
            Error::OutOfRange {
                row: 1,
                col: 1,
                value: 3,
                n: 3
            }
        );
        assert!(matches!(
            CayleyTable::new(2, &[vec![0, 1]]),
            Err(Error::Shape { .. })
        ));
        assert_eq!(CayleyTable::from_flat(0, vec![]), Err(Error::EmptyTable));
    }

    #[test]
    fn quasigroup_checks() {
        assert!(zn(3).is_quasigroup());
        let proj = CayleyTable::from_fn(2, |_, b| b).unwrap();
        assert!(!proj.is_quasigroup());
        assert!(proj.has_left_division());
        assert!(!proj.has_right_division());
    }

    #[test]
    fn divisions() {
        let t = zn(5);
        assert_eq!(t.left_divide(2, 0).unwrap(), 3);
        assert_eq!(t.right_divide(0, 2).unwrap(), 3);
        let proj = CayleyTable::from_fn(2, |_, b| b).unwrap();
        assert_eq!(
            proj.right_divide(0, 1),
            Err(Error::NotBijective {
                side: Side::Right,
                element: 1
            })
        );
        // core of Z_3 is left involutory: a \ b = a * b
        let core = CayleyTable::from_fn(3, |a, b| (2 * a + 3 - b) % 3).unwrap();
        for a in 0..3 {
            for b in 0..3 {
                assert_eq!(core.left_divide(a, b).unwrap(), core.op(a, b));
            }
            assert_eq!(core.left_divide(a, a).unwrap(), a);
        }
    }

    #[test]
    fn units() {
        assert_eq!(zn(7).find_unit(), Some(0));
        let core = CayleyTable::from_fn(3, |a, b| (2 * a + 3 - b) % 3).unwrap();
        assert_eq!(core.find_unit(), None);
    }

    #[test]
    fn generated_subalgebras() {
        let core = CayleyTable::from_fn(5, |a, b| (2 * a + 5 - b) % 5).unwrap();
        assert_eq!(core.subalgebra_generated(&[3]), vec![3]);
        assert_eq!(zn(5).subalgebra_generated(&[0, 1]), vec![0, 1, 2, 3, 4]);
        // Z_6: <2> = {0, 2, 4}
        assert_eq!(zn(6).subalgebra_generated(&[2]), vec![0, 2, 4]);
    }

    #[test]
    fn relabel_roundtrip() {
        let t = CayleyTable::from_fn(4, |a, b| (a + 3 * b) % 4).unwrap();
        let p = [2, 0, 3, 1];
        let inv = [1, 3, 0, 2];
        assert_eq!(t.relabel(&p).unwrap().relabel(&inv).unwrap(), t);
        assert!(t.relabel(&[0, 0, 1, 2]).is_err());
    }
}

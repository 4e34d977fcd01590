use std::collections::HashSet;

use super::{CayleyTable, Property};
use crate::error::{Error, Result};

/// A quasigroup table together with its two-sided unit and division tables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LoopView {
    table: CayleyTable,
    unit: usize,
    ldiv: Vec<usize>,
    rdiv: Vec<usize>,
}

/// `x^k`, with a flag set when the loop is not power-associative and the
/// value therefore depends on the bracketing `x^(k) = x·x^(k-1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Power {
    pub value: usize,
    pub bracketing_dependent: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct KNuclear {
    pub holds: bool,
    pub bracketing_dependent: bool,
}

impl LoopView {
    /// Locates the unit; fails unless `table` is a loop.
    pub fn new(table: CayleyTable) -> Result<Self> {
        let unit = table
            .find_unit()
            .ok_or_else(|| Error::NotLoop("no two-sided unit".into()))?;
        Self::with_unit(table, unit)
    }

    pub fn with_unit(table: CayleyTable, unit: usize) -> Result<Self> {
        table.check_element(unit)?;
        if !table.is_quasigroup() {
            return Err(Error::NotLoop("not a quasigroup".into()));
        }
        if (0..table.order()).any(|a| table.op(unit, a) != a || table.op(a, unit) != a) {
            return Err(Error::NotLoop(format!("{unit} is not a two-sided unit")));
        }
        let ldiv = table.left_division_table()?;
        let rdiv = table.right_division_table()?;
        Ok(LoopView {
            table,
            unit,
            ldiv,
            rdiv,
        })
    }

    pub fn table(&self) -> &CayleyTable {
        &self.table
    }

    pub fn into_table(self) -> CayleyTable {
        self.table
    }

    pub fn order(&self) -> usize {
        self.table.order()
    }

    pub fn unit(&self) -> usize {
        self.unit
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table.op(a, b)
    }

    /// `a \ b`
    #[inline]
    pub fn ldiv(&self, a: usize, b: usize) -> usize {
        self.ldiv[a * self.order() + b]
    }

    /// `b / a`
    #[inline]
    pub fn rdiv(&self, b: usize, a: usize) -> usize {
        self.rdiv[b * self.order() + a]
    }

    /// `x^{-1} = x \ 1`
    pub fn linv(&self, x: usize) -> usize {
        self.ldiv(x, self.unit)
    }

    /// `1 / x`
    pub fn rinv(&self, x: usize) -> usize {
        self.rdiv(self.unit, x)
    }

    pub fn has_property(&self, p: Property) -> Result<bool> {
        self.table.has_property(p)
    }

    pub fn is_associative(&self) -> bool {
        let n = self.order();
        (0..n).all(|x| {
            (0..n).all(|y| {
                let xy = self.mul(x, y);
                (0..n).all(|z| self.mul(xy, z) == self.mul(x, self.mul(y, z)))
            })
        })
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.order();
        (0..n).all(|x| (0..n).all(|y| self.mul(x, y) == self.mul(y, x)))
    }

    /// Elements associating with everything in all three positions.
    pub fn nucleus(&self) -> Vec<usize> {
        let n = self.order();
        let m = |a, b| self.mul(a, b);
        (0..n)
            .filter(|&a| {
                (0..n).all(|x| {
                    (0..n).all(|y| {
                        m(a, m(x, y)) == m(m(a, x), y)
                            && m(x, m(a, y)) == m(m(x, a), y)
                            && m(x, m(y, a)) == m(m(x, y), a)
                    })
                })
            })
            .collect()
    }

    /// Subloop generated by `seed` (closed under `·`, `\`, `/`).
    pub fn subloop_generated(&self, seed: &[usize]) -> Vec<usize> {
        let mut s = seed.to_vec();
        s.push(self.unit);
        self.table.closure(&s, Some(&self.ldiv), Some(&self.rdiv))
    }

    fn associative_on(&self, set: &[usize]) -> bool {
        set.iter().all(|&x| {
            set.iter().all(|&y| {
                let xy = self.mul(x, y);
                set.iter()
                    .all(|&z| self.mul(xy, z) == self.mul(x, self.mul(y, z)))
            })
        })
    }

    pub fn is_power_associative(&self) -> bool {
        (0..self.order()).all(|x| self.associative_on(&self.subloop_generated(&[x])))
    }

    /// Every 2-generated subloop is a group.
    pub fn is_diassociative(&self) -> bool {
        let n = self.order();
        let mut checked: HashSet<Vec<usize>> = HashSet::new();
        for x in 0..n {
            for y in x + 1..n {
                let sub = self.subloop_generated(&[x, y]);
                if checked.contains(&sub) {
                    continue;
                }
                if !self.associative_on(&sub) {
                    return false;
                }
                checked.insert(sub);
            }
        }
        // single generators are covered by pairs unless n == 1
        n > 1 || self.is_associative()
    }

    /// `x ↦ x·x` is a permutation.
    pub fn is_uniquely_2_divisible(&self) -> bool {
        super::is_bijection((0..self.order()).map(|x| self.mul(x, x)), self.order())
    }

    /// `x^k` as `x·x^(k-1)`; negative exponents use the left inverse.
    pub fn power(&self, x: usize, k: i64) -> Power {
        let base = if k < 0 { self.linv(x) } else { x };
        let mut value = self.unit;
        for _ in 0..k.unsigned_abs() {
            value = self.mul(base, value);
        }
        Power {
            value,
            bracketing_dependent: !(-1..=1).contains(&k) && !self.is_power_associative(),
        }
    }

    /// Whether `x^k · f(x)` is nuclear for every `x`.
    pub fn is_k_nuclear(&self, f: &[usize], k: i64) -> KNuclear {
        let nucleus = self.nucleus();
        let mut member = vec![false; self.order()];
        for a in nucleus {
            member[a] = true;
        }
        let dependent = !(-1..=1).contains(&k) && !self.is_power_associative();
        let holds = (0..self.order()).all(|x| {
            let p = self.power(x, k).value;
            member[self.mul(p, f[x])]
        });
        KNuclear {
            holds,
            bracketing_dependent: dependent,
        }
    }

    /// Left inner mapping `L_{x,y}(z) = (xy) \ (x·yz)`.
    pub fn left_inner(&self, x: usize, y: usize) -> Vec<usize> {
        let xy = self.mul(x, y);
        (0..self.order())
            .map(|z| self.ldiv(xy, self.mul(x, self.mul(y, z))))
            .collect()
    }

    /// Conjugation `T_x(z) = xz / x`.
    pub fn conjugation(&self, x: usize) -> Vec<usize> {
        (0..self.order())
            .map(|z| self.rdiv(self.mul(x, z), x))
            .collect()
    }

    /// Right inner mapping `R_{x,y}(z) = (zx·y) / (xy)`.
    pub fn right_inner(&self, x: usize, y: usize) -> Vec<usize> {
        let xy = self.mul(x, y);
        (0..self.order())
            .map(|z| self.rdiv(self.mul(self.mul(z, x), y), xy))
            .collect()
    }

    /// All inner mappings (generators `T_x`, `L_{x,y}`, `R_{x,y}`) are automorphisms.
    pub fn is_automorphic(&self) -> bool {
        let n = self.order();
        (0..n).all(|x| self.table.is_endomorphism(&self.conjugation(x)))
            && (0..n).all(|x| {
                (0..n).all(|y| {
                    self.table.is_endomorphism(&self.left_inner(x, y))
                        && self.table.is_endomorphism(&self.right_inner(x, y))
                })
            })
    }
}

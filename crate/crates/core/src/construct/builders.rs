//! Named examples over `Z5×Z3`, `(Z3)^4` and `(Z3)^2×Z9`. Elements are
//! indexed lexicographically on their coordinate tuples.

use crate::cayley::{CayleyTable, LoopView};
use crate::error::{Error, Result};
use crate::perm::Permutation;

/// `φ_{x,y}` for the order-15 loops.
const PHI15: [[i64; 3]; 3] = [[1, 2, 2], [1, 3, 1], [1, 1, 3]];
const THETA15: [[i64; 3]; 3] = [[0, 0, 0], [0, -1, 1], [0, -2, 2]];
const MU15: [[i64; 3]; 3] = [[2, -1, -1], [-1, 2, -1], [-1, -1, 2]];

fn md(v: i64, m: i64) -> usize {
    v.rem_euclid(m) as usize
}

fn split15(i: usize) -> (i64, usize) {
    ((i / 3) as i64, i % 3)
}

fn join15(a: i64, x: i64) -> usize {
    md(a, 5) * 3 + md(x, 3)
}

fn z5z3(f: impl Fn(i64, usize, i64, usize) -> usize) -> CayleyTable {
    CayleyTable::from_fn(15, |p, q| {
        let (a, x) = split15(p);
        let (b, y) = split15(q);
        f(a, x, b, y)
    })
    .unwrap()
}

/// The smallest non-associative B-loop: `(a,x)·(b,y) = (φ_{x,y}a+b, x+y)`.
pub fn bloop15() -> LoopView {
    let t = z5z3(|a, x, b, y| join15(PHI15[x][y] * a + b, (x + y) as i64));
    LoopView::with_unit(t, 0).unwrap()
}

/// `(a,x)·(b,y) = (φ_{x,y}a+b+θ_{x,y}, x+y)`.
pub fn boloop15() -> LoopView {
    let t = z5z3(|a, x, b, y| join15(PHI15[x][y] * a + b + THETA15[x][y], (x + y) as i64));
    LoopView::with_unit(t, 0).unwrap()
}

/// `(a,x) ↦ (−a+δ_{x,2}, −x)`.
pub fn boloop15_automorphism() -> Permutation {
    Permutation::new(
        (0..15)
            .map(|i| {
                let (a, x) = split15(i);
                join15(-a + i64::from(x == 2), -(x as i64))
            })
            .collect(),
    )
    .unwrap()
}

/// `(a,x)*(b,y) = (μ_{x,y}a−b, −x−y)`.
pub fn ildq15() -> CayleyTable {
    z5z3(|a, x, b, y| join15(MU15[x][y] * a - b, -((x + y) as i64)))
}

/// `(a,x)*(b,y) = (μ_{x,y}a−b+τ_{x,y}, −x−y)` with `τ_{x,y} = δ_{x−y,1}`.
pub fn galkin_ldq15() -> CayleyTable {
    z5z3(|a, x, b, y| {
        let tau = i64::from((x + 3 - y) % 3 == 1);
        join15(MU15[x][y] * a - b + tau, -((x + y) as i64))
    })
}

/// Coordinates of a group `Z_{m_1} × … × Z_{m_k}`.
struct Abelian {
    moduli: &'static [i64],
}

const G1: Abelian = Abelian {
    moduli: &[3, 3, 3, 3],
};
const G2: Abelian = Abelian { moduli: &[3, 3, 9] };

impl Abelian {
    fn order(&self) -> usize {
        self.moduli.iter().product::<i64>() as usize
    }

    fn split(&self, mut i: usize) -> Vec<i64> {
        let mut v = vec![0; self.moduli.len()];
        for (k, &m) in self.moduli.iter().enumerate().rev() {
            v[k] = (i % m as usize) as i64;
            i /= m as usize;
        }
        v
    }

    fn join(&self, v: &[i64]) -> usize {
        self.moduli
            .iter()
            .zip(v)
            .fold(0, |acc, (&m, &x)| acc * m as usize + md(x, m))
    }
}

/// Non-associative commutative Moufang loops of order 81,
/// `x·y = x + y + t_i(x, y, x−y)` with `t_i` triadditive.
pub fn cml81(which: u8) -> Result<LoopView> {
    let (g, t): (Abelian, fn(&[i64], &[i64], &[i64]) -> Vec<i64>) = match which {
        1 => (G1, |x, y, z| {
            vec![x[1] * y[2] * z[3] - x[2] * y[1] * z[3], 0, 0, 0]
        }),
        2 => (G2, |x, y, z| {
            vec![0, 0, 3 * (x[0] * y[1] * z[2] - x[1] * y[0] * z[2])]
        }),
        _ => {
            return Err(Error::Unknown {
                kind: "cml81 variant",
                name: which.to_string(),
            })
        }
    };
    let n = g.order();
    let table = CayleyTable::from_fn(n, |p, q| {
        let x = g.split(p);
        let y = g.split(q);
        let z: Vec<i64> = x.iter().zip(&y).map(|(a, b)| a - b).collect();
        let c = t(&x, &y, &z);
        let s: Vec<i64> = (0..x.len()).map(|k| x[k] + y[k] + c[k]).collect();
        g.join(&s)
    })?;
    LoopView::with_unit(table, 0)
}

/// The six non-medial distributive quasigroups of order 81.
pub fn dq81(which: u8) -> Result<CayleyTable> {
    let l = match which {
        1 | 2 => cml81(1)?,
        3..=6 => cml81(2)?,
        _ => {
            return Err(Error::Unknown {
                kind: "dq81 variant",
                name: which.to_string(),
            })
        }
    };
    let n = l.order();
    let inv: Vec<usize> = (0..n).map(|x| l.linv(x)).collect();
    let sq: Vec<usize> = (0..n).map(|x| l.mul(x, x)).collect();
    let mut sqrt = vec![0; n];
    for (x, &s) in sq.iter().enumerate() {
        sqrt[s] = x;
    }
    let (phi, psi): (Vec<usize>, Vec<usize>) = match which {
        1 => (inv.clone(), inv),
        3 => (sqrt.clone(), sqrt),
        4 => (inv, sq),
        5 => (sq, inv),
        2 | 6 => {
            let (g, f): (Abelian, fn(&[i64]) -> Vec<i64>) = if which == 2 {
                (G1, |x| vec![x[1] - x[0], -x[1], -x[2], -x[3]])
            } else {
                (G2, |x| vec![-x[0], -x[1], -(3 * x[0] + x[2])])
            };
            let phi: Vec<usize> = (0..n).map(|i| g.join(&f(&g.split(i)))).collect();
            let psi = (0..n).map(|a| l.ldiv(phi[a], a)).collect();
            (phi, psi)
        }
        _ => unreachable!(),
    };
    CayleyTable::from_fn(n, |a, b| l.mul(phi[a], psi[b]))
}

/// Output of a named builder.
#[derive(Clone, Debug)]
pub enum Built {
    Loop(LoopView),
    Table(CayleyTable),
}

impl Built {
    pub fn table(&self) -> &CayleyTable {
        match self {
            Built::Loop(l) => l.table(),
            Built::Table(t) => t,
        }
    }
}

pub fn builder_names() -> &'static [&'static str] {
    &[
        "bloop15",
        "boloop15",
        "ildq15",
        "galkin-ldq15",
        "cml81-1",
        "cml81-2",
        "dq81-1",
        "dq81-2",
        "dq81-3",
        "dq81-4",
        "dq81-5",
        "dq81-6",
    ]
}

/// Looks up a builder by its name in [`builder_names`].
pub fn by_name(name: &str) -> Result<Built> {
    let unknown = || Error::Unknown {
        kind: "builder",
        name: name.to_string(),
    };
    Ok(match name {
        "bloop15" => Built::Loop(bloop15()),
        "boloop15" => Built::Loop(boloop15()),
        "ildq15" => Built::Table(ildq15()),
        "galkin-ldq15" | "galkin_ldq15" => Built::Table(galkin_ldq15()),
        _ => {
            let (family, k) = name.split_once(['-', '_']).ok_or_else(unknown)?;
            let k: u8 = k.parse().map_err(|_| unknown())?;
            match family {
                "cml81" => Built::Loop(cml81(k)?),
                "dq81" => Built::Table(dq81(k)?),
                _ => return Err(unknown()),
            }
        }
    })
}

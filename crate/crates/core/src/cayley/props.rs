use std::fmt;
use std::str::FromStr;

use super::{CayleyTable, LoopView};
use crate::error::{Error, Result};

/// The catalogued identities. Loop properties are read in the loop signature
/// with `x'` the left inverse `x \ 1` and `x~` the right inverse `1 / x`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Property {
    Idempotent,
    LeftDistributive,
    RightDistributive,
    Medial,
    LeftInvolutory,
    Commutative,
    LeftAlternative,
    Moufang,
    LeftBol,
    Lip,
    Rip,
    Aip,
    Laip,
    Raip,
}

impl Property {
    pub const ALL: [Property; 14] = [
        Property::Idempotent,
        Property::LeftDistributive,
        Property::RightDistributive,
        Property::Medial,
        Property::LeftInvolutory,
        Property::Commutative,
        Property::LeftAlternative,
        Property::Moufang,
        Property::LeftBol,
        Property::Lip,
        Property::Rip,
        Property::Aip,
        Property::Laip,
        Property::Raip,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Property::Idempotent => "idempotent",
            Property::LeftDistributive => "left-distributive",
            Property::RightDistributive => "right-distributive",
            Property::Medial => "medial",
            Property::LeftInvolutory => "left-involutory",
            Property::Commutative => "commutative",
            Property::LeftAlternative => "left-alternative",
            Property::Moufang => "moufang",
            Property::LeftBol => "left-bol",
            Property::Lip => "lip",
            Property::Rip => "rip",
            Property::Aip => "aip",
            Property::Laip => "laip",
            Property::Raip => "raip",
        }
    }

    /// Whether the property is only defined for loops.
    pub fn needs_loop(self) -> bool {
        matches!(
            self,
            Property::LeftAlternative
                | Property::Moufang
                | Property::LeftBol
                | Property::Lip
                | Property::Rip
                | Property::Aip
                | Property::Laip
                | Property::Raip
        )
    }

    /// The defining identity in the syntax accepted by [`crate::identities::parse`].
    pub fn identity_text(self) -> &'static str {
        match self {
            Property::Idempotent => "x*x=x",
            Property::LeftDistributive => "x*(y*z)=(x*y)*(x*z)",
            Property::RightDistributive => "(z*y)*x=(z*x)*(y*x)",
            Property::Medial => "(x*y)*(u*v)=(x*u)*(y*v)",
            Property::LeftInvolutory => "x*(x*y)=y",
            Property::Commutative => "x*y=y*x",
            Property::LeftAlternative => "x*(x*y)=(x*x)*y",
            Property::Moufang => "((x*y)*x)*z=x*(y*(x*z))",
            Property::LeftBol => "(x*(y*x))*z=x*(y*(x*z))",
            Property::Lip => "x\\y=x'*y",
            Property::Rip => "y/x=y*x~",
            // y = 1 forces x~ = x', so this also pins two-sided inverses.
            Property::Aip => "(x*y)~=x'*y'",
            Property::Laip => "(x*y)'=x'*y'",
            Property::Raip => "(x*y)~=x~*y~",
        }
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Property {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.to_ascii_lowercase().replace('_', "-");
        Property::ALL
            .into_iter()
            .find(|p| p.name() == key)
            .ok_or_else(|| Error::Unknown {
                kind: "property",
                name: s.to_string(),
            })
    }
}

fn all2(n: usize, f: impl Fn(usize, usize) -> bool) -> bool {
    (0..n).all(|x| (0..n).all(|y| f(x, y)))
}

fn all3(n: usize, f: impl Fn(usize, usize, usize) -> bool) -> bool {
    (0..n).all(|x| (0..n).all(|y| (0..n).all(|z| f(x, y, z))))
}

pub(super) fn check(t: &CayleyTable, p: Property) -> Result<bool> {
    let n = t.order();
    let m = |a, b| t.op(a, b);
    if !p.needs_loop() {
        return Ok(match p {
            Property::Idempotent => t.is_idempotent(),
            Property::LeftDistributive => t.left_distributivity_witness().is_none(),
            Property::RightDistributive => {
                all3(n, |x, y, z| m(m(z, y), x) == m(m(z, x), m(y, x)))
            }
            Property::Medial => t.mediality_witness().is_none(),
            Property::LeftInvolutory => all2(n, |x, y| m(x, m(x, y)) == y),
            Property::Commutative => all2(n, |x, y| m(x, y) == m(y, x)),
            _ => unreachable!(),
        });
    }
    let l = LoopView::new(t.clone())?;
    Ok(match p {
        Property::LeftAlternative => all2(n, |x, y| m(x, m(x, y)) == m(m(x, x), y)),
        Property::Moufang => all3(n, |x, y, z| m(m(m(x, y), x), z) == m(x, m(y, m(x, z)))),
        Property::LeftBol => all3(n, |x, y, z| m(m(x, m(y, x)), z) == m(x, m(y, m(x, z)))),
        Property::Lip => all2(n, |x, y| l.ldiv(x, y) == m(l.linv(x), y)),
        Property::Rip => all2(n, |x, y| l.rdiv(y, x) == m(y, l.rinv(x))),
        Property::Aip => all2(n, |x, y| l.rinv(m(x, y)) == m(l.linv(x), l.linv(y))),
        Property::Laip => all2(n, |x, y| l.linv(m(x, y)) == m(l.linv(x), l.linv(y))),
        Property::Raip => all2(n, |x, y| l.rinv(m(x, y)) == m(l.rinv(x), l.rinv(y))),
        _ => unreachable!(),
    })
}

use std::fmt::Write;

use selfdist::identities::{self, Identity};
use selfdist::multgroup;
use selfdist::represent::{self, TrimedialMode};
use selfdist::{CayleyTable, Error, LoopView, Property};

fn trimedial_mode(strict: bool) -> TrimedialMode {
    if strict {
        TrimedialMode::Both
    } else {
        TrimedialMode::Identities
    }
}

fn as_loop(t: &CayleyTable) -> Result<LoopView, Error> {
    LoopView::new(t.clone()).map_err(|_| Error::Signature { needed: "a loop" })
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// Multi-line report of every catalogued property.
pub fn properties(t: &CayleyTable, cap: usize, strict: bool) -> Result<String, Error> {
    let mut s = String::new();
    let l = LoopView::new(t.clone()).ok();
    let quasigroup = t.is_quasigroup();
    let left_quasigroup = t.has_left_division();
    let w = |s: &mut String, k: &str, v: &str| writeln!(s, "{k:<20} {v}").unwrap();
    w(&mut s, "order", &t.order().to_string());
    w(&mut s, "quasigroup", yes_no(quasigroup));
    match &l {
        Some(l) => w(&mut s, "loop", &format!("yes (unit {})", l.unit())),
        None => w(&mut s, "loop", "no"),
    }
    w(&mut s, "quandle", yes_no(t.is_quandle()));
    w(&mut s, "latin-quandle", yes_no(t.is_latin_quandle()));
    if left_quasigroup {
        w(&mut s, "connected", yes_no(multgroup::is_connected(t)));
    } else {
        w(&mut s, "connected", "n/a");
    }
    for p in Property::ALL {
        let v = if p.needs_loop() && l.is_none() {
            "n/a"
        } else {
            yes_no(t.has_property(p)?)
        };
        w(&mut s, p.name(), v);
    }
    if let Some(l) = &l {
        w(&mut s, "associative", yes_no(l.is_associative()));
        w(&mut s, "power-associative", yes_no(l.is_power_associative()));
        w(&mut s, "diassociative", yes_no(l.is_diassociative()));
        w(&mut s, "automorphic", yes_no(l.is_automorphic()));
        w(&mut s, "bloop", yes_no(represent::is_bloop(l)));
        w(&mut s, "nucleus order", &l.nucleus().len().to_string());
    }
    if quasigroup {
        w(&mut s, "trimedial", yes_no(represent::is_trimedial(t, trimedial_mode(strict))?));
    }
    if left_quasigroup {
        match multgroup::lmlt_with_cap(t, cap) {
            Ok(g) => w(&mut s, "lmlt order", &g.order().to_string()),
            Err(Error::CapExceeded { cap }) => w(&mut s, "lmlt order", &format!("> {cap}")),
            Err(e) => return Err(e),
        }
    }
    Ok(s)
}

/// Prints a failing assignment of `p`'s identity to stderr.
fn explain_property(t: &CayleyTable, p: Property) {
    if let Ok(id) = Identity::parse(p.identity_text()) {
        if let Ok(Some(w)) = identities::holds(t, &id) {
            eprintln!("{}", describe_failure(&id, &w));
        }
    }
}

pub fn describe_failure(id: &Identity, w: &[(char, usize)]) -> String {
    let vals: Vec<String> = w.iter().map(|(v, x)| format!("{v}={x}")).collect();
    format!("{id} fails at {}", vals.join(" "))
}

/// Evaluates one named property; witnesses of failure go to stderr.
pub fn check(t: &CayleyTable, name: &str, strict: bool) -> Result<bool, Error> {
    let v = match name {
        "quasigroup" => t.is_quasigroup(),
        "loop" => t.find_unit().is_some() && t.is_quasigroup(),
        "quandle" => {
            let v = t.is_quandle();
            if !v {
                if let Some((a, b, c)) = t.left_distributivity_witness() {
                    eprintln!("{a}*({b}*{c}) != ({a}*{b})*({a}*{c})");
                }
            }
            v
        }
        "latin-quandle" => t.is_latin_quandle(),
        "connected" => {
            if !t.has_left_division() {
                return Err(Error::Signature {
                    needed: "a left quasigroup",
                });
            }
            multgroup::is_connected(t)
        }
        "homogeneous" => multgroup::is_homogeneous(t),
        "trimedial" => {
            if !t.is_quasigroup() {
                return Err(Error::Signature {
                    needed: "a quasigroup",
                });
            }
            let v = represent::is_trimedial(t, trimedial_mode(strict))?;
            if !v {
                if let Some((a, b, c)) = represent::trimedial_identity_witness(t) {
                    eprintln!("trimedial identity fails at a={a} b={b} c={c}");
                }
            }
            v
        }
        "bloop" => represent::is_bloop(&as_loop(t)?),
        "associative" => as_loop(t)?.is_associative(),
        "power-associative" => as_loop(t)?.is_power_associative(),
        "diassociative" => as_loop(t)?.is_diassociative(),
        "automorphic" => as_loop(t)?.is_automorphic(),
        other => {
            let p: Property = other.parse()?;
            if p.needs_loop() {
                as_loop(t)?;
            }
            let v = t.has_property(p)?;
            if !v {
                explain_property(t, p);
            }
            v
        }
    };
    Ok(v)
}

//! Structure-preserving maps, checked pointwise. Morphism checks
//! return reports instead of errors so a broken map can be inspected.

use crate::heyting::HeytingAlgebra;
use crate::report::{CheckReport, Clause};
use crate::space::TenseHSpace;
use crate::tense::{TenseHAlgebra, TenseOp};

/// Total map between algebra carriers, stored by domain element id.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraMorphism {
    pub map: Vec<u32>,
}

impl AlgebraMorphism {
    pub fn identity(n: usize) -> Self {
        AlgebraMorphism { map: (0..n as u32).collect() }
    }

    pub fn at(&self, x: usize) -> usize {
        self.map[x] as usize
    }

    pub fn is_bijective(&self, codomain: usize) -> bool {
        let mut seen = vec![false; codomain];
        for &y in &self.map {
            if (y as usize) >= codomain || seen[y as usize] {
                return false;
            }
            seen[y as usize] = true;
        }
        self.map.len() == codomain
    }
}

/// One clause per preserved operation: bounds, lattice operations,
/// implication, and the four tense operators.
pub fn check_tense_homomorphism(
    a1: &TenseHAlgebra,
    a2: &TenseHAlgebra,
    k: &AlgebraMorphism,
) -> CheckReport {
    let mut r = check_heyting_homomorphism(&a1.alg, &a2.alg, k);
    for u in TenseOp::ALL {
        let bad = (0..a1.n()).find(|&x| k.at(a1.op(u, x)) != a2.op(u, k.at(x)));
        r.push(match bad {
            None => Clause::pass(u.symbol().to_string()),
            Some(x) => Clause::fail(u.symbol().to_string(), format!("x={}", a1.name(x))),
        });
    }
    r
}

pub fn check_heyting_homomorphism(
    h1: &HeytingAlgebra,
    h2: &HeytingAlgebra,
    k: &AlgebraMorphism,
) -> CheckReport {
    let mut r = CheckReport::new();
    if k.map.len() != h1.n() || k.map.iter().any(|&y| (y as usize) >= h2.n()) {
        r.push(Clause::fail("arity", format!("map must send {} elements into {}", h1.n(), h2.n())));
        return r;
    }
    r.push(if k.at(h1.bot()) == h2.bot() {
        Clause::pass("bot")
    } else {
        Clause::fail("bot", String::new())
    });
    r.push(if k.at(h1.top()) == h2.top() {
        Clause::pass("top")
    } else {
        Clause::fail("top", String::new())
    });
    let binary: [(&str, fn(&HeytingAlgebra, usize, usize) -> usize); 3] = [
        ("meet", HeytingAlgebra::meet),
        ("join", HeytingAlgebra::join),
        ("imp", HeytingAlgebra::imp),
    ];
    for (id, op) in binary {
        let mut witness = None;
        'scan: for x in 0..h1.n() {
            for y in 0..h1.n() {
                if k.at(op(h1, x, y)) != op(h2, k.at(x), k.at(y)) {
                    witness = Some(format!("x={} y={}", h1.name(x), h1.name(y)));
                    break 'scan;
                }
            }
        }
        r.push(match witness {
            None => Clause::pass(id),
            Some(w) => Clause::fail(id, w),
        });
    }
    r
}

/// Total map between space carriers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpaceMorphism {
    pub map: Vec<u32>,
}

impl SpaceMorphism {
    pub fn identity(n: usize) -> Self {
        SpaceMorphism { map: (0..n as u32).collect() }
    }

    pub fn at(&self, x: usize) -> usize {
        self.map[x] as usize
    }
}

/// Heyting morphism of finite spaces: order preserving, and the image
/// of an upper cone is exactly the upper cone of the image. The second
/// half is the finite shadow of the usual open-map condition.
pub fn check_space_heyting_morphism(
    x1: &TenseHSpace,
    x2: &TenseHSpace,
    k: &SpaceMorphism,
) -> CheckReport {
    let mut r = CheckReport::new();
    if k.map.len() != x1.n() || k.map.iter().any(|&y| (y as usize) >= x2.n()) {
        r.push(Clause::fail("arity", format!("map must send {} points into {}", x1.n(), x2.n())));
        return r;
    }
    let mono = {
        let mut witness = None;
        'scan: for x in 0..x1.n() {
            for y in 0..x1.n() {
                if x1.poset().leq(x, y) && !x2.poset().leq(k.at(x), k.at(y)) {
                    witness = Some(format!("x={} y={}", x1.name(x), x1.name(y)));
                    break 'scan;
                }
            }
        }
        witness
    };
    r.push(match mono {
        None => Clause::pass("order"),
        Some(w) => Clause::fail("order", w),
    });
    // k(up(x)) = up(k(x)): one inclusion is monotonicity, the other
    // asks for a preimage above x for every point above k(x).
    let open = {
        let mut witness = None;
        'scan: for x in 0..x1.n() {
            for y in 0..x2.n() {
                if !x2.poset().leq(k.at(x), y) {
                    continue;
                }
                let covered = x1
                    .poset()
                    .up_cone(x)
                    .iter()
                    .any(|z| k.at(z) == y);
                if !covered {
                    witness = Some(format!("x={} y={}", x1.name(x), x2.name(y)));
                    break 'scan;
                }
            }
        }
        witness
    };
    r.push(match open {
        None => Clause::pass("cone-image"),
        Some(w) => Clause::fail("cone-image", w),
    });
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::{product, two_chain_extreme};

    #[test]
    fn projection_is_a_tense_homomorphism() {
        let c2 = two_chain_extreme();
        let p = product(&c2, &c2);
        // id i*2+j projects to the first factor as i.
        let proj = AlgebraMorphism { map: vec![0, 0, 1, 1] };
        assert!(check_tense_homomorphism(&p, &c2, &proj).passed());
        assert!(!proj.is_bijective(2));
    }

    #[test]
    fn collapsing_map_breaks_implication() {
        let c2 = two_chain_extreme();
        let p = product(&c2, &c2);
        // Send everything to the top: keeps meet and join of what it
        // hits, loses bot.
        let bad = AlgebraMorphism { map: vec![1, 1, 1, 1] };
        let rep = check_tense_homomorphism(&p, &c2, &bad);
        assert!(!rep.passed());
        let bot = rep.clauses.iter().find(|c| c.id == "bot").unwrap();
        assert!(!bot.passed());
    }
}

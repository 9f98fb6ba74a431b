//! Brute-force enumeration of `Hom(K_n, Σ)` and `Hom(B_n, Σ)` straight from
//! the presentations, for cross-checking the staged search.
//!
//! Nothing here goes through the shift decomposition or the extension
//! engine; only the group table is shared. Periodicity of `m ↦ ρ(z_m)` is
//! re-derived by iterating `a_{m+2} = a_m⁻¹ a_{m+1}` until the pair
//! `(a_m, a_{m+1})` repeats. Every relation family of `K_n` is carried to
//! itself by `m ↦ m + 1`, so checking `m` over one full period checks it for
//! all `m ∈ ℤ`.

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::extension::{BraidKey, ClassKey};
use crate::group::{Elem, FiniteGroup};
use crate::shift::Vertex;

pub const DEFAULT_BUDGET: u128 = 100_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleResult {
    pub count: u64,
    /// Class ↦ number of homomorphisms in it.
    pub classes: BTreeMap<ClassKey, u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BraidOracleResult {
    pub count: u64,
    pub classes: BTreeMap<BraidKey, u64>,
}

struct Budget {
    used: u128,
    cap: u128,
}

impl Budget {
    fn new(cap: u128) -> Self {
        Budget { used: 0, cap }
    }

    fn preflight(&self, tuples: u128) -> Result<()> {
        if tuples > self.cap {
            return Err(Error::Resource {
                what: "oracle tuple scan",
                needed: tuples,
                cap: self.cap,
            });
        }
        Ok(())
    }

    fn spend(&mut self, k: usize) -> Result<()> {
        self.used += k as u128;
        if self.used > self.cap {
            return Err(Error::Resource {
                what: "oracle relation checks",
                needed: self.used,
                cap: self.cap,
            });
        }
        Ok(())
    }
}

/// `ρ(z_0), …, ρ(z_{p-1})` for the K_3 homomorphism with `z_0 ↦ a0`,
/// `z_1 ↦ a1`, and the least pair `(ρ(z_k), ρ(z_{k+1}))` over the period.
fn z_period(g: &FiniteGroup, a0: Elem, a1: Elem) -> Result<(Vec<Elem>, Vertex)> {
    let mut seen: HashMap<(Elem, Elem), usize> = HashMap::new();
    let mut seq = vec![a0, a1];
    loop {
        let m = seq.len() - 2;
        let pair = (seq[m], seq[m + 1]);
        if let Some(&first) = seen.get(&pair) {
            if first != 0 {
                return Err(Error::invariant("z-sequence enters a cycle late"));
            }
            seq.truncate(m);
            break;
        }
        seen.insert(pair, m);
        let next = g.mul(g.inv(seq[m]), seq[m + 1]);
        seq.push(next);
    }
    let p = seq.len();
    let canonical = (0..p)
        .map(|k| Vertex::new(seq[k], seq[(k + 1) % p]))
        .min()
        .unwrap();
    Ok((seq, canonical))
}

fn pow_u128(base: usize, exp: usize) -> u128 {
    (0..exp).fold(1u128, |acc, _| acc.saturating_mul(base as u128))
}

/// `Hom(K_3, Σ)`: `K_3` is free on two generators, so every pair counts.
pub fn brute_hom_k3(g: &FiniteGroup) -> Result<OracleResult> {
    brute_hom_kn(g, 3, DEFAULT_BUDGET)
}

/// Scans `(a_0, a_1, b_3, …, b_{n-1})` and keeps the tuples satisfying
///
/// * `z_m x_3 z_{m+2} = x_3 z_{m+1} x_3`
/// * `z_m x_i = x_i z_{m+1}` for `i ≥ 4`
/// * `x_i x_j = x_j x_i` (`|i-j| ≥ 2`), `x_i x_j x_i = x_j x_i x_j` (`|i-j| = 1`)
///
/// Relations are checked as soon as all their generators are chosen.
pub fn brute_hom_kn(g: &FiniteGroup, n: usize, budget: u128) -> Result<OracleResult> {
    if n < 3 {
        return Err(Error::usage("K_n oracle needs n >= 3"));
    }
    let mut budget = Budget::new(budget);
    budget.preflight(pow_u128(g.order(), n - 1))?;
    let mut result = OracleResult {
        count: 0,
        classes: BTreeMap::new(),
    };
    for a0 in g.elements() {
        for a1 in g.elements() {
            let (z, canonical) = z_period(g, a0, a1)?;
            budget.spend(z.len())?;
            let mut b = Vec::with_capacity(n - 3);
            scan_x(g, n, &z, canonical, &mut b, &mut budget, &mut result)?;
        }
    }
    Ok(result)
}

fn x_relations_hold(g: &FiniteGroup, z: &[Elem], b: &[Elem]) -> bool {
    let p = z.len();
    let zm = |m: usize| z[m % p];
    let i = b.len() + 2; // index of the newest generator x_i
    let x = b[b.len() - 1];
    let against_z = if i == 3 {
        (0..p).all(|m| g.mul(g.mul(zm(m), x), zm(m + 2)) == g.mul(g.mul(x, zm(m + 1)), x))
    } else {
        (0..p).all(|m| g.mul(zm(m), x) == g.mul(x, zm(m + 1)))
    };
    if !against_z {
        return false;
    }
    b[..b.len() - 1].iter().enumerate().all(|(k, &y)| {
        let j = k + 3;
        if j + 1 == i {
            g.mul(g.mul(y, x), y) == g.mul(g.mul(x, y), x)
        } else {
            g.mul(x, y) == g.mul(y, x)
        }
    })
}

fn scan_x(
    g: &FiniteGroup,
    n: usize,
    z: &[Elem],
    canonical: Vertex,
    b: &mut Vec<Elem>,
    budget: &mut Budget,
    result: &mut OracleResult,
) -> Result<()> {
    if b.len() + 3 == n {
        result.count += 1;
        *result
            .classes
            .entry(ClassKey {
                rep: canonical,
                b: b.clone(),
            })
            .or_insert(0) += 1;
        return Ok(());
    }
    for x in g.elements() {
        b.push(x);
        budget.spend(z.len() + b.len())?;
        if x_relations_hold(g, z, b) {
            scan_x(g, n, z, canonical, b, budget, result)?;
        }
        b.pop();
    }
    Ok(())
}

/// Scans `(s_1, …, s_{n-1})` against the Artin relations and files each
/// homomorphism under its restriction to `K_n` together with
/// `c = s_1⁻¹`.
pub fn brute_hom_bn(g: &FiniteGroup, n: usize, budget: u128) -> Result<BraidOracleResult> {
    if n < 2 {
        return Err(Error::usage("B_n oracle needs n >= 2"));
    }
    let mut budget = Budget::new(budget);
    budget.preflight(pow_u128(g.order(), n - 1))?;
    let mut result = BraidOracleResult {
        count: 0,
        classes: BTreeMap::new(),
    };
    let mut s = Vec::with_capacity(n - 1);
    scan_sigma(g, n, &mut s, &mut budget, &mut result)?;
    Ok(result)
}

fn scan_sigma(
    g: &FiniteGroup,
    n: usize,
    s: &mut Vec<Elem>,
    budget: &mut Budget,
    result: &mut BraidOracleResult,
) -> Result<()> {
    if s.len() + 1 == n {
        result.count += 1;
        *result.classes.entry(braid_key(g, s)?).or_insert(0) += 1;
        return Ok(());
    }
    for x in g.elements() {
        budget.spend(s.len())?;
        let k = s.len();
        let ok = s.iter().enumerate().all(|(j, &y)| {
            if j + 1 == k {
                g.mul(g.mul(y, x), y) == g.mul(g.mul(x, y), x)
            } else {
                g.mul(x, y) == g.mul(y, x)
            }
        });
        if ok {
            s.push(x);
            scan_sigma(g, n, s, budget, result)?;
            s.pop();
        }
    }
    Ok(())
}

/// `z_0 = σ_2 σ_1⁻¹`, `z_1 = σ_1 σ_2 σ_1⁻²`, `x_i = σ_i σ_1⁻¹`.
fn braid_key(g: &FiniteGroup, s: &[Elem]) -> Result<BraidKey> {
    let e = g.identity();
    let s1_inv = g.inv(s[0]);
    if s.len() == 1 {
        return Ok(BraidKey {
            class: ClassKey {
                rep: Vertex::new(e, e),
                b: vec![],
            },
            c: s1_inv,
        });
    }
    let a0 = g.mul(s[1], s1_inv);
    let a1 = g.mul(g.mul(s[0], s[1]), g.mul(s1_inv, s1_inv));
    let (_, canonical) = z_period(g, a0, a1)?;
    let b = s[2..].iter().map(|&si| g.mul(si, s1_inv)).collect();
    Ok(BraidKey {
        class: ClassKey { rep: canonical, b },
        c: s1_inv,
    })
}

//! Finite groups as precomputed Cayley tables.
//!
//! Every backend (symmetric groups, `SL_2(F_q)`, finite abelian groups, an
//! explicit table read from disk) is enumerated once in a fixed canonical
//! order and then multiplied by table lookup. An [`Elem`] is an index into
//! that enumeration; it is only meaningful together with the group that
//! produced it.

use std::fmt;
use std::path::Path;
use std::sync::OnceLock;

use rand::{Rng, SeedableRng};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::FiniteField;
use crate::perm::{factorial, Permutation};

/// Largest group we are willing to tabulate (`|G|^2` table entries).
pub const MAX_ORDER: usize = 5040;

/// Handle to an element: its canonical index within one [`FiniteGroup`].
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Elem(u16);

impl Elem {
    pub fn index(self) -> usize {
        self.0 as usize
    }

    /// 1-based label used in printed output. For `S_r` this is the lex rank.
    pub fn label(self) -> usize {
        self.0 as usize + 1
    }
}

/// A 2×2 matrix over `F_q`, entries as field-element codes.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Mat2 {
    pub a: u8,
    pub b: u8,
    pub c: u8,
    pub d: u8,
}

impl Mat2 {
    pub fn det(&self, f: &FiniteField) -> u8 {
        f.sub(f.mul(self.a, self.d), f.mul(self.b, self.c))
    }

    pub fn mul(&self, other: &Mat2, f: &FiniteField) -> Mat2 {
        let dot = |x: u8, y: u8, z: u8, w: u8| f.add(f.mul(x, y), f.mul(z, w));
        Mat2 {
            a: dot(self.a, other.a, self.b, other.c),
            b: dot(self.a, other.b, self.b, other.d),
            c: dot(self.c, other.a, self.d, other.c),
            d: dot(self.c, other.b, self.d, other.d),
        }
    }
}

impl fmt::Display for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{} {}; {} {}]", self.a, self.b, self.c, self.d)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Backend {
    Symmetric { degree: usize },
    Alternating { degree: usize },
    Sl2 { q: usize },
    Abelian { moduli: Vec<usize> },
    Table,
    Subgroup { parent: String },
}

#[derive(Clone, Debug)]
enum Labels {
    Perms(Vec<Permutation>),
    Mats(Vec<Mat2>),
    Tuples(Vec<Vec<usize>>),
    Plain,
}

pub struct FiniteGroup {
    name: String,
    backend: Backend,
    order: usize,
    table: Vec<u16>,
    inv: Vec<u16>,
    identity: Elem,
    labels: Labels,
    embedding: Option<Vec<Elem>>,
    conj: OnceLock<Vec<u32>>,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("name", &self.name)
            .field("order", &self.order)
            .finish()
    }
}

fn check_order(order: usize, what: &str) -> Result<()> {
    if order > MAX_ORDER {
        return Err(Error::Resource {
            what: "group order",
            needed: order as u128,
            cap: MAX_ORDER as u128,
        });
    }
    if order == 0 {
        return Err(Error::usage(format!("{what}: empty group")));
    }
    Ok(())
}

impl FiniteGroup {
    fn from_products(
        name: String,
        backend: Backend,
        order: usize,
        labels: Labels,
        product: impl Fn(usize, usize) -> usize,
        identity: usize,
    ) -> Self {
        let mut table = vec![0u16; order * order];
        for g in 0..order {
            for h in 0..order {
                table[g * order + h] = product(g, h) as u16;
            }
        }
        let inv = (0..order)
            .map(|g| {
                (0..order)
                    .find(|&h| table[g * order + h] as usize == identity)
                    .expect("every element has an inverse") as u16
            })
            .collect();
        FiniteGroup {
            name,
            backend,
            order,
            table,
            inv,
            identity: Elem(identity as u16),
            labels,
            embedding: None,
            conj: OnceLock::new(),
        }
    }

    /// `S_r`, elements numbered by lex rank of their image vectors.
    pub fn symmetric(degree: usize) -> Result<Self> {
        if degree == 0 || degree > 7 {
            return Err(Error::usage(format!("S{degree}: degree must be in 1..=7")));
        }
        let order = factorial(degree);
        check_order(order, "S_r")?;
        let perms: Vec<Permutation> = (1..=order)
            .map(|i| Permutation::lex_unrank(degree, i).unwrap())
            .collect();
        let product = |g: usize, h: usize| perms[g].compose(&perms[h]).lex_rank() - 1;
        Ok(Self::from_products(
            format!("S{degree}"),
            Backend::Symmetric { degree },
            order,
            Labels::Perms(perms.clone()),
            product,
            0,
        ))
    }

    /// `A_r` as the even permutations of `S_r`, kept in `S_r`'s lex order.
    pub fn alternating(degree: usize) -> Result<Self> {
        let sym = Self::symmetric(degree)?;
        let even: Vec<Elem> = sym
            .elements()
            .filter(|&g| sym.permutation(g).unwrap().is_even())
            .collect();
        let mut alt = sym.subgroup(&even)?;
        alt.name = format!("A{degree}");
        alt.backend = Backend::Alternating { degree };
        Ok(alt)
    }

    /// `SL_2(F_q)`, enumerated lexicographically on `(a, b, c, d)`.
    pub fn sl2(q: usize) -> Result<Self> {
        let field = FiniteField::new(q)?;
        check_order(q * (q * q - 1), "SL2")?;
        let mut mats = Vec::new();
        for a in 0..q as u8 {
            for b in 0..q as u8 {
                for c in 0..q as u8 {
                    for d in 0..q as u8 {
                        let m = Mat2 { a, b, c, d };
                        if m.det(&field) == 1 {
                            mats.push(m);
                        }
                    }
                }
            }
        }
        let order = mats.len();
        let index_of = |m: &Mat2| mats.binary_search(m).expect("SL2 is closed");
        let identity = index_of(&Mat2 {
            a: 1,
            b: 0,
            c: 0,
            d: 1,
        });
        let product = |g: usize, h: usize| index_of(&mats[g].mul(&mats[h], &field));
        Ok(Self::from_products(
            format!("SL2({q})"),
            Backend::Sl2 { q },
            order,
            Labels::Mats(mats.clone()),
            product,
            identity,
        ))
    }

    /// `Z/k_1 × … × Z/k_t`, tuples in lexicographic order.
    pub fn abelian(moduli: &[usize]) -> Result<Self> {
        if moduli.is_empty() || moduli.contains(&0) {
            return Err(Error::usage("abelian group needs positive moduli"));
        }
        let order = moduli
            .iter()
            .try_fold(1usize, |acc, &k| acc.checked_mul(k))
            .unwrap_or(usize::MAX);
        check_order(order, "abelian product")?;
        let decode = |mut i: usize| {
            let mut t = vec![0usize; moduli.len()];
            for (slot, &k) in t.iter_mut().zip(moduli).rev() {
                *slot = i % k;
                i /= k;
            }
            t
        };
        let encode = |t: &[usize]| t.iter().zip(moduli).fold(0, |acc, (&x, &k)| acc * k + x);
        let tuples: Vec<Vec<usize>> = (0..order).map(decode).collect();
        let product = |g: usize, h: usize| {
            let s: Vec<usize> = tuples[g]
                .iter()
                .zip(&tuples[h])
                .zip(moduli)
                .map(|((x, y), k)| (x + y) % k)
                .collect();
            encode(&s)
        };
        let name = moduli
            .iter()
            .map(|k| format!("Z{k}"))
            .collect::<Vec<_>>()
            .join("x");
        Ok(Self::from_products(
            name,
            Backend::Abelian {
                moduli: moduli.to_vec(),
            },
            order,
            Labels::Tuples(tuples.clone()),
            product,
            0,
        ))
    }

    /// Explicit Cayley table with 0-based entries. Checks the group axioms
    /// (associativity exhaustively up to order 120, sampled above).
    pub fn from_table(name: &str, rows: Vec<Vec<usize>>) -> Result<Self> {
        let order = rows.len();
        check_order(order, "Cayley table")?;
        if rows
            .iter()
            .any(|r| r.len() != order || r.iter().any(|&x| x >= order))
        {
            return Err(Error::usage(
                "Cayley table must be square with entries in 0..m",
            ));
        }
        let identity = (0..order)
            .find(|&e| (0..order).all(|g| rows[e][g] == g && rows[g][e] == g))
            .ok_or_else(|| Error::usage("Cayley table has no identity"))?;
        for (g, row) in rows.iter().enumerate() {
            if !(0..order).any(|h| row[h] == identity && rows[h][g] == identity) {
                return Err(Error::usage(format!("element {g} has no inverse")));
            }
        }
        let group = Self::from_products(
            name.to_string(),
            Backend::Table,
            order,
            Labels::Plain,
            |g, h| rows[g][h],
            identity,
        );
        group.check_axioms(120)?;
        Ok(group)
    }

    /// Reads the text format: first line the order `m`, then `m` lines of `m`
    /// whitespace-separated 0-based indices.
    pub fn from_table_file(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let bad = |msg: &str| Error::usage(format!("{}: {msg}", path.display()));
        let order: usize = lines
            .next()
            .ok_or_else(|| bad("empty file"))?
            .trim()
            .parse()
            .map_err(|_| bad("first line must be the group order"))?;
        let mut rows = Vec::with_capacity(order);
        for line in lines {
            let row = line
                .split_whitespace()
                .map(|t| t.parse::<usize>())
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(|_| bad("non-integer table entry"))?;
            rows.push(row);
        }
        if rows.len() != order {
            return Err(bad(&format!("expected {order} rows, found {}", rows.len())));
        }
        Self::from_table(&format!("table:{}", path.display()), rows)
    }

    /// Parses `S4`, `A5`, `SL2(3)`, `Z6`, `Z2xZ4`, `table:<path>`.
    pub fn from_spec(spec: &str) -> Result<Self> {
        let s = spec.trim();
        let bad = || Error::usage(format!("unrecognised group spec '{spec}'"));
        let number = |t: &str| t.parse::<usize>().map_err(|_| bad());
        if let Some(path) = s.strip_prefix("table:") {
            return Self::from_table_file(Path::new(path));
        }
        if let Some(rest) = s.strip_prefix("SL2(").and_then(|t| t.strip_suffix(')')) {
            return Self::sl2(number(rest)?);
        }
        if let Some(rest) = s.strip_prefix('S') {
            return Self::symmetric(number(rest)?);
        }
        if let Some(rest) = s.strip_prefix('A') {
            return Self::alternating(number(rest)?);
        }
        if s.starts_with('Z') {
            let moduli = s
                .split(['x', 'X'])
                .map(|t| t.strip_prefix('Z').ok_or_else(bad).and_then(number))
                .collect::<Result<Vec<_>>>()?;
            return Self::abelian(&moduli);
        }
        Err(bad())
    }

    /// The subgroup on the given element set, re-tabulated, with elements in
    /// ascending parent index order. Labels and the embedding are kept.
    pub fn subgroup(&self, elems: &[Elem]) -> Result<Self> {
        let mut members: Vec<Elem> = elems.to_vec();
        members.sort();
        members.dedup();
        let mut local = vec![u16::MAX; self.order];
        for (i, g) in members.iter().enumerate() {
            local[g.index()] = i as u16;
        }
        let lookup = |g: Elem| -> Result<usize> {
            match local[g.index()] {
                u16::MAX => Err(Error::usage(
                    "element set is not closed under multiplication",
                )),
                i => Ok(i as usize),
            }
        };
        let identity = lookup(self.identity)
            .map_err(|_| Error::usage("element set does not contain the identity"))?;
        for &g in &members {
            lookup(self.inv(g))?;
            for &h in &members {
                lookup(self.mul(g, h))?;
            }
        }
        let labels = match &self.labels {
            Labels::Perms(p) => {
                Labels::Perms(members.iter().map(|g| p[g.index()].clone()).collect())
            }
            Labels::Mats(m) => Labels::Mats(members.iter().map(|g| m[g.index()]).collect()),
            Labels::Tuples(t) => {
                Labels::Tuples(members.iter().map(|g| t[g.index()].clone()).collect())
            }
            Labels::Plain => Labels::Plain,
        };
        let mut sub = Self::from_products(
            format!("<{} elements of {}>", members.len(), self.name),
            Backend::Subgroup {
                parent: self.name.clone(),
            },
            members.len(),
            labels,
            |g, h| lookup(self.mul(members[g], members[h])).unwrap(),
            identity,
        );
        sub.embedding = Some(members);
        Ok(sub)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn backend(&self) -> &Backend {
        &self.backend
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> Elem {
        self.identity
    }

    pub fn is_identity(&self, g: Elem) -> bool {
        g == self.identity
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> + Clone {
        (0..self.order as u16).map(Elem)
    }

    /// Element with the given 0-based canonical index.
    pub fn element(&self, index: usize) -> Result<Elem> {
        if index < self.order {
            Ok(Elem(index as u16))
        } else {
            Err(Error::usage(format!(
                "index {index} out of range for {} (order {})",
                self.name, self.order
            )))
        }
    }

    /// Element with the given 1-based label (lex rank for `S_r`).
    pub fn element_by_label(&self, label: usize) -> Result<Elem> {
        match label.checked_sub(1) {
            Some(i) => self.element(i),
            None => Err(Error::usage("labels start at 1")),
        }
    }

    /// Group product; the right factor acts first for permutations.
    #[inline]
    pub fn mul(&self, g: Elem, h: Elem) -> Elem {
        Elem(self.table[g.index() * self.order + h.index()])
    }

    /// [`FiniteGroup::mul`] with an ownership check on both operands.
    pub fn checked_mul(&self, g: Elem, h: Elem) -> Result<Elem> {
        self.element(g.index())?;
        self.element(h.index())?;
        Ok(self.mul(g, h))
    }

    #[inline]
    pub fn inv(&self, g: Elem) -> Elem {
        Elem(self.inv[g.index()])
    }

    pub fn mul_all(&self, elems: impl IntoIterator<Item = Elem>) -> Elem {
        elems
            .into_iter()
            .fold(self.identity, |acc, g| self.mul(acc, g))
    }

    pub fn pow(&self, g: Elem, k: usize) -> Elem {
        let mut acc = self.identity;
        let mut base = g;
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    pub fn element_order(&self, g: Elem) -> usize {
        let mut x = g;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, g);
            k += 1;
        }
        k
    }

    #[inline]
    pub fn commutes(&self, g: Elem, h: Elem) -> bool {
        self.mul(g, h) == self.mul(h, g)
    }

    /// `g h g = h g h`.
    #[inline]
    pub fn braids(&self, g: Elem, h: Elem) -> bool {
        self.mul(self.mul(g, h), g) == self.mul(self.mul(h, g), h)
    }

    /// `[g, h] = g⁻¹ h⁻¹ g h`.
    pub fn commutator(&self, g: Elem, h: Elem) -> Elem {
        self.mul_all([self.inv(g), self.inv(h), g, h])
    }

    pub fn is_abelian(&self) -> bool {
        self.elements()
            .all(|g| self.elements().all(|h| self.commutes(g, h)))
    }

    /// Number of elements of order exactly two.
    pub fn involution_count(&self) -> usize {
        self.elements()
            .filter(|&g| !self.is_identity(g) && self.is_identity(self.mul(g, g)))
            .count()
    }

    fn conjugacy_ids(&self) -> &[u32] {
        self.conj.get_or_init(|| {
            let mut ids = vec![u32::MAX; self.order];
            let mut next = 0;
            for g in self.elements() {
                if ids[g.index()] != u32::MAX {
                    continue;
                }
                for x in self.elements() {
                    let y = self.mul_all([x, g, self.inv(x)]);
                    ids[y.index()] = next;
                }
                next += 1;
            }
            ids
        })
    }

    pub fn conjugacy_class_id(&self, g: Elem) -> u32 {
        self.conjugacy_ids()[g.index()]
    }

    pub fn are_conjugate(&self, g: Elem, h: Elem) -> bool {
        self.conjugacy_class_id(g) == self.conjugacy_class_id(h)
    }

    pub fn conjugacy_class_count(&self) -> usize {
        self.conjugacy_ids()
            .iter()
            .max()
            .map_or(0, |&m| m as usize + 1)
    }

    /// Permutation degree when the elements are permutations.
    pub fn degree(&self) -> Option<usize> {
        match &self.labels {
            Labels::Perms(p) => p.first().map(Permutation::degree),
            _ => None,
        }
    }

    pub fn permutation(&self, g: Elem) -> Option<&Permutation> {
        match &self.labels {
            Labels::Perms(p) => p.get(g.index()),
            _ => None,
        }
    }

    pub fn matrix(&self, g: Elem) -> Option<Mat2> {
        match &self.labels {
            Labels::Mats(m) => m.get(g.index()).copied(),
            _ => None,
        }
    }

    pub fn coordinates(&self, g: Elem) -> Option<&[usize]> {
        match &self.labels {
            Labels::Tuples(t) => t.get(g.index()).map(Vec::as_slice),
            _ => None,
        }
    }

    /// Looks up a permutation; `None` if this is not a permutation group or
    /// the permutation is not a member.
    pub fn find_permutation(&self, p: &Permutation) -> Option<Elem> {
        match &self.labels {
            Labels::Perms(ps) => ps.iter().position(|q| q == p).map(|i| Elem(i as u16)),
            _ => None,
        }
    }

    pub fn find_matrix(&self, m: Mat2) -> Option<Elem> {
        match &self.labels {
            Labels::Mats(ms) => ms.binary_search(&m).ok().map(|i| Elem(i as u16)),
            _ => None,
        }
    }

    /// For a subgroup, the corresponding element of the parent group.
    pub fn embed(&self, g: Elem) -> Option<Elem> {
        self.embedding.as_ref().map(|e| e[g.index()])
    }

    /// Human-readable element text (cycle notation, matrix, tuple).
    pub fn display(&self, g: Elem) -> String {
        match &self.labels {
            Labels::Perms(p) => p[g.index()].to_string(),
            Labels::Mats(m) => m[g.index()].to_string(),
            Labels::Tuples(t) => {
                let parts: Vec<String> = t[g.index()].iter().map(|x| x.to_string()).collect();
                format!("({})", parts.join(","))
            }
            Labels::Plain => format!("e{}", g.index()),
        }
    }

    /// Checks closure-derived axioms: associativity for every triple when
    /// `|G| <= exhaustive_up_to`, otherwise on 10^4 seeded random triples.
    pub fn check_axioms(&self, exhaustive_up_to: usize) -> Result<()> {
        let e = self.identity;
        for g in self.elements() {
            if self.mul(e, g) != g || self.mul(g, e) != g {
                return Err(Error::invariant(format!(
                    "{}: identity law fails at {g:?}",
                    self.name
                )));
            }
            if self.mul(g, self.inv(g)) != e || self.mul(self.inv(g), g) != e {
                return Err(Error::invariant(format!(
                    "{}: inverse law fails at {g:?}",
                    self.name
                )));
            }
        }
        let assoc = |g: Elem, h: Elem, k: Elem| {
            if self.mul(self.mul(g, h), k) == self.mul(g, self.mul(h, k)) {
                Ok(())
            } else {
                Err(Error::invariant(format!(
                    "{}: associativity fails at ({g:?}, {h:?}, {k:?})",
                    self.name
                )))
            }
        };
        if self.order <= exhaustive_up_to {
            for g in self.elements() {
                for h in self.elements() {
                    for k in self.elements() {
                        assoc(g, h, k)?;
                    }
                }
            }
        } else {
            let mut rng = rand::rngs::StdRng::seed_from_u64(0x5eed);
            for _ in 0..10_000 {
                let mut pick = || Elem(rng.random_range(0..self.order) as u16);
                assoc(pick(), pick(), pick())?;
            }
        }
        Ok(())
    }
}

//! Finite posets and lattices.
//!
//! Carriers are dense indices `0..n`; the order is an explicit truth table.
//! Subsets of a carrier are [`Bits`] and every derived family (downsets,
//! cuts) is sorted in numeric `Bits` order, so two runs of any construction
//! produce identical element indexing. That canonicity is what makes the
//! downstream functor-law checks plain table comparisons.

use crate::bits::Bits;
use crate::error::{Error, Result};
use crate::limits::{self, guard_carrier};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FinPoset {
    n: usize,
    leq: Vec<bool>,
}

impl FinPoset {
    /// Builds a poset from an `n`×`n` row-major table (`leq[a*n+b]` means `a ≤ b`),
    /// rejecting tables that are not reflexive, antisymmetric, and transitive.
    pub fn new(n: usize, leq: Vec<bool>) -> Result<Self> {
        guard_carrier(n, limits::MAX_CARRIER)?;
        if leq.len() != n * n {
            return Err(Error::InvalidPoset(format!(
                "table has {} entries, expected {}",
                leq.len(),
                n * n
            )));
        }
        let p = FinPoset { n, leq };
        for a in 0..n {
            if !p.leq(a, a) {
                return Err(Error::InvalidPoset(format!("not reflexive at {a}")));
            }
        }
        for a in 0..n {
            for b in 0..n {
                if a != b && p.leq(a, b) && p.leq(b, a) {
                    return Err(Error::InvalidPoset(format!("not antisymmetric at ({a},{b})")));
                }
                for c in 0..n {
                    if p.leq(a, b) && p.leq(b, c) && !p.leq(a, c) {
                        return Err(Error::InvalidPoset(format!(
                            "not transitive at ({a},{b},{c})"
                        )));
                    }
                }
            }
        }
        Ok(p)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a * self.n + b]
    }

    #[inline]
    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.leq(a, b)
    }

    pub fn chain(n: usize) -> Self {
        let mut leq = vec![false; n * n];
        for a in 0..n {
            for b in a..n {
                leq[a * n + b] = true;
            }
        }
        FinPoset { n, leq }
    }

    pub fn antichain(n: usize) -> Self {
        let mut leq = vec![false; n * n];
        for a in 0..n {
            leq[a * n + a] = true;
        }
        FinPoset { n, leq }
    }

    /// Cover pairs `(a, b)` with `a ⋖ b`: `a < b` with nothing strictly between.
    pub fn covers(&self) -> Vec<(u32, u32)> {
        let mut out = Vec::new();
        for a in 0..self.n {
            for b in 0..self.n {
                if self.lt(a, b)
                    && !(0..self.n).any(|c| self.lt(a, c) && self.lt(c, b))
                {
                    out.push((a as u32, b as u32));
                }
            }
        }
        out
    }

    pub fn down_set(&self, x: usize) -> Bits {
        let mut b = Bits::empty(self.n);
        for y in 0..self.n {
            if self.leq(y, x) {
                b.insert(y);
            }
        }
        b
    }

    pub fn up_set(&self, x: usize) -> Bits {
        let mut b = Bits::empty(self.n);
        for y in 0..self.n {
            if self.leq(x, y) {
                b.insert(y);
            }
        }
        b
    }

    /// Indices sorted by the size of their principal downset; any linear
    /// extension works for the ideal enumeration below.
    fn linear_extension(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.n).collect();
        order.sort_by_key(|&x| self.down_set(x).count());
        order
    }

    pub fn lower_bounds(&self, of: &Bits) -> Bits {
        let mut b = Bits::full(self.n);
        for x in of.iter() {
            b = b.intersection(&self.down_set(x));
        }
        b
    }

    pub fn upper_bounds(&self, of: &Bits) -> Bits {
        let mut b = Bits::full(self.n);
        for x in of.iter() {
            b = b.intersection(&self.up_set(x));
        }
        b
    }
}

/// All down-closed subsets, in ascending numeric order.
pub fn downsets(p: &FinPoset) -> Result<Vec<Bits>> {
    let order = p.linear_extension();
    let mut acc: Vec<Bits> = vec![Bits::empty(p.n())];
    // Process elements in a linear extension; an element may join an ideal
    // only if all its strict lower bounds already did.
    for &x in &order {
        let below = p.down_set(x);
        let mut next = Vec::with_capacity(acc.len() * 2);
        for ideal in acc {
            let mut can_add = true;
            for y in below.iter() {
                if y != x && !ideal.contains(y) {
                    can_add = false;
                    break;
                }
            }
            if can_add {
                let mut with = ideal.clone();
                with.insert(x);
                next.push(ideal);
                next.push(with);
            } else {
                next.push(ideal);
            }
        }
        guard_carrier(next.len(), limits::MAX_CARRIER)?;
        acc = next;
    }
    acc.sort();
    Ok(acc)
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FinLattice {
    poset: FinPoset,
    meet: Vec<u32>,
    join: Vec<u32>,
    bottom: u32,
    top: u32,
}

impl FinLattice {
    /// Computes meet/join tables from the order, rejecting posets where some
    /// pair lacks a greatest lower or least upper bound.
    pub fn from_poset(poset: FinPoset) -> Result<Self> {
        let n = poset.n();
        if n == 0 {
            return Err(Error::InvalidLattice("empty carrier".into()));
        }
        let mut meet = vec![0u32; n * n];
        let mut join = vec![0u32; n * n];
        for a in 0..n {
            for b in 0..n {
                meet[a * n + b] = bound(&poset, a, b, true)?;
                join[a * n + b] = bound(&poset, a, b, false)?;
            }
        }
        let bottom = (0..n)
            .find(|&x| (0..n).all(|y| poset.leq(x, y)))
            .ok_or_else(|| Error::InvalidLattice("no bottom".into()))? as u32;
        let top = (0..n)
            .find(|&x| (0..n).all(|y| poset.leq(y, x)))
            .ok_or_else(|| Error::InvalidLattice("no top".into()))? as u32;
        Ok(FinLattice {
            poset,
            meet,
            join,
            bottom,
            top,
        })
    }

    pub fn from_leq(n: usize, leq: Vec<bool>) -> Result<Self> {
        FinLattice::from_poset(FinPoset::new(n, leq)?)
    }

    pub fn poset(&self) -> &FinPoset {
        &self.poset
    }

    pub fn n(&self) -> usize {
        self.poset.n()
    }

    #[inline]
    pub fn leq(&self, a: u32, b: u32) -> bool {
        self.poset.leq(a as usize, b as usize)
    }

    #[inline]
    pub fn meet(&self, a: u32, b: u32) -> u32 {
        self.meet[a as usize * self.n() + b as usize]
    }

    #[inline]
    pub fn join(&self, a: u32, b: u32) -> u32 {
        self.join[a as usize * self.n() + b as usize]
    }

    pub fn bottom(&self) -> u32 {
        self.bottom
    }

    pub fn top(&self) -> u32 {
        self.top
    }

    pub fn elements(&self) -> impl Iterator<Item = u32> + '_ {
        0..self.n() as u32
    }

    pub fn meet_of(&self, items: impl IntoIterator<Item = u32>) -> u32 {
        items.into_iter().fold(self.top, |acc, x| self.meet(acc, x))
    }

    pub fn join_of(&self, items: impl IntoIterator<Item = u32>) -> u32 {
        items
            .into_iter()
            .fold(self.bottom, |acc, x| self.join(acc, x))
    }

    pub fn chain(n: usize) -> Self {
        FinLattice::from_poset(FinPoset::chain(n)).expect("chains are lattices")
    }

    /// Powerset of `k` generators; element `i` is the subset with bit pattern `i`.
    pub fn powerset(k: usize) -> Result<Self> {
        guard_carrier(
            1usize.checked_shl(k as u32).unwrap_or(usize::MAX),
            limits::MAX_CARRIER,
        )?;
        let n = 1 << k;
        let mut leq = vec![false; n * n];
        for a in 0..n {
            for b in 0..n {
                leq[a * n + b] = a & !b == 0;
            }
        }
        FinLattice::from_leq(n, leq)
    }

    /// First failing triple of `a ∧ (b ∨ c) = (a ∧ b) ∨ (a ∧ c)`, if any.
    pub fn distributivity_witness(&self) -> Option<(u32, u32, u32)> {
        for a in self.elements() {
            for b in self.elements() {
                for c in self.elements() {
                    let lhs = self.meet(a, self.join(b, c));
                    let rhs = self.join(self.meet(a, b), self.meet(a, c));
                    if lhs != rhs {
                        return Some((a, b, c));
                    }
                }
            }
        }
        None
    }

    pub fn is_distributive(&self) -> bool {
        self.distributivity_witness().is_none()
    }

    pub fn complement(&self, a: u32) -> Option<u32> {
        self.elements()
            .find(|&b| self.meet(a, b) == self.bottom && self.join(a, b) == self.top)
    }

    pub fn is_boolean(&self) -> bool {
        self.is_distributive() && self.elements().all(|a| self.complement(a).is_some())
    }

    /// Elements `j ≠ ⊥` with `j = a ∨ b ⟹ j ∈ {a, b}`, for distributive lattices.
    pub fn join_irreducibles(&self) -> Result<Vec<u32>> {
        if let Some(witness) = self.distributivity_witness() {
            return Err(Error::NotDistributive { witness });
        }
        Ok(self
            .elements()
            .filter(|&j| {
                j != self.bottom
                    && self
                        .elements()
                        .all(|a| self.elements().all(|b| self.join(a, b) != j || a == j || b == j))
            })
            .collect())
    }

    /// Largest element strictly below a join-irreducible: the join of
    /// everything under it.
    pub fn lower_residue(&self, j: u32) -> u32 {
        self.join_of(self.elements().filter(|&x| x != j && self.leq(x, j)))
    }
}

fn bound(poset: &FinPoset, a: usize, b: usize, lower: bool) -> Result<u32> {
    let n = poset.n();
    let ok = |c: usize, x: usize| if lower { poset.leq(c, x) } else { poset.leq(x, c) };
    let mut best: Option<usize> = None;
    for c in 0..n {
        if ok(c, a) && ok(c, b) {
            best = match best {
                None => Some(c),
                Some(d) => {
                    if if lower { poset.leq(d, c) } else { poset.leq(c, d) } {
                        Some(c)
                    } else if if lower { poset.leq(c, d) } else { poset.leq(d, c) } {
                        Some(d)
                    } else {
                        return Err(Error::InvalidLattice(format!(
                            "no {} bound for ({a},{b})",
                            if lower { "greatest lower" } else { "least upper" }
                        )));
                    }
                }
            };
        }
    }
    best.map(|c| c as u32).ok_or_else(|| {
        Error::InvalidLattice(format!(
            "no common {} bound for ({a},{b})",
            if lower { "lower" } else { "upper" }
        ))
    })
}

/// Lattice of all downsets of `p`, ordered by inclusion.
pub fn downset_lattice(p: &FinPoset) -> Result<FinLattice> {
    let family = downsets(p)?;
    lattice_of_family(&family)
}

/// Dedekind–MacNeille completion of an arbitrary finite poset.
///
/// Returns the lattice of cuts `(A, ub A)` with `A = lb(ub A)`, together with
/// the embedding `x ↦ ↓x`. On a poset that is already a lattice the embedding
/// is bijective; the general construction is kept because it doubles as an
/// independent oracle for envelope building.
pub fn macneille_completion(p: &FinPoset) -> Result<(FinLattice, Vec<u32>)> {
    // Every cut is an intersection of principal downsets (the empty
    // intersection giving the full carrier), so close under pairwise
    // intersection.
    let mut family: Vec<Bits> = vec![Bits::full(p.n())];
    for x in 0..p.n() {
        let d = p.down_set(x);
        if !family.contains(&d) {
            family.push(d);
        }
    }
    loop {
        let mut added = false;
        let len = family.len();
        for i in 0..len {
            for j in i + 1..len {
                let inter = family[i].intersection(&family[j]);
                if !family.contains(&inter) {
                    family.push(inter);
                    added = true;
                    guard_carrier(family.len(), limits::MAX_CARRIER)?;
                }
            }
        }
        if !added {
            break;
        }
    }
    family.sort();
    let lattice = lattice_of_family(&family)?;
    let embedding = (0..p.n())
        .map(|x| {
            let d = p.down_set(x);
            family.binary_search(&d).expect("principal downset is a cut") as u32
        })
        .collect();
    Ok((lattice, embedding))
}

/// Builds a lattice from a family of subsets closed under intersection and
/// containing enough joins (least members above unions must exist).
fn lattice_of_family(family: &[Bits]) -> Result<FinLattice> {
    let n = family.len();
    guard_carrier(n, limits::MAX_CARRIER)?;
    let mut leq = vec![false; n * n];
    for (i, a) in family.iter().enumerate() {
        for (j, b) in family.iter().enumerate() {
            leq[i * n + j] = a.is_subset(b);
        }
    }
    FinLattice::from_leq(n, leq)
}

/// Searches for an order isomorphism, returning the element mapping if one
/// exists. Backtracking over rank-compatible assignments; intended for the
/// desk-scale instances the harness generates.
pub fn order_isomorphism(a: &FinLattice, b: &FinLattice) -> Option<Vec<u32>> {
    if a.n() != b.n() {
        return None;
    }
    let n = a.n();
    let sig = |l: &FinLattice, x: u32| {
        let down = l.elements().filter(|&y| l.leq(y, x)).count();
        let up = l.elements().filter(|&y| l.leq(x, y)).count();
        (down, up)
    };
    let sig_a: Vec<_> = (0..n as u32).map(|x| sig(a, x)).collect();
    let sig_b: Vec<_> = (0..n as u32).map(|x| sig(b, x)).collect();
    {
        let mut sa = sig_a.clone();
        let mut sb = sig_b.clone();
        sa.sort_unstable();
        sb.sort_unstable();
        if sa != sb {
            return None;
        }
    }
    let mut order: Vec<u32> = (0..n as u32).collect();
    order.sort_by_key(|&x| sig_a[x as usize].0);
    let mut map = vec![u32::MAX; n];
    let mut used = vec![false; n];
    fn extend(
        a: &FinLattice,
        b: &FinLattice,
        order: &[u32],
        pos: usize,
        sig_a: &[(usize, usize)],
        sig_b: &[(usize, usize)],
        map: &mut Vec<u32>,
        used: &mut Vec<bool>,
    ) -> bool {
        if pos == order.len() {
            return true;
        }
        let x = order[pos];
        for y in 0..b.n() as u32 {
            if used[y as usize] || sig_a[x as usize] != sig_b[y as usize] {
                continue;
            }
            let consistent = order[..pos].iter().all(|&x2| {
                let y2 = map[x2 as usize];
                a.leq(x, x2) == b.leq(y, y2) && a.leq(x2, x) == b.leq(y2, y)
            });
            if consistent {
                map[x as usize] = y;
                used[y as usize] = true;
                if extend(a, b, order, pos + 1, sig_a, sig_b, map, used) {
                    return true;
                }
                used[y as usize] = false;
                map[x as usize] = u32::MAX;
            }
        }
        false
    }
    if extend(a, b, &order, 0, &sig_a, &sig_b, &mut map, &mut used) {
        Some(map)
    } else {
        None
    }
}

//! Finite MT-algebras: the powerset of an atom set carrying a designated
//! subframe of opens, with interior/closure, the element families, the
//! T0/TD predicates, and the spectra `at` and `at_D`.
//!
//! Elements are `u64` masks over atoms, so meets, joins, and complements are
//! single machine operations and all equalities are bit-exact. The carrier
//! being a powerset makes every algebra here spatial; non-spatial algebras
//! are unrepresentable by construction.

use crate::error::{Error, Result};
use crate::frame::{self, Frame, FramePoint};
use crate::limits::{self, guard_carrier};
use crate::order::FinLattice;
use crate::space::{ContMap, FinSpace};

/// An element: the set of atoms below it, as a bitmask.
pub type Elem = u64;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MtAlgebra {
    atoms: usize,
    opens: Vec<Elem>,
}

impl MtAlgebra {
    /// Builds the algebra, rejecting open families that do not contain the
    /// bounds or are not closed under union and intersection, and verifying
    /// the interior operator satisfies the Kuratowski laws.
    pub fn new(atoms: usize, opens: Vec<Elem>) -> Result<Self> {
        if atoms == 0 {
            return Err(Error::InvalidAlgebra(
                "empty atom set (the one-element algebra is only a reflection target)".into(),
            ));
        }
        guard_carrier(atoms, limits::MAX_ATOMS)?;
        Self::build(atoms, opens)
    }

    /// The one-element algebra on no atoms (top = bottom). Produced by the
    /// spatial TD reflection when no atom is locally closed; not accepted as
    /// general input.
    pub fn degenerate() -> Self {
        MtAlgebra {
            atoms: 0,
            opens: vec![0],
        }
    }

    fn build(atoms: usize, mut opens: Vec<Elem>) -> Result<Self> {
        let full = if atoms == 64 { u64::MAX } else { (1 << atoms) - 1 };
        opens.sort_unstable();
        opens.dedup();
        if opens.iter().any(|&u| u & !full != 0) {
            return Err(Error::InvalidAlgebra("open outside the carrier".into()));
        }
        if opens.binary_search(&0).is_err() || opens.binary_search(&full).is_err() {
            return Err(Error::InvalidAlgebra("opens must contain 0 and 1".into()));
        }
        for i in 0..opens.len() {
            for j in i + 1..opens.len() {
                for candidate in [opens[i] | opens[j], opens[i] & opens[j]] {
                    if opens.binary_search(&candidate).is_err() {
                        return Err(Error::InvalidAlgebra(format!(
                            "opens not closed under ∪/∩ at ({:#x}, {:#x})",
                            opens[i], opens[j]
                        )));
                    }
                }
            }
        }
        let algebra = MtAlgebra { atoms, opens };
        algebra.check_kuratowski()?;
        Ok(algebra)
    }

    /// Kuratowski laws for the induced interior; exhaustive on small
    /// carriers. These follow from the subframe closure properties, so a
    /// failure is an internal error, not bad input.
    fn check_kuratowski(&self) -> Result<()> {
        if self.atoms > 8 {
            return Ok(());
        }
        let ok = self.interior(self.full()) == self.full()
            && self
                .elements()
                .all(|a| self.leq(self.interior(a), a) && self.leq(self.interior(a), self.interior(self.interior(a))))
            && self.elements().all(|a| {
                self.elements()
                    .all(|b| self.interior(a & b) == self.interior(a) & self.interior(b))
            });
        if ok {
            Ok(())
        } else {
            Err(Error::InternalInconsistency(
                "interior operator violates a Kuratowski law".into(),
            ))
        }
    }

    pub fn from_space(space: &FinSpace) -> Result<Self> {
        if space.points() == 0 {
            return Ok(MtAlgebra::degenerate());
        }
        Self::build(space.points(), space.opens().to_vec())
    }

    pub fn atoms(&self) -> usize {
        self.atoms
    }

    pub fn full(&self) -> Elem {
        if self.atoms == 0 {
            0
        } else {
            (1u64 << self.atoms) - 1
        }
    }

    pub fn carrier_size(&self) -> usize {
        1 << self.atoms
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        0..=self.full()
    }

    pub fn atom_elems(&self) -> impl Iterator<Item = Elem> {
        let atoms = self.atoms;
        (0..atoms).map(|i| 1u64 << i)
    }

    #[inline]
    pub fn leq(&self, a: Elem, b: Elem) -> bool {
        a & !b == 0
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        self.full() & !a
    }

    pub fn opens(&self) -> &[Elem] {
        &self.opens
    }

    pub fn is_open(&self, a: Elem) -> bool {
        self.opens.binary_search(&a).is_ok()
    }

    pub fn is_closed(&self, a: Elem) -> bool {
        self.is_open(self.neg(a))
    }

    /// `□a`: the largest open below `a`.
    pub fn interior(&self, a: Elem) -> Elem {
        let mut acc = 0;
        for &u in &self.opens {
            if u & !a == 0 {
                acc |= u;
            }
        }
        acc
    }

    /// `◇a = ¬□¬a`: the least closed element above `a`.
    pub fn closure(&self, a: Elem) -> Elem {
        self.neg(self.interior(self.neg(a)))
    }

    pub fn closed_sets(&self) -> Vec<Elem> {
        let mut out: Vec<Elem> = self.opens.iter().map(|&u| self.neg(u)).collect();
        out.sort_unstable();
        out
    }

    /// One atom, both subsets open.
    pub fn point_algebra() -> Self {
        MtAlgebra::new(1, vec![0b0, 0b1]).unwrap()
    }

    /// `n` atoms with only the trivial opens.
    pub fn indiscrete(n: usize) -> Result<Self> {
        let full = (1u64 << n) - 1;
        MtAlgebra::new(n, vec![0, full])
    }

    /// Two atoms `{x, y}` with opens `{∅, {y}, {x,y}}`.
    pub fn sierpinski() -> Self {
        MtAlgebra::new(2, vec![0b00, 0b10, 0b11]).unwrap()
    }

    pub fn discrete(n: usize) -> Result<Self> {
        guard_carrier(n, limits::MAX_ATOMS)?;
        MtAlgebra::new(n, (0..(1u64 << n)).collect())
    }

    /// Every finite powerset algebra is atomic, so `η` is injective and the
    /// algebra is isomorphic to the powerset of its spectrum.
    pub fn is_spatial(&self) -> bool {
        true
    }
}

/// The six element families. `locally_closed` and `constructible` are each
/// computed two independent ways and cross-compared before being returned.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Families {
    pub opens: Vec<Elem>,
    pub closed: Vec<Elem>,
    pub locally_closed: Vec<Elem>,
    pub constructible: Vec<Elem>,
    pub saturated: Vec<Elem>,
    pub weakly_locally_closed: Vec<Elem>,
}

fn close_under(mut family: Vec<Elem>, ops: &[fn(Elem, Elem) -> Elem]) -> Vec<Elem> {
    family.sort_unstable();
    family.dedup();
    loop {
        let mut added = false;
        let len = family.len();
        for i in 0..len {
            for j in 0..len {
                for op in ops {
                    let x = op(family[i], family[j]);
                    if family.binary_search(&x).is_err() {
                        family.push(x);
                        family.sort_unstable();
                        added = true;
                    }
                }
            }
        }
        if !added {
            return family;
        }
    }
}

pub fn element_families(m: &MtAlgebra) -> Result<Families> {
    guard_carrier(m.atoms, 12)?;
    let opens = m.opens.to_vec();
    let closed = m.closed_sets();
    // Locally closed, as open ∧ closed…
    let mut lc: Vec<Elem> = opens
        .iter()
        .flat_map(|&u| closed.iter().map(move |&c| u & c))
        .collect();
    lc.sort_unstable();
    lc.dedup();
    // …and independently as open ∧ closure(arbitrary element).
    let mut lc2: Vec<Elem> = opens
        .iter()
        .flat_map(|&u| m.elements().map(move |x| (u, x)))
        .map(|(u, x)| u & m.closure(x))
        .collect();
    lc2.sort_unstable();
    lc2.dedup();
    if lc != lc2 {
        return Err(Error::InternalInconsistency(
            "the two descriptions of locally closed elements disagree".into(),
        ));
    }
    // Constructible: finite joins of locally closed elements…
    let cons = close_under(lc.clone(), &[|a, b| a | b]);
    // …equivalently the boolean subalgebra generated by the opens.
    let full = m.full();
    let with_negs: Vec<Elem> = opens
        .iter()
        .copied()
        .chain(opens.iter().map(|&u| full & !u))
        .collect();
    let cons2 = close_under(with_negs, &[|a, b| a | b, |a, b| a & b]);
    if cons != cons2 {
        return Err(Error::InternalInconsistency(
            "constructible elements differ from the subalgebra generated by opens".into(),
        ));
    }
    let saturated = close_under(opens.clone(), &[|a, b| a & b]);
    let mut wlc: Vec<Elem> = saturated
        .iter()
        .flat_map(|&s| closed.iter().map(move |&c| s & c))
        .collect();
    wlc.sort_unstable();
    wlc.dedup();
    Ok(Families {
        opens,
        closed,
        locally_closed: lc,
        constructible: cons,
        saturated,
        weakly_locally_closed: wlc,
    })
}

fn join_generates(family: &[Elem], m: &MtAlgebra) -> bool {
    m.elements().all(|a| {
        let mut acc = 0;
        for &x in family {
            if x & !a == 0 {
                acc |= x;
            }
        }
        acc == a
    })
}

/// TD: locally closed elements join-generate the algebra.
pub fn is_td(m: &MtAlgebra) -> Result<bool> {
    let fam = element_families(m)?;
    Ok(join_generates(&fam.locally_closed, m))
}

/// T0: weakly locally closed elements join-generate the algebra.
pub fn is_t0(m: &MtAlgebra) -> Result<bool> {
    let fam = element_families(m)?;
    Ok(join_generates(&fam.weakly_locally_closed, m))
}

/// `η(a)`: the set of atoms below `a`. With the powerset carrier this is the
/// mask itself, returned as atom indices.
pub fn eta(m: &MtAlgebra, a: Elem) -> Vec<usize> {
    (0..m.atoms()).filter(|&i| a >> i & 1 == 1).collect()
}

/// The spectrum: atoms topologized by the images of open elements.
pub fn at_space(m: &MtAlgebra) -> Result<FinSpace> {
    FinSpace::new(m.atoms(), m.opens.to_vec())
}

/// Locally closed atoms, as element masks.
pub fn locally_closed_atoms(m: &MtAlgebra) -> Result<Vec<Elem>> {
    let lc = element_families(m)?.locally_closed;
    Ok(m.atom_elems().filter(|x| lc.binary_search(x).is_ok()).collect())
}

/// The TD-spectrum: subspace of `at` on the locally closed atoms. Also
/// returns the inclusion (new point index → atom index).
pub fn atd_space(m: &MtAlgebra) -> Result<(FinSpace, Vec<u32>)> {
    let lc_atoms = locally_closed_atoms(m)?;
    let keep: Vec<usize> = (0..m.atoms())
        .filter(|&i| lc_atoms.contains(&(1u64 << i)))
        .collect();
    at_space(m)?.subspace(&keep)
}

/// The frame of open elements, with the translation table element index →
/// element mask.
pub fn open_frame(m: &MtAlgebra) -> Result<(Frame, Vec<Elem>)> {
    let opens = m.opens.to_vec();
    let n = opens.len();
    let mut leq = vec![false; n * n];
    for (i, &u) in opens.iter().enumerate() {
        for (j, &v) in opens.iter().enumerate() {
            leq[i * n + j] = u & !v == 0;
        }
    }
    let frame = Frame::new(FinLattice::from_leq(n, leq)?)?;
    Ok((frame, opens))
}

/// `θ : at M → pt 𝒪M`, sending an atom to the point whose filter is the
/// opens above it.
pub fn theta(m: &MtAlgebra) -> Result<ContMap> {
    let (frame, masks) = open_frame(m)?;
    let primes = frame::prime_elements(&frame);
    let source = at_space(m)?;
    let target = frame::pt_space(&frame)?;
    let map = (0..m.atoms())
        .map(|i| {
            let x = 1u64 << i;
            // The prime corresponding to ↑x ∩ 𝒪M is the join of the opens
            // not above x.
            let p = frame.join_of(
                frame
                    .elements()
                    .filter(|&u| masks[u as usize] & x == 0),
            );
            primes
                .iter()
                .position(|&q| q == p)
                .map(|idx| idx as u32)
                .ok_or_else(|| {
                    Error::InternalInconsistency("θ landed outside the spectrum".into())
                })
        })
        .collect::<Result<Vec<u32>>>()?;
    ContMap::new(source, target, map)
}

/// The restriction `θ' : at_D M → pt_D 𝒪M`. Computed for any algebra; the
/// homeomorphism guarantee needs T0 and is what the harness checks.
pub fn theta_prime(m: &MtAlgebra) -> Result<ContMap> {
    let theta = theta(m)?;
    let (frame, _) = open_frame(m)?;
    let primes = frame::prime_elements(&frame);
    let slicing: Vec<u32> = frame::slicing_filters(&frame)?
        .into_iter()
        .map(|pt| pt.prime)
        .collect();
    let keep_target: Vec<usize> = primes
        .iter()
        .enumerate()
        .filter(|(_, p)| slicing.contains(p))
        .map(|(i, _)| i)
        .collect();
    let (target, target_incl) = theta.target().subspace(&keep_target)?;
    let (source, source_incl) = atd_space(m)?;
    let map = source_incl
        .iter()
        .map(|&atom| {
            let image = theta.apply(atom as usize);
            target_incl
                .iter()
                .position(|&t| t == image)
                .map(|i| i as u32)
                .ok_or(Error::NotSlicing)
        })
        .collect::<Result<Vec<u32>>>()?;
    ContMap::new(source, target, map)
}

/// Inverse of `θ'` on points: from a slicing filter of `𝒪M`, the meet of the
/// filter with the complements of the non-members. For a T0 algebra the
/// result is a locally closed atom whose open upset is exactly the filter;
/// all three facts are re-verified.
pub fn witness_atom(m: &MtAlgebra, filter: &FramePoint) -> Result<Elem> {
    if !is_t0(m)? {
        return Err(Error::NotT0);
    }
    let (frame, masks) = open_frame(m)?;
    let slicing = frame::slicing_filters(&frame)?;
    if !slicing.iter().any(|pt| pt.prime == filter.prime) {
        return Err(Error::NotSlicing);
    }
    let mut x = m.full();
    for u in frame.elements() {
        if filter.filter.contains(u as usize) {
            x &= masks[u as usize];
        } else {
            x &= m.neg(masks[u as usize]);
        }
    }
    if x.count_ones() != 1 {
        return Err(Error::InternalInconsistency(format!(
            "witness {x:#x} is not an atom"
        )));
    }
    for u in frame.elements() {
        let above = masks[u as usize] & x == x;
        if above != filter.filter.contains(u as usize) {
            return Err(Error::InternalInconsistency(
                "witness atom does not recover the filter".into(),
            ));
        }
    }
    let lc = element_families(m)?.locally_closed;
    if lc.binary_search(&x).is_err() {
        return Err(Error::InternalInconsistency(
            "witness atom is not locally closed".into(),
        ));
    }
    Ok(x)
}

/// For a T0 algebra, whether the biconditional “x is an atom iff for every
/// open u, x ≤ u ⟺ x ≰ ¬u” holds for every element.
pub fn atom_t0_characterization(m: &MtAlgebra) -> Result<bool> {
    if !is_t0(m)? {
        return Err(Error::NotT0);
    }
    Ok(atom_characterization_witness(m).is_none())
}

/// First element violating the biconditional above, with no T0 gate; used to
/// demonstrate that the hypothesis is needed.
pub fn atom_characterization_witness(m: &MtAlgebra) -> Option<Elem> {
    m.elements().find(|&x| {
        let is_atom = x.count_ones() == 1;
        let condition = m
            .opens
            .iter()
            .all(|&u| (m.leq(x, u)) == !m.leq(x, m.neg(u)));
        is_atom != condition
    })
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum MtMorphismViolation {
    Shape,
    Bottom,
    Top,
    Complement(Elem),
    Join(Elem, Elem),
    Interior(Elem),
}

/// A complete boolean homomorphism `h` with `h(□a) ≤ □h(a)`, stored as a
/// full element table indexed by source mask.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MtMorphism {
    source: MtAlgebra,
    target: MtAlgebra,
    map: Vec<Elem>,
}

impl MtMorphism {
    pub fn new(source: MtAlgebra, target: MtAlgebra, map: Vec<Elem>) -> Result<Self> {
        let candidate = MtMorphism { source, target, map };
        match candidate.violation() {
            None => Ok(candidate),
            Some(v) => Err(Error::NotMtMorphism(format!("{v:?}"))),
        }
    }

    /// Unvalidated candidate; `violation` reports on it.
    pub fn candidate(source: MtAlgebra, target: MtAlgebra, map: Vec<Elem>) -> Self {
        MtMorphism { source, target, map }
    }

    pub fn source(&self) -> &MtAlgebra {
        &self.source
    }

    pub fn target(&self) -> &MtAlgebra {
        &self.target
    }

    pub fn table(&self) -> &[Elem] {
        &self.map
    }

    #[inline]
    pub fn apply(&self, a: Elem) -> Elem {
        self.map[a as usize]
    }

    pub fn identity(m: &MtAlgebra) -> Self {
        MtMorphism {
            source: m.clone(),
            target: m.clone(),
            map: m.elements().collect(),
        }
    }

    pub fn compose(first: &MtMorphism, then: &MtMorphism) -> Result<MtMorphism> {
        if first.target != then.source {
            return Err(Error::SourceTargetMismatch);
        }
        MtMorphism::new(
            first.source.clone(),
            then.target.clone(),
            first.map.iter().map(|&a| then.apply(a)).collect(),
        )
    }

    pub fn violation(&self) -> Option<MtMorphismViolation> {
        let (src, tgt) = (&self.source, &self.target);
        if self.map.len() != src.carrier_size()
            || self.map.iter().any(|&x| x & !tgt.full() != 0)
        {
            return Some(MtMorphismViolation::Shape);
        }
        if self.apply(0) != 0 {
            return Some(MtMorphismViolation::Bottom);
        }
        if self.apply(src.full()) != tgt.full() {
            return Some(MtMorphismViolation::Top);
        }
        for a in src.elements() {
            if self.apply(src.neg(a)) != tgt.neg(self.apply(a)) {
                return Some(MtMorphismViolation::Complement(a));
            }
        }
        for a in src.elements() {
            for b in src.elements() {
                if self.apply(a | b) != self.apply(a) | self.apply(b) {
                    return Some(MtMorphismViolation::Join(a, b));
                }
            }
        }
        for a in src.elements() {
            if !tgt.leq(self.apply(src.interior(a)), tgt.interior(self.apply(a))) {
                return Some(MtMorphismViolation::Interior(a));
            }
        }
        None
    }

    pub fn is_mt_morphism(&self) -> bool {
        self.violation().is_none()
    }

    /// `f*(x) = ⋀{a | x ≤ f(a)}`, tabulated over the target carrier.
    pub fn left_adjoint(&self) -> Vec<Elem> {
        self.target
            .elements()
            .map(|x| {
                let mut acc = self.source.full();
                for a in self.source.elements() {
                    if self.target.leq(x, self.apply(a)) {
                        acc &= a;
                    }
                }
                acc
            })
            .collect()
    }

    /// The adjunction `f*(x) ≤ a ⟺ x ≤ f(a)`, checked over all pairs.
    pub fn adjunction_holds(&self) -> bool {
        let adj = self.left_adjoint();
        self.target.elements().all(|x| {
            self.source
                .elements()
                .all(|a| self.source.leq(adj[x as usize], a) == self.target.leq(x, self.apply(a)))
        })
    }

    /// Restriction of the left adjoint to atoms: the dual continuous map
    /// `at N → at M`.
    pub fn dual_map(&self) -> Result<ContMap> {
        let adj = self.left_adjoint();
        let source = at_space(&self.target)?;
        let target = at_space(&self.source)?;
        let map = (0..self.target.atoms())
            .map(|i| {
                let image = adj[(1usize << i) as usize];
                if image.count_ones() != 1 {
                    return Err(Error::InternalInconsistency(
                        "left adjoint sent an atom off the atom set".into(),
                    ));
                }
                Ok(image.trailing_zeros())
            })
            .collect::<Result<Vec<u32>>>()?;
        ContMap::new(source, target, map)
    }
}

/// All MT-morphisms `M → N`: one per continuous map `at N → at M`, via
/// preimage.
pub fn enumerate_mt_morphisms(source: &MtAlgebra, target: &MtAlgebra) -> Result<Vec<MtMorphism>> {
    let m = source.atoms();
    let n = target.atoms();
    if m == 0 && n > 0 {
        return Ok(Vec::new()); // nothing maps the empty atom set onto a nonempty one
    }
    let candidates = (m.max(1) as u64).checked_pow(n as u32).unwrap_or(u64::MAX);
    guard_carrier(candidates as usize, limits::MAX_CANDIDATES)?;
    let mut out = Vec::new();
    for code in 0..candidates {
        let mut point_map = Vec::with_capacity(n);
        let mut c = code;
        for _ in 0..n {
            point_map.push((c % m.max(1) as u64) as usize);
            c /= m.max(1) as u64;
        }
        let table: Vec<Elem> = source
            .elements()
            .map(|a| {
                let mut img = 0u64;
                for (y, &x) in point_map.iter().enumerate() {
                    if a >> x & 1 == 1 {
                        img |= 1 << y;
                    }
                }
                img
            })
            .collect();
        let candidate = MtMorphism::candidate(source.clone(), target.clone(), table);
        if candidate.is_mt_morphism() {
            out.push(candidate);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m4() -> MtAlgebra {
        MtAlgebra::indiscrete(2).unwrap()
    }

    #[test]
    fn constructor_rejects_bad_families() {
        assert!(MtAlgebra::new(0, vec![0]).is_err());
        assert!(MtAlgebra::new(2, vec![0b00]).is_err()); // missing top
        assert!(MtAlgebra::new(2, vec![0b00, 0b01, 0b10]).is_err()); // missing top
        assert!(MtAlgebra::new(3, vec![0b000, 0b001, 0b010, 0b111]).is_err()); // no union
    }

    #[test]
    fn interior_closure_examples() {
        let m = m4();
        assert_eq!(m.interior(0b01), 0); // □{p} = 0
        assert_eq!(m.closure(0b01), 0b11); // ◇{p} = 1
        let s = MtAlgebra::sierpinski();
        assert_eq!(s.interior(0b01), 0); // □{x} = 0
        assert_eq!(s.interior(0b10), 0b10); // □{y} = {y}
        for m in [m4(), MtAlgebra::sierpinski(), MtAlgebra::point_algebra()] {
            assert_eq!(m.interior(m.full()), m.full());
            assert_eq!(m.closure(0), 0);
        }
    }

    #[test]
    fn kuratowski_suite() {
        for m in [m4(), MtAlgebra::sierpinski(), MtAlgebra::discrete(3).unwrap()] {
            for a in m.elements() {
                assert!(m.leq(m.interior(a), a));
                assert_eq!(m.interior(m.interior(a)), m.interior(a));
                for b in m.elements() {
                    assert_eq!(m.interior(a & b), m.interior(a) & m.interior(b));
                }
                // □ is right adjoint to the inclusion of opens.
                for &u in m.opens() {
                    assert_eq!(m.leq(u, m.interior(a)), m.leq(u, a));
                }
            }
        }
    }

    #[test]
    fn families_examples() {
        let fam = element_families(&m4()).unwrap();
        assert_eq!(fam.locally_closed, vec![0b00, 0b11]);
        let fam = element_families(&MtAlgebra::sierpinski()).unwrap();
        assert_eq!(fam.locally_closed, vec![0b00, 0b01, 0b10, 0b11]);
        assert_eq!(fam.constructible, vec![0b00, 0b01, 0b10, 0b11]);
        for m in [m4(), MtAlgebra::sierpinski()] {
            let fam = element_families(&m).unwrap();
            for &u in &fam.opens {
                assert!(fam.locally_closed.binary_search(&u).is_ok());
            }
            for &c in &fam.closed {
                assert!(fam.locally_closed.binary_search(&c).is_ok());
            }
        }
    }

    #[test]
    fn separation_examples() {
        assert!(!is_td(&m4()).unwrap());
        assert!(!is_t0(&m4()).unwrap());
        assert!(is_td(&MtAlgebra::sierpinski()).unwrap());
        assert!(is_td(&MtAlgebra::point_algebra()).unwrap());
        assert!(is_t0(&MtAlgebra::point_algebra()).unwrap());
        // TD iff every atom is locally closed.
        for m in [m4(), MtAlgebra::sierpinski(), MtAlgebra::discrete(3).unwrap()] {
            let lc = element_families(&m).unwrap().locally_closed;
            let by_atoms = m.atom_elems().all(|x| lc.binary_search(&x).is_ok());
            assert_eq!(is_td(&m).unwrap(), by_atoms);
        }
    }

    #[test]
    fn spectra_examples() {
        let s = at_space(&MtAlgebra::sierpinski()).unwrap();
        assert_eq!(s.opens(), &[0b00, 0b10, 0b11]);
        let ind = at_space(&m4()).unwrap();
        assert_eq!(ind.opens(), &[0b00, 0b11]);
        assert_eq!(at_space(&MtAlgebra::point_algebra()).unwrap().points(), 1);
        // at_D: empty for the indiscrete pair, everything for Sierpiński.
        let (atd, incl) = atd_space(&m4()).unwrap();
        assert_eq!(atd.points(), 0);
        assert!(incl.is_empty());
        let (atd, _) = atd_space(&MtAlgebra::sierpinski()).unwrap();
        assert_eq!(atd.points(), 2);
    }

    #[test]
    fn eta_is_injective_on_every_algebra() {
        for m in [m4(), MtAlgebra::sierpinski(), MtAlgebra::discrete(2).unwrap()] {
            let mut seen: Vec<Vec<usize>> = m.elements().map(|a| eta(&m, a)).collect();
            seen.sort();
            seen.dedup();
            assert_eq!(seen.len(), m.carrier_size());
        }
    }

    #[test]
    fn theta_examples() {
        // Sierpiński: two atoms map bijectively onto the two points.
        let t = theta(&MtAlgebra::sierpinski()).unwrap();
        assert_eq!(t.target().points(), 2);
        let tp = theta_prime(&MtAlgebra::sierpinski()).unwrap();
        assert_eq!(tp.source().points(), 2);
        assert_eq!(tp.target().points(), 2);
        assert!(tp.is_homeomorphism());
        // Indiscrete pair: at_D is empty but pt_D has the slicing filter {1},
        // so θ' is not onto.
        let tp = theta_prime(&m4()).unwrap();
        assert_eq!(tp.source().points(), 0);
        assert_eq!(tp.target().points(), 1);
        // Point algebra: singleton onto singleton.
        let tp = theta_prime(&MtAlgebra::point_algebra()).unwrap();
        assert!(tp.is_homeomorphism());
    }

    #[test]
    fn witness_atom_examples() {
        let s = MtAlgebra::sierpinski();
        let (frame, _) = open_frame(&s).unwrap();
        for point in frame::slicing_filters(&frame).unwrap() {
            let x = witness_atom(&s, &point).unwrap();
            assert_eq!(x.count_ones(), 1);
        }
        // filter {1, {y}} → atom {y}; filter {1} → atom {x}
        let slicing = frame::slicing_filters(&frame).unwrap();
        let atoms: Vec<Elem> = slicing.iter().map(|p| witness_atom(&s, p).unwrap()).collect();
        let mut sorted = atoms.clone();
        sorted.sort_unstable();
        assert_eq!(sorted, vec![0b01, 0b10]);
        // Non-T0 input is rejected.
        let (frame4, _) = open_frame(&m4()).unwrap();
        let pt = frame::slicing_filters(&frame4).unwrap().remove(0);
        assert_eq!(witness_atom(&m4(), &pt), Err(Error::NotT0));
    }

    #[test]
    fn atom_characterization() {
        assert!(atom_t0_characterization(&MtAlgebra::sierpinski()).unwrap());
        assert!(atom_t0_characterization(&MtAlgebra::point_algebra()).unwrap());
        assert_eq!(atom_t0_characterization(&m4()), Err(Error::NotT0));
        // The hypothesis is needed: on the indiscrete pair the biconditional
        // fails at the top element, which satisfies the open condition
        // without being an atom.
        assert_eq!(atom_characterization_witness(&m4()), Some(0b11));
    }

    #[test]
    fn mt_morphism_validation_and_adjoint() {
        let s = MtAlgebra::sierpinski();
        let id = MtMorphism::identity(&s);
        assert!(id.is_mt_morphism());
        assert!(id.adjunction_holds());
        assert_eq!(id.left_adjoint(), s.elements().collect::<Vec<_>>());
        // A non-hom candidate gets a witness.
        let bad = MtMorphism::candidate(s.clone(), s.clone(), vec![0, 0, 0, 3]);
        assert!(bad.violation().is_some());
        // Preimage of a continuous map is an MT-morphism; the adjoint of
        // the inclusion of the open point sends the point back.
        let maps = enumerate_mt_morphisms(&s, &MtAlgebra::point_algebra()).unwrap();
        assert!(!maps.is_empty());
        for f in &maps {
            assert!(f.adjunction_holds());
            assert!(f.dual_map().unwrap().is_continuous());
        }
    }
}

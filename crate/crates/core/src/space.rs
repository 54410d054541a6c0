//! Finite topological spaces and continuous maps, the powerset functor into
//! MT-algebras, soberification, and the TD subspace.
//!
//! Spaces store their open families explicitly (as point masks) rather than
//! a specialization preorder, so non-T0 spaces are first-class values.

use crate::error::{Error, Result};
use crate::frame::{self, Frame};
use crate::limits::{self, guard_carrier};
use crate::mt::{self, Elem, MtAlgebra, MtMorphism};
use crate::order::FinLattice;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FinSpace {
    points: usize,
    opens: Vec<u64>,
}

impl FinSpace {
    pub fn new(points: usize, mut opens: Vec<u64>) -> Result<Self> {
        guard_carrier(points, limits::MAX_ATOMS)?;
        let full = if points == 0 { 0 } else { (1u64 << points) - 1 };
        opens.sort_unstable();
        opens.dedup();
        if opens.iter().any(|&u| u & !full != 0) {
            return Err(Error::InvalidSpace("open outside the point set".into()));
        }
        if opens.binary_search(&0).is_err() || opens.binary_search(&full).is_err() {
            return Err(Error::InvalidSpace("missing ∅ or the full set".into()));
        }
        for i in 0..opens.len() {
            for j in i + 1..opens.len() {
                for candidate in [opens[i] | opens[j], opens[i] & opens[j]] {
                    if opens.binary_search(&candidate).is_err() {
                        return Err(Error::InvalidSpace(format!(
                            "opens not closed under ∪/∩ at ({:#x}, {:#x})",
                            opens[i], opens[j]
                        )));
                    }
                }
            }
        }
        Ok(FinSpace { points, opens })
    }

    pub fn points(&self) -> usize {
        self.points
    }

    pub fn full_mask(&self) -> u64 {
        if self.points == 0 {
            0
        } else {
            (1u64 << self.points) - 1
        }
    }

    pub fn opens(&self) -> &[u64] {
        &self.opens
    }

    pub fn is_open(&self, mask: u64) -> bool {
        self.opens.binary_search(&mask).is_ok()
    }

    pub fn closed_sets(&self) -> Vec<u64> {
        let full = self.full_mask();
        let mut out: Vec<u64> = self.opens.iter().map(|&u| full & !u).collect();
        out.sort_unstable();
        out
    }

    pub fn is_closed(&self, mask: u64) -> bool {
        self.is_open(self.full_mask() & !mask)
    }

    /// Smallest open neighborhood of a point.
    pub fn min_open(&self, x: usize) -> u64 {
        self.opens
            .iter()
            .filter(|&&u| u >> x & 1 == 1)
            .fold(self.full_mask(), |acc, &u| acc & u)
    }

    pub fn closure_of(&self, mask: u64) -> u64 {
        self.closed_sets()
            .into_iter()
            .filter(|&c| mask & !c == 0)
            .fold(self.full_mask(), |acc, c| acc & c)
    }

    pub fn interior_of(&self, mask: u64) -> u64 {
        self.opens
            .iter()
            .filter(|&&u| u & !mask == 0)
            .fold(0, |acc, &u| acc | u)
    }

    /// Subspace on the given points (ascending), plus the inclusion table
    /// (new index → old index).
    pub fn subspace(&self, keep: &[usize]) -> Result<(FinSpace, Vec<u32>)> {
        let mut incl: Vec<u32> = keep.iter().map(|&i| i as u32).collect();
        incl.sort_unstable();
        incl.dedup();
        let reindex = |mask: u64| -> u64 {
            let mut out = 0;
            for (new, &old) in incl.iter().enumerate() {
                if mask >> old & 1 == 1 {
                    out |= 1 << new;
                }
            }
            out
        };
        let opens: Vec<u64> = self.opens.iter().map(|&u| reindex(u)).collect();
        Ok((FinSpace::new(incl.len(), opens)?, incl))
    }

    pub fn discrete(n: usize) -> Result<Self> {
        guard_carrier(n, limits::MAX_ATOMS)?;
        FinSpace::new(n, (0..(1u64 << n)).collect())
    }

    pub fn indiscrete(n: usize) -> Result<Self> {
        let full = if n == 0 { 0 } else { (1u64 << n) - 1 };
        FinSpace::new(n, vec![0, full])
    }

    /// Points `{x, y}` with `{y}` the only nontrivial open.
    pub fn sierpinski() -> Self {
        FinSpace::new(2, vec![0b00, 0b10, 0b11]).unwrap()
    }

    pub fn point() -> Self {
        FinSpace::new(1, vec![0, 1]).unwrap()
    }

    pub fn empty() -> Self {
        FinSpace::new(0, vec![0]).unwrap()
    }

    /// Coproduct: the second summand's points are shifted above the first's.
    pub fn disjoint_union(a: &FinSpace, b: &FinSpace) -> Result<FinSpace> {
        let mut opens = Vec::with_capacity(a.opens.len() * b.opens.len());
        for &u in &a.opens {
            for &v in &b.opens {
                opens.push(u | v << a.points);
            }
        }
        FinSpace::new(a.points + b.points, opens)
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ContMap {
    source: FinSpace,
    target: FinSpace,
    map: Vec<u32>,
}

impl ContMap {
    pub fn new(source: FinSpace, target: FinSpace, map: Vec<u32>) -> Result<Self> {
        if map.len() != source.points() || map.iter().any(|&x| x as usize >= target.points()) {
            return Err(Error::InvalidInput("point table does not fit the spaces".into()));
        }
        let candidate = ContMap { source, target, map };
        match candidate.continuity_violation() {
            None => Ok(candidate),
            Some(open) => Err(Error::NotContinuous { open }),
        }
    }

    pub fn source(&self) -> &FinSpace {
        &self.source
    }

    pub fn target(&self) -> &FinSpace {
        &self.target
    }

    pub fn table(&self) -> &[u32] {
        &self.map
    }

    #[inline]
    pub fn apply(&self, x: usize) -> u32 {
        self.map[x]
    }

    pub fn preimage(&self, mask: u64) -> u64 {
        let mut out = 0;
        for (x, &y) in self.map.iter().enumerate() {
            if mask >> y & 1 == 1 {
                out |= 1 << x;
            }
        }
        out
    }

    pub fn image(&self, mask: u64) -> u64 {
        let mut out = 0;
        for (x, &y) in self.map.iter().enumerate() {
            if mask >> x & 1 == 1 {
                out |= 1 << y;
            }
        }
        out
    }

    fn continuity_violation(&self) -> Option<u64> {
        self.target
            .opens()
            .iter()
            .find(|&&u| !self.source.is_open(self.preimage(u)))
            .copied()
    }

    pub fn is_continuous(&self) -> bool {
        self.continuity_violation().is_none()
    }

    pub fn identity(space: &FinSpace) -> Self {
        ContMap {
            source: space.clone(),
            target: space.clone(),
            map: (0..space.points() as u32).collect(),
        }
    }

    pub fn compose(first: &ContMap, then: &ContMap) -> Result<ContMap> {
        if first.target != then.source {
            return Err(Error::SourceTargetMismatch);
        }
        ContMap::new(
            first.source.clone(),
            then.target.clone(),
            first.map.iter().map(|&x| then.apply(x as usize)).collect(),
        )
    }

    pub fn is_homeomorphism(&self) -> bool {
        if self.source.points() != self.target.points() {
            return false;
        }
        let mut seen = vec![false; self.target.points()];
        for &y in &self.map {
            if seen[y as usize] {
                return false;
            }
            seen[y as usize] = true;
        }
        // Bijective; open images make the inverse continuous.
        self.source.opens().iter().all(|&u| self.target.is_open(self.image(u)))
    }

    pub fn inverse(&self) -> Result<ContMap> {
        if !self.is_homeomorphism() {
            return Err(Error::InvalidInput("not a homeomorphism".into()));
        }
        let mut inv = vec![0u32; self.source.points()];
        for (x, &y) in self.map.iter().enumerate() {
            inv[y as usize] = x as u32;
        }
        ContMap::new(self.target.clone(), self.source.clone(), inv)
    }
}

/// Points `x` with `{x} = U ∩ C` for an open `U` and closed `C`.
pub fn locally_closed_points(space: &FinSpace) -> Vec<usize> {
    let closed = space.closed_sets();
    (0..space.points())
        .filter(|&x| {
            let singleton = 1u64 << x;
            space
                .opens()
                .iter()
                .any(|&u| closed.iter().any(|&c| u & c == singleton))
        })
        .collect()
}

pub fn is_t0_space(space: &FinSpace) -> bool {
    (0..space.points()).all(|x| {
        (x + 1..space.points()).all(|y| {
            space
                .opens()
                .iter()
                .any(|&u| (u >> x & 1) != (u >> y & 1))
        })
    })
}

pub fn is_td_space(space: &FinSpace) -> bool {
    locally_closed_points(space).len() == space.points()
}

/// The powerset MT-algebra of a space: atoms are points, opens are opens.
pub fn powerset_mt(space: &FinSpace) -> Result<MtAlgebra> {
    MtAlgebra::from_space(space)
}

/// The MT-morphism `f⁻¹ : 𝒫Y → 𝒫X` of a continuous map `f : X → Y`.
pub fn powerset_of_map(f: &ContMap) -> Result<MtMorphism> {
    let source = powerset_mt(f.target())?;
    let target = powerset_mt(f.source())?;
    let table: Vec<Elem> = source.elements().map(|s| f.preimage(s)).collect();
    MtMorphism::new(source, target, table)
}

/// The homeomorphism `x ↦ {x}` from a space onto the spectrum of its
/// powerset algebra.
pub fn epsilon(space: &FinSpace) -> Result<ContMap> {
    let target = mt::at_space(&powerset_mt(space)?)?;
    let map = (0..space.points() as u32).collect();
    let eps = ContMap::new(space.clone(), target, map)?;
    if !eps.is_homeomorphism() {
        return Err(Error::InternalInconsistency(
            "unit of the powerset/spectrum duality is not a homeomorphism".into(),
        ));
    }
    Ok(eps)
}

/// The frame of opens, with the translation table element index → mask.
pub fn omega_frame(space: &FinSpace) -> Result<(Frame, Vec<u64>)> {
    let opens = space.opens().to_vec();
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

/// The contravariant frame map `Ωf : ΩY → ΩX` of `f : X → Y`.
pub fn omega_of_map(f: &ContMap) -> Result<frame::FrameMorphism> {
    let (src_frame, src_masks) = omega_frame(f.target())?;
    let (dst_frame, dst_masks) = omega_frame(f.source())?;
    let map = src_masks
        .iter()
        .map(|&v| {
            let u = f.preimage(v);
            dst_masks.iter().position(|&w| w == u).unwrap() as u32
        })
        .collect();
    frame::FrameMorphism::new(src_frame, dst_frame, map)
}

/// Soberification: the spectrum of the frame of opens.
pub fn soberification(space: &FinSpace) -> Result<FinSpace> {
    let (frame, _) = omega_frame(space)?;
    frame::pt_space(&frame)
}

/// The unit `λ_X : X → sX`, `x ↦ {U | x ∈ U}`.
pub fn lambda(space: &FinSpace) -> Result<ContMap> {
    let (frame, masks) = omega_frame(space)?;
    let primes = frame::prime_elements(&frame);
    let target = frame::pt_space(&frame)?;
    let map = (0..space.points())
        .map(|x| {
            // The prime of the neighborhood filter: join of opens missing x.
            let p = frame.join_of(
                frame
                    .elements()
                    .filter(|&u| masks[u as usize] >> x & 1 == 0),
            );
            primes
                .iter()
                .position(|&q| q == p)
                .map(|i| i as u32)
                .ok_or_else(|| {
                    Error::InternalInconsistency("neighborhood filter is not a point".into())
                })
        })
        .collect::<Result<Vec<u32>>>()?;
    ContMap::new(space.clone(), target, map)
}

/// Sobriety, checked independently of `pt`: every irreducible closed set is
/// the closure of exactly one point.
pub fn is_sober(space: &FinSpace) -> bool {
    let closed = space.closed_sets();
    for &c in &closed {
        if c == 0 {
            continue;
        }
        let irreducible = !closed.iter().any(|&a| {
            a != c && a & !c == 0 && closed.iter().any(|&b| b != c && b & !c == 0 && a | b == c)
        });
        if irreducible {
            let generic_points = (0..space.points())
                .filter(|&x| space.closure_of(1 << x) == c)
                .count();
            if generic_points != 1 {
                return false;
            }
        }
    }
    true
}

/// The subspace of locally closed points, plus the inclusion table.
pub fn td_subspace(space: &FinSpace) -> Result<(FinSpace, Vec<u32>)> {
    space.subspace(&locally_closed_points(space))
}

/// The inclusion `X_D ⊆ X` as a continuous map.
pub fn td_inclusion(space: &FinSpace) -> Result<ContMap> {
    let (sub, incl) = td_subspace(space)?;
    ContMap::new(sub, space.clone(), incl)
}

/// First locally closed point whose image is not locally closed, if any.
pub fn locally_closed_map_violation(f: &ContMap) -> Option<usize> {
    let target_lc = locally_closed_points(f.target());
    locally_closed_points(f.source())
        .into_iter()
        .find(|&x| !target_lc.contains(&(f.apply(x) as usize)))
}

pub fn is_locally_closed_map(f: &ContMap) -> bool {
    locally_closed_map_violation(f).is_none()
}

/// All continuous maps `X → Y`.
pub fn enumerate_continuous_maps(source: &FinSpace, target: &FinSpace) -> Result<Vec<ContMap>> {
    let n = source.points();
    let m = target.points();
    if n > 0 && m == 0 {
        return Ok(Vec::new());
    }
    let candidates = (m.max(1) as u64).checked_pow(n as u32).unwrap_or(u64::MAX);
    guard_carrier(candidates as usize, limits::MAX_CANDIDATES)?;
    let mut out = Vec::new();
    for code in 0..candidates {
        let mut map = Vec::with_capacity(n);
        let mut c = code;
        for _ in 0..n {
            map.push((c % m.max(1) as u64) as u32);
            c /= m.max(1) as u64;
        }
        if let Ok(f) = ContMap::new(source.clone(), target.clone(), map) {
            out.push(f);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn space_validation() {
        assert!(FinSpace::new(2, vec![0b00]).is_err());
        assert!(FinSpace::new(2, vec![0b00, 0b01, 0b10]).is_err()); // no union
        assert!(FinSpace::new(1, vec![0, 1, 2]).is_err()); // outside carrier
    }

    #[test]
    fn locally_closed_and_separation() {
        let s = FinSpace::sierpinski();
        assert_eq!(locally_closed_points(&s), vec![0, 1]);
        assert!(is_td_space(&s));
        assert!(is_t0_space(&s));
        let ind = FinSpace::indiscrete(2).unwrap();
        assert!(locally_closed_points(&ind).is_empty());
        assert!(!is_t0_space(&ind));
        assert!(!is_td_space(&ind));
        assert!(is_td_space(&FinSpace::point()));
        // TD implies T0 on every space we can build here.
        for space in [FinSpace::sierpinski(), FinSpace::discrete(3).unwrap()] {
            if is_td_space(&space) {
                assert!(is_t0_space(&space));
            }
        }
    }

    #[test]
    fn powerset_functor() {
        assert_eq!(
            powerset_mt(&FinSpace::sierpinski()).unwrap(),
            MtAlgebra::sierpinski()
        );
        assert_eq!(
            powerset_mt(&FinSpace::indiscrete(2).unwrap()).unwrap(),
            MtAlgebra::indiscrete(2).unwrap()
        );
        // Constant map into the closed point of Sierpiński.
        let c = ContMap::new(FinSpace::point(), FinSpace::sierpinski(), vec![0]).unwrap();
        let pc = powerset_of_map(&c).unwrap();
        assert!(pc.is_mt_morphism());
        assert_eq!(pc.table(), &[0, 1, 0, 1]);
    }

    #[test]
    fn epsilon_examples() {
        for space in [
            FinSpace::point(),
            FinSpace::sierpinski(),
            FinSpace::indiscrete(2).unwrap(),
        ] {
            assert!(epsilon(&space).unwrap().is_homeomorphism());
        }
    }

    #[test]
    fn soberification_examples() {
        // Sierpiński is sober: sX ≅ X via λ.
        let s = FinSpace::sierpinski();
        assert!(is_sober(&s));
        let l = lambda(&s).unwrap();
        assert!(l.is_homeomorphism());
        // The indiscrete pair collapses to a point.
        let ind = FinSpace::indiscrete(2).unwrap();
        assert!(!is_sober(&ind));
        let l = lambda(&ind).unwrap();
        assert_eq!(l.target().points(), 1);
        // One-point space is its own soberification.
        assert_eq!(soberification(&FinSpace::point()).unwrap().points(), 1);
        // λ is a homeomorphism exactly on sober spaces.
        for space in [
            FinSpace::sierpinski(),
            FinSpace::indiscrete(2).unwrap(),
            FinSpace::discrete(3).unwrap(),
        ] {
            assert_eq!(lambda(&space).unwrap().is_homeomorphism(), is_sober(&space));
        }
    }

    #[test]
    fn td_subspace_examples() {
        let (sub, _) = td_subspace(&FinSpace::indiscrete(2).unwrap()).unwrap();
        assert_eq!(sub.points(), 0);
        let (sub, _) = td_subspace(&FinSpace::sierpinski()).unwrap();
        assert_eq!(sub, FinSpace::sierpinski());
        let disc = FinSpace::discrete(2).unwrap();
        let (sub, _) = td_subspace(&disc).unwrap();
        assert_eq!(sub, disc);
    }

    #[test]
    fn locally_closed_map_examples() {
        let s = FinSpace::sierpinski();
        assert!(is_locally_closed_map(&ContMap::identity(&s)));
        // Inclusion of a point into the indiscrete pair: the point is locally
        // closed at home, its image is not.
        let incl = ContMap::new(FinSpace::point(), FinSpace::indiscrete(2).unwrap(), vec![0])
            .unwrap();
        assert_eq!(locally_closed_map_violation(&incl), Some(0));
        // Between TD spaces every continuous map is locally closed.
        for f in enumerate_continuous_maps(&s, &FinSpace::discrete(2).unwrap()).unwrap() {
            assert!(is_locally_closed_map(&f));
        }
    }

    #[test]
    fn disjoint_union_topology() {
        let x = FinSpace::disjoint_union(&FinSpace::sierpinski(), &FinSpace::indiscrete(2).unwrap())
            .unwrap();
        assert_eq!(x.points(), 4);
        let (xd, incl) = td_subspace(&x).unwrap();
        assert_eq!(incl, vec![0, 1]); // only the Sierpiński half survives
        assert_eq!(xd, FinSpace::sierpinski());
    }
}

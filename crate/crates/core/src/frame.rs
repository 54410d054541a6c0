//! Finite frames, frame morphisms, Heyting structure, and the spectra
//! `pt` and `pt_D`.
//!
//! A finite frame is exactly a finite distributive lattice; the constructor
//! verifies distributivity and, on small carriers, the join-infinite
//! distributive law over every subset. Points are kept as their prime
//! elements, with the completely prime filter view derived on demand.

use crate::bits::Bits;
use crate::error::{Error, Result};
use crate::limits::{self, guard_carrier};
use crate::order::FinLattice;
use crate::space::{ContMap, FinSpace};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Frame {
    lattice: FinLattice,
}

impl Frame {
    pub fn new(lattice: FinLattice) -> Result<Self> {
        if let Some(witness) = lattice.distributivity_witness() {
            return Err(Error::NotDistributive { witness });
        }
        let frame = Frame { lattice };
        // Finite distributivity gives the join-infinite law for free; verify
        // it over all subsets while that is cheap.
        if frame.n() <= 12 {
            for a in frame.elements() {
                for mask in 0u32..1 << frame.n() {
                    let members = || (0..frame.n() as u32).filter(move |i| mask >> i & 1 == 1);
                    let lhs = frame.meet(a, frame.lattice.join_of(members()));
                    let rhs = frame.lattice.join_of(members().map(|s| frame.meet(a, s)));
                    if lhs != rhs {
                        return Err(Error::InternalInconsistency(format!(
                            "join-infinite distributive law failed at ({a}, {mask:#b})"
                        )));
                    }
                }
            }
        }
        Ok(frame)
    }

    pub fn from_lattice(lattice: FinLattice) -> Result<Self> {
        Frame::new(lattice)
    }

    pub fn lattice(&self) -> &FinLattice {
        &self.lattice
    }

    pub fn n(&self) -> usize {
        self.lattice.n()
    }

    pub fn leq(&self, a: u32, b: u32) -> bool {
        self.lattice.leq(a, b)
    }

    pub fn meet(&self, a: u32, b: u32) -> u32 {
        self.lattice.meet(a, b)
    }

    pub fn join(&self, a: u32, b: u32) -> u32 {
        self.lattice.join(a, b)
    }

    pub fn bottom(&self) -> u32 {
        self.lattice.bottom()
    }

    pub fn top(&self) -> u32 {
        self.lattice.top()
    }

    pub fn elements(&self) -> impl Iterator<Item = u32> + '_ {
        self.lattice.elements()
    }

    pub fn join_of(&self, items: impl IntoIterator<Item = u32>) -> u32 {
        self.lattice.join_of(items)
    }

    pub fn meet_of(&self, items: impl IntoIterator<Item = u32>) -> u32 {
        self.lattice.meet_of(items)
    }

    /// The chain 0 < m < 1.
    pub fn chain3() -> Frame {
        Frame::new(FinLattice::chain(3)).unwrap()
    }

    /// Four elements with two incomparable middles (opens of the two-point
    /// discrete space).
    pub fn diamond4() -> Frame {
        Frame::new(FinLattice::powerset(2).unwrap()).unwrap()
    }

    pub fn two() -> Frame {
        Frame::new(FinLattice::chain(2)).unwrap()
    }
}

/// Heyting implication `u → v = ⋁{w | w ∧ u ≤ v}`; right adjoint to `∧ u`.
pub fn heyting_implication(frame: &Frame, u: u32, v: u32) -> u32 {
    frame.join_of(frame.elements().filter(|&w| frame.leq(frame.meet(w, u), v)))
}

/// Co-implication `c ← d = ⋀{w | c ≤ d ∨ w}`; left adjoint to `∨ d` on the
/// co-frame side.
pub fn co_implication(frame: &Frame, c: u32, d: u32) -> u32 {
    frame.meet_of(frame.elements().filter(|&w| frame.leq(c, frame.join(d, w))))
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FrameMorphism {
    pub source: Frame,
    pub target: Frame,
    pub map: Vec<u32>,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum FrameMorphismViolation {
    Bottom,
    Top,
    Meet(u32, u32),
    Join(u32, u32),
    JoinFamily(Vec<u32>),
}

impl FrameMorphism {
    pub fn new(source: Frame, target: Frame, map: Vec<u32>) -> Result<Self> {
        if map.len() != source.n() || map.iter().any(|&x| x as usize >= target.n()) {
            return Err(Error::InvalidInput("morphism table does not fit the carriers".into()));
        }
        Ok(FrameMorphism { source, target, map })
    }

    pub fn identity(frame: &Frame) -> Self {
        FrameMorphism {
            source: frame.clone(),
            target: frame.clone(),
            map: (0..frame.n() as u32).collect(),
        }
    }

    #[inline]
    pub fn apply(&self, a: u32) -> u32 {
        self.map[a as usize]
    }

    pub fn compose(first: &FrameMorphism, then: &FrameMorphism) -> Result<FrameMorphism> {
        if first.target != then.source {
            return Err(Error::SourceTargetMismatch);
        }
        Ok(FrameMorphism {
            source: first.source.clone(),
            target: then.target.clone(),
            map: first.map.iter().map(|&a| then.apply(a)).collect(),
        })
    }

    /// First preservation failure, if any. Binary meets/joins plus the bounds
    /// already decide the matter on a finite carrier; on small sources every
    /// subset join is rechecked anyway.
    pub fn violation(&self) -> Option<FrameMorphismViolation> {
        let (src, tgt) = (&self.source, &self.target);
        if self.apply(src.bottom()) != tgt.bottom() {
            return Some(FrameMorphismViolation::Bottom);
        }
        if self.apply(src.top()) != tgt.top() {
            return Some(FrameMorphismViolation::Top);
        }
        for a in src.elements() {
            for b in src.elements() {
                if self.apply(src.meet(a, b)) != tgt.meet(self.apply(a), self.apply(b)) {
                    return Some(FrameMorphismViolation::Meet(a, b));
                }
                if self.apply(src.join(a, b)) != tgt.join(self.apply(a), self.apply(b)) {
                    return Some(FrameMorphismViolation::Join(a, b));
                }
            }
        }
        if src.n() <= 12 {
            for mask in 0u32..1 << src.n() {
                let family: Vec<u32> =
                    (0..src.n() as u32).filter(|i| mask >> i & 1 == 1).collect();
                let lhs = self.apply(src.join_of(family.iter().copied()));
                let rhs = tgt.join_of(family.iter().map(|&a| self.apply(a)));
                if lhs != rhs {
                    return Some(FrameMorphismViolation::JoinFamily(family));
                }
            }
        }
        None
    }

    pub fn is_frame_morphism(&self) -> bool {
        self.violation().is_none()
    }
}

/// A point of a frame: a completely prime filter, stored with its prime
/// element `⋁(L ∖ F)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FramePoint {
    pub prime: u32,
    pub filter: Bits,
}

/// Meet-prime elements: `p ≠ 1` with `a ∧ b ≤ p ⟹ a ≤ p or b ≤ p`.
pub fn prime_elements(frame: &Frame) -> Vec<u32> {
    frame
        .elements()
        .filter(|&p| {
            p != frame.top()
                && frame.elements().all(|a| {
                    frame
                        .elements()
                        .all(|b| !frame.leq(frame.meet(a, b), p) || frame.leq(a, p) || frame.leq(b, p))
                })
        })
        .collect()
}

pub fn point_of_prime(frame: &Frame, prime: u32) -> FramePoint {
    let mut filter = Bits::empty(frame.n());
    for a in frame.elements() {
        if !frame.leq(a, prime) {
            filter.insert(a as usize);
        }
    }
    FramePoint { prime, filter }
}

pub fn prime_of_point(frame: &Frame, point: &FramePoint) -> u32 {
    frame.join_of(frame.elements().filter(|&a| !point.filter.contains(a as usize)))
}

/// Join-prime elements: `x ≠ 0` with `x ≤ a ∨ b ⟹ x ≤ a or x ≤ b`. Their
/// principal upsets are exactly the prime filters; this is the independent
/// route to the points used by the slicing cross-checks.
pub fn join_prime_elements(frame: &Frame) -> Vec<u32> {
    frame
        .elements()
        .filter(|&x| {
            x != frame.bottom()
                && frame.elements().all(|a| {
                    frame
                        .elements()
                        .all(|b| !frame.leq(x, frame.join(a, b)) || frame.leq(x, a) || frame.leq(x, b))
                })
        })
        .collect()
}

/// The spectrum: points are the completely prime filters (one per prime
/// element, ascending), topologized by `σ(a) = {P | a ∈ P}`.
pub fn pt_space(frame: &Frame) -> Result<FinSpace> {
    let primes = prime_elements(frame);
    guard_carrier(primes.len(), limits::MAX_ATOMS)?;
    let opens: Vec<u64> = frame.elements().map(|a| sigma(frame, &primes, a)).collect();
    let space = FinSpace::new(primes.len(), opens)?;
    // σ preserves all joins and finite meets.
    for a in frame.elements() {
        for b in frame.elements() {
            let meet_img = sigma(frame, &primes, frame.meet(a, b));
            let join_img = sigma(frame, &primes, frame.join(a, b));
            if meet_img != sigma(frame, &primes, a) & sigma(frame, &primes, b)
                || join_img != sigma(frame, &primes, a) | sigma(frame, &primes, b)
            {
                return Err(Error::InternalInconsistency(
                    "σ does not preserve meets/joins".into(),
                ));
            }
        }
    }
    Ok(space)
}

/// `σ(a)` as a mask over the given prime list: the points whose filter
/// contains `a`, i.e. the primes not above `a`.
pub fn sigma(frame: &Frame, primes: &[u32], a: u32) -> u64 {
    let mut mask = 0u64;
    for (i, &p) in primes.iter().enumerate() {
        if !frame.leq(a, p) {
            mask |= 1 << i;
        }
    }
    mask
}

/// Slicing filters, computed three independent ways and cross-compared:
/// prime filters splitting a cover pair, covered primes, and completely
/// meet-irreducible primes.
pub fn slicing_filters(frame: &Frame) -> Result<Vec<FramePoint>> {
    let covers = frame.lattice().poset().covers();
    // Route 1: prime filters are the principal upsets of join-primes; slicing
    // asks for a cover pair split by the filter.
    let mut by_filter: Vec<u32> = Vec::new();
    for x in join_prime_elements(frame) {
        let in_filter = |a: u32| frame.leq(x, a);
        if covers.iter().any(|&(a, b)| !in_filter(a) && in_filter(b)) {
            // Translate the filter ↑x to its prime element ⋁{y | x ≰ y}.
            by_filter.push(frame.join_of(frame.elements().filter(|&y| !frame.leq(x, y))));
        }
    }
    by_filter.sort_unstable();
    // Route 2: primes that are covered by some element.
    let primes = prime_elements(frame);
    let by_covered: Vec<u32> = primes
        .iter()
        .copied()
        .filter(|&p| covers.iter().any(|&(a, _)| a == p))
        .collect();
    // Route 3: completely meet-irreducible primes, i.e. the meet of the
    // strict upset stays strictly above.
    let by_irreducible: Vec<u32> = primes
        .iter()
        .copied()
        .filter(|&p| {
            let m = frame.meet_of(frame.elements().filter(|&x| x != p && frame.leq(p, x)));
            m != p
        })
        .collect();
    if by_filter != by_covered || by_covered != by_irreducible {
        return Err(Error::InternalInconsistency(format!(
            "slicing characterizations disagree: {by_filter:?} vs {by_covered:?} vs {by_irreducible:?}"
        )));
    }
    Ok(by_filter
        .into_iter()
        .map(|p| point_of_prime(frame, p))
        .collect())
}

/// The TD-spectrum: subspace of `pt` on the slicing filters, with opens
/// `δ(a) = {x ∈ pt_D | a ∈ x}`.
pub fn ptd_space(frame: &Frame) -> Result<FinSpace> {
    let all = prime_elements(frame);
    let slicing: Vec<u32> = slicing_filters(frame)?.into_iter().map(|pt| pt.prime).collect();
    let keep: Vec<usize> = all
        .iter()
        .enumerate()
        .filter(|(_, p)| slicing.contains(p))
        .map(|(i, _)| i)
        .collect();
    let (space, _) = pt_space(frame)?.subspace(&keep)?;
    Ok(space)
}

/// Whether the preimage of every slicing filter of the target is a slicing
/// filter of the source; `Err(witness)` carries the first failing filter.
pub fn d_morphism_violation(f: &FrameMorphism) -> Result<Option<FramePoint>> {
    if let Some(v) = f.violation() {
        return Err(Error::NotFrameMorphism(format!("{v:?}")));
    }
    let src_slicing: Vec<Bits> = slicing_filters(&f.source)?
        .into_iter()
        .map(|pt| pt.filter)
        .collect();
    for point in slicing_filters(&f.target)? {
        let mut preimage = Bits::empty(f.source.n());
        for a in f.source.elements() {
            if point.filter.contains(f.apply(a) as usize) {
                preimage.insert(a as usize);
            }
        }
        if !src_slicing.contains(&preimage) {
            return Ok(Some(point));
        }
    }
    Ok(None)
}

pub fn is_d_morphism_frame(f: &FrameMorphism) -> Result<bool> {
    Ok(d_morphism_violation(f)?.is_none())
}

/// The continuous map `pt f : pt M → pt L` dual to `f : L → M`, sending a
/// point to its preimage filter.
pub fn pt_of_morphism(f: &FrameMorphism) -> Result<ContMap> {
    let src_primes = prime_elements(&f.target);
    let dst_primes = prime_elements(&f.source);
    let source = pt_space(&f.target)?;
    let target = pt_space(&f.source)?;
    let map = src_primes
        .iter()
        .map(|&q| {
            let p = f
                .source
                .join_of(f.source.elements().filter(|&a| f.target.leq(f.apply(a), q)));
            dst_primes
                .iter()
                .position(|&x| x == p)
                .map(|i| i as u32)
                .ok_or_else(|| {
                    Error::InternalInconsistency("preimage of a point is not a point".into())
                })
        })
        .collect::<Result<Vec<u32>>>()?;
    ContMap::new(source, target, map)
}

/// All frame morphisms `L → M`, via continuity: every such morphism is
/// `σ_M⁻¹ ∘ (t⁻¹ ∘ −) ∘ σ_L` for a unique continuous `t : pt M → pt L`.
pub fn enumerate_frame_morphisms(source: &Frame, target: &Frame) -> Result<Vec<FrameMorphism>> {
    let src_primes = prime_elements(source);
    let tgt_primes = prime_elements(target);
    let candidates = (src_primes.len() as u64)
        .checked_pow(tgt_primes.len() as u32)
        .unwrap_or(u64::MAX);
    if src_primes.is_empty() && !tgt_primes.is_empty() {
        return Ok(Vec::new());
    }
    guard_carrier(candidates as usize, limits::MAX_CANDIDATES)?;
    let src_opens: Vec<u64> = source.elements().map(|a| sigma(source, &src_primes, a)).collect();
    let mut out = Vec::new();
    let total = candidates.max(1);
    for code in 0..total {
        // Decode a function t : tgt_primes → src_primes.
        let mut t = Vec::with_capacity(tgt_primes.len());
        let mut c = code;
        for _ in 0..tgt_primes.len() {
            t.push((c % src_primes.len() as u64) as usize);
            c /= src_primes.len() as u64;
        }
        let preimage = |u: u64| -> u64 {
            let mut mask = 0u64;
            for (q, &p) in t.iter().enumerate() {
                if u >> p & 1 == 1 {
                    mask |= 1 << q;
                }
            }
            mask
        };
        // Continuity: preimages of source opens must be target opens.
        let tgt_opens: Vec<u64> = target.elements().map(|a| sigma(target, &tgt_primes, a)).collect();
        if !src_opens.iter().all(|&u| tgt_opens.contains(&preimage(u))) {
            continue;
        }
        let map: Vec<u32> = source
            .elements()
            .map(|a| {
                let img = preimage(src_opens[a as usize]);
                tgt_opens.iter().position(|&v| v == img).unwrap() as u32
            })
            .collect();
        let morphism = FrameMorphism::new(source.clone(), target.clone(), map)?;
        if morphism.is_frame_morphism() {
            out.push(morphism);
        } else {
            return Err(Error::InternalInconsistency(
                "dual of a continuous map failed frame-morphism validation".into(),
            ));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn heyting_examples() {
        let c3 = Frame::chain3();
        assert_eq!(heyting_implication(&c3, 1, 0), 0); // m → 0 = 0
        for frame in [Frame::chain3(), Frame::diamond4()] {
            for u in frame.elements() {
                assert_eq!(heyting_implication(&frame, u, u), frame.top());
                for v in frame.elements() {
                    let imp = heyting_implication(&frame, u, v);
                    for w in frame.elements() {
                        // adjunction: w ≤ u→v iff w∧u ≤ v
                        assert_eq!(frame.leq(w, imp), frame.leq(frame.meet(w, u), v));
                    }
                    let co = co_implication(&frame, u, v);
                    for w in frame.elements() {
                        assert_eq!(frame.leq(co, w), frame.leq(u, frame.join(v, w)));
                    }
                }
            }
        }
        let d4 = Frame::diamond4();
        // u → v = v for the two incomparable middles (masks 1 and 2).
        assert_eq!(heyting_implication(&d4, 1, 2), 2);
    }

    #[test]
    fn frame_morphism_examples() {
        let c3 = Frame::chain3();
        assert!(FrameMorphism::identity(&c3).is_frame_morphism());
        let two = Frame::two();
        let collapse_up = FrameMorphism::new(c3.clone(), two.clone(), vec![0, 1, 1]).unwrap();
        assert!(collapse_up.is_frame_morphism());
        let collapse_down = FrameMorphism::new(c3.clone(), two.clone(), vec![0, 0, 1]).unwrap();
        assert!(collapse_down.is_frame_morphism());
        let bad = FrameMorphism::new(c3, two, vec![1, 0, 1]).unwrap();
        assert_eq!(bad.violation(), Some(FrameMorphismViolation::Bottom));
    }

    #[test]
    fn prime_examples() {
        let c3 = Frame::chain3();
        assert_eq!(prime_elements(&c3), vec![0, 1]);
        let d4 = Frame::diamond4();
        assert_eq!(prime_elements(&d4), vec![1, 2]);
        let two = Frame::two();
        assert_eq!(prime_elements(&two), vec![0]);
        let pt = point_of_prime(&two, 0);
        assert_eq!(pt.filter.to_indices(), vec![1]);
        assert_eq!(prime_of_point(&two, &pt), 0);
        // bijection both ways
        for frame in [Frame::chain3(), Frame::diamond4()] {
            for p in prime_elements(&frame) {
                assert_eq!(prime_of_point(&frame, &point_of_prime(&frame, p)), p);
            }
        }
    }

    #[test]
    fn pt_space_examples() {
        let sier = pt_space(&Frame::chain3()).unwrap();
        assert_eq!(sier.points(), 2);
        assert_eq!(sier.opens(), &[0b00, 0b01, 0b11]); // Sierpiński
        let disc = pt_space(&Frame::diamond4()).unwrap();
        assert_eq!(disc.points(), 2);
        assert_eq!(disc.opens(), &[0b00, 0b01, 0b10, 0b11]);
        let single = pt_space(&Frame::two()).unwrap();
        assert_eq!(single.points(), 1);
    }

    #[test]
    fn slicing_examples() {
        let c3 = Frame::chain3();
        let slicing = slicing_filters(&c3).unwrap();
        assert_eq!(slicing.len(), 2); // both points slicing
        let two = Frame::two();
        assert_eq!(slicing_filters(&two).unwrap().len(), 1);
        let d4 = Frame::diamond4();
        assert_eq!(slicing_filters(&d4).unwrap().len(), 2);
        // pt_D = pt on these frames
        assert_eq!(ptd_space(&c3).unwrap(), pt_space(&c3).unwrap());
    }

    #[test]
    fn d_morphism_frame_examples() {
        let c3 = Frame::chain3();
        assert!(is_d_morphism_frame(&FrameMorphism::identity(&c3)).unwrap());
        let collapse =
            FrameMorphism::new(c3.clone(), Frame::two(), vec![0, 1, 1]).unwrap();
        assert!(is_d_morphism_frame(&collapse).unwrap());
        let not_frame = FrameMorphism::new(c3, Frame::two(), vec![1, 0, 1]).unwrap();
        assert!(matches!(
            is_d_morphism_frame(&not_frame),
            Err(Error::NotFrameMorphism(_))
        ));
    }

    /// Brute-force oracle: all maps, filtered by the morphism laws.
    fn enumerate_frame_morphisms_oracle(source: &Frame, target: &Frame) -> Vec<Vec<u32>> {
        let mut out = Vec::new();
        let n = source.n();
        let m = target.n() as u64;
        for code in 0..m.pow(n as u32) {
            let mut map = Vec::with_capacity(n);
            let mut c = code;
            for _ in 0..n {
                map.push((c % m) as u32);
                c /= m;
            }
            let f = FrameMorphism::new(source.clone(), target.clone(), map.clone()).unwrap();
            if f.is_frame_morphism() {
                out.push(map);
            }
        }
        out
    }

    #[test]
    fn enumeration_matches_oracle() {
        for (src, tgt) in [
            (Frame::chain3(), Frame::two()),
            (Frame::two(), Frame::chain3()),
            (Frame::chain3(), Frame::diamond4()),
            (Frame::diamond4(), Frame::diamond4()),
        ] {
            let mut fast: Vec<Vec<u32>> = enumerate_frame_morphisms(&src, &tgt)
                .unwrap()
                .into_iter()
                .map(|f| f.map)
                .collect();
            let mut slow = enumerate_frame_morphisms_oracle(&src, &tgt);
            fast.sort();
            slow.sort();
            assert_eq!(fast, slow);
        }
    }

    #[test]
    fn pt_of_morphism_is_continuous() {
        let c3 = Frame::chain3();
        for f in enumerate_frame_morphisms(&c3, &Frame::diamond4()).unwrap() {
            let t = pt_of_morphism(&f).unwrap();
            assert!(t.is_continuous());
        }
    }
}

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::arc::ArcDiagram;
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::tableau::KleinTableau;

/// Indecomposable pairs (ambient nilpotent space, invariant subspace killed
/// by the square of the operator):
///
/// - `P0(m)`: one block of size m with zero subspace.
/// - `P1(m)`: one block of size m, the subspace spanned by its socle.
/// - `P2(m)`, m >= 2: one block of size m, the subspace generated one level
///   above the socle, so the subspace is cyclic of length 2 inside the block.
/// - `B2(m, r)`, 1 <= r <= m-2: blocks of sizes m and r glued by a cyclic
///   length-2 subspace whose generator reaches depth m-2 in the first block
///   and the socle of the second.
///
/// `B2(m, m-1)` is not indecomposable: it splits as `P2(m) + P0(m-1)`, and
/// the hom counts below extend to it consistently with that splitting.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Indec {
    P0(u32),
    P1(u32),
    P2(u32),
    B2(u32, u32),
}

impl Indec {
    pub fn alpha(&self) -> Partition {
        match *self {
            Indec::P0(_) => Partition::empty(),
            Indec::P1(_) => Partition::from_unsorted(vec![1]),
            Indec::P2(_) | Indec::B2(..) => Partition::from_unsorted(vec![2]),
        }
    }

    pub fn beta(&self) -> Partition {
        match *self {
            Indec::P0(m) | Indec::P1(m) | Indec::P2(m) => Partition::from_unsorted(vec![m]),
            Indec::B2(m, r) => Partition::from_unsorted(vec![m, r]),
        }
    }

    pub fn gamma(&self) -> Partition {
        match *self {
            Indec::P0(m) => Partition::from_unsorted(vec![m]),
            Indec::P1(m) => Partition::from_unsorted(vec![m - 1]),
            Indec::P2(m) => Partition::from_unsorted(vec![m - 2]),
            Indec::B2(m, r) => Partition::from_unsorted(vec![m - 1, r - 1]),
        }
    }
}

/// Maps of pairs from `x` to `y`: ambient maps commuting with the operators
/// that carry the subspace of `x` into the subspace of `y`.
pub fn hom_dim(x: Indec, y: Indec) -> u64 {
    use Indec::*;
    let mn = |a: u32, b: u32| a.min(b) as u64;
    match (x, y) {
        (P0(l), P0(m)) => mn(l, m),
        (P0(l), P1(m)) => mn(l, m),
        (P0(l), P2(m)) => mn(l, m),
        (P0(l), B2(m, r)) => mn(l, m) + mn(l, r),
        (P1(l), P0(m)) => mn(l - 1, m),
        (P1(l), P1(m)) => mn(l, m),
        (P1(l), P2(m)) => mn(l, m),
        (P1(l), B2(m, r)) => mn(l, m) + mn(l.saturating_sub(1), r),
        (P2(l), P0(m)) => mn(l.saturating_sub(2), m),
        (P2(l), P1(m)) => mn(l - 1, m),
        (P2(l), P2(m)) => mn(l, m),
        (P2(l), B2(m, r)) => mn(l - 1, m) + mn(l - 1, r),
        (B2(l, t), P0(m)) => mn(l - 1, m) + mn(t.saturating_sub(1), m),
        (B2(l, t), P1(m)) => mn(l - 1, m) + mn(t, m),
        (B2(l, t), P2(m)) => mn(l, m) + mn(t, m),
        (B2(l, t), B2(m, r)) => {
            let cross = u64::from(l > m && t <= r);
            mn(l - 1, m) + mn(t, m) + mn(l - 1, r) + mn(t, r) - cross
        }
    }
}

/// The summands an arc with the given endpoints stands for: a glued pair in
/// general, and the split form when the endpoints are adjacent.
pub fn b2_or_pair(m: u32, r: u32) -> Vec<Indec> {
    debug_assert!(r >= 1 && r < m);
    if r + 2 <= m {
        vec![Indec::B2(m, r)]
    } else {
        vec![Indec::P2(m), Indec::P0(m - 1)]
    }
}

/// A direct sum of indecomposable pairs, kept as a sorted multiset.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Module {
    summands: Vec<Indec>,
}

impl Module {
    pub fn new(mut summands: Vec<Indec>) -> Self {
        summands.sort_unstable();
        Module { summands }
    }

    /// Decomposes the pair described by a subscripted filling: each arc
    /// reaching at least two levels down becomes a glued pair, an arc to the
    /// adjacent level becomes `P2`, each pole becomes `P1`, and the ambient
    /// blocks left over become `P0`.
    pub fn from_klein(k: &KleinTableau) -> Self {
        let mut summands = Vec::new();
        let mut used: Vec<u32> = Vec::new();
        for &(m, r) in k.arcs() {
            if r + 2 <= m {
                summands.push(Indec::B2(m, r));
                used.push(m);
                used.push(r);
            } else {
                summands.push(Indec::P2(m));
                used.push(m);
            }
        }
        for r in k.poles() {
            summands.push(Indec::P1(r));
            used.push(r);
        }
        let mut pool: Vec<u32> = k.beta().parts().to_vec();
        for u in used {
            let i = pool
                .iter()
                .position(|&b| b == u)
                .expect("a valid filling provides an ambient block for every summand");
            pool.swap_remove(i);
        }
        summands.extend(pool.into_iter().map(Indec::P0));
        Module::new(summands)
    }

    pub fn summands(&self) -> &[Indec] {
        &self.summands
    }

    /// Largest ambient block size.
    pub fn ambient_max(&self) -> u32 {
        self.summands
            .iter()
            .map(|s| s.beta().first())
            .max()
            .unwrap_or(0)
    }

    pub fn alpha(&self) -> Partition {
        self.collect(Indec::alpha)
    }

    pub fn beta(&self) -> Partition {
        self.collect(Indec::beta)
    }

    pub fn gamma(&self) -> Partition {
        self.collect(Indec::gamma)
    }

    fn collect(&self, f: impl Fn(&Indec) -> Partition) -> Partition {
        let mut parts = Vec::new();
        for s in &self.summands {
            parts.extend_from_slice(f(s).parts());
        }
        Partition::from_unsorted(parts)
    }

    /// Total hom count into `other`, summed over all summand pairs.
    pub fn hom_to(&self, other: &Module) -> u64 {
        self.summands
            .iter()
            .map(|&x| other.summands.iter().map(|&y| hom_dim(x, y)).sum::<u64>())
            .sum()
    }

    /// Hom count from a single test object.
    pub fn hom_from(&self, x: Indec) -> u64 {
        self.summands.iter().map(|&y| hom_dim(x, y)).sum()
    }

    pub fn dim_end(&self) -> u64 {
        self.hom_to(self)
    }
}

impl fmt::Display for Module {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.summands.is_empty() {
            return write!(f, "0");
        }
        for (i, s) in self.summands.iter().rev().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

impl Serialize for Module {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        self.summands.serialize(ser)
    }
}

impl<'de> Deserialize<'de> for Module {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        Ok(Module::new(Vec::<Indec>::deserialize(de)?))
    }
}

impl fmt::Display for Indec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Indec::P0(m) => write!(f, "P0({m})"),
            Indec::P1(m) => write!(f, "P1({m})"),
            Indec::P2(m) => write!(f, "P2({m})"),
            Indec::B2(m, r) => write!(f, "B2({m},{r})"),
        }
    }
}

impl FromStr for Indec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Malformed(format!("bad summand {s:?}"));
        let (kind, rest) = s.split_once('(').ok_or_else(bad)?;
        let args = rest.strip_suffix(')').ok_or_else(bad)?;
        let nums: Vec<u32> = args
            .split(',')
            .map(|t| t.trim().parse().map_err(|_| bad()))
            .collect::<Result<_>>()?;
        match (kind.trim(), nums.as_slice()) {
            ("P0", [m]) if *m >= 1 => Ok(Indec::P0(*m)),
            ("P1", [m]) if *m >= 1 => Ok(Indec::P1(*m)),
            ("P2", [m]) if *m >= 2 => Ok(Indec::P2(*m)),
            ("B2", [m, r]) if *r >= 1 && r + 2 <= *m => Ok(Indec::B2(*m, *r)),
            _ => Err(bad()),
        }
    }
}

impl Serialize for Indec {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        ser.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Indec {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(de)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Endomorphism count of a plain nilpotent space of the given type.
pub fn dim_end_nilpotent(lambda: &Partition) -> u64 {
    let mut total = 0;
    for &a in lambda.parts() {
        for &b in lambda.parts() {
            total += a.min(b) as u64;
        }
    }
    total
}

/// Orbit dimension of the embedding: endomorphism counts of the subspace and
/// ambient types minus the endomorphism count of the pair.
pub fn orbit_dim_embedding(k: &KleinTableau) -> i64 {
    let m = Module::from_klein(k);
    dim_end_nilpotent(&k.alpha()) as i64 + dim_end_nilpotent(k.beta()) as i64
        - m.dim_end() as i64
}

/// Orbit dimension statistic from moments and crossings. Differs from the
/// embedding count by a constant depending only on the three types.
pub fn orbit_dim_moments(k: &KleinTableau) -> i64 {
    k.beta().moment() as i64
        - k.alpha().moment() as i64
        - k.gamma().moment() as i64
        - ArcDiagram::from(k).crossings() as i64
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableau::LrTableau;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn running_example() -> LrTableau {
        LrTableau::new(p(&[4, 3, 2, 2, 1]), p(&[4, 3, 3, 3, 2, 1]), p(&[5, 4, 3, 3, 2, 1])).unwrap()
    }

    fn seven_rows() -> LrTableau {
        LrTableau::new(
            p(&[6, 5, 4, 3, 2, 1]),
            p(&[6, 5, 4, 4, 3, 2, 1]),
            p(&[7, 6, 5, 4, 3, 2, 1]),
        )
        .unwrap()
    }

    fn module(lr: &LrTableau, arcs: &[(u32, u32)]) -> Module {
        Module::from_klein(&KleinTableau::new(lr.clone(), arcs.to_vec()).unwrap())
    }

    #[test]
    fn decompositions() {
        use Indec::*;
        let lr = running_example();
        let m1 = module(&lr, &[(5, 3), (4, 3)]);
        assert_eq!(
            m1.summands(),
            Module::new(vec![B2(5, 3), P2(4), P0(3), P1(2), P1(1)]).summands()
        );
        let m7 = module(&lr, &[(5, 2), (4, 1)]);
        assert_eq!(
            m7.summands(),
            Module::new(vec![B2(5, 2), B2(4, 1), P1(3), P1(3)]).summands()
        );
        let t = seven_rows();
        let y = module(&t, &[(7, 3), (6, 2), (5, 4)]);
        assert_eq!(
            y.summands(),
            Module::new(vec![B2(7, 3), B2(6, 2), P2(5), P0(4), P1(1)]).summands()
        );
        let z = module(&t, &[(7, 2), (6, 3), (5, 1)]);
        assert_eq!(
            z.summands(),
            Module::new(vec![B2(7, 2), B2(6, 3), B2(5, 1), P1(4)]).summands()
        );
    }

    #[test]
    fn decomposition_recovers_the_types() {
        for lr in [running_example(), seven_rows()] {
            for k in KleinTableau::refinements(&lr) {
                let m = Module::from_klein(&k);
                assert_eq!(&m.alpha(), &k.alpha());
                assert_eq!(&m.beta(), k.beta());
                assert_eq!(&m.gamma(), k.gamma());
            }
        }
    }

    #[test]
    fn hom_values() {
        use Indec::*;
        assert_eq!(hom_dim(B2(6, 3), B2(7, 2)), 12);
        assert_eq!(hom_dim(B2(6, 1), B2(5, 1)), 7);
        let t = seven_rows();
        let y = module(&t, &[(7, 3), (6, 2), (5, 4)]);
        let z = module(&t, &[(7, 2), (6, 3), (5, 1)]);
        assert_eq!(y.hom_from(B2(6, 3)), 42);
        assert_eq!(z.hom_from(B2(6, 3)), 43);
    }

    #[test]
    fn endomorphism_counts() {
        let lr = running_example();
        assert_eq!(module(&lr, &[(5, 3), (4, 3)]).dim_end(), 74);
        assert_eq!(module(&lr, &[(5, 2), (4, 1)]).dim_end(), 79);
        assert_eq!(dim_end_nilpotent(&p(&[2, 2, 1, 1])), 20);
        assert_eq!(dim_end_nilpotent(&p(&[5, 4, 3, 3, 2, 1])), 82);
    }

    #[test]
    fn orbit_dimensions() {
        let lr = running_example();
        let k1 = KleinTableau::new(lr.clone(), vec![(5, 3), (4, 3)]).unwrap();
        let k7 = KleinTableau::new(lr.clone(), vec![(5, 2), (4, 1)]).unwrap();
        assert_eq!(orbit_dim_embedding(&k1), 28);
        assert_eq!(orbit_dim_embedding(&k7), 23);
        assert_eq!(orbit_dim_moments(&k1), 8);
        assert_eq!(orbit_dim_moments(&k7), 3);
    }

    #[test]
    fn split_pair_is_consistent_with_the_b2_count() {
        use Indec::*;
        // B2(m, m-1) splits; every hom count must agree with the split form,
        // in both argument positions
        for m in 2..=8u32 {
            let pair = [P2(m), P0(m - 1)];
            for l in 1..=9u32 {
                for x in [P0(l), P1(l)] {
                    assert_eq!(
                        hom_dim(x, B2(m, m - 1)),
                        pair.iter().map(|&y| hom_dim(x, y)).sum::<u64>()
                    );
                    assert_eq!(
                        hom_dim(B2(m, m - 1), x),
                        pair.iter().map(|&y| hom_dim(y, x)).sum::<u64>()
                    );
                }
                if l >= 2 {
                    let x = P2(l);
                    assert_eq!(
                        hom_dim(x, B2(m, m - 1)),
                        pair.iter().map(|&y| hom_dim(x, y)).sum::<u64>()
                    );
                    assert_eq!(
                        hom_dim(B2(m, m - 1), x),
                        pair.iter().map(|&y| hom_dim(y, x)).sum::<u64>()
                    );
                }
                for t in 1..l.saturating_sub(1) {
                    let x = B2(l, t);
                    assert_eq!(
                        hom_dim(x, B2(m, m - 1)),
                        pair.iter().map(|&y| hom_dim(x, y)).sum::<u64>(),
                        "x={x}, m={m}"
                    );
                    assert_eq!(
                        hom_dim(B2(m, m - 1), x),
                        pair.iter().map(|&y| hom_dim(y, x)).sum::<u64>(),
                        "x={x}, m={m}"
                    );
                }
            }
        }
    }

    #[test]
    fn summand_parsing() {
        for s in ["P0(3)", "P1(1)", "P2(5)", "B2(7,3)"] {
            let x: Indec = s.parse().unwrap();
            assert_eq!(x.to_string(), s);
        }
        assert!("B2(3,2)".parse::<Indec>().is_err());
        assert!("P2(1)".parse::<Indec>().is_err());
        assert!("Q1(2)".parse::<Indec>().is_err());
        let m: Module = serde_json::from_str(r#"["B2(5,3)","P1(2)"]"#).unwrap();
        assert_eq!(m.to_string(), "B2(5,3) + P1(2)");
    }
}

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::Partition;

/// A Littlewood-Richardson filling with entries 1 and 2, recorded by its
/// nested shapes. The grid has columns of heights `beta_c`; cells inside
/// `gamma` are empty, cells of `zeta / gamma` hold a 1, cells of
/// `beta / zeta` hold a 2. Rows are numbered from 1 at the top.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "LrShape", into = "LrShape")]
pub struct LrTableau {
    gamma: Partition,
    zeta: Partition,
    beta: Partition,
}

#[derive(Serialize, Deserialize)]
struct LrShape {
    gamma: Partition,
    zeta: Partition,
    beta: Partition,
}

impl LrTableau {
    pub fn new(gamma: Partition, zeta: Partition, beta: Partition) -> Result<Self> {
        if !Partition::contains(&zeta, &gamma) || !Partition::contains(&beta, &zeta) {
            return Err(Error::InvalidTableau(format!(
                "shapes must be nested: {gamma} inside {zeta} inside {beta}"
            )));
        }
        for c in 0..beta.len() {
            if zeta.part(c) - gamma.part(c) > 1 || beta.part(c) - zeta.part(c) > 1 {
                return Err(Error::InvalidTableau(format!(
                    "column {} repeats an entry ({gamma}, {zeta}, {beta})",
                    c + 1
                )));
            }
        }
        let t = LrTableau { gamma, zeta, beta };
        // Word condition: every 2 must be matchable to a 1 in a strictly
        // earlier row, so prefix counts of 2s may never outrun the 1s.
        let mut twos_so_far = 0;
        let mut ones_before = 0;
        for k in 1..=t.rows() {
            twos_so_far += t.twos(k);
            if twos_so_far > ones_before {
                return Err(Error::InvalidTableau(format!(
                    "word condition fails at row {k}: {twos_so_far} twos, {ones_before} earlier ones"
                )));
            }
            ones_before += t.ones(k);
        }
        Ok(t)
    }

    pub fn gamma(&self) -> &Partition {
        &self.gamma
    }

    pub fn zeta(&self) -> &Partition {
        &self.zeta
    }

    pub fn beta(&self) -> &Partition {
        &self.beta
    }

    /// Content of the filling as a partition: the type of the subspace. All
    /// parts are at most 2 because only the entries 1 and 2 occur.
    pub fn alpha(&self) -> Partition {
        let ones = (self.zeta.size() - self.gamma.size()) as u32;
        let twos = (self.beta.size() - self.zeta.size()) as u32;
        Partition::from_unsorted(vec![ones, twos]).conjugate()
    }

    /// Number of rows of the grid (the tallest column of beta).
    pub fn rows(&self) -> u32 {
        self.beta.first()
    }

    /// Number of 1s in the given row (1-based).
    pub fn ones(&self, row: u32) -> u32 {
        (0..self.zeta.len())
            .filter(|&c| self.gamma.part(c) < row && row <= self.zeta.part(c))
            .count() as u32
    }

    /// Number of 2s in the given row (1-based).
    pub fn twos(&self, row: u32) -> u32 {
        (0..self.beta.len())
            .filter(|&c| self.zeta.part(c) < row && row <= self.beta.part(c))
            .count() as u32
    }

    /// Number of columns holding both a 1 and a 2 whose 2 sits in the given
    /// row. Subscripts for these 2s admit no choice.
    pub fn forced(&self, row: u32) -> u32 {
        if row < 2 {
            return 0;
        }
        (0..self.beta.len())
            .filter(|&c| {
                self.beta.part(c) == row
                    && self.zeta.part(c) == row - 1
                    && self.gamma.part(c) == row - 2
            })
            .count() as u32
    }

    /// All fillings for the triple of types, sorted by intermediate shape.
    /// Returns an error when the subspace type has a part above 2; such
    /// triples are outside the scope of this crate.
    pub fn enumerate(alpha: &Partition, beta: &Partition, gamma: &Partition) -> Result<Vec<Self>> {
        if alpha.first() > 2 {
            return Err(Error::InvalidTableau(format!(
                "subspace type {alpha} has a part above 2"
            )));
        }
        if gamma.size() + alpha.size() != beta.size() || !Partition::contains(beta, gamma) {
            return Ok(Vec::new());
        }
        let ones_total = alpha.conjugate().part(0);
        let target = gamma.size() + ones_total as u64;

        let ncols = beta.len();
        let mut bounds = Vec::with_capacity(ncols);
        for c in 0..ncols {
            let lo = gamma.part(c).max(beta.part(c).saturating_sub(1));
            let hi = beta.part(c).min(gamma.part(c) + 1);
            if lo > hi {
                return Ok(Vec::new());
            }
            bounds.push((lo, hi));
        }
        // suffix sums for pruning the column-by-column search
        let mut lo_suffix = vec![0u64; ncols + 1];
        let mut hi_suffix = vec![0u64; ncols + 1];
        for c in (0..ncols).rev() {
            lo_suffix[c] = lo_suffix[c + 1] + bounds[c].0 as u64;
            hi_suffix[c] = hi_suffix[c + 1] + bounds[c].1 as u64;
        }

        let mut out = Vec::new();
        let mut prefix: Vec<u32> = Vec::with_capacity(ncols);
        fn dfs(
            c: usize,
            sum: u64,
            prev: u32,
            bounds: &[(u32, u32)],
            lo_suffix: &[u64],
            hi_suffix: &[u64],
            target: u64,
            prefix: &mut Vec<u32>,
            gamma: &Partition,
            beta: &Partition,
            out: &mut Vec<LrTableau>,
        ) {
            if c == bounds.len() {
                if sum == target {
                    if let Ok(t) = LrTableau::new(
                        gamma.clone(),
                        Partition::new(prefix.clone()).expect("built weakly decreasing"),
                        beta.clone(),
                    ) {
                        out.push(t);
                    }
                }
                return;
            }
            let (lo, hi) = bounds[c];
            for z in lo..=hi.min(prev) {
                let s = sum + z as u64;
                if s + lo_suffix[c + 1] > target || s + hi_suffix[c + 1] < target {
                    continue;
                }
                prefix.push(z);
                dfs(
                    c + 1,
                    s,
                    z,
                    bounds,
                    lo_suffix,
                    hi_suffix,
                    target,
                    prefix,
                    gamma,
                    beta,
                    out,
                );
                prefix.pop();
            }
        }
        dfs(
            0,
            0,
            u32::MAX,
            &bounds,
            &lo_suffix,
            &hi_suffix,
            target,
            &mut prefix,
            gamma,
            beta,
            &mut out,
        );
        out.sort_by(|a, b| a.zeta.cmp(&b.zeta));
        Ok(out)
    }

    /// Grid rendering with '.' for empty cells, one row per line.
    pub fn ascii(&self) -> String {
        let mut s = String::new();
        let beta_conj = self.beta.conjugate();
        for m in 1..=self.rows() {
            for c in 0..beta_conj.part((m - 1) as usize) as usize {
                let cell = if self.gamma.part(c) >= m {
                    '.'
                } else if self.zeta.part(c) >= m {
                    '1'
                } else {
                    '2'
                };
                s.push(cell);
                s.push(' ');
            }
            s.pop();
            s.push('\n');
        }
        s
    }
}

impl fmt::Display for LrTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{};{};{}]", self.gamma, self.zeta, self.beta)
    }
}

impl TryFrom<LrShape> for LrTableau {
    type Error = Error;

    fn try_from(s: LrShape) -> Result<Self> {
        LrTableau::new(s.gamma, s.zeta, s.beta)
    }
}

impl From<LrTableau> for LrShape {
    fn from(t: LrTableau) -> LrShape {
        LrShape {
            gamma: t.gamma,
            zeta: t.zeta,
            beta: t.beta,
        }
    }
}

/// A filling whose 2s carry subscripts, kept as a multiset of `(row, subscript)`
/// pairs. A subscript r on a 2 in row m records that the generator falling
/// from exponent m is glued to a generator of exponent r, so 1 <= r < m; each
/// subscript r is available as often as row r holds 1s, and columns holding
/// both a 1 and a 2 force r = m - 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KleinTableau {
    lr: LrTableau,
    arcs: Vec<(u32, u32)>,
}

impl KleinTableau {
    pub fn new(lr: LrTableau, arcs: Vec<(u32, u32)>) -> Result<Self> {
        let e = lr.rows();
        for &(m, r) in &arcs {
            if r == 0 || r >= m || m > e {
                return Err(Error::InvalidTableau(format!(
                    "subscript pair ({m},{r}) is out of range"
                )));
            }
        }
        for m in 1..=e {
            let have = arcs.iter().filter(|&&(s, _)| s == m).count() as u32;
            if have != lr.twos(m) {
                return Err(Error::InvalidTableau(format!(
                    "row {m} holds {} twos but {have} subscripts were given",
                    lr.twos(m)
                )));
            }
        }
        for r in 1..=e {
            let indeg = arcs.iter().filter(|&&(_, t)| t == r).count() as u32;
            if indeg > lr.ones(r) {
                return Err(Error::InvalidTableau(format!(
                    "subscript {r} used {indeg} times but row {r} has only {} ones",
                    lr.ones(r)
                )));
            }
        }
        for m in 2..=e {
            let at_forced = arcs.iter().filter(|&&a| a == (m, m - 1)).count() as u32;
            if at_forced < lr.forced(m) {
                return Err(Error::InvalidTableau(format!(
                    "row {m} needs at least {} subscripts equal to {}",
                    lr.forced(m),
                    m - 1
                )));
            }
        }
        Ok(Self::sorted(lr, arcs))
    }

    fn sorted(lr: LrTableau, mut arcs: Vec<(u32, u32)>) -> Self {
        arcs.sort_unstable_by(|a, b| b.cmp(a));
        KleinTableau { lr, arcs }
    }

    pub fn lr(&self) -> &LrTableau {
        &self.lr
    }

    pub fn arcs(&self) -> &[(u32, u32)] {
        &self.arcs
    }

    pub fn alpha(&self) -> Partition {
        self.lr.alpha()
    }

    pub fn beta(&self) -> &Partition {
        self.lr.beta()
    }

    pub fn gamma(&self) -> &Partition {
        self.lr.gamma()
    }

    /// Unused subscript slots: value r with multiplicity
    /// (ones in row r) - (subscripts equal to r), largest first.
    pub fn poles(&self) -> Vec<u32> {
        let mut poles = Vec::new();
        for r in (1..=self.lr.rows()).rev() {
            let indeg = self.arcs.iter().filter(|&&(_, t)| t == r).count() as u32;
            for _ in 0..self.lr.ones(r) - indeg {
                poles.push(r);
            }
        }
        poles
    }

    /// All subscript choices for a filling, in canonical order.
    pub fn refinements(lr: &LrTableau) -> Vec<Self> {
        let e = lr.rows();
        let mut cap: Vec<u32> = (0..e).map(|r| lr.ones(r + 1)).collect();
        let sources: Vec<(u32, u32, u32)> = (1..=e)
            .filter(|&m| lr.twos(m) > 0)
            .map(|m| (m, lr.twos(m), lr.forced(m)))
            .collect();

        fn place(
            sources: &[(u32, u32, u32)],
            si: usize,
            left: u32,
            max_r: u32,
            cap: &mut Vec<u32>,
            arcs: &mut Vec<(u32, u32)>,
            out: &mut Vec<Vec<(u32, u32)>>,
        ) {
            if left == 0 {
                next_source(sources, si + 1, cap, arcs, out);
                return;
            }
            let (m, _, forced) = sources[si];
            let at_top = arcs.iter().filter(|&&a| a == (m, m - 1)).count() as u32;
            // once fewer free slots than missing forced subscripts remain,
            // the branch is dead
            let need_forced = forced.saturating_sub(at_top);
            if need_forced > left {
                return;
            }
            let lo = if need_forced == left { m - 1 } else { 1 };
            for r in (lo..=max_r).rev() {
                if cap[(r - 1) as usize] == 0 {
                    continue;
                }
                cap[(r - 1) as usize] -= 1;
                arcs.push((m, r));
                place(sources, si, left - 1, r, cap, arcs, out);
                arcs.pop();
                cap[(r - 1) as usize] += 1;
            }
        }

        fn next_source(
            sources: &[(u32, u32, u32)],
            si: usize,
            cap: &mut Vec<u32>,
            arcs: &mut Vec<(u32, u32)>,
            out: &mut Vec<Vec<(u32, u32)>>,
        ) {
            if si == sources.len() {
                out.push(arcs.clone());
                return;
            }
            let (m, t, _) = sources[si];
            place(sources, si, t, m - 1, cap, arcs, out);
        }

        let mut raw = Vec::new();
        next_source(&sources, 0, &mut cap, &mut Vec::new(), &mut raw);
        let mut out: Vec<Self> = raw
            .into_iter()
            .map(|arcs| Self::sorted(lr.clone(), arcs))
            .collect();
        out.sort();
        out
    }

    /// The refinement whose subscripts are as large as possible.
    pub fn dominant(lr: &LrTableau) -> Self {
        let e = lr.rows();
        let mut cap: Vec<u32> = (0..e).map(|r| lr.ones(r + 1)).collect();
        let mut arcs = Vec::new();
        for m in 1..=e {
            for _ in 0..lr.twos(m) {
                let r = (1..m)
                    .rev()
                    .find(|&r| cap[(r - 1) as usize] > 0)
                    .expect("a validated filling admits a subscript choice");
                cap[(r - 1) as usize] -= 1;
                arcs.push((m, r));
            }
        }
        Self::sorted(lr.clone(), arcs)
    }

    /// The refinement whose subscripts are as small as possible, subject to
    /// the forced ones.
    pub fn maximal(lr: &LrTableau) -> Self {
        let e = lr.rows();
        let mut cap: Vec<u32> = (0..e).map(|r| lr.ones(r + 1)).collect();
        let mut arcs = Vec::new();
        for m in 1..=e {
            let forced = lr.forced(m);
            for _ in 0..forced {
                cap[(m - 2) as usize] -= 1;
                arcs.push((m, m - 1));
            }
            for _ in 0..lr.twos(m) - forced {
                let r = (1..m)
                    .find(|&r| cap[(r - 1) as usize] > 0)
                    .expect("a validated filling admits a subscript choice");
                cap[(r - 1) as usize] -= 1;
                arcs.push((m, r));
            }
        }
        Self::sorted(lr.clone(), arcs)
    }

    /// Every refinement of every filling for the triple, sorted canonically.
    pub fn enumerate_type(
        alpha: &Partition,
        beta: &Partition,
        gamma: &Partition,
    ) -> Result<Vec<Self>> {
        let mut out = Vec::new();
        for lr in LrTableau::enumerate(alpha, beta, gamma)? {
            out.extend(Self::refinements(&lr));
        }
        out.sort();
        Ok(out)
    }

    /// Grid rendering; subscripted 2s print as `2r`, larger subscripts on
    /// taller columns.
    pub fn ascii(&self) -> String {
        let lr = &self.lr;
        let beta_conj = lr.beta().conjugate();
        let mut s = String::new();
        for m in 1..=lr.rows() {
            let mut subs: Vec<u32> = self
                .arcs
                .iter()
                .filter(|&&(src, _)| src == m)
                .map(|&(_, r)| r)
                .collect();
            subs.sort_unstable_by(|a, b| b.cmp(a));
            let mut next = subs.into_iter();
            for c in 0..beta_conj.part((m - 1) as usize) as usize {
                let cell = if lr.gamma().part(c) >= m {
                    ".".to_string()
                } else if lr.zeta().part(c) >= m {
                    "1".to_string()
                } else {
                    format!("2{}", next.next().expect("one subscript per 2"))
                };
                s.push_str(&format!("{cell:<3}"));
            }
            while s.ends_with(' ') {
                s.pop();
            }
            s.push('\n');
        }
        s
    }
}

impl fmt::Display for KleinTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}; arcs", self.lr)?;
        for (i, (m, r)) in self.arcs.iter().enumerate() {
            write!(f, "{}({m},{r})", if i == 0 { " " } else { "," })?;
        }
        write!(f, "; poles")?;
        for (i, p) in self.poles().iter().enumerate() {
            write!(f, "{}{p}", if i == 0 { " " } else { "," })?;
        }
        write!(f, "]")
    }
}

#[derive(Serialize, Deserialize)]
struct KleinShape {
    alpha: Partition,
    beta: Partition,
    gamma: Partition,
    arcs: Vec<(u32, u32)>,
    poles: Vec<u32>,
}

impl Serialize for KleinTableau {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        KleinShape {
            alpha: self.alpha(),
            beta: self.beta().clone(),
            gamma: self.gamma().clone(),
            arcs: self.arcs.clone(),
            poles: self.poles(),
        }
        .serialize(ser)
    }
}

impl<'de> Deserialize<'de> for KleinTableau {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let shape = KleinShape::deserialize(de)?;
        KleinTableau::from_parts(shape).map_err(serde::de::Error::custom)
    }
}

impl KleinTableau {
    /// Builds the filling whose 2s sit in the rows named by the arcs,
    /// deriving the intermediate shape from the outer one, then validates
    /// the subscripts.
    pub fn from_arcs(gamma: Partition, beta: Partition, arcs: Vec<(u32, u32)>) -> Result<Self> {
        let e = beta.first();
        let beta_conj = beta.conjugate();
        let mut zeta_conj = Vec::with_capacity(e as usize);
        for m in 1..=e {
            let twos = arcs.iter().filter(|&&(src, _)| src == m).count() as u32;
            let col = beta_conj.part((m - 1) as usize);
            if twos > col {
                return Err(Error::InvalidTableau(format!(
                    "row {m} cannot hold {twos} twos"
                )));
            }
            zeta_conj.push(col - twos);
        }
        let zeta = Partition::new(zeta_conj)
            .map_err(|_| {
                Error::InvalidTableau("subscript rows do not cut out a partition".into())
            })?
            .conjugate();
        let lr = LrTableau::new(gamma, zeta, beta)?;
        KleinTableau::new(lr, arcs)
    }

    /// Rebuilds a tableau from its serialized form, then checks every stated
    /// invariant.
    fn from_parts(shape: KleinShape) -> Result<Self> {
        let t = KleinTableau::from_arcs(shape.gamma, shape.beta, shape.arcs)?;
        if t.alpha() != shape.alpha {
            return Err(Error::InvalidTableau(format!(
                "content is {}, not the stated {}",
                t.alpha(),
                shape.alpha
            )));
        }
        let mut stated = shape.poles;
        stated.sort_unstable_by(|a, b| b.cmp(a));
        if t.poles() != stated {
            return Err(Error::InvalidTableau(
                "stated poles disagree with the unused subscript slots".into(),
            ));
        }
        Ok(t)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn running_example() -> LrTableau {
        LrTableau::new(p(&[4, 3, 2, 2, 1]), p(&[4, 3, 3, 3, 2, 1]), p(&[5, 4, 3, 3, 2, 1])).unwrap()
    }

    #[test]
    fn running_example_profiles() {
        let t = running_example();
        assert_eq!(t.rows(), 5);
        assert_eq!(t.alpha(), p(&[2, 2, 1, 1]));
        let ones: Vec<u32> = (1..=5).map(|m| t.ones(m)).collect();
        let twos: Vec<u32> = (1..=5).map(|m| t.twos(m)).collect();
        assert_eq!(ones, vec![1, 1, 2, 0, 0]);
        assert_eq!(twos, vec![0, 0, 0, 1, 1]);
        assert_eq!((1..=5).map(|m| t.forced(m)).sum::<u32>(), 0);
    }

    #[test]
    fn word_condition_rejects_early_twos() {
        // a 2 in row 1 can never be matched
        assert!(LrTableau::new(p(&[]), p(&[]), p(&[1])).is_err());
        // 2 in row 2, but the only 1 is in the same row
        assert!(LrTableau::new(p(&[1, 1]), p(&[2, 1]), p(&[2, 2])).is_err());
        // 1 moved up to row 1: fine
        assert!(LrTableau::new(p(&[1]), p(&[1, 1]), p(&[2, 1])).is_ok());
    }

    #[test]
    fn column_strictness_rejected() {
        assert!(LrTableau::new(p(&[]), p(&[2]), p(&[2])).is_err());
        assert!(LrTableau::new(p(&[1]), p(&[1]), p(&[3])).is_err());
    }

    #[test]
    fn enumerate_small_type() {
        let ts = LrTableau::enumerate(&p(&[2, 1, 1]), &p(&[4, 3, 2, 1]), &p(&[3, 2, 1])).unwrap();
        let zetas: Vec<&Partition> = ts.iter().map(|t| t.zeta()).collect();
        assert_eq!(
            zetas,
            vec![&p(&[3, 3, 2, 1]), &p(&[4, 2, 2, 1]), &p(&[4, 3, 1, 1])]
        );
    }

    #[test]
    fn enumerate_rejects_deep_content() {
        assert!(LrTableau::enumerate(&p(&[3, 1]), &p(&[4, 3]), &p(&[2, 1])).is_err());
    }

    #[test]
    fn enumerate_size_mismatch_is_empty() {
        assert!(LrTableau::enumerate(&p(&[1]), &p(&[3]), &p(&[1]))
            .unwrap()
            .is_empty());
    }

    fn arcs_and_poles(k: &KleinTableau) -> (Vec<(u32, u32)>, Vec<u32>) {
        (k.arcs().to_vec(), k.poles())
    }

    #[test]
    fn running_example_refinements() {
        let refs = KleinTableau::refinements(&running_example());
        assert_eq!(refs.len(), 7);
        let got: Vec<(Vec<(u32, u32)>, Vec<u32>)> = refs.iter().map(arcs_and_poles).collect();
        let expect = vec![
            (vec![(5, 1), (4, 2)], vec![3, 3]),
            (vec![(5, 1), (4, 3)], vec![3, 2]),
            (vec![(5, 2), (4, 1)], vec![3, 3]),
            (vec![(5, 2), (4, 3)], vec![3, 1]),
            (vec![(5, 3), (4, 1)], vec![3, 2]),
            (vec![(5, 3), (4, 2)], vec![3, 1]),
            (vec![(5, 3), (4, 3)], vec![2, 1]),
        ];
        for e in &expect {
            assert!(got.contains(e), "missing refinement {e:?}");
        }
        assert_eq!(got.len(), expect.len());
    }

    #[test]
    fn running_example_extremes() {
        let t = running_example();
        let dom = KleinTableau::dominant(&t);
        assert_eq!(arcs_and_poles(&dom), (vec![(5, 3), (4, 3)], vec![2, 1]));
        let max = KleinTableau::maximal(&t);
        assert_eq!(arcs_and_poles(&max), (vec![(5, 2), (4, 1)], vec![3, 3]));
    }

    #[test]
    fn small_type_extremes() {
        let ts = LrTableau::enumerate(&p(&[2, 1, 1]), &p(&[4, 3, 2, 1]), &p(&[3, 2, 1])).unwrap();
        let dom = KleinTableau::dominant(&ts[0]);
        assert_eq!(arcs_and_poles(&dom), (vec![(4, 3)], vec![2, 1]));
        let max = KleinTableau::maximal(&ts[0]);
        assert_eq!(arcs_and_poles(&max), (vec![(4, 1)], vec![3, 2]));
        assert_eq!(KleinTableau::refinements(&ts[0]).len(), 3);
        assert_eq!(KleinTableau::refinements(&ts[1]).len(), 2);
        assert_eq!(KleinTableau::refinements(&ts[2]).len(), 1);
    }

    #[test]
    fn forced_subscripts_are_enforced() {
        // column (1,2,3) forces subscript 2 on its 2; a spare 1 in row 1
        // would otherwise admit subscript 1
        let lr = LrTableau::new(p(&[1]), p(&[2, 1]), p(&[3, 1])).unwrap();
        assert_eq!(lr.forced(3), 1);
        assert!(KleinTableau::new(lr.clone(), vec![(3, 1)]).is_err());
        assert!(KleinTableau::new(lr.clone(), vec![(3, 2)]).is_ok());
        let refs = KleinTableau::refinements(&lr);
        assert_eq!(refs.len(), 1);
        assert_eq!(arcs_and_poles(&refs[0]), (vec![(3, 2)], vec![1]));
    }

    #[test]
    fn subscript_validation() {
        let t = running_example();
        // wrong count for row 5
        assert!(KleinTableau::new(t.clone(), vec![(4, 3)]).is_err());
        // subscript out of range
        assert!(KleinTableau::new(t.clone(), vec![(5, 5), (4, 3)]).is_err());
        // row 4 holds no 1s, so subscript 4 has no capacity
        assert!(KleinTableau::new(t.clone(), vec![(5, 4), (4, 3)]).is_err());
        // capacity of row 1 is a single 1
        assert!(KleinTableau::new(t.clone(), vec![(5, 1), (4, 1)]).is_err());
    }

    #[test]
    fn klein_json_round_trip() {
        let t = running_example();
        let k = KleinTableau::new(t, vec![(5, 3), (4, 2)]).unwrap();
        let json = serde_json::to_string(&k).unwrap();
        let back: KleinTableau = serde_json::from_str(&json).unwrap();
        assert_eq!(back, k);
        // a tampered pole list must be rejected
        let bad = json.replace("\"poles\":[3,1]", "\"poles\":[3,2]");
        assert_ne!(bad, json);
        assert!(serde_json::from_str::<KleinTableau>(&bad).is_err());
    }

    #[test]
    fn ascii_grids() {
        let t = running_example();
        assert_eq!(t.ascii(), ". . . . . 1\n. . . . 1\n. . 1 1\n. 2\n2\n");
        let k = KleinTableau::new(t, vec![(5, 3), (4, 2)]).unwrap();
        assert!(k.ascii().contains("22"));
        assert!(k.ascii().contains("23"));
    }

    fn arb_nested_shapes() -> impl Strategy<Value = (Partition, Partition, Partition)> {
        (
            proptest::collection::vec(0u32..=6, 0..=6),
            proptest::collection::vec(0u8..=1, 6),
            proptest::collection::vec(0u8..=1, 6),
        )
            .prop_filter_map("not nested partitions", |(raw, cut1, cut2)| {
                let beta = Partition::from_unsorted(raw);
                let zeta: Vec<u32> = beta
                    .parts()
                    .iter()
                    .zip(&cut1)
                    .map(|(&b, &c)| b - (c as u32).min(b))
                    .collect();
                let zeta = Partition::new(zeta).ok()?;
                let gamma: Vec<u32> = zeta
                    .parts()
                    .iter()
                    .zip(&cut2)
                    .map(|(&z, &c)| z - (c as u32).min(z))
                    .collect();
                let gamma = Partition::new(gamma).ok()?;
                Some((gamma, zeta, beta))
            })
    }

    proptest! {
        // the row-prefix form of the word condition agrees with counting
        // ones and twos in column tails
        #[test]
        fn word_condition_matches_tail_counts((gamma, zeta, beta) in arb_nested_shapes()) {
            let ncols = beta.len();
            let tails_ok = (0..=ncols).all(|c| {
                let ones = (c..ncols).filter(|&j| zeta.part(j) > gamma.part(j)).count();
                let twos = (c..ncols).filter(|&j| beta.part(j) > zeta.part(j)).count();
                ones >= twos
            });
            prop_assert_eq!(LrTableau::new(gamma, zeta, beta).is_ok(), tails_ok);
        }

        #[test]
        fn refinements_contain_the_extremes((gamma, zeta, beta) in arb_nested_shapes()) {
            if let Ok(lr) = LrTableau::new(gamma, zeta, beta) {
                let refs = KleinTableau::refinements(&lr);
                prop_assert!(!refs.is_empty());
                prop_assert!(refs.contains(&KleinTableau::dominant(&lr)));
                prop_assert!(refs.contains(&KleinTableau::maximal(&lr)));
                for k in &refs {
                    let rebuilt = KleinTableau::new(lr.clone(), k.arcs().to_vec());
                    prop_assert!(rebuilt.is_ok());
                }
            }
        }
    }
}

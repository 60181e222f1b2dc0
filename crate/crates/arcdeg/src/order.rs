use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arc::ArcDiagram;
use crate::error::{Error, Result};
use crate::s2::{b2_or_pair, Indec, Module};
use crate::tableau::KleinTableau;

/// Hom-count differences `[V, z] - [V, y]` over the test objects that can
/// tell pairs of the same type apart: the glued pairs `B2(l, t)` with `l` up
/// to the largest ambient block, and the socle pairs `P1(t)`. For pairs of
/// one type, `y <= z` in the hom order exactly when every entry here is
/// nonnegative; hom counts from `P0` and `P2` objects, and from the test
/// objects beyond this range, are determined by these or by the type alone.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "DeltaHomShape", into = "DeltaHomShape")]
pub struct DeltaHom {
    n: u32,
    band: Vec<i64>,
    p1: Vec<i64>,
}

impl DeltaHom {
    pub fn new(y: &Module, z: &Module) -> Self {
        let n = y.ambient_max().max(z.ambient_max());
        let diff = |v: Indec| z.hom_from(v) as i64 - y.hom_from(v) as i64;
        let mut band = Vec::new();
        for l in 3..=n {
            for t in 1..=l - 2 {
                band.push(diff(Indec::B2(l, t)));
            }
        }
        let p1 = (1..=n).map(|t| diff(Indec::P1(t))).collect();
        DeltaHom { n, band, p1 }
    }

    /// Largest ambient block size; the band holds `B2(l, t)` entries for
    /// `3 <= l <= n`, `1 <= t <= l - 2`.
    pub fn n(&self) -> u32 {
        self.n
    }

    fn band_idx(l: u32, t: u32) -> usize {
        ((l - 3) * (l - 2) / 2 + (t - 1)) as usize
    }

    pub fn b2(&self, l: u32, t: u32) -> i64 {
        assert!(3 <= l && l <= self.n && 1 <= t && t <= l - 2);
        self.band[Self::band_idx(l, t)]
    }

    pub fn p1(&self, t: u32) -> i64 {
        assert!(1 <= t);
        // beyond the largest block every socle-pair difference repeats the
        // last one, which vanishes for pairs of equal type
        if t > self.n {
            0
        } else {
            self.p1[(t - 1) as usize]
        }
    }

    pub fn is_nonnegative(&self) -> bool {
        self.band.iter().chain(&self.p1).all(|&v| v >= 0)
    }

    /// First negative test object, scanning the band by level and position,
    /// then the socle row.
    pub fn first_negative(&self) -> Option<Indec> {
        for l in 3..=self.n {
            for t in 1..=l - 2 {
                if self.b2(l, t) < 0 {
                    return Some(Indec::B2(l, t));
                }
            }
        }
        (1..=self.n)
            .find(|&t| self.p1(t) < 0)
            .map(Indec::P1)
    }

    /// Grid value at `(l, t)` extended past the stored band: the split-pair
    /// slot `t = l - 1` contributes nothing to a hom difference, and levels
    /// above the largest block repeat the socle row.
    fn slot(&self, l: u32, t: u32) -> i64 {
        debug_assert!(1 <= t && t < l);
        if t + 1 == l {
            0
        } else if l > self.n {
            self.p1(t)
        } else {
            self.b2(l, t)
        }
    }

    /// Second difference of the extended grid at a band position. For a hom
    /// difference of two modules this equals the multiplicity difference of
    /// the summand `B2(l, t)`.
    pub fn mesh_b2(&self, l: u32, t: u32) -> i64 {
        self.slot(l, t) + self.slot(l + 1, t + 1) - self.slot(l, t + 1) - self.slot(l + 1, t)
    }

    /// The same stencil run against the socle edge of the grid; equals the
    /// multiplicity difference of `P1(l)` for `l >= 2`.
    pub fn mesh_p1(&self, l: u32) -> i64 {
        debug_assert!(l >= 2);
        self.p1(l) + self.slot(l + 1, 1) - self.slot(l, 1) - self.p1(l + 1)
    }
}

#[derive(Serialize, Deserialize)]
struct DeltaHomShape {
    #[serde(rename = "N")]
    n: u32,
    #[serde(rename = "B", default, skip_serializing_if = "BTreeMap::is_empty")]
    b: BTreeMap<String, i64>,
    #[serde(rename = "P1", default, skip_serializing_if = "BTreeMap::is_empty")]
    p1: BTreeMap<String, i64>,
}

impl From<DeltaHom> for DeltaHomShape {
    fn from(d: DeltaHom) -> Self {
        let mut b = BTreeMap::new();
        for l in 3..=d.n {
            for t in 1..=l - 2 {
                let v = d.b2(l, t);
                if v != 0 {
                    b.insert(format!("{l},{t}"), v);
                }
            }
        }
        let p1 = (1..=d.n)
            .filter(|&t| d.p1(t) != 0)
            .map(|t| (t.to_string(), d.p1(t)))
            .collect();
        DeltaHomShape { n: d.n, b, p1 }
    }
}

impl TryFrom<DeltaHomShape> for DeltaHom {
    type Error = Error;

    fn try_from(s: DeltaHomShape) -> Result<Self> {
        let n = s.n;
        let mut d = DeltaHom {
            n,
            band: vec![0; if n >= 3 { Self::band_idx(n, n - 2) + 1 } else { 0 }],
            p1: vec![0; n as usize],
        };
        for (k, v) in s.b {
            let (l, t) = k
                .split_once(',')
                .and_then(|(a, b)| Some((a.parse().ok()?, b.parse().ok()?)))
                .ok_or_else(|| Error::Malformed(format!("bad band key {k:?}")))?;
            if !(3 <= l && l <= n && 1 <= t && t <= l - 2) {
                return Err(Error::Malformed(format!("band key {k:?} out of range")));
            }
            d.band[Self::band_idx(l, t)] = v;
        }
        for (k, v) in s.p1 {
            let t: u32 = k
                .parse()
                .map_err(|_| Error::Malformed(format!("bad socle key {k:?}")))?;
            if !(1 <= t && t <= n) {
                return Err(Error::Malformed(format!("socle key {k:?} out of range")));
            }
            d.p1[(t - 1) as usize] = v;
        }
        Ok(d)
    }
}

/// Multiplicity differences between two modules of one type: the summands of
/// `z` counted positively, those of `y` negatively.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "DeltaMeshShape", into = "DeltaMeshShape")]
pub struct DeltaMesh {
    entries: BTreeMap<Indec, i64>,
}

impl DeltaMesh {
    pub fn new(y: &Module, z: &Module) -> Self {
        let mut entries = BTreeMap::new();
        for &s in z.summands() {
            *entries.entry(s).or_insert(0) += 1;
        }
        for &s in y.summands() {
            *entries.entry(s).or_insert(0) -= 1;
        }
        entries.retain(|_, v| *v != 0);
        DeltaMesh { entries }
    }

    pub fn from_changes(changes: BTreeMap<Indec, i64>) -> Self {
        let mut entries = changes;
        entries.retain(|_, v| *v != 0);
        DeltaMesh { entries }
    }

    pub fn get(&self, x: Indec) -> i64 {
        self.entries.get(&x).copied().unwrap_or(0)
    }

    pub fn entries(&self) -> &BTreeMap<Indec, i64> {
        &self.entries
    }
}

#[derive(Serialize, Deserialize, Default)]
struct DeltaMeshShape {
    #[serde(rename = "B", default, skip_serializing_if = "BTreeMap::is_empty")]
    b: BTreeMap<String, i64>,
    #[serde(rename = "P0", default, skip_serializing_if = "BTreeMap::is_empty")]
    p0: BTreeMap<String, i64>,
    #[serde(rename = "P1", default, skip_serializing_if = "BTreeMap::is_empty")]
    p1: BTreeMap<String, i64>,
    #[serde(rename = "P2", default, skip_serializing_if = "BTreeMap::is_empty")]
    p2: BTreeMap<String, i64>,
}

impl From<DeltaMesh> for DeltaMeshShape {
    fn from(d: DeltaMesh) -> Self {
        let mut s = DeltaMeshShape::default();
        for (x, v) in d.entries {
            match x {
                Indec::B2(m, r) => s.b.insert(format!("{m},{r}"), v),
                Indec::P0(m) => s.p0.insert(m.to_string(), v),
                Indec::P1(m) => s.p1.insert(m.to_string(), v),
                Indec::P2(m) => s.p2.insert(m.to_string(), v),
            };
        }
        s
    }
}

impl TryFrom<DeltaMeshShape> for DeltaMesh {
    type Error = Error;

    fn try_from(s: DeltaMeshShape) -> Result<Self> {
        let mut entries = BTreeMap::new();
        for (k, v) in s.b {
            let x: Indec = format!("B2({k})").parse()?;
            entries.insert(x, v);
        }
        for (maps, kind) in [(s.p0, "P0"), (s.p1, "P1"), (s.p2, "P2")] {
            for (k, v) in maps {
                let x: Indec = format!("{kind}({k})").parse()?;
                entries.insert(x, v);
            }
        }
        Ok(DeltaMesh::from_changes(entries))
    }
}

fn same_type(a: &KleinTableau, b: &KleinTableau) -> bool {
    a.alpha() == b.alpha() && a.beta() == b.beta() && a.gamma() == b.gamma()
}

fn ensure_same_type(a: &KleinTableau, b: &KleinTableau) -> Result<()> {
    if same_type(a, b) {
        Ok(())
    } else {
        Err(Error::Incomparable(format!(
            "tableaux of different types: ({}, {}, {}) and ({}, {}, {})",
            a.alpha(),
            a.beta(),
            a.gamma(),
            b.alpha(),
            b.beta(),
            b.gamma()
        )))
    }
}

/// Hom differences of the decomposed pairs; errors when the types disagree.
pub fn delta_hom(y: &KleinTableau, z: &KleinTableau) -> Result<DeltaHom> {
    ensure_same_type(y, z)?;
    Ok(DeltaHom::new(&Module::from_klein(y), &Module::from_klein(z)))
}

/// Multiplicity differences of the decomposed pairs.
pub fn delta_mesh(y: &KleinTableau, z: &KleinTableau) -> Result<DeltaMesh> {
    ensure_same_type(y, z)?;
    Ok(DeltaMesh::new(&Module::from_klein(y), &Module::from_klein(z)))
}

/// Does `y` precede `z` in the hom order? `y` is the side with the smaller
/// hom counts, the more generic of the two.
pub fn leq_hom(y: &KleinTableau, z: &KleinTableau) -> Result<bool> {
    Ok(delta_hom(y, z)?.is_nonnegative())
}

/// The moves that take a diagram one step down the order, toward fewer
/// crossings. `m > n > r > s` throughout, and every named arc or pole must
/// be present.
///
/// - `A`: crossing arcs `(m,r)`, `(n,s)` become the nested arcs `(m,s)`, `(n,r)`.
/// - `B`: arc `(m,s)` and pole `r` inside it become arc `(m,r)` and pole `s`.
/// - `C`: crossing arcs `(m,r)`, `(n,s)` become the disjoint arcs `(m,n)`, `(r,s)`.
/// - `D`: arc `(m,s)` and pole `r` inside it become arc `(r,s)` and pole `m`.
///
/// `A` and `B` keep the rows of the 2s; `C` and `D` rebuild the intermediate
/// shape.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum Move {
    A { m: u32, n: u32, r: u32, s: u32 },
    B { m: u32, r: u32, s: u32 },
    C { m: u32, n: u32, r: u32, s: u32 },
    D { m: u32, r: u32, s: u32 },
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Move::A { m, n, r, s } => write!(f, "A({m},{n},{r},{s})"),
            Move::B { m, r, s } => write!(f, "B({m},{r},{s})"),
            Move::C { m, n, r, s } => write!(f, "C({m},{n},{r},{s})"),
            Move::D { m, r, s } => write!(f, "D({m},{r},{s})"),
        }
    }
}

impl Move {
    pub fn kind(&self) -> char {
        match self {
            Move::A { .. } => 'A',
            Move::B { .. } => 'B',
            Move::C { .. } => 'C',
            Move::D { .. } => 'D',
        }
    }

    fn params_ok(&self) -> bool {
        match *self {
            Move::A { m, n, r, s } | Move::C { m, n, r, s } => m > n && n > r && r > s && s >= 1,
            Move::B { m, r, s } | Move::D { m, r, s } => m > r && r > s && s >= 1,
        }
    }

    pub fn apply(&self, k: &KleinTableau) -> Result<KleinTableau> {
        if !self.params_ok() {
            return Err(Error::InvalidArcDiagram(format!(
                "parameters of {self} are not strictly ordered"
            )));
        }
        let mut arcs = k.arcs().to_vec();
        let mut take = |a: (u32, u32)| -> Result<()> {
            match arcs.iter().position(|&x| x == a) {
                Some(i) => {
                    arcs.remove(i);
                    Ok(())
                }
                None => Err(Error::InvalidArcDiagram(format!(
                    "{self} needs an arc ({},{})",
                    a.0, a.1
                ))),
            }
        };
        let need_pole = |k: &KleinTableau, r: u32| -> Result<()> {
            if k.poles().contains(&r) {
                Ok(())
            } else {
                Err(Error::InvalidArcDiagram(format!("{self} needs a pole {r}")))
            }
        };
        match *self {
            Move::A { m, n, r, s } => {
                take((m, r))?;
                take((n, s))?;
                arcs.push((m, s));
                arcs.push((n, r));
                KleinTableau::new(k.lr().clone(), arcs)
            }
            Move::B { m, r, s } => {
                need_pole(k, r)?;
                take((m, s))?;
                arcs.push((m, r));
                KleinTableau::new(k.lr().clone(), arcs)
            }
            Move::C { m, n, r, s } => {
                take((m, r))?;
                take((n, s))?;
                arcs.push((m, n));
                arcs.push((r, s));
                KleinTableau::from_arcs(k.gamma().clone(), k.beta().clone(), arcs)
            }
            Move::D { m, r, s } => {
                need_pole(k, r)?;
                take((m, s))?;
                arcs.push((r, s));
                KleinTableau::from_arcs(k.gamma().clone(), k.beta().clone(), arcs)
            }
        }
    }

    /// Predicted hom difference of this single step at a glued-pair test
    /// object, result side against input side.
    pub fn delta_at_b2(&self, l: u32, t: u32) -> i64 {
        match *self {
            Move::A { m, n, r, s } => i64::from(n < l && l <= m && s < t && t <= r),
            Move::B { m, r, s } => i64::from(m < l && s < t && t <= r),
            Move::C { m, n, r, s } => {
                i64::from(r < l && l <= n && t <= s) + i64::from(m < l && r < t && t <= n)
            }
            Move::D { m, r, s } => i64::from(r < l && l <= m && t <= s),
        }
    }

    /// Predicted hom difference at a socle-pair test object.
    pub fn delta_at_p1(&self, t: u32) -> i64 {
        match *self {
            Move::A { .. } | Move::D { .. } => 0,
            Move::B { r, s, .. } => i64::from(s < t && t <= r),
            Move::C { n, r, .. } => i64::from(r < t && t <= n),
        }
    }

    /// Summands this step creates and removes, seen from the input side:
    /// the input's summands count positively.
    pub fn mesh_change(&self) -> DeltaMesh {
        let mut out: BTreeMap<Indec, i64> = BTreeMap::new();
        let add = |xs: &[Indec], sign: i64, out: &mut BTreeMap<Indec, i64>| {
            for &x in xs {
                *out.entry(x).or_insert(0) += sign;
            }
        };
        match *self {
            Move::A { m, n, r, s } => {
                add(&[Indec::B2(m, r), Indec::B2(n, s)], 1, &mut out);
                add(&[Indec::B2(m, s)], -1, &mut out);
                add(&b2_or_pair(n, r), -1, &mut out);
            }
            Move::B { m, r, s } => {
                add(&[Indec::B2(m, s), Indec::P1(r)], 1, &mut out);
                add(&b2_or_pair(m, r), -1, &mut out);
                add(&[Indec::P1(s)], -1, &mut out);
            }
            Move::C { m, n, r, s } => {
                add(&[Indec::B2(m, r), Indec::B2(n, s)], 1, &mut out);
                add(&b2_or_pair(m, n), -1, &mut out);
                add(&b2_or_pair(r, s), -1, &mut out);
            }
            Move::D { m, r, s } => {
                add(&[Indec::B2(m, s), Indec::P1(r)], 1, &mut out);
                add(&[Indec::P1(m)], -1, &mut out);
                add(&b2_or_pair(r, s), -1, &mut out);
            }
        }
        DeltaMesh::from_changes(out)
    }

    /// The short exact sequence witnessing this step as an extension:
    /// (subobject, middle, quotient). The input to the move is the direct
    /// sum of subobject and quotient, the result is the middle.
    pub fn extension_witness(&self) -> (Module, Module, Module) {
        let one = |x: Indec| Module::new(vec![x]);
        match *self {
            Move::A { m, n, r, s } => {
                let mut mid = vec![Indec::B2(m, s)];
                mid.extend(b2_or_pair(n, r));
                (one(Indec::B2(n, s)), Module::new(mid), one(Indec::B2(m, r)))
            }
            Move::B { m, r, s } => {
                let mut mid = b2_or_pair(m, r);
                mid.push(Indec::P1(s));
                (one(Indec::B2(m, s)), Module::new(mid), one(Indec::P1(r)))
            }
            Move::C { m, n, r, s } => {
                let mut mid = b2_or_pair(m, n);
                mid.extend(b2_or_pair(r, s));
                (one(Indec::B2(m, r)), Module::new(mid), one(Indec::B2(n, s)))
            }
            Move::D { m, r, s } => {
                let mut mid = vec![Indec::P1(m)];
                mid.extend(b2_or_pair(r, s));
                (one(Indec::P1(r)), Module::new(mid), one(Indec::B2(m, s)))
            }
        }
    }
}

/// All applicable down moves with their results, in canonical move order.
pub fn down_moves(k: &KleinTableau) -> Vec<(Move, KleinTableau)> {
    let mut candidates = BTreeSet::new();
    let arcs = k.arcs();
    for i in 0..arcs.len() {
        for j in 0..arcs.len() {
            if i == j {
                continue;
            }
            let (m, r) = arcs[i];
            let (n, s) = arcs[j];
            if m > n && n > r && r > s {
                candidates.insert(Move::A { m, n, r, s });
                candidates.insert(Move::C { m, n, r, s });
            }
        }
    }
    let poles: BTreeSet<u32> = k.poles().into_iter().collect();
    for &(m, s) in arcs {
        for &r in &poles {
            if s < r && r < m {
                candidates.insert(Move::B { m, r, s });
                candidates.insert(Move::D { m, r, s });
            }
        }
    }
    candidates
        .into_iter()
        .filter_map(|mv| mv.apply(k).ok().map(|res| (mv, res)))
        .collect()
}

/// How the next step of a chain from `z` down to `y` is chosen.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Strategy {
    /// Try every applicable move in canonical order and keep the first one
    /// that stays above `y`.
    #[default]
    Baseline,
    /// Read the step off the positive region of the hom difference:
    /// its corners span a parallelogram naming the move. Falls back to the
    /// canonical scan when the pattern does not close up.
    Parallelogram,
}

/// One step down from `z` toward `y`: `Ok(None)` when they are equal,
/// an error when `y` does not precede `z`.
pub fn find_move_step(
    y: &KleinTableau,
    z: &KleinTableau,
    strategy: Strategy,
) -> Result<Option<(Move, KleinTableau)>> {
    if y == z {
        return Ok(None);
    }
    let dh = delta_hom(y, z)?;
    if !dh.is_nonnegative() {
        let cert = dh.first_negative().expect("a negative entry exists");
        return Err(Error::Incomparable(format!(
            "the first tableau does not precede the second: {cert} drops"
        )));
    }
    if strategy == Strategy::Parallelogram {
        if let Some(step) = parallelogram_step(y, z, &dh) {
            return Ok(Some(step));
        }
    }
    let ym = Module::from_klein(y);
    for (mv, res) in down_moves(z) {
        if DeltaHom::new(&ym, &Module::from_klein(&res)).is_nonnegative() {
            return Ok(Some((mv, res)));
        }
    }
    Err(Error::Incomparable(
        "no move stays above the target; the tableaux are not comparable".into(),
    ))
}

/// Positions in the grid the parallelogram search walks: glued pairs in the
/// band, socle pairs along its edge.
fn parallelogram_step(
    y: &KleinTableau,
    z: &KleinTableau,
    dh: &DeltaHom,
) -> Option<(Move, KleinTableau)> {
    let n = dh.n();
    let dm = DeltaMesh::new(&Module::from_klein(y), &Module::from_klein(z));

    // Step 1: the first maximal run of positive hom differences, scanning
    // the band levels upward and the socle row last.
    let mut run: Option<(Option<u32>, u32, u32)> = None; // (band level or socle, a, b)
    'scan: for l in 3..=n {
        let mut t = 1;
        while t <= l - 2 {
            if dh.b2(l, t) > 0 {
                let a = t;
                while t + 1 <= l - 2 && dh.b2(l, t + 1) > 0 {
                    t += 1;
                }
                run = Some((Some(l), a, t));
                break 'scan;
            }
            t += 1;
        }
    }
    if run.is_none() {
        let mut t = 1;
        while t <= n {
            if dh.p1(t) > 0 {
                let a = t;
                while t + 1 <= n && dh.p1(t + 1) > 0 {
                    t += 1;
                }
                run = Some((None, a, t));
                break;
            }
            t += 1;
        }
    }
    let (level0, a, b) = run?;

    // Step 2: walk the levels down from the run, left to right, for the
    // first summand the bigger tableau has in surplus.
    let mut upper: Option<Indec> = None;
    let levels: Vec<Option<u32>> = match level0 {
        Some(l0) => (l0..=n).map(Some).chain([None]).collect(),
        None => vec![None],
    };
    'step2: for lv in levels {
        for t in a..=b {
            let x = match lv {
                Some(l) => {
                    if t > l - 2 {
                        continue;
                    }
                    Indec::B2(l, t)
                }
                None => Indec::P1(t),
            };
            if dm.get(x) > 0 {
                upper = Some(x);
                break 'step2;
            }
        }
    }
    let upper = upper?;
    let t_upper = match upper {
        Indec::B2(_, t) => t,
        Indec::P1(t) => t,
        _ => unreachable!(),
    };

    // Step 3: walk back up from below the run, right to left over the
    // window one step left of the surplus, for a second surplus summand;
    // position 0 is the socle edge.
    let start = match level0 {
        Some(l0) => l0 - 1,
        None => n,
    };
    let mut lower: Option<Indec> = None;
    'step3: for l in (3..=start).rev() {
        let hi = (t_upper - 1).min(l - 2);
        let lo = a - 1;
        let mut t = hi;
        loop {
            if t < lo {
                break;
            }
            let x = if t == 0 { Indec::P1(l) } else { Indec::B2(l, t) };
            if dm.get(x) > 0 {
                lower = Some(x);
                break 'step3;
            }
            if t == 0 {
                break;
            }
            t -= 1;
        }
    }
    let lower = lower?;

    let mv = match (upper, lower) {
        (Indec::B2(l2, t2), Indec::B2(l1, t1)) => {
            if l2 > l1 {
                Move::A {
                    m: l2,
                    n: l1,
                    r: t2,
                    s: t1,
                }
            } else {
                Move::C {
                    m: l1,
                    n: l2,
                    r: t1,
                    s: t2,
                }
            }
        }
        (Indec::P1(r), Indec::B2(m, s)) => Move::B { m, r, s },
        (Indec::B2(m, s), Indec::P1(r)) => Move::D { m, r, s },
        _ => return None,
    };
    let res = mv.apply(z).ok()?;
    let ok = DeltaHom::new(&Module::from_klein(y), &Module::from_klein(&res)).is_nonnegative();
    ok.then_some((mv, res))
}

/// One step of a chain, for display and serialization.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Step {
    #[serde(rename = "move")]
    pub mv: Move,
    pub result: KleinTableau,
}

/// The full chain of moves from `z` down to `y`. Empty when they are equal.
pub fn move_sequence(y: &KleinTableau, z: &KleinTableau, strategy: Strategy) -> Result<Vec<Step>> {
    let mut steps = Vec::new();
    let mut cur = z.clone();
    let budget = ArcDiagram::from(z).crossings() + 1;
    for _ in 0..=budget {
        match find_move_step(y, &cur, strategy)? {
            Some((mv, res)) => {
                steps.push(Step {
                    mv,
                    result: res.clone(),
                });
                cur = res;
            }
            None => return Ok(steps),
        }
    }
    Err(Error::Incomparable(
        "the move search did not terminate".into(),
    ))
}

fn reachable(y: &KleinTableau, z: &KleinTableau, unit_only: bool) -> Result<bool> {
    ensure_same_type(y, z)?;
    let target_x = ArcDiagram::from(y).crossings();
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(z.clone());
    queue.push_back(z.clone());
    while let Some(cur) = queue.pop_front() {
        if &cur == y {
            return Ok(true);
        }
        let cur_x = ArcDiagram::from(&cur).crossings();
        for (_, res) in down_moves(&cur) {
            let res_x = ArcDiagram::from(&res).crossings();
            if unit_only && cur_x - res_x != 1 {
                continue;
            }
            // moves only uncross, so anything below the target is dead
            if res_x < target_x || seen.contains(&res) {
                continue;
            }
            seen.insert(res.clone());
            queue.push_back(res);
        }
    }
    Ok(false)
}

/// Does some chain of moves lead from `z` down to `y`? Decided by
/// exhaustive search, independently of any hom counting.
pub fn leq_moves(y: &KleinTableau, z: &KleinTableau) -> Result<bool> {
    reachable(y, z, false)
}

/// Does a chain of moves from `z` down to `y` exist that removes exactly
/// one crossing at a time?
pub fn unit_chain_exists(y: &KleinTableau, z: &KleinTableau) -> Result<bool> {
    reachable(y, z, true)
}

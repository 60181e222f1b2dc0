//! Exhaustive censuses of invariant subspaces over a prime field.
//!
//! A pair is represented concretely: the ambient space carries a nilpotent
//! operator in Jordan form, and the subspace is the image of an explicit
//! injective intertwiner. Everything the combinatorial layer predicts can
//! then be measured: hom dimensions between concrete pairs, the Jordan type
//! of the quotient, automorphism counts, and the partition of all embeddings
//! into equivalence classes.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::ff::gf::{nilpotent_matrix, Echelon, Gf, Mat};
use crate::partition::Partition;
use crate::s2::{Indec, Module};
use crate::tableau::KleinTableau;

/// A concrete pair over the field: the ambient operator is
/// `nilpotent_matrix(beta)` and the subspace is the column span of `f`,
/// an intertwiner from `nilpotent_matrix(alpha)`.
#[derive(Clone, Debug)]
pub struct PairRep {
    pub alpha: Partition,
    pub beta: Partition,
    pub f: Mat,
}

impl PairRep {
    /// The canonical block-diagonal embedding realizing a module: each
    /// summand places its generators in its own ambient blocks.
    pub fn canonical(m: &Module) -> PairRep {
        let alpha = m.alpha();
        let beta = m.beta();
        let beta_offsets = block_offsets(&beta);
        let alpha_offsets = block_offsets(&alpha);
        let mut beta_used = vec![false; beta.len()];
        let mut alpha_used = vec![false; alpha.len()];
        let mut take_beta = |size: u32| -> usize {
            let i = beta
                .parts()
                .iter()
                .enumerate()
                .position(|(i, &b)| !beta_used[i] && b == size)
                .expect("every summand block appears in the aggregate type");
            beta_used[i] = true;
            beta_offsets[i]
        };
        let mut take_alpha = |size: u32| -> usize {
            let i = alpha
                .parts()
                .iter()
                .enumerate()
                .position(|(i, &a)| !alpha_used[i] && a == size)
                .expect("every summand subspace appears in the aggregate type");
            alpha_used[i] = true;
            alpha_offsets[i]
        };
        let mut f = Mat::zero(beta.size() as usize, alpha.size() as usize);
        for &x in m.summands() {
            match x {
                Indec::P0(m) => {
                    take_beta(m);
                }
                Indec::P1(m) => {
                    let o = take_beta(m);
                    let oa = take_alpha(1);
                    f.set(o, oa, 1);
                }
                Indec::P2(m) => {
                    let o = take_beta(m);
                    let oa = take_alpha(2);
                    f.set(o, oa, 1);
                    f.set(o + 1, oa + 1, 1);
                }
                Indec::B2(m, r) => {
                    let o1 = take_beta(m);
                    let o2 = take_beta(r);
                    let oa = take_alpha(2);
                    f.set(o1, oa, 1);
                    f.set(o1 + 1, oa + 1, 1);
                    f.set(o2, oa + 1, 1);
                }
            }
        }
        PairRep { alpha, beta, f }
    }

    pub fn indec(x: Indec) -> PairRep {
        PairRep::canonical(&Module::new(vec![x]))
    }

    pub fn a_alpha(&self) -> Mat {
        nilpotent_matrix(&self.alpha)
    }

    pub fn a_beta(&self) -> Mat {
        nilpotent_matrix(&self.beta)
    }
}

fn block_offsets(lambda: &Partition) -> Vec<usize> {
    let mut offsets = Vec::with_capacity(lambda.len());
    let mut o = 0;
    for &m in lambda.parts() {
        offsets.push(o);
        o += m as usize;
    }
    offsets
}

/// A basis of the intertwiners from `nilpotent_matrix(src)` to
/// `nilpotent_matrix(dst)`: one map per block pair and per depth, sending
/// the source generator to a kernel vector of the target block.
pub fn intertwiner_basis(src: &Partition, dst: &Partition) -> Vec<Mat> {
    let src_off = block_offsets(src);
    let dst_off = block_offsets(dst);
    let mut basis = Vec::new();
    for (i, &a) in src.parts().iter().enumerate() {
        for (j, &b) in dst.parts().iter().enumerate() {
            for u in 1..=a.min(b) {
                let mut m = Mat::zero(dst.size() as usize, src.size() as usize);
                // e_s of the source block lands u - a + s deep in the target
                for s in 1..=a {
                    let t = u as i64 - a as i64 + s as i64;
                    if t >= 1 {
                        m.set(dst_off[j] + t as usize - 1, src_off[i] + s as usize - 1, 1);
                    }
                }
                basis.push(m);
            }
        }
    }
    basis
}

fn flatten(m: &Mat) -> Vec<u64> {
    let mut v = Vec::with_capacity(m.rows() * m.cols());
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            v.push(m.get(i, j));
        }
    }
    v
}

fn lincomb(mats: &[Mat], coeffs: &[u64], rows: usize, cols: usize, gf: Gf) -> Mat {
    let mut out = Mat::zero(rows, cols);
    for (b, &c) in mats.iter().zip(coeffs) {
        if c == 0 {
            continue;
        }
        for i in 0..rows {
            for j in 0..cols {
                let cur = out.get(i, j);
                out.set(i, j, gf.add(cur, gf.mul(c, b.get(i, j))));
            }
        }
    }
    out
}

fn digits(mut idx: u64, p: u64, d: usize) -> Vec<u64> {
    let mut out = vec![0; d];
    for slot in out.iter_mut() {
        *slot = idx % p;
        idx /= p;
    }
    out
}

/// Maps of pairs from `x` to `y`: the ambient and subspace intertwiner
/// dimensions minus the rank of the compatibility constraint.
pub fn hom_between(x: &PairRep, y: &PairRep, gf: Gf) -> u64 {
    let b1 = intertwiner_basis(&x.beta, &y.beta);
    let b2 = intertwiner_basis(&x.alpha, &y.alpha);
    let dim = y.beta.size() as usize * x.alpha.size() as usize;
    let mut ech = Echelon::new(gf, dim);
    let mut rank = 0usize;
    for b in &b1 {
        if ech.insert(flatten(&b.mul(&x.f, gf))) {
            rank += 1;
        }
    }
    for b in &b2 {
        if ech.insert(flatten(&y.f.mul(b, gf))) {
            rank += 1;
        }
    }
    (b1.len() + b2.len() - rank) as u64
}

/// The Jordan type of the quotient of the ambient space by the column span
/// of `f`, read off the rank profile of the induced operator powers.
pub fn coker_type(beta: &Partition, f: &Mat, gf: Gf) -> Partition {
    let a = nilpotent_matrix(beta);
    let rank_f = f.rank(gf);
    let mut conj = Vec::new();
    let mut prev = beta.size() as usize - rank_f;
    let mut power = Mat::identity(beta.size() as usize);
    for _ in 0..beta.first() {
        power = power.mul(&a, gf);
        let r = power.hstack(f).rank(gf) - rank_f;
        if prev > r {
            conj.push((prev - r) as u32);
        }
        prev = r;
        if r == 0 {
            break;
        }
    }
    Partition::new(conj)
        .expect("quotient rank differences decrease")
        .conjugate()
}

/// The automorphism count of a nilpotent operator of type `lambda` over the
/// field with `q` elements.
pub fn aut_order(lambda: &Partition, q: u64) -> u128 {
    let mut mults: BTreeMap<u32, u32> = BTreeMap::new();
    for &part in lambda.parts() {
        *mults.entry(part).or_insert(0) += 1;
    }
    let mult_term: u64 = mults.values().map(|&m| (m as u64) * (m as u64 + 1) / 2).sum();
    let exp = lambda.size() + 2 * lambda.moment() - mult_term;
    let mut out = (q as u128).pow(exp as u32);
    for &m in mults.values() {
        for j in 1..=m {
            out *= (q as u128).pow(j) - 1;
        }
    }
    out
}

/// A basis of the endomorphisms of the pair `y`, as (subspace map, ambient
/// map) matrices.
pub fn endo_basis(y: &PairRep, gf: Gf) -> Vec<(Mat, Mat)> {
    let b1 = intertwiner_basis(&y.beta, &y.beta);
    let b2 = intertwiner_basis(&y.alpha, &y.alpha);
    let nrows = y.beta.size() as usize * y.alpha.size() as usize;
    // columns: ambient coefficients, then subspace coefficients
    let mut constraint = Mat::zero(nrows, b1.len() + b2.len());
    for (col, b) in b1.iter().enumerate() {
        for (row, &v) in flatten(&b.mul(&y.f, gf)).iter().enumerate() {
            constraint.set(row, col, v);
        }
    }
    for (col, b) in b2.iter().enumerate() {
        for (row, &v) in flatten(&y.f.mul(b, gf)).iter().enumerate() {
            constraint.set(row, b1.len() + col, gf.neg(v));
        }
    }
    let arows = y.alpha.size() as usize;
    let brows = y.beta.size() as usize;
    constraint
        .kernel_basis(gf)
        .into_iter()
        .map(|v| {
            let h = lincomb(&b1, &v[..b1.len()], brows, brows, gf);
            let g = lincomb(&b2, &v[b1.len()..], arows, arows, gf);
            (g, h)
        })
        .collect()
}

/// The stabilizer order of the embedding: invertible endomorphism pairs.
/// Small endomorphism rings are counted by brute force; larger ones through
/// the multiplicity formula, since modulo its radical the endomorphism ring
/// is a product of matrix rings over the prime field, one factor per
/// distinct summand.
pub fn stabilizer_order(y: &PairRep, m: &Module, gf: Gf) -> u128 {
    let basis = endo_basis(y, gf);
    let dim = basis.len();
    assert_eq!(
        dim as u64,
        m.dim_end(),
        "the endomorphism count of the concrete pair must match the table"
    );
    let p = gf.p();
    if (p as f64).powi(dim as i32) <= (1u64 << 14) as f64 {
        let points = p.pow(dim as u32);
        let arows = y.alpha.size() as usize;
        let brows = y.beta.size() as usize;
        return (0..points)
            .filter(|&idx| {
                let coeffs = digits(idx, p, dim);
                let mut g = Mat::zero(arows, arows);
                let mut h = Mat::zero(brows, brows);
                for (k, &c) in coeffs.iter().enumerate() {
                    if c == 0 {
                        continue;
                    }
                    for i in 0..arows {
                        for j in 0..arows {
                            let cur = g.get(i, j);
                            g.set(i, j, gf.add(cur, gf.mul(c, basis[k].0.get(i, j))));
                        }
                    }
                    for i in 0..brows {
                        for j in 0..brows {
                            let cur = h.get(i, j);
                            h.set(i, j, gf.add(cur, gf.mul(c, basis[k].1.get(i, j))));
                        }
                    }
                }
                g.rank(gf) == arows && h.rank(gf) == brows
            })
            .count() as u128;
    }
    let mut mults: BTreeMap<Indec, u64> = BTreeMap::new();
    for &x in m.summands() {
        *mults.entry(x).or_insert(0) += 1;
    }
    // p^(dim - sum m(m+1)/2) * prod |GL_m| / p^(m(m-1)/2), i.e. the radical
    // contributes a full power of p and each matrix factor its unit count
    let triangle: u64 = mults.values().map(|&m| m * (m + 1) / 2).sum();
    let mut out = (p as u128).pow(dim as u32 - triangle as u32);
    for &m in mults.values() {
        for j in 1..=m {
            out *= (p as u128).pow(j as u32) - 1;
        }
    }
    out
}

fn u128_as_string<S: Serializer>(v: &u128, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

/// One equivalence class of embeddings found by the census.
#[derive(Clone, Debug, Serialize)]
pub struct CensusClass {
    pub gamma: Partition,
    pub module: Module,
    pub count: u64,
    #[serde(serialize_with = "u128_as_string")]
    pub stabilizer: u128,
    pub orbit_identity: bool,
}

/// The full census of a subspace type inside an ambient type.
#[derive(Clone, Debug, Serialize)]
pub struct Census {
    pub prime: u32,
    pub alpha: Partition,
    pub beta: Partition,
    pub intertwiner_dim: u32,
    pub points: u64,
    pub injective: u64,
    #[serde(serialize_with = "u128_as_string")]
    pub group_order: u128,
    pub classes: Vec<CensusClass>,
}

/// The test objects whose hom counts separate equivalence classes of a
/// common ambient bound: socles, cyclic length-2 subspaces, and the glued
/// two-block pairs.
pub fn test_family(max_block: u32) -> Vec<Indec> {
    let n = max_block;
    let mut family = Vec::new();
    for t in 1..=n {
        family.push(Indec::P1(t));
    }
    for m in 2..=n {
        family.push(Indec::P2(m));
    }
    for l in 3..=n {
        for t in 1..=l - 2 {
            family.push(Indec::B2(l, t));
        }
    }
    family
}

/// All partitions of `n` fitting under `bound` part by part.
fn partitions_inside(n: u64, bound: &Partition) -> Vec<Partition> {
    fn go(left: u64, max: u32, idx: usize, bound: &Partition, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if left == 0 {
            out.push(Partition::new(cur.clone()).expect("parts are built decreasing"));
            return;
        }
        let cap = max.min(bound.part(idx)).min(left.min(u32::MAX as u64) as u32);
        for next in (1..=cap).rev() {
            cur.push(next);
            go(left - next as u64, next, idx + 1, bound, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, u32::MAX, 0, bound, &mut Vec::new(), &mut out);
    out
}

/// Sweeps every intertwiner of the subspace type into the ambient type,
/// keeps the injective ones, classifies them by quotient type and hom
/// fingerprint, and matches the classes against the tableau enumeration.
/// Each class is counted, its stabilizer computed, and the orbit identity
/// `count * stabilizer = group order` checked.
pub fn census(alpha: &Partition, beta: &Partition, p: u32, budget: u64) -> Result<Census> {
    let gf = Gf::new(p)?;
    if !Partition::contains(beta, alpha) {
        return Err(Error::Malformed(format!(
            "subspace type {alpha} does not fit inside {beta}"
        )));
    }
    let basis = intertwiner_basis(alpha, beta);
    let d = basis.len();
    let points = (p as u128)
        .checked_pow(d as u32)
        .filter(|&pts| pts <= budget as u128)
        .ok_or_else(|| {
            Error::BudgetExceeded(format!(
                "{p}^{d} intertwiners exceed the budget of {budget} points"
            ))
        })? as u64;
    let brows = beta.size() as usize;
    let acols = alpha.size() as usize;

    // per test object: the embedding-independent half of the constraint
    // space is echelonized once
    struct TestSlot {
        d1: usize,
        d2: usize,
        ech: Echelon,
        right: Vec<Mat>,
    }
    let family = test_family(beta.first());
    let slots: Vec<TestSlot> = family
        .iter()
        .map(|&x| {
            let xr = PairRep::indec(x);
            let b1 = intertwiner_basis(&xr.beta, beta);
            let b2 = intertwiner_basis(&xr.alpha, alpha);
            let mut ech = Echelon::new(gf, brows * xr.alpha.size() as usize);
            for b in &b1 {
                ech.insert(flatten(&b.mul(&xr.f, gf)));
            }
            TestSlot {
                d1: b1.len(),
                d2: b2.len(),
                ech,
                right: b2,
            }
        })
        .collect();
    let powers: Vec<Mat> = {
        let a = nilpotent_matrix(beta);
        let mut acc = Vec::with_capacity(beta.first() as usize);
        let mut cur = Mat::identity(brows);
        for _ in 0..beta.first() {
            cur = cur.mul(&a, gf);
            acc.push(cur.clone());
        }
        acc
    };

    type Key = (Vec<u32>, Vec<u64>);
    let merge = |mut a: BTreeMap<Key, (u64, u64)>, b: BTreeMap<Key, (u64, u64)>| {
        for (k, (count, rep)) in b {
            let e = a.entry(k).or_insert((0, rep));
            e.0 += count;
            e.1 = e.1.min(rep);
        }
        a
    };
    let found: BTreeMap<Key, (u64, u64)> = (0..points)
        .into_par_iter()
        .fold(BTreeMap::new, |mut map: BTreeMap<Key, (u64, u64)>, idx| {
            let f = lincomb(&basis, &digits(idx, p as u64, d), brows, acols, gf);
            if f.rank(gf) != acols {
                return map;
            }
            let rank_f = acols;
            let mut conj = Vec::new();
            let mut prev = brows - rank_f;
            for power in &powers {
                let r = power.hstack(&f).rank(gf) - rank_f;
                if prev > r {
                    conj.push((prev - r) as u32);
                }
                prev = r;
                if r == 0 {
                    break;
                }
            }
            let gamma = Partition::new(conj)
                .expect("quotient rank differences decrease")
                .conjugate();
            let fingerprint: Vec<u64> = slots
                .iter()
                .map(|slot| {
                    let mut ech = slot.ech.clone();
                    for b in &slot.right {
                        ech.insert(flatten(&f.mul(b, gf)));
                    }
                    (slot.d1 + slot.d2 - ech.rank()) as u64
                })
                .collect();
            let e = map
                .entry((gamma.parts().to_vec(), fingerprint))
                .or_insert((0, idx));
            e.0 += 1;
            e.1 = e.1.min(idx);
            map
        })
        .reduce(BTreeMap::new, merge);

    // predicted classes: every refinement of every filling, for every
    // quotient type that fits
    let mut predicted: BTreeMap<Key, Module> = BTreeMap::new();
    for gamma in partitions_inside(beta.size() - alpha.size(), beta) {
        for k in KleinTableau::enumerate_type(alpha, beta, &gamma)? {
            let module = Module::from_klein(&k);
            let fingerprint: Vec<u64> = family.iter().map(|&x| module.hom_from(x)).collect();
            let key = (gamma.parts().to_vec(), fingerprint);
            if let Some(other) = predicted.insert(key, module.clone()) {
                panic!("distinct classes {other} and {module} share a hom fingerprint");
            }
        }
    }
    if found.len() != predicted.len() {
        return Err(Error::Malformed(format!(
            "the census found {} classes but the tableau enumeration predicts {}",
            found.len(),
            predicted.len()
        )));
    }

    let group_order = aut_order(alpha, p as u64) * aut_order(beta, p as u64);
    let mut injective = 0;
    let mut classes = Vec::new();
    for (key, (count, _rep)) in &found {
        let module = predicted.remove(key).ok_or_else(|| {
            Error::Malformed(format!(
                "a census class with quotient type ({}) matches no predicted module",
                key.0
                    .iter()
                    .map(|p| p.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            ))
        })?;
        injective += count;
        let stab = stabilizer_order(&PairRep::canonical(&module), &module, gf);
        classes.push(CensusClass {
            gamma: Partition::new(key.0.clone()).expect("census keys hold valid types"),
            module,
            count: *count,
            stabilizer: stab,
            orbit_identity: (*count as u128) * stab == group_order,
        });
    }
    classes.sort_by(|a, b| {
        (&a.gamma, a.module.summands()).cmp(&(&b.gamma, b.module.summands()))
    });
    Ok(Census {
        prime: p,
        alpha: alpha.clone(),
        beta: beta.clone(),
        intertwiner_dim: d as u32,
        points,
        injective,
        group_order,
        classes,
    })
}

//! Dense linear algebra over a small prime field, sized for exhaustive
//! censuses of subspace embeddings.

use crate::error::{Error, Result};
use crate::partition::Partition;

/// The field context: arithmetic modulo a small prime.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Gf {
    p: u64,
}

impl Gf {
    pub fn new(p: u32) -> Result<Gf> {
        let ok = p >= 2 && (2..p).take_while(|d| d * d <= p).all(|d| p % d != 0);
        if !ok {
            return Err(Error::Malformed(format!("{p} is not a prime")));
        }
        Ok(Gf { p: p as u64 })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        (a + b) % self.p
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        (a + self.p - b % self.p) % self.p
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }

    pub fn neg(&self, a: u64) -> u64 {
        (self.p - a % self.p) % self.p
    }

    pub fn inv(&self, a: u64) -> u64 {
        assert!(a % self.p != 0, "zero has no inverse");
        // Fermat: a^(p-2)
        let mut base = a % self.p;
        let mut e = self.p - 2;
        let mut acc = 1;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }
}

/// A dense matrix with entries reduced modulo the field prime.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mat {
    rows: usize,
    cols: usize,
    a: Vec<u64>,
}

impl Mat {
    pub fn zero(rows: usize, cols: usize) -> Mat {
        Mat {
            rows,
            cols,
            a: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Mat {
        let mut m = Mat::zero(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.a[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: u64) {
        self.a[i * self.cols + j] = v;
    }

    pub fn mul(&self, other: &Mat, gf: Gf) -> Mat {
        assert_eq!(self.cols, other.rows);
        let mut out = Mat::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let v = self.get(i, k);
                if v == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let cur = out.get(i, j);
                    out.set(i, j, gf.add(cur, gf.mul(v, other.get(k, j))));
                }
            }
        }
        out
    }

    pub fn pow(&self, k: u32, gf: Gf) -> Mat {
        assert_eq!(self.rows, self.cols);
        let mut out = Mat::identity(self.rows);
        for _ in 0..k {
            out = out.mul(self, gf);
        }
        out
    }

    /// Columns of `self` followed by columns of `other`.
    pub fn hstack(&self, other: &Mat) -> Mat {
        assert_eq!(self.rows, other.rows);
        let mut out = Mat::zero(self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.get(i, j));
            }
            for j in 0..other.cols {
                out.set(i, self.cols + j, other.get(i, j));
            }
        }
        out
    }

    pub fn col(&self, j: usize) -> Vec<u64> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn rank(&self, gf: Gf) -> usize {
        let mut ech = Echelon::new(gf, self.cols);
        for i in 0..self.rows {
            ech.insert((0..self.cols).map(|j| self.get(i, j)).collect());
        }
        ech.rank()
    }

    /// Solution basis of `self * x = 0`.
    pub fn kernel_basis(&self, gf: Gf) -> Vec<Vec<u64>> {
        // echelonize the rows, tracking pivot columns
        let mut ech = Echelon::new(gf, self.cols);
        for i in 0..self.rows {
            ech.insert((0..self.cols).map(|j| self.get(i, j)).collect());
        }
        let pivots: Vec<usize> = ech.rows.iter().map(|&(pc, _)| pc).collect();
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivots.contains(&free) {
                continue;
            }
            let mut v = vec![0; self.cols];
            v[free] = 1;
            // back-substitute the pivot coordinates
            for &(pc, ref row) in ech.rows.iter().rev() {
                let mut dot = 0;
                for j in pc + 1..self.cols {
                    dot = gf.add(dot, gf.mul(row[j], v[j]));
                }
                v[pc] = gf.neg(dot);
            }
            basis.push(v);
        }
        basis
    }
}

/// A growing echelon basis: vectors reduce against the stored rows, and new
/// pivots extend it. Rows are kept normalized with pivot 1.
#[derive(Clone, Debug)]
pub struct Echelon {
    gf: Gf,
    rows: Vec<(usize, Vec<u64>)>,
}

impl Echelon {
    pub fn new(gf: Gf, _dim: usize) -> Echelon {
        Echelon {
            gf,
            rows: Vec::new(),
        }
    }

    /// Reduces `v` in place against the stored basis.
    pub fn reduce(&self, v: &mut [u64]) {
        for &(pc, ref row) in &self.rows {
            let c = v[pc] % self.gf.p;
            if c == 0 {
                continue;
            }
            for j in pc..v.len() {
                v[j] = self.gf.sub(v[j], self.gf.mul(c, row[j]));
            }
        }
    }

    /// Reduces and, if anything is left, stores the vector; returns whether
    /// the rank grew.
    pub fn insert(&mut self, mut v: Vec<u64>) -> bool {
        self.reduce(&mut v);
        let pc = match v.iter().position(|&x| x % self.gf.p != 0) {
            Some(pc) => pc,
            None => return false,
        };
        let inv = self.gf.inv(v[pc]);
        for x in &mut v[pc..] {
            *x = self.gf.mul(*x, inv);
        }
        let at = self.rows.partition_point(|&(c, _)| c < pc);
        self.rows.insert(at, (pc, v));
        true
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }
}

/// The nilpotent operator of the given type in Jordan form: one block per
/// part, each generator sent to its predecessor, the first to zero.
pub fn nilpotent_matrix(lambda: &Partition) -> Mat {
    let n = lambda.size() as usize;
    let mut a = Mat::zero(n, n);
    let mut offset = 0;
    for &m in lambda.parts() {
        for k in 1..m as usize {
            a.set(offset + k - 1, offset + k, 1);
        }
        offset += m as usize;
    }
    a
}

/// Reads the Jordan type off the rank profile of the powers.
pub fn jordan_type(a: &Mat, gf: Gf) -> Partition {
    assert_eq!(a.rows(), a.cols());
    let mut conj = Vec::new();
    let mut prev = a.rows();
    let mut power = Mat::identity(a.rows());
    loop {
        power = power.mul(a, gf);
        let r = power.rank(gf);
        if prev == r {
            assert_eq!(r, 0, "the matrix is not nilpotent");
            break;
        }
        conj.push((prev - r) as u32);
        prev = r;
        if r == 0 {
            break;
        }
    }
    Partition::new(conj)
        .expect("rank differences of a nilpotent matrix decrease")
        .conjugate()
}

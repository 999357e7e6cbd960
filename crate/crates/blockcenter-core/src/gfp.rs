//! Linear algebra over a prime field GF(p) for small p.
//!
//! Elements are `u64` residues in `0..p`; matrices are dense row-major.  The
//! central abstraction is [`Subspace`]: a canonical reduced row echelon basis
//! of a subspace of GF(p)^n, so that subspace equality is literal data
//! equality.  Dimensions in this crate stay tiny (the algebra modules cap at
//! a few dozen), so there is no bit packing here; the packed GF(2) engine in
//! [`crate::gf2`] covers the one genuinely large computation (resolutions).

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// Inverse mod p via Fermat (p prime, 0 < a < p).
pub fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(p));
    pow_mod(a % p, p - 2, p)
}

pub fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

/// Dense matrix over GF(p).
#[derive(Clone, PartialEq, Eq)]
pub struct GfpMat {
    pub p: u64,
    rows: usize,
    cols: usize,
    data: Vec<u64>,
}

impl GfpMat {
    pub fn zeros(p: u64, rows: usize, cols: usize) -> Self {
        GfpMat { p, rows, cols, data: vec![0; rows * cols] }
    }

    pub fn from_rows(p: u64, rows: &[Vec<u64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend(row.iter().map(|&x| x % p));
        }
        GfpMat { p, rows: r, cols: c, data }
    }

    pub fn identity(p: u64, n: usize) -> Self {
        let mut m = GfpMat::zeros(p, n, n);
        for i in 0..n {
            m[(i, i)] = 1;
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[u64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn push_row(&mut self, row: &[u64]) {
        assert_eq!(row.len(), self.cols);
        self.data.extend(row.iter().map(|&x| x % self.p));
        self.rows += 1;
    }

    /// In-place reduced row echelon form; returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let p = self.p;
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            let Some(pr) = (r..self.rows).find(|&i| self[(i, c)] != 0) else {
                continue;
            };
            self.swap_rows(r, pr);
            let inv = inv_mod(self[(r, c)], p);
            for j in c..self.cols {
                self[(r, j)] = self[(r, j)] * inv % p;
            }
            for i in 0..self.rows {
                if i == r || self[(i, c)] == 0 {
                    continue;
                }
                let f = self[(i, c)];
                for j in c..self.cols {
                    let t = self[(r, j)] * f % p;
                    self[(i, j)] = (self[(i, j)] + p - t) % p;
                }
            }
            pivots.push(c);
            r += 1;
            if r == self.rows {
                break;
            }
        }
        // drop zero rows
        self.data.truncate(r * self.cols);
        self.rows = r;
        pivots
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref().len()
    }

    /// Basis of `{x : self · x = 0}` as rows.
    pub fn kernel(&self) -> GfpMat {
        let p = self.p;
        let mut m = self.clone();
        let pivots = m.rref();
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let free: Vec<usize> = (0..self.cols).filter(|&c| !is_pivot[c]).collect();
        let mut out = GfpMat::zeros(p, free.len(), self.cols);
        for (k, &fc) in free.iter().enumerate() {
            out[(k, fc)] = 1;
            for (r, &pc) in pivots.iter().enumerate() {
                // x_pc = -m[r][fc] * x_fc
                out[(k, pc)] = (p - m[(r, fc)]) % p;
            }
        }
        out
    }

    pub fn mul(&self, rhs: &GfpMat) -> GfpMat {
        assert_eq!(self.cols, rhs.rows);
        assert_eq!(self.p, rhs.p);
        let p = self.p;
        let mut out = GfpMat::zeros(p, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == 0 {
                    continue;
                }
                for j in 0..rhs.cols {
                    out[(i, j)] = (out[(i, j)] + a * rhs[(k, j)]) % p;
                }
            }
        }
        out
    }

    /// Solves `self · x = b` (first solution found), or `None`.
    pub fn solve(&self, b: &[u64]) -> Option<Vec<u64>> {
        assert_eq!(b.len(), self.rows);
        let p = self.p;
        let mut aug = GfpMat::zeros(p, self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug[(i, j)] = self[(i, j)];
            }
            aug[(i, self.cols)] = b[i] % p;
        }
        let pivots = aug.rref();
        if pivots.contains(&self.cols) {
            return None; // inconsistent
        }
        let mut x = vec![0u64; self.cols];
        for (r, &c) in pivots.iter().enumerate() {
            x[c] = aug[(r, self.cols)];
        }
        Some(x)
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn transpose(&self) -> GfpMat {
        let mut t = GfpMat::zeros(self.p, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)];
            }
        }
        t
    }
}

impl core::ops::Index<(usize, usize)> for GfpMat {
    type Output = u64;
    fn index(&self, (i, j): (usize, usize)) -> &u64 {
        &self.data[i * self.cols + j]
    }
}

impl core::ops::IndexMut<(usize, usize)> for GfpMat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut u64 {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for GfpMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "GfpMat(p={}) {}x{} [", self.p, self.rows, self.cols)?;
        for i in 0..self.rows {
            write!(f, "  ")?;
            for j in 0..self.cols {
                write!(f, "{} ", self[(i, j)])?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

/// A subspace of GF(p)^n held as its canonical RREF basis.
#[derive(Clone, PartialEq, Eq)]
pub struct Subspace {
    basis: GfpMat,
}

impl Subspace {
    pub fn zero(p: u64, ambient: usize) -> Self {
        Subspace { basis: GfpMat::zeros(p, 0, ambient) }
    }

    pub fn full(p: u64, ambient: usize) -> Self {
        Subspace { basis: GfpMat::identity(p, ambient) }
    }

    pub fn from_spanning(mut rows: GfpMat) -> Self {
        rows.rref();
        Subspace { basis: rows }
    }

    pub fn from_vectors(p: u64, ambient: usize, vecs: &[Vec<u64>]) -> Self {
        let mut m = GfpMat::zeros(p, 0, ambient);
        for v in vecs {
            m.push_row(v);
        }
        Subspace::from_spanning(m)
    }

    pub fn p(&self) -> u64 {
        self.basis.p
    }

    pub fn ambient(&self) -> usize {
        self.basis.cols()
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn basis(&self) -> &GfpMat {
        &self.basis
    }

    pub fn basis_rows(&self) -> impl Iterator<Item = &[u64]> {
        (0..self.dim()).map(|i| self.basis.row(i))
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn contains(&self, v: &[u64]) -> bool {
        let p = self.p();
        let mut v: Vec<u64> = v.iter().map(|&x| x % p).collect();
        // reduce against the echelon basis
        for i in 0..self.dim() {
            let row = self.basis.row(i);
            let pivot = row.iter().position(|&x| x != 0).expect("nonzero basis row");
            if v[pivot] != 0 {
                let f = v[pivot]; // row has pivot 1
                for j in 0..v.len() {
                    let t = f * row[j] % p;
                    v[j] = (v[j] + p - t) % p;
                }
            }
        }
        v.iter().all(|&x| x == 0)
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis_rows().all(|r| self.contains(r))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient(), other.ambient());
        let mut m = self.basis.clone();
        for r in other.basis_rows() {
            m.push_row(r);
        }
        Subspace::from_spanning(m)
    }

    /// Intersection via the kernel of the stacked basis:
    /// `x ∈ U ∩ W  ⟺  x = λ·B_U = μ·B_W`.
    pub fn intersect(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient(), other.ambient());
        let p = self.p();
        let (du, dw) = (self.dim(), other.dim());
        if du == 0 || dw == 0 {
            return Subspace::zero(p, self.ambient());
        }
        // columns: λ coefficients then μ coefficients; rows: ambient coords
        let mut m = GfpMat::zeros(p, self.ambient(), du + dw);
        for (k, r) in self.basis_rows().enumerate() {
            for (i, &x) in r.iter().enumerate() {
                m[(i, k)] = x;
            }
        }
        for (k, r) in other.basis_rows().enumerate() {
            for (i, &x) in r.iter().enumerate() {
                m[(i, du + k)] = (p - x) % p;
            }
        }
        let ker = m.kernel();
        let mut vecs = GfpMat::zeros(p, 0, self.ambient());
        for t in 0..ker.rows() {
            let lam = &ker.row(t)[..du];
            let mut v = vec![0u64; self.ambient()];
            for (k, r) in self.basis_rows().enumerate() {
                for (i, &x) in r.iter().enumerate() {
                    v[i] = (v[i] + lam[k] * x) % p;
                }
            }
            vecs.push_row(&v);
        }
        Subspace::from_spanning(vecs)
    }

    /// Coordinates of `v` in this basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[u64]) -> Option<Vec<u64>> {
        self.basis.transpose().solve(v)
    }

    /// Every element of the subspace, by odometer over basis coefficients.
    /// For exhaustive desk-scale searches only; guarded against blowup.
    pub fn elements(&self) -> Vec<Vec<u64>> {
        let d = self.dim();
        let count = (self.p() as u128).checked_pow(d as u32).expect("subspace too large");
        assert!(count <= 1 << 20, "subspace too large to enumerate");
        let mut out = Vec::with_capacity(count as usize);
        let mut coeffs = vec![0u64; d];
        loop {
            let mut v = vec![0u64; self.ambient()];
            for (c, row) in coeffs.iter().zip(self.basis_rows()) {
                if *c != 0 {
                    for (t, x) in row.iter().enumerate() {
                        v[t] = (v[t] + c * x) % self.p();
                    }
                }
            }
            out.push(v);
            // odometer
            let mut i = 0;
            loop {
                if i == d {
                    return out;
                }
                coeffs[i] += 1;
                if coeffs[i] < self.p() {
                    break;
                }
                coeffs[i] = 0;
                i += 1;
            }
        }
    }

    /// Basis rows of `self` that are independent modulo `sub` (a complement
    /// of `sub ∩ self` inside `self` — callers pass `sub ⊆ self`).
    pub fn complement_basis_mod(&self, sub: &Subspace) -> Vec<Vec<u64>> {
        let mut acc = sub.clone();
        let mut out = Vec::new();
        for r in self.basis_rows() {
            if !acc.contains(r) {
                out.push(r.to_vec());
                acc = acc.sum(&Subspace::from_vectors(self.p(), self.ambient(), &[r.to_vec()]));
            }
        }
        out
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace(dim {} of GF({})^{})", self.dim(), self.p(), self.ambient())
    }
}

//! Finite-dimensional unital algebras over a prime field, given by structure
//! constants: radical filtration, socles, center, commutator space,
//! Külshammer subspaces, symmetrizing forms and perp spaces.
//!
//! The radical is computed for two verified situations: algebras *presented
//! locally* (the span of the non-unit basis vectors is a nilpotent ideal,
//! checked a posteriori) and commutative algebras (nilradical via iterated
//! Frobenius kernels — the p-power map is linear over GF(p)).  General
//! radical algorithms (Friedl–Rónyai) are deliberately out of scope; every
//! algebra this toolkit ships or derives falls into one of the two cases.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::gfp::{GfpMat, Subspace};
use crate::rng::SplitMix64;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    /// Structure constants violate an axiom; the message pins the triple.
    BadStructure(String),
    /// The non-unit basis span is not a nilpotent ideal and the algebra is
    /// not commutative, so no supported radical algorithm applies.
    NotPresentedLocal,
    /// Külshammer subspaces are defined here only in characteristic 2.
    OddCharacteristic,
    /// No symmetrizing form exists (`exhaustive`) or none was found by
    /// sampling (`!exhaustive` — low confidence, not a proof).
    NotSymmetric { exhaustive: bool },
    /// The supplied linear form is not symmetrizing.
    FormNotSymmetrizing,
    /// A subalgebra constructor received a set that is not closed (or does
    /// not contain the unit as one of its basis vectors).
    NotClosed(&'static str),
    Shape(&'static str),
}

impl fmt::Display for AlgebraError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgebraError::BadStructure(why) => write!(f, "bad structure constants: {why}"),
            AlgebraError::NotPresentedLocal => write!(
                f,
                "radical unsupported: not presented-local and not commutative"
            ),
            AlgebraError::OddCharacteristic => {
                write!(f, "operation requires characteristic 2")
            }
            AlgebraError::NotSymmetric { exhaustive: true } => {
                write!(f, "no symmetrizing form exists (exhaustive search)")
            }
            AlgebraError::NotSymmetric { exhaustive: false } => {
                write!(f, "no symmetrizing form found (sampling only — low confidence)")
            }
            AlgebraError::FormNotSymmetrizing => write!(f, "form is not symmetrizing"),
            AlgebraError::NotClosed(ctx) => write!(f, "not a unital subalgebra: {ctx}"),
            AlgebraError::Shape(ctx) => write!(f, "shape error: {ctx}"),
        }
    }
}

impl core::error::Error for AlgebraError {}

/// Socle variants: `Left` is `{v : v·J = 0}`, `Right` is `{v : J·v = 0}`,
/// `TwoSided` their intersection.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
    TwoSided,
}

/// A linear functional `A → GF(p)`, stored by its values on the basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearForm {
    pub coeffs: Vec<u64>,
}

/// A unital associative algebra over GF(p) with a distinguished basis; the
/// unit is the basis vector `unit_index`.  All axioms are verified on
/// construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinDimAlgebra {
    p: u64,
    dim: usize,
    unit_index: usize,
    labels: Vec<String>,
    /// `table[i*dim + j]` = coordinates of `e_i·e_j`.
    table: Vec<Vec<u64>>,
}

fn is_small_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl FinDimAlgebra {
    pub fn new(
        p: u64,
        unit_index: usize,
        labels: Vec<String>,
        mut table: Vec<Vec<u64>>,
    ) -> Result<Self, AlgebraError> {
        if !is_small_prime(p) {
            return Err(AlgebraError::Shape("p must be prime"));
        }
        let dim = labels.len();
        if dim == 0 || unit_index >= dim || table.len() != dim * dim {
            return Err(AlgebraError::Shape("table must be dim² vectors of length dim"));
        }
        for v in &mut table {
            if v.len() != dim {
                return Err(AlgebraError::Shape("table must be dim² vectors of length dim"));
            }
            for x in v.iter_mut() {
                *x %= p;
            }
        }
        let a = FinDimAlgebra { p, dim, unit_index, labels, table };
        // unit axiom
        for j in 0..dim {
            if a.table[unit_index * dim + j] != a.basis_vec(j) {
                return Err(AlgebraError::BadStructure(format!("1·e{j} ≠ e{j}")));
            }
            if a.table[j * dim + unit_index] != a.basis_vec(j) {
                return Err(AlgebraError::BadStructure(format!("e{j}·1 ≠ e{j}")));
            }
        }
        // associativity on all basis triples
        for i in 0..dim {
            for j in 0..dim {
                let ij = a.table[i * dim + j].clone();
                for k in 0..dim {
                    let left = a.mul_vec_basis(&ij, k);
                    let jk = &a.table[j * dim + k];
                    let right = a.mul_basis_vec(i, jk);
                    if left != right {
                        return Err(AlgebraError::BadStructure(format!(
                            "(e{i}·e{j})·e{k} ≠ e{i}·(e{j}·e{k})"
                        )));
                    }
                }
            }
        }
        Ok(a)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn unit_index(&self) -> usize {
        self.unit_index
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn zero_vec(&self) -> Vec<u64> {
        vec![0; self.dim]
    }

    pub fn basis_vec(&self, i: usize) -> Vec<u64> {
        let mut v = self.zero_vec();
        v[i] = 1;
        v
    }

    pub fn unit_vec(&self) -> Vec<u64> {
        self.basis_vec(self.unit_index)
    }

    /// Coordinates of `e_i·e_j`.
    pub fn basis_product(&self, i: usize, j: usize) -> &[u64] {
        &self.table[i * self.dim + j]
    }

    pub fn add(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        a.iter().zip(b).map(|(x, y)| (x + y) % self.p).collect()
    }

    pub fn sub(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        a.iter().zip(b).map(|(x, y)| (x + self.p - y % self.p) % self.p).collect()
    }

    fn mul_basis_vec(&self, i: usize, b: &[u64]) -> Vec<u64> {
        let mut out = self.zero_vec();
        for (j, &c) in b.iter().enumerate() {
            if c == 0 {
                continue;
            }
            for (t, &x) in self.table[i * self.dim + j].iter().enumerate() {
                out[t] = (out[t] + c * x) % self.p;
            }
        }
        out
    }

    fn mul_vec_basis(&self, a: &[u64], k: usize) -> Vec<u64> {
        let mut out = self.zero_vec();
        for (i, &c) in a.iter().enumerate() {
            if c == 0 {
                continue;
            }
            for (t, &x) in self.table[i * self.dim + k].iter().enumerate() {
                out[t] = (out[t] + c * x) % self.p;
            }
        }
        out
    }

    pub fn mul(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        let mut out = self.zero_vec();
        for (i, &ca) in a.iter().enumerate() {
            if ca == 0 {
                continue;
            }
            for (j, &cb) in b.iter().enumerate() {
                if cb == 0 {
                    continue;
                }
                let c = ca * cb % self.p;
                for (t, &x) in self.table[i * self.dim + j].iter().enumerate() {
                    out[t] = (out[t] + c * x) % self.p;
                }
            }
        }
        out
    }

    pub fn pow(&self, a: &[u64], e: u64) -> Vec<u64> {
        let mut acc = self.unit_vec();
        for _ in 0..e {
            acc = self.mul(&acc, a);
        }
        acc
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.dim).all(|i| {
            (0..i).all(|j| self.table[i * self.dim + j] == self.table[j * self.dim + i])
        })
    }

    /// Matrix of right multiplication `v ↦ v·b` acting on row vectors.
    pub fn right_mul_matrix(&self, b: &[u64]) -> GfpMat {
        let mut m = GfpMat::zeros(self.p, self.dim, self.dim);
        for i in 0..self.dim {
            let row = self.mul_basis_vec(i, b);
            for (t, &x) in row.iter().enumerate() {
                m[(i, t)] = x;
            }
        }
        m
    }

    /// Matrix of left multiplication `v ↦ b·v` acting on row vectors.
    pub fn left_mul_matrix(&self, b: &[u64]) -> GfpMat {
        let mut m = GfpMat::zeros(self.p, self.dim, self.dim);
        for j in 0..self.dim {
            let row = self.mul(b, &self.basis_vec(j));
            for (t, &x) in row.iter().enumerate() {
                m[(j, t)] = x;
            }
        }
        m
    }

    fn full_space(&self) -> Subspace {
        Subspace::full(self.p, self.dim)
    }

    /// The Jacobson radical.
    ///
    /// Two supported routes, tried in order: the presented-local check (the
    /// non-unit basis span is verified to be a nilpotent ideal) and, for
    /// commutative algebras, the nilradical as the kernel of an iterated
    /// Frobenius map.  Anything else is `NotPresentedLocal`.
    pub fn radical(&self) -> Result<Subspace, AlgebraError> {
        if let Some(n) = self.presented_local_radical() {
            return Ok(n);
        }
        if self.is_commutative() {
            return Ok(self.commutative_nilradical());
        }
        Err(AlgebraError::NotPresentedLocal)
    }

    fn presented_local_radical(&self) -> Option<Subspace> {
        // N = span of non-unit basis vectors; ideal ⟺ products of those
        // basis vectors never touch the unit coordinate
        for i in 0..self.dim {
            for j in 0..self.dim {
                if i != self.unit_index
                    && j != self.unit_index
                    && self.table[i * self.dim + j][self.unit_index] != 0
                {
                    return None;
                }
            }
        }
        let vecs: Vec<Vec<u64>> = (0..self.dim)
            .filter(|&i| i != self.unit_index)
            .map(|i| self.basis_vec(i))
            .collect();
        let n = Subspace::from_vectors(self.p, self.dim, &vecs);
        // nilpotency: N ⊇ N² ⊇ … must reach zero within dim steps
        let mut power = n.clone();
        for _ in 0..self.dim {
            if power.is_zero() {
                return Some(n);
            }
            power = self.product_space(&power, &n);
        }
        None
    }

    /// Nilradical of a commutative algebra: the p-power map is GF(p)-linear,
    /// and an element is nilpotent iff `x^(p^m) = 0` once `p^m ≥ dim`.
    fn commutative_nilradical(&self) -> Subspace {
        debug_assert!(self.is_commutative());
        let mut frob = GfpMat::zeros(self.p, self.dim, self.dim);
        for i in 0..self.dim {
            let row = self.pow(&self.basis_vec(i), self.p);
            for (t, &x) in row.iter().enumerate() {
                frob[(i, t)] = x;
            }
        }
        let mut iterate = frob.clone();
        let mut reach = self.p;
        while reach < self.dim as u64 {
            iterate = iterate.mul(&frob);
            reach *= self.p;
        }
        // left kernel of the iterated Frobenius matrix
        Subspace::from_spanning(iterate.transpose().kernel())
    }

    /// Span of all products `u·v`, `u ∈ U`, `v ∈ V` (basis products suffice).
    pub fn product_space(&self, u: &Subspace, v: &Subspace) -> Subspace {
        let mut vecs = Vec::new();
        for a in u.basis_rows() {
            for b in v.basis_rows() {
                vecs.push(self.mul(a, b));
            }
        }
        Subspace::from_vectors(self.p, self.dim, &vecs)
    }

    /// `A = J⁰ ⊇ J ⊇ J² ⊇ …` down to (and including) the zero space.
    pub fn radical_series(&self) -> Result<Vec<Subspace>, AlgebraError> {
        let j = self.radical()?;
        let mut series = vec![self.full_space()];
        let mut power = j.clone();
        loop {
            series.push(power.clone());
            if power.is_zero() {
                return Ok(series);
            }
            power = self.product_space(&power, &j);
        }
    }

    /// Dimensions of the Loewy layers `Jⁱ/Jⁱ⁺¹`, summing to `dim`.
    pub fn loewy_vector(&self) -> Result<Vec<usize>, AlgebraError> {
        let series = self.radical_series()?;
        Ok(series.windows(2).map(|w| w[0].dim() - w[1].dim()).collect())
    }

    /// Least `n` with `Jⁿ = 0`.
    pub fn loewy_length(&self) -> Result<usize, AlgebraError> {
        Ok(self.radical_series()?.len() - 1)
    }

    /// `{v : v·S = 0}` for a spanned subspace `S`.
    pub fn right_annihilator(&self, s: &Subspace) -> Subspace {
        let mut constraints = GfpMat::zeros(self.p, 0, self.dim);
        for b in s.basis_rows() {
            let m = self.right_mul_matrix(b);
            // v·m = 0 — transpose the action into constraint rows
            let mt = m.transpose();
            for r in 0..mt.rows() {
                constraints.push_row(mt.row(r));
            }
        }
        if constraints.rows() == 0 {
            return self.full_space();
        }
        Subspace::from_spanning(constraints.kernel())
    }

    /// `{v : S·v = 0}` for a spanned subspace `S`.
    pub fn left_annihilator(&self, s: &Subspace) -> Subspace {
        let mut constraints = GfpMat::zeros(self.p, 0, self.dim);
        for b in s.basis_rows() {
            let m = self.left_mul_matrix(b);
            let mt = m.transpose();
            for r in 0..mt.rows() {
                constraints.push_row(mt.row(r));
            }
        }
        if constraints.rows() == 0 {
            return self.full_space();
        }
        Subspace::from_spanning(constraints.kernel())
    }

    /// Socle with respect to the radical (see [`Side`] for the conventions).
    pub fn socle(&self, side: Side) -> Result<Subspace, AlgebraError> {
        let j = self.radical()?;
        Ok(match side {
            Side::Left => self.right_annihilator(&j),
            Side::Right => self.left_annihilator(&j),
            Side::TwoSided => self.right_annihilator(&j).intersect(&self.left_annihilator(&j)),
        })
    }

    /// `[A,A]` = span of all `e_i·e_j − e_j·e_i`.
    pub fn commutator_space(&self) -> Subspace {
        let mut vecs = Vec::new();
        for i in 0..self.dim {
            for j in 0..i {
                let ij = &self.table[i * self.dim + j];
                let ji = &self.table[j * self.dim + i];
                vecs.push(self.sub(ij, ji));
            }
        }
        Subspace::from_vectors(self.p, self.dim, &vecs)
    }

    /// Külshammer subspace `T_n = {a : a^(2ⁿ) ∈ [A,A]}` (characteristic 2).
    ///
    /// The squaring map is linear on `A/[A,A]`, so `T_n` is the preimage of
    /// the kernel of its n-th power.
    pub fn kulshammer_t(&self, n: usize) -> Result<Subspace, AlgebraError> {
        if self.p != 2 {
            return Err(AlgebraError::OddCharacteristic);
        }
        let comm = self.commutator_space();
        let reps = self.full_space().complement_basis_mod(&comm);
        let d = reps.len();
        if n == 0 || d == 0 {
            return Ok(comm);
        }
        // combined basis (commutators first), for projection to the quotient
        let mut combined = GfpMat::zeros(self.p, 0, self.dim);
        for r in comm.basis_rows() {
            combined.push_row(r);
        }
        for r in &reps {
            combined.push_row(r);
        }
        let combined_t = combined.transpose();
        let project = |v: &[u64]| -> Vec<u64> {
            let coords = combined_t.solve(v).expect("combined set is a basis");
            coords[comm.dim()..].to_vec()
        };
        // matrix of the induced squaring map on the quotient
        let mut kappa = GfpMat::zeros(self.p, d, d);
        for (i, r) in reps.iter().enumerate() {
            let sq = self.mul(r, r);
            for (t, &x) in project(&sq).iter().enumerate() {
                kappa[(i, t)] = x;
            }
        }
        let mut power = GfpMat::identity(self.p, d);
        for _ in 0..n {
            power = power.mul(&kappa);
        }
        // preimage of the kernel: [A,A] plus lifts of quotient kernel vectors
        let quotient_kernel = power.transpose().kernel();
        let mut vecs: Vec<Vec<u64>> = comm.basis_rows().map(|r| r.to_vec()).collect();
        for krow in 0..quotient_kernel.rows() {
            let w = quotient_kernel.row(krow);
            let mut lift = self.zero_vec();
            for (j, &c) in w.iter().enumerate() {
                if c != 0 {
                    for (t, &x) in reps[j].iter().enumerate() {
                        lift[t] = (lift[t] + c * x) % self.p;
                    }
                }
            }
            vecs.push(lift);
        }
        Ok(Subspace::from_vectors(self.p, self.dim, &vecs))
    }

    /// Gram matrix `(i,j) ↦ s(e_i·e_j)` of the bilinear form induced by `s`.
    pub fn form_gram(&self, s: &LinearForm) -> GfpMat {
        let mut g = GfpMat::zeros(self.p, self.dim, self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                let prod = &self.table[i * self.dim + j];
                let mut acc = 0u64;
                for (t, &x) in prod.iter().enumerate() {
                    acc = (acc + x * (s.coeffs[t] % self.p)) % self.p;
                }
                g[(i, j)] = acc;
            }
        }
        g
    }

    /// True iff `s(ab) = s(ba)` for all basis pairs and the induced bilinear
    /// form is nondegenerate.
    pub fn is_symmetrizing(&self, s: &LinearForm) -> bool {
        if s.coeffs.len() != self.dim {
            return false;
        }
        let g = self.form_gram(s);
        for i in 0..self.dim {
            for j in 0..i {
                if g[(i, j)] != g[(j, i)] {
                    return false;
                }
            }
        }
        g.rank() == self.dim
    }

    /// Searches for a symmetrizing form: the symmetry constraints say the
    /// form kills `[A,A]`; that solution space is scanned exhaustively when
    /// it has at most 2¹⁶ points, otherwise 1000 deterministic samples are
    /// tried before giving up with `exhaustive: false`.
    pub fn find_symmetrizing_form(&self) -> Result<LinearForm, AlgebraError> {
        self.find_symmetrizing_form_seeded(0x5f0e_7a11_bead_cafe)
    }

    /// As [`find_symmetrizing_form`](Self::find_symmetrizing_form) with a
    /// caller-chosen seed for the sampling fallback (the exhaustive scan is
    /// unaffected by the seed).
    pub fn find_symmetrizing_form_seeded(&self, seed: u64) -> Result<LinearForm, AlgebraError> {
        let comm = self.commutator_space();
        let candidates: Vec<Vec<u64>> = if comm.is_zero() {
            (0..self.dim).map(|i| self.basis_vec(i)).collect()
        } else {
            let mut rows = GfpMat::zeros(self.p, 0, self.dim);
            for r in comm.basis_rows() {
                rows.push_row(r);
            }
            let k = rows.kernel();
            (0..k.rows()).map(|i| k.row(i).to_vec()).collect()
        };
        let d = candidates.len();
        let build = |coeffs: &[u64]| -> LinearForm {
            let mut f = vec![0u64; self.dim];
            for (c, cand) in coeffs.iter().zip(&candidates) {
                if *c != 0 {
                    for (t, &x) in cand.iter().enumerate() {
                        f[t] = (f[t] + c * x) % self.p;
                    }
                }
            }
            LinearForm { coeffs: f }
        };
        let space_size = (self.p as u128).checked_pow(d as u32);
        if let Some(size) = space_size.filter(|&s| s <= 1 << 16) {
            let mut coeffs = vec![0u64; d];
            for _ in 1..size {
                // odometer (skipping the zero form)
                let mut i = 0;
                loop {
                    coeffs[i] += 1;
                    if coeffs[i] < self.p {
                        break;
                    }
                    coeffs[i] = 0;
                    i += 1;
                }
                let form = build(&coeffs);
                if self.is_symmetrizing(&form) {
                    return Ok(form);
                }
            }
            Err(AlgebraError::NotSymmetric { exhaustive: true })
        } else {
            let mut rng = SplitMix64::new(seed);
            for _ in 0..1000 {
                let coeffs: Vec<u64> = (0..d).map(|_| rng.below(self.p)).collect();
                let form = build(&coeffs);
                if self.is_symmetrizing(&form) {
                    return Ok(form);
                }
            }
            Err(AlgebraError::NotSymmetric { exhaustive: false })
        }
    }

    /// `U^⊥ = {a : s(a·U) = 0}` for a symmetrizing form `s`.
    pub fn perp_space(&self, s: &LinearForm, u: &Subspace) -> Result<Subspace, AlgebraError> {
        if !self.is_symmetrizing(s) {
            return Err(AlgebraError::FormNotSymmetrizing);
        }
        let g = self.form_gram(s);
        let mut constraints = GfpMat::zeros(self.p, 0, self.dim);
        for x in u.basis_rows() {
            // s(a·x) = Σ_i a_i·(G·x)_i
            let mut row = vec![0u64; self.dim];
            for (i, r) in row.iter_mut().enumerate() {
                let mut acc = 0u64;
                for (j, &xj) in x.iter().enumerate() {
                    acc = (acc + g[(i, j)] * xj) % self.p;
                }
                *r = acc;
            }
            constraints.push_row(&row);
        }
        if constraints.rows() == 0 {
            return Ok(self.full_space());
        }
        Ok(Subspace::from_spanning(constraints.kernel()))
    }

    /// `Z(A) = {v : v·e_i = e_i·v for all i}` as a subspace.
    pub fn center(&self) -> Subspace {
        let mut constraints = GfpMat::zeros(self.p, 0, self.dim);
        for i in 0..self.dim {
            let diff_cols = {
                let r = self.right_mul_matrix(&self.basis_vec(i));
                let l = self.left_mul_matrix(&self.basis_vec(i));
                let mut d = GfpMat::zeros(self.p, self.dim, self.dim);
                for a in 0..self.dim {
                    for b in 0..self.dim {
                        d[(a, b)] = (r[(a, b)] + self.p - l[(a, b)]) % self.p;
                    }
                }
                d.transpose()
            };
            for r in 0..diff_cols.rows() {
                constraints.push_row(diff_cols.row(r));
            }
        }
        Subspace::from_spanning(constraints.kernel())
    }

    /// The subalgebra spanned by the given independent vectors, which must
    /// include the ambient unit as one of them.
    pub fn subalgebra_on_basis(
        &self,
        basis: &[Vec<u64>],
        labels: Vec<String>,
    ) -> Result<FinDimAlgebra, AlgebraError> {
        if basis.len() != labels.len() {
            return Err(AlgebraError::Shape("one label per basis vector"));
        }
        let span = Subspace::from_vectors(self.p, self.dim, basis);
        if span.dim() != basis.len() {
            return Err(AlgebraError::NotClosed("basis vectors are dependent"));
        }
        let unit_index = basis
            .iter()
            .position(|v| *v == self.unit_vec())
            .ok_or(AlgebraError::NotClosed("unit is not among the basis vectors"))?;
        let mut coord_mat = GfpMat::zeros(self.p, 0, self.dim);
        for b in basis {
            coord_mat.push_row(b);
        }
        let coord_t = coord_mat.transpose();
        let n = basis.len();
        let mut table = Vec::with_capacity(n * n);
        for a in basis {
            for b in basis {
                let prod = self.mul(a, b);
                let coords = coord_t
                    .solve(&prod)
                    .ok_or(AlgebraError::NotClosed("a product leaves the span"))?;
                table.push(coords);
            }
        }
        FinDimAlgebra::new(self.p, unit_index, labels, table)
    }

    /// The center as an algebra on the basis `{1} ∪ (completion)`.
    pub fn center_algebra(&self) -> Result<FinDimAlgebra, AlgebraError> {
        let z = self.center();
        let unit_span = Subspace::from_vectors(self.p, self.dim, &[self.unit_vec()]);
        let mut basis = vec![self.unit_vec()];
        basis.extend(z.complement_basis_mod(&unit_span));
        let labels = (0..basis.len())
            .map(|i| if i == 0 { String::from("1") } else { format!("z{i}") })
            .collect();
        self.subalgebra_on_basis(&basis, labels)
    }
}

// ---------------------------------------------------------------------------
// shipped example algebras
// ---------------------------------------------------------------------------

fn empty_table(dim: usize) -> Vec<Vec<u64>> {
    vec![vec![0; dim]; dim * dim]
}

/// `GF(p)[x]/(xⁿ)` on the basis `1, x, …, x^(n−1)`.
pub fn truncated_polynomial_algebra(p: u64, n: usize) -> FinDimAlgebra {
    let mut table = empty_table(n);
    for i in 0..n {
        for j in 0..n {
            if i + j < n {
                table[i * n + j][i + j] = 1;
            }
        }
    }
    let labels = (0..n)
        .map(|i| match i {
            0 => String::from("1"),
            1 => String::from("x"),
            _ => format!("x{i}"),
        })
        .collect();
    FinDimAlgebra::new(p, 0, labels, table).expect("truncated polynomial algebra is valid")
}

/// The group algebra of the Klein four group over GF(2), on the group basis.
/// Deliberately *not* presented-local (g·g = 1), exercising the commutative
/// nilradical route.
pub fn klein_four_group_algebra() -> FinDimAlgebra {
    // basis 1, a, b, ab with a² = b² = 1
    let mult = |i: usize, j: usize| i ^ j; // C₂×C₂ as bit vectors
    let mut table = empty_table(4);
    for i in 0..4 {
        for j in 0..4 {
            table[i * 4 + j][mult(i, j)] = 1;
        }
    }
    let labels = ["1", "a", "b", "ab"].iter().map(|s| String::from(*s)).collect();
    FinDimAlgebra::new(2, 0, labels, table).expect("Klein four group algebra is valid")
}

/// The group algebra of the quaternion group over GF(2), presented locally on
/// the basis `{1} ∪ {g+1 : g ≠ 1}`.
pub fn quaternion_group_algebra() -> FinDimAlgebra {
    // elements encoded as (sign, symbol) with symbols 1, i, j, k
    type El = (u8, u8);
    fn gmul(a: El, b: El) -> El {
        let (sa, xa) = a;
        let (sb, xb) = b;
        let (s, x) = match (xa, xb) {
            (0, y) => (0, y),
            (y, 0) => (0, y),
            (1, 1) | (2, 2) | (3, 3) => (1, 0),
            (1, 2) => (0, 3),
            (2, 1) => (1, 3),
            (2, 3) => (0, 1),
            (3, 2) => (1, 1),
            (3, 1) => (0, 2),
            (1, 3) => (1, 2),
            _ => unreachable!(),
        };
        ((sa ^ sb ^ s) & 1, x)
    }
    let elements: Vec<El> = (0..8).map(|t| ((t & 1) as u8, (t >> 1) as u8)).collect();
    let index = |e: El| -> usize { (e.0 as usize) | ((e.1 as usize) << 1) };
    // basis 0 ↦ 1; basis t (t ≥ 1) ↦ elements[t] + 1
    let mut table = empty_table(8);
    for i in 0..8 {
        for j in 0..8 {
            let out = &mut table[i * 8 + j];
            match (i, j) {
                (0, t) | (t, 0) => out[t] = 1,
                _ => {
                    // (g+1)(h+1) = (gh+1) + (g+1) + (h+1) over GF(2)
                    let gh = index(gmul(elements[i], elements[j]));
                    if gh != 0 {
                        out[gh] ^= 1;
                    }
                    out[i] ^= 1;
                    out[j] ^= 1;
                }
            }
        }
    }
    let labels = ["1", "m+1", "i+1", "mi+1", "j+1", "mj+1", "k+1", "mk+1"]
        .iter()
        .map(|s| String::from(*s))
        .collect();
    FinDimAlgebra::new(2, 0, labels, table).expect("quaternion group algebra is valid")
}

/// The eight-dimensional commutative algebra with basis `W₀ = 1, W₁, …, W₇`
/// and the only nonzero products `W₁W₂ = W₅`, `W₁W₃ = W₆`, `W₁W₄ = W₇`.
pub fn w_table_algebra() -> FinDimAlgebra {
    let mut table = empty_table(8);
    for t in 0..8 {
        table[t][t] = 1; // 1·e_t
        table[t * 8][t] = 1; // e_t·1
    }
    for (a, b, c) in [(1, 2, 5), (1, 3, 6), (1, 4, 7)] {
        table[a * 8 + b][c] = 1;
        table[b * 8 + a][c] = 1;
    }
    let labels = (0..8).map(|i| format!("W{i}")).collect();
    FinDimAlgebra::new(2, 0, labels, table).expect("W-table algebra is valid")
}

/// `F[X,Y,Z₁..Z₄]/⟨X²+1, Y²+1, (X+1)Zᵢ, (Y+1)Zᵢ, ZᵢZⱼ⟩` over GF(2) on the
/// monomial basis `1, X, Y, XY, Z₁..Z₄`.
pub fn presentation_case_i_ii() -> FinDimAlgebra {
    let mut table = empty_table(8);
    // group-like part on 1, X, Y, XY (indices 0..4): C₂×C₂
    for i in 0..4 {
        for j in 0..4 {
            table[i * 8 + j][i ^ j] = 1;
        }
    }
    for z in 4..8 {
        table[z][z] = 1; // 1·Z
        table[z * 8][z] = 1; // Z·1
        for g in 1..4 {
            // X·Zᵢ = Y·Zᵢ = XY·Zᵢ = Zᵢ
            table[g * 8 + z][z] = 1;
            table[z * 8 + g][z] = 1;
        }
        // ZᵢZⱼ = 0: already zero
    }
    let labels = ["1", "X", "Y", "XY", "Z1", "Z2", "Z3", "Z4"]
        .iter()
        .map(|s| String::from(*s))
        .collect();
    FinDimAlgebra::new(2, 0, labels, table).expect("case I/II presentation is valid")
}

/// `F[X,Z₁..Z₆]/⟨X²+1, XZ₂ᵢ+Z₂ᵢ₋₁, ZᵢZⱼ⟩` over GF(2) on the basis
/// `1, X, Z₁..Z₆`.
pub fn presentation_case_iii() -> FinDimAlgebra {
    let mut table = empty_table(8);
    for t in 0..8 {
        table[t][t] = 1;
        table[t * 8][t] = 1;
    }
    table[8 + 1] = vec![0; 8];
    table[8 + 1][0] = 1; // X·X = 1
    for pair in 0..3 {
        let z_odd = 2 + 2 * pair; // Z₁, Z₃, Z₅ at indices 2, 4, 6
        let z_even = z_odd + 1; // Z₂, Z₄, Z₆
        // X·Z₂ᵢ = Z₂ᵢ₋₁ and X·Z₂ᵢ₋₁ = Z₂ᵢ
        for (from, to) in [(z_even, z_odd), (z_odd, z_even)] {
            table[8 + from] = vec![0; 8];
            table[8 + from][to] = 1;
            table[from * 8 + 1] = vec![0; 8];
            table[from * 8 + 1][to] = 1;
        }
    }
    // ZᵢZⱼ = 0
    for i in 2..8 {
        for j in 2..8 {
            table[i * 8 + j] = vec![0; 8];
        }
    }
    let labels = ["1", "X", "Z1", "Z2", "Z3", "Z4", "Z5", "Z6"]
        .iter()
        .map(|s| String::from(*s))
        .collect();
    FinDimAlgebra::new(2, 0, labels, table).expect("case III presentation is valid")
}

/// `GF(2)[x,z]/(x³, xz, z²)` on the basis `1, x, x², z` — the resolution
/// growth probe.
pub fn fib_probe_algebra() -> FinDimAlgebra {
    let mut table = empty_table(4);
    for t in 0..4 {
        table[t][t] = 1;
        table[t * 4][t] = 1;
    }
    table[4 + 1] = vec![0, 0, 1, 0]; // x·x = x²
    // x·x² = x²·x = x·z = z·x = x²·x² = x²·z = z·x² = z·z = 0
    for (i, j) in [(1, 2), (2, 1), (1, 3), (3, 1), (2, 2), (2, 3), (3, 2), (3, 3)] {
        table[i * 4 + j] = vec![0; 4];
    }
    let labels = ["1", "x", "x2", "z"].iter().map(|s| String::from(*s)).collect();
    FinDimAlgebra::new(2, 0, labels, table).expect("probe algebra is valid")
}

/// `GF(2) × GF(2)` on the basis `{1, u}` with `u² = u` — split semisimple.
pub fn semisimple_pair_algebra() -> FinDimAlgebra {
    let mut table = empty_table(2);
    table[0] = vec![1, 0];
    table[1] = vec![0, 1];
    table[2] = vec![0, 1];
    table[3] = vec![0, 1]; // u·u = u
    let labels = ["1", "u"].iter().map(|s| String::from(*s)).collect();
    FinDimAlgebra::new(2, 0, labels, table).expect("semisimple pair is valid")
}

/// The full 2×2 matrix algebra over GF(2) on the basis `I, E₁₂, E₂₁, E₂₂`.
pub fn matrix_algebra_2x2() -> FinDimAlgebra {
    // represent basis elements as 2×2 bit matrices and multiply
    let reps: [[u64; 4]; 4] = [
        [1, 0, 0, 1], // I
        [0, 1, 0, 0], // E12
        [0, 0, 1, 0], // E21
        [0, 0, 0, 1], // E22
    ];
    let mat_mul = |a: &[u64; 4], b: &[u64; 4]| -> [u64; 4] {
        [
            (a[0] * b[0] + a[1] * b[2]) & 1,
            (a[0] * b[1] + a[1] * b[3]) & 1,
            (a[2] * b[0] + a[3] * b[2]) & 1,
            (a[2] * b[1] + a[3] * b[3]) & 1,
        ]
    };
    // coordinates of a 2×2 bit matrix in the chosen basis: m = c₀I + c₁E12 +
    // c₂E21 + c₃E22 forces c₀ = m₁₁, c₁ = m₁₂, c₂ = m₂₁, c₃ = m₂₂ − m₁₁
    let coords = |m: &[u64; 4]| -> Vec<u64> {
        let c0 = m[0];
        vec![c0, m[1], m[2], (m[3] + c0) & 1]
    };
    let mut table = empty_table(4);
    for i in 0..4 {
        for j in 0..4 {
            table[i * 4 + j] = coords(&mat_mul(&reps[i], &reps[j]));
        }
    }
    let labels = ["I", "E12", "E21", "E22"].iter().map(|s| String::from(*s)).collect();
    FinDimAlgebra::new(2, 0, labels, table).expect("2x2 matrix algebra is valid")
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn dims(series: &[Subspace]) -> Vec<usize> {
        series.iter().map(|s| s.dim()).collect()
    }

    #[test]
    fn truncated_polynomial_series() {
        let a = truncated_polynomial_algebra(2, 4);
        assert_eq!(dims(&a.radical_series().unwrap()), vec![4, 3, 2, 1, 0]);
        assert_eq!(a.loewy_vector().unwrap(), vec![1, 1, 1, 1]);
        assert_eq!(a.loewy_length().unwrap(), 4);
        // socle of GF(2)[x]/(x³) is span(x²)
        let b = truncated_polynomial_algebra(2, 3);
        let soc = b.socle(Side::TwoSided).unwrap();
        assert_eq!(soc.dim(), 1);
        assert!(soc.contains(&[0, 0, 1]));
    }

    #[test]
    fn w_table_structure() {
        let a = w_table_algebra();
        assert!(a.is_commutative());
        let series = a.radical_series().unwrap();
        assert_eq!(dims(&series), vec![8, 7, 3, 0]);
        // soc = J² = span(W₅, W₆, W₇)
        let soc = a.socle(Side::TwoSided).unwrap();
        assert_eq!(soc, series[2]);
        for w in [5, 6, 7] {
            assert!(soc.contains(&a.basis_vec(w)));
        }
    }

    #[test]
    fn case_presentations_structure() {
        let a = presentation_case_i_ii();
        assert_eq!(dims(&a.radical_series().unwrap()), vec![8, 7, 1, 0]);
        assert_eq!(a.loewy_vector().unwrap(), vec![1, 6, 1]);
        assert_eq!(a.loewy_length().unwrap(), 3);
        // socle is 5-dimensional: (X+1)(Y+1) and the Zᵢ
        assert_eq!(a.socle(Side::TwoSided).unwrap().dim(), 5);

        let b = presentation_case_iii();
        assert_eq!(dims(&b.radical_series().unwrap()), vec![8, 7, 3, 0]);
        assert_eq!(b.socle(Side::TwoSided).unwrap().dim(), 3);
    }

    #[test]
    fn klein_four_uses_nilradical_route() {
        let a = klein_four_group_algebra();
        let j = a.radical().unwrap();
        assert_eq!(j.dim(), 3);
        // augmentation ideal: g + 1 for g ≠ 1
        for g in 1..4 {
            let mut v = a.basis_vec(g);
            v[0] = 1;
            assert!(j.contains(&v));
        }
        assert_eq!(a.loewy_vector().unwrap(), vec![1, 2, 1]);
    }

    #[test]
    fn quaternion_group_algebra_structure() {
        let a = quaternion_group_algebra();
        assert!(!a.is_commutative());
        let j = a.radical().unwrap();
        assert_eq!(j.dim(), 7);
        // Loewy layers 1,2,2,2,1 (Poincaré polynomial (1+t)²(1+t²))
        assert_eq!(a.loewy_vector().unwrap(), vec![1, 2, 2, 2, 1]);
        // local symmetric: one-dimensional socle equal to the top power
        let series = a.radical_series().unwrap();
        let soc = a.socle(Side::TwoSided).unwrap();
        assert_eq!(soc.dim(), 1);
        assert_eq!(soc, series[series.len() - 2]);
        // dim A = dim Z + dim [A,A]
        assert_eq!(a.center().dim() + a.commutator_space().dim(), a.dim());
    }

    #[test]
    fn commutator_spaces() {
        assert!(w_table_algebra().commutator_space().is_zero());
        let m = matrix_algebra_2x2();
        let c = m.commutator_space();
        assert_eq!(c.dim(), 3);
        // trace-zero: E12, E21, E11+E22 = I (char 2) — check I ∈ [A,A]
        assert!(c.contains(&m.basis_vec(0)));
        assert_eq!(m.center().dim(), 1);
        assert!(m.center().contains(&m.basis_vec(0)));
    }

    #[test]
    fn kulshammer_ladder() {
        // T₀ = [A,A] always
        for a in [w_table_algebra(), quaternion_group_algebra(), presentation_case_i_ii()] {
            assert_eq!(a.kulshammer_t(0).unwrap(), a.commutator_space());
        }
        // case-III center: T₁ = {a : a² = 0} = J, dimension 7
        let a = presentation_case_iii();
        let t1 = a.kulshammer_t(1).unwrap();
        assert_eq!(t1, a.radical().unwrap());
        assert_eq!(t1.dim(), 7);
        // exhaustive oracle over all 2⁸ elements
        for v in Subspace::full(2, 8).elements() {
            let sq = a.mul(&v, &v);
            assert_eq!(t1.contains(&v), sq.iter().all(|&x| x == 0));
        }
        // stabilization: T_n = J + [A,A] for large n (quaternion algebra)
        let q = quaternion_group_algebra();
        let expected = q.radical().unwrap().sum(&q.commutator_space());
        assert_eq!(q.kulshammer_t(5).unwrap(), expected);
        // odd characteristic is rejected
        assert!(matches!(
            truncated_polynomial_algebra(3, 3).kulshammer_t(1),
            Err(AlgebraError::OddCharacteristic)
        ));
    }

    #[test]
    fn kulshammer_exhaustive_oracle_general() {
        // T_n = {a : a^(2ⁿ) ∈ [A,A]} checked literally, dim ≤ 12
        for a in [quaternion_group_algebra(), presentation_case_i_ii(), fib_probe_algebra()] {
            let comm = a.commutator_space();
            for n in 0..4 {
                let tn = a.kulshammer_t(n).unwrap();
                for v in Subspace::full(2, a.dim()).elements() {
                    let pw = a.pow(&v, 1 << n);
                    assert_eq!(tn.contains(&v), comm.contains(&pw), "n={n}");
                }
            }
        }
    }

    #[test]
    fn symmetrizing_forms() {
        // GF(2)[x]/(x²): s(1) = 0, s(x) = 1 works
        let a = truncated_polynomial_algebra(2, 2);
        let s = a.find_symmetrizing_form().unwrap();
        assert!(a.is_symmetrizing(&s));
        assert!(a.is_symmetrizing(&LinearForm { coeffs: vec![0, 1] }));
        // split semisimple: sum of coordinates works
        let b = semisimple_pair_algebra();
        let s = b.find_symmetrizing_form().unwrap();
        assert!(b.is_symmetrizing(&s));
        // group algebras are symmetric
        assert!(quaternion_group_algebra().find_symmetrizing_form().is_ok());
        assert!(klein_four_group_algebra().find_symmetrizing_form().is_ok());
        // the case-I/II center is local with 5-dimensional socle — never
        // symmetric; the search space (2⁸) is scanned exhaustively
        assert_eq!(
            presentation_case_i_ii().find_symmetrizing_form(),
            Err(AlgebraError::NotSymmetric { exhaustive: true })
        );
        // same for the W-table algebra (3-dimensional socle)
        assert_eq!(
            w_table_algebra().find_symmetrizing_form(),
            Err(AlgebraError::NotSymmetric { exhaustive: true })
        );
    }

    #[test]
    fn perp_spaces() {
        let a = truncated_polynomial_algebra(2, 4);
        let s = LinearForm { coeffs: vec![0, 0, 0, 1] }; // coefficient of x³
        assert!(a.is_symmetrizing(&s));
        let series = a.radical_series().unwrap();
        // J^⊥ = soc = span(x³)
        let j_perp = a.perp_space(&s, &series[1]).unwrap();
        assert_eq!(j_perp, series[3]);
        // (J²)^⊥ = span(x², x³) = {a : a·J² = 0}
        let j2_perp = a.perp_space(&s, &series[2]).unwrap();
        assert_eq!(j2_perp, a.right_annihilator(&series[2]));
        assert_eq!(j2_perp.dim(), 2);
        // dim U + dim U^⊥ = dim A and involution
        for u in [&series[1], &series[2], &series[3]] {
            let perp = a.perp_space(&s, u).unwrap();
            assert_eq!(u.dim() + perp.dim(), a.dim());
            assert_eq!(&a.perp_space(&s, &perp).unwrap(), u);
        }
        // whole algebra ↦ zero space
        assert!(a.perp_space(&s, &Subspace::full(2, 4)).unwrap().is_zero());
        // degenerate form is rejected
        let bad = LinearForm { coeffs: vec![1, 0, 0, 0] };
        assert!(matches!(
            a.perp_space(&bad, &series[1]),
            Err(AlgebraError::FormNotSymmetrizing)
        ));
    }

    #[test]
    fn center_matches_exhaustive_commutation() {
        for a in [quaternion_group_algebra(), matrix_algebra_2x2(), w_table_algebra()] {
            let z = a.center();
            for v in Subspace::full(2, a.dim()).elements() {
                let commutes = (0..a.dim()).all(|i| {
                    let e = a.basis_vec(i);
                    a.mul(&v, &e) == a.mul(&e, &v)
                });
                assert_eq!(z.contains(&v), commutes);
            }
        }
    }

    #[test]
    fn center_algebra_of_quaternion() {
        let q = quaternion_group_algebra();
        let z = q.center_algebra().unwrap();
        assert_eq!(z.dim(), 5);
        assert!(z.is_commutative());
        // the center of a local algebra is local: radical via fallback
        assert_eq!(z.radical().unwrap().dim(), 4);
    }

    #[test]
    fn local_symmetric_invariant_suite() {
        // dim soc = 1; soc = top power; soc ∩ [A,A] = 0; J ∩ Z = J(Z);
        // dim A = dim Z + dim [A,A]
        for a in [
            quaternion_group_algebra(),
            klein_four_group_algebra(),
            truncated_polynomial_algebra(2, 2),
            truncated_polynomial_algebra(2, 4),
        ] {
            assert!(a.find_symmetrizing_form().is_ok());
            let series = a.radical_series().unwrap();
            let soc = a.socle(Side::TwoSided).unwrap();
            assert_eq!(soc.dim(), 1);
            assert_eq!(soc, series[series.len() - 2]);
            let comm = a.commutator_space();
            assert!(soc.intersect(&comm).is_zero());
            assert_eq!(a.center().dim() + comm.dim(), a.dim());
            let z = a.center_algebra().unwrap();
            let jz = z.radical().unwrap().dim();
            let j_cap_z = series[1].intersect(&a.center()).dim();
            assert_eq!(jz, j_cap_z);
            // [A,A] ⊆ J²
            assert!(series[2].contains_subspace(&comm));
        }
    }

    #[test]
    fn socle_square_identities() {
        // soc²(A) = {a : a·J² = 0} = (J²)^⊥; products soc²·J land in soc
        let a = w_table_algebra();
        let series = a.radical_series().unwrap();
        let soc = a.socle(Side::TwoSided).unwrap();
        let soc2 = a.right_annihilator(&series[2]);
        for x in soc2.elements() {
            for b in series[1].elements() {
                let xb = a.mul(&x, &b);
                let bx = a.mul(&b, &x);
                assert_eq!(xb, bx);
                assert!(soc.contains(&xb));
            }
        }
    }

    #[test]
    fn non_local_without_commutativity_is_rejected() {
        assert!(matches!(
            matrix_algebra_2x2().radical(),
            Err(AlgebraError::NotPresentedLocal)
        ));
        // semisimple commutative works via the fallback: J = 0
        assert!(semisimple_pair_algebra().radical().unwrap().is_zero());
    }

    #[test]
    fn constructor_rejects_bad_tables() {
        // C₂ group algebra: 1·1 = 1, 1·x = x·1 = x, x·x = 1
        let c2 = vec![vec![1, 0], vec![0, 1], vec![0, 1], vec![1, 0]];
        let labels2 = vec![String::from("1"), String::from("x")];
        assert!(FinDimAlgebra::new(2, 0, labels2.clone(), c2.clone()).is_ok());
        // broken unit row: 1·x = 1 + x
        let mut broken_unit = c2.clone();
        broken_unit[1] = vec![1, 1];
        assert!(matches!(
            FinDimAlgebra::new(2, 0, labels2.clone(), broken_unit),
            Err(AlgebraError::BadStructure(_))
        ));
        // broken associativity: a·a = b, a·b = 0, b·a = a
        // gives (a·a)·a = a but a·(a·a) = 0
        let mut t = empty_table(3);
        for i in 0..3 {
            t[i][i] = 1;
            t[i * 3][i] = 1;
        }
        t[3 + 1] = vec![0, 0, 1];
        t[2 * 3 + 1] = vec![0, 1, 0];
        let labels3 = vec![String::from("1"), String::from("a"), String::from("b")];
        assert!(matches!(
            FinDimAlgebra::new(2, 0, labels3, t),
            Err(AlgebraError::BadStructure(_))
        ));
        // composite p is rejected
        assert!(FinDimAlgebra::new(4, 0, labels2, c2).is_err());
    }

    /// `GF(p)[x]/(xⁿ) ⊗ GF(p)[y]/(yᵐ)` on the monomial basis.
    fn tensor_truncated(p: u64, n: usize, m: usize) -> FinDimAlgebra {
        let dim = n * m;
        let mut table = empty_table(dim);
        for a in 0..dim {
            let (i1, j1) = (a / m, a % m);
            for b in 0..dim {
                let (i2, j2) = (b / m, b % m);
                if i1 + i2 < n && j1 + j2 < m {
                    table[a * dim + b][(i1 + i2) * m + (j1 + j2)] = 1;
                }
            }
        }
        let labels = (0..dim).map(|a| format!("x{}y{}", a / m, a % m)).collect();
        FinDimAlgebra::new(p, 0, labels, table).expect("tensor algebra is valid")
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(40))]

        /// Radical route cross-validation: on presented-local commutative
        /// algebras the ideal route and the Frobenius nilradical agree.
        #[test]
        fn radical_routes_agree(p in prop::sample::select(vec![2u64, 3]),
                                n in 2usize..4, m in 2usize..4) {
            let a = tensor_truncated(p, n, m);
            let via_local = a.presented_local_radical().expect("monomial basis is local");
            let via_frobenius = a.commutative_nilradical();
            prop_assert_eq!(via_local, via_frobenius);
        }

        /// Radical-spanning step: if products of n radical basis elements
        /// span Jⁿ mod Jⁿ⁺¹, their J-multiples span Jⁿ⁺¹ mod Jⁿ⁺².
        #[test]
        fn radical_power_spanning(n in 2usize..4, m in 2usize..4) {
            let a = tensor_truncated(2, n, m);
            let series = a.radical_series().unwrap();
            for w in series.windows(3).skip(1) {
                let j = &series[1];
                // products (basis of J)·(basis of Jⁿ) + Jⁿ⁺² = Jⁿ⁺¹
                let products = a.product_space(j, &w[0]);
                prop_assert_eq!(products.sum(&w[2]), w[1].clone());
            }
        }

        /// One-dimensional Loewy layer forces the previous power central:
        /// dim(Jⁿ/Jⁿ⁺¹) = 1 ⟹ Jⁿ⁻¹ ⊆ Z(A).
        #[test]
        fn thin_layer_centrality(n in 2usize..5) {
            let a = truncated_polynomial_algebra(2, n);
            let series = a.radical_series().unwrap();
            let z = a.center();
            for t in 1..series.len() - 1 {
                if series[t].dim() - series[t + 1].dim() == 1 {
                    prop_assert!(z.contains_subspace(&series[t - 1]));
                }
            }
        }
    }

    #[test]
    fn thin_layer_centrality_on_shipped_examples() {
        for a in [
            w_table_algebra(),
            presentation_case_i_ii(),
            presentation_case_iii(),
            quaternion_group_algebra(),
            fib_probe_algebra(),
        ] {
            let series = a.radical_series().unwrap();
            let z = a.center();
            for t in 1..series.len() - 1 {
                if series[t].dim() - series[t + 1].dim() == 1 {
                    assert!(z.contains_subspace(&series[t - 1]));
                }
            }
        }
    }
}

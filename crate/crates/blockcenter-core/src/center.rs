//! The center lattice attached to a generalized decomposition matrix, its
//! reduction modulo `p`, and matching of the reduction against the two
//! candidate 8-dimensional presentations.
//!
//! Writing `q` for the transpose of the assembled decomposition matrix, a
//! central element corresponds to an integral `k×k` matrix `A` such that
//! `q⁻¹·A·q` is diagonal; the diagonal collects the values of the central
//! characters.  Those conditions are linear in the entries of `A`, so the
//! center is the saturated integer kernel of an explicit equation matrix and
//! forms a full-rank lattice of diagonals, closed under entrywise products.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::fdalgebra::{AlgebraError, FinDimAlgebra};
use crate::gfp::{GfpMat, Subspace};
use crate::matrix::{IntMatrix, LinalgError, RatMatrix};
use crate::snf::integer_kernel_basis;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CenterError {
    Linalg(LinalgError),
    Algebra(AlgebraError),
    Shape(&'static str),
    /// `q` must be square and invertible.
    SingularQ,
    /// The saturated kernel has unexpected rank (the equations are degenerate).
    UnexpectedKernelRank { expected: usize, found: usize },
    /// A basis matrix conjugates to a diagonal with a non-integral entry.
    NonIntegralDiagonal { basis_index: usize, row: usize },
    /// A product (or the identity) failed to lie in the lattice.
    LatticeNotClosed,
    /// Presentation matching is defined for 8-dimensional algebras only.
    WrongDimension { expected: usize, found: usize },
    /// Presentation matching is defined over GF(2) only.
    RequiresCharTwo,
}

impl fmt::Display for CenterError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CenterError::Linalg(e) => write!(f, "{e}"),
            CenterError::Algebra(e) => write!(f, "{e}"),
            CenterError::Shape(ctx) => write!(f, "shape error: {ctx}"),
            CenterError::SingularQ => write!(f, "q must be square and invertible"),
            CenterError::UnexpectedKernelRank { expected, found } => {
                write!(f, "kernel rank {found}, expected {expected}")
            }
            CenterError::NonIntegralDiagonal { basis_index, row } => write!(
                f,
                "basis matrix {basis_index}: diagonal entry {row} is not integral"
            ),
            CenterError::LatticeNotClosed => {
                write!(f, "the diagonal lattice is not closed under products")
            }
            CenterError::WrongDimension { expected, found } => {
                write!(f, "presentation matching needs dimension {expected}, got {found}")
            }
            CenterError::RequiresCharTwo => {
                write!(f, "presentation matching is defined over GF(2)")
            }
        }
    }
}

impl core::error::Error for CenterError {}

impl From<LinalgError> for CenterError {
    fn from(e: LinalgError) -> Self {
        CenterError::Linalg(e)
    }
}

impl From<AlgebraError> for CenterError {
    fn from(e: AlgebraError) -> Self {
        CenterError::Algebra(e)
    }
}

/// The `(k²−k)×k²` integer matrix whose kernel consists of the flattened
/// matrices `A` with `q⁻¹·A·q` diagonal: one row per off-diagonal position
/// `(r,s)`, with the coefficient of `a_ij` equal to `(q⁻¹)_ri·q_js`,
/// denominators cleared and content removed per row.
pub fn center_equations(q: &RatMatrix) -> Result<IntMatrix, CenterError> {
    let k = q.rows();
    if q.cols() != k {
        return Err(CenterError::Shape("q must be square"));
    }
    let q_inv = q.inverse().map_err(|_| CenterError::SingularQ)?;
    Ok(center_equations_impl(q, &q_inv))
}

fn center_equations_impl(q: &RatMatrix, q_inv: &RatMatrix) -> IntMatrix {
    let k = q.rows();
    let mut eqs = IntMatrix::zeros(k * k - k, k * k);
    let mut row = 0;
    for r in 0..k {
        for s in 0..k {
            if r == s {
                continue;
            }
            let mut entries: Vec<BigRational> = Vec::with_capacity(k * k);
            for i in 0..k {
                for j in 0..k {
                    entries.push(&q_inv[(r, i)] * &q[(j, s)]);
                }
            }
            let mut denom = BigInt::one();
            for e in &entries {
                denom = denom.lcm(e.denom());
            }
            let mut ints: Vec<BigInt> =
                entries.iter().map(|e| (e * BigRational::from_integer(denom.clone())).to_integer()).collect();
            let mut content = BigInt::zero();
            for v in &ints {
                content = content.gcd(v);
            }
            if content > BigInt::one() {
                for v in &mut ints {
                    *v = &*v / &content;
                }
            }
            for (idx, v) in ints.into_iter().enumerate() {
                eqs[(row, idx)] = v;
            }
            row += 1;
        }
    }
    eqs
}

/// The full-rank lattice of central diagonals for a decomposition matrix.
#[derive(Debug, Clone)]
pub struct CenterLattice {
    /// Transpose of the assembled decomposition matrix.
    pub q: RatMatrix,
    /// Integral matrices `β` with `q⁻¹·β·q` diagonal; a `Z`-basis.
    pub basis_matrices: Vec<IntMatrix>,
    /// `k×k`; column `j` is the diagonal of `q⁻¹·βⱼ·q`.
    pub basis_diagonals: IntMatrix,
}

impl CenterLattice {
    pub fn new(q: RatMatrix) -> Result<CenterLattice, CenterError> {
        let k = q.rows();
        if q.cols() != k || k == 0 {
            return Err(CenterError::Shape("q must be square and nonempty"));
        }
        let q_inv = q.inverse().map_err(|_| CenterError::SingularQ)?;
        let eqs = center_equations_impl(&q, &q_inv);
        let kern = integer_kernel_basis(&eqs);
        if kern.rows() != k {
            return Err(CenterError::UnexpectedKernelRank { expected: k, found: kern.rows() });
        }
        let mut basis_matrices = Vec::with_capacity(k);
        let mut basis_diagonals = IntMatrix::zeros(k, k);
        for t in 0..k {
            let mut beta = IntMatrix::zeros(k, k);
            for i in 0..k {
                for j in 0..k {
                    beta[(i, j)] = kern[(t, i * k + j)].clone();
                }
            }
            let conj = q_inv.mul_mat(&beta.to_rational())?.mul_mat(&q)?;
            debug_assert!(conj.is_diagonal());
            for (i, d) in conj.diagonal().into_iter().enumerate() {
                if !d.is_integer() {
                    return Err(CenterError::NonIntegralDiagonal { basis_index: t, row: i });
                }
                basis_diagonals[(i, t)] = d.to_integer();
            }
            basis_matrices.push(beta);
        }
        Ok(CenterLattice { q, basis_matrices, basis_diagonals })
    }

    /// Builds the lattice from an assembled decomposition matrix `G`,
    /// conjugating by `q = Gᵀ`.
    pub fn from_decomposition_matrix(g: &IntMatrix) -> Result<CenterLattice, CenterError> {
        CenterLattice::new(g.transpose().to_rational())
    }

    pub fn rank(&self) -> usize {
        self.basis_diagonals.rows()
    }

    /// Whether this lattice equals the column span of `other` over `Z`.
    pub fn equals_diagonal_lattice(&self, other: &IntMatrix) -> Result<bool, CenterError> {
        lattices_equal(&self.basis_diagonals, other)
    }

    /// Coordinates of an integral diagonal in the lattice basis, if it lies
    /// in the lattice.
    fn lattice_coordinates(
        &self,
        b_inv: &RatMatrix,
        diag: &[BigInt],
    ) -> Result<Vec<BigInt>, CenterError> {
        let k = self.rank();
        let mut rhs = RatMatrix::zeros(k, 1);
        for (i, d) in diag.iter().enumerate() {
            rhs[(i, 0)] = BigRational::from_integer(d.clone());
        }
        let sol = b_inv.mul_mat(&rhs)?;
        let mut out = Vec::with_capacity(k);
        for i in 0..k {
            let v = &sol[(i, 0)];
            if !v.is_integer() {
                return Err(CenterError::LatticeNotClosed);
            }
            out.push(v.to_integer());
        }
        Ok(out)
    }

    /// The quotient ring `L/pL` as a structure-constant algebra over GF(p),
    /// re-presented so that the unit is basis element 0.
    ///
    /// Products are computed in exact lattice coordinates before reduction:
    /// distinct diagonals can coincide modulo `p`, so entrywise arithmetic on
    /// reduced diagonal vectors would conflate elements.
    pub fn reduce_mod_p(&self, p: u64) -> Result<ModularCenter, CenterError> {
        let k = self.rank();
        let b_inv = self
            .basis_diagonals
            .to_rational()
            .inverse()
            .map_err(|_| CenterError::SingularQ)?;
        // structure constants over Z in lattice coordinates
        let diag_col = |t: usize| -> Vec<BigInt> {
            (0..k).map(|i| self.basis_diagonals[(i, t)].clone()).collect()
        };
        let mut sc = vec![vec![0u64; k]; k * k];
        for i in 0..k {
            let di = diag_col(i);
            for j in 0..k {
                let dj = diag_col(j);
                let prod: Vec<BigInt> = di.iter().zip(&dj).map(|(a, b)| a * b).collect();
                let w = self.lattice_coordinates(&b_inv, &prod)?;
                for (t, c) in w.into_iter().enumerate() {
                    sc[i * k + j][t] = mod_u64(&c, p);
                }
            }
        }
        let ones: Vec<BigInt> = vec![BigInt::one(); k];
        let unit_z = self.lattice_coordinates(&b_inv, &ones)?;
        let unit_mod: Vec<u64> = unit_z.iter().map(|c| mod_u64(c, p)).collect();

        // new GF(p) basis: the unit first, completed by standard vectors
        let mut new_basis = vec![unit_mod];
        let mut span = Subspace::from_vectors(p, k, &new_basis);
        for t in 0..k {
            if span.dim() == k {
                break;
            }
            let mut e = vec![0u64; k];
            e[t] = 1;
            if !span.contains(&e) {
                new_basis.push(e.clone());
                span = span.sum(&Subspace::from_vectors(p, k, &[e]));
            }
        }
        let mut n_mat = GfpMat::zeros(p, 0, k);
        for b in &new_basis {
            n_mat.push_row(b);
        }
        let n_t = n_mat.transpose();
        // bilinear product in old lattice coordinates mod p
        let prod_old = |x: &[u64], y: &[u64]| -> Vec<u64> {
            let mut out = vec![0u64; k];
            for (i, &xi) in x.iter().enumerate() {
                if xi == 0 {
                    continue;
                }
                for (j, &yj) in y.iter().enumerate() {
                    if yj == 0 {
                        continue;
                    }
                    let c = xi * yj % p;
                    for (t, &s) in sc[i * k + j].iter().enumerate() {
                        out[t] = (out[t] + c * s) % p;
                    }
                }
            }
            out
        };
        let mut table = Vec::with_capacity(k * k);
        for a in &new_basis {
            for b in &new_basis {
                let w = prod_old(a, b);
                let coords = n_t.solve(&w).ok_or(CenterError::LatticeNotClosed)?;
                table.push(coords);
            }
        }
        let labels: Vec<String> = (0..k)
            .map(|i| if i == 0 { String::from("1") } else { format!("z{i}") })
            .collect();
        let algebra = FinDimAlgebra::new(p, 0, labels, table)?;
        // diagonals of the new basis, reduced mod p (column j = basis j)
        let mut basis_diagonals = GfpMat::zeros(p, k, k);
        for (j, nb) in new_basis.iter().enumerate() {
            for i in 0..k {
                let mut acc = 0u64;
                for (t, &c) in nb.iter().enumerate() {
                    if c != 0 {
                        acc = (acc + c * mod_u64(&self.basis_diagonals[(i, t)], p)) % p;
                    }
                }
                basis_diagonals[(i, j)] = acc;
            }
        }
        Ok(ModularCenter { algebra, basis_diagonals })
    }
}

fn mod_u64(v: &BigInt, p: u64) -> u64 {
    let m = v.mod_floor(&BigInt::from(p));
    let (_, digits) = m.to_u64_digits();
    digits.first().copied().unwrap_or(0)
}

/// Whether two full-rank diagonal lattices (columns of square integer
/// matrices) coincide: both transition matrices must be integral, which
/// forces them unimodular.
pub fn lattices_equal(a: &IntMatrix, b: &IntMatrix) -> Result<bool, CenterError> {
    if a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows() {
        return Err(CenterError::Shape("lattice bases must be square of equal size"));
    }
    let ar = a.to_rational();
    let br = b.to_rational();
    let a_inv = ar.inverse().map_err(|_| CenterError::SingularQ)?;
    let b_inv = br.inverse().map_err(|_| CenterError::SingularQ)?;
    let ab = a_inv.mul_mat(&br)?;
    let ba = b_inv.mul_mat(&ar)?;
    Ok(ab.to_integral().is_ok() && ba.to_integral().is_ok())
}

/// `L/pL` with the unit as basis element 0, plus the diagonal picture of the
/// chosen basis.
#[derive(Debug, Clone)]
pub struct ModularCenter {
    pub algebra: FinDimAlgebra,
    /// Column `j` is the reduced diagonal of algebra basis element `j`.
    pub basis_diagonals: GfpMat,
}

/// The two candidate isomorphism types for the 8-dimensional reduction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Presentation {
    /// `F[X,Y,Z₁..Z₄]/⟨X²+1, Y²+1, (X+1)Zᵢ, (Y+1)Zᵢ, ZᵢZⱼ⟩`.
    CaseOneTwo,
    /// `F[X,Z₁..Z₆]/⟨X²+1, XZ₂ᵢ+Z₂ᵢ₋₁, ZᵢZⱼ⟩`.
    CaseThree,
}

impl Presentation {
    /// The model algebra on its standard basis.
    pub fn model(self) -> FinDimAlgebra {
        match self {
            Presentation::CaseOneTwo => crate::fdalgebra::presentation_case_i_ii(),
            Presentation::CaseThree => crate::fdalgebra::presentation_case_iii(),
        }
    }
}

/// A verified isomorphism from a model presentation onto an algebra:
/// `images[i]` is the image of model basis vector `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PresentationMatch {
    pub presentation: Presentation,
    pub images: Vec<Vec<u64>>,
}

/// Checks that `images` defines an algebra isomorphism `model → alg` on the
/// model's basis: the images must be linearly independent and multiplicative.
pub fn verify_isomorphism(alg: &FinDimAlgebra, model: &FinDimAlgebra, images: &[Vec<u64>]) -> bool {
    if alg.p() != model.p() || alg.dim() != model.dim() || images.len() != model.dim() {
        return false;
    }
    let span = Subspace::from_vectors(alg.p(), alg.dim(), images);
    if span.dim() != alg.dim() {
        return false;
    }
    let p = alg.p();
    for i in 0..model.dim() {
        for j in 0..model.dim() {
            let lhs = alg.mul(&images[i], &images[j]);
            let mut rhs = vec![0u64; alg.dim()];
            for (t, &c) in model.basis_product(i, j).iter().enumerate() {
                if c != 0 {
                    for (s, &x) in images[t].iter().enumerate() {
                        rhs[s] = (rhs[s] + c * x) % p;
                    }
                }
            }
            if lhs != rhs {
                return false;
            }
        }
    }
    true
}

/// Decides whether `alg` is isomorphic to the chosen model presentation,
/// returning a verified witness if so.
///
/// The searches are deterministic (elements are scanned in the odometer
/// order of the canonical radical basis) and complete:
///
/// * For the first model, any `u, w ∈ J` with `u² = w² = 0` and
///   `dim span{1,u,w,uw} = 4`, together with any four annihilator elements
///   independent modulo `uw`, assemble to an isomorphism — multiplicativity
///   is automatic from those constraints, so scanning all such pairs decides
///   the question.
/// * For the second model, any `u ∈ J` with `u² = 0` and any `a, b, c ∈ J`
///   that pairwise annihilate and square to zero with
///   `dim span{1,u,a,ua,b,ub,c,uc} = 8` assemble to an isomorphism; the
///   model's symmetry under permuting its three generator pairs lets the
///   scan restrict to ordered triples.
///
/// Dimension counts of `J` and `J²` reject cross-case inputs immediately.
pub fn match_presentation(
    alg: &FinDimAlgebra,
    which: Presentation,
) -> Result<Option<PresentationMatch>, CenterError> {
    if alg.p() != 2 {
        return Err(CenterError::RequiresCharTwo);
    }
    if alg.dim() != 8 {
        return Err(CenterError::WrongDimension { expected: 8, found: alg.dim() });
    }
    if !alg.is_commutative() {
        return Ok(None);
    }
    let j = alg.radical()?;
    if j.dim() != 7 {
        return Ok(None);
    }
    let j2 = alg.product_space(&j, &j);
    let model = which.model();
    let is_zero = |v: &[u64]| v.iter().all(|&x| x == 0);
    // square-zero elements of J, in scan order
    let square_zero: Vec<Vec<u64>> = j
        .elements()
        .into_iter()
        .filter(|v| !is_zero(v) && is_zero(&alg.mul(v, v)))
        .collect();
    let one = alg.unit_vec();

    match which {
        Presentation::CaseOneTwo => {
            if j2.dim() != 1 {
                return Ok(None);
            }
            let ann = alg.right_annihilator(&j);
            let ann_elements = ann.elements();
            for (iu, u) in square_zero.iter().enumerate() {
                for w in square_zero.iter().skip(iu + 1) {
                    let uw = alg.mul(u, w);
                    if is_zero(&uw) {
                        continue;
                    }
                    let quad = Subspace::from_vectors(
                        2,
                        8,
                        &[one.clone(), u.clone(), w.clone(), uw.clone()],
                    );
                    if quad.dim() != 4 {
                        continue;
                    }
                    let mut acc = Subspace::from_vectors(2, 8, core::slice::from_ref(&uw));
                    let mut zs: Vec<Vec<u64>> = Vec::with_capacity(4);
                    for z in &ann_elements {
                        if !acc.contains(z) {
                            zs.push(z.clone());
                            acc = acc.sum(&Subspace::from_vectors(2, 8, core::slice::from_ref(z)));
                            if zs.len() == 4 {
                                break;
                            }
                        }
                    }
                    if zs.len() < 4 {
                        continue;
                    }
                    let x = alg.add(&one, u);
                    let y = alg.add(&one, w);
                    let xy = alg.mul(&x, &y);
                    let mut images = vec![one.clone(), x, y, xy];
                    images.extend(zs);
                    if verify_isomorphism(alg, &model, &images) {
                        return Ok(Some(PresentationMatch { presentation: which, images }));
                    }
                }
            }
            Ok(None)
        }
        Presentation::CaseThree => {
            if j2.dim() != 3 {
                return Ok(None);
            }
            for u in &square_zero {
                for (ia, a) in square_zero.iter().enumerate() {
                    let ua = alg.mul(u, a);
                    let span4 =
                        Subspace::from_vectors(2, 8, &[one.clone(), u.clone(), a.clone(), ua.clone()]);
                    if span4.dim() != 4 {
                        continue;
                    }
                    for (ib, b) in square_zero.iter().enumerate().skip(ia + 1) {
                        if !is_zero(&alg.mul(a, b)) {
                            continue;
                        }
                        let ub = alg.mul(u, b);
                        let span6 = span4.sum(&Subspace::from_vectors(
                            2,
                            8,
                            &[b.clone(), ub.clone()],
                        ));
                        if span6.dim() != 6 {
                            continue;
                        }
                        for c in square_zero.iter().skip(ib + 1) {
                            if !is_zero(&alg.mul(a, c)) || !is_zero(&alg.mul(b, c)) {
                                continue;
                            }
                            let uc = alg.mul(u, c);
                            let span8 = span6.sum(&Subspace::from_vectors(
                                2,
                                8,
                                &[c.clone(), uc.clone()],
                            ));
                            if span8.dim() != 8 {
                                continue;
                            }
                            let x = alg.add(&one, u);
                            let images = vec![
                                one.clone(),
                                x,
                                alg.add(a, &ua),
                                a.clone(),
                                alg.add(b, &ub),
                                b.clone(),
                                alg.add(c, &uc),
                                c.clone(),
                            ];
                            if verify_isomorphism(alg, &model, &images) {
                                return Ok(Some(PresentationMatch {
                                    presentation: which,
                                    images,
                                }));
                            }
                        }
                    }
                }
            }
            Ok(None)
        }
    }
}

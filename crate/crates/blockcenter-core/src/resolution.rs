//! Minimal projective resolutions of the simple module over a local algebra,
//! the Fibonacci lower-bound certificate for their growth, and the witness
//! search backing the growth hypothesis.
//!
//! The resolution engine computes syzygies exactly: the cover of a submodule
//! `K ⊆ A^m` uses `dim K/K·J` generators (Nakayama), and the next syzygy is
//! the F-linear kernel of the induced map `A^n → A^m`.  Over GF(2) the rows
//! are bit-packed (the twelve-step growth probe reaches ambient dimensions
//! past 10⁴); other primes use the dense field path.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::fdalgebra::{AlgebraError, FinDimAlgebra};
use crate::gf2::{self, Gf2Echelon};
use crate::gfp::{GfpMat, Subspace};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ResolutionError {
    Algebra(AlgebraError),
    /// The algebra must be local with one-dimensional top `A/J`.
    NotLocalSimpleTop,
    /// A hypothesis witness lies outside the radical.
    NotInRadical,
    /// A spanning set is not closed under the algebra action.
    NotSubmodule,
    Shape(&'static str),
    /// A resolution step (or a witness search space) exceeds the size guard.
    TooLarge,
}

impl fmt::Display for ResolutionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ResolutionError::Algebra(e) => write!(f, "{e}"),
            ResolutionError::NotLocalSimpleTop => {
                write!(f, "algebra must be local with one-dimensional top")
            }
            ResolutionError::NotInRadical => {
                write!(f, "hypothesis witness does not lie in the radical")
            }
            ResolutionError::NotSubmodule => {
                write!(f, "spanning rows are not closed under the algebra action")
            }
            ResolutionError::Shape(ctx) => write!(f, "shape error: {ctx}"),
            ResolutionError::TooLarge => write!(f, "resolution step exceeds the size guard"),
        }
    }
}

impl core::error::Error for ResolutionError {}

impl From<AlgebraError> for ResolutionError {
    fn from(e: AlgebraError) -> Self {
        ResolutionError::Algebra(e)
    }
}

/// A right `A`-submodule of a free module `A^free_rank`, held as an F-basis
/// of spanning rows (each row flattens the `free_rank` components, `dim`
/// coordinates per component).
#[derive(Debug, Clone)]
pub struct ModuleOverLocal {
    pub free_rank: usize,
    /// Rows span the module as an F-space.
    pub spanning: GfpMat,
}

impl ModuleOverLocal {
    /// Validates that the row span is closed under right multiplication by
    /// every algebra basis element.
    pub fn new(
        alg: &FinDimAlgebra,
        free_rank: usize,
        spanning: GfpMat,
    ) -> Result<ModuleOverLocal, ResolutionError> {
        if spanning.cols() != free_rank * alg.dim() || spanning.p != alg.p() {
            return Err(ResolutionError::Shape("rows must have free_rank·dim coordinates"));
        }
        let space = Subspace::from_spanning(spanning.clone());
        for r in 0..spanning.rows() {
            for b in 0..alg.dim() {
                let moved = act_on_flat(alg, free_rank, spanning.row(r), b);
                if !space.contains(&moved) {
                    return Err(ResolutionError::NotSubmodule);
                }
            }
        }
        Ok(ModuleOverLocal { free_rank, spanning })
    }

    /// F-dimension of the module.
    pub fn dim(&self) -> usize {
        self.spanning.rank()
    }

    /// `M·J` as a module (closure under the action is inherited).
    pub fn radical_multiples(&self, alg: &FinDimAlgebra) -> Result<ModuleOverLocal, ResolutionError> {
        let j = alg.radical()?;
        let mut rows = GfpMat::zeros(alg.p(), 0, self.free_rank * alg.dim());
        for r in 0..self.spanning.rows() {
            for jb in j.basis_rows() {
                rows.push_row(&act_by_element(alg, self.free_rank, self.spanning.row(r), jb));
            }
        }
        Ok(ModuleOverLocal { free_rank: self.free_rank, spanning: rows })
    }

    /// Minimal number of generators, `dim M/M·J`.
    pub fn minimal_generator_count(&self, alg: &FinDimAlgebra) -> Result<usize, ResolutionError> {
        Ok(self.dim() - self.radical_multiples(alg)?.dim())
    }
}

/// Right action of basis element `e_b` on a flattened vector in `A^m`.
fn act_on_flat(alg: &FinDimAlgebra, m: usize, row: &[u64], b: usize) -> Vec<u64> {
    let dim = alg.dim();
    let p = alg.p();
    let mut out = vec![0u64; m * dim];
    for c in 0..m {
        for i in 0..dim {
            let coeff = row[c * dim + i];
            if coeff == 0 {
                continue;
            }
            for (t, &x) in alg.basis_product(i, b).iter().enumerate() {
                out[c * dim + t] = (out[c * dim + t] + coeff * x) % p;
            }
        }
    }
    out
}

/// Right action of an arbitrary element (coordinate vector) on a flattened
/// vector in `A^m`.
fn act_by_element(alg: &FinDimAlgebra, m: usize, row: &[u64], el: &[u64]) -> Vec<u64> {
    let p = alg.p();
    let mut out = vec![0u64; row.len()];
    for (b, &c) in el.iter().enumerate() {
        if c == 0 {
            continue;
        }
        let moved = act_on_flat(alg, m, row, b);
        for (o, x) in out.iter_mut().zip(moved) {
            *o = (*o + c * x) % p;
        }
    }
    out
}

/// The ranks of a minimal resolution next to the Fibonacci lower bounds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResolutionTrace {
    /// `n[i]` is the rank of the i-th projective; `n[0] = 1`.
    pub n: Vec<usize>,
    /// `fib[i]` with `fib[0] = 1, fib[1] = 2` (the seed before index 0 is 1).
    pub fib: Vec<u64>,
}

/// `count` Fibonacci numbers starting `1, 2, 3, 5, …`.
pub fn fibonacci_numbers(count: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(count);
    let (mut prev, mut cur) = (1u64, 1u64);
    for _ in 0..count {
        out.push(cur);
        let next = prev + cur;
        prev = cur;
        cur = next;
    }
    out
}

/// Checks `n[i] ≥ fib[i]` for every step; `Err(i)` names the first failure.
pub fn fibonacci_certificate(trace: &ResolutionTrace) -> Result<(), usize> {
    for (i, &ni) in trace.n.iter().enumerate() {
        if (ni as u64) < trace.fib[i] {
            return Err(i);
        }
    }
    Ok(())
}

/// Ranks `n_0, …, n_steps` of a minimal projective resolution of the simple
/// module over a local algebra with one-dimensional top.
pub fn minimal_resolution_dims(
    alg: &FinDimAlgebra,
    steps: usize,
) -> Result<ResolutionTrace, ResolutionError> {
    let j = alg.radical()?;
    if j.dim() + 1 != alg.dim() {
        return Err(ResolutionError::NotLocalSimpleTop);
    }
    let n = if alg.p() == 2 && alg.dim() <= 64 {
        resolve_packed(alg, &j, steps)?
    } else {
        resolve_dense(alg, &j, steps)?
    };
    let fib = fibonacci_numbers(n.len());
    Ok(ResolutionTrace { n, fib })
}

/// Module dimension cap per resolution step; growth is exponential by design.
const DIM_GUARD: usize = 2_000_000;

/// Bit-packed GF(2) engine.  Rows of `A^m` occupy `m·dim` bits, component
/// `c` at bit offset `c·dim`.
fn resolve_packed(
    alg: &FinDimAlgebra,
    j: &Subspace,
    steps: usize,
) -> Result<Vec<usize>, ResolutionError> {
    let dim = alg.dim();
    // right-multiplication masks: mul_mask[b][i] = bits of e_i·e_b
    let mask_of = |coords: &[u64]| -> u64 {
        coords
            .iter()
            .enumerate()
            .fold(0u64, |acc, (t, &x)| if x & 1 == 1 { acc | 1 << t } else { acc })
    };
    let mul_mask: Vec<Vec<u64>> = (0..dim)
        .map(|b| (0..dim).map(|i| mask_of(alg.basis_product(i, b))).collect())
        .collect();
    // masks for right multiplication by each radical basis element
    let rad_masks: Vec<Vec<u64>> = j
        .basis_rows()
        .map(|r| {
            (0..dim)
                .map(|i| {
                    r.iter().enumerate().fold(0u64, |acc, (b, &c)| {
                        if c & 1 == 1 {
                            acc ^ mul_mask[b][i]
                        } else {
                            acc
                        }
                    })
                })
                .collect()
        })
        .collect();

    // XORs `mask` (dim bits) into `row` starting at bit `offset`
    let xor_mask_at = |row: &mut [u64], offset: usize, mask: u64| {
        let (w, s) = (offset / 64, offset % 64);
        row[w] ^= mask << s;
        if s != 0 && s + dim > 64 {
            row[w + 1] ^= mask >> (64 - s);
        }
    };
    // applies a component-wise right multiplication table to a packed row
    let act = |row: &[u64], table: &[u64], m: usize| -> Vec<u64> {
        let mut out = vec![0u64; (m * dim).div_ceil(64)];
        for (w, &word) in row.iter().enumerate() {
            let mut bits = word;
            while bits != 0 {
                let idx = w * 64 + bits.trailing_zeros() as usize;
                bits &= bits - 1;
                if idx >= m * dim {
                    break;
                }
                let (c, i) = (idx / dim, idx % dim);
                xor_mask_at(&mut out, c * dim, table[i]);
            }
        }
        out
    };

    // J is a hyperplane (one-dimensional top): membership is a parity check
    // against the single dual functional
    let j_functional = {
        let mut rows = GfpMat::zeros(2, 0, dim);
        for r in j.basis_rows() {
            rows.push_row(r);
        }
        let f = rows.kernel();
        debug_assert_eq!(f.rows(), 1);
        mask_of(f.row(0))
    };
    let in_radical = |comp: u64| (comp & j_functional).count_ones() & 1 == 0;
    let component = |row: &[u64], offset: usize| -> u64 {
        let (w, s) = (offset / 64, offset % 64);
        let mut bits = row[w] >> s;
        if s != 0 && s + dim > 64 {
            bits |= row[w + 1] << (64 - s);
        }
        if dim < 64 {
            bits &= (1u64 << dim) - 1;
        }
        bits
    };

    // K₀ = J inside A¹
    let mut n = vec![1usize];
    let mut m = 1usize;
    let mut k_basis: Vec<Vec<u64>> = j
        .basis_rows()
        .map(|r| gf2::pack_bits(&r.iter().map(|&x| x & 1).collect::<Vec<u64>>()))
        .collect();
    for step in 1..=steps {
        // K·J and the minimal generator count
        let width = m * dim;
        let mut kj = Gf2Echelon::new(width);
        for k in &k_basis {
            for table in &rad_masks {
                kj.insert(act(k, table, m));
            }
        }
        let next_n = k_basis.len() - kj.dim();
        n.push(next_n);
        if next_n == 0 {
            // the resolution has terminated; remaining kernels are zero
            n.resize(steps + 1, 0);
            break;
        }
        if step == steps {
            break;
        }
        if next_n * dim > DIM_GUARD {
            return Err(ResolutionError::TooLarge);
        }
        // generators: basis rows of K independent modulo K·J
        let mut acc = kj;
        let mut gens: Vec<Vec<u64>> = Vec::with_capacity(next_n);
        for k in &k_basis {
            if acc.insert(k.clone()) {
                gens.push(k.clone());
                if gens.len() == next_n {
                    break;
                }
            }
        }
        debug_assert_eq!(gens.len(), next_n);
        // kernel of A^next_n → A^m, ε_t·e_b ↦ gens[t]·e_b
        let mut map_rows: Vec<Vec<u64>> = Vec::with_capacity(next_n * dim);
        for g in &gens {
            for mask in &mul_mask {
                map_rows.push(act(g, mask, m));
            }
        }
        let prev_dim = k_basis.len();
        k_basis = gf2::kernel_of_rows(&map_rows, width);
        // rank–nullity against the cover: dim K_next = n·dim A − dim K
        if k_basis.len() != next_n * dim - prev_dim {
            return Err(ResolutionError::Shape("cover map is not onto the syzygy"));
        }
        // minimality: the kernel lies inside J·A^n
        for row in &k_basis {
            for c in 0..next_n {
                if !in_radical(component(row, c * dim)) {
                    return Err(ResolutionError::Shape("cover map is not minimal"));
                }
            }
        }
        m = next_n;
    }
    Ok(n)
}

/// Dense field engine for odd primes (and a fallback beyond 64 coordinates).
fn resolve_dense(
    alg: &FinDimAlgebra,
    j: &Subspace,
    steps: usize,
) -> Result<Vec<usize>, ResolutionError> {
    let dim = alg.dim();
    let p = alg.p();
    // dual functional cutting out the hyperplane J
    let j_functional = {
        let mut rows = GfpMat::zeros(p, 0, dim);
        for r in j.basis_rows() {
            rows.push_row(r);
        }
        let f = rows.kernel();
        debug_assert_eq!(f.rows(), 1);
        f.row(0).to_vec()
    };
    let in_radical = |comp: &[u64]| -> bool {
        comp.iter().zip(&j_functional).map(|(&a, &b)| a * b % p).sum::<u64>() % p == 0
    };
    let mut n = vec![1usize];
    let mut m = 1usize;
    let mut k_mat = GfpMat::zeros(p, 0, dim);
    for r in j.basis_rows() {
        k_mat.push_row(r);
    }
    for step in 1..=steps {
        let width = m * dim;
        let mut kj = GfpMat::zeros(p, 0, width);
        for r in 0..k_mat.rows() {
            for jb in j.basis_rows() {
                kj.push_row(&act_by_element(alg, m, k_mat.row(r), jb));
            }
        }
        let kj_space = Subspace::from_spanning(kj);
        let next_n = k_mat.rows() - kj_space.dim();
        n.push(next_n);
        if next_n == 0 {
            n.resize(steps + 1, 0);
            break;
        }
        if step == steps {
            break;
        }
        if next_n * dim > DIM_GUARD || next_n * dim * width > 1 << 24 {
            return Err(ResolutionError::TooLarge);
        }
        let k_space = Subspace::from_spanning(k_mat.clone());
        let gens = k_space.complement_basis_mod(&kj_space);
        debug_assert_eq!(gens.len(), next_n);
        let mut map_rows = GfpMat::zeros(p, 0, width);
        for g in &gens {
            for b in 0..dim {
                map_rows.push_row(&act_on_flat(alg, m, g, b));
            }
        }
        let prev_dim = k_mat.rows();
        k_mat = map_rows.transpose().kernel();
        if k_mat.rows() != next_n * dim - prev_dim {
            return Err(ResolutionError::Shape("cover map is not onto the syzygy"));
        }
        for r in 0..k_mat.rows() {
            let row = k_mat.row(r);
            if !(0..next_n).all(|c| in_radical(&row[c * dim..(c + 1) * dim])) {
                return Err(ResolutionError::Shape("cover map is not minimal"));
            }
        }
        m = next_n;
    }
    Ok(n)
}

/// A witness for the growth hypothesis: either a pair `x, z ∈ J` with
/// `xz = zx = z² = 0` and `{x, z}` independent modulo `J²`, or a triple
/// `x, y, z ∈ J` with `xz = zx = yz = zy = 0` and `{x, y, z}` independent
/// modulo `J²`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HypothesisWitness {
    Pair { x: Vec<u64>, z: Vec<u64> },
    Triple { x: Vec<u64>, y: Vec<u64>, z: Vec<u64> },
}

/// Outcome of checking an explicit growth-hypothesis witness set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HypothesisVerdict {
    Holds,
    /// The named product does not vanish.
    NonzeroProduct(&'static str),
    /// The witnesses are F-linearly dependent modulo J².
    DependentModuloRadicalSquare,
}

/// Verifies an explicit witness set for the growth hypothesis: `xz = zx =
/// z² = 0` for a pair, or `xz = zx = yz = zy = 0` for a triple (which puts
/// no condition on `z²`), plus F-linear independence of the witnesses
/// modulo `J²`.  A witness outside the radical is an error, not a verdict.
pub fn verify_growth_hypothesis(
    alg: &FinDimAlgebra,
    x: &[u64],
    y: Option<&[u64]>,
    z: &[u64],
) -> Result<HypothesisVerdict, ResolutionError> {
    let j = alg.radical()?;
    let mut witnesses: Vec<&[u64]> = Vec::with_capacity(3);
    witnesses.push(x);
    if let Some(y) = y {
        witnesses.push(y);
    }
    witnesses.push(z);
    for w in &witnesses {
        if w.len() != alg.dim() {
            return Err(ResolutionError::Shape("witness must have one coordinate per basis element"));
        }
        if !j.contains(w) {
            return Err(ResolutionError::NotInRadical);
        }
    }
    // independence modulo J² is checked first: a dependent set is rejected
    // no matter how its products behave
    let mut space = alg.product_space(&j, &j);
    for w in &witnesses {
        let grown = space.sum(&Subspace::from_vectors(alg.p(), alg.dim(), &[w.to_vec()]));
        if grown.dim() == space.dim() {
            return Ok(HypothesisVerdict::DependentModuloRadicalSquare);
        }
        space = grown;
    }
    let is_zero = |v: &[u64]| v.iter().all(|&c| c == 0);
    let products: Vec<(&[u64], &[u64], &'static str)> = match y {
        None => vec![(x, z, "x·z"), (z, x, "z·x"), (z, z, "z·z")],
        Some(y) => vec![(x, z, "x·z"), (z, x, "z·x"), (y, z, "y·z"), (z, y, "z·y")],
    };
    for (a, b, name) in products {
        if !is_zero(&alg.mul(a, b)) {
            return Ok(HypothesisVerdict::NonzeroProduct(name));
        }
    }
    Ok(HypothesisVerdict::Holds)
}

/// Searches for a growth-hypothesis witness (pairs first, then triples), in
/// deterministic scan order.
pub fn hypothesis_check(
    alg: &FinDimAlgebra,
) -> Result<Option<HypothesisWitness>, ResolutionError> {
    let j = alg.radical()?;
    let searchable = (alg.p() as u128)
        .checked_pow(j.dim() as u32)
        .is_some_and(|count| count <= 1 << 16);
    if !searchable {
        return Err(ResolutionError::TooLarge);
    }
    let j2 = alg.product_space(&j, &j);
    let p = alg.p();
    let dim = alg.dim();
    let is_zero = |v: &[u64]| v.iter().all(|&x| x == 0);
    let independent_mod = |vs: &[&[u64]]| -> bool {
        let mut space = j2.clone();
        for v in vs {
            let grown = space.sum(&Subspace::from_vectors(p, dim, &[v.to_vec()]));
            if grown.dim() == space.dim() {
                return false;
            }
            space = grown;
        }
        true
    };
    let two_sided_annihilator = |z: &[u64]| -> Subspace {
        let zs = Subspace::from_vectors(p, dim, &[z.to_vec()]);
        alg.right_annihilator(&zs).intersect(&alg.left_annihilator(&zs)).intersect(&j)
    };
    let j_elements = j.elements();
    // pair: z² = 0, then x from the annihilator of z
    for z in &j_elements {
        if is_zero(z) || !is_zero(&alg.mul(z, z)) {
            continue;
        }
        let ann = two_sided_annihilator(z);
        for x in ann.elements() {
            if !is_zero(&x) && independent_mod(&[&x, z]) {
                return Ok(Some(HypothesisWitness::Pair { x, z: z.clone() }));
            }
        }
    }
    // triple: no condition on z², x and y both annihilate z
    for z in &j_elements {
        if is_zero(z) {
            continue;
        }
        let ann = two_sided_annihilator(z);
        let candidates = ann.elements();
        for (ix, x) in candidates.iter().enumerate() {
            if is_zero(x) || !independent_mod(&[x, z]) {
                continue;
            }
            for y in candidates.iter().skip(ix + 1) {
                if independent_mod(&[x, y, z]) {
                    return Ok(Some(HypothesisWitness::Triple {
                        x: x.clone(),
                        y: y.clone(),
                        z: z.clone(),
                    }));
                }
            }
        }
    }
    Ok(None)
}

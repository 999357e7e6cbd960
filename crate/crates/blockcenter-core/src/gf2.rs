//! Bit-packed GF(2) row spaces.
//!
//! The minimal-resolution probe runs a dozen syzygy steps over modules whose
//! ambient dimension grows past 10⁴; a dense one-byte-per-entry layout would
//! make that minutes of work.  Rows here are `u64` words (64 entries per
//! word), and the two workhorses — incremental echelon insertion and kernel
//! extraction — reduce to word-wide XOR sweeps.

use alloc::vec;
use alloc::vec::Vec;

const BITS: usize = 64;

#[inline]
fn words_for(bits: usize) -> usize {
    bits.div_ceil(BITS)
}

/// A growing row-echelon basis of a subspace of GF(2)^width.
///
/// Rows are kept reduced from the left: each has a distinct leading bit, and
/// rows are stored sorted by leading bit.  Insertion reduces the candidate
/// against existing rows and either discards it (dependent) or adds one row.
#[derive(Clone)]
pub struct Gf2Echelon {
    width: usize,
    words: usize,
    /// parallel arrays: rows[i] has leading bit pivots[i]; sorted by pivot
    rows: Vec<Vec<u64>>,
    pivots: Vec<usize>,
}

impl Gf2Echelon {
    pub fn new(width: usize) -> Self {
        Gf2Echelon { width, words: words_for(width), rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `row` in place against the basis; afterwards `row` is either
    /// zero (was dependent) or has a leading bit not yet used.
    fn reduce(&self, row: &mut [u64]) {
        for (r, &piv) in self.rows.iter().zip(&self.pivots) {
            let (w, b) = (piv / BITS, piv % BITS);
            if row[w] >> b & 1 == 1 {
                for (x, y) in row.iter_mut().zip(r) {
                    *x ^= y;
                }
            }
        }
    }

    /// Inserts a row (by value); returns true if it enlarged the space.
    pub fn insert(&mut self, mut row: Vec<u64>) -> bool {
        debug_assert_eq!(row.len(), self.words);
        self.reduce(&mut row);
        let Some(piv) = leading_bit(&row) else {
            return false;
        };
        let pos = self.pivots.partition_point(|&p| p < piv);
        self.pivots.insert(pos, piv);
        self.rows.insert(pos, row);
        true
    }

    pub fn contains(&self, row: &[u64]) -> bool {
        let mut r = row.to_vec();
        self.reduce(&mut r);
        leading_bit(&r).is_none()
    }

    pub fn rows(&self) -> &[Vec<u64>] {
        &self.rows
    }

    /// Basis rows of `self` not lying in `other` (greedy complement).
    pub fn complement_mod(&self, other: &Gf2Echelon) -> Vec<Vec<u64>> {
        let mut acc = other.clone();
        let mut out = Vec::new();
        for r in &self.rows {
            if acc.insert(r.clone()) {
                out.push(r.clone());
            }
        }
        out
    }
}

fn leading_bit(row: &[u64]) -> Option<usize> {
    row.iter()
        .enumerate()
        .find(|(_, &w)| w != 0)
        .map(|(i, &w)| i * BITS + w.trailing_zeros() as usize)
}

/// Kernel of the linear map given by `rows` (each row a vector of length
/// `width`; the map sends coordinate i to rows[i]): returns a basis of
/// `{x : Σ xᵢ·rowᵢ = 0}` as packed rows of length `rows.len()`.
///
/// Augmented elimination: eliminate on the images while mirroring the row
/// operations on an identity block; rows whose image part cancels to zero
/// yield kernel vectors in the identity block.
pub fn kernel_of_rows(rows: &[Vec<u64>], width: usize) -> Vec<Vec<u64>> {
    let n = rows.len();
    let img_words = words_for(width);
    let aug_words = words_for(n);
    let mut work: Vec<(Vec<u64>, Vec<u64>)> = rows
        .iter()
        .enumerate()
        .map(|(i, r)| {
            debug_assert_eq!(r.len(), img_words);
            let mut tag = vec![0u64; aug_words];
            tag[i / BITS] |= 1 << (i % BITS);
            (r.clone(), tag)
        })
        .collect();

    let mut kernel = Vec::new();
    // pivot list over the image part: (pivot bit, row index); pivot rows
    // always have a smaller index than the row being reduced
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    for i in 0..n {
        // reduce row i against established pivots
        while let Some(l) = leading_bit(&work[i].0) {
            match pivots.binary_search_by_key(&l, |&(b, _)| b) {
                Ok(pos) => {
                    let (_, pr) = pivots[pos];
                    debug_assert!(pr < i);
                    let (done, rest) = work.split_at_mut(i);
                    let (pivot, cur) = (&done[pr], &mut rest[0]);
                    for (x, y) in cur.0.iter_mut().zip(&pivot.0) {
                        *x ^= y;
                    }
                    for (x, y) in cur.1.iter_mut().zip(&pivot.1) {
                        *x ^= y;
                    }
                }
                Err(pos) => {
                    pivots.insert(pos, (l, i));
                    break;
                }
            }
        }
        if leading_bit(&work[i].0).is_none() {
            kernel.push(core::mem::take(&mut work[i].1));
        }
    }
    kernel
}

/// Packs a slice of bits (0/1 as u64) into words.
pub fn pack_bits(bits: &[u64]) -> Vec<u64> {
    let mut out = vec![0u64; words_for(bits.len())];
    for (i, &b) in bits.iter().enumerate() {
        if b & 1 == 1 {
            out[i / BITS] |= 1 << (i % BITS);
        }
    }
    out
}

pub fn unpack_bits(row: &[u64], width: usize) -> Vec<u64> {
    (0..width).map(|i| row[i / BITS] >> (i % BITS) & 1).collect()
}

pub fn get_bit(row: &[u64], i: usize) -> bool {
    row[i / BITS] >> (i % BITS) & 1 == 1
}

pub fn set_bit(row: &mut [u64], i: usize) {
    row[i / BITS] |= 1 << (i % BITS);
}

pub fn xor_into(dst: &mut [u64], src: &[u64]) {
    for (x, y) in dst.iter_mut().zip(src) {
        *x ^= y;
    }
}

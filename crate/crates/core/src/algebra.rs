//! Signatures, canonical blade bases and the precomputed product table.
//!
//! Basis vectors are numbered `e0..e{dim-1}`. The degenerate vectors come
//! first, then the negative ones, then the positive ones, so `(3,0,1)` gives
//! `e0² = 0` and `e1² = e2² = e3² = 1`.
//!
//! Every canonical blade is an ordered tuple of basis vectors. For each
//! complementary pair `{S, S⊥}` one member keeps ascending order and the other
//! has its last two indices swapped when needed so that `S S⊥` is an even
//! permutation. For `dim = 4` this yields
//! `1; e0..e3; e01 e02 e03 e12 e31 e23; E0 E1 E2 E3; I`
//! with `E0 = e123`, `E1 = e032`, `E2 = e013`, `E3 = e021`.

use crate::error::{PgaError, Result};
use std::fmt;
use std::str::FromStr;
use std::sync::{Mutex, OnceLock};

/// Metric signature `(p, n, z)`: counts of basis vectors squaring to +1, -1, 0.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Signature {
    pub p: usize,
    pub n: usize,
    pub z: usize,
}

impl Signature {
    /// Euclidean plane, Cl(2,0,1).
    pub const PGA2: Signature = Signature { p: 2, n: 0, z: 1 };
    /// Euclidean space, Cl(3,0,1).
    pub const PGA3: Signature = Signature { p: 3, n: 0, z: 1 };

    pub const MIN_DIM: usize = 2;
    pub const MAX_DIM: usize = 6;

    pub fn new(p: usize, n: usize, z: usize) -> Result<Self> {
        let sig = Signature { p, n, z };
        let dim = sig.dim();
        if !(Self::MIN_DIM..=Self::MAX_DIM).contains(&dim) {
            return Err(PgaError::UnsupportedSignature(format!(
                "{sig}: dimension {dim} outside {}..={}",
                Self::MIN_DIM,
                Self::MAX_DIM
            )));
        }
        Ok(sig)
    }

    pub fn dim(&self) -> usize {
        self.p + self.n + self.z
    }

    /// Square of basis vector `e_i`.
    pub fn square(&self, i: usize) -> f64 {
        if i < self.z {
            0.0
        } else if i < self.z + self.n {
            -1.0
        } else {
            1.0
        }
    }

    /// The euclidean (flat) signatures `(dim-1, 0, 1)`.
    pub fn is_euclidean_pga(&self) -> bool {
        self.z == 1 && self.n == 0
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{}", self.p, self.n, self.z)
    }
}

impl FromStr for Signature {
    type Err = PgaError;

    /// Parses `"P,N,Z"`.
    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(',').map(str::trim).collect();
        if parts.len() != 3 {
            return Err(PgaError::UnsupportedSignature(format!(
                "expected P,N,Z but got {s:?}"
            )));
        }
        let mut v = [0usize; 3];
        for (slot, part) in v.iter_mut().zip(&parts) {
            *slot = part.parse().map_err(|_| {
                PgaError::UnsupportedSignature(format!("bad count {part:?} in {s:?}"))
            })?;
        }
        Signature::new(v[0], v[1], v[2])
    }
}

/// One canonical basis blade.
#[derive(Clone, Debug)]
pub struct Blade {
    /// Basis vector indices in canonical order, e.g. `[3, 1]` for `e31`.
    pub indices: Vec<usize>,
    /// Bit set of the indices.
    pub mask: usize,
    /// Sign of the canonical blade relative to the ascending-order product.
    pub sign: f64,
    pub grade: usize,
    pub name: String,
}

/// Product table cell: `blade_i * blade_j = sign * blade_index`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Cell {
    pub sign: f64,
    pub index: usize,
}

/// Canonical basis plus product and duality tables for one signature.
#[derive(Debug)]
pub struct Algebra {
    sig: Signature,
    blades: Vec<Blade>,
    index_of_mask: Vec<usize>,
    grade_offsets: Vec<usize>,
    product: Vec<Cell>,
    dual: Vec<usize>,
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

fn is_odd_permutation(seq: &[usize]) -> bool {
    let mut inversions = 0;
    for i in 0..seq.len() {
        for j in i + 1..seq.len() {
            if seq[i] > seq[j] {
                inversions += 1;
            }
        }
    }
    inversions % 2 == 1
}

/// Complement of `s` in `0..dim`, ordered so that `s ++ complement` is even.
fn oriented_complement(s: &[usize], dim: usize) -> Vec<usize> {
    let mut comp: Vec<usize> = (0..dim).filter(|i| !s.contains(i)).collect();
    let mut joined = s.to_vec();
    joined.extend(&comp);
    if is_odd_permutation(&joined) {
        let n = comp.len();
        comp.swap(n - 2, n - 1);
    }
    comp
}

/// Canonical blade tuples, grade by grade.
fn canonical_tuples(dim: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for k in 0..=dim {
        let m = dim - k;
        if k < m {
            out.extend(combinations(dim, k));
        } else if k > m {
            for s in combinations(dim, m) {
                out.push(oriented_complement(&s, dim));
            }
        } else {
            let firsts: Vec<Vec<usize>> = combinations(dim, k)
                .into_iter()
                .filter(|c| c.contains(&0))
                .collect();
            let seconds: Vec<Vec<usize>> = firsts
                .iter()
                .rev()
                .map(|s| oriented_complement(s, dim))
                .collect();
            out.extend(firsts);
            out.extend(seconds);
        }
    }
    out
}

fn blade_name(tuple: &[usize], dim: usize, position_in_grade: usize) -> String {
    let k = tuple.len();
    if k == 0 {
        "1".to_string()
    } else if k == dim {
        "I".to_string()
    } else if k + 1 == dim && (dim == 3 || dim == 4) {
        format!("E{position_in_grade}")
    } else {
        let digits: String = tuple.iter().map(|i| i.to_string()).collect();
        format!("e{digits}")
    }
}

/// Sign from reordering `e_a e_b` (ascending bit sets) into ascending order.
fn reorder_sign(a: usize, b: usize) -> f64 {
    let mut a = a >> 1;
    let mut swaps = 0;
    while a != 0 {
        swaps += (a & b).count_ones();
        a >>= 1;
    }
    if swaps % 2 == 0 {
        1.0
    } else {
        -1.0
    }
}

impl Algebra {
    fn build(sig: Signature) -> Algebra {
        let dim = sig.dim();
        let size = 1usize << dim;
        let tuples = canonical_tuples(dim);
        let mut grade_offsets = vec![0; dim + 2];
        for k in 0..=dim {
            grade_offsets[k + 1] = grade_offsets[k] + binomial(dim, k);
        }
        let mut blades = Vec::with_capacity(size);
        let mut index_of_mask = vec![0; size];
        for (idx, t) in tuples.iter().enumerate() {
            let k = t.len();
            let mask = t.iter().fold(0, |m, &i| m | (1 << i));
            let sign = if is_odd_permutation(t) { -1.0 } else { 1.0 };
            index_of_mask[mask] = idx;
            blades.push(Blade {
                indices: t.clone(),
                mask,
                sign,
                grade: k,
                name: blade_name(t, dim, idx - grade_offsets[k]),
            });
        }

        let mut product = Vec::with_capacity(size * size);
        for a in &blades {
            for b in &blades {
                let common = a.mask & b.mask;
                let mut metric = 1.0;
                for i in 0..dim {
                    if common & (1 << i) != 0 {
                        metric *= sig.square(i);
                    }
                }
                let index = index_of_mask[a.mask ^ b.mask];
                let sign = if metric == 0.0 {
                    0.0
                } else {
                    a.sign * b.sign * reorder_sign(a.mask, b.mask) * metric * blades[index].sign
                };
                product.push(Cell { sign, index });
            }
        }

        let mut dual = vec![0; size];
        for (idx, blade) in blades.iter().enumerate() {
            let k = blade.grade;
            let m = dim - k;
            let pos = idx - grade_offsets[k];
            dual[idx] = if k == m {
                grade_offsets[k] + binomial(dim, k) - 1 - pos
            } else {
                grade_offsets[m] + pos
            };
        }

        Algebra {
            sig,
            blades,
            index_of_mask,
            grade_offsets,
            product,
            dual,
        }
    }

    /// Shared algebra for a signature, built on first use.
    pub fn get(sig: Signature) -> &'static Algebra {
        static CACHE: OnceLock<Mutex<Vec<&'static Algebra>>> = OnceLock::new();
        let cache = CACHE.get_or_init(|| Mutex::new(Vec::new()));
        let mut guard = cache.lock().unwrap_or_else(|e| e.into_inner());
        if let Some(alg) = guard.iter().find(|a| a.sig == sig) {
            return alg;
        }
        assert!(
            (Signature::MIN_DIM..=Signature::MAX_DIM).contains(&sig.dim()),
            "unsupported signature {sig}"
        );
        let alg: &'static Algebra = Box::leak(Box::new(Algebra::build(sig)));
        guard.push(alg);
        alg
    }

    /// Cl(2,0,1).
    pub fn pga2() -> &'static Algebra {
        static ALG: OnceLock<&'static Algebra> = OnceLock::new();
        ALG.get_or_init(|| Algebra::get(Signature::PGA2))
    }

    /// Cl(3,0,1).
    pub fn pga3() -> &'static Algebra {
        static ALG: OnceLock<&'static Algebra> = OnceLock::new();
        ALG.get_or_init(|| Algebra::get(Signature::PGA3))
    }

    pub fn signature(&self) -> Signature {
        self.sig
    }

    pub fn dim(&self) -> usize {
        self.sig.dim()
    }

    /// Number of basis blades, `2^dim`.
    pub fn size(&self) -> usize {
        self.blades.len()
    }

    pub fn blades(&self) -> &[Blade] {
        &self.blades
    }

    pub fn blade(&self, index: usize) -> &Blade {
        &self.blades[index]
    }

    /// Canonical index of a blade name such as `"e31"` or `"E2"`.
    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.blades.iter().position(|b| b.name == name)
    }

    /// Canonical index of the blade with the given bit set.
    pub fn index_of_mask(&self, mask: usize) -> usize {
        self.index_of_mask[mask]
    }

    /// Index range of grade `k`.
    pub fn grade_range(&self, k: usize) -> std::ops::Range<usize> {
        self.grade_offsets[k]..self.grade_offsets[k + 1]
    }

    pub fn grade_of(&self, index: usize) -> usize {
        self.blades[index].grade
    }

    /// `blade_i * blade_j`.
    pub fn cell(&self, i: usize, j: usize) -> Cell {
        self.product[i * self.size() + j]
    }

    /// Index of `J(blade_i)`; `J` carries no sign in the canonical basis.
    pub fn dual_index(&self, i: usize) -> usize {
        self.dual[i]
    }

    /// The full Cayley table, rows are left factors.
    pub fn cayley_table(&self) -> Vec<Vec<Cell>> {
        (0..self.size())
            .map(|i| (0..self.size()).map(|j| self.cell(i, j)).collect())
            .collect()
    }

    /// Table cell rendered as `0`, `name` or `-name`.
    pub fn cell_text(&self, cell: Cell) -> String {
        if cell.sign == 0.0 {
            "0".to_string()
        } else if cell.sign > 0.0 {
            self.blades[cell.index].name.clone()
        } else {
            format!("-{}", self.blades[cell.index].name)
        }
    }
}

//! Generic linear codes over GF(p^m): generator and parity matrices by
//! exact elimination, duals, subfield subcodes by base-field expansion,
//! quasi-cyclicity, Schur products and exhaustive minimum distance at
//! desk scale.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::field::{ExtField, FieldElement};
use crate::matrix::Matrix;

/// Cap on q^k for exhaustive codeword sweeps.
pub const EXHAUSTIVE_CAP: u128 = 1 << 22;

#[derive(Debug, Clone)]
pub struct LinearCode {
    field: ExtField,
    n: usize,
    /// Reduced echelon basis of the code, k rows.
    generator: Matrix,
    pub provenance: String,
}

impl LinearCode {
    /// Builds from spanning rows; the stored generator is the reduced
    /// row-echelon basis.
    pub fn from_rows(field: &ExtField, rows: Vec<Vec<FieldElement>>, n: usize) -> Result<Self> {
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::RaggedRows);
        }
        let generator = if rows.is_empty() {
            Matrix::new(Vec::new())?
        } else {
            Matrix::new(rows)?.row_basis(field)
        };
        Ok(LinearCode {
            field: field.clone(),
            n,
            generator,
            provenance: String::new(),
        })
    }

    pub fn field(&self) -> &ExtField {
        &self.field
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn dim(&self) -> usize {
        self.generator.nrows()
    }

    pub fn generator(&self) -> &Matrix {
        &self.generator
    }

    pub fn contains(&self, word: &[FieldElement]) -> bool {
        word.len() == self.n && self.generator.in_rowspace(&self.field, word)
    }

    pub fn same_code(&self, rhs: &LinearCode) -> bool {
        self.n == rhs.n && self.generator.same_rowspace(&self.field, &rhs.generator)
    }

    /// The dual code: kernel of the generator. G·Hᵀ = 0 and dims pair up
    /// to n.
    pub fn dual(&self) -> LinearCode {
        let f = &self.field;
        let h = if self.dim() == 0 {
            Matrix::identity(f, self.n)
        } else {
            self.generator.kernel(f)
        };
        LinearCode {
            field: f.clone(),
            n: self.n,
            generator: h.row_basis(f),
            provenance: String::new(),
        }
    }

    /// Parity-check matrix (generator of the dual).
    pub fn parity_check(&self) -> Matrix {
        self.dual().generator
    }

    /// All codewords (q^k of them); capped.
    pub fn codewords(&self) -> Result<Vec<Vec<FieldElement>>> {
        let f = &self.field;
        let k = self.dim();
        let mut count = 1u128;
        for _ in 0..k {
            count = count.saturating_mul(f.order());
            if count > EXHAUSTIVE_CAP {
                return Err(Error::CodeTooLarge);
            }
        }
        let mut out = Vec::with_capacity(count as usize);
        let mut msg = vec![f.zero(); k];
        let mut cw = vec![f.zero(); self.n];
        self.enumerate_rec(0, &mut msg, &mut cw, &mut |w: &[FieldElement]| {
            out.push(w.to_vec());
        });
        Ok(out)
    }

    fn enumerate_rec(
        &self,
        depth: usize,
        msg: &mut [FieldElement],
        cw: &mut [FieldElement],
        visit: &mut impl FnMut(&[FieldElement]),
    ) {
        let f = &self.field;
        if depth == self.dim() {
            visit(cw);
            return;
        }
        let mut prev = f.zero();
        for v in f.iter() {
            let delta = f.sub(&v, &prev);
            if !delta.is_zero() {
                for (c, g) in cw.iter_mut().zip(&self.generator.rows[depth]) {
                    *c = f.add(c, &f.mul(&delta, g));
                }
            }
            msg[depth] = v.clone();
            self.enumerate_rec(depth + 1, msg, cw, visit);
            prev = v;
        }
        // restore the zero digit for the caller
        for (c, g) in cw.iter_mut().zip(&self.generator.rows[depth]) {
            *c = f.sub(c, &f.mul(&prev, g));
        }
    }

    /// Exact minimum Hamming weight over all nonzero codewords.
    pub fn min_distance_exhaustive(&self) -> Result<usize> {
        let f = &self.field;
        let k = self.dim();
        if k == 0 {
            return Ok(0);
        }
        let mut count = 1u128;
        for _ in 0..k {
            count = count.saturating_mul(f.order());
            if count > EXHAUSTIVE_CAP {
                return Err(Error::CodeTooLarge);
            }
        }
        let mut best = self.n + 1;
        let mut msg = vec![f.zero(); k];
        let mut cw = vec![f.zero(); self.n];
        self.enumerate_rec(0, &mut msg, &mut cw, &mut |w: &[FieldElement]| {
            let wt = w.iter().filter(|c| !c.is_zero()).count();
            if wt > 0 && wt < best {
                best = wt;
            }
        });
        Ok(best)
    }

    /// Right rotation of each length-ℓ block by one position.
    pub fn block_shift(word: &[FieldElement], ell: usize) -> Vec<FieldElement> {
        let mut out = Vec::with_capacity(word.len());
        for chunk in word.chunks(ell) {
            out.push(chunk[chunk.len() - 1].clone());
            out.extend_from_slice(&chunk[..chunk.len() - 1]);
        }
        out
    }

    /// True iff the code is closed under the block shift; by linearity it
    /// suffices to test the generator rows.
    pub fn is_quasi_cyclic(&self, ell: usize) -> Result<bool> {
        if ell == 0 || self.n % ell != 0 {
            return Err(Error::BadBlockLength { ell, n: self.n });
        }
        Ok(self
            .generator
            .rows
            .iter()
            .all(|r| self.contains(&Self::block_shift(r, ell))))
    }

    /// A violating generator-row shift, when one exists.
    pub fn quasi_cyclic_violation(&self, ell: usize) -> Result<Option<Vec<FieldElement>>> {
        if ell == 0 || self.n % ell != 0 {
            return Err(Error::BadBlockLength { ell, n: self.n });
        }
        for r in &self.generator.rows {
            let s = Self::block_shift(r, ell);
            if !self.contains(&s) {
                return Ok(Some(s));
            }
        }
        Ok(None)
    }

    /// Generator rearranged into ℓ-block-circulant strips under the given
    /// column order (a permutation mapping new position -> old position).
    /// Each returned strip holds the ℓ block-shifts of a seed row, so all
    /// ℓ×ℓ tiles are circulant; strips are added until the row space is
    /// covered. Returns None (a certified failure) when some shift leaves
    /// the permuted code.
    pub fn block_circulant_form(
        &self,
        ell: usize,
        column_order: &[usize],
    ) -> Result<Option<Matrix>> {
        if ell == 0 || self.n % ell != 0 {
            return Err(Error::BadBlockLength { ell, n: self.n });
        }
        let f = &self.field;
        let mut seen = vec![false; self.n];
        if column_order.len() != self.n {
            return Err(Error::BadBlockLength { ell, n: column_order.len() });
        }
        for &c in column_order {
            if c >= self.n || seen[c] {
                return Err(Error::BadBlockLength { ell, n: self.n });
            }
            seen[c] = true;
        }
        let permuted: Vec<Vec<FieldElement>> = self
            .generator
            .rows
            .iter()
            .map(|r| column_order.iter().map(|&c| r[c].clone()).collect())
            .collect();
        let pcode = LinearCode::from_rows(f, permuted.clone(), self.n)?;
        let target = pcode.dim();
        let mut strips: Vec<Vec<FieldElement>> = Vec::new();
        let mut span: Vec<Vec<FieldElement>> = Vec::new();
        for seed in &permuted {
            if !span.is_empty()
                && Matrix::new(span.clone())?.in_rowspace(f, seed)
            {
                continue;
            }
            let mut shifts = Vec::with_capacity(ell);
            let mut cur = seed.clone();
            for _ in 0..ell {
                if !pcode.contains(&cur) {
                    return Ok(None);
                }
                shifts.push(cur.clone());
                cur = Self::block_shift(&cur, ell);
            }
            strips.extend(shifts.iter().cloned());
            span.extend(shifts);
            if Matrix::new(span.clone())?.rank(f) == target {
                break;
            }
        }
        let m = Matrix::new(strips)?;
        debug_assert!(m.same_rowspace(f, pcode.generator()));
        Ok(Some(m))
    }

    /// Schur square: the span of all componentwise products of generator
    /// row pairs.
    pub fn schur_square(&self) -> Result<LinearCode> {
        let f = &self.field;
        let k = self.dim();
        let mut rows = Vec::with_capacity(k * (k + 1) / 2);
        for i in 0..k {
            for j in i..k {
                let prod: Vec<FieldElement> = self.generator.rows[i]
                    .iter()
                    .zip(&self.generator.rows[j])
                    .map(|(a, b)| f.mul(a, b))
                    .collect();
                rows.push(prod);
            }
        }
        LinearCode::from_rows(f, rows, self.n)
    }

    /// Subfield subcode C ∩ GF(p^d)^n, computed by expanding each parity
    /// row into m/d rows over GF(p^d) and eliminating.
    pub fn subfield_subcode(&self, d: usize) -> Result<SubfieldSubcode> {
        let f = &self.field;
        if d == 0 || f.m() % d != 0 {
            return Err(Error::InvalidSubfieldDegree { d, m: f.m() });
        }
        let expansion = SubfieldExpansion::new(f, d)?;
        let parity_big = self.parity_check();
        let mut expanded: Vec<Vec<FieldElement>> = Vec::new();
        let blocks = f.m() / d;
        for row in &parity_big.rows {
            let per_entry: Vec<Vec<FieldElement>> =
                row.iter().map(|h| expansion.decompose(h)).collect();
            for j in 0..blocks {
                expanded.push(per_entry.iter().map(|cs| cs[j].clone()).collect());
            }
        }
        let small = &expansion.small;
        let parity = if expanded.is_empty() {
            Matrix::new(Vec::new())?
        } else {
            Matrix::new(expanded)?.row_basis(small)
        };
        let gen = if parity.nrows() == 0 {
            Matrix::identity(small, self.n)
        } else {
            parity.kernel(small).row_basis(small)
        };
        let code = LinearCode {
            field: small.clone(),
            n: self.n,
            generator: gen,
            provenance: String::new(),
        };
        Ok(SubfieldSubcode { expansion, parity, code })
    }
}

/// The subfield GF(p^d) ⊂ GF(p^m) with a fixed embedding and a fixed
/// GF(p^d)-basis of GF(p^m), all chosen deterministically.
pub struct SubfieldExpansion {
    pub big: ExtField,
    pub small: ExtField,
    /// Image of the small-field generator in the big field.
    pub embedded_gen: FieldElement,
    /// GF(p^d)-basis of the big field (big-field elements).
    pub basis: Vec<FieldElement>,
    /// Inverse of the p-ary change-of-basis matrix: columns enumerate
    /// φ(small power t)·basis[j].
    inv: Matrix,
    prime: ExtField,
}

impl SubfieldExpansion {
    pub fn new(big: &ExtField, d: usize) -> Result<Self> {
        let p = big.p();
        let m = big.m();
        if d == 0 || m % d != 0 {
            return Err(Error::InvalidSubfieldDegree { d, m });
        }
        let small = ExtField::new(p, d, None)?;
        // embed: the first root of the small modulus in the big field
        let modulus = small.modulus().to_vec();
        let embedded_gen = big
            .iter()
            .find(|g| {
                let mut acc = big.zero();
                for c in modulus.iter().rev() {
                    acc = big.mul(&acc, g);
                    acc = big.add(&acc, &big.from_int(*c as i64));
                }
                acc.is_zero()
            })
            .expect("subfield exists for every d dividing m");
        let embed = |a: &FieldElement| -> FieldElement {
            let mut acc = big.zero();
            for c in a.coeffs.iter().rev() {
                acc = big.mul(&acc, &embedded_gen);
                acc = big.add(&acc, &big.from_int(*c as i64));
            }
            acc
        };
        // greedy GF(p^d)-basis of the big field from the power basis:
        // independence tracked over GF(p) via products with the small
        // power basis
        let prime = ExtField::new(p, 1, None)?;
        let small_powers: Vec<FieldElement> = (0..d)
            .map(|t| {
                let mut a = small.zero();
                a.coeffs[t] = 1;
                embed(&a)
            })
            .collect();
        let to_prime_vec = |a: &FieldElement| -> Vec<FieldElement> {
            a.coeffs
                .iter()
                .map(|&c| prime.from_int(c as i64))
                .collect()
        };
        let mut basis: Vec<FieldElement> = Vec::new();
        let mut span_rows: Vec<Vec<FieldElement>> = Vec::new();
        for w in 0..m {
            if basis.len() == m / d {
                break;
            }
            let mut cand = big.zero();
            cand.coeffs[w] = 1;
            let mut trial = span_rows.clone();
            for sp in &small_powers {
                trial.push(to_prime_vec(&big.mul(sp, &cand)));
            }
            let rank_new = Matrix::new(trial.clone())?.rank(&prime);
            if rank_new == span_rows.len() + d {
                basis.push(cand);
                span_rows = trial;
            }
        }
        debug_assert_eq!(basis.len(), m / d);
        // change-of-basis matrix: column (j*d + t) = φ(small^t)·basis[j]
        let mut cols: Vec<Vec<FieldElement>> = Vec::new();
        for bj in &basis {
            for sp in &small_powers {
                cols.push(to_prime_vec(&big.mul(sp, bj)));
            }
        }
        let mat = Matrix::new(cols)?.transpose(&prime);
        let inv = mat.inverse(&prime).expect("basis matrix invertible");
        Ok(SubfieldExpansion {
            big: big.clone(),
            small,
            embedded_gen,
            basis,
            inv,
            prime,
        })
    }

    /// Embeds a small-field element into the big field.
    pub fn embed(&self, a: &FieldElement) -> FieldElement {
        let mut acc = self.big.zero();
        for c in a.coeffs.iter().rev() {
            acc = self.big.mul(&acc, &self.embedded_gen);
            acc = self.big.add(&acc, &self.big.from_int(*c as i64));
        }
        acc
    }

    /// Coordinates of a big-field element over the GF(p^d)-basis:
    /// h = Σ_j out[j]·basis[j].
    pub fn decompose(&self, h: &FieldElement) -> Vec<FieldElement> {
        let rhs: Vec<FieldElement> = h
            .coeffs
            .iter()
            .map(|&c| self.prime.from_int(c as i64))
            .collect();
        let rhs_m = Matrix::new(vec![rhs]).unwrap().transpose(&self.prime);
        let sol = self.inv.mul(&self.prime, &rhs_m);
        let d = self.small.m();
        (0..self.basis.len())
            .map(|j| {
                let coeffs: Vec<u64> =
                    (0..d).map(|t| sol.rows[j * d + t][0].coeffs[0]).collect();
                self.small.elem(&coeffs).unwrap()
            })
            .collect()
    }
}

pub struct SubfieldSubcode {
    pub expansion: SubfieldExpansion,
    /// Eliminated parity-check matrix over GF(p^d), zero rows removed.
    pub parity: Matrix,
    pub code: LinearCode,
}

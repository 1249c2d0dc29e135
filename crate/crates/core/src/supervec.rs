//! Finite-dimensional super vector spaces over the rationals.
//!
//! A space of super-dimension `m|n` has basis vectors `0..m` (even) followed
//! by `m..m+n` (odd). Morphisms preserve the grading and are stored as two
//! blocks, one per parity.
//!
//! The basis of a tensor product `a ⊗ b` is the list of pairs `(i, j)` in
//! lexicographic order, stably partitioned so that even pairs come first. A
//! pair is odd when exactly one of its factors is odd. Tensor products of
//! maps carry no signs; the Koszul sign lives in [`braiding`] only.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Add;
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::{Matrix, Q};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct SuperDim {
    pub even: usize,
    pub odd: usize,
}

impl SuperDim {
    pub const ZERO: SuperDim = SuperDim { even: 0, odd: 0 };
    pub const UNIT: SuperDim = SuperDim { even: 1, odd: 0 };

    pub const fn new(even: usize, odd: usize) -> Self {
        SuperDim { even, odd }
    }

    pub fn total(self) -> usize {
        self.even + self.odd
    }

    pub fn is_zero(self) -> bool {
        self.even == 0 && self.odd == 0
    }

    /// `(a|b) ⊗ (c|d) = (ac + bd | ad + bc)`.
    pub fn tensor(self, other: SuperDim) -> SuperDim {
        SuperDim {
            even: self.even * other.even + self.odd * other.odd,
            odd: self.even * other.odd + self.odd * other.even,
        }
    }

    pub fn scale(self, k: usize) -> SuperDim {
        SuperDim { even: self.even * k, odd: self.odd * k }
    }

    /// `m - n`.
    pub fn euler(self) -> i64 {
        self.even as i64 - self.odd as i64
    }
}

impl Add for SuperDim {
    type Output = SuperDim;

    fn add(self, rhs: SuperDim) -> SuperDim {
        SuperDim { even: self.even + rhs.even, odd: self.odd + rhs.odd }
    }
}

impl std::iter::Sum for SuperDim {
    fn sum<I: Iterator<Item = SuperDim>>(iter: I) -> SuperDim {
        iter.fold(SuperDim::ZERO, Add::add)
    }
}

/// Componentwise order: `m|n <= m'|n'` iff `m <= m'` and `n <= n'`.
impl PartialOrd for SuperDim {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        match (self.even.cmp(&other.even), self.odd.cmp(&other.odd)) {
            (a, b) if a == b => Some(a),
            (Ordering::Equal, b) => Some(b),
            (a, Ordering::Equal) => Some(a),
            _ => None,
        }
    }
}

impl fmt::Display for SuperDim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|{}", self.even, self.odd)
    }
}

impl fmt::Debug for SuperDim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for SuperDim {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (m, n) = s
            .trim()
            .split_once('|')
            .ok_or_else(|| Error::Parse(format!("super-dimension {s:?} is not of the form m|n")))?;
        let parse = |x: &str| {
            x.trim()
                .parse::<usize>()
                .map_err(|_| Error::Parse(format!("super-dimension {s:?} has a non-numeric part {x:?}")))
        };
        Ok(SuperDim::new(parse(m)?, parse(n)?))
    }
}

/// A graded space, determined up to its fixed basis by its super-dimension.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct SuperSpace {
    dim: SuperDim,
}

impl SuperSpace {
    pub const fn new(even: usize, odd: usize) -> Self {
        SuperSpace { dim: SuperDim::new(even, odd) }
    }

    pub const fn of_dim(dim: SuperDim) -> Self {
        SuperSpace { dim }
    }

    /// The unit object `1|0`.
    pub const fn unit() -> Self {
        SuperSpace::new(1, 0)
    }

    pub const fn zero() -> Self {
        SuperSpace::new(0, 0)
    }

    pub fn dim(&self) -> SuperDim {
        self.dim
    }

    pub fn even(&self) -> usize {
        self.dim.even
    }

    pub fn odd(&self) -> usize {
        self.dim.odd
    }

    pub fn total(&self) -> usize {
        self.dim.total()
    }

    pub fn is_zero(&self) -> bool {
        self.dim.is_zero()
    }

    /// Parity of basis vector `i`: `false` for even, `true` for odd.
    pub fn parity(&self, i: usize) -> bool {
        i >= self.dim.even
    }

    pub fn direct_sum(&self, other: &SuperSpace) -> SuperSpace {
        SuperSpace { dim: self.dim + other.dim }
    }

    pub fn tensor(&self, other: &SuperSpace) -> SuperSpace {
        SuperSpace { dim: self.dim.tensor(other.dim) }
    }

    /// The dual space; parities are preserved.
    pub fn dual(&self) -> SuperSpace {
        *self
    }

    /// Split a global basis index into `(parity, index within that parity block)`.
    pub fn block_index(&self, i: usize) -> (bool, usize) {
        if i < self.dim.even {
            (false, i)
        } else {
            (true, i - self.dim.even)
        }
    }

    pub fn global_index(&self, odd: bool, k: usize) -> usize {
        if odd {
            self.dim.even + k
        } else {
            k
        }
    }
}

impl fmt::Debug for SuperSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SuperSpace({})", self.dim)
    }
}

/// Basis of `a ⊗ b` as pairs of factor indices, in basis order.
pub fn tensor_basis(a: &SuperSpace, b: &SuperSpace) -> Vec<(usize, usize)> {
    let pairs: Vec<(usize, usize)> = (0..a.total()).flat_map(|i| (0..b.total()).map(move |j| (i, j))).collect();
    let (even, odd): (Vec<_>, Vec<_>) = pairs.into_iter().partition(|&(i, j)| a.parity(i) == b.parity(j));
    even.into_iter().chain(odd).collect()
}

/// Inverse of [`tensor_basis`]: `table[i * b.total() + j]` is the position of `(i, j)`.
fn tensor_positions(a: &SuperSpace, b: &SuperSpace) -> Vec<usize> {
    let mut table = vec![0; a.total() * b.total()];
    for (pos, (i, j)) in tensor_basis(a, b).into_iter().enumerate() {
        table[i * b.total() + j] = pos;
    }
    table
}

/// A grading-preserving linear map.
#[derive(Clone, PartialEq, Eq)]
pub struct SuperMap {
    domain: SuperSpace,
    codomain: SuperSpace,
    even_block: Matrix,
    odd_block: Matrix,
}

impl SuperMap {
    pub fn new(domain: SuperSpace, codomain: SuperSpace, even_block: Matrix, odd_block: Matrix) -> Result<Self> {
        if (even_block.rows(), even_block.cols()) != (codomain.even(), domain.even()) {
            return Err(Error::Shape(format!(
                "even block is {}x{}, expected {}x{}",
                even_block.rows(),
                even_block.cols(),
                codomain.even(),
                domain.even()
            )));
        }
        if (odd_block.rows(), odd_block.cols()) != (codomain.odd(), domain.odd()) {
            return Err(Error::Shape(format!(
                "odd block is {}x{}, expected {}x{}",
                odd_block.rows(),
                odd_block.cols(),
                codomain.odd(),
                domain.odd()
            )));
        }
        Ok(SuperMap { domain, codomain, even_block, odd_block })
    }

    pub fn zero(domain: SuperSpace, codomain: SuperSpace) -> Self {
        SuperMap {
            domain,
            codomain,
            even_block: Matrix::zeros(codomain.even(), domain.even()),
            odd_block: Matrix::zeros(codomain.odd(), domain.odd()),
        }
    }

    pub fn identity(space: SuperSpace) -> Self {
        SuperMap {
            domain: space,
            codomain: space,
            even_block: Matrix::identity(space.even()),
            odd_block: Matrix::identity(space.odd()),
        }
    }

    pub fn scalar(space: SuperSpace, s: &Q) -> Self {
        let id = SuperMap::identity(space);
        SuperMap { even_block: id.even_block.scale(s), odd_block: id.odd_block.scale(s), ..id }
    }

    pub fn domain(&self) -> SuperSpace {
        self.domain
    }

    pub fn codomain(&self) -> SuperSpace {
        self.codomain
    }

    pub fn even_block(&self) -> &Matrix {
        &self.even_block
    }

    pub fn odd_block(&self) -> &Matrix {
        &self.odd_block
    }

    pub fn block(&self, odd: bool) -> &Matrix {
        if odd {
            &self.odd_block
        } else {
            &self.even_block
        }
    }

    pub fn is_zero(&self) -> bool {
        self.even_block.is_zero() && self.odd_block.is_zero()
    }

    /// `self ∘ first`.
    pub fn compose(&self, first: &SuperMap) -> Result<SuperMap> {
        if first.codomain != self.domain {
            return Err(Error::Shape(format!(
                "cannot compose: {} -> {} after {} -> {}",
                self.domain.dim(),
                self.codomain.dim(),
                first.domain.dim(),
                first.codomain.dim()
            )));
        }
        Ok(SuperMap {
            domain: first.domain,
            codomain: self.codomain,
            even_block: self.even_block.mul(&first.even_block),
            odd_block: self.odd_block.mul(&first.odd_block),
        })
    }

    pub fn add(&self, other: &SuperMap) -> Result<SuperMap> {
        if (self.domain, self.codomain) != (other.domain, other.codomain) {
            return Err(Error::Shape("cannot add maps between different spaces".into()));
        }
        Ok(SuperMap {
            domain: self.domain,
            codomain: self.codomain,
            even_block: self.even_block.add(&other.even_block),
            odd_block: self.odd_block.add(&other.odd_block),
        })
    }

    pub fn scale(&self, s: &Q) -> SuperMap {
        SuperMap {
            domain: self.domain,
            codomain: self.codomain,
            even_block: self.even_block.scale(s),
            odd_block: self.odd_block.scale(s),
        }
    }

    /// Rank per parity.
    pub fn rank(&self) -> SuperDim {
        SuperDim::new(self.even_block.rank(), self.odd_block.rank())
    }

    /// The whole map as one matrix in the global bases, cross blocks zero.
    pub fn to_full(&self) -> Matrix {
        self.even_block.block_diag(&self.odd_block)
    }

    /// Inverse of [`SuperMap::to_full`]; fails if a cross block is nonzero.
    pub fn from_full(domain: SuperSpace, codomain: SuperSpace, full: &Matrix) -> Result<SuperMap> {
        if (full.rows(), full.cols()) != (codomain.total(), domain.total()) {
            return Err(Error::Shape("full matrix has the wrong shape".into()));
        }
        for i in 0..full.rows() {
            for j in 0..full.cols() {
                if codomain.parity(i) != domain.parity(j) && !full[(i, j)].is_zero() {
                    return Err(Error::Shape(format!("entry ({i}, {j}) mixes parities")));
                }
            }
        }
        let even_rows: Vec<usize> = (0..codomain.even()).collect();
        let odd_rows: Vec<usize> = (codomain.even()..codomain.total()).collect();
        let even_cols: Vec<usize> = (0..domain.even()).collect();
        let odd_cols: Vec<usize> = (domain.even()..domain.total()).collect();
        SuperMap::new(
            domain,
            codomain,
            full.select_rows(&even_rows).select_columns(&even_cols),
            full.select_rows(&odd_rows).select_columns(&odd_cols),
        )
    }

    pub fn direct_sum(&self, other: &SuperMap) -> SuperMap {
        SuperMap {
            domain: self.domain.direct_sum(&other.domain),
            codomain: self.codomain.direct_sum(&other.codomain),
            even_block: self.even_block.block_diag(&other.even_block),
            odd_block: self.odd_block.block_diag(&other.odd_block),
        }
    }

    /// `self ⊗ other`, Kronecker-style with no signs.
    pub fn tensor(&self, other: &SuperMap) -> SuperMap {
        let (m1, n1, m2, n2) = (self.domain, self.codomain, other.domain, other.codomain);
        let dom = m1.tensor(&m2);
        let cod = n1.tensor(&n2);
        let f = self.to_full();
        let g = other.to_full();
        let dom_pairs = tensor_basis(&m1, &m2);
        let cod_pairs = tensor_basis(&n1, &n2);
        let mut full = Matrix::zeros(cod.total(), dom.total());
        for (c, &(i, j)) in dom_pairs.iter().enumerate() {
            if f.column(i).iter().all(Zero::is_zero) || g.column(j).iter().all(Zero::is_zero) {
                continue;
            }
            for (r, &(k, l)) in cod_pairs.iter().enumerate() {
                let a = &f[(k, i)];
                let b = &g[(l, j)];
                if !a.is_zero() && !b.is_zero() {
                    full[(r, c)] = a * b;
                }
            }
        }
        SuperMap::from_full(dom, cod, &full).expect("tensor of graded maps is graded")
    }

    /// The transpose `N^∨ -> M^∨`.
    pub fn dual(&self) -> SuperMap {
        SuperMap {
            domain: self.codomain.dual(),
            codomain: self.domain.dual(),
            even_block: self.even_block.transpose(),
            odd_block: self.odd_block.transpose(),
        }
    }

    /// Trace of the even block minus trace of the odd block.
    pub fn supertrace(&self) -> Result<Q> {
        if self.domain != self.codomain {
            return Err(Error::Shape(format!(
                "supertrace needs an endomorphism, got {} -> {}",
                self.domain.dim(),
                self.codomain.dim()
            )));
        }
        Ok(self.even_block.trace() - self.odd_block.trace())
    }

    /// Full column rank in both parities.
    pub fn is_mono(&self) -> bool {
        self.rank() == self.domain.dim()
    }

    /// Full row rank in both parities.
    pub fn is_epi(&self) -> bool {
        self.rank() == self.codomain.dim()
    }

    pub fn is_iso(&self) -> bool {
        self.is_mono() && self.is_epi()
    }

    /// Inclusion `ker f -> M`.
    pub fn kernel(&self) -> SuperMap {
        let even = self.even_block.kernel();
        let odd = self.odd_block.kernel();
        let k = SuperSpace::new(even.cols(), odd.cols());
        SuperMap { domain: k, codomain: self.domain, even_block: even, odd_block: odd }
    }

    /// Quotient `N -> coker f`.
    pub fn cokernel(&self) -> SuperMap {
        let even = self.even_block.left_kernel();
        let odd = self.odd_block.left_kernel();
        let c = SuperSpace::new(even.rows(), odd.rows());
        SuperMap { domain: self.codomain, codomain: c, even_block: even, odd_block: odd }
    }

    /// Inclusion `im f -> N`, spanned by the pivot columns of `f`.
    pub fn image(&self) -> SuperMap {
        let even = self.even_block.column_space();
        let odd = self.odd_block.column_space();
        let im = SuperSpace::new(even.cols(), odd.cols());
        SuperMap { domain: im, codomain: self.codomain, even_block: even, odd_block: odd }
    }

    /// Factorization `f = mono ∘ epi` through the image; returns `(epi, mono)`.
    pub fn image_factorization(&self) -> (SuperMap, SuperMap) {
        let mono = self.image();
        let retract = left_inverse(&mono).expect("image inclusion is mono");
        let epi = retract.compose(self).expect("shapes agree");
        (epi, mono)
    }

    /// Bases adapted to `f`: see [`NormalForm`].
    pub fn normal_form(&self) -> NormalForm {
        let (src_even, tgt_even, r) = adapted_bases(&self.even_block);
        let (src_odd, tgt_odd, s) = adapted_bases(&self.odd_block);
        NormalForm {
            rank: SuperDim::new(r, s),
            source_basis: SuperMap::new(self.domain, self.domain, src_even, src_odd).expect("square"),
            target_basis: SuperMap::new(self.codomain, self.codomain, tgt_even, tgt_odd).expect("square"),
        }
    }
}

impl fmt::Debug for SuperMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "SuperMap({} -> {}, even {:?}, odd {:?})",
            self.domain.dim(),
            self.codomain.dim(),
            self.even_block,
            self.odd_block
        )
    }
}

/// Change of bases splitting `f` as an isomorphism plus a zero map.
///
/// `target_basis^{-1} ∘ f ∘ source_basis` is the standard map of rank
/// `rank`: it sends the first `rank.even` even and first `rank.odd` odd basis
/// vectors to the same-numbered basis vectors and kills the rest.
#[derive(Clone, Debug)]
pub struct NormalForm {
    pub rank: SuperDim,
    pub source_basis: SuperMap,
    pub target_basis: SuperMap,
}

impl NormalForm {
    /// The standard rank-`rank` map `M -> N`.
    pub fn standard_map(domain: SuperSpace, codomain: SuperSpace, rank: SuperDim) -> SuperMap {
        let block = |rows: usize, cols: usize, r: usize| {
            let mut m = Matrix::zeros(rows, cols);
            for i in 0..r {
                m[(i, i)] = Q::one();
            }
            m
        };
        SuperMap::new(
            domain,
            codomain,
            block(codomain.even(), domain.even(), rank.even),
            block(codomain.odd(), domain.odd(), rank.odd),
        )
        .expect("shapes by construction")
    }

    /// Checks the defining identity exactly.
    pub fn verify(&self, f: &SuperMap) -> Result<bool> {
        let Some(target_inv) = inverse(&self.target_basis) else {
            return Ok(false);
        };
        if !self.source_basis.is_iso() {
            return Ok(false);
        }
        let reduced = target_inv.compose(f)?.compose(&self.source_basis)?;
        Ok(reduced == NormalForm::standard_map(f.domain(), f.codomain(), self.rank))
    }
}

/// For a matrix `A`, returns `(P, Q, r)` with `Q^{-1} A P = [I_r 0; 0 0]`.
fn adapted_bases(a: &Matrix) -> (Matrix, Matrix, usize) {
    let pivots = a.echelon().pivots;
    let r = pivots.len();
    let mut src = Matrix::zeros(a.cols(), r);
    for (k, &p) in pivots.iter().enumerate() {
        src[(p, k)] = Q::one();
    }
    let src = src.hstack(&a.kernel());
    let tgt = a.select_columns(&pivots).extend_to_basis();
    (src, tgt, r)
}

pub fn inverse(f: &SuperMap) -> Option<SuperMap> {
    Some(SuperMap {
        domain: f.codomain,
        codomain: f.domain,
        even_block: f.even_block.inverse()?,
        odd_block: f.odd_block.inverse()?,
    })
}

/// A retraction `g` with `g ∘ f = id`, when `f` is mono.
pub fn left_inverse(f: &SuperMap) -> Option<SuperMap> {
    if !f.is_mono() {
        return None;
    }
    let nf = f.normal_form();
    let target_inv = inverse(&nf.target_basis)?;
    let std = NormalForm::standard_map(f.domain(), f.codomain(), nf.rank);
    // std^T ∘ std = id when f is mono.
    nf.source_basis.compose(&std.dual()).ok()?.compose(&target_inv).ok()
}

/// A section `s` with `f ∘ s = id`, when `f` is epi.
pub fn right_inverse(f: &SuperMap) -> Option<SuperMap> {
    left_inverse(&f.dual()).map(|g| g.dual())
}

/// `a ⊗ b -> b ⊗ a`, sending `v ⊗ w` to `(-1)^{|v||w|} w ⊗ v`.
pub fn braiding(a: &SuperSpace, b: &SuperSpace) -> SuperMap {
    let dom = a.tensor(b);
    let cod = b.tensor(a);
    let target = tensor_positions(b, a);
    let mut full = Matrix::zeros(cod.total(), dom.total());
    for (c, (i, j)) in tensor_basis(a, b).into_iter().enumerate() {
        let sign = if a.parity(i) && b.parity(j) { -Q::one() } else { Q::one() };
        full[(target[j * a.total() + i], c)] = sign;
    }
    SuperMap::from_full(dom, cod, &full).expect("braiding is even")
}

/// `(a ⊗ b) ⊗ c -> a ⊗ (b ⊗ c)`.
pub fn associator(a: &SuperSpace, b: &SuperSpace, c: &SuperSpace) -> SuperMap {
    let ab = a.tensor(b);
    let bc = b.tensor(c);
    let dom = ab.tensor(c);
    let cod = a.tensor(&bc);
    let ab_pairs = tensor_basis(a, b);
    let bc_pos = tensor_positions(b, c);
    let cod_pos = tensor_positions(a, &bc);
    let mut full = Matrix::zeros(cod.total(), dom.total());
    for (col, (p, k)) in tensor_basis(&ab, c).into_iter().enumerate() {
        let (i, j) = ab_pairs[p];
        let jk = bc_pos[j * c.total() + k];
        full[(cod_pos[i * bc.total() + jk], col)] = Q::one();
    }
    SuperMap::from_full(dom, cod, &full).expect("associator is even")
}

/// `ev: a^∨ ⊗ a -> 1`, pairing dual basis vectors.
pub fn evaluation(a: &SuperSpace) -> SuperMap {
    let dom = a.dual().tensor(a);
    let mut full = Matrix::zeros(1, dom.total());
    for (c, (i, j)) in tensor_basis(&a.dual(), a).into_iter().enumerate() {
        if i == j {
            full[(0, c)] = Q::one();
        }
    }
    SuperMap::from_full(dom, SuperSpace::unit(), &full).expect("evaluation is even")
}

/// `coev: 1 -> a ⊗ a^∨`, the element `Σ e_i ⊗ e^i`.
pub fn coevaluation(a: &SuperSpace) -> SuperMap {
    let cod = a.tensor(&a.dual());
    let mut full = Matrix::zeros(cod.total(), 1);
    for (r, (i, j)) in tensor_basis(a, &a.dual()).into_iter().enumerate() {
        if i == j {
            full[(r, 0)] = Q::one();
        }
    }
    SuperMap::from_full(SuperSpace::unit(), cod, &full).expect("coevaluation is even")
}

/// Categorical trace `ev ∘ braiding ∘ (f ⊗ id) ∘ coev : 1 -> 1`.
pub fn categorical_trace(f: &SuperMap) -> Result<Q> {
    let a = f.domain();
    if f.codomain() != a {
        return Err(Error::Shape("categorical trace needs an endomorphism".into()));
    }
    let id_dual = SuperMap::identity(a.dual());
    let scalar =
        evaluation(&a).compose(&braiding(&a, &a.dual()))?.compose(&f.tensor(&id_dual))?.compose(&coevaluation(&a))?;
    Ok(scalar.even_block()[(0, 0)].clone())
}

/// The name `1 -> M^∨ ⊗ N` of `f: M -> N`:
/// `(id_{M^∨} ⊗ f) ∘ braiding(M, M^∨) ∘ coev_M`.
pub fn name(f: &SuperMap) -> SuperMap {
    let m = f.domain();
    SuperMap::identity(m.dual())
        .tensor(f)
        .compose(&braiding(&m, &m.dual()))
        .and_then(|g| g.compose(&coevaluation(&m)))
        .expect("shapes agree")
}

/// Inverse of [`name`]: recovers `f: M -> N` from its name.
pub fn unname(named: &SuperMap, m: SuperSpace, n: SuperSpace) -> Result<SuperMap> {
    if named.domain() != SuperSpace::unit() || named.codomain() != m.dual().tensor(&n) {
        return Err(Error::Shape("not the name of a map M -> N".into()));
    }
    let column = named.to_full().column(0);
    let mut full = Matrix::zeros(n.total(), m.total());
    for (r, (i, j)) in tensor_basis(&m.dual(), &n).into_iter().enumerate() {
        // the braiding contributes (-1)^{|e_i|}
        let sign = if m.parity(i) { -Q::one() } else { Q::one() };
        full[(j, i)] = &column[r] * sign;
    }
    SuperMap::from_full(m, n, &full)
}

/// True iff the unit `1 -> M^∨ ⊗ M` and the evaluation `M^∨ ⊗ M -> 1`
/// are mutually inverse.
pub fn is_invertible(a: &SuperSpace) -> bool {
    let ev = evaluation(a);
    let unit = coevaluation(&a.dual());
    let (Ok(there), Ok(back)) = (ev.compose(&unit), unit.compose(&ev)) else {
        return false;
    };
    there == SuperMap::identity(SuperSpace::unit()) && back == SuperMap::identity(a.dual().tensor(a))
}

/// A sequence `M' -i-> M -p-> M''` given by its two maps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZeroSequence {
    pub i: SuperMap,
    pub p: SuperMap,
}

impl ZeroSequence {
    /// Checks composability and `p ∘ i = 0`.
    pub fn new(i: SuperMap, p: SuperMap) -> Result<Self> {
        let composite = p.compose(&i)?;
        if !composite.is_zero() {
            return Err(Error::Precondition("p ∘ i is not zero".into()));
        }
        Ok(ZeroSequence { i, p })
    }

    pub fn left(&self) -> SuperSpace {
        self.i.domain()
    }

    pub fn middle(&self) -> SuperSpace {
        self.i.codomain()
    }

    pub fn right(&self) -> SuperSpace {
        self.p.codomain()
    }

    /// `ker p = im i`.
    pub fn is_exact_at_middle(&self) -> bool {
        // p ∘ i = 0 gives im i ⊆ ker p; equal dimensions finish it.
        self.i.rank() + self.p.rank() == self.middle().dim()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{q, q_frac};

    fn sm(dom: (usize, usize), cod: (usize, usize), even: &[i64], odd: &[i64]) -> SuperMap {
        let d = SuperSpace::new(dom.0, dom.1);
        let c = SuperSpace::new(cod.0, cod.1);
        SuperMap::new(d, c, Matrix::from_i64(c.even(), d.even(), even), Matrix::from_i64(c.odd(), d.odd(), odd))
            .unwrap()
    }

    #[test]
    fn dimension_arithmetic() {
        let s = SuperSpace::new;
        assert_eq!(s(1, 0).direct_sum(&s(0, 1)).dim(), SuperDim::new(1, 1));
        assert_eq!(s(2, 1).direct_sum(&s(0, 0)).dim(), SuperDim::new(2, 1));
        assert_eq!(s(1, 1).tensor(&s(1, 1)).dim(), SuperDim::new(2, 2));
        assert_eq!(s(3, 2).tensor(&SuperSpace::unit()).dim(), SuperDim::new(3, 2));
        assert_eq!(s(0, 1).tensor(&s(0, 1)).dim(), SuperDim::new(1, 0));
        assert_eq!(s(2, 1).dual().dim(), SuperDim::new(2, 1));
    }

    #[test]
    fn componentwise_order() {
        let d = SuperDim::new;
        assert!(d(1, 1) <= d(2, 1));
        assert!(d(2, 1) >= d(2, 0));
        assert_eq!(d(2, 0).partial_cmp(&d(1, 1)), None);
        assert_eq!(d(2, 0).partial_cmp(&d(1, 1)), None);
        assert_eq!(d(1, 2).partial_cmp(&d(1, 2)), Some(Ordering::Equal));
    }

    #[test]
    fn superdim_text_form() {
        assert_eq!("3|1".parse::<SuperDim>().unwrap(), SuperDim::new(3, 1));
        assert_eq!(SuperDim::new(0, 2).to_string(), "0|2");
        assert!("3,1".parse::<SuperDim>().is_err());
        assert!("a|1".parse::<SuperDim>().is_err());
    }

    #[test]
    fn direct_sum_of_iso_and_zero_has_its_rank() {
        let iso = sm((1, 1), (1, 1), &[2], &[-1]);
        let zero = SuperMap::zero(SuperSpace::new(2, 0), SuperSpace::new(1, 1));
        let f = iso.direct_sum(&zero);
        assert_eq!(f.rank(), SuperDim::new(1, 1));
        assert_eq!(f.domain().dim(), SuperDim::new(3, 1));
    }

    #[test]
    fn block_shapes_are_checked() {
        let d = SuperSpace::new(1, 1);
        assert!(SuperMap::new(d, d, Matrix::zeros(1, 2), Matrix::zeros(1, 1)).is_err());
        assert!(SuperMap::new(d, d, Matrix::zeros(1, 1), Matrix::zeros(0, 1)).is_err());
    }

    #[test]
    fn braiding_signs() {
        let e = SuperSpace::new(1, 0);
        let o = SuperSpace::new(0, 1);
        assert_eq!(braiding(&e, &e).even_block()[(0, 0)], q(1));
        assert_eq!(braiding(&o, &o).even_block()[(0, 0)], q(-1));
        assert_eq!(braiding(&e, &o).odd_block()[(0, 0)], q(1));
        let a = SuperSpace::new(2, 1);
        let b = SuperSpace::new(1, 2);
        let round = braiding(&b, &a).compose(&braiding(&a, &b)).unwrap();
        assert_eq!(round, SuperMap::identity(a.tensor(&b)));
    }

    #[test]
    fn triangle_identities() {
        for (m, n) in [(1, 1), (2, 1), (0, 2), (1, 0), (0, 0)] {
            let a = SuperSpace::new(m, n);
            let id = SuperMap::identity(a);
            let id_dual = SuperMap::identity(a.dual());
            let zig = id
                .tensor(&evaluation(&a))
                .compose(&associator(&a, &a.dual(), &a))
                .unwrap()
                .compose(&coevaluation(&a).tensor(&id))
                .unwrap();
            assert_eq!(zig, id, "a = {m}|{n}");
            let zag = evaluation(&a)
                .tensor(&id_dual)
                .compose(&inverse(&associator(&a.dual(), &a, &a.dual())).unwrap())
                .unwrap()
                .compose(&id_dual.tensor(&coevaluation(&a)))
                .unwrap();
            assert_eq!(zag, id_dual, "a = {m}|{n}");
        }
    }

    #[test]
    fn supertrace_of_identity() {
        assert_eq!(SuperMap::identity(SuperSpace::new(2, 1)).supertrace().unwrap(), q(1));
        assert_eq!(SuperMap::identity(SuperSpace::new(1, 1)).supertrace().unwrap(), q(0));
        assert_eq!(SuperMap::zero(SuperSpace::new(2, 2), SuperSpace::new(2, 2)).supertrace().unwrap(), q(0));
        assert_eq!(SuperMap::identity(SuperSpace::new(3, 1)).supertrace().unwrap(), q(2));
        assert!(SuperMap::zero(SuperSpace::new(1, 0), SuperSpace::new(2, 0)).supertrace().is_err());
        let f = sm((2, 1), (2, 1), &[1, 2, 3, 4], &[7]);
        assert_eq!(categorical_trace(&f).unwrap(), f.supertrace().unwrap());
    }

    #[test]
    fn names() {
        let one = SuperSpace::unit();
        let named = name(&SuperMap::identity(one));
        assert_eq!(named.domain(), one);
        assert_eq!(named.codomain(), one);
        assert!(!named.is_zero());
        let zero = SuperMap::zero(SuperSpace::new(2, 1), SuperSpace::new(1, 1));
        assert!(name(&zero).is_zero());
        let f = SuperMap::scalar(one, &q(1));
        let g = SuperMap::scalar(one, &q(2));
        assert_ne!(name(&f), name(&g));
        let h = sm((1, 1), (2, 1), &[1, -1], &[3]).scale(&q_frac(1, 2));
        assert_eq!(unname(&name(&h), h.domain(), h.codomain()).unwrap(), h);
    }

    #[test]
    fn invertible_objects() {
        assert!(is_invertible(&SuperSpace::new(1, 0)));
        assert!(is_invertible(&SuperSpace::new(0, 1)));
        assert!(!is_invertible(&SuperSpace::new(1, 1)));
        assert!(!is_invertible(&SuperSpace::new(0, 0)));
        assert!(!is_invertible(&SuperSpace::new(2, 0)));
    }

    #[test]
    fn mono_epi_kernel_cokernel() {
        let incl = sm((1, 0), (2, 0), &[1, 0], &[]);
        assert!(incl.is_mono());
        assert!(!incl.is_epi());

        let zero = SuperMap::zero(SuperSpace::new(2, 1), SuperSpace::new(1, 1));
        let k = zero.kernel();
        assert_eq!(k.domain().dim(), SuperDim::new(2, 1));
        assert_eq!(k, SuperMap::identity(SuperSpace::new(2, 1)));

        let rank_one = sm((2, 0), (2, 0), &[1, 2, 2, 4], &[]);
        assert_eq!(rank_one.kernel().domain().dim(), SuperDim::new(1, 0));
        assert_eq!(rank_one.cokernel().codomain().dim(), SuperDim::new(1, 0));
        assert!(rank_one.compose(&rank_one.kernel()).unwrap().is_zero());
        assert!(rank_one.cokernel().compose(&rank_one).unwrap().is_zero());
        let (epi, mono) = rank_one.image_factorization();
        assert!(epi.is_epi() && mono.is_mono());
        assert_eq!(mono.compose(&epi).unwrap(), rank_one);
    }

    #[test]
    fn normal_form_of_rank_one() {
        let f = sm((2, 1), (2, 2), &[1, 2, 2, 4], &[0, 3]);
        let nf = f.normal_form();
        assert_eq!(nf.rank, SuperDim::new(1, 1));
        assert!(nf.verify(&f).unwrap());
        let incl = sm((1, 1), (2, 1), &[0, 1], &[2]);
        let g = left_inverse(&incl).unwrap();
        assert_eq!(g.compose(&incl).unwrap(), SuperMap::identity(incl.domain()));
        let proj = incl.dual();
        let s = right_inverse(&proj).unwrap();
        assert_eq!(proj.compose(&s).unwrap(), SuperMap::identity(proj.codomain()));
    }

    #[test]
    fn zero_sequences() {
        let i = sm((1, 0), (1, 1), &[1], &[]);
        let p = sm((1, 1), (0, 1), &[], &[1]);
        let seq = ZeroSequence::new(i.clone(), p).unwrap();
        assert!(seq.is_exact_at_middle());
        let bad = sm((1, 1), (1, 0), &[1], &[]);
        assert!(matches!(ZeroSequence::new(i, bad), Err(Error::Precondition(_))));
    }
}

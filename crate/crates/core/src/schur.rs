//! Schur functors on super vector spaces.
//!
//! `S_λ(V)` is realized as the image of the Young symmetrizer `e_λ` acting
//! on `V^{⊗n}` through the signed permutation action. The symmetrizer is
//! built on the row-reading tableau of `λ`: `e_λ = (f^λ / n!) a_λ b_λ`
//! where `a_λ` sums the row stabilizer and `b_λ` is the signed sum over the
//! column stabilizer. With this convention `S_(1,1)` is the exterior square
//! on a purely even space.
//!
//! Tensor-power basis vectors are index tuples, ordered lexicographically and
//! then stably partitioned with even tuples first. The symmetrizer is never
//! materialized as a matrix; it acts on one pure tensor at a time.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::{q, Matrix, Q};
use crate::partitions::{count_standard_tableaux, factorial, rectangle, Partition};
use crate::supervec::{SuperDim, SuperMap, SuperSpace};

pub const DEFAULT_MAX_DEGREE: usize = 7;
pub const DEFAULT_MAX_SPACE_DIM: usize = 4;

/// Resource limits for explicit Schur functor computations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    pub max_degree: usize,
    pub max_space_dim: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps { max_degree: DEFAULT_MAX_DEGREE, max_space_dim: DEFAULT_MAX_SPACE_DIM }
    }
}

impl Caps {
    pub fn check(&self, degree: usize, dim: SuperDim) -> Result<()> {
        if degree > self.max_degree {
            return Err(Error::DegreeTooLarge { degree, limit: self.max_degree });
        }
        if dim.total() > self.max_space_dim {
            return Err(Error::SpaceTooLarge { dim: dim.total(), limit: self.max_space_dim });
        }
        Ok(())
    }
}

/// A permutation of `{0, .., n-1}` stored by its images.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation((0..n).collect())
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            if i >= images.len() || seen[i] {
                return Err(Error::Precondition(format!("{images:?} is not a permutation")));
            }
            seen[i] = true;
        }
        Ok(Permutation(images))
    }

    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        let mut images: Vec<usize> = (0..n).collect();
        images.swap(a, b);
        Permutation(images)
    }

    /// All permutations of `{0, .., n-1}`.
    pub fn all(n: usize) -> Vec<Permutation> {
        let blocks = vec![(0..n).collect::<Vec<_>>()];
        block_group(n, &blocks)
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn apply(&self, k: usize) -> usize {
        self.0[k]
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation(other.0.iter().map(|&k| self.0[k]).collect())
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.0.len()];
        for (k, &i) in self.0.iter().enumerate() {
            inv[i] = k;
        }
        Permutation(inv)
    }

    pub fn sign(&self) -> i64 {
        let n = self.0.len();
        let inversions =
            (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|&(i, j)| self.0[i] > self.0[j]).count();
        if inversions % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Sign acquired when the factor at position `k` moves to position
    /// `self(k)`: `-1` to the number of odd pairs whose order is reversed.
    pub fn koszul_sign(&self, odd: &[bool]) -> i64 {
        let n = self.0.len();
        let mut count = 0;
        for k in 0..n {
            if !odd[k] {
                continue;
            }
            count += (k + 1..n).filter(|&l| odd[l] && self.0[k] > self.0[l]).count();
        }
        if count % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Moves the entry at position `k` to position `self(k)`.
    pub fn permute<T: Copy + Default>(&self, items: &[T]) -> Vec<T> {
        let mut out = vec![T::default(); items.len()];
        for (k, &item) in items.iter().enumerate() {
            out[self.0[k]] = item;
        }
        out
    }
}

/// The subgroup permuting each block of positions among itself.
fn block_group(n: usize, blocks: &[Vec<usize>]) -> Vec<Permutation> {
    let mut group = vec![Permutation::identity(n)];
    for block in blocks {
        if block.len() < 2 {
            continue;
        }
        let orderings = orderings(block);
        let mut next = Vec::with_capacity(group.len() * orderings.len());
        for g in &group {
            for ordering in &orderings {
                let mut images = g.0.clone();
                for (src, &dst) in block.iter().zip(ordering) {
                    images[*src] = dst;
                }
                next.push(Permutation(images));
            }
        }
        group = next;
    }
    group
}

fn orderings(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for (i, &first) in items.iter().enumerate() {
        let mut rest = items.to_vec();
        rest.remove(i);
        for mut tail in orderings(&rest) {
            tail.insert(0, first);
            out.push(tail);
        }
    }
    out
}

/// An element of the rational group algebra of the symmetric group.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GroupAlgebraElement {
    degree: usize,
    terms: BTreeMap<Permutation, Q>,
}

impl GroupAlgebraElement {
    pub fn identity(degree: usize) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Permutation::identity(degree), Q::one());
        GroupAlgebraElement { degree, terms }
    }

    pub fn from_terms(degree: usize, terms: impl IntoIterator<Item = (Permutation, Q)>) -> Self {
        let mut out = GroupAlgebraElement { degree, terms: BTreeMap::new() };
        for (p, c) in terms {
            assert_eq!(p.degree(), degree);
            out.add_term(p, c);
        }
        out
    }

    fn add_term(&mut self, p: Permutation, c: Q) {
        let entry = self.terms.entry(p).or_insert_with(Q::zero);
        *entry += c;
        if entry.is_zero() {
            // drop cancelled terms
            let key = self.terms.iter().find(|(_, v)| v.is_zero()).map(|(k, _)| k.clone());
            if let Some(k) = key {
                self.terms.remove(&k);
            }
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn terms(&self) -> &BTreeMap<Permutation, Q> {
        &self.terms
    }

    pub fn coefficient(&self, p: &Permutation) -> Q {
        self.terms.get(p).cloned().unwrap_or_else(Q::zero)
    }

    /// Convolution product.
    pub fn mul(&self, other: &GroupAlgebraElement) -> GroupAlgebraElement {
        assert_eq!(self.degree, other.degree);
        let mut acc: HashMap<Permutation, Q> = HashMap::new();
        for (s, a) in &self.terms {
            for (t, b) in &other.terms {
                *acc.entry(s.compose(t)).or_insert_with(Q::zero) += a * b;
            }
        }
        GroupAlgebraElement { degree: self.degree, terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
    }

    pub fn scale(&self, s: &Q) -> GroupAlgebraElement {
        GroupAlgebraElement {
            degree: self.degree,
            terms: self.terms.iter().map(|(p, c)| (p.clone(), c * s)).filter(|(_, c)| !c.is_zero()).collect(),
        }
    }
}

/// Tuples are packed four bits per factor.
type Packed = u64;

const MAX_PACKED_DEGREE: usize = 16;
const MAX_PACKED_DIM: usize = 16;

fn pack(tuple: &[u8]) -> Packed {
    tuple.iter().enumerate().fold(0, |acc, (k, &i)| acc | (Packed::from(i) << (4 * k)))
}

fn unpack(p: Packed, n: usize) -> Vec<u8> {
    (0..n).map(|k| ((p >> (4 * k)) & 0xf) as u8).collect()
}

/// The Young symmetrizer of a partition, with its row and column groups
/// expanded for direct action on pure tensors.
#[derive(Debug)]
pub struct YoungSymmetrizer {
    shape: Partition,
    rows: Vec<Permutation>,
    columns: Vec<(Permutation, i64)>,
    normalization: Q,
}

impl YoungSymmetrizer {
    pub fn new(lambda: &Partition, max_degree: usize) -> Result<Self> {
        let n = lambda.size();
        if n == 0 {
            return Err(Error::Precondition("the Young symmetrizer needs a nonempty partition".into()));
        }
        if n > max_degree {
            return Err(Error::DegreeTooLarge { degree: n, limit: max_degree });
        }
        if n > MAX_PACKED_DEGREE {
            return Err(Error::DegreeTooLarge { degree: n, limit: MAX_PACKED_DEGREE });
        }
        let positions = tableau_positions(lambda);
        let row_blocks: Vec<Vec<usize>> = positions.clone();
        let col_blocks: Vec<Vec<usize>> =
            (0..lambda.row(0)).map(|j| (0..lambda.column(j)).map(|i| positions[i][j]).collect()).collect();
        let rows = block_group(n, &row_blocks);
        let columns = block_group(n, &col_blocks).into_iter().map(|p| {
            let s = p.sign();
            (p, s)
        });
        let normalization = Q::new(count_standard_tableaux(lambda).into(), factorial(n).into());
        Ok(YoungSymmetrizer { shape: lambda.clone(), rows, columns: columns.collect(), normalization })
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn degree(&self) -> usize {
        self.shape.size()
    }

    /// `f^λ / n!`.
    pub fn normalization(&self) -> &Q {
        &self.normalization
    }

    /// `e_λ` as a group algebra element.
    pub fn element(&self) -> GroupAlgebraElement {
        let n = self.degree();
        let mut terms = Vec::with_capacity(self.rows.len() * self.columns.len());
        for r in &self.rows {
            for (c, s) in &self.columns {
                terms.push((r.compose(c), q(*s) * &self.normalization));
            }
        }
        GroupAlgebraElement::from_terms(n, terms)
    }

    /// `a_λ b_λ v` for a pure tensor `v` over a space with `even` even basis
    /// vectors; coefficients are integers.
    fn apply_packed(&self, v: Packed, even: usize) -> HashMap<Packed, i64> {
        let n = self.degree();
        let odd_of = |p: Packed| -> Vec<bool> { (0..n).map(|k| ((p >> (4 * k)) & 0xf) as usize >= even).collect() };
        let mut after_columns: HashMap<Packed, i64> = HashMap::new();
        let odd = odd_of(v);
        for (tau, sign) in &self.columns {
            let w = permute_packed(tau, v);
            *after_columns.entry(w).or_insert(0) += sign * tau.koszul_sign(&odd);
        }
        let mut out: HashMap<Packed, i64> = HashMap::new();
        for (w, c) in after_columns {
            if c == 0 {
                continue;
            }
            let odd = odd_of(w);
            for sigma in &self.rows {
                let u = permute_packed(sigma, w);
                *out.entry(u).or_insert(0) += c * sigma.koszul_sign(&odd);
            }
        }
        out.retain(|_, c| *c != 0);
        out
    }

    /// `a_λ b_λ` applied to the pure tensor `tuple`; entries are integer
    /// coefficients, so `e_λ tuple` is this times [`Self::normalization`].
    pub fn apply_unnormalized(&self, tuple: &[u8], even: usize) -> BTreeMap<Vec<u8>, i64> {
        let n = self.degree();
        self.apply_packed(pack(tuple), even).into_iter().map(|(p, c)| (unpack(p, n), c)).collect()
    }
}

fn permute_packed(sigma: &Permutation, v: Packed) -> Packed {
    sigma.images().iter().enumerate().fold(0, |acc, (k, &target)| acc | (((v >> (4 * k)) & 0xf) << (4 * target)))
}

/// Position (0-based, row-reading order) of each box of the canonical tableau.
fn tableau_positions(lambda: &Partition) -> Vec<Vec<usize>> {
    let mut next = 0;
    lambda
        .parts()
        .iter()
        .map(|&len| {
            let row: Vec<usize> = (next..next + len).collect();
            next += len;
            row
        })
        .collect()
}

fn symmetrizer(lambda: &Partition) -> Result<Arc<YoungSymmetrizer>> {
    static CACHE: OnceLock<Mutex<HashMap<Partition, Arc<YoungSymmetrizer>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(s) = cache.lock().expect("symmetrizer cache").get(lambda) {
        return Ok(s.clone());
    }
    let s = Arc::new(YoungSymmetrizer::new(lambda, MAX_PACKED_DEGREE)?);
    cache.lock().expect("symmetrizer cache").insert(lambda.clone(), s.clone());
    Ok(s)
}

/// The normalized idempotent `e_λ`, refusing degrees above `max_degree`.
pub fn young_symmetrizer(lambda: &Partition, max_degree: usize) -> Result<GroupAlgebraElement> {
    Ok(YoungSymmetrizer::new(lambda, max_degree)?.element())
}

/// The basis of `V^{⊗n}`.
#[derive(Clone, Debug)]
pub struct TensorPower {
    base: SuperSpace,
    degree: usize,
    tuples: Vec<Vec<u8>>,
    positions: Vec<usize>,
}

impl TensorPower {
    pub fn new(base: SuperSpace, degree: usize) -> Self {
        let d = base.total();
        assert!(d <= MAX_PACKED_DIM, "tensor power of a space with more than {MAX_PACKED_DIM} basis vectors");
        let count = d.pow(degree as u32);
        let all: Vec<Vec<u8>> = (0..count)
            .map(|code| {
                let mut c = code;
                let mut t = vec![0u8; degree];
                for k in (0..degree).rev() {
                    t[k] = (c % d) as u8;
                    c /= d;
                }
                t
            })
            .collect();
        let odd_tuple = |t: &Vec<u8>| t.iter().filter(|&&i| base.parity(i as usize)).count() % 2 == 1;
        let (even, odd): (Vec<_>, Vec<_>) = all.into_iter().partition(|t| !odd_tuple(t));
        let tuples: Vec<Vec<u8>> = even.into_iter().chain(odd).collect();
        let mut positions = vec![0; count];
        for (pos, t) in tuples.iter().enumerate() {
            positions[code_of(t, d)] = pos;
        }
        TensorPower { base, degree, tuples, positions }
    }

    pub fn base(&self) -> SuperSpace {
        self.base
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn space(&self) -> SuperSpace {
        let odd = self.tuples.iter().filter(|t| self.is_odd(t)).count();
        SuperSpace::new(self.tuples.len() - odd, odd)
    }

    pub fn tuples(&self) -> &[Vec<u8>] {
        &self.tuples
    }

    pub fn is_odd(&self, tuple: &[u8]) -> bool {
        tuple.iter().filter(|&&i| self.base.parity(i as usize)).count() % 2 == 1
    }

    /// Global basis position of a tuple.
    pub fn position(&self, tuple: &[u8]) -> usize {
        self.positions[code_of(tuple, self.base.total())]
    }

    /// Multiplicity of each basis index in the tuple.
    pub fn weight(&self, tuple: &[u8]) -> Vec<u8> {
        let mut w = vec![0u8; self.base.total()];
        for &i in tuple {
            w[i as usize] += 1;
        }
        w
    }
}

fn code_of(tuple: &[u8], d: usize) -> usize {
    tuple.iter().fold(0, |acc, &i| acc * d + i as usize)
}

/// The action of `sigma` on `V^{⊗n}`: the factor in position `k` moves to
/// position `sigma(k)`, with the Koszul sign.
pub fn permutation_action(sigma: &Permutation, v: &SuperSpace, n: usize) -> Result<SuperMap> {
    if sigma.degree() != n {
        return Err(Error::Shape(format!("permutation of degree {} acting on degree {n}", sigma.degree())));
    }
    let tp = TensorPower::new(*v, n);
    let space = tp.space();
    let mut full = Matrix::zeros(space.total(), space.total());
    for (col, t) in tp.tuples().iter().enumerate() {
        let odd: Vec<bool> = t.iter().map(|&i| v.parity(i as usize)).collect();
        let image = sigma.permute(t);
        full[(tp.position(&image), col)] = q(sigma.koszul_sign(&odd));
    }
    SuperMap::from_full(space, space, &full)
}

/// A group algebra element acting linearly on `V^{⊗n}`.
pub fn algebra_action(x: &GroupAlgebraElement, v: &SuperSpace, n: usize) -> Result<SuperMap> {
    let space = TensorPower::new(*v, n).space();
    let mut acc = SuperMap::zero(space, space);
    for (p, c) in x.terms() {
        acc = acc.add(&permutation_action(p, v, n)?.scale(c))?;
    }
    Ok(acc)
}

/// `f^{⊗n}: M^{⊗n} -> N^{⊗n}`; no signs since `f` is even.
pub fn tensor_power_map(f: &SuperMap, n: usize) -> Result<SuperMap> {
    let src = TensorPower::new(f.domain(), n);
    let tgt = TensorPower::new(f.codomain(), n);
    let full_f = f.to_full();
    let mut full = Matrix::zeros(tgt.space().total(), src.space().total());
    for t in src.tuples() {
        let col = src.position(t);
        for (u, c) in apply_tensor_power(&full_f, t) {
            full[(tgt.position(&u), col)] = c;
        }
    }
    SuperMap::from_full(src.space(), tgt.space(), &full)
}

/// `f^{⊗n}` on one pure tensor, as a sparse vector.
fn apply_tensor_power(full_f: &Matrix, tuple: &[u8]) -> Vec<(Vec<u8>, Q)> {
    let mut terms: Vec<(Vec<u8>, Q)> = vec![(Vec::with_capacity(tuple.len()), Q::one())];
    for &i in tuple {
        let column: Vec<(u8, Q)> = (0..full_f.rows())
            .filter(|&r| !full_f[(r, i as usize)].is_zero())
            .map(|r| (r as u8, full_f[(r, i as usize)].clone()))
            .collect();
        let mut next = Vec::with_capacity(terms.len() * column.len());
        for (prefix, c) in &terms {
            for (r, a) in &column {
                let mut t = prefix.clone();
                t.push(*r);
                next.push((t, c * a));
            }
        }
        terms = next;
    }
    terms
}

/// `S_λ(V)` realized inside `V^{⊗n}`.
#[derive(Clone, Debug)]
pub struct SchurObject {
    pub lambda: Partition,
    pub base: SuperSpace,
    /// `V^{⊗n}`.
    pub ambient: SuperSpace,
    /// `S_λ(V)`.
    pub space: SuperSpace,
    /// `S_λ(V) -> V^{⊗n}`.
    pub embed: SuperMap,
    /// `V^{⊗n} -> S_λ(V)`.
    pub project: SuperMap,
}

/// Realizes `S_λ(V)` as the image of `e_λ`, with an exact basis found by row
/// reduction inside each weight space.
///
/// The basis of `S_λ(V)` lists even vectors before odd ones; within a parity,
/// vectors are grouped by weight (index multiplicities, ascending) and then
/// follow the reduced row echelon order.
pub fn schur_apply_space(lambda: &Partition, v: &SuperSpace, caps: &Caps) -> Result<SchurObject> {
    let n = lambda.size();
    caps.check(n, v.dim())?;
    if n == 0 {
        let unit = SuperSpace::unit();
        return Ok(SchurObject {
            lambda: lambda.clone(),
            base: *v,
            ambient: unit,
            space: unit,
            embed: SuperMap::identity(unit),
            project: SuperMap::identity(unit),
        });
    }
    let sym = symmetrizer(lambda)?;
    let tp = TensorPower::new(*v, n);
    let ambient = tp.space();

    let mut groups: BTreeMap<Vec<u8>, Vec<&Vec<u8>>> = BTreeMap::new();
    for t in tp.tuples() {
        groups.entry(tp.weight(t)).or_default().push(t);
    }
    groups.values_mut().for_each(|g| g.sort());

    // Basis vectors (sparse, ambient positions) and projection columns,
    // keyed by (parity, index within parity).
    let mut basis: [Vec<Vec<(usize, Q)>>; 2] = [Vec::new(), Vec::new()];
    let mut projection: Vec<Vec<(bool, usize, Q)>> = vec![Vec::new(); ambient.total()];

    for group in groups.values() {
        let local: HashMap<&[u8], usize> = group.iter().enumerate().map(|(k, t)| (t.as_slice(), k)).collect();
        let odd = tp.is_odd(group[0]);
        let rows: Vec<Vec<Q>> = group
            .iter()
            .map(|t| {
                let mut row = vec![Q::zero(); group.len()];
                for (u, c) in sym.apply_unnormalized(t, v.even()) {
                    row[local[u.as_slice()]] = q(c);
                }
                row
            })
            .collect();
        let images = Matrix::from_rows(rows, group.len());
        let ech = images.echelon();
        let rank = ech.pivots.len();
        if rank == 0 {
            continue;
        }
        let offset = basis[odd as usize].len();
        for k in 0..rank {
            let vector: Vec<(usize, Q)> = ech
                .reduced
                .row(k)
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(j, c)| (tp.position(group[j]), c.clone()))
                .collect();
            basis[odd as usize].push(vector);
        }
        // The reduced basis has an identity at the pivots, so coordinates of
        // any vector in the image are its pivot entries.
        for (i, t) in group.iter().enumerate() {
            for (k, &p) in ech.pivots.iter().enumerate() {
                let c = &images[(i, p)];
                if !c.is_zero() {
                    projection[tp.position(t)].push((odd, offset + k, c * sym.normalization()));
                }
            }
        }
    }

    let space = SuperSpace::new(basis[0].len(), basis[1].len());
    let mut embed = Matrix::zeros(ambient.total(), space.total());
    for (odd, vectors) in basis.iter().enumerate() {
        for (k, vector) in vectors.iter().enumerate() {
            let col = space.global_index(odd == 1, k);
            for (pos, c) in vector {
                embed[(*pos, col)] = c.clone();
            }
        }
    }
    let mut project = Matrix::zeros(space.total(), ambient.total());
    for (pos, entries) in projection.into_iter().enumerate() {
        for (odd, k, c) in entries {
            project[(space.global_index(odd, k), pos)] = c;
        }
    }
    Ok(SchurObject {
        lambda: lambda.clone(),
        base: *v,
        ambient,
        space,
        embed: SuperMap::from_full(space, ambient, &embed)?,
        project: SuperMap::from_full(ambient, space, &project)?,
    })
}

/// `S_λ(f) = project_N ∘ f^{⊗n} ∘ embed_M`.
pub fn schur_apply_map(lambda: &Partition, f: &SuperMap, caps: &Caps) -> Result<SuperMap> {
    let src = schur_apply_space(lambda, &f.domain(), caps)?;
    let tgt = schur_apply_space(lambda, &f.codomain(), caps)?;
    schur_apply_map_between(&src, &tgt, f)
}

/// [`schur_apply_map`] with both realizations supplied.
pub fn schur_apply_map_between(src: &SchurObject, tgt: &SchurObject, f: &SuperMap) -> Result<SuperMap> {
    if src.base != f.domain() || tgt.base != f.codomain() || src.lambda != tgt.lambda {
        return Err(Error::Shape("Schur objects do not match the map".into()));
    }
    let n = src.lambda.size();
    if n == 0 {
        return Ok(SuperMap::identity(SuperSpace::unit()));
    }
    let src_tp = TensorPower::new(f.domain(), n);
    let tgt_tp = TensorPower::new(f.codomain(), n);
    let full_f = f.to_full();
    let embed = src.embed.to_full();
    let project = tgt.project.to_full();
    let mut out = Matrix::zeros(tgt.space.total(), src.space.total());
    for col in 0..src.space.total() {
        let mut image: HashMap<Vec<u8>, Q> = HashMap::new();
        for (pos, t) in src_tp.tuples().iter().enumerate() {
            let c = &embed[(pos, col)];
            if c.is_zero() {
                continue;
            }
            for (u, a) in apply_tensor_power(&full_f, t) {
                *image.entry(u).or_insert_with(Q::zero) += c * a;
            }
        }
        for (u, a) in image {
            if a.is_zero() {
                continue;
            }
            let pos = tgt_tp.position(&u);
            for row in 0..tgt.space.total() {
                let p = &project[(row, pos)];
                if !p.is_zero() {
                    out[(row, col)] += p * &a;
                }
            }
        }
    }
    SuperMap::from_full(src.space, tgt.space, &out)
}

/// Decides `S_λ(V) = 0` for `dim V = dim`.
///
/// A nonzero answer is certified by one pure tensor `v` with `e_λ v ≠ 0`.
/// A zero answer checks `e_λ v = 0` for enough pure tensors to span
/// `V^{⊗n}` up to symmetry: one per orbit of the column group (other orbit
/// members give `±` the same image), restricted to dominant weights (even
/// and odd index relabelings commute with `e_λ`), skipping tensors with a
/// repeated even index in a column (killed by the column antisymmetrizer).
/// Results are memoized.
pub fn vanishes(lambda: &Partition, dim: SuperDim, caps: &Caps) -> Result<bool> {
    let n = lambda.size();
    caps.check(n, dim)?;
    if n == 0 {
        return Ok(false);
    }
    if dim.is_zero() {
        return Ok(true);
    }
    if dim.total() > MAX_PACKED_DIM {
        return Err(Error::SpaceTooLarge { dim: dim.total(), limit: MAX_PACKED_DIM });
    }
    static MEMO: OnceLock<Mutex<HashMap<(Partition, SuperDim), bool>>> = OnceLock::new();
    let memo = MEMO.get_or_init(Default::default);
    if let Some(&hit) = memo.lock().expect("vanishing memo").get(&(lambda.clone(), dim)) {
        return Ok(hit);
    }
    let result = decide_vanishing(lambda, dim)?;
    memo.lock().expect("vanishing memo").insert((lambda.clone(), dim), result);
    Ok(result)
}

/// A tensor `v` with `e_λ v ≠ 0`, if one exists.
pub fn nonvanishing_witness(lambda: &Partition, dim: SuperDim) -> Result<Option<Vec<u8>>> {
    if lambda.is_empty() {
        return Ok(Some(Vec::new()));
    }
    let sym = symmetrizer(lambda)?;
    if let Some(v) = hook_filling(lambda, dim) {
        if !sym.apply_packed(pack(&v), dim.even).is_empty() {
            return Ok(Some(v));
        }
    }
    Ok(search_orbit_representatives(&sym, lambda, dim))
}

fn decide_vanishing(lambda: &Partition, dim: SuperDim) -> Result<bool> {
    Ok(nonvanishing_witness(lambda, dim)?.is_none())
}

/// Even index `i` along row `i` for the first `m` rows, then odd index
/// `m + j` in column `j` below them; needs row `m` no longer than `n`.
fn hook_filling(lambda: &Partition, dim: SuperDim) -> Option<Vec<u8>> {
    if lambda.row(dim.even) > dim.odd {
        return None;
    }
    let mut v = Vec::with_capacity(lambda.size());
    for (i, &len) in lambda.parts().iter().enumerate() {
        for j in 0..len {
            v.push(if i < dim.even { i as u8 } else { (dim.even + j) as u8 });
        }
    }
    Some(v)
}

fn search_orbit_representatives(sym: &YoungSymmetrizer, lambda: &Partition, dim: SuperDim) -> Option<Vec<u8>> {
    let d = dim.total();
    let positions = tableau_positions(lambda);
    let columns: Vec<Vec<usize>> =
        (0..lambda.row(0)).map(|j| (0..lambda.column(j)).map(|i| positions[i][j]).collect()).collect();
    let choices: Vec<Vec<Vec<u8>>> = columns.iter().map(|c| column_fillings(c.len(), d, dim.even)).collect();
    let mut tuple = vec![0u8; lambda.size()];
    let mut counts = vec![0usize; d];
    search_columns(sym, dim, &columns, &choices, 0, &mut tuple, &mut counts)
}

fn search_columns(
    sym: &YoungSymmetrizer,
    dim: SuperDim,
    columns: &[Vec<usize>],
    choices: &[Vec<Vec<u8>>],
    j: usize,
    tuple: &mut Vec<u8>,
    counts: &mut Vec<usize>,
) -> Option<Vec<u8>> {
    if j == columns.len() {
        if !is_dominant(counts, dim.even) {
            return None;
        }
        let image = sym.apply_packed(pack(tuple), dim.even);
        return (!image.is_empty()).then(|| tuple.clone());
    }
    for filling in &choices[j] {
        for (&pos, &i) in columns[j].iter().zip(filling) {
            tuple[pos] = i;
            counts[i as usize] += 1;
        }
        let found = search_columns(sym, dim, columns, choices, j + 1, tuple, counts);
        for &i in filling {
            counts[i as usize] -= 1;
        }
        if found.is_some() {
            return found;
        }
    }
    None
}

fn is_dominant(counts: &[usize], even: usize) -> bool {
    counts[..even].windows(2).all(|w| w[0] >= w[1]) && counts[even..].windows(2).all(|w| w[0] >= w[1])
}

/// Sorted index multisets of size `len` with no repeated even index.
fn column_fillings(len: usize, d: usize, even: usize) -> Vec<Vec<u8>> {
    fn go(len: usize, d: usize, even: usize, start: usize, prefix: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if prefix.len() == len {
            out.push(prefix.clone());
            return;
        }
        for i in start..d {
            prefix.push(i as u8);
            let next = if i < even { i + 1 } else { i };
            go(len, d, even, next, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(len, d, even, 0, &mut Vec::new(), &mut out);
    out
}

/// Which way the vanishing rectangle of an `m|n` space sits.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Orientation {
    /// `m + 1` rows of length `n + 1`.
    EvenRows,
    /// `n + 1` rows of length `m + 1`.
    EvenColumns,
}

/// Fixed by running the oracle on `1|0`, where exactly one of `S_(2)` and
/// `S_(1,1)` vanishes.
pub fn orientation() -> Orientation {
    static ORIENTATION: OnceLock<Orientation> = OnceLock::new();
    *ORIENTATION.get_or_init(|| {
        let line = SuperDim::new(1, 0);
        let caps = Caps::default();
        let sym2 = vanishes(&Partition::from_parts(&[2]), line, &caps).expect("within caps");
        let ext2 = vanishes(&Partition::from_parts(&[1, 1]), line, &caps).expect("within caps");
        match (sym2, ext2) {
            (false, true) => Orientation::EvenRows,
            (true, false) => Orientation::EvenColumns,
            other => panic!("oracle on an even line gave {other:?} for (S_2, S_11) vanishing"),
        }
    })
}

/// The minimal partition killing every space of super-dimension `dim`.
pub fn vanishing_rectangle(dim: SuperDim) -> Partition {
    match orientation() {
        Orientation::EvenRows => rectangle(dim.even + 1, dim.odd + 1),
        Orientation::EvenColumns => rectangle(dim.odd + 1, dim.even + 1),
    }
}

/// Inverse of [`vanishing_rectangle`].
pub fn superdim_of_rectangle(rows: usize, cols: usize) -> SuperDim {
    match orientation() {
        Orientation::EvenRows => SuperDim::new(rows - 1, cols - 1),
        Orientation::EvenColumns => SuperDim::new(cols - 1, rows - 1),
    }
}

/// `dim S_λ(V)` for `dim V = d`, by counting semistandard supertableaux:
/// each even letter fills a horizontal strip, each odd letter a vertical
/// strip, and the parity of a filling is the parity of its odd boxes.
pub fn graded_dimension(lambda: &Partition, d: SuperDim) -> SuperDim {
    let shape = match orientation() {
        Orientation::EvenRows => lambda.clone(),
        Orientation::EvenColumns => lambda.conjugate(),
    };
    let mut memo = HashMap::new();
    let (even, odd) = count_supertableaux(&shape, d, 0, &Partition::empty(), &mut memo);
    SuperDim::new(even as usize, odd as usize)
}

fn count_supertableaux(
    shape: &Partition,
    d: SuperDim,
    letter: usize,
    filled: &Partition,
    memo: &mut HashMap<(usize, Partition), (u64, u64)>,
) -> (u64, u64) {
    if filled == shape {
        return (1, 0);
    }
    if letter == d.total() {
        return (0, 0);
    }
    if let Some(&hit) = memo.get(&(letter, filled.clone())) {
        return hit;
    }
    let odd_letter = letter >= d.even;
    let mut total = (0, 0);
    for next in strips(shape, filled, odd_letter) {
        let added = next.size() - filled.size();
        let (e, o) = count_supertableaux(shape, d, letter + 1, &next, memo);
        if odd_letter && added % 2 == 1 {
            total = (total.0 + o, total.1 + e);
        } else {
            total = (total.0 + e, total.1 + o);
        }
    }
    memo.insert((letter, filled.clone()), total);
    total
}

/// Partitions `ν` with `filled ⊆ ν ⊆ shape` and `ν / filled` a horizontal
/// strip (or a vertical strip when `vertical`).
fn strips(shape: &Partition, filled: &Partition, vertical: bool) -> Vec<Partition> {
    let rows = shape.len();
    let mut out = Vec::new();
    let mut current = vec![0usize; rows];
    fn go(
        shape: &Partition,
        filled: &Partition,
        vertical: bool,
        i: usize,
        current: &mut Vec<usize>,
        out: &mut Vec<Partition>,
    ) {
        if i == current.len() {
            let parts: Vec<usize> = current.iter().copied().filter(|&p| p > 0).collect();
            out.push(Partition::new(parts).expect("strip rows stay weakly decreasing"));
            return;
        }
        let lo = filled.row(i);
        let mut hi = shape.row(i);
        if i > 0 {
            hi = hi.min(current[i - 1]);
        }
        if vertical {
            hi = hi.min(lo + 1);
        } else if i > 0 {
            hi = hi.min(filled.row(i - 1));
        }
        for len in lo..=hi.max(lo) {
            if len > hi {
                break;
            }
            current[i] = len;
            go(shape, filled, vertical, i + 1, current, out);
        }
    }
    go(shape, filled, vertical, 0, &mut current, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::q_frac;
    use crate::partitions::{partitions_of, partitions_up_to};

    fn p(parts: &[usize]) -> Partition {
        Partition::from_parts(parts)
    }

    fn rank_dim(lambda: &Partition, dim: SuperDim) -> SuperDim {
        schur_apply_space(lambda, &SuperSpace::of_dim(dim), &Caps::default()).unwrap().space.dim()
    }

    #[test]
    fn permutation_basics() {
        let s = Permutation::from_images(vec![1, 2, 0]).unwrap();
        assert_eq!(s.sign(), 1);
        assert_eq!(s.compose(&s.inverse()), Permutation::identity(3));
        assert_eq!(Permutation::transposition(3, 0, 2).sign(), -1);
        assert_eq!(s.permute(&['a', 'b', 'c']), vec!['c', 'a', 'b']);
        assert!(Permutation::from_images(vec![0, 0]).is_err());
        assert_eq!(Permutation::all(4).len(), 24);
    }

    #[test]
    fn symmetrizer_examples() {
        let e2 = young_symmetrizer(&p(&[2]), 7).unwrap();
        let swap = Permutation::transposition(2, 0, 1);
        assert_eq!(e2.coefficient(&Permutation::identity(2)), q_frac(1, 2));
        assert_eq!(e2.coefficient(&swap), q_frac(1, 2));
        let e11 = young_symmetrizer(&p(&[1, 1]), 7).unwrap();
        assert_eq!(e11.coefficient(&Permutation::identity(2)), q_frac(1, 2));
        assert_eq!(e11.coefficient(&swap), q_frac(-1, 2));
        let e21 = young_symmetrizer(&p(&[2, 1]), 7).unwrap();
        assert_eq!(e21.mul(&e21), e21);
        assert_eq!(count_standard_tableaux(&p(&[2, 1])), 2);
    }

    #[test]
    fn symmetrizer_refuses_past_cap() {
        assert_eq!(young_symmetrizer(&p(&[4, 4]), 7), Err(Error::DegreeTooLarge { degree: 8, limit: 7 }));
        assert!(young_symmetrizer(&Partition::empty(), 7).is_err());
    }

    #[test]
    fn symmetrizers_are_idempotent() {
        for lambda in partitions_up_to(5).unwrap() {
            let e = young_symmetrizer(&lambda, 7).unwrap();
            assert_eq!(e.mul(&e), e, "{lambda:?}");
        }
    }

    #[test]
    fn koszul_sign_on_odd_square() {
        let odd = SuperSpace::new(0, 1);
        let swap = Permutation::transposition(2, 0, 1);
        let action = permutation_action(&swap, &odd, 2).unwrap();
        assert_eq!(action, SuperMap::scalar(SuperSpace::new(1, 0), &q(-1)));
        let id = permutation_action(&Permutation::identity(3), &SuperSpace::new(1, 1), 3).unwrap();
        assert_eq!(id, SuperMap::identity(id.domain()));
    }

    #[test]
    fn action_is_a_homomorphism() {
        let v = SuperSpace::new(1, 2);
        let all = Permutation::all(3);
        for s in &all {
            for t in &all {
                let lhs = permutation_action(&s.compose(t), &v, 3).unwrap();
                let rhs =
                    permutation_action(s, &v, 3).unwrap().compose(&permutation_action(t, &v, 3).unwrap()).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn adjacent_transpositions_are_braidings() {
        let v = SuperSpace::new(1, 1);
        let swap = Permutation::transposition(2, 0, 1);
        // V^{⊗2} with this module's basis order matches the binary tensor product.
        assert_eq!(permutation_action(&swap, &v, 2).unwrap(), crate::supervec::braiding(&v, &v));
    }

    #[test]
    fn schur_object_invariants() {
        for (lambda, dim) in [(p(&[2, 1]), (1, 1)), (p(&[2]), (2, 1)), (p(&[1, 1, 1]), (1, 2)), (p(&[3]), (0, 2))] {
            let v = SuperSpace::new(dim.0, dim.1);
            let s = schur_apply_space(&lambda, &v, &Caps::default()).unwrap();
            let id = s.project.compose(&s.embed).unwrap();
            assert_eq!(id, SuperMap::identity(s.space), "{lambda:?} {dim:?}");
            let e = algebra_action(&young_symmetrizer(&lambda, 7).unwrap(), &v, lambda.size()).unwrap();
            assert_eq!(s.embed.compose(&s.project).unwrap(), e, "{lambda:?} {dim:?}");
        }
    }

    #[test]
    fn schur_space_examples() {
        assert_eq!(rank_dim(&p(&[1]), SuperDim::new(2, 1)), SuperDim::new(2, 1));
        assert_eq!(rank_dim(&p(&[2, 2]), SuperDim::new(1, 1)), SuperDim::ZERO);
        assert_eq!(rank_dim(&p(&[1, 1]), SuperDim::new(2, 0)), SuperDim::new(1, 0));
        assert_eq!(rank_dim(&p(&[2]), SuperDim::new(1, 1)), SuperDim::new(1, 1));
        assert_eq!(rank_dim(&p(&[2]), SuperDim::new(0, 1)), SuperDim::ZERO);
        assert_eq!(rank_dim(&p(&[1, 1]), SuperDim::new(0, 1)), SuperDim::new(1, 0));
    }

    #[test]
    fn schur_refuses_past_caps() {
        let caps = Caps::default();
        assert_eq!(
            schur_apply_space(&p(&[8]), &SuperSpace::new(1, 0), &caps).unwrap_err(),
            Error::DegreeTooLarge { degree: 8, limit: 7 }
        );
        assert_eq!(
            schur_apply_space(&p(&[1]), &SuperSpace::new(3, 2), &caps).unwrap_err(),
            Error::SpaceTooLarge { dim: 5, limit: 4 }
        );
    }

    #[test]
    fn orientation_is_even_rows() {
        assert_eq!(orientation(), Orientation::EvenRows);
        assert_eq!(vanishing_rectangle(SuperDim::new(1, 0)), p(&[1, 1]));
        assert_eq!(vanishing_rectangle(SuperDim::new(0, 1)), p(&[2]));
        assert_eq!(vanishing_rectangle(SuperDim::new(2, 1)), p(&[2, 2, 2]));
        assert_eq!(superdim_of_rectangle(3, 2), SuperDim::new(2, 1));
    }

    #[test]
    fn graded_dimension_examples() {
        assert_eq!(graded_dimension(&p(&[1]), SuperDim::new(2, 1)), SuperDim::new(2, 1));
        assert_eq!(graded_dimension(&p(&[2]), SuperDim::new(1, 1)), SuperDim::new(1, 1));
        assert_eq!(graded_dimension(&p(&[2, 2]), SuperDim::new(1, 1)), SuperDim::ZERO);
        assert_eq!(graded_dimension(&Partition::empty(), SuperDim::new(2, 2)), SuperDim::UNIT);
        assert_eq!(graded_dimension(&p(&[1, 1]), SuperDim::new(3, 0)), SuperDim::new(3, 0));
    }

    #[test]
    fn graded_dimension_matches_rank_small() {
        for lambda in partitions_up_to(4).unwrap() {
            for (m, n) in [(1, 0), (0, 1), (1, 1), (2, 1), (0, 2)] {
                let d = SuperDim::new(m, n);
                assert_eq!(graded_dimension(&lambda, d), rank_dim(&lambda, d), "{lambda:?} {d}");
            }
        }
    }

    #[test]
    fn vanishing_matches_rank_small() {
        for lambda in partitions_up_to(5).unwrap() {
            for (m, n) in [(0, 0), (1, 0), (0, 1), (1, 1), (2, 1), (1, 2)] {
                let d = SuperDim::new(m, n);
                let by_rank = rank_dim(&lambda, d).is_zero();
                assert_eq!(vanishes(&lambda, d, &Caps::default()).unwrap(), by_rank, "{lambda:?} {d}");
            }
        }
    }

    #[test]
    fn vanishing_beyond_realization_caps() {
        let caps = Caps { max_degree: 9, max_space_dim: 5 };
        assert!(vanishes(&p(&[3, 3, 3]), SuperDim::new(2, 2), &caps).unwrap());
        assert!(!vanishes(&p(&[3, 3, 2]), SuperDim::new(2, 2), &caps).unwrap());
        assert!(vanishes(&p(&[2, 2, 2, 2]), SuperDim::new(3, 1), &caps).unwrap());
        assert!(!vanishes(&p(&[3, 3, 3]), SuperDim::new(3, 2), &caps).unwrap());
    }

    #[test]
    fn functor_on_identity_and_zero() {
        let v = SuperSpace::new(1, 1);
        let lambda = p(&[2, 1]);
        let caps = Caps::default();
        let id = schur_apply_map(&lambda, &SuperMap::identity(v), &caps).unwrap();
        assert_eq!(id, SuperMap::identity(id.domain()));
        let zero = schur_apply_map(&lambda, &SuperMap::zero(v, SuperSpace::new(2, 1)), &caps).unwrap();
        assert!(zero.is_zero());
        assert!(!zero.domain().is_zero());
    }

    #[test]
    fn tensor_power_map_matches_binary_tensor() {
        let f = SuperMap::new(
            SuperSpace::new(1, 1),
            SuperSpace::new(2, 1),
            Matrix::from_i64(2, 1, &[1, -2]),
            Matrix::from_i64(1, 1, &[3]),
        )
        .unwrap();
        assert_eq!(tensor_power_map(&f, 2).unwrap(), f.tensor(&f));
    }

    #[test]
    fn strips_enumerate_correctly() {
        let shape = p(&[2, 1]);
        assert_eq!(strips(&shape, &Partition::empty(), false), vec![Partition::empty(), p(&[1]), p(&[2])]);
        assert_eq!(strips(&shape, &Partition::empty(), true), vec![Partition::empty(), p(&[1]), p(&[1, 1])]);
        assert_eq!(strips(&shape, &p(&[1]), false).len(), 4);
    }

    #[test]
    fn sum_over_shapes_of_size_three() {
        // Σ f^λ dim S_λ(V) = (dim V)^3
        for (m, n) in [(1, 1), (2, 1), (0, 3)] {
            let d = SuperDim::new(m, n);
            let total: u64 = partitions_of(3)
                .iter()
                .map(|l| count_standard_tableaux(l) * graded_dimension(l, d).total() as u64)
                .sum();
            assert_eq!(total, (d.total() as u64).pow(3));
        }
    }
}

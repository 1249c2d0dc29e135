//! Executable checks over the concrete model: vanishing sets, super-dimension
//! recovery, property S verdicts, dim-exactness and the filtration inequality.

use crate::error::{Error, Result};
use crate::partitions::{
    lr_coefficient, partitions_of, partitions_up_to_with_limit, rectangle, subpartitions, Partition,
};
use crate::schur::{graded_dimension, schur_apply_map, schur_apply_space, superdim_of_rectangle, vanishes, Caps};
use crate::supervec::{
    categorical_trace, is_invertible, left_inverse, right_inverse, SuperDim, SuperMap, SuperSpace, ZeroSequence,
};

/// Tensor powers above this many basis vectors skip the dense cross-check of
/// a property S witness.
const DENSE_CHECK_LIMIT: usize = 1024;

/// `{λ : S_λ(V) = 0, |λ| ≤ bound}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VanishingSet {
    pub bound: usize,
    pub source_dim: SuperDim,
    /// In enumeration order: by size, then lexicographically descending.
    pub members: Vec<Partition>,
}

impl VanishingSet {
    pub fn contains(&self, lambda: &Partition) -> bool {
        self.members.contains(lambda)
    }
}

/// Computes `Σ(V)` up to `bound` from explicit realizations of `S_λ(V)`, and
/// checks that it is upward closed before returning it.
pub fn vanishing_set(v: &SuperSpace, bound: usize, caps: &Caps) -> Result<VanishingSet> {
    let candidates = partitions_up_to_with_limit(bound, caps.max_degree)?;
    let mut members = Vec::new();
    for lambda in candidates {
        if schur_apply_space(&lambda, v, caps)?.space.is_zero() {
            members.push(lambda);
        }
    }
    let set = VanishingSet { bound, source_dim: v.dim(), members };
    for lambda in &set.members {
        for bigger in lambda.add_one_box() {
            if bigger.size() <= bound && !set.contains(&bigger) {
                return Err(Error::Internal(format!("S_{lambda:?} vanishes on {} but S_{bigger:?} does not", v.dim())));
            }
        }
    }
    Ok(set)
}

/// Reads a super-dimension off a vanishing oracle: the unique minimal
/// rectangle it contains fixes `m|n`.
///
/// Every rectangle of size at most `cap` is queried; a vanishing rectangle
/// contained in a non-vanishing one is reported as a contract violation.
pub fn superdim_from_vanishing<F>(mut oracle: F, cap: usize) -> Result<SuperDim>
where
    F: FnMut(&Partition) -> Result<bool>,
{
    let mut queried = Vec::new();
    for rows in 1..=cap {
        for cols in 1..=cap / rows {
            let r = rectangle(rows, cols);
            let vanishing = oracle(&r)?;
            queried.push((rows, cols, vanishing));
        }
    }
    for &(r1, c1, v1) in &queried {
        for &(r2, c2, v2) in &queried {
            if v1 && !v2 && r1 <= r2 && c1 <= c2 {
                return Err(Error::ContractViolation(format!("rectangle {r1}x{c1} vanishes but {r2}x{c2} does not")));
            }
        }
    }
    let vanishing: Vec<(usize, usize)> = queried.iter().filter(|q| q.2).map(|q| (q.0, q.1)).collect();
    let minimal: Vec<(usize, usize)> = vanishing
        .iter()
        .copied()
        .filter(|&(r, c)| !vanishing.iter().any(|&(r2, c2)| (r2, c2) != (r, c) && r2 <= r && c2 <= c))
        .collect();
    match minimal.as_slice() {
        [] => Err(Error::CapTooSmall { cap }),
        [(rows, cols)] => Ok(superdim_of_rectangle(*rows, *cols)),
        several => Err(Error::ContractViolation(format!("no unique minimal vanishing rectangle: {several:?}"))),
    }
}

/// The smallest `λ` with `S_λ(V) = 0`, with every proper subdiagram
/// re-verified to be non-vanishing.
pub fn minimal_vanishing_partition(v: &SuperSpace, caps: &Caps) -> Result<Partition> {
    minimal_vanishing_for_dim(v.dim(), caps)
}

fn minimal_vanishing_for_dim(dim: SuperDim, caps: &Caps) -> Result<Partition> {
    for size in 1..=caps.max_degree {
        for lambda in partitions_of(size) {
            if !vanishes(&lambda, dim, caps)? {
                continue;
            }
            for mu in subpartitions(&lambda) {
                if mu != lambda && vanishes(&mu, dim, caps)? {
                    return Err(Error::Internal(format!("S_{mu:?} vanishes on {dim} below {lambda:?}")));
                }
            }
            return Ok(lambda);
        }
    }
    Err(Error::CapTooSmall { cap: caps.max_degree })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VerdictStatus {
    Consistent,
    Inconsistent,
    Inconclusive,
}

/// Outcome of checking "f is mono iff every `S_λ` killing `f` kills its
/// domain" for one map, up to a size bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PropertySVerdict {
    pub is_mono: bool,
    pub bound: usize,
    /// `λ` with `S_λ(f) = 0` and `S_λ(M) ≠ 0`.
    pub witness: Option<Partition>,
    pub consistent: bool,
    pub status: VerdictStatus,
    /// Rank of `f` per parity: the dimension of the iso summand.
    pub coimage_dim: SuperDim,
    /// For a mono: a retraction `g ∘ f = id` was found and checked, so every
    /// `S_λ(f)` is split mono and no witness exists at any size.
    pub retraction_verified: bool,
    /// Largest size swept partition by partition.
    pub swept_to: usize,
    /// Result of computing `S_λ(f)` densely for the witness, when small enough.
    pub direct_check: Option<bool>,
    /// Witness size needed to decide a non-mono.
    pub required_bound: Option<usize>,
}

/// Checks property S for `f` up to partitions of size `bound`.
///
/// Schur functors are evaluated through the normal form
/// `f = B ∘ std_r ∘ A^{-1}`: `S_λ(f) = 0` exactly when `S_λ` kills a space
/// of super-dimension `rank f`. For a non-mono the witness is the minimal
/// vanishing partition of that rank; a sweep over every `|λ| ≤ bound`
/// confirms no other answer.
pub fn check_property_s(f: &SuperMap, bound: usize, caps: &Caps) -> Result<PropertySVerdict> {
    let nf = f.normal_form();
    if !nf.verify(f)? {
        return Err(Error::Internal("normal form does not reproduce the map".into()));
    }
    let rank = nf.rank;
    let source = f.domain().dim();
    let is_mono = f.is_mono();
    let swept_to = bound.min(caps.max_degree);

    let mut sweep_witness = None;
    'sweep: for size in 1..=swept_to {
        for lambda in partitions_of(size) {
            if vanishes(&lambda, rank, caps)? && !vanishes(&lambda, source, caps)? {
                sweep_witness = Some(lambda);
                break 'sweep;
            }
        }
    }

    let mut verdict = PropertySVerdict {
        is_mono,
        bound,
        witness: None,
        consistent: false,
        status: VerdictStatus::Inconsistent,
        coimage_dim: rank,
        retraction_verified: false,
        swept_to,
        direct_check: None,
        required_bound: None,
    };

    if is_mono {
        let g = left_inverse(f).ok_or_else(|| Error::Internal("mono without a retraction".into()))?;
        verdict.retraction_verified = g.compose(f)? == SuperMap::identity(f.domain());
        verdict.consistent = verdict.retraction_verified && sweep_witness.is_none();
        verdict.status = if verdict.consistent { VerdictStatus::Consistent } else { VerdictStatus::Inconsistent };
        return Ok(verdict);
    }

    let lambda = match minimal_vanishing_for_dim(rank, caps) {
        Ok(lambda) => lambda,
        Err(Error::CapTooSmall { .. }) => {
            verdict.status = VerdictStatus::Inconclusive;
            return Ok(verdict);
        }
        Err(e) => return Err(e),
    };
    verdict.required_bound = Some(lambda.size());
    if lambda.size() > bound {
        verdict.status = VerdictStatus::Inconclusive;
        return Ok(verdict);
    }
    let kills_f = vanishes(&lambda, rank, caps)?;
    let keeps_source = !vanishes(&lambda, source, caps)?;
    verdict.direct_check = dense_witness_check(&lambda, f)?;
    let sweep_agrees = sweep_witness.as_ref().is_some_and(|w| w.size() <= lambda.size());
    verdict.consistent = kills_f && keeps_source && verdict.direct_check != Some(false) && sweep_agrees;
    verdict.status = if verdict.consistent { VerdictStatus::Consistent } else { VerdictStatus::Inconsistent };
    verdict.witness = Some(lambda);
    Ok(verdict)
}

/// The dual statement: `f` is epi iff every `S_λ` killing `f` kills its
/// codomain. Checked as property S of the transpose.
pub fn check_property_s_op(f: &SuperMap, bound: usize, caps: &Caps) -> Result<PropertySVerdict> {
    check_property_s(&f.dual(), bound, caps)
}

/// Computes `S_λ(f)` and `S_λ(M)` explicitly when the tensor powers are small.
fn dense_witness_check(lambda: &Partition, f: &SuperMap) -> Result<Option<bool>> {
    let n = lambda.size() as u32;
    let largest = f.domain().total().max(f.codomain().total());
    if n > 6 || largest.checked_pow(n).is_none_or(|t| t > DENSE_CHECK_LIMIT) {
        return Ok(None);
    }
    let caps = Caps { max_degree: 6, max_space_dim: largest };
    let map = schur_apply_map(lambda, f, &caps)?;
    Ok(Some(map.is_zero() && !map.domain().is_zero()))
}

/// Both sides of `dim M ≥ dim M' + dim M''` for a sequence with `i` mono and
/// `p` epi.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DimExactReport {
    pub lhs: SuperDim,
    pub rhs: SuperDim,
    pub equal: bool,
    pub exact: bool,
}

pub fn is_dim_exact(e: &ZeroSequence) -> Result<DimExactReport> {
    if !e.i.is_mono() {
        return Err(Error::Precondition("i is not mono".into()));
    }
    if !e.p.is_epi() {
        return Err(Error::Precondition("p is not epi".into()));
    }
    let lhs = e.middle().dim();
    let rhs = e.left().dim() + e.right().dim();
    if rhs.partial_cmp(&lhs).is_none_or(|o| o.is_gt()) {
        return Err(Error::Internal(format!("dim M = {lhs} is below {rhs}")));
    }
    let report = DimExactReport { lhs, rhs, equal: lhs == rhs, exact: e.is_exact_at_middle() };
    if report.equal != report.exact {
        return Err(Error::Internal(format!("dimension equality {} but exactness {}", report.equal, report.exact)));
    }
    Ok(report)
}

/// For a dim-exact sequence, the induced `coker i -> M''` is mono and epi.
pub fn check_theorem_p2b(e: &ZeroSequence) -> Result<bool> {
    if !is_dim_exact(e)?.equal {
        return Err(Error::Precondition("sequence is not dim-exact".into()));
    }
    let q = e.i.cokernel();
    let section = right_inverse(&q).ok_or_else(|| Error::Internal("cokernel is not epi".into()))?;
    let induced = e.p.compose(&section)?;
    if induced.compose(&q)? != e.p {
        return Err(Error::Internal("induced map does not factor p".into()));
    }
    Ok(induced.is_mono() && induced.is_epi())
}

/// `dim M ≤ dim M' + dim M''` for `M' -> M -> M'' -> 0` exact.
pub fn check_p4_inequality(e: &ZeroSequence) -> Result<bool> {
    if !e.is_exact_at_middle() {
        return Err(Error::Precondition("sequence is not exact at M".into()));
    }
    if !e.p.is_epi() {
        return Err(Error::Precondition("second map is not epi".into()));
    }
    Ok(e.middle().dim() <= e.left().dim() + e.right().dim())
}

/// Both sides of `dim S_λ(V ⊕ W) = Σ c^λ_{μν} dim S_μ(V) ⊗ S_ν(W)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SchurSumReport {
    pub lhs: SuperDim,
    pub rhs: SuperDim,
}

impl SchurSumReport {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

pub fn schur_of_sum(lambda: &Partition, v: SuperDim, w: SuperDim) -> SchurSumReport {
    let lhs = graded_dimension(lambda, v + w);
    let mut rhs = SuperDim::ZERO;
    for mu in subpartitions(lambda) {
        for nu in partitions_of(lambda.size() - mu.size()) {
            let c = lr_coefficient(lambda, &mu, &nu) as usize;
            if c > 0 {
                rhs = rhs + graded_dimension(&mu, v).tensor(graded_dimension(&nu, w)).scale(c);
            }
        }
    }
    SchurSumReport { lhs, rhs }
}

pub fn check_schur_of_sum(lambda: &Partition, v: &SuperSpace, w: &SuperSpace) -> bool {
    schur_of_sum(lambda, v.dim(), w.dim()).holds()
}

/// One line of the super-dimension suite.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct L4Item {
    pub index: usize,
    pub check: &'static str,
    pub pass: bool,
    pub details: String,
}

/// Additivity, zero detection, monotonicity along monos and epis, the
/// mono-epi consequence of equality, the supertrace of identities, and
/// invertibility, for every map in `corpus` and its endpoints.
pub fn l4_suite(corpus: &[SuperMap]) -> Vec<L4Item> {
    corpus.iter().enumerate().flat_map(|(index, f)| l4_items(index, f)).collect()
}

fn l4_items(index: usize, f: &SuperMap) -> Vec<L4Item> {
    let m = f.domain();
    let n = f.codomain();
    let (dm, dn) = (m.dim(), n.dim());
    let item = |check, pass, details: String| L4Item { index, check, pass, details };
    let mut out = Vec::new();

    let sum = SuperMap::identity(m).direct_sum(&SuperMap::identity(n));
    out.push(item("additivity", sum.rank() == dm + dn, format!("{dm} + {dn} = {}", sum.rank())));

    let zero_ok =
        [m, n].iter().all(|s| s.is_zero() == SuperMap::identity(*s).is_zero() && s.is_zero() == s.dim().is_zero());
    out.push(item("zero", zero_ok, format!("{dm}, {dn}")));

    let mono = f.is_mono();
    let epi = f.is_epi();
    let monotone = (!mono || dm <= dn) && (!epi || dn <= dm);
    out.push(item("monotone", monotone, format!("{dm} -> {dn}, mono {mono}, epi {epi}")));

    let equality = dm != dn || (mono == epi);
    out.push(item("equality", equality, format!("{dm} -> {dn}, mono {mono}, epi {epi}")));

    let traces_ok = [m, n].iter().all(|s| {
        let id = SuperMap::identity(*s);
        let expected = crate::linalg::q(s.dim().euler());
        id.supertrace().ok() == Some(expected.clone()) && categorical_trace(&id).ok() == Some(expected)
    });
    out.push(item("supertrace", traces_ok, format!("{} and {}", dm.euler(), dn.euler())));

    let invertible_ok = [m, n].iter().all(|s| {
        let expected = s.dim() == SuperDim::new(1, 0) || s.dim() == SuperDim::new(0, 1);
        is_invertible(s) == expected
    });
    out.push(item("invertible", invertible_ok, format!("{dm}, {dn}")));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Matrix;
    use crate::partitions::partitions_up_to;

    fn p(parts: &[usize]) -> Partition {
        Partition::from_parts(parts)
    }

    fn sm(dom: (usize, usize), cod: (usize, usize), even: &[i64], odd: &[i64]) -> SuperMap {
        let d = SuperSpace::new(dom.0, dom.1);
        let c = SuperSpace::new(cod.0, cod.1);
        SuperMap::new(d, c, Matrix::from_i64(c.even(), d.even(), even), Matrix::from_i64(c.odd(), d.odd(), odd))
            .unwrap()
    }

    #[test]
    fn vanishing_set_examples() {
        let caps = Caps::default();
        let line = vanishing_set(&SuperSpace::new(1, 0), 3, &caps).unwrap();
        assert_eq!(line.members, vec![p(&[1, 1]), p(&[2, 1]), p(&[1, 1, 1])]);
        let zero = vanishing_set(&SuperSpace::zero(), 2, &caps).unwrap();
        assert_eq!(zero.members, partitions_up_to(2).unwrap());
        let big = vanishing_set(&SuperSpace::new(2, 1), 5, &caps).unwrap();
        assert!(big.members.is_empty());
        let at_six = vanishing_set(&SuperSpace::new(2, 1), 6, &caps).unwrap();
        assert_eq!(at_six.members, vec![p(&[2, 2, 2])]);
    }

    #[test]
    fn recovers_dimensions() {
        let caps = Caps::default();
        for (m, n) in [(1, 1), (2, 0), (0, 0), (0, 2), (2, 1), (1, 2), (3, 0), (0, 3)] {
            let v = SuperSpace::new(m, n);
            let set = vanishing_set(&v, 6, &caps).unwrap();
            let got = superdim_from_vanishing(|l| Ok(set.contains(l)), 6).unwrap();
            assert_eq!(got, v.dim());
        }
        assert_eq!(superdim_from_vanishing(|_| Ok(true), 4).unwrap(), SuperDim::ZERO);
    }

    #[test]
    fn recovery_errors() {
        assert_eq!(superdim_from_vanishing(|_| Ok(false), 4), Err(Error::CapTooSmall { cap: 4 }));
        let bad = superdim_from_vanishing(|l| Ok(l.size() == 2), 4);
        assert!(matches!(bad, Err(Error::ContractViolation(_))));
    }

    #[test]
    fn minimal_vanishing_examples() {
        let caps = Caps::default();
        assert_eq!(minimal_vanishing_partition(&SuperSpace::new(1, 0), &caps).unwrap(), p(&[1, 1]));
        assert_eq!(minimal_vanishing_partition(&SuperSpace::new(1, 1), &caps).unwrap(), p(&[2, 2]));
        assert_eq!(minimal_vanishing_partition(&SuperSpace::zero(), &caps).unwrap(), p(&[1]));
        assert_eq!(minimal_vanishing_partition(&SuperSpace::new(3, 1), &caps), Err(Error::CapTooSmall { cap: 7 }));
    }

    #[test]
    fn property_s_examples() {
        let caps = Caps::default();
        let incl = sm((1, 0), (2, 0), &[1, 0], &[]);
        let v = check_property_s(&incl, 4, &caps).unwrap();
        assert!(v.is_mono && v.consistent && v.witness.is_none() && v.retraction_verified);

        let zero = SuperMap::zero(SuperSpace::new(1, 0), SuperSpace::new(1, 0));
        let v = check_property_s(&zero, 4, &caps).unwrap();
        assert!(!v.is_mono && v.consistent);
        assert_eq!(v.witness, Some(p(&[1])));

        let rank_one = sm((2, 0), (2, 0), &[1, 2, 2, 4], &[]);
        let v = check_property_s(&rank_one, 4, &caps).unwrap();
        assert!(!v.is_mono && v.consistent);
        assert_eq!(v.witness, Some(p(&[1, 1])));
        assert_eq!(v.direct_check, Some(true));

        let inconclusive = check_property_s(&rank_one, 1, &caps).unwrap();
        assert_eq!(inconclusive.status, VerdictStatus::Inconclusive);
        assert!(!inconclusive.consistent);
        assert_eq!(inconclusive.required_bound, Some(2));
    }

    #[test]
    fn property_s_op_examples() {
        let caps = Caps::default();
        let proj = sm((2, 0), (1, 0), &[1, 1], &[]);
        let v = check_property_s_op(&proj, 4, &caps).unwrap();
        assert!(v.is_mono && v.consistent);
        let not_epi = sm((1, 1), (1, 1), &[1], &[0]);
        let v = check_property_s_op(&not_epi, 4, &caps).unwrap();
        assert!(!v.is_mono && v.consistent);
        assert_eq!(v.witness, Some(p(&[1, 1])));
    }

    #[test]
    fn schur_map_witness_from_split() {
        // iso ⊕ 0 on 1|0 ⊕ 1|0: S_(1,1) kills the iso part's source
        let f = SuperMap::identity(SuperSpace::new(1, 0))
            .direct_sum(&SuperMap::zero(SuperSpace::new(1, 0), SuperSpace::new(1, 0)));
        let lambda = minimal_vanishing_partition(&SuperSpace::new(1, 0), &Caps::default()).unwrap();
        let s = schur_apply_map(&lambda, &f, &Caps::default()).unwrap();
        assert!(s.is_zero());
        assert!(!s.domain().is_zero());
    }

    #[test]
    fn dim_exact_examples() {
        let split = ZeroSequence::new(sm((1, 0), (1, 1), &[1], &[]), sm((1, 1), (0, 1), &[], &[1])).unwrap();
        let r = is_dim_exact(&split).unwrap();
        assert!(r.equal && r.exact);
        assert!(check_theorem_p2b(&split).unwrap());

        let gap = ZeroSequence::new(sm((1, 0), (3, 0), &[1, 0, 0], &[]), sm((3, 0), (1, 0), &[0, 0, 1], &[])).unwrap();
        let r = is_dim_exact(&gap).unwrap();
        assert!(!r.equal && !r.exact);
        assert_eq!((r.lhs, r.rhs), (SuperDim::new(3, 0), SuperDim::new(2, 0)));
        assert!(matches!(check_theorem_p2b(&gap), Err(Error::Precondition(_))));

        let skew = ZeroSequence::new(sm((1, 0), (2, 0), &[1, 1], &[]), sm((2, 0), (1, 0), &[2, -2], &[])).unwrap();
        assert!(is_dim_exact(&skew).unwrap().equal);
        assert!(check_theorem_p2b(&skew).unwrap());

        let not_mono = ZeroSequence::new(sm((1, 0), (1, 0), &[0], &[]), sm((1, 0), (1, 0), &[1], &[])).unwrap();
        assert_eq!(is_dim_exact(&not_mono), Err(Error::Precondition("i is not mono".into())));
    }

    #[test]
    fn p4_examples() {
        let e = ZeroSequence::new(sm((1, 0), (2, 0), &[1, 0], &[]), sm((2, 0), (1, 0), &[0, 1], &[])).unwrap();
        assert!(check_p4_inequality(&e).unwrap());
        let rank_one =
            ZeroSequence::new(sm((2, 0), (2, 0), &[1, 1, 0, 0], &[]), sm((2, 0), (1, 0), &[0, 1], &[])).unwrap();
        assert!(check_p4_inequality(&rank_one).unwrap());
        let iso = ZeroSequence::new(
            SuperMap::zero(SuperSpace::zero(), SuperSpace::new(1, 1)),
            SuperMap::identity(SuperSpace::new(1, 1)),
        )
        .unwrap();
        assert!(check_p4_inequality(&iso).unwrap());
        let not_exact = ZeroSequence::new(
            SuperMap::zero(SuperSpace::zero(), SuperSpace::new(2, 0)),
            sm((2, 0), (1, 0), &[1, 0], &[]),
        )
        .unwrap();
        assert!(matches!(check_p4_inequality(&not_exact), Err(Error::Precondition(_))));
    }

    #[test]
    fn schur_of_sum_examples() {
        let r = schur_of_sum(&p(&[2]), SuperDim::new(1, 0), SuperDim::new(1, 0));
        assert_eq!(r.lhs, SuperDim::new(3, 0));
        assert!(r.holds());
        assert!(check_schur_of_sum(&p(&[1]), &SuperSpace::new(2, 1), &SuperSpace::new(0, 2)));
        let r = schur_of_sum(&p(&[2, 2]), SuperDim::new(1, 0), SuperDim::new(0, 1));
        assert_eq!((r.lhs, r.rhs), (SuperDim::ZERO, SuperDim::ZERO));
    }

    #[test]
    fn l4_examples() {
        let mono = sm((1, 1), (2, 1), &[1, 0], &[1]);
        let items = l4_suite(&[mono, SuperMap::identity(SuperSpace::new(3, 1))]);
        assert!(items.iter().all(|i| i.pass), "{items:?}");
        assert_eq!(items.len(), 12);
    }
}

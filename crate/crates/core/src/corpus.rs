//! Seeded random inputs for the suites. Every corpus draws from its own
//! ChaCha stream of the given seed, so corpora are independent of each other
//! and of evaluation order.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::linalg::{q, Matrix};
use crate::supervec::{SuperDim, SuperMap, SuperSpace, ZeroSequence};

/// Entries of random matrices are drawn from `-ENTRY..=ENTRY`.
pub const ENTRY: i64 = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Stream {
    Maps = 1,
    ZeroSequences = 2,
    RightExact = 3,
    Composable = 4,
    Parallel = 5,
    FromLine = 6,
}

fn rng_for(seed: u64, stream: Stream) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream as u64);
    rng
}

fn random_space(rng: &mut impl Rng, max: SuperDim) -> SuperSpace {
    SuperSpace::new(rng.random_range(0..=max.even), rng.random_range(0..=max.odd))
}

fn random_block(rng: &mut impl Rng, rows: usize, cols: usize) -> Matrix {
    let mut m = Matrix::zeros(rows, cols);
    for r in 0..rows {
        for c in 0..cols {
            m[(r, c)] = q(rng.random_range(-ENTRY..=ENTRY));
        }
    }
    m
}

/// A random block of full rank `min(rows, cols)`.
fn random_full_rank(rng: &mut impl Rng, rows: usize, cols: usize) -> Matrix {
    loop {
        let m = random_block(rng, rows, cols);
        if m.rank() == rows.min(cols) {
            return m;
        }
    }
}

/// Zeroes or duplicates a column now and then so rank drops are common.
fn degrade(rng: &mut impl Rng, m: &mut Matrix) {
    if m.cols() == 0 || m.rows() == 0 {
        return;
    }
    if rng.random_bool(0.3) {
        let c = rng.random_range(0..m.cols());
        for r in 0..m.rows() {
            m[(r, c)] = q(0);
        }
    }
    if m.cols() > 1 && rng.random_bool(0.25) {
        let from = rng.random_range(0..m.cols());
        let to = rng.random_range(0..m.cols());
        for r in 0..m.rows() {
            m[(r, to)] = m[(r, from)].clone();
        }
    }
}

fn random_map_between(rng: &mut impl Rng, dom: SuperSpace, cod: SuperSpace) -> SuperMap {
    let mut even = random_block(rng, cod.even(), dom.even());
    let mut odd = random_block(rng, cod.odd(), dom.odd());
    degrade(rng, &mut even);
    degrade(rng, &mut odd);
    SuperMap::new(dom, cod, even, odd).expect("blocks are shaped by construction")
}

/// A random map with both endpoints at most `max`; endomorphisms and
/// isomorphisms are over-represented so equal-dimension cases occur.
pub fn random_map(rng: &mut impl Rng, max: SuperDim) -> SuperMap {
    let dom = random_space(rng, max);
    let cod = if rng.random_bool(0.25) { dom } else { random_space(rng, max) };
    if dom == cod && rng.random_bool(0.3) {
        let even = random_full_rank(rng, dom.even(), dom.even());
        let odd = random_full_rank(rng, dom.odd(), dom.odd());
        return SuperMap::new(dom, cod, even, odd).expect("square blocks");
    }
    random_map_between(rng, dom, cod)
}

pub fn map_corpus(seed: u64, count: usize, max: SuperDim) -> Vec<SuperMap> {
    let mut rng = rng_for(seed, Stream::Maps);
    (0..count).map(|_| random_map(&mut rng, max)).collect()
}

/// Sequences `M' -i-> M -p-> M''` with `i` mono, `p` epi and `p ∘ i = 0`.
///
/// `p` is a random surjection composed with the cokernel of `i`, so the
/// sequence is exact exactly when that surjection is an isomorphism, which
/// happens about half the time.
pub fn zero_sequence_corpus(seed: u64, count: usize, max_middle: SuperDim) -> Vec<ZeroSequence> {
    let mut rng = rng_for(seed, Stream::ZeroSequences);
    (0..count)
        .map(|_| {
            let middle = random_space(&mut rng, max_middle);
            let left = random_space(&mut rng, middle.dim());
            let i = SuperMap::new(
                left,
                middle,
                random_full_rank(&mut rng, middle.even(), left.even()),
                random_full_rank(&mut rng, middle.odd(), left.odd()),
            )
            .expect("shaped");
            let quotient = i.cokernel();
            let c = quotient.codomain();
            let right = if rng.random_bool(0.5) { c } else { random_space(&mut rng, c.dim()) };
            let surjection = SuperMap::new(
                c,
                right,
                random_full_rank(&mut rng, right.even(), c.even()),
                random_full_rank(&mut rng, right.odd(), c.odd()),
            )
            .expect("shaped");
            let p = surjection.compose(&quotient).expect("composable");
            ZeroSequence::new(i, p).expect("p kills the image of i")
        })
        .collect()
}

/// Exact sequences `M' -g-> M -p-> M'' -> 0`: `p` a random epi and `g` a
/// random surjection onto `ker p`, often with a kernel of its own.
pub fn right_exact_corpus(seed: u64, count: usize, max_middle: SuperDim) -> Vec<ZeroSequence> {
    let mut rng = rng_for(seed, Stream::RightExact);
    (0..count)
        .map(|_| {
            let middle = random_space(&mut rng, max_middle);
            let right = random_space(&mut rng, middle.dim());
            let p = SuperMap::new(
                middle,
                right,
                random_full_rank(&mut rng, right.even(), middle.even()),
                random_full_rank(&mut rng, right.odd(), middle.odd()),
            )
            .expect("shaped");
            let k = p.kernel();
            let kd = k.domain();
            let left = SuperSpace::new(kd.even() + rng.random_range(0..=2), kd.odd() + rng.random_range(0..=2));
            let h = SuperMap::new(
                left,
                kd,
                random_full_rank(&mut rng, kd.even(), left.even()),
                random_full_rank(&mut rng, kd.odd(), left.odd()),
            )
            .expect("shaped");
            let g = k.compose(&h).expect("composable");
            ZeroSequence::new(g, p).expect("g lands in ker p")
        })
        .collect()
}

/// Pairs `(f, g)` with `g ∘ f` defined.
pub fn composable_pairs(seed: u64, count: usize, max: SuperDim) -> Vec<(SuperMap, SuperMap)> {
    let mut rng = rng_for(seed, Stream::Composable);
    (0..count)
        .map(|_| {
            let a = random_space(&mut rng, max);
            let b = random_space(&mut rng, max);
            let c = random_space(&mut rng, max);
            (random_map_between(&mut rng, a, b), random_map_between(&mut rng, b, c))
        })
        .collect()
}

/// Distinct pairs `f ≠ g` with the same domain and codomain.
pub fn parallel_pairs(seed: u64, count: usize, max: SuperDim) -> Vec<(SuperMap, SuperMap)> {
    assert!(max.total() > 0, "no distinct maps between zero spaces");
    let mut rng = rng_for(seed, Stream::Parallel);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let dom = random_space(&mut rng, max);
        let cod = random_space(&mut rng, max);
        let f = random_map_between(&mut rng, dom, cod);
        let g = random_map_between(&mut rng, dom, cod);
        if f != g {
            out.push((f, g));
        }
    }
    out
}

/// Nonzero maps out of `1|0` or `0|1`.
pub fn maps_from_line(seed: u64, count: usize, max: SuperDim) -> Vec<SuperMap> {
    let mut rng = rng_for(seed, Stream::FromLine);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let line = if rng.random_bool(0.5) { SuperSpace::new(1, 0) } else { SuperSpace::new(0, 1) };
        let cod = random_space(&mut rng, max);
        let f = random_map_between(&mut rng, line, cod);
        if !f.is_zero() {
            out.push(f);
        }
    }
    out
}

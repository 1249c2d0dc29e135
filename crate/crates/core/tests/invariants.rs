use proptest::prelude::*;

use superschur::calculus::{superdim_from_vanishing, vanishing_set};
use superschur::linalg::{q, Matrix};
use superschur::partitions::{partitions_up_to, Partition};
use superschur::schur::{schur_apply_map, Caps};
use superschur::suite::dims_up_to;
use superschur::supervec::{name, SuperMap, SuperSpace};

fn block(rows: usize, cols: usize) -> impl Strategy<Value = Matrix> {
    prop::collection::vec(-2i64..=2, rows * cols).prop_map(move |v| Matrix::from_i64(rows, cols, &v))
}

fn map_between(dom: SuperSpace, cod: SuperSpace) -> impl Strategy<Value = SuperMap> {
    (block(cod.even(), dom.even()), block(cod.odd(), dom.odd()))
        .prop_map(move |(e, o)| SuperMap::new(dom, cod, e, o).unwrap())
}

fn space(max: usize) -> impl Strategy<Value = SuperSpace> {
    (0..=max, 0..=max).prop_map(|(m, n)| SuperSpace::new(m, n))
}

fn any_map(max: usize) -> impl Strategy<Value = SuperMap> {
    (space(max), space(max)).prop_flat_map(|(d, c)| map_between(d, c))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn rank_nullity(f in any_map(3)) {
        prop_assert_eq!(f.domain().dim(), f.kernel().domain().dim() + f.image().domain().dim());
        prop_assert!(f.kernel().is_mono());
        prop_assert!(f.cokernel().is_epi());
        let (epi, mono) = f.image_factorization();
        prop_assert_eq!(mono.compose(&epi).unwrap(), f.clone());
    }

    #[test]
    fn mono_epi_duality(f in any_map(3)) {
        prop_assert_eq!(f.is_mono(), f.dual().is_epi());
        prop_assert_eq!(f.is_epi(), f.dual().is_mono());
    }

    #[test]
    fn kernels_and_cokernels_commute_with_tensoring(f in any_map(2), p in space(2)) {
        let id = SuperMap::identity(p);
        let ft = f.tensor(&id);
        prop_assert_eq!(ft.kernel().domain().dim(), f.kernel().domain().dim().tensor(p.dim()));
        prop_assert_eq!(ft.cokernel().codomain().dim(), f.cokernel().codomain().dim().tensor(p.dim()));
    }

    #[test]
    fn supertrace_is_cyclic((f, g) in (space(3), space(3)).prop_flat_map(|(a, b)| (map_between(a, b), map_between(b, a)))) {
        prop_assert_eq!(g.compose(&f).unwrap().supertrace().unwrap(), f.compose(&g).unwrap().supertrace().unwrap());
    }

    #[test]
    fn names_separate((f, g) in (space(2), space(2)).prop_flat_map(|(a, b)| (map_between(a, b), map_between(a, b)))) {
        prop_assert_eq!(f == g, name(&f) == name(&g));
    }

    #[test]
    fn maps_out_of_a_line_are_mono(f in (0..2usize, space(2)).prop_flat_map(|(odd, c)| map_between(SuperSpace::new(1 - odd, odd), c))) {
        prop_assert_eq!(f.is_mono(), !f.is_zero());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    /// Isomorphic spaces have isomorphic Schur functor values.
    #[test]
    fn schur_functors_preserve_isomorphisms(
        f in space(2).prop_flat_map(|v| map_between(v, v)).prop_filter("iso", |f| f.is_iso()),
        k in 0usize..11,
    ) {
        let lambda = partitions_up_to(4).unwrap()[k].clone();
        let s = schur_apply_map(&lambda, &f, &Caps::default()).unwrap();
        prop_assert!(s.is_iso());
    }
}

#[test]
fn vanishing_sets_are_sieves_and_recover_dimensions() {
    let caps = Caps::default();
    for d in dims_up_to(3) {
        // vanishing_set itself refuses to return a set that is not upward closed
        let set = vanishing_set(&SuperSpace::of_dim(d), 6, &caps).unwrap();
        for lambda in &set.members {
            for mu in partitions_up_to(6).unwrap() {
                if mu.contains(lambda) {
                    assert!(set.contains(&mu), "{d}: {lambda:?} in, {mu:?} out");
                }
            }
        }
        let recovered = superdim_from_vanishing(|l: &Partition| Ok(set.contains(l)), 6).unwrap();
        assert_eq!(recovered, d);
    }
}

#[test]
fn zero_object_is_killed_by_everything() {
    let set = vanishing_set(&SuperSpace::zero(), 4, &Caps::default()).unwrap();
    assert_eq!(set.members, partitions_up_to(4).unwrap());
    let s = schur_apply_map(
        &Partition::from_parts(&[2, 1]),
        &SuperMap::scalar(SuperSpace::new(1, 1), &q(3)),
        &Caps::default(),
    )
    .unwrap();
    // S_λ(3·id) = 3^{|λ|}·id
    assert_eq!(s, SuperMap::scalar(s.domain(), &q(27)));
}

//! The seeded verification suites behind `suite l4|props|all`.

use std::collections::HashMap;

use rayon::prelude::*;

use crate::calculus::{
    check_p4_inequality, check_property_s, check_property_s_op, check_theorem_p2b, is_dim_exact, l4_suite,
    schur_of_sum, PropertySVerdict, VerdictStatus,
};
use crate::corpus;
use crate::error::Result;
use crate::partitions::{partitions_up_to, Partition};
use crate::report::{Entry, Report, Verdict};
use crate::schur::{schur_apply_map_between, schur_apply_space, vanishes, vanishing_rectangle, Caps, SchurObject};
use crate::supervec::{name, unname, SuperDim, SuperMap, SuperSpace};

/// Corpus sizes and shapes.
pub const MAP_CORPUS: usize = 300;
pub const MAP_MAX: SuperDim = SuperDim { even: 3, odd: 2 };
pub const SEQUENCE_CORPUS: usize = 100;
pub const SEQUENCE_MAX: SuperDim = SuperDim { even: 3, odd: 3 };
pub const PAIR_CORPUS: usize = 100;
pub const PAIR_MAX: SuperDim = SuperDim { even: 2, odd: 2 };
pub const FUNCTORIALITY_PAIRS: usize = 50;
pub const FUNCTORIALITY_DEGREE: usize = 4;

/// Property S on maps up to `3|2` needs partitions up to `3x3` and spaces
/// with five basis vectors, above the interactive defaults.
pub const PROPERTY_S_CAPS: Caps = Caps { max_degree: 9, max_space_dim: 5 };

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum SuiteKind {
    L4,
    Props,
    All,
}

/// Runs a suite. `bound` is the sweep size used for monos; non-monos are
/// checked at the size of their constructed witness.
pub fn run(kind: SuiteKind, seed: u64, bound: usize) -> Result<Report> {
    let mut report = Report::default();
    if matches!(kind, SuiteKind::L4 | SuiteKind::All) {
        report.extend(l4(seed));
    }
    if matches!(kind, SuiteKind::Props | SuiteKind::All) {
        report.extend(props(seed, bound)?);
    }
    Ok(report)
}

pub fn l4(seed: u64) -> Report {
    let maps = corpus::map_corpus(seed, MAP_CORPUS, MAP_MAX);
    let mut report = Report::default();
    for item in l4_suite(&maps) {
        report.push(
            Entry::new(format!("l4-{}", item.check), Verdict::from_bool(item.pass), item.details).at(item.index, seed),
        );
    }
    report
}

pub fn props(seed: u64, bound: usize) -> Result<Report> {
    let mut report = Report::default();
    let maps = corpus::map_corpus(seed, MAP_CORPUS, MAP_MAX);
    report.extend(property_s_entries("property-s", &maps, seed, bound, check_property_s)?);
    report.extend(property_s_entries("property-s-op", &maps, seed, bound, check_property_s_op)?);
    report.extend(dim_exact_entries(seed)?);
    report.extend(p4_entries(seed)?);
    report.extend(schur_of_sum_entries()?);
    report.extend(rectangle_entries()?);
    report.extend(functoriality_entries(seed)?);
    report.extend(name_entries(seed)?);
    report.extend(line_entries(seed));
    Ok(report)
}

type Checker = fn(&SuperMap, usize, &Caps) -> Result<PropertySVerdict>;

/// Decides a non-mono at the size of its witness; monos are swept to `bound`.
pub fn property_s_at_witness_size(f: &SuperMap, bound: usize, check: Checker) -> Result<PropertySVerdict> {
    let first = check(f, bound, &PROPERTY_S_CAPS)?;
    match first.required_bound {
        Some(needed) if needed != bound => check(f, needed, &PROPERTY_S_CAPS),
        _ => Ok(first),
    }
}

fn property_s_entries(label: &str, maps: &[SuperMap], seed: u64, bound: usize, check: Checker) -> Result<Report> {
    let verdicts: Vec<Result<PropertySVerdict>> =
        maps.par_iter().map(|f| property_s_at_witness_size(f, bound, check)).collect();
    let mut report = Report::default();
    for (index, (f, verdict)) in maps.iter().zip(verdicts).enumerate() {
        let v = verdict?;
        let outcome = match v.status {
            VerdictStatus::Consistent => Verdict::Pass,
            VerdictStatus::Inconsistent => Verdict::Fail,
            VerdictStatus::Inconclusive => Verdict::Inconclusive,
        };
        let details = format!(
            "{} -> {}, rank {}, mono {}, bound {}, swept to {}, retraction {}, dense {}",
            f.domain().dim(),
            f.codomain().dim(),
            v.coimage_dim,
            v.is_mono,
            v.bound,
            v.swept_to,
            v.retraction_verified,
            v.direct_check.map_or("skipped".to_string(), |d| d.to_string()),
        );
        report.push(Entry::new(label, outcome, details).at(index, seed).with_witness(v.witness.map(|w| w.to_string())));
    }
    Ok(report)
}

fn dim_exact_entries(seed: u64) -> Result<Report> {
    let mut report = Report::default();
    for (index, e) in corpus::zero_sequence_corpus(seed, SEQUENCE_CORPUS, SEQUENCE_MAX).iter().enumerate() {
        let r = is_dim_exact(e)?;
        let mut pass = r.equal == r.exact && r.rhs <= r.lhs;
        let mut details = format!("{} >= {}, exact {}", r.lhs, r.rhs, r.exact);
        if r.equal {
            let iso = check_theorem_p2b(e)?;
            pass &= iso;
            details.push_str(&format!(", coker i -> M'' mono-epi {iso}"));
        }
        report.push(Entry::new("dim-exact", Verdict::from_bool(pass), details).at(index, seed));
    }
    Ok(report)
}

fn p4_entries(seed: u64) -> Result<Report> {
    let mut report = Report::default();
    for (index, e) in corpus::right_exact_corpus(seed, SEQUENCE_CORPUS, SEQUENCE_MAX).iter().enumerate() {
        let holds = check_p4_inequality(e)?;
        let details = format!("{} <= {} + {}", e.middle().dim(), e.left().dim(), e.right().dim());
        report.push(Entry::new("p4-inequality", Verdict::from_bool(holds), details).at(index, seed));
    }
    Ok(report)
}

/// Every super-dimension with at most `total` basis vectors.
pub fn dims_up_to(total: usize) -> Vec<SuperDim> {
    (0..=total).flat_map(|t| (0..=t).rev().map(move |m| SuperDim::new(m, t - m))).collect()
}

fn schur_of_sum_entries() -> Result<Report> {
    let dims = dims_up_to(2);
    let mut report = Report::default();
    for lambda in partitions_up_to(5)? {
        let failures: Vec<String> = dims
            .iter()
            .flat_map(|&v| dims.iter().map(move |&w| (v, w)))
            .filter(|&(v, w)| !schur_of_sum(&lambda, v, w).holds())
            .map(|(v, w)| format!("{v} + {w}"))
            .collect();
        let details = if failures.is_empty() {
            format!("{} pairs of summands", dims.len() * dims.len())
        } else {
            format!("mismatch on {}", failures.join(", "))
        };
        report.push(
            Entry::new("schur-of-sum", Verdict::from_bool(failures.is_empty()), details)
                .with_witness(Some(lambda.to_string())),
        );
    }
    Ok(report)
}

fn rectangle_entries() -> Result<Report> {
    let caps = Caps::default();
    let mut report = Report::default();
    for d in dims_up_to(3) {
        let rect = vanishing_rectangle(d);
        let mut mismatches = Vec::new();
        for lambda in partitions_up_to(6)? {
            if vanishes(&lambda, d, &caps)? != lambda.contains(&rect) {
                mismatches.push(lambda.to_string());
            }
        }
        let details = if mismatches.is_empty() {
            format!("{d}: vanishing exactly above {rect:?}")
        } else {
            format!("{d}: mismatch on {}", mismatches.join(" "))
        };
        report.push(Entry::new("rectangle", Verdict::from_bool(mismatches.is_empty()), details));
    }
    Ok(report)
}

/// Realizations of `S_λ(V)` shared across a batch of maps.
#[derive(Default)]
pub struct SchurCache {
    objects: HashMap<(Partition, SuperSpace), SchurObject>,
}

impl SchurCache {
    pub fn get(&mut self, lambda: &Partition, v: SuperSpace) -> Result<&SchurObject> {
        let key = (lambda.clone(), v);
        if !self.objects.contains_key(&key) {
            let s = schur_apply_space(lambda, &v, &Caps::default())?;
            self.objects.insert(key.clone(), s);
        }
        Ok(&self.objects[&key])
    }

    pub fn apply(&mut self, lambda: &Partition, f: &SuperMap) -> Result<SuperMap> {
        let src = self.get(lambda, f.domain())?.clone();
        let tgt = self.get(lambda, f.codomain())?;
        schur_apply_map_between(&src, tgt, f)
    }
}

/// `S_λ(g ∘ f) = S_λ(g) ∘ S_λ(f)` and `S_λ(id) = id` for every `|λ| ≤ 4`.
pub fn functoriality_holds(cache: &mut SchurCache, f: &SuperMap, g: &SuperMap) -> Result<bool> {
    for lambda in partitions_up_to(FUNCTORIALITY_DEGREE)? {
        let gf = cache.apply(&lambda, &g.compose(f)?)?;
        let composite = cache.apply(&lambda, g)?.compose(&cache.apply(&lambda, f)?)?;
        let id = cache.apply(&lambda, &SuperMap::identity(f.domain()))?;
        if gf != composite || id != SuperMap::identity(id.domain()) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn functoriality_entries(seed: u64) -> Result<Report> {
    let mut cache = SchurCache::default();
    let mut report = Report::default();
    for (index, (f, g)) in corpus::composable_pairs(seed, FUNCTORIALITY_PAIRS, PAIR_MAX).iter().enumerate() {
        let holds = functoriality_holds(&mut cache, f, g)?;
        let details = format!("{} -> {} -> {}", f.domain().dim(), f.codomain().dim(), g.codomain().dim());
        report.push(Entry::new("functoriality", Verdict::from_bool(holds), details).at(index, seed));
    }
    Ok(report)
}

fn name_entries(seed: u64) -> Result<Report> {
    let mut report = Report::default();
    for (index, (f, g)) in corpus::parallel_pairs(seed, PAIR_CORPUS, PAIR_MAX).iter().enumerate() {
        let (nf, ng) = (name(f), name(g));
        let recovers = unname(&nf, f.domain(), f.codomain())? == *f;
        let separated = nf != ng;
        let details = format!("{} -> {}, recovers {recovers}", f.domain().dim(), f.codomain().dim());
        report.push(Entry::new("name-separation", Verdict::from_bool(separated && recovers), details).at(index, seed));
    }
    Ok(report)
}

fn line_entries(seed: u64) -> Report {
    let mut report = Report::default();
    for (index, f) in corpus::maps_from_line(seed, PAIR_CORPUS, PAIR_MAX).iter().enumerate() {
        let details = format!("{} -> {}", f.domain().dim(), f.codomain().dim());
        report.push(Entry::new("line-mono", Verdict::from_bool(f.is_mono()), details).at(index, seed));
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dims_are_enumerated_once() {
        let dims = dims_up_to(3);
        assert_eq!(dims.len(), 10);
        assert_eq!(dims[0], SuperDim::ZERO);
        assert_eq!(dims[1], SuperDim::new(1, 0));
    }

    #[test]
    fn l4_suite_passes() {
        let report = l4(11);
        assert_eq!(report.entries.len(), MAP_CORPUS * 6);
        assert!(report.all_pass());
    }
}

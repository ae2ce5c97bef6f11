use super::*;
use crate::bitset::VertexSet;
use crate::graph::{cartesian_product, make_family, Family, Graph};
use crate::structure::decompose;

fn fam(f: Family, n: usize) -> Graph {
    make_family(f, n).unwrap()
}

fn vs(xs: &[usize]) -> VertexSet {
    xs.iter().collect()
}

fn ix(xs: &[usize]) -> IndexSet {
    xs.iter().collect()
}

/// `C_4 □ K_1` with `D = {0, 2}` and basis `{0, 2}`: one row of two basis carriers.
struct OneRow {
    prod: ProductGraph,
    dec: CellDecomposition,
    fibers: Vec<FiberView>,
    d: MinimumDominatingSet,
}

impl OneRow {
    fn new() -> Self {
        let g = fam(Family::Cycle, 4);
        let prod = cartesian_product(&g, &fam(Family::Complete, 1)).unwrap();
        let dec = decompose(&g, vs(&[0, 2])).unwrap();
        let d = MinimumDominatingSet::verify(prod.graph(), vs(&[0, 2])).unwrap();
        let fibers = crate::structure::fiber_views(&prod, &dec, d.set()).unwrap();
        Self {
            prod,
            dec,
            fibers,
            d,
        }
    }

    /// Labeling with both carriers relabeled; classes decide dominion.
    fn with(&self, a: (VertexClass, &[usize]), b: (VertexClass, &[usize])) -> Labeling<'_> {
        let mut lab = Labeling::labeling1(
            &self.prod,
            &self.dec,
            &self.fibers,
            self.d,
            AlterationPolicy::Deterministic,
        )
        .unwrap();
        for (e, (class, label)) in lab.entries.iter_mut().zip([a, b]) {
            e.class = class;
            e.label = ix(label);
        }
        lab
    }
}

fn free() -> VertexClass {
    VertexClass::Shared(IndexSet::full(8))
}

fn labels(lab: &Labeling<'_>) -> Vec<IndexSet> {
    lab.entries().iter().map(|e| e.label).collect()
}

#[test]
fn equal_pairs_split_on_distinct_elements() {
    let inst = OneRow::new();
    let mut lab = inst.with((free(), &[1, 2]), (free(), &[1, 2]));
    assert!(lab.internal_alteration(0));
    assert_eq!(labels(&lab), vec![ix(&[2]), ix(&[1])]);
}

#[test]
fn singleton_strips_bigger_label() {
    let inst = OneRow::new();
    let mut lab = inst.with((free(), &[1]), (free(), &[1, 3]));
    lab.internal_alteration(0);
    assert_eq!(labels(&lab), vec![ix(&[1]), ix(&[3])]);

    let mut lab = inst.with((free(), &[1, 3]), (free(), &[1]));
    lab.internal_alteration(0);
    assert_eq!(labels(&lab), vec![ix(&[3]), ix(&[1])]);
}

#[test]
fn singletons_untouched() {
    let inst = OneRow::new();
    let mut lab = inst.with((free(), &[1]), (free(), &[1]));
    assert!(!lab.internal_alteration(0));
    assert_eq!(labels(&lab), vec![ix(&[1]), ix(&[1])]);
}

#[test]
fn single_overlap_drops_from_lex_first() {
    let inst = OneRow::new();
    let mut lab = inst.with((free(), &[2, 3]), (free(), &[1, 2]));
    lab.internal_alteration(0);
    assert_eq!(labels(&lab), vec![ix(&[2, 3]), ix(&[1])]);
}

#[test]
fn dominion_redirects_shared_pair_removal() {
    let inst = OneRow::new();
    let mut lab = inst.with((VertexClass::Basis(1), &[1, 2]), (free(), &[1, 2]));
    lab.internal_alteration(0);
    assert_eq!(labels(&lab), vec![ix(&[1]), ix(&[2])]);
    assert_eq!(lab.conflict_count(), 0);
}

#[test]
fn dominion_block_is_recorded() {
    let inst = OneRow::new();
    let mut lab = inst.with((VertexClass::Basis(1), &[1, 2]), (free(), &[1]));
    assert!(!lab.internal_alteration(0));
    assert_eq!(labels(&lab), vec![ix(&[1, 2]), ix(&[1])]);
    assert_eq!(lab.conflict_count(), 1);
    // Repeating the pass does not duplicate the diagnostic.
    lab.internal_alteration(0);
    assert_eq!(lab.conflict_count(), 1);
    match &lab.diagnostics()[0] {
        Diagnostic::Conflict(c) => assert_eq!(c.rule, "singleton"),
        other => panic!("{:?}", other),
    }
}

#[test]
fn labeling3_collapses_shared_labels_in_dominated_chamber() {
    let inst = OneRow::new();
    let mut lab = inst.with((free(), &[0, 1]), (free(), &[0]));
    lab.entries[0].class = VertexClass::Shared(ix(&[0, 1]));
    lab.stage = Some(Stage::Labeling2);
    // Pretend both cells are vertically dominated.
    let fibers = vec![FiberView {
        undominated: IndexSet::empty(),
        ell: 0,
        ..inst.fibers[0].clone()
    }];
    lab.fibers = &fibers;
    lab.labeling3().unwrap();
    assert_eq!(labels(&lab), vec![ix(&[0]), ix(&[0])]);
    assert_eq!(lab.entries()[0].stage, Stage::Labeling3);
}

#[test]
fn stages_must_run_in_order() {
    let inst = OneRow::new();
    let mut lab = inst.with((free(), &[0]), (free(), &[1]));
    assert!(lab.labeling3().is_err());
    lab.labeling2().unwrap();
    assert!(lab.labeling2().is_err());
    lab.labeling3().unwrap();
}

/// `C_4 □ K_2`, basis `{0, 2}`, `D = {(1,0), (3,1)}`.
#[test]
fn cube_instance_by_hand() {
    let g = fam(Family::Cycle, 4);
    let prod = cartesian_product(&g, &fam(Family::Complete, 2)).unwrap();
    let dec = decompose(&g, vs(&[0, 2])).unwrap();
    let d = MinimumDominatingSet::verify(prod.graph(), vs(&[prod.index(1, 0), prod.index(3, 1)]))
        .unwrap();
    let fibers = crate::structure::fiber_views(&prod, &dec, d.set()).unwrap();
    let mut lab =
        Labeling::labeling1(&prod, &dec, &fibers, d, AlterationPolicy::Deterministic).unwrap();
    // Both carriers lie in P_{0,1} and every cell is vertically undominated.
    assert_eq!(labels(&lab), vec![ix(&[0, 1]), ix(&[0, 1])]);
    lab.labeling2().unwrap();
    // External rule on rows 0 and 1: first loses 0, second loses 1.
    assert_eq!(labels(&lab), vec![ix(&[1]), ix(&[0])]);
    lab.labeling3().unwrap();
    assert_eq!(labels(&lab), vec![ix(&[1]), ix(&[0])]);
    assert!(lab.invariants().all());
    assert!(lab.verify_projection(0).unwrap());
    assert!(lab.verify_projection(1).unwrap());
    assert!(lab.verify_projection(2).is_err());
    for h in 0..2 {
        assert!(lab.verify_claim1(h).unwrap());
        let a = lab.analyze_fiber(h).unwrap();
        assert!(a.s1.is_empty() && a.j1.is_empty() && a.e == Some(VertexSet::empty()));
        assert!(verify_claim2(&a));
    }
    let hist = lab.histogram();
    assert_eq!(hist.f, vec![0, 2, 0]);
    assert_eq!(hist.d_sizes, vec![1, 1]);
    let eq3 = verify_eq3(&hist, 2, 1, 2);
    assert!(eq3.all());
    let trace = serde_json::to_value(lab.trace()).unwrap();
    assert_eq!(trace["schema"], 1);
    assert_eq!(
        trace["rows"][0]["entries"][0]["stage_labels"],
        serde_json::json!([[0, 1], [1], [1]])
    );
    assert_eq!(trace["rows"][1]["entries"][0]["cell_or_class"], "P{0,1}");
}

#[test]
fn single_basis_vertex_labels_everything_zero() {
    let g = fam(Family::Path, 3);
    let h = fam(Family::Path, 3);
    let prod = cartesian_product(&g, &h).unwrap();
    let dec = decompose(&g, vs(&[1])).unwrap();
    let d = MinimumDominatingSet::compute(prod.graph(), None).unwrap();
    let fibers = crate::structure::fiber_views(&prod, &dec, d.set()).unwrap();
    let mut lab =
        Labeling::labeling1(&prod, &dec, &fibers, d, AlterationPolicy::Deterministic).unwrap();
    assert!(lab.entries().iter().all(|e| e.label == ix(&[0])));
    lab.run_all().unwrap();
    assert!(lab.entries().iter().all(|e| e.label == ix(&[0])));
    assert!(lab.verify_projection(0).unwrap());
}

#[test]
fn single_row_has_no_external_phase() {
    let inst = OneRow::new();
    let mut lab = inst.with((free(), &[0, 1]), (free(), &[2]));
    assert!(!lab.external_alteration(0));
}

#[test]
fn multi_label_fiber_analysis() {
    // C_4 □ K_1 with D = {1, 3}: both in P_{0,1}, both cells undominated.
    let g = fam(Family::Cycle, 4);
    let prod = cartesian_product(&g, &fam(Family::Complete, 1)).unwrap();
    let dec = decompose(&g, vs(&[0, 2])).unwrap();
    let d = MinimumDominatingSet::verify(prod.graph(), vs(&[1, 3])).unwrap();
    let fibers = crate::structure::fiber_views(&prod, &dec, d.set()).unwrap();
    let mut lab =
        Labeling::labeling1(&prod, &dec, &fibers, d, AlterationPolicy::Deterministic).unwrap();
    lab.entries[1].label = ix(&[1]);
    let a = lab.analyze_fiber(0).unwrap();
    assert_eq!(a.s1, vec![1]);
    assert_eq!(a.m, vec![2]);
    assert_eq!(a.j1, ix(&[0, 1]));
    assert_eq!(a.chamber, vs(&[0, 1, 2, 3]));
    // Both D-vertices sit inside the chamber, so nothing needs extending.
    assert_eq!(a.d1, VertexSet::empty());
    assert_eq!(a.e, Some(VertexSet::empty()));
    assert!(a.claim1);
    assert!(!verify_claim2(&a));
}

#[test]
fn seeded_policy_is_reproducible() {
    let g = fam(Family::Cycle, 6);
    let h = fam(Family::Cycle, 5);
    let prod = cartesian_product(&g, &h).unwrap();
    let basis = crate::domination::power_closed(&g).unwrap().witness;
    let dec = decompose(&g, basis).unwrap();
    let d = MinimumDominatingSet::compute(prod.graph(), None).unwrap();
    let fibers = crate::structure::fiber_views(&prod, &dec, d.set()).unwrap();
    let run = |seed| {
        let mut lab = Labeling::labeling1(
            &prod,
            &dec,
            &fibers,
            d,
            AlterationPolicy::SeededRandom(seed),
        )
        .unwrap();
        lab.run_all().unwrap();
        labels(&lab)
    };
    assert_eq!(run(3), run(3));
}

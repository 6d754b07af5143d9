use proptest::prelude::*;
use skewposet::lrrule::{count_syt_skew, decompose, lr_coefficient};
use skewposet::{decay, Partition, SkewCharacter, SkewDiagram};

fn partition(max_len: usize, max_part: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(1..=max_part, 0..=max_len).prop_map(Partition::from_unsorted)
}

fn skew(max_len: usize, max_part: usize) -> impl Strategy<Value = SkewDiagram> {
    (partition(max_len, max_part), prop::collection::vec(0..=max_part, max_len)).prop_map(|(outer, cut)| {
        let mut inner = Vec::new();
        let mut prev = usize::MAX;
        for (i, c) in cut.into_iter().enumerate().take(outer.length()) {
            let row = c.min(outer.part(i)).min(prev);
            inner.push(row);
            prev = row;
        }
        SkewDiagram::new(outer, Partition::new(inner).unwrap()).unwrap()
    })
}

/// Semistandard fillings of a skew shape with the given content.
fn kostka_skew(d: &SkewDiagram, content: &[usize]) -> u64 {
    let boxes = d.boxes();
    if boxes.len() != content.iter().sum::<usize>() {
        return 0;
    }
    let mut filling = vec![0usize; boxes.len()];
    let mut left = content.to_vec();
    fn go(i: usize, boxes: &[(usize, usize)], filling: &mut [usize], left: &mut [usize]) -> u64 {
        if i == boxes.len() {
            return 1;
        }
        let (r, c) = boxes[i];
        let mut lo = 1;
        if let Some(j) = boxes[..i].iter().position(|&b| b == (r, c - 1)) {
            lo = lo.max(filling[j]);
        }
        if let Some(j) = boxes[..i].iter().position(|&b| b == (r - 1, c)) {
            lo = lo.max(filling[j] + 1);
        }
        let mut total = 0;
        for v in lo..=left.len() {
            if left[v - 1] > 0 {
                left[v - 1] -= 1;
                filling[i] = v;
                total += go(i + 1, boxes, filling, left);
                left[v - 1] += 1;
            }
        }
        total
    }
    go(0, &boxes, &mut filling, &mut left)
}

#[test]
fn coefficients_match_kostka_expansion() {
    // K(lambda/mu, w) = sum_nu c(lambda; mu, nu) K(nu, w) for every content w
    for size in 0..=7 {
        for outer in Partition::all_of(size) {
            for inner in outer.subpartitions() {
                let d = SkewDiagram::new(outer.clone(), inner).unwrap();
                if d.size() > 6 {
                    continue;
                }
                let ch = decompose(&d);
                for w in Partition::all_of(d.size()) {
                    let direct = kostka_skew(&d, w.parts());
                    let expanded: u64 =
                        ch.terms().map(|(nu, c)| c * kostka_skew(&SkewDiagram::straight(nu.clone()), w.parts())).sum();
                    assert_eq!(direct, expanded, "{d} with content {w}");
                }
            }
        }
    }
}

#[test]
fn squares_of_filling_counts_sum_to_factorial() {
    let mut factorial = 1u64;
    for n in 1..=12u64 {
        factorial *= n;
        let total: u64 = Partition::all_of(n as usize).iter().map(|p| p.count_syt().unwrap().pow(2)).sum();
        assert_eq!(total, factorial, "n = {n}");
    }
}

#[test]
fn triple_symmetries_up_to_eight() {
    for size in 0..=8 {
        for outer in Partition::all_of(size) {
            for inner in outer.subpartitions() {
                let ch = decompose(&SkewDiagram::new(outer.clone(), inner.clone()).unwrap());
                for (nu, c) in ch.terms() {
                    assert_eq!(lr_coefficient(&outer, nu, &inner).unwrap(), c);
                    assert_eq!(lr_coefficient(&outer.conjugate(), &inner.conjugate(), &nu.conjugate()).unwrap(), c);
                }
            }
        }
    }
}

proptest! {
    #[test]
    fn partition_text_round_trip(p in partition(8, 8)) {
        prop_assert_eq!(p.to_string().parse::<Partition>().unwrap(), p);
    }

    #[test]
    fn conjugation_swaps_sum_and_union(p in partition(6, 6), q in partition(6, 6)) {
        prop_assert_eq!(p.conjugate().conjugate(), p.clone());
        prop_assert_eq!(p.sum(&q).conjugate(), p.conjugate().union(&q.conjugate()));
        prop_assert_eq!(p.union(&q).conjugate(), p.conjugate().sum(&q.conjugate()));
    }

    #[test]
    fn skew_text_round_trip(d in skew(6, 6)) {
        prop_assert_eq!(d.to_string().parse::<SkewDiagram>().unwrap(), d);
    }

    #[test]
    fn character_invariants(d in skew(5, 5)) {
        prop_assume!(d.size() <= 8);
        let ch = decompose(&d);
        prop_assert_eq!(ch.degree(), d.size());
        prop_assert_eq!(ch.to_string().parse::<SkewCharacter>().unwrap(), ch.clone());
        prop_assert_eq!(decompose(&d.to_basic()), ch.clone());
        prop_assert_eq!(decompose(&d.rotate()), ch.clone());
        prop_assert_eq!(decompose(&d.conjugate()), ch.conjugate());
        let weighted: u64 = ch.terms().map(|(nu, c)| c * nu.count_syt().unwrap()).sum();
        prop_assert_eq!(weighted, count_syt_skew(&d));
    }

    #[test]
    fn decay_partitions_the_boxes(d in skew(6, 6)) {
        let class = decay(&d);
        prop_assert_eq!(class.size(), d.size());
        for c in class.components() {
            prop_assert!(c.is_basic());
            prop_assert_eq!(decay(c).components().len(), 1);
        }
        prop_assert_eq!(decay(&d.to_basic()), class.clone());
        if !d.is_empty() {
            prop_assert_eq!(d.delta_value().unwrap(), class.delta_value().unwrap());
            let basic = d.to_basic();
            prop_assert_eq!(basic.rotate().delta_value().unwrap(), basic.delta_value().unwrap());
        }
    }

    #[test]
    fn basic_paths_are_consistent(d in skew(6, 6)) {
        let basic = d.to_basic();
        prop_assume!(!basic.is_empty());
        let paths = basic.paths().unwrap();
        prop_assert!(paths.is_consistent());
        prop_assert!(!paths.has_shared_segment());
    }

    #[test]
    fn monotone_under_sum_and_union(
        d in skew(3, 3),
        e in skew(3, 3),
        pick in any::<prop::sample::Index>(),
        pick_e in any::<prop::sample::Index>(),
    ) {
        let ch = decompose(&d);
        let che = decompose(&e);
        let terms: Vec<_> = ch.terms().map(|(nu, _)| nu.clone()).collect();
        let terms_e: Vec<_> = che.terms().map(|(nu, _)| nu.clone()).collect();
        let nu = pick.get(&terms);
        let nue = pick_e.get(&terms_e);
        let base = lr_coefficient(d.outer(), d.inner(), nu).unwrap();
        let summed = lr_coefficient(&d.outer().sum(e.outer()), &d.inner().sum(e.inner()), &nu.sum(nue)).unwrap();
        let united = lr_coefficient(&d.outer().union(e.outer()), &d.inner().union(e.inner()), &nu.union(nue)).unwrap();
        prop_assert!(base <= summed);
        prop_assert!(base <= united);
    }
}

use skewposet::poset::{down_covers, is_geq, reduce_to_staircase, up_covers, verify_chain};
use skewposet::verifier::{enumerate_basic, enumerate_basic_by_pairs};
use skewposet::{decay, SkewClass, SkewDiagram};

#[test]
fn enumeration_agrees_with_pair_scan_at_seven_boxes() {
    let mut direct: Vec<SkewClass> = enumerate_basic(7).into_iter().filter(|c| c.size() == 7).collect();
    direct.sort();
    assert_eq!(direct, enumerate_basic_by_pairs(7));
}

#[test]
fn class_counts_are_stable() {
    let classes = enumerate_basic(8);
    let counts: Vec<usize> = (1..=8).map(|n| classes.iter().filter(|c| c.size() == n).count()).collect();
    assert_eq!(counts, [1, 3, 7, 19, 47, 125, 318, 829]);
    assert_eq!(classes, enumerate_basic(8));
}

#[test]
fn grading_and_adjointness() {
    for c in enumerate_basic(8) {
        for u in up_covers(&c) {
            assert_eq!(u.rank(), c.rank() + 1, "{c} -> {u}");
            assert!(down_covers(&u).contains(&c), "{u} does not cover {c}");
        }
        for d in down_covers(&c) {
            assert_eq!(d.rank() + 1, c.rank(), "{c} -> {d}");
            assert!(up_covers(&d).contains(&c), "{c} does not cover {d}");
        }
    }
}

#[test]
fn every_class_lies_above_its_staircase() {
    for c in enumerate_basic(8) {
        let n = c.delta_value().unwrap();
        let chain = reduce_to_staircase(&c).unwrap();
        assert!(verify_chain(&chain));
        assert_eq!(chain.end(), &SkewClass::staircase(n));
        assert!(is_geq(&c, &SkewClass::staircase(n)), "{c:?}");
    }
}

#[test]
fn a_split_box_keeps_the_bound() {
    let single = SkewDiagram::straight("1".parse().unwrap());
    for a in enumerate_basic(6) {
        let n = a.delta_value().unwrap();
        let mut components = a.components().to_vec();
        components.push(single.clone());
        let c = SkewClass::from_components(components);
        assert_eq!(c.delta_value().unwrap(), n + 1);
        assert!(is_geq(&c, &SkewClass::staircase(n + 1)), "{c:?}");
    }
}

#[test]
fn geq_is_a_partial_order_on_small_classes() {
    let classes = enumerate_basic(4);
    for a in &classes {
        assert!(is_geq(a, a));
        for b in &classes {
            if a != b && is_geq(a, b) {
                assert!(!is_geq(b, a), "{a} and {b}");
                assert!(a.rank() > b.rank());
            }
        }
    }
}

#[test]
fn geq_follows_covers() {
    let c = decay(&"5,4,3,2,2/4,2,2,1".parse::<SkewDiagram>().unwrap());
    for d in down_covers(&c) {
        assert!(is_geq(&c, &d));
        for e in down_covers(&d) {
            assert!(is_geq(&c, &e));
        }
    }
}

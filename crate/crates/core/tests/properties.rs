mod common;

use common::*;
use proptest::prelude::*;
use tait_core::moves::random_move_walk;
use tait_core::{alexander, jones, Diagram, Poly64};

fn poly() -> impl Strategy<Value = Poly64> {
    proptest::collection::vec((-6i64..6, -20i64..20), 0..6).prop_map(Poly64::from_terms)
}

fn shift_labels(d: &Diagram, k: u32) -> Diagram {
    let m = d.edge_count() as u32;
    Diagram::new(d.crossings().iter().map(|x| x.map(|v| (v - 1 + k) % m + 1)).collect()).unwrap()
}

proptest! {
    #[test]
    fn ring_laws(p in poly(), q in poly(), r in poly()) {
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(&(&p + &q) - &q, p.clone());
    }

    #[test]
    fn exact_division(p in poly(), q in poly()) {
        prop_assume!(q.num_terms() > 0);
        prop_assert_eq!((&p * &q).div_exact(&q), Some(p));
    }

    #[test]
    fn text_round_trip(p in poly()) {
        prop_assert_eq!(Poly64::parse(&p.to_string(), 't').unwrap(), p.clone());
        prop_assert_eq!(p.substitute_inverse().substitute_inverse(), p);
    }

    #[test]
    fn relabelling_changes_nothing(i in 0usize..126, k in 0u32..40) {
        let corpus = alternating().into_iter().chain(nonalternating()).collect::<Vec<_>>();
        let d = &corpus[i % corpus.len()].diagram;
        let s = shift_labels(d, k % d.edge_count() as u32);
        prop_assert_eq!(s.canonical(), d.canonical());
        prop_assert_eq!(jones(&s), jones(d));
        prop_assert_eq!(s.writhe(), d.writhe());
    }

    #[test]
    fn walks_keep_knot_type(i in 0usize..126, seed in any::<u64>(), steps in 1usize..15) {
        let corpus = all_corpus();
        let d = &corpus[i % corpus.len()].diagram;
        let w = random_move_walk(d, steps, 12, seed);
        prop_assert_eq!(jones(&w), jones(d));
        prop_assert_eq!(alexander(&w), alexander(d));
        prop_assert_eq!(w.canonical().canonical(), w.canonical());
    }
}

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigUint;
use proptest::prelude::*;

use tabtype::exchange::{
    is_dethroned_row, is_dominant_column, is_dominant_row, swap_left, swap_up, tableau_swap_columns, tableau_swap_rows,
};
use tabtype::permutation::{reduced_word_to_tableau, tableau_to_reduced_word};
use tabtype::*;

fn arb_diagram(max: usize) -> impl Strategy<Value = Diagram> {
    prop::collection::btree_set((1usize..=4, 1usize..=4), 1..=max)
        .prop_map(|cells| cells.into_iter().map(Cell::from).collect())
}

fn arb_type(max: usize) -> impl Strategy<Value = TypeFilling> {
    arb_diagram(max).prop_flat_map(|shape| {
        let bounds: Vec<(Cell, u32)> = shape.iter().map(|c| (c, shape.hook_length(c).unwrap() as u32)).collect();
        let thetas: Vec<_> = bounds.iter().map(|&(_, h)| 0..h).collect();
        (Just(bounds), thetas)
            .prop_map(|(b, t)| TypeFilling::from_entries(b.iter().map(|&(c, _)| c).zip(t)).unwrap())
    })
}

fn arb_perm(max_n: usize) -> impl Strategy<Value = Permutation> {
    (1..=max_n)
        .prop_flat_map(|n| Just((1..=n).collect::<Vec<usize>>()).prop_shuffle())
        .prop_map(|v| Permutation::new(v).unwrap())
}

fn tabs(ty: &TypeFilling) -> BTreeSet<Tableau> {
    enumerate_tableaux(ty).unwrap().into_iter().collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn exchanges_preserve_counts_and_are_idempotent(ty in arb_type(7)) {
        let n = count_tableaux(&ty).unwrap();
        for ex in [line_exchange(&ty), column_exchange(&ty), full_exchange(&ty)] {
            prop_assert_eq!(count_tableaux(&ex.result).unwrap(), n.clone());
        }
        let l = line_exchange(&ty).result;
        prop_assert_eq!(&line_exchange(&l).result, &l);
        let c = column_exchange(&ty).result;
        prop_assert_eq!(&column_exchange(&c).result, &c);
    }

    #[test]
    fn mapping_transports_classes(ty in arb_type(6)) {
        let ex = full_exchange(&ty);
        let source = tabs(&ty);
        let target = tabs(&ex.result);
        for t in &target {
            prop_assert!(source.contains(&ex.transport_back(t)));
        }
        let moved: BTreeSet<Tableau> = source.iter().map(|t| ex.transport_forward(t)).collect();
        prop_assert_eq!(moved, target);
    }

    #[test]
    fn single_swaps_are_bijections(ty in arb_type(6)) {
        for a in 1..=4 {
            if is_dominant_row(&ty, a) {
                let down = swap_down(&ty, a).unwrap().result;
                let moved: BTreeSet<Tableau> = tabs(&ty).iter().map(|t| tableau_swap_rows(t, a)).collect();
                prop_assert_eq!(moved, tabs(&down));
                prop_assert!(is_dethroned_row(&down, a + 1));
                prop_assert_eq!(swap_up(&down, a + 1).unwrap().result, ty.clone());
            }
            if is_dominant_column(&ty, a) {
                let right = swap_right(&ty, a).unwrap().result;
                let moved: BTreeSet<Tableau> = tabs(&ty).iter().map(|t| tableau_swap_columns(t, a)).collect();
                prop_assert_eq!(moved, tabs(&right));
                prop_assert_eq!(swap_left(&right, a + 1).unwrap().result, ty.clone());
            }
        }
    }

    #[test]
    fn filling_sequences_rebuild_tableaux(ty in arb_type(7)) {
        for t in enumerate_tableaux(&ty).unwrap().into_iter().take(20) {
            prop_assert_eq!(t.type_of(), ty.clone());
            let seq = t.filling_sequence();
            prop_assert!(seq.is_valid_for(&ty));
            prop_assert_eq!(seq.tableau().unwrap(), t);
        }
    }

    #[test]
    fn inversion_sets_round_trip(sigma in arb_perm(7)) {
        let inv = sigma.inversion_set();
        prop_assert!(inv.is_inversion_set());
        prop_assert_eq!(inv.len(), sigma.length());
        prop_assert_eq!(inv.to_permutation().unwrap(), sigma.clone());
        prop_assert_eq!(sigma.inverse().inverse(), sigma.clone());
        prop_assert!(sigma.compose(&sigma.inverse()).is_identity());
    }

    #[test]
    fn tableaux_of_permutation_types_are_reduced_words(sigma in arb_perm(6)) {
        let ty = type_of_permutation(&sigma);
        let count = count_tableaux(&ty).unwrap();
        prop_assert_eq!(&count, &count_reduced_words(&sigma));
        for t in enumerate_tableaux(&ty).unwrap().into_iter().take(30) {
            let w = tableau_to_reduced_word(&sigma, &t).unwrap();
            prop_assert_eq!(w.evaluate(sigma.size()).unwrap(), sigma.clone());
            prop_assert_eq!(reduced_word_to_tableau(&sigma, &w).unwrap(), t);
        }
    }

    #[test]
    fn sst_standardization(ty in arb_type(5)) {
        // With all labels distinct, semistandard labellings are the tableaux.
        let n = ty.len();
        let mut passing = 0u64;
        let cells: Vec<Cell> = ty.entries().keys().copied().collect();
        let mut perm: Vec<u32> = (1..=n as u32).collect();
        loop {
            let f = LabelledFilling::from_entries(cells.iter().copied().zip(perm.iter().copied())).unwrap();
            if is_sst(&ty, &f).unwrap() {
                passing += 1;
            }
            if !next_permutation(&mut perm) {
                break;
            }
        }
        prop_assert_eq!(BigUint::from(passing), count_tableaux(&ty).unwrap());
    }

    #[test]
    fn exchanged_vexillary_sst_is_symmetric(sigma in arb_perm(5)) {
        prop_assume!(sigma.is_vexillary());
        let e = full_exchange(&type_of_permutation(&sigma)).result;
        let p = sst_polynomial(&e, 3, u128::MAX).unwrap();
        prop_assert!(p.is_symmetric());
    }

    #[test]
    fn json_round_trips(ty in arb_type(7)) {
        let text = serde_json::to_string(&ty).unwrap();
        prop_assert_eq!(tabtype::io::from_json::<TypeFilling>(&text).unwrap(), ty.clone());
        let shape = ty.shape();
        let text = serde_json::to_string(&shape).unwrap();
        prop_assert_eq!(tabtype::io::from_json::<Diagram>(&text).unwrap(), shape);
        if let Some(t) = enumerate_tableaux(&ty).unwrap().into_iter().next() {
            let text = serde_json::to_string(&t).unwrap();
            prop_assert_eq!(tabtype::io::from_json::<Tableau>(&text).unwrap(), t);
        }
    }

    #[test]
    fn stacking_of_vexillary_shapes(sigma in arb_perm(7)) {
        let v = sigma.vexillary_data();
        let shape = type_of_permutation(&sigma).shape();
        prop_assert_eq!(shape.stack_yx(), v.mu.clone());
        prop_assert_eq!(shape.stack_xy(), v.lambda.conjugate());
        prop_assert_eq!(v.is_vexillary, shape.stack_xy() == shape.stack_yx());
    }
}

fn next_permutation(v: &mut [u32]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).unwrap();
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

#[test]
fn reverse_line_exchange_undoes_line_exchange() {
    for n in 2..=6 {
        for sigma in Permutation::all(n) {
            let bar = line_exchange(&type_of_permutation(&sigma));
            let compressed = tabtype::exchange::erase_empty_rows(&type_of_permutation(&sigma)).result;
            assert_eq!(reverse_line_exchange(&bar.result).result, compressed, "{sigma}");
        }
    }
}

#[test]
fn balanced_reverse_exchange_matches_falling() {
    // Independent route to S(λ): undo the line exchange from the balanced
    // type, then place each row where its theta offset says it belongs.
    for n in 1..=8 {
        for lambda in Partition::all_of(n) {
            let k = embed_in_staircase(&lambda).unwrap().k;
            let back = reverse_line_exchange(&TypeFilling::balanced(&Diagram::ferrers(&lambda))).result;
            let mut offsets: BTreeMap<usize, usize> = BTreeMap::new();
            for (c, &t) in back.entries() {
                let o = t as usize + c.col;
                assert_eq!(*offsets.entry(c.row).or_insert(o), o, "{lambda}: uneven row");
            }
            let placed: Diagram =
                back.entries().keys().map(|c| Cell::new(k + 1 - offsets[&c.row], c.col)).collect();
            assert_eq!(build_s_lambda(&lambda).unwrap(), placed, "{lambda}");
        }
    }
}

//! Cross-checks the weighted edit distance DP against exhaustive edit-script
//! search, plus identity and symmetry over a large random sample.

mod common;

use common::{EditOracle, XorShift};
use punrecover::phonetics::{phonetic_distance, CostModel, PhoneticForm, WX_UNITS};

fn form(units: Vec<char>) -> PhoneticForm {
    PhoneticForm {
        units,
        source: punrecover::phonetics::PhoneticSource::FromDevanagari,
    }
}

fn random_units(rng: &mut XorShift, max_len: usize) -> Vec<char> {
    let len = 1 + rng.below(max_len);
    (0..len)
        .map(|_| WX_UNITS[rng.below(WX_UNITS.len())])
        .collect()
}

fn oracle_for(costs: &CostModel) -> EditOracle {
    EditOracle {
        vowel_sub: costs.vowel_sub,
        consonant_sub: costs.consonant_sub,
        aspiration_pair_sub: costs.aspiration_pair_sub,
        vowel_length_sub: costs.vowel_length_sub,
        insert_delete: costs.insert_delete,
        rhyme_bonus: costs.rhyme_bonus,
        onset_bonus: costs.onset_bonus,
    }
}

#[test]
fn dp_equals_exhaustive_search() {
    let costs = CostModel::default();
    let oracle = oracle_for(&costs);
    let mut rng = XorShift(0xd157_a9ce);
    for case in 0..500 {
        let a = random_units(&mut rng, 6);
        let b = random_units(&mut rng, 6);
        let got = phonetic_distance(&form(a.clone()), &form(b.clone()), &costs);
        let want = oracle.distance(&a, &b);
        assert!(
            (got - want).abs() == 0.0,
            "case {case}: {a:?} vs {b:?}: dp {got} oracle {want}"
        );
    }
}

#[test]
fn dp_equals_exhaustive_search_nondefault_costs() {
    let costs = CostModel {
        vowel_sub: 0.4,
        consonant_sub: 0.9,
        aspiration_pair_sub: 0.1,
        vowel_length_sub: 0.2,
        insert_delete: 1.0,
        rhyme_bonus: 0.7,
        onset_bonus: 0.95,
    };
    costs.validate().unwrap();
    let oracle = oracle_for(&costs);
    let mut rng = XorShift(0xbeef_cafe);
    for _ in 0..200 {
        let a = random_units(&mut rng, 5);
        let b = random_units(&mut rng, 5);
        let got = phonetic_distance(&form(a.clone()), &form(b.clone()), &costs);
        let want = oracle.distance(&a, &b);
        assert!((got - want).abs() < 1e-15, "{a:?} vs {b:?}");
    }
}

#[test]
fn identity_and_symmetry_hold_in_bulk() {
    let costs = CostModel::default();
    let mut rng = XorShift(0x0001_dea1);
    for _ in 0..10_000 {
        let a = random_units(&mut rng, 8);
        let b = random_units(&mut rng, 8);
        let fa = form(a);
        let fb = form(b);
        let d_ab = phonetic_distance(&fa, &fb, &costs);
        let d_ba = phonetic_distance(&fb, &fa, &costs);
        assert_eq!(d_ab.to_bits(), d_ba.to_bits(), "{fa:?} vs {fb:?}");
        assert!((0.0..=1.0).contains(&d_ab));
        assert_eq!(phonetic_distance(&fa, &fa, &costs), 0.0);
    }
}

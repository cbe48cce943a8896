//! Fast-path quantities against brute-force enumeration.

use abelcodes::dynamics::{
    controllable_subcode, observable_supercode, output_chains, state_at, GranuleTable,
};
use abelcodes::fixtures;
use abelcodes::machines::SyndromeFormer;
use abelcodes::oracle::{
    closure, quotient_invariants, restrict_set, set_sum, ElementSet, Oracle, OracleCaps,
};
use abelcodes::verify::random_instance;
use abelcodes::{Error, GroupCode, InvariantFactors, Modulus, SymbolLayout, TimeSubset};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn elements(c: &GroupCode) -> ElementSet {
    Oracle::new(c, OracleCaps::default())
        .unwrap()
        .elements()
        .clone()
}

#[test]
fn reference_values() {
    // Autonomous window has eight codewords.
    let o = Oracle::new(&fixtures::autonomous_z4_code(), OracleCaps::default()).unwrap();
    assert_eq!(o.order(), 8);

    // The trivial code is {0}.
    let layout = SymbolLayout::uniform(Modulus::new(2).unwrap(), 3, 1).unwrap();
    let t = Oracle::new(&GroupCode::trivial(layout), OracleCaps::default()).unwrap();
    assert_eq!(
        t.elements().iter().collect::<Vec<_>>(),
        vec![&vec![0, 0, 0]]
    );

    // Central state count of the three-tap code.
    let c = fixtures::three_tap_z4_code();
    let o = Oracle::new(&c, OracleCaps::default()).unwrap();
    assert_eq!(o.state_count(6).unwrap(), 8);

    // The dual of the length-2 binary repetition code is itself.
    let rep2 = GroupCode::from_generators(
        SymbolLayout::uniform(Modulus::new(2).unwrap(), 2, 1).unwrap(),
        vec![vec![1, 1]],
    )
    .unwrap();
    let d = Oracle::new(&rep2, OracleCaps::default())
        .unwrap()
        .dual()
        .unwrap();
    assert_eq!(d, [vec![0, 0], vec![1, 1]].into_iter().collect());

    // Zero-sum code over Z4: interior level-1 controller granule is Z4.
    let zero_sum = fixtures::repetition_z4_code().dual();
    let o = Oracle::new(&zero_sum, OracleCaps::default()).unwrap();
    assert_eq!(
        o.controller_granule(2, 1).unwrap(),
        InvariantFactors::from_cyclic_orders(&[4])
    );
}

#[test]
fn caps_are_errors_not_truncation() {
    let m = Modulus::new(4).unwrap();
    let gens = vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]];
    assert!(matches!(
        closure(m, 3, &gens, 10),
        Err(Error::OrderExceedsCap { .. })
    ));
    let caps = OracleCaps {
        max_elements: 1 << 20,
        max_ambient: 16,
    };
    let o = Oracle::new(&fixtures::repetition_z4_code(), caps).unwrap();
    assert!(matches!(o.dual(), Err(Error::OrderExceedsCap { .. })));
}

#[test]
fn random_instances_agree_with_enumeration() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut checked = 0;
    let mut nontrivial_states = 0;
    while checked < 80 {
        let inst = random_instance(&mut rng, &[2, 3, 4], 5, 2);
        let dim: usize = inst.widths.iter().sum();
        if (inst.modulus as u128).pow(dim as u32) > 4096 {
            continue;
        }
        checked += 1;
        let c = inst.code().unwrap();
        let m = c.modulus();
        let n = c.axis_len();
        let o = Oracle::from_generators(&c, &inst.generators, OracleCaps::default()).unwrap();
        assert_eq!(o.elements(), &elements(&c), "{inst:?}");

        for k in 0..n {
            let f = output_chains(&c, k, 0).unwrap().input_group.order();
            assert_eq!(o.input_group_order(k).unwrap(), f, "{inst:?} k={k}");
        }
        for k in 1..n {
            if !state_at(&c, k).unwrap().two_sided.is_trivial() {
                nontrivial_states += 1;
            }
        }

        // Shortening, restriction and the sub/supercode ladders.
        let j = TimeSubset::new(n, (0..n).filter(|t| t % 2 == 0)).unwrap();
        assert_eq!(
            o.shorten(&j).unwrap(),
            elements(&c.shorten(&j).unwrap()),
            "{inst:?}"
        );
        let cols = c.layout().coords(&j).unwrap();
        assert_eq!(
            restrict_set(o.elements(), &cols),
            elements(&c.restriction(&j).unwrap())
        );
        for l in 0..n {
            assert_eq!(
                o.observable_supercode(Some(l)).unwrap(),
                elements(&observable_supercode(&c, l).unwrap()),
                "{inst:?} level {l}"
            );
            let sub = controllable_subcode(&c, l).unwrap();
            assert!(o.elements().is_superset(&elements(&sub)));
        }

        // Quotients of sums by enumeration vs Howell.
        let a = c.shorten(&TimeSubset::past(n, n / 2 + 1)).unwrap();
        let b = c.shorten(&TimeSubset::future(n, n / 2)).unwrap();
        let sum = set_sum(m, &elements(&a), &elements(&b));
        assert_eq!(
            quotient_invariants(m, o.elements(), &sum).unwrap(),
            c.carrier()
                .quotient_invariants(a.code_sum(&b).unwrap().carrier())
                .unwrap()
        );

        let table = GranuleTable::build(&c, n - 1, false).unwrap();
        for e in &table.entries {
            assert_eq!(
                o.controller_granule(e.k, e.j).unwrap(),
                e.controller,
                "{inst:?}"
            );
            assert_eq!(
                o.observer_granule(e.k, e.j).unwrap(),
                e.observer,
                "{inst:?}"
            );
        }
        let sf = SyndromeFormer::new(&c).unwrap();
        assert_eq!(&o.kernel_of(|w| sf.is_member(w)).unwrap(), o.elements());
    }
    assert!(
        nontrivial_states > 20,
        "instance mix too tame: {nontrivial_states}"
    );
}

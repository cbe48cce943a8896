//! Algebraic laws as proptest properties.

use abelcodes::dynamics::{
    controllability_tests, granule_duality_check, observability_tests, state_space,
};
use abelcodes::machines::{ObserverEncoder, SyndromeFormer};
use abelcodes::oracle::{closure, quotient_invariants, ElementSet};
use abelcodes::residue::{add_vec, dot, scale_vec};
use abelcodes::spec_file::CodeSpecFile;
use abelcodes::{GroupCode, Modulus, ResidueMatrix, Subgroup, SymbolLayout, TimeSubset};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[derive(Debug, Clone)]
struct Gens {
    m: u64,
    dim: usize,
    rows: Vec<Vec<u64>>,
}

fn gens(moduli: &'static [u64], max_dim: usize, max_rows: usize) -> impl Strategy<Value = Gens> {
    (prop::sample::select(moduli), 1..=max_dim).prop_flat_map(move |(m, dim)| {
        prop::collection::vec(prop::collection::vec(0..m, dim), 0..=max_rows)
            .prop_map(move |rows| Gens { m, dim, rows })
    })
}

#[derive(Debug, Clone)]
struct CodeCase {
    m: u64,
    widths: Vec<usize>,
    rows: Vec<Vec<u64>>,
}

impl CodeCase {
    fn code(&self) -> GroupCode {
        let layout = SymbolLayout::new(Modulus::new(self.m).unwrap(), self.widths.clone()).unwrap();
        GroupCode::from_generators(layout, self.rows.clone()).unwrap()
    }
}

fn code_case(moduli: &'static [u64], max_axis: usize) -> impl Strategy<Value = CodeCase> {
    (
        prop::sample::select(moduli),
        prop::collection::vec(1usize..=2, 2..=max_axis),
    )
        .prop_flat_map(|(m, widths)| {
            let dim: usize = widths.iter().sum();
            prop::collection::vec(prop::collection::vec(0..m, dim), 0..=3).prop_map(move |rows| {
                CodeCase {
                    m,
                    widths: widths.clone(),
                    rows,
                }
            })
        })
}

fn subgroup(g: &Gens) -> Subgroup {
    Subgroup::from_rows(Modulus::new(g.m).unwrap(), g.dim, g.rows.clone()).unwrap()
}

fn elements(g: &Gens) -> ElementSet {
    closure(Modulus::new(g.m).unwrap(), g.dim, &g.rows, 1 << 20).unwrap()
}

const MODULI: &[u64] = &[2, 3, 4, 6, 8, 9, 12];

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn howell_basis_is_canonical(g in gens(MODULI, 4, 4), mix in prop::collection::vec(0u64..12, 16)) {
        let m = Modulus::new(g.m).unwrap();
        let h = subgroup(&g);
        // Same span from a different generating set: reversed rows plus combinations.
        let mut other: Vec<Vec<u64>> = g.rows.iter().rev().cloned().collect();
        for (i, r) in g.rows.iter().enumerate() {
            let mut acc = r.clone();
            for (s, q) in g.rows.iter().enumerate() {
                acc = add_vec(m, &acc, &scale_vec(m, mix[(i * 4 + s) % mix.len()], q));
            }
            other.push(acc);
        }
        let h2 = Subgroup::from_rows(m, g.dim, other).unwrap();
        prop_assert_eq!(h.basis(), h2.basis());
        prop_assert_eq!(h.order(), elements(&g).len() as u128);
    }

    #[test]
    fn membership_and_coset_reduce(g in gens(MODULI, 4, 3), v in prop::collection::vec(0u64..1000, 4)) {
        let m = Modulus::new(g.m).unwrap();
        let h = subgroup(&g);
        let v: Vec<u64> = v[..g.dim].iter().map(|&x| m.reduce(x)).collect();
        let r = h.coset_reduce(&v).unwrap();
        prop_assert_eq!(h.coset_reduce(&r).unwrap(), r.clone());
        let diff: Vec<u64> = v.iter().zip(&r).map(|(a, b)| m.sub(*a, *b)).collect();
        prop_assert!(h.membership(&diff).unwrap());
        prop_assert_eq!(h.membership(&v).unwrap(), elements(&g).contains(&v));
        for row in &g.rows {
            prop_assert!(h.membership(row).unwrap());
            prop_assert!(h.coset_reduce(row).unwrap().iter().all(|&x| x == 0));
        }
    }

    #[test]
    fn orthogonal_complement_laws(g in gens(MODULI, 4, 3)) {
        let m = Modulus::new(g.m).unwrap();
        let h = subgroup(&g);
        let perp = h.orthogonal();
        prop_assert_eq!(h.order() * perp.order(), (g.m as u128).pow(g.dim as u32));
        for a in h.basis_rows() {
            for b in perp.basis_rows() {
                prop_assert_eq!(dot(m, a, b), 0);
            }
        }
        prop_assert_eq!(perp.orthogonal(), h);
    }

    #[test]
    fn sum_intersection_and_quotients(a in gens(&[2, 4, 6, 12], 3, 3), extra in prop::collection::vec(prop::collection::vec(0u64..12, 3), 0..3)) {
        let m = Modulus::new(a.m).unwrap();
        let b = Gens { m: a.m, dim: a.dim, rows: extra.iter().map(|r| r[..a.dim].iter().map(|&x| m.reduce(x)).collect()).collect() };
        let (ha, hb) = (subgroup(&a), subgroup(&b));
        let (ea, eb) = (elements(&a), elements(&b));
        let meet = ha.intersect(&hb).unwrap();
        let brute: ElementSet = ea.intersection(&eb).cloned().collect();
        prop_assert_eq!(meet.order(), brute.len() as u128);
        prop_assert_eq!(ha.sum(&hb).unwrap().order() * meet.order(), ha.order() * hb.order());
        let q = ha.quotient_invariants(&meet).unwrap();
        prop_assert_eq!(q.order() * meet.order(), ha.order());
        prop_assert_eq!(q, quotient_invariants(m, &ea, &brute).unwrap());
        prop_assert!(meet.quotient_invariants(&ha).is_err() || meet == ha);
    }

    #[test]
    fn matrix_entries_are_reduced(rows in prop::collection::vec(prop::collection::vec(-50i64..50, 3), 1..4)) {
        let m = Modulus::new(6).unwrap();
        let a = ResidueMatrix::from_signed(m, 3, &rows).unwrap();
        for (i, r) in rows.iter().enumerate() {
            for (j, &x) in r.iter().enumerate() {
                prop_assert_eq!(a.get(i, j), x.rem_euclid(6) as u64);
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn dual_involution_and_state_agreement(c in code_case(&[2, 3, 4, 6], 5)) {
        let code = c.code();
        let dual = code.dual();
        prop_assert_eq!(dual.dual(), code.clone());
        let n = code.axis_len();
        for k in 1..n {
            let cut = TimeSubset::past(n, k);
            let r = state_space(&code, &cut).unwrap();
            prop_assert!(r.consistent(), "{:?}", r);
            prop_assert_eq!(r.two_sided, state_space(&dual, &cut).unwrap().two_sided);
        }
    }

    #[test]
    fn interval_tests_agree_and_dualize(c in code_case(&[2, 4, 6], 5)) {
        let code = c.code();
        let dual = code.dual();
        let n = code.axis_len();
        for m in 0..=n {
            for e in m..=n {
                let ctl = controllability_tests(&code, m, e).unwrap();
                let obs = observability_tests(&dual, m, e).unwrap();
                prop_assert!(ctl.agree() && obs.agree());
                prop_assert_eq!(ctl.first, obs.first);
            }
        }
        for k in 0..n {
            for j in 0..n - k {
                prop_assert!(granule_duality_check(&code, k, j).unwrap());
            }
        }
    }

    #[test]
    fn syndrome_former_is_a_coset_invariant_homomorphism(
        c in code_case(&[2, 4, 6], 5),
        seed in any::<u64>(),
    ) {
        let code = c.code();
        let m = code.modulus();
        let dim = code.layout().total_dim();
        let sf = SyndromeFormer::new(&code).unwrap();
        prop_assert_eq!(sf.kernel(), code.carrier().clone());
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let enc = ObserverEncoder::new(&code).unwrap();
        let (cw, _) = enc.encode(&enc.random_inputs(&mut rng)).unwrap();
        prop_assert!(code.code_membership(&cw).unwrap());
        let w: Vec<u64> = (0..dim).map(|i| m.reduce(seed.rotate_left(i as u32 * 7))).collect();
        let u: Vec<u64> = (0..dim).map(|i| m.reduce(seed.rotate_right(i as u32 * 5 + 1))).collect();
        let (sw, _) = sf.form_syndromes(&w).unwrap();
        let (su, _) = sf.form_syndromes(&u).unwrap();
        let (swu, _) = sf.form_syndromes(&add_vec(m, &w, &u)).unwrap();
        let (swc, _) = sf.form_syndromes(&add_vec(m, &w, &cw)).unwrap();
        for k in 0..sw.len() {
            let sum: Vec<u64> = add_vec(m, &sw[k], &su[k]);
            prop_assert_eq!(&swu[k], &sum);
        }
        prop_assert_eq!(sw, swc);
    }

    #[test]
    fn spec_files_round_trip(c in code_case(&[2, 3, 4, 6], 4)) {
        let code = c.code();
        let f = CodeSpecFile::explicit_from_code(&code, None, Some(1));
        let back = CodeSpecFile::parse(&f.to_toml()).unwrap();
        prop_assert_eq!(&back, &f);
        prop_assert_eq!(back.load().unwrap().code, code);
    }
}

use chromhom_core::oracle::expand_numbering_vector;
use chromhom_core::perm::Permutation;
use chromhom_core::tableaux::{enumerate_syt, pi_expand, Numbering, NumberingVector, Partition, Straightener};
use num_bigint::BigInt;
use proptest::prelude::*;

/// `n! / Π hooks`
fn hook_length_count(shape: &[usize]) -> u64 {
    let n: usize = shape.iter().sum();
    let hooks: u64 = shape
        .iter()
        .enumerate()
        .flat_map(|(i, &len)| {
            (0..len).map(move |j| (len - j + shape[i + 1..].iter().filter(|&&l| l > j).count()) as u64)
        })
        .product();
    (1..=n as u64).product::<u64>() / hooks
}

#[test]
fn syt_counts_match_hook_length_formula() {
    for n in 1..=9 {
        for k in 0..=n / 2 {
            let shape = Partition::two_column(n, k).unwrap();
            let syt = enumerate_syt(&shape);
            assert_eq!(syt.len() as u64, hook_length_count(shape.parts()), "shape {shape}");
            assert!(syt.iter().all(Numbering::is_standard));
            assert!(syt.windows(2).all(|w| w[0] != w[1]));
        }
    }
}

fn shuffled(shape: &Partition, images: &[u16]) -> Numbering {
    let sigma = Permutation::from_images(images.to_vec()).unwrap();
    enumerate_syt(shape)[0].act(&sigma)
}

/// A two-column shape with `n` boxes and a permutation of `1..=n`.
fn numbering_strategy() -> impl Strategy<Value = (Partition, Vec<u16>)> {
    (2usize..=6).prop_flat_map(|n| {
        let labels: Vec<u16> = (1..=n as u16).collect();
        (1..=n / 2, Just(labels).prop_shuffle()).prop_map(move |(k, p)| (Partition::two_column(n, k).unwrap(), p))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(120))]

    #[test]
    fn symbolic_straightening_matches_group_algebra((shape, images) in numbering_strategy()) {
        let s = shuffled(&shape, &images);
        let basis = enumerate_syt(&shape);
        let v = NumberingVector::from_numbering(&s, 0);
        let symbolic = Straightener::new(basis.clone(), 0).unwrap().rewrite(&v).unwrap();
        let oracle = expand_numbering_vector(&v, &basis).unwrap();
        prop_assert_eq!(symbolic, oracle);
    }

    #[test]
    fn permuting_within_rows_changes_nothing((shape, images) in numbering_strategy()) {
        let s = shuffled(&shape, &images);
        let mut rows = s.rows().to_vec();
        for r in rows.iter_mut() {
            r.reverse();
        }
        let t = Numbering::new(rows).unwrap();
        let basis = enumerate_syt(&shape);
        let a = Straightener::new(basis.clone(), 0).unwrap().straighten(&NumberingVector::from_numbering(&s, 0)).unwrap();
        let b = Straightener::new(basis, 0).unwrap().straighten(&NumberingVector::from_numbering(&t, 0)).unwrap();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn exchange_relations_hold_in_the_group_algebra((shape, images) in numbering_strategy()) {
        let s = shuffled(&shape, &images);
        let basis = enumerate_syt(&shape);
        let direct = expand_numbering_vector(&NumberingVector::from_numbering(&s, 0), &basis).unwrap();
        for upper in 1..s.rows().len() {
            let width = s.rows()[upper].len();
            for j in 1..=width {
                let v = pi_expand(&s, upper, j).unwrap();
                let expanded = expand_numbering_vector(&v, &basis).unwrap();
                prop_assert_eq!(&expanded, &direct, "pi_({},{}) on {}", upper, j, s);
            }
        }
    }
}

#[test]
fn standard_numbering_expands_to_itself() {
    let shape = Partition::two_column(6, 2).unwrap();
    let basis = enumerate_syt(&shape);
    let st = Straightener::new(basis.clone(), 0).unwrap();
    for (i, y) in basis.iter().enumerate() {
        let c = st.straighten(&NumberingVector::from_numbering(y, 0)).unwrap();
        let mut e = vec![BigInt::from(0); basis.len()];
        e[i] = BigInt::from(1);
        assert_eq!(c, e);
    }
}

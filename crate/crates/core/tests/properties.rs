use proptest::prelude::*;

use skolem_xray::bijection::{
    extremal_pairing_to_permutation, involution_to_pairing, pairing_to_involution,
    permutation_to_extremal_pairing,
};
use skolem_xray::ds::{birkhoff_decompose, matrix_diagonal_xray, DSMatrix};
use skolem_xray::parse::{parse_multiset, parse_pairing, parse_permutation, parse_xray};
use skolem_xray::skolem::{
    density_condition, pairing_to_sequence, parity_condition, sequence_to_pairing, solve_partition,
};
use skolem_xray::xray::{antidiagonal_xray, diagonal_xray, reverse_rows};
use skolem_xray::{DifferenceMultiset, Pairing, Permutation, Rational, SearchBudget, XRay};

fn permutation(max_n: usize) -> impl Strategy<Value = Permutation> {
    (1..=max_n)
        .prop_flat_map(|n| Just((1..=n).collect::<Vec<_>>()).prop_shuffle())
        .prop_map(|v| Permutation::new(v).unwrap())
}

fn pairing(max_n: usize) -> impl Strategy<Value = Pairing> {
    permutation(2 * max_n)
        .prop_filter("even order", |p| p.order() % 2 == 0)
        .prop_map(|p| {
            let pairs = p
                .images()
                .chunks(2)
                .map(|c| (c[0].min(c[1]), c[0].max(c[1])))
                .collect();
            Pairing::new(pairs).unwrap()
        })
}

proptest! {
    #[test]
    fn sequence_round_trip(p in pairing(8)) {
        let seq = pairing_to_sequence(&p);
        prop_assert_eq!(sequence_to_pairing(seq.symbols()).unwrap(), p);
    }

    #[test]
    fn involution_round_trip(p in pairing(8)) {
        let pi = pairing_to_involution(&p);
        prop_assert_eq!(involution_to_pairing(&pi).unwrap(), p);
    }

    #[test]
    fn extremal_round_trip(pi in permutation(9)) {
        let p = permutation_to_extremal_pairing(&pi);
        prop_assert!(p.is_extremal());
        prop_assert_eq!(extremal_pairing_to_permutation(&p).unwrap(), pi);
    }

    #[test]
    fn reverse_rows_is_involution(pi in permutation(9)) {
        prop_assert_eq!(reverse_rows(&reverse_rows(&pi)), pi.clone());
        prop_assert_eq!(diagonal_xray(&reverse_rows(&pi)), antidiagonal_xray(&pi).reversed());
    }

    #[test]
    fn xray_sums_to_order(pi in permutation(9)) {
        let n = Rational::from_integer((pi.order() as i64).into());
        prop_assert_eq!(diagonal_xray(&pi).sums().iter().sum::<Rational>(), n.clone());
        prop_assert_eq!(antidiagonal_xray(&pi).sums().iter().sum::<Rational>(), n);
    }

    #[test]
    fn text_round_trip(pi in permutation(9), p in pairing(6)) {
        prop_assert_eq!(parse_permutation(&pi.to_string()).unwrap(), pi.clone());
        let json = serde_json::to_string(&pi).unwrap();
        prop_assert_eq!(parse_permutation(&json).unwrap(), pi.clone());
        let x = diagonal_xray(&pi);
        prop_assert_eq!(parse_xray(&x.to_string()).unwrap(), x.clone());
        prop_assert_eq!(parse_xray(&serde_json::to_string(&x).unwrap()).unwrap(), x);
        let a = p.differences();
        prop_assert_eq!(parse_multiset(&a.to_string()).unwrap(), a);
        prop_assert_eq!(parse_pairing(&serde_json::to_string(&p).unwrap()).unwrap(), p);
    }

    #[test]
    fn solver_witnesses_are_valid(v in prop::collection::vec(1u64..12, 1..6)) {
        let a = DifferenceMultiset::new(v).unwrap();
        let r = solve_partition(&a, SearchBudget::UNLIMITED);
        if let Some(w) = r.witness() {
            prop_assert_eq!(w.differences(), a.clone());
            prop_assert!(parity_condition(&a));
            prop_assert!(density_condition(&a));
        }
    }

    #[test]
    fn birkhoff_reconstructs(perms in prop::collection::vec(permutation(5), 1..5),
                             weights in prop::collection::vec(1i64..9, 5)) {
        let n = perms[0].order();
        let perms: Vec<_> = perms.into_iter().filter(|p| p.order() == n).collect();
        let total: i64 = weights[..perms.len()].iter().sum();
        let mut rows = vec![vec![Rational::from_integer(0.into()); n]; n];
        for (p, &w) in perms.iter().zip(&weights) {
            let c = Rational::new(w.into(), total.into());
            for (i, &j) in p.images().iter().enumerate() {
                rows[i][j - 1] += &c;
            }
        }
        let d = DSMatrix::new(rows.clone()).unwrap();
        let dec = birkhoff_decompose(&d).unwrap();
        prop_assert_eq!(dec.reconstruct(), rows);
        prop_assert_eq!(dec.coefficient_sum(), Rational::from_integer(1.into()));
        let x: XRay = matrix_diagonal_xray(&d);
        prop_assert_eq!(x.sums().iter().sum::<Rational>(), Rational::from_integer((n as i64).into()));
    }
}

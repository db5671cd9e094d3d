//! Randomized invariants over small instances: linear-algebra laws, coset
//! structure, tamper-function algebra, and format round-trips.

use std::collections::BTreeSet;

use coset_nmc::code::reduce_parity_check;
use coset_nmc::formats::{parse_alist, parse_dense, to_alist_string, to_dense_string};
use coset_nmc::{
    decode, dot, encode, encode_all, statistical_distance, BitMatrix, BitSource, BitVec, Cap,
    Codeword, ExactDistribution, LinearCode, Message, Outcome, TamperFunction,
};
use num_traits::Zero;
use proptest::prelude::*;

fn entries(rows: usize, cols: usize) -> impl Strategy<Value = Vec<u8>> {
    proptest::collection::vec(0u8..=1, rows * cols)
}

fn matrix() -> impl Strategy<Value = BitMatrix> {
    (1usize..=5, 1usize..=10).prop_flat_map(|(rows, cols)| {
        entries(rows, cols).prop_map(move |e| BitMatrix::from_entries(rows, cols, &e))
    })
}

/// A full-rank parity check obtained by row-reducing an arbitrary matrix;
/// rank-zero draws are discarded.
fn code() -> impl Strategy<Value = LinearCode> {
    matrix().prop_filter_map("matrix had rank zero", |m| {
        let h = reduce_parity_check(&m).ok()?;
        LinearCode::from_parity_check("prop", h).ok()
    })
}

fn word(len: usize) -> impl Strategy<Value = BitVec> {
    proptest::collection::vec(any::<bool>(), len).prop_map(|bits| BitVec::from_bools(&bits))
}

fn tamper_string(len: usize) -> impl Strategy<Value = String> {
    proptest::collection::vec(proptest::sample::select(vec!['k', 'f', '0', '1']), len)
        .prop_map(|chars| chars.into_iter().collect())
}

fn distribution() -> impl Strategy<Value = ExactDistribution> {
    proptest::collection::btree_map(0u64..16, 1u64..50, 1..6).prop_map(|counts| {
        let mapped = counts
            .into_iter()
            .map(|(idx, c)| (Outcome::Value(Message::from(BitVec::from_counter(4, idx))), c))
            .collect();
        ExactDistribution::from_counts(mapped).expect("counts are nonempty and positive")
    })
}

proptest! {
    #[test]
    fn matrix_vector_product_is_linear(
        (m, x, y) in matrix().prop_flat_map(|m| {
            let cols = m.cols();
            (Just(m), word(cols), word(cols))
        })
    ) {
        let mut sum = x.clone();
        sum.xor_assign(&y);
        let mut rhs = m.mul_vec(&x).unwrap();
        rhs.xor_assign(&m.mul_vec(&y).unwrap());
        prop_assert_eq!(m.mul_vec(&sum).unwrap(), rhs);
    }

    #[test]
    fn rank_is_invariant_under_transpose(m in matrix()) {
        prop_assert_eq!(m.rank(), m.transposed().rank());
    }

    #[test]
    fn solutions_form_a_coset_of_the_nullspace(
        (m, b, coeffs) in matrix().prop_flat_map(|m| {
            let rows = m.rows();
            let free = m.cols() - m.rank();
            (Just(m), word(rows), proptest::collection::vec(any::<bool>(), free))
        })
    ) {
        if let Some(x) = m.solve(&b).unwrap() {
            prop_assert_eq!(m.mul_vec(&x).unwrap(), b.clone());
            let mut shifted = x;
            for (basis, &on) in m.nullspace_basis().iter().zip(&coeffs) {
                if on {
                    shifted.xor_assign(basis);
                }
            }
            prop_assert_eq!(m.mul_vec(&shifted).unwrap(), b);
        }
    }

    #[test]
    fn cosets_partition_the_whole_space(c in code()) {
        let mut seen = BTreeSet::new();
        let mut total = 0usize;
        for counter in 0..1u64 << c.r() {
            let m = Message::from(BitVec::from_counter(c.r(), counter));
            for x in encode_all(&c, &m, Cap::default()).unwrap() {
                prop_assert_eq!(decode(&c, &x).unwrap(), m.clone());
                seen.insert(x.to_string());
                total += 1;
            }
        }
        prop_assert_eq!(total, 1 << c.n());
        prop_assert_eq!(seen.len(), 1 << c.n());
    }

    #[test]
    fn decoding_is_linear(
        (c, x, y) in code().prop_flat_map(|c| {
            let n = c.n();
            (Just(c), word(n), word(n))
        })
    ) {
        let mut sum = x.clone();
        sum.xor_assign(&y);
        let mut rhs = decode(&c, &Codeword::from(x)).unwrap().bits().clone();
        rhs.xor_assign(decode(&c, &Codeword::from(y)).unwrap().bits());
        let decoded_sum = decode(&c, &Codeword::from(sum)).unwrap();
        prop_assert_eq!(decoded_sum.bits(), &rhs);
    }

    #[test]
    fn encoding_is_deterministic_and_round_trips(
        (c, counter, seed) in (code(), any::<u64>(), any::<u64>())
    ) {
        let m = Message::from(BitVec::from_counter(c.r(), counter));
        let first = encode(&c, &m, &mut BitSource::from_seed(seed)).unwrap();
        let second = encode(&c, &m, &mut BitSource::from_seed(seed)).unwrap();
        prop_assert_eq!(&first, &second);
        prop_assert_eq!(decode(&c, &first).unwrap(), m);
    }

    #[test]
    fn tampering_matches_its_algebraic_normal_form(
        (f, bits) in (1usize..=12).prop_flat_map(|n| (tamper_string(n), word(n)))
    ) {
        let f: TamperFunction = f.parse().unwrap();
        let st = f.structure();
        let mut expected = bits.clone();
        expected.and_assign(&st.mask_keepflip(f.len()));
        expected.xor_assign(&st.e);
        expected.xor_assign(&st.eps);
        let got = f.apply(&Codeword::from(bits)).unwrap();
        prop_assert_eq!(got.bits(), &expected);
        prop_assert_eq!(st.fixed_count, st.s_01.len());
    }

    #[test]
    fn tamper_strings_round_trip(s in (0usize..=16).prop_flat_map(tamper_string)) {
        prop_assume!(!s.is_empty());
        let f: TamperFunction = s.parse().unwrap();
        prop_assert_eq!(f.to_string(), s);
    }

    #[test]
    fn bit_strings_round_trip(bits in (1usize..=80).prop_flat_map(word)) {
        let text = bits.to_string();
        prop_assert_eq!(text.parse::<BitVec>().unwrap(), bits);
    }

    #[test]
    fn dense_text_round_trips(m in matrix()) {
        prop_assert_eq!(parse_dense(&to_dense_string(&m)).unwrap(), m);
    }

    #[test]
    fn alist_text_round_trips(m in matrix()) {
        prop_assert_eq!(parse_alist(&to_alist_string(&m)).unwrap(), m);
    }

    #[test]
    fn statistical_distance_is_a_bounded_metric(
        (p, q) in (distribution(), distribution())
    ) {
        let zero = statistical_distance(&p, &p);
        prop_assert!(zero.is_zero());
        let d = statistical_distance(&p, &q);
        prop_assert_eq!(&d, &statistical_distance(&q, &p));
        prop_assert!(d >= num_rational::BigRational::zero());
        prop_assert!(d <= num_traits::One::one());
        prop_assert_eq!(d.is_zero(), p.same_distribution(&q));
    }

    #[test]
    fn syndrome_of_sum_with_codeword_is_unchanged(
        (c, x, coeffs) in code().prop_flat_map(|c| {
            let n = c.n();
            let k = c.k();
            (Just(c), word(n), proptest::collection::vec(any::<bool>(), k))
        })
    ) {
        let mut shifted = x.clone();
        for (basis, &on) in c.kernel_basis().iter().zip(&coeffs) {
            if on {
                shifted.xor_assign(basis);
            }
        }
        prop_assert_eq!(
            decode(&c, &Codeword::from(x)).unwrap(),
            decode(&c, &Codeword::from(shifted)).unwrap()
        );
    }

    #[test]
    fn dual_words_have_zero_dot_with_all_codewords(
        (c, lambda_counter) in code().prop_flat_map(|c| {
            let r = c.r();
            (Just(c), 0..1u64 << r)
        })
    ) {
        let lambda = BitVec::from_counter(c.r(), lambda_counter);
        let dual_word = c.parity_check().row_combination(&lambda).unwrap();
        for basis in c.kernel_basis() {
            prop_assert!(!dot(&dual_word, basis));
        }
    }
}

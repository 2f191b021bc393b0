use proptest::prelude::*;

use slice_ss::gf2::{coset_reduce, image_basis, kernel_basis, rank, Echelon, Gf2Matrix, Gf2Vector};

fn vector(len: usize) -> impl Strategy<Value = Gf2Vector> {
    proptest::collection::vec(any::<bool>(), len).prop_map(|bits| Gf2Vector::from_bits(&bits))
}

fn matrix() -> impl Strategy<Value = Gf2Matrix> {
    (0usize..=64, 0usize..=64).prop_flat_map(|(r, c)| {
        proptest::collection::vec(vector(c), r).prop_map(move |rows| Gf2Matrix::from_rows(c, rows).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rank_nullity(m in matrix()) {
        let kernel = kernel_basis(&m);
        prop_assert_eq!(rank(&m) + kernel.len(), m.num_cols());
        for k in &kernel {
            prop_assert!(m.apply(k).unwrap().is_zero());
        }
        prop_assert_eq!(Echelon::from_vectors(m.num_cols(), &kernel).unwrap().dim(), kernel.len());
    }

    #[test]
    fn rank_of_transpose(m in matrix()) {
        prop_assert_eq!(rank(&m), rank(&m.transpose()));
    }

    #[test]
    fn images_lie_in_the_image(m in matrix(), seed in any::<u64>()) {
        let image = Echelon::from_vectors(m.num_rows(), &image_basis(&m)).unwrap();
        prop_assert_eq!(image.dim(), rank(&m));
        let bits: Vec<bool> = (0..m.num_cols()).map(|i| (seed >> (i % 64)) & 1 == 1).collect();
        let x = Gf2Vector::from_bits(&bits);
        prop_assert!(image.contains(&m.apply(&x).unwrap()).unwrap());
    }

    #[test]
    fn coset_reduce_is_idempotent_and_linear(
        basis in proptest::collection::vec(vector(24), 0..12),
        u in vector(24),
        v in vector(24),
    ) {
        let ru = coset_reduce(&u, &basis).unwrap();
        let rv = coset_reduce(&v, &basis).unwrap();
        prop_assert_eq!(coset_reduce(&ru, &basis).unwrap(), ru.clone());
        prop_assert_eq!(coset_reduce(&u.sum(&v), &basis).unwrap(), ru.sum(&rv));
        let span = Echelon::from_vectors(24, &basis).unwrap();
        prop_assert!(span.contains(&u.sum(&ru)).unwrap());
    }
}

use monogenic::linalg::{subquotient, vector, FieldDescriptor, Matrix, Scalar};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

fn field(order: usize) -> FieldDescriptor {
    if order <= 2 {
        FieldDescriptor::rationals()
    } else {
        FieldDescriptor::cyclotomic(order)
    }
}

fn scalar(f: &FieldDescriptor, raw: &[(i64, i64)]) -> Scalar {
    let coeffs = raw
        .iter()
        .take(f.degree())
        .map(|&(n, d)| BigRational::new(BigInt::from(n), BigInt::from(d)))
        .collect();
    f.from_coeffs(coeffs)
}

fn raw_scalar() -> impl Strategy<Value = Vec<(i64, i64)>> {
    prop::collection::vec((-6i64..=6, 1i64..=4), 4)
}

proptest! {
    #[test]
    fn field_axioms(order in prop::sample::select(vec![1usize, 3, 4, 5, 6, 8]),
                    x in raw_scalar(), y in raw_scalar(), z in raw_scalar()) {
        let f = field(order);
        let (a, b, c) = (scalar(&f, &x), scalar(&f, &y), scalar(&f, &z));
        prop_assert_eq!(f.add(&a, &b), f.add(&b, &a));
        prop_assert_eq!(f.mul(&a, &b), f.mul(&b, &a));
        prop_assert_eq!(f.mul(&f.mul(&a, &b), &c), f.mul(&a, &f.mul(&b, &c)));
        prop_assert_eq!(f.mul(&a, &f.add(&b, &c)), f.add(&f.mul(&a, &b), &f.mul(&a, &c)));
        prop_assert_eq!(f.add(&a, &f.neg(&a)), f.zero());
        prop_assert_eq!(f.mul(&a, &f.one()), a.clone());
        if !a.is_zero() {
            let inv = f.inv(&a).unwrap();
            prop_assert!(f.mul(&a, &inv).is_one());
        }
    }

    #[test]
    fn zeta_has_exact_order(order in 3usize..13) {
        let f = FieldDescriptor::cyclotomic(order);
        let z = f.zeta();
        prop_assert!(f.pow(&z, order as u64).is_one());
        for k in 1..order {
            prop_assert!(!f.pow(&z, k as u64).is_one());
        }
    }

    #[test]
    fn rank_nullity(rows in 1usize..5, cols in 1usize..6, entries in prop::collection::vec(-3i64..=3, 30)) {
        let f = FieldDescriptor::cyclotomic(3);
        let z = f.zeta();
        let data: Vec<Vec<Scalar>> = (0..rows)
            .map(|r| (0..cols).map(|c| {
                let e = entries[r * cols + c];
                if e == 3 { z.clone() } else { f.from_i64(e) }
            }).collect())
            .collect();
        let m = Matrix::from_rows(&f, data, cols);
        let kernel = m.kernel_basis();
        prop_assert_eq!(m.rank() + kernel.len(), cols);
        for v in &kernel {
            prop_assert!(vector::is_zero(&m.apply(v)));
        }
        prop_assert_eq!(m.rank(), m.transpose().rank());
    }

    #[test]
    fn subquotient_project_lift(dim in 1usize..6, entries in prop::collection::vec(-2i64..=2, 30),
                                q in prop::collection::vec(-4i64..=4, 6)) {
        let f = FieldDescriptor::rationals();
        let spanning: Vec<Vec<Scalar>> = entries.chunks(dim).take(3).filter(|c| c.len() == dim)
            .map(|c| c.iter().map(|&e| f.from_i64(e)).collect()).collect();
        let s = subquotient(&f, dim, &spanning);
        prop_assert_eq!(s.sub_dim() + s.quotient_dim(), dim);
        let qv: Vec<Scalar> = q.iter().take(s.quotient_dim()).map(|&e| f.from_i64(e)).collect();
        prop_assert_eq!(s.project(&s.lift(&qv)), qv);
        for v in &spanning {
            prop_assert!(s.contains(v));
            prop_assert!(vector::is_zero(&s.project(v)));
        }
    }
}

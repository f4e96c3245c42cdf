use num::{One, Zero};

use crate::linalg::{QMatrix, Q};

use super::FiniteComplex;

/// Block layout of `(A (x) B)^k = sum_{p+q=k} A^p (x) B^q`, `p` ascending.
fn blocks(a: &FiniteComplex, b: &FiniteComplex, k: usize) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    let mut off = 0;
    for p in 0..=k.min(a.top_degree()) {
        let q = k - p;
        if q > b.top_degree() {
            continue;
        }
        out.push((p, q, off));
        off += a.dim(p) * b.dim(q);
    }
    out
}

/// Tensor product complex with `D = D_A (x) 1 + (-1)^p 1 (x) D_B`.
///
/// The basis of `A^p (x) B^q` is `i * dim B^q + j`, so a value index running
/// fastest in `B` stays fastest in the product.
pub fn total_complex(a: &FiniteComplex, b: &FiniteComplex) -> FiniteComplex {
    let top = a.top_degree() + b.top_degree();
    let layout: Vec<Vec<(usize, usize, usize)>> = (0..=top).map(|k| blocks(a, b, k)).collect();
    let dims: Vec<usize> = (0..=top).map(|k| layout[k].iter().map(|&(p, q, _)| a.dim(p) * b.dim(q)).sum()).collect();
    let mut differentials = Vec::with_capacity(top);
    for k in 0..top {
        let mut entries: Vec<(usize, usize, Q)> = Vec::new();
        let offset_of = |p: usize, q: usize| layout[k + 1].iter().find(|&&(pp, qq, _)| pp == p && qq == q).map(|t| t.2);
        for &(p, q, src_off) in &layout[k] {
            let (da, db) = (a.dim(p), b.dim(q));
            // D_A (x) 1 into (p+1, q)
            if let Some(dst_off) = offset_of(p + 1, q) {
                let d = a.differential(p);
                for r in 0..d.nrows() {
                    for (c, v) in d.row(r) {
                        for j in 0..db {
                            entries.push((dst_off + r * db + j, src_off + c * db + j, v.clone()));
                        }
                    }
                }
            }
            // (-1)^p 1 (x) D_B into (p, q+1)
            if let Some(dst_off) = offset_of(p, q + 1) {
                let d = b.differential(q);
                let sign = if p % 2 == 0 { Q::one() } else { -Q::one() };
                let dbn = b.dim(q + 1);
                for i in 0..da {
                    for r in 0..d.nrows() {
                        for (c, v) in d.row(r) {
                            entries.push((dst_off + i * dbn + r, src_off + i * db + c, &sign * v));
                        }
                    }
                }
            }
        }
        entries.retain(|(_, _, v)| !v.is_zero());
        differentials.push(QMatrix::from_triplets(dims[k + 1], dims[k], entries));
    }
    let c = FiniteComplex::new(dims, differentials).expect("Koszul-signed tensor product squares to zero");
    c.with_label(format!("{} (x) {}", a.label(), b.label())).with_coefficient_dim(b.coefficient_dim())
}

/// Künneth prediction `sum_p a_p b_{k-p}`.
pub fn kunneth_convolution(a: &[usize], b: &[usize]) -> Vec<usize> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0; a.len() + b.len() - 1];
    for (p, x) in a.iter().enumerate() {
        for (q, y) in b.iter().enumerate() {
            out[p + q] += x * y;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cochain::tests::circle;
    use proptest::prelude::*;

    #[test]
    fn acyclic_square() {
        let a = FiniteComplex::new(vec![1, 1], vec![QMatrix::identity(1)]).unwrap();
        let t = total_complex(&a, &a);
        assert_eq!(t.dims(), &[1, 2, 1]);
        assert_eq!(t.betti().betti, vec![0, 0, 0]);
    }

    #[test]
    fn unit_is_neutral() {
        let c = circle();
        assert_eq!(total_complex(&c, &FiniteComplex::unit()).betti(), c.betti());
        assert_eq!(total_complex(&FiniteComplex::unit(), &c).betti(), c.betti());
    }

    #[test]
    fn torus_from_circles() {
        let c = circle();
        let t = total_complex(&c, &c);
        assert_eq!(t.betti().betti, vec![1, 2, 1]);
    }

    // random complexes: D_0 arbitrary, D_1 chosen in the left kernel of D_0
    fn random_complex() -> impl Strategy<Value = FiniteComplex> {
        (1usize..4, 1usize..4, 0usize..3, proptest::collection::vec(-2i64..3, 9), proptest::collection::vec(-2i64..3, 9))
            .prop_map(|(d0, d1, d2, e0, e1)| {
                let m0 = QMatrix::from_triplets(d1, d0, (0..d1 * d0).map(|t| (t / d0, t % d0, crate::linalg::q(e0[t % 9]))));
                // rows of D_1 from combinations of left-kernel vectors of D_0
                let left = m0.transpose().kernel();
                let rows: Vec<Vec<Q>> = (0..d2)
                    .map(|r| {
                        let mut v = vec![Q::zero(); d1];
                        for (i, l) in left.iter().enumerate() {
                            let c = crate::linalg::q(e1[(r * 3 + i) % 9]);
                            for (x, y) in v.iter_mut().zip(l) {
                                *x += &c * y;
                            }
                        }
                        v
                    })
                    .collect();
                let m1 = QMatrix::from_dense(d2, d1, &rows);
                FiniteComplex::new(vec![d0, d1, d2], vec![m0, m1]).unwrap()
            })
    }

    proptest! {
        #[test]
        fn kunneth_on_random_complexes(a in random_complex(), b in random_complex()) {
            let t = total_complex(&a, &b);
            prop_assert!(t.check_d_squared().is_ok());
            prop_assert_eq!(t.betti().betti, kunneth_convolution(&a.betti().betti, &b.betti().betti));
        }
    }
}

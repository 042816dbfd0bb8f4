use galois_rings::{linalg, GaloisRing, Mat};
use root_data::{Root, RootDatum};

fn j_form(r: &GaloisRing, n: usize) -> Mat {
    let mut j = Mat::zeros(r, 2 * n, 2 * n);
    for i in 0..n {
        j.set(i, n + i, r.one());
        j.set(n + i, i, r.from_int(-1));
    }
    j
}

fn is_in_sp(x: &Mat, j: &Mat) -> bool {
    (&x.transpose() * j).add(&(j * x)).is_zero()
}

#[test]
fn rank_two_root_vectors_match_printed_matrices() {
    let r = GaloisRing::zp(5, 1).unwrap();
    let d = RootDatum::new(2);
    let x = |root: Root| d.root_vector(&r, &root);
    let printed = |rows: [[i64; 4]; 4]| Mat::from_ints(&r, &rows.map(|row| row.to_vec()));
    assert_eq!(x(Root::long(2, 1)), printed([[0, 0, 1, 0], [0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0]]));
    assert_eq!(x(Root::long(2, 2)), printed([[0, 0, 0, 0], [0, 0, 0, 1], [0, 0, 0, 0], [0, 0, 0, 0]]));
    assert_eq!(x(Root::sum(2, 1, 2)), printed([[0, 0, 0, 1], [0, 0, 1, 0], [0, 0, 0, 0], [0, 0, 0, 0]]));
    assert_eq!(x(Root::diff(2, 1, 2)), printed([[0, 1, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0], [0, 0, -1, 0]]));
    for root in d.positive_roots() {
        assert_eq!(x(root.neg()), x(root).transpose());
    }
}

#[test]
fn bracket_relations_rank_two() {
    let r = GaloisRing::zp(23, 1).unwrap();
    let d = RootDatum::new(2);
    let x = |root: Root| d.root_vector(&r, &root);
    let a = x(Root::diff(2, 1, 2));
    assert_eq!(d.bracket(&a, &x(Root::long(2, 2))), x(Root::sum(2, 1, 2)));
    assert_eq!(d.bracket(&a, &x(Root::sum(2, 1, 2))), x(Root::long(2, 1)).scale_int(2));
    assert!(d.bracket(&a, &a).is_zero());
}

#[test]
fn root_vectors_lie_in_sp_and_are_eigenvectors() {
    for n in 1..=3 {
        let r = GaloisRing::zp(101, 1).unwrap();
        let d = RootDatum::new(n);
        let j = j_form(&r, n);
        assert_eq!(d.roots().len(), 2 * n * n);
        for root in d.roots() {
            let xr = d.root_vector(&r, root);
            assert!(is_in_sp(&xr, &j));
            for i in 1..=n {
                let h = d.torus_vector(&r, i);
                // [H_i, X_λ] = λ(H_i) X_λ with λ(H_i) = L_i-coefficient
                assert_eq!(h.bracket(&xr), xr.scale_int(root.coeffs()[i - 1]));
            }
        }
        let basis = d.basis(&r);
        assert_eq!(basis.len(), n * (2 * n + 1));
        let rows: Vec<Vec<_>> = basis.iter().map(|m| m.data().to_vec()).collect();
        assert_eq!(linalg::rank(&linalg::rows_to_mat(&r, 4 * n * n, &rows)), d.dim());
    }
}

#[test]
fn height_multiplicities() {
    // number of positive roots of height h in C_n is the number of exponents >= h
    for n in 2..=3usize {
        let d = RootDatum::new(n);
        let heights: Vec<i64> = d.roots().iter().map(|r| r.height()).collect();
        let top = 2 * n as i64 - 1;
        assert_eq!(heights.iter().filter(|&&h| h == top).count(), 1);
        assert!(heights.iter().all(|h| *h != 0 && h.abs() <= top));
        for h in 1..=top {
            let pos = heights.iter().filter(|&&x| x == h).count();
            let neg = heights.iter().filter(|&&x| x == -h).count();
            assert_eq!(pos, neg);
            // oracle: count roots of C_n with this height by brute force over simple-root coefficients
            let count = brute_count(n, h);
            assert_eq!(pos, count, "n={n} h={h}");
        }
    }
}

fn brute_count(n: usize, h: i64) -> usize {
    let mut count = 0;
    let bound = 3i64;
    let mut c = vec![0i64; n];
    loop {
        if c.iter().sum::<i64>() == h {
            let mut l = vec![0i64; n];
            for i in 0..n {
                if i + 1 < n {
                    l[i] += c[i];
                    l[i + 1] -= c[i];
                } else {
                    l[i] += 2 * c[i];
                }
            }
            if root_data::is_root(&l) {
                count += 1;
            }
        }
        let mut k = 0;
        loop {
            if k == n {
                return count;
            }
            c[k] += 1;
            if c[k] < bound {
                break;
            }
            c[k] = 0;
            k += 1;
        }
    }
}

#[test]
fn filtration_dimensions_rank_two() {
    let f = GaloisRing::zp(5, 1).unwrap();
    let d = RootDatum::new(2);
    assert_eq!(d.filtration(&f, 1).dim(), 4);
    assert_eq!(d.filtration(&f, 3).dim(), 1);
    assert_eq!(d.filtration(&f, -3).dim(), 10);
    assert_eq!(d.filtration(&f, 0).dim(), 6);
    let dims: Vec<usize> = (-4..=4).map(|k| d.filtration(&f, k).dim()).collect();
    assert!(dims.windows(2).all(|w| w[0] >= w[1]));
    for k in -3..=3 {
        assert_eq!(d.filtration(&f, k).dim() + d.filtration_perp(&f, k).dim(), 10);
        for fv in d.filtration_perp(&f, k).basis() {
            for xv in d.filtration(&f, k).basis() {
                assert!(f.is_zero(&d.pair(&f, fv, xv)));
            }
        }
    }
}

#[test]
fn dual_basis_pairing() {
    let f = GaloisRing::zp(7, 1).unwrap();
    let d = RootDatum::with_zeta(2, 3);
    let basis = d.basis(&f);
    for a in d.roots() {
        let xs = d.dual_root(&f, a);
        for (k, b) in basis.iter().enumerate() {
            let val = d.pair(&f, &xs, &d.coords(b).unwrap());
            let expect = if k == d.index_of(a) { 3 } else { 0 };
            assert_eq!(val, f.from_int(expect));
        }
    }
    for i in 1..=2 {
        let hs = d.dual_torus(&f, i);
        for j in 1..=2 {
            let val = d.pair(&f, &hs, &d.coords(&d.torus_vector(&f, j)).unwrap());
            assert_eq!(val, f.from_int(if i == j { 3 } else { 0 }));
        }
    }
}

#[test]
fn root_space_brackets_fill_target_rank_two() {
    let f = GaloisRing::zp(7, 1).unwrap();
    let d = RootDatum::new(2);
    for mu in d.roots() {
        for g1 in d.roots() {
            if let Some(target) = mu.add(&g1.clone()) {
                let br = d.bracket(&d.root_vector(&f, mu), &d.root_vector(&f, g1));
                let c = d.coords(&br).unwrap();
                let idx = d.index_of(&target);
                assert!(!f.is_zero(&c[idx]));
                assert!(c.iter().enumerate().all(|(i, x)| i == idx || f.is_zero(x)));
            }
        }
    }
}

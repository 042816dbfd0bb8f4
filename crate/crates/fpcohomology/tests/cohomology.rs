use galois_rings::{linalg, Elem, GaloisRing, Mat};
use gmodules::GMod;
use root_data::{Root, RootDatum};

use fpcohomology::{
    balanced_package, coboundary, cocycle_spaces, cohomologous, cup_gram, h1_dim, h1_representatives, is_cocycle,
    local_cup, wiles_difference, z1_basis, Cocycle1, CohomError, FPGroup, LocalTerm,
};

fn all_vectors(f: &GaloisRing, d: usize) -> Vec<Vec<Elem>> {
    let els = f.elements();
    let mut out = vec![Vec::new()];
    for _ in 0..d {
        out = out.iter().flat_map(|v| els.iter().map(move |x| [v.clone(), vec![x.clone()]].concat())).collect();
    }
    out
}

/// Affine matrix `[[A, x], [0, 1]]`: a tuple of values is a cocycle iff these satisfy the relations.
fn affine(a: &Mat, x: &[Elem]) -> Mat {
    let f = a.ring();
    let d = a.rows();
    let mut m = Mat::identity(f, d + 1);
    m.set_block(0, 0, a);
    for (i, v) in x.iter().enumerate() {
        m.set(i, d, v.clone());
    }
    m
}

fn relations_hold(gamma: &FPGroup, mats: &[Mat]) -> bool {
    gamma.relations().iter().all(|r| {
        let mut acc = Mat::identity(mats[0].ring(), mats[0].rows());
        for &(g, e) in r {
            acc = &acc * &mats[g].pow_signed(e).unwrap();
        }
        acc.is_identity()
    })
}

fn perm(f: &GaloisRing, images: [usize; 3]) -> Mat {
    let mut m = Mat::zeros(f, 3, 3);
    for (j, &i) in images.iter().enumerate() {
        m.set(i, j, f.one());
    }
    m
}

#[test]
fn free_group_cocycles_are_unconstrained() {
    let f = GaloisRing::zp(5, 1).unwrap();
    for r in 0..4 {
        let gamma = FPGroup::free(r);
        let m = GMod::trivial(&f, 3, r);
        assert_eq!(z1_basis(&gamma, &m).unwrap().len(), 3 * r);
    }
}

#[test]
fn trivial_group_has_no_cohomology() {
    let f = GaloisRing::zp(5, 1).unwrap();
    let gamma = FPGroup::free(0);
    let m = GMod::trivial(&f, 4, 0);
    assert_eq!(z1_basis(&gamma, &m).unwrap().len(), 0);
    assert_eq!(h1_dim(&gamma, &m).unwrap(), 0);
}

#[test]
fn tame_group_with_trivial_action() {
    let f = GaloisRing::zp(5, 1).unwrap();
    let gamma = FPGroup::tame(11);
    assert_eq!(gamma.tame_parameter(), Some(11));
    for d in [1, 3, 10] {
        let m = GMod::trivial(&f, d, 2);
        assert_eq!(z1_basis(&gamma, &m).unwrap().len(), 2 * d);
        assert_eq!(h1_dim(&gamma, &m).unwrap(), 2 * d);
    }
    // v = 7 is not 1 mod 5: the relation forces (1 - 7) f(tau) = 0
    let gamma = FPGroup::tame(7);
    let m = GMod::trivial(&f, 3, 2);
    assert_eq!(z1_basis(&gamma, &m).unwrap().len(), 3);
}

#[test]
fn cocycle_counts_match_affine_enumeration() {
    let f = GaloisRing::zp(5, 1).unwrap();
    // S3 = < a, b | a^2, b^2, (ab)^3 > permuting coordinates of F_5^3
    let gamma = FPGroup::new(vec!["a".into(), "b".into()], vec![vec![(0, 2)], vec![(1, 2)], vec![(0, 1), (1, 1), (0, 1), (1, 1), (0, 1), (1, 1)]])
        .unwrap();
    let a = perm(&f, [1, 0, 2]);
    let b = perm(&f, [0, 2, 1]);
    let m = GMod::from_actions(&f, 3, vec![a.clone(), b.clone()]).unwrap();
    let vecs = all_vectors(&f, 3);
    let mut count = 0usize;
    for x in &vecs {
        for y in &vecs {
            if relations_hold(&gamma, &[affine(&a, x), affine(&b, y)]) {
                count += 1;
            }
        }
    }
    let z = z1_basis(&gamma, &m).unwrap();
    assert_eq!(5usize.pow(z.len() as u32), count);
    // coprime order: every cocycle is a coboundary
    assert_eq!(h1_dim(&gamma, &m).unwrap(), 0);

    // a cyclic group of order 5 acting unipotently on F_5^2 has nontrivial H^1
    let gamma = FPGroup::cyclic(5);
    let u = Mat::from_ints(&f, &[vec![1, 1], vec![0, 1]]);
    let m = GMod::from_actions(&f, 2, vec![u.clone()]).unwrap();
    let count = all_vectors(&f, 2).iter().filter(|x| relations_hold(&gamma, &[affine(&u, x)])).count();
    let z = z1_basis(&gamma, &m).unwrap();
    assert_eq!(5usize.pow(z.len() as u32), count);
    assert_eq!(h1_dim(&gamma, &m).unwrap(), 1);
}

#[test]
fn basis_vectors_satisfy_relations_and_contain_coboundaries() {
    let f = GaloisRing::zp(7, 1).unwrap();
    let datum = RootDatum::new(2);
    let g = f.primitive_element();
    let t = Mat::diagonal(&f, &[f.pow(&g, 3), f.one(), f.pow(&g, 6), f.pow(&g, 9)]);
    let u = unipotent_2l2(&datum, &f);
    let gamma = FPGroup::new(vec!["t".into(), "u".into()], vec![vec![(0, 6)], vec![(0, 1), (1, 1), (0, -1), (1, -6)]])
        .unwrap();
    let m = GMod::adjoint(&datum, &[t, u]).unwrap();
    let z = z1_basis(&gamma, &m).unwrap();
    for c in &z {
        assert!(is_cocycle(&gamma, &m, c).unwrap());
        for r in gamma.relations() {
            assert!(c.eval_word(&m, r).unwrap().iter().all(|x| f.is_zero(x)));
        }
    }
    let (b, zs) = cocycle_spaces(&gamma, &m).unwrap();
    assert!(zs.contains_space(&b));
    for i in 0..10 {
        let mut e = vec![f.zero(); 10];
        e[i] = f.one();
        let cb = coboundary(&m, &e);
        assert!(is_cocycle(&gamma, &m, &cb).unwrap());
        assert!(cohomologous(&gamma, &m, &cb, &Cocycle1::zero(&m)).unwrap());
    }
    let reps = h1_representatives(&gamma, &m).unwrap();
    assert_eq!(reps.len(), h1_dim(&gamma, &m).unwrap());
}

/// `exp(X_{2L2})`; conjugation by `t = diag(g^3, 1, g^6, g^9)` raises it to the power `g^-9 = 6` at p = 7.
fn unipotent_2l2(datum: &RootDatum, f: &GaloisRing) -> Mat {
    let x = datum.root_vector(f, &Root::long(2, 2));
    &Mat::identity(f, 4) + &x
}

#[test]
fn coprime_cyclic_groups_have_vanishing_h1() {
    let f = GaloisRing::zp(13, 1).unwrap();
    let g = f.primitive_element();
    // chi^3 on F_p for t of order p - 1
    let gamma = FPGroup::cyclic(12);
    let m = GMod::from_actions(&f, 1, vec![Mat::scalar(&f, 1, &f.pow(&g, 3))]).unwrap();
    assert_eq!(h1_dim(&gamma, &m).unwrap(), 0);
    // every order dividing 12 and every diagonal action of that order
    for order in [1i64, 2, 3, 4, 6, 12] {
        let gamma = FPGroup::cyclic(order);
        let zeta = f.pow(&g, 12 / order as u64);
        for k in 0..order {
            let d: Vec<Elem> = (0..3).map(|i| f.pow(&zeta, (k * (i + 1)) as u64)).collect();
            let m = GMod::from_actions(&f, 3, vec![Mat::diagonal(&f, &d)]).unwrap();
            assert_eq!(h1_dim(&gamma, &m).unwrap(), 0, "order {order}, k {k}");
        }
    }
}

fn tame_modules(n: usize, p: u64) -> (RootDatum, FPGroup, GMod) {
    let f = GaloisRing::zp(p, 1).unwrap();
    let datum = RootDatum::new(n);
    let gamma = FPGroup::tame(11);
    let id = Mat::identity(&f, 2 * n);
    let ad = GMod::adjoint(&datum, &[id.clone(), id]).unwrap();
    (datum, gamma, ad)
}

#[test]
fn local_cup_examples() {
    let (datum, gamma, ad) = tame_modules(2, 5);
    let f = ad.field().clone();
    let zero = Cocycle1::zero(&ad);
    let lowest = Root::long(2, 1).neg();
    let mut x = vec![f.zero(); 10];
    x[datum.index_of(&lowest)] = f.one();
    let xs = datum.dual_root(&f, &lowest);
    let fc = Cocycle1::new(vec![vec![f.zero(); 10], x.clone()]);
    let gc = Cocycle1::new(vec![xs.clone(), vec![f.zero(); 10]]);
    assert_eq!(local_cup(&datum, &gamma, &ad, &zero, &gc).unwrap(), f.zero());
    assert_eq!(local_cup(&datum, &gamma, &ad, &fc, &zero).unwrap(), f.zero());
    assert_eq!(local_cup(&datum, &gamma, &ad, &fc, &gc).unwrap(), f.from_int(-1));
    // sigma-only against sigma-only
    let fs = Cocycle1::new(vec![x, vec![f.zero(); 10]]);
    assert_eq!(local_cup(&datum, &gamma, &ad, &fs, &gc).unwrap(), f.zero());
    // with zeta = 3 the value scales
    let datum3 = RootDatum::with_zeta(2, 3);
    let gc3 = Cocycle1::new(vec![datum3.dual_root(&f, &lowest), vec![f.zero(); 10]]);
    assert_eq!(local_cup(&datum3, &gamma, &ad, &fc, &gc3).unwrap(), f.from_int(-3));
}

#[test]
fn local_cup_is_perfect_on_tame_h1() {
    for n in [1, 2] {
        let (datum, gamma, ad) = tame_modules(n, 5);
        let z = z1_basis(&gamma, &ad).unwrap();
        assert_eq!(z.len(), 2 * datum.dim());
        let gram = cup_gram(&datum, &gamma, &ad, &z, &z).unwrap();
        assert_eq!(linalg::rank(&gram), 2 * datum.dim());
    }
}

#[test]
fn local_cup_rejects_non_tame_input() {
    let (datum, _, ad) = tame_modules(1, 5);
    let z = Cocycle1::zero(&ad);
    let bad = FPGroup::tame(7);
    assert!(matches!(local_cup(&datum, &bad, &ad, &z, &z), Err(CohomError::NotTame(_))));
    let free = FPGroup::free(2);
    assert!(matches!(local_cup(&datum, &free, &ad, &z, &z), Err(CohomError::NotTame(_))));
}

#[test]
fn wiles_formula() {
    assert_eq!(wiles_difference(0, 0, &[]), 0);
    let zeros = [LocalTerm { tangent_dim: 0, h0: 0 }; 3];
    assert_eq!(wiles_difference(0, 0, &zeros), 0);
    let pkg = balanced_package(2, 2, &[10, 4]);
    assert_eq!(wiles_difference(0, 0, &pkg), 0);
    let mut more = pkg.clone();
    more.push(LocalTerm { tangent_dim: 10, h0: 10 });
    assert_eq!(wiles_difference(0, 0, &more), wiles_difference(0, 0, &pkg));
    // an unbalanced place shifts the difference by its defect
    more.push(LocalTerm { tangent_dim: 3, h0: 5 });
    assert_eq!(wiles_difference(1, 0, &more), -1);
}

#[test]
fn parse_and_render_words() {
    let gamma = FPGroup::tame(11);
    let w = gamma.parse_word("sigma*tau*sigma^-1*tau^-11").unwrap();
    assert_eq!(w, gamma.relations()[0]);
    assert_eq!(gamma.render_word(&w), "sigma*tau*sigma^-1*tau^-11");
    assert!(matches!(gamma.parse_word("rho"), Err(CohomError::UnknownGenerator(_))));
    assert!(matches!(gamma.parse_word("tau^x"), Err(CohomError::BadWord(_))));
    assert_eq!(gamma.parse_word("tau tau^-1").unwrap(), vec![]);
}

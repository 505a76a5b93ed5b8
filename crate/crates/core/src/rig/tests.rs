use super::*;
use crate::ring::{CommRing, Integers};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn cats() -> Vec<RigCategory> {
    vec![
        RigCategory::finite_sets(64).unwrap(),
        RigCategory::free_modules(2, 64).unwrap(),
        RigCategory::free_modules(3, 64).unwrap(),
        RigCategory::discrete_naturals(64),
        RigCategory::discrete_zmod(6).unwrap(),
    ]
}

fn small<R: Rng>(rng: &mut R) -> Obj {
    rng.gen_range(0..=3)
}

#[test]
fn symmetry_block_swap_two_one() {
    let e = RigCategory::finite_sets(4).unwrap();
    let Mor::Perm(p) = e.sym(2, 1).unwrap() else { panic!() };
    assert_eq!(p.images(), &[1, 2, 0]);
    // function convention gives (1 2 3); the pull-back convention gives (1 3 2)
    assert_eq!(p.cycles(), vec![vec![1, 2, 3]]);
    assert_eq!(p.inverse().cycles(), vec![vec![1, 3, 2]]);
    assert_eq!(RigCategory::finite_sets(6).unwrap().mul(2, 3).unwrap(), 6);
    assert!(e.mul(2, 3).is_err());
}

#[test]
fn left_distributor_natural_by_brute_force() {
    let e = RigCategory::finite_sets(4).unwrap();
    let d = e.dist_left(2, 1, 1).unwrap();
    assert_eq!(d, Mor::Perm(Perm::from_images(vec![0, 2, 1, 3]).unwrap()));
    for f in e.automorphisms(2, 100).unwrap() {
        for g in e.automorphisms(1, 100).unwrap() {
            for h in e.automorphisms(1, 100).unwrap() {
                let src = e.add_mor(&e.mul_mor(&f, &g).unwrap(), &e.mul_mor(&f, &h).unwrap()).unwrap();
                let tgt = e.mul_mor(&f, &e.add_mor(&g, &h).unwrap()).unwrap();
                assert_eq!(e.compose(&d, &src).unwrap(), e.compose(&tgt, &d).unwrap());
            }
        }
    }
}

#[test]
fn gl2_z2_has_six_elements() {
    let f = RigCategory::free_modules(2, 3).unwrap();
    assert_eq!(f.automorphisms(2, 16).unwrap().len(), 6);
    assert_eq!(f.label(2), 2);
    let s = f.add_mor(&f.id(1), &f.id(2)).unwrap();
    assert_eq!(s, f.id(3));
    let bad = Mor::Matrix(ZkMat { n: 2, data: vec![1, 1, 1, 1] });
    assert!(matches!(f.check_mor(&bad), Err(Error::NotInvertible(_))));
}

#[test]
fn naturals_fail_past_bound() {
    let n = RigCategory::discrete_naturals(20);
    assert_eq!(n.add(4, 5).unwrap(), 9);
    assert_eq!(n.mul(4, 5).unwrap(), 20);
    assert_eq!(n.mul(4, 6), Err(Error::OutOfRange { value: 24, bound: 20 }));
    assert_eq!(n.objects().count(), 21);
    let z = RigCategory::discrete_zmod(6).unwrap();
    assert_eq!(z.objects().count(), 6);
    assert_eq!(z.pi0(), Pi0Rig::Table(RigTable::zmod(6).unwrap()));
}

#[test]
fn groupoid_inverses() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for cat in cats() {
        for _ in 0..300 {
            let a = rng.gen_range(0..=4);
            let f = cat.random_automorphism(a, &mut rng);
            cat.check_mor(&f).unwrap();
            let inv = cat.inverse(&f);
            assert!(cat.is_identity(&cat.compose(&inv, &f).unwrap()));
            assert!(cat.is_identity(&cat.compose(&f, &inv).unwrap()));
        }
    }
}

#[test]
fn faithful_translation() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for cat in cats().into_iter().take(3) {
        let mut tested = 0;
        while tested < 300 {
            let a = rng.gen_range(1..=3);
            let (f, g) = (cat.random_automorphism(a, &mut rng), cat.random_automorphism(a, &mut rng));
            if f == g {
                continue;
            }
            let x = cat.random_automorphism(small(&mut rng), &mut rng);
            assert_ne!(cat.add_mor(&x, &f).unwrap(), cat.add_mor(&x, &g).unwrap());
            tested += 1;
        }
    }
}

#[test]
fn naturality_of_symmetry_and_distributor() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for cat in cats() {
        for _ in 0..300 {
            let (a, b, c) = (small(&mut rng), small(&mut rng), small(&mut rng));
            let f = cat.random_automorphism(a, &mut rng);
            let g = cat.random_automorphism(b, &mut rng);
            let h = cat.random_automorphism(c, &mut rng);
            let s = cat.sym(a, b).unwrap();
            assert_eq!(
                cat.compose(&s, &cat.add_mor(&f, &g).unwrap()).unwrap(),
                cat.compose(&cat.add_mor(&g, &f).unwrap(), &s).unwrap()
            );
            assert!(cat.is_identity(&cat.compose(&cat.sym(b, a).unwrap(), &s).unwrap()));
            let d = cat.dist_left(a, b, c).unwrap();
            let src = cat.add_mor(&cat.mul_mor(&f, &g).unwrap(), &cat.mul_mor(&f, &h).unwrap()).unwrap();
            let tgt = cat.mul_mor(&f, &cat.add_mor(&g, &h).unwrap()).unwrap();
            assert_eq!(cat.compose(&d, &src).unwrap(), cat.compose(&tgt, &d).unwrap());
        }
    }
}

#[test]
fn symmetry_hexagon_strict_form() {
    // c(A, B⊕C) = (id_B ⊕ c(A,C)) ∘ (c(A,B) ⊕ id_C)
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for cat in cats() {
        for _ in 0..100 {
            let (a, b, c) = (small(&mut rng), small(&mut rng), small(&mut rng));
            let lhs = cat.sym(a, cat.add(b, c).unwrap()).unwrap();
            let r1 = cat.add_mor(&cat.sym(a, b).unwrap(), &cat.id(c)).unwrap();
            let r2 = cat.add_mor(&cat.id(b), &cat.sym(a, c).unwrap()).unwrap();
            assert_eq!(lhs, cat.compose(&r2, &r1).unwrap());
        }
    }
}

#[test]
fn strict_structure_on_samples() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for cat in cats() {
        for _ in 0..300 {
            let (a, b, c) = (small(&mut rng), small(&mut rng), small(&mut rng));
            let f = cat.random_automorphism(a, &mut rng);
            let g = cat.random_automorphism(b, &mut rng);
            let h = cat.random_automorphism(c, &mut rng);
            let add = |x: &Mor, y: &Mor| cat.add_mor(x, y).unwrap();
            let mul = |x: &Mor, y: &Mor| cat.mul_mor(x, y).unwrap();
            assert_eq!(mul(&add(&f, &g), &h), add(&mul(&f, &h), &mul(&g, &h)));
            assert_eq!(add(&add(&f, &g), &h), add(&f, &add(&g, &h)));
            assert_eq!(mul(&mul(&f, &g), &h), mul(&f, &mul(&g, &h)));
            let (zero, one) = (cat.id(cat.zero()), cat.id(cat.one()));
            assert_eq!(add(&zero, &f), f);
            assert_eq!(add(&f, &zero), f);
            assert_eq!(mul(&one, &f), f);
            assert_eq!(mul(&f, &one), f);
            assert_eq!(mul(&zero, &f), zero);
            let obj = cat.add(a, b).and_then(|s| cat.mul(s, c));
            let rhs = cat.mul(a, c).and_then(|x| cat.add(x, cat.mul(b, c)?));
            assert_eq!(obj, rhs);
        }
    }
}

#[test]
fn labels_respect_structure() {
    for cat in cats() {
        check_pi0(&cat, 6).unwrap();
    }
}

#[test]
fn group_completion() {
    let n = RigCategory::discrete_naturals(20);
    let gr = grothendieck(&n.pi0()).unwrap();
    assert_eq!(gr, GrRing::Integers);
    assert!(gr.same_class((3, 1), (5, 3)));
    assert!(!gr.same_class((3, 1), (5, 2)));
    assert!(!gr.is_invertible(gr.canonical(2)));
    for x in -3i128..=3 {
        assert_eq!(gr.is_invertible(x), Integers.is_unit(&x));
        assert_eq!(gr.is_invertible(x), x == 1 || x == -1);
    }
    assert!(gr.is_invertible(gr.difference(1, 0)) && gr.is_invertible(gr.difference(0, 1)));
    let z6 = RigCategory::discrete_zmod(6).unwrap();
    let gr6 = grothendieck(&z6.pi0()).unwrap();
    for a in 0..6 {
        assert_eq!(gr6.canonical(a), a as i128);
    }
    let boolean =
        RigTable { size: 2, add: vec![vec![0, 1], vec![1, 1]], mul: vec![vec![0, 0], vec![0, 1]], zero: 0, one: 1 };
    let b = RigCategory::discrete_table(boolean).unwrap();
    assert!(matches!(grothendieck(&b.pi0()), Err(Error::Unsupported(_))));
    for cat in [RigCategory::finite_sets(4).unwrap(), RigCategory::free_modules(2, 4).unwrap()] {
        assert_eq!(grothendieck(&cat.pi0()).unwrap(), GrRing::Integers);
    }
}

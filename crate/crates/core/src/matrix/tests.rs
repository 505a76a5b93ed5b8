use super::*;
use crate::ring::Integers;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn m(rows: Vec<Vec<u64>>) -> ObjMatrix {
    Mat::try_from(rows).unwrap()
}

fn random_obj<R: Rng>(rng: &mut R, n: usize, top: u64) -> ObjMatrix {
    Mat::from_fn(n, |_, _| rng.gen_range(0..=top))
}

fn random_mor<R: Rng>(cat: &RigCategory, rng: &mut R, x: &ObjMatrix) -> MorMatrix {
    x.map(|&a| cat.random_automorphism(a, rng))
}

#[test]
fn unit_and_products() {
    let e = RigCategory::finite_sets(64).unwrap();
    let x = m(vec![vec![2, 1], vec![0, 3]]);
    assert_eq!(mat_mul(&e, &unit_matrix(&e, 2), &x).unwrap(), x);
    assert_eq!(mat_mul(&e, &x, &unit_matrix(&e, 2)).unwrap(), x);
    let u2 = unit_matrix(&e, 2);
    assert_eq!(mat_mul(&e, &u2, &u2).unwrap(), u2);
    assert_eq!(unit_matrix(&e, 1), m(vec![vec![1]]));
    let nat = RigCategory::discrete_naturals(100);
    let p = mat_mul(&nat, &m(vec![vec![1, 1], vec![0, 1]]), &m(vec![vec![1, 0], vec![1, 1]])).unwrap();
    assert_eq!(p, m(vec![vec![2, 1], vec![1, 1]]));
    let (a, b) = (3, 1);
    let p = mat_mul(&nat, &m(vec![vec![1, b], vec![0, 1]]), &m(vec![vec![a - b, 0], vec![0, 1]])).unwrap();
    assert_eq!(p, m(vec![vec![2, 1], vec![0, 1]]));
    let f = RigCategory::free_modules(2, 8).unwrap();
    let e3 = unit_matrix(&f, 3);
    assert!(e3.entries().iter().all(|&x| x == 0 || x == 1));
    assert!(mat_mul(&nat, &unit_matrix(&nat, 2), &unit_matrix(&nat, 3)).is_err());
}

#[test]
fn serializes_as_rows() {
    let x = m(vec![vec![2, 1], vec![0, 3]]);
    let s = serde_json::to_string(&x).unwrap();
    assert_eq!(s, "[[2,1],[0,3]]");
    assert_eq!(serde_json::from_str::<ObjMatrix>(&s).unwrap(), x);
    assert!(serde_json::from_str::<ObjMatrix>("[[1,2]]").is_err());
}

#[test]
fn bifunctoriality() {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let cats = [RigCategory::finite_sets(200).unwrap(), RigCategory::free_modules(2, 200).unwrap()];
    for cat in &cats {
        for _ in 0..100 {
            let n = rng.gen_range(1..=2);
            let (x, y) = (random_obj(&mut rng, n, 2), random_obj(&mut rng, n, 2));
            let (f, f2) = (random_mor(cat, &mut rng, &x), random_mor(cat, &mut rng, &x));
            let (g, g2) = (random_mor(cat, &mut rng, &y), random_mor(cat, &mut rng, &y));
            let lhs = mat_mul_mor(cat, &compose_mat(cat, &f, &f2).unwrap(), &compose_mat(cat, &g, &g2).unwrap()).unwrap();
            let rhs = compose_mat(cat, &mat_mul_mor(cat, &f, &g).unwrap(), &mat_mul_mor(cat, &f2, &g2).unwrap()).unwrap();
            assert_eq!(lhs, rhs);
            assert_eq!(mor_dom(cat, &lhs), mat_mul(cat, &x, &y).unwrap());
            let e = id_matrix(cat, &unit_matrix(cat, n));
            assert_eq!(mat_mul_mor(cat, &e, &f).unwrap(), f);
            assert_eq!(mat_mul_mor(cat, &f, &e).unwrap(), f);
        }
    }
}

#[test]
fn associator_is_identity_at_units() {
    let cat = RigCategory::finite_sets(500).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..30 {
        let n = rng.gen_range(1..=3);
        let (x, y) = (random_obj(&mut rng, n, 3), random_obj(&mut rng, n, 3));
        let e = unit_matrix(&cat, n);
        for (a, b, c) in [(&e, &x, &y), (&x, &e, &y), (&x, &y, &e)] {
            assert!(is_identity_mat(&cat, &mat_assoc(&cat, a, b, c).unwrap()));
        }
        if n == 1 {
            let z = random_obj(&mut rng, 1, 3);
            assert!(is_identity_mat(&cat, &mat_assoc(&cat, &x, &y, &z).unwrap()));
        }
    }
}

#[test]
fn associator_types_and_naturality() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for cat in [RigCategory::finite_sets(500).unwrap(), RigCategory::free_modules(3, 500).unwrap()] {
        for _ in 0..40 {
            let n = rng.gen_range(1..=2);
            let (x, y, z) = (random_obj(&mut rng, n, 2), random_obj(&mut rng, n, 2), random_obj(&mut rng, n, 2));
            let a = mat_assoc(&cat, &x, &y, &z).unwrap();
            let xy_z = mat_mul(&cat, &mat_mul(&cat, &x, &y).unwrap(), &z).unwrap();
            assert_eq!(mor_dom(&cat, &a), xy_z);
            assert_eq!(xy_z, mat_mul(&cat, &x, &mat_mul(&cat, &y, &z).unwrap()).unwrap());
            let (f, g, h) = (random_mor(&cat, &mut rng, &x), random_mor(&cat, &mut rng, &y), random_mor(&cat, &mut rng, &z));
            let fg_h = mat_mul_mor(&cat, &mat_mul_mor(&cat, &f, &g).unwrap(), &h).unwrap();
            let f_gh = mat_mul_mor(&cat, &f, &mat_mul_mor(&cat, &g, &h).unwrap()).unwrap();
            assert_eq!(compose_mat(&cat, &a, &fg_h).unwrap(), compose_mat(&cat, &f_gh, &a).unwrap());
        }
    }
}

#[test]
fn associator_pentagon() {
    let cat = RigCategory::finite_sets(2000).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..20 {
        let n = 2;
        let [x, y, z, w] = [0; 4].map(|_| random_obj(&mut rng, n, 2));
        let mm = |a: &ObjMatrix, b: &ObjMatrix| mat_mul(&cat, a, b).unwrap();
        let c = |g: &MorMatrix, f: &MorMatrix| compose_mat(&cat, g, f).unwrap();
        let path_a = c(&mat_assoc(&cat, &x, &y, &mm(&z, &w)).unwrap(), &mat_assoc(&cat, &mm(&x, &y), &z, &w).unwrap());
        let first = mat_mul_mor(&cat, &mat_assoc(&cat, &x, &y, &z).unwrap(), &id_matrix(&cat, &w)).unwrap();
        let mid = mat_assoc(&cat, &x, &mm(&y, &z), &w).unwrap();
        let last = mat_mul_mor(&cat, &id_matrix(&cat, &x), &mat_assoc(&cat, &y, &z, &w).unwrap()).unwrap();
        assert_eq!(path_a, c(&last, &c(&mid, &first)));
    }
}

#[test]
fn distributor_types_and_naturality() {
    let cat = RigCategory::finite_sets(500).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    for _ in 0..40 {
        let n = rng.gen_range(1..=2);
        let a = random_obj(&mut rng, n, 2);
        let xs: Vec<ObjMatrix> = (0..rng.gen_range(0..=3)).map(|_| random_obj(&mut rng, n, 2)).collect();
        let refs: Vec<&ObjMatrix> = xs.iter().collect();
        let d = mat_dist(&cat, &a, &refs).unwrap();
        let total = xs.iter().fold(zero_matrix(&cat, n), |acc, x| mat_add(&cat, &acc, x).unwrap());
        assert_eq!(mor_dom(&cat, &d), mat_mul(&cat, &a, &total).unwrap());
        let f = random_mor(&cat, &mut rng, &a);
        let gs: Vec<MorMatrix> = xs.iter().map(|x| random_mor(&cat, &mut rng, x)).collect();
        let gsum = gs.iter().fold(id_matrix(&cat, &zero_matrix(&cat, n)), |acc, g| mat_add_mor(&cat, &acc, g).unwrap());
        let src = mat_mul_mor(&cat, &f, &gsum).unwrap();
        let tgt = gs
            .iter()
            .fold(id_matrix(&cat, &zero_matrix(&cat, n)), |acc, g| mat_add_mor(&cat, &acc, &mat_mul_mor(&cat, &f, g).unwrap()).unwrap());
        assert_eq!(compose_mat(&cat, &d, &src).unwrap(), compose_mat(&cat, &tgt, &d).unwrap());
    }
}

#[test]
fn weak_invertibility() {
    let gr = GrRing::Integers;
    assert!(gl_membership(&m(vec![vec![2, 1], vec![1, 1]]), &gr).unwrap());
    assert!(!gl_membership(&m(vec![vec![1, 1], vec![1, 1]]), &gr).unwrap());
    // a − b = 2 is not a unit of ℤ
    assert!(!gl_membership(&m(vec![vec![3, 1], vec![1, 1]]), &gr).unwrap());
    for (a, b) in [(2, 1), (3, 2), (4, 3)] {
        assert!(gl_membership(&m(vec![vec![a, b], vec![1, 1]]), &gr).unwrap());
    }
    let z6 = RigCategory::discrete_zmod(6).unwrap();
    assert!(is_weakly_invertible(&z6, &m(vec![vec![5, 0], vec![0, 1]])).unwrap());
    assert!(!is_weakly_invertible(&z6, &m(vec![vec![2, 0], vec![0, 1]])).unwrap());
}

#[test]
fn stabilization() {
    let nat = RigCategory::discrete_naturals(10_000);
    assert_eq!(stabilize(&nat, &m(vec![vec![7]])), m(vec![vec![7, 0], vec![0, 1]]));
    let x = m(vec![vec![2, 1], vec![1, 1]]);
    assert_eq!(stabilize(&nat, &stabilize(&nat, &x)), block_sum(&nat, &x, &unit_matrix(&nat, 2)));
    let gr = GrRing::Integers;
    let mut rng = ChaCha8Rng::seed_from_u64(15);
    for _ in 0..100 {
        let n = rng.gen_range(1..=3);
        let x = random_obj(&mut rng, n, 4);
        let y = random_obj(&mut rng, n, 4);
        let det = |x: &ObjMatrix| determinant(&Integers, x.n(), x.map(|&v| v as i128).entries());
        assert_eq!(det(&stabilize(&nat, &x)), det(&x));
        let gx = is_weakly_invertible(&nat, &x).unwrap();
        assert_eq!(gx, gl_membership(&pi0_matrix(&nat, &stabilize(&nat, &x)), &gr).unwrap());
        if gx && is_weakly_invertible(&nat, &y).unwrap() {
            assert!(is_weakly_invertible(&nat, &mat_mul(&nat, &x, &y).unwrap()).unwrap());
        }
    }
}

#[test]
fn blocks_round_trip() {
    let nat = RigCategory::discrete_naturals(100);
    let a = m(vec![vec![1, 2], vec![3, 4]]);
    let z = zero_matrix(&nat, 2);
    let e = unit_matrix(&nat, 2);
    let big = Mat::blocks(&a, &z, &z, &e).unwrap();
    assert_eq!(big, block_sum(&nat, &a, &e));
    assert_eq!(big.block(2, 0, 0), a);
    assert_eq!(big.block(2, 1, 1), e);
}

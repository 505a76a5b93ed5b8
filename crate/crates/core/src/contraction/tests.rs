use super::*;
use crate::bar::{simplicial_action, validate_mor, validate_simplex};
use crate::delta::DeltaMap;
use crate::matrix::{id_matrix, mat_add, unit_matrix, zero_matrix, Mat, ObjMatrix};
use crate::rig::RigCategory;
use crate::tmat::{act, MatrixModule, TMatObj};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn shape(n: usize, level: usize, p: usize, q: usize) -> ChainShape {
    ChainShape { n, level, p, q, obj_bound: 3, witness_bound: 2 }
}

fn sets() -> RigCategory {
    RigCategory::finite_sets(1 << 16).unwrap()
}

fn naturals() -> RigCategory {
    RigCategory::discrete_naturals(1 << 30)
}

fn draw(cat: &RigCategory, s: ChainShape, seed: u64) -> BNChain {
    random_chain(cat, s, &mut ChaCha8Rng::seed_from_u64(seed)).unwrap().chain
}

fn blk(a: &ObjMatrix, b: &ObjMatrix, c: &ObjMatrix, d: &ObjMatrix) -> ObjMatrix {
    Mat::blocks(a, b, c, d).unwrap()
}

fn v(a: usize, c: usize, stage: Stage) -> Vertex {
    Vertex { a, c, stage }
}

#[test]
fn drawn_chains_validate_and_satisfy_identities() {
    for cat in [sets(), naturals()] {
        for (k, s) in [shape(1, 0, 2, 2), shape(2, 1, 1, 2), shape(2, 0, 2, 1)].into_iter().enumerate() {
            let chain = draw(&cat, s, k as u64);
            validate_chain(&cat, s.level, &chain).unwrap();
            let rep = verify_witness_identities(&cat, s.level, &chain).unwrap();
            assert!(rep.passed(), "{:?}", rep.failures);
            assert_eq!(rep.counters.symmetry, 0);
            assert!(rep.counters.mat_assoc > 0 || s.q < 2);
        }
    }
}

#[test]
fn corrupted_witness_fails_where_it_was_planted() {
    let cat = sets();
    let mut chain = draw(&cat, shape(1, 1, 1, 2), 7);
    corrupt_witness(&mut chain, 1, 0, 2, 1).unwrap();
    let rep = verify_witness_identities(&cat, 1, &chain).unwrap();
    let at: Vec<String> = rep.failures.iter().map(|f| format!("{} {} {}", f.family, f.kind, f.location)).collect();
    assert!(at.contains(&"1identity object u=1 l=1 (i,j,k)=(0,1,2)".to_string()), "{at:?}");
    assert!(at.contains(&"2identity object u=1 l=1 (i,j)=(0,2)".to_string()), "{at:?}");
    assert!(rep.failures.iter().all(|f| f.location.contains("l=1") || f.kind == "square"));
    assert!(corrupt_witness(&mut chain, 0, 1, 1, 0).is_err());
}

#[test]
fn maps_verify_on_small_chains() {
    for cat in [naturals(), sets()] {
        for (k, s) in [shape(1, 0, 1, 1), shape(1, 1, 1, 1), shape(2, 0, 0, 1)].into_iter().enumerate() {
            let chain = draw(&cat, s, 11 + k as u64);
            for r in verify_chain(&cat, s.level, &chain, &MapKind::ALL) {
                assert!(r.passed(), "{} {:?}: {:?}", r.name, s, r.examples);
                assert!(r.nondegenerate > 0);
            }
        }
    }
}

#[test]
fn part_level_and_cell_level_checkers_agree() {
    let cat = naturals();
    let chain = draw(&cat, shape(1, 0, 1, 1), 5);
    let ev = Evaluator::new(ChainView::new(&cat, 0, &chain));
    for kind in MapKind::ALL {
        let cells = verify_map_cells(&ev, kind);
        let parts = verify_map(&ev, kind);
        assert!(cells.passed() && parts.passed(), "{}", kind.name());
    }
    let mut bad = chain.clone();
    corrupt_witness(&mut bad, 1, 0, 1, 0).unwrap();
    let ev = Evaluator::new(ChainView::new(&cat, 0, &bad));
    for kind in [MapKind::Jnc, MapKind::IncJnc] {
        assert!(!verify_map_cells(&ev, kind).passed(), "{}", kind.name());
        assert!(!verify_map(&ev, kind).passed(), "{}", kind.name());
    }
}

#[test]
fn jnc_simplices_at_p_q_one() {
    for cat in [naturals(), sets()] {
        let chain = draw(&cat, shape(1, 0, 1, 1), 21);
        let view = ChainView::new(&cat, 0, &chain);
        let bl = Blocks::new(view);
        let (z, e) = (zero_matrix(&cat, 1), unit_matrix(&cat, 1));
        let add = |x: &ObjMatrix, y: &ObjMatrix| mat_add(&cat, x, y).unwrap();
        let xi0 = view.xi(1, 0, 0);
        let xi1 = view.xi(1, 0, 1);
        let m01 = view.m(1, 0, 1);
        let x = |b| view.x(b, 0, 0, 1);
        let minus = |i| view.t(1, i).minus.clone();

        // ((0,1),0) ← ((1,1),0) ← ((1,1),1)
        let s = bl.simplex(1, &[v(0, 0, Stage::Jnc), v(1, 0, Stage::Jnc), v(1, 1, Stage::Jnc)]).unwrap();
        validate_simplex(&bl.big, &s).unwrap();
        assert_eq!(s.m[0][0], blk(&e, &xi0, &z, &e));
        assert_eq!(s.m[0][1], blk(&m01, &add(&x(1), &xi0), &z, &e));
        assert_eq!(s.m[1][0], blk(&m01, &x(1), &z, &e));
        assert_eq!(s.t[0].plus, blk(&view.t(1, 0).plus, &add(&minus(0), &xi0), &z, &e));
        assert_eq!(s.t[1].plus, blk(&view.t(1, 0).plus, &minus(0), &z, &e));
        assert_eq!(s.t[2].plus, blk(&view.t(1, 1).plus, &minus(1), &z, &e));

        // ((0,1),0) ← ((0,1),1) ← ((1,1),1)
        let s = bl.simplex(1, &[v(0, 0, Stage::Jnc), v(0, 1, Stage::Jnc), v(1, 1, Stage::Jnc)]).unwrap();
        validate_simplex(&bl.big, &s).unwrap();
        assert_eq!(s.m[0][0], blk(&m01, &x(0), &z, &e));
        assert_eq!(s.m[0][1], blk(&m01, &add(&x(1), &xi0), &z, &e));
        assert_eq!(s.m[1][0], blk(&e, &xi1, &z, &e));
        assert_eq!(s.t[1].plus, blk(&view.t(1, 1).plus, &add(&minus(1), &xi1), &z, &e));

        // the nerve arrow keeps the shape [[α, id], [id, id]]
        let f = bl.step(1, &[v(0, 0, Stage::Jnc), v(0, 1, Stage::Jnc)]).unwrap();
        assert_eq!(f.f[0][0].block(1, 0, 0), view.alpha_ij(1, 0, 1));
        assert_eq!(f.f[0][0].block(1, 0, 1), id_matrix(&cat, &x(0)));
        assert_eq!(f.ft[0].alpha_plus.block(1, 0, 0), view.alpha_inf(1, 0).alpha_plus);
    }
}

#[test]
fn jnc_triangle_with_two_nerve_steps() {
    let cat = naturals();
    let chain = draw(&cat, shape(1, 0, 2, 0), 4);
    let view = ChainView::new(&cat, 0, &chain);
    let bl = Blocks::new(view);
    let (z, e) = (zero_matrix(&cat, 1), unit_matrix(&cat, 1));
    let t = view.t(2, 0);
    let mid = bl.t_entry(2, &v(1, 0, Stage::Jnc)).unwrap();
    assert_eq!(mid.plus, blk(&t.plus, &mat_add(&cat, &t.minus, &view.xi(2, 0, 0)).unwrap(), &z, &e));
    assert_eq!(mid.minus, blk(&t.minus, &z, &z, &z));
    let long = bl.entry(2, &v(0, 0, Stage::Jnc), &v(2, 0, Stage::Jnc)).unwrap();
    assert_eq!(long, blk(&e, &mat_add(&cat, &view.xi(2, 0, 0), &view.xi(1, 0, 0)).unwrap(), &z, &e));
    let s = bl.simplex(2, &[v(0, 0, Stage::Jnc), v(1, 0, Stage::Jnc), v(2, 0, Stage::Jnc)]).unwrap();
    validate_simplex(&bl.big, &s).unwrap();
}

#[test]
fn zero_simplices_of_each_stage() {
    let cat = sets();
    let chain = draw(&cat, shape(2, 1, 1, 1), 9);
    let view = ChainView::new(&cat, 1, &chain);
    let bl = Blocks::new(view);
    let (z, e) = (zero_matrix(&cat, 2), unit_matrix(&cat, 2));
    for c in 0..=1 {
        let t = view.t(1, c);
        let j = bl.t_entry(1, &v(1, c, Stage::Jnc)).unwrap();
        assert_eq!(j, TMatObj { plus: blk(&t.plus, &t.minus, &z, &e), minus: blk(&t.minus, &z, &z, &z) });
        let k = bl.t_entry(1, &v(1, c, Stage::Knc)).unwrap();
        assert_eq!(k, TMatObj { plus: blk(&t.plus, &t.minus, &e, &e), minus: blk(&t.minus, &z, &e, &z) });
        // K_i · L = knc value
        let kl = bl.entry(1, &v(0, c, Stage::Knc), &v(0, c, Stage::Lnc)).unwrap();
        let l = bl.t_entry(1, &v(0, c, Stage::Lnc)).unwrap();
        assert_eq!(act(&cat, &kl, &l).unwrap(), bl.t_entry(1, &v(0, c, Stage::Knc)).unwrap());
    }
}

#[test]
fn lnc_does_not_depend_on_the_chain() {
    let cat = naturals();
    let vs = [v(0, 0, Stage::Lnc), v(0, 1, Stage::Lnc), v(1, 1, Stage::Lnc)];
    let values: Vec<BNSimplex> = (0..4)
        .map(|seed| {
            let chain = draw(&cat, shape(1, 0, 1, 1), seed);
            Blocks::new(ChainView::new(&cat, 0, &chain)).simplex(1, &vs).unwrap()
        })
        .collect();
    assert!(values.windows(2).all(|w| w[0] == w[1]));
}

#[test]
fn inc_is_stabilization() {
    for cat in [naturals(), sets()] {
        let chain = draw(&cat, shape(2, 1, 1, 2), 13);
        let view = ChainView::new(&cat, 1, &chain);
        let bl = Blocks::new(view);
        for b in 0..=1 {
            let vs: Vec<Vertex> = [0, 1, 2].iter().map(|&c| v(b, c, Stage::Inc)).collect();
            assert_eq!(bl.simplex(b, &vs).unwrap(), stab_in(&cat, 1, &chain.objs[b]).unwrap());
        }
        let f = &chain.mors[0];
        let g = stab_in_mor(&cat, 1, f).unwrap();
        let big = MatrixModule { cat: &cat, n: 4, level: 1 };
        validate_mor(&big, &g, &stab_in(&cat, 1, &chain.objs[1]).unwrap(), &stab_in(&cat, 1, &chain.objs[0]).unwrap()).unwrap();
    }
}

#[test]
fn stabilization_commutes_with_simplicial_operators() {
    let cat = sets();
    let mut samples = 0;
    for seed in 0..5 {
        let chain = draw(&cat, shape(1, 0, 1, 2), 100 + seed);
        let view = ChainView::new(&cat, 0, &chain);
        let big = MatrixModule { cat: &cat, n: 2, level: 0 };
        for a in &chain.objs {
            for p in 0..=3 {
                for theta in DeltaMap::all(p, 2) {
                    let lhs = stab_in(&cat, 0, &simplicial_action(&view.md, &theta, a)).unwrap();
                    let rhs = simplicial_action(&big, &theta, &stab_in(&cat, 0, a).unwrap());
                    assert_eq!(lhs, rhs);
                    samples += 1;
                }
            }
        }
    }
    assert!(samples >= 100, "{samples}");
}

fn tobj(plus: u64, minus: u64) -> TMatObj {
    TMatObj { plus: Mat::new(1, vec![plus]).unwrap(), minus: Mat::new(1, vec![minus]).unwrap() }
}

fn differences(t: &TMatObj) -> Vec<i64> {
    t.plus.entries().iter().zip(t.minus.entries()).map(|(&a, &b)| a as i64 - b as i64).collect()
}

#[test]
fn basic_path_over_naturals() {
    let cat = naturals();
    let big = MatrixModule { cat: &cat, n: 2, level: 0 };
    let path = basic_path(&cat, 0, &tobj(2, 1)).unwrap();
    validate_simplex(&big, &path.first).unwrap();
    validate_simplex(&big, &path.third).unwrap();
    path.second.validate(&cat).unwrap();
    assert_eq!(path.first.m[0][0], Mat::new(2, vec![1, 1, 0, 1]).unwrap());
    assert_eq!(path.third.m[0][0], Mat::new(2, vec![2, 1, 1, 1]).unwrap());
    assert_eq!(differences(&path.first.t[1]), vec![1, 0, 0, 1]);
    assert_eq!(differences(&path.first.t[0]), vec![1, 1, 0, 1]);
    assert_eq!(differences(&path.third.t[0]), vec![1, 1, 0, 1]);
    assert_eq!(differences(&path.third.t[1]), vec![1, 0, -1, 1]);
    assert_eq!(path.second.target(&cat).unwrap(), path.third.t[0]);
}

#[test]
fn basic_path_degenerates_without_negative_part() {
    let cat = naturals();
    let path = basic_path(&cat, 0, &tobj(1, 0)).unwrap();
    let big = MatrixModule { cat: &cat, n: 2, level: 0 };
    let vertex = simplicial_action(&big, &DeltaMap::coface(1, 1), &path.first);
    assert_eq!(path.first, simplicial_action(&big, &DeltaMap::codegeneracy(0, 0), &vertex));
    assert!(basic_path(&cat, 0, &tobj(2, 2)).is_err());
    assert!(basic_path(&cat, 0, &tobj(3, 1)).is_err());
}

#[test]
fn homotopies_at_a_point_are_the_basic_path() {
    for cat in [naturals(), sets()] {
        let chain = draw(&cat, shape(1, 0, 0, 0), 31);
        let view = ChainView::new(&cat, 0, &chain);
        let bl = Blocks::new(view);
        let path = basic_path(&cat, 0, view.t(0, 0)).unwrap();
        let (i, j, k, l) = (v(0, 0, Stage::Inc), v(0, 0, Stage::Jnc), v(0, 0, Stage::Knc), v(0, 0, Stage::Lnc));
        assert_eq!(bl.simplex(0, &[j, i]).unwrap(), path.first);
        assert_eq!(bl.jnc_to_knc(0, &[j]).unwrap().ft[0], path.second);
        assert_eq!(bl.simplex(0, &[k, l]).unwrap(), path.third);
    }
}

use proptest::prelude::*;
use springer_core::eqsmoves::{c_move, eqs_class, eqs_partition};
use springer_core::partitions::{Partition, SmoothnessVerdict};
use springer_core::tableaux::StandardTableau;

fn partitions_up_to(n: usize) -> impl Iterator<Item = Partition> {
    (1..=n).flat_map(Partition::all)
}

fn tableaux_up_to(n: usize) -> Vec<StandardTableau> {
    partitions_up_to(n).flat_map(|p| StandardTableau::enumerate(&p).unwrap()).collect()
}

fn rs1_tableaux(max_n: usize) -> Vec<StandardTableau> {
    let mut out = Vec::new();
    for r in 1..max_n {
        for s in 1..=r {
            if r + s < max_n {
                out.extend(StandardTableau::enumerate(&Partition::new(vec![r, s, 1]).unwrap()).unwrap());
            }
        }
    }
    out
}

#[test]
fn conjugate_involution_and_column_dimension() {
    for p in partitions_up_to(12) {
        assert_eq!(p.conjugate().conjugate(), p);
        let by_columns: usize = p.conjugate().parts().iter().map(|&c| c * (c - 1) / 2).sum();
        assert_eq!(p.springer_dim(), by_columns, "{p}");
    }
}

#[test]
fn singular_hypothesis_exhaustive() {
    for p in partitions_up_to(12) {
        let parts = p.parts();
        let k = parts.len();
        let hyp = k >= 2 && parts[1] >= 2 && (k >= 4 || (k == 3 && parts[0] >= 3 && parts[2] >= 2));
        if hyp {
            assert_eq!(p.classify_smooth(), SmoothnessVerdict::HasSingular, "{p}");
        }
        if p.classify_smooth() != SmoothnessVerdict::HasSingular {
            assert!(!hyp, "{p}");
        }
    }
}

#[test]
fn shape_chain_round_trip() {
    for t in tableaux_up_to(8) {
        assert_eq!(t.shape_chain().to_tableau(), t);
    }
}

#[test]
fn restriction_shapes_under_evacuation() {
    for t in tableaux_up_to(7) {
        let n = t.n();
        let s = t.schuetzenberger();
        for i in 1..=n {
            for j in i..=n {
                let lhs = t.restrict(i, j).unwrap().shape();
                let rhs = s.restrict(n + 1 - j, n + 1 - i).unwrap().shape();
                assert_eq!(lhs, rhs, "{t} at ({i},{j})");
            }
        }
    }
}

#[test]
fn restriction_descents() {
    for t in tableaux_up_to(7) {
        let n = t.n();
        let tau = t.tau();
        for k in 1..=n {
            for l in k..=n {
                let want: Vec<usize> = tau.iter().copied().filter(|&i| k <= i && i < l).collect();
                let got: Vec<usize> = t.restrict(k, l).unwrap().tau().into_iter().collect();
                assert_eq!(got, want, "{t} at ({k},{l})");
            }
        }
    }
}

#[test]
fn evacuated_corner_entry() {
    for t in rs1_tableaux(9) {
        let n = t.n();
        let s = t.schuetzenberger();
        assert_eq!(s.get(3, 1).unwrap(), n - t.j_stat().unwrap() + 1, "{t}");
        assert_eq!(s.dist().unwrap(), t.dist().unwrap(), "{t}");
    }
}

#[test]
fn c_moves_shift_corner() {
    let mut applied = 0;
    for t in rs1_tableaux(9) {
        if t.shape().row(1) <= 1 {
            continue;
        }
        if let Ok(c) = c_move(&t) {
            assert_eq!(c.get(3, 1).unwrap() + 1, t.get(3, 1).unwrap(), "{t}");
            assert_eq!(c.j_stat().unwrap() + 1, t.j_stat().unwrap(), "{t}");
            applied += 1;
        }
    }
    assert!(applied > 100);
}

#[test]
fn classes_are_closed() {
    for p in partitions_up_to(7) {
        let classes = eqs_partition(&p).unwrap();
        let total: usize = classes.iter().map(|c| c.len()).sum();
        assert_eq!(total, StandardTableau::enumerate(&p).unwrap().len());
        for class in &classes {
            for m in &class.members {
                let again = eqs_class(m).unwrap();
                assert_eq!(again.len(), class.len(), "{p}");
                assert!(again.members.iter().all(|x| class.contains(x)), "{p}");
            }
        }
    }
}

fn arb_tableau(max_n: usize) -> impl Strategy<Value = StandardTableau> {
    (1..=max_n)
        .prop_flat_map(|n| {
            let shapes = Partition::all(n);
            (0..shapes.len()).prop_map(move |i| shapes[i].clone())
        })
        .prop_flat_map(|shape| {
            let all = StandardTableau::enumerate(&shape).unwrap();
            (0..all.len()).prop_map(move |i| all[i].clone())
        })
}

proptest! {
    #[test]
    fn evacuation_is_involution(t in arb_tableau(10)) {
        prop_assert_eq!(t.schuetzenberger().schuetzenberger(), t);
    }

    #[test]
    fn descents_reverse(t in arb_tableau(10)) {
        let n = t.n();
        let s = t.schuetzenberger().tau();
        let reversed: std::collections::BTreeSet<usize> = t.tau().iter().map(|&i| n - i).collect();
        prop_assert_eq!(s, reversed);
    }

    #[test]
    fn restriction_composes(t in arb_tableau(9), picks in prop::array::uniform4(0usize..100)) {
        let n = t.n();
        let mut v: Vec<usize> = picks.iter().map(|x| 1 + x % n).collect();
        v.sort_unstable();
        let (c, a, b, d) = (v[0], v[1], v[2], v[3]);
        let inner = t.restrict(c, d).unwrap();
        prop_assert_eq!(inner.restrict(a, b).unwrap(), t.restrict(a, b).unwrap());
    }

    #[test]
    fn text_round_trip(t in arb_tableau(10)) {
        let back: StandardTableau = t.to_string().parse().unwrap();
        prop_assert_eq!(back, t);
    }
}

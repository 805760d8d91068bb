use std::collections::BTreeMap;

use proptest::prelude::*;
use pseudotqft::fincat::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn m(name: &str, s: &str, t: &str) -> MorphismSpec {
    MorphismSpec { name: name.into(), source: s.into(), target: t.into() }
}

fn triple(a: &str, b: &str, r: &str) -> [String; 3] {
    [a.into(), b.into(), r.into()]
}

/// β: X → Y, γ: Y → X with e = γβ and f = βγ idempotent.
fn split_idempotent() -> CategorySpec {
    CategorySpec {
        objects: vec!["X".into(), "Y".into()],
        morphisms: vec![
            m("1X", "X", "X"),
            m("1Y", "Y", "Y"),
            m("b", "X", "Y"),
            m("c", "Y", "X"),
            m("e", "X", "X"),
            m("f", "Y", "Y"),
        ],
        identities: BTreeMap::from([("X".into(), "1X".into()), ("Y".into(), "1Y".into())]),
        compose: vec![
            triple("e", "e", "e"),
            triple("e", "c", "c"),
            triple("b", "e", "b"),
            triple("b", "c", "f"),
            triple("c", "b", "e"),
            triple("c", "f", "c"),
            triple("f", "b", "b"),
            triple("f", "f", "f"),
        ],
        boundary: None,
    }
}

#[test]
fn compose_path_examples() {
    let c = FinCategory::from_spec(&split_idempotent()).unwrap();
    let x = c.object_index("X").unwrap();
    assert_eq!(compose_path(&c, x, &[]).unwrap(), c.identity(x));
    let (b, g) = (c.morphism("b").unwrap(), c.morphism("c").unwrap());
    assert_eq!(compose_path(&c, x, &[b.clone(), g.clone()]).unwrap(), c.morphism("e").unwrap());
    assert!(matches!(compose_path(&c, x, &[g]), Err(FincatError::NotComposable { .. })));

    let z3 = FiniteMonoid::cyclic(3).to_category();
    let g = Label::single(1);
    assert_eq!(compose_path(&z3, 0, &[g.clone(), g.clone(), g]).unwrap(), Label::single(0));
}

#[test]
fn z3_table_walk() {
    let z3 = FiniteMonoid::cyclic(3);
    let cat = z3.to_category();
    for a in 0..3 {
        for b in 0..3 {
            let path = [Label::single(a), Label::single(b)];
            // apply a first, then b
            assert_eq!(compose_path(&cat, 0, &path).unwrap(), Label::single(z3.mul(b, a)));
        }
    }
}

#[test]
fn loop_normalize_examples() {
    let free = FreeMonoidCategory::new(vec!['a', 'b'], false).unwrap();
    let ab = loop_normalize(&free, 0, &[free.word("ab").unwrap()]).unwrap();
    let ba = loop_normalize(&free, 0, &[free.word("b").unwrap(), free.word("a").unwrap()]).unwrap();
    assert_eq!(ab, ba);

    let c = FinCategory::from_spec(&split_idempotent()).unwrap();
    let (x, y) = (c.object_index("X").unwrap(), c.object_index("Y").unwrap());
    let (b, g) = (c.morphism("b").unwrap(), c.morphism("c").unwrap());
    let at_x = loop_normalize(&c, x, &[b.clone(), g.clone()]).unwrap();
    let at_y = loop_normalize(&c, y, &[g.clone(), b.clone()]).unwrap();
    assert_eq!(at_x, at_y);
    assert_ne!(at_x, loop_normalize(&c, x, &[]).unwrap());
    assert_eq!(loop_normalize(&c, x, &[]).unwrap(), Loop { base: x, cycle: c.identity(x) });
    assert_eq!(loop_normalize(&c, x, &[b]), Err(FincatError::NotClosed));
}

#[test]
fn loop_classes_of_split_idempotent() {
    let c = FinCategory::from_spec(&split_idempotent()).unwrap();
    let mut sizes: Vec<usize> = c.loop_classes().iter().map(Vec::len).collect();
    sizes.sort();
    // {1X}, {1Y}, {e, f}
    assert_eq!(sizes, vec![1, 1, 2]);
}

#[test]
fn conjugacy_examples() {
    assert_eq!(conjugacy_classes(&FiniteMonoid::trivial()).len(), 1);
    assert_eq!(conjugacy_classes(&FiniteMonoid::cyclic(2)), vec![vec![0], vec![1]]);
    let mut sizes: Vec<usize> = conjugacy_classes(&FiniteMonoid::symmetric3()).iter().map(Vec::len).collect();
    sizes.sort();
    assert_eq!(sizes, vec![1, 2, 3]);
}

#[test]
fn axioms_are_checked_at_load() {
    let mut spec = split_idempotent();
    spec.compose[0] = triple("e", "e", "1X");
    assert!(FinCategory::from_spec(&spec).is_err());

    let mut spec = split_idempotent();
    spec.compose.pop();
    assert!(matches!(FinCategory::from_spec(&spec), Err(FincatError::Malformed(_))));

    let mut spec = split_idempotent();
    spec.compose.push(triple("b", "b", "b"));
    assert!(matches!(FinCategory::from_spec(&spec), Err(FincatError::NotComposable { .. })));

    // (g2·g1)·g1 ≠ g2·(g1·g1)
    let bad = vec![vec![0, 1, 2], vec![1, 0, 2], vec![2, 1, 2]];
    assert!(matches!(FiniteMonoid::new(0, bad, None), Err(FincatError::AxiomViolation(_))));
    assert!(matches!(FiniteMonoid::new(1, vec![vec![1, 0], vec![0, 0]], None), Err(FincatError::AxiomViolation(_))));
    assert!(FiniteMonoid::new(1, vec![vec![0, 0], vec![0, 1]], None).is_ok());
}

#[test]
fn monoid_json_schema() {
    let json = r#"{ "size": 2, "identity": 0, "table": [[0, 1], [1, 0]] }"#;
    let spec: MonoidSpec = serde_json::from_str(json).unwrap();
    let z2 = FiniteMonoid::from_spec(&spec).unwrap();
    assert_eq!(z2.mul(1, 1), 0);
    let again: MonoidSpec = serde_json::from_str(&serde_json::to_string(&z2.to_spec()).unwrap()).unwrap();
    assert_eq!(FiniteMonoid::from_spec(&again).unwrap(), z2);

    let spec: CategorySpec = serde_json::from_str(&serde_json::to_string(&split_idempotent()).unwrap()).unwrap();
    assert_eq!(FinCategory::from_spec(&spec).unwrap().morphism_count(), 6);
}

/// A random transformation monoid generated by two maps on {0, 1, 2}.
fn random_transformation_monoid(rng: &mut ChaCha8Rng) -> FiniteMonoid {
    let id = vec![0usize, 1, 2];
    let gens: Vec<Vec<usize>> = (0..2).map(|_| (0..3).map(|_| rng.gen_range(0..3)).collect()).collect();
    let mut elems = vec![id];
    let mut i = 0;
    while i < elems.len() {
        for g in &gens {
            let h: Vec<usize> = elems[i].iter().map(|&k| g[k]).collect();
            if !elems.contains(&h) {
                elems.push(h);
            }
        }
        i += 1;
    }
    let ix = |p: &Vec<usize>| elems.iter().position(|e| e == p).unwrap();
    let table = elems
        .iter()
        .map(|g| elems.iter().map(|h| ix(&h.iter().map(|&k| g[k]).collect())).collect())
        .collect();
    FiniteMonoid::new(0, table, None).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn loop_normalize_is_rotation_invariant(seed in any::<u64>(), len in 1usize..7) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let free = FreeMonoidCategory::new(vec!['a', 'b', 'c'], false).unwrap();
        let chain: Vec<Label> = (0..len).map(|_| Label(vec![rng.gen_range(0..3)])).collect();
        let base = loop_normalize(&free, 0, &chain).unwrap();
        for k in 0..len {
            let mut rot = chain.clone();
            rot.rotate_left(k);
            prop_assert_eq!(&loop_normalize(&free, 0, &rot).unwrap(), &base);
        }

        let m = random_transformation_monoid(&mut rng);
        let cat = m.to_category();
        let chain: Vec<Label> = (0..len).map(|_| Label::single(rng.gen_range(0..m.size()))).collect();
        let base = loop_normalize(&cat, 0, &chain).unwrap();
        for k in 0..len {
            let mut rot = chain.clone();
            rot.rotate_left(k);
            prop_assert_eq!(&loop_normalize(&cat, 0, &rot).unwrap(), &base);
        }
    }

    #[test]
    fn conjugacy_classes_partition_and_close(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = random_transformation_monoid(&mut rng);
        let classes = conjugacy_classes(&m);
        let mut all: Vec<usize> = classes.iter().flatten().copied().collect();
        all.sort();
        prop_assert_eq!(all, (0..m.size()).collect::<Vec<_>>());
        let class_of = |x: usize| classes.iter().position(|c| c.contains(&x)).unwrap();
        for g in 0..m.size() {
            for h in 0..m.size() {
                prop_assert_eq!(class_of(m.mul(g, h)), class_of(m.mul(h, g)));
            }
        }
        // loop classes of the one-object category are the same partition
        let cat = m.to_category();
        for g in 0..m.size() {
            for h in 0..m.size() {
                let same = class_of(g) == class_of(h);
                let loops = cat.canonical_loop(0, &Label::single(g)) == cat.canonical_loop(0, &Label::single(h));
                prop_assert_eq!(same, loops);
            }
        }
    }
}

use kneser_core::bridges::bridge_orientation;
use kneser_core::guide::normalize_cycle;
use kneser_core::orbits::orbit_of;
use kneser_core::perm::{adjacent_by_indecomposable, kg_perm_adjacent, Permutation};
use kneser_core::polygon::MAX_N;
use kneser_core::{Diagonal, Triangulation};
use proptest::prelude::*;

/// A random triangulation: add diagonals greedily in the order given by
/// `keys`, skipping any that cross one already chosen.
fn greedy(n: usize, keys: &[u32]) -> Triangulation {
    let mut diagonals: Vec<Diagonal> = (1..=n)
        .flat_map(|i| (i + 2..=n).map(move |j| (i, j)))
        .filter(|&(i, j)| !(i == 1 && j == n))
        .map(|(i, j)| Diagonal::new(i, j, n).unwrap())
        .collect();
    let mut order: Vec<usize> = (0..diagonals.len()).collect();
    order.sort_by_key(|&k| (keys[k % keys.len()], k));
    let mut chosen: Vec<Diagonal> = Vec::new();
    for k in order {
        let d = diagonals[k];
        if chosen.iter().all(|c| !c.crosses(d)) {
            chosen.push(d);
        }
    }
    diagonals.clear();
    Triangulation::from_diagonals(n, chosen).unwrap()
}

fn triangulation() -> impl Strategy<Value = Triangulation> {
    (5usize..=MAX_N, prop::collection::vec(any::<u32>(), 1..200)).prop_map(|(n, keys)| greedy(n, &keys))
}

fn permutation(n: usize) -> impl Strategy<Value = Permutation> {
    Just((1..=n).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::new(&v).unwrap())
}

proptest! {
    #[test]
    fn encode_decode_round_trip(t in triangulation()) {
        let text = t.encode();
        prop_assert_eq!(Triangulation::decode(&text, t.n()).unwrap(), t);
        let mut reversed: Vec<String> = t.diagonals().map(|d| format!("{}-{}", d.j(), d.i())).collect();
        reversed.reverse();
        prop_assert_eq!(Triangulation::decode(&reversed.join(","), t.n()).unwrap(), t);
    }

    #[test]
    fn rotation_is_a_group_action(t in triangulation(), k in -40i64..40) {
        let n = t.n() as i64;
        prop_assert_eq!(t.rotate(k).rotate(-k), t);
        prop_assert_eq!(t.rotate(n), t);
        prop_assert_eq!(t.rotate(k), t.rotate(k.rem_euclid(n)));
        prop_assert!(t.is_disjoint(&t.rotate(1)));
        prop_assert_eq!(orbit_of(&t.rotate(k)), orbit_of(&t));
        prop_assert_eq!(n as usize % orbit_of(&t).size(), 0);
    }

    #[test]
    fn flips_are_involutions(t in triangulation(), pick in any::<usize>()) {
        let d = t.diagonals().nth(pick % t.len()).unwrap();
        let u = t.flip(d).unwrap();
        prop_assert!(t.is_flip_adjacent(&u));
        let new = u.diagonals().find(|x| !t.contains(*x)).unwrap();
        prop_assert_eq!(u.flip(new).unwrap(), t);
    }

    #[test]
    fn bridge_orientation_is_rotation_equivariant(t in triangulation(), pick in any::<usize>(), k in 0i64..17) {
        let u = t.flip_neighbors().nth(pick % t.len()).unwrap();
        let eps = bridge_orientation(&t, &u).unwrap();
        prop_assert!(eps == 1 || eps == -1);
        prop_assert!(t.is_disjoint(&u.rotate(eps as i64)));
        prop_assert_eq!(bridge_orientation(&t.rotate(k), &u.rotate(k)).unwrap(), eps);
    }

    #[test]
    fn disjointness_matches_diagonal_lists(a in triangulation(), keys in prop::collection::vec(any::<u32>(), 1..50)) {
        let b = greedy(a.n(), &keys);
        let la: Vec<Diagonal> = a.diagonals().collect();
        let shared = b.diagonals().any(|d| la.contains(&d));
        prop_assert_eq!(a.is_disjoint(&b), !shared);
        prop_assert_eq!(a.is_disjoint(&b), b.is_disjoint(&a));
    }

    #[test]
    fn normalization_forgets_start_and_direction(len in 3usize..30, shift in 0usize..30, flip in any::<bool>()) {
        let base: Vec<u32> = (0..len as u32).map(|x| (x * 7919) % 1009).collect();
        let mut moved = base.clone();
        moved.rotate_left(shift % len);
        if flip {
            moved.reverse();
        }
        prop_assert_eq!(normalize_cycle(&moved), normalize_cycle(&base));
    }

    #[test]
    fn perm_shortcut_matches_definition(
        (a, b) in (2usize..=9).prop_flat_map(|n| (permutation(n), permutation(n)))
    ) {
        prop_assert_eq!(kg_perm_adjacent(&a, &b).unwrap(), adjacent_by_indecomposable(&a, &b).unwrap());
        prop_assert_eq!(kg_perm_adjacent(&a, &b).unwrap(), kg_perm_adjacent(&b, &a).unwrap());
        prop_assert_eq!(a.compose(&a.inverse()), Permutation::identity(a.n()));
    }
}

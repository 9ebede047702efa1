mod common;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use waci::arith::int;
use waci::families::family_a;
use waci::poly::VarSpec;
use waci::quotient::QuotientRing;

fn unanimous(ring: &QuotientRing, seed: u64) -> i64 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let counts: Vec<i64> = (0..20).map(|_| common::numeric_degree(ring.relations(), &mut rng).expect("regular value")).collect();
    assert!(counts.iter().all(|&c| c == counts[0]), "{counts:?}");
    counts[0]
}

#[test]
fn x_cubed() {
    let ring = QuotientRing::build_waci(vec![VarSpec::new("x", 2)], &["x^3"]).unwrap();
    assert_eq!(ring.el_degree().unwrap(), 1);
    assert_eq!(unanimous(&ring, 1), 1);
}

#[test]
fn family_a_zero_and_two() {
    for (c, expected) in [(0, 1), (2, -3)] {
        let ring = family_a(&int(c)).unwrap().build().unwrap();
        assert_eq!(ring.el_degree().unwrap(), expected);
        assert_eq!(unanimous(&ring, c as u64 + 7), expected);
    }
}

#[test]
fn family_a_grid_agrees() {
    for c in [-3, -2, -1, 3, 4, 5] {
        let ring = family_a(&int(c)).unwrap().build().unwrap();
        assert_eq!(ring.el_degree().unwrap(), unanimous(&ring, (100 + c) as u64), "A({c})");
    }
}

#[test]
fn two_variable_fixtures_agree() {
    for (name, ring) in common::all_algebras() {
        let n = ring.ring().nvars();
        let uniform = ring.ring().vars().iter().all(|v| v.weight == 2);
        if n > 2 || !uniform || ring.relation_degrees().windows(2).any(|w| w[0] != w[1]) {
            continue;
        }
        assert_eq!(ring.el_degree().unwrap(), unanimous(&ring, 5), "{name}");
    }
}

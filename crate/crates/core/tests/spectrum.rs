use proptest::prelude::*;

use orbitdeg::spectrum::{cube_matrix, isotypic_spectrum, GammaAction};

fn apply(q: &[Vec<i64>], x: &[i64]) -> Vec<i64> {
    q.iter().map(|row| row.iter().zip(x).map(|(a, b)| a * b).sum()).collect()
}

/// Height of each vertex above the centre: faces 1234 and 5678 are
/// opposite, so this vector is one coordinate of the cube's embedding.
const HEIGHT: [i64; 8] = [1, 1, 1, 1, -1, -1, -1, -1];

#[test]
fn coordinate_vector_lies_in_chi4() {
    let action = GammaAction::cube();
    // the projectors are |S4| times the orthogonal ones
    assert_eq!(apply(&action.projector(4), &HEIGHT), HEIGHT.map(|x| 24 * x));
    for j in [0, 1, 2, 3] {
        assert!(apply(&action.projector(j), &HEIGHT).iter().all(|&x| x == 0), "chi{j}");
    }
    let a = cube_matrix(4.0, 1.0);
    let ax: Vec<f64> = a.iter().map(|row| row.iter().zip(HEIGHT).map(|(a, b)| a * b as f64).sum()).collect();
    assert_eq!(ax, HEIGHT.map(|x| 5.0 * x as f64));
}

#[test]
fn cube_components_at_four_one() {
    let s = isotypic_spectrum(&GammaAction::cube(), &cube_matrix(4.0, 1.0)).unwrap();
    let got: Vec<_> = s.components.iter().map(|c| (c.j, c.mu, c.dim, c.multiplicity)).collect();
    assert_eq!(got, [(0, 7.0, 1, 1), (1, 1.0, 1, 1), (3, 3.0, 3, 1), (4, 5.0, 3, 1)]);
    assert!(s.eigensolver_deviation.unwrap() < 1e-9);
}

proptest! {
    #[test]
    fn cube_eigenvalues_follow_c_and_d(c in -20i32..20, d in -20i32..20) {
        let (c, d) = (c as f64, d as f64);
        let s = isotypic_spectrum(&GammaAction::cube(), &cube_matrix(c, d)).unwrap();
        let mu: Vec<_> = s.components.iter().map(|x| (x.j, x.mu)).collect();
        prop_assert_eq!(mu, vec![(0, c + 3.0 * d), (1, c - 3.0 * d), (3, c - d), (4, c + d)]);
    }
}

#![allow(dead_code)]

use std::path::PathBuf;

use num_traits::ToPrimitive;
use rand::Rng;
use waci::poly::WPoly;
use waci::quotient::QuotientRing;

pub fn fixture_paths(dir: &str) -> Vec<PathBuf> {
    let root: PathBuf = [env!("CARGO_MANIFEST_DIR"), "fixtures", dir].iter().collect();
    let mut v: Vec<PathBuf> = std::fs::read_dir(root)
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|e| e == "json"))
        .collect();
    v.sort();
    v
}

pub fn load_algebra(path: &PathBuf) -> waci::cli::AlgebraInput {
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

/// Every algebra fixture, families included.
pub fn all_algebras() -> Vec<(String, QuotientRing)> {
    fixture_paths("families")
        .into_iter()
        .chain(fixture_paths("algebras"))
        .map(|p| {
            let name = p.file_stem().unwrap().to_string_lossy().into_owned();
            let ring = load_algebra(&p).build().unwrap();
            (name, ring)
        })
        .collect()
}

fn eval(p: &WPoly, x: &[f64]) -> f64 {
    p.terms()
        .map(|(m, c)| {
            let c = c.to_f64().unwrap();
            m.exps().iter().zip(x).fold(c, |acc, (&e, &xi)| acc * xi.powi(e as i32))
        })
        .sum()
}

fn det(m: &[Vec<f64>]) -> f64 {
    match m.len() {
        1 => m[0][0],
        2 => m[0][0] * m[1][1] - m[0][1] * m[1][0],
        _ => unimplemented!("numeric oracle covers one and two variables"),
    }
}

/// Floating-point degree of `f: Rⁿ → Rⁿ` (n ≤ 2, all relations homogeneous
/// of one standard degree d): signed count of preimages of a random point.
///
/// Homogeneity reduces the preimage search to directions: `f(r u) = r^d f(u)`,
/// so a preimage of `y` lies on every ray `u` with `f(u)` a positive multiple
/// of `y`. Rays are located by sign changes of the cross product on a fine
/// grid of the circle, refined by bisection.
pub fn numeric_degree<R: Rng>(relations: &[WPoly], rng: &mut R) -> Option<i64> {
    let n = relations.len();
    let jac: Vec<Vec<WPoly>> = relations.iter().map(|f| (0..n).map(|i| f.derivative(i)).collect()).collect();
    let sign_det = |x: &[f64]| {
        let m: Vec<Vec<f64>> = jac.iter().map(|row| row.iter().map(|p| eval(p, x)).collect()).collect();
        let d = det(&m);
        if d.abs() < 1e-9 {
            None
        } else {
            Some(d.signum() as i64)
        }
    };
    match n {
        1 => {
            let y: f64 = rng.gen_range(-2.0..2.0);
            let mut total = 0;
            for u in [1.0f64, -1.0] {
                let fu = eval(&relations[0], &[u]);
                if fu * y > 0.0 {
                    total += sign_det(&[u])?;
                }
            }
            Some(total)
        }
        2 => {
            let theta_y: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
            let y = [theta_y.cos(), theta_y.sin()];
            let at = |t: f64| [t.cos(), t.sin()];
            let cross = |t: f64| {
                let u = at(t);
                eval(&relations[0], &u) * y[1] - eval(&relations[1], &u) * y[0]
            };
            const STEPS: usize = 20_000;
            let h = std::f64::consts::TAU / STEPS as f64;
            let mut total = 0;
            for k in 0..STEPS {
                let (mut a, mut b) = (k as f64 * h, (k + 1) as f64 * h);
                let (ca, cb) = (cross(a), cross(b));
                if ca == 0.0 || ca.signum() == cb.signum() {
                    continue;
                }
                for _ in 0..60 {
                    let mid = 0.5 * (a + b);
                    if cross(mid).signum() == cross(a).signum() {
                        a = mid;
                    } else {
                        b = mid;
                    }
                }
                let u = at(0.5 * (a + b));
                let dot = eval(&relations[0], &u) * y[0] + eval(&relations[1], &u) * y[1];
                if dot > 0.0 {
                    total += sign_det(&u)?;
                }
            }
            Some(total)
        }
        _ => None,
    }
}

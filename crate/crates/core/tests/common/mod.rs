#![allow(dead_code)]

use std::sync::Arc;

use superschur::charkron::kronecker;
use superschur::hookschur::{hook_schur_def, Alphabet, PowerSumEvaluator};
use superschur::laurent::{LaurentPoly, VarTable};
use superschur::partition::{partitions_of, partitions_up_to, Partition};

pub fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

/// Table `x1..xk, y1..yl` with the two alphabets.
pub fn plain_hook(k: usize, l: usize) -> (Arc<VarTable>, Alphabet, Alphabet) {
    let names = VarTable::numbered("x", k).into_iter().chain(VarTable::numbered("y", l));
    let vars = VarTable::new(names).unwrap();
    let x = Alphabet::variables(&vars, 0..k);
    let y = Alphabet::variables(&vars, k..k + l);
    (vars, x, y)
}

/// `HS_lambda(XT, YU; XU, YT)` against `sum gamma^lambda_{mu,nu} HS_mu(X;Y) HS_nu(T;U)`
/// with one variable in each of `X, Y, T, U`. Returns the first failing shape.
pub fn rosas_first_failure(max_size: usize) -> Option<Partition> {
    let vars = VarTable::new(["x", "y", "t", "u"]).unwrap();
    let v = |i| LaurentPoly::var(&vars, i);
    let (x, y, t, u) = (v(0), v(1), v(2), v(3));
    let left_x = Alphabet::from_monomials(&vars, &[&x * &t, &y * &u]).unwrap();
    let left_y = Alphabet::from_monomials(&vars, &[&x * &u, &y * &t]).unwrap();
    let ax = Alphabet::variables(&vars, [0]);
    let ay = Alphabet::variables(&vars, [1]);
    let at = Alphabet::variables(&vars, [2]);
    let au = Alphabet::variables(&vars, [3]);
    for lambda in partitions_up_to(max_size) {
        let lhs = hook_schur_def(&lambda, &left_x, &left_y).unwrap();
        let shapes = partitions_of(lambda.size());
        let mut rhs = LaurentPoly::zero(&vars);
        for mu in &shapes {
            let a = hook_schur_def(mu, &ax, &ay).unwrap();
            if a.is_zero() {
                continue;
            }
            for nu in &shapes {
                let g = kronecker(&lambda, mu, nu).unwrap();
                if g == 0 {
                    continue;
                }
                let b = hook_schur_def(nu, &at, &au).unwrap();
                rhs = &rhs + &(&a * &b).scale(&g.into());
            }
        }
        if lhs != rhs {
            return Some(lambda);
        }
    }
    None
}

fn truncate_xy(poly: &mut LaurentPoly, xy: usize, degree: usize) {
    poly.retain(|e| e[..xy].iter().sum::<i32>() <= degree as i32);
}

/// `sum_lambda HS_lambda(X;Y) HS_lambda(T;U)` against
/// `prod(1 + x_i u_j)(1 + y_i t_j) / prod(1 - x_i t_j)(1 - y_i u_j)`,
/// both truncated at degree `degree` in `X ∪ Y`.
pub fn cauchy_holds(sizes: [usize; 4], degree: usize) -> bool {
    let [nx, ny, nt, nu] = sizes;
    let names = VarTable::numbered("x", nx)
        .into_iter()
        .chain(VarTable::numbered("y", ny))
        .chain(VarTable::numbered("t", nt))
        .chain(VarTable::numbered("u", nu));
    let vars = VarTable::new(names).unwrap();
    let xs: Vec<usize> = (0..nx).collect();
    let ys: Vec<usize> = (nx..nx + ny).collect();
    let ts: Vec<usize> = (nx + ny..nx + ny + nt).collect();
    let us: Vec<usize> = (nx + ny + nt..nx + ny + nt + nu).collect();
    let xy = nx + ny;

    let mut lhs = LaurentPoly::zero(&vars);
    let mut left = PowerSumEvaluator::for_hook(
        &Alphabet::variables(&vars, xs.clone()),
        &Alphabet::variables(&vars, ys.clone()),
    )
    .unwrap();
    let mut right = PowerSumEvaluator::for_hook(
        &Alphabet::variables(&vars, ts.clone()),
        &Alphabet::variables(&vars, us.clone()),
    )
    .unwrap();
    left.ensure(degree);
    right.ensure(degree);
    for lambda in partitions_up_to(degree) {
        let a = left.schur(&lambda);
        if a.is_zero() {
            continue;
        }
        lhs = &lhs + &(&a * &right.schur(&lambda));
    }

    let one = LaurentPoly::one(&vars);
    let pair = |i: usize, j: usize| {
        let mut e = vec![0; vars.len()];
        e[i] = 1;
        e[j] = 1;
        LaurentPoly::monomial(&vars, e, 1)
    };
    let mut rhs = one.clone();
    for (a, b) in [(&xs, &us), (&ys, &ts)] {
        for &i in a {
            for &j in b {
                rhs = &rhs * &(&one + &pair(i, j));
                truncate_xy(&mut rhs, xy, degree);
            }
        }
    }
    for (a, b) in [(&xs, &ts), (&ys, &us)] {
        for &i in a {
            for &j in b {
                let w = pair(i, j);
                let mut geometric = one.clone();
                let mut power = one.clone();
                for _ in 0..degree {
                    power = &power * &w;
                    geometric = &geometric + &power;
                }
                rhs = &rhs * &geometric;
                truncate_xy(&mut rhs, xy, degree);
            }
        }
    }
    lhs == rhs
}

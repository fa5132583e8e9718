use clarabel::algebra::*;
use clarabel::solver::*;

fn main() {
    // minimize x s.t. [[x,1],[1,x]] >= 0  -> x = 1
    let p = CscMatrix::zeros((1, 1));
    let q = vec![1.0];
    // s = b - A x must be svec of [[x,1],[1,x]] = (x, sqrt(2), x)
    let a = CscMatrix::new(
        3,
        1,
        vec![0, 3],
        vec![0, 1, 2],
        vec![-1.0, 0.0, -1.0],
    );
    let b = vec![0.0, std::f64::consts::SQRT_2, 0.0];
    let cones = [PSDTriangleConeT(2)];
    let settings = DefaultSettings {
        verbose: false,
        ..DefaultSettings::default()
    };
    let mut solver = DefaultSolver::new(&p, &q, &a, &b, &cones, settings);
    solver.solve();
    println!("status={:?} x={:?} obj={}", solver.solution.status, solver.solution.x, solver.solution.obj_val);
}

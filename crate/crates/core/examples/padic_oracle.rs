//! Numerical checks over Q_p and F_p.
use motivic::oracles::finite_field::check_gauss_jacobi;
use motivic::oracles::padic::{check_decomposition, ResidualFunction};
use motivic::oracles::poly_expr::IntPoly;

fn main() {
    let f: IntPoly = "x^2 + y^3".parse().unwrap();
    for p in [3, 5, 7] {
        for i in 0..=1 {
            let r = check_decomposition(&f, p, &ResidualFunction::one(p, f.arity()), i).unwrap();
            println!("p = {p}, i = {i}: lhs = {:.6}, rhs = {:.6}, residue = {:.1e}", r.lhs, r.rhs, r.residue);
        }
    }
    for p in [5, 7, 11] {
        let r = check_gauss_jacobi(p).unwrap();
        println!("F_{p}: {} pairs, pass = {}", r.pairs, r.pass());
    }
}

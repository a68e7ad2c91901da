//! Normal forms of rational functions in T, expansions at 0 and at infinity.
use std::collections::BTreeMap;

use motivic::series::RationalFunction;
use motivic::MotiveFrac;

fn main() {
    // T^2 / ((1 - L^-1 T^2)(1 - T))
    let num = BTreeMap::from([(2, MotiveFrac::one())]);
    let f = RationalFunction::new(num, vec![(-1, 2), (0, 1)]).unwrap();
    let s = f.normalize();
    println!("terms: {}", s.term_count());
    for i in 0..8 {
        println!("  [T^{i}] = {}", s.exp_t_coefficient(i));
    }
    for i in -6..=0 {
        println!("  [T^{i}] at infinity = {}", s.exp_t_inv_coefficient(i));
    }
    println!("lambda = {}", s.lambda());
    println!("lambda of the hadamard square = {}", s.hadamard(&s).lambda());
}

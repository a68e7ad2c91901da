//! Motivic zeta functions, measure series and exponential series of a monomial.
use motivic::arc::MonomialGeometry;
use motivic::Character;

fn main() {
    // f = x^2 y^3 near the origin
    let g = MonomialGeometry::new(vec![2, 3], vec![0, 0], &[1, 2]).unwrap();
    println!("gcd = {}, D = {}", g.exponent_gcd(), g.big_d());
    for alpha in g.supporting_characters() {
        let z = g.zeta_series(&alpha);
        let first: Vec<String> = (1..=6).map(|i| z.exp_t_coefficient(i).to_string()).collect();
        println!("Z_{alpha}: {}", first.join(", "));
    }
    println!("Z at 1/2 vanishes: {}", g.zeta_series(&Character::new(1, 2).unwrap()).is_zero());
    println!("total measure = {}", g.total_measure());
    let e = g.exp_series();
    for i in 1..=4 {
        println!("[T^{i}] E = {}", e.exp_t_coefficient(i));
    }
    println!("lambda(E) = {}", e.lambda());
}

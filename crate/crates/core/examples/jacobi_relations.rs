//! Hodge realizations of Jacobi motives and the Fermat torus relation.
use motivic::motive::{fermat_torus_class, gamma, jacobi, Character};

fn main() {
    let d = 5;
    for a in 1..d {
        for b in 1..d {
            let (x, y) = (Character::new(a, d).unwrap(), Character::new(b, d).unwrap());
            println!("J({x}, {y}) = {}    gamma = {}, {}", jacobi(&x, &y), gamma(&x), gamma(&y));
        }
    }
    let (x, y) = (Character::new(1, 3).unwrap(), Character::new(1, 3).unwrap());
    println!("[x^3 + y^3 = 1, xy != 0]_({x},{y}) = {}", fermat_torus_class(&x, &y));
}

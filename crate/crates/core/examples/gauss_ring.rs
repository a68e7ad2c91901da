//! Arithmetic with formal Gauss sums over the motive ring.
use motivic::{Character, MotiveFrac, UElement};

fn main() {
    let a = Character::new(1, 4).unwrap();
    let g = UElement::gauss(a);
    let gi = UElement::gauss(a.inverse());
    println!("G_a       = {g}");
    println!("G_a G_a^-1 = {}", &g * &gi);
    println!("G_a^2     = {}", &g * &g);

    let mut u = UElement::from_scalar(MotiveFrac::lefschetz_pow(-1));
    u.add_gauss(Character::new(1, 3).unwrap(), MotiveFrac::one());
    println!("u = {}", u.render(true));
    println!("hodge(u) = {}", u.hodge_realize());
    for (alpha, c) in u.sg_decompose() {
        println!("  coefficient of G_{alpha}: {c}");
    }
}

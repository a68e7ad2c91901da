//! Hodge spectra of Brieskorn-Pham singularities.
use motivic::spectra::{brieskorn_oracle, sg_brieskorn, sp_brieskorn};

fn main() {
    for e in [vec![2, 3], vec![2, 4], vec![3, 4, 5], vec![2, 2, 2]] {
        let sp = sp_brieskorn(&e).unwrap();
        println!("{e:?}: Sp = {sp}  (oracle agrees: {})", sp == brieskorn_oracle(&e).unwrap());
    }
    println!("Sg(x^2 + y^3) = {}", sg_brieskorn(&[2, 3]).unwrap());
}

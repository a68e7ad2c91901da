//! Thom-Sebastiani for f(x) + g(y), checked against the direct stratification.
use motivic::arc::{ts_check, MonomialGeometry};
use motivic::spectra::{sg, sg_product_direct};

fn main() {
    let (x2, y3) = (MonomialGeometry::power(2).unwrap(), MonomialGeometry::power(3).unwrap());
    let report = ts_check(&x2, &y3, 30);
    println!("levels checked: {}, pass: {}", report.levels_checked, report.passed());
    let product = &sg(&x2) * &sg(&y3);
    println!("Sg(x^2) Sg(y^3) = {product}");
    println!("matches direct sum: {}", product == sg_product_direct(&x2, &y3));
}

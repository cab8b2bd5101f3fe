//! s orthogonal idempotents as polynomials in one generator.

use ratmackey::classifying::collapse;
use ratmackey::scalar;
use ratmackey::series::Poly;

fn main() {
    let c = collapse(3);
    print!("{}", c.to_text());
    let f = Poly::x().pow(2);
    let coords: Vec<String> = c.from_poly(&f).iter().map(scalar::format).collect();
    println!("e^2 on (1, e_1, e_2, e_3): {}", coords.join(", "));
    println!("back: {}", c.to_poly(&c.from_poly(&f)).to_text("e"));
}

//! Marks, products and idempotents in the rational Burnside ring of C_8.

use ratmackey::burnside::{idempotents, BurnsideElement, GroupLevel};
use ratmackey::scalar;

fn main() -> ratmackey::Result<()> {
    let g = GroupLevel::top(3)?;
    let x1 = BurnsideElement::orbit(g, 1);
    let x2 = BurnsideElement::orbit(g, 2);
    println!("{x1} * {x2} = {}", x1.mul(&x2)?);
    let marks: Vec<String> = x1.marks().iter().map(scalar::format).collect();
    println!("marks of x[3,1]: {}", marks.join(" "));

    for (h, e) in idempotents(g).iter().enumerate() {
        println!("e_{h} = {e}");
    }

    let y2 = BurnsideElement::y(GroupLevel::new(3, 2)?);
    println!("y_2 = {y2}, Res to C_2 = {}", y2.res(1)?);
    println!("Tr(y_2)/2 = {}", y2.tr()?.scale(&scalar::frac(1, 2)));
    Ok(())
}

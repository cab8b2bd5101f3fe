//! Rational Mackey functors for C_{2^n} as multisets of simple summands.

use ratmackey::mackey::{LevelEigen, MackeyClass};

fn main() -> ratmackey::Result<()> {
    let n = 2;
    let a = MackeyClass::parse(n, "M0- + M1-")?;
    let b = MackeyClass::parse(n, "M0 + M1 + M2")?;
    println!("({a}) box ({b}) = {}", a.box_product(&b));
    println!("({a}) box ({a}) = {}", a.box_product(&a));
    println!("level dimensions of {b}: {:?}", b.level_dims());

    let eigen = [LevelEigen::new(1, 1, 0), LevelEigen::new(0, 1, 0), LevelEigen::new(2, 0, 0)];
    println!("classified: {}", MackeyClass::classify(n, &eigen)?);

    // a Weyl module with an eigenvalue of order four is rejected
    let bad = [LevelEigen::default(), LevelEigen::new(0, 0, 2), LevelEigen::default()];
    if let Err(e) = MackeyClass::classify(n, &bad) {
        println!("error: {e}");
    }
    Ok(())
}

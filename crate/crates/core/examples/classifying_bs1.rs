//! Bredon cohomology of B_G S^1 two ways: fixed points and a presentation.

use ratmackey::classifying::{bgs1_presentation, fixed_point_data, gm_assemble, Space};

fn main() -> ratmackey::Result<()> {
    let n = 2;
    let max = 6;
    let gm = gm_assemble(&fixed_point_data(Space::BS1, n, max)?)?;
    let p = bgs1_presentation(n)?;
    print!("{}", p.to_text());
    for (deg, class) in gm.iter() {
        println!("H^{deg} = {class}");
    }
    println!("presentation table agrees: {}", gm == p.table(max));
    println!("top-level series: {}", gm.poincare_series(n, max));
    Ok(())
}

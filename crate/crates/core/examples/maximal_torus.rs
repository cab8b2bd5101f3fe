//! U(m) against its maximal torus, and the SU(2) degree-zero count.

use ratmackey::classifying::{torus_check_su2, torus_check_u, WeylModel};

fn main() -> ratmackey::Result<()> {
    print!("{}", torus_check_u(2, 2, 10)?.to_text());
    for n in 1..=4 {
        let paper = torus_check_su2(n, WeylModel::Paper)?;
        let perm = torus_check_su2(n, WeylModel::Permutation)?;
        println!("n={n}: {} | permutation action: {}", paper.to_text(), perm.to_text());
    }
    Ok(())
}

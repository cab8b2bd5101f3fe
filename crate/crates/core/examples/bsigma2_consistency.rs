//! B_G Sigma_2 from its fixed points versus the quotient of B_G S^1 by w.

use ratmackey::classifying::bsigma2_consistency;

fn main() -> ratmackey::Result<()> {
    for n in 1..=3 {
        print!("{}", bsigma2_consistency(n, 4)?.to_text());
        println!();
    }
    Ok(())
}

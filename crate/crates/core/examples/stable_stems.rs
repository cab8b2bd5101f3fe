//! RO(G)-graded stems of a point by three independent methods.

use ratmackey::compare::{compare_methods, StemMethods};
use ratmackey::rolattice::parse_degree;
use ratmackey::stems::{decode, stem_at, stem_at_oracle, stem_at_sector};

fn main() -> ratmackey::Result<()> {
    let n = 3;
    for src in ["1 - sigma", "2 - l0", "-l1", "0", "2 - l0 - l1", "4 - 2*sigma - l0"] {
        let v = parse_degree(n, src)?;
        println!(
            "{src:>18}: closed {} | sector {} | oracle {}",
            stem_at(&v),
            stem_at_sector(&v),
            stem_at_oracle(&v)?
        );
    }

    let v = parse_degree(2, "l0 - 2*sigma")?;
    let d = decode(&v);
    println!("{v} is reached by {} tuples; stem {}", d.tuples.len(), d.class());

    let report = compare_methods(2, 3, &StemMethods::default());
    print!("{}", report.to_text());
    Ok(())
}

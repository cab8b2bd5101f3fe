//! Generators of the point ring and its fixed-point localizations.

use ratmackey::rolattice::parse_degree;
use ratmackey::stems::{fixed_point_rings, point_presentation, stem_at};

fn main() -> ratmackey::Result<()> {
    print!("{}", point_presentation(2).to_text());

    let t = fixed_point_rings(2, 3);
    let v = parse_degree(2, "l0 - 2*sigma")?;
    println!(
        "degree {v}: geometric {} homotopy {} stem {}",
        t.geometric_dim(&v),
        t.homotopy_dim(&v),
        stem_at(&v)
    );
    println!("mismatches against the stems: {}", t.mismatches(stem_at).len());
    Ok(())
}

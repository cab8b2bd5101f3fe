//! Reduced homology of representation spheres, including virtual ones.

use ratmackey::rolattice::parse_degree;
use ratmackey::stems::sphere_homology;

fn main() -> ratmackey::Result<()> {
    let n = 3;
    for src in ["sigma", "2*sigma", "l0", "l1", "l0 - sigma"] {
        let v = parse_degree(n, src)?;
        println!("S^({src}):");
        for (deg, class) in sphere_homology(&v)?.iter() {
            println!("  H_{deg} = {class}");
        }
    }
    Ok(())
}

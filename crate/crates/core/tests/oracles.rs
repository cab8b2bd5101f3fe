//! Library results against brute-force enumerations.

mod common;

use common::GSet;
use itertools::Itertools;
use ratmackey::burnside::{BurnsideElement, GroupLevel};
use ratmackey::classifying::{bu_series, fixed_point_data, gm_assemble, sym_invariants_series, Space};
use ratmackey::scalar;
use ratmackey::series::PowerSeries;

fn gset_from_counts(n: usize, i: usize, counts: &[usize]) -> GSet {
    let mut g = GSet { n, i, act: Vec::new() };
    for (j, &c) in counts.iter().enumerate() {
        for _ in 0..c {
            g = g.disjoint(&GSet::orbit(n, i, j));
        }
    }
    g
}

#[test]
fn burnside_against_finite_sets() {
    let n = 3;
    for i in 0..=n {
        let shapes: Vec<Vec<usize>> = (0..=i).map(|_| 0..3usize).multi_cartesian_product().collect();
        for a in shapes.iter().step_by(3) {
            for b in shapes.iter().step_by(5) {
                let (ga, gb) = (gset_from_counts(n, i, a), gset_from_counts(n, i, b));
                let (ea, eb) = (ga.class(), gb.class());
                assert_eq!(ea.mul(&eb).unwrap(), ga.product(&gb).class());
                assert_eq!(ea.marks(), ga.marks().into_iter().map(scalar::int).collect::<Vec<_>>());
                if i > 0 {
                    assert_eq!(ea.res(i - 1).unwrap(), ga.res().class());
                }
                if i < n {
                    assert_eq!(ea.tr().unwrap(), ga.induce().class());
                }
            }
        }
    }
}

#[test]
fn transfer_of_the_unit_is_the_index_two_orbit() {
    for n in 1..=5 {
        for i in 0..n {
            let one = BurnsideElement::one(GroupLevel::new(n, i).unwrap());
            let up = GroupLevel::new(n, i + 1).unwrap();
            assert_eq!(one.tr().unwrap(), BurnsideElement::orbit(up, i));
            assert_eq!(GSet::orbit(n, i, i).induce().class(), BurnsideElement::orbit(up, i));
        }
    }
}

fn partitions_with_parts_at_most(total: usize, largest: usize) -> u64 {
    if total == 0 {
        return 1;
    }
    (1..=largest.min(total)).map(|p| partitions_with_parts_at_most(total - p, p)).sum()
}

#[test]
fn bu_series_counts_chern_monomials() {
    let d = 30;
    for k in 0..=4 {
        let s = bu_series(k, d);
        for deg in 0..=d {
            let want = if deg % 2 == 0 { partitions_with_parts_at_most(deg / 2, k) } else { 0 };
            assert_eq!(s.coeff(deg), scalar::int(want as i64), "k={k} degree {deg}");
        }
    }
}

#[test]
fn component_counts_match_homomorphism_counts() {
    for n in 1..=4 {
        for h in 0..=n {
            let chars = 1usize << h;
            let count = |space| fixed_point_data(space, n, 0).unwrap().level(h).components.len();
            assert_eq!(count(Space::BS1), chars);
            assert_eq!(count(Space::BSigma2), if h == 0 { 1 } else { 2 });
            for m in 1..=3 {
                assert_eq!(count(Space::BU(m)), (0..chars).combinations_with_replacement(m).count());
                assert_eq!(count(Space::Torus(m)), chars.pow(m as u32));
            }
            // SU(2): characters up to i ~ -i
            let classes = (0..chars).filter(|&i| i <= (chars - i) % chars).count();
            assert_eq!(count(Space::BSU2), classes);
        }
    }
}

#[test]
fn symmetric_invariants_by_monomial_enumeration() {
    let d = 12;
    for chars in 1..=4usize {
        let comps = vec![PowerSeries::geometric(2, d); chars];
        for m in 1..=3 {
            let got = sym_invariants_series(&comps, m, d);
            // a basis monomial of V is (component, power of the generator)
            let basis: Vec<(usize, usize)> = (0..chars).cartesian_product(0..=d / 2).collect();
            let mut want = vec![0i64; d + 1];
            for ms in basis.iter().combinations_with_replacement(m) {
                let deg: usize = ms.iter().map(|(_, p)| 2 * p).sum();
                if deg <= d {
                    want[deg] += 1;
                }
            }
            assert_eq!(got, PowerSeries::from_ints(&want, d), "chars={chars} m={m}");
        }
    }
}

#[test]
fn bu_gm_table_counts() {
    // U(1) = S^1
    for n in 1..=3 {
        let a = gm_assemble(&fixed_point_data(Space::BU(1), n, 10).unwrap()).unwrap();
        let b = gm_assemble(&fixed_point_data(Space::BS1, n, 10).unwrap()).unwrap();
        assert_eq!(a, b);
    }
}

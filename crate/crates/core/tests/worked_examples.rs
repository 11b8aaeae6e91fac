//! Worked examples replayed against fixed expected labels.

use chordal::promotion::promote;
use chordal::virtualize::iota_v_to_o;
use chordal::{growth_diagram, growth_inverse, growth_matrix, Family, TableauSeq};

const FAN: &str = "000,111,222,311,422,331,222,111,000";
const VAC: &str = "000,100,200,210,211,111,111,110,100,000";

fn tab(family: Family, r: usize, s: &str) -> TableauSeq {
    TableauSeq::parse_compact(family, r, s).unwrap()
}

/// Anti-diagonals of the triangular diagram, shortest first, each read from the left border.
const FAN_GROWTH: [&str; 9] = [
    "000",
    "000,000",
    "000,111,000",
    "000,111,111,000",
    "000,111,211,111,000",
    "000,111,211,211,111,000",
    "000,111,211,311,221,111,000",
    "000,111,211,311,321,221,111,000",
    "000,111,222,311,422,331,222,111,000",
];

const VAC_GROWTH: [&str; 10] = [
    "000",
    "000,000",
    "000,000,000",
    "000,000,000,000",
    "000,100,000,000,000",
    "000,200,100,100,100,000",
    "000,200,200,210,210,100,000",
    "000,200,400,220,221,210,200,000",
    "000,200,400,420,222,221,220,200,000",
    "000,200,400,420,422,222,222,220,200,000",
];

#[test]
fn fan_growth_labels() {
    let f = tab(Family::Fan, 3, FAN);
    let mut got = growth_diagram(&f).unwrap().diagonals(3);
    got.reverse();
    assert_eq!(got, FAN_GROWTH);
}

#[test]
fn vacillating_growth_labels_are_doubled() {
    let v = tab(Family::Vacillating, 3, VAC);
    let mut got = growth_diagram(&v).unwrap().diagonals(3);
    got.reverse();
    assert_eq!(got, VAC_GROWTH);
}

#[test]
fn worked_examples_round_trip() {
    for t in [tab(Family::Fan, 3, FAN), tab(Family::Vacillating, 3, VAC)] {
        let grid = growth_diagram(&t).unwrap();
        assert_eq!(growth_inverse(t.family, t.rank, &grid.triangle()).unwrap(), t);
        assert_eq!(grid.matrix(), growth_matrix(&t).unwrap());
    }
}

#[test]
fn vacillating_promotion_through_the_embedding() {
    let v = tab(Family::Vacillating, 3, VAC);
    let o = iota_v_to_o(&v).unwrap();
    let twice = promote(&promote(&o).unwrap()).unwrap();
    let shown =
        tab(Family::Oscillating, 3, "000,100,200,210,220,221,222,221,220,221,222,221,222,221,220,210,200,100,000");
    assert_eq!(twice, shown);
    assert_eq!(iota_v_to_o(&promote(&v).unwrap()).unwrap(), shown);
}

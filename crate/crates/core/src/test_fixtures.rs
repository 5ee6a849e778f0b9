//! Worked examples shared by unit tests.

use crate::domino_tableaux::{domino_tableau_from_str, DominoTableau};
use crate::partitions::Partition;
use crate::tableaux::Family;

pub fn dt(family: Family, shape: &[usize], dominoes: &str) -> DominoTableau {
    domino_tableau_from_str(family, &Partition::new(shape.to_vec()).unwrap(), dominoes).unwrap()
}

pub fn plain_5421() -> DominoTableau {
    dt(Family::Plain, &[5, 4, 2, 1], "V(1,1)=1 V(3,1)=2 H(1,2)=1 V(2,2)=3 H(1,4)=5 H(2,3)=6")
}

pub fn plain_6442211() -> DominoTableau {
    dt(
        Family::Plain,
        &[6, 4, 4, 2, 1, 1],
        "H(1,1)=1 V(2,1)=2 V(2,2)=2 V(1,3)=2 V(1,4)=3 H(1,5)=4 H(3,3)=4 H(4,1)=3 V(5,1)=4",
    )
}

pub fn set_valued_65531() -> DominoTableau {
    dt(
        Family::SetValued,
        &[6, 5, 5, 3, 1],
        "H(1,1)={1,2} V(2,1)={3,4} V(2,2)=3 V(1,3)={3,7} V(1,4)={4,6} H(1,5)={6,8} \
         V(2,5)=9 H(3,3)={7,8,9} H(4,2)=10 V(4,1)=5",
    )
}

pub fn set_valued_6422() -> DominoTableau {
    dt(
        Family::SetValued,
        &[6, 4, 2, 2],
        "H(1,1)={1,2} V(2,1)={3,6} V(2,2)={3,4} V(1,3)={4,7} V(1,4)=4 H(1,5)={4,5,6} H(4,1)=5",
    )
}

const SHIFTED_UP: &str = "V(1,1)=1' V(1,2)=1 V(1,3)=1 V(1,4)=2' H(1,5)=3' H(1,7)=3 H(2,6)=4 \
                          V(2,5)=3' H(3,3)=2' H(4,4)=3' H(5,4)=3";

pub fn shifted_8_7_5_5_5() -> DominoTableau {
    shifted_with_down("V(3,1)=X V(3,2)=X V(4,3)=X H(5,1)=X")
}

pub fn shifted_with_down(down: &str) -> DominoTableau {
    dt(Family::Shifted, &[8, 7, 5, 5, 5], &format!("{SHIFTED_UP} {down}"))
}

pub fn shifted_set_valued_65551() -> DominoTableau {
    dt(
        Family::ShiftedSetValued,
        &[6, 5, 5, 5, 1],
        "V(1,1)={1',1} V(1,2)=1 H(1,3)=2' H(1,5)={2,3'} H(2,3)={2',2} H(3,1)=X \
         H(3,3)={3',3} V(4,1)=X H(4,2)=X V(2,5)={3,4'} H(4,4)=4'",
    )
}

const SSV_UP: &str = "V(1,1)={1,2} V(1,2)=1 H(1,3)={1,2'} H(1,5)=2 H(2,3)=3' H(3,3)=3' \
                      V(2,5)={3,4'} H(4,4)={4',7} H(5,4)=4'";

pub fn shifted_set_valued_pair() -> (DominoTableau, DominoTableau) {
    let shape = [6, 5, 5, 5, 5];
    (
        dt(Family::ShiftedSetValued, &shape, &format!("{SSV_UP} H(3,1)=X V(4,1)=X H(4,2)=X H(5,2)=X")),
        dt(Family::ShiftedSetValued, &shape, &format!("{SSV_UP} V(3,1)=X V(3,2)=X V(4,3)=X H(5,1)=X")),
    )
}

use std::time::Instant;

use ricci_core::enumerate::{census_with_classification, CensusRequest};

fn main() {
    let cells = [(4, 3), (6, 3), (8, 3), (10, 3), (5, 4), (6, 4), (7, 4), (8, 4), (9, 4)];
    for (n, d) in cells {
        let t = Instant::now();
        let table = census_with_classification(CensusRequest::new(n, d).unwrap()).unwrap();
        println!("{table:?} in {:.2?}", t.elapsed());
    }
}

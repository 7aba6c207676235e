//! Checks the theorems on single decompositions and replays a reproduction.

use vkmaps::map::{fixtures, BoundaryDecomposition};
use vkmaps::verify::{verify_c4t4_corollary, verify_c7_corollary, verify_main_theorem, Reproduction, Theorem};

fn main() {
    let g = fixtures::grid4();
    for (base, mu) in [((6, 7), 4), ((7, 8), 4)] {
        let d = BoundaryDecomposition::from_lengths(&g.map, g.dart(base.0, base.1), 0, mu, 0).unwrap();
        let v = verify_main_theorem(&g.map, &d).unwrap();
        println!("GRID4 main from {base:?}, |mu|={mu}: {:?}, {} cut corners", v.status, v.cut_corners.len());
        let v = verify_c4t4_corollary(&g.map, &d).unwrap();
        println!("  c4t4: {:?}, {} thick configurations", v.status, v.thick.len());
    }

    let h = fixtures::ladder(2, 7);
    let d = BoundaryDecomposition::from_lengths(&h.map, h.map.outer_dart(), 1, 5, 1).unwrap();
    let v = verify_c7_corollary(&h.map, &d).unwrap();
    println!("two heptagons c7: {:?}, witnesses {:?}", v.status, v.witnesses);

    // refused outside the theorem's class
    println!("GRID4 under c7: {}", verify_c7_corollary(&g.map, &d_any(&g)).unwrap_err());

    let rep = Reproduction::new(Theorem::Main, &g.map, &d_any(&g));
    let (map, dec) = rep.load().unwrap();
    println!("replayed: {:?}", verify_main_theorem(&map, &dec).unwrap().status);
}

fn d_any(f: &fixtures::Fixture) -> BoundaryDecomposition {
    BoundaryDecomposition::from_lengths(&f.map, f.map.outer_dart(), 1, 3, 1).unwrap()
}

use geostruct_core::catalog::f4::f4_data;
use geostruct_core::exactnum::{factor_low_degree, int, min_poly, signature};

#[test]
fn f4_dimensions_and_gradation() {
    let data = f4_data().expect("f4 builds");
    let g = &data.algebra;
    assert_eq!(g.dim(), 52);
    g.algebra.validate().expect("Jacobi");
    assert_eq!(g.subspace("spin9").unwrap().dim(), 36);
    assert_eq!(g.subspace("p").unwrap().dim(), 16);
    assert_eq!(g.subspace("h").unwrap().dim(), 22);
    assert_eq!(g.subspace("m").unwrap().dim(), 30);
    assert_eq!(g.subspace("l1").unwrap().dim(), 16);
    assert_eq!(g.subspace("l2").unwrap().dim(), 14);
    let sig = signature(&g.algebra.killing()).unwrap();
    assert_eq!((sig.pos, sig.neg, sig.null), (0, 52, 0));
    let ad = g.algebra.adjoint(&g.element("h1").unwrap()).unwrap();
    let mp = min_poly(&(&ad * &ad));
    let factors = factor_low_degree(&mp).unwrap();
    assert_eq!(factors.len(), 3);
    assert!(data.tau_squared > int(0));
}

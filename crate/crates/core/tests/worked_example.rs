use num_bigint::BigInt;
use nutforge::families::{build_main_lemma, compute_ell, slice_polynomial, JumpSet};
use nutforge::graphcore::{cartesian_product, named_graph, CirculantSpec, NamedGraph};
use nutforge::nutcert::{
    circulant_is_nut, is_nut, product_is_nut, Degree, ProductStrategy,
};
use nutforge::polyz::cyclotomic_factors;
use nutforge::CyclotomicFactorSet;

fn jumps() -> JumpSet {
    JumpSet::new([1, 2, 3, 6, 7, 10]).unwrap()
}

#[test]
fn ell_for_the_ten_vertex_example() {
    let r = compute_ell(&named_graph(NamedGraph::G10Example), &jumps()).unwrap();
    assert_eq!((r.alpha, r.beta, r.ell), (10, 18, 19));
    // Order 8 comes from lambda = ±sqrt(2).
    assert_eq!(r.factor_orders, CyclotomicFactorSet::from_orders([2, 3, 6, 8, 12, 18]));
    assert_eq!(r.r_degree, 200);
}

#[test]
fn zero_slice_orders() {
    let p0 = slice_polynomial(&jumps(), 0);
    assert_eq!(
        cyclotomic_factors(&p0).unwrap(),
        CyclotomicFactorSet::from_orders([2, 3, 6, 12, 18])
    );
}

#[test]
fn order_380_product_is_a_17_regular_nut_graph() {
    let g = named_graph(NamedGraph::G10Example);
    let built = build_main_lemma(&g, &jumps(), 19).unwrap();
    let cert = &built.certificate;
    assert!(cert.is_nut);
    assert_eq!((cert.order, cert.degree), (380, Degree::Regular(17)));
    let v = cert.kernel_vector.as_ref().unwrap();
    assert!(built.graph.annihilates(v));
    assert!(built.graph.adjacency().annihilates(v));
    assert!(v.iter().all(|x| *x != BigInt::from(0)));

    let poly = product_is_nut(&g, &built.circulant.graph(), ProductStrategy::Polynomial).unwrap();
    assert!(poly.is_nut);
    assert_eq!(poly.kernel_vector, cert.kernel_vector);
}

#[test]
fn larger_primes_also_give_nut_graphs() {
    let g = named_graph(NamedGraph::G10Example);
    for p in [23, 29] {
        let built = build_main_lemma(&g, &jumps(), p).unwrap();
        assert!(built.certificate.is_nut, "p = {p}");
        assert_eq!(built.certificate.order, 20 * p as usize);
        assert_eq!(built.certificate.degree, Degree::Regular(17));
    }
}

#[test]
fn order_divisible_by_bad_root_orders_breaks_the_product() {
    // 36 is divisible by 12 and 18, so primitive 12th and 18th roots of unity
    // annihilate the zero slice and contribute extra kernel dimensions.
    let g = named_graph(NamedGraph::G10Example);
    let circ = CirculantSpec::new(36, jumps().iter()).unwrap();
    let cert = is_nut(&cartesian_product(&g, &circ.graph()).unwrap()).unwrap();
    assert!(!cert.is_nut);
    assert!(cert.nullity > 1);
}

#[test]
fn circulant_factor_of_the_example() {
    let spec = CirculantSpec::new(38, [1, 2, 3, 6, 7, 10]).unwrap();
    let fast = circulant_is_nut(&spec);
    let direct = is_nut(&spec.graph()).unwrap();
    assert_eq!(fast.is_nut, direct.is_nut);
    assert_eq!(fast.nullity, direct.nullity);
    assert!(fast.is_nut);
}

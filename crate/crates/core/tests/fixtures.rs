use nutforge::exactla::charpoly;
use nutforge::graphcore::{graph6, named_graph, NamedGraph};
use nutforge::nutcert::{is_nut, Degree};
use nutforge::IntPoly;

fn p(c: &[i64]) -> IntPoly {
    IntPoly::from_i64(c)
}

fn expand(factors: &[&[i64]]) -> IntPoly {
    factors.iter().map(|f| p(f)).product()
}

#[test]
fn frucht_characteristic_polynomial() {
    // x (x - 3)(x - 2)(x + 1)(x + 2)(x^3 + x^2 - 2x - 1)(x^4 + x^3 - 6x^2 - 5x + 4)
    let expected = expand(&[
        &[0, 1],
        &[-3, 1],
        &[-2, 1],
        &[1, 1],
        &[2, 1],
        &[-1, -2, 1, 1],
        &[4, -5, -6, 1, 1],
    ]);
    assert_eq!(charpoly(&named_graph(NamedGraph::FruchtF3).adjacency()), expected);
}

#[test]
fn quintic_fixture_characteristic_polynomial() {
    // x (x - 5)(x + 1)(x^2 + x - 1)(x^5 + 3x^4 - 6x^3 - 21x^2 - x + 16)
    let expected = expand(&[
        &[0, 1],
        &[-5, 1],
        &[1, 1],
        &[-1, 1, 1],
        &[16, -1, -21, -6, 3, 1],
    ]);
    assert_eq!(charpoly(&named_graph(NamedGraph::F5).adjacency()), expected);
}

#[test]
fn ten_vertex_example_characteristic_polynomial() {
    // x (x - 5)(x + 2)^2 (x^2 - 2)^2 (x^2 + x - 4)
    let expected = expand(&[
        &[0, 1],
        &[-5, 1],
        &[2, 1],
        &[2, 1],
        &[-2, 0, 1],
        &[-2, 0, 1],
        &[-4, 1, 1],
    ]);
    assert_eq!(charpoly(&named_graph(NamedGraph::G10Example).adjacency()), expected);
}

#[test]
fn fixtures_are_regular_nut_graphs() {
    for (which, order, degree) in [
        (NamedGraph::FruchtF3, 12, 3),
        (NamedGraph::F5, 10, 5),
        (NamedGraph::G10Example, 10, 5),
    ] {
        let g = named_graph(which);
        let cert = is_nut(&g).unwrap();
        assert!(cert.is_nut, "{which}");
        assert_eq!(cert.order, order);
        assert_eq!(cert.degree, Degree::Regular(degree));
        let v = cert.kernel_vector.unwrap();
        assert!(g.annihilates(&v));
        assert!(!g.is_bipartite());
    }
}

#[test]
fn k2_is_not_nut() {
    let cert = is_nut(&named_graph(NamedGraph::K2)).unwrap();
    assert!(!cert.is_nut);
    assert_eq!(cert.nullity, 0);
}

#[test]
fn fixtures_round_trip_through_graph6() {
    for which in NamedGraph::ALL {
        let g = named_graph(which);
        assert_eq!(graph6::decode(&graph6::encode(&g).unwrap()).unwrap(), g);
    }
}

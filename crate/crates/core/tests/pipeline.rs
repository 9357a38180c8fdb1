use std::collections::BTreeMap;

use nullcert_core::certificate::{minimal_degree, verify, Certificate, MembershipInstance, MinimalDegree, SearchBudget};
use nullcert_core::groebner::{projective_closure, Budget, Ideal};
use nullcert_core::invariants::hilbert_data;
use nullcert_core::polyring::{MultiPoly, Ring};
use nullcert_core::resolution::{minimal_resolution, regularity};

fn polys(ring: &std::sync::Arc<Ring>, src: &[&str]) -> Vec<MultiPoly> {
    src.iter().map(|s| MultiPoly::parse(ring, s).unwrap()).collect()
}

#[test]
fn certificate_survives_text_round_trip() {
    let ring = Ring::new(&["z1", "z2"]);
    let inst = MembershipInstance::new(
        Ideal::zero(&ring),
        polys(&ring, &["z1^2", "z1*z2 - 1"]),
        MultiPoly::parse(&ring, "1").unwrap(),
        1,
    )
    .unwrap();
    let MinimalDegree::Found { rho, certificate } =
        minimal_degree(&inst, 10, &BTreeMap::new(), &SearchBudget::default()).unwrap()
    else {
        panic!("no certificate");
    };
    assert_eq!(rho, 4);
    let (ring2, parsed) = Certificate::from_text(&certificate.to_text(&ring)).unwrap();
    assert_eq!(ring2.vars(), ring.vars());
    let inst2 = MembershipInstance::new(
        Ideal::zero(&ring2),
        polys(&ring2, &["z1^2", "z1*z2 - 1"]),
        MultiPoly::parse(&ring2, "1").unwrap(),
        1,
    )
    .unwrap();
    assert!(verify(&inst2, &parsed, &Budget::default()).unwrap());
    assert_eq!(parsed.rho, rho);
}

#[test]
fn affine_cubic_closure_invariants() {
    let ring = Ring::new(&["x", "y", "z"]);
    let affine = Ideal::new(&ring, polys(&ring, &["y - x^2", "z - x^3"])).unwrap();
    let budget = Budget::default();
    let closure = projective_closure(&affine, &budget).unwrap();
    assert!(closure.is_homogeneous());
    let data = hilbert_data(&closure, &budget).unwrap();
    assert_eq!(data.proj_dimension().unwrap(), 1);
    assert_eq!(data.proj_degree().unwrap(), 3);
    assert_eq!(regularity(&minimal_resolution(&closure, &budget).unwrap()).unwrap(), 2);
}

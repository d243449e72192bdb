//! The mod-2 model ring of the equilateral 9-bar space in dimension 5.

use linkage::ring::build_ring;
use linkage::LengthVector;

fn main() {
    let l = LengthVector::from_ints(&[1; 9]).unwrap();
    let ring = build_ring(&l, 5).unwrap();

    println!(
        "n = {}, d = {}, generators = {}, truncation degree = {}",
        ring.n(),
        ring.d(),
        ring.generator_count(),
        ring.truncation()
    );
    println!("a-vector = {}", ring.a_vector());
    println!("graded dimensions = {:?}", ring.graded_dimensions());
    println!("face ring dimensions = {:?}", ring.face_ring_dimensions());

    // every product lands back on the normal-form basis
    let x1 = ring.x(1).unwrap();
    let x2 = ring.x(2).unwrap();
    let r = ring.r_class();

    let sq = ring.multiply(&x1, &x1).unwrap();
    println!("X{{1}}^2 = {sq}");
    assert_eq!(sq, ring.multiply(&r, &x1).unwrap());

    let prod = ring.multiply(&x1, &x2).unwrap();
    println!("X{{1}}*X{{2}} = {prod}");

    // the reflected generator is R + X_j, and it annihilates its partner
    let x1m = ring.x_minus(1).unwrap();
    println!("X{{1}}^- = {x1m}");
    assert!(ring.multiply(&x1m, &x1).unwrap().is_zero());

    // string form round-trips through the parser
    let e = ring.parse_element("R^2*X{3} + X{1,2}").unwrap();
    println!("parsed: {e} (degree {:?})", e.degree());

    // top graded piece in degree 4: powers of R keep it alive, long
    // supports do not
    let top = ring.multiply(&ring.multiply(&r, &r).unwrap(), &ring.multiply(&r, &x1).unwrap());
    println!("R^3*X{{1}} = {}", top.unwrap());
}

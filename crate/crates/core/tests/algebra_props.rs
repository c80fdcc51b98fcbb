use dickson_core::doubling::{pair, MiddleStarVariant};
use dickson_core::{
    dickson_double, make_etale, make_octonion, make_quaternion, make_quaternion_char2, AlgElement, Algebra, DoublingSpec,
    EtaleKind, FieldSpec, Matrix, NucleusPart, Placement, Side,
};
use proptest::prelude::*;

fn q() -> FieldSpec {
    FieldSpec::Rationals
}

fn hamilton() -> Algebra {
    make_quaternion(&q(), &q().from_i64(-1), &q().from_i64(-1)).unwrap()
}

fn octonions() -> Algebra {
    let m1 = q().from_i64(-1);
    make_octonion(&q(), &m1, &m1, &m1).unwrap()
}

fn double(base: &Algebra, c: &str, p: Placement) -> Algebra {
    dickson_double(&DoublingSpec::new(base, &base.parse_element(c).unwrap(), p).unwrap()).unwrap()
}

fn elem(alg: &Algebra, v: &[i64]) -> AlgElement {
    alg.element_i64(v).unwrap()
}

fn coeffs(n: usize) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-3i64..4, n)
}

fn placement() -> impl Strategy<Value = Placement> {
    prop::sample::select(Placement::UNSTARRED.to_vec())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn bilinearity_and_mult_matrix(p in placement(), x in coeffs(8), x2 in coeffs(8), y in coeffs(8)) {
        let a = double(&hamilton(), "i", p);
        let (x, x2, y) = (elem(&a, &x), elem(&a, &x2), elem(&a, &y));
        prop_assert_eq!(&(&x + &x2) * &y, &(&x * &y) + &(&x2 * &y));
        let l = a.mult_matrix(&x, Side::Left).unwrap();
        prop_assert_eq!(l.mul_vec(y.coeffs()).unwrap(), (&x * &y).coeffs().to_vec());
        let r = a.mult_matrix(&y, Side::Right).unwrap();
        prop_assert_eq!(r.mul_vec(x.coeffs()).unwrap(), (&x * &y).coeffs().to_vec());
    }

    #[test]
    fn involution_is_order_two_with_scalar_trace(x in coeffs(8), y in coeffs(8)) {
        let o = octonions();
        let (x, y) = (elem(&o, &x), elem(&o, &y));
        prop_assert_eq!(o.involution_apply(&o.involution_apply(&x).unwrap()).unwrap(), x.clone());
        prop_assert!(o.trace(&x).is_ok());
        // Composition algebra: N(xy) = N(x)N(y); flexible: (xy)x = x(yx).
        prop_assert_eq!(o.norm(&(&x * &y)).unwrap(), &o.norm(&x).unwrap() * &o.norm(&y).unwrap());
        prop_assert_eq!(&(&x * &y) * &x, &x * &(&y * &x));
    }

    #[test]
    fn first_half_is_the_base(p in placement(), u in coeffs(4), u2 in coeffs(4)) {
        let h = hamilton();
        let a = double(&h, "1 + i - 2*j", p);
        let (u, u2) = (elem(&h, &u), elem(&h, &u2));
        let z = h.zero();
        let lhs = &pair(&a, &u, &z).unwrap() * &pair(&a, &u2, &z).unwrap();
        prop_assert_eq!(lhs, pair(&a, &(&u * &u2), &z).unwrap());
    }

    #[test]
    fn nuclear_elements_kill_associators(x in coeffs(8), y in coeffs(8), s in -5i64..5) {
        let a = double(&hamilton(), "i", Placement::Middle);
        let n = a.nucleus(NucleusPart::Full);
        let nuc = a.element(n.basis_vectors()[0].clone()).unwrap().scale(&q().from_i64(s));
        let (x, y) = (elem(&a, &x), elem(&a, &y));
        prop_assert!(a.associator(&nuc, &x, &y).unwrap().is_zero());
        prop_assert!(a.associator(&x, &nuc, &y).unwrap().is_zero());
        prop_assert!(a.associator(&x, &y, &nuc).unwrap().is_zero());
    }
}

#[test]
fn nucleus_and_center_containments() {
    for p in Placement::UNSTARRED {
        let a = double(&hamilton(), "i", p);
        let full = a.nucleus(NucleusPart::Full);
        for part in [NucleusPart::Left, NucleusPart::Middle, NucleusPart::Right] {
            assert!(full.is_subspace_of(&a.nucleus(part)));
        }
        assert!(a.center().is_subspace_of(&a.commuter()));
    }
}

#[test]
fn algcore_examples() {
    let h = hamilton();
    let e = |l: &str| h.basis_by_label(l).unwrap();
    assert_eq!(&e("i") * &e("j"), e("k"));
    assert_eq!(&e("j") * &e("i"), -&e("k"));
    assert_eq!(&e("k") * &e("k"), -&h.unit());
    assert!(h.associator(&e("i"), &e("j"), &e("k")).unwrap().is_zero());
    assert_eq!(h.nucleus(NucleusPart::Full).dim(), 4);
    assert_eq!(h.norm(&elem(&h, &[1, 2, 3, 4])).unwrap(), q().from_i64(30));
    assert_eq!(h.norm(&h.unit()).unwrap(), q().one());
    assert_eq!(h.mult_matrix(&h.unit(), Side::Left).unwrap(), Matrix::identity(&q(), 4));
    assert!(h.mult_matrix(&h.zero(), Side::Right).unwrap().is_zero());

    let a = double(&h, "i", Placement::Left);
    let l = a.basis_by_label("l").unwrap();
    let ll = &l * &l;
    assert_eq!(ll.to_string(), "i");
    assert_eq!(a.associator(&l, &l, &l).unwrap(), a.parse_element("2*il").unwrap());
    assert!(!a.third_power_assoc_probe(&l).unwrap());
    assert!(a.third_power_assoc_probe(&a.unit()).unwrap());
    // Columns of L_l live in the second half for first-half inputs.
    let ml = a.mult_matrix(&l, Side::Left).unwrap();
    for k in 0..4 {
        assert!((0..4).all(|r| ml.get(r, k).is_zero()));
    }

    let op = a.opposite();
    assert!(op.opposite().same_table(&a));
    let lo = op.basis_by_label("l").unwrap();
    assert_eq!((&lo * &lo).to_string(), "i");
    let lo2 = &lo * &lo;
    assert_eq!(&lo2 * &lo, op.transport(&(&l * &ll)).unwrap());
    assert_eq!(&lo * &lo2, op.transport(&(&ll * &l)).unwrap());

    let k = make_etale(&q(), &EtaleKind::Sqrt(q().from_i64(-1))).unwrap();
    assert_eq!(k.commuter().dim(), 2);
    assert!(k.opposite().same_table(&k));
}

#[test]
fn quaternion_units_in_placements() {
    // u l = l sigma(u) for the unstarred placements.
    let h = hamilton();
    for p in Placement::UNSTARRED {
        let a = double(&h, "i", p);
        let l = a.basis_by_label("l").unwrap();
        for i in 0..4 {
            let u = h.basis(i);
            let ua = pair(&a, &u, &h.zero()).unwrap();
            let su = pair(&a, &h.involution_apply(&u).unwrap(), &h.zero()).unwrap();
            assert_eq!(&ua * &l, &l * &su, "{p}");
        }
    }
}

#[test]
fn placements_genuinely_differ() {
    let h = hamilton();
    let a = double(&h, "i", Placement::Left);
    let ar = double(&h, "i", Placement::Right);
    let prod = |alg: &Algebra| (&alg.basis_by_label("jl").unwrap() * &alg.basis_by_label("l").unwrap()).to_string();
    assert_eq!(prod(&a), "k");
    assert_eq!(prod(&ar), "-k");
}

#[test]
fn classical_scalar_makes_placements_coincide() {
    let o = octonions();
    let tables: Vec<Algebra> = Placement::UNSTARRED.iter().map(|&p| double(&hamilton(), "-1", p)).collect();
    for t in &tables {
        assert!(t.same_table(&tables[0]));
    }
    assert!(tables[0].same_table(&o));
    let o16: Vec<Algebra> = Placement::ALL.iter().map(|&p| double(&o, "-1", p)).collect();
    for t in &o16 {
        assert!(t.same_table(&o16[0]));
    }
    let ms = DoublingSpec::new(&o, &o.scalar(&q().from_i64(-1)), Placement::MiddleStar)
        .unwrap()
        .with_middle_star(MiddleStarVariant::ConjugateThenScalar);
    assert!(dickson_double(&ms).unwrap().same_table(&o16[0]));
}

#[test]
fn doubled_involution_is_an_anti_automorphism() {
    let o = octonions();
    let sigma = |x: &AlgElement| o.involution_apply(x).unwrap();
    for i in 0..8 {
        for j in 0..8 {
            let (x, y) = (o.basis(i), o.basis(j));
            assert_eq!(sigma(&(&x * &y)), &sigma(&y) * &sigma(&x));
        }
    }
}

#[test]
fn octonion_norm_form_coefficients() {
    let f = q();
    let (a, b, e) = (-2, -3, -5);
    let o = make_octonion(&f, &f.from_i64(a), &f.from_i64(b), &f.from_i64(e)).unwrap();
    let expected = [1, -a, -b, a * b, -e, a * e, b * e, -a * b * e];
    for (k, c) in expected.iter().enumerate() {
        assert_eq!(o.norm(&o.basis(k)).unwrap(), f.from_i64(*c), "basis {}", o.label(k));
    }
    let (i, j, l) = (o.basis(1), o.basis(2), o.basis(4));
    assert!(!o.associator(&i, &j, &l).unwrap().is_zero());
    let m1 = f.from_i64(-1);
    let o1 = make_octonion(&f, &m1, &m1, &m1).unwrap();
    assert_eq!(o1.norm(&o1.parse_element("1 + i").unwrap()).unwrap(), f.from_i64(2));
}

#[test]
fn nonassociative_quaternion_is_a_subalgebra() {
    // Span of {1, i, l, il} in Cay(H, i) equals Cay(Q(i), i).
    let h = hamilton();
    let a = double(&h, "i", Placement::Left);
    let k = make_etale(&q(), &EtaleKind::Sqrt(q().from_i64(-1))).unwrap();
    let small = double(&k, "i", Placement::Left);
    let idx: Vec<usize> = ["1", "i", "l", "il"].iter().map(|s| a.label_index(s).unwrap()).collect();
    for (p, &x) in idx.iter().enumerate() {
        for (r, &y) in idx.iter().enumerate() {
            let prod = &a.basis(x) * &a.basis(y);
            let sub: Vec<_> = idx.iter().map(|&t| prod.coeff(t).clone()).collect();
            let closed = (0..8).filter(|t| !idx.contains(t)).all(|t| prod.coeff(t).is_zero());
            assert!(closed);
            assert_eq!(sub, (&small.basis(p) * &small.basis(r)).coeffs().to_vec());
        }
    }
}

#[test]
fn char_two_quaternion_relations() {
    let f = FieldSpec::rational_functions(2, "t").unwrap();
    let t = f.variable().unwrap();
    let d = make_quaternion_char2(&f, &t, &t).unwrap();
    let i = d.basis_by_label("i").unwrap();
    let j = d.basis_by_label("j").unwrap();
    assert_eq!(&(&i * &i) + &i, d.scalar(&t));
    assert_eq!(&j * &j, d.scalar(&t));
    assert_eq!(&i * &j, &(&j * &i) + &j);
    assert_eq!(d.trace(&i).unwrap(), f.one());
    let k = make_etale(&f, &EtaleKind::ArtinSchreier(t.clone())).unwrap();
    let ki = k.basis(1);
    assert_eq!(k.involution_apply(&ki).unwrap(), &ki + &k.unit());
    assert_eq!(k.norm(&ki).unwrap(), t);
}

use dickson_core::doubling::{halves, pair};
use dickson_core::structure::{zero_divisor_probe, CoefficientPool, OperatorSet};
use dickson_core::{
    certify, derivations, dickson_double, make_octonion, make_quaternion, AlgElement, Algebra, DoublingSpec, FieldSpec,
    Matrix, Placement, Verdict,
};

fn q() -> FieldSpec {
    FieldSpec::Rationals
}

fn hamilton() -> Algebra {
    make_quaternion(&q(), &q().from_i64(-1), &q().from_i64(-1)).unwrap()
}

fn double(base: &Algebra, c: &str, p: Placement) -> Algebra {
    dickson_double(&DoublingSpec::new(base, &base.parse_element(c).unwrap(), p).unwrap()).unwrap()
}

/// Matrix of `(u, v) ↦ (0, s v)`.
fn d0(a: &Algebra, s: &AlgElement) -> Matrix {
    let base = s.algebra();
    let n = base.dim();
    let cols: Vec<Vec<_>> = (0..2 * n)
        .map(|k| {
            if k < n {
                vec![q().zero(); 2 * n]
            } else {
                pair(a, &base.zero(), &(s * &base.basis(k - n))).unwrap().coeffs().to_vec()
            }
        })
        .collect();
    Matrix::from_columns(&q(), 2 * n, &cols)
}

#[test]
fn d0_family_membership_matches_stated_conditions() {
    let h = hamilton();
    let c = h.basis_by_label("i").unwrap();
    let sigma = |x: &AlgElement| h.involution_apply(x).unwrap();
    for p in Placement::UNSTARRED {
        let a = double(&h, "i", p);
        let der = derivations(&a);
        for s in ["1", "i", "j", "k"] {
            let s = h.parse_element(s).unwrap();
            let expected = match p {
                Placement::Middle => (&(&c * &s) + &(&sigma(&s) * &c)).is_zero(),
                _ => (&s + &sigma(&s)).is_zero(),
            };
            assert_eq!(der.contains(&d0(&a, &s)), expected, "{p}, s = {s}");
        }
    }
}

#[test]
fn derivations_kill_c_for_left_and_right() {
    let h = hamilton();
    for p in [Placement::Left, Placement::Right] {
        let a = double(&h, "i", p);
        let c = pair(&a, &h.basis_by_label("i").unwrap(), &h.zero()).unwrap();
        for d in derivations(&a).basis() {
            assert!(d.mul_vec(c.coeffs()).unwrap().iter().all(|x| x.is_zero()), "{p}");
        }
    }
}

#[test]
fn middle_placement_image_of_c() {
    // D((c,0)) = (cs - sc, 0) with D(l) = (r, s).
    let h = hamilton();
    let a = double(&h, "i", Placement::Middle);
    let c = h.basis_by_label("i").unwrap();
    let l = a.basis_by_label("l").unwrap();
    let c_a = pair(&a, &c, &h.zero()).unwrap();
    for d in derivations(&a).basis() {
        let dl = a.element(d.mul_vec(l.coeffs()).unwrap()).unwrap();
        let (_, s) = halves(&dl).unwrap();
        let dc = a.element(d.mul_vec(c_a.coeffs()).unwrap()).unwrap();
        let expected = pair(&a, &(&(&c * &s) - &(&s * &c)), &h.zero()).unwrap();
        assert_eq!(dc, expected);
        assert_eq!(h.involution_apply(&s).unwrap(), -&s);
    }
}

#[test]
fn opposites_share_derivation_dimension() {
    for p in Placement::UNSTARRED {
        let a = double(&hamilton(), "i", p);
        let da = derivations(&a).lie_diagnostics().unwrap();
        let dop = derivations(&a.opposite()).lie_diagnostics().unwrap();
        assert_eq!(da, dop, "{p}");
    }
}

#[test]
fn unit_is_in_every_common_kernel_and_spins_to_itself() {
    let a = double(&hamilton(), "1 + j", Placement::Right);
    let der = derivations(&a);
    for set in [OperatorSet::All, OperatorSet::Derived] {
        assert!(der.common_kernel(set).contains(a.unit().coeffs()).unwrap());
        assert_eq!(der.module_spin(&a.unit(), set).dim(), 1);
    }
}

#[test]
fn certificates_agree_with_probes() {
    let h = hamilton();
    let m1 = q().from_i64(-1);
    let split = make_quaternion(&q(), &q().one(), &q().one()).unwrap();
    let o = make_octonion(&q(), &m1, &m1, &m1).unwrap();
    let cases =
        [double(&h, "i", Placement::Middle), double(&h, "2 + j - k", Placement::Right), double(&split, "i", Placement::Left), double(&o, "1 + i", Placement::Left)];
    for a in cases {
        let cert = certify(&a).unwrap();
        assert!(cert.reverify());
        let probe = zero_divisor_probe(&a, 150, 11, &CoefficientPool::default_for(a.field()));
        assert!(probe.reverify());
        if cert.verdict == Verdict::Division {
            assert_eq!(probe.verdict, Verdict::ProbabilisticNoWitness, "{}", a.describe());
        }
        if probe.verdict == Verdict::NotDivision {
            assert_eq!(cert.verdict, Verdict::NotDivision, "{}", a.describe());
        }
    }
}

#[test]
fn gf_p_bases_yield_witnesses() {
    let f = FieldSpec::prime(5).unwrap();
    let h = make_quaternion(&f, &f.from_i64(-1), &f.from_i64(-1)).unwrap();
    let a = double(&h, "i", Placement::Middle);
    let c = certify(&a).unwrap();
    assert_eq!(c.verdict, Verdict::NotDivision);
    assert!(c.reverify());
}

//! Derivation algebras and division certificates.

mod derivations;
mod division;

pub use derivations::{derivation_system, derivations, is_derivation, lie_bracket, DerivationAlgebra, LieDiagnostics, OperatorSet};
pub use division::{
    certify, division_certificate, zero_divisor_probe, CoefficientPool, DivisionCertificate, Reason, Verdict, WitnessOrigin,
};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::doubling::{dickson_double, make_etale, make_quaternion, DoublingSpec, Placement};
    use crate::field::FieldSpec;
    use crate::linalg::rank_mod_prime;
    use crate::{Algebra, EtaleKind};

    fn hamilton() -> Algebra {
        let f = FieldSpec::Rationals;
        make_quaternion(&f, &f.from_i64(-1), &f.from_i64(-1)).unwrap()
    }

    fn cay_h_i(p: Placement) -> Algebra {
        let h = hamilton();
        let i = h.basis_by_label("i").unwrap();
        dickson_double(&DoublingSpec::new(&h, &i, p).unwrap()).unwrap()
    }

    #[test]
    fn quaternion_derivations_are_so3() {
        let der = derivations(&hamilton());
        assert_eq!(der.dim(), 3);
        let lie = der.lie_diagnostics().unwrap();
        assert_eq!((lie.derived_dim, lie.center_dim), (3, 0));
    }

    #[test]
    fn doubled_gaussian_field_has_one_derivation() {
        let f = FieldSpec::Rationals;
        let k = make_etale(&f, &EtaleKind::Sqrt(f.from_i64(-1))).unwrap();
        let i = k.basis(1);
        let a = dickson_double(&DoublingSpec::new(&k, &i, Placement::Left).unwrap()).unwrap();
        assert_eq!(derivations(&a).dim(), 1);
    }

    // Frozen from an independent symbolic solve of the Leibniz system.
    #[test]
    fn cay_h_i_derivation_invariants() {
        let expected = [(Placement::Left, 4, 1, 2), (Placement::Middle, 1, 3, 1), (Placement::Right, 4, 1, 2)];
        for (p, ker, spin_j, ker_all) in expected {
            let a = cay_h_i(p);
            let der = derivations(&a);
            assert!(der.is_closed());
            let lie = der.lie_diagnostics().unwrap();
            assert_eq!((lie.dim, lie.derived_dim, lie.center_dim), (4, 3, 1), "{p}");
            assert_eq!(der.common_kernel(OperatorSet::Derived).dim(), ker, "{p}");
            assert_eq!(der.common_kernel(OperatorSet::All).dim(), ker_all, "{p}");
            let j = a.basis_by_label("j").unwrap();
            assert_eq!(der.module_spin(&j, OperatorSet::Derived).dim(), spin_j, "{p}");
            let jl = a.basis_by_label("jl").unwrap();
            assert_eq!(der.module_spin(&jl, OperatorSet::Derived).dim(), 4, "{p}");
        }
    }

    #[test]
    fn leibniz_rank_agrees_mod_primes() {
        for p in Placement::UNSTARRED {
            let a = cay_h_i(p);
            let sys = derivation_system(&a);
            let rank = sys.rank();
            assert_eq!(rank, 64 - derivations(&a).dim());
            for prime in [10007, 65521] {
                assert_eq!(rank_mod_prime(&sys, prime), Some(rank), "{p} mod {prime}");
            }
        }
    }

    #[test]
    fn bracket_of_derivations_is_a_derivation() {
        let a = cay_h_i(Placement::Middle);
        let der = derivations(&a);
        for x in der.basis() {
            assert!(is_derivation(&a, x));
            for y in der.basis() {
                assert!(der.contains(&lie_bracket(x, y)));
            }
        }
    }

    #[test]
    fn hamilton_doubled_by_i_is_certified_division() {
        for p in Placement::UNSTARRED {
            let h = hamilton();
            let spec = DoublingSpec::new(&h, &h.basis_by_label("i").unwrap(), p).unwrap();
            let c = division_certificate(&spec).unwrap();
            assert_eq!(c.verdict, Verdict::Division);
            assert!(matches!(c.reason, Reason::HilbertSymbol { symbol: -1, .. }));
        }
    }

    #[test]
    fn split_base_yields_reverified_witness() {
        let f = FieldSpec::Rationals;
        let m = make_quaternion(&f, &f.one(), &f.one()).unwrap();
        let spec = DoublingSpec::new(&m, &m.basis_by_label("i").unwrap(), Placement::Middle).unwrap();
        let c = division_certificate(&spec).unwrap();
        assert_eq!(c.verdict, Verdict::NotDivision);
        assert!(c.reverify());
        let a = dickson_double(&spec).unwrap();
        let op = certify(&a.opposite()).unwrap();
        assert!(op.reverify());
    }

    #[test]
    fn probe_finds_zero_divisors_in_split_algebra_and_is_deterministic() {
        let f = FieldSpec::prime(3).unwrap();
        let m = make_quaternion(&f, &f.one(), &f.one()).unwrap();
        let pool = CoefficientPool::default_for(&f);
        let a = dickson_double(&DoublingSpec::new(&m, &m.basis_by_label("i").unwrap(), Placement::Middle).unwrap()).unwrap();
        let c1 = zero_divisor_probe(&a, 200, 7, &pool);
        let c2 = zero_divisor_probe(&a, 200, 7, &pool);
        assert_eq!(c1.verdict, Verdict::NotDivision);
        assert!(c1.reverify());
        assert_eq!(c1.witness().map(|(x, y)| (x.clone(), y.clone())), c2.witness().map(|(x, y)| (x.clone(), y.clone())));
    }

    #[test]
    fn probe_reports_no_witness_on_division_algebra() {
        let a = cay_h_i(Placement::Left);
        let pool = CoefficientPool::default_for(a.field());
        let c = zero_divisor_probe(&a, 300, 1, &pool);
        assert_eq!(c.verdict, Verdict::ProbabilisticNoWitness);
        let Reason::Probe { norm_violations, norm_checks, .. } = c.reason else { panic!("probe reason") };
        assert!(norm_checks > 0);
        assert_eq!(norm_violations, 0);
    }
}

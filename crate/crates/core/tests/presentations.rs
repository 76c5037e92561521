use std::collections::BTreeSet;

use cherednik::presentations::*;
use cherednik::qmat::{build, embed, embed_amended, AlgebraId, Reading};
use cherednik::Error;

#[test]
fn catalogue_matches_golden() {
    let golden = include_str!("golden/presentations.txt");
    assert_eq!(render_catalogue(), golden);
}

#[test]
fn relation_ids_are_unique() {
    let mut seen = BTreeSet::new();
    for p in catalogue() {
        for r in &p.relations {
            assert!(seen.insert(r.id), "duplicate id {}", r.id);
            p.expression(r).unwrap();
        }
    }
}

#[test]
fn json_rows_cover_catalogue() {
    let v: serde_json::Value = serde_json::from_str(&catalogue_json()).unwrap();
    let n: usize = catalogue().iter().map(|p| p.relations.len()).sum();
    assert_eq!(v.as_array().unwrap().len(), n);
    assert_eq!(v[0]["algebra"], "H");
    assert_eq!(v[0]["relation"], "daha1");
}

#[test]
fn embedded_relations_hold() {
    for a in AlgebraId::ALL {
        let rep = check_presentation(&presentation(a.name()).unwrap(), &embed_amended(a));
        assert!(rep.all_zero(), "{}: {:?}", a, rep.failures());
    }
}

#[test]
fn printed_product_relation_of_h_fails() {
    let rep = check_presentation(&presentation("H").unwrap(), &embed(AlgebraId::H));
    assert!(!rep.check("daha5").unwrap().zero);
}

#[test]
fn flipped_phase_breaks_daha5() {
    let rep = check_presentation(&presentation("H").unwrap(), &build(AlgebraId::H, Reading::Amended, -1));
    assert!(!rep.check("daha5").unwrap().zero);
}

#[test]
fn alternative_presentations_hold() {
    let cases = [
        ("SO", AlgebraId::H),
        ("SO1-V", AlgebraId::V),
        ("SO1-IV", AlgebraId::IV),
        ("SO1-III", AlgebraId::III),
        ("LD-H", AlgebraId::H),
        ("LDPV-V", AlgebraId::V),
        ("LDPV-IV", AlgebraId::IV),
        ("LDPV-III", AlgebraId::III),
        ("gamma-V", AlgebraId::V),
    ];
    for (m, a) in cases {
        let rep = check_via_map(&generator_map(m).unwrap(), &embed_amended(a)).unwrap();
        assert!(rep.all_zero(), "{}: {:?}", m, rep.failures());
    }
}

#[test]
fn printed_ld0_piii_fails() {
    let a = apply_generator_map(&generator_map("LDPV-III").unwrap(), &embed_amended(AlgebraId::III)).unwrap();
    let rep = check_presentation(&presentation("LD-PIII").unwrap(), &a);
    let bad: Vec<_> = rep.failures().iter().map(|c| c.id.clone()).collect();
    assert_eq!(bad, vec!["LD0-PIII", "LD0-PIII'"]);
}

#[test]
fn round_trips_reproduce_matrices() {
    for (f, b, a) in [
        ("SO1-V", "SO3-V", AlgebraId::V),
        ("SO1-IV", "SO3-IV", AlgebraId::IV),
        ("SO1-III", "SO3-III", AlgebraId::III),
        ("LDPV-V", "LDPVinv-V", AlgebraId::V),
        ("LDPV-IV", "LDPVinv-IV", AlgebraId::IV),
        ("LDPV-III", "LDPVinv-III", AlgebraId::III),
    ] {
        let orig = embed_amended(a);
        let there = apply_generator_map(&generator_map(f).unwrap(), &orig).unwrap();
        let back = apply_generator_map(&generator_map(b).unwrap(), &there).unwrap();
        for (g, ok) in same_generators(&orig, &back) {
            assert!(ok, "{} then {}: {} differs", f, b, g);
        }
    }
}

#[test]
fn beta_and_its_square() {
    let h = embed_amended(AlgebraId::H);
    assert!(check_automorphism_beta(&h).unwrap().all_zero());
    assert!(check_beta_squared(&h).unwrap().all_zero());
}

#[test]
fn beta_needs_an_inverse() {
    let e = check_automorphism_beta(&embed_amended(AlgebraId::V)).unwrap_err();
    assert!(matches!(e, Error::NoInverseAvailable(ref g) if g == "Vc0"));
}

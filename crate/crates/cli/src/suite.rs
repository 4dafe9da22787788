//! The full regression suite over the catalog.

use hopfsmash::catalog::{self, CatalogEntry, GroupTable};
use hopfsmash::exact_math::{parse_scalar, FieldSpec};
use hopfsmash::formats::{hopf_from_file, hopf_to_file};
use hopfsmash::indicators::{
    module_indicator, regular_twisted_indicator, theorem41_check, theorem54_check, twisted_module_indicator,
};
use hopfsmash::powers_exponents::{
    counit_check, exponent, inverse_exponent_check, lemma33_check, lemma36_check, prop32_check, theorem34_check,
    twisted_exponent, twisted_power, ExponentOutcome, HopfAutomorphism,
};
use hopfsmash::representations::{extend_to_smash, regular, theorem71_check, Representation};
use hopfsmash::smash::{group_algebra, lemma21_check, smash_coproduct, smash_product, HopfAction, SmashCoproduct};
use hopfsmash::{FiniteHopfAlgebra, Scalar};

use crate::report::RunReport;

fn nu(h: &FiniteHopfAlgebra, m: u64, tau: &HopfAutomorphism) -> Scalar {
    regular_twisted_indicator(h, m, tau).expect("catalog indicator").value
}

/// Determinant on span{x, y} of the named nichols8 involutions.
fn det(name: &str) -> i64 {
    match name {
        "id" | "neg" => 1,
        _ => -1,
    }
}

/// Doubles the first coproduct coefficient of a basis element of degree one.
fn perturb(k: &SmashCoproduct) -> SmashCoproduct {
    let mut file = hopf_to_file(k.algebra());
    let f = k.algebra().field().clone();
    let target = k.index(1, 0);
    let entry = file.comult.iter_mut().find(|e| e.i == target).expect("nonzero coproduct");
    let c = parse_scalar(&entry.c, &f).expect("canonical literal");
    entry.c = (&c + &c).to_string();
    k.with_algebra_unchecked(hopf_from_file(&file).expect("same shape"))
}

fn nichols8_values(report: &mut RunReport) {
    let e = catalog::nichols8();
    let f = e.algebra.field().clone();
    let mut ok = true;
    for name in ["id", "neg", "diag1m1", "swap"] {
        let tau = e.automorphism(name).unwrap();
        for m in [2i64, 4, 6] {
            let value = nu(&e.algebra, m as u64, tau);
            ok &= value == f.frac(m * m, 2) * f.int(1 + det(name));
            report.result(format!("nichols8 ν[{m},{name}]"), &value);
        }
    }
    report.check("nichols8 indicators for involutions", ok, "m² when Det = 1, 0 when Det = −1");

    let ez = catalog::lookup("nichols8-z3").unwrap();
    let rows = [
        ("id", nu(&e.algebra, 3, e.automorphism("id").unwrap()), 9),
        ("order3", nu(&e.algebra, 3, e.automorphism("order3").unwrap()), 0),
        ("diag(z,z^2)", nu(&ez.algebra, 3, ez.automorphism("diagz3").unwrap()), 0),
    ];
    let mut ok = true;
    for (name, value, expected) in &rows {
        ok &= *value == value.field().int(*expected);
        report.result(format!("nichols8 ν[3,{name}]"), value);
    }
    report.check("nichols8 indicators for order-three automorphisms", ok, "9 for id, 0 otherwise");

    let h = &e.algebra;
    let xy = h.basis_element(6);
    let mut ok = true;
    for name in ["id", "neg", "diag1m1"] {
        let tau = e.automorphism(name).unwrap();
        for m in [2i64, 4] {
            let value = twisted_power(h, &xy, m as u64, tau).unwrap()[6].clone();
            ok &= value == f.frac(m * m, 4) * f.int(1 + det(name));
            report.result(format!("nichols8 λ((xy)^[{m},{name}])"), &value);
        }
    }
    report.check("nichols8 top coefficient of twisted powers of xy", ok, "(m²/4)(1 + Det τ)");
}

fn h8_values(report: &mut RunReport) {
    let e = catalog::h8();
    let tau = e.automorphism("tau4").unwrap();
    let n = e.representation("N").unwrap();
    let twisted = twisted_module_indicator(&e.algebra, n, 2, tau).unwrap().value;
    let k = smash_coproduct(&catalog::h8_tau4_action()).unwrap();
    let m = extend_to_smash(&k, n, 1).unwrap();
    let untwisted = module_indicator(k.algebra(), &m, 2).unwrap().value;
    report.result("h8 ν[2,tau4](N)", &twisted);
    report.result("h8⋊⟨τ4⟩ ν[2](M)", &untwisted);
    let f = twisted.field().clone();
    report.check(
        "h8 twisted indicator of N and its smash extension",
        twisted == f.int(-1) && untwisted == f.int(-1),
        "both −1",
    );
}

fn regular_indicator_identity(report: &mut RunReport) {
    for (label, action, m, expected) in [
        ("nichols8⋊⟨−id⟩", catalog::nichols8_neg_action(), 2, Some(8)),
        ("nichols8⋊⟨−id⟩", catalog::nichols8_neg_action(), 4, Some(32)),
        ("h8⋊⟨τ4⟩", catalog::h8_tau4_action(), 2, None),
    ] {
        let r = theorem54_check(&action, m).unwrap();
        let value_ok = expected.is_none_or(|v| r.lhs == r.lhs.field().int(v));
        report.result(format!("{label} ν[{m}](K)"), &r.lhs);
        report.check(
            format!("regular indicator of {label}, m = {m}"),
            r.equal() && value_ok,
            format!("{} = {}", r.lhs, r.rhs),
        );
    }
}

fn smash_exponent(report: &mut RunReport) {
    let k = smash_coproduct(&catalog::kc3_inversion_action()).unwrap();
    let r = theorem34_check(&k, 64);
    let a = k.base();
    let plain = exponent(a, 64).outcome;
    let inv = twisted_exponent(a, k.action().aut(1), 64).outcome;
    report.result("exp(kC3⋊C2)", r.smash_exponent);
    let ok = r.smash_exponent == ExponentOutcome::Found(6)
        && r.equal
        && r.group_exponent == 2
        && plain == ExponentOutcome::Found(3)
        && inv == ExponentOutcome::Found(2);
    report.check(
        "exponent of kC3⋊C2 as an lcm",
        ok,
        format!(
            "lcm(2, {plain}, {inv}) = {}",
            r.lcm.map_or("undetermined".to_string(), |v| v.to_string())
        ),
    );
}

fn all_entries() -> Vec<CatalogEntry> {
    catalog::NAMES.iter().map(|n| catalog::lookup(n).unwrap()).collect()
}

fn catalog_actions() -> Vec<(&'static str, HopfAction)> {
    vec![
        ("h8⋊⟨τ4⟩", catalog::h8_tau4_action()),
        ("nichols8⋊⟨−id⟩", catalog::nichols8_neg_action()),
        ("kC3⋊⟨inv⟩", catalog::kc3_inversion_action()),
    ]
}

fn single_degree_modules(k: &SmashCoproduct, entry: &CatalogEntry) -> Vec<Representation> {
    let mut out = Vec::new();
    for (name, rep) in entry.representations.iter().filter(|(n, _)| n != "regular") {
        for x in 0..k.group().order() {
            out.push(extend_to_smash(k, rep, x).unwrap_or_else(|e| panic!("{name}: {e}")));
        }
    }
    out
}

fn identity_suites(report: &mut RunReport, perturbed: bool) {
    let h8 = catalog::h8();
    let nichols = catalog::nichols8();
    let smashes: Vec<(&str, SmashCoproduct, &CatalogEntry)> = vec![
        ("h8⋊⟨τ4⟩", smash_coproduct(&catalog::h8_tau4_action()).unwrap(), &h8),
        ("nichols8⋊⟨−id⟩", smash_coproduct(&catalog::nichols8_neg_action()).unwrap(), &nichols),
    ];

    let mut ok = true;
    for (_, k, _) in &smashes {
        let k = if perturbed { perturb(k) } else { k.clone() };
        ok &= (1..=6).all(|n| lemma33_check(&k, n));
    }
    let detail = if perturbed { "perturbed structure constant" } else { "n ≤ 6, all basis elements" };
    report.check("smash coproduct power formula", ok, detail);

    let mut ok = true;
    let mut count = 0;
    for e in all_entries() {
        for (_, tau) in &e.automorphisms {
            for n in (1..=6).filter(|n| n % tau.order() == 0) {
                count += 1;
                ok &= lemma36_check(&e.algebra, tau, n).unwrap() && counit_check(&e.algebra, tau, n).unwrap();
            }
        }
    }
    report.check("antipode and counit of twisted powers", ok, format!("{count} cases"));

    let ks3dual = catalog::ks3_dual();
    let mut ok = true;
    for (e, tau) in [(&h8, "id"), (&h8, "tau4"), (&ks3dual, "id"), (&ks3dual, "conj:(012)")] {
        ok &= prop32_check(&e.algebra, e.automorphism(tau).unwrap(), 12, 96) == Some(true);
    }
    report.check("vanishing of twisted powers at multiples of the exponent", ok, "h8, k^S3");

    let (a, b) = inverse_exponent_check(&h8.algebra, h8.automorphism("tau4").unwrap(), 128);
    report.check(
        "twisted exponent under inversion of τ",
        a == b && a.found().is_some(),
        format!("h8: {a} vs {b}"),
    );

    let ok = catalog_actions().iter().all(|(_, action)| lemma21_check(action).unwrap().equal());
    report.check("dual of smash coproduct equals smash product", ok, "all catalog actions");

    let (_, k, _) = &smashes[0];
    let n = h8.representation("N").unwrap();
    let example = theorem41_check(k, &extend_to_smash(k, n, 1).unwrap(), 2).unwrap();
    let reg = theorem41_check(k, &regular(k.algebra()), 2).unwrap();
    report.check(
        "module indicator as sum of twisted indicators",
        example.equal() && reg.equal(),
        format!("{} = {}; {} = {}", example.lhs, example.rhs, reg.lhs, reg.rhs),
    );

    let mut ok = true;
    let mut pairs = 0;
    for (_, k, entry) in &smashes {
        let modules = single_degree_modules(k, entry);
        for m in &modules {
            for n in &modules {
                let r = theorem71_check(k, m, n).unwrap();
                pairs += r.pairs.len();
                ok &= r.all_passed();
            }
        }
    }
    report.check("grading of tensor and dual modules", ok, format!("{pairs} pairs"));

    let mut algebras: Vec<FiniteHopfAlgebra> = all_entries().into_iter().map(|e| e.algebra).collect();
    for (_, action) in catalog_actions() {
        let k = smash_coproduct(&action).unwrap();
        algebras.push(k.algebra().dual());
        algebras.push(k.algebra().clone());
        algebras.push(smash_product(&action).unwrap());
    }
    let failed: Vec<&str> = algebras
        .iter()
        .filter(|h| !h.verify_hopf_axioms().all_passed())
        .map(|h| h.name())
        .collect();
    report.check(
        "Hopf axioms on catalog and constructed algebras",
        failed.is_empty(),
        format!("{} algebras", algebras.len()),
    );
}

fn group_square_roots(report: &mut RunReport) {
    let f = FieldSpec::rationals();
    let mut ok = true;
    for (name, g, expected) in [
        ("C2", GroupTable::cyclic(2), 2),
        ("C3", GroupTable::cyclic(3), 1),
        ("S3", GroupTable::symmetric_group_3(), 4),
    ] {
        let count = (0..g.order()).filter(|&x| g.mul(x, x) == g.identity()).count() as i64;
        let h = group_algebra(&g, &f);
        let value = nu(&h, 2, &HopfAutomorphism::identity(&h));
        ok &= value == f.int(count) && count == expected;
        report.result(format!("k{name} ν[2]"), &value);
    }
    report.check("regular indicator of kG counts involutions", ok, "C2, C3, S3");
}

pub fn run(report: &mut RunReport, perturbed: bool) {
    nichols8_values(report);
    h8_values(report);
    regular_indicator_identity(report);
    smash_exponent(report);
    identity_suites(report, perturbed);
    group_square_roots(report);
}

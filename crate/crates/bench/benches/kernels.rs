use criterion::{black_box, criterion_group, criterion_main, Criterion};

use cherednik::parse::{parse_scalar_with, ParseContext};
use cherednik::presentations::{check_presentation, presentation};
use cherednik::qdiff::{catalogue, OpReading, RepId, XLaurent};
use cherednik::qmat::{embed_amended, AlgebraId};
use cherednik::qpoly::{family, verify_eigen, FamilyId};
use cherednik::rewrite::{expand, skein, system, Variant, DEFAULT_BUDGET};

fn field(c: &mut Criterion) {
    let ctx = ParseContext::new(&[]);
    let a = parse_scalar_with("(1-a*b)*(1-a*c)*(1-a*d)/(a*(1-a*b*c*d))", &ctx).unwrap();
    let b = parse_scalar_with("(q-1)^2*(1+a)/q+b*c/(q+1)", &ctx).unwrap();
    c.bench_function("rf/mul_add", |x| x.iter(|| &(&a * &b) + &a));
    c.bench_function("rf/parse", |x| x.iter(|| parse_scalar_with(black_box("(q-q^-1)^2*(a+b)/(1-a*b*q)"), &ctx)));
}

fn torus(c: &mut Criterion) {
    let p = presentation("H").unwrap();
    let h = embed_amended(AlgebraId::H);
    c.bench_function("qmat/daha_relations_H", |x| x.iter(|| check_presentation(&p, &h)));
}

fn rewriting(c: &mut Criterion) {
    let sys = system(Variant::D7).unwrap();
    let e = expand(Variant::D7, &skein(Variant::D7)[0]).unwrap();
    c.bench_function("rewrite/skein_D7", |x| x.iter(|| sys.normalize(&e, DEFAULT_BUDGET)));
}

fn operators(c: &mut Criterion) {
    let k0 = catalogue(RepId::AW).k0;
    let f = XLaurent::sym(4);
    c.bench_function("qdiff/aw_k0_on_sym4", |x| x.iter(|| k0.apply(&f)));
    let aw = family(FamilyId::AW);
    c.bench_function("qpoly/aw_p4", |x| x.iter(|| aw.polynomial(4)));
    c.bench_function("qpoly/verify_aw_3", |x| x.iter(|| verify_eigen(&aw, 3, OpReading::Amended)));
}

criterion_group! {
    name = kernels;
    config = Criterion::default().sample_size(10);
    targets = field, torus, rewriting, operators
}
criterion_main!(kernels);

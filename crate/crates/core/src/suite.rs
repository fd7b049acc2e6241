//! Built-in verification suite. Each entry builds a family of concrete
//! algebras or free-algebra products and checks one classification result
//! exactly. Entry ids are stable and reports are deterministic.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::thread;

use serde::Serialize;

use crate::algebra::{
    annihilator, centralizer, centroid, find_units, is_idempotent_algebra, Algebra, Endomorphism, Product, Side,
    Verdict,
};
use crate::compat::{all_members_associative, check, solve_linear, total_compatibility_audit, CompatKind};
use crate::constructions::{
    band_id_matching, band_swap_matching, centroid_product, direct_sum, example_3dim, example_6dim, example_band22,
    ground_field, matrix_algebra, mutation, path_algebra, rectangular_band_algebra, zero_algebra, BandSpec, QuiverSpec,
};
use crate::error::Error;
use crate::free::{
    check_cpoly_identities, check_word_identities, cpoly_multi_var_product, cpoly_single_var_product, extend_star,
    star_condition, star_space, truncated_centroid_dim, verify_id_matching_truncated, CPoly, CStar, FreeKind, NCPoly,
    StarMap,
};
use crate::linalg::{unit_vector, Matrix, Subspace};
use crate::scalar::{Field, Scalar};

use CompatKind::{IdMatching, Interchangeable, SwapMatching, TotallyCompatible};

const Q: Field = Field::Rationals;

enum Failure {
    Check(String),
    Error(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Error(e)
    }
}

type Outcome = std::result::Result<String, Failure>;

macro_rules! ensure {
    ($cond:expr, $($arg:tt)+) => {
        if !$cond {
            return Err(Failure::Check(format!($($arg)+)));
        }
    };
}

/// One suite entry.
pub struct Entry {
    pub id: &'static str,
    pub title: &'static str,
    run: fn() -> Outcome,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EntryReport {
    pub id: &'static str,
    pub title: &'static str,
    pub pass: bool,
    pub detail: String,
}

impl Entry {
    pub fn run(&self) -> EntryReport {
        let (pass, detail) = match (self.run)() {
            Ok(d) => (true, d),
            Err(Failure::Check(m)) => (false, m),
            Err(Failure::Error(e)) => (false, format!("error: {e}")),
        };
        EntryReport {
            id: self.id,
            title: self.title,
            pass,
            detail,
        }
    }
}

pub fn entries() -> &'static [Entry] {
    ENTRIES
}

pub fn find(id: &str) -> Option<&'static Entry> {
    ENTRIES.iter().find(|e| e.id == id)
}

/// Runs entries on up to `workers` threads; reports come back in input order.
pub fn run_entries(list: &[&'static Entry], workers: usize) -> Vec<EntryReport> {
    let workers = workers.clamp(1, list.len().max(1));
    if workers == 1 {
        return list.iter().map(|e| e.run()).collect();
    }
    let next = AtomicUsize::new(0);
    let slots: Mutex<Vec<Option<EntryReport>>> = Mutex::new(vec![None; list.len()]);
    thread::scope(|s| {
        for _ in 0..workers {
            s.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                let Some(entry) = list.get(i) else { break };
                let report = entry.run();
                slots.lock().expect("no worker panics while holding the lock")[i] = Some(report);
            });
        }
    });
    slots
        .into_inner()
        .expect("workers joined")
        .into_iter()
        .map(|r| r.expect("every entry ran"))
        .collect()
}

const ENTRIES: &[Entry] = &[
    Entry {
        id: "example-3dim",
        title: "3-dim nilpotent example: one swap-matching-only and one id-matching-only product",
        run: example_3dim_entry,
    },
    Entry {
        id: "example-6dim",
        title: "6-dim nilpotent example: interchangeable but neither matching",
        run: example_6dim_entry,
    },
    Entry {
        id: "remark-1.3",
        title: "equivalent characterisations of total compatibility agree",
        run: audit_entry,
    },
    Entry {
        id: "band-product",
        title: "rectangular band multiplication e_ij e_kl = e_il",
        run: band_product_entry,
    },
    Entry {
        id: "lemma-2.1",
        title: "mutations are associative and id-matching",
        run: mutations_entry,
    },
    Entry {
        id: "prop-2.2",
        title: "unital: id-matching products are exactly the mutations",
        run: unital_id_matching_entry,
    },
    Entry {
        id: "lemma-2.3",
        title: "centroid-determined products are totally compatible",
        run: centroid_products_entry,
    },
    Entry {
        id: "prop-2.5",
        title: "unital: swap-matching = interchangeable = totally compatible = centroid products",
        run: unital_swap_entry,
    },
    Entry {
        id: "cor-2.6",
        title: "mutation by a non-central element is not totally compatible",
        run: non_central_mutation_entry,
    },
    Entry {
        id: "remark-zero-product",
        title: "every associative product is totally compatible with the zero product",
        run: zero_product_entry,
    },
    Entry {
        id: "prop-3.1",
        title: "A^2 = A: interchangeable = totally compatible",
        run: idempotent_algebra_entry,
    },
    Entry {
        id: "prop-3.2",
        title: "one-sided unit: swap-matching = totally compatible",
        run: one_sided_unit_entry,
    },
    Entry {
        id: "prop-3.3",
        title: "band id-matching products e_ij * e_kl = lambda_jk e_il",
        run: band_id_entry,
    },
    Entry {
        id: "band-annihilator",
        title: "annihilator of a rectangular band",
        run: band_annihilator_entry,
    },
    Entry {
        id: "lemma-3.6",
        title: "band centralizer of e_ij is span{e_ij} + Ann",
        run: band_centralizer_entry,
    },
    Entry {
        id: "prop-3.8",
        title: "band swap-matching products lambda e_il + r_il with r_il in Ann",
        run: band_swap_entry,
    },
    Entry {
        id: "cor-3.9",
        title: "band totally compatible products are lambda times the band product",
        run: band_total_entry,
    },
    Entry {
        id: "band-centroid",
        title: "rectangular band centroid is the scalars",
        run: band_centroid_entry,
    },
    Entry {
        id: "example-band22",
        title: "2x2 band example: associative, swap-matching, not totally compatible",
        run: band22_entry,
    },
    Entry {
        id: "band-left-right-zero",
        title: "left/right zero bands: swap-matching = interchangeable = totally compatible = centroid products",
        run: left_right_zero_entry,
    },
    Entry {
        id: "enough-idempotents",
        title: "enough idempotents: id-matching = mutations, swap-matching = centroid products",
        run: enough_idempotents_entry,
    },
    Entry {
        id: "prop-4.1",
        title: "no zero divisors: swap-matching forces total compatibility",
        run: domain_entry,
    },
    Entry {
        id: "prop-4.2",
        title: "free algebra: star maps satisfying the star condition extend to id-matching products",
        run: star_maps_entry,
    },
    Entry {
        id: "lemma-4.4",
        title: "free algebra: totally compatible x*y is a multiple of xy",
        run: rigidity_entry,
    },
    Entry {
        id: "free-centroid",
        title: "centroids of the free algebras (truncated)",
        run: free_centroid_entry,
    },
    Entry {
        id: "cpoly-single-var",
        title: "K[x]+: a*b = (ab/x^2) p satisfies every notion",
        run: cpoly_single_entry,
    },
    Entry {
        id: "cpoly-multi-var",
        title: "K[x,y]+: a*b = p a b satisfies every notion",
        run: cpoly_multi_entry,
    },
];

fn f(p: u64) -> Field {
    Field::prime(p).expect("small prime")
}

fn band(r: usize, c: usize, field: Field) -> crate::Result<Algebra> {
    rectangular_band_algebra(BandSpec::new(r, c)?, field)
}

fn small_bands() -> impl Iterator<Item = (usize, usize)> {
    (1..=3).flat_map(|r| (1..=3).map(move |c| (r, c)))
}

fn solved(kind: CompatKind, dot: &Product) -> crate::Result<Subspace> {
    Ok(solve_linear(kind, dot)?.space)
}

fn span_of(dot: &Product, products: &[Product]) -> crate::Result<Subspace> {
    let coords: Vec<Vec<Scalar>> = products.iter().map(Product::to_coords).collect();
    let n = dot.dim();
    Subspace::span(dot.field(), n * n * n, &coords)
}

fn mutation_span(dot: &Product) -> crate::Result<Subspace> {
    let n = dot.dim();
    let muts = (0..n)
        .map(|i| mutation(dot, &unit_vector(dot.field(), n, i)))
        .collect::<crate::Result<Vec<_>>>()?;
    span_of(dot, &muts)
}

fn centroid_products(dot: &Product) -> crate::Result<Vec<Product>> {
    let n = dot.dim();
    centroid(dot)
        .basis_vectors()
        .iter()
        .map(|v| centroid_product(dot, &Endomorphism::from_coords(dot.field(), n, v)?))
        .collect()
}

fn centroid_image(dot: &Product) -> crate::Result<Subspace> {
    span_of(dot, &centroid_products(dot)?)
}

fn holds(kind: CompatKind, star: &Product, dot: &Product) -> crate::Result<bool> {
    Ok(check(kind, star, dot)?.holds)
}

fn expect_kinds(name: &str, star: &Product, dot: &Product, expected: &[(CompatKind, bool)]) -> Result<(), Failure> {
    ensure!(star.is_associative().is_pass(), "{name} is not associative");
    for &(kind, want) in expected {
        let got = holds(kind, star, dot)?;
        ensure!(got == want, "{name}: {kind} expected {want}, got {got}");
    }
    Ok(())
}

fn example_3dim_entry() -> Outcome {
    let (a, star, star2) = example_3dim(Q)?;
    ensure!(a.dot().coefficient(0, 1, 2).is_one(), "e1·e2 != e3");
    expect_kinds(
        "∗",
        &star,
        a.dot(),
        &[(SwapMatching, true), (IdMatching, false), (Interchangeable, false)],
    )?;
    expect_kinds(
        "⋆",
        &star2,
        a.dot(),
        &[(IdMatching, true), (SwapMatching, false), (Interchangeable, false)],
    )?;
    Ok("∗ swap-matching only, ⋆ id-matching only".into())
}

fn example_6dim_entry() -> Outcome {
    let (a, star) = example_6dim(Q)?;
    expect_kinds(
        "∗",
        &star,
        a.dot(),
        &[(Interchangeable, true), (IdMatching, false), (SwapMatching, false)],
    )?;
    Ok("∗ interchangeable, neither matching".into())
}

fn audit_pair(p: &Product, dot: &Product) -> Result<(), Failure> {
    let report = total_compatibility_audit(p, dot)?;
    ensure!(!report.contradiction, "characterisations disagree: {report:?}");
    let h = CompatKind::ALL
        .iter()
        .map(|&k| holds(k, p, dot))
        .collect::<crate::Result<Vec<bool>>>()?;
    let [compat, id, swap, inter, total] = h[..] else {
        unreachable!("five kinds")
    };
    ensure!(
        report.conditions[0] == total,
        "audit and checker disagree on total compatibility"
    );
    ensure!(
        !total || (id && swap && inter && compat),
        "totally compatible but not every notion holds"
    );
    ensure!(!(id || swap) || compat, "a matching pair that is not compatible");
    Ok(())
}

fn audit_entry() -> Outcome {
    let mut pairs: Vec<(Product, Product)> = Vec::new();
    let (a3, s, s2) = example_3dim(Q)?;
    pairs.push((s, a3.dot().clone()));
    pairs.push((s2, a3.dot().clone()));
    let (a6, s6) = example_6dim(Q)?;
    pairs.push((s6, a6.dot().clone()));
    let (b, sb) = example_band22(Q)?;
    pairs.push((sb, b.dot().clone()));
    let bases = [
        band(2, 2, f(3))?,
        band(1, 2, f(2))?,
        matrix_algebra(2, f(3))?,
        example_3dim(f(2))?.0,
        example_3dim(f(3))?.0,
    ];
    for a in &bases {
        for kind in CompatKind::ALL {
            for p in solve_linear(kind, a.dot())?.basis_products() {
                if p.is_associative().is_pass() {
                    pairs.push((p, a.dot().clone()));
                }
            }
        }
    }
    for (p, dot) in &pairs {
        audit_pair(p, dot)?;
    }
    Ok(format!("{} pairs audited", pairs.len()))
}

fn band_product_entry() -> Outcome {
    let spec = BandSpec::new(2, 2)?;
    let b = rectangular_band_algebra(spec, Q)?;
    let prod = b.dot().basis_product(spec.index(0, 1), spec.index(1, 0));
    ensure!(prod == [(spec.index(0, 0), Q.one())], "e12·e21 != e11");
    for (r, c) in small_bands() {
        let a = band(r, c, Q)?;
        ensure!(is_idempotent_algebra(a.dot()), "{r}x{c} band: A·A != A");
        for i in 0..a.dim() {
            let e = a.basis_vector(i);
            ensure!(
                a.dot().multiply(&e, &e)? == e,
                "{r}x{c} band: {} not idempotent",
                a.label(i)
            );
        }
    }
    Ok("e12·e21 = e11; bands up to 3x3 associative with idempotent basis".into())
}

fn mutation_test_algebras() -> crate::Result<Vec<(&'static str, Algebra)>> {
    Ok(vec![
        ("M2(Q)", matrix_algebra(2, Q)?),
        ("M3(F5)", matrix_algebra(3, f(5))?),
        ("2x2 band", band(2, 2, Q)?),
        ("A3 path algebra", path_algebra(&QuiverSpec::linear(3), Q)?),
        ("3-dim example", example_3dim(Q)?.0),
    ])
}

fn mutations_entry() -> Outcome {
    let mut count = 0;
    for (name, a) in mutation_test_algebras()? {
        let n = a.dim();
        let mut xs: Vec<Vec<Scalar>> = (0..n).map(|i| a.basis_vector(i)).collect();
        xs.push((0..n).map(|i| a.field().from_i64(i as i64 + 1)).collect());
        for x in &xs {
            let m = mutation(a.dot(), x)?;
            ensure!(
                m.is_associative().is_pass(),
                "{name}: mutation by {} not associative",
                a.format_vector(x)
            );
            ensure!(
                holds(IdMatching, &m, a.dot())?,
                "{name}: mutation by {} not id-matching",
                a.format_vector(x)
            );
            count += 1;
        }
    }
    let ps = solve_linear(IdMatching, matrix_algebra(2, Q)?.dot())?;
    ensure!(
        all_members_associative(&ps)?.is_pass(),
        "M2(Q): id-matching space has a non-associative member"
    );
    Ok(format!(
        "{count} mutations; every member of the M2(Q) id-matching space is associative"
    ))
}

fn unital_id_matching_entry() -> Outcome {
    let mut dims = Vec::new();
    for (name, a) in [("M2(Q)", matrix_algebra(2, Q)?), ("M3(F5)", matrix_algebra(3, f(5))?)] {
        let space = solved(IdMatching, a.dot())?;
        ensure!(
            space == mutation_span(a.dot())?,
            "{name}: id-matching space != mutation span"
        );
        ensure!(space.dim() == a.dim(), "{name}: dim {} != {}", space.dim(), a.dim());
        dims.push(format!("{name} {}", space.dim()));
    }
    Ok(format!("id-matching = mutations: {}", dims.join(", ")))
}

fn centroid_products_entry() -> Outcome {
    let algebras = [
        ("M2(Q)", matrix_algebra(2, Q)?),
        ("2x2 band", band(2, 2, Q)?),
        ("2x3 band over F3", band(2, 3, f(3))?),
        ("zero algebra over F2", zero_algebra(2, f(2))?),
        ("A3 path algebra", path_algebra(&QuiverSpec::linear(3), Q)?),
        (
            "Q^3",
            direct_sum(&[ground_field(Q)?, ground_field(Q)?, ground_field(Q)?])?,
        ),
    ];
    let mut count = 0;
    for (name, a) in &algebras {
        for p in centroid_products(a.dot())? {
            ensure!(p.is_associative().is_pass(), "{name}: centroid product not associative");
            ensure!(
                holds(TotallyCompatible, &p, a.dot())?,
                "{name}: centroid product not totally compatible"
            );
            count += 1;
        }
    }
    Ok(format!("{count} centroid basis products totally compatible"))
}

fn unital_swap_entry() -> Outcome {
    for (name, a) in [("M2(Q)", matrix_algebra(2, Q)?), ("M3(F5)", matrix_algebra(3, f(5))?)] {
        let image = centroid_image(a.dot())?;
        ensure!(image.dim() == 1, "{name}: centroid image dim {}", image.dim());
        for kind in [SwapMatching, Interchangeable, TotallyCompatible] {
            ensure!(
                solved(kind, a.dot())? == image,
                "{name}: {kind} space != centroid products"
            );
        }
    }
    Ok("M2(Q), M3(F5): all three spaces equal the centroid products, dim 1".into())
}

fn non_central_mutation_entry() -> Outcome {
    let a = matrix_algebra(2, Q)?;
    let e12 = a.index_of("E12").expect("matrix unit label");
    let m = mutation(a.dot(), &a.basis_vector(e12))?;
    ensure!(holds(IdMatching, &m, a.dot())?, "mutation by E12 not id-matching");
    let report = check(TotallyCompatible, &m, a.dot())?;
    let Some(w) = report.witness else {
        return Err(Failure::Check("mutation by E12 is totally compatible".into()));
    };
    let (i, j, k) = w.triple;
    Ok(format!(
        "{} fails at ({}, {}, {}): {} vs {}",
        TotallyCompatible.identities()[w.identity].render(),
        a.label(i),
        a.label(j),
        a.label(k),
        a.format_vector(&w.lhs),
        a.format_vector(&w.rhs)
    ))
}

fn zero_product_entry() -> Outcome {
    let z = zero_algebra(3, Q)?;
    let gamma = centroid(z.dot());
    ensure!(gamma.dim() == 9, "centroid dim {} != 9", gamma.dim());
    let (a3, s, s2) = example_3dim(Q)?;
    let products = [
        a3.dot().clone(),
        s,
        s2,
        band(1, 3, Q)?.dot().clone(),
        band(3, 1, Q)?.dot().clone(),
        path_algebra(&QuiverSpec::linear(2), Q)?.dot().clone(),
        direct_sum(&[ground_field(Q)?, ground_field(Q)?, ground_field(Q)?])?
            .dot()
            .clone(),
    ];
    for (n, p) in products.iter().enumerate() {
        ensure!(p.is_associative().is_pass(), "product {n} not associative");
        ensure!(
            holds(TotallyCompatible, p, z.dot())?,
            "product {n} not totally compatible with zero"
        );
    }
    Ok(format!(
        "centroid dim 9; {} associative products totally compatible",
        products.len()
    ))
}

fn idempotent_algebra_entry() -> Outcome {
    let algebras = [
        ("M2(Q)", matrix_algebra(2, Q)?),
        ("2x2 band", band(2, 2, Q)?),
        ("2x3 band", band(2, 3, Q)?),
        ("3x2 band", band(3, 2, Q)?),
        ("A3 path algebra", path_algebra(&QuiverSpec::linear(3), Q)?),
    ];
    for (name, a) in &algebras {
        ensure!(is_idempotent_algebra(a.dot()), "{name}: A·A != A");
        ensure!(
            solved(Interchangeable, a.dot())? == solved(TotallyCompatible, a.dot())?,
            "{name}: interchangeable space != totally compatible space"
        );
    }
    Ok(format!("{} idempotent algebras", algebras.len()))
}

fn one_sided_unit_entry() -> Outcome {
    let algebras = [
        ("M2(Q)", matrix_algebra(2, Q)?),
        ("1x3 band", band(1, 3, Q)?),
        ("3x1 band", band(3, 1, Q)?),
        ("A3 path algebra", path_algebra(&QuiverSpec::linear(3), Q)?),
    ];
    for (name, a) in &algebras {
        let left = find_units(a.dot(), Side::Left)?.is_some();
        let right = find_units(a.dot(), Side::Right)?.is_some();
        ensure!(left || right, "{name}: no one-sided unit");
        ensure!(
            solved(SwapMatching, a.dot())? == solved(TotallyCompatible, a.dot())?,
            "{name}: swap-matching space != totally compatible space"
        );
    }
    Ok(format!("{} algebras with a one-sided unit", algebras.len()))
}

fn band_id_entry() -> Outcome {
    for (r, c) in small_bands() {
        let spec = BandSpec::new(r, c)?;
        let a = rectangular_band_algebra(spec, Q)?;
        let mut family = Vec::new();
        for j in 0..c {
            for k in 0..r {
                let mut lambda = Matrix::zeros(Q, c, r);
                lambda.set(j, k, Q.one());
                family.push(band_id_matching(spec, &lambda)?);
            }
        }
        let space = solved(IdMatching, a.dot())?;
        ensure!(space.dim() == r * c, "{r}x{c} band: dim {} != {}", space.dim(), r * c);
        ensure!(
            space == span_of(a.dot(), &family)?,
            "{r}x{c} band: space != lambda family"
        );
    }
    Ok("bands up to 3x3: dim |I||J|, spanned by the lambda family".into())
}

fn band_annihilator_entry() -> Outcome {
    let a = band(2, 2, Q)?;
    let expected = Subspace::span_i64(Q, 4, &[&[1, -1, -1, 1]])?;
    ensure!(
        annihilator(a.dot()) == expected,
        "2x2 band: Ann != span{{e11 - e12 - e21 + e22}}"
    );
    for (r, c) in small_bands() {
        let d = annihilator(band(r, c, Q)?.dot()).dim();
        ensure!(d == (r - 1) * (c - 1), "{r}x{c} band: dim Ann {d}");
    }
    Ok("2x2: Ann = span{e11 - e12 - e21 + e22}; r x c: dim (r-1)(c-1)".into())
}

fn band_centralizer_entry() -> Outcome {
    let mut count = 0;
    for (r, c) in [(2, 2), (2, 3), (3, 3)] {
        let a = band(r, c, Q)?;
        let ann = annihilator(a.dot());
        for i in 0..a.dim() {
            let e = a.basis_vector(i);
            let expected = Subspace::span(Q, a.dim(), std::slice::from_ref(&e))?.sum(&ann)?;
            ensure!(
                centralizer(a.dot(), &e)? == expected,
                "{r}x{c} band: centralizer of {}",
                a.label(i)
            );
            count += 1;
        }
    }
    Ok(format!("{count} basis elements"))
}

fn band_swap_entry() -> Outcome {
    let mut dims = Vec::new();
    for (r, c) in small_bands() {
        let a = band(r, c, Q)?;
        let ann = annihilator(a.dot()).dim();
        let d = solved(SwapMatching, a.dot())?.dim();
        ensure!(d == 1 + r * c * ann, "{r}x{c} band: dim {d} != 1 + {r}·{c}·{ann}");
        dims.push(d.to_string());
    }
    let spec = BandSpec::new(2, 2)?;
    let a = rectangular_band_algebra(spec, Q)?;
    let ps = solve_linear(SwapMatching, a.dot())?;
    let r11: Vec<Scalar> = [1, -1, -1, 1].iter().map(|&v| Q.from_i64(v)).collect();
    let member = band_swap_matching(spec, &Q.one(), &[((0, 0), r11)].into_iter().collect())?;
    ensure!(
        ps.contains(&member)?,
        "lambda = 1, r11 in Ann: not in the swap-matching space"
    );
    ensure!(
        member.is_associative().is_pass(),
        "lambda = 1, r11 in Ann: not associative"
    );
    let verdict = match all_members_associative(&ps)? {
        Verdict::Pass => "all associative",
        Verdict::Fail(_) => "has non-associative members",
    };
    Ok(format!(
        "dims {} for bands 1x1..3x3; 2x2 space {verdict}",
        dims.join(" ")
    ))
}

fn band_total_entry() -> Outcome {
    for (r, c) in small_bands() {
        let a = band(r, c, Q)?;
        let space = solved(TotallyCompatible, a.dot())?;
        ensure!(
            space == span_of(a.dot(), &[a.dot().clone()])?,
            "{r}x{c} band: space != span of the product"
        );
    }
    let a = band(2, 2, Q)?;
    let two = Q.from_i64(2);
    let p = centroid_product(a.dot(), &Endomorphism::scalar(&two, 4))?;
    ensure!(p == a.dot().scale(&two)?, "φ = 2·id does not give 2 e_il");
    Ok("bands up to 3x3: dim 1 spanned by the band product".into())
}

fn band_centroid_entry() -> Outcome {
    for (r, c) in small_bands() {
        let a = band(r, c, Q)?;
        let gamma = centroid(a.dot());
        ensure!(gamma.dim() == 1, "{r}x{c} band: centroid dim {}", gamma.dim());
        ensure!(
            gamma.contains(&Endomorphism::identity(Q, a.dim()).to_coords())?,
            "{r}x{c} band: identity not in the centroid"
        );
    }
    Ok("bands up to 3x3: centroid = scalars".into())
}

fn band22_entry() -> Outcome {
    let (a, star) = example_band22(Q)?;
    expect_kinds("∗", &star, a.dot(), &[(SwapMatching, true), (TotallyCompatible, false)])?;
    let n = a.dim();
    for i in 0..n {
        for j in 0..n {
            let ij = star.multiply(&a.basis_vector(i), &a.basis_vector(j))?;
            for k in 0..n {
                let ek = a.basis_vector(k);
                ensure!(star.multiply(&ij, &ek)?.iter().all(Scalar::is_zero), "(A∗A)∗A != 0");
            }
        }
    }
    Ok("associative with (A∗A)∗A = 0, swap-matching, not totally compatible".into())
}

fn left_right_zero_entry() -> Outcome {
    for k in 1..=4 {
        for (r, c) in [(1, k), (k, 1)] {
            let a = band(r, c, Q)?;
            let image = centroid_image(a.dot())?;
            for kind in [SwapMatching, Interchangeable, TotallyCompatible] {
                ensure!(
                    solved(kind, a.dot())? == image,
                    "{r}x{c} band: {kind} space != centroid products"
                );
            }
        }
    }
    Ok("1xk and kx1 bands, k <= 4".into())
}

fn enough_idempotents_entry() -> Outcome {
    let kronecker = QuiverSpec {
        vertices: 2,
        arrows: vec![(0, 1), (0, 1)],
    };
    let algebras = [
        ("A3 path algebra", path_algebra(&QuiverSpec::linear(3), Q)?),
        ("Kronecker path algebra", path_algebra(&kronecker, Q)?),
        (
            "Q^3",
            direct_sum(&[ground_field(Q)?, ground_field(Q)?, ground_field(Q)?])?,
        ),
    ];
    let mut dims = Vec::new();
    for (name, a) in &algebras {
        let swap = solved(SwapMatching, a.dot())?;
        ensure!(
            swap == centroid_image(a.dot())?,
            "{name}: swap-matching space != centroid products"
        );
        let id = solved(IdMatching, a.dot())?;
        ensure!(
            id == mutation_span(a.dot())?,
            "{name}: id-matching space != mutation span"
        );
        dims.push(format!("{name} {}/{}", id.dim(), swap.dim()));
    }
    Ok(format!("id/swap dims: {}", dims.join(", ")))
}

/// `K(t)` with `t² = -1`: the Gaussian rationals, or `𝔽₉` over `𝔽₃`.
fn quadratic_field(field: Field) -> crate::Result<Algebra> {
    let dot = Product::from_i64(field, 2, &[(0, 0, 0, 1), (0, 1, 1, 1), (1, 0, 1, 1), (1, 1, 0, -1)])?;
    Algebra::new(vec!["1".into(), "t".into()], dot)
}

fn domain_entry() -> Outcome {
    let algebras = [
        ("Q", ground_field(Q)?),
        ("Q(i)", quadratic_field(Q)?),
        ("F9", quadratic_field(f(3))?),
    ];
    for (name, a) in &algebras {
        let total = solved(TotallyCompatible, a.dot())?;
        for kind in [SwapMatching, Interchangeable] {
            ensure!(
                solved(kind, a.dot())? == total,
                "{name}: {kind} space != totally compatible space"
            );
        }
    }
    let vars = ['x', 'y'];
    let concat = StarMap::concatenation(&vars, Q)?;
    let x = NCPoly::var(&vars, Q, 'x')?;
    for (name, sm, swap_expected) in [
        ("xy", concat.clone(), true),
        ("2xy", crate::free::scale_star(&concat, &Q.from_i64(2))?, true),
        ("xxy", StarMap::mutation(&x)?, false),
    ] {
        let swap = check_word_identities(&sm, SwapMatching, 4).is_pass();
        ensure!(swap == swap_expected, "x⋆y = {name}: swap-matching {swap}");
        if swap {
            ensure!(
                check_word_identities(&sm, TotallyCompatible, 4).is_pass(),
                "x⋆y = {name}: swap-matching but not totally compatible"
            );
        }
    }
    Ok("fields Q, Q(i), F9; free algebra words up to length 4".into())
}

fn star_maps_entry() -> Outcome {
    let vars = ['x', 'y'];
    let p_xy = NCPoly::from_pairs(&vars, Q, [("xy", Q.one())])?;
    let p_mixed = NCPoly::from_pairs(&vars, Q, [("x", Q.one()), ("yy", Q.from_i64(-2))])?;
    let square_to_y = StarMap::from_fn(&vars, Q, |a, b| {
        if (a, b) == (0, 0) {
            NCPoly::var(&vars, Q, 'y')
        } else {
            NCPoly::zero(&vars, Q)
        }
    })?;
    let stars = [
        ("concatenation", StarMap::concatenation(&vars, Q)?, 4),
        ("left zero", StarMap::left_zero(&vars, Q)?, 4),
        ("mutation by xy", StarMap::mutation(&p_xy)?, 5),
        ("mutation by x - 2yy", StarMap::mutation(&p_mixed)?, 4),
        ("x⋆x = y", square_to_y, 4),
    ];
    for (name, sm, d) in &stars {
        ensure!(star_condition(sm).is_pass(), "{name}: star condition fails");
        ensure!(
            verify_id_matching_truncated(sm, *d)?.is_pass(),
            "{name}: extension fails at d = {d}"
        );
    }
    let x = NCPoly::var(&vars, Q, 'x')?;
    let y = NCPoly::var(&vars, Q, 'y')?;
    let ext = extend_star(&stars[2].1, &x, &y)?;
    ensure!(ext == x.mul(&p_xy)?.mul(&y)?, "mutation by xy: x∗y != x·xy·y");

    let bad = StarMap::from_fn(&vars, Q, |a, _| {
        if a == 0 {
            NCPoly::var(&vars, Q, 'x')
        } else {
            NCPoly::zero(&vars, Q)
        }
    })?;
    ensure!(
        !star_condition(&bad).is_pass(),
        "x⋆x = x⋆y = x passes the star condition"
    );
    ensure!(
        matches!(extend_star(&bad, &x, &y), Err(Error::ConditionNotVerified(..))),
        "extension of a failing star map was not refused"
    );
    Ok(format!("{} star maps extend; x⋆x = x⋆y = x is refused", stars.len()))
}

fn rigidity_entry() -> Outcome {
    let vars = ['x', 'y'];
    let ss = star_space(TotallyCompatible, &vars, Q, 4)?;
    ensure!(ss.space.dim() == 1, "dim {} != 1", ss.space.dim());
    let concat = ss.coordinates(&StarMap::concatenation(&vars, Q)?)?;
    ensure!(ss.space.contains(&concat)?, "concatenation not in the space");
    Ok("X = {x, y}, d = 4: dim 1 spanned by concatenation".into())
}

fn free_centroid_entry() -> Outcome {
    for d in 2..=4 {
        let dim = truncated_centroid_dim(FreeKind::NonCommutative, &['x', 'y'], d)?;
        ensure!(dim == 1, "K<x,y>+, d = {d}: dim {dim} != 1");
    }
    // Multiplications by p with deg p < d.
    for (vars, d, expected) in [
        (&['x'][..], 3, 3),
        (&['x'][..], 4, 4),
        (&['x', 'y'][..], 2, 3),
        (&['x', 'y'][..], 3, 6),
    ] {
        let dim = truncated_centroid_dim(FreeKind::Commutative, vars, d)?;
        ensure!(dim == expected, "K[{vars:?}]+, d = {d}: dim {dim} != {expected}");
    }
    Ok("K<x,y>+: scalars for d = 2..4; K[X]+: multiplications by polynomials".into())
}

fn all_notions(name: &str, star: &CStar, d: u32) -> Result<(), Failure> {
    ensure!(
        check_cpoly_identities(star, None, d).is_pass(),
        "{name}: not associative"
    );
    for kind in [IdMatching, SwapMatching, Interchangeable, TotallyCompatible] {
        ensure!(
            check_cpoly_identities(star, Some(kind), d).is_pass(),
            "{name}: {kind} fails"
        );
    }
    Ok(())
}

fn cpoly_single_entry() -> Outcome {
    let vars = ['x'];
    for e in 1..=3 {
        let p = CPoly::power(&vars, Q, 0, e)?;
        all_notions(&format!("p = x^{e}"), &cpoly_single_var_product(&p)?, 6)?;
    }
    Ok("p = x, x^2, x^3 up to degree 6".into())
}

fn cpoly_multi_entry() -> Outcome {
    let vars = ['x', 'y'];
    let ps = [
        CPoly::from_terms(&vars, Q, [(vec![0, 0], Q.one())])?,
        CPoly::power(&vars, Q, 0, 1)?,
        CPoly::from_terms(&vars, Q, [(vec![0, 1], Q.one()), (vec![2, 0], Q.from_i64(-3))])?,
    ];
    for (name, p) in ["1", "x", "y - 3x^2"].iter().zip(&ps) {
        all_notions(&format!("p = {name}"), &cpoly_multi_var_product(p)?, 4)?;
    }
    Ok("p = 1, x, y - 3x^2 up to degree 4".into())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_are_unique() {
        let mut ids: Vec<_> = ENTRIES.iter().map(|e| e.id).collect();
        ids.sort();
        ids.dedup();
        assert_eq!(ids.len(), ENTRIES.len());
        assert!(find("prop-3.8").is_some());
        assert!(find("nope").is_none());
    }

    #[test]
    fn worker_count_does_not_change_reports() {
        let list: Vec<&Entry> = ["example-3dim", "example-6dim", "cor-2.6", "band-centroid"]
            .iter()
            .map(|id| find(id).unwrap())
            .collect();
        let one = run_entries(&list, 1);
        assert!(one.iter().all(|r| r.pass), "{one:?}");
        assert_eq!(one, run_entries(&list, 3));
    }
}

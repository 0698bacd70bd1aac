//! Built-in worked examples, run by `--check` and reported as a
//! machine-readable verification manifest.

use serde::Serialize;
use terminal_cluster::cluster::{mutate_delta_dimvec, mutate_dimvec};
use terminal_cluster::euler::{flag_oracle, shuffle, ThinModule};
use terminal_cluster::rigidpath::pbw_names;
use terminal_cluster::{
    adapted_word, build_category, cartan, g_module, initial_seed, inversion_roots, make_schedule, pbw_expand,
    validate_quiver, AdaptedOrdering, CategoryModel, IntervalLabel, LaurentPoly, MeshVertex, Result, TerminalData,
};

use crate::commands::{minors, Format, MinorsMode};

/// One check: what was expected, what was computed.
#[derive(Debug, Serialize)]
pub struct CheckRecord {
    /// Stable identifier.
    pub id: String,
    /// What is being checked.
    pub description: String,
    /// Expected value, as text.
    pub expected: String,
    /// Computed value, as text (or the error raised).
    pub actual: String,
    /// `"pass"` or `"fail"`.
    pub status: &'static str,
}

/// The manifest written by `--check`.
#[derive(Debug, Serialize)]
pub struct Manifest {
    /// Number of checks.
    pub total: usize,
    /// Number of failed checks.
    pub failed: usize,
    /// Every check, in a fixed order.
    pub checks: Vec<CheckRecord>,
}

struct Runner(Vec<CheckRecord>);

impl Runner {
    fn check(&mut self, id: &str, description: &str, expected: impl Into<String>, actual: Result<String>) {
        let expected = expected.into();
        let actual = actual.unwrap_or_else(|e| format!("error: {e}"));
        let status = if actual == expected { "pass" } else { "fail" };
        self.0.push(CheckRecord {
            id: id.into(),
            description: description.into(),
            expected,
            actual,
            status,
        });
    }
}

fn category(n: usize, arrows: &[(usize, usize)], t: Vec<usize>) -> Result<CategoryModel> {
    build_category(&TerminalData::new(validate_quiver(n, arrows)?, t)?)
}

fn kronecker() -> Result<CategoryModel> {
    category(3, &[(1, 2), (1, 2), (2, 3)], vec![2, 1, 1])
}

/// The adapted ordering used for the Kronecker-type example.
fn kronecker_ordering() -> AdaptedOrdering {
    AdaptedOrdering::new(
        [(1, 0), (2, 0), (1, 1), (3, 0), (2, 1), (1, 2), (3, 1)]
            .iter()
            .map(|&(i, a)| MeshVertex::new(i, a))
            .collect(),
    )
}

fn schedule_length(n: usize, arrows: &[(usize, usize)], t: Vec<usize>) -> Result<String> {
    let td = TerminalData::new(validate_quiver(n, arrows)?, t)?;
    Ok(make_schedule(&td)?.len().to_string())
}

fn pbw_text(cat: &CategoryModel, i: usize, a: i64, b: i64) -> Result<String> {
    Ok(pbw_expand(cat, IntervalLabel::new(i, a, b))?.to_text(&pbw_names(cat)))
}

/// A coefficient and its factors `(i, a, exponent)` of `T_{i,[a,a]}`.
type PbwTerm<'a> = (i64, &'a [(usize, usize, i32)]);

fn expected_pbw(cat: &CategoryModel, terms: &[PbwTerm]) -> String {
    let mut sum = LaurentPoly::zero(cat.r());
    for &(c, factors) in terms {
        let mut exps = vec![0; cat.r()];
        for &(i, a, e) in factors {
            exps[cat.index_of(MeshVertex::new(i, a)).expect("vertex of the example")] += e;
        }
        sum = &sum + &LaurentPoly::monomial(c, exps);
    }
    sum.to_text(&pbw_names(cat))
}

fn kronecker_checks(run: &mut Runner) -> Result<()> {
    let cat = kronecker()?;
    let ord = kronecker_ordering();
    for ((i, a, b), tri) in [
        ((1, 2, 2), "(1,3,9 | 2,6 | 0,2)"),
        ((1, 1, 2), "(1,4,12 | 2,8 | 0,2)"),
        ((1, 0, 2), "(1,4,13 | 2,8 | 0,2)"),
        ((2, 1, 1), "(0,2,6 | 1,4 | 0,1)"),
        ((2, 0, 1), "(0,2,8 | 1,5 | 0,1)"),
        ((3, 1, 1), "(0,2,4 | 1,3 | 1,0)"),
        ((3, 0, 1), "(0,2,6 | 1,4 | 1,1)"),
    ] {
        let lbl = IntervalLabel::new(i, a, b);
        run.check(
            &format!("kronecker.dimvec.{i}.{a}.{b}"),
            &format!("dimension vector of Hom({lbl}, T_M)"),
            tri,
            cat.projected_dimvec(lbl).map(|v| cat.triangle(&v)),
        );
    }
    let seed = initial_seed(&cat, &ord)?;
    let p = seed.position_of(IntervalLabel::new(1, 1, 2)).expect("initial label");
    run.check(
        "kronecker.mutate.dimvec",
        "dimension vector after mutating T_{1,[1,2]}",
        "(0,4,13 | 2,8 | 0,2)",
        mutate_dimvec(&seed, p).map(|m| cat.triangle(&m.vector)),
    );
    run.check(
        "kronecker.d_delta",
        "dimensions of the standard modules",
        "(23,6,1 | 14,3 | 11,4)",
        cat.delta_dims(&ord).map(|d| cat.triangle(&d)),
    );
    run.check(
        "kronecker.mutate.delta",
        "Δ-dimension vector after mutating T_{1,[1,2]}",
        "(0,0,1 | 2,0 | 0,0)",
        cat.delta_dims(&ord)
            .and_then(|dd| mutate_delta_dimvec(&seed, p, &dd))
            .map(|m| cat.triangle(&m.vector)),
    );
    run.check(
        "kronecker.g2",
        "generating function g_T2",
        "2·w[2,1,1]",
        g_module(&cat, &ord, 2).map(|g| g.to_text()),
    );
    run.check(
        "kronecker.g5.words",
        "number of words of g_T5",
        "402",
        g_module(&cat, &ord, 5).map(|g| g.len().to_string()),
    );
    run.check(
        "kronecker.pbw.1.0.1",
        "dual PBW expansion of T_{1,[0,1]}",
        expected_pbw(&cat, &[(1, &[(1, 1, 1), (1, 0, 1)]), (-1, &[(2, 0, 2)])]),
        pbw_text(&cat, 1, 0, 1),
    );
    run.check(
        "kronecker.pbw.2.0.1",
        "dual PBW expansion of T_{2,[0,1]}",
        expected_pbw(&cat, &[(1, &[(2, 1, 1), (2, 0, 1)]), (-1, &[(1, 1, 2), (3, 0, 1)])]),
        pbw_text(&cat, 2, 0, 1),
    );
    run.check(
        "kronecker.pbw.3.0.1",
        "dual PBW expansion of T_{3,[0,1]}",
        expected_pbw(&cat, &[(1, &[(3, 1, 1), (3, 0, 1)]), (-1, &[(2, 1, 1)])]),
        pbw_text(&cat, 3, 0, 1),
    );
    run.check(
        "kronecker.pbw.1.0.2",
        "five-term dual PBW expansion of T_{1,[0,2]}",
        expected_pbw(
            &cat,
            &[
                (1, &[(1, 2, 1), (1, 1, 1), (1, 0, 1)]),
                (-1, &[(1, 2, 1), (2, 0, 2)]),
                (-1, &[(2, 1, 2), (1, 0, 1)]),
                (2, &[(2, 1, 1), (2, 0, 1), (1, 1, 1), (3, 0, 1)]),
                (-1, &[(1, 1, 3), (3, 0, 2)]),
            ],
        ),
        pbw_text(&cat, 1, 0, 2),
    );
    Ok(())
}

fn flag_checks(run: &mut Runner) -> Result<()> {
    let g = |labels: Vec<usize>, arrows: Vec<(usize, usize)>| ThinModule::new(labels, arrows).map(|m| flag_oracle(&m));
    let s = |i| flag_oracle(&ThinModule::simple(i));
    let (g12, g21) = (g(vec![1, 2], vec![(0, 1)])?, g(vec![2, 1], vec![(0, 1)])?);
    run.check(
        "flags.1_over_2",
        "g of 1 over 2 by the shuffle identity",
        g12.to_text(),
        Ok(shuffle(&s(1), &s(2)).sub(&g21).to_text()),
    );
    let (g32, g23) = (g(vec![3, 2], vec![(0, 1)])?, g(vec![2, 3], vec![(0, 1)])?);
    run.check(
        "flags.3_over_2",
        "g of 3 over 2 by the shuffle identity",
        g32.to_text(),
        Ok(shuffle(&s(3), &s(2)).sub(&g23).to_text()),
    );
    let g13_2 = g(vec![1, 3, 2], vec![(0, 2), (1, 2)])?;
    let g2_13 = g(vec![2, 1, 3], vec![(0, 1), (0, 2)])?;
    let rhs = g2_13
        .add(&shuffle(&shuffle(&s(1), &s(2)), &s(3)))
        .sub(&shuffle(&s(1), &g23))
        .sub(&shuffle(&s(3), &g21));
    run.check(
        "flags.13_over_2",
        "g of 1⊕3 over 2 by the four-term identity",
        g13_2.to_text(),
        Ok(rhs.to_text()),
    );
    Ok(())
}

fn root_check(run: &mut Runner) -> Result<()> {
    let q = validate_quiver(3, &[(1, 2), (1, 3), (2, 3)])?;
    let c = cartan(&q);
    let cat = build_category(&TerminalData::new(q, vec![2, 1, 1])?)?;
    let w = adapted_word(&cat, &cat.canonical_ordering())?;
    let mut roots: Vec<String> = inversion_roots(&w, &c)?.iter().map(|r| format!("{:?}", r.0)).collect();
    roots.sort();
    run.check(
        "roots.triangle",
        "positive roots of the adapted word for 1->2, 1->3, 2->3 with t = (2,1,1)",
        "[1, 0, 0] [1, 1, 0] [2, 1, 1] [2, 2, 1] [3, 2, 2] [3, 3, 2] [4, 3, 3]",
        Ok(roots.join(" ")),
    );
    Ok(())
}

/// Runs every built-in example.
pub fn run_checks() -> Manifest {
    let mut run = Runner(Vec::new());
    type Group = fn(&mut Runner) -> Result<()>;
    let groups: [(&str, Group); 3] = [
        ("kronecker", kronecker_checks),
        ("flags", flag_checks),
        ("roots", root_check),
    ];
    for (id, group) in groups {
        if let Err(e) = group(&mut run) {
            run.check(&format!("{id}.setup"), "example setup", "ok", Err(e));
        }
    }
    run.check(
        "schedule.five_vertex",
        "schedule length for the five-vertex example",
        "19",
        schedule_length(5, &[(3, 1), (3, 5), (3, 5), (5, 2), (2, 4)], vec![3, 2, 3, 1, 2]),
    );
    run.check(
        "schedule.e8",
        "schedule length for E_8 with t = 14 everywhere",
        "840",
        schedule_length(
            8,
            &[(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (8, 5)],
            vec![14; 8],
        ),
    );
    let eta = minors(4, MinorsMode::All, None, Format::Text);
    run.check(
        "minors.a4",
        "interval minors and evaluated generating functions for linear A_4",
        "PASS",
        Ok(match eta {
            Ok(r) if r.failures.is_empty() => "PASS".into(),
            Ok(r) => r.failures.join("; "),
            Err(e) => format!("error: {e}"),
        }),
    );
    let checks = run.0;
    Manifest {
        total: checks.len(),
        failed: checks.iter().filter(|c| c.status == "fail").count(),
        checks,
    }
}

//! Theorem verification suites behind `sumdual verify`.

use std::time::Instant;

use sumdual::construct;
use sumdual::extremal::{
    build_cyclic_family, build_halfcircle_family, check_3d_relations, facet_edge_bounds_3d,
    rotate_into_general_position, search_facet_bound_attainment, verify_kface_bound_attained,
    verify_vertex_bound_attained, FacetAttainment,
};
use sumdual::lattice::FaceLattice;
use sumdual::minkowski::minkowski_sum;
use sumdual::nesterov::{
    closed_form_fvector, nesterov_round, predicted_rounding_lattice, repeated_fvector_recurrence,
    repeated_round_check, verify_rounding, RoundingKind,
};
use sumdual::param::random_rational_rotation;
use sumdual::rational::{int, rat};
use sumdual::{Polytope, Result};

use crate::report::{check_eq, check_that, Check, Status};

pub struct Knobs {
    pub dim: usize,
    pub seed: u64,
    pub size: usize,
}

pub fn rounding_lattice(knobs: &Knobs) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    let mut run = |name: &str, p: &Polytope| -> Result<()> {
        let start = Instant::now();
        let outcome = verify_rounding(p)?;
        checks.push(
            check_that(format!("rounding-lattice bijection [{name}]"), outcome.ok())
                .timed(start.elapsed()),
        );
        checks.push(check_eq(
            format!("rounding f-vector vs pair counts [{name}]"),
            outcome.predicted_counts.clone(),
            outcome.sum_f_vector.clone(),
        ));
        Ok(())
    };
    run("tetrahedron-pc", &construct::tetrahedron_pc())?;
    let d = knobs.dim.max(1);
    run(&format!("cube({d})"), &construct::cube(d)?)?;
    Ok(checks)
}

pub fn simplex_fvector(knobs: &Knobs) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    let start = Instant::now();
    let ctx = nesterov_round(&construct::tetrahedron_pc())?;
    let brute = FaceLattice::build(ctx.sum()).f_vector();
    checks.push(
        check_eq(
            "simplex rounding f-vector geometric d=3",
            closed_form_fvector(RoundingKind::Simplex, 3),
            brute,
        )
        .timed(start.elapsed()),
    );
    for d in 2..=knobs.dim.max(2) {
        let lattice = FaceLattice::build(&construct::simplex(d)?);
        checks.push(check_eq(
            format!("simplex pair counts vs closed form d={d}"),
            closed_form_fvector(RoundingKind::Simplex, d),
            predicted_rounding_lattice(&lattice, d).counts_by_dim(),
        ));
    }
    Ok(checks)
}

pub fn cube_fvector(knobs: &Knobs) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    for d in [3usize, 4] {
        if d > knobs.dim.max(3) {
            checks.push(
                Check::new(
                    format!("cube rounding f-vector geometric d={d}"),
                    Status::Skipped,
                )
                .values(
                    format!("{:?}", closed_form_fvector(RoundingKind::Cube, d)),
                    format!("skipped at --dim {}", knobs.dim),
                ),
            );
            continue;
        }
        let start = Instant::now();
        let ctx = nesterov_round(&construct::cube(d)?)?;
        let brute = FaceLattice::build(ctx.sum()).f_vector();
        checks.push(
            check_eq(
                format!("cube rounding f-vector geometric d={d}"),
                closed_form_fvector(RoundingKind::Cube, d),
                brute,
            )
            .timed(start.elapsed()),
        );
    }
    for d in 2..=knobs.dim.max(2) {
        let lattice = FaceLattice::build(&construct::cube(d)?);
        checks.push(check_eq(
            format!("cube pair counts vs closed form d={d}"),
            closed_form_fvector(RoundingKind::Cube, d),
            predicted_rounding_lattice(&lattice, d).counts_by_dim(),
        ));
    }
    Ok(checks)
}

pub fn repeated_rounding(knobs: &Knobs) -> Result<Vec<Check>> {
    let rounds = knobs.size.clamp(1, 3);
    let start = Instant::now();
    let report = repeated_round_check(&construct::tetrahedron_pc(), rounds)?;
    let mut checks = vec![
        check_that("iterates remain perfectly centered", true).timed(start.elapsed()),
        check_that(
            "recurrences match computed f-vectors",
            report.recurrences_match,
        ),
    ];
    for (i, step) in report.steps.iter().enumerate() {
        checks.push(check_eq(
            format!("euler residual after round {}", i + 1),
            0i64,
            step.euler_residual,
        ));
    }
    if rounds >= 2 {
        checks.push(check_eq(
            "f-vector after round 2",
            vec![48u64, 96, 50],
            report.steps[1].f_vector.clone(),
        ));
    }
    // Ratio trend on the recurrences out to n = 3.
    let first = &report.steps[0].f_vector;
    let recurred = repeated_fvector_recurrence(&[first[0], first[1], first[2]], 3);
    let ratios: Vec<_> = recurred
        .iter()
        .map(|f| rat(f[2] as i64, f[0] as i64))
        .collect();
    let monotone = ratios.windows(2).all(|w| w[0] >= w[1]) && ratios.iter().all(|r| *r > int(1));
    checks.push(check_that(
        "f2/f0 non-increasing toward 1 (n=1..3)",
        monotone,
    ));
    Ok(checks)
}

pub fn vertex_bound(_knobs: &Knobs) -> Result<Vec<Check>> {
    let quad = vec![rat(1, 3), rat(1, 2), int(1), int(2)];
    let five = vec![rat(1, 4), rat(1, 2), int(1), int(2), int(4)];
    let six = vec![rat(1, 5), rat(1, 3), rat(2, 3), int(1), int(2), int(5)];
    let tri = |a: i64, b: i64, c: i64| vec![rat(1, a), int(b), int(c)];
    let cases: Vec<(&str, usize, Vec<Vec<sumdual::Rational>>)> = vec![
        ("d=3 counts (4,4)", 3, vec![quad.clone(), quad]),
        ("d=3 counts (5,6)", 3, vec![five, six]),
        (
            "d=4 counts (3,3,3)",
            4,
            vec![tri(3, 1, 3), tri(4, 1, 2), tri(2, 2, 5)],
        ),
    ];
    let mut checks = Vec::new();
    for (name, dim, lists) in cases {
        let start = Instant::now();
        let family = build_halfcircle_family(dim, &lists)?;
        let report = verify_vertex_bound_attained(&family)?;
        checks.push(
            check_eq(
                format!("vertex bound attained [{name}]"),
                report.bound,
                report.computed,
            )
            .timed(start.elapsed()),
        );
    }
    Ok(checks)
}

pub fn relations_3d(knobs: &Knobs) -> Result<Vec<Check>> {
    let tetra = construct::tetrahedron_pc();
    let cube = construct::cube(3)?;
    let mut checks = Vec::new();
    for i in 0..knobs.size as u64 {
        let seed = knobs.seed + i * 13;
        let start = Instant::now();
        let ctx = if i % 4 == 3 {
            // Every fourth instance is a triple.
            let mut found = None;
            for attempt in 0..40 {
                let r1 = random_rational_rotation(3, seed + attempt)?;
                let r2 = random_rational_rotation(3, seed + attempt + 1000)?;
                let ctx = minkowski_sum(vec![
                    tetra.clone(),
                    tetra.transform(&r1)?,
                    cube.transform(&r2)?,
                ])?;
                if ctx.relatively_in_general_position()?.0 {
                    found = Some(ctx);
                    break;
                }
            }
            found.ok_or_else(|| {
                sumdual::Error::Domain(format!("no general-position triple from seed {seed}"))
            })?
        } else {
            let other = if i % 2 == 0 { &tetra } else { &cube };
            rotate_into_general_position(&tetra, other, seed, 60)?.0
        };
        let report = check_3d_relations(ctx.summands().to_vec())?;
        let ok =
            report.in_general_position && report.residuals == [0, 0, 0] && report.accounting_ok;
        checks.push(
            check_eq(
                format!("3d relations residuals [instance {i}]"),
                [0i64, 0, 0],
                report.residuals,
            )
            .timed(start.elapsed()),
        );
        checks.push(check_that(
            format!("pure+mixed accounting [instance {i}]"),
            ok,
        ));
    }
    Ok(checks)
}

pub fn facet_bounds(knobs: &Knobs) -> Result<Vec<Check>> {
    let tetra = construct::tetrahedron_pc();
    let cube = construct::cube(3)?;
    let mut checks = Vec::new();
    for i in 0..3u64 {
        let (ctx, _) = rotate_into_general_position(&tetra, &cube, knobs.seed + i * 17, 60)?;
        let report = facet_edge_bounds_3d(&ctx.summands()[0], &ctx.summands()[1])?;
        checks.push(check_that(
            format!("facet and edge bounds hold [pair {i}]"),
            report.holds,
        ));
    }
    let start = Instant::now();
    match search_facet_bound_attainment()? {
        FacetAttainment::Found { sum_f, epsilon, .. } => {
            checks.push(
                check_eq(
                    format!("attainment search f0=(4,4), eps={epsilon}"),
                    [16u64, 32, 18],
                    sum_f,
                )
                .timed(start.elapsed()),
            );
        }
        FacetAttainment::Inconclusive => {
            checks.push(
                Check::new("attainment search f0=(4,4)", Status::Inconclusive)
                    .values("[16, 32, 18]", "no witness in grid")
                    .timed(start.elapsed()),
            );
        }
    }
    Ok(checks)
}

pub fn cyclic_bounds(knobs: &Knobs) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    let start = Instant::now();
    let family = build_cyclic_family(
        4,
        &[
            (1..=5).map(int).collect::<Vec<_>>(),
            (6..=11).map(int).collect::<Vec<_>>(),
        ],
    )?;
    let report = verify_kface_bound_attained(&family, 0)?;
    checks.push(
        check_eq("cyclic d=4 counts (5,6) k=0", report.bound, report.computed)
            .timed(start.elapsed()),
    );
    if knobs.dim >= 6 {
        let family = build_cyclic_family(
            6,
            &[
                (1..=4).map(int).collect::<Vec<_>>(),
                (5..=8).map(int).collect::<Vec<_>>(),
            ],
        )?;
        for k in 0..=1usize {
            let report = verify_kface_bound_attained(&family, k)?;
            checks.push(check_eq(
                format!("cyclic d=6 counts (4,4) k={k}"),
                report.bound,
                report.computed,
            ));
        }
    }
    Ok(checks)
}

pub fn all(knobs: &Knobs) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    checks.extend(rounding_lattice(knobs)?);
    checks.extend(simplex_fvector(knobs)?);
    checks.extend(cube_fvector(knobs)?);
    checks.extend(repeated_rounding(&Knobs {
        dim: knobs.dim,
        seed: knobs.seed,
        size: 2,
    })?);
    checks.extend(vertex_bound(knobs)?);
    checks.extend(relations_3d(knobs)?);
    checks.extend(facet_bounds(knobs)?);
    checks.extend(cyclic_bounds(knobs)?);
    Ok(checks)
}

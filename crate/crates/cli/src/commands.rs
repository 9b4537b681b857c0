use fermat_tower::cohomology::AsymptoticBound;
use fermat_tower::{
    all_orbits, bound_report, char_exact_order, enumerate_irreps, fermat_rank_bound_asymptotic,
    fermat_rank_bound_exact, field_degrees, filtration_h1_bound, fixed_dim_bound, fixed_space_dim, tower_table,
    BoundKind, CohomParams, FieldDegrees, FiltrationData, GaloisActionSpec, PrimePower,
};
use num_bigint::BigUint;

use crate::config::{ActionChoice, Command, RunConfig};
use crate::error::CliError;
use crate::report::{Cell, Report, Table};

const ILLUSTRATIVE_C: &str = "C not supplied; using the illustrative value 0";
const ILLUSTRATIVE_H1: &str = "h1_base not supplied; using the illustrative value 1";

pub fn execute(config: &RunConfig) -> Result<Report, CliError> {
    match config.command {
        Command::Orbits => orbits(config),
        Command::Irreps => irreps(config),
        Command::Tower => tower(config),
        Command::Bound => bound(config),
        Command::FiltrationBound => filtration(config),
        Command::Table => table(config),
    }
}

fn action_spec(config: &RunConfig, level: &PrimePower) -> Result<GaloisActionSpec, CliError> {
    let limit = config.enumeration_limit;
    let spec = match config.action {
        ActionChoice::FullUnits => GaloisActionSpec::full_units(level),
        ActionChoice::Trivial => GaloisActionSpec::trivial(level),
        ActionChoice::Scalar => {
            let gens: Vec<BigUint> = config.generators.iter().flatten().map(|&g| BigUint::from(g)).collect();
            if gens.is_empty() {
                return Err(CliError::Validation("--action scalar requires --generators".into()));
            }
            GaloisActionSpec::scalar(level, gens)?
        }
        ActionChoice::Matrix => {
            if config.generators.is_empty() {
                return Err(CliError::Validation("--action matrix requires --generators".into()));
            }
            let mut mats = Vec::with_capacity(config.generators.len());
            for g in &config.generators {
                let m: [u64; 4] = g.as_slice().try_into().map_err(|_| {
                    CliError::Validation(format!("matrix generator needs 4 entries (row-major), got {}", g.len()))
                })?;
                mats.push(m);
            }
            let limit = limit.unwrap_or(fermat_tower::action::DEFAULT_ENUMERATION_LIMIT);
            return Ok(GaloisActionSpec::matrix_with_limit(level, mats, limit)?);
        }
    };
    Ok(match limit {
        Some(l) => spec.with_limit(l),
        None => spec,
    })
}

fn action_name(config: &RunConfig) -> &'static str {
    match config.action {
        ActionChoice::FullUnits => "full-units",
        ActionChoice::Trivial => "trivial",
        ActionChoice::Scalar => "scalar",
        ActionChoice::Matrix => "matrix",
    }
}

fn degrees_for(config: &RunConfig, p: u64, n: u32) -> Result<FieldDegrees, CliError> {
    let overrides = config
        .degree_overrides
        .iter()
        .map(|(&i, &d)| (i, BigUint::from(d)))
        .collect();
    Ok(field_degrees(
        p,
        n,
        &BigUint::from(config.k_degree),
        config.linearly_disjoint,
        &overrides,
    )?)
}

fn require_flags(config: &RunConfig, mu: bool, triviality: bool) -> Result<(), CliError> {
    let mut missing = Vec::new();
    if mu && !config.mu_zero {
        missing.push("--mu-zero (mu-invariant zero)");
    }
    if triviality && !config.h1_triviality {
        missing.push("--h1-triviality (trivial Galois action on H_1(X, F_p))");
    }
    if missing.is_empty() {
        Ok(())
    } else {
        Err(CliError::Validation(format!(
            "{} requires the hypothesis flag {}",
            config.command.name(),
            missing.join(" and ")
        )))
    }
}

fn orbits(config: &RunConfig) -> Result<Report, CliError> {
    let level = PrimePower::new(config.require_p()?, config.require_n()?)?;
    let action = action_spec(config, &level)?;
    let orbits = all_orbits(&action)?;

    let mut report = Report::default();
    report.set("p", level.p());
    report.set("n", level.n());
    report.set("action", action_name(config));
    report.set("group_order", action.order());
    report.set("orbit_count", orbits.len() as u64);
    report.set("character_count", level.character_count());
    let mut table = Table::new("orbits", &["a", "b", "size", "stabilizer_order", "exact_order"]);
    for o in &orbits {
        table.push(vec![
            o.representative.a().into(),
            o.representative.b().into(),
            (&o.size).into(),
            (&o.stabilizer_order).into(),
            o.exact_order().into(),
        ]);
    }
    report.table = Some(table);
    Ok(report)
}

fn irreps(config: &RunConfig) -> Result<Report, CliError> {
    let level = PrimePower::new(config.require_p()?, config.require_n()?)?;
    let action = action_spec(config, &level)?;
    let irreps = enumerate_irreps(&action)?;

    let squares: BigUint = irreps.iter().map(|r| r.dim() * r.dim()).sum();
    let mut report = Report::default();
    report.set("p", level.p());
    report.set("n", level.n());
    report.set("action", action_name(config));
    report.set("group_order", action.order());
    report.set("irrep_count", irreps.len() as u64);
    report.set("sum_of_squared_dims", squares);
    report.set("group_G_order", level.character_count() * action.order());
    let mut table = Table::new(
        "irreps",
        &["a", "b", "exact_order", "psi_index", "psi_trivial", "dim", "fixed_dim", "fixed_dim_bound"],
    );
    for r in &irreps {
        let chi = &r.orbit().representative;
        table.push(vec![
            chi.a().into(),
            chi.b().into(),
            char_exact_order(chi).into(),
            r.psi_index().into(),
            r.psi_is_trivial().into(),
            r.dim().into(),
            fixed_space_dim(r).into(),
            fixed_dim_bound(r).into(),
        ]);
    }
    report.table = Some(table);
    Ok(report)
}

fn tower(config: &RunConfig) -> Result<Report, CliError> {
    let p = config.require_p()?;
    let n = config.require_n()?;
    let degrees = degrees_for(config, p, n)?;
    let table = tower_table(p, n, &degrees)?;
    let ratios = table.growth_ratios();

    let mut report = Report::default();
    report.set("p", p);
    report.set("n", n);
    report.set("K_degree", degrees.k_degree());
    report.set("F_degree_over_Q", degrees.f_degree());
    report.set("S_n", &table.partial_sums[n as usize]);
    report.set("S_n_over_p_n", &ratios[n as usize]);
    let mut rows = Table::new(
        "levels",
        &[
            "n",
            "p_pow_n",
            "genus",
            "dim_J",
            "dim_Jprime",
            "Fn_degree_over_Q",
            "Fn_degree_over_K",
            "S_n",
            "S_n_over_p_n",
        ],
    );
    for (i, level) in table.levels.iter().enumerate() {
        let i = i as u32;
        rows.push(vec![
            i.into(),
            (&level.degree).into(),
            (&level.genus).into(),
            (&level.dim_j).into(),
            (&level.dim_jprime).into(),
            degrees.over_q(i)?.into(),
            degrees.over_k(i)?.into(),
            (&table.partial_sums[i as usize]).into(),
            (&ratios[i as usize]).into(),
        ]);
    }
    report.table = Some(rows);
    Ok(report)
}

fn asymptotic_warning(asym: &AsymptoticBound, n_max: u32) -> String {
    format!(
        "C' = {} is C times the largest S_n/p^n over levels 1..={n_max} (attained at n = {}); it is heuristic, not a proven constant",
        asym.c_prime, asym.argmax_level
    )
}

fn bound(config: &RunConfig) -> Result<Report, CliError> {
    require_flags(config, true, true)?;
    let p = config.require_p()?;
    let n = config.require_n()?;
    if n == 0 {
        return Err(CliError::Validation("bound requires --n of at least 1".into()));
    }
    let c = config.constant()?;
    let degrees = degrees_for(config, p, n)?;
    let h1_base = BigUint::from(config.h1_base.unwrap_or(1));
    let params = CohomParams::new(h1_base.clone(), degrees.f_degree().clone(), c.clone(), config.mu_zero)?;
    let full = bound_report(p, n, &degrees, &params, config.h1_triviality)?;
    let asym = fermat_rank_bound_asymptotic(p, n, &degrees, &c, true)?;
    let top = &full.levels[n as usize];
    let value = |kind| top.get(kind).expect("every bound kind is reported").value.clone();

    let mut report = Report::default();
    if config.c.is_none() {
        report.warn(ILLUSTRATIVE_C);
    }
    if config.h1_base.is_none() {
        report.warn(ILLUSTRATIVE_H1);
    }
    report.warn(asymptotic_warning(&asym, n));
    report.set("p", p);
    report.set("n", n);
    report.set("K_degree", degrees.k_degree());
    report.set("F_degree_over_Q", degrees.f_degree());
    report.set("Fn_degree_over_Q", degrees.over_q(n)?);
    report.set("h1_base", h1_base);
    report.set("C", &c);
    report.set("dim_J", &top.dim_j);
    report.set("S_n", fermat_tower::rank_sum(p, n, &degrees)?);
    report.set("theorem_main_bound", value(BoundKind::TheoremMain));
    report.set("prop_fnrank_bound", value(BoundKind::PropFnrank));
    report.set("exact_bound", value(BoundKind::FermatExact));
    report.set("asymptotic_bound", value(BoundKind::FermatAsymptotic));
    report.set("C_prime", &full.c_prime);
    report.set(
        "chabauty_exact",
        top.get(BoundKind::FermatExact).expect("reported").chabauty,
    );

    let mut rows = Table::new(
        "levels",
        &[
            "n",
            "dim_J",
            "theorem_main_bound",
            "prop_fnrank_bound",
            "exact_bound",
            "asymptotic_bound",
            "chabauty_exact",
        ],
    );
    for level in &full.levels {
        let mut row: Vec<Cell> = vec![level.n.into(), (&level.dim_j).into()];
        for kind in [
            BoundKind::TheoremMain,
            BoundKind::PropFnrank,
            BoundKind::FermatExact,
            BoundKind::FermatAsymptotic,
        ] {
            row.push((&level.get(kind).expect("reported").value).into());
        }
        row.push(level.get(BoundKind::FermatExact).expect("reported").chabauty.into());
        rows.push(row);
    }
    report.table = Some(rows);
    Ok(report)
}

fn filtration(config: &RunConfig) -> Result<Report, CliError> {
    let h1 = config
        .h1
        .ok_or_else(|| CliError::Validation("filtration-bound requires --h1".into()))?;
    let filtration = FiltrationData::new(config.ranks.iter().copied());
    let bound = filtration_h1_bound(&filtration, &BigUint::from(h1), config.start_index)?;

    let mut report = Report::default();
    report.set("bound", bound);
    report.set("dim_V", filtration.total_dim());
    report.set("h1", h1);
    report.set("start_index", config.start_index as u64);
    Ok(report)
}

fn table(config: &RunConfig) -> Result<Report, CliError> {
    require_flags(config, true, false)?;
    let p = config.require_p()?;
    let n_max = config
        .n_max
        .ok_or_else(|| CliError::Validation("table requires --n-max".into()))?;
    if n_max == 0 {
        return Err(CliError::Validation("table requires --n-max of at least 1".into()));
    }
    let c = config.constant()?;
    let degrees = degrees_for(config, p, n_max)?;
    let ladder = tower_table(p, n_max, &degrees)?;
    let ratios = ladder.growth_ratios();
    let asym = fermat_rank_bound_asymptotic(p, n_max, &degrees, &c, config.mu_zero)?;

    let mut report = Report::default();
    if config.c.is_none() {
        report.warn(ILLUSTRATIVE_C);
    }
    report.warn(asymptotic_warning(&asym, n_max));
    report.set("p", p);
    report.set("n_max", n_max);
    report.set("K_degree", degrees.k_degree());
    report.set("C", &c);
    report.set("C_prime", &asym.c_prime);
    report.set("argmax_level", asym.argmax_level);
    report.set("growth_constant", fermat_tower::tower::growth_constant(p));

    let mut rows = Table::new(
        "levels",
        &[
            "n",
            "p_pow_n",
            "genus",
            "dim_Jprime",
            "Fn_degree_over_Q",
            "S_n",
            "S_n_over_p_n",
            "exact_bound",
            "asymptotic_bound",
        ],
    );
    for (i, level) in ladder.levels.iter().enumerate() {
        let n = i as u32;
        let exact = fermat_rank_bound_exact(p, n, &degrees, &c, config.mu_zero)?;
        rows.push(vec![
            n.into(),
            (&level.degree).into(),
            (&level.genus).into(),
            (&level.dim_jprime).into(),
            degrees.over_q(n)?.into(),
            (&ladder.partial_sums[i]).into(),
            (&ratios[i]).into(),
            exact.into(),
            (&asym.per_level[i]).into(),
        ]);
    }
    report.table = Some(rows);
    Ok(report)
}

//! Catalog-scale verification of the Hovey-triple statements and of the
//! contractible cotorsion pair. Every report is catalog-relative and
//! window-relative: the universal statements are theorems, the artifact's
//! job is falsification pressure.

use serde::Serialize;

use crate::equivariant::EquivariantModule;
use crate::homotopy::{is_contractible, is_sigma_acyclic, mapping_cone};
use crate::prng::Prng;

use super::catalog::CatalogPair;
use super::cocycle::{a_split_cocycle_space, extension_from_theta};
use super::ext::{ext1_with, Presentation};
use super::projectives::{is_projective_module, semiprojective_witness};

/// One verified fact with enough context to replay it.
#[derive(Clone, Debug, Serialize)]
pub struct CheckRow {
    pub check: String,
    pub subject: String,
    pub pass: bool,
    pub detail: String,
}

/// A suite report: the pair, configuration, and one row per check.
#[derive(Clone, Debug, Serialize)]
pub struct OrthogonalityReport {
    pub pair: String,
    pub window: u32,
    pub seed: u64,
    pub semisimple_skip: bool,
    pub rows: Vec<CheckRow>,
}

impl OrthogonalityReport {
    pub fn all_pass(&self) -> bool {
        self.rows.iter().all(|r| r.pass)
    }

    fn push(&mut self, check: &str, subject: String, pass: bool, detail: String) {
        self.rows.push(CheckRow {
            check: check.to_string(),
            subject,
            pass,
            detail,
        });
    }

    /// Deterministic output order regardless of generation order.
    fn sort(&mut self) {
        self.rows
            .sort_by(|a, b| (&a.check, &a.subject).cmp(&(&b.check, &b.subject)));
    }
}

/// Verify the Hovey-triple statements on a catalog:
/// (a) Ext¹(P, T) = 0 for every semiprojective-witnessed P and
///     window-Σ-acyclic T;
/// (b) witnessed ∧ Σ-acyclic ⟹ Λ-projective;
/// (c) Λ-projective ⟹ witnessed ∧ Σ-acyclic;
/// (d) Ext¹(P, ΣⁿT) = 0 on the window ⟹ stable hom T(P, ΣⁿT) = 0 on the
///     window;
/// plus two-out-of-three and summand-closure spot checks for the class of
/// Σ-acyclics. Semisimple H short-circuits with a warning row.
pub fn hovey_triple_report(pair: &CatalogPair, window: u32, seed: u64) -> OrthogonalityReport {
    hovey_triple_report_with(pair, window, window, seed)
}

/// Like [`hovey_triple_report`], with a separate window for the
/// suspension-sweep subcheck (d), whose module dimensions grow like
/// `dim T · (dim H − 1)ⁿ`.
pub fn hovey_triple_report_with(
    pair: &CatalogPair,
    window: u32,
    d_window: u32,
    seed: u64,
) -> OrthogonalityReport {
    let mut report = OrthogonalityReport {
        pair: pair.name.clone(),
        window,
        seed,
        semisimple_skip: pair.hopf.is_semisimple(),
        rows: Vec::new(),
    };
    if report.semisimple_skip {
        report.push(
            "semisimple-warning",
            pair.name.clone(),
            true,
            "ε(λ) ≠ 0: every module is acyclic and projective; suite skipped".into(),
        );
        return report;
    }
    let mut rng = Prng::new(seed);

    // Classification sweep.
    let acyclic: Vec<(String, EquivariantModule)> = pair
        .modules
        .iter()
        .filter(|(_, m)| is_sigma_acyclic(m, window))
        .map(|(n, m)| (n.clone(), m.clone()))
        .collect();
    let projective: Vec<&(String, EquivariantModule)> = pair
        .modules
        .iter()
        .filter(|(_, m)| is_projective_module(m))
        .collect();
    let witnessed: Vec<&(String, EquivariantModule)> = pair
        .modules
        .iter()
        .filter(|(_, m)| semiprojective_witness(m, &acyclic, window).witnessed())
        .collect();

    report.push(
        "classification",
        pair.name.clone(),
        true,
        format!(
            "catalog {}; sigma-acyclic {}; lambda-projective {}; semiprojective-witnessed {}",
            pair.modules.len(),
            acyclic.len(),
            projective.len(),
            witnessed.len()
        ),
    );

    // (a) Ext¹(P, T) = 0.
    for (pname, p) in &witnessed {
        let pres = Presentation::new(p);
        for (tname, t) in &acyclic {
            let (dim, _) = ext1_with(&pres, t);
            report.push(
                "a:ext1-vanishes",
                format!("({pname}, {tname})"),
                dim == 0,
                format!("dim ext1 = {dim}"),
            );
        }
    }

    // (b) witnessed ∧ Σ-acyclic ⟹ projective.
    for (name, m) in &pair.modules {
        let is_wit = witnessed.iter().any(|(n, _)| n == name);
        let is_acy = acyclic.iter().any(|(n, _)| n == name);
        if is_wit && is_acy {
            let pass = is_projective_module(m);
            report.push(
                "b:witnessed-acyclic-projective",
                name.clone(),
                pass,
                String::new(),
            );
        }
    }

    // (c) projective ⟹ witnessed ∧ Σ-acyclic.
    for (name, m) in &projective {
        let is_acy = is_sigma_acyclic(m, window);
        let wit = semiprojective_witness(m, &acyclic, window).witnessed();
        report.push(
            "c:projective-witnessed-acyclic",
            name.clone(),
            is_acy && wit,
            format!("sigma-acyclic {is_acy}, witnessed {wit}"),
        );
    }

    // (d) window Ext¹ vanishing ⟹ window stable-hom vanishing. The stable
    // hom T(P, ΣⁿT) is read off as H(Σⁿ hom(P, T)) (the suspension/Hom
    // identification is verified separately as its own invariant); pairs
    // whose suspension towers leave the desk-scale envelope are skipped and
    // reported as such.
    let w = d_window as i64;
    let growth = (pair.hopf.dim() - 1).max(1).pow(d_window);
    for (pname, p) in &witnessed {
        let pres = Presentation::new(p);
        for (tname, t) in &acyclic {
            let solve_size = pres.kernel.dim().max(1) * t.dim() * growth;
            if solve_size > 400 {
                report.push(
                    "d:skipped-desk-envelope",
                    format!("({pname}, {tname})"),
                    true,
                    format!("solve size {solve_size} exceeds the desk budget"),
                );
                continue;
            }
            let mut ext_all_zero = true;
            for n in -w..=w {
                let st = t.sigma_power(n);
                if ext1_with(&pres, &st).0 != 0 {
                    ext_all_zero = false;
                    break;
                }
            }
            if !ext_all_zero {
                report.push(
                    "d:ext-window-hypothesis",
                    format!("({pname}, {tname})"),
                    false,
                    "ext1(P, ΣⁿT) ≠ 0 for a witnessed P and acyclic T".into(),
                );
                continue;
            }
            let hom = super::projectives::hom_action_module(p, t);
            let mut stable_zero = true;
            let mut bad_n = 0;
            for n in -w..=w {
                let dim = stable_dim_of_suspended_hom(&hom, n);
                if dim != 0 {
                    stable_zero = false;
                    bad_n = n;
                    break;
                }
            }
            report.push(
                "d:perp-implies-stably-trivial",
                format!("({pname}, {tname})"),
                stable_zero,
                if stable_zero {
                    String::new()
                } else {
                    format!("stable hom nonzero at n = {bad_n}")
                },
            );
        }
    }

    // Thickness spot checks: two-out-of-three on generated triangles.
    let acyclic_only: Vec<&(String, EquivariantModule)> = acyclic.iter().collect();
    let mut triangle_checks = 0;
    for (i, (n1, t1)) in acyclic_only.iter().enumerate() {
        for (n2, t2) in acyclic_only.iter().skip(i) {
            if triangle_checks >= 6 || t1.dim() * t2.dim() > 512 {
                continue;
            }
            let basis = crate::equivariant::equivariant_hom_basis(t1, t2);
            let f = match rng.combination(&basis, pair.cat.field()) {
                Some(f) => f,
                None => continue,
            };
            let tri = mapping_cone(t1, t2, &f);
            let pass = is_sigma_acyclic(&tri.cone, window.min(2));
            report.push(
                "thick:two-out-of-three",
                format!("cone({n1} -> {n2})"),
                pass,
                String::new(),
            );
            triangle_checks += 1;
        }
    }
    // Summand closure through additivity of homology.
    for (i, (n1, t1)) in acyclic_only.iter().enumerate() {
        for (n2, t2) in acyclic_only.iter().skip(i + 1).take(1) {
            let sum = t1.direct_sum(t2);
            let pass = is_sigma_acyclic(&sum, window.min(2));
            report.push(
                "thick:sum-closure",
                format!("{n1} + {n2}"),
                pass,
                String::new(),
            );
        }
        if i >= 3 {
            break;
        }
    }

    report.sort();
    report
}

/// `dim H(Σⁿ hom)` for a hom-space action module, short-circuiting through
/// the exact projectivity certificate (projective ⟹ acyclic at every n).
fn stable_dim_of_suspended_hom(hom_module: &crate::hmodules::HModule, n: i64) -> usize {
    if crate::hmodules::projective_by_jordan_oracle(hom_module) == Some(true) {
        return 0;
    }
    crate::hmodules::homology(&crate::hmodules::sigma_power(hom_module, n)).dim_h()
}

/// Verify the contractible cotorsion pair on a catalog: every sampled
/// A-split extension of any M by a contractible T splits equivariantly.
pub fn contractible_pair_report(
    pair: &CatalogPair,
    samples_per_pair: usize,
    seed: u64,
) -> OrthogonalityReport {
    let mut report = OrthogonalityReport {
        pair: pair.name.clone(),
        window: 0,
        seed,
        semisimple_skip: false,
        rows: Vec::new(),
    };
    let mut rng = Prng::new(seed);

    let contractibles: Vec<&(String, EquivariantModule)> = pair
        .modules
        .iter()
        .filter(|(_, m)| m.dim() > 0 && is_contractible(m))
        .collect();
    report.push(
        "classification",
        pair.name.clone(),
        !contractibles.is_empty(),
        format!("contractible members: {}", contractibles.len()),
    );

    for (tname, t) in &contractibles {
        for (mname, m) in &pair.modules {
            if m.dim() == 0 || m.dim() * t.dim() > 256 {
                continue;
            }
            let space = a_split_cocycle_space(t, m);
            let mut all_split = true;
            let mut split_count = 0;
            for _ in 0..samples_per_pair {
                let theta = space.sample(&mut rng);
                let ext = extension_from_theta(t, m, &theta);
                if ext.equivariant_retraction().is_none() {
                    all_split = false;
                    break;
                }
                split_count += 1;
            }
            report.push(
                "cntr:a-split-extensions-split",
                format!("(0 -> {tname} -> E -> {mname} -> 0)"),
                all_split,
                format!("{split_count}/{samples_per_pair} sampled extensions split"),
            );
        }
    }
    report.sort();
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cotorsion::builtin_catalog;

    #[test]
    fn hovey_suite_on_dp2_over_k() {
        let pair = builtin_catalog("k", "divided_power:2").unwrap();
        let report = hovey_triple_report(&pair, 2, 0);
        assert!(
            report.all_pass(),
            "failing rows: {:?}",
            report.rows.iter().filter(|r| !r.pass).collect::<Vec<_>>()
        );
    }

    #[test]
    fn hovey_suite_on_truncpoly_pair() {
        let pair = builtin_catalog("truncpoly:2", "divided_power:2").unwrap();
        let report = hovey_triple_report(&pair, 2, 0);
        assert!(
            report.all_pass(),
            "failing rows: {:?}",
            report.rows.iter().filter(|r| !r.pass).collect::<Vec<_>>()
        );
    }

    #[test]
    fn semisimple_pair_is_skipped_with_warning() {
        let pair = builtin_catalog("k", "group:2:q").unwrap();
        let report = hovey_triple_report(&pair, 2, 0);
        assert!(report.semisimple_skip);
        assert!(report.all_pass());
    }

    #[test]
    fn contractible_pair_on_dp2() {
        let pair = builtin_catalog("k", "divided_power:2").unwrap();
        let report = contractible_pair_report(&pair, 5, 7);
        assert!(
            report.all_pass(),
            "failing rows: {:?}",
            report.rows.iter().filter(|r| !r.pass).collect::<Vec<_>>()
        );
    }
}

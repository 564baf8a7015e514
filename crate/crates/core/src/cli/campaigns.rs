use serde_json::{json, Value};

use crate::verify::{
    reduction_analysis, torsion_analysis, verify_bijection_conjecture, verify_binary_vt, verify_helberg_self,
    verify_image_correction, verify_inverse_correction, CampaignResult,
};
use crate::vt::conjecture1_scan;
use crate::{naisargik, symbol_map, Error, Limits, SymbolMap};

use super::output::{join, num, Output};
use super::{Campaign, Params};

pub fn run(campaign: Campaign, p: &Params, limits: &Limits) -> Result<Output, Error> {
    match campaign {
        Campaign::Thm1 => thm1(p, limits),
        Campaign::Thm2 => thm2(p, limits),
        Campaign::Conj1 => conj1(p, limits),
        Campaign::Conj2 => conj2(p, limits),
        Campaign::Reduction => reduction(p, limits),
        Campaign::Torsion => torsion(p, limits),
        Campaign::Vt1 => vt1(p, limits),
        Campaign::HelbergSelf => helberg_self(p, limits),
    }
}

fn single_map(p: &Params, default: &str) -> Result<SymbolMap, Error> {
    symbol_map(p.map.as_deref().unwrap_or(default))
}

const CAMPAIGN_HEADER: [&str; 8] = [
    "campaign",
    "n",
    "q",
    "s",
    "deletions",
    "max_codewords",
    "max_residues",
    "pass",
];

fn summary(r: &CampaignResult) -> Value {
    json!({
        "campaign": r.campaign,
        "n": r.n,
        "q": r.q,
        "s": r.s,
        "map": r.map,
        "deletions": r.deletions,
        "modulus": num(r.modulus),
        "nonempty_classes": r.cells.len(),
        "max_codewords": r.max_codewords,
        "max_residues": r.max_residues.iter().map(|&a| num(a)).collect::<Vec<_>>(),
        "pass": r.passed(),
        "counterexamples": r.counterexamples().collect::<Vec<_>>(),
    })
}

fn campaign_output(results: Vec<CampaignResult>) -> Output {
    let rows = results
        .iter()
        .map(|r| {
            vec![
                r.campaign.clone(),
                r.n.to_string(),
                r.q.to_string(),
                r.s.to_string(),
                r.deletions.to_string(),
                r.max_codewords.to_string(),
                join(&r.max_residues),
                r.passed().to_string(),
            ]
        })
        .collect();
    let witness = results
        .iter()
        .flat_map(|r| r.counterexamples().map(move |c| (r, c)))
        .next()
        .map(|(r, c)| json!({ "counterexample": { "campaign": r.campaign, "n": r.n, "s": r.s, "residue": num(c.residue), "report": c.report } }));
    let json = Value::Array(results.iter().map(summary).collect());
    Output::table(&CAMPAIGN_HEADER, rows)
        .with_json(json)
        .with_counterexample(witness)
}

fn thm1(p: &Params, limits: &Limits) -> Result<Output, Error> {
    let map = single_map(p, "phi9")?;
    let s = p.s.unwrap_or(1);
    let results = p
        .n_range(4, 4)?
        .map(|n| verify_image_correction(n, s, &map, limits))
        .collect::<Result<_, _>>()?;
    Ok(campaign_output(results))
}

fn thm2(p: &Params, limits: &Limits) -> Result<Output, Error> {
    let map = single_map(p, "phi9")?;
    let s = p.s.unwrap_or(2);
    let results = p
        .n_range(10, 10)?
        .map(|n| verify_inverse_correction(n, s, &map, limits))
        .collect::<Result<_, _>>()?;
    Ok(campaign_output(results))
}

fn vt1(p: &Params, limits: &Limits) -> Result<Output, Error> {
    let results = p
        .n_range(1, 10)?
        .map(|n| verify_binary_vt(n, limits))
        .collect::<Result<_, _>>()?;
    Ok(campaign_output(results))
}

fn helberg_self(p: &Params, limits: &Limits) -> Result<Output, Error> {
    let q = p.q.unwrap_or(4);
    let s = p.s.unwrap_or(1);
    let results = p
        .n_range(4, 4)?
        .map(|n| verify_helberg_self(n, q, s, limits))
        .collect::<Result<_, _>>()?;
    Ok(campaign_output(results))
}

fn conj1(p: &Params, limits: &Limits) -> Result<Output, Error> {
    let maps: Vec<SymbolMap> = match &p.map {
        Some(list) => list.split(',').map(symbol_map).collect::<Result<_, _>>()?,
        None => (1..=8)
            .map(|i| naisargik(&format!("phi{i}")))
            .collect::<Result<_, _>>()?,
    };
    let mut reports = Vec::new();
    for n in p.n_range(4, 4)? {
        for map in &maps {
            reports.push(conjecture1_scan(n, map, limits)?);
        }
    }
    let rows = reports
        .iter()
        .map(|r| {
            vec![
                r.map.clone(),
                r.n.to_string(),
                r.classes.to_string(),
                r.intersecting_pairs.to_string(),
                r.passed().to_string(),
            ]
        })
        .collect();
    let witness = reports
        .iter()
        .find_map(|r| r.counterexample.as_ref())
        .map(|c| json!({ "counterexample": c }));
    Ok(
        Output::table(&["map", "n", "classes", "intersecting_pairs", "pass"], rows)
            .with_json(json!(reports))
            .with_counterexample(witness),
    )
}

fn conj2(p: &Params, limits: &Limits) -> Result<Output, Error> {
    let map = single_map(p, "phi9")?;
    let mut rows = Vec::new();
    let mut reports = Vec::new();
    for n in p.n_range(4, 4)? {
        let report = verify_bijection_conjecture(n, &map, limits)?;
        for c in &report.cells {
            rows.push(vec![
                n.to_string(),
                c.a.to_string(),
                c.a_prime.to_string(),
                c.size.to_string(),
                c.binary_size.to_string(),
                c.consistent.to_string(),
                c.subset.to_string(),
                c.equal.to_string(),
            ]);
        }
        reports.push(report);
    }
    let witness = reports
        .iter()
        .flat_map(|r| r.cells.iter().map(move |c| (r.n, c)))
        .find(|(_, c)| !(c.consistent && c.subset))
        .map(|(n, c)| json!({ "counterexample": { "n": n, "cell": c } }));
    Ok(Output::table(
        &[
            "n",
            "a",
            "a_prime",
            "size",
            "binary_size",
            "consistent",
            "subset",
            "equal",
        ],
        rows,
    )
    .with_json(json!(reports))
    .with_counterexample(witness))
}

fn reduction(p: &Params, limits: &Limits) -> Result<Output, Error> {
    let n = p.n.unwrap_or(4);
    let q = p.q.unwrap_or(4);
    let s = p.s.unwrap_or(1);
    let deletions = p.deletions.unwrap_or(s + 1);
    let report = reduction_analysis(n, q, s, deletions, limits)?;
    let (passing, failing) = (report.passing(), report.failing());
    let rows = vec![vec![
        n.to_string(),
        q.to_string(),
        s.to_string(),
        deletions.to_string(),
        passing.len().to_string(),
        failing.len().to_string(),
    ]];
    // the claim is existential: some residue passes and some residue fails
    let witness = if passing.is_empty() || failing.is_empty() {
        Some(json!({ "counterexample": { "passing": passing.len(), "failing": failing.len() } }))
    } else {
        None
    };
    Ok(Output::table(&["n", "q", "s", "deletions", "passing", "failing"], rows)
        .with_json(json!({
            "n": n,
            "q": q,
            "s": s,
            "deletions": deletions,
            "passing": passing.iter().map(|&a| num(a)).collect::<Vec<_>>(),
            "failing": failing.iter().map(|&a| num(a)).collect::<Vec<_>>(),
        }))
        .with_counterexample(witness))
}

fn torsion(p: &Params, limits: &Limits) -> Result<Output, Error> {
    let n = p.n.unwrap_or(5);
    let q = p.q.unwrap_or(4);
    let s = p.s.unwrap_or(1);
    let report = torsion_analysis(n, q, s, limits)?;
    let nontrivial = report.nontrivial();
    let rows = vec![vec![
        n.to_string(),
        q.to_string(),
        s.to_string(),
        report.m.to_string(),
        report.max_torsion().to_string(),
        nontrivial.is_empty().to_string(),
    ]];
    let witness = nontrivial.first().map(|&a| {
        let cell = report
            .cells
            .iter()
            .find(|c| c.residue == a)
            .expect("residue from report");
        json!({ "counterexample": cell })
    });
    Ok(Output::table(&["n", "q", "s", "m", "max_torsion", "pass"], rows)
        .with_json(json!({
            "n": n,
            "q": q,
            "s": s,
            "m": num(report.m),
            "max_torsion": report.max_torsion(),
            "nontrivial": nontrivial.iter().map(|&a| num(a)).collect::<Vec<_>>(),
        }))
        .with_counterexample(witness))
}

//! Parameter sweeps over `(n, p)` grids, written as CSV or JSON.

use std::io::Write;
use std::ops::RangeInclusive;

use k0rep_core::ar::{k0_via_ar, orbit_vertex_count};
use k0rep_core::closed_forms::Method;
use k0rep_core::{k0_repetitive, predict, DynkinSpec, Family, FgAbelianGroup, K0Job};
use rayon::prelude::*;
use serde::Serialize;

#[derive(Clone, Debug)]
pub struct SweepSpec {
    pub family: Family,
    pub n_range: RangeInclusive<u64>,
    pub p_range: RangeInclusive<u64>,
    pub methods: Vec<Method>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Row {
    pub family: String,
    pub n: usize,
    pub p: u64,
    pub group: String,
    pub rank: Option<usize>,
    pub torsion: Option<Vec<String>>,
    pub source: String,
}

impl Row {
    fn new(
        spec: &DynkinSpec,
        p: u64,
        group: Option<&FgAbelianGroup>,
        missing: &str,
        source: String,
    ) -> Self {
        Row {
            family: spec.family().to_string(),
            n: spec.n(),
            p,
            group: group.map_or_else(|| missing.to_string(), ToString::to_string),
            rank: group.map(FgAbelianGroup::rank),
            torsion: group.map(|g| g.torsion().iter().map(ToString::to_string).collect()),
            source,
        }
    }
}

impl SweepSpec {
    /// Checks the ranges and the rank bounds of the family.
    pub fn validate(&self) -> Result<(), String> {
        if self.n_range.is_empty() || self.p_range.is_empty() {
            return Err("empty range".into());
        }
        if *self.p_range.start() == 0 {
            return Err("p must be positive".into());
        }
        if self.methods.is_empty() {
            return Err("no method selected".into());
        }
        let n = usize::try_from(*self.n_range.start()).map_err(|e| e.to_string())?;
        DynkinSpec::new(self.family, n).map_err(|e| e.to_string())?;
        Ok(())
    }

    fn cells(&self) -> Vec<(DynkinSpec, u64, Method)> {
        let mut out = Vec::new();
        for n in self.n_range.clone() {
            let spec = DynkinSpec::new(self.family, n as usize).expect("validated");
            for p in self.p_range.clone() {
                out.extend(self.methods.iter().map(|&m| (spec, p, m)));
            }
        }
        out
    }
}

fn cell(spec: &DynkinSpec, p: u64, method: Method, max_vertices: u64) -> Row {
    match method {
        Method::Snf => {
            let g = k0_repetitive(&K0Job::new(*spec, p).expect("p > 0"));
            Row::new(spec, p, Some(&g), "", "snf".into())
        }
        Method::Ar => {
            if orbit_vertex_count(spec, p) > max_vertices {
                return Row::new(spec, p, None, "skipped(budget)", "ar".into());
            }
            match k0_via_ar(spec, p) {
                Ok(g) => Row::new(spec, p, Some(&g), "", "ar".into()),
                Err(e) => Row::new(spec, p, None, "error", format!("ar: {e}")),
            }
        }
        Method::Predict => {
            let pr = predict(spec, p);
            let g = pr.resolved_group();
            Row::new(spec, p, g.as_ref(), "not covered", pr.source().to_string())
        }
    }
}

/// Runs every cell on the current rayon pool. Rows come back ordered by `n`,
/// then `p`, then method, whatever order the cells finish in.
pub fn run(spec: &SweepSpec, max_vertices: u64) -> Vec<Row> {
    spec.cells()
        .into_par_iter()
        .map(|(s, p, m)| cell(&s, p, m, max_vertices))
        .collect()
}

pub fn write_csv<W: Write>(rows: &[Row], out: W) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["family", "n", "p", "group", "rank", "torsion", "source"])?;
    for r in rows {
        w.write_record([
            r.family.clone(),
            r.n.to_string(),
            r.p.to_string(),
            r.group.replace('⊕', "+"),
            r.rank.map(|x| x.to_string()).unwrap_or_default(),
            r.torsion.as_ref().map(|t| t.join(" ")).unwrap_or_default(),
            r.source.clone(),
        ])?;
    }
    w.flush()?;
    Ok(())
}

pub fn write_json<W: Write>(rows: &[Row], mut out: W) -> std::io::Result<()> {
    serde_json::to_writer_pretty(&mut out, rows)?;
    out.write_all(b"\n")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(
        family: Family,
        n: RangeInclusive<u64>,
        p: RangeInclusive<u64>,
        methods: &[Method],
    ) -> SweepSpec {
        SweepSpec {
            family,
            n_range: n,
            p_range: p,
            methods: methods.to_vec(),
        }
    }

    #[test]
    fn a_grid_has_24_rows_in_order() {
        let s = spec(Family::A, 2..=4, 1..=8, &[Method::Snf]);
        s.validate().unwrap();
        let rows = run(&s, 20_000);
        assert_eq!(rows.len(), 24);
        let keys: Vec<(usize, u64)> = rows.iter().map(|r| (r.n, r.p)).collect();
        let mut sorted = keys.clone();
        sorted.sort_unstable();
        assert_eq!(keys, sorted);
        let a34 = rows.iter().find(|r| r.n == 3 && r.p == 4).unwrap();
        assert_eq!(a34.group, "Z^3");
    }

    #[test]
    fn d5_p8_is_free() {
        let rows = run(
            &spec(
                Family::D,
                5..=5,
                8..=8,
                &[Method::Snf, Method::Ar, Method::Predict],
            ),
            20_000,
        );
        assert_eq!(rows.len(), 3);
        assert!(rows.iter().all(|r| r.group == "Z^5"));
        assert_eq!(rows[2].source, "p ≡ 0 mod 2(n−1)");
    }

    #[test]
    fn csv_replaces_direct_sum() {
        let rows = run(&spec(Family::A, 3..=3, 2..=2, &[Method::Snf]), 20_000);
        let mut buf = Vec::new();
        write_csv(&rows, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(
            text,
            "family,n,p,group,rank,torsion,source\nA,3,2,Z + Z/2,1,2,snf\n"
        );
    }

    #[test]
    fn over_budget_ar_is_skipped() {
        let rows = run(&spec(Family::D, 6..=6, 8..=8, &[Method::Ar]), 10);
        assert_eq!(rows[0].group, "skipped(budget)");
        assert_eq!(rows[0].rank, None);
    }

    #[test]
    fn validation() {
        assert!(spec(Family::D, 2..=4, 1..=2, &[Method::Snf])
            .validate()
            .is_err());
        assert!(spec(Family::A, 1..=4, 0..=2, &[Method::Snf])
            .validate()
            .is_err());
        assert!(spec(Family::A, 1..=4, 1..=2, &[]).validate().is_err());
    }
}

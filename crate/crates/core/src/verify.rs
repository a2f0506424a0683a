//! Enumeration of link families and formula-versus-oracle records.

use std::io::Write;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::diagram::{DiagramError, OrientedDiagram, PdCode};
use crate::homfly::{morton_bounds_check, mwf_lower_bound, HomflyEngine, HomflyError};
use crate::montesinos::{braid_index_montesinos, MontesinosError, MontesinosPresentation};
use crate::rational::{
    braid_index_rational, odd_continued_fraction, orientations, Form, Fraction, OddCf,
    RationalError,
};
use crate::reduction::{
    check_base_equations, reduction_montesinos, reduction_rational, ReductionReport,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    /// Formula, oracle and reduction count all agree.
    Verified,
    /// Some check failed.
    Disagree,
    /// The diagram is above the oracle's crossing cap.
    FormulaOnly,
    /// The orientation fits none of the Montesinos classes; only the oracle
    /// value is reported.
    Inadmissible,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationRecord {
    pub presentation: String,
    pub orientation: String,
    pub crossings: usize,
    pub s: usize,
    pub w: i32,
    pub lone_crossings: usize,
    pub formula_b: Option<u32>,
    #[serde(rename = "homfly_E")]
    pub homfly_e_max: Option<i32>,
    #[serde(rename = "homfly_e")]
    pub homfly_e_min: Option<i32>,
    pub mwf_b: Option<u32>,
    pub r_plus: Option<u32>,
    pub r_minus: Option<u32>,
    pub morton_holds: Option<bool>,
    pub morton_tight: Option<bool>,
    pub base_equations_hold: Option<bool>,
    pub agree: bool,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub runtime_ms: Option<f64>,
    /// The diagram, kept only when a check failed.
    #[serde(skip)]
    pub dump: Option<PdCode>,
}

impl VerificationRecord {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("records serialize")
    }
}

#[derive(Debug, thiserror::Error)]
pub enum VerifyError {
    #[error(transparent)]
    Rational(#[from] RationalError),
    #[error(transparent)]
    Montesinos(#[from] MontesinosError),
    #[error(transparent)]
    Homfly(#[from] HomflyError),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// All fractions whose odd continued fraction has entry sum at most
/// `max_crossings`, ordered by (crossings, α, β).
pub fn enumerate_rational(max_crossings: u32) -> Vec<Fraction> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    compositions(max_crossings, &mut cur, &mut |entries| {
        if entries.len() % 2 == 1 && entries != [1] {
            out.push((
                entries.iter().sum::<u32>(),
                OddCf::new(entries.to_vec()).expect("odd").value(),
            ));
        }
    });
    out.sort();
    out.dedup();
    out.into_iter().map(|(_, f)| f).collect()
}

fn compositions(budget: u32, cur: &mut Vec<u32>, f: &mut dyn FnMut(&[u32])) {
    if !cur.is_empty() {
        f(cur);
    }
    for a in 1..=budget {
        cur.push(a);
        compositions(budget - a, cur, f);
        cur.pop();
    }
}

/// Presentations with `2..=max_tangles` tangles and at most
/// `max_crossings` crossings, ordered by (crossings, k, fractions, e).
pub fn enumerate_montesinos(max_crossings: u32, max_tangles: usize) -> Vec<MontesinosPresentation> {
    let fractions: Vec<(u32, Fraction)> = enumerate_rational(max_crossings)
        .into_iter()
        .map(|f| (odd_continued_fraction(f).crossing_count(), f))
        .collect();
    let mut out = Vec::new();
    let mut cur = Vec::new();
    tuples(
        &fractions,
        max_crossings,
        max_tangles,
        0,
        &mut cur,
        &mut out,
    );
    out.sort_by_key(|(c, p)| (*c, p.tangles.len(), p.tangles.clone(), p.e));
    out.into_iter().map(|(_, p)| p).collect()
}

fn tuples(
    fractions: &[(u32, Fraction)],
    max: u32,
    max_tangles: usize,
    used: u32,
    cur: &mut Vec<Fraction>,
    out: &mut Vec<(u32, MontesinosPresentation)>,
) {
    if cur.len() >= 2 {
        for e in 0..=max - used {
            out.push((
                used + e,
                MontesinosPresentation::new(cur.clone(), e).expect("k >= 2"),
            ));
        }
    }
    if cur.len() == max_tangles {
        return;
    }
    for &(c, f) in fractions {
        if used + c <= max {
            cur.push(f);
            tuples(fractions, max, max_tangles, used + c, cur, out);
            cur.pop();
        }
    }
}

struct Check<'a> {
    presentation: String,
    orientation: String,
    diagram: &'a OrientedDiagram,
    formula_b: Option<u32>,
    reduction: Option<ReductionReport>,
}

fn check(
    engine: &HomflyEngine,
    c: Check<'_>,
    timings: bool,
) -> Result<VerificationRecord, VerifyError> {
    let start = Instant::now();
    let d = c.diagram;
    let sd = d.seifert_decompose()?;
    let mut rec = VerificationRecord {
        presentation: c.presentation,
        orientation: c.orientation,
        crossings: d.crossing_count(),
        s: sd.circle_count(),
        w: d.writhe(),
        lone_crossings: sd.graph().lone_edges().count(),
        formula_b: c.formula_b,
        homfly_e_max: None,
        homfly_e_min: None,
        mwf_b: None,
        r_plus: c.reduction.as_ref().map(|r| r.r_plus),
        r_minus: c.reduction.as_ref().map(|r| r.r_minus),
        morton_holds: None,
        morton_tight: None,
        base_equations_hold: None,
        agree: false,
        status: Status::FormulaOnly,
        runtime_ms: None,
        dump: None,
    };
    let h = match engine.homfly(d) {
        Ok(h) => h,
        Err(HomflyError::CapExceeded { .. }) => return Ok(rec),
        Err(e) => return Err(e.into()),
    };
    let ex = h.a_extremes().map_err(HomflyError::from)?;
    let mwf = mwf_lower_bound(&h)? as u32;
    rec.homfly_e_max = Some(ex.e_max);
    rec.homfly_e_min = Some(ex.e_min);
    rec.mwf_b = Some(mwf);
    let morton = morton_bounds_check(d, &h);
    rec.morton_holds = Some(morton.is_ok());
    rec.morton_tight = morton.as_ref().ok().map(|m| m.tight());
    match (&c.reduction, c.formula_b) {
        (Some(r), Some(b)) => {
            let be = check_base_equations(d, ex.e_max as i64, ex.e_min as i64, r.r_plus, r.r_minus);
            rec.base_equations_hold = Some(be.hold());
            rec.agree = b == mwf
                && rec.s as i64 - r.r_total as i64 == b as i64
                && be.hold()
                && morton.is_ok();
            rec.status = if rec.agree {
                Status::Verified
            } else {
                Status::Disagree
            };
        }
        _ => {
            rec.agree = morton.is_ok();
            rec.status = if rec.agree {
                Status::Inadmissible
            } else {
                Status::Disagree
            };
        }
    }
    if rec.status == Status::Disagree {
        rec.dump = Some(d.to_pd());
    }
    if timings {
        rec.runtime_ms = Some(start.elapsed().as_secs_f64() * 1e3);
    }
    Ok(rec)
}

/// Records for every orientation of `b(α, β)`.
pub fn cross_check_rational(
    engine: &HomflyEngine,
    f: Fraction,
    timings: bool,
) -> Result<Vec<VerificationRecord>, VerifyError> {
    let cf = odd_continued_fraction(f);
    orientations(&cf)?
        .iter()
        .map(|o| {
            let b = braid_index_rational(&o.signed, Form::Standard)?;
            check(
                engine,
                Check {
                    presentation: format!("b({},{})", f.alpha, f.beta),
                    orientation: format!("{} {}", o.choice, o.signed),
                    diagram: &o.diagram.diagram,
                    formula_b: Some(b),
                    reduction: Some(reduction_rational(&o.signed)),
                },
                timings,
            )
        })
        .collect()
}

/// Records for every orientation of a Montesinos presentation.
pub fn cross_check_montesinos(
    engine: &HomflyEngine,
    p: &MontesinosPresentation,
    timings: bool,
) -> Result<Vec<VerificationRecord>, VerifyError> {
    let r = braid_index_montesinos(p)?;
    let mut out = Vec::new();
    for o in &r.orientations {
        out.push((
            o.choice,
            check(
                engine,
                Check {
                    presentation: p.to_string(),
                    orientation: format!("{} {}", o.choice, o.class.class),
                    diagram: &o.diagram.diagram,
                    formula_b: Some(o.braid_index),
                    reduction: Some(reduction_montesinos(o, p.e)),
                },
                timings,
            )?,
        ));
    }
    for o in &r.inadmissible {
        out.push((
            o.choice,
            check(
                engine,
                Check {
                    presentation: p.to_string(),
                    orientation: format!("{} inadmissible", o.choice),
                    diagram: &o.diagram.diagram,
                    formula_b: None,
                    reduction: None,
                },
                timings,
            )?,
        ));
    }
    out.sort_by_key(|(c, _)| *c);
    Ok(out.into_iter().map(|(_, r)| r).collect())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Rational,
    Montesinos,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub records: usize,
    pub verified: usize,
    pub disagree: usize,
    pub formula_only: usize,
    pub inadmissible: usize,
}

impl Summary {
    pub fn add(&mut self, r: &VerificationRecord) {
        self.records += 1;
        match r.status {
            Status::Verified => self.verified += 1,
            Status::Disagree => self.disagree += 1,
            Status::FormulaOnly => self.formula_only += 1,
            Status::Inadmissible => self.inadmissible += 1,
        }
    }
}

/// Every record of a family, in enumeration order. Work is spread over the
/// current rayon pool; the order does not depend on it.
pub fn run_family(
    engine: &HomflyEngine,
    family: Family,
    max_crossings: u32,
    max_tangles: usize,
    timings: bool,
) -> Result<Vec<VerificationRecord>, VerifyError> {
    let chunks: Vec<Vec<VerificationRecord>> = match family {
        Family::Rational => enumerate_rational(max_crossings)
            .into_par_iter()
            .map(|f| cross_check_rational(engine, f, timings))
            .collect::<Result<_, _>>()?,
        Family::Montesinos => enumerate_montesinos(max_crossings, max_tangles)
            .into_par_iter()
            .map(|p| cross_check_montesinos(engine, &p, timings))
            .collect::<Result<_, _>>()?,
    };
    Ok(chunks.into_iter().flatten().collect())
}

/// Writes records as JSON lines and tallies them.
pub fn write_report(
    records: &[VerificationRecord],
    out: &mut dyn Write,
) -> std::io::Result<Summary> {
    let mut summary = Summary::default();
    for r in records {
        writeln!(out, "{}", r.to_json())?;
        summary.add(r);
    }
    Ok(summary)
}

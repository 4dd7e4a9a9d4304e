//! JSON report for the `analyze` command.

use serde_json::{json, Value};

use super::inflection::line_factors;
use super::{Foliation, Line};
use crate::error::FoliationError;

#[derive(Clone, Debug, PartialEq)]
pub struct AnalysisReport(pub Value);

impl Foliation {
    pub fn analyze(&self) -> Result<AnalysisReport, FoliationError> {
        let sing = self.singular_points()?;
        // invariant lines over the field; whatever does not split is reported as is
        let parts = if self.degree() > 0 { Some(self.inflection_parts()?) } else { None };
        let (inv, unsplit_inv) = match &parts {
            Some((inv_part, _)) => {
                let lf = line_factors(inv_part)?;
                let rest = if lf.rest.is_constant() { Value::Null } else { Value::String(lf.rest.to_string()) };
                (lf.lines, rest)
            }
            None => (Vec::new(), Value::Null),
        };
        let lines: Vec<Line> = inv.iter().map(|(l, _)| l.clone()).filter(|l| self.is_invariant_line(l)).collect();
        let mut sj = Vec::new();
        for s in &sing.points {
            let rep = self.singularity_report(s)?;
            let mut cs = Vec::new();
            for l in lines.iter().filter(|l| l.contains(s)) {
                if let Ok(v) = self.camacho_sad(l, s) {
                    cs.push(json!({"line": l.to_string(), "value": v.to_string()}));
                }
            }
            sj.push(json!({
                "point": s.to_string(),
                "nu": rep.nu,
                "tau": rep.tau,
                "milnor": rep.milnor,
                "bb": rep.baum_bott.map(|b| b.to_string()),
                "cs": cs,
            }));
        }
        let (convex, inflection) = match &parts {
            Some((_, tr)) => {
                let invj: Vec<Value> = inv.iter().map(|(l, k)| json!({"line": l.to_string(), "order": k})).collect();
                let trj: Vec<Value> = tr.iter().map(|(f, k)| json!({"factor": f.to_string(), "order": k})).collect();
                (Value::Bool(tr.is_empty()), json!({"inv": invj, "inv_unsplit": unsplit_inv, "tr": trj}))
            }
            None => (Value::Null, Value::Null),
        };
        Ok(AnalysisReport(json!({
            "degree": self.degree(),
            "singularities": sj,
            "unsplit": sing.residual.iter().map(|f| f.to_string()).collect::<Vec<_>>(),
            "invariant_lines": lines.iter().map(|l| l.to_string()).collect::<Vec<_>>(),
            "convex": convex,
            "inflection": inflection,
        })))
    }
}

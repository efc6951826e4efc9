use crate::graph::{to_graph6, Graph};
use crate::spectral::RadiusEnclosure;
use serde::{Deserialize, Serialize};
use std::time::Duration;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    NotApplicable,
    OutOfScope,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::NotApplicable => "not-applicable",
            Status::OutOfScope => "out-of-scope",
        }
    }
}

/// A graph or parameter set attached to a report, with whatever was
/// measured on it.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Witness {
    pub label: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub graph6: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rho: Option<RadiusEnclosure>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl Witness {
    pub fn new(label: impl Into<String>) -> Self {
        Witness {
            label: label.into(),
            ..Default::default()
        }
    }

    pub fn graph(mut self, g: &Graph) -> Self {
        self.graph6 = Some(to_graph6(g));
        self
    }

    pub fn graph6(mut self, s: impl Into<String>) -> Self {
        self.graph6 = Some(s.into());
        self
    }

    pub fn rho(mut self, r: RadiusEnclosure) -> Self {
        self.rho = Some(r);
        self
    }

    pub fn detail(mut self, d: impl Into<String>) -> Self {
        self.detail = Some(d.into());
        self
    }
}

/// Outcome of one claim check. A failed report always carries at least one
/// counterexample.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub claim_id: String,
    pub n_range: Vec<usize>,
    pub status: Status,
    pub witnesses: Vec<Witness>,
    pub counterexamples: Vec<Witness>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl VerificationReport {
    pub fn new(claim_id: impl Into<String>, n_range: Vec<usize>) -> Self {
        VerificationReport {
            claim_id: claim_id.into(),
            n_range,
            status: Status::Pass,
            witnesses: Vec::new(),
            counterexamples: Vec::new(),
            elapsed: Duration::ZERO,
        }
    }

    pub fn marked(
        claim_id: impl Into<String>,
        n_range: Vec<usize>,
        status: Status,
        why: &str,
    ) -> Self {
        let mut r = Self::new(claim_id, n_range);
        r.status = status;
        r.witnesses.push(Witness::new("reason").detail(why));
        r
    }

    pub fn witness(&mut self, w: Witness) {
        self.witnesses.push(w);
    }

    pub fn fail(&mut self, w: Witness) {
        self.status = Status::Fail;
        self.counterexamples.push(w);
    }

    /// Records `w` as a witness when `ok`, as a counterexample otherwise.
    pub fn check(&mut self, ok: bool, w: Witness) {
        if ok {
            self.witness(w)
        } else {
            self.fail(w)
        }
    }

    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("reports serialise")
    }

    /// `claim_id,n,status,rho_lo,rho_hi` rows, one per tested `n`; the
    /// enclosure is taken from the first witness that has one.
    pub fn csv_rows(&self) -> Vec<String> {
        // a report spanning several orders has no single radius to show
        let single = self.n_range.len() <= 1;
        let (lo, hi) = self
            .witnesses
            .iter()
            .chain(&self.counterexamples)
            .find_map(|w| w.rho.as_ref())
            .filter(|_| single)
            .map(|r| {
                (
                    crate::spectral::rational_string(&r.lo),
                    crate::spectral::rational_string(&r.hi),
                )
            })
            .unwrap_or_default();
        let ns: Vec<String> = if self.n_range.is_empty() {
            vec![String::new()]
        } else {
            self.n_range.iter().map(usize::to_string).collect()
        };
        ns.into_iter()
            .map(|n| {
                format!(
                    "{},{},{},{},{}",
                    self.claim_id,
                    n,
                    self.status.as_str(),
                    lo,
                    hi
                )
            })
            .collect()
    }
}

fn xml_escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
        .replace('"', "&quot;")
}

/// JUnit XML with one test case per report.
pub fn to_junit(reports: &[VerificationReport]) -> String {
    let failures = reports.iter().filter(|r| r.status == Status::Fail).count();
    let skipped = reports
        .iter()
        .filter(|r| matches!(r.status, Status::NotApplicable | Status::OutOfScope))
        .count();
    let mut out = format!(
        "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n<testsuite name=\"verify\" tests=\"{}\" failures=\"{failures}\" skipped=\"{skipped}\">\n",
        reports.len()
    );
    for r in reports {
        let ns: Vec<String> = r.n_range.iter().map(usize::to_string).collect();
        let name = if ns.is_empty() {
            r.claim_id.clone()
        } else {
            format!("{} n={}", r.claim_id, ns.join(","))
        };
        out.push_str(&format!(
            "  <testcase classname=\"{}\" name=\"{}\" time=\"{:.3}\">",
            xml_escape(&r.claim_id),
            xml_escape(&name),
            r.elapsed.as_secs_f64()
        ));
        match r.status {
            Status::Fail => {
                let body: Vec<String> = r
                    .counterexamples
                    .iter()
                    .map(|w| serde_json::to_string(w).unwrap_or_default())
                    .collect();
                out.push_str(&format!(
                    "<failure message=\"{} counterexample(s)\">{}</failure>",
                    r.counterexamples.len(),
                    xml_escape(&body.join("\n"))
                ));
            }
            Status::NotApplicable | Status::OutOfScope => {
                out.push_str(&format!("<skipped message=\"{}\"/>", r.status.as_str()));
            }
            Status::Pass => {}
        }
        out.push_str("</testcase>\n");
    }
    out.push_str("</testsuite>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_shape_is_stable() {
        let mut r = VerificationReport::new("demo", vec![9]);
        r.witness(Witness::new("x").detail("ok"));
        r.elapsed = Duration::from_secs(3);
        assert_eq!(
            r.to_json_line(),
            r#"{"claim_id":"demo","n_range":[9],"status":"pass","witnesses":[{"label":"x","detail":"ok"}],"counterexamples":[]}"#
        );
        r.check(false, Witness::new("bad"));
        assert_eq!(r.status, Status::Fail);
        assert_eq!(r.csv_rows(), vec!["demo,9,fail,,".to_string()]);
    }

    #[test]
    fn junit_marks_failures() {
        let mut bad = VerificationReport::new("a&b", vec![]);
        bad.fail(Witness::new("<x>"));
        let na = VerificationReport::marked("c", vec![3], Status::NotApplicable, "small");
        let xml = to_junit(&[bad, na]);
        assert!(xml.contains("failures=\"1\" skipped=\"1\""));
        assert!(xml.contains("a&amp;b"));
        assert!(xml.contains("&lt;x&gt;"));
    }
}

//! Machine-readable artifacts of a compute run.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::engine::{e_infinity, EInfEntry, SsResult};
use crate::monomial::{Monomial, SpectrumSpec, Tridegree, Window};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KillDoc {
    pub source: Monomial,
    pub target: Monomial,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PageDoc {
    pub r: u32,
    pub kills: Vec<KillDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Disagreement {
    pub tridegree: String,
    pub matching: usize,
    pub linalg: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossCheck {
    pub compared: usize,
    pub disagreements: Vec<Disagreement>,
}

/// The JSON document written by `compute`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComputeDocument {
    pub spec: SpectrumSpec,
    pub window: Window,
    pub inflated_window: Window,
    pub backend: String,
    pub pages: Vec<PageDoc>,
    /// Keyed by `"p,q,w"`.
    pub einf: BTreeMap<String, EInfEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub crosscheck: Option<CrossCheck>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timestamp: Option<u64>,
}

impl ComputeDocument {
    pub fn new(res: &SsResult, backend: &str) -> Self {
        let report = e_infinity(res);
        let mut pages: BTreeMap<u32, Vec<KillDoc>> = res.pages.iter().map(|&r| (r, Vec::new())).collect();
        for k in &res.kills {
            let touches = res.window.contains(k.source.tridegree()) || res.window.contains(k.target.tridegree());
            if touches {
                pages.entry(k.page).or_default().push(KillDoc {
                    source: k.source.clone(),
                    target: k.target.clone(),
                });
            }
        }
        Self {
            spec: res.spec,
            window: res.window,
            inflated_window: res.inflated,
            backend: backend.to_string(),
            pages: pages.into_iter().map(|(r, kills)| PageDoc { r, kills }).collect(),
            einf: report.entries.into_iter().map(|(t, e)| (t.key(), e)).collect(),
            crosscheck: None,
            timestamp: None,
        }
    }

    /// `dim E∞` per tridegree.
    pub fn dims(&self) -> BTreeMap<Tridegree, usize> {
        self.einf
            .iter()
            .map(|(k, e)| (k.parse().expect("keys are written as p,q,w"), e.dim))
            .collect()
    }
}

/// Compares two runs on every tridegree certified in both.
pub fn cross_check(matching: &SsResult, linalg: &SsResult) -> CrossCheck {
    let mut out = CrossCheck::default();
    for (&t, cell) in &matching.cells {
        if !matching.window.contains(t) || !cell.certified || !linalg.certified(t) {
            continue;
        }
        out.compared += 1;
        let (m, l) = (cell.dim(), linalg.dim(t));
        if m != l {
            out.disagreements.push(Disagreement {
                tridegree: t.key(),
                matching: m,
                linalg: l,
            });
        }
    }
    out
}

/// One row per tridegree: `p q w dim certified`, tab separated.
pub fn to_tsv(doc: &ComputeDocument) -> String {
    let mut out = String::from("p\tq\tw\tdim\tcertified\n");
    for (t, dim) in doc.dims() {
        let certified = doc.einf[&t.key()].certified;
        writeln!(out, "{}\t{}\t{}\t{}\t{}", t.p, t.q, t.w, dim, certified).unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::{run_linalg, run_matching};
    use proptest::prelude::*;

    #[test]
    fn json_keys() {
        let res = run_matching(SpectrumSpec::bp2(), &Window::new(0, 0, 0, 0, 0).unwrap());
        let v = serde_json::to_value(ComputeDocument::new(&res, "matching")).unwrap();
        for key in ["spec", "window", "backend", "pages", "einf"] {
            assert!(v.get(key).is_some(), "{key}");
        }
        assert_eq!(v["einf"]["0,0,0"]["dim"], 1);
        assert_eq!(v["einf"]["0,0,0"]["reps"][0][0], serde_json::json!({"a":0,"b":0,"e":{}}));
        assert_eq!(v["einf"]["0,0,0"]["certified"], true);
        assert_eq!(v["spec"], "bp2");
    }

    #[test]
    fn tsv_rows() {
        let res = run_matching(SpectrumSpec::kgl2(), &Window::new(0, 2, 2, 0, 0).unwrap());
        let tsv = to_tsv(&ComputeDocument::new(&res, "matching"));
        let lines: Vec<&str> = tsv.lines().collect();
        assert_eq!(lines[0], "p\tq\tw\tdim\tcertified");
        assert!(lines.contains(&"2\t1\t0\t1\ttrue"));
        assert!(lines.contains(&"2\t2\t0\t1\ttrue"));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]
        #[test]
        fn json_round_trip_preserves_dims(n in 0u32..3, p0 in -6i64..6, dp in 0i64..6, q in 0i64..5, w0 in -6i64..2, dw in 0i64..3) {
            let spec = if n == 0 { SpectrumSpec::Bp } else { SpectrumSpec::Truncated(n) };
            let win = Window::new(p0, p0 + dp, q, w0, w0 + dw).unwrap();
            for res in [run_matching(spec, &win), run_linalg(spec, &win).unwrap()] {
                let doc = ComputeDocument::new(&res, "x");
                let text = serde_json::to_string(&doc).unwrap();
                let back: ComputeDocument = serde_json::from_str(&text).unwrap();
                prop_assert_eq!(back.dims(), res.dims());
                prop_assert_eq!(&back, &doc);
            }
        }
    }
}

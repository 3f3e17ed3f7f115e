use std::fmt;

use serde::Serialize;

use crate::algebra::{MultiPoly, ScaledPoly};
use crate::error::{Error, Result};
use crate::graph::MultiGraph;

/// How a polynomial was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Route {
    Expansion,
    Recursion,
    Arrangement,
    Interpolation,
    BruteForce,
}

impl Route {
    pub fn name(self) -> &'static str {
        match self {
            Route::Expansion => "expansion",
            Route::Recursion => "recursion",
            Route::Arrangement => "arrangement",
            Route::Interpolation => "interpolation",
            Route::BruteForce => "brute_force",
        }
    }

    fn from_name(s: &str) -> Option<Route> {
        [
            Route::Expansion,
            Route::Recursion,
            Route::Arrangement,
            Route::Interpolation,
            Route::BruteForce,
        ]
        .into_iter()
        .find(|r| r.name() == s)
    }
}

/// A computed invariant together with its provenance. Polynomials with
/// rational coefficients carry their common denominator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolynomialReport {
    pub name: String,
    pub poly: ScaledPoly,
    pub route: Route,
    /// Graph fingerprint, or the input file name when one is known.
    pub graph: String,
}

impl PolynomialReport {
    pub fn new(name: &str, poly: impl Into<ScaledPoly>, route: Route, g: &MultiGraph) -> Self {
        PolynomialReport {
            name: name.to_string(),
            poly: poly.into(),
            route,
            graph: g.fingerprint(),
        }
    }

    /// `{"invariant", "graph", "poly", "route"}`, plus `"denominator"` when
    /// it is not 1.
    pub fn to_json(&self) -> serde_json::Value {
        let mut v = serde_json::json!({
            "invariant": self.name,
            "graph": self.graph,
            "poly": self.poly.numerator().to_json(),
            "route": self.route.name(),
        });
        if !num_traits::One::is_one(self.poly.denominator()) {
            v["denominator"] = serde_json::Value::String(self.poly.denominator().to_string());
        }
        v
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let bad = |m: &str| Error::InvalidArgument(format!("report JSON: {m}"));
        let text = |k: &str| v.get(k).and_then(|x| x.as_str()).ok_or_else(|| bad(k));
        let numerator = MultiPoly::from_json(v.get("poly").ok_or_else(|| bad("poly"))?)?;
        let denominator = match v.get("denominator") {
            None => num_bigint::BigInt::from(1),
            Some(d) => d
                .as_str()
                .and_then(|d| d.parse().ok())
                .ok_or_else(|| bad("denominator"))?,
        };
        Ok(PolynomialReport {
            name: text("invariant")?.to_string(),
            poly: ScaledPoly::new(numerator, denominator)?,
            route: Route::from_name(text("route")?).ok_or_else(|| bad("route"))?,
            graph: text("graph")?.to_string(),
        })
    }
}

/// One checked assertion.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckItem {
    pub label: String,
    pub passed: bool,
    /// Witness or summary; for failures this names the offending data.
    pub detail: String,
}

/// Outcome of a verification suite on one graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub suite: String,
    pub graph: String,
    pub items: Vec<CheckItem>,
    /// Observations that are recorded but not asserted.
    pub notes: Vec<String>,
}

impl CheckReport {
    pub fn new(suite: &str, g: &MultiGraph) -> Self {
        CheckReport {
            suite: suite.to_string(),
            graph: g.fingerprint(),
            items: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn check(&mut self, label: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.items.push(CheckItem {
            label: label.into(),
            passed,
            detail: detail.into(),
        });
    }

    /// Records `left == right`, printing both sides on failure.
    pub fn equal<T: PartialEq + fmt::Display>(&mut self, label: impl Into<String>, left: &T, right: &T) {
        let passed = left == right;
        let detail = if passed {
            left.to_string()
        } else {
            format!("{left} != {right}")
        };
        self.check(label, passed, detail);
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    pub fn passed(&self) -> bool {
        self.items.iter().all(|i| i.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckItem> {
        self.items.iter().filter(|i| !i.passed)
    }

    pub fn absorb(&mut self, other: CheckReport) {
        self.items.extend(other.items);
        self.notes.extend(other.notes);
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let failed = self.failures().count();
        writeln!(
            f,
            "{} on {}: {} checks, {} failed",
            self.suite,
            self.graph,
            self.items.len(),
            failed
        )?;
        for item in self.failures() {
            writeln!(f, "  FAIL {}: {}", item.label, item.detail)?;
        }
        for note in &self.notes {
            writeln!(f, "  note: {note}")?;
        }
        Ok(())
    }
}

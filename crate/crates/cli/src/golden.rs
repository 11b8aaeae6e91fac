//! Worked examples stored as fixtures and replayed against the library.

use std::path::{Path, PathBuf};

use chordal::sieving::{f_poly, g_poly, h_poly};
use chordal::virtualize::{iota, Embedding};
use chordal::{chord_matrix, growth_diagram, promote, ChordMap, Family, TableauSeq};
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::CliError;

#[derive(Deserialize)]
#[serde(tag = "check", rename_all = "snake_case")]
enum Check {
    /// The tableau followed by its first n promotions.
    Orbit,
    Chord {
        map: ChordMap,
    },
    Embed {
        embedding: Embedding,
        promotions: usize,
    },
    /// Growth diagram anti-diagonals, shortest first.
    Growth,
    Polynomial {
        poly: String,
        n: usize,
    },
}

#[derive(Deserialize)]
struct Fixture {
    name: String,
    family: Family,
    r: usize,
    #[serde(default)]
    tableau: Option<String>,
    #[serde(flatten)]
    check: Check,
    expected: Value,
}

#[derive(Serialize)]
pub struct GoldenResult {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub got: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expected: Option<Value>,
}

pub fn default_path() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures").join("golden.json")
}

fn compact(ts: &[TableauSeq]) -> Value {
    Value::from(ts.iter().map(|t| t.compact()).collect::<Vec<_>>())
}

fn compute(fx: &Fixture) -> Result<Value, String> {
    let e = |x: &dyn std::fmt::Display| x.to_string();
    let tableau = || -> Result<TableauSeq, String> {
        let s = fx.tableau.as_deref().ok_or("fixture has no tableau")?;
        TableauSeq::parse_compact(fx.family, fx.r, s).map_err(|x| e(&x))
    };
    Ok(match &fx.check {
        Check::Orbit => {
            let mut t = tableau()?;
            let mut seen = vec![t.clone()];
            for _ in 0..t.len() {
                t = promote(&t).map_err(|x| e(&x))?;
                seen.push(t.clone());
            }
            compact(&seen)
        }
        Check::Chord { map } => {
            serde_json::to_value(chord_matrix(*map, &tableau()?).map_err(|x| e(&x))?).map_err(|x| e(&x))?
        }
        Check::Embed { embedding, promotions } => {
            let mut t = tableau()?;
            for _ in 0..*promotions {
                t = promote(&t).map_err(|x| e(&x))?;
            }
            Value::from(iota(*embedding, &t).map_err(|x| e(&x))?.compact())
        }
        Check::Growth => {
            let t = tableau()?;
            let width = t.rank;
            let mut d = growth_diagram(&t).map_err(|x| e(&x))?.diagonals(width);
            d.reverse();
            Value::from(d)
        }
        Check::Polynomial { poly, n } => {
            let p = match poly.as_str() {
                "f" => f_poly(fx.family, fx.r, *n),
                "g" => g_poly(*n, fx.r),
                "h" => h_poly(*n, fx.r),
                other => return Err(format!("unknown polynomial {other:?}")),
            }
            .map_err(|x| e(&x))?;
            serde_json::to_value(p).map_err(|x| e(&x))?
        }
    })
}

pub fn replay(path: &Path) -> Result<Vec<GoldenResult>, CliError> {
    let text = std::fs::read_to_string(path)?;
    let fixtures: Vec<Fixture> = serde_json::from_str(&text)?;
    Ok(fixtures
        .iter()
        .map(|fx| {
            let got = compute(fx).unwrap_or_else(|err| Value::from(format!("error: {err}")));
            let passed = got == fx.expected;
            GoldenResult {
                name: fx.name.clone(),
                passed,
                got: (!passed).then_some(got),
                expected: (!passed).then(|| fx.expected.clone()),
            }
        })
        .collect())
}

pub fn render(results: &[GoldenResult]) -> String {
    let mut out = String::new();
    for r in results {
        out.push_str(&format!("{} {}\n", if r.passed { "PASS" } else { "FAIL" }, r.name));
        if let (Some(g), Some(x)) = (&r.got, &r.expected) {
            out.push_str(&format!("  got:      {g}\n  expected: {x}\n"));
        }
    }
    out
}

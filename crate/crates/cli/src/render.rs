//! Plain-text renderers for terminal output.

use chordal::sieving::CspReport;
use chordal::verify::SuiteReport;
use chordal::FilledMatrix;

/// Right-aligned grid with zeros shown as dots.
pub fn matrix(m: &FilledMatrix) -> String {
    let width = m.entries.iter().flatten().map(|x| x.to_string().len()).max().unwrap_or(1);
    m.entries
        .iter()
        .map(|row| {
            let cells: Vec<String> = row
                .iter()
                .map(|&x| {
                    let s = if x == 0 { ".".to_string() } else { x.to_string() };
                    format!("{s:>width$}")
                })
                .collect();
            format!("{}\n", cells.join(" "))
        })
        .collect()
}

/// One chord per line, vertices numbered from 1.
pub fn chords(m: &FilledMatrix) -> String {
    m.chords().into_iter().map(|(i, j, k)| format!("{i}--{j} x{k}\n")).collect()
}

pub fn growth(diagonals: &[String], m: &FilledMatrix, round_trip: bool) -> String {
    let mut out: String = diagonals.iter().map(|d| format!("{d}\n")).collect();
    out.push('\n');
    out.push_str(&matrix(m));
    out.push_str(&format!("round trip: {}\n", if round_trip { "ok" } else { "FAILED" }));
    out
}

pub fn suite(rep: &SuiteReport) -> String {
    let name = serde_json::to_value(rep.suite).ok().and_then(|v| v.as_str().map(str::to_string)).unwrap_or_default();
    let mut out = format!("{} {name}: {} checked\n", if rep.passed { "PASS" } else { "FAIL" }, rep.checked);
    for c in &rep.counterexamples {
        out.push_str(&format!("  {c}\n"));
    }
    out
}

pub fn csp(rep: &CspReport) -> String {
    let mut out = format!(
        "{} (order {})\norbit sizes: {:?}\nresidue:  {:?}\nexpected: {:?}\n",
        if rep.holds { "holds" } else { "fails" },
        rep.order,
        rep.orbit_sizes,
        rep.residue,
        rep.expected_residue
    );
    if let Some(d) = rep.first_mismatch_d {
        out.push_str(&format!("first mismatch at d = {d}\n"));
    }
    out
}

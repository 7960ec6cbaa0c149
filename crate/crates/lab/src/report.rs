//! Class reports and their JSON/CSV forms.

use std::fs;
use std::io;
use std::path::Path;

use qschur::omega::small_integer;
use qschur::{Composition, OmegaElem};
use serde_json::{json, Value};

use crate::classes::{conjecture_check, EqualityClass, Verdict};
use crate::config::{Format, RunConfig};

#[derive(Clone, Debug)]
pub struct ClassReport {
    pub n: u32,
    pub classes: Vec<EqualityClass>,
    /// Move-closure components, same ordering conventions as `classes`.
    pub closure_classes: Vec<Vec<Composition>>,
    pub verdict: Verdict,
    pub notes: Vec<String>,
}

pub fn build_report(n: u32) -> ClassReport {
    let (classes, closure, verdict) = conjecture_check(n);
    let mut notes = Vec::new();
    if n == 8 {
        notes.push(discrepancy_note(&classes));
    }
    for (a, b) in &verdict.equal_not_connected {
        notes.push(format!("equal but not connected by moves: {a} and {b}"));
    }
    for t in &verdict.connected_not_equal {
        notes.push(format!("unsound move: {t}"));
    }
    ClassReport { n, classes, closure_classes: closure.components, verdict, notes }
}

fn class_containing<'a>(classes: &'a [EqualityClass], alpha: &Composition) -> &'a EqualityClass {
    classes
        .iter()
        .find(|c| c.members.contains(alpha))
        .expect("classes partition all compositions")
}

/// Whether `r_{1511} = r_{3311}` (and `r_{1412} = r_{3311}`), read off the
/// computed classes at size 8.
pub fn discrepancy_note(classes: &[EqualityClass]) -> String {
    let c = |s: &str| -> Composition { s.parse().expect("literal") };
    let home = class_containing(classes, &c("3,3,1,1"));
    let has = |s: &str| home.members.contains(&c(s));
    let members: Vec<String> = home.members.iter().map(ToString::to_string).collect();
    format!(
        "r[1,5,1,1] = r[3,3,1,1]: {}; r[1,4,1,2] = r[3,3,1,1]: {}; class {} = {{{}}}",
        has("1,5,1,1"),
        has("1,4,1,2"),
        home.class_id,
        members.join(" | ")
    )
}

fn coefficient_json(c: &num_rational::BigRational) -> Value {
    match small_integer(c) {
        Some(i) => json!(i),
        None => json!(c.to_string()),
    }
}

/// `[[["3,1"],1],[["4"],-1]]`
pub fn expansion_json(e: &OmegaElem) -> Value {
    Value::Array(
        e.terms()
            .map(|(lambda, c)| {
                let key = if lambda.is_empty() { "0".to_string() } else { lambda.to_string() };
                json!([[key], coefficient_json(c)])
            })
            .collect(),
    )
}

fn names(members: &[Composition]) -> Vec<String> {
    members.iter().map(ToString::to_string).collect()
}

pub fn class_json(n: u32, class: &EqualityClass) -> Value {
    json!({
        "n": n,
        "class_id": class.class_id,
        "members": names(&class.members),
        "expansion": expansion_json(&class.expansion),
    })
}

pub fn to_json(report: &ClassReport) -> Value {
    let n = report.n;
    json!({
        "n": n,
        "classes": report.classes.iter().map(|c| class_json(n, c)).collect::<Vec<_>>(),
        "closure_classes": report
            .closure_classes
            .iter()
            .enumerate()
            .map(|(i, m)| json!({"n": n, "class_id": i, "members": names(m)}))
            .collect::<Vec<_>>(),
        "verdict": {
            "match": report.verdict.matches(),
            "equal_not_connected": report
                .verdict
                .equal_not_connected
                .iter()
                .map(|(a, b)| json!([a.to_string(), b.to_string()]))
                .collect::<Vec<_>>(),
            "connected_not_equal": report
                .verdict
                .connected_not_equal
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>(),
        },
        "notes": report.notes,
    })
}

/// One row per member: `kind,n,class_id,member,expansion`.
pub fn to_csv(report: &ClassReport) -> io::Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["kind", "n", "class_id", "member", "expansion"])?;
    let n = report.n.to_string();
    for class in &report.classes {
        let id = class.class_id.to_string();
        let key = class.expansion.canonical_key();
        for m in &class.members {
            w.write_record(["equality", &n, &id, &m.to_string(), &key])?;
        }
    }
    for (i, members) in report.closure_classes.iter().enumerate() {
        let id = i.to_string();
        for m in members {
            w.write_record(["closure", &n, &id, &m.to_string(), ""])?;
        }
    }
    let bytes = w.into_inner().map_err(|e| io::Error::other(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

pub fn render(report: &ClassReport, format: Format) -> io::Result<String> {
    match format {
        Format::Json => Ok(serde_json::to_string_pretty(&to_json(report))? + "\n"),
        Format::Csv => to_csv(report),
    }
}

/// Write the report to `config.output_path`, if one is set.
pub fn export_report(report: &ClassReport, config: &RunConfig) -> io::Result<()> {
    if let Some(path) = &config.output_path {
        write_file(path, &render(report, config.format)?)?;
    }
    Ok(())
}

fn write_file(path: &Path, contents: &str) -> io::Result<()> {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        fs::create_dir_all(dir)?;
    }
    fs::write(path, contents)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn class_object_shape() {
        let r = build_report(4);
        let v = class_json(4, &r.classes[1]);
        assert_eq!(
            v.to_string(),
            r#"{"class_id":1,"expansion":[[["3,1"],1],[["4"],-1]],"members":["3,1","2,1,1","1,3","1,1,2"],"n":4}"#
        );
    }

    #[test]
    fn csv_rows() {
        let r = build_report(3);
        let text = to_csv(&r).unwrap();
        assert!(text.starts_with("kind,n,class_id,member,expansion\n"));
        assert!(text.contains("equality,3,1,2,1,q[2,1] - q[3]") || text.contains("equality,3,1,\"2,1\""));
        assert_eq!(text.lines().count(), 1 + 4 + 4);
    }

    #[test]
    fn size_eight_note() {
        let r = build_report(8);
        assert!(r.notes[0].starts_with("r[1,5,1,1] = r[3,3,1,1]: "));
    }
}

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use pencil_core::canonical::{
    kronecker_decompose, scramble, synthesize, weak_canonical, weierstrass, KroneckerStructure, Transform,
};
use pencil_core::checks::run_all;
use pencil_core::pencil::{full_profile, is_regular, reduce_step, strangeness};
use pencil_core::{Matrix, Pencil};
use serde_json::{json, Map, Value};

use crate::format::{
    deserialize, matrix_to_rows, serialize, MatrixFile, PencilFile, StructureFile,
};
use crate::CliError;

/// What a command produced: a human report, the same report as JSON, and
/// files to write.
#[derive(Debug, Default)]
pub struct Output {
    pub text: String,
    pub json: Value,
    pub files: Vec<(PathBuf, String)>,
    /// Number of failed checks, for `check`.
    pub failed: usize,
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_path_buf(), source })
}

pub fn read_pencil(path: &Path) -> Result<Pencil, CliError> {
    let f: PencilFile = deserialize(&read(path)?, &path.display().to_string())?;
    f.to_pencil()
}

pub fn read_structure(path: &Path) -> Result<KroneckerStructure, CliError> {
    let f: StructureFile = deserialize(&read(path)?, &path.display().to_string())?;
    f.to_structure()
}

pub fn write_files(files: &[(PathBuf, String)]) -> Result<(), CliError> {
    for (path, text) in files {
        if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
            fs::create_dir_all(dir).map_err(|source| CliError::Io { path: dir.to_path_buf(), source })?;
        }
        fs::write(path, text).map_err(|source| CliError::Io { path: path.clone(), source })?;
    }
    Ok(())
}

/// `input.json` becomes `input.`, so outputs land next to the input.
pub fn default_prefix(input: &Path) -> String {
    let stem = input.with_extension("");
    format!("{}.", stem.display())
}

fn out_path(prefix: &str, name: &str) -> PathBuf {
    PathBuf::from(format!("{prefix}{name}.json"))
}

fn rows_json(m: &Matrix) -> Value {
    json!(matrix_to_rows(m))
}

fn show_matrix(m: &Matrix, out: &mut String) {
    for r in matrix_to_rows(m) {
        let _ = writeln!(out, "  [{}]", r.join(", "));
    }
}

fn files_json(files: &[(PathBuf, String)], names: &[&str]) -> Value {
    let mut m = Map::new();
    for ((path, _), name) in files.iter().zip(names) {
        m.insert((*name).to_string(), json!(path.display().to_string()));
    }
    Value::Object(m)
}

fn list_files(files: &[(PathBuf, String)], out: &mut String) {
    for (path, _) in files {
        let _ = writeln!(out, "wrote {}", path.display());
    }
}

pub fn analyze(p: &Pencil) -> Output {
    let prof = full_profile(p);
    let st = strangeness(p);
    let regular = is_regular(p);
    let m1 = reduce_step(p).m_prime;

    let mut text = String::new();
    let _ = writeln!(text, "pencil: {} x {} (dim V x dim M)", p.rows(), p.cols());
    let _ = writeln!(text, "index: {}", prof.index);
    let _ = writeln!(text, "alpha (constraint defects): {:?}", prof.alpha);
    let _ = writeln!(text, "beta+ (observation defects): {:?}", prof.beta_plus);
    let _ = writeln!(text, "beta- (control defects): {:?}", prof.beta_minus);
    let _ = writeln!(text, "delta (dynamical dimension): {}", prof.delta);
    let _ = writeln!(text, "strangeness: d = {}, a = {}, s = {}", st.d, st.a, st.s);
    let _ = writeln!(text, "regular: {}", if regular { "yes" } else { "no" });
    let _ = writeln!(text, "consistent initial conditions M': dimension {}", m1.dim());
    show_matrix(m1.basis(), &mut text);

    let json = json!({
        "rows": p.rows(),
        "cols": p.cols(),
        "index": prof.index,
        "alpha": prof.alpha,
        "beta_plus": prof.beta_plus,
        "beta_minus": prof.beta_minus,
        "delta": prof.delta,
        "strangeness": { "d": st.d, "a": st.a, "s": st.s },
        "regular": regular,
        "consistent_initial_conditions": {
            "dim": m1.dim(),
            "basis": rows_json(m1.basis()),
        },
    });
    Output { text, json, ..Default::default() }
}

fn transform_files(t: &Transform, prefix: &str) -> Vec<(PathBuf, String)> {
    let mut files = vec![
        (out_path(prefix, "P"), serialize(&MatrixFile::from_matrix(&t.p))),
        (out_path(prefix, "Q"), serialize(&MatrixFile::from_matrix(&t.q))),
    ];
    if let Some(r) = &t.r {
        files.push((out_path(prefix, "R"), serialize(&MatrixFile::from_matrix(r))));
    }
    files
}

fn describe_structure(s: &KroneckerStructure, out: &mut String) {
    let fam = |m: &std::collections::BTreeMap<usize, usize>, name: &str| -> Vec<String> {
        m.iter().map(|(k, c)| format!("{c} x {name}{k}")).collect()
    };
    let mut parts = fam(&s.nilpotent, "N");
    parts.extend(fam(&s.l_blocks, "L"));
    parts.extend(fam(&s.lt_blocks, "LT"));
    let _ = writeln!(out, "core dimension: {}", s.core_dim);
    let _ = writeln!(out, "blocks: {}", if parts.is_empty() { String::from("none") } else { parts.join(", ") });
    if let Some(c) = &s.core {
        if c.rows() > 0 {
            let _ = writeln!(out, "core C:");
            show_matrix(c, out);
        }
    }
}

pub fn canonical(p: &Pencil, weierstrass_only: bool, prefix: &str) -> Result<Output, CliError> {
    let (t, s) = if weierstrass_only {
        let w = weierstrass(p)?;
        let mut s = KroneckerStructure { core_dim: w.core.rows(), core: Some(w.core), ..Default::default() };
        for k in w.nilpotent_sizes {
            *s.nilpotent.entry(k).or_insert(0) += 1;
        }
        (w.transform, s)
    } else {
        kronecker_decompose(p)
    };
    let form = p.transform(&t.p, &t.q);
    let mut files = transform_files(&t, prefix);
    files.push((out_path(prefix, "canonical"), serialize(&PencilFile::from_pencil(&form))));
    files.push((out_path(prefix, "structure"), serialize(&StructureFile::from_structure(&s))));

    let mut text = String::new();
    describe_structure(&s, &mut text);
    list_files(&files, &mut text);
    let mut json = serde_json::to_value(StructureFile::from_structure(&s)).expect("structure serializes");
    if weierstrass_only {
        json["nilpotent_sizes"] = json!(s.nilpotent_sizes());
    }
    json["files"] = files_json(&files, &["P", "Q", "canonical", "structure"]);
    Ok(Output { text, json, files, failed: 0 })
}

pub fn weak(p: &Pencil, prefix: &str) -> Output {
    let w = weak_canonical(p);
    let st = w.invariants;
    let mut files = transform_files(&w.transform, prefix);
    let form = Pencil::new(w.e, w.a).expect("weak form has the input shape");
    files.push((out_path(prefix, "weak"), serialize(&PencilFile::from_pencil(&form))));

    let mut text = String::new();
    let _ = writeln!(text, "d = {}, a = {}, s = {}", st.d, st.a, st.s);
    list_files(&files, &mut text);
    let json = json!({
        "d": st.d,
        "a": st.a,
        "s": st.s,
        "files": files_json(&files, &["P", "Q", "R", "weak"]),
    });
    Output { text, json, files, failed: 0 }
}

pub fn synth(s: &KroneckerStructure, scramble_seed: Option<u64>, prefix: &str) -> Output {
    let base = synthesize(s);
    let (pencil, t) = match scramble_seed {
        Some(seed) => {
            let (p, t) = scramble(&base, seed);
            (p, Some(t))
        }
        None => (base, None),
    };
    let mut files = vec![(out_path(prefix, "pencil"), serialize(&PencilFile::from_pencil(&pencil)))];
    let mut names = vec!["pencil"];
    if let Some(t) = &t {
        files.extend(transform_files(t, prefix));
        names.extend(["P", "Q"]);
    }
    let mut text = String::new();
    let _ = writeln!(text, "pencil: {} x {}", pencil.rows(), pencil.cols());
    list_files(&files, &mut text);
    let json = json!({
        "rows": pencil.rows(),
        "cols": pencil.cols(),
        "scrambled": t.is_some(),
        "files": files_json(&files, &names),
    });
    Output { text, json, files, failed: 0 }
}

pub fn check(p: &Pencil) -> Output {
    let checks = run_all(p);
    let failed = checks.iter().filter(|c| !c.passed).count();
    let mut text = String::new();
    for c in &checks {
        if c.passed {
            let _ = writeln!(text, "PASS {}", c.name);
        } else {
            let _ = writeln!(text, "FAIL {}: {}", c.name, c.detail);
        }
    }
    let json = json!({
        "passed": failed == 0,
        "checks": checks
            .iter()
            .map(|c| json!({ "name": c.name, "passed": c.passed, "detail": c.detail }))
            .collect::<Vec<_>>(),
    });
    Output { text, json, files: Vec::new(), failed }
}

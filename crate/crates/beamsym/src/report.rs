//! Deterministic key/value reports.
//!
//! Every front-end command emits a structured report: one `schema =
//! beamsym.<command>.v1` line followed by `key = value` rows in a fixed
//! order, floats always rendered as `{:.16e}` so two runs with identical
//! inputs are byte-identical.  The human-readable rendering is derived
//! from the same rows — same keys, same order, friendlier numbers — so
//! the two formats can never drift apart.

use std::fmt;

use crate::beam::BeamProfile;
use crate::classifier::SymmetryClass;
use crate::equivalence::{CanonicalForm, OrbitCheck, PointTransform, ORBIT_TOL};
use crate::error::{Error, Result};
use crate::gottlieb::GottliebParams;
use crate::reduction::ReductionState;
use crate::spectral::{IsoSpectralReport, Spectrum};

/// Output rendering selector.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReportFormat {
    /// Aligned, rounded; for terminals.
    Human,
    /// Byte-stable `key = value`; for golden files and tooling.
    Structured,
}

impl std::str::FromStr for ReportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "human" => Ok(ReportFormat::Human),
            "structured" => Ok(ReportFormat::Structured),
            other => Err(Error::Parameter(format!(
                "unknown report format \"{other}\"; expected human or structured"
            ))),
        }
    }
}

#[derive(Clone, Debug)]
enum Value {
    Text(String),
    Int(i64),
    Float(f64),
    Bool(bool),
}

impl Value {
    fn structured(&self) -> String {
        match self {
            Value::Text(s) => s.clone(),
            Value::Int(i) => i.to_string(),
            Value::Float(v) => format!("{v:.16e}"),
            Value::Bool(b) => b.to_string(),
        }
    }

    fn human(&self) -> String {
        match self {
            Value::Float(v) => {
                let a = v.abs();
                if *v == 0.0 {
                    "0".into()
                } else if (1e-4..1e6).contains(&a) {
                    let mut s = format!("{v:.9}");
                    while s.ends_with('0') {
                        s.pop();
                    }
                    if s.ends_with('.') {
                        s.pop();
                    }
                    s
                } else {
                    format!("{v:.6e}")
                }
            }
            other => other.structured(),
        }
    }
}

/// Ordered key/value report with a versioned schema line.
#[derive(Clone, Debug)]
pub struct Report {
    schema: String,
    rows: Vec<(String, Value)>,
}

impl Report {
    /// Starts a report for one command; `command` becomes part of the
    /// schema tag `beamsym.<command>.v1`.
    pub fn new(command: &str) -> Report {
        Report {
            schema: format!("beamsym.{command}.v1"),
            rows: Vec::new(),
        }
    }

    pub fn schema(&self) -> &str {
        &self.schema
    }

    fn push(&mut self, key: &str, value: Value) {
        debug_assert!(
            key.chars()
                .all(|c| c.is_ascii_lowercase() || c.is_ascii_digit() || c == '.' || c == '_'),
            "report key {key:?} not in [a-z0-9._]"
        );
        self.rows.push((key.to_string(), value));
    }

    pub fn text(&mut self, key: &str, value: &str) -> &mut Self {
        debug_assert!(!value.contains('\n'), "report value must be one line");
        self.push(key, Value::Text(value.to_string()));
        self
    }

    pub fn int(&mut self, key: &str, value: i64) -> &mut Self {
        self.push(key, Value::Int(value));
        self
    }

    pub fn float(&mut self, key: &str, value: f64) -> &mut Self {
        self.push(key, Value::Float(value));
        self
    }

    pub fn flag(&mut self, key: &str, value: bool) -> &mut Self {
        self.push(key, Value::Bool(value));
        self
    }

    /// Byte-stable rendering: schema line, then `key = value` per row.
    pub fn structured(&self) -> String {
        let mut out = format!("schema = {}\n", self.schema);
        for (k, v) in &self.rows {
            out.push_str(k);
            out.push_str(" = ");
            out.push_str(&v.structured());
            out.push('\n');
        }
        out
    }

    /// Human rendering derived from the same rows.
    pub fn human(&self) -> String {
        let width = self
            .rows
            .iter()
            .map(|(k, _)| k.len())
            .max()
            .unwrap_or(0);
        let mut out = format!("# {}\n", self.schema);
        for (k, v) in &self.rows {
            out.push_str(&format!("{k:<width$}  {}\n", v.human()));
        }
        out
    }

    pub fn render(&self, format: ReportFormat) -> String {
        match format {
            ReportFormat::Human => self.human(),
            ReportFormat::Structured => self.structured(),
        }
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.structured())
    }
}

fn beam_rows(r: &mut Report, profile: &BeamProfile) {
    let (a, b) = profile.domain();
    r.text("beam.name", &profile.name);
    r.text("beam.f", &profile.f.to_string());
    r.text("beam.m", &profile.m.to_string());
    r.float("beam.domain.a", a);
    r.float("beam.domain.b", b);
}

/// Classification report: options, verdict, residual maxima, and the full
/// per-sample residual table (skipped scaling-class samples flagged).
pub fn classify_report(profile: &BeamProfile, cls: &SymmetryClass) -> Report {
    let mut r = Report::new("classify");
    beam_rows(&mut r, profile);
    r.int("options.samples", cls.samples.len() as i64);
    r.float("options.tol", cls.tol);
    r.text("class.label", cls.label.as_str());
    r.float("class.kappa", cls.kappa);
    for (name, v) in ["h11", "h12", "h21", "h22"].iter().zip(cls.max_h) {
        r.float(&format!("residual.max.{name}"), v);
    }
    for (k, v) in cls.max_r.iter().enumerate() {
        r.float(&format!("residual.max.constraint{}", k + 1), *v);
    }
    r.int("residual.scaling_samples_skipped", cls.class2_skipped as i64);
    for (i, s) in cls.samples.iter().enumerate() {
        let p = format!("sample.{i:02}");
        r.float(&format!("{p}.x"), s.x);
        for (name, v) in ["h11", "h12", "h21", "h22"].iter().zip(s.h) {
            r.float(&format!("{p}.{name}"), v);
        }
        for (k, v) in s.r.iter().enumerate() {
            let key = format!("{p}.constraint{}", k + 1);
            match v {
                Some(v) => r.float(&key, *v),
                None => r.text(&key, "skipped"),
            };
        }
    }
    r
}

/// Canonicalization report: the class representative, transform
/// constants, valid/image domains, the orbit-membership probe, and the
/// probes that pin down conventions left ambiguous by transcription.
pub fn canonicalize_report(
    profile: &BeamProfile,
    cls: &SymmetryClass,
    tr: &PointTransform,
    orbit: &OrbitCheck,
    shear_probe: Option<(f64, f64)>,
) -> Report {
    let mut r = Report::new("canonicalize");
    beam_rows(&mut r, profile);
    r.text("class.label", cls.label.as_str());
    let canonical = tr.canonical();
    let form = match canonical.form {
        CanonicalForm::UniformBeam => "uniform",
        CanonicalForm::WedgeBeam => "wedge",
        CanonicalForm::InverseQuarticDensity => "inverse-quartic-density",
    };
    r.text("canonical.form", form);
    r.text("canonical.equation", canonical.equation());
    let c = tr.constants();
    r.float("transform.c1", c.c1);
    r.float("transform.c2", c.c2);
    r.float("transform.c3", c.c3);
    r.float("transform.kappa", tr.kappa());
    let (va, vb) = tr.valid_domain();
    r.float("transform.valid.a", va);
    r.float("transform.valid.b", vb);
    if let Ok((xa, xb)) = tr.image_domain() {
        r.float("transform.image.a", xa);
        r.float("transform.image.b", xb);
    }
    r.float("orbit.max_residual", orbit.max_residual);
    r.float("orbit.tol", ORBIT_TOL);
    r.int("orbit.probed", orbit.probed as i64);
    r.flag("orbit.on_orbit", orbit.ok);
    // Transcribed sources disagree on where the second translation
    // generator lands; the pushforward tests fix it as the second
    // canonical translation, and the transposed assignment fails them.
    r.text(
        "note.generator_convention",
        "second translation generator maps to the second canonical translation; \
         the transposed assignment fails the pushforward check",
    );
    if let Some((l1, res)) = shear_probe {
        // Whether a time shear (c1 != 0 in the scaling class) still maps
        // solutions is asserted upstream but never demonstrated; probe it
        // and report the outcome either way.
        r.float("probe.time_shear.c1", l1);
        r.float("probe.time_shear.max_residual", res);
        r.flag("probe.time_shear.preserves_equation", res < ORBIT_TOL);
    }
    r
}

/// Generation report for one iso-spectral family member.
pub fn gottlieb_report(
    params: &GottliebParams,
    beam: &BeamProfile,
    cls: &SymmetryClass,
) -> Report {
    let mut r = Report::new("gottlieb");
    r.text("params.exponent", &params.exponent.to_string());
    r.float("params.k", params.k);
    r.float("params.a", params.a);
    r.float("params.b", params.b);
    for (name, v) in ["l", "m", "p", "q"].iter().zip(params.mobius) {
        r.float(&format!("params.mobius.{name}"), v);
    }
    beam_rows(&mut r, beam);
    r.text("class.label", cls.label.as_str());
    let worst = cls.max_h.iter().fold(0.0f64, |a, &b| a.max(b));
    r.float("residual.max.h", worst);
    let worst_c = cls.max_r.iter().fold(0.0f64, |a, &b| a.max(b));
    r.float("residual.max.constraint", worst_c);
    r
}

/// Spectrum report with one plot-ready row per mode: frequency, the
/// Richardson estimate from a grid doubling, and — when the beam is in
/// the maximal class — the analytic uniform reference and deviation.
pub fn spectrum_report(
    profile: &BeamProfile,
    coarse: &Spectrum,
    fine: &Spectrum,
    reference: Option<&[f64]>,
) -> Report {
    let mut r = Report::new("spectrum");
    beam_rows(&mut r, profile);
    r.int("grid.intervals.coarse", coarse.n_intervals as i64);
    r.int("grid.intervals.fine", fine.n_intervals as i64);
    r.int("modes.count", fine.omegas.len() as i64);
    for k in 0..fine.omegas.len() {
        let p = format!("mode.{}", k + 1);
        let w = fine.omegas[k];
        let delta = w - coarse.omegas[k];
        r.int(&format!("{p}.index"), (k + 1) as i64);
        r.float(&format!("{p}.omega"), w);
        r.float(&format!("{p}.omega_extrapolated"), w + delta / 3.0);
        r.float(&format!("{p}.estimated_rel_error"), (delta / (3.0 * w)).abs());
        r.float(&format!("{p}.eigen_residual"), fine.residuals[k]);
        if let Some(ws) = reference {
            r.float(&format!("{p}.omega_reference"), ws[k]);
            r.float(&format!("{p}.relative_deviation"), (w - ws[k]).abs() / ws[k]);
        }
    }
    r
}

/// Iso-spectrality report: per-mode deviations from the uniform partner,
/// observed convergence orders, and Richardson-extrapolated limits.
pub fn isospectral_report(profile: &BeamProfile, rep: &IsoSpectralReport) -> Report {
    let mut r = Report::new("isospectral-check");
    beam_rows(&mut r, profile);
    r.text("class.label", rep.label.as_str());
    r.float("uniform.length", rep.length);
    r.int("modes.count", rep.modes.len() as i64);
    for m in &rep.modes {
        let p = format!("mode.{}", m.index);
        r.int(&format!("{p}.index"), m.index as i64);
        r.float(&format!("{p}.omega_numeric"), m.omega_numeric);
        r.float(&format!("{p}.omega_reference"), m.omega_reference);
        r.float(&format!("{p}.relative_deviation"), m.relative_deviation);
        r.float(&format!("{p}.observed_order"), m.observed_order);
        r.float(&format!("{p}.omega_extrapolated"), m.omega_extrapolated);
        r.float(
            &format!("{p}.extrapolated_deviation"),
            m.extrapolated_deviation,
        );
    }
    r.float("max_relative_deviation", rep.max_relative_deviation);
    r.flag("isospectral", rep.ok);
    r
}

/// Reduction report: per-stage residuals, the derived-vs-transcribed
/// right-hand-side comparison, and the final curve (or its equilibrium).
pub fn reduce_report(f_src: &str, interval: (f64, f64), st: &ReductionState) -> Report {
    let mut r = Report::new("reduce");
    r.text("input.f", f_src);
    r.float("input.domain.a", interval.0);
    r.float("input.domain.b", interval.1);
    r.int("stage.reached", st.stage as i64);
    for s in 0..st.stage as usize {
        let p = format!("stage{}", s + 1);
        r.float(&format!("{p}.residual.derived"), st.residuals[s]);
        // The transcribed right-hand sides are dimensionally inconsistent
        // in t; they are compared against the derived forms rather than
        // adopted, and the gap is reported.
        r.float(&format!("{p}.gap.transcribed"), st.printed_gap[s]);
    }
    match st.equilibrium {
        Some((u, v)) => {
            r.flag("stage3.equilibrium", true);
            r.float("stage3.equilibrium.u", u);
            r.float("stage3.equilibrium.v", v);
        }
        None => {
            if st.stage >= 3 {
                r.flag("stage3.equilibrium", false);
            }
        }
    }
    if st.stage >= 3 {
        r.int("stage3.rows", st.stage3.len() as i64);
        for (i, row) in st.stage3.iter().enumerate() {
            let p = format!("stage3.row.{i:02}");
            r.float(&format!("{p}.u"), row[0]);
            r.float(&format!("{p}.v"), row[1]);
            r.float(&format!("{p}.dvdu"), row[2]);
        }
    }
    r
}

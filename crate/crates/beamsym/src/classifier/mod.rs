//! Symmetry classification of beam profiles.
//!
//! A beam `(f, m)` admits the two obvious symmetries — time translation and
//! amplitude scaling — and up to two more depending on whether the
//! determining functions below vanish.  The four labels name the symmetry
//! algebra: `2A1` (generic), `3A1` (extra space-like translation),
//! `A1⊕A2` (extra scaling), `A3,3⊕A1` (maximal, four-dimensional).
//!
//! The determining functions `H11, H12, H21, H22` depend on the jets of `f`
//! and of the auxiliary coordinate `g`.  `H12` and `H22` are invariant under
//! `g → g + κ`, while `H11` and `H21` are affine in `g`:
//! `H11(g+κ) = H11(g) + κ·H12(g)` and likewise for `H21`.  Since the
//! normalization `g(a) = 0` is arbitrary, the scaling class is detected by
//! searching for a constant shift `κ` that annihilates the affine pair.

pub mod generators;
mod tables;

#[cfg(test)]
pub(crate) mod fixtures;

use crate::beam::BeamProfile;
use crate::error::{Error, Result};
use crate::jet::Jet;
use crate::numeric::chebyshev_interior;
use std::fmt;
use tables::HTerm;

/// Default number of classification sample nodes.
pub const DEFAULT_SAMPLES: usize = 33;
/// Default tolerance on normalized residuals.
pub const DEFAULT_TOL: f64 = 1e-9;

/// The four determining-function values at one point, with normalizers
/// (sums of absolute term magnitudes) for scale-free thresholding.
#[derive(Clone, Copy, Debug)]
pub struct HValues {
    pub h11: f64,
    pub h12: f64,
    pub h21: f64,
    pub h22: f64,
    pub n11: f64,
    pub n12: f64,
    pub n21: f64,
    pub n22: f64,
}

impl HValues {
    /// Normalized residuals `|h| / n` (zero when the normalizer vanishes,
    /// which happens exactly when every term vanishes).
    pub fn normalized(&self) -> [f64; 4] {
        [
            normalized(self.h11, self.n11),
            normalized(self.h12, self.n12),
            normalized(self.h21, self.n21),
            normalized(self.h22, self.n22),
        ]
    }
}

fn normalized(h: f64, n: f64) -> f64 {
    if n == 0.0 {
        0.0
    } else {
        h.abs() / n
    }
}

/// One evaluated constraint defect with its normalizer.
#[derive(Clone, Copy, Debug)]
pub struct Residual {
    pub defect: f64,
    pub norm: f64,
}

impl Residual {
    pub fn normalized(&self) -> f64 {
        normalized(self.defect, self.norm)
    }
}

fn jet_arrays(fj: &Jet, gj: &Jet) -> ([f64; 6], [f64; 7]) {
    let mut fd = [0.0; 6];
    let mut gd = [0.0; 7];
    for (k, v) in fd.iter_mut().enumerate() {
        *v = fj.deriv(k);
    }
    for (k, v) in gd.iter_mut().enumerate() {
        *v = gj.deriv(k);
    }
    (fd, gd)
}

fn powi(base: f64, e: i8) -> f64 {
    base.powi(e as i32)
}

/// Evaluates a monomial table, returning `(sum, sum of |term|)` in the fixed
/// table order (deterministic summation).
fn eval_table(terms: &[HTerm], fd: &[f64; 6], gd: &[f64; 7]) -> (f64, f64) {
    let mut value = 0.0;
    let mut norm = 0.0;
    for t in terms {
        let mut v = t.c;
        for k in 0..6 {
            if t.fp[k] != 0 {
                v *= powi(fd[k], t.fp[k]);
            }
        }
        for k in 0..7 {
            if t.gp[k] != 0 {
                v *= powi(gd[k], t.gp[k]);
            }
        }
        value += v;
        norm += v.abs();
    }
    (value, norm)
}

fn check_nondegenerate(fj: &Jet, gj: &Jet) -> Result<()> {
    if !(fj.value() > 0.0) {
        return Err(Error::Parameter(format!(
            "determining functions need f > 0, got {}",
            fj.value()
        )));
    }
    if gj.deriv(1) == 0.0 {
        return Err(Error::Parameter(
            "determining functions need g' ≠ 0".into(),
        ));
    }
    Ok(())
}

/// Evaluates the four determining functions at one jet pair.
pub fn h_functions(fj: &Jet, gj: &Jet) -> Result<HValues> {
    check_nondegenerate(fj, gj)?;
    let (fd, gd) = jet_arrays(fj, gj);
    let (h11, n11) = eval_table(tables::H11, &fd, &gd);
    let (h12, n12) = eval_table(tables::H12, &fd, &gd);
    let (h21, n21) = eval_table(tables::H21, &fd, &gd);
    let (h22, n22) = eval_table(tables::H22, &fd, &gd);
    Ok(HValues {
        h11,
        h12,
        h21,
        h22,
        n11,
        n12,
        n21,
        n22,
    })
}

/// Maximal-class constraint defects `(g''' − rhs, f'''' − rhs)`.
///
/// Both are invariant under constant shifts of `g`.
pub fn residual_class1(fj: &Jet, gj: &Jet) -> Result<(Residual, Residual)> {
    check_nondegenerate(fj, gj)?;
    let (fd, gd) = jet_arrays(fj, gj);
    let (r1, n1) = eval_table(tables::CLASS1_G3, &fd, &gd);
    let (r2, n2) = eval_table(tables::CLASS1_F4, &fd, &gd);
    Ok((
        Residual {
            defect: r1,
            norm: n1,
        },
        Residual {
            defect: r2,
            norm: n2,
        },
    ))
}

/// Scaling-class constraint defects `(g'''' − rhs, f''''' − rhs)`.
///
/// Both printed right-hand sides divide by `g`, so `g = 0` is rejected; the
/// classifier skips and flags such samples instead of calling this.
pub fn residual_class2(fj: &Jet, gj: &Jet) -> Result<(Residual, Residual)> {
    check_nondegenerate(fj, gj)?;
    if gj.value() == 0.0 {
        return Err(Error::Parameter(
            "scaling-class constraints divide by g, undefined at g = 0".into(),
        ));
    }
    let (fd, gd) = jet_arrays(fj, gj);
    let (r3, n3) = eval_table(tables::CLASS2_G4, &fd, &gd);
    let (r4, n4) = eval_table(tables::CLASS2_F5, &fd, &gd);
    Ok((
        Residual {
            defect: r3,
            norm: n3,
        },
        Residual {
            defect: r4,
            norm: n4,
        },
    ))
}

/// Translation-class constraint defects `(g'''' − rhs, f''''' − rhs)`.
pub fn residual_class3(fj: &Jet, gj: &Jet) -> Result<(Residual, Residual)> {
    check_nondegenerate(fj, gj)?;
    let (fd, gd) = jet_arrays(fj, gj);
    let (r5, n5) = eval_table(tables::CLASS3_G4, &fd, &gd);
    let (r6, n6) = eval_table(tables::CLASS3_F5, &fd, &gd);
    Ok((
        Residual {
            defect: r5,
            norm: n5,
        },
        Residual {
            defect: r6,
            norm: n6,
        },
    ))
}

/// Symmetry-algebra label.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClassLabel {
    /// Only time translation and amplitude scaling.
    TwoA1,
    /// Extra translation-like symmetry (constant-coefficient normal form).
    ThreeA1,
    /// Extra scaling symmetry.
    A1PlusA2,
    /// Maximal four-dimensional algebra.
    A33PlusA1,
}

impl ClassLabel {
    pub fn as_str(&self) -> &'static str {
        match self {
            ClassLabel::TwoA1 => "2A1",
            ClassLabel::ThreeA1 => "3A1",
            ClassLabel::A1PlusA2 => "A1⊕A2",
            ClassLabel::A33PlusA1 => "A3,3⊕A1",
        }
    }
}

impl fmt::Display for ClassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Residual diagnostics at one sample node.
#[derive(Clone, Copy, Debug)]
pub struct ResidualSample {
    pub x: f64,
    /// Normalized `(Ĥ11, Ĥ12, Ĥ21, Ĥ22)` at the classification shift `κ`.
    pub h: [f64; 4],
    /// Normalized reduced-constraint defects `R1..R6`; `None` marks a
    /// skipped scaling-class sample where `g + κ = 0`.
    pub r: [Option<f64>; 6],
}

/// Classification result with the full residual table.
#[derive(Clone, Debug)]
pub struct SymmetryClass {
    pub label: ClassLabel,
    /// Constant shift of `g` that annihilates the affine determining pair
    /// (nonzero only for `A1⊕A2`).
    pub kappa: f64,
    pub tol: f64,
    pub samples: Vec<ResidualSample>,
    /// Per-function maxima of the normalized H residuals over all samples.
    pub max_h: [f64; 4],
    /// Per-constraint maxima of the normalized defects (skipped samples
    /// excluded).
    pub max_r: [f64; 6],
    /// Number of samples excluded from the scaling-class cross-check
    /// because `g + κ` vanished there.
    pub class2_skipped: usize,
}

fn median(mut v: Vec<f64>) -> f64 {
    v.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let n = v.len();
    if n % 2 == 1 {
        v[n / 2]
    } else {
        0.5 * (v[n / 2 - 1] + v[n / 2])
    }
}

/// Classifies a beam by evaluating the determining functions at Chebyshev
/// nodes and applying the precedence maximal → scaling → translation →
/// generic on normalized residuals.
pub fn classify(profile: &BeamProfile, samples: usize, tol: f64) -> Result<SymmetryClass> {
    if samples < 8 {
        return Err(Error::Parameter(format!(
            "classification needs at least 8 samples, got {samples}"
        )));
    }
    if !(tol > 0.0) {
        return Err(Error::Parameter(format!(
            "classification tolerance must be positive, got {tol}"
        )));
    }
    let g = profile.g()?;
    let (a, b) = profile.domain();
    let xs = chebyshev_interior(samples, a, b);
    let mut jets = Vec::with_capacity(samples);
    for &x in &xs {
        jets.push((x, profile.f_jet(x)?, g.jet(x)?));
    }
    let raw: Vec<HValues> = jets
        .iter()
        .map(|(_, fj, gj)| h_functions(fj, gj))
        .collect::<Result<_>>()?;

    // maximal class: all four vanish at the native normalization (the
    // determining pair H11/H21 then vanishes for every shift)
    let class1 = raw
        .iter()
        .all(|h| h.normalized().iter().all(|&r| r < tol));

    // scaling class: search for κ with H11 + κH12 ≡ 0 and H21 + κH22 ≡ 0
    let mut kappa = 0.0;
    let mut class2 = false;
    if !class1 {
        let candidates: Vec<f64> = raw
            .iter()
            .filter(|h| normalized(h.h12, h.n12) >= tol)
            .map(|h| -h.h11 / h.h12)
            .collect();
        if !candidates.is_empty() {
            let k = median(candidates);
            class2 = jets.iter().all(|(_, fj, gj)| {
                let shifted = *gj + k;
                match h_functions(fj, &shifted) {
                    Ok(h) => {
                        normalized(h.h11, h.n11) < tol && normalized(h.h21, h.n21) < tol
                    }
                    Err(_) => false,
                }
            });
            if class2 {
                kappa = k;
            }
        }
    }

    // translation class: the shift-invariant pair vanishes
    let class3 = !class1
        && !class2
        && raw.iter().all(|h| {
            normalized(h.h12, h.n12) < tol && normalized(h.h22, h.n22) < tol
        });

    let label = if class1 {
        ClassLabel::A33PlusA1
    } else if class2 {
        ClassLabel::A1PlusA2
    } else if class3 {
        ClassLabel::ThreeA1
    } else {
        ClassLabel::TwoA1
    };

    // residual table at the classification shift
    let g_scale = g.total().abs() + kappa.abs();
    let mut table = Vec::with_capacity(samples);
    let mut max_h = [0.0f64; 4];
    let mut max_r = [0.0f64; 6];
    let mut skipped = 0;
    for (x, fj, gj) in &jets {
        let shifted = *gj + kappa;
        let h = h_functions(fj, &shifted)?.normalized();
        for k in 0..4 {
            max_h[k] = max_h[k].max(h[k]);
        }
        let (r1, r2) = residual_class1(fj, gj)?;
        let (r5, r6) = residual_class3(fj, gj)?;
        let mut r = [
            Some(r1.normalized()),
            Some(r2.normalized()),
            None,
            None,
            Some(r5.normalized()),
            Some(r6.normalized()),
        ];
        if shifted.value().abs() > 1e-12 * g_scale {
            let (r3, r4) = residual_class2(fj, &shifted)?;
            r[2] = Some(r3.normalized());
            r[3] = Some(r4.normalized());
        } else {
            skipped += 1;
        }
        for k in 0..6 {
            if let Some(v) = r[k] {
                max_r[k] = max_r[k].max(v);
            }
        }
        table.push(ResidualSample { x: *x, h, r });
    }

    Ok(SymmetryClass {
        label,
        kappa,
        tol,
        samples: table,
        max_h,
        max_r,
        class2_skipped: skipped,
    })
}

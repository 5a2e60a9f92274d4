//! Single-topic commands. Each returns a report fragment plus table rows for
//! terminal output.

use num_bigint::BigInt;
use serde_json::{json, Value};

use super::config::Config;
use super::report::{int, ints, matrix, Report, Status};
use super::Options;
use crate::error::{Error, Result};
use crate::hilb2::{
    beauville_involution, composite_dynamics, intersection_of_polarizations, orbit, BeauvillePolarization,
    HilbSquareLattice, PolarizationFrame,
};
use crate::k3geom::{covering_involution, is_ample, nef_cone, rational_curve_degrees, K3Model};
use crate::lattice::{Lattice, LatticeVector};
use crate::products::{direct_sum, invariant_ample_from_rays, mds_checklist, FiniteRayCone};
use crate::quadform::{isotropic_classes_exist, Isotropic};

pub struct Outcome {
    pub report: Report,
    pub table: Vec<String>,
}

impl Outcome {
    fn new(command: &str) -> Self {
        Outcome {
            report: Report::new(command),
            table: Vec::new(),
        }
    }

    fn item(&mut self, id: &str, description: &str, data: Value, row: String) {
        let anchor = self.report.command.clone();
        self.report.push(id, description, &anchor, Status::Pass, data);
        self.table.push(row);
    }
}

fn rank_two(config: &Config) -> Result<Lattice> {
    let l = config.lattice()?;
    if l.rank() != 2 {
        return Err(Error::WrongRank {
            expected: 2,
            found: l.rank(),
        });
    }
    Ok(l)
}

fn model(config: &Config, options: &Options) -> Result<K3Model> {
    let l = rank_two(config)?;
    let ample = l.vec_i64(&config.ample);
    K3Model::with_search_bound(&l, &ample, options.degree_max.unwrap_or(config.search_degree_max))
}

fn vector(v: &LatticeVector) -> Value {
    ints(v.coords())
}

fn row(config: &Config, v: &LatticeVector) -> String {
    format!("{:<12} {}", v.to_string(), config.format_class(v.coords()))
}

/// Lattice invariants.
pub fn info(config: &Config, _: &Options) -> Result<Outcome> {
    let l = rank_two(config)?;
    let mut o = Outcome::new("info");
    let d = l.discriminant();
    o.item(
        "discriminant",
        "determinant of the Gram matrix",
        json!({ "det": int(&d.det), "abs_det": int(&d.abs_det) }),
        format!("det          {} (|det| = {})", d.det, d.abs_det),
    );
    let c = l.classify();
    o.item(
        "classification",
        "parity and signature",
        json!({ "even": c.even, "signature": [c.positive, c.negative] }),
        format!(
            "signature    ({}, {}), {}",
            c.positive,
            c.negative,
            if c.even { "even" } else { "odd" }
        ),
    );
    if c.is_hyperbolic() {
        let iso = isotropic_classes_exist(&l)?;
        let (data, text) = match &iso {
            Isotropic::No => (Value::Null, "none".to_string()),
            Isotropic::Yes(w) => (vector(w), row(config, w)),
        };
        o.item(
            "isotropic",
            "nonzero class of square 0",
            json!({ "witness": data }),
            format!("isotropic    {text}"),
        );
    }
    let a = l.vec_i64(&config.ample);
    o.item(
        "ample",
        "declared ample class",
        json!({ "class": vector(&a), "norm": int(&a.norm()) }),
        format!("ample        {} with square {}", config.format_class(a.coords()), a.norm()),
    );
    Ok(o)
}

/// Smooth rational curves and their degrees against the ample class.
pub fn curves(config: &Config, options: &Options) -> Result<Outcome> {
    let k = model(config, options)?;
    let mut o = Outcome::new("curves");
    for (i, (c, d)) in rational_curve_degrees(&k, k.ample())?.into_iter().enumerate() {
        o.item(
            &format!("curve-{}", i + 1),
            "extremal (-2)-class of the effective cone",
            json!({ "class": vector(&c), "name": config.format_class(c.coords()), "degree": int(&d) }),
            format!("{} deg {d}", row(config, &c)),
        );
    }
    if o.table.is_empty() {
        o.table.push("no (-2)-curves; the effective cone is bounded by isotropic rays".into());
    }
    Ok(o)
}

/// Effective and nef cones, and ampleness of each polarization.
pub fn cones(config: &Config, options: &Options) -> Result<Outcome> {
    let k = model(config, options)?;
    let mut o = Outcome::new("cones");
    let eff = k.cached_effective_cone()?;
    let nef = nef_cone(&k)?;
    for (id, name, cone) in [("effective-cone", "effective", eff), ("nef-cone", "nef", &nef)] {
        let rays: Vec<String> = cone.rays().iter().map(|r| config.format_class(r.coords())).collect();
        o.item(
            id,
            &format!("rays of the {name} cone"),
            json!({ "rays": cone.rays().iter().map(vector).collect::<Vec<_>>(), "certified": cone.is_certified() }),
            format!("{name:<10} {}", rays.join(", ")),
        );
    }
    for (i, h) in config.polarizations.iter().enumerate() {
        let h = k.ns().vec_i64(h);
        let pairings = eff.rays().iter().map(|r| r.pair(&h)).collect::<Result<Vec<BigInt>>>()?;
        let ample = is_ample(&k, &h)?;
        o.item(
            &format!("polarization-{}", i + 1),
            "ampleness via pairings with the effective rays",
            json!({ "class": vector(&h), "ample": ample, "pairings": ints(&pairings) }),
            format!(
                "{:<10} pairings ({}) {}",
                config.format_class(h.coords()),
                pairings.iter().map(ToString::to_string).collect::<Vec<_>>().join(", "),
                if ample { "ample" } else { "not ample" }
            ),
        );
    }
    Ok(o)
}

/// Covering involution of the double plane given by the ample class.
pub fn involution(config: &Config, options: &Options) -> Result<Outcome> {
    let k = model(config, options)?;
    let tau = covering_involution(&k, k.ample())?;
    let mut o = Outcome::new("involution");
    o.item(
        "covering-involution",
        "action of the covering involution",
        json!({ "matrix": matrix(tau.matrix()) }),
        format!("tau*         {}", tau.matrix()),
    );
    for (i, c) in k.rational_curves()?.into_iter().enumerate() {
        let image = tau.apply(&c)?;
        o.item(
            &format!("curve-image-{}", i + 1),
            "image of a rational curve",
            json!({ "class": vector(&c), "image": vector(&image) }),
            format!(
                "{:<12} -> {}",
                config.format_class(c.coords()),
                config.format_class(image.coords())
            ),
        );
    }
    Ok(o)
}

/// Beauville involutions of the first two polarizations and their
/// composite.
pub fn dynamics(config: &Config, options: &Options) -> Result<Outcome> {
    let k = model(config, options)?;
    if config.polarizations.len() < 2 {
        return Err(Error::Hypothesis("dynamics needs two polarizations".into()));
    }
    let h1 = k.ns().vec_i64(&config.polarizations[0]);
    let h2 = k.ns().vec_i64(&config.polarizations[1]);
    let m = intersection_of_polarizations(&k, &h1, &h2)?;
    let hl = HilbSquareLattice::extend(k.ns())?;
    let i1 = beauville_involution(&hl, &BeauvillePolarization::certify(&k, &h1)?)?;
    let i2 = beauville_involution(&hl, &BeauvillePolarization::certify(&k, &h2)?)?;
    let frame = PolarizationFrame::new(&hl, &h1, &h2)?;
    let (f1, f2) = (frame.to_frame(&i1)?, frame.to_frame(&i2)?);
    let d = composite_dynamics(&f1, &f2)?;
    let mut o = Outcome::new("dynamics");
    o.item("intersection-m", "m = (H1, H2)", json!({ "m": int(&m) }), format!("m            {m}"));
    o.item(
        "iota-1",
        "first Beauville involution, frame basis <H1 - e, H2 - e, e>",
        json!({ "matrix": matrix(f1.matrix()) }),
        format!("iota1*       {}", f1.matrix()),
    );
    o.item(
        "iota-2",
        "second Beauville involution, frame basis",
        json!({ "matrix": matrix(f2.matrix()) }),
        format!("iota2*       {}", f2.matrix()),
    );
    o.item(
        "composite",
        "iota1* iota2*, frame basis",
        json!({ "matrix": matrix(d.matrix.matrix()) }),
        format!("composite    {}", d.matrix.matrix()),
    );
    o.item(
        "char-poly",
        "characteristic polynomial and its factorization",
        json!({ "char_poly": d.char_poly.to_string(), "factorization": d.factorization.to_string() }),
        format!("F(t)         {}", d.factorization),
    );
    let cert = match d.certificate.growth_interval() {
        Some(iv) => (
            json!({ "infinite": true, "beta_interval": [iv.lo.to_string(), iv.hi.to_string()] }),
            format!("order        infinite, beta ~ {:.9}", iv.midpoint_f64()),
        ),
        None => (
            json!({ "infinite": d.certificate.is_infinite(), "certificate": format!("{:?}", d.certificate) }),
            format!("order        {:?}", d.certificate),
        ),
    };
    o.item("order", "order certificate", cert.0, cert.1);
    if let Some(v) = d.fixed_vector() {
        o.item(
            "fixed-vector",
            "primitive fixed vector, frame basis",
            json!({ "vector": vector(v), "norm": int(&v.norm()) }),
            format!("fixed        {v} with square {}", v.norm()),
        );
    }
    if let Some(n) = options.power {
        let p = d.matrix.pow(n);
        o.item(
            "power",
            "power of the composite, frame basis",
            json!({ "n": n, "matrix": matrix(p.matrix()) }),
            format!("composite^{n}  {}", p.matrix()),
        );
    }
    if let Some(n) = options.orbit {
        let pts = orbit(&d.matrix, &frame.e(), n)?;
        o.item(
            "orbit",
            "orbit of e under the composite, frame basis",
            json!({ "classes": pts.iter().map(vector).collect::<Vec<_>>() }),
            format!("orbit        {} classes of square {}", pts.len(), frame.e().norm()),
        );
    }
    Ok(o)
}

/// `S x S` with the declared-semi-ample product nef cone.
pub fn product(config: &Config, options: &Options) -> Result<Outcome> {
    let k = model(config, options)?;
    let p = direct_sum(&[(k.clone(), 2)])?;
    let cone = FiniteRayCone::product_nef(&p, &[true, true])?;
    let mut group = vec![p.block_permutation(&[1, 0])?];
    if k.ample().norm() == BigInt::from(2) {
        let tau = covering_involution(&k, k.ample())?;
        group.push(p.block_isometry(&[tau.clone(), tau])?);
    }
    let h = invariant_ample_from_rays(&cone, &group)?;
    let report = mds_checklist(Some(&cone), true, None);
    let mut o = Outcome::new("product");
    o.item(
        "product-lattice",
        "NS(S x S)",
        json!({ "rank": p.total().rank(), "det": int(p.total().det()) }),
        format!("lattice      rank {}, det {}", p.total().rank(), p.total().det()),
    );
    o.item(
        "product-nef-rays",
        "generators of the product nef cone",
        json!({ "rays": cone.rays().iter().map(vector).collect::<Vec<_>>() }),
        format!("nef rays     {}", cone.rays().len()),
    );
    o.item(
        "invariant-class",
        "sum of the nef rays, fixed by the block isometries",
        json!({ "class": vector(&h), "group_size": group.len() }),
        format!("invariant    {h}"),
    );
    o.item(
        "mds",
        "numerical MDS checklist",
        json!({
            "condition1_assumed": report.condition1_assumed,
            "condition2": report.condition2,
            "condition3": report.condition3,
            "consistent": report.is_consistent(),
        }),
        format!(
            "MDS          {}",
            if report.is_consistent() { "consistent" } else { "not established" }
        ),
    );
    Ok(o)
}

/// Human table for verify-paper.
pub fn verify_table(report: &Report) -> Vec<String> {
    report
        .checks
        .iter()
        .map(|c| format!("{:<14} {:<27} {}", format!("[{}]", c.status), c.id, c.description))
        .collect()
}

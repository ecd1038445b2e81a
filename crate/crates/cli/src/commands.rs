use std::fmt;
use std::path::Path;

use escobar::constructions::{
    corner_tuple, disk_equal_arc_tuple, equal_boundary_tuple, inscribed_kgon_tuple, stripe_tuple, CornerScheduleParams,
};
use escobar::exact::{ik_disk, ik_regular_polygon};
use escobar::geometry::json::parse_domain;
use escobar::geometry::{PlanarDomain, Vec2};
use escobar::manifest::RunManifest;
use escobar::regions::{parse_tuple, tuple_to_json};
use escobar::report::{fmt_sig, region_table, BoundKind};
use escobar::scan::{conjecture_scan as run_scan, scan_csv};
use escobar::search::{estimate_ik, Families, SearchConfig};
use escobar::symmetry::{audit, audit_csv};
use serde_json::json;

use crate::{AuditArgs, ConstructArgs, DomainArgs, ExactArgs, Family, OptimizeArgs, RenderArgs, ScanArgs, SearchArgs};

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Input(String),
    Budget(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Input(_) => 3,
            CliError::Budget(_) => 4,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Input(m) | CliError::Budget(m) => f.write_str(m),
        }
    }
}

impl From<escobar::Error> for CliError {
    fn from(e: escobar::Error) -> Self {
        use escobar::Error as E;
        match e {
            E::InvalidParameter(_) => CliError::Usage(e.to_string()),
            E::BudgetExceeded { .. } => CliError::Budget(e.to_string()),
            _ => CliError::Input(e.to_string()),
        }
    }
}

type Result<T> = std::result::Result<T, CliError>;

/// `a..b` (inclusive) or a single number.
pub fn parse_range(text: &str) -> Result<Vec<usize>> {
    let bad = || CliError::Usage(format!("bad range '{text}', expected N or A..B"));
    let (a, b) = match text.split_once("..") {
        Some((a, b)) => (a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?),
        None => {
            let v = text.trim().parse().map_err(|_| bad())?;
            (v, v)
        }
    };
    if a == 0 || a > b {
        return Err(bad());
    }
    Ok((a..=b).collect())
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))
}

fn write(path: &Path, content: &str) -> Result<()> {
    std::fs::write(path, content).map_err(|e| CliError::Input(format!("cannot write {}: {e}", path.display())))
}

/// Writes `content` with its manifest next to it, or prints it.
fn emit(out: Option<&Path>, content: &str, manifest: &mut RunManifest) -> Result<()> {
    match out {
        Some(p) => {
            write(p, content)?;
            manifest
                .write_sidecar(p)
                .map_err(|e| CliError::Input(format!("cannot write manifest for {}: {e}", p.display())))?;
        }
        None => print!("{content}"),
    }
    Ok(())
}

fn load_domain(args: &DomainArgs, manifest: &mut RunManifest) -> Result<PlanarDomain> {
    let given = [args.domain.is_some(), args.regular.is_some(), args.disk.is_some(), args.rect.is_some()];
    if given.iter().filter(|&&g| g).count() != 1 {
        return Err(CliError::Usage("give exactly one of --domain, --regular, --disk, --rect".into()));
    }
    if let Some(p) = &args.domain {
        let text = read(p)?;
        manifest.add_input(p.display().to_string(), text.as_bytes());
        return Ok(parse_domain(&text)?);
    }
    if let Some(n) = args.regular {
        return Ok(PlanarDomain::make_regular_polygon(n)?);
    }
    if let Some(r) = args.disk {
        return Ok(PlanarDomain::make_disk(r)?);
    }
    let wh = args.rect.as_deref().unwrap_or_default();
    if wh.len() != 2 {
        return Err(CliError::Usage("--rect takes WIDTH,HEIGHT".into()));
    }
    let (w, h) = (wh[0] / 2.0, wh[1] / 2.0);
    Ok(PlanarDomain::make_polygon(&[
        Vec2::new(-w, -h),
        Vec2::new(w, -h),
        Vec2::new(w, h),
        Vec2::new(-w, h),
    ])?)
}

fn search_config(s: &SearchArgs) -> SearchConfig {
    SearchConfig {
        grid: s.grid,
        restarts: s.restarts,
        seed: s.seed,
        budget: s.budget,
        ..Default::default()
    }
}

pub fn exact(a: ExactArgs) -> Result<()> {
    let ks = parse_range(&a.k)?;
    let mut csv = String::from("shape,n,k,value,kind,provenance\n");
    match (a.disk, a.regular) {
        (true, None) => {
            for k in ks {
                let v = ik_disk(k)?;
                csv.push_str(&format!("disk,,{k},{},{},closed form\n", fmt_sig(v, 12), BoundKind::Exact));
            }
        }
        (false, Some(n)) => {
            for k in ks {
                let b = ik_regular_polygon(n, k)?;
                csv.push_str(&format!("regular,{n},{k},{},{},{}\n", fmt_sig(b.value, 12), b.kind, b.provenance));
            }
        }
        _ => return Err(CliError::Usage("give either --disk or --regular N".into())),
    }
    let mut m = RunManifest::new("exact", json!({"disk": a.disk, "regular": a.regular, "k": a.k}), None);
    emit(a.out.as_deref(), &csv, &mut m)
}

pub fn construct(a: ConstructArgs) -> Result<()> {
    let config = json!({
        "family": format!("{:?}", a.family),
        "k": a.k,
        "offset": a.offset,
        "corner": a.corner,
        "epsilon": a.epsilon,
        "height": a.height,
        "regular": a.domain.regular,
        "disk": a.domain.disk,
        "rect": a.domain.rect,
    });
    let mut m = RunManifest::new("construct", config, None);
    let d = load_domain(&a.domain, &mut m)?;
    let t = match a.family {
        Family::EqualArcs => disk_equal_arc_tuple(&d, a.k, a.offset.unwrap_or(0.0))?,
        Family::EqualBoundary => equal_boundary_tuple(&d, a.k, a.offset)?,
        Family::Corner => corner_tuple(&d, CornerScheduleParams::new(a.corner, a.k, a.epsilon))?,
        Family::Inscribed => inscribed_kgon_tuple(&d, a.k)?,
        Family::Stripe => {
            let h = a.height.ok_or_else(|| CliError::Usage("stripe needs --height".into()))?;
            stripe_tuple(&d, a.k, h)?
        }
    };
    if let Some(p) = &a.table {
        let mut mt = m.clone();
        emit(Some(p), &region_table(&d, &t), &mut mt)?;
    }
    if let Some(p) = &a.svg {
        let mut ms = m.clone();
        emit(Some(p), &escobar::svg::render(&d, Some(&t)), &mut ms)?;
    }
    let body = serde_json::to_string_pretty(&tuple_to_json(&d, &t)).expect("tuple serializes") + "\n";
    emit(a.out.as_deref(), &body, &mut m)
}

pub fn optimize(a: OptimizeArgs) -> Result<()> {
    let mut cfg = search_config(&a.search);
    cfg.families = Families {
        caps: !a.no_caps,
        corners: !a.no_corners,
    };
    let mut m = RunManifest::new(
        "optimize",
        json!({"k": a.k, "config": serde_json::to_value(&cfg).expect("config serializes")}),
        Some(cfg.seed),
    );
    let text = read(&a.domain)?;
    m.add_input(a.domain.display().to_string(), text.as_bytes());
    let d = parse_domain(&text)?;
    let r = estimate_ik(&d, a.k, &cfg)?;
    let report = json!({
        "k": a.k,
        "value": r.value,
        "kind": r.kind,
        "method": r.method,
        "evaluations": r.evaluations,
        "provenance": r.provenance,
        "witness": tuple_to_json(&d, &r.witness),
        "etas": r.witness.etas(&d),
    });
    if let Some(p) = &a.svg {
        let mut ms = m.clone();
        emit(Some(p), &escobar::svg::render(&d, Some(&r.witness)), &mut ms)?;
    }
    let body = serde_json::to_string_pretty(&report).expect("report serializes") + "\n";
    emit(a.out.as_deref(), &body, &mut m)
}

pub fn conjecture_scan(a: ScanArgs) -> Result<()> {
    let ns = parse_range(&a.n)?;
    if ns[0] < 3 {
        return Err(CliError::Usage("n must be at least 3".into()));
    }
    let ks = parse_range(&a.k)?;
    let cfg = search_config(&a.search);
    let mut m = RunManifest::new(
        "conjecture-scan",
        json!({"n": a.n, "k": a.k, "config": serde_json::to_value(&cfg).expect("config serializes")}),
        Some(cfg.seed),
    );
    let rows = run_scan(&ns, &ks, &cfg)?;
    emit(a.out.as_deref(), &scan_csv(&rows), &mut m)
}

pub fn symmetry_audit(a: AuditArgs) -> Result<()> {
    let ns = parse_range(&a.n)?;
    if ns[0] < 3 {
        return Err(CliError::Usage("n must be at least 3".into()));
    }
    let mut results = Vec::new();
    for n in ns {
        results.extend(audit(n, a.samples, a.seed)?);
    }
    let mut m = RunManifest::new("symmetry-audit", json!({"n": a.n, "samples": a.samples}), Some(a.seed));
    emit(a.out.as_deref(), &audit_csv(&results), &mut m)
}

pub fn render(a: RenderArgs) -> Result<()> {
    let mut m = RunManifest::new("render", json!({}), None);
    let dtext = read(&a.domain)?;
    let ttext = read(&a.tuple)?;
    m.add_input(a.domain.display().to_string(), dtext.as_bytes());
    m.add_input(a.tuple.display().to_string(), ttext.as_bytes());
    let d = parse_domain(&dtext)?;
    let t = parse_tuple(&d, &ttext)?;
    t.validate(&d)
        .map_err(|v| CliError::Input(format!("tuple does not fit the domain: {v}")))?;
    emit(a.out.as_deref(), &escobar::svg::render(&d, Some(&t)), &mut m)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(parse_range("2..4").unwrap(), vec![2, 3, 4]);
        assert_eq!(parse_range("7").unwrap(), vec![7]);
        for bad in ["4..2", "0..3", "x", "2..", ""] {
            assert_eq!(parse_range(bad).unwrap_err().exit_code(), 2);
        }
    }
}

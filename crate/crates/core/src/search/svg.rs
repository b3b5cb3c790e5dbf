use std::fmt::Write as _;
use std::path::Path;

use super::certificate::Certificate;

#[derive(Debug, thiserror::Error)]
pub enum SvgError {
    #[error("empty certificate")]
    Empty,
    #[error("cannot write svg: {0}")]
    Io(#[from] std::io::Error),
}

/// SVG drawing of the tiling, y axis pointing up. Mirrored copies get a
/// different fill.
pub fn svg_string(cert: &Certificate) -> Result<String, SvgError> {
    if cert.placements.is_empty() {
        return Err(SvgError::Empty);
    }
    let pts: Vec<(f64, f64)> = cert.placements.iter().flat_map(|p| p.v.iter().map(|q| {
        let (x, y) = q.to_f64();
        (x + 0.0, 0.0 - y)
    })).collect();
    let (mut x0, mut y0, mut x1, mut y1) = (f64::MAX, f64::MAX, f64::MIN, f64::MIN);
    for &(x, y) in &pts {
        x0 = x0.min(x);
        y0 = y0.min(y);
        x1 = x1.max(x);
        y1 = y1.max(y);
    }
    let span = (x1 - x0).max(y1 - y0).max(1e-9);
    let pad = span * 0.02;
    let stroke = span / 400.0;
    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="{:.6} {:.6} {:.6} {:.6}" width="800" height="{:.0}">"#,
        x0 - pad,
        y0 - pad,
        x1 - x0 + 2.0 * pad,
        y1 - y0 + 2.0 * pad,
        800.0 * (y1 - y0 + 2.0 * pad) / (x1 - x0 + 2.0 * pad)
    );
    for (i, p) in cert.placements.iter().enumerate() {
        let fill = if p.mirrored { "#f2b880" } else { "#8fb8de" };
        let coords: Vec<String> = pts[3 * i..3 * i + 3].iter().map(|(x, y)| format!("{x:.6},{y:.6}")).collect();
        let _ = writeln!(
            s,
            r##"  <polygon points="{}" fill="{fill}" stroke="#222222" stroke-width="{stroke:.6}"/>"##,
            coords.join(" ")
        );
    }
    s.push_str("</svg>\n");
    Ok(s)
}

pub fn render_svg(cert: &Certificate, path: &Path) -> Result<(), SvgError> {
    let s = svg_string(cert)?;
    std::fs::write(path, s)?;
    Ok(())
}

//! Charts of a single weight: a fixed-width text grid or an SVG.

use std::fmt::Write as _;
use std::str::FromStr;

use crate::engine::SsResult;
use crate::error::{Error, Result};
use crate::monomial::Tridegree;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Page {
    R(u32),
    Infinity,
}

impl FromStr for Page {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        if s == "einf" || s == "inf" {
            return Ok(Page::Infinity);
        }
        match s.parse::<u32>() {
            Ok(r) if r >= 1 => Ok(Page::R(r)),
            _ => Err(Error::Usage(format!("bad page {s:?}, expected a positive integer or einf"))),
        }
    }
}

impl Page {
    fn title(self) -> String {
        match self {
            Page::R(r) => format!("E_{r}"),
            Page::Infinity => "E_inf".to_string(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ChartFormat {
    Svg,
    Txt,
}

impl FromStr for ChartFormat {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "svg" => Ok(ChartFormat::Svg),
            "txt" => Ok(ChartFormat::Txt),
            other => Err(Error::Usage(format!("unknown chart format {other:?} (svg, txt)"))),
        }
    }
}

/// `(source (p, q), target (p, q), count)`.
pub type ArrowGroup = ((i64, i64), (i64, i64), usize);

/// What a chart draws: dimensions on the grid and the arrows of one page.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChartData {
    pub title: String,
    pub weight: i64,
    pub p_range: (i64, i64),
    pub q_max: i64,
    /// `(p, q, dim)` for nonzero cells.
    pub cells: Vec<(i64, i64, usize)>,
    pub arrows: Vec<ArrowGroup>,
}

pub fn chart_data(res: &SsResult, page: Page, weight: i64) -> Result<ChartData> {
    let win = &res.window;
    if weight < win.w_min || weight > win.w_max {
        return Err(Error::Domain(format!("weight {weight} is outside the window {win}")));
    }
    let mut cells = Vec::new();
    for q in 0..=win.q_max {
        for p in win.p_min..=win.p_max {
            let t = Tridegree::new(p, q, weight);
            let dim = match page {
                Page::R(r) => res.dim_at_page(t, r),
                Page::Infinity => res.dim(t),
            };
            if dim > 0 {
                cells.push((p, q, dim));
            }
        }
    }
    let mut arrows = std::collections::BTreeMap::new();
    if let Page::R(r) = page {
        for k in res.kills.iter().filter(|k| k.page == r) {
            let (s, t) = (k.source.tridegree(), k.target.tridegree());
            if s.w == weight && win.contains(s) {
                *arrows.entry(((s.p, s.q), (t.p, t.q))).or_insert(0) += 1;
            }
        }
    }
    let arrows = arrows.into_iter().map(|((s, t), n)| (s, t, n)).collect();
    Ok(ChartData {
        title: format!("{} page, {}, weight {weight}", page.title(), res.spec),
        weight,
        p_range: (win.p_min, win.p_max),
        q_max: win.q_max,
        cells,
        arrows,
    })
}

fn dim_at(data: &ChartData, p: i64, q: i64) -> usize {
    data.cells
        .iter()
        .find(|c| c.0 == p && c.1 == q)
        .map_or(0, |c| c.2)
}

/// Rows are filtrations, top row highest; `.` marks an empty cell.
pub fn render_txt(data: &ChartData) -> String {
    const W: usize = 4;
    let mut out = format!("{}\n", data.title);
    for q in (0..=data.q_max).rev() {
        write!(out, "{q:>W$} |").unwrap();
        for p in data.p_range.0..=data.p_range.1 {
            match dim_at(data, p, q) {
                0 => write!(out, "{:>W$}", ".").unwrap(),
                d => write!(out, "{d:>W$}").unwrap(),
            }
        }
        out.push('\n');
    }
    let width = (data.p_range.1 - data.p_range.0 + 1) as usize * W;
    writeln!(out, "{:>W$} +{}", "", "-".repeat(width)).unwrap();
    write!(out, "{:>W$}  ", "q/p").unwrap();
    for p in data.p_range.0..=data.p_range.1 {
        write!(out, "{p:>W$}").unwrap();
    }
    out.push('\n');
    out
}

const CELL: i64 = 40;
const MARGIN: i64 = 40;

pub fn render_svg(data: &ChartData) -> String {
    let cols = data.p_range.1 - data.p_range.0 + 1;
    let rows = data.q_max + 1;
    let (width, height) = (cols * CELL + 2 * MARGIN, rows * CELL + 2 * MARGIN);
    let x = |p: i64| MARGIN + (p - data.p_range.0) * CELL + CELL / 2;
    let y = |q: i64| MARGIN + (data.q_max - q) * CELL + CELL / 2;

    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    )
    .unwrap();
    writeln!(
        out,
        r#"<defs><marker id="head" markerWidth="6" markerHeight="6" refX="5" refY="3" orient="auto"><path d="M0,0 L6,3 L0,6 z"/></marker></defs>"#
    )
    .unwrap();
    writeln!(out, r#"<title>{}</title>"#, data.title).unwrap();
    writeln!(out, r#"<g id="axes" font-size="10" text-anchor="middle">"#).unwrap();
    for p in data.p_range.0..=data.p_range.1 {
        writeln!(out, r#"<text x="{}" y="{}">{p}</text>"#, x(p), height - MARGIN / 3).unwrap();
    }
    for q in 0..=data.q_max {
        writeln!(out, r#"<text x="{}" y="{}">{q}</text>"#, MARGIN / 2, y(q) + 4).unwrap();
    }
    writeln!(out, "</g>").unwrap();

    for &(p, q, dim) in &data.cells {
        writeln!(out, r#"<g id="cell-{p}-{q}" data-dim="{dim}">"#).unwrap();
        if dim <= 3 {
            for k in 0..dim as i64 {
                let dx = (k - (dim as i64 - 1)) * 4 + (dim as i64 - 1) * 2;
                writeln!(out, r#"<circle cx="{}" cy="{}" r="3"/>"#, x(p) + dx, y(q)).unwrap();
            }
        } else {
            writeln!(out, r#"<circle cx="{}" cy="{}" r="8" fill="none" stroke="black"/>"#, x(p), y(q)).unwrap();
            writeln!(out, r#"<text x="{}" y="{}" font-size="9" text-anchor="middle">{dim}</text>"#, x(p), y(q) + 3)
                .unwrap();
        }
        writeln!(out, "</g>").unwrap();
    }

    for &((p, q), (tp, tq), n) in &data.arrows {
        writeln!(
            out,
            r#"<line class="arrow" id="arrow-{p}-{q}-{tp}-{tq}" data-count="{n}" x1="{}" y1="{}" x2="{}" y2="{}" stroke="black" marker-end="url(#head)"/>"#,
            x(p),
            y(q),
            x(tp),
            y(tq)
        )
        .unwrap();
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::run_matching;
    use crate::monomial::{SpectrumSpec, Window};

    fn bp2_tau_squared() -> SsResult {
        run_matching(SpectrumSpec::bp2(), &Window::new(-1, 0, 1, -2, -2).unwrap())
    }

    #[test]
    fn page_one_arrow_from_tau_squared() {
        let data = chart_data(&bp2_tau_squared(), Page::R(1), -2).unwrap();
        assert_eq!(data.arrows, vec![((0, 0), (-1, 1), 1)]);
        let svg = render_svg(&data);
        assert!(svg.contains(r#"<g id="cell-0-0""#));
        assert!(svg.contains(r#"<g id="cell--1-1""#));
        assert!(svg.contains(r#"id="arrow-0-0--1-1""#));
    }

    #[test]
    fn einf_has_no_arrows() {
        let data = chart_data(&bp2_tau_squared(), Page::Infinity, -2).unwrap();
        assert!(data.arrows.is_empty());
        // τ² and ρ³v₁ are gone, ρτ and ρ²τv₁ remain
        assert_eq!(data.cells, vec![(-1, 0, 1), (0, 1, 1)]);
    }

    #[test]
    fn weight_outside_window() {
        assert!(matches!(
            chart_data(&bp2_tau_squared(), Page::R(1), 0),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn txt_grid() {
        let res = run_matching(SpectrumSpec::kgl2(), &Window::new(0, 3, 3, 0, 0).unwrap());
        let txt = render_txt(&chart_data(&res, Page::Infinity, 0).unwrap());
        let lines: Vec<&str> = txt.lines().collect();
        // ρ³v₁³ is ρ-torsion; stem 3 is carried by ρτv₁² at q = 2
        assert_eq!(lines[1], "   3 |   .   .   .   .");
        assert_eq!(lines[2], "   2 |   .   .   1   1");
        assert_eq!(lines[4], "   0 |   1   .   .   .");
    }

    #[test]
    fn pages() {
        assert_eq!("einf".parse::<Page>().unwrap(), Page::Infinity);
        assert_eq!("3".parse::<Page>().unwrap(), Page::R(3));
        assert!("0".parse::<Page>().is_err());
    }
}

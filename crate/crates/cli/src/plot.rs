//! Static SVG generation: line charts for per-round comparison curves, a
//! grouped bar chart for lifetime milestones, and a field map of one
//! round's clusters. Pure string building — deterministic output.

use std::fmt::Write;

use dchfc::{ElectionRow, Role, Topology};

const W: f64 = 820.0;
const H: f64 = 520.0;
const ML: f64 = 84.0; // left margin: room for y tick labels
const MR: f64 = 28.0;
const MT: f64 = 52.0;
const MB: f64 = 64.0;

pub struct Series<'a> {
    pub label: &'a str,
    pub color: &'a str,
    pub points: Vec<(f64, f64)>,
}

/// Compact tick/label formatting: trims trailing zeros, switches to
/// scientific notation outside a comfortable range.
fn num(v: f64) -> String {
    if v == 0.0 {
        return "0".to_string();
    }
    let a = v.abs();
    if !(1e-3..1e6).contains(&a) {
        return format!("{v:.1e}");
    }
    let s = format!("{v:.3}");
    s.trim_end_matches('0').trim_end_matches('.').to_string()
}

fn svg_header(out: &mut String, w: f64, h: f64, title: &str) {
    let _ = write!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {w} {h}" font-family="sans-serif">
<rect width="{w}" height="{h}" fill="white"/>
<text x="{x}" y="28" font-size="17" text-anchor="middle" font-weight="bold">{title}</text>
"#,
        x = w / 2.0,
    );
}

/// A multi-series line chart with zero-based axes and a small legend.
pub fn line_chart(title: &str, x_label: &str, y_label: &str, series: &[Series]) -> String {
    let mut out = String::new();
    svg_header(&mut out, W, H, title);

    let x_max = series
        .iter()
        .flat_map(|s| s.points.iter().map(|p| p.0))
        .fold(1.0f64, f64::max);
    let y_max = series
        .iter()
        .flat_map(|s| s.points.iter().map(|p| p.1))
        .fold(1e-12f64, f64::max)
        * 1.05;

    let px = |x: f64| ML + x / x_max * (W - ML - MR);
    let py = |y: f64| H - MB - y / y_max * (H - MT - MB);

    // axes and ticks
    let _ = write!(
        out,
        r#"<line x1="{ml}" y1="{yb}" x2="{xr}" y2="{yb}" stroke="black"/>
<line x1="{ml}" y1="{mt}" x2="{ml}" y2="{yb}" stroke="black"/>
"#,
        ml = ML,
        mt = MT,
        yb = H - MB,
        xr = W - MR,
    );
    for k in 0..=5 {
        let xv = x_max * k as f64 / 5.0;
        let yv = y_max * k as f64 / 5.0;
        let _ = write!(
            out,
            r##"<line x1="{x:.2}" y1="{yb}" x2="{x:.2}" y2="{yb2}" stroke="black"/>
<text x="{x:.2}" y="{ylab}" font-size="12" text-anchor="middle">{xt}</text>
<line x1="{xl}" y1="{y:.2}" x2="{xl2}" y2="{y:.2}" stroke="black"/>
<text x="{xlab}" y="{ytext:.2}" font-size="12" text-anchor="end">{yt}</text>
<line x1="{ml}" y1="{y:.2}" x2="{xr}" y2="{y:.2}" stroke="#eeeeee"/>
"##,
            x = px(xv),
            yb = H - MB,
            yb2 = H - MB + 6.0,
            ylab = H - MB + 22.0,
            xt = num(xv),
            xl = ML - 6.0,
            xl2 = ML,
            y = py(yv),
            xlab = ML - 10.0,
            ytext = py(yv) + 4.0,
            yt = num(yv),
            ml = ML,
            xr = W - MR,
        );
    }
    let _ = write!(
        out,
        r#"<text x="{xc}" y="{yb}" font-size="14" text-anchor="middle">{x_label}</text>
<text x="20" y="{yc}" font-size="14" text-anchor="middle" transform="rotate(-90 20 {yc})">{y_label}</text>
"#,
        xc = (ML + W - MR) / 2.0,
        yb = H - 16.0,
        yc = (MT + H - MB) / 2.0,
    );

    // series polylines + legend
    for (i, s) in series.iter().enumerate() {
        if !s.points.is_empty() {
            let mut pts = String::new();
            for &(x, y) in &s.points {
                let _ = write!(pts, "{:.2},{:.2} ", px(x), py(y));
            }
            let _ = write!(
                out,
                "<polyline points=\"{}\" fill=\"none\" stroke=\"{}\" stroke-width=\"2\"/>\n",
                pts.trim_end(),
                s.color
            );
        }
        let ly = MT + 10.0 + 20.0 * i as f64;
        let _ = write!(
            out,
            r#"<line x1="{lx}" y1="{ly}" x2="{lx2}" y2="{ly}" stroke="{color}" stroke-width="3"/>
<text x="{lt}" y="{lyt}" font-size="13">{label}</text>
"#,
            lx = W - MR - 150.0,
            lx2 = W - MR - 120.0,
            ly = ly,
            lyt = ly + 4.0,
            lt = W - MR - 112.0,
            color = s.color,
            label = s.label,
        );
    }
    out.push_str("</svg>\n");
    out
}

/// Grouped bar chart: one group per milestone, one bar per mode.
pub fn lifetime_chart(
    title: &str,
    mode_a: &str,
    mode_b: &str,
    // (label, mean rounds for a, mean rounds for b)
    groups: &[(&str, f64, f64)],
) -> String {
    let mut out = String::new();
    svg_header(&mut out, W, H, title);
    let y_max = groups
        .iter()
        .flat_map(|g| [g.1, g.2])
        .fold(1.0f64, f64::max)
        * 1.15;
    let py = |y: f64| H - MB - y / y_max * (H - MT - MB);
    let _ = write!(
        out,
        r#"<line x1="{ml}" y1="{yb}" x2="{xr}" y2="{yb}" stroke="black"/>
<line x1="{ml}" y1="{mt}" x2="{ml}" y2="{yb}" stroke="black"/>
<text x="20" y="{yc}" font-size="14" text-anchor="middle" transform="rotate(-90 20 {yc})">rounds</text>
"#,
        ml = ML,
        mt = MT,
        yb = H - MB,
        xr = W - MR,
        yc = (MT + H - MB) / 2.0,
    );
    for k in 0..=5 {
        let yv = y_max * k as f64 / 5.0;
        let _ = write!(
            out,
            r#"<line x1="{xl}" y1="{y:.2}" x2="{ml}" y2="{y:.2}" stroke="black"/>
<text x="{xlab}" y="{yt:.2}" font-size="12" text-anchor="end">{label}</text>
"#,
            xl = ML - 6.0,
            ml = ML,
            y = py(yv),
            xlab = ML - 10.0,
            yt = py(yv) + 4.0,
            label = num(yv),
        );
    }
    let span = (W - ML - MR) / groups.len() as f64;
    let bar_w = span * 0.28;
    let colors = ["#1f77b4", "#ff7f0e"];
    for (i, (label, a, b)) in groups.iter().enumerate() {
        let cx = ML + span * (i as f64 + 0.5);
        for (j, v) in [a, b].into_iter().enumerate() {
            let x = cx - bar_w + j as f64 * bar_w;
            let _ = write!(
                out,
                r#"<rect x="{x:.2}" y="{y:.2}" width="{bw:.2}" height="{h:.2}" fill="{c}"/>
<text x="{tx:.2}" y="{ty:.2}" font-size="12" text-anchor="middle">{v}</text>
"#,
                y = py(*v),
                bw = bar_w - 2.0,
                h = (H - MB) - py(*v),
                c = colors[j],
                tx = x + bar_w / 2.0,
                ty = py(*v) - 5.0,
                v = num(*v),
            );
        }
        let _ = write!(
            out,
            "<text x=\"{cx:.2}\" y=\"{y}\" font-size=\"14\" text-anchor=\"middle\">{label}</text>\n",
            y = H - MB + 24.0,
        );
    }
    for (j, m) in [mode_a, mode_b].into_iter().enumerate() {
        let ly = MT + 10.0 + 20.0 * j as f64;
        let _ = write!(
            out,
            r#"<rect x="{lx}" y="{ly}" width="24" height="12" fill="{c}"/>
<text x="{lt}" y="{lyt}" font-size="13">{m}</text>
"#,
            lx = W - MR - 150.0,
            ly = ly - 8.0,
            c = colors[j],
            lt = W - MR - 118.0,
            lyt = ly + 3.0,
        );
    }
    out.push_str("</svg>\n");
    out
}

/// Field map of one election round: heads red, malicious black, members
/// gray and linked to their heads, the sink a blue diamond.
pub fn topology_svg(topo: &Topology, election: Option<(u32, &[ElectionRow])>) -> String {
    let side = 700.0;
    let m = 56.0;
    let w = side + 2.0 * m;
    let h = side + 2.0 * m + 36.0;
    let scale = side / topo.field_width.max(topo.field_height);
    let px = |x: f64| m + x * scale;
    // map coordinates: field origin bottom-left
    let py = |y: f64| m + (topo.field_height - y) * scale;

    let title = match election {
        Some((round, _)) => format!("clusters at round {round}"),
        None => "topology".to_string(),
    };
    let mut out = String::new();
    svg_header(&mut out, w, h, &title);
    let _ = write!(
        out,
        "<rect x=\"{m}\" y=\"{m}\" width=\"{fw:.2}\" height=\"{fh:.2}\" fill=\"none\" stroke=\"#999999\"/>\n",
        fw = topo.field_width * scale,
        fh = topo.field_height * scale,
    );

    // member-to-head links first, so nodes draw on top
    if let Some((_, rows)) = election {
        for r in rows {
            if let Some(head) = r.assigned_head {
                let a = topo.node(r.node_id).pos;
                let b = topo.node(head).pos;
                let _ = write!(
                    out,
                    "<line x1=\"{:.2}\" y1=\"{:.2}\" x2=\"{:.2}\" y2=\"{:.2}\" stroke=\"#cccccc\"/>\n",
                    px(a.x),
                    py(a.y),
                    px(b.x),
                    py(b.y)
                );
            }
        }
    }

    for node in &topo.nodes {
        let role = election
            .and_then(|(_, rows)| rows.iter().find(|r| r.node_id == node.id))
            .map(|r| r.role);
        let (radius, fill, stroke) = match role {
            Some(Role::InitialHead) | Some(Role::SpatialHead) => (7.0, "#d62728", "none"),
            Some(Role::Malicious) => (5.0, "#111111", "none"),
            Some(Role::Dead) => (3.0, "white", "#888888"),
            _ if node.is_dropper => (4.0, "#555555", "none"),
            _ => (3.5, "#7f9db9", "none"),
        };
        let _ = write!(
            out,
            "<circle cx=\"{:.2}\" cy=\"{:.2}\" r=\"{radius}\" fill=\"{fill}\" stroke=\"{stroke}\"/>\n",
            px(node.pos.x),
            py(node.pos.y)
        );
    }

    let (sx, sy) = (px(topo.sink.x), py(topo.sink.y));
    let _ = write!(
        out,
        "<path d=\"M {sx:.2} {y1:.2} L {x2:.2} {sy:.2} L {sx:.2} {y2:.2} L {x1:.2} {sy:.2} Z\" fill=\"#1f77b4\"/>\n",
        y1 = sy - 10.0,
        x2 = sx + 10.0,
        y2 = sy + 10.0,
        x1 = sx - 10.0,
    );

    let legend = [
        ("#d62728", "cluster head"),
        ("#7f9db9", "member"),
        ("#111111", "malicious"),
        ("#1f77b4", "sink"),
    ];
    for (i, (color, label)) in legend.iter().enumerate() {
        let lx = m + 170.0 * i as f64;
        let ly = h - 18.0;
        let _ = write!(
            out,
            "<circle cx=\"{lx:.2}\" cy=\"{ly:.2}\" r=\"6\" fill=\"{color}\"/>\n\
             <text x=\"{tx:.2}\" y=\"{ty:.2}\" font-size=\"13\">{label}</text>\n",
            tx = lx + 12.0,
            ty = ly + 4.0,
        );
    }
    out.push_str("</svg>\n");
    out
}

use std::fmt::Write;

use super::geometry::{Point, Shape};
use super::scenario::{MapSpec, Obstacle};

/// SVG frame of the map with obstacles at one instant and the trajectory
/// driven so far. Moving obstacles are black, static ones yellow.
pub fn snapshot_svg(
    map: &MapSpec,
    obstacles: &[Obstacle],
    trajectory: &[Point],
    title: &str,
) -> String {
    let mut s = String::new();
    let (w, h) = (map.width, map.height);
    // y grows upward on the map, so flip the frame
    writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{}" viewBox="0 -20 {w} {}">"#,
        h + 20.0,
        h + 20.0
    )
    .unwrap();
    writeln!(
        s,
        r#"<text x="4" y="-6" font-size="12" font-family="sans-serif">{}</text>"#,
        escape(title)
    )
    .unwrap();
    writeln!(s, r#"<g transform="translate(0,{h}) scale(1,-1)">"#).unwrap();
    writeln!(
        s,
        r#"<rect x="0" y="0" width="{w}" height="{h}" fill="white" stroke="black"/>"#
    )
    .unwrap();
    for o in obstacles {
        let fill = if o.is_dynamic { "black" } else { "gold" };
        match &o.shape {
            Shape::Circle { center, radius } => writeln!(
                s,
                r#"<circle cx="{}" cy="{}" r="{radius}" fill="{fill}"/>"#,
                center.x, center.y
            ),
            Shape::Polygon { vertices } => writeln!(
                s,
                r#"<polygon points="{}" fill="{fill}"/>"#,
                points_attr(vertices)
            ),
        }
        .unwrap();
    }
    if trajectory.len() > 1 {
        writeln!(
            s,
            r#"<polyline points="{}" fill="none" stroke="red" stroke-width="2"/>"#,
            points_attr(trajectory)
        )
        .unwrap();
    }
    for (p, color) in [(map.start, "blue"), (map.goal, "green")] {
        writeln!(
            s,
            r#"<circle cx="{}" cy="{}" r="4" fill="{color}"/>"#,
            p.x, p.y
        )
        .unwrap();
    }
    s.push_str("</g>\n</svg>\n");
    s
}

fn points_attr(points: &[Point]) -> String {
    points
        .iter()
        .map(|p| format!("{},{}", p.x, p.y))
        .collect::<Vec<_>>()
        .join(" ")
}

pub(crate) fn escape(text: &str) -> String {
    text.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
}

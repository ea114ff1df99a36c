//! Deterministic SVG renderings: the membership bar graph and the centroid
//! plot with its schematic triangle.
//!
//! Canvas is fixed at 640x480 with margins of 50 (left), 20 (right), 20
//! (top) and 40 (bottom); the x domain [0, 5] maps at 114 px per unit from
//! x = 50. The bar graph maps membership heights [0, 1] at 420 px per unit
//! up from y = 440; the centroid plot maps y_c over [0, 0.6] at 700 px per
//! unit. Coordinates are computed in exact rational arithmetic and printed
//! with three decimals, so identical inputs always render byte-identical
//! documents.

use num_rational::Rational64;

use pairscore_core::{Centroid, Error, Label, MembershipVector};

use crate::report::decimal_string;

const LEFT: i64 = 50;
const BOTTOM: i64 = 440;
const X_SCALE: i64 = 114;
const BAR_Y_SCALE: i64 = 420;
const CENTROID_Y_SCALE: i64 = 700;

fn x_px(x: Rational64) -> String {
    decimal_string(Rational64::from_integer(LEFT) + x * Rational64::from_integer(X_SCALE), 3)
}

fn svg_open(comment: &str) -> String {
    format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"480\" viewBox=\"0 0 640 480\">\n\
         <!-- {comment} -->\n\
         <rect x=\"0\" y=\"0\" width=\"640\" height=\"480\" fill=\"white\"/>\n"
    )
}

fn axes() -> String {
    format!(
        "<line x1=\"{LEFT}\" y1=\"20\" x2=\"{LEFT}\" y2=\"{BOTTOM}\" stroke=\"black\"/>\n\
         <line x1=\"{LEFT}\" y1=\"{BOTTOM}\" x2=\"620\" y2=\"{BOTTOM}\" stroke=\"black\"/>\n"
    )
}

/// Five unit-width bars over the label intervals, heights equal to the
/// membership frequencies, axis labelled F, D, C, B, A.
pub fn render_bar_chart(membership: &MembershipVector) -> String {
    let mut svg = svg_open(
        "membership bar graph: x domain [0,5] at 114 px per unit from x=50; \
         y domain [0,1] at 420 px per unit up from y=440",
    );

    // y ticks every 0.2
    for tick in 0..=5 {
        let y = BOTTOM - tick * BAR_Y_SCALE / 5;
        let label = match tick {
            0 => "0".to_string(),
            5 => "1.0".to_string(),
            t => format!("0.{}", 2 * t),
        };
        svg.push_str(&format!(
            "<line x1=\"46\" y1=\"{y}\" x2=\"{LEFT}\" y2=\"{y}\" stroke=\"black\"/>\n\
             <text x=\"42\" y=\"{}\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"12\">{label}</text>\n",
            y + 4,
        ));
    }

    let scale = Rational64::from_integer(BAR_Y_SCALE);
    for (i, value) in membership.values().iter().enumerate() {
        let height = *value * scale;
        let top = Rational64::from_integer(BOTTOM) - height;
        let x = LEFT + i as i64 * X_SCALE;
        svg.push_str(&format!(
            "<rect x=\"{x}\" y=\"{}\" width=\"{X_SCALE}\" height=\"{}\" fill=\"#4878a8\" stroke=\"#1f3d5c\"/>\n",
            decimal_string(top, 3),
            decimal_string(height, 3),
        ));
    }

    svg.push_str(&axes());
    for (i, label) in Label::ALL.iter().enumerate() {
        let center = LEFT + i as i64 * X_SCALE + X_SCALE / 2;
        svg.push_str(&format!(
            "<text x=\"{center}\" y=\"458\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\">{label}</text>\n",
        ));
    }
    svg.push_str("</svg>\n");
    svg
}

/// The centroid plane: the schematic triangle through the worst, uniform and
/// ideal extreme points, with one labelled marker per group. Markers are
/// never clipped to the triangle.
pub fn render_centroid_plot(points: &[(String, Centroid)]) -> Result<String, Error> {
    if points.is_empty() {
        return Err(Error::EmptyGroup);
    }
    let mut svg = svg_open(
        "centroid plot: x domain [0,5] at 114 px per unit from x=50; \
         y domain [0,0.6] at 700 px per unit up from y=440",
    );

    for tick in 0..=5 {
        let x = LEFT + tick * X_SCALE;
        svg.push_str(&format!(
            "<line x1=\"{x}\" y1=\"{BOTTOM}\" x2=\"{x}\" y2=\"444\" stroke=\"black\"/>\n\
             <text x=\"{x}\" y=\"456\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">{tick}</text>\n",
        ));
    }
    for tick in 0..=6 {
        let y = BOTTOM - tick * CENTROID_Y_SCALE / 10;
        let label = if tick == 0 {
            "0".to_string()
        } else {
            format!("0.{tick}")
        };
        svg.push_str(&format!(
            "<line x1=\"46\" y1=\"{y}\" x2=\"{LEFT}\" y2=\"{y}\" stroke=\"black\"/>\n\
             <text x=\"42\" y=\"{}\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"12\">{label}</text>\n",
            y + 4,
        ));
    }

    // triangle through the worst (1/2, 1/2), uniform (5/2, 1/10) and ideal
    // (9/2, 1/2) extreme points
    svg.push_str(
        "<polygon points=\"107,90 335,370 563,90\" fill=\"none\" stroke=\"#888888\" stroke-dasharray=\"6 3\"/>\n\
         <text x=\"107\" y=\"82\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">worst</text>\n\
         <text x=\"335\" y=\"386\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">uniform</text>\n\
         <text x=\"563\" y=\"82\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">ideal</text>\n",
    );

    svg.push_str(&axes());
    for (group_id, centroid) in points {
        let cx = x_px(centroid.x());
        let cy = decimal_string(
            Rational64::from_integer(BOTTOM)
                - centroid.y() * Rational64::from_integer(CENTROID_Y_SCALE),
            3,
        );
        svg.push_str(&format!(
            "<circle cx=\"{cx}\" cy=\"{cy}\" r=\"4\" fill=\"#c0392b\"/>\n\
             <text x=\"{cx}\" y=\"{cy}\" dx=\"7\" dy=\"-7\" font-family=\"sans-serif\" font-size=\"12\">{}</text>\n",
            escape_text(group_id),
        ));
    }
    svg.push_str("</svg>\n");
    Ok(svg)
}

fn escape_text(text: &str) -> String {
    text.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

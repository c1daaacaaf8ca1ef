//! File emission: the diagnostics CSV, per-snapshot raw CSV fields,
//! min-max normalized binary PGM images, and snapshot metadata.

use coatsim::analysis::DiagnosticsRecord;
use coatsim::{Field, Grid};

/// Format one float with 17 significant digits (round-trip exact for f64).
pub fn format_float(x: f64) -> String {
    format!("{x:.16e}")
}

/// Snapshot times are embedded in file names: integers print bare
/// (`u_90.pgm`), everything else uses the shortest exact decimal.
pub fn format_time(t: f64) -> String {
    if t == t.trunc() && t.abs() < 1e15 {
        format!("{}", t as i64)
    } else {
        format!("{t}")
    }
}

pub const DIAGNOSTICS_HEADER: &str =
    "t,norm_x,min_u,min_v,max_u,max_v,std_u,neg_energy_u,neg_energy_v,a_norm";

/// Render the diagnostics table as RFC-4180-style CSV (header plus one row
/// per snapshot, comma separated, `\n` line ends).
pub fn diagnostics_csv(records: &[DiagnosticsRecord]) -> String {
    let mut out = String::from(DIAGNOSTICS_HEADER);
    out.push('\n');
    for r in records {
        let row = [
            r.t,
            r.norm_x,
            r.min_u,
            r.min_v,
            r.max_u,
            r.max_v,
            r.std_u,
            r.neg_energy_u,
            r.neg_energy_v,
            r.a_norm,
        ];
        let cells: Vec<String> = row.iter().map(|&x| format_float(x)).collect();
        out.push_str(&cells.join(","));
        out.push('\n');
    }
    out
}

/// Raw row-major field values, one CSV line per grid row.
pub fn field_csv(f: &Field, g: &Grid) -> String {
    let mut out = String::new();
    for j in 0..g.ny() {
        let row: Vec<String> = (0..g.nx()).map(|i| format_float(f.values()[g.idx(i, j)])).collect();
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}

/// Binary P5 image, 8-bit, min-max normalized: pixel (i, j) is
/// `round(255 (v - min) / (max - min))`; a constant field maps to all zeros.
pub fn pgm_bytes(f: &Field, g: &Grid) -> Vec<u8> {
    let min = f.min();
    let max = f.max();
    let mut out = format!("P5\n{} {}\n255\n", g.nx(), g.ny()).into_bytes();
    let span = max - min;
    for j in 0..g.ny() {
        for i in 0..g.nx() {
            let byte = if span > 0.0 {
                let level = (255.0 * (f.values()[g.idx(i, j)] - min) / span).round();
                level.clamp(0.0, 255.0) as u8
            } else {
                0
            };
            out.push(byte);
        }
    }
    out
}

/// Fixed 256-entry gradient (dark blue, cyan, amber, white) for the optional
/// false-color P6 output.
fn colormap(level: u8) -> [u8; 3] {
    const STOPS: [(f64, [f64; 3]); 4] = [
        (0.0, [0.0, 0.0, 128.0]),
        (1.0 / 3.0, [0.0, 160.0, 255.0]),
        (2.0 / 3.0, [255.0, 196.0, 0.0]),
        (1.0, [255.0, 255.0, 255.0]),
    ];
    let t = level as f64 / 255.0;
    let mut rgb = STOPS[3].1;
    for pair in STOPS.windows(2) {
        let (t0, c0) = pair[0];
        let (t1, c1) = pair[1];
        if t <= t1 {
            let s = (t - t0) / (t1 - t0);
            rgb = [
                c0[0] + s * (c1[0] - c0[0]),
                c0[1] + s * (c1[1] - c0[1]),
                c0[2] + s * (c1[2] - c0[2]),
            ];
            break;
        }
    }
    [rgb[0].round() as u8, rgb[1].round() as u8, rgb[2].round() as u8]
}

/// Binary P6 image through the fixed colormap, same normalization as
/// [`pgm_bytes`].
pub fn ppm_bytes(f: &Field, g: &Grid) -> Vec<u8> {
    let min = f.min();
    let max = f.max();
    let mut out = format!("P6\n{} {}\n255\n", g.nx(), g.ny()).into_bytes();
    let span = max - min;
    for j in 0..g.ny() {
        for i in 0..g.nx() {
            let level = if span > 0.0 {
                (255.0 * (f.values()[g.idx(i, j)] - min) / span).round().clamp(0.0, 255.0) as u8
            } else {
                0
            };
            out.extend_from_slice(&colormap(level));
        }
    }
    out
}

/// Per-snapshot metadata: time, normalization range, grid geometry.
pub fn meta_text(t: f64, f: &Field, g: &Grid) -> String {
    format!(
        "t = {}\nmin = {}\nmax = {}\nnx = {}\nny = {}\nlx = {}\nly = {}\n",
        format_float(t),
        format_float(f.min()),
        format_float(f.max()),
        g.nx(),
        g.ny(),
        g.lx(),
        g.ly()
    )
}

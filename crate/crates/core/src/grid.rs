//! Evaluation grids: `x=a:b:step;y=v1,v2,v3`. Each axis takes either an
//! inclusive range `start:stop:step` or a comma-separated list.

use crate::error::{Error, Result};
use crate::problems::{TABLE_X, TABLE_Y};

const MAX_POINTS_PER_AXIS: usize = 100_000;

#[derive(Debug, Clone, PartialEq)]
pub struct GridSpec {
    pub x_points: Vec<f64>,
    pub y_points: Vec<f64>,
}

impl Default for GridSpec {
    /// The 3 x 3 grid of the reference tables.
    fn default() -> Self {
        GridSpec {
            x_points: TABLE_X.to_vec(),
            y_points: TABLE_Y.to_vec(),
        }
    }
}

fn err<T>(offset: usize, message: impl Into<String>) -> Result<T> {
    Err(Error::Parse {
        offset,
        message: message.into(),
    })
}

fn parse_num(text: &str, offset: usize) -> Result<f64> {
    match text.trim().parse::<f64>() {
        Ok(v) if v.is_finite() => Ok(v),
        _ => err(offset, format!("expected a number, found {:?}", text.trim())),
    }
}

fn parse_axis(body: &str, offset: usize) -> Result<Vec<f64>> {
    if body.contains(':') {
        let parts: Vec<&str> = body.split(':').collect();
        if parts.len() != 3 {
            return err(offset, "range must be start:stop:step");
        }
        let start = parse_num(parts[0], offset)?;
        let stop = parse_num(parts[1], offset)?;
        let step = parse_num(parts[2], offset)?;
        if step <= 0.0 || stop < start {
            return err(offset, "range needs step > 0 and stop >= start");
        }
        let count = ((stop - start) / step + 1e-9).floor() as usize + 1;
        if count > MAX_POINTS_PER_AXIS {
            return err(offset, format!("range yields {count} points"));
        }
        Ok((0..count).map(|k| start + k as f64 * step).collect())
    } else {
        let mut pos = offset;
        let mut out = Vec::new();
        for item in body.split(',') {
            out.push(parse_num(item, pos)?);
            pos += item.len() + 1;
        }
        Ok(out)
    }
}

impl GridSpec {
    pub fn parse(text: &str) -> Result<GridSpec> {
        let mut x = None;
        let mut y = None;
        let mut offset = 0;
        for section in text.split(';') {
            let trimmed = section.trim();
            if !trimmed.is_empty() {
                let Some((name, body)) = trimmed.split_once('=') else {
                    return err(offset, "expected 'x=...' or 'y=...'");
                };
                let body_offset = offset + section.find('=').unwrap_or(0) + 1;
                let points = parse_axis(body, body_offset)?;
                match name.trim() {
                    "x" if x.is_none() => x = Some(points),
                    "y" if y.is_none() => y = Some(points),
                    "x" | "y" => return err(offset, format!("axis {} given twice", name.trim())),
                    other => return err(offset, format!("unknown axis {other:?}")),
                }
            }
            offset += section.len() + 1;
        }
        match (x, y) {
            (Some(x_points), Some(y_points)) => Ok(GridSpec { x_points, y_points }),
            _ => err(text.len(), "grid needs both x and y"),
        }
    }

    /// Points in (y, x) row-major order.
    pub fn points(&self) -> Vec<(f64, f64)> {
        self.y_points
            .iter()
            .flat_map(|&y| self.x_points.iter().map(move |&x| (x, y)))
            .collect()
    }
}

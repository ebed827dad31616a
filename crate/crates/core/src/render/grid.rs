use std::io::{Read, Write};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{eval_field, Field};

pub const DEFAULT_CLIP: f64 = 10.0;
pub const DEFAULT_RESOLUTION: usize = 48;
/// Samples this close to a pole are reported as a clipped zero vector.
const POLE_CLEARANCE: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct BBox {
    pub x_min: f64,
    pub x_max: f64,
    pub y_min: f64,
    pub y_max: f64,
}

impl BBox {
    pub fn new(x_min: f64, x_max: f64, y_min: f64, y_max: f64) -> Result<Self> {
        let b = Self {
            x_min,
            x_max,
            y_min,
            y_max,
        };
        b.validate()?;
        Ok(b)
    }

    pub fn square(half_width: f64) -> Result<Self> {
        Self::new(-half_width, half_width, -half_width, half_width)
    }

    pub fn validate(&self) -> Result<()> {
        let finite = [self.x_min, self.x_max, self.y_min, self.y_max]
            .iter()
            .all(|v| v.is_finite());
        if !finite || self.x_min >= self.x_max || self.y_min >= self.y_max {
            return Err(Error::invalid(format!("degenerate bounding box {self:?}")));
        }
        Ok(())
    }

    pub fn width(&self) -> f64 {
        self.x_max - self.x_min
    }

    pub fn height(&self) -> f64 {
        self.y_max - self.y_min
    }

    pub fn contains(&self, z: Complex64) -> bool {
        (self.x_min..=self.x_max).contains(&z.re) && (self.y_min..=self.y_max).contains(&z.im)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Sample {
    pub x: f64,
    pub y: f64,
    pub u: f64,
    pub v: f64,
    pub clipped: bool,
}

/// Velocity samples on a regular lattice including the box edges, rows of
/// constant `y` from bottom to top.
#[derive(Clone, Debug, PartialEq)]
pub struct FieldGrid {
    pub bbox: BBox,
    pub nx: usize,
    pub ny: usize,
    pub samples: Vec<Sample>,
}

impl FieldGrid {
    /// A grid with no samples, for marker-only renders.
    pub fn empty(bbox: BBox) -> Self {
        Self {
            bbox,
            nx: 0,
            ny: 0,
            samples: Vec::new(),
        }
    }
}

fn lattice(lo: f64, hi: f64, count: usize, i: usize) -> f64 {
    lo + (hi - lo) * i as f64 / (count - 1) as f64
}

pub fn sample_grid(field: &Field, bbox: BBox, nx: usize, ny: usize, clip: f64) -> Result<FieldGrid> {
    bbox.validate()?;
    if nx < 2 || ny < 2 {
        return Err(Error::invalid("grid resolution must be at least 2×2"));
    }
    if clip.is_nan() || clip <= 0.0 {
        return Err(Error::invalid("clip threshold must be positive"));
    }
    let poles = field.pole_candidates();
    let mut samples = Vec::with_capacity(nx * ny);
    for j in 0..ny {
        let y = lattice(bbox.y_min, bbox.y_max, ny, j);
        for i in 0..nx {
            let x = lattice(bbox.x_min, bbox.x_max, nx, i);
            let z = Complex64::new(x, y);
            let at_pole = poles.iter().any(|p| (z - p).norm() <= POLE_CLEARANCE);
            let value = if at_pole { None } else { eval_field(field, z).ok() };
            let sample = match value {
                Some(fv) if fv.f.is_finite() => {
                    let mag = fv.f.norm();
                    if mag > clip {
                        let s = clip / mag;
                        Sample {
                            x,
                            y,
                            u: fv.u * s,
                            v: fv.v * s,
                            clipped: true,
                        }
                    } else {
                        Sample {
                            x,
                            y,
                            u: fv.u,
                            v: fv.v,
                            clipped: false,
                        }
                    }
                }
                _ => Sample {
                    x,
                    y,
                    u: 0.0,
                    v: 0.0,
                    clipped: true,
                },
            };
            samples.push(sample);
        }
    }
    Ok(FieldGrid { bbox, nx, ny, samples })
}

/// Writes `x,y,u,v,clipped` rows. Floats use the shortest round-trip form.
pub fn write_csv<W: Write>(grid: &FieldGrid, out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for s in &grid.samples {
        w.serialize(s)?;
    }
    if grid.samples.is_empty() {
        w.write_record(["x", "y", "u", "v", "clipped"])?;
    }
    w.flush()?;
    Ok(())
}

/// Reads samples written by [`write_csv`], recovering the lattice shape.
pub fn read_csv<R: Read>(input: R) -> Result<FieldGrid> {
    let mut r = csv::Reader::from_reader(input);
    let samples: Vec<Sample> = r.deserialize().collect::<std::result::Result<_, _>>()?;
    let Some(first) = samples.first() else {
        return Err(Error::invalid("csv grid has no samples"));
    };
    let nx = samples.iter().take_while(|s| s.y == first.y).count();
    if nx == 0 || !samples.len().is_multiple_of(nx) {
        return Err(Error::invalid("csv rows do not form a rectangular grid"));
    }
    let ny = samples.len() / nx;
    let fold = |f: fn(f64, f64) -> f64, get: fn(&Sample) -> f64, init: f64| samples.iter().map(get).fold(init, f);
    let bbox = BBox {
        x_min: fold(f64::min, |s| s.x, f64::INFINITY),
        x_max: fold(f64::max, |s| s.x, f64::NEG_INFINITY),
        y_min: fold(f64::min, |s| s.y, f64::INFINITY),
        y_max: fold(f64::max, |s| s.y, f64::NEG_INFINITY),
    };
    Ok(FieldGrid { bbox, nx, ny, samples })
}

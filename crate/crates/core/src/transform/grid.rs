//! Sampled complex fields on a uniform rectangle, with interpolation and a
//! JSON-manifest plus CSV file format.

use std::fs;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Smallest admitted grid size per axis.
pub const MIN_NODES: usize = 8;

/// Provenance and validity notes carried alongside grid values.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct GridMetadata {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub method: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rep: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<u32>,
    #[serde(default)]
    pub warnings: Vec<String>,
    /// Width of the boundary ring whose values are not meaningful.
    #[serde(default)]
    pub invalid_ring: usize,
}

impl GridMetadata {
    fn is_empty(&self) -> bool {
        *self == GridMetadata::default()
    }
}

/// How off-node values are read from a grid.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Interpolation {
    Bilinear,
    /// Four-point Lagrange interpolation along each axis.
    #[default]
    Cubic,
}

/// `nx · ny` complex samples; sample `(i, j)` sits at
/// `(xmin + i hx, ymin + j hy)` and is stored at index `i * ny + j`.
#[derive(Clone, Debug, PartialEq)]
pub struct GridFunction2D {
    nx: usize,
    ny: usize,
    xmin: f64,
    xmax: f64,
    ymin: f64,
    ymax: f64,
    values: Vec<Complex64>,
    pub meta: GridMetadata,
}

#[derive(Serialize, Deserialize)]
struct Manifest {
    nx: usize,
    ny: usize,
    xmin: f64,
    xmax: f64,
    ymin: f64,
    ymax: f64,
    csv: String,
}

impl GridFunction2D {
    pub fn new(
        nx: usize,
        ny: usize,
        (xmin, xmax): (f64, f64),
        (ymin, ymax): (f64, f64),
        values: Vec<Complex64>,
    ) -> Result<Self> {
        if nx < MIN_NODES || ny < MIN_NODES {
            return Err(Error::MalformedGrid(format!(
                "grid needs at least {MIN_NODES} nodes per axis, got {nx} x {ny}"
            )));
        }
        if !(xmax > xmin && ymax > ymin) || ![xmin, xmax, ymin, ymax].iter().all(|v| v.is_finite()) {
            return Err(Error::MalformedGrid(format!(
                "grid extent must be finite with positive spacing, got x [{xmin}, {xmax}], y [{ymin}, {ymax}]"
            )));
        }
        if values.len() != nx * ny {
            return Err(Error::MalformedGrid(format!(
                "expected {} samples for a {nx} x {ny} grid, got {}",
                nx * ny,
                values.len()
            )));
        }
        Ok(Self {
            nx,
            ny,
            xmin,
            xmax,
            ymin,
            ymax,
            values,
            meta: GridMetadata::default(),
        })
    }

    /// Sample `f` at every node.
    pub fn from_fn<F>(nx: usize, ny: usize, x: (f64, f64), y: (f64, f64), f: F) -> Result<Self>
    where
        F: Fn(Complex64) -> Complex64,
    {
        let mut grid = Self::new(nx, ny, x, y, vec![Complex64::new(0.0, 0.0); nx * ny])?;
        for i in 0..nx {
            for j in 0..ny {
                let z = grid.node(i, j);
                grid.values[i * ny + j] = f(z);
            }
        }
        Ok(grid)
    }

    /// Same shape and extent with new values; metadata is not copied.
    pub fn with_values(&self, values: Vec<Complex64>) -> Result<Self> {
        Self::new(
            self.nx,
            self.ny,
            (self.xmin, self.xmax),
            (self.ymin, self.ymax),
            values,
        )
    }

    pub fn nx(&self) -> usize {
        self.nx
    }

    pub fn ny(&self) -> usize {
        self.ny
    }

    pub fn x_range(&self) -> (f64, f64) {
        (self.xmin, self.xmax)
    }

    pub fn y_range(&self) -> (f64, f64) {
        (self.ymin, self.ymax)
    }

    pub fn hx(&self) -> f64 {
        (self.xmax - self.xmin) / (self.nx - 1) as f64
    }

    pub fn hy(&self) -> f64 {
        (self.ymax - self.ymin) / (self.ny - 1) as f64
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn values_mut(&mut self) -> &mut [Complex64] {
        &mut self.values
    }

    pub fn index(&self, i: usize, j: usize) -> usize {
        i * self.ny + j
    }

    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.values[self.index(i, j)]
    }

    /// Location of node `(i, j)` as `x + iy`.
    pub fn node(&self, i: usize, j: usize) -> Complex64 {
        Complex64::new(
            self.xmin + i as f64 * self.hx(),
            self.ymin + j as f64 * self.hy(),
        )
    }

    /// Signed distance from `z` to the nearest edge (negative outside).
    pub fn distance_to_boundary(&self, z: Complex64) -> f64 {
        (z.re - self.xmin)
            .min(self.xmax - z.re)
            .min(z.im - self.ymin)
            .min(self.ymax - z.im)
    }

    /// Whether node `(i, j)` lies outside the invalid boundary ring.
    pub fn is_valid(&self, i: usize, j: usize) -> bool {
        let r = self.meta.invalid_ring;
        i >= r && j >= r && i + r < self.nx && j + r < self.ny
    }

    /// Largest modulus over the outermost ring of nodes.
    pub fn boundary_max_abs(&self) -> f64 {
        let mut max: f64 = 0.0;
        for i in 0..self.nx {
            for j in 0..self.ny {
                if i == 0 || j == 0 || i + 1 == self.nx || j + 1 == self.ny {
                    max = max.max(self.get(i, j).norm());
                }
            }
        }
        max
    }

    /// Node value with zero extension outside the grid.
    fn sample(&self, i: isize, j: isize) -> Complex64 {
        if i < 0 || j < 0 || i as usize >= self.nx || j as usize >= self.ny {
            Complex64::new(0.0, 0.0)
        } else {
            self.values[i as usize * self.ny + j as usize]
        }
    }

    /// Value at an arbitrary point; the field is taken to vanish off the grid.
    pub fn interpolate(&self, z: Complex64, method: Interpolation) -> Complex64 {
        let s = (z.re - self.xmin) / self.hx();
        let t = (z.im - self.ymin) / self.hy();
        let reach = 2.0;
        if !(s > -reach && t > -reach && s < self.nx as f64 + reach && t < self.ny as f64 + reach) {
            return Complex64::new(0.0, 0.0);
        }
        let (i0, j0) = (s.floor() as isize, t.floor() as isize);
        let (fs, ft) = (s - i0 as f64, t - j0 as f64);
        match method {
            Interpolation::Bilinear => {
                let a = self.sample(i0, j0) * (1.0 - fs) + self.sample(i0 + 1, j0) * fs;
                let b = self.sample(i0, j0 + 1) * (1.0 - fs) + self.sample(i0 + 1, j0 + 1) * fs;
                a * (1.0 - ft) + b * ft
            }
            Interpolation::Cubic => {
                let ws = lagrange4(fs);
                let wt = lagrange4(ft);
                let mut acc = Complex64::new(0.0, 0.0);
                for (di, wi) in ws.iter().enumerate() {
                    let mut col = Complex64::new(0.0, 0.0);
                    for (dj, wj) in wt.iter().enumerate() {
                        col += self.sample(i0 - 1 + di as isize, j0 - 1 + dj as isize) * *wj;
                    }
                    acc += col * *wi;
                }
                acc
            }
        }
    }

    /// Write `<path>` (manifest), `<stem>.csv` (values) and, when there is
    /// any, `<stem>.meta.json` (metadata) next to it.
    pub fn write(&self, manifest_path: &Path) -> Result<()> {
        let stem = manifest_path
            .file_stem()
            .and_then(|s| s.to_str())
            .ok_or_else(|| Error::MalformedGrid(format!("bad manifest path {}", manifest_path.display())))?;
        let dir = manifest_path.parent().unwrap_or_else(|| Path::new(""));
        let csv_name = format!("{stem}.csv");

        let mut csv = BufWriter::new(fs::File::create(dir.join(&csv_name))?);
        for v in &self.values {
            writeln!(csv, "{},{}", fmt_float(v.re), fmt_float(v.im))?;
        }
        csv.flush()?;

        let manifest = format!(
            "{{\"nx\":{},\"ny\":{},\"xmin\":{},\"xmax\":{},\"ymin\":{},\"ymax\":{},\"csv\":{}}}\n",
            self.nx,
            self.ny,
            fmt_float(self.xmin),
            fmt_float(self.xmax),
            fmt_float(self.ymin),
            fmt_float(self.ymax),
            serde_json::to_string(&csv_name)?,
        );
        fs::write(manifest_path, manifest)?;

        let meta_path = metadata_path(manifest_path);
        if self.meta.is_empty() {
            if meta_path.exists() {
                fs::remove_file(&meta_path)?;
            }
        } else {
            fs::write(&meta_path, serde_json::to_string_pretty(&self.meta)? + "\n")?;
        }
        Ok(())
    }

    /// Read a manifest and its CSV; the CSV path is relative to the manifest.
    pub fn read(manifest_path: &Path) -> Result<Self> {
        let text = fs::read_to_string(manifest_path)?;
        let manifest: Manifest = serde_json::from_str(&text)
            .map_err(|e| Error::MalformedGrid(format!("{}: {e}", manifest_path.display())))?;
        let dir = manifest_path.parent().unwrap_or_else(|| Path::new(""));
        let csv_path = dir.join(&manifest.csv);
        let reader = BufReader::new(fs::File::open(&csv_path).map_err(|e| {
            Error::MalformedGrid(format!("cannot open {}: {e}", csv_path.display()))
        })?);

        let mut values = Vec::with_capacity(manifest.nx * manifest.ny);
        for (lineno, line) in reader.lines().enumerate() {
            let line = line?;
            let line = line.trim();
            if line.is_empty() || (lineno == 0 && line.eq_ignore_ascii_case("re,im")) {
                continue;
            }
            values.push(parse_row(line).ok_or_else(|| {
                Error::MalformedGrid(format!(
                    "{}:{}: expected \"re,im\", got {line:?}",
                    csv_path.display(),
                    lineno + 1
                ))
            })?);
        }
        let mut grid = Self::new(
            manifest.nx,
            manifest.ny,
            (manifest.xmin, manifest.xmax),
            (manifest.ymin, manifest.ymax),
            values,
        )?;
        let meta_path = metadata_path(manifest_path);
        if meta_path.exists() {
            grid.meta = serde_json::from_str(&fs::read_to_string(&meta_path)?)
                .map_err(|e| Error::MalformedGrid(format!("{}: {e}", meta_path.display())))?;
        }
        Ok(grid)
    }
}

/// `<stem>.meta.json` beside the manifest.
pub fn metadata_path(manifest_path: &Path) -> PathBuf {
    let stem = manifest_path
        .file_stem()
        .and_then(|s| s.to_str())
        .unwrap_or("grid");
    manifest_path.with_file_name(format!("{stem}.meta.json"))
}

/// Seventeen significant digits in scientific notation.
pub fn fmt_float(x: f64) -> String {
    format!("{x:.16e}")
}

fn parse_row(line: &str) -> Option<Complex64> {
    let mut parts = line.split(',');
    let re = parts.next()?.trim().parse().ok()?;
    let im = parts.next()?.trim().parse().ok()?;
    if parts.next().is_some() {
        return None;
    }
    Some(Complex64::new(re, im))
}

/// Lagrange weights for nodes `-1, 0, 1, 2` at offset `f`.
fn lagrange4(f: f64) -> [f64; 4] {
    [
        -f * (f - 1.0) * (f - 2.0) / 6.0,
        (f + 1.0) * (f - 1.0) * (f - 2.0) / 2.0,
        -(f + 1.0) * f * (f - 2.0) / 2.0,
        (f + 1.0) * f * (f - 1.0) / 6.0,
    ]
}

//! Non-intersecting lattice-path representation of descending plane
//! partitions.
//!
//! Each row of a DPP becomes one monotone staircase path on the integer
//! grid, built from the two unit steps
//!
//! * `E` — east, `(1, 0)`,
//! * `S` — south, `(0, -1)`.
//!
//! The path of a row with parts `v_1 >= v_2 >= ... >= v_L` starts at
//! `(0, v_1)` and records each part as one `E` step at height equal to the
//! part: between consecutive parts the path descends by `v_c - v_{c+1}`
//! `S` steps. It ends immediately after its last `E` step, so a well-formed
//! path starts and ends with `E` and its `E`-step heights read back the row.
//!
//! Stacking the paths of all rows in one grid (every path starts in column
//! 0) makes the strict column decrease of the DPP exactly the statement
//! that no two paths share a grid point: at each integer column `x` the
//! path of row `i` occupies the heights between its parts at offsets `x`
//! and `x + 1`, which lie strictly above the heights occupied by the path
//! of row `i + 1`. A part is special precisely when its `E` step starts on
//! or below the diagonal `y = x`.

use crate::dpp::{Dpp, DppError};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::collections::HashSet;
use std::fmt;
use thiserror::Error;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum PathError {
    /// The family violates the encoding conventions: paths intersect, a
    /// start point is off the `x = 0` column, or a step string is empty or
    /// has a leading/trailing `S` run.
    #[error("malformed path family: {0}")]
    MalformedFamily(String),
    /// The family is well-formed but the decoded array violates the DPP
    /// definition; this signals an encoding bug upstream.
    #[error("decoded array is not a valid descending plane partition: {0}")]
    DecodedObjectInvalid(#[from] DppError),
}

impl PathError {
    /// Stable taxonomy name of the failure.
    pub fn name(&self) -> &'static str {
        match self {
            PathError::MalformedFamily(_) => "MalformedFamily",
            PathError::DecodedObjectInvalid(_) => "DecodedObjectInvalid",
        }
    }
}

/// A unit step of a lattice path.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Step {
    East,
    South,
}

impl Step {
    pub fn letter(self) -> char {
        match self {
            Step::East => 'E',
            Step::South => 'S',
        }
    }

    pub fn delta(self) -> (i64, i64) {
        match self {
            Step::East => (1, 0),
            Step::South => (0, -1),
        }
    }

    pub fn from_letter(c: char) -> Option<Step> {
        match c {
            'E' => Some(Step::East),
            'S' => Some(Step::South),
            _ => None,
        }
    }
}

/// A lattice path: a start point and a finite step sequence. The grid
/// points it visits are all distinct because both steps are monotone.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LatticePath {
    start: (i64, i64),
    steps: Vec<Step>,
}

impl LatticePath {
    pub fn new(start: (i64, i64), steps: Vec<Step>) -> Self {
        LatticePath { start, steps }
    }

    pub fn start(&self) -> (i64, i64) {
        self.start
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn steps_string(&self) -> String {
        self.steps.iter().map(|s| s.letter()).collect()
    }

    pub fn end(&self) -> (i64, i64) {
        let (mut x, mut y) = self.start;
        for s in &self.steps {
            let (dx, dy) = s.delta();
            x += dx;
            y += dy;
        }
        (x, y)
    }

    /// All visited grid points, start first.
    pub fn points(&self) -> Vec<(i64, i64)> {
        let mut pts = Vec::with_capacity(self.steps.len() + 1);
        let (mut x, mut y) = self.start;
        pts.push((x, y));
        for s in &self.steps {
            let (dx, dy) = s.delta();
            x += dx;
            y += dy;
            pts.push((x, y));
        }
        pts
    }
}

#[derive(Serialize, Deserialize)]
struct PathRepr {
    start: [i64; 2],
    steps: String,
}

impl Serialize for LatticePath {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        PathRepr { start: [self.start.0, self.start.1], steps: self.steps_string() }
            .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for LatticePath {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = PathRepr::deserialize(deserializer)?;
        let steps = repr
            .steps
            .chars()
            .map(|c| {
                Step::from_letter(c).ok_or_else(|| {
                    serde::de::Error::custom(format!("invalid step letter {c:?}, expected E or S"))
                })
            })
            .collect::<Result<_, _>>()?;
        Ok(LatticePath { start: (repr.start[0], repr.start[1]), steps })
    }
}

/// An ordered family of lattice paths, one per DPP row, in row order.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct PathFamily {
    paths: Vec<LatticePath>,
}

impl PathFamily {
    pub fn new(paths: Vec<LatticePath>) -> Self {
        PathFamily { paths }
    }

    pub fn empty() -> Self {
        PathFamily::default()
    }

    pub fn paths(&self) -> &[LatticePath] {
        &self.paths
    }

    pub fn len(&self) -> usize {
        self.paths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.paths.is_empty()
    }

    /// A plain-text rendering of the family for debugging: one character
    /// per visited grid point, labelled by 1-based path index ('#' marks a
    /// point shared by two paths).
    pub fn ascii_diagram(&self) -> String {
        if self.paths.is_empty() {
            return String::from("(empty family)\n");
        }
        let pts: Vec<Vec<(i64, i64)>> = self.paths.iter().map(|p| p.points()).collect();
        let all = pts.iter().flatten().copied().collect::<Vec<_>>();
        let (min_x, max_x) = (
            all.iter().map(|p| p.0).min().unwrap().min(0),
            all.iter().map(|p| p.0).max().unwrap(),
        );
        let (min_y, max_y) = (
            all.iter().map(|p| p.1).min().unwrap().min(0),
            all.iter().map(|p| p.1).max().unwrap(),
        );
        let mut out = String::new();
        for y in (min_y..=max_y).rev() {
            out.push_str(&format!("{y:>3} "));
            for x in min_x..=max_x {
                let mut c = if y == x { '.' } else { ' ' };
                for (i, path) in pts.iter().enumerate() {
                    if path.contains(&(x, y)) {
                        c = if c.is_ascii_digit() || c.is_ascii_lowercase() {
                            '#'
                        } else {
                            char::from_digit((i + 1) as u32 % 36, 36).unwrap_or('?')
                        };
                    }
                }
                out.push(c);
            }
            out.push('\n');
        }
        out
    }
}

impl Serialize for PathFamily {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.paths.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for PathFamily {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        Ok(PathFamily { paths: Vec::<LatticePath>::deserialize(deserializer)? })
    }
}

/// The staircase path of one row: east steps at the part values, south
/// runs between them, starting at `(0, first part)`.
pub(crate) fn row_path(row: &[u32]) -> LatticePath {
    let mut steps = vec![Step::East];
    for c in 1..row.len() {
        for _ in 0..(row[c - 1] - row[c]) {
            steps.push(Step::South);
        }
        steps.push(Step::East);
    }
    LatticePath::new((0, row[0] as i64), steps)
}

/// Encodes a DPP as its family of non-intersecting lattice paths, one path
/// per row in row order. Total on valid DPPs; the empty DPP maps to the
/// empty family.
pub fn dpp_to_paths(d: &Dpp) -> PathFamily {
    PathFamily { paths: d.rows().iter().map(|row| row_path(row)).collect() }
}

/// True iff no grid point is visited by two distinct paths of the family.
pub fn check_nonintersecting(f: &PathFamily) -> bool {
    let mut seen = HashSet::new();
    for path in &f.paths {
        for pt in path.points() {
            if !seen.insert(pt) {
                return false;
            }
        }
    }
    true
}

/// Decodes a path family back into a DPP; exact inverse of
/// [`dpp_to_paths`] on its image.
pub fn paths_to_dpp(f: &PathFamily) -> Result<Dpp, PathError> {
    let mut rows = Vec::with_capacity(f.paths.len());
    for (i, path) in f.paths.iter().enumerate() {
        let label = i + 1;
        if path.start.0 != 0 {
            return Err(PathError::MalformedFamily(format!(
                "path {label} starts at column {}, expected 0",
                path.start.0
            )));
        }
        if path.steps.first() != Some(&Step::East) {
            return Err(PathError::MalformedFamily(format!(
                "path {label} does not start with an E step"
            )));
        }
        if path.steps.last() != Some(&Step::East) {
            return Err(PathError::MalformedFamily(format!(
                "path {label} does not end with an E step"
            )));
        }
        let mut row = Vec::new();
        let mut height = path.start.1;
        for step in &path.steps {
            match step {
                Step::East => row.push(height),
                Step::South => height -= 1,
            }
        }
        rows.push(row);
    }
    if !check_nonintersecting(f) {
        return Err(PathError::MalformedFamily(String::from(
            "two paths share a grid point",
        )));
    }
    Ok(Dpp::new(rows)?)
}

impl fmt::Display for PathFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.ascii_diagram())
    }
}

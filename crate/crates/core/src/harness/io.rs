//! Instance and solution files.

use std::path::Path;
use std::time::Duration;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geom::{Line, Point};
use crate::maxcol::{Color, ColoringCertificate, Halfplane, HalfplaneSide, PairInstance};
use crate::mrr_rotating::Support;
use crate::range_count::{count_open_interior, OrientedRect};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MrrInstanceFile {
    pub red: Vec<Point>,
    pub blue: Vec<Point>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MaxColInstanceFile {
    pub pairs: Vec<[Point; 2]>,
}

impl MaxColInstanceFile {
    pub fn to_instance(&self) -> Result<PairInstance> {
        PairInstance::new(self.pairs.iter().map(|&[a, b]| (a, b)).collect())
    }
}

/// Either instance shape; told apart by its fields.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum InstanceFile {
    Mrr(MrrInstanceFile),
    MaxCol(MaxColInstanceFile),
}

impl InstanceFile {
    pub fn points(&self) -> Vec<Point> {
        match self {
            InstanceFile::Mrr(m) => m.red.iter().chain(&m.blue).copied().collect(),
            InstanceFile::MaxCol(m) => m.pairs.iter().flatten().copied().collect(),
        }
    }

    pub fn as_mrr(&self) -> Result<&MrrInstanceFile> {
        match self {
            InstanceFile::Mrr(m) => Ok(m),
            InstanceFile::MaxCol(_) => Err(Error::Parse("expected an instance with red and blue points".into())),
        }
    }

    pub fn as_maxcol(&self) -> Result<&MaxColInstanceFile> {
        match self {
            InstanceFile::MaxCol(m) => Ok(m),
            InstanceFile::Mrr(_) => Err(Error::Parse("expected an instance with point pairs".into())),
        }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    /// Pretty JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("instances always serialize");
        s.push('\n');
        s
    }

    pub fn load(path: &Path) -> Result<Self> {
        Self::from_json(&std::fs::read_to_string(path)?)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Problem {
    Mrr,
    MrrAxis,
    #[serde(rename = "maxcol")]
    MaxCol,
}

impl Problem {
    pub fn name(&self) -> &'static str {
        match self {
            Problem::Mrr => "mrr",
            Problem::MrrAxis => "mrr-axis",
            Problem::MaxCol => "maxcol",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColoredPoint {
    pub point: Point,
    pub color: Color,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Certificate {
    Rectangle {
        rect: OrientedRect,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        support: Option<Support>,
    },
    /// Open halfplane strictly on `side` of `a·x + b·y + c = 0`, with
    /// `b > 0` (or `b = 0`, `a > 0`) so that "above" means `> 0`.
    Halfplane {
        line: [String; 3],
        side: HalfplaneSide,
        coloring: Vec<ColoredPoint>,
        red_points_in_halfplane: Vec<Point>,
    },
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Stats {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub candidates_enumerated: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub events_processed: Option<usize>,
    pub wall_time_ms: f64,
}

impl Stats {
    pub fn with_time(mut self, elapsed: Duration) -> Self {
        self.wall_time_ms = elapsed.as_secs_f64() * 1e3;
        self
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SolutionFile {
    pub problem: Problem,
    pub objective: usize,
    pub certificate: Certificate,
    pub stats: Stats,
}

impl SolutionFile {
    pub fn rectangle(problem: Problem, objective: usize, rect: OrientedRect, support: Option<Support>, stats: Stats) -> Self {
        SolutionFile {
            problem,
            objective,
            certificate: Certificate::Rectangle { rect, support },
            stats,
        }
    }

    pub fn coloring(instance: &PairInstance, cert: &ColoringCertificate, stats: Stats) -> Self {
        let (a, b, c) = cert.halfplane.line.coefficients();
        let coloring = instance
            .pairs()
            .iter()
            .zip(&cert.coloring)
            .flat_map(|(&(p, q), &(cp, cq))| {
                [
                    ColoredPoint { point: p, color: cp },
                    ColoredPoint { point: q, color: cq },
                ]
            })
            .collect();
        SolutionFile {
            problem: Problem::MaxCol,
            objective: cert.eta,
            certificate: Certificate::Halfplane {
                line: [a.to_string(), b.to_string(), c.to_string()],
                side: cert.halfplane.side,
                coloring,
                red_points_in_halfplane: cert.red_points_in_halfplane.clone(),
            },
            stats,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("solutions always serialize");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    /// Recounts the certificate against `instance`.
    pub fn validate(&self, instance: &InstanceFile) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidCertificate(msg));
        match &self.certificate {
            Certificate::Rectangle { rect, .. } => {
                let inst = instance.as_mrr()?;
                let blue = count_open_interior(&inst.blue, rect);
                if blue != 0 {
                    return bad(format!("{blue} blue points inside the rectangle"));
                }
                let red = inst.red.iter().filter(|p| rect.contains_closed(**p)).count();
                if red != self.objective {
                    return bad(format!("rectangle holds {red} reds, objective is {}", self.objective));
                }
                Ok(())
            }
            Certificate::Halfplane {
                line,
                side,
                coloring,
                red_points_in_halfplane,
            } => {
                let pairs = instance.as_maxcol()?.to_instance()?;
                let coef = |s: &String| s.parse::<i128>().map_err(|e| Error::Parse(format!("line coefficient {s:?}: {e}")));
                let line = Line::new(coef(&line[0])?, coef(&line[1])?, coef(&line[2])?)?;
                if coloring.len() != 2 * pairs.len() {
                    return bad("coloring does not cover every point".into());
                }
                let mut colors = Vec::with_capacity(pairs.len());
                for (&(p, q), c) in pairs.pairs().iter().zip(coloring.chunks(2)) {
                    if c[0].point != p || c[1].point != q {
                        return bad("coloring lists points out of order".into());
                    }
                    colors.push((c[0].color, c[1].color));
                }
                ColoringCertificate {
                    halfplane: Halfplane { line, side: *side },
                    eta: self.objective,
                    coloring: colors,
                    red_points_in_halfplane: red_points_in_halfplane.clone(),
                }
                .validate(&pairs)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn instance_round_trip() {
        let mrr = InstanceFile::Mrr(MrrInstanceFile {
            red: vec![Point::new(1, 2)],
            blue: vec![Point::new(-3, 4), Point::new(5, 0)],
        });
        assert_eq!(InstanceFile::from_json(&mrr.to_json()).unwrap(), mrr);
        let mc = InstanceFile::MaxCol(MaxColInstanceFile {
            pairs: vec![[Point::new(0, 0), Point::new(1, 1)]],
        });
        assert_eq!(InstanceFile::from_json(&mc.to_json()).unwrap(), mc);
    }

    #[test]
    fn shape_is_detected() {
        let i = InstanceFile::from_json(r#"{"pairs": [[[0,0],[2,2]]]}"#).unwrap();
        assert!(matches!(i, InstanceFile::MaxCol(_)));
        let i = InstanceFile::from_json(r#"{"red": [[0,0]], "blue": []}"#).unwrap();
        assert!(matches!(i, InstanceFile::Mrr(_)));
        assert!(InstanceFile::from_json(r#"{"red": [[0,0]]}"#).is_err());
        assert!(InstanceFile::from_json(r#"{"red": [[0,0.5]], "blue": []}"#).is_err());
    }

    #[test]
    fn rectangle_solution_round_trip_and_validate() {
        use crate::range_count::Bound;
        use crate::geom::Direction;
        let inst = InstanceFile::Mrr(MrrInstanceFile {
            red: vec![Point::new(0, 0), Point::new(10, 0)],
            blue: vec![Point::new(5, 1)],
        });
        let rect = OrientedRect::new(Direction::EAST, Bound::NegInf, Bound::PosInf, Bound::NegInf, Bound::int(1)).unwrap();
        let sol = SolutionFile::rectangle(Problem::MrrAxis, 2, rect, None, Stats::default());
        let text = sol.to_json();
        assert!(text.contains("\"-inf\""));
        let back = SolutionFile::from_json(&text).unwrap();
        assert_eq!(back, sol);
        back.validate(&inst).unwrap();
        let wrong = SolutionFile { objective: 1, ..back };
        assert!(wrong.validate(&inst).is_err());
    }
}

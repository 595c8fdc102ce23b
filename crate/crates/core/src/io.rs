//! JSON interchange for bodies, coverings and reports.

use serde::{Deserialize, Serialize};
use std::io;

use crate::cover::{Budget, CoverParams, CoverResult, CoverTrace};
use crate::geom::{Body2, GeomError, Piece, Plank, Point, Polytope3, Vec2, Vec3};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, thiserror::Error)]
pub enum IoError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Geom(#[from] GeomError),
    #[error("{0}")]
    Schema(String),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum PieceJson {
    Seg { from: [f64; 2], to: [f64; 2] },
    Arc { center: [f64; 2], radius: f64, from_angle: f64, to_angle: f64 },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum BodyJson {
    Polygon { dim: u8, vertices: Vec<[f64; 2]> },
    Arcgon { dim: u8, pieces: Vec<PieceJson> },
    Polytope { dim: u8, vertices: Vec<[f64; 3]> },
}

/// A parsed body of either dimension.
#[derive(Clone, Debug, PartialEq)]
pub enum AnyBody {
    Planar(Body2),
    Spatial(Polytope3),
}

impl AnyBody {
    pub fn dim(&self) -> usize {
        match self {
            AnyBody::Planar(_) => 2,
            AnyBody::Spatial(_) => 3,
        }
    }
}

impl BodyJson {
    pub fn build(&self) -> Result<AnyBody, IoError> {
        let want = |dim: u8, d: u8| {
            if dim == d {
                Ok(())
            } else {
                Err(IoError::Schema(format!("dim {dim} does not match body type (expected {d})")))
            }
        };
        match self {
            BodyJson::Polygon { dim, vertices } => {
                want(*dim, 2)?;
                let v: Vec<Vec2> = vertices.iter().map(|p| Vec2::new(p[0], p[1])).collect();
                Ok(AnyBody::Planar(Body2::polygon(&v)?))
            }
            BodyJson::Arcgon { dim, pieces } => {
                want(*dim, 2)?;
                let pieces = pieces
                    .iter()
                    .map(|p| match *p {
                        PieceJson::Seg { from, to } => Piece::Segment {
                            from: Vec2::new(from[0], from[1]),
                            to: Vec2::new(to[0], to[1]),
                        },
                        PieceJson::Arc { center, radius, from_angle, to_angle } => {
                            Piece::arc(Vec2::new(center[0], center[1]), radius, from_angle, to_angle)
                        }
                    })
                    .collect();
                Ok(AnyBody::Planar(Body2::new(pieces)?))
            }
            BodyJson::Polytope { dim, vertices } => {
                want(*dim, 3)?;
                let v: Vec<Vec3> = vertices.iter().map(|p| Vec3::new(p[0], p[1], p[2])).collect();
                Ok(AnyBody::Spatial(Polytope3::hull(&v)?))
            }
        }
    }

    pub fn from_body2(body: &Body2) -> Self {
        if body.is_polygon() {
            let vertices = body.corners().iter().map(|v| [v.x, v.y]).collect();
            return BodyJson::Polygon { dim: 2, vertices };
        }
        let pieces = body
            .pieces()
            .iter()
            .map(|p| match *p {
                Piece::Segment { from, to } => PieceJson::Seg { from: [from.x, from.y], to: [to.x, to.y] },
                Piece::Arc { center, radius, start, sweep } => PieceJson::Arc {
                    center: [center.x, center.y],
                    radius,
                    from_angle: start,
                    to_angle: start + sweep,
                },
            })
            .collect();
        BodyJson::Arcgon { dim: 2, pieces }
    }

    pub fn from_polytope(body: &Polytope3) -> Self {
        let vertices = body.vertices().iter().map(|v| [v.x, v.y, v.z]).collect();
        BodyJson::Polytope { dim: 3, vertices }
    }
}

pub fn parse_body(text: &str) -> Result<AnyBody, IoError> {
    serde_json::from_str::<BodyJson>(text)?.build()
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PlankJson {
    pub normal: Vec<f64>,
    pub lo: f64,
    pub hi: f64,
}

/// Serialized [`CoverResult`].
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CoverJson {
    pub schema_version: u32,
    pub dim: usize,
    pub w: f64,
    pub total_width: f64,
    pub margin: f64,
    pub epsilon: f64,
    pub y: Vec<f64>,
    pub planks: Vec<PlankJson>,
    pub params: CoverParams,
    pub trace: CoverTrace,
}

fn point<const D: usize>(v: &[f64]) -> Result<Point<D>, IoError> {
    if v.len() != D {
        return Err(IoError::Schema(format!("expected {D} coordinates, got {}", v.len())));
    }
    Ok(Point::<D>::from_column_slice(v))
}

impl CoverJson {
    pub fn from_result<const D: usize>(r: &CoverResult<D>) -> Self {
        Self {
            schema_version: SCHEMA_VERSION,
            dim: D,
            w: r.budget.w,
            total_width: r.budget.total_width,
            margin: r.budget.margin,
            epsilon: r.params.epsilon,
            y: r.y.iter().copied().collect(),
            planks: r
                .planks
                .iter()
                .map(|p| PlankJson { normal: p.normal.iter().copied().collect(), lo: p.lo, hi: p.hi })
                .collect(),
            params: r.params,
            trace: r.trace.clone(),
        }
    }

    /// Rebuild the in-memory result. Plank normals are taken as given, so a
    /// forged file is judged on exactly what it states.
    pub fn to_result<const D: usize>(&self) -> Result<CoverResult<D>, IoError> {
        if self.schema_version != SCHEMA_VERSION {
            return Err(IoError::Schema(format!("unsupported schema_version {}", self.schema_version)));
        }
        if self.dim != D {
            return Err(IoError::Schema(format!("cover has dim {}, body has dim {D}", self.dim)));
        }
        let planks = self
            .planks
            .iter()
            .map(|p| Ok(Plank { normal: point::<D>(&p.normal)?, lo: p.lo, hi: p.hi }))
            .collect::<Result<Vec<_>, IoError>>()?;
        let mut params = self.params;
        params.epsilon = self.epsilon;
        Ok(CoverResult {
            y: point::<D>(&self.y)?,
            planks,
            params,
            trace: self.trace.clone(),
            budget: Budget { w: self.w, total_width: self.total_width, margin: self.margin },
        })
    }
}

/// Pretty JSON with every float written to 17 significant digits.
#[derive(Default)]
pub struct Sig17Formatter {
    inner: serde_json::ser::PrettyFormatter<'static>,
}

impl serde_json::ser::Formatter for Sig17Formatter {
    fn write_f64<W: ?Sized + io::Write>(&mut self, w: &mut W, value: f64) -> io::Result<()> {
        write!(w, "{value:.16e}")
    }
    fn write_f32<W: ?Sized + io::Write>(&mut self, w: &mut W, value: f32) -> io::Result<()> {
        self.write_f64(w, value as f64)
    }
    fn begin_array<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.inner.begin_array(w)
    }
    fn end_array<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.inner.end_array(w)
    }
    fn begin_array_value<W: ?Sized + io::Write>(&mut self, w: &mut W, first: bool) -> io::Result<()> {
        self.inner.begin_array_value(w, first)
    }
    fn end_array_value<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.inner.end_array_value(w)
    }
    fn begin_object<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.inner.begin_object(w)
    }
    fn end_object<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.inner.end_object(w)
    }
    fn begin_object_key<W: ?Sized + io::Write>(&mut self, w: &mut W, first: bool) -> io::Result<()> {
        self.inner.begin_object_key(w, first)
    }
    fn end_object_key<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.inner.end_object_key(w)
    }
    fn begin_object_value<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.inner.begin_object_value(w)
    }
    fn end_object_value<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.inner.end_object_value(w)
    }
}

pub fn to_json<T: Serialize>(value: &T) -> Result<String, IoError> {
    let mut buf = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut buf, Sig17Formatter::default());
    value.serialize(&mut ser)?;
    buf.push(b'\n');
    Ok(String::from_utf8(buf).expect("serde_json writes UTF-8"))
}

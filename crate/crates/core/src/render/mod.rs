//! Planar and spherical sampling of fields and SVG/CSV output.

mod grid;
mod sphere;
mod svg;

pub use grid::{read_csv, sample_grid, write_csv, BBox, FieldGrid, Sample, DEFAULT_CLIP, DEFAULT_RESOLUTION};
pub use sphere::{
    lift_vector, north_pole_classify, sphere_point, stereographic_project, to_plane, NorthPoleBehavior,
    NorthPoleReport, SphereSample,
};
pub use svg::render_svg;

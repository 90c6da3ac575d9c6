//! Level-`n` approximations `Δ_n` of the attractor, hole classification,
//! area and box-dimension estimates, and SVG rendering.

pub mod holes;
pub mod level;
pub mod measure;
pub mod render;

pub use holes::{
    check_total_self_similarity, classify_holes, is_radial, HoleReport, Verdict, Violation,
};
pub use level::{build_level, LevelSet, LevelTower, Limits, DEFAULT_WORD_CAP};
pub use measure::{box_dimension_estimate, estimate_area, AreaBracket, BoxDimension};
pub use render::{render_svg, RenderOptions};

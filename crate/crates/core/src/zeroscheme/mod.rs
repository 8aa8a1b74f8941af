//! Zero schemes of total vector fields over matrix families, their eliminated
//! presentations, fibers and components.

mod components;
mod family;
mod ideal;
mod present;
mod report;
mod solve;

pub use components::{
    components_over_regular, fiber_is_reduced, fixed_point_components, parameter_ctx, poincare_check, solve_fiber,
    Component, FixedPointSolution, PoincareCheck,
};
pub use family::{Direction, FamilyKind, MatrixFamily};
pub use ideal::{borel_ideal, kostant_ideal, zero_scheme_ideal, ZeroSchemeIdeal};
pub use present::{present, Presentation, Strategy};
pub use report::{build_report, PresentationReport, Report, ReportOptions, RingReport, VarEntry};
pub use solve::{rational_points, rational_roots};
